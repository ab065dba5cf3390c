#!/usr/bin/env python3
from abelian_toolkit import commands, expr, scenario, util

from typing import List, Optional

import argparse
import logging
import sys
from colorama import init as init_colorama, Fore, Style
from .version import VERSION

log = logging.getLogger('abelian-toolkit')

EXIT_CODES = [
    (util.DomainError, 2),
    (util.ScenarioInvalid, 2),
    (util.CapExceeded, 3),
    (util.MembershipError, 4),
    (util.InvalidCarrier, 4),
]


class GroupExplorer(object):
    def add_global_args(self, parser: argparse.ArgumentParser, suppress: bool) -> None:
        def default(value):
            return argparse.SUPPRESS if suppress else value

        gl = parser.add_argument_group('Limits')
        gl.add_argument('--cap', type=self.parse_cap, default=default(util.DEFAULT_CAP), metavar='N',
            help='Refuse to enumerate groups with more than N elements')

        go = parser.add_argument_group('Output')
        go.add_argument('--json', action='store_true', default=default(False), help='Print JSON instead of text')
        go.add_argument('--no-color', action='store_true', default=default(False),
            help='Strip colors for basic terminals')

        gp = parser.add_argument_group('Operation parameters')
        gp.add_argument('-v', '--verbose', action='store_true', default=default(False), help='Be more verbose')

    def configure_args(self, argv: Optional[List[str]]) -> argparse.Namespace:
        opts = argparse.ArgumentParser(prog='abelian-toolkit',
            description='Builds finite abelian groups from modular arithmetic and classifies them')
        self.add_global_args(opts, suppress=False)
        opts.add_argument('--version', action='version', version='%(prog)s ' + VERSION, help='Print version number')

        common = argparse.ArgumentParser(add_help=False)
        self.add_global_args(common, suppress=True)

        sub = opts.add_subparsers(dest='command', metavar='command')
        sub.required = True

        c = sub.add_parser('show', parents=[common], help='Print the elements, identity and order of a group')
        c.add_argument('group', help='Group expression, e.g. add:5xmult:9')
        c.add_argument('--elements', action='store_true', help='List the elements')
        c.add_argument('--identity', action='store_true', help='Print the identity')
        c.add_argument('--order', action='store_true', help='Print the group order')
        c.add_argument('--orders', action='store_true', help='Print the order of every element')
        c.add_argument('--table', action='store_true', help='Number the elements in enumeration order')

        c = sub.add_parser('elem', parents=[common], help='Operate on elements of a group')
        c.add_argument('group', help='Group expression')
        c.add_argument('action', choices=sorted(commands.ELEM_ACTIONS), help='Operation to perform')
        c.add_argument('operands', nargs='+', metavar='operand', help='Elements ([a,b] or #index) and exponents')

        c = sub.add_parser('subgroup', parents=[common], help='Generate a subgroup from a set of elements')
        c.add_argument('group', help='Group expression')
        c.add_argument('generators', nargs='+', metavar='generator', help='Generators, comma separated')
        c.add_argument('--orders', action='store_true', help='Print the order of every subgroup element')
        c.add_argument('--cycles', action='store_true', help='Print the cycle created by every generator')
        c.add_argument('--check', action='store_true', help='Test the generators themselves for being a subgroup')

        c = sub.add_parser('classify', parents=[common], help='Find the invariant factors of a group')
        c.add_argument('group', help='Group expression')

        c = sub.add_parser('iso', parents=[common], help='Decide whether two groups are isomorphic')
        c.add_argument('first', help='Group expression')
        c.add_argument('second', help='Group expression')
        c.add_argument('--p-elements', action='store_true', help='Compare elements of prime-power order only')

        c = sub.add_parser('candidates', parents=[common], help='List every abelian group of a given order')
        c.add_argument('n', help='Group order')
        c.add_argument('--orders', action='store_true', help='Print the order multiset of every candidate')
        c.add_argument('--match', metavar='GROUP', help='Mark the candidate isomorphic to GROUP')

        c = sub.add_parser('torsion', parents=[common], help='Torsion coefficients of a product of cyclic groups')
        c.add_argument('cyclic_orders', nargs='+', metavar='m', help='Orders of the cyclic factors')

        c = sub.add_parser('run', parents=[common], help='Run scenario scripts and check their expectations')
        c.add_argument('scenarios', nargs='+', metavar='scenario', help='YAML file or bundled scenario name')

        return opts.parse_args(argv)

    def parse_cap(self, value: str) -> int:
        cap = int(value)
        if cap < 1:
            raise argparse.ArgumentTypeError(f'cap must be positive, not [{value}]')
        return cap

    def setup_logging(self) -> None:
        if self.o.no_color:
            init_colorama(strip=True)
        log.setLevel(logging.DEBUG if self.o.verbose else logging.INFO)
        for xh in list(log.handlers):
            log.removeHandler(xh)
        ch = logging.StreamHandler(sys.stderr)
        ch.setLevel(logging.DEBUG if self.o.verbose else logging.INFO)
        if not self.o.no_color:
            ch.setFormatter(util.ColorFormatter('%(levelname)s %(message)s'))
        else:
            ch.setFormatter(logging.Formatter('%(levelname)s %(message)s'))
        log.addHandler(ch)
        log.propagate = False

    def __init__(self, argv: Optional[List[str]] = None) -> None:
        self.o = self.configure_args(argv)
        self.setup_logging()
        log.debug(f'{Fore.CYAN} >> Abelian Toolkit >> '
            f'Finite abelian groups from modular arithmetic >> {Style.RESET_ALL}')
        log.debug(' '.join(sys.argv if argv is None else ['abelian-toolkit'] + list(argv)))

    def execute(self) -> commands.Report:
        o = self.o
        if o.command == 'show':
            return commands.show(expr.parse_group(o.group), o.cap, elements=o.elements, identity=o.identity,
                order=o.order, orders=o.orders, table=o.table)
        if o.command == 'elem':
            return commands.elem(expr.parse_group(o.group), o.action, o.operands, o.cap)
        if o.command == 'subgroup':
            return commands.subgroup(expr.parse_group(o.group), o.generators, o.cap, orders=o.orders,
                cycles=o.cycles, check=o.check)
        if o.command == 'classify':
            return commands.classify(expr.parse_group(o.group), o.cap)
        if o.command == 'iso':
            return commands.iso(expr.parse_group(o.first), expr.parse_group(o.second), o.cap,
                p_elements=o.p_elements)
        if o.command == 'candidates':
            match = expr.parse_group(o.match) if o.match is not None else None
            return commands.candidates(expr.parse_integer(o.n, 'a group order'), o.cap, orders=o.orders,
                match=match)
        if o.command == 'torsion':
            return commands.torsion([expr.parse_integer(xm, 'a cyclic order') for xm in o.cyclic_orders])
        if o.command == 'run':
            return scenario.run_scenarios(o.scenarios, o.cap)
        raise util.DomainError(f'Unknown command [{o.command}]')

    def run(self) -> int:
        try:
            r = self.execute()
        except Exception as e:
            for xe, code in EXIT_CODES:
                if isinstance(e, xe):
                    log.error(str(e))
                    return code
            log.exception(str(e), exc_info=self.o.verbose)
            log.error('Aborting')
            return 8
        sys.stdout.write(r.render(self.o.json))
        return r.exit_code
