from abelian_toolkit import commands, expr, groups, util

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import json
import logging
import yaml
from colorama import Fore, Style

log = logging.getLogger('abelian-toolkit')

BUNDLED_DIR = Path(__file__).parent / 'examples'

STEP_OPTIONS = {
    'show': ('elements', 'identity', 'order', 'orders', 'table'),
    'elem': (),
    'subgroup': ('orders', 'cycles', 'check'),
    'classify': (),
    'iso': ('p_elements',),
    'candidates': ('orders',),
    'torsion': (),
}


class ScenarioLoader(yaml.SafeLoader):
    pass


def construct_group(loader, node) -> groups.GroupSpec:
    return expr.parse_group(loader.construct_scalar(node))


def construct_element(loader, node) -> str:
    """Element operands stay text until the step's group is known."""
    return str(loader.construct_scalar(node))


ScenarioLoader.add_constructor('!Group', construct_group)
ScenarioLoader.add_constructor('!Element', construct_element)


def operand_text(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return '[' + ','.join(str(x) for x in value) + ']'
    return str(value)


def normalise(value: Any) -> Any:
    return json.loads(json.dumps(value))


def find_scenario(name: str) -> Path:
    p = Path(name)
    if p.is_file():
        return p
    bundled = BUNDLED_DIR / f'{name}.yaml'
    if bundled.is_file():
        return bundled
    raise util.ScenarioInvalid(f'Scenario [{name}] is neither a file nor a bundled scenario')


def bundled_scenarios() -> List[str]:
    return sorted(xp.stem for xp in BUNDLED_DIR.glob('*.yaml'))


ERROR_KINDS = [
    ('expression', util.ExpressionError),
    ('domain', util.DomainError),
    ('cap', util.CapExceeded),
    ('membership', util.MembershipError),
    ('carrier', util.InvalidCarrier),
]

MEMBERSHIP_REASONS = ('arity', 'range', 'coprimality', 'carrier')


def error_kind(e: Exception) -> str:
    for kind, xe in ERROR_KINDS:
        if isinstance(e, xe):
            return kind
    raise e


class ScenarioStep(object):
    def __init__(self, definition: Dict[str, Any], cap: int) -> None:
        if not isinstance(definition, dict) or 'command' not in definition:
            raise util.ScenarioInvalid(f'Every step needs a command, got [{definition}]')
        self.definition = definition
        self.command: str = definition['command']
        self.name: str = definition.get('name', self.command)
        self.expect: Dict[str, Any] = definition.get('expect', dict())
        self.cap = cap
        if self.command not in STEP_OPTIONS:
            raise util.ScenarioInvalid(f'Step [{self.name}] has unknown command [{self.command}]')
        self.expect_error: Optional[str] = definition.get('expect_error')
        self.reason: Optional[str] = definition.get('reason')
        if self.expect_error is not None and self.expect_error not in dict(ERROR_KINDS):
            raise util.ScenarioInvalid(f'Step [{self.name}] expects an unknown error [{self.expect_error}], '
                f'use one of {", ".join(k for k, _ in ERROR_KINDS)}')
        if self.reason is not None and (self.expect_error != 'membership' or self.reason not in MEMBERSHIP_REASONS):
            raise util.ScenarioInvalid(f'Step [{self.name}]: reason [{self.reason}] needs expect_error: '
                f'membership and one of {", ".join(MEMBERSHIP_REASONS)}')

    def group(self, key: str = 'group') -> groups.GroupSpec:
        spec = self.definition.get(key)
        if isinstance(spec, str):
            spec = expr.parse_group(spec)
        if not isinstance(spec, groups.GroupSpec):
            raise util.ScenarioInvalid(f'Step [{self.name}] needs a group expression in [{key}]')
        return spec

    def required(self, key: str) -> Any:
        if key not in self.definition:
            raise util.ScenarioInvalid(f'Step [{self.name}] needs [{key}]')
        return self.definition[key]

    def execute(self) -> commands.Report:
        d = self.definition
        options = {k: bool(d[k]) for k in STEP_OPTIONS[self.command] if k in d}
        if self.command == 'show':
            return commands.show(self.group(), self.cap, **options)
        if self.command == 'elem':
            return commands.elem(self.group(), self.required('action'),
                [operand_text(x) for x in self.required('operands')], self.cap)
        if self.command == 'subgroup':
            return commands.subgroup(self.group(), [operand_text(x) for x in self.required('generators')],
                self.cap, **options)
        if self.command == 'classify':
            return commands.classify(self.group(), self.cap)
        if self.command == 'iso':
            first, second = self.required('groups')
            return commands.iso(expr.parse_group(first) if isinstance(first, str) else first,
                expr.parse_group(second) if isinstance(second, str) else second, self.cap, **options)
        if self.command == 'candidates':
            match = self.group('match') if 'match' in d else None
            return commands.candidates(int(self.required('n')), self.cap, match=match, **options)
        return commands.torsion([int(x) for x in self.required('cyclic_orders')])

    def check(self, report: commands.Report) -> List[str]:
        failures = list()
        if self.expect_error is not None:
            return [f'expected a {self.expect_error} error, the step succeeded']
        actual = normalise(report.data)
        for key, expected in self.expect.items():
            if key not in actual:
                failures.append(f'{key}: missing from the report')
            elif actual[key] != normalise(expected):
                failures.append(f'{key}: expected {normalise(expected)}, got {actual[key]}')
        return failures

    def check_error(self, e: Exception) -> Tuple[Dict[str, Any], List[str]]:
        """Report data for a step that raised, and its failures."""
        kind = error_kind(e)
        data = {'error': kind, 'message': str(e)}
        if isinstance(e, util.MembershipError):
            data['reason'] = e.reason
        if self.expect_error is None:
            return data, [f'raised {kind} error: {e}']
        if kind != self.expect_error:
            return data, [f'expected a {self.expect_error} error, got {kind}: {e}']
        if self.reason is not None and data.get('reason') != self.reason:
            return data, [f'expected reason {self.reason}, got {data.get("reason")}']
        return data, list()


class Scenario(object):
    def __init__(self, path: Path, cap: int = util.DEFAULT_CAP) -> None:
        self.path = path
        with open(path, 'r') as f:
            try:
                body = yaml.load(f, Loader=ScenarioLoader)
            except yaml.YAMLError as e:
                raise util.ScenarioInvalid(f'Cannot read scenario {path}: {e}') from None
        if not isinstance(body, dict) or not isinstance(body.get('steps'), list):
            raise util.ScenarioInvalid(f'Scenario {path} must be a mapping with a list of steps')
        self.title: str = body.get('title', path.stem)
        self.steps: List[ScenarioStep] = [ScenarioStep(xs, cap) for xs in body['steps']]

    def run(self) -> List[Dict[str, Any]]:
        util.log_section(self.title, bold=True)
        results = list()
        for xs in self.steps:
            log.info(f'Running {Fore.GREEN}{xs.name}{Style.RESET_ALL}...')
            try:
                report = xs.execute()
            except (util.DomainError, util.CapExceeded, util.MembershipError, util.InvalidCarrier) as e:
                data, failures = xs.check_error(e)
            else:
                data, failures = report.data, xs.check(report)
            for xf in failures:
                log.warning(f'{xs.name}: {xf}')
            results.append({
                'scenario': self.title,
                'step': xs.name,
                'passed': len(failures) == 0,
                'failures': failures,
                'data': data,
            })
        return results


def run_scenarios(names: List[str], cap: int = util.DEFAULT_CAP) -> commands.Report:
    results = list()
    for xn in names:
        results.extend(Scenario(find_scenario(xn), cap).run())
    passed = sum(1 for xr in results if xr['passed'])
    r = commands.Report({'steps': results, 'passed': passed == len(results)},
        exit_code=0 if passed == len(results) else 1)
    for xr in results:
        r.lines.append(f'{"PASS" if xr["passed"] else "FAIL"} {xr["scenario"]}: {xr["step"]}')
        r.lines.extend(f'     {xf}' for xf in xr['failures'])
    r.lines.append(f'{passed}/{len(results)} steps passed')
    log.info(f'{Fore.MAGENTA}{passed}/{len(results)}{Style.RESET_ALL} steps passed')
    return r
