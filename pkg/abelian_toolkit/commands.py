from abelian_toolkit import expr, groups, numt, structure, subgroups, util

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import json
import logging
from colorama import Fore, Style

log = logging.getLogger('abelian-toolkit')

fmt = groups.format_element
data_of = groups.element_data

ELEM_ACTIONS = {
    'inv': 1,
    'op': 2,
    'pow': 2,
    'order': 1,
    'cycle': 1,
}


@dataclass
class Report:
    data: Dict[str, Any]
    lines: List[str] = field(default_factory=list)
    exit_code: int = 0

    def render(self, as_json: bool = False) -> str:
        if as_json:
            return json.dumps(self.data, indent=2) + '\n'
        return '\n'.join(self.lines) + '\n'


def _joined(values) -> str:
    return ' '.join(str(x) for x in values)


def _factors_text(factors: structure.InvariantFactors) -> str:
    return _joined(factors.factors) if factors.factors else '(trivial)'


def show(spec: groups.GroupSpec, cap: int = util.DEFAULT_CAP, elements: bool = False, identity: bool = False,
        order: bool = False, orders: bool = False, table: bool = False) -> Report:
    if not any((elements, identity, order, orders, table)):
        elements = identity = order = True
    g = groups.make_group(spec, cap)
    r = Report({'group': spec.expr()}, [f'Group: {spec.label()}'])
    if elements:
        r.data['elements'] = [data_of(x) for x in g.elements]
        r.lines.append(f'Elements: {_joined(fmt(x) for x in g.elements)}')
    if table:
        r.data['table'] = [{'index': i, 'element': data_of(x)} for i, x in enumerate(g.elements, 1)]
        r.lines.extend(f'Element {i} is {fmt(x)}' for i, x in enumerate(g.elements, 1))
    if identity:
        r.data['identity'] = data_of(g.identity)
        r.lines.append(f'Identity: {fmt(g.identity)}')
    if order:
        r.data['order'] = g.order
        r.lines.append(f'Order: {g.order}')
    if orders:
        element_orders = g.element_orders()
        r.data['orders'] = [{'element': data_of(x), 'order': k} for x, k in zip(g.elements, element_orders)]
        r.lines.extend(f'Element {fmt(x)} has order {k}' for x, k in zip(g.elements, element_orders))
    return r


def elem(spec: groups.GroupSpec, action: str, operands: List[str], cap: int = util.DEFAULT_CAP) -> Report:
    if action not in ELEM_ACTIONS:
        raise util.ExpressionError(action, 0, f'one of {", ".join(ELEM_ACTIONS)}')
    if len(operands) != ELEM_ACTIONS[action]:
        raise util.ExpressionError(' '.join(str(x) for x in operands), 0,
            f'{ELEM_ACTIONS[action]} operand(s) for {action}')
    g = groups.make_group(spec, cap)
    a = expr.parse_element(operands[0], g)
    r = Report({'group': spec.expr(), 'action': action})
    if action == 'inv':
        result = g.inv(a)
        r.data['operands'] = [data_of(a)]
    elif action == 'op':
        b = expr.parse_element(operands[1], g)
        result = g.op(a, b)
        r.data['operands'] = [data_of(a), data_of(b)]
    elif action == 'pow':
        k = expr.parse_integer(operands[1], 'a nonnegative exponent')
        result = g.pow(a, k)
        r.data['operands'] = [data_of(a), k]
    elif action == 'order':
        result = g.element_order(a)
        r.data['operands'] = [data_of(a)]
        r.data['result'] = result
        r.lines.append(str(result))
        return r
    else:
        c = subgroups.cycle(g, a)
        r.data['operands'] = [data_of(a)]
        r.data['result'] = [data_of(x) for x in c]
        r.lines.append(_joined(fmt(x) for x in c))
        return r
    r.data['result'] = data_of(result)
    r.lines.append(fmt(result))
    return r


def subgroup(spec: groups.GroupSpec, generators: List[str], cap: int = util.DEFAULT_CAP, orders: bool = False,
        cycles: bool = False, check: bool = False) -> Report:
    g = groups.make_group(spec, cap)
    gens = expr.parse_element_list(generators, g)
    log.debug(f'Generating a subgroup of {Fore.GREEN}{spec.label()}{Style.RESET_ALL} '
        f'from {_joined(fmt(x) for x in gens)}')
    s = subgroups.generate(g, gens)
    r = Report({'group': spec.expr(), 'generators': [data_of(x) for x in gens]}, [f'Group: {spec.label()}'])
    if cycles:
        r.data['cycles'] = list()
        for xg in gens:
            c = subgroups.cycle(g, xg)
            r.data['cycles'].append({'generator': data_of(xg), 'cycle': [data_of(x) for x in c]})
            r.lines.append(f'{fmt(xg)} creates {_joined(fmt(x) for x in c)}')
    r.data['carrier'] = [data_of(x) for x in s.elements]
    r.data['order'] = s.order
    r.data['generating_set'] = s.order == g.order
    r.lines.append(f'Carrier: {_joined(fmt(x) for x in s.elements)}')
    r.lines.append(f'Order: {s.order}')
    r.lines.append(f'Generates the group: {"yes" if r.data["generating_set"] else "no"}')
    if check:
        violation = subgroups.criterion_violation(g, gens)
        r.data['is_subgroup'] = violation is None
        if violation is None:
            r.lines.append('Subgroup criterion: holds')
            r.data['violation'] = None
        else:
            xa, xb = violation
            r.data['violation'] = [data_of(xa), data_of(xb)]
            r.lines.append(f'Subgroup criterion: fails, {fmt(xa)} * {fmt(xb)}^-1 = '
                f'{fmt(g.op(xa, g.inv(xb)))} is outside the set')
    if orders:
        element_orders = s.element_orders()
        r.data['orders'] = [{'element': data_of(x), 'order': k} for x, k in zip(s.elements, element_orders)]
        r.lines.extend(f'Element {fmt(x)} has order {k}' for x, k in zip(s.elements, element_orders))
    return r


def classify(spec: groups.GroupSpec, cap: int = util.DEFAULT_CAP) -> Report:
    g = groups.make_group(spec, cap)
    m = structure.order_multiset(g)
    pd = structure.primary_decomposition(g, m)
    f = structure.invariant_factors_of(g, m)
    return Report({
        'group': spec.expr(),
        'order': g.order,
        'order_multiset': list(m.orders),
        'primary': pd.data(),
        'invariant_factors': list(f.factors),
    }, [
        f'Group: {spec.label()}',
        f'Order: {g.order}',
        f'Order multiset: {_joined(m.orders)}',
        f'Primary decomposition: {pd.label()}',
        f'Invariant factors: {_factors_text(f)}',
        f'Isomorphic to: {f.label()}',
    ])


def iso(first: groups.GroupSpec, second: groups.GroupSpec, cap: int = util.DEFAULT_CAP,
        p_elements: bool = False) -> Report:
    g, h = groups.make_group(first, cap), groups.make_group(second, cap)
    verdict = structure.is_isomorphic(g, h, p_elements_only=p_elements)
    r = Report({'isomorphic': verdict.isomorphic, 'method': verdict.method, 'groups': list()},
        exit_code=0 if verdict.isomorphic else 1)
    for xs, xm, xf in zip((first, second), verdict.multisets, verdict.invariant_factors):
        r.data['groups'].append({
            'group': xs.expr(),
            'order': len(xm),
            'order_multiset': list(xm.orders),
            'invariant_factors': list(xf.factors),
        })
        r.lines.append(f'{xs.label()} order multiset: {_joined(xm.orders)}')
    for xs, xf in zip((first, second), verdict.invariant_factors):
        r.lines.append(f'{xs.label()} invariant factors: {_factors_text(xf)}')
    r.lines.append(f'{first.label()} is {"" if verdict.isomorphic else "not "}isomorphic to {second.label()}')
    return r


def candidates(n: int, cap: int = util.DEFAULT_CAP, orders: bool = False,
        match: Optional[groups.GroupSpec] = None) -> Report:
    classes = structure.abelian_groups_of_order(n)
    r = Report({'order': n, 'count': len(classes), 'candidates': list()})
    target = None
    if match is not None:
        g = groups.make_group(match, cap)
        if g.order != n:
            raise util.DomainError(f'{match.label()} has order {g.order}, not {n}')
        target = structure.order_multiset(g)
        r.lines.append(f'{match.label()} order multiset: {_joined(target.orders)}')
    for xf in classes:
        entry = {'invariant_factors': list(xf.factors)}
        line = f'{_factors_text(xf)}'
        if orders or target is not None:
            m = structure.OrderMultiset.from_counts(structure.order_counts_from_factors(xf.factors))
            entry['order_multiset'] = list(m.orders)
            line = f'{line}: {_joined(m.orders)}'
            if target is not None and m == target:
                r.data['match'] = list(xf.factors)
                line = f'{line} <= match'
        r.data['candidates'].append(entry)
        r.lines.append(line)
    r.lines.append(f'Classes: {len(classes)}')
    if target is not None:
        if 'match' not in r.data:
            raise util.InternalConsistencyError(f'No class of order {n} matches {match.label()}')
        r.lines.append(f'{match.label()} is isomorphic to {structure.InvariantFactors(r.data["match"]).label()}')
    return r


def torsion(cyclic_orders: List[int]) -> Report:
    f = structure.torsion_coefficients(cyclic_orders)
    prime_powers = [q for xm in cyclic_orders for q in numt.factorize(xm).prime_powers()]
    return Report({
        'cyclic_orders': list(cyclic_orders),
        'prime_powers': prime_powers,
        'invariant_factors': list(f.factors),
    }, [
        f'Prime powers: {_joined(prime_powers)}',
        f'Invariant factors: {_factors_text(f)}',
        f'{" x ".join(f"Z{xm}" for xm in cyclic_orders)} is isomorphic to {f.label()}',
    ])
