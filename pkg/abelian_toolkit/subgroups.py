from abelian_toolkit import groups, util

from typing import Iterable, List, Optional, Set, Tuple

import logging
from colorama import Fore, Style

log = logging.getLogger('abelian-toolkit')


def cycle(group: groups.Group, g: groups.Element) -> List[groups.Element]:
    """[g, g^2, ..., identity]; as a set this is the cyclic subgroup <g>."""
    g = group.check_member(g)
    powers = [g]
    while powers[-1] != group.identity:
        powers.append(group._op(powers[-1], g))
    return powers


def _members(group: groups.Group, subset: Iterable[groups.Element]) -> List[groups.Element]:
    s = list(dict.fromkeys(group.check_member(x) for x in subset))
    if len(s) == 0:
        raise util.DomainError('The subset must not be empty')
    return s


def generate(group: groups.Group, subset: Iterable[groups.Element]) -> groups.Group:
    """Smallest subgroup containing the subset.

    Products g1^b1 g2^b2 ... gs^bs, built one generator at a time: with H the
    subgroup so far, <H, g> is the union of the cosets H g^k for k below the first
    power of g that falls into H.
    """
    generators = _members(group, subset)
    carrier: Set[groups.Element] = {group.identity}
    for xg in generators:
        base = frozenset(carrier)
        step = xg
        cosets = 0
        while step not in base:
            carrier.update(group._op(xa, step) for xa in base)
            step = group._op(step, xg)
            cosets += 1
        log.debug(f'{Fore.GREEN}{groups.format_element(xg)}{Style.RESET_ALL} adds {cosets} coset(s), '
            f'running subgroup has {Fore.MAGENTA}{len(carrier)}{Style.RESET_ALL} elements')
    return groups.Group(group.spec, carrier, cap=group.cap, generators=generators)


def criterion_violation(group: groups.Group,
                        subset: Iterable[groups.Element]) -> Optional[Tuple[groups.Element, groups.Element]]:
    """First ordered pair (a, b) of the subset with a * b^-1 outside it, if any."""
    s = _members(group, subset)
    present = set(s)
    inverses = [group._inv(xb) for xb in s]
    for xa in s:
        for xb, xi in zip(s, inverses):
            if group._op(xa, xi) not in present:
                return xa, xb
    return None


def is_subgroup(group: groups.Group, subset: Iterable[groups.Element]) -> bool:
    return criterion_violation(group, subset) is None


def is_generating_set(group: groups.Group, subset: Iterable[groups.Element]) -> bool:
    return generate(group, subset).order == group.order
