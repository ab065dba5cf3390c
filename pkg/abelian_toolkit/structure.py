"""Classification of finite abelian groups.

Counts of elements of prime-power order, primary decomposition recovered from element
orders, invariant factors (torsion coefficients), enumeration of isomorphism classes
and isomorphism decisions.

Invariant factors are kept largest first, m1 >= m2 >= ... with each dividing the one
before it. Reverse the list for the ascending convention.
"""
from abelian_toolkit import groups, numt, util

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, Iterable, List, Optional, Tuple

import itertools
import logging
import operator
from colorama import Fore, Style

log = logging.getLogger('abelian-toolkit')


@dataclass(frozen=True)
class OrderMultiset:
    orders: Tuple[int, ...]

    @classmethod
    def from_counts(cls, counts: Dict[int, int]) -> 'OrderMultiset':
        return cls(tuple(d for d in sorted(counts) for _ in range(counts[d])))

    def counts(self) -> Counter:
        return Counter(self.orders)

    def __len__(self) -> int:
        return len(self.orders)

    def __iter__(self):
        return iter(self.orders)


@dataclass(frozen=True)
class InvariantFactors:
    factors: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'factors', tuple(self.factors))
        for xm in self.factors:
            if xm < 2:
                raise util.DomainError(f'Invariant factors must be >= 2, got {list(self.factors)}')
        for xm, xn in zip(self.factors, self.factors[1:]):
            if xm % xn != 0:
                raise util.DomainError(f'{xn} does not divide {xm} in {list(self.factors)}')

    @property
    def order(self) -> int:
        return reduce(operator.mul, self.factors, 1)

    def ascending(self) -> Tuple[int, ...]:
        return tuple(reversed(self.factors))

    def label(self) -> str:
        if len(self.factors) == 0:
            return 'trivial'
        return ' x '.join(f'Z{xm}' for xm in self.factors)

    def spec(self) -> groups.GroupSpec:
        """Product of additive groups presenting this class."""
        return groups.additive(*self.factors) if self.factors else groups.multiplicative(2)


@dataclass
class PrimaryDecomposition:
    exponents: Dict[int, Tuple[int, ...]] = field(default_factory=dict)

    def prime_powers(self) -> List[int]:
        return [p ** xa for p in sorted(self.exponents) for xa in self.exponents[p]]

    @property
    def order(self) -> int:
        return reduce(operator.mul, self.prime_powers(), 1)

    def label(self) -> str:
        if len(self.exponents) == 0:
            return 'trivial'
        return ' x '.join(f'Z{q}' for q in self.prime_powers())

    def data(self) -> Dict[str, List[int]]:
        return {str(p): list(self.exponents[p]) for p in sorted(self.exponents)}


@dataclass
class IsomorphismReport:
    isomorphic: bool
    method: str
    multisets: Tuple[OrderMultiset, OrderMultiset]
    invariant_factors: Tuple[InvariantFactors, InvariantFactors]

    def __bool__(self) -> bool:
        return self.isomorphic


def _check_prime(p: int) -> None:
    if not numt.is_prime(p):
        raise util.DomainError(f'{p} is not a prime')


def _lambda_exponent(p: int, a: int, m: int, shift: int) -> int:
    _check_prime(p)
    if a < 1:
        raise util.DomainError(f'Exponent a must be >= 1, not {a}')
    if m < 1:
        raise util.DomainError(f'm must be >= 1, not {m}')
    return p ** min(a - shift, numt.valuation(p, m))


def eta(p: int, a: int, m: int) -> int:
    return _lambda_exponent(p, a, m, 0)


def eta_minus(p: int, a: int, m: int) -> int:
    return _lambda_exponent(p, a, m, 1)


def count_order_pa(factors: Iterable[int], p: int, a: int) -> int:
    """Number of elements of order p^a in the product of cyclic groups of the given orders."""
    factors = list(factors)
    _check_prime(p)
    if a < 1:
        raise util.DomainError(f'Exponent a must be >= 1, not {a}')
    upto = reduce(operator.mul, (eta(p, a, xm) for xm in factors), 1)
    below = reduce(operator.mul, (eta_minus(p, a, xm) for xm in factors), 1)
    return upto - below


def order_counts_from_factors(factors: Iterable[int]) -> Dict[int, int]:
    """Elements of each order d | n, computed from the cyclic orders alone."""
    factors = list(factors)
    n = reduce(operator.mul, factors, 1)
    primes = numt.factorize(n).primes
    counts = dict()
    for d in numt.divisors(n):
        c = 1
        for p in primes:
            b = numt.valuation(p, d)
            if b > 0:
                c *= count_order_pa(factors, p, b)
        if c > 0:
            counts[d] = c
    return counts


def order_multiset(group: groups.Group) -> OrderMultiset:
    return OrderMultiset(tuple(sorted(group.element_orders())))


def _exact_log(p: int, value: int) -> int:
    k = 0
    while value > 1 and value % p == 0:
        value //= p
        k += 1
    if value != 1:
        raise util.InternalConsistencyError(f'Element count is not a power of {p}')
    return k


def primary_decomposition(group: groups.Group, orders: Optional[OrderMultiset] = None) -> PrimaryDecomposition:
    """Recover the cyclic prime-power factors from element orders.

    D(a), the number of elements whose order divides p^a, is a power of p; the step
    log D(a) - log D(a-1) is the number of cyclic p-factors of order at least p^a.
    """
    counts = (orders or order_multiset(group)).counts()
    pd = PrimaryDecomposition()
    for p, v in numt.factorize(group.order):
        ranks = list()
        known = 0
        a = 0
        while known < v:
            a += 1
            if a > v:
                raise util.InternalConsistencyError(f'Cannot recover the {p}-part of {group.label()}')
            dividing = sum(c for d, c in counts.items() if (p ** a) % d == 0)
            k = _exact_log(p, dividing)
            ranks.append(k - known)
            known = k
        pd.exponents[p] = tuple(sum(1 for r in ranks if r > i) for i in range(ranks[0]))
        log.debug(f'{p}-part of {Fore.GREEN}{group.label()}{Style.RESET_ALL}: '
            f'{Fore.MAGENTA}{list(pd.exponents[p])}{Style.RESET_ALL}')

    prime_powers = pd.prime_powers()
    for p, v in numt.factorize(group.order):
        for a in range(1, v + 1):
            if count_order_pa(prime_powers, p, a) != counts.get(p ** a, 0):
                raise util.InternalConsistencyError(f'Decomposition {pd.label()} of {group.label()} predicts '
                    f'{count_order_pa(prime_powers, p, a)} elements of order {p ** a}, '
                    f'found {counts.get(p ** a, 0)}')
    return pd


def torsion_coefficients(cyclic_orders: Iterable[int]) -> InvariantFactors:
    cyclic_orders = list(cyclic_orders)
    if len(cyclic_orders) == 0:
        raise util.DomainError('Need at least one cyclic order')
    by_prime = defaultdict(list)
    for xm in cyclic_orders:
        if not isinstance(xm, int) or xm < 2:
            raise util.DomainError(f'Cyclic orders must be integers >= 2, not [{xm}]')
        for p, a in numt.factorize(xm):
            by_prime[p].append(p ** a)
    for xs in by_prime.values():
        xs.sort(reverse=True)
    rounds = max(len(xs) for xs in by_prime.values())
    return InvariantFactors(tuple(
        reduce(operator.mul, (xs[r] for xs in by_prime.values() if r < len(xs)), 1)
        for r in range(rounds)))


def invariant_factors_of(group: groups.Group, orders: Optional[OrderMultiset] = None) -> InvariantFactors:
    prime_powers = primary_decomposition(group, orders).prime_powers()
    if len(prime_powers) == 0:
        return InvariantFactors(())
    return torsion_coefficients(prime_powers)


def abelian_groups_of_order(n: int) -> List[InvariantFactors]:
    if not isinstance(n, int) or n < 1:
        raise util.DomainError(f'Group order must be a positive integer, not [{n}]')
    f = numt.factorize(n)
    choices = [[[p ** xe for xe in xpart] for xpart in numt.integer_partitions(a)] for p, a in f]
    classes = set()
    for combo in itertools.product(*choices):
        prime_powers = [q for xs in combo for q in xs]
        classes.add(torsion_coefficients(prime_powers) if prime_powers else InvariantFactors(()))
    return sorted(classes, key=lambda x: x.factors, reverse=True)


def p_element_counts(counts: Counter, n: int) -> Dict[int, int]:
    """Counts of elements of order p^a for every prime power p^a dividing n."""
    return {p ** a: counts.get(p ** a, 0) for p, v in numt.factorize(n) for a in range(1, v + 1)}


def is_isomorphic(g: groups.Group, h: groups.Group, p_elements_only: bool = False) -> IsomorphismReport:
    method = 'p-elements' if p_elements_only else 'orders'
    gm, hm = order_multiset(g), order_multiset(h)
    gf, hf = invariant_factors_of(g, gm), invariant_factors_of(h, hm)
    if g.order != h.order:
        log.debug(f'Orders differ ({g.order} vs {h.order}), groups are not isomorphic')
        return IsomorphismReport(False, method, (gm, hm), (gf, hf))
    if p_elements_only:
        same = p_element_counts(gm.counts(), g.order) == p_element_counts(hm.counts(), h.order)
    else:
        same = gm == hm
    if same != (gf == hf):
        raise util.InternalConsistencyError(f'{method} comparison says {same} but invariant factors are '
            f'{gf.label()} and {hf.label()}')
    return IsomorphismReport(same, method, (gm, hm), (gf, hf))
