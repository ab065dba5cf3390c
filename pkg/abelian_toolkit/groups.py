from abelian_toolkit import numt, util

from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Iterable, List, Optional, Tuple

import itertools
import math
import logging
import operator
from colorama import Fore, Style

log = logging.getLogger('abelian-toolkit')

Element = Tuple[int, ...]


class Kind(Enum):
    ADDITIVE = 'add'
    MULTIPLICATIVE = 'mult'


@dataclass(frozen=True)
class ComponentSpec:
    kind: Kind
    modulus: int

    def __post_init__(self) -> None:
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise util.DomainError(f'Modulus must be an integer >= 2, not [{self.modulus}]')

    @property
    def additive(self) -> bool:
        return self.kind is Kind.ADDITIVE

    @property
    def identity(self) -> int:
        return 0 if self.additive else 1

    @property
    def order(self) -> int:
        return self.modulus if self.additive else numt.euler_phi(self.modulus)

    def order_bound(self) -> int:
        """Lower bound on the order that needs no factorisation, phi(n) >= sqrt(n/2)."""
        return self.modulus if self.additive else max(1, math.isqrt(self.modulus // 2))

    def elements(self) -> List[int]:
        if self.additive:
            return list(range(self.modulus))
        return [a for a in range(1, self.modulus) if numt.gcd(a, self.modulus) == 1]

    def problem(self, residue: int) -> Optional[str]:
        """Reason the residue is not in this component, or None when it is."""
        if not isinstance(residue, int) or not 0 <= residue < self.modulus:
            return 'range'
        if not self.additive and numt.gcd(residue, self.modulus) != 1:
            return 'coprimality'
        return None

    def combine(self, a: int, b: int) -> int:
        return (a + b) % self.modulus if self.additive else (a * b) % self.modulus

    def invert(self, a: int) -> int:
        if self.additive:
            return (self.modulus - a) % self.modulus
        # l^-1 = l^(phi(n) - 1)
        return numt.mod_pow(a, numt.euler_phi(self.modulus) - 1, self.modulus)

    def power(self, a: int, k: int) -> int:
        if self.additive:
            return (a * k) % self.modulus
        return numt.mod_pow(a, k, self.modulus)

    def order_of(self, a: int) -> int:
        if self.additive:
            return self.modulus // numt.gcd(self.modulus, a)
        for d in numt.divisors(numt.euler_phi(self.modulus)):
            if numt.mod_pow(a, d, self.modulus) == 1:
                return d
        raise util.InternalConsistencyError(f'{a} has no order dividing phi({self.modulus})')

    def label(self) -> str:
        return f'({self.modulus},{"+" if self.additive else "x"})'

    def expr(self) -> str:
        return f'{self.kind.value}:{self.modulus}'


@dataclass(frozen=True)
class GroupSpec:
    components: Tuple[ComponentSpec, ...]

    def __post_init__(self) -> None:
        if len(self.components) == 0:
            raise util.DomainError('A group needs at least one component')
        object.__setattr__(self, 'components', tuple(self.components))

    @property
    def arity(self) -> int:
        return len(self.components)

    @property
    def order(self) -> int:
        return reduce(operator.mul, (xc.order for xc in self.components), 1)

    def order_bound(self) -> int:
        return reduce(operator.mul, (xc.order_bound() for xc in self.components), 1)

    def label(self) -> str:
        return 'x'.join(xc.label() for xc in self.components)

    def expr(self) -> str:
        return 'x'.join(xc.expr() for xc in self.components)


def additive(*moduli: int) -> GroupSpec:
    return GroupSpec(tuple(ComponentSpec(Kind.ADDITIVE, n) for n in moduli))


def multiplicative(*moduli: int) -> GroupSpec:
    return GroupSpec(tuple(ComponentSpec(Kind.MULTIPLICATIVE, n) for n in moduli))


def direct_product(*specs: GroupSpec) -> GroupSpec:
    return GroupSpec(tuple(xc for xs in specs for xc in xs.components))


class Group(object):
    """A finite abelian group given by component specs, optionally restricted to a carrier.

    Elements are residue tuples, one residue per component, enumerated in row-major
    order with the last component varying fastest. Groups never change after
    construction.

    A carrier is checked for closure over all pairs, or only under multiplication
    by ``generators`` when it was built as their closure.
    """

    def __init__(self, spec: GroupSpec, carrier: Optional[Iterable[Element]] = None,
                    cap: int = util.DEFAULT_CAP, generators: Optional[Iterable[Element]] = None) -> None:
        self.spec: GroupSpec = spec
        self.cap: int = cap
        self.components: Tuple[ComponentSpec, ...] = spec.components
        self.identity: Element = tuple(xc.identity for xc in self.components)
        self.carrier: Optional[frozenset] = None
        if carrier is None:
            if spec.order_bound() > cap:
                raise util.CapExceeded(f'{spec.label()} has at least {spec.order_bound()} elements, '
                    f'more than the cap of {cap}')
            if spec.order > cap:
                raise util.CapExceeded(f'{spec.label()} has {spec.order} elements, '
                    f'more than the cap of {cap}')
            log.debug(f'Enumerating {Fore.GREEN}{spec.label()}{Style.RESET_ALL} '
                f'({Fore.MAGENTA}{spec.order}{Style.RESET_ALL} elements)')
            self.elements: List[Element] = \
                list(itertools.product(*(xc.elements() for xc in self.components)))
        else:
            self.carrier = frozenset(tuple(x) for x in carrier)
            self.elements = sorted(self.carrier)
            self.validate_carrier(None if generators is None else list(generators))
        self._index = {x: i for i, x in enumerate(self.elements)}

    def validate_carrier(self, generators: Optional[List[Element]] = None) -> None:
        if len(self.carrier) > self.cap:
            raise util.CapExceeded(f'Carrier of {len(self.carrier)} elements exceeds the cap of {self.cap}')
        for x in self.elements:
            reason, component = self.spec_problem(x)
            if reason is not None:
                raise util.InvalidCarrier(f'{format_element(x)} is not an element of {self.spec.label()} '
                    f'({reason} in component {component})')
        if self.identity not in self.carrier:
            raise util.InvalidCarrier(f'Carrier does not contain the identity {format_element(self.identity)}')
        for a in self.elements:
            for b in (self.elements if generators is None else generators):
                if self._op(a, b) not in self.carrier:
                    raise util.InvalidCarrier(f'Carrier is not closed: {format_element(a)} * '
                        f'{format_element(b)} = {format_element(self._op(a, b))}')

    @property
    def order(self) -> int:
        return len(self.elements)

    def label(self) -> str:
        if self.carrier is None:
            return self.spec.label()
        return f'<{self.order} elements of {self.spec.label()}>'

    def spec_problem(self, a: Element) -> Tuple[Optional[str], Optional[int]]:
        if not isinstance(a, tuple) or len(a) != self.spec.arity:
            return 'arity', None
        for i, (xc, xr) in enumerate(zip(self.components, a)):
            reason = xc.problem(xr)
            if reason is not None:
                return reason, i
        return None, None

    def problem(self, a: Element) -> Tuple[Optional[str], Optional[int]]:
        reason, component = self.spec_problem(a)
        if reason is None and self.carrier is not None and a not in self.carrier:
            return 'carrier', None
        return reason, component

    def contains(self, a: Element) -> bool:
        return self.problem(a)[0] is None

    def __contains__(self, a: Element) -> bool:
        return self.contains(a)

    def check_member(self, a: Element) -> Element:
        reason, component = self.problem(a)
        if reason is None:
            return a
        if reason == 'arity':
            message = f'{format_element(a)} does not have {self.spec.arity} residue(s) for {self.spec.label()}'
        elif reason == 'range':
            xc = self.components[component]
            message = f'{format_element(a)} is not in {self.spec.label()}: residue {a[component]} ' \
                f'in component {component} {xc.label()} is outside 0..{xc.modulus - 1}'
        elif reason == 'coprimality':
            xc = self.components[component]
            message = f'{format_element(a)} is not in {self.spec.label()}: residue {a[component]} ' \
                f'in component {component} {xc.label()} shares the factor ' \
                f'{numt.gcd(a[component], xc.modulus)} with {xc.modulus}'
        else:
            message = f'{format_element(a)} is not in the subgroup carrier of {self.spec.label()}'
        raise util.MembershipError(message, reason, component)

    def element_at(self, index: int) -> Element:
        if not 1 <= index <= self.order:
            raise util.MembershipError(f'Element #{index} does not exist, {self.label()} has '
                f'{self.order} elements', 'range')
        return self.elements[index - 1]

    def index_of(self, a: Element) -> int:
        return self._index[self.check_member(a)] + 1

    def _op(self, a: Element, b: Element) -> Element:
        return tuple(xc.combine(x, y) for xc, x, y in zip(self.components, a, b))

    def op(self, a: Element, b: Element) -> Element:
        return self._op(self.check_member(a), self.check_member(b))

    def _inv(self, a: Element) -> Element:
        return tuple(xc.invert(x) for xc, x in zip(self.components, a))

    def inv(self, a: Element) -> Element:
        return self._inv(self.check_member(a))

    def _pow(self, a: Element, k: int) -> Element:
        return tuple(xc.power(x, k) for xc, x in zip(self.components, a))

    def pow(self, a: Element, k: int) -> Element:
        if k < 0:
            raise util.DomainError(f'Exponent must be nonnegative, not {k}')
        return self._pow(self.check_member(a), k)

    def _element_order(self, a: Element) -> int:
        return reduce(numt.lcm, (xc.order_of(x) for xc, x in zip(self.components, a)), 1)

    def element_order(self, a: Element) -> int:
        return self._element_order(self.check_member(a))

    def element_orders(self) -> List[int]:
        return [self._element_order(x) for x in self.elements]


def make_group(spec: GroupSpec, cap: int = util.DEFAULT_CAP) -> Group:
    return Group(spec, cap=cap)


def format_element(a) -> str:
    if isinstance(a, tuple) and len(a) == 1:
        return str(a[0])
    if isinstance(a, (tuple, list)):
        return '[' + ','.join(str(x) for x in a) + ']'
    return str(a)


def element_data(a: Element):
    """JSON form of an element: a bare residue for one component, a list otherwise."""
    return a[0] if len(a) == 1 else list(a)
