"""Integer primitives shared by the group modules.

Everything here is a pure function of its arguments. Moduli are expected to stay
at desk scale, so factorisation is plain trial division.
"""
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterator, List, Tuple

import math
import operator

from abelian_toolkit.util import DomainError


@dataclass(frozen=True)
class Factorization:
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.pairs]

    @property
    def value(self) -> int:
        return reduce(operator.mul, (p ** a for p, a in self.pairs), 1)

    def prime_powers(self) -> List[int]:
        return [p ** a for p, a in self.pairs]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise DomainError(f'gcd is defined here for nonnegative integers, not ({a}, {b})')
    if a == 0 and b == 0:
        raise DomainError('gcd(0, 0) is undefined')
    return math.gcd(a, b)


def lcm(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise DomainError(f'lcm needs positive integers, not ({a}, {b})')
    return a * b // gcd(a, b)


def mod_pow(base: int, exp: int, n: int) -> int:
    if n < 2:
        raise DomainError(f'Modulus must be at least 2, not {n}')
    if not 0 <= base < n:
        raise DomainError(f'Base {base} is not a residue mod {n}')
    if exp < 0:
        raise DomainError(f'Exponent must be nonnegative, not {exp}')
    return pow(base, exp, n)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    if n < 1:
        raise DomainError(f'Cannot factorize {n}')
    pairs = list()
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            pairs.append((p, a))
        p += 1 if p == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return f.pairs == ((n, 1),)


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError(f'euler_phi needs n >= 1, not {n}')
    # m / (p1 ... pr) * (p1 - 1) ... (pr - 1)
    f = factorize(n)
    radical = reduce(operator.mul, f.primes, 1)
    return n // radical * reduce(operator.mul, (p - 1 for p in f.primes), 1)


def valuation(p: int, m: int) -> int:
    """Exponent of the prime p in m (zero when p does not divide m)."""
    if m < 1:
        raise DomainError(f'valuation needs m >= 1, not {m}')
    b = 0
    while m % p == 0:
        m //= p
        b += 1
    return b


@lru_cache(maxsize=4096)
def divisors(n: int) -> Tuple[int, ...]:
    ds = [1]
    for p, a in factorize(n):
        ds = [d * p ** k for d in ds for k in range(a + 1)]
    return tuple(sorted(ds))


def integer_partitions(k: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of k, parts descending, in lexicographically descending order.

    >>> list(integer_partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if k < 0:
        raise DomainError(f'Cannot partition {k}')

    def parts(remaining: int, largest: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in parts(remaining - first, first):
                yield (first,) + rest

    return parts(k, k)
