"""Arithmetic substrate: primality, sieving, factorial factorization, partitions.

Group orders such as |A_625| are kept as prime -> exponent maps and never
multiplied out.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from . import kernels

# Strong-pseudoprime bases sufficient for every n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MAX_PRIMALITY = 1 << 64

PARTITION_BOUND = 64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 0 <= n < 2^64."""
    if n < 2:
        return False
    if n >= _MAX_PRIMALITY:
        raise ValueError(f"is_prime supports n < 2^64, got {n}")
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class SievedRange:
    """Primality table and prime-counting prefix for 0..limit.

    Read-only after construction. ``is_prime_table`` is a bytearray of 0/1
    flags, ``prime_count_prefix[x]`` the number of primes <= x and ``primes``
    the ascending primes <= limit.
    """

    __slots__ = ("limit", "is_prime_table", "prime_count_prefix", "primes")

    def __init__(self, limit: int, is_prime_table, prime_count_prefix, primes):
        self.limit = limit
        self.is_prime_table = is_prime_table
        self.prime_count_prefix = prime_count_prefix
        self.primes = primes

    def __repr__(self) -> str:
        return f"SievedRange(limit={self.limit})"

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.limit and bool(self.is_prime_table[n])

    def pi(self, x: int) -> int:
        """Number of primes <= x."""
        if x < 0:
            return 0
        if x > self.limit:
            raise ValueError(f"x={x} exceeds sieve limit {self.limit}")
        return self.prime_count_prefix[x]

    def primes_upto(self, x: int):
        """Ascending primes <= x, as a slice of the stored prime array."""
        return self.primes[: self.pi(x)]

    def require(self, n: int) -> None:
        if n > self.limit:
            raise SieveTooSmall(n, self.limit)


class SieveTooSmall(ValueError):
    def __init__(self, needed: int, limit: int):
        super().__init__(f"sieve limit {limit} is below the required {needed}")
        self.needed = needed
        self.limit = limit


def sieve(limit: int) -> SievedRange:
    """Sieve of Eratosthenes over 0..limit with prime-counting prefix."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    table, prefix = kernels.sieve_tables(limit)
    return SievedRange(limit, table, prefix, kernels.primes_from_table(table))


def legendre_exponent(q: int, n: int) -> int:
    """Exponent of the prime q in n!."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if n < 0:
        raise ValueError("n must be nonnegative")
    e = 0
    while n:
        n //= q
        e += n
    return e


class FactoredInteger(Mapping[int, int]):
    """A positive integer held as an immutable prime -> exponent map.

    The public constructor validates keys with :func:`is_prime`; internal code
    that already knows its keys are prime uses :meth:`_trusted`.
    """

    __slots__ = ("_factors", "_hash")

    def __init__(self, factors: Mapping[int, int] | None = None):
        clean = {}
        for q, e in (factors or {}).items():
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"bad exponent {e!r} for {q}")
            if not is_prime(q):
                raise ValueError(f"{q} is not prime")
            if e:
                clean[q] = e
        self._factors = clean
        self._hash = None

    @classmethod
    def _trusted(cls, factors: dict) -> "FactoredInteger":
        obj = cls.__new__(cls)
        obj._factors = factors
        obj._hash = None
        return obj

    @classmethod
    def from_int(cls, n: int) -> "FactoredInteger":
        """Trial-division factorization; meant for small literals only."""
        if n < 1:
            raise ValueError("only positive integers can be factored")
        out: dict[int, int] = {}
        q = 2
        while q * q <= n:
            while n % q == 0:
                out[q] = out.get(q, 0) + 1
                n //= q
            q += 1
        if n > 1:
            out[n] = out.get(n, 0) + 1
        return cls._trusted(out)

    def __getitem__(self, q: int) -> int:
        return self._factors[q]

    def __iter__(self) -> Iterator[int]:
        return iter(self._factors)

    def __len__(self) -> int:
        return len(self._factors)

    def __eq__(self, other) -> bool:
        if isinstance(other, FactoredInteger):
            return self._factors == other._factors
        if isinstance(other, Mapping):
            return self._factors == {q: e for q, e in other.items() if e}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._factors.items()))
        return self._hash

    def __mul__(self, other: "FactoredInteger") -> "FactoredInteger":
        return fi_multiply(self, other)

    def __repr__(self) -> str:
        return f"FactoredInteger({dict(sorted(self._factors.items()))})"

    def __str__(self) -> str:
        return format_factored(self)

    def exponent(self, q: int) -> int:
        return self._factors.get(q, 0)

    def primes(self) -> list[int]:
        return sorted(self._factors)

    def value(self) -> int:
        """Multiply out. Only sensible for small orders."""
        out = 1
        for q, e in self._factors.items():
            out *= q**e
        return out

    def divide_prime(self, q: int) -> "FactoredInteger":
        """Divide by the prime q, which must divide the number."""
        e = self._factors.get(q, 0)
        if e == 0:
            raise ValueError(f"{q} does not divide {self}")
        out = dict(self._factors)
        if e == 1:
            del out[q]
        else:
            out[q] = e - 1
        return FactoredInteger._trusted(out)


def fi_multiply(a: FactoredInteger, b: FactoredInteger) -> FactoredInteger:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a._factors)
    for q, e in b._factors.items():
        out[q] = out.get(q, 0) + e
    return FactoredInteger._trusted(out)


def format_factored(f: FactoredInteger) -> str:
    """Render as ``2^2 * 3 * 5``; the trivial number renders as ``1``."""
    if not f:
        return "1"
    return " * ".join(str(q) if e == 1 else f"{q}^{e}" for q, e in sorted(f.items()))


@lru_cache(maxsize=8)
def _factorial_factors(n: int, primes) -> FactoredInteger:
    k = bisect_right(primes, n)
    exps = kernels.factorial_exponents(primes[:k], n)
    return FactoredInteger._trusted(dict(zip(primes[:k].tolist(), exps)))


def factor_factorial(n: int, sieved: SievedRange | None = None) -> FactoredInteger:
    """Factored n!, one entry per prime <= n (empty for 0! and 1!).

    A fresh sieve is built when ``sieved`` is omitted or too small.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n < 2:
        return FactoredInteger._trusted({})
    if sieved is None or sieved.limit < n:
        sieved = sieve(n)
    return _factorial_factors(n, _PrimeKey(sieved))


class _PrimeKey:
    """Hashable-by-identity wrapper so the cache can key on a sieve's primes."""

    __slots__ = ("primes",)

    def __init__(self, sieved: SievedRange):
        self.primes = sieved.primes

    def __hash__(self):
        return id(self.primes)

    def __eq__(self, other):
        return isinstance(other, _PrimeKey) and other.primes is self.primes

    def __getitem__(self, item):
        return self.primes[item]

    def __len__(self):
        return len(self.primes)


@dataclass(frozen=True)
class Partition:
    """Integer partition with parts in nonincreasing order."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def _partitions_desc(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions_desc(m - first, first):
            yield (first,) + rest


def partitions(m: int, bound: int = PARTITION_BOUND) -> list[Partition]:
    """All partitions of m in lexicographically decreasing order."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > bound:
        raise ValueError(f"m={m} exceeds the partition bound {bound}")
    return [Partition(p) for p in _partitions_desc(m, m)]
