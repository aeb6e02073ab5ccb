"""Brute-force ground truth for small n.

Element orders of S_n and A_n are read off cycle types (partitions of n), and
prime graphs are built from those spectra alone, without the arithmetic
adjacency criterion used in :mod:`gkod.primegraph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .numtheory import Partition, partitions
from .primegraph import PrimeGraph

ORACLE_LIMIT = 40


@dataclass(frozen=True)
class CycleType:
    partition: Partition
    sign: int

    @classmethod
    def of(cls, partition: Partition) -> "CycleType":
        n = partition.total
        return cls(partition, -1 if (n - len(partition)) % 2 else 1)

    @property
    def order(self) -> int:
        return lcm(*self.partition.parts) if self.partition.parts else 1


def _cycle_types(n: int) -> list[CycleType]:
    if n < 0 or n > ORACLE_LIMIT:
        raise ValueError(f"oracle supports 0 <= n <= {ORACLE_LIMIT}, got {n}")
    return [CycleType.of(p) for p in partitions(n)]


def element_orders_sym(n: int) -> set[int]:
    """Spectrum of S_n."""
    return {ct.order for ct in _cycle_types(n)}


def element_orders_alt(n: int) -> set[int]:
    """Spectrum of A_n: cycle types with an even number of even parts."""
    return {ct.order for ct in _cycle_types(n) if ct.sign == 1}


def _prime_divisors(m: int) -> set[int]:
    out = set()
    q = 2
    while q * q <= m:
        if m % q == 0:
            out.add(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.add(m)
    return out


def gk_from_spectrum(spectrum: set[int]) -> PrimeGraph:
    """Prime graph of a group from its set of element orders.

    By Cauchy's theorem the primes dividing |G| are exactly the primes
    dividing some element order.
    """
    vertices: set[int] = set()
    edges = set()
    for m in spectrum:
        ps = sorted(_prime_divisors(m))
        vertices.update(ps)
        for i, p in enumerate(ps):
            for q in ps[i + 1 :]:
                edges.add((p, q))
    return PrimeGraph(vertices, edges)


def gk_oracle(family: str, n: int) -> PrimeGraph:
    if family == "Alt":
        return gk_from_spectrum(element_orders_alt(n))
    if family == "Sym":
        return gk_from_spectrum(element_orders_sym(n))
    raise ValueError(f"unknown family {family!r}")
