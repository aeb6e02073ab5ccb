"""Gruenberg-Kegel prime graphs of A_n, S_n and direct products.

Two graph representations share one small protocol (``vertices``,
``has_edge``, ``degree_map``):

* :class:`PrimeGraph` holds an explicit edge set as one neighbour bitmask per
  vertex. Used for every graph up to ``MATERIALIZE_LIMIT``.
* :class:`CriterionGraph` answers adjacency from the arithmetic criterion and
  computes degrees from prefix prime counts. It never stores an edge, so it
  scales to GK(A_n) with n around 10^7.

:class:`ProductGraph` composes either kind under the direct-product rule.
"""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .numtheory import SievedRange

MATERIALIZE_LIMIT = 10**5


class GraphTooLarge(ValueError):
    """Raised when an explicit edge set is requested above MATERIALIZE_LIMIT."""


@dataclass(frozen=True)
class DegreePattern:
    primes: tuple[int, ...]
    degrees: tuple[int, ...]

    def __post_init__(self):
        if len(self.primes) != len(self.degrees):
            raise ValueError("primes and degrees must have equal length")

    def __len__(self):
        return len(self.primes)

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.primes, self.degrees))

    def degree(self, p: int) -> int:
        i = bisect_right(self.primes, p) - 1
        if i < 0 or self.primes[i] != p:
            raise KeyError(p)
        return self.degrees[i]

    def text(self) -> str:
        return " ".join(f"{p}:{d}" for p, d in zip(self.primes, self.degrees))

    def to_json(self) -> dict:
        return {"primes": list(self.primes), "degrees": list(self.degrees)}

    @classmethod
    def from_json(cls, data: dict) -> "DegreePattern":
        return cls(tuple(data["primes"]), tuple(data["degrees"]))


@dataclass(frozen=True)
class GraphSummary:
    vertex_count: int
    edge_count: int
    min_degree: int
    max_degree: int

    @classmethod
    def of(cls, pattern: DegreePattern) -> "GraphSummary":
        d = pattern.degrees
        return cls(len(d), sum(d) // 2, min(d, default=0), max(d, default=0))


class PrimeGraph:
    """Explicit prime graph: ascending vertex primes plus an undirected edge set."""

    __slots__ = ("vertices", "_index", "_rows")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        vs = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for p, q in edges:
            if p == q:
                raise ValueError(f"self-loop at {p}")
            try:
                i, j = index[p], index[q]
            except KeyError:
                raise ValueError(f"edge {p}-{q} has an endpoint outside the vertex set") from None
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self.vertices = vs
        self._index = index
        self._rows = tuple(rows)

    @classmethod
    def _from_rows(cls, vertices: tuple[int, ...], rows) -> "PrimeGraph":
        g = cls.__new__(cls)
        g.vertices = vertices
        g._index = {v: i for i, v in enumerate(vertices)}
        g._rows = tuple(rows)
        return g

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.iter_edges())

    def iter_edges(self):
        """Edges (p, q) with p < q in lexicographic order."""
        vs = self.vertices
        for i, row in enumerate(self._rows):
            row >>= i + 1
            j = i + 1
            while row:
                if row & 1:
                    yield vs[i], vs[j]
                row >>= 1
                j += 1

    def has_edge(self, p: int, q: int) -> bool:
        i = self._index.get(p)
        j = self._index.get(q)
        if i is None or j is None:
            return False
        return bool(self._rows[i] >> j & 1)

    def neighbors(self, p: int) -> list[int]:
        row = self._rows[self._index[p]]
        return [v for j, v in enumerate(self.vertices) if row >> j & 1]

    def degree_map(self) -> dict[int, int]:
        return {v: row.bit_count() for v, row in zip(self.vertices, self._rows)}

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    def __eq__(self, other) -> bool:
        if isinstance(other, PrimeGraph):
            return self.vertices == other.vertices and self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash((self.vertices, self._rows))

    def __repr__(self) -> str:
        return f"PrimeGraph(vertices={len(self.vertices)}, edges={self.edge_count()})"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.iter_edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "PrimeGraph":
        return cls(data["vertices"], [tuple(e) for e in data["edges"]])

    def to_dot(self, name: str = "GK") -> str:
        lines = [f"graph {json.dumps(name)} {{"]
        lines += [f'  "{v}";' for v in self.vertices]
        lines += [f'  "{p}" -- "{q}";' for p, q in self.iter_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def _alt_vertices(n: int, sieved: SievedRange) -> tuple[int, ...]:
    if n < 3:
        return ()
    if n == 3:
        return (3,)
    return tuple(sieved.primes_upto(n))


def _sym_vertices(n: int, sieved: SievedRange) -> tuple[int, ...]:
    if n < 2:
        return ()
    return tuple(sieved.primes_upto(n))


def _check(n: int, sieved: SievedRange) -> None:
    if n < 1:
        raise ValueError(f"degree n must be >= 1, got {n}")
    sieved.require(n)


def gk_alt(n: int, sieved: SievedRange) -> PrimeGraph:
    """GK(A_n): odd r, s adjacent iff r + s <= n; 2 ~ r iff r + 4 <= n."""
    _check(n, sieved)
    if n > MATERIALIZE_LIMIT:
        raise GraphTooLarge(f"GK(A_{n}) is above the materialization limit {MATERIALIZE_LIMIT}")
    vs = _alt_vertices(n, sieved)
    has_two = bool(vs) and vs[0] == 2
    odd_mask_clear = 1 if has_two else 0
    rows = []
    for i, r in enumerate(vs):
        if r == 2:
            k = bisect_right(vs, n - 4)
            rows.append(((1 << k) - 1) & ~1)
            continue
        # vertices with index < k are <= n - r
        k = bisect_right(vs, n - r)
        row = ((1 << k) - 1) & ~odd_mask_clear & ~(1 << i)
        if has_two and r + 4 <= n:
            row |= 1
        rows.append(row)
    return PrimeGraph._from_rows(vs, rows)


def gk_sym(n: int, sieved: SievedRange) -> PrimeGraph:
    """GK(S_n): distinct primes r, s adjacent iff r + s <= n."""
    _check(n, sieved)
    if n > MATERIALIZE_LIMIT:
        raise GraphTooLarge(f"GK(S_{n}) is above the materialization limit {MATERIALIZE_LIMIT}")
    vs = _sym_vertices(n, sieved)
    rows = []
    for i, r in enumerate(vs):
        k = bisect_right(vs, n - r)
        rows.append(((1 << k) - 1) & ~(1 << i))
    return PrimeGraph._from_rows(vs, rows)


def gk_product(g1: PrimeGraph, g2: PrimeGraph) -> PrimeGraph:
    """GK(G1 x G2): union of both edge sets plus every cross pair p in G1, q in G2."""
    vs = tuple(sorted(set(g1.vertices) | set(g2.vertices)))
    index = {v: i for i, v in enumerate(vs)}

    def lift(g: PrimeGraph) -> tuple[list[int], int]:
        if g.vertices == vs:
            return list(g._rows), (1 << len(vs)) - 1
        rows = [0] * len(vs)
        for p, q in g.iter_edges():
            i, j = index[p], index[q]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        mask = 0
        for v in g.vertices:
            mask |= 1 << index[v]
        return rows, mask

    rows1, mask1 = lift(g1)
    rows2, mask2 = lift(g2)
    rows = []
    for i in range(len(vs)):
        bit = 1 << i
        row = rows1[i] | rows2[i]
        if mask1 & bit:
            row |= mask2
        if mask2 & bit:
            row |= mask1
        rows.append(row & ~bit)
    return PrimeGraph._from_rows(vs, rows)


def degree_pattern(g) -> DegreePattern:
    """Degree pattern of any graph object (explicit, criterion or product)."""
    degs = g.degree_map()
    return DegreePattern(tuple(g.vertices), tuple(degs[v] for v in g.vertices))


def fast_degree_pattern_alt(n: int, sieved: SievedRange) -> DegreePattern:
    """Degree pattern of GK(A_n) from prefix prime counts, in O(pi(n))."""
    _check(n, sieved)
    if n < 3:
        return DegreePattern((), ())
    if n == 3:
        return DegreePattern((3,), (0,))
    primes = sieved.primes_upto(n)
    return DegreePattern(
        tuple(primes.tolist()),
        tuple(kernels.alt_degrees(primes, sieved.prime_count_prefix, n)),
    )


def fast_degree_pattern_sym(n: int, sieved: SievedRange) -> DegreePattern:
    """Degree pattern of GK(S_n) from prefix prime counts, in O(pi(n))."""
    _check(n, sieved)
    if n < 2:
        return DegreePattern((), ())
    primes = sieved.primes_upto(n)
    return DegreePattern(
        tuple(primes.tolist()),
        tuple(kernels.sym_degrees(primes, sieved.prime_count_prefix, n)),
    )


def graphs_equal(g1: PrimeGraph, g2: PrimeGraph) -> bool:
    """Labelled equality: identical vertex lists and identical edge sets."""
    # over a shared vertex list, equal neighbour rows are equal edge sets
    return g1.vertices == g2.vertices and g1._rows == g2._rows


class CriterionGraph:
    """GK(A_n) or GK(S_n) without a stored edge set."""

    __slots__ = ("family", "n", "sieved", "vertices", "_vset", "_pattern")

    def __init__(self, family: str, n: int, sieved: SievedRange):
        if family not in ("Alt", "Sym"):
            raise ValueError(f"unknown family {family!r}")
        _check(n, sieved)
        self.family = family
        self.n = n
        self.sieved = sieved
        if family == "Alt":
            self._pattern = fast_degree_pattern_alt(n, sieved)
        else:
            self._pattern = fast_degree_pattern_sym(n, sieved)
        self.vertices = self._pattern.primes
        self._vset = None

    @property
    def vertex_set(self) -> frozenset[int]:
        if self._vset is None:
            self._vset = frozenset(self.vertices)
        return self._vset

    def has_edge(self, p: int, q: int) -> bool:
        if p == q or p not in self.vertex_set or q not in self.vertex_set:
            return False
        if self.family == "Alt" and (p == 2 or q == 2):
            return p + q + 2 <= self.n
        return p + q <= self.n

    def degree_map(self) -> dict[int, int]:
        return self._pattern.as_dict()

    def degree_pattern(self) -> DegreePattern:
        return self._pattern

    def materialize(self) -> PrimeGraph:
        build = gk_alt if self.family == "Alt" else gk_sym
        return build(self.n, self.sieved)


class ProductGraph:
    """GK(G1 x G2) for graphs that may be too large to materialize.

    Degrees come from the factors' degrees plus adjacency queries against the
    shared vertices, so the cost is |V1 u V2| * |V1 n V2| has_edge calls: linear
    when one factor is a p-group.
    """

    __slots__ = ("left", "right", "vertices", "vertex_set")

    def __init__(self, left, right):
        self.left = left
        self.right = right
        self.vertex_set = frozenset(left.vertex_set | right.vertex_set)
        self.vertices = tuple(sorted(self.vertex_set))

    def has_edge(self, p: int, q: int) -> bool:
        if p == q or p not in self.vertex_set or q not in self.vertex_set:
            return False
        lv, rv = self.left.vertex_set, self.right.vertex_set
        if (p in lv and q in rv) or (q in lv and p in rv):
            return True
        return self.left.has_edge(p, q) or self.right.has_edge(p, q)

    def degree_map(self) -> dict[int, int]:
        g1, g2 = self.left, self.right
        v1, v2 = g1.vertex_set, g2.vertex_set
        d1, d2 = g1.degree_map(), g2.degree_map()
        n_union = len(self.vertex_set)
        # N1(v) & V2 lies inside V1 & V2, whichever side v comes from
        common = tuple(sorted(v1 & v2))
        out = {}
        for v in self.vertices:
            in1, in2 = v in v1, v in v2
            if in1 and in2:
                out[v] = n_union - 1
            elif in1:
                out[v] = d1[v] + len(v2) - sum(1 for u in common if g1.has_edge(v, u))
            else:
                out[v] = d2[v] + len(v1) - sum(1 for u in common if g2.has_edge(v, u))
        return out

    def materialize(self) -> PrimeGraph:
        return gk_product(materialize(self.left), materialize(self.right))


def materialize(g) -> PrimeGraph:
    if isinstance(g, PrimeGraph):
        return g
    return g.materialize()


def as_explicit_if_small(g):
    """Swap a criterion graph for its explicit form when that is cheap."""
    if isinstance(g, CriterionGraph) and g.n <= MATERIALIZE_LIMIT:
        return g.materialize()
    return g
