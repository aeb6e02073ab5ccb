"""Symbolic group expressions, their OD-data, and the text grammar.

Grammar (whitespace-insensitive)::

    expr     := term ( "x" term )*
    term     := "Alt(" int ")" | "Sym(" int ")"
              | "Ab(" int "," "[" int ("," int)* "]" ")"
              | "Grp(" factored ";" "pi=" int ("," int)* ";" "edges=" edgelist? ")"
    factored := int ( "*" int )*        each int written p or p^k
    edgelist := pair ("," pair)*        pair := int "-" int

Chains of ``x`` build left-associated products.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .numtheory import (
    FactoredInteger,
    Partition,
    SievedRange,
    factor_factorial,
    fi_multiply,
    format_factored,
    is_prime,
    sieve,
)
from .primegraph import (
    CriterionGraph,
    DegreePattern,
    PrimeGraph,
    ProductGraph,
    as_explicit_if_small,
    degree_pattern,
    gk_product,
    materialize,
)


class GroupExprError(ValueError):
    pass


class ArgumentError(GroupExprError):
    """Well-formed expression with an out-of-range argument."""


class ParseError(GroupExprError):
    """Syntax error at a character position."""

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


@dataclass(frozen=True)
class Alt:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ArgumentError(f"Alt degree must be >= 1, got {self.n}")


@dataclass(frozen=True)
class Sym:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ArgumentError(f"Sym degree must be >= 1, got {self.n}")


@dataclass(frozen=True)
class AbelianPGroup:
    """Direct sum of cyclic groups of orders p^k for k in ``partition``."""

    p: int
    partition: Partition

    def __post_init__(self):
        if not is_prime(self.p):
            raise ArgumentError(f"abelian p-group base {self.p} is not prime")
        if not isinstance(self.partition, Partition):
            object.__setattr__(self, "partition", Partition(tuple(self.partition)))
        if not self.partition.parts:
            raise ArgumentError("abelian p-group needs at least one cyclic factor")


@dataclass(frozen=True)
class AbstractGroup:
    """A group known only through its order and prime graph."""

    order: FactoredInteger
    pi: frozenset[int]
    internal_edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        pi = frozenset(self.pi)
        if pi != frozenset(self.order):
            raise ArgumentError(f"pi={sorted(pi)} differs from the primes of the order {self.order}")
        edges = set()
        for p, q in self.internal_edges:
            if p == q:
                raise ArgumentError(f"self-loop {p}-{q}")
            if p not in pi or q not in pi:
                raise ArgumentError(f"edge {p}-{q} leaves pi")
            edges.add((min(p, q), max(p, q)))
        object.__setattr__(self, "pi", pi)
        object.__setattr__(self, "internal_edges", frozenset(edges))


@dataclass(frozen=True)
class Product:
    left: "GroupExpr"
    right: "GroupExpr"


GroupExpr = Union[Alt, Sym, AbelianPGroup, AbstractGroup, Product]


@dataclass(frozen=True)
class ODPair:
    order: FactoredInteger
    pattern: DegreePattern


def product(*factors: GroupExpr) -> GroupExpr:
    """Left-associated product of one or more expressions."""
    out = factors[0]
    for f in factors[1:]:
        out = Product(out, f)
    return out


def required_sieve_limit(e: GroupExpr) -> int:
    """Smallest sieve limit that covers every Alt/Sym degree in ``e``."""
    if isinstance(e, (Alt, Sym)):
        return max(e.n, 2)
    if isinstance(e, Product):
        return max(required_sieve_limit(e.left), required_sieve_limit(e.right))
    return 2


def _ensure_sieve(e: GroupExpr, sieved: SievedRange | None) -> SievedRange:
    need = required_sieve_limit(e)
    if sieved is None:
        return sieve(need)
    sieved.require(need)
    return sieved


def order_of(e: GroupExpr, sieved: SievedRange | None = None) -> FactoredInteger:
    if isinstance(e, Sym):
        return factor_factorial(e.n, sieved)
    if isinstance(e, Alt):
        if e.n < 2:
            return FactoredInteger._trusted({})
        return factor_factorial(e.n, sieved).divide_prime(2)
    if isinstance(e, AbelianPGroup):
        return FactoredInteger._trusted({e.p: e.partition.total})
    if isinstance(e, AbstractGroup):
        return e.order
    if isinstance(e, Product):
        return fi_multiply(order_of(e.left, sieved), order_of(e.right, sieved))
    raise TypeError(f"not a group expression: {e!r}")


def graph_view(e: GroupExpr, sieved: SievedRange | None = None):
    """Prime graph of ``e`` in the cheapest faithful representation.

    Explicit :class:`PrimeGraph` whenever every Alt/Sym leaf is small enough to
    materialize; otherwise a criterion/product view that supports degree
    patterns without building edge sets.
    """
    sieved = _ensure_sieve(e, sieved)
    if isinstance(e, (Alt, Sym)):
        return as_explicit_if_small(CriterionGraph(type(e).__name__, e.n, sieved))
    if isinstance(e, AbelianPGroup):
        return PrimeGraph([e.p])
    if isinstance(e, AbstractGroup):
        return PrimeGraph(e.pi, e.internal_edges)
    if isinstance(e, Product):
        left = graph_view(e.left, sieved)
        right = graph_view(e.right, sieved)
        if isinstance(left, PrimeGraph) and isinstance(right, PrimeGraph):
            return gk_product(left, right)
        return ProductGraph(left, right)
    raise TypeError(f"not a group expression: {e!r}")


def gk_of(e: GroupExpr, sieved: SievedRange | None = None) -> PrimeGraph:
    """Explicit prime graph; raises GraphTooLarge above the materialization limit."""
    return materialize(graph_view(e, sieved))


def od_pair(e: GroupExpr, sieved: SievedRange | None = None) -> ODPair:
    sieved = _ensure_sieve(e, sieved)
    return ODPair(order_of(e, sieved), degree_pattern(graph_view(e, sieved)))


def same_od(a: GroupExpr, b: GroupExpr, sieved: SievedRange | None = None) -> bool:
    if sieved is None:
        sieved = sieve(max(required_sieve_limit(a), required_sieve_limit(b)))
    return od_pair(a, sieved) == od_pair(b, sieved)


# -- printing ---------------------------------------------------------------


def format_expr(e: GroupExpr) -> str:
    """Render in the grammar; products print flat as ``A x B x C``."""
    if isinstance(e, Alt):
        return f"Alt({e.n})"
    if isinstance(e, Sym):
        return f"Sym({e.n})"
    if isinstance(e, AbelianPGroup):
        return f"Ab({e.p},[{','.join(map(str, e.partition.parts))}])"
    if isinstance(e, AbstractGroup):
        order = format_factored(e.order).replace(" ", "")
        pi = ",".join(map(str, sorted(e.pi)))
        edges = ",".join(f"{p}-{q}" for p, q in sorted(e.internal_edges))
        return f"Grp({order}; pi={pi}; edges={edges})"
    if isinstance(e, Product):
        return f"{format_expr(e.left)} x {format_expr(e.right)}"
    raise TypeError(f"not a group expression: {e!r}")


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<kw>Alt|Sym|Ab|Grp|pi|edges|x)|(?P<int>\d+)|(?P<punct>[()\[\],;=*^\-])|(?P<bad>\S))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        kind = m.lastgroup
        value = m.group(kind)
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", start, text)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def fail(self, expected: str):
        kind, value, pos = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected {expected}, found {found}", pos, self.text)

    def expect(self, value: str) -> int:
        kind, v, pos = self.peek()
        if v != value or kind == "end":
            self.fail(repr(value))
        self.i += 1
        return pos

    def accept(self, value: str) -> bool:
        kind, v, _ = self.peek()
        if kind != "end" and v == value:
            self.i += 1
            return True
        return False

    def integer(self) -> int:
        kind, v, _ = self.peek()
        if kind != "int":
            self.fail("an integer")
        self.i += 1
        return int(v)

    def int_list(self) -> list[int]:
        out = [self.integer()]
        while self.accept(","):
            out.append(self.integer())
        return out

    def expr(self) -> GroupExpr:
        out = self.term()
        while self.accept("x"):
            out = Product(out, self.term())
        if self.peek()[0] != "end":
            self.fail("'x' or end of input")
        return out

    def term(self) -> GroupExpr:
        kind, v, pos = self.peek()
        if kind != "kw" or v not in ("Alt", "Sym", "Ab", "Grp"):
            self.fail("one of Alt, Sym, Ab, Grp")
        self.i += 1
        self.expect("(")
        try:
            if v in ("Alt", "Sym"):
                n = self.integer()
                self.expect(")")
                return Alt(n) if v == "Alt" else Sym(n)
            if v == "Ab":
                p = self.integer()
                self.expect(",")
                self.expect("[")
                parts = self.int_list()
                self.expect("]")
                self.expect(")")
                if any(k <= 0 for k in parts):
                    raise ArgumentError(f"Ab exponents must be positive: {parts}")
                return AbelianPGroup(p, Partition(tuple(sorted(parts, reverse=True))))
            return self.grp()
        except ArgumentError as exc:
            raise ArgumentError(f"{exc} (in {v} at position {pos})") from None

    def grp(self) -> AbstractGroup:
        factors: dict[int, int] = {}
        while True:
            q = self.integer()
            k = self.integer() if self.accept("^") else 1
            if not is_prime(q):
                raise ArgumentError(f"order factor {q} is not prime")
            if k < 1:
                raise ArgumentError(f"order exponent for {q} must be positive")
            factors[q] = factors.get(q, 0) + k
            if not self.accept("*"):
                break
        self.expect(";")
        self.expect("pi")
        self.expect("=")
        pi = self.int_list()
        self.expect(";")
        self.expect("edges")
        self.expect("=")
        edges = []
        if self.peek()[0] == "int":
            while True:
                p = self.integer()
                self.expect("-")
                edges.append((p, self.integer()))
                if not self.accept(","):
                    break
        self.expect(")")
        return AbstractGroup(FactoredInteger._trusted(factors), frozenset(pi), frozenset(edges))


def parse_group_expr(text: str) -> GroupExpr:
    return _Parser(text).expr()
