"""Candidate search for p = 5^alpha - 6 and exact verification of the
order/degree-pattern coincidences for A_{p+6}, S_{p+6} and their products.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .descriptors import (
    AbelianPGroup,
    AbstractGroup,
    Alt,
    GroupExpr,
    ODPair,
    Product,
    Sym,
    od_pair,
)
from .numtheory import FactoredInteger, SievedRange, is_prime, partitions
from .primegraph import (
    MATERIALIZE_LIMIT,
    GraphSummary,
    fast_degree_pattern_alt,
    gk_alt,
    graphs_equal,
)

MAX_ALPHA = 27  # 5^27 - 6 < 2^63


class AlphaOutOfRange(ValueError):
    pass


class NonQualifying(ValueError):
    def __init__(self, witness: "CandidateWitness"):
        super().__init__(f"alpha={witness.alpha} does not qualify: {'; '.join(witness.reasons)}")
        self.witness = witness


@dataclass(frozen=True)
class CandidateWitness:
    alpha: int
    p: int
    p_prime: bool
    p2_composite: bool
    p4_composite: bool
    qualifies: bool
    reasons: tuple[str, ...] = ()

    def to_json(self) -> dict:
        d = asdict(self)
        d["reasons"] = list(self.reasons)
        return d

    @classmethod
    def from_json(cls, data: dict) -> "CandidateWitness":
        return cls(**(data | {"reasons": tuple(data["reasons"])}))


def _check_alpha(alpha: int) -> None:
    if not 1 <= alpha <= MAX_ALPHA:
        raise AlphaOutOfRange(f"alpha must lie in 1..{MAX_ALPHA}, got {alpha}")


def check_candidate(alpha: int) -> CandidateWitness:
    """Test whether p = 5^alpha - 6 is an odd prime with p+2, p+4 not prime."""
    _check_alpha(alpha)
    p = 5**alpha - 6
    reasons = []
    p_prime = p > 2 and is_prime(p)
    if not p_prime:
        reasons.append(f"p = {p} is not an odd prime")
    p2_composite = not is_prime(p + 2) if p + 2 >= 0 else True
    if not p2_composite:
        reasons.append(f"p+2 = {p + 2} is prime")
    p4_composite = not is_prime(p + 4) if p + 4 >= 0 else True
    if not p4_composite:
        reasons.append(f"p+4 = {p + 4} is prime")
    qualifies = p_prime and p % 2 == 1 and p2_composite and p4_composite
    return CandidateWitness(alpha, p, p_prime, p2_composite, p4_composite, qualifies, tuple(reasons))


def search_candidates(max_alpha: int) -> list[CandidateWitness]:
    if max_alpha < 1:
        raise AlphaOutOfRange(f"max_alpha must be >= 1, got {max_alpha}")
    _check_alpha(max_alpha)
    return [check_candidate(a) for a in range(1, max_alpha + 1)]


@dataclass
class PartResult:
    order_equal: bool
    pattern_equal: bool
    evidence: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.order_equal and self.pattern_equal


@dataclass
class VerificationReport:
    alpha: int
    p: int
    part1: PartResult
    part2: PartResult
    part3: PartResult
    graph_identity: bool
    graph_identity_certificate: str
    od_class_size_lower_bound: int
    od_class_bound_kind: str = "abelian groups of order 5^alpha (partition count) plus the group itself"

    @property
    def passed(self) -> bool:
        parts = (self.part1, self.part2, self.part3)
        return self.graph_identity and all(p.order_equal and p.pattern_equal for p in parts)

    def to_json(self) -> dict:
        out = {"alpha": self.alpha, "p": self.p}
        for name in ("part1", "part2", "part3"):
            part = getattr(self, name)
            out[name] = {
                "order_equal": part.order_equal,
                "pattern_equal": part.pattern_equal,
                "evidence": part.evidence,
            }
        out["graph_identity"] = self.graph_identity
        out["graph_identity_certificate"] = self.graph_identity_certificate
        out["od_class_size_lower_bound"] = self.od_class_size_lower_bound
        out["od_class_bound_kind"] = self.od_class_bound_kind
        out["passed"] = self.passed
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict) -> "VerificationReport":
        parts = [PartResult(data[k]["order_equal"], data[k]["pattern_equal"], data[k]["evidence"])
                 for k in ("part1", "part2", "part3")]
        return cls(
            data["alpha"],
            data["p"],
            *parts,
            graph_identity=data["graph_identity"],
            graph_identity_certificate=data["graph_identity_certificate"],
            od_class_size_lower_bound=data["od_class_size_lower_bound"],
            od_class_bound_kind=data["od_class_bound_kind"],
        )


def _first_order_difference(a: FactoredInteger, b: FactoredInteger):
    if a == b:
        return None
    for q in sorted(set(a) | set(b)):
        if a.exponent(q) != b.exponent(q):
            return {"prime": q, "left_exponent": a.exponent(q), "right_exponent": b.exponent(q)}
    return None


def _first_pattern_difference(a, b):
    if a == b:
        return None
    if a.primes != b.primes:
        only = sorted(set(a.primes) ^ set(b.primes))
        return {"vertex_sets_differ": True, "symmetric_difference": only[:10]}
    for p, da, db in zip(a.primes, a.degrees, b.degrees):
        if da != db:
            return {"prime": p, "left_degree": da, "right_degree": db}
    return None


def _summary(pattern) -> dict:
    return asdict(GraphSummary.of(pattern))


def compare_od(left: ODPair, right: ODPair) -> PartResult:
    order_equal = left.order == right.order
    pattern_equal = left.pattern == right.pattern
    evidence = {
        "left_summary": _summary(left.pattern),
        "right_summary": _summary(right.pattern),
        "first_order_difference": _first_order_difference(left.order, right.order),
        "first_pattern_difference": _first_pattern_difference(left.pattern, right.pattern),
    }
    return PartResult(order_equal, pattern_equal, evidence)


def t_variants(alpha: int) -> dict[str, AbstractGroup]:
    """The two possible prime graphs of a group of order 2 * 5^alpha."""
    order = FactoredInteger._trusted({2: 1, 5: alpha})
    return {
        "T_edges_empty": AbstractGroup(order, frozenset({2, 5}), frozenset()),
        "T_edges_2_5": AbstractGroup(order, frozenset({2, 5}), frozenset({(2, 5)})),
    }


def graph_identity(n: int, sieved: SievedRange) -> tuple[bool, str]:
    """Is GK(A_n) equal to GK(A_{n-1})? Returns (result, certificate used)."""
    if n <= MATERIALIZE_LIMIT:
        return graphs_equal(gk_alt(n, sieved), gk_alt(n - 1, sieved)), "edge-set"
    a = fast_degree_pattern_alt(n, sieved)
    b = fast_degree_pattern_alt(n - 1, sieved)
    # The criterion is monotone in n, so on equal vertex sets the edges of
    # GK(A_{n-1}) are a subset of those of GK(A_n); equal degrees then force
    # equal edge sets.
    return a == b, "vertex-set+degree-pattern"


def verify_main_theorem(alpha: int, sieved: SievedRange) -> VerificationReport:
    witness = check_candidate(alpha)
    if not witness.qualifies:
        raise NonQualifying(witness)
    p = witness.p
    n = p + 6
    sieved.require(n)
    h = AbelianPGroup(5, partitions(alpha)[0])

    part1 = compare_od(od_pair(Alt(n), sieved), od_pair(Product(Alt(n - 1), h), sieved))

    sym_n = od_pair(Sym(n), sieved)
    part2 = compare_od(sym_n, od_pair(Product(Sym(n - 1), h), sieved))

    variants = {name: compare_od(sym_n, od_pair(Product(Alt(n - 1), t), sieved)) for name, t in t_variants(alpha).items()}
    part3 = PartResult(
        all(r.order_equal for r in variants.values()),
        all(r.pattern_equal for r in variants.values()),
        {name: r.evidence | {"order_equal": r.order_equal, "pattern_equal": r.pattern_equal} for name, r in variants.items()},
    )

    identity, certificate = graph_identity(n, sieved)
    report = VerificationReport(alpha, p, part1, part2, part3, identity, certificate, 1)
    if report.passed:
        report.od_class_size_lower_bound = len(partitions(alpha)) + 1
    return report


def od_class(alpha: int, family: str) -> list[GroupExpr]:
    """family(p+6) followed by family(p+5) x A for every abelian A of order 5^alpha."""
    witness = check_candidate(alpha)
    if not witness.qualifies:
        raise NonQualifying(witness)
    if family not in ("Alt", "Sym"):
        raise ValueError(f"family must be Alt or Sym, got {family!r}")
    make = Alt if family == "Alt" else Sym
    n = witness.p + 6
    return [make(n)] + [Product(make(n - 1), AbelianPGroup(5, lam)) for lam in partitions(alpha)]


def all_same_od(exprs: list[GroupExpr], sieved: SievedRange) -> bool:
    """True when every expression has the OD-data of the first.

    Equality of OD pairs is an equivalence, so this decides pairwise sameness
    while holding only two OD pairs in memory at a time.
    """
    if not exprs:
        return True
    reference = od_pair(exprs[0], sieved)
    return all(od_pair(e, sieved) == reference for e in exprs[1:])
