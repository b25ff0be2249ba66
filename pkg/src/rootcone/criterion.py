"""Embedding-independent sufficient conditions for properties (A), (A-k) and (M).

Given the ambient root system Delta and a reductive subgroup with root
system Delta~, the codimension bound is

    k(iota) >= ell_Delta - #Delta~+                      always,
    k(iota) >= ell^sd_Delta - #Delta~+                   if w~0 = -1,

and (A) follows from k >= 1, (M) from k >= 2. Everything here is a
sufficient condition unless stated otherwise, so a small bound is reported as
"not guaranteed" and never as a failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .ell import ell_delta, ell_sd_delta
from .rootsystem import RootSystem, SimpleType, build, parse_types
from .weyl import minus_one_longest

NotApplicable = str
NOT_APPLICABLE = "not applicable"


class CriterionError(ValueError):
    pass


@dataclass(frozen=True)
class GroupDatum:
    """A connected reductive group: semisimple factors plus a central torus."""

    factors: Tuple[SimpleType, ...] = ()
    torus_rank: int = 0

    def __post_init__(self) -> None:
        if self.torus_rank < 0:
            raise CriterionError("torus rank must be nonnegative")
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def parse(cls, text: str, torus_rank: int = 0) -> "GroupDatum":
        """``"A1xB2"``; empty or ``"T"`` for a pure torus."""
        text = text.strip()
        if text in ("", "T", "t", "-"):
            return cls((), torus_rank)
        return cls(parse_types(text), torus_rank)

    @property
    def rank(self) -> int:
        return self.torus_rank + sum(f.rank for f in self.factors)

    @property
    def num_pos_roots(self) -> int:
        return sum(f.num_positive_roots for f in self.factors)

    @property
    def minus_one_longest(self) -> bool:
        # a central torus is fixed by w~0, so -1 is impossible once it is present
        return self.torus_rank == 0 and all(minus_one_longest(build([f])) for f in self.factors)

    @property
    def dim(self) -> int:
        return self.rank + 2 * self.num_pos_roots

    def __str__(self) -> str:
        parts = ["x".join(str(f) for f in self.factors)] if self.factors else []
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return "+".join(parts) or "trivial"

    def to_json(self) -> dict:
        return {
            "factors": [str(f) for f in self.factors],
            "torusRank": self.torus_rank,
            "posRoots": self.num_pos_roots,
            "minusOne": self.minus_one_longest,
        }


@dataclass(frozen=True)
class AkReport:
    ambient: str
    sub: GroupDatum
    ell_delta: int
    ell_sd_delta: int
    tilde_pos: int
    bound_general: int
    bound_sd: Optional[int]
    best_bound: int
    holds_a: bool
    holds_m: bool
    max_guaranteed_k: int

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "sub": self.sub.to_json(),
            "ell": self.ell_delta,
            "ellSd": self.ell_sd_delta,
            "boundGeneral": self.bound_general,
            "boundSd": self.bound_sd if self.bound_sd is not None else "n/a",
            "holdsA": self.holds_a,
            "holdsM": self.holds_m,
            "maxK": self.max_guaranteed_k,
        }

    def summary(self) -> str:
        def word(ok: bool) -> str:
            return "guaranteed" if ok else "not guaranteed"

        return f"(A) {word(self.holds_a)}, (M) {word(self.holds_m)}, k >= {self.max_guaranteed_k}"


def ak_bound(ambient: Union[RootSystem, str], sub: GroupDatum) -> AkReport:
    rs = build(ambient) if isinstance(ambient, str) else ambient
    if rs.rank == 0:
        raise CriterionError("ambient root system is empty")
    ell = ell_delta(rs)[0]
    ell_sd = ell_sd_delta(rs)[0]
    pos = sub.num_pos_roots
    general = ell - pos
    sd = ell_sd - pos if sub.minus_one_longest else None
    best = general if sd is None else max(general, sd)
    return AkReport(
        ambient=str(rs),
        sub=sub,
        ell_delta=ell,
        ell_sd_delta=ell_sd,
        tilde_pos=pos,
        bound_general=general,
        bound_sd=sd,
        best_bound=best,
        holds_a=best >= 1,
        holds_m=best >= 2,
        max_guaranteed_k=max(best, 0),
    )


# -- SL2-subgroups ----------------------------------------------------------------


def _normalise(t: SimpleType) -> str:
    return "B2" if str(t) == "C2" else str(t)


def sl2_property(factors: Sequence[SimpleType], projects: Sequence[bool]) -> Tuple[bool, bool]:
    """(A, M) for an SL2-subgroup; these are exact characterisations."""
    if len(factors) != len(projects):
        raise CriterionError("need one projection flag per factor")
    hit = {_normalise(f) for f, p in zip(factors, projects) if p}
    holds_a = "A1" not in hit
    holds_m = not hit & {"A1", "A2", "B2"}
    return holds_a, holds_m


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    violated: Tuple[int, ...]


def sl2_lr0_member(values: Sequence[int], flagged: Sequence[int]) -> MembershipResult:
    """Membership in LR0 for an SL2-subgroup.

    ``values[i]`` is lambda_i(h) for the i-th summand (index 0 is the part on
    the complementary ideal); ``flagged`` lists the 1-based indices into
    ``values`` of rank-one factors onto which the subgroup projects.
    """
    vals = [int(v) for v in values]
    if any(v < 0 for v in vals):
        raise CriterionError("pairing values must be nonnegative (h dominant)")
    total = sum(vals)
    bad = []
    for j in sorted(set(flagged)):
        if not 1 <= j <= len(vals):
            raise CriterionError(f"flagged index {j} out of range 1..{len(vals)}")
        if vals[j - 1] > total - vals[j - 1]:
            bad.append(j)
    return MembershipResult(not bad, tuple(bad))


# -- classical ambients -------------------------------------------------------------


def natural_dim(t: SimpleType) -> int:
    m = {"A": t.rank + 1, "B": 2 * t.rank + 1, "C": 2 * t.rank, "D": 2 * t.rank}.get(t.family)
    if m is None:
        raise CriterionError(f"{t} is not classical")
    return m


def classical_bound(ambient: Union[SimpleType, str], sub_pos_roots: int, natural_rep_self_dual: bool = True) -> Union[int, NotApplicable]:
    """k = floor((m-1)/2) - #Delta~+, with so5 using 3 instead of floor(4/2)."""
    t = parse_types(ambient)[0] if isinstance(ambient, str) else ambient
    m = natural_dim(t)
    if t.family == "A" and not natural_rep_self_dual:
        return NOT_APPLICABLE
    if _normalise(t) == "B2":
        return 3 - sub_pos_roots
    return (m - 1) // 2 - sub_pos_roots


@dataclass(frozen=True)
class DimensionCheck:
    applicable: bool
    holds_a: bool
    holds_m: bool
    reason: str


def classical_dimension_check(ambient: Union[SimpleType, str], sub: GroupDatum) -> DimensionCheck:
    """If dim V >= dim g~: rank >= 3 gives (A), rank >= 5 gives (M)."""
    t = parse_types(ambient)[0] if isinstance(ambient, str) else ambient
    m = natural_dim(t)
    if m < sub.dim:
        return DimensionCheck(False, False, False, f"dim V = {m} < dim g~ = {sub.dim}")
    r = sub.rank
    return DimensionCheck(True, r >= 3, r >= 5, f"dim V = {m} >= dim g~ = {sub.dim}, rank {r}")


# -- E8-subgroups --------------------------------------------------------------------

E8_DIM = 248
E8_POS = 120


@dataclass(frozen=True)
class E8Report:
    ambient: str
    holds_m: Optional[bool]
    rationale: str

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "holdsM": self.holds_m, "rationale": self.rationale}


def e8_subgroup_report(ambient: Union[SimpleType, str]) -> E8Report:
    t = parse_types(ambient)[0] if isinstance(ambient, str) else ambient
    name = str(t)
    if name == "E8":
        return E8Report(name, None, "n/a: no proper embedding of E8 into itself")
    if t.family in "EFG":
        return E8Report(name, False, "no embedding exists into another exceptional algebra")
    m = natural_dim(t)
    if m < E8_DIM:
        return E8Report(name, False, f"no embedding (dimension): natural module has dim {m} < {E8_DIM}")
    k = (m - 1) // 2
    return E8Report(name, True, f"ell^sd >= floor((m-1)/2) = {k} >= 3 + {E8_POS}, so (M) holds")
