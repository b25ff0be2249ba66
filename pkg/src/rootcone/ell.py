"""The invariants ell^-_h(lam), ell^h, ell_Delta and ell_Delta^sd with witnesses.

ell^-_h(lam) is the minimal Coxeter length of w with (w lam, h) < 0. All
searches start at a dominant weight and go through
:func:`rootcone.weyl.orbit_bfs_profile`, so a witness is always reduced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .rootsystem import Root, RootSystem, RootSystemError, Weight, build, is_dominant
from .weyl import (
    OrbitSearchResult,
    Word,
    apply_word,
    coweight_functional,
    dual_permutation,
    form_functional,
    leaves_cone,
    minus_one_longest,
    negative_against,
    orbit_bfs_profile,
    word_length,
)


class EllError(ValueError):
    pass


@dataclass(frozen=True)
class EllResult:
    value: int
    witness: Word
    image: Weight
    h: Tuple[int, ...]
    lam: Weight
    explored: int = field(default=0, compare=False)


@dataclass(frozen=True)
class AtLeast:
    """Table marker: the search exhausted ``bound - 1`` without a hit."""

    bound: int

    def __str__(self) -> str:
        return f">={self.bound}"


def _check(lam: Sequence[int], what: str) -> Tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if not is_dominant(lam):
        raise EllError(f"{what} {lam} is not dominant")
    if not any(lam):
        raise EllError(f"{what} must be nonzero")
    return lam


def _result(res: Optional[OrbitSearchResult], h, lam) -> Optional[EllResult]:
    if res is None:
        return None
    return EllResult(res.depth, res.witness, res.image, tuple(h), tuple(lam), res.explored)


def ell_minus(rs: RootSystem, h: Sequence[int], lam: Sequence[int], depth_limit: Optional[int] = None) -> Optional[EllResult]:
    """ell^-_h(lam) under the invariant form; None if it exceeds ``depth_limit``."""
    h, lam = _check(h, "h"), _check(lam, "lambda")
    test = negative_against(form_functional(rs, h))
    return _result(orbit_bfs_profile(rs, lam, [test], depth_limit)[0], h, lam)


def ell_minus_coweight(
    rs: RootSystem, h: Sequence[int], lam: Sequence[int], depth_limit: Optional[int] = None
) -> Optional[EllResult]:
    """Same search with h a coweight and the natural pairing."""
    h, lam = _check(h, "h"), _check(lam, "lambda")
    test = negative_against(coweight_functional(rs, h))
    return _result(orbit_bfs_profile(rs, lam, [test], depth_limit)[0], h, lam)


def ell_exit_cone(rs: RootSystem, lam: Sequence[int]) -> EllResult:
    """min l(w) with w lam outside the cone spanned by positive roots."""
    lam = _check(lam, "lambda")
    res = orbit_bfs_profile(rs, lam, [leaves_cone(rs)])[0]
    if res is None:  # only possible with a zero factor component
        raise EllError(f"orbit of {lam} never leaves the positive root cone")
    return EllResult(res.depth, res.witness, res.image, (), lam, res.explored)


def verify_witness(rs: RootSystem, h: Sequence[int], lam: Sequence[int], word: Sequence[int], coweight: bool = False) -> Tuple[int, int]:
    """(Coxeter length of word, sign of the pairing of w lam with h); independent of BFS."""
    img = apply_word(rs, word, lam)
    sign = rs.pairing_sign(img, h) if coweight else rs.form_sign(img, h)
    return word_length(rs, word), sign


# -- fundamental profile -------------------------------------------------------


@dataclass(frozen=True)
class Profile:
    """ell^-_{varpi_j}(varpi_k) for all fundamental pairs of a simple system."""

    type: str
    values: Tuple[Tuple[int, ...], ...]  # values[j-1][k-1] = ell^-_{varpi_j}(varpi_k)
    witnesses: Tuple[Tuple[Word, ...], ...]

    def ell_of(self, j: int) -> Tuple[int, int]:
        """(ell^{varpi_j}, smallest minimising k)."""
        row = self.values[j - 1]
        v = min(row)
        return v, row.index(v) + 1


class ProfileStore:
    """Persistence hook for profiles; see :mod:`rootcone.cache`."""

    def load(self, type_string: str) -> Optional[Profile]:
        return None

    def store(self, profile: Profile) -> None:
        pass


_PROFILES: Dict[str, Profile] = {}
_STORE: ProfileStore = ProfileStore()


def set_profile_store(store: Optional[ProfileStore]) -> None:
    """Install a persistent store (None restores the no-op store)."""
    global _STORE
    _STORE = store if store is not None else ProfileStore()


def compute_profile(rs: RootSystem) -> Profile:
    if not rs.is_simple:
        raise EllError("fundamental profile needs a simple root system")
    n = rs.rank
    tests = [negative_against(form_functional(rs, rs.fundamental(j))) for j in range(1, n + 1)]
    vals = [[0] * n for _ in range(n)]
    wits: List[List[Word]] = [[()] * n for _ in range(n)]
    for k in range(1, n + 1):
        for j, res in enumerate(orbit_bfs_profile(rs, rs.fundamental(k), tests), start=1):
            assert res is not None
            vals[j - 1][k - 1] = res.depth
            wits[j - 1][k - 1] = res.witness
    return Profile(str(rs), tuple(map(tuple, vals)), tuple(map(tuple, wits)))


def fundamental_profile(rs: RootSystem) -> Profile:
    """Memoised in-process, then through the installed store, then computed."""
    key = str(rs)
    prof = _PROFILES.get(key)
    if prof is None:
        prof = _STORE.load(key)
        if prof is None:
            prof = compute_profile(rs)
            _STORE.store(prof)
        _PROFILES[key] = prof
    return prof


def clear_profiles() -> None:
    _PROFILES.clear()


def _fundamental_multiple(h: Sequence[int]) -> Optional[int]:
    nz = [i for i, x in enumerate(h) if x]
    return nz[0] + 1 if len(nz) == 1 else None


def _embed(rs: RootSystem, index: int, vec: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * rs.rank
    o = rs.offsets[index]
    out[o : o + len(vec)] = vec
    return tuple(out)


def _shift(rs: RootSystem, index: int, word: Word) -> Word:
    return tuple(j + rs.offsets[index] for j in word)


def ell_h(rs: RootSystem, h: Sequence[int]) -> Tuple[int, int, EllResult]:
    """(ell^h, smallest minimising j, result for ell^-_h(varpi_j))."""
    h = _check(h, "h")
    best: Optional[EllResult] = None
    best_j = 0
    j0 = _fundamental_multiple(h)
    if j0 is not None and rs.is_simple:
        # ell^h is invariant under positive rescaling of h
        prof = fundamental_profile(rs)
        v, k = prof.ell_of(j0)
        lam = rs.fundamental(k)
        word = prof.witnesses[j0 - 1][k - 1]
        return v, k, EllResult(v, word, apply_word(rs, word, lam), h, lam)
    test = negative_against(form_functional(rs, h))
    for j in range(1, rs.rank + 1):
        lam = rs.fundamental(j)
        limit = None if best is None else best.value - 1
        if limit is not None and limit < 0:
            break
        res = orbit_bfs_profile(rs, lam, [test], limit)[0]
        if res is not None and (best is None or res.depth < best.value):
            best, best_j = _result(res, h, lam), j
    assert best is not None
    return best.value, best_j, best


def ell_delta(rs: RootSystem) -> Tuple[int, Tuple[int, int], EllResult]:
    """(ell_Delta, (j, k) attaining ell^-_{varpi_j}(varpi_k), witness); products take factor minima."""
    best = None
    for idx, (ft, _) in enumerate(rs.factor_slices()):
        sub = build([ft])
        prof = fundamental_profile(sub)
        n = ft.rank
        v, j, k = min((prof.values[j][k], j + 1, k + 1) for j in range(n) for k in range(n))
        if best is None or v < best[0]:
            word = _shift(rs, idx, prof.witnesses[j - 1][k - 1])
            h = rs.fundamental(j + rs.offsets[idx])
            lam = rs.fundamental(k + rs.offsets[idx])
            best = (v, (j + rs.offsets[idx], k + rs.offsets[idx]), EllResult(v, word, apply_word(rs, word, lam), h, lam))
    assert best is not None
    return best


def selfdual_generators(rs: RootSystem) -> List[Weight]:
    """Generators of the self-dual dominant monoid, factor by factor."""
    perm = dual_permutation(rs)
    out = []
    for j in range(1, rs.rank + 1):
        p = perm[j - 1]
        if p == j:
            out.append(rs.fundamental(j))
        elif j < p:
            out.append(tuple(a + b for a, b in zip(rs.fundamental(j), rs.fundamental(p))))
    return out


def ell_sd_delta(rs: RootSystem) -> Tuple[int, Weight, int, EllResult]:
    """(ell^sd, attaining self-dual h, attaining j, result for ell^-_h(varpi_j))."""
    best = None
    for idx, (ft, _) in enumerate(rs.factor_slices()):
        sub = build([ft])
        if minus_one_longest(sub):
            v, (j, k), r = ell_delta(sub)
            cand = (v, sub.fundamental(j), k, r.witness)
        else:
            cand = None
            gens = selfdual_generators(sub)
            tests = [negative_against(form_functional(sub, g)) for g in gens]
            for k in range(1, sub.rank + 1):
                for g, res in zip(gens, orbit_bfs_profile(sub, sub.fundamental(k), tests)):
                    assert res is not None
                    key = (res.depth, gens.index(g), k)
                    if cand is None or key < (cand[0], gens.index(cand[1]), cand[2]):
                        cand = (res.depth, g, k, res.witness)
        assert cand is not None
        if best is None or cand[0] < best[0]:
            v, g, k, word = cand
            word = _shift(rs, idx, word)
            h = _embed(rs, idx, g)
            lam = rs.fundamental(k + rs.offsets[idx])
            best = (v, h, k + rs.offsets[idx], EllResult(v, word, apply_word(rs, word, lam), h, lam))
    assert best is not None
    return best


# -- tables --------------------------------------------------------------------

Entry = Union[int, AtLeast]


@dataclass(frozen=True)
class EllTable:
    type: str
    row_labels: Tuple[str, ...]
    col_labels: Tuple[str, ...]
    entries: Tuple[Tuple[Entry, ...], ...]  # entries[r][c] = ell^-_{col}(row)
    witnesses: Tuple[Tuple[Optional[Word], ...], ...]
    limit: Optional[int] = None


def ell_table(
    rs: RootSystem,
    rows: Sequence[Tuple[str, Weight]],
    cols: Sequence[Tuple[str, Weight]],
    limit: Optional[int] = None,
) -> EllTable:
    """Rows are lambda, columns are h; one orbit search per row."""
    for _, w in list(rows) + list(cols):
        _check(w, "table label")
    tests = [negative_against(form_functional(rs, h)) for _, h in cols]
    entries, wits = [], []
    for _, lam in rows:
        row_e: List[Entry] = []
        row_w: List[Optional[Word]] = []
        for res in orbit_bfs_profile(rs, lam, tests, limit):
            if res is None:
                row_e.append(AtLeast((limit if limit is not None else rs.num_positive_roots) + 1))
                row_w.append(None)
            else:
                row_e.append(res.depth)
                row_w.append(res.witness)
        entries.append(tuple(row_e))
        wits.append(tuple(row_w))
    return EllTable(
        str(rs),
        tuple(l for l, _ in rows),
        tuple(l for l, _ in cols),
        tuple(entries),
        tuple(wits),
        limit,
    )


# -- dominant roots --------------------------------------------------------------


def dual_height(rs: RootSystem, beta: Root) -> int:
    """Height of beta^vee in the dual system: sum_i m_i d_i / d_beta."""
    d = rs.half_lengths
    d_beta = max(d) if beta.is_long else min(d)
    total = sum(m * d[i] for i, m in enumerate(beta.root_coords))
    if total % d_beta:
        raise EllError("coroot coordinates not integral")
    return total // d_beta


@dataclass(frozen=True)
class DominantRootCheck:
    root: Root
    ell: int
    expected: int
    kind: str  # "short", "long" or "simply-laced"

    @property
    def holds(self) -> bool:
        return self.ell == self.expected


def dominant_root_law(rs: RootSystem) -> List[DominantRootCheck]:
    """ell^beta against hi(beta) (short) or the dual height of beta^vee (long)."""
    if not rs.is_simple:
        raise RootSystemError("dominant_root_law needs a simple root system")
    highest, short = rs.dominant_roots()
    simply = rs.factors[0].simply_laced
    roots = [highest] if highest == short else [highest, short]
    out = []
    for beta in roots:
        value = ell_h(rs, beta.omega_coords)[0]
        if simply:
            out.append(DominantRootCheck(beta, value, beta.height, "simply-laced"))
        elif beta.is_long:
            out.append(DominantRootCheck(beta, value, dual_height(rs, beta), "long"))
        else:
            out.append(DominantRootCheck(beta, value, beta.height, "short"))
    return out


def e8_exact() -> Tuple[int, Tuple[int, int], EllResult]:
    """ell_{E8} by exhaustive search over all 64 fundamental pairs."""
    return ell_delta(build("E8"))
