"""Weyl words, Coxeter length, duality and minimal-length orbit search.

Word convention: ``(j1, ..., jl)`` denotes w = r_j1 ... r_jl and acts
rightmost-first, so r_jl is applied to the weight first.

The orbit search relies on one identity: for any weights lam, mu in one orbit,
min{l(w) : w lam = mu} equals the graph distance from lam to mu in the graph
with edges mu -- r_i mu. A word is a walk (drop stationary steps to get a
path) and a path spells a word, so BFS depth is the minimal length and the
word read off a shortest path is reduced.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .rootsystem import RootSystem, RootSystemError, Weight, is_dominant

Word = Tuple[int, ...]
BatchPredicate = Callable[[np.ndarray], np.ndarray]


class WeylError(ValueError):
    pass


# -- word text format ---------------------------------------------------------


def parse_word(text: str, rank: int | None = None) -> Word:
    """Digits ("12342321") or comma-separated indices ("7,6,5,4")."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        word = tuple(int(t) for t in text.split(","))
    else:
        if not text.isdigit():
            raise WeylError(f"malformed word {text!r}")
        word = tuple(int(c) for c in text)
    if rank is not None:
        bad = [j for j in word if not 1 <= j <= rank]
        if bad:
            raise WeylError(f"word index {bad[0]} out of range 1..{rank}")
    return word


def format_word(word: Sequence[int], rank: int) -> str:
    if rank <= 9:
        return "".join(str(j) for j in word)
    return ",".join(str(j) for j in word)


# -- actions -------------------------------------------------------------------


def reflect(rs: RootSystem, i: int, lam: Sequence[int]) -> Weight:
    if not 1 <= i <= rs.rank:
        raise WeylError(f"generator {i} out of range 1..{rs.rank}")
    v = np.asarray(lam, dtype=np.int64)
    return tuple(int(x) for x in v - v[i - 1] * rs.cartan[:, i - 1])


def _reflect_batch(A: np.ndarray, i: int, X: np.ndarray) -> np.ndarray:
    return X - X[:, i : i + 1] * A[:, i][None, :]


def apply_word(rs: RootSystem, word: Sequence[int], lam: Sequence[int]) -> Weight:
    v = tuple(lam)
    for i in reversed(word):
        v = reflect(rs, i, v)
    return v


def word_length(rs: RootSystem, word: Sequence[int]) -> int:
    """Coxeter length of the element spelled by ``word``: #{beta > 0 : w beta < 0}."""
    if not word:
        return 0
    R = np.array([r.omega_coords for r in rs.positive_roots], dtype=np.int64)
    A = rs.cartan
    for i in reversed(word):
        if not 1 <= i <= rs.rank:
            raise WeylError(f"generator {i} out of range 1..{rs.rank}")
        R = _reflect_batch(A, i - 1, R)
    C = R @ rs.inverse_scaled.T
    return int((C < 0).any(axis=1).sum())


def antidominant(rs: RootSystem, lam: Sequence[int]) -> Tuple[Weight, Word]:
    """(w0 lam, word) by greedy descent on the smallest positive coordinate."""
    if not is_dominant(lam):
        raise WeylError(f"{tuple(lam)} is not dominant")
    v = list(lam)
    applied: List[int] = []
    while True:
        i = next((k for k, x in enumerate(v) if x > 0), None)
        if i is None:
            break
        v = list(reflect(rs, i + 1, v))
        applied.append(i + 1)
    return tuple(v), tuple(reversed(applied))


@lru_cache(maxsize=None)
def longest_word(rs: RootSystem) -> Word:
    return antidominant(rs, rs.rho)[1]


@lru_cache(maxsize=None)
def _dual_permutation(rs: RootSystem) -> Tuple[int, ...]:
    perm = []
    for j in range(1, rs.rank + 1):
        img = apply_word(rs, longest_word(rs), rs.fundamental(j))
        neg = tuple(-x for x in img)
        perm.append(neg.index(1) + 1)
    return tuple(perm)


def dual_permutation(rs: RootSystem) -> Tuple[int, ...]:
    """p with varpi_j* = varpi_p[j-1] (1-based)."""
    return _dual_permutation(rs)


def dual_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """lam* = -w0 lam."""
    perm = _dual_permutation(rs)
    out = [0] * rs.rank
    for j, x in enumerate(lam):
        out[perm[j] - 1] += x
    return tuple(out)


def minus_one_longest(rs: RootSystem) -> bool:
    return all(p == j + 1 for j, p in enumerate(_dual_permutation(rs)))


def dominant_representative(rs: RootSystem, lam: Sequence[int]) -> Weight:
    v = list(lam)
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            return tuple(v)
        v = list(reflect(rs, i + 1, v))


# -- orbit search --------------------------------------------------------------


@dataclass(frozen=True)
class OrbitSearchResult:
    depth: int
    witness: Word
    image: Weight
    explored: int


class _Keyer:
    """Injective int64 keys for weights of one orbit (bytes fallback if too wide)."""

    def __init__(self, rs: RootSystem, lam: Sequence[int]):
        dom = np.array(dominant_representative(rs, lam), dtype=np.int64)
        d = np.array(rs.half_lengths, dtype=np.int64)
        bound = 0
        for r in rs.positive_roots:
            m = np.array(r.root_coords, dtype=np.int64)
            beta_half = max(rs.half_lengths[i] for i in np.nonzero(m)[0])
            # <dom, beta^vee> = sum m_i d_i dom_i / d_beta
            bound = max(bound, int((m * d * dom).sum()) // beta_half)
        base = 2 * bound + 1
        self.offset = bound
        self.wide = float(base) ** rs.rank >= 2**62
        self.mult = np.array([base**k for k in range(rs.rank)], dtype=np.int64) if not self.wide else None

    def __call__(self, X: np.ndarray) -> np.ndarray:
        if self.wide:
            Y = np.ascontiguousarray(X)
            return Y.view(np.dtype((np.void, Y.dtype.itemsize * Y.shape[1]))).ravel()
        return (X + self.offset) @ self.mult


def _bfs_levels(rs: RootSystem, start: Sequence[int], depth_limit: int):
    """Yield (depth, nodes, parent_index, generator) level by level in FIFO order."""
    A = rs.cartan
    n = rs.rank
    key = _Keyer(rs, start)
    level = np.array([start], dtype=np.int64)
    yield 0, level, None, None
    prev_keys = np.empty(0, dtype=key(level).dtype)
    cur_keys = np.sort(key(level))
    for depth in range(1, depth_limit + 1):
        m = level.shape[0]
        # children ordered node-major, generator-minor: FIFO expansion order
        kids = np.empty((m, n, n), dtype=np.int64)
        for i in range(n):
            kids[:, i, :] = _reflect_batch(A, i, level)
        kids = kids.reshape(m * n, n)
        keys = key(kids)
        _, first = np.unique(keys, return_index=True)
        first.sort()
        keys = keys[first]
        fresh = ~np.isin(keys, cur_keys) & ~np.isin(keys, prev_keys)
        idx = first[fresh]
        if idx.size == 0:
            return
        new = kids[idx]
        yield depth, new, idx // n, idx % n + 1
        prev_keys, cur_keys = cur_keys, np.sort(keys[fresh])
        level = new


def _trace(parents: List[Tuple[np.ndarray, np.ndarray]], depth: int, index: int) -> Word:
    applied = []
    for d in range(depth, 0, -1):
        pidx, gens = parents[d - 1]
        applied.append(int(gens[index]))
        index = int(pidx[index])
    # applied is last-applied first, which is already the left-to-right word
    return tuple(applied)


def orbit_bfs_profile(
    rs: RootSystem,
    start: Sequence[int],
    tests: Sequence[BatchPredicate],
    depth_limit: Optional[int] = None,
    require_dominant: bool = True,
) -> List[Optional[OrbitSearchResult]]:
    """For each test, the first orbit point (FIFO, ascending generators) passing it.

    Each test maps an (m, rank) integer array of weights to a boolean mask.
    ``None`` entries mean no hit within ``depth_limit`` (default #positive roots).
    """
    if require_dominant and not is_dominant(start):
        raise WeylError(f"orbit search start {tuple(start)} is not dominant")
    if depth_limit is None:
        depth_limit = rs.num_positive_roots
    if depth_limit < 0:
        raise WeylError("depth limit must be nonnegative")
    results: List[Optional[OrbitSearchResult]] = [None] * len(tests)
    pending = list(range(len(tests)))
    parents: List[Tuple[np.ndarray, np.ndarray]] = []
    explored = 0
    for depth, nodes, pidx, gens in _bfs_levels(rs, start, depth_limit):
        if pidx is not None:
            parents.append((pidx, gens))
        explored += nodes.shape[0]
        still = []
        for t in pending:
            mask = np.asarray(tests[t](nodes), dtype=bool)
            hits = np.flatnonzero(mask)
            if hits.size:
                k = int(hits[0])
                results[t] = OrbitSearchResult(
                    depth, _trace(parents, depth, k), tuple(int(x) for x in nodes[k]), explored
                )
            else:
                still.append(t)
        pending = still
        if not pending:
            break
    return results


def orbit_bfs_first_negative(
    rs: RootSystem,
    start: Sequence[int],
    test: BatchPredicate,
    depth_limit: Optional[int] = None,
) -> Optional[OrbitSearchResult]:
    """Minimal-depth orbit point passing ``test``; None if none within the limit."""
    res = orbit_bfs_profile(rs, start, [test], depth_limit)[0]
    if res is None:
        return None
    return res


def orbit_size(rs: RootSystem, lam: Sequence[int]) -> int:
    total = 0
    for _, nodes, _, _ in _bfs_levels(rs, dominant_representative(rs, lam), rs.num_positive_roots):
        total += nodes.shape[0]
    return total


def orbit_exhaust(rs: RootSystem, start: Sequence[int], depth_limit: Optional[int] = None) -> int:
    """Number of orbit points within ``depth_limit`` of a dominant start."""
    if depth_limit is None:
        depth_limit = rs.num_positive_roots
    return sum(nodes.shape[0] for _, nodes, _, _ in _bfs_levels(rs, start, depth_limit))


# -- linear sign tests ---------------------------------------------------------


def negative_against(functional: Sequence[int]) -> BatchPredicate:
    f = np.asarray(functional, dtype=np.int64)
    return lambda X: X @ f < 0


def leaves_cone(rs: RootSystem) -> BatchPredicate:
    M = rs.inverse_scaled
    return lambda X: (X @ M.T < 0).any(axis=1)


def form_functional(rs: RootSystem, h: Sequence[int]) -> np.ndarray:
    """Vector v with X @ v = D * (X, h) for the invariant form."""
    return rs.gram_scaled @ np.asarray(h, dtype=np.int64)


def coweight_functional(rs: RootSystem, h: Sequence[int]) -> np.ndarray:
    """Vector v with X @ v = D * <X, h> for h in fundamental-coweight coordinates."""
    return rs.inverse_scaled.T @ np.asarray(h, dtype=np.int64)


__all__ = [
    "OrbitSearchResult",
    "RootSystemError",
    "WeylError",
    "Word",
    "antidominant",
    "apply_word",
    "dual_permutation",
    "dual_weight",
    "format_word",
    "longest_word",
    "minus_one_longest",
    "orbit_bfs_first_negative",
    "orbit_bfs_profile",
    "orbit_size",
    "parse_word",
    "reflect",
    "word_length",
]
