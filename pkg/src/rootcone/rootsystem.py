"""Finite crystallographic root systems in the Bourbaki numbering.

Everything is exact. Weights live in the fundamental-weight basis as integer
tuples. Rational quantities (A^-1, the invariant form) are stored as integer
matrices scaled by a common positive denominator, which preserves every sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import List, Sequence, Tuple

import numpy as np

Weight = Tuple[int, ...]
Coweight = Tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_TOKEN = re.compile(r"^([A-Za-z])(\d+)$")


class RootSystemError(ValueError):
    """Raised for inadmissible or malformed root system data."""


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam in _MIN_RANK:
            ok = self.rank >= _MIN_RANK[fam]
        elif fam in _FIXED_RANKS:
            ok = self.rank in _FIXED_RANKS[fam]
        else:
            ok = False
        if not ok:
            raise RootSystemError(f"inadmissible simple type {fam}{self.rank}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"

    def cartan(self) -> List[List[int]]:
        """Cartan matrix with A[i][j] = <alpha_j, alpha_i^vee> (0-based here)."""
        n, fam = self.rank, self.family
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

        def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
            A[i][j], A[j][i] = aij, aji

        if fam in "ABC":
            for i in range(n - 1):
                link(i, i + 1)
            if fam == "B" and n >= 2:
                link(n - 2, n - 1, -1, -2)  # alpha_n short
            elif fam == "C" and n >= 2:
                link(n - 2, n - 1, -2, -1)  # alpha_n long
        elif fam == "D":
            for i in range(n - 2):
                link(i, i + 1)
            link(n - 3, n - 1)
        elif fam == "E":
            link(0, 2)
            link(1, 3)
            for i in range(2, n - 1):
                link(i, i + 1)
        elif fam == "F":
            link(0, 1)
            link(1, 2, -1, -2)  # alpha_1, alpha_2 long
            link(2, 3)
        elif fam == "G":
            link(0, 1, -3, -1)  # alpha_1 short
        return A

    def half_lengths(self) -> List[int]:
        """(alpha_i, alpha_i) / 2 normalised so short roots give 1."""
        n, fam = self.rank, self.family
        if fam == "B":
            return [2] * (n - 1) + [1]
        if fam == "C":
            return [1] * (n - 1) + [2]
        if fam == "F":
            return [2, 2, 1, 1]
        if fam == "G":
            return [1, 3]
        return [1] * n

    def dual(self) -> "SimpleType":
        swap = {"B": "C", "C": "B"}
        return SimpleType(swap.get(self.family, self.family), self.rank)

    @property
    def num_positive_roots(self) -> int:
        n, fam = self.rank, self.family
        if fam == "A":
            return n * (n + 1) // 2
        if fam in "BC":
            return n * n
        if fam == "D":
            return n * (n - 1)
        return {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}[str(self)]

    @property
    def weyl_order(self) -> int:
        from math import factorial

        n, fam = self.rank, self.family
        if fam == "A":
            return factorial(n + 1)
        if fam in "BC":
            return 2**n * factorial(n)
        if fam == "D":
            return 2 ** (n - 1) * factorial(n)
        return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}[str(self)]


def parse_types(text: str) -> Tuple[SimpleType, ...]:
    """Parse a type string such as ``"A2xB3xA1"`` (case-insensitive)."""
    tokens = re.split(r"[xX]", text.strip())
    if not text.strip() or any(not t.strip() for t in tokens):
        raise RootSystemError(f"malformed type string {text!r}")
    out = []
    for tok in tokens:
        m = _TOKEN.match(tok.strip())
        if not m:
            raise RootSystemError(f"malformed type token {tok!r}")
        out.append(SimpleType(m.group(1), int(m.group(2))))
    return tuple(out)


def _inverse_scaled(A: List[List[int]]) -> Tuple[List[List[int]], int]:
    """Return (M, D) with M = D * A^-1 integral and D > 0 minimal."""
    n = len(A)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    D = lcm(*(x.denominator for row in inv for x in row)) if n else 1
    return [[int(x * D) for x in row] for row in inv], D


def _det(A: List[List[int]]) -> Fraction:
    n = len(A)
    m = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


@dataclass(frozen=True)
class Root:
    root_coords: Tuple[int, ...]
    omega_coords: Tuple[int, ...]
    is_long: bool

    @property
    def height(self) -> int:
        return sum(self.root_coords)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Ordered product of simple types; global nodes are 1..rank factor by factor."""

    factors: Tuple[SimpleType, ...]
    cartan: np.ndarray = field(init=False, repr=False)
    half_lengths: Tuple[int, ...] = field(init=False, repr=False)
    offsets: Tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = sum(f.rank for f in self.factors)
        A = np.zeros((n, n), dtype=np.int64)
        d: List[int] = []
        offsets = []
        o = 0
        for f in self.factors:
            offsets.append(o)
            A[o : o + f.rank, o : o + f.rank] = f.cartan()
            d.extend(f.half_lengths())
            o += f.rank
        A.setflags(write=False)
        object.__setattr__(self, "cartan", A)
        object.__setattr__(self, "half_lengths", tuple(d))
        object.__setattr__(self, "offsets", tuple(offsets))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)

    def __repr__(self) -> str:
        return f"RootSystem({str(self)!r})"

    @property
    def rank(self) -> int:
        return self.cartan.shape[0]

    @property
    def is_simple(self) -> bool:
        return len(self.factors) == 1

    def factor_slices(self) -> List[Tuple[SimpleType, slice]]:
        return [(f, slice(o, o + f.rank)) for f, o in zip(self.factors, self.offsets)]

    def factor_system(self, index: int) -> "RootSystem":
        return build([self.factors[index]])

    # -- exact linear algebra -------------------------------------------------

    @cached_property
    def _inv(self) -> Tuple[np.ndarray, int]:
        M, D = _inverse_scaled(self.cartan.tolist())
        arr = np.array(M, dtype=np.int64).reshape(self.rank, self.rank)
        arr.setflags(write=False)
        return arr, D

    @property
    def inverse_scaled(self) -> np.ndarray:
        """D * A^-1 as integers; row j gives the alpha_j coordinate functional."""
        return self._inv[0]

    @property
    def denominator(self) -> int:
        return self._inv[1]

    @cached_property
    def gram_scaled(self) -> np.ndarray:
        """D * G with G[i][m] = d_i (A^-1)[i][m], the form on fundamental weights."""
        G = np.array(self.half_lengths, dtype=np.int64)[:, None] * self.inverse_scaled
        G.setflags(write=False)
        return G

    def determinant(self) -> Fraction:
        return _det(self.cartan.tolist())

    def root_coords_scaled(self, mu: Sequence[int]) -> np.ndarray:
        """D times the simple-root coordinates of mu."""
        return self.inverse_scaled @ np.asarray(mu, dtype=np.int64)

    # -- roots ----------------------------------------------------------------

    def simple_root(self, i: int) -> Weight:
        """omega-coordinates of alpha_i (1-based), i.e. column i of A."""
        return tuple(int(x) for x in self.cartan[:, i - 1])

    @cached_property
    def positive_roots(self) -> Tuple[Root, ...]:
        A = self.cartan
        n = self.rank
        seen = set()
        frontier = [self.simple_root(i) for i in range(1, n + 1)]
        seen.update(frontier)
        while frontier:
            nxt = []
            for mu in frontier:
                for i in range(n):
                    if mu[i] == 0:
                        continue
                    nu = tuple(int(x) for x in np.asarray(mu) - mu[i] * A[:, i])
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
            frontier = nxt
        M, D = self.inverse_scaled, self.denominator
        d = np.array(self.half_lengths, dtype=np.int64)
        out = []
        for mu in seen:
            c = M @ np.array(mu, dtype=np.int64)
            if (c < 0).any():
                continue
            coords = tuple(int(x) // D for x in c)
            out.append((coords, mu))
        roots = []
        for coords, mu in out:
            m = np.array(coords, dtype=np.int64)
            # (beta, beta)/2 via (alpha_i, alpha_j) = d_i A[i][j]
            half_sq = int(m @ ((d[:, None] * A) @ m)) // 2
            # compare with the longest simple root of the factor containing beta
            first = next(i for i in range(n) if coords[i])
            block = next(sl for _, sl in self.factor_slices() if sl.start <= first < sl.stop)
            long_len = max(self.half_lengths[block])
            roots.append(Root(coords, mu, half_sq == long_len))
        roots.sort(key=lambda r: (r.height, r.root_coords))
        return tuple(roots)

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def dominant_roots(self) -> Tuple[Root, Root]:
        """(highest root, dominant short root); equal in simply-laced types."""
        if not self.is_simple:
            raise RootSystemError("dominant_roots needs a simple root system")
        dom = [r for r in self.positive_roots if all(x >= 0 for x in r.omega_coords)]
        long_ = [r for r in dom if r.is_long]
        short = [r for r in dom if not r.is_long]
        highest = max(long_, key=lambda r: r.height)
        return highest, (short[0] if short else highest)

    # -- pairings -------------------------------------------------------------

    def form_sign(self, lam: Sequence[int], mu: Sequence[int]) -> int:
        """Sign of the W-invariant form (lam, mu)."""
        v = int(np.asarray(lam, dtype=np.int64) @ self.gram_scaled @ np.asarray(mu, dtype=np.int64))
        return (v > 0) - (v < 0)

    def pairing_sign(self, lam: Sequence[int], h: Sequence[int]) -> int:
        """Sign of <lam, h> for a coweight h given in fundamental-coweight coordinates."""
        v = int(np.asarray(h, dtype=np.int64) @ self.root_coords_scaled(lam))
        return (v > 0) - (v < 0)

    def in_positive_root_cone(self, mu: Sequence[int]) -> bool:
        return bool((self.root_coords_scaled(mu) >= 0).all())

    # -- named weights --------------------------------------------------------

    def fundamental(self, j: int) -> Weight:
        if not 1 <= j <= self.rank:
            raise RootSystemError(f"fundamental weight index {j} out of range 1..{self.rank}")
        return tuple(int(i == j - 1) for i in range(self.rank))

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def dual_system(self) -> "RootSystem":
        return build([f.dual() for f in self.factors])


def build(spec: Sequence[SimpleType] | str) -> RootSystem:
    """Assemble a root system from simple types or a type string."""
    if isinstance(spec, str):
        return _build_cached(parse_types(spec))
    if not spec:
        raise RootSystemError("empty root system")
    return _build_cached(tuple(spec))


@lru_cache(maxsize=None)
def _build_cached(factors: Tuple[SimpleType, ...]) -> RootSystem:
    return RootSystem(factors)


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)
