from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import CARTAN, HALF_LENGTHS
from rootcone.rootsystem import RootSystemError, SimpleType, build, parse_types

ALL_SMALL = [f"A{n}" for n in range(1, 9)] + [f"B{n}" for n in range(2, 9)] + [f"C{n}" for n in range(2, 9)]
ALL_SMALL += [f"D{n}" for n in range(4, 9)] + ["E6", "E7", "E8", "F4", "G2"]


@pytest.mark.parametrize("name", sorted(CARTAN))
def test_cartan_matches_hand_typed(name):
    rs = build(name)
    assert rs.cartan.tolist() == CARTAN[name]
    assert list(rs.half_lengths) == HALF_LENGTHS[name]


def test_cartan_conventions():
    assert build("A1").cartan.tolist() == [[2]]
    g2 = build("G2").cartan
    assert g2[0, 1] == -3 and g2[1, 0] == -1
    b3 = build("B3").cartan
    assert b3[1, 2] == -1 and b3[2, 1] == -2
    f4 = build("F4")
    assert f4.half_lengths == (2, 2, 1, 1)


@pytest.mark.parametrize("name", ALL_SMALL)
def test_cartan_is_finite_type(name):
    rs = build(name)
    A = rs.cartan
    assert (np.diag(A) == 2).all()
    off = A[~np.eye(rs.rank, dtype=bool)]
    assert set(off.tolist()) <= {0, -1, -2, -3}
    assert ((A == 0) == (A.T == 0)).all()
    assert rs.determinant() > 0


@pytest.mark.parametrize("name", ALL_SMALL)
def test_gram_positive_definite(name):
    rs = build(name)
    G = [[Fraction(int(x), rs.denominator) for x in row] for row in rs.gram_scaled.tolist()]
    n = rs.rank
    assert all(G[i][j] == G[j][i] for i in range(n) for j in range(n))
    # leading principal minors by exact elimination
    M = [row[:] for row in G]
    for k in range(n):
        assert M[k][k] > 0
        for r in range(k + 1, n):
            f = M[r][k] / M[k][k]
            M[r] = [a - f * b for a, b in zip(M[r], M[k])]


@pytest.mark.parametrize("name", ALL_SMALL)
def test_positive_root_count_and_heights(name):
    rs = build(name)
    roots = rs.positive_roots
    assert len(roots) == rs.factors[0].num_positive_roots
    assert [r.height for r in roots] == sorted(r.height for r in roots)
    simple = [r for r in roots if r.height == 1]
    assert sorted(r.omega_coords for r in simple) == sorted(rs.simple_root(i) for i in range(1, rs.rank + 1))
    for r in roots:
        assert tuple(rs.cartan @ np.array(r.root_coords)) == r.omega_coords
        assert rs.in_positive_root_cone(r.omega_coords)
        assert not rs.in_positive_root_cone(tuple(-x for x in r.omega_coords))


def test_root_examples():
    assert [r.height for r in build("A2").positive_roots] == [1, 1, 2]
    e8 = build("E8").positive_roots
    assert len(e8) == 120 and max(r.height for r in e8) == 29
    assert build("C3").num_positive_roots == 9
    assert build("D5").num_positive_roots == 20
    assert build("F4").num_positive_roots == 24
    assert build("A1xA1").num_positive_roots == 2


def test_product_is_block_diagonal():
    rs = build("A2xB3xA1")
    assert rs.rank == 6
    A = rs.cartan
    assert (A[:2, :2] == build("A2").cartan).all()
    assert (A[2:5, 2:5] == build("B3").cartan).all()
    assert (A[:2, 2:] == 0).all() and (A[2:5, 5:] == 0).all()
    assert rs.num_positive_roots == 3 + 9 + 1
    assert str(rs) == "A2xB3xA1"


def test_dominant_roots():
    hi, short = build("G2").dominant_roots()
    assert hi.omega_coords == (0, 1) and hi.root_coords == (3, 2)
    assert short.omega_coords == (1, 0) and short.root_coords == (2, 1)
    hi, short = build("E7").dominant_roots()
    assert hi.omega_coords == (1, 0, 0, 0, 0, 0, 0) and hi.height == 17 and hi == short
    assert build("A2").dominant_roots()[0].omega_coords == (1, 1)
    with pytest.raises(RootSystemError):
        build("A1xA1").dominant_roots()


@pytest.mark.parametrize("name", ALL_SMALL)
def test_dual_cartan_is_transpose(name):
    rs = build(name)
    dual = rs.dual_system().cartan
    if name in ("F4", "G2"):
        # self-dual up to reversing the Bourbaki numbering
        dual = dual[::-1, ::-1]
    assert (dual == rs.cartan.T).all()


def test_form_and_pairing_examples():
    a1 = build("A1")
    assert a1.form_sign((1,), (1,)) == 1
    assert a1.pairing_sign((-1,), (1,)) == -1
    a2 = build("A2")
    assert not a2.in_positive_root_cone((-1, 1))
    assert a2.in_positive_root_cone((0, 0))
    for name in ALL_SMALL:
        rs = build(name)
        assert rs.in_positive_root_cone(rs.rho)
        assert (rs.inverse_scaled > 0).all()  # <w_i, w_j^vee> > 0


@given(st.sampled_from(["A3", "B3", "C3", "G2", "F4", "D4", "A2xG2"]), st.data())
def test_cone_duality_and_sign_consistency(name, data):
    rs = build(name)
    mu = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=rs.rank, max_size=rs.rank)))
    in_cone = rs.in_positive_root_cone(mu)
    signs = [rs.pairing_sign(mu, rs.fundamental(j)) for j in range(1, rs.rank + 1)]
    assert in_cone == all(s >= 0 for s in signs)
    for j in range(1, rs.rank + 1):
        assert rs.form_sign(mu, rs.fundamental(j)) == signs[j - 1]


@pytest.mark.parametrize("bad", ["D3", "H4", "B1", "E9", "F3", "G3", "A0", "", "A2x", "x", "A-1", "AA2"])
def test_bad_type_strings(bad):
    with pytest.raises(RootSystemError):
        build(bad)


def test_type_string_grammar():
    assert parse_types("a2Xb3x a1".replace(" ", "")) == (SimpleType("A", 2), SimpleType("B", 3), SimpleType("A", 1))
    assert str(build("b3xa2")) == "B3xA2"
    with pytest.raises(RootSystemError, match="D3"):
        build("A2xD3")


@pytest.mark.parametrize("name,long_count", [
    ("A4", 10), ("D5", 20), ("E6", 36), ("B3", 6), ("B4", 12), ("C3", 3), ("C4", 4), ("F4", 12), ("G2", 3), ("B2", 2),
])
def test_long_root_counts(name, long_count):
    # B_n: n(n-1) long, C_n: n long, F4 and G2 split evenly
    roots = build(name).positive_roots
    assert sum(r.is_long for r in roots) == long_count


def test_simple_roots_carry_their_own_length():
    g2 = {r.root_coords: r.is_long for r in build("G2").positive_roots}
    assert g2[(1, 0)] is False and g2[(0, 1)] is True
