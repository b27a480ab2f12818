import numpy as np
import pytest
from fractions import Fraction

from g2lab.octonions import (alternativity_certificate, associative_test,
                             associator, calibration_gap, dot,
                             norm_multiplicativity_certificate, standard_cross,
                             standard_octonions, torsion_cross)
from g2lab.rational import Q
from g2lab.threeform import invariant_threeform


def test_cross_product_identity_exact():
    cross = standard_cross()
    rng = np.random.default_rng(12)
    for _ in range(8):
        x = tuple(Fraction(int(n), int(d)) for n, d in
                  zip(rng.integers(-5, 6, size=7), rng.integers(1, 5, size=7)))
        y = tuple(Fraction(int(n), int(d)) for n, d in
                  zip(rng.integers(-5, 6, size=7), rng.integers(1, 5, size=7)))
        lhs = cross.cross(x, cross.cross(x, y))
        rhs = tuple(-dot(x, x) * yv + dot(x, y) * xv for xv, yv in zip(x, y))
        assert lhs == rhs


def test_cross_norm_identity():
    cross = standard_cross()
    rng = np.random.default_rng(15)
    for _ in range(6):
        x = tuple(Fraction(int(v)) for v in rng.integers(-4, 5, size=7))
        y = tuple(Fraction(int(v)) for v in rng.integers(-4, 5, size=7))
        xy = cross.cross(x, y)
        assert dot(xy, xy) == dot(x, x) * dot(y, y) - dot(x, y) ** 2


def test_torsion_cross_proportional():
    res = torsion_cross()
    assert res.complement_dim == 7
    assert res.proportionality != 0
    cross = standard_cross()
    rng = np.random.default_rng(21)
    lam = res.proportionality
    for _ in range(4):
        x = tuple(Fraction(int(v)) for v in rng.integers(-3, 4, size=7))
        y = tuple(Fraction(int(v)) for v in rng.integers(-3, 4, size=7))
        lhs = res.cross(x, y)
        rhs = tuple(lam * v for v in cross.cross(x, y))
        assert lhs == rhs
        # antisymmetry is inherited from the bracket
        assert res.cross(y, x) == tuple(-v for v in lhs)


def test_octonion_unit_and_squares():
    tab = standard_octonions()
    one = tuple([Q(1)] + [Q(0)] * 7)
    rng = np.random.default_rng(6)
    p = tuple(Fraction(int(v)) for v in rng.integers(-4, 5, size=8))
    assert tab.multiply(one, p) == p
    assert tab.multiply(p, one) == p
    for i in range(1, 8):
        ei = tuple(Q(1) if s == i else Q(0) for s in range(8))
        assert tab.multiply(ei, ei) == tuple([Q(-1)] + [Q(0)] * 7)


def test_norm_multiplicativity_100_pairs():
    assert norm_multiplicativity_certificate(standard_octonions(), n=100, seed=42)


def test_alternativity():
    assert alternativity_certificate(standard_octonions(), n=30, seed=42)


def test_octonions_not_associative():
    tab = standard_octonions()
    basis = [tuple(Q(1) if s == i else Q(0) for s in range(8)) for i in range(8)]
    zero = tuple([Q(0)] * 8)
    assert any(associator(tab, basis[i], basis[j], basis[k]) != zero
               for i in range(1, 8) for j in range(1, 8) for k in range(1, 8))


def test_conjugation_norm():
    tab = standard_octonions()
    rng = np.random.default_rng(30)
    p = tuple(Fraction(int(v)) for v in rng.integers(-4, 5, size=8))
    pbar = tab.conjugate(p)
    prod = tab.multiply(p, pbar)
    assert prod == tuple([tab.norm_sq(p)] + [Q(0)] * 7)


def test_associative_planes():
    e = [tuple(Q(1) if s == i else Q(0) for s in range(7)) for i in range(7)]
    assert associative_test(e[0], e[1], e[2])          # the plus block
    assert not associative_test(e[4], e[5], e[6])      # the minus block is not
    cross = standard_cross()
    rng = np.random.default_rng(33)
    x = tuple(Fraction(int(v)) for v in rng.integers(-3, 4, size=7))
    y = tuple(Fraction(int(v)) for v in rng.integers(-3, 4, size=7))
    xy = cross.cross(x, y)
    assert associative_test(x, y, xy)                  # closure plane


def test_minus_block_phi_value_is_zero():
    phi = invariant_threeform()
    assert phi.value(4, 5, 6) == 0


def test_calibration_bound():
    # associative plane: equality; generic plane: strict inequality
    e = [tuple(Q(1) if s == i else Q(0) for s in range(7)) for i in range(7)]
    v2, det = calibration_gap(e[0], e[1], e[2])
    assert v2 == det
    rng = np.random.default_rng(41)
    hits = 0
    for _ in range(6):
        x, y, z = (tuple(Fraction(int(v)) for v in rng.integers(-3, 4, size=7))
                   for _ in range(3))
        v2, det = calibration_gap(x, y, z)
        assert v2 <= det
        if v2 < det:
            hits += 1
    assert hits > 0


def test_degenerate_plane_rejected():
    e = [tuple(Q(1) if s == i else Q(0) for s in range(7)) for i in range(7)]
    with pytest.raises(ValueError):
        associative_test(e[0], e[1], tuple(a + b for a, b in zip(e[0], e[1])))


def test_table_and_star_json_export():
    from g2lab.threeform import invariant_threeform, star_phi
    tab = standard_octonions()
    obj = tab.to_json_obj()
    assert obj["kind"] == "octonion_table"
    assert len(obj["products"]) == 8
    assert obj["products"][1][1][0] == {"num": "-1", "den": "1"}
    sp = star_phi(invariant_threeform()).to_json_obj()
    assert sp["kind"] == "four_form"
    assert all(set(c) == {"indices", "num", "den"} for c in sp["components"])
