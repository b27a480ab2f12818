import numpy as np
import pytest
from fractions import Fraction

from g2lab.rational import ExactMatrix, Q
from g2lab.subspaces import Subspace, kernel_basis, rref, solve_linear


def test_rref_canonical_under_shuffle_and_rescale():
    rng = np.random.default_rng(5)
    vecs = rng.integers(-4, 5, size=(3, 6)).tolist()
    s1 = Subspace.span(vecs)
    shuffled = [vecs[2], vecs[0], vecs[1]]
    rescaled = [[Fraction(3, 7) * Fraction(x) for x in v] for v in shuffled]
    mixed = list(rescaled)
    mixed[0] = [a + b for a, b in zip(mixed[0], mixed[1])]
    s2 = Subspace.span(mixed)
    assert s1 == s2
    assert s1.basis == s2.basis


def test_axes_sum_and_intersection():
    x = Subspace.span([[1, 0, 0]])
    y = Subspace.span([[0, 1, 0]])
    s = x.sum(y)
    assert s.dim == 2
    assert s.contains([2, -3, 0])
    assert not s.contains([0, 0, 1])
    assert x.intersect(y).dim == 0


def test_intersect_self():
    s = Subspace.span([[1, 2, 3], [0, 1, 1]])
    assert s.intersect(s) == s


def test_grassmann_dimension_formula():
    rng = np.random.default_rng(17)
    for _ in range(8):
        a = Subspace.span(rng.integers(-3, 4, size=(3, 7)).tolist())
        b = Subspace.span(rng.integers(-3, 4, size=(4, 7)).tolist())
        assert a.dim + b.dim == a.sum(b).dim + a.intersect(b).dim


def test_ortho_complement_euclidean():
    s = Subspace.span([[1, 0, 0], [0, 1, 0]])
    c = s.ortho_complement()
    assert c.dim == 1
    assert c.contains([0, 0, 5])
    # complement w.r.t. a non-identity nondegenerate form
    form = ExactMatrix.from_rows([[2, 0, 0], [0, 3, 0], [0, 0, 5]])
    c2 = Subspace.span([[1, 1, 0]]).ortho_complement(form)
    assert c2.dim == 2
    assert c2.contains([3, -2, 0])


def test_ortho_complement_degenerate_form_rejected():
    form = ExactMatrix.from_rows([[1, 0], [0, 0]])
    with pytest.raises(ValueError):
        Subspace.span([[1, 0]]).ortho_complement(form)


def test_solve_identity():
    a = ExactMatrix.identity(3)
    sol = solve_linear(a, [1, 2, 3])
    assert sol.particular == (Q(1), Q(2), Q(3))
    assert sol.unique


def test_solve_zero_matrix():
    a = ExactMatrix.zeros(2, 3)
    sol = solve_linear(a, [0, 0])
    assert sol.consistent
    assert len(sol.kernel) == 3


def test_solve_inconsistent():
    a = ExactMatrix.from_rows([[1, 0], [1, 0]])
    sol = solve_linear(a, [1, 2])
    assert not sol.consistent


def test_solve_reconstructs():
    rng = np.random.default_rng(23)
    a = ExactMatrix.from_rows(rng.integers(-3, 4, size=(4, 6)).tolist())
    x = [Fraction(int(v)) for v in rng.integers(-2, 3, size=6)]
    b = a.apply(x)
    sol = solve_linear(a, list(b))
    assert sol.consistent
    assert a.apply(sol.particular) == b
    for k in sol.kernel:
        assert all(v == 0 for v in a.apply(k))


def test_kernel_basis_canonical():
    a = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    ker = kernel_basis(a)
    assert len(ker) == 2
    for v in ker:
        assert all(t == 0 for t in a.apply(v))


def test_contains_ambient_mismatch():
    s = Subspace.span([[1, 0]])
    with pytest.raises(ValueError):
        s.contains([1, 0, 0])


def test_coordinates_roundtrip():
    s = Subspace.span([[1, 1, 0], [0, 2, 2]])
    v = [1, 3, 2]
    c = s.coordinates(v)
    assert c is not None
    recon = [sum(ci * bi for ci, bi in zip(c, col)) for col in zip(*s.basis)]
    assert [Fraction(t) for t in v] == recon
