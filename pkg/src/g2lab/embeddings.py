"""Explicit matrix models of sl(3) in so(6), its 14-dimensional extension inside
so(7), the equivariant h-map, and the lift of algebra elements to so(n+1).

Index convention on R^7: blocks (1..3 | 4 | 5..7), zero-based (0,1,2 | 3 | 4,5,6).
Slot 4 (index 3) is the distinguished axis; the two 3-blocks carry the split
used by all downstream constructions.  All identities exposed here are
certified exactly, never assumed.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rational import ExactMatrix, Q, bracket, trace_form
from .subspaces import Subspace, kernel_basis, rref, solve_linear

PLUS = (0, 1, 2)
AXIS = 3
MINUS = (4, 5, 6)


def hat3(x: Sequence) -> ExactMatrix:
    """3x3 skew matrix of the cross product: hat3(x) @ y = x x y (e1 x e2 = e3)."""
    x0, x1, x2 = (Fraction(v) if not isinstance(v, Fraction) else v for v in x)
    return ExactMatrix.from_rows([
        [0, -x2, x1],
        [x2, 0, -x0],
        [-x1, x0, 0],
    ])


def cross3(x: Sequence, y: Sequence) -> tuple:
    return hat3(x).apply(y)


@dataclass(frozen=True)
class Sl3Param:
    """Parameters (x, y) of an sl(3) element: x a 3-vector, y symmetric trace-free."""

    x: tuple
    y: ExactMatrix

    def __post_init__(self):
        if len(self.x) != 3 or self.y.rows != 3 or self.y.cols != 3:
            raise ValueError("Sl3Param needs a 3-vector and a 3x3 matrix")
        if not self.y.is_symmetric():
            raise ValueError("y must be symmetric")
        if self.y.trace() != 0:
            raise ValueError("y must be trace-free")

    @staticmethod
    def make(x=(0, 0, 0), y=None) -> "Sl3Param":
        y = ExactMatrix.zeros(3) if y is None else y
        return Sl3Param(tuple(Fraction(v) if not isinstance(v, Fraction) else v for v in x), y)


@dataclass(frozen=True)
class MVector:
    """A point (a, b) of the 6-dimensional complement of sl(3), a, b in Q^3."""

    a: tuple
    b: tuple

    @staticmethod
    def make(a=(0, 0, 0), b=(0, 0, 0)) -> "MVector":
        conv = lambda v: tuple(Fraction(t) if not isinstance(t, Fraction) else t for t in v)
        return MVector(conv(a), conv(b))

    def as_vector6(self) -> tuple:
        return self.a + self.b

    @staticmethod
    def from_vector6(v: Sequence) -> "MVector":
        return MVector.make(tuple(v[:3]), tuple(v[3:]))


def sl3_embed(p: Sl3Param) -> ExactMatrix:
    """The 6x6 block matrix [[hat(x), -y], [y, hat(x)]] realizing sl(3) in so(6)."""
    hx = hat3(p.x)
    rows = []
    for i in range(3):
        rows.append(list(hx.row(i)) + [-v for v in p.y.row(i)])
    for i in range(3):
        rows.append(list(p.y.row(i)) + list(hx.row(i)))
    return ExactMatrix.from_rows(rows)


def so6_to_so7(m: ExactMatrix) -> ExactMatrix:
    """Embed so(6) into so(7) with the 4th row and column zero."""
    if m.rows != 6 or m.cols != 6:
        raise ValueError("expected a 6x6 matrix")
    idx = list(PLUS) + list(MINUS)
    ent = [[Q(0)] * 7 for _ in range(7)]
    for i6, i7 in enumerate(idx):
        for j6, j7 in enumerate(idx):
            ent[i7][j7] = m[i6, j6]
    return ExactMatrix.from_rows(ent)


def so7_to_so6(m: ExactMatrix) -> ExactMatrix:
    """Restrict a 7x7 matrix to the two 3-blocks (drops the axis row/column)."""
    idx = list(PLUS) + list(MINUS)
    return m.submatrix(idx, idx)


def m_embed(v: MVector) -> ExactMatrix:
    """The skew 7x7 image {a}^1 + {b}^2 of (a, b); the axis column holds 2a, 2b."""
    ha, hb = hat3(v.a), hat3(v.b)
    ent = [[Q(0)] * 7 for _ in range(7)]
    for i in range(3):
        for j in range(3):
            ent[i][j] = hb[i, j]
            ent[i][4 + j] = ha[i, j]
            ent[4 + i][j] = ha[i, j]
            ent[4 + i][4 + j] = -hb[i, j]
        ent[i][3] = 2 * v.a[i]
        ent[3][i] = -2 * v.a[i]
        ent[4 + i][3] = 2 * v.b[i]
        ent[3][4 + i] = -2 * v.b[i]
    return ExactMatrix.from_rows(ent)


def h_map(v: MVector) -> ExactMatrix:
    """The equivariant map into so(6):  h(a, b) = 1/2 [[hat(b), hat(a)], [hat(a), -hat(b)]]."""
    ha, hb = hat3(v.a), hat3(v.b)
    half = Q(1, 2)
    rows = []
    for i in range(3):
        rows.append([half * t for t in hb.row(i)] + [half * t for t in ha.row(i)])
    for i in range(3):
        rows.append([half * t for t in ha.row(i)] + [-half * t for t in hb.row(i)])
    return ExactMatrix.from_rows(rows)


def lift_gtilde(a6: ExactMatrix, x: MVector) -> ExactMatrix:
    """Lift (A, x) to so(7) with the distinguished slot last:
    [[A + h(x), x], [-x^T, 0]]."""
    if a6.rows != 6 or a6.cols != 6:
        raise ValueError("expected a 6x6 algebra part")
    top = a6 + h_map(x)
    xv = x.as_vector6()
    rows = []
    for i in range(6):
        rows.append(list(top.row(i)) + [xv[i]])
    rows.append([-t for t in xv] + [Q(0)])
    return ExactMatrix.from_rows(rows)


def sl3_param_basis() -> list[Sl3Param]:
    """Fixed 8-element basis: 3 rotation parameters, then 5 symmetric trace-free."""
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    ys = [
        ExactMatrix.from_rows([[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
        ExactMatrix.from_rows([[0, 0, 0], [0, 1, 0], [0, 0, -1]]),
        ExactMatrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
        ExactMatrix.from_rows([[0, 0, 1], [0, 0, 0], [1, 0, 0]]),
        ExactMatrix.from_rows([[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
    ]
    return [Sl3Param.make(x=v) for v in e] + [Sl3Param.make(y=y) for y in ys]


def m_vector_basis() -> list[MVector]:
    e = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    return [MVector.make(a=v) for v in e] + [MVector.make(b=v) for v in e]


@dataclass(frozen=True)
class G2Basis:
    """14 certified skew 7x7 matrices: 8 sl(3) images then 6 complement images.

    `expand` writes any matrix of the span exactly in this basis; construction
    fails loudly if independence, skewness or bracket closure does not certify.
    """

    elements: tuple
    h_indices: tuple
    m_indices: tuple
    structure_constants: dict     # (i, j) i<j -> coefficient tuple, exact
    _pivot_rows: tuple
    _pivot_inverse: ExactMatrix

    @property
    def h_elements(self):
        return [self.elements[i] for i in self.h_indices]

    @property
    def m_elements(self):
        return [self.elements[i] for i in self.m_indices]

    def span(self) -> Subspace:
        return Subspace.span_matrices(list(self.elements))

    def expand(self, m: ExactMatrix) -> tuple | None:
        """Exact coefficients of m in the basis, or None if m is outside the span."""
        v = m.flatten()
        coeffs = self._pivot_inverse.apply([v[i] for i in self._pivot_rows])
        recon = [Q(0)] * 49
        for c, el in zip(coeffs, self.elements):
            if c:
                fl = el.flatten()
                for k in range(49):
                    recon[k] += c * fl[k]
        return coeffs if tuple(recon) == v else None


@dataclass(frozen=True)
class ReductivePair:
    """Certified decomposition: h and m subspaces with [h, m] contained in m."""

    h_sub: Subspace
    m_sub: Subspace
    ambient_dim: int


def _pivot_solver(mats: Sequence[ExactMatrix]):
    """Choose coordinate rows making the basis square-invertible; exact inverse."""
    flat = [m.flatten() for m in mats]
    n = len(flat)
    dim = len(flat[0])
    chosen: list[int] = []
    rank_rows: list[list] = []
    for i in range(dim):
        cand = rank_rows + [[flat[j][i] for j in range(n)]]
        rows, _ = rref(cand)
        if len(rows) > len(rank_rows):
            chosen.append(i)
            rank_rows = [list(r) for r in rows]
        if len(chosen) == n:
            break
    if len(chosen) != n:
        raise ValueError("matrices are linearly dependent")
    square = ExactMatrix.from_rows([[flat[j][i] for j in range(n)] for i in chosen])
    # invert by solving square @ X = I column by column
    cols = []
    for k in range(n):
        e = [Q(1) if t == k else Q(0) for t in range(n)]
        sol = solve_linear(square, e)
        cols.append(sol.particular)
    inv = ExactMatrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)])
    return tuple(chosen), inv


@functools.lru_cache(maxsize=1)
def g2_basis() -> G2Basis:
    """Build and certify the 14-dimensional algebra spanned by the sl(3) and
    complement images inside so(7)."""
    els = [so6_to_so7(sl3_embed(p)) for p in sl3_param_basis()]
    els += [m_embed(v) for v in m_vector_basis()]
    for m in els:
        if not m.is_skew():
            raise AssertionError("basis element is not skew")
    span = Subspace.span_matrices(els)
    if span.dim != 14:
        raise AssertionError(f"expected span of dimension 14, got {span.dim}")
    pivots, inv = _pivot_solver(els)
    probe = G2Basis(tuple(els), tuple(range(8)), tuple(range(8, 14)), {}, pivots, inv)
    sc = {}
    for i in range(14):
        for j in range(i + 1, 14):
            c = probe.expand(bracket(els[i], els[j]))
            if c is None:
                raise AssertionError(f"bracket of basis elements {i},{j} escapes the span")
            sc[(i, j)] = c
    return G2Basis(tuple(els), tuple(range(8)), tuple(range(8, 14)), sc, pivots, inv)


def reductive_pair() -> ReductivePair:
    b = g2_basis()
    return ReductivePair(Subspace.span_matrices(b.h_elements),
                         Subspace.span_matrices(b.m_elements), 49)


def reductivity_certificate(basis: G2Basis | None = None) -> bool:
    """[h, m] lies in m, exactly, for every pair of basis elements."""
    basis = basis or g2_basis()
    msub = Subspace.span_matrices(basis.m_elements)
    return all(msub.contains_matrix(bracket(a, x))
               for a in basis.h_elements for x in basis.m_elements)


def non_symmetry_witness(basis: G2Basis | None = None):
    """A pair of complement elements whose bracket has a nonzero sl(3) part."""
    basis = basis or g2_basis()
    msub = Subspace.span_matrices(basis.m_elements)
    for i, x in enumerate(basis.m_elements):
        for j, y in enumerate(basis.m_elements):
            if i < j and not msub.contains_matrix(bracket(x, y)):
                return (i, j)
    return None


def orthogonality_certificate(basis: G2Basis | None = None) -> bool:
    """trace_form(h-block, m-block) = 0 on all basis pairs."""
    basis = basis or g2_basis()
    return all(trace_form(a, x) == 0
               for a in basis.h_elements for x in basis.m_elements)


def h_equivariance_certificate() -> bool:
    """[A, h(x)] = h(Ax) for all sl(3) basis A (6x6) and complement basis x."""
    for p in sl3_param_basis():
        a6 = sl3_embed(p)
        for v in m_vector_basis():
            lhs = bracket(a6, h_map(v))
            rhs = h_map(MVector.from_vector6(a6.apply(v.as_vector6())))
            if lhs != rhs:
                return False
    return True


def h_scale_certificate() -> Fraction:
    """The single scale s with so(6)-part of m_embed(v) = s * h_map(v), all basis v."""
    scale = None
    for v in m_vector_basis():
        part = so7_to_so6(m_embed(v))
        h = h_map(v)
        s = None
        for x, y in zip(part.flatten(), h.flatten()):
            if y != 0:
                cand = x / y
                if s is None:
                    s = cand
                elif s != cand:
                    raise AssertionError("so(6)-part is not proportional to h_map")
            elif x != 0:
                raise AssertionError("so(6)-part is not proportional to h_map")
        if scale is None:
            scale = s
        elif scale != s:
            raise AssertionError("scale differs between basis vectors")
    return scale


AXIS_TO_LAST = (0, 1, 2, 4, 5, 6, 3)  # permutation moving the axis slot to slot 7


def permute_matrix(m: ExactMatrix, perm: Sequence[int]) -> ExactMatrix:
    return ExactMatrix.from_rows([[m[perm[i], perm[j]] for j in range(len(perm))]
                                  for i in range(len(perm))])


def lift_scale_certificate() -> Fraction:
    """m_embed agrees with the lift after moving the axis slot last, up to one scale."""
    scale = None
    for v in m_vector_basis():
        lhs = permute_matrix(m_embed(v), AXIS_TO_LAST)
        rhs = lift_gtilde(ExactMatrix.zeros(6), v)
        s = None
        for x, y in zip(lhs.flatten(), rhs.flatten()):
            if y != 0:
                cand = x / y
                if s is None:
                    s = cand
                elif s != cand:
                    raise AssertionError("permuted m_embed not proportional to the lift")
            elif x != 0:
                raise AssertionError("permuted m_embed not proportional to the lift")
        if scale is None:
            scale = s
        elif scale != s:
            raise AssertionError("lift scale differs between basis vectors")
    return scale


@dataclass(frozen=True)
class IntertwinerResult:
    """Solution space of T rep1[i] = rep2[i] T, with an invertible witness if any."""

    kernel: tuple                 # basis of the solution space, each an ExactMatrix
    invertible: ExactMatrix | None

    @property
    def equivalent(self) -> bool:
        return self.invertible is not None


def _det(m: ExactMatrix) -> Fraction:
    n = m.rows
    rows = [list(m.row(i)) for i in range(n)]
    det = Q(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Q(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] * inv
            if f:
                rows[i] = [rows[i][j] - f * rows[c][j] for j in range(n)]
    return det


def intertwiner_solve(rep1: Sequence[ExactMatrix], rep2: Sequence[ExactMatrix]) -> IntertwinerResult:
    """Solve T rep1[i] = rep2[i] T for all i over the rationals.

    rep1 acts on Q^n, rep2 on Q^m; T is m x n.  The kernel basis is canonical;
    an invertible combination is searched deterministically (basis elements,
    then pairwise integer combinations).
    """
    if len(rep1) != len(rep2):
        raise ValueError("representations must list images of the same basis")
    n = rep1[0].rows
    m = rep2[0].rows
    rows = []
    for r1, r2 in zip(rep1, rep2):
        if r1.rows != n or r2.rows != m:
            raise ValueError("inconsistent representation dimensions")
        # (T r1 - r2 T)_{ij} = sum_kl T_kl (delta_ik (r1)_lj) - (r2)_ik T_kj
        for i in range(m):
            for j in range(n):
                row = [Q(0)] * (m * n)
                for l in range(n):
                    row[i * n + l] += r1[l, j]
                for k in range(m):
                    row[k * n + j] -= r2[i, k]
                rows.append(row)
    ker = kernel_basis(ExactMatrix.from_rows(rows))
    mats = [ExactMatrix(m, n, tuple(v)) for v in ker]
    witness = None
    if m == n:
        for t in mats:
            if _det(t) != 0:
                witness = t
                break
        if witness is None and len(mats) > 1:
            for i in range(len(mats)):
                for j in range(i + 1, len(mats)):
                    for c in (1, -1, 2, -2, 3):
                        t = mats[i] + mats[j].scale(c)
                        if _det(t) != 0:
                            witness = t
                            break
                    if witness is not None:
                        break
                if witness is not None:
                    break
    return IntertwinerResult(tuple(mats), witness)


def adjoint_rep_on_m(basis: G2Basis | None = None) -> list[ExactMatrix]:
    """Matrices of ad(A)|_m in the complement basis, for the 8 sl(3) basis elements."""
    basis = basis or g2_basis()
    out = []
    for a in basis.h_elements:
        cols = []
        for x in basis.m_elements:
            c = basis.expand(bracket(a, x))
            if c is None or any(c[k] != 0 for k in basis.h_indices):
                raise AssertionError("adjoint action leaves the complement block")
            cols.append([c[k] for k in basis.m_indices])
        out.append(ExactMatrix.from_rows([[cols[j][i] for j in range(6)] for i in range(6)]))
    return out


def canonical_rep6() -> list[ExactMatrix]:
    """The defining 6-dimensional action of the sl(3) basis."""
    return [sl3_embed(p) for p in sl3_param_basis()]


def sl3_canonical_rep3() -> list[ExactMatrix]:
    """The split form: 8 trace-free 3x3 matrices hat(x) + y on the same basis order."""
    out = []
    for p in sl3_param_basis():
        out.append(hat3(p.x) + p.y)
    return out


def dual_rep(rep: Sequence[ExactMatrix]) -> list[ExactMatrix]:
    return [(-m).transpose() for m in rep]
