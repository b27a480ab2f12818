"""The 7-dimensional cross product built two independent ways, the octonion
algebra it generates, and exact associativity tests for 3-planes.

Route one: the invariant 3-form of the certified algebra (threeform module).
Route two: the bracket of so(7) projected to the trace-form complement of the
algebra, pulled back through an equivariant identification of Q^7 with that
complement.  The two routes must agree up to a single nonzero rational, which
is computed and reported, never assumed.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .embeddings import G2Basis, g2_basis, intertwiner_solve
from .rational import ExactMatrix, Q, bracket, trace_form
from .subspaces import Subspace, gram_matrix, kernel_basis, solve_linear
from .threeform import (CrossProduct7, ThreeForm, invariant_threeform,
                        phi_cross_duality, so7_basis)


def dot(x: Sequence, y: Sequence) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(x, y)), Q(0))


@dataclass(frozen=True)
class TorsionCrossResult:
    """Pulled-back complement product and its exact ratio to the 3-form cross."""

    product: dict                  # (i, j), i<j -> 7-tuple (the product e_i * e_j)
    proportionality: Fraction      # product = proportionality * phi-cross
    complement_dim: int

    def cross(self, x: Sequence, y: Sequence) -> tuple:
        out = [Q(0)] * 7
        for (i, j), v in self.product.items():
            c = Fraction(x[i]) * Fraction(y[j]) - Fraction(x[j]) * Fraction(y[i])
            if c:
                for k in range(7):
                    out[k] += c * v[k]
        return tuple(out)


def torsion_cross(basis: G2Basis | None = None) -> TorsionCrossResult:
    """Pull the complement-projected so(7) bracket back to Q^7 and certify it
    is a nonzero rational multiple of the 3-form cross product."""
    basis = basis or g2_basis()

    # trace-form complement of the algebra inside so(7):
    # kernel of C = sum_k c_k E_k  |->  (tr(C A_i))_i over the algebra basis
    so7 = so7_basis()
    cond = ExactMatrix.from_rows(
        [[trace_form(e, a) for e in so7] for a in basis.elements])
    comp = []
    for k in kernel_basis(cond):
        m = ExactMatrix.zeros(7)
        for c, e in zip(k, so7):
            if c:
                m = m + e.scale(c)
        comp.append(m)
    if len(comp) != 7:
        raise ValueError(f"complement has dimension {len(comp)}, expected 7")

    # adjoint action of the algebra on the complement, in complement coordinates
    comp_mat = ExactMatrix.from_rows(
        [[comp[j].flatten()[i] for j in range(7)] for i in range(49)])

    def comp_coordinates(m: ExactMatrix) -> tuple:
        sol = solve_linear(comp_mat, list(m.flatten()))
        if sol.particular is None:
            raise ValueError("matrix is not in the complement")
        return sol.particular

    adjoint = []
    for a in basis.elements:
        cols = [comp_coordinates(bracket(a, c)) for c in comp]
        adjoint.append(ExactMatrix.from_rows(
            [[cols[j][i] for j in range(7)] for i in range(7)]))

    # equivariant identification of Q^7 with the complement
    res = intertwiner_solve(list(basis.elements), adjoint)
    if not res.equivalent:
        raise ValueError("no invertible intertwiner between the canonical "
                         "7-dimensional action and the complement action")
    t = res.invertible

    def to_complement(x: Sequence) -> ExactMatrix:
        coords = t.apply(x)
        m = ExactMatrix.zeros(7)
        for c, e in zip(coords, comp):
            if c:
                m = m + e.scale(c)
        return m

    t_inv = _invert(t)

    # project the bracket of complement elements back to the complement
    all_mat = ExactMatrix.from_rows(
        [[(comp + list(basis.elements))[j].flatten()[i] for j in range(21)]
         for i in range(49)])

    def project_pullback(m: ExactMatrix) -> tuple:
        sol = solve_linear(all_mat, list(m.flatten()))
        if sol.particular is None:
            raise ValueError("projection failed")
        return t_inv.apply(sol.particular[:7])

    cross_phi = phi_cross_duality(invariant_threeform(basis))
    product = {}
    ratio = None
    for i in range(7):
        ei = [Q(1) if s == i else Q(0) for s in range(7)]
        for j in range(i + 1, 7):
            ej = [Q(1) if s == j else Q(0) for s in range(7)]
            pij = project_pullback(bracket(to_complement(ei), to_complement(ej)))
            product[(i, j)] = pij
            ref = cross_phi.cross(ei, ej)
            for p, r in zip(pij, ref):
                if r != 0:
                    cand = p / r
                    if ratio is None:
                        ratio = cand
                    elif ratio != cand:
                        raise ValueError("pulled-back product is not proportional "
                                         "to the 3-form cross product")
                elif p != 0:
                    raise ValueError("pulled-back product is not proportional "
                                     "to the 3-form cross product")
    if ratio is None or ratio == 0:
        raise ValueError("pulled-back product vanishes")
    return TorsionCrossResult(product, ratio, len(comp))


def _invert(m: ExactMatrix) -> ExactMatrix:
    n = m.rows
    cols = []
    for k in range(n):
        e = [Q(1) if t == k else Q(0) for t in range(n)]
        sol = solve_linear(m, e)
        if sol.particular is None:
            raise ValueError("matrix not invertible")
        cols.append(sol.particular)
    return ExactMatrix.from_rows([[cols[j][i] for j in range(n)] for i in range(n)])


@dataclass(frozen=True)
class OctonionTable:
    """8x8 multiplication table over the rationals, slot 0 the unit.

    (a, x)(b, y) = (ab - <x, y>, ay + bx + x X y) for the supplied cross product.
    """

    table: tuple   # table[i][j] = 8-tuple, product of basis elements e_i e_j

    def multiply(self, p: Sequence, q: Sequence) -> tuple:
        out = [Q(0)] * 8
        for i in range(8):
            pi = Fraction(p[i]) if not isinstance(p[i], Fraction) else p[i]
            if pi == 0:
                continue
            for j in range(8):
                qj = Fraction(q[j]) if not isinstance(q[j], Fraction) else q[j]
                if qj == 0:
                    continue
                c = pi * qj
                for k in range(8):
                    out[k] += c * self.table[i][j][k]
        return tuple(out)

    def conjugate(self, p: Sequence) -> tuple:
        pq = [Fraction(v) if not isinstance(v, Fraction) else v for v in p]
        return (pq[0],) + tuple(-v for v in pq[1:])

    def norm_sq(self, p: Sequence) -> Fraction:
        return dot(p, p)

    def to_json_obj(self) -> dict:
        return {"kind": "octonion_table",
                "products": [[[{"num": str(c.numerator), "den": str(c.denominator)}
                               for c in self.table[i][j]]
                              for j in range(8)] for i in range(8)]}


def octonion_from_cross(cross: CrossProduct7) -> OctonionTable:
    """Build the 8-dimensional algebra and certify unit and basis squares."""
    table = []
    for i in range(8):
        row = []
        for j in range(8):
            row.append(_basis_product(cross, i, j))
        table.append(tuple(row))
    t = OctonionTable(tuple(table))
    for j in range(8):
        ej = tuple(Q(1) if s == j else Q(0) for s in range(8))
        if t.multiply(_unit(), ej) != ej or t.multiply(ej, _unit()) != ej:
            raise ValueError("unit certification failed")
    for i in range(1, 8):
        ei = tuple(Q(1) if s == i else Q(0) for s in range(8))
        sq = t.multiply(ei, ei)
        if sq != tuple([Q(-1)] + [Q(0)] * 7):
            raise ValueError(f"imaginary unit {i} does not square to -1")
    return t


def _unit() -> tuple:
    return tuple([Q(1)] + [Q(0)] * 7)


def _basis_product(cross: CrossProduct7, i: int, j: int) -> tuple:
    if i == 0 and j == 0:
        return _unit()
    if i == 0:
        return tuple(Q(1) if s == j else Q(0) for s in range(8))
    if j == 0:
        return tuple(Q(1) if s == i else Q(0) for s in range(8))
    x = [Q(1) if s == i - 1 else Q(0) for s in range(7)]
    y = [Q(1) if s == j - 1 else Q(0) for s in range(7)]
    real = -dot(x, y)
    imag = cross.cross(x, y)
    return (real,) + tuple(imag)


def associator(table: OctonionTable, p: Sequence, q: Sequence, r: Sequence) -> tuple:
    pq_r = table.multiply(table.multiply(p, q), r)
    p_qr = table.multiply(p, table.multiply(q, r))
    return tuple(a - b for a, b in zip(pq_r, p_qr))


def norm_multiplicativity_certificate(table: OctonionTable, n: int = 100,
                                      seed: int = 42) -> bool:
    """|pq|^2 = |p|^2 |q|^2 exactly on n seeded random rational pairs."""
    rng = np.random.default_rng(seed)
    for _ in range(n):
        p = _random_octonion(rng)
        q = _random_octonion(rng)
        if table.norm_sq(table.multiply(p, q)) != table.norm_sq(p) * table.norm_sq(q):
            return False
    return True


def alternativity_certificate(table: OctonionTable, n: int = 50, seed: int = 42) -> bool:
    """[p,p,q] = 0 = [q,p,p] exactly on random pairs, and the associator is
    alternating on all basis triples."""
    rng = np.random.default_rng(seed)
    zero = tuple([Q(0)] * 8)
    for _ in range(n):
        p = _random_octonion(rng)
        q = _random_octonion(rng)
        if associator(table, p, p, q) != zero or associator(table, q, p, p) != zero:
            return False
    basis = [tuple(Q(1) if s == i else Q(0) for s in range(8)) for i in range(8)]
    for i, j, k in itertools.combinations(range(8), 3):
        a = associator(table, basis[i], basis[j], basis[k])
        b = associator(table, basis[j], basis[i], basis[k])
        if a != tuple(-t for t in b):
            return False
    return True


def _random_octonion(rng) -> tuple:
    nums = rng.integers(-9, 10, size=8)
    dens = rng.integers(1, 7, size=8)
    return tuple(Fraction(int(n), int(d)) for n, d in zip(nums, dens))


def associative_test(p1: Sequence, p2: Sequence, p3: Sequence,
                     cross: CrossProduct7 | None = None) -> bool:
    """True iff the span of the three independent vectors is closed under the
    cross product (basis independent, exact)."""
    cross = cross or phi_cross_duality(invariant_threeform())
    plane = Subspace.span([list(p1), list(p2), list(p3)], 7)
    if plane.dim != 3:
        raise ValueError("vectors do not span a 3-plane")
    vecs = [p1, p2, p3]
    for i in range(3):
        for j in range(i + 1, 3):
            if not plane.contains(list(cross.cross(vecs[i], vecs[j]))):
                return False
    return True


def calibration_gap(p1: Sequence, p2: Sequence, p3: Sequence,
                    phi: ThreeForm | None = None) -> tuple[Fraction, Fraction]:
    """(phi(v1,v2,v3)^2, Gram determinant): equal iff the plane is associative,
    and the first is strictly smaller otherwise (exact calibration bound)."""
    phi = phi or invariant_threeform()
    val = phi(p1, p2, p3)
    g = gram_matrix([p1, p2, p3], dot)
    det = (g[0, 0] * (g[1, 1] * g[2, 2] - g[1, 2] * g[2, 1])
           - g[0, 1] * (g[1, 0] * g[2, 2] - g[1, 2] * g[2, 0])
           + g[0, 2] * (g[1, 0] * g[2, 1] - g[1, 1] * g[2, 0]))
    return val * val, det


@functools.lru_cache(maxsize=1)
def standard_cross() -> CrossProduct7:
    return phi_cross_duality(invariant_threeform())


@functools.lru_cache(maxsize=1)
def standard_octonions() -> OctonionTable:
    return octonion_from_cross(standard_cross())
