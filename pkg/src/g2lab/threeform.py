"""Exact alternating forms on Q^7: the invariant 3-form of the certified
algebra, its Hodge dual, the induced cross product, and wedge identities.

Components are stored on sorted index tuples in lexicographic order, so a
3-form is a 35-tuple and a 4-form a 35-tuple over the complementary quads.
Sign bookkeeping goes through `perm_sign` everywhere.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .embeddings import G2Basis, g2_basis
from .rational import ExactMatrix, Q
from .subspaces import Subspace, kernel_basis

TRIPLES = tuple(itertools.combinations(range(7), 3))
QUADS = tuple(itertools.combinations(range(7), 4))
TRIPLE_INDEX = {t: i for i, t in enumerate(TRIPLES)}
QUAD_INDEX = {q: i for i, q in enumerate(QUADS)}


def perm_sign(p: Sequence[int]) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def sort_with_sign(idx: Sequence[int]) -> tuple[tuple, int]:
    if len(set(idx)) != len(idx):
        return tuple(sorted(idx)), 0
    return tuple(sorted(idx)), perm_sign(idx)


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class ThreeForm:
    """Totally antisymmetric 3-tensor on Q^7, components on sorted triples."""

    components: tuple  # 35 Fractions, TRIPLES order

    def value(self, i: int, j: int, k: int) -> Fraction:
        t, s = sort_with_sign((i, j, k))
        return Q(0) if s == 0 else s * self.components[TRIPLE_INDEX[t]]

    def __call__(self, x: Sequence, y: Sequence, z: Sequence) -> Fraction:
        out = Q(0)
        for (i, j, k), c in zip(TRIPLES, self.components):
            if c == 0:
                continue
            out += c * _det3(x, y, z, i, j, k)
        return out

    def norm_sq(self) -> Fraction:
        return sum((c * c for c in self.components), Q(0))

    def normalize(self) -> "ThreeForm":
        """Scale so that the squared norm is 7 and the first nonzero component
        (lexicographic triple order) is positive."""
        n2 = self.norm_sq()
        if n2 == 0:
            raise ValueError("cannot normalize the zero form")
        s = _rational_sqrt(Q(7) / n2)
        if s is None:
            raise ValueError("norm cannot be scaled to 7 over the rationals")
        first = next(c for c in self.components if c != 0)
        if first < 0:
            s = -s
        return ThreeForm(tuple(s * c for c in self.components))

    def scale(self, s) -> "ThreeForm":
        return ThreeForm(tuple(Fraction(s) * c for c in self.components))

    def nonzero_items(self):
        return [(t, c) for t, c in zip(TRIPLES, self.components) if c != 0]

    def to_json_obj(self) -> dict:
        return {"kind": "three_form", "dimension": 7,
                "components": [{"indices": list(t),
                                "num": str(c.numerator), "den": str(c.denominator)}
                               for t, c in self.nonzero_items()]}


@dataclass(frozen=True)
class FourForm:
    components: tuple  # 35 Fractions, QUADS order

    def value(self, i, j, k, l) -> Fraction:
        q, s = sort_with_sign((i, j, k, l))
        return Q(0) if s == 0 else s * self.components[QUAD_INDEX[q]]

    def norm_sq(self) -> Fraction:
        return sum((c * c for c in self.components), Q(0))

    def nonzero_items(self):
        return [(q, c) for q, c in zip(QUADS, self.components) if c != 0]

    def to_json_obj(self) -> dict:
        return {"kind": "four_form", "dimension": 7,
                "components": [{"indices": list(q),
                                "num": str(c.numerator), "den": str(c.denominator)}
                               for q, c in self.nonzero_items()]}


def _det3(x, y, z, i, j, k) -> Fraction:
    return (x[i] * (y[j] * z[k] - y[k] * z[j])
            - x[j] * (y[i] * z[k] - y[k] * z[i])
            + x[k] * (y[i] * z[j] - y[j] * z[i]))


def action_on_threeforms(a: ExactMatrix) -> ExactMatrix:
    """35x35 matrix of the so(7) action (A.phi)(x,y,z) = -phi(Ax,y,z) - ... ."""
    if a.rows != 7 or a.cols != 7:
        raise ValueError("expected a 7x7 matrix")
    ent = [[Q(0)] * 35 for _ in range(35)]

    def add(row, idx, coef):
        t, s = sort_with_sign(idx)
        if s != 0 and coef != 0:
            ent[row][TRIPLE_INDEX[t]] += s * coef

    for row, (i, j, k) in enumerate(TRIPLES):
        for m in range(7):
            add(row, (m, j, k), -a[m, i])
            add(row, (i, m, k), -a[m, j])
            add(row, (i, j, m), -a[m, k])
    return ExactMatrix.from_rows(ent)


def invariant_threeform(basis: G2Basis | None = None) -> ThreeForm:
    """The unique (up to scale) 3-form annihilated by the whole algebra,
    normalized to squared norm 7 with the fixed sign convention."""
    if basis is None:
        return _invariant_threeform_cached()
    return _invariant_threeform_of(basis)


@functools.lru_cache(maxsize=1)
def _invariant_threeform_cached() -> ThreeForm:
    return _invariant_threeform_of(g2_basis())


def _invariant_threeform_of(basis: G2Basis) -> ThreeForm:
    rows = []
    for el in basis.elements:
        op = action_on_threeforms(el)
        rows.extend(op.row(i) for i in range(35))
    ker = kernel_basis(ExactMatrix.from_rows(rows))
    if len(ker) != 1:
        raise ValueError(f"invariance kernel has dimension {len(ker)}, not 1: "
                         "the input basis does not span a copy of the 14-dim algebra")
    return ThreeForm(tuple(ker[0])).normalize()


def so7_basis() -> list[ExactMatrix]:
    """Elementary skew basis E_ij - E_ji, i < j, of so(7) (21 elements)."""
    out = []
    for i in range(7):
        for j in range(i + 1, 7):
            ent = [[Q(0)] * 7 for _ in range(7)]
            ent[i][j] = Q(1)
            ent[j][i] = Q(-1)
            out.append(ExactMatrix.from_rows(ent))
    return out


def stabilizer_in_so7(phi: ThreeForm) -> Subspace:
    """{A in so(7) : A.phi = 0} as a subspace of flattened 7x7 matrices."""
    basis = so7_basis()
    # column c = action of basis[c] applied to phi
    cols = []
    for b in basis:
        op = action_on_threeforms(b)
        cols.append(op.apply(phi.components))
    mat = ExactMatrix.from_rows([[cols[c][t] for c in range(21)] for t in range(35)])
    ker = kernel_basis(mat)
    flats = []
    for coeffs in ker:
        m = ExactMatrix.zeros(7)
        for c, b in zip(coeffs, basis):
            if c:
                m = m + b.scale(c)
        flats.append(m.flatten())
    return Subspace.span(flats, 49) if flats else Subspace.span([], 49)


def star_phi(phi: ThreeForm) -> FourForm:
    """Hodge dual w.r.t. the Euclidean metric and the orientation e1^...^e7."""
    comps = [Q(0)] * 35
    for q in QUADS:
        comp = tuple(i for i in range(7) if i not in q)
        c = phi.components[TRIPLE_INDEX[comp]]
        if c:
            comps[QUAD_INDEX[q]] = perm_sign(comp + q) * c
    return FourForm(tuple(comps))


def wedge_3_4(alpha: ThreeForm, beta: FourForm) -> Fraction:
    """Coefficient of the volume form e1^...^e7 in alpha ^ beta."""
    out = Q(0)
    for t, c in alpha.nonzero_items():
        comp = tuple(i for i in range(7) if i not in t)
        out += perm_sign(t + comp) * c * beta.components[QUAD_INDEX[comp]]
    return out


@dataclass(frozen=True)
class CrossProduct7:
    """Structure constants of the 7-dimensional cross product: (x X y)_k
    = sum_{ij} lambda_ijk x_i y_j with lambda_ijk = phi_ijk."""

    phi: ThreeForm

    def cross(self, x: Sequence, y: Sequence) -> tuple:
        xq = [Fraction(v) if not isinstance(v, Fraction) else v for v in x]
        yq = [Fraction(v) if not isinstance(v, Fraction) else v for v in y]
        out = [Q(0)] * 7
        for (i, j, k), c in self.phi.nonzero_items():
            # all six orderings of the triple contribute
            out[k] += c * (xq[i] * yq[j] - xq[j] * yq[i])
            out[j] += c * (xq[k] * yq[i] - xq[i] * yq[k])
            out[i] += c * (xq[j] * yq[k] - xq[k] * yq[j])
        return tuple(out)

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self.phi.value(i, j, k)

    def to_json_obj(self) -> dict:
        obj = self.phi.to_json_obj()
        obj["kind"] = "cross_product"
        return obj


def phi_cross_duality(phi: ThreeForm) -> CrossProduct7:
    """The cross product with <x X y, z> = phi(x, y, z)."""
    return CrossProduct7(phi)
