"""Almost-Hermitian geometry of hypersurfaces in flat 7-space.

The almost complex structure on a nondegenerate hypersurface is J(X) = n x X
with n the unit normal and x the certified 7-dimensional cross product.  The
checks report, from stencils only: the nearly-Kahler defect sup |(nabla_X J) X|,
the full defect sup |nabla J|, and the umbilic/geodesic defects of the shape
operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .curvature import christoffel
from .fields import Domain, StencilConfig, fd_partial
from .modeldata import cross7


@dataclass(frozen=True)
class Immersion:
    """A parametrized hypersurface patch y -> F(y) in R^7."""

    chart: Callable[[np.ndarray], np.ndarray]
    domain: Domain
    name: str = ""


def affine_plane(point=None) -> Immersion:
    """The hyperplane spanned by slots (1, 2, 3, 5, 6, 7): geodesic, so its
    induced structure is parallel."""
    base = np.zeros(7) if point is None else np.asarray(point, float)
    cols = np.zeros((7, 6))
    for j, slot in enumerate((0, 1, 2, 4, 5, 6)):
        cols[slot, j] = 1.0

    def chart(y: np.ndarray) -> np.ndarray:
        return base + cols @ y

    return Immersion(chart, Domain(lo=(-0.5,) * 6, hi=(0.5,) * 6), "plane")


def unit_sphere() -> Immersion:
    """Graph chart of the unit 6-sphere over a patch away from the equator."""
    def chart(y: np.ndarray) -> np.ndarray:
        r2 = float(y @ y)
        if r2 >= 1.0:
            raise ValueError("chart leaves the hemisphere")
        return np.concatenate([y, [np.sqrt(1.0 - r2)]])

    return Immersion(chart, Domain(lo=(-0.28,) * 6, hi=(0.28,) * 6), "sphere")


def ellipsoid(axis: float = 2.0) -> Immersion:
    """The sphere chart stretched by `axis` along the last slot: neither
    umbilical nor nearly-Kahler."""
    sphere = unit_sphere()

    def chart(y: np.ndarray) -> np.ndarray:
        p = sphere.chart(y)
        p[6] *= axis
        return p

    return Immersion(chart, sphere.domain, "ellipsoid")


def hypersurface_checks(imm: Immersion, samples, cfg: StencilConfig) -> dict:
    """Residual report at the samples; all derivatives by stencils."""
    def tangent(y: np.ndarray) -> np.ndarray:
        return np.column_stack([fd_partial(imm.chart, y, a, cfg) for a in range(6)])

    def induced_metric(y: np.ndarray) -> np.ndarray:
        t = tangent(y)
        return t.T @ t

    def normal(y: np.ndarray) -> np.ndarray:
        t = tangent(y)
        _, s, vt = np.linalg.svd(t.T, full_matrices=True)
        if s[-1] < 1e-8:
            raise ValueError("degenerate induced metric")
        n = vt[-1]
        if np.linalg.det(np.column_stack([t, n])) < 0:
            n = -n
        return n

    def j_matrix(y: np.ndarray) -> np.ndarray:
        t = tangent(y)
        n = normal(y)
        cols = []
        for b in range(6):
            jb, *_ = np.linalg.lstsq(t, cross7(n, t[:, b]), rcond=None)
            cols.append(jb)
        return np.column_stack(cols)

    worst_nk = worst_k = worst_umb = worst_geo = 0.0
    for y in samples:
        t = tangent(y)
        g = t.T @ t
        if np.linalg.det(g) < 1e-10:
            raise ValueError("degenerate induced metric")
        n = normal(y)
        jmat = j_matrix(y)
        gam = christoffel(induced_metric, y, cfg)
        dj = np.array([fd_partial(j_matrix, y, c, cfg) for c in range(6)])
        # (nabla_c J)^a_b
        ndj = dj + np.einsum('acd,db->cab', gam, jmat) \
            - np.einsum('dcb,ad->cab', gam, jmat)

        l = np.linalg.cholesky(g)
        e6 = l.T                      # coframe rows
        f6 = np.linalg.inv(e6)        # frame columns
        ndj_f = np.einsum('cg,ae,ceb,bf->gaf', f6, e6, ndj, f6)
        # nearly-Kahler defect: symmetrization over the direction and argument slots
        sym = ndj_f + np.transpose(ndj_f, (2, 1, 0))
        worst_nk = max(worst_nk, float(np.max(np.abs(sym))) / 2.0)
        worst_k = max(worst_k, float(np.max(np.abs(ndj_f))))

        # second fundamental form and shape operator
        ddf = np.array([fd_partial(tangent, y, c, cfg) for c in range(6)])
        ii = np.einsum('k,ckb->cb', n, ddf)
        shape = np.linalg.solve(g, ii)
        shape_f = e6 @ shape @ f6
        worst_geo = max(worst_geo, float(np.linalg.norm(shape_f)))
        traceless = shape_f - np.trace(shape_f) / 6.0 * np.eye(6)
        worst_umb = max(worst_umb, float(np.linalg.norm(traceless)))
    return {"nearly_kahler": worst_nk, "kahler": worst_k,
            "umbilic": worst_umb, "geodesic": worst_geo}


def j_squared_residual(imm: Immersion, samples, cfg: StencilConfig) -> float:
    """Sanity: J^2 = -identity on the tangent space, up to stencil noise."""
    worst = 0.0
    for y in samples:
        t = np.column_stack([fd_partial(imm.chart, y, a, cfg) for a in range(6)])
        _, s, vt = np.linalg.svd(t.T, full_matrices=True)
        n = vt[-1]
        cols = []
        for b in range(6):
            jb, *_ = np.linalg.lstsq(t, cross7(n, t[:, b]), rcond=None)
            cols.append(jb)
        jmat = np.column_stack(cols)
        worst = max(worst, float(np.max(np.abs(jmat @ jmat + np.eye(6)))))
    return worst
