"""Condition checkers for the quotient data of a symmetry-reduced 7-metric.

Given a 6-metric with an adapted split, a nowhere-zero function u, a potential
1-form A and the block data (b, B), the checkers evaluate, in an adapted
orthonormal frame at sample points:

  (a) torsion of the supplied compatible connection against the h-twist,
  (b) dA(X, Y) = 2 u^-1 <gamma X, Y>,
  (c) metricity and torsion-freeness of (connection + h o gamma),

together with the blockwise forms of (b) and their rescaled-metric variants.
Where two algebraically equivalent expressions exist they are computed through
numerically distinct routes (separate stencil targets, or directional versus
coordinate stencils), so each pair serves as its own oracle.

All block quantities (b, B) are supplied in adapted-frame components; the
frame is the blockwise Cholesky frame of the metric, which fixes the
plus/minus identification positionally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .curvature import christoffel
from .fields import (Domain, SplitSpec, StencilConfig, exterior_d, fd_gradient,
                     fd_partial, hodge_restricted, restrict_two_form)
from .modeldata import h6

SPLIT6 = SplitSpec(blocks=(("plus", (0, 1, 2)), ("minus", (3, 4, 5))))


@dataclass(frozen=True)
class KillingData:
    """Quotient data on a 6-dimensional box.

    connection: "levi-civita" or a callable returning Gamma[c, a, b] in
    coordinates.  b_plus and b_hom are the block sections in adapted-frame
    components (b_hom trace-free and self-adjoint at samples).
    """

    metric: Callable[[np.ndarray], np.ndarray]
    u: Callable[[np.ndarray], float]
    a_form: Callable[[np.ndarray], np.ndarray]
    b_plus: Callable[[np.ndarray], np.ndarray]
    b_hom: Callable[[np.ndarray], np.ndarray]
    domain: Domain
    split: SplitSpec = SPLIT6
    connection: object = "levi-civita"

    def gamma_info(self, x: np.ndarray, cfg: StencilConfig) -> dict:
        """Frame-component data entering the twist endomorphism at a point."""
        g = np.asarray(self.metric(x), dtype=float)
        frame = adapted_frame(g, self.split)
        u = float(self.u(x))
        if u == 0.0:
            raise ValueError(f"u vanishes at {x}")
        du = fd_gradient(self.u, x, cfg)
        grad_frame = frame.T @ du     # frame components of the gradient
        return {"g": g, "frame": frame, "u": u, "du": du,
                "grad_frame": grad_frame,
                "b": np.asarray(self.b_plus(x), dtype=float),
                "B": np.asarray(self.b_hom(x), dtype=float)}


def adapted_frame(g: np.ndarray, split: SplitSpec) -> np.ndarray:
    """Columns = orthonormal frame respecting the split (blockwise Cholesky).

    Requires the metric to be block diagonal w.r.t. the split.
    """
    plus = split.indices("plus")
    minus = split.indices("minus")
    if float(np.max(np.abs(g[np.ix_(plus, minus)]))) > 1e-9:
        raise ValueError("metric does not respect the split")
    f = np.zeros((6, 6))
    for cols, block in ((range(0, 3), plus), (range(3, 6), minus)):
        l = np.linalg.cholesky(g[np.ix_(block, block)])
        finv = np.linalg.inv(l).T
        for j, cj in enumerate(cols):
            for i, ci in enumerate(block):
                f[ci, cj] = finv[i, j]
    return f


def _hat(w: np.ndarray) -> np.ndarray:
    return np.array([[0.0, -w[2], w[1]],
                     [w[2], 0.0, -w[0]],
                     [-w[1], w[0], 0.0]])


def gamma_expanded(info: dict) -> np.ndarray:
    """Blockwise twist endomorphism in frame components:
    gamma(X)_+ = b x X_+ - B X_- - (1/2) u^-1 (grad u)_- x X_+ - (1/2) u^-1 (grad u)_+ x X_-,
    gamma(X)_- = B X_+ + b x X_- - (1/2) u^-1 (grad u)_+ x X_+ + (1/2) u^-1 (grad u)_- x X_-.
    """
    u = info["u"]
    gp, gm = info["grad_frame"][:3], info["grad_frame"][3:]
    b, bb = info["b"], info["B"]
    out = np.zeros((6, 6))
    out[:3, :3] = _hat(b) - 0.5 / u * _hat(gm)
    out[:3, 3:] = -bb - 0.5 / u * _hat(gp)
    out[3:, :3] = bb - 0.5 / u * _hat(gp)
    out[3:, 3:] = _hat(b) + 0.5 / u * _hat(gm)
    return out


def gamma_unexpanded(info: dict) -> np.ndarray:
    """The same endomorphism assembled as the adjoint-bundle section minus
    u^-1 h(grad u), through the exactly certified h constants."""
    u = info["u"]
    b, bb = info["b"], info["B"]
    bcal = np.zeros((6, 6))
    bcal[:3, :3] = _hat(b)
    bcal[:3, 3:] = -bb
    bcal[3:, :3] = bb
    bcal[3:, 3:] = _hat(b)
    return bcal - h6(info["grad_frame"]) / u


def gamma_field(data: KillingData, cfg: StencilConfig) -> Callable[[np.ndarray], np.ndarray]:
    """The twist endomorphism as a frame-component field; raises if the two
    assembly routes disagree beyond numerical noise."""
    def gamma(x: np.ndarray) -> np.ndarray:
        info = data.gamma_info(x, cfg)
        ge = gamma_expanded(info)
        gu = gamma_unexpanded(info)
        if float(np.max(np.abs(ge - gu))) > 1e-9 * (1 + float(np.max(np.abs(ge)))):
            raise AssertionError("blockwise and unexpanded twist assemblies disagree")
        return ge
    return gamma


def gamma_pair_residual(data: KillingData, samples, cfg: StencilConfig) -> float:
    worst = 0.0
    for x in samples:
        info = data.gamma_info(x, cfg)
        worst = max(worst, float(np.max(np.abs(gamma_expanded(info)
                                               - gamma_unexpanded(info)))))
    return worst


def _connection_at(data: KillingData, x: np.ndarray, cfg: StencilConfig) -> np.ndarray:
    if callable(data.connection):
        return np.asarray(data.connection(x), dtype=float)
    if data.connection == "levi-civita":
        return christoffel(data.metric, x, cfg)
    raise ValueError(f"unknown connection spec {data.connection!r}")


def killing_conditions_check(data: KillingData, samples, cfg: StencilConfig) -> dict:
    """Residuals of the three structure conditions at the samples, evaluated
    on adapted-frame pairs with honest frame-field brackets."""
    def frame_field(q: np.ndarray) -> np.ndarray:
        return adapted_frame(np.asarray(data.metric(q), dtype=float), data.split)

    worst_a = worst_b = worst_metr = 0.0
    for x in samples:
        info = data.gamma_info(x, cfg)
        fr = info["frame"]
        e = np.linalg.inv(fr)
        gam = _connection_at(data, x, cfg)
        gamma_f = gamma_expanded(info)
        # dframe[d, i, j] = d_d frame[i, j]
        dframe = np.array([fd_partial(frame_field, x, d, cfg) for d in range(6)])

        # nabla_{f_a} f_b and [f_a, f_b], in coordinates
        nabla = np.zeros((6, 6, 6))
        lie = np.zeros((6, 6, 6))
        for a in range(6):
            # d_along_a[k, b] = f_a^d d_d frame[k, b]
            d_along_a = np.einsum('d,dkb->kb', fr[:, a], dframe)
            for b in range(6):
                nabla[a, b] = d_along_a[:, b] + np.einsum('kcd,c,d->k',
                                                          gam, fr[:, a], fr[:, b])
        for a in range(6):
            d_along_a = np.einsum('d,dkb->kb', fr[:, a], dframe)
            for b in range(6):
                d_along_b = np.einsum('d,dkb->kb', fr[:, b], dframe)
                lie[a, b] = d_along_a[:, b] - d_along_b[:, a]

        da_comps = exterior_d(data.a_form, x, 1, cfg)
        da_mat = restrict_two_form(da_comps, 6, range(6), range(6))
        u = info["u"]

        for a in range(6):
            for b in range(6):
                if a == b:
                    continue
                t_frame = e @ (nabla[a, b] - nabla[b, a] - lie[a, b])
                hterm = h6(gamma_f[:, a])[:, b] - h6(gamma_f[:, b])[:, a]
                worst_a = max(worst_a, float(np.max(np.abs(t_frame + hterm))))
                da_ab = float(fr[:, a] @ da_mat @ fr[:, b])
                rhs = 2.0 / u * gamma_f[b, a]
                worst_b = max(worst_b, abs(da_ab - rhs))
            # metricity of (nabla + h o gamma): its frame connection form is skew
            omega = np.zeros((6, 6))
            for b in range(6):
                omega[:, b] = e @ nabla[a, b]
            omega = omega + h6(gamma_f[:, a])
            worst_metr = max(worst_metr, float(np.max(np.abs(omega + omega.T))))
    return {"torsion_vs_twist": worst_a, "potential_equation": worst_b,
            "corrected_metricity": worst_metr, "corrected_torsion": worst_a}


def da_conditions_check(data: KillingData, samples, cfg: StencilConfig) -> dict:
    """Blockwise potential equations, in both the plain and the rescaled form.

    plus_plus:   (dA)++ = u^-1 *_+ alpha
    minus_minus: (dA)-- = u^-1 *_- (alpha + 2 u^-1 du)      [plain pairing]
                 (dA)-- = -*^1_- (d(u^-2) - u^-2 alpha)     [rescaled pairing]
    mixed:       dA(X+, Y-) = 2 u^-1 (<B X+, Y-> - (1/2) u^-1 det((grad u)+, X+, Y-))
    with alpha = <2b - u^-1 (grad u)_-, .> .  The two minus-block routes
    differentiate u and u^-2 through separate stencils, so their agreement is
    a genuine mutual oracle with an O(h^2) discrepancy.
    """
    worst_pp = worst_mm_plain = worst_mm_resc = worst_mixed = worst_pair = 0.0
    eps = _eps3()
    for x in samples:
        info = data.gamma_info(x, cfg)
        fr, u = info["frame"], info["u"]
        gp, gm = info["grad_frame"][:3], info["grad_frame"][3:]
        alpha = 2.0 * info["b"] - gm / u

        da_comps = exterior_d(data.a_form, x, 1, cfg)
        da_mat = restrict_two_form(da_comps, 6, range(6), range(6))
        da_f = fr.T @ da_mat @ fr   # frame components

        s_plus = data.split.orientation("plus")
        s_minus = data.split.orientation("minus")
        rhs_pp = s_plus / u * np.einsum('m,mij->ij', alpha, eps)
        worst_pp = max(worst_pp, float(np.max(np.abs(da_f[:3, :3] - rhs_pp))))

        rhs_mm_plain = s_minus / u * np.einsum('m,mij->ij', alpha + 2.0 / u * gm, eps)

        du2 = fd_gradient(lambda q: float(data.u(q)) ** -2, x, cfg)
        du2_frame = (fr.T @ du2)[3:]
        twisted6 = np.zeros(6)
        twisted6[3:] = du2_frame - alpha / u ** 2
        g1 = np.eye(6)
        g1[3:, 3:] *= u ** 2
        star1 = hodge_restricted(twisted6, 1, 6, (3, 4, 5), g1, orientation=s_minus)
        rhs_mm_resc = -restrict_two_form(star1, 6, (3, 4, 5), (3, 4, 5))

        worst_mm_plain = max(worst_mm_plain,
                             float(np.max(np.abs(da_f[3:, 3:] - rhs_mm_plain))))
        worst_mm_resc = max(worst_mm_resc,
                            float(np.max(np.abs(da_f[3:, 3:] - rhs_mm_resc))))
        worst_pair = max(worst_pair,
                         float(np.max(np.abs(rhs_mm_plain - rhs_mm_resc))))

        bb = info["B"]
        rhs_mixed = 2.0 / u * (bb.T - 0.5 / u * np.einsum('m,mij->ij', gp, eps))
        worst_mixed = max(worst_mixed, float(np.max(np.abs(da_f[:3, 3:] - rhs_mixed))))
    return {"plus_plus": worst_pp, "minus_minus": worst_mm_plain,
            "minus_minus_rescaled": worst_mm_resc, "mixed": worst_mixed,
            "route_agreement": worst_pair}


def _eps3() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[i, k, j] = -1.0
    return eps


@dataclass(frozen=True)
class RhoConnectionSetup:
    """Data for the anchored-connection torsion oracle on a flat 6-box.

    gamma_tm and gamma_one are the two components of the Hom(E, TM) section;
    nabla_gamma (coordinate Christoffels) and nabla_one (the pointwise
    derivative along the axis section) default to zero.
    """

    u: Callable[[np.ndarray], float]
    a_form: Callable[[np.ndarray], np.ndarray]
    gamma_tm: Callable[[np.ndarray], np.ndarray]          # 6x6
    gamma_one: Callable[[np.ndarray], np.ndarray]         # 6
    domain: Domain
    nabla_gamma: Callable[[np.ndarray], np.ndarray] | None = None
    nabla_one: Callable[[np.ndarray], np.ndarray] | None = None


def _directional(f: Callable, x: np.ndarray, v: np.ndarray, h: float):
    """(f(x + h v) - f(x - h v)) / 2h: a stencil along v, not assembled from
    coordinate partials, hence numerically independent of them."""
    return (np.asarray(f(x + h * v), float) - np.asarray(f(x - h * v), float)) / (2 * h)


def rho_torsion_check(setup: RhoConnectionSetup, sections: Sequence, samples,
                      cfg: StencilConfig) -> dict:
    """Two independent computations of the anchored-connection torsion.

    Direct route: antisymmetrized covariant derivatives of honest section
    fields (directional stencils along the section values) minus their bracket
    (coordinate stencils).  Closed route: the torsion formula, pointwise in
    the section values.  The two agree up to stencil truncation; the reported
    discrepancy therefore decreases at the stencil order.
    """
    worst_xy = 0.0
    worst_x1 = 0.0
    for x in samples:
        gam = (np.asarray(setup.nabla_gamma(x), float)
               if setup.nabla_gamma is not None else np.zeros((6, 6, 6)))
        gtm = np.asarray(setup.gamma_tm(x), float)
        g1 = np.asarray(setup.gamma_one(x), float)
        u = float(setup.u(x))
        du = fd_gradient(setup.u, x, cfg)
        da = restrict_two_form(exterior_d(setup.a_form, x, 1, cfg), 6,
                               range(6), range(6))

        for si in range(len(sections)):
            xs = sections[si]
            xv = np.asarray(xs(x), float)
            gx = gtm @ xv
            for sj in range(si + 1, len(sections)):
                ys = sections[sj]
                yv = np.asarray(ys(x), float)
                gy = gtm @ yv

                # direct: directional covariant derivatives, coordinate bracket
                nab_xy = _directional(ys, x, xv, cfg.h) \
                    + np.einsum('kcd,c,d->k', gam, xv, yv)
                nab_yx = _directional(xs, x, yv, cfg.h) \
                    + np.einsum('kcd,c,d->k', gam, yv, xv)
                jac_y = np.array([fd_partial(ys, x, d, cfg) for d in range(6)])
                jac_x = np.array([fd_partial(xs, x, d, cfg) for d in range(6)])
                lie = xv @ jac_y - yv @ jac_x
                direct_tm = (nab_xy + h6(gx) @ yv) - (nab_yx + h6(gy) @ xv) - lie
                da_xy = float(xv @ da @ yv)
                direct_ax = u * da_xy - float(gx @ yv) + float(gy @ xv)

                # closed: tensorial torsion of the connection plus the twist terms
                t_tensor = np.einsum('kcd,c,d->k', gam, xv, yv) \
                    - np.einsum('kcd,c,d->k', gam, yv, xv)
                closed_tm = t_tensor + h6(gx) @ yv - h6(gy) @ xv
                closed_ax = u * da_xy - float(gx @ yv) + float(gy @ xv)

                worst_xy = max(worst_xy,
                               float(np.max(np.abs(direct_tm - closed_tm))),
                               abs(direct_ax - closed_ax))

            # (X, axis) pair: the axis direction has zero anchor, so the
            # tangent parts agree pointwise; the scalar part differs only in
            # the X(u) stencil (directional vs assembled from the gradient)
            xu_dir = float(_directional(setup.u, x, xv, cfg.h))
            xu_coord = float(xv @ du)
            direct_ax = xu_dir / u + float(g1 @ xv)
            closed_ax = xu_coord / u + float(g1 @ xv)
            worst_x1 = max(worst_x1, abs(direct_ax - closed_ax))
    return {"tangent_pairs": worst_xy, "axis_pairs": worst_x1}
