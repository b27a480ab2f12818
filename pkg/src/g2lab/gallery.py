"""Named example registry: concrete data sets with known verdicts, consumed
by the check suites and the tests.

The positive 7-dimensional family is built around one coherent data set: the
harmonic pole v = 1 + 1/(2r) on the minus block with its string potential.
That single pair simultaneously satisfies the product-monopole hypothesis of
the first construction, the blockwise potential equations of the quotient
data, and the twisted-pair equations with vanishing twist.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .fields import Domain
from .g2construct import (CoframeSigns, G2MetricBundle, MonopoleData, N_SPLIT,
                          flat_product_metric, g2_build_thm1, g2_build_thm2)
from .gibbons import (CENTER_MARGIN, STRING_MARGIN, GHData, dirac_potential,
                      dirac_string_exclusion, margined,
                      monopole_center_exclusion, spatial_domain, v_flat_quotient,
                      v_nonharmonic, v_taub_nut)
from .killing import KillingData, RhoConnectionSetup
from .modeldata import h6


def base_domain6(box_plus: float = 1.0, box_minus: float = 1.2) -> Domain:
    """6-box with the monopole center and string removed from the minus block."""
    center = margined(monopole_center_exclusion, CENTER_MARGIN)
    string = margined(dirac_string_exclusion, STRING_MARGIN)
    return Domain(lo=(-box_plus,) * 3 + (-box_minus,) * 3,
                  hi=(box_plus,) * 3 + (box_minus,) * 3,
                  exclusions=(lambda x: center(x[3:]), lambda x: string(x[3:])))


def monopole_potential6() -> Callable[[np.ndarray], np.ndarray]:
    """The pair potential on the 6-base: minus-block components with
    dA = -*_minus dv for the pole functions below."""
    dirac = dirac_potential(0.5)

    def a(x: np.ndarray) -> np.ndarray:
        out = np.zeros(6)
        out[3:] = -dirac(x[3:])
        return out

    return a


def taub_nut_v6(x: np.ndarray) -> float:
    return v_taub_nut(x[3:])


def flat_quotient_v6(x: np.ndarray) -> float:
    return v_flat_quotient(x[3:])


# ---------------------------------------------------------------- classical GH

def gh_flat_example() -> GHData:
    """V = 1/(2r): the build is locally flat."""
    return GHData(v=v_flat_quotient, a=dirac_potential(0.5), domain=spatial_domain())


def gh_taub_nut_example() -> GHData:
    """V = 1 + 1/(2r): Ricci-flat with curvature bounded away from zero."""
    return GHData(v=v_taub_nut, a=dirac_potential(0.5), domain=spatial_domain())


def gh_nonharmonic_example() -> GHData:
    """V = 1 + r^2: not harmonic, so the build is not Ricci-flat."""
    return GHData(v=v_nonharmonic, a=dirac_potential(0.5), domain=spatial_domain())


GH_REFERENCE_POINTS = [np.array([0.1, 0.55, 0.35, 0.4]),
                       np.array([-0.3, 0.45, -0.5, 0.5]),
                       np.array([0.2, -0.6, 0.4, 0.45])]


# ------------------------------------------------------------------ 7-bundles

def thm1_flat_bundle(**kwargs) -> G2MetricBundle:
    mono = MonopoleData(v=lambda x: 1.0, a=lambda x: np.zeros(6))
    dom = Domain(lo=(-1.0,) * 6, hi=(1.0,) * 6)
    return g2_build_thm1(flat_product_metric, N_SPLIT, mono, dom, **kwargs)


def thm1_taub_nut_bundle(signs: CoframeSigns = CoframeSigns()) -> G2MetricBundle:
    mono = MonopoleData(v=taub_nut_v6, a=monopole_potential6())
    return g2_build_thm1(flat_product_metric, N_SPLIT, mono, base_domain6(),
                         signs=signs)


def thm1_broken_monopole_bundle(eps: float = 0.1) -> G2MetricBundle:
    """v perturbed off the monopole equation by a factor (1 + eps x4)."""
    def v(x: np.ndarray) -> float:
        return taub_nut_v6(x) * (1.0 + eps * float(x[3]))

    mono = MonopoleData(v=v, a=monopole_potential6())
    return g2_build_thm1(flat_product_metric, N_SPLIT, mono, base_domain6())


def thm2_taub_nut_bundle() -> G2MetricBundle:
    """The same pair through the weak-pair builder with zero twist; the base
    has B = 0 and a plus-constant pole, the regime where the two builders
    coincide."""
    mono = MonopoleData(v=taub_nut_v6, a=monopole_potential6(), alpha=None)
    return g2_build_thm2(flat_product_metric, N_SPLIT, mono, base_domain6())


def thm2_mismatched_alpha_bundle(eps: float = 0.1):
    """A potential carrying a plus-block piece consistent only with a nonzero
    twist, over a flat product base whose true twist vanishes.

    Returns (bundle, monopole data); the weak residual against the base's
    alpha = 0 and the built torsion both stay bounded below.
    """
    base_a = monopole_potential6()

    def a(x: np.ndarray) -> np.ndarray:
        out = base_a(x)
        out[1] += eps * float(x[2])   # adds eps dx2(x3) -> (dA)++ = -eps dx2^dx3
        return out

    def fake_alpha(x: np.ndarray) -> np.ndarray:
        # the twist that the ++ equation would require of this potential
        u = taub_nut_v6(x) ** -0.5
        return np.array([-eps * u, 0.0, 0.0])

    mono = MonopoleData(v=taub_nut_v6, a=a, alpha=fake_alpha)
    bundle = g2_build_thm2(flat_product_metric, N_SPLIT, mono, base_domain6())
    return bundle, mono


def warped_control_bundle() -> G2MetricBundle:
    """A generic warped 7-metric: curvature operators leave the model algebra."""
    def metric(p: np.ndarray) -> np.ndarray:
        g = np.eye(7)
        g[0, 0] = 1.0 + 0.4 * np.sin(p[1]) ** 2
        g[1, 1] = 1.0 + 0.4 * p[2] ** 2
        g[2, 2] = 1.0 + 0.4 * np.cos(p[3]) ** 2
        g[4, 4] = 1.0 + 0.3 * p[5] ** 2
        g[0, 4] = g[4, 0] = 0.15 * p[6]
        return g

    def coframe(p: np.ndarray) -> np.ndarray:
        return np.linalg.cholesky(metric(p)).T

    dom = Domain(lo=(-1.0,) * 7, hi=(1.0,) * 7)
    return G2MetricBundle(metric=metric, coframe=coframe, domain=dom,
                          provenance={"builder": "warped-control"})


# ------------------------------------------------------------- quotient data

def _pole(x3: np.ndarray) -> tuple[float, np.ndarray]:
    r = float(np.linalg.norm(x3))
    v = 1.0 + 0.5 / r
    dv = -0.5 * x3 / r ** 3
    return v, dv


def killing_flat_data() -> KillingData:
    dom = Domain(lo=(-1.0,) * 6, hi=(1.0,) * 6)
    return KillingData(metric=lambda x: np.eye(6), u=lambda x: 1.0,
                       a_form=lambda x: np.zeros(6),
                       b_plus=lambda x: np.zeros(3),
                       b_hom=lambda x: np.zeros((3, 3)),
                       domain=dom, connection="levi-civita")


def killing_taub_nut_data() -> KillingData:
    """The quotient data of the positive 7-bundle: metric dx_+^2 + V dx_-^2,
    u = V^(-1/2), the string potential, b = -(1/4) V^(-3/2) dV in frame
    components, B = 0, and the explicit compatible connection (Levi-Civita
    minus the h-twist, both in closed form)."""
    a6 = monopole_potential6()

    def metric(x: np.ndarray) -> np.ndarray:
        v, _ = _pole(x[3:])
        g = np.eye(6)
        g[3:, 3:] *= v
        return g

    def u(x: np.ndarray) -> float:
        v, _ = _pole(x[3:])
        return v ** -0.5

    def b_plus(x: np.ndarray) -> np.ndarray:
        v, dv = _pole(x[3:])
        return -0.25 * v ** -1.5 * dv

    def connection(x: np.ndarray) -> np.ndarray:
        v, dv = _pole(x[3:])
        gam = np.zeros((6, 6, 6))
        for i in range(3):
            for j in range(3):
                for k in range(3):
                    gam[3 + k, 3 + i, 3 + j] = (
                        (dv[i] if j == k else 0.0) + (dv[j] if i == k else 0.0)
                        - (dv[k] if i == j else 0.0)) / (2 * v)
        # subtract the h-twist of the closed-form gamma: only the minus block
        # of the twist endomorphism is nonzero, gamma_f = u^-1 hat(g_minus)
        gm = -0.5 * v ** -2 * dv          # frame components of (grad u)_minus
        scale = np.concatenate([np.ones(3), np.full(3, v ** -0.5)])
        frame = np.diag(scale)            # columns
        cof = np.diag(1.0 / scale)
        u_val = v ** -0.5
        gamma_f = np.zeros((6, 6))
        gamma_f[3:, 3:] = _hat3(gm) / u_val
        corr = np.zeros((6, 6, 6))
        for a in range(6):
            corr[:, a, :] = frame @ h6(gamma_f @ cof[:, a]) @ cof
        return gam - corr

    return KillingData(metric=metric, u=u, a_form=a6, b_plus=b_plus,
                       b_hom=lambda x: np.zeros((3, 3)),
                       domain=base_domain6(), connection=connection)


def killing_perturbed_data(eps: float = 0.1) -> KillingData:
    """The positive quotient data with the potential polluted by eps x5 dx6."""
    good = killing_taub_nut_data()

    def a_form(x: np.ndarray) -> np.ndarray:
        out = good.a_form(x).copy()
        out[5] += eps * float(x[4])
        return out

    return KillingData(metric=good.metric, u=good.u, a_form=a_form,
                       b_plus=good.b_plus, b_hom=good.b_hom,
                       domain=good.domain, connection=good.connection)


def _hat3(w: np.ndarray) -> np.ndarray:
    return np.array([[0.0, -w[2], w[1]],
                     [w[2], 0.0, -w[0]],
                     [-w[1], w[0], 0.0]])


# ------------------------------------------------------ anchored-torsion data

GALLERY = {
    "gh-flat-quotient": {"builder": "gh_flat_example",
                         "verdict": "locally flat: Riemann converges to zero"},
    "gh-taub-nut": {"builder": "gh_taub_nut_example",
                    "verdict": "Ricci-flat, curvature bounded away from zero"},
    "gh-nonharmonic": {"builder": "gh_nonharmonic_example",
                       "verdict": "control: Ricci bounded below"},
    "thm1-flat": {"builder": "thm1_flat_bundle",
                  "verdict": "model form, exactly parallel"},
    "thm1-taub-nut": {"builder": "thm1_taub_nut_bundle",
                      "verdict": "torsion-free and Ricci-flat at second order"},
    "thm1-broken-monopole": {"builder": "thm1_broken_monopole_bundle",
                             "verdict": "control: torsion bounded below"},
    "thm2-taub-nut": {"builder": "thm2_taub_nut_bundle",
                      "verdict": "agrees with thm1 pointwise (zero twist)"},
    "thm2-mismatched-alpha": {"builder": "thm2_mismatched_alpha_bundle",
                              "verdict": "control: twist inconsistent, torsion bounded below"},
    "warped-control": {"builder": "warped_control_bundle",
                       "verdict": "control: curvature leaves the algebra"},
    "killing-flat": {"builder": "killing_flat_data",
                     "verdict": "all structure residuals vanish"},
    "killing-taub-nut": {"builder": "killing_taub_nut_data",
                         "verdict": "structure conditions hold at second order"},
    "killing-perturbed": {"builder": "killing_perturbed_data",
                          "verdict": "control: potential equation bounded below"},
    "plane": {"builder": "affine_plane", "verdict": "geodesic and parallel"},
    "sphere": {"builder": "unit_sphere",
               "verdict": "umbilical, nearly parallel, not parallel"},
    "ellipsoid": {"builder": "ellipsoid",
                  "verdict": "control: neither umbilical nor nearly parallel"},
}


def rho_flat_setup() -> RhoConnectionSetup:
    dom = Domain(lo=(-1.0,) * 6, hi=(1.0,) * 6)
    return RhoConnectionSetup(u=lambda x: 1.0, a_form=lambda x: np.zeros(6),
                              gamma_tm=lambda x: np.zeros((6, 6)),
                              gamma_one=lambda x: np.zeros(6), domain=dom)


def rho_polynomial_setup(seed: int = 42) -> RhoConnectionSetup:
    """Cubic-coefficient fields on the flat 6-box: smooth, with nonvanishing
    third derivatives so stencil errors scale honestly."""
    rng = np.random.default_rng(seed)
    c_g = rng.uniform(-0.4, 0.4, size=(6, 6, 3, 6))
    c_u = rng.uniform(-0.2, 0.2, size=(3, 6))
    c_a = rng.uniform(-0.4, 0.4, size=(6, 3, 6))
    c_1 = rng.uniform(-0.4, 0.4, size=(6, 3, 6))

    def poly(coefs, x):
        return float(sum(coefs[d] @ (x ** (d + 1)) for d in range(3)))

    def gamma_tm(x):
        return np.array([[poly(c_g[i, j], x) for j in range(6)] for i in range(6)])

    def u(x):
        return 2.0 + poly(c_u, x)

    def a_form(x):
        return np.array([poly(c_a[i], x) for i in range(6)])

    def gamma_one(x):
        return np.array([poly(c_1[i], x) for i in range(6)])

    dom = Domain(lo=(-0.8,) * 6, hi=(0.8,) * 6)
    return RhoConnectionSetup(u=u, a_form=a_form, gamma_tm=gamma_tm,
                              gamma_one=gamma_one, domain=dom)


def polynomial_sections(seed: int = 43, count: int = 3) -> list:
    rng = np.random.default_rng(seed)
    coefs = rng.uniform(-0.5, 0.5, size=(count, 6, 3, 6))

    def make(c):
        def section(x):
            return np.array([sum(c[i, d] @ (x ** (d + 1)) for d in range(3))
                             for i in range(6)])
        return section

    return [make(c) for c in coefs]
