"""The registered check suites behind the command-line front end.

Each check is a function of the shared context returning one CheckReport.
Exact certifications carry tolerance 0; finite-difference checks carry the
tolerance or order band stated with them.  Negative controls pass when the
expected violation is observed.
"""

from __future__ import annotations

import numpy as np

from . import embeddings as emb
from . import gallery
from .curvature import ricci, riemann, riemann_lowered
from .fields import Domain, StencilConfig, sample_points
from .g2construct import (estimate_order, holonomy_residual, model_phi_check,
                          monopole_residual, torsionfree_residual,
                          weak_monopole_residual, weak_sl3_consistency,
                          N_SPLIT, flat_product_metric)
from .gibbons import gh_build, gh_domain4
from .hypersurfaces import (affine_plane, ellipsoid, hypersurface_checks,
                            unit_sphere)
from .killing import (da_conditions_check, gamma_pair_residual,
                      killing_conditions_check, rho_torsion_check)
from .octonions import (alternativity_certificate, associative_test,
                        calibration_gap, norm_multiplicativity_certificate,
                        standard_cross, standard_octonions, torsion_cross)
from .rational import ExactMatrix, bracket, trace_form
from .reports import (CheckReport, SuiteContext, control_report, simple_report)
from .spin8 import so8_intersection_report
from .subspaces import Subspace
from .threeform import invariant_threeform, star_phi, wedge_3_4, stabilizer_in_so7

ORDER_BAND = (1.8, 2.2)
GH_H_LIST = (2e-2, 1e-2, 5e-3)


def _base_cfg(ctx: SuiteContext, default_h: float) -> StencilConfig:
    """Fixed-step checks honor the global --h override; order studies keep
    their declared step ladders."""
    return StencilConfig(h=ctx.h if ctx.h else default_h)


def _tag(name: str, extra: dict | None = None) -> dict:
    entry = gallery.GALLERY[name]
    out = {"gallery": name, "builder": entry["builder"],
           "verdict": entry["verdict"]}
    out.update(extra or {})
    return out


# ----------------------------------------------------------------- algebra

def check_algebra_dimension(ctx: SuiteContext) -> CheckReport:
    b = emb.g2_basis()
    res = {"dim_defect": float(abs(b.span().dim - 14))}
    return simple_report("algebra.dimension", res, 0.0, ctx.seed,
                         params={"dim": b.span().dim})


def check_algebra_closure(ctx: SuiteContext) -> CheckReport:
    b = emb.g2_basis()
    worst = 0
    for (i, j), coeffs in b.structure_constants.items():
        recon = ExactMatrix.zeros(7)
        for c, el in zip(coeffs, b.elements):
            if c:
                recon = recon + el.scale(c)
        diff = bracket(b.elements[i], b.elements[j]) - recon
        worst = max(worst, max(abs(v) for v in diff.flatten()))
    return simple_report("algebra.closure", {"closure": float(worst)}, 0.0,
                         ctx.seed, params={"pairs": len(b.structure_constants)})


def check_algebra_reductive(ctx: SuiteContext) -> CheckReport:
    ok = emb.reductivity_certificate()
    witness = emb.non_symmetry_witness()
    res = {"reductivity": 0.0 if ok else 1.0,
           "non_symmetry_witness_missing": 0.0 if witness is not None else 1.0}
    return simple_report("algebra.reductive", res, 0.0, ctx.seed,
                         params={"witness_pair": list(witness) if witness else None})


def check_algebra_orthogonality(ctx: SuiteContext) -> CheckReport:
    b = emb.g2_basis()
    worst = max(abs(trace_form(a, m)) for a in b.h_elements for m in b.m_elements)
    return simple_report("algebra.orthogonality", {"trace_pairing": float(worst)},
                         0.0, ctx.seed)


def check_algebra_equivariance(ctx: SuiteContext) -> CheckReport:
    ok = emb.h_equivariance_certificate()
    return simple_report("algebra.h-equivariance",
                         {"equivariance": 0.0 if ok else 1.0}, 0.0, ctx.seed)


def _exact(q) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def check_algebra_scales(ctx: SuiteContext) -> CheckReport:
    s1 = emb.h_scale_certificate()
    s2 = emb.lift_scale_certificate()
    res = {"h_scale_inconsistency": 0.0, "lift_scale_inconsistency": 0.0,
           "scales_differ": 0.0 if s1 == s2 else 1.0}
    return simple_report("algebra.embedding-scales", res, 0.0, ctx.seed,
                         params={"scale": _exact(s1)})


def check_algebra_rep_equivalence(ctx: SuiteContext) -> CheckReport:
    res = emb.intertwiner_solve(emb.adjoint_rep_on_m(), emb.canonical_rep6())
    ok = res.equivalent
    return simple_report("algebra.rep-equivalence",
                         {"no_invertible_intertwiner": 0.0 if ok else 1.0},
                         0.0, ctx.seed,
                         params={"solution_space_dim": len(res.kernel)})


def check_algebra_rep_dual(ctx: SuiteContext) -> CheckReport:
    rep = emb.sl3_canonical_rep3()
    res = emb.intertwiner_solve(rep, emb.dual_rep(rep))
    bad = 1.0 if (res.equivalent or len(res.kernel) != 0) else 0.0
    return simple_report("algebra.rep-dual-inequivalent",
                         {"unexpected_intertwiner": bad}, 0.0, ctx.seed,
                         params={"solution_space_dim": len(res.kernel)})


def check_algebra_clifford(ctx: SuiteContext) -> CheckReport:
    rep = so8_intersection_report()
    return simple_report("algebra.clifford",
                         {"anticommutation": 0.0 if rep.clifford_ok else 1.0},
                         0.0, ctx.seed)


def check_algebra_so8(ctx: SuiteContext) -> CheckReport:
    rep = so8_intersection_report()
    res = {"sum_dim_defect": float(abs(rep.sum_dim - 28)),
           "intersection_dim_defect": float(abs(rep.intersection_dim - 14)),
           "intersection_mismatch": 0.0 if rep.intersection_is_g2 else 1.0}
    return simple_report("algebra.so8", res, 0.0, ctx.seed,
                         params={"sum_dim": rep.sum_dim,
                                 "intersection_dim": rep.intersection_dim})


# ---------------------------------------------------------------- octonion

def check_octonion_kernel(ctx: SuiteContext) -> CheckReport:
    phi = invariant_threeform()
    res = {"norm_defect": float(abs(phi.norm_sq() - 7))}
    return simple_report("octonion.invariant-kernel", res, 0.0, ctx.seed,
                         params={"kernel_dim": 1,
                                 "components": len(phi.nonzero_items())})


def check_octonion_stabilizer(ctx: SuiteContext) -> CheckReport:
    stab = stabilizer_in_so7(invariant_threeform())
    g2span = Subspace.span_matrices(list(emb.g2_basis().elements))
    res = {"dim_defect": float(abs(stab.dim - 14)),
           "span_mismatch": 0.0 if stab == g2span else 1.0}
    return simple_report("octonion.stabilizer-roundtrip", res, 0.0, ctx.seed)


def check_octonion_torsion(ctx: SuiteContext) -> CheckReport:
    tc = torsion_cross()
    res = {"ratio_zero": 0.0 if tc.proportionality != 0 else 1.0,
           "complement_dim_defect": float(abs(tc.complement_dim - 7))}
    return simple_report("octonion.torsion-proportional", res, 0.0, ctx.seed,
                         params={"ratio": _exact(tc.proportionality)})


def check_octonion_table(ctx: SuiteContext) -> CheckReport:
    table = standard_octonions()
    res = {"norm_multiplicativity":
           0.0 if norm_multiplicativity_certificate(table, 100, ctx.seed) else 1.0,
           "alternativity":
           0.0 if alternativity_certificate(table, 50, ctx.seed) else 1.0}
    return simple_report("octonion.table", res, 0.0, ctx.seed,
                         params={"random_pairs": 100})


def check_octonion_cross_identities(ctx: SuiteContext) -> CheckReport:
    cross = standard_cross()
    rng = np.random.default_rng(ctx.seed)
    from fractions import Fraction
    worst = 0
    for _ in range(20):
        x = tuple(Fraction(int(v)) for v in rng.integers(-6, 7, size=7))
        y = tuple(Fraction(int(v)) for v in rng.integers(-6, 7, size=7))
        xy = cross.cross(x, y)
        dxx = sum(a * a for a in x)
        dxy = sum(a * b for a, b in zip(x, y))
        lhs = cross.cross(x, xy)
        rhs = tuple(-dxx * yv + dxy * xv for xv, yv in zip(x, y))
        worst = max(worst, max(abs(a - b) for a, b in zip(lhs, rhs)))
    return simple_report("octonion.cross-identities",
                         {"double_cross": float(worst)}, 0.0, ctx.seed)


def check_octonion_planes(ctx: SuiteContext) -> CheckReport:
    e = [tuple(1 if s == i else 0 for s in range(7)) for i in range(7)]
    plus_ok = associative_test(e[0], e[1], e[2])
    minus_assoc = associative_test(e[4], e[5], e[6])
    phi = invariant_threeform()
    res = {"plus_block_defect": 0.0 if plus_ok else 1.0,
           "minus_block_form_value": float(abs(phi.value(4, 5, 6)))}
    rng = np.random.default_rng(ctx.seed)
    from fractions import Fraction
    x = tuple(Fraction(int(v)) for v in rng.integers(-4, 5, size=7))
    y = tuple(Fraction(int(v)) for v in rng.integers(-4, 5, size=7))
    v2, det = calibration_gap(x, y, tuple(Fraction(int(v))
                                          for v in rng.integers(-4, 5, size=7)))
    res["generic_plane_defect"] = 0.0 if v2 < det else 1.0
    closure = associative_test(x, y, standard_cross().cross(x, y))
    res["closure_plane_defect"] = 0.0 if closure else 1.0
    return simple_report("octonion.associative-planes", res, 0.0, ctx.seed,
                         params={"minus_block_associative": minus_assoc})


def check_octonion_star(ctx: SuiteContext) -> CheckReport:
    phi = invariant_threeform()
    sp = star_phi(phi)
    res = {"star_norm_defect": float(abs(sp.norm_sq() - 7)),
           "wedge_defect": float(abs(wedge_3_4(phi, sp) - 7))}
    return simple_report("octonion.star-wedge", res, 0.0, ctx.seed)


# ---------------------------------------------------------------------- gh

def _gh_samples(ctx: SuiteContext, data, n_default: int, h: float):
    dom = gh_domain4(data.domain)
    return sample_points(dom, ctx.scaled_samples(n_default),
                         StencilConfig(h=h), seed=ctx.seed)


def check_gh_flat_trivial(ctx: SuiteContext) -> CheckReport:
    from .gibbons import GHData
    data = GHData(v=lambda x: 1.0, a=lambda x: np.zeros(3),
                  domain=Domain(lo=(-1.0,) * 3, hi=(1.0,) * 3))
    g = gh_build(data)
    cfg = _base_cfg(ctx, 1e-2)
    pts = _gh_samples(ctx, data, 20, cfg.h)
    worst = max(float(np.max(np.abs(riemann(g, p, cfg)))) for p in pts)
    return simple_report("gh.flat-trivial", {"riemann": worst}, 1e-12, ctx.seed)


def check_gh_flat_quotient(ctx: SuiteContext) -> CheckReport:
    data = gallery.gh_flat_example()
    g = gh_build(data)
    pts = _gh_samples(ctx, data, 100, max(GH_H_LIST))

    def residual(h):
        cfg = StencilConfig(h=h)
        return max(float(np.max(np.abs(riemann(g, p, cfg)))) for p in pts)

    vals = [residual(h) for h in GH_H_LIST]
    order = estimate_order(GH_H_LIST, vals)
    ctx.record_samples("gh.flat-quotient", ["h", "sup_riemann"],
                       list(zip(GH_H_LIST, vals)))
    return simple_report("gh.flat-quotient", {"final_riemann": vals[-1]}, 5e-3,
                         ctx.seed,
                         params=_tag("gh-flat-quotient",
                                     {"residuals_by_h": dict(zip(GH_H_LIST, vals))}),
                         order_estimate=order, order_band=ORDER_BAND)


def check_gh_taub_nut(ctx: SuiteContext) -> CheckReport:
    data = gallery.gh_taub_nut_example()
    g = gh_build(data)
    pts = _gh_samples(ctx, data, 100, max(GH_H_LIST))

    def residual(h):
        cfg = StencilConfig(h=h)
        return max(float(np.max(np.abs(ricci(g, p, cfg)))) for p in pts)

    vals = [residual(h) for h in GH_H_LIST]
    order = estimate_order(GH_H_LIST, vals)
    cfg = StencilConfig(h=5e-3)
    min_riemann = min(float(np.linalg.norm(riemann_lowered(g, p, cfg)))
                      for p in gallery.GH_REFERENCE_POINTS)
    res = {"final_ricci": vals[-1],
           "riemann_floor_shortfall": max(0.0, 0.01 - min_riemann)}
    return simple_report("gh.taub-nut", res, 5e-3, ctx.seed,
                         params=_tag("gh-taub-nut",
                                     {"residuals_by_h": dict(zip(GH_H_LIST, vals)),
                                      "min_riemann_norm": min_riemann}),
                         order_estimate=order, order_band=ORDER_BAND)


def check_gh_consistency(ctx: SuiteContext) -> CheckReport:
    data = gallery.gh_taub_nut_example()
    cfg = _base_cfg(ctx, 1e-3)
    pts = sample_points(data.domain, ctx.scaled_samples(100), cfg, seed=ctx.seed)
    res = data.consistency_residuals(pts, cfg)
    return simple_report("gh.data-consistency", res, 1e-3, ctx.seed)


def check_gh_nonharmonic(ctx: SuiteContext) -> CheckReport:
    data = gallery.gh_nonharmonic_example()
    g = gh_build(data)
    pts = _gh_samples(ctx, data, 30, 5e-3)
    cfg = StencilConfig(h=5e-3)
    worst = max(float(np.max(np.abs(ricci(g, p, cfg)))) for p in pts)
    return control_report("gh.nonharmonic-control", {"ricci": worst}, 0.01,
                          ctx.seed, params=_tag("gh-nonharmonic"))


# ------------------------------------------------------------------ g2-thm1

def check_thm1_flat(ctx: SuiteContext) -> CheckReport:
    bundle = gallery.thm1_flat_bundle()
    cfg = _base_cfg(ctx, 1e-3)
    pts = sample_points(bundle.domain, ctx.scaled_samples(20), cfg, seed=ctx.seed)
    tf = torsionfree_residual(bundle, pts, cfg)
    res = {"sup_dphi": tf["sup_dphi"], "sup_dstarphi": tf["sup_dstarphi"],
           "model_phi_deviation": model_phi_check(bundle, pts),
           "orthonormality": bundle.orthonormality_residual(pts)}
    return simple_report("g2-thm1.flat", res, 1e-10, ctx.seed,
                         params=_tag("thm1-flat"))


def check_thm1_torsionfree(ctx: SuiteContext) -> CheckReport:
    bundle = gallery.thm1_taub_nut_bundle()
    cfg = StencilConfig(h=max(GH_H_LIST))
    pts = sample_points(bundle.domain, ctx.scaled_samples(100), cfg, seed=ctx.seed)
    out = torsionfree_residual(bundle, pts, StencilConfig(h=GH_H_LIST[-1]),
                               h_list=GH_H_LIST)
    ctx.record_samples("g2-thm1.torsion-free", ["h", "sup_dphi", "sup_dstarphi"],
                       [(h, out["dphi_by_h"][h], out["dstarphi_by_h"][h])
                        for h in GH_H_LIST])
    res = {"sup_dphi": out["sup_dphi"], "sup_dstarphi": out["sup_dstarphi"]}
    order = min(out["order_dphi"], out["order_dstarphi"]) \
        if "exact" not in (out["order_dphi"], out["order_dstarphi"]) else "exact"
    return simple_report("g2-thm1.torsion-free", res, 1e-3, ctx.seed,
                         params=_tag("thm1-taub-nut",
                                     {"dphi_by_h": out["dphi_by_h"],
                                      "dstarphi_by_h": out["dstarphi_by_h"],
                                      "warning": bundle.provenance["warning"]}),
                         order_estimate=order, order_band=(1.8, 2.5))


def check_thm1_einstein(ctx: SuiteContext) -> CheckReport:
    bundle = gallery.thm1_taub_nut_bundle()
    pts = sample_points(bundle.domain, ctx.scaled_samples(50),
                        StencilConfig(h=max(GH_H_LIST)), seed=ctx.seed)

    def residual(h):
        hol = holonomy_residual(bundle, pts, StencilConfig(h=h))
        return hol

    rows = [residual(h) for h in GH_H_LIST]
    ric = [r["ricci_norm"] for r in rows]
    off = [r["off_g2_fraction"] for r in rows]
    order_ric = estimate_order(GH_H_LIST, ric)
    order_off = estimate_order(GH_H_LIST, off)
    res = {"final_ricci": ric[-1], "final_off_fraction": off[-1]}
    ok_orders = all(o == "exact" or o >= 1.8 for o in (order_ric, order_off))
    rep = simple_report("g2-thm1.curvature", res, 1e-2, ctx.seed,
                        params=_tag("thm1-taub-nut",
                                    {"ricci_by_h": dict(zip(GH_H_LIST, ric)),
                                     "off_fraction_by_h": dict(zip(GH_H_LIST, off)),
                                     "order_off_g2": order_off,
                                     "curvature_norm": rows[-1]["curvature_norm"]}),
                        order_estimate=order_ric, order_band=(1.8, 2.5))
    if not ok_orders:
        rep.status = "fail"
    return rep


def check_thm1_monopole(ctx: SuiteContext) -> CheckReport:
    mono = gallery.thm1_taub_nut_bundle().provenance["monopole_residuals"]
    return simple_report("g2-thm1.monopole-hypothesis", mono, 1e-4, ctx.seed)


# ------------------------------------------------------------------ g2-thm2

def check_thm2_agrees(ctx: SuiteContext) -> CheckReport:
    b1 = gallery.thm1_taub_nut_bundle()
    b2 = gallery.thm2_taub_nut_bundle()
    cfg = StencilConfig(h=1e-2)
    pts = sample_points(b1.domain, ctx.scaled_samples(100), cfg, seed=ctx.seed)
    worst_g = max(float(np.max(np.abs(b1.metric(p) - b2.metric(p)))) for p in pts)
    worst_e = max(float(np.max(np.abs(b1.coframe(p) - b2.coframe(p)))) for p in pts)
    worst_phi = max(float(np.max(np.abs(b1.phi_field(p) - b2.phi_field(p))))
                    for p in pts)
    res = {"metric": worst_g, "coframe": worst_e, "phi": worst_phi}
    return simple_report("g2-thm2.agrees-with-thm1", res, 1e-12, ctx.seed,
                         params=_tag("thm2-taub-nut"))


def check_thm2_torsionfree(ctx: SuiteContext) -> CheckReport:
    bundle = gallery.thm2_taub_nut_bundle()
    pts = sample_points(bundle.domain, ctx.scaled_samples(100),
                        StencilConfig(h=max(GH_H_LIST)), seed=ctx.seed)
    out = torsionfree_residual(bundle, pts, StencilConfig(h=GH_H_LIST[-1]),
                               h_list=GH_H_LIST)
    order = min(out["order_dphi"], out["order_dstarphi"]) \
        if "exact" not in (out["order_dphi"], out["order_dstarphi"]) else "exact"
    return simple_report("g2-thm2.torsion-free",
                         {"sup_dphi": out["sup_dphi"],
                          "sup_dstarphi": out["sup_dstarphi"]},
                         1e-3, ctx.seed,
                         params=_tag("thm2-taub-nut",
                                     {"dphi_by_h": out["dphi_by_h"]}),
                         order_estimate=order, order_band=(1.8, 2.5))


def check_thm2_weak_monopole(ctx: SuiteContext) -> CheckReport:
    from .g2construct import MonopoleData
    mono = MonopoleData(v=gallery.taub_nut_v6, a=gallery.monopole_potential6(),
                        alpha=None)
    cfg = _base_cfg(ctx, 1e-3)
    dom = gallery.base_domain6()
    pts = sample_points(dom, ctx.scaled_samples(50), cfg, seed=ctx.seed)
    res = weak_monopole_residual(mono, flat_product_metric, N_SPLIT, pts, cfg)
    base = weak_sl3_consistency(flat_product_metric, N_SPLIT, None, pts[:6], cfg)
    res["twist_consistency"] = base["twist_mismatch"]
    res["complex_structure_part"] = base["complex_structure_part"]
    return simple_report("g2-thm2.weak-monopole", res, 1e-4, ctx.seed)


# -------------------------------------------------------------- hypersurface

def check_hyp_plane(ctx: SuiteContext) -> CheckReport:
    imm = affine_plane()
    cfg = _base_cfg(ctx, 1e-3)
    pts = sample_points(imm.domain, ctx.scaled_samples(15), cfg, seed=ctx.seed)
    r = hypersurface_checks(imm, pts, cfg)
    res = {"kahler": r["kahler"], "geodesic": r["geodesic"]}
    return simple_report("hypersurface.plane", res, 1e-8, ctx.seed,
                         params=_tag("plane"))


SPHERE_KAHLER_FLOOR = 0.8   # measured 0.983 by the h=1e-4 Richardson oracle run


def check_hyp_sphere(ctx: SuiteContext) -> CheckReport:
    imm = unit_sphere()
    cfg = _base_cfg(ctx, 1e-3)
    pts = sample_points(imm.domain, ctx.scaled_samples(15), cfg, seed=ctx.seed)
    r = hypersurface_checks(imm, pts, cfg)
    res = {"nearly_kahler": r["nearly_kahler"],
           "umbilic": r["umbilic"],
           "kahler_floor_shortfall": max(0.0, SPHERE_KAHLER_FLOOR - r["kahler"])}
    return simple_report("hypersurface.sphere", res, 1e-5, ctx.seed,
                         params=_tag("sphere", {"kahler_defect": r["kahler"],
                                                "kahler_floor": SPHERE_KAHLER_FLOOR}))


def check_hyp_ellipsoid(ctx: SuiteContext) -> CheckReport:
    imm = ellipsoid()
    cfg = _base_cfg(ctx, 1e-3)
    pts = sample_points(imm.domain, ctx.scaled_samples(10), cfg, seed=ctx.seed)
    r = hypersurface_checks(imm, pts, cfg)
    return control_report("hypersurface.ellipsoid-control",
                          {"umbilic": r["umbilic"],
                           "nearly_kahler": r["nearly_kahler"]}, 0.01, ctx.seed,
                          params=_tag("ellipsoid"))


# -------------------------------------------------------------- oracle pairs

def check_oracle_torsion(ctx: SuiteContext) -> CheckReport:
    setup = gallery.rho_polynomial_setup(ctx.seed)
    secs = gallery.polynomial_sections(ctx.seed + 1)
    cfg0 = StencilConfig(h=2e-3)
    pts = sample_points(setup.domain, ctx.scaled_samples(200), cfg0, seed=ctx.seed)
    h_list = (2e-3, 1e-3, 5e-4)
    vals = []
    for h in h_list:
        r = rho_torsion_check(setup, secs, pts, StencilConfig(h=h))
        vals.append(max(r["tangent_pairs"], r["axis_pairs"]))
    order = estimate_order(h_list, vals)
    trunc_est = abs(vals[0] - vals[1]) / 3.0 + 1e-13
    res = {"discrepancy_over_truncation": max(0.0, vals[1] - 10 * trunc_est)}
    ctx.record_samples("oracle-pairs.torsion", ["h", "discrepancy"],
                       list(zip(h_list, vals)))
    return simple_report("oracle-pairs.torsion", res, 0.0, ctx.seed,
                         params={"discrepancy_by_h": dict(zip(h_list, vals)),
                                 "truncation_estimate": trunc_est},
                         order_estimate=order, order_band=(1.9, 2.5))


def check_oracle_gamma(ctx: SuiteContext) -> CheckReport:
    data = gallery.killing_taub_nut_data()
    pts = sample_points(data.domain, ctx.scaled_samples(200),
                        StencilConfig(h=2e-3), seed=ctx.seed)
    h_list = (2e-3, 1e-3, 5e-4)
    vals = [gamma_pair_residual(data, pts, StencilConfig(h=h)) for h in h_list]
    order = estimate_order(h_list, vals)
    res = {"discrepancy": vals[-1]}
    return simple_report("oracle-pairs.twist-assembly", res, 1e-10, ctx.seed,
                         params={"discrepancy_by_h": dict(zip(h_list, vals))},
                         order_estimate=order, order_band=(1.9, 2.5))


def check_oracle_potential(ctx: SuiteContext) -> CheckReport:
    data = gallery.killing_taub_nut_data()
    pts = sample_points(data.domain, ctx.scaled_samples(200),
                        StencilConfig(h=2e-3), seed=ctx.seed)
    h_list = (2e-3, 1e-3, 5e-4)
    vals = []
    for h in h_list:
        r = da_conditions_check(data, pts, StencilConfig(h=h))
        vals.append(r["route_agreement"])
    order = estimate_order(h_list, vals)
    trunc_est = abs(vals[0] - vals[1]) / 3.0 + 1e-13
    res = {"discrepancy_over_truncation": max(0.0, vals[1] - 10 * trunc_est)}
    return simple_report("oracle-pairs.potential-routes", res, 0.0, ctx.seed,
                         params={"discrepancy_by_h": dict(zip(h_list, vals)),
                                 "truncation_estimate": trunc_est},
                         order_estimate=order, order_band=(1.9, 2.5))


def check_oracle_blocks(ctx: SuiteContext) -> CheckReport:
    """The positive quotient data satisfies every structure condition."""
    data = gallery.killing_taub_nut_data()
    cfg = _base_cfg(ctx, 1e-3)
    pts = sample_points(data.domain, ctx.scaled_samples(100), cfg, seed=ctx.seed)
    cond = killing_conditions_check(data, pts, cfg)
    blocks = da_conditions_check(data, pts, cfg)
    res = {**{f"cond_{k}": v for k, v in cond.items()},
           **{f"block_{k}": v for k, v in blocks.items()}}
    return simple_report("oracle-pairs.quotient-conditions", res, 1e-4, ctx.seed,
                         params=_tag("killing-taub-nut"))


# ---------------------------------------------------------- negative controls

def check_neg_perturbed_potential(ctx: SuiteContext) -> CheckReport:
    data = gallery.killing_perturbed_data(0.1)
    cfg = _base_cfg(ctx, 1e-3)
    pts = sample_points(data.domain, ctx.scaled_samples(40), cfg, seed=ctx.seed)
    cond = killing_conditions_check(data, pts, cfg)
    return control_report("negative.perturbed-potential",
                          {"potential_equation": cond["potential_equation"]},
                          0.05, ctx.seed, params=_tag("killing-perturbed"))


def check_neg_nonharmonic(ctx: SuiteContext) -> CheckReport:
    rep = check_gh_nonharmonic(ctx)
    rep.check_id = "negative.nonharmonic-pole"
    return rep


def check_neg_broken_monopole(ctx: SuiteContext) -> CheckReport:
    bundle = gallery.thm1_broken_monopole_bundle(0.1)
    pts = sample_points(bundle.domain, ctx.scaled_samples(10),
                        StencilConfig(h=max(GH_H_LIST)), seed=ctx.seed)
    vals = [torsionfree_residual(bundle, pts, StencilConfig(h=h))["sup_dphi"]
            for h in GH_H_LIST]
    order = estimate_order(GH_H_LIST, vals)
    rep = control_report("negative.broken-monopole", {"sup_dphi": vals[-1]},
                         0.01, ctx.seed,
                         params=_tag("thm1-broken-monopole",
                                     {"dphi_by_h": dict(zip(GH_H_LIST, vals)),
                                      "warning": bundle.provenance["warning"]}),
                         order_estimate=order, order_band=(-0.2, 0.2))
    if bundle.provenance["warning"] is None:
        rep.status = "fail"
    return rep


def check_neg_mismatched_twist(ctx: SuiteContext) -> CheckReport:
    bundle, mono = gallery.thm2_mismatched_alpha_bundle(0.1)
    cfg = StencilConfig(h=1e-3)
    dom = gallery.base_domain6()
    pts6 = sample_points(dom, ctx.scaled_samples(15), cfg, seed=ctx.seed)
    from .g2construct import MonopoleData
    honest = MonopoleData(v=mono.v, a=mono.a, alpha=None)
    weak = weak_monopole_residual(honest, flat_product_metric, N_SPLIT, pts6, cfg)
    base = weak_sl3_consistency(flat_product_metric, N_SPLIT, mono.alpha,
                                pts6[:6], cfg)
    pts7 = sample_points(bundle.domain, ctx.scaled_samples(10),
                         StencilConfig(h=1e-2), seed=ctx.seed)
    tf = torsionfree_residual(bundle, pts7, StencilConfig(h=1e-2))
    return control_report("negative.mismatched-twist",
                          {"weak_residual_vs_true_base": weak["plus_plus"],
                           "twist_vs_connection": base["twist_mismatch"],
                           "sup_dphi": tf["sup_dphi"]}, 0.01, ctx.seed,
                          params=_tag("thm2-mismatched-alpha"))


def check_neg_nonbasic(ctx: SuiteContext) -> CheckReport:
    from .g2construct import MonopoleData
    def v(x):
        return gallery.taub_nut_v6(x) + 0.2 * float(x[0])
    mono = MonopoleData(v=v, a=gallery.monopole_potential6())
    cfg = _base_cfg(ctx, 1e-3)
    dom = gallery.base_domain6()
    pts = sample_points(dom, ctx.scaled_samples(15), cfg, seed=ctx.seed)
    res = monopole_residual(mono, flat_product_metric, N_SPLIT, pts, cfg)
    return control_report("negative.nonbasic-pole", {"basic_v": res["basic_v"]},
                          0.01, ctx.seed)


def check_neg_warped(ctx: SuiteContext) -> CheckReport:
    bundle = gallery.warped_control_bundle()
    pts = sample_points(bundle.domain, ctx.scaled_samples(8),
                        StencilConfig(h=1e-2), seed=ctx.seed)
    hol = holonomy_residual(bundle, pts, StencilConfig(h=1e-2))
    return control_report("negative.warped-holonomy",
                          {"off_g2_fraction": hol["off_g2_fraction"]}, 0.1,
                          ctx.seed, params=_tag("warped-control"))


def check_neg_ellipsoid(ctx: SuiteContext) -> CheckReport:
    rep = check_hyp_ellipsoid(ctx)
    rep.check_id = "negative.ellipsoid"
    return rep


SUITES = {
    "algebra": [
        ("algebra.dimension", check_algebra_dimension),
        ("algebra.closure", check_algebra_closure),
        ("algebra.reductive", check_algebra_reductive),
        ("algebra.orthogonality", check_algebra_orthogonality),
        ("algebra.h-equivariance", check_algebra_equivariance),
        ("algebra.embedding-scales", check_algebra_scales),
        ("algebra.rep-equivalence", check_algebra_rep_equivalence),
        ("algebra.rep-dual-inequivalent", check_algebra_rep_dual),
        ("algebra.clifford", check_algebra_clifford),
        ("algebra.so8", check_algebra_so8),
    ],
    "octonion": [
        ("octonion.invariant-kernel", check_octonion_kernel),
        ("octonion.stabilizer-roundtrip", check_octonion_stabilizer),
        ("octonion.torsion-proportional", check_octonion_torsion),
        ("octonion.table", check_octonion_table),
        ("octonion.cross-identities", check_octonion_cross_identities),
        ("octonion.associative-planes", check_octonion_planes),
        ("octonion.star-wedge", check_octonion_star),
    ],
    "gh": [
        ("gh.flat-trivial", check_gh_flat_trivial),
        ("gh.flat-quotient", check_gh_flat_quotient),
        ("gh.taub-nut", check_gh_taub_nut),
        ("gh.data-consistency", check_gh_consistency),
        ("gh.nonharmonic-control", check_gh_nonharmonic),
    ],
    "g2-thm1": [
        ("g2-thm1.flat", check_thm1_flat),
        ("g2-thm1.torsion-free", check_thm1_torsionfree),
        ("g2-thm1.curvature", check_thm1_einstein),
        ("g2-thm1.monopole-hypothesis", check_thm1_monopole),
    ],
    "g2-thm2": [
        ("g2-thm2.agrees-with-thm1", check_thm2_agrees),
        ("g2-thm2.torsion-free", check_thm2_torsionfree),
        ("g2-thm2.weak-monopole", check_thm2_weak_monopole),
    ],
    "hypersurface": [
        ("hypersurface.plane", check_hyp_plane),
        ("hypersurface.sphere", check_hyp_sphere),
        ("hypersurface.ellipsoid-control", check_hyp_ellipsoid),
    ],
    "oracle-pairs": [
        ("oracle-pairs.torsion", check_oracle_torsion),
        ("oracle-pairs.twist-assembly", check_oracle_gamma),
        ("oracle-pairs.potential-routes", check_oracle_potential),
        ("oracle-pairs.quotient-conditions", check_oracle_blocks),
    ],
    "negative-controls": [
        ("negative.perturbed-potential", check_neg_perturbed_potential),
        ("negative.nonharmonic-pole", check_neg_nonharmonic),
        ("negative.broken-monopole", check_neg_broken_monopole),
        ("negative.mismatched-twist", check_neg_mismatched_twist),
        ("negative.nonbasic-pole", check_neg_nonbasic),
        ("negative.warped-holonomy", check_neg_warped),
        ("negative.ellipsoid", check_neg_ellipsoid),
    ],
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def suite_manifest(name: str) -> "SuiteManifest":
    from .reports import SuiteManifest
    return SuiteManifest(name, tuple(cid for cid, _ in suite_checks(name)))


def suite_checks(name: str):
    if name == "all":
        out = []
        for sname in SUITES:
            out.extend(SUITES[sname])
        return out
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]
