import numpy as np
import pytest

from g2lab.curvature import ricci, riemann, riemann_lowered
from g2lab.fields import Domain, StencilConfig, sample_points
from g2lab.g2construct import estimate_order
from g2lab.gallery import (GH_REFERENCE_POINTS, gh_flat_example,
                           gh_nonharmonic_example, gh_taub_nut_example)
from g2lab.gibbons import GHData, dirac_potential, gh_build, gh_domain4

H_LIST = (2e-2, 1e-2, 5e-3)


def sample4(data, n=8, seed=21):
    dom = gh_domain4(data.domain)
    return sample_points(dom, n, StencilConfig(h=max(H_LIST)), seed=seed)


def test_potential_satisfies_star_equation():
    data = gh_taub_nut_example()
    cfg = StencilConfig(h=1e-3)
    pts = sample_points(data.domain, 10, cfg, seed=3)
    res = data.consistency_residuals(pts, cfg)
    assert res["potential"] <= 1e-4
    assert res["harmonicity"] <= 1e-3


def test_trivial_build_is_flat_exactly():
    data = GHData(v=lambda x: 1.0, a=lambda x: np.zeros(3),
                  domain=Domain(lo=(-1.0,) * 3, hi=(1.0,) * 3))
    g = gh_build(data)
    cfg = StencilConfig(h=1e-2)
    for p in sample4(data, 5):
        assert np.max(np.abs(riemann(g, p, cfg))) == 0.0


def test_half_pole_is_locally_flat():
    g = gh_build(gh_flat_example())
    pts = sample4(gh_flat_example(), 10)

    def residual(h):
        cfg = StencilConfig(h=h)
        return max(float(np.max(np.abs(riemann(g, p, cfg)))) for p in pts)

    vals = [residual(h) for h in H_LIST]
    order = estimate_order(H_LIST, vals)
    assert 1.8 <= order <= 2.2, (order, vals)


def test_taub_nut_ricci_flat_but_curved():
    g = gh_build(gh_taub_nut_example())
    pts = sample4(gh_taub_nut_example(), 10)

    def residual(h):
        cfg = StencilConfig(h=h)
        return max(float(np.max(np.abs(ricci(g, p, cfg)))) for p in pts)

    vals = [residual(h) for h in H_LIST]
    order = estimate_order(H_LIST, vals)
    assert 1.8 <= order <= 2.2, (order, vals)
    cfg = StencilConfig(h=5e-3)
    for p in GH_REFERENCE_POINTS:
        assert np.linalg.norm(riemann_lowered(g, p, cfg)) >= 0.01


def test_nonharmonic_control_fails_ricci():
    g = gh_build(gh_nonharmonic_example())
    cfg = StencilConfig(h=5e-3)
    worst = max(float(np.max(np.abs(ricci(g, p, cfg))))
                for p in sample4(gh_nonharmonic_example(), 8))
    assert worst >= 0.01


def test_nonpositive_v_rejected():
    data = GHData(v=lambda x: -1.0, a=lambda x: np.zeros(3),
                  domain=Domain(lo=(-1.0,) * 3, hi=(1.0,) * 3))
    g = gh_build(data)
    with pytest.raises(ValueError):
        g(np.array([0.0, 0.1, 0.2, 0.3]))


def test_dirac_potential_regular_on_positive_axis():
    a = dirac_potential(0.5)
    val = a(np.array([1e-9, 1e-9, 0.7]))
    assert np.all(np.isfinite(val))
    assert np.max(np.abs(val)) < 1e-6


def test_d_squared_of_potential_vanishes():
    from g2lab.fields import exterior_d
    a = dirac_potential(0.5)
    cfg = StencilConfig(h=1e-3)
    pts = sample_points(gh_taub_nut_example().domain, 6, cfg, seed=17)
    for p in pts:
        da = lambda q: exterior_d(a, q, 1, cfg)
        dda = exterior_d(da, p, 2, cfg)
        assert np.max(np.abs(dda)) <= 1e-6
