import numpy as np
import pytest

from g2lab.fields import (Domain, SplitSpec, StencilConfig, StencilDomainError,
                          combinations_index, exterior_d, fd_partial,
                          hodge_restricted, restrict_two_form, sample_points,
                          transform_form)


def test_fd_exact_on_quadratic():
    f = lambda p: p[0] ** 2
    cfg = StencilConfig(h=0.25)
    p = np.array([3.0, 1.0])
    assert abs(fd_partial(f, p, 0, cfg) - 6.0) < 1e-12


def test_fd_constant_is_zero():
    cfg = StencilConfig()
    assert abs(fd_partial(lambda p: 5.0, np.array([0.1, 0.2]), 1, cfg)) < 1e-12


def test_fd_sin_accuracy():
    f = lambda p: np.sin(p[1])
    cfg = StencilConfig(h=1e-3, order=2)
    p = np.array([0.0, 0.5])
    assert abs(fd_partial(f, p, 1, cfg) - np.cos(0.5)) < 1e-6


def test_fd_order4_beats_order2():
    f = lambda p: np.exp(np.sin(3 * p[0]))
    p = np.array([0.4])
    exact = 3 * np.cos(1.2) * np.exp(np.sin(1.2))
    e2 = abs(fd_partial(f, p, 0, StencilConfig(h=1e-2, order=2)) - exact)
    e4 = abs(fd_partial(f, p, 0, StencilConfig(h=1e-2, order=4)) - exact)
    assert e4 < e2 / 100


def test_fd_richardson():
    f = lambda p: np.cos(2 * p[0])
    p = np.array([0.3])
    exact = -2 * np.sin(0.6)
    plain = abs(fd_partial(f, p, 0, StencilConfig(h=1e-2)) - exact)
    rich = abs(fd_partial(f, p, 0, StencilConfig(h=1e-2, richardson=True)) - exact)
    assert rich < plain / 50


def test_fd_linearity():
    rng = np.random.default_rng(0)
    c = rng.normal(size=4)
    f1 = lambda p: np.sin(p @ c[:2]) if False else np.sin(c[0] * p[0] + c[1] * p[1])
    f2 = lambda p: np.exp(c[2] * p[0]) * p[1] ** 3
    combo = lambda p: 2.5 * f1(p) - 1.25 * f2(p)
    cfg = StencilConfig(h=1e-3)
    p = np.array([0.2, -0.4])
    lhs = fd_partial(combo, p, 0, cfg)
    rhs = 2.5 * fd_partial(f1, p, 0, cfg) - 1.25 * fd_partial(f2, p, 0, cfg)
    assert abs(lhs - rhs) < 1e-12


def test_stencil_domain_error():
    dom = Domain(lo=(0.0,), hi=(1.0,))
    cfg = StencilConfig(h=0.2)
    with pytest.raises(StencilDomainError):
        fd_partial(lambda p: p[0], np.array([0.1]), 0, cfg, domain=dom)


def test_exterior_d_scalar_is_gradient():
    f = lambda p: p[0] * p[1]
    cfg = StencilConfig(h=1e-3)
    p = np.array([2.0, 3.0, 1.0])
    df = exterior_d(f, p, 0, cfg)
    assert np.allclose(df, [3.0, 2.0, 0.0], atol=1e-9)


def test_exterior_d_linear_one_form_exact():
    # d(x1 dx2) = dx1 ^ dx2
    n = 3
    combos1, idx1 = combinations_index(n, 1)

    def omega(p):
        out = np.zeros(len(combos1))
        out[idx1[(1,)]] = p[0]
        return out

    cfg = StencilConfig(h=1e-2)
    val = exterior_d(omega, np.array([0.3, 0.7, -0.2]), 1, cfg)
    combos2, idx2 = combinations_index(n, 2)
    expected = np.zeros(len(combos2))
    expected[idx2[(0, 1)]] = 1.0
    assert np.allclose(val, expected, atol=1e-10)


def test_d_squared_vanishes():
    n = 4
    combos1, _ = combinations_index(n, 1)
    rng = np.random.default_rng(5)
    lin = rng.normal(size=(len(combos1), n))
    quad = rng.normal(size=(len(combos1), n, n))

    def omega(p):
        return np.array([c0 @ p + p @ c1 @ p for c0, c1 in zip(lin, quad)])

    cfg = StencilConfig(h=1e-2)
    p = np.array([0.1, 0.2, -0.3, 0.4])

    def domega(q):
        return exterior_d(omega, q, 1, cfg)

    dd = exterior_d(domega, p, 2, cfg)
    assert np.max(np.abs(dd)) < 1e-8


def test_hodge_euclidean_block_conventions():
    n = 7
    block = (3, 4, 5)
    combos1, idx1 = combinations_index(n, 1)
    alpha = np.zeros(len(combos1))
    alpha[idx1[(3,)]] = 1.0   # dx4
    g = np.eye(n)
    out = hodge_restricted(alpha, 1, n, block, g)
    combos2, idx2 = combinations_index(n, 2)
    expected = np.zeros(len(combos2))
    expected[idx2[(4, 5)]] = 1.0   # dx5 ^ dx6
    assert np.allclose(out, expected)


def test_hodge_star_squared_identity_on_one_forms():
    n = 6
    block = (3, 4, 5)
    rng = np.random.default_rng(9)
    g = np.eye(n)
    s = rng.normal(size=(3, 3))
    g[np.ix_(block, block)] = s @ s.T + 3 * np.eye(3)
    combos1, idx1 = combinations_index(n, 1)
    alpha = np.zeros(len(combos1))
    for i, b in enumerate(block):
        alpha[idx1[(b,)]] = rng.normal()
    once = hodge_restricted(alpha, 1, n, block, g)
    twice = hodge_restricted(once, 2, n, block, g)
    assert np.allclose(twice, alpha, atol=1e-12)


def test_hodge_isometric():
    n = 6
    block = (0, 1, 2)
    rng = np.random.default_rng(11)
    a = rng.normal(size=(3, 3))
    gb = a @ a.T + 2 * np.eye(3)
    g = np.eye(n)
    g[np.ix_(block, block)] = gb
    combos1, idx1 = combinations_index(n, 1)
    alpha = np.zeros(len(combos1))
    vals = rng.normal(size=3)
    for i, b in enumerate(block):
        alpha[idx1[(b,)]] = vals[i]
    ginv = np.linalg.inv(gb)
    norm_alpha = vals @ ginv @ vals
    beta = hodge_restricted(alpha, 1, n, block, g)
    bmat = restrict_two_form(beta, n, block, block)
    # |beta|^2 = (1/2) beta_ij beta_kl g^ik g^jl
    norm_beta = 0.5 * np.einsum('ij,kl,ik,jl->', bmat, bmat, ginv, ginv)
    assert abs(norm_alpha - norm_beta) < 1e-12


def test_hodge_orientation_sign():
    n = 3
    block = (0, 1, 2)
    combos1, idx1 = combinations_index(n, 1)
    alpha = np.zeros(3)
    alpha[idx1[(0,)]] = 1.0
    plus = hodge_restricted(alpha, 1, n, block, np.eye(3), orientation=1.0)
    minus = hodge_restricted(alpha, 1, n, block, np.eye(3), orientation=-1.0)
    assert np.allclose(plus, -minus)


def test_split_spec():
    split = SplitSpec(blocks=(("plus", (0, 1, 2)), ("minus", (3, 4, 5))))
    assert split.indices("minus") == (3, 4, 5)
    assert split.orientation("plus") == 1.0
    flipped = split.with_orientation("minus", -1.0)
    assert flipped.orientation("minus") == -1.0
    with pytest.raises(ValueError):
        SplitSpec(blocks=(("a", (0, 1)), ("b", (1, 2))))


def test_transform_form_change_of_frame():
    n = 3
    combos2, idx2 = combinations_index(n, 2)
    comps = np.zeros(len(combos2))
    comps[idx2[(0, 1)]] = 1.0   # dx1 ^ dx2
    frame = np.array([[2.0, 0.0, 0.0], [0.0, 1.0, 1.0], [0.0, 0.0, 1.0]]).T
    out = transform_form(comps, 2, n, frame.T)
    # omega(f1, f2) where f1 = 2 e1, f2 = e2: det [[2,0],[0,1]] = 2
    assert abs(out[idx2[(0, 1)]] - 2.0) < 1e-14


def test_sampler_deterministic_and_respects_exclusions():
    dom = Domain(lo=(-1.0, -1.0, -1.0), hi=(1.0, 1.0, 1.0),
                 exclusions=(lambda p: float(np.linalg.norm(p)),))
    cfg = StencilConfig(h=1e-2)
    pts1 = sample_points(dom, 25, cfg, seed=42)
    pts2 = sample_points(dom, 25, cfg, seed=42)
    assert all(np.array_equal(a, b) for a, b in zip(pts1, pts2))
    pts3 = sample_points(dom, 25, cfg, seed=7)
    assert any(not np.array_equal(a, b) for a, b in zip(pts1, pts3))
    for p in pts1:
        assert np.linalg.norm(p) > 10 * cfg.h
        assert np.all(np.abs(p) < 1.0)


def test_d_squared_structurally_zero_at_shared_step():
    # central differences are shift-operator combinations and shifts commute,
    # so nested stencils at one step annihilate d o d up to roundoff
    n = 3
    combos1, _ = combinations_index(n, 1)
    rng = np.random.default_rng(7)
    coef = rng.normal(size=(len(combos1), n, n))

    def omega(p):
        return np.array([float(p ** 3 @ c @ p) for c in coef])

    p = np.array([0.4, -0.3, 0.2])
    h = 1e-2

    def domega(q):
        return exterior_d(omega, q, 1, StencilConfig(h=h))

    assert np.max(np.abs(exterior_d(domega, p, 2, StencilConfig(h=h)))) < 1e-10


def test_d_squared_decreases_at_stencil_order():
    # with decoupled inner/outer steps the residual is a genuine truncation
    # difference and halves at the stencil order
    n = 3
    combos1, _ = combinations_index(n, 1)
    rng = np.random.default_rng(7)
    coef = rng.normal(size=(len(combos1), n, n))

    def omega(p):
        return np.array([float(p ** 3 @ c @ p) for c in coef])

    p = np.array([0.4, -0.3, 0.2])
    res = {}
    for h in (2e-2, 1e-2):
        def domega(q, h=h):
            return exterior_d(omega, q, 1, StencilConfig(h=h))
        res[h] = np.max(np.abs(exterior_d(domega, p, 2, StencilConfig(h=h / 2))))
    assert res[2e-2] > 1e-8
    assert res[2e-2] / res[1e-2] > 3.4
