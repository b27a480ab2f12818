"""The classical Gibbons-Hawking 4-metric V (dx^2 + dy^2 + dz^2) + V^-1 (dt + A)^2
from a positive harmonic V and a potential with dA = *dV.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .fields import Domain, StencilConfig, exterior_d, fd_gradient, hodge_restricted


def dirac_string_exclusion(p3: np.ndarray) -> float:
    """Regularity gauge for the string along {x = y = 0, z <= 0}: the factor
    r + z that controls every derivative of the potential (bounded above by
    the Euclidean distance to the string where z <= 0)."""
    return float(np.linalg.norm(p3) + p3[2])


def monopole_center_exclusion(p3: np.ndarray) -> float:
    return float(np.linalg.norm(p3))


def dirac_potential(charge: float = 0.5) -> Callable[[np.ndarray], np.ndarray]:
    """The potential with dA = *dV for V = charge / r, smooth away from the
    string along the negative z-axis: A = charge (y dx - x dy) / (r (r + z))."""
    def a(p3: np.ndarray) -> np.ndarray:
        x, y, z = float(p3[0]), float(p3[1]), float(p3[2])
        r = float(np.linalg.norm(p3))
        den = r * (r + z)
        return np.array([charge * y / den, -charge * x / den, 0.0])
    return a


CENTER_MARGIN = 0.3
STRING_MARGIN = 0.25


def margined(excl, margin: float):
    """Shrink an exclusion distance by a safety margin: derivatives of the
    pole fields grow fast near the singular sets, so samplers must keep a
    fixed standoff on top of the stencil reach."""
    return lambda p: excl(p) - margin


def spatial_domain(box: float = 1.2) -> Domain:
    """Standard 3-box avoiding the monopole center and the string."""
    return Domain(lo=(-box, -box, -box), hi=(box, box, box),
                  exclusions=(margined(monopole_center_exclusion, CENTER_MARGIN),
                              margined(dirac_string_exclusion, STRING_MARGIN)))


@dataclass(frozen=True)
class GHData:
    """Harmonic positive V and potential A on a 3-box minus exclusions."""

    v: Callable[[np.ndarray], float]
    a: Callable[[np.ndarray], np.ndarray]
    domain: Domain

    def consistency_residuals(self, samples, cfg: StencilConfig) -> dict:
        """Harmonicity of V and the dA = *dV equation, at sample points."""
        worst_harm = 0.0
        worst_mono = 0.0
        for p in samples:
            lap = 0.0
            for d in range(3):
                pp, pm = p.copy(), p.copy()
                pp[d] += cfg.h
                pm[d] -= cfg.h
                lap += (self.v(pp) - 2 * self.v(p) + self.v(pm)) / cfg.h ** 2
            worst_harm = max(worst_harm, abs(lap))
            da = exterior_d(self.a, p, 1, cfg)
            dv = fd_gradient(self.v, p, cfg)
            star_dv = hodge_restricted(dv, 1, 3, (0, 1, 2), np.eye(3))
            worst_mono = max(worst_mono, float(np.max(np.abs(da - star_dv))))
        return {"harmonicity": worst_harm, "potential": worst_mono}


def gh_build(data: GHData):
    """Metric field on (t, x, y, z); raises if V is not positive at a query."""
    def metric(p: np.ndarray) -> np.ndarray:
        x = p[1:4]
        v = float(data.v(x))
        if v <= 0:
            raise ValueError(f"V must be positive, got {v} at {x}")
        a = data.a(x)
        g = np.zeros((4, 4))
        g[1:, 1:] = v * np.eye(3)
        w = np.zeros(4)
        w[0] = 1.0
        w[1:] = a
        g += np.outer(w, w) / v
        return g
    return metric


def gh_domain4(spatial: Domain, t_range=(-1.0, 1.0)) -> Domain:
    return Domain(lo=(t_range[0],) + tuple(spatial.lo),
                  hi=(t_range[1],) + tuple(spatial.hi),
                  exclusions=tuple(_lift_exclusion(e) for e in spatial.exclusions))


def _lift_exclusion(excl):
    return lambda p: excl(p[1:])


def v_flat_quotient(p3: np.ndarray) -> float:
    """V = 1/(2r): the build is locally flat."""
    return 0.5 / float(np.linalg.norm(p3))


def v_taub_nut(p3: np.ndarray) -> float:
    """V = 1 + 1/(2r): Ricci-flat with curvature bounded away from zero."""
    return 1.0 + 0.5 / float(np.linalg.norm(p3))


def v_nonharmonic(p3: np.ndarray) -> float:
    """V = 1 + r^2: fails harmonicity, a negative control."""
    return 1.0 + float(p3 @ p3)
