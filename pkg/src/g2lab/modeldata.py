"""Float views of the exactly certified model data, for the numerical modules.

Everything here is derived from the exact constructions at import-cost only;
no float constant is written down by hand.
"""

from __future__ import annotations

import functools

import numpy as np

from .embeddings import g2_basis, h_map, m_vector_basis
from .threeform import invariant_threeform, star_phi


@functools.lru_cache(maxsize=1)
def phi_constants() -> dict:
    """{(i, j, k): float} nonzero components of the model 3-form."""
    return {t: float(c) for t, c in invariant_threeform().nonzero_items()}


@functools.lru_cache(maxsize=1)
def star_phi_constants() -> dict:
    return {q: float(c) for q, c in star_phi(invariant_threeform()).nonzero_items()}


@functools.lru_cache(maxsize=1)
def cross_tensor() -> np.ndarray:
    """F with (x X y)_k = sum_ij x_i y_j F[i, j, k]."""
    phi = invariant_threeform()
    f = np.zeros((7, 7, 7))
    for i in range(7):
        for j in range(7):
            for k in range(7):
                f[i, j, k] = float(phi.value(i, j, k))
    return f


def cross7(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.einsum('i,j,ijk->k', x, y, cross_tensor())


@functools.lru_cache(maxsize=1)
def h_tensors() -> np.ndarray:
    """H[i] = float matrix of h(e_i) acting on R^6, for the 6 basis directions."""
    out = np.zeros((6, 6, 6))
    for i, v in enumerate(m_vector_basis()):
        out[i] = np.array(h_map(v).to_floats())
    return out


def h6(w: np.ndarray) -> np.ndarray:
    """h of a 6-vector in frame components, as a 6x6 float matrix."""
    return np.einsum('i,iab->ab', np.asarray(w, dtype=float), h_tensors())


@functools.lru_cache(maxsize=1)
def g2_orthonormal_span() -> np.ndarray:
    """Orthonormal (Frobenius) basis of the algebra span, rows of shape (14, 49)."""
    flat = np.array([[float(v) for v in el.flatten()] for el in g2_basis().elements])
    q, _ = np.linalg.qr(flat.T)
    return q.T[:14]


def off_g2_fraction(m: np.ndarray, tiny: float = 1e-10) -> float:
    """Fraction of a skew 7x7 matrix lying trace-form-orthogonal to the algebra.

    Returns 0 for matrices of norm below `tiny` (the 0/0 convention).
    """
    v = m.reshape(-1)
    total = np.linalg.norm(v)
    if total < tiny:
        return 0.0
    q = g2_orthonormal_span()
    inside = q.T @ (q @ v)
    return float(np.linalg.norm(v - inside) / total)


@functools.lru_cache(maxsize=1)
def so6_part_projectors() -> dict:
    """Orthonormal bases of the three pieces so(6) = sl3 + R J + h(m), as
    (dim, 36) float arrays keyed by 'sl3', 'J', 'h'."""
    from .embeddings import canonical_rep6
    sl3 = np.array([[float(v) for v in m.flatten()] for m in canonical_rep6()])
    j = np.zeros((6, 6))
    j[:3, 3:] = -np.eye(3)
    j[3:, :3] = np.eye(3)
    hpart = np.array([[float(v) for v in h_map(mv).flatten()]
                      for mv in m_vector_basis()])

    def orth(rows):
        q, _ = np.linalg.qr(rows.T)
        return q.T[:rows.shape[0]]

    return {"sl3": orth(sl3), "J": j.reshape(1, 36) / np.linalg.norm(j),
            "h": orth(hpart)}


def decompose_so6(m: np.ndarray) -> dict:
    """Orthogonal components of a skew 6x6 matrix along sl3, the complex
    structure direction, and the h-image; returns norms and the h-preimage."""
    v = m.reshape(-1)
    parts = so6_part_projectors()
    out = {}
    for name, q in parts.items():
        coef = q @ v
        out[name] = float(np.linalg.norm(coef))
    # h-preimage: solve h6(w) ~ h-part of m in the (non-orthonormal) h basis
    hbasis = np.array([[float(x) for x in h_map(mv).flatten()]
                       for mv in m_vector_basis()])
    coef, *_ = np.linalg.lstsq(hbasis.T, v, rcond=None)
    out["h_preimage"] = coef
    return out
