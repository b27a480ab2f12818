"""Check reports, suite manifests, and deterministic JSON-lines serialization.

A report's canonical JSON form contains no timing and no environment data, so
two runs with the same seed and configuration produce byte-identical streams;
wall-clock times appear only in the human summary table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np


@dataclass
class CheckReport:
    check_id: str
    status: str                      # "pass" | "fail" | "warn"
    residuals: dict
    tolerance: float
    seed: int
    params: dict = field(default_factory=dict)
    order_estimate: object = None    # float | "exact" | None
    runtime_ms: int = 0              # human summary only, never serialized

    def json_obj(self) -> dict:
        out = {"check_id": self.check_id, "status": self.status,
               "params": _jsonable(self.params),
               "residuals": {k: float(v) for k, v in sorted(self.residuals.items())},
               "tolerance": float(self.tolerance), "seed": int(self.seed)}
        if self.order_estimate is not None:
            out["order_estimate"] = (self.order_estimate
                                     if isinstance(self.order_estimate, str)
                                     else float(self.order_estimate))
        return out

    def json_line(self) -> str:
        return json.dumps(self.json_obj(), separators=(",", ":"), sort_keys=False)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    return obj


def passes(residuals: dict, tolerance: float) -> bool:
    return all(v <= tolerance for v in residuals.values())


def simple_report(check_id: str, residuals: dict, tolerance: float, seed: int,
                  params: dict | None = None, order_estimate=None,
                  order_band: tuple | None = None) -> CheckReport:
    """Standard pass rule: all residuals within tolerance, and the order
    estimate inside the declared band when one is present ("exact" always
    qualifies)."""
    ok = passes(residuals, tolerance)
    if order_band is not None and order_estimate != "exact":
        lo, hi = order_band
        ok = ok and order_estimate is not None and lo <= order_estimate <= hi
    params = dict(params or {})
    if order_band is not None:
        params["order_band"] = list(order_band)
    return CheckReport(check_id=check_id, status="pass" if ok else "fail",
                       residuals=residuals, tolerance=tolerance, seed=seed,
                       params=params, order_estimate=order_estimate)


def control_report(check_id: str, measured: dict, required: float, seed: int,
                   params: dict | None = None, order_estimate=None,
                   order_band: tuple | None = None) -> CheckReport:
    """Negative controls pass when every measured violation stays at or above
    the required size; the decision residual is the shortfall."""
    shortfall = {f"shortfall_{k}": max(0.0, required - v) for k, v in measured.items()}
    ok = all(v == 0.0 for v in shortfall.values())
    if order_band is not None and order_estimate != "exact":
        lo, hi = order_band
        ok = ok and order_estimate is not None and lo <= order_estimate <= hi
    params = dict(params or {})
    params["expected"] = f"residual >= {required}"
    params.update({f"measured_{k}": float(v) for k, v in measured.items()})
    if order_band is not None:
        params["order_band"] = list(order_band)
    return CheckReport(check_id=check_id, status="pass" if ok else "fail",
                       residuals=shortfall, tolerance=0.0, seed=seed,
                       params=params, order_estimate=order_estimate)


def convergence_study(residual_fn: Callable[[float], float],
                      h_list: Sequence[float]) -> tuple:
    """(order, {h: residual}) with the least-squares slope of the log-log fit;
    order is "exact" when every residual sits at the zero floor."""
    from .g2construct import estimate_order
    values = [float(residual_fn(h)) for h in h_list]
    return estimate_order(h_list, values), dict(zip(h_list, values))


@dataclass(frozen=True)
class SuiteManifest:
    name: str
    check_ids: tuple

    def __post_init__(self):
        if len(set(self.check_ids)) != len(self.check_ids):
            raise ValueError("duplicate check ids in a manifest")


@dataclass
class SuiteContext:
    """Knobs shared by every check in a run."""

    seed: int = 42
    samples: int = 200
    h: float | None = None
    dump_dir: str | None = None
    sample_rows: dict = field(default_factory=dict)

    def record_samples(self, check_id: str, header: Sequence[str], rows):
        if self.dump_dir is not None:
            self.sample_rows[check_id] = (list(header), [list(r) for r in rows])

    def scaled_samples(self, default: int) -> int:
        """Scale a check's default sample count by the requested global count."""
        return max(1, int(round(default * self.samples / 200.0)))
