"""Brute-force audit of the first-order bounds over every connected graph.

Each chunk of masks is scanned by the kernel, its Laplacians are
eigensolved in one batched call, and every requested bound is evaluated
with the same vectorized formulas used by :mod:`consensus_limits.bounds`.
Chunk results are reduced in mask order, so the output does not depend on
the number of workers.
"""
from __future__ import annotations

import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, TextIO

import numpy as np

from .. import _kernels
from .. import bounds as B
from ..errors import NTooLarge
from .enumeration import CHUNK, EnumerationStream, masks_to_laplacians

CSV_HEADER = "graph_id,m,W,T,rho,bound_lo,bound_hi,ok\n"
EXTREME_TOL = 1e-9


@lru_cache(maxsize=None)
def _delta_alpha_cached(degrees: tuple) -> float:
    return B.delta_alpha(np.array(degrees, dtype=float))


def _degree_bound(n: int, deg: np.ndarray) -> np.ndarray:
    closed = B.degree_closed_lower(n, np.sum(1.0 / deg, axis=1))
    seqs, inv = np.unique(np.sort(deg, axis=1), axis=0, return_inverse=True)
    alpha = np.array([_delta_alpha_cached(tuple(int(x) for x in s)) for s in seqs])
    return np.maximum(closed, alpha[inv.reshape(-1)])


def _nothing(k):
    return np.full(k, -np.inf), np.full(k, np.inf)


def _rows(n, c, mask_where, lo=None, hi=None):
    k = len(c["rho"])
    low, up = _nothing(k)
    if lo is not None:
        low = np.where(mask_where, lo, -np.inf)
    if hi is not None:
        up = np.where(mask_where, hi, np.inf)
    return low, up


def _thm3(n, c):
    k = len(c["rho"])
    return _rows(n, c, np.ones(k, bool), np.full(k, B.universal_lower(n)),
                 np.full(k, B.universal_upper(n)))


def _thm4(n, c):
    where = (c["m"] == n - 1) & (n >= 5)
    return _rows(n, c, where, B.tree_lower(n), B.universal_upper(n))


def _thm5(n, c):
    where = (c["m"] == n) & (n >= 13)
    return _rows(n, c, where, B.unicyclic_lower(n), B.unicyclic_upper(n))


def _thm6(n, c):
    return _rows(n, c, c["bipartite"], B.bipartite_printed_lower(n))


def _thm9(n, c):
    m = c["m"]
    return _rows(n, c, m > 0, B.diameter_lower(n, m), B.diameter_upper(n, m, c["diameter"]))


def _thm10(n, c):
    return _rows(n, c, c["m"] > 0, B.weight_sum_lower(n, c["m"]))


def _thm11(n, c):
    return _rows(n, c, c["T"] > 0, B.spanning_tree_lower(n, np.log(c["T"])))


def _thm12(n, c):
    return _rows(n, c, c["m"] > 0, B.cut_edge_lower(n, c["cut_edges"]))


def _thm13(n, c):
    return _rows(n, c, c["m"] > 0, c["delta"])


def _thm17(n, c):
    return _rows(n, c, (c["m"] > 0) & (n >= 3), (n - 1) / (2.0 * c["sigma"]))


def _cor1(n, c):
    m = c["m"]
    a0 = 2.0 * m
    hi = 0.5 - 1.0 / (2 * n) + c["diameter"] * (n / 4.0 - a0 / (4.0 * (n - 1)))
    return _rows(n, c, m > 0, (n - 1) ** 2 / (2.0 * a0), hi)


def _cor3(n, c):
    dmax = c["degrees"].max(axis=1)
    return _rows(n, c, (c["m"] > 0) & (n >= 3), (n - 1) / (2.0 * dmax) - 1.0 / (2 * n))


AUDIT_BOUNDS: dict[str, Callable] = {
    "thm3": _thm3,
    "thm4": _thm4,
    "thm5": _thm5,
    "thm6": _thm6,
    "thm9": _thm9,
    "thm10": _thm10,
    "thm11": _thm11,
    "thm12": _thm12,
    "thm13": _thm13,
    "thm17": _thm17,
    "cor1": _cor1,
    "cor3": _cor3,
}
DEFAULT_BOUNDS = ("thm3", "thm9", "thm10", "thm11", "thm12", "thm13", "thm17", "cor1", "cor3")


def parse_bounds(spec: str | Iterable[str] | None) -> tuple[str, ...]:
    if spec is None:
        return DEFAULT_BOUNDS
    names = [s.strip() for s in spec.split(",")] if isinstance(spec, str) else list(spec)
    names = [s for s in names if s]
    bad = [s for s in names if s not in AUDIT_BOUNDS]
    if bad:
        raise ValueError(f"unknown bound(s) {', '.join(bad)}; known: {', '.join(AUDIT_BOUNDS)}")
    return tuple(names)


def evaluate_chunk(n: int, c: dict, names: tuple[str, ...], slack: float = B.DEFAULT_SLACK) -> dict:
    """Add ``rho, zeta2, T, delta, bound_lo, bound_hi, ok`` and per-bound pass flags to a scan result."""
    c = dict(c)
    k = len(c["mask"])
    if k:
        L = masks_to_laplacians(n, c["mask"])
        lam = np.linalg.eigvalsh(L)
        c["rho"] = 0.5 * np.sum(1.0 / lam[:, 1:], axis=1)
        c["zeta2"] = np.sum(lam[:, 1:] ** -2.0, axis=1)
        c["T"] = np.rint(np.linalg.det(L[:, 1:, 1:])) if n > 1 else np.ones(k)
        c["delta"] = _degree_bound(n, c["degrees"].astype(float))
    else:
        c["rho"] = c["zeta2"] = c["T"] = c["delta"] = np.zeros(0)
    lo = np.full(k, -np.inf)
    hi = np.full(k, np.inf)
    ok = np.ones(k, dtype=bool)
    passed = {}
    for name in names:
        blo, bhi = AUDIT_BOUNDS[name](n, c)
        flag = B.within(blo, c["rho"], bhi, slack)
        passed[name] = flag
        ok &= flag
        lo = np.maximum(lo, blo)
        hi = np.minimum(hi, bhi)
    c.update(bound_lo=lo, bound_hi=hi, ok=ok, passed=passed)
    return c


def _audit_job(args):
    n, lo, hi, code, names, slack = args
    return evaluate_chunk(n, _kernels.scan(n, lo, hi, code), names, slack)


def format_csv_rows(c: dict) -> str:
    buf = io.StringIO()
    for gid, m, T, rho, blo, bhi, ok in zip(
        c["mask"].tolist(), c["m"].tolist(), c["T"].tolist(), c["rho"].tolist(),
        c["bound_lo"].tolist(), c["bound_hi"].tolist(), c["ok"].tolist(),
    ):
        buf.write(f"{gid},{m},{m},{int(T)},{rho:.17g},{blo:.17g},{bhi:.17g},"
                  f"{'true' if ok else 'false'}\n")
    return buf.getvalue()


@dataclass
class Extreme:
    value: float = math.nan
    graphs: list[int] = field(default_factory=list)

    def merge(self, values: np.ndarray, masks: np.ndarray, pick_min: bool):
        if not len(values):
            return
        v = float(values.min() if pick_min else values.max())
        if math.isnan(self.value):
            self.value = v
        tol = EXTREME_TOL * max(1.0, abs(self.value))
        gain = (self.value - v) if pick_min else (v - self.value)
        if gain > tol:
            self.value, self.graphs = v, []
        elif gain < -tol:
            return
        tol = EXTREME_TOL * max(1.0, abs(self.value))
        self.graphs.extend(int(x) for x in masks[np.abs(values - self.value) <= tol])


@dataclass
class Violation:
    graph_id: int
    bound: str
    rho: float
    lower: float
    upper: float


@dataclass
class AuditReport:
    n: int
    filter: str
    bounds: tuple[str, ...]
    count: int = 0
    violations: list[Violation] = field(default_factory=list)
    violation_count: int = 0
    minimum: Extreme = field(default_factory=Extreme)
    maximum: Extreme = field(default_factory=Extreme)
    min_rho_by_m: dict[int, float] = field(default_factory=dict)
    scatter: dict[str, np.ndarray] | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "filter": self.filter,
            "bounds": list(self.bounds),
            "count": self.count,
            "violation_count": self.violation_count,
            "violations": [v.__dict__ for v in self.violations],
            "min": {"rho": self.minimum.value, "graph_ids": self.minimum.graphs},
            "max": {"rho": self.maximum.value, "graph_ids": self.maximum.graphs},
            "min_rho_by_m": {str(k): v for k, v in sorted(self.min_rho_by_m.items())},
        }


MAX_STORED_VIOLATIONS = 1000


def exhaustive_audit(n: int, bounds=None, filter: str = "all-connected", workers: int = 1,
                     csv: TextIO | None = None, scatter: bool = False,
                     slack: float = B.DEFAULT_SLACK, chunk: int = CHUNK) -> AuditReport:
    """Evaluate ``bounds`` on every enumerated graph.

    Rows are streamed to ``csv`` (if given) in mask order. With
    ``scatter=True`` the report keeps ``mask, m, W, T, delta, rho, zeta2``
    arrays for plotting.
    """
    names = parse_bounds(bounds)
    stream = EnumerationStream(n, filter)
    if n > 7:
        raise NTooLarge(f"audits support n <= 7, got {n}")
    code = _kernels.FILTERS[filter]
    jobs = [(n, a, min(a + chunk, stream.hi), code, names, slack)
            for a in range(0, stream.hi, chunk)]
    report = AuditReport(n, filter, names)
    keep: dict[str, list] = {k: [] for k in ("mask", "m", "W", "T", "delta", "rho", "zeta2")}
    if csv is not None:
        csv.write(CSV_HEADER)

    def consume(c):
        report.count += len(c["mask"])
        report.minimum.merge(c["rho"], c["mask"], True)
        report.maximum.merge(c["rho"], c["mask"], False)
        for m in np.unique(c["m"]):
            v = float(c["rho"][c["m"] == m].min())
            key = int(m)
            report.min_rho_by_m[key] = min(v, report.min_rho_by_m.get(key, math.inf))
        for name in names:
            bad = np.flatnonzero(~c["passed"][name])
            report.violation_count += len(bad)
            for i in bad[: max(0, MAX_STORED_VIOLATIONS - len(report.violations))]:
                blo, bhi = AUDIT_BOUNDS[name](n, {k: v[i:i + 1] for k, v in c.items()
                                                  if isinstance(v, np.ndarray)})
                report.violations.append(Violation(int(c["mask"][i]), name, float(c["rho"][i]),
                                                   float(blo[0]), float(bhi[0])))
        if csv is not None:
            csv.write(format_csv_rows(c))
        if scatter:
            keep["mask"].append(c["mask"])
            keep["m"].append(c["m"])
            keep["W"].append(c["m"].astype(float))
            keep["T"].append(c["T"])
            keep["delta"].append(c["delta"])
            keep["rho"].append(c["rho"])
            keep["zeta2"].append(c["zeta2"])

    if workers <= 1:
        for job in jobs:
            consume(_audit_job(job))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for c in pool.map(_audit_job, jobs):
                consume(c)
    if scatter:
        report.scatter = {k: np.concatenate(v) if v else np.zeros(0) for k, v in keep.items()}
    return report


def write_scatter_csv(report: AuditReport, out: TextIO) -> None:
    """Plot-ready ``graph_id,m,W,T,delta_bound,rho`` rows."""
    s = report.scatter
    if s is None:
        raise ValueError("audit was run without scatter=True")
    out.write("graph_id,m,W,T,delta_bound,rho\n")
    for row in zip(s["mask"].tolist(), s["m"].tolist(), s["W"].tolist(), s["T"].tolist(),
                   s["delta"].tolist(), s["rho"].tolist()):
        out.write(f"{row[0]},{row[1]},{row[2]:.17g},{int(row[3])},{row[4]:.17g},{row[5]:.17g}\n")
