"""Fundamental limits and sparsity tradeoffs on the performance measures.

The ``*_lower``/``*_upper`` helpers are plain arithmetic and accept numpy
arrays, so the exhaustive audits evaluate exactly the same expressions as
the per-graph :class:`BoundReport` builders.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import Disconnected, InvalidN, WeightedNotSupported, WrongSocType
from .graph import (
    WeightedGraph,
    bridges,
    graph_stats,
    is_bipartite,
    is_connected,
    sparsity_measures,
)
from .measures import SocSystem
from .spectral import graph_frobenius_norm, spectrum, zeta

DEFAULT_SLACK = 1e-9
TIGHT_TOL = 1e-9


@dataclass(frozen=True)
class BoundReport:
    name: str
    lower: float
    upper: float
    measured: float
    satisfied: bool
    tight_at: str | None = None
    slack_tolerance: float = DEFAULT_SLACK
    extras: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "lower": _json_float(self.lower),
            "upper": _json_float(self.upper),
            "measured": self.measured,
            "satisfied": self.satisfied,
            "tight_at": self.tight_at,
        }
        if self.extras:
            d["extras"] = {k: _json_float(v) if isinstance(v, float) else v
                           for k, v in self.extras.items()}
        return d


def _json_float(x: float):
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def within(lower, measured, upper, slack=DEFAULT_SLACK):
    """``lower - tol <= measured <= upper + tol`` with ``tol = slack * max(1, |measured|)``.

    Works elementwise on arrays.
    """
    tol = slack * np.maximum(1.0, np.abs(measured))
    return (lower - tol <= measured) & (measured <= upper + tol)


def make_report(name, measured, lower=-math.inf, upper=math.inf, tight_at=None,
                slack=DEFAULT_SLACK, **extras) -> BoundReport:
    ok = bool(within(lower, measured, upper, slack))
    return BoundReport(name, float(lower), float(upper), float(measured), ok, tight_at, slack, extras)


def is_tight(value, bound, tol=TIGHT_TOL) -> bool:
    return abs(value - bound) <= tol * max(1.0, abs(value))


# ------------------------------------------------------------ size-only forms

def universal_lower(n):
    return 0.5 - 1.0 / (2 * n)


def universal_upper(n):
    return (n * n - 1) / 12.0


def tree_lower(n):
    return (n - 1) ** 2 / (2.0 * n)


def unicyclic_lower(n):
    return (n - 1) ** 2 / (2.0 * n) - 1.0 / 3.0


def unicyclic_upper(n):
    return (n * n - 1) / 12.0 + 3.0 / (2 * n) - 1.0


def bipartite_printed_lower(n):
    return 1.0 - (n // 2) / (n * ((n + 1) // 2))


def soc2_lower(n, beta=1.0):
    return (1.0 / (2 * n) - 1.0 / (2 * n * n)) / beta


def xi(n, beta=1.0):
    """Hard upper limit on the Type-2 position measure."""
    return (n * n - 1) ** 2 / (72.0 * beta) - (n - 1) * (n - 2) ** 2 / (2.0 * n * beta)


def soc2_tree_lower(n, beta=1.0):
    return 1.0 / (2 * beta) + (n - 2) ** 3 / (2.0 * beta * (2 * n - 3) ** 2)


def soc_path_value(n: int, beta: float = 1.0) -> float:
    """Closed-form Type-2 position measure of the path ``P_n``."""
    return (n * n - 1) ** 2 / (72.0 * beta) - math.comb(n + 2, 5) / (n * beta)


def soc_star_value(n: int, beta: float = 1.0) -> float:
    """Closed-form Type-2 position measure of the star ``S_n``."""
    return (n / 2.0 + 1.0 / (2 * n * n) - 1.0) / beta


def diameter_lower(n, m):
    return (n - 1) ** 2 / (4.0 * m)


def diameter_upper(n, m, diam):
    return (n - 1 + (n * (n - 1) / 2.0 - m) * diam) / (2.0 * n)


def weight_sum_lower(n, W):
    return (n - 1) ** 2 / (4.0 * W)


def spanning_tree_lower(n, log_T):
    """Uses ``log T(G)`` so that huge counts do not overflow."""
    return (n - 1) / (2.0 * np.exp((np.log(n) + log_T) / (n - 1)))


def cut_edge_lower(n, kappa):
    return 1.0 / (2 * n) + (kappa + 1) / 2.0 - 1.0 / (n - kappa)


def degree_closed_lower(n, inv_degree_sum):
    """Unweighted closed form ``-1/(2n) + (n-1)/(2n) * sum_i 1/d_i``."""
    return -1.0 / (2 * n) + (n - 1) / (2.0 * n) * inv_degree_sum


def degree_regular_lower(n, d):
    """Weighted ``d``-regular closed form ``(n-1)^2 / (2 n d)``."""
    return (n - 1) ** 2 / (2.0 * n * d)


def _delta_objective(alpha: float, n: int, d: np.ndarray) -> float:
    return -1.0 / (n * alpha) + float(np.sum(1.0 / (2.0 * d + alpha)))


def delta_alpha(degrees, grid_points: int = 301, rel_width: float = 1e-10) -> float:
    """``max_{alpha > 0} -1/(n alpha) + sum_i 1/(2 d_i + alpha)``.

    Log grid over ``[1e-6, 1e6]`` followed by golden-section refinement of
    the best bracket.
    """
    d = np.asarray(degrees, dtype=float)
    n = len(d)
    grid = np.logspace(-6, 6, grid_points)
    vals = -1.0 / (n * grid) + np.sum(1.0 / (2.0 * d[None, :] + grid[:, None]), axis=1)
    k = int(np.argmax(vals))
    a, b = grid[max(k - 1, 0)], grid[min(k + 1, grid_points - 1)]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c, e = b - invphi * (b - a), a + invphi * (b - a)
    fc, fe = _delta_objective(c, n, d), _delta_objective(e, n, d)
    while (b - a) > rel_width * e:
        if fc > fe:
            b, e, fe = e, c, fc
            c = b - invphi * (b - a)
            fc = _delta_objective(c, n, d)
        else:
            a, c, fc = c, e, fe
            e = a + invphi * (b - a)
            fe = _delta_objective(e, n, d)
    return max(float(vals[k]), _delta_objective(0.5 * (a + b), n, d))


def frobenius_lower(m, fro, beta=1.0):
    return 8.0 * m ** 4 / (beta * fro ** 6)


def frobenius_regular_lower(n, d, beta=1.0):
    return n * d / (2.0 * beta * (1.0 + d) ** 3)


# ---------------------------------------------------------- n-only bound sets

@dataclass(frozen=True)
class FamilyBounds:
    lower: float
    upper: float
    lower_achiever: str | None
    upper_achiever: str | None
    strict_lower: bool = False
    strict_upper: bool = False
    extras: dict[str, Any] = field(default_factory=dict)


def _need(n, minimum, what):
    if int(n) != n or n < minimum:
        raise InvalidN(f"{what} requires n >= {minimum}, got {n}")


def universal_foc_bounds(n: int) -> tuple[float, float]:
    _need(n, 2, "universal bounds")
    return universal_lower(n), universal_upper(n)


def tree_bounds(n: int) -> FamilyBounds:
    _need(n, 2, "tree bounds")
    return FamilyBounds(tree_lower(n), universal_upper(n), "S_n", "P_n",
                        extras={"asserted": n >= 5})


def path_like_k3_value(n: int) -> float:
    """``rho`` of a triangle with a pendant path, ``(n^3 - 11n + 18) / (12n)``."""
    return (n ** 3 - 11 * n + 18) / (12.0 * n)


def unicyclic_bounds(n: int) -> FamilyBounds:
    """Printed unicyclic bounds.

    The path-like achiever evaluates to exactly 1/6 above the printed upper
    expression for every n, so ``extras`` carries its value and flags the
    upper expression as inconsistent.
    """
    _need(n, 3, "unicyclic bounds")
    upper = unicyclic_upper(n)
    achiever = path_like_k3_value(n) if n >= 4 else None
    return FamilyBounds(unicyclic_lower(n), upper,
                        "S(K_3; K_1, ..., K_1)", "P(K_3; K_1, ..., K_1)",
                        extras={"asserted": n >= 13,
                                "upper_achiever_value": achiever,
                                "printed_upper_consistent":
                                    achiever is None or bool(achiever <= upper + TIGHT_TOL)})


def complete_bipartite_value(a: int, b: int) -> float:
    """``rho(K_{a,b})`` from the spectrum ``{0, a^(b-1), b^(a-1), a+b}``."""
    return 0.5 * ((b - 1) / a + (a - 1) / b + 1.0 / (a + b))


def bipartite_bounds(n: int) -> FamilyBounds:
    """Bounds over connected bipartite graphs.

    Every connected bipartite graph is a spanning subgraph of some
    ``K_{a,n-a}`` and adding edges never increases ``rho``, so the minimum
    is ``min_a rho(K_{a,n-a})``, attained by the balanced split. The
    printed closed form is kept in ``extras`` and flagged when it exceeds
    that minimum (it does for every n >= 3).
    """
    _need(n, 2, "bipartite bounds")
    a, b = n // 2, (n + 1) // 2
    lower = min(complete_bipartite_value(k, n - k) for k in range(1, n // 2 + 1))
    printed = bipartite_printed_lower(n)
    return FamilyBounds(lower, universal_upper(n), f"K_{{{a},{b}}}", "P_n",
                        extras={"printed_lower": printed,
                                "achiever_value": complete_bipartite_value(a, b),
                                "printed_consistent": bool(printed <= lower + TIGHT_TOL)})


def soc2_universal_bounds(n: int, beta: float = 1.0) -> FamilyBounds:
    _need(n, 2, "Type-2 universal bounds")
    return FamilyBounds(soc2_lower(n, beta), xi(n, beta), "K_n", None, strict_upper=True,
                        extras={"soc_path": soc_path_value(n, beta)})


def soc2_tree_bounds(n: int, beta: float = 1.0) -> FamilyBounds:
    _need(n, 2, "Type-2 tree bounds")
    return FamilyBounds(soc2_tree_lower(n, beta), xi(n, beta), None, None,
                        strict_lower=True, strict_upper=True,
                        extras={"soc_path": soc_path_value(n, beta),
                                "soc_star": soc_star_value(n, beta),
                                "asserted": n >= 5})


# ------------------------------------------------------- graph-based reports

def _prepare(g: WeightedGraph, unweighted_only: bool, name: str):
    if g.n < 2:
        raise InvalidN(f"{name} requires n >= 2")
    if unweighted_only and not g.is_unweighted:
        raise WeightedNotSupported(f"{name} is stated for unweighted graphs only")
    if not is_connected(g):
        raise Disconnected(f"{name} requires a connected coupling graph")
    s = spectrum(g)
    return s, 0.5 * zeta(s, 1)


def diameter_edge_bound(g: WeightedGraph, slack=DEFAULT_SLACK) -> BoundReport:
    _, rho = _prepare(g, True, "diameter/edge bound")
    st = graph_stats(g)
    lo, hi = diameter_lower(g.n, g.m), diameter_upper(g.n, g.m, st.diameter)
    return make_report("thm9_diameter_edges", rho, lo, hi, "K_n (both); S_n (upper)", slack,
                       diameter=st.diameter, m=g.m)


def weight_sum_bound(g: WeightedGraph, slack=DEFAULT_SLACK) -> BoundReport:
    _, rho = _prepare(g, False, "weight-sum bound")
    return make_report("thm10_weight_sum", rho, weight_sum_lower(g.n, g.weight_sum),
                       tight_at="K_n with uniform weights", slack=slack, W=g.weight_sum)


def spanning_tree_bound(g: WeightedGraph, slack=DEFAULT_SLACK) -> BoundReport:
    _, rho = _prepare(g, False, "spanning-tree bound")
    st = graph_stats(g)
    lo = float(spanning_tree_lower(g.n, st.log_spanning_tree_count))
    return make_report("thm11_spanning_trees", rho, lo, tight_at="K_n", slack=slack,
                       spanning_tree_count=st.spanning_tree_count)


def cut_edge_bound(g: WeightedGraph, slack=DEFAULT_SLACK) -> BoundReport:
    _, rho = _prepare(g, True, "cut-edge bound")
    kappa = len(bridges(g))
    lo = cut_edge_lower(g.n, kappa)
    return make_report("thm12_cut_edges", rho, lo, tight_at="S(K_{n-kappa}; K_1, ..., K_1)",
                       slack=slack, kappa=kappa, tight=is_tight(rho, lo))


def degree_sequence_bound(g: WeightedGraph, slack=DEFAULT_SLACK) -> BoundReport:
    """Degree-sequence lower bound.

    On unweighted graphs the reported lower value is the larger of the
    closed form and the alpha-maximization (both are valid bounds); on
    weighted graphs only the maximization applies.
    """
    _, rho = _prepare(g, False, "degree-sequence bound")
    d = g.degrees
    da = delta_alpha(d)
    extras: dict[str, Any] = {"delta_alpha": da}
    if g.is_unweighted:
        closed = degree_closed_lower(g.n, float(np.sum(1.0 / d)))
        extras["closed_form"] = closed
        lo = max(closed, da)
    else:
        lo = da
    if np.allclose(d, d[0], rtol=1e-12, atol=0.0):
        extras["regular_closed_form"] = degree_regular_lower(g.n, float(d[0]))
    return make_report("thm13_degree_sequence", rho, lo, tight_at="K_n", slack=slack, **extras)


def soc_frobenius_bound(s: SocSystem | WeightedGraph, beta: float = 1.0,
                        slack=DEFAULT_SLACK) -> BoundReport:
    if isinstance(s, SocSystem):
        if s.soc_type != 2:
            raise WrongSocType("Frobenius bound applies to Type 2 networks")
        g, beta = s.coupling, s.beta
    else:
        g = s
    sp, _ = _prepare(g, False, "Frobenius bound")
    measured = zeta(sp, 2) / (2 * beta)
    fro = graph_frobenius_norm(g)
    extras: dict[str, Any] = {"frobenius_norm": fro}
    d = g.degrees
    if g.is_unweighted and np.all(d == d[0]):
        extras["regular_form"] = frobenius_regular_lower(g.n, float(d[0]), beta)
    # the edge count enters through sum(lambda_i) = 2m, i.e. the weight sum
    return make_report("thm14_frobenius", measured, frobenius_lower(g.weight_sum, fro, beta),
                       tight_at="K_n", slack=slack, **extras)


def tradeoff_checks(g: WeightedGraph, slack=DEFAULT_SLACK) -> list[BoundReport]:
    """Sparsity/performance tradeoffs; the S_{0,1} and sigma forms need n >= 3."""
    _, rho = _prepare(g, True, "tradeoff checks")
    n = g.n
    a0, s01, sigma = sparsity_measures(g)
    diam = graph_stats(g).diameter
    excess = rho - 0.5 + 1.0 / (2 * n)
    reports = [
        make_report("cor1_multiplicative", rho * a0, lower=(n - 1) ** 2 / 2.0,
                    tight_at=None, slack=slack, a0=a0),
        make_report("cor1_additive", excess / diam + a0 / (4.0 * (n - 1)), upper=n / 4.0,
                    tight_at="K_n", slack=slack, a0=a0, diameter=diam),
        make_report("cor2_sparsity_sandwich", a0, lower=(n - 1) ** 2 / (2.0 * rho),
                    upper=(n - 1) * (n - 4.0 * excess / diam), slack=slack, rho_star=rho),
    ]
    if n >= 3:
        reports += [
            make_report("cor3_s01", (rho + 1.0 / (2 * n)) * s01, lower=(n - 1) / 2.0,
                        tight_at="K_n", slack=slack, s01=s01),
            make_report("thm17_sigma", rho * sigma, lower=(n - 1) / 2.0,
                        tight_at="K_n", slack=slack, sigma=sigma),
        ]
    return reports


def _class_report(name: str, measured: float, fb: FamilyBounds, slack) -> BoundReport:
    tight = []
    if fb.lower_achiever:
        tight.append(f"lower: {fb.lower_achiever}")
    if fb.upper_achiever:
        tight.append(f"upper: {fb.upper_achiever}")
    return make_report(name, measured, fb.lower, fb.upper, tight_at="; ".join(tight) or None,
                       slack=slack, **fb.extras)


def all_bounds(g: WeightedGraph, beta: float = 1.0, slack=DEFAULT_SLACK) -> list[BoundReport]:
    """Every bound whose preconditions ``g`` satisfies."""
    sp, rho = _prepare(g, False, "bounds")
    n = g.n
    soc2 = zeta(sp, 2) / (2 * beta)
    out: list[BoundReport] = []
    if g.is_unweighted:
        lo, hi = universal_foc_bounds(n)
        out.append(make_report("thm3_universal", rho, lo, hi, "lower: K_n; upper: P_n", slack))
        if g.m == n - 1:
            out.append(_class_report("thm4_tree", rho, tree_bounds(n), slack))
            out.append(_class_report("thm8_soc2_tree", soc2, soc2_tree_bounds(n, beta), slack))
        if g.m == n and n >= 3:
            out.append(_class_report("thm5_unicyclic", rho, unicyclic_bounds(n), slack))
        if is_bipartite(g):
            out.append(_class_report("thm6_bipartite", rho, bipartite_bounds(n), slack))
        out.append(_class_report("thm7_soc2_universal", soc2, soc2_universal_bounds(n, beta), slack))
        out.append(diameter_edge_bound(g, slack))
    out.append(weight_sum_bound(g, slack))
    out.append(spanning_tree_bound(g, slack))
    if g.is_unweighted:
        out.append(cut_edge_bound(g, slack))
    out.append(degree_sequence_bound(g, slack))
    out.append(soc_frobenius_bound(g, beta, slack))
    if g.is_unweighted:
        out.extend(tradeoff_checks(g, slack))
    return out

