import io
from math import factorial

import numpy as np
import pytest

from consensus_limits import foc_measure, graph_from_mask
from consensus_limits.bounds import bipartite_bounds, bipartite_printed_lower, tree_bounds
from consensus_limits.errors import NTooLarge
from consensus_limits.graph import graph_stats, is_bipartite
from consensus_limits.oracle import EnumerationStream, enumerate_connected, exhaustive_audit
from consensus_limits.oracle.audit import CSV_HEADER, parse_bounds, write_scatter_csv
from consensus_limits.oracle.enumeration import masks_to_laplacians, partition


def test_counts_small():
    assert [enumerate_connected(n).count() for n in (2, 3, 4, 5, 6)] == [1, 4, 38, 728, 26704]


def test_filtered_counts():
    for n in (3, 4, 5, 6):
        assert enumerate_connected(n, "trees").count() == n ** (n - 2)
    assert [enumerate_connected(n, "unicyclic").count() for n in (3, 4, 5, 6)] == [1, 15, 222, 3660]
    assert [enumerate_connected(n, "bipartite").count() for n in (3, 4, 5, 6)] == [3, 19, 195, 3031]


def test_stream_iteration_and_split():
    s = enumerate_connected(4)
    graphs = list(s)
    assert len(graphs) == 38
    masks = list(s.masks())
    assert masks == sorted(masks)
    parts = s.split(5)
    assert sum(p.count() for p in parts) == 38
    assert [m for p in parts for m in p.masks()] == masks
    assert partition(0, 10, 3) == [(0, 3), (3, 6), (6, 10)]
    assert partition(0, 2, 5) == [(0, 1), (1, 2)]


def test_worker_count_invariance():
    s = enumerate_connected(6)
    assert s.count(workers=1) == s.count(workers=2) == 26704
    a = np.concatenate([c["mask"] for c in s.chunks(chunk=4096, workers=1)])
    b = np.concatenate([c["mask"] for c in s.chunks(chunk=4096, workers=2)])
    assert np.array_equal(a, b)


def test_n_limits():
    with pytest.raises(NTooLarge):
        EnumerationStream(9)
    with pytest.raises(NTooLarge):
        EnumerationStream(1)
    with pytest.raises(NTooLarge):
        exhaustive_audit(8)
    with pytest.raises(ValueError):
        enumerate_connected(4, "forests")


def test_masks_to_laplacians():
    masks = np.array([0b111, 0b011])
    Ls = masks_to_laplacians(3, masks)
    for mask, L in zip(masks, Ls):
        assert np.array_equal(L, graph_from_mask(3, int(mask)).laplacian())


@pytest.mark.parametrize("n", [5, 6, 7])
def test_tree_extremality(n):
    r = exhaustive_audit(n, ["thm4"], filter="trees")
    assert r.count == n ** (n - 2)
    assert r.violation_count == 0
    lo, hi = tree_bounds(n).lower, tree_bounds(n).upper
    assert r.minimum.value == pytest.approx(lo, abs=1e-9)
    assert r.maximum.value == pytest.approx(hi, abs=1e-9)
    # stars: n labelings; paths: n!/2 labelings
    assert len(r.minimum.graphs) == n
    assert len(r.maximum.graphs) == factorial(n) // 2
    for mask in r.minimum.graphs[:3]:
        assert max(graph_from_mask(n, mask).unweighted_degrees) == n - 1
    for mask in r.maximum.graphs[:3]:
        assert graph_stats(graph_from_mask(n, mask)).diameter == n - 1


@pytest.mark.parametrize("n", [5, 6])
def test_bipartite_minimum_by_brute_force(n):
    r = exhaustive_audit(n, ["thm6"], filter="bipartite")
    b = bipartite_bounds(n)
    assert r.minimum.value == pytest.approx(b.lower, abs=1e-9)
    assert r.minimum.value < bipartite_printed_lower(n)
    assert r.violation_count > 0
    for mask in r.minimum.graphs:
        g = graph_from_mask(n, mask)
        assert is_bipartite(g) and g.m == (n // 2) * ((n + 1) // 2)


def test_audit_n5_defaults_clean():
    r = exhaustive_audit(5)
    assert r.count == 728 and r.violation_count == 0
    assert r.minimum.value == pytest.approx(0.4)
    assert r.minimum.graphs == [(1 << 10) - 1]
    assert r.maximum.value == pytest.approx(2.0)
    assert r.min_rho_by_m[10] == pytest.approx(0.4)


def test_audit_csv_format_and_determinism():
    a, b = io.StringIO(), io.StringIO()
    r = exhaustive_audit(4, ["thm3", "thm10"], csv=a, chunk=7)
    exhaustive_audit(4, ["thm3", "thm10"], csv=b, workers=2, chunk=5)
    assert a.getvalue() == b.getvalue()
    lines = a.getvalue().splitlines()
    assert lines[0] + "\n" == CSV_HEADER
    # one row per graph; the bound columns are the tightest over the selected bounds
    assert len(lines) == 1 + r.count
    first = lines[1].split(",")
    assert first[-1] in ("true", "false")
    mask, m, W, T, rho = int(first[0]), int(first[1]), float(first[2]), float(first[3]), float(first[4])
    g = graph_from_mask(4, mask)
    assert m == g.m and W == g.m
    assert rho == pytest.approx(foc_measure(g), rel=1e-13)
    assert T == round(T)
    assert float(first[5]) == pytest.approx(max(0.375, 9 / (4 * m)))


def test_scatter_output():
    r = exhaustive_audit(4, scatter=True)
    out = io.StringIO()
    write_scatter_csv(r, out)
    assert len(out.getvalue().splitlines()) == 39
    assert set(r.scatter) == {"mask", "m", "W", "T", "delta", "rho", "zeta2"}
    assert np.all(r.scatter["delta"] <= r.scatter["rho"] + 1e-9)
    with pytest.raises(ValueError):
        write_scatter_csv(exhaustive_audit(3), io.StringIO())


def test_parse_bounds():
    assert parse_bounds("thm3,thm10") == ("thm3", "thm10")
    assert parse_bounds(None)[0] == "thm3"
    with pytest.raises(ValueError):
        parse_bounds("thm99")


def test_report_to_dict():
    d = exhaustive_audit(4, ["thm3"]).to_dict()
    assert d["count"] == 38 and d["violation_count"] == 0
    assert d["bounds"] == ["thm3"]
