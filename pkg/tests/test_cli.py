import csv
import json
import subprocess
import sys

import pytest

from consensus_limits import family, save_graph
from consensus_limits.cli import main


def _run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def p5(tmp_path):
    path = tmp_path / "p5.edges"
    save_graph(family("path", 5), path)
    return path


def test_analyze_p5(capsys, p5):
    code, out, _ = _run(capsys, "analyze", "--graph", p5, "--output-graph", "centering")
    assert code == 0
    d = json.loads(out)
    assert d["rho_foc"] == pytest.approx(2.0)
    assert d["n"] == 5 and d["m"] == 4 and d["diameter"] == 4 and d["cut_edges"] == 4
    assert d["soc_type2"]["rho_x"] == pytest.approx(3.8)
    assert d["soc_type1"]["rho_x"] == pytest.approx(2.0)
    assert d["formation_energy"] == pytest.approx(2.0)


def test_analyze_csv_and_output_file(capsys, p5, tmp_path):
    out_path = tmp_path / "a.csv"
    code, out, _ = _run(capsys, "analyze", "--graph", p5, "--format", "csv", "--output", out_path,
                        "--soc-type", "2", "--beta", "2")
    assert code == 0 and out == ""
    rows = dict(csv.reader(out_path.open()))
    assert float(rows["rho_foc"]) == pytest.approx(2.0)
    assert float(rows["soc_type2.rho_x"]) == pytest.approx(1.9)
    assert "soc_type1.rho_x" not in rows


@pytest.mark.parametrize(
    "name, n, extra, expected",
    [
        ("complete", 6, [], 5 / 12),
        ("path", 9, [], 80 / 12),
        ("star", 7, [], 36 / 14),
        ("star-like-clique", 7, ["--k", "4"], 1 / 14 + 2 - 1 / 4),
        ("complete_bipartite", None, ["--n1", "3", "--n2", "3"], 0.75),
    ],
)
def test_family_round_trip(capsys, tmp_path, name, n, extra, expected):
    for fmt in ("edges", "json"):
        path = tmp_path / f"g.{fmt}"
        args = ["family", name] + ([n] if n else []) + extra + ["--format", fmt, "--output", path]
        assert _run(capsys, *args)[0] == 0
        code, out, _ = _run(capsys, "analyze", "--graph", path)
        assert code == 0
        assert json.loads(out)["rho_foc"] == pytest.approx(expected, abs=1e-10)


def test_bounds_command(capsys, p5):
    code, out, _ = _run(capsys, "bounds", "--graph", p5)
    assert code == 0
    reports = {r["name"]: r for r in json.loads(out)["reports"]}
    assert reports["thm3_universal"]["measured"] == pytest.approx(2.0)
    assert reports["thm4_tree"]["satisfied"]
    code, out, _ = _run(capsys, "bounds", "--graph", p5, "--format", "csv")
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ["name", "lower", "upper", "measured", "satisfied", "tight_at"]
    assert {r[4] for r in rows[1:]} <= {"true", "false"}


def test_enumerate(capsys):
    code, out, _ = _run(capsys, "enumerate", "--n", 5)
    assert code == 0 and json.loads(out)["count"] == 728
    code, out, _ = _run(capsys, "enumerate", "--n", 4, "--filter", "trees", "--list",
                        "--format", "csv")
    assert out.splitlines()[0] == "graph_id" and len(out.splitlines()) == 17


def test_audit_exit_codes_and_byte_identity(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    scatter = tmp_path / "s.csv"
    code, _, err = _run(capsys, "audit", "--n", 5, "--bounds", "thm3,thm10,thm11,thm13",
                        "--format", "csv", "--output", a, "--workers", 1, "--scatter", scatter)
    assert code == 0 and "728 graphs, 0 violations" in err
    code, _, _ = _run(capsys, "audit", "--n", 5, "--bounds", "thm3,thm10,thm11,thm13",
                      "--format", "csv", "--output", b, "--workers", 2)
    assert code == 0
    assert a.read_bytes() == b.read_bytes()
    assert len(a.read_text().splitlines()) == 729
    assert scatter.read_text().splitlines()[0] == "graph_id,m,W,T,delta_bound,rho"
    # the printed bipartite bound is violated, so the audit reports exit status 2
    code, out, _ = _run(capsys, "audit", "--n", 5, "--bounds", "thm6", "--filter", "bipartite")
    assert code == 2 and json.loads(out)["violation_count"] > 0


def test_simulate(capsys, tmp_path):
    k3 = tmp_path / "k3.edges"
    save_graph(family("complete", 3), k3)
    code, out, _ = _run(capsys, "simulate", "--graph", k3, "--seed", 7, "--trajectories", 64,
                        "--workers", 1)
    d = json.loads(out)
    assert code == 0 and d["closed_form"] == pytest.approx(1 / 3)
    assert abs(d["estimate"] - 1 / 3) <= 3 * d["stderr"] and d["within_3_stderr"]
    code, out, _ = _run(capsys, "simulate", "--graph", k3, "--zero-noise", "--horizon", 2,
                        "--burn-in", 1, "--trajectories", 2)
    d = json.loads(out)
    assert d["estimate"] == 0.0 and d["within_3_stderr"]
    code, out, _ = _run(capsys, "simulate", "--graph", k3, "--soc-type", 2, "--horizon", 20,
                        "--burn-in", 5, "--trajectories", 4)
    assert code == 0 and json.loads(out)["closed_form"] == pytest.approx(1 / 9)


def test_simulate_output_is_reproducible(capsys, tmp_path):
    k3 = tmp_path / "k3.edges"
    save_graph(family("complete", 3), k3)
    outs = []
    for workers in (1, 2):
        path = tmp_path / f"sim{workers}.json"
        _run(capsys, "simulate", "--graph", k3, "--horizon", 10, "--burn-in", 2,
             "--trajectories", 6, "--workers", workers, "--output", path)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_powerloss(capsys, tmp_path):
    net = {"n": 4, "beta": 1.0, "lines": [{"i": k, "j": (k + 1) % 4, "g": g, "b": 2.0}
                                          for k, g in enumerate((1.0, 2.0, 3.0, 7.0))]}
    path = tmp_path / "net.json"
    path.write_text(json.dumps(net))
    code, out, _ = _run(capsys, "powerloss", "--network", path, "--edge-transitive", "cycle")
    d = json.loads(out)
    assert code == 0
    assert d["loss"] == pytest.approx(6.5 / 8 * 3)
    assert d["edge_transitive_loss"] == pytest.approx(d["loss"])
    assert d["nu_sum"] == pytest.approx(3.0)


@pytest.mark.parametrize(
    "argv, prefix",
    [
        ([], "usage error:"),
        (["analyze"], "usage error:"),
        (["enumerate", "--n", "5", "--bogus"], "usage error:"),
        (["enumerate", "--n", "9"], "error: NTooLarge"),
        (["analyze", "--graph", "/nonexistent.edges"], "error:"),
        (["audit", "--n", "4", "--bounds", "thm99"], "error: ValueError"),
    ],
)
def test_errors_exit_1_with_one_line(capsys, argv, prefix):
    code, _, err = _run(capsys, *argv)
    assert code == 1
    assert err.startswith(prefix)
    assert err.count("\n") == 1


def test_disconnected_graph_is_an_error(capsys, tmp_path):
    path = tmp_path / "d.edges"
    path.write_text("n 4\n0 1\n2 3\n")
    code, _, err = _run(capsys, "analyze", "--graph", path)
    assert code == 1 and "Disconnected" in err


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "consensus_limits.cli", "enumerate", "--n", "4"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["count"] == 38
