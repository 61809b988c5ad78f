import numpy as np
import pytest

from conftest import random_connected
from consensus_limits import SocSystem, build_graph, family, foc_measure, pseudo_inverse, soc_measure
from consensus_limits.errors import Disconnected, LyapunovResidualTooLarge
from consensus_limits.oracle import (
    FocSystem,
    foc_gramian,
    helmert_basis,
    lyapunov_measure,
    soc_channels,
    solve_lyapunov,
)
from consensus_limits.oracle import lyapunov as lyap


def test_k3_and_p3_examples():
    assert lyapunov_measure(family("complete", 3)) == pytest.approx(1 / 3, rel=1e-10)
    s = SocSystem(family("path", 3), 2, 1.0, q_x="centering")
    assert lyapunov_measure(s) == pytest.approx(5 / 9, rel=1e-10)
    assert lyapunov_measure(FocSystem(family("path", 5))) == pytest.approx(2.0, rel=1e-10)


@pytest.mark.parametrize("n", [2, 3, 6, 11])
def test_helmert_basis_orthonormal(n):
    H = helmert_basis(n)
    assert H.T @ H == pytest.approx(np.eye(n - 1), abs=1e-12)
    assert np.ones(n) @ H == pytest.approx(np.zeros(n - 1), abs=1e-12)


def test_solve_lyapunov_against_scipy():
    from scipy.linalg import solve_continuous_lyapunov

    rng = np.random.default_rng(5)
    A = -3 * np.eye(5) + rng.standard_normal((5, 5))
    B = rng.standard_normal((5, 2))
    P, res = solve_lyapunov(A, B @ B.T)
    ref = solve_continuous_lyapunov(A, -B @ B.T)
    assert P == pytest.approx(ref, rel=1e-9, abs=1e-12)
    assert res < 1e-10


@pytest.mark.parametrize("basis", ["eigen", "helmert"])
def test_pull_back_is_half_pseudo_inverse(rng, basis):
    for _ in range(30):
        n = int(rng.integers(2, 16))
        g = random_connected(rng, n, p=0.4, weighted=True)
        P = foc_gramian(g, basis).pulled_back()
        assert np.abs(P - 0.5 * pseudo_inverse(g)).max() <= 1e-8 * max(1.0, np.abs(P).max())


@pytest.mark.parametrize("basis", ["eigen", "helmert"])
def test_random_weighted_agreement(rng, basis):
    for _ in range(25):
        n = int(rng.integers(2, 14))
        g = random_connected(rng, n, p=0.4, weighted=True)
        q = random_connected(rng, n, p=0.3, weighted=True)
        assert lyapunov_measure(g, basis=basis) == pytest.approx(foc_measure(g), rel=1e-8)
        assert lyapunov_measure(g, q, basis=basis) == pytest.approx(foc_measure(g, q), rel=1e-8)
        beta = float(rng.uniform(0.3, 3.0))
        for t in (1, 2):
            s = SocSystem(g, t, beta, q_x=q, q_v="centering")
            a, b = soc_channels(s, basis), soc_measure(s)
            assert a.rho_x == pytest.approx(b.rho_x, rel=1e-8)
            assert a.rho_v == pytest.approx(b.rho_v, rel=1e-8)


def test_residual_guard(monkeypatch):
    monkeypatch.setattr(lyap, "RESIDUAL_TOL", -1.0)
    with pytest.raises(LyapunovResidualTooLarge):
        lyapunov_measure(family("path", 4))


def test_disconnected_and_bad_basis():
    with pytest.raises(Disconnected):
        lyapunov_measure(build_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        lyapunov_measure(family("path", 4), basis="qr")
