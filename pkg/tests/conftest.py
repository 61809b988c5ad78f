import sys
from itertools import combinations
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from consensus_limits import build_graph  # noqa: E402


def random_connected(rng, n, p=0.3, weighted=False, wlow=0.1, whigh=5.0):
    """Random spanning tree plus independent extra edges with probability ``p``."""
    perm = rng.permutation(n)
    pairs = {tuple(sorted((int(perm[i]), int(perm[rng.integers(0, i)])))) for i in range(1, n)}
    for i, j in combinations(range(n), 2):
        if (i, j) not in pairs and rng.random() < p:
            pairs.add((i, j))
    pairs = sorted(pairs)
    w = rng.uniform(wlow, whigh, len(pairs)) if weighted else np.ones(len(pairs))
    return build_graph(n, [(i, j, float(x)) for (i, j), x in zip(pairs, w)])


def random_tree(rng, n):
    return random_connected(rng, n, p=0.0)


@st.composite
def connected_graphs(draw, min_n=2, max_n=12, weighted=True):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    pairs = {(p, i) for i, p in zip(range(1, n), parents)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    pairs |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    pairs = sorted(pairs)
    if weighted:
        ws = draw(st.lists(st.floats(0.1, 10.0), min_size=len(pairs), max_size=len(pairs)))
    else:
        ws = [1.0] * len(pairs)
    return build_graph(n, [(i, j, w) for (i, j), w in zip(pairs, ws)])


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def audit_n7():
    """Full n=7 audit of every bound named in the acceptance criteria, with scatter data."""
    from consensus_limits.oracle import exhaustive_audit

    names = ("thm3", "thm9", "thm10", "thm11", "thm12", "thm13", "thm17", "cor1", "cor3")
    return exhaustive_audit(7, names, scatter=True)


ACCEPTANCE_LINES: list[str] = []


def record_criterion(label: str, ok: bool, detail: str) -> None:
    """Remember one acceptance verdict; the summary hook prints them all."""
    line = f"{'PASS' if ok else 'FAIL'}  {label}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
