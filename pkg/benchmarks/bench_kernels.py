"""Compare the compiled and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each kernel is run on identical inputs under both backends; outputs are
checked for agreement before timings are reported.
"""
import argparse
import time

import numpy as np

from consensus_limits import _kernels


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def em_inputs(dim=6, steps=20000, ntraj=16, seed=0):
    rng = np.random.default_rng(seed)
    a = rng.uniform(0.5, 1.5, (dim, dim))
    L = np.diag((a + a.T).sum(1)) - (a + a.T)
    noise = np.sqrt(1e-3) * rng.standard_normal((steps, ntraj, dim))
    return -L, noise, np.eye(dim)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = _kernels.backends()
    if "cython" not in backends:
        print("compiled backend not built; only the numpy fallback is available")

    drift, noise, out_map = em_inputs()
    cases = [
        ("scan n=6 (all masks)", lambda k: k.scan(6, 0, 1 << 15, 0)),
        ("scan n=7 (first 2^18 masks)", lambda k: k.scan(7, 0, 1 << 18, 0)),
        ("count n=7 (all masks)", lambda k: k.count_connected(7, 0, 1 << 21, 0)),
        ("em_run dim=6, 20k steps x 16", lambda k: _em(k, drift, noise, out_map)),
    ]
    print(f"{'kernel':32s}" + "".join(f"{name:>12s}" for name in backends) + f"{'speedup':>10s}")
    for label, fn in cases:
        times, outs = {}, {}
        for name, mod in backends.items():
            times[name], outs[name] = best_of(lambda fn=fn, mod=mod: fn(mod), args.repeat)
        _check(label, outs)
        row = f"{label:32s}" + "".join(f"{times[name]:11.3f}s" for name in backends)
        if "cython" in times:
            row += f"{times['numpy'] / times['cython']:9.1f}x"
        print(row)


def _em(mod, drift, noise, out_map):
    state = np.zeros((noise.shape[1], noise.shape[2]))
    acc = np.zeros(noise.shape[1])
    mod.em_run(drift, noise, state, 1e-3, out_map, 0, acc)
    return acc


def _check(label, outs):
    ref = outs["numpy"]
    for name, out in outs.items():
        if isinstance(ref, dict):
            same = all(np.array_equal(ref[k], out[k]) for k in ref)
        elif isinstance(ref, np.ndarray):
            same = np.allclose(ref, out, rtol=1e-10)
        else:
            same = ref == out
        if not same:
            raise SystemExit(f"{label}: backend {name} disagrees with numpy")


if __name__ == "__main__":
    main()
