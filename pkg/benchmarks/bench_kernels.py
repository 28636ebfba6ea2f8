"""Compare the compiled and pure-Python graph kernels on real power graphs.

    python benchmarks/bench_kernels.py --spec A8 --spec "C6 x S4" --repeat 3

``max_eccentricity`` stops at the first source that misses a vertex, so it is
only timed on connected graphs.
"""

from __future__ import annotations

import argparse
import json
import time

import numpy as np

from powergraph import _backend
from powergraph.engine import PowerGraph
from powergraph.groups import make_group


def best_of(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(spec: str, repeat: int, sources: int, seed: int) -> list[dict]:
    G = make_group(spec)
    pg = PowerGraph(G)
    src, dst = pg.prime_edges()
    indptr, indices = pg.adjacency()
    rng = np.random.default_rng(seed)
    picks = np.sort(rng.choice(pg.n, size=min(sources, pg.n), replace=False)).astype(np.int64)
    connected = pg.components().count == 1
    rows, ref = [], {}
    for name, K in sorted(_backend.available().items()):
        cases = {
            "union_find_labels": lambda K=K: np.asarray(K.union_find_labels(pg.n, src, dst)).tolist(),
            "bfs_distances": lambda K=K: np.asarray(K.bfs_distances(indptr, indices, 0)).tolist(),
            "max_eccentricity": lambda K=K: int(K.max_eccentricity(indptr, indices, picks)),
        }
        if not connected:
            del cases["max_eccentricity"]
        for kernel, fn in cases.items():
            t, out = best_of(fn, repeat)
            if kernel in ref and ref[kernel] != out:
                raise AssertionError(f"{name} disagrees on {kernel} for {spec}")
            ref.setdefault(kernel, out)
            rows.append({"spec": spec, "vertices": pg.n, "edges": int(len(src)),
                         "adjacency": int(len(indices)), "kernel": kernel, "backend": name,
                         "seconds": round(t, 7)})
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--spec", action="append", help="group spec (repeatable)")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--sources", type=int, default=32, help="BFS sources for max_eccentricity")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    specs = args.spec or ["PSL2(13)", "S8", "A9", "C6 x S5", "C6 x A7", "C6 x S7"]
    rows = [r for s in specs for r in bench(s, args.repeat, args.sources, args.seed)]
    if args.json:
        for r in rows:
            print(json.dumps(r))
        return 0
    times = {(r["spec"], r["kernel"], r["backend"]): r["seconds"] for r in rows}
    print(f"{'spec':<10}{'vertices':>9}  {'kernel':<18}{'python ms':>11}{'cython ms':>11}{'speedup':>9}")
    for r in rows:
        if r["backend"] != "python":
            continue
        py = r["seconds"] * 1e3
        cy = times.get((r["spec"], r["kernel"], "cython"))
        cy = None if cy is None else cy * 1e3
        speed = f"{py / cy:8.1f}x" if cy else "      n/a"
        cys = f"{cy:11.3f}" if cy is not None else f"{'n/a':>11}"
        print(f"{r['spec']:<10}{r['vertices']:>9}  {r['kernel']:<18}{py:11.3f}{cys}{speed}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
