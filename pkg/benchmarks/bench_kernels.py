"""Time the hot kernels under the compiled and the pure-Python backend.

    python benchmarks/bench_kernels.py [--repeat 5] [--seed 0]

Each workload calls the kernel module directly, so both backends see exactly
the same inputs; results are checked for equality before timing is reported.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time
from itertools import combinations

from hyperconf import _pykernels
from hyperconf.generators import random_graph_edges, random_hypergraph
from hyperconf.graph import Graph

try:
    from hyperconf import _ckernels
except ImportError:  # pragma: no cover - build without a compiler
    _ckernels = None


def workloads(seed: int):
    rng = random.Random(seed)
    h60 = random_hypergraph(60, 200, 3, seed)
    h30 = random_hypergraph(30, 120, 4, seed + 1)
    triples = [tuple(sorted(rng.sample(range(30), 3))) for _ in range(300)]
    g = Graph.from_edges(40, random_graph_edges(40, 0.5, rng))
    xs = [tuple(sorted(rng.sample(range(40), 4))) for _ in range(200)]
    h_conf = random_hypergraph(25, 80, 4, seed + 2)

    return {
        "dual co-occurrence rows (n=60, m=200, dim 3)":
            lambda k: k.dual_cooccurrence_rows(h60, 0, h60.n),
        "subtransversal |S|=3 x300 (n=30, m=120)":
            lambda k: [k.subtransversal(h30, s) for s in triples],
        "all pairs subtransversal (n=30)":
            lambda k: [k.subtransversal(h30, s) for s in combinations(range(30), 2)],
        "Gilmore triple scan (n=25, m=80)":
            lambda k: k.gilmore_violation(h_conf),
        "undominated clique |X|=4 x200 (n=40, p=0.5)":
            lambda k: [k.undominated_clique(g, x) for x in xs],
    }


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def normalise(result):
    if isinstance(result, list):
        return [normalise(r) for r in result]
    if isinstance(result, tuple):
        return tuple(normalise(r) for r in result)
    return result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.insert(0, ("cython", _ckernels))
    else:
        print("compiled kernels unavailable; timing the Python fallback only")

    print(f"{'workload':48s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, work in workloads(args.seed).items():
        outs = [normalise(work(mod)) for _, mod in backends]
        if any(o != outs[0] for o in outs[1:]):
            raise SystemExit(f"backends disagree on {label!r}")
        times = [best_of(lambda: work(mod), args.repeat) for _, mod in backends]
        row = f"{label:48s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2 and times[0] > 0:
            row += f"  {times[1] / times[0]:9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
