"""Compiled vs pure-Python CSP kernel on finite tiling problems.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import time

from selfsim import _pykernels
from selfsim.domino.solver import _Compiled
from selfsim.domino.tileset import Tileset, proper_coloring
from selfsim.gallery import builtin
from selfsim.schreier import build_graph

try:
    from selfsim import _ckernels
except ImportError:
    _ckernels = None


def problems():
    out = []
    hanoi = builtin("hanoi")
    for n in (4, 5):
        g = build_graph(hanoi, n=n, kind="simple")
        out.append((f"hanoi n={n} proper-3 first", _Compiled(g, proper_coloring(3, ["a", "b", "c"])),
                    "first"))
    rng = random.Random(0)
    labels = ["a", "b", "c"]
    allt = [(b, a, c) for a in labels for b in range(3) for c in range(3)]
    ts = Tileset.make(range(3), labels, [x for x in allt if rng.random() < 0.7])
    g = build_graph(hanoi, n=3, kind="tile")
    out.append(("hanoi n=3 random all", _Compiled(g, ts), "all"))
    g = build_graph(builtin("odometer"), n=8)
    out.append(("odometer n=8 proper-2 all", _Compiled(g, proper_coloring(2, ["t"])), "all"))
    return out


def run(impl, p, mode):
    if mode == "first":
        return impl.solve_first(p.domains, p.arcs)
    return len(list(impl.all_solutions(p.domains, p.arcs)))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'problem':32s} " + " ".join(f"{n:>10s}" for n, _ in impls) + "   speedup")
    for name, p, mode in problems():
        times = []
        results = []
        for _, impl in impls:
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                r = run(impl, p, mode)
                best = min(best, time.perf_counter() - t0)
            times.append(best)
            results.append(r)
        assert all(r == results[0] for r in results), name
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) > 1 else "      n/a"
        print(f"{name:32s} " + " ".join(f"{t * 1e3:8.2f}ms" for t in times) + "  " + speed)


if __name__ == "__main__":
    main()
