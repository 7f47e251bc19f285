"""Compare the compiled row-reduction kernel with the numpy fallback.

Two measurements:

* ``rref_block`` alone on dense random blocks of residues;
* ``rank_mod_p`` end to end on the products system of a Jacobian ring
  piece, with the module-level kernel swapped for each backend.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""
from __future__ import annotations

import argparse
import json
import logging
import time

import numpy as np

from hodgejac.ambient import ProjectiveSpace
from hodgejac.assembly import product_rows
from hodgejac.linalg import DEFAULT_PRIME, modular
from hodgejac.linalg import _fallback

try:
    from hodgejac.linalg import _kernels
except ImportError:  # pragma: no cover - depends on the build
    _kernels = None

log = logging.getLogger("bench")


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_blocks(shapes, repeat: int, p: int = DEFAULT_PRIME) -> list[dict]:
    rng = np.random.default_rng(0)
    rows = []
    for b, n in shapes:
        Y0 = rng.integers(0, p, size=(b, n)).astype(np.float64)
        entry = {"case": f"rref_block {b}x{n}"}
        ranks = {}
        for name, kernel in (("cython", _kernels and _kernels.rref_block),
                             ("numpy", _fallback.rref_block)):
            if kernel is None:
                continue
            entry[name] = best_of(lambda: kernel(Y0.copy(), p), repeat)
            ranks[name] = kernel(Y0.copy(), p)[0]
        assert len(set(ranks.values())) == 1, ranks
        rows.append(entry)
    return rows


def jacobian_system(n: int, d: int, k: int):
    P = ProjectiveSpace(n, d)
    f = P.random_section(1)
    gens = P.lie_derivative_generators(f)
    target = P.space(P.m_degree(k))
    source = P.space(P.m_degree(k - 1))
    return product_rows(gens, source, target).dedupe().modular_matrix(DEFAULT_PRIME)


def bench_rank(cases, repeat: int) -> list[dict]:
    rows = []
    saved = modular._rref_block
    try:
        for n, d, k in cases:
            A = jacobian_system(n, d, k)
            entry = {"case": f"rank_mod_p P{n} d={d} k={k} ({A.shape[0]}x{A.shape[1]})"}
            ranks = {}
            for name, kernel in (("cython", _kernels and _kernels.rref_block),
                                 ("numpy", _fallback.rref_block)):
                if kernel is None:
                    continue
                modular._rref_block = kernel
                entry[name] = best_of(lambda: modular.rank_mod_p(A), repeat)
                ranks[name] = modular.rank_mod_p(A)
            assert len(set(ranks.values())) == 1, ranks
            entry["rank"] = next(iter(ranks.values()))
            rows.append(entry)
    finally:
        modular._rref_block = saved
    return rows


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small sizes only")
    ap.add_argument("--json", help="also write the results here")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    shapes = [(64, 512), (128, 2048)] if args.quick else [(64, 512), (128, 2048), (128, 8000),
                                                         (256, 4096)]
    cases = [(3, 4, 2)] if args.quick else [(3, 4, 2), (4, 5, 1), (4, 5, 2)]
    results = bench_blocks(shapes, args.repeat) + bench_rank(cases, args.repeat)
    log.info("%-48s %10s %10s %8s", "case", "cython [s]", "numpy [s]", "speedup")
    for r in results:
        c, n = r.get("cython"), r.get("numpy")
        speed = f"{n / c:7.1f}x" if c and n else "-"
        log.info("%-48s %10s %10s %8s", r["case"], f"{c:.4f}" if c else "-", f"{n:.4f}", speed)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
