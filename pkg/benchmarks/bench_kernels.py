"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat N] [RING ...]

Each kernel runs on the same tables under both backends; results are
compared before timings are reported.
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from ringlab import kernels
from ringlab.expressions import build

DEFAULT_RINGS = ["M2(Z4)", "M3(Z2)", "T3(Z3)", "GR(Z4, C4)", "M2(Z8)"]


def _inputs(R):
    idx = R.elements()
    nil = kernels.nil_exponents(R) > 0
    unit = kernels.unit_mask(R)
    idem = R.mul(idx, idx) == idx
    signs = np.array([1, -1], np.int8)
    return {
        "nil_exponents": lambda: kernels.nil_exponents(R),
        "unit_mask": lambda: kernels.unit_mask(R),
        "quasi_regular": lambda: kernels.quasi_regular_mask(R, unit, 0),
        "nilclean_search": lambda: kernels.nilclean_search(R, idx, np.flatnonzero(idem), nil, signs, True),
        "clean_search": lambda: kernels.clean_search(R, idx, np.flatnonzero(unit), idem, signs),
        "axioms": lambda: kernels.axiom_violation(R),
    }


def _same(a, b) -> bool:
    if isinstance(a, tuple) and a and isinstance(a[0], np.ndarray):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def bench(label: str, repeat: int, skip_axioms_above: int = 512) -> list[tuple]:
    R = build(label)
    rows = []
    for name, fn in _inputs(R).items():
        if name == "axioms" and R.size > skip_axioms_above:
            continue  # cubic in |R|: only the small rings
        times = {}
        out = {}
        for backend in ("native", "python"):
            with kernels.use_backend(backend):
                out[backend] = fn()
                times[backend] = min(timeit.repeat(fn, number=1, repeat=repeat))
        if not _same(out["native"], out["python"]):
            raise SystemExit(f"backends disagree on {name} for {label}")
        rows.append((label, R.size, name, times["native"], times["python"]))
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("rings", nargs="*", default=DEFAULT_RINGS)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not kernels.NATIVE_AVAILABLE:
        print("compiled kernels are not built; nothing to compare")
        return 1
    print(f"{'ring':<12} {'|R|':>5}  {'kernel':<16} {'native':>10} {'numpy':>10} {'speedup':>8}")
    for label in args.rings:
        for ring, size, name, nat, py in bench(label, args.repeat):
            print(f"{ring:<12} {size:>5}  {name:<16} {nat * 1e3:>8.2f}ms {py * 1e3:>8.2f}ms {py / nat:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
