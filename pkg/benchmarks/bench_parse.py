#!/usr/bin/env python3
"""Benchmark the compiled row parser against the pure-Python fallback.

Usage:  python benchmarks/bench_parse.py [--rows 2100000] [--repeat 3]
"""
from __future__ import annotations

import argparse
import random
import time

from temponym import _pyparse

try:
    from temponym import _fastparse
except ImportError:
    _fastparse = None


def synthetic_content(n_rows: int) -> str:
    rng = random.Random(7)
    lines = []
    name_pool = [f"Name{i:05d}" for i in range(n_rows // 2 + 1)]
    for i in range(0, n_rows, 2):
        name = name_pool[i // 2]
        lines.append(f"{name},F,{rng.randint(5, 20000)}")
        lines.append(f"{name},M,{rng.randint(5, 20000)}")
    return "\n".join(lines[:n_rows])


def bench(fn, content: str, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(content, True)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--rows", type=int, default=2_100_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"generating {args.rows} rows ...")
    content = synthetic_content(args.rows)

    pure = bench(_pyparse.merge_rows, content, args.repeat)
    print(f"pure python : {pure:.3f}s  ({args.rows / pure / 1e6:.2f} Mrows/s)")
    if _fastparse is None:
        print("compiled    : not built")
        return
    fast = bench(_fastparse.merge_rows, content, args.repeat)
    print(f"compiled    : {fast:.3f}s  ({args.rows / fast / 1e6:.2f} Mrows/s)")
    print(f"speedup     : {pure / fast:.2f}x")


if __name__ == "__main__":
    main()
