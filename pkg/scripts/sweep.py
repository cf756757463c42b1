"""Decompose seeded random representations and report timing and barcode statistics.

    python3 scripts/sweep.py --windows 2 4 6 8 --max-dim 4 --count 100
"""

import argparse
import statistics
import time
from collections import Counter
from dataclasses import dataclass, field

from intervaldecomp import certify, decompose, random_representation
from intervaldecomp.quiver import NEG_INF, POS_INF


@dataclass
class SweepConfig:
    windows: list[int] = field(default_factory=lambda: [2, 4, 6])
    max_dim: int = 4
    p: int = 32003
    count: int = 50
    tails: tuple[str, str] = ("zero", "zero")
    seed: int = 0


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for n in cfg.windows:
        times, lengths, finite = [], Counter(), 0
        for i in range(cfg.count):
            r = random_representation(n, cfg.max_dim, cfg.p, cfg.tails, cfg.seed + i)
            t0 = time.perf_counter()
            d = decompose(r)
            times.append(time.perf_counter() - t0)
            assert certify(r, d).ok
            for a, m in d.barcode.items():
                if a.left == NEG_INF or a.right == POS_INF:
                    lengths["inf"] += m
                else:
                    lengths[a.right - a.left + 1] += m
                    finite += m
        rows.append({
            "window": n,
            "median_ms": 1000 * statistics.median(times),
            "max_ms": 1000 * max(times),
            "bars": sum(lengths.values()),
            "lengths": dict(sorted(lengths.items(), key=lambda kv: (kv[0] == "inf", kv[0]))),
        })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--windows", type=int, nargs="+", default=SweepConfig().windows)
    ap.add_argument("--max-dim", type=int, default=SweepConfig.max_dim)
    ap.add_argument("--p", type=int, default=SweepConfig.p)
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--tails", nargs=2, default=list(SweepConfig.tails), choices=("zero", "constant"))
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    a = ap.parse_args()
    cfg = SweepConfig(a.windows, a.max_dim, a.p, a.count, tuple(a.tails), a.seed)
    print(f"{'window':>6} {'median ms':>10} {'max ms':>8} {'bars':>6}  length histogram")
    for row in run(cfg):
        print(f"{row['window']:>6} {row['median_ms']:>10.2f} {row['max_ms']:>8.2f} {row['bars']:>6}  {row['lengths']}")


if __name__ == "__main__":
    main()
