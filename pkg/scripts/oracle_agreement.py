"""Compare decompose against both oracles on seeded random instances; print a tally."""

import argparse
import random
from dataclasses import dataclass

from intervaldecomp import decompose, random_representation
from intervaldecomp.oracles import MAX_BRUTEFORCE_DIM, OracleError, idempotent_bruteforce_barcode, rank_formula_barcode

TAILS = [("zero", "zero"), ("constant", "zero"), ("zero", "constant"), ("constant", "constant")]


@dataclass
class AgreementConfig:
    count: int = 500
    max_window: int = 4
    max_dim: int = 2
    seed: int = 0


def run(cfg: AgreementConfig) -> dict[str, list[int]]:
    tally = {"rank": [0, 0, 0], "idempotent": [0, 0, 0]}  # agree, disagree, not applicable
    for i in range(cfg.count):
        rng = random.Random(cfg.seed + i)
        r = random_representation(rng.randint(1, cfg.max_window), cfg.max_dim, 2, TAILS[i % 4], cfg.seed + i)
        got = decompose(r).barcode
        for name, oracle in (("rank", rank_formula_barcode), ("idempotent", idempotent_bruteforce_barcode)):
            try:
                tally[name][0 if oracle(r) == got else 1] += 1
            except OracleError:
                tally[name][2] += 1
    return tally


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=AgreementConfig.count)
    ap.add_argument("--max-window", type=int, default=AgreementConfig.max_window)
    ap.add_argument("--max-dim", type=int, default=AgreementConfig.max_dim)
    ap.add_argument("--seed", type=int, default=AgreementConfig.seed)
    a = ap.parse_args()
    tally = run(AgreementConfig(a.count, a.max_window, a.max_dim, a.seed))
    print(f"idempotent oracle applies up to total dimension {MAX_BRUTEFORCE_DIM} over F_2")
    for name, (ok, bad, skipped) in tally.items():
        print(f"{name:>10}: agree {ok}  disagree {bad}  not applicable {skipped}")
    raise SystemExit(1 if any(t[1] for t in tally.values()) else 0)


if __name__ == "__main__":
    main()
