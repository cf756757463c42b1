"""Print the barcode report for truncations of the sequence-space module."""

import argparse

from intervaldecomp.oracles import counterexample_demo

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--p", type=int, default=2)
    a = ap.parse_args()
    print(counterexample_demo(a.n_max, a.p))
