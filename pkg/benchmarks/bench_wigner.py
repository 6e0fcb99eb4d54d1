"""Timing of the FFT and dense Wigner paths.

    python3 benchmarks/bench_wigner.py --dims 51,101,201,301 --repeat 5
"""
import argparse
import timeit

import numpy as np

from qphase import wigner_fast, wigner_pure
from qphase.verify import random_state


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", default="51,101,201,301")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    print(f"{'N':>5} {'fast [ms]':>10} {'dense [ms]':>11} {'ratio':>6} {'max diff':>9}")
    for N in (int(x) for x in args.dims.split(",")):
        psi = random_state(N, rng)
        fast = min(timeit.repeat(lambda: wigner_fast(psi), number=1, repeat=args.repeat))
        dense = min(timeit.repeat(lambda: wigner_pure(psi), number=1, repeat=args.repeat))
        diff = np.abs(wigner_fast(psi) - wigner_pure(psi)).max()
        print(f"{N:>5} {1e3 * fast:>10.2f} {1e3 * dense:>11.2f} {dense / fast:>6.1f} {diff:>9.1e}")


if __name__ == "__main__":
    main()
