"""Compare sparse and dense multiplication on the two workload shapes.

The sparse workload squares a two-term polynomial 2*X^3 + X^n, where the
term-pair count stays at 4 no matter how large n grows; the dense workload
multiplies two polynomials with all n coefficients nonzero. Operation
counters show the asymmetry directly, wall-clock medians show what it costs.

Usage: python3 scripts/bench_representations.py [--sizes 100,1000,10000] [--trials 5]
"""

import argparse
import random
import statistics
import time

from cohomring import instrument, poly
from cohomring.dsum import dsum_equal
from cohomring.rings import IntegerRing

Z = IntegerRing()


def timed(fn, trials):
    fn()  # warm-up, discarded
    laps = []
    for _ in range(trials):
        started = time.perf_counter()
        fn()
        laps.append(time.perf_counter() - started)
    return statistics.median(laps) * 1000


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="100,1000,10000")
    parser.add_argument("--trials", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print("operation counts, squaring 2*X^3 + X^n")
    print(f"{'n':>8} {'sparse coeff muls':>18} {'dense positions':>16}")
    for n in sizes:
        p = poly.uni_sparse(Z, [(3, 2), (n, 1)])
        instrument.reset()
        poly.mul(p, p)
        sparse_muls = instrument.counts()["coeff_mul"]
        pd = poly.convert(p, "dense")
        instrument.reset()
        poly.mul(pd, pd)
        positions = instrument.counts()["dense_positions"]
        print(f"{n:>8} {sparse_muls:>18} {positions:>16}")

    print()
    print(f"median wall-clock over {args.trials} trials, milliseconds")
    print(f"{'workload':>10} {'n':>8} {'sparse rep':>12} {'dense rep':>12}")
    rng = random.Random(0)
    for n in sizes:
        a = poly.uni_sparse(Z, [(3, 2), (n, 1)])
        ad = poly.convert(a, "dense")
        assert dsum_equal(poly.mul(a, a), poly.mul(ad, ad))
        s = timed(lambda: poly.mul(a, a), args.trials)
        d = timed(lambda: poly.mul(ad, ad), args.trials)
        print(f"{'sparse':>10} {n:>8} {s:>12.4f} {d:>12.4f}")
    for n in sizes:
        if n > 4096:
            print(f"{'dense':>10} {n:>8} {'(skipped: sparse rep walks n^2 term pairs)':>12}")
            continue
        a = poly.uni_sparse(Z, [(i, rng.randint(1, 9)) for i in range(n)])
        b = poly.uni_sparse(Z, [(i, rng.randint(1, 9)) for i in range(n)])
        ad, bd = poly.convert(a, "dense"), poly.convert(b, "dense")
        assert dsum_equal(poly.mul(a, b), poly.mul(ad, bd))
        s = timed(lambda: poly.mul(a, b), args.trials)
        d = timed(lambda: poly.mul(ad, bd), args.trials)
        print(f"{'dense':>10} {n:>8} {s:>12.4f} {d:>12.4f}")


if __name__ == "__main__":
    main()
