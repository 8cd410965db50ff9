"""Compare the compiled and pure-Python multiplication kernels.

    python3 benchmarks/bench_kernels.py --repeat 5

Workloads are powers of random sparse Laurent polynomials, the shape that
dominates radical scans.  Both kernels must produce identical output.
"""
import argparse
import random
import time

from laurentmed import kernels
from laurentmed.laurent import LaurentPoly


def random_poly(rng, n, terms, span):
    return LaurentPoly(n, {tuple(rng.randint(-span, span) for _ in range(n)): rng.randint(-3, 3) or 1 for _ in range(terms)})


def flat(f):
    num, _ = f.integer_form()
    exps, coefs = [], []
    for e, c in num.items():
        exps.extend(e)
        coefs.append(c)
    return exps, coefs


def workloads(seed):
    rng = random.Random(seed)
    out = []
    for n, terms, power in ((1, 5, 30), (2, 5, 10), (3, 5, 8), (3, 8, 6)):
        f = random_poly(rng, n, terms, 4)
        g = f ** (power - 1)
        out.append((f"n={n} terms={terms} f^{power}", n, flat(g), flat(f)))
    return out


def time_kernel(fn, n, a, b, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(n, a[0], a[1], b[0], b[1])
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernel not available; only the pure kernel will be timed")
    print(f"{'workload':<26}{'terms out':>10}{'pure ms':>10}{'compiled ms':>13}{'speedup':>9}")
    for label, n, a, b in workloads(args.seed):
        t_pure, r_pure = time_kernel(kernels.pure_convolve, n, a, b, args.repeat)
        if kernels.BACKEND == "cython":
            t_comp, r_comp = time_kernel(kernels.compiled_convolve, n, a, b, args.repeat)
            assert r_comp is None or r_comp == r_pure, "kernels disagree"
            comp = f"{t_comp * 1e3:13.2f}{t_pure / t_comp:9.1f}x"
        else:
            comp = f"{'-':>13}{'-':>9}"
        print(f"{label:<26}{len(r_pure[1]):>10}{t_pure * 1e3:10.2f}{comp}")


if __name__ == "__main__":
    main()
