"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--limit N] [--repeat R]
"""

import argparse
import importlib
import time
from bisect import bisect_right


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench(mod, n, repeat):
    rows = {}
    rows["sieve_tables"] = best_of(repeat, mod.sieve_tables, n)
    table, prefix = mod.sieve_tables(n)
    rows["primes_from_table"] = best_of(repeat, mod.primes_from_table, table)
    primes = mod.primes_from_table(table)
    ps = primes[: bisect_right(primes, n)]
    rows["factorial_exponents"] = best_of(repeat, mod.factorial_exponents, primes, n)
    rows["alt_degrees"] = best_of(repeat, mod.alt_degrees, ps, prefix, n)
    rows["sym_degrees"] = best_of(repeat, mod.sym_degrees, ps, prefix, n)
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--limit", type=int, default=5**10, help="sieve limit and degree n (default 5^10)")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = {"python": importlib.import_module("gkod._pykernels")}
    try:
        backends["cython"] = importlib.import_module("gkod._ckernels")
    except ImportError:
        print("compiled kernels not built; showing the fallback only")

    results = {name: bench(mod, args.limit, args.repeat) for name, mod in backends.items()}
    names = list(results)
    print(f"n = {args.limit}, best of {args.repeat}")
    print(f"{'kernel':<22}" + "".join(f"{name:>12}" for name in names) + ("    speedup" if len(names) == 2 else ""))
    for kernel in results["python"]:
        line = f"{kernel:<22}" + "".join(f"{results[name][kernel]:>11.4f}s" for name in names)
        if len(names) == 2:
            line += f"  {results['python'][kernel] / results['cython'][kernel]:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
