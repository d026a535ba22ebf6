"""Compare the compiled and pure-Python GF(p) gcd kernels.

Times the raw kernel on random polynomials that share a planted factor, then
the full modular integer gcd driven by each kernel.

    python3 benchmarks/bench_kernels.py --degrees 20 80 200 --repeat 5
"""

from __future__ import annotations

import argparse
import random
import timeit

from revcrit import _pykernels
from revcrit.exactpoly import Poly
from revcrit.exactpoly.gcd import int_poly_gcd

P = 2**31 - 1


def _load_compiled():
    try:
        from revcrit import _ckernels
    except ImportError:
        return None
    return _ckernels


def _modp_case(rng: random.Random, n: int) -> tuple[list[int], list[int]]:
    common = Poly([rng.randrange(P) for _ in range(n // 2)] + [1])
    a = Poly([rng.randrange(P) for _ in range(n // 2)] + [1]) * common
    b = Poly([rng.randrange(P) for _ in range(n // 2)] + [1]) * common
    return [int(c) % P for c in a.coeffs], [int(c) % P for c in b.coeffs]


def _int_case(rng: random.Random, n: int) -> tuple[list[int], list[int]]:
    def rnd(d):
        return Poly([rng.randint(-99, 99) for _ in range(d)] + [rng.randint(1, 9)])

    common = rnd(n // 2)
    return (rnd(n // 2) * common).integer_primitive(), (rnd(n // 2) * common).integer_primitive()


def _best(fn, repeat: int) -> float:
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", type=int, nargs="+", default=[20, 80, 200])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    compiled = _load_compiled()
    if compiled is None:
        print("compiled kernels not built; only the Python backend is timed")
    rng = random.Random(args.seed)
    print(f"{'case':<14}{'degree':>7}{'python ms':>12}{'cython ms':>12}{'speedup':>9}")
    for n in args.degrees:
        a, b = _modp_case(rng, n)
        ia, ib = _int_case(rng, n)
        cases = [
            ("gcd mod p", lambda k: k.gcd_modp(a, b, P)),
            ("gcd over Z", lambda k: int_poly_gcd(ia, ib, k.gcd_modp)),
        ]
        for name, run in cases:
            t_py = _best(lambda: run(_pykernels), args.repeat)
            if compiled is None:
                print(f"{name:<14}{n:>7}{t_py * 1e3:>12.3f}{'-':>12}{'-':>9}")
                continue
            assert run(compiled) == run(_pykernels)
            t_cy = _best(lambda: run(compiled), args.repeat)
            print(f"{name:<14}{n:>7}{t_py * 1e3:>12.3f}{t_cy * 1e3:>12.3f}{t_py / t_cy:>8.1f}x")


if __name__ == "__main__":
    main()
