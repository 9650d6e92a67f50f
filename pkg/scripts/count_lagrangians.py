"""Count Lagrangian subspaces of GF(q)^{2n}: Schubert-cell enumeration vs brute force vs product formula."""

import argparse
import time

from hopfcheck.symplectic import brute_lagrangian_count, enumerate_lagrangians, lagrangian_count_formula


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--cases", default="1:3,2:3,1:5,2:5,1:7,2:7", help="comma list of n:q")
    p.add_argument("--brute-max", type=int, default=5, help="skip brute force above this q for n = 2")
    args = p.parse_args()
    print(f"{'n':>2} {'q':>3} {'cells':>7} {'brute':>7} {'formula':>8}  time")
    for case in args.cases.split(","):
        n, q = map(int, case.split(":"))
        t0 = time.perf_counter()
        cells = len(enumerate_lagrangians(n, q))
        brute = brute_lagrangian_count(n, q) if n == 1 or q <= args.brute_max else None
        print(f"{n:>2} {q:>3} {cells:>7} {str(brute or '-'):>7} {lagrangian_count_formula(n, q):>8}  "
              f"{time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
