"""Compare (f⊗f)(R) with R_{AB^t} and R_{BA^t} on random surjections D(E(n)) → E(n).

The two agree exactly when the rows of (A|B) span a Lagrangian subspace.
"""

import argparse
import random

from hopfcheck.quasitriangular import build_RA, is_triangular
from hopfcheck.scalars import FieldSpec, Matrix
from hopfcheck.surj import SurjMap, pushforward_R
from hopfcheck.symplectic import LagSubspace, is_lagrangian, random_symplectic


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--field", default="gf:7")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    F, n, rng = FieldSpec.parse(args.field), args.n, random.Random(args.seed)
    print(f"{'lagrangian':>10} {'=R_ABt':>7} {'=R_BAt':>7} {'triangular':>10}")
    done = 0
    while done < args.count:
        if done % 2:  # every other sample is a Lagrangian row space
            base = Matrix.block([[Matrix.identity(F, n), Matrix.zeros(F, n, n)]])
            rows = LagSubspace.from_rows(base).transform(random_symplectic(n, F, rng)).rref
        else:
            rows = Matrix.random(F, n, 2 * n, rng)
        if rows.rank != n:
            continue
        f = SurjMap.from_rows(rows)
        R = pushforward_R(f)
        print(f"{str(is_lagrangian(rows)):>10} {str(R.tensor == build_RA(f.A @ f.B.T).tensor):>7} "
              f"{str(R.tensor == build_RA(f.B @ f.A.T).tensor):>7} {str(is_triangular(R)):>10}")
        done += 1


if __name__ == "__main__":
    main()
