"""Print the symplectic matrices induced on Ext^1(χ, ε) by automorphisms, cocycles and twists."""

import argparse
import random

from hopfcheck.scalars import FieldSpec, Matrix, det
from hopfcheck.surj import Auto, CocycleAction, TwistAction, expected_block, rho_of


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--field", default="gf:7")
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    F, n, rng = FieldSpec.parse(args.field), args.n, random.Random(args.seed)
    T = Matrix.random(F, n, n, rng)
    while not det(T):
        T = Matrix.random(F, n, n, rng)
    M = Matrix.random(F, n, n, rng)
    M = M + M.T
    for label, action in (("automorphism T", Auto(T)), ("cocycle σ_M", CocycleAction(M)),
                          ("twist J_M", TwistAction(M))):
        m = rho_of(action)  # raises if not symplectic or off the block formula
        print(f"== {label}: matches block formula = {m == expected_block(action)}")
        for row in m.tolist():
            print("   ", row)
    print("T =", T.tolist(), " M =", M.tolist())


if __name__ == "__main__":
    main()
