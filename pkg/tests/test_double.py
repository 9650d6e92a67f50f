import random
from itertools import product

import pytest

from conftest import QQ
from hopfcheck import algebra as alg
from hopfcheck.algebra import Functional
from hopfcheck.double import (DoubleHopf, canonical_R, check_skew_primitive, dual_to_double, one_dim_reps,
                              skew_primitives)
from hopfcheck.en import EnHopf
from hopfcheck.quasitriangular import RMatrix, qt_check
from hopfcheck.scalars import GFp
from oracles import oracle_antipode, oracle_coproduct, oracle_mul, word_of_double, word_of_en

GF7 = GFp(7)


@pytest.fixture(scope="module")
def D1():
    return DoubleHopf(1, QQ)


@pytest.fixture(scope="module")
def D2():
    return DoubleHopf(2, QQ)


def test_relation_examples(D2):
    D = D2
    assert D.x(1) * D.X(1) == -(D.X(1) * D.x(1)) + D.one() - D.C() * D.c()
    assert D.x(1) * D.X(2) == -(D.X(2) * D.x(1))
    assert D.C() * D.c() == D.c() * D.C()
    for g in D.generators().values():
        assert g * g in (D.one(), D.zero())


def test_products_match_word_rewriting(D1, D2):
    for a, b in product(range(D1.dim), repeat=2):
        assert D1.basis(a) * D1.basis(b) == oracle_mul(D1, word_of_double, a, b)
    rng = random.Random(3)
    for _ in range(400):
        a, b = rng.randrange(D2.dim), rng.randrange(D2.dim)
        assert D2.basis(a) * D2.basis(b) == oracle_mul(D2, word_of_double, a, b)


def test_coproduct_antipode_match_oracle(D1):
    for i in range(D1.dim):
        assert D1.coproduct(D1.basis(i)).terms == oracle_coproduct(D1, word_of_double, i)
        assert D1.antipode(D1.basis(i)) == oracle_antipode(D1, word_of_double, i)


def test_coproduct_examples(D1):
    D = D1
    assert D.coproduct(D.X(1)) == D.tensor(D.one(), D.X(1)) + D.tensor(D.X(1), D.C())
    Cc = D.C() * D.c()
    assert D.coproduct(Cc) == D.tensor(Cc, Cc)
    t = D.coproduct(D.X(1) * D.x(1))
    assert t == D.coproduct(D.X(1)) * D.coproduct(D.x(1)) and len(t.terms) == 4


@pytest.mark.parametrize("n", [1, 2])
def test_dimension_and_axioms(n):
    D = DoubleHopf(n, GF7)
    assert D.dim == 2 ** (2 * n + 2)
    r = range(D.dim)
    gens = [next(iter(g.terms)) for g in D.generators().values()]
    assert alg.check_associative(D, product(gens, repeat=3)) is None
    rng = random.Random(n)
    trip = [tuple(rng.randrange(D.dim) for _ in range(3)) for _ in range(10_000)]
    assert alg.check_associative(D, trip) is None
    assert alg.check_coassociative(D, r) is None
    assert alg.check_counit(D, r) is None
    assert alg.check_antipode(D, r) is None
    pairs = product(r, repeat=2) if n == 1 else [(rng.randrange(D.dim), rng.randrange(D.dim)) for _ in range(500)]
    assert alg.check_bialgebra(D, pairs) is None


def _functional_of_upper(D, E, a):
    """Independent reading of C, X_k as functionals, multiplied by convolution
    computed from the word-rewriting coproduct of E(n)."""
    d = E.dim
    cop = [oracle_coproduct(E, word_of_en, i) for i in range(d)]

    def conv(f, g):
        return [sum((f[k1] * g[k2] * v for (k1, k2), v in cop[i].items()), QQ.zero) for i in range(d)]

    def basis_dual(i):
        return [QQ.one if k == i else QQ.zero for k in range(d)]

    half = 1 << E.n
    C_f = [u - v for u, v in zip(basis_dual(0), basis_dual(half))]
    X_f = [[u - v for u, v in zip(basis_dual(1 << (k - 1)), basis_dual(half + (1 << (k - 1))))]
           for k in range(1, E.n + 1)]
    total = [QQ.zero] * d
    for idx, v in a.terms.items():
        j, P, l, Q = D.decode(idx)
        assert not l and not Q
        f = C_f if j else [u + w for u, w in zip(basis_dual(0), basis_dual(half))]
        for k in range(1, E.n + 1):
            if P >> (k - 1) & 1:
                f = conv(f, X_f[k - 1])
        total = [t + v * x for t, x in zip(total, f)]
    return total


@pytest.mark.parametrize("n", [1, 2])
def test_dual_to_double_is_the_dual_basis(n):
    D = DoubleHopf(n, QQ)
    E = EnHopf(n, QQ)
    for i in range(E.dim):
        ci, pm = E.decode(i)
        P = [k for k in range(1, n + 1) if pm >> (k - 1) & 1]
        f = _functional_of_upper(D, E, dual_to_double(D, ci, P))
        assert f == [QQ.one if k == i else QQ.zero for k in range(E.dim)]


def test_dual_to_double_examples(D1):
    D = D1
    half = QQ(1) / 2
    assert dual_to_double(D, 0, [1]) == (D.X(1) + D.C() * D.X(1)) * half
    assert dual_to_double(D, 1, [1]) == (D.X(1) - D.C() * D.X(1)) * (-half)
    assert dual_to_double(D, 0) + dual_to_double(D, 1) == D.one()
    assert dual_to_double(D, 0) - dual_to_double(D, 1) == D.C()


def test_dual_to_double_without_half_fails(D1):
    # the variant without ½ does not give a dual basis
    E = EnHopf(1, QQ)
    wrong = D1.X(1) + D1.C() * D1.X(1)
    assert _functional_of_upper(D1, E, wrong)[E.index(0, [1])] == 2


def test_canonical_R(D1):
    R = canonical_R(D1)
    assert len(R.terms) == 8
    assert qt_check(RMatrix(R)).passed
    with pytest.raises(ValueError):
        DoubleHopf(0, QQ)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_one_dim_reps(n):
    D = DoubleHopf(n, QQ)
    chars = one_dim_reps(D)
    assert len(chars) == 2
    eps, chi = chars
    assert (eps.C, eps.c) == (1, 1) and (chi.C, chi.c) == (-1, -1)
    assert all(v == 0 for v in eps.X + eps.x + chi.X + chi.x)
    if n <= 2:
        for a, b in product(range(D.dim), repeat=2):
            if (a * 7 + b) % 5:
                continue
            ab = D.basis(a) * D.basis(b)
            assert chi(ab) == chi(D.basis(a)) * chi(D.basis(b))


@pytest.mark.parametrize("n", [1, 2])
def test_skew_primitive_dimensions(n):
    D = DoubleHopf(n, QQ)
    eps, chi = one_dim_reps(D)
    basis = skew_primitives(D, eps, chi)
    assert len(basis) == 2 * n + 1
    assert all(check_skew_primitive(D, x, eps, chi) for x in basis)
    # ε - χ is one of them
    diff = [a - b for a, b in zip(eps.as_functional(D), chi.as_functional(D))]
    assert check_skew_primitive(D, diff, eps, chi)
    # (ε, ε): anticommutation with C forces ξ(X_i) = 0, and ξ(C) = ξ(c) = 0
    assert skew_primitives(D, eps, eps) == []
