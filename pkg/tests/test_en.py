import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import QQ, fields, invertible
from hopfcheck import algebra as alg
from hopfcheck.en import EnHopf, HopfAutomorphism, check_automorphism, sign_S
from hopfcheck.scalars import GFp, Matrix
from oracles import oracle_antipode, oracle_coproduct, oracle_mul, word_of_en

GF7 = GFp(7)


@pytest.fixture(scope="module")
def E2():
    return EnHopf(2, QQ)


def test_multiplication_examples(E2):
    E = E2
    assert E.x(1) * E.c() == -(E.c() * E.x(1))
    assert E.x(2) * E.x(1) == -E.b(0, [1, 2])
    assert (E.c() * E.x(1)) * (E.c() * E.x(2)) == -E.b(0, [1, 2])
    assert E.x(1) * E.x(1) == E.zero()
    assert E.c() * E.c() == E.one()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_structure_constants_match_word_rewriting(n):
    E = EnHopf(n, QQ)
    for a, b in product(range(E.dim), repeat=2):
        assert E.basis(a) * E.basis(b) == oracle_mul(E, word_of_en, a, b)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_coproduct_and_antipode_match_oracle(n):
    E = EnHopf(n, QQ)
    for i in range(E.dim):
        assert E.coproduct(E.basis(i)).terms == oracle_coproduct(E, word_of_en, i)
        assert E.antipode(E.basis(i)) == oracle_antipode(E, word_of_en, i)


def test_sign_S_examples():
    assert sign_S([], [1, 2]) == 0
    assert sign_S([1], [1, 2]) == 0
    assert sign_S([2], [1, 2]) == 1
    with pytest.raises(ValueError):
        sign_S([3], [1, 2])


def test_coproduct_examples(E2):
    E = E2
    assert E.coproduct(E.c()) == E.tensor(E.c(), E.c())
    assert E.coproduct(E.x(1)) == E.tensor(E.one(), E.x(1)) + E.tensor(E.x(1), E.c())
    x12 = E.b(0, [1, 2])
    want = (E.tensor(E.one(), x12) + E.tensor(E.x(1), E.b(1, [2])) - E.tensor(E.x(2), E.b(1, [1]))
            + E.tensor(x12, E.one()))
    assert E.coproduct(x12) == want == E.coproduct(E.x(1)) * E.coproduct(E.x(2))


def test_counit_antipode_examples(E2):
    E = E2
    assert E.counit(E.c()) == 1
    assert all(E.counit(E.b(i, P)) == 0 for i in (0, 1) for P in ([1], [2], [1, 2]))
    assert E.antipode(E.x(1)) == E.c() * E.x(1)
    assert E.antipode(E.b(0, [1, 2])) == E.b(0, [1, 2])


def test_dual_basis_examples(E2):
    E = E2
    assert E.dual_basis(0, [1])(E.x(1)) == 1
    assert E.dual_basis(0, [1])(E.c() * E.x(1)) == 0
    assert E.dual_basis(1, [1, 2])(E.b(1, [1, 2])) == 1


@pytest.mark.parametrize("n", [1, 2])
def test_axioms_exhaustive(n):
    E = EnHopf(n, GF7)
    r = range(E.dim)
    assert alg.check_associative(E, product(r, repeat=3)) is None
    assert alg.check_coassociative(E, r) is None
    assert alg.check_counit(E, r) is None
    assert alg.check_antipode(E, r) is None
    assert alg.check_bialgebra(E, product(r, repeat=2)) is None


def test_axioms_n3():
    E = EnHopf(3, QQ)
    r = range(E.dim)
    rng = random.Random(1)
    trip = [tuple(rng.randrange(E.dim) for _ in range(3)) for _ in range(10_000)]
    assert alg.check_associative(E, trip) is None
    assert alg.check_coassociative(E, r) is None
    assert alg.check_counit(E, r) is None
    assert alg.check_antipode(E, r) is None


def test_index_round_trip():
    for n in (1, 2, 3):
        E = EnHopf(n, QQ)
        assert E.dim == 2 ** (n + 1)
        seen = set()
        for i in (0, 1):
            for m in range(2 ** n):
                P = [k for k in range(1, n + 1) if m >> (k - 1) & 1]
                seen.add(E.index(i, P))
        assert seen == set(range(E.dim))


def test_automorphism_examples(E2):
    E = E2
    I = Matrix.identity(QQ, 2)
    ident = HopfAutomorphism(E, I)
    assert all(ident(E.basis(i)) == E.basis(i) for i in range(E.dim))
    minus = HopfAutomorphism(E, -I)
    assert all(minus(E.basis(i)) == E.c() * E.basis(i) * E.c() for i in range(E.dim))
    swap = HopfAutomorphism(E, Matrix(QQ, [[0, 1], [1, 0]]))
    assert swap(E.x(1)) == E.x(2) and swap(E.x(2)) == E.x(1)
    with pytest.raises(ValueError):
        HopfAutomorphism(E, Matrix.zeros(QQ, 2, 2))


@given(fields, st.data())
def test_automorphism_is_hopf_map(F, data):
    E = EnHopf(2, F)
    T1, T2 = data.draw(invertible(F, 2)), data.draw(invertible(F, 2))
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    elems = list(E.generators().values()) + [E.random_elem(rng) for _ in range(2)]
    f = HopfAutomorphism(E, T1)
    assert check_automorphism(f, elems) is None
    g = HopfAutomorphism(E, T2)
    assert all(f(g(x)) == f.compose(g)(x) for x in elems)
    assert all(f.inverse()(f(x)) == x for x in elems)


@given(fields, st.data())
def test_random_elements_bialgebra(F, data):
    E = EnHopf(2, F)
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    a, b = E.random_elem(rng), E.random_elem(rng)
    assert E.coproduct(a * b) == E.coproduct(a) * E.coproduct(b)
    assert E.counit(a * b) == E.counit(a) * E.counit(b)
    assert E.antipode(a * b) == E.antipode(b) * E.antipode(a)
