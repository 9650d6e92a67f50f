import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import QQ, fields, invertible, symmetric
from hopfcheck.cocycle import build_JM, build_sigma
from hopfcheck.double import DoubleHopf, canonical_R
from hopfcheck.en import EnHopf
from hopfcheck.modrep import (ExtClass, ModuleRep, baer_sum, baer_sum_module, braiding, braiding_via_R, build_Va,
                              chi_module, coaction_from_double, direct_sum, ext_matrix, extract_ext_class,
                              gamma_auto, gamma_cocycle, gamma_twist, is_extension_shape, is_module_map,
                              module_from_yd, regular_module, scale_extension, squared_braiding, tensor_modules,
                              trivial_module, yd_violations)
from hopfcheck.scalars import GFp, Matrix
from hopfcheck.symplectic import omega

GF7 = GFp(7)


@st.composite
def ext_classes(draw, F, n):
    return ExtClass(n, F, tuple(draw(st.integers(-5, 5)) for _ in range(2 * n)))


field_n = st.tuples(fields, st.sampled_from([1, 2]))


def test_relations_checked():
    F = QQ
    z = Matrix(F, [[0]])
    with pytest.raises(ValueError, match="relations fail"):
        ModuleRep(1, F, Matrix(F, [[1]]), Matrix(F, [[-1]]), (z,), (z,))
    with pytest.raises(ValueError):
        ModuleRep(1, F, Matrix(F, [[2]]), Matrix(F, [[1]]), (z,), (z,))


def test_build_Va_examples():
    V0 = build_Va(ExtClass.zero(1, QQ))
    assert extract_ext_class(V0) == ExtClass.zero(1, QQ)
    assert V0 == direct_sum(trivial_module(1, QQ), chi_module(1, QQ))
    V = build_Va(ExtClass(1, QQ, (1, 0)))
    assert V.X[0] == Matrix(QQ, [[0, 1], [0, 0]]) and V.x[0].is_zero()


@given(field_n, st.data())
def test_extract_round_trip_and_basis_change(fn, data):
    F, n = fn
    a = data.draw(ext_classes(F, n))
    V = build_Va(a)
    assert extract_ext_class(V) == a
    lam = F(data.draw(st.integers(-5, 5)))
    assert extract_ext_class(V.conjugate(Matrix(F, [[1, lam], [0, 1]]))) == a


def test_extract_rejects_other_shapes():
    V = build_Va(ExtClass(1, QQ, (1, 2)))
    swapped = V.conjugate(Matrix(QQ, [[0, 1], [1, 0]]))
    assert not is_extension_shape(swapped)
    with pytest.raises(ValueError):
        extract_ext_class(swapped)


@given(field_n, st.data())
def test_baer_sum_is_addition(fn, data):
    F, n = fn
    a, b = data.draw(ext_classes(F, n)), data.draw(ext_classes(F, n))
    assert baer_sum(build_Va(a), build_Va(b)) == a + b
    assert baer_sum(build_Va(a), build_Va(ExtClass.zero(n, F))) == a
    assert is_extension_shape(baer_sum_module(build_Va(a), build_Va(b)))


@given(field_n, st.data())
def test_scalar_action(fn, data):
    F, n = fn
    a = data.draw(ext_classes(F, n))
    lam = F(data.draw(st.integers(1, 6)))
    assume(lam != 0)
    assert extract_ext_class(scale_extension(build_Va(a), lam)) == a.scale(lam)


def test_coaction_examples():
    n, F = 2, QQ
    E = EnHopf(n, F)
    a = ExtClass(n, F, (2, 3, 5, 7))
    rho = coaction_from_double(build_Va(a))
    assert rho.rho((1, 0)) == {0: (1, 0)}
    assert rho.rho((0, 1)) == {E.index(0, [1]): (2, 0), E.index(0, [2]): (3, 0), E.index(1): (0, 1)}
    assert coaction_from_double(chi_module(n, F)).rho((1,)) == {E.index(1): (1,)}
    assert coaction_from_double(trivial_module(n, F)).rho((1,)) == {0: (1,)}


@given(field_n, st.data())
def test_Va_are_yetter_drinfeld(fn, data):
    F, n = fn
    V = build_Va(data.draw(ext_classes(F, n)))
    assert yd_violations(V) == []
    rho = coaction_from_double(V)
    assert module_from_yd(n, F, V.c, V.x, rho) == V


def test_regular_module_is_yetter_drinfeld():
    V = regular_module(DoubleHopf(1, QQ))
    assert V.dim == 16
    assert yd_violations(V) == []


def test_braiding_examples():
    eps = trivial_module(2, QQ)
    assert braiding(eps, eps) == Matrix.identity(QQ, 1)


@given(field_n, st.data())
def test_squared_braiding(fn, data):
    F, n = fn
    a, b = data.draw(ext_classes(F, n)), data.draw(ext_classes(F, n))
    m = squared_braiding(build_Va(a), build_Va(b))
    want = [[F.one if i == j else F.zero for j in range(4)] for i in range(4)]
    want[0][3] = omega(b.a, a.a)
    assert m == Matrix(F, want)


@given(field_n, st.data())
def test_chi_centralizes_Va(fn, data):
    F, n = fn
    V, chi = build_Va(data.draw(ext_classes(F, n))), chi_module(n, F)
    assert braiding(V, chi) @ braiding(chi, V) == Matrix.identity(F, 2)
    assert squared_braiding(V, chi) == Matrix.identity(F, 2)


@pytest.mark.parametrize("n", [1, 2])
def test_braiding_is_flip_R_and_linear(n):
    rng = random.Random(n)
    R = canonical_R(DoubleHopf(n, QQ))
    for _ in range(3):
        V, W = build_Va(ExtClass.random(n, QQ, rng)), build_Va(ExtClass.random(n, QQ, rng))
        c = braiding(V, W)
        assert c == braiding_via_R(V, W, R)
        assert is_module_map(c, tensor_modules(V, W), tensor_modules(W, V))


def test_gamma_examples():
    F = QQ
    one = Matrix(F, [[1]])
    s = build_sigma(one)
    assert extract_ext_class(gamma_cocycle(s, build_Va(ExtClass(1, F, (1, 0))))).a == (1, 2)
    J = build_JM(one)
    assert extract_ext_class(gamma_twist(J.tensor, build_Va(ExtClass(1, F, (0, 1))))).a == (-2, 1)
    V = build_Va(ExtClass(1, F, (3, 4)))
    assert gamma_auto(Matrix.identity(F, 1), V) == V
    assert gamma_cocycle(build_sigma(Matrix.zeros(F, 1, 1)), V) == V
    E = EnHopf(1, F)
    assert gamma_twist(E.one_tensor(2), V) == V


@given(field_n, st.data())
def test_gamma_blocks(fn, data):
    F, n = fn
    M = data.draw(symmetric(F, n))
    I, Z = Matrix.identity(F, n), Matrix.zeros(F, n, n)
    S = M + M.T
    sigma = build_sigma(M)
    assert ext_matrix(lambda V: gamma_cocycle(sigma, V), n, F) == Matrix.block([[I, Z], [S, I]])
    J = build_JM(M, sigma)
    assert ext_matrix(lambda V: gamma_twist(J.tensor, V, J.inverse()), n, F) == Matrix.block([[I, -S], [Z, I]])


@given(field_n, st.data())
def test_gamma_auto_block_and_composition(fn, data):
    F, n = fn
    T1, T2 = data.draw(invertible(F, n)), data.draw(invertible(F, n))
    Z = Matrix.zeros(F, n, n)
    rho = lambda T: ext_matrix(lambda V: gamma_auto(T, V), n, F)
    assert rho(T1) == Matrix.block([[T1.inverse(), Z], [Z, T1.T]])
    both = ext_matrix(lambda V: gamma_auto(T1, gamma_auto(T2, V)), n, F)
    assert both == rho(T1) @ rho(T2) == rho(T2 @ T1)


def test_direct_convention_breaks_relations():
    reg = regular_module(DoubleHopf(1, QQ))
    T = Matrix(QQ, [[2]])
    assert yd_violations(gamma_auto(T, reg)) == []
    with pytest.raises(ValueError):
        gamma_auto(T, reg, convention="direct")
