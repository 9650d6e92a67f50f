"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

All comparisons are exact (rational or GF(p) arithmetic), so the numeric
tolerance is zero everywhere. The only pinned tolerances are wall-clock limits.
"""

import random
import shutil
import subprocess
import sys
import time
from itertools import product

import pytest

from hopfcheck import algebra as alg
from hopfcheck.cocycle import build_JM, build_sigma
from hopfcheck.double import DoubleHopf, one_dim_reps, skew_primitives
from hopfcheck.en import EnHopf, HopfAutomorphism
from hopfcheck.modrep import (ExtClass, baer_sum, braiding, build_Va, chi_module, ext_matrix, extract_ext_class,
                              gamma_auto, gamma_cocycle, gamma_twist, squared_braiding)
from hopfcheck.quasitriangular import build_RA, build_RA_grouplike_form, is_triangular, qt_check
from hopfcheck.scalars import FieldSpec, GFp, Matrix, det
from hopfcheck.surj import SurjMap, ext_slice, pushforward_R
from hopfcheck.symplectic import (LagSubspace, Token, brute_lagrangian_count, enumerate_lagrangians, is_lagrangian,
                                  is_symplectic, omega, random_symplectic, random_word, sp_decompose,
                                  word_product, xyz_factors)

EXACT_TOL = 0              # every comparison below is exact equality
AXIOM_TIME_LIMIT_S = 120   # criterion 1
CLI_TIME_LIMIT_S = 600     # criterion 10
SEED = 20240611

QQ, GF3, GF7 = FieldSpec("rational"), GFp(3), GFp(7)


@pytest.fixture
def emit(capsys):
    def _emit(k: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[acceptance {k:2d}] {'PASS' if ok else 'FAIL'}  {detail}")
    return _emit


def _invertible(F, n, rng):
    while True:
        T = Matrix.random(F, n, n, rng)
        if det(T):
            return T


def _sym(F, n, rng):
    A = Matrix.random(F, n, n, rng)
    return A + A.T


def _random_lagrangian(F, n, rng):
    base = Matrix.block([[Matrix.identity(F, n), Matrix.zeros(F, n, n)]])
    return LagSubspace.from_rows(base).transform(random_symplectic(n, F, rng))


def test_01_hopf_and_double_axioms(emit):
    t0 = time.perf_counter()
    failures = []
    rng = random.Random(SEED)
    for n in (1, 2, 3):
        E = EnHopf(n, QQ)
        r = range(E.dim)
        for name, res in (("coassociative", alg.check_coassociative(E, r)), ("counit", alg.check_counit(E, r)),
                          ("antipode", alg.check_antipode(E, r)),
                          ("bialgebra", alg.check_bialgebra(E, product(r, repeat=2)))):
            if res is not None:
                failures.append((f"E({n})", name, res))
    for n in (1, 2):
        D = DoubleHopf(n, GF7)
        r = range(D.dim)
        pairs = list(product(r, repeat=2))  # 4096 for n = 2, i.e. exhaustive
        for name, res in (("coassociative", alg.check_coassociative(D, r)), ("counit", alg.check_counit(D, r)),
                          ("antipode", alg.check_antipode(D, r)), ("bialgebra", alg.check_bialgebra(D, pairs))):
            if res is not None:
                failures.append((f"D(E({n}))", name, res))
    # the largest object, D(E(2)), also gets 10^4 random products of random elements
    D = DoubleHopf(2, GF7)
    trip = [(rng.randrange(D.dim), rng.randrange(D.dim), rng.randrange(D.dim)) for _ in range(10_000)]
    if alg.check_associative(D, trip) is not None:
        failures.append(("D(E(2))", "associative sample", None))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < AXIOM_TIME_LIMIT_S
    emit(1, ok, f"axioms E(1..3), D(E(1..2)) exhaustive; failures={len(failures)}; "
                f"{elapsed:.1f}s (limit {AXIOM_TIME_LIMIT_S}s)")
    assert ok, failures


def test_02_double_dimension_and_confluence(emit):
    rng = random.Random(SEED + 2)
    bad = []
    for n in (1, 2):
        D = DoubleHopf(n, QQ)
        if D.dim != 2 ** (2 * n + 2):
            bad.append(("dim", n))
        seen = set()
        for i in range(D.dim):
            j, P, l, Q = D.decode(i)
            idx = D.index(j, [k for k in range(1, n + 1) if P >> (k - 1) & 1], l,
                          [k for k in range(1, n + 1) if Q >> (k - 1) & 1])
            seen.add(idx)
        if seen != set(range(D.dim)):
            bad.append(("basis bijection", n))
        gens = [next(iter(g.terms)) for g in D.generators().values()]
        if alg.check_associative(D, product(gens, repeat=3)) is not None:
            bad.append(("generator triples", n))
        trip = [(rng.randrange(D.dim), rng.randrange(D.dim), rng.randrange(D.dim)) for _ in range(10_000)]
        res = alg.check_associative(D, trip)
        if res is not None:
            bad.append(("random triples", n, res))
    ok = not bad
    emit(2, ok, f"dim D(E(n)) = 2^(2n+2) for n=1,2; 10^4 random triples per n; failures={len(bad)}")
    assert ok, bad


def test_03_rmatrix_family(emit):
    rng = random.Random(SEED + 3)
    bad, total = [], 0
    for F in (QQ, GF7):
        for n in (1, 2):
            for i in range(20):
                A = Matrix.random(F, n, n, rng)
                if i % 4 == 0:
                    A = A + A.T  # make sure both sides of the criterion occur
                R = build_RA(A)
                total += 1
                if not qt_check(R).passed:
                    bad.append(("qt", str(F), A.tolist()))
                if is_triangular(R) != (A == A.T):
                    bad.append(("triangular", str(F), A.tolist()))
                if R.tensor != build_RA_grouplike_form(A).tensor:
                    bad.append(("displays", str(F), A.tolist()))
    ok = not bad
    emit(3, ok, f"{total} R_A checked (20 per n, field); qt + triangular<=>symmetric + displays agree; "
                f"failures={len(bad)}")
    assert ok, bad


def test_04_pushforward_identity(emit):
    rng = random.Random(SEED + 4)
    maps = []
    for n in (1, 2):
        F = QQ if n == 1 else GF7
        lag = non = 0
        while lag + non < 20:
            if n == 2 and lag < 10 and (lag <= non):
                rows = _random_lagrangian(F, n, rng).rref
                rows = _invertible(F, n, rng) @ rows
            else:
                rows = Matrix.random(F, n, 2 * n, rng)
                if rows.rank != n or (n == 2 and is_lagrangian(rows)):
                    continue
            f = SurjMap.from_rows(rows)
            if is_lagrangian(rows):
                lag += 1
            else:
                non += 1
            maps.append(f)
    literal_fail, tri_fail, ba_fail = [], [], []
    n_lag = sum(is_lagrangian(f.rows) for f in maps)
    for f in maps:
        R = pushforward_R(f)
        if R.tensor != build_RA(f.A @ f.B.T).tensor:
            literal_fail.append(f.rows.tolist())
        if is_triangular(R) != is_lagrangian(f.rows):
            tri_fail.append(f.rows.tolist())
        if R.tensor != build_RA(f.B @ f.A.T).tensor:
            ba_fail.append(f.rows.tolist())
    ok = not literal_fail and not tri_fail
    emit(4, ok, f"{len(maps)} maps ({n_lag} Lagrangian, {len(maps) - n_lag} not): "
                f"(f⊗f)(R) != R_(AB^t) on {len(literal_fail)}; triangular<=>Lagrangian failures={len(tri_fail)}; "
                f"(f⊗f)(R) = R_(BA^t) failures={len(ba_fail)}")
    assert not tri_fail and not ba_fail, (tri_fail, ba_fail)
    assert not literal_fail, f"R_(AB^t) differs from the pushforward on {len(literal_fail)} non-Lagrangian maps"


def test_05_ext_space(emit):
    rng = random.Random(SEED + 5)
    bad = []
    for n in (1, 2):
        for F in (QQ, GF7):
            for _ in range(100):
                a = ExtClass.random(n, F, rng)
                if extract_ext_class(build_Va(a)) != a:
                    bad.append(("round trip", a))
            for _ in range(50):
                a, b = ExtClass.random(n, F, rng), ExtClass.random(n, F, rng)
                if baer_sum(build_Va(a), build_Va(b)) != a + b:
                    bad.append(("baer", a, b))
        D = DoubleHopf(n, QQ)
        eps, chi = one_dim_reps(D)
        dim = len(skew_primitives(D, eps, chi))
        if dim != 2 * n + 1:
            bad.append(("skew primitives", n, dim))
    ok = not bad
    emit(5, ok, f"round trip 100/field/n, Baer sum 50 pairs/field/n, skew-primitive dim 2n+1 for n=1,2; "
                f"failures={len(bad)}")
    assert ok, bad


def test_06_squared_braiding(emit):
    rng = random.Random(SEED + 6)
    bad = []
    for n in (1, 2):
        F = GF7 if n == 2 else QQ
        for _ in range(20):
            a, b = ExtClass.random(n, F, rng), ExtClass.random(n, F, rng)
            want = [[F.one if i == j else F.zero for j in range(4)] for i in range(4)]
            want[0][3] = omega(b.a, a.a)
            if squared_braiding(build_Va(a), build_Va(b)) != Matrix(F, want):
                bad.append(("squared", a, b))
        chi = chi_module(n, F)
        for _ in range(20):
            V = build_Va(ExtClass.random(n, F, rng))
            if braiding(V, chi) @ braiding(chi, V) != Matrix.identity(F, 2):
                bad.append(("chi", V))
    ok = not bad
    emit(6, ok, f"squared braiding = I + ω(b,a)E on 20 pairs per n; χ-centralizing on 20 per n; failures={len(bad)}")
    assert ok, bad


def test_07_rho_images(emit):
    rng = random.Random(SEED + 7)
    bad = []
    for n in (1, 2):
        F = QQ if n == 1 else GF7
        I, Z = Matrix.identity(F, n), Matrix.zeros(F, n, n)
        images = []
        for _ in range(10):
            M = _sym(F, n, rng)
            S = M + M.T
            sigma = build_sigma(M)
            J = build_JM(M, sigma)
            mc = ext_matrix(lambda V: gamma_cocycle(sigma, V), n, F)
            mt = ext_matrix(lambda V: gamma_twist(J.tensor, V, J.inverse()), n, F)
            if mc != Matrix.block([[I, Z], [S, I]]):
                bad.append(("cocycle", M.tolist()))
            if mt != Matrix.block([[I, -S], [Z, I]]):
                bad.append(("twist", M.tolist()))
            images += [mc, mt]
        for _ in range(5):
            T1, T2 = _invertible(F, n, rng), _invertible(F, n, rng)
            m1 = ext_matrix(lambda V: gamma_auto(T1, V), n, F)
            m2 = ext_matrix(lambda V: gamma_auto(T2, V), n, F)
            if not (is_symplectic(m1) and m1.submatrix(range(n), range(n, 2 * n)).is_zero()
                    and m1.submatrix(range(n, 2 * n), range(n)).is_zero()):
                bad.append(("auto block", T1.tolist()))
            both = ext_matrix(lambda V: gamma_auto(T1, gamma_auto(T2, V)), n, F)
            if both != m1 @ m2:
                bad.append(("functorial", T1.tolist(), T2.tolist()))
            images += [m1, m2]
        for m in images:
            for _ in range(3):
                a, b = ExtClass.random(n, F, rng).a, ExtClass.random(n, F, rng).a
                if omega(m.apply(a), m.apply(b)) != omega(a, b):
                    bad.append(("omega", m.tolist()))
    ok = not bad
    emit(7, ok, f"cocycle/twist blocks for 10 M per n, automorphism blocks and composition, ω preserved; "
                f"failures={len(bad)}")
    assert ok, bad


def test_08_grassmannian_bijection(emit):
    rng = random.Random(SEED + 8)
    bad = []
    lags3 = enumerate_lagrangians(1, 3)
    for U in lags3:
        if ext_slice(SurjMap.from_rows(U.rref)) != U:
            bad.append(("gf3", U.rref.tolist()))
    for _ in range(10):
        U = _random_lagrangian(GF7, 2, rng)
        f = SurjMap.from_rows(_invertible(GF7, 2, rng) @ U.rref)
        if ext_slice(f) != U:
            bad.append(("gf7", U.rref.tolist()))
    counts = {(n, q): (len(enumerate_lagrangians(n, q)), brute_lagrangian_count(n, q))
              for n, q in ((1, 3), (2, 3), (1, 5))}
    want = {(1, 3): 4, (2, 3): 40, (1, 5): 6}
    for key, (cells, brute) in counts.items():
        if not cells == brute == want[key]:
            bad.append(("count", key, cells, brute))
    ok = not bad and len(lags3) == 4
    emit(8, ok, f"GF(3) n=1: {len(lags3)} Lagrangians round-trip; GF(7) n=2: 10 random round-trip; "
                f"counts {counts}; failures={len(bad)}")
    assert ok, bad


def test_09_symplectic_generation(emit):
    rng = random.Random(SEED + 9)
    F, n = GF7, 2
    bad, xyz = [], 0
    for _ in range(100):
        M = word_product(random_word(n, F, rng), n, F)
        w = sp_decompose(M)
        if word_product(w, n, F) != M:
            bad.append(("round trip", M.tolist()))
        if xyz_factors(M) is not None and M != Matrix.identity(F, 2 * n):
            xyz += 1
            if [t.kind for t in w] != ["Diag", "Lower", "Upper"]:
                bad.append(("xyz form", M.tolist()))
    seen = {}
    for a, b, b2 in product(GF3.elements(), repeat=3):
        if a:
            M = word_product([Token("Diag", Matrix(GF3, [[a]])), Token("Lower", Matrix(GF3, [[b]])),
                              Token("Upper", Matrix(GF3, [[b2]]))], 1, GF3)
            seen.setdefault(M, []).append((a, b, b2))
    sl2 = [Matrix(GF3, [[p, q], [r, s]]) for p, q, r, s in product(GF3.elements(), repeat=4) if p * s - q * r == 1]
    invertible_tl = {M for M in sl2 if M[0, 0]}
    if any(len(v) > 1 for v in seen.values()) or set(seen) != invertible_tl:
        bad.append(("uniqueness", len(seen), len(invertible_tl)))
    ok = not bad
    emit(9, ok, f"100 words over GF(7), n=2 round-trip ({xyz} with invertible top-left, all 3-token); "
                f"XYZ unique on all {len(invertible_tl)} such matrices of SL_2(GF(3)); failures={len(bad)}")
    assert ok, bad


def test_10_cli_end_to_end(emit):
    exe = shutil.which("hopfcheck")
    cmd = ([exe] if exe else [sys.executable, "-m", "hopfcheck.cli"]) + [
        "verify", "--suite", "all", "--n", "2", "--field", "gf:7"]
    t0 = time.perf_counter()
    r = subprocess.run(cmd, capture_output=True, text=True, timeout=CLI_TIME_LIMIT_S + 60)
    elapsed = time.perf_counter() - t0
    ok = r.returncode == 0 and elapsed < CLI_TIME_LIMIT_S
    tail = r.stdout.strip().splitlines()[-1] if r.stdout.strip() else r.stderr[-200:]
    emit(10, ok, f"exit {r.returncode} in {elapsed:.1f}s (limit {CLI_TIME_LIMIT_S}s): {tail}")
    assert ok, r.stdout[-2000:] + r.stderr[-2000:]
