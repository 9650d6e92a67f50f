"""Surjective Hopf maps D(E(n)) → E(n), subcategories and the Ext/Lagrangian dictionary.

A rank-n matrix (A|B) gives f(C) = f(c) = c, f(X_i) = Σ_j a_ji x_j,
f(x_i) = Σ_j b_ji x_j. The subcategory of D(E(n))-modules factoring through f
is tested by killing C - c and the kernel of (A|B) on span{X_i, x_i}; the
ideal these generate has a quotient of dimension at most 2^{n+1} = dim E(n)
and f kills it, so it is exactly ker f.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import Elem, Tensor
from .cocycle import build_JM, build_sigma
from .double import DoubleHopf, canonical_R
from .en import EnHopf, HopfAutomorphism, indices_of
from .modrep import (ExtClass, ModuleRep, build_Va, ext_matrix, extract_ext_class, gamma_auto,
                     gamma_cocycle, gamma_twist)
from .quasitriangular import RMatrix
from .scalars import FieldSpec, Matrix, kernel_basis, minor, rref
from .symplectic import LagSubspace, is_lagrangian, is_symplectic


@dataclass(frozen=True)
class SurjMap:
    A: Matrix
    B: Matrix

    def __post_init__(self):
        if self.A.shape != self.B.shape or self.A.nrows != self.A.ncols:
            raise ValueError("A and B must be n x n")
        if self.rows.rank != self.n:
            raise ValueError("(A|B) must have rank n")

    @classmethod
    def from_rows(cls, rows: Matrix) -> "SurjMap":
        n = rows.nrows
        return cls(rows.submatrix(range(n), range(n)), rows.submatrix(range(n), range(n, 2 * n)))

    @property
    def n(self) -> int:
        return self.A.nrows

    @property
    def field(self) -> FieldSpec:
        return self.A.field

    @property
    def rows(self) -> Matrix:
        return Matrix.block([[self.A, self.B]])

    def en(self) -> EnHopf:
        return EnHopf(self.n, self.field)

    def image_X(self, i: int) -> Elem:
        E = self.en()
        return E.elem({E.index(0, [j]): self.A[j - 1, i - 1] for j in range(1, self.n + 1)})

    def image_x(self, i: int) -> Elem:
        E = self.en()
        return E.elem({E.index(0, [j]): self.B[j - 1, i - 1] for j in range(1, self.n + 1)})


def _basis_image(f: SurjMap, D: DoubleHopf, idx: int) -> Elem:
    E = f.en()
    j, P, l, Q = D.decode(idx)
    out = E.c() if j else E.one()
    for k in indices_of(P):
        out = out * f.image_X(k)
    if l:
        out = out * E.c()
    for k in indices_of(Q):
        out = out * f.image_x(k)
    return out


def apply_surj(f: SurjMap, h: Elem) -> Elem:
    E = f.en()
    out = E.zero()
    for idx, v in h.terms.items():
        out = out + _basis_image(f, h.alg, idx) * v
    return out


def apply_surj_tensor(f: SurjMap, t: Tensor) -> Tensor:
    E = f.en()
    cache: dict = {}
    out = Tensor(E, t.legs, {})
    for key, v in t.terms.items():
        imgs = []
        for k in key:
            if k not in cache:
                cache[k] = _basis_image(f, t.alg, k)
            imgs.append(cache[k])
        out = out + E.tensor(*imgs) * v
    return out


def minor_formula_violations(f: SurjMap) -> list:
    """``f(X_P) = Σ_{|F|=|P|} [A]_{F,P} x_F`` and the same with B for x_P."""
    D = DoubleHopf(f.n, f.field)
    E = f.en()
    bad = []
    for r in range(f.n + 1):
        for P in combinations(range(1, f.n + 1), r):
            for mat, upper in ((f.A, True), (f.B, False)):
                h = D.b(P=P) if upper else D.b(Q=P)
                want = E.zero()
                for Fs in combinations(range(1, f.n + 1), r):
                    m = minor(mat, [x - 1 for x in Fs], [p - 1 for p in P])
                    want = want + E.b(0, Fs) * m
                if apply_surj(f, h) != want:
                    bad.append(("X" if upper else "x", P))
    return bad


def hopf_map_violations(f: SurjMap) -> list:
    """f respects the relations (on all generator pairs) and Δ, ε on generators."""
    D = DoubleHopf(f.n, f.field)
    E = f.en()
    gens = D.generators()
    bad = []
    for a_name, a in gens.items():
        fa = apply_surj(f, a)
        for b_name, b in gens.items():
            if apply_surj(f, a * b) != fa * apply_surj(f, b):
                bad.append(f"multiplicative on {a_name}{b_name}")
        if apply_surj_tensor(f, D.coproduct(a)) != E.coproduct(fa):
            bad.append(f"Δ on {a_name}")
        if E.counit(fa) != D.counit(a):
            bad.append(f"ε on {a_name}")
    return bad


def pushforward_R(f: SurjMap) -> RMatrix:
    """``(f⊗f)`` of the canonical R-matrix of the double."""
    D = DoubleHopf(f.n, f.field)
    return RMatrix(apply_surj_tensor(f, canonical_R(D)))


def _kernel_vectors(f: SurjMap) -> list[tuple]:
    return kernel_basis(f.rows)


def subcat_contains(f: SurjMap, V: ModuleRep) -> bool:
    """True iff the action on V factors through f."""
    if V.C != V.c:
        return False
    n = f.n
    for vec in _kernel_vectors(f):
        m = Matrix.zeros(V.field, V.dim, V.dim)
        for i in range(n):
            if vec[i]:
                m = m + V.X[i].scale(vec[i])
            if vec[n + i]:
                m = m + V.x[i].scale(vec[n + i])
        if not m.is_zero():
            return False
    return True


def ext_slice(f: SurjMap) -> LagSubspace:
    """``{a : V_a factors through f}``: V_a is killed by Σ u_i X_i + w_i x_i iff
    a·(u, w) = 0, so the slice is the annihilator of ker(A|B)."""
    if not is_lagrangian(f.rows):
        raise ValueError("(A|B) does not have Lagrangian rows")
    ker = _kernel_vectors(f)
    F = f.field
    slice_basis = kernel_basis(Matrix(F, ker)) if ker else [
        tuple(F.one if k == j else F.zero for k in range(2 * f.n)) for j in range(2 * f.n)]
    return LagSubspace.from_rows(Matrix(F, slice_basis))


def same_subcategory(f1: SurjMap, f2: SurjMap, family) -> bool:
    return all(subcat_contains(f1, build_Va(a)) == subcat_contains(f2, build_Va(a)) for a in family)


# --- the actions and their images ---------------------------------------------


@dataclass(frozen=True)
class Auto:
    T: Matrix


@dataclass(frozen=True)
class CocycleAction:
    M: Matrix


@dataclass(frozen=True)
class TwistAction:
    M: Matrix


def module_action(action):
    """The induced map on modules, V ↦ Γ_α(V)."""
    if isinstance(action, Auto):
        return lambda V: gamma_auto(action.T, V)
    if isinstance(action, CocycleAction):
        sigma = build_sigma(action.M)
        return lambda V: gamma_cocycle(sigma, V)
    if isinstance(action, TwistAction):
        J = build_JM(action.M)
        inv = J.inverse()
        return lambda V: gamma_twist(J.tensor, V, inv)
    raise TypeError(action)


def expected_block(action) -> Matrix:
    """diag(T^{-1}, T^t), [[I,0],[M+M^t,I]] and [[I,-(M+M^t)],[0,I]]."""
    if isinstance(action, Auto):
        T = action.T
        n, F = T.nrows, T.field
        Z = Matrix.zeros(F, n, n)
        return Matrix.block([[T.inverse(), Z], [Z, T.T]])
    M = action.M
    n, F = M.nrows, M.field
    I, Z = Matrix.identity(F, n), Matrix.zeros(F, n, n)
    S = M + M.T
    if isinstance(action, CocycleAction):
        return Matrix.block([[I, Z], [S, I]])
    return Matrix.block([[I, -S], [Z, I]])


def rho_of(action) -> Matrix:
    """Matrix of the induced map on Ext¹(χ, ε), column k = image of e_k.
    Checked symplectic and equal to :func:`expected_block`."""
    n = (action.T if isinstance(action, Auto) else action.M).nrows
    F = (action.T if isinstance(action, Auto) else action.M).field
    m = ext_matrix(module_action(action), n, F)
    if not is_symplectic(m):
        raise RuntimeError(f"image of {action} is not symplectic")
    if m != expected_block(action):
        raise RuntimeError(f"image of {action} differs from the block formula: {m}")
    return m


def transported_slice(action, U: LagSubspace) -> LagSubspace:
    """Apply Γ_α to V_u for a basis u of U and return the span of the new classes."""
    F = U.rref.field
    act = module_action(action)
    images = [extract_ext_class(act(build_Va(ExtClass(U.n, F, u)))).a for u in U.rref.rows]
    return LagSubspace.from_rows(Matrix(F, images))


def equivariance_ok(action, U: LagSubspace) -> bool:
    """Transported slice = ρ(α)·U, and the moved modules lie in the subcategory
    of the surjection for ρ(α)·U."""
    rho = rho_of(action)
    moved = transported_slice(action, U)
    if moved != U.transform(rho):
        return False
    g = SurjMap.from_rows(moved.rref)
    act = module_action(action)
    F = U.rref.field
    return all(subcat_contains(g, act(build_Va(ExtClass(U.n, F, u)))) for u in U.rref.rows)
