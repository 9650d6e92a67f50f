"""Finite-dimensional D(E(n))-modules given by generator matrices.

A module is stored by the matrices of C, c, X_i, x_i; the defining
relations of the double are checked on construction. From the action we
derive the Yetter-Drinfeld data over E(n) (the lowercase copy acts, the
dual half gives the coaction), braidings, tensor products, the
two-dimensional extensions V_a of χ by ε, and the induced actions of
Hopf automorphisms, invariant cocycles and invariant twists.
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field as dc_field
from itertools import product as iproduct
from typing import Callable, Sequence

from .algebra import Elem, Tensor
from .double import DoubleHopf, _encode, dual_to_double_index
from .en import EnHopf, HopfAutomorphism, indices_of
from .scalars import FieldSpec, Matrix, solve


def _zero(F, d):
    return Matrix.zeros(F, d, d)


def _commutator_sum(a: Matrix, b: Matrix) -> Matrix:
    return a @ b + b @ a


@dataclass(frozen=True)
class ModuleRep:
    """Representation of D(E(n)) on k^dim by the matrices of its generators."""

    n: int
    field: FieldSpec
    C: Matrix
    c: Matrix
    X: tuple
    x: tuple
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if len(self.X) != self.n or len(self.x) != self.n:
            raise ValueError(f"need {self.n} matrices for X and for x")
        d = self.C.nrows
        for m in (self.C, self.c, *self.X, *self.x):
            if m.shape != (d, d):
                raise ValueError("generator matrices must be square of equal size")
        bad = self.relation_violations()
        if bad:
            raise ValueError("relations fail: " + ", ".join(bad))

    @property
    def dim(self) -> int:
        return self.C.nrows

    def relation_violations(self) -> list[str]:
        F, d = self.field, self.dim
        I, Z = Matrix.identity(F, d), _zero(F, d)
        C, c, X, x = self.C, self.c, self.X, self.x
        bad = []
        if C @ C != I:
            bad.append("C^2=1")
        if c @ c != I:
            bad.append("c^2=1")
        if c @ C != C @ c:
            bad.append("cC=Cc")
        for i in range(self.n):
            k = i + 1
            if X[i] @ X[i] != Z:
                bad.append(f"X{k}^2=0")
            if x[i] @ x[i] != Z:
                bad.append(f"x{k}^2=0")
            if _commutator_sum(x[i], c) != Z:
                bad.append(f"x{k}c+cx{k}=0")
            if _commutator_sum(X[i], C) != Z:
                bad.append(f"X{k}C+CX{k}=0")
            if _commutator_sum(X[i], c) != Z:
                bad.append(f"X{k}c+cX{k}=0")
            if _commutator_sum(x[i], C) != Z:
                bad.append(f"x{k}C+Cx{k}=0")
            for j in range(self.n):
                if j > i:
                    if _commutator_sum(x[i], x[j]) != Z:
                        bad.append(f"x{k}x{j + 1}+x{j + 1}x{k}=0")
                    if _commutator_sum(X[i], X[j]) != Z:
                        bad.append(f"X{k}X{j + 1}+X{j + 1}X{k}=0")
                rhs = I - C @ c if i == j else Z
                if _commutator_sum(x[i], X[j]) != rhs:
                    bad.append(f"x{k}X{j + 1}+X{j + 1}x{k}")
        return bad

    # --- action of arbitrary elements ---
    def double(self) -> DoubleHopf:
        if "D" not in self._cache:
            self._cache["D"] = DoubleHopf(self.n, self.field)
        return self._cache["D"]

    def basis_action(self, idx: int) -> Matrix:
        """Matrix of the normal-form basis vector ``C^j X_P c^l x_Q``."""
        key = ("b", idx)
        if key not in self._cache:
            j, P, l, Q = self.double().decode(idx)
            m = self.C if j else Matrix.identity(self.field, self.dim)
            for k in indices_of(P):
                m = m @ self.X[k - 1]
            if l:
                m = m @ self.c
            for k in indices_of(Q):
                m = m @ self.x[k - 1]
            self._cache[key] = m
        return self._cache[key]

    def act(self, a: Elem) -> Matrix:
        """Matrix of ``a``; elements of E(n) act through the lowercase copy."""
        out = _zero(self.field, self.dim)
        lower = isinstance(a.alg, EnHopf)
        half = 1 << self.n
        for idx, v in a.terms.items():
            if lower:
                i, pm = divmod(idx, half)
                idx = _encode(self.n, 0, 0, i, pm)
            out = out + self.basis_action(idx).scale(v)
        return out

    def gens(self) -> dict[str, Matrix]:
        out = {"C": self.C, "c": self.c}
        for k in range(self.n):
            out[f"X{k + 1}"] = self.X[k]
            out[f"x{k + 1}"] = self.x[k]
        return out

    def conjugate(self, P: Matrix) -> "ModuleRep":
        """Same module in the basis given by the columns of ``P``."""
        Pi = P.inverse()
        f = lambda m: Pi @ m @ P
        return ModuleRep(self.n, self.field, f(self.C), f(self.c),
                         tuple(map(f, self.X)), tuple(map(f, self.x)))


def from_gen_map(n: int, F: FieldSpec, g: Callable[[str], Matrix]) -> ModuleRep:
    return ModuleRep(n, F, g("C"), g("c"),
                     tuple(g(f"X{k}") for k in range(1, n + 1)),
                     tuple(g(f"x{k}") for k in range(1, n + 1)))


def one_dim_module(n: int, F: FieldSpec, sign: int) -> ModuleRep:
    """ε (sign=+1) or χ (sign=-1) as a 1-dimensional module."""
    s = Matrix(F, [[sign]])
    z = Matrix(F, [[0]])
    return ModuleRep(n, F, s, s, (z,) * n, (z,) * n)


def trivial_module(n: int, F: FieldSpec) -> ModuleRep:
    return one_dim_module(n, F, 1)


def chi_module(n: int, F: FieldSpec) -> ModuleRep:
    return one_dim_module(n, F, -1)


def regular_module(D: DoubleHopf) -> ModuleRep:
    """D acting on itself by left multiplication."""
    def left(g: Elem) -> Matrix:
        (gi, _), = g.terms.items()
        rows = [[D.field.zero] * D.dim for _ in range(D.dim)]
        for b in range(D.dim):
            for k, s in D._basis_mul(gi, b):
                rows[k][b] = rows[k][b] + s
        return Matrix(D.field, rows)
    gens = D.generators()
    return from_gen_map(D.n, D.field, lambda name: left(gens[name]))


def direct_sum(V: ModuleRep, W: ModuleRep) -> ModuleRep:
    F = V.field
    def blk(a, b):
        return Matrix.block([[a, Matrix.zeros(F, a.nrows, b.ncols)],
                             [Matrix.zeros(F, b.nrows, a.ncols), b]])
    gv, gw = V.gens(), W.gens()
    return from_gen_map(V.n, F, lambda k: blk(gv[k], gw[k]))


def tensor_modules(V: ModuleRep, W: ModuleRep) -> ModuleRep:
    """V ⊗ W via Δ of the double; ``v_i ⊗ w_j`` has index ``i·dim W + j``."""
    D = V.double()
    gens = D.generators()

    def g(name):
        out = Matrix.zeros(V.field, V.dim * W.dim, V.dim * W.dim)
        for (a, b), s in D.coproduct(gens[name]).terms.items():
            out = out + V.basis_action(a).kron(W.basis_action(b)).scale(s)
        return out
    return from_gen_map(V.n, V.field, g)


def subquotient(V: ModuleRep, sub: Sequence[Sequence], kill: Sequence[Sequence],
                reps: Sequence[Sequence]) -> ModuleRep:
    """The module W/K, where W = span(sub) and K = span(kill) ⊆ W are submodules,
    written in the basis given by the classes of ``reps``."""
    F = V.field
    basis = [list(r) for r in reps] + [list(k) for k in kill]
    B = Matrix(F, list(zip(*basis)))
    m = len(reps)

    def g(name):
        A = V.gens()[name]
        cols = []
        for r in reps:
            coords = solve(B, A.apply(r))
            if coords is None:
                raise ValueError("span is not a submodule")
            cols.append(coords[:m])
        return Matrix(F, list(zip(*cols)))
    for k in kill:
        for A in V.gens().values():
            if solve(Matrix(F, list(zip(*kill))), A.apply(k)) is None:
                raise ValueError("killed span is not a submodule")
    for s in sub:
        for A in V.gens().values():
            if solve(Matrix(F, list(zip(*sub))), A.apply(s)) is None:
                raise ValueError("span is not a submodule")
    return from_gen_map(V.n, F, g)


# --- extensions of χ by ε ---------------------------------------------------


@dataclass(frozen=True)
class ExtClass:
    """Coordinates ``(f(X_1), ..., f(X_n), f(x_1), ..., f(x_n))`` of a class in Ext¹(χ, ε)."""

    n: int
    field: FieldSpec
    a: tuple

    def __post_init__(self):
        if len(self.a) != 2 * self.n:
            raise ValueError(f"need {2 * self.n} coordinates")
        object.__setattr__(self, "a", tuple(self.field(v) for v in self.a))

    @classmethod
    def zero(cls, n, F):
        return cls(n, F, (0,) * (2 * n))

    @classmethod
    def unit(cls, n, F, k):
        return cls(n, F, tuple(1 if i == k else 0 for i in range(2 * n)))

    @classmethod
    def random(cls, n, F, rng):
        return cls(n, F, tuple(F.random(rng) for _ in range(2 * n)))

    def __add__(self, o: "ExtClass"):
        return ExtClass(self.n, self.field, tuple(u + v for u, v in zip(self.a, o.a)))

    def scale(self, lam):
        return ExtClass(self.n, self.field, tuple(lam * u for u in self.a))


def build_Va(a: ExtClass) -> ModuleRep:
    """C, c ↦ diag(1, -1); X_i ↦ [[0, a_i], [0, 0]]; x_i ↦ [[0, a_{n+i}], [0, 0]]."""
    n, F = a.n, a.field
    diag = Matrix(F, [[1, 0], [0, -1]])
    up = lambda v: Matrix(F, [[0, v], [0, 0]])
    return ModuleRep(n, F, diag, diag, tuple(up(a.a[i]) for i in range(n)),
                     tuple(up(a.a[n + i]) for i in range(n)))


def is_extension_shape(V: ModuleRep) -> bool:
    """v_1 spans a copy of ε and v_2 maps onto χ."""
    if V.dim != 2:
        return False
    for name, m in V.gens().items():
        if m[1, 0]:
            return False
        want = (1, -1) if name in ("C", "c") else (0, 0)
        if (m[0, 0], m[1, 1]) != tuple(V.field(w) for w in want):
            return False
    return True


def extract_ext_class(V: ModuleRep) -> ExtClass:
    """Read ``g·v_2 = f(g) v_1 + χ(g) v_2`` off the (1,2) entries."""
    if not is_extension_shape(V):
        raise ValueError("module is not an extension of χ by ε in this basis")
    return ExtClass(V.n, V.field, tuple(m[0, 1] for m in (*V.X, *V.x)))


def baer_sum_module(E1: ModuleRep, E2: ModuleRep) -> ModuleRep:
    """Pull back E1 ⊕ E2 along the diagonal of χ, push out along ε ⊕ ε → ε."""
    for E in (E1, E2):
        if not is_extension_shape(E):
            raise ValueError("Baer sum needs extensions of χ by ε")
    S = direct_sum(E1, E2)  # basis v1, v2, v1', v2'
    pull = [(1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 1)]
    return subquotient(S, pull, kill=[(1, 0, -1, 0)], reps=[(1, 0, 0, 0), (0, 1, 0, 1)])


def baer_sum(E1: ModuleRep, E2: ModuleRep) -> ExtClass:
    return extract_ext_class(baer_sum_module(E1, E2))


def scale_extension(E: ModuleRep, lam) -> ModuleRep:
    """The extension with inclusion rescaled to λ^{-1} i (λ ≠ 0)."""
    F = E.field
    lam = F(lam)
    if not lam:
        raise ValueError("λ must be nonzero; the zero class is the split extension")
    return E.conjugate(Matrix(F, [[F.one / lam, 0], [0, 1]]))


# --- Yetter-Drinfeld data ---------------------------------------------------


@dataclass(frozen=True)
class Coaction:
    """``ρ(v) = Σ_b M_b v ⊗ b`` over the PBW basis b of E(n)."""

    n: int
    field: FieldSpec
    mats: tuple

    @property
    def dim(self) -> int:
        return self.mats[0].nrows

    def rho(self, v: Sequence) -> dict:
        """{basis index of E(n): vector} with zero vectors dropped."""
        out = {}
        for b, m in enumerate(self.mats):
            w = m.apply(v)
            if any(w):
                out[b] = w
        return out

    def comodule_violations(self) -> list[str]:
        E = EnHopf(self.n, self.field)
        F, d = self.field, self.dim
        bad = []
        unit = _zero(F, d)
        for b, m in enumerate(self.mats):
            if E._basis_counit(b):
                unit = unit + m
        if unit != Matrix.identity(F, d):
            bad.append("counit")
        want: dict = {}
        for b, m in enumerate(self.mats):
            for (e1, e2), s in E._basis_coproduct(b):
                want[(e1, e2)] = want.get((e1, e2), _zero(F, d)) + m.scale(s)
        for e1, e2 in iproduct(range(E.dim), repeat=2):
            if self.mats[e1] @ self.mats[e2] != want.get((e1, e2), _zero(F, d)):
                bad.append(f"coassociativity at ({E.basis_label(e1)}, {E.basis_label(e2)})")
                break
        return bad


def coaction_from_double(V: ModuleRep) -> Coaction:
    """``ρ(v) = Σ_b b^*·v ⊗ b`` with b^* read inside the double."""
    D = V.double()
    dim_e = 2 << V.n
    return Coaction(V.n, V.field, tuple(V.act(dual_to_double_index(D, b)) for b in range(dim_e)))


def module_from_yd(n: int, F: FieldSpec, c: Matrix, x: Sequence[Matrix],
                   coaction: Coaction) -> ModuleRep:
    """Assemble the double action: C = 1^* - c^*, X_k = x_k^* - (c x_k)^*."""
    half = 1 << n
    M = coaction.mats
    return ModuleRep(n, F, M[0] - M[half], c,
                     tuple(M[1 << (k - 1)] - M[half + (1 << (k - 1))] for k in range(1, n + 1)),
                     tuple(x))


def yd_violations(V: ModuleRep, coaction: Coaction | None = None) -> list[str]:
    """Check ``ρ(h·v) = h_2·v_0 ⊗ h_3 v_1 S^{-1}(h_1)`` for the generators h of E(n)."""
    rho = coaction or coaction_from_double(V)
    bad = rho.comodule_violations()
    E = EnHopf(V.n, V.field)
    F, d = V.field, V.dim
    for name, h in E.generators().items():
        ah = V.act(h)
        d3 = E.delta_on_leg(E.coproduct(h), 0)
        rhs: dict = {}
        for (h1, h2, h3), s in d3.terms.items():
            tail = E.antipode_inverse(E.basis(h1))
            a2 = V.act(E.basis(h2))
            for b, m in enumerate(rho.mats):
                if m.is_zero():
                    continue
                prod = E.basis(h3) * E.basis(b) * tail
                for e, v in prod.terms.items():
                    rhs[e] = rhs.get(e, _zero(F, d)) + (a2 @ m).scale(s * v)
        for e in range(E.dim):
            if rho.mats[e] @ ah != rhs.get(e, _zero(F, d)):
                bad.append(f"compatibility for {name} at {E.basis_label(e)}")
                break
    return bad


def swap_matrix(F: FieldSpec, dv: int, dw: int) -> Matrix:
    """``v_i ⊗ w_j ↦ w_j ⊗ v_i``."""
    rows = [[0] * (dv * dw) for _ in range(dv * dw)]
    for i in range(dv):
        for j in range(dw):
            rows[j * dv + i][i * dw + j] = 1
    return Matrix(F, rows)


def braiding(V: ModuleRep, W: ModuleRep) -> Matrix:
    """``c_{V,W}(v ⊗ w) = w_0 ⊗ w_1·v`` as a matrix V⊗W → W⊗V."""
    rho = coaction_from_double(W)
    E = EnHopf(V.n, V.field)
    out = Matrix.zeros(V.field, V.dim * W.dim, V.dim * W.dim)
    for b, m in enumerate(rho.mats):
        if not m.is_zero():
            out = out + m.kron(V.act(E.basis(b)))
    return out @ swap_matrix(V.field, V.dim, W.dim)


def braiding_via_R(V: ModuleRep, W: ModuleRep, R: Tensor) -> Matrix:
    """``flip ∘ (R acting on V ⊗ W)``, for cross-checking :func:`braiding`."""
    out = Matrix.zeros(V.field, V.dim * W.dim, V.dim * W.dim)
    for (r1, r2), s in R.terms.items():
        out = out + W.basis_action(r2).kron(V.basis_action(r1)).scale(s)
    return out @ swap_matrix(V.field, V.dim, W.dim)


def squared_braiding(V: ModuleRep, W: ModuleRep) -> Matrix:
    return braiding(W, V) @ braiding(V, W)


def is_module_map(f: Matrix, V: ModuleRep, W: ModuleRep) -> bool:
    """``f`` (V → W) commutes with every generator."""
    gv, gw = V.gens(), W.gens()
    return all(f @ gv[k] == gw[k] @ f for k in gv)


# --- induced actions ----------------------------------------------------------


def gamma_auto(T: Matrix, V: ModuleRep, convention: str = "inverse") -> ModuleRep:
    """Action pulled back along the automorphism a_T of E(n), coaction pushed
    along a_T^{-1} (``convention="inverse"``, the one compatible with the
    Yetter-Drinfeld condition) or along a_T (``"direct"``)."""
    E = EnHopf(V.n, V.field)
    a = HopfAutomorphism(E, T)
    co = {"inverse": a.inverse(), "direct": a}[convention]
    rho = coaction_from_double(V)
    F, d = V.field, V.dim
    mats = [_zero(F, d) for _ in range(E.dim)]
    for b, m in enumerate(rho.mats):
        if m.is_zero():
            continue
        for e, v in co(E.basis(b)).terms.items():
            mats[e] = mats[e] + m.scale(v)
    new = Coaction(V.n, F, tuple(mats))
    return module_from_yd(V.n, F, V.act(a(E.c())),
                          [V.act(a.image_of_x(k)) for k in range(1, V.n + 1)], new)


def gamma_cocycle(sigma, V: ModuleRep) -> ModuleRep:
    """Same coaction; ``h·'v = Σ σ^{-1}(b' ⊗ h_1) σ(h_3 ⊗ b) M_{b'} (h_2·) M_b v``."""
    E = EnHopf(V.n, V.field)
    rho = coaction_from_double(V)
    F, d = V.field, V.dim
    nz = [(b, m) for b, m in enumerate(rho.mats) if not m.is_zero()]

    def new_action(h: Elem) -> Matrix:
        out = _zero(F, d)
        d3 = E.delta_on_leg(E.coproduct(h), 0)
        for (h1, h2, h3), s in d3.terms.items():
            a2 = V.act(E.basis(h2))
            for b, mb in nz:
                sv = sigma.value(h3, b)
                if not sv:
                    continue
                inner = a2 @ mb
                for b2, mb2 in nz:
                    si = sigma.inverse_value(b2, h1)
                    if si:
                        out = out + (mb2 @ inner).scale(s * sv * si)
        return out

    return module_from_yd(V.n, F, new_action(E.c()),
                          [new_action(E.x(k)) for k in range(1, V.n + 1)], rho)


def gamma_twist(J: Tensor, V: ModuleRep, J_inv: Tensor | None = None) -> ModuleRep:
    """Same action; ``ρ^J(v) = (J^{-1})²(J¹·v)_0 ⊗ (J^{-1})¹ (J¹·v)_1 J²``."""
    E = J.alg
    if J_inv is None:
        J_inv = E.tensor_inverse(J)
    rho = coaction_from_double(V)
    F, d = V.field, V.dim
    mats = [_zero(F, d) for _ in range(E.dim)]
    for (k1, k2), u in J_inv.terms.items():
        ak2 = V.act(E.basis(k2))
        for b, mb in enumerate(rho.mats):
            if mb.is_zero():
                continue
            left = E.basis(k1) * E.basis(b)
            for (j1, j2), w in J.terms.items():
                prod = left * E.basis(j2)
                if not prod:
                    continue
                m = ak2 @ mb @ V.act(E.basis(j1))
                for e, v in prod.terms.items():
                    mats[e] = mats[e] + m.scale(u * w * v)
    new = Coaction(V.n, F, tuple(mats))
    return module_from_yd(V.n, F, V.c, V.x, new)


def ext_matrix(action: Callable[[ModuleRep], ModuleRep], n: int, F: FieldSpec) -> Matrix:
    """Columns = coordinates of ``action(V_{e_k})`` for the unit classes e_k."""
    cols = [extract_ext_class(action(build_Va(ExtClass.unit(n, F, k)))).a for k in range(2 * n)]
    return Matrix(F, list(zip(*cols)))
