"""The Drinfeld double D(E(n)) by generators C, X_i, c, x_i.

Normal-form basis ``C^j X_P c^l x_Q``. Products are computed by rewriting
with the defining relations: C and c are central up to sign, X's and x's
anticommute among themselves, and ``x_i X_j = -X_j x_i + δ_ij (1 - Cc)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .algebra import Elem, Functional, HopfAlgebra, Tensor
from .en import EnHopf, _sign_S_mask, indices_of, mask_of, merge_sign, popcount, submasks
from .scalars import FieldSpec, Matrix, kernel_basis


def _encode(n: int, j: int, P: int, l: int, Q: int) -> int:
    return ((((j << n) | P) << 1 | l) << n) | Q


def _decode(n: int, idx: int) -> tuple[int, int, int, int]:
    full = (1 << n) - 1
    Q = idx & full
    idx >>= n
    l = idx & 1
    idx >>= 1
    P = idx & full
    j = idx >> n
    return j, P, l, Q


def _add(out: dict, key, v):
    w = out.get(key, 0) + v
    if w:
        out[key] = w
    else:
        out.pop(key, None)


@lru_cache(maxsize=None)
def _lmul_gen(g: tuple, mono: tuple) -> tuple:
    """Left multiplication of a normal-form monomial by one generator."""
    j, P, l, Q = mono
    kind = g[0]
    if kind == "C":
        return (((j ^ 1, P, l, Q), 1),)
    if kind == "X":
        bit = 1 << (g[1] - 1)
        if P & bit:
            return ()
        # X_i C^j = (-1)^j C^j X_i, then sort X_i into X_P
        s = merge_sign(bit, P) * (-1 if j else 1)
        return (((j, P | bit, l, Q), s),)
    if kind == "c":
        # c commutes with C and anticommutes with each X
        s = -1 if popcount(P) & 1 else 1
        return (((j, P, l ^ 1, Q), s),)
    if kind == "x":
        i = g[1]
        s = -1 if j else 1
        out: dict = {}
        for (j2, P2, l2, Q2), t in _x_past_X(i, P, l, Q):
            _add(out, (j ^ j2, P2, l2, Q2), s * t)
        return tuple(out.items())
    raise ValueError(g)


@lru_cache(maxsize=None)
def _x_past_X(i: int, P: int, l: int, Q: int) -> tuple:
    """Normal form of ``x_i X_P c^l x_Q``."""
    if not P:
        bit = 1 << (i - 1)
        if Q & bit:
            return ()
        s = merge_sign(bit, Q) * (-1 if l else 1)
        return (((0, 0, l, Q | bit), s),)
    p = indices_of(P)[0]
    rest = P & ~(1 << (p - 1))
    out: dict = {}
    # x_i X_p Y = -X_p (x_i Y) + δ_ip (1 - Cc) Y
    for mono, t in _x_past_X(i, rest, l, Q):
        for m2, u in _lmul_gen(("X", p), mono):
            _add(out, m2, -t * u)
    if i == p:
        y = (0, rest, l, Q)
        _add(out, y, 1)
        for m1, u in _lmul_gen(("c",), y):
            for m2, v in _lmul_gen(("C",), m1):
                _add(out, m2, -u * v)
    return tuple(out.items())


def _word(mono: tuple) -> list[tuple]:
    j, P, l, Q = mono
    return ([("C",)] * j + [("X", k) for k in indices_of(P)]
            + [("c",)] * l + [("x", k) for k in indices_of(Q)])


@lru_cache(maxsize=None)
def _mono_mul(a: tuple, b: tuple) -> tuple:
    cur = {b: 1}
    for g in reversed(_word(a)):
        nxt: dict = {}
        for mono, t in cur.items():
            for m2, u in _lmul_gen(g, mono):
                _add(nxt, m2, t * u)
        cur = nxt
    return tuple(cur.items())


@lru_cache(maxsize=None)
def _coproduct_table(n: int) -> tuple:
    out = []
    for idx in range(1 << (2 * n + 2)):
        j, P, l, Q = _decode(n, idx)
        terms = []
        # Δ(C^j X_P) and Δ(c^l x_Q) both follow the E(n) formula; their
        # product is already in normal form leg by leg.
        for fm in submasks(P):
            s1 = -1 if _sign_S_mask(fm, P) & 1 else 1
            for gm in submasks(Q):
                s2 = -1 if _sign_S_mask(gm, Q) & 1 else 1
                left = _encode(n, j, fm, l, gm)
                right = _encode(n, (j + popcount(fm)) & 1, P & ~fm,
                                (l + popcount(gm)) & 1, Q & ~gm)
                terms.append(((left, right), s1 * s2))
        out.append(tuple(terms))
    return tuple(out)


class DoubleHopf(HopfAlgebra):
    """D(E(n)) with basis index ``((j·2^n + P)·2 + l)·2^n + Q`` for ``C^j X_P c^l x_Q``."""

    name = "D"

    def __init__(self, n: int, field: FieldSpec):
        if n < 1:
            raise ValueError("D(E(n)) needs n >= 1")
        self.n = n
        self.field = field
        self.dim = 1 << (2 * n + 2)
        self._cop = _coproduct_table(n)
        self._mul_cache: dict = {}

    def decode(self, idx: int) -> tuple[int, int, int, int]:
        return _decode(self.n, idx)

    def index(self, j: int = 0, P: Iterable[int] = (), l: int = 0, Q: Iterable[int] = ()) -> int:
        pm, qm = mask_of(P), mask_of(Q)
        if (pm | qm) >> self.n:
            raise ValueError(f"index out of range for n={self.n}")
        return _encode(self.n, j & 1, pm, l & 1, qm)

    def b(self, j=0, P=(), l=0, Q=()) -> Elem:
        return self.basis(self.index(j, P, l, Q))

    def _basis_mul(self, a, b):
        key = (a, b)
        r = self._mul_cache.get(key)
        if r is None:
            n = self.n
            r = tuple((_encode(n, *m), s) for m, s in _mono_mul(_decode(n, a), _decode(n, b)))
            self._mul_cache[key] = r
        return r

    def _basis_coproduct(self, i):
        return self._cop[i]

    def _basis_counit(self, i):
        j, P, l, Q = _decode(self.n, i)
        return 1 if not P and not Q else 0

    def _basis_antipode(self, i):
        # anti-multiplicative: S(C)=C, S(X_k)=C X_k, S(c)=c, S(x_k)=c x_k
        n = self.n
        images = []
        for g in _word(_decode(n, i)):
            if g[0] == "C":
                images.append(self.C())
            elif g[0] == "c":
                images.append(self.c())
            elif g[0] == "X":
                images.append(self.C() * self.X(g[1]))
            else:
                images.append(self.c() * self.x(g[1]))
        out = self.one()
        for im in reversed(images):
            out = out * im
        return tuple(out.terms.items())

    def C(self) -> Elem:
        return self.b(j=1)

    def c(self) -> Elem:
        return self.b(l=1)

    def X(self, k: int) -> Elem:
        return self.b(P=[k])

    def x(self, k: int) -> Elem:
        return self.b(Q=[k])

    def generators(self):
        gens = {"C": self.C(), "c": self.c()}
        for k in range(1, self.n + 1):
            gens[f"X{k}"] = self.X(k)
            gens[f"x{k}"] = self.x(k)
        return gens

    def basis_label(self, idx):
        j, P, l, Q = _decode(self.n, idx)
        s = ("C" if j else "") + ("X" + "".join(map(str, indices_of(P))) if P else "")
        s += ("c" if l else "") + ("x" + "".join(map(str, indices_of(Q))) if Q else "")
        return s or "1"

    def en(self) -> EnHopf:
        return EnHopf(self.n, self.field)

    def from_en(self, a: Elem) -> Elem:
        """Image of an element of the lowercase copy of E(n)."""
        half = 1 << self.n
        return self.elem({self.index(0, (), i // half, indices_of(i % half)): v for i, v in a.terms.items()})

    def from_en_upper(self, a: Elem) -> Elem:
        """Image under c ↦ C, x_k ↦ X_k of an element of E(n)."""
        half = 1 << self.n
        return self.elem({self.index(i // half, indices_of(i % half)): v for i, v in a.terms.items()})


def dual_to_double(D: DoubleHopf, i: int, P: Iterable[int] = ()) -> Elem:
    """``(c^i x_P)^* = ½ (-1)^{|P|(|P|-1)/2 + i|P|} (X_P + (-1)^i C X_P)``."""
    P = list(P)
    r = len(P)
    sign = -1 if (r * (r - 1) // 2 + i * r) & 1 else 1
    XP = D.b(P=P)
    half = D.field(1) / 2
    return (XP + D.C() * XP * (-1 if i else 1)) * (half * sign)


def dual_to_double_index(D: DoubleHopf, en_index: int) -> Elem:
    i, pm = divmod(en_index, 1 << D.n)
    return dual_to_double(D, i, indices_of(pm))


def upper_as_functional(D: DoubleHopf, a: Elem) -> Functional:
    """Read an element of the subalgebra generated by C and X_k as a functional
    on E(n): C ↦ 1* - c*, X_k ↦ x_k* - (c x_k)*, products are convolutions."""
    E = D.en()
    C_f = E.dual_basis(0) - E.dual_basis(1)
    X_f = [E.dual_basis(0, [k]) - E.dual_basis(1, [k]) for k in range(1, D.n + 1)]
    unit = E.dual_basis(0) + E.dual_basis(1)  # ε
    total = Functional(E, [0] * E.dim)
    for idx, v in a.terms.items():
        j, P, l, Q = D.decode(idx)
        if l or Q:
            raise ValueError("element is not in the C, X subalgebra")
        f = C_f if j else unit
        for k in indices_of(P):
            f = f.convolve(X_f[k - 1])
        total = total + f.scale(v)
    return total


def canonical_R(D: DoubleHopf) -> Tensor:
    """``R = Σ_{i,P} c^i x_P ⊗ (c^i x_P)^*``."""
    out = Tensor(D, 2, {})
    E = D.en()
    for idx in range(E.dim):
        out = out + D.tensor(D.from_en(E.basis(idx)), dual_to_double_index(D, idx))
    return out


@dataclass(frozen=True)
class Character:
    """A one-dimensional representation, given by its values on C, c, X_k, x_k."""

    C: object
    c: object
    X: tuple
    x: tuple

    def __call__(self, a: Elem):
        D = a.alg
        total = D.field.zero
        for idx, v in a.terms.items():
            j, P, l, Q = D.decode(idx)
            val = D.field.one
            if j:
                val = val * self.C
            for k in indices_of(P):
                val = val * self.X[k - 1]
            if l:
                val = val * self.c
            for k in indices_of(Q):
                val = val * self.x[k - 1]
            total = total + val * v
        return total

    def as_functional(self, D: DoubleHopf) -> list:
        return [self(D.basis(i)) for i in range(D.dim)]


def one_dim_reps(D: DoubleHopf) -> list[Character]:
    """All characters of D(E(n)), found by solving the relations in dimension 1.

    Nilpotent generators (X_k^2 = x_k^2 = 0) must map to 0; C and c map to
    square roots of 1; the remaining relations are checked by substitution.
    """
    from .modrep import ModuleRep  # local: modrep imports this module

    F = D.field
    zeros = tuple(F.zero for _ in range(D.n))
    found = []
    for vC in (F.one, -F.one):
        for vc in (F.one, -F.one):
            one = lambda v: Matrix(F, [[v]])
            try:
                ModuleRep(D.n, F, one(vC), one(vc), tuple(one(0) for _ in zeros), tuple(one(0) for _ in zeros))
            except ValueError:
                continue
            found.append(Character(vC, vc, zeros, zeros))
    # trivial character first
    found.sort(key=lambda ch: ch.C != F.one)
    return found


def skew_primitives(D: DoubleHopf, gamma: Character, eta: Character) -> list[tuple]:
    """Basis of ``{ξ ∈ D* : ξ(ab) = γ(a) ξ(b) + ξ(a) η(b)}``.

    It suffices to impose the rule for ``a`` a generator and ``b`` a basis
    vector (plus ξ(1) = 0), since γ and η are multiplicative.
    """
    F = D.field
    g = gamma.as_functional(D)
    h = eta.as_functional(D)
    rows = []
    unit = [F.zero] * D.dim
    unit[0] = F.one
    rows.append(unit)
    gens = list(D.generators().values())
    for a in gens:
        (ai, _), = a.terms.items()
        for bi in range(D.dim):
            row = [F.zero] * D.dim
            for k, s in D._basis_mul(ai, bi):
                row[k] = row[k] + s
            row[bi] = row[bi] - g[ai]
            row[ai] = row[ai] - h[bi]
            rows.append(row)
    return kernel_basis(Matrix(F, rows))


def check_skew_primitive(D: DoubleHopf, xi: Iterable, gamma: Character, eta: Character) -> bool:
    """Full check of ``Δ(ξ) = γ⊗ξ + ξ⊗η`` on all basis pairs."""
    xi = list(xi)
    g = gamma.as_functional(D)
    h = eta.as_functional(D)
    for a in range(D.dim):
        for b in range(D.dim):
            lhs = sum((s * xi[k] for k, s in D._basis_mul(a, b)), D.field.zero)
            if lhs != g[a] * xi[b] + xi[a] * h[b]:
                return False
    return True
