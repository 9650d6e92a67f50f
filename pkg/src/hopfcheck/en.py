"""The Hopf algebra E(n) on its PBW basis ``c^i x_P``.

Basis index = ``i * 2**n + mask(P)`` where bit ``k-1`` of the mask stands
for ``x_k``. Products, coproducts and the antipode all have integer
structure constants and are tabulated once per ``n``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .algebra import Elem, Functional, HopfAlgebra
from .scalars import FieldSpec, Matrix, det


def mask_of(P: Iterable[int]) -> int:
    m = 0
    for k in P:
        if k < 1:
            raise ValueError("generator indices are 1-based")
        m |= 1 << (k - 1)
    return m


def indices_of(mask: int) -> list[int]:
    out, k = [], 1
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def merge_sign(pm: int, qm: int) -> int:
    """Sign of ``x_P x_Q = ±x_{P∪Q}`` for disjoint P, Q: (-1)^#{p > q}."""
    inv = 0
    for q in indices_of(qm):
        inv += popcount(pm >> q)
    return -1 if inv & 1 else 1


def sign_S(F: Iterable[int], P: Iterable[int]) -> int:
    """``S(F, P) = (j_1 + ... + j_r) - r(r+1)/2`` where ``j_k`` are the
    positions (1-based) of the elements of F inside the sorted P."""
    P = sorted(P)
    F = sorted(F)
    if not set(F) <= set(P):
        raise ValueError(f"{F} is not a subset of {P}")
    r = len(F)
    return sum(P.index(f) + 1 for f in F) - r * (r + 1) // 2


def _sign_S_mask(fm: int, pm: int) -> int:
    # number of (f in F, p in P\F) with p < f
    rest = pm & ~fm
    return sum(popcount(rest & ((1 << (f - 1)) - 1)) for f in indices_of(fm))


def submasks(mask: int):
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


@lru_cache(maxsize=None)
def _tables(n: int):
    half = 1 << n
    dim = 2 * half
    mul = [[()] * dim for _ in range(dim)]
    for a in range(dim):
        i, pm = divmod(a, half)
        for b in range(dim):
            j, qm = divmod(b, half)
            if pm & qm:
                continue
            # c^i x_P c^j x_Q = (-1)^{j|P|} c^{i+j} x_P x_Q
            s = merge_sign(pm, qm)
            if j and popcount(pm) & 1:
                s = -s
            mul[a][b] = ((((i + j) & 1) * half + (pm | qm), s),)
    cop = []
    for a in range(dim):
        i, pm = divmod(a, half)
        terms = []
        for fm in submasks(pm):
            s = -1 if _sign_S_mask(fm, pm) & 1 else 1
            left = i * half + fm
            right = ((i + popcount(fm)) & 1) * half + (pm & ~fm)
            terms.append(((left, right), s))
        cop.append(tuple(terms))
    return dim, tuple(tuple(r) for r in mul), tuple(cop)


class EnHopf(HopfAlgebra):
    """E(n): generated by a grouplike ``c`` and (1, c)-skew-primitive ``x_1..x_n``."""

    name = "E"

    def __init__(self, n: int, field: FieldSpec):
        if n < 1:
            raise ValueError("E(n) needs n >= 1")
        self.n = n
        self.field = field
        self.dim, self._mul, self._cop = _tables(n)
        self._anti = _antipode_table(n)

    def _basis_mul(self, i, j):
        return self._mul[i][j]

    def _basis_coproduct(self, i):
        return self._cop[i]

    def _basis_counit(self, i):
        # ε(c) = 1, ε(x_k) = 0
        return 1 if i & ((1 << self.n) - 1) == 0 else 0

    def _basis_antipode(self, i):
        return self._anti[i]

    # --- basis helpers ---
    def index(self, i: int, P: Iterable[int] = ()) -> int:
        m = mask_of(P)
        if m >> self.n:
            raise ValueError(f"index out of range for n={self.n}")
        return (i & 1) * (1 << self.n) + m

    def decode(self, idx: int) -> tuple[int, int]:
        return divmod(idx, 1 << self.n)

    def b(self, i: int, P: Iterable[int] = ()) -> Elem:
        """The basis element ``c^i x_P``."""
        return self.basis(self.index(i, P))

    def c(self) -> Elem:
        return self.b(1)

    def x(self, k: int) -> Elem:
        return self.b(0, [k])

    def generators(self):
        gens = {"c": self.c()}
        for k in range(1, self.n + 1):
            gens[f"x{k}"] = self.x(k)
        return gens

    def basis_label(self, idx):
        i, pm = self.decode(idx)
        xs = "".join(str(k) for k in indices_of(pm))
        s = ("c" if i else "") + (f"x{xs}" if xs else "")
        return s or "1"

    def dual_basis(self, i: int, P: Iterable[int] = ()) -> Functional:
        return Functional.dual_basis(self, self.index(i, P))

    def automorphism(self, T: Matrix) -> "HopfAutomorphism":
        return HopfAutomorphism(self, T)


@lru_cache(maxsize=None)
def _antipode_table(n: int):
    dim, mul, _ = _tables(n)
    half = 1 << n

    def times(u: dict, b: int) -> dict:
        out: dict = {}
        for a, x in u.items():
            for k, s in mul[a][b]:
                out[k] = out.get(k, 0) + s * x
        return {k: v for k, v in out.items() if v}

    def s_gen(k: int) -> int:  # S(x_k) = c x_k
        return half + (1 << (k - 1))

    table = []
    for a in range(dim):
        i, pm = divmod(a, half)
        # S(c^i x_P) = S(x_{p_r}) ... S(x_{p_1}) c^i
        u = {0: 1}
        for k in reversed(indices_of(pm)):
            u = times(u, s_gen(k))
        if i:
            u = times(u, half)
        table.append(tuple(sorted(u.items())))
    return tuple(table)


class HopfAutomorphism:
    """``c ↦ c``, ``x_i ↦ Σ_j t_ji x_j`` for invertible ``T``."""

    def __init__(self, alg: EnHopf, T: Matrix):
        if T.shape != (alg.n, alg.n):
            raise ValueError(f"need an {alg.n}x{alg.n} matrix")
        if not det(T):
            raise ValueError("singular matrix does not define an automorphism")
        self.alg = alg
        self.T = T
        self._images = {}

    def image_of_x(self, i: int) -> Elem:
        alg = self.alg
        return alg.elem({alg.index(0, [j]): self.T[j - 1, i - 1] for j in range(1, alg.n + 1)})

    def _basis_image(self, idx: int) -> Elem:
        if idx not in self._images:
            alg = self.alg
            i, pm = alg.decode(idx)
            out = alg.c() if i else alg.one()
            for k in indices_of(pm):
                out = out * self.image_of_x(k)
            self._images[idx] = out
        return self._images[idx]

    def __call__(self, a: Elem) -> Elem:
        out = self.alg.zero()
        for idx, v in a.terms.items():
            out = out + self._basis_image(idx) * v
        return out

    def compose(self, other: "HopfAutomorphism") -> "HopfAutomorphism":
        """``self ∘ other``; equals the automorphism of ``self.T @ other.T``."""
        return HopfAutomorphism(self.alg, self.T @ other.T)

    def inverse(self) -> "HopfAutomorphism":
        return HopfAutomorphism(self.alg, self.T.inverse())

    def matrix(self) -> Matrix:
        """Matrix of the linear map on the PBW basis (column = image of a basis vector)."""
        alg = self.alg
        cols = [self._basis_image(i) for i in range(alg.dim)]
        return Matrix(alg.field, [[cols[j].coeff(i) for j in range(alg.dim)] for i in range(alg.dim)])


def check_automorphism(f: HopfAutomorphism, elems: Iterable[Elem]):
    """Counterexample dict if ``f`` fails to commute with Δ, ε or S (or to be
    multiplicative) on ``elems``, else None."""
    alg = f.alg
    elems = list(elems)
    for a in elems:
        fa = f(a)
        lhs = alg.coproduct(fa)
        rhs = alg.leg_map(alg.leg_map(alg.coproduct(a), 0, f), 1, f)
        if lhs != rhs:
            return {"check": "coproduct", "elem": repr(a)}
        if alg.counit(fa) != alg.counit(a):
            return {"check": "counit", "elem": repr(a)}
        if alg.antipode(fa) != f(alg.antipode(a)):
            return {"check": "antipode", "elem": repr(a)}
        for b in elems:
            if f(a * b) != fa * f(b):
                return {"check": "multiplicative", "elems": [repr(a), repr(b)]}
    return None
