"""Sparse elements and tensors over a finite-dimensional Hopf algebra.

A concrete algebra supplies integer structure constants on a fixed basis
(product, coproduct, counit, antipode on basis indices). Everything else
(elements, multi-leg tensors, functionals, axiom checks) is generic and
lives here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct
from typing import Callable, Iterable, Sequence

from .scalars import GF, FieldSpec, Matrix, inverse, solve

Terms = tuple  # tuple of (index, int coefficient)


class HopfAlgebra:
    """Base class. Subclasses set ``n``, ``field``, ``dim`` and implement the
    ``_basis_*`` methods returning integer (or Fraction) coefficients."""

    n: int
    field: FieldSpec
    dim: int
    name = "H"

    # --- structure constants (override) ---
    def _basis_mul(self, i: int, j: int) -> Terms:
        raise NotImplementedError

    def _basis_coproduct(self, i: int) -> tuple:
        raise NotImplementedError

    def _basis_counit(self, i: int) -> int:
        raise NotImplementedError

    def _basis_antipode(self, i: int) -> Terms:
        raise NotImplementedError

    def _one_terms(self) -> Terms:
        return ((0, 1),)

    def basis_label(self, i: int) -> str:
        return f"e{i}"

    def generators(self) -> dict[str, "Elem"]:
        raise NotImplementedError

    def same(self, other: "HopfAlgebra") -> bool:
        return type(self) is type(other) and self.n == other.n and self.field == other.field

    # --- element constructors ---
    def elem(self, terms: dict | Iterable = ()) -> "Elem":
        return Elem(self, terms)

    def basis(self, i: int) -> "Elem":
        return Elem(self, {i: self.field.one})

    def zero(self) -> "Elem":
        return Elem(self, {})

    def one(self) -> "Elem":
        return Elem(self, {i: self.field(c) for i, c in self._one_terms()})

    def random_elem(self, rng, nterms: int = 3) -> "Elem":
        return Elem(self, {rng.randrange(self.dim): self.field.random(rng) for _ in range(nterms)})

    # --- linear structure maps ---
    def mul(self, a: "Elem", b: "Elem") -> "Elem":
        out: dict = {}
        for i, x in a.terms.items():
            for j, y in b.terms.items():
                xy = x * y
                for k, s in self._basis_mul(i, j):
                    out[k] = out.get(k, 0) + s * xy
        return Elem(self, out)

    def coproduct(self, a: "Elem") -> "Tensor":
        out: dict = {}
        for i, x in a.terms.items():
            for key, s in self._basis_coproduct(i):
                out[key] = out.get(key, 0) + s * x
        return Tensor(self, 2, out)

    def counit(self, a: "Elem"):
        total = self.field.zero
        for i, x in a.terms.items():
            e = self._basis_counit(i)
            if e:
                total = total + e * x
        return total

    def antipode(self, a: "Elem") -> "Elem":
        return self._apply_basis_map(a, self._basis_antipode)

    @cached_property
    def _antipode_inverse_table(self) -> list:
        m = Matrix(self.field, [[0] * self.dim for _ in range(self.dim)])
        rows = [list(r) for r in m.rows]
        for i in range(self.dim):
            for k, s in self._basis_antipode(i):
                rows[k][i] = rows[k][i] + s
        inv = inverse(Matrix(self.field, rows))
        return [tuple((k, inv[k, i]) for k in range(self.dim) if inv[k, i]) for i in range(self.dim)]

    def antipode_inverse(self, a: "Elem") -> "Elem":
        return self._apply_basis_map(a, lambda i: self._antipode_inverse_table[i])

    def _apply_basis_map(self, a: "Elem", f: Callable[[int], Terms]) -> "Elem":
        out: dict = {}
        for i, x in a.terms.items():
            for k, s in f(i):
                out[k] = out.get(k, 0) + s * x
        return Elem(self, out)

    def tensor_mul(self, t: "Tensor", u: "Tensor") -> "Tensor":
        if t.legs != u.legs:
            raise ValueError("tensors with different numbers of legs")
        out: dict = {}
        bm = self._basis_mul
        for k1, x in t.terms.items():
            for k2, y in u.terms.items():
                xy = x * y
                per_leg = [bm(i, j) for i, j in zip(k1, k2)]
                if any(not p for p in per_leg):
                    continue
                for combo in iproduct(*per_leg):
                    key = tuple(c[0] for c in combo)
                    s = 1
                    for c in combo:
                        s = s * c[1]
                    out[key] = out.get(key, 0) + s * xy
        return Tensor(self, t.legs, out)

    # --- tensor helpers ---
    def tensor(self, *elems: "Elem") -> "Tensor":
        out: dict = {}
        for combo in iproduct(*[e.terms.items() for e in elems]):
            key = tuple(c[0] for c in combo)
            s = self.field.one
            for c in combo:
                s = s * c[1]
            out[key] = out.get(key, 0) + s
        return Tensor(self, len(elems), out)

    def one_tensor(self, legs: int = 2) -> "Tensor":
        return self.tensor(*([self.one()] * legs))

    def leg_map(self, t: "Tensor", leg: int, f: Callable[["Elem"], "Tensor | Elem"]) -> "Tensor":
        """Apply a linear map (to an element or to a tensor) on one leg."""
        out: dict = {}
        cache: dict = {}
        extra = 0
        for key, x in t.terms.items():
            if key[leg] not in cache:
                cache[key[leg]] = f(self.basis(key[leg]))
            img = cache[key[leg]]
            if isinstance(img, Tensor):
                extra = img.legs - 1
                items = img.terms.items()
            else:
                items = (((k,), v) for k, v in img.terms.items())
            for sub, y in items:
                nk = key[:leg] + sub + key[leg + 1:]
                out[nk] = out.get(nk, 0) + x * y
        return Tensor(self, t.legs + extra, out)

    def delta_on_leg(self, t: "Tensor", leg: int) -> "Tensor":
        return self.leg_map(t, leg, self.coproduct)

    def embed(self, t: "Tensor", positions: Sequence[int], legs: int) -> "Tensor":
        """Place the legs of ``t`` at ``positions`` of a ``legs``-leg tensor, units elsewhere."""
        one = self.one()
        out: dict = {}
        others = [p for p in range(legs) if p not in positions]
        for key, x in t.terms.items():
            for combo in iproduct(*[one.terms.items() for _ in others]):
                nk = [None] * legs
                for p, k in zip(positions, key):
                    nk[p] = k
                s = x
                for p, (k, c) in zip(others, combo):
                    nk[p] = k
                    s = s * c
                nk = tuple(nk)
                out[nk] = out.get(nk, 0) + s
        return Tensor(self, legs, out)

    def tensor_inverse(self, t: "Tensor") -> "Tensor":
        """Inverse of ``t`` in the tensor-power algebra, by exact linear solve of
        ``t * X = 1``; raises ``ZeroDivisionError`` if ``t`` is not invertible."""
        legs = t.legs
        keys = list(iproduct(range(self.dim), repeat=legs))
        index = {k: i for i, k in enumerate(keys)}
        N = len(keys)
        zero = self.field.zero
        cols = []
        for k in keys:
            img = self.tensor_mul(t, Tensor(self, legs, {k: self.field.one}))
            col = [zero] * N
            for kk, v in img.terms.items():
                col[index[kk]] = v
            cols.append(col)
        m = Matrix(self.field, list(zip(*cols)))
        rhs = [zero] * N
        for kk, v in self.one_tensor(legs).terms.items():
            rhs[index[kk]] = v
        x = solve(m, rhs)
        if x is None:
            raise ZeroDivisionError("tensor is not invertible")
        inv = Tensor(self, legs, {keys[i]: v for i, v in enumerate(x) if v})
        if self.tensor_mul(inv, t) != self.one_tensor(legs):
            raise ZeroDivisionError("right inverse is not a left inverse")
        return inv


def _clean(terms, field: FieldSpec) -> dict:
    out = {}
    items = terms.items() if isinstance(terms, dict) else terms
    for k, v in items:
        v = field(v) if not _is_scalar_of(v, field) else v
        if v:
            out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if v}


def _is_scalar_of(v, field: FieldSpec) -> bool:
    return isinstance(v, GF) if field.is_finite else isinstance(v, Fraction)


class Elem:
    """Sparse linear combination of basis vectors of ``alg``."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: HopfAlgebra, terms=()):
        self.alg = alg
        self.terms = _clean(terms, alg.field)

    def _check(self, o: "Elem"):
        if not self.alg.same(o.alg):
            raise ValueError("elements of different algebras (rank or field mismatch)")

    def __add__(self, o):
        if not isinstance(o, Elem):
            return self + self.alg.one() * o
        self._check(o)
        t = dict(self.terms)
        for k, v in o.terms.items():
            t[k] = t.get(k, 0) + v
        return Elem(self.alg, t)

    def __radd__(self, o):
        return self + o

    def __neg__(self):
        return Elem(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, Elem):
            self._check(o)
            return self.alg.mul(self, o)
        s = self.alg.field(o)
        return Elem(self.alg, {k: v * s for k, v in self.terms.items()})

    def __rmul__(self, o):
        s = self.alg.field(o)
        return Elem(self.alg, {k: s * v for k, v in self.terms.items()})

    def __pow__(self, e: int):
        out = self.alg.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, Elem):
            return self.alg.same(o.alg) and self.terms == o.terms
        if isinstance(o, int) and o == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, i: int):
        return self.terms.get(i, self.alg.field.zero)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            v = self.terms[k]
            lab = self.alg.basis_label(k)
            parts.append(f"({v})*{lab}")
        return " + ".join(parts)


class Tensor:
    """Sparse element of ``alg`` tensored with itself ``legs`` times."""

    __slots__ = ("alg", "legs", "terms")

    def __init__(self, alg: HopfAlgebra, legs: int, terms=()):
        self.alg = alg
        self.legs = legs
        self.terms = _clean(terms, alg.field)

    def __add__(self, o: "Tensor"):
        t = dict(self.terms)
        for k, v in o.terms.items():
            t[k] = t.get(k, 0) + v
        return Tensor(self.alg, self.legs, t)

    def __neg__(self):
        return Tensor(self.alg, self.legs, {k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, Tensor):
            if not self.alg.same(o.alg):
                raise ValueError("tensors over different algebras")
            return self.alg.tensor_mul(self, o)
        s = self.alg.field(o)
        return Tensor(self.alg, self.legs, {k: v * s for k, v in self.terms.items()})

    def __rmul__(self, o):
        return self * o

    def __eq__(self, o):
        if not isinstance(o, Tensor):
            return NotImplemented
        return self.alg.same(o.alg) and self.legs == o.legs and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __bool__(self):
        return bool(self.terms)

    def permute(self, perm: Sequence[int]) -> "Tensor":
        """Leg ``i`` of the result is leg ``perm[i]`` of ``self``."""
        return Tensor(self.alg, self.legs, {tuple(k[p] for p in perm): v for k, v in self.terms.items()})

    def flip(self) -> "Tensor":
        return self.permute((1, 0))

    def coeff(self, *key):
        return self.terms.get(tuple(key), self.alg.field.zero)

    def __repr__(self):
        if not self.terms:
            return "0"
        lab = self.alg.basis_label
        return " + ".join(
            f"({v})*" + "⊗".join(lab(i) for i in k) for k, v in sorted(self.terms.items())
        )


class Functional:
    """A linear functional on ``alg`` stored densely by its values on the basis."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: HopfAlgebra, coeffs: Sequence):
        if len(coeffs) != alg.dim:
            raise ValueError(f"functional needs {alg.dim} values, got {len(coeffs)}")
        self.alg = alg
        self.coeffs = tuple(alg.field(c) for c in coeffs)

    @classmethod
    def dual_basis(cls, alg: HopfAlgebra, i: int) -> "Functional":
        return cls(alg, [1 if k == i else 0 for k in range(alg.dim)])

    def __call__(self, a: Elem):
        total = self.alg.field.zero
        for k, v in a.terms.items():
            total = total + self.coeffs[k] * v
        return total

    def __add__(self, o):
        return Functional(self.alg, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    def __sub__(self, o):
        return Functional(self.alg, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def scale(self, s):
        return Functional(self.alg, [s * a for a in self.coeffs])

    def convolve(self, o: "Functional") -> "Functional":
        """``(f * g)(h) = f(h_1) g(h_2)``."""
        vals = []
        for i in range(self.alg.dim):
            total = self.alg.field.zero
            for (a, b), s in self.alg._basis_coproduct(i):
                total = total + s * self.coeffs[a] * o.coeffs[b]
            vals.append(total)
        return Functional(self.alg, vals)

    def __eq__(self, o):
        return isinstance(o, Functional) and self.alg.same(o.alg) and self.coeffs == o.coeffs

    def __repr__(self):
        return "Functional(%s)" % list(self.coeffs)


class DualHopfAlgebra(HopfAlgebra):
    """The dual Hopf algebra ``H*`` on the dual basis of ``H``: the product is
    the convolution and ``Δ(f)(a⊗b) = f(ab)``."""

    name = "H*"

    def __init__(self, base: HopfAlgebra):
        self.base = base
        self.n = base.n
        self.field = base.field
        self.dim = base.dim

    def same(self, other):
        return isinstance(other, DualHopfAlgebra) and self.base.same(other.base)

    @cached_property
    def _mul_table(self) -> dict:
        table: dict = {}
        for k in range(self.dim):
            for (a, b), s in self.base._basis_coproduct(k):
                table.setdefault((a, b), []).append((k, s))
        return {key: tuple(v) for key, v in table.items()}

    def _basis_mul(self, i, j):
        return self._mul_table.get((i, j), ())

    @cached_property
    def _coproduct_table(self) -> list:
        table = [[] for _ in range(self.dim)]
        for a in range(self.dim):
            for b in range(self.dim):
                for k, s in self.base._basis_mul(a, b):
                    table[k].append(((a, b), s))
        return [tuple(t) for t in table]

    def _basis_coproduct(self, i):
        return self._coproduct_table[i]

    def _basis_counit(self, i):
        return 1 if any(k == i for k, _ in self.base._one_terms()) else 0

    @cached_property
    def _antipode_table(self) -> list:
        table = [[] for _ in range(self.dim)]
        for a in range(self.dim):
            for k, s in self.base._basis_antipode(a):
                table[k].append((a, s))
        return [tuple(t) for t in table]

    def _basis_antipode(self, i):
        return self._antipode_table[i]

    def _one_terms(self):
        return tuple((i, self.base._basis_counit(i)) for i in range(self.dim) if self.base._basis_counit(i))

    def basis_label(self, i):
        return f"({self.base.basis_label(i)})*"


# --- axiom checks -----------------------------------------------------------
# Each returns None on success or a counterexample dict.


def check_associative(alg: HopfAlgebra, triples: Iterable[tuple[int, int, int]]):
    for i, j, k in triples:
        a, b, c = alg.basis(i), alg.basis(j), alg.basis(k)
        if (a * b) * c != a * (b * c):
            return {"triple": [alg.basis_label(i), alg.basis_label(j), alg.basis_label(k)]}
    return None


def check_coassociative(alg: HopfAlgebra, indices: Iterable[int]):
    for i in indices:
        d = alg.coproduct(alg.basis(i))
        if alg.delta_on_leg(d, 0) != alg.delta_on_leg(d, 1):
            return {"basis": alg.basis_label(i)}
    return None


def check_counit(alg: HopfAlgebra, indices: Iterable[int]):
    for i in indices:
        a = alg.basis(i)
        d = alg.coproduct(a)
        left: dict = {}
        right: dict = {}
        for (k1, k2), v in d.terms.items():
            e1, e2 = alg._basis_counit(k1), alg._basis_counit(k2)
            if e1:
                left[k2] = left.get(k2, 0) + e1 * v
            if e2:
                right[k1] = right.get(k1, 0) + e2 * v
        if Elem(alg, left) != a or Elem(alg, right) != a:
            return {"basis": alg.basis_label(i)}
    return None


def check_antipode(alg: HopfAlgebra, indices: Iterable[int]):
    for i in indices:
        a = alg.basis(i)
        target = alg.one() * alg.counit(a)
        left = alg.zero()
        right = alg.zero()
        for (k1, k2), v in alg.coproduct(a).terms.items():
            left = left + alg.antipode(alg.basis(k1)) * alg.basis(k2) * v
            right = right + alg.basis(k1) * alg.antipode(alg.basis(k2)) * v
        if left != target or right != target:
            return {"basis": alg.basis_label(i), "left": repr(left), "right": repr(right)}
    return None


def check_bialgebra(alg: HopfAlgebra, pairs: Iterable[tuple[int, int]]):
    for i, j in pairs:
        a, b = alg.basis(i), alg.basis(j)
        if alg.coproduct(a * b) != alg.coproduct(a) * alg.coproduct(b):
            return {"pair": [alg.basis_label(i), alg.basis_label(j)]}
        if alg.counit(a * b) != alg.counit(a) * alg.counit(b):
            return {"pair": [alg.basis_label(i), alg.basis_label(j)], "counit": True}
    return None


def check_bialgebra_elems(alg: HopfAlgebra, pairs: Iterable[tuple[Elem, Elem]]):
    for a, b in pairs:
        if alg.coproduct(a * b) != alg.coproduct(a) * alg.coproduct(b):
            return {"pair": [repr(a), repr(b)]}
    return None
