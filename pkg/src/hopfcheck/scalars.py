"""Exact scalars (rationals and GF(p)) and dense exact linear algebra.

Rationals are :class:`fractions.Fraction`; prime-field residues are
:class:`GF` instances. Both support the usual operators, mix with ``int``,
and are immutable, so all higher-level code is written once and runs over
either field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class GF:
    """Residue class modulo a prime ``p``; value kept in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, o):
        if isinstance(o, GF):
            if o.p != self.p:
                raise ValueError(f"GF({self.p}) and GF({o.p}) do not mix")
            return o.v
        if isinstance(o, int):
            return o
        if isinstance(o, Fraction):
            return o.numerator * pow(o.denominator, -1, self.p)
        return None

    def __add__(self, o):
        w = self._coerce(o)
        return NotImplemented if w is None else GF(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, o):
        w = self._coerce(o)
        return NotImplemented if w is None else GF(self.v - w, self.p)

    def __rsub__(self, o):
        w = self._coerce(o)
        return NotImplemented if w is None else GF(w - self.v, self.p)

    def __mul__(self, o):
        w = self._coerce(o)
        return NotImplemented if w is None else GF(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, o):
        w = self._coerce(o)
        if w is None:
            return NotImplemented
        if w % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GF(self.v * pow(w, -1, self.p), self.p)

    def __rtruediv__(self, o):
        w = self._coerce(o)
        if w is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GF(w * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return GF(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return GF(pow(self.v, -1, self.p), self.p) ** (-e)
        return GF(pow(self.v, e, self.p), self.p)

    def __eq__(self, o):
        w = self._coerce(o)
        if w is None:
            return NotImplemented
        return (self.v - w) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v}"


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: ``FieldSpec("rational")`` or ``FieldSpec("gf", p)``.

    Characteristic 2 is rejected because the R-matrix and dual-basis
    formulas divide by 2 and 4.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == "gf":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"GF modulus must be prime, got {self.p}")
            if self.p == 2:
                raise ValueError("characteristic 2 is not supported (formulas divide by 2)")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        text = text.strip().lower()
        if text in ("rational", "q", "qq"):
            return cls("rational")
        if text.startswith("gf:"):
            return cls("gf", int(text[3:]))
        raise ValueError(f"cannot parse field {text!r}; use 'rational' or 'gf:<p>'")

    def __str__(self):
        return "rational" if self.kind == "rational" else f"gf:{self.p}"

    @property
    def is_finite(self) -> bool:
        return self.kind == "gf"

    def __call__(self, x) -> Fraction | GF:
        """Coerce an int, Fraction, ``"num/den"`` string or scalar into the field."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.kind == "rational":
            if isinstance(x, GF):
                raise TypeError("cannot coerce a GF residue into the rationals")
            return Fraction(x)
        if isinstance(x, GF):
            if x.p != self.p:
                raise ValueError(f"residue mod {x.p} is not in GF({self.p})")
            return x
        x = Fraction(x)
        return GF(x.numerator * pow(x.denominator, -1, self.p), self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self) -> list:
        if not self.is_finite:
            raise ValueError("cannot list the elements of the rationals")
        return [GF(i, self.p) for i in range(self.p)]

    def random(self, rng: random.Random, nonzero: bool = False):
        while True:
            if self.is_finite:
                x = GF(rng.randrange(self.p), self.p)
            else:
                x = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            if x or not nonzero:
                return x

    def to_json(self, x) -> str | int:
        if self.is_finite:
            return int(x)
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


QQ = FieldSpec("rational")


def GFp(p: int) -> FieldSpec:
    return FieldSpec("gf", p)


class Matrix:
    """Immutable dense matrix over a :class:`FieldSpec`."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable], ncols: int | None = None):
        self.field = field
        self.rows = tuple(tuple(field(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged matrix rows")
        else:
            self.ncols = ncols or 0

    @classmethod
    def _raw(cls, field, rows, ncols):
        m = cls.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls._raw(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls._raw(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def random(cls, field, nrows, ncols, rng):
        return cls._raw(field, [[field.random(rng) for _ in range(ncols)] for _ in range(nrows)], ncols)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        rows = []
        for brow in blocks:
            for i in range(brow[0].nrows):
                rows.append([x for b in brow for x in b.rows[i]])
        field = blocks[0][0].field
        return cls._raw(field, rows, sum(b.ncols for b in blocks[0]))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.field, list(zip(*self.rows)) if self.nrows else [], self.nrows)

    def __eq__(self, o):
        if not isinstance(o, Matrix):
            return NotImplemented
        return self.shape == o.shape and all(
            a == b for r, s in zip(self.rows, o.rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash((self.shape, tuple(tuple(int(x) if isinstance(x, GF) else x for x in r) for r in self.rows)))

    def __add__(self, o: "Matrix"):
        if self.shape != o.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)], self.ncols)

    def __sub__(self, o: "Matrix"):
        if self.shape != o.shape:
            raise ValueError("shape mismatch")
        return Matrix._raw(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)], self.ncols)

    def __neg__(self):
        return Matrix._raw(self.field, [[-a for a in r] for r in self.rows], self.ncols)

    def scale(self, s):
        return Matrix._raw(self.field, [[s * a for a in r] for r in self.rows], self.ncols)

    def __matmul__(self, o: "Matrix"):
        if self.ncols != o.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {o.shape}")
        cols = list(zip(*o.rows)) if o.nrows else [()] * o.ncols
        zero = self.field.zero
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * c[k] for k, a in nz), zero) for c in cols])
        return Matrix._raw(self.field, out, o.ncols)

    def apply(self, v: Sequence) -> tuple:
        zero = self.field.zero
        return tuple(sum((a * b for a, b in zip(r, v) if a), zero) for r in self.rows)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def kron(self, o: "Matrix") -> "Matrix":
        rows = []
        for r in self.rows:
            for s in o.rows:
                rows.append([a * b for a in r for b in s])
        return Matrix._raw(self.field, rows, self.ncols * o.ncols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(self.field, [[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def rref(self):
        return rref(self)

    @property
    def rank(self) -> int:
        return rref(self)[1]

    def det(self):
        return det(self)

    def inverse(self):
        return inverse(self)

    def tolist(self):
        return [list(r) for r in self.rows]

    def __repr__(self):
        return "Matrix(%s, %s)" % (self.field, [list(r) for r in self.rows])


def _rref_rows(rows: list[list], ncols: int, zero, one):
    """In-place Gauss-Jordan elimination; returns (rank, pivots)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = one / prow[c]
        if prow[c] != one:
            prow = rows[r] = [x * inv if x else zero for x in prow]
        nz = [k for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for k in nz:
                        row[k] = row[k] - f * prow[k]
        pivots.append(c)
        r += 1
    return r, pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns (0-based)."""
    rows = [list(r) for r in m.rows]
    rank, pivots = _rref_rows(rows, m.ncols, m.field.zero, m.field.one)
    return Matrix._raw(m.field, rows, m.ncols), rank, pivots


def row_space(m: Matrix) -> Matrix:
    """Canonical representative of the row space: the nonzero RREF rows."""
    r, rank, _ = rref(m)
    return Matrix._raw(m.field, r.rows[:rank], m.ncols)


def kernel_basis(m: Matrix) -> list[tuple]:
    """Basis of the right null space ``{v : m v = 0}``."""
    r, rank, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    zero, one = m.field.zero, m.field.one
    basis = []
    for fcol in free:
        v = [zero] * m.ncols
        v[fcol] = one
        for i, pc in enumerate(pivots):
            v[pc] = -r.rows[i][fcol]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, rhs: Sequence) -> tuple | None:
    """One solution of ``m x = rhs``, or ``None`` if inconsistent."""
    rows = [list(r) + [m.field(b)] for r, b in zip(m.rows, rhs)]
    zero, one = m.field.zero, m.field.one
    rank, pivots = _rref_rows(rows, m.ncols + 1, zero, one)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [zero] * m.ncols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][m.ncols]
    return tuple(x)


def det(m: Matrix):
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in m.rows]
    n = m.nrows
    d = m.field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return m.field.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d = d * rows[c][c]
        inv = m.field.one / rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] * inv
            if f:
                for k in range(c, n):
                    rows[i][k] = rows[i][k] - f * rows[c][k]
    return d


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    ident = Matrix.identity(m.field, n)
    rows = [list(r) + list(e) for r, e in zip(m.rows, ident.rows)]
    rank, pivots = _rref_rows(rows, 2 * n, m.field.zero, m.field.one)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix._raw(m.field, [r[n:] for r in rows], n)


def minor(m: Matrix, row_set: Iterable[int], col_set: Iterable[int]):
    """Determinant of the submatrix on ``row_set`` x ``col_set`` (0-based, any order
    is sorted). Empty sets give 1."""
    rs, cs = sorted(row_set), sorted(col_set)
    if len(rs) != len(cs):
        raise ValueError("minor needs equally many rows and columns")
    if any(not 0 <= i < m.nrows for i in rs) or any(not 0 <= j < m.ncols for j in cs):
        raise IndexError("minor index out of range")
    if not rs:
        return m.field.one
    return det(m.submatrix(rs, cs))


def cauchy_binet(a: Matrix, b: Matrix, rows: Sequence[int], cols: Sequence[int]):
    """Right-hand side of the Cauchy-Binet formula for ``minor(a @ b, rows, cols)``."""
    k = len(rows)
    total = a.field.zero
    for p in combinations(range(a.ncols), k):
        total = total + minor(a, rows, p) * minor(b, p, cols)
    return total
