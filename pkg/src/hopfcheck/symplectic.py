"""The symplectic space (k^{2n}, ω), Lagrangian subspaces and generator words in Sp_{2n}."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from itertools import product as iproduct
from typing import Iterable, Sequence

from .scalars import FieldSpec, Matrix, det, rref


def omega(a: Sequence, b: Sequence):
    """``ω(a, b) = Σ_i a_i b_{n+i} - a_{n+i} b_i``."""
    if len(a) != len(b) or len(a) % 2:
        raise ValueError("ω needs two vectors of the same even length")
    n = len(a) // 2
    return sum((a[i] * b[n + i] - a[n + i] * b[i] for i in range(n)), a[0] * 0)


def gram(n: int, F: FieldSpec) -> Matrix:
    """Ω = [[0, I], [-I, 0]], so that ω(a, b) = a^t Ω b."""
    I = Matrix.identity(F, n)
    Z = Matrix.zeros(F, n, n)
    return Matrix.block([[Z, I], [-I, Z]])


def is_symplectic(M: Matrix) -> bool:
    if M.nrows != M.ncols or M.nrows % 2:
        return False
    return M.T @ gram(M.nrows // 2, M.field) @ M == gram(M.nrows // 2, M.field)


def is_symplectic_pairwise(M: Matrix) -> bool:
    """Same test through ω on pairs of columns."""
    if M.nrows != M.ncols or M.nrows % 2:
        return False
    cols = [M.column(j) for j in range(M.ncols)]
    F = M.field
    e = [tuple(F.one if k == j else F.zero for k in range(M.nrows)) for j in range(M.nrows)]
    return all(omega(cols[i], cols[j]) == omega(e[i], e[j])
               for i in range(M.ncols) for j in range(M.ncols))


def split_blocks(rows: Matrix) -> tuple[Matrix, Matrix]:
    n = rows.ncols // 2
    return rows.submatrix(range(rows.nrows), range(n)), rows.submatrix(range(rows.nrows), range(n, 2 * n))


def _isotropic_rows(rows: Matrix) -> bool:
    return all(omega(rows.rows[i], rows.rows[j]) == 0
               for i in range(rows.nrows) for j in range(i + 1, rows.nrows))


def is_lagrangian(rows: Matrix) -> bool:
    """Rank n and isotropic. The isotropy is decided both pairwise on rows and
    as ``AB^t = BA^t`` for rows = (A|B); the two must agree."""
    if rows.ncols % 2:
        raise ValueError("need an n x 2n matrix")
    n = rows.ncols // 2
    pairwise = _isotropic_rows(rows)
    A, B = split_blocks(rows)
    blockwise = A @ B.T == B @ A.T
    if pairwise != blockwise:
        raise RuntimeError("isotropy tests disagree")
    return rows.nrows == n and rows.rank == n and pairwise


@dataclass(frozen=True)
class LagSubspace:
    """A Lagrangian subspace, stored by the RREF of a spanning matrix."""

    rref: Matrix

    @classmethod
    def from_rows(cls, rows: Matrix) -> "LagSubspace":
        if not is_lagrangian(rows):
            raise ValueError("rows do not span a Lagrangian subspace")
        r, rank, _ = rref(rows)
        return cls(Matrix._raw(rows.field, r.rows[:rank], rows.ncols))

    @property
    def n(self) -> int:
        return self.rref.nrows

    def contains(self, v: Sequence) -> bool:
        stacked = Matrix(self.rref.field, list(self.rref.rows) + [list(v)])
        return stacked.rank == self.n

    def transform(self, M: Matrix) -> "LagSubspace":
        """The image ``M·U`` (M acts on column vectors)."""
        return LagSubspace.from_rows((M @ self.rref.T).T)


def _odd_prime_guard(n: int, q: int):
    F = FieldSpec("gf", q)  # rejects p = 2 and composites
    if n > 2 or q > 7:
        raise ValueError("enumeration is limited to n <= 2 and q <= 7")
    return F


def enumerate_lagrangians(n: int, q: int) -> list[LagSubspace]:
    """All Lagrangian subspaces of GF(q)^{2n}, walking the RREF cells."""
    F = _odd_prime_guard(n, q)
    out = []
    for pivots in combinations(range(2 * n), n):
        # free positions: row i, column j > pivots[i] and j not a pivot column
        free = [(i, j) for i in range(n) for j in range(pivots[i] + 1, 2 * n) if j not in pivots]
        for values in iproduct(range(q), repeat=len(free)):
            rows = [[0] * (2 * n) for _ in range(n)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            m = Matrix(F, rows)
            if _isotropic_rows(m):
                out.append(LagSubspace(m))
    return out


def brute_lagrangian_count(n: int, q: int) -> int:
    """Independent count: grow isotropic subspaces one vector at a time, each
    subspace stored as the frozenset of its vectors (no echelon forms)."""
    _odd_prime_guard(n, q)
    dim = 2 * n
    vecs = [v for v in iproduct(range(q), repeat=dim)]

    def om(a, b):
        return sum(a[i] * b[n + i] - a[n + i] * b[i] for i in range(n)) % q

    def span_add(S: frozenset, v) -> frozenset:
        return frozenset(tuple((s[k] + t * v[k]) % q for k in range(dim)) for s in S for t in range(q))

    level = {frozenset([(0,) * dim])}
    for _ in range(n):
        nxt = set()
        for S in level:
            for v in vecs:
                if v in S:
                    continue
                if all(om(v, s) == 0 for s in S):
                    nxt.add(span_add(S, v))
        level = nxt
    return len(level)


def lagrangian_count_formula(n: int, q: int) -> int:
    out = 1
    for i in range(1, n + 1):
        out *= q ** i + 1
    return out


# --- generator families ----------------------------------------------------


@dataclass(frozen=True)
class Token:
    """``Diag(A) = diag(A, (A^t)^{-1})``, ``Lower(B) = [[I,0],[B,I]]``,
    ``Upper(B) = [[I,B],[0,I]]`` (B symmetric)."""

    kind: str
    mat: Matrix

    def matrix(self) -> Matrix:
        A = self.mat
        n = A.nrows
        F = A.field
        I, Z = Matrix.identity(F, n), Matrix.zeros(F, n, n)
        if self.kind == "Diag":
            return Matrix.block([[A, Z], [Z, A.T.inverse()]])
        if self.kind == "Lower":
            return Matrix.block([[I, Z], [A, I]])
        if self.kind == "Upper":
            return Matrix.block([[I, A], [Z, I]])
        raise ValueError(self.kind)

    def is_identity(self) -> bool:
        F = self.mat.field
        n = self.mat.nrows
        target = Matrix.identity(F, n) if self.kind == "Diag" else Matrix.zeros(F, n, n)
        return self.mat == target

    def __repr__(self):
        return f"{self.kind}({self.mat.tolist()})"


def Diag(A: Matrix) -> Token:
    if not det(A):
        raise ValueError("Diag needs an invertible matrix")
    return Token("Diag", A)


def Lower(B: Matrix) -> Token:
    if B != B.T:
        raise ValueError("Lower needs a symmetric matrix")
    return Token("Lower", B)


def Upper(B: Matrix) -> Token:
    if B != B.T:
        raise ValueError("Upper needs a symmetric matrix")
    return Token("Upper", B)


def word_product(tokens: Iterable[Token], n: int, F: FieldSpec) -> Matrix:
    out = Matrix.identity(F, 2 * n)
    for t in tokens:
        out = out @ t.matrix()
    return out


def blocks(M: Matrix):
    n = M.nrows // 2
    lo, hi = range(n), range(n, 2 * n)
    return M.submatrix(lo, lo), M.submatrix(lo, hi), M.submatrix(hi, lo), M.submatrix(hi, hi)


def xyz_factors(M: Matrix) -> tuple[Matrix, Matrix, Matrix] | None:
    """``(A, B, B')`` with ``M = Diag(A)·Lower(B)·Upper(B')``, or None when the
    top-left block is singular (then no such factorization exists)."""
    P, Q, R, _ = blocks(M)
    if not det(P):
        return None
    return P, P.T @ R, P.inverse() @ Q


def _symmetric_candidates(n: int, F: FieldSpec, rng: random.Random):
    yield Matrix.identity(F, n)
    for diag in iproduct((0, 1, -1), repeat=n):
        yield Matrix(F, [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)])
    while True:
        S = Matrix.random(F, n, n, rng)
        yield S + S.T


def sp_decompose(M: Matrix, seed: int = 0, max_tries: int = 10000) -> list[Token]:
    """Word in Diag / Lower / Upper whose product is M.

    M = I gives []. With an invertible top-left block the answer is the unique
    ``[Diag, Lower, Upper]`` triple (identity factors kept). Otherwise it is
    ``Upper(S)`` followed by the triple of ``Upper(-S)·M`` with identity
    factors dropped, so Ω = Upper(1)·Lower(-1)·Upper(1) for n = 1."""
    if not is_symplectic(M):
        raise ValueError("matrix is not symplectic")
    n, F = M.nrows // 2, M.field
    if M == Matrix.identity(F, 2 * n):
        return []

    def xyz(m):
        A, B, B2 = xyz_factors(m)
        return [Diag(A), Lower(B), Upper(B2)]

    if xyz_factors(M) is not None:
        return xyz(M)
    P, _, R, _ = blocks(M)
    rng = random.Random(seed)
    for k, S in enumerate(_symmetric_candidates(n, F, rng)):
        if k > max_tries:
            break
        if det(P - S @ R):
            return [Upper(S)] + [t for t in xyz(Upper(-S).matrix() @ M) if not t.is_identity()]
    raise RuntimeError("no conjugating Upper(S) found")


def psp_equal(M1: Matrix, M2: Matrix) -> bool:
    return M1 == M2 or M1 == -M2


def random_word(n: int, F: FieldSpec, rng: random.Random, length: int = 6) -> list[Token]:
    """Random word in the three families (used to sample Sp_{2n})."""
    out = []
    for _ in range(length):
        kind = rng.choice(("Diag", "Lower", "Upper"))
        if kind == "Diag":
            while True:
                A = Matrix.random(F, n, n, rng)
                if det(A):
                    break
            out.append(Diag(A))
        else:
            S = Matrix.random(F, n, n, rng)
            S = S + S.T
            out.append(Lower(S) if kind == "Lower" else Upper(S))
    return out


def random_symplectic(n: int, F: FieldSpec, rng: random.Random, length: int = 6) -> Matrix:
    return word_product(random_word(n, F, rng, length), n, F)
