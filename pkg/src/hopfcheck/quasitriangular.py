"""Quasi-triangular structures: the family R_A on E(n), axiom checks, triangularity."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import HopfAlgebra, Tensor
from .en import EnHopf, mask_of
from .scalars import Matrix, minor


@dataclass(frozen=True)
class RMatrix:
    tensor: Tensor

    @property
    def alg(self) -> HopfAlgebra:
        return self.tensor.alg


def _subsets(n: int, r: int):
    return [tuple(s) for s in combinations(range(1, n + 1), r)]


def _minor(A: Matrix, P, F):
    return minor(A, [p - 1 for p in P], [f - 1 for f in F])


def build_RA(A: Matrix) -> RMatrix:
    """``R_A = ½ Σ_i (-1)^{i(i-1)/2} Σ_{|P|=|F|=i} [A]_{P,F} (x_P⊗x_F + x_P⊗cx_F
    + (-1)^i cx_P⊗x_F + (-1)^{i+1} cx_P⊗cx_F)``."""
    n = A.nrows
    E = EnHopf(n, A.field)
    half = E.field(1) / 2
    terms: dict = {}
    for i in range(n + 1):
        s0 = -1 if (i * (i - 1) // 2) & 1 else 1
        si = -1 if i & 1 else 1
        for P in _subsets(n, i):
            for F in _subsets(n, i):
                m = _minor(A, P, F)
                if not m:
                    continue
                v = half * s0 * m
                p0, p1 = E.index(0, P), E.index(1, P)
                f0, f1 = E.index(0, F), E.index(1, F)
                for key, s in (((p0, f0), 1), ((p0, f1), 1), ((p1, f0), si), ((p1, f1), -si)):
                    terms[key] = terms.get(key, 0) + v * s
    return RMatrix(Tensor(E, 2, terms))


def build_RA_grouplike_form(A: Matrix) -> RMatrix:
    """The other display: ``½(1⊗1 + 1⊗c + c⊗1 - c⊗c) + ½ Σ_{P,F ≠ ∅} (-1)^{|P|(|P|-1)/2}
    [A]_{P,F} (x_P⊗c^{|P|}x_F + cx_P⊗c^{|P|}x_F + x_P⊗c^{|P|+1}x_F - cx_P⊗c^{|P|+1}x_F)``."""
    n = A.nrows
    E = EnHopf(n, A.field)
    half = E.field(1) / 2
    terms: dict = {}
    one, c = E.index(0), E.index(1)
    for key, s in (((one, one), 1), ((one, c), 1), ((c, one), 1), ((c, c), -1)):
        terms[key] = terms.get(key, 0) + half * s
    for r in range(1, n + 1):
        s0 = -1 if (r * (r - 1) // 2) & 1 else 1
        for P in _subsets(n, r):
            for F in _subsets(n, r):
                m = _minor(A, P, F)
                if not m:
                    continue
                v = half * s0 * m
                p0, p1 = E.index(0, P), E.index(1, P)
                fa, fb = E.index(r, F), E.index(r + 1, F)
                for key, s in (((p0, fa), 1), ((p1, fa), 1), ((p0, fb), 1), ((p1, fb), -1)):
                    terms[key] = terms.get(key, 0) + v * s
    return RMatrix(Tensor(E, 2, terms))


def r_inverse(R: RMatrix) -> Tensor:
    """Inverse in the tensor-square algebra. Tries ``(S⊗id)(R)`` first (the inverse
    of any quasi-triangular R) and verifies it; otherwise solves exactly."""
    H = R.alg
    t = R.tensor
    one = H.one_tensor(2)
    cand = H.leg_map(t, 0, H.antipode)
    if cand * t == one and t * cand == one:
        return cand
    return H.tensor_inverse(t)


@dataclass
class QTReport:
    intertwining: bool
    hexagon_left: bool   # (Δ⊗id)(R) = R13 R23
    hexagon_right: bool  # (id⊗Δ)(R) = R13 R12
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.intertwining and self.hexagon_left and self.hexagon_right


def qt_check(R: RMatrix) -> QTReport:
    """Raises ZeroDivisionError if R is not invertible."""
    H = R.alg
    t = R.tensor
    r_inv = r_inverse(R)
    bad = []
    inter = True
    for name, h in H.generators().items():
        d = H.coproduct(h)
        if t * d * r_inv != d.flip():
            inter = False
            bad.append(f"Δ^op({name}) ≠ RΔ({name})R^-1")
    R12 = H.embed(t, (0, 1), 3)
    R13 = H.embed(t, (0, 2), 3)
    R23 = H.embed(t, (1, 2), 3)
    left = H.delta_on_leg(t, 0) == R13 * R23
    right = H.delta_on_leg(t, 1) == R13 * R12
    if not left:
        bad.append("(Δ⊗id)(R) ≠ R13 R23")
    if not right:
        bad.append("(id⊗Δ)(R) ≠ R13 R12")
    return QTReport(inter, left, right, "; ".join(bad))


def is_triangular(R: RMatrix) -> bool:
    return R.tensor.flip() * R.tensor == R.alg.one_tensor(2)
