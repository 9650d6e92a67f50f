"""JSON (de)serialization of matrices, elements, modules and Lagrangian lists.

Scalars are written as strings ("num/den" or residues), subsets as sorted
1-based index lists.
"""

from __future__ import annotations

from .algebra import Elem
from .double import DoubleHopf
from .en import EnHopf, indices_of
from .modrep import ModuleRep
from .scalars import FieldSpec, Matrix
from .symplectic import LagSubspace


def scalar_str(F: FieldSpec, v) -> str:
    return str(F.to_json(v))


def matrix_to_json(m: Matrix) -> dict:
    return {"field": str(m.field), "rows": [[scalar_str(m.field, v) for v in r] for r in m.rows]}


def matrix_from_json(d: dict) -> Matrix:
    F = FieldSpec.parse(d["field"])
    return Matrix(F, [[F(v) for v in r] for r in d["rows"]])


def en_elem_to_json(a: Elem) -> dict:
    E = a.alg
    terms = []
    for idx in sorted(a.terms):
        i, pm = E.decode(idx)
        terms.append({"c": i, "P": indices_of(pm), "coeff": scalar_str(E.field, a.terms[idx])})
    return {"n": E.n, "field": str(E.field), "terms": terms}


def en_elem_from_json(d: dict, field: FieldSpec | None = None) -> Elem:
    F = field or FieldSpec.parse(d.get("field", "rational"))
    E = EnHopf(d["n"], F)
    return E.elem({E.index(t["c"], t["P"]): F(t["coeff"]) for t in d["terms"]})


def double_elem_to_json(a: Elem) -> dict:
    D = a.alg
    terms = []
    for idx in sorted(a.terms):
        j, P, l, Q = D.decode(idx)
        terms.append({"C": j, "X": indices_of(P), "c": l, "x": indices_of(Q),
                      "coeff": scalar_str(D.field, a.terms[idx])})
    return {"n": D.n, "field": str(D.field), "terms": terms}


def double_elem_from_json(d: dict, field: FieldSpec | None = None) -> Elem:
    F = field or FieldSpec.parse(d.get("field", "rational"))
    D = DoubleHopf(d["n"], F)
    return D.elem({D.index(t["C"], t["X"], t["c"], t["x"]): F(t["coeff"]) for t in d["terms"]})


def module_to_json(V: ModuleRep) -> dict:
    return {"n": V.n, "dim": V.dim, "field": str(V.field),
            "gens": {k: [[scalar_str(V.field, v) for v in r] for r in m.rows] for k, m in V.gens().items()}}


def module_from_json(d: dict) -> ModuleRep:
    F = FieldSpec.parse(d.get("field", "rational"))
    n = d["n"]
    g = {k: Matrix(F, v) for k, v in d["gens"].items()}
    return ModuleRep(n, F, g["C"], g["c"], tuple(g[f"X{k}"] for k in range(1, n + 1)),
                     tuple(g[f"x{k}"] for k in range(1, n + 1)))


def lagrangians_to_json(subspaces: list[LagSubspace]) -> list[dict]:
    return [matrix_to_json(U.rref) for U in subspaces]

