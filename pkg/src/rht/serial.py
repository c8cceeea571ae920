"""JSON encodings for models, Lie algebras and reports.

Rationals are written as strings "p/q"; elements use the expression grammar
of ``rht.parse``.  Key order is fixed so reports are byte-reproducible.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .dga import DGA
from .grade import Element, GeneratorSpec, GradedAlgebra
from .massey import MasseyVerdict
from .models import LieAlgebra, chevalley_eilenberg
from .parse import format_rational, parse_element, parse_rational


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def qlist(v) -> list[str]:
    return [format_rational(Fraction(c)) for c in v]


def dga_to_json(D: DGA) -> dict:
    gens = []
    for g in D.algebra.generators:
        entry = {"name": g.name, "degree": g.degree}
        if g.weight is not None:
            entry["weight"] = g.weight
        gens.append(entry)
    diff = {g.name: str(e) for g, e in zip(D.algebra.generators, D.d_gens) if e}
    return {"generators": gens, "differential": diff, "degree_cap": D.degree_cap}


def dga_from_json(obj: dict, degree_cap: int | None = None) -> DGA:
    gens = tuple(GeneratorSpec(g["name"], int(g["degree"]), g.get("weight")) for g in obj["generators"])
    alg = GradedAlgebra(gens)
    diff = {name: parse_element(text, alg) for name, text in obj.get("differential", {}).items()}
    cap = degree_cap if degree_cap is not None else obj.get("degree_cap")
    return DGA(alg, diff, cap)


def lie_to_json(L: LieAlgebra) -> dict:
    return {
        "dim": L.dim,
        "brackets": [
            {"i": i, "j": j, "terms": [{"k": k, "c": format_rational(c)} for k, c in terms]}
            for (i, j), terms in L.brackets
        ],
    }


def lie_from_json(obj: dict) -> LieAlgebra:
    table = {}
    for b in obj.get("brackets", []):
        key = (int(b["i"]), int(b["j"]))
        slot = table.setdefault(key, {})
        for t in b["terms"]:
            slot[int(t["k"])] = slot.get(int(t["k"]), Fraction(0)) + parse_rational(t["c"])
    return LieAlgebra.from_table(int(obj["dim"]), table)


def model_from_json(obj: dict, degree_cap: int | None = None) -> DGA:
    """Accept either DGA JSON or LieAlgebra JSON (built into its CE complex)."""
    if "dim" in obj and "generators" not in obj:
        return chevalley_eilenberg(lie_from_json(obj))
    return dga_from_json(obj, degree_cap)


def verdict_to_json(v: MasseyVerdict) -> dict:
    out = {
        "defined": v.defined,
        "nontrivial": v.nontrivial,
        "degree": v.degree,
        "classes": [str(c.representative) for c in v.classes],
    }
    if v.defined:
        out["representative"] = str(v.representative)
        out["indeterminacy_dim"] = v.indeterminacy_dim
        out["primitives"] = {"g": str(v.primitives[0]), "h": str(v.primitives[1])}
        out["residue"] = qlist(v.residue())
    else:
        out["reason"] = v.reason
    return out


def element_text(e: Element) -> str:
    return str(e)
