"""Triple Massey products and a scan for formality obstructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .cohom import (CohomClass, class_basis_elements, class_of, cohomology, is_closed,
                    is_exact)
from .dga import DGA
from .grade import Element, from_coords
from .qlin import NO_SOLUTION, Subspace, reduce_mod, solve_any


class BadPrimitive(ValueError):
    pass


@dataclass(frozen=True)
class MasseyVerdict:
    defined: bool
    degree: int
    representative: Element | None = None
    indeterminacy: Subspace | None = None  # in class coordinates of H^degree
    nontrivial: bool = False
    primitives: tuple[Element, Element] | None = None
    classes: tuple = field(default=(), compare=False)
    reason: str = ""

    @property
    def indeterminacy_dim(self) -> int:
        return self.indeterminacy.dim if self.indeterminacy is not None else 0

    def residue(self) -> tuple:
        """Class coordinates of the representative reduced modulo indeterminacy."""
        if not self.defined:
            return ()
        D = self.classes[0].dga
        coords = cohomology(D, self.degree).class_coords(self.representative.to_coords(self.degree))
        return reduce_mod(self.indeterminacy, coords)


def _primitive(D: DGA, target: Element, degree: int) -> Element:
    """Some g with dg = target (target of the given degree, exact)."""
    if degree < 0:
        return D.algebra.zero()
    M = D.d_matrix(degree)
    x = solve_any(M, target.to_coords(degree + 1), D.algebra.dim(degree))
    if x is NO_SOLUTION:
        raise BadPrimitive(f"{target} is not exact")
    return from_coords(D.algebra, degree, x)


def indeterminacy(A: CohomClass, C: CohomClass, q: int) -> Subspace:
    """[A] H^{q+r-1} + [C] H^{p+q-1}, in class coordinates of H^{p+q+r-1}."""
    D = A.dga
    p, r = A.degree, C.degree
    target = p + q + r - 1
    space = cohomology(D, target)
    vecs = []
    for z in class_basis_elements(D, q + r - 1):
        vecs.append((A.representative * z.representative, target))
    for w in class_basis_elements(D, p + q - 1):
        vecs.append((w.representative * C.representative, target))
    coords = [space.class_coords(e.to_coords(t)) for e, t in vecs]
    return Subspace.span(space.betti, coords)


def triple_massey(A: CohomClass, B: CohomClass, C: CohomClass,
                  primitives: tuple[Element, Element] | None = None) -> MasseyVerdict:
    """<[a], [b], [c]> with representative k = g c + (-1)^(p-1) a h.

    ``primitives`` may supply (g, h) with dg = ab and dh = bc; otherwise the
    deterministic solution of the linear systems is used.
    """
    D = A.dga
    a, b, c = A.representative, B.representative, C.representative
    p, q, r = A.degree, B.degree, C.degree
    target = p + q + r - 1
    D.check_cap(target + 1)
    for X in (A, B, C):
        if not is_closed(D, X.representative):
            raise ValueError(f"{X.representative} is not closed")
    ab, bc = a * b, b * c
    classes = (A, B, C)
    if not is_exact(D, ab, p + q):
        return MasseyVerdict(False, target, classes=classes, reason="[a][b] != 0")
    if not is_exact(D, bc, q + r):
        return MasseyVerdict(False, target, classes=classes, reason="[b][c] != 0")
    if primitives is None:
        g = _primitive(D, ab, p + q - 1)
        h = _primitive(D, bc, q + r - 1)
    else:
        g, h = primitives
        if D.differential(g) != ab or D.differential(h) != bc:
            raise BadPrimitive("supplied primitives do not satisfy dg = ab, dh = bc")
    k = g * c + (a * h if (p - 1) % 2 == 0 else -(a * h))
    if not is_closed(D, k):
        raise AssertionError(f"Massey representative {k} is not closed")
    ind = indeterminacy(A, C, q)
    coords = cohomology(D, target).class_coords(k.to_coords(target))
    residue = reduce_mod(ind, coords)
    return MasseyVerdict(True, target, k, ind, any(residue), (g, h), classes)


def formality_scan(D: DGA, max_degree: int | None = None) -> list[MasseyVerdict]:
    """Every nontrivial <a, b, c> on class-basis triples landing in degree <= max_degree.

    An empty result only means no triple obstruction was found at this depth.
    """
    top = D.top_degree if max_degree is None else min(max_degree, D.top_degree)
    basis = {q: class_basis_elements(D, q) for q in range(1, top + 1)}
    found = []
    degs = [q for q in basis if basis[q]]
    for p, q, r in product(degs, repeat=3):
        if p + q + r - 1 > top:
            continue
        for A, B, C in product(basis[p], basis[q], basis[r]):
            v = triple_massey(A, B, C)
            if v.defined and v.nontrivial:
                found.append(v)
    return found


def massey_of_elements(D: DGA, a: Element, b: Element, c: Element) -> MasseyVerdict:
    return triple_massey(class_of(D, a), class_of(D, b), class_of(D, c))
