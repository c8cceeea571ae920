"""Cohomology of a DGA, degree by degree, with canonical class representatives.

A cocycle is reduced modulo the echelon basis of the coboundaries; the
reduced vector is the canonical representative of its class.  Class
coordinates are read off at the pivots of the reduced class basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dga import DGA
from .grade import Element, from_coords
from .qlin import Subspace, image_basis, is_zero, kernel_basis, reduce_mod


class NotClosed(ValueError):
    pass


@dataclass(frozen=True)
class CohomologySpace:
    degree: int
    cocycles: Subspace
    coboundaries: Subspace
    class_basis: tuple  # reduced cocycle vectors, in echelon form
    class_pivots: tuple

    @property
    def betti(self) -> int:
        return len(self.class_basis)

    @property
    def ambient_dim(self) -> int:
        return self.cocycles.ambient_dim

    def reduce(self, v) -> tuple:
        return reduce_mod(self.coboundaries, v)

    def class_coords(self, v) -> tuple[Fraction, ...]:
        """Coordinates of the class of cocycle vector ``v`` in ``class_basis``."""
        r = self.reduce(v)
        coords = tuple(r[p] for p in self.class_pivots)
        residue = list(r)
        for c, rep in zip(coords, self.class_basis):
            if c:
                residue = [a - c * b for a, b in zip(residue, rep)]
        if any(residue):
            raise NotClosed("vector is not a cocycle")
        return coords


def cohomology(D: DGA, q: int) -> CohomologySpace:
    hit = D._cohom.get(q)
    if hit is not None:
        return hit
    D.check_cap(q + 1)
    n = D.algebra.dim(q) if q >= 0 else 0
    if n == 0:
        space = CohomologySpace(q, Subspace.zero(0), Subspace.zero(0), (), ())
    else:
        Z = kernel_basis(D.d_matrix(q), n)
        B = image_basis(D.d_matrix(q - 1), D.algebra.dim(q - 1)) if q > 0 else Subspace.zero(n)
        if B.ambient_dim != n:  # d_matrix(q-1) has no columns
            B = Subspace.zero(n)
        reduced = [reduce_mod(B, z) for z in Z.basis]
        H = Subspace.span(n, [r for r in reduced if not is_zero(r)])
        space = CohomologySpace(q, Z, B, H.basis, H.pivots)
    D._cohom[q] = space
    return space


def betti(D: DGA, q: int) -> int:
    return cohomology(D, q).betti


def betti_numbers(D: DGA, max_degree: int | None = None) -> list[int]:
    top = D.top_degree if max_degree is None else max_degree
    return [betti(D, q) for q in range(top + 1)]


@dataclass(frozen=True)
class CohomClass:
    dga: DGA
    degree: int
    representative: Element

    def coords(self) -> tuple[Fraction, ...]:
        space = cohomology(self.dga, self.degree)
        return space.class_coords(self.representative.to_coords(self.degree))

    def is_zero(self) -> bool:
        return not any(self.coords())

    def __mul__(self, other: "CohomClass") -> "CohomClass":
        return cup(self, other)

    def scale(self, c) -> "CohomClass":
        return CohomClass(self.dga, self.degree, self.representative.scale(c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohomClass):
            return NotImplemented
        return (self.dga is other.dga or self.dga == other.dga) and self.degree == other.degree \
            and self.coords() == other.coords()

    def __hash__(self) -> int:
        return hash((self.degree, self.coords()))

    def __repr__(self) -> str:
        return f"[{self.representative}]"


def _degree_of(u: Element, degree: int | None) -> int:
    if degree is not None:
        if not u.is_homogeneous(degree):
            raise ValueError(f"{u} is not homogeneous of degree {degree}")
        return degree
    if u.is_zero():
        raise ValueError("degree must be given for the zero element")
    d = u.degree
    if d is None:
        raise ValueError(f"{u} is not homogeneous")
    return d


def is_closed(D: DGA, u: Element) -> bool:
    return D.differential(u).is_zero()


def canonical_representative(D: DGA, u: Element, degree: int | None = None) -> Element:
    q = _degree_of(u, degree)
    space = cohomology(D, q)
    return from_coords(D.algebra, q, space.reduce(u.to_coords(q)))


def class_of(D: DGA, u: Element, degree: int | None = None) -> CohomClass:
    """The class of a closed homogeneous element, with canonical representative."""
    q = _degree_of(u, degree)
    if not is_closed(D, u):
        raise NotClosed(f"d({u}) = {D.differential(u)} != 0")
    return CohomClass(D, q, canonical_representative(D, u, q))


def is_exact(D: DGA, u: Element, degree: int | None = None) -> bool:
    if u.is_zero():
        return True
    q = _degree_of(u, degree)
    if not is_closed(D, u):
        raise NotClosed(f"d({u}) = {D.differential(u)} != 0")
    return u.to_coords(q) in cohomology(D, q).coboundaries


def cup(A: CohomClass, B: CohomClass) -> CohomClass:
    if A.dga is not B.dga and A.dga != B.dga:
        raise ValueError("classes live in different DGAs")
    q = A.degree + B.degree
    A.dga.check_cap(q + 1)
    return class_of(A.dga, A.representative * B.representative, q)


def class_basis_elements(D: DGA, q: int) -> list[CohomClass]:
    space = cohomology(D, q)
    return [CohomClass(D, q, from_coords(D.algebra, q, v)) for v in space.class_basis]


def class_from_coords(D: DGA, q: int, coords) -> CohomClass:
    space = cohomology(D, q)
    n = space.ambient_dim
    v = [Fraction(0)] * n
    for c, rep in zip(coords, space.class_basis):
        if c:
            v = [a + c * b for a, b in zip(v, rep)]
    return CohomClass(D, q, from_coords(D.algebra, q, v))


@dataclass(frozen=True)
class RingEntry:
    a: int
    b: int
    degree: int
    product: tuple


def ring_table(D: DGA, max_q: int | None = None) -> tuple[list[CohomClass], list[RingEntry]]:
    """Structure constants of H* in class-basis coordinates.

    Classes of degree 0..max_q are numbered globally in degree order; the
    table holds every product a*b with a <= b whose degree is computable.
    """
    top = D.top_degree
    max_q = top if max_q is None else max_q
    classes: list[CohomClass] = []
    for q in range(max_q + 1):
        classes.extend(class_basis_elements(D, q))
    entries = []
    for i, A in enumerate(classes):
        for j in range(i, len(classes)):
            B = classes[j]
            deg = A.degree + B.degree
            if deg > top:
                continue
            entries.append(RingEntry(i, j, deg, cup(A, B).coords()))
    return classes, entries
