"""Differential graded algebras: a free graded-commutative algebra with a
differential given on generators and extended by the Leibniz rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .grade import CapExceeded, Element, GradedAlgebra, Monomial
from .qlin import Matrix


class NotADifferential(ValueError):
    def __init__(self, generator: str, message: str):
        self.generator = generator
        super().__init__(f"{message} (generator {generator!r})")


@dataclass(frozen=True)
class ValidationReport:
    d_squared_zero: bool
    minimal: bool
    weight_preserving: bool | None  # None when no weight grading is assigned


class DGA:
    """A DGA on ``algebra`` with ``d(g) = differential[g.name]``.

    ``degree_cap`` bounds the slices that may be coordinatized.  It is only
    enforced when the algebra has even generators; an exterior algebra is
    finite-dimensional and every slice above its top degree is genuinely zero.
    """

    def __init__(self, algebra: GradedAlgebra, differential: Mapping[str, Element | str] | None = None,
                 degree_cap: int | None = None, validate: bool = True):
        self.algebra = algebra
        differential = dict(differential or {})
        unknown = set(differential) - set(algebra.names)
        if unknown:
            raise KeyError(f"differential given for unknown generators {sorted(unknown)}")
        images = []
        for g in algebra.generators:
            img = differential.get(g.name, algebra.zero())
            if isinstance(img, str):
                img = algebra.element(img)
            if img.algebra != algebra:
                raise ValueError(f"d({g.name}) lies in a different algebra")
            if not img.is_homogeneous(g.degree + 1):
                raise NotADifferential(g.name, f"d({g.name}) = {img} is not homogeneous of degree {g.degree + 1}")
            images.append(img)
        self.d_gens: tuple[Element, ...] = tuple(images)
        if degree_cap is None:
            if algebra.has_even:
                raise ValueError("degree_cap is required for algebras with even-degree generators")
            degree_cap = algebra.top_degree
        self.degree_cap = degree_cap
        self._d_mono: dict[Monomial, Element] = {}
        self._matrices: dict[int, Matrix] = {}
        self._cohom: dict = {}
        if validate:
            self.validate()

    # -- structure ---------------------------------------------------------

    @property
    def capped(self) -> bool:
        return self.algebra.has_even

    def check_cap(self, d: int):
        if self.capped and d > self.degree_cap:
            raise CapExceeded(f"degree {d} exceeds degree_cap {self.degree_cap}")

    @property
    def top_degree(self) -> int:
        """Highest degree whose cohomology is computable."""
        return self.algebra.top_degree if not self.capped else self.degree_cap - 1

    def d_of(self, name: str) -> Element:
        return self.d_gens[self.algebra.index(name)]

    def as_dict(self) -> dict[str, Element]:
        return {g.name: e for g, e in zip(self.algebra.generators, self.d_gens)}

    def __eq__(self, other) -> bool:
        if not isinstance(other, DGA):
            return NotImplemented
        return (self.algebra == other.algebra and self.d_gens == other.d_gens
                and self.degree_cap == other.degree_cap)

    def __hash__(self) -> int:
        return hash((self.algebra.generators, self.d_gens, self.degree_cap))

    def __repr__(self) -> str:
        parts = ", ".join(f"d{g.name}={e}" for g, e in zip(self.algebra.generators, self.d_gens) if e)
        return f"DGA({', '.join(self.algebra.names)}; {parts or 'd=0'}; cap={self.degree_cap})"

    # -- differential ------------------------------------------------------

    def _d_monomial(self, m: Monomial) -> Element:
        hit = self._d_mono.get(m)
        if hit is not None:
            return hit
        alg = self.algebra
        out = alg.zero()
        prefix = alg.one()
        prefix_deg = 0
        # m = g_{i1} g_{i2} ... in generator order (even generators repeated)
        word = [i for i, e in enumerate(m) for _ in range(e)]
        gens = [alg.gen(i) for i in range(len(alg.generators))]
        for t, i in enumerate(word):
            dg = self.d_gens[i]
            if dg:
                suffix = alg.one()
                for j in word[t + 1:]:
                    suffix = suffix * gens[j]
                term = prefix * dg * suffix
                out = out - term if prefix_deg % 2 else out + term
            prefix = prefix * gens[i]
            prefix_deg += alg.generators[i].degree
        self._d_mono[m] = out
        return out

    def differential(self, u: Element) -> Element:
        if u.algebra != self.algebra:
            raise ValueError("element does not belong to this DGA")
        out = self.algebra.zero()
        for m, c in u.terms.items():
            dm = self._d_monomial(m)
            if dm:
                out = out + dm.scale(c)
        return out

    __call__ = differential

    def d_matrix(self, q: int) -> Matrix:
        """Matrix of d from degree q to degree q+1 in ``degree_basis`` coordinates."""
        self.check_cap(q + 1)
        if q in self._matrices:
            return self._matrices[q]
        alg = self.algebra
        src = alg.degree_basis(q)
        tgt_index = alg.basis_index(q + 1)
        rows = [[Fraction(0)] * len(src) for _ in range(len(tgt_index))]
        for j, m in enumerate(src):
            for mm, c in self._d_monomial(m).terms.items():
                rows[tgt_index[mm]][j] = c
        mat = tuple(tuple(r) for r in rows)
        self._matrices[q] = mat
        return mat

    def slice_dim(self, q: int) -> int:
        self.check_cap(q)
        return self.algebra.dim(q)

    # -- validation --------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check d^2 = 0 on generators; report minimality and weight behaviour.

        d^2 is a derivation, so vanishing on generators is vanishing everywhere.
        """
        for g, dg in zip(self.algebra.generators, self.d_gens):
            dd = self.differential(dg)
            if dd:
                raise NotADifferential(g.name, f"d(d({g.name})) = {dd} != 0")
        return ValidationReport(True, self.is_minimal(), self._weight_preserving())

    def is_minimal(self) -> bool:
        alg = self.algebra
        deps = {}
        for i, dg in enumerate(self.d_gens):
            for m in dg.terms:
                if sum(m) < 2:
                    return False
            deps[i] = {j for m in dg.terms for j, e in enumerate(m) if e}
        # generators can be ordered so that each d(x_i) uses only earlier ones
        done: set[int] = set()
        pending = set(range(len(alg.generators)))
        while pending:
            ready = {i for i in pending if deps[i] <= done}
            if not ready:
                return False
            done |= ready
            pending -= ready
        return True

    def _weight_preserving(self) -> bool | None:
        alg = self.algebra
        if not alg.weighted:
            return None
        for g, dg in zip(alg.generators, self.d_gens):
            if dg and dg.weight != g.weight:
                return False
        return True


def differential(D: DGA, u: Element) -> Element:
    return D.differential(u)


def d_matrix(D: DGA, q: int) -> Matrix:
    return D.d_matrix(q)


def validate(D: DGA) -> ValidationReport:
    return D.validate()
