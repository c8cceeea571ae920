"""Free graded-commutative algebras on named generators.

A monomial is a tuple of exponents, one per generator, in generator order.
Odd-degree generators anticommute and square to zero; the sign of a product
is the parity of the odd factors that have to be moved past each other to
restore generator order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .qlin import Q


class MismatchedAlgebra(ValueError):
    pass


class NotHomogeneous(ValueError):
    pass


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: int
    weight: int | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"generator {self.name!r} must have positive degree")
        if self.weight is not None and self.weight < 1:
            raise ValueError(f"generator {self.name!r} must have positive weight")

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1


Monomial = tuple


@dataclass(frozen=True, eq=True)
class GradedAlgebra:
    generators: tuple[GeneratorSpec, ...]
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        object.__setattr__(self, "generators", tuple(self.generators))

    @classmethod
    def of(cls, *specs) -> "GradedAlgebra":
        """Build from ``GeneratorSpec``s or ``(name, degree[, weight])`` tuples."""
        gens = [s if isinstance(s, GeneratorSpec) else GeneratorSpec(*s) for s in specs]
        return cls(tuple(gens))

    @classmethod
    def exterior(cls, n: int, prefix: str = "x", weighted: bool = False) -> "GradedAlgebra":
        return cls(tuple(GeneratorSpec(f"{prefix}{i}", 1, i if weighted else None)
                         for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @property
    def odd_mask(self) -> tuple[bool, ...]:
        return tuple(g.odd for g in self.generators)

    @property
    def has_even(self) -> bool:
        return any(not g.odd for g in self.generators)

    @property
    def weighted(self) -> bool:
        return bool(self.generators) and all(g.weight is not None for g in self.generators)

    @property
    def top_degree(self) -> int | None:
        """Highest nonzero degree, or None if the algebra is infinite-dimensional."""
        if self.has_even:
            return None
        return sum(self.degrees)

    def index(self, name: str) -> int:
        lookup = self._cache.get("index")
        if lookup is None:
            lookup = self._cache["index"] = {g.name: i for i, g in enumerate(self.generators)}
        try:
            return lookup[name]
        except KeyError:
            raise KeyError(name) from None

    # -- monomials --------------------------------------------------------

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def gen_monomial(self, i: int) -> Monomial:
        m = [0] * len(self.generators)
        m[i] = 1
        return tuple(m)

    def mono_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def mono_weight(self, m: Monomial) -> int | None:
        if not self.weighted:
            return None
        return sum(e * g.weight for e, g in zip(m, self.generators))

    def mono_mul(self, a: Monomial, b: Monomial) -> tuple[int, Monomial]:
        """Product of two monomials as ``(sign, monomial)``; sign 0 means zero."""
        key = (a, b)
        table = self._cache.setdefault("mul", {})
        hit = table.get(key)
        if hit is not None:
            return hit
        odd = self.odd_mask
        swaps = 0
        odd_in_a_after = 0
        # walk right to left counting odd factors of a with larger index than each odd in b
        for i in range(len(a) - 1, -1, -1):
            if odd[i]:
                if b[i] and a[i]:
                    table[key] = (0, a)
                    return table[key]
                if b[i]:
                    swaps += odd_in_a_after
                if a[i]:
                    odd_in_a_after += 1
        prod = tuple(x + y for x, y in zip(a, b))
        table[key] = (-1 if swaps % 2 else 1, prod)
        return table[key]

    def degree_basis(self, d: int, cap: int | None = None) -> tuple[Monomial, ...]:
        """Monomials of total degree ``d`` in canonical order."""
        if cap is not None and d > cap:
            raise CapExceeded(f"degree {d} exceeds cap {cap}")
        cache = self._cache.setdefault("basis", {})
        if d in cache:
            return cache[d]
        if d < 0:
            cache[d] = ()
            return ()
        degs = self.degrees
        odd = self.odd_mask
        n = len(degs)
        found = []

        def rec(i, remaining, acc):
            if i == n:
                if remaining == 0:
                    found.append(tuple(acc))
                return
            top = 1 if odd[i] else remaining // degs[i]
            for e in range(min(top, remaining // degs[i]), -1, -1):
                acc.append(e)
                rec(i + 1, remaining - e * degs[i], acc)
                acc.pop()

        rec(0, d, [])
        found.sort(key=_word)
        basis = tuple(found)
        cache[d] = basis
        cache[("index", d)] = {m: i for i, m in enumerate(basis)}
        return basis

    def basis_index(self, d: int) -> dict:
        self.degree_basis(d)
        return self._cache["basis"][("index", d)]

    def dim(self, d: int) -> int:
        return len(self.degree_basis(d))

    # -- elements ---------------------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {self.unit_monomial(): Fraction(1)})

    def scalar(self, c) -> "Element":
        return Element(self, {self.unit_monomial(): Q(c)})

    def gen(self, name_or_index) -> "Element":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return Element(self, {self.gen_monomial(i): Fraction(1)})

    def gens(self) -> tuple["Element", ...]:
        return tuple(self.gen(i) for i in range(len(self.generators)))

    def element(self, text: str) -> "Element":
        from .parse import parse_element
        return parse_element(text, self)

    def mono_text(self, m: Monomial) -> str:
        parts = []
        for e, g in zip(m, self.generators):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts)


def _word(m: Monomial) -> tuple[int, ...]:
    """Sort key: the sequence of generator indices, with repetition."""
    w = []
    for i, e in enumerate(m):
        w.extend([i] * e)
    return tuple(w)


def _fmt_q(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Element:
    """A finite rational combination of monomials. Immutable."""

    __slots__ = ("algebra", "terms", "_hash")

    def __init__(self, algebra: GradedAlgebra, terms: Mapping[Monomial, Fraction]):
        self.algebra = algebra
        self.terms = {m: Q(c) for m, c in terms.items() if c}
        self._hash = None

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int | None:
        """Homogeneous degree; None for zero or mixed elements."""
        degs = {self.algebra.mono_degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self, d: int | None = None) -> bool:
        if not self.terms:
            return True
        deg = self.degree
        return deg is not None and (d is None or deg == d)

    @property
    def weight(self) -> int | None:
        ws = {self.algebra.mono_weight(m) for m in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        alg = self.algebra
        return sorted(self.terms.items(), key=lambda t: (alg.mono_degree(t[0]), _word(t[0])))

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Element"):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise MismatchedAlgebra("elements belong to different algebras")

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            self._check(other)
            return other
        return self.algebra.scalar(other)

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Element":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Element":
        return self._coerce(other) - self

    def scale(self, c) -> "Element":
        c = Q(c)
        if not c:
            return self.algebra.zero()
        return Element(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> "Element":
        if not isinstance(other, Element):
            return self.scale(other)
        self._check(other)
        mul = self.algebra.mono_mul
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                s, m = mul(m1, m2)
                if s:
                    out[m] = out.get(m, 0) + s * c1 * c2
        return Element(self.algebra, out)

    def __rmul__(self, other) -> "Element":
        return self.scale(other)

    def __pow__(self, n: int) -> "Element":
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.algebra == other.algebra and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.algebra.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- coordinates -------------------------------------------------------

    def to_coords(self, d: int) -> tuple[Fraction, ...]:
        if not self.is_homogeneous(d):
            raise NotHomogeneous(f"{self} is not homogeneous of degree {d}")
        index = self.algebra.basis_index(d)
        v = [Fraction(0)] * len(index)
        for m, c in self.terms.items():
            v[index[m]] = c
        return tuple(v)

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = self.algebra.mono_text(m)
            mag = abs(c)
            if not mono:
                body = _fmt_q(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_fmt_q(mag)}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"


def multiply(u: Element, v: Element) -> Element:
    return u * v


def degree_basis(A: GradedAlgebra, d: int, cap: int | None = None) -> tuple[Monomial, ...]:
    return A.degree_basis(d, cap)


def to_coords(u: Element, d: int) -> tuple[Fraction, ...]:
    return u.to_coords(d)


def from_coords(A: GradedAlgebra, d: int, coords: Sequence) -> Element:
    basis = A.degree_basis(d)
    if len(coords) != len(basis):
        raise ValueError(f"expected {len(basis)} coordinates in degree {d}, got {len(coords)}")
    return Element(A, {m: Q(c) for m, c in zip(basis, coords) if c})


def linear_combination(A: GradedAlgebra, pairs: Iterable[tuple]) -> Element:
    out = A.zero()
    for c, e in pairs:
        out = out + e.scale(c)
    return out
