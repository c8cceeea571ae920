"""Nilpotent Lie algebras, their Chevalley-Eilenberg DGAs, and the other
explicit model families (projective spaces, circle factors, tori).

Convention for the CE differential: if ``[e_i, e_j] = sum_k c^{ij}_k e_k``
then ``d x_k = sum_{i<j} c^{ij}_k x_i x_j``.  With this normalization the
Heisenberg algebra gives ``d x3 = x1 x2`` and V_5 gives
``d x5 = 3 x1 x4 + x2 x3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from .dga import DGA
from .grade import Element, GeneratorSpec, GradedAlgebra
from .qlin import Q


class JacobiFailure(ValueError):
    pass


class BadDimension(ValueError):
    pass


@dataclass(frozen=True)
class LieAlgebra:
    """Basis e_1..e_dim; ``brackets[(i, j)] = {k: c}`` for i < j (1-based)."""

    dim: int
    brackets: tuple = ()  # sorted tuple of ((i, j), ((k, c), ...))

    @classmethod
    def from_table(cls, dim: int, table: Mapping[tuple[int, int], Mapping[int, object]]) -> "LieAlgebra":
        norm: dict = {}
        for (i, j), terms in table.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise BadDimension(f"bracket index ({i}, {j}) out of range 1..{dim}")
            if i == j:
                if any(Q(c) for c in terms.values()):
                    raise ValueError(f"[e{i}, e{i}] must vanish")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            slot = norm.setdefault((i, j), {})
            for k, c in terms.items():
                if not 1 <= k <= dim:
                    raise BadDimension(f"bracket target e{k} out of range 1..{dim}")
                slot[k] = slot.get(k, Fraction(0)) + sign * Q(c)
        items = []
        for key in sorted(norm):
            terms = tuple(sorted((k, c) for k, c in norm[key].items() if c))
            if terms:
                items.append((key, terms))
        return cls(dim, tuple(items))

    def bracket_table(self) -> dict:
        return {key: dict(terms) for key, terms in self.brackets}

    def bracket(self, u, v) -> list[Fraction]:
        """Bracket of two coordinate vectors (length dim, 0-based)."""
        out = [Fraction(0)] * self.dim
        for (i, j), terms in self.brackets:
            a = u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]
            if a:
                for k, c in terms:
                    out[k - 1] += a * c
        return out

    def basis_vector(self, i: int) -> list[Fraction]:
        v = [Fraction(0)] * self.dim
        v[i - 1] = Fraction(1)
        return v


@dataclass(frozen=True)
class JacobiResult:
    ok: bool
    witness: tuple[int, int, int] | None = None
    value: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def jacobi_check(L: LieAlgebra) -> JacobiResult:
    """Cyclic Jacobi sum over all i < j < k, by direct evaluation."""
    e = [None] + [L.basis_vector(i) for i in range(1, L.dim + 1)]
    for i, j, k in combinations(range(1, L.dim + 1), 3):
        s1 = L.bracket(L.bracket(e[i], e[j]), e[k])
        s2 = L.bracket(L.bracket(e[j], e[k]), e[i])
        s3 = L.bracket(L.bracket(e[k], e[i]), e[j])
        total = [a + b + c for a, b, c in zip(s1, s2, s3)]
        if any(total):
            return JacobiResult(False, (i, j, k), tuple(total))
    return JacobiResult(True)


def vn(n: int) -> LieAlgebra:
    """Truncated Witt algebra: [e_i, e_j] = (j - i) e_{i+j} for i + j <= n."""
    if n < 3:
        raise BadDimension(f"V_n needs n >= 3, got {n}")
    table = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if i + j <= n:
                table[(i, j)] = {i + j: j - i}
    return LieAlgebra.from_table(n, table)


def heisenberg() -> LieAlgebra:
    return vn(3)


def abelian(n: int) -> LieAlgebra:
    if n < 1:
        raise BadDimension(f"abelian algebra needs n >= 1, got {n}")
    return LieAlgebra(n)


def chevalley_eilenberg(L: LieAlgebra, check: bool = True, prefix: str = "x") -> DGA:
    """CE complex on degree-1 generators x_1..x_n with weight i on x_i.

    With ``check=False`` the Jacobi test is skipped and the DGA is built
    unvalidated, so that ``validate()`` can be exercised on broken tables.
    """
    if check:
        res = jacobi_check(L)
        if not res:
            raise JacobiFailure(f"Jacobi identity fails on e{res.witness}")
    alg = GradedAlgebra(tuple(GeneratorSpec(f"{prefix}{i}", 1, i) for i in range(1, L.dim + 1)))
    x = alg.gens()
    images = {name: alg.zero() for name in alg.names}
    for (i, j), terms in L.brackets:
        prod = x[i - 1] * x[j - 1]
        for k, c in terms:
            images[f"{prefix}{k}"] = images[f"{prefix}{k}"] + prod.scale(c)
    return DGA(alg, images, validate=check)


def tensor_with_circle(D: DGA, name: str | None = None) -> DGA:
    """Adjoin one closed degree-1 generator (the model of D x S^1)."""
    alg = D.algebra
    if name is None:
        name = f"x{len(alg) + 1}"
        while name in alg.names:
            name = name + "'"
    weight = 1 if alg.weighted else None
    new = GradedAlgebra(alg.generators + (GeneratorSpec(name, 1, weight),))
    images = {g: embed(e, new) for g, e in D.as_dict().items()}
    cap = D.degree_cap + 1 if alg.has_even else None
    return DGA(new, images, cap)


def kodaira_thurston() -> DGA:
    """Model of (Heisenberg nilmanifold) x S^1 on x1..x4; x4 is the circle."""
    return tensor_with_circle(chevalley_eilenberg(heisenberg()))


def cpn(m: int, degree_cap: int | None = None) -> DGA:
    """Minimal model of CP^m: x in degree 2, y in degree 2m+1, dy = x^(m+1)."""
    if m < 1:
        raise BadDimension(f"CP^m needs m >= 1, got {m}")
    alg = GradedAlgebra.of(("x", 2), ("y", 2 * m + 1))
    x = alg.gen("x")
    return DGA(alg, {"y": x ** (m + 1)}, degree_cap if degree_cap is not None else 4 * m + 2)


def point() -> DGA:
    return DGA(GradedAlgebra(()), {})


def embed(u, target: GradedAlgebra):
    """Map an element into an algebra containing its generators by name."""
    src = u.algebra
    idx = [target.index(n) for n in src.names]
    out = {}
    for m, c in u.terms.items():
        mm = [0] * len(target)
        for i, e in zip(idx, m):
            mm[i] = e
        out[tuple(mm)] = c
    # order-preserving embeddings need no Koszul signs
    if idx != sorted(idx):
        result = target.zero()
        for m, c in u.terms.items():
            term = target.scalar(c)
            for i, e in zip(idx, m):
                if e:
                    term = term * target.gen(i) ** e
            result = result + term
        return result
    return Element(target, out)
