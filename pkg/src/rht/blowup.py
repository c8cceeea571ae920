"""Projectivization models and blow-up cohomology bookkeeping.

``projectivize`` builds base (x) {x, y} with dx = 0 and
dy = x^k + c_1 x^(k-1) + ... + c_k, whose cohomology is
H*(base)[a] / (a^k + c_1 a^(k-1) + ... + c_k) with a = [x].
The Massey computations on the blown-up manifold are carried out on this
model of the exceptional neighbourhood; lifting the resulting classes to the
blow-up itself is taken from the exact-sequence arguments, not recomputed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cohom import class_of, cohomology, is_exact
from .dga import DGA
from .grade import Element, GeneratorSpec, GradedAlgebra, from_coords
from .massey import MasseyVerdict, triple_massey
from .models import chevalley_eilenberg, embed, kodaira_thurston, vn


class ChernNotClosed(ValueError):
    pass


class ChernWrongDegree(ValueError):
    pass


class BadCodimension(ValueError):
    pass


@dataclass(frozen=True)
class ProjectivizationModel:
    base: DGA
    k: int
    chern: tuple[Element, ...]
    total: DGA

    @property
    def x(self) -> Element:
        return self.total.algebra.gen("x")

    @property
    def y(self) -> Element:
        return self.total.algebra.gen("y")

    def lift(self, u: Element) -> Element:
        """Pull an element of the base back into the total model."""
        return embed(u, self.total.algebra)

    def relation(self) -> Element:
        """x^k + c_1 x^(k-1) + ... + c_k, which equals dy."""
        x = self.x
        out = x ** self.k
        for j, c in enumerate(self.chern, start=1):
            out = out + self.lift(c) * x ** (self.k - j)
        return out


def projectivize(base: DGA, k: int, chern: Sequence[Element | str] | None = None,
                 degree_cap: int | None = None) -> ProjectivizationModel:
    """Model of the CP^(k-1)-bundle over ``base`` with the given Chern classes."""
    if k < 2:
        raise ValueError(f"fiber rank k must be >= 2, got {k}")
    balg = base.algebra
    if chern is None:
        chern = [balg.zero()] * k
    chern = [balg.element(c) if isinstance(c, str) else c for c in chern]
    if len(chern) != k:
        raise ChernWrongDegree(f"expected {k} Chern classes, got {len(chern)}")
    for j, c in enumerate(chern, start=1):
        if c.algebra != balg:
            raise ChernWrongDegree(f"c_{j} does not belong to the base algebra")
        if not c.is_homogeneous(2 * j):
            raise ChernWrongDegree(f"c_{j} = {c} must have degree {2 * j}")
        if not base.differential(c).is_zero():
            raise ChernNotClosed(f"c_{j} = {c} is not closed")
    for name in ("x", "y"):
        if name in balg.names:
            raise ValueError(f"base algebra already has a generator named {name!r}")
    alg = GradedAlgebra(balg.generators + (GeneratorSpec("x", 2), GeneratorSpec("y", 2 * k - 1)))
    if degree_cap is None:
        base_top = balg.top_degree if not balg.has_even else base.degree_cap - 1
        # room for degree-8 Massey products even when the fiber is small
        degree_cap = max(base_top + 2 * k - 1, 9)
    images = {g: embed(e, alg) for g, e in base.as_dict().items()}
    x = alg.gen("x")
    dy = x ** k
    for j, c in enumerate(chern, start=1):
        dy = dy + embed(c, alg) * x ** (k - j)
    images["y"] = dy
    total = DGA(alg, images, degree_cap)
    return ProjectivizationModel(base, k, tuple(chern), total)


def leray_hirsch_betti(base_betti: Sequence[int], k: int, q: int) -> int:
    return sum(base_betti[q - 2 * j] for j in range(k) if 0 <= q - 2 * j < len(base_betti))


@dataclass(frozen=True)
class BlowupBettiProfile:
    N: int
    k: int
    y_betti: tuple[int, ...]
    betti: tuple[int, ...]

    @property
    def euler(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def satisfies_duality(self) -> bool:
        return self.betti == self.betti[::-1]


def blowup_betti(N: int, y_betti: Sequence[int], k: int | None = None) -> BlowupBettiProfile:
    """Betti numbers of CP^N blown up along Y (dim Y = len(y_betti) - 1).

    b_i = b_i(CP^N) + sum_{j=1}^{k-1} b_{i-2j}(Y).
    """
    dim_y = len(y_betti) - 1
    if dim_y % 2:
        raise BadCodimension(f"Y must be even-dimensional, got dimension {dim_y}")
    expected = N - dim_y // 2
    if k is None:
        k = expected
    if k != expected:
        raise BadCodimension(f"k = {k} but N - dim(Y)/2 = {expected}")
    if k < 2:
        raise BadCodimension(f"complex codimension k = {k} must be >= 2")
    betti_out = []
    for i in range(2 * N + 1):
        b = 1 if i % 2 == 0 else 0
        b += sum(y_betti[i - 2 * j] for j in range(1, k) if 0 <= i - 2 * j <= dim_y)
        betti_out.append(b)
    profile = BlowupBettiProfile(N, k, tuple(y_betti), tuple(betti_out))
    euler_y = sum((-1) ** i * b for i, b in enumerate(y_betti))
    assert profile.satisfies_duality()
    assert profile.euler == (N + 1) + (k - 1) * euler_y
    return profile


@dataclass(frozen=True)
class LemmaReport:
    which: int
    target: str
    k: int
    model: ProjectivizationModel
    verdict: MasseyVerdict
    cup_vanishes: bool


def lemma1_check(m: int, k: int, chern: Sequence | None = None) -> LemmaReport:
    """<a x2, a x1, a x2> in degree 8 on the projectivization over CE(V_2m)."""
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    if k < 4:
        raise ValueError(f"k must be >= 4, got {k}")
    P = projectivize(chevalley_eilenberg(vn(2 * m)), k, chern)
    T = P.total
    x, x1, x2 = P.x, T.algebra.gen("x1"), T.algebra.gen("x2")
    u1, u2 = class_of(T, x * x1), class_of(T, x * x2)
    cup_vanishes = is_exact(T, (x * x1) * (x * x2), 6)
    verdict = triple_massey(u2, u1, u2)
    return LemmaReport(1, f"M({2 * m})", k, P, verdict, cup_vanishes)


LEMMA2_TARGETS = {"kt": 1, "m4": 3}


def lemma2_check(target: str, k: int, chern: Sequence | None = None,
                 scale: Fraction | int = 1) -> LemmaReport:
    """<a x2, v, a x2> in degree 7 with v the symplectic class A x1 x4 + x2 x3.

    ``scale`` rescales v; the verdict should not depend on it.
    """
    target = target.lower()
    if target not in LEMMA2_TARGETS:
        raise ValueError(f"target must be one of {sorted(LEMMA2_TARGETS)}, got {target!r}")
    base = kodaira_thurston() if target == "kt" else chevalley_eilenberg(vn(4))
    A = LEMMA2_TARGETS[target]
    P = projectivize(base, k, chern)
    T = P.total
    x, x2 = P.x, T.algebra.gen("x2")
    if not scale:
        raise ValueError("scale must be nonzero")
    v = P.lift(base.algebra.element(f"{A}*x1*x4 + x2*x3")).scale(Fraction(scale))
    u2, vc = class_of(T, x * x2), class_of(T, v)
    cup_vanishes = is_exact(T, (x * x2) * v, 5)
    verdict = triple_massey(u2, vc, u2)
    return LemmaReport(2, target, k, P, verdict, cup_vanishes)


def massey_survives_connected_sum(q: int, dim: int) -> bool:
    """A nontrivial triple product in H^q survives X # X' when q <= dim - 3."""
    return q <= dim - 3


def random_chern_classes(base: DGA, k: int, rng: random.Random, bound: int = 3) -> list[Element]:
    """Random closed classes c_j of degree 2j, from the base's cocycle spaces."""
    out = []
    alg = base.algebra
    for j in range(1, k + 1):
        q = 2 * j
        if q > (alg.top_degree if not alg.has_even else base.degree_cap - 1):
            out.append(alg.zero())
            continue
        Z = cohomology(base, q).cocycles
        c = alg.zero()
        for z in Z.basis:
            t = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
            if t:
                c = c + from_coords(alg, q, z).scale(t)
        out.append(c)
    return out
