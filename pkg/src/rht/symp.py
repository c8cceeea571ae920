"""Symplectic structures on invariant complexes.

Forms on an algebra generated in degree 1 are treated as left-invariant
forms.  A 2-form is stored as ``sum_{i<j} w_ij x_i x_j``; the full
antisymmetric matrix ``W`` carries it, and its inverse ``P`` (``P W = 1``)
gives the pairing of 1-forms ``<x_i, x_j> = P_ij``.  On k-forms the pairing is
the Gram determinant ``<x_I, x_J> = det P[I, J]``, and the star is the unique
operator with ``a ^ *b = <a, b> w^n / n!`` for all k-forms a, b.  With this
normalization ``**`` is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .cohom import CohomClass, betti, class_basis_elements, cohomology, class_of
from .dga import DGA
from .grade import Element, from_coords
from .models import chevalley_eilenberg, cpn, kodaira_thurston, vn
from .qlin import (NO_SOLUTION, Subspace, det, identity, image_basis, inverse, is_zero,
                   kernel_basis, mat_mul, mat_vec, rank, reduce_mod, solve_any)


class DegenerateForm(ValueError):
    pass


class NotInvariantComplex(ValueError):
    pass


def _form_matrix(D: DGA, u: Element) -> tuple:
    alg = D.algebra
    n = len(alg)
    if any(d != 1 for d in alg.degrees):
        raise NotInvariantComplex("symplectic forms need an algebra generated in degree 1")
    if not u.is_homogeneous(2):
        raise ValueError(f"{u} is not a 2-form")
    W = [[Fraction(0)] * n for _ in range(n)]
    for m, c in u.terms.items():
        i, j = [k for k, e in enumerate(m) if e]
        W[i][j] = c
        W[j][i] = -c
    return tuple(tuple(r) for r in W)


@dataclass
class SymplecticForm:
    dga: DGA
    element: Element
    matrix: tuple = field(init=False)
    _star: dict = field(default_factory=dict, init=False, repr=False)
    _pinv: tuple | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        self.matrix = _form_matrix(self.dga, self.element)

    @classmethod
    def from_text(cls, D: DGA, text: str) -> "SymplecticForm":
        return cls(D, D.algebra.element(text))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def half_dim(self) -> int:
        return self.dim // 2

    def is_closed(self) -> bool:
        return self.dga.differential(self.element).is_zero()

    def determinant(self) -> Fraction:
        return det(self.matrix)

    def is_nondegenerate(self) -> bool:
        return self.dim % 2 == 0 and self.determinant() != 0

    def top_power(self) -> Element:
        return self.element ** self.half_dim

    @property
    def poisson(self) -> tuple:
        """Inverse matrix P with P W = 1."""
        if self._pinv is None:
            if not self.is_nondegenerate():
                raise DegenerateForm(f"{self.element} is degenerate")
            self._pinv = inverse(self.matrix)
        return self._pinv

    def pairing(self, a: Element, b: Element, k: int) -> Fraction:
        """<a, b> for k-forms a and b."""
        P = self.poisson
        total = Fraction(0)
        for ma, ca in a.terms.items():
            I = [i for i, e in enumerate(ma) if e]
            for mb, cb in b.terms.items():
                J = [j for j, e in enumerate(mb) if e]
                total += ca * cb * (det([[P[i][j] for j in J] for i in I]) if k else 1)
        return total

    def star_matrix(self, k: int) -> tuple:
        """Matrix of * from degree k to degree dim - k."""
        if k in self._star:
            return self._star[k]
        if not 0 <= k <= self.dim:
            raise ValueError(f"degree {k} outside 0..{self.dim}")
        alg = self.dga.algebra
        n = self.half_dim
        P = self.poisson
        src = alg.degree_basis(k)
        dual = alg.degree_basis(self.dim - k)
        top = alg.degree_basis(self.dim)[0]
        vol = (self.top_power().scale(Fraction(1, factorial(n)))).coefficient(top)
        wedge = []
        for a in src:
            row = []
            for c in dual:
                s, m = alg.mono_mul(a, c)
                row.append(Fraction(s) if s and m == top else Fraction(0))
            wedge.append(row)
        idx = [[i for i, e in enumerate(m) if e] for m in src]
        gram = [[det([[P[i][j] for j in J] for i in I]) if k else Fraction(1) for J in idx] for I in idx]
        winv = inverse(wedge)
        rhs = [[vol * g for g in row] for row in gram]
        S = mat_mul(winv, rhs)  # columns: coordinates of *src[b]
        self._star[k] = S
        return S

    def star(self, u: Element, k: int | None = None) -> Element:
        k = u.degree if k is None else k
        if k is None:
            raise ValueError("star of a mixed or zero element needs an explicit degree")
        v = mat_vec(self.star_matrix(k), u.to_coords(k))
        return from_coords(self.dga.algebra, self.dim - k, v)

    def codifferential(self, u: Element, k: int | None = None) -> Element:
        k = u.degree if k is None else k
        if k is None:
            raise ValueError("codifferential of a mixed or zero element needs an explicit degree")
        if k == 0:
            return self.dga.algebra.zero()
        return self.star(self.dga.differential(self.star(u, k)), self.dim - k + 1)

    def complex(self) -> "SymplecticComplex":
        D = self.dga
        dims = tuple(D.algebra.dim(k) for k in range(self.dim + 1))
        d = {k: D.d_matrix(k) for k in range(self.dim)}
        star = {k: self.star_matrix(k) for k in range(self.dim + 1)}
        return SymplecticComplex(dims, d, star)


@dataclass(frozen=True)
class SymplecticComplex:
    """A finite cochain complex of dimension 2n with a star operator.

    ``d[k]`` maps degree k to k+1 and ``star[k]`` maps degree k to 2n-k.
    """

    dims: tuple
    d: dict
    star: dict

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def d_mat(self, k: int) -> tuple:
        if 0 <= k < self.top:
            return self.d[k]
        rows = self.dims[k + 1] if 0 <= k + 1 <= self.top else 0
        cols = self.dims[k] if 0 <= k <= self.top else 0
        return tuple((Fraction(0),) * cols for _ in range(rows))

    def delta(self, k: int) -> tuple:
        """Matrix of * d * from degree k to degree k-1."""
        if k == 0:
            return ()
        t = self.top - k
        m = mat_mul(self.d_mat(t), self.star[k]) if self.dims[t + 1] else ()
        if not m:
            return tuple((Fraction(0),) * self.dims[k] for _ in range(self.dims[k - 1]))
        return mat_mul(self.star[t + 1], m)

    def apply(self, M, v, rows: int) -> tuple:
        return mat_vec(M, v) if M else (Fraction(0),) * rows

    def cohomology(self, k: int):
        Z = kernel_basis(self.d_mat(k), self.dims[k])
        B = image_basis(self.d_mat(k - 1), self.dims[k - 1]) if k > 0 and self.dims[k - 1] \
            else Subspace.zero(self.dims[k])
        reduced = [reduce_mod(B, z) for z in Z.basis]
        H = Subspace.span(self.dims[k], [r for r in reduced if not is_zero(r)])
        return Z, B, H

    def harmonic_rep(self, a: tuple, k: int):
        """Cocycle a + d(gamma) with delta = 0, or None if no such gamma exists."""
        if k == 0:
            return a
        dk = self.delta(k)
        rhs = tuple(-x for x in self.apply(dk, a, self.dims[k - 1]))
        if not any(rhs):
            return a
        if k - 1 < 0 or not self.dims[k - 1]:
            return None
        dprev = self.d_mat(k - 1)
        M = mat_mul(dk, dprev) if dk and dprev else ()
        if not M:
            return None
        g = solve_any(M, rhs, self.dims[k - 1])
        if g is NO_SOLUTION:
            return None
        return tuple(x + y for x, y in zip(a, self.apply(dprev, g, self.dims[k])))

    def harmonic_classes(self, k: int) -> tuple[int, int]:
        """(dimension of classes with a harmonic representative, betti number)."""
        Z, B, H = self.cohomology(k)
        if k == 0:
            harmonic = Z
        else:
            dk = self.delta(k)
            if not dk:
                harmonic = Z
            else:
                # cocycles z = sum t_i z_i with delta z = 0
                basis = Z.basis
                cols = [mat_vec(dk, z) for z in basis]
                M = tuple(tuple(c[r] for c in cols) for r in range(self.dims[k - 1])) if basis else ()
                ts = kernel_basis(M, len(basis)).basis if basis else ()
                harmonic = Subspace.span(self.dims[k], [
                    tuple(sum((t[i] * basis[i][j] for i in range(len(basis))), Fraction(0))
                          for j in range(self.dims[k])) for t in ts])
        images = [reduce_mod(B, h) for h in harmonic.basis]
        return rank(images) if images else 0, H.dim


def omega_standard(m: int) -> SymplecticForm:
    """(2m-1) x1 x_2m + (2m-3) x2 x_{2m-1} + ... + x_m x_{m+1} on CE(V_2m)."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    D = chevalley_eilenberg(vn(2 * m))
    alg = D.algebra
    u = alg.zero()
    for i in range(1, m + 1):
        u = u + (alg.gen(f"x{i}") * alg.gen(f"x{2 * m + 1 - i}")).scale(2 * m - 2 * i + 1)
    return SymplecticForm(D, u)


def kodaira_thurston_form() -> SymplecticForm:
    D = kodaira_thurston()
    return SymplecticForm.from_text(D, "x1*x4 + x2*x3")


@dataclass(frozen=True)
class LefschetzStep:
    k: int
    source_dim: int
    target_dim: int
    rank: int

    @property
    def iso(self) -> bool:
        return self.rank == self.source_dim == self.target_dim


@dataclass(frozen=True)
class LefschetzReport:
    steps: tuple[LefschetzStep, ...]

    @property
    def passes(self) -> bool:
        return all(s.iso for s in self.steps)


def hard_lefschetz(D: DGA, W: CohomClass, n: int) -> LefschetzReport:
    """Ranks of cup with [W]^k from H^{n-k} to H^{n+k}, k = 0..n."""
    if W.degree != 2:
        raise ValueError("the Lefschetz class must have degree 2")
    D.check_cap(2 * n + 1)
    w = W.representative
    steps = []
    for k in range(n + 1):
        src = class_basis_elements(D, n - k)
        tgt = cohomology(D, n + k)
        wk = w ** k
        cols = [tgt.class_coords((z.representative * wk).to_coords(n + k)) for z in src]
        steps.append(LefschetzStep(k, len(src), tgt.betti, rank(cols) if cols else 0))
    return LefschetzReport(tuple(steps))


def is_harmonic(F: SymplecticForm, u: Element, k: int | None = None) -> bool:
    return F.dga.differential(u).is_zero() and F.codifferential(u, k).is_zero()


def codifferential(F: SymplecticForm, u: Element, k: int | None = None) -> Element:
    return F.codifferential(u, k)


def symplectic_star(F: SymplecticForm, u: Element, k: int | None = None) -> Element:
    return F.star(u, k)


def class_has_harmonic_rep(F: SymplecticForm, A: CohomClass) -> tuple[bool, Element | None]:
    """Whether some a + d(gamma) in the class is harmonic; returns the witness."""
    cx = F.complex()
    k = A.degree
    rep = cx.harmonic_rep(A.representative.to_coords(k), k)
    if rep is None:
        return False, None
    return True, from_coords(F.dga.algebra, k, rep)


def harmonic_report(F: SymplecticForm) -> list[dict]:
    cx = F.complex()
    out = []
    for k in range(F.dim + 1):
        rep, total = cx.harmonic_classes(k)
        out.append({"degree": k, "representable": rep, "total": total})
    return out


def cohomology_ring_complex(D: DGA, w: Element, n: int) -> SymplecticComplex:
    """The cohomology algebra with zero differential, as a finite model.

    Used for formal models with no invariant-form realization (the CP^m
    models): the star comes from the Lefschetz decomposition, and delta
    vanishes identically because d does.
    """
    W = class_of(D, w, 2)
    report = hard_lefschetz(D, W, n)
    if not report.passes:
        raise ValueError("Lefschetz star needs the Hard Lefschetz property")
    dims = tuple(betti(D, k) for k in range(2 * n + 1))
    d = {k: tuple((Fraction(0),) * dims[k] for _ in range(dims[k + 1])) for k in range(2 * n)}
    star = {k: _lefschetz_star(D, W, n, k, dims) for k in range(2 * n + 1)}
    return SymplecticComplex(dims, d, star)


def _lefschetz_star(D: DGA, W: CohomClass, n: int, k: int, dims: tuple) -> tuple:
    """*(L^r a) = (-1)^{s(s+1)/2} r!/(n-s-r)! L^{n-s-r} a for a primitive of degree s."""
    if not dims[k]:
        return tuple(() for _ in range(dims[2 * n - k]))
    w = W.representative
    # decompose H^k = sum_r L^r P^{k-2r}; primitive P^s = ker L^{n-s+1} on H^s
    pieces = []  # (coords in H^k, coords of its star in H^{2n-k})
    tgt = cohomology(D, 2 * n - k)
    for r in range(k // 2 + 1):
        s = k - 2 * r
        if s > n or n - s - r < 0:
            continue
        src = class_basis_elements(D, s)
        hk = cohomology(D, s + 2 * (n - s + 1)) if s + 2 * (n - s + 1) <= 2 * n else None
        if hk is not None and src:
            M = [hk.class_coords((z.representative * w ** (n - s + 1)).to_coords(s + 2 * (n - s + 1)))
                 for z in src]
            M = tuple(tuple(col[i] for col in M) for i in range(hk.betti))
            prim = kernel_basis(M, len(src)).basis if M else identity(len(src))
        else:
            prim = identity(len(src))
        sign = -1 if (s * (s + 1) // 2) % 2 else 1
        coef = Fraction(sign * factorial(r), factorial(n - s - r))
        for t in prim:
            a = sum((z.representative.scale(c) for z, c in zip(src, t) if c), D.algebra.zero())
            lhs = cohomology(D, k).class_coords((a * w ** r).to_coords(k))
            rhs = tgt.class_coords((a * w ** (n - s - r)).scale(coef).to_coords(2 * n - k))
            pieces.append((lhs, rhs))
    L = tuple(tuple(p[0][i] for p in pieces) for i in range(dims[k]))
    R = tuple(tuple(p[1][i] for p in pieces) for i in range(dims[2 * n - k]))
    return mat_mul(R, inverse(L))


@dataclass(frozen=True)
class MathieuEvidence:
    lefschetz: bool
    harmonic_all: bool
    lefschetz_report: LefschetzReport
    harmonic: tuple


def mathieu_evidence(F: SymplecticForm) -> MathieuEvidence:
    """(Hard Lefschetz, every class harmonic) on an invariant complex."""
    D = F.dga
    lef = hard_lefschetz(D, class_of(D, F.element, 2), F.half_dim)
    harm = tuple(harmonic_report(F))
    return MathieuEvidence(lef.passes, all(h["representable"] == h["total"] for h in harm), lef, harm)


def mathieu_evidence_cpn(m: int) -> MathieuEvidence:
    D = cpn(m)
    x = D.algebra.gen("x")
    lef = hard_lefschetz(D, class_of(D, x, 2), m)
    if not lef.passes:
        return MathieuEvidence(False, False, lef, ())
    cx = cohomology_ring_complex(D, x, m)
    harm = []
    for k in range(2 * m + 1):
        rep, total = cx.harmonic_classes(k)
        harm.append({"degree": k, "representable": rep, "total": total})
    return MathieuEvidence(True, all(h["representable"] == h["total"] for h in harm), lef, tuple(harm))
