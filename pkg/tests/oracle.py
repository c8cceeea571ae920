"""Independent reference computations for Chevalley-Eilenberg complexes.

Written against bitmask monomials and a separate Gaussian elimination so that
it shares no code with the package under test.
"""

from fractions import Fraction
from itertools import combinations


def wedge_mask(a: int, b: int) -> tuple[int, int]:
    """Sign and mask of e_a ^ e_b (0 sign when they overlap)."""
    if a & b:
        return 0, 0
    swaps = 0
    for bit in range(b.bit_length()):
        if b >> bit & 1:
            swaps += bin(a >> (bit + 1)).count("1")
    return (-1 if swaps % 2 else 1), a | b


def wedge(u: dict, v: dict) -> dict:
    out: dict = {}
    for ma, ca in u.items():
        for mb, cb in v.items():
            s, m = wedge_mask(ma, mb)
            if s:
                out[m] = out.get(m, 0) + s * ca * cb
    return {m: c for m, c in out.items() if c}


class CE:
    """CE complex of a Lie algebra with [e_i, e_j] = sum c e_k (1-based, i < j)."""

    def __init__(self, dim: int, brackets: dict):
        self.n = dim
        self.dgen = {}
        for k in range(1, dim + 1):
            img = {}
            for (i, j), terms in brackets.items():
                c = Fraction(terms.get(k, 0))
                if c:
                    mask = (1 << (i - 1)) | (1 << (j - 1))
                    img[mask] = img.get(mask, 0) + c
            self.dgen[k - 1] = img

    def basis(self, q):
        return [sum(1 << i for i in c) for c in combinations(range(self.n), q)]

    def d(self, u: dict) -> dict:
        out: dict = {}
        for mask, c in u.items():
            bits = [i for i in range(self.n) if mask >> i & 1]
            for t, i in enumerate(bits):
                left = sum(1 << b for b in bits[:t])
                right = sum(1 << b for b in bits[t + 1:])
                term = wedge(wedge({left: (-1) ** t * c}, self.dgen[i]), {right: 1})
                for m, v in term.items():
                    out[m] = out.get(m, 0) + v
        return {m: c for m, c in out.items() if c}

    def matrix(self, q):
        src, dst = self.basis(q), self.basis(q + 1)
        idx = {m: r for r, m in enumerate(dst)}
        M = [[Fraction(0)] * len(src) for _ in dst]
        for col, m in enumerate(src):
            for mm, c in self.d({m: Fraction(1)}).items():
                M[idx[mm]][col] = Fraction(c)
        return M

    def betti(self, q):
        if q < 0 or q > self.n:
            return 0
        return len(self.basis(q)) - rank(self.matrix(q)) - (rank(self.matrix(q - 1)) if q else 0)


def rank(M) -> int:
    rows = [list(r) for r in M]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def in_span(vectors, v) -> bool:
    return rank(vectors + [v]) == rank(vectors) if vectors else not any(v)


def solve(M, b):
    """Any x with Mx = b via augmented elimination, or None."""
    rows = [list(r) + [bb] for r, bb in zip(M, b)]
    ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [x / rows[r][c] for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return x


def to_vec(ce: CE, u: dict, q: int):
    return [Fraction(u.get(m, 0)) for m in ce.basis(q)]


def from_vec(ce: CE, x, q: int) -> dict:
    return {m: c for m, c in zip(ce.basis(q), x) if c}


def cocycles(ce: CE, q: int):
    """Kernel basis of d on degree q, as dicts."""
    basis = ce.basis(q)
    if q >= ce.n:
        return [{m: Fraction(1)} for m in basis]
    M = ce.matrix(q)
    out = []
    # brute-force kernel by solving with unit right-hand sides removed
    aug = [[M[r][c] for r in range(len(M))] for c in range(len(basis))]
    for c in range(len(basis)):
        prefix = aug[:c]
        if in_span(prefix, aug[c]) if prefix else not any(aug[c]):
            # column c depends on earlier ones: build the kernel vector
            A = [[aug[j][r] for j in range(c)] for r in range(len(M))]
            coeffs = solve(A, [-x for x in aug[c]]) if c else []
            vec = {basis[j]: coeffs[j] for j in range(c) if coeffs[j]}
            vec[basis[c]] = Fraction(1)
            out.append(vec)
    return out


def massey_nontrivial(ce: CE, a: dict, b: dict, c: dict, p=1, q=1, r=1) -> bool:
    """<a, b, c> is nonzero modulo B + a Z + Z c (assumes ab, bc exact)."""
    ab, bc = wedge(a, b), wedge(b, c)
    g = solve(ce.matrix(p + q - 1), to_vec(ce, ab, p + q))
    h = solve(ce.matrix(q + r - 1), to_vec(ce, bc, q + r))
    assert g is not None and h is not None
    g, h = from_vec(ce, g, p + q - 1), from_vec(ce, h, q + r - 1)
    sign = 1 if (p - 1) % 2 == 0 else -1
    k = wedge(g, c)
    for m, v in wedge(a, h).items():
        k[m] = k.get(m, 0) + sign * v
    n = p + q + r - 1
    M = ce.matrix(n - 1)
    span = [[M[i][j] for i in range(len(M))] for j in range(len(M[0]))] if M else []
    span += [to_vec(ce, wedge(a, z), n) for z in cocycles(ce, q + r - 1)]
    span += [to_vec(ce, wedge(z, c), n) for z in cocycles(ce, p + q - 1)]
    return not in_span(span, to_vec(ce, k, n))


def vn_brackets(n: int) -> dict:
    return {(i, j): {i + j: j - i} for i in range(1, n + 1) for j in range(i + 1, n + 1) if i + j <= n}


HEISENBERG = {(1, 2): {3: 1}}
KT = {(1, 2): {3: 1}}  # 4-dimensional, e4 central
