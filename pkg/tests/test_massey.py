import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracle import CE, HEISENBERG, vn_brackets, massey_nontrivial
from rht.cohom import class_of, cohomology
from rht.grade import from_coords
from rht.massey import BadPrimitive, formality_scan, massey_of_elements, triple_massey
from rht.models import abelian, chevalley_eilenberg, heisenberg, kodaira_thurston, vn
from rht.qlin import reduce_mod

HEIS = chevalley_eilenberg(heisenberg())


def perturb(D, v, rng):
    """Same triple with primitives shifted by random cocycles."""
    g, h = v.primitives
    A, B, C = v.classes
    out = []
    for prim, deg in ((g, A.degree + B.degree - 1), (h, B.degree + C.degree - 1)):
        Z = cohomology(D, deg).cocycles
        shift = from_coords(D.algebra, deg, [0] * D.algebra.dim(deg))
        for z in Z.basis:
            shift = shift + from_coords(D.algebra, deg, z).scale(F(rng.randint(-4, 4), rng.randint(1, 3)))
        out.append(prim + shift)
    return triple_massey(A, B, C, primitives=tuple(out))


def test_heisenberg_triple():
    v = massey_of_elements(HEIS, *(HEIS.algebra.element(t) for t in ("x1", "x1", "x2")))
    assert v.defined and v.nontrivial and v.degree == 2
    assert str(v.representative) == "x1*x3"
    assert massey_nontrivial(CE(3, HEISENBERG), {1: 1}, {1: 1}, {2: 1})


@pytest.mark.parametrize("m", [2, 3, 4])
def test_vn_triple_matches_oracle(m):
    D = chevalley_eilenberg(vn(2 * m))
    e = D.algebra.element
    v = massey_of_elements(D, e("x2"), e("x1"), e("x2"))
    assert v.nontrivial
    assert v.nontrivial == massey_nontrivial(CE(2 * m, vn_brackets(2 * m)), {2: 1}, {1: 1}, {2: 1})


def test_undefined_when_cup_nonzero():
    D = kodaira_thurston()
    e = D.algebra.element
    v = massey_of_elements(D, e("x1"), e("x4"), e("x1"))
    assert not v.defined and "[a][b]" in v.reason


def test_abelian_has_no_obstruction():
    assert formality_scan(chevalley_eilenberg(abelian(3))) == []


def test_scan_hits_are_nontrivial_for_oracle():
    ce = CE(3, HEISENBERG)
    for v in formality_scan(HEIS):
        a, b, c = (cl.representative for cl in v.classes)
        to_mask = lambda u: {sum(1 << i for i, e in enumerate(m) if e): c for m, c in u.terms.items()}
        assert massey_nontrivial(ce, to_mask(a), to_mask(b), to_mask(c))


def test_bad_primitive_rejected():
    A = class_of(HEIS, HEIS.algebra.gen("x1"))
    C = class_of(HEIS, HEIS.algebra.gen("x2"))
    with pytest.raises(BadPrimitive):
        triple_massey(A, A, C, primitives=(HEIS.algebra.gen("x3"), HEIS.algebra.gen("x3")))


@pytest.mark.parametrize("D", [HEIS] + [chevalley_eilenberg(vn(2 * m)) for m in (2, 3, 4)],
                         ids=["heis", "vn4", "vn6", "vn8"])
def test_stable_under_primitive_perturbation(D):
    rng = random.Random(11)
    hits = formality_scan(D, 3)
    assert hits
    v = hits[0]
    for _ in range(20):
        w = perturb(D, v, rng)
        assert D.differential(w.representative).is_zero()
        assert w.nontrivial == v.nontrivial
        assert w.residue() == v.residue()


@given(st.fractions(min_value=-5, max_value=5, max_denominator=5).filter(bool))
def test_linearity_in_first_slot(lam):
    D = chevalley_eilenberg(vn(6))
    e = D.algebra.element
    A, B, C = (class_of(D, e(t)) for t in ("x2", "x1", "x2"))
    base = triple_massey(A, B, C)
    scaled = triple_massey(A.scale(lam), B, C)
    assert scaled.nontrivial == base.nontrivial
    space = cohomology(D, base.degree)
    c0 = space.class_coords(base.representative.to_coords(base.degree))
    c1 = space.class_coords(scaled.representative.to_coords(base.degree))
    diff = [y - lam * x for x, y in zip(c0, c1)]
    assert not any(reduce_mod(base.indeterminacy, diff))
