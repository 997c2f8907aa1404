import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from genusforms.errors import DegenerateDisc, WrongDiscSign
from genusforms.forms import FLIP, Mat2, QuadForm, act, apply_chain, discriminant, is_primitive, principal_form
from genusforms.algebra import ext_gcd
from genusforms.reduction import (
    DiscKind,
    canonical_class_rep,
    classify_disc,
    gauss_reduce,
    is_equivalent_to_principal,
    is_reduced_indef,
    is_reduced_posdef,
    principal_equivalence,
    reduce_indef,
    reduce_indef_cycle,
    reduce_posdef,
    reduced_forms,
    rho,
)

from oracles import represents_unit


@st.composite
def unimodular(draw):
    x, y = draw(st.integers(-40, 40)), draw(st.integers(-40, 40))
    assume(x or y)
    g, r1, r2 = ext_gcd(x, y)
    assume(g == 1)
    M = Mat2(x, -r2, y, r1)
    return M if draw(st.booleans()) else M @ FLIP


@st.composite
def indefinite(draw):
    a = draw(st.integers(-50, 50).filter(bool))
    b = draw(st.integers(-50, 50))
    c = draw(st.integers(-50, 50).filter(bool))
    q = QuadForm(a, b, c)
    d = discriminant(q)
    assume(d > 0 and math.isqrt(d) ** 2 != d)
    return q


@st.composite
def definite(draw):
    a = draw(st.integers(1, 60))
    b = draw(st.integers(-60, 60))
    c = draw(st.integers(1, 60))
    q = QuadForm(a, b, c)
    assume(discriminant(q) < 0)
    return q if draw(st.booleans()) else act(FLIP, q)


def test_classify_disc():
    assert classify_disc(0).kind is DiscKind.ZERO
    assert classify_disc(-3).kind is DiscKind.NEG_DEF
    assert classify_disc(60).kind is DiscKind.POS_NONSQUARE
    c = classify_disc(36)
    assert c.kind is DiscKind.PERFECT_SQUARE and c.root == 6


def test_gauss_examples():
    assert reduce_posdef(QuadForm(6, 8, 5)) == QuadForm(3, -2, 5)
    assert reduce_posdef(QuadForm(-2, 0, -7)) == QuadForm(2, 0, 7)
    assert reduced_forms(-56) == [QuadForm(1, 0, 14), QuadForm(2, 0, 7), QuadForm(3, -2, 5), QuadForm(3, 2, 5)]
    assert len(reduced_forms(-23)) == 3
    with pytest.raises(WrongDiscSign):
        gauss_reduce(QuadForm(1, 0, -2))


@given(definite())
def test_gauss_reduce_is_reduced_and_replays(q):
    r, steps = gauss_reduce(q)
    assert is_reduced_posdef(r)
    assert apply_chain(steps, q) == r


@given(definite(), unimodular())
def test_gauss_canonical_on_orbit(q, M):
    assert reduce_posdef(act(M, q)) == reduce_posdef(q)


def test_indefinite_examples():
    assert reduce_indef_cycle(QuadForm(1, 0, -15)) == [QuadForm(1, 6, -6), QuadForm(-6, 6, 1)]
    assert reduce_indef_cycle(QuadForm(2, 6, -3)) == [QuadForm(2, 6, -3), QuadForm(-3, 6, 2)]
    assert is_reduced_indef(QuadForm(2, 6, -3))
    assert rho(QuadForm(2, 6, -3)) == QuadForm(-3, 6, 2)
    with pytest.raises(WrongDiscSign):
        reduce_indef(QuadForm(1, 0, 1))


@given(indefinite())
def test_indefinite_reduction_replays(q):
    r, steps = reduce_indef(q)
    assert is_reduced_indef(r)
    assert apply_chain(steps, q) == r
    cyc = reduce_indef_cycle(q)
    assert all(is_reduced_indef(c) for c in cyc)
    assert rho(cyc[-1]) == cyc[0]


@given(indefinite(), unimodular())
def test_canonical_rep_is_class_invariant(q, M):
    assert canonical_class_rep(act(M, q)) == canonical_class_rep(q)


@given(st.integers(2, 3000), unimodular())
def test_moved_principal_is_trivial(F, M):
    assume(math.isqrt(F) ** 2 != F)
    q = act(M, principal_form(4 * F))
    chain = principal_equivalence(q)
    assert chain is not None
    assert apply_chain(chain, q) == principal_form(4 * F)


@given(st.one_of(definite(), indefinite()))
def test_equivalence_witness_or_no_unit_representation(q):
    assume(is_primitive(q))
    chain = principal_equivalence(q)
    if chain is not None:
        assert apply_chain(chain, q) == principal_form(discriminant(q))
    elif discriminant(q) < 0:
        # a definite form equivalent to the principal one represents +-1 within its reduction box
        r = reduce_posdef(q)
        assert r.a != 1


@pytest.mark.parametrize("n", range(2, 40))
def test_fixture_specializations_agree_with_unit_search(n):
    f = n**3 - n + 9
    assume_nonsquare = math.isqrt(f) ** 2 != f
    if not assume_nonsquare:
        pytest.skip("degenerate value")
    q = QuadForm(n, 6, 1 - n * n)
    chain = principal_equivalence(q)
    if represents_unit(*q, box=60):
        assert chain is not None
    if chain is not None:
        assert apply_chain(chain, q) == principal_form(4 * f)


def test_genus_but_not_class():
    assert not is_equivalent_to_principal(QuadForm(2, 0, 7))
    assert not is_equivalent_to_principal(QuadForm(2, 6, -3))
    assert is_equivalent_to_principal(QuadForm(-1, 0, 15))
    with pytest.raises(DegenerateDisc):
        principal_equivalence(QuadForm(1, 0, -9))
