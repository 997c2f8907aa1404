from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from genusforms.algebra import Poly, SRing, X, ext_gcd
from genusforms.errors import BadParity, DiscMismatch, NonUnitDet, NotPrimitive
from genusforms.forms import (
    FLIP,
    SWAP,
    Mat2,
    QuadForm,
    act,
    apply_chain,
    chain_product,
    compose,
    content,
    coprime_representative,
    dirichlet_compose,
    discriminant,
    inverse,
    is_primitive,
    normalize_middle,
    power,
    principal_form,
    translation,
)
from genusforms.reduction import canonical_class_rep

coef = st.integers(-60, 60)
forms = st.builds(QuadForm, coef, coef, coef)


@st.composite
def unimodular(draw):
    x, y = draw(st.integers(-30, 30)), draw(st.integers(-30, 30))
    assume(x or y)
    g, r1, r2 = ext_gcd(x, y)
    assume(g == 1)
    M = Mat2(x, -r2, y, r1)
    return M if draw(st.booleans()) else M @ FLIP


@st.composite
def primitive_pair(draw):
    # two primitive forms of a common negative discriminant
    disc = -draw(st.integers(3, 400))
    assume(disc % 4 in (0, 1))
    from genusforms.reduction import reduced_forms

    fs = reduced_forms(disc)
    return draw(st.sampled_from(fs)), draw(st.sampled_from(fs))


@given(forms, unimodular())
def test_discriminant_invariant(q, M):
    assert discriminant(act(M, q)) == discriminant(q)


@given(forms, unimodular(), unimodular())
def test_action_order(q, M, N):
    assert act(M, act(N, q)) == act(N @ M, q)
    assert apply_chain([N, M], q) == act(chain_product([N, M]), q)


@given(forms, unimodular())
def test_inverse_matrix_undoes(q, M):
    assert act(M.inverse(), act(M, q)) == q


def test_named_matrices():
    q = QuadForm(2, 3, 5)
    assert act(FLIP, q) == QuadForm(-2, 3, -5)
    assert act(SWAP, q) == QuadForm(5, -3, 2)
    assert act(translation(1), q) == QuadForm(2, 7, 10)
    with pytest.raises(NonUnitDet):
        act(Mat2(2, 0, 0, 1), q)


def test_s_unit_determinant():
    S = SRing((2,))
    q = QuadForm(1, 0, 14)
    r = act(Mat2(2, 0, 0, 1), q, S)
    assert r == QuadForm(2, 0, 7)
    assert discriminant(r) == -56


def test_principal_form():
    assert principal_form(-56) == QuadForm(1, 0, 14)
    assert principal_form(-23) == QuadForm(1, 1, 6)
    assert principal_form(60, 0) == QuadForm(1, 0, -15)
    with pytest.raises(BadParity):
        principal_form(-23, 0)
    f = X**3 - X + 9
    assert principal_form(4 * f) == QuadForm(Poly(1), Poly(), -f)


def test_primitivity():
    assert is_primitive(QuadForm(2, 0, 7))
    assert not is_primitive(QuadForm(2, 4, 6))
    assert content(QuadForm(2, 4, 6)) == 2
    assert is_primitive(QuadForm(2, 4, 6), SRing((2,)))
    assert is_primitive(QuadForm(X, 6, -(X**2) + 1))
    assert not is_primitive(QuadForm(X, 2 * X, X**2))


def test_coprime_representative_examples():
    q2, M = coprime_representative(QuadForm(3, 2, 5), 3)
    assert q2 == QuadForm(5, -2, 3) and M == SWAP
    q = QuadForm(X, 6, -(X**2) + 1)
    assert coprime_representative(q, X**3 - X + 9)[0] == q
    q0 = QuadForm(0, 6, 1)
    r, M = coprime_representative(q0, 60)
    assert r == act(M, q0) and r.a and ext_gcd(r.a, 15)[0] == 1


@given(forms, st.integers(2, 5000))
def test_coprime_representative_property(q, h):
    assume(is_primitive(q) and discriminant(q) != 0)
    r, M = coprime_representative(q, h)
    assert M.det() == 1 and act(M, q) == r
    assert ext_gcd(r.a, h)[0] == 1


def test_dirichlet_and_compose():
    q, r1, r2 = dirichlet_compose(QuadForm(2, 0, 7), QuadForm(3, 2, 5))
    assert 2 * r1 + 3 * r2 == 1
    assert q.a == 6 and discriminant(q) == -56
    assert compose(QuadForm(2, 0, 7), QuadForm(3, 2, 5)) == QuadForm(6, -4, 3)
    # [6, -4, 3] and [6, 8, 5] differ by a translation
    assert act(translation(1), QuadForm(6, -4, 3)) == QuadForm(6, 8, 5)
    with pytest.raises(DiscMismatch):
        compose(QuadForm(1, 0, 1), QuadForm(1, 0, 2))
    with pytest.raises(NotPrimitive):
        compose(QuadForm(2, 0, 2), QuadForm(1, 0, 4))


@given(primitive_pair())
def test_compose_commutative_and_identity(pair):
    q1, q2 = pair
    e = principal_form(discriminant(q1))
    assert canonical_class_rep(compose(q1, q2)) == canonical_class_rep(compose(q2, q1))
    assert canonical_class_rep(compose(q1, e)) == canonical_class_rep(q1)
    assert canonical_class_rep(compose(q1, inverse(q1))) == canonical_class_rep(e)


@given(primitive_pair(), st.data())
def test_compose_associative(pair, data):
    q1, q2 = pair
    from genusforms.reduction import reduced_forms

    q3 = data.draw(st.sampled_from(reduced_forms(discriminant(q1))))
    c = canonical_class_rep
    assert c(compose(c(compose(q1, q2)), q3)) == c(compose(q1, c(compose(q2, q3))))


@given(primitive_pair(), st.integers(-6, 6))
def test_power_matches_repeated_composition(pair, k):
    q, _ = pair
    c = canonical_class_rep
    acc = principal_form(discriminant(q))
    step = q if k >= 0 else inverse(q)
    for _ in range(abs(k)):
        acc = c(compose(acc, step))
    assert c(power(q, k, reduce=c)) == c(acc)


def test_normalize_middle():
    q, M = normalize_middle(QuadForm(6, 8, 5))
    assert q == QuadForm(6, -4, 3) and act(M, QuadForm(6, 8, 5)) == q
    p, _ = normalize_middle(QuadForm(X, 2 * X**2 + 6, X**3 + 12 * X - X**2 + 1))
    assert p.b.deg < p.a.deg


def test_poly_composition(q_fixture):
    e = principal_form(4 * (X**3 - X + 9))
    assert compose(e, q_fixture) == q_fixture
    sq = compose(q_fixture, q_fixture)
    assert sq == QuadForm(-(X**3) + X, -12 * X**2 + 6, -36 * X + 1)
    assert discriminant(sq) == discriminant(q_fixture)


def test_rational_coefficients():
    q = QuadForm(Fraction(1, 2), 1, Fraction(-3, 2))
    assert discriminant(q) == 4
    assert QuadForm(Fraction(4, 2), 0, 7) == QuadForm(2, 0, 7)
