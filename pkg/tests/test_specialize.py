import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genusforms.algebra import SRing, X
from genusforms.errors import ImprimitiveSpecialization, NotFound, NotSIntegral
from genusforms.forms import QuadForm, apply_chain, compose, discriminant, principal_form
from genusforms.jacobian import Curve, mumford_to_form, point_divisor
from genusforms.reduction import canonical_class_rep, is_equivalent_to_principal
from genusforms.specialize import (
    Classification,
    Method,
    classify_specialization,
    empirical_density,
    eval_form,
    find_criterion,
    is_degenerate_value,
    sieve,
)

# n in [1, 100] whose specialization is equivalent to the principal form; every
# entry carries a replayed matrix chain, see test_trivial_cells_replay
TRIVIAL_1_100 = [
    3, 4, 5, 6, 8, 10, 11, 13, 15, 16, 18, 19, 20, 21, 23, 24, 25, 28, 29, 31, 33, 34,
    39, 41, 44, 51, 53, 54, 55, 58, 59, 64, 65, 66, 71, 73, 75, 85, 89, 93, 94, 95, 96,
]


@pytest.fixture(scope="module")
def cells(q_fixture):
    return sieve(q_fixture, 1, 100)


def test_eval_form(q_fixture, curve1):
    assert eval_form(q_fixture, 2) == QuadForm(2, 6, -3)
    assert discriminant(eval_form(q_fixture, 2)) == 60
    assert eval_form(q_fixture, 0) == QuadForm(0, 6, 1)
    assert eval_form(curve1.principal(), 7) == QuadForm(1, 0, -(7**3 - 7 + 9))


def test_eval_form_errors():
    q = QuadForm(X / 5, 6, -(X**2) * 5 + 1)
    with pytest.raises(NotSIntegral):
        eval_form(q, 1)
    assert eval_form(q, 5) == QuadForm(1, 6, -124)
    with pytest.raises(ImprimitiveSpecialization):
        eval_form(QuadForm(2 * X, 2 * X, X + 1), 1)


@given(st.integers(-200, 200))
def test_eval_discriminant(n):
    q = QuadForm(X, 6, -(X**2) + 1)
    assert discriminant(eval_form(q, n)) == 4 * (n**3 - n + 9)


def test_sieve_cells(cells):
    assert [c.n for c in cells] == list(range(1, 101))
    assert [c.n for c in cells if c.classification is Classification.TRIVIAL] == TRIVIAL_1_100
    squares = [n for n in range(1, 101) if math.isqrt(n**3 - n + 9) ** 2 == n**3 - n + 9]
    assert squares == [1, 9, 35, 37]
    assert [c.n for c in cells if c.classification is Classification.DEGENERATE_SQUARE] == squares


def test_trivial_cells_replay(cells, q_fixture):
    for c in cells:
        if c.classification is Classification.TRIVIAL:
            assert c.method is Method.EXACT
            assert apply_chain(c.witness, eval_form(q_fixture, c.n)) == principal_form(4 * c.f_of_n)


def test_sieve_parallel_matches_serial(q_fixture, cells):
    par = sieve(q_fixture, 1, 100, workers=3)
    assert [(c.n, c.classification) for c in par] == [(c.n, c.classification) for c in cells]


def test_classify_roots_and_s_units():
    q = QuadForm(X, 2, 2 - X**2)  # discriminant 4(X^3 - 2X^2 + 1), root at 1
    assert classify_specialization(q, 1).classification is Classification.ROOT_OF_F
    assert is_degenerate_value(18, SRing((2,)))
    assert not is_degenerate_value(18)
    assert not is_degenerate_value(-9)
    assert is_degenerate_value(Fraction(9, 4))


def test_classify_with_s(q_fixture):
    S = SRing((2, 3))
    cells = sieve(q_fixture, 1, 100, S)
    for c in cells:
        if c.classification is Classification.NONTRIVIAL:
            assert c.method is Method.GENUS
            assert not is_equivalent_to_principal(eval_form(q_fixture, c.n))
        assert c.classification is not Classification.TRIVIAL or c.witness
    assert any(c.classification is Classification.UNKNOWN for c in cells)


def test_find_criterion(q_fixture, curve1):
    (c,) = find_criterion(q_fixture, curve1, prime_bound=50)
    assert (c.residue, c.modulus) == (2, 5)
    (c37,) = find_criterion(q_fixture, curve1, prime_bound=100, min_prime=7)
    assert (c37.residue, c37.modulus) == (32, 37)
    classes = find_criterion(q_fixture, curve1, max_classes=3)
    assert len(classes) == 3
    assert len({p for c in classes for _, p in c.witnesses.congruences()}) >= 3
    with pytest.raises(NotFound):
        find_criterion(curve1.principal(), curve1)


def test_find_criterion_excludes_integer_roots():
    f = X**3 + X + 10  # integer root -2
    q = QuadForm(X + 2, 0, -(X**2) + 2 * X - 5)
    assert discriminant(q) == 4 * f
    classes = find_criterion(q, Curve(f), prime_bound=300, max_classes=3)
    for cl in classes:
        assert cl.excluded == ((-2,) if -2 % cl.modulus == cl.residue else ())
        assert -2 not in cl


def test_certificate_soundness_small(q_fixture, curve1, cells):
    classes = find_criterion(q_fixture, curve1, max_classes=3)
    for c in cells:
        if any(c.n in cl for cl in classes) and c.classification not in (
            Classification.DEGENERATE_SQUARE,
            Classification.ROOT_OF_F,
        ):
            assert c.classification is Classification.NONTRIVIAL


def test_twelve_criterion_observed(cells):
    assert all(c.classification is not Classification.TRIVIAL for c in cells if c.n % 12 == 2)


def test_density_report(q_fixture):
    rep = empirical_density(q_fixture, 100)
    assert sum(rep.counts.values()) == 100
    assert rep.trivial_fraction == Fraction(43, 100)
    assert rep.series[-1] == (100, Fraction(43, 100))
    assert len(rep.series) == 10
    sym = empirical_density(q_fixture, 30, symmetric=True)
    assert sum(sym.counts.values()) == 60


PAIRS = {
    "genus1": (X**3 - X + 9, (0, 3), (1, 3)),
    "genus2": (X**5 - X + 1, (0, 1), (1, 1)),
}


@pytest.mark.parametrize("fixture", sorted(PAIRS))
@pytest.mark.parametrize("n", range(-20, 21))
def test_specialization_respects_composition(n, fixture):
    f, p1, p2 = PAIRS[fixture]
    curve = Curve(f)
    P = mumford_to_form(point_divisor(*p1, curve), curve)
    Q = mumford_to_form(point_divisor(*p2, curve), curve)
    f_n = f(n)
    if f_n == 0 or (f_n > 0 and math.isqrt(f_n) ** 2 == f_n):
        pytest.skip("degenerate value")
    try:
        a, b = eval_form(P, n), eval_form(Q, n)
        lhs = eval_form(compose(P, Q), n)
    except ImprimitiveSpecialization:
        pytest.skip("imprimitive specialization")
    if not a.a or not b.a or math.gcd(a.a, b.a) != 1:
        pytest.skip("values not coprime")
    assert canonical_class_rep(lhs) == canonical_class_rep(compose(a, b))
