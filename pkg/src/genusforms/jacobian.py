"""Hyperelliptic Jacobians through forms of discriminant 4f over Q[X].

A Mumford pair (u, v) with u monic and u | v^2 - f corresponds to the form
[u, 2v, (v^2 - f)/u].  Composition of forms followed by Cantor reduction is the
group law, and lambda sends a class to A * (-1)^deg(A) / lc(A) in L^x / L^x2 where
L = Q[X]/(f).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Poly, is_prime, is_squarefree_mod_p, jacobi, poly_gcd, roots_mod_p
from .errors import BadCurve, BadPrime, NotCoprime, NotOnCurve, SearchExhausted, ZeroLead
from .forms import SWAP, QuadForm, act, compose, coprime_representative, discriminant, normalize_middle


@dataclass(frozen=True)
class Curve:
    """y^2 = f(x) with f monic, square-free, of odd degree 2g + 1 >= 3."""

    f: Poly

    def __post_init__(self):
        f = Poly.coerce(self.f)
        object.__setattr__(self, "f", f)
        if f.deg < 3 or f.deg % 2 == 0:
            raise BadCurve(f"{f} must have odd degree at least 3")
        if f.lc != 1:
            raise BadCurve(f"{f} is not monic")
        if not f.is_integral():
            raise BadCurve(f"{f} must have integer coefficients")
        if poly_gcd(f, f.derivative()).deg != 0:
            raise BadCurve(f"{f} is not square-free")

    @property
    def genus(self) -> int:
        return (self.f.deg - 1) // 2

    @property
    def disc(self) -> Poly:
        return 4 * self.f

    def principal(self) -> QuadForm:
        return QuadForm(Poly(1), Poly(), -self.f)

    def has_point(self, x, y) -> bool:
        return Fraction(y) ** 2 == self.f(x)


@dataclass(frozen=True)
class MumfordDiv:
    u: Poly
    v: Poly

    def __post_init__(self):
        u, v = Poly.coerce(self.u), Poly.coerce(self.v)
        if not u or u.lc != 1:
            raise ZeroLead(f"{u} is not monic")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v % u if u.deg > 0 else Poly())

    @classmethod
    def identity(cls) -> "MumfordDiv":
        return cls(Poly(1), Poly())

    def is_identity(self) -> bool:
        return self.u.deg == 0

    def lies_on(self, curve: Curve) -> bool:
        return ((self.v * self.v - curve.f) % self.u).deg < 0

    def __str__(self):
        return f"({self.u}, {self.v})"


@dataclass(frozen=True)
class DescentValue:
    """A representative of an element of L^x / L^x2 together with its norm sign data."""

    rep: Poly
    sign_norm: Fraction


def _check_disc(q: QuadForm, curve: Curve):
    if discriminant(q) != curve.disc:
        raise NotOnCurve(f"{q} does not have discriminant 4f")


def form_to_mumford(q: QuadForm, curve: Curve) -> MumfordDiv:
    if not q.a:
        raise ZeroLead("first coefficient is zero")
    _check_disc(q, curve)
    u = q.a.monic()
    d = MumfordDiv(u, q.b / 2)
    if not d.lies_on(curve):
        raise NotOnCurve(f"{d} fails u | v^2 - f")
    return d


def mumford_to_form(d: MumfordDiv, curve: Curve) -> QuadForm:
    if not d.lies_on(curve):
        raise NotOnCurve(f"{d} fails u | v^2 - f")
    return QuadForm(d.u, 2 * d.v, (d.v * d.v - curve.f).exact_div(d.u))


def cantor_reduce_form(q: QuadForm, curve: Curve) -> QuadForm:
    """Equivalent form with deg a <= g and deg b < deg a."""
    _check_disc(q, curve)
    g = curve.genus
    while True:
        q, _ = normalize_middle(q)
        if q.a.deg <= g:
            return q
        q = act(SWAP, q)


def reduce_divisor(d: MumfordDiv, curve: Curve) -> MumfordDiv:
    return form_to_mumford(cantor_reduce_form(mumford_to_form(d, curve), curve), curve)


def cantor_add(d1: MumfordDiv, d2: MumfordDiv, curve: Curve) -> MumfordDiv:
    q = compose(mumford_to_form(d1, curve), mumford_to_form(d2, curve))
    return form_to_mumford(cantor_reduce_form(q, curve), curve)


def cantor_neg(d: MumfordDiv) -> MumfordDiv:
    return MumfordDiv(d.u, -d.v)


def cantor_mul(d: MumfordDiv, k: int, curve: Curve) -> MumfordDiv:
    if k < 0:
        d, k = cantor_neg(d), -k
    result = MumfordDiv.identity()
    while k:
        if k & 1:
            result = cantor_add(result, d, curve)
        k >>= 1
        if k:
            d = cantor_add(d, d, curve)
    return result


def point_divisor(x, y, curve: Curve) -> MumfordDiv:
    """The class of P - infinity for an affine point P = (x, y)."""
    if not curve.has_point(x, y):
        raise NotOnCurve(f"({x}, {y}) is not on y^2 = {curve.f}")
    return MumfordDiv(Poly.x() - x, Poly((y,)))


def lambda_descent(d: MumfordDiv, curve: Curve) -> DescentValue:
    f = curve.f
    q = mumford_to_form(d, curve)
    if poly_gcd(q.a, f).deg != 0:
        try:
            q, _ = coprime_representative(q, f)
        except SearchExhausted as exc:
            raise NotCoprime(str(exc)) from exc
    A = q.a
    sign = Fraction((-1) ** A.deg) / A.lc
    return DescentValue((sign * A) % f, sign)


def lambda_mod_p_character(val: DescentValue, curve: Curve, p: int) -> list[tuple[int, int]]:
    """Legendre symbols of the descent value at each root r of f mod p."""
    if p < 3 or not is_prime(p):
        raise BadPrime(f"{p} is not an odd prime")
    if val.rep.denominator() % p == 0:
        raise BadPrime(f"{p} divides a denominator of {val.rep}")
    if not is_squarefree_mod_p(curve.f, p):
        raise BadPrime(f"{curve.f} is not square-free mod {p}")
    return [(r, jacobi(val.rep.eval_mod(r, p), p)) for r in roots_mod_p(curve.f, p)]
