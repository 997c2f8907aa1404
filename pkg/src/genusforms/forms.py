"""Binary quadratic forms [a, b, c] under the twisted GL2 action, and their composition.

Coefficients live in one of two kinds of rings:

* numbers: ``int`` for Z, or ``Fraction`` with S-unit denominators for Z_S;
* ``Poly``: the polynomial ring Q[X].

The twisted action is ``M . q = (q o M) / det(M)``.  Acting by ``N`` then by ``M``
equals acting by the matrix product ``N @ M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice

from .algebra import Poly, SRing, crt, ext_gcd, factorize, poly_ext_gcd, poly_gcd, small_pairs
from .errors import BadParity, DiscMismatch, NonUnitDet, NotPrimitive, SearchExhausted


def _num(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _is_poly(*xs) -> bool:
    return any(isinstance(x, Poly) for x in xs)


@dataclass(frozen=True)
class QuadForm:
    """The form a*x^2 + b*x*y + c*y^2."""

    a: object
    b: object
    c: object

    def __post_init__(self):
        vals = (self.a, self.b, self.c)
        if _is_poly(*vals):
            vals = tuple(Poly.coerce(v) for v in vals)
        else:
            vals = tuple(_num(Fraction(v)) if not isinstance(v, int) else v for v in vals)
        for name, v in zip("abc", vals):
            object.__setattr__(self, name, v)

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c

    @property
    def is_poly(self) -> bool:
        return isinstance(self.a, Poly)

    def __call__(self, x, y):
        return self.a * x * x + self.b * x * y + self.c * y * y

    def __str__(self):
        return f"[{self.a}, {self.b}, {self.c}]"


@dataclass(frozen=True)
class Mat2:
    """The matrix ((alpha, beta), (gamma, delta))."""

    alpha: object
    beta: object
    gamma: object
    delta: object

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def det(self):
        return self.alpha * self.delta - self.beta * self.gamma

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.alpha * other.alpha + self.beta * other.gamma,
            self.alpha * other.beta + self.beta * other.delta,
            self.gamma * other.alpha + self.delta * other.gamma,
            self.gamma * other.beta + self.delta * other.delta,
        )

    def inverse(self) -> "Mat2":
        d = self.det()
        return Mat2(
            _exdiv(self.delta, d), _exdiv(-self.beta, d), _exdiv(-self.gamma, d), _exdiv(self.alpha, d)
        )


# matrices used throughout
FLIP = Mat2(1, 0, 0, -1)  # [a, b, c] -> [-a, b, -c]
SWAP = Mat2(0, -1, 1, 0)  # [a, b, c] -> [c, -b, a]


def translation(k) -> Mat2:
    """[a, b, c] -> [a, b + 2ak, q(k, 1)]."""
    return Mat2(1, k, 0, 1)


def _exdiv(x, d):
    if d == 1:
        return x
    if d == -1:
        return -x
    if isinstance(x, Poly) or isinstance(d, Poly):
        return Poly.coerce(x) / Poly.coerce(d)
    return _num(Fraction(x) / d)


def _is_unit(x, S: SRing | None, poly: bool) -> bool:
    if poly:
        x = Poly.coerce(x)
        return x.deg == 0
    if isinstance(x, Poly):
        return False
    if S is None:
        return x in (1, -1)
    return S.is_unit(x)


def discriminant(q: QuadForm):
    return q.b * q.b - 4 * q.a * q.c


def act(M: Mat2, q: QuadForm, S: SRing | None = None) -> QuadForm:
    a, b, c = q
    al, be, ga, de = M.alpha, M.beta, M.gamma, M.delta
    det = M.det()
    if not _is_unit(det, S, q.is_poly):
        raise NonUnitDet(f"determinant {det} is not a unit")
    return QuadForm(
        _exdiv(a * al * al + b * al * ga + c * ga * ga, det),
        _exdiv(b * (al * de + be * ga) + 2 * (a * al * be + c * ga * de), det),
        _exdiv(a * be * be + b * be * de + c * de * de, det),
    )


def apply_chain(chain, q: QuadForm, S: SRing | None = None) -> QuadForm:
    for M in chain:
        q = act(M, q, S)
    return q


def chain_product(chain) -> Mat2:
    M = Mat2.identity()
    for step in chain:
        M = M @ step
    return M


def parity(disc):
    if isinstance(disc, Poly):
        return Poly()
    return disc % 2


def principal_form(disc, pi=None) -> QuadForm:
    """The principal representative [1, pi, -(disc - pi^2)/4]."""
    if isinstance(disc, Poly):
        pi = Poly() if pi is None else Poly.coerce(pi)
        return QuadForm(Poly((1,)), pi, -(disc - pi * pi) / 4)
    if pi is None:
        pi = disc % 2
    if (disc - pi * pi) % 4:
        raise BadParity(f"{disc} is not congruent to {pi}^2 modulo 4")
    return QuadForm(1, pi, -(disc - pi * pi) // 4)


def content(q: QuadForm, S: SRing | None = None):
    """Generator of the ideal <a, b, c>: monic gcd over Q[X], prime-to-S gcd over Z_S."""
    if q.is_poly:
        g = Poly()
        for v in q:
            if v:
                g = poly_gcd(g, v) if g else v.monic()
        return g
    return (S or SRing()).gcd(*q)


def is_primitive(q: QuadForm, S: SRing | None = None) -> bool:
    g = content(q, S)
    if q.is_poly:
        return g.deg == 0
    return g == 1


def _coprime_to(x, h, S: SRing | None) -> bool:
    if isinstance(x, Poly) or isinstance(h, Poly):
        x, h = Poly.coerce(x), Poly.coerce(h)
        return bool(x) and poly_gcd(x, h).deg == 0
    if x == 0:
        return False
    return (S or SRing()).gcd(x, h) == 1


def _basis_matrix(x: int, y: int) -> Mat2:
    """Unimodular matrix with first column (x, y)."""
    _, r1, r2 = ext_gcd(x, y)  # x*r1 + y*r2 = 1
    return Mat2(x, -r2, y, r1)


def coprime_representative(q: QuadForm, h, S: SRing | None = None, max_tries: int = 10_000):
    """Equivalent form whose first coefficient is nonzero and coprime to ``h``.

    Returns ``(q2, M)`` with ``q2 == act(M, q)`` and ``det(M) == 1``.
    """
    if _coprime_to(q.a, h, S):
        return q, Mat2.identity()
    if q.is_poly:
        h = Poly.coerce(h)
        # alpha in Z with q(alpha, 1) coprime to h; at most 2*deg(h) values fail
        alphas = (0, *(s * k for k in range(1, max_tries) for s in (1, -1)))
        for alpha in islice(alphas, 4 * max(h.deg, 1) + 8):
            M = Mat2(alpha, -1, 1, 0)
            if _coprime_to(q(alpha, 1), h, S):
                return act(M, q), M
        raise SearchExhausted(f"no alpha makes {q} coprime to {h}")

    for x, y in islice(small_pairs(60), 1, max_tries):
        if _coprime_to(q(x, y), h, S):
            M = _basis_matrix(x, y)
            return act(M, q, S), M
    # CRT construction: a pair avoiding each prime divisor of h
    S = S or SRing()
    residues_x, residues_y = [], []
    for p in factorize(S.strip(h)):
        for x, y in ((1, 0), (0, 1), (1, 1)):
            if Fraction(q(x, y)).numerator % p:
                residues_x.append((x, p))
                residues_y.append((y, p))
                break
        else:
            raise NotPrimitive(f"{q} is divisible by {p}")
    x, _ = crt(residues_x)
    y, _ = crt(residues_y)
    g = ext_gcd(x, y)[0]
    x, y = x // g, y // g
    M = _basis_matrix(x, y)
    q2 = act(M, q, S)
    if not _coprime_to(q2.a, h, S):
        raise SearchExhausted(f"could not make {q} coprime to {h}")
    return q2, M


def _bezout(a1, a2):
    if isinstance(a1, Poly):
        g, r1, r2 = poly_ext_gcd(a1, a2)
        if g.deg != 0:
            raise ValueError("leading coefficients are not coprime")
        return r1, r2
    g, r1, r2 = ext_gcd(a1, a2)
    if g != 1:
        raise ValueError("leading coefficients are not coprime")
    return r1, r2


def dirichlet_compose(q1: QuadForm, q2: QuadForm):
    """Composition for nonzero coprime first coefficients.

    Returns ``(q, r1, r2)`` where ``a1*r1 + a2*r2 = 1`` is the Bezout relation used
    and ``q = [a1*a2, B, (B^2 - disc)/(4*a1*a2)]`` with ``B = a1*r1*b2 + a2*r2*b1``.
    """
    disc = discriminant(q1)
    if discriminant(q2) != disc:
        raise DiscMismatch(f"{q1} and {q2} have different discriminants")
    (a1, b1, _), (a2, b2, _) = q1, q2
    r1, r2 = _bezout(a1, a2)
    B = a1 * r1 * b2 + a2 * r2 * b1
    A = a1 * a2
    return QuadForm(A, B, _exdiv(B * B - disc, 4 * A)), r1, r2


def normalize_middle(q: QuadForm):
    """Translate so that b lies in (-|a|, |a|] (numbers) or deg b < deg a (Q[X])."""
    a, b, _ = q
    if q.is_poly:
        k = -((b // (2 * a)))
    else:
        aa = abs(a)
        k = ((aa - b) // (2 * aa)) * (1 if a > 0 else -1)
    M = translation(k)
    return act(M, q), M


def compose(q1: QuadForm, q2: QuadForm) -> QuadForm:
    """A representative of the class q1 * q2 over Z or Q[X]."""
    disc = discriminant(q1)
    if discriminant(q2) != disc:
        raise DiscMismatch(f"{q1} and {q2} have different discriminants")
    for q in (q1, q2):
        if not is_primitive(q):
            raise NotPrimitive(f"{q} is not primitive")
    if not q1.a:
        q1, _ = coprime_representative(q1, disc if disc else 1)
    if not _coprime_to(q2.a, q1.a, None):
        q2, _ = coprime_representative(q2, q1.a)
    q, _, _ = dirichlet_compose(q1, q2)
    return normalize_middle(q)[0]


def inverse(q: QuadForm) -> QuadForm:
    return QuadForm(q.a, -q.b, q.c)


def power(q: QuadForm, k: int, reduce=None) -> QuadForm:
    """k-fold composition by square-and-multiply; ``reduce`` canonicalizes intermediates."""
    tidy = reduce or (lambda f: f)
    if k < 0:
        q, k = inverse(q), -k
    result = tidy(principal_form(discriminant(q)))
    base = tidy(q)
    while k:
        if k & 1:
            result = tidy(compose(result, base))
        k >>= 1
        if k:
            base = tidy(compose(base, base))
    return result
