"""Integers, rationals, dense polynomials over Q and F_p, and number-theoretic helpers.

Python ints are arbitrary precision and ``fractions.Fraction`` is always reduced,
so ``Int`` and ``Rat`` are simply those types.  ``Poly`` is an immutable dense
polynomial with rational coefficients stored in ascending degree.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product

from .errors import BadModulus, DegenerateGcd, NonCoprimeModuli, ZeroReduction


# ---------------------------------------------------------------------------
# integers


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, r1, r2)`` with ``g = gcd(a, b) > 0`` and ``a*r1 + b*r2 == g``."""
    if a == 0 and b == 0:
        raise DegenerateGcd("gcd(0, 0) is undefined")
    r0, r1_ = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1_ != 0:
        q = r0 // r1_
        r0, r1_ = r1_, r0 - q * r1_
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


def inverse_mod(a: int, m: int) -> int:
    if m == 1:
        return 0
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return x % m


def crt(classes) -> tuple[int, int]:
    """Combine congruences ``x = r_i (mod m_i)`` with pairwise coprime moduli."""
    residue, modulus = 0, 1
    for r, m in classes:
        if m < 1:
            raise NonCoprimeModuli(f"modulus must be positive, got {m}")
        if math.gcd(modulus, m) != 1:
            raise NonCoprimeModuli(f"modulus {m} shares a factor with {modulus}")
        # residue + modulus*k = r (mod m)
        k = ((r - residue) * inverse_mod(modulus, m)) % m if m > 1 else 0
        residue += modulus * k
        modulus *= m
        residue %= modulus
    return residue, modulus


def jacobi(a: int, n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise BadModulus(f"Jacobi symbol needs an odd modulus >= 3, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact below 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def _pollard_brent(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 64
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` (``n != 0``)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in primes_up_to(1000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# S-integers


@dataclass(frozen=True)
class SRing:
    """The ring Z_S of rationals whose denominators only involve primes of S."""

    primes: tuple[int, ...] = ()

    def __post_init__(self):
        ps = tuple(int(p) for p in self.primes)
        if any(not is_prime(p) for p in ps):
            raise ValueError(f"S must contain primes only: {ps}")
        if any(a >= b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"S must be strictly increasing: {ps}")
        object.__setattr__(self, "primes", ps)

    @classmethod
    def of(cls, primes=()) -> "SRing":
        return cls(tuple(sorted(set(primes))))

    def __bool__(self):
        return bool(self.primes)

    def strip(self, n: int) -> int:
        """Prime-to-S part of ``|n|``."""
        n = abs(n)
        for p in self.primes:
            while n and n % p == 0:
                n //= p
        return n

    def is_unit(self, x) -> bool:
        x = Fraction(x)
        return x != 0 and self.strip(x.numerator) == 1 and self.strip(x.denominator) == 1

    def is_integral(self, x) -> bool:
        return self.strip(Fraction(x).denominator) == 1

    def gcd(self, *xs) -> int:
        """Positive generator of the Z_S-ideal spanned by integers ``xs`` (prime-to-S)."""
        return self.strip(reduce(math.gcd, (Fraction(x).numerator for x in xs), 0))


def s_unit_square_classes(S: SRing) -> list[int]:
    """Square-free representatives of Z_S^x / (Z_S^x)^2, starting with 1."""
    out = []
    for mask in range(1 << len(S.primes)):
        d = 1
        for i, p in enumerate(S.primes):
            if mask >> i & 1:
                d *= p
        out.extend((d, -d))
    return out


# ---------------------------------------------------------------------------
# polynomials over Q


class Poly:
    """Dense univariate polynomial with ``Fraction`` coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            coeffs = coeffs.coeffs
        elif isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def coerce(cls, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls((other,))
        return NotImplemented

    @property
    def deg(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def denominator(self) -> int:
        return math.lcm(*(c.denominator for c in self.coeffs)) if self.coeffs else 1

    def monic(self) -> "Poly":
        if not self:
            return self
        return self * (1 / self.lc)

    def __eq__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs) if len(self.coeffs) > 1 else hash(self[0])

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = Poly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self or not other:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = Poly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        inv = 1 / other.lc
        for i in range(dq, -1, -1):
            coef = rem[i + len(other.coeffs) - 1] * inv
            quo[i] = coef
            if coef:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= coef * b
        return Poly(quo), Poly(rem[: len(other.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __rfloordiv__(self, other):
        return divmod(Poly.coerce(other), self)[0]

    def __rmod__(self, other):
        return divmod(Poly.coerce(other), self)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = Poly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_constant():
            return self * (1 / other[0])
        return self.exact_div(other)

    def __call__(self, x):
        acc = 0 if isinstance(x, (int, Fraction)) else Poly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(acc, Fraction) and acc.denominator == 1:
            return int(acc)
        return acc

    def eval_mod(self, x: int, p: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c.numerator * inverse_mod(c.denominator, p)) % p
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def mod_p(self, p: int) -> list[int]:
        """Coefficients reduced modulo ``p`` (denominators must be prime to ``p``)."""
        out = []
        for c in self.coeffs:
            if c.denominator % p == 0:
                raise ZeroReduction(f"coefficient {c} has {p} in its denominator")
            out.append(c.numerator * inverse_mod(c.denominator, p) % p)
        return _fp_trim(out)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


X = Poly.x()


def poly_ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return monic ``g = gcd(a, b)`` and ``s, t`` with ``a*s + b*t == g``."""
    a, b = Poly(a), Poly(b)
    if not a and not b:
        raise DegenerateGcd("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = Poly((1,)), Poly()
    t0, t1 = Poly(), Poly((1,))
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def poly_gcd(a: Poly, b: Poly) -> Poly:
    return poly_ext_gcd(a, b)[0]


def resultant(a: Poly, b: Poly) -> Fraction:
    """Resultant via the Euclidean recurrence."""
    if not a or not b:
        return Fraction(0)
    if a.deg == 0:
        return a.lc ** b.deg
    if b.deg == 0:
        return b.lc ** a.deg
    r = a % b
    if not r:
        return Fraction(0)
    sign = -1 if (a.deg * b.deg) % 2 else 1
    return sign * b.lc ** (a.deg - r.deg) * resultant(b, r)


def discriminant_poly(f: Poly) -> Fraction:
    n = f.deg
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


# ---------------------------------------------------------------------------
# polynomials over F_p (lists of ints, ascending)


def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    return _fp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_trim([c % p for c in out])


def _fp_divmod(a, b, p):
    rem = list(a)
    inv = pow(b[-1], -1, p)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        coef = rem[i + len(b) - 1] * inv % p
        quo[i] = coef
        if coef:
            for j, y in enumerate(b):
                rem[i + j] = (rem[i + j] - coef * y) % p
    return _fp_trim(quo), _fp_trim(rem[: len(b) - 1])


def _fp_gcd(a, b, p):
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _fp_powmod(base, e, mod, p):
    result = [1]
    base = _fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, p), mod, p)[1]
        base = _fp_divmod(_fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _fp_split_linear(g, p, rng):
    """Roots of a monic squarefree ``g`` that splits into distinct linear factors."""
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [(-g[0]) % p]
    while True:
        a = rng.randrange(p)
        h = _fp_sub(_fp_powmod([a, 1], (p - 1) // 2, g, p), [1], p)
        d = _fp_gcd(g, h, p)
        if 0 < len(d) - 1 < len(g) - 1:
            return _fp_split_linear(d, p, rng) + _fp_split_linear(_fp_divmod(g, d, p)[0], p, rng)


_SCAN_LIMIT = 10_000


def roots_mod_p(f, p: int) -> list[int]:
    """Sorted roots in ``[0, p)`` of ``f`` reduced modulo the prime ``p``."""
    fp = Poly(f).mod_p(p)
    if not fp:
        raise ZeroReduction(f"{f} vanishes identically modulo {p}")
    if p < _SCAN_LIMIT:
        roots = []
        for r in range(p):
            acc = 0
            for c in reversed(fp):
                acc = (acc * r + c) % p
            if acc == 0:
                roots.append(r)
        return roots
    inv = pow(fp[-1], -1, p)
    fp = [c * inv % p for c in fp]
    xp = _fp_powmod([0, 1], p, fp, p)
    g = _fp_gcd(fp, _fp_sub(xp, [0, 1], p), p)
    return sorted(_fp_split_linear(g, p, random.Random(p)))


def is_squarefree_mod_p(f: Poly, p: int) -> bool:
    fp = Poly(f).mod_p(p)
    dp = Poly(f).derivative().mod_p(p)
    if not dp:
        return len(fp) <= 1
    return len(_fp_gcd(fp, dp, p)) == 1


def integer_roots(f: Poly) -> list[int]:
    """Integer roots of a nonzero integer polynomial."""
    f = Poly(f)
    roots = []
    while f and f[0] == 0:
        roots.append(0)
        f = f.exact_div(X)
    if f.deg <= 0:
        return sorted(set(roots))
    # an integer root divides the constant term once denominators are cleared
    c0 = int(f[0] * f.denominator())
    divisors = [1]
    for p, e in factorize(c0).items():
        divisors = [d * p**k for d in divisors for k in range(e + 1)]
    for d in divisors:
        for r in (d, -d):
            if f(r) == 0:
                roots.append(r)
    return sorted(set(roots))


def small_pairs(limit: int):
    """Primitive pairs ``(x, y)`` with ``y >= 0`` ordered by height, up to ``limit``."""
    yield (1, 0)
    for h in range(1, limit + 1):
        cands = [
            (x, y)
            for x, y in product(range(-h, h + 1), range(1, h + 1))
            if max(abs(x), y) == h and math.gcd(x, y) == 1
        ]
        yield from sorted(cands, key=lambda t: (abs(t[0]) + t[1], -t[0], t[1]))
