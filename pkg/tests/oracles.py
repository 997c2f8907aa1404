"""Independent reference implementations used to cross-check the library.

Nothing here imports the code under test beyond plain data types.
"""

from fractions import Fraction
from math import gcd


def principal_values_bruteforce(disc, m, unit_gens=(-1,)):
    """Units mod m of the form x^2 + pi*x*y + t*y^2, closed under the given unit images."""
    pi = disc % 2
    t = (pi - disc) // 4
    vals = {(x * x + pi * x * y + t * y * y) % m for x in range(m) for y in range(m)}
    group = {v for v in vals if gcd(v, m) == 1}
    changed = True
    while changed:
        new = {u * h % m for h in group for u in unit_gens} - group
        group |= new
        changed = bool(new)
    return group


def represents_unit(a, b, c, box):
    """Search |x|, |y| <= box for a primitive solution of a x^2 + b x y + c y^2 = +-1."""
    for x in range(-box, box + 1):
        for y in range(0, box + 1):
            if gcd(x, y) == 1 and abs(a * x * x + b * x * y + c * y * y) == 1:
                return x, y
    return None


def roots_bruteforce(coeffs, p):
    """Roots mod p of the integer polynomial with ascending coefficients."""
    return [r for r in range(p) if sum(c * pow(r, i, p) for i, c in enumerate(coeffs)) % p == 0]


def legendre(a, p):
    """Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


# chord-tangent arithmetic on y^2 = x^3 + A x + B, points as (x, y) or None


def ec_add(P, Q, A):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and y1 == -y2:
        return None
    if P == Q:
        lam = (3 * x1 * x1 + A) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    return x3, -(y1 + lam * (x3 - x1))


def ec_mul(P, k, A):
    R = None
    for _ in range(k):
        R = ec_add(R, P, A)
    return R


def ec_integral_points(A, B, bound):
    pts = []
    for x in range(-bound, bound + 1):
        v = x ** 3 + A * x + B
        if v < 0:
            continue
        s = int(round(v ** 0.5))
        while s * s > v:
            s -= 1
        while (s + 1) ** 2 <= v:
            s += 1
        if s * s == v:
            pts.append((Fraction(x), Fraction(s)))
            if s:
                pts.append((Fraction(x), Fraction(-s)))
    return pts
