"""Deciding twisted equivalence to the principal form over Z.

Definite forms go through Gauss reduction; indefinite forms of nonsquare
discriminant through the cycle of reduced forms under the rho operator.  All
square-root comparisons use ``math.isqrt``.

Every reduction returns the list of step matrices it applied, so that an
equivalence can be replayed with :func:`genusforms.forms.apply_chain` without
ever multiplying the (potentially huge) matrices together.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DegenerateDisc, WrongDiscSign
from .forms import FLIP, SWAP, Mat2, QuadForm, act, discriminant, principal_form, translation


class DiscKind(enum.Enum):
    NEG_DEF = "NegDef"
    POS_NONSQUARE = "PosNonsquare"
    PERFECT_SQUARE = "PerfectSquare"
    ZERO = "Zero"


@dataclass(frozen=True)
class DiscClass:
    kind: DiscKind
    root: int | None = None


def classify_disc(disc: int) -> DiscClass:
    if disc == 0:
        return DiscClass(DiscKind.ZERO)
    if disc < 0:
        return DiscClass(DiscKind.NEG_DEF)
    s = math.isqrt(disc)
    if s * s == disc:
        return DiscClass(DiscKind.PERFECT_SQUARE, s)
    return DiscClass(DiscKind.POS_NONSQUARE)


# ---------------------------------------------------------------------------
# definite forms


def gauss_reduce(q: QuadForm):
    """Reduce a definite form to the positive reduced form of its twisted class.

    Returns ``(r, steps)``; ``r`` satisfies ``|b| <= a <= c`` with ``b >= 0``
    whenever ``|b| == a`` or ``a == c``.
    """
    if discriminant(q) >= 0:
        raise WrongDiscSign(f"{q} is not definite")
    steps = []
    if q.a < 0:
        q = act(FLIP, q)
        steps.append(FLIP)
    while True:
        a, b, c = q
        k = (a - b) // (2 * a)
        if k:
            T = translation(k)
            q = act(T, q)
            steps.append(T)
            a, b, c = q
        if a > c or (a == c and b < 0):
            q = act(SWAP, q)
            steps.append(SWAP)
            continue
        return q, steps


def reduce_posdef(q: QuadForm) -> QuadForm:
    return gauss_reduce(q)[0]


def is_reduced_posdef(q: QuadForm) -> bool:
    a, b, c = q
    if not abs(b) <= a <= c:
        return False
    return b >= 0 or (abs(b) != a and a != c)


def reduced_forms(disc: int) -> list[QuadForm]:
    """All primitive positive definite reduced forms of a negative discriminant."""
    if disc >= 0:
        raise WrongDiscSign(f"{disc} is not negative")
    out = []
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            if (b * b - disc) % (4 * a):
                continue
            c = (b * b - disc) // (4 * a)
            q = QuadForm(a, b, c)
            if c >= a and is_reduced_posdef(q) and math.gcd(a, b, c) == 1:
                out.append(q)
        a += 1
    return out


# ---------------------------------------------------------------------------
# indefinite forms


def _rho_raw(a: int, b: int, c: int, disc: int, s: int):
    ac = abs(c)
    if ac > s:
        r = (-b) % (2 * ac)
        if r > ac:
            r -= 2 * ac
    else:
        r = s - ((s + b) % (2 * ac))
    return c, r, (r * r - disc) // (4 * c), (r + b) // (2 * c)


def _rho(q: QuadForm, disc: int, s: int):
    a, b, c, t = _rho_raw(*q, disc, s)
    return QuadForm(a, b, c), Mat2(0, -1, 1, t)


def rho(q: QuadForm) -> QuadForm:
    """One reduction step [a, b, c] -> [c, r, (r^2 - disc)/(4c)]."""
    disc = _indef_disc(q)
    return _rho(q, disc, math.isqrt(disc))[0]


def is_reduced_indef(q: QuadForm, s: int | None = None) -> bool:
    """``|sqrt(disc) - 2|a|| < b < sqrt(disc)`` in exact integer form."""
    a, b, _ = q
    if s is None:
        s = math.isqrt(discriminant(q))
    aa = abs(a)
    return 0 < b <= s and b + 2 * aa > s and 2 * aa - b <= s


def _indef_disc(q: QuadForm) -> int:
    disc = discriminant(q)
    kind = classify_disc(disc).kind
    if kind is not DiscKind.POS_NONSQUARE:
        raise WrongDiscSign(f"{q} has discriminant {disc}, not a positive nonsquare")
    return disc


def reduce_indef(q: QuadForm):
    """Apply rho until reduced; returns ``(r, steps)``."""
    disc = _indef_disc(q)
    s = math.isqrt(disc)
    steps = []
    while not is_reduced_indef(q, s):
        q, M = _rho(q, disc, s)
        steps.append(M)
    return q, steps


def _walk_cycle(r: QuadForm, disc: int, s: int, targets=None):
    """Walk the rho-cycle of the reduced form ``r`` on raw integer triples.

    Returns ``(forms, ts)``: the cycle members visited and the translation
    parameters of the steps between them.  With ``targets`` the walk stops at the
    first member in ``targets``.
    """
    start = tuple(r)
    cur = start
    forms, ts = [start], []
    while True:
        if targets is not None and cur in targets:
            return forms, ts
        *nxt, t = _rho_raw(*cur, disc, s)
        nxt = tuple(nxt)
        if nxt == start:
            return forms, ts
        ts.append(t)
        forms.append(nxt)
        cur = nxt


def reduce_indef_cycle(q: QuadForm) -> list[QuadForm]:
    """The cycle of reduced forms containing the reduction of ``q``."""
    r, _ = reduce_indef(q)
    disc = discriminant(q)
    return [QuadForm(*f) for f in _walk_cycle(r, disc, math.isqrt(disc))[0]]


# ---------------------------------------------------------------------------
# equivalence to the principal form


def _inverse_chain(steps):
    return [M.inverse() for M in reversed(steps)]


def principal_equivalence(q: QuadForm):
    """A chain of matrices taking ``q`` to the principal form, or ``None``.

    The twisted class of ``q`` is the union of the SL2(Z) classes of ``q`` and
    ``[-a, b, -c]``, so both are compared against the principal class.
    """
    disc = discriminant(q)
    kind = classify_disc(disc).kind
    if kind in (DiscKind.ZERO, DiscKind.PERFECT_SQUARE):
        raise DegenerateDisc(f"discriminant {disc} is zero or a square")
    p = principal_form(disc)

    if kind is DiscKind.NEG_DEF:
        rq, sq = gauss_reduce(q)
        rp, sp = gauss_reduce(p)
        if rq != rp:
            return None
        return sq + _inverse_chain(sp)

    s = math.isqrt(disc)
    rp, sp = reduce_indef(p)
    targets = {}
    for prefix, start in (([FLIP], act(FLIP, q)), ([], q)):
        rq, sq = reduce_indef(start)
        targets[tuple(rq)] = prefix + sq
    forms, ts = _walk_cycle(rp, disc, s, targets)
    hit = targets.get(forms[-1])
    if hit is None:
        return None
    # rp reaches the hit after len(ts) rho steps; undo them, then undo sp
    back = [Mat2(t, 1, -1, 0) for t in reversed(ts)]
    return hit + back + _inverse_chain(sp)


def is_equivalent_to_principal(q: QuadForm) -> bool:
    return principal_equivalence(q) is not None


def canonical_class_rep(q: QuadForm) -> QuadForm:
    """Canonical representative of the twisted class of ``q``.

    Definite: the positive reduced form.  Indefinite: the lexicographically least
    member of the two reduced cycles of ``q`` and ``[-a, b, -c]``.
    """
    disc = discriminant(q)
    if disc < 0:
        return reduce_posdef(q)
    members = reduce_indef_cycle(q) + reduce_indef_cycle(act(FLIP, q))
    return min(members, key=lambda f: (f.a, f.b, f.c))
