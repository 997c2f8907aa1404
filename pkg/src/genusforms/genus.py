"""Genus theory over Z_S and prime certificates for the genus map over Q[X].

The value subgroup H0 of the principal class lives in (Z_S / disc Z_S)^x, which is
(Z/m)^x for m the prime-to-S part of disc.  Membership is decided two ways:

* by explicit enumeration of the principal form's values (small m), and
* by local characters: for odd p | m the principal values are the squares mod p^k,
  and for the 2-part they are determined modulo 8 (Hensel), so H0 is the
  preimage of an F_2-subspace under an explicit character vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from .algebra import (
    Poly,
    SRing,
    factorize,
    inverse_mod,
    is_prime,
    jacobi,
    poly_gcd,
    primes_up_to,
    roots_mod_p,
    s_unit_square_classes,
)
from .errors import NotCoprime, NotFound, NotPrimitive, ZeroDisc
from .forms import QuadForm, coprime_representative, discriminant, is_primitive

EXPLICIT_CAP = 2_000


def _mod(x, m: int) -> int:
    x = Fraction(x)
    return x.numerator * inverse_mod(x.denominator, m) % m


def _principal_values(disc: int, m: int) -> set[int]:
    """Units of Z/m represented by the principal form of discriminant ``disc``."""
    pi = disc % 2
    t = ((pi - disc) // 4) % m
    seen = np.zeros(m, dtype=bool)
    xs = np.arange(m, dtype=np.int64)
    x2 = xs * xs % m
    for y in range(m):
        v = (x2 + (pi * y % m) * xs + t * (y * y % m)) % m
        seen[v] = True
    units = np.gcd(np.arange(m, dtype=np.int64), m) == 1
    return {int(v) for v in np.flatnonzero(seen & units)}


class ValueGroup:
    """H0 = (image of Z_S^x) * (principal values) inside (Z/m)^x."""

    def __init__(self, disc: int, S: SRing | None = None):
        if disc == 0:
            raise ZeroDisc("genus theory needs a nonzero discriminant")
        self.disc = disc
        self.S = S or SRing()
        self.modulus = self.S.strip(disc)

    @property
    def unit_generators(self) -> list[int]:
        m = self.modulus
        return [(-1) % m] + [p % m for p in self.S.primes]

    @cached_property
    def elements(self) -> frozenset[int]:
        m = self.modulus
        if m == 1:
            return frozenset({0})
        group = set(_principal_values(self.disc, m))
        frontier = set(group)
        gens = self.unit_generators
        while frontier:
            new = {g * h % m for h in frontier for g in gens} - group
            group |= new
            frontier = new
        return frozenset(group)

    @cached_property
    def _characters(self):
        m = self.modulus
        fac = factorize(m) if m > 1 else {}
        odd = [p for p in fac if p != 2]
        k2 = fac.get(2, 0)
        two_bits = min(k2, 3) - 1 if k2 >= 2 else 0
        gens = [self._vector(u, odd, k2) for u in self.unit_generators]
        if k2:
            # principal values modulo 2^min(k, 3); the 2-part of disc forces parity 0
            j = 1 << min(k2, 3)
            t = (-self.disc // 4) % j
            for x in range(j):
                for y in range(j):
                    v = (x * x + t * y * y) % j
                    if v % 2:
                        gens.append(self._two_vector(v, k2) << len(odd))
        basis: dict[int, int] = {}
        for g in gens:
            g = self._reduce(g, basis)
            if g:
                basis[g.bit_length() - 1] = g
        return odd, k2, basis, len(odd) + two_bits

    @staticmethod
    def _two_vector(a: int, k2: int) -> int:
        v = 0
        if k2 >= 2 and a % 4 == 3:
            v |= 1
        if k2 >= 3 and a % 8 in (3, 5):
            v |= 2
        return v

    def _vector(self, a: int, odd, k2) -> int:
        v = 0
        for i, p in enumerate(odd):
            if jacobi(a, p) == -1:
                v |= 1 << i
        return v | (self._two_vector(a, k2) << len(odd))

    @staticmethod
    def _reduce(v: int, basis: dict[int, int]) -> int:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                return v
            v ^= basis[top]
        return 0

    def contains_by_characters(self, a) -> bool:
        m = self.modulus
        if m == 1:
            return True
        a = _mod(a, m)
        odd, k2, basis, _ = self._characters
        return self._reduce(self._vector(a, odd, k2), basis) == 0

    def index(self) -> int:
        """Order of (Z/m)^x / H0."""
        if self.modulus == 1:
            return 1
        _, _, basis, nbits = self._characters
        return 2 ** (nbits - len(basis))

    def __contains__(self, a) -> bool:
        m = self.modulus
        if m <= EXPLICIT_CAP:
            return _mod(a, m) in self.elements if m > 1 else True
        return self.contains_by_characters(a)

    def sorted(self) -> list[int]:
        return sorted(self.elements)


@dataclass(frozen=True)
class GenusCoset:
    """The coset rep * H0 in (Z/m)^x / H0."""

    modulus: int
    H0: ValueGroup
    rep: int

    def is_principal(self) -> bool:
        return self.rep in self.H0

    def same_coset(self, other: "GenusCoset") -> bool:
        m = self.modulus
        if m == 1:
            return True
        return self.rep * inverse_mod(other.rep, m) % m in self.H0

    def __mul__(self, other: "GenusCoset") -> "GenusCoset":
        return GenusCoset(self.modulus, self.H0, self.rep * other.rep % self.modulus)


def value_subgroup_H0(disc: int, S: SRing | None = None) -> GenusCoset:
    group = ValueGroup(disc, S)
    return GenusCoset(group.modulus, group, 1 % group.modulus)


def psi(q: QuadForm, S: SRing | None = None) -> GenusCoset:
    """Genus of ``q``: the coset a^-1 H0 for a representative [a, b, c] with a coprime to disc."""
    S = S or SRing()
    disc = discriminant(q)
    group = ValueGroup(disc, S)
    m = group.modulus
    if not is_primitive(q, S):
        raise NotPrimitive(f"{q} is not primitive over Z_S")
    if m == 1:
        return GenusCoset(1, group, 0)
    q2, _ = coprime_representative(q, m, S)
    return GenusCoset(m, group, inverse_mod(_mod(q2.a, m), m))


def in_principal_genus(q: QuadForm, S: SRing | None = None) -> bool:
    return psi(q, S).is_principal()


# ---------------------------------------------------------------------------
# certificates over Q[X]


@dataclass(frozen=True)
class Witness:
    epsilon: int
    p: int
    r: int


@dataclass(frozen=True)
class PsiCertificate:
    """For each unit class eps, a prime p and root r of f mod p with eps*A(r) a non-residue."""

    witnesses: tuple[Witness, ...]

    def congruences(self) -> list[tuple[int, int]]:
        """Distinct ``(r, p)`` pairs, sorted by prime."""
        return sorted({(w.r, w.p) for w in self.witnesses}, key=lambda t: t[1])

    def verify(self, A: Poly, f: Poly) -> bool:
        return all(
            is_prime(w.p)
            and w.p > 2
            and f.eval_mod(w.r, w.p) == 0
            and jacobi(w.epsilon * A.eval_mod(w.r, w.p), w.p) == -1
            for w in self.witnesses
        )


def _poly_of(curve_or_f) -> Poly:
    return curve_or_f.f if hasattr(curve_or_f, "f") else Poly(curve_or_f)


def psi_poly_certificate(
    q: QuadForm,
    curve,
    S: SRing | None = None,
    prime_bound: int = 100,
    min_prime: int = 3,
    exclude_primes=(),
) -> PsiCertificate:
    """Finite-prime witnesses that the first coefficient of ``q`` is not in Q^x L^x2.

    Prefers one ``(p, r)`` serving every unit class; otherwise picks the smallest
    consistent witness per class.  Raises ``NotFound`` if some class has no witness
    below ``prime_bound``.
    """
    S = S or SRing()
    f = _poly_of(curve)
    A = q.a
    if poly_gcd(A, f).deg != 0:
        raise NotCoprime(f"{A} is not coprime to {f}")
    epsilons = s_unit_square_classes(S)
    skip = set(S.primes) | set(exclude_primes)
    den = A.denominator() * f.denominator()

    per_eps: dict[int, list[tuple[int, int]]] = {e: [] for e in epsilons}
    for p in primes_up_to(prime_bound):
        if p < max(min_prime, 3) or p in skip or den % p == 0:
            continue
        for r in roots_mod_p(f, p):
            a_r = A.eval_mod(r, p)
            if a_r == 0:
                continue
            served = [e for e in epsilons if jacobi(e * a_r, p) == -1]
            if len(served) == len(epsilons):
                return PsiCertificate(tuple(Witness(e, p, r) for e in epsilons))
            for e in served:
                per_eps[e].append((p, r))

    chosen: dict[int, int] = {}
    witnesses = []
    missing = []
    for e in epsilons:
        pick = next(((p, r) for p, r in per_eps[e] if chosen.get(p) == r), None)
        if pick is None:
            pick = next(((p, r) for p, r in per_eps[e] if p not in chosen), None)
        if pick is None:
            missing.append(e)
            continue
        chosen[pick[0]] = pick[1]
        witnesses.append(Witness(e, *pick))
    if missing:
        raise NotFound(f"no witness below {prime_bound} for unit classes {missing}", missing)
    return PsiCertificate(tuple(witnesses))
