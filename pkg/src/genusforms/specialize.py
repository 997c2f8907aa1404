"""Specializing a form over Q[X] at integers n and classifying the resulting forms.

Each n yields [A(n), B(n), C(n)] of discriminant 4 f(n), which is classified as
equivalent to the principal form (Trivial) or not (NonTrivial), unless f(n) is
zero or a rational square.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from .algebra import Poly, SRing, crt, integer_roots, is_square, s_unit_square_classes
from .errors import ImprimitiveSpecialization, NotFound, NotSIntegral
from .forms import QuadForm, coprime_representative, discriminant, is_primitive
from .genus import PsiCertificate, psi, psi_poly_certificate
from .reduction import principal_equivalence


class Classification(str, enum.Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "NonTrivial"
    DEGENERATE_SQUARE = "DegenerateSquare"
    ROOT_OF_F = "RootOfF"
    UNKNOWN = "Unknown"


class Method(str, enum.Enum):
    EXACT = "ExactReduction"
    GENUS = "GenusCertificate"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SieveCell:
    n: int
    f_of_n: object
    classification: Classification
    method: Method
    # Trivial by reduction: the matrix chain; NonTrivial by genus: the genus coset rep
    witness: object = None


def _curve_poly(q: QuadForm) -> Poly:
    return discriminant(q) / 4


def eval_form(q: QuadForm, n, S: SRing | None = None) -> QuadForm:
    S = S or SRing()
    vals = [v(n) for v in q]
    for v in vals:
        if not S.is_integral(v):
            raise NotSIntegral(f"{v} is not S-integral at n = {n}")
    qn = QuadForm(*vals)
    if not is_primitive(qn, S):
        raise ImprimitiveSpecialization(f"{qn} is not primitive over Z_S")
    return qn


def _is_rational_square(x) -> bool:
    x = Fraction(x)
    return x >= 0 and is_square(x.numerator) and is_square(x.denominator)


def is_degenerate_value(fn, S: SRing | None = None) -> bool:
    """f(n) is a square times a positive S-unit (a plain square when S is empty)."""
    S = S or SRing()
    fn = Fraction(fn)
    if fn <= 0:
        return False
    return any(_is_rational_square(fn / e) for e in s_unit_square_classes(S) if e > 0)


def classify_specialization(q: QuadForm, n, S: SRing | None = None) -> SieveCell:
    S = S or SRing()
    fn = _curve_poly(q)(n)
    if fn == 0:
        return SieveCell(n, fn, Classification.ROOT_OF_F, Method.UNKNOWN)
    if is_degenerate_value(fn, S):
        return SieveCell(n, fn, Classification.DEGENERATE_SQUARE, Method.UNKNOWN)
    qn = eval_form(q, n, S)

    if S:
        g = psi(qn, S)
        if not g.is_principal():
            return SieveCell(n, fn, Classification.NONTRIVIAL, Method.GENUS, g.rep)
        if all(isinstance(v, int) for v in qn):
            # equivalence over Z implies equivalence over Z_S
            chain = principal_equivalence(qn)
            if chain is not None:
                return SieveCell(n, fn, Classification.TRIVIAL, Method.EXACT, tuple(chain))
        return SieveCell(n, fn, Classification.UNKNOWN, Method.UNKNOWN)

    chain = principal_equivalence(qn)
    if chain is None:
        return SieveCell(n, fn, Classification.NONTRIVIAL, Method.EXACT)
    return SieveCell(n, fn, Classification.TRIVIAL, Method.EXACT, tuple(chain))


def _workers(workers) -> int:
    if workers is None:
        workers = int(os.environ.get("GENUSFORMS_THREADS", "1") or 1)
    return max(1, workers)


def sieve(q: QuadForm, lo: int, hi: int, S: SRing | None = None, workers=None) -> list[SieveCell]:
    """Classify every n in [lo, hi]; cells come back ordered by n."""
    if lo > hi:
        raise ValueError(f"empty range {lo}:{hi}")
    S = S or SRing()
    ns = range(lo, hi + 1)
    workers = _workers(workers)
    if workers == 1 or len(ns) < 64:
        return [classify_specialization(q, n, S) for n in ns]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(ns) // (8 * workers))
        return list(pool.map(partial(classify_specialization, q, S=S), ns, chunksize=chunk))


# ---------------------------------------------------------------------------
# congruence criteria


@dataclass(frozen=True)
class CongruenceClass:
    residue: int
    modulus: int
    witnesses: PsiCertificate
    excluded: tuple[int, ...] = ()  # integer roots of f inside the class

    def __contains__(self, n: int) -> bool:
        return n % self.modulus == self.residue and n not in self.excluded

    def __str__(self):
        return f"{self.residue} mod {self.modulus}"


def find_criterion(
    q: QuadForm,
    curve,
    S: SRing | None = None,
    prime_bound: int = 100,
    min_prime: int = 3,
    exclude_primes=(),
    max_classes: int = 1,
) -> list[CongruenceClass]:
    """Congruence classes of n whose specializations are certified outside the principal genus.

    Later classes avoid the primes used by earlier ones.  Raises ``NotFound`` when
    not even one class can be certified.
    """
    S = S or SRing()
    f = curve.f if hasattr(curve, "f") else Poly.coerce(curve)
    q, _ = coprime_representative(q, f)
    roots = integer_roots(f)
    used = set(exclude_primes)
    classes = []
    for _ in range(max_classes):
        try:
            cert = psi_poly_certificate(q, f, S, prime_bound, min_prime, tuple(sorted(used)))
        except NotFound:
            if classes:
                break
            raise
        pairs = cert.congruences()
        residue, modulus = crt(pairs)
        excluded = tuple(r for r in roots if r % modulus == residue)
        classes.append(CongruenceClass(residue, modulus, cert, excluded))
        used |= {p for _, p in pairs}
    return classes


# ---------------------------------------------------------------------------
# density


@dataclass(frozen=True)
class DensityReport:
    N: int
    counts: dict
    trivial_fraction: Fraction
    series: tuple  # (M, trivial fraction on the box of radius M)
    non_increasing: bool
    symmetric: bool = False
    certified_nontrivial: int = 0  # cells inside supplied congruence classes
    cells: tuple = field(default=(), repr=False)


def empirical_density(
    q: QuadForm, N: int, S: SRing | None = None, symmetric: bool = False, classes=(), workers=None
) -> DensityReport:
    if N < 1:
        raise ValueError("N must be positive")
    cells = sieve(q, 1, N, S, workers)
    if symmetric:
        cells = sieve(q, -N, -1, S, workers) + cells
    counts = {c: 0 for c in Classification}
    for cell in cells:
        counts[cell.classification] += 1

    series = []
    for k in range(1, 11):
        M = max(1, N * k // 10)
        box = [c for c in cells if abs(c.n) <= M]
        triv = sum(c.classification is Classification.TRIVIAL for c in box)
        series.append((M, Fraction(triv, len(box))))
    fracs = [fr for _, fr in series]
    certified = sum(
        1
        for c in cells
        if any(c.n in cls for cls in classes)
        and c.classification not in (Classification.DEGENERATE_SQUARE, Classification.ROOT_OF_F)
    )
    return DensityReport(
        N=N,
        counts=counts,
        trivial_fraction=Fraction(counts[Classification.TRIVIAL], len(cells)),
        series=tuple(series),
        non_increasing=all(a >= b for a, b in zip(fracs, fracs[1:])),
        symmetric=symmetric,
        certified_nontrivial=certified,
        cells=tuple(cells),
    )
