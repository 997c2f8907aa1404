"""Compare ker(psi) with the squares of the class group, for definite and indefinite discriminants.

Definite discriminants use reduced forms directly.  For positive discriminants the
classes are the cycles of reduced forms (twisted equivalence), and the result is
printed rather than asserted.
"""

import argparse
import math
from dataclasses import dataclass, field

from genusforms import QuadForm, compose, in_principal_genus
from genusforms.reduction import canonical_class_rep, is_reduced_indef, reduced_forms


@dataclass
class Config:
    discs: list = field(default_factory=lambda: [-56, -84, -120, -231, -420, 60, 136, 145, 221, 480])


def indefinite_classes(disc):
    s = math.isqrt(disc)
    reps = set()
    for b in range(1, s + 1):
        if (b * b - disc) % 4:
            continue
        ac = (b * b - disc) // 4
        for a in range(1, abs(ac) + 1):
            if ac % a:
                continue
            for sa in (a, -a):
                q = QuadForm(sa, b, ac // sa)
                if math.gcd(sa, b, ac // sa) == 1 and is_reduced_indef(q, s):
                    reps.add(canonical_class_rep(q))
    return sorted(reps, key=lambda f: (f.a, f.b, f.c))


def check(disc):
    forms = reduced_forms(disc) if disc < 0 else indefinite_classes(disc)
    canon = canonical_class_rep
    squares = {canon(compose(q, q)) for q in forms}
    kernel = {q for q in forms if in_principal_genus(q)}
    return len(forms), squares, kernel


def main(cfg: Config):
    for disc in cfg.discs:
        h, squares, kernel = check(disc)
        tag = "equal" if squares == kernel else "DIFFER"
        print(f"disc {disc:>6}: h={h:>3}  |squares|={len(squares):>3}  |ker psi|={len(kernel):>3}  {tag}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--discs", type=int, nargs="+")
    a = ap.parse_args()
    main(Config(a.discs) if a.discs else Config())
