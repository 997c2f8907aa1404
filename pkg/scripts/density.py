"""Trivial-fraction series for the fixture specializations over growing boxes."""

import argparse
import json
import time
from dataclasses import dataclass, field

from genusforms import QuadForm, SRing, X
from genusforms.jacobian import Curve
from genusforms.specialize import Classification, empirical_density, find_criterion


@dataclass
class Config:
    sizes: list = field(default_factory=lambda: [100, 300, 1000, 3000])
    symmetric: bool = False
    s_primes: tuple = ()
    workers: int | None = None
    json_out: str | None = None


def main(cfg: Config):
    f = X**3 - X + 9
    q = QuadForm(X, 6, 1 - X**2)
    S = SRing(cfg.s_primes)
    classes = find_criterion(q, Curve(f), S, max_classes=3)
    rows = []
    for N in cfg.sizes:
        t = time.perf_counter()
        rep = empirical_density(q, N, S, symmetric=cfg.symmetric, classes=classes, workers=cfg.workers)
        dt = time.perf_counter() - t
        row = {
            "N": N,
            "trivial_fraction": float(rep.trivial_fraction),
            "counts": {k.value: v for k, v in rep.counts.items()},
            "certified_nontrivial": rep.certified_nontrivial,
            "non_increasing": rep.non_increasing,
            "seconds": round(dt, 2),
        }
        rows.append(row)
        print(
            f"N={N:>6}  trivial={float(rep.trivial_fraction):.4f}  "
            f"nontrivial={rep.counts[Classification.NONTRIVIAL]:>6}  "
            f"certified={rep.certified_nontrivial:>6}  ({dt:.1f}s)"
        )
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 300, 1000, 3000])
    ap.add_argument("--symmetric", action="store_true")
    ap.add_argument("--s-primes", type=int, nargs="*", default=[])
    ap.add_argument("--workers", type=int)
    ap.add_argument("--json-out")
    a = ap.parse_args()
    main(Config(a.sizes, a.symmetric, tuple(a.s_primes), a.workers, a.json_out))
