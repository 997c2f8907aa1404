"""Command-line entry point: ``genusforms <subcommand> [flags]``.

Exit status is 0 on success, 1 on a domain error (the error class name is
printed) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import SRing, primes_up_to
from .errors import DiscMismatch, GenusFormsError, ParseError
from .forms import compose, discriminant, principal_form
from .genus import psi, value_subgroup_H0
from .jacobian import Curve, cantor_reduce_form, form_to_mumford, lambda_descent, lambda_mod_p_character
from .reduction import canonical_class_rep, gauss_reduce, principal_equivalence, reduce_indef, reduce_indef_cycle
from .serialize import (
    cell_to_json,
    cells_to_csv,
    certificate_to_json,
    chain_to_text,
    form_to_json,
    mumford_to_json,
    num_to_json,
    parse_form,
    parse_poly,
    parse_poly_form,
    parse_primes,
    parse_range,
    poly_to_json,
    sieve_svg,
)
from .specialize import Classification, empirical_density, find_criterion, sieve


def _emit(args, payload, table):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for row in table:
            print(row)


def _sring(args) -> SRing:
    return SRing(parse_primes(getattr(args, "s_primes", None)))


def _int_forms(args, count=None):
    forms = [parse_form(t) for t in args.form or []]
    if count is not None and len(forms) != count:
        raise ParseError(f"expected {count} --form argument(s), got {len(forms)}")
    if args.disc is not None:
        for q in forms:
            if discriminant(q) != args.disc:
                raise DiscMismatch(f"{q} has discriminant {discriminant(q)}, not {args.disc}")
    return forms


def _curve_and_form(args):
    if not args.form_poly:
        raise ParseError("--form-poly is required")
    q = parse_poly_form(args.form_poly[0])
    f = discriminant(q) / 4
    if args.curve:
        cf = parse_poly(args.curve)
        if cf != f:
            raise DiscMismatch(f"form has discriminant 4*({f}), curve is {cf}")
    return Curve(f), q


# ---------------------------------------------------------------------------
# subcommands


def cmd_compose(args):
    if args.form_poly:
        qs = [parse_poly_form(t) for t in args.form_poly]
        if len(qs) != 2:
            raise ParseError("expected two --form-poly arguments")
        r = compose(*qs)
        if args.curve:
            r = cantor_reduce_form(r, Curve(parse_poly(args.curve)))
        _emit(args, {"form": form_to_json(r)}, [str(r)])
        return
    q1, q2 = _int_forms(args, 2)
    r = compose(q1, q2)
    canon = canonical_class_rep(r)
    _emit(args, {"form": form_to_json(r), "reduced": form_to_json(canon)}, [f"composite  {r}", f"reduced    {canon}"])


def cmd_reduce(args):
    (q,) = _int_forms(args, 1)
    d = discriminant(q)
    if d < 0:
        r, steps = gauss_reduce(q)
        payload = {"reduced": form_to_json(r), "steps": len(steps)}
        _emit(args, payload, [f"reduced  {r}", f"steps    {len(steps)}"])
        return
    r, steps = reduce_indef(q)
    cycle = reduce_indef_cycle(r)
    payload = {"reduced": form_to_json(r), "steps": len(steps), "cycle": [form_to_json(c) for c in cycle]}
    _emit(args, payload, [f"reduced  {r}", f"steps    {len(steps)}", "cycle"] + [f"  {c}" for c in cycle])


def cmd_equivalence(args):
    (q,) = _int_forms(args, 1)
    chain = principal_equivalence(q)
    target = principal_form(discriminant(q))
    payload = {"form": form_to_json(q), "principal": form_to_json(target), "equivalent": chain is not None}
    if chain is not None:
        payload["witness"] = chain_to_text(chain)
    _emit(args, payload, [f"{q} ~ {target}: {'yes' if chain is not None else 'no'}"])


def cmd_genus(args):
    S = _sring(args)
    forms = _int_forms(args)
    disc = args.disc if args.disc is not None else (discriminant(forms[0]) if forms else None)
    if disc is None:
        raise ParseError("genus needs --disc or --form")
    h0 = value_subgroup_H0(disc, S)
    payload = {"disc": disc, "modulus": h0.modulus, "H0": h0.H0.sorted(), "index": h0.H0.index()}
    table = [f"modulus  {h0.modulus}", f"H0       {h0.H0.sorted()}"]
    if forms:
        rows = []
        for q in forms:
            g = psi(q, S)
            rows.append({"form": form_to_json(q), "rep": g.rep, "in_principal_genus": g.is_principal()})
            table.append(f"{q}  rep {g.rep}  principal genus: {g.is_principal()}")
        payload["forms"] = rows
        payload["in_principal_genus"] = all(r["in_principal_genus"] for r in rows)
    _emit(args, payload, table)


def cmd_mumford(args):
    curve, q = _curve_and_form(args)
    d = form_to_mumford(cantor_reduce_form(q, curve), curve)
    _emit(args, mumford_to_json(d), [f"u = {d.u}", f"v = {d.v}"])


def cmd_descend(args):
    curve, q = _curve_and_form(args)
    d = form_to_mumford(cantor_reduce_form(q, curve), curve)
    val = lambda_descent(d, curve)
    chars = []
    for p in primes_up_to(args.prime_bound or 0):
        try:
            chars += [(p, r, c) for r, c in lambda_mod_p_character(val, curve, p)]
        except GenusFormsError:
            continue
    payload = {
        "rep": poly_to_json(val.rep),
        "sign_norm": num_to_json(val.sign_norm),
        "characters": [{"p": p, "r": r, "chi": c} for p, r, c in chars],
    }
    _emit(args, payload, [f"lambda = {val.rep}"] + [f"  p={p} r={r} chi={c}" for p, r, c in chars])


def cmd_sieve(args):
    curve, q = _curve_and_form(args)
    lo, hi = parse_range(args.range)
    cells = sieve(q, lo, hi, _sring(args))
    if args.csv:
        Path(args.csv).write_text(cells_to_csv(cells))
    if args.svg:
        Path(args.svg).write_text(sieve_svg(cells, lo, hi))
    counts = {c.value: sum(cell.classification is c for cell in cells) for c in Classification}
    payload = {"counts": counts, "cells": [cell_to_json(c) for c in cells]}
    table = [f"{c.n:>6}  {c.classification.value:<16} {c.method.value}" for c in cells]
    table.append("  ".join(f"{k}={v}" for k, v in counts.items()))
    _emit(args, payload, table)


def cmd_criterion(args):
    curve, q = _curve_and_form(args)
    classes = find_criterion(
        q,
        curve,
        _sring(args),
        prime_bound=args.prime_bound or 100,
        min_prime=args.min_prime,
        exclude_primes=parse_primes(args.exclude_primes),
        max_classes=args.max_classes,
    )
    payload = [
        {
            "residue": c.residue,
            "modulus": c.modulus,
            "witnesses": certificate_to_json(c.witnesses),
            "excluded": list(c.excluded),
        }
        for c in classes
    ]
    table = []
    for c in classes:
        ws = ", ".join(f"eps={w.epsilon}:(p={w.p}, r={w.r})" for w in c.witnesses.witnesses)
        table.append(f"n = {c.residue} mod {c.modulus}   [{ws}]")
    _emit(args, payload, table)


def cmd_density(args):
    curve, q = _curve_and_form(args)
    rep = empirical_density(q, args.n, _sring(args), symmetric=args.symmetric)
    counts = {k.value: v for k, v in rep.counts.items()}
    payload = {
        "N": rep.N,
        "counts": counts,
        "trivial_fraction": num_to_json(rep.trivial_fraction),
        "series": [[m, num_to_json(fr)] for m, fr in rep.series],
        "non_increasing": rep.non_increasing,
    }
    table = [f"N = {rep.N}", "  ".join(f"{k}={v}" for k, v in counts.items())]
    table += [f"  {m:>8}  {float(fr):.4f}  ({fr})" for m, fr in rep.series]
    table.append(f"non-increasing: {rep.non_increasing}")
    _emit(args, payload, table)


COMMANDS = {
    "compose": (cmd_compose, "compose two forms"),
    "reduce": (cmd_reduce, "reduce a form (Gauss or rho cycle)"),
    "equivalence": (cmd_equivalence, "test equivalence to the principal form"),
    "genus": (cmd_genus, "value subgroup H0 and genus of forms"),
    "mumford": (cmd_mumford, "Cantor-reduced Mumford pair of a polynomial form"),
    "descend": (cmd_descend, "2-descent value and its characters"),
    "sieve": (cmd_sieve, "classify specializations over a range"),
    "criterion": (cmd_criterion, "congruence classes certified non-principal"),
    "density": (cmd_density, "empirical density of trivial specializations"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genusforms", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")
    for name, (func, help_) in COMMANDS.items():
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if name in ("compose", "reduce", "equivalence", "genus"):
            p.add_argument("--form", action="append", help="integer form a,b,c")
            p.add_argument("--disc", type=int)
        if name not in ("reduce", "equivalence", "genus"):
            p.add_argument("--curve", help="f in x, e.g. x^3-x+9")
            p.add_argument("--form-poly", action="append", help="polynomial form a;b;c")
        if name in ("genus", "sieve", "criterion", "density"):
            p.add_argument("--s-primes", help="comma-separated primes inverted in Z_S")
        if name in ("descend", "criterion"):
            p.add_argument("--prime-bound", type=int, default=None)
        if name == "sieve":
            p.add_argument("--range", required=True, help="lo:hi")
            p.add_argument("--csv")
            p.add_argument("--svg")
        if name == "criterion":
            p.add_argument("--min-prime", type=int, default=3)
            p.add_argument("--exclude-primes")
            p.add_argument("--max-classes", type=int, default=1)
        if name == "density":
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--symmetric", action="store_true")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        args.func(args)
    except GenusFormsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
