"""Command-line interface with plain-text and JSON output modes.

Exit codes: 0 success, 1 an internal consistency check failed (for
example the two lattice routes disagree, or a resolution fails its own
verification), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .lattices import (
    flabby_resolution,
    lattice_from_text,
    lattice_to_json,
    lattice_to_text,
    subgroups,
    tate_h0,
    tate_h_minus1,
    verify_resolution,
)
from .monomials import galois_action_matrix, galois_images, invariant_basis
from .noether import classify, noether_lattice, verdict_table
from .numfield import IntPolynomial, NumberFieldSpec

SCHEMA = "v1"


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _parse_field(spec: str) -> NumberFieldSpec:
    try:
        coeffs = [int(tok) for tok in spec.replace(",", " ").split()]
    except ValueError:
        raise ValueError(f"field coefficients must be integers: {spec!r}") from None
    if not coeffs:
        raise ValueError("empty field coefficient list")
    return NumberFieldSpec(IntPolynomial.from_coeffs(coeffs))


def _load_lattice(path: str):
    return lattice_from_text(Path(path).read_text(encoding="utf-8"))


def cmd_classify(args: argparse.Namespace) -> int:
    field = _parse_field(args.field)
    verdict = classify(field, args.p, seed=args.seed)
    payload = {"schema": SCHEMA, "p": args.p,
               "field": list(field.minpoly.coeffs)} | verdict.to_json()
    lines = [f"p = {args.p} over Q[X]/({field.minpoly})",
             f"outcome: {verdict.outcome}",
             f"retract rational: {verdict.retract_rational}"]
    lines += [f"  note: {note}" for note in verdict.provenance]
    if verdict.ramification is not None:
        ram = verdict.ramification
        lines.append(f"  ramification: {ram.kind} (disc = {ram.discriminant})")
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_lattice(args: argparse.Namespace) -> int:
    lat, params = noether_lattice(args.p)
    payload = lattice_to_json(lat) | {"p": params.p, "t": params.t, "s": params.s}
    text = lattice_to_text(lat) + f"# p={params.p} t={params.t} s={params.s}\n"
    _emit(payload, args.json, text)
    return 0


def cmd_cohomology(args: argparse.Namespace) -> int:
    lat = _load_lattice(args.lattice)
    subs = subgroups(lat.group)
    if args.subgroup is not None:
        subs = [s for s in subs if s.order == args.subgroup]
        if not subs:
            raise ValueError(
                f"{args.subgroup} does not divide the group order {lat.group.order}")
    rows = []
    for sub in subs:
        h0 = tate_h0(lat, sub)
        h1 = tate_h_minus1(lat, sub)
        rows.append((sub.order, h0, h1))
    payload = {
        "schema": SCHEMA,
        "n": lat.group.order,
        "rank": lat.rank,
        "table": [{"subgroup": d, "h0": list(h0.factors), "h_minus1": list(h1.factors)}
                  for d, h0, h1 in rows],
    }
    lines = [f"lattice: n={lat.group.order} rank={lat.rank}"]
    lines += [f"  subgroup d={d}:  H^0 = {h0}   H^-1 = {h1}" for d, h0, h1 in rows]
    _emit(payload, args.json, "\n".join(lines))
    return 0


def cmd_resolve(args: argparse.Namespace) -> int:
    lat = _load_lattice(args.lattice)
    res = flabby_resolution(lat)
    report = verify_resolution(res)
    payload = {
        "schema": SCHEMA,
        "n": lat.group.order,
        "ranks": {"m": res.m.rank, "q": res.q.rank, "e": res.e.rank},
        "q_shape": list(res.q_shape),
        "verified": report.ok,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in report.checks],
    }
    lines = [f"resolution of n={lat.group.order} rank={lat.rank} lattice:",
             f"  ranks: m={res.m.rank}  q={res.q.rank}  e={res.e.rank}",
             f"  q as coset lattices, subgroup orders: {list(res.q_shape)}",
             str(report)]
    _emit(payload, args.json, "\n".join(lines))
    return 0 if report.ok else 1


def cmd_verify(args: argparse.Namespace) -> int:
    basis = invariant_basis(args.p)
    images = galois_images(basis)
    extracted = galois_action_matrix(args.p)
    expected, params = noether_lattice(args.p)
    match = extracted == expected.action
    payload = {
        "schema": SCHEMA,
        "p": args.p,
        "t": basis.t,
        "basis": [str(m) for m in basis.monomials],
        "images": [str(m) for m in images],
        "extracted": [list(row) for row in extracted.data],
        "expected": [list(row) for row in expected.action.data],
        "match": match,
    }
    lines = [f"p = {args.p}, primitive root t = {basis.t}"]
    for i, (m, im) in enumerate(zip(basis.monomials, images), start=1):
        lines.append(f"  z{i} = {m}    ->    {im}")
    lines.append("extracted action matrix:")
    lines.append(str(extracted))
    lines.append(f"match with the direct construction (t={params.t}, s={params.s}): "
                 f"{'yes' if match else 'NO'}")
    _emit(payload, args.json, "\n".join(lines))
    return 0 if match else 1


def cmd_table(args: argparse.Namespace) -> int:
    entries = verdict_table(args.max, seed=args.seed)
    payload = {
        "schema": SCHEMA,
        "max": args.max,
        "base_field": [0, 1],
        "entries": [{"p": p, "outcome": v.outcome} for p, v in entries],
    }
    lines = [f"p = {p:>3}  {v.outcome}" for p, v in entries]
    _emit(payload, args.json, "\n".join(lines))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noetherlat",
        description="Exact lattice cohomology and rationality verdicts for "
                    "the prime-degree cyclic invariant field problem.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="rationality verdict for a prime over a number field")
    p_classify.add_argument("--field", required=True,
                            help="monic defining polynomial, ascending coefficients, "
                                 "e.g. '0 1' for X or '-2 0 1' for X^2 - 2")
    p_classify.add_argument("--p", type=int, required=True, help="prime degree")
    p_classify.add_argument("--seed", type=int, default=0)
    p_classify.add_argument("--json", action="store_true")
    p_classify.set_defaults(func=cmd_classify)

    p_lattice = sub.add_parser(
        "lattice", help="dump the descent lattice for a prime")
    p_lattice.add_argument("--p", type=int, required=True)
    p_lattice.add_argument("--json", action="store_true")
    p_lattice.set_defaults(func=cmd_lattice)

    p_coh = sub.add_parser(
        "cohomology", help="Tate cohomology table of a lattice file")
    p_coh.add_argument("--lattice", required=True, help="path to a lattice file")
    p_coh.add_argument("--subgroup", type=int, default=None,
                       help="restrict to the subgroup of this order")
    p_coh.add_argument("--json", action="store_true")
    p_coh.set_defaults(func=cmd_cohomology)

    p_res = sub.add_parser(
        "resolve", help="build and verify a flabby resolution of a lattice file")
    p_res.add_argument("--lattice", required=True, help="path to a lattice file")
    p_res.add_argument("--json", action="store_true")
    p_res.set_defaults(func=cmd_resolve)

    p_verify = sub.add_parser(
        "verify", help="cross-check the lattice against the monomial route")
    p_verify.add_argument("--p", type=int, required=True)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser(
        "table", help="verdicts over Q for every prime up to a bound")
    p_table.add_argument("--max", type=int, required=True)
    p_table.add_argument("--seed", type=int, default=0)
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
