"""Command-line front end: field inspection, exponential sums, code
enumeration, closed-form prediction, and verification."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from . import charsum, codebuild, gfield, oracle

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NOT_APPLICABLE = 3

GRID = [(3, 2, 1), (3, 2, 2), (3, 3, 1), (3, 4, 1), (5, 2, 1)]


@dataclass
class RunConfig:
    subcommand: str
    p: int = 0
    m: int = 0
    alpha: int = 1
    a: int = 0
    variant: str = "plain"
    kind: Optional[str] = None
    b: int = 0
    c: int = 0
    modulus: Optional[list[int]] = None
    fmt: str = "json"
    strict: bool = False
    threads: int = 1
    out: Optional[str] = None
    verify_sums: bool = False
    grid: bool = False


def _add_common(sub: argparse.ArgumentParser, need_a: bool = True) -> None:
    sub.add_argument("--p", type=int, required=True, help="odd prime field characteristic")
    size = sub.add_mutually_exclusive_group(required=True)
    size.add_argument("--m", type=int, help="half extension degree (e = 2m)")
    size.add_argument("--e", type=int, help="extension degree (must be even)")
    sub.add_argument("--alpha", type=int, default=1, help="power-map exponent parameter")
    if need_a:
        sub.add_argument("--a", type=int, default=0, help="defining-set trace value")
    sub.add_argument("--modulus", type=str, default=None, help="JSON coefficient list, constant first")
    sub.add_argument("--format", dest="fmt", choices=["json", "csv"], default="json")
    sub.add_argument("--strict", action="store_true", help="treat recorded errata as failures")
    sub.add_argument("--threads", type=int, default=1)
    sub.add_argument("--out", type=str, default=None, help="output path (default: stdout)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cwecodes")
    subs = parser.add_subparsers(dest="subcommand", required=True)

    sp = subs.add_parser("field-info", help="print field parameters")
    _add_common(sp, need_a=False)

    sp = subs.add_parser("sums", help="evaluate an exponential sum")
    _add_common(sp)
    sp.add_argument("--kind", choices=["gauss", "S", "A", "B", "solvable"], required=True)
    sp.add_argument("--b", type=int, default=0, help="extension element code for S/B")
    sp.add_argument("--c", type=int, default=0, help="prime-field residue for B")
    sp.add_argument("--verify", action="store_true", help="also run the definitional sum")

    for name in ("enumerate", "predict"):
        sp = subs.add_parser(name, help=f"{name} a complete weight enumerator")
        _add_common(sp)
        sp.add_argument("--variant", choices=["plain", "bar"], default="plain")

    sp = subs.add_parser("verify", help="diff enumeration against closed-form prediction")
    _add_common(sp)
    sp.add_argument("--variant", choices=["plain", "bar"], default="plain")
    sp.add_argument("--grid", action="store_true", help="run the whole acceptance grid")
    return parser


def _resolve_m(args) -> int:
    if getattr(args, "m", None) is not None:
        return args.m
    if args.e is None or args.e % 2 != 0:
        raise ValueError("--e must be even")
    return args.e // 2


def _field(args, m: int) -> gfield.FieldContext:
    override = json.loads(args.modulus) if args.modulus else None
    if override is not None:
        return gfield.build_field(args.p, 2 * m, override)
    return gfield.get_field(args.p, 2 * m)


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_doc(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _cwe_csv(cwe: codebuild.CompleteWeightEnumerator) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    p = cwe.p
    writer.writerow([f"t{i}" for i in range(p)] + ["count"])
    for comp, cnt in cwe.sorted_terms():
        writer.writerow(list(comp) + [cnt])
    return buf.getvalue()


def _cmd_field_info(args) -> int:
    m = _resolve_m(args)
    ctx = _field(args, m)
    _emit(args, _json_doc(ctx.to_json()))
    return EXIT_OK


def _cmd_sums(args) -> int:
    m = _resolve_m(args)
    ctx = _field(args, m)
    kind = args.kind
    if kind == "gauss":
        doc = {"prime": charsum.gauss_prime(args.p).to_json(), "ext": charsum.gauss_ext(ctx).to_json()}
    elif kind == "S":
        doc = charsum.weil_s(ctx, args.alpha, args.a, args.b, verify=args.verify).to_json()
    elif kind == "A":
        doc = charsum.a_sum(ctx, args.alpha, args.a, verify=args.verify).to_json()
    elif kind == "B":
        doc = charsum.b_sum(ctx, args.alpha, args.a, args.c, args.b, verify=args.verify).to_json()
    else:
        doc = charsum.solvable_count(ctx, args.alpha).to_json()
    _emit(args, _json_doc(doc))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    m = _resolve_m(args)
    ctx = _field(args, m)
    spec = codebuild.CodeSpec(args.p, m, args.alpha, args.a % args.p, args.variant)
    cwe = codebuild.enumerate_cwe(ctx, spec, threads=args.threads)
    if args.fmt == "csv":
        _emit(args, _cwe_csv(cwe))
    else:
        _emit(args, _json_doc(cwe.to_json(spec)))
    return EXIT_OK


def _cmd_predict(args) -> int:
    m = _resolve_m(args)
    spec = codebuild.CodeSpec(args.p, m, args.alpha, args.a % args.p, args.variant)
    app = oracle.applicability(spec)
    if not app.applicable:
        sys.stderr.write(f"no closed form applies: {app.reason}\n")
        return EXIT_NOT_APPLICABLE
    cwe = oracle.predict_cwe(spec)
    if args.fmt == "csv":
        _emit(args, _cwe_csv(cwe))
    else:
        doc = cwe.to_json(spec)
        doc["case"] = app.case
        doc["weight_distribution"] = oracle.predict_wd(spec).to_json()
        _emit(args, _json_doc(doc))
    return EXIT_OK


def _grid_specs(p_filter=None):
    for p, m, alpha in GRID:
        for a in range(p):
            for variant in ("plain", "bar"):
                yield codebuild.CodeSpec(p, m, alpha, a, variant)


def _cmd_verify(args) -> int:
    m = _resolve_m(args)
    if args.grid:
        reports = []
        ok = True
        for spec in _grid_specs():
            ctx = gfield.get_field(spec.p, spec.e)
            rep = oracle.verify(spec, ctx, threads=args.threads)
            ok = ok and rep.ok(strict=args.strict)
            reports.append(
                {
                    "spec": spec.to_json(),
                    "case": rep.case,
                    "n": rep.n,
                    "k": rep.k,
                    "min_distance": rep.min_distance,
                    "wd_match": rep.wd_match,
                    "cwe_match": rep.cwe_match,
                    "errata": rep.errata,
                }
            )
        _emit(args, _json_doc({"grid": reports, "ok": ok}))
        return EXIT_OK if ok else EXIT_MISMATCH
    ctx = _field(args, m)
    spec = codebuild.CodeSpec(args.p, m, args.alpha, args.a % args.p, args.variant)
    rep = oracle.verify(spec, ctx, threads=args.threads)
    _emit(args, _json_doc(rep.to_json()))
    return EXIT_OK if rep.ok(strict=args.strict) else EXIT_MISMATCH


_DISPATCH = {
    "field-info": _cmd_field_info,
    "sums": _cmd_sums,
    "enumerate": _cmd_enumerate,
    "predict": _cmd_predict,
    "verify": _cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _DISPATCH[args.subcommand](args)
    except (ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
