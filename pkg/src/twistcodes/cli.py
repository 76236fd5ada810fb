"""Command-line interface.

Every subcommand echoes its configuration (including the seed) in an
output header and supports two formats: a human-readable table that
prints algebra elements in gbar notation, and JSON lines where each
record is one object.  Identical configuration produces byte-identical
output.

Exit status: 0 on success, 1 when a verification or certification fails
(reference-example check failures, LCD criterion disagreement, distance
budget exhausted), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__
from .codes import (
    DEFAULT_BUDGET,
    LinearCode,
    check_idempotent_lcd,
    dual,
    ideal_from_element,
    idempotent_generator,
    is_lcd,
    min_distance,
)
from .discover import (
    BestKnownTable,
    search_lcd,
    verify_reference_examples,
)
from .errors import BudgetExceeded, Error
from .gf import GF, FieldElem, FieldSpec, norm_image_classes
from .poly import Poly, factor_xn_minus_lambda, primitive_idempotents
from .talg import AlgebraCtx, equivalence_witness

ENV_TABLE = "TWISTCODES_TABLE"


# ---------------------------------------------------------------------------
# parsing helpers


def parse_field(args) -> FieldSpec:
    modulus = None
    if args.modulus:
        modulus = [int(c) for c in args.modulus.split(",")]
    return GF(args.q, modulus=modulus, seed=args.seed)


def parse_elem(field: FieldSpec, text: str) -> FieldElem:
    """A single element: '5' (prime-subfield value) or '1,2' (coordinates)."""
    parts = [int(p) for p in text.split(",")]
    if len(parts) == 1:
        return field.element(parts[0])
    return field.element(parts)


def parse_elem_seq(field: FieldSpec, text: str) -> list[FieldElem]:
    """A coefficient sequence: elements separated by ';', coordinates of
    one element by ','.  Prime fields may use ',' between elements."""
    if ";" in text:
        return [parse_elem(field, chunk) for chunk in text.split(";")]
    parts = [int(p) for p in text.split(",")]
    if field.m == 1:
        return [field.element(p) for p in parts]
    return [field.element(parts)]


def make_ctx(args) -> AlgebraCtx:
    field = parse_field(args)
    return AlgebraCtx(field, args.n, parse_elem(field, args.lam))


def load_table(args) -> Optional[BestKnownTable]:
    path = getattr(args, "table", None) or os.environ.get(ENV_TABLE)
    if path:
        return BestKnownTable.load(path)
    return BestKnownTable.bundled()


def element_from_args(ctx: AlgebraCtx, args):
    """The subject element of code-like subcommands: an explicit
    idempotent, a generator polynomial, or a subset mask."""
    given = [x is not None for x in (args.idempotent, args.genpoly, args.mask)]
    if sum(given) != 1:
        raise Error("exactly one of --idempotent, --genpoly, --mask is required")
    if args.idempotent is not None:
        return ctx.elem(parse_elem_seq(ctx.field, args.idempotent))
    if args.genpoly is not None:
        g = Poly(ctx.field, parse_elem_seq(ctx.field, args.genpoly))
        g = g % Poly.xn_minus(ctx.field, ctx.n, ctx.lam)
        return ctx.elem(g.coeffs)
    prims = primitive_idempotents(ctx.field, ctx.n, ctx.lam, seed=args.seed)
    if not 0 <= args.mask < (1 << len(prims)):
        raise Error(f"mask {args.mask} out of range for {len(prims)} factors")
    e = ctx.zero
    for i, p in enumerate(prims):
        if args.mask >> i & 1:
            e = e + ctx.elem(p.coeffs)
    return e


# ---------------------------------------------------------------------------
# output


class Emitter:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def header(self, command: str, args, **extra):
        rec = {
            "record": "header",
            "command": command,
            "seed": args.seed,
            "version": __version__,
        }
        rec.update(extra)
        if self.fmt == "json":
            print(json.dumps(rec, sort_keys=True))
        else:
            items = " ".join(f"{k}={rec[k]}" for k in sorted(extra))
            print(f"# twistcodes {command} seed={args.seed} {items}".rstrip())

    def record(self, rec: dict, human: str):
        if self.fmt == "json":
            print(json.dumps(rec, sort_keys=True))
        else:
            print(human)


def field_header(field: FieldSpec) -> dict:
    return {"q": field.q, "p": field.p, "m": field.m, "modulus": list(field.modulus)}


def fmt_rows(code: LinearCode) -> str:
    lines = []
    for row in code.gen:
        lines.append("  [" + " ".join(str(code.field.from_index(int(i))) for i in row) + "]")
    return "\n".join(lines) if lines else "  (no rows)"


# ---------------------------------------------------------------------------
# subcommands


def cmd_factor(args, out: Emitter) -> int:
    ctx = make_ctx(args)
    out.header("factor", args, **field_header(ctx.field), n=ctx.n, lam=str(ctx.lam))
    factors = factor_xn_minus_lambda(ctx.field, ctx.n, ctx.lam, seed=args.seed)
    for i, f in enumerate(factors):
        out.record(
            {"record": "factor", "index": i, "degree": f.degree, "coeffs": f.ser()},
            f"factor {i}: {f}",
        )
    return 0


def cmd_idempotents(args, out: Emitter) -> int:
    ctx = make_ctx(args)
    out.header("idempotents", args, **field_header(ctx.field), n=ctx.n, lam=str(ctx.lam))
    prims = primitive_idempotents(ctx.field, ctx.n, ctx.lam, seed=args.seed)
    for i, p in enumerate(prims):
        e = ctx.elem(p.coeffs)
        out.record(
            {"record": "idempotent", "index": i, "coeffs": e.ser()},
            f"e_{i} = {e}",
        )
    return 0


def cmd_code(args, out: Emitter) -> int:
    ctx = make_ctx(args)
    out.header("code", args, **field_header(ctx.field), n=ctx.n, lam=str(ctx.lam))
    e = element_from_args(ctx, args)
    C = ideal_from_element(e)
    out.record(
        {"record": "code", **C.to_dict(), "generator": e.ser()},
        f"[{C.n},{C.k}] code over GF({ctx.field.q}), generator {e}\n{fmt_rows(C)}",
    )
    return 0


def cmd_dual(args, out: Emitter) -> int:
    ctx = make_ctx(args)
    out.header(
        "dual", args, **field_header(ctx.field), n=ctx.n, lam=str(ctx.lam), galois=args.galois
    )
    e = element_from_args(ctx, args)
    C = ideal_from_element(e)
    D = dual(C, args.galois)
    m, k = ctx.field.m, args.galois
    shift_const = (ctx.lam.frobenius((m - k) % m)).inverse()
    out.record(
        {"record": "dual", "galois_k": k, **D.to_dict(), "shift_constant": shift_const.ser()},
        f"{k}-Galois dual: [{D.n},{D.k}] code, {shift_const}-constacyclic\n{fmt_rows(D)}",
    )
    return 0


def cmd_distance(args, out: Emitter) -> int:
    ctx = make_ctx(args)
    out.header(
        "distance", args, **field_header(ctx.field), n=ctx.n, lam=str(ctx.lam), budget=args.budget
    )
    e = element_from_args(ctx, args)
    C = ideal_from_element(e)
    try:
        cert = min_distance(C, budget=args.budget, method=args.method)
    except BudgetExceeded as exc:
        out.record(
            {
                "record": "distance",
                "status": "budget-exceeded",
                "lower": exc.lower,
                "upper": exc.upper,
                "work": exc.work,
            },
            f"budget exceeded: {exc.lower} <= d <= {exc.upper}, work {exc.work}",
        )
        return 1
    wit = " ".join(str(c) for c in cert.witness)
    out.record(
        {"record": "distance", **cert.to_dict()},
        f"[{C.n},{C.k},{cert.d}] via {cert.method}, work {cert.work}, witness ({wit})",
    )
    return 0


def cmd_lcd_check(args, out: Emitter) -> int:
    ctx = make_ctx(args)
    out.header(
        "lcd-check", args, **field_header(ctx.field), n=ctx.n, lam=str(ctx.lam), galois=args.galois
    )
    e = element_from_args(ctx, args)
    C = ideal_from_element(e)
    gen = idempotent_generator(C, ctx)
    sub = is_lcd(C, args.galois)
    lam2 = ctx.lam * ctx.lam == ctx.field.one
    idem = check_idempotent_lcd(gen, args.galois) if lam2 else None
    agree = (idem is None) or (idem == sub)
    out.record(
        {
            "record": "lcd-check",
            "galois_k": args.galois,
            "k": C.k,
            "subspace_lcd": sub,
            "idempotent_lcd": idem,
            "agree": agree,
        },
        f"[{C.n},{C.k}]: subspace criterion {sub}, idempotent criterion "
        f"{idem if idem is not None else 'n/a (lam^2 != 1)'}, agree: {agree}",
    )
    return 0 if agree else 1


def cmd_equiv(args, out: Emitter) -> int:
    field = parse_field(args)
    lam = parse_elem(field, args.lam)
    beta = parse_elem(field, args.beta)
    out.header(
        "equiv", args, **field_header(field), n=args.n, lam=str(lam), beta=str(beta)
    )
    w = equivalence_witness(field, args.n, lam, beta)
    out.record(
        {
            "record": "equiv",
            "equivalent": w is not None,
            "witness": None if w is None else w.ser(),
        },
        f"witness a = {w} with lam = a^{args.n} * beta" if w is not None else "inequivalent",
    )
    return 0


def cmd_h2(args, out: Emitter) -> int:
    field = parse_field(args)
    out.header("h2", args, **field_header(field), n=args.n)
    count, reps = norm_image_classes(field, args.n)
    out.record(
        {"record": "h2", "classes": count, "representatives": [r.ser() for r in reps]},
        f"{count} classes; representatives: " + ", ".join(str(r) for r in reps),
    )
    return 0


def cmd_search(args, out: Emitter) -> int:
    ctx = make_ctx(args)
    out.header(
        "search",
        args,
        **field_header(ctx.field),
        n=ctx.n,
        lam=str(ctx.lam),
        galois=args.galois,
        budget=args.budget,
    )
    table = load_table(args)
    records = search_lcd(
        ctx,
        k=args.galois,
        distances=not args.no_distances,
        budget=args.budget,
        table=table,
        seed=args.seed,
        min_dim=args.min_dim,
    )
    for rec in records:
        d = rec.d if rec.d is not None else "?"
        out.record(
            {"record": "code-record", **rec.to_dict()},
            f"mask {rec.subset_mask:>4}: [{rec.n},{rec.k},{d}] verdict={rec.verdict} "
            f"e = {rec.idempotent}",
        )
    return 0


def cmd_verify_examples(args, out: Emitter) -> int:
    out.header("verify-examples", args, budget=args.budget)
    names = args.example if args.example else None
    report = verify_reference_examples(names=names, budget=args.budget)
    for ex in report.examples:
        for c in ex.checks:
            out.record(
                {
                    "record": "check",
                    "example": ex.name,
                    "label": c.label,
                    "passed": c.passed,
                    "detail": c.detail,
                },
                f"[{'pass' if c.passed else 'FAIL'}] {ex.name}: {c.label}"
                + (f" ({c.detail})" if c.detail else ""),
            )
        out.record(
            {"record": "example-summary", "example": ex.name, "passed": ex.passed},
            f"{'PASS' if ex.passed else 'FAIL'}  {ex.name}",
        )
    out.record(
        {"record": "summary", "passed": report.passed},
        f"overall: {'PASS' if report.passed else 'FAIL'}",
    )
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------


def _add_field_opts(p: argparse.ArgumentParser):
    p.add_argument("-q", type=int, required=True, help="field order (prime power)")
    p.add_argument("--modulus", help="comma-separated modulus coefficients, low degree first")
    p.add_argument("--seed", type=int, default=0, help="seed for modulus search and factorization")
    p.add_argument("--format", choices=("table", "json"), default="table")


def _add_ctx_opts(p: argparse.ArgumentParser):
    _add_field_opts(p)
    p.add_argument("-n", type=int, required=True, help="group order / code length")
    p.add_argument("--lam", required=True, help="wrap unit: integer or coordinate list")


def _add_element_opts(p: argparse.ArgumentParser):
    p.add_argument("--idempotent", help="coefficient sequence of the generating element")
    p.add_argument("--genpoly", help="generator polynomial coefficients")
    p.add_argument("--mask", type=int, help="subset mask over the primitive idempotents")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="twistcodes",
        description="constacyclic codes as ideals of twisted group algebras",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="irreducible factors of x^n - lam")
    _add_ctx_opts(p)
    p.set_defaults(run=cmd_factor)

    p = sub.add_parser("idempotents", help="primitive idempotents of the quotient")
    _add_ctx_opts(p)
    p.set_defaults(run=cmd_idempotents)

    p = sub.add_parser("code", help="the ideal generated by an element")
    _add_ctx_opts(p)
    _add_element_opts(p)
    p.set_defaults(run=cmd_code)

    p = sub.add_parser("dual", help="k-Galois dual of an ideal")
    _add_ctx_opts(p)
    _add_element_opts(p)
    p.add_argument("--galois", type=int, default=0, metavar="K")
    p.set_defaults(run=cmd_dual)

    p = sub.add_parser("distance", help="certified minimum distance")
    _add_ctx_opts(p)
    _add_element_opts(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--method", choices=("auto", "exhaustive", "info-set"), default="auto")
    p.set_defaults(run=cmd_distance)

    p = sub.add_parser("lcd-check", help="both LCD criteria and their agreement")
    _add_ctx_opts(p)
    _add_element_opts(p)
    p.add_argument("--galois", type=int, default=0, metavar="K")
    p.set_defaults(run=cmd_lcd_check)

    p = sub.add_parser("equiv", help="equivalence witness between two wrap units")
    _add_field_opts(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--lam", required=True)
    p.add_argument("--beta", required=True)
    p.set_defaults(run=cmd_equiv)

    p = sub.add_parser("h2", help="norm-map cosets: count and representatives")
    _add_field_opts(p)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(run=cmd_h2)

    p = sub.add_parser("search", help="enumerate LCD ideals, best first")
    _add_ctx_opts(p)
    p.add_argument("--galois", type=int, default=0, metavar="K")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--table", help=f"best-known table path (default ${ENV_TABLE} or bundled)")
    p.add_argument("--no-distances", action="store_true")
    p.add_argument("--min-dim", type=int, default=0)
    p.set_defaults(run=cmd_search)

    p = sub.add_parser("verify-examples", help="re-derive the bundled reference examples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument(
        "--example",
        action="append",
        help="restrict to examples whose name contains this substring (repeatable)",
    )
    p.set_defaults(run=cmd_verify_examples)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Emitter(args.format)
    try:
        return args.run(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (Error, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
