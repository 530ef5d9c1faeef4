"""Command-line entry point.

Exit codes: 0 success, 1 verification mismatch, 2 resource bound exceeded,
3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from cauchon import jsonio
from cauchon.config import Cache, RunConfig
from cauchon.fields import parse_field
from cauchon.grid import BoundError, CauchonDiagram, GridShape, enumerate_diagrams
from cauchon.harness import (
    verify_bijection,
    verify_bruhat_interval,
    verify_counts,
    verify_equivalence,
)
from cauchon.minors import enumerate_minors, family_conditions, minor_family
from cauchon.perms import diagram_to_permutation, enumerate_restricted, permutation_to_diagram
from cauchon.restoration import local_identity_sweep, trial_rng, vanishing_set
from cauchon.tnn import cell_witness, realize_tnn, sample_weights, unit_weights

EXIT_OK, EXIT_MISMATCH, EXIT_BOUND, EXIT_INPUT = 0, 1, 2, 3


class InputError(ValueError):
    pass


class Mismatch(Exception):
    def __init__(self, text: str):
        super().__init__("verification mismatch")
        self.text = text


def _common(parser: argparse.ArgumentParser, shape_required: bool = False):
    parser.add_argument("--m", type=int, required=shape_required, help="row count")
    parser.add_argument("--p", type=int, required=shape_required, help="column count")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=5, help="random evaluations per minor")
    parser.add_argument("--field", default="prime", help="prime, prime:<q> or rational")
    parser.add_argument("--cache-dir", default=None, help="cache directory (env CAUCHON_CACHE_DIR overrides)")
    parser.add_argument("--format", choices=("json", "table"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cauchon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list diagrams, restricted permutations or minors")
    _common(p, shape_required=True)
    p.add_argument("kind", choices=("diagrams", "permutations", "minors"))

    p = sub.add_parser("map", help="pipe-dream image of a diagram, or preimage of a permutation")
    _common(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--diagram")
    g.add_argument("--perm")

    p = sub.add_parser("family", help="the minor family of a restricted permutation")
    _common(p, shape_required=True)
    p.add_argument("--perm", required=True)
    p.add_argument("--explain", action="store_true", help="per-minor condition breakdown")

    p = sub.add_parser("vanish", help="oracle vanishing set of a diagram")
    _common(p)
    p.add_argument("--diagram", required=True)

    p = sub.add_parser("witness", help="totally nonnegative witness for a diagram")
    _common(p)
    p.add_argument("--diagram", required=True)
    p.add_argument("--weights", choices=("random", "unit"), default="random")
    p.add_argument("--samples", type=int, default=1, help="extra samples for the consistency flag")

    p = sub.add_parser("verify", help="run the desk-scale verification suite for one shape")
    _common(p, shape_required=True)
    p.add_argument("--level", choices=("counts", "full"), default="full")
    p.add_argument("--sample", type=int, default=None, help="verify a seeded sample of diagrams")
    p.add_argument("--samples", type=int, default=10, help="positive weight draws per diagram")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("identity-check", help="sweep the local minor identities over a shape")
    _common(p, shape_required=True)
    p.add_argument("--assignments", type=int, default=3)
    return parser


def _shape(args) -> GridShape:
    if args.m is None or args.p is None:
        raise InputError("--m and --p are required here")
    try:
        return GridShape(args.m, args.p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _load_json(text: str):
    path = Path(text)
    if not text.lstrip().startswith(("{", "[")) and path.is_file():
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {text!r}") from exc


def _diagram(args) -> CauchonDiagram:
    if args.diagram in ("all-white", "all-black"):
        shape = _shape(args)
        return CauchonDiagram.all_white(shape) if args.diagram == "all-white" else CauchonDiagram.all_black(shape)
    try:
        return jsonio.diagram_from_json(_load_json(args.diagram))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _perm(args):
    try:
        return jsonio.permutation_from_json(_load_json(args.perm))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _config(args, **extra) -> RunConfig:
    return RunConfig(
        m=args.m or 0,
        p=args.p or 0,
        seed=args.seed,
        trials=args.trials,
        field=args.field,
        cache_dir=args.cache_dir,
        format=args.format,
        extra=tuple(sorted(extra.items())),
    )


def _lines(objs) -> str:
    return "".join(jsonio.dumps(o) + "\n" for o in objs)


def cmd_enumerate(args) -> str:
    shape = _shape(args)
    if args.kind == "diagrams":
        items = list(enumerate_diagrams(shape))
        objs = [jsonio.diagram_to_json(d) for d in items]
        rows = ["/".join(d.rows()) for d in items]
    elif args.kind == "permutations":
        items = list(enumerate_restricted(shape))
        objs = [jsonio.permutation_to_json(w) for w in items]
        rows = [" ".join(map(str, w.images)) for w in items]
    else:
        items = list(enumerate_minors(shape))
        objs = [jsonio.minor_to_json(ix) for ix in items]
        rows = [str(ix) for ix in items]
    if args.format == "table":
        return "\n".join(rows) + f"\n# {args.kind}: {len(items)}\n"
    return _lines(objs + [{"kind": args.kind, "m": shape.m, "p": shape.p, "count": len(items)}])


def cmd_map(args) -> str:
    if args.diagram is not None:
        d = _diagram(args)
        w = diagram_to_permutation(d)
        out = {"diagram": jsonio.diagram_to_json(d), "permutation": jsonio.permutation_to_json(w)}
    else:
        w = _perm(args)
        shape = _shape(args)
        try:
            d = permutation_to_diagram(w, shape)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        out = {"permutation": jsonio.permutation_to_json(w), "diagram": jsonio.diagram_to_json(d)}
    if args.format == "table":
        return " ".join(map(str, w.images)) + "\n" + "\n".join(d.rows()) + "\n"
    return jsonio.dumps(out) + "\n"


def cmd_family(args) -> str:
    shape = _shape(args)
    w = _perm(args)
    try:
        fam = minor_family(w, shape)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.format == "table":
        return " ".join(str(ix) for ix in fam) + f"\n# {len(fam)} minors\n"
    out = jsonio.family_to_json(fam)
    if args.explain:
        out["conditions"] = [
            dict(jsonio.minor_to_json(ix), **family_conditions(w, ix, shape)._asdict())
            for ix in enumerate_minors(shape)
        ]
    return jsonio.dumps(out) + "\n"


def cmd_vanish(args) -> str:
    d = _diagram(args)
    cfg = _config(args, diagram=d.mask, m=d.shape.m, p=d.shape.p)

    def compute():
        report = vanishing_set(d, args.trials, parse_field(args.field), args.seed)
        if args.format == "table":
            return " ".join(str(ix) for ix in report.vanishing) + f"\n# {len(report.vanishing)} vanishing minors\n"
        return jsonio.dumps(jsonio.vanishing_report_to_json(report)) + "\n"

    return _cached("vanish", cfg, compute)


def cmd_witness(args) -> str:
    d = _diagram(args)
    if args.weights == "unit":
        w = realize_tnn(d, unit_weights(d))
        consistent = None
    else:
        rng = trial_rng(args.seed, "tnn", d.shape.m, d.shape.p, d.mask, 0)
        w = realize_tnn(d, sample_weights(d, rng))
        consistent = None
        if args.samples > 1:
            consistent = cell_witness(d, args.samples, args.seed, args.trials, parse_field(args.field)).consistent
    if args.format == "table":
        rows = ["  ".join(jsonio.fraction_to_json(x) for x in row) for row in w.matrix]
        return "\n".join(rows) + "\nzero: " + " ".join(str(ix) for ix in w.zero_set) + "\n"
    out = jsonio.witness_to_json(w)
    if consistent is not None:
        out["consistent"] = consistent
    return jsonio.dumps(out) + "\n"


def _verify_text(args, shape: GridShape) -> tuple[str, bool]:
    field = parse_field(args.field)
    lines = []
    counts = verify_counts(shape)
    bij = verify_bijection(shape)
    ok = counts.equal and bij.ok
    summary = {
        "summary": True,
        "m": shape.m,
        "p": shape.p,
        "level": args.level,
        "seed": args.seed,
        "diagrams": counts.diagrams,
        "restricted": counts.restricted,
        "counts_equal": counts.equal,
        "bijection": bij.ok,
    }
    if shape.m + shape.p <= 8:
        interval = verify_bruhat_interval(shape)
        summary["bruhat_interval"] = interval.equal
        ok = ok and interval.equal
    if args.level == "full":
        n_equal = n_total = 0
        for rec in verify_equivalence(shape, args.trials, args.sample, args.seed, args.samples, field, args.workers):
            n_total += 1
            n_equal += rec.all_equal
            if args.format == "json":
                lines.append(jsonio.dumps(_record_json(rec)))
            else:
                lines.append(f"{'/'.join(rec.diagram.rows()):<24} {' '.join(map(str, rec.permutation.images)):<20} {rec.verdict}")
        summary.update(records=n_total, all_equal=n_equal, mismatches=n_total - n_equal)
        ok = ok and n_equal == n_total
    summary["ok"] = ok
    if args.format == "json":
        lines.append(jsonio.dumps(summary))
    else:
        lines.append("# " + ", ".join(f"{k}={v}" for k, v in summary.items() if k != "summary"))
    return "\n".join(lines) + "\n", ok


def _record_json(rec) -> dict:
    out = {
        "diagram": jsonio.diagram_to_json(rec.diagram),
        "permutation": jsonio.permutation_to_json(rec.permutation),
        "family": jsonio.family_to_json(rec.family)["minors"],
        "vanishing": jsonio.family_to_json(rec.vanishing)["minors"],
        "zero_set": jsonio.family_to_json(rec.zero_set)["minors"],
        "verdict": rec.verdict,
    }
    if rec.diff:
        out["diff"] = rec.diff
    return out


def cmd_verify(args) -> str:
    shape = _shape(args)
    cfg = _config(args, level=args.level, sample=args.sample, samples=args.samples)
    text = _cached("verify", cfg, lambda: _verify_text(args, shape)[0])
    if not _summary_ok(text, args.format):
        raise Mismatch(text)
    return text


def _summary_ok(text: str, fmt: str) -> bool:
    last = text.rstrip("\n").rsplit("\n", 1)[-1]
    if fmt == "json":
        return json.loads(last)["ok"]
    return "ok=True" in last


def cmd_identity_check(args) -> str:
    shape = _shape(args)
    field = None if args.field == "prime" else parse_field(args.field)
    report = local_identity_sweep(shape, args.assignments, args.seed, field)
    out = {
        "m": shape.m,
        "p": shape.p,
        "assignments": report.assignments,
        "checked": {f"case{k}": v for k, v in sorted(report.checked.items())},
        "failures": report.failures,
        "ok": report.ok,
    }
    text = jsonio.dumps(out) + "\n"
    if not report.ok:
        raise Mismatch(text)
    return text


def _cached(command: str, cfg: RunConfig, compute) -> str:
    root = cfg.resolved_cache_dir()
    if root is None:
        return compute()
    return Cache(root).get_or_compute(command, cfg, compute)


COMMANDS = {
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "family": cmd_family,
    "vanish": cmd_vanish,
    "witness": cmd_witness,
    "verify": cmd_verify,
    "identity-check": cmd_identity_check,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        sys.stdout.write(COMMANDS[args.command](args))
    except Mismatch as exc:
        sys.stdout.write(exc.text)
        return EXIT_MISMATCH
    except BoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
