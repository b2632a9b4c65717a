"""Command-line interface: ``hosoyapoly <command> ...``.

Exit status is 0 when every requested verification passes, 1 when one
fails (the failing reports are printed as JSON on stdout) and 2 on usage
errors such as an unknown family.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Optional, Sequence

from . import gfp, gibonomial, hosoya, identities, numtriangles, stardavid
from .errors import HosoyaError, NotBinetEligible, NotFibonacciType, NotTheoremGrade, NotTyped
from .gfp import builtin_family, family_names, term
from .polyarith import eval_at, format_poly, parse_poly, verify_gcd_multiplicativity
from .report import Status, VerificationReport

DEFAULT_SEED = identities.DEFAULT_SEED
ROWS_ENV = "HOSOYAPOLY_ROWS"


class UsageError(Exception):
    pass


def _default_rows(fallback: int) -> int:
    raw = os.environ.get(ROWS_ENV)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ROWS_ENV} must be an integer, got {raw!r}") from None


def _families(name: str) -> list[str]:
    if name == "all":
        return family_names()
    builtin_family(name)  # raises UnknownFamily
    return [gfp._LOOKUP[name.lower()]]


def _emit(out, payload, fmt: str) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write(payload if isinstance(payload, str) else str(payload))


def _table(rows: Sequence[Sequence]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells if i < len(r)) for i in range(max(map(len, cells)))]
    return "".join(
        "  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip() + "\n" for row in cells
    )


# ---------------------------------------------------------------------------
# generation commands


def cmd_families(args, out) -> int:
    data = []
    for name in family_names(include_extra=args.extra):
        s = builtin_family(name)
        data.append(
            {
                "family": name,
                "p0": format_poly(s.p0),
                "p1": format_poly(s.p1),
                "d": format_poly(s.d),
                "g": format_poly(s.g),
                "kind": s.kind.value,
                "theorem_grade": s.theorem_grade,
            }
        )
    if args.format == "json":
        _emit(out, data, "json")
    else:
        keys = ["family", "p0", "p1", "d", "g", "kind", "theorem_grade"]
        _emit(out, _table([keys] + [[d[k] for k in keys] for d in data]), "table")
    return 0


def cmd_seq(args, out) -> int:
    spec = builtin_family(args.family)
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    indices = range(args.n + 1) if args.all else [args.n]
    terms = [(i, term(spec, i)) for i in indices]
    if args.format == "json":
        payload = {"family": spec.family_name, "terms": {str(i): format_poly(p) for i, p in terms}}
        if args.x is not None:
            payload["values"] = {str(i): eval_at(p, args.x) for i, p in terms}
        _emit(out, payload, "json")
    elif args.format == "bfile":
        _emit(out, numtriangles.export_bfile([eval_at(p, args.x or 0) for _, p in terms], indices[0]), "text")
    elif args.all:
        _emit(out, "".join(f"{i} {format_poly(p)}\n" for i, p in terms), "text")
    else:
        _emit(out, format_poly(terms[0][1]) + "\n", "text")
    return 0


def _triangle_rows(args):
    spec = builtin_family(args.family)
    rows = args.rows if args.rows is not None else _default_rows(7)
    if rows < 1:
        raise UsageError("--rows must be positive")
    if args.initial_only:
        return spec, hosoya.initial_triangle(hosoya.build(spec, rows + 1), rows)
    return spec, hosoya.build(spec, rows - 1).rows()


def _write_rows(args, out, family, rows) -> int:
    values = rows if args.x is None else [[eval_at(p, args.x) for p in row] for row in rows]
    if args.format == "json":
        _emit(out, hosoya.rows_to_dict(family, rows, args.x), "json")
    elif args.format == "csv":
        _emit(out, hosoya.rows_to_csv(values), "text")
    elif args.format == "bfile":
        if args.x is None:
            raise UsageError("bfile output needs --x")
        _emit(out, numtriangles.export_bfile(values, args.offset), "text")
    else:
        _emit(out, "".join(" ".join(str(v) for v in row) + "\n" for row in values), "text")
    return 0


def cmd_triangle(args, out) -> int:
    spec, rows = _triangle_rows(args)
    return _write_rows(args, out, spec.family_name, rows)


def cmd_export(args, out) -> int:
    if args.x is None:
        args.x = 1
    return cmd_triangle(args, out)


def cmd_gibonomial(args, out) -> int:
    rows = args.rows if args.rows is not None else _default_rows(6)
    if rows < 1:
        raise UsageError("--rows must be positive")
    return _write_rows(args, out, "gibonomial", gibonomial.gibonomial_triangle(rows - 1))


# ---------------------------------------------------------------------------
# verification


def _per_family(args, fn: Callable[[gfp.GfpSpec], object]):
    """Run ``fn`` per family; families outside a theorem's hypotheses are
    skipped when ``--family all`` and a usage error otherwise."""
    reports, skipped = [], []
    for name in _families(args.family):
        spec = builtin_family(name)
        try:
            result = fn(spec)
        except (NotTheoremGrade, NotTyped, NotFibonacciType, NotBinetEligible) as exc:
            if args.family != "all":
                raise UsageError(str(exc)) from None
            skipped.append({"family": name, "reason": str(exc)})
            continue
        reports.extend(result if isinstance(result, list) else [result])
    return reports, skipped


def _verify_star(args):
    def run(spec):
        m_max = 12 if args.m_max is None else args.m_max
        n_max = 12 if args.n_max is None else args.n_max
        out = [stardavid.verify_star_grid(spec, args.orientation, m_max, n_max).report]
        if args.corollaries and stardavid.corollaries_for(spec.family_name):
            out += stardavid.verify_corollaries(spec, m_max, n_max)
        return out

    return _per_family(args, run)


def _verify_gibonomial_star(args):
    return [gibonomial.verify_gibonomial_grid(_bound(args, 12))], []


_IDENTITIES = ("derivative", "integral", "parallels", "johnson", "catalan-cassini",
               "sums", "closed-sums", "general-sum")
_IDENTITY_ALIASES = {"catalan": "catalan-cassini", "cassini": "catalan-cassini"}


def _bound(args, default: int) -> int:
    """Index bound: ``--N``, else ``--n-max``, else the per-theorem default."""
    if args.N is not None:
        return args.N
    return args.n_max if args.n_max is not None else default


def _verify_identity(args):
    name = args.name or args.identity or "all"
    name = _IDENTITY_ALIASES.get(name, name)
    if name != "all" and name not in _IDENTITIES:
        raise UsageError(f"unknown identity {name!r}")
    names = _IDENTITIES if name == "all" else (name,)
    reports, skipped = [], []
    N = _bound(args, 10)
    if "derivative" in names:
        reports.append(identities.verify_derivative_identity(N))
    if "integral" in names:
        reports.append(identities.verify_integral_prop(N))
    per_family = {
        "parallels": lambda s: identities.verify_parallels_lemma(s, args.samples, args.seed),
        "johnson": lambda s: identities.verify_johnson(s, args.samples or 500, args.seed),
        "catalan-cassini": lambda s: identities.verify_catalan_cassini(s, N),
        "sums": lambda s: identities.verify_sums_theorem(s, N),
        "closed-sums": lambda s: identities.verify_closed_sums(s, N),
        "general-sum": lambda s: identities.verify_general_sum(s, N),
    }
    for name in names:
        if name in per_family:
            r, s = _per_family(args, per_family[name])
            reports += r
            skipped += [dict(x, identity=name) for x in s]
    return reports, skipped


def _verify_lemma1(args):
    try:
        p, q, r, s = (parse_poly(t) for t in (args.p, args.q, args.r, args.s))
    except HosoyaError as exc:
        raise UsageError(str(exc)) from None
    return [verify_gcd_multiplicativity(p, q, r, s)], []


def _verify_double_recursion(args):
    return _per_family(
        args, lambda s: hosoya.verify_double_recursion(hosoya.build(s, args.rows))
    )


_VERIFIERS = {
    "star": _verify_star,
    "gibonomial-star": _verify_gibonomial_star,
    "identity": _verify_identity,
    "gcd-distance": lambda a: _per_family(a, lambda s: gfp.verify_gcd_distance(s, _bound(a, 20))),
    "binet": lambda a: _per_family(a, lambda s: gfp.verify_binet_equivalence(s, _bound(a, 50))),
    "double-recursion": _verify_double_recursion,
    "lemma1": _verify_lemma1,
    "mod-d2": lambda a: _per_family(a, lambda s: gfp.verify_mod_d_squared(s, _bound(a, 30))),
}


def cmd_verify(args, out) -> int:
    reports, skipped = _VERIFIERS[args.theorem](args)
    failed = [r for r in reports if r.status is Status.FAIL]
    status = Status.FAIL if failed else Status.PASS
    if failed or args.format == "json":
        payload = {
            "status": status.value,
            "reports": [r.to_dict() for r in reports],
            "skipped": skipped,
        }
        _emit(out, payload, "json")
    else:
        lines = [r.summary() + _family_suffix(r) for r in reports]
        lines += [f"SKIP    {s['family']}: {s['reason']}" for s in skipped]
        _emit(out, "\n".join(lines) + "\n", "text")
    return 1 if failed else 0


def _family_suffix(r: VerificationReport) -> str:
    fam = r.params.get("family")
    return f" family={fam}" if fam else ""


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hosoyapoly",
        description="Hosoya polynomial triangles, gibonomials and gcd identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("table", "json"), default="table"):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("families", help="list the builtin families")
    p.add_argument("--extra", action="store_true", help="include non-catalog variants")
    fmt(p)
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("seq", help="print a sequence term")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="print terms 0..n")
    p.add_argument("--x", type=int, help="evaluation point")
    fmt(p, ("table", "json", "bfile"))
    p.set_defaults(func=cmd_seq)

    def triangle_opts(p, default_format="table"):
        p.add_argument("--rows", type=int, help=f"row count (default from ${ROWS_ENV})")
        p.add_argument("--x", type=int, help="evaluate entries at this integer")
        p.add_argument("--offset", type=int, default=1, help="first b-file index")
        fmt(p, ("table", "json", "csv", "bfile"), default_format)

    p = sub.add_parser("triangle", help="print a Hosoya triangle")
    p.add_argument("--family", required=True)
    p.add_argument("--initial-only", action="store_true", help="drop zero edges")
    triangle_opts(p)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("export", help="export an evaluated triangle")
    p.add_argument("--family", required=True)
    p.add_argument("--initial-only", action="store_true", help="drop zero edges")
    triangle_opts(p, "bfile")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("gibonomial", help="print the gibonomial triangle")
    triangle_opts(p)
    p.add_argument("--eval", dest="x", type=int, help="same as --x")
    p.set_defaults(func=cmd_gibonomial)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("theorem", choices=sorted(_VERIFIERS))
    p.add_argument("identity", nargs="?", help="identity name (verify identity)")
    p.add_argument("--family", default="all")
    p.add_argument("--orientation", choices=("a", "b", "both"), default="both")
    p.add_argument("--m-max", type=int, help="star grid bound (default 12)")
    p.add_argument("--n-max", type=int, help="star grid or index bound")
    p.add_argument("--corollaries", action="store_true", help="also check corollaries (star)")
    p.add_argument("--N", type=int, help="index bound (overrides --n-max)")
    p.add_argument("--rows", type=int, default=20, help="rows (double-recursion)")
    p.add_argument("--name", help="identity name, same as the positional")
    p.add_argument("--samples", "--trials", dest="samples", type=int, help="random sample count")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    for poly in "pqrs":
        p.add_argument(f"--{poly}", default="x", help="lemma1 polynomial")
    fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, HosoyaError, ValueError, IndexError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"hosoyapoly {args.command}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
