"""Command line for the Minkowski isometry catalog.

Subcommands:

* ``verify``    — replay every catalog entry's evidence (or one entry's)
* ``classify``  — identify the group generated by a text file of generators
* ``orbit``     — orbit dimension / causal type of an entry at a point
* ``witness``   — run the escaping-sequence properness refutation for an entry
* ``export``    — sample an orbit patch of an entry to CSV

Exit codes: 0 on success (including a clean "not closed" or "no match"
classification report), 1 when a verification or witness check fails, 2 on
usage errors (unknown entry, malformed input file, out-of-range parameters).
"""

import argparse
import csv
import json
import random
import sys
from fractions import Fraction

from .algebra import GENERATOR_ORDER, coords10
from .algebra import standard_generator
from .catalog import (
    CatalogReport,
    catalog,
    entry_by_id,
    match_catalog,
    nonproperness_witness,
    verify_all,
    verify_entry,
)
from .group import exp_element
from .linalg import DependentBasisError
from .orbits import cohomogeneity, orbit_dimension
from .properness import WitnessFailedError, check_witness
from .subalgebra import NotClosed, closure_check, invariants, require_closed

_TOKENS = GENERATOR_ORDER + ("e1", "e2", "e3", "e4")


def format_element(elt) -> str:
    """Render an algebra element as a combination of the named generators."""
    parts = []
    for name, c in zip(_TOKENS, coords10(elt)):
        if c == 0:
            continue
        if c == 1:
            parts.append(name)
        elif c == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{c}*{name}")
    if not parts:
        return "0"
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


def parse_element(text):
    """Parse one generator line, e.g. ``Ya + 1/2*e1`` or ``Yn1 - 2*e2``."""
    src = text.replace("-", "+-").replace(" ", "").replace("\t", "")
    if src.startswith("+"):
        src = src[1:]
    total = None
    for raw in src.split("+"):
        if not raw:
            raise ValueError(f"empty term in {text!r}")
        term = raw
        coeff = Fraction(1)
        if term.startswith("-"):
            coeff = -coeff
            term = term[1:]
        if "*" in term:
            num, term = term.split("*", 1)
            coeff = coeff * Fraction(num)
        if term not in _TOKENS:
            raise ValueError(f"unknown generator {term!r} in {text!r}")
        piece = standard_generator(term).scaled(coeff)
        total = piece if total is None else total + piece
    if total is None:
        raise ValueError(f"no terms in {text!r}")
    return total


def parse_generator_file(path):
    elements = []
    with open(path) as f:
        for lineno, line in enumerate(f, 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            try:
                elements.append(parse_element(body))
            except ValueError as err:
                raise ValueError(f"{path}:{lineno}: {err}") from None
    if not elements:
        raise ValueError(f"{path}: no generators found")
    return tuple(elements)


def _fmt_params(params):
    return ", ".join(f"{k}={params[k]}" for k in sorted(params))


def _fmt_point(p):
    return "(" + ",".join(str(c) for c in p) + ")"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_verify(args):
    table = catalog()
    if args.entry is not None:
        try:
            entry = entry_by_id(args.entry, table)
        except KeyError:
            print(f"error: unknown catalog entry {args.entry!r}", file=sys.stderr)
            return 2
        rep = verify_entry(entry, seed=args.seed, samples=args.samples,
                           steps=args.steps, tol=args.tol, table=table)
        report = CatalogReport(seed=args.seed, reports=(rep,))
    else:
        report = verify_all(table, seed=args.seed, samples=args.samples,
                            steps=args.steps, tol=args.tol)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for rep in report.reports:
            for c in rep.checks:
                word = "PASS" if c.passed else "FAIL"
                print(f"{word} {rep.entry_id} [{c.name}] {c.detail}")
        good = sum(1 for r in report.reports if r.passed)
        print(f"== {good}/{len(report.reports)} catalog entries fully verified ==")
    return 0 if report.passed else 1


def cmd_classify(args):
    try:
        basis = parse_generator_file(args.file)
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    try:
        verdict = closure_check(basis)
    except DependentBasisError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2

    if isinstance(verdict, NotClosed):
        residual = format_element(verdict.witness)
        if args.json:
            print(json.dumps({
                "closed": False,
                "pair": [verdict.i, verdict.j],
                "bracket": residual,
            }, indent=2))
        else:
            print(f"not closed: {verdict.describe()}")
            print(f"  bracket: {residual}")
        return 0

    h = verdict
    inv = invariants(h)
    rep = cohomogeneity(h, seed=args.seed, samples=args.samples)
    matches = match_catalog(h)
    if args.json:
        print(json.dumps({
            "closed": True,
            "invariants": inv.describe(),
            "cohomogeneity": rep.cohomogeneity,
            "orbit_dims": list(rep.observed_dims()),
            "matches": [{
                "entry": m.entry_id,
                "params": {k: str(v) for k, v in m.params.items()},
                "normalization": [str(c) for c in m.normalization],
            } for m in matches],
        }, indent=2))
        return 0
    print(f"closed subalgebra: {inv.describe()}")
    dims = ",".join(str(d) for d in rep.observed_dims())
    print(f"cohomogeneity {rep.cohomogeneity} (orbit dims {{{dims}}} "
          f"over {args.samples} samples)")
    if rep.cohomogeneity != 1:
        print("note: not cohomogeneity one")
    if not matches:
        print("match: none (not in the catalog)")
    for m in matches:
        entry = entry_by_id(m.entry_id)
        line = f"match: {m.entry_id}: {entry.summary}"
        if m.params:
            line += f" [{_fmt_params(m.params)}]"
        print(line)
        print(f"  normalizing translation: {_fmt_point(m.normalization)}")
    return 0


def _resolve_entry(args):
    """Entry + parameter dict from --entry/--lambda/--mu/--a/--b, or None on error."""
    try:
        entry = entry_by_id(args.entry)
    except KeyError:
        print(f"error: unknown catalog entry {args.entry!r}", file=sys.stderr)
        return None
    params = dict(entry.defaults[0])
    for name in ("lam", "mu", "a", "b"):
        value = getattr(args, name, None)
        if value is None:
            continue
        if name not in entry.params:
            flag = "lambda" if name == "lam" else name
            print(f"error: {entry.entry_id} takes no parameter --{flag}",
                  file=sys.stderr)
            return None
        params[name] = value
    if not entry.admissible(params):
        print(f"error: parameters [{_fmt_params(params)}] are outside the "
              f"admissible range for {entry.entry_id}", file=sys.stderr)
        return None
    return entry, params


def cmd_orbit(args):
    resolved = _resolve_entry(args)
    if resolved is None:
        return 2
    entry, params = resolved
    h = require_closed(entry.build(params))
    pt = args.point if args.point is not None else (1, 2, 3, 5)
    rep = orbit_dimension(h, pt)
    if args.json:
        print(json.dumps({
            "entry": entry.entry_id,
            "params": {k: str(v) for k, v in params.items()},
            "point": [str(c) for c in rep.point],
            "dim": rep.dim,
            "causal": str(rep.causal),
            "tangent": [[str(c) for c in row] for row in rep.tangent_basis],
        }, indent=2))
        return 0
    print(f"{entry.entry_id} at {_fmt_point(rep.point)}:")
    print(f"  orbit dimension {rep.dim}, causal type {rep.causal}")
    for row in rep.tangent_basis:
        print(f"  tangent {_fmt_point(row)}")
    return 0


def cmd_witness(args):
    resolved = _resolve_entry(args)
    if resolved is None:
        return 2
    entry, params = resolved
    if entry.proper:
        print(f"error: {entry.entry_id} acts properly; no escape witness applies",
              file=sys.stderr)
        return 2
    h = require_closed(entry.build(params))
    witness, mechanism = nonproperness_witness(entry, params, h)
    try:
        rep = check_witness(witness, steps=args.steps, tol=args.tol)
    except WitnessFailedError as err:
        if args.json:
            print(json.dumps({"entry": entry.entry_id, "pass": False,
                              "detail": str(err)}, indent=2))
        else:
            print(f"FAIL {entry.entry_id}: {err}")
        return 1
    if args.json:
        print(json.dumps({
            "entry": entry.entry_id,
            "pass": True,
            "mechanism": mechanism,
            "steps": list(rep.steps),
            "group_norms": [float(x) for x in rep.group_norms],
            "point_gap": rep.point_gap,
            "image_gap": rep.image_gap,
        }, indent=2))
        return 0
    print(f"PASS {entry.entry_id}: {mechanism}")
    print(f"  group norms {rep.group_norms[0]:.4g} -> {rep.group_norms[-1]:.4g} "
          f"over {len(rep.steps)} dyadic steps")
    print(f"  point gap {rep.point_gap:.3g}, image gap {rep.image_gap:.3g} "
          f"(tol {args.tol:g})")
    return 0


def cmd_export(args):
    resolved = _resolve_entry(args)
    if resolved is None:
        return 2
    entry, params = resolved
    h = require_closed(entry.build(params))
    basis = h.basis[:3]
    base = args.point if args.point is not None else (1, 2, 3, 5)
    base_f = [float(c) for c in base]

    if args.grid is not None:
        if args.grid < 1:
            print("error: --grid must be at least 1", file=sys.stderr)
            return 2
        n = args.grid
        ts = [(-2.0 + 4.0 * k / (n - 1)) if n > 1 else 0.0 for k in range(n)]
        triples = [(t1, t2, t3) for t1 in ts for t2 in ts for t3 in ts]
    else:
        rng = random.Random(args.seed)
        triples = [tuple(rng.uniform(-2.0, 2.0) for _ in range(3))
                   for _ in range(args.samples)]

    rows = []
    for t1, t2, t3 in triples:
        x = base_f
        for t, b in ((t3, basis[2]), (t2, basis[1]), (t1, basis[0])):
            g = exp_element(b, float(t))
            x = (g.V @ [float(c) for c in x] + g.v).tolist()
        rows.append((t1, t2, t3, *x))

    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        writer = csv.writer(out)
        writer.writerow(["t1", "t2", "t3", "x", "y", "z", "w"])
        for row in rows:
            writer.writerow([f"{v:.12g}" for v in row])
    finally:
        if out is not sys.stdout:
            out.close()
    if out is not sys.stdout:
        print(f"wrote {len(rows)} rows to {args.out}")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _point_type(text):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            "point must be four comma-separated rationals, e.g. 1,2,3,5")
    try:
        return tuple(Fraction(s.strip()) for s in parts)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError(str(err))


def _param_flags(p):
    p.add_argument("--lambda", dest="lam", type=Fraction,
                   help="family parameter lambda (rational)")
    p.add_argument("--mu", type=Fraction, help="family parameter mu (rational)")
    p.add_argument("--a", type=Fraction, help="mixture coefficient a (rational)")
    p.add_argument("--b", type=Fraction, help="mixture coefficient b (rational)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="minkact",
        description="verify and explore the catalog of cohomogeneity-one "
                    "isometry groups of Minkowski 4-space")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, sampling=True, witnessing=False):
        p.add_argument("--seed", type=int, default=42,
                       help="seed for rational sampling (default 42)")
        if sampling:
            p.add_argument("--samples", type=int, default=32,
                           help="number of sample points (default 32)")
        if witnessing:
            p.add_argument("--steps", type=int, default=1024,
                           help="escape-sequence ladder length (default 1024)")
            p.add_argument("--tol", type=float, default=1e-6,
                           help="convergence tolerance (default 1e-6)")
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")

    pv = sub.add_parser("verify",
                        help="replay the evidence behind every catalog entry")
    common(pv, witnessing=True)
    pv.add_argument("--entry", help="restrict to one catalog entry")
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("classify",
                        help="identify the group generated by a file of generators")
    common(pc)
    pc.add_argument("file",
                    help="text file, one generator per line (e.g. 'Ya + 1/2*e1'); "
                         "'#' starts a comment")
    pc.set_defaults(func=cmd_classify)

    po = sub.add_parser("orbit",
                        help="orbit dimension and causal type at a point")
    common(po, sampling=False)
    po.add_argument("--entry", required=True, help="catalog entry id")
    _param_flags(po)
    po.add_argument("--point", type=_point_type,
                    help="base point as four rationals (default 1,2,3,5)")
    po.set_defaults(func=cmd_orbit)

    pw = sub.add_parser("witness",
                        help="run the escaping-sequence properness refutation")
    common(pw, sampling=False, witnessing=True)
    pw.add_argument("--entry", required=True, help="catalog entry id")
    _param_flags(pw)
    pw.set_defaults(func=cmd_witness)

    pe = sub.add_parser("export", help="sample an orbit patch to CSV")
    common(pe)
    pe.add_argument("--entry", required=True, help="catalog entry id")
    _param_flags(pe)
    pe.add_argument("--point", type=_point_type,
                    help="base point as four rationals (default 1,2,3,5)")
    pe.add_argument("--grid", type=int,
                    help="export an n^3 parameter lattice instead of random samples")
    pe.add_argument("--out", required=True, help="output CSV path ('-' for stdout)")
    pe.set_defaults(func=cmd_export)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
