"""Command-line interface.

Every subcommand prints a short table and writes a JSON report with sorted
keys.  The report echoes the inputs, records provenance, and embeds the
generator polynomials where relevant.  It also carries a digest of
everything except the timing and backend fields.

Exit status: 0 on success, 2 for an unusable configuration (including
malformed polynomial text), 3 when a mathematical precondition fails, 4 for
degenerate input such as a singular section.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from pathlib import Path

from . import __version__, report
from .ambient import AmbientModel, TorusHypersurface, parse_model
from .apprank import DegreeBoundCertifier, multiplication_surjectivity, rank_check_cy
from .bwb import gp_bundle_cohomology, line_bundle_cohomology
from .cayley import CayleyModel, variable_hodge_dims
from .errors import DegenerateInputError, HodgejacError, PreconditionError
from .jacring import jacobian_graded_dims
from .linalg import BACKEND
from .poly import MultiPoly, PolyParseError, format_poly
from .rootsys import Parabolic, RootSystemError, format_weight, parse_type
from .vanishing import (check_C, check_C1, check_C1V, check_CV2, main_theorem_range,
                        projective_space, vjm_theorem_range)

log = logging.getLogger("hodgejac")

EXIT_CONFIG = 2
EXIT_PRECONDITION = 3
EXIT_DEGENERATE = 4

OUTPUT_DIR_ENV = "HODGEJAC_OUTPUT_DIR"


class ConfigError(Exception):
    """The command line does not describe a runnable job."""


# argument helpers -------------------------------------------------------------

def int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def int_range(text: str) -> list[int]:
    """``"3"``, ``"1..3"`` or ``"1,2,5"``."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer range like 1..3, got {text!r}")


def _read_text(path: str | None, inline: str | None) -> str | None:
    if path and inline:
        raise ConfigError("give either a polynomial file or inline text, not both")
    if inline is not None:
        return inline.replace(";", "\n")
    if path is None:
        return None
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from None


def _model(args) -> AmbientModel:
    if not args.model:
        raise ConfigError("--model is required")
    try:
        return parse_model(args.model, args.degree, getattr(args, "vertices", None))
    except PreconditionError as exc:
        raise ConfigError(str(exc)) from None


def _section(model: AmbientModel, args) -> tuple[MultiPoly, dict]:
    text = _read_text(args.poly, args.poly_inline)
    if text is not None:
        f = model.parse_section(text)
        return f, {"source": "given"}
    if args.seed is None:
        raise ConfigError("give a section with --poly/--poly-inline or choose --seed")
    f = model.random_section(args.seed, args.coeff_bound)
    if isinstance(model, TorusHypersurface):
        f = model.to_laurent(f)
    return f, {"source": "random", "seed": args.seed, "coeff_bound": args.coeff_bound}


# commands ---------------------------------------------------------------------

def cmd_bott(args) -> tuple[dict, list[str]]:
    try:
        rs = parse_type(args.type)
    except RootSystemError as exc:
        raise ConfigError(str(exc)) from None
    if len(args.weight) != rs.rank:
        raise ConfigError(f"weight needs {rs.rank} entries for type {args.type}")
    if args.parabolic:
        res = gp_bundle_cohomology(rs, Parabolic(args.parabolic), args.weight)
    else:
        res = line_bundle_cohomology(rs, args.weight)
    lines = [f"{args.type} weight {format_weight(args.weight)}:"]
    if res.zero:
        lines.append("  all cohomology vanishes (singular weight)")
    for e in res.entries:
        lines.append(f"  degree {e.degree}: highest weight {','.join(map(str, e.highest_weight))}"
                     f", dim {e.dimension}")
    return res.as_dict(), lines


def _homogeneous(args):
    """``(rs, parabolic, L weight, n, label)`` from ``--model`` or ``--type``."""
    if args.type:
        try:
            rs = parse_type(args.type)
        except RootSystemError as exc:
            raise ConfigError(str(exc)) from None
        if not args.parabolic or not args.line_weight:
            raise ConfigError("--type needs --parabolic and --line-weight")
        par = Parabolic(args.parabolic)
        par.validate(rs)
        from .bwb import tangent_roots

        return rs, par, tuple(args.line_weight), len(tangent_roots(rs, par))
    model = _model(args)
    data = model.homogeneous_data()
    if data is None:
        raise ConfigError("vanishing checks need a G/P model")
    rs, par, L = data
    return rs, par, L, model.dim


def cmd_check_vanishing(args) -> tuple[dict, list[str]]:
    cond = args.condition
    verdicts = []
    if cond in ("CV2", "C1V"):
        if not args.degrees:
            raise ConfigError(f"{cond} needs --degrees")
        if not args.model or not args.model.upper().startswith("P"):
            raise ConfigError(f"{cond} is implemented for split bundles on P^n (--model Pn)")
        try:
            n = int(args.model[1:])
        except ValueError:
            raise ConfigError(f"cannot parse {args.model!r}") from None
        rs, par = projective_space(n)
        if cond == "C1V":
            for k in args.k or [0]:
                verdicts.append(check_C1V(rs, par, args.degrees, k))
        elif args.p is not None:
            verdicts.append(check_CV2(rs, par, args.degrees, args.p, args.q, args.l))
        else:
            for k in args.k or []:
                for p, q, l in vjm_theorem_range(n, len(args.degrees), k):
                    verdicts.append(check_CV2(rs, par, args.degrees, p, q, l))
    else:
        rs, par, L, n = _homogeneous(args)
        use = not args.bounds_only
        if cond == "C1":
            if not args.k:
                raise ConfigError("C1 needs --k")
            verdicts = [check_C1(rs, par, L, k, use_theorems=use) for k in args.k]
        elif args.p is not None:
            if args.q is None or args.l is None:
                raise ConfigError("C needs all of --p, --q, --l")
            verdicts = [check_C(rs, par, L, args.p, args.q, args.l, use_theorems=use)]
        else:
            if not args.k:
                raise ConfigError("C needs --k or an explicit --p/--q/--l")
            for k in args.k:
                for p, q, l in main_theorem_range(n, k):
                    verdicts.append(check_C(rs, par, L, p, q, l, use_theorems=use))
    summaries = [v.summary() for v in verdicts]
    lines = [f"{s['condition']:<32} {s['status']:<14} {s['method']}" for s in summaries]
    if not lines:
        lines = ["no conditions in the requested range"]
    return {"verdicts": summaries}, lines


def cmd_jacobian(args) -> tuple[dict, list[str]]:
    model = _model(args)
    f, src = _section(model, args)
    rep = jacobian_graded_dims(model, f, args.kmax, method=args.method,
                               check_smoothness=not args.no_smoothness,
                               allow_singular=args.allow_singular, jobs=args.jobs)
    out = rep.as_dict()
    out["section_source"] = src
    lines = [f"{'k':>3} {'dim':>8} {'space':>8} {'rank':>8}  method / hypotheses"]
    for e in rep.per_degree:
        lines.append(f"{e.k:>3} {e.dim:>8} {e.space_dim:>8} {e.rank:>8}  {e.method}; "
                     f"{e.hypotheses}")
    lines.append(f"dims {','.join(map(str, rep.dims))}  total {rep.total}  "
                 f"smoothness {rep.smoothness['status']}")
    return out, lines


def cmd_cayley(args) -> tuple[dict, list[str]]:
    model = CayleyModel(args.n, tuple(args.degrees))
    text = _read_text(args.poly, args.poly_inline)
    if text is not None:
        f_list = model.parse_sections(text)
        src = {"source": "given"}
    elif args.seed is not None:
        f_list = model.random_sections(args.seed, args.coeff_bound)
        src = {"source": "random", "seed": args.seed, "coeff_bound": args.coeff_bound}
    else:
        raise ConfigError("give sections with --poly/--poly-inline or choose --seed")
    rep = variable_hodge_dims(model, f_list, args.k, use_f=not args.jprime, method=args.method,
                              allow_singular=args.allow_singular)
    out = rep.as_dict()
    out["section_source"] = src
    lines = [f"{'k':>3} {'dim':>8}  label"]
    for e in rep.per_k:
        lines.append(f"{e.k:>3} {e.dim:>8}  {e.hodge_label}  ({e.method}; {e.hypotheses})")
    lines.append(f"dims {','.join(map(str, rep.dims))}  smoothness {rep.smoothness['status']}")
    return out, lines


def cmd_rank_check(args) -> tuple[dict, list[str]]:
    model = _model(args)
    f, src = _section(model, args)
    res = rank_check_cy(model, f, method=args.method, jobs=args.jobs)
    out = res.as_dict()
    out["section"] = format_poly(model.prepare_section(f))
    out["generators"] = res.report.generators
    out["section_source"] = src
    lines = [f"dims {','.join(map(str, res.dims))}",
             f"computed {res.computed_total}  expected {res.expected} ({res.oracle})  "
             f"{'agree' if res.agree else 'DISAGREE'}"]
    return out, lines


def cmd_degree_bound(args) -> tuple[dict, list[str]]:
    model = _model(args)
    f, src = _section(model, args)
    htext = _read_text(args.h, args.h_inline)
    if htext is None:
        raise ConfigError("degree-bound needs --h or --h-inline")
    h = model.parse_section(htext)
    cert_maker = DegreeBoundCertifier(model, f, args.max_degree)
    cert = cert_maker.certify(h)
    out = cert.as_dict()
    out["verified"] = cert_maker.verify(cert)
    out["generators"] = [format_poly(g) for g in cert_maker.generators]
    out["section_source"] = src
    lines = [f"member: {cert.member}   verified: {out['verified']}"]
    if cert.member:
        lines.append(f"{len(cert.representation)} cofactors, max degree "
                     f"{cert.max_cofactor_degree} <= {cert.degree - 1}")
    else:
        for e, coords in sorted(cert.reduced.items()):
            for m, c in sorted(coords.items()):
                lines.append(f"  survives in degree {e}: {c} * x^({','.join(map(str, m))})")
    return out, lines


def cmd_mult_surjectivity(args) -> tuple[dict, list[str]]:
    model = _model(args)
    results = [multiplication_surjectivity(model, k, method=args.method) for k in args.k]
    lines = [f"k={r.k}: {r.status.value} (rank {r.rank}, target {r.target_dim})"
             for r in results]
    return {"results": [r.as_dict() for r in results]}, lines


COMMANDS = {
    "bott": cmd_bott,
    "check-vanishing": cmd_check_vanishing,
    "jacobian": cmd_jacobian,
    "cayley": cmd_cayley,
    "rank-check": cmd_rank_check,
    "degree-bound": cmd_degree_bound,
    "mult-surjectivity": cmd_mult_surjectivity,
}

#: arguments that never influence the mathematical result
_NOT_INPUTS = {"output", "jobs", "verbose", "quiet", "func", "command"}


# parser ---------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="report path (default: $%s/<command>-<digest>.json)"
                        % OUTPUT_DIR_ENV)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for independent degrees")
    common.add_argument("--method", choices=("auto", "exact", "modular"), default="auto",
                        help="rank computation")
    common.add_argument("-v", "--verbose", action="store_true")

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--model", help="P<n>, G<a>,<b> or torus")
    model.add_argument("--degree", type=int, help="L = O(degree)")
    model.add_argument("--vertices", help="torus polytope vertices, e.g. '0,0;3,0;0,3'")

    section = argparse.ArgumentParser(add_help=False)
    section.add_argument("--poly", help="polynomial file ('-' for stdin)")
    section.add_argument("--poly-inline", help="polynomial text with ';' between lines")
    section.add_argument("--seed", type=int, help="use a pseudo-random section")
    section.add_argument("--coeff-bound", type=int, default=10)

    p = _Parser(prog="hodgejac", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("bott", parents=[common], help="Borel-Weil-Bott cohomology")
    s.add_argument("--type", required=True, help="root system, e.g. A3")
    s.add_argument("--weight", type=int_list, required=True)
    s.add_argument("--parabolic", type=int_list, help="removed simple roots (1-based)")

    s = sub.add_parser("check-vanishing", parents=[common, model], help="vanishing conditions")
    s.add_argument("--condition", choices=("C", "C1", "CV2", "C1V"), required=True)
    s.add_argument("--k", type=int_range)
    s.add_argument("--p", type=int)
    s.add_argument("--q", type=int)
    s.add_argument("--l", type=int)
    s.add_argument("--type", help="root system for a general G/P")
    s.add_argument("--parabolic", type=int_list)
    s.add_argument("--line-weight", type=int_list)
    s.add_argument("--degrees", type=int_list, help="split bundle degrees for CV2/C1V")
    s.add_argument("--bounds-only", action="store_true",
                   help="use the filtration bound only, no closed formulas or citations")

    s = sub.add_parser("jacobian", parents=[common, model, section], help="graded M/JM")
    s.add_argument("--kmax", type=int)
    s.add_argument("--allow-singular", action="store_true")
    s.add_argument("--no-smoothness", action="store_true")

    s = sub.add_parser("cayley", parents=[common, section], help="variable Hodge numbers")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--degrees", type=int_list, required=True)
    s.add_argument("--k", type=int_range)
    s.add_argument("--jprime", action="store_true", help="leave f out of the generators")
    s.add_argument("--allow-singular", action="store_true")

    sub.add_parser("rank-check", parents=[common, model, section],
                   help="dim R/J against the reference value")

    s = sub.add_parser("degree-bound", parents=[common, model, section],
                       help="membership certificate with degree-bounded cofactors")
    s.add_argument("--h", help="file with the polynomial to test")
    s.add_argument("--h-inline")
    s.add_argument("--max-degree", type=int, default=3)

    s = sub.add_parser("mult-surjectivity", parents=[common, model],
                       help="H^0(L) x H^0(K+kL) -> H^0(K+(k+1)L)")
    s.add_argument("--k", type=int_range, required=True)
    return p


def _inputs(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in _NOT_INPUTS and v is not None}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    t0 = time.perf_counter()
    try:
        result, lines = COMMANDS[args.command](args)
    except (ConfigError, PolyParseError) as exc:
        print(f"hodgejac: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DegenerateInputError as exc:
        print(f"hodgejac: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (PreconditionError, RootSystemError, HodgejacError) as exc:
        print(f"hodgejac: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    elapsed = time.perf_counter() - t0
    rep = report.finalize({
        "command": args.command,
        "inputs": _inputs(args),
        "provenance": {"package": "hodgejac", "version": __version__,
                       "seed": getattr(args, "seed", None)},
        "result": result,
        "timing": {"seconds": round(elapsed, 3)},
        "backend": BACKEND,
    })
    if args.output:
        path = Path(args.output)
    else:
        path = Path(os.environ.get(OUTPUT_DIR_ENV, ".")) / f"{args.command}-{rep['digest'][:12]}.json"
    report.write(rep, path)
    for line in lines:
        print(line)
    print(f"report: {path}  digest {rep['digest'][:16]}")
    return 0


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
