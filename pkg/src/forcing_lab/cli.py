"""``forcing-lab`` command line.

Exit codes: 0 ok, 1 a verification check failed, 2 bad input or parameter,
3 resource limit, 4 graph precondition violated.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import codecs
from .builders import necklace_forcing_set, necklace_tfset, tfset_clawfree
from .errors import (
    BadParameterError,
    InstanceTooLargeError,
    ParseError,
    PreconditionError,
)
from .families import (
    complete_graph,
    diamond_necklace,
    enumerate_cubic_multigraphs,
    paper_graph,
    prism,
    triangle_expansion,
)
from .forcing import is_forcing_set, is_total_forcing_set
from .graph import SimpleGraph
from .solver import default_workers, forcing_number, total_forcing_number
from .verify import read_corpus, verify_corpus

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_RESOURCE, EXIT_PRECONDITION = 0, 1, 2, 3, 4
EXACT_RATIO_K = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _read_graph(args) -> SimpleGraph:
    text = _read_text(args.input)
    if args.format == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise ParseError("no graph6 line in input")
        return codecs.from_graph6(lines[0])
    if args.format == "edgelist":
        return codecs.from_edgelist(text)
    raise ParseError(f"format {args.format!r} does not describe a simple graph")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_compute(args) -> int:
    G = _read_graph(args)
    kw = dict(workers=args.workers, force=args.force)
    if args.which == "F":
        _emit(forcing_number(G, **kw).to_json())
    elif args.which == "Ft":
        _emit(total_forcing_number(G, **kw).to_json())
    else:
        _emit({"F": forcing_number(G, **kw).to_json(), "F_t": total_forcing_number(G, **kw).to_json()})
    return EXIT_OK


def cmd_certify(args) -> int:
    G = _read_graph(args)
    cert = tfset_clawfree(G)
    _emit(cert.to_json())
    return EXIT_OK if cert.meets_bound and cert.is_valid else EXIT_CHECK


def _load_claims(path: str | None) -> dict[str, list[int]]:
    if not path:
        return {}
    claims = {}
    for line in _read_text(path).splitlines():
        if line.strip():
            try:
                row = json.loads(line)
                key = codecs.to_graph6(codecs.from_graph6(row["graph6"].strip()))
                claims[key] = [int(v) for v in row["set"]]
            except (ValueError, KeyError, TypeError) as exc:
                raise ParseError(f"bad certificate line {line!r}: {exc}") from exc
    return claims


def cmd_verify_theorems(args) -> int:
    graphs, skipped = read_corpus(_read_text(args.input).splitlines())
    report = verify_corpus(graphs, _load_claims(args.certificates), args.max_n, args.workers)
    report.records = sorted(report.records + skipped, key=lambda r: int(r.graph_id[4:]))
    if args.json:
        _emit(report.to_json())
    else:
        fails = report.failures()
        for name, ids in fails.items():
            print(f"{name:12s} {'PASS' if not ids else 'FAIL ' + ','.join(ids)}")
        for r in report.records:
            extra = r.reason or f"F={r.F} F_t={r.F_t} cert={r.certificate_size} family={r.family}"
            print(f"{r.graph_id:8s} n={r.n:<3d} {r.status:8s} {extra}")
    return EXIT_OK if report.passed else EXIT_CHECK


def ratio_rows(k_max: int, exact_up_to: int = EXACT_RATIO_K, workers: int = 1) -> list[dict]:
    """``(k, F, F_t, ratio)`` for necklaces; exact solving up to ``exact_up_to``."""
    if k_max < 2:
        raise BadParameterError("k_max must be at least 2")
    rows = []
    for k in range(2, k_max + 1):
        G, _ = diamond_necklace(k)
        # the explicit sets realise the upper bounds at every k
        realised = is_forcing_set(G, necklace_forcing_set(k)) and is_total_forcing_set(G, necklace_tfset(k))
        if k <= exact_up_to:
            f = forcing_number(G, workers=workers).value
            ft = total_forcing_number(G, workers=workers).value
            source = "exact"
        else:
            f, ft, source = k + 2, 2 * k, "formula"
        ratio = Fraction(ft, f)
        rows.append(
            {
                "k": k,
                "F": f,
                "F_t": ft,
                "ratio": str(ratio),
                "source": source,
                "matches": realised and ratio == 2 - Fraction(4, k + 2),
            }
        )
    return rows


def cmd_ratio_scan(args) -> int:
    rows = ratio_rows(args.k_max, workers=args.workers)
    if args.json:
        _emit(rows)
    else:
        print(f"{'k':>4} {'F':>4} {'F_t':>5} {'ratio':>10} {'float':>8}  source")
        for r in rows:
            print(f"{r['k']:>4} {r['F']:>4} {r['F_t']:>5} {r['ratio']:>10} {float(Fraction(r['ratio'])):>8.4f}  {r['source']}")
    return EXIT_OK if all(r["matches"] for r in rows) else EXIT_CHECK


def _int_param(params: list[str], idx: int, what: str, default: int | None = None) -> int:
    if len(params) <= idx:
        if default is None:
            raise BadParameterError(f"missing parameter {what}")
        return default
    try:
        return int(params[idx])
    except ValueError:
        raise BadParameterError(f"{what} must be an integer, got {params[idx]!r}") from None


def cmd_generate(args) -> int:
    fam, params = args.family, args.params
    if fam == "multigraphs":
        texts = [codecs.to_multigraph_text(M) for M in enumerate_cubic_multigraphs(_int_param(params, 0, "n"))]
        sys.stdout.write("\n".join(texts))
        return EXIT_OK
    if fam == "necklace":
        graphs = [diamond_necklace(_int_param(params, 0, "k"))[0]]
    elif fam == "prism":
        graphs = [prism()]
    elif fam == "k4":
        graphs = [complete_graph(4)]
    elif fam in ("fig4", "fig7", "fig9"):
        ell = _int_param(params, 0, "ell", 6) if fam == "fig4" else None
        graphs = [paper_graph(fam, ell)[0]]
    elif fam == "expand":
        graphs = [triangle_expansion(codecs.from_multigraph_text(_read_text(args.multigraph)))[0]]
    elif fam == "expansions":
        n = _int_param(params, 0, "n")
        graphs = [triangle_expansion(M)[0] for M in enumerate_cubic_multigraphs(n) if M.is_connected()]
    else:
        raise BadParameterError(f"unknown family {fam!r}")
    for G in graphs:
        sys.stdout.write(codecs.to_edgelist(G) if args.format == "edgelist" else codecs.to_graph6(G) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="input file, '-' for stdin")
    common.add_argument("--format", choices=["graph6", "edgelist", "multigraph"], default="graph6")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-n", type=int, default=24)
    common.add_argument("--workers", type=int, default=default_workers())
    common.add_argument("--force", action="store_true", help="lift the solver's soft size limit")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="forcing-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="exact F and/or F_t")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--f", dest="which", action="store_const", const="F")
    which.add_argument("--ft", dest="which", action="store_const", const="Ft")
    which.add_argument("--both", dest="which", action="store_const", const="both")
    p.set_defaults(which="both", func=cmd_compute)

    p = sub.add_parser("certify", parents=[common], help="constructive TF-set of size <= n/2")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify-theorems", parents=[common], help="check the bounds on a graph6 corpus")
    p.add_argument("--certificates", help="JSON lines {graph6, set} overriding the built certificates")
    p.set_defaults(func=cmd_verify_theorems)

    p = sub.add_parser("ratio-scan", parents=[common], help="F_t/F on diamond necklaces")
    p.add_argument("k_max", type=int)
    p.set_defaults(func=cmd_ratio_scan)

    p = sub.add_parser("generate", parents=[common], help="emit a named family")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--multigraph", default="-", help="multigraph text input for 'expand'")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, BadParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InstanceTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
