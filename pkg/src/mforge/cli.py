"""Command-line front end.

Subcommands:
  verify <id|filter> [--json] [--budget heavy] [--redact-timing]
  recognize <class> --input FILE [--certificate]
  catalog <name> [--matrix | --info]
  template <name|FILE> generate --frame-size N [--virtual | --strict]
           [--delta-rows K]
  minor --host FILE --target FILE

Data goes to stdout, diagnostics to stderr; exit codes: 0 all verified,
1 any refuted/error (or negative recognition), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gf2 import GF2Error, format_matrix, parse_matrix
from .matroid import BinaryMatroid, MatroidError
from .graphs import GraphError, SignedGraph, format_graph_text, parse_graph_text
from . import catalog as cat
from . import recognize as rec
from . import templates as tpl
from . import verify as ver


def _load_matroid(path: str) -> BinaryMatroid:
    with open(path) as fh:
        return BinaryMatroid.from_text(fh.read())


def cmd_verify(args) -> int:
    include_heavy = args.budget == "heavy"
    if args.target in ver.JOBS:
        reports = [ver.run_job(args.target, redact_timing=args.redact_timing)]
    elif args.target in ver.FILTERS:
        reports = ver.run_suite(args.target, include_heavy=include_heavy,
                                redact_timing=args.redact_timing)
    else:
        print(f"unknown job or filter {args.target!r}", file=sys.stderr)
        return 2
    bad = 0
    for rep in reports:
        if args.json:
            print(rep.to_json())
        else:
            print(f"{rep.id}: {rep.status} ({rep.elapsed_ms} ms)")
        if rep.status not in ("verified", "skipped"):
            bad += 1
    if not args.json:
        print(f"{len(reports)} jobs, {len(reports) - bad} verified, {bad} not verified",
              file=sys.stderr)
    return 1 if bad else 0


def cmd_recognize(args) -> int:
    m = _load_matroid(args.input)
    kind = args.kind
    cert_out = None
    if kind == "graphic":
        ok, cert = rec.is_graphic(m)
        if ok and cert is not None:
            cert_out = format_graph_text(cert.payload)
    elif kind == "cographic":
        ok = rec.is_cographic(m)
    elif kind == "even-cycle":
        ok, sg, exhausted = rec.is_even_cycle(m)
        if not ok and not exhausted:
            print("inconclusive: sweep not exhausted", file=sys.stderr)
            return 1
        if ok:
            cert_out = format_graph_text(sg.graph, sg.odd_edges)
    elif kind == "even-cut":
        ok, cert, exhausted = rec.is_even_cut(m)
        if not ok and not exhausted:
            print("inconclusive: sweep not exhausted", file=sys.stderr)
            return 1
        if ok:
            d, g = cert.payload
            lines = ["# coextension row", "".join(str((d >> i) & 1) for i in range(m.size)),
                     "# graphic realization of the coextended dual",
                     format_graph_text(g)]
            cert_out = "\n".join(lines)
    elif kind == "blocking-pair":
        ok = rec.in_blocking_pair_class(m)
    else:
        print(f"unknown class {kind!r}", file=sys.stderr)
        return 2
    print("true" if ok else "false")
    if args.certificate and ok and cert_out:
        print(cert_out, end="" if cert_out.endswith("\n") else "\n")
    return 0 if ok else 1


def cmd_catalog(args) -> int:
    m = cat.catalog(args.name)
    if args.matrix:
        print(format_matrix(m.rep))
    else:
        print(f"{args.name}: {m.size} elements, rank {m.rank}, "
              f"{'simple' if m.is_simple() else 'not simple'}")
    return 0


def cmd_template(args) -> int:
    name = args.template
    if name in tpl.TEMPLATE_NAMES:
        t = tpl.template_catalog(name)
    else:
        with open(name) as fh:
            t = tpl.parse_template(fh.read())
    if args.delta_rows or not t.delta.is_trivial():
        m = tpl.largest_simple_conforming_delta(t, args.frame_size, args.delta_rows)
    else:
        m = tpl.largest_simple_conforming(t, args.frame_size)
    print(f"# largest simple conforming matroid: {m.size} elements, rank {m.rank}",
          file=sys.stderr)
    print(m.to_text(), end="")
    return 0


def cmd_minor(args) -> int:
    host = _load_matroid(args.host)
    target = _load_matroid(args.target)
    w = rec.has_minor(host, target)
    if w is None:
        print("absent")
        return 1
    print(json.dumps({"contract": sorted(w.contract_set),
                      "delete": sorted(w.delete_set),
                      "mapping": {str(k): v for k, v in sorted(w.mapping.items())}},
                     sort_keys=True))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="mforge",
                                     description="binary-matroid workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run verification jobs")
    p.add_argument("target", help="job id or filter "
                   f"({', '.join(ver.FILTERS)})")
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", choices=["standard", "heavy"], default="standard")
    p.add_argument("--redact-timing", action="store_true",
                   help="report elapsed_ms as 0 for byte-identical reruns")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("recognize", help="class membership of a matroid file")
    p.add_argument("kind", choices=["even-cycle", "even-cut", "graphic",
                                    "cographic", "blocking-pair"])
    p.add_argument("--input", required=True)
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(fn=cmd_recognize)

    p = sub.add_parser("catalog", help="named matroids")
    p.add_argument("name")
    p.add_argument("--matrix", action="store_true")
    p.add_argument("--info", action="store_true")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("template", help="generate from a template")
    p.add_argument("template", help="catalog name or file path")
    p.add_argument("action", choices=["generate"])
    p.add_argument("--frame-size", type=int, required=True)
    p.add_argument("--virtual", action="store_true", default=True)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--delta-rows", type=int, default=0)
    p.set_defaults(fn=cmd_template)

    p = sub.add_parser("minor", help="minor search between matroid files")
    p.add_argument("--host", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(fn=cmd_minor)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GF2Error, MatroidError, GraphError, tpl.TemplateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
