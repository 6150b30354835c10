"""Command-line front end.

Subcommands: weight, gray, analyze, radius, construct, bounds, audit.
Exit codes: 0 success, 1 usage or input error, 2 enumeration cap exceeded,
3 audit found a contradicted claim.  All stdout bodies are deterministic;
`radius` output in particular is byte-identical for any --threads value.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import harness, reporting
from .codes import (
    classify_type,
    load_generator_file,
    min_distance,
    save_generator_file,
    span,
    weight_distribution,
)
from .constructions import ConstructionSpec
from .covering import (
    covering_radius_cosets,
    covering_radius_exhaustive,
    covering_radius_gray,
    external_distance_bound,
    sphere_covering_bound,
)
from .errors import InvalidParameterError, ResourceLimitError, Zp2CoverError
from .ring import HAMMING, LEE, Word, gray_word, hamming_weight, lee_weight, make_ring

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_CONTRADICTED = 3


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1 (argparse default is 2, reserved for caps here)
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("table", "json"), default="table")


def _add_threads(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="parallel split of the search space (default: machine parallelism)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zp2cover", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    w = subs.add_parser("weight", parents=[], help="Lee and Hamming weight of one residue")
    w.add_argument("-p", type=int, required=True)
    w.add_argument("-x", type=int, required=True)
    _add_format(w)

    g = subs.add_parser("gray", help="Gray image of a word over Z_{p^2}")
    g.add_argument("-p", type=int, required=True)
    g.add_argument("--word", required=True, help="comma-separated residues")
    _add_format(g)

    a = subs.add_parser("analyze", help="parameters, type and weight censuses of a code")
    a.add_argument("file", help="generator-matrix file")
    a.add_argument("--out", help="directory for CSV and weight-distribution figures")
    _add_format(a)

    r = subs.add_parser("radius", help="exact covering radius of a code")
    r.add_argument("file", help="generator-matrix file")
    r.add_argument("--metric", choices=(LEE, HAMMING), default=LEE)
    r.add_argument("--method", choices=("exhaustive", "cosets", "gray"), default="exhaustive")
    _add_threads(r)
    _add_format(r)

    c = subs.add_parser("construct", help="write a generator file for a code family")
    c.add_argument("--family", choices=("unit_rep", "zero_div_rep", "br_full", "br_drop_last", "br_mixed"))
    c.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                   help="integer family parameter, repeatable (p, n, m, u, z)")
    c.add_argument("--spec", help="construction-spec JSON file (any family)")
    c.add_argument("-o", "--out", required=True, help="output generator file")

    b = subs.add_parser("bounds", help="sphere-covering and external-distance bounds")
    b.add_argument("file", help="generator-matrix file")
    _add_format(b)

    d = subs.add_parser("audit", help="run the claim audit suite")
    group = d.add_mutually_exclusive_group(required=True)
    group.add_argument("--default", action="store_true", help="stock audit grid")
    group.add_argument("--config", help="suite config JSON file")
    d.add_argument("--out", help="directory for report.json/csv/txt and figures")
    _add_threads(d)
    _add_format(d)

    return parser


def _emit(payload: dict, fmt: str, table: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(table)


def _cmd_weight(args) -> int:
    ctx = make_ring(args.p)
    lee = lee_weight(args.x, ctx)
    ham = hamming_weight(Word(ctx.q, (args.x,)))
    _emit({"p": args.p, "x": args.x, "lee": lee, "hamming": ham},
          args.format, f"lee={lee} hamming={ham}")
    return EXIT_OK


def _parse_word_csv(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InvalidParameterError(f"--word must be comma-separated integers, got {text!r}") from None


def _cmd_gray(args) -> int:
    ctx = make_ring(args.p)
    w = Word(ctx.q, _parse_word_csv(args.word))
    image = gray_word(w, ctx)
    _emit({"p": args.p, "word": list(w.entries), "image": list(image.entries)},
          args.format, ",".join(str(e) for e in image.entries))
    return EXIT_OK


def _analyze_payload(code) -> dict:
    try:
        d_h = min_distance(code, HAMMING)
        d_l = min_distance(code, LEE)
        kind = classify_type(code)
    except Zp2CoverError:
        d_h = d_l = kind = None
    return {
        "p": code.ctx.p,
        "n": code.n,
        "M": code.M,
        "d_hamming": d_h,
        "d_lee": d_l,
        "type": kind,
        "weight_distributions": {
            # string keys so the JSON form round-trips to identical values
            HAMMING: {str(w): c for w, c in weight_distribution(code, HAMMING).counts.items()},
            LEE: {str(w): c for w, c in weight_distribution(code, LEE).counts.items()},
        },
    }


def _cmd_analyze(args) -> int:
    G = load_generator_file(args.file)
    code = span(G)
    payload = _analyze_payload(code)
    wd = payload["weight_distributions"]
    lines = [
        f"p={payload['p']} n={payload['n']} M={payload['M']}",
        f"d_hamming={payload['d_hamming']} d_lee={payload['d_lee']} type={payload['type']}",
        "hamming weights: " + " ".join(f"{w}:{c}" for w, c in wd[HAMMING].items()),
        "lee weights:     " + " ".join(f"{w}:{c}" for w, c in wd[LEE].items()),
    ]
    _emit(payload, args.format, "\n".join(lines))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        import csv as _csv

        with open(out / "analyze.csv", "w", newline="", encoding="utf-8") as fh:
            writer = _csv.writer(fh)
            writer.writerow(["metric", "weight", "count"])
            for metric in (HAMMING, LEE):
                for wgt, cnt in wd[metric].items():
                    writer.writerow([metric, wgt, cnt])
        for metric in (HAMMING, LEE):
            reporting.plot_weight_distribution(
                weight_distribution(code, metric),
                out / f"weights_{metric}.png",
                f"{metric} weight distribution (n={code.n}, M={code.M})",
            )
    return EXIT_OK


def _cmd_radius(args) -> int:
    G = load_generator_file(args.file)
    code = span(G)
    if args.method == "exhaustive":
        res = covering_radius_exhaustive(code, args.metric, threads=args.threads)
    elif args.method == "cosets":
        res = covering_radius_cosets(code, args.metric, threads=args.threads)
    else:
        if args.metric != LEE:
            raise InvalidParameterError("--method gray computes the Lee radius only")
        res = covering_radius_gray(code, threads=args.threads)
    witness = ",".join(str(e) for e in res.witness.entries)
    _emit(
        {
            "radius": res.radius,
            "witness": list(res.witness.entries),
            "method": res.method,
            "words_examined": res.words_examined,
        },
        args.format,
        f"radius={res.radius} witness={witness} method={res.method}"
        f" words_examined={res.words_examined}",
    )
    return EXIT_OK


def _cmd_construct(args) -> int:
    if bool(args.spec) == bool(args.family):
        raise InvalidParameterError("construct needs exactly one of --family or --spec")
    if args.spec:
        spec = ConstructionSpec.from_dict(json.loads(Path(args.spec).read_text(encoding="utf-8")))
    else:
        params: dict = {}
        for item in args.param:
            key, sep, value = item.partition("=")
            if not sep:
                raise InvalidParameterError(f"--param expects KEY=VALUE, got {item!r}")
            try:
                params[key.strip()] = int(value)
            except ValueError:
                raise InvalidParameterError(f"--param {key} must be an integer") from None
        spec = ConstructionSpec(args.family, params)
    G = spec.generator()
    save_generator_file(G, args.out)
    print(f"wrote {args.out}: {spec.label()} k={G.k} n={G.n} p={G.ctx.p}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    G = load_generator_file(args.file)
    code = span(G)
    paper = sphere_covering_bound(code.ctx, code.n, code.M, "paper")
    ball = sphere_covering_bound(code.ctx, code.n, code.M, "exact_ball")
    ext = external_distance_bound(code)
    payload = {
        "sphere_covering_paper": paper.value if paper.satisfiable else "unsatisfiable",
        "sphere_covering_exact_ball": ball.value,
        "external_distance": ext.value,
    }
    lines = [
        f"sphere_covering_paper={payload['sphere_covering_paper']}",
        f"sphere_covering_exact_ball={ball.value}",
        f"external_distance={ext.value}",
    ]
    _emit(payload, args.format, "\n".join(lines))
    return EXIT_OK


def _cmd_audit(args) -> int:
    if args.default:
        config = harness.default_config()
    else:
        config = harness.load_config(Path(args.config).read_text(encoding="utf-8"))
    result = harness.run_suite(config, threads=args.threads)
    doc = harness.suite_json_doc(result)
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(reporting.render_table(result.reports), end="")
        print(reporting.render_summary(result), end="")
    if args.out:
        written = reporting.write_suite_outputs(result, doc, Path(args.out))
        for path in written:
            print(f"wrote {path}", file=sys.stderr)
    return EXIT_CONTRADICTED if result.any_contradicted else EXIT_OK


_HANDLERS = {
    "weight": _cmd_weight,
    "gray": _cmd_gray,
    "analyze": _cmd_analyze,
    "radius": _cmd_radius,
    "construct": _cmd_construct,
    "bounds": _cmd_bounds,
    "audit": _cmd_audit,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code is None:
            return EXIT_OK
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except Zp2CoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: cannot read {exc.filename}", file=sys.stderr)
        return EXIT_USAGE
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON input: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
