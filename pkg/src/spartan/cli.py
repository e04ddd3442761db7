"""Command-line interface.

One executable, nine subcommands: entropy, space, classify, stats, crack,
tradeoff, serve, encode, verify. stdout carries data only (CSV or JSON);
diagnostics go to stderr. Exit codes: 0 success, 1 operational failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence

from . import store
from .cracker import (
    CrackReport,
    HorizontalAnyStartBothDir,
    Strategy,
    crack,
    default_ladder,
    load_dictionary,
    parse_strategy,
    tradeoff_csv,
    tradeoff_curve,
)
from .codec import from_canonical, from_tagged, to_canonical, to_tagged
from .entropy import (
    curve_csv,
    entropy_curve,
    linear_space_bits,
    paper_round,
    perm_count,
    random_entropy,
    sci_format,
    spartan_space_bits,
    user_linear_entropy,
    user_spartan_entropy,
)
from .errors import SpartanError
from .grid import GridSpec
from .shapes import ShapeClass, classify, corpus_stats, load_corpus


class _UsageError(Exception):
    pass


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        rows_s, cols_s = text.lower().split("x")
        return int(rows_s), int(cols_s)
    except ValueError:
        raise _UsageError(f"--grid expects ROWSxCOLS, got {text!r}") from None


def _class_dict(cls: ShapeClass) -> dict:
    out: dict = {"class": cls.kind.value}
    if cls.orientation is not None:
        out["orientation"] = cls.orientation.value
    if cls.direction_changes is not None:
        out["direction_changes"] = cls.direction_changes
    if cls.segment_count is not None:
        out["segment_count"] = cls.segment_count
    return out


def _strategies(args, default: list[Strategy]) -> list[Strategy]:
    if not args.strategy:
        return default
    try:
        return [parse_strategy(token) for token in args.strategy]
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def cmd_entropy(args) -> int:
    if args.curve:
        points = entropy_curve(args.max_length, args.alphabet_size, args.cells)
        sys.stdout.write(curve_csv(points))
        if args.figure:
            from . import figures

            figures.render_entropy_curve(points, args.figure)
        return 0
    if args.length is None or args.kind is None:
        raise _UsageError("entropy needs --curve, or both --length and --kind")
    kinds = {
        "user-linear": lambda: user_linear_entropy(args.length),
        "user-spartan": lambda: user_spartan_entropy(args.length),
        "random-linear": lambda: random_entropy(args.alphabet_size, args.length),
        "random-spartan": lambda: random_entropy(args.alphabet_size, args.length, args.cells),
    }
    bits = kinds[args.kind]()
    if args.json:
        print(
            json.dumps(
                {
                    "kind": args.kind,
                    "length": args.length,
                    "bits": bits,
                    "rounded": paper_round(bits),
                }
            )
        )
    else:
        print(f"{bits:.2f},{paper_round(bits)}")
    return 0


def cmd_space(args) -> int:
    rows, cols = _parse_grid(args.grid)
    cells = rows * cols
    linear_bits = linear_space_bits(args.alphabet, args.length)
    spartan_bits = spartan_space_bits(args.alphabet, args.length, cells)
    linear_count = args.alphabet**args.length
    spartan_count = linear_count * perm_count(cells, args.length)
    if args.json:
        print(
            json.dumps(
                {
                    "linear": {
                        "bits": linear_bits,
                        "rounded": paper_round(linear_bits),
                        "count": str(linear_count),
                    },
                    "spartan": {
                        "bits": spartan_bits,
                        "rounded": paper_round(spartan_bits),
                        "count": str(spartan_count),
                    },
                }
            )
        )
        return 0
    print("kind,bits,rounded,count")
    print(f"linear,{linear_bits:.2f},{paper_round(linear_bits)},{sci_format(linear_count)}")
    print(f"spartan,{spartan_bits:.2f},{paper_round(spartan_bits)},{sci_format(spartan_count)}")
    return 0


def cmd_classify(args) -> int:
    if args.tagged is not None:
        if not args.grid:
            raise _UsageError("--tagged needs --grid ROWSxCOLS")
        rows, cols = _parse_grid(args.grid)
        placement = from_tagged(GridSpec(rows, cols), args.tagged)
        print(json.dumps(_class_dict(classify(placement))))
        return 0
    if not args.corpus:
        raise _UsageError("classify needs --corpus FILE or --tagged STRING")
    for placement in load_corpus(args.corpus):
        print(json.dumps(_class_dict(classify(placement))))
    return 0


def cmd_stats(args) -> int:
    stats = corpus_stats(load_corpus(args.corpus))
    print(json.dumps(stats.to_json_dict(), indent=2))
    if args.heatmap_csv:
        with open(args.heatmap_csv, "w", encoding="utf-8") as fh:
            fh.write(stats.heatmap_csv())
    if args.figure:
        from . import figures

        figures.render_heatmap(stats, args.figure)
    return 0


def cmd_crack(args) -> int:
    records = list(store.load(args.store).values())
    words = load_dictionary(args.dictionary)
    report: CrackReport = crack(
        records,
        words,
        _strategies(args, [HorizontalAnyStartBothDir()]),
        workers=args.workers,
        checkpoint_path=args.checkpoint,
    )
    print(json.dumps(report.to_json_dict(include_elapsed=args.timing), indent=2))
    return 0


def cmd_tradeoff(args) -> int:
    corpus = load_corpus(args.corpus)
    words = load_dictionary(args.dictionary)
    points = tradeoff_curve(corpus, words, _strategies(args, default_ladder()))
    sys.stdout.write(tradeoff_csv(points))
    if args.figure:
        from . import figures

        figures.render_tradeoff(points, args.figure)
    return 0


def cmd_serve(args) -> int:
    from .service import AuthService, build_server

    service = AuthService(
        args.store, rows=args.rows, cols=args.cols, profile=args.profile
    )
    httpd = build_server(service, args.host, args.port)
    host, port = httpd.server_address[:2]
    print(f"serving on {host}:{port} (store: {args.store})", file=sys.stderr)
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
    return 0


def cmd_encode(args) -> int:
    rows, cols = _parse_grid(args.grid)
    grid = GridSpec(rows, cols)
    if (args.tagged is None) == (args.canonical is None):
        raise _UsageError("encode needs exactly one of --tagged or --canonical")
    if args.tagged is not None:
        placement = from_tagged(grid, args.tagged)
    else:
        placement = from_canonical(grid, args.canonical)
    if args.json:
        print(
            json.dumps(
                {"tagged": to_tagged(placement), "canonical": to_canonical(placement)}
            )
        )
    elif args.tagged is not None:
        print(to_canonical(placement))
    else:
        print(to_tagged(placement))
    return 0


def cmd_verify(args) -> int:
    records = store.load(args.store)
    record = records.get(args.username)
    if record is None:
        raise SpartanError(f"no record for username {args.username!r}")
    placement = from_tagged(record.grid(), args.tagged)
    verified = store.verify_password(record, placement)
    if args.json:
        print(json.dumps({"username": args.username, "verified": verified}))
    else:
        print("true" if verified else "false")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spartan",
        description="Two-dimensional password toolkit: entry codecs, entropy "
        "arithmetic, shape analytics, a dictionary-attack engine, and an "
        "authentication service.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="machine-readable output and errors"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", parents=[common], help="entropy estimates and curves")
    p.add_argument("--length", type=int)
    p.add_argument(
        "--kind",
        choices=["user-linear", "user-spartan", "random-linear", "random-spartan"],
    )
    p.add_argument("--curve", action="store_true", help="emit the four-series CSV")
    p.add_argument("--max-length", type=int, default=30)
    p.add_argument("--alphabet-size", type=int, default=95)
    p.add_argument("--cells", type=int, default=144)
    p.add_argument("--figure", help="also render the curve to this image file")
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("space", parents=[common], help="password-space sizes")
    p.add_argument("--alphabet", type=int, required=True, help="alphabet size")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--grid", required=True, help="ROWSxCOLS")
    p.set_defaults(func=cmd_space)

    p = sub.add_parser("classify", parents=[common], help="shape class per placement")
    p.add_argument("--corpus", help="placement corpus, one JSON record per line")
    p.add_argument("--tagged", help="classify one placement given in tagged form")
    p.add_argument("--grid", help="ROWSxCOLS for --tagged")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("stats", parents=[common], help="corpus statistics")
    p.add_argument("--corpus", required=True)
    p.add_argument("--heatmap-csv", help="also write the heatmap matrix as CSV")
    p.add_argument("--figure", help="also render the heatmap to this image file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("crack", parents=[common], help="attack a credential file")
    p.add_argument("--store", required=True, help="credential store file")
    p.add_argument("--dictionary", required=True, help="newline-delimited word list")
    p.add_argument(
        "--strategy",
        action="append",
        default=[],
        help="fixed-top-left | horizontal-lr | horizontal-bidi | straight-all "
        "| snake:TURNS (repeatable; default: horizontal-bidi)",
    )
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--checkpoint", help="resume file for partition progress")
    p.add_argument(
        "--timing", action="store_true", help="include elapsed seconds in the report"
    )
    p.set_defaults(func=cmd_crack)

    p = sub.add_parser(
        "tradeoff", parents=[common], help="dictionary-size vs recovery curve"
    )
    p.add_argument("--corpus", required=True, help="plaintext placement corpus")
    p.add_argument("--dictionary", required=True)
    p.add_argument("--strategy", action="append", default=[])
    p.add_argument("--figure", help="also render the curve to this image file")
    p.set_defaults(func=cmd_tradeoff)

    p = sub.add_parser("serve", parents=[common], help="run the authentication service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument(
        "--store",
        default=os.environ.get("SPARTAN_STORE", "spartan-credentials.txt"),
        help="credential store path (env: SPARTAN_STORE)",
    )
    p.add_argument("--rows", type=int, default=12)
    p.add_argument("--cols", type=int, default=12)
    p.add_argument(
        "--profile",
        default=os.environ.get("SPARTAN_KDF_PROFILE", "default"),
        choices=["default", "test"],
        help="KDF cost profile (env: SPARTAN_KDF_PROFILE)",
    )
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("encode", parents=[common], help="convert between password forms")
    p.add_argument("--grid", required=True, help="ROWSxCOLS")
    p.add_argument("--tagged", help="tagged form to convert to canonical")
    p.add_argument("--canonical", help="canonical form to convert to tagged")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("verify", parents=[common], help="check a password against the store")
    p.add_argument("--store", required=True)
    p.add_argument("--username", required=True)
    p.add_argument("--tagged", required=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (SpartanError, OSError, ValueError, KeyError) as exc:
        if getattr(args, "json", False):
            print(
                json.dumps({"error": type(exc).__name__, "message": str(exc)}),
                file=sys.stderr,
            )
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
