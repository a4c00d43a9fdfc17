"""Command-line front end.

Subcommands: build an index file from text, query or render an index (or
build one on the fly from text), cross-check the matcher against the
naive oracle on random inputs, and benchmark construction.

Exit codes: 0 success, 1 verification or file-integrity failure, 2 usage.
"""

import argparse
import gc
import json
import random
import sys
import time

from .augment import augment
from .dot import export_dot
from .encoding import Alphabet
from .fuzzing import fuzz_alphabet, random_pstring, verify_random
from .heap import build
from .query import EmptyPatternError, match
from .serialize import IntegrityError, ParseError, deserialize, serialize


def _read_text_file(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read().removesuffix("\n")


def _load_heap(parser: argparse.ArgumentParser, args):
    if args.index is not None:
        if args.text is not None or args.pi is not None:
            parser.error("--index conflicts with --text/--pi")
        with open(args.index, encoding="utf-8") as fh:
            return deserialize(fh.read())
    if args.text is None:
        parser.error("one of --index or --text is required")
    if args.pi is None:
        parser.error("--pi is required with --text")
    return build(_read_text_file(args.text), Alphabet(args.pi))


def _cmd_build(parser, args) -> int:
    heap = build(_read_text_file(args.text), Alphabet(args.pi))
    if args.augment:
        augment(heap)
    data = serialize(heap)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data)
    return 0


def _cmd_query(parser, args) -> int:
    heap = _load_heap(parser, args)
    occurrences = match(heap, args.pattern)
    if args.count:
        print(len(occurrences))
    else:
        for i in occurrences:
            print(i)
    return 0


def _cmd_dot(parser, args) -> int:
    heap = _load_heap(parser, args)
    if args.mrp:
        augment(heap)
    sys.stdout.write(export_dot(heap, rslinks=args.rslinks, mrp=args.mrp))
    return 0


def _cmd_verify(parser, args) -> int:
    divergence = verify_random(args.samples, args.n, args.sigma,
                               args.pi_size, args.seed)
    if divergence is None:
        print(f"ok: {args.samples} samples agreed with the naive matcher")
        return 0
    print("divergence (minimized):")
    print(f"  text    {divergence.text!r}")
    print(f"  pi      {divergence.pi!r}")
    print(f"  pattern {divergence.pattern!r}")
    print(f"  naive   {divergence.expected}")
    print(f"  index   {divergence.got}")
    return 1


def _cmd_bench(parser, args) -> int:
    if args.min_n < 1 or args.max_n < args.min_n:
        parser.error("need 1 <= --min-n <= --max-n")
    n = args.min_n
    while n <= args.max_n:
        text = random_pstring(args.seed + n, n, 8, 8)
        alphabet = fuzz_alphabet(8)
        gc_was_enabled = gc.isenabled()
        gc.disable()
        try:
            t0 = time.perf_counter()
            heap = build(text, alphabet)
            t1 = time.perf_counter()
            augment(heap)
            t2 = time.perf_counter()
            rng = random.Random(args.seed + n + 1)
            queries = 50
            hits = 0
            t3 = time.perf_counter()
            for _ in range(queries):
                m = rng.randint(4, 24)
                if m > n:
                    m = n
                i = rng.randint(1, n - m + 1)
                hits += len(match(heap, text[i - 1:i - 1 + m]))
            t4 = time.perf_counter()
        finally:
            if gc_was_enabled:
                gc.enable()
        print(json.dumps({"n": n, "build_seconds": round(t1 - t0, 6),
                          "augment_seconds": round(t2 - t1, 6),
                          "query_seconds": round(t4 - t3, 6),
                          "queries": queries, "occurrences": hits}))
        n *= 2
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pposheap",
        description="Parameterized position heap text index")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="index a text file")
    p.add_argument("--text", required=True, metavar="FILE",
                   help="UTF-8 text file (one trailing newline ignored)")
    p.add_argument("--pi", required=True, metavar="CHARS",
                   help="parameter characters, concatenated")
    p.add_argument("--out", metavar="FILE", help="write here instead of stdout")
    p.add_argument("--augment", action="store_true",
                   help="precompute maximal reaches before writing")
    p.set_defaults(func=_cmd_build)

    for name, help_ in (("query", "report pattern occurrences"),
                        ("dot", "render the index as Graphviz")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--index", metavar="FILE", help="a serialized index")
        p.add_argument("--text", metavar="FILE", help="index this text on the fly")
        p.add_argument("--pi", metavar="CHARS", help="parameter characters (with --text)")
        if name == "query":
            p.add_argument("--pattern", required=True, help="pattern p-string")
            p.add_argument("--count", action="store_true",
                           help="print only the number of occurrences")
            p.set_defaults(func=_cmd_query)
        else:
            p.add_argument("--rslinks", action="store_true",
                           help="draw reversed suffix links")
            p.add_argument("--mrp", action="store_true",
                           help="draw maximal reach pointers (augments if needed)")
            p.set_defaults(func=_cmd_dot)

    p = sub.add_parser("verify", help="cross-check against the naive matcher")
    p.add_argument("--n", type=int, default=60, help="max text length")
    p.add_argument("--sigma", type=int, default=3, help="static alphabet size")
    p.add_argument("--pi-size", type=int, default=3, help="parameter alphabet size")
    p.add_argument("--samples", type=int, default=1000, help="instances to run")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="time construction over doubling sizes")
    p.add_argument("--min-n", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except (ParseError, IntegrityError, EmptyPatternError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
