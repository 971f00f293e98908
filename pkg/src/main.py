"""
Command-line front end.

    python -m src.main decompose graph.txt --type-nodes strict
    python -m src.main query graph.txt shs 0 2
    python -m src.main check graph.txt --axioms --oracle
    python -m src.main generate --model gnp --n 8 --p 0.5 --seed 7
    python -m src.main oracle graph.txt

Exit codes: 0 success, 1 a requested check failed, 2 malformed input,
3 the computation could not be carried out.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from src.axioms import Axiom, ClosureLevel, SubmodularMode
from src.config import settings
from src.errors import ComputationError, InputError
from src.formats import load_input
from src.generators import Model, generate
from src.instances import serialize_graph
from src.pipeline import (InstanceKind, TypingMode, decompose, oracle_families, query_mhs, query_shs,
                          query_trivial, relation_of, run_checks)

logger = logging.getLogger("homodec")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_COMPUTATION = 0, 1, 2, 3


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {number}")
    return number


# command line parsing
def get_options(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Decompose homogeneous relations into strong homogeneous sets",
                                     prog="homodec")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    parser.add_argument("--threads", type=positive_int, default=None,
                        help=f"Worker threads for the maximal-set family (default {settings.threads})")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_input(sub: argparse.ArgumentParser):
        sub.add_argument("input", help="Edge list or relation JSON, '-' for stdin")
        sub.add_argument("--kind", choices=[k.value for k in InstanceKind], default=InstanceKind.AUTO.value,
                         help="Which structure of a graph input to use")
        sub.add_argument("--k", type=int, default=2, help="Distance bound of --kind distance")

    decompose_cmd = commands.add_parser("decompose", help="Strong-set tree of the input")
    add_input(decompose_cmd)
    decompose_cmd.add_argument("--type-nodes", choices=[m.value for m in TypingMode], default=TypingMode.ON.value)
    decompose_cmd.add_argument("--format", choices=["json", "text"], default="json")
    decompose_cmd.add_argument("--out", help="Output file (default stdout)")

    query_cmd = commands.add_parser("query", help="Smallest/maximal homogeneous sets, triviality")
    add_input(query_cmd)
    query_cmd.add_argument("operation", choices=["shs", "mhs", "trivial"])
    query_cmd.add_argument("ids", nargs="*", type=int, help="Elements: the set for shs, the element for mhs")

    check_cmd = commands.add_parser("check", help="Axioms, closure, submodularity, oracle agreement")
    add_input(check_cmd)
    check_cmd.add_argument("--axioms", nargs="*", choices=[a.value for a in Axiom], default=None,
                           help="Axioms to check (none listed: those expected for the input)")
    check_cmd.add_argument("--closure", nargs="?", const="auto", default=None,
                           choices=["auto"] + [c.value for c in ClosureLevel])
    check_cmd.add_argument("--submodular", nargs="?", const="auto", default=None,
                           choices=["auto"] + [m.value for m in SubmodularMode])
    check_cmd.add_argument("--oracle", action="store_true", help="Compare fast operations with brute force")
    check_cmd.add_argument("--samples", type=int, default=None, help="Sampled submodularity pairs")
    check_cmd.add_argument("--seed", type=int, default=None)

    generate_cmd = commands.add_parser("generate", help="Write a random instance as an edge list")
    generate_cmd.add_argument("--model", choices=[m.value for m in Model], required=True)
    generate_cmd.add_argument("--n", type=int, required=True)
    generate_cmd.add_argument("--p", type=float, default=0.5, help="Edge probability")
    generate_cmd.add_argument("--seed", type=int, default=0)
    generate_cmd.add_argument("--colors", type=int, default=2, help="Colours of a 2-structure")
    generate_cmd.add_argument("--directed", action="store_true", help="Directed 2-structure")
    generate_cmd.add_argument("--out", help="Output file (default stdout)")

    oracle_cmd = commands.add_parser("oracle", help="Brute-force homogeneous and strong sets of a small input")
    add_input(oracle_cmd)

    return parser.parse_args(argv)


def configure_logging(verbose: int):
    level = {0: settings.log_level, 1: "INFO"}.get(verbose, "DEBUG")
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def write_output(text: str, out: Optional[str] = None):
    if out:
        Path(out).write_text(text)
        sys.stderr.write(f"✓ wrote {out}\n")
    else:
        sys.stdout.write(text)


def to_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def cmd_decompose(args: argparse.Namespace) -> int:
    item = load_input(read_input(args.input))
    tree = decompose(item, kind=args.kind, typing=args.type_nodes, k=args.k, threads=args.threads)
    write_output(tree.outline() if args.format == "text" else to_json(tree.to_dict()), args.out)
    return EXIT_OK


def cmd_query(args: argparse.Namespace) -> int:
    r = relation_of(load_input(read_input(args.input)), kind=args.kind, k=args.k)
    if args.operation == "shs":
        result = query_shs(r, args.ids)
    elif args.operation == "mhs":
        if len(args.ids) != 1:
            raise InputError("mhs takes exactly one element")
        result = query_mhs(r, args.ids[0])
    else:
        result = query_trivial(r)
    write_output(to_json(result))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    item = load_input(read_input(args.input))
    axioms = args.axioms
    if axioms is None and args.closure is None and args.submodular is None and not args.oracle:
        axioms = []
    reports = run_checks(item, kind=args.kind, k=args.k, axioms=axioms, closure=args.closure,
                         submodular=args.submodular, oracle=args.oracle, samples=args.samples, seed=args.seed)
    write_output(to_json([report.model_dump() for report in reports]))
    failed = [report.axiom for report in reports if not report.holds]
    if failed:
        sys.stderr.write(f"✗ failed: {', '.join(failed)}\n")
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    g = generate(Model(args.model), args.n, p=args.p, seed=args.seed, colors=args.colors, directed=args.directed)
    write_output(serialize_graph(g), args.out)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    item = load_input(read_input(args.input))
    write_output(to_json(oracle_families(item, kind=args.kind, k=args.k)))
    return EXIT_OK


COMMANDS = {
    "decompose": cmd_decompose,
    "query": cmd_query,
    "check": cmd_check,
    "generate": cmd_generate,
    "oracle": cmd_oracle,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = get_options(argv)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except InputError as e:
        sys.stderr.write(f"✗ invalid input: {e}\n")
        return EXIT_INPUT
    except OSError as e:
        sys.stderr.write(f"✗ cannot read input: {e}\n")
        return EXIT_INPUT
    except ComputationError as e:
        sys.stderr.write(f"✗ {type(e).__name__}: {e}\n")
        return EXIT_COMPUTATION
    except MemoryError:
        sys.stderr.write("✗ out of memory, the input is too large for this operation\n")
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
