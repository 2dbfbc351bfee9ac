"""Command-line interface: ``python -m zxkit {opt,tikz,verify,stats,bench}``.

Exit codes: 0 success, 1 inconclusive or unequal (verify), 2 bad input
(unreadable, unparsable, qubit mismatch), 3 extraction failed.
Diagnostics go to standard error; results go to standard output or to
``--output``, which is written atomically.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
import time
from typing import List, Optional, Sequence

from .circuit import Circuit, CircuitError
from .extract import ExtractionStuck, streaming_extract
from .formats import FormatError, ParseError, emit_qasm, emit_qc, emit_tikz, load
from .generate import random_clifford
from .optimize import basic_optimize
from .simplify import SimplifierError, clifford_simp, full_reduce, teleport_reduce
from .tensor import Equality, circuit_matrix, compare_tensors, verify_equality

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_INPUT = 2
EXIT_STUCK = 3

TENSOR_QUBIT_LIMIT = 10

log = logging.getLogger("zxkit")


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _load(path: str) -> Circuit:
    if not os.path.isfile(path):
        raise CliError(f"{path}: no such file", EXIT_INPUT)
    try:
        return load(path)
    except (ParseError, FormatError, CircuitError) as e:
        raise CliError(f"{path}: {e}", EXIT_INPUT) from None
    except (OSError, UnicodeDecodeError) as e:
        raise CliError(f"{path}: {e}", EXIT_INPUT) from None


def _write(text: str, output: Optional[str]) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    folder = os.path.dirname(os.path.abspath(output))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".zxkit-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp, output)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _stats_line(label: str, c: Circuit) -> str:
    s = c.stats()
    return f"{label}: {s.gates} gates, T-count {s.tcount}, 2-qubit {s.two_qubit}, qubits {s.qubits}"


def optimise(c: Circuit, strategy: str) -> Circuit:
    if strategy == "teleport":
        return teleport_reduce(c)
    d = c.to_basic_gates().to_graph()
    if strategy == "full":
        full_reduce(d)
    else:
        clifford_simp(d)
    return basic_optimize(streaming_extract(d))


def cmd_opt(args: argparse.Namespace) -> int:
    c = _load(args.input)
    strategy = args.strategy or "teleport"
    print(_stats_line("before", c), file=sys.stderr)
    try:
        out = optimise(c, strategy)
    except ExtractionStuck as e:
        raise CliError(f"extraction failed: {e}", EXIT_STUCK) from None
    out.qubit_names = c.qubit_names
    print(_stats_line("after", out), file=sys.stderr)
    fmt = args.format or "qasm"
    try:
        text = emit_qc(out) if fmt == "qc" else emit_qasm(out)
    except ValueError as e:
        raise CliError(f"cannot write {fmt}: {e}", EXIT_INPUT) from None
    _write(text, args.output)
    return EXIT_OK


def cmd_tikz(args: argparse.Namespace) -> int:
    c = _load(args.input)
    if args.strategy == "teleport":
        c = teleport_reduce(c)
    d = c.to_basic_gates().to_graph()
    if args.strategy == "full":
        full_reduce(d)
        d.normalise()
    elif args.strategy == "clifford":
        clifford_simp(d)
        d.normalise()
    _write(emit_tikz(d), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if len(args.input) != 2:
        raise CliError("verify needs exactly two circuits", EXIT_INPUT)
    c1, c2 = (_load(p) for p in args.input)
    if c1.qubits != c2.qubits:
        raise CliError(f"qubit mismatch: {c1.qubits} vs {c2.qubits}", EXIT_INPUT)
    if args.tensor:
        if c1.qubits > TENSOR_QUBIT_LIMIT:
            raise CliError(f"--tensor supports at most {TENSOR_QUBIT_LIMIT} qubits", EXIT_INPUT)
        same = compare_tensors(circuit_matrix(c1.to_basic_gates()), circuit_matrix(c2.to_basic_gates()))
        print("equal" if same else "not equal")
        return EXIT_OK if same else EXIT_INCONCLUSIVE
    result = verify_equality(c1, c2)
    print(result.value)
    return EXIT_OK if result is Equality.EQUAL else EXIT_INCONCLUSIVE


def cmd_stats(args: argparse.Namespace) -> int:
    for path in sorted(args.input):
        c = _load(path)
        s = c.stats()
        prefix = f"{path}: " if len(args.input) > 1 else ""
        print(f"{prefix}qubits {s.qubits} gates {s.gates} tcount {s.tcount} "
              f"two_qubit {s.two_qubit} hadamard {s.hadamard}")
    return EXIT_OK


def _int_list(text: str) -> List[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("values must be positive")
    return values


def cmd_bench(args: argparse.Namespace) -> int:
    simplify = full_reduce if args.strategy == "full" else clifford_simp
    print(f"{'qubits':>6} {'gates':>7} {'time_s':>9} {'vertices':>8}")
    for q in args.qubits:
        for g in args.gates:
            c = random_clifford(q, g, seed=args.seed)
            d = c.to_graph()
            t0 = time.perf_counter()
            simplify(d)
            dt = time.perf_counter() - t0
            print(f"{q:>6} {g:>7} {dt:>9.4f} {d.num_vertices():>8}")
            sys.stdout.flush()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zxkit", description="ZX-calculus circuit optimiser and checker")
    p.add_argument("--verbose", action="store_true", help="log rewrite progress to standard error")
    sub = p.add_subparsers(dest="command", required=True)

    strategies = ("full", "clifford", "teleport")

    o = sub.add_parser("opt", help="optimise a circuit")
    o.add_argument("input")
    o.add_argument("--strategy", choices=strategies, default=None,
                   help="teleport (default): merge phases in place; full/clifford: simplify and extract")
    o.add_argument("--format", choices=("qasm", "qc"), default=None, help="output format (default qasm)")
    o.add_argument("--output", help="output file (default: standard output)")
    o.set_defaults(func=cmd_opt)

    t = sub.add_parser("tikz", help="export the circuit's diagram as TikZ")
    t.add_argument("input")
    t.add_argument("--strategy", choices=strategies, default=None, help="simplify before exporting")
    t.add_argument("--output")
    t.set_defaults(func=cmd_tikz)

    v = sub.add_parser("verify", help="check two circuits for equality")
    v.add_argument("input", nargs="+")
    v.add_argument("--tensor", action="store_true",
                   help=f"compare unitaries by brute force (up to {TENSOR_QUBIT_LIMIT} qubits)")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stats", help="print gate statistics")
    s.add_argument("input", nargs="+")
    s.set_defaults(func=cmd_stats)

    b = sub.add_parser("bench", help="time simplification of random Clifford circuits")
    b.add_argument("--qubits", type=_int_list, default=[9], help="qubit count(s), comma separated")
    b.add_argument("--gates", type=_int_list, default=[1000], help="gate count(s), comma separated")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--strategy", choices=("full", "clifford"), default="clifford")
    b.set_defaults(func=cmd_bench)

    # global flags are also accepted after the subcommand
    for sp in (o, t, v, s, b):
        sp.add_argument("--verbose", action="store_true", default=argparse.SUPPRESS)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except SimplifierError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_STUCK


if __name__ == "__main__":
    sys.exit(main())
