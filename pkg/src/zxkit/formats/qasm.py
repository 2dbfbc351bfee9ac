"""OpenQASM 2.0 subset: one qreg and the gates h, x, z, s, sdg, t, tdg, rz,
rx, cx, cz, ccx, ccz, swap. ``include`` lines, ``creg`` declarations and
``barrier`` are ignored; measurement and reset are rejected."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from ..circuit import Circuit, CircuitError, Gate
from .angles import AngleError, format_angle, parse_angle
from .errors import ParseError

# name -> (gate name for Gate.make, arity, takes an angle)
GATES = {
    "h": ("H", 1, False), "x": ("X", 1, False), "z": ("Z", 1, False),
    "s": ("S", 1, False), "sdg": ("Sdg", 1, False), "t": ("T", 1, False), "tdg": ("Tdg", 1, False),
    "rz": ("ZPhase", 1, True), "rx": ("XPhase", 1, True),
    "cx": ("CNOT", 2, False), "cz": ("CZ", 2, False),
    "ccx": ("CCX", 3, False), "ccz": ("CCZ", 3, False), "swap": ("SWAP", 2, False),
}
IGNORED = ("include", "creg", "barrier")
REJECTED = ("measure", "reset", "if", "gate", "opaque")

_STMT = re.compile(r"^([A-Za-z_]\w*)\s*(?:\((.*)\))?\s*(.*)$", re.S)
_ARG = re.compile(r"^([A-Za-z_]\w*)\s*(?:\[\s*(\d+)\s*\])?$")


def _statements(text: str) -> Iterator[Tuple[str, int, int]]:
    """Yield (statement, line, column) with comments stripped."""
    buf: List[str] = []
    start: Optional[Tuple[int, int]] = None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("//", 1)[0]
        for col, ch in enumerate(line, 1):
            if ch == ";":
                stmt = "".join(buf).strip()
                if stmt:
                    yield stmt, start[0], start[1]
                buf, start = [], None
            else:
                if start is None and not ch.isspace():
                    start = (lineno, col)
                buf.append(ch)
        buf.append(" ")
    rest = "".join(buf).strip()
    if rest:
        raise ParseError("missing ';' at end of statement", *start)


def parse_qasm(text: str) -> Circuit:
    # register name -> (offset, size); registers are laid out in declaration order
    regs: Dict[str, Tuple[int, int]] = {}
    nqubits = 0
    gates: List[Tuple[Gate, int, int]] = []
    seen_header = False
    for stmt, line, col in _statements(text):
        if stmt.startswith("OPENQASM"):
            version = stmt.split(None, 1)[1].strip() if len(stmt.split()) > 1 else ""
            if not version.startswith("2"):
                raise ParseError(f"unsupported QASM version {version!r}", line, col)
            seen_header = True
            continue
        m = _STMT.match(stmt)
        if not m:
            raise ParseError(f"cannot parse statement {stmt!r}", line, col)
        name, params, rest = m.group(1), m.group(2), m.group(3).strip()
        if name in IGNORED:
            continue
        if name in REJECTED:
            raise ParseError(f"'{name}' is not supported", line, col)
        if name == "qreg":
            a = _ARG.match(rest)
            if not a or a.group(2) is None:
                raise ParseError(f"bad qreg declaration {stmt!r}", line, col)
            if a.group(1) in regs:
                raise ParseError(f"register {a.group(1)!r} declared twice", line, col)
            regs[a.group(1)] = (nqubits, int(a.group(2)))
            nqubits += int(a.group(2))
            continue
        if name not in GATES:
            raise ParseError(f"unsupported gate '{name}'", line, col)
        if not regs:
            raise ParseError(f"gate '{name}' before any qreg declaration", line, col)
        gname, arity, has_angle = GATES[name]
        phase = Fraction(0)
        if has_angle:
            if params is None:
                raise ParseError(f"'{name}' needs an angle", line, col)
            try:
                phase = parse_angle(params)
            except AngleError as e:
                raise ParseError(str(e), line, col) from None
        elif params is not None:
            raise ParseError(f"'{name}' takes no parameters", line, col)
        args = [a.strip() for a in rest.split(",")] if rest else []
        if len(args) != arity:
            raise ParseError(f"'{name}' expects {arity} argument(s), got {len(args)}", line, col)
        qubits: List[Optional[int]] = []
        broadcast: Optional[Tuple[int, int]] = None
        for a in args:
            am = _ARG.match(a)
            if not am or am.group(1) not in regs:
                raise ParseError(f"unknown register argument {a!r}", line, col)
            offset, size = regs[am.group(1)]
            if am.group(2) is None:
                broadcast = (offset, size)
                qubits.append(None)
                continue
            idx = int(am.group(2))
            if idx >= size:
                raise ParseError(f"qubit index {idx} out of range for {am.group(1)}[{size}]", line, col)
            qubits.append(offset + idx)
        # a bare register argument broadcasts a single-qubit gate over the register
        targets = [qubits] if broadcast is None else (
            [[i] for i in range(broadcast[0], broadcast[0] + broadcast[1])] if arity == 1 else None)
        if targets is None:
            raise ParseError("register broadcast is only supported for single-qubit gates", line, col)
        for qs in targets:
            try:
                gates.append((Gate.make(gname, *qs, phase=phase), line, col))
            except CircuitError as e:
                raise ParseError(str(e), line, col) from None
    if not seen_header and not regs:
        raise ParseError("no OPENQASM header or qreg declaration found")
    c = Circuit(nqubits)
    c.gates = [g for g, _, _ in gates]
    if regs:
        c.qubit_names = [f"{name}[{i}]" for name, (_, size) in regs.items() for i in range(size)]
    return c


_EMIT_FIXED = {"T": "t", "Tdg": "tdg", "S": "s", "Sdg": "sdg", "Z": "z", "X": "x",
               "H": "h", "CNOT": "cx", "CZ": "cz", "CCX": "ccx", "CCZ": "ccz", "SWAP": "swap"}


def emit_qasm(c: Circuit, register: str = "q") -> str:
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg {register}[{c.qubits}];"]
    for g in c.gates:
        args = ", ".join(f"{register}[{q}]" for q in g.qubits)
        label = g.label
        if label in _EMIT_FIXED:
            lines.append(f"{_EMIT_FIXED[label]} {args};")
        elif g.name == "ZPhase":
            lines.append(f"rz({format_angle(g.phase)}) {args};")
        elif g.name == "XPhase":
            lines.append(f"rx({format_angle(g.phase)}) {args};")
        else:
            raise ValueError(f"gate {g.name} cannot be written as QASM")
    return "\n".join(lines) + "\n"
