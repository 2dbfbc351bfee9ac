"""The .qc / .tfc format of reversible-circuit benchmark suites.

Header lines ``.v`` (wire names), ``.i`` and ``.o`` are followed by gate
lines between ``BEGIN`` and ``END``. Supported gates: ``H``, ``X``, ``Z``
(one to three wires: Z, CZ, CCZ), ``S``/``P`` and ``T`` with an optional
``*`` for the inverse, ``cnot``, ``swap``, ``tof`` with one to three wires
and ``t1``..``t3``. Anything else is an error.
"""

from __future__ import annotations

import re
from typing import Dict, List

from ..circuit import Circuit, CircuitError, Gate
from .errors import ParseError

_SINGLE = {"H": "H", "X": "X", "NOT": "X", "S": "S", "P": "S", "S*": "Sdg", "P*": "Sdg",
           "T": "T", "T*": "Tdg", "Z": "Z"}
_BY_ARITY = {
    "tof": {1: "X", 2: "CNOT", 3: "CCX"},
    "Z": {1: "Z", 2: "CZ", 3: "CCZ"},
    "cnot": {2: "CNOT"},
    "swap": {2: "SWAP"},
    "t1": {1: "X"}, "t2": {2: "CNOT"}, "t3": {3: "CCX"},
}


def parse_qc(text: str) -> Circuit:
    names: List[str] = []
    index: Dict[str, int] = {}
    gates: List[Gate] = []
    state = "header"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split(None, 1)
        args = [a for a in re.split(r"[\s,]+", rest[0]) if a] if rest else []
        if head.startswith("."):
            if state != "header":
                raise ParseError(f"directive {head} after BEGIN", lineno)
            if head == ".v":
                for a in args:
                    if a in index:
                        raise ParseError(f"wire {a!r} declared twice", lineno)
                    index[a] = len(names)
                    names.append(a)
            elif head in (".i", ".o", ".c", ".ol"):
                for a in args:
                    if a not in index:
                        raise ParseError(f"undeclared wire {a!r}", lineno)
            else:
                raise ParseError(f"unknown directive {head}", lineno)
            continue
        if head == "BEGIN":
            if state != "header":
                raise ParseError("repeated BEGIN", lineno)
            state = "body"
            continue
        if head == "END":
            if state != "body":
                raise ParseError("END without BEGIN", lineno)
            state = "done"
            continue
        if state != "body":
            raise ParseError(f"gate {head!r} outside BEGIN/END", lineno)
        for a in args:
            if a not in index:
                raise ParseError(f"undeclared wire {a!r}", lineno)
        qs = [index[a] for a in args]
        if head in _BY_ARITY and (head != "Z" or len(qs) > 1):
            table = _BY_ARITY[head]
            if len(qs) not in table:
                raise ParseError(f"{head} does not take {len(qs)} wire(s)", lineno)
            gname = table[len(qs)]
        elif head in _SINGLE:
            if len(qs) != 1:
                raise ParseError(f"{head} takes exactly one wire", lineno)
            gname = _SINGLE[head]
        else:
            raise ParseError(f"unsupported gate {head!r}", lineno)
        try:
            gates.append(Gate.make(gname, *qs))
        except CircuitError as e:
            raise ParseError(str(e), lineno) from None
    if state == "header":
        raise ParseError("missing BEGIN")
    if state == "body":
        raise ParseError("missing END")
    c = Circuit(len(names))
    c.gates = gates
    c.qubit_names = names
    return c


_EMIT = {"T": "T", "Tdg": "T*", "S": "S", "Sdg": "S*", "Z": "Z", "X": "X", "H": "H",
         "CNOT": "tof", "CCX": "tof", "CZ": "Z", "CCZ": "Z", "SWAP": "swap"}


def emit_qc(c: Circuit) -> str:
    names = c.qubit_names if c.qubit_names and all(re.fullmatch(r"\w+", n) for n in c.qubit_names) \
        else [f"q{i}" for i in range(c.qubits)]
    lines = [".v " + " ".join(names), ".i " + " ".join(names), ".o " + " ".join(names), "", "BEGIN"]
    for g in c.gates:
        label = g.label
        if label not in _EMIT:
            raise ValueError(f"gate {g} has no .qc form (only Clifford+T phases are expressible)")
        lines.append(_EMIT[label] + " " + " ".join(names[q] for q in g.qubits))
    lines.append("END")
    return "\n".join(lines) + "\n"
