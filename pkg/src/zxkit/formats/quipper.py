"""Quipper ASCII circuits, restricted to a small gate vocabulary.

Accepted: ``QGate["not"]``/``QGate["X"]`` with up to two controls (X,
CNOT, Toffoli), ``QGate["Z"]`` with up to two controls (Z, CZ, CCZ),
``QGate["H"]``, ``QGate["S"]`` and ``QGate["T"]`` (``*`` marks the
inverse), and ``QRot["exp(-i%Z)", theta]`` as a Z phase of 2*theta.
Negative controls and every other primitive are errors; ``Comment`` lines
are skipped.
"""

from __future__ import annotations

import re
from typing import Dict, List

from ..circuit import Circuit, CircuitError, Gate
from .angles import AngleError, radians_to_pi
from .errors import ParseError

_LINE = re.compile(
    r'^(QGate|QRot)\["([^"]+)"(?:\s*,\s*([^\]]+))?\](\*?)\((\d+)\)'
    r'(?:\s+with\s+controls=\[([^\]]*)\])?(?:\s+with\s+nocontrol)?$')
_WIRE = re.compile(r"(\d+)\s*:\s*Qbit")


def _wires(spec: str, lineno: int) -> List[int]:
    ws = [int(m.group(1)) for m in _WIRE.finditer(spec)]
    if ":Cbit" in spec.replace(" ", ""):
        raise ParseError("classical wires are not supported", lineno)
    return ws


def parse_quipper(text: str) -> Circuit:
    index: Dict[int, int] = {}
    gates: List[Gate] = []
    seen_inputs = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("Comment"):
            continue
        if line.startswith("Inputs:"):
            if seen_inputs:
                raise ParseError("repeated Inputs line", lineno)
            for w in _wires(line[len("Inputs:"):], lineno):
                index[w] = len(index)
            seen_inputs = True
            continue
        if line.startswith("Outputs:"):
            if set(_wires(line[len("Outputs:"):], lineno)) != set(index):
                raise ParseError("outputs differ from inputs", lineno)
            continue
        if not seen_inputs:
            raise ParseError("gate before the Inputs line", lineno)
        m = _LINE.match(line)
        if not m:
            raise ParseError(f"unsupported line {line!r}", lineno)
        kind, name, param, inv, target, ctrl = m.groups()
        controls: List[int] = []
        for c in (ctrl or "").split(","):
            c = c.strip()
            if not c:
                continue
            if c.startswith("-"):
                raise ParseError("negative controls are not supported", lineno)
            controls.append(int(c.lstrip("+")))
        wires = controls + [int(target)]
        if any(w not in index for w in wires):
            raise ParseError("gate on an undeclared wire", lineno)
        qs = [index[w] for w in wires]
        inverse = inv == "*"
        try:
            if kind == "QRot":
                if name != "exp(-i%Z)" or controls or param is None:
                    raise ParseError(f"unsupported rotation {name!r}", lineno)
                try:
                    theta = radians_to_pi(2 * float(param))
                except (AngleError, ValueError) as e:
                    raise ParseError(str(e), lineno) from None
                gates.append(Gate.make("ZPhase", *qs, phase=-theta if inverse else theta))
            elif name in ("not", "X") and len(controls) <= 2:
                gates.append(Gate.make(("X", "CNOT", "CCX")[len(controls)], *qs))
            elif name == "Z" and len(controls) <= 2:
                gates.append(Gate.make(("Z", "CZ", "CCZ")[len(controls)], *qs))
            elif name in ("H", "S", "T") and not controls:
                if name == "H":
                    gates.append(Gate.make("H", *qs))
                else:
                    gates.append(Gate.make(name + ("dg" if inverse else ""), *qs))
            else:
                raise ParseError(f"unsupported gate {name!r} with {len(controls)} control(s)", lineno)
        except CircuitError as e:
            raise ParseError(str(e), lineno) from None
    if not seen_inputs:
        raise ParseError("missing Inputs line")
    c = Circuit(len(index))
    c.gates = gates
    c.qubit_names = [str(w) for w in index]
    return c
