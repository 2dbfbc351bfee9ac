"""Gate-level peephole optimisation."""

from __future__ import annotations

from typing import List, Optional

from .circuit import BASIC_GATES, PHASE_GATES, Circuit, CircuitError, Gate

_SELF_INVERSE = ("H", "CNOT", "CZ")


def _same_pair(a: Gate, b: Gate) -> bool:
    if a.name != b.name:
        return False
    if a.name == "CZ":
        return set(a.qubits) == set(b.qubits)
    return a.qubits == b.qubits


def basic_optimize(c: Circuit) -> Circuit:
    """Cancel adjacent self-inverse pairs (H-H, CNOT-CNOT, CZ-CZ) and merge
    adjacent phase gates of the same kind on a wire, until nothing changes.

    "Adjacent" means no other gate touches any of the involved wires in
    between. Gates are kept in a list with a per-wire stack of the indices
    of the latest surviving gate on that wire.
    """
    for g in c.gates:
        if g.name not in BASIC_GATES:
            raise CircuitError(f"basic_optimize expects basic gates, got {g.name}")
    gates: List[Optional[Gate]] = []
    stacks: List[List[int]] = [[] for _ in range(c.qubits)]

    def last(q: int) -> Optional[int]:
        return stacks[q][-1] if stacks[q] else None

    for g in c.gates:
        tops = {last(q) for q in g.qubits}
        prev_i = tops.pop() if len(tops) == 1 else None
        prev = gates[prev_i] if prev_i is not None else None
        if prev is not None and set(prev.qubits) == set(g.qubits):
            if g.name in _SELF_INVERSE and _same_pair(prev, g):
                gates[prev_i] = None
                for q in g.qubits:
                    stacks[q].pop()
                continue
            if g.name in PHASE_GATES and prev.name == g.name:
                merged = Gate(g.name, g.qubits, prev.phase + g.phase)
                if merged.phase == 0:
                    gates[prev_i] = None
                    stacks[g.target].pop()
                else:
                    gates[prev_i] = merged
                continue
        gates.append(g)
        for q in g.qubits:
            stacks[q].append(len(gates) - 1)
    out = Circuit(c.qubits, name=c.name)
    out.qubit_names = c.qubit_names
    out.gates = [g for g in gates if g is not None]
    return out
