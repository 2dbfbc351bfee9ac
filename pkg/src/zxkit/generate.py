"""Seeded random circuit generators used by tests, benchmarks and the CLI."""

from __future__ import annotations

import random
from typing import Optional, Sequence, Union

from .circuit import ALIASES, ARITY, Circuit

CLIFFORD_GATES = ("CNOT", "CZ", "H", "S")
CLIFFORD_T_GATES = ("CNOT", "H", "S", "T")
MIXED_GATES = ("CNOT", "CZ", "H", "S", "T", "Z", "X", "CCX")

Seed = Union[int, random.Random, None]


def _rng(seed: Seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _arity(name: str) -> int:
    return ARITY[ALIASES[name][0]] if name in ALIASES else ARITY[name]


def random_circuit(qubits: int, gates: int, seed: Seed = None,
                   gate_set: Sequence[str] = MIXED_GATES,
                   weights: Optional[Sequence[float]] = None) -> Circuit:
    """``gates`` gates drawn from ``gate_set`` on random distinct qubits.
    Gates that need more qubits than available are left out of the draw."""
    rng = _rng(seed)
    names = [g for g in gate_set if _arity(g) <= qubits]
    if weights is not None:
        weights = [w for g, w in zip(gate_set, weights) if _arity(g) <= qubits]
    if not names:
        raise ValueError(f"no gate in {list(gate_set)} fits on {qubits} qubit(s)")
    c = Circuit(qubits)
    for _ in range(gates):
        name = rng.choices(names, weights)[0] if weights else rng.choice(names)
        c.add_gate(name, *rng.sample(range(qubits), _arity(name)))
    return c


def random_clifford(qubits: int, gates: int, seed: Seed = None) -> Circuit:
    return random_circuit(qubits, gates, seed, CLIFFORD_GATES)


def random_clifford_t(qubits: int, gates: int, seed: Seed = None, p_t: float = 0.25) -> Circuit:
    """Clifford+T circuit where a fraction ``p_t`` of the gates are T."""
    rest = (1 - p_t) / 3
    return random_circuit(qubits, gates, seed, CLIFFORD_T_GATES, [rest, rest, rest, p_t])
