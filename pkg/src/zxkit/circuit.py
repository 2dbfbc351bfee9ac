"""Gate-list circuits and their translation into ZX-diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .graph import Diagram, EdgeType, FractionLike, VertexType, phase

PHASE_GATES = ("ZPhase", "XPhase")
BASIC_GATES = frozenset(["ZPhase", "XPhase", "H", "CNOT", "CZ"])
ARITY = {"ZPhase": 1, "XPhase": 1, "H": 1, "CNOT": 2, "CZ": 2, "SWAP": 2, "CCX": 3, "CCZ": 3}

# names accepted by Gate.make, mapped to (canonical name, fixed phase)
ALIASES: Dict[str, Tuple[str, Optional[Fraction]]] = {
    "S": ("ZPhase", Fraction(1, 2)),
    "Sdg": ("ZPhase", Fraction(3, 2)),
    "T": ("ZPhase", Fraction(1, 4)),
    "Tdg": ("ZPhase", Fraction(7, 4)),
    "Z": ("ZPhase", Fraction(1)),
    "X": ("XPhase", Fraction(1)),
    "NOT": ("XPhase", Fraction(1)),
    "Toffoli": ("CCX", None),
    "TOF": ("CCX", None),
    "HAD": ("H", None),
}

_ZLABELS = {Fraction(1, 4): "T", Fraction(7, 4): "Tdg", Fraction(1, 2): "S",
            Fraction(3, 2): "Sdg", Fraction(1): "Z"}


class CircuitError(ValueError):
    pass


@dataclass(frozen=True)
class Gate:
    """An immutable gate. ``qubits`` lists controls first and the target last.

    S, T, Z and their adjoints are stored as ``ZPhase`` gates, X as ``XPhase(1)``.
    """
    name: str
    qubits: Tuple[int, ...]
    phase: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if self.name not in ARITY:
            raise CircuitError(f"unknown gate {self.name!r}")
        if len(self.qubits) != ARITY[self.name]:
            raise CircuitError(f"{self.name} acts on {ARITY[self.name]} qubit(s), got {self.qubits}")
        if len(set(self.qubits)) != len(self.qubits):
            raise CircuitError(f"{self.name} on repeated qubits {self.qubits}")
        object.__setattr__(self, "phase", phase(self.phase) if self.name in PHASE_GATES else Fraction(0))

    @classmethod
    def make(cls, name: str, *qubits: int, phase: FractionLike = 0) -> "Gate":
        if name in ALIASES:
            name, fixed = ALIASES[name]
            if fixed is not None:
                phase = fixed
        return cls(name, tuple(qubits), Fraction(phase))

    @property
    def target(self) -> int:
        return self.qubits[-1]

    @property
    def controls(self) -> Tuple[int, ...]:
        return self.qubits[:-1]

    @property
    def label(self) -> str:
        if self.name == "ZPhase":
            return _ZLABELS.get(self.phase, "ZPhase")
        if self.name == "XPhase" and self.phase == 1:
            return "X"
        return self.name

    def is_t_like(self) -> bool:
        return self.name in PHASE_GATES and self.phase.denominator == 4

    def adjoint(self) -> "Gate":
        if self.name in PHASE_GATES:
            return Gate(self.name, self.qubits, -self.phase)
        return self

    def reindex(self, mapping: Sequence[int]) -> "Gate":
        return Gate(self.name, tuple(mapping[q] for q in self.qubits), self.phase)

    def __str__(self) -> str:
        args = ", ".join(str(q) for q in self.qubits)
        if self.name in PHASE_GATES and self.label in ("ZPhase", "XPhase"):
            return f"{self.name}({args}, phase={self.phase}*pi)"
        return f"{self.label}({args})"


def ZPhase(q: int, p: FractionLike) -> Gate:
    return Gate("ZPhase", (q,), Fraction(p))


def XPhase(q: int, p: FractionLike) -> Gate:
    return Gate("XPhase", (q,), Fraction(p))


def H(q: int) -> Gate:
    return Gate("H", (q,))


def S(q: int) -> Gate:
    return ZPhase(q, Fraction(1, 2))


def Sdg(q: int) -> Gate:
    return ZPhase(q, Fraction(3, 2))


def T(q: int) -> Gate:
    return ZPhase(q, Fraction(1, 4))


def Tdg(q: int) -> Gate:
    return ZPhase(q, Fraction(7, 4))


def Z(q: int) -> Gate:
    return ZPhase(q, 1)


def X(q: int) -> Gate:
    return XPhase(q, 1)


NOT = X


def CNOT(control: int, target: int) -> Gate:
    return Gate("CNOT", (control, target))


def CZ(a: int, b: int) -> Gate:
    return Gate("CZ", (a, b))


def CCX(c1: int, c2: int, target: int) -> Gate:
    return Gate("CCX", (c1, c2, target))


Toffoli = CCX


def CCZ(a: int, b: int, c: int) -> Gate:
    return Gate("CCZ", (a, b, c))


def SWAP(a: int, b: int) -> Gate:
    return Gate("SWAP", (a, b))


def toffoli_gates(c1: int, c2: int, t: int) -> List[Gate]:
    """The standard 7-T Clifford+T decomposition of a Toffoli gate (15 gates)."""
    return [
        H(t),
        CNOT(c2, t), Tdg(t), CNOT(c1, t), T(t),
        CNOT(c2, t), Tdg(t), CNOT(c1, t), T(c2), T(t),
        H(t),
        CNOT(c1, c2), T(c1), Tdg(c2), CNOT(c1, c2),
    ]


def decompose(g: Gate) -> List[Gate]:
    """Rewrite a single gate over {ZPhase, XPhase, H, CNOT, CZ}."""
    if g.name in BASIC_GATES:
        return [g]
    if g.name == "SWAP":
        a, b = g.qubits
        return [CNOT(a, b), CNOT(b, a), CNOT(a, b)]
    if g.name == "CCX":
        return toffoli_gates(*g.qubits)
    if g.name == "CCZ":
        # Toffoli conjugated by H on the target: the outer Hadamards cancel
        return toffoli_gates(*g.qubits)[1:-5] + toffoli_gates(*g.qubits)[-4:]
    raise CircuitError(f"cannot decompose gate {g.name}")


@dataclass
class CircuitStats:
    qubits: int
    gates: int
    tcount: int
    two_qubit: int
    hadamard: int

    def __str__(self) -> str:
        return (f"qubits: {self.qubits}, gates: {self.gates}, T-count: {self.tcount}, "
                f"2-qubit: {self.two_qubit}, H: {self.hadamard}")


class Circuit:
    """An ordered list of gates acting on ``qubits`` qubits."""

    def __init__(self, qubits: int, gates: Optional[Iterable[Gate]] = None, name: str = "") -> None:
        if qubits < 0:
            raise CircuitError("qubit count must be non-negative")
        self.qubits = qubits
        self.name = name
        self.gates: List[Gate] = []
        # original wire names (from file formats), index -> name
        self.qubit_names: Optional[List[str]] = None
        for g in gates or ():
            self.add_gate(g)

    def add_gate(self, gate: Union[Gate, str], *qubits: int, phase: FractionLike = 0) -> None:
        if isinstance(gate, str):
            gate = Gate.make(gate, *qubits, phase=phase)
        if any(q < 0 or q >= self.qubits for q in gate.qubits):
            raise CircuitError(f"gate {gate} does not fit on {self.qubits} qubits")
        self.gates.append(gate)

    def add_gates(self, gates: Iterable[Gate]) -> None:
        for g in gates:
            self.add_gate(g)

    def add_circuit(self, other: "Circuit", mask: Optional[Sequence[int]] = None) -> None:
        """Append the gates of ``other``. With ``mask``, qubit ``i`` of ``other``
        is placed on qubit ``mask[i]`` of this circuit."""
        if mask is None:
            if other.qubits != self.qubits:
                raise CircuitError(f"qubit mismatch: {self.qubits} vs {other.qubits}")
            self.add_gates(other.gates)
        else:
            if len(mask) != other.qubits:
                raise CircuitError("mask length must equal the qubit count of the added circuit")
            self.add_gates(g.reindex(mask) for g in other.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        c = self.copy()
        c.add_circuit(other)
        return c

    def copy(self) -> "Circuit":
        c = Circuit(self.qubits, name=self.name)
        c.gates = list(self.gates)
        c.qubit_names = list(self.qubit_names) if self.qubit_names else None
        return c

    def adjoint(self) -> "Circuit":
        c = Circuit(self.qubits, name=self.name + "_adjoint" if self.name else "")
        c.gates = [g.adjoint() for g in reversed(self.gates)]
        return c

    def to_basic_gates(self) -> "Circuit":
        c = Circuit(self.qubits, name=self.name)
        c.gates = [b for g in self.gates for b in decompose(g)]
        c.qubit_names = self.qubit_names
        return c

    def to_graph(self) -> Diagram:
        return to_graph(self)

    def tcount(self) -> int:
        return sum(1 for g in self.gates for b in decompose(g) if b.is_t_like())

    def stats(self) -> CircuitStats:
        return CircuitStats(
            qubits=self.qubits,
            gates=len(self.gates),
            tcount=self.tcount(),
            two_qubit=sum(1 for g in self.gates if len(g.qubits) == 2),
            hadamard=sum(1 for g in self.gates if g.name == "H"),
        )

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.qubits == other.qubits and self.gates == other.gates

    def __repr__(self) -> str:
        return f"Circuit({self.qubits} qubits, {len(self.gates)} gates)"

    def __str__(self) -> str:
        return "\n".join([repr(self)] + [f"  {g}" for g in self.gates])


def circuit_to_graph(c: Circuit) -> Tuple[Diagram, Dict[int, int]]:
    """Build the ZX-diagram of a basic-gate circuit.

    Returns the diagram and a map from gate index to the spider created for
    that gate (phase gates only), used by phase teleportation.
    """
    d = Diagram()
    last: List[int] = []
    pending: List[bool] = []  # a Hadamard is waiting on this wire
    rows: List[int] = [1] * c.qubits
    for q in range(c.qubits):
        last.append(d.add_input(0, q))
        pending.append(False)
    gate_vertex: Dict[int, int] = {}

    def attach(q: int, ty: VertexType, p: Fraction, r: int) -> int:
        v = d.add_vertex(ty, p, r, q)
        d.add_edge(last[q], v, EdgeType.HADAMARD if pending[q] else EdgeType.SIMPLE)
        last[q] = v
        pending[q] = False
        return v

    for i, g in enumerate(c.gates):
        if g.name not in BASIC_GATES:
            raise CircuitError(f"gate {g.name} is not basic; call to_basic_gates() first")
        if g.name == "H":
            pending[g.target] = not pending[g.target]
        elif g.name in PHASE_GATES:
            q = g.target
            ty = VertexType.Z if g.name == "ZPhase" else VertexType.X
            gate_vertex[i] = attach(q, ty, g.phase, rows[q])
            rows[q] += 1
        else:
            a, b = g.qubits
            r = max(rows[a], rows[b])
            u = attach(a, VertexType.Z, Fraction(0), r)
            if g.name == "CNOT":
                v = attach(b, VertexType.X, Fraction(0), r)
                d.add_edge(u, v, EdgeType.SIMPLE)
            else:
                v = attach(b, VertexType.Z, Fraction(0), r)
                d.add_edge(u, v, EdgeType.HADAMARD)
            rows[a] = rows[b] = r + 1
    end = max(rows, default=1)
    for q in range(c.qubits):
        o = d.add_output(end, q)
        d.add_edge(last[q], o, EdgeType.HADAMARD if pending[q] else EdgeType.SIMPLE)
    return d, gate_vertex


def to_graph(c: Circuit) -> Diagram:
    return circuit_to_graph(c)[0]
