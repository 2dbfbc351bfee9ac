"""Shared oracles and generators for the test suite.

The oracles here are deliberately naive and share no code with
``zxkit.tensor``: a diagram is evaluated as one big einsum with a single
index per spider, and gates are written down as explicit matrices.
"""

from __future__ import annotations

import math
import random
import string
from fractions import Fraction

import numpy as np
import pytest

from zxkit.graph import Diagram, EdgeType, VertexType

SQ2 = math.sqrt(2)
HAD = np.array([[1, 1], [1, -1]], dtype=complex) / SQ2
ID2 = np.eye(2, dtype=complex)


def phase_diag(p) -> np.ndarray:
    return np.diag([1, np.exp(1j * math.pi * float(p))])


def kron(*ms) -> np.ndarray:
    out = np.eye(1, dtype=complex)
    for m in ms:
        out = np.kron(out, m)
    return out


def diagram_oracle(d: Diagram) -> np.ndarray:
    """Evaluate ``d`` with one einsum over every vertex index.

    Z spiders copy their index to every leg; an X spider is a Z spider with
    a Hadamard on each leg, so an edge carries the product of its own box
    and one box per X endpoint. Axes are outputs first, then inputs.
    """
    labels = {}
    for v in d.vertices():
        labels[v] = string.ascii_letters[len(labels)]
    ops, subs = [], []
    for v in d.vertices():
        if d.type(v) != VertexType.BOUNDARY:
            ops.append(np.array([1, np.exp(1j * math.pi * float(d.phase(v)))]))
            subs.append(labels[v])
    for u, v in d.edges():
        boxes = int(d.edge_type(u, v) == EdgeType.HADAMARD)
        boxes += int(d.type(u) == VertexType.X) + int(d.type(v) == VertexType.X)
        ops.append(np.linalg.matrix_power(HAD, boxes))
        subs.append(labels[u] + labels[v])
    out = "".join(labels[b] for b in d.outputs + d.inputs)
    # boundary vertices that appear nowhere else (an unattached wire end)
    for b in d.outputs + d.inputs:
        if d.degree(b) == 0:
            ops.append(np.ones(2))
            subs.append(labels[b])
    if not ops:
        return np.ones(())
    return np.einsum(",".join(subs) + "->" + out, *ops, optimize="greedy")


def random_phase(rng: random.Random, clifford_bias: float = 0.6) -> Fraction:
    if rng.random() < clifford_bias:
        return Fraction(rng.randrange(4), 2)
    return Fraction(rng.randrange(8), 4)


def random_diagram(rng: random.Random, n_in: int, n_out: int, n_spiders: int, p_edge: float = 0.3,
                   graph_like: bool = False) -> Diagram:
    """A random diagram. With ``graph_like`` every spider is Z and every
    spider-spider edge is a Hadamard edge; boundaries always get one wire."""
    d = Diagram()
    spiders = []
    for i in range(n_spiders):
        ty = VertexType.Z if graph_like or rng.random() < 0.6 else VertexType.X
        spiders.append(d.add_vertex(ty, random_phase(rng), row=i + 1, qubit=i % max(n_in, n_out, 1)))
    for a in range(n_spiders):
        for b in range(a + 1, n_spiders):
            if rng.random() < p_edge:
                if graph_like:
                    et = EdgeType.HADAMARD
                else:
                    et = EdgeType.HADAMARD if rng.random() < 0.5 else EdgeType.SIMPLE
                d.add_edge(spiders[a], spiders[b], et)
    for q in range(n_in):
        b = d.add_input(row=0, qubit=q)
        d.add_edge(b, rng.choice(spiders), EdgeType.SIMPLE if graph_like or rng.random() < 0.7 else EdgeType.HADAMARD)
    for q in range(n_out):
        b = d.add_output(row=n_spiders + 2, qubit=q)
        d.add_edge(b, rng.choice(spiders), EdgeType.SIMPLE if graph_like or rng.random() < 0.7 else EdgeType.HADAMARD)
    return d


# filled by test_acceptance.report, printed once at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1234)


# -- gate oracle: explicit full-register matrices, qubit 0 most significant --------

PX = np.array([[0, 1], [1, 0]], dtype=complex)
PY = np.array([[0, -1j], [1j, 0]], dtype=complex)
PZ = np.diag([1, -1]).astype(complex)
P0 = np.diag([1, 0]).astype(complex)
P1 = np.diag([0, 1]).astype(complex)


def on(n: int, ops: dict) -> np.ndarray:
    """Kronecker product with ``ops[q]`` on qubit ``q`` and identity elsewhere."""
    return kron(*[ops.get(q, ID2) for q in range(n)])


def gate_oracle(g, n: int) -> np.ndarray:
    q = g.qubits
    if g.name == "ZPhase":
        return on(n, {q[0]: phase_diag(g.phase)})
    if g.name == "XPhase":
        return on(n, {q[0]: HAD @ phase_diag(g.phase) @ HAD})
    if g.name == "H":
        return on(n, {q[0]: HAD})
    if g.name == "CNOT":
        return on(n, {q[0]: P0}) + on(n, {q[0]: P1, q[1]: PX})
    if g.name == "CZ":
        return np.eye(2 ** n) - 2 * on(n, {q[0]: P1, q[1]: P1})
    if g.name == "CCX":
        both = on(n, {q[0]: P1, q[1]: P1})
        return np.eye(2 ** n) - both + on(n, {q[0]: P1, q[1]: P1, q[2]: PX})
    if g.name == "CCZ":
        return np.eye(2 ** n) - 2 * on(n, {q[0]: P1, q[1]: P1, q[2]: P1})
    if g.name == "SWAP":
        a, b = q
        return (np.eye(2 ** n) + on(n, {a: PX, b: PX}) + on(n, {a: PY, b: PY}) + on(n, {a: PZ, b: PZ})) / 2
    raise ValueError(g.name)


def circuit_oracle(c) -> np.ndarray:
    m = np.eye(2 ** c.qubits, dtype=complex)
    for g in c.gates:
        m = gate_oracle(g, c.qubits) @ m
    return m
