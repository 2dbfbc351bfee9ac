"""Dense linear-map semantics of diagrams and circuits.

Tensors of an ``n``-input, ``m``-output diagram have shape ``(2,) * (m + n)``
with the output axes first, each group in boundary-list order. Scalars are
not normalised: everything here is meant to be compared with
:func:`compare_tensors`, which works up to a global non-zero factor.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Set, Tuple

import numpy as np

from .circuit import Circuit, Gate
from .graph import Diagram, EdgeType, VertexType

MAX_AXES = 20
# largest intermediate factor, in axes (2**24 complex entries is 256 MiB)
MAX_WIDTH = 24
TOLERANCE = 1e-9

_H = np.array([[1, 1], [1, -1]], dtype=complex)
_ID = np.eye(2, dtype=complex)


class TensorSizeError(ValueError):
    pass


def _phase_vector(p: Fraction) -> np.ndarray:
    return np.array([1, np.exp(1j * math.pi * float(p))], dtype=complex)


def to_tensor(d: Diagram, max_axes: int = MAX_AXES) -> np.ndarray:
    """Contract a diagram into a dense tensor.

    Each spider is a summation index: a Z spider sums over the computational
    basis, an X spider over the +/- basis. An edge therefore contributes
    a Hadamard factor when the number of Hadamard boxes on it, counting one
    for each X endpoint, is odd, and a delta otherwise. Indices are summed
    out by variable elimination in min-fill order: the next index is the one
    whose removal adds the fewest new couplings between the others.
    """
    boundaries = d.inputs + d.outputs
    if len(boundaries) > max_axes:
        raise TensorSizeError(f"{len(boundaries)} boundary axes exceed the limit of {max_axes}")
    ty = {v: d.type(v) for v in d.vertices()}

    def flips(u: int, v: int, et: EdgeType) -> bool:
        return ((et == EdgeType.HADAMARD) + (ty[u] == VertexType.X) + (ty[v] == VertexType.X)) % 2 == 1

    # merge spiders joined by delta edges into one summation variable
    parent = {v: v for v in d.vertices() if ty[v] != VertexType.BOUNDARY}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in d.edges():
        if ty[u] != VertexType.BOUNDARY and ty[v] != VertexType.BOUNDARY and not flips(u, v, d.edge_type(u, v)):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv

    var_phase: Dict[int, Fraction] = {}
    var_row: Dict[int, Fraction] = {}
    for v in parent:
        r = find(v)
        var_phase[r] = var_phase.get(r, Fraction(0)) + d.phase(v)
        var_row[r] = min(var_row.get(r, d.row(v)), d.row(v))

    # pairwise Hadamard factors (with multiplicity parity) and boundary legs
    had: Dict[int, Dict[int, int]] = {r: {} for r in var_phase}
    legs: Dict[int, List[Tuple[int, bool]]] = {r: [] for r in var_phase}
    bb: List[Tuple[int, int, bool]] = []
    for u, v in d.edges():
        et = d.edge_type(u, v)
        f = flips(u, v, et)
        bu, bv = ty[u] == VertexType.BOUNDARY, ty[v] == VertexType.BOUNDARY
        if bu and bv:
            bb.append((u, v, f))
        elif bu or bv:
            b, s = (u, v) if bu else (v, u)
            legs[find(s)].append((b, f))
        elif f:
            a, c = find(u), find(v)
            if a == c:
                var_phase[a] += 1
            else:
                had[a][c] = had[a].get(c, 0) ^ 1
                had[c][a] = had[c].get(a, 0) ^ 1
    for r in had:
        had[r] = {c: k for c, k in had[r].items() if k}

    # factors are (array, scope); spider variables are ("v", r), boundary axes ("b", b)
    factors: List[Tuple[np.ndarray, Tuple[Tuple[str, int], ...]]] = []
    for r, p in var_phase.items():
        factors.append((_phase_vector(p), (("v", r),)))
    for r in had:
        for c in had[r]:
            if r < c:
                factors.append((_H, (("v", r), ("v", c))))
    for r in legs:
        for b, f in legs[r]:
            factors.append((_H if f else _ID, (("v", r), ("b", b))))
    for u, v, f in bb:
        factors.append((_H if f else _ID, (("b", u), ("b", v))))

    # variable elimination in min-fill order over the interaction graph
    scopes: Dict[Tuple[str, int], Set[int]] = {}
    nbrs: Dict[Tuple[str, int], Set[Tuple[str, int]]] = {}
    for k, (_, sc) in enumerate(factors):
        for x in sc:
            scopes.setdefault(x, set()).add(k)
            nbrs.setdefault(x, set()).update(y for y in sc if y != x)
    alive = dict(enumerate(factors))
    todo = {("v", r) for r in var_phase}

    def fill(x: Tuple[str, int]) -> int:
        ns = list(nbrs[x])
        return sum(1 for i, a in enumerate(ns) for b in ns[i + 1:] if b not in nbrs[a])

    while todo:
        x = min(todo, key=lambda y: (fill(y), len(nbrs[y]), var_row[y[1]], y[1]))
        todo.discard(x)
        out = sorted(nbrs.pop(x))
        if len(out) > MAX_WIDTH:
            raise TensorSizeError("diagram too wide to contract densely")
        for a in out:
            nbrs[a].discard(x)
            nbrs[a].update(b for b in out if b != a)
        ks = sorted(scopes.pop(x))
        picked = [alive.pop(k) for k in ks]
        arr = _contract(picked, out)
        k_new = len(factors)
        factors.append((arr, tuple(out)))
        alive[k_new] = factors[k_new]
        for y in out:
            scopes[y] -= set(ks)
            scopes[y].add(k_new)

    order = [("b", b) for b in d.outputs + d.inputs]
    return _contract(list(alive.values()), order)


def _contract(picked, out) -> np.ndarray:
    labels: Dict[Tuple[str, int], int] = {}
    args = []
    for arr, sc in picked:
        args.append(arr)
        args.append([labels.setdefault(y, len(labels)) for y in sc])
    for y in out:
        labels.setdefault(y, len(labels))
    if len(labels) > 52:
        raise TensorSizeError("too many indices in one contraction step")
    if not args:
        return np.ones((2,) * len(out), dtype=complex)
    return np.einsum(*args, [labels[y] for y in out])


def compare_tensors(t1: np.ndarray, t2: np.ndarray, tol: float = TOLERANCE) -> bool:
    """True iff ``t1 = z * t2`` for some non-zero complex ``z``, within ``tol``
    relative to the largest entry of ``t1``."""
    t1 = np.asarray(t1)
    t2 = np.asarray(t2)
    if t1.shape != t2.shape:
        return False
    m1 = np.abs(t1).max(initial=0.0)
    m2 = np.abs(t2).max(initial=0.0)
    if m1 == 0 or m2 == 0:
        return m1 == m2
    # scale both to unit max first so the ratio cannot overflow
    a, b = t1 / m1, t2 / m2
    idx = np.unravel_index(np.argmax(np.abs(b)), b.shape)
    z = a[idx] / b[idx]
    if z == 0:
        return False
    return bool(np.abs(a - z * b).max() <= tol)


# -- circuits, simulated gate by gate --------------------------------------------


def _gate_matrix(g: Gate) -> np.ndarray:
    """Matrix of ``g`` on its own qubits, controls first (big-endian)."""
    if g.name == "ZPhase":
        return np.diag(_phase_vector(g.phase))
    if g.name == "XPhase":
        return _H @ np.diag(_phase_vector(g.phase)) @ _H / 2
    if g.name == "H":
        return _H / math.sqrt(2)
    m = np.eye(2 ** len(g.qubits), dtype=complex)
    if g.name in ("CNOT", "CCX"):
        m[-2:, -2:] = [[0, 1], [1, 0]]
    elif g.name in ("CZ", "CCZ"):
        m[-1, -1] = -1
    elif g.name == "SWAP":
        m = m[[0, 2, 1, 3]]
    else:
        raise ValueError(f"no matrix for gate {g.name}")
    return m


def circuit_matrix(c: Circuit) -> np.ndarray:
    """The unitary of ``c`` as a ``2**n x 2**n`` matrix; qubit 0 is the most
    significant bit. Independent of the diagram machinery."""
    n = c.qubits
    u = np.eye(2 ** n, dtype=complex).reshape((2,) * (2 * n))
    for g in c.gates:
        k = len(g.qubits)
        gm = _gate_matrix(g).reshape((2,) * (2 * k))
        u = np.tensordot(gm, u, axes=(list(range(k, 2 * k)), list(g.qubits)))
        # tensordot put the gate's output axes first; move them back into place
        u = np.moveaxis(u, list(range(k)), list(g.qubits))
    return u.reshape(2 ** n, 2 ** n)


def circuit_tensor(c: Circuit) -> np.ndarray:
    """``circuit_matrix`` reshaped with the axis convention of :func:`to_tensor`."""
    return circuit_matrix(c).reshape((2,) * (2 * c.qubits))


def tensor_to_matrix(t: np.ndarray, outputs: int, inputs: int) -> np.ndarray:
    return t.reshape(2 ** outputs, 2 ** inputs)


# -- rewrite-based equality ----------------------------------------------------------


class Equality(Enum):
    EQUAL = "equal"
    INCONCLUSIVE = "inconclusive"

    def __bool__(self) -> bool:
        return self is Equality.EQUAL


def is_identity(d: Diagram) -> bool:
    """Every input wired straight to the matching output, nothing else."""
    if len(d.inputs) != len(d.outputs) or d.num_vertices() != 2 * len(d.inputs):
        return False
    for i, o in zip(d.inputs, d.outputs):
        if d.edge_type(i, o) != EdgeType.SIMPLE:
            return False
    return True


def verify_equality(c1: Circuit, c2: Circuit) -> Equality:
    """Reduce ``adjoint(c1) ; c2`` with ``full_reduce``; EQUAL when it becomes
    the identity diagram, INCONCLUSIVE otherwise. Never claims inequality."""
    from .simplify import full_reduce, id_simp

    if c1.qubits != c2.qubits:
        raise ValueError(f"qubit mismatch: {c1.qubits} vs {c2.qubits}")
    c = c1.adjoint()
    c.add_circuit(c2)
    d = c.to_basic_gates().to_graph()
    full_reduce(d)
    id_simp(d)
    return Equality.EQUAL if is_identity(d) else Equality.INCONCLUSIVE
