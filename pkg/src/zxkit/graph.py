"""ZX-diagrams as simple undirected graphs with typed vertices and edges.

Connectivity is a dictionary of dictionaries: ``adj[u][v]`` is the
:class:`EdgeType` of the edge between ``u`` and ``v``. Phases are exact
:class:`fractions.Fraction` multiples of pi, always reduced into ``[0, 2)``.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

FractionLike = Union[Fraction, int]


class VertexType(IntEnum):
    BOUNDARY = 0
    Z = 1
    X = 2


class EdgeType(IntEnum):
    SIMPLE = 1
    HADAMARD = 2


def toggle_edge(et: EdgeType) -> EdgeType:
    return EdgeType.HADAMARD if et == EdgeType.SIMPLE else EdgeType.SIMPLE


def phase(p: FractionLike) -> Fraction:
    """Normalise ``p`` (in units of pi) into the interval [0, 2)."""
    return Fraction(p) % 2


def is_pauli(p: Fraction) -> bool:
    return p == 0 or p == 1


def is_clifford(p: Fraction) -> bool:
    return p.denominator <= 2


def is_proper_clifford(p: Fraction) -> bool:
    return p.denominator == 2


class EdgeTableEntry(NamedTuple):
    u: int
    v: int
    simple: int = 0
    hadamard: int = 0


EdgeTable = Dict[Tuple[int, int], List[int]]


def edge_key(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u <= v else (v, u)


class DiagramError(ValueError):
    pass


class Diagram:
    """A ZX-diagram.

    Vertex ids come from a monotone counter and are never reused, so a list of
    matches stays meaningful while a batch of rewrites is being applied.
    """

    def __init__(self) -> None:
        self._adj: Dict[int, Dict[int, EdgeType]] = {}
        self._type: Dict[int, VertexType] = {}
        self._phase: Dict[int, Fraction] = {}
        self._row: Dict[int, Fraction] = {}
        self._qubit: Dict[int, Fraction] = {}
        self.inputs: List[int] = []
        self.outputs: List[int] = []
        self._next = 0
        # optional hook used by phase teleportation; see simplify.PhaseTracker
        self.tracker = None

    # -- construction -------------------------------------------------------

    def add_vertex(self, ty: VertexType = VertexType.Z, phase_: FractionLike = 0,
                   row: FractionLike = 0, qubit: FractionLike = 0) -> int:
        p = phase(phase_)
        if ty == VertexType.BOUNDARY and p != 0:
            raise DiagramError("boundary vertices cannot carry a phase")
        v = self._next
        self._next += 1
        self._adj[v] = {}
        self._type[v] = VertexType(ty)
        self._phase[v] = p
        self._row[v] = Fraction(row)
        self._qubit[v] = Fraction(qubit)
        return v

    def add_input(self, row: FractionLike = 0, qubit: FractionLike = 0) -> int:
        v = self.add_vertex(VertexType.BOUNDARY, 0, row, qubit)
        self.inputs.append(v)
        return v

    def add_output(self, row: FractionLike = 0, qubit: FractionLike = 0) -> int:
        v = self.add_vertex(VertexType.BOUNDARY, 0, row, qubit)
        self.outputs.append(v)
        return v

    def _check(self, v: int) -> None:
        if v not in self._adj:
            raise DiagramError(f"unknown vertex {v}")

    def add_edge(self, u: int, v: int, et: EdgeType = EdgeType.SIMPLE) -> None:
        """Add an edge, replacing any edge already present between ``u`` and ``v``."""
        self._check(u)
        self._check(v)
        if u == v:
            raise DiagramError("self-loops can only be added through add_edge_table")
        et = EdgeType(et)
        self._adj[u][v] = et
        self._adj[v][u] = et

    def remove_edge(self, u: int, v: int) -> None:
        del self._adj[u][v]
        del self._adj[v][u]

    def set_edge_type(self, u: int, v: int, et: EdgeType) -> None:
        if v not in self._adj[u]:
            raise DiagramError(f"no edge between {u} and {v}")
        self._adj[u][v] = et
        self._adj[v][u] = et

    def add_edge_table(self, etab: Union[Mapping[Tuple[int, int], Sequence[int]], Iterable[EdgeTableEntry]]) -> None:
        """Add a multiset of edges, resolving parallel edges and self-loops.

        ``etab`` maps an endpoint pair to ``[simple_count, hadamard_count]``
        (a list of :class:`EdgeTableEntry` is accepted as well). Any edge
        already present between the endpoints joins the multiset. The
        resolved graph has the same linear map up to a non-zero scalar.
        """
        if not isinstance(etab, Mapping):
            merged: EdgeTable = {}
            for e in etab:
                k = edge_key(e.u, e.v)
                cnt = merged.setdefault(k, [0, 0])
                cnt[0] += e.simple
                cnt[1] += e.hadamard
            etab = merged
        for (u, v), (n1, n2) in etab.items():
            if u not in self._adj or v not in self._adj:
                raise DiagramError(f"edge table refers to a removed vertex: {(u, v)}")
            if n1 + n2 == 0:
                continue
            if u == v:
                self._resolve_loops(u, n1, n2)
                continue
            old = self._adj[u].get(v)
            if old == EdgeType.SIMPLE:
                n1 += 1
            elif old == EdgeType.HADAMARD:
                n2 += 1
            tu, tv = self._type[u], self._type[v]
            new: Optional[EdgeType] = None
            if tu == VertexType.BOUNDARY or tv == VertexType.BOUNDARY:
                if n1 + n2 > 1:
                    raise DiagramError(f"boundary vertex would get parallel edges: {(u, v)}")
                new = EdgeType.SIMPLE if n1 else EdgeType.HADAMARD
            elif tu == tv:
                # simple edges fuse the spiders; every Hadamard edge then becomes a pi self-loop
                if n1 > 0:
                    new = EdgeType.SIMPLE
                    if n2 % 2:
                        self.add_to_phase(u, 1)
                elif n2 % 2:
                    new = EdgeType.HADAMARD
            else:
                # colour-changed version of the same-colour case
                if n2 > 0:
                    new = EdgeType.HADAMARD
                    if n1 % 2:
                        self.add_to_phase(u, 1)
                elif n1 % 2:
                    new = EdgeType.SIMPLE
            if new is None:
                if old is not None:
                    self.remove_edge(u, v)
            else:
                self._adj[u][v] = new
                self._adj[v][u] = new

    def _resolve_loops(self, v: int, n_simple: int, n_had: int) -> None:
        if self._type[v] == VertexType.BOUNDARY:
            raise DiagramError("self-loop on a boundary vertex")
        if n_had % 2:
            self.add_to_phase(v, 1)

    def remove_vertex(self, v: int) -> None:
        self.remove_vertices([v])

    def remove_vertices(self, vs: Iterable[int]) -> None:
        """Remove vertices and their incident edges. Unknown ids are ignored."""
        vs = set(vs)
        for v in vs:
            nb = self._adj.pop(v, None)
            if nb is None:
                continue
            for w in nb:
                if w in self._adj:
                    del self._adj[w][v]
            del self._type[v], self._phase[v], self._row[v], self._qubit[v]
        if vs:
            self.inputs = [v for v in self.inputs if v not in vs]
            self.outputs = [v for v in self.outputs if v not in vs]

    def remove_isolated_vertices(self) -> None:
        """Drop spiders with no edges; these only contribute a scalar."""
        self.remove_vertices([v for v, nb in self._adj.items()
                              if not nb and self._type[v] != VertexType.BOUNDARY])

    # -- queries ------------------------------------------------------------

    def vertices(self) -> Iterator[int]:
        return iter(self._adj)

    def num_vertices(self) -> int:
        return len(self._adj)

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, nb in self._adj.items():
            for v in sorted(nb):
                if u < v:
                    yield (u, v)

    def num_edges(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def neighbors(self, v: int) -> Iterable[int]:
        return self._adj[v].keys()

    def incident(self, v: int) -> Mapping[int, EdgeType]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def connected(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_type(self, u: int, v: int) -> Optional[EdgeType]:
        return self._adj[u].get(v)

    def type(self, v: int) -> VertexType:
        return self._type[v]

    def set_type(self, v: int, ty: VertexType) -> None:
        self._type[v] = VertexType(ty)

    def phase(self, v: int) -> Fraction:
        return self._phase[v]

    def set_phase(self, v: int, p: FractionLike) -> None:
        self._phase[v] = phase(p)

    def add_to_phase(self, v: int, p: FractionLike) -> None:
        self._phase[v] = phase(self._phase[v] + p)

    def row(self, v: int) -> Fraction:
        return self._row[v]

    def set_row(self, v: int, r: FractionLike) -> None:
        self._row[v] = Fraction(r)

    def qubit(self, v: int) -> Fraction:
        return self._qubit[v]

    def set_qubit(self, v: int, q: FractionLike) -> None:
        self._qubit[v] = Fraction(q)

    def is_boundary(self, v: int) -> bool:
        return self._type[v] == VertexType.BOUNDARY

    def boundary_neighbors(self, v: int) -> List[int]:
        ty = self._type
        return [w for w in self._adj[v] if ty[w] == VertexType.BOUNDARY]

    def is_interior(self, v: int) -> bool:
        """A spider none of whose neighbours is a boundary."""
        ty = self._type
        return ty[v] != VertexType.BOUNDARY and all(ty[w] != VertexType.BOUNDARY for w in self._adj[v])

    def qubit_count(self) -> int:
        return max(len(self.inputs), len(self.outputs))

    def depth(self) -> Fraction:
        return max(self._row.values(), default=Fraction(0))

    def __repr__(self) -> str:
        return (f"Diagram({self.num_vertices()} vertices, {self.num_edges()} edges, "
                f"{len(self.inputs)} inputs, {len(self.outputs)} outputs)")

    # -- whole-diagram operations ---------------------------------------------

    def copy(self) -> "Diagram":
        """Deep copy that keeps vertex ids (and drops any phase tracker)."""
        d = Diagram.__new__(Diagram)
        d._adj = {v: dict(nb) for v, nb in self._adj.items()}
        d._type = dict(self._type)
        d._phase = dict(self._phase)
        d._row = dict(self._row)
        d._qubit = dict(self._qubit)
        d.inputs = list(self.inputs)
        d.outputs = list(self.outputs)
        d._next = self._next
        d.tracker = None
        return d

    def __deepcopy__(self, memo) -> "Diagram":
        return self.copy()

    def structure(self) -> Tuple:
        """Canonical structural summary, invariant under vertex relabelling
        that preserves vertex order. Used for equality checks in tests."""
        order = {v: i for i, v in enumerate(self._adj)}
        verts = tuple((int(self._type[v]), self._phase[v]) for v in self._adj)
        edges = tuple(sorted((min(order[u], order[v]), max(order[u], order[v]), int(et))
                             for u, v in self.edges() for et in [self._adj[u][v]]))
        return (verts, edges, tuple(order[v] for v in self.inputs), tuple(order[v] for v in self.outputs))

    def _insert(self, other: "Diagram", qubit_shift: FractionLike = 0,
                row_shift: FractionLike = 0) -> Dict[int, int]:
        rename: Dict[int, int] = {}
        for v in other._adj:
            rename[v] = self.add_vertex(other._type[v], other._phase[v],
                                        other._row[v] + row_shift, other._qubit[v] + qubit_shift)
        for u, v in other.edges():
            self.add_edge(rename[u], rename[v], other._adj[u][v])
        return rename

    def tensor(self, other: "Diagram") -> "Diagram":
        """Stack ``other`` below this diagram."""
        d = self.copy()
        shift = max((q + 1 for q in self._qubit.values()), default=Fraction(0))
        rename = d._insert(other, qubit_shift=shift)
        d.inputs += [rename[v] for v in other.inputs]
        d.outputs += [rename[v] for v in other.outputs]
        return d

    def compose(self, other: "Diagram") -> "Diagram":
        """Plug the outputs of this diagram into the inputs of ``other``."""
        if len(self.outputs) != len(other.inputs):
            raise DiagramError(f"cannot compose: {len(self.outputs)} outputs "
                               f"vs {len(other.inputs)} inputs")
        d = self.copy()
        shift = d.depth() + 1 - min((other._row[v] for v in other.inputs), default=Fraction(0))
        rename = d._insert(other, row_shift=shift)
        for o, i in zip(self.outputs, other.inputs):
            i = rename[i]
            if d.degree(o) != 1 or d.degree(i) != 1:
                raise DiagramError("boundary wires must have exactly one edge to be composed")
            (a, et1), = d._adj[o].items()
            (b, et2), = d._adj[i].items()
            had = (et1 == EdgeType.HADAMARD) ^ (et2 == EdgeType.HADAMARD)
            if a == i:
                raise DiagramError("composition would create a closed loop")
            d.remove_vertices([o, i])
            # two wires may join the same pair of spiders, so go through the edge table
            d.add_edge_table({edge_key(a, b): [0, 1] if had else [1, 0]})
        d.inputs = list(self.inputs)
        d.outputs = [rename[v] for v in other.outputs]
        return d

    def __add__(self, other: "Diagram") -> "Diagram":
        return self.compose(other)

    def __matmul__(self, other: "Diagram") -> "Diagram":
        return self.tensor(other)

    def adjoint(self) -> "Diagram":
        """Mirror the diagram: swap inputs and outputs and negate every phase."""
        d = self.copy()
        d.inputs, d.outputs = list(self.outputs), list(self.inputs)
        top = self.depth()
        for v in d._adj:
            d._phase[v] = phase(-d._phase[v])
            d._row[v] = top - d._row[v]
        return d

    def normalise(self) -> None:
        """Re-layout the diagram: inputs in the first column, outputs in the last,
        spiders in between. Only row/qubit coordinates change."""
        boundary = set(self.inputs) | set(self.outputs)
        interior = [v for v in self._adj if v not in boundary]
        if interior:
            lo = min(self._row[v] for v in interior)
            for v in interior:
                self._row[v] = self._row[v] - lo + 1
            last = max(self._row[v] for v in interior) + 1
        else:
            last = Fraction(1)
        for q, v in enumerate(self.inputs):
            self._row[v] = Fraction(0)
            self._qubit[v] = Fraction(q)
        for q, v in enumerate(self.outputs):
            self._row[v] = last
            self._qubit[v] = Fraction(q)


def compose(first: Diagram, second: Diagram) -> Diagram:
    return first.compose(second)


def tensor_product(a: Diagram, b: Diagram) -> Diagram:
    return a.tensor(b)


def adjoint(d: Diagram) -> Diagram:
    return d.adjoint()


def identity(n: int = 1) -> Diagram:
    """``n`` bare wires."""
    d = Diagram()
    for q in range(n):
        i = d.add_input(0, q)
        o = d.add_output(1, q)
        d.add_edge(i, o)
    return d
