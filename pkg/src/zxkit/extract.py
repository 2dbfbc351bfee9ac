"""Circuit extraction from graph-like diagrams.

The diagram is consumed from the outputs towards the inputs. Spiders next
to the outputs form the frontier; their phases, Hadamard wires and mutual
edges are peeled off as gates, and GF(2) row operations on the
frontier/neighbour biadjacency matrix (each one a CNOT) expose a frontier
spider with a single neighbour, which lets the frontier move one step left.
Gates are collected right to left and reversed at the end.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .circuit import CNOT, CZ, H, Circuit, Gate, ZPhase
from .graph import Diagram, EdgeType, VertexType, is_pauli, toggle_edge
from .linalg import gf2_gauss
from .rules import apply_batch, rewrite_pivot
from .simplify import spider_simp, to_gh


class ExtractionStuck(RuntimeError):
    """No extraction step applies; ``diagram`` holds what was left."""

    def __init__(self, message: str, diagram: Diagram) -> None:
        super().__init__(message)
        self.diagram = diagram


def _output_of(d: Diagram, v: int, outs: set) -> int:
    return next(w for w in d.neighbors(v) if w in outs)


def streaming_extract(d: Diagram) -> Circuit:
    """Extract a circuit over {CNOT, CZ, H, ZPhase} with the same linear map
    as ``d`` up to a scalar. ``d`` itself is left untouched."""
    if len(d.inputs) != len(d.outputs):
        raise ValueError("extraction needs as many inputs as outputs")
    g = d.copy()
    to_gh(g)
    spider_simp(g)
    n = len(g.outputs)
    outs = set(g.outputs)
    ins = set(g.inputs)
    gates: List[Gate] = []
    qubit: Dict[int, int] = {}
    frontier: List[int] = []

    for q, o in enumerate(g.outputs):
        if g.degree(o) != 1:
            raise ExtractionStuck(f"output {q} does not have exactly one wire", g)
        v = next(iter(g.neighbors(o)))
        if v in ins:
            continue
        if v in qubit or v in outs:
            # a spider already claimed by another output (or an output-output wire)
            et = g.edge_type(o, v)
            w = g.add_vertex(VertexType.Z, 0, g.row(o) - 1, g.qubit(o))
            g.remove_edge(o, v)
            g.add_edge(v, w, toggle_edge(et) if v not in outs else et)
            g.add_edge(w, o, EdgeType.HADAMARD if v not in outs else EdgeType.SIMPLE)
            v = w
        frontier.append(v)
        qubit[v] = q

    while True:
        # local gates at the frontier
        for v in frontier:
            o = _output_of(g, v, outs)
            if g.edge_type(v, o) == EdgeType.HADAMARD:
                gates.append(H(qubit[v]))
                g.set_edge_type(v, o, EdgeType.SIMPLE)
            if g.phase(v):
                gates.append(ZPhase(qubit[v], g.phase(v)))
                g.set_phase(v, 0)
        fset = set(frontier)
        for v in sorted(frontier, key=qubit.get):
            for w in sorted(g.neighbors(v), key=lambda x: qubit.get(x, -1)):
                if w in fset and qubit[w] > qubit[v]:
                    if g.edge_type(v, w) != EdgeType.HADAMARD:
                        raise ExtractionStuck("simple edge between frontier spiders", g)
                    gates.append(CZ(qubit[v], qubit[w]))
                    g.remove_edge(v, w)

        # frontier spiders touching an input
        for v in list(frontier):
            nb = [w for w in g.neighbors(v) if w not in outs]
            bs = [w for w in nb if w in ins]
            if not bs:
                continue
            if len(nb) == 1:
                frontier.remove(v)
                continue
            b = bs[0]
            et = g.edge_type(v, b)
            w = g.add_vertex(VertexType.Z, 0, g.row(b) + 1, g.qubit(b))
            g.remove_edge(v, b)
            g.add_edge(v, w, EdgeType.HADAMARD)
            g.add_edge(w, b, toggle_edge(et))
        if not frontier:
            break

        fset = set(frontier)
        neighbours = sorted({w for v in frontier for w in g.neighbors(v) if w not in outs})
        if any(w in fset for w in neighbours):
            raise ExtractionStuck("frontier spiders still connected", g)

        # phase gadgets right behind the frontier: pivot them into it
        if _absorb_gadget(g, frontier, neighbours, qubit, outs, ins):
            continue

        fset = set(frontier)
        frontier.sort(key=qubit.get)
        col = {w: j for j, w in enumerate(neighbours)}
        m = [[0] * len(neighbours) for _ in frontier]
        for i, v in enumerate(frontier):
            for w in g.neighbors(v):
                if w in col:
                    m[i][col[w]] = 1
        if not any(sum(r) == 1 for r in m):
            ops = _single_row_add(m)
            if ops is None:
                ops, _ = gf2_gauss(m)
            for src, dst in ops:
                m[dst] = [a ^ b for a, b in zip(m[dst], m[src])]
                gates.append(CNOT(qubit[frontier[dst]], qubit[frontier[src]]))
            # the row operations rewire the frontier
            for i, v in enumerate(frontier):
                for j, w in enumerate(neighbours):
                    if m[i][j] and not g.connected(v, w):
                        g.add_edge(v, w, EdgeType.HADAMARD)
                    elif not m[i][j] and g.connected(v, w):
                        g.remove_edge(v, w)
        advanced = []
        taken = set()
        for i, v in enumerate(frontier):
            if sum(m[i]) == 1:
                w = neighbours[m[i].index(1)]
                if w in taken:
                    continue
                taken.add(w)
                advanced.append((v, w))
        if not advanced:
            raise ExtractionStuck("no frontier spider with a single neighbour", g)
        for v, w in advanced:
            q = qubit.pop(v)
            o = _output_of(g, v, outs)
            gates.append(H(q))
            g.remove_vertex(v)
            frontier.remove(v)
            if w in ins:
                g.add_edge(w, o, EdgeType.HADAMARD)
            else:
                g.add_edge(w, o, EdgeType.SIMPLE)
                frontier.append(w)
                qubit[w] = q

    return _finish(g, n, gates)


def _single_row_add(m: List[List[int]]) -> Optional[List[Tuple[int, int]]]:
    """One row addition that leaves some row with a single one, if any."""
    for dst in range(len(m)):
        for src in range(len(m)):
            if src != dst and sum(a ^ b for a, b in zip(m[dst], m[src])) == 1:
                return [(src, dst)]
    return None


def _absorb_gadget(g: Diagram, frontier: List[int], neighbours: List[int], qubit: Dict[int, int],
                   outs: set, ins: set) -> bool:
    done = False
    used = set()
    for w in neighbours:
        if w in used or w in ins or not is_pauli(g.phase(w)):
            continue
        if not any(g.degree(x) == 1 and x not in outs and x not in ins for x in g.neighbors(w)):
            continue
        if any(x in ins or x in outs or g.edge_type(w, x) != EdgeType.HADAMARD for x in g.neighbors(w)):
            continue
        for v in sorted(g.neighbors(w), key=lambda x: qubit.get(x, -1)):
            if v not in qubit or v in used or v not in frontier:
                continue
            o = _output_of(g, v, outs)
            if any(x in used for x in g.neighbors(v)) or any(x in used for x in g.neighbors(w)):
                continue
            if any(x != o and (x in ins or g.edge_type(v, x) != EdgeType.HADAMARD) for x in g.neighbors(v)):
                continue
            apply_batch(g, rewrite_pivot(g, [(w, v, None, o)]))
            frontier[frontier.index(v)] = w
            qubit[w] = qubit.pop(v)
            used.update(g.neighbors(w))
            used.update((w, v))
            done = True
            break
    return done


def _finish(g: Diagram, n: int, gates: List[Gate]) -> Circuit:
    """Remaining wires run from inputs straight to outputs: emit their
    Hadamards and the qubit permutation, then the reversed gate list."""
    outs = {o: q for q, o in enumerate(g.outputs)}
    head: List[Gate] = []
    perm: Dict[int, int] = {}
    for i, b in enumerate(g.inputs):
        if g.degree(b) != 1:
            raise ExtractionStuck(f"input {i} does not have exactly one wire", g)
        w, et = next(iter(g.incident(b).items()))
        had = et == EdgeType.HADAMARD
        if w not in outs:
            if g.degree(w) != 2 or g.phase(w) != 0:
                raise ExtractionStuck("leftover spider on an input wire", g)
            o, et2 = next((x, e) for x, e in g.incident(w).items() if x != b)
            if o not in outs:
                raise ExtractionStuck("leftover spiders in the diagram", g)
            had ^= et2 == EdgeType.HADAMARD
            w = o
        if had:
            head.append(H(i))
        perm[i] = outs[w]
    # value on wire i must end up on wire perm[i]
    cur = list(range(n))  # cur[k]: which input's value currently sits on wire k
    want = [0] * n
    for i, j in perm.items():
        want[j] = i
    for j in range(n):
        if cur[j] != want[j]:
            k = cur.index(want[j])
            head += [CNOT(j, k), CNOT(k, j), CNOT(j, k)]
            cur[j], cur[k] = cur[k], cur[j]
    c = Circuit(n)
    c.gates = head + gates[::-1]
    return c
