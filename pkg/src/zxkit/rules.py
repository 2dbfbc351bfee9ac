"""Rewrite rules: each is a matcher returning non-overlapping matches and a
rewriter turning those matches into one :class:`RewriteBatch`.

Matchers scan vertices (or edges) in ascending id order, so the match list
for a given diagram is deterministic. Rewriters may apply phase updates to
vertices that survive the batch directly; everything touching connectivity
is deferred to the batch and flushed once through ``add_edge_table``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .graph import Diagram, EdgeTable, EdgeType, VertexType, edge_key, is_pauli, toggle_edge

Z = VertexType.Z
X = VertexType.X
B = VertexType.BOUNDARY
S = EdgeType.SIMPLE
H = EdgeType.HADAMARD

# (v0, v1, boundary of v0 or None, boundary of v1 or None)
PivotMatch = Tuple[int, int, Optional[int], Optional[int]]


@dataclass
class RewriteBatch:
    edge_table: EdgeTable = field(default_factory=dict)
    remove_vertices: List[int] = field(default_factory=list)
    remove_edges: List[Tuple[int, int]] = field(default_factory=list)
    check_isolated: bool = False

    def add(self, u: int, v: int, et: EdgeType, n: int = 1) -> None:
        cnt = self.edge_table.setdefault(edge_key(u, v), [0, 0])
        cnt[0 if et == S else 1] += n


def apply_batch(d: Diagram, batch: RewriteBatch) -> None:
    """Flush a batch: edge removals, then edge additions, then vertex removals."""
    for u, v in batch.remove_edges:
        if u in d and v in d and d.connected(u, v):
            d.remove_edge(u, v)
    d.add_edge_table(batch.edge_table)
    d.remove_vertices(batch.remove_vertices)
    if batch.check_isolated:
        d.remove_isolated_vertices()


def _all_hadamard_to_z(d: Diagram, v: int) -> bool:
    for w, et in d.incident(v).items():
        if et != H or d.type(w) != Z:
            return False
    return True


# -- spider fusion -------------------------------------------------------------------


def match_spider_fusion(d: Diagram) -> List[Tuple[int, int]]:
    taken: Set[int] = set()
    matches = []
    for u in sorted(d.vertices()):
        if u in taken or d.type(u) == B:
            continue
        for v, et in sorted(d.incident(u).items()):
            if v in taken or et != S or d.type(v) != d.type(u):
                continue
            matches.append((u, v))
            taken.add(u)
            taken.add(v)
            taken.update(d.neighbors(u))
            taken.update(d.neighbors(v))
            break
    return matches


def rewrite_spider_fusion(d: Diagram, matches: Sequence[Tuple[int, int]]) -> RewriteBatch:
    batch = RewriteBatch()
    tracker = d.tracker
    for v0, v1 in matches:
        d.add_to_phase(v0, d.phase(v1))
        if tracker is not None:
            tracker.fuse(v0, v1)
        for w, et in d.incident(v1).items():
            if w != v0:
                batch.add(v0, w, et)
        batch.remove_vertices.append(v1)
    return batch


# -- identity removal -------------------------------------------------------------------


def match_id(d: Diagram) -> List[Tuple[int, int, int, EdgeType]]:
    taken: Set[int] = set()
    matches = []
    for v in sorted(d.vertices()):
        if v in taken or d.type(v) == B or d.phase(v) != 0 or d.degree(v) != 2:
            continue
        (v0, e0), (v1, e1) = d.incident(v).items()
        if v0 in taken or v1 in taken:
            continue
        et = S if (e0 == H) == (e1 == H) else H
        matches.append((v, v0, v1, et))
        taken.update((v, v0, v1))
    return matches


def rewrite_id(d: Diagram, matches) -> RewriteBatch:
    batch = RewriteBatch()
    for v, v0, v1, et in matches:
        batch.add(v0, v1, et)
        batch.remove_vertices.append(v)
    return batch


# -- colour change -------------------------------------------------------------------------


def to_gh(d: Diagram) -> None:
    """Turn every X spider into a Z spider, toggling its incident edges. Edges
    between two X spiders are toggled twice and therefore keep their kind."""
    xs = {v for v in d.vertices() if d.type(v) == X}
    if not xs:
        return
    for u, v in list(d.edges()):
        if (u in xs) != (v in xs):
            d.set_edge_type(u, v, toggle_edge(d.edge_type(u, v)))
    for v in xs:
        d.set_type(v, Z)


# -- local complementation -----------------------------------------------------------------


def match_lcomp(d: Diagram) -> List[Tuple[int, List[int]]]:
    taken: Set[int] = set()
    matches = []
    for v in sorted(d.vertices()):
        if v in taken or d.type(v) != Z or d.phase(v) not in (Fraction(1, 2), Fraction(3, 2)):
            continue
        if not _all_hadamard_to_z(d, v):
            continue
        ns = sorted(d.neighbors(v))
        if any(n in taken for n in ns):
            continue
        matches.append((v, ns))
        taken.add(v)
        taken.update(ns)
    return matches


def rewrite_lcomp(d: Diagram, matches) -> RewriteBatch:
    batch = RewriteBatch(check_isolated=True)
    for v, ns in matches:
        a = d.phase(v)
        for n in ns:
            d.add_to_phase(n, -a)
        for i in range(len(ns)):
            for j in range(i + 1, len(ns)):
                batch.add(ns[i], ns[j], H)
        batch.remove_vertices.append(v)
    return batch


# -- pivoting -------------------------------------------------------------------------------


def match_pivot(d: Diagram) -> List[PivotMatch]:
    """Hadamard edges between two Pauli Z spiders with all-Z neighbourhoods."""
    taken: Set[int] = set()
    matches: List[PivotMatch] = []
    for u in sorted(d.vertices()):
        if u in taken or d.type(u) != Z or not is_pauli(d.phase(u)):
            continue
        if not _all_hadamard_to_z(d, u):
            continue
        for v in sorted(d.neighbors(u)):
            if v in taken or not is_pauli(d.phase(v)) or not _all_hadamard_to_z(d, v):
                continue
            if any(w in taken for w in d.neighbors(v)) or any(w in taken for w in d.neighbors(u)):
                continue
            if _is_hub(d, u) or _is_hub(d, v):
                continue
            matches.append((u, v, None, None))
            taken.update((u, v))
            taken.update(d.neighbors(u))
            taken.update(d.neighbors(v))
            break
    return matches


def rewrite_pivot(d: Diagram, matches: Sequence[PivotMatch]) -> RewriteBatch:
    """Pivot along each matched edge (u, v).

    Neighbours split into u-only, v-only and common classes; edges between
    different classes are toggled, common neighbours gain pi, u-only ones
    gain phase(v) and v-only ones phase(u). A vertex of the pair that has a
    boundary keeps its partner alive: the partner takes over the boundary
    wire with its kind toggled.
    """
    batch = RewriteBatch(check_isolated=True)
    for m in matches:
        pair = m[:2]
        bounds = m[2:]
        n = [set(d.neighbors(pair[0])), set(d.neighbors(pair[1]))]
        for i in range(2):
            n[i].discard(pair[1 - i])
            if bounds[i] is not None:
                n[i].discard(bounds[i])
        common = n[0] & n[1]
        only = [sorted(n[0] - common), sorted(n[1] - common)]
        common_l = sorted(common)
        for w in common_l:
            d.add_to_phase(w, 1)
        for i in range(2):
            a = d.phase(pair[i])
            if a:
                for w in only[1 - i]:
                    d.add_to_phase(w, a)
                for w in common_l:
                    d.add_to_phase(w, a)
            if bounds[i] is None:
                batch.remove_vertices.append(pair[1 - i])
            else:
                b = bounds[i]
                batch.add(pair[1 - i], b, toggle_edge(d.edge_type(pair[i], b)))
                batch.remove_edges.append((pair[i], b))
        for a_set, b_set in ((only[0], only[1]), (only[1], common_l), (only[0], common_l)):
            for s in a_set:
                for t in b_set:
                    batch.add(s, t, H)
    return batch


def gadgetize(d: Diagram, v: int) -> Tuple[int, int]:
    """Move the phase of ``v`` onto a new phase gadget hanging off ``v``.

    ``v`` keeps phase 0 and gains a Hadamard edge to a fresh hub Z(0), which
    in turn carries a fresh leaf Z(alpha). Returns (hub, leaf).
    """
    a = d.phase(v)
    r, q = d.row(v), d.qubit(v)
    hub = d.add_vertex(Z, 0, r, q - Fraction(1, 2))
    leaf = d.add_vertex(Z, a, r, q - 1)
    d.set_phase(v, 0)
    d.add_edge(v, hub, H)
    d.add_edge(hub, leaf, H)
    if d.tracker is not None:
        d.tracker.move(v, leaf)
    return hub, leaf


def _is_leaf(d: Diagram, v: int) -> bool:
    return d.degree(v) == 1 and d.type(v) != B


def _is_hub(d: Diagram, v: int) -> bool:
    """Has a non-Clifford leaf: pivoting it would undo the gadget."""
    return any(d.degree(w) == 1 and d.type(w) == Z and d.phase(w).denominator > 2 for w in d.neighbors(v))


def match_pivot_gadget(d: Diagram) -> List[PivotMatch]:
    """Pauli u next to a non-Pauli v, both interior; v is gadgetized and then
    the pair is pivoted."""
    taken: Set[int] = set()
    matches: List[PivotMatch] = []
    for u in sorted(d.vertices()):
        if u in taken or d.type(u) != Z or not is_pauli(d.phase(u)):
            continue
        if not _all_hadamard_to_z(d, u) or any(_is_leaf(d, w) for w in d.neighbors(u)):
            continue
        if any(w in taken for w in d.neighbors(u)):
            continue
        for v in sorted(d.neighbors(u)):
            if is_pauli(d.phase(v)) or d.degree(v) == 1 or not _all_hadamard_to_z(d, v):
                continue
            if any(w in taken for w in d.neighbors(v)):
                continue
            # interior: v must not touch a boundary (checked by all-Z) nor be a hub of a gadget
            matches.append((u, v, None, None))
            taken.update((u, v))
            taken.update(d.neighbors(u))
            taken.update(d.neighbors(v))
            break
    return matches


def rewrite_pivot_gadget(d: Diagram, matches: Sequence[PivotMatch]) -> RewriteBatch:
    for _, v, _, _ in matches:
        gadgetize(d, v)
    return rewrite_pivot(d, matches)


def match_pivot_boundary(d: Diagram) -> List[PivotMatch]:
    """Interior Pauli u next to a spider w that has exactly one boundary wire."""
    taken: Set[int] = set()
    matches: List[PivotMatch] = []
    for u in sorted(d.vertices()):
        if u in taken or d.type(u) != Z or not is_pauli(d.phase(u)):
            continue
        if not _all_hadamard_to_z(d, u):
            continue
        w = bound = None
        ok = True
        for n in sorted(d.neighbors(u)):
            if n in taken or d.degree(n) == 1:
                ok = False
                break
            bs = d.boundary_neighbors(n)
            if len(bs) == 1 and w is None:
                w, bound = n, bs[0]
        if not ok or w is None:
            continue
        if any(x in taken for x in d.neighbors(w)):
            continue
        # the rest of w's wiring must be graph-like
        if any(x != bound and (et != H or d.type(x) != Z) for x, et in d.incident(w).items()):
            continue
        matches.append((u, w, None, bound))
        taken.update((u, w))
        taken.update(d.neighbors(u))
        taken.update(d.neighbors(w))
    return matches


def rewrite_pivot_boundary(d: Diagram, matches: Sequence[PivotMatch]) -> RewriteBatch:
    for _, w, _, _ in matches:
        if not is_pauli(d.phase(w)):
            gadgetize(d, w)
    return rewrite_pivot(d, matches)


# -- phase gadgets ------------------------------------------------------------------------


def match_gadgets(d: Diagram) -> List[Tuple[Tuple[int, ...], List[Tuple[int, int]]]]:
    """Phase gadgets that can be merged or folded away.

    A gadget is a leaf of degree 1 with a non-Clifford phase, whose hub is a
    Pauli Z spider joined to its targets by Hadamard edges only. A match is
    either two or more gadgets with the same targets, or a gadget with at
    most one target (which is just a phase on that target, or a scalar).
    """
    groups: Dict[frozenset, List[Tuple[int, int]]] = {}
    hubs: Set[int] = set()
    for leaf in sorted(d.vertices()):
        if d.type(leaf) != Z or d.degree(leaf) != 1 or d.phase(leaf).denominator <= 2:
            continue
        (hub, et), = d.incident(leaf).items()
        if et != H or d.type(hub) != Z or not is_pauli(d.phase(hub)) or hub in hubs:
            continue
        if not _all_hadamard_to_z(d, hub):
            continue
        targets = frozenset(d.neighbors(hub)) - {leaf}
        hubs.add(hub)
        groups.setdefault(targets, []).append((hub, leaf))
    matches = []
    used: Set[int] = set()
    touched: Set[int] = set()
    for targets, gads in sorted(groups.items(), key=lambda kv: kv[1][0]):
        if len(gads) < 2 and len(targets) > 1:
            continue
        own = {x for g in gads for x in g}
        # a target must not disappear with another match, and vice versa
        if own & touched or targets & used:
            continue
        used |= own
        touched |= targets
        matches.append((tuple(sorted(targets)), gads))
    return matches


def rewrite_gadgets(d: Diagram, matches) -> RewriteBatch:
    batch = RewriteBatch(check_isolated=True)
    tracker = d.tracker
    for targets, gads in matches:
        total = Fraction(0)
        for hub, leaf in gads:
            if d.phase(hub) == 1:
                # a pi hub flips the sign of the gadget's phase
                d.set_phase(leaf, -d.phase(leaf))
                d.set_phase(hub, 0)
                if tracker is not None:
                    tracker.negate(leaf)
            total += d.phase(leaf)
        hub0, leaf0 = gads[0]
        for hub, leaf in gads[1:]:
            if tracker is not None:
                tracker.fuse(leaf0, leaf)
            batch.remove_vertices += [hub, leaf]
        total %= 2
        if len(targets) <= 1:
            batch.remove_vertices += [hub0, leaf0]
            if targets:
                d.add_to_phase(targets[0], total)
                if tracker is not None:
                    tracker.fuse(targets[0], leaf0)
        elif total == 0 or total == 1:
            batch.remove_vertices += [hub0, leaf0]
            if total == 1:
                for t in targets:
                    d.add_to_phase(t, 1)
        else:
            d.set_phase(leaf0, total)
    return batch
