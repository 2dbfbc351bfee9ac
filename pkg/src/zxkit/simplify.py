"""Simplifiers built from the rules in :mod:`zxkit.rules`.

A basic simplifier applies one rule until its matcher comes back empty; the
compound simplifiers chain basic ones. Every simplifier mutates the diagram
in place and returns the number of match/rewrite passes it performed, so a
second call on an already simplified diagram returns 0.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import rules
from .circuit import Circuit, Gate, PHASE_GATES, circuit_to_graph
from .graph import Diagram

log = logging.getLogger(__name__)


class SimplifierError(RuntimeError):
    """A rule kept matching past the iteration ceiling, or broke its metric."""


@dataclass(frozen=True)
class Rule:
    name: str
    matcher: Callable[[Diagram], list]
    rewriter: Callable[[Diagram, list], rules.RewriteBatch]
    # every nonempty pass must strictly lower the vertex count
    shrinks: bool = True
    metric_note: str = "vertex count"


SPIDER = Rule("spider", rules.match_spider_fusion, rules.rewrite_spider_fusion)
ID = Rule("id", rules.match_id, rules.rewrite_id)
LCOMP = Rule("lcomp", rules.match_lcomp, rules.rewrite_lcomp)
PIVOT = Rule("pivot", rules.match_pivot, rules.rewrite_pivot)
GADGET = Rule("gadget", rules.match_gadgets, rules.rewrite_gadgets)
PIVOT_GADGET = Rule("pivot_gadget", rules.match_pivot_gadget, rules.rewrite_pivot_gadget, shrinks=False,
                    metric_note="interior non-Pauli spiders outside gadgets")
PIVOT_BOUNDARY = Rule("pivot_boundary", rules.match_pivot_boundary, rules.rewrite_pivot_boundary, shrinks=False,
                      metric_note="interior Pauli spiders")

# runtime metric assertions; cheap, so on unless explicitly disabled
CHECK_METRIC = True


def run_basic_simplifier(d: Diagram, rule: Rule, max_iterations: Optional[int] = None) -> int:
    """Apply ``rule`` until it finds no matches. Returns the number of passes."""
    ceiling = max_iterations if max_iterations is not None else 10 * max(d.num_vertices(), 1)
    i = 0
    while True:
        matches = rule.matcher(d)
        if not matches:
            return i
        i += 1
        if i > ceiling:
            raise SimplifierError(f"rule {rule.name} exceeded {ceiling} iterations")
        before = d.num_vertices()
        rules.apply_batch(d, rule.rewriter(d, matches))
        if CHECK_METRIC and rule.shrinks and d.num_vertices() >= before:
            raise SimplifierError(f"rule {rule.name} did not decrease the {rule.metric_note}")
        log.debug("%s: %d matches, %d vertices left", rule.name, len(matches), d.num_vertices())


def spider_simp(d: Diagram) -> int:
    return run_basic_simplifier(d, SPIDER)


def id_simp(d: Diagram) -> int:
    return run_basic_simplifier(d, ID)


def lcomp_simp(d: Diagram) -> int:
    return run_basic_simplifier(d, LCOMP)


def pivot_simp(d: Diagram) -> int:
    return run_basic_simplifier(d, PIVOT)


def pivot_gadget_simp(d: Diagram) -> int:
    return run_basic_simplifier(d, PIVOT_GADGET)


def pivot_boundary_simp(d: Diagram) -> int:
    return run_basic_simplifier(d, PIVOT_BOUNDARY)


def gadget_simp(d: Diagram) -> int:
    return run_basic_simplifier(d, GADGET)


def to_gh(d: Diagram) -> None:
    rules.to_gh(d)


def fuse_simp(d: Diagram) -> int:
    """Remove identities and fuse spiders until neither applies."""
    total = 0
    while True:
        n = id_simp(d) + spider_simp(d)
        if n == 0:
            return total
        total += n


def interior_clifford_simp(d: Diagram) -> int:
    """Make the diagram graph-like, then remove interior Clifford spiders."""
    total = spider_simp(d)
    to_gh(d)
    while True:
        n = id_simp(d) + spider_simp(d) + pivot_simp(d) + lcomp_simp(d)
        if n == 0:
            return total
        total += n


def clifford_simp(d: Diagram) -> int:
    """Interior Clifford simplification alternated with boundary pivots. A
    Clifford circuit ends up as a graph state with local Cliffords."""
    total = 0
    while True:
        total += interior_clifford_simp(d)
        n = pivot_boundary_simp(d)
        if n == 0:
            return total
        total += n


def full_reduce(d: Diagram) -> int:
    """Clifford simplification plus gadget pivots and gadget fusion."""
    total = interior_clifford_simp(d) + pivot_gadget_simp(d)
    while True:
        total += clifford_simp(d)
        g = gadget_simp(d)
        total += g + interior_clifford_simp(d)
        p = pivot_gadget_simp(d)
        total += p
        if g + p == 0:
            return total


# -- phase teleportation ------------------------------------------------------------------------


class PhaseTracker:
    """Follows where non-Clifford phases of a circuit diagram end up.

    Every tracked spider starts with its own label. When two labelled
    spiders fuse their groups are merged; when a gadget's sign flips, the
    multipliers of its group flip. Diagram rules call the hooks below via
    ``Diagram.tracker``.
    """

    def __init__(self) -> None:
        self.parent: Dict[int, int] = {}
        self.members: Dict[int, List[int]] = {}
        self.mult: Dict[int, int] = {}
        self.carrier: Dict[int, int] = {}  # vertex -> some label of its group

    def add(self, v: int, label: int) -> None:
        self.parent[label] = label
        self.members[label] = [label]
        self.mult[label] = 1
        self.carrier[v] = label

    def find(self, label: int) -> int:
        while self.parent[label] != label:
            self.parent[label] = self.parent[self.parent[label]]
            label = self.parent[label]
        return label

    def group(self, label: int) -> List[int]:
        return self.members[self.find(label)]

    def fuse(self, v0: int, v1: int) -> None:
        """The phase of ``v1`` was added onto ``v0``."""
        l1 = self.carrier.pop(v1, None)
        if l1 is None:
            return
        l0 = self.carrier.get(v0)
        if l0 is None:
            self.carrier[v0] = l1
            return
        r0, r1 = self.find(l0), self.find(l1)
        if r0 == r1:
            return
        if len(self.members[r0]) < len(self.members[r1]):
            r0, r1 = r1, r0
        self.parent[r1] = r0
        self.members[r0] += self.members.pop(r1)

    def move(self, src: int, dst: int) -> None:
        label = self.carrier.pop(src, None)
        if label is not None:
            self.carrier[dst] = label

    def negate(self, v: int) -> None:
        label = self.carrier.get(v)
        if label is not None:
            for m in self.group(label):
                self.mult[m] = -self.mult[m]


def teleport_reduce(c: Circuit) -> Circuit:
    """Optimise phases in place: find which phase gates merge in the diagram
    and merge them in the circuit, keeping every other gate as it is."""
    c = c.to_basic_gates()
    d, gate_vertex = circuit_to_graph(c)
    tracker = PhaseTracker()
    for i, v in gate_vertex.items():
        if c.gates[i].phase.denominator > 2:
            tracker.add(v, i)
    d.tracker = tracker
    full_reduce(d)
    d.tracker = None

    new_phase: Dict[int, Fraction] = {}
    seen = set()
    for i in sorted(tracker.parent):
        root = tracker.find(i)
        if root in seen:
            continue
        seen.add(root)
        group = sorted(tracker.members[root])
        total = sum((tracker.mult[j] * c.gates[j].phase for j in group), Fraction(0))
        first = group[0]
        new_phase[first] = tracker.mult[first] * total
        for j in group[1:]:
            new_phase[j] = Fraction(0)

    out = Circuit(c.qubits, name=c.name)
    out.qubit_names = c.qubit_names
    for i, g in enumerate(c.gates):
        if i in new_phase:
            g = Gate(g.name, g.qubits, new_phase[i])
        if g.name in PHASE_GATES and g.phase == 0:
            continue
        out.gates.append(g)
    return out
