import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import circuit_oracle
from zxkit import rules, simplify
from zxkit.circuit import CNOT, PHASE_GATES, Circuit, H, T, Tdg, ZPhase
from zxkit.generate import CLIFFORD_GATES, MIXED_GATES, random_circuit, random_clifford, random_clifford_t
from zxkit.graph import Diagram, EdgeType, VertexType, is_pauli
from zxkit.simplify import (Rule, SimplifierError, clifford_simp, full_reduce, fuse_simp, id_simp,
                            interior_clifford_simp, run_basic_simplifier, spider_simp, teleport_reduce)
from zxkit.tensor import compare_tensors, to_tensor

SIMPLIFIERS = {
    "fuse": fuse_simp,
    "interior_clifford": interior_clifford_simp,
    "clifford": clifford_simp,
    "full_reduce": full_reduce,
}


def _circuit(seed):
    r = random.Random(seed)
    return random_circuit(r.randint(1, 5), r.randint(1, 40), r, MIXED_GATES)


@pytest.mark.parametrize("name", sorted(SIMPLIFIERS))
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_simplifier_preserves_the_unitary(name, seed):
    c = _circuit(seed)
    d = c.to_basic_gates().to_graph()
    SIMPLIFIERS[name](d)
    n = c.qubits
    assert compare_tensors(to_tensor(d).reshape(2 ** n, 2 ** n), circuit_oracle(c.to_basic_gates()))


@pytest.mark.parametrize("name", sorted(SIMPLIFIERS))
@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_simplifier_reaches_a_fixpoint(name, seed):
    d = _circuit(seed).to_basic_gates().to_graph()
    SIMPLIFIERS[name](d)
    snapshot = d.structure()
    assert SIMPLIFIERS[name](d) == 0
    assert d.structure() == snapshot


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_full_reduce_is_idempotent_and_leaves_no_matches(seed):
    d = _circuit(seed).to_basic_gates().to_graph()
    full_reduce(d)
    for rule in (simplify.SPIDER, simplify.ID, simplify.LCOMP, simplify.PIVOT, simplify.GADGET):
        assert rule.matcher(d) == [], rule.name


def test_chain_of_three_spiders_takes_two_passes():
    d = Diagram()
    i = d.add_input()
    vs = [d.add_vertex(VertexType.Z, Fraction(1, 4), row=k + 1) for k in range(3)]
    o = d.add_output(row=4)
    for a, b in zip([i] + vs, vs + [o]):
        d.add_edge(a, b)
    assert spider_simp(d) == 2
    assert d.num_vertices() == 3
    assert spider_simp(d) == 0
    (v,) = [v for v in d.vertices() if not d.is_boundary(v)]
    assert d.phase(v) == Fraction(3, 4)


def test_t_tdg_reduces_to_a_wire():
    d = Circuit(1, [T(0), Tdg(0)]).to_graph()
    full_reduce(d)
    id_simp(d)
    assert d.num_vertices() == 2
    assert d.edge_type(d.inputs[0], d.outputs[0]) == EdgeType.SIMPLE


def test_ceiling_and_metric_are_enforced():
    def match_always(d):
        return [0]

    def add_vertex(d, ms):
        d.add_vertex()
        return rules.RewriteBatch()

    d = Diagram()
    d.add_vertex()
    with pytest.raises(SimplifierError, match="did not decrease"):
        run_basic_simplifier(d, Rule("grow", match_always, add_vertex))
    with pytest.raises(SimplifierError, match="exceeded"):
        run_basic_simplifier(d, Rule("grow", match_always, add_vertex, shrinks=False), max_iterations=5)


def _gslc_violations(d):
    """Interior spiders that a GS-LC form must not contain."""
    bad = []
    for v in d.vertices():
        if d.is_boundary(v) or not d.is_interior(v):
            continue
        p = d.phase(v)
        if p.denominator == 2:
            bad.append((v, "proper Clifford"))
        elif is_pauli(p) and all(d.is_interior(w) for w in d.neighbors(v)):
            bad.append((v, "Pauli with interior neighbours"))
    return bad


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10 ** 6), qubits=st.integers(1, 6))
def test_clifford_simp_gives_gslc_form(seed, qubits):
    c = random_clifford(qubits, 60, seed)
    d = c.to_graph()
    clifford_simp(d)
    assert _gslc_violations(d) == []
    assert all(d.type(v) != VertexType.X for v in d.vertices())
    # every spider touches a boundary, so at most one spider per wire end
    spiders = [v for v in d.vertices() if not d.is_boundary(v)]
    assert all(not d.is_interior(v) for v in spiders)
    assert len(spiders) <= 2 * qubits


# -- phase teleportation ---------------------------------------------------------------------


def _skeleton(c):
    return [g for g in c.gates if g.name not in PHASE_GATES]


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_teleport_reduce_is_sound_and_keeps_the_skeleton(seed):
    r = random.Random(seed)
    c = random_clifford_t(r.randint(1, 5), r.randint(1, 50), r)
    out = teleport_reduce(c)
    assert compare_tensors(circuit_oracle(out), circuit_oracle(c.to_basic_gates()))
    assert out.tcount() <= c.tcount()
    assert _skeleton(out) == _skeleton(c.to_basic_gates())


def test_teleport_merges_phases_across_a_cnot_control():
    # T on the control commutes through the CNOT
    c = Circuit(2, [T(0), CNOT(0, 1), T(0)])
    out = teleport_reduce(c)
    assert out.tcount() == 0
    assert out.gates == [ZPhase(0, Fraction(1, 2)), CNOT(0, 1)]


def test_teleport_cancels_a_padded_pair():
    c = Circuit(2, [H(1), T(0), CNOT(0, 1), Tdg(0), H(0)])
    out = teleport_reduce(c)
    assert out.tcount() == 0
    assert _skeleton(out) == _skeleton(c)


def test_teleport_leaves_clifford_circuits_alone():
    c = random_circuit(4, 80, 11, CLIFFORD_GATES)
    out = teleport_reduce(c)
    assert out == c.to_basic_gates()


def test_phase_tracker_groups():
    t = simplify.PhaseTracker()
    for v, label in ((10, 0), (11, 1), (12, 2)):
        t.add(v, label)
    t.fuse(10, 11)
    assert sorted(t.group(0)) == [0, 1]
    t.move(12, 20)
    t.negate(20)
    assert t.mult[2] == -1 and t.mult[0] == 1
    t.fuse(20, 10)
    assert sorted(t.group(2)) == [0, 1, 2]
