from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import circuit_oracle
from zxkit.circuit import CCX, CNOT, CZ, Circuit, CircuitError, H, S, T, Tdg, X, XPhase, ZPhase
from zxkit.generate import random_circuit
from zxkit.optimize import basic_optimize
from zxkit.tensor import compare_tensors


def test_cancellations_and_merges():
    c = Circuit(2, [H(0), H(0), CNOT(0, 1), CNOT(0, 1), CZ(0, 1), CZ(1, 0), T(1), T(1), X(0), X(0)])
    assert basic_optimize(c).gates == [S(1)]


def test_t_tdg_vanish():
    assert basic_optimize(Circuit(1, [T(0), Tdg(0)])).gates == []


def test_blocked_by_an_intervening_gate():
    c = Circuit(2, [H(0), CNOT(0, 1), H(0)])
    assert basic_optimize(c).gates == c.gates
    c = Circuit(2, [CNOT(0, 1), CNOT(1, 0), CNOT(0, 1)])
    assert basic_optimize(c).gates == c.gates


def test_cascading_cancellation():
    c = Circuit(2, [CNOT(0, 1), H(0), H(0), CNOT(0, 1), ZPhase(0, Fraction(1, 3)), XPhase(0, 1)])
    assert basic_optimize(c).gates == [ZPhase(0, Fraction(1, 3)), XPhase(0, 1)]


def test_rejects_non_basic_gates():
    with pytest.raises(CircuitError):
        basic_optimize(Circuit(3, [CCX(0, 1, 2)]))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_sound_and_never_longer(seed):
    c = random_circuit(3, 40, seed, ("CNOT", "CZ", "H", "S", "T", "Z", "X", "Tdg")).to_basic_gates()
    out = basic_optimize(c)
    assert len(out) <= len(c)
    assert out.tcount() <= c.tcount()
    assert compare_tensors(circuit_oracle(out), circuit_oracle(c))
    assert basic_optimize(out) == out
