from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qv.arith import GroundRing
from qv.cochain import Poly, basis_h2, example111
from qv.errors import NotACocycle, SingularPresent
from qv.invariant import state_sum_2
from qv.quandle import AlexanderQuandle
from qv.rmatrix import (build_r_matrix, check_yang_baxter, identity_h, identity_r,
                        markov_conditions, operator_invariant, zero_h)
from qv.diagram import parse_braid

from strategies import braids

F4 = GroundRing(2, (1, 1, 1))
Q4 = AlexanderQuandle(F4, F4.generator)
F9 = GroundRing(3, (1, 0, 1))
Q9 = AlexanderQuandle(F9, F9.generator)
F3 = GroundRing(3, (1, 1))
R3 = AlexanderQuandle(F3, (2,))

CASES = {"Q4": (Q4, example111(2)), "Q9": (Q9, basis_h2(Q9)[0]), "R3": (R3, Poly.zero(2, 3))}


@pytest.mark.parametrize("name", sorted(CASES))
def test_yang_baxter_and_markov(name):
    Q, f = CASES[name]
    R = build_r_matrix(f, Q)
    assert R.is_monomial()
    assert check_yang_baxter(R)
    assert markov_conditions(R)
    assert markov_conditions(R, identity_h(Q.ring))
    assert R.compose(R.inverse()).is_identity()


def test_zero_h_fails_markov():
    R = build_r_matrix(example111(2), Q4)
    assert not markov_conditions(R, zero_h(F4))


def test_identity_r_is_not_a_quandle_r_matrix():
    Rid = identity_r(F4)
    assert Rid.is_identity() and check_yang_baxter(Rid)
    # the trace condition fails: trace_2(id) = q * id
    assert not markov_conditions(Rid)


def test_non_cocycle_breaks_yang_baxter():
    f = Poly.monomial((1, 1), 2)
    with pytest.raises(NotACocycle):
        build_r_matrix(f, Q4)
    assert not check_yang_baxter(build_r_matrix(f, Q4, check=False))


def test_entries():
    R = build_r_matrix(example111(2), Q4)
    x, y = F4.index(F4.zero), F4.index(F4.one)
    (a, b), w = R.apply((x, y))
    assert (a, b) == (y, F4.index(Q4.op(F4.zero, F4.one)))
    assert F4.element(w) == example111(2).evaluate(Q4, [F4.zero, F4.one])
    assert R.entry((a, b), (x, y)) == {w: 1}
    assert R.entry((x, x), (x, y)) == {}


@settings(max_examples=25)
@given(braids(max_len=5), st.sampled_from(sorted(CASES)))
def test_trace_equals_state_sum(b, name):
    Q, f = CASES[name]
    R = build_r_matrix(f, Q)
    assert operator_invariant(b, R).equal_in_S(state_sum_2(b, f, Q))


def test_singular_words_rejected():
    with pytest.raises(SingularPresent):
        operator_invariant(parse_braid("2 ; s1"), build_r_matrix(example111(2), Q4))
