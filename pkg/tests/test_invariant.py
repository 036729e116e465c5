from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qv.arith import GroundRing, Laurent
from qv.cochain import Poly, basis_h2, basis_h3, example111, mochizuki_p3
from qv.coloring import FixArcAndRegion, count_colorings, enumerate_colorings, shadow_extend
from qv.diagram import POSITIVE, BraidWord, Letter, closure_diagram, parse_braid, torus_braid
from qv.errors import ArityMismatch, NotACocycle
from qv.invariant import GroupRingElement, crossing_arguments, state_sum, state_sum_2, state_sum_3
from qv.quandle import AlexanderQuandle

from strategies import braids

F4 = GroundRing(2, (1, 1, 1))
Q4 = AlexanderQuandle(F4, F4.generator)
F3 = GroundRing(3, (1, 1))
R3 = AlexanderQuandle(F3, (2,))
F9 = GroundRing(3, (1, 0, 1))
Q9 = AlexanderQuandle(F9, F9.generator)

# (quandle, cocycle) pairs with nontrivial classes
CASES2 = {"Q4": (Q4, example111(2)), "Q9": (Q9, basis_h2(Q9)[0])}
CASES3 = {"R3": (R3, mochizuki_p3(R3)), "Q4": (Q4, basis_h3(Q4)[0])}


def shadow_oracle(b: BraidWord, Q, phi: Poly) -> dict:
    """Shadow state sum from arc colorings, region search and crossing data only."""
    D = closure_diagram(b)
    R = Q.ring
    out: dict = {}
    for c in enumerate_colorings(b, Q, diagram=D):
        colors = c.arc_colors()
        for base in R.element_list:
            regions = shadow_extend(D, c, Q, base).regions
            acc = R.zero
            for x in D.crossings:
                z = regions[x.west]
                # the left incoming strand is the under strand for positive letters
                if x.sign == POSITIVE:
                    val = phi.evaluate(Q, [z, colors[x.under_in], colors[x.over]])
                    acc = R.add(acc, val)
                else:
                    val = phi.evaluate(Q, [z, colors[x.under_out], colors[x.over]])
                    acc = R.sub(acc, val)
            out[acc] = out.get(acc, 0) + 1
    return out


def test_unknot_and_unlink():
    f = example111(2)
    assert state_sum_2(BraidWord(2, (Letter(1, POSITIVE),)), f, Q4).classes() == {F4.zero: 4}
    assert state_sum_2(BraidWord(2), f, Q4).classes() == {F4.zero: 16}
    phi = CASES3["R3"][1]
    assert state_sum_3(torus_braid(1), phi, R3).classes() == {F3.zero: 9}


def test_cancelling_pair_is_trivial():
    f = example111(2)
    b = parse_braid("2 ; 1 -1")
    assert state_sum_2(b, f, Q4).equal_in_S(state_sum_2(BraidWord(2), f, Q4))


def test_example111_at_six_is_constant():
    assert state_sum_2(torus_braid(6), example111(2), Q4).classes() == {F4.zero: 16}


def test_requires_cocycle():
    with pytest.raises(NotACocycle):
        state_sum_2(torus_braid(3), Poly.monomial((1, 1), 2), Q4)
    with pytest.raises(ArityMismatch):
        state_sum_3(torus_braid(3), example111(2), Q4)
    rec = state_sum(torus_braid(3), Poly.monomial((1, 1), 2), Q4, check=False)
    assert not rec.cocycle_ok and rec.colorings == 16


def test_crossing_arguments_undo_each_other():
    for x, y in itertools.product(F4.element_list, repeat=2):
        s, u, v = crossing_arguments(Q4, POSITIVE, x, y)
        # the negative letter applied to the outgoing colors sees the same pair
        s2, u2, v2 = crossing_arguments(Q4, -1, y, Q4.op(x, y))
        assert (s, u, v) == (1, x, y) and (s2, u2, v2) == (-1, x, y)


@settings(max_examples=25)
@given(braids(max_len=5), st.sampled_from(sorted(CASES2)))
def test_value_at_t_equal_one_counts_colorings(b, name):
    Q, f = CASES2[name]
    assert state_sum_2(b, f, Q).eval_t1() == count_colorings(b, Q)


@settings(max_examples=25)
@given(braids(max_len=5), st.sampled_from(sorted(CASES2)), st.data())
def test_markov_moves_preserve_state_sum_2(b, name, data):
    Q, f = CASES2[name]
    n = b.strands
    k = data.draw(st.integers(1, n - 1))
    sign = data.draw(st.sampled_from([1, -1]))
    conj = BraidWord(n, (Letter(k, sign),) + b.letters + (Letter(k, -sign),))
    stab = BraidWord(n + 1, b.letters + (Letter(n, sign),))
    base = state_sum_2(b, f, Q)
    assert state_sum_2(conj, f, Q).equal_in_S(base)
    assert state_sum_2(stab, f, Q).equal_in_S(base)


@settings(max_examples=20)
@given(braids(max_len=4), st.sampled_from(sorted(CASES3)), st.data())
def test_markov_moves_preserve_state_sum_3(b, name, data):
    Q, phi = CASES3[name]
    n = b.strands
    k = data.draw(st.integers(1, n - 1))
    sign = data.draw(st.sampled_from([1, -1]))
    conj = BraidWord(n, (Letter(k, sign),) + b.letters + (Letter(k, -sign),))
    stab = BraidWord(n + 1, b.letters + (Letter(n, sign),))
    base = state_sum_3(b, phi, Q)
    assert state_sum_3(conj, phi, Q).equal_in_S(base)
    assert state_sum_3(stab, phi, Q).equal_in_S(base)


@settings(max_examples=20)
@given(braids(max_len=4), st.sampled_from(sorted(CASES3)))
def test_shadow_sum_matches_region_search(b, name):
    Q, phi = CASES3[name]
    assert state_sum_3(b, phi, Q).classes() == {
        k: v for k, v in sorted(shadow_oracle(b, Q, phi).items(), key=lambda kv: Q.ring.index(kv[0]))}


@settings(max_examples=20)
@given(braids(max_len=4), st.sampled_from(sorted(CASES2)))
def test_symbolic_exponents_reduce(b, name):
    Q, f = CASES2[name]
    rec = state_sum(b, f, Q, diagnostics=True)
    for r in rec.records:
        assert Q.ring.reduce(r.symbolic) == r.exponent


def test_fixed_region_policy_counts_arc_colorings():
    phi = basis_h3(Q4)[0]
    b = torus_braid(3)
    full = state_sum_3(b, phi, Q4, FixArcAndRegion(0, F4.zero, F4.zero))
    assert full.eval_t1() == count_colorings(b, Q4, FixArcAndRegion(0, F4.zero, F4.zero))


def test_group_ring_algebra():
    a = GroupRingElement(F4, ((Laurent.parse("w"), 2), (Laurent.const(0), 1)))
    b = GroupRingElement(F4, ((Laurent.parse("w^2+w+1"), 1),))  # lift of 0
    assert str(a) == "1 + 2*t^(w)"
    assert (a + b).classes() == {F4.zero: 2, F4.generator: 2}
    assert len((a + b).terms) == 3   # distinct lifts of the class 0 are kept apart
    assert (a * a).classes() == {F4.zero: 5, F4.generator: 4}   # 2w = 0 in characteristic 2
    assert (a - a).terms == ()
    assert a.normalized().equal_in_S(a)
    assert a.shifted(0, Laurent.parse("w^2+w+1")).equal_in_S(a)
