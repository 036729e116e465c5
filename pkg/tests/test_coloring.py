from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qv.coloring import (FixArc, FixArcAndRegion, SumAll, count_colorings, enumerate_colorings,
                         parse_policy, region_levels, shadow_extend, verify_coloring)
from qv.diagram import POSITIVE, BraidWord, Letter, closure_diagram, parse_braid, torus_braid
from qv.errors import PolicyInvalid

from strategies import QUANDLES, braids

quandle_names = st.sampled_from(sorted(QUANDLES))


def brute_force_count(b: BraidWord, Q) -> int:
    """Try every assignment of colors to arcs and check each crossing."""
    D = closure_diagram(b)
    total = 0
    for colors in itertools.product(Q.ring.element_list, repeat=len(D.arcs)):
        ok = True
        for c in D.crossings:
            inc, out, over = colors[c.under_in], colors[c.under_out], colors[c.over]
            ok = Q.op(inc, over) == out if c.sign == POSITIVE else Q.op(out, over) == inc
            if not ok:
                break
        total += ok
    return total


def test_known_counts(R3, Q4):
    assert count_colorings(torus_braid(3), R3) == 9      # Fox 3-colorings of the trefoil
    assert count_colorings(BraidWord(2), R3) == 9        # two-component unlink
    assert count_colorings(BraidWord(2, (Letter(1, POSITIVE),)), R3) == 3
    assert count_colorings(parse_braid("3 ; 1 -2 1 -2"), R3) == 3  # figure eight: 5-colorable only
    assert count_colorings(torus_braid(3), Q4) == 16


@settings(max_examples=40)
@given(braids(max_strands=3, max_len=4), st.sampled_from(["R3", "Q4"]))
def test_matches_brute_force(b, name):
    Q = QUANDLES[name]
    assert count_colorings(b, Q) == brute_force_count(b, Q)


@given(braids(max_strands=3, max_len=5), quandle_names)
def test_every_coloring_satisfies_the_crossing_rule(b, name):
    Q = QUANDLES[name]
    for c in enumerate_colorings(b, Q):
        assert verify_coloring(c, Q)


@given(braids(max_strands=3, max_len=5), quandle_names)
def test_trivial_colorings_always_exist(b, name):
    Q = QUANDLES[name]
    trivial = [c for c in enumerate_colorings(b, Q) if c.is_trivial()]
    assert len(trivial) == Q.ring.order


@given(braids(max_strands=3, max_len=5), quandle_names, st.data())
def test_count_invariant_under_conjugation_and_stabilization(b, name, data):
    Q = QUANDLES[name]
    n = b.strands
    k = data.draw(st.integers(1, n - 1))
    sign = data.draw(st.sampled_from([1, -1]))
    g, g_inv = Letter(k, sign), Letter(k, -sign)
    conj = BraidWord(n, (g,) + b.letters + (g_inv,))
    stab = BraidWord(n + 1, b.letters + (Letter(n, sign),))
    base = count_colorings(b, Q)
    assert count_colorings(conj, Q) == base
    assert count_colorings(stab, Q) == base


@given(braids(max_strands=3, max_len=5), quandle_names)
def test_symbolic_lifts_reduce_to_colors(b, name):
    Q = QUANDLES[name]
    for c in enumerate_colorings(b, Q, symbolic=True):
        for lv, lifts in zip(c.levels, c.lifts):
            assert tuple(Q.reduce(x) for x in lifts) == lv


@given(braids(max_strands=3, max_len=5), quandle_names, st.data())
def test_region_colors_are_path_independent(b, name, data):
    Q = QUANDLES[name]
    D = closure_diagram(b)
    cs = enumerate_colorings(b, Q, diagram=D)
    c = data.draw(st.sampled_from(cs))
    base = data.draw(st.sampled_from(Q.ring.element_list))
    sh = shadow_extend(D, c, Q, base)
    root = data.draw(st.sampled_from(D.regions))
    assert shadow_extend(D, c, Q, base, root=root).regions == sh.regions
    # the level-by-level sweep agrees with the search
    for L, row in enumerate(region_levels(c, Q, base)):
        for g, z in enumerate(row):
            assert sh.regions[D.gap_region[(L, g)]] == z


def test_policies(Q4, F4):
    b = torus_braid(3)
    assert count_colorings(b, Q4, FixArc(0, F4.zero)) == 4
    assert count_colorings(b, Q4, FixArcAndRegion(0, F4.zero, F4.one)) == 4
    with pytest.raises(PolicyInvalid):
        count_colorings(b, Q4, FixArc(7, F4.zero))


def test_parse_policy(Q4, F4):
    assert parse_policy("sum-all", Q4) == SumAll()
    assert parse_policy("fix-arc:1=w", Q4) == FixArc(1, F4.generator)
    pol = parse_policy("fix-arc-region:0=0,1", Q4)
    assert pol == FixArcAndRegion(0, F4.zero, F4.one)
    assert pol.describe(F4) == "fix-arc-region:0=0,1"
    with pytest.raises(PolicyInvalid):
        parse_policy("fix-region:0", Q4)
