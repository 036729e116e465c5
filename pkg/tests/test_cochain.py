from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qv.arith import GroundRing, Laurent
from qv.cochain import (Poly, basis_h2, basis_h3, chi, coboundary, coboundary_table, example111,
                        is_cocycle, load_cocycles, mochizuki_p3, named_cocycle)
from qv.errors import ArityMismatch, NotAField, OmegaTrivial, ParseError
from qv.quandle import AlexanderQuandle


def random_cochain(draw, n: int, p: int) -> Poly:
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, 3)] * n, st.integers(-2, 2)), st.integers(1, p - 1), max_size=4))
    return Poly(n, terms, p)


@st.composite
def cochains(draw):
    p = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(1, 3))
    return random_cochain(draw, n, p)


@given(cochains())
def test_coboundary_squares_to_zero(f):
    assert not coboundary(coboundary(f))


@given(cochains())
def test_coordinate_round_trip(f):
    assert f.to_X().to_U() == f
    assert f.to_X().coords == "X"


@given(cochains(), st.data())
def test_u_and_x_coboundaries_agree_up_to_sign(f, data):
    R = {2: GroundRing(2, (1, 1, 1)), 3: GroundRing(3, (1, 1))}[f.p]
    Q = AlexanderQuandle(R, R.generator if R.m > 1 else (2,))
    n = f.nvars
    table = coboundary_table(f.value_table(Q), Q, n)
    u = coboundary(f).value_table(Q)
    neg = R.neg_table
    assert table == [neg[v] for v in u]


def test_coboundary_of_linear_cochain():
    f = Poly.var(0, 1, 3)
    assert coboundary(f) == Poly.var(0, 2, 3).times_omega(1) - Poly.var(0, 2, 3)
    assert not coboundary(Poly.zero(2, 3))


def test_evaluations(Q4, F4):
    f = example111(2)
    assert f.evaluate(Q4, [F4.zero, F4.one]) == F4.one
    g = Poly.monomial((1, 2), 2)
    assert g.evaluate(Q4, [F4.generator, F4.one]) == F4.add(F4.generator, F4.one)
    with pytest.raises(ArityMismatch):
        f.evaluate(Q4, [F4.zero])


def test_chi_small_primes():
    assert chi(2) == Poly.monomial((1, 1), 2)
    assert chi(3) == Poly.monomial((2, 1), 3) + Poly.monomial((1, 2), 3)
    u, v = Poly.var(0, 2, None), Poly.var(1, 2, None)
    for p in (3, 5, 7):
        oracle = ((u + v) ** p - u ** p - v ** p).divide_exact(p).reduce_mod(p)
        assert chi(p) == oracle


def test_example111_is_a_cocycle(Q4):
    assert is_cocycle(example111(2), Q4)
    assert not is_cocycle(Poly.monomial((1, 1), 2), Q4)


def test_mochizuki_closed_form(QS9):
    phi = mochizuki_p3(QS9)
    x, y, z = (Poly.var(i, 3, 3, "X") for i in range(3))
    wz = z.times_omega(-1)
    ref = (x - y) * (y * z * (y - z) - wz * (y - z) ** 2 - z.times_omega(-2) * z * (y - z))
    assert phi.to_X() == ref.to_X()
    E = QS9.ring.element_list
    assert all(phi.evaluate(QS9, [a, a, b]) == QS9.ring.zero for a, b in itertools.product(E, E))


def test_mochizuki_cocycle_status(F9, QS9):
    # a cocycle over F_9 and for some units of the order-9 ring, but not for the generator
    assert is_cocycle(mochizuki_p3(AlexanderQuandle(F9, F9.generator)), AlexanderQuandle(F9, F9.generator))
    assert not is_cocycle(mochizuki_p3(QS9), QS9)
    S9 = QS9.ring
    Q2 = AlexanderQuandle(S9, S9.from_int(2))
    assert is_cocycle(mochizuki_p3(Q2), Q2)


def test_basis_h2_examples(Q4, Q9):
    assert [str(f) for f in basis_h2(Q4)] == ["U1*U2^2"]
    assert [f.label for f in basis_h2(Q9)] == ["basis2:0,1"]


def test_basis_preconditions(F4, S9):
    with pytest.raises(OmegaTrivial):
        basis_h2(AlexanderQuandle(F4, F4.one))
    with pytest.raises(NotAField):
        basis_h3(AlexanderQuandle(S9, S9.generator))


FIELDS = [((2, (1, 1, 1)), None), ((3, (1, 0, 1)), None), ((2, (1, 1, 0, 1)), None)]


@pytest.mark.parametrize("p,h", [(2, (1, 1, 1)), (3, (1, 0, 1)), (2, (1, 1, 0, 1))])
def test_every_basis_element_is_a_cocycle(p, h):
    R = GroundRing(p, h)
    for w in R.elements():
        if w in (R.zero, R.one):
            continue
        Q = AlexanderQuandle(R, w)
        for f in basis_h2(Q) + basis_h3(Q):
            assert is_cocycle(f, Q), f.label


def test_I0_matches_h2_condition(Q4):
    labels = [f.label for f in basis_h3(Q4)]
    assert "basis3:I0:0,1" in labels


def test_printed_i43_coefficient_is_not_a_cocycle(Q9):
    fixed = [f for f in basis_h3(Q9) if "I4-3" in f.label]
    printed = [f for f in basis_h3(Q9, printed_i43=True) if "I4-3" in f.label]
    assert fixed and printed
    assert all(is_cocycle(f, Q9) for f in fixed)
    assert not any(is_cocycle(f, Q9) for f in printed)


def test_named_cocycles(Q4, QS9):
    assert named_cocycle("example111", Q4) == example111(2)
    assert named_cocycle("basis2:0,1", Q4) == basis_h2(Q4)[0]
    assert named_cocycle("mochizuki-p3", QS9).nvars == 3
    with pytest.raises(ParseError):
        named_cocycle("basis3:I9:0", Q4)


def test_load_cocycles_reports_line():
    fs = load_cocycles("# two cochains\n(x-y)*y^2\n\n(x-y)^2*y*w^-1  # comment\n", 3)
    assert len(fs) == 2 and fs[1].nvars == 2
    with pytest.raises(ParseError) as err:
        load_cocycles("(x-y)*y^2\n(x-y)*q\n", 3)
    assert err.value.line == 2
