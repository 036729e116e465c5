from __future__ import annotations

import itertools

import pytest

from qv.arith import GroundRing, Laurent
from qv.errors import NotAUnit
from qv.quandle import AlexanderQuandle, check_axioms, check_table


def units(R):
    return [x for x in R.elements() if R.is_unit(x)]


@pytest.mark.parametrize("p,h", [(2, (1, 1, 1)), (3, (1, 0, 1)), (3, (1, 2, 1)), (3, (1, 1)),
                                 (2, (1, 1, 0, 1))])
def test_axioms_hold_for_every_unit(p, h):
    R = GroundRing(p, h)
    for w in units(R):
        assert check_axioms(AlexanderQuandle(R, w)).ok


def test_dihedral_quandle(R3, F3):
    assert R3.op((0,), (1,)) == (2,)
    for x, y in itertools.product(F3.element_list, repeat=2):
        assert R3.op(x, y) == F3.add(F3.scale(x, 2), F3.scale(y, 2))


def test_zero_omega_is_rejected(F4):
    with pytest.raises(NotAUnit):
        AlexanderQuandle(F4, F4.zero)


def test_zero_divisor_omega_is_rejected(S9):
    with pytest.raises(NotAUnit):
        AlexanderQuandle(S9, S9.add(S9.generator, S9.one))


@pytest.mark.parametrize("fixture", ["Q4", "Q9", "QS9", "R3"])
def test_unop_inverts_op(fixture, request):
    Q = request.getfixturevalue(fixture)
    E = Q.ring.element_list
    for x, y in itertools.product(E, repeat=2):
        assert Q.unop(Q.op(x, y), y) == x
        assert Q.op(Q.unop(x, y), y) == x
        assert Q.op(x, x) == x


def test_symbolic_op_is_not_reduced(Q4):
    got = Q4.op_symbolic(Laurent.const(0, 2), Laurent.const(1, 2))
    assert got == Laurent.parse("1-w", 2)
    assert Q4.reduce(got) == Q4.op(Q4.ring.zero, Q4.ring.one)


def test_corrupted_table_reports_witness(Q4):
    table = [row[:] for row in Q4.op_table]
    table[1][2], table[1][3] = table[1][3], table[1][2]
    rep = check_table(table)
    assert not rep.ok and rep.witness is not None
    table = [row[:] for row in Q4.op_table]
    table[2][2] = 3
    rep = check_table(table)
    assert rep.axiom == "(i)" and rep.witness == (2,)
