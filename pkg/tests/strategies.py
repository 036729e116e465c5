"""Shared hypothesis strategies for braid words."""

from __future__ import annotations

from hypothesis import strategies as st

from qv.diagram import NEGATIVE, POSITIVE, SINGULAR, BraidWord, Letter


@st.composite
def braids(draw, min_strands=2, max_strands=3, max_len=6, singular=False):
    n = draw(st.integers(min_strands, max_strands))
    kinds = [POSITIVE, NEGATIVE] + ([SINGULAR] if singular else [])
    letters = draw(st.lists(st.builds(Letter, st.integers(1, n - 1), st.sampled_from(kinds)),
                            max_size=max_len))
    return BraidWord(n, tuple(letters))


def small_quandles():
    """Dihedral R_3, F_4 with w the generator, and the order-9 non-field ring."""
    from qv.arith import GroundRing
    from qv.quandle import AlexanderQuandle
    F3, F4, S9 = GroundRing(3, (1, 1)), GroundRing(2, (1, 1, 1)), GroundRing(3, (1, 2, 1))
    return {"R3": AlexanderQuandle(F3, (2,)), "Q4": AlexanderQuandle(F4, F4.generator),
            "QS9": AlexanderQuandle(S9, S9.generator)}


QUANDLES = small_quandles()
