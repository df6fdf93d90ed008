"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

perms_a = st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


@st.composite
def perms_b(draw, lo=1, hi=8):
    n = draw(st.integers(lo, hi))
    e = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return tuple(-x if s else x for x, s in zip(e, signs))
