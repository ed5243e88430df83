import random

from hypothesis import strategies as st

from dualpath import GSequence


@st.composite
def g_with_src_len(draw, max_len=40, terminal=False):
    """A valid g-sequence together with a compatible source length.

    With terminal=True the path reads the whole source before the last write.
    """
    src_len = draw(st.integers(min_value=1, max_value=max_len))
    tgt_len = draw(st.integers(min_value=1, max_value=max_len))
    values = sorted(
        draw(st.lists(st.integers(1, src_len), min_size=tgt_len, max_size=tgt_len))
    )
    if terminal:
        values[-1] = src_len
    return GSequence(tuple(values)), src_len


def random_g(rng: random.Random, max_len=40, terminal=False):
    """Seeded counterpart of g_with_src_len for explicit fuzz loops."""
    src_len = rng.randint(1, max_len)
    tgt_len = rng.randint(1, max_len)
    values = sorted(rng.randint(1, src_len) for _ in range(tgt_len))
    if terminal:
        values[-1] = src_len
    return GSequence(tuple(values)), src_len
