from hypothesis import strategies as st

from ultraposets.order import validate_poset


@st.composite
def posets(draw, max_n=5):
    """Random naturally labelled posets: a strict relation above the diagonal, then closed."""
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if draw(st.booleans())]
    return validate_poset(n, pairs)
