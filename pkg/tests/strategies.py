"""
Hypothesis strategies shared by the property tests
"""
from hypothesis import strategies as st


@st.composite
def turn_queries(draw, k_max=3, n_max=6):
    """Valid (k, N, s) triples"""
    k = draw(st.integers(min_value=1, max_value=k_max))
    n_up = draw(st.integers(min_value=1, max_value=n_max))
    s = draw(st.integers(min_value=1, max_value=n_up))
    return k, n_up, s
