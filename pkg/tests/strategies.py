"""Hypothesis strategies shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from descartes_signs.poly import Polynomial

small_ints = st.integers(min_value=-12, max_value=12)

scalars = st.builds(
    Fraction,
    st.integers(min_value=-30, max_value=30),
    st.integers(min_value=1, max_value=12),
)

nonzero_scalars = scalars.filter(lambda x: x != 0)

positive_scalars = st.builds(
    Fraction,
    st.integers(min_value=1, max_value=30),
    st.integers(min_value=1, max_value=12),
)

# mostly small values with plenty of zeros, so the "only zeros between" clause matters
sparse_scalars = st.one_of(st.just(Fraction(0)), scalars)


def polys(max_degree=8, min_degree=0):
    return st.lists(sparse_scalars, min_size=min_degree, max_size=max_degree).flatmap(
        lambda body: nonzero_scalars.map(lambda lead: Polynomial(body + [lead]))
    )


@st.composite
def step_sequences(draw, max_degree=12):
    """a_0..a_n with n >= 1, zero sum and nonzero last entry."""
    head = draw(st.lists(sparse_scalars, min_size=1, max_size=max_degree))
    last = -sum(head)
    if last == 0:
        head = head + [Fraction(1)]
        last = -sum(head)
    return head + [last]
