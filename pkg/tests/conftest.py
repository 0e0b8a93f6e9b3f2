from fractions import Fraction

from hypothesis import strategies as st

from specres.compositions import compositions
from specres.series import Series

fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5))


@st.composite
def free_series(draw, order=4, constant=None):
    """Random series in the free algebra with words of weight equal to their grade."""
    terms = {}
    for n in range(1, order + 1):
        for p in compositions(n):
            if draw(st.booleans()):
                terms[n, p] = draw(fractions)
    c = draw(fractions) if constant is None else Fraction(constant)
    if c:
        terms[0, ()] = c
    return Series(order, terms)


@st.composite
def scalar_series(draw, order=5, constant=None):
    coeffs = [draw(fractions) for _ in range(order)]
    c = draw(fractions) if constant is None else constant
    return Series.scalar(order, coeffs, constant=c)
