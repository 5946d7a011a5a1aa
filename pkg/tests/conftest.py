from fractions import Fraction

from hypothesis import strategies as st

from qcarlitz.ratfunc import FieldQ

small_ints = st.integers(min_value=-5, max_value=5)
coeff_lists = st.lists(small_ints, min_size=1, max_size=4)
rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)


@st.composite
def field_q(draw):
    num = draw(coeff_lists)
    den = draw(coeff_lists.filter(lambda cs: any(cs)))
    return FieldQ.from_coeffs(num, den)


@st.composite
def nonzero_field_q(draw):
    x = draw(field_q())
    return x if not x.is_zero() else FieldQ(Fraction(1, 3))
