from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from liecohom.scalar import T, make_ratfunc

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


small_ints = st.integers(-5, 5)
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))


@st.composite
def polys(draw, max_deg=3, lo=-4, hi=4):
    return tuple(draw(st.lists(st.integers(lo, hi), min_size=1, max_size=max_deg + 1)))


@st.composite
def ratfuncs(draw):
    """Elements of Q(t): plain rationals or genuine rational functions."""
    num = draw(polys())
    den = draw(polys(max_deg=2).filter(lambda p: any(p)))
    return make_ratfunc(num, den)


scalars = st.one_of(rationals, ratfuncs(), st.just(T))


@st.composite
def rational_matrices(draw, max_rows=6, max_cols=6, entries=small_ints):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    return [[Fraction(draw(entries)) for _ in range(n)] for _ in range(m)]
