import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hopfcheck.scalars import FieldSpec, Matrix  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=25,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=10,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

QQ = FieldSpec("rational")
FIELDS = [QQ, FieldSpec("gf", 3), FieldSpec("gf", 5), FieldSpec("gf", 7)]
fields = st.sampled_from(FIELDS)
small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def matrices(draw, F, nrows, ncols):
    return Matrix(F, [[draw(small_ints) for _ in range(ncols)] for _ in range(nrows)])


@st.composite
def symmetric(draw, F, n):
    m = draw(matrices(F, n, n))
    return m + m.T


@st.composite
def invertible(draw, F, n):
    m = draw(matrices(F, n, n))
    from hypothesis import assume
    assume(m.det() != 0)
    return m
