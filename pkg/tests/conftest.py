from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from h4poly.golden import GoldenScalar

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def scalars(draw, sqrt2=True):
    parts = [draw(small) for _ in range(4)]
    if not sqrt2:
        parts[2] = parts[3] = Fraction(0)
    return GoldenScalar(*parts)
