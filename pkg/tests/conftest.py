import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from nullkit.ring import GaloisField, Integers, IntegersMod

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("NULLKIT_HYPOTHESIS_EXAMPLES", 60)),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

SMALL_RINGS = [
    Integers(),
    IntegersMod(4),
    IntegersMod(6),
    IntegersMod(12),
    IntegersMod(15),
    GaloisField(2),
    GaloisField(3),
    GaloisField(5),
    GaloisField(2, 2),
    GaloisField(2, 3),
    GaloisField(3, 2),
]

FINITE_RINGS = [R for R in SMALL_RINGS if R.size is not None]

rings = st.sampled_from(SMALL_RINGS)


def elements_of(R, bound=6):
    if R.size is None:
        return st.integers(-bound, bound)
    return st.integers(0, R.size - 1)
