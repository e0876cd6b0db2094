"""
Shared fixtures and hypothesis strategies for the homweyl and weyl-cli tests
"""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from homweyl.algebra import AlgebraCtx, WeylPoly
from homweyl.verifier import SuiteConfig

settings.register_profile(
    'homweyl',
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile('homweyl')

WITNESS_KS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))

# Small exact inputs keep the products cheap
scalars = st.fractions(min_value=-3, max_value=3, max_denominator=4)
monomials = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monomials, scalars, max_size=4).map(WeylPoly)
nonzero_polys = polys.filter(bool)
contexts = st.sampled_from(WITNESS_KS).map(AlgebraCtx)
deformed_contexts = st.sampled_from(WITNESS_KS[1:]).map(AlgebraCtx)


@pytest.fixture
def cfg() -> SuiteConfig:
    """A fixed suite configuration independent of HOMWEYL_* environment variables"""
    return SuiteConfig(
        degree_bound=6,
        numerators=(-3, 3),
        denominators=(1, 2),
        rng_seed=20190514,
        trials=20,
        k_witnesses=WITNESS_KS,
        candidate_cap=100000,
        deformation_order=10,
    )


@pytest.fixture(params=WITNESS_KS, ids=lambda k: f"k={k}")
def ctx(request) -> AlgebraCtx:
    return AlgebraCtx(request.param)
