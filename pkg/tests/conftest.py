from fractions import Fraction

import pytest

from copulacheck import make_monotone


@pytest.fixture
def g_id():
    """Identity cdf on [0, 1]."""
    return make_monotone([(0, 0, 0), (1, 1, 1)])


@pytest.fixture
def g_bern():
    """Bernoulli(1/2) cdf: atoms of mass 1/2 at 0 and 1."""
    return make_monotone([(0, 0, Fraction(1, 2)), (1, Fraction(1, 2), 1)])


@pytest.fixture
def g_flat():
    """Continuous cdf, strictly rising except for a flat piece on [1/2, 3/2]."""
    return make_monotone(
        [
            (0, 0, 0),
            (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
            (Fraction(3, 2), Fraction(1, 2), Fraction(1, 2)),
            (2, 1, 1),
        ]
    )
