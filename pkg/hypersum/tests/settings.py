"""Django settings for unitests."""
from typing import List

from hypersum.tests.warnings import setup_warnings_filter

setup_warnings_filter()


SECRET_KEY = 'SECRET'

INSTALLED_APPS = [
    'hypersum.apps.HypersumConfig',
]  # type: List[str]

USE_TZ = True

# Small grids keep the test suite fast; tests override them where needed.
HYPERSUM_SERIES_ORDER = 24
HYPERSUM_EPS = '1/1000000000000'
HYPERSUM_ALPHA_NUMERATOR_MAX = 3
HYPERSUM_ALPHA_DENOMINATOR_MAX = 2
HYPERSUM_K_MAX = 4
HYPERSUM_M_MAX = 3
HYPERSUM_LMM3_K_MAX = 3
HYPERSUM_LMM3_M_MAX = 2
HYPERSUM_FAMILY_Q_MAX = 3
HYPERSUM_FAMILY_M_MAX = 1
HYPERSUM_RANDOM_DRAWS = 5
HYPERSUM_CONVERGENT_DRAWS = 3
HYPERSUM_ALGORITHM_DRAWS = 5
HYPERSUM_TELESCOPING_DEPTH = 12
