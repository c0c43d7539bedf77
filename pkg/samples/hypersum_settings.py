"""
Sample settings for the hypersum Django app.

Use with ``DJANGO_SETTINGS_MODULE=samples.hypersum_settings hypersum verify all``.
"""
from typing import Any, Dict, List

SECRET_KEY = 'secret'

INSTALLED_APPS = [
    'hypersum.apps.HypersumConfig',
]  # type: List[str]

USE_TZ = True

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
        },
    },
    'loggers': {
        'hypersum': {
            'handlers': ['console'],
            'level': 'INFO',
        },
    },
}  # type: Dict[str, Any]

# Series order of formal power series identities.
HYPERSUM_SERIES_ORDER = 64
# Width of enclosures of convergent series, rational text format.
HYPERSUM_EPS = '1/1000000000000000000000000000000'
HYPERSUM_SEED = 0
# TEXT or STRUCTURED (one JSON record per line)
HYPERSUM_OUTPUT_FORMAT = 'TEXT'
HYPERSUM_WORKERS = 4
HYPERSUM_IDENTITIES = ['gosper2', 'case1', 'case2', 'lmm1', 'lmm2', '3tr1', '3tr2', 'lmm3', 'family', 'proofpath',
                       'algorithm', 'binom']

# Grids
HYPERSUM_ALPHA_NUMERATOR_MAX = 20
HYPERSUM_ALPHA_DENOMINATOR_MAX = 9
HYPERSUM_K_MAX = 12
HYPERSUM_M_MAX = 10
HYPERSUM_LMM3_K_MAX = 8
HYPERSUM_LMM3_M_MAX = 8
HYPERSUM_FAMILY_Q_MAX = 6
HYPERSUM_FAMILY_M_MAX = 2
HYPERSUM_RANDOM_DRAWS = 100
HYPERSUM_CONVERGENT_DRAWS = 50
HYPERSUM_ALGORITHM_DRAWS = 200
HYPERSUM_TELESCOPING_DEPTH = 50
