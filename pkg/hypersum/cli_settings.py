"""Django settings of the hypersum console script."""
from typing import Any, Dict, List

SECRET_KEY = 'hypersum-cli'

INSTALLED_APPS = [
    'hypersum.apps.HypersumConfig',
]  # type: List[str]

USE_TZ = True

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        'hypersum': {
            'handlers': ['stderr'],
            'level': 'WARNING',
            'propagate': False,
        },
    },
}  # type: Dict[str, Any]
