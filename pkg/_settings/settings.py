"""
Django settings for the p-means project.

Every value is read with python-decouple and has a default, so the commands
and the test suite run without a .env file.
"""

from pathlib import Path
import decouple

BASE_DIR = Path(__file__).resolve().parent.parent


# Claim harness
PMEAN_TOL = decouple.config("PMEAN_TOL", default=1e-12, cast=float)
PMEAN_SCAN_CHUNK = decouple.config("PMEAN_SCAN_CHUNK", default=64, cast=int)


# Celery configuration; scans run in-process unless a broker is configured
CELERY_BROKER_URL = decouple.config("CELERY_BROKER_URL", default="memory://")
CELERY_RESULT_BACKEND = decouple.config("CELERY_RESULT_BACKEND", default="cache+memory://")
CELERY_TASK_ALWAYS_EAGER = decouple.config("CELERY_TASK_ALWAYS_EAGER", default=True, cast=bool)
CELERY_TASK_EAGER_PROPAGATES = True

CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = decouple.config("DJANGO_SECRET_KEY", default="pmeans-local-only")

DEBUG = decouple.config("DEBUG", default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'quadrature',
    'special',
    'ptrig',
    'means',
    'inequalities',
]

# No models; nothing is persisted
DATABASES = {}


# Logging goes to stderr so command output stays deterministic

LOG_LEVEL = decouple.config("LOG_LEVEL", default="WARNING")

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['stderr'],
        'level': LOG_LEVEL,
    },
}


LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
