"""
Django settings for the MKX project.

Django hosts the motzkin library for its settings, system checks, management commands and test
runner; there is no database and no HTTP surface.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""

import sys
from pathlib import Path

import environ

env = environ.Env(
    DEBUG=(bool, False),
    MOTZKIN_THREADS=(int, 1),
    MOTZKIN_SEED=(int, 1729),
    MOTZKIN_SLOW_TESTS=(bool, False),
    MOTZKIN_LOG_LEVEL=(str, 'WARNING'),
)

BASE_DIR = Path(__file__).resolve().parent.parent
PROJECT_DIR = Path(__file__).resolve().parent

try:
    command = sys.argv[1]
except IndexError:
    command = 'help'

# Test runs (manage.py test or pytest) never pick up a local .env.
if command != 'test' and 'pytest' not in sys.modules:
    environ.Env.read_env(BASE_DIR / '.env')

DEBUG = env('DEBUG')

SECRET_KEY = env('SECRET_KEY', default='mkx-local-only-not-a-secret')

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'MKX.apps.MKXAppConfig',
    'motzkin',
]

DATABASES = {}

# -- Motzkin library ----
MOTZKIN = {
    'THREADS': env('MOTZKIN_THREADS'),
    'SEED': env('MOTZKIN_SEED'),
    'GENERIC_S': env.list('MOTZKIN_GENERIC_S', default=['5/7', '2/3', '3']),
    'SLOW_TESTS': env('MOTZKIN_SLOW_TESTS'),
}

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
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'motzkin': {
            'handlers': ['console'],
            'level': env('MOTZKIN_LOG_LEVEL'),
            'propagate': False,
        },
    },
}

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True
