"""
Django settings for the simplicial toolkit project.

For more information on this file, see
https://docs.djangoproject.com/en/6.0/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/6.0/ref/settings/
"""

from pathlib import Path
import os
from dotenv import load_dotenv


# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent
load_dotenv(BASE_DIR / ".env")


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY", 'django-insecure-toolkit-local-only-key')

DEBUG = os.getenv("DJANGO_DEBUG", "False").lower() in ("true", "1", "yes")
ALLOWED_HOSTS = [h.strip() for h in os.getenv("DJANGO_ALLOWED_HOSTS", "").split(",") if h.strip()]

# Application definition

INSTALLED_APPS = [
    'django.contrib.admin',
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'django.contrib.sessions',
    'django.contrib.messages',
    'django.contrib.staticfiles',

    # local apps
    'core',
    'complexes',
    'homology',
    'regularity',
    'connectivity',
    'theorems',
    'cli',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.contrib.sessions.middleware.SessionMiddleware',
    'django.middleware.common.CommonMiddleware',
    'django.middleware.csrf.CsrfViewMiddleware',
    'django.contrib.auth.middleware.AuthenticationMiddleware',
    'django.contrib.messages.middleware.MessageMiddleware',
    'django.middleware.clickjacking.XFrameOptionsMiddleware',
]

ROOT_URLCONF = 'config.urls'

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [
                "django.template.context_processors.debug",
                "django.template.context_processors.request",
                "django.contrib.auth.context_processors.auth",
                "django.contrib.messages.context_processors.messages",
            ],
        },
    },
]

WSGI_APPLICATION = 'config.wsgi.application'


# Database
# Verification records only. PostgreSQL when POSTGRES_DB is configured,
# a local SQLite file otherwise.

if os.environ.get("POSTGRES_DB"):
    DATABASES = {
        "default": {
            "ENGINE": "django.db.backends.postgresql",
            "NAME": os.environ.get("POSTGRES_DB"),
            "USER": os.environ.get("POSTGRES_USER", "toolkituser"),
            "PASSWORD": os.environ.get("POSTGRES_PASSWORD", ""),
            "HOST": os.environ.get("POSTGRES_HOST", "127.0.0.1"),
            "PORT": os.environ.get("POSTGRES_PORT", "5432"),
        }
    }
else:
    DATABASES = {
        'default': {
            'ENGINE': 'django.db.backends.sqlite3',
            'NAME': BASE_DIR / 'db.sqlite3',
        }
    }

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
        'LOCATION': 'toolkit-default',
    },
    # restriction homology lattices, one entry per (complex, field)
    'lattices': {
        'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
        'LOCATION': 'toolkit-lattices',
        'TIMEOUT': None,
        'OPTIONS': {'MAX_ENTRIES': 64},
    },
}


# Internationalization
# https://docs.djangoproject.com/en/6.0/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True


STATIC_URL = '/static/'
STATIC_ROOT = BASE_DIR / 'staticfiles'


# Logging

TOOLKIT_LOG_LEVEL = os.getenv("TOOLKIT_LOG_LEVEL", "INFO").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        app: {"handlers": ["console"], "level": TOOLKIT_LOG_LEVEL, "propagate": False}
        for app in ("core", "complexes", "homology", "regularity", "connectivity", "theorems", "cli")
    },
}


# Toolkit
# Every value below can be overridden from the environment (or .env).

TOOLKIT_FIELD_PRIMES = [
    int(p) for p in os.getenv("TOOLKIT_FIELD_PRIMES", "2,3").split(",") if p.strip()
]
TOOLKIT_ENUMERATION_CAP = int(os.getenv("TOOLKIT_ENUMERATION_CAP", "22"))
TOOLKIT_HARD_CAP = 26
TOOLKIT_JOBS = int(os.getenv("TOOLKIT_JOBS", "1"))
TOOLKIT_CHUNK_BITS = int(os.getenv("TOOLKIT_CHUNK_BITS", "14"))
TOOLKIT_BRUTEFORCE_CAP = int(os.getenv("TOOLKIT_BRUTEFORCE_CAP", "14"))
TOOLKIT_RANDOM_CAP = 12
TOOLKIT_EPSILON_EXPONENT = int(os.getenv("TOOLKIT_EPSILON_EXPONENT", "40"))
TOOLKIT_DECIMAL_PRECISION = int(os.getenv("TOOLKIT_DECIMAL_PRECISION", "50"))
TOOLKIT_REPORT_SCHEMA = BASE_DIR / "cli" / "schemas" / "verification_report.schema.json"
