# core/conf.py
"""
Access to the TOOLKIT_* settings with the documented defaults.

Library functions take explicit keyword arguments; when those are None the
value comes from here, so the code also works under bare settings.
"""

from django.conf import settings

DEFAULTS = {
    'TOOLKIT_FIELD_PRIMES': [2, 3],
    'TOOLKIT_ENUMERATION_CAP': 22,
    'TOOLKIT_HARD_CAP': 26,
    'TOOLKIT_JOBS': 1,
    'TOOLKIT_CHUNK_BITS': 14,
    'TOOLKIT_BRUTEFORCE_CAP': 14,
    'TOOLKIT_RANDOM_CAP': 12,
    'TOOLKIT_EPSILON_EXPONENT': 40,
    'TOOLKIT_DECIMAL_PRECISION': 50,
    'TOOLKIT_REPORT_SCHEMA': None,
}


def toolkit_setting(name, override=None):
    """Return `override` when given, else the configured (or default) value"""
    if override is not None:
        return override
    return getattr(settings, name, DEFAULTS[name])
