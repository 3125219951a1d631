from .base import *

DEBUG = False

# Long verification sweeps run unattended; keep the console quiet.
TOOLKIT_LOG_LEVEL = os.getenv("TOOLKIT_LOG_LEVEL", "WARNING").upper()
for _logger in LOGGING["loggers"].values():
    _logger["level"] = TOOLKIT_LOG_LEVEL
