"""
Default parameters of the estimators and of the command line tool.

Every value can be read by importing this module. A handful of them can be overridden by
environment variables, which are read once at import time:

    APSK_BOUNDS_SEED            default seed for every command
    APSK_BOUNDS_SAMPLES         default Monte Carlo sample count per estimate
    APSK_BOUNDS_WORKERS         default number of worker threads
    APSK_BOUNDS_ORACLE_BUDGET   largest M**L the brute force oracle will enumerate
"""
import os

from gettext import gettext as _


def _env_int(name, default, minimum=0):
    value = os.environ.get(name)
    if value is None or value.strip() == "":
        return default
    try:
        parsed = int(value, 0)
    except ValueError:
        raise ValueError(
            _("Environment variable {name}='{value}' is not an integer.").format(
                name=name, value=value
            )
        )
    if parsed < minimum:
        raise ValueError(
            _("Environment variable {name}={value} must be at least {minimum}.").format(
                name=name, value=parsed, minimum=minimum
            )
        )
    return parsed


DEFAULT_SEED = _env_int("APSK_BOUNDS_SEED", 7)
DEFAULT_SAMPLES = _env_int("APSK_BOUNDS_SAMPLES", 200000, minimum=1)
DEFAULT_WORKERS = _env_int("APSK_BOUNDS_WORKERS", 1, minimum=1)
ORACLE_BUDGET = _env_int("APSK_BOUNDS_ORACLE_BUDGET", 65536, minimum=1)

DEFAULT_AVG_ENERGY = 1.0

# Random numbers are always drawn in blocks of this many samples, block b on its own
# substream. Chunks handed to workers are whole numbers of blocks.
STREAM_BLOCK_SIZE = 4096
DEFAULT_CHUNK_SIZE = 16 * STREAM_BLOCK_SIZE

# ln I0(x) switches from the power series to the asymptotic expansion here.
LOG_BESSEL_SERIES_LIMIT = 20.0

# Trapezoidal marginalization of the carrier phase in the quadrature likelihood.
QUADRATURE_START_NODES = 256
QUADRATURE_TOLERANCE = 1e-8
QUADRATURE_MAX_NODES = 65536

CSV_SIGNIFICANT_DIGITS = 6

# Ring ratios whose capacity lies within this many combined standard errors of the
# best one are reported as tied.
ARGMAX_TIE_SIGMAS = 2.0
