"""
Special functions, stable log-domain reductions and Gaussian sampling.

All functions are pure. Array arguments are handled element-wise, so the estimators can
feed whole blocks of Monte Carlo samples through them.
"""
import math

from gettext import gettext as _

import numpy as np
from scipy.special import logsumexp

from apsk_bounds.app import settings
from apsk_bounds.app.models.stream import RandomStreamSpec


SERIES_TERMS = 64
ASYMPTOTIC_TERMS = 30


class NumericsError(ValueError):
    """
    Exception to signal an argument outside the domain of a numerical routine.
    """

    def __init__(self, function, detail, *args, **kwargs):
        """
        Exception to signal an argument outside the domain of a numerical routine.
        """
        super().__init__("{}: {}".format(function, detail), *args, **kwargs)


def _log_i0_series(x):
    # I0(x) = sum_k (x^2/4)^k / (k!)^2, all terms positive.
    quarter_square = 0.25 * x * x
    term = np.ones_like(x)
    total = np.zeros_like(x)
    for k in range(1, SERIES_TERMS + 1):
        term = term * quarter_square / (k * k)
        total += term
    return np.log1p(total)


def _log_i0_asymptotic(x):
    # I0(x) ~ e^x / sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k)
    inverse = 1.0 / (8.0 * x)
    term = np.ones_like(x)
    total = np.zeros_like(x)
    for k in range(1, ASYMPTOTIC_TERMS + 1):
        term = term * (2 * k - 1) ** 2 * inverse / k
        total += term
    return x - 0.5 * np.log(2.0 * math.pi * x) + np.log1p(total)


def log_bessel_i0(x):
    """
    Natural logarithm of the modified Bessel function of the first kind of order zero.

    The power series is used below settings.LOG_BESSEL_SERIES_LIMIT and the asymptotic
    expansion above it. Both are accurate to better than 1e-10 relative at the seam and
    neither overflows, so arguments up to 1e8 and beyond are fine.

    Args:
        x (float or numpy.ndarray): Non-negative, finite argument(s).

    Returns:
        float or numpy.ndarray: ln I0(x), with the shape of ``x``.

    Raises:
        NumericsError: If any argument is negative or not finite.

    """
    values = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(values)):
        raise NumericsError("log_bessel_i0", _("argument must be finite"))
    if np.any(values < 0):
        raise NumericsError("log_bessel_i0", _("argument must be non-negative"))

    flat = np.atleast_1d(values)
    result = np.empty_like(flat)
    small = flat < settings.LOG_BESSEL_SERIES_LIMIT
    result[small] = _log_i0_series(flat[small])
    result[~small] = _log_i0_asymptotic(flat[~small])
    if values.ndim == 0:
        return float(result[0])
    return result.reshape(values.shape)


def log_sum_exp(values, axis=None):
    """
    Compute ln(sum(exp(values))) without overflow.

    The maximum is shifted out before exponentiating. -inf entries are allowed and
    contribute nothing.

    Args:
        values (array_like): Finite reals or -inf. Must not be empty.
        axis (int): Reduce along this axis only. Default reduces everything.

    Returns:
        float or numpy.ndarray: The reduction.

    Raises:
        NumericsError: If ``values`` is empty or contains NaN or +inf.

    """
    array = np.asarray(values, dtype=float)
    if array.size == 0 or (axis is not None and array.shape[axis] == 0):
        raise NumericsError("log_sum_exp", _("no values to reduce"))
    if np.isnan(array).any() or np.isposinf(array).any():
        raise NumericsError("log_sum_exp", _("values must be finite or -inf"))
    if array.ndim == 1 and array.shape[0] == 1:
        return float(array[0])
    with np.errstate(divide="ignore"):
        result = logsumexp(array, axis=axis)
    if np.ndim(result) == 0:
        return float(result)
    return result


def sample_complex_gaussian(stream, count, variance_per_component):
    """
    Draw circularly symmetric complex Gaussian noise.

    Args:
        stream (RandomStreamSpec or numpy.random.Generator): Where the samples come from.
            A RandomStreamSpec always starts at the beginning of its stream; a Generator
            continues from its current position.
        count (int): Number of samples, at least 1.
        variance_per_component (float): Variance of the real and of the imaginary part.

    Returns:
        numpy.ndarray: ``count`` complex samples.

    Raises:
        NumericsError: On a non-positive count or variance.

    """
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise NumericsError("sample_complex_gaussian", _("count must be a positive integer"))
    if not math.isfinite(variance_per_component) or variance_per_component <= 0:
        raise NumericsError(
            "sample_complex_gaussian", _("variance must be finite and positive")
        )
    if isinstance(stream, RandomStreamSpec):
        generator = stream.generator()
    elif isinstance(stream, np.random.Generator):
        generator = stream
    else:
        raise TypeError(_("Expected a RandomStreamSpec or a numpy Generator."))
    parts = generator.standard_normal((int(count), 2))
    scale = math.sqrt(variance_per_component)
    return scale * parts[:, 0] + 1j * (scale * parts[:, 1])

