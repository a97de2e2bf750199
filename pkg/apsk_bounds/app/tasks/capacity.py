import logging
import math

from gettext import gettext as _

import numpy as np

from apsk_bounds.app.constants import (
    BLOCK_TERM_EXACT,
    BLOCK_TERM_LITERAL,
    BLOCK_TERM_MODES,
    MIN_BLOCK_LEN,
    THETA_DISCRETE,
    THETA_MODELS,
)
from apsk_bounds.app.models import CapacityEstimate, build_apsk, psk_points
from apsk_bounds.app.numerics import log_bessel_i0, log_sum_exp, sample_complex_gaussian
from apsk_bounds.app.tasks.montecarlo import run_monte_carlo


log = logging.getLogger(__name__)

LN2 = math.log(2.0)
TWO_PI = 2.0 * math.pi


class BlockLengthError(ValueError):
    """
    Exception to signal a block length below the one-symbol overlap minimum.
    """

    def __init__(self, block_len, minimum=MIN_BLOCK_LEN, *args, **kwargs):
        """
        Exception to signal a block length below the one-symbol overlap minimum.
        """
        super().__init__(
            "Block length L={} is not supported, the minimum block length is {}.".format(
                block_len, minimum
            ),
            *args,
            **kwargs
        )


def check_block_len(block_len, minimum=MIN_BLOCK_LEN):
    """Raise BlockLengthError unless ``block_len`` is an integer >= ``minimum``."""
    if isinstance(block_len, bool) or int(block_len) != block_len or block_len < minimum:
        raise BlockLengthError(block_len, minimum)
    return int(block_len)


def check_theta_model(theta_model):
    """Raise ValueError for unknown phase models."""
    if theta_model not in THETA_MODELS:
        raise ValueError(
            _("theta_model must be one of {}, got {!r}.").format(THETA_MODELS, theta_model)
        )


def _coherent_kernel(points, sigma_sq):
    # log2 M - log2 sum_j exp((|n|^2 - |s_k + n - s_j|^2) / (2 sigma^2))
    size = points.shape[0]
    log2_size = math.log2(size)

    def kernel(generator, count):
        sent = generator.integers(size, size=count)
        noise = sample_complex_gaussian(generator, count, sigma_sq)
        received = points[sent] + noise
        distances = np.abs(received[:, None] - points[None, :]) ** 2
        exponents = (np.abs(noise)[:, None] ** 2 - distances) / (2.0 * sigma_sq)
        return log2_size - log_sum_exp(exponents, axis=1) / LN2

    return kernel


def _psk_kernel(phases, sigma_sq, amplitudes):
    # Coherent P-PSK capacity with a per-sample amplitude; ``amplitudes(generator, count)``
    # draws the amplitudes before the symbols.
    unit = psk_points(phases, 1.0)
    log2_size = math.log2(phases)

    def kernel(generator, count):
        amplitude = amplitudes(generator, count)
        sent = generator.integers(phases, size=count)
        noise = sample_complex_gaussian(generator, count, sigma_sq)
        received = amplitude * unit[sent] + noise
        candidates = amplitude[:, None] * unit[None, :]
        distances = np.abs(received[:, None] - candidates) ** 2
        exponents = (np.abs(noise)[:, None] ** 2 - distances) / (2.0 * sigma_sq)
        return log2_size - log_sum_exp(exponents, axis=1) / LN2

    return kernel


def _continuous_phase_kernel(sigma_sq, amplitudes):
    # log2 p(r | theta) / p(r) for a uniform continuous theta.
    def kernel(generator, count):
        amplitude = amplitudes(generator, count)
        theta = generator.uniform(0.0, TWO_PI, size=count)
        noise = sample_complex_gaussian(generator, count, sigma_sq)
        received = amplitude * np.exp(1j * theta) + noise
        energy = np.abs(received) ** 2 + amplitude ** 2 - np.abs(noise) ** 2
        bessel = log_bessel_i0(amplitude * np.abs(received) / sigma_sq)
        return (energy / (2.0 * sigma_sq) - bessel) / LN2

    return kernel


def _fixed_amplitude(amplitude):
    def draw(generator, count):
        return np.full(count, amplitude)

    return draw


def _block_norm_amplitude(ring_amplitudes, block_len):
    # ||A|| of a block of i.i.d. uniformly chosen rings.
    def draw(generator, count):
        rings = generator.integers(ring_amplitudes.shape[0], size=(count, block_len))
        return np.sqrt(np.sum(ring_amplitudes[rings] ** 2, axis=1))

    return draw


def coherent_capacity(constellation, channel, mc):
    """
    Uniform-input mutual information of a constellation over the coherent AWGN channel.

    The raw Monte Carlo mean is returned; it is not clamped to [0, log2 M].

    Args:
        constellation (Constellation): The signal set.
        channel (ChannelParams): Noise level.
        mc (McConfig): Monte Carlo configuration.

    Returns:
        CapacityEstimate: C* in bits per symbol.

    """
    estimate = run_monte_carlo(
        "coherent_capacity",
        _coherent_kernel(constellation.points, channel.sigma_sq),
        mc,
    )
    log.debug(
        _("C*({}, {:g} dB) = {:.6f} +- {:.2g}").format(
            constellation.label, channel.snr_db, estimate.mean_bits, estimate.std_error
        )
    )
    return estimate


def psk_phase_info_discrete(amplitude, phases, channel, mc):
    """
    I(theta; r0 | a0 = amplitude) for theta uniform over ``phases`` discrete values.

    Phase rotations do not change mutual information, so this is the coherent capacity of
    a P-PSK constellation at the given amplitude.

    Args:
        amplitude (float): Ring amplitude, >= 0.
        phases (int): Number of phases P, >= 2.
        channel (ChannelParams): Noise level.
        mc (McConfig): Monte Carlo configuration.

    Returns:
        CapacityEstimate: The phase information in bits.

    """
    if isinstance(phases, bool) or int(phases) != phases or phases < 2:
        raise ValueError(_("phases must be an integer >= 2, got {!r}.").format(phases))
    amplitude = float(amplitude)
    if not math.isfinite(amplitude) or amplitude < 0:
        raise ValueError(_("amplitude must be finite and >= 0, got {}.").format(amplitude))
    if amplitude == 0.0:
        # The output does not depend on theta at all.
        return CapacityEstimate.exact(0.0)
    return coherent_capacity(build_apsk(1, int(phases), 1.0, amplitude ** 2), channel, mc)


def phase_info_continuous(amplitude, channel, mc):
    """
    I(theta; r0 | a0 = amplitude) for theta uniform on [0, 2 pi).

    This is the capacity of the coherent continuous-phase (Wyner) channel at that
    amplitude. Per sample the integrand is
    ``(|r|^2 + a^2 - |n|^2) / (2 sigma^2 ln 2) - log2 I0(a |r| / sigma^2)``.

    Args:
        amplitude (float): Ring amplitude, >= 0.
        channel (ChannelParams): Noise level.
        mc (McConfig): Monte Carlo configuration.

    Returns:
        CapacityEstimate: The phase information in bits.

    """
    amplitude = float(amplitude)
    if not math.isfinite(amplitude) or amplitude < 0:
        raise ValueError(_("amplitude must be finite and >= 0, got {}.").format(amplitude))
    return run_monte_carlo(
        "phase_info_continuous",
        _continuous_phase_kernel(channel.sigma_sq, _fixed_amplitude(amplitude)),
        mc,
    )


def _per_ring_average(constellation, channel, theta_model, mc):
    if theta_model == THETA_DISCRETE:
        terms = [
            psk_phase_info_discrete(amplitude, constellation.phases_per_ring, channel, mc.child(k))
            for k, amplitude in enumerate(constellation.ring_amplitudes)
        ]
    else:
        terms = [
            phase_info_continuous(amplitude, channel, mc.child(k))
            for k, amplitude in enumerate(constellation.ring_amplitudes)
        ]
    weight = 1.0 / constellation.n_rings
    return CapacityEstimate.weighted_sum(terms, [weight] * len(terms))


def phase_info_r0(constellation, channel, theta_model, mc):
    """
    I(theta; r0): the phase information carried by the reference symbol.

    Averages the single-symbol phase information over the rings with uniform weight 1/N.

    Args:
        constellation (Constellation): The signal set.
        channel (ChannelParams): Noise level.
        theta_model (str): "discrete" (P phases) or "continuous".
        mc (McConfig): Monte Carlo configuration; ring k uses ``mc.child(k)``.

    Returns:
        CapacityEstimate: The phase information in bits.

    """
    check_theta_model(theta_model)
    return _per_ring_average(constellation, channel, theta_model, mc)


def phase_info_given_s(
    constellation,
    block_len,
    channel,
    theta_model,
    mc,
    mode=BLOCK_TERM_LITERAL,
    allow_unit_block=False,
):
    """
    I(theta; R | S): the phase information of a whole block when all symbols are known.

    Knowing S, the L outputs combine into one observation of theta at an SNR increased by
    a factor of L. In "literal" mode every ring amplitude is evaluated at noise variance
    sigma^2 / L and the results are averaged with weight 1/N. In "exact" mode the
    effective amplitude ``sqrt(sum a_l^2)`` of an i.i.d. ring vector is drawn per sample
    and evaluated at the original noise variance.

    Args:
        constellation (Constellation): The signal set.
        block_len (int): Block length L, >= 2.
        channel (ChannelParams): Noise level of a single symbol.
        theta_model (str): "discrete" (P phases, upper bound) or "continuous" (lower bound).
        mc (McConfig): Monte Carlo configuration.
        mode (str): "literal" or "exact".
        allow_unit_block (bool): Accept L = 1, where the term reduces to I(theta; r0).

    Returns:
        CapacityEstimate: The phase information in bits.

    """
    check_theta_model(theta_model)
    block_len = check_block_len(block_len, 1 if allow_unit_block else MIN_BLOCK_LEN)
    if mode not in BLOCK_TERM_MODES:
        raise ValueError(_("mode must be one of {}, got {!r}.").format(BLOCK_TERM_MODES, mode))

    if mode == BLOCK_TERM_LITERAL:
        return _per_ring_average(
            constellation, channel.with_block_gain(block_len), theta_model, mc
        )

    draw = _block_norm_amplitude(constellation.ring_amplitudes, block_len)
    if theta_model == THETA_DISCRETE:
        kernel = _psk_kernel(constellation.phases_per_ring, channel.sigma_sq, draw)
    else:
        kernel = _continuous_phase_kernel(channel.sigma_sq, draw)
    return run_monte_carlo("phase_info_given_s[{}]".format(BLOCK_TERM_EXACT), kernel, mc)
