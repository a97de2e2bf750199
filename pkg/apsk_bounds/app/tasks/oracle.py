import itertools
import logging
import math

from gettext import gettext as _

import numpy as np

from apsk_bounds.app import settings
from apsk_bounds.app.constants import LIKELIHOOD_CLOSED_FORM, LIKELIHOODS
from apsk_bounds.app.models import BlockSample, OracleEstimate
from apsk_bounds.app.numerics import log_bessel_i0, log_sum_exp, sample_complex_gaussian
from apsk_bounds.app.tasks.capacity import check_block_len
from apsk_bounds.app.tasks.montecarlo import EstimatorError, run_monte_carlo


log = logging.getLogger(__name__)

LN2 = math.log(2.0)
TWO_PI = 2.0 * math.pi

# Upper limit for the number of complex entries of one likelihood batch.
BATCH_ELEMENTS = 2 ** 20


class OracleBudgetError(ValueError):
    """
    Exception to signal that the input enumeration of the oracle is too large.
    """

    def __init__(self, size, block_len, budget, *args, **kwargs):
        """
        Exception to signal that the input enumeration of the oracle is too large.
        """
        super().__init__(
            "M^L = {}^{} = {} exceeds the oracle budget of {}.".format(
                size, block_len, size ** block_len, budget
            ),
            *args,
            **kwargs
        )
        self.enumeration = size ** block_len
        self.budget = budget


def _check_pair(r, s, sigma_sq):
    r = np.asarray(r, dtype=complex)
    s = np.asarray(s, dtype=complex)
    if r.ndim == 0 or s.ndim == 0 or r.shape[-1] != s.shape[-1]:
        raise ValueError(
            _("r and s must have the same block length, got shapes {} and {}.").format(
                r.shape, s.shape
            )
        )
    if r.shape[-1] < 1:
        raise ValueError(_("Blocks must hold at least one symbol."))
    if not (math.isfinite(sigma_sq) and sigma_sq > 0):
        raise ValueError(_("sigma_sq must be finite and positive, got {}.").format(sigma_sq))
    return r, s


def _log_likelihood(energy, correlation, block_len, sigma_sq):
    # energy = sum |r_l|^2 + |s_l|^2, correlation = |sum r_l s_l*|
    return (
        -block_len * math.log(TWO_PI * sigma_sq)
        - energy / (2.0 * sigma_sq)
        + log_bessel_i0(correlation / sigma_sq)
    )


def log_likelihood_block(r, s, sigma_sq):
    """
    ln P(R | S) of the block phase channel, the carrier phase integrated out.

    ``-L ln(2 pi sigma^2) - sum(|r_l|^2 + |s_l|^2) / (2 sigma^2) + ln I0(|sum r_l s_l*| / sigma^2)``

    Args:
        r (array_like): Received block(s), last axis of length L.
        s (array_like): Transmitted block(s), broadcastable against ``r``.
        sigma_sq (float): Noise variance per real dimension.

    Returns:
        float or numpy.ndarray: The log-likelihood, one value per block.

    """
    r, s = _check_pair(r, s, sigma_sq)
    block_len = r.shape[-1]
    energy = np.sum(np.abs(r) ** 2, axis=-1) + np.sum(np.abs(s) ** 2, axis=-1)
    correlation = np.abs(np.sum(r * np.conj(s), axis=-1))
    value = _log_likelihood(energy, correlation, block_len, sigma_sq)
    if np.ndim(value) == 0:
        return float(value)
    return value


def log_likelihood_block_quadrature(
    r,
    s,
    sigma_sq,
    nodes=settings.QUADRATURE_START_NODES,
    tolerance=settings.QUADRATURE_TOLERANCE,
):
    """
    ln P(R | S) with the carrier phase marginalized numerically.

    Averages the coherent Gaussian likelihood over an equispaced theta grid (periodic
    trapezoidal rule) and doubles the grid until the result moves by less than
    ``tolerance``. This does not use the Bessel closed form and serves as its check.

    Args:
        r (array_like): Received block(s), last axis of length L.
        s (array_like): Transmitted block(s), broadcastable against ``r``.
        sigma_sq (float): Noise variance per real dimension.
        nodes (int): Initial number of theta nodes.
        tolerance (float): Absolute convergence threshold on the log-likelihood.

    Returns:
        float or numpy.ndarray: The log-likelihood, one value per block.

    Raises:
        EstimatorError: If settings.QUADRATURE_MAX_NODES is reached without convergence.

    """
    r, s = _check_pair(r, s, sigma_sq)
    r, s = np.broadcast_arrays(r, s)
    block_len = r.shape[-1]

    def evaluate(count):
        rotation = np.exp(1j * TWO_PI * np.arange(count) / count)
        distance = np.sum(
            np.abs(r[..., None, :] - s[..., None, :] * rotation[:, None]) ** 2, axis=-1
        )
        log_density = -block_len * math.log(TWO_PI * sigma_sq) - distance / (2.0 * sigma_sq)
        return log_sum_exp(log_density, axis=-1) - math.log(count)

    current = evaluate(nodes)
    while nodes < settings.QUADRATURE_MAX_NODES:
        nodes *= 2
        refined = evaluate(nodes)
        if np.max(np.abs(refined - current)) < tolerance:
            return float(refined) if np.ndim(refined) == 0 else refined
        current = refined
    raise EstimatorError(
        "log_likelihood_block_quadrature",
        _("no convergence with {} theta nodes").format(nodes),
    )


def draw_block_samples(constellation, block_len, channel, generator, count):
    """
    Draw ``count`` uses of the block channel with uniform inputs and a uniform phase.

    Args:
        constellation (Constellation): Input alphabet.
        block_len (int): Symbols per block L.
        channel (ChannelParams): Noise level.
        generator (numpy.random.Generator): Source of randomness.
        count (int): Number of blocks.

    Returns:
        BlockSample: The batch.

    """
    indices = generator.integers(constellation.size, size=(count, block_len))
    s = constellation.points[indices]
    theta = generator.uniform(0.0, TWO_PI, size=count)
    noise = sample_complex_gaussian(generator, count * block_len, channel.sigma_sq).reshape(
        count, block_len
    )
    received = s * np.exp(1j * theta)[:, None] + noise
    return BlockSample(indices=indices, s=s, theta=theta, noise=noise, received=received)


def check_oracle_budget(constellation, block_len, budget=None):
    """Raise OracleBudgetError if M**L exceeds the budget."""
    budget = settings.ORACLE_BUDGET if budget is None else budget
    if constellation.size ** block_len > budget:
        raise OracleBudgetError(constellation.size, block_len, budget)


def _oracle_kernel(constellation, block_len, channel, known_reference, likelihood):
    sigma_sq = channel.sigma_sq
    size = constellation.size
    points = constellation.points
    free = block_len - 1 if known_reference else block_len
    enumeration = np.array(list(itertools.product(range(size), repeat=free)), dtype=int)
    enumeration = enumeration.reshape(size ** free, free)
    candidates = points[enumeration]
    candidate_energy = np.sum(np.abs(candidates) ** 2, axis=1)
    n_candidates = candidates.shape[0]
    per_row = n_candidates * block_len
    if likelihood != LIKELIHOOD_CLOSED_FORM:
        per_row *= settings.QUADRATURE_START_NODES
    batch = max(1, BATCH_ELEMENTS // per_row)

    def closed_form(received, reference):
        if known_reference:
            reference_term = received[:, 0] * np.conj(reference)
            correlation = reference_term[:, None] + received[:, 1:] @ np.conj(candidates).T
            energy = (np.abs(reference) ** 2)[:, None] + candidate_energy[None, :]
        else:
            correlation = received @ np.conj(candidates).T
            energy = np.broadcast_to(candidate_energy[None, :], correlation.shape)
        energy = energy + np.sum(np.abs(received) ** 2, axis=1)[:, None]
        return _log_likelihood(energy, np.abs(correlation), block_len, sigma_sq)

    def quadrature(received, reference):
        if known_reference:
            rows = reference.shape[0]
            blocks = np.concatenate(
                [
                    np.broadcast_to(reference[:, None, None], (rows, n_candidates, 1)),
                    np.broadcast_to(candidates[None], (rows,) + candidates.shape),
                ],
                axis=2,
            )
        else:
            blocks = candidates[None]
        return log_likelihood_block_quadrature(received[:, None, :], blocks, sigma_sq)

    evaluate = closed_form if likelihood == LIKELIHOOD_CLOSED_FORM else quadrature

    def kernel(generator, count):
        sample = draw_block_samples(constellation, block_len, channel, generator, count)
        sent = sample.indices[:, 1:] if known_reference else sample.indices
        sent_index = np.ravel_multi_index(tuple(sent.T), (size,) * free)
        reference = sample.s[:, 0]
        values = np.empty(count)
        for start in range(0, count, batch):
            stop = min(start + batch, count)
            log_likelihood = evaluate(sample.received[start:stop], reference[start:stop])
            rows = np.arange(stop - start)
            chosen = log_likelihood[rows, sent_index[start:stop]]
            marginal = log_sum_exp(log_likelihood, axis=1) - math.log(n_candidates)
            values[start:stop] = (chosen - marginal) / LN2
        return values

    return kernel


def exact_block_ami(
    constellation,
    block_len,
    channel,
    mc,
    budget=None,
    known_reference=True,
    likelihood=LIKELIHOOD_CLOSED_FORM,
):
    """
    Brute force Monte Carlo estimate of the noncoherent block AMI.

    Blocks are drawn with uniform inputs, a continuous uniform carrier phase and Gaussian
    noise; P(R|S) is the Bessel closed form and P(R) the uniform mixture over every
    candidate input block, summed with log_sum_exp.

    With ``known_reference`` (the default) the first symbol of a block is the overlapped
    reference, known from the previous block: the mixture runs over the M**(L-1)
    continuations and the estimate is I(s_1..s_{L-1}; R | s_0). Without it all M**L
    blocks are enumerated.

    Args:
        constellation (Constellation): Input alphabet.
        block_len (int): Symbols per block L, >= 2.
        channel (ChannelParams): Noise level.
        mc (McConfig): Monte Carlo configuration.
        budget (int): Largest admissible M**L, default settings.ORACLE_BUDGET.
        known_reference (bool): Condition on the reference symbol.
        likelihood (str): "closed_form" or "quadrature" (numerical theta marginal).

    Returns:
        OracleEstimate: Per-symbol value I_nc / (L - 1) plus the per-block value.

    Raises:
        BlockLengthError: If block_len < 2.
        OracleBudgetError: If M**L exceeds the budget.

    """
    block_len = check_block_len(block_len)
    check_oracle_budget(constellation, block_len, budget)
    if likelihood not in LIKELIHOODS:
        raise ValueError(
            _("likelihood must be one of {}, got {!r}.").format(LIKELIHOODS, likelihood)
        )

    log.info(
        _("Oracle: {} L={} at {:g} dB, reference known: {}").format(
            constellation.label, block_len, channel.snr_db, known_reference
        )
    )
    kernel = _oracle_kernel(constellation, block_len, channel, known_reference, likelihood)
    estimate = run_monte_carlo("exact_block_ami", kernel, mc)
    overlap = block_len - 1
    result = OracleEstimate(
        mean_bits=estimate.mean_bits / overlap,
        std_error=estimate.std_error / overlap,
        samples_used=estimate.samples_used,
        block_len=block_len,
        block_bits=estimate.mean_bits,
        block_std_error=estimate.std_error,
    )
    log.info(
        _("Oracle done: {:.4f} +/- {:.4f} bit/symbol").format(result.mean_bits, result.std_error)
    )
    return result
