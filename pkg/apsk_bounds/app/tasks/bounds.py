import logging
import math

from concurrent.futures import ThreadPoolExecutor
from gettext import gettext as _

from apsk_bounds.app import settings
from apsk_bounds.app.constants import (
    BLOCK_TERM_LITERAL,
    TERM_STREAMS,
    THETA_CONTINUOUS,
    THETA_DISCRETE,
)
from apsk_bounds.app.models import BoundsRow, ChannelParams
from apsk_bounds.app.tasks.capacity import (
    check_block_len,
    coherent_capacity,
    phase_info_given_s,
    phase_info_r0,
)
from apsk_bounds.app.tasks.oracle import exact_block_ami


log = logging.getLogger(__name__)


def _coherent_term(constellation, channel, mc):
    return coherent_capacity(constellation, channel, mc.child(TERM_STREAMS["coherent"]))


def _theta_terms(constellation, block_len, channel, mc, theta_model, block_term):
    r0 = phase_info_r0(
        constellation, channel, theta_model, mc.child(TERM_STREAMS["i_theta_r_" + theta_model])
    )
    given_s = phase_info_given_s(
        constellation,
        block_len,
        channel,
        theta_model,
        mc.child(TERM_STREAMS["i_theta_rs_" + theta_model]),
        mode=block_term,
    )
    return r0, given_s


def _bound(coherent, r0, given_s, block_len):
    # C_c + [I(theta; r0) - I(theta; R | S)] / (L - 1)
    overlap = block_len - 1
    value = coherent.mean_bits + (r0.mean_bits - given_s.mean_bits) / overlap
    error = math.sqrt(
        coherent.std_error ** 2 + (r0.std_error ** 2 + given_s.std_error ** 2) / overlap ** 2
    )
    return value, error


def _upper_row(constellation, block_len, channel, mc, block_term, coherent):
    r0, given_s = _theta_terms(
        constellation, block_len, channel, mc, THETA_DISCRETE, block_term
    )
    upper, upper_se = _bound(coherent, r0, given_s, block_len)
    return BoundsRow(
        snr_db=channel.snr_db,
        block_len=block_len,
        coherent_bits=coherent.mean_bits,
        upper_bits=upper,
        term_i_theta_r_discrete=r0.mean_bits,
        term_i_theta_r_given_s_discrete=given_s.mean_bits,
        std_errors={
            "coherent": coherent.std_error,
            "upper": upper_se,
            "i_theta_r_discrete": r0.std_error,
            "i_theta_r_given_s_discrete": given_s.std_error,
        },
        block_term=block_term,
    )


def _lower_row(constellation, block_len, channel, mc, block_term, coherent):
    r0, given_s = _theta_terms(
        constellation, block_len, channel, mc, THETA_CONTINUOUS, block_term
    )
    lower_raw, lower_se = _bound(coherent, r0, given_s, block_len)
    if lower_raw < 0:
        log.warning(
            _("Raw lower bound {:.3g} at {:g} dB, L={} clamped to 0.").format(
                lower_raw, channel.snr_db, block_len
            )
        )
    return BoundsRow(
        snr_db=channel.snr_db,
        block_len=block_len,
        coherent_bits=coherent.mean_bits,
        lower_bits=max(0.0, lower_raw),
        lower_raw_bits=lower_raw,
        term_i_theta_r_continuous=r0.mean_bits,
        term_i_theta_r_given_s_continuous=given_s.mean_bits,
        std_errors={
            "coherent": coherent.std_error,
            "lower": lower_se,
            "i_theta_r_continuous": r0.std_error,
            "i_theta_r_given_s_continuous": given_s.std_error,
        },
        block_term=block_term,
    )


def upper_bound(constellation, block_len, channel, mc, block_term=BLOCK_TERM_LITERAL):
    """
    Upper bound on the effective noncoherent capacity.

    ``C_c + [I(theta; R) - I(theta; R | S)] / (L - 1)`` with theta uniform over the P
    phases of a ring.

    Args:
        constellation (Constellation): The signal set.
        block_len (int): Block length L, >= 2.
        channel (ChannelParams): Noise level.
        mc (McConfig): Monte Carlo configuration of the row; every term uses its own
            child stream.
        block_term (str): "literal" or "exact" evaluation of I(theta; R | S).

    Returns:
        BoundsRow: Row with the coherent and upper fields set.

    """
    block_len = check_block_len(block_len)
    log.info(
        _("Upper bound: {} L={} at {:g} dB").format(constellation.label, block_len, channel.snr_db)
    )
    coherent = _coherent_term(constellation, channel, mc)
    row = _upper_row(constellation, block_len, channel, mc, block_term, coherent)
    log.info(_("Upper bound done: {:.4f} bit/symbol").format(row.upper_bits))
    return row


def lower_bound(constellation, block_len, channel, mc, block_term=BLOCK_TERM_LITERAL):
    """
    Lower bound on the effective noncoherent capacity.

    ``C_c + [I(theta; r0) - I(theta; R | S)] / (L - 1)`` with a continuous uniform theta.
    The reported ``lower_bits`` is clamped at 0, ``lower_raw_bits`` is not.

    Args:
        constellation (Constellation): The signal set.
        block_len (int): Block length L, >= 2.
        channel (ChannelParams): Noise level.
        mc (McConfig): Monte Carlo configuration of the row.
        block_term (str): "literal" or "exact" evaluation of I(theta; R | S).

    Returns:
        BoundsRow: Row with the coherent and lower fields set.

    """
    block_len = check_block_len(block_len)
    log.info(
        _("Lower bound: {} L={} at {:g} dB").format(constellation.label, block_len, channel.snr_db)
    )
    coherent = _coherent_term(constellation, channel, mc)
    row = _lower_row(constellation, block_len, channel, mc, block_term, coherent)
    log.info(_("Lower bound done: {:.4f} bit/symbol").format(row.lower_bits))
    return row


def bounds_row(
    constellation,
    block_len,
    channel,
    mc,
    block_term=BLOCK_TERM_LITERAL,
    oracle_check=False,
    oracle_budget=None,
):
    """
    Both bounds at one operating point, optionally with the brute force oracle.

    The values equal those of upper_bound and lower_bound called with the same ``mc``.
    The oracle is only evaluated when M**L is within ``oracle_budget``.

    Returns:
        BoundsRow: The complete row.

    """
    block_len = check_block_len(block_len)
    coherent = _coherent_term(constellation, channel, mc)
    row = _upper_row(constellation, block_len, channel, mc, block_term, coherent).merge(
        _lower_row(constellation, block_len, channel, mc, block_term, coherent)
    )
    budget = settings.ORACLE_BUDGET if oracle_budget is None else oracle_budget
    if oracle_check and constellation.size ** block_len <= budget:
        oracle = exact_block_ami(
            constellation, block_len, channel, mc.child(TERM_STREAMS["oracle"]), budget=budget
        )
        row = row.with_oracle(oracle)
    return row


def bounds_curve(
    constellation,
    block_lens,
    snr_grid_db,
    mc,
    block_term=BLOCK_TERM_LITERAL,
    oracle_check=False,
    oracle_budget=None,
):
    """
    Bounds over a grid of block lengths and SNRs.

    Cell (i, j) of block length ``block_lens[i]`` and SNR ``snr_grid_db[j]`` runs on
    ``mc.child(i, j)``. Cells are computed on ``mc.workers`` threads and returned SNR-major
    (all block lengths of the first SNR first), independent of execution order.

    Args:
        constellation (Constellation): The signal set.
        block_lens (list): Block lengths, each >= 2.
        snr_grid_db (list): E_s/N_0 values in dB.
        mc (McConfig): Monte Carlo configuration.
        block_term (str): "literal" or "exact" evaluation of I(theta; R | S).
        oracle_check (bool): Add the brute force oracle where the budget allows.
        oracle_budget (int): Largest admissible M**L.

    Returns:
        list: One BoundsRow per (SNR, L).

    """
    block_lens = [check_block_len(block_len) for block_len in block_lens]
    snr_grid_db = [float(snr) for snr in snr_grid_db]
    if not block_lens or not snr_grid_db:
        raise ValueError(_("bounds_curve needs at least one block length and one SNR."))

    log.info(
        _("Bounds: {}, r={:g}, L={}, {} SNR points, {} samples per term").format(
            constellation.label,
            constellation.ring_ratio,
            block_lens,
            len(snr_grid_db),
            mc.samples,
        )
    )
    cells = [
        (l_index, snr_index)
        for snr_index in range(len(snr_grid_db))
        for l_index in range(len(block_lens))
    ]

    def run_cell(cell):
        l_index, snr_index = cell
        channel = ChannelParams.from_snr_db(snr_grid_db[snr_index], constellation.avg_energy)
        return bounds_row(
            constellation,
            block_lens[l_index],
            channel,
            mc.child(l_index, snr_index).serial(),
            block_term=block_term,
            oracle_check=oracle_check,
            oracle_budget=oracle_budget,
        )

    if mc.workers == 1:
        rows = [run_cell(cell) for cell in cells]
    else:
        with ThreadPoolExecutor(max_workers=mc.workers) as executor:
            rows = list(executor.map(run_cell, cells))

    log.info(
        _("Bounds: {} rows done, largest gap {:.4f} bit/symbol").format(
            len(rows), max(row.gap_bits for row in rows)
        )
    )
    return rows
