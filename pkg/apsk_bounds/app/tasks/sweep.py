import logging
import math

from concurrent.futures import ThreadPoolExecutor
from gettext import gettext as _

from apsk_bounds.app import settings
from apsk_bounds.app.models import (
    ChannelParams,
    ComparisonRow,
    SweepResult,
    SweepRow,
    build_apsk,
)
from apsk_bounds.app.tasks.capacity import coherent_capacity


log = logging.getLogger(__name__)


def _map_cells(function, cells, workers):
    if workers == 1:
        return [function(cell) for cell in cells]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, cells))


def _tie_interval(ratios, estimates, best_index):
    best = estimates[best_index]
    tied = [
        ratio
        for ratio, estimate in zip(ratios, estimates)
        if best.mean_bits - estimate.mean_bits
        <= settings.ARGMAX_TIE_SIGMAS * math.hypot(best.std_error, estimate.std_error)
    ]
    return min(tied), max(tied)


def ring_ratio_sweep(spec):
    """
    Coherent capacity of APSK(N,P) over a grid of ring ratios and SNRs.

    Constellations are built at E_s = 1, r = 1 included (coincident rings are allowed here).
    With common random numbers every ratio of SNR ``snr_grid_db[j]`` uses stream
    ``mc.child(j)``, otherwise cell (j, i) uses ``mc.child(j, i)``.

    Args:
        spec (SweepSpec): The grid.

    Returns:
        SweepResult: Rows SNR-major, ratios ascending, with the per-SNR argmax marked and
            the interval of ratios within ARGMAX_TIE_SIGMAS combined standard errors of it.

    """
    mc = spec.mc
    constellations = [
        build_apsk(spec.n_rings, spec.phases_per_ring, r, allow_degenerate=True)
        for r in spec.r_grid
    ]
    cells = [
        (snr_index, r_index)
        for snr_index in range(len(spec.snr_grid_db))
        for r_index in range(len(spec.r_grid))
    ]
    log.info(
        _("Ring ratio sweep: APSK({},{}), {} ratios x {} SNR points").format(
            spec.n_rings, spec.phases_per_ring, len(spec.r_grid), len(spec.snr_grid_db)
        )
    )

    def run_cell(cell):
        snr_index, r_index = cell
        if spec.common_random_numbers:
            cell_mc = mc.child(snr_index)
        else:
            cell_mc = mc.child(snr_index, r_index)
        channel = ChannelParams.from_snr_db(spec.snr_grid_db[snr_index])
        return coherent_capacity(constellations[r_index], channel, cell_mc.serial())

    estimates = _map_cells(run_cell, cells, mc.workers)

    rows = []
    argmax = {}
    tie_intervals = {}
    width = len(spec.r_grid)
    for snr_index, snr_db in enumerate(spec.snr_grid_db):
        slice_ = estimates[snr_index * width:(snr_index + 1) * width]
        best_index = max(range(width), key=lambda i: slice_[i].mean_bits)
        argmax[snr_db] = spec.r_grid[best_index]
        tie_intervals[snr_db] = _tie_interval(spec.r_grid, slice_, best_index)
        log.debug(
            _("{:g} dB: best r={:g}, tied over [{:g}, {:g}]").format(
                snr_db, argmax[snr_db], *tie_intervals[snr_db]
            )
        )
        for r_index, estimate in enumerate(slice_):
            rows.append(
                SweepRow(
                    snr_db=snr_db,
                    ring_ratio=spec.r_grid[r_index],
                    estimate=estimate,
                    is_argmax=r_index == best_index,
                )
            )
    log.info(
        _("Ring ratio sweep done: best r per SNR {}").format(
            ", ".join("{:g} dB: {:g}".format(snr, ratio) for snr, ratio in argmax.items())
        )
    )
    return SweepResult(rows=rows, argmax=argmax, tie_intervals=tie_intervals)


def capacity_comparison(constellations, snr_grid_db, mc):
    """
    Coherent capacities of several APSK constellations over an SNR grid.

    All constellations share stream ``mc.child(j)`` at SNR ``snr_grid_db[j]``, so duplicate
    entries give identical rows and differences are sharpened.

    Args:
        constellations (list): (n_rings, phases_per_ring, ring_ratio) tuples.
        snr_grid_db (list): E_s/N_0 values in dB.
        mc (McConfig): Monte Carlo configuration.

    Returns:
        list: ComparisonRow instances, constellation-major in input order.

    """
    snr_grid_db = [float(snr) for snr in snr_grid_db]
    if not constellations or not snr_grid_db:
        raise ValueError(_("capacity_comparison needs constellations and SNR values."))
    built = [build_apsk(n, p, r) for n, p, r in constellations]
    cells = [
        (c_index, snr_index)
        for c_index in range(len(built))
        for snr_index in range(len(snr_grid_db))
    ]
    log.info(
        _("Capacity comparison: {} at {} SNR points").format(
            ", ".join(c.label for c in built), len(snr_grid_db)
        )
    )

    def run_cell(cell):
        c_index, snr_index = cell
        constellation = built[c_index]
        channel = ChannelParams.from_snr_db(snr_grid_db[snr_index], constellation.avg_energy)
        estimate = coherent_capacity(constellation, channel, mc.child(snr_index).serial())
        return ComparisonRow(
            label=constellation.label,
            n_rings=constellation.n_rings,
            phases_per_ring=constellation.phases_per_ring,
            ring_ratio=constellation.ring_ratio,
            snr_db=snr_grid_db[snr_index],
            estimate=estimate,
        )

    rows = _map_cells(run_cell, cells, mc.workers)
    log.info(_("Capacity comparison done: {} rows").format(len(rows)))
    return rows
