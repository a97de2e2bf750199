# flake8: noqa
from .bounds import bounds_curve, bounds_row, lower_bound, upper_bound
from .capacity import (
    BlockLengthError,
    check_block_len,
    coherent_capacity,
    phase_info_continuous,
    phase_info_given_s,
    phase_info_r0,
    psk_phase_info_discrete,
)
from .montecarlo import EstimatorError, run_monte_carlo
from .oracle import (
    OracleBudgetError,
    check_oracle_budget,
    draw_block_samples,
    exact_block_ami,
    log_likelihood_block,
    log_likelihood_block_quadrature,
)
from .sweep import capacity_comparison, ring_ratio_sweep
