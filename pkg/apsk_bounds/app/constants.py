NO_SAMPLES_MESSAGE = (
    "A Monte Carlo estimate needs at least one sample.\n"
    "Published estimates should use 1000 samples or more.\n"
)

# Phase models for the unknown carrier phase of the bounds:
THETA_DISCRETE = "discrete"
THETA_CONTINUOUS = "continuous"
THETA_MODELS = (THETA_DISCRETE, THETA_CONTINUOUS)

# Evaluation modes for the I(theta; R | S) term:
BLOCK_TERM_LITERAL = "literal"
BLOCK_TERM_EXACT = "exact"
BLOCK_TERM_MODES = (BLOCK_TERM_LITERAL, BLOCK_TERM_EXACT)

# Likelihood paths of the brute force oracle:
LIKELIHOOD_CLOSED_FORM = "closed_form"
LIKELIHOOD_QUADRATURE = "quadrature"
LIKELIHOODS = (LIKELIHOOD_CLOSED_FORM, LIKELIHOOD_QUADRATURE)

# Child stream ids of a bounds row, one per information term.
# Terms of one bound never share random numbers.
TERM_STREAMS = {
    "coherent": 0,
    "i_theta_r_discrete": 1,
    "i_theta_r_continuous": 2,
    "i_theta_rs_discrete": 3,
    "i_theta_rs_continuous": 4,
    "oracle": 5,
}

MIN_BLOCK_LEN = 2

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_ESTIMATOR = 3

BOUNDS_COLUMNS = (
    "snr_db",
    "L",
    "coherent_bits",
    "coherent_se",
    "upper_bits",
    "upper_se",
    "lower_bits",
    "lower_raw_bits",
    "lower_se",
    "i_theta_r_disc",
    "i_theta_r_cont",
    "i_theta_rs_disc",
    "i_theta_rs_cont",
    "oracle_bits",
    "oracle_se",
)

COHERENT_COLUMNS = ("snr_db", "capacity_bits", "capacity_se")

SWEEP_COLUMNS = ("snr_db", "r", "capacity_bits", "capacity_se", "is_argmax")

COMPARISON_COLUMNS = ("constellation", "snr_db", "capacity_bits", "capacity_se")

ORACLE_COLUMNS = ("snr_db", "L", "oracle_bits", "oracle_se")

CONSTELLATION_COLUMNS = ("index", "ring", "phase_index", "real", "imag", "amplitude", "phase")
