"""
Application constants and default numerical settings
"""

# Tolerance tiers
ALG_TOL = 1e-12          # closed-form algebra
SERIES_TOL = 1e-8        # truncated series identities
SAMPLE_TOL = 1e-2        # Monte-Carlo diameter estimates
IDENTITY_TOL = 1e-10     # algebra batteries on random triples

# Degeneracy thresholds
ZERO_THRESHOLD = 1e-300
POLE_THRESHOLD = 1e-12
REAL_POINT_THRESHOLD = 1e-12
UNIT_TOL = 1e-12
CONTACT_TOL = 1e-8
SYMMETRIZATION_RESIDUE = 1e-13
VANISHING_TOL = 1e-12
INEQUALITY_SLACK = 1e-9
POINTWISE_TOL = 1e-9      # pointwise identities on sampled points

# Series defaults
DEFAULT_DEGREE = 64
DEFAULT_SAMPLES = 1000
ALGEBRA_SAMPLE_FACTOR = 10
RANDOM_SERIES_DECAY = 0.5

# Finite differences
FD_STEP = 1e-4
DIRECTIONAL_FD_STEP = 1e-5
FD_CROSSCHECK_TOL = 1e-3
DIRECTIONAL_FD_TOL = 1e-6

# Diameter sampling
DIAMETER_DIRECTIONS = 512
DIAMETER_RADIAL_POINTS = 64
MONOTONICITY_NOISE = 1e-3

# Argument principle
DEFAULT_CONTOUR_NODES = 4096
MIN_CONTOUR_NODES = 64
COUNT_GUARD = 0.05
CONTOUR_ZERO_THRESHOLD = 1e-8
SLICE_INDEPENDENCE_TOL = 1e-6

# Verification suites in canonical order
SUITE_NAMES = ["algebra", "series", "schwarz", "quaternion", "diameters", "zeros", "growth"]
ALL_SUITES = "all"

# Defaults read by the CLI
DEFAULT_SEED = 42
DEFAULT_WORKERS = 1
DEFAULT_LOG_LEVEL = "WARNING"


# ANSI color constants
class Colors:
    """ANSI color code constants for logging"""
    CYAN = '\033[36m'      # Debug
    WHITE = '\033[0m'      # Info/Default
    YELLOW = '\033[33m'    # Warning
    RED = '\033[31m'       # Error
    MAGENTA = '\033[35m'   # Critical
    GREEN = '\033[32m'     # Success
    RESET = '\033[0m'      # Reset to default
