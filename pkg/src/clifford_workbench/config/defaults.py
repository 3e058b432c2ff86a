"""Default configuration values."""

# Environment variable naming the default report directory
OUTPUT_DIR_ENV = "CLIFFORD_WORKBENCH_OUT"
DEFAULT_OUTPUT_DIR = "./reports"

# Clifford exponential
SERIES_TOLERANCE = 1e-17
MAX_SERIES_TERMS = 200

# Symmetric products are brute-force permutation sums
MAX_SYMMETRIC_FACTORS = 8

# Finite differences
DEFAULT_STEP = 1e-3
FD_CONSTANT = 10.0  # residual tolerance C * h**2

# Quadrature
DEFAULT_REFINEMENTS = [2, 3, 4]
POLAR_NODES_PER_LEVEL = 8
CIRCLE_NODES_PER_LEVEL = 16
RADIAL_NODES_PER_LEVEL = 6
FACE_NODES_PER_LEVEL = 6
CLEARANCE_FACTOR = 2.0

# Bergman kernel calibration
BERGMAN_CALIBRATION_REFINEMENT = 6
CALIBRATION_DIAGNOSTIC_THRESHOLD = 1e-3

# Lambda-differentiability fit
FIT_RADIUS = 1e-2
FIT_EXACT_FLOOR = 1e-12

# Suites
DEFAULT_SEED = 20240101
DEFAULT_SAMPLES = 10_000
RUNTIME_BUDGET_SECONDS = 600.0

DEFAULT_TOLERANCES: dict[str, float] = {
    "algebra": 1e-12,
    "exp_homomorphism": 1e-10,
    "symbolic": 0.0,
    "fd_order": 0.2,
    "fd_residual": 1e-6,
    "helmholtz": 1e-5,
    "round_trip": 1e-12,
    "group_law": 1e-12,
    "cauchy_theorem": 1e-6,
    "cauchy_constant": 1e-12,
    "cauchy_interior": 1e-3,
    "cauchy_exterior": 1e-4,
    "deformation": 1e-10,
    "mean_value_constant": 1e-14,
    "mean_value": 1e-5,
    "bergman_constant": 5e-3,
    "bergman_linear": 1e-2,
    "bergman_symmetry": 1e-10,
    "taylor": 1e-5,
    "restriction": 1e-12,
    "member_order": 1.9,
    "nonmember_order": 1.2,
    "fit_uniqueness": 1e-6,
}
