MIN_VERTICES = 2
MAX_VERTICES = 64

DEFAULT_OMEGA_CAP = 2 ** 20
OMEGA_CAP_ENV = "STABILITY_BUDGET"

HAMILTONIAN_PATH_MAX_N = 12
ENUMERATION_MAX_N = 8
CANONICAL_MAX_N = 7
EXHAUSTIVE_COVER_MAX_SETS = 20

DEFAULT_VERIFY_NMAX = 6
DEFAULT_TREE_NMAX = 9
DEFAULT_RANDOM_MAX_N = 16
DEFAULT_SEED = 0

REPORT_VERSION = 1
