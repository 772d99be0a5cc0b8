# ----------------------------------
# Exit codes
# ----------------------------------

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_UNCERTIFIED = 3
EXIT_DEGENERATE_QUERY = 4
EXIT_INCONSISTENT = 5

# ----------------------------------
# Logging
# ----------------------------------

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
LOG_LEVEL = "INFO"

# ----------------------------------
# Numeric fallback
# ----------------------------------

NUMERIC_TOLERANCE = 1e-8

# ----------------------------------
# Oracle: finite-field enumeration
# ----------------------------------

FQ_MAX = 257
ENUMERATION_CAP = 67000
COEFFICIENT_BOUND = 9
INSTANCE_RETRIES = 20

# ----------------------------------
# Algorithms
# ----------------------------------

BASE_LOCUS_WINDOW = 4
MINOR_STABILIZATION = 2
MINOR_EXHAUSTIVE_LIMIT = 64
MINOR_SAMPLE_CAP = 200
GENERIC_FIBER_SAMPLES = 3
DEFAULT_SEED = 0
# None -> number of source variables
LMAX_CAP = None

# ----------------------------------
# Congruence
# ----------------------------------

LINE_VARIABLES = ("tb", "t")
NEGATIVE_SECTION_JUSTIFICATION = "geometrically reduced base curve"

# ----------------------------------
# Paths
# ----------------------------------

SETTINGS_PATH = "settings.json"
CACHE_DIR = ".fiberrep_cache"
REPORT_PATH = "report.json"
