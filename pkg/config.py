import os

# --- Configuration ---
# Budgets for the exhaustive suites. Override via environment variables.
SYM_NMAX = int(os.getenv("OGS_SYM_NMAX", 8))
ALT_NMAX = int(os.getenv("OGS_ALT_NMAX", 9))
# Degree 10 for Alt_n (1,814,400 elements) is only run with --force.
ALT_FORCE_NMAX = 10
IDENTITY_NMAX = int(os.getenv("OGS_IDENTITY_NMAX", 12))
GENERATOR_NMAX = int(os.getenv("OGS_GENERATOR_NMAX", 16))
MAJ_NMAX = int(os.getenv("OGS_MAJ_NMAX", 7))
TEXT_ROUNDTRIP_NMAX = int(os.getenv("OGS_TEXT_ROUNDTRIP_NMAX", 6))
TABLE_BUDGET = int(os.getenv("OGS_TABLE_BUDGET", 7))

FUZZ_TRIALS = int(os.getenv("OGS_FUZZ_TRIALS", 10000))
FUZZ_MAX_LEN = int(os.getenv("OGS_FUZZ_MAX_LEN", 30))
SEED = int(os.getenv("OGS_SEED", 1))

WORKERS = int(os.getenv("OGS_WORKERS", 1))

# Largest degree the HTTP API accepts for verify requests.
API_NMAX = int(os.getenv("OGS_API_NMAX", 8))

LOG_LEVEL = os.getenv("OGS_LOG_LEVEL", "WARNING").upper()

# Conventions fixed by the conventions oracle (verify --suite conventions).
# The oracle fails if its findings disagree with what is recorded here.
MAJ_CONVENTION = "left-to-right"
REL_TT_GENERAL_FORM = "inverse"
