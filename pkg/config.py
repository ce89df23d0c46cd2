"""
Configuration file for the k-Dyck turn statistics toolkit
"""
import logging
import os

logger = logging.getLogger(__name__)


# Application settings
APP_NAME = "kdyck"
APP_VERSION = "1.0.0"

# Logging
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
LOG_LEVEL = logging.WARNING
LOG_FILE_ENV = 'KDYCK_LOG_FILE'

# Oracle settings
DEFAULT_ORACLE_BOUND = 10 ** 7  # Refuse to enumerate more paths than this
ORACLE_BOUND_ENV = 'KDYCK_ORACLE_BOUND'

# Output settings
DECIMAL_DIGITS = 12  # Significant digits of the approximate average column
DEFAULT_METHOD = 'closed'
DEFAULT_FORMAT = 'json'
METHODS = ['closed', 'series', 'decomposition', 'oracle']
FORMATS = ['json', 'csv']
KINDS = ['min', 'max', 'osc']
CSV_HEADER = ['k', 'N', 's', 'kind', 'sum', 'count', 'average_exact', 'average_decimal']

# Verify sweep defaults
VERIFY_K_MAX = 3
VERIFY_N_MAX = 6
VERIFY_Z_ORDER = 30
VERIFY_W_ORDER = 6
VERIFY_MAX_LEVEL = 5  # Highest start level h for the right-part checks
VERIFY_WORKERS = 4

# Exit codes
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BOUND = 3
EXIT_DISAGREEMENT = 4


def get_oracle_bound() -> int:
    """Work bound for enumeration, overridable through KDYCK_ORACLE_BOUND"""
    raw = os.environ.get(ORACLE_BOUND_ENV)
    if raw is None or raw.strip() == '':
        return DEFAULT_ORACLE_BOUND
    try:
        bound = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer", ORACLE_BOUND_ENV, raw)
        return DEFAULT_ORACLE_BOUND
    if bound < 1:
        logger.warning("Ignoring %s=%r: must be positive", ORACLE_BOUND_ENV, raw)
        return DEFAULT_ORACLE_BOUND
    return bound


def get_log_file():
    """Optional log file path from KDYCK_LOG_FILE"""
    path = os.environ.get(LOG_FILE_ENV)
    return path or None
