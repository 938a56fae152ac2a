"""
Configuration constants for ctforge.
"""

# ======================== Configuration ========================
ENGINE_VERSION = "0.1.0"
SCHEMA_VERSION = "ctforge.certificate.v1"
REPORT_SCHEMA_VERSION = "ctforge.report.v1"
DEFAULT_STORE_FILE = "certificates.data"

# Oracle and normal-form window, in multiples of the Coxeter number h.
WINDOW_FACTOR = 4
# Width of the window the identity suites sweep, in multiples of h.
VERIFY_WINDOW_FACTOR = 3

# Exhaustive search limits. CTFORGE_BUDGET overrides both when set.
TRIVEXT_SEARCH_BUDGET = 66
NAKAYAMA_SEARCH_BUDGET = 60
BUDGET_ENV_VAR = "CTFORGE_BUDGET"

# Nakayama numeric grid.
NAKAYAMA_MAX_MULTIPLICITY = 4
NAKAYAMA_MAX_SIMPLES = 12


# ======================== Exit Codes ========================
class ExitCodes:
    """Process exit codes of the ctforge command."""

    OK = 0
    USAGE = 2
    VERIFICATION = 3


# ======================== Dynkin Families ========================
class Families:
    """Simply laced Dynkin families and their rank bounds."""

    A = "A"
    D = "D"
    E = "E"

    MIN_RANK = {A: 1, D: 4, E: 6}
    MAX_RANK = {E: 8}

    ALL = [A, D, E]


# ======================== Search Routes ========================
class Routes:
    """How a classification verdict was reached."""

    SEARCH = "search"
    PERIODICITY = "periodicity"
    TYPE_D_OBSTRUCTION = "type-d-obstruction"
    TYPE_E_OBSTRUCTION = "type-e-obstruction"
    NAKAYAMA_ARITHMETIC = "nakayama-arithmetic"
    NOT_ATTEMPTED = "not-attempted"
    EXAMPLE = "example"


# ======================== Check Kinds ========================
class CheckKinds:
    """Kinds of entries in a certificate transcript."""

    RIGIDITY = "rigidity"
    LEFT_WITNESS = "left-witness"
    RIGHT_WITNESS = "right-witness"
    PERIODICITY = "periodicity"
    PROJECTIVES = "projectives"
    OBSTRUCTION = "obstruction"
    ORBIT_IDENTITY = "orbit-identity"
