"""
Message constants for ctforge.
All user-facing status lines, error messages and format templates.
"""


# ======================== Success Messages ========================
class SuccessMessages:
    """Success message templates"""

    # Verification
    EXAMPLE_VERIFIED = "Verified {name}: {count} non-projective summands, d = {d}."
    NAKAYAMA_SIDE_VERIFIED = "Nakayama side verified for {name} over (a, n) = (1, {n})."
    ROUTES_AGREE = "Numeric and brute-force routes agree on (a, n) = ({a}, {n})."

    # Output
    WROTE_FILE = "Wrote {path}."
    STORED = "Stored {count} certificate(s) in {path}."


# ======================== Error Messages ========================
class ErrorMessages:
    """Error message templates"""

    # Diagrams and orientations
    UNKNOWN_FAMILY = "Unknown Dynkin family {family!r}; expected A, D or E."
    RANK_OUT_OF_RANGE = "Rank {rank} is not valid for type {family}: need {bound}."
    ORIENTATION_MISMATCH = "Arrows {arrows} do not orient the edges of {diagram}."
    WRONG_FAMILY = "Expected a diagram of type {expected}, got {got}."
    NOT_DYNKIN = "Coxeter transformation has no finite order; the quiver is not Dynkin."
    UNKNOWN_VERTEX = "Vertex {vertex} is not a vertex of {diagram}."

    # Linear algebra
    NOT_SQUARE = "Matrix is not square: row lengths {shape}."
    NOT_UNIMODULAR = "Matrix inverse is not integral."
    DIMENSION_MISMATCH = "Vector has {got} entries, expected {expected}."
    NOT_A_ROOT = "{dim_vector} is not the dimension vector of an indecomposable module."

    # Derived category
    NO_INJECTIVE_REACHED = "No injective reached from P_{vertex} within {steps} steps."
    TAU_PERIOD_BROKEN = "tau^h(P_{vertex}) is not P_{vertex}[-2] with h = {h}."
    WINDOW_EXCEEDED = "Pair ({x}, {y}) lies outside the oracle window of {window} twist units."
    BOUNDARY_SUPPORT = "Hom support between {x} and {y} touches the window boundary."

    # Classification
    D_TOO_SMALL = "d must be at least {minimum}, got {d}."
    BAD_D_RANGE = "Empty d range [{d_min}, {d_max}]."
    EMPTY_OBJECT_SET = "The object set is empty."
    NOT_IN_DOMAIN = "{obj} is not in the fundamental domain of {diagram}."
    PERIODICITY_VIOLATED = "Certificate for d = {d} violates (d+1) | 2(h-1) with h = {h}."
    NOT_NU_D_CLOSED = "Certificate for d = {d} is not closed under nu_d."
    CHECK_FAILED = "{kind} check failed on {pair} in degree {degree}: value {value}."
    OBSTRUCTION_FAILED = "Hom(X, tau^-{k} X) vanishes for X = {obj}."
    RIM_HOM_FAILED = "Hom(X, tau^-{k} X) = {value} for X = {obj}; expected {expected}."
    CALABI_YAU_IDENTITY_FAILED = "Functor identity {identity} fails on {obj}."

    # Nakayama
    BAD_NAKAYAMA = "Nakayama parameters need a >= 1 and n >= 1, got a = {a}, n = {n}."
    BAD_SERIAL_MODULE = "No serial module with top {top} and length {length} when L = {loewy}."
    PROJECTIVE_SYZYGY = "{module} is projective; its syzygy vanishes."
    RANK_ROUTES_DISAGREE = "Factor-through rank for ({m}, {n}) is {kernel} by kernels but {image} by images."
    ROUTES_DISAGREE = "Route mismatch at (a, n, d) = ({a}, {n}, {d}): numeric {numeric}, brute force {brute}."
    DIVIDES_2N_VIOLATED = "Enumeration for (a, n, d) = ({a}, {n}, {d}) is nonempty although (d+1) does not divide 2n."

    # CLI / store
    UNKNOWN_EXAMPLE = "Unknown example {name!r}; expected one of cta1:N, cta2, cta3, ctd, d4-derived."
    UNKNOWN_CERTIFICATE = "No example or stored certificate with id {certificate_id!r}."
    SEEDLESS_REJECTED = "--seedless is reserved: ctforge uses no randomness."
    BAD_BUDGET = "{var} must be a non-negative integer, got {value!r}."
    BAD_WINDOW = "Window must be positive, got {window}."
    BAD_STORE = "Certificate store {path} is unreadable ({reason}); leaving it untouched."
    MARKED_WRONG_DIAGRAM = "Certificate {certificate_id!r} is for {got}, not {expected}."


# ======================== Info Messages ========================
class InfoMessages:
    """Informational message templates"""

    # Headers
    TRIVEXT_HEADER = "Trivial extension T(k{diagram}), h = {h}"
    NAKAYAMA_HEADER = "Symmetric Nakayama algebra (a, n) = ({a}, {n}), Loewy length {loewy}"
    EXAMPLE_HEADER = "Example {name} on {diagram}, d = {d}"
    TRANSCRIPT_HEADER = "Transcript"

    # Status
    BUDGET_EXCEEDED = "Search space {size} exceeds budget {budget}; {route}."
    NOT_ATTEMPTED = "not attempted"
    STATUS_YES = "yes"
    STATUS_NO = "no"

    # Logging
    CLASSIFY_START = "Classifying %s for d in [%d, %d]"
    CLASSIFY_DONE = "Classification of %s finished: %s"
    SEARCH_D = "Searching d = %d over %d orbit objects"
    CLIQUES_FOUND = "d = %d: %d maximal cliques, %d cluster-tilting"


# ======================== Format Templates ========================
class FormatTemplates:
    """Output format templates"""

    OBJECT = "({vertex},{twist})"
    CERTIFICATE_ID = "{diagram}-d{d}-{index}"


# ======================== Color Styles (for rich console) ========================
class Colors:
    """Color styles for rich console output"""

    CYAN = "cyan"
    GREEN = "green"
    YELLOW = "yellow"
    RED = "red"

    # Semantic colors
    HEADER = CYAN
    SUCCESS = GREEN
    WARNING = YELLOW
    ERROR = RED
    INFO = YELLOW
