"""
Protocol Constants
Defines enums and constants shared by the library, the file format and the CLI.
"""

from enum import Enum, IntEnum


class TheoremId(str, Enum):
    """Checkers a verdict can come from."""
    T1 = "T1"
    T2 = "T2"
    COR1 = "COR1"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    CH = "CH"
    CN = "CN"
    PIPELINE = "PIPELINE"
    CORRESPONDENCE = "CORRESPONDENCE"


class Conclusion(str, Enum):
    """Classification of a checker's outcome on one instance."""
    NOT_APPLICABLE = "NotApplicable"
    HAS_RAINBOW = "HasRainbow"
    HAS_DIRECTED_TRIANGLE = "HasDirectedTriangle"
    BALANCED_COMPLETE_BIPARTITE = "BalancedCompleteBipartite"
    K4_EXCEPTION = "K4Exception"
    K4_MINUS_EDGE_EXCEPTION = "K4MinusEdgeException"
    ORIENTATION_OF_BALANCED_BIPARTITE = "OrientationOfBalancedBipartite"
    CONJECTURE_COUNTEREXAMPLE = "ConjectureCounterexample"
    CLAIMS_HOLD = "ClaimsHold"
    VIOLATION = "Violation"


class GraphKind(str, Enum):
    """Header token of a graph file."""
    COLORED = "ecg"
    ORIENTED = "dig"


class EnumerationKind(str, Enum):
    """Instance streams the harness can produce."""
    ALL_COLORED_GRAPHS = "AllColoredGraphs"
    COLORINGS_OF_FIXED_GRAPH = "ColoringsOfFixedGraph"
    ALL_ORIENTED_GRAPHS = "AllOrientedGraphs"
    RANDOM_COLORED = "RandomColored"
    RANDOM_ORIENTED = "RandomOriented"


class GeneratorFamily(str, Enum):
    """Sharp and exceptional constructions, named as on the command line."""
    SHARP_COMPLETE = "sharp-complete"
    RAINBOW_BIPARTITE = "rainbow-bipartite"
    ORIENTED_BALANCED_BIPARTITE = "oriented-bipartite"
    K4_EXCEPTION = "k4-exception"
    K4_MINUS_EDGE_EXCEPTION = "k4-minus-edge"


class ExitCode(IntEnum):
    """Process exit codes of the CLI."""
    SUCCESS = 0
    NOT_MET = 1
    USAGE_ERROR = 2
    VIOLATION = 3


# Checkers grouped by the instance type they consume
COLORED_THEOREMS = frozenset({
    TheoremId.T1, TheoremId.T2, TheoremId.COR1, TheoremId.T3,
    TheoremId.CN, TheoremId.PIPELINE,
})
ORIENTED_THEOREMS = frozenset({
    TheoremId.T4, TheoremId.T5, TheoremId.T6, TheoremId.CH,
    TheoremId.CORRESPONDENCE,
})

COLORED_KINDS = frozenset({
    EnumerationKind.ALL_COLORED_GRAPHS,
    EnumerationKind.COLORINGS_OF_FIXED_GRAPH,
    EnumerationKind.RANDOM_COLORED,
})
EXHAUSTIVE_KINDS = frozenset({
    EnumerationKind.ALL_COLORED_GRAPHS,
    EnumerationKind.COLORINGS_OF_FIXED_GRAPH,
    EnumerationKind.ALL_ORIENTED_GRAPHS,
})

# Conclusions that put the instance on the counterexample list
REPORTABLE_CONCLUSIONS = frozenset({
    Conclusion.VIOLATION,
    Conclusion.CONJECTURE_COUNTEREXAMPLE,
})

# Default exhaustive caps (overridable through config/settings.yaml)
DEFAULT_COLORED_CAP = 4
DEFAULT_ORIENTED_CAP = 5
DEFAULT_ORIENTED_OPT_IN_CAP = 6

# streams shorter than this run in-process unless workers is given explicitly
PARALLEL_MIN_UNITS = 20_000

# largest vertex count accepted in a graph file header
DEFAULT_MAX_FILE_VERTICES = 100_000

# Environment variables
ENV_SETTINGS_PATH = "RAINBOWTRI_SETTINGS"
ENV_EXHAUSTIVE_CAP = "RAINBOWTRI_EXHAUSTIVE_CAP"
ENV_LOG_LEVEL = "RAINBOWTRI_LOG_LEVEL"
ENV_WORKERS = "RAINBOWTRI_WORKERS"

# "-" on the command line means standard input
STDIN_MARKER = "-"
