"""Exact tools for two-colour Ramsey numbers of double stars."""

from .bounds import (
    BoundsReport,
    best_upper,
    bounds_report,
    corollary_bound,
    m3_of,
    nsz_lower_main,
    r_b,
    range_flags,
    theorem_bound,
)
from .colouring import (
    BLUE,
    RED,
    Colour,
    Colouring2,
    ColouringFormatError,
    degree,
    max_degree,
    neighbourhood,
    parse_colouring,
    serialize_colouring,
)
from .constructions import canonical_colouring
from .doublestar import (
    DoubleStarSpec,
    Embedding,
    PreconditionError,
    centre_feasible,
    embed_at,
    find_monochromatic,
    validate_embedding,
)
from .extract import (
    CounterexampleAlarm,
    ExtractionTrace,
    FallbackNeeded,
    extract,
    extract_trace,
    extract_via_proof,
    select_low_colour,
)
from .search import (
    SearchOutcome,
    Status,
    exists_good_colouring,
    ramsey_exact,
    random_witness_search,
)
