"""Self-linking numbers of braids in planar open book decompositions."""

from .analysis import SlReport, analyze
from .census import CensusReport, singularity_census
from .intlinalg import (
    CokernelInvariants,
    IntMatrix,
    IntegerSolution,
    SmithDecomposition,
    cokernel_invariants,
    smith_normal_form,
    solve_integer,
)
from .model import (
    BoundaryTwist,
    BraidLetter,
    BraidWord,
    ExponentRecord,
    MonodromyLetter,
    OpenBook,
    PairTwist,
    Rho,
    Sigma,
    ValidationError,
    exponent_record,
)
from .monodromy import MonodromyMatrix, first_homology, monodromy_matrix, well_definedness_rank
from .parsing import (
    Instance,
    ParseError,
    format_braid,
    format_instance,
    format_open_book,
    parse_braid,
    parse_instance,
    parse_open_book,
)
from .selflink import (
    SeifertSolution,
    null_homology_solve,
    self_linking,
    sl_variation_over_kernel,
)
from .stabilize import StabilizedState, normalize_nonnegative, stabilize

__version__ = "0.1.0"
