"""cancelkit: exact polynomial ideal arithmetic and mechanical
verification of a cancellation theorem for ideals.

The ambient "local Gorenstein ring" of the theory is instantiated as a
(possibly weighted) graded polynomial ring over an exact field at its
graded maximal ideal; all shipped fixtures are weighted-homogeneous so
graded and local behavior agree.
"""

from .cache import GBCache, active_cache
from .cancellation import (CancellationHypotheses, LinkReport, WitnessTrace,
                           cancel_check, check_hypotheses,
                           construct_witness, corollary213_check,
                           link_ideal, power_containment_scan)
from .errors import (ArityMismatch, BadRegularSequence, CancelkitError,
                     HypothesisFailed, NotGraded, NotHomogeneous,
                     NotReduction, NotSubideal, PreconditionUnmet,
                     RequiresDimensionOne, ResourceExceeded, RingMismatch,
                     ScriptSyntaxError, SearchExhausted, TheoremViolation,
                     ZeroColon, ZeroInversion)
from .fields import (DEFAULT_PRIME, PrimeField, RationalField,
                     field_from_spec)
from .gb import EngineLimits, GroebnerBasis, buchberger, is_member, normal_form
from .ideals import (DimensionReport, Ideal, exact_div, is_unmixed,
                     kernel_of_map, radical_contains)
from .orders import Block, Grevlex, Lex
from .reductions import (MinimalReductionSearch, ReductionReport,
                         analytic_deviation, find_minimal_reduction,
                         reduction_number)
from .rees import (ReesPresentation, SyzygeticReport, graded_piece,
                   is_syzygetic, lemma_prefix_relations_check,
                   rees_presentation)
from .resolutions import (CohomologySummary, FreeModuleMap, FreeResolution,
                          cohomology_summary, colon_identity_check,
                          free_resolution, syzygies)
from .ring import Polynomial, Ring
from .script import RunFlags, parse_polynomial, parse_script, run

__version__ = "0.1.0"
