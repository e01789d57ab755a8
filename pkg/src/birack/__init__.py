"""Finite biracks, braid closures, and the birack polynomial invariant.

The package represents finite generalised biracks, verifies their axioms
against a chosen generalised knot theory, and computes the labelling-count
polynomial (and its two-variable refinement) of knots and links presented
as braid closures.
"""

from .birack import (CLASSICAL_TAG, SINGULAR_TAG, VIRTUAL_TAG, FiniteBirack,
                     sub_biracks, subbirack_closure)
from .braid import MACROS, BraidGenerator, BraidWord, colour, macro
from .catalog import (BUILTIN_NAMES, builtin, dumps, enumerate_biracks, load,
                      loads, save)
from .errors import (BirackError, BudgetError, InputError, ParseError,
                     StructureError, UnsupportedTheoryError)
from .invariant import (DEFAULT_BUDGET, LabellingCensus, birack_polynomial,
                        braid_action, count_labellings, labelling_census,
                        oracle_count, refined_polynomial, unlink_word)
from .permutation import Permutation
from .polynomial import BirackPolynomial
from .switch import (CheckResult, PairMap, SwitchMap, check_biquandle,
                     check_commute, check_formed, check_fully_formed,
                     check_yang_baxter, swap_map, twitch_to_switch,
                     yang_baxter_identities)
from .theory import (CLASSICAL, ROTATIONAL, SINGULAR, SINGULAR_ROTATIONAL,
                     THEORIES, CheckReport, TheoryDescriptor,
                     check_birack_for_theory, theory)
from .verify import GOLDEN_CELLS, run_verification

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES", "BirackError", "BirackPolynomial",
    "BraidGenerator", "BraidWord", "BudgetError", "CheckReport", "CheckResult",
    "CLASSICAL", "CLASSICAL_TAG", "DEFAULT_BUDGET", "FiniteBirack",
    "GOLDEN_CELLS", "InputError", "LabellingCensus", "MACROS", "PairMap",
    "ParseError", "Permutation", "ROTATIONAL", "SINGULAR",
    "SINGULAR_ROTATIONAL", "SINGULAR_TAG", "StructureError", "SwitchMap",
    "THEORIES", "TheoryDescriptor", "UnsupportedTheoryError", "VIRTUAL_TAG",
    "birack_polynomial", "braid_action", "builtin", "check_biquandle",
    "check_birack_for_theory", "check_commute", "check_formed",
    "check_fully_formed", "check_yang_baxter", "colour", "count_labellings",
    "dumps", "enumerate_biracks", "labelling_census", "load", "loads",
    "macro", "oracle_count", "refined_polynomial", "run_verification", "save",
    "sub_biracks", "subbirack_closure", "swap_map", "theory",
    "twitch_to_switch", "unlink_word", "yang_baxter_identities",
]
