"""Exact computations with Vidinli algebras over Q and GF(p)."""
from .algebra import Algebra, centers, enumerate_ideals, identity_predicates, make_algebra
from .char2 import (Char2Presentation, build_char2, center_char2, classify_dim2,
                    extract_char2_presentation, is_vidinli_char2, iso_test_char2,
                    make_char2_presentation, twist)
from .charnot2 import (VidinliPresentation, center_report, check_automorphism, coskun_eden_example,
                       count_automorphisms_small, derivations_skew, extract_norm, from_bilinear_form,
                       from_super_form, is_vidinli, lie_mult_algebra_report, mult_algebra_report,
                       sigma_decompose, structure_report)
from .errors import BoundExceeded, InputError, NotVidinli, PropertyViolation, VidinliError
from .field import GF, QQ, Field
from .operators import derivations_generic, lie_mult_algebra_closure, mult_algebra_closure

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "BoundExceeded",
    "build_char2",
    "center_char2",
    "center_report",
    "centers",
    "Char2Presentation",
    "check_automorphism",
    "classify_dim2",
    "coskun_eden_example",
    "count_automorphisms_small",
    "derivations_generic",
    "derivations_skew",
    "enumerate_ideals",
    "extract_char2_presentation",
    "extract_norm",
    "Field",
    "from_bilinear_form",
    "from_super_form",
    "GF",
    "identity_predicates",
    "InputError",
    "is_vidinli",
    "is_vidinli_char2",
    "iso_test_char2",
    "lie_mult_algebra_closure",
    "lie_mult_algebra_report",
    "make_algebra",
    "make_char2_presentation",
    "mult_algebra_closure",
    "mult_algebra_report",
    "NotVidinli",
    "PropertyViolation",
    "QQ",
    "sigma_decompose",
    "structure_report",
    "twist",
    "VidinliError",
    "VidinliPresentation",
]
