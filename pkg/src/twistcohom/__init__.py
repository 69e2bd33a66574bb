"""Twisted first cohomology of finitely presented groups, with built-in
constructors for the mapping class group of a surface with one boundary
component acting on its first homology."""

from .cocycle import (
    CocycleAssignment,
    CohomologyResult,
    adapt_to_S,
    adapt_to_Sprime,
    coboundary,
    compute_h1,
    conjugate_value,
    evaluate,
    relator_system,
    theorem1_cocycle,
    verify_cocycle,
)
from .intlinalg import AbelianInvariants, IntMatrix, SnfResult, kernel_basis, quotient_invariants, snf
from .presentation import Presentation, Word, concat, invert, parse_presentation, parse_word, render_word
from .symplectic import (
    CurveSystem,
    Representation,
    act,
    humphries_representation,
    intersection_form,
    projection,
    twist_matrix,
)
from .wajnryb import WajnrybPresentation, alpha_twist_word, auxiliary_words, wajnryb_presentation

__version__ = "0.1.0"
