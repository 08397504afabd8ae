"""Exact construction and certification of Gorenstein unprojections."""

from .fields import QQ, PrimeField
from .ring import GradedRing, GrevLex, BlockElimination, Polynomial
from .groebner import GradedIdeal, ModuleVector, GBEngine, syzygies, express, \
    minimal_generating_set
from .resolution import (FreeResolution, BettiTable, minimal_free_resolution,
                         krull_dimension, codim, is_gorenstein_quotient,
                         canonical_degree, lift_chain_map, dual_tail)
from .hilbert import HilbertSeries, hilbert_series, unprojection_series, \
    series_equal, brute_dims, monomials_of_degree
from .unproject import (UnprojectionProblem, HomGenerators, UnprojectionResult,
                        Certificate, CertificateReport, HypothesisError,
                        validate_problem, compute_hom_generators,
                        wiggle_to_injective, unproject, project,
                        verify_certificates, kustin_miller_cross_check)
from .kmfile import parse_problem, format_problem, ProblemFile, ParseError
from .corpus import corpus

__version__ = "0.1.0"
