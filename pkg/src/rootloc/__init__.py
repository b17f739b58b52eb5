"""Exact root location via Hankel and Hurwitz-type matrices."""
from .errors import (
    RootLocError, ParseError, PreconditionError, ConsistencyError, BothZero, ZeroDenominator,
    DegreeMismatch, DegreeOrder, InsufficientPrefix, InsufficientData, SingularMinor,
    NotRFunction, NotRealRooted,
)
from .poly_core import (
    Polynomial, RootSpec, poly, from_root_spec, parse_poly, parse_root_spec, format_poly,
    format_rational, derivative, gcd, split_even_odd,
)
from .series_hankel import LaurentPrefix, MinorLedger, laurent_prefix, minor_ledger, hankel_rank
from .contfrac import (
    JFraction, JSecondForm, StieltjesFraction, NotRegular, NotStieltjes, j_fraction,
    j_second_form, stieltjes_fraction, reconstruct_rational, euclidean_chain,
)
from .hurwitz import (
    hurwitz_infinite, hurwitz_finite, discriminant_matrix, d_infinity, stieltjes_factorization,
    tnn_certificate, find_negative_minor,
)
from .resultants import resultant, discriminant, orlando_general, orlando_classical
from .cauchy_rfunc import (
    sign_tally, cauchy_index, classify_r_function, hankel_positivity_class, solve_moment_problem,
    lienard_chipart_positive_poles, index_from_fraction,
)
from .rootcount import (
    count_roots, delta_ledger, real_rooted, all_zeros_negative, newton_sums,
    positive_root_count_descartes, log_derivative_stieltjes,
)

__version__ = "0.1.0"
