"""Exact experiments on Hankel transforms of continued-fraction sequences."""
from .analysis import (
    ConjectureReport,
    binomial_transform,
    check_101_impossible,
    check_conjecture,
    eta_convolution,
    even_subsequence,
    gf_transform,
)
from .catalog import gf_identity_check, named_terms, rule
from .contfrac import CFSpec, cf_expand, required_depth
from .hankel import HankelResult, det_exact, hankel_matrix, hankel_transform, prepend
from .pattern import b_to_p, gf_relation_check, multiplicities, p_to_b, support_of, validate_pattern
from .series import Polynomial, PowerSeries, ps_fixed_point, ps_inverse, ps_mul, ps_rational

__version__ = "0.1.0"
