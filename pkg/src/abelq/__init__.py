"""Exact arithmetic for finite abelian ell-groups: automorphism and subgroup
counts, chain sums over the poset of group types, Gaussian binomials, and
checks of the identities relating them."""

from .group_types import GroupType, aut_order, embeds, parse_type, surj_count, weight
from .qseries import LaurentPoly, eval_at, gauss_binomial, poch, prime_ell
from .subgroups import sub_count
from .chains import s_plus_value, s_value, sigma_i
from .verifier import VerificationReport, run_identity, sweep

__version__ = "0.1.0"
