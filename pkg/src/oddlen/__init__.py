"""Odd length statistics on Coxeter groups of types A, B, D and their signed generating functions."""

from .closed_forms import ClaimId, Report, Status, extract_MJ, verify_claim
from .genfun import graded_gf, restricted_gf, signed_gf
from .indexset import IndexSet
from .perm import (
    GroupLabel,
    SignedPermutation,
    StatBundle,
    compose,
    descent_set,
    inverse,
    length,
    make_perm,
    odd_length,
    odd_length_B_halfcount,
    parabolic_factorize,
    stat_bundle,
)
from .poly import BiPoly, IntPoly, exact_div, q_multinomial, tower_factor

__version__ = "0.1.0"
