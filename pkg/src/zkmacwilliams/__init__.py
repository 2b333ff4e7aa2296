"""Exact MacWilliams identities over Z_k and Z_k[xi], and nu-functions of Construction A_k lattices."""

from .codes import CodeZk, dual_code, enumerate_codewords, hamming_weight, load_code, random_code
from .conjecture import (
    SideReport,
    alpha_from_beta_conjecture,
    alpha_from_beta_ternary,
    beta_from_alpha_ternary,
    counterexample_table,
    sole_sides,
    theorem4_sides,
)
from .cyclotomic import CyclotomicInt, FunctionTable, char_sum_subgroup, fourier_transform_table, zeta_pow
from .enumerators import (
    check_identity_hamming,
    check_identity_mtuple,
    effective_length_we,
    hamming_we,
    mw_transform_hamming,
    mw_transform_mtuple,
)
from .errors import *  # noqa: F401,F403
from .lattice import (
    LatticeAk,
    TruncatedSeries,
    brute_force_nu,
    dual_nu_eval,
    lattice_det,
    nu_eval_closed,
    nu_series,
    residue_series_1d,
    scale_law_check,
)
from .poly import Poly
from .ring import (
    CodeR,
    RingR,
    char_dual_r,
    check_identity_complete,
    complete_we,
    mw_transform_complete,
    r_mul,
    tau,
    u_index,
)

__version__ = "0.1.0"
