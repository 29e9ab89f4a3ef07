"""Exact computations in fermionic and bosonic Fock space.

Charged partitions index the basis; Clifford, Heisenberg, vertex-operator,
a_infinity, affine sl_l / gl_l and Misra-Miwa actions are all computed with
exact rational or Laurent-polynomial coefficients.
"""
from .basis import (
    ChargedPartition, HalfInt, MayaSpec, black_positions, box_color, conjugate, cp, from_wedge,
    maya_to_partition, normalize_wedge, parse_state, partition_to_maya, partitions, ribbon_removals,
    states, to_wedge,
)
from .boson import alpha, alpha0, alpha_via_clifford, shift
from .clifford import anticommutator_check, charge_via_clifford, psi, psi_star, word_from_vacuum
from .fockvec import FockVector, LaurentQ, LinOp, commutator, identity, inner
from .kernels import BACKEND
from .matalg import (
    AffElt, PeriodicBanded, act_affine, act_ainfty, act_d, act_Ebar, bracket_affine, bracket_ainfty,
    c_element, chevalley_E, chevalley_F, embed_affine,
)
from .qfock import Eq, Fq, Kq, n_counts, specialize_q1
from .symfunc import BosonPoly, char_poly, power_sum_expand, schur, sigma, weyl_on_B
from .vertex import (
    FSeries, fermion_from_bosons, fermion_star_from_bosons, gamma_commutation_check, gamma_minus,
    gamma_plus, psi_series,
)

__version__ = "0.1.0"

__all__ = [
    "ChargedPartition", "HalfInt", "MayaSpec", "black_positions", "box_color", "conjugate", "cp",
    "from_wedge", "maya_to_partition", "normalize_wedge", "parse_state", "partition_to_maya",
    "partitions", "ribbon_removals", "states", "to_wedge",
    "alpha", "alpha0", "alpha_via_clifford", "shift",
    "anticommutator_check", "charge_via_clifford", "psi", "psi_star", "word_from_vacuum",
    "FockVector", "LaurentQ", "LinOp", "commutator", "identity", "inner",
    "BACKEND",
    "AffElt", "PeriodicBanded", "act_affine", "act_ainfty", "act_d", "act_Ebar", "bracket_affine",
    "bracket_ainfty", "c_element", "chevalley_E", "chevalley_F", "embed_affine",
    "Eq", "Fq", "Kq", "n_counts", "specialize_q1",
    "BosonPoly", "char_poly", "power_sum_expand", "schur", "sigma", "weyl_on_B",
    "FSeries", "fermion_from_bosons", "fermion_star_from_bosons", "gamma_commutation_check",
    "gamma_minus", "gamma_plus", "psi_series",
]
