"""Centers of quantized nilpotent algebras attached to reduced words."""

from .cartan import RootSystem, build_root_system, root_system
from .centers import (
    CenterDescription,
    DecompositionSpec,
    center_nilpotent,
    center_W,
    covariant_data,
    delta_lattice,
    double_schubert_center,
    minor_exponent,
    R_exponent,
)
from .diophantine import BlockConfig, apply_move, b1_corank, corank_direct
from .errors import AuditFailure, GuardExceeded, InputError
from .lattice_forms import SkewForm, build_A_and_Lbar, build_L0, column_reduce, compatible_pair
from .root_of_unity import brute_force_image, pi_degree, root_centrality_report, skew_normal_form
from .twisted_laurent import TwistedAlgebra, formula_audit
from .weyl import WeylElement, beta_grid, longest_and_parabolic, longest_element

__all__ = [
    "AuditFailure", "BlockConfig", "CenterDescription", "DecompositionSpec", "GuardExceeded",
    "InputError", "R_exponent", "RootSystem", "SkewForm", "TwistedAlgebra", "WeylElement",
    "apply_move", "b1_corank", "beta_grid", "brute_force_image", "build_A_and_Lbar", "build_L0",
    "build_root_system", "center_W", "center_nilpotent", "column_reduce", "compatible_pair",
    "corank_direct", "covariant_data", "delta_lattice", "double_schubert_center", "formula_audit",
    "longest_and_parabolic", "longest_element", "minor_exponent", "pi_degree",
    "root_centrality_report", "root_system", "skew_normal_form",
]
