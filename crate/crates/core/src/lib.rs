//! Exact abelian Chern–Simons and BF partition functions of closed oriented
//! 3-manifolds presented by Heegaard gluing matrices.
//!
//! The pipeline is
//! [`GluingData`] → [`homology_profile`] → [`linking_form`] → [`z_cs`] / [`z_bf`],
//! with every quantity kept in exact integer or rational arithmetic until a
//! [`PhaseSum`] is explicitly evaluated with [`PhaseSum::eval_numeric`].

pub mod cli;
pub mod exact;
pub mod fields;
pub mod homology;
pub mod linking;
pub mod partition;
pub mod splitting;

pub use exact::{
    integer_kernel, smith_normal_form, IntMatrix, PhaseQ, RationalQ, SmithDecomposition,
};
pub use fields::{
    bf_action, bf_zero_mode_shift, cs_action, db_pair, zero_mode_shift, FiniteDBClass,
};
pub use homology::{
    curvature_lattice_basis, free_flat_basis, homology_profile, torsion_elements, HomologyProfile,
    TorsionGroup, TorsionRep,
};
pub use linking::{is_nondegenerate, linking_form, linking_matrix, LinkingMatrix};
pub use partition::{
    admissible_grid, free_curvature_pairing, free_mode_grid_oracle, gauss_sum_oracle, z_bf,
    z_bf_closed_form, z_cs, PhaseSum,
};
pub use splitting::{anti_symplectic_check, validate, GluingData};
