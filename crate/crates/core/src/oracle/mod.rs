//! Independent checks of the polytope and the certificate: exact LPs over the
//! H-representation, Monte-Carlo sampling of orbit points, stabilizer
//! dimensions and the symplecticity of `Ψ`.

pub mod faces;
pub mod lp;
pub mod psi;
pub mod sampling;

pub use faces::{
    active_rank, edge_check, is_vertex, slab_cell, slab_check, stabilizer_dim, verify_edge,
    EdgeCheck, SlabCheck,
};
pub use lp::{lp_optimize, LinearProgram, LpResult, LpStatus};
pub use psi::psi_symplectic_check;
pub use sampling::{
    distinguished_point, gt_values, montecarlo_membership, sample_orbit_point, OrbitPoint,
    SampleReport,
};
