//! Gelfand-Tsetlin polytopes of coadjoint orbits of U(n), SO(2n+1) and
//! SO(2n), and certificates for lower bounds on their Gromov width.
//!
//! A certificate consists of a vertex `V` of the polytope, a unimodular
//! matrix `W` whose columns are the primitive directions of the edges leaving
//! `V`, and a radius `r'` such that `V + W·Δ(r')` lies in the polytope.

pub mod diagram;
pub mod error;
pub mod exact;
pub mod lie;
pub mod oracle;
pub mod polytope;
pub mod rational;
pub mod schema;

pub use diagram::{build_diagram, Cell, Diagram};
pub use error::{Error, Result};
pub use lie::{Family, GroupSpec, Weight};
pub use polytope::{certificate, edges, hrep, matrix_w, simplex_r, vertex_v, Certificate, Polytope};
pub use rational::Rational;
