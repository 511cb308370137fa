//! Exact and numerical verification of Baxterized L-matrices for the quantum group GL_q(2),
//! its θ-extension, the q-oscillator and Weyl reductions, and their classical limits.

pub mod algebra;
pub mod catalog;
pub mod classical;
pub mod coeff;
pub mod cyclicrep;
pub mod error;
pub mod genmap;
pub mod lmatrices;
pub mod ncpoly;
pub mod presentation;
pub mod qdilog;
pub mod report;

pub use algebra::Algebra;
pub use coeff::{Coeff, Param};
pub use error::{QbaxError, Result};
pub use genmap::GenMap;
pub use ncpoly::{Gen, Letter, NCPoly};
pub use presentation::{Presentation, Rule};
