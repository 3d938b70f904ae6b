//! The secondary multiplication: homotopy tables, the cochains m, m′, m″, m̃
//! and the coboundary test for γ.

mod cocycle;
mod gamma;
mod product;
mod tables;

pub use cocycle::{coboundary, verify_cocycle, CocycleFailure, CocycleReport};
pub use gamma::{default_equations, gamma_certificate, reference_equations, Equation, GammaCertificate, GammaVerdict};
pub use product::{Kind, OddRule, SecondaryProduct};
pub use tables::{CochainTable, F2Check, F2Entry};
