//! Free-group words over `{a, b, c}` and the coned-off Cayley graph `Y` of
//! `F(a,b,c)` obtained by coning off the axes of the words `w_n = v_n c`,
//! where `v_n` runs over Thue–Morse prefixes.
//!
//! * [`words`]: reduced words, cyclic reduction, primitive roots.
//! * [`aperiodic`]: the schedule `v_n`, `w_n` and a 7-aperiodicity check.
//! * [`woracle`]: membership in the generating set of `Y`.
//! * [`ydist`]: exact `Y`-lengths and translation-length estimates.
//! * [`geometry`]: fellow-traveling, four-point and quasiconvexity experiments.
//! * [`acylindricity`]: coarse-stabilizer census.
//! * [`verify`]: the acceptance checks, shared by the test suite and the CLI.

pub mod acylindricity;
pub mod aperiodic;
pub mod error;
pub mod geometry;
pub mod reference;
pub mod sampling;
pub mod verify;
pub mod woracle;
pub mod words;
pub mod ydist;

pub use error::{Error, Result};
pub use words::{parse, Letter, ReducedWord};
pub use ydist::YMetric;
