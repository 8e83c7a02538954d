//! Exact construction and verification of generalized Gould-Hopper
//! d-orthogonal polynomial systems.

pub mod error;
pub mod exact;
pub mod genfun;
pub mod hypergeom;
pub mod matching;
pub mod mehler_heine;
pub mod operator;
pub mod par;
pub mod poly;
pub mod presets;
pub mod recurrence;
pub mod report;
pub mod series;
pub mod spec;
pub mod sweep;

pub use error::{Error, Result};
pub use exact::{ComplexF, Rational};
pub use par::Exec;
pub use poly::{Basis, Poly};
pub use report::{Outcome, Report};
pub use spec::{Kind, SystemSpec};
