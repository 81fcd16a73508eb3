pub mod axioms;
pub mod cli;
pub mod error;
pub mod field;
pub mod external;
pub mod halfline;
pub mod naturals;
pub mod neutrix;

pub use error::{Error, Result};
pub use field::{PreciseNum, Rational, RhoPoly};
pub use external::ExternalNum;
pub use neutrix::Neutrix;
