//! Associated Meixner, Charlier, Laguerre and Meixner–Pollaczek polynomials:
//! recurrences, closed-form hypergeometric representations, generating
//! functions and Mehler–Heine type asymptotics, with a verification harness.

pub mod asymptotics;
pub mod cli;
pub mod closedforms;
pub mod error;
pub mod genfuncs;
pub mod hyperkernel;
pub mod recurrences;
pub mod report;
pub mod scalar;
pub mod verify;
pub mod wide;

pub use error::{Error, Result};
pub use scalar::Scalar;
