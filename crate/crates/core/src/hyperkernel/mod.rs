//! Hypergeometric building blocks: gamma-function family, rising
//! factorials, terminating and infinite series, two-variable Appell and
//! Humbert functions, and Euler-integral quadrature.

pub mod appell;
pub mod gamma;
pub mod gauss;
pub mod kummer;
pub mod pochhammer;
pub mod quadrature;
pub mod series;
pub mod terminating;

pub use appell::{appell_f1, appell_f1_double, humbert_phi1};
pub use gamma::{gamma, gamma_ratio, ln_gamma, rgamma};
pub use gauss::{gauss_2f1, gauss_2f1_wide};
pub use kummer::kummer_1f1;
pub use pochhammer::{pochhammer, pochhammer_log};
pub use quadrature::{euler_integral, EulerIntegrand};
pub use series::{EvalOutcome, SeriesConfig};
pub use terminating::{hyp_terminating, hyp_terminating_wide};
