//! Terminating ₃F₂ and ₄F₃ summation identities.
//!
//! ```bash
//! cargo run --example finite_sums
//! ```

use aopoly::closedforms::{identity_3f2_special, identity_3f2_t_powered, identity_4f3_finite_sum};
use aopoly::scalar::re;

fn main() -> aopoly::Result<()> {
    for r in [
        identity_3f2_special(10, 0.7, 2.3, 1e-12)?,
        identity_3f2_t_powered(8, 0.7, 2.3, re(-0.4), 1e-12)?,
        identity_4f3_finite_sum(8, 0.7, 2.3, re(0.3), re(-0.6), 1e-12)?,
        identity_4f3_finite_sum(2, 1.0, 2.0, re(0.0), re(0.5), 1e-12)?,
    ] {
        println!(
            "{:<16} lhs {:>22.16e} rhs {:>22.16e} rel {:.1e} {}",
            r.identity_id,
            r.lhs.re,
            r.rhs.re,
            r.rel_discrepancy,
            if r.passed { "ok" } else { "FAIL" }
        );
    }
    // b − a a positive integer puts a pole in the right side when t ≠ 0
    match identity_4f3_finite_sum(2, 1.0, 2.0, re(0.3), re(0.5), 1e-12) {
        Err(e) => println!("n=2, a=1, b=2, t=0.3: {e}"),
        Ok(r) => println!("unexpected {r:?}"),
    }
    Ok(())
}
