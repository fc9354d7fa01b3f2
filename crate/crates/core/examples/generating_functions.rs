//! Generating-function closed forms against truncated series, and the
//! Charlier generating-function ODE.
//!
//! ```bash
//! cargo run --example generating_functions
//! ```

use aopoly::genfuncs::{gf_charlier_ode_residual, gf_check, gf_lhs_partial, GfSpec, Normalization};
use aopoly::recurrences::{CharlierParams, FamilyParams, LaguerreParams, MeixnerParams};
use aopoly::scalar::re;

fn main() -> aopoly::Result<()> {
    let cases = [
        (
            0.5,
            FamilyParams::Meixner(MeixnerParams::new(1.5, 0.4, 0.7)),
        ),
        (
            0.25,
            FamilyParams::Charlier(CharlierParams { a: 1.0, gamma: 0.5 }),
        ),
        (
            1.2,
            FamilyParams::Laguerre(LaguerreParams {
                alpha: 0.5,
                gamma: 0.9,
            }),
        ),
    ];
    for (x, f) in &cases {
        for r in gf_check(re(*x), f, re(0.1), 1e-8)? {
            println!(
                "{:<28} series {:>20.15}  closed form {:>20.15}  rel {:.1e}  N = {}",
                r.identity_id, r.lhs.re, r.rhs.re, r.rel_discrepancy, r.point["N"]
            );
        }
    }

    // too few terms for the requested tail tolerance
    let mut spec = GfSpec::new(cases[2].1, re(1.2), re(0.45), Normalization::Plain);
    spec.truncation_n = 5;
    if let Err(e) = gf_lhs_partial(&spec) {
        println!("N = 5 at t = 0.45: {e}");
    }

    let cp = CharlierParams { a: 1.0, gamma: 0.5 };
    for t in [-0.2, 0.1, 0.2] {
        println!(
            "ODE residual at t = {t}: {:.2e}",
            gf_charlier_ode_residual(re(0.25), &cp, re(t), 1e-4)?
        );
    }
    Ok(())
}
