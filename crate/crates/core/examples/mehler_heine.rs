//! Scaled polynomial values approaching their Mehler–Heine limits.
//!
//! ```bash
//! cargo run --example mehler_heine
//! ```

use aopoly::asymptotics::mh_convergence_study;
use aopoly::recurrences::{CharlierParams, FamilyParams, MeixnerParams};
use aopoly::scalar::re;

fn main() -> aopoly::Result<()> {
    let checkpoints = [50, 100, 200, 400, 800, 1600];
    let cases = [
        (
            "Meixner x=0.25 β=1.5 c=0.4 γ=0.5",
            0.25,
            FamilyParams::Meixner(MeixnerParams::new(1.5, 0.4, 0.5)),
        ),
        (
            "Charlier x=-0.5 a=1 γ=0",
            -0.5,
            FamilyParams::Charlier(CharlierParams { a: 1.0, gamma: 0.0 }),
        ),
        (
            "Charlier x=0.5 a=2 γ=0.8",
            0.5,
            FamilyParams::Charlier(CharlierParams { a: 2.0, gamma: 0.8 }),
        ),
    ];
    for (name, x, params) in &cases {
        let st = mh_convergence_study(re(*x), params, &checkpoints)?;
        println!("{name}: limit {:.15}", st.limit.re);
        for s in &st.samples {
            // n·error settles, so the approach is first order in 1/n
            println!(
                "  n = {:>5}  r_n = {:.15}  |r_n - limit| = {:.3e}  n·error = {:.4}",
                s.n,
                s.scaled_value.re,
                s.abs_error,
                s.n as f64 * s.abs_error
            );
        }
        println!("  monotone tail: {}", st.monotone_tail);
    }
    Ok(())
}
