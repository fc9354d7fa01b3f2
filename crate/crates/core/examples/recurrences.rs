//! First few associated polynomials of each family from their three-term
//! recurrences.
//!
//! ```bash
//! cargo run --example recurrences
//! ```

use aopoly::recurrences::{
    family_seq, CharlierParams, FamilyParams, LaguerreParams, MPParams, MeixnerParams,
};
use aopoly::scalar::re;

fn main() -> aopoly::Result<()> {
    let families = [
        (
            "Meixner (β=1.5, c=0.4, γ=0.7)",
            FamilyParams::Meixner(MeixnerParams::new(1.5, 0.4, 0.7)),
        ),
        (
            "Charlier (a=2, γ=0.8)",
            FamilyParams::Charlier(CharlierParams { a: 2.0, gamma: 0.8 }),
        ),
        (
            "Laguerre (α=0.5, γ=0.9)",
            FamilyParams::Laguerre(LaguerreParams {
                alpha: 0.5,
                gamma: 0.9,
            }),
        ),
        (
            "Meixner–Pollaczek (ν=0.3, φ=π/3, γ=0.5)",
            FamilyParams::MeixnerPollaczek(MPParams {
                nu: 0.3,
                phi: std::f64::consts::FRAC_PI_3,
                gamma: 0.5,
            }),
        ),
    ];
    let x = 0.5;
    for (name, params) in &families {
        let seq = family_seq(re(x), params, 6)?;
        println!("{name} at x = {x}");
        for (n, v) in seq.values.iter().enumerate() {
            println!("  P_{n} = {:>22.15e}", v.re);
        }
    }
    Ok(())
}
