//! The special-function kernel on its own: ₂F₁ across its continuation
//! regions, ₁F₁, Appell F₁, Humbert Φ₁ and an Euler integral.
//!
//! ```bash
//! cargo run --example hypergeometric_kernel
//! ```

use aopoly::hyperkernel::{
    appell_f1, euler_integral, gamma, gauss_2f1, humbert_phi1, kummer_1f1, EulerIntegrand,
    SeriesConfig,
};
use aopoly::scalar::re;
use aopoly::Error;

fn main() -> aopoly::Result<()> {
    let cfg = SeriesConfig::default();

    // ₂F₁(1, 1; 2; −z) = ln(1+z)/z
    for z in [0.3, 0.8, -0.95, 3.0, -40.0] {
        let f = gauss_2f1(re(1.0), re(1.0), re(2.0), re(-z), &cfg);
        match f {
            Ok(v) => println!(
                "2F1(1,1;2;{:>6}) = {:>20.15}  ln(1+z)/z = {:>20.15}",
                -z,
                v.value.re,
                (1.0 + z).ln() / z
            ),
            Err(e) => println!("2F1(1,1;2;{:>6}): {e}", -z),
        }
    }
    match gauss_2f1(re(1.5), re(1.5), re(2.0), re(1.0), &cfg) {
        Err(Error::DomainError(m)) => println!("Gauss sum refused: {m}"),
        other => println!("unexpected: {other:?}"),
    }

    // Kummer: ₁F₁(a; b; z) = e^z ₁F₁(b−a; b; −z)
    let k = kummer_1f1(re(0.5), re(1.5), re(-2.0), &cfg)?.value;
    let t = kummer_1f1(re(1.0), re(1.5), re(2.0), &cfg)?.value * (-2.0f64).exp();
    println!("1F1(0.5;1.5;-2) = {:.15}, via Kummer {:.15}", k.re, t.re);

    let f1 = appell_f1(re(0.6), re(0.5), re(1.2), re(1.9), re(0.2), re(-0.3), &cfg)?.value;
    println!("F1[0.6,0.5,1.2;1.9;0.2,-0.3] = {:.15}", f1.re);
    let phi = humbert_phi1(re(0.4), re(0.6), re(1.4), re(0.3), re(-0.5), &cfg)?.value;
    let lim = appell_f1(
        re(0.4),
        re(0.6),
        re(1e6),
        re(1.4),
        re(0.3),
        re(-0.5e-6),
        &cfg,
    )?
    .value;
    println!(
        "Phi1[0.4,0.6;1.4;0.3,-0.5] = {:.12}, F1 with mu = 1e6 gives {:.12}",
        phi.re, lim.re
    );

    // ∫₀¹ u^{γ−1}(1−zu)^{−a} du = ₂F₁(a, γ; γ+1; z)/γ
    let (g, a, z) = (0.2, 0.7, 0.9);
    let i = euler_integral(&EulerIntegrand::new(re(g), vec![(re(z), re(-a))]), &cfg)?;
    let h = gauss_2f1(re(a), re(g), re(g + 1.0), re(z), &cfg)?.value / g;
    println!(
        "Euler integral {:.14} vs 2F1/γ {:.14} ({} nodes)",
        i.value.re, h.re, i.terms_used
    );
    println!("Γ(0.5)² = {:.15}", (gamma(re(0.5))? * gamma(re(0.5))?).re);
    Ok(())
}
