//! Charlier and Laguerre values as limits of Meixner values.
//!
//! ```bash
//! cargo run --example limit_relations
//! ```

use aopoly::recurrences::{
    charlier_seq, charlier_via_meixner, laguerre_seq, laguerre_via_meixner, CharlierParams,
    LaguerreParams,
};
use aopoly::scalar::re;

fn main() -> aopoly::Result<()> {
    let n = 6;
    let cp = CharlierParams { a: 2.0, gamma: 0.8 };
    let c = charlier_seq(re(0.5), &cp, n)?.get(n);
    println!("C_{n}(0.5; a=2, γ=0.8) = {:.15}", c.re);
    let mut prev = None;
    for beta in [1e2, 1e3, 1e4, 1e5] {
        let e = (charlier_via_meixner(re(0.5), &cp, beta, n)?.get(n) - c).norm();
        let ratio = prev
            .map(|p: f64| format!("{:.3}", p / e))
            .unwrap_or_default();
        println!("  β = {beta:>8}: error {e:.3e} {ratio}");
        prev = Some(e);
    }

    let lp = LaguerreParams {
        alpha: 0.5,
        gamma: 0.9,
    };
    let l = laguerre_seq(re(1.2), &lp, n)?.get(n);
    println!("L_{n}(1.2; α=0.5, γ=0.9) = {:.15}", l.re);
    let mut prev = None;
    for eps in [1e-2, 1e-3, 1e-4, 1e-5] {
        let e = (laguerre_via_meixner(re(1.2), &lp, 1.0 - eps, n)?.get(n) - l).norm();
        let ratio = prev
            .map(|p: f64| format!("{:.3}", p / e))
            .unwrap_or_default();
        println!("  1 - c = {eps:>6}: error {e:.3e} {ratio}");
        prev = Some(e);
    }
    Ok(())
}
