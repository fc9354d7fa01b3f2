//! Seeded identity verification, the same run the `verify` subcommand does.
//!
//! ```bash
//! cargo run --release --example identity_suite -- 7
//! ```

use std::collections::BTreeMap;

use aopoly::verify::{run_verify, IdentitySet, VerifyConfig};

fn main() -> aopoly::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let cfg = VerifyConfig {
        set: IdentitySet::All,
        seed,
        points: 200,
        n_max: 25,
        rel_tol: 1e-8,
    };
    let out = run_verify(&cfg)?;
    let mut by_id: BTreeMap<&str, (usize, usize, f64)> = BTreeMap::new();
    for r in &out.reports {
        let e = by_id.entry(&r.identity_id).or_default();
        e.0 += 1;
        e.1 += usize::from(!r.passed);
        e.2 = e.2.max(r.rel_discrepancy);
    }
    println!(
        "{:<28} {:>7} {:>7} {:>10}",
        "identity", "checks", "failed", "worst"
    );
    for (id, (n, f, w)) in &by_id {
        println!("{id:<28} {n:>7} {f:>7} {w:>10.1e}");
    }
    println!("seed {seed}: {} skipped grid points", out.skipped.len());
    Ok(())
}
