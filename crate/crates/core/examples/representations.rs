//! The same associated Meixner value from every independent representation.
//!
//! ```bash
//! cargo run --example representations
//! ```

use aopoly::closedforms::{
    charlier_3f2, laguerre_3f2, meixner_4f3, meixner_4f3_alt, meixner_c1_degenerate,
    meixner_cross_2f1, meixner_quadratic, mp_from_meixner, CharlierVariant, LaguerreVariant,
};
use aopoly::recurrences::{
    charlier_seq, laguerre_seq, meixner_seq, mp_seq, CharlierParams, LaguerreParams, MPParams,
    MeixnerParams,
};
use aopoly::scalar::{re, rel_diff};

fn main() -> aopoly::Result<()> {
    let (x, n) = (re(-1.2), 12);
    let p = MeixnerParams::new(1.5, 0.4, 0.7);
    let oracle = meixner_seq(x, &p, n)?.get(n);
    println!("M_{n}(x=-1.2; β=1.5, c=0.4, γ=0.7)");
    println!("  {:<12} {:>24.16e}", "recurrence", oracle.re);
    for (name, v) in [
        ("4F3", meixner_4f3(x, &p, n)?),
        ("4F3 alt", meixner_4f3_alt(x, &p, n)?),
        ("quadratic", meixner_quadratic(x, &p, n)?),
        ("cross 2F1", meixner_cross_2f1(x, &p, n)?),
    ] {
        println!(
            "  {name:<12} {:>24.16e}  rel diff {:.1e}",
            v.re,
            rel_diff(v, oracle)
        );
    }

    let cp = CharlierParams { a: 2.0, gamma: 0.8 };
    let c = charlier_seq(re(0.5), &cp, n)?.get(n);
    let c3 = charlier_3f2(re(0.5), &cp, n, CharlierVariant::Primary)?;
    let c3t = charlier_3f2(re(0.5), &cp, n, CharlierVariant::Transformed)?;
    println!(
        "Charlier C_{n}: recurrence {:.16e}, 3F2 {:.1e}, transformed {:.1e}",
        c.re,
        rel_diff(c3, c),
        rel_diff(c3t, c)
    );

    let lp = LaguerreParams {
        alpha: 0.5,
        gamma: 0.9,
    };
    let l = laguerre_seq(re(1.2), &lp, n)?.get(n);
    let l3 = laguerre_3f2(re(1.2), &lp, n, LaguerreVariant::Primary)?;
    let lr = laguerre_3f2(re(1.2), &lp, n, LaguerreVariant::Rahman)?;
    println!(
        "Laguerre L_{n}: recurrence {:.16e}, 3F2 {:.1e}, Rahman {:.1e}",
        l.re,
        rel_diff(l3, l),
        rel_diff(lr, l)
    );

    let mp = MPParams {
        nu: 0.3,
        phi: 1.0,
        gamma: 0.5,
    };
    let m = mp_seq(re(0.3), &mp, n)?.get(n);
    println!(
        "Meixner–Pollaczek P_{n}: recurrence {:.16e}, via Meixner {:.1e}",
        m.re,
        rel_diff(mp_from_meixner(re(0.3), &mp, n)?, m)
    );

    // at c = 1 the value no longer depends on x
    let d = meixner_c1_degenerate(2.0, 0.5, 2)?;
    let at9 = meixner_seq(re(9.0), &MeixnerParams::new(2.0, 1.0, 0.5), 2)?.get(2);
    println!(
        "c = 1: degenerate closed form {} vs recurrence at x = 9 {}",
        d.re, at9.re
    );
    Ok(())
}
