//! Weighted first moments of each family at dyadic scales, compared with
//! the predicted main terms.
//!
//! cargo run --release --example first_moments -- [max_y] [family]

use hecke_moments::moments::{fit_main_terms, moment, MomentOptions};
use hecke_moments::Family;

fn main() -> hecke_moments::Result<()> {
    let max_y: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1e5);
    let only: Option<Family> = std::env::args().nth(2).map(|s| s.parse()).transpose()?;
    let opts = MomentOptions::default();
    for family in Family::ALL.into_iter().filter(|f| only.map_or(true, |o| o == *f)) {
        println!("{family}");
        let mut points = Vec::new();
        let mut y = 1e4;
        let mut phi_hat = 0.0;
        while y <= max_y * 1.0001 {
            let r = moment(family, y, opts, None)?;
            phi_hat = r.constants_used.phi_hat0;
            println!(
                "  y={:>9.0}  primes={:>5}  observed={:>14.4}  main={:>14.4}  ratio={:.4}  |Im|/|S|={:.1e}  {:.2}s",
                y,
                r.prime_count,
                r.observed_sum.re,
                r.predicted_main,
                r.ratio(),
                r.relative_imaginary(),
                r.runtime_s
            );
            points.push((y, r.observed_sum.re));
            y *= 2.0;
        }
        if family.is_quadratic() && points.len() >= 2 {
            let (a, b) = fit_main_terms(&points, phi_hat)?;
            println!("  fitted A={a:.6}  B={b:.6}");
        }
    }
    Ok(())
}
