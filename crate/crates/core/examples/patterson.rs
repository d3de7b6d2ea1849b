//! Partial sums of cubic and quartic Gauss sums over primes against the
//! growth shapes x^(27/32) and x^(19/20).
//!
//! cargo run --release --example patterson -- [x_max]

use hecke_moments::moments::{patterson_diagnostic, MomentOptions};
use hecke_moments::FieldTag;

fn main() -> hecke_moments::Result<()> {
    let x_max: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2e5);
    for (field, n) in [(FieldTag::EisensteinQw, 3u8), (FieldTag::GaussianQi, 4)] {
        println!("{} n={n}", field.short_name());
        println!("{:>10} {:>7} {:>12} {:>12} {:>12}", "x", "primes", "|S(x)|", "x^(27/32)", "x^(19/20)");
        for r in patterson_diagnostic(field, n, x_max, MomentOptions::default())? {
            println!("{:>10.0} {:>7} {:>12.3} {:>12.1} {:>12.1}", r.x, r.prime_count, r.abs_s, r.x_27_32, r.x_19_20);
        }
    }
    Ok(())
}
