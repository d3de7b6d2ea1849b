//! Gauss sums g_n(r, c) over Z[w] and Z[i], their modulus and the rational
//! Gauss sum of the induced character.

use hecke_moments::gauss::{gauss_sum_g, gauss_sum_prime, rational_gauss_sum};
use hecke_moments::primes::PrimeElement;
use hecke_moments::symbols::induced_dirichlet_character;
use hecke_moments::QuadInt;

fn main() -> hecke_moments::Result<()> {
    for (s, n) in [("1+9w", 3u8), ("-8-9w", 3), ("1+16i", 4), ("-3+8i", 4)] {
        let pi = PrimeElement::new(s.parse()?)?;
        let one = QuadInt::one(pi.field());
        let g = gauss_sum_prime(n, &one, &pi)?;
        let chi = induced_dirichlet_character(&pi, n)?;
        let tau = rational_gauss_sum(1, &chi);
        println!(
            "g_{n}(1, {s}) = {:+.9} {:+.9}i   |g|^2/N = {:.12}   tau(chi) = {:+.9} {:+.9}i",
            g.re,
            g.im,
            g.abs().powi(2) / pi.norm as f64,
            tau.re,
            tau.im
        );
    }
    // composite modulus uses the literal sum
    let c = QuadInt::eisenstein(-1, 3).checked_mul(&QuadInt::eisenstein(1, 9))?;
    let g = gauss_sum_g(3, &QuadInt::eisenstein(2, 0), &c)?;
    println!("g_3(2, {c}) = {:+.6} {:+.6}i  (N(c) = {})", g.re, g.im, c.norm());
    Ok(())
}
