//! Power residue symbols, the cubic reciprocity law, supplement laws and
//! the Dirichlet characters they induce.
//!
//! cargo run --example residue_symbols

use hecke_moments::primes::{enumerate_prime_elements, PrimeElement};
use hecke_moments::symbols::{classify_order_n_characters, induced_dirichlet_character, supplement_check};
use hecke_moments::{residue_symbol, FieldTag, QuadInt};

fn main() -> hecke_moments::Result<()> {
    let pi: QuadInt = "1+9w".parse()?;
    for a in ["2", "3+w", "1-w", "5"] {
        let a = QuadInt::parse_in(a, FieldTag::EisensteinQw)?;
        println!("({a} / {pi})_3 = w^{}", residue_symbol(&a, &pi, 3)?);
    }

    // reciprocity for two primary primes
    let (p, q) = (QuadInt::eisenstein(-1, 3), QuadInt::eisenstein(2, 6));
    println!(
        "({p}/{q})_3 = w^{}   ({q}/{p})_3 = w^{}",
        residue_symbol(&p, &q, 3)?,
        residue_symbol(&q, &p, 3)?
    );

    let class = QuadInt::eisenstein(9, 0);
    let members = enumerate_prime_elements(FieldTag::EisensteinQw, 2000, &class)?;
    let trivial = members.iter().filter_map(|c| supplement_check(&c.value).ok()).filter(|s| s.cubic_one_minus_w.is_one()).count();
    println!("((1-w)/c)_3 = 1 for {trivial} of {} primes c = 1 mod 9 up to norm 2000", members.len());

    let quartic: QuadInt = "1+16i".parse()?;
    println!("(i / {quartic})_4 = i^{}", residue_symbol(&QuadInt::gaussian(0, 1), &quartic, 4)?);

    let pe = PrimeElement::new(pi)?;
    let chi = induced_dirichlet_character(&pe, 3)?;
    let found = classify_order_n_characters(73, 3)?;
    println!(
        "chi mod 73 from {pi}: chi(2) = w^{}, one of {} cubic characters mod 73 (match: {})",
        chi.eval(2),
        found.len(),
        found.iter().any(|c| c.table == chi.table)
    );
    Ok(())
}
