//! Euclidean division, gcds, primary associates, residue systems and prime
//! enumeration in Z[i] and Z[w].

use hecke_moments::primes::{enumerate_prime_elements, factor};
use hecke_moments::{FieldTag, QuadInt, ResidueSystem};

fn main() -> hecke_moments::Result<()> {
    let a: QuadInt = "17+5w".parse()?;
    let b: QuadInt = "3-2w".parse()?;
    let (q, r) = a.divrem(&b)?;
    println!("{a} = ({b})*({q}) + ({r}),  N(r) = {} < N(b) = {}", r.norm(), b.norm());
    let ctx = FieldTag::EisensteinQw.context();
    println!("gcd({a}, {b}) = {}", ctx.gcd(&a, &b)?);

    let z = QuadInt::gaussian(5, 12);
    println!("primary associate of {z}: {}", z.primary_associate()?);
    let (unit, parts) = factor(&QuadInt::gaussian(130, 0))?;
    let shown: Vec<String> = parts.iter().map(|(p, e)| format!("({})^{e}", p.value)).collect();
    println!("130 = ({unit}) * {}", shown.join(" * "));

    for (modulus, field) in [(36, FieldTag::EisensteinQw), (9, FieldTag::EisensteinQw), (16, FieldTag::GaussianQi)] {
        let c = QuadInt::rational(modulus, field);
        let sys = ResidueSystem::new(&c)?;
        println!(
            "{}: |O/({modulus})| = {}, ray class number h_({modulus}) = {}",
            field.short_name(),
            sys.len(),
            field.context().ray_class_number(&c)?
        );
    }

    let class = QuadInt::eisenstein(9, 0);
    println!("primes = 1 mod 9 in Z[w] with norm <= 400:");
    for p in enumerate_prime_elements(FieldTag::EisensteinQw, 400, &class)? {
        println!("  {:>4}  {}", p.norm, p.value);
    }
    Ok(())
}
