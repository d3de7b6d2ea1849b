//! Central values L(1/2, chi) by the approximate functional equation, with
//! the functional-equation residual and a Hurwitz-zeta cross-check.

use hecke_moments::lfunc::{
    dirichlet_l_central, dirichlet_l_via_hurwitz, functional_equation_residual, hecke_l_central, DEFAULT_THRESHOLD,
};
use hecke_moments::primes::PrimeElement;
use hecke_moments::symbols::induced_dirichlet_character;
use hecke_moments::Family;

fn main() -> hecke_moments::Result<()> {
    let cases = [
        (Family::QuadHeckeQw, "37+72w"),
        (Family::QuadHeckeQi, "1+16i"),
        (Family::CubicHecke, "1+9w"),
        (Family::CubicHecke, "-8-9w"),
        (Family::QuarticHecke, "1+16i"),
    ];
    for (family, s) in cases {
        let pi = PrimeElement::new(s.parse()?)?;
        let rec = hecke_l_central(family, &pi, None, DEFAULT_THRESHOLD)?;
        let shifted = hecke_l_central(family, &pi, Some(rec.balance * 4.0), DEFAULT_THRESHOLD)?;
        println!(
            "{family:<18} {s:>8}  L = {:+.10} {:+.10}i  residual(x = 4x0) = {:.1e}  terms <= {}",
            rec.value.re,
            rec.value.im,
            functional_equation_residual(&shifted),
            rec.truncation
        );
    }
    let pi = PrimeElement::new("1+9w".parse()?)?;
    let chi = induced_dirichlet_character(&pi, 3)?;
    let afe = dirichlet_l_central(&chi, None)?;
    let oracle = dirichlet_l_via_hurwitz(&chi, 0.5)?;
    println!(
        "cubic chi mod 73: AFE {:+.12} {:+.12}i  Hurwitz {:+.12} {:+.12}i",
        afe.value.re, afe.value.im, oracle.re, oracle.im
    );
    Ok(())
}
