//! Additive characters, Gauss sums over O_K and over Z/p, and root numbers.

use std::f64::consts::TAU;
use std::ops::{Add, Mul};

use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::field::{FieldTag, FracQuad, QuadInt, ResidueSystem};
use crate::primes::{factor, PrimeElement};
use crate::symbols::{check_order_field, induced_dirichlet_character, DirichletChar, ResidueField, RootOfUnity};

/// A complex number with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexVal {
    pub re: f64,
    pub im: f64,
    pub err: f64,
}

impl ComplexVal {
    pub fn new(re: f64, im: f64, err: f64) -> Self {
        ComplexVal { re, im, err: err.max(0.0) }
    }

    pub fn exact(z: Complex64) -> Self {
        ComplexVal::new(z.re, z.im, 0.0)
    }

    pub fn from_complex(z: Complex64, err: f64) -> Self {
        ComplexVal::new(z.re, z.im, err)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn conj(&self) -> Self {
        ComplexVal::new(self.re, -self.im, self.err)
    }

    pub fn scale(&self, k: f64) -> Self {
        ComplexVal::new(self.re * k, self.im * k, self.err * k.abs())
    }

    /// `|self - other| <= max(err_self + err_other, 1e-9 * scale)`.
    pub fn approx_eq(&self, other: &ComplexVal, scale: f64) -> bool {
        let d = (self.to_complex() - other.to_complex()).norm();
        d <= (self.err + other.err).max(1e-9 * scale)
    }
}

impl Add for ComplexVal {
    type Output = ComplexVal;
    fn add(self, o: Self) -> Self {
        ComplexVal::new(self.re + o.re, self.im + o.im, self.err + o.err)
    }
}

impl Mul for ComplexVal {
    type Output = ComplexVal;
    fn mul(self, o: Self) -> Self {
        let z = self.to_complex() * o.to_complex();
        let err = self.abs() * o.err + o.abs() * self.err + self.err * o.err;
        ComplexVal::from_complex(z, err)
    }
}

/// `e(t) = exp(2 pi i t)` for an exact rational `t`, reduced mod 1 first.
pub fn e_rational(t: Ratio<i128>) -> ComplexVal {
    let frac = t - t.floor();
    let (s, c) = (TAU * (*frac.numer() as f64 / *frac.denom() as f64)).sin_cos();
    ComplexVal::new(c, s, 2.0 * f64::EPSILON)
}

/// `e~(k) = e(Tr(k / delta))`.
pub fn additive_char(k: &FracQuad) -> Result<ComplexVal> {
    let delta = k.num.context().delta;
    let t = k.div_by(&delta)?.trace();
    if t.is_integer() {
        return Ok(ComplexVal::new(1.0, 0.0, 0.0));
    }
    Ok(e_rational(t))
}

fn trace_pair(x: (i128, i128), field: FieldTag) -> i128 {
    match field {
        FieldTag::GaussianQi => 2 * x.0,
        FieldTag::EisensteinQw => 2 * x.0 - x.1,
    }
}

/// For `x = u + v*theta`, `Tr(r x / (c delta)) = (u*t1 + v*t2) / m` exactly.
struct PhaseForm {
    t1: i128,
    t2: i128,
    m: i128,
}

impl PhaseForm {
    fn new(r: &QuadInt, c: &QuadInt) -> Result<Self> {
        let d = c.checked_mul(&c.context().delta)?;
        let alpha = r.checked_mul(&d.conj())?;
        let theta = QuadInt::new(0, 1, c.field);
        let m = d.norm_i128();
        let t1 = trace_pair((alpha.a as i128, alpha.b as i128), c.field).rem_euclid(m);
        let t2 = trace_pair(theta.mul_wide(&alpha), c.field).rem_euclid(m);
        Ok(PhaseForm { t1, t2, m })
    }

    #[inline]
    fn phase(&self, u: u64, v: u64) -> Complex64 {
        let num = (u as i128 * self.t1 + v as i128 * self.t2).rem_euclid(self.m);
        let (s, c) = (TAU * num as f64 / self.m as f64).sin_cos();
        Complex64::new(c, s)
    }
}

fn check_gauss_modulus(n: u8, c: &QuadInt) -> Result<()> {
    check_order_field(n, c.field)?;
    if c.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let bad = n as u64 * c.context().ramified_rational_prime;
    if crate::arith::gcd_u64(c.try_norm()?, bad) != 1 {
        return Err(Error::Precondition(format!("Gauss sum modulus {c} is not coprime to {bad}")));
    }
    Ok(())
}

fn combine_buckets(n: u8, buckets: &[Complex64], terms: u64) -> ComplexVal {
    let mut total = Complex64::new(0.0, 0.0);
    for (k, s) in buckets.iter().enumerate() {
        total += RootOfUnity::new(n, k as u8).to_complex() * s;
    }
    ComplexVal::from_complex(total, 8.0 * f64::EPSILON * terms as f64)
}

/// `g_n(r, c) = sum_{x mod c} (x / c)_n e~(r x / c)`.
pub fn gauss_sum_g(n: u8, r: &QuadInt, c: &QuadInt) -> Result<ComplexVal> {
    check_gauss_modulus(n, c)?;
    r.check_field(c)?;
    if let Ok(pi) = PrimeElement::new(*c) {
        return gauss_sum_prime(n, r, &pi);
    }
    let (_, factors) = factor(c)?;
    let fields: Vec<(ResidueField, u32)> = factors
        .iter()
        .map(|(pi, e)| Ok((ResidueField::new(pi)?, *e)))
        .collect::<Result<_>>()?;
    let sys = ResidueSystem::new(c)?;
    let phase = PhaseForm::new(r, c)?;
    let mut buckets = vec![Complex64::new(0.0, 0.0); n as usize];
    for x in sys.iter() {
        let mut chi = RootOfUnity::one(n);
        for (rf, e) in &fields {
            chi = chi * rf.symbol(&x, n)?.pow(*e);
        }
        if chi.is_zero {
            continue;
        }
        buckets[chi.index as usize] += phase.phase(x.a as u64, x.b as u64);
    }
    Ok(combine_buckets(n, &buckets, sys.len()))
}

/// `g_n(r, pi)` for a prime modulus, using a character table built from a
/// generator of `(O/pi)^x`. Phases advance by repeated multiplication and
/// are re-anchored exactly every few dozen terms.
pub fn gauss_sum_prime(n: u8, r: &QuadInt, pi: &PrimeElement) -> Result<ComplexVal> {
    check_gauss_modulus(n, &pi.value)?;
    let rf = ResidueField::new(pi)?;
    let table = rf.character_table(n)?;
    let sys = ResidueSystem::new(&pi.value)?;
    let phase = PhaseForm::new(r, &pi.value)?;
    let step = phase.phase(1, 0);
    let mut buckets = vec![Complex64::new(0.0, 0.0); n as usize];
    let d1 = sys.d1 as usize;
    for v in 0..sys.d2 {
        let row = &table[v as usize * d1..(v as usize + 1) * d1];
        let mut z = Complex64::new(0.0, 0.0);
        for (u, &k) in row.iter().enumerate() {
            if u % ANCHOR == 0 {
                z = phase.phase(u as u64, v);
            } else {
                z *= step;
            }
            if k != u8::MAX {
                buckets[k as usize] += z;
            }
        }
    }
    Ok(combine_buckets(n, &buckets, sys.len()))
}

const ANCHOR: usize = 32;

/// `tau(r, chi) = sum_{x mod p} chi(x) e(r x / p)`.
pub fn rational_gauss_sum(r: i64, chi: &DirichletChar) -> ComplexVal {
    let p = chi.modulus as i128;
    let mut buckets = vec![Complex64::new(0.0, 0.0); chi.order as usize];
    let r = (r as i128).rem_euclid(p);
    for x in 1..p {
        let v = chi.table[x as usize];
        if v.is_zero {
            continue;
        }
        let (s, c) = (TAU * ((r * x) % p) as f64 / p as f64).sin_cos();
        buckets[v.index as usize] += Complex64::new(c, s);
    }
    combine_buckets(chi.order, &buckets, chi.modulus)
}

/// The root number `W(chi)` of the family character attached to `pi`,
/// normalised so that `|W| = sqrt(N(pi))` (for the Dirichlet families,
/// `sqrt(p)`).
pub fn root_number(family: Family, pi: &PrimeElement) -> Result<ComplexVal> {
    family.check_member(&pi.value)?;
    let n = family.order();
    if family.is_dirichlet() {
        let chi = induced_dirichlet_character(pi, n)?;
        return Ok(rational_gauss_sum(1, &chi));
    }
    if family.is_quadratic() {
        return Ok(ComplexVal::new((pi.norm as f64).sqrt(), 0.0, 0.0));
    }
    gauss_sum_prime(n, &QuadInt::one(pi.field()), pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::residue_symbol;
    use crate::primes::SplitType;

    fn w(a: i64, b: i64) -> QuadInt {
        QuadInt::eisenstein(a, b)
    }
    fn g(a: i64, b: i64) -> QuadInt {
        QuadInt::gaussian(a, b)
    }

    #[test]
    fn additive_character_values() {
        let k = FracQuad::new(w(1, 0), w(1, -1)).unwrap();
        let z = additive_char(&k).unwrap();
        assert!((z.to_complex() - Complex64::from_polar(1.0, TAU / 3.0)).norm() < 1e-15);
        let zero = additive_char(&FracQuad::integral(w(0, 0))).unwrap();
        assert_eq!(zero.to_complex(), Complex64::new(1.0, 0.0));
        for (a, b) in [(3, -7), (11, 5), (-2, 9)] {
            assert_eq!(additive_char(&FracQuad::integral(w(a, b))).unwrap().re, 1.0);
            assert_eq!(additive_char(&FracQuad::integral(g(a, b))).unwrap().re, 1.0);
        }
    }

    #[test]
    fn gauss_sum_moduli() {
        let pi = w(-2, -3);
        let g3 = gauss_sum_g(3, &w(1, 0), &pi).unwrap();
        assert!((g3.abs() - 7f64.sqrt()).abs() < 1e-12);
        let zero = gauss_sum_g(3, &(pi * w(2, 1)), &pi).unwrap();
        assert!(zero.abs() < 1e-12);
        let g4 = gauss_sum_g(4, &g(1, 0), &g(1, 16)).unwrap();
        assert!((g4.abs() - 257f64.sqrt()).abs() < 1e-9);
        assert!(gauss_sum_g(3, &w(1, 0), &w(1, -1)).is_err());
        assert!(gauss_sum_g(4, &g(1, 0), &g(3, 3)).is_err());
    }

    #[test]
    fn fast_path_matches_literal_sum() {
        for c in [w(-2, -3), w(1, 9), w(-5, 0)] {
            let pi = PrimeElement::new(c).unwrap();
            let n = if pi.split_type == SplitType::Inert { 2 } else { 3 };
            let fast = gauss_sum_prime(n, &w(2, 1), &pi).unwrap();
            let sys = ResidueSystem::new(&c).unwrap();
            let mut lit = Complex64::new(0.0, 0.0);
            for x in sys.iter() {
                let chi = residue_symbol(&x, &c, n).unwrap();
                let e = additive_char(&FracQuad::new(w(2, 1) * x, c).unwrap()).unwrap();
                lit += chi.to_complex() * e.to_complex();
            }
            assert!((fast.to_complex() - lit).norm() < 1e-9, "{c}");
        }
    }

    #[test]
    fn composite_modulus() {
        // |g| = sqrt(N) fails for non-squarefree moduli but holds for coprime products
        let c = w(-2, -3) * w(1, 9);
        let v = gauss_sum_g(3, &w(1, 0), &c).unwrap();
        assert!((v.abs() - (c.norm() as f64).sqrt()).abs() < 1e-8);
    }

    #[test]
    fn twist_law() {
        let pi = w(1, 9);
        let base = gauss_sum_g(3, &w(1, 0), &pi).unwrap().to_complex();
        for r in [w(2, 0), w(5, 3), w(-4, 7)] {
            let chi = residue_symbol(&r, &pi, 3).unwrap().conj().to_complex();
            let tw = gauss_sum_g(3, &r, &pi).unwrap().to_complex();
            assert!((tw - chi * base).norm() < 1e-9);
        }
    }

    #[test]
    fn tau_matches_g() {
        let pi = PrimeElement::new(w(1, 9)).unwrap();
        let chi = induced_dirichlet_character(&pi, 3).unwrap();
        let tau = rational_gauss_sum(1, &chi);
        let g3 = gauss_sum_prime(3, &w(1, 0), &pi).unwrap();
        assert!((tau.to_complex() - g3.to_complex()).norm() < 1e-6);
        assert!(rational_gauss_sum(0, &chi).abs() < 1e-12);

        let pi = PrimeElement::new(g(1, 16)).unwrap();
        let chi = induced_dirichlet_character(&pi, 4).unwrap();
        let tau = rational_gauss_sum(1, &chi);
        let g4 = gauss_sum_prime(4, &g(1, 0), &pi).unwrap();
        assert!((tau.to_complex() - g4.to_complex()).norm() < 1e-6);
    }

    #[test]
    fn root_numbers() {
        let pi = PrimeElement::new(w(37, 72)).unwrap();
        let wq = root_number(Family::QuadHeckeQw, &pi).unwrap();
        assert!((wq.re - 3889f64.sqrt()).abs() < 1e-12 && wq.im == 0.0);
        let pi = PrimeElement::new(w(1, 9)).unwrap();
        let w3 = root_number(Family::CubicHecke, &pi).unwrap();
        assert!(((w3.abs() - 73f64.sqrt()) / 73f64.sqrt()).abs() < 1e-9);
        assert!(root_number(Family::CubicHecke, &PrimeElement::new(w(-2, -3)).unwrap()).is_err());
    }
}
