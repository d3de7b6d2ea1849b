//! Central values `L(1/2, chi)` from approximate functional equations.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::Family;
use crate::field::QuadInt;
use crate::gauss::{rational_gauss_sum, root_number, ComplexVal};
use crate::ideals::{prime_table, walk_character};
use crate::primes::PrimeElement;
use crate::special::{hurwitz_zeta, v_kernel, w_kernel};
use crate::symbols::{DirichletChar, ResidueField, RootOfUnity};

/// Kernel arguments beyond this are dropped from the sums.
pub const DEFAULT_THRESHOLD: f64 = 40.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Afe,
    HurwitzOracle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LValueRecord {
    pub family: Family,
    pub pi: QuadInt,
    pub conductor_norm: u64,
    pub value: ComplexVal,
    /// `x` for Hecke families, `A` for Dirichlet ones.
    pub balance: f64,
    /// Largest norm summed.
    pub truncation: u64,
    pub method: Method,
    /// `W(chi)`, with `|W| = sqrt(conductor_norm)`.
    pub root_number: ComplexVal,
}

impl LValueRecord {
    /// `W(chi) / sqrt(N)`.
    pub fn epsilon(&self) -> Complex64 {
        self.root_number.to_complex() / (self.conductor_norm as f64).sqrt()
    }
}

/// Character indices of `chi_pi = (. / pi)_n` on every prime ideal of norm
/// `<= bound`, or `None` where the prime ideal is `(pi)` itself.
fn prime_character(pi: &PrimeElement, n: u8, bound: u64) -> Result<Vec<(u64, Option<u8>)>> {
    let rf = ResidueField::new(pi)?;
    let table = prime_table(pi.field(), bound);
    table
        .iter()
        .take_while(|p| p.norm <= bound)
        .map(|p| {
            let s = rf.symbol(&p.generator, n)?;
            Ok((p.norm, if s.is_zero { None } else { Some(s.index) }))
        })
        .collect()
}

fn combine(n: u8, buckets: &[f64], conjugate: bool) -> Complex64 {
    buckets
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let z = RootOfUnity::new(n, k as u8);
            let z = if conjugate { z.conj() } else { z };
            z.to_complex() * b
        })
        .sum()
}

fn symmetric_balance(family: Family, norm: u64) -> f64 {
    ((family.field().context().abs_discriminant() * norm) as f64).sqrt()
}

/// Hecke AFE with an explicitly supplied `epsilon = W / sqrt(N)`:
/// `sum chi(A) N(A)^{-1/2} V(2 pi N(A) / x)
///   + epsilon sum conj(chi)(A) N(A)^{-1/2} V(2 pi N(A) x / (|D| N(pi)))`.
pub fn hecke_afe_with_epsilon(
    family: Family,
    pi: &PrimeElement,
    balance: f64,
    threshold: f64,
    epsilon: Complex64,
) -> Result<(ComplexVal, u64)> {
    if !(balance > 0.0) || !(threshold > 0.0) {
        return Err(Error::Range(format!("balance {balance} and threshold {threshold} must be positive")));
    }
    let n = family.order();
    let d = family.field().context().abs_discriminant() as f64;
    let nf = pi.norm as f64;
    let c1 = 2.0 * PI / balance;
    let c2 = 2.0 * PI * balance / (d * nf);
    let t1 = (threshold / c1).floor() as u64;
    let t2 = (threshold / c2).floor() as u64;
    let top = t1.max(t2).max(1);
    let primes = prime_character(pi, n, top)?;
    let mut b1 = vec![0.0; n as usize];
    let mut b2 = vec![0.0; n as usize];
    let mut terms = 0u64;
    walk_character(&primes, n, top, |m, k| {
        let mf = m as f64;
        let w = 1.0 / mf.sqrt();
        if m <= t1 {
            b1[k as usize] += w * v_kernel(c1 * mf);
        }
        if m <= t2 {
            b2[k as usize] += w * v_kernel(c2 * mf);
        }
        terms += 1;
    });
    let s1 = combine(n, &b1, false);
    let s2 = combine(n, &b2, true);
    let value = s1 + epsilon * s2;
    let err = 16.0 * f64::EPSILON * terms as f64 + 4.0 * (-threshold).exp() * (1.0 + top as f64);
    Ok((ComplexVal::from_complex(value, err), top))
}

/// `L(1/2, chi)` for a Hecke family character attached to `pi`.
pub fn hecke_l_central(
    family: Family,
    pi: &PrimeElement,
    balance: Option<f64>,
    threshold: f64,
) -> Result<LValueRecord> {
    if family.is_dirichlet() {
        return Err(Error::Precondition(format!("{family} is not a Hecke family")));
    }
    let w = root_number(family, pi)?;
    let balance = balance.unwrap_or_else(|| symmetric_balance(family, pi.norm));
    let eps = w.to_complex() / (pi.norm as f64).sqrt();
    let (value, truncation) = hecke_afe_with_epsilon(family, pi, balance, threshold, eps)?;
    Ok(LValueRecord {
        family,
        pi: pi.value,
        conductor_norm: pi.norm,
        value,
        balance,
        truncation,
        method: Method::Afe,
        root_number: w,
    })
}

/// Quadratic Hecke central value at the symmetric balance,
/// `2 sum chi(A) N(A)^{-1/2} V(2 pi N(A) / sqrt(|D| N(pi)))`.
pub fn hecke_l_central_quadratic(pi: &PrimeElement) -> Result<LValueRecord> {
    let family = match pi.field() {
        crate::field::FieldTag::EisensteinQw => Family::QuadHeckeQw,
        crate::field::FieldTag::GaussianQi => Family::QuadHeckeQi,
    };
    hecke_l_central(family, pi, None, DEFAULT_THRESHOLD)
}

/// Cubic (`n = 3`) or quartic (`n = 4`) Hecke central value.
pub fn hecke_l_central_order_n(pi: &PrimeElement, n: u8, balance: Option<f64>) -> Result<LValueRecord> {
    let family = match n {
        3 => Family::CubicHecke,
        4 => Family::QuarticHecke,
        _ => return Err(Error::Precondition(format!("order {n} is not 3 or 4"))),
    };
    hecke_l_central(family, pi, balance, DEFAULT_THRESHOLD)
}

/// `|L - epsilon conj(L)|`, which vanishes when the value and the root
/// number are consistent with the functional equation.
pub fn functional_equation_residual(rec: &LValueRecord) -> f64 {
    let l = rec.value.to_complex();
    (l - rec.epsilon() * l.conj()).norm()
}

/// Dirichlet AFE:
/// `sum chi(m) m^{-1/2} W(m/A) + (tau/sqrt q) sum conj(chi)(m) m^{-1/2} W(m/B)`,
/// `AB = q`, for even primitive characters of prime modulus.
pub fn dirichlet_l_central(chi: &DirichletChar, balance_a: Option<f64>) -> Result<LValueRecord> {
    dirichlet_l_central_with(chi, balance_a, DEFAULT_THRESHOLD)
}

pub fn dirichlet_l_central_with(chi: &DirichletChar, balance_a: Option<f64>, threshold: f64) -> Result<LValueRecord> {
    if !chi.is_even() {
        return Err(Error::Precondition(format!("character mod {} is odd", chi.modulus)));
    }
    if chi.is_principal() {
        return Err(Error::Precondition("principal character".into()));
    }
    let q = chi.modulus as f64;
    let a = balance_a.unwrap_or(q.sqrt());
    if !(a > 0.0) {
        return Err(Error::Range(format!("balance A = {a} must be positive")));
    }
    let b = q / a;
    let tau = rational_gauss_sum(1, chi);
    let eps = tau.to_complex() / q.sqrt();
    // W(y) ~ exp(-pi y^2): stop once pi (m / A)^2 exceeds the threshold
    let reach = (threshold / PI).sqrt();
    let t1 = (a * reach).floor() as u64;
    let t2 = (b * reach).floor() as u64;
    let n = chi.order;
    let mut b1 = vec![0.0; n as usize];
    let mut b2 = vec![0.0; n as usize];
    for m in 1..=t1.max(t2) {
        let v = chi.eval(m as i64);
        if v.is_zero {
            continue;
        }
        let mf = m as f64;
        let w = 1.0 / mf.sqrt();
        if m <= t1 {
            b1[v.index as usize] += w * w_kernel(mf / a);
        }
        if m <= t2 {
            b2[v.index as usize] += w * w_kernel(mf / b);
        }
    }
    let value = combine(n, &b1, false) + eps * combine(n, &b2, true);
    let top = t1.max(t2);
    let err = 16.0 * f64::EPSILON * top as f64 + 4.0 * (-threshold).exp() * (1.0 + top as f64);
    Ok(LValueRecord {
        family: if n == 3 { Family::DirichletCubic } else { Family::DirichletQuartic },
        pi: chi.source.unwrap_or(QuadInt::rational(chi.modulus as i64, crate::field::FieldTag::EisensteinQw)),
        conductor_norm: chi.modulus,
        value: ComplexVal::from_complex(value, err),
        balance: a,
        truncation: top,
        method: Method::Afe,
        root_number: tau,
    })
}

/// `L(s, chi) = q^{-s} sum_{a=1}^{q-1} chi(a) zeta(s, a/q)`.
pub fn dirichlet_l_via_hurwitz(chi: &DirichletChar, s: f64) -> Result<ComplexVal> {
    if !(s > 0.0 && s <= 2.0) || s == 1.0 {
        return Err(Error::Range(format!("s = {s} outside (0, 2] \\ {{1}}")));
    }
    let q = chi.modulus as f64;
    let mut buckets = vec![0.0; chi.order as usize];
    for a in 1..chi.modulus {
        let v = chi.table[a as usize];
        if !v.is_zero {
            buckets[v.index as usize] += hurwitz_zeta(s, a as f64 / q)?;
        }
    }
    let value = combine(chi.order, &buckets, false) * q.powf(-s);
    Ok(ComplexVal::from_complex(value, 1e-13 * q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::{classify_order_n_characters, induced_dirichlet_character};

    fn w(a: i64, b: i64) -> PrimeElement {
        PrimeElement::new(QuadInt::eisenstein(a, b)).unwrap()
    }

    #[test]
    fn quadratic_value_is_real_and_stable() {
        let pi = w(37, 72);
        let a = hecke_l_central_quadratic(&pi).unwrap();
        let b = hecke_l_central(Family::QuadHeckeQw, &pi, None, 45.0).unwrap();
        assert_eq!(a.value.im, 0.0);
        assert!((a.value.re - b.value.re).abs() < 1e-10);
        let c = hecke_l_central(Family::QuadHeckeQw, &pi, Some(2.0 * a.balance), 40.0).unwrap();
        assert!((a.value.re - c.value.re).abs() < 1e-8 * a.value.re.abs().max(1.0));
    }

    #[test]
    fn cubic_balance_and_conjugation() {
        let pi = w(1, 9);
        let a = hecke_l_central_order_n(&pi, 3, None).unwrap();
        let b = hecke_l_central_order_n(&pi, 3, Some(4.0 * a.balance)).unwrap();
        let d = (a.value.to_complex() - b.value.to_complex()).norm();
        assert!(d < 1e-8 * a.value.abs().max(1.0), "{d}");
        assert!(functional_equation_residual(&b) < 1e-6);
        let c = hecke_l_central_order_n(&pi.conj(), 3, None).unwrap();
        assert!((c.value.to_complex() - a.value.to_complex().conj()).norm() < 1e-8);
    }

    #[test]
    fn wrong_root_number_is_detected() {
        let pi = w(1, 9);
        let rec = hecke_l_central_order_n(&pi, 3, None).unwrap();
        let x = 2.0 * rec.balance;
        let (good, _) = hecke_afe_with_epsilon(Family::CubicHecke, &pi, x, 40.0, rec.epsilon()).unwrap();
        let (bad, _) = hecke_afe_with_epsilon(Family::CubicHecke, &pi, x, 40.0, -rec.epsilon()).unwrap();
        let res = |v: ComplexVal, e: Complex64| (v.to_complex() - e * v.to_complex().conj()).norm();
        assert!(res(good, rec.epsilon()) < 1e-6);
        assert!(res(bad, -rec.epsilon()) > 1e-2);
    }

    #[test]
    fn dirichlet_afe_matches_hurwitz() {
        let chi = induced_dirichlet_character(&w(1, 9), 3).unwrap();
        let afe = dirichlet_l_central(&chi, None).unwrap();
        let afe2 = dirichlet_l_central(&chi, Some(2.0 * 73f64.sqrt())).unwrap();
        let hur = dirichlet_l_via_hurwitz(&chi, 0.5).unwrap();
        assert!((afe.value.to_complex() - hur.to_complex()).norm() < 1e-8);
        assert!((afe.value.to_complex() - afe2.value.to_complex()).norm() < 1e-8);
        assert!((afe.epsilon().norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn quadratic_dirichlet_mod_five() {
        let chi = classify_order_n_characters(5, 2).unwrap().pop().unwrap();
        assert!(chi.is_even());
        let afe = dirichlet_l_central(&chi, None).unwrap();
        let hur = dirichlet_l_via_hurwitz(&chi, 0.5).unwrap();
        assert!((afe.value.to_complex() - hur.to_complex()).norm() < 1e-8);
        assert!(afe.value.im.abs() < 1e-12);
    }

    #[test]
    fn odd_character_rejected() {
        let odd = classify_order_n_characters(7, 2).unwrap().pop().unwrap();
        assert!(dirichlet_l_central(&odd, None).is_err());
        let chi = induced_dirichlet_character(&w(1, 9), 3).unwrap();
        assert!(dirichlet_l_central(&chi, Some(0.0)).is_err());
    }

    #[test]
    fn inert_members_satisfy_functional_equation() {
        for (family, z) in [
            (Family::CubicHecke, QuadInt::eisenstein(-107, 0)),
            (Family::QuadHeckeQw, QuadInt::eisenstein(-71, 0)),
            (Family::QuadHeckeQi, QuadInt::gaussian(-31, 0)),
            (Family::QuarticHecke, QuadInt::gaussian(-31, 0)),
        ] {
            let pi = PrimeElement::new(z).unwrap();
            let sym = hecke_l_central(family, &pi, None, DEFAULT_THRESHOLD).unwrap();
            let off = hecke_l_central(family, &pi, Some(3.0 * sym.balance), DEFAULT_THRESHOLD).unwrap();
            let d = (sym.value.to_complex() - off.value.to_complex()).norm();
            assert!(d < 1e-8 * sym.value.abs().max(1.0), "{family} {z}: {d}");
            assert!(functional_equation_residual(&off) < 1e-6, "{family} {z}");
        }
    }
}
