//! Prime elements of Z[i] and Z[w]: enumeration by norm with congruence
//! filters, factorisation, and the von Mangoldt function.

use serde::{Deserialize, Serialize};

use crate::arith::{factor_u64, is_prime, is_square, isqrt, primes_up_to};
use crate::error::{Error, Result};
use crate::field::{FieldTag, QuadInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitType {
    Split,
    Inert,
    Ramified,
}

impl SplitType {
    pub fn as_str(self) -> &'static str {
        match self {
            SplitType::Split => "split",
            SplitType::Inert => "inert",
            SplitType::Ramified => "ramified",
        }
    }
}

/// How the rational prime `p` decomposes in the ring of `field`.
pub fn rational_split_type(p: u64, field: FieldTag) -> Result<SplitType> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    Ok(split_type_unchecked(p, field))
}

fn split_type_unchecked(p: u64, field: FieldTag) -> SplitType {
    match field {
        FieldTag::EisensteinQw => match p % 3 {
            0 => SplitType::Ramified,
            1 => SplitType::Split,
            _ => SplitType::Inert,
        },
        FieldTag::GaussianQi => match p % 4 {
            1 => SplitType::Split,
            3 => SplitType::Inert,
            _ => SplitType::Ramified,
        },
    }
}

/// A prime element together with its arithmetic type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeElement {
    pub value: QuadInt,
    pub norm: u64,
    pub split_type: SplitType,
    /// The complex conjugate, for split primes.
    pub conjugate_norm_partner: Option<QuadInt>,
}

impl PrimeElement {
    /// Validate that `z` generates a prime ideal.
    pub fn new(z: QuadInt) -> Result<Self> {
        let norm = z.try_norm()?;
        if is_prime(norm) {
            let split_type = split_type_unchecked(norm, z.field);
            let conjugate_norm_partner = (split_type == SplitType::Split).then(|| z.conj());
            return Ok(PrimeElement { value: z, norm, split_type, conjugate_norm_partner });
        }
        if let Some(q) = is_square(norm) {
            let inert = is_prime(q) && split_type_unchecked(q, z.field) == SplitType::Inert;
            let q_elt = QuadInt::rational(q as i64, z.field);
            if inert && z.associates().any(|u| u == q_elt) {
                return Ok(PrimeElement {
                    value: z,
                    norm,
                    split_type: SplitType::Inert,
                    conjugate_norm_partner: None,
                });
            }
        }
        Err(Error::NotPrime(z.to_string()))
    }

    /// The rational prime below this prime.
    pub fn rational_prime(&self) -> u64 {
        match self.split_type {
            SplitType::Inert => isqrt(self.norm),
            _ => self.norm,
        }
    }

    pub fn field(&self) -> FieldTag {
        self.value.field
    }

    /// `Lambda` of this prime: `log N(pi)`.
    pub fn log_norm(&self) -> f64 {
        (self.norm as f64).ln()
    }

    pub fn conj(&self) -> PrimeElement {
        PrimeElement {
            value: self.value.conj(),
            norm: self.norm,
            split_type: self.split_type,
            conjugate_norm_partner: self.conjugate_norm_partner.map(|_| self.value),
        }
    }
}

/// A solution of `N(a + b*theta) = p` for a split or ramified prime `p`,
/// found by scanning `b` up to `sqrt(4p/3)`.
pub fn norm_form_solution(p: u64, field: FieldTag) -> Option<QuadInt> {
    match field {
        FieldTag::GaussianQi => {
            for b in 0..=isqrt(p) {
                if let Some(a) = is_square(p - b * b) {
                    return Some(QuadInt::gaussian(a as i64, b as i64));
                }
            }
            None
        }
        FieldTag::EisensteinQw => {
            // a^2 - ab + b^2 = p  <=>  (2a - b)^2 = 4p - 3b^2
            let bmax = isqrt(4 * p / 3);
            for b in 0..=bmax {
                let disc = 4 * p - 3 * b * b;
                if let Some(s) = is_square(disc) {
                    if (b + s) % 2 == 0 {
                        return Some(QuadInt::eisenstein(((b + s) / 2) as i64, b as i64));
                    }
                }
            }
            None
        }
    }
}

/// One prime ideal, represented by its normalised generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeIdeal {
    pub generator: QuadInt,
    pub norm: u64,
    pub rational_prime: u64,
}

/// Generators of the prime ideals lying over the rational prime `p`.
pub fn primes_over(p: u64, field: FieldTag) -> Vec<PrimeIdeal> {
    match split_type_unchecked(p, field) {
        SplitType::Ramified => {
            let g = field.context().ramified_prime.normalized();
            vec![PrimeIdeal { generator: g, norm: p, rational_prime: p }]
        }
        SplitType::Inert => {
            let g = QuadInt::rational(p as i64, field).normalized();
            vec![PrimeIdeal { generator: g, norm: p * p, rational_prime: p }]
        }
        SplitType::Split => {
            let pi = norm_form_solution(p, field).expect("split primes are norms");
            let mut v = vec![pi.normalized(), pi.conj().normalized()];
            v.sort_by_key(|z| (z.a, z.b));
            v.into_iter()
                .map(|generator| PrimeIdeal { generator, norm: p, rational_prime: p })
                .collect()
        }
    }
}

/// All prime ideals of norm `<= bound`, ordered by (norm, a, b).
pub fn prime_ideals_up_to(field: FieldTag, bound: u64) -> Vec<PrimeIdeal> {
    let mut out: Vec<PrimeIdeal> = primes_up_to(bound)
        .into_iter()
        .flat_map(|p| primes_over(p, field))
        .filter(|pi| pi.norm <= bound)
        .collect();
    out.sort_by_key(|pi| (pi.norm, pi.generator.a, pi.generator.b));
    out
}

/// Prime elements with `N(pi) <= max_norm` and `pi == 1 (mod class_modulus)`,
/// one per prime ideal, ordered by (norm, a, b).
///
/// A unit `class_modulus` disables the filter, in which case the normalised
/// generator of each prime ideal is returned.
pub fn enumerate_prime_elements(
    field: FieldTag,
    max_norm: u64,
    class_modulus: &QuadInt,
) -> Result<Vec<PrimeElement>> {
    enumerate_prime_elements_in(field, 0, max_norm, class_modulus)
}

/// As [`enumerate_prime_elements`] restricted to `min_norm < N(pi) <= max_norm`.
pub fn enumerate_prime_elements_in(
    field: FieldTag,
    min_norm: u64,
    max_norm: u64,
    class_modulus: &QuadInt,
) -> Result<Vec<PrimeElement>> {
    if class_modulus.field != field {
        return Err(Error::FieldMismatch(field.to_string(), class_modulus.to_string()));
    }
    if class_modulus.is_zero() {
        return Err(Error::Precondition("class modulus must be nonzero".into()));
    }
    let unfiltered = class_modulus.is_unit();
    let mut out = Vec::new();
    for p in primes_up_to(max_norm) {
        for ideal in primes_over(p, field) {
            if ideal.norm <= min_norm || ideal.norm > max_norm {
                continue;
            }
            if unfiltered {
                out.push(PrimeElement::new(ideal.generator)?);
                continue;
            }
            let mut hits = ideal.generator.associates().filter(|z| z.is_one_mod(class_modulus));
            if let Some(z) = hits.next() {
                if hits.next().is_some() {
                    return Err(Error::Precondition(format!(
                        "units are not distinct modulo {class_modulus}"
                    )));
                }
                out.push(PrimeElement::new(z)?);
            }
        }
    }
    out.sort_by_key(|pi| (pi.norm, pi.value.a, pi.value.b));
    Ok(out)
}

/// Factor `z = unit * prod pi^e` with normalised (primary where defined)
/// prime elements, sorted by (norm, a, b).
pub fn factor(z: &QuadInt) -> Result<(QuadInt, Vec<(PrimeElement, u32)>)> {
    if z.is_zero() {
        return Err(Error::Precondition("cannot factor zero".into()));
    }
    let field = z.field;
    let mut rest = *z;
    let mut factors = Vec::new();
    for (p, _) in factor_u64(z.try_norm()?) {
        for ideal in primes_over(p, field) {
            let mut e = 0u32;
            while let Some(q) = rest.div_exact(&ideal.generator) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                factors.push((PrimeElement::new(ideal.generator)?, e));
            }
        }
    }
    if !rest.is_unit() {
        return Err(Error::Internal(format!("factorisation of {z} left cofactor {rest}")));
    }
    factors.sort_by_key(|(pi, _)| (pi.norm, pi.value.a, pi.value.b));
    Ok((rest, factors))
}

/// `log N(pi)` if `z` is a unit times a power of a single prime, else 0.
pub fn von_mangoldt(z: &QuadInt) -> Result<f64> {
    let (_, factors) = factor(z)?;
    Ok(match factors.as_slice() {
        [(pi, _)] => pi.log_norm(),
        _ => 0.0,
    })
}
