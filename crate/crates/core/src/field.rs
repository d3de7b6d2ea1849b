//! Exact arithmetic in the Gaussian integers Z[i] and the Eisenstein
//! integers Z[w], w = exp(2 pi i / 3).
//!
//! Elements carry their ring as a [`FieldTag`], so mixed-ring arithmetic is
//! caught at runtime. Coordinates are `i64`; every product is formed in
//! `i128` and narrowed with a range check, so results are either exact or an
//! error, never silently wrapped.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith::{div_round, ext_gcd};
use crate::error::{Error, Result};

/// Which imaginary quadratic field we are working in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldTag {
    /// Q(i), ring of integers Z[i].
    GaussianQi,
    /// Q(w), ring of integers Z[w].
    EisensteinQw,
}

impl FieldTag {
    pub fn context(self) -> &'static FieldContext {
        match self {
            FieldTag::GaussianQi => &GAUSSIAN,
            FieldTag::EisensteinQw => &EISENSTEIN,
        }
    }

    /// Symbol used for the generator in text form.
    pub fn theta_symbol(self) -> char {
        match self {
            FieldTag::GaussianQi => 'i',
            FieldTag::EisensteinQw => 'w',
        }
    }

    /// Short command-line name (`qi` / `qw`).
    pub fn short_name(self) -> &'static str {
        match self {
            FieldTag::GaussianQi => "qi",
            FieldTag::EisensteinQw => "qw",
        }
    }

    pub fn from_short_name(s: &str) -> Option<Self> {
        match s {
            "qi" => Some(FieldTag::GaussianQi),
            "qw" => Some(FieldTag::EisensteinQw),
            _ => None,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldTag::GaussianQi => "Q(i)",
            FieldTag::EisensteinQw => "Q(w)",
        })
    }
}

/// An element `a + b*theta` of Z[i] (theta = i) or Z[w] (theta = w).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadInt {
    pub a: i64,
    pub b: i64,
    pub field: FieldTag,
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Range(format!("coordinate {v} exceeds 64 bits")))
}

impl QuadInt {
    pub const fn new(a: i64, b: i64, field: FieldTag) -> Self {
        QuadInt { a, b, field }
    }

    pub const fn gaussian(a: i64, b: i64) -> Self {
        QuadInt::new(a, b, FieldTag::GaussianQi)
    }

    pub const fn eisenstein(a: i64, b: i64) -> Self {
        QuadInt::new(a, b, FieldTag::EisensteinQw)
    }

    pub const fn rational(n: i64, field: FieldTag) -> Self {
        QuadInt::new(n, 0, field)
    }

    pub const fn zero(field: FieldTag) -> Self {
        QuadInt::new(0, 0, field)
    }

    pub const fn one(field: FieldTag) -> Self {
        QuadInt::new(1, 0, field)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn context(&self) -> &'static FieldContext {
        self.field.context()
    }

    /// Exact norm as an unbounded integer.
    pub fn norm_i128(&self) -> i128 {
        let (a, b) = (self.a as i128, self.b as i128);
        match self.field {
            FieldTag::GaussianQi => a * a + b * b,
            FieldTag::EisensteinQw => a * a - a * b + b * b,
        }
    }

    /// Norm, or a range error when it does not fit in 63 bits.
    pub fn try_norm(&self) -> Result<u64> {
        let n = self.norm_i128();
        if n > i64::MAX as i128 {
            return Err(Error::Range(format!("norm of {self} exceeds 2^63")));
        }
        Ok(n as u64)
    }

    /// Norm. Panics if the norm exceeds 2^63; use [`QuadInt::try_norm`] to
    /// handle that case.
    pub fn norm(&self) -> u64 {
        self.try_norm().expect("norm overflow")
    }

    /// Trace `z + conj(z)` of an integral element.
    pub fn trace(&self) -> i128 {
        match self.field {
            FieldTag::GaussianQi => 2 * self.a as i128,
            FieldTag::EisensteinQw => 2 * self.a as i128 - self.b as i128,
        }
    }

    /// Complex conjugate (w -> w^2, i -> -i).
    pub fn conj(&self) -> Self {
        match self.field {
            FieldTag::GaussianQi => QuadInt::new(self.a, -self.b, self.field),
            FieldTag::EisensteinQw => QuadInt::new(self.a - self.b, -self.b, self.field),
        }
    }

    pub(crate) fn mul_wide(&self, rhs: &Self) -> (i128, i128) {
        let (a, b, c, d) = (self.a as i128, self.b as i128, rhs.a as i128, rhs.b as i128);
        match self.field {
            FieldTag::GaussianQi => (a * c - b * d, a * d + b * c),
            FieldTag::EisensteinQw => (a * c - b * d, a * d + b * c - b * d),
        }
    }

    pub(crate) fn check_field(&self, rhs: &Self) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.to_string(), rhs.to_string()));
        }
        Ok(())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        let (x, y) = self.mul_wide(rhs);
        Ok(QuadInt::new(narrow(x)?, narrow(y)?, self.field))
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        Ok(QuadInt::new(
            narrow(self.a as i128 + rhs.a as i128)?,
            narrow(self.b as i128 + rhs.b as i128)?,
            self.field,
        ))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&-*rhs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = *self;
        let mut acc = QuadInt::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q*b + r` with `N(r) < N(b)`.
    ///
    /// `q` rounds each rational coordinate of `self / b` to the nearest
    /// integer; both rings are norm-Euclidean for this choice.
    pub fn divrem(&self, b: &Self) -> Result<(Self, Self)> {
        self.check_field(b)?;
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (x, y) = self.mul_wide(&b.conj());
        let n = b.norm_i128();
        let q = QuadInt::new(narrow(div_round(x, n))?, narrow(div_round(y, n))?, self.field);
        let r = self.checked_sub(&q.checked_mul(b)?)?;
        Ok((q, r))
    }

    /// `Some(self / d)` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() || self.field != d.field {
            return None;
        }
        let (x, y) = self.mul_wide(&d.conj());
        let n = d.norm_i128();
        if x % n != 0 || y % n != 0 {
            return None;
        }
        Some(QuadInt::new(narrow(x / n).ok()?, narrow(y / n).ok()?, self.field))
    }

    pub fn divides(&self, x: &Self) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        x.div_exact(self).is_some()
    }

    /// `self == other (mod m)`.
    pub fn congruent(&self, other: &Self, m: &Self) -> bool {
        match self.checked_sub(other) {
            Ok(d) => m.divides(&d),
            Err(_) => false,
        }
    }

    pub fn is_one_mod(&self, m: &Self) -> bool {
        self.congruent(&QuadInt::one(self.field), m)
    }

    pub fn is_unit(&self) -> bool {
        self.norm_i128() == 1
    }

    /// Whether the element is prime to the ramified prime (1-w or 1+i).
    pub fn is_coprime_to_ramified(&self) -> bool {
        self.norm_i128() % self.context().ramified_rational_prime as i128 != 0
    }

    /// Primary in the sense of the ring: `== 1 mod 3` in Z[w], `== 1 mod (1+i)^3` in Z[i].
    pub fn is_primary(&self) -> bool {
        match self.field {
            FieldTag::EisensteinQw => self.a.rem_euclid(3) == 1 && self.b.rem_euclid(3) == 0,
            FieldTag::GaussianQi => self.is_one_mod(&GAUSSIAN.primary_modulus),
        }
    }

    /// The unique unit multiple of `self` that is primary.
    pub fn primary_associate(&self) -> Result<Self> {
        if self.is_zero() || !self.is_coprime_to_ramified() {
            return Err(Error::NotCoprimeToRamified(self.to_string()));
        }
        let mut found = None;
        for u in self.context().units {
            let cand = u.checked_mul(self)?;
            if cand.is_primary() {
                if found.is_some() {
                    return Err(Error::Internal(format!("two primary associates of {self}")));
                }
                found = Some(cand);
            }
        }
        found.ok_or_else(|| Error::Internal(format!("no primary associate of {self}")))
    }

    /// Canonical associate: primary when prime to the ramified prime,
    /// otherwise the lexicographically least `(a, b)` among associates with
    /// `a > 0`. Zero maps to zero.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return *self;
        }
        if self.is_coprime_to_ramified() {
            if let Ok(p) = self.primary_associate() {
                return p;
            }
        }
        self.context()
            .units
            .iter()
            .map(|u| *u * *self)
            .filter(|z| z.a > 0)
            .min_by_key(|z| (z.a, z.b))
            .expect("some associate has positive real coordinate")
    }

    /// All unit multiples of `self`.
    pub fn associates(&self) -> impl Iterator<Item = QuadInt> + '_ {
        self.context().units.iter().map(move |u| *u * *self)
    }

    /// Parse with a fallback ring for purely rational input such as `"5"`.
    pub fn parse_in(s: &str, default: FieldTag) -> Result<Self> {
        parse_quadint(s, Some(default))
    }

    /// Embedding into C with the standard choice w = exp(2 pi i/3).
    pub fn to_complex(&self) -> (f64, f64) {
        match self.field {
            FieldTag::GaussianQi => (self.a as f64, self.b as f64),
            FieldTag::EisensteinQw => (
                self.a as f64 - 0.5 * self.b as f64,
                self.b as f64 * 3f64.sqrt() / 2.0,
            ),
        }
    }
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("QuadInt addition")
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("QuadInt subtraction")
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("QuadInt multiplication")
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> Self {
        QuadInt::new(-self.a, -self.b, self.field)
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b < 0 { '-' } else { '+' };
        write!(f, "{}{}{}*{}", self.a, sign, self.b.unsigned_abs(), self.field.theta_symbol())
    }
}

impl FromStr for QuadInt {
    type Err = Error;

    /// Parses `a+b*w`, `a-b*i`, `b*w`, `-w`, `2+i`, ... The ring is read
    /// from the generator symbol; purely rational strings need
    /// [`QuadInt::parse_in`].
    fn from_str(s: &str) -> Result<Self> {
        parse_quadint(s, None)
    }
}

fn parse_quadint(s: &str, default: Option<FieldTag>) -> Result<QuadInt> {
    let err = || Error::Parse(s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(err());
    }
    let mut field: Option<FieldTag> = None;
    let (mut a, mut b) = (0i64, 0i64);
    let mut start = 0;
    let bytes = t.as_bytes();
    let mut terms = Vec::new();
    for i in 1..=bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'e') {
            terms.push(&t[start..i]);
            start = i;
        }
    }
    for term in terms {
        let (neg, body) = match term.as_bytes().first() {
            Some(b'+') => (false, &term[1..]),
            Some(b'-') => (true, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(err());
        }
        let last = body.chars().last().unwrap();
        let tag = match last {
            'w' => Some(FieldTag::EisensteinQw),
            'i' => Some(FieldTag::GaussianQi),
            _ => None,
        };
        match tag {
            Some(tag) => {
                if field.is_some_and(|f| f != tag) {
                    return Err(err());
                }
                field = Some(tag);
                let coef = &body[..body.len() - 1];
                let c: i64 = match coef.strip_suffix('*') {
                    Some(n) if !n.is_empty() => n.parse().map_err(|_| err())?,
                    Some(_) => return Err(err()),
                    None if coef.is_empty() => 1,
                    None => coef.parse().map_err(|_| err())?,
                };
                b += if neg { -c } else { c };
            }
            None => {
                let c: i64 = body.parse().map_err(|_| err())?;
                a += if neg { -c } else { c };
            }
        }
    }
    let field = field.or(default).ok_or_else(err)?;
    Ok(QuadInt::new(a, b, field))
}

/// An exact element `num / den` of K.
#[derive(Debug, Clone, Copy)]
pub struct FracQuad {
    pub num: QuadInt,
    pub den: QuadInt,
}

impl FracQuad {
    pub fn new(num: QuadInt, den: QuadInt) -> Result<Self> {
        num.check_field(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FracQuad { num, den })
    }

    pub fn integral(z: QuadInt) -> Self {
        FracQuad { num: z, den: QuadInt::one(z.field) }
    }

    /// Exact trace `k + conj(k)` as a reduced rational.
    pub fn trace(&self) -> Ratio<i128> {
        let (x, y) = self.num.mul_wide(&self.den.conj());
        let tr = match self.num.field {
            FieldTag::GaussianQi => 2 * x,
            FieldTag::EisensteinQw => 2 * x - y,
        };
        Ratio::new(tr, self.den.norm_i128())
    }

    /// Divide by an integral element.
    pub fn div_by(&self, d: &QuadInt) -> Result<Self> {
        FracQuad::new(self.num, self.den.checked_mul(d)?)
    }
}

impl PartialEq for FracQuad {
    fn eq(&self, other: &Self) -> bool {
        self.num.field == other.num.field
            && self.num.mul_wide(&other.den) == other.num.mul_wide(&self.den)
    }
}

/// Immutable description of one of the two fields.
#[derive(Debug)]
pub struct FieldContext {
    pub tag: FieldTag,
    /// Minimal polynomial of theta as `x^2 + c1 x + c0`, stored `(c1, c0)`.
    pub theta_minpoly: (i64, i64),
    /// Generator of the different: sqrt(-3) = 1 + 2w, or 2i.
    pub delta: QuadInt,
    pub discriminant: i64,
    pub units: &'static [QuadInt],
    pub primary_modulus: QuadInt,
    pub ramified_prime: QuadInt,
    pub ramified_rational_prime: u64,
}

const W: FieldTag = FieldTag::EisensteinQw;
const I: FieldTag = FieldTag::GaussianQi;

static EISENSTEIN_UNITS: [QuadInt; 6] = [
    QuadInt::new(1, 0, W),
    QuadInt::new(-1, 0, W),
    QuadInt::new(0, 1, W),
    QuadInt::new(0, -1, W),
    QuadInt::new(-1, -1, W),
    QuadInt::new(1, 1, W),
];

static GAUSSIAN_UNITS: [QuadInt; 4] = [
    QuadInt::new(1, 0, I),
    QuadInt::new(-1, 0, I),
    QuadInt::new(0, 1, I),
    QuadInt::new(0, -1, I),
];

pub static EISENSTEIN: FieldContext = FieldContext {
    tag: W,
    theta_minpoly: (1, 1),
    delta: QuadInt::new(1, 2, W),
    discriminant: -3,
    units: &EISENSTEIN_UNITS,
    primary_modulus: QuadInt::new(3, 0, W),
    ramified_prime: QuadInt::new(1, -1, W),
    ramified_rational_prime: 3,
};

pub static GAUSSIAN: FieldContext = FieldContext {
    tag: I,
    theta_minpoly: (0, 1),
    delta: QuadInt::new(0, 2, I),
    discriminant: -4,
    units: &GAUSSIAN_UNITS,
    // (1+i)^3 = -2+2i
    primary_modulus: QuadInt::new(-2, 2, I),
    ramified_prime: QuadInt::new(1, 1, I),
    ramified_rational_prime: 2,
};

impl FieldContext {
    pub fn abs_discriminant(&self) -> u64 {
        self.discriminant.unsigned_abs()
    }

    pub fn theta(&self) -> QuadInt {
        QuadInt::new(0, 1, self.tag)
    }

    pub fn norm(&self, z: &QuadInt) -> Result<u64> {
        z.try_norm()
    }

    pub fn trace(&self, k: &FracQuad) -> Ratio<i128> {
        k.trace()
    }

    /// A generator of the ideal `(a, b)`, normalised by [`QuadInt::normalized`].
    pub fn gcd(&self, a: &QuadInt, b: &QuadInt) -> Result<QuadInt> {
        a.check_field(b)?;
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut x, mut y) = (*a, *b);
        while !y.is_zero() {
            let (_, r) = x.divrem(&y)?;
            x = y;
            y = r;
        }
        Ok(x.normalized())
    }

    /// Cardinality of the ray class group modulo `c`:
    /// `|(O/c)^x| / |image of units in (O/c)^x|`.
    pub fn ray_class_number(&self, c: &QuadInt) -> Result<u64> {
        if c.is_zero() {
            return Err(Error::Precondition("ray class modulus must be nonzero".into()));
        }
        let (_, factors) = crate::primes::factor(c)?;
        let mut phi = c.norm() as u128;
        for (p, _) in &factors {
            let np = p.norm as u128;
            phi = phi / np * (np - 1);
        }
        let mut images: Vec<QuadInt> = Vec::new();
        for u in self.units {
            if !images.iter().any(|v| v.congruent(u, c)) {
                images.push(*u);
            }
        }
        Ok((phi / images.len() as u128) as u64)
    }
}

/// A complete residue system of O/(c): `{u + v*theta : 0 <= u < d1, 0 <= v < d2}`
/// with `d1 * d2 = N(c)`, read off the Hermite normal form of the lattice
/// `c*O` in `(a, b)` coordinates.
#[derive(Debug, Clone)]
pub struct ResidueSystem {
    pub modulus: QuadInt,
    pub d1: u64,
    pub d2: u64,
    /// Lattice vector `(e, d2)`.
    e: i128,
}

impl ResidueSystem {
    pub fn new(c: &QuadInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let theta = QuadInt::new(0, 1, c.field);
        let v1 = *c;
        let v2 = c.checked_mul(&theta)?;
        let (g, s, t) = ext_gcd(v1.b as i128, v2.b as i128);
        let n = c.norm_i128();
        if g == 0 {
            // c is a rational integer times a unit with vanishing b parts:
            // impossible for nonzero c since v2 = c*theta has b != 0.
            return Err(Error::Internal(format!("degenerate lattice for {c}")));
        }
        let e = s * v1.a as i128 + t * v2.a as i128;
        let d2 = g;
        let d1 = n / d2;
        Ok(ResidueSystem { modulus: *c, d1: d1 as u64, d2: d2 as u64, e })
    }

    pub fn len(&self) -> u64 {
        self.d1 * self.d2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The canonical representative of `z` in this system, as `(u, v)`.
    pub fn reduce_coords(&self, z: &QuadInt) -> (u64, u64) {
        let (d1, d2) = (self.d1 as i128, self.d2 as i128);
        let k = (z.b as i128).div_euclid(d2);
        let v = (z.b as i128).rem_euclid(d2);
        let u = (z.a as i128 - k * self.e).rem_euclid(d1);
        (u as u64, v as u64)
    }

    pub fn reduce(&self, z: &QuadInt) -> QuadInt {
        let (u, v) = self.reduce_coords(z);
        QuadInt::new(u as i64, v as i64, self.modulus.field)
    }

    pub fn iter(&self) -> impl Iterator<Item = QuadInt> + '_ {
        let field = self.modulus.field;
        (0..self.d2).flat_map(move |v| (0..self.d1).map(move |u| QuadInt::new(u as i64, v as i64, field)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> QuadInt {
        QuadInt::eisenstein(a, b)
    }
    fn g(a: i64, b: i64) -> QuadInt {
        QuadInt::gaussian(a, b)
    }

    #[test]
    fn norms() {
        assert_eq!(w(3, 2).norm(), 7);
        assert_eq!(g(1, 16).norm(), 257);
        assert_eq!(w(0, 0).norm(), 0);
        assert_eq!(g(0, 0).norm(), 0);
        assert!(w(i64::MAX, 0).try_norm().is_err());
    }

    #[test]
    fn traces() {
        let tr = |z: QuadInt| FracQuad::integral(z).trace();
        assert_eq!(tr(w(0, 1)), Ratio::from_integer(-1));
        assert_eq!(tr(g(0, 1)), Ratio::from_integer(0));
        assert_eq!(tr(w(5, 0)), Ratio::from_integer(10));
        assert!(FracQuad::new(w(1, 0), w(0, 0)).is_err());
        // -w/3 has trace 1/3
        let k = FracQuad::new(w(0, -1), w(3, 0)).unwrap();
        assert_eq!(k.trace(), Ratio::new(1, 3));
    }

    #[test]
    fn delta_squares() {
        assert_eq!(EISENSTEIN.delta * EISENSTEIN.delta, w(-3, 0));
        assert_eq!(GAUSSIAN.delta * GAUSSIAN.delta, g(-4, 0));
        for ctx in [&EISENSTEIN, &GAUSSIAN] {
            assert_eq!(ctx.delta.norm(), ctx.abs_discriminant());
            assert!(ctx.units.iter().all(|u| u.norm() == 1));
        }
        assert_eq!(EISENSTEIN.units.len(), 6);
        assert_eq!(GAUSSIAN.units.len(), 4);
    }

    /// Best remainder over the 3x3 neighbourhood of the rounded quotient.
    fn neighbourhood_min(a: &QuadInt, b: &QuadInt) -> u64 {
        let (q, _) = a.divrem(b).unwrap();
        let mut best = u64::MAX;
        for da in -1..=1 {
            for db in -1..=1 {
                let cand = QuadInt::new(q.a + da, q.b + db, a.field);
                best = best.min((*a - cand * *b).norm());
            }
        }
        best
    }

    #[test]
    fn euclidean_division_examples() {
        let (q, r) = g(5, 0).divrem(&g(1, 1)).unwrap();
        assert_eq!(g(5, 0), q * g(1, 1) + r);
        assert!(r.norm() < 2);
        assert_eq!(neighbourhood_min(&g(5, 0), &g(1, 1)), 1);
        assert_eq!(r.norm(), 1);

        let z = w(17, -4);
        assert_eq!(z.divrem(&z).unwrap(), (w(1, 0), w(0, 0)));

        let (q, r) = w(7, 3).divrem(&w(2, 1)).unwrap();
        assert_eq!(w(7, 3), q * w(2, 1) + r);
        assert!(r.norm() < 3);
        assert!(neighbourhood_min(&w(7, 3), &w(2, 1)) < 3);
        assert!(w(1, 0).divrem(&w(0, 0)).is_err());
    }

    #[test]
    fn gcds() {
        assert_eq!(GAUSSIAN.gcd(&g(5, 0), &g(1, 1)).unwrap(), g(1, 0));
        let z = g(3, 4);
        let d = GAUSSIAN.gcd(&g(0, 0), &z).unwrap();
        assert_eq!(d, z.normalized());
        assert!(d.associates().any(|u| u == z));
        // 3 + 3w = -3w^2, so gcd(6, 3+3w) generates (3)
        let d = EISENSTEIN.gcd(&w(6, 0), &w(3, 3)).unwrap();
        assert_eq!(d.norm(), 9);
        assert!(d.associates().any(|u| u == w(3, 0)));
        assert_eq!(EISENSTEIN.gcd(&w(0, 0), &w(0, 0)), Err(Error::GcdOfZeros));
    }

    #[test]
    fn primary_associates() {
        assert_eq!(w(3, 1).primary_associate().unwrap(), w(-2, -3));
        assert_eq!(g(2, 1).primary_associate().unwrap(), g(-1, 2));
        assert!(matches!(g(1, 1).primary_associate(), Err(Error::NotCoprimeToRamified(_))));
        assert!(w(1, -1).primary_associate().is_err());
        // brute-force oracle: enumerate associates, count those passing the test
        let count = |z: QuadInt| z.associates().filter(|c| c.is_primary()).count();
        assert_eq!(count(w(3, 1)), 1);
        assert_eq!(count(g(2, 1)), 1);
        assert!(g(-1, 2).is_one_mod(&g(-2, 2)));
    }

    #[test]
    fn ray_class_numbers() {
        assert_eq!(EISENSTEIN.ray_class_number(&w(36, 0)).unwrap(), 108);
        assert_eq!(EISENSTEIN.ray_class_number(&w(9, 0)).unwrap(), 9);
        assert_eq!(GAUSSIAN.ray_class_number(&g(16, 0)).unwrap(), 32);
        assert_eq!(EISENSTEIN.ray_class_number(&w(1, 0)).unwrap(), 1);
    }

    #[test]
    fn ray_class_brute_force_gaussian_16() {
        // residues coprime to 16 modulo the action of the units
        let sys = ResidueSystem::new(&g(16, 0)).unwrap();
        let coprime: Vec<QuadInt> = sys.iter().filter(|x| x.norm() % 2 == 1).collect();
        let mut seen = std::collections::HashSet::new();
        let mut orbits = 0;
        for x in &coprime {
            if seen.contains(x) {
                continue;
            }
            orbits += 1;
            for u in GAUSSIAN.units {
                seen.insert(sys.reduce(&(*u * *x)));
            }
        }
        assert_eq!(orbits, 32);
    }

    #[test]
    fn residue_systems_are_complete() {
        for c in [w(36, 0), w(-2, -3), w(1, 9), w(4, 6), g(1, 16), g(16, 0), g(3, 0), g(-1, 2)] {
            let sys = ResidueSystem::new(&c).unwrap();
            assert_eq!(sys.len(), c.norm());
            let mut seen = std::collections::HashSet::new();
            for x in sys.iter() {
                assert_eq!(sys.reduce(&x), x);
                assert!(seen.insert(x));
            }
            // every lattice translate lands back in the system
            for x in sys.iter().take(20) {
                let y = x + c * QuadInt::new(3, -5, c.field);
                assert_eq!(sys.reduce(&y), x);
            }
        }
    }

    #[test]
    fn text_form() {
        assert_eq!(w(-2, -3).to_string(), "-2-3*w");
        assert_eq!(g(1, 16).to_string(), "1+16*i");
        assert_eq!(g(5, 0).to_string(), "5+0*i");
        assert_eq!("-2-3*w".parse::<QuadInt>().unwrap(), w(-2, -3));
        assert_eq!("1+16*i".parse::<QuadInt>().unwrap(), g(1, 16));
        assert_eq!("2 + i".parse::<QuadInt>().unwrap(), g(2, 1));
        assert_eq!("-w".parse::<QuadInt>().unwrap(), w(0, -1));
        assert_eq!("3*w+1".parse::<QuadInt>().unwrap(), w(1, 3));
        assert!("5".parse::<QuadInt>().is_err());
        assert_eq!(QuadInt::parse_in("5", FieldTag::EisensteinQw).unwrap(), w(5, 0));
        assert!("1+2*w+3*i".parse::<QuadInt>().is_err());
        assert!("x".parse::<QuadInt>().is_err());
    }

    #[test]
    fn frac_equality_under_scaling() {
        let k = FracQuad::new(w(2, 1), w(3, -1)).unwrap();
        let s = w(5, 7);
        let k2 = FracQuad::new(w(2, 1) * s, w(3, -1) * s).unwrap();
        assert_eq!(k, k2);
        assert_eq!(k.trace(), k2.trace());
    }
}
