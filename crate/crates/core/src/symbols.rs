//! Power residue symbols of order 2, 3 and 4, and the Dirichlet characters
//! they induce on prime moduli.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::{factor_u64, gcd_u64, inv_mod, is_prime, primitive_root};
use crate::error::{Error, Result};
use crate::field::{FieldTag, QuadInt};
use crate::primes::{factor, PrimeElement, SplitType};

/// An n-th root of unity `exp(2 pi i k / n)`, or the zero value a symbol
/// takes when its modulus divides its argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    pub order: u8,
    pub index: u8,
    pub is_zero: bool,
}

impl RootOfUnity {
    pub fn new(order: u8, index: u8) -> Self {
        RootOfUnity { order, index: index % order, is_zero: false }
    }

    pub fn one(order: u8) -> Self {
        RootOfUnity::new(order, 0)
    }

    pub fn zero(order: u8) -> Self {
        RootOfUnity { order, index: 0, is_zero: true }
    }

    pub fn is_one(&self) -> bool {
        !self.is_zero && self.index == 0
    }

    pub fn conj(&self) -> Self {
        if self.is_zero {
            return *self;
        }
        RootOfUnity::new(self.order, (self.order - self.index) % self.order)
    }

    pub fn pow(&self, e: u32) -> Self {
        if self.is_zero {
            return if e == 0 { RootOfUnity::one(self.order) } else { *self };
        }
        let k = (self.index as u64 * e as u64) % self.order as u64;
        RootOfUnity::new(self.order, k as u8)
    }

    pub fn to_complex(&self) -> Complex64 {
        if self.is_zero {
            return Complex64::new(0.0, 0.0);
        }
        match (self.order, self.index) {
            (_, 0) => Complex64::new(1.0, 0.0),
            (2, 1) | (4, 2) => Complex64::new(-1.0, 0.0),
            (4, 1) => Complex64::new(0.0, 1.0),
            (4, 3) => Complex64::new(0.0, -1.0),
            (n, k) => Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n as f64),
        }
    }
}

impl std::ops::Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.order, rhs.order);
        if self.is_zero || rhs.is_zero {
            return RootOfUnity::zero(self.order);
        }
        RootOfUnity::new(self.order, (self.index + rhs.index) % self.order)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero {
            f.write_str("0")
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// The element `exp(2 pi i k / n)` of the ring, for n in {2, 3, 4}.
pub fn root_of_unity_element(n: u8, k: u8, field: FieldTag) -> Result<QuadInt> {
    let k = k % n;
    let z = match (n, field) {
        (2, _) => QuadInt::rational(if k == 0 { 1 } else { -1 }, field),
        (3, FieldTag::EisensteinQw) => [QuadInt::eisenstein(1, 0), QuadInt::eisenstein(0, 1), QuadInt::eisenstein(-1, -1)][k as usize],
        (4, FieldTag::GaussianQi) => [QuadInt::gaussian(1, 0), QuadInt::gaussian(0, 1), QuadInt::gaussian(-1, 0), QuadInt::gaussian(0, -1)][k as usize],
        _ => return Err(Error::Precondition(format!("no {n}-th roots of unity in {field}"))),
    };
    Ok(z)
}

/// An element of a residue field O/(pi), stored as a coordinate pair.
/// For primes of prime norm the second coordinate is always zero.
pub type ResidueElem = (u64, u64);

#[derive(Debug, Clone, Copy)]
enum ResidueKind {
    /// N(pi) = p prime; `theta` is the image of the ring generator in F_p.
    Prime { p: u64, theta: u64 },
    /// pi ~ q with q inert; F_{q^2} as pairs modulo q.
    Inert { q: u64 },
}

/// Exact arithmetic in the residue field of a prime element.
#[derive(Debug, Clone)]
pub struct ResidueField {
    pub pi: QuadInt,
    kind: ResidueKind,
    size: u64,
}

impl ResidueField {
    pub fn new(pi: &PrimeElement) -> Result<Self> {
        let z = pi.value;
        let kind = match pi.split_type {
            SplitType::Split | SplitType::Ramified => {
                let p = pi.norm;
                // a + b*theta == 0 (mod pi)  =>  theta == -a / b (mod p)
                let b_inv = inv_mod(z.b as i128, p as i128)
                    .ok_or_else(|| Error::Internal(format!("{z}: b not invertible mod {p}")))?;
                let theta = ((-(z.a as i128)).rem_euclid(p as i128) * b_inv).rem_euclid(p as i128) as u64;
                ResidueKind::Prime { p, theta }
            }
            SplitType::Inert => ResidueKind::Inert { q: pi.rational_prime() },
        };
        Ok(ResidueField { pi: z, kind, size: pi.norm })
    }

    /// Number of elements, `N(pi)`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn field(&self) -> FieldTag {
        self.pi.field
    }

    pub fn reduce(&self, z: &QuadInt) -> ResidueElem {
        match self.kind {
            ResidueKind::Prime { p, theta } => {
                let p = p as i128;
                let a = (z.a as i128).rem_euclid(p);
                let b = (z.b as i128).rem_euclid(p);
                (((a + b * theta as i128) % p) as u64, 0)
            }
            ResidueKind::Inert { q } => (
                (z.a as i128).rem_euclid(q as i128) as u64,
                (z.b as i128).rem_euclid(q as i128) as u64,
            ),
        }
    }

    pub fn mul(&self, x: ResidueElem, y: ResidueElem) -> ResidueElem {
        match self.kind {
            ResidueKind::Prime { p, .. } => (((x.0 as u128 * y.0 as u128) % p as u128) as u64, 0),
            ResidueKind::Inert { q } => {
                let q = q as u128;
                let (a, b, c, d) = (x.0 as u128, x.1 as u128, y.0 as u128, y.1 as u128);
                let bd = b * d % q;
                let re = (a * c % q + q - bd) % q;
                let im = match self.pi.field {
                    FieldTag::GaussianQi => (a * d + b * c) % q,
                    FieldTag::EisensteinQw => ((a * d + b * c) % q + q - bd) % q,
                };
                (re as u64, im as u64)
            }
        }
    }

    pub fn pow(&self, mut x: ResidueElem, mut e: u64) -> ResidueElem {
        let mut acc = (1, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }

    /// Position of an element in the residue system `u + v*theta`,
    /// `0 <= u < d1`, `0 <= v < d2`, used for lookup tables.
    pub fn index_of(&self, x: ResidueElem) -> usize {
        match self.kind {
            ResidueKind::Prime { .. } => x.0 as usize,
            ResidueKind::Inert { q } => (x.0 + q * x.1) as usize,
        }
    }

    /// `(d1, d2)` such that residues are `u + v*theta` with `u < d1`, `v < d2`.
    pub fn shape(&self) -> (u64, u64) {
        match self.kind {
            ResidueKind::Prime { p, .. } => (p, 1),
            ResidueKind::Inert { q } => (q, q),
        }
    }

    /// A generator of the cyclic group (O/pi)^x.
    pub fn generator(&self) -> ResidueElem {
        match self.kind {
            ResidueKind::Prime { p, .. } => (primitive_root(p), 0),
            ResidueKind::Inert { q } => {
                let order = q * q - 1;
                let factors = factor_u64(order);
                for v in 1..q {
                    for u in 0..q {
                        let x = (u, v);
                        if factors.iter().all(|&(l, _)| self.pow(x, order / l) != (1, 0)) {
                            return x;
                        }
                    }
                }
                unreachable!("finite fields have cyclic unit groups")
            }
        }
    }

    /// `(a / pi)_n` by the Euler criterion: the n-th root of unity
    /// congruent to `a^((N(pi) - 1) / n)` modulo `pi`.
    pub fn symbol(&self, a: &QuadInt, n: u8) -> Result<RootOfUnity> {
        let x = self.reduce(a);
        self.symbol_of_elem(x, n)
    }

    pub fn symbol_of_elem(&self, x: ResidueElem, n: u8) -> Result<RootOfUnity> {
        if x == (0, 0) {
            return Ok(RootOfUnity::zero(n));
        }
        if (self.size - 1) % n as u64 != 0 {
            return Err(Error::Precondition(format!("{n} does not divide N({}) - 1", self.pi)));
        }
        let power = self.pow(x, (self.size - 1) / n as u64);
        for k in 0..n {
            let root = self.reduce(&root_of_unity_element(n, k, self.field())?);
            if root == power {
                return Ok(RootOfUnity::new(n, k));
            }
        }
        Err(Error::Internal(format!("no {n}-th root of unity matches modulo {}", self.pi)))
    }

    /// Character indices of `x -> (x / pi)_n` over the whole residue
    /// system, built by walking powers of a generator. Entry 255 marks zero.
    pub fn character_table(&self, n: u8) -> Result<Vec<u8>> {
        let g = self.generator();
        let s = self.symbol_of_elem(g, n)?.index as usize;
        let n = n as usize;
        let mut table = vec![u8::MAX; self.size as usize];
        let mut k = 0usize;
        match self.kind {
            ResidueKind::Prime { p, .. } => {
                let mut x = 1u64;
                for _ in 0..p - 1 {
                    table[x as usize] = k as u8;
                    x = x * g.0 % p;
                    k = (k + s) % n;
                }
            }
            ResidueKind::Inert { .. } => {
                let mut x = (1, 0);
                for _ in 0..self.size - 1 {
                    table[self.index_of(x)] = k as u8;
                    x = self.mul(x, g);
                    k = (k + s) % n;
                }
            }
        }
        Ok(table)
    }
}

pub(crate) fn check_order_field(n: u8, field: FieldTag) -> Result<()> {
    match (n, field) {
        (2, _) | (3, FieldTag::EisensteinQw) | (4, FieldTag::GaussianQi) => Ok(()),
        _ => Err(Error::Precondition(format!("order {n} symbols are not defined in {field}"))),
    }
}

/// `(a / m)_n` for any modulus `m` with `N(m)` prime to `n` and to the
/// ramified prime; multiplicative in `m`, and 1 when `m` is a unit.
pub fn residue_symbol(a: &QuadInt, m: &QuadInt, n: u8) -> Result<RootOfUnity> {
    if a.field != m.field {
        return Err(Error::FieldMismatch(a.to_string(), m.to_string()));
    }
    check_order_field(n, m.field)?;
    if m.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let bad = n as u64 * m.context().ramified_rational_prime;
    if gcd_u64(m.try_norm()?, bad) != 1 {
        return Err(Error::Precondition(format!("modulus {m} is not coprime to {bad}")));
    }
    let (_, factors) = factor(m)?;
    let mut acc = RootOfUnity::one(n);
    for (pi, e) in factors {
        acc = acc * ResidueField::new(&pi)?.symbol(a, n)?.pow(e);
    }
    Ok(acc)
}

/// Values of the supplementary symbols for `c == 1 (mod 9)` in Z[w].
#[derive(Debug, Clone, Serialize)]
pub struct SupplementCheck {
    pub c: QuadInt,
    /// `((1 - w) / c)_3`.
    pub cubic_one_minus_w: RootOfUnity,
    /// `(2 / c)_2` and `((1 - w) / c)_2`, present when `c == 1 (mod 36)`.
    pub quadratic: Option<(RootOfUnity, RootOfUnity)>,
}

impl SupplementCheck {
    pub fn all_trivial(&self) -> bool {
        self.cubic_one_minus_w.is_one()
            && self.quadratic.map_or(true, |(two, lam)| two.is_one() && lam.is_one())
    }
}

pub fn supplement_check(c: &QuadInt) -> Result<SupplementCheck> {
    if c.field != FieldTag::EisensteinQw || !c.is_one_mod(&QuadInt::eisenstein(9, 0)) {
        return Err(Error::Precondition(format!("{c} is not 1 mod 9 in Z[w]")));
    }
    let lambda = QuadInt::eisenstein(1, -1);
    let cubic_one_minus_w = residue_symbol(&lambda, c, 3)?;
    let quadratic = if c.is_one_mod(&QuadInt::eisenstein(36, 0)) {
        Some((
            residue_symbol(&QuadInt::eisenstein(2, 0), c, 2)?,
            residue_symbol(&lambda, c, 2)?,
        ))
    } else {
        None
    };
    Ok(SupplementCheck { c: *c, cubic_one_minus_w, quadratic })
}

/// A Dirichlet character of prime modulus with values in the n-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirichletChar {
    pub modulus: u64,
    pub order: u8,
    /// `table[t]` is `chi(t)` for `0 <= t < modulus`.
    pub table: Vec<RootOfUnity>,
    /// Prime element whose residue symbol induced this character.
    pub source: Option<QuadInt>,
}

impl DirichletChar {
    pub fn eval(&self, t: i64) -> RootOfUnity {
        self.table[t.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn is_even(&self) -> bool {
        self.eval(-1).is_one()
    }

    pub fn conj(&self) -> DirichletChar {
        DirichletChar {
            modulus: self.modulus,
            order: self.order,
            table: self.table.iter().map(RootOfUnity::conj).collect(),
            source: self.source.map(|z| z.conj()),
        }
    }

    pub fn is_principal(&self) -> bool {
        self.table[1..].iter().all(RootOfUnity::is_one)
    }

    /// Exact multiplicative order of the character.
    pub fn exact_order(&self) -> u8 {
        (1..=self.order)
            .find(|&d| self.table[1..].iter().all(|v| v.pow(d as u32).is_one()))
            .unwrap_or(self.order)
    }
}

/// The Dirichlet character `t -> (t / pi)_n` on `Z / N(pi)`.
pub fn induced_dirichlet_character(pi: &PrimeElement, n: u8) -> Result<DirichletChar> {
    check_order_field(n, pi.field())?;
    if pi.split_type != SplitType::Split {
        return Err(Error::Precondition(format!("{} does not have prime norm coprime to the discriminant", pi.value)));
    }
    let p = pi.norm;
    if (p - 1) % n as u64 != 0 {
        return Err(Error::Precondition(format!("{n} does not divide {p} - 1")));
    }
    let rf = ResidueField::new(pi)?;
    let g = primitive_root(p);
    let s = rf.symbol(&QuadInt::rational(g as i64, pi.field()), n)?.index as u64;
    let mut table = vec![RootOfUnity::zero(n); p as usize];
    let mut x = 1u64;
    for k in 0..p - 1 {
        table[x as usize] = RootOfUnity::new(n, ((s * k) % n as u64) as u8);
        x = x * g % p;
    }
    Ok(DirichletChar { modulus: p, order: n, table, source: Some(pi.value) })
}

/// All characters of exact order `n` modulo the odd prime `p`, found by
/// enumerating the whole (cyclic) character group.
pub fn classify_order_n_characters(p: u64, n: u8) -> Result<Vec<DirichletChar>> {
    if p < 3 || !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    let phi = p - 1;
    let g = primitive_root(p);
    let mut dlog = vec![0u64; p as usize];
    let mut x = 1u64;
    for k in 0..phi {
        dlog[x as usize] = k;
        x = x * g % p;
    }
    let mut out = Vec::new();
    for j in 0..phi {
        if phi / gcd_u64(j, phi) != n as u64 {
            continue;
        }
        // chi_j(g^k) = exp(2 pi i j k / (p-1)) = zeta_n^(s k) with s = j n / (p-1)
        let s = j * n as u64 / phi;
        let mut table = vec![RootOfUnity::zero(n); p as usize];
        for t in 1..p {
            table[t as usize] = RootOfUnity::new(n, ((s * dlog[t as usize]) % n as u64) as u8);
        }
        out.push(DirichletChar { modulus: p, order: n, table, source: None });
    }
    Ok(out)
}
