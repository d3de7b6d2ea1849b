//! Smoothed first moments of central values over prime moduli, their
//! predicted main terms, and the Gauss-sums-over-primes diagnostic.

use std::f64::consts::PI;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::{CacheEntry, LCache, ENGINE_VERSION};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::field::{FieldTag, QuadInt};
use crate::gauss::{gauss_sum_prime, ComplexVal};
use crate::lfunc::{dirichlet_l_central, hecke_l_central, DEFAULT_THRESHOLD};
use crate::primes::{enumerate_prime_elements, enumerate_prime_elements_in, PrimeElement, SplitType};
use crate::special::{zeta_real, ZetaKind};
use crate::symbols::induced_dirichlet_character;

pub const SCHEMA_VERSION: u32 = 1;

/// `Phi(u) = exp(-1/(u-1) - 1/(2-u))` on `(1, 2)`, zero elsewhere.
pub fn phi_eval(u: f64) -> f64 {
    if u <= 1.0 || u >= 2.0 {
        return 0.0;
    }
    (-1.0 / (u - 1.0) - 1.0 / (2.0 - u)).exp()
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let (fa, fb) = (f(a), f(b));
    let fm = f(0.5 * (a + b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson(f, a, b, fa, fm, fb, whole, tol, 50)
}

/// `int_1^2 Phi(u) du`.
pub fn phi_hat0() -> f64 {
    static CELL: OnceLock<f64> = OnceLock::new();
    *CELL.get_or_init(|| adaptive_simpson(&phi_eval, 1.0, 2.0, 1e-14))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    Bump12,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmoothWeight {
    pub kind: WeightKind,
    pub phi_hat0: f64,
}

impl SmoothWeight {
    pub fn bump() -> Self {
        SmoothWeight { kind: WeightKind::Bump12, phi_hat0: phi_hat0() }
    }

    pub fn eval(&self, u: f64) -> f64 {
        match self.kind {
            WeightKind::Bump12 => phi_eval(u),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstantKind {
    Aqw,
    Aqi,
    Cqw,
    Cqi,
    D3,
    D4,
}

impl ConstantKind {
    pub const ALL: [ConstantKind; 6] =
        [ConstantKind::Aqw, ConstantKind::Aqi, ConstantKind::Cqw, ConstantKind::Cqi, ConstantKind::D3, ConstantKind::D4];

    pub fn formula(self) -> &'static str {
        match self {
            ConstantKind::Aqw => "(1+sqrt(3))*pi/1296",
            ConstantKind::Aqi => "(2+sqrt(2))*pi/512",
            ConstantKind::Cqw => "(3*sqrt(3)-1)/(27*(sqrt(3)-1)) * zeta_Q(w)(3/2)",
            ConstantKind::Cqi => "3*(2+sqrt(2))/128 * zeta_Q(i)(4)",
            ConstantKind::D3 => "(3*sqrt(3)-1)/(27*(sqrt(3)-1)) * zeta(3/2)",
            ConstantKind::D4 => "3*(2+sqrt(2))/128 * zeta(2)",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConstantKind::Aqw => "A_Qw",
            ConstantKind::Aqi => "A_Qi",
            ConstantKind::Cqw => "C_Qw",
            ConstantKind::Cqi => "C_Qi",
            ConstantKind::D3 => "D_3",
            ConstantKind::D4 => "D_4",
        }
    }
}

fn cubic_prefactor() -> f64 {
    let r3 = 3f64.sqrt();
    (3.0 * r3 - 1.0) / (27.0 * (r3 - 1.0))
}

fn quartic_prefactor() -> f64 {
    3.0 * (2.0 + 2f64.sqrt()) / 128.0
}

pub fn predicted_constant(kind: ConstantKind) -> f64 {
    let z = |k, s| zeta_real(k, s).expect("s > 1");
    match kind {
        ConstantKind::Aqw => (1.0 + 3f64.sqrt()) * PI / 1296.0,
        ConstantKind::Aqi => (2.0 + 2f64.sqrt()) * PI / 512.0,
        ConstantKind::Cqw => cubic_prefactor() * z(ZetaKind::DedekindQw, 1.5),
        ConstantKind::Cqi => quartic_prefactor() * z(ZetaKind::DedekindQi, 4.0),
        ConstantKind::D3 => cubic_prefactor() * z(ZetaKind::Riemann, 1.5),
        ConstantKind::D4 => quartic_prefactor() * z(ZetaKind::Riemann, 2.0),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantReport {
    pub name: String,
    pub formula: String,
    pub value: f64,
    pub decimal: String,
}

pub fn constant_table() -> Vec<ConstantReport> {
    ConstantKind::ALL
        .iter()
        .map(|&k| {
            let value = predicted_constant(k);
            ConstantReport { name: k.name().into(), formula: k.formula().into(), value, decimal: format!("{value:.12e}") }
        })
        .collect()
}

/// The main-term constant paired with each family.
pub fn family_constant(family: Family) -> ConstantKind {
    match family {
        Family::QuadHeckeQw => ConstantKind::Aqw,
        Family::QuadHeckeQi => ConstantKind::Aqi,
        Family::CubicHecke => ConstantKind::Cqw,
        Family::QuarticHecke => ConstantKind::Cqi,
        Family::DirichletCubic => ConstantKind::D3,
        Family::DirichletQuartic => ConstantKind::D4,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Contribution {
    pub norm: u64,
    pub a: i64,
    pub b: i64,
    pub l_re: f64,
    pub l_im: f64,
    /// `Lambda(pi) Phi(N(pi) / y)`.
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsUsed {
    pub name: String,
    pub value: f64,
    pub phi_hat0: f64,
    pub fitted_b: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentReport {
    pub schema_version: u32,
    pub family: Family,
    pub y_or_q: f64,
    pub observed_sum: ComplexVal,
    pub predicted_main: f64,
    pub constants_used: ConstantsUsed,
    pub prime_count: usize,
    pub runtime_s: f64,
    pub contributions: Vec<Contribution>,
}

impl MomentReport {
    /// `observed / predicted_main`.
    pub fn ratio(&self) -> f64 {
        self.observed_sum.re / self.predicted_main
    }

    /// `|Im| / |S|`, zero for an empty sum.
    pub fn relative_imaginary(&self) -> f64 {
        let m = self.observed_sum.abs();
        if m == 0.0 {
            0.0
        } else {
            self.observed_sum.im.abs() / m
        }
    }

    /// Copy with the wall-clock field cleared, for reproducibility checks.
    pub fn without_timing(&self) -> MomentReport {
        MomentReport { runtime_s: 0.0, ..self.clone() }
    }

    pub fn contributions_csv(&self) -> String {
        let mut out = String::from("norm,a,b,L_re,L_im,weight\n");
        for c in &self.contributions {
            out.push_str(&format!("{},{},{},{:?},{:?},{:?}\n", c.norm, c.a, c.b, c.l_re, c.l_im, c.weight));
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MomentOptions {
    /// Worker threads; 0 uses the global pool.
    pub workers: usize,
}

impl Default for MomentOptions {
    fn default() -> Self {
        MomentOptions { workers: 0 }
    }
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// The prime moduli of `family` with `y < N(pi) <= 2y`, ordered by (norm, a, b).
pub fn family_primes(family: Family, y: f64) -> Result<Vec<PrimeElement>> {
    let lo = y.floor() as u64;
    let hi = (2.0 * y).floor() as u64;
    let mut v = enumerate_prime_elements_in(family.field(), lo, hi, &family.class_modulus())?;
    if family.is_dirichlet() {
        v.retain(|p| p.split_type == SplitType::Split);
    }
    Ok(v)
}

/// Central value of the family character attached to `pi`.
pub fn family_value(family: Family, pi: &PrimeElement) -> Result<(ComplexVal, f64, u64)> {
    if family.is_dirichlet() {
        let chi = induced_dirichlet_character(pi, family.order())?;
        let rec = dirichlet_l_central(&chi, None)?;
        Ok((rec.value, rec.balance, rec.truncation))
    } else {
        let rec = hecke_l_central(family, pi, None, DEFAULT_THRESHOLD)?;
        Ok((rec.value, rec.balance, rec.truncation))
    }
}

/// `sum L(1/2, chi_pi) Lambda(pi) Phi(N(pi) / y)` over the family, with
/// values taken from `cache` when present and appended to it otherwise.
pub fn moment(family: Family, y: f64, opts: MomentOptions, cache: Option<&mut LCache>) -> Result<MomentReport> {
    if !(y > 0.0) {
        return Err(Error::Range(format!("y = {y} must be positive")));
    }
    let start = Instant::now();
    let weight = SmoothWeight::bump();
    let primes = family_primes(family, y)?;
    let mut local = LCache::in_memory();
    let cache = cache.unwrap_or(&mut local);

    let missing: Vec<&PrimeElement> = primes.iter().filter(|p| cache.get(family, &p.value).is_none()).collect();
    let computed: Vec<Result<CacheEntry>> = with_pool(opts.workers, || {
        missing
            .par_iter()
            .map(|pi| {
                let (value, balance, truncation) = family_value(family, pi)?;
                Ok(CacheEntry {
                    family,
                    a: pi.value.a,
                    b: pi.value.b,
                    value,
                    balance,
                    truncation,
                    engine_version: ENGINE_VERSION,
                })
            })
            .collect()
    })?;
    let computed: Vec<CacheEntry> = computed.into_iter().collect::<Result<_>>()?;
    cache.note_computed(computed.len() as u64);
    cache.store(&computed)?;

    let mut contributions = Vec::with_capacity(primes.len());
    let (mut re, mut im, mut err) = (0.0, 0.0, 0.0);
    for pi in &primes {
        let e = cache.get(family, &pi.value).ok_or_else(|| Error::Internal("cache lost an entry".into()))?;
        let w = pi.log_norm() * weight.eval(pi.norm as f64 / y);
        re += w * e.value.re;
        im += w * e.value.im;
        err += w * e.value.err;
        contributions.push(Contribution { norm: pi.norm, a: pi.value.a, b: pi.value.b, l_re: e.value.re, l_im: e.value.im, weight: w });
    }

    let kind = family_constant(family);
    let c = predicted_constant(kind);
    let predicted_main = if family.is_quadratic() { c * weight.phi_hat0 * y * y.ln() } else { c * weight.phi_hat0 * y };
    Ok(MomentReport {
        schema_version: SCHEMA_VERSION,
        family,
        y_or_q: y,
        observed_sum: ComplexVal::new(re, im, err),
        predicted_main,
        constants_used: ConstantsUsed { name: kind.name().into(), value: c, phi_hat0: weight.phi_hat0, fitted_b: None },
        prime_count: primes.len(),
        runtime_s: start.elapsed().as_secs_f64(),
        contributions,
    })
}

pub fn moment_quadratic(field: FieldTag, y: f64, opts: MomentOptions) -> Result<MomentReport> {
    let family = match field {
        FieldTag::EisensteinQw => Family::QuadHeckeQw,
        FieldTag::GaussianQi => Family::QuadHeckeQi,
    };
    moment(family, y, opts, None)
}

pub fn moment_hecke_order_n(field: FieldTag, y: f64, n: u8, opts: MomentOptions) -> Result<MomentReport> {
    let family = match (field, n) {
        (FieldTag::EisensteinQw, 3) => Family::CubicHecke,
        (FieldTag::GaussianQi, 4) => Family::QuarticHecke,
        _ => return Err(Error::Precondition(format!("no order-{n} family over {field}"))),
    };
    moment(family, y, opts, None)
}

pub fn moment_dirichlet(n: u8, q: f64, opts: MomentOptions) -> Result<MomentReport> {
    let family = match n {
        3 => Family::DirichletCubic,
        4 => Family::DirichletQuartic,
        _ => return Err(Error::Precondition(format!("order {n} is not 3 or 4"))),
    };
    moment(family, q, opts, None)
}

/// Least-squares `(A, B)` with `observed ~ phi_hat0 (A y log y + B y)`.
pub fn fit_main_terms(points: &[(f64, f64)], phi_hat0: f64) -> Result<(f64, f64)> {
    if points.len() < 2 {
        return Err(Error::DegenerateFit);
    }
    let (mut suu, mut suv, mut svv, mut suo, mut svo) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for &(y, o) in points {
        let u = phi_hat0 * y * y.ln();
        let v = phi_hat0 * y;
        suu += u * u;
        suv += u * v;
        svv += v * v;
        suo += u * o;
        svo += v * o;
    }
    let det = suu * svv - suv * suv;
    if !(det.abs() > 1e-12 * suu * svv) {
        return Err(Error::DegenerateFit);
    }
    Ok(((suo * svv - svo * suv) / det, (suu * svo - suv * suo) / det))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PattersonRow {
    pub x: f64,
    pub s_re: f64,
    pub s_im: f64,
    pub abs_s: f64,
    pub prime_count: usize,
    pub x_27_32: f64,
    pub x_19_20: f64,
}

/// Partial sums `S(x) = sum_{N(pi) <= x} g_n(pi) Lambda(pi) / sqrt(N(pi))`
/// over `pi == 1 (mod 9)` in Z[w] (`n = 3`) or primary `pi` in Z[i]
/// (`n = 4`), at `x = 1, 2, 4, ...` up to `x_max`.
pub fn patterson_diagnostic(field: FieldTag, n: u8, x_max: f64, opts: MomentOptions) -> Result<Vec<PattersonRow>> {
    let class = match (field, n) {
        (FieldTag::EisensteinQw, 3) => QuadInt::eisenstein(9, 0),
        (FieldTag::GaussianQi, 4) => field.context().primary_modulus,
        _ => return Err(Error::Precondition(format!("no order-{n} Gauss sums over {field}"))),
    };
    if !(x_max >= 1.0 && x_max <= 1e7) {
        return Err(Error::Range(format!("x_max = {x_max} outside [1, 1e7]")));
    }
    let primes = enumerate_prime_elements(field, x_max.floor() as u64, &class)?;
    let one = QuadInt::one(field);
    let terms: Vec<Result<(u64, f64, f64)>> = with_pool(opts.workers, || {
        primes
            .par_iter()
            .map(|pi| {
                let g = gauss_sum_prime(n, &one, pi)?;
                let w = pi.log_norm() / (pi.norm as f64).sqrt();
                Ok((pi.norm, w * g.re, w * g.im))
            })
            .collect()
    })?;
    let terms: Vec<(u64, f64, f64)> = terms.into_iter().collect::<Result<_>>()?;

    let mut xs: Vec<f64> = std::iter::successors(Some(1.0f64), |x| Some(2.0 * x)).take_while(|&x| x <= x_max).collect();
    if xs.last() != Some(&x_max) {
        xs.push(x_max);
    }
    let mut rows = Vec::new();
    let (mut re, mut im, mut i) = (0.0, 0.0, 0usize);
    for x in xs {
        while i < terms.len() && terms[i].0 as f64 <= x {
            re += terms[i].1;
            im += terms[i].2;
            i += 1;
        }
        rows.push(PattersonRow {
            x,
            s_re: re,
            s_im: im,
            abs_s: re.hypot(im),
            prime_count: i,
            x_27_32: x.powf(27.0 / 32.0),
            x_19_20: x.powf(19.0 / 20.0),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bump_values() {
        assert!((phi_eval(1.5) - (-4.0f64).exp()).abs() < 1e-16);
        assert_eq!(phi_eval(1.0), 0.0);
        assert_eq!(phi_eval(2.0), 0.0);
        for h in [1e-2, 1e-3] {
            assert!(phi_eval(1.0 + h) / h < 1e-20);
            assert!(phi_eval(2.0 - h) / h < 1e-20);
        }
    }

    #[test]
    fn phi_hat_is_reproducible() {
        let coarse = adaptive_simpson(&phi_eval, 1.0, 2.0, 1e-11);
        assert!((coarse - phi_hat0()).abs() < 1e-10);
        assert!(phi_hat0() > 0.0);
    }

    #[test]
    fn constants() {
        assert!((predicted_constant(ConstantKind::Aqw) - 6.6227e-3).abs() < 1e-7);
        assert!((predicted_constant(ConstantKind::Aqi) - 2.0950e-2).abs() < 1e-6);
        assert!((predicted_constant(ConstantKind::D4) - 0.131_629).abs() < 1e-6);
        assert_eq!(constant_table().len(), 6);
    }

    #[test]
    fn fit_recovers_synthetic_parameters() {
        let ph = phi_hat0();
        let (a, b) = (0.0066227, 0.01);
        let pts: Vec<(f64, f64)> = [1e4f64, 2e4, 4e4, 8e4].iter().map(|&y| (y, ph * (a * y * y.ln() + b * y))).collect();
        let (ah, bh) = fit_main_terms(&pts, ph).unwrap();
        assert!((ah - a).abs() < 1e-9 && (bh - b).abs() < 1e-9);
        assert!(fit_main_terms(&pts[..1], ph).is_err());
        assert!(fit_main_terms(&[(1e4, 1.0), (1e4, 2.0)], ph).is_err());
    }

    #[test]
    fn empty_range_is_zero() {
        let r = moment(Family::CubicHecke, 30.0, MomentOptions::default(), None).unwrap();
        assert_eq!(r.prime_count, 0);
        assert_eq!(r.observed_sum.re, 0.0);
    }

    #[test]
    fn patterson_small() {
        let rows = patterson_diagnostic(FieldTag::EisensteinQw, 3, 4096.0, MomentOptions::default()).unwrap();
        for r in &rows {
            if r.x < 73.0 {
                assert_eq!(r.abs_s, 0.0);
            }
            assert!(r.abs_s < r.x.max(1.0));
        }
        assert!(rows.windows(2).all(|w| w[0].prime_count <= w[1].prime_count));
    }
}
