//! Real special functions: erfc, the upper incomplete gamma function, the
//! two smoothing kernels, and zeta and L values to the right of 1.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const SQRT_PI: f64 = 1.772_453_850_905_516;
const EPS: f64 = 1e-16;

/// Complementary error function, from a positive-term series below 2 and a
/// Lentz-evaluated continued fraction above.
pub fn erfc(x: f64) -> f64 {
    if x < 0.0 {
        return 2.0 - erfc(-x);
    }
    if x < 2.0 {
        // erf x = 2/sqrt(pi) e^{-x^2} sum 2^n x^{2n+1} / (2n+1)!!
        let x2 = x * x;
        let mut term = x;
        let mut sum = x;
        let mut k = 1.0;
        while term > sum * EPS {
            term *= 2.0 * x2 / (2.0 * k + 1.0);
            sum += term;
            k += 1.0;
        }
        return 1.0 - 2.0 / SQRT_PI * (-x2).exp() * sum;
    }
    // erfc x = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    let tiny = 1e-300;
    let mut f = x;
    let mut c = x;
    let mut d = 0.0;
    for k in 1..500 {
        let an = k as f64 / 2.0;
        d = x + an * d;
        d = if d.abs() < tiny { tiny } else { d };
        c = x + an / c;
        c = if c.abs() < tiny { tiny } else { c };
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    (-x * x).exp() / (SQRT_PI * f)
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Gamma(x)` for real `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    ln_gamma(x).exp()
}

/// `Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt` for `a > 0`, `x >= 0`.
pub fn upper_incomplete_gamma(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !(x >= 0.0) || !a.is_finite() || x.is_nan() {
        return Err(Error::Range(format!("Gamma({a}, {x}) is outside the supported domain")));
    }
    if x == 0.0 {
        return Ok(gamma(a));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    if x < a + 1.0 {
        Ok(gamma(a) - lower_gamma_series(a, x))
    } else {
        Ok(upper_gamma_cf(a, x))
    }
}

/// `gamma(a, x) = e^{-x} x^a sum x^n / (a (a+1) ... (a+n))`.
pub fn lower_gamma_series(a: f64, x: f64) -> f64 {
    let mut term = 1.0 / a;
    let mut sum = term;
    let mut n = 1.0;
    while term.abs() > sum.abs() * EPS {
        term *= x / (a + n);
        sum += term;
        n += 1.0;
    }
    sum * (-x + a * x.ln()).exp()
}

/// Legendre continued fraction for `Gamma(a, x)`, good for `x > a + 1`.
pub fn upper_gamma_cf(a: f64, x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..1000 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    (-x + a * x.ln()).exp() * h
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelEval {
    pub x: f64,
    pub value: f64,
    pub abs_err: f64,
}

/// `V(x) = erfc(sqrt x)`.
pub fn cutoff_v(x: f64) -> Result<KernelEval> {
    if !(x > 0.0) {
        return Err(Error::Range(format!("V is defined for x > 0, got {x}")));
    }
    let value = erfc(x.sqrt());
    Ok(KernelEval { x, value, abs_err: 4.0 * f64::EPSILON * value.max(f64::MIN_POSITIVE) })
}

/// `W(x) = Gamma(1/4, pi x^2) / Gamma(1/4)`.
pub fn cutoff_w(x: f64) -> Result<KernelEval> {
    if !(x > 0.0) {
        return Err(Error::Range(format!("W is defined for x > 0, got {x}")));
    }
    let value = upper_incomplete_gamma(0.25, PI * x * x)? / gamma(0.25);
    Ok(KernelEval { x, value, abs_err: 64.0 * f64::EPSILON * value.max(f64::MIN_POSITIVE) })
}

/// Fast kernel values for inner loops, without error bookkeeping.
#[inline]
pub fn v_kernel(x: f64) -> f64 {
    erfc(x.sqrt())
}

#[inline]
pub fn w_kernel(x: f64) -> f64 {
    let y = PI * x * x;
    let g = if y < 1.25 { GAMMA_QUARTER - lower_gamma_series(0.25, y) } else { upper_gamma_cf(0.25, y) };
    g / GAMMA_QUARTER
}

const GAMMA_QUARTER: f64 = 3.625_609_908_221_908_3;

/// `B_{2k} / (2k)!` for k = 1..=7.
const BERNOULLI_SCALED: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
];

const HURWITZ_SHIFT: usize = 50;
const HURWITZ_TERMS: usize = 6;

/// Euler-Maclaurin correction sum for `sum_{k >= m} (k + a)^{-s}` excluding
/// the pole term: `N^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}`
/// with `N = m + a`.
fn em_tail_without_pole(s: f64, n: f64) -> f64 {
    let mut acc = 0.5 * n.powf(-s);
    let mut rising = s; // (s)_{2j-1}
    let mut power = n.powf(-s - 1.0);
    let n2 = n * n;
    for (j, b) in BERNOULLI_SCALED.iter().take(HURWITZ_TERMS).enumerate() {
        if j > 0 {
            let k = 2.0 * j as f64;
            rising *= (s + k - 1.0) * (s + k);
            power /= n2;
        }
        acc += b * rising * power;
    }
    acc
}

/// Hurwitz zeta `zeta(s, a) = sum_{k >= 0} (k + a)^{-s}` for `s > 0`,
/// `s != 1`, `a > 0`.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 0.0) || s == 1.0 || !(a > 0.0) {
        return Err(Error::Range(format!("zeta({s}, {a}) is outside the supported domain")));
    }
    let mut sum = 0.0;
    for k in (0..HURWITZ_SHIFT).rev() {
        sum += (k as f64 + a).powf(-s);
    }
    let n = HURWITZ_SHIFT as f64 + a;
    Ok(sum + n.powf(1.0 - s) / (s - 1.0) + em_tail_without_pole(s, n))
}

/// `L(s, chi) = sum chi(m) m^{-s}` for a real character of period `q`
/// with mean zero, given as weights `chi(1), ..., chi(q)`, for real `s > 0`.
///
/// The pole terms of the Hurwitz decomposition are combined with `expm1`
/// so that values near `s = 1` do not lose precision.
pub fn periodic_l_real(weights: &[f64], s: f64) -> f64 {
    let q = weights.len() as f64;
    let m0 = HURWITZ_SHIFT as f64;
    let mut total = 0.0;
    let mut pole = 0.0;
    for (i, &w) in weights.iter().enumerate() {
        if w == 0.0 {
            continue;
        }
        let a = (i + 1) as f64 / q;
        let mut head = 0.0;
        for k in (0..HURWITZ_SHIFT).rev() {
            head += (k as f64 + a).powf(-s);
        }
        let n = m0 + a;
        total += w * (head + em_tail_without_pole(s, n));
        // (m0 + a)^{1-s} - m0^{1-s} = m0^{1-s} expm1((1-s) ln(1 + a/m0))
        pole += w * ((1.0 - s) * (a / m0).ln_1p()).exp_m1();
    }
    let pole_term = if s == 1.0 {
        weights.iter().enumerate().map(|(i, &w)| -w * (((i + 1) as f64 / q) / m0).ln_1p()).sum::<f64>()
    } else {
        m0.powf(1.0 - s) * pole / (s - 1.0)
    };
    q.powf(-s) * (total + pole_term)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaKind {
    Riemann,
    ChiM3,
    ChiM4,
    DedekindQw,
    DedekindQi,
}

/// Real values of the Riemann zeta function, the two quadratic L-functions
/// of discriminants -3 and -4, and the Dedekind zeta functions of Q(w) and
/// Q(i), for `s > 1`.
pub fn zeta_real(kind: ZetaKind, s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::Range(format!("zeta values require s > 1, got {s}")));
    }
    let riemann = || hurwitz_zeta(s, 1.0);
    Ok(match kind {
        ZetaKind::Riemann => riemann()?,
        ZetaKind::ChiM3 => periodic_l_real(&[1.0, -1.0, 0.0], s),
        ZetaKind::ChiM4 => periodic_l_real(&[1.0, 0.0, -1.0, 0.0], s),
        ZetaKind::DedekindQw => riemann()? * periodic_l_real(&[1.0, -1.0, 0.0], s),
        ZetaKind::DedekindQi => riemann()? * periodic_l_real(&[1.0, 0.0, -1.0, 0.0], s),
    })
}
