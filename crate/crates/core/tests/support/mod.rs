//! Independent reference implementations shared by the integration tests.
//! Nothing here calls into the numerical code under test.

#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::PI;

/// Gaussian or Eisenstein integer as a pair `a + b*t`, with `t = i` or `t = w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair {
    pub a: i128,
    pub b: i128,
    pub eisenstein: bool,
}

impl Pair {
    pub fn new(a: i128, b: i128, eisenstein: bool) -> Self {
        Pair { a, b, eisenstein }
    }

    pub fn mul(self, o: Pair) -> Pair {
        if self.eisenstein {
            // w^2 = -1 - w
            let bb = self.b * o.b;
            Pair::new(self.a * o.a - bb, self.a * o.b + self.b * o.a - bb, true)
        } else {
            Pair::new(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a, false)
        }
    }

    pub fn sub(self, o: Pair) -> Pair {
        Pair::new(self.a - o.a, self.b - o.b, self.eisenstein)
    }

    pub fn conj(self) -> Pair {
        if self.eisenstein {
            Pair::new(self.a - self.b, -self.b, true)
        } else {
            Pair::new(self.a, -self.b, false)
        }
    }

    pub fn norm(self) -> i128 {
        if self.eisenstein {
            self.a * self.a - self.a * self.b + self.b * self.b
        } else {
            self.a * self.a + self.b * self.b
        }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Remainder after rounding `self / m` to the nearest lattice point.
    pub fn rem(self, m: Pair) -> Pair {
        let num = self.mul(m.conj());
        let n = m.norm();
        let round = |x: i128| (2 * x + n).div_euclid(2 * n);
        let q = Pair::new(round(num.a), round(num.b), self.eisenstein);
        self.sub(q.mul(m))
    }

    pub fn pow_mod(self, mut e: u128, m: Pair) -> Pair {
        let mut base = self.rem(m);
        let mut acc = Pair::new(1, 0, self.eisenstein).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base).rem(m);
            }
            base = base.mul(base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn congruent(self, o: Pair, m: Pair) -> bool {
        self.sub(o).rem(m).is_zero()
    }

    pub fn to_complex(self) -> Complex64 {
        if self.eisenstein {
            Complex64::new(self.a as f64 - 0.5 * self.b as f64, self.b as f64 * 3f64.sqrt() / 2.0)
        } else {
            Complex64::new(self.a as f64, self.b as f64)
        }
    }
}

/// `exp(2 pi i k / n)` as a ring element, for n = 2 in either ring, n = 3 in
/// Z[w] and n = 4 in Z[i].
pub fn unit_root(n: u32, k: u32, eisenstein: bool) -> Pair {
    let base = match (eisenstein, n) {
        (true, 3) => Pair::new(0, 1, true),
        (true, 2) | (false, 2) => Pair::new(-1, 0, eisenstein),
        (false, 4) => Pair::new(0, 1, false),
        _ => panic!("no root of order {n}"),
    };
    let mut acc = Pair::new(1, 0, eisenstein);
    for _ in 0..k {
        acc = acc.mul(base);
    }
    acc
}

/// Exponent `k` with `a^((N(pi)-1)/n) == zeta_n^k (mod pi)`, or `None` when
/// `pi | a`.
pub fn euler_symbol(a: Pair, pi: Pair, n: u32) -> Option<u32> {
    if a.rem(pi).is_zero() {
        return None;
    }
    let e = (pi.norm() - 1) as u128 / n as u128;
    let r = a.pow_mod(e, pi);
    (0..n).find(|&k| r.congruent(unit_root(n, k, a.eisenstein), pi))
}

/// Lanczos approximation (g = 7, nine terms) of the complex gamma function.
pub fn complex_gamma(z: Complex64) -> Complex64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
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
    if z.re < 0.5 {
        return PI / ((PI * z).sin() * complex_gamma(1.0 - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(COEF[0], 0.0);
    for (k, c) in COEF.iter().enumerate().skip(1) {
        x += c / (z + k as f64);
    }
    let t = z + G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// `(1 / 2 pi i) * integral over Re s = 2 of G(s) x^{-s} ds / s`, by the
/// trapezoid rule on `|Im s| <= 60` with step `0.05`.
pub fn mellin_inverse(g: impl Fn(Complex64) -> Complex64, x: f64) -> f64 {
    let h = 0.05;
    let steps = (60.0 / h) as i64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in -steps..=steps {
        let s = Complex64::new(2.0, k as f64 * h);
        acc += g(s) * (-s * x.ln()).exp() / s;
    }
    (acc * h / (2.0 * PI)).re
}

/// Kernel of the Hecke approximate functional equation from its Mellin
/// transform `Gamma(s + 1/2) / Gamma(1/2)`.
pub fn v_by_mellin(x: f64) -> f64 {
    let g_half = PI.sqrt();
    mellin_inverse(|s| complex_gamma(s + 0.5) / g_half, x)
}

/// Kernel of the Dirichlet approximate functional equation from its Mellin
/// transform `pi^{-s/2} Gamma((s + 1/2) / 2) / Gamma(1/4)`.
pub fn w_by_mellin(x: f64) -> f64 {
    let g_quarter = complex_gamma(Complex64::new(0.25, 0.0));
    mellin_inverse(|s| (-s / 2.0 * PI.ln()).exp() * complex_gamma((s + 0.5) / 2.0) / g_quarter, x)
}

/// Hurwitz zeta by a long direct sum with a short Euler-Maclaurin tail.
pub fn hurwitz_direct(s: f64, a: f64) -> f64 {
    const TERMS: usize = 20_000;
    let mut sum = 0.0;
    for k in (0..TERMS).rev() {
        sum += (k as f64 + a).powf(-s);
    }
    let n = TERMS as f64 + a;
    sum + n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s) + s / 12.0 * n.powf(-s - 1.0)
        - s * (s + 1.0) * (s + 2.0) / 720.0 * n.powf(-s - 3.0)
}

/// `L(s, chi)` from character values `chi(0..q)` via Hurwitz sums.
pub fn dirichlet_l_direct(values: &[Complex64], s: f64) -> Complex64 {
    let q = values.len() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for (a, v) in values.iter().enumerate().skip(1) {
        if v.norm() > 0.0 {
            acc += v * hurwitz_direct(s, a as f64 / q);
        }
    }
    acc * q.powf(-s)
}

/// Dedekind zeta of Q(i) or Q(w) at real `s > 1` summed over ideals of
/// norm `<= bound`, counted by lattice points divided by the unit count.
pub fn dedekind_by_lattice(eisenstein: bool, s: f64, bound: i128) -> f64 {
    let r = (4 * bound / 3 + 2) as f64;
    let r = r.sqrt() as i128 + 2;
    let units = if eisenstein { 6.0 } else { 4.0 };
    let mut counts = vec![0u32; bound as usize + 1];
    for a in -r..=r {
        for b in -r..=r {
            let n = Pair::new(a, b, eisenstein).norm();
            if n >= 1 && n <= bound {
                counts[n as usize] += 1;
            }
        }
    }
    let mut sum = 0.0;
    for n in (1..=bound as usize).rev() {
        if counts[n] > 0 {
            sum += counts[n] as f64 / units * (n as f64).powf(-s);
        }
    }
    // ideals of norm <= t number about c t with c = residue at s = 1
    let c = if eisenstein { PI / (3.0 * 3f64.sqrt()) } else { PI / 4.0 };
    let t = bound as f64 + 0.5;
    sum + c * t.powf(1.0 - s) / (s - 1.0)
}

/// High-precision decimals of the main-term constants and the weight
/// integral, computed separately with 40-digit arithmetic.
pub const REFERENCE_CONSTANTS: [(&str, f64); 6] = [
    ("A_Qw", 0.006_622_678_044_978_739_807),
    ("A_Qi", 0.020_949_352_041_675_688_914),
    ("C_Qw", 0.390_422_567_482_563_849_974),
    ("C_Qi", 0.085_650_695_088_768_155_301),
    ("D_3", 0.554_602_526_929_840_032_064),
    ("D_4", 0.131_628_660_943_189_360_570),
];
pub const REFERENCE_PHI_HAT0: f64 = 0.007_029_858_406_609_656_239;
