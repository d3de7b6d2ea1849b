//! Nonzero ideals of O_K by norm, generated multiplicatively from the
//! prime ideal table.

use std::sync::{Arc, Mutex};

use crate::field::{FieldTag, QuadInt};
use crate::primes::{prime_ideals_up_to, PrimeIdeal};

/// Canonical generator of the ideal `(z)`: for Z[i] the associate with
/// `a > 0, b >= 0`; for Z[w] the normalised associate.
pub fn canonical_generator(z: &QuadInt) -> QuadInt {
    match z.field {
        FieldTag::GaussianQi => z
            .associates()
            .find(|u| u.a > 0 && u.b >= 0)
            .unwrap_or(*z),
        FieldTag::EisensteinQw => z.normalized(),
    }
}

/// Every nonzero ideal of norm `<= max_norm`, as (canonical generator,
/// norm), sorted by (norm, a, b).
pub fn enumerate_ideals(field: FieldTag, max_norm: u64) -> Vec<(QuadInt, u64)> {
    let table = prime_table(field, max_norm);
    let primes = &table[..table.partition_point(|p| p.norm <= max_norm)];
    let mut out = vec![(QuadInt::one(field), 1)];
    fn walk(primes: &[PrimeIdeal], start: usize, g: QuadInt, norm: u64, max: u64, out: &mut Vec<(QuadInt, u64)>) {
        for i in start..primes.len() {
            let p = &primes[i];
            if norm.saturating_mul(p.norm) > max {
                break;
            }
            let (mut m, mut h) = (norm * p.norm, g * p.generator);
            loop {
                out.push((h, m));
                walk(primes, i + 1, h, m, max, out);
                match m.checked_mul(p.norm) {
                    Some(next) if next <= max => {
                        m = next;
                        h = h * p.generator;
                    }
                    _ => break,
                }
            }
        }
    }
    if max_norm >= 1 {
        walk(primes, 0, QuadInt::one(field), 1, max_norm, &mut out);
    } else {
        out.clear();
    }
    for (g, _) in out.iter_mut() {
        *g = canonical_generator(g);
    }
    out.sort_by_key(|(g, n)| (*n, g.a, g.b));
    out
}

/// Visit every ideal of norm `<= max_norm` whose character value is
/// nonzero, given the character index of each prime ideal (`None` for
/// primes dividing the conductor). `visit(norm, index)` receives the index
/// of `chi(A)` modulo `order`.
pub fn walk_character<F: FnMut(u64, u8)>(
    primes: &[(u64, Option<u8>)],
    order: u8,
    max_norm: u64,
    mut visit: F,
) {
    fn rec<F: FnMut(u64, u8)>(primes: &[(u64, Option<u8>)], start: usize, norm: u64, k: u8, n: u8, max: u64, visit: &mut F) {
        for i in start..primes.len() {
            let (pn, pk) = primes[i];
            if norm.saturating_mul(pn) > max {
                break;
            }
            let Some(pk) = pk else { continue };
            let (mut m, mut kk) = (norm * pn, (k + pk) % n);
            loop {
                visit(m, kk);
                rec(primes, i + 1, m, kk, n, max, visit);
                match m.checked_mul(pn) {
                    Some(next) if next <= max => {
                        m = next;
                        kk = (kk + pk) % n;
                    }
                    _ => break,
                }
            }
        }
    }
    if max_norm >= 1 {
        visit(1, 0);
        rec(primes, 0, 1, 0, order, max_norm, &mut visit);
    }
}

type Table = Arc<Vec<PrimeIdeal>>;

static TABLES: Mutex<[Option<(u64, Table)>; 2]> = Mutex::new([None, None]);

/// Shared prime ideal table covering at least norms `<= bound`, ordered by norm.
pub fn prime_table(field: FieldTag, bound: u64) -> Table {
    let slot = match field {
        FieldTag::GaussianQi => 0,
        FieldTag::EisensteinQw => 1,
    };
    let mut tables = TABLES.lock().unwrap_or_else(|e| e.into_inner());
    if let Some((built, t)) = &tables[slot] {
        if *built >= bound {
            return Arc::clone(t);
        }
    }
    let built = bound.max(1 << 12).next_power_of_two();
    let t = Arc::new(prime_ideals_up_to(field, built));
    tables[slot] = Some((built, Arc::clone(&t)));
    t
}
