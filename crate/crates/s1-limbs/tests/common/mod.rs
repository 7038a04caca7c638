//! Shared helpers and the independent brute-force oracle.
//!
//! The oracle works from the definition: a finite invariant union of two
//! tripling cycles is a rotation set iff the map preserves the cyclic order
//! of its points. It enumerates orbits with its own `u64` arithmetic and
//! never touches the library's gap analysis or search kernels, so agreement
//! is a genuine cross-check.

// Each test binary uses a different subset of these helpers.
#![allow(dead_code)]

use s1_limbs::{Angle, LimbId, Sign};

pub fn angle(n: u64, d: u64) -> Angle {
    Angle::new(n, d)
}

pub fn limb(s: &str) -> LimbId {
    s.parse().unwrap()
}

fn pow3(q: u32) -> u64 {
    3u64.pow(q)
}

/// Orbit of `n` under tripling mod `m`, or `None` if `n` is not the smallest
/// element (so each cycle is produced once) or the exact period is not `q`.
fn cycle_from_min(n: u64, q: u32, m: u64) -> Option<Vec<u64>> {
    let mut orbit = vec![n];
    let mut x = (n * 3) % m;
    while x != n {
        if x < n || orbit.len() > q as usize {
            return None;
        }
        orbit.push(x);
        x = (x * 3) % m;
    }
    if orbit.len() != q as usize {
        return None;
    }
    orbit.sort_unstable();
    Some(orbit)
}

/// A two-cycle rotation set found by the oracle, with its rotation number
/// and signature.
pub struct OracleSet {
    pub points: Vec<(u64, u64)>,
    pub rho: (u64, u64),
    pub s1: u32,
}

fn reduced(mut n: u64, mut d: u64) -> (u64, u64) {
    let g = gcd(n, d).max(1);
    n /= g;
    d /= g;
    (n, d)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exhaustive search over all unordered pairs of exact-period-`q` cycles of
/// tripling: keeps a pair iff tripling preserves the cyclic order of the
/// union (the definition of admitting a monotone degree-one extension).
pub fn oracle_two_cycle_sets(q: u32) -> Vec<OracleSet> {
    let m = pow3(q) - 1;
    let mut cycles: Vec<Vec<u64>> = Vec::new();
    for n in 0..m {
        if let Some(c) = cycle_from_min(n, q, m) {
            cycles.push(c);
        }
    }
    let mut found = Vec::new();
    for i in 0..cycles.len() {
        'pair: for j in (i + 1)..cycles.len() {
            let mut union: Vec<u64> = cycles[i].iter().chain(&cycles[j]).copied().collect();
            union.sort_unstable();
            if union.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let n_pts = union.len();
            let image_index = |x: u64| union.binary_search(&((x * 3) % m));
            let shift = match image_index(union[0]) {
                Ok(s) => s,
                Err(_) => continue,
            };
            for (idx, &x) in union.iter().enumerate() {
                match image_index(x) {
                    Ok(pos) if pos == (shift + idx) % n_pts => {}
                    _ => continue 'pair,
                }
            }
            let s1 = union.iter().filter(|&&x| 2 * x < m).count() as u32;
            found.push(OracleSet {
                points: union.iter().map(|&x| reduced(x, m)).collect(),
                rho: reduced(shift as u64, n_pts as u64),
                s1,
            });
        }
    }
    found
}

/// Every limb whose internal angle has exact doubling period `<= max_q`,
/// both signs, ordered by period then angle.
pub fn limbs_up_to_period(max_q: u32) -> Vec<LimbId> {
    let mut out = Vec::new();
    for q in 1..=max_q {
        let m = 2u64.pow(q) - 1;
        for n in 0..m.max(1) {
            let t0 = Angle::new(n, m);
            let orbit = t0.orbit(2);
            if orbit.preperiod == 0 && orbit.period == q as usize {
                out.push(LimbId::new(t0.clone(), Sign::Plus));
                out.push(LimbId::new(t0, Sign::Minus));
            }
        }
    }
    out
}

/// Reduced fractions with exact denominator `q`, as angles.
pub fn reduced_fractions(q: u64) -> Vec<Angle> {
    if q == 1 {
        return vec![Angle::zero()];
    }
    (1..q)
        .filter(|&p| gcd(p, q) == 1)
        .map(|p| Angle::new(p, q))
        .collect()
}
