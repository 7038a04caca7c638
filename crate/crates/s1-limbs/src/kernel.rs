//! Fixed-denominator residue arithmetic for the enumeration searches.
//!
//! Every angle that appears while hunting for rotation cycles of `m_3` or for
//! root parameter rays has denominator dividing `3^q - 1` or `3(3^q - 1)`, so
//! the searches run on `u128` numerators modulo that common denominator and
//! only the winners are converted back to exact [`Angle`](crate::angle::Angle)
//! values. Periods are capped so that no intermediate product can overflow.

use alloc::vec::Vec;

/// Hard overflow bound for the `u128` kernels: `3^(MAX+1)` and all cross
/// products stay comfortably inside `u128`.
pub(crate) const MAX_PERIOD: u32 = 39;

/// Practical period caps for the exhaustive searches, which enumerate all
/// residues mod `2^q - 1` respectively `3(3^q - 1)`. Both stay well under a
/// second at the cap.
pub(crate) const MAX_DOUBLING_SEARCH: u32 = 24;
pub(crate) const MAX_TRIPLING_SEARCH: u32 = 14;

pub(crate) fn pow(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// True iff residue `x` lies strictly inside the open arc from `s` to `e`
/// (counterclockwise), all measured mod `m`.
pub(crate) fn in_open_arc(x: u128, s: u128, e: u128, m: u128) -> bool {
    let rel_x = (x + m - s) % m;
    let rel_e = (e + m - s) % m;
    if rel_e == 0 {
        // Full circle minus the point `s`.
        rel_x != 0
    } else {
        rel_x != 0 && rel_x < rel_e
    }
}

/// Chord linkage on residues mod `m`; endpoints are assumed pairwise distinct.
pub(crate) fn chords_linked(c1: (u128, u128), c2: (u128, u128), m: u128) -> bool {
    in_open_arc(c2.0, c1.0, c1.1, m) != in_open_arc(c2.1, c1.0, c1.1, m)
}

/// Exact period of `n/m` under multiplication by `d`, bounded by `max`.
pub(crate) fn exact_period(n: u128, d: u128, m: u128, max: u32) -> Option<u32> {
    let mut x = n;
    for e in 1..=max {
        x = (x * d) % m;
        if x == n {
            return Some(e);
        }
    }
    None
}

/// All cycles of exact period `q` of `t -> d*t` on residues mod `m = d^q - 1`,
/// each cycle listed as sorted residues, cycles ordered by smallest element.
pub(crate) fn exact_cycles(d: u128, q: u32, m: u128) -> Vec<Vec<u128>> {
    let mut cycles = Vec::new();
    for n in 0..m {
        // Take each cycle once, at its smallest element.
        let mut x = n;
        let mut len = 0u32;
        let mut is_min = true;
        loop {
            x = (x * d) % m;
            len += 1;
            if x < n {
                is_min = false;
                break;
            }
            if x == n {
                break;
            }
        }
        if !is_min || len != q {
            continue;
        }
        let mut cyc = Vec::with_capacity(q as usize);
        let mut x = n;
        for _ in 0..q {
            cyc.push(x);
            x = (x * d) % m;
        }
        cyc.sort_unstable();
        cycles.push(cyc);
    }
    cycles
}

/// If `d` advances every point of the sorted residue set by a constant number
/// of positions in cyclic order, returns that advance.
pub(crate) fn cyclic_advance(sorted: &[u128], d: u128, m: u128) -> Option<usize> {
    let n = sorted.len();
    let mut advance = None;
    for (i, &x) in sorted.iter().enumerate() {
        let y = (x * d) % m;
        let j = sorted.binary_search(&y).ok()?;
        let adv = (j + n - i) % n;
        match advance {
            None => advance = Some(adv),
            Some(a) if a != adv => return None,
            _ => {}
        }
    }
    advance
}

/// Number of residues `x` in the set with `x/m < 1/2`.
pub(crate) fn count_first_half(sorted: &[u128], m: u128) -> usize {
    // m is even for every modulus used here (d^q - 1 with d odd, or 3 times it).
    sorted.iter().filter(|&&x| 2 * x < m).count()
}

/// Merge two sorted residue lists; `None` if they share an element.
pub(crate) fn merge_disjoint(a: &[u128], b: &[u128]) -> Option<Vec<u128>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => return None,
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some(out)
}

/// A candidate produced by the root-ray search: the numerator `i` of the first
/// parameter ray over `big_den = 3(3^q - 1)`, and the landing chords
/// `P_j = {3^j eta, 3^j eta'}` as residues mod `big_den` in orbit order.
#[derive(Debug, Clone)]
pub(crate) struct RootRayCandidate {
    pub i: u128,
    pub big_den: u128,
    pub chords: Vec<(u128, u128)>,
}

/// Scans all `i` for root parameter rays of the limb with internal angle
/// `t0 = t0_num/t0_den` (exact `m_2`-period `q`) on the `plus` or minus side.
///
/// A candidate `theta = i/D`, `theta' = (i+1)/D` with `D = 3(3^q - 1)` is kept
/// iff `eta = theta + 1/3` and `eta' = theta' - 1/3`:
/// (a) both have exact `m_3`-period `q`;
/// (b) the `q` chords `P_j = {3^j eta, 3^j eta'}` have `2q` distinct
///     endpoints and are pairwise unlinked;
/// (c) the arc from `eta` to `eta'` contains the fixed angle `1/2` (plus
///     side) or `0` (minus side);
/// (d) walking the circle from the marked fixed angle (`0` for plus, `1/2`
///     for minus), the chords appear in the same order as the internal
///     angles `2^j * t0` appear counterclockwise from internal angle `0`.
pub(crate) fn root_ray_search(
    q: u32,
    t0_num: u128,
    t0_den: u128,
    plus: bool,
) -> Vec<RootRayCandidate> {
    debug_assert!((2..=MAX_PERIOD).contains(&q));
    let m = pow(3, q) - 1;
    let big_den = 3 * m;
    // Internal labels 2^j * t0, as numerators over t0_den; all lie in (0, 1)
    // and are distinct because t0 has exact period q.
    let labels: Vec<u128> = {
        let mut l = Vec::with_capacity(q as usize);
        let mut x = t0_num;
        for _ in 0..q {
            l.push(x);
            x = (x * 2) % t0_den;
        }
        l
    };
    // Internal cyclic order read from internal angle 0.
    let internal_order: Vec<usize> = {
        let mut idx: Vec<usize> = (0..labels.len()).collect();
        idx.sort_unstable_by_key(|&j| labels[j]);
        idx
    };

    let marked = if plus { 0u128 } else { big_den / 2 };
    let sign_point = if plus { big_den / 2 } else { 0u128 };

    let mut hits = Vec::new();
    'candidates: for i in 0..big_den {
        let eta = (i + m) % big_den;
        let eta_p = (i + 1 + big_den - m) % big_den;
        // Periodic angles over D have numerator divisible by 3.
        if !eta.is_multiple_of(3) || !eta_p.is_multiple_of(3) {
            continue;
        }
        if exact_period(eta / 3, 3, m, q) != Some(q) || exact_period(eta_p / 3, 3, m, q) != Some(q)
        {
            continue;
        }
        // (c) sign criterion on the critical gap.
        if !in_open_arc(sign_point, eta, eta_p, big_den) {
            continue;
        }
        // (b) 2q distinct endpoints, pairwise unlinked chords.
        let mut chords = Vec::with_capacity(q as usize);
        let (mut x, mut y) = (eta, eta_p);
        for _ in 0..q {
            chords.push((x, y));
            x = (x * 3) % big_den;
            y = (y * 3) % big_den;
        }
        let mut endpoints: Vec<u128> = chords.iter().flat_map(|&(x, y)| [x, y]).collect();
        endpoints.sort_unstable();
        if endpoints.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        for a in 0..chords.len() {
            for b in (a + 1)..chords.len() {
                if chords_linked(chords[a], chords[b], big_den) {
                    continue 'candidates;
                }
            }
        }
        // (d) order matching. For each chord take the arc not containing the
        // marked angle, in coordinates cut at the marked angle.
        let mut arcs: Vec<(u128, u128, usize)> = Vec::with_capacity(q as usize);
        for (j, &(x, y)) in chords.iter().enumerate() {
            let u = (x + big_den - marked) % big_den;
            let v = (y + big_den - marked) % big_den;
            if u == 0 || v == 0 {
                continue 'candidates;
            }
            let (s, e) = if u < v { (u, v) } else { (v, u) };
            arcs.push((s, e, j));
        }
        arcs.sort_unstable();
        // Nested or overlapping arcs cannot be a boundary landing pattern.
        if arcs.windows(2).any(|w| w[1].0 < w[0].1) {
            continue;
        }
        let external_order: Vec<usize> = arcs.iter().map(|&(_, _, j)| j).collect();
        if external_order != internal_order {
            continue;
        }
        hits.push(RootRayCandidate { i, big_den, chords });
    }
    hits
}
