//! Finite rotation sets under the angle maps `m_d`.
//!
//! A finite `m_d`-invariant set is a rotation set when `m_d` extends to a
//! degree-one monotone circle map; for finite sets this is equivalent to the
//! purely arithmetic gap criterion used here: the complementary gaps carry a
//! total multiplicity `sum floor(d * length) >= d - 1`. On a rotation set the
//! map advances every point by the same number of positions in cyclic order,
//! which gives the rotation number.
//!
//! The constructors at the bottom realise the two families the limb
//! combinatorics needs: the unique `m_2` rotation set `X_{p/q}`, and the
//! unique two-cycle `m_3` rotation set with given rotation number and odd
//! signature, found by exhaustive search over period-`q` cycles.

use alloc::vec::Vec;
use core::fmt;

use crate::angle::{Angle, Arc};
use crate::kernel;

/// Signature of an `m_3` rotation set: `s1` points in `[0, 1/2)` out of `s2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub s1: u32,
    pub s2: u32,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s1, self.s2)
    }
}

/// A complementary gap of a finite set, with its multiplicity `floor(d * length)`.
/// Gaps of multiplicity zero are minor, the others major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gap {
    pub arc: Arc,
    pub multiplicity: u32,
}

impl Gap {
    pub fn is_major(&self) -> bool {
        self.multiplicity >= 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RotationSetError {
    Empty,
    DegreeTooSmall,
    /// `m_d` does not map the set onto itself.
    NotInvariant,
    /// Invariant, but the gap criterion fails.
    NotRotationSet,
    /// The requested period exceeds the search kernel's range.
    PeriodTooLarge,
    /// Signature rejected by the two-cycle realisation theorem.
    InvalidSignature {
        s1: u32,
        period: u32,
    },
    /// The uniqueness assertion of the exhaustive search failed; this
    /// signals a bug, not a property of the input.
    InternalNonUnique,
}

impl fmt::Display for RotationSetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotationSetError::Empty => write!(f, "empty angle set"),
            RotationSetError::DegreeTooSmall => write!(f, "degree must be at least 2"),
            RotationSetError::NotInvariant => write!(f, "set is not m_d-invariant"),
            RotationSetError::NotRotationSet => write!(f, "invariant set is not a rotation set"),
            RotationSetError::PeriodTooLarge => {
                write!(f, "period exceeds the supported search range")
            }
            RotationSetError::InvalidSignature { s1, period } => write!(
                f,
                "no two-cycle rotation set with signature ({s1}, {}): s1 must be odd and between 1 and {}",
                2 * period,
                2 * period - 1
            ),
            RotationSetError::InternalNonUnique => {
                write!(f, "internal error: rotation set search was not unique")
            }
        }
    }
}
impl core::error::Error for RotationSetError {}

/// A validated finite rotation set under `m_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSet {
    degree: u32,
    points: Vec<Angle>,
    rho: Angle,
    gaps: Vec<Gap>,
}

/// Sorts, dedupes, and checks `m_d(X) = X`.
fn checked_sorted(points: &[Angle], degree: u32) -> Result<Vec<Angle>, RotationSetError> {
    if degree < 2 {
        return Err(RotationSetError::DegreeTooSmall);
    }
    if points.is_empty() {
        return Err(RotationSetError::Empty);
    }
    let mut sorted: Vec<Angle> = points.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut image: Vec<Angle> = sorted.iter().map(|p| p.times(degree)).collect();
    image.sort();
    image.dedup();
    if image != sorted {
        return Err(RotationSetError::NotInvariant);
    }
    Ok(sorted)
}

/// The gaps of a sorted finite set, in cyclic order starting at the first point.
fn gaps_of(sorted: &[Angle], degree: u32) -> Vec<Gap> {
    let n = sorted.len();
    (0..n)
        .map(|i| {
            let arc = Arc::new(sorted[i].clone(), sorted[(i + 1) % n].clone());
            let multiplicity = arc.multiplicity(degree);
            Gap { arc, multiplicity }
        })
        .collect()
}

/// Constant position advance of `m_d` on a sorted set, if there is one.
fn cyclic_advance(sorted: &[Angle], degree: u32) -> Option<usize> {
    let n = sorted.len();
    let mut advance = None;
    for (i, p) in sorted.iter().enumerate() {
        let image = p.times(degree);
        let j = sorted.binary_search(&image).ok()?;
        let adv = (j + n - i) % n;
        match advance {
            None => advance = Some(adv),
            Some(a) if a != adv => return None,
            _ => {}
        }
    }
    advance
}

/// Decides the rotation-set property for a finite `m_d`-invariant set via the
/// gap criterion: the gap multiplicities must sum to at least `d - 1`.
pub fn is_rotation_set(points: &[Angle], degree: u32) -> Result<bool, RotationSetError> {
    let sorted = checked_sorted(points, degree)?;
    let total: u32 = gaps_of(&sorted, degree)
        .iter()
        .map(|g| g.multiplicity)
        .sum();
    Ok(total >= degree - 1)
}

impl RotationSet {
    /// Validates an `m_d`-invariant set of angles as a rotation set.
    pub fn new(points: &[Angle], degree: u32) -> Result<Self, RotationSetError> {
        let sorted = checked_sorted(points, degree)?;
        let gaps = gaps_of(&sorted, degree);
        let total: u32 = gaps.iter().map(|g| g.multiplicity).sum();
        if total < degree - 1 {
            return Err(RotationSetError::NotRotationSet);
        }
        // For finite invariant sets the gap criterion forces a constant
        // cyclic advance, which is the rotation number.
        let advance = cyclic_advance(&sorted, degree).ok_or(RotationSetError::NotRotationSet)?;
        let rho = Angle::new(advance as u64, sorted.len() as u64);
        Ok(Self {
            degree,
            points: sorted,
            rho,
            gaps,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The points, sorted increasing in `[0, 1)`.
    pub fn points(&self) -> &[Angle] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Rotation number as a reduced fraction in `[0, 1)`.
    pub fn rotation_number(&self) -> &Angle {
        &self.rho
    }

    /// All gaps with multiplicities, in cyclic order.
    pub fn gaps(&self) -> &[Gap] {
        &self.gaps
    }

    /// The gaps of length at least `1/d`.
    pub fn major_gaps(&self) -> impl Iterator<Item = &Gap> {
        self.gaps.iter().filter(|g| g.is_major())
    }

    pub fn signature(&self) -> Signature {
        let half = Angle::half();
        let s1 = self.points.iter().filter(|p| **p < half).count() as u32;
        Signature {
            s1,
            s2: self.points.len() as u32,
        }
    }

    /// Partition into `m_d`-cycles, each sorted, ordered by smallest element.
    ///
    /// For a two-cycle `m_3` rotation set the cycles are superlinked: their
    /// points alternate around the circle. This is checked in debug builds.
    pub fn cycles(&self) -> Vec<Vec<Angle>> {
        let mut assigned: Vec<Option<usize>> = alloc::vec![None; self.points.len()];
        let mut cycles: Vec<Vec<Angle>> = Vec::new();
        for start in 0..self.points.len() {
            if assigned[start].is_some() {
                continue;
            }
            let id = cycles.len();
            let mut members = Vec::new();
            let mut idx = start;
            while assigned[idx].is_none() {
                assigned[idx] = Some(id);
                members.push(self.points[idx].clone());
                let image = self.points[idx].times(self.degree);
                idx = self
                    .points
                    .binary_search(&image)
                    .expect("invariant set closed under the map");
            }
            members.sort();
            cycles.push(members);
        }
        if self.degree == 3 && cycles.len() == 2 {
            // Superlinked: consecutive points belong to opposite cycles.
            debug_assert!(
                self.points
                    .windows(2)
                    .all(|w| assigned[self.points.binary_search(&w[0]).unwrap()]
                        != assigned[self.points.binary_search(&w[1]).unwrap()]),
                "two-cycle m_3 rotation set must be superlinked"
            );
        }
        cycles
    }
}

impl fmt::Display for RotationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// The unique `m_2` rotation set `X_{p/q}` with rotation number `rho = p/q`,
/// found by enumerating the period-`q` cycles over denominator `2^q - 1`.
pub fn m2_rotation_set(rho: &Angle) -> Result<RotationSet, RotationSetError> {
    let (p, q) = small_fraction(rho, kernel::MAX_DOUBLING_SEARCH)?;
    let m = kernel::pow(2, q) - 1;
    let mut found = None;
    for cycle in kernel::exact_cycles(2, q, m) {
        if kernel::cyclic_advance(&cycle, 2, m) == Some(p as usize) {
            if found.is_some() {
                return Err(RotationSetError::InternalNonUnique);
            }
            found = Some(cycle);
        }
    }
    let residues = found.ok_or(RotationSetError::InternalNonUnique)?;
    let points: Vec<Angle> = residues
        .iter()
        .map(|&n| Angle::from_residue(n, m))
        .collect();
    RotationSet::new(&points, 2)
}

/// The unique `m_3` rotation set with rotation number `p/q` and signature
/// `(s1, 2q)` that is the union of two distinct `q`-cycles. Exists iff `s1`
/// is odd; found by exhaustive search over pairs of period-`q` cycles, with
/// the pair's union required to rotate with the right advance and signature.
pub fn m3_two_cycle_rotation_set(rho: &Angle, s1: u32) -> Result<RotationSet, RotationSetError> {
    let (p, q) = small_fraction(rho, kernel::MAX_TRIPLING_SEARCH)?;
    if s1.is_multiple_of(2) || s1 < 1 || s1 > 2 * q - 1 {
        return Err(RotationSetError::InvalidSignature { s1, period: q });
    }
    let m = kernel::pow(3, q) - 1;
    // Each cycle of a two-cycle rotation set rotates with the same number, so
    // only cycles of individual advance p can participate.
    let cycles: Vec<Vec<u128>> = kernel::exact_cycles(3, q, m)
        .into_iter()
        .filter(|c| kernel::cyclic_advance(c, 3, m) == Some(p as usize))
        .collect();
    let mut found: Option<Vec<u128>> = None;
    for i in 0..cycles.len() {
        for j in (i + 1)..cycles.len() {
            let Some(union) = kernel::merge_disjoint(&cycles[i], &cycles[j]) else {
                continue;
            };
            if kernel::cyclic_advance(&union, 3, m) != Some(2 * p as usize)
                || kernel::count_first_half(&union, m) != s1 as usize
            {
                continue;
            }
            if found.is_some() {
                return Err(RotationSetError::InternalNonUnique);
            }
            found = Some(union);
        }
    }
    let residues = found.ok_or(RotationSetError::InternalNonUnique)?;
    let points: Vec<Angle> = residues
        .iter()
        .map(|&n| Angle::from_residue(n, m))
        .collect();
    RotationSet::new(&points, 3)
}

/// Numerator/denominator of a rotation number, bounded for the kernels.
fn small_fraction(rho: &Angle, max_period: u32) -> Result<(u32, u32), RotationSetError> {
    let (p, q) = rho.to_u128_pair().ok_or(RotationSetError::PeriodTooLarge)?;
    if q > max_period as u128 {
        return Err(RotationSetError::PeriodTooLarge);
    }
    Ok((p as u32, q as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a(n: u64, d: u64) -> Angle {
        Angle::new(n, d)
    }

    fn set(pairs: &[(u64, u64)]) -> Vec<Angle> {
        pairs.iter().map(|&(n, d)| a(n, d)).collect()
    }

    #[test]
    fn recognition_examples() {
        assert_eq!(
            is_rotation_set(&set(&[(1, 7), (2, 7), (4, 7)]), 2),
            Ok(true)
        );
        assert_eq!(is_rotation_set(&set(&[(0, 1), (1, 2)]), 3), Ok(true));
        let orbit_1_9 = set(&[(1, 9), (2, 9), (4, 9), (8, 9), (7, 9), (5, 9)]);
        assert_eq!(is_rotation_set(&orbit_1_9, 2), Ok(false));
        assert_eq!(
            is_rotation_set(&set(&[(1, 7), (2, 7)]), 2),
            Err(RotationSetError::NotInvariant)
        );
    }

    #[test]
    fn rotation_numbers() {
        let x =
            RotationSet::new(&set(&[(5, 31), (9, 31), (10, 31), (18, 31), (20, 31)]), 2).unwrap();
        assert_eq!(x.rotation_number(), &a(2, 5));

        let x = RotationSet::new(&set(&[(0, 1), (1, 2)]), 3).unwrap();
        assert_eq!(x.rotation_number(), &Angle::zero());

        let x = RotationSet::new(&set(&[(1, 8), (2, 8), (3, 8), (6, 8)]), 3).unwrap();
        assert_eq!(x.rotation_number(), &a(1, 2));
        assert_eq!(x.signature(), Signature { s1: 3, s2: 4 });
    }

    #[test]
    fn signature_and_majors_for_fixed_pair() {
        let x = RotationSet::new(&set(&[(0, 1), (1, 2)]), 3).unwrap();
        assert_eq!(x.signature(), Signature { s1: 1, s2: 2 });
        let majors: Vec<_> = x.major_gaps().collect();
        assert_eq!(majors.len(), 2);
        assert!(majors.iter().all(|g| g.multiplicity == 1));
    }

    #[test]
    fn unique_doubling_rotation_sets() {
        let x = m2_rotation_set(&a(2, 5)).unwrap();
        assert_eq!(
            x.points(),
            set(&[(5, 31), (9, 31), (10, 31), (18, 31), (20, 31)])
        );
        let y = m2_rotation_set(&a(3, 5)).unwrap();
        assert_eq!(
            y.points(),
            set(&[(11, 31), (13, 31), (21, 31), (22, 31), (26, 31)])
        );
        // X_{-p/q} = -X_{p/q} pointwise.
        let mut negated: Vec<Angle> = x.points().iter().map(|p| p.neg_mod1()).collect();
        negated.sort();
        assert_eq!(negated, y.points());

        let zero = m2_rotation_set(&Angle::zero()).unwrap();
        assert_eq!(zero.points(), &[Angle::zero()]);
    }

    #[test]
    fn goldberg_realisation_examples() {
        let x = m3_two_cycle_rotation_set(&a(1, 2), 3).unwrap();
        assert_eq!(x.points(), set(&[(1, 8), (2, 8), (3, 8), (6, 8)]));

        let x = m3_two_cycle_rotation_set(&Angle::zero(), 1).unwrap();
        assert_eq!(x.points(), set(&[(0, 1), (1, 2)]));

        let x = m3_two_cycle_rotation_set(&a(1, 3), 5).unwrap();
        assert_eq!(
            x.points(),
            set(&[(1, 26), (2, 26), (3, 26), (6, 26), (9, 26), (18, 26)])
        );

        assert!(matches!(
            m3_two_cycle_rotation_set(&a(1, 3), 2),
            Err(RotationSetError::InvalidSignature { .. })
        ));
        assert!(matches!(
            m3_two_cycle_rotation_set(&a(1, 3), 7),
            Err(RotationSetError::InvalidSignature { .. })
        ));
    }

    #[test]
    fn cycle_decomposition() {
        let x = m3_two_cycle_rotation_set(&a(1, 2), 3).unwrap();
        assert_eq!(
            x.cycles(),
            vec![set(&[(1, 8), (3, 8)]), set(&[(2, 8), (6, 8)])]
        );

        let x = m3_two_cycle_rotation_set(&Angle::zero(), 1).unwrap();
        assert_eq!(x.cycles(), vec![vec![Angle::zero()], vec![a(1, 2)]]);

        let x = m3_two_cycle_rotation_set(&a(1, 3), 5).unwrap();
        assert_eq!(
            x.cycles(),
            vec![
                set(&[(1, 26), (3, 26), (9, 26)]),
                set(&[(2, 26), (6, 26), (18, 26)])
            ]
        );
    }
}
