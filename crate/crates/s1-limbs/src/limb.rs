//! Combinatorics of the parameter limbs.
//!
//! A limb is addressed by the internal angle `t0` of its root on the boundary
//! of the main hyperbolic component together with a side marker `+`/`-`. For
//! `m_2`-periodic `t0` of period `q` the maps in the limb carry a period-`q`
//! cycle of biaccessible points on the boundary of the fixed basin; the set
//! `Theta` of the `2q` external angles landing there determines conjugate and
//! complementary limbs and hence all mating obstructions handled downstream.
//!
//! `Theta` is computed two ways and cross-checked: through the unique
//! two-cycle rotation set with the signature dictated by the combinatorial
//! position (when the limb has a rotation number), and through a search for
//! the pair of adjacent parameter rays `i/(3(3^q-1))`, `(i+1)/(3(3^q-1))`
//! whose induced landing chords are dynamically consistent.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::angle::{Angle, Arc, Chord, ParseAngleError};
use crate::kernel;
use crate::rotation::{
    m2_rotation_set, m3_two_cycle_rotation_set, RotationSet, RotationSetError, Signature,
};

/// Side marker of a limb: `+` for the `Re a > 0` half, `-` for the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_plus(self) -> bool {
        matches!(self, Sign::Plus)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A parameter limb, written `t0+` or `t0-` (for example `18/31+`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LimbId {
    t0: Angle,
    sign: Sign,
}

/// Combinatorial data `(rho, k, sign)` of a limb whose internal angle has a
/// rotation number: `k` is the position of `t0` in the cyclic order of the
/// unique doubling rotation set `X_rho`, counted so that `0` lies between the
/// last and the first point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimbData {
    pub rho: Angle,
    pub position: u32,
    pub sign: Sign,
}

impl LimbData {
    pub fn period(&self) -> u32 {
        // rho is reduced, so its denominator is the period.
        let (_, q) = self
            .rho
            .to_u128_pair()
            .expect("rotation numbers stay small");
        q as u32
    }
}

impl fmt::Display for LimbData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.rho, self.position, self.sign)
    }
}

/// Dynamical type of a limb's internal angle under doubling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimbKind {
    /// Periodic with a rotation number; carries the combinatorial data.
    Rotation(LimbData),
    /// Periodic, but the orbit is not a rotation set.
    PeriodicNoRotation { period: usize },
    /// Strictly preperiodic: the limb is a single boundary map.
    Preperiodic { preperiod: usize, period: usize },
}

/// A landing chord labelled by the internal angle of its landing point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledChord {
    pub chord: Chord,
    pub label: Angle,
}

impl fmt::Display for LabeledChord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.chord, self.label)
    }
}

/// The external angles landing on the boundary cycle of a limb, with the full
/// chord structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaSet {
    limb: LimbId,
    angles: Vec<Angle>,
    rotation: Option<Angle>,
    signature: Signature,
    critical_gap: Arc,
    pairs: Vec<LabeledChord>,
    root_rays: (Angle, Angle),
}

impl ThetaSet {
    /// All landing angles, sorted increasing.
    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    /// Rotation number of the limb, when it has one.
    pub fn rotation_number(&self) -> Option<&Angle> {
        self.rotation.as_ref()
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    /// The major gap bounded by the two rays landing at the root of the
    /// critical limb, traversed counterclockwise.
    pub fn critical_gap(&self) -> &Arc {
        &self.critical_gap
    }

    /// The landing chords `P_j`, starting at the critical gap chord labelled
    /// `t0`; `P_{j+1}` is the elementwise image of `P_j` under tripling.
    pub fn pairs(&self) -> &[LabeledChord] {
        &self.pairs
    }

    /// The parameter rays `(theta, theta')` landing at the limb's root.
    pub fn root_rays(&self) -> (&Angle, &Angle) {
        (&self.root_rays.0, &self.root_rays.1)
    }

    pub fn limb(&self) -> &LimbId {
        &self.limb
    }

    /// The sorted set `{-t : t in Theta}`.
    pub fn negated_angles(&self) -> Vec<Angle> {
        let mut out: Vec<Angle> = self.angles.iter().map(|a| a.neg_mod1()).collect();
        out.sort();
        out
    }
}

/// Marked ray classes of the unique map in a limb with strictly preperiodic
/// internal angle, addressed by its parameter angle `theta`: the cocritical
/// point is the landing point of `theta` alone, the free critical point of
/// `theta - 1/3` and `theta + 1/3`, and the free critical value of `3 theta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreperiodicLimbRays {
    param_angle: Angle,
    critical: Chord,
    critical_value: Angle,
}

impl PreperiodicLimbRays {
    pub fn param_angle(&self) -> &Angle {
        &self.param_angle
    }

    /// The single ray landing at the cocritical point.
    pub fn cocritical(&self) -> &Angle {
        &self.param_angle
    }

    /// The two rays landing at the free critical point.
    pub fn critical(&self) -> &Chord {
        &self.critical
    }

    /// The ray landing at the free critical value.
    pub fn critical_value(&self) -> &Angle {
        &self.critical_value
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimbError {
    /// The internal angle is strictly preperiodic, so no boundary cycle (and
    /// no `Theta`) is defined.
    PreperiodicArgument,
    /// The root-ray search did not isolate a single candidate; carries every
    /// passing ray pair.
    AmbiguousSearch {
        candidates: Vec<(Angle, Angle)>,
    },
    PeriodTooLarge,
    PositionOutOfRange {
        position: u32,
        period: u32,
    },
    /// The angle's doubling orbit is not a rotation set.
    NotInRotationSet,
    EvenPeriod,
    /// The parameter angle is co-periodic: its candidate critical rays are
    /// periodic, so it lands on a parabolic map.
    PeriodicAngle,
    Internal(&'static str),
}

impl fmt::Display for LimbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimbError::PreperiodicArgument => write!(
                f,
                "internal angle is strictly preperiodic; address the limb by its parameter angle"
            ),
            LimbError::AmbiguousSearch { candidates } => write!(
                f,
                "root-ray search produced {} candidates instead of one",
                candidates.len()
            ),
            LimbError::PeriodTooLarge => write!(f, "period exceeds the supported search range"),
            LimbError::PositionOutOfRange { position, period } => {
                write!(f, "position {position} outside 1..={period}")
            }
            LimbError::NotInRotationSet => {
                write!(f, "angle does not belong to a doubling rotation set")
            }
            LimbError::EvenPeriod => write!(f, "balance is defined only for odd periods"),
            LimbError::PeriodicAngle => write!(
                f,
                "co-periodic parameter angle lands on a parabolic map; out of scope"
            ),
            LimbError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}
impl core::error::Error for LimbError {}

fn internal(err: RotationSetError) -> LimbError {
    match err {
        RotationSetError::PeriodTooLarge => LimbError::PeriodTooLarge,
        _ => LimbError::Internal("rotation-set construction failed unexpectedly"),
    }
}

impl LimbId {
    pub fn new(t0: Angle, sign: Sign) -> Self {
        Self { t0, sign }
    }

    pub fn internal_angle(&self) -> &Angle {
        &self.t0
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Classifies the internal angle and, in the rotation case, computes the
    /// combinatorial data `(rho, k, sign)`.
    pub fn classify(&self) -> LimbKind {
        let orbit = self.t0.orbit(2);
        if orbit.preperiod > 0 {
            return LimbKind::Preperiodic {
                preperiod: orbit.preperiod,
                period: orbit.period,
            };
        }
        match RotationSet::new(&orbit.points, 2) {
            Ok(set) => {
                let position = set
                    .points()
                    .iter()
                    .position(|p| p == &self.t0)
                    .expect("t0 belongs to its own orbit") as u32
                    + 1;
                LimbKind::Rotation(LimbData {
                    rho: set.rotation_number().clone(),
                    position,
                    sign: self.sign,
                })
            }
            Err(RotationSetError::NotRotationSet) => LimbKind::PeriodicNoRotation {
                period: orbit.period,
            },
            Err(_) => unreachable!("a full periodic orbit is finite, non-empty and invariant"),
        }
    }

    /// The limb reached by complex conjugation of parameters: `t0 -> -t0`
    /// with the same side marker. The two limbs at internal angle `0` are
    /// mutually conjugate.
    pub fn conjugate(&self) -> LimbId {
        if self.t0.is_zero() {
            LimbId::new(self.t0.clone(), self.sign.flipped())
        } else {
            LimbId::new(self.t0.neg_mod1(), self.sign)
        }
    }

    /// The limb containing `F_{-a}` for maps `F_a` in this limb: same
    /// internal angle, opposite side.
    pub fn swap_sign(&self) -> LimbId {
        LimbId::new(self.t0.clone(), self.sign.flipped())
    }

    /// The complementary limb: the non-conjugate limb whose landing angles
    /// are the negated ones. It exists iff the limb has a rotation number; in
    /// data form `(p/q, k, s) -> (-p/q, k, -s)`. The limbs at internal angle
    /// `0` are self-complementary.
    pub fn complementary(&self) -> Option<LimbId> {
        if self.t0.is_zero() {
            return Some(self.clone());
        }
        match self.classify() {
            LimbKind::Rotation(data) => {
                let flipped = LimbData {
                    rho: data.rho.neg_mod1(),
                    position: data.position,
                    sign: data.sign.flipped(),
                };
                Some(limb_of_data(&flipped).expect("mirrored data stays in range"))
            }
            _ => None,
        }
    }

    /// Period of `t0` under doubling, if periodic.
    pub fn period(&self) -> Option<usize> {
        let orbit = self.t0.orbit(2);
        (orbit.preperiod == 0).then_some(orbit.period)
    }

    /// Computes the landing-angle set of the limb's boundary cycle.
    pub fn theta(&self) -> Result<ThetaSet, LimbError> {
        if self.t0.is_zero() {
            return Ok(self.theta_zero());
        }
        let orbit = self.t0.orbit(2);
        if orbit.preperiod > 0 {
            return Err(LimbError::PreperiodicArgument);
        }
        let q = orbit.period as u32;
        if q > kernel::MAX_TRIPLING_SEARCH {
            return Err(LimbError::PeriodTooLarge);
        }
        let (t0_num, t0_den) = self.t0.to_u128_pair().ok_or(LimbError::PeriodTooLarge)?;
        let hits = kernel::root_ray_search(q, t0_num, t0_den, self.sign.is_plus());
        if hits.len() != 1 {
            let candidates = hits
                .iter()
                .map(|h| {
                    (
                        Angle::from_residue(h.i, h.big_den),
                        Angle::from_residue((h.i + 1) % h.big_den, h.big_den),
                    )
                })
                .collect();
            return Err(LimbError::AmbiguousSearch { candidates });
        }
        let hit = &hits[0];
        let den = hit.big_den;
        let root_rays = (
            Angle::from_residue(hit.i, den),
            Angle::from_residue((hit.i + 1) % den, den),
        );
        let mut pairs = Vec::with_capacity(hit.chords.len());
        let mut label = self.t0.clone();
        for &(x, y) in &hit.chords {
            pairs.push(LabeledChord {
                chord: Chord::new(Angle::from_residue(x, den), Angle::from_residue(y, den)),
                label: label.clone(),
            });
            label = label.times(2);
        }
        let critical_gap = Arc::new(
            Angle::from_residue(hit.chords[0].0, den),
            Angle::from_residue(hit.chords[0].1, den),
        );
        let mut angles: Vec<Angle> = hit
            .chords
            .iter()
            .flat_map(|&(x, y)| [Angle::from_residue(x, den), Angle::from_residue(y, den)])
            .collect();
        angles.sort();

        // Rotation route, when available, must reproduce the same set.
        let (rotation, signature) = match self.classify() {
            LimbKind::Rotation(data) => {
                let k = data.position;
                let s1 = if self.sign.is_plus() {
                    2 * k - 1
                } else {
                    2 * q - (2 * k - 1)
                };
                let set = m3_two_cycle_rotation_set(&data.rho, s1).map_err(internal)?;
                if set.points() != angles.as_slice() {
                    return Err(LimbError::Internal(
                        "rotation route and root-ray search disagree",
                    ));
                }
                (Some(data.rho), set.signature())
            }
            _ => {
                let half = Angle::half();
                let s1 = angles.iter().filter(|p| **p < half).count() as u32;
                (
                    None,
                    Signature {
                        s1,
                        s2: angles.len() as u32,
                    },
                )
            }
        };

        Ok(ThetaSet {
            limb: self.clone(),
            angles,
            rotation,
            signature,
            critical_gap,
            pairs,
            root_rays,
        })
    }

    /// The boundary cycle of the limbs at internal angle zero degenerates to
    /// the fixed point where the rays of angle 0 and 1/2 both land.
    fn theta_zero(&self) -> ThetaSet {
        let zero = Angle::zero();
        let half = Angle::half();
        let (critical_gap, root_rays) = if self.sign.is_plus() {
            (
                Arc::new(zero.clone(), half.clone()),
                (Angle::new(2, 3), Angle::new(5, 6)),
            )
        } else {
            (
                Arc::new(half.clone(), zero.clone()),
                (Angle::new(1, 6), Angle::new(2, 6)),
            )
        };
        ThetaSet {
            limb: self.clone(),
            angles: alloc::vec![zero.clone(), half.clone()],
            rotation: Some(Angle::zero()),
            signature: Signature { s1: 1, s2: 2 },
            critical_gap,
            pairs: alloc::vec![LabeledChord {
                chord: Chord::new(zero.clone(), half),
                label: zero,
            }],
            root_rays,
        }
    }

    /// The parameter rays landing at the root of the limb.
    pub fn root_parameter_rays(&self) -> Result<(Angle, Angle), LimbError> {
        let theta = self.theta()?;
        Ok(theta.root_rays.clone())
    }

    /// The labelled landing chords of the boundary cycle.
    pub fn alpha_chords(&self) -> Result<Vec<LabeledChord>, LimbError> {
        Ok(self.theta()?.pairs)
    }
}

impl fmt::Display for LimbId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.t0, self.sign)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseLimbError {
    MissingSign,
    Angle(ParseAngleError),
}

impl fmt::Display for ParseLimbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseLimbError::MissingSign => {
                write!(f, "limb must end in '+' or '-' (for example 18/31+)")
            }
            ParseLimbError::Angle(e) => write!(f, "{e}"),
        }
    }
}
impl core::error::Error for ParseLimbError {}

impl FromStr for LimbId {
    type Err = ParseLimbError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (body, sign) = if let Some(rest) = s.strip_suffix('+') {
            (rest, Sign::Plus)
        } else if let Some(rest) = s.strip_suffix('-') {
            (rest, Sign::Minus)
        } else {
            return Err(ParseLimbError::MissingSign);
        };
        let t0 = body.parse::<Angle>().map_err(ParseLimbError::Angle)?;
        Ok(LimbId::new(t0, sign))
    }
}

/// The unique limb realising combinatorial data `(rho, k, sign)`: the `k`-th
/// point of the doubling rotation set `X_rho` on the given side.
pub fn limb_of_data(data: &LimbData) -> Result<LimbId, LimbError> {
    let set = m2_rotation_set(&data.rho).map_err(internal)?;
    let q = set.len() as u32;
    if data.position < 1 || data.position > q {
        return Err(LimbError::PositionOutOfRange {
            position: data.position,
            period: q,
        });
    }
    let t0 = set.points()[(data.position - 1) as usize].clone();
    Ok(LimbId::new(t0, data.sign))
}

/// The rays landing at the root of the critical limb, given the parameter
/// rays `(theta, theta')` of a limb root: `(theta + 1/3, theta' - 1/3)`.
pub fn critical_limb_root_rays(theta: &Angle, theta_prime: &Angle) -> (Angle, Angle) {
    let third = Angle::third();
    (theta.add(&third), theta_prime.sub(&third))
}

/// The limb condition: the landing-angle sets satisfy
/// `Theta(l1) = -Theta(l2)`, which holds exactly when `l2` is the conjugate
/// or the complementary limb of `l1`. Matings across such a pair are
/// obstructed.
pub fn limb_condition(l1: &LimbId, l2: &LimbId) -> Result<bool, LimbError> {
    let t1 = l1.theta()?;
    let t2 = l2.theta()?;
    Ok(t1.angles() == t2.negated_angles().as_slice())
}

/// Whether a periodic angle occupies the middle position `(q+1)/2` of its
/// doubling rotation set (defined for odd period `q`). Exactly the balanced
/// angles have their mirror limb `t0- = (-t0)-` as complementary limb.
pub fn balanced(theta: &Angle) -> Result<bool, LimbError> {
    let orbit = theta.orbit(2);
    if orbit.preperiod > 0 {
        return Err(LimbError::NotInRotationSet);
    }
    let set = RotationSet::new(&orbit.points, 2).map_err(|e| match e {
        RotationSetError::NotRotationSet => LimbError::NotInRotationSet,
        other => internal(other),
    })?;
    let q = set.len();
    if q % 2 == 0 {
        return Err(LimbError::EvenPeriod);
    }
    let position = set
        .points()
        .iter()
        .position(|p| p == theta)
        .expect("theta belongs to its own orbit")
        + 1;
    Ok(position == q.div_ceil(2))
}

/// The marked ray classes of the map addressed by parameter angle `theta`.
///
/// Rejects co-periodic angles (either candidate critical ray periodic):
/// those parameter rays land on parabolic maps. The free critical point of a
/// valid map is strictly preperiodic, though `theta` itself may be periodic.
pub fn preperiodic_limb_rays(theta: &Angle) -> Result<PreperiodicLimbRays, LimbError> {
    let third = Angle::third();
    let up = theta.add(&third);
    let down = theta.sub(&third);
    if up.is_periodic(3) || down.is_periodic(3) {
        return Err(LimbError::PeriodicAngle);
    }
    Ok(PreperiodicLimbRays {
        param_angle: theta.clone(),
        critical: Chord::new(down, up),
        critical_value: theta.times(3),
    })
}
