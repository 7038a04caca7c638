//! Exact arithmetic on the circle `T = R/Z`.
//!
//! Everything in this crate is measured in turns: an [`Angle`] is a rational
//! residue mod 1 kept in lowest terms, so all comparisons and dynamics are
//! exact. The angle maps `m_d(t) = d*t (mod 1)` for `d >= 2` drive every
//! computation downstream; here we also provide open counterclockwise arcs,
//! chords (unordered pairs of ray arguments landing together) and the chord
//! linkage test.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// A rational angle, stored as a canonical reduced residue mod 1:
/// `gcd(num, den) = 1` and `0 <= num < den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Angle {
    num: BigUint,
    den: BigUint,
}

impl Angle {
    /// Builds `num/den` reduced mod 1. Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "angle denominator must be positive");
        Self::reduce(BigUint::from(num), BigUint::from(den))
    }

    /// Builds `num/den` mod 1 from big integers, rejecting a zero denominator.
    pub fn from_biguints(num: BigUint, den: BigUint) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Self::reduce(num, den))
        }
    }

    /// Builds `num/den` reduced mod 1 from raw residues. Panics if `den == 0`.
    pub fn from_residue(num: u128, den: u128) -> Self {
        assert!(den != 0, "angle denominator must be positive");
        Self::reduce(BigUint::from(num), BigUint::from(den))
    }

    fn reduce(num: BigUint, den: BigUint) -> Self {
        let num = num % &den;
        let g = num.gcd(&den);
        Self {
            num: num / &g,
            den: den / g,
        }
    }

    pub fn zero() -> Self {
        Self {
            num: BigUint::zero(),
            den: BigUint::one(),
        }
    }

    pub fn half() -> Self {
        Angle::new(1, 2)
    }

    pub fn third() -> Self {
        Angle::new(1, 3)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numer(&self) -> &BigUint {
        &self.num
    }

    pub fn denom(&self) -> &BigUint {
        &self.den
    }

    /// Numerator and denominator as `u128`, when they fit.
    pub fn to_u128_pair(&self) -> Option<(u128, u128)> {
        Some((self.num.to_u128()?, self.den.to_u128()?))
    }

    /// Approximate value in `[0, 1)`, for rendering only.
    pub fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(0.0) / self.den.to_f64().unwrap_or(1.0)
    }

    /// The image `d * self (mod 1)` under the degree-`d` power map `m_d`.
    pub fn times(&self, d: u32) -> Self {
        Self::reduce(&self.num * d, self.den.clone())
    }

    /// The `d` preimages `(self + j)/d` under `m_d`, sorted increasing.
    pub fn preimages(&self, d: u32) -> Vec<Self> {
        let mut out: Vec<Self> = (0..d)
            .map(|j| Self::reduce(&self.num + j * &self.den, &self.den * d))
            .collect();
        out.sort();
        out
    }

    /// `-self (mod 1)`.
    pub fn neg_mod1(&self) -> Self {
        if self.num.is_zero() {
            Self::zero()
        } else {
            Self {
                num: &self.den - &self.num,
                den: self.den.clone(),
            }
        }
    }

    /// `self + other (mod 1)`.
    pub fn add(&self, other: &Self) -> Self {
        Self::reduce(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
    }

    /// `self - other (mod 1)`.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg_mod1())
    }

    /// Forward orbit under `m_d` until the first repetition. Rational angles
    /// are always eventually periodic, but the period can be as large as the
    /// multiplicative order of `d` modulo the odd part of the denominator;
    /// callers with untrusted input should bound the denominator first.
    pub fn orbit(&self, d: u32) -> Orbit {
        let mut seen: BTreeMap<Angle, usize> = BTreeMap::new();
        let mut points: Vec<Angle> = Vec::new();
        let mut current = self.clone();
        loop {
            if let Some(&pos) = seen.get(&current) {
                let period = points.len() - pos;
                return Orbit {
                    preperiod: pos,
                    period,
                    points,
                };
            }
            seen.insert(current.clone(), points.len());
            points.push(current.clone());
            current = current.times(d);
        }
    }

    /// True iff `self` is `m_d`-periodic (preperiod zero).
    pub fn is_periodic(&self, d: u32) -> bool {
        self.orbit(d).preperiod == 0
    }
}

impl Ord for Angle {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Angle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error when parsing an angle from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseAngleError {
    Empty,
    BadInteger(String),
    ZeroDenominator,
}

impl fmt::Display for ParseAngleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseAngleError::Empty => write!(f, "empty angle"),
            ParseAngleError::BadInteger(s) => write!(f, "cannot parse '{s}' as an integer"),
            ParseAngleError::ZeroDenominator => write!(f, "angle denominator must be positive"),
        }
    }
}
impl core::error::Error for ParseAngleError {}

impl FromStr for Angle {
    type Err = ParseAngleError;

    /// Accepts `"p/q"` or a bare integer (`"0"` for the zero angle); a leading
    /// `-` negates mod 1 and non-canonical inputs like `"3/6"` are reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseAngleError::Empty);
        }
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let parse_int = |t: &str| {
            BigUint::from_str(t.trim()).map_err(|_| ParseAngleError::BadInteger(String::from(t)))
        };
        let angle = match body.split_once('/') {
            Some((n, d)) => {
                let num = parse_int(n)?;
                let den = parse_int(d)?;
                Angle::from_biguints(num, den).ok_or(ParseAngleError::ZeroDenominator)?
            }
            None => {
                parse_int(body)?;
                Angle::zero()
            }
        };
        Ok(if neg { angle.neg_mod1() } else { angle })
    }
}

/// Orbit data under an angle map: preperiod, exact period, and the points
/// visited (preperiodic segment first, then one full cycle).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub preperiod: usize,
    pub period: usize,
    pub points: Vec<Angle>,
}

impl Orbit {
    /// The periodic part of the orbit, in dynamical order.
    pub fn cycle(&self) -> &[Angle] {
        &self.points[self.preperiod..]
    }
}

/// The open arc traversed counterclockwise from `start` to `end`.
///
/// `start == end` denotes the full circle minus the single point `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    start: Angle,
    end: Angle,
}

impl Arc {
    pub fn new(start: Angle, end: Angle) -> Self {
        Self { start, end }
    }

    pub fn start(&self) -> &Angle {
        &self.start
    }

    pub fn end(&self) -> &Angle {
        &self.end
    }

    /// Arc length in `(0, 1]` as a reduced fraction `(num, den)`.
    pub fn length(&self) -> (BigUint, BigUint) {
        if self.start == self.end {
            return (BigUint::one(), BigUint::one());
        }
        let diff = self.end.sub(&self.start);
        (diff.num, diff.den)
    }

    /// `floor(d * length)`: the gap multiplicity under `m_d`.
    pub fn multiplicity(&self, d: u32) -> u32 {
        let (num, den) = self.length();
        ((num * d) / den)
            .to_u32()
            .expect("gap multiplicity fits u32")
    }

    /// True iff `x` lies strictly inside the open arc.
    pub fn contains(&self, x: &Angle) -> bool {
        if *x == self.start || *x == self.end {
            return false;
        }
        if self.start == self.end {
            return true;
        }
        // Cut the circle at `start`: x is inside iff it comes before `end`.
        x.sub(&self.start) < self.end.sub(&self.start)
    }

    /// The image arc under negation mod 1: `-(a, b) = (-b, -a)`.
    pub fn neg_mod1(&self) -> Arc {
        Arc::new(self.end.neg_mod1(), self.start.neg_mod1())
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.start, self.end)
    }
}

/// An unordered pair of distinct angles: two external rays landing together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chord {
    a: Angle,
    b: Angle,
}

impl Chord {
    /// Panics if the endpoints coincide.
    pub fn new(x: Angle, y: Angle) -> Self {
        assert!(x != y, "chord endpoints must be distinct");
        if x < y {
            Self { a: x, b: y }
        } else {
            Self { a: y, b: x }
        }
    }

    /// Endpoints in increasing order.
    pub fn endpoints(&self) -> (&Angle, &Angle) {
        (&self.a, &self.b)
    }

    pub fn contains_endpoint(&self, x: &Angle) -> bool {
        self.a == *x || self.b == *x
    }

    /// Elementwise image under `m_d`. Panics if the image degenerates.
    pub fn map(&self, d: u32) -> Chord {
        Chord::new(self.a.times(d), self.b.times(d))
    }

    /// Elementwise negation mod 1.
    pub fn neg_mod1(&self) -> Chord {
        Chord::new(self.a.neg_mod1(), self.b.neg_mod1())
    }

    /// True iff the chords cross inside the disk: exactly one endpoint of
    /// `other` lies in the open arc between the endpoints of `self`. Chords
    /// sharing an endpoint land at a common point and do not cross.
    pub fn linked(&self, other: &Chord) -> bool {
        if self.contains_endpoint(&other.a) || self.contains_endpoint(&other.b) {
            return false;
        }
        let arc = Arc::new(self.a.clone(), self.b.clone());
        arc.contains(&other.a) != arc.contains(&other.b)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.a, self.b)
    }
}
