//! Exact combinatorics of the cubic family with a fixed critical point.
//!
//! This crate computes, in exact rational arithmetic, the objects that govern
//! whether two postcritically finite maps of the family can be mated:
//!
//! - [`angle`]: the circle `R/Z` with the angle maps `m_d(t) = d t`, arcs,
//!   chords, orbits and linkage;
//! - [`rotation`]: finite rotation sets under `m_2` and `m_3`, gap structure,
//!   rotation numbers, signatures, and the unique realisations `X_{p/q}` and
//!   the two-cycle tripling rotation sets;
//! - [`limb`]: parameter limbs, their combinatorial data, conjugate and
//!   complementary limbs, landing-angle sets and root parameter rays;
//! - [`mating`]: ray-equivalence graphs of formal matings, loop detection and
//!   mateability verdicts;
//! - [`render`](mod@render): deterministic SVG chord diagrams of mating
//!   laminations.
//!
//! Everything is `no_std` (with `alloc`); IO and the command-line front end
//! live in the companion `s1-limbs-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod angle;
mod kernel;
pub mod limb;
pub mod mating;
pub mod render;
pub mod rotation;

pub use angle::{Angle, Arc, Chord, Orbit};
pub use limb::{
    balanced, critical_limb_root_rays, limb_condition, limb_of_data, preperiodic_limb_rays,
    LabeledChord, LimbData, LimbError, LimbId, LimbKind, PreperiodicLimbRays, Sign, ThetaSet,
};
pub use mating::{
    build_graph, loop_criterion_preperiodic, mate_verdict, preperiodic_loop_criterion, AngleClass,
    ChordSystem, ClassMarker, Component, MateDescriptor, MateabilityProof, MatingError,
    MatingReport, ObstructionReason, RayClassGraph, RayEdge, RayVertex, Side, Verdict,
};
pub use render::{render, ChordStyle, RenderError, RenderSpec};
pub use rotation::{
    is_rotation_set, m2_rotation_set, m3_two_cycle_rotation_set, Gap, RotationSet,
    RotationSetError, Signature,
};
