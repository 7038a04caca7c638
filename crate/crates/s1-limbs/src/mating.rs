//! Ray-equivalence graphs of formal matings and mateability verdicts.
//!
//! A formal mating glues the dynamical planes of two maps along the circle at
//! infinity with the identification `t <-> -t`. Finitely many landing classes
//! on each side (a [`ChordSystem`]) then induce a bipartite multigraph: one
//! vertex per landing class, one edge per angle, the edge of angle `t`
//! joining the side-A class of `t` to the side-B class of `-t`. A connected
//! component is a ray-equivalence class; a component with as many edges as
//! vertices contains a closed loop, which certifies a Levy-type obstruction.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::angle::Angle;
use crate::limb::{preperiodic_limb_rays, LimbError, LimbId, PreperiodicLimbRays, ThetaSet};

/// Which polynomial of the mating a chord system describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => write!(f, "A"),
            Side::B => write!(f, "B"),
        }
    }
}

/// Dynamical meaning of a landing class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassMarker {
    CriticalPoint,
    CriticalValue,
    CocriticalPoint,
    AlphaCycle,
}

impl fmt::Display for ClassMarker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassMarker::CriticalPoint => write!(f, "critical point"),
            ClassMarker::CriticalValue => write!(f, "critical value"),
            ClassMarker::CocriticalPoint => write!(f, "cocritical point"),
            ClassMarker::AlphaCycle => write!(f, "alpha cycle"),
        }
    }
}

/// One landing class: a finite set of angles whose rays land together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleClass {
    angles: Vec<Angle>,
    marker: Option<ClassMarker>,
}

impl AngleClass {
    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    pub fn marker(&self) -> Option<ClassMarker> {
        self.marker
    }
}

/// A finite set of landing classes for one polynomial, laminationally
/// consistent: classes are pairwise disjoint and never cross.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordSystem {
    side: Side,
    classes: Vec<AngleClass>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatingError {
    /// The classes overlap or cross; rays cannot do either.
    InconsistentLamination(&'static str),
    /// `build_graph` expects a side-A and a side-B system, in that order.
    SideMismatch,
    /// An operation needed critical-value markers that are not present.
    MissingMarkers,
    /// A forward image angle has no edge in the graph.
    MissingImage,
    /// The forward images of one component land in several components.
    ForwardImageSplit,
    NoSuchComponent,
    Limb(LimbError),
    Internal(&'static str),
}

impl fmt::Display for MatingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatingError::InconsistentLamination(msg) => {
                write!(f, "inconsistent lamination: {msg}")
            }
            MatingError::SideMismatch => {
                write!(f, "build_graph expects a side-A system and a side-B system")
            }
            MatingError::MissingMarkers => {
                write!(f, "both systems need critical-value markers for this query")
            }
            MatingError::MissingImage => {
                write!(f, "a forward image angle has no edge in the graph")
            }
            MatingError::ForwardImageSplit => {
                write!(f, "forward images of the component are not connected")
            }
            MatingError::NoSuchComponent => write!(f, "no component with that index"),
            MatingError::Limb(e) => write!(f, "{e}"),
            MatingError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}
impl core::error::Error for MatingError {}

impl From<LimbError> for MatingError {
    fn from(e: LimbError) -> Self {
        MatingError::Limb(e)
    }
}

/// True iff every point of `guest` lies in a single gap of the sorted `host`.
fn within_one_gap(host: &[Angle], guest: &[Angle]) -> bool {
    if host.len() < 2 {
        return true;
    }
    let gap_of = |x: &Angle| match host.binary_search(x) {
        // Disjointness is checked separately; a hit means overlap.
        Ok(_) => None,
        Err(pos) => Some(pos % host.len()),
    };
    let mut gaps = guest.iter().map(gap_of);
    let first = match gaps.next() {
        Some(g) => g,
        None => return true,
    };
    first.is_some() && gaps.all(|g| g == first)
}

impl ChordSystem {
    /// Validates a family of landing classes.
    pub fn new(
        side: Side,
        classes: Vec<(Vec<Angle>, Option<ClassMarker>)>,
    ) -> Result<Self, MatingError> {
        let mut built: Vec<AngleClass> = Vec::with_capacity(classes.len());
        for (angles, marker) in classes {
            if angles.is_empty() {
                return Err(MatingError::InconsistentLamination("empty class"));
            }
            let mut angles = angles;
            angles.sort();
            angles.dedup();
            built.push(AngleClass { angles, marker });
        }
        let mut all: Vec<(&Angle, usize)> = built
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.angles.iter().map(move |a| (a, i)))
            .collect();
        all.sort();
        if all.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(MatingError::InconsistentLamination(
                "classes are not pairwise disjoint",
            ));
        }
        for i in 0..built.len() {
            for j in 0..built.len() {
                if i != j && !within_one_gap(&built[i].angles, &built[j].angles) {
                    return Err(MatingError::InconsistentLamination(
                        "classes cross each other",
                    ));
                }
            }
        }
        Ok(Self {
            side,
            classes: built,
        })
    }

    /// The landing classes of a limb's boundary cycle, all marked as such.
    pub fn from_alpha(theta: &ThetaSet, side: Side) -> Result<Self, MatingError> {
        let classes = theta
            .pairs()
            .iter()
            .map(|lc| {
                let (x, y) = lc.chord.endpoints();
                (
                    alloc::vec![x.clone(), y.clone()],
                    Some(ClassMarker::AlphaCycle),
                )
            })
            .collect();
        Self::new(side, classes)
    }

    /// The marked classes of a map addressed by a preperiodic-limb parameter
    /// angle: cocritical point, free critical point, free critical value.
    pub fn from_preperiodic(rays: &PreperiodicLimbRays, side: Side) -> Result<Self, MatingError> {
        let (x, y) = rays.critical().endpoints();
        Self::new(
            side,
            alloc::vec![
                (
                    alloc::vec![rays.cocritical().clone()],
                    Some(ClassMarker::CocriticalPoint)
                ),
                (
                    alloc::vec![x.clone(), y.clone()],
                    Some(ClassMarker::CriticalPoint)
                ),
                (
                    alloc::vec![rays.critical_value().clone()],
                    Some(ClassMarker::CriticalValue)
                ),
            ],
        )
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn classes(&self) -> &[AngleClass] {
        &self.classes
    }
}

/// A vertex of the ray-class graph: one landing class, possibly an
/// auto-created singleton for an angle the other side forced into play.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayVertex {
    pub side: Side,
    pub angles: Vec<Angle>,
    pub marker: Option<ClassMarker>,
    pub auto: bool,
}

/// An edge is one identified ray arc: angle `t` on side A glued to `-t` on
/// side B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayEdge {
    pub angle: Angle,
    pub a: usize,
    pub b: usize,
}

/// A connected component of the graph: one ray-equivalence class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Component {
    /// A connected multigraph is a tree iff it has one edge less than
    /// vertices; anything more closes a loop.
    pub fn has_loop(&self) -> bool {
        self.edges.len() >= self.vertices.len()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx.max(ry)] = rx.min(ry);
        }
    }
}

/// The ray-equivalence multigraph of a formal mating restricted to two finite
/// chord systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayClassGraph {
    vertices: Vec<RayVertex>,
    edges: Vec<RayEdge>,
    components: Vec<Component>,
}

/// Builds the graph: one edge per angle in `angles(A) union -angles(B)`,
/// joining the A-class of `t` to the B-class of `-t`, with missing classes
/// created as singletons.
pub fn build_graph(a: &ChordSystem, b: &ChordSystem) -> Result<RayClassGraph, MatingError> {
    if a.side() != Side::A || b.side() != Side::B {
        return Err(MatingError::SideMismatch);
    }
    let mut vertices: Vec<RayVertex> = Vec::new();
    let mut a_lookup: BTreeMap<Angle, usize> = BTreeMap::new();
    let mut b_lookup: BTreeMap<Angle, usize> = BTreeMap::new();
    for class in a.classes() {
        let id = vertices.len();
        vertices.push(RayVertex {
            side: Side::A,
            angles: class.angles().to_vec(),
            marker: class.marker(),
            auto: false,
        });
        for angle in class.angles() {
            a_lookup.insert(angle.clone(), id);
        }
    }
    for class in b.classes() {
        let id = vertices.len();
        vertices.push(RayVertex {
            side: Side::B,
            angles: class.angles().to_vec(),
            marker: class.marker(),
            auto: false,
        });
        for angle in class.angles() {
            b_lookup.insert(angle.clone(), id);
        }
    }

    let mut edge_angles: BTreeSet<Angle> = BTreeSet::new();
    for class in a.classes() {
        edge_angles.extend(class.angles().iter().cloned());
    }
    for class in b.classes() {
        edge_angles.extend(class.angles().iter().map(|t| t.neg_mod1()));
    }

    let mut edges: Vec<RayEdge> = Vec::with_capacity(edge_angles.len());
    for t in edge_angles {
        let neg = t.neg_mod1();
        let a_id = *a_lookup.entry(t.clone()).or_insert_with(|| {
            vertices.push(RayVertex {
                side: Side::A,
                angles: alloc::vec![t.clone()],
                marker: None,
                auto: true,
            });
            vertices.len() - 1
        });
        let b_id = *b_lookup.entry(neg.clone()).or_insert_with(|| {
            vertices.push(RayVertex {
                side: Side::B,
                angles: alloc::vec![neg.clone()],
                marker: None,
                auto: true,
            });
            vertices.len() - 1
        });
        edges.push(RayEdge {
            angle: t,
            a: a_id,
            b: b_id,
        });
    }

    let mut uf = UnionFind::new(vertices.len());
    for edge in &edges {
        uf.union(edge.a, edge.b);
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut components: Vec<Component> = Vec::new();
    let mut comp_of_vertex: Vec<usize> = Vec::with_capacity(vertices.len());
    for v in 0..vertices.len() {
        let root = uf.find(v);
        let comp = match roots.iter().position(|r| *r == root) {
            Some(i) => i,
            None => {
                roots.push(root);
                components.push(Component {
                    vertices: Vec::new(),
                    edges: Vec::new(),
                });
                roots.len() - 1
            }
        };
        comp_of_vertex.push(comp);
        components[comp].vertices.push(v);
    }
    for (i, edge) in edges.iter().enumerate() {
        components[comp_of_vertex[edge.a]].edges.push(i);
    }
    Ok(RayClassGraph {
        vertices,
        edges,
        components,
    })
}

impl RayClassGraph {
    pub fn vertices(&self) -> &[RayVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[RayEdge] {
        &self.edges
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Indices of components containing a closed loop.
    pub fn loop_components(&self) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&i| self.components[i].has_loop())
            .collect()
    }

    pub fn component_of_vertex(&self, vertex: usize) -> Option<usize> {
        (0..self.components.len()).find(|&i| self.components[i].vertices.contains(&vertex))
    }

    /// A closed walk witnessing a loop in the component, as edge indices, or
    /// `None` for tree components. Two parallel edges witness a loop of
    /// length two.
    pub fn witness_cycle(&self, component: usize) -> Option<Vec<usize>> {
        let comp = self.components.get(component)?;
        if !comp.has_loop() {
            return None;
        }
        // BFS spanning tree, then close the first non-tree edge.
        let root = *comp.vertices.first()?;
        let mut parent_edge: BTreeMap<usize, usize> = BTreeMap::new();
        let mut visited: BTreeSet<usize> = BTreeSet::new();
        visited.insert(root);
        let mut queue: Vec<usize> = alloc::vec![root];
        let mut tree: BTreeSet<usize> = BTreeSet::new();
        while let Some(v) = queue.pop() {
            for &e in &comp.edges {
                let edge = &self.edges[e];
                let other = if edge.a == v {
                    edge.b
                } else if edge.b == v {
                    edge.a
                } else {
                    continue;
                };
                if visited.insert(other) {
                    parent_edge.insert(other, e);
                    tree.insert(e);
                    queue.push(other);
                }
            }
        }
        let closing = *comp.edges.iter().find(|e| !tree.contains(e))?;
        let path_to_root = |mut v: usize| -> Vec<usize> {
            let mut path = Vec::new();
            while let Some(&e) = parent_edge.get(&v) {
                path.push(e);
                let edge = &self.edges[e];
                v = if edge.a == v { edge.b } else { edge.a };
            }
            path
        };
        let mut up = path_to_root(self.edges[closing].a);
        let mut down = path_to_root(self.edges[closing].b);
        // Drop the shared tail above the meeting point.
        while let (Some(x), Some(y)) = (up.last(), down.last()) {
            if x == y {
                up.pop();
                down.pop();
            } else {
                break;
            }
        }
        down.reverse();
        up.push(closing);
        up.extend(down);
        Some(up)
    }

    /// When both sides carry critical-value markers, the component index
    /// containing both marked classes, if it is a single component.
    pub fn shared_critical_value_class(&self) -> Result<Option<usize>, MatingError> {
        let find = |side: Side| {
            self.vertices
                .iter()
                .position(|v| v.side == side && v.marker == Some(ClassMarker::CriticalValue))
        };
        let (va, vb) = match (find(Side::A), find(Side::B)) {
            (Some(va), Some(vb)) => (va, vb),
            _ => return Err(MatingError::MissingMarkers),
        };
        let ca = self.component_of_vertex(va).expect("vertex in a component");
        let cb = self.component_of_vertex(vb).expect("vertex in a component");
        Ok((ca == cb).then_some(ca))
    }

    /// The component containing the tripling images of all of the
    /// component's edge angles. Iterating detects the period of a periodic
    /// ray class.
    pub fn map_component_forward(&self, component: usize) -> Result<usize, MatingError> {
        let comp = self
            .components
            .get(component)
            .ok_or(MatingError::NoSuchComponent)?;
        let mut target: Option<usize> = None;
        for &e in &comp.edges {
            let image = self.edges[e].angle.times(3);
            let idx = self
                .edges
                .binary_search_by(|probe| probe.angle.cmp(&image))
                .map_err(|_| MatingError::MissingImage)?;
            let comp_idx = self
                .component_of_edge(idx)
                .ok_or(MatingError::Internal("edge outside every component"))?;
            match target {
                None => target = Some(comp_idx),
                Some(t) if t != comp_idx => return Err(MatingError::ForwardImageSplit),
                _ => {}
            }
        }
        target.ok_or(MatingError::Internal("component without edges"))
    }

    fn component_of_edge(&self, edge: usize) -> Option<usize> {
        (0..self.components.len()).find(|&i| self.components[i].edges.contains(&edge))
    }
}

/// The loop criterion for two maps addressed by preperiodic-limb parameter
/// angles: the ray class of the two free critical points contains a closed
/// loop iff at least two of the critical rays of side A match negated
/// critical rays of side B.
pub fn preperiodic_loop_criterion(theta_a: &Angle, theta_b: &Angle) -> bool {
    let third = Angle::third();
    let crit_a = [theta_a.sub(&third), theta_a.add(&third)];
    let neg_b = [
        theta_b.add(&third).neg_mod1(),
        theta_b.sub(&third).neg_mod1(),
    ];
    let shared = crit_a.iter().filter(|x| neg_b.contains(x)).count();
    shared >= 2
}

/// Same criterion evaluated on validated ray data.
pub fn loop_criterion_preperiodic(a: &PreperiodicLimbRays, b: &PreperiodicLimbRays) -> bool {
    preperiodic_loop_criterion(a.param_angle(), b.param_angle())
}

/// How a polynomial of the mating is addressed: a limb with periodic
/// internal angle, or the parameter angle of a preperiodic-limb map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MateDescriptor {
    Limb(LimbId),
    Preperiodic(Angle),
}

impl fmt::Display for MateDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MateDescriptor::Limb(l) => write!(f, "{l}"),
            MateDescriptor::Preperiodic(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObstructionReason {
    ConjugateLimbs,
    ComplementaryLimbs,
    LoopFound { component: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MateabilityProof {
    PreperiodicTheorem,
}

/// Outcome of the mating decision procedure.
///
/// Loop-free verdicts built from boundary-cycle data alone stay conjectural
/// ([`Verdict::NoLoopFound`]): the supplied chord systems are finite
/// truncations of the full laminations. Certified answers come from the limb
/// condition and from the preperiodic landing theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Obstructed { reason: ObstructionReason },
    Mateable { proof: MateabilityProof },
    EssentiallyMateable { shared_value_component: usize },
    NoLoopFound,
}

impl Verdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, Verdict::Obstructed { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Obstructed {
                reason: ObstructionReason::ConjugateLimbs,
            } => write!(f, "OBSTRUCTED (conjugate limbs)"),
            Verdict::Obstructed {
                reason: ObstructionReason::ComplementaryLimbs,
            } => write!(f, "OBSTRUCTED (complementary limbs)"),
            Verdict::Obstructed {
                reason: ObstructionReason::LoopFound { component },
            } => write!(f, "OBSTRUCTED (closed ray-class loop in component {component})"),
            Verdict::Mateable {
                proof: MateabilityProof::PreperiodicTheorem,
            } => write!(f, "MATEABLE (preperiodic landing theorem)"),
            Verdict::EssentiallyMateable {
                shared_value_component,
            } => write!(
                f,
                "ESSENTIALLY MATEABLE (critical values share ray class in component {shared_value_component}; removable Levy cycle)"
            ),
            Verdict::NoLoopFound => write!(f, "NO LOOP FOUND (conjecturally mateable)"),
        }
    }
}

/// A verdict together with the graph that witnessed it.
#[derive(Debug, Clone)]
pub struct MatingReport {
    pub a: MateDescriptor,
    pub b: MateDescriptor,
    pub verdict: Verdict,
    pub graph: RayClassGraph,
}

/// Decides mateability of a pair of descriptors.
///
/// Periodic-limb pairs are obstructed when the limb condition holds (the
/// relation is read off the combinatorial data); otherwise the boundary-cycle
/// graph is searched for loops and a loop-free result stays conjectural.
/// Preperiodic pairs fall under the landing theorem: obstructed iff the
/// parameter angles are negatives of each other, essentially mateable when
/// only the critical values share a class. Mixed pairs are always mateable:
/// a preperiodic-limb map has no biaccessible periodic points and is never
/// the conjugate of a periodic-limb map.
pub fn mate_verdict(a: &MateDescriptor, b: &MateDescriptor) -> Result<MatingReport, MatingError> {
    let report = |verdict, graph| MatingReport {
        a: a.clone(),
        b: b.clone(),
        verdict,
        graph,
    };
    match (a, b) {
        (MateDescriptor::Limb(la), MateDescriptor::Limb(lb)) => {
            let ta = la.theta()?;
            let tb = lb.theta()?;
            let graph = build_graph(
                &ChordSystem::from_alpha(&ta, Side::A)?,
                &ChordSystem::from_alpha(&tb, Side::B)?,
            )?;
            let condition = ta.angles() == tb.negated_angles().as_slice();
            let verdict = if condition {
                let reason = if *lb == la.conjugate() {
                    ObstructionReason::ConjugateLimbs
                } else if la.complementary().as_ref() == Some(lb) {
                    ObstructionReason::ComplementaryLimbs
                } else {
                    return Err(MatingError::Internal(
                        "limb condition held without a conjugate or complementary relation",
                    ));
                };
                Verdict::Obstructed { reason }
            } else if let Some(&component) = graph.loop_components().first() {
                Verdict::Obstructed {
                    reason: ObstructionReason::LoopFound { component },
                }
            } else {
                Verdict::NoLoopFound
            };
            Ok(report(verdict, graph))
        }
        (MateDescriptor::Preperiodic(pa), MateDescriptor::Preperiodic(pb)) => {
            let ra = preperiodic_limb_rays(pa)?;
            let rb = preperiodic_limb_rays(pb)?;
            let graph = build_graph(
                &ChordSystem::from_preperiodic(&ra, Side::A)?,
                &ChordSystem::from_preperiodic(&rb, Side::B)?,
            )?;
            let conjugate = *pb == pa.neg_mod1();
            debug_assert_eq!(
                conjugate,
                loop_criterion_preperiodic(&ra, &rb),
                "loop criterion must match the conjugacy test"
            );
            let verdict = if conjugate {
                Verdict::Obstructed {
                    reason: ObstructionReason::ConjugateLimbs,
                }
            } else if let Some(&component) = graph.loop_components().first() {
                Verdict::Obstructed {
                    reason: ObstructionReason::LoopFound { component },
                }
            } else if let Some(component) = graph.shared_critical_value_class()? {
                Verdict::EssentiallyMateable {
                    shared_value_component: component,
                }
            } else {
                Verdict::Mateable {
                    proof: MateabilityProof::PreperiodicTheorem,
                }
            };
            Ok(report(verdict, graph))
        }
        (MateDescriptor::Limb(la), MateDescriptor::Preperiodic(pb)) => {
            let ta = la.theta()?;
            let rb = preperiodic_limb_rays(pb)?;
            let graph = build_graph(
                &ChordSystem::from_alpha(&ta, Side::A)?,
                &ChordSystem::from_preperiodic(&rb, Side::B)?,
            )?;
            Ok(report(
                Verdict::Mateable {
                    proof: MateabilityProof::PreperiodicTheorem,
                },
                graph,
            ))
        }
        (MateDescriptor::Preperiodic(pa), MateDescriptor::Limb(lb)) => {
            let ra = preperiodic_limb_rays(pa)?;
            let tb = lb.theta()?;
            let graph = build_graph(
                &ChordSystem::from_preperiodic(&ra, Side::A)?,
                &ChordSystem::from_alpha(&tb, Side::B)?,
            )?;
            Ok(report(
                Verdict::Mateable {
                    proof: MateabilityProof::PreperiodicTheorem,
                },
                graph,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a(n: u64, d: u64) -> Angle {
        Angle::new(n, d)
    }

    fn limb(s: &str) -> LimbId {
        s.parse().unwrap()
    }

    fn alpha_system(id: &str, side: Side) -> ChordSystem {
        ChordSystem::from_alpha(&limb(id).theta().unwrap(), side).unwrap()
    }

    fn shape(graph: &RayClassGraph) -> Vec<(usize, usize)> {
        graph
            .components()
            .iter()
            .map(|c| (c.vertices.len(), c.edges.len()))
            .collect()
    }

    #[test]
    fn conjugate_mating_splits_into_parallel_loops() {
        let graph = build_graph(
            &alpha_system("4/7+", Side::A),
            &alpha_system("3/7+", Side::B),
        )
        .unwrap();
        assert_eq!(shape(&graph), vec![(2, 2); 3]);
        assert_eq!(graph.loop_components().len(), 3);
        for comp in 0..3 {
            assert_eq!(graph.witness_cycle(comp).map(|w| w.len()), Some(2));
        }
    }

    #[test]
    fn complementary_mating_forms_single_long_loop() {
        let graph = build_graph(
            &alpha_system("4/7+", Side::A),
            &alpha_system("6/7-", Side::B),
        )
        .unwrap();
        assert_eq!(shape(&graph), vec![(6, 6)]);
        assert_eq!(graph.witness_cycle(0).map(|w| w.len()), Some(6));
    }

    #[test]
    fn self_mating_of_period_two_limb_is_loop_free() {
        let graph = build_graph(
            &alpha_system("2/3+", Side::A),
            &alpha_system("2/3+", Side::B),
        )
        .unwrap();
        assert_eq!(shape(&graph), vec![(4, 3), (4, 3)]);
        assert!(graph.loop_components().is_empty());
        assert_eq!(graph.witness_cycle(0), None);
    }

    #[test]
    fn half_turn_twin_of_conjugate_is_loop_free() {
        // The same dynamics as the conjugate, but the other normalisation:
        // every edge runs to an auto-created singleton.
        let graph = build_graph(
            &alpha_system("4/7+", Side::A),
            &alpha_system("3/7-", Side::B),
        )
        .unwrap();
        assert!(graph.loop_components().is_empty());
        assert_eq!(graph.components().len(), 6);
    }

    #[test]
    fn preperiodic_conjugate_pair_has_critical_loop() {
        let ra = preperiodic_limb_rays(&a(1, 8)).unwrap();
        let rb = preperiodic_limb_rays(&a(7, 8)).unwrap();
        let graph = build_graph(
            &ChordSystem::from_preperiodic(&ra, Side::A).unwrap(),
            &ChordSystem::from_preperiodic(&rb, Side::B).unwrap(),
        )
        .unwrap();
        let loops = graph.loop_components();
        assert_eq!(loops.len(), 1);
        let comp = &graph.components()[loops[0]];
        assert_eq!((comp.vertices.len(), comp.edges.len()), (2, 2));
        // The loop passes through the two critical-point classes, and the
        // critical values share a class as well.
        assert!(comp
            .vertices
            .iter()
            .all(|&v| graph.vertices()[v].marker == Some(ClassMarker::CriticalPoint)));
        assert!(graph.shared_critical_value_class().unwrap().is_some());
    }

    #[test]
    fn critical_value_sharing_without_loop() {
        let ra = preperiodic_limb_rays(&a(1, 36)).unwrap();
        let rb = preperiodic_limb_rays(&a(11, 36)).unwrap();
        let graph = build_graph(
            &ChordSystem::from_preperiodic(&ra, Side::A).unwrap(),
            &ChordSystem::from_preperiodic(&rb, Side::B).unwrap(),
        )
        .unwrap();
        assert!(graph.loop_components().is_empty());
        let shared = graph.shared_critical_value_class().unwrap();
        assert!(shared.is_some());
        // The critical-point component is the 4-vertex tree.
        assert!(shape(&graph).contains(&(4, 3)));
    }

    #[test]
    fn loop_criterion_examples() {
        assert!(preperiodic_loop_criterion(&a(1, 8), &a(7, 8)));
        assert!(!preperiodic_loop_criterion(&a(1, 36), &a(11, 36)));
        assert!(!preperiodic_loop_criterion(&a(1, 36), &a(1, 36)));
    }

    #[test]
    fn verdicts_follow_decision_tree() {
        let verdict = |x: &MateDescriptor, y: &MateDescriptor| mate_verdict(x, y).unwrap().verdict;
        let l = |s: &str| MateDescriptor::Limb(limb(s));
        let p = |n, d| MateDescriptor::Preperiodic(a(n, d));

        assert_eq!(
            verdict(&l("18/31+"), &l("22/31-")),
            Verdict::Obstructed {
                reason: ObstructionReason::ComplementaryLimbs
            }
        );
        assert_eq!(
            verdict(&l("4/7+"), &l("3/7+")),
            Verdict::Obstructed {
                reason: ObstructionReason::ConjugateLimbs
            }
        );
        assert_eq!(verdict(&l("2/3+"), &l("2/3+")), Verdict::NoLoopFound);
        assert_eq!(verdict(&l("4/7+"), &l("3/7-")), Verdict::NoLoopFound);
        assert_eq!(
            verdict(&p(1, 8), &p(7, 8)),
            Verdict::Obstructed {
                reason: ObstructionReason::ConjugateLimbs
            }
        );
        assert!(matches!(
            verdict(&p(1, 36), &p(11, 36)),
            Verdict::EssentiallyMateable { .. }
        ));
        assert_eq!(
            verdict(&p(1, 36), &p(1, 36)),
            Verdict::Mateable {
                proof: MateabilityProof::PreperiodicTheorem
            }
        );
        assert_eq!(
            verdict(&l("2/3+"), &p(1, 36)),
            Verdict::Mateable {
                proof: MateabilityProof::PreperiodicTheorem
            }
        );
        // Self-mating of a zero limb: self-complementary, hence obstructed.
        assert_eq!(
            verdict(&l("0+"), &l("0+")),
            Verdict::Obstructed {
                reason: ObstructionReason::ComplementaryLimbs
            }
        );
        assert_eq!(
            verdict(&l("0+"), &l("0-")),
            Verdict::Obstructed {
                reason: ObstructionReason::ConjugateLimbs
            }
        );
    }

    #[test]
    fn forward_map_of_components() {
        let graph = build_graph(
            &alpha_system("4/7+", Side::A),
            &alpha_system("6/7-", Side::B),
        )
        .unwrap();
        // Single component maps to itself, in particular after a full period.
        assert_eq!(graph.map_component_forward(0), Ok(0));
        let mut comp = 0;
        for _ in 0..3 {
            comp = graph.map_component_forward(comp).unwrap();
        }
        assert_eq!(comp, 0);

        // The fixed-angle component of a zero-limb mating is fixed.
        let graph =
            build_graph(&alpha_system("0+", Side::A), &alpha_system("0-", Side::B)).unwrap();
        assert_eq!(graph.map_component_forward(0), Ok(0));

        let graph = build_graph(
            &alpha_system("2/3+", Side::A),
            &alpha_system("2/3+", Side::B),
        )
        .unwrap();
        let a_component = |angles: Vec<Angle>| {
            graph
                .components()
                .iter()
                .position(|c| {
                    c.vertices.iter().any(|&v| {
                        graph.vertices()[v].side == Side::A && graph.vertices()[v].angles == angles
                    })
                })
                .unwrap()
        };
        let with_12 = a_component(vec![a(1, 8), a(2, 8)]);
        let with_36 = a_component(vec![a(3, 8), a(6, 8)]);
        assert_eq!(graph.map_component_forward(with_12), Ok(with_36));
        // Period two: forward twice returns home.
        assert_eq!(graph.map_component_forward(with_36), Ok(with_12));
    }

    #[test]
    fn lamination_validation() {
        // Crossing classes are rejected.
        let crossing = ChordSystem::new(
            Side::A,
            vec![
                (vec![Angle::zero(), a(1, 2)], None),
                (vec![a(1, 4), a(3, 4)], None),
            ],
        );
        assert!(matches!(
            crossing,
            Err(MatingError::InconsistentLamination(_))
        ));
        // Overlapping classes are rejected.
        let overlapping = ChordSystem::new(
            Side::A,
            vec![
                (vec![a(1, 4), a(1, 2)], None),
                (vec![a(1, 2), a(3, 4)], None),
            ],
        );
        assert!(matches!(
            overlapping,
            Err(MatingError::InconsistentLamination(_))
        ));
        // Side order matters for build_graph.
        let sys = alpha_system("2/3+", Side::B);
        assert_eq!(
            build_graph(&sys, &sys).unwrap_err(),
            MatingError::SideMismatch
        );
        // Critical-value queries need markers on both sides.
        let graph = build_graph(
            &alpha_system("2/3+", Side::A),
            &alpha_system("2/3+", Side::B),
        )
        .unwrap();
        assert_eq!(
            graph.shared_critical_value_class(),
            Err(MatingError::MissingMarkers)
        );
    }
}
