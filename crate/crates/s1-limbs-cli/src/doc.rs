//! JSON document types mirroring the library's results.
//!
//! All angles serialise as canonical `"num/den"` strings (`"0"` for zero),
//! so documents parse and reprint idempotently.

use serde::Serialize;

use s1_limbs::{
    ClassMarker, LimbId, LimbKind, MateabilityProof, MatingReport, ObstructionReason,
    RayClassGraph, RotationSet, Side, ThetaSet, Verdict,
};

#[derive(Serialize)]
pub struct GapDoc {
    pub arc: [String; 2],
    pub multiplicity: u32,
}

#[derive(Serialize)]
pub struct RotationSetDoc {
    pub degree: u32,
    pub rho: String,
    pub signature: [u32; 2],
    pub points: Vec<String>,
    pub major_gaps: Vec<GapDoc>,
    pub cycles: Vec<Vec<String>>,
}

impl RotationSetDoc {
    pub fn from_set(set: &RotationSet) -> Self {
        let signature = set.signature();
        Self {
            degree: set.degree(),
            rho: set.rotation_number().to_string(),
            signature: [signature.s1, signature.s2],
            points: set.points().iter().map(|p| p.to_string()).collect(),
            major_gaps: set
                .major_gaps()
                .map(|g| GapDoc {
                    arc: [g.arc.start().to_string(), g.arc.end().to_string()],
                    multiplicity: g.multiplicity,
                })
                .collect(),
            cycles: set
                .cycles()
                .iter()
                .map(|c| c.iter().map(|p| p.to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct PairDoc {
    pub external: [String; 2],
    pub internal: String,
}

#[derive(Serialize)]
pub struct ThetaDoc {
    pub limb: String,
    pub angles: Vec<String>,
    pub rotation_number: Option<String>,
    pub signature: [u32; 2],
    pub critical_gap: [String; 2],
    pub pairs: Vec<PairDoc>,
    pub root_rays: [String; 2],
}

impl ThetaDoc {
    pub fn from_theta(theta: &ThetaSet) -> Self {
        let signature = theta.signature();
        let (ray, ray_next) = theta.root_rays();
        Self {
            limb: theta.limb().to_string(),
            angles: theta.angles().iter().map(|p| p.to_string()).collect(),
            rotation_number: theta.rotation_number().map(|r| r.to_string()),
            signature: [signature.s1, signature.s2],
            critical_gap: [
                theta.critical_gap().start().to_string(),
                theta.critical_gap().end().to_string(),
            ],
            pairs: theta
                .pairs()
                .iter()
                .map(|lc| {
                    let (x, y) = lc.chord.endpoints();
                    PairDoc {
                        external: [x.to_string(), y.to_string()],
                        internal: lc.label.to_string(),
                    }
                })
                .collect(),
            root_rays: [ray.to_string(), ray_next.to_string()],
        }
    }
}

#[derive(Serialize)]
pub struct LimbDataDoc {
    pub rho: String,
    pub position: u32,
    pub sign: String,
}

#[derive(Serialize)]
pub struct LimbDoc {
    pub limb: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<LimbDataDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preperiod: Option<usize>,
    pub period: usize,
    pub conjugate: String,
    pub complementary: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<ThetaDoc>,
}

impl LimbDoc {
    pub fn from_limb(limb: &LimbId, theta: Option<&ThetaSet>) -> Self {
        let kind = limb.classify();
        let (kind_name, data, preperiod, period) = match &kind {
            LimbKind::Rotation(data) => (
                "rotation",
                Some(LimbDataDoc {
                    rho: data.rho.to_string(),
                    position: data.position,
                    sign: data.sign.to_string(),
                }),
                None,
                data.period() as usize,
            ),
            LimbKind::PeriodicNoRotation { period } => {
                ("periodic-no-rotation", None, None, *period)
            }
            LimbKind::Preperiodic { preperiod, period } => {
                ("preperiodic", None, Some(*preperiod), *period)
            }
        };
        Self {
            limb: limb.to_string(),
            kind: kind_name.into(),
            data,
            preperiod,
            period,
            conjugate: limb.conjugate().to_string(),
            complementary: limb.complementary().map(|l| l.to_string()),
            theta: theta.map(ThetaDoc::from_theta),
        }
    }
}

#[derive(Serialize)]
pub struct VertexDoc {
    pub id: usize,
    pub side: String,
    pub angles: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marker: Option<String>,
    pub auto: bool,
}

#[derive(Serialize)]
pub struct EdgeDoc {
    pub id: usize,
    pub angle: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Serialize)]
pub struct ComponentDoc {
    pub id: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub has_loop: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct GraphDoc {
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
    pub components: Vec<ComponentDoc>,
}

fn marker_name(marker: ClassMarker) -> &'static str {
    match marker {
        ClassMarker::CriticalPoint => "critical_point",
        ClassMarker::CriticalValue => "critical_value",
        ClassMarker::CocriticalPoint => "cocritical_point",
        ClassMarker::AlphaCycle => "alpha_cycle",
    }
}

impl GraphDoc {
    pub fn from_graph(graph: &RayClassGraph) -> Self {
        Self {
            vertices: graph
                .vertices()
                .iter()
                .enumerate()
                .map(|(id, v)| VertexDoc {
                    id,
                    side: match v.side {
                        Side::A => "A".into(),
                        Side::B => "B".into(),
                    },
                    angles: v.angles.iter().map(|p| p.to_string()).collect(),
                    marker: v.marker.map(|m| marker_name(m).into()),
                    auto: v.auto,
                })
                .collect(),
            edges: graph
                .edges()
                .iter()
                .enumerate()
                .map(|(id, e)| EdgeDoc {
                    id,
                    angle: e.angle.to_string(),
                    from: e.a,
                    to: e.b,
                })
                .collect(),
            components: graph
                .components()
                .iter()
                .enumerate()
                .map(|(id, c)| ComponentDoc {
                    id,
                    vertices: c.vertices.clone(),
                    edges: c.edges.clone(),
                    has_loop: c.has_loop(),
                    witness: graph.witness_cycle(id),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct VerdictDoc {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proof: Option<String>,
}

impl VerdictDoc {
    pub fn from_verdict(verdict: &Verdict) -> Self {
        match verdict {
            Verdict::Obstructed { reason } => {
                let (name, component) = match reason {
                    ObstructionReason::ConjugateLimbs => ("conjugate_limbs", None),
                    ObstructionReason::ComplementaryLimbs => ("complementary_limbs", None),
                    ObstructionReason::LoopFound { component } => ("loop_found", Some(*component)),
                };
                Self {
                    verdict: "OBSTRUCTED".into(),
                    reason: Some(name.into()),
                    component,
                    proof: None,
                }
            }
            Verdict::Mateable { proof } => Self {
                verdict: "MATEABLE".into(),
                reason: None,
                component: None,
                proof: Some(match proof {
                    MateabilityProof::PreperiodicTheorem => "preperiodic_theorem".into(),
                }),
            },
            Verdict::EssentiallyMateable {
                shared_value_component,
            } => Self {
                verdict: "ESSENTIALLY_MATEABLE".into(),
                reason: Some("shared_critical_value_class".into()),
                component: Some(*shared_value_component),
                proof: None,
            },
            Verdict::NoLoopFound => Self {
                verdict: "NO_LOOP_FOUND".into(),
                reason: None,
                component: None,
                proof: None,
            },
        }
    }
}

#[derive(Serialize)]
pub struct MateDoc {
    pub a: String,
    pub b: String,
    pub verdict: VerdictDoc,
    pub graph: GraphDoc,
}

impl MateDoc {
    pub fn from_report(report: &MatingReport) -> Self {
        Self {
            a: report.a.to_string(),
            b: report.b.to_string(),
            verdict: VerdictDoc::from_verdict(&report.verdict),
            graph: GraphDoc::from_graph(&report.graph),
        }
    }
}
