//! Command-line front end for the limb-combinatorics engine.

mod doc;
mod selftest;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use s1_limbs::{
    mate_verdict, ChordStyle, LimbId, LimbKind, MateDescriptor, MatingReport, RenderSpec,
    RotationSet, ThetaSet,
};

#[derive(Parser)]
#[command(
    name = "s1limbs",
    version,
    about = "Exact limb combinatorics and mating obstructions for cubic polynomials with a fixed critical point",
    after_help = "Limbs are written as internal angle plus side, e.g. `18/31+`; maps in limbs \
with strictly preperiodic internal angle are addressed by their parameter angle, e.g. `1/36`."
)]
struct Cli {
    /// Output format for the query subcommands
    #[arg(long, global = true, value_enum, default_value_t = Output::Human)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Style {
    /// Straight chords
    Straight,
    /// Hyperbolic geodesic arcs
    Arc,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a rotation set: the doubling set X_{p/q}, or the two-cycle
    /// tripling set with given signature
    Rotset {
        /// Degree of the angle map (2 or 3)
        #[arg(short, long)]
        d: u32,
        /// Rotation number p/q
        #[arg(long)]
        rho: String,
        /// Signature s1 (required when d = 3)
        #[arg(long)]
        s1: Option<u32>,
    },
    /// Full report for a limb: classification, landing angles, root rays
    Limb { id: String },
    /// Landing-angle set of a limb's boundary cycle
    Theta { id: String },
    /// The conjugate limb
    Conjugate { id: String },
    /// The complementary limb, when the limb has a rotation number
    Complementary { id: String },
    /// Decide mateability of two maps
    Mate {
        a: String,
        b: String,
        /// Treat both descriptors as preperiodic parameter angles
        #[arg(long)]
        preperiodic: bool,
    },
    /// Draw the mating lamination as SVG
    Render {
        a: String,
        b: String,
        /// Treat both descriptors as preperiodic parameter angles
        #[arg(long)]
        preperiodic: bool,
        /// Write the SVG here instead of stdout
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 800)]
        height: u32,
        /// Label every angle
        #[arg(long)]
        labels: bool,
        /// Chord geometry
        #[arg(long, value_enum, default_value_t = Style::Arc)]
        style: Style,
        /// Components to highlight: `loops`, `none`, or comma-separated ids
        #[arg(long, default_value = "loops")]
        highlight: String,
    },
    /// Run the built-in golden example suite
    Selftest,
}

fn main() -> ExitCode {
    // Die quietly when the read end of a pipe goes away, like other
    // line-oriented tools.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Rotset { d, rho, s1 } => {
            let rho = parse_angle(&rho)?;
            let set = match (d, s1) {
                (2, None) => s1_limbs::m2_rotation_set(&rho)?,
                (2, Some(_)) => bail!("--s1 only applies to degree 3"),
                (3, Some(s1)) => s1_limbs::m3_two_cycle_rotation_set(&rho, s1)?,
                (3, None) => bail!("degree 3 needs --s1 (odd, between 1 and 2q-1)"),
                _ => bail!("only degrees 2 and 3 are supported"),
            };
            match cli.output {
                Output::Human => print_rotation_set(&set),
                Output::Json => print_json(&doc::RotationSetDoc::from_set(&set))?,
            }
        }
        Command::Limb { id } => {
            let limb = parse_limb(&id)?;
            let theta = match limb.classify() {
                LimbKind::Preperiodic { .. } => None,
                _ => Some(limb.theta()?),
            };
            match cli.output {
                Output::Human => print_limb(&limb, theta.as_ref()),
                Output::Json => print_json(&doc::LimbDoc::from_limb(&limb, theta.as_ref()))?,
            }
        }
        Command::Theta { id } => {
            let limb = parse_limb(&id)?;
            let theta = limb.theta()?;
            match cli.output {
                Output::Human => print_theta(&theta),
                Output::Json => print_json(&doc::ThetaDoc::from_theta(&theta))?,
            }
        }
        Command::Conjugate { id } => {
            let limb = parse_limb(&id)?;
            match cli.output {
                Output::Human => println!("{}", limb.conjugate()),
                Output::Json => print_json(&serde_json::json!({
                    "limb": limb.to_string(),
                    "conjugate": limb.conjugate().to_string(),
                }))?,
            }
        }
        Command::Complementary { id } => {
            let limb = parse_limb(&id)?;
            let complementary = limb.complementary();
            match cli.output {
                Output::Human => match complementary {
                    Some(c) => println!("{c}"),
                    None => println!("none"),
                },
                Output::Json => print_json(&serde_json::json!({
                    "limb": limb.to_string(),
                    "complementary": complementary.map(|c| c.to_string()),
                }))?,
            }
        }
        Command::Mate { a, b, preperiodic } => {
            let report = mate(&a, &b, preperiodic)?;
            match cli.output {
                Output::Human => print_mating(&report),
                Output::Json => print_json(&doc::MateDoc::from_report(&report))?,
            }
        }
        Command::Render {
            a,
            b,
            preperiodic,
            svg,
            width,
            height,
            labels,
            style,
            highlight,
        } => {
            let report = mate(&a, &b, preperiodic)?;
            let mut spec = RenderSpec::new(&report.graph, width, height)?
                .with_labels(labels)
                .with_style(match style {
                    Style::Straight => ChordStyle::Straight,
                    Style::Arc => ChordStyle::GeodesicArc,
                });
            spec = match highlight.trim() {
                "loops" => spec.highlight_loops(),
                "none" | "" => spec,
                list => {
                    let ids: Vec<usize> = list
                        .split(',')
                        .map(|part| {
                            part.trim()
                                .parse::<usize>()
                                .map_err(|_| anyhow!("bad component id '{part}'"))
                        })
                        .collect::<Result<_>>()?;
                    spec.highlight_components(&ids)?
                }
            };
            let svg_text = spec.render();
            match svg {
                Some(path) => {
                    std::fs::write(&path, svg_text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    eprintln!("wrote {}", path.display());
                }
                None => print!("{svg_text}"),
            }
        }
        Command::Selftest => {
            let failures = selftest::run();
            if failures > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Denominator bound for command-line input. Orbit detection walks until the
/// cycle closes, which can take as long as the multiplicative order of the
/// map degree mod the denominator; every supported computation lives far
/// below this bound.
const MAX_INPUT_DENOMINATOR: u32 = 100_000_000;

fn check_denominator(s: &str, angle: &s1_limbs::Angle) -> Result<()> {
    match angle.to_u128_pair() {
        Some((_, den)) if den <= MAX_INPUT_DENOMINATOR as u128 => Ok(()),
        _ => bail!("'{s}': denominator exceeds the supported bound of {MAX_INPUT_DENOMINATOR}"),
    }
}

fn parse_angle(s: &str) -> Result<s1_limbs::Angle> {
    let angle: s1_limbs::Angle = s.parse().map_err(|e| anyhow!("bad angle '{s}': {e}"))?;
    check_denominator(s, &angle)?;
    Ok(angle)
}

fn parse_limb(s: &str) -> Result<LimbId> {
    let limb: LimbId = s.parse().map_err(|e| anyhow!("bad limb '{s}': {e}"))?;
    check_denominator(s, limb.internal_angle())?;
    Ok(limb)
}

/// Suffixed descriptors (`18/31+`) are limbs; bare fractions are parameter
/// angles of preperiodic-limb maps.
fn parse_descriptor(s: &str, force_preperiodic: bool) -> Result<MateDescriptor> {
    let is_limb = s.ends_with('+') || s.ends_with('-');
    if is_limb && force_preperiodic {
        bail!("'{s}': --preperiodic expects bare parameter angles");
    }
    if is_limb {
        Ok(MateDescriptor::Limb(parse_limb(s)?))
    } else {
        Ok(MateDescriptor::Preperiodic(parse_angle(s)?))
    }
}

fn mate(a: &str, b: &str, force_preperiodic: bool) -> Result<MatingReport> {
    let da = parse_descriptor(a, force_preperiodic)?;
    let db = parse_descriptor(b, force_preperiodic)?;
    Ok(mate_verdict(&da, &db)?)
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn print_rotation_set(set: &RotationSet) {
    println!("points: {set}");
    println!("degree: {}", set.degree());
    println!("rho: {}", set.rotation_number());
    println!("signature: {}", set.signature());
    for gap in set.major_gaps() {
        println!("major gap: {} x{}", gap.arc, gap.multiplicity);
    }
    for (i, cycle) in set.cycles().iter().enumerate() {
        let parts: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
        println!("cycle {i}: {{{}}}", parts.join(", "));
    }
}

fn print_theta(theta: &ThetaSet) {
    let parts: Vec<String> = theta.angles().iter().map(|p| p.to_string()).collect();
    println!("Theta({}) = {{{}}}", theta.limb(), parts.join(", "));
    match theta.rotation_number() {
        Some(rho) => println!("rotation number: {rho}"),
        None => println!("rotation number: none"),
    }
    println!("signature: {}", theta.signature());
    println!("critical gap: {}", theta.critical_gap());
    for pair in theta.pairs() {
        println!("landing pair: {pair}");
    }
    let (ray, ray_next) = theta.root_rays();
    println!("root parameter rays: {ray}, {ray_next}");
}

fn print_limb(limb: &LimbId, theta: Option<&ThetaSet>) {
    println!("limb: {limb}");
    match limb.classify() {
        LimbKind::Rotation(data) => println!("data: {data}"),
        LimbKind::PeriodicNoRotation { period } => {
            println!("periodic of period {period}, no rotation number");
        }
        LimbKind::Preperiodic { preperiod, period } => {
            println!(
                "strictly preperiodic internal angle (preperiod {preperiod}, period {period}); \
                 address this limb's unique map by its parameter angle"
            );
        }
    }
    println!("conjugate: {}", limb.conjugate());
    match limb.complementary() {
        Some(c) => println!("complementary: {c}"),
        None => println!("complementary: none"),
    }
    if let Some(theta) = theta {
        print_theta(theta);
    }
}

fn print_mating(report: &MatingReport) {
    println!("mating: {} with {}", report.a, report.b);
    println!("verdict: {}", report.verdict);
    let graph = &report.graph;
    println!(
        "graph: {} vertices, {} edges, {} components",
        graph.vertices().len(),
        graph.edges().len(),
        graph.components().len()
    );
    for (i, comp) in graph.components().iter().enumerate() {
        let kind = if comp.has_loop() { "loop" } else { "tree" };
        println!(
            "component {i}: {} vertices, {} edges ({kind})",
            comp.vertices.len(),
            comp.edges.len()
        );
        if let Some(witness) = graph.witness_cycle(i) {
            let angles: Vec<String> = witness
                .iter()
                .map(|&e| graph.edges()[e].angle.to_string())
                .collect();
            println!("  loop through angles: {}", angles.join(" -> "));
        }
    }
    for (i, vertex) in graph.vertices().iter().enumerate() {
        let angles: Vec<String> = vertex.angles.iter().map(|p| p.to_string()).collect();
        let marker = vertex.marker.map(|m| format!(" [{m}]")).unwrap_or_default();
        let auto = if vertex.auto { " (auto)" } else { "" };
        println!(
            "vertex {i} ({}): {{{}}}{marker}{auto}",
            vertex.side,
            angles.join(", ")
        );
    }
}
