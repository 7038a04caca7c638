//! Built-in golden-example suite, runnable as `s1limbs selftest`.

use s1_limbs::{
    balanced, mate_verdict, preperiodic_limb_rays, preperiodic_loop_criterion, Angle, Chord,
    LimbData, LimbId, LimbKind, MateDescriptor, ObstructionReason, RenderSpec, Sign, Verdict,
};

fn angle(n: u64, d: u64) -> Angle {
    Angle::new(n, d)
}

fn limb(s: &str) -> LimbId {
    s.parse().expect("valid limb literal")
}

type Check = (&'static str, fn() -> Result<(), String>);

fn expect<T: PartialEq + core::fmt::Debug>(label: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got:?}, want {want:?}"))
    }
}

fn rotation_sets() -> Result<(), String> {
    let x = s1_limbs::m2_rotation_set(&angle(2, 5)).map_err(|e| e.to_string())?;
    expect(
        "X_{2/5}",
        x.points().to_vec(),
        vec![
            angle(5, 31),
            angle(9, 31),
            angle(10, 31),
            angle(18, 31),
            angle(20, 31),
        ],
    )?;
    let y = s1_limbs::m2_rotation_set(&angle(3, 5)).map_err(|e| e.to_string())?;
    expect(
        "X_{3/5}",
        y.points().to_vec(),
        vec![
            angle(11, 31),
            angle(13, 31),
            angle(21, 31),
            angle(22, 31),
            angle(26, 31),
        ],
    )?;
    let z = s1_limbs::m3_two_cycle_rotation_set(&angle(1, 2), 3).map_err(|e| e.to_string())?;
    expect(
        "two-cycle (1/2, 3)",
        z.points().to_vec(),
        vec![angle(1, 8), angle(2, 8), angle(3, 8), angle(6, 8)],
    )
}

fn limb_data() -> Result<(), String> {
    match limb("18/31+").classify() {
        LimbKind::Rotation(data) => {
            expect("rho", data.rho, angle(2, 5))?;
            expect("position", data.position, 4)?;
        }
        other => return Err(format!("18/31+ classified as {other:?}")),
    }
    expect(
        "limb of (3/5, 4, -)",
        s1_limbs::limb_of_data(&LimbData {
            rho: angle(3, 5),
            position: 4,
            sign: Sign::Minus,
        })
        .map_err(|e| e.to_string())?,
        limb("22/31-"),
    )
}

fn conjugates_and_complements() -> Result<(), String> {
    expect("conjugate 4/7+", limb("4/7+").conjugate(), limb("3/7+"))?;
    expect(
        "complementary 18/31+",
        limb("18/31+").complementary(),
        Some(limb("22/31-")),
    )?;
    expect(
        "complementary 5/7+",
        limb("5/7+").complementary(),
        Some(limb("2/7-")),
    )?;
    expect(
        "self-complementary 0+",
        limb("0+").complementary(),
        Some(limb("0+")),
    )?;
    expect(
        "balanced 5/7",
        balanced(&angle(5, 7)).map_err(|e| e.to_string())?,
        true,
    )
}

fn root_rays() -> Result<(), String> {
    let cases = [
        ("4/7+", (1u64, 78u64), (2u64, 78u64)),
        ("6/7-", (49, 78), (50, 78)),
        ("5/7+", (7, 78), (8, 78)),
        ("2/7-", (31, 78), (32, 78)),
        ("18/31+", (19, 726), (20, 726)),
        ("22/31-", (427, 726), (428, 726)),
    ];
    for (id, a, b) in cases {
        expect(
            id,
            limb(id).root_parameter_rays().map_err(|e| e.to_string())?,
            (angle(a.0, a.1), angle(b.0, b.1)),
        )?;
    }
    Ok(())
}

fn theta_sets() -> Result<(), String> {
    let theta = limb("2/3+").theta().map_err(|e| e.to_string())?;
    expect(
        "Theta(2/3+)",
        theta.angles().to_vec(),
        vec![angle(1, 8), angle(2, 8), angle(3, 8), angle(6, 8)],
    )?;
    let theta = limb("18/31+").theta().map_err(|e| e.to_string())?;
    expect(
        "critical gap of 18/31+",
        (
            theta.critical_gap().start().clone(),
            theta.critical_gap().end().clone(),
        ),
        (angle(87, 242), angle(168, 242)),
    )?;
    let theta = limb("6/7-").theta().map_err(|e| e.to_string())?;
    let has_pair = theta
        .pairs()
        .iter()
        .any(|lc| lc.chord == Chord::new(angle(23, 26), angle(24, 26)));
    if !has_pair {
        return Err("6/7-: rays 23/26 and 24/26 must land together".into());
    }
    let theta = limb("0+").theta().map_err(|e| e.to_string())?;
    expect(
        "Theta(0+)",
        theta.angles().to_vec(),
        vec![Angle::zero(), angle(1, 2)],
    )
}

fn preperiodic_rays() -> Result<(), String> {
    let rays = preperiodic_limb_rays(&angle(1, 36)).map_err(|e| e.to_string())?;
    expect(
        "critical rays of 1/36",
        rays.critical().clone(),
        Chord::new(angle(13, 36), angle(25, 36)),
    )?;
    expect(
        "critical value of 1/36",
        rays.critical_value().clone(),
        angle(1, 12),
    )?;
    let rays = preperiodic_limb_rays(&angle(1, 8)).map_err(|e| e.to_string())?;
    expect(
        "critical rays of 1/8",
        rays.critical().clone(),
        Chord::new(angle(11, 24), angle(19, 24)),
    )
}

fn matings() -> Result<(), String> {
    let l = |s: &str| MateDescriptor::Limb(limb(s));
    let p = |n, d| MateDescriptor::Preperiodic(angle(n, d));
    let run =
        |a: &MateDescriptor, b: &MateDescriptor| mate_verdict(a, b).map_err(|e| e.to_string());

    let report = run(&l("4/7+"), &l("3/7+"))?;
    expect(
        "conjugate mating verdict",
        report.verdict,
        Verdict::Obstructed {
            reason: ObstructionReason::ConjugateLimbs,
        },
    )?;
    expect(
        "conjugate loop count",
        report.graph.loop_components().len(),
        3,
    )?;

    let report = run(&l("4/7+"), &l("6/7-"))?;
    expect(
        "complementary mating verdict",
        report.verdict,
        Verdict::Obstructed {
            reason: ObstructionReason::ComplementaryLimbs,
        },
    )?;
    expect(
        "complementary loop size",
        report.graph.witness_cycle(0).map(|w| w.len()),
        Some(6),
    )?;

    let report = run(&l("18/31+"), &l("22/31-"))?;
    expect(
        "period-five complementary loop",
        report.graph.witness_cycle(0).map(|w| w.len()),
        Some(10),
    )?;

    let report = run(&l("2/3+"), &l("2/3+"))?;
    expect("self-mating verdict", report.verdict, Verdict::NoLoopFound)?;

    expect(
        "loop criterion 1/8 vs 7/8",
        preperiodic_loop_criterion(&angle(1, 8), &angle(7, 8)),
        true,
    )?;
    let report = run(&p(1, 8), &p(7, 8))?;
    expect(
        "preperiodic conjugate verdict",
        report.verdict,
        Verdict::Obstructed {
            reason: ObstructionReason::ConjugateLimbs,
        },
    )?;

    let report = run(&p(1, 36), &p(11, 36))?;
    if !matches!(report.verdict, Verdict::EssentiallyMateable { .. }) {
        return Err(format!(
            "1/36 vs 11/36: got {}, want ESSENTIALLY MATEABLE",
            report.verdict
        ));
    }
    Ok(())
}

fn renderer() -> Result<(), String> {
    let report = mate_verdict(
        &MateDescriptor::Limb(limb("4/7+")),
        &MateDescriptor::Limb(limb("6/7-")),
    )
    .map_err(|e| e.to_string())?;
    let spec = RenderSpec::new(&report.graph, 640, 640)
        .map_err(|e| e.to_string())?
        .highlight_loops();
    let first = spec.render();
    expect("render determinism", first == spec.render(), true)?;
    expect("highlighted segments", first.matches(" hl\"").count(), 6)
}

/// Runs every golden check, printing one line each; returns the failure count.
pub fn run() -> usize {
    let checks: &[Check] = &[
        ("rotation sets", rotation_sets),
        ("limb data", limb_data),
        (
            "conjugate and complementary limbs",
            conjugates_and_complements,
        ),
        ("root parameter rays", root_rays),
        ("landing-angle sets", theta_sets),
        ("preperiodic ray classes", preperiodic_rays),
        ("mating verdicts", matings),
        ("renderer", renderer),
    ];
    let mut failures = 0;
    for (name, check) in checks {
        match check() {
            Ok(()) => println!("ok - {name}"),
            Err(msg) => {
                failures += 1;
                println!("FAIL - {name}: {msg}");
            }
        }
    }
    println!(
        "{} of {} checks passed",
        checks.len() - failures,
        checks.len()
    );
    failures
}
