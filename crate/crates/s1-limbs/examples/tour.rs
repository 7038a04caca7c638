//! A short tour: limb data, landing angles, and a mating verdict.

use s1_limbs::{mate_verdict, LimbId, LimbKind, MateDescriptor};

fn main() {
    let limb: LimbId = "18/31+".parse().unwrap();
    if let LimbKind::Rotation(data) = limb.classify() {
        println!("combinatorial data of {limb}: {data}");
    }
    let theta = limb.theta().unwrap();
    println!("landing angles: {:?}", theta.angles());
    println!("critical gap:   {}", theta.critical_gap());
    let (ray, ray_next) = theta.root_rays();
    println!("root rays:      {ray}, {ray_next}");

    let partner = limb.complementary().unwrap();
    println!("complementary:  {partner}");

    let report = mate_verdict(&MateDescriptor::Limb(limb), &MateDescriptor::Limb(partner)).unwrap();
    println!("verdict:        {}", report.verdict);
}
