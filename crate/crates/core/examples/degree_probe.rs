// Degrees of the EPW sextic, its dual and the EPW quartic along random lines.

use epwlab::epw::{self, ProbeOptions, StratumKind};
use epwlab::lagrangian;
use epwlab::rng;

pub fn run_example() -> epwlab::Result<()> {
    let mut r = rng::sub_rng(1, "example/degree");
    let data = lagrangian::random_graph(0, &mut r)?;
    for kind in [StratumKind::Y, StratumKind::YDual, StratumKind::Z] {
        let res = epw::degree_probe(data.a(), kind, &mut r, &ProbeOptions::default())?;
        println!(
            "{:>5}: degree {} from {} minors, modular degrees {:?}",
            kind.tag(),
            res.degree,
            res.minors_used,
            res.modular_degrees.iter().map(|x| x.1).collect::<Vec<_>>()
        );
        assert_eq!(res.degree, kind.expected_degree());
        assert!(res.modular_agree());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
