// A pencil of Lagrangians through A₁ ⊃ B ⊂ A₂ and the member where v jumps to Y^{≥2}.

use epwlab::epw;
use epwlab::lagrangian::{self, PencilParam};
use epwlab::linalg::q;
use epwlab::rng;

pub fn run_example() -> epwlab::Result<()> {
    let mut r = rng::sub_rng(12, "example/pencil");
    let pair = epw::planted_pencil_pair(&mut r, false)?;
    let p = lagrangian::lagrangian_pencil(&pair.a1, &pair.a2)?;
    println!("dim B = {}", p.b.dim());

    let w = epw::joint_stratum_witness(&p, &pair.v)?;
    println!("witness at t = {}, stratum {}", w.t, w.ell_at_t);
    assert!(w.ell_at_t >= 2);
    assert_eq!(p.member(&w.t)?, pair.a0);

    let ts = [PencilParam::Finite(q(0)), PencilParam::Finite(q(1)), PencilParam::Infinity];
    println!("strata along the pencil: {:?}", epw::pencil_strata(&p, &pair.v, &ts)?);

    // With B meeting F_v every member contains a point of F_v.
    let bad = epw::planted_pencil_pair(&mut r, true)?;
    let p = lagrangian::lagrangian_pencil(&bad.a1, &bad.a2)?;
    println!("degenerate pair: {}", epw::joint_stratum_witness(&p, &bad.v).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
