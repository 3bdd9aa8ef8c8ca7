// Graph Lagrangians with a prescribed ℓ = dim(A ∩ ⋀³V₅), and their JSON form.

use epwlab::lagrangian::{self, LagrangianData};
use epwlab::rng;

pub fn run_example() -> epwlab::Result<()> {
    for ell in 0..=3 {
        let mut r = rng::sub_rng(42, &format!("example/gen/{ell}"));
        let data = lagrangian::random_graph(ell, &mut r)?;
        assert!(lagrangian::is_lagrangian(data.a()).ok);
        println!("requested ell = {ell}, cached ell = {:?}", data.ell());
        assert_eq!(data.ell(), Some(ell));
    }

    let mut r = rng::sub_rng(7, "example/gen/roundtrip");
    let data = lagrangian::random_graph(1, &mut r)?;
    let text = serde_json::to_string(&data.to_json())?;
    let back = LagrangianData::from_json(&serde_json::from_str(&text)?)?;
    assert_eq!(back.a(), data.a());
    println!("JSON round trip keeps the echelon basis ({} bytes)", text.len());

    let search = lagrangian::find_decomposable(data.a(), 4, &mut r)?;
    println!("decomposable search: {}", search.summary());
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
