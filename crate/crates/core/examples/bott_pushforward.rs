// Bott's algorithm on relative Grassmannians and the pushforward tables it reproduces.

use epwlab::bbw::{self, SheafTerm};

pub fn run_example() -> epwlab::Result<()> {
    // S²𝒰^∨ on Gr(2, 4) pushes forward to S²V^∨ in degree 0.
    let t = SheafTerm::on_sub(2, 4, &[0, -2])?;
    println!("S2 U* on Gr(2,4): {:?}", bbw::bott_pushforward(&t));

    // ℒ-twisted Koszul terms for lines and planes on quadrics.
    for m in 3..=6 {
        let r = bbw::verify_prop_a1(m)?;
        println!("lines, m = {m}: assembly matches {}, generic rank {}", r.assembly_matches, r.generic_rank);
        assert!(r.all_pass());
    }
    let r = bbw::verify_prop_a2(5)?;
    println!("planes, m = 5: {} terms, all pass {}", r.terms.len(), r.all_pass());

    let table = bbw::y2_cohomology_table()?;
    for row in &table.rows {
        println!("t = {}: {:?}", row.t, row.h);
    }
    println!("degree from second differences: {:?}", table.degree);
    assert!(table.all_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
