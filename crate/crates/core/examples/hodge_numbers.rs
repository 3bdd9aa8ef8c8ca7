// Hodge diamonds of GM varieties of dimension 1 to 6.

use epwlab::lattices;

pub fn run_example() -> epwlab::Result<()> {
    for n in 1..=6 {
        let rep = lattices::hodge_numerology(n)?;
        println!("n = {n}: euler {:>3}, middle betti {:>2}, vanishing rank {:?}", rep.euler, rep.middle_betti, rep.vanishing_rank);
        assert!(rep.all_pass());
    }
    let d = lattices::gm_hodge_diamond(4)?;
    for k in 0..=8 {
        println!("{:?}", d.rows[k]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
