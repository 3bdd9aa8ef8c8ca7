// Lattice invariants and the embeddings of ⟨e₁, e₂⟩ into Γ₄ and Γ₆.

use epwlab::lattices::{self, IntegerLattice};

pub fn run_example() -> epwlab::Result<()> {
    for expr in ["U", "E8", "E8(-1)^2 + U^4", "E8^2 + U^2 + I_{2,0}(2)"] {
        let l = lattices::make_lattice(expr)?;
        let inv = l.invariants()?;
        println!("{expr:<24} rank {:>2} signature {:?} even {} disc {:?}", inv.rank, inv.signature, inv.even, inv.discriminant_group);
    }
    for n in [4, 6] {
        let rep = lattices::gm_embedding_report(n)?;
        println!("n = {n}: complement {:?}, checks pass {}", rep.complement.signature, rep.all_pass());
        assert!(rep.all_pass());
    }
    assert_eq!(IntegerLattice::lambda().rank(), 22);
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
