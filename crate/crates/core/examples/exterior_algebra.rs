// Wedge products, contractions and the symplectic pairing on ⋀³V₆.

use epwlab::exterior::{self, KVector};
use epwlab::linalg::{fmt_scalar, vec_q};

pub fn run_example() -> epwlab::Result<()> {
    let a = KVector::basis(&[0, 1, 2]);
    let b = KVector::basis(&[3, 4, 5]);
    // ω(a, b) is the coefficient of e012345 in a∧b.
    let w = exterior::symplectic_form(&a, &b)?;
    println!("omega(e012, e345) = {}", fmt_scalar(&w));
    assert_eq!(fmt_scalar(&w), "1");
    assert_eq!(fmt_scalar(&exterior::symplectic_form(&b, &a)?), "-1");

    let dec = exterior::decomposable_rank(&a)?;
    println!("e012: annihilator dimension {}", dec.kdim);
    assert!(dec.is_decomposable());

    let general = a.add(&b)?;
    let rank = exterior::decomposable_rank(&general)?;
    println!("e012 + e345: annihilator dimension {}", rank.kdim);
    assert_eq!(rank.kdim, 0);

    // contracting with e₅^∨ kills ⋀³⟨e₀..e₄⟩
    let f = exterior::standard_f();
    assert!(a.contract(&f)?.is_zero());
    let c = b.contract(&f)?;
    println!("contract(e345, e5*) has {} nonzero coordinates", c.coords().iter().filter(|x| !num_traits::Zero::is_zero(*x)).count());

    let v = KVector::vector(&vec_q(&[1, 1, 0, 0, 0, 0]))?;
    println!("v wedge e012 is zero: {}", v.wedge(&a)?.is_zero());
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
