// Linear spaces on quadrics over finite fields against the closed-form classification.

use epwlab::quadrics::{self, FfQuadric, FiniteField};

pub fn run_example() -> epwlab::Result<()> {
    let f3 = FiniteField::new(3)?;
    let f5 = FiniteField::new(5)?;
    for (m, c, k) in [(4, 0, 1), (5, 1, 1), (5, 0, 1), (5, 1, 2)] {
        let d = quadrics::classify_linear_families(m, c, k);
        let a = quadrics::enumeration_report(&quadrics::split_form(f3.clone(), m - c, c), k)?;
        let b = quadrics::enumeration_report(&quadrics::split_form(f5.clone(), m - c, c), k)?;
        let g = quadrics::growth_exponent(a.count, 3, b.count, 5);
        println!(
            "m={m} c={c} k={k}: {:?} dim {:?}; F3 count {} F5 count {} families {} growth {:?}",
            d.structure, d.dim, a.count, b.count, b.families, g
        );
        assert_eq!(b.families, d.components());
    }

    // x₀² + x₁² + x₂² + 2x₃² over F₅: the rulings are conjugate, visible over F₂₅.
    let q = FfQuadric::from_gram(f5.clone(), &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 2]])?;
    let rep = quadrics::family_count_vs_discriminant(&q)?;
    println!(
        "diag(1,1,1,2) over F5: {} families, {} over F25, discriminant square {}",
        rep.families_over_base, rep.families_over_extension, rep.discriminant_is_square
    );
    assert!(rep.consistent);
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
