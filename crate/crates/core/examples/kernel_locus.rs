// The kernel locus Σ₁, isotropic 3-spaces and contact hyperplanes.

use epwlab::epw;
use epwlab::exterior;
use epwlab::lagrangian;
use epwlab::rng;

pub fn run_example() -> epwlab::Result<()> {
    let f = exterior::standard_f();
    let mut r = rng::sub_rng(5, "example/sigma");

    let l1 = lagrangian::random_graph(1, &mut r)?;
    let rep = epw::kernel_locus(l1.a(), &f, &mut r)?;
    println!("ell = 1: kernel point on Y_A with stratum {}", rep.points[0].y_ell);
    assert!(rep.all_checks_pass());

    let l2 = lagrangian::random_graph(2, &mut r)?;
    let rep = epw::kernel_locus(l2.a(), &f, &mut r)?;
    let conic = rep.conic.clone().expect("ell = 2 runs the conic check");
    println!("ell = 2: {} points span a plane of dim {}, conic monomial rank {}", rep.points.len(), conic.span_dim, conic.monomial_rank);
    assert!(conic.on_conic_not_line());

    let iso = epw::prz2_fiber_samples(l1.a(), &f, 5, &mut r)?;
    println!("isotropic 3-spaces: memberships {:?}, tangent dim {}", iso.memberships, iso.tangent_dim);

    let v = rng::rand_nonzero_vec(&mut r, 6);
    let planted = epw::plant_y2(&v, &mut r)?;
    let contact = epw::contact_hyperplanes(planted.a(), &v, 3, &mut r)?;
    println!("contact covectors: {} samples, all valid {}", contact.samples.len(), contact.all_pass());
    assert!(contact.all_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
