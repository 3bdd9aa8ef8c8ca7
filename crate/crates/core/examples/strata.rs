// Y, Y-dual and Z strata at generic and planted points.

use epwlab::epw;
use epwlab::exterior;
use epwlab::lagrangian;
use epwlab::rng;

pub fn run_example() -> epwlab::Result<()> {
    let mut r = rng::sub_rng(3, "example/strata");

    let v = rng::rand_nonzero_vec(&mut r, 6);
    let planted = epw::plant_y2(&v, &mut r)?;
    let rep = epw::y_stratum(planted.a(), &v)?;
    println!("planted v: y-stratum {}", rep.ell);
    assert!(rep.ell >= 2);

    let generic = lagrangian::random_graph(1, &mut r)?;
    let w = rng::rand_nonzero_vec(&mut r, 6);
    println!("random v: y-stratum {}", epw::y_stratum(generic.a(), &w)?.ell);

    // ℓ = 1 means the hyperplane V₅ itself lies on the dual sextic.
    let dual = epw::y_dual_stratum(generic.a(), &exterior::standard_f())?;
    println!("V5 = ker e5*: dual stratum {}", dual.ell);
    assert_eq!(dual.ell, 1);

    let u3: Vec<_> = (0..3).map(|_| rng::rand_vec(&mut r, 6)).collect();
    let z = epw::plant_z1(&u3, &mut r)?;
    let zr = epw::z_stratum(z.a(), &u3)?;
    println!("planted U3: z-stratum {}", zr.ell);
    assert!(zr.ell >= 1);
    assert_eq!(zr.ell, epw::z_stratum_contraction(z.a(), &u3)?.ell);
    println!("witness rows: {}", zr.witness.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> epwlab::Result<()> {
    run_example()
}
