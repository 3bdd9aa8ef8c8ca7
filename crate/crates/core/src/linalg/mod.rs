//! Exact rational and integer linear algebra, univariate polynomials and the
//! modular mirrors used to cross-check ranks.

mod intmat;
mod mat;
pub mod modp;
mod poly;
mod subspace;

pub use intmat::{smith_normal_form, IntMat, Smith};
pub use mat::{rank_kernel, Mat};
pub use modp::{certified_rank, modular_rank, CertifiedRank, ModularRank, DEFAULT_PRIMES};
pub use poly::{det_poly, UniPoly};
pub use subspace::{subspace_intersect, Subspace};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn q(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: "p/q", or "p" when q = 1.
pub fn fmt_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
    let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    Ok(Scalar::new(n, d))
}

pub fn vec_q(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| q(x)).collect()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn scale_vec(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Linear combination Σ cᵢ·vᵢ.
pub fn combine(coeffs: &[Scalar], vecs: &[Vec<Scalar>], n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (c, v) in coeffs.iter().zip(vecs) {
        axpy(&mut out, c, v);
    }
    out
}

/// Multiply by the lcm of denominators and divide by the gcd of numerators,
/// giving a primitive integer vector on the same line.
pub fn primitive_integer(v: &[Scalar]) -> Vec<BigInt> {
    use num_integer::Integer;
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Scalar::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Scale a vector so its first nonzero entry is 1.
pub fn normalize_projective(v: &[Scalar]) -> Vec<Scalar> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(p) => {
            let inv = p.recip();
            scale_vec(v, &inv)
        }
        None => v.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_text_form() {
        assert_eq!(fmt_scalar(&frac(6, -4)), "-3/2");
        assert_eq!(fmt_scalar(&q(5)), "5");
        assert_eq!(parse_scalar("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse_scalar("4/2").unwrap(), q(2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn primitive_integer_clears_content() {
        let v = vec![frac(1, 2), frac(-3, 4), q(0)];
        let p = primitive_integer(&v);
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }
}
