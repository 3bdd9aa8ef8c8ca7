//! Arithmetic modulo primes below 2³²: residues fit in u64 and products in
//! u64 without overflow.

use super::{Mat, Scalar, UniPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

/// Three primes just below 2³¹.
pub const DEFAULT_PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue (p prime).
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero");
    pow(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn reduce_int(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
}

pub fn reduce(x: &Scalar, p: u64) -> Result<u64> {
    let d = reduce_int(x.denom(), p);
    if d == 0 {
        return Err(Error::BadPrime(p));
    }
    Ok(mul(reduce_int(x.numer(), p), inv(d, p), p))
}

pub fn reduce_mat(m: &Mat, p: u64) -> Result<Vec<Vec<u64>>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| reduce(x, p)).collect()).collect()
}

pub fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv_p = inv(rows[r][c], p);
        for i in r + 1..rows.len() {
            if rows[i][c] == 0 {
                continue;
            }
            let f = mul(rows[i][c], inv_p, p);
            for j in c..cols {
                let t = mul(f, rows[r][j], p);
                rows[i][j] = sub(rows[i][j], t, p);
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

pub fn det(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut d = 1;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if piv != c {
            m.swap(piv, c);
            d = sub(0, d, p);
        }
        d = mul(d, m[c][c], p);
        let inv_p = inv(m[c][c], p);
        for i in c + 1..n {
            if m[i][c] == 0 {
                continue;
            }
            let f = mul(m[i][c], inv_p, p);
            for j in c..n {
                let t = mul(f, m[c][j], p);
                m[i][j] = sub(m[i][j], t, p);
            }
        }
    }
    d
}

/// Rank of a rational matrix over several residue fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularRank {
    pub per_prime: Vec<(u64, usize)>,
    pub max: usize,
    /// Primes whose rank is below the maximum observed.
    pub unlucky: Vec<u64>,
}

pub fn modular_rank(m: &Mat, primes: &[u64]) -> Result<ModularRank> {
    let mut per_prime = Vec::with_capacity(primes.len());
    for &p in primes {
        per_prime.push((p, rank(reduce_mat(m, p)?, p)));
    }
    let max = per_prime.iter().map(|x| x.1).max().unwrap_or(0);
    let unlucky = per_prime.iter().filter(|x| x.1 < max).map(|x| x.0).collect();
    Ok(ModularRank { per_prime, max, unlucky })
}

/// Modular ranks compared with the exact rational rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifiedRank {
    pub exact: usize,
    pub modular: ModularRank,
    /// Primes whose rank falls below the exact rank.
    pub unlucky: Vec<u64>,
}

impl CertifiedRank {
    pub fn agrees(&self) -> bool {
        self.unlucky.is_empty() && self.modular.max == self.exact
    }
}

pub fn certified_rank(m: &Mat, primes: &[u64]) -> Result<CertifiedRank> {
    let modular = modular_rank(m, primes)?;
    let exact = m.rank();
    let unlucky = modular.per_prime.iter().filter(|x| x.1 < exact).map(|x| x.0).collect();
    Ok(CertifiedRank { exact, modular, unlucky })
}

/// Polynomial over F_p, ascending coefficients, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyP {
    pub c: Vec<u64>,
    pub p: u64,
}

impl PolyP {
    pub fn new(mut c: Vec<u64>, p: u64) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        PolyP { c, p }
    }

    pub fn from_unipoly(f: &UniPoly, p: u64) -> Result<Self> {
        Ok(PolyP::new(f.coeffs().iter().map(|x| reduce(x, p)).collect::<Result<_>>()?, p))
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&l) => {
                let li = inv(l, self.p);
                PolyP::new(self.c.iter().map(|&x| mul(x, li, self.p)).collect(), self.p)
            }
        }
    }

    pub fn rem(&self, d: &PolyP) -> PolyP {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.c.clone();
        let li = inv(d.c[dd], p);
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let f = mul(r[r.len() - 1], li, p);
            for (i, &x) in d.c.iter().enumerate() {
                r[k + i] = sub(r[k + i], mul(f, x, p), p);
            }
            r.pop();
        }
        PolyP::new(r, p)
    }

    pub fn gcd(a: &PolyP, b: &PolyP) -> PolyP {
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    /// Newton interpolation at distinct residues.
    pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> PolyP {
        let n = xs.len();
        let mut dd = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = sub(dd[i], dd[i - 1], p);
                let den = sub(xs[i], xs[i - j], p);
                dd[i] = mul(num, inv(den, p), p);
            }
        }
        // Horner on the Newton basis.
        let mut acc: Vec<u64> = vec![dd[n - 1]];
        for i in (0..n - 1).rev() {
            let mut next = vec![0u64; acc.len() + 1];
            for (k, &a) in acc.iter().enumerate() {
                next[k + 1] = add(next[k + 1], a, p);
                next[k] = sub(next[k], mul(a, xs[i], p), p);
            }
            next[0] = add(next[0], dd[i], p);
            acc = next;
        }
        PolyP::new(acc, p)
    }
}

/// Integer residue of a rational vector entry list, as a convenience.
pub fn reduce_vec(v: &[Scalar], p: u64) -> Result<Vec<u64>> {
    v.iter().map(|x| reduce(x, p)).collect()
}

pub fn is_zero_mod(x: &BigInt, p: u64) -> bool {
    (x % BigInt::from(p)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn default_primes_are_prime() {
        for p in DEFAULT_PRIMES {
            assert!(is_prime(p), "{p}");
            assert!(p < 1u64 << 31);
        }
    }

    #[test]
    fn identity_mod_small_primes() {
        let r = modular_rank(&Mat::identity(4), &[3, 5]).unwrap();
        assert_eq!(r.max, 4);
        assert!(r.unlucky.is_empty());
    }

    #[test]
    fn three_identity_is_unlucky_at_three() {
        let m = Mat::identity(3).scale(&q(3));
        let r = modular_rank(&m, &[3, 5]).unwrap();
        assert_eq!(r.per_prime[0], (3, 0));
        assert_eq!(r.unlucky, vec![3]);
        let c = certified_rank(&m, &[3]).unwrap();
        assert_eq!(c.exact, 3);
        assert_eq!(c.unlucky, vec![3]);
        assert!(!c.agrees());
    }

    #[test]
    fn bad_denominator_is_an_error() {
        let m = Mat::from_rows(&[vec![crate::linalg::frac(1, 3)]]).unwrap();
        assert_eq!(modular_rank(&m, &[3]), Err(Error::BadPrime(3)));
    }

    #[test]
    fn interpolation_and_gcd_mod_p() {
        let p = 101;
        let f = PolyP::new(vec![6, 5, 1], p); // (t+2)(t+3)
        let xs: Vec<u64> = (0..3).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| (6 + 5 * x + x * x) % p).collect();
        assert_eq!(PolyP::interpolate(&xs, &ys, p), f);
        let g = PolyP::new(vec![2, 1], p);
        assert_eq!(PolyP::gcd(&f, &g), g);
        assert_eq!(det(vec![vec![1, 2], vec![3, 4]], 7), 5);
    }
}
