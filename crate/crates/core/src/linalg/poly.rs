use super::{q, Mat, Scalar};
use num_traits::{One, Zero};
use std::fmt;

/// Univariate polynomial over ℚ, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    c: Vec<Scalar>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| match i {
                0 => format!("{x}"),
                1 => format!("({x})t"),
                _ => format!("({x})t^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Scalar::one())
    }

    pub fn constant(x: Scalar) -> Self {
        UniPoly::from_coeffs(vec![x])
    }

    /// The polynomial t.
    pub fn t() -> Self {
        UniPoly::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    /// a + b·t
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        UniPoly::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        UniPoly::from_coeffs(super::vec_q(c))
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// None is the zero polynomial's degree sentinel.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.c.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.c.iter().rev().fold(Scalar::zero(), |acc, a| acc * x + a)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        UniPoly::from_coeffs(self.c.iter().map(|x| x * s).collect())
    }

    pub fn add(&self, o: &UniPoly) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = Scalar::zero();
        UniPoly::from_coeffs(
            (0..n).map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z)).collect(),
        )
    }

    pub fn sub(&self, o: &UniPoly) -> Self {
        self.add(&o.scale(&q(-1)))
    }

    pub fn mul(&self, o: &UniPoly) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn derivative(&self) -> Self {
        UniPoly::from_coeffs(self.c.iter().enumerate().skip(1).map(|(i, x)| x * q(i as i64)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => UniPoly::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        if self.c.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let lead_inv = d.c[dd].recip();
        let mut r = self.c.clone();
        let mut quo = vec![Scalar::zero(); r.len() - dd];
        for k in (0..quo.len()).rev() {
            let f = &r[k + dd] * &lead_inv;
            if !f.is_zero() {
                for (i, x) in d.c.iter().enumerate() {
                    r[k + i] -= &f * x;
                }
            }
            quo[k] = f;
        }
        r.truncate(dd);
        (UniPoly::from_coeffs(quo), UniPoly::from_coeffs(r))
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let r = x.div_rem(&y).1;
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    /// Squarefree iff gcd(p, p′) is constant.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && UniPoly::gcd(self, &self.derivative()).degree() == Some(0)
    }

    /// Multiplicity of the root t₀ (0 when p(t₀) ≠ 0); None for the zero polynomial.
    pub fn root_multiplicity(&self, t0: &Scalar) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lin = UniPoly::linear(-t0.clone(), Scalar::one());
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (quo, r) = p.div_rem(&lin);
            if !r.is_zero() {
                return Some(m);
            }
            m += 1;
            p = quo;
        }
    }

    /// Newton interpolation through (xᵢ, yᵢ) with distinct xᵢ.
    pub fn interpolate(xs: &[Scalar], ys: &[Scalar]) -> UniPoly {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len();
        let mut dd = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut p = UniPoly::constant(dd[n.saturating_sub(1)].clone());
        for i in (0..n.saturating_sub(1)).rev() {
            p = p.mul(&UniPoly::linear(-xs[i].clone(), Scalar::one())).add(&UniPoly::constant(dd[i].clone()));
        }
        p
    }

    /// Substitute t ↦ t + s.
    pub fn shift(&self, s: &Scalar) -> UniPoly {
        let lin = UniPoly::linear(s.clone(), Scalar::one());
        self.c.iter().rev().fold(UniPoly::zero(), |acc, a| acc.mul(&lin).add(&UniPoly::constant(a.clone())))
    }
}

/// Determinant of a square matrix of polynomials by evaluation at D+1 points
/// and interpolation, D being the sum of the row degree bounds.
pub fn det_poly(m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "det_poly needs a square matrix");
    let mut bound = 0usize;
    for row in m {
        match row.iter().filter_map(|p| p.degree()).max() {
            Some(d) => bound += d,
            None => return UniPoly::zero(),
        }
    }
    let xs: Vec<Scalar> = (0..=bound as i64).map(q).collect();
    let ys: Vec<Scalar> = xs
        .iter()
        .map(|x| Mat::from_fn(n, n, |i, j| m[i][j].eval(x)).det())
        .collect();
    UniPoly::interpolate(&xs, &ys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    #[test]
    fn diag_t_t_gives_t_squared() {
        let t = UniPoly::t();
        let z = UniPoly::zero();
        let d = det_poly(&[vec![t.clone(), z.clone()], vec![z, t.clone()]]);
        assert_eq!(d, UniPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn upper_triangular_companion() {
        let t = UniPoly::t();
        let d = det_poly(&[vec![t.clone(), UniPoly::one()], vec![UniPoly::zero(), t]]);
        assert_eq!(d, UniPoly::from_i64(&[0, 0, 1]));
    }

    #[test]
    fn zero_row_gives_zero() {
        let d = det_poly(&[vec![UniPoly::zero(), UniPoly::zero()], vec![UniPoly::one(), UniPoly::t()]]);
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (t-1)(t-2) and (t-1)(t+3)
        let a = UniPoly::from_i64(&[2, -3, 1]);
        let b = UniPoly::from_i64(&[-3, 2, 1]);
        assert_eq!(UniPoly::gcd(&a, &b), UniPoly::from_i64(&[-1, 1]));
        let (qq, r) = a.mul(&b).div_rem(&a);
        assert_eq!(qq, b);
        assert!(r.is_zero());
        let (qq, r) = UniPoly::from_i64(&[1, 0, 1]).div_rem(&UniPoly::from_i64(&[0, 2]));
        assert_eq!(qq, UniPoly::from_coeffs(vec![q(0), frac(1, 2)]));
        assert_eq!(r, UniPoly::one());
    }

    #[test]
    fn multiplicity_and_squarefree() {
        let p = UniPoly::from_i64(&[0, 0, 1]).mul(&UniPoly::from_i64(&[1, 1]));
        assert_eq!(p.root_multiplicity(&q(0)), Some(2));
        assert_eq!(p.root_multiplicity(&q(-1)), Some(1));
        assert_eq!(p.root_multiplicity(&q(5)), Some(0));
        assert!(!p.is_squarefree());
        assert!(UniPoly::from_i64(&[-2, 0, 1]).is_squarefree());
    }

    #[test]
    fn interpolation_roundtrip_and_shift() {
        let p = UniPoly::from_i64(&[3, -1, 0, 2]);
        let xs: Vec<Scalar> = (0..4).map(q).collect();
        let ys: Vec<Scalar> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(&xs, &ys), p);
        let s = p.shift(&q(2));
        assert_eq!(s.eval(&q(1)), p.eval(&q(3)));
    }
}
