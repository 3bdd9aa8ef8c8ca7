use super::{Mat, Scalar};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rectangular matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged integer matrix");
        IntMat { rows: rows.len(), cols, data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn from_rows(rows: &[Vec<BigInt>], cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged integer matrix".into()));
        }
        Ok(IntMat { rows: rows.len(), cols, data: rows.iter().flatten().cloned().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMat { rows, cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &IntMat) -> IntMat {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        IntMat::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                BigInt::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> IntMat {
        IntMat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, o: &IntMat) -> IntMat {
        assert_eq!(self.cols, o.rows, "integer product shape");
        IntMat::from_fn(self.rows, o.cols, |i, j| {
            (0..self.cols).fold(BigInt::zero(), |acc, k| acc + self.get(i, k) * o.get(k, j))
        })
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn scale(&self, c: &BigInt) -> IntMat {
        IntMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_rational(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| Scalar::from_integer(self.get(i, j).clone()))
    }

    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        if m.is_empty() {
            return BigInt::one();
        }
        super::mat::bareiss_det(&mut m)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f · row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * f;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += f · col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * f;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }
}

/// Smith form: `u · m · v = diag(d)` with d₁ | d₂ | … and u, v unimodular.
/// `d` has length min(rows, cols); trailing zeros record rank deficiency.
#[derive(Clone, Debug)]
pub struct Smith {
    pub d: Vec<BigInt>,
    pub u: IntMat,
    pub v: IntMat,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.d.iter().filter(|x| !x.is_zero()).count()
    }

    /// Invariant factors greater than one.
    pub fn nontrivial(&self) -> Vec<BigInt> {
        self.d.iter().filter(|x| !x.is_zero() && !x.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMat) -> Smith {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMat::identity(r);
    let mut v = IntMat::identity(c);
    let n = r.min(c);
    for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = a.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(a, u, v, n);
            };
            if pi != t {
                a.swap_rows(pi, t);
                u.swap_rows(pi, t);
            }
            if pj != t {
                a.swap_cols(pj, t);
                v.swap_cols(pj, t);
            }
            let p = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let f = -a.get(i, t).div_floor(&p);
                a.add_row(i, t, &f);
                u.add_row(i, t, &f);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let f = -a.get(t, j).div_floor(&p);
                a.add_col(j, t, &f);
                v.add_col(j, t, &f);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(a, u, v, n)
}

fn finish(a: IntMat, u: IntMat, v: IntMat, n: usize) -> Smith {
    let d = (0..n).map(|i| a.get(i, i).clone()).collect();
    Smith { d, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMat) -> Smith {
        let s = smith_normal_form(m);
        let prod = s.u.mul(m).mul(&s.v);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                let expect = if i == j && i < s.d.len() { s.d[i].clone() } else { BigInt::zero() };
                assert_eq!(prod.get(i, j), &expect);
            }
        }
        assert!(s.u.det().abs().is_one());
        assert!(s.v.det().abs().is_one());
        for w in s.d.windows(2) {
            assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn identity_gives_ones() {
        let s = check(&IntMat::identity(4));
        assert!(s.d.iter().all(|x| x.is_one()));
    }

    #[test]
    fn diagonal_two_two() {
        let s = check(&IntMat::from_i64(&[vec![2, 0], vec![0, 2]]));
        assert_eq!(s.d, vec![BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn non_diagonal_and_rectangular() {
        let s = check(&IntMat::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(s.d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let s = check(&IntMat::from_i64(&[vec![1, 2, 3], vec![4, 5, 6]]));
        assert_eq!(s.d, vec![BigInt::from(1), BigInt::from(3)]);
        let s = check(&IntMat::from_i64(&[vec![2, 3], vec![4, 6], vec![0, 0]]));
        assert_eq!(s.rank(), 1);
    }
}
