//! Linear subspaces on quadrics: corank, the closed-form dimension and
//! component structure of the variety of k-planes, and a brute-force
//! enumeration oracle over small finite fields.
//!
//! Projective k-planes are (k+1)-dimensional totally singular subspaces.
//! Over a field of characteristic 2 a form is kept as its upper-triangular
//! coefficients, so Q is not recovered from the polar form alone.

use crate::linalg::{Mat, Scalar};
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::sync::Arc;

/// Enumeration guard on the number of candidate subspaces.
pub const WORK_GUARD: u128 = 5_000_000;

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// F_q for q ≤ 25: prime fields and F_{p²} = F_p[x]/(x² − n) (x² = x + 1 when p = 2).
/// Elements are 0..q; a + b·x is stored as a + p·b.
#[derive(Debug)]
pub struct FiniteField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

pub type Field = Arc<FiniteField>;

impl FiniteField {
    pub fn new(q: usize) -> Result<Field> {
        if q > 25 {
            return Err(Error::Unsupported(format!("field size {q} > 25")));
        }
        let (p, deg) = if is_prime(q) {
            (q, 1)
        } else if let Some(p) = (2..=5).find(|&p| p * p == q) {
            (p, 2)
        } else {
            return Err(Error::Unsupported(format!("field size {q}")));
        };
        // x² = n₀ + n₁·x
        let (n0, n1) = if deg == 1 {
            (0, 0)
        } else if p == 2 {
            (1, 1)
        } else {
            let squares: Vec<usize> = (1..p).map(|a| a * a % p).collect();
            ((2..p).find(|n| !squares.contains(n)).expect("odd p has a non-residue"), 0)
        };
        let split = |e: usize| (e % p, e / p);
        let join = |a: usize, b: usize| (a % p + p * (b % p)) as u8;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for x in 0..q {
            for y in 0..q {
                let (a, b) = split(x);
                let (c, d) = split(y);
                add[x * q + y] = join(a + c, b + d);
                // (a + bx)(c + dx) = ac + (ad + bc)x + bd·x²
                let bd = b * d;
                mul[x * q + y] = join(a * c + bd * n0, a * d + b * c + bd * n1);
            }
        }
        let neg = (0..q).map(|x| (0..q).find(|&y| add[x * q + y] == 0).unwrap() as u8).collect();
        let inv = (0..q).map(|x| if x == 0 { 0 } else { (1..q).find(|&y| mul[x * q + y] == 1).unwrap() as u8 }).collect();
        Ok(Arc::new(FiniteField { q, p, add, mul, neg, inv }))
    }

    pub fn size(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u8 {
        n.rem_euclid(self.p as i64) as u8
    }

    pub fn is_square(&self, a: u8) -> bool {
        (0..self.q as u8).any(|x| self.mul(x, x) == a)
    }

    pub fn dot(&self, x: &[u8], y: &[u8]) -> u8 {
        x.iter().zip(y).fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u8>>) -> Vec<usize> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, pr);
            let s = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, s);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    pub fn rank(&self, rows: &[Vec<u8>]) -> usize {
        self.rref(&mut rows.to_vec()).len()
    }

    /// Basis of {x : M x = 0} for M given by rows of length n.
    pub fn kernel(&self, rows: &[Vec<u8>], n: usize) -> Vec<Vec<u8>> {
        let mut r = rows.to_vec();
        let piv = self.rref(&mut r);
        let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u8; n];
                v[fc] = 1;
                for (i, &pc) in piv.iter().enumerate() {
                    v[pc] = self.neg(r[i][fc]);
                }
                v
            })
            .collect()
    }
}

/// Number of d-dimensional subspaces of F_q^m.
pub fn gaussian_binomial(m: usize, d: usize, q: u128) -> u128 {
    if d > m {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..d {
        num *= q.pow((m - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Q(x) = Σ_{i≤j} c_ij x_i x_j over a finite field.
#[derive(Clone, Debug)]
pub struct FfQuadric {
    pub field: Field,
    m: usize,
    upper: Vec<Vec<u8>>,
}

impl FfQuadric {
    /// Upper-triangular coefficients; entries below the diagonal must vanish.
    pub fn from_upper(field: Field, upper: &[Vec<i64>]) -> Result<Self> {
        let m = upper.len();
        if upper.iter().any(|r| r.len() != m) {
            return Err(Error::Shape("coefficient grid must be square".into()));
        }
        let mut c = vec![vec![0u8; m]; m];
        for i in 0..m {
            for j in 0..m {
                let x = field.from_int(upper[i][j]);
                if j < i && x != 0 {
                    return Err(Error::Shape("upper form has entries below the diagonal".into()));
                }
                c[i][j] = x;
            }
        }
        Ok(FfQuadric { field, m, upper: c })
    }

    /// Q(x) = xᵀGx for symmetric G.
    pub fn from_gram(field: Field, gram: &[Vec<i64>]) -> Result<Self> {
        let m = gram.len();
        if gram.iter().any(|r| r.len() != m) {
            return Err(Error::Shape("Gram matrix must be square".into()));
        }
        if (0..m).any(|i| (0..m).any(|j| gram[i][j] != gram[j][i])) {
            return Err(Error::NotSymmetric);
        }
        let upper: Vec<Vec<i64>> = (0..m)
            .map(|i| (0..m).map(|j| if j < i { 0 } else if j == i { gram[i][i] } else { 2 * gram[i][j] }).collect())
            .collect();
        FfQuadric::from_upper(field, &upper)
    }

    /// Same coefficients, read in an extension field (prime-subfield entries only).
    pub fn base_change(&self, field: Field) -> Result<Self> {
        if field.characteristic() != self.field.characteristic() || self.field.size() != self.field.characteristic() {
            return Err(Error::Unsupported("base change needs a prime base field of the same characteristic".into()));
        }
        Ok(FfQuadric { field, m: self.m, upper: self.upper.clone() })
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn eval(&self, x: &[u8]) -> u8 {
        let f = &self.field;
        let mut acc = 0;
        for i in 0..self.m {
            if x[i] == 0 {
                continue;
            }
            for j in i..self.m {
                let c = self.upper[i][j];
                if c != 0 && x[j] != 0 {
                    acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
                }
            }
        }
        acc
    }

    /// Polar matrix: B_ij = c_ij (i < j), B_ii = 2c_ii.
    pub fn polar_matrix(&self) -> Vec<Vec<u8>> {
        let f = &self.field;
        (0..self.m)
            .map(|i| {
                (0..self.m)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => self.upper[i][j],
                        std::cmp::Ordering::Greater => self.upper[j][i],
                        std::cmp::Ordering::Equal => f.add(self.upper[i][i], self.upper[i][i]),
                    })
                    .collect()
            })
            .collect()
    }

    pub fn polar(&self, x: &[u8], y: &[u8]) -> u8 {
        let b = self.polar_matrix();
        let by: Vec<u8> = b.iter().map(|r| self.field.dot(r, y)).collect();
        self.field.dot(x, &by)
    }

    /// Basis of the singular radical {x ∈ rad B : Q(x) = 0}.
    pub fn singular_radical(&self) -> Vec<Vec<u8>> {
        let f = &self.field;
        let rad = f.kernel(&self.polar_matrix(), self.m);
        if f.characteristic() != 2 || rad.is_empty() {
            return rad;
        }
        // Q is additive on rad B, so its zeros there form a subspace.
        let n = rad.len();
        let mut zeros = Vec::new();
        let total = f.size().pow(n as u32);
        for idx in 1..total {
            let mut c = idx;
            let mut v = vec![0u8; self.m];
            for b in &rad {
                let a = (c % f.size()) as u8;
                c /= f.size();
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi = f.add(*vi, f.mul(a, *bi));
                }
            }
            if self.eval(&v) == 0 {
                zeros.push(v);
            }
        }
        let mut rows = zeros;
        f.rref(&mut rows);
        rows
    }

    pub fn corank(&self) -> usize {
        self.singular_radical().len()
    }

    pub fn rank(&self) -> usize {
        self.m - self.corank()
    }

    pub fn is_totally_singular(&self, rows: &[Vec<u8>]) -> bool {
        let b = self.polar_matrix();
        rows.iter().all(|r| self.eval(r) == 0)
            && (0..rows.len()).all(|i| {
                let bi: Vec<u8> = b.iter().map(|row| self.field.dot(row, &rows[i])).collect();
                (i + 1..rows.len()).all(|j| self.field.dot(&bi, &rows[j]) == 0)
            })
    }

    /// Determinant of the Gram matrix G = B/2 (odd characteristic).
    pub fn discriminant(&self) -> Result<u8> {
        let f = &self.field;
        if f.characteristic() == 2 {
            return Err(Error::Unsupported("discriminant in characteristic 2".into()));
        }
        let half = f.inv(f.from_int(2));
        let mut g: Vec<Vec<u8>> = self.polar_matrix().iter().map(|r| r.iter().map(|&x| f.mul(x, half)).collect()).collect();
        let n = self.m;
        let mut det = 1u8;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| g[i][c] != 0) else { return Ok(0) };
            if p != c {
                g.swap(p, c);
                det = f.neg(det);
            }
            det = f.mul(det, g[c][c]);
            let s = f.inv(g[c][c]);
            for i in c + 1..n {
                let t = f.mul(g[i][c], s);
                for j in c..n {
                    let x = f.mul(t, g[c][j]);
                    g[i][j] = f.sub(g[i][j], x);
                }
            }
        }
        Ok(det)
    }
}

/// Quadratic form over ℚ given by a symmetric Gram matrix.
#[derive(Clone, Debug)]
pub struct RationalQuadric {
    pub gram: Mat,
}

impl RationalQuadric {
    pub fn new(gram: Mat) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(RationalQuadric { gram })
    }

    pub fn corank(&self) -> usize {
        self.gram.cols() - self.gram.rank()
    }

    /// (det, whether det is a nonzero rational square).
    pub fn discriminant_square_class(&self) -> (Scalar, bool) {
        let d = self.gram.det();
        let sq = |n: &num_bigint::BigInt| !n.is_negative() && {
            let r = n.sqrt();
            &(&r * &r) == n
        };
        let is_sq = !d.is_zero() && sq(d.numer()) && sq(d.denom());
        (d, is_sq)
    }
}

/// Corank of a rational Gram matrix.
pub fn corank(gram: &Mat) -> Result<usize> {
    Ok(RationalQuadric::new(gram.clone())?.corank())
}

/// Dimension of the Hilbert scheme of k-planes on a rank-r quadric in P^{m−1}
/// (k = 1, 2); None when the quadric contains no k-plane.
pub fn hilbert_dimension(m: usize, r: usize, k: usize) -> Result<Option<i64>> {
    if r == 0 || r > m {
        return Err(Error::Unsupported(format!("rank {r} outside 1..={m}")));
    }
    let (m_, r_) = (m as i64, r);
    let formula = match k {
        1 if r_ >= 3 => 2 * m_ - 7,
        1 => 2 * m_ - 6,
        2 if r_ >= 5 => 3 * m_ - 15,
        2 if r_ >= 3 => 3 * m_ - 14,
        2 => 3 * m_ - 12,
        _ => return Err(Error::Unsupported(format!("k = {k}"))),
    };
    let exists = k < m && (k + 1).saturating_sub(r / 2) <= m - r;
    Ok((exists && formula >= 0).then_some(formula))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyStructure {
    Empty,
    Single,
    /// Two disjoint families of maximal isotropic spaces.
    TwoFamilies,
    /// Two components meeting along a common locus (e.g. P³ ∪ P³).
    TwoComponents,
    /// The reduced quadric is a hyperplane counted twice.
    DoubleComponent,
    /// Every line of P² (the zero form).
    FullDualPlane,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyDescriptor {
    pub k: usize,
    pub structure: FamilyStructure,
    pub dim: Option<usize>,
    /// Minimal dim(Λ ∩ ker) of a k-plane Λ; the generic stratum.
    pub j_min: Option<usize>,
}

impl FamilyDescriptor {
    pub fn components(&self) -> usize {
        match self.structure {
            FamilyStructure::Empty => 0,
            FamilyStructure::TwoFamilies | FamilyStructure::TwoComponents => 2,
            _ => 1,
        }
    }
}

/// k-planes on a quadric in P^{m−1} of corank c, over an algebraically closed field.
///
/// A k-plane Λ meets the vertex K in dimension j and maps onto a totally singular
/// d-space of the rank-r core, d = k+1−j, so j ≥ k+1−⌊r/2⌋. The minimal j gives
/// the open stratum, of dimension j(c−j) + d(2r−3d−1)/2 + d(c−j); the core's
/// maximal isotropic spaces split into two families exactly when 2d = r.
pub fn classify_linear_families(m: usize, c: usize, k: usize) -> FamilyDescriptor {
    let empty = FamilyDescriptor { k, structure: FamilyStructure::Empty, dim: None, j_min: None };
    let n = k + 1;
    if c > m || n > m {
        return empty;
    }
    let r = m - c;
    let j = n.saturating_sub(r / 2);
    if j > c {
        return empty;
    }
    let d = n - j;
    let dim = j * (c - j) + (d * (2 * r) - d * (3 * d + 1)) / 2 + d * (c - j);
    let structure = if r == 0 && m == 3 && k == 1 {
        FamilyStructure::FullDualPlane
    } else if r == 1 {
        FamilyStructure::DoubleComponent
    } else if d >= 1 && 2 * d == r {
        if j == c {
            FamilyStructure::TwoFamilies
        } else {
            FamilyStructure::TwoComponents
        }
    } else {
        FamilyStructure::Single
    };
    FamilyDescriptor { k, structure, dim: Some(dim), j_min: Some(j) }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::lagrangian::combinations(n, k)
}

/// All projective k-planes on the quadric, as RREF row bases.
pub fn enumerate_linear_spaces_ff(qf: &FfQuadric, k: usize) -> Result<Vec<Vec<Vec<u8>>>> {
    let m = qf.dim();
    let n = k + 1;
    if n > m {
        return Ok(Vec::new());
    }
    let q = qf.field.size();
    let work = gaussian_binomial(m, n, q as u128);
    if work > WORK_GUARD {
        return Err(Error::TooLarge(format!("{work} candidate subspaces of F_{q}^{m}")));
    }
    let patterns = combinations(m, n);
    let polar = qf.polar_matrix();
    let out: Vec<Vec<Vec<Vec<u8>>>> = patterns
        .par_iter()
        .map(|piv| {
            let mut found = Vec::new();
            let mut rows: Vec<Vec<u8>> = Vec::with_capacity(n);
            fill_rows(qf, &polar, piv, &mut rows, &mut found);
            found
        })
        .collect();
    Ok(out.into_iter().flatten().collect())
}

/// Backtracking over the free entries of one pivot pattern, row by row.
fn fill_rows(qf: &FfQuadric, polar: &[Vec<u8>], piv: &[usize], rows: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
    let i = rows.len();
    if i == piv.len() {
        out.push(rows.clone());
        return;
    }
    let m = qf.dim();
    let q = qf.field.size();
    let free: Vec<usize> = (piv[i] + 1..m).filter(|c| !piv.contains(c)).collect();
    let total = q.pow(free.len() as u32);
    let f = &qf.field;
    for idx in 0..total {
        let mut row = vec![0u8; m];
        row[piv[i]] = 1;
        let mut c = idx;
        for &col in &free {
            row[col] = (c % q) as u8;
            c /= q;
        }
        if qf.eval(&row) != 0 {
            continue;
        }
        let br: Vec<u8> = polar.iter().map(|r| f.dot(r, &row)).collect();
        if rows.iter().any(|prev| f.dot(&br, prev) != 0) {
            continue;
        }
        rows.push(row);
        fill_rows(qf, polar, piv, rows, out);
        rows.pop();
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub q: usize,
    pub k: usize,
    pub count: usize,
    pub families: usize,
    /// Minimal dim(Λ ∩ K) among the enumerated planes.
    pub j_min: Option<usize>,
    pub corank: usize,
}

/// Components of the incidence graph of the generic k-planes (minimal j = dim(Λ∩K)).
/// Planes are grouped by their image Λ+K in the core; two images π₁, π₂ of
/// dimension d are adjacent when e = d − dim(π₁∩π₂) ≤ 2, and e must be even when
/// 2d = r so the two families of maximal isotropic spaces stay apart.
pub fn family_components(qf: &FfQuadric, planes: &[Vec<Vec<u8>>]) -> (usize, Option<usize>) {
    if planes.is_empty() {
        return (0, None);
    }
    let f = &qf.field;
    let kern = qf.singular_radical();
    let c = kern.len();
    let r = qf.dim() - c;
    let images: Vec<(usize, Vec<Vec<u8>>)> = planes
        .iter()
        .map(|p| {
            let mut s: Vec<Vec<u8>> = p.iter().chain(kern.iter()).cloned().collect();
            f.rref(&mut s);
            (p.len() + c - s.len(), s)
        })
        .collect();
    let j_min = images.iter().map(|x| x.0).min().expect("nonempty");
    let mut distinct: Vec<Vec<Vec<u8>>> = images.into_iter().filter(|x| x.0 == j_min).map(|x| x.1).collect();
    distinct.sort();
    distinct.dedup();
    let d = planes[0].len() - j_min;
    let mut uf = UnionFind((0..distinct.len()).collect());
    for a in 0..distinct.len() {
        for b in a + 1..distinct.len() {
            let sum: Vec<Vec<u8>> = distinct[a].iter().chain(distinct[b].iter()).cloned().collect();
            let meet = 2 * (d + c) - f.rank(&sum) - c;
            let e = d - meet;
            if e <= 2 && (2 * d != r || e % 2 == 0) {
                uf.union(a, b);
            }
        }
    }
    let roots: std::collections::BTreeSet<usize> = (0..distinct.len()).map(|x| uf.find(x)).collect();
    (roots.len(), Some(j_min))
}

pub fn enumeration_report(qf: &FfQuadric, k: usize) -> Result<EnumerationReport> {
    let planes = enumerate_linear_spaces_ff(qf, k)?;
    let (families, j_min) = family_components(qf, &planes);
    Ok(EnumerationReport { q: qf.field.size(), k, count: planes.len(), families, j_min, corank: qf.corank() })
}

/// Split form of rank r with corank c in m = r + c variables:
/// x₀x₁ + x₂x₃ + … (+ x²_{r−1} when r is odd), vertex on the last c coordinates.
pub fn split_form(field: Field, r: usize, c: usize) -> FfQuadric {
    let m = r + c;
    let mut u = vec![vec![0i64; m]; m];
    for i in 0..r / 2 {
        u[2 * i][2 * i + 1] = 1;
    }
    if r % 2 == 1 {
        u[r - 1][r - 1] = 1;
    }
    FfQuadric::from_upper(field, &u).expect("square grid")
}

/// Number of d-dim totally singular subspaces of a rank-r split core,
/// counted through the cone decomposition Σ_j [c j]_q · N_core(n−j) · q^{(n−j)(c−j)}.
pub fn cone_count(field: &Field, r: usize, c: usize, n: usize) -> Result<u128> {
    let q = field.size() as u128;
    let mut total = 0u128;
    for j in 0..=n.min(c) {
        let d = n - j;
        let core = if r == 0 {
            u128::from(d == 0)
        } else {
            let cf = split_form(field.clone(), r, 0);
            if d == 0 {
                1
            } else {
                enumerate_linear_spaces_ff(&cf, d - 1)?.len() as u128
            }
        };
        total += gaussian_binomial(c, j, q) * core * q.pow((d * (c - j)) as u32);
    }
    Ok(total)
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscriminantReport {
    pub families_over_base: usize,
    pub families_over_extension: usize,
    pub count_over_base: usize,
    pub discriminant: u8,
    pub discriminant_is_square: bool,
    /// families over F_p = 2 exactly when the discriminant is a square.
    pub consistent: bool,
}

/// Rulings of a smooth quadric surface over F_p against the square class of its discriminant.
pub fn family_count_vs_discriminant(qf: &FfQuadric) -> Result<DiscriminantReport> {
    if qf.dim() != 4 {
        return Err(Error::Unsupported("quadric surfaces only (m = 4)".into()));
    }
    if qf.corank() != 0 {
        return Err(Error::Degenerate("singular quadric".into()));
    }
    let disc = qf.discriminant()?;
    let is_sq = qf.field.is_square(disc);
    let base = enumeration_report(qf, 1)?;
    let p = qf.field.size();
    let ext = enumeration_report(&qf.base_change(FiniteField::new(p * p)?)?, 1)?;
    Ok(DiscriminantReport {
        families_over_base: base.families,
        families_over_extension: ext.families,
        count_over_base: base.count,
        discriminant: disc,
        discriminant_is_square: is_sq,
        consistent: (base.families == 2) == is_sq && ext.families == 2,
    })
}

/// round(ln(c₅/c₃) / ln(5/3)): the growth exponent between two field sizes.
pub fn growth_exponent(count_small: usize, q_small: usize, count_large: usize, q_large: usize) -> Option<i64> {
    if count_small == 0 || count_large == 0 {
        return None;
    }
    let r = (count_large as f64 / count_small as f64).ln() / (q_large as f64 / q_small as f64).ln();
    Some(r.round() as i64)
}
