//! Exterior algebra of V₆ = ℚ⁶ with basis e₀ … e₅.
//!
//! Grade-k coordinates are indexed by k-subsets of {0..5} in lexicographic
//! order of their sorted tuples. Signs come from sorting permutations: for
//! disjoint S, T the product e_S ∧ e_T is (−1)^#{(s,t) ∈ S×T : s > t} e_{S∪T}.
//! ⋀⁶ is identified with ℚ through e₀∧…∧e₅ and ⋀⁵ with V₆^∨ through
//! x ↦ coefficient of x∧w.

use crate::linalg::{self, q, Mat, Scalar, Subspace};
use crate::{Error, Result};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

pub const N: usize = 6;

struct Tables {
    subsets: Vec<Vec<u8>>,
    index: [usize; 64],
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(|| {
        let mut subsets = vec![Vec::new(); N + 1];
        let mut index = [usize::MAX; 64];
        for (k, slot) in subsets.iter_mut().enumerate() {
            let mut out = Vec::new();
            lex_subsets(0, k, 0, &mut out);
            for (i, &m) in out.iter().enumerate() {
                index[m as usize] = i;
            }
            *slot = out;
        }
        Tables { subsets, index }
    })
}

fn lex_subsets(start: usize, k: usize, acc: u8, out: &mut Vec<u8>) {
    if k == 0 {
        out.push(acc);
        return;
    }
    for i in start..=N - k {
        lex_subsets(i + 1, k - 1, acc | (1 << i), out);
    }
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Bitmasks of the k-subsets in basis order.
pub fn subsets(k: usize) -> &'static [u8] {
    &tables().subsets[k]
}

pub fn index_of(mask: u8) -> usize {
    tables().index[mask as usize]
}

/// Sorted element list of a mask.
pub fn elements(mask: u8) -> Vec<usize> {
    (0..N).filter(|&i| mask & (1 << i) != 0).collect()
}

/// Sign of e_S ∧ e_T for disjoint masks.
pub fn wedge_sign(s: u8, t: u8) -> i64 {
    let mut inv = 0;
    for i in elements(s) {
        inv += (t & ((1u8 << i) - 1)).count_ones();
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Element of ⋀^k V₆ (or of ⋀^k V₆^∨, which uses the same conventions).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KVector {
    grade: usize,
    coords: Vec<Scalar>,
}

#[derive(Serialize, Deserialize)]
struct KVectorJson {
    grade: usize,
    coords: Vec<String>,
}

impl Serialize for KVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KVectorJson { grade: self.grade, coords: self.coords.iter().map(linalg::fmt_scalar).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = KVectorJson::deserialize(d)?;
        let coords = j
            .coords
            .iter()
            .map(|s| linalg::parse_scalar(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        KVector::new(j.grade, coords).map_err(serde::de::Error::custom)
    }
}

impl KVector {
    pub fn new(grade: usize, coords: Vec<Scalar>) -> Result<Self> {
        if grade > N {
            return Err(Error::GradeOverflow(grade, 0));
        }
        if coords.len() != binom(N, grade) {
            return Err(Error::Shape(format!(
                "grade {grade} needs {} coordinates, got {}",
                binom(N, grade),
                coords.len()
            )));
        }
        Ok(KVector { grade, coords })
    }

    pub fn zero(grade: usize) -> Self {
        KVector { grade, coords: vec![Scalar::zero(); binom(N, grade)] }
    }

    pub fn scalar(x: Scalar) -> Self {
        KVector { grade: 0, coords: vec![x] }
    }

    /// e_{i₁} ∧ … ∧ e_{i_k} for arbitrary (possibly unsorted) indices.
    pub fn basis(idx: &[usize]) -> Self {
        let mut out = KVector::scalar(Scalar::one());
        for &i in idx {
            out = out.wedge(&KVector::unit(i)).expect("grade ≤ 6");
        }
        out
    }

    pub fn unit(i: usize) -> Self {
        let mut c = vec![Scalar::zero(); N];
        c[i] = Scalar::one();
        KVector { grade: 1, coords: c }
    }

    pub fn vector(c: &[Scalar]) -> Result<Self> {
        KVector::new(1, c.to_vec())
    }

    pub fn from_i64(grade: usize, c: &[i64]) -> Result<Self> {
        KVector::new(grade, linalg::vec_q(c))
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.coords)
    }

    pub fn add(&self, o: &KVector) -> Result<KVector> {
        self.same_grade(o)?;
        Ok(KVector { grade: self.grade, coords: linalg::add_vec(&self.coords, &o.coords) })
    }

    pub fn sub(&self, o: &KVector) -> Result<KVector> {
        self.same_grade(o)?;
        Ok(KVector { grade: self.grade, coords: linalg::sub_vec(&self.coords, &o.coords) })
    }

    pub fn scale(&self, c: &Scalar) -> KVector {
        KVector { grade: self.grade, coords: linalg::scale_vec(&self.coords, c) }
    }

    fn same_grade(&self, o: &KVector) -> Result<()> {
        if self.grade != o.grade {
            return Err(Error::GradeMismatch { expected: self.grade, found: o.grade });
        }
        Ok(())
    }

    pub fn wedge(&self, o: &KVector) -> Result<KVector> {
        let g = self.grade + o.grade;
        if g > N {
            return Err(Error::GradeOverflow(self.grade, o.grade));
        }
        let mut out = vec![Scalar::zero(); binom(N, g)];
        for (i, &s) in subsets(self.grade).iter().enumerate() {
            let a = &self.coords[i];
            if a.is_zero() {
                continue;
            }
            for (j, &t) in subsets(o.grade).iter().enumerate() {
                let b = &o.coords[j];
                if b.is_zero() || s & t != 0 {
                    continue;
                }
                let prod = a * b;
                let k = index_of(s | t);
                if wedge_sign(s, t) > 0 {
                    out[k] += prod;
                } else {
                    out[k] -= prod;
                }
            }
        }
        Ok(KVector { grade: g, coords: out })
    }

    /// Interior product ι_f with a covector f:
    /// ι_f(e_S) = Σ_{i∈S} (−1)^{#{s∈S : s<i}} fᵢ e_{S∖i}.
    pub fn contract(&self, f: &[Scalar]) -> Result<KVector> {
        if f.len() != N {
            return Err(Error::Shape("covector must have 6 entries".into()));
        }
        if self.grade == 0 {
            return Err(Error::GradeMismatch { expected: 1, found: 0 });
        }
        let mut out = vec![Scalar::zero(); binom(N, self.grade - 1)];
        for (j, &s) in subsets(self.grade).iter().enumerate() {
            let a = &self.coords[j];
            if a.is_zero() {
                continue;
            }
            for (pos, i) in elements(s).into_iter().enumerate() {
                if f[i].is_zero() {
                    continue;
                }
                let k = index_of(s & !(1 << i));
                let t = a * &f[i];
                if pos % 2 == 0 {
                    out[k] += t;
                } else {
                    out[k] -= t;
                }
            }
        }
        Ok(KVector { grade: self.grade - 1, coords: out })
    }

    /// Coefficient on e₀∧…∧e₅ of a top-degree vector.
    pub fn top_coefficient(&self) -> Result<Scalar> {
        if self.grade != N {
            return Err(Error::GradeMismatch { expected: N, found: self.grade });
        }
        Ok(self.coords[0].clone())
    }
}

pub fn wedge(a: &KVector, b: &KVector) -> Result<KVector> {
    a.wedge(b)
}

fn require_grade(a: &KVector, g: usize) -> Result<()> {
    if a.grade != g {
        return Err(Error::GradeMismatch { expected: g, found: a.grade });
    }
    Ok(())
}

/// ω(a, b) = coefficient of a∧b on e₀…₅, for a, b ∈ ⋀³V₆.
pub fn symplectic_form(a: &KVector, b: &KVector) -> Result<Scalar> {
    require_grade(a, 3)?;
    require_grade(b, 3)?;
    Ok(omega(&a.coords, &b.coords))
}

/// (partner index, sign) pairs: ω(e_i, e_j) is nonzero only for j = partner(i).
fn omega_pairs() -> &'static [(usize, i64)] {
    static P: OnceLock<Vec<(usize, i64)>> = OnceLock::new();
    P.get_or_init(|| {
        subsets(3).iter().map(|&s| (index_of(!s & 0x3f), wedge_sign(s, !s & 0x3f))).collect()
    })
}

/// ω on raw ⋀³ coordinate vectors of length 20.
pub fn omega(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (i, &(j, s)) in omega_pairs().iter().enumerate() {
        if a[i].is_zero() || b[j].is_zero() {
            continue;
        }
        let t = &a[i] * &b[j];
        if s > 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

/// Gram matrix of ω in the coordinate basis of ⋀³V₆.
pub fn omega_matrix() -> Mat {
    let pairs = omega_pairs();
    Mat::from_fn(20, 20, |i, j| if pairs[i].0 == j { q(pairs[i].1) } else { Scalar::zero() })
}

/// The functional x ↦ ω(a, x) as a row vector.
pub fn omega_row(a: &[Scalar]) -> Vec<Scalar> {
    let pairs = omega_pairs();
    let mut out = vec![Scalar::zero(); 20];
    for (i, &(j, s)) in pairs.iter().enumerate() {
        out[j] = if s > 0 { a[i].clone() } else { -a[i].clone() };
    }
    out
}

/// Symplectic orthogonal {x : ω(s, x) = 0 for all s ∈ S} of a subspace of ⋀³V₆.
pub fn omega_orthogonal(s: &Subspace) -> Subspace {
    if s.dim() == 0 {
        return Subspace::full(20);
    }
    let rows: Vec<Vec<Scalar>> = s.basis().iter().map(|b| omega_row(b)).collect();
    Mat::from_rows(&rows).expect("rows of length 20").kernel()
}

/// Matrix of x ↦ v∧x from ⋀^k to ⋀^{k+1}.
pub fn wedge_matrix(v: &KVector, k: usize) -> Result<Mat> {
    if v.grade + k > N {
        return Err(Error::GradeOverflow(v.grade, k));
    }
    let cols: Vec<Vec<Scalar>> = subsets(k)
        .iter()
        .map(|&s| v.wedge(&basis_mask(k, s)).map(|w| w.coords))
        .collect::<Result<_>>()?;
    Ok(Mat::from_fn(binom(N, v.grade + k), binom(N, k), |i, j| cols[j][i].clone()))
}

fn basis_mask(k: usize, s: u8) -> KVector {
    let mut c = vec![Scalar::zero(); binom(N, k)];
    c[index_of(s)] = Scalar::one();
    KVector { grade: k, coords: c }
}

/// 15×20 matrix of a ↦ v∧a on ⋀³V₆; its kernel is F_v = v∧⋀²V₆.
pub fn wedge_map_matrix(v: &KVector) -> Result<Mat> {
    require_grade(v, 1)?;
    if v.is_zero() {
        return Err(Error::ZeroInput("v"));
    }
    wedge_matrix(v, 3)
}

/// Matrix of the contraction ι_f from ⋀^k to ⋀^{k−1}.
pub fn contraction_matrix(f: &[Scalar], k: usize) -> Result<Mat> {
    let cols: Vec<Vec<Scalar>> = subsets(k)
        .iter()
        .map(|&s| basis_mask(k, s).contract(f).map(|w| w.coords))
        .collect::<Result<_>>()?;
    Ok(Mat::from_fn(binom(N, k - 1), binom(N, k), |i, j| cols[j][i].clone()))
}

/// The covector x ↦ coefficient of x∧w, for w ∈ ⋀⁵V₆.
pub fn five_to_covector(w: &KVector) -> Result<Vec<Scalar>> {
    require_grade(w, 5)?;
    (0..N).map(|i| KVector::unit(i).wedge(w)?.top_coefficient()).collect()
}

pub fn eval_covector(f: &[Scalar], v: &[Scalar]) -> Scalar {
    linalg::dot(f, v)
}

/// Basis of ker f ⊂ V₆ (a hyperplane when f ≠ 0).
pub fn hyperplane_basis(f: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
    if linalg::is_zero_vec(f) {
        return Err(Error::ZeroInput("covector"));
    }
    Ok(Mat::from_rows(&[f.to_vec()])?.kernel().basis().to_vec())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Decomposability {
    /// a = u₁∧u₂∧u₃
    Decomposable,
    /// a = v₀∧β with β of rank 4
    PointTimesRank4,
    General,
}

#[derive(Clone, Debug)]
pub struct DecomposableRank {
    pub kdim: usize,
    pub class: Decomposability,
    /// {v : v∧a = 0}
    pub kernel: Subspace,
}

impl DecomposableRank {
    pub fn is_decomposable(&self) -> bool {
        self.class == Decomposability::Decomposable
    }
}

/// kdim = dim{v : v∧a = 0}; 3 exactly for decomposable a.
pub fn decomposable_rank(a: &KVector) -> Result<DecomposableRank> {
    require_grade(a, 3)?;
    if a.is_zero() {
        return Err(Error::ZeroInput("trivector"));
    }
    // columns: v = e_i ↦ e_i ∧ a
    let cols: Vec<Vec<Scalar>> =
        (0..N).map(|i| KVector::unit(i).wedge(a).map(|w| w.coords)).collect::<Result<_>>()?;
    let m = Mat::from_fn(15, N, |r, c| cols[c][r].clone());
    let kernel = m.kernel();
    let kdim = kernel.dim();
    let class = match kdim {
        3 => Decomposability::Decomposable,
        1 => Decomposability::PointTimesRank4,
        0 => Decomposability::General,
        d => return Err(Error::Degenerate(format!("annihilator of dimension {d}"))),
    };
    Ok(DecomposableRank { kdim, class, kernel })
}

/// The skew form κ_a(u, w) = [u∧w∧a : b₁∧…∧b₅] on V₅ = ⟨b₁..b₅⟩, for a ∈ ⋀³V₅.
#[derive(Clone, Debug)]
pub struct SkewForm5 {
    pub matrix: Mat,
    pub basis: Vec<Vec<Scalar>>,
}

impl SkewForm5 {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Kernel as vectors of V₆.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        self.matrix
            .kernel()
            .basis()
            .iter()
            .map(|c| linalg::combine(c, &self.basis, N))
            .collect()
    }

    /// κ(u, w) for u, w given in basis coordinates.
    pub fn eval(&self, u: &[Scalar], w: &[Scalar]) -> Scalar {
        linalg::dot(u, &self.matrix.apply(w))
    }

    /// Coordinates of a vector of V₅ in the chosen basis.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let m = Mat::from_rows(&self.basis).ok()?;
        m.solve_left(v)
    }
}

pub fn two_form_of_trivector(a: &KVector, v5basis: &[Vec<Scalar>]) -> Result<SkewForm5> {
    require_grade(a, 3)?;
    if v5basis.len() != 5 {
        return Err(Error::Shape(format!("V₅ basis needs 5 vectors, got {}", v5basis.len())));
    }
    let b: Vec<KVector> = v5basis.iter().map(|v| KVector::vector(v)).collect::<Result<_>>()?;
    let vol = b[1..].iter().try_fold(b[0].clone(), |acc, x| acc.wedge(x))?;
    let Some(j) = vol.coords.iter().position(|x| !x.is_zero()) else {
        return Err(Error::Degenerate("V₅ basis is dependent".into()));
    };
    let f = Mat::from_rows(v5basis)?.kernel();
    if !a.contract(&f.basis()[0])?.is_zero() {
        return Err(Error::NotContained("trivector is not in ⋀³V₅".into()));
    }
    let mut m = Mat::zeros(5, 5);
    for u in 0..5 {
        for w in u + 1..5 {
            let x = b[u].wedge(&b[w])?.wedge(a)?;
            let val = &x.coords[j] / &vol.coords[j];
            m.set(w, u, -val.clone());
            m.set(u, w, val);
        }
    }
    Ok(SkewForm5 { matrix: m, basis: v5basis.to_vec() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum InducedKind {
    /// v∧⋀²V₆
    Fv,
    /// ⋀²U₃∧V₆
    WU3,
    /// ⋀³V₅
    Wedge3V5,
    /// ⋀²U₃∧V₅
    Wedge2U3V5,
    /// v∧⋀²V₅
    VWedge2V5,
}

/// Defining data of the canonical subspaces of ⋀³V₆.
#[derive(Clone, Copy, Debug)]
pub enum InducedSpec<'a> {
    Fv(&'a [Scalar]),
    WU3(&'a [Vec<Scalar>]),
    Wedge3V5(&'a [Scalar]),
    Wedge2U3V5(&'a [Vec<Scalar>], &'a [Scalar]),
    VWedge2V5(&'a [Scalar], &'a [Scalar]),
}

#[derive(Clone, Debug)]
pub struct InducedSubspace {
    pub kind: InducedKind,
    pub span: Subspace,
}

fn vecs(v: &[Vec<Scalar>]) -> Result<Vec<KVector>> {
    v.iter().map(|x| KVector::vector(x)).collect()
}

fn check_three_space(u3: &[Vec<Scalar>]) -> Result<()> {
    if u3.len() != 3 || Subspace::span(N, u3)?.dim() != 3 {
        return Err(Error::Degenerate("U₃ must be spanned by 3 independent vectors".into()));
    }
    Ok(())
}

fn span_of(gens: Vec<KVector>) -> Result<Subspace> {
    let rows: Vec<Vec<Scalar>> = gens.into_iter().map(|g| g.coords).collect();
    Subspace::span(20, &rows)
}

pub fn induced_subspace(spec: InducedSpec<'_>) -> Result<InducedSubspace> {
    let pairs2: Vec<KVector> = subsets(2).iter().map(|&s| basis_mask(2, s)).collect();
    let (kind, span) = match spec {
        InducedSpec::Fv(v) => {
            let v = KVector::vector(v)?;
            if v.is_zero() {
                return Err(Error::ZeroInput("v"));
            }
            (InducedKind::Fv, span_of(pairs2.iter().map(|p| v.wedge(p)).collect::<Result<_>>()?)?)
        }
        InducedSpec::WU3(u3) => {
            check_three_space(u3)?;
            let u = vecs(u3)?;
            let mut gens = Vec::new();
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let uu = u[i].wedge(&u[j])?;
                for k in 0..N {
                    gens.push(uu.wedge(&KVector::unit(k))?);
                }
            }
            (InducedKind::WU3, span_of(gens)?)
        }
        InducedSpec::Wedge3V5(f) => {
            let b = vecs(&hyperplane_basis(f)?)?;
            let mut gens = Vec::new();
            for &s in subsets(3).iter().filter(|&&s| s & 0x20 == 0) {
                let e = elements(s);
                gens.push(b[e[0]].wedge(&b[e[1]])?.wedge(&b[e[2]])?);
            }
            (InducedKind::Wedge3V5, span_of(gens)?)
        }
        InducedSpec::Wedge2U3V5(u3, f) => {
            check_three_space(u3)?;
            if u3.iter().any(|u| !eval_covector(f, u).is_zero()) {
                return Err(Error::NotContained("U₃ ⊄ V₅".into()));
            }
            let u = vecs(u3)?;
            let b = vecs(&hyperplane_basis(f)?)?;
            let mut gens = Vec::new();
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let uu = u[i].wedge(&u[j])?;
                for x in &b {
                    gens.push(uu.wedge(x)?);
                }
            }
            (InducedKind::Wedge2U3V5, span_of(gens)?)
        }
        InducedSpec::VWedge2V5(v, f) => {
            if linalg::is_zero_vec(v) {
                return Err(Error::ZeroInput("v"));
            }
            if !eval_covector(f, v).is_zero() {
                return Err(Error::NotContained("v ∉ V₅".into()));
            }
            let v = KVector::vector(v)?;
            let b = vecs(&hyperplane_basis(f)?)?;
            let mut gens = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    gens.push(v.wedge(&b[i])?.wedge(&b[j])?);
                }
            }
            (InducedKind::VWedge2V5, span_of(gens)?)
        }
    };
    Ok(InducedSubspace { kind, span })
}

/// Covector e₅^*, cutting out the standard hyperplane V₅ = ⟨e₀..e₄⟩.
pub fn standard_f() -> Vec<Scalar> {
    let mut f = vec![Scalar::zero(); N];
    f[N - 1] = Scalar::one();
    f
}

/// Raw ⋀³ coordinates of e_i∧e_j∧e_k.
pub fn tri(i: usize, j: usize, k: usize) -> Vec<Scalar> {
    KVector::basis(&[i, j, k]).coords
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vec_q;
    use crate::rng;
    use proptest::prelude::*;

    fn e(i: usize) -> KVector {
        KVector::unit(i)
    }

    #[test]
    fn lexicographic_basis_order() {
        let pairs: Vec<Vec<usize>> = subsets(2).iter().map(|&m| elements(m)).collect();
        assert_eq!(pairs[0], vec![0, 1]);
        assert_eq!(pairs[4], vec![0, 5]);
        assert_eq!(pairs[5], vec![1, 2]);
        assert_eq!(pairs[14], vec![4, 5]);
        for k in 0..=N {
            assert_eq!(subsets(k).len(), binom(N, k));
            for (i, &m) in subsets(k).iter().enumerate() {
                assert_eq!(index_of(m), i);
            }
        }
    }

    #[test]
    fn wedge_basics() {
        let e12 = e(0).wedge(&e(1)).unwrap();
        assert_eq!(e12, KVector::basis(&[0, 1]));
        assert_eq!(e12.coords()[0], q(1));
        assert!(e(0).wedge(&e(0)).unwrap().is_zero());
        let a = KVector::basis(&[0, 1, 2]);
        let b = KVector::basis(&[3, 4, 5]);
        assert_eq!(a.wedge(&b).unwrap().top_coefficient().unwrap(), q(1));
        assert_eq!(KVector::basis(&[1, 0]), e12.scale(&q(-1)));
        assert!(matches!(a.wedge(&KVector::basis(&[0, 1, 2, 3])), Err(Error::GradeOverflow(3, 4))));
    }

    #[test]
    fn symplectic_form_fixtures() {
        let a = KVector::basis(&[0, 1, 2]);
        let b = KVector::basis(&[3, 4, 5]);
        assert_eq!(symplectic_form(&a, &b).unwrap(), q(1));
        assert_eq!(symplectic_form(&b, &a).unwrap(), q(-1));
        let w = omega_matrix();
        assert_eq!(w.transpose(), w.scale(&q(-1)));
        assert_eq!(w.rank(), 20);
        // ω vanishes on ⋀³⟨e₀..e₄⟩
        let v5: Vec<Vec<Scalar>> =
            subsets(3).iter().filter(|&&s| s & 0x20 == 0).map(|&s| basis_mask(3, s).coords).collect();
        for x in &v5 {
            for y in &v5 {
                assert!(omega(x, y).is_zero());
            }
        }
    }

    #[test]
    fn wedge_map_kernel_of_e1() {
        let m = wedge_map_matrix(&e(0)).unwrap();
        assert_eq!((m.rows(), m.cols()), (15, 20));
        let k = m.kernel();
        let expect: Vec<Vec<Scalar>> =
            subsets(3).iter().filter(|&&s| s & 1 != 0).map(|&s| basis_mask(3, s).coords).collect();
        assert_eq!(k, Subspace::span(20, &expect).unwrap());
        assert!(wedge_map_matrix(&KVector::zero(1)).is_err());
    }

    #[test]
    fn wedge_map_is_linear_in_v() {
        let mut r = rng::seeded(3);
        let v0 = KVector::vector(&rng::rand_vec(&mut r, 6)).unwrap();
        let v1 = KVector::vector(&rng::rand_vec(&mut r, 6)).unwrap();
        let t = q(7);
        let vt = v0.add(&v1.scale(&t)).unwrap();
        let lhs = wedge_map_matrix(&vt).unwrap();
        let rhs = wedge_map_matrix(&v0).unwrap().add(&wedge_map_matrix(&v1).unwrap().scale(&t));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_map_kernel_dimension_for_random_v() {
        let mut r = rng::seeded(11);
        for _ in 0..50 {
            let v = KVector::vector(&rng::rand_nonzero_vec(&mut r, 6)).unwrap();
            assert_eq!(wedge_map_matrix(&v).unwrap().kernel().dim(), 10);
        }
    }

    #[test]
    fn decomposability_fixtures() {
        let a = KVector::basis(&[0, 1, 2]);
        assert_eq!(decomposable_rank(&a).unwrap().kdim, 3);
        let b = a.add(&KVector::basis(&[3, 4, 5])).unwrap();
        let d = decomposable_rank(&b).unwrap();
        assert_eq!((d.kdim, d.class), (0, Decomposability::General));
        let beta = KVector::basis(&[1, 2]).add(&KVector::basis(&[3, 4])).unwrap();
        let c = e(0).wedge(&beta).unwrap();
        let d = decomposable_rank(&c).unwrap();
        assert_eq!((d.kdim, d.class), (1, Decomposability::PointTimesRank4));
        assert!(d.kernel.contains(e(0).coords()));
        assert!(decomposable_rank(&KVector::zero(3)).is_err());
    }

    fn std_v5() -> Vec<Vec<Scalar>> {
        (0..5).map(|i| e(i).coords().to_vec()).collect()
    }

    #[test]
    fn two_form_fixtures() {
        let beta = KVector::basis(&[1, 2]).add(&KVector::basis(&[3, 4])).unwrap();
        let a = e(0).wedge(&beta).unwrap();
        let k = two_form_of_trivector(&a, &std_v5()).unwrap();
        assert_eq!(k.rank(), 4);
        assert_eq!(Subspace::span(6, &k.kernel()).unwrap(), Subspace::span(6, &[vec_q(&[1, 0, 0, 0, 0, 0])]).unwrap());
        let k = two_form_of_trivector(&KVector::basis(&[0, 1, 2]), &std_v5()).unwrap();
        assert_eq!(k.rank(), 2);
        assert!(two_form_of_trivector(&KVector::basis(&[0, 1, 5]), &std_v5()).is_err());
    }

    #[test]
    fn kappa_kernel_matches_wedge_annihilator() {
        let mut r = rng::seeded(5);
        let f = standard_f();
        let v5 = induced_subspace(InducedSpec::Wedge3V5(&f)).unwrap().span;
        for _ in 0..10 {
            let c = rng::rand_vec(&mut r, 10);
            let a = KVector::new(3, linalg::combine(&c, v5.basis(), 20)).unwrap();
            let d = decomposable_rank(&a).unwrap();
            assert_eq!(d.kdim, 1, "random element of ⋀³V₅ has a one-dimensional annihilator");
            let k = two_form_of_trivector(&a, &std_v5()).unwrap();
            assert_eq!(k.rank(), 4);
            assert_eq!(Subspace::span(6, &k.kernel()).unwrap(), d.kernel);
        }
    }

    #[test]
    fn induced_subspace_fixtures() {
        let f = standard_f();
        let fv = induced_subspace(InducedSpec::Fv(e(0).coords())).unwrap();
        assert_eq!(fv.span.dim(), 10);
        let u3: Vec<Vec<Scalar>> = (0..3).map(|i| e(i).coords().to_vec()).collect();
        let w = induced_subspace(InducedSpec::WU3(&u3)).unwrap();
        assert_eq!(w.span.dim(), 10);
        for &s in subsets(3) {
            let c = elements(s).iter().filter(|&&i| i < 3).count();
            assert_eq!(w.span.contains(basis_mask(3, s).coords()), c >= 2);
        }
        assert_eq!(induced_subspace(InducedSpec::Wedge3V5(&f)).unwrap().span.dim(), 10);
        let x = induced_subspace(InducedSpec::Wedge2U3V5(&u3, &f)).unwrap();
        assert_eq!(x.span.dim(), 7);
        let y = induced_subspace(InducedSpec::VWedge2V5(e(0).coords(), &f)).unwrap();
        assert_eq!(y.span.dim(), 6);
        let bad: Vec<Vec<Scalar>> = vec![e(0).coords().to_vec(), e(1).coords().to_vec(), e(5).coords().to_vec()];
        assert!(matches!(induced_subspace(InducedSpec::Wedge2U3V5(&bad, &f)), Err(Error::NotContained(_))));
        assert!(induced_subspace(InducedSpec::VWedge2V5(e(5).coords(), &f)).is_err());
    }

    #[test]
    fn five_vectors_give_covectors_vanishing_on_v() {
        let mut r = rng::seeded(8);
        for _ in 0..20 {
            let v = KVector::vector(&rng::rand_vec(&mut r, 6)).unwrap();
            let xi = KVector::new(2, rng::rand_vec(&mut r, 15)).unwrap();
            let w = v.wedge(&xi).unwrap().wedge(&xi).unwrap();
            let f = five_to_covector(&w).unwrap();
            assert!(eval_covector(&f, v.coords()).is_zero());
        }
    }

    fn arb_kvector(grade: usize) -> impl Strategy<Value = KVector> {
        proptest::collection::vec(-5i64..=5, binom(N, grade))
            .prop_map(move |c| KVector::from_i64(grade, &c).unwrap())
    }

    fn arb_graded() -> impl Strategy<Value = KVector> {
        (0usize..=N).prop_flat_map(arb_kvector)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn graded_anticommutativity(a in arb_graded(), b in arb_graded()) {
            prop_assume!(a.grade() + b.grade() <= N);
            let ab = a.wedge(&b).unwrap();
            let ba = b.wedge(&a).unwrap();
            let sign = if (a.grade() * b.grade()) % 2 == 0 { q(1) } else { q(-1) };
            prop_assert_eq!(ab, ba.scale(&sign));
        }

        #[test]
        fn associativity(a in arb_kvector(1), b in arb_kvector(2), c in arb_kvector(2)) {
            let l = a.wedge(&b).unwrap().wedge(&c).unwrap();
            let r = a.wedge(&b.wedge(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn omega_is_alternating(a in arb_kvector(3)) {
            prop_assert!(symplectic_form(&a, &a).unwrap().is_zero());
        }

        #[test]
        fn f_v_is_isotropic(v in arb_kvector(1), x in arb_kvector(2), y in arb_kvector(2)) {
            let a = v.wedge(&x).unwrap();
            let b = v.wedge(&y).unwrap();
            prop_assert!(symplectic_form(&a, &b).unwrap().is_zero());
        }

        #[test]
        fn w_u3_is_isotropic(
            u in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 6), 3),
            x in proptest::collection::vec(-3i64..=3, 18),
            y in proptest::collection::vec(-3i64..=3, 18),
        ) {
            let u3: Vec<Vec<Scalar>> = u.iter().map(|r| vec_q(r)).collect();
            prop_assume!(Subspace::span(6, &u3).unwrap().dim() == 3);
            let w = induced_subspace(InducedSpec::WU3(&u3)).unwrap().span;
            prop_assert_eq!(w.dim(), 10);
            let gens = w.basis();
            let a = linalg::combine(&vec_q(&x[..gens.len()]), gens, 20);
            let b = linalg::combine(&vec_q(&y[..gens.len()]), gens, 20);
            prop_assert!(omega(&a, &b).is_zero());
        }

        #[test]
        fn kernel_characterizes_f_v(v in arb_kvector(1), a in arb_kvector(3)) {
            prop_assume!(!v.is_zero());
            let fv = induced_subspace(InducedSpec::Fv(v.coords())).unwrap().span;
            prop_assert_eq!(fv.contains(a.coords()), v.wedge(&a).unwrap().is_zero());
            let x = v.wedge(&KVector::basis(&[1, 3])).unwrap();
            prop_assert!(fv.contains(x.coords()));
        }

        #[test]
        fn contraction_is_antiderivation(f in proptest::collection::vec(-4i64..=4, 6), a in arb_kvector(1), b in arb_kvector(2)) {
            let f = vec_q(&f);
            // ι_f(a∧b) = ι_f(a) b − a∧ι_f(b) for a of degree 1
            let lhs = a.wedge(&b).unwrap().contract(&f).unwrap();
            let fa = a.contract(&f).unwrap().coords()[0].clone();
            let rhs = b.scale(&fa).sub(&a.wedge(&b.contract(&f).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
