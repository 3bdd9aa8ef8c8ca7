use super::mat::rref_in_place;
use super::{Mat, Scalar};
use crate::{Error, Result};
use num_traits::{One, Zero};

/// Linear subspace of ℚ^n held as a reduced row echelon basis, so equal
/// subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vecs: &[Vec<Scalar>]) -> Result<Self> {
        if let Some(v) = vecs.iter().find(|v| v.len() != ambient) {
            return Err(Error::AmbientMismatch(ambient, v.len()));
        }
        let mut rows = vecs.to_vec();
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        Ok(Subspace { ambient, basis: rows, pivots })
    }

    pub fn row_space(m: &Mat) -> Self {
        Subspace::span(m.cols(), &m.row_vecs()).expect("rows have matrix width")
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_mat(&self) -> Mat {
        Mat::from_rows_with_cols(&self.basis, self.ambient).expect("basis rows")
    }

    /// Coefficients of `v` in the echelon basis, or None when v ∉ self.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "coordinates: length mismatch");
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (c, b) in coeffs.iter().zip(&self.basis) {
            super::axpy(&mut r, &-c.clone(), b);
        }
        super::is_zero_vec(&r).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &v)
    }

    pub fn with_vectors(&self, vecs: &[Vec<Scalar>]) -> Result<Subspace> {
        let mut v = self.basis.clone();
        v.extend(vecs.iter().cloned());
        Subspace::span(self.ambient, &v)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        // (x, y) with Σ xᵢuᵢ = Σ yⱼwⱼ.
        let du = self.dim();
        let stacked = self.basis_mat().vstack(&other.basis_mat())?.transpose();
        let ker = stacked.kernel();
        let vecs: Vec<Vec<Scalar>> =
            ker.basis().iter().map(|k| super::combine(&k[..du], &self.basis, self.ambient)).collect();
        Subspace::span(self.ambient, &vecs)
    }

    /// Vectors from `sup`'s basis that extend `self` to a basis of `sup`.
    pub fn complement_in(&self, sup: &Subspace) -> Result<Vec<Vec<Scalar>>> {
        if !sup.contains_subspace(self) {
            return Err(Error::NotContained("complement_in: not a subspace".into()));
        }
        let mut cur = self.clone();
        let mut out = Vec::new();
        for b in &sup.basis {
            if !cur.contains(b) {
                cur = cur.with_vectors(std::slice::from_ref(b))?;
                out.push(b.clone());
            }
        }
        Ok(out)
    }

    /// Vectors {x : ⟨b, x⟩ = 0 for all basis vectors b} under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        self.basis_mat().kernel()
    }
}

/// u ∩ w in echelon form.
pub fn subspace_intersect(u: &Subspace, w: &Subspace) -> Result<Subspace> {
    u.intersect(w)
}
