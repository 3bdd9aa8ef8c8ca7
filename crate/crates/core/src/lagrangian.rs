//! Lagrangian subspaces of (⋀³V₆, ω): graph generators, isotropic completion,
//! duals, isotropic reduction and pencils of Lagrangians through a common
//! 8-dimensional isotropic B.

use crate::exterior::{self, omega, omega_orthogonal, KVector};
use crate::linalg::{self, fmt_scalar, parse_scalar, q, Mat, Scalar, Subspace, UniPoly};
use crate::rng::{self, EpwRng};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

pub const LAGRANGIAN_DIM: usize = 10;
pub const AMBIENT: usize = 20;

/// A ⊂ ⋀³V₆ Lagrangian, with an optional hyperplane V₅ = ker f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianData {
    a: Subspace,
    v5: Option<Vec<Scalar>>,
    ell: Option<usize>,
    pub seed: Option<u64>,
    pub generator: String,
    /// Outcome of the last decomposable-vector search, if one was run.
    pub decomposable_search: Option<String>,
}

impl LagrangianData {
    pub fn new(a: Subspace, v5: Option<Vec<Scalar>>, seed: Option<u64>, generator: &str) -> Result<Self> {
        let check = is_lagrangian(&a);
        if !check.ok {
            let (i, j) = check.witness.map(|w| (w.0, w.1)).unwrap_or((0, 0));
            return match check.dim {
                LAGRANGIAN_DIM => Err(Error::NotIsotropic(i, j)),
                d => Err(Error::Degenerate(format!("dimension {d}, expected 10"))),
            };
        }
        let mut out = LagrangianData { a, v5: None, ell: None, seed, generator: generator.into(), decomposable_search: None };
        if let Some(f) = v5 {
            out.set_v5(f)?;
        }
        Ok(out)
    }

    pub fn set_v5(&mut self, f: Vec<Scalar>) -> Result<()> {
        if f.len() != 6 {
            return Err(Error::Shape("hyperplane covector needs 6 entries".into()));
        }
        if linalg::is_zero_vec(&f) {
            return Err(Error::ZeroInput("covector"));
        }
        self.ell = Some(ell_of(&self.a, &f)?);
        self.v5 = Some(f);
        Ok(())
    }

    pub fn a(&self) -> &Subspace {
        &self.a
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        self.a.basis()
    }

    pub fn v5(&self) -> Option<&[Scalar]> {
        self.v5.as_deref()
    }

    /// ℓ = dim(A ∩ ⋀³V₅), cached when V₅ is present.
    pub fn ell(&self) -> Option<usize> {
        self.ell
    }

    pub fn to_json(&self) -> Value {
        let grid: Vec<Vec<String>> =
            self.a.basis().iter().map(|r| r.iter().map(fmt_scalar).collect()).collect();
        let mut v = json!({
            "dim_v6": 6,
            "A": grid,
            "v5": self.v5.as_ref().map(|f| f.iter().map(fmt_scalar).collect::<Vec<_>>()),
            "seed": self.seed,
            "generator": self.generator,
            "ell": self.ell,
        });
        if let Some(s) = &self.decomposable_search {
            v["decomposable_search"] = json!(s);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if v.get("dim_v6").and_then(Value::as_u64) != Some(6) {
            return Err(Error::Parse("dim_v6 must be 6".into()));
        }
        let grid = v.get("A").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing A".into()))?;
        let rows = grid.iter().map(parse_row).collect::<Result<Vec<_>>>()?;
        let a = Subspace::span(AMBIENT, &rows)?;
        let v5 = match v.get("v5") {
            None | Some(Value::Null) => None,
            Some(x) => Some(parse_row(x)?),
        };
        let seed = v.get("seed").and_then(Value::as_u64);
        let generator = v.get("generator").and_then(Value::as_str).unwrap_or("file");
        let mut out = LagrangianData::new(a, v5, seed, generator)?;
        if let Some(cached) = v.get("ell").and_then(Value::as_u64) {
            if out.ell != Some(cached as usize) {
                return Err(Error::Mismatch(format!("cached ell {cached} disagrees with {:?}", out.ell)));
            }
        }
        out.decomposable_search = v.get("decomposable_search").and_then(Value::as_str).map(String::from);
        Ok(out)
    }
}

pub fn parse_row(v: &Value) -> Result<Vec<Scalar>> {
    let arr = v.as_array().ok_or_else(|| Error::Parse("expected an array of rationals".into()))?;
    arr.iter()
        .map(|x| match x {
            Value::String(s) => parse_scalar(s),
            Value::Number(n) => n
                .as_i64()
                .map(q)
                .ok_or_else(|| Error::Parse(format!("non-integer number {n}; use \"p/q\""))),
            _ => Err(Error::Parse("expected a rational".into())),
        })
        .collect()
}

/// dim(A ∩ ⋀³ ker f).
pub fn ell_of(a: &Subspace, f: &[Scalar]) -> Result<usize> {
    let c = exterior::contraction_matrix(f, 3)?;
    let img: Vec<Vec<Scalar>> = a.basis().iter().map(|x| c.apply(x)).collect();
    let m = Mat::from_fn(15, a.dim(), |i, j| img[j][i].clone());
    Ok(a.dim() - m.rank())
}

#[derive(Clone, Debug)]
pub struct LagrangianCheck {
    pub ok: bool,
    pub dim: usize,
    /// Indices and vectors of the first pair with ω ≠ 0.
    pub witness: Option<(usize, usize, Vec<Scalar>, Vec<Scalar>)>,
}

/// Checks the given vectors in order; the witness refers to their positions.
pub fn is_lagrangian_basis(vecs: &[Vec<Scalar>]) -> Result<LagrangianCheck> {
    let s = Subspace::span(AMBIENT, vecs)?;
    for i in 0..vecs.len() {
        for j in i + 1..vecs.len() {
            if !omega(&vecs[i], &vecs[j]).is_zero() {
                return Ok(LagrangianCheck {
                    ok: false,
                    dim: s.dim(),
                    witness: Some((i, j, vecs[i].clone(), vecs[j].clone())),
                });
            }
        }
    }
    Ok(LagrangianCheck { ok: s.dim() == LAGRANGIAN_DIM, dim: s.dim(), witness: None })
}

pub fn is_lagrangian(a: &Subspace) -> LagrangianCheck {
    if a.ambient() != AMBIENT {
        return LagrangianCheck { ok: false, dim: a.dim(), witness: None };
    }
    is_lagrangian_basis(a.basis()).expect("echelon rows have ambient 20")
}

pub fn is_isotropic(s: &Subspace) -> bool {
    let b = s.basis();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| omega(&b[i], &b[j]).is_zero()))
}

/// Basis (e₀, …, e₄) of the standard hyperplane.
pub fn standard_v5_basis() -> Vec<Vec<Scalar>> {
    (0..5).map(|i| KVector::unit(i).into_coords()).collect()
}

/// ⋀³V₆ = ⋀³V₅ ⊕ b₆∧⋀²V₅ with a_i = b_{S_i} + Σ_j q_ij d_j, where d_j is b₆∧b_{S_jᶜ}
/// normalized by ω(b_{S_j}, d_j) = 1. Then ω(a_i, a_k) = q_ki − q_ik.
pub fn graph_span(q: &Mat, v5basis: &[Vec<Scalar>]) -> Result<Subspace> {
    if q.rows() != 10 || q.cols() != 10 {
        return Err(Error::Shape("graph matrix must be 10×10".into()));
    }
    if v5basis.len() != 5 {
        return Err(Error::Shape("V₅ basis needs 5 vectors".into()));
    }
    let mut b: Vec<KVector> = v5basis.iter().map(|v| KVector::vector(v)).collect::<Result<_>>()?;
    if Subspace::span(6, v5basis)?.dim() != 5 {
        return Err(Error::Degenerate("V₅ basis is dependent".into()));
    }
    let ext = Subspace::span(6, v5basis)?.complement_in(&Subspace::full(6))?;
    b.push(KVector::vector(&ext[0])?);
    let wedge_of = |idx: &[usize]| -> Result<KVector> {
        idx.iter().try_fold(KVector::scalar(Scalar::one()), |acc, &i| acc.wedge(&b[i]))
    };
    let triples: Vec<Vec<usize>> = exterior::subsets(3)
        .iter()
        .filter(|&&s| s & 0x20 == 0)
        .map(|&s| exterior::elements(s))
        .collect();
    let mut base = Vec::with_capacity(10);
    let mut dual = Vec::with_capacity(10);
    for t in &triples {
        let comp: Vec<usize> = (0..5).filter(|i| !t.contains(i)).collect();
        let s = wedge_of(t)?;
        let d = b[5].wedge(&wedge_of(&comp)?)?;
        let c = omega(s.coords(), d.coords());
        base.push(s.into_coords());
        dual.push(linalg::scale_vec(d.coords(), &c.recip()));
    }
    let rows: Vec<Vec<Scalar>> = (0..10)
        .map(|i| {
            let mut r = base[i].clone();
            for (j, d) in dual.iter().enumerate() {
                linalg::axpy(&mut r, q.get(i, j), d);
            }
            r
        })
        .collect();
    Subspace::span(AMBIENT, &rows)
}

/// Graph Lagrangian of a symmetric q over the hyperplane spanned by `v5basis`.
pub fn from_graph(q: &Mat, v5basis: &[Vec<Scalar>]) -> Result<LagrangianData> {
    if !q.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let a = graph_span(q, v5basis)?;
    let f = Mat::from_rows(v5basis)?.kernel().basis()[0].clone();
    LagrangianData::new(a, Some(f), None, "graph")
}

/// Random symmetric 10×10 matrix of exact rank r: Pᵀ·diag(d₁..d_r, 0..)·P.
pub fn random_symmetric(rank: usize, rng: &mut EpwRng) -> Mat {
    assert!(rank <= 10);
    loop {
        let entries = rng::rand_vec(rng, 100);
        let p = Mat::from_fn(10, 10, |i, j| entries[10 * i + j].clone());
        let d: Vec<Scalar> = (0..10)
            .map(|i| if i < rank { rng::rand_nonzero_vec(rng, 1)[0].clone() } else { Scalar::zero() })
            .collect();
        let dp = Mat::from_fn(10, 10, |i, j| &d[i] * p.get(i, j));
        let qm = p.transpose().mul(&dp).expect("10×10");
        if qm.rank() == rank {
            return qm;
        }
    }
}

/// Random graph Lagrangian over V₅ = ⟨e₀..e₄⟩ with dim(A ∩ ⋀³V₅) = ell.
pub fn random_graph(ell: usize, rng: &mut EpwRng) -> Result<LagrangianData> {
    if ell > 10 {
        return Err(Error::Degenerate(format!("ell {ell} > 10")));
    }
    let qm = random_symmetric(10 - ell, rng);
    from_graph(&qm, &standard_v5_basis())
}

/// Completes an isotropic s to a Lagrangian by repeatedly adjoining a random
/// vector of cur^⊥ ∖ cur.
pub fn extend_isotropic_to_lagrangian(s: &Subspace, rng: &mut EpwRng) -> Result<LagrangianData> {
    if s.ambient() != AMBIENT {
        return Err(Error::AmbientMismatch(AMBIENT, s.ambient()));
    }
    if !is_isotropic(s) {
        let b = s.basis();
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if !omega(&b[i], &b[j]).is_zero() {
                    return Err(Error::NotIsotropic(i, j));
                }
            }
        }
    }
    let mut cur = s.clone();
    while cur.dim() < LAGRANGIAN_DIM {
        let perp = omega_orthogonal(&cur);
        let x = linalg::combine(&rng::rand_vec(rng, perp.dim()), perp.basis(), AMBIENT);
        if !cur.contains(&x) {
            cur = cur.with_vectors(&[x])?;
        }
    }
    LagrangianData::new(cur, None, None, "isotropic-extension")
}

#[derive(Clone, Debug)]
pub struct DecomposableSearch {
    pub found: Option<KVector>,
    pub pencils_tried: usize,
    pub budget: usize,
}

impl DecomposableSearch {
    pub fn summary(&self) -> String {
        match &self.found {
            Some(_) => "decomposable vector found".into(),
            None => format!("none found within budget {}", self.budget),
        }
    }
}

/// Searches P(A) ∩ Gr(3, V₆) on random pencils. A miss is not a proof of emptiness.
pub fn find_decomposable(a: &Subspace, budget: usize, rng: &mut EpwRng) -> Result<DecomposableSearch> {
    for b in a.basis() {
        let k = KVector::new(3, b.clone())?;
        if exterior::decomposable_rank(&k)?.is_decomposable() {
            return Ok(DecomposableSearch { found: Some(k), pencils_tried: 0, budget });
        }
    }
    for tried in 1..=budget {
        let x = linalg::combine(&rng::rand_vec(rng, a.dim()), a.basis(), AMBIENT);
        let y = linalg::combine(&rng::rand_vec(rng, a.dim()), a.basis(), AMBIENT);
        if linalg::is_zero_vec(&x) || linalg::is_zero_vec(&y) {
            continue;
        }
        if let Some(k) = decomposable_on_pencil(&x, &y, rng)? {
            return Ok(DecomposableSearch { found: Some(k), pencils_tried: tried, budget });
        }
    }
    Ok(DecomposableSearch { found: None, pencils_tried: budget, budget })
}

/// 15×6 matrix v ↦ v∧a for a trivector a.
fn annihilator_matrix(a: &[Scalar]) -> Result<Mat> {
    let a = KVector::new(3, a.to_vec())?;
    let cols: Vec<Vec<Scalar>> =
        (0..6).map(|i| KVector::unit(i).wedge(&a).map(KVector::into_coords)).collect::<Result<_>>()?;
    Ok(Mat::from_fn(15, 6, |r, c| cols[c][r].clone()))
}

/// Parameters t with x + t·y decomposable: rank of v ↦ v∧a(t) drops to 3, so
/// every 4×4 minor vanishes. Roots of the gcd of minors are tried when rational.
fn decomposable_on_pencil(x: &[Scalar], y: &[Scalar], rng: &mut EpwRng) -> Result<Option<KVector>> {
    use rand::seq::SliceRandom;
    let m0 = annihilator_matrix(x)?;
    let m1 = annihilator_matrix(y)?;
    let entry = |i: usize, j: usize| UniPoly::linear(m0.get(i, j).clone(), m1.get(i, j).clone());
    let mut row_sets: Vec<Vec<usize>> = combinations(15, 4);
    let col_sets: Vec<Vec<usize>> = combinations(6, 4);
    row_sets.shuffle(rng);
    let mut g = UniPoly::zero();
    'outer: for rs in &row_sets {
        for cs in &col_sets {
            let m: Vec<Vec<UniPoly>> = rs.iter().map(|&i| cs.iter().map(|&j| entry(i, j)).collect()).collect();
            let d = linalg::det_poly(&m);
            g = UniPoly::gcd(&g, &d);
            if g.degree() == Some(0) {
                break 'outer;
            }
        }
    }
    let candidates: Vec<Scalar> = if g.is_zero() {
        vec![Scalar::zero()]
    } else if g.degree() == Some(0) {
        return Ok(None);
    } else {
        rational_roots(&g, 1_000_000_000_000)
    };
    for t in candidates {
        let a = linalg::add_vec(x, &linalg::scale_vec(y, &t));
        if linalg::is_zero_vec(&a) {
            continue;
        }
        let k = KVector::new(3, a)?;
        if exterior::decomposable_rank(&k)?.kdim == 3 {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rational roots by the rational root theorem; skipped (empty) when the
/// extreme coefficients exceed `guard` in absolute value.
pub fn rational_roots(p: &UniPoly, guard: u64) -> Vec<Scalar> {
    let mut out = Vec::new();
    if p.is_zero() {
        return out;
    }
    let ints = linalg::primitive_integer(p.coeffs());
    let shift = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if shift > 0 {
        out.push(Scalar::zero());
    }
    let c = &ints[shift..];
    if c.len() <= 1 {
        return out;
    }
    let (a0, an) = (c[0].abs(), c[c.len() - 1].abs());
    let (Some(a0u), Some(anu)) = (a0.to_u64(), an.to_u64()) else {
        return out;
    };
    if a0u > guard || anu > guard {
        return out;
    }
    let reduced = UniPoly::from_coeffs(c.iter().map(|x| Scalar::from_integer(x.clone())).collect());
    for num in divisors(a0u) {
        for den in divisors(anu) {
            if BigInt::from(num).gcd(&BigInt::from(den)) != BigInt::one() {
                continue;
            }
            for s in [1i64, -1] {
                let t = Scalar::new(BigInt::from(s) * BigInt::from(num), BigInt::from(den));
                if reduced.eval(&t).is_zero() && !out.contains(&t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// Annihilator of A under the coordinate pairing ⋀³V₆ × ⋀³V₆^∨ → ℚ.
pub fn dual_lagrangian(a: &Subspace) -> Subspace {
    a.annihilator()
}

/// Ā = (A ∩ B^⊥)/B inside B^⊥/B, in coordinates of a chosen complement C of B in B^⊥.
#[derive(Clone, Debug)]
pub struct IsotropicReduction {
    pub complement: Vec<Vec<Scalar>>,
    /// ω restricted to C; nondegenerate.
    pub gram: Mat,
    pub reduced: Subspace,
}

impl IsotropicReduction {
    pub fn is_lagrangian(&self) -> bool {
        let n = self.complement.len();
        let b = self.reduced.basis();
        2 * b.len() == n
            && (0..b.len()).all(|i| (i + 1..b.len()).all(|j| linalg::dot(&b[i], &self.gram.apply(&b[j])).is_zero()))
    }
}

pub fn isotropic_reduction(a: &Subspace, b: &Subspace) -> Result<IsotropicReduction> {
    if !is_isotropic(b) {
        return Err(Error::NotIsotropic(0, 0));
    }
    if !a.contains_subspace(b) {
        return Err(Error::NotContained("B ⊄ A".into()));
    }
    let bperp = omega_orthogonal(b);
    let complement = b.complement_in(&bperp)?;
    let n = complement.len();
    let gram = Mat::from_fn(n, n, |i, j| omega(&complement[i], &complement[j]));
    let a_cap = a.intersect(&bperp)?;
    let mut frame = b.basis().to_vec();
    frame.extend(complement.iter().cloned());
    let fm = Mat::from_rows_with_cols(&frame, AMBIENT)?;
    let bd = b.dim();
    let mut rows = Vec::with_capacity(a_cap.dim());
    for x in a_cap.basis() {
        let c = fm.solve_left(x).ok_or_else(|| Error::NotContained("A ∩ B^⊥ outside frame".into()))?;
        rows.push(c[bd..].to_vec());
    }
    let reduced = Subspace::span(n, &rows)?;
    Ok(IsotropicReduction { complement, gram, reduced })
}

/// Affine chart t ∈ ℚ on P(Ā₁) plus the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PencilParam {
    Finite(Scalar),
    Infinity,
}

impl std::fmt::Display for PencilParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PencilParam::Finite(t) => write!(f, "{}", fmt_scalar(t)),
            PencilParam::Infinity => write!(f, "inf"),
        }
    }
}

/// A(t) = B + ⟨x(t), y(t)⟩ with x(t) = x₁ + t·x₂ ∈ A₁ and y(t) = y_a + t·y_b ∈ A₂ the
/// unique direction of Ā₂ with ω(x(t), y(t)) = 0.
#[derive(Clone, Debug)]
pub struct LagrangianPencil {
    pub b: Subspace,
    pub x: [Vec<Scalar>; 2],
    pub y: [Vec<Scalar>; 2],
}

pub fn lagrangian_pencil(a1: &Subspace, a2: &Subspace) -> Result<LagrangianPencil> {
    for a in [a1, a2] {
        if !is_lagrangian(a).ok {
            return Err(Error::Degenerate("pencil ends must be Lagrangian".into()));
        }
    }
    let b = a1.intersect(a2)?;
    if b.dim() != 8 {
        return Err(Error::Degenerate(format!("dim(A₁ ∩ A₂) = {}, expected 8", b.dim())));
    }
    let xs = b.complement_in(a1)?;
    let ys = b.complement_in(a2)?;
    let (x1, x2) = (xs[0].clone(), xs[1].clone());
    let (y1, y2) = (ys[0].clone(), ys[1].clone());
    let make = |x: &[Scalar]| linalg::sub_vec(&linalg::scale_vec(&y1, &omega(x, &y2)), &linalg::scale_vec(&y2, &omega(x, &y1)));
    let ya = make(&x1);
    let yb = make(&x2);
    Ok(LagrangianPencil { b, x: [x1, x2], y: [ya, yb] })
}

impl LagrangianPencil {
    pub fn generators(&self, t: &PencilParam) -> (Vec<Scalar>, Vec<Scalar>) {
        match t {
            PencilParam::Finite(t) => (
                linalg::add_vec(&self.x[0], &linalg::scale_vec(&self.x[1], t)),
                linalg::add_vec(&self.y[0], &linalg::scale_vec(&self.y[1], t)),
            ),
            PencilParam::Infinity => (self.x[1].clone(), self.y[1].clone()),
        }
    }

    /// A(t), verified Lagrangian.
    pub fn member(&self, t: &PencilParam) -> Result<Subspace> {
        let (x, y) = self.generators(t);
        let a = self.b.with_vectors(&[x, y])?;
        if !is_lagrangian(&a).ok {
            return Err(Error::Degenerate(format!("pencil member at {t} is not Lagrangian")));
        }
        Ok(a)
    }

    pub fn a1(&self) -> Subspace {
        self.b.with_vectors(&self.x).expect("ambient 20")
    }

    pub fn a2(&self) -> Subspace {
        self.b.with_vectors(&self.y).expect("ambient 20")
    }

    /// Parameter of a member A: an element of A ∩ A₁ outside B fixes [x(t)].
    pub fn locate(&self, a: &Subspace) -> Result<PencilParam> {
        if !a.contains_subspace(&self.b) {
            return Err(Error::NotContained("B ⊄ A".into()));
        }
        let meet = a.intersect(&self.a1())?;
        let z = self
            .b
            .complement_in(&meet)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::NotContained("A ∩ A₁ = B".into()))?;
        let mut frame = self.x.to_vec();
        frame.extend(self.b.basis().iter().cloned());
        let c = Mat::from_rows(&frame)?.solve_left(&z).ok_or_else(|| Error::NotContained("z ∉ A₁".into()))?;
        let t = if c[0].is_zero() { PencilParam::Infinity } else { PencilParam::Finite(&c[1] / &c[0]) };
        if self.member(&t)? != *a {
            return Err(Error::NotContained("A is not a member of the pencil".into()));
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{induced_subspace, InducedSpec};
    use proptest::prelude::*;

    fn wedge3v5() -> Subspace {
        induced_subspace(InducedSpec::Wedge3V5(&exterior::standard_f())).unwrap().span
    }

    #[test]
    fn zero_graph_is_wedge3_v5() {
        let l = from_graph(&Mat::zeros(10, 10), &standard_v5_basis()).unwrap();
        assert_eq!(l.a(), &wedge3v5());
        assert_eq!(l.ell(), Some(10));
    }

    #[test]
    fn graph_ell_is_kernel_dimension() {
        let mut r = rng::seeded(1);
        for rank in 7..=10 {
            for _ in 0..20 {
                let qm = random_symmetric(rank, &mut r);
                let l = from_graph(&qm, &standard_v5_basis()).unwrap();
                assert_eq!(l.ell(), Some(10 - rank));
            }
        }
    }

    #[test]
    fn graph_over_skewed_hyperplane() {
        let mut r = rng::seeded(2);
        let basis: Vec<Vec<Scalar>> = (0..5).map(|_| rng::rand_vec(&mut r, 6)).collect();
        let qm = random_symmetric(9, &mut r);
        let l = from_graph(&qm, &basis).unwrap();
        assert_eq!(l.ell(), Some(1));
    }

    #[test]
    fn asymmetric_graph_is_rejected_and_not_lagrangian() {
        let mut qm = Mat::zeros(10, 10);
        qm.set(0, 1, q(1));
        assert_eq!(from_graph(&qm, &standard_v5_basis()), Err(Error::NotSymmetric));
        let span = graph_span(&qm, &standard_v5_basis()).unwrap();
        assert!(!is_lagrangian(&span).ok);
    }

    #[test]
    fn lagrangian_fixtures() {
        assert!(is_lagrangian(&wedge3v5()).ok);
        let fv = induced_subspace(InducedSpec::Fv(KVector::unit(0).coords())).unwrap().span;
        assert!(is_lagrangian(&fv).ok);
        let mut r = rng::seeded(4);
        let mut vecs = vec![exterior::tri(0, 1, 2), exterior::tri(3, 4, 5)];
        vecs.extend((0..8).map(|_| rng::rand_vec(&mut r, 20)));
        let c = is_lagrangian_basis(&vecs).unwrap();
        assert!(!c.ok);
        let w = c.witness.unwrap();
        assert_eq!((w.0, w.1), (0, 1));
        assert_eq!((w.2, w.3), (exterior::tri(0, 1, 2), exterior::tri(3, 4, 5)));
    }

    #[test]
    fn isotropic_extension() {
        let mut r = rng::seeded(5);
        let l = extend_isotropic_to_lagrangian(&Subspace::zero(20), &mut r).unwrap();
        assert!(is_lagrangian(l.a()).ok);
        let fixed = extend_isotropic_to_lagrangian(&wedge3v5(), &mut r).unwrap();
        assert_eq!(fixed.a(), &wedge3v5());
        let v = KVector::vector(&rng::rand_nonzero_vec(&mut r, 6)).unwrap();
        let xi: Vec<Vec<Scalar>> = (0..2)
            .map(|_| v.wedge(&KVector::new(2, rng::rand_vec(&mut r, 15)).unwrap()).unwrap().into_coords())
            .collect();
        let s = Subspace::span(20, &xi).unwrap();
        let l = extend_isotropic_to_lagrangian(&s, &mut r).unwrap();
        let fv = induced_subspace(InducedSpec::Fv(v.coords())).unwrap().span;
        assert!(l.a().intersect(&fv).unwrap().dim() >= 2);
        let bad = Subspace::span(20, &[exterior::tri(0, 1, 2), exterior::tri(3, 4, 5)]).unwrap();
        assert!(matches!(extend_isotropic_to_lagrangian(&bad, &mut r), Err(Error::NotIsotropic(..))));
    }

    #[test]
    fn decomposable_search_fixtures() {
        let mut r = rng::seeded(6);
        let s = find_decomposable(&wedge3v5(), 5, &mut r).unwrap();
        assert!(s.found.is_some());
        let fv = induced_subspace(InducedSpec::Fv(KVector::unit(0).coords())).unwrap().span;
        let s = find_decomposable(&fv, 5, &mut r).unwrap();
        let k = s.found.unwrap();
        assert_eq!(exterior::decomposable_rank(&k).unwrap().kdim, 3);
        let g = random_graph(0, &mut r).unwrap();
        let s = find_decomposable(g.a(), 10, &mut r).unwrap();
        assert!(s.found.is_none());
        assert_eq!(s.summary(), "none found within budget 10");
    }

    #[test]
    fn decomposable_found_on_pencil_through_planted_vector() {
        // A contains e₀∧e₁∧e₂ but no basis vector of its echelon form is decomposable a priori.
        let mut r = rng::seeded(7);
        let s = Subspace::span(20, &[exterior::tri(0, 1, 2)]).unwrap();
        let l = extend_isotropic_to_lagrangian(&s, &mut r).unwrap();
        let x = exterior::tri(0, 1, 2);
        let y = linalg::combine(&rng::rand_vec(&mut r, 10), l.basis(), 20);
        let found = decomposable_on_pencil(&linalg::add_vec(&x, &y), &linalg::scale_vec(&y, &q(-1)), &mut r).unwrap();
        assert_eq!(exterior::decomposable_rank(&found.unwrap()).unwrap().kdim, 3);
    }

    #[test]
    fn rational_root_finder() {
        let p = UniPoly::from_i64(&[-6, 1, 1]); // (t+3)(t−2)
        let mut roots = rational_roots(&p, 1000);
        roots.sort();
        assert_eq!(roots, vec![q(-3), q(2)]);
        let p = UniPoly::from_i64(&[0, -1, 2]);
        let mut roots = rational_roots(&p, 1000);
        roots.sort();
        assert_eq!(roots, vec![q(0), linalg::frac(1, 2)]);
        assert!(rational_roots(&UniPoly::from_i64(&[1, 0, 1]), 1000).is_empty());
    }

    #[test]
    fn dual_lagrangian_fixtures() {
        let d = dual_lagrangian(&wedge3v5());
        assert_eq!(d.dim(), 10);
        let containing_5: Vec<Vec<Scalar>> = exterior::subsets(3)
            .iter()
            .filter(|&&s| s & 0x20 != 0)
            .map(|&s| KVector::basis(&exterior::elements(s)).into_coords())
            .collect();
        assert_eq!(d, Subspace::span(20, &containing_5).unwrap());
        let mut r = rng::seeded(8);
        for ell in 0..3 {
            let l = random_graph(ell, &mut r).unwrap();
            let d = dual_lagrangian(l.a());
            assert!(is_lagrangian(&d).ok);
            assert_eq!(&dual_lagrangian(&d), l.a());
            // Y-stratum of A^⊥ at the covector f = e₅^* against ℓ read from A.
            let ff = induced_subspace(InducedSpec::Fv(&exterior::standard_f())).unwrap().span;
            assert_eq!(d.intersect(&ff).unwrap().dim(), ell);
        }
    }

    #[test]
    fn reduction_fixtures() {
        let mut r = rng::seeded(9);
        let l = random_graph(0, &mut r).unwrap();
        let red = isotropic_reduction(l.a(), &Subspace::zero(20)).unwrap();
        assert_eq!(&red.reduced, l.a());
        let red = isotropic_reduction(l.a(), l.a()).unwrap();
        assert_eq!((red.complement.len(), red.reduced.dim()), (0, 0));
        for bd in 1..=8 {
            let b = Subspace::span(20, &l.basis()[..bd]).unwrap();
            let red = isotropic_reduction(l.a(), &b).unwrap();
            assert_eq!(red.complement.len(), 20 - 2 * bd);
            assert_eq!(red.gram.rank(), 20 - 2 * bd);
            assert!(red.is_lagrangian(), "dim B = {bd}");
        }
        let b = Subspace::span(20, &[exterior::tri(0, 1, 2)]).unwrap();
        let fv = induced_subspace(InducedSpec::Fv(KVector::unit(5).coords())).unwrap().span;
        assert!(matches!(isotropic_reduction(&fv, &b), Err(Error::NotContained(_))));
    }

    fn rank2_pair(r: &mut EpwRng) -> (LagrangianData, LagrangianData) {
        let q1 = random_symmetric(10, r);
        let u = rng::rand_nonzero_vec(r, 10);
        let w = rng::rand_nonzero_vec(r, 10);
        let d = Mat::from_fn(10, 10, |i, j| &u[i] * &u[j] - &w[i] * &w[j]);
        let q2 = q1.add(&d);
        assert_eq!(q1.sub(&q2).rank(), 2);
        (from_graph(&q1, &standard_v5_basis()).unwrap(), from_graph(&q2, &standard_v5_basis()).unwrap())
    }

    #[test]
    fn pencil_from_graphs_differing_by_rank_two() {
        let mut r = rng::seeded(10);
        let (l1, l2) = rank2_pair(&mut r);
        let p = lagrangian_pencil(l1.a(), l2.a()).unwrap();
        assert_eq!(p.b.dim(), 8);
        let ts: Vec<PencilParam> = (0..5).map(|_| PencilParam::Finite(rng::rand_scalar(&mut r))).chain([PencilParam::Infinity]).collect();
        let members: Vec<Subspace> = ts.iter().map(|t| p.member(t).unwrap()).collect();
        for (i, m) in members.iter().enumerate() {
            assert!(is_lagrangian(m).ok);
            assert_eq!(m.intersect(&p.a1()).unwrap().dim(), 9);
            assert_eq!(m.intersect(&p.a2()).unwrap().dim(), 9);
            assert_eq!(p.locate(m).unwrap(), ts[i]);
            for (j, n) in members.iter().enumerate() {
                if i != j && ts[i] != ts[j] {
                    assert_eq!(m.intersect(n).unwrap(), p.b);
                }
            }
        }
        assert_eq!(&p.a1(), l1.a());
        assert_eq!(&p.a2(), l2.a());
        let red = isotropic_reduction(&members[0], &p.b).unwrap();
        assert_eq!(red.complement.len(), 4);
        assert!(red.is_lagrangian());
    }

    #[test]
    fn pencil_rejects_wrong_intersection() {
        let mut r = rng::seeded(11);
        let l1 = random_graph(0, &mut r).unwrap();
        let l2 = random_graph(0, &mut r).unwrap();
        assert!(lagrangian_pencil(l1.a(), l2.a()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut r = rng::seeded(12);
        let mut l = random_graph(1, &mut r).unwrap();
        l.seed = Some(12);
        l.decomposable_search = Some("none found within budget 3".into());
        let v = l.to_json();
        let back = LagrangianData::from_json(&serde_json::from_str(&v.to_string()).unwrap()).unwrap();
        assert_eq!(back, l);
        assert_eq!(v["ell"], json!(1));
        let mut bad = v.clone();
        bad["ell"] = json!(3);
        assert!(LagrangianData::from_json(&bad).is_err());
        assert_eq!(parse_row(&json!(["1/2", 3])).unwrap(), vec![linalg::frac(1, 2), q(3)]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn symmetric_graphs_are_lagrangian(entries in proptest::collection::vec(-6i64..=6, 55)) {
            let mut qm = Mat::zeros(10, 10);
            let mut it = entries.into_iter();
            for i in 0..10 {
                for j in i..10 {
                    let x = q(it.next().unwrap());
                    qm.set(i, j, x.clone());
                    qm.set(j, i, x);
                }
            }
            let l = from_graph(&qm, &standard_v5_basis()).unwrap();
            prop_assert!(is_lagrangian(l.a()).ok);
            prop_assert_eq!(l.ell(), Some(10 - qm.rank()));
        }

        #[test]
        fn basis_change_preserves_lagrangian(seed in 0u64..1000) {
            let mut r = rng::seeded(seed);
            let l = random_graph(0, &mut r).unwrap();
            let mixed: Vec<Vec<Scalar>> = (0..10).map(|_| linalg::combine(&rng::rand_vec(&mut r, 10), l.basis(), 20)).collect();
            let s = Subspace::span(20, &mixed).unwrap();
            prop_assume!(s.dim() == 10);
            prop_assert_eq!(&s, l.a());
        }
    }
}
