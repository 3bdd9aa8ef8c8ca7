//! EPW strata of a Lagrangian A ⊂ ⋀³V₆: pointwise stratum functions on
//! P(V₆), P(V₆^∨) and Gr(3, V₆), degree probes along lines, the kernel and
//! isotropic loci attached to a hyperplane V₅, contact hyperplanes through
//! Y² points, and joint-stratum witnesses on Lagrangian pencils.

use crate::exterior::{self, induced_subspace, InducedSpec, KVector};
use crate::lagrangian::{self, LagrangianData, LagrangianPencil, PencilParam, AMBIENT};
use crate::linalg::{self, fmt_scalar, modp, Mat, Scalar, Subspace, UniPoly};
use crate::rng::{self, EpwRng};
use crate::{Error, Result};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StratumKind {
    Y,
    #[serde(rename = "Ydual")]
    YDual,
    Z,
}

impl StratumKind {
    pub fn tag(self) -> &'static str {
        match self {
            StratumKind::Y => "Y",
            StratumKind::YDual => "Ydual",
            StratumKind::Z => "Z",
        }
    }

    /// Degree of the hypersurface Y_A, Y_{A⊥} or Z_A.
    pub fn expected_degree(self) -> usize {
        match self {
            StratumKind::Y | StratumKind::YDual => 6,
            StratumKind::Z => 4,
        }
    }

    /// Largest ℓ occurring for A without decomposable vectors.
    pub fn generic_bound(self) -> usize {
        match self {
            StratumKind::Y | StratumKind::YDual => 3,
            StratumKind::Z => 4,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "y" => Ok(StratumKind::Y),
            "ydual" | "y-dual" | "y_dual" => Ok(StratumKind::YDual),
            "z" => Ok(StratumKind::Z),
            _ => Err(Error::Parse(format!("unknown stratum kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StratumReport {
    pub kind: StratumKind,
    /// v, f, or a basis of U₃.
    pub point: Vec<Vec<Scalar>>,
    pub ell: usize,
    /// Basis of the intersection space inside ⋀³V₆.
    pub witness: Vec<Vec<Scalar>>,
    /// ℓ exceeds what a Lagrangian without decomposable vectors allows.
    pub flagged: bool,
}

impl StratumReport {
    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.tag(),
            "ell": self.ell,
            "witness": grid(&self.witness),
            "flagged": self.flagged,
        })
    }
}

pub fn grid(rows: &[Vec<Scalar>]) -> Value {
    json!(rows.iter().map(|r| r.iter().map(fmt_scalar).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn report(kind: StratumKind, point: Vec<Vec<Scalar>>, a: &Subspace, m: &Mat) -> StratumReport {
    let ker = m.kernel();
    let witness: Vec<Vec<Scalar>> = ker.basis().iter().map(|c| linalg::combine(c, a.basis(), AMBIENT)).collect();
    let ell = witness.len();
    StratumReport { kind, point, ell, witness, flagged: ell > kind.generic_bound() }
}

/// Columns of `op` applied to each basis vector of A.
fn restrict(op: &Mat, a: &Subspace) -> Mat {
    let cols: Vec<Vec<Scalar>> = a.basis().iter().map(|x| op.apply(x)).collect();
    Mat::from_fn(op.rows(), a.dim(), |i, j| cols[j][i].clone())
}

/// 15×10 matrix of a ↦ v∧a on A.
pub fn y_matrix(a: &Subspace, v: &[Scalar]) -> Result<Mat> {
    let op = exterior::wedge_map_matrix(&KVector::vector(v)?)?;
    Ok(restrict(&op, a))
}

/// ℓ = dim(A ∩ v∧⋀²V₆).
pub fn y_stratum(a: &Subspace, v: &[Scalar]) -> Result<StratumReport> {
    let m = y_matrix(a, v)?;
    Ok(report(StratumKind::Y, vec![v.to_vec()], a, &m))
}

/// 15×10 matrix of a ↦ ι_f a on A.
pub fn y_dual_matrix(a: &Subspace, f: &[Scalar]) -> Result<Mat> {
    if linalg::is_zero_vec(f) {
        return Err(Error::ZeroInput("covector"));
    }
    Ok(restrict(&exterior::contraction_matrix(f, 3)?, a))
}

/// ℓ = dim(A ∩ ⋀³ ker f).
pub fn y_dual_stratum(a: &Subspace, f: &[Scalar]) -> Result<StratumReport> {
    let m = y_dual_matrix(a, f)?;
    Ok(report(StratumKind::YDual, vec![f.to_vec()], a, &m))
}

fn check_u3(u3: &[Vec<Scalar>]) -> Result<()> {
    if u3.len() != 3 || u3.iter().any(|u| u.len() != 6) || Subspace::span(6, u3)?.dim() != 3 {
        return Err(Error::Shape("U₃ must be given by 3 independent vectors of V₆".into()));
    }
    Ok(())
}

/// ℓ = dim(A ∩ ⋀²U₃∧V₆) by span intersection.
pub fn z_stratum(a: &Subspace, u3: &[Vec<Scalar>]) -> Result<StratumReport> {
    check_u3(u3)?;
    let w = induced_subspace(InducedSpec::WU3(u3))?.span;
    let meet = a.intersect(&w)?;
    let ell = meet.dim();
    Ok(StratumReport {
        kind: StratumKind::Z,
        point: u3.to_vec(),
        ell,
        witness: meet.basis().to_vec(),
        flagged: ell > StratumKind::Z.generic_bound(),
    })
}

/// Stacked ι_g ι_h for all pairs of a basis of U₃^⊥: an 18×20 operator whose
/// kernel is ⋀²U₃∧V₆.
pub fn double_contraction_operator(ann: &[Vec<Scalar>]) -> Result<Mat> {
    let mut blocks: Option<Mat> = None;
    for i in 0..ann.len() {
        for j in i + 1..ann.len() {
            let op = exterior::contraction_matrix(&ann[i], 2)?.mul(&exterior::contraction_matrix(&ann[j], 3)?)?;
            blocks = Some(match blocks {
                None => op,
                Some(b) => b.vstack(&op)?,
            });
        }
    }
    blocks.ok_or_else(|| Error::Degenerate("annihilator too small".into()))
}

/// ℓ = dim(A ∩ ⋀²U₃∧V₆) as the kernel of the double contractions by U₃^⊥.
pub fn z_stratum_contraction(a: &Subspace, u3: &[Vec<Scalar>]) -> Result<StratumReport> {
    check_u3(u3)?;
    let ann = Subspace::span(6, u3)?.annihilator();
    let op = double_contraction_operator(ann.basis())?;
    Ok(report(StratumKind::Z, u3.to_vec(), a, &restrict(&op, a)))
}

// ---------------------------------------------------------------------------
// Planted generators

/// A Lagrangian containing ⟨v∧ξ₁, v∧ξ₂⟩ for random ξᵢ, so v ∈ Y^{≥2}_A.
pub fn plant_y2(v: &[Scalar], rng: &mut EpwRng) -> Result<LagrangianData> {
    let vk = KVector::vector(v)?;
    if vk.is_zero() {
        return Err(Error::ZeroInput("v"));
    }
    let gens: Vec<Vec<Scalar>> = (0..2)
        .map(|_| vk.wedge(&KVector::new(2, rng::rand_vec(rng, 15))?).map(KVector::into_coords))
        .collect::<Result<_>>()?;
    let mut l = lagrangian::extend_isotropic_to_lagrangian(&Subspace::span(AMBIENT, &gens)?, rng)?;
    l.generator = "plant-y2".into();
    Ok(l)
}

/// A Lagrangian containing a random element of ⋀²U₃∧V₆.
pub fn plant_z1(u3: &[Vec<Scalar>], rng: &mut EpwRng) -> Result<LagrangianData> {
    check_u3(u3)?;
    let w = induced_subspace(InducedSpec::WU3(u3))?.span;
    let x = linalg::combine(&rng::rand_nonzero_vec(rng, w.dim()), w.basis(), AMBIENT);
    let mut l = lagrangian::extend_isotropic_to_lagrangian(&Subspace::span(AMBIENT, &[x])?, rng)?;
    l.generator = "plant-z1".into();
    Ok(l)
}

// ---------------------------------------------------------------------------
// Degree probes

/// A line in P(V₆), P(V₆^∨) or Gr(3, V₆) together with the auxiliary data
/// defining the degeneracy matrix along it.
#[derive(Clone, Debug)]
pub enum ProbeLine {
    /// v(t) = v₀ + t·v₁
    Y { v0: Vec<Scalar>, v1: Vec<Scalar> },
    /// f(t) = f₀ + t·f₁
    YDual { f0: Vec<Scalar>, f1: Vec<Scalar> },
    /// U₃(t) = ⟨u₁, u₂, u₃ + t·u₄⟩; U₃(t)^⊥ = ⟨g₁, g₂, h(t)⟩ with g = Ann(u₁..u₄) and
    /// h(t) = c₂(u₃+tu₄)·c₁ − c₁(u₃+tu₄)·c₂ for c₁, c₂ ∈ Ann(u₁, u₂). One (c₁, c₂) pair per group.
    Z { u: Vec<Vec<Scalar>>, g: Vec<Vec<Scalar>>, c: Vec<[Vec<Scalar>; 2]> },
}

impl ProbeLine {
    pub fn kind(&self) -> StratumKind {
        match self {
            ProbeLine::Y { .. } => StratumKind::Y,
            ProbeLine::YDual { .. } => StratumKind::YDual,
            ProbeLine::Z { .. } => StratumKind::Z,
        }
    }

    pub fn random(kind: StratumKind, groups: usize, rng: &mut EpwRng) -> Self {
        match kind {
            StratumKind::Y => ProbeLine::Y { v0: rng::rand_nonzero_vec(rng, 6), v1: rng::rand_nonzero_vec(rng, 6) },
            StratumKind::YDual => {
                ProbeLine::YDual { f0: rng::rand_nonzero_vec(rng, 6), f1: rng::rand_nonzero_vec(rng, 6) }
            }
            StratumKind::Z => loop {
                let u: Vec<Vec<Scalar>> = (0..4).map(|_| rng::rand_vec(rng, 6)).collect();
                if Subspace::span(6, &u).unwrap().dim() != 4 {
                    continue;
                }
                if let Ok(l) = ProbeLine::z_from(u, groups, rng) {
                    break l;
                }
            },
        }
    }

    /// Z-line through ⟨u₁, u₂, u₃⟩ in direction u₄.
    pub fn z_from(u: Vec<Vec<Scalar>>, groups: usize, rng: &mut EpwRng) -> Result<Self> {
        let s4 = Subspace::span(6, &u)?;
        if u.len() != 4 || s4.dim() != 4 {
            return Err(Error::Degenerate("Z-line needs 4 independent vectors".into()));
        }
        let g = s4.annihilator().basis().to_vec();
        let ann12 = Subspace::span(6, &u[..2])?.annihilator();
        let mut c = Vec::new();
        while c.len() < groups.max(1) {
            let c1 = linalg::combine(&rng::rand_vec(rng, 4), ann12.basis(), 6);
            let c2 = linalg::combine(&rng::rand_vec(rng, 4), ann12.basis(), 6);
            // h(t)(u₄) is constant in t; nonzero keeps h(t) ∉ ⟨g₁, g₂⟩ on the whole line.
            let h_u4 = linalg::dot(&c2, &u[2]) * linalg::dot(&c1, &u[3]) - linalg::dot(&c1, &u[2]) * linalg::dot(&c2, &u[3]);
            if !h_u4.is_zero() {
                c.push([c1, c2]);
            }
        }
        Ok(ProbeLine::Z { u, g, c })
    }

    pub fn groups_supported(&self) -> usize {
        match self {
            ProbeLine::Z { c, .. } => c.len(),
            _ => usize::MAX,
        }
    }

    /// Degeneracy matrix along the line for the given group (rows × dim A).
    pub fn matrix(&self, a: &Subspace, group: usize) -> Result<Vec<Vec<UniPoly>>> {
        let (m0, m1) = match self {
            ProbeLine::Y { v0, v1 } => (y_matrix(a, v0)?, y_matrix(a, v1)?),
            ProbeLine::YDual { f0, f1 } => (
                restrict(&exterior::contraction_matrix(f0, 3)?, a),
                restrict(&exterior::contraction_matrix(f1, 3)?, a),
            ),
            ProbeLine::Z { u, g, c } => {
                let [c1, c2] = &c[group % c.len()];
                // h(t) = h₀ + t·h₁
                let h0 = linalg::sub_vec(
                    &linalg::scale_vec(c1, &linalg::dot(c2, &u[2])),
                    &linalg::scale_vec(c2, &linalg::dot(c1, &u[2])),
                );
                let h1 = linalg::sub_vec(
                    &linalg::scale_vec(c1, &linalg::dot(c2, &u[3])),
                    &linalg::scale_vec(c2, &linalg::dot(c1, &u[3])),
                );
                let dc = |x: &[Scalar], y: &[Scalar]| -> Result<Mat> {
                    Ok(restrict(&exterior::contraction_matrix(x, 2)?.mul(&exterior::contraction_matrix(y, 3)?)?, a))
                };
                let zero = Mat::zeros(6, a.dim());
                let c0 = dc(&g[0], &g[1])?.vstack(&dc(&g[0], &h0)?)?.vstack(&dc(&g[1], &h0)?)?;
                let c1m = zero.vstack(&dc(&g[0], &h1)?)?.vstack(&dc(&g[1], &h1)?)?;
                (c0, c1m)
            }
        };
        Ok((0..m0.rows())
            .map(|i| (0..m0.cols()).map(|j| UniPoly::linear(m0.get(i, j).clone(), m1.get(i, j).clone())).collect())
            .collect())
    }

    pub fn to_json(&self) -> Value {
        match self {
            ProbeLine::Y { v0, v1 } => json!({"v0": grid(&[v0.clone()])[0], "v1": grid(&[v1.clone()])[0]}),
            ProbeLine::YDual { f0, f1 } => json!({"f0": grid(&[f0.clone()])[0], "f1": grid(&[f1.clone()])[0]}),
            ProbeLine::Z { u, .. } => json!({"u": grid(u)}),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProbeOptions {
    pub groups: usize,
    pub minors_per_group: usize,
    /// Extra rounds (each adding minors) before giving up on instability.
    pub max_retries: usize,
    pub max_line_resamples: usize,
    pub primes: Vec<u64>,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions {
            groups: 2,
            minors_per_group: 5,
            max_retries: 4,
            max_line_resamples: 5,
            primes: modp::DEFAULT_PRIMES.to_vec(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DegreeProbeResult {
    pub which: StratumKind,
    pub line: ProbeLine,
    /// Monic gcd of the sampled maximal minors.
    pub poly: UniPoly,
    pub degree: usize,
    pub minors_used: usize,
    pub retries: usize,
    pub line_resamples: usize,
    pub group_degrees: Vec<usize>,
    /// gcd degree of the same minors reduced modulo each prime.
    pub modular_degrees: Vec<(u64, usize)>,
}

impl DegreeProbeResult {
    pub fn modular_agree(&self) -> bool {
        self.modular_degrees.iter().all(|&(_, d)| d == self.degree)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "which": self.which.tag(),
            "degree": self.degree,
            "poly": self.poly.coeffs().iter().map(fmt_scalar).collect::<Vec<_>>(),
            "minors_used": self.minors_used,
            "retries": self.retries,
            "line_resamples": self.line_resamples,
            "group_degrees": self.group_degrees,
            "modular_degrees": self.modular_degrees.iter().map(|(p, d)| json!({"p": p, "degree": d})).collect::<Vec<_>>(),
            "modular_agree": self.modular_agree(),
            "line": self.line.to_json(),
        })
    }
}

enum GcdOutcome {
    Stable(DegreeProbeResult),
    /// Every sampled minor vanished identically: the line lies in the locus.
    LineInLocus,
}

/// Degree of the restricted equation of Y_A, Y_{A⊥} or Z_A along random lines.
pub fn degree_probe(a: &Subspace, which: StratumKind, rng: &mut EpwRng, opts: &ProbeOptions) -> Result<DegreeProbeResult> {
    for resample in 0..=opts.max_line_resamples {
        let line = ProbeLine::random(which, opts.groups, rng);
        match probe_line_inner(a, line, rng, opts)? {
            GcdOutcome::Stable(mut r) => {
                r.line_resamples = resample;
                return Ok(r);
            }
            GcdOutcome::LineInLocus => continue,
        }
    }
    Err(Error::Degenerate(format!("{} lines in a row lie in the locus", opts.max_line_resamples + 1)))
}

/// Restricted equation along a given line; errors if the line lies in the locus.
pub fn probe_line(a: &Subspace, line: ProbeLine, rng: &mut EpwRng, opts: &ProbeOptions) -> Result<DegreeProbeResult> {
    match probe_line_inner(a, line, rng, opts)? {
        GcdOutcome::Stable(r) => Ok(r),
        GcdOutcome::LineInLocus => Err(Error::Degenerate("line lies in the locus".into())),
    }
}

fn probe_line_inner(a: &Subspace, line: ProbeLine, rng: &mut EpwRng, opts: &ProbeOptions) -> Result<GcdOutcome> {
    if a.dim() != 10 {
        return Err(Error::Degenerate("degree probes need a 10-dimensional A".into()));
    }
    let groups = opts.groups.max(2);
    let line = match line {
        ProbeLine::Z { u, g, c } if c.len() < groups => {
            let mut extra = ProbeLine::z_from(u.clone(), groups - c.len(), rng)?;
            if let ProbeLine::Z { c: more, .. } = &mut extra {
                let mut all = c;
                all.append(more);
                ProbeLine::Z { u, g, c: all }
            } else {
                unreachable!()
            }
        }
        other => other,
    };
    let mut mats: Vec<Vec<Vec<UniPoly>>> = Vec::with_capacity(groups);
    for gidx in 0..groups {
        mats.push(mix_rows(&line.matrix(a, gidx)?, rng));
    }
    let nrows = mats[0].len();
    let mut per_group = opts.minors_per_group.max(5);
    for retry in 0..=opts.max_retries {
        let subsets: Vec<Vec<Vec<usize>>> = (0..groups)
            .map(|_| {
                (0..per_group)
                    .map(|_| {
                        let mut rows: Vec<usize> = (0..nrows).collect();
                        rows.shuffle(rng);
                        rows.truncate(10);
                        rows.sort_unstable();
                        rows
                    })
                    .collect()
            })
            .collect();
        let minors: Vec<Vec<UniPoly>> = subsets
            .par_iter()
            .enumerate()
            .map(|(gidx, rows)| {
                rows.par_iter()
                    .map(|r| linalg::det_poly(&r.iter().map(|&i| mats[gidx][i].clone()).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        if minors.iter().flatten().all(UniPoly::is_zero) {
            return Ok(GcdOutcome::LineInLocus);
        }
        let group_gcds: Vec<UniPoly> =
            minors.iter().map(|ms| ms.iter().fold(UniPoly::zero(), |g, m| UniPoly::gcd(&g, m))).collect();
        let overall = group_gcds.iter().fold(UniPoly::zero(), |g, m| UniPoly::gcd(&g, m));
        let degs: Vec<Option<usize>> = group_gcds.iter().map(UniPoly::degree).collect();
        let stable = degs.iter().all(|d| *d == overall.degree()) && overall.degree().is_some();
        if stable {
            let modular_degrees = modular_gcd_degrees(&mats, &subsets, &opts.primes)?;
            let degree = overall.degree().expect("nonzero gcd");
            return Ok(GcdOutcome::Stable(DegreeProbeResult {
                which: line.kind(),
                line,
                poly: overall,
                degree,
                minors_used: minors.iter().map(Vec::len).sum(),
                retries: retry,
                line_resamples: 0,
                group_degrees: degs.into_iter().map(|d| d.unwrap_or(usize::MAX)).collect(),
                modular_degrees,
            }));
        }
        per_group += 5;
    }
    Err(Error::Unstable(format!(
        "{} probe: group gcd degrees disagree after {} retries",
        line.kind().tag(),
        opts.max_retries
    )))
}

/// R·M for a random invertible constant R. Coordinate row subsets of the raw
/// matrices compute Plücker coordinates of spaces like ⋀²ker f(t), which are
/// often products of coordinates of the line and so share linear factors.
fn mix_rows(m: &[Vec<UniPoly>], rng: &mut EpwRng) -> Vec<Vec<UniPoly>> {
    let n = m.len();
    let r = loop {
        let entries = rng::rand_vec(rng, n * n);
        let r = Mat::from_fn(n, n, |i, j| entries[n * i + j].clone());
        if r.rank() == n {
            break r;
        }
    };
    (0..n)
        .map(|i| {
            (0..m[0].len())
                .map(|j| (0..n).fold(UniPoly::zero(), |acc, k| acc.add(&m[k][j].scale(r.get(i, k)))))
                .collect()
        })
        .collect()
}

/// gcd degree of the same minors over F_p, computed by evaluation and interpolation mod p.
fn modular_gcd_degrees(mats: &[Vec<Vec<UniPoly>>], subsets: &[Vec<Vec<usize>>], primes: &[u64]) -> Result<Vec<(u64, usize)>> {
    primes
        .par_iter()
        .map(|&p| {
            let mut g = modp::PolyP::new(Vec::new(), p);
            for (gidx, rows) in subsets.iter().enumerate() {
                for r in rows {
                    let sub: Vec<Vec<modp::PolyP>> = r
                        .iter()
                        .map(|&i| mats[gidx][i].iter().map(|e| modp::PolyP::from_unipoly(e, p)).collect::<Result<_>>())
                        .collect::<Result<_>>()?;
                    let d = det_poly_mod(&sub, p);
                    g = modp::PolyP::gcd(&g, &d);
                }
            }
            Ok((p, g.degree().unwrap_or(usize::MAX)))
        })
        .collect()
}

fn det_poly_mod(m: &[Vec<modp::PolyP>], p: u64) -> modp::PolyP {
    let mut bound = 0;
    for row in m {
        match row.iter().filter_map(modp::PolyP::degree).max() {
            Some(d) => bound += d,
            None => return modp::PolyP::new(Vec::new(), p),
        }
    }
    let xs: Vec<u64> = (0..=bound as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&x| {
            let ev: Vec<Vec<u64>> = m
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.c.iter().rev().fold(0, |acc, &c| modp::add(modp::mul(acc, x, p), c, p)))
                        .collect()
                })
                .collect();
            modp::det(ev, p)
        })
        .collect();
    modp::PolyP::interpolate(&xs, &ys, p)
}

// ---------------------------------------------------------------------------
// Kernel locus Σ₁ and isotropic locus Σ₂

#[derive(Clone, Debug)]
pub struct KernelPoint {
    pub a: Vec<Scalar>,
    pub v0: Vec<Scalar>,
    /// a ∈ v₀∧⋀²V₅
    pub in_v_wedge: bool,
    pub y_ell: usize,
}

#[derive(Clone, Debug)]
pub struct ConicCheck {
    /// dim of the span of the sampled points in V₆.
    pub span_dim: usize,
    /// rank of the 6×6 matrix of conic monomials in plane coordinates.
    pub monomial_rank: usize,
}

impl ConicCheck {
    /// Six points on a plane conic, not on a line.
    pub fn on_conic_not_line(&self) -> bool {
        self.span_dim == 3 && self.monomial_rank <= 5
    }
}

#[derive(Clone, Debug)]
pub struct KernelLocusReport {
    pub ell: usize,
    pub points: Vec<KernelPoint>,
    pub conic: Option<ConicCheck>,
}

impl KernelLocusReport {
    pub fn all_checks_pass(&self) -> bool {
        self.points.iter().all(|p| p.in_v_wedge && p.y_ell >= 1)
            && self.conic.as_ref().is_none_or(ConicCheck::on_conic_not_line)
    }
}

/// ker κ_a for a ∈ ⋀³V₅ with κ_a of rank 4.
pub fn kernel_point(a: &[Scalar], v5basis: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
    let k = exterior::two_form_of_trivector(&KVector::new(3, a.to_vec())?, v5basis)?;
    match k.rank() {
        4 => Ok(linalg::normalize_projective(&k.kernel()[0])),
        2 => Err(Error::Degenerate("κ_a has rank 2: a is decomposable".into())),
        r => Err(Error::Degenerate(format!("κ_a has rank {r}"))),
    }
}

fn kernel_point_checked(l: &Subspace, a: &[Scalar], f: &[Scalar], v5b: &[Vec<Scalar>]) -> Result<KernelPoint> {
    let v0 = kernel_point(a, v5b)?;
    let vw = induced_subspace(InducedSpec::VWedge2V5(&v0, f))?.span;
    Ok(KernelPoint { a: a.to_vec(), in_v_wedge: vw.contains(a), y_ell: y_stratum(l, &v0)?.ell, v0 })
}

/// Σ₁: the points v₀(a) = ker κ_a for a ∈ P(A ∩ ⋀³V₅). For ℓ ≥ 2, six points
/// on a pencil in A ∩ ⋀³V₅ are checked to lie on a conic spanning a plane.
pub fn kernel_locus(l: &Subspace, f: &[Scalar], rng: &mut EpwRng) -> Result<KernelLocusReport> {
    let v5b = exterior::hyperplane_basis(f)?;
    let w3 = induced_subspace(InducedSpec::Wedge3V5(f))?.span;
    let k = l.intersect(&w3)?;
    let ell = k.dim();
    if ell == 0 {
        return Err(Error::Degenerate("A ∩ ⋀³V₅ = 0".into()));
    }
    if ell == 1 {
        let p = kernel_point_checked(l, &k.basis()[0], f, &v5b)?;
        return Ok(KernelLocusReport { ell, points: vec![p], conic: None });
    }
    let x = linalg::combine(&rng::rand_vec(rng, ell), k.basis(), AMBIENT);
    let y = linalg::combine(&rng::rand_vec(rng, ell), k.basis(), AMBIENT);
    let mut points = Vec::new();
    let mut t = 0i64;
    while points.len() < 6 {
        let a = linalg::add_vec(&x, &linalg::scale_vec(&y, &linalg::q(t)));
        t += 1;
        if linalg::is_zero_vec(&a) {
            continue;
        }
        points.push(kernel_point_checked(l, &a, f, &v5b)?);
        if t > 60 {
            return Err(Error::Degenerate("pencil in A ∩ ⋀³V₅ keeps hitting special points".into()));
        }
    }
    let vs: Vec<Vec<Scalar>> = points.iter().map(|p| p.v0.clone()).collect();
    let conic = (ell <= 3).then(|| conic_check(&vs)).transpose()?;
    Ok(KernelLocusReport { ell, points, conic })
}

/// Span dimension and the rank of the conic-monomial matrix in coordinates on the span.
pub fn conic_check(points: &[Vec<Scalar>]) -> Result<ConicCheck> {
    let span = Subspace::span(6, points)?;
    let span_dim = span.dim();
    if span_dim != 3 {
        return Ok(ConicCheck { span_dim, monomial_rank: 0 });
    }
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| {
            let c = span.coordinates(p).expect("point lies in its span");
            let (x, y, z) = (&c[0], &c[1], &c[2]);
            vec![x * x, x * y, y * y, x * z, y * z, z * z]
        })
        .collect();
    Ok(ConicCheck { span_dim, monomial_rank: Mat::from_rows(&rows)?.rank() })
}

/// k = dim(A ∩ ⋀²U₃∧V₅) for U₃ ⊂ V₅ = ker f.
pub fn isotropic_locus_membership(l: &Subspace, f: &[Scalar], u3: &[Vec<Scalar>]) -> Result<usize> {
    let s = induced_subspace(InducedSpec::Wedge2U3V5(u3, f))?.span;
    Ok(l.intersect(&s)?.dim())
}

#[derive(Clone, Debug)]
pub struct Prz2Report {
    pub a0: Vec<Scalar>,
    pub kernel: Vec<Scalar>,
    pub samples: Vec<Vec<Vec<Scalar>>>,
    pub memberships: Vec<usize>,
    /// dim of the tangent space to the κ-isotropic 3-spaces at the first sample.
    pub tangent_dim: usize,
}

/// κ_{a₀}-isotropic 3-spaces U₃ = ⟨ker κ, u, w⟩ ⊂ V₅ with κ(u, w) = 0, in the ℓ = 1 regime.
pub fn prz2_fiber_samples(l: &Subspace, f: &[Scalar], count: usize, rng: &mut EpwRng) -> Result<Prz2Report> {
    let v5b = exterior::hyperplane_basis(f)?;
    let w3 = induced_subspace(InducedSpec::Wedge3V5(f))?.span;
    let k = l.intersect(&w3)?;
    if k.dim() != 1 {
        return Err(Error::Degenerate(format!("expected ℓ = 1, found {}", k.dim())));
    }
    let a0 = k.basis()[0].clone();
    let kappa = exterior::two_form_of_trivector(&KVector::new(3, a0.clone())?, &v5b)?;
    if kappa.rank() != 4 {
        return Err(Error::Degenerate(format!("κ_a₀ has rank {}", kappa.rank())));
    }
    let k0c = kappa.matrix.kernel().basis()[0].clone();
    let mut samples = Vec::new();
    let mut memberships = Vec::new();
    let mut coord_samples = Vec::new();
    while samples.len() < count.max(1) {
        let u = rng::rand_vec(rng, 5);
        // w ∈ {x : κ(u, x) = 0}
        let perp = Mat::from_rows(&[kappa.matrix.transpose().apply(&u)])?.kernel();
        let w = linalg::combine(&rng::rand_vec(rng, perp.dim()), perp.basis(), 5);
        let c = vec![k0c.clone(), u, w];
        if Subspace::span(5, &c)?.dim() != 3 {
            continue;
        }
        let u3: Vec<Vec<Scalar>> = c.iter().map(|x| linalg::combine(x, &v5b, 6)).collect();
        memberships.push(isotropic_locus_membership(l, f, &u3)?);
        samples.push(u3);
        coord_samples.push(c);
    }
    let tangent_dim = isotropic_tangent_dim(&kappa.matrix, &coord_samples[0])?;
    Ok(Prz2Report { a0, kernel: linalg::combine(&k0c, &v5b, 6), samples, memberships, tangent_dim })
}

/// 6 − rank of T: Hom(U₃, V₅/U₃) → ⋀²U₃^∨, φ ↦ κ(φ·,·) + κ(·,φ·).
pub fn isotropic_tangent_dim(kappa: &Mat, u3: &[Vec<Scalar>]) -> Result<usize> {
    let comp = Subspace::span(5, u3)?.complement_in(&Subspace::full(5))?;
    let ev = |x: &[Scalar], y: &[Scalar]| linalg::dot(x, &kappa.apply(y));
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    let mut cols = Vec::new();
    for i in 0..3 {
        for c in &comp {
            // φ sends u_i to c and the other basis vectors to 0.
            let col: Vec<Scalar> = pairs
                .iter()
                .map(|&(p, r)| {
                    let mut s = Scalar::zero();
                    if p == i {
                        s += ev(c, &u3[r]);
                    }
                    if r == i {
                        s += ev(&u3[p], c);
                    }
                    s
                })
                .collect();
            cols.push(col);
        }
    }
    let t = Mat::from_fn(3, cols.len(), |r, c| cols[c][r].clone());
    Ok(cols.len() - t.rank())
}

// ---------------------------------------------------------------------------
// Contact hyperplanes and hat points

/// (a, v, f) with a ∈ A, v∧a = 0, f(v) = 0 and a ∈ ⋀³ ker f.
#[derive(Clone, Debug)]
pub struct HatPoint {
    pub a: Vec<Scalar>,
    pub v: Vec<Scalar>,
    pub f: Vec<Scalar>,
}

impl HatPoint {
    pub fn is_valid(&self, l: &Subspace) -> Result<bool> {
        let a = KVector::new(3, self.a.clone())?;
        let v = KVector::vector(&self.v)?;
        Ok(!a.is_zero()
            && l.contains(&self.a)
            && v.wedge(&a)?.is_zero()
            && linalg::dot(&self.f, &self.v).is_zero()
            && a.contract(&self.f)?.is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct ContactSample {
    pub xi: Vec<Scalar>,
    pub f: Vec<Scalar>,
    pub f_vanishes_on_v: bool,
    pub dual_ell: usize,
    pub hat_point_valid: bool,
}

#[derive(Clone, Debug)]
pub struct ContactReport {
    pub xi: [Vec<Scalar>; 2],
    pub samples: Vec<ContactSample>,
    /// ξ with v∧ξ∧ξ = 0, skipped.
    pub skipped: usize,
}

impl ContactReport {
    pub fn all_pass(&self) -> bool {
        !self.samples.is_empty()
            && self.samples.iter().all(|s| s.f_vanishes_on_v && s.dual_ell >= 1 && s.hat_point_valid)
    }
}

/// Covectors v∧ξ∧ξ for ξ in the pencil ⟨ξ₁, ξ₂⟩ with A ∩ F_v = ⟨v∧ξ₁, v∧ξ₂⟩.
pub fn contact_hyperplanes(l: &Subspace, v: &[Scalar], count: usize, rng: &mut EpwRng) -> Result<ContactReport> {
    let rep = y_stratum(l, v)?;
    if rep.ell != 2 {
        return Err(Error::Degenerate(format!("y-stratum of v is {}, expected 2", rep.ell)));
    }
    let vk = KVector::vector(v)?;
    let wm = exterior::wedge_matrix(&vk, 2)?;
    let solve = |w: &[Scalar]| wm.solve_right(w).ok_or_else(|| Error::NotContained("witness outside F_v".into()));
    let xi = [solve(&rep.witness[0])?, solve(&rep.witness[1])?];
    let mut samples = Vec::new();
    let mut skipped = 0;
    let mut tries = 0;
    while samples.len() < count {
        tries += 1;
        if tries > 20 * count.max(1) {
            break;
        }
        let s = rng::rand_scalar(rng);
        let x = linalg::add_vec(&linalg::scale_vec(&xi[0], &s), &xi[1]);
        let xk = KVector::new(2, x.clone())?;
        let w = vk.wedge(&xk)?.wedge(&xk)?;
        let f = exterior::five_to_covector(&w)?;
        if linalg::is_zero_vec(&f) {
            skipped += 1;
            continue;
        }
        let a = vk.wedge(&xk)?.into_coords();
        let hat = HatPoint { a, v: v.to_vec(), f: f.clone() };
        samples.push(ContactSample {
            f_vanishes_on_v: linalg::dot(&f, v).is_zero(),
            dual_ell: y_dual_stratum(l, &f)?.ell,
            hat_point_valid: hat.is_valid(l)?,
            xi: x,
            f,
        });
    }
    Ok(ContactReport { xi, samples, skipped })
}

// ---------------------------------------------------------------------------
// Pencils

#[derive(Clone, Debug)]
pub struct JointWitness {
    pub t: PencilParam,
    pub a1: Vec<Scalar>,
    pub a2: Vec<Scalar>,
    pub ell_at_t: usize,
}

/// For v ∈ Y_{A₁} ∩ Y_{A₂} with B ∩ F_v = 0, the member A = B ⊕ ⟨a₁, a₂⟩ of the
/// pencil with v ∈ Y^{≥2}_A.
pub fn joint_stratum_witness(p: &LagrangianPencil, v: &[Scalar]) -> Result<JointWitness> {
    if y_stratum(&p.b, v)?.ell > 0 {
        return Err(Error::NotUnique("B ∩ F_v ≠ 0".into()));
    }
    let r1 = y_stratum(&p.a1(), v)?;
    let r2 = y_stratum(&p.a2(), v)?;
    if r1.ell == 0 || r2.ell == 0 {
        return Err(Error::Degenerate("v must lie on both Y_{A₁} and Y_{A₂}".into()));
    }
    let (a1, a2) = (r1.witness[0].clone(), r2.witness[0].clone());
    let a = p.b.with_vectors(&[a1.clone(), a2.clone()])?;
    if a.dim() != 10 {
        return Err(Error::Degenerate("a₁, a₂ dependent modulo B".into()));
    }
    if !lagrangian::is_lagrangian(&a).ok {
        return Err(Error::Degenerate("B ⊕ ⟨a₁, a₂⟩ is not Lagrangian".into()));
    }
    let t = p.locate(&a)?;
    let ell_at_t = y_stratum(&p.member(&t)?, v)?.ell;
    Ok(JointWitness { t, a1, a2, ell_at_t })
}

#[derive(Clone, Debug)]
pub struct PlantedPair {
    pub a1: Subspace,
    pub a2: Subspace,
    pub b: Subspace,
    pub v: Vec<Scalar>,
    /// The member through v∧ξ₁, v∧ξ₂.
    pub a0: Subspace,
}

/// A₁, A₂ with A₁ ∩ A₂ = B of dim 8 and v ∈ Y_{A₁} ∩ Y_{A₂}. With `degenerate`
/// B contains a point of F_v, so the joint witness is not unique.
pub fn planted_pencil_pair(rng: &mut EpwRng, degenerate: bool) -> Result<PlantedPair> {
    for _ in 0..20 {
        let v = rng::rand_nonzero_vec(rng, 6);
        let l0 = plant_y2(&v, rng)?;
        let a0 = l0.a().clone();
        let rep = y_stratum(&a0, &v)?;
        if rep.ell != 2 {
            continue;
        }
        let (a1, a2) = (rep.witness[0].clone(), rep.witness[1].clone());
        let fv_part = Subspace::span(AMBIENT, &[a1.clone(), a2.clone()])?;
        let (b, p1, p2) = if degenerate {
            let mut gens = vec![a1.clone()];
            gens.extend((0..7).map(|_| linalg::combine(&rng::rand_vec(rng, 10), a0.basis(), AMBIENT)));
            let b = Subspace::span(AMBIENT, &gens)?;
            if b.dim() != 8 {
                continue;
            }
            let c = b.complement_in(&a0)?;
            (b, c[0].clone(), c[1].clone())
        } else {
            let gens: Vec<Vec<Scalar>> =
                (0..8).map(|_| linalg::combine(&rng::rand_vec(rng, 10), a0.basis(), AMBIENT)).collect();
            let b = Subspace::span(AMBIENT, &gens)?;
            if b.dim() != 8 || b.intersect(&fv_part)?.dim() != 0 {
                continue;
            }
            (b, a1, a2)
        };
        let bperp = exterior::omega_orthogonal(&b);
        let mut members = Vec::new();
        for p in [&p1, &p2] {
            let cond = Mat::from_rows(&[exterior::omega_row(p)])?.kernel().intersect(&bperp)?;
            let w = linalg::combine(&rng::rand_vec(rng, cond.dim()), cond.basis(), AMBIENT);
            if a0.contains(&w) {
                break;
            }
            members.push(b.with_vectors(&[p.clone(), w])?);
        }
        if members.len() != 2 || members[0].intersect(&members[1])? != b {
            continue;
        }
        let a2s = members.pop().expect("two members");
        let a1s = members.pop().expect("two members");
        return Ok(PlantedPair { a1: a1s, a2: a2s, b, v, a0 });
    }
    Err(Error::Degenerate("could not construct a pencil pair".into()))
}

/// Stratum of v along several pencil parameters.
pub fn pencil_strata(p: &LagrangianPencil, v: &[Scalar], ts: &[PencilParam]) -> Result<Vec<usize>> {
    ts.iter().map(|t| Ok(y_stratum(&p.member(t)?, v)?.ell)).collect()
}
