//! Nilpotency filtration, annihilator and generator counts.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::exactlin::{Matrix, Subspace};
use crate::identities::{holds_polarized, in_variety, Counterexample, SignedIdentity, VarietyName};
use crate::superalgebra::{AlgebraBuilder, AlgebraError, Parity, SuperAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("algebra is not nilpotent within {0} steps")]
    NotNilpotent(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepClass {
    Abelian,
    TwoStep,
    ThreeStep,
    Other,
}

impl StepClass {
    pub fn from_index(nil_index: Option<usize>) -> StepClass {
        match nil_index {
            Some(t) if t <= 2 => StepClass::Abelian,
            Some(3) => StepClass::TwoStep,
            Some(4) => StepClass::ThreeStep,
            _ => StepClass::Other,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            StepClass::Abelian => "abelian",
            StepClass::TwoStep => "2-step",
            StepClass::ThreeStep => "3-step",
            StepClass::Other => "other",
        }
    }
}

impl fmt::Display for StepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilReport {
    /// Smallest `t` with every product of `t` elements zero; `None` if no such
    /// `t ≤ dim + 1`.
    pub nil_index: Option<usize>,
    pub step_class: StepClass,
    /// `power_dims[k-1] = dim A^k` where `A^k` spans all products of `k` elements.
    pub power_dims: Vec<usize>,
}

/// `A^k = Σ_{i+j=k} A^i A^j` for `k = 1..=max_len`.
pub fn powers(a: &SuperAlgebra, max_len: usize) -> Vec<Subspace> {
    let mut w: Vec<Subspace> = vec![Subspace::full(a.dim())];
    for k in 2..=max_len {
        let mut acc = Subspace::zero(a.dim());
        for i in 1..k {
            let j = k - i;
            if w[i - 1].is_zero() || w[j - 1].is_zero() {
                continue;
            }
            let p = a.product_space(&w[i - 1], &w[j - 1]);
            acc = acc.sum(&p).expect("same ambient");
        }
        w.push(acc);
    }
    w
}

pub fn nil_report(a: &SuperAlgebra) -> NilReport {
    let n = a.dim();
    if n == 0 {
        return NilReport { nil_index: Some(1), step_class: StepClass::Abelian, power_dims: vec![0] };
    }
    let bound = n + 1;
    let w = powers(a, bound);
    let dims: Vec<usize> = w.iter().map(Subspace::dim).collect();
    match dims.iter().position(|&d| d == 0) {
        Some(p) => {
            let t = p + 1;
            NilReport { nil_index: Some(t), step_class: StepClass::from_index(Some(t)), power_dims: dims[..t].to_vec() }
        }
        None => NilReport { nil_index: None, step_class: StepClass::Other, power_dims: dims },
    }
}

/// Dimensions of the spans of each bracketing shape of `k` leaves, summed per `k`.
/// Independent of `powers`: every shape is enumerated explicitly.
pub fn power_dims_by_shapes(a: &SuperAlgebra, max_len: usize) -> Vec<usize> {
    let n = a.dim();
    // shapes[k-1] holds one subspace per bracketing shape with k leaves.
    let mut shapes: Vec<Vec<Subspace>> = vec![vec![Subspace::full(n)]];
    for k in 2..=max_len {
        let mut level = Vec::new();
        for i in 1..k {
            for l in &shapes[i - 1] {
                for r in &shapes[k - i - 1] {
                    level.push(a.product_space(l, r));
                }
            }
        }
        shapes.push(level);
    }
    shapes
        .iter()
        .map(|level| {
            level
                .iter()
                .try_fold(Subspace::zero(n), |acc, s| acc.sum(s))
                .expect("same ambient")
                .dim()
        })
        .collect()
}

/// `dim` of left-normed powers `L_1 = A`, `L_k = L_{k-1} A`.
pub fn left_normed_power_dims(a: &SuperAlgebra, max_len: usize) -> Vec<usize> {
    let full = Subspace::full(a.dim());
    let mut cur = full.clone();
    let mut out = vec![cur.dim()];
    for _ in 2..=max_len {
        cur = a.product_space(&cur, &full);
        out.push(cur.dim());
    }
    out
}

/// `x²x = 0` and `xx² = 0`, checked through their Koszul-signed linearizations.
pub fn cube_zero(a: &SuperAlgebra) -> bool {
    cube_zero_witness(a).is_none()
}

pub fn cube_zero_witness(a: &SuperAlgebra) -> Option<Counterexample> {
    for s in ["(xx)x", "x(xx)"] {
        let id = SignedIdentity::from_strs(s, &[(1, s, &[])]).expect("well formed");
        let v = holds_polarized(a, &id).expect("degree three polarization");
        if let Some(c) = v.counterexample() {
            return Some(c.clone());
        }
    }
    None
}

/// Annihilator split by parity; `total = even ⊕ odd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    pub even: Subspace,
    pub odd: Subspace,
    pub total: Subspace,
}

impl GradedSubspace {
    pub fn dim(&self) -> usize {
        self.total.dim()
    }
}

/// `{x : xA = Ax = 0}`.
pub fn annihilator(a: &SuperAlgebra) -> GradedSubspace {
    let n = a.dim();
    let mut m = Matrix::zeros(2 * n * n, n);
    for j in 0..n {
        for i in 0..n {
            for &(k, ref c) in a.basis_product(j, i) {
                m.set(j * n + k, i, c.clone());
            }
            for &(k, ref c) in a.basis_product(i, j) {
                m.set(n * n + j * n + k, i, c.clone());
            }
        }
    }
    let total = Subspace::span(n, m.kernel().iter()).expect("kernel fits");
    let even = total.intersection(&a.block_subspace(Parity::Even)).expect("same ambient");
    let odd = total.intersection(&a.block_subspace(Parity::Odd)).expect("same ambient");
    GradedSubspace { even, odd, total }
}

/// `dim A - dim A²`, the minimal number of generators of a nilpotent algebra.
pub fn generator_count(a: &SuperAlgebra) -> Result<usize, StructureError> {
    let r = nil_report(a);
    if r.nil_index.is_none() {
        return Err(StructureError::NotNilpotent(a.dim() + 1));
    }
    Ok(a.dim() - a.square().dim())
}

/// `-d + d² + 2d³ + d⁴`.
pub fn dim_bound(d: usize) -> usize {
    let d = d as u128;
    (d * d + 2 * d * d * d + d * d * d * d - d) as usize
}

pub fn dim_bound_check(a: &SuperAlgebra) -> Result<bool, StructureError> {
    Ok(a.dim() <= dim_bound(generator_count(a)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingOutcome {
    /// The regraded algebra lies in the symmetric Zinbiel super variety.
    Valid(SuperAlgebra),
    /// Parity forcing from odd `e1`, `e2` hits a contradiction on `e_i e_j → e_k`.
    GradingConflict { i: usize, j: usize, k: usize },
    /// The regrading is consistent but a super identity fails.
    IdentityViolation { regraded: SuperAlgebra, counterexample: Counterexample },
}

impl GradingOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, GradingOutcome::Valid(_))
    }
}

/// Declares `e1`, `e2` odd, propagates parity through nonzero products, makes
/// every unforced vector even, and tests the super symmetric Zinbiel identities.
/// The basis is reordered even first; labels follow their vectors.
pub fn odd_generator_grading_check(a: &SuperAlgebra) -> Result<GradingOutcome, StructureError> {
    let n = a.dim();
    let mut parity: Vec<Option<Parity>> = vec![None; n];
    for p in parity.iter_mut().take(2.min(n)) {
        *p = Some(Parity::Odd);
    }
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                let (Some(pi), Some(pj)) = (parity[i], parity[j]) else { continue };
                for &(k, _) in a.basis_product(i, j) {
                    match parity[k] {
                        None => {
                            parity[k] = Some(pi + pj);
                            changed = true;
                        }
                        Some(pk) if pk != pi + pj => {
                            return Ok(GradingOutcome::GradingConflict { i, j, k });
                        }
                        _ => {}
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let parities: Vec<Parity> = parity.iter().map(|p| p.unwrap_or(Parity::Even)).collect();
    let mut b = AlgebraBuilder::new(parities.clone());
    for (i, j, k, c) in a.entries() {
        if parities[k] != parities[i] + parities[j] {
            return Ok(GradingOutcome::GradingConflict { i, j, k });
        }
        b.add_entry(i, j, k, c);
    }
    let (alg, perm) = b.build()?;
    let mut labels: Vec<String> = vec![String::new(); n];
    for (old, &new) in perm.iter().enumerate() {
        labels[new] = a.label(old).into();
    }
    let alg = alg.with_labels(labels)?;
    match in_variety(&alg, VarietyName::SymmetricZinbiel).expect("graded variety") {
        v if v.holds() => Ok(GradingOutcome::Valid(alg)),
        v => Ok(GradingOutcome::IdentityViolation {
            counterexample: v.counterexample().cloned().expect("failure carries a witness"),
            regraded: alg,
        }),
    }
}

/// True when every structure constant vanishes on products of three elements.
pub fn is_two_step(a: &SuperAlgebra) -> bool {
    matches!(nil_report(a).nil_index, Some(t) if t <= 3)
}
