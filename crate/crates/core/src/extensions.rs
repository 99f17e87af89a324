//! Invariant scalar products, scalar 2-cocycles, central extensions,
//! admissible triples, semi-direct products, and even and odd double
//! extensions together with their converse decompositions.
//!
//! Endomorphisms are matrices acting on coordinate columns: `δ(e_i) = Σ_k δ[k][i] e_k`.
//! Bilinear maps `ω` are stored as Gram-style matrices: `ω(e_i, e_j) = ω[i][j]`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{dot, frac, int, is_zero_vec, unit_vec, zero_vec, LinAlgError, Matrix, Scalar, Subspace};
use crate::identities::{in_variety, Counterexample, IdentityError, SignedIdentity, Tree, VarietyName};
use crate::structure::{annihilator, nil_report};
use crate::superalgebra::{koszul, AlgebraBuilder, AlgebraError, Parity, SuperAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("matrix of size {found} does not fit an algebra of dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("form check failed: {0}")]
    Form(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error("triple is not admissible: {0}")]
    Inadmissible(AdmissibleViolation),
    #[error("cocycle {index} does not give an algebra in the variety: identity {} fails at {:?}", .counterexample.identity, .counterexample.tuple)]
    NotCocycle { index: usize, counterexample: Counterexample },
    #[error("not decomposable: {0}")]
    NotDecomposable(&'static str),
    #[error("contradiction with a proven statement: {0}")]
    Contradiction(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Identity(#[from] IdentityError),
}

fn neg_one_pow(odd: bool) -> Scalar {
    if odd {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

fn bit(p: Parity) -> bool {
    p.is_odd()
}

fn check_square(a: &SuperAlgebra, m: &Matrix) -> Result<(), ExtensionError> {
    if m.rows() != a.dim() || m.cols() != a.dim() {
        return Err(ExtensionError::DimensionMismatch { expected: a.dim(), found: m.rows().max(m.cols()) });
    }
    Ok(())
}

fn check_vector(a: &SuperAlgebra, v: &[Scalar]) -> Result<(), ExtensionError> {
    if v.len() != a.dim() {
        return Err(ExtensionError::DimensionMismatch { expected: a.dim(), found: v.len() });
    }
    Ok(())
}

/// A bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Self {
        BilinearForm { gram }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.gram.get(i, j)
    }

    /// `B(u, v) = uᵀ G v`.
    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let gv = self.gram.mul_vec(v).expect("vector fits the form");
        dot(u, &gv)
    }

    /// `v ↦ B(u, v)` as a row of coefficients.
    pub fn row(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.gram.transpose().mul_vec(u).expect("vector fits the form")
    }

    pub fn identity(n: usize) -> Self {
        BilinearForm::new(Matrix::identity(n))
    }

    /// Gram matrix in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> BilinearForm {
        let pt = p.transpose();
        BilinearForm::new(pt.mul(&self.gram).and_then(|m| m.mul(p)).expect("square matrices"))
    }

    /// Restriction to the span of `basis`.
    pub fn restrict(&self, basis: &[Vec<Scalar>]) -> BilinearForm {
        let k = basis.len();
        let mut g = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                g.set(i, j, self.eval(&basis[i], &basis[j]));
            }
        }
        BilinearForm::new(g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormChecks {
    pub even: bool,
    pub supersymmetric: bool,
    pub invariant: bool,
    pub nondegenerate: bool,
}

impl FormChecks {
    pub fn all(&self) -> bool {
        self.even && self.supersymmetric && self.invariant && self.nondegenerate
    }

    /// Name of the first failing check.
    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.even {
            Some("form is not even")
        } else if !self.supersymmetric {
            Some("form is not supersymmetric")
        } else if !self.invariant {
            Some("form is not invariant")
        } else if !self.nondegenerate {
            Some("form is degenerate")
        } else {
            None
        }
    }
}

/// Even: `B(A₀, A₁) = 0`; supersymmetric: `B(x,y) = (-1)^{|x||y|} B(y,x)`;
/// invariant: `B(xy, z) = B(x, yz)`; nondegenerate: invertible Gram matrix.
pub fn form_checks(a: &SuperAlgebra, b: &BilinearForm) -> Result<FormChecks, ExtensionError> {
    check_square(a, &b.gram)?;
    let n = a.dim();
    let g = &b.gram;
    let mut even = true;
    let mut supersymmetric = true;
    for i in 0..n {
        for j in 0..n {
            if a.parity(i) != a.parity(j) && !g.get(i, j).is_zero() {
                even = false;
            }
            if *g.get(i, j) != koszul(a.parity(i), a.parity(j)) * g.get(j, i) {
                supersymmetric = false;
            }
        }
    }
    let mut invariant = true;
    'outer: for i in 0..n {
        for j in 0..n {
            let xy = a.basis_product_vec(i, j);
            for k in 0..n {
                let lhs = b.eval(&xy, &unit_vec(n, k));
                let rhs = b.eval(&unit_vec(n, i), &a.basis_product_vec(j, k));
                if lhs != rhs {
                    invariant = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(FormChecks { even, supersymmetric, invariant, nondegenerate: g.is_invertible() })
}

/// Basis of the space of even, supersymmetric, invariant Gram matrices.
pub fn invariant_forms(a: &SuperAlgebra) -> Vec<Matrix> {
    let n = a.dim();
    let idx = |i: usize, j: usize| i * n + j;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if a.parity(i) != a.parity(j) {
                let mut r = zero_vec(n * n);
                r[idx(i, j)] = int(1);
                rows.push(r);
            } else if i < j {
                let mut r = zero_vec(n * n);
                r[idx(i, j)] = int(1);
                r[idx(j, i)] -= koszul(a.parity(i), a.parity(j));
                rows.push(r);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut r = zero_vec(n * n);
                for &(m, ref c) in a.basis_product(i, j) {
                    r[idx(m, k)] += c;
                }
                for &(m, ref c) in a.basis_product(j, k) {
                    r[idx(i, m)] -= c;
                }
                if !is_zero_vec(&r) {
                    rows.push(r);
                }
            }
        }
    }
    solve_rows(n * n, rows).into_iter().map(|v| reshape(n, &v)).collect()
}

/// First nondegenerate member of a fixed sequence of integer combinations of
/// `invariant_forms(a)`.
pub fn find_quadratic_form(a: &SuperAlgebra) -> Option<BilinearForm> {
    let basis = invariant_forms(a);
    if a.dim() == 0 {
        return Some(BilinearForm::new(Matrix::zeros(0, 0)));
    }
    if basis.is_empty() {
        return None;
    }
    for seed in 1..=8i64 {
        let mut g = Matrix::zeros(a.dim(), a.dim());
        for (t, m) in basis.iter().enumerate() {
            let c = int(((seed * (t as i64 + 3) * (t as i64 + 1)) % 7) - 3);
            g = g.add(&m.scale(&c)).expect("same shape");
        }
        if g.is_invertible() {
            return Some(BilinearForm::new(g));
        }
    }
    None
}

fn reshape(n: usize, v: &[Scalar]) -> Matrix {
    let rows = (0..n).map(|i| v[i * n..(i + 1) * n].to_vec()).collect();
    Matrix::from_rows(n, rows).expect("square reshape")
}

fn solve_rows(unknowns: usize, rows: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return (0..unknowns).map(|i| unit_vec(unknowns, i)).collect();
    }
    Matrix::from_rows(unknowns, rows).expect("row length").kernel()
}

/// Kernel of a linear condition on `n × n` matrices restricted to `mask`.
/// `condition` must be linear; it is sampled on matrix units.
fn linear_matrix_space(
    n: usize,
    mask: impl Fn(usize, usize) -> bool,
    condition: impl Fn(&Matrix) -> Vec<Scalar>,
) -> Vec<Matrix> {
    let units: Vec<(usize, usize)> =
        (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).filter(|&(r, c)| mask(r, c)).collect();
    if units.is_empty() {
        return Vec::new();
    }
    let columns: Vec<Vec<Scalar>> = units
        .iter()
        .map(|&(r, c)| {
            let mut e = Matrix::zeros(n, n);
            e.set(r, c, int(1));
            condition(&e)
        })
        .collect();
    let len = columns[0].len();
    let kernel = if len == 0 {
        (0..units.len()).map(|i| unit_vec(units.len(), i)).collect()
    } else {
        Matrix::from_columns(len, &columns).expect("equal lengths").kernel()
    };
    kernel
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zeros(n, n);
            for (coef, &(r, c)) in v.iter().zip(&units) {
                m.set(r, c, coef.clone());
            }
            m
        })
        .collect()
}

/// Quadratic algebras are symmetric Zinbiel and 2-step nilpotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticReport {
    pub symmetric: bool,
    pub symmetric_failure: Option<Counterexample>,
    pub nil_index: Option<usize>,
}

impl QuadraticReport {
    pub fn two_step(&self) -> bool {
        matches!(self.nil_index, Some(t) if t <= 3)
    }

    /// Both consequences hold.
    pub fn consistent(&self) -> bool {
        self.symmetric && self.two_step()
    }
}

/// Requires a quadratic left or right Zinbiel algebra; reports both consequences.
pub fn quadratic_consequences(a: &SuperAlgebra, b: &BilinearForm) -> Result<QuadraticReport, ExtensionError> {
    if let Some(f) = form_checks(a, b)?.first_failure() {
        return Err(ExtensionError::Form(f));
    }
    let left = in_variety(a, VarietyName::LeftZinbiel)?.holds();
    let right = in_variety(a, VarietyName::RightZinbiel)?.holds();
    if !left && !right {
        return Err(ExtensionError::Precondition("algebra is neither left nor right Zinbiel"));
    }
    let sym = in_variety(a, VarietyName::SymmetricZinbiel)?;
    Ok(QuadraticReport {
        symmetric: sym.holds(),
        symmetric_failure: sym.counterexample().cloned(),
        nil_index: nil_report(a).nil_index,
    })
}

/// True when every nonzero entry of `m` maps parity `p` to parity `p + degree`.
pub fn is_homogeneous_map(a: &SuperAlgebra, m: &Matrix, degree: Parity) -> bool {
    let n = a.dim();
    (0..n).all(|k| (0..n).all(|i| m.get(k, i).is_zero() || a.parity(k) == a.parity(i) + degree))
}

fn col(m: &Matrix, i: usize) -> Vec<Scalar> {
    m.column(i)
}

fn apply(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    m.mul_vec(v).expect("square map")
}

fn image_in_annihilator(a: &SuperAlgebra, delta: &Matrix) -> bool {
    let ann = annihilator(a);
    (0..a.dim()).all(|i| ann.total.contains(&col(delta, i)).expect("same ambient"))
}

fn kills_square(a: &SuperAlgebra, delta: &Matrix) -> bool {
    let n = a.dim();
    (0..n).all(|i| (0..n).all(|j| is_zero_vec(&apply(delta, &a.basis_product_vec(i, j)))))
}

/// Which of the two conditions fails and where.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoViolation {
    pub condition: &'static str,
    pub pair: (usize, usize),
}

/// `δ(xy) = δ(x)y + (-1)^{|y|(|x|+α)} yδ(x)` and `δ(xy) = -(-1)^{α|x|} xδ(y)`
/// on basis pairs; `None` when both hold.
pub fn cocycle_endo_check(
    a: &SuperAlgebra,
    b: &BilinearForm,
    delta: &Matrix,
    alpha: Parity,
) -> Result<Option<EndoViolation>, ExtensionError> {
    if let Some(f) = form_checks(a, b)?.first_failure() {
        return Err(ExtensionError::Form(f));
    }
    check_square(a, delta)?;
    if !is_homogeneous_map(a, delta, alpha) {
        return Err(ExtensionError::Precondition("delta is not homogeneous of the given degree"));
    }
    Ok(endo_violation(a, delta, alpha))
}

fn endo_residuals(a: &SuperAlgebra, delta: &Matrix, alpha: Parity, i: usize, j: usize) -> [Vec<Scalar>; 2] {
    let n = a.dim();
    let (px, py) = (bit(a.parity(i)), bit(a.parity(j)));
    let al = bit(alpha);
    let x = unit_vec(n, i);
    let y = unit_vec(n, j);
    let dxy = apply(delta, &a.basis_product_vec(i, j));
    let dx = col(delta, i);
    let dy = col(delta, j);
    let s1 = neg_one_pow(py && (px ^ al));
    let mut r1 = dxy.clone();
    sub_assign(&mut r1, &a.mul(&dx, &y));
    let t = a.mul(&y, &dx);
    axpy_neg(&mut r1, &s1, &t);
    let s2 = neg_one_pow(al && px);
    let mut r2 = dxy;
    let t = a.mul(&x, &dy);
    for (r, v) in r2.iter_mut().zip(t) {
        *r += &s2 * v;
    }
    [r1, r2]
}

fn sub_assign(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a -= b;
    }
}

fn axpy_neg(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a -= c * b;
    }
}

fn endo_violation(a: &SuperAlgebra, delta: &Matrix, alpha: Parity) -> Option<EndoViolation> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let [r1, r2] = endo_residuals(a, delta, alpha, i, j);
            if !is_zero_vec(&r1) {
                return Some(EndoViolation { condition: "(i) δ(xy) = δ(x)y + (-1)^{|y|(|x|+α)} yδ(x)", pair: (i, j) });
            }
            if !is_zero_vec(&r2) {
                return Some(EndoViolation { condition: "(ii) δ(xy) = -(-1)^{α|x|} xδ(y)", pair: (i, j) });
            }
        }
    }
    None
}

/// Basis of the homogeneous endomorphisms of degree `alpha` satisfying both
/// conditions of `cocycle_endo_check`.
pub fn cocycle_endo_space(a: &SuperAlgebra, alpha: Parity) -> Vec<Matrix> {
    let n = a.dim();
    linear_matrix_space(
        n,
        |k, i| a.parity(k) == a.parity(i) + alpha,
        |d| {
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let [r1, r2] = endo_residuals(a, d, alpha, i, j);
                    out.extend(r1);
                    out.extend(r2);
                }
            }
            out
        },
    )
}

/// `Ω(x, y) = B(δx, y)` as a Gram-style matrix: `δᵀ G`.
pub fn form_cocycle(b: &BilinearForm, delta: &Matrix) -> Matrix {
    delta.transpose().mul(&b.gram).expect("square")
}

/// `Z²`, `B²` and `dim H²` for scalar cocycles of one parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleSpace {
    pub z2_basis: Vec<Matrix>,
    pub b2_basis: Vec<Matrix>,
    /// `dim Z² − dim (B² ∩ Z²)`; equals `dim Z² − dim B²` when `B² ⊆ Z²`.
    pub h2_dim: usize,
    pub b2_contained: bool,
}

impl CocycleSpace {
    pub fn z2_dim(&self) -> usize {
        self.z2_basis.len()
    }

    pub fn b2_dim(&self) -> usize {
        self.b2_basis.len()
    }
}

fn bilinear_on(u: &[Scalar], v: &[Scalar], n: usize) -> Vec<Scalar> {
    let mut out = zero_vec(n * n);
    for (p, up) in u.iter().enumerate() {
        if up.is_zero() {
            continue;
        }
        for (q, vq) in v.iter().enumerate() {
            if !vq.is_zero() {
                out[p * n + q] += up * vq;
            }
        }
    }
    out
}

/// Linear functional `ω ↦` (new-coordinate component of the identity residual)
/// for every basis tuple of every identity, as rows over the `n²` entries of `ω`.
fn cocycle_rows(a: &SuperAlgebra, ids: &[SignedIdentity]) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let mut rows = Vec::new();
    if n == 0 {
        return rows;
    }
    for id in ids {
        let m = id.vars();
        let mut tuple = vec![0usize; m];
        loop {
            let parity = |v: usize| a.parity(tuple[v]);
            let mut row = zero_vec(n * n);
            for t in id.terms() {
                if let Tree::Mul(l, r) = &t.tree {
                    let lv = l.eval(a, &tuple);
                    if is_zero_vec(&lv) {
                        continue;
                    }
                    let rv = r.eval(a, &tuple);
                    let mut c = t.coeff.clone();
                    if t.sign.is_negative(&parity) {
                        c = -c;
                    }
                    let contrib = bilinear_on(&lv, &rv, n);
                    for (x, y) in row.iter_mut().zip(contrib) {
                        if !y.is_zero() {
                            *x += &c * y;
                        }
                    }
                }
            }
            if !is_zero_vec(&row) {
                rows.push(row);
            }
            if !advance(&mut tuple, n) {
                break;
            }
        }
    }
    rows
}

/// Next tuple in lexicographic order; `false` after the last one.
fn advance(tuple: &mut [usize], n: usize) -> bool {
    for k in (0..tuple.len()).rev() {
        tuple[k] += 1;
        if tuple[k] < n {
            return true;
        }
        tuple[k] = 0;
    }
    false
}

/// Scalar cocycles of parity `parity`: `ω` such that `A ⊕ 𝕂z` with `xy ↦ xy + ω(x,y)z`
/// and `|z| = parity` satisfies every identity of `variety`.
pub fn cocycle_space(a: &SuperAlgebra, variety: VarietyName, parity: Parity) -> Result<CocycleSpace, ExtensionError> {
    let ids = variety.identities();
    if ids.iter().any(|i| !i.is_multilinear()) {
        if a.is_graded() {
            return Err(IdentityError::GradedInput(variety.cli_name()).into());
        }
    }
    let ids: Vec<SignedIdentity> = ids.iter().map(|i| i.polarize()).collect::<Result<_, _>>()?;
    let n = a.dim();
    let allowed = |i: usize, j: usize| a.parity(i) + a.parity(j) == parity;
    let mut rows = cocycle_rows(a, &ids);
    for i in 0..n {
        for j in 0..n {
            if !allowed(i, j) {
                rows.push(unit_vec(n * n, i * n + j));
            }
        }
    }
    let z2: Vec<Vec<Scalar>> = solve_rows(n * n, rows);
    let mut coboundaries = Vec::new();
    for k in 0..n {
        if a.parity(k) != parity {
            continue;
        }
        let mut v = zero_vec(n * n);
        for i in 0..n {
            for j in 0..n {
                v[i * n + j] = a.structure_constant(i, j, k).clone();
            }
        }
        coboundaries.push(v);
    }
    let b2 = Subspace::span(n * n, coboundaries.iter())?;
    let z2_space = Subspace::span(n * n, z2.iter())?;
    let overlap = z2_space.intersection(&b2)?;
    Ok(CocycleSpace {
        z2_basis: z2.iter().map(|v| reshape(n, v)).collect(),
        b2_basis: b2.basis().iter().map(|v| reshape(n, v)).collect(),
        h2_dim: z2_space.dim() - overlap.dim(),
        b2_contained: overlap.dim() == b2.dim(),
    })
}

/// `A ⊕ 𝕂^s` with `xy ↦ xy + Σ ω_t(x,y) z_t`; the new vectors are appended
/// after `A` and the basis is then sorted even first.
pub fn central_extension_unchecked(
    a: &SuperAlgebra,
    omegas: &[(Matrix, Parity)],
) -> Result<(SuperAlgebra, Vec<usize>), ExtensionError> {
    let n = a.dim();
    for (w, _) in omegas {
        check_square(a, w)?;
    }
    let mut parities = a.parities();
    parities.extend(omegas.iter().map(|(_, p)| *p));
    let mut b = AlgebraBuilder::new(parities);
    for (i, j, k, c) in a.entries() {
        b.add_entry(i, j, k, c);
    }
    for (t, (w, _)) in omegas.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                if !w.get(i, j).is_zero() {
                    b.add_entry(i, j, n + t, w.get(i, j).clone());
                }
            }
        }
    }
    Ok(b.build()?)
}

/// Central extension that must land in `variety`; otherwise reports the first
/// failing cocycle with a witness tuple.
pub fn central_extension_in(
    a: &SuperAlgebra,
    omegas: &[(Matrix, Parity)],
    variety: VarietyName,
) -> Result<SuperAlgebra, ExtensionError> {
    for (index, w) in omegas.iter().enumerate() {
        let (single, _) = central_extension_unchecked(a, core::slice::from_ref(w))?;
        if let Some(c) = in_variety(&single, variety)?.counterexample() {
            return Err(ExtensionError::NotCocycle { index, counterexample: c.clone() });
        }
    }
    let (ext, _) = central_extension_unchecked(a, omegas)?;
    if let Some(c) = in_variety(&ext, variety)?.counterexample() {
        return Err(ExtensionError::NotCocycle { index: omegas.len(), counterexample: c.clone() });
    }
    Ok(ext)
}

/// Symmetric Zinbiel central extension.
pub fn central_extension(a: &SuperAlgebra, omegas: &[(Matrix, Parity)]) -> Result<SuperAlgebra, ExtensionError> {
    central_extension_in(a, omegas, VarietyName::SymmetricZinbiel)
}

/// `(δ, D, 𝔞₀)` with `δ, D` of degree `d_parity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleTriple {
    pub delta: Matrix,
    pub d_map: Matrix,
    pub a0: Vec<Scalar>,
    pub d_parity: Parity,
}

impl AdmissibleTriple {
    pub fn zero(n: usize, d_parity: Parity) -> Self {
        AdmissibleTriple { delta: Matrix::zeros(n, n), d_map: Matrix::zeros(n, n), a0: zero_vec(n), d_parity }
    }
}

/// The failing condition and the basis indices it was evaluated at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleViolation {
    pub condition: &'static str,
    pub point: Vec<usize>,
}

impl fmt::Display for AdmissibleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.condition)?;
        if !self.point.is_empty() {
            let idx: Vec<String> = self.point.iter().map(|i| alloc::format!("e{}", i + 1)).collect();
            write!(f, " at ({})", idx.join(", "))?;
        }
        Ok(())
    }
}

fn scaled(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

fn neg(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| -x).collect()
}

fn add(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

/// Checks homogeneity, `𝔞₀ ∈ Ann(A) ∩ A₀`, and every condition that makes the
/// semi-direct product symmetric Zinbiel; `None` when all hold.
pub fn admissible_check(a: &SuperAlgebra, t: &AdmissibleTriple) -> Result<Option<AdmissibleViolation>, ExtensionError> {
    check_square(a, &t.delta)?;
    check_square(a, &t.d_map)?;
    check_vector(a, &t.a0)?;
    let v = |condition: &'static str, point: Vec<usize>| Ok(Some(AdmissibleViolation { condition, point }));
    if !is_homogeneous_map(a, &t.delta, t.d_parity) {
        return v("δ is homogeneous of degree |d|", vec![]);
    }
    if !is_homogeneous_map(a, &t.d_map, t.d_parity) {
        return v("D is homogeneous of degree |d|", vec![]);
    }
    let ann = annihilator(a);
    if !ann.even.contains(&t.a0)? {
        return v("𝔞₀ ∈ Ann(A) ∩ A₀", vec![]);
    }
    let n = a.dim();
    let dd = bit(t.d_parity);
    let delta = |x: &[Scalar]| apply(&t.delta, x);
    let dm = |x: &[Scalar]| apply(&t.d_map, x);
    let m = |x: &[Scalar], y: &[Scalar]| a.mul(x, y);
    for i in 0..n {
        let px = bit(a.parity(i));
        let x = unit_vec(n, i);
        for j in 0..n {
            let py = bit(a.parity(j));
            let y = unit_vec(n, j);
            let xy = a.basis_product_vec(i, j);
            let d_xy = delta(&xy);
            let s_dx = neg_one_pow(dd && px);
            if d_xy != scaled(&s_dx, &m(&x, &delta(&y))) {
                return v("δ(xy) = (-1)^{|d||x|} xδ(y)", vec![i, j]);
            }
            if d_xy != add(&m(&delta(&x), &y), &scaled(&s_dx, &m(&dm(&x), &y))) {
                return v("δ(xy) = δ(x)y + (-1)^{|d||x|} D(x)y", vec![i, j]);
            }
            if d_xy != scaled(&-neg_one_pow(py && (px ^ dd)), &m(&dm(&y), &x)) {
                return v("δ(xy) = -(-1)^{|y|(|x|+|d|)} D(y)x", vec![i, j]);
            }
            let dx_y = m(&delta(&x), &y);
            if dx_y != scaled(&koszul(a.parity(i), a.parity(j)), &m(&delta(&y), &x)) {
                return v("δ(x)y = (-1)^{|x||y|} δ(y)x", vec![i, j]);
            }
            if dx_y != scaled(&-neg_one_pow(dd && (px ^ py)), &m(&x, &dm(&y))) {
                return v("δ(x)y = -(-1)^{|d|(|x|+|y|)} xD(y)", vec![i, j]);
            }
            if dm(&xy) != scaled(&neg_one_pow(dd && py), &m(&dm(&x), &y)) {
                return v("D(xy) = (-1)^{|d||y|} D(x)y", vec![i, j]);
            }
        }
        let dd_x = delta(&delta(&x));
        if dd_x != scaled(&neg_one_pow(dd), &dd_x) {
            return v("δ²(x) = (-1)^{|d|} δ²(x)", vec![i]);
        }
        if dd_x != neg(&dm(&dm(&x))) {
            return v("δ²(x) = -D²(x)", vec![i]);
        }
        let two_or_zero = Scalar::one() + neg_one_pow(dd);
        if dd_x != scaled(&two_or_zero, &m(&t.a0, &x)) {
            return v("δ²(x) = (1 + (-1)^{|d|}) 𝔞₀x", vec![i]);
        }
        let d_d_x = delta(&dm(&x));
        if d_d_x != scaled(&-neg_one_pow(dd), &dm(&delta(&x))) {
            return v("δD(x) = -(-1)^{|d|} Dδ(x)", vec![i]);
        }
        if d_d_x != scaled(&neg_one_pow(dd && px), &m(&x, &t.a0)) {
            return v("δD(x) = (-1)^{|d||x|} x𝔞₀", vec![i]);
        }
        if d_d_x != scaled(&-neg_one_pow(dd && (px ^ dd)), &m(&t.a0, &x)) {
            return v("δD(x) = -(-1)^{|d|(|x|+|d|)} 𝔞₀x", vec![i]);
        }
    }
    if !is_zero_vec(&delta(&t.a0)) {
        return v("δ(𝔞₀) = 0", vec![]);
    }
    if !is_zero_vec(&dm(&t.a0)) {
        return v("D(𝔞₀) = 0", vec![]);
    }
    Ok(None)
}

/// `A ⊕ 𝕂d` with `d⊙d = 𝔞₀`, `d⊙x = δ(x)`, `x⊙d = D(x)`, without any check.
/// `d` is appended after `A` before sorting even first.
pub fn semidirect_product_unchecked(
    a: &SuperAlgebra,
    t: &AdmissibleTriple,
) -> Result<(SuperAlgebra, Vec<usize>), ExtensionError> {
    let n = a.dim();
    let mut parities = a.parities();
    parities.push(t.d_parity);
    let mut b = AlgebraBuilder::new(parities);
    for (i, j, k, c) in a.entries() {
        b.add_entry(i, j, k, c);
    }
    b.add_product(n, n, &int(1), &extend(&t.a0, 1));
    for i in 0..n {
        b.add_product(n, i, &int(1), &extend(&col(&t.delta, i), 1));
        b.add_product(i, n, &int(1), &extend(&col(&t.d_map, i), 1));
    }
    Ok(b.build()?)
}

pub fn semidirect_product(a: &SuperAlgebra, t: &AdmissibleTriple) -> Result<(SuperAlgebra, Vec<usize>), ExtensionError> {
    if let Some(v) = admissible_check(a, t)? {
        return Err(ExtensionError::Inadmissible(v));
    }
    semidirect_product_unchecked(a, t)
}

fn extend(v: &[Scalar], extra: usize) -> Vec<Scalar> {
    let mut out = v.to_vec();
    out.extend(zero_vec(extra));
    out
}

/// `δ* = G⁻¹ δᵀ G`, the adjoint with `B(δx, y) = B(x, δ*y)`.
pub fn adjoint(b: &BilinearForm, delta: &Matrix) -> Result<Matrix, ExtensionError> {
    let ginv = b.gram.inverse()?;
    Ok(ginv.mul(&delta.transpose())?.mul(&b.gram)?)
}

/// The odd map `D` with `B(δx, y) = (-1)^{|x|+|y|} B(x, Dy)`.
pub fn odd_adjoint(a: &SuperAlgebra, b: &BilinearForm, delta: &Matrix) -> Result<Matrix, ExtensionError> {
    let n = a.dim();
    let mut m = delta.transpose().mul(&b.gram)?;
    for i in 0..n {
        for j in 0..n {
            if a.parity(i) != a.parity(j) {
                let v = -m.get(i, j).clone();
                m.set(i, j, v);
            }
        }
    }
    Ok(b.gram.inverse()?.mul(&m)?)
}

/// Input data of a double extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleExtensionData {
    pub delta: Matrix,
    /// `δ*` for even extensions, the odd adjoint for odd ones.
    pub d_map: Matrix,
    pub a0: Vec<Scalar>,
    /// Coefficient of `d*` in `d⊙d`; always zero for odd extensions.
    pub alpha: Scalar,
}

fn double_extension_preconditions(
    a: &SuperAlgebra,
    b: &BilinearForm,
    data: &DoubleExtensionData,
    parity: Parity,
) -> Result<(), ExtensionError> {
    let pre = ExtensionError::Precondition;
    if let Some(f) = form_checks(a, b)?.first_failure() {
        return Err(ExtensionError::Form(f));
    }
    check_square(a, &data.delta)?;
    check_square(a, &data.d_map)?;
    check_vector(a, &data.a0)?;
    if !is_homogeneous_map(a, &data.delta, parity) {
        return Err(pre("δ is not homogeneous of degree |d|"));
    }
    if !is_homogeneous_map(a, &data.d_map, parity) {
        return Err(pre("D is not homogeneous of degree |d|"));
    }
    if !image_in_annihilator(a, &data.delta) {
        return Err(pre("δ(A) ⊄ Ann(A)"));
    }
    if !kills_square(a, &data.delta) {
        return Err(pre("δ(A²) ≠ 0"));
    }
    let dd = data.delta.mul(&data.d_map)?;
    let d_d = data.d_map.mul(&data.delta)?;
    if parity == Parity::Even {
        if !data.delta.mul(&data.delta)?.is_zero() {
            return Err(pre("δ² ≠ 0"));
        }
        if data.d_map != adjoint(b, &data.delta)? {
            return Err(pre("D is not the adjoint δ*"));
        }
    } else if data.d_map != odd_adjoint(a, b, &data.delta)? {
        return Err(pre("B(δx, y) ≠ (-1)^{|x|+|y|} B(x, Dy)"));
    }
    if !dd.is_zero() {
        return Err(pre("δ∘D ≠ 0"));
    }
    if !d_d.is_zero() {
        return Err(pre("D∘δ ≠ 0"));
    }
    if !annihilator(a).even.contains(&data.a0)? {
        return Err(pre("𝔞₀ ∉ Ann(A) ∩ A₀"));
    }
    if !b.eval(&data.a0, &data.a0).is_zero() {
        return Err(pre("B(𝔞₀, 𝔞₀) ≠ 0"));
    }
    if parity == Parity::Odd && !data.alpha.is_zero() {
        return Err(pre("odd extensions carry no α"));
    }
    let triple = AdmissibleTriple {
        delta: data.delta.clone(),
        d_map: data.d_map.clone(),
        a0: data.a0.clone(),
        d_parity: parity,
    };
    if let Some(v) = admissible_check(a, &triple)? {
        return Err(ExtensionError::Inadmissible(v));
    }
    Ok(())
}

/// Builds `𝕂d* ⊕ A ⊕ 𝕂d` without checks. Builder order is `[d*, A, d]`, sorted
/// even first afterwards; the permutation reports the final positions.
pub fn double_extension_unchecked(
    a: &SuperAlgebra,
    b: &BilinearForm,
    data: &DoubleExtensionData,
    parity: Parity,
) -> Result<(SuperAlgebra, BilinearForm, Vec<usize>), ExtensionError> {
    let n = a.dim();
    let sign = if parity == Parity::Even { int(1) } else { int(-1) };
    let mut parities = vec![parity];
    parities.extend(a.parities());
    parities.push(parity);
    let total = n + 2;
    let (ds, dd) = (0, n + 1);
    let lift = |v: &[Scalar]| {
        let mut out = vec![Scalar::zero()];
        out.extend(v.iter().cloned());
        out.push(Scalar::zero());
        out
    };
    let mut bld = AlgebraBuilder::new(parities);
    for (i, j, k, c) in a.entries() {
        bld.add_entry(i + 1, j + 1, k + 1, c);
    }
    let omega = form_cocycle(b, &data.delta);
    let ga0 = b.gram.mul_vec(&data.a0)?;
    bld.add_product(dd, dd, &int(1), &lift(&data.a0));
    if !data.alpha.is_zero() {
        bld.add_entry(dd, dd, ds, data.alpha.clone());
    }
    for i in 0..n {
        // B(e_i, a0) = (G a0)_i
        let bxa0 = ga0[i].clone();
        bld.add_product(dd, i + 1, &int(1), &lift(&col(&data.delta, i)));
        bld.add_product(i + 1, dd, &int(1), &lift(&col(&data.d_map, i)));
        if !bxa0.is_zero() {
            bld.add_entry(dd, i + 1, ds, &sign * &bxa0);
            bld.add_entry(i + 1, dd, ds, bxa0);
        }
        for j in 0..n {
            let w = omega.get(i, j);
            if !w.is_zero() {
                bld.add_entry(i + 1, j + 1, ds, &sign * w);
            }
        }
    }
    let (alg, perm) = bld.build()?;
    let mut g = Matrix::zeros(total, total);
    for i in 0..n {
        for j in 0..n {
            g.set(perm[i + 1], perm[j + 1], b.gram.get(i, j).clone());
        }
    }
    g.set(perm[dd], perm[ds], sign.clone());
    g.set(perm[ds], perm[dd], int(1));
    Ok((alg, BilinearForm::new(g), perm))
}

/// Even double extension: `d⊙d = 𝔞₀ + αd*`, `d⊙x = δ(x) + B(x,𝔞₀)d*`,
/// `x⊙y = xy + B(δ(x),y)d*`, `x⊙d = δ*(x) + B(x,𝔞₀)d*`, with
/// `B̄(d, d*) = B̄(d*, d) = 1`. Every precondition is checked and named on failure.
pub fn even_double_extension(
    a: &SuperAlgebra,
    b: &BilinearForm,
    delta: &Matrix,
    a0: &[Scalar],
    alpha: &Scalar,
) -> Result<(SuperAlgebra, BilinearForm), ExtensionError> {
    check_square(a, &b.gram)?;
    check_square(a, delta)?;
    let d_map = adjoint(b, delta)?;
    let data = DoubleExtensionData { delta: delta.clone(), d_map, a0: a0.to_vec(), alpha: alpha.clone() };
    double_extension_preconditions(a, b, &data, Parity::Even)?;
    let (alg, form, _) = double_extension_unchecked(a, b, &data, Parity::Even)?;
    Ok((alg, form))
}

/// Odd double extension: `d⊙d = 𝔞₀`, `d⊙x = δ(x) − B(x,𝔞₀)d*`,
/// `x⊙y = xy − B(δ(x),y)d*`, `x⊙d = D(x) + B(x,𝔞₀)d*`, with
/// `B̄(d*, d) = −B̄(d, d*) = 1`.
pub fn odd_double_extension(
    a: &SuperAlgebra,
    b: &BilinearForm,
    delta: &Matrix,
    d_map: &Matrix,
    a0: &[Scalar],
) -> Result<(SuperAlgebra, BilinearForm), ExtensionError> {
    let data = DoubleExtensionData { delta: delta.clone(), d_map: d_map.clone(), a0: a0.to_vec(), alpha: Scalar::zero() };
    double_extension_preconditions(a, b, &data, Parity::Odd)?;
    let (alg, form, _) = double_extension_unchecked(a, b, &data, Parity::Odd)?;
    Ok((alg, form))
}

/// Output of `decompose_even` / `decompose_odd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub h: SuperAlgebra,
    pub form_h: BilinearForm,
    pub data: DoubleExtensionData,
    pub parity: Parity,
    /// The chosen annihilator vector, sent to `d*`.
    pub e: Vec<Scalar>,
    /// The chosen partner with `B(e, d) = 1`.
    pub d: Vec<Scalar>,
    /// Columns are the images of the extension basis; `a.change_basis(iso)` equals
    /// the rebuilt double extension exactly.
    pub iso: Matrix,
}

/// Candidate vectors of `Ann(A) ∩ A_p`: RREF basis first, then small integer
/// combinations, all filtered by isotropy.
fn isotropic_annihilator_vector(a: &SuperAlgebra, b: &BilinearForm, p: Parity) -> Option<Vec<Scalar>> {
    let ann = annihilator(a);
    let space = if p == Parity::Even { ann.even } else { ann.odd };
    let basis = space.basis().to_vec();
    if let Some(v) = basis.iter().find(|v| b.eval(v, v).is_zero()) {
        return Some(v.clone());
    }
    let k = basis.len();
    if k < 2 || k > 6 {
        return None;
    }
    let range: Vec<i64> = vec![1, -1, 2, -2, 3, -3, 0];
    let mut idx = vec![0usize; k];
    loop {
        let coeffs: Vec<i64> = idx.iter().map(|&i| range[i]).collect();
        if coeffs.iter().any(|&c| c != 0) {
            let mut v = zero_vec(a.dim());
            for (c, bv) in coeffs.iter().zip(&basis) {
                for (x, y) in v.iter_mut().zip(bv) {
                    *x += int(*c) * y;
                }
            }
            if b.eval(&v, &v).is_zero() {
                return Some(v);
            }
        }
        let mut t = 0;
        loop {
            if t == k {
                return None;
            }
            idx[t] += 1;
            if idx[t] < range.len() {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
    }
}

/// Decomposes with the default choice of `e`.
pub fn decompose_even(a: &SuperAlgebra, b: &BilinearForm) -> Result<Decomposition, ExtensionError> {
    decompose(a, b, Parity::Even, None)
}

pub fn decompose_odd(a: &SuperAlgebra, b: &BilinearForm) -> Result<Decomposition, ExtensionError> {
    decompose(a, b, Parity::Odd, None)
}

/// Decomposes along a caller-chosen isotropic `e ∈ Ann(A) ∩ A_p`.
pub fn decompose_with(
    a: &SuperAlgebra,
    b: &BilinearForm,
    parity: Parity,
    e: &[Scalar],
) -> Result<Decomposition, ExtensionError> {
    decompose(a, b, parity, Some(e))
}

fn decompose(
    a: &SuperAlgebra,
    b: &BilinearForm,
    parity: Parity,
    chosen: Option<&[Scalar]>,
) -> Result<Decomposition, ExtensionError> {
    if let Some(f) = form_checks(a, b)?.first_failure() {
        return Err(ExtensionError::Form(f));
    }
    let n = a.dim();
    let block = if parity == Parity::Even { a.n_even() } else { a.n_odd() };
    if block < 2 {
        return Err(ExtensionError::NotDecomposable("the graded block has dimension below 2"));
    }
    let ann = annihilator(a);
    let ann_p = if parity == Parity::Even { &ann.even } else { &ann.odd };
    if ann_p.is_zero() {
        return Err(ExtensionError::NotDecomposable("Ann(A) ∩ A_p is zero"));
    }
    let e = match chosen {
        Some(e) => {
            check_vector(a, e)?;
            if !ann_p.contains(e)? || is_zero_vec(e) || !b.eval(e, e).is_zero() {
                return Err(ExtensionError::Precondition("e must be a nonzero isotropic vector of Ann(A) ∩ A_p"));
            }
            e.to_vec()
        }
        None => isotropic_annihilator_vector(a, b, parity)
            .ok_or(ExtensionError::NotDecomposable("Ann(A) ∩ A_p has no rational isotropic vector"))?,
    };
    // d in the block of parity p with B(e, d) = 1, free variables zero.
    let row_e = b.row(&e);
    let block_cols: Vec<usize> = (0..n).filter(|&i| a.parity(i) == parity).collect();
    let sys = Matrix::from_rows(block_cols.len(), vec![block_cols.iter().map(|&i| row_e[i].clone()).collect()])?;
    let sol = sys.solve(&[int(1)]).map_err(|_| ExtensionError::Contradiction("no d with B(e, d) = 1".into()))?;
    let mut d = zero_vec(n);
    for (v, &i) in sol.into_iter().zip(&block_cols) {
        d[i] = v;
    }
    if parity == Parity::Even {
        let bdd = b.eval(&d, &d);
        if !bdd.is_zero() {
            let c = bdd * frac(1, 2);
            for (x, y) in d.iter_mut().zip(&e) {
                *x -= &c * y;
            }
        }
    }
    // H = {e, d}^⊥, split by parity.
    let perp = Matrix::from_rows(n, vec![b.row(&e), b.row(&d)])?.kernel();
    let perp = Subspace::span(n, perp.iter())?;
    let h_even = perp.intersection(&a.block_subspace(Parity::Even))?;
    let h_odd = perp.intersection(&a.block_subspace(Parity::Odd))?;
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    if parity == Parity::Even {
        cols.push(e.clone());
        cols.extend(h_even.basis().iter().cloned());
        cols.push(d.clone());
        cols.extend(h_odd.basis().iter().cloned());
    } else {
        cols.extend(h_even.basis().iter().cloned());
        cols.push(e.clone());
        cols.extend(h_odd.basis().iter().cloned());
        cols.push(d.clone());
    }
    if cols.len() != n {
        return Err(ExtensionError::Contradiction("e, d and H do not span A".into()));
    }
    let p = Matrix::from_columns(n, &cols)?;
    let a2 = a.change_basis(&p)?;
    let b2 = b.change_basis(&p);
    let (ei, di) = if parity == Parity::Even { (0, h_even.dim() + 1) } else { (h_even.dim(), n - 1) };
    let h_idx: Vec<usize> = (0..n).filter(|&i| i != ei && i != di).collect();
    let m = h_idx.len();
    let mut hc = Vec::with_capacity(m * m * m);
    for &x in &h_idx {
        for &y in &h_idx {
            for &z in &h_idx {
                hc.push(a2.structure_constant(x, y, z).clone());
            }
        }
    }
    let h = SuperAlgebra::from_dense(h_even.dim(), h_odd.dim(), hc, crate::superalgebra::default_labels(m))?;
    let mut gh = Matrix::zeros(m, m);
    let mut delta = Matrix::zeros(m, m);
    let mut d_map = Matrix::zeros(m, m);
    let mut a0 = zero_vec(m);
    for (r, &x) in h_idx.iter().enumerate() {
        a0[r] = a2.structure_constant(di, di, x).clone();
        for (c, &y) in h_idx.iter().enumerate() {
            gh.set(r, c, b2.entry(x, y).clone());
            delta.set(r, c, a2.structure_constant(di, y, x).clone());
            d_map.set(r, c, a2.structure_constant(y, di, x).clone());
        }
    }
    let alpha = a2.structure_constant(di, di, ei).clone();
    let data = DoubleExtensionData { delta, d_map, a0, alpha };
    let form_h = BilinearForm::new(gh);
    double_extension_preconditions(&h, &form_h, &data, parity).map_err(|err| {
        ExtensionError::Contradiction(alloc::format!("decomposed data violates the extension hypotheses: {}", err))
    })?;
    let (rebuilt, rebuilt_form, _) = double_extension_unchecked(&h, &form_h, &data, parity)?;
    if rebuilt != a2 || rebuilt_form != b2 {
        return Err(ExtensionError::Contradiction("rebuilt double extension differs from the input".into()));
    }
    Ok(Decomposition { h, form_h, data, parity, e, d, iso: p })
}

/// Basis of `{δ homogeneous of degree p : δ(A) ⊆ Ann(A), δ(A²) = 0}`.
pub fn annihilator_delta_space(a: &SuperAlgebra, p: Parity) -> Vec<Matrix> {
    let n = a.dim();
    let ann = annihilator(a);
    let ann_t = ann.total.clone();
    // Conditions: components of δ(e_i) outside Ann vanish, and δ(e_i e_j) = 0.
    let complement = ann_t.orthogonal_complement();
    linear_matrix_space(
        n,
        |k, i| a.parity(k) == a.parity(i) + p,
        |d| {
            let mut out = Vec::new();
            for i in 0..n {
                let c = col(d, i);
                for w in complement.basis() {
                    out.push(dot(w, &c));
                }
            }
            for i in 0..n {
                for j in 0..n {
                    out.extend(apply(d, &a.basis_product_vec(i, j)));
                }
            }
            out
        },
    )
}

/// `{x : ω(x, A) = ω(A, x) = 0}`.
pub fn cocycle_radical(a: &SuperAlgebra, omega: &Matrix) -> Subspace {
    let n = a.dim();
    let mut rows: Vec<Vec<Scalar>> = (0..n).map(|j| omega.column(j)).collect();
    rows.extend((0..n).map(|j| omega.row(j).to_vec()));
    let kernel = Matrix::from_rows(n, rows).expect("row length").kernel();
    Subspace::span(n, kernel.iter()).expect("same ambient")
}

/// A cocycle whose radical meets `Ann(A)` trivially; only these give central
/// extensions without a split central summand.
pub fn is_essential_cocycle(a: &SuperAlgebra, omega: &Matrix) -> bool {
    let rad = cocycle_radical(a, omega);
    annihilator(a).total.intersection(&rad).expect("same ambient").is_zero()
}

/// One output of `random_double_extensions`.
#[derive(Clone, Debug)]
pub struct GeneratedExtension {
    pub base: SuperAlgebra,
    pub base_form: BilinearForm,
    pub data: DoubleExtensionData,
    pub parity: Parity,
    pub algebra: SuperAlgebra,
    pub form: BilinearForm,
}

fn hyperbolic(n0: usize, n1: usize) -> BilinearForm {
    let mut g = Matrix::zeros(n0 + n1, n0 + n1);
    for i in (0..n0).step_by(2) {
        g.set(i, i + 1, int(1));
        g.set(i + 1, i, int(1));
    }
    for i in (n0..n0 + n1).step_by(2) {
        g.set(i, i + 1, int(1));
        g.set(i + 1, i, int(-1));
    }
    BilinearForm::new(g)
}

/// Deterministic stream of checked even and odd double extensions. Bases start
/// from zero algebras with hyperbolic forms and grow by re-extending outputs;
/// δ is a small integer combination of `annihilator_delta_space`, `𝔞₀` of
/// `Ann(A) ∩ A₀`. Candidates failing a precondition are discarded.
pub fn random_double_extensions(seed: u64, count: usize, max_dim: usize) -> Vec<GeneratedExtension> {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<(SuperAlgebra, BilinearForm)> = vec![
        (SuperAlgebra::zero(0, 0), hyperbolic(0, 0)),
        (SuperAlgebra::zero(2, 0), hyperbolic(2, 0)),
        (SuperAlgebra::zero(0, 2), hyperbolic(0, 2)),
        (SuperAlgebra::zero(2, 2), hyperbolic(2, 2)),
        (SuperAlgebra::zero(4, 0), hyperbolic(4, 0)),
    ];
    let mut out = Vec::new();
    let mut attempts = 0usize;
    while out.len() < count && attempts < 200 * count.max(1) {
        attempts += 1;
        let (base, form) = pool.choose(&mut rng).expect("nonempty pool").clone();
        let parity = if rng.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
        let space = annihilator_delta_space(&base, parity);
        let n = base.dim();
        let mut delta = Matrix::zeros(n, n);
        if !space.is_empty() {
            for _ in 0..rng.gen_range(0..=2usize) {
                let m = space.choose(&mut rng).expect("nonempty");
                let c = int(rng.gen_range(-2..=2i64));
                delta = delta.add(&m.scale(&c)).expect("same shape");
            }
        }
        let ann_even = annihilator(&base).even;
        let mut a0 = zero_vec(n);
        if rng.gen_bool(0.5) {
            for v in ann_even.basis() {
                let c = int(rng.gen_range(-1..=1i64));
                for (x, y) in a0.iter_mut().zip(v) {
                    *x += &c * y;
                }
            }
        }
        let built = if parity == Parity::Even {
            let alpha = int(rng.gen_range(-1..=2i64));
            adjoint(&form, &delta).ok().and_then(|d_map| {
                even_double_extension(&base, &form, &delta, &a0, &alpha)
                    .ok()
                    .map(|r| (r, DoubleExtensionData { delta: delta.clone(), d_map, a0: a0.clone(), alpha }))
            })
        } else {
            odd_adjoint(&base, &form, &delta).ok().and_then(|d_map| {
                odd_double_extension(&base, &form, &delta, &d_map, &a0).ok().map(|r| {
                    (r, DoubleExtensionData { delta: delta.clone(), d_map: d_map.clone(), a0: a0.clone(), alpha: Scalar::zero() })
                })
            })
        };
        if let Some(((algebra, ext_form), data)) = built {
            if algebra.dim() + 2 <= max_dim {
                pool.push((algebra.clone(), ext_form.clone()));
            }
            out.push(GeneratedExtension { base, base_form: form, data, parity, algebra, form: ext_form });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n0: usize, n1: usize, e: &[(usize, usize, usize, i64)]) -> SuperAlgebra {
        let v: Vec<_> = e.iter().map(|&(i, j, k, c)| (i - 1, j - 1, k - 1, int(c))).collect();
        SuperAlgebra::from_entries(n0, n1, &v).unwrap()
    }

    #[test]
    fn zero_algebra_identity_form() {
        let a = SuperAlgebra::zero(2, 0);
        let f = form_checks(&a, &BilinearForm::identity(2)).unwrap();
        assert!(f.all());
    }

    #[test]
    fn n31_invariant_forms() {
        let a = alg(3, 0, &[(1, 1, 2, 1)]);
        let forms = invariant_forms(&a);
        assert_eq!(forms.len(), 4);
        for g in &forms {
            assert!(g.get(1, 1).is_zero() && g.get(1, 2).is_zero());
            let f = form_checks(&a, &BilinearForm::new(g.clone())).unwrap();
            assert!(f.even && f.supersymmetric && f.invariant);
        }
        let q = find_quadratic_form(&a).unwrap();
        assert!(form_checks(&a, &q).unwrap().all());
    }

    #[test]
    fn even_extension_of_point() {
        let a = SuperAlgebra::zero(0, 0);
        let b = BilinearForm::new(Matrix::zeros(0, 0));
        let (ext, form) = even_double_extension(&a, &b, &Matrix::zeros(0, 0), &[], &int(1)).unwrap();
        assert_eq!(ext, alg(2, 0, &[(2, 2, 1, 1)]));
        assert_eq!(form.gram, Matrix::from_i64(&[&[0, 1], &[1, 0]]));
        let r = quadratic_consequences(&ext, &form).unwrap();
        assert!(r.consistent());
        let dec = decompose_even(&ext, &form).unwrap();
        assert_eq!(dec.h.dim(), 0);
        assert_eq!(dec.data.alpha, int(1));
    }

    #[test]
    fn odd_extension_of_point() {
        let a = SuperAlgebra::zero(0, 0);
        let b = BilinearForm::new(Matrix::zeros(0, 0));
        let z = Matrix::zeros(0, 0);
        let (ext, form) = odd_double_extension(&a, &b, &z, &z, &[]).unwrap();
        assert_eq!(ext, SuperAlgebra::zero(0, 2));
        assert_eq!(form.gram, Matrix::from_i64(&[&[0, 1], &[-1, 0]]));
        assert!(form_checks(&ext, &form).unwrap().all());
        let dec = decompose_odd(&ext, &form).unwrap();
        assert_eq!(dec.h.dim(), 0);
    }

    #[test]
    fn isotropy_limitation() {
        let a = SuperAlgebra::zero(2, 0);
        let e = decompose_even(&a, &BilinearForm::identity(2)).unwrap_err();
        assert!(matches!(e, ExtensionError::NotDecomposable(_)));
    }

    #[test]
    fn zero_cocycles_of_zero_algebra() {
        let a = SuperAlgebra::zero(2, 0);
        let cs = cocycle_space(&a, VarietyName::SymmetricZinbiel, Parity::Even).unwrap();
        assert_eq!(cs.z2_dim(), 4);
        assert_eq!(cs.b2_dim(), 0);
        assert_eq!(cs.h2_dim, 4);
    }

    #[test]
    fn central_extension_by_zero() {
        let a = alg(3, 0, &[(1, 1, 2, 1)]);
        let ext = central_extension(&a, &[(Matrix::zeros(3, 3), Parity::Even)]).unwrap();
        assert_eq!(ext.dim(), 4);
        assert!(annihilator(&ext).total.contains(&unit_vec(4, 3)).unwrap());
    }

    #[test]
    fn zero_triple_is_admissible() {
        let a = alg(3, 0, &[(1, 1, 2, 1)]);
        let t = AdmissibleTriple::zero(3, Parity::Even);
        assert_eq!(admissible_check(&a, &t).unwrap(), None);
        let (sp, _) = semidirect_product(&a, &t).unwrap();
        assert_eq!(sp.dim(), 4);
        let mut bad = t.clone();
        bad.a0 = unit_vec(3, 0);
        assert_eq!(admissible_check(&a, &bad).unwrap().unwrap().condition, "𝔞₀ ∈ Ann(A) ∩ A₀");
    }
}
