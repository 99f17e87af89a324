//! Graded structure-constant algebras.
//!
//! Basis convention: the first `n_even` basis vectors are even and the
//! remaining `n_odd` are odd, so parity is a function of the index. The
//! structure tensor is stored dense (`c[i][j][k]` with `eᵢeⱼ = Σₖ c[i][j][k] eₖ`)
//! together with a sparse copy of every basis product for fast evaluation.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Add;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{axpy, is_zero_vec, unit_vec, zero_vec, LinAlgError, Matrix, Scalar, Subspace};

/// ℤ₂-degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Parity {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

/// `(−1)^{|a||b|}` as a boolean "is negative".
pub fn koszul_negative(a: Parity, b: Parity) -> bool {
    a.is_odd() && b.is_odd()
}

/// `(−1)^{|a||b|}` as a scalar.
pub fn koszul(a: Parity, b: Parity) -> Scalar {
    if koszul_negative(a, b) {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("grading violation: e{}*e{} has a component on e{} of the wrong parity", .i + 1, .j + 1, .k + 1)]
    GradingViolation { i: usize, j: usize, k: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("vector of length {found} does not fit an algebra of dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("subspace is not spanned by homogeneous vectors")]
    NotHomogeneous,
    #[error("change of basis is not invertible or does not respect the grading")]
    BadBasisChange,
    #[error("{0} labels given for {1} basis vectors")]
    LabelCount(usize, usize),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// A finite-dimensional superalgebra given by structure constants.
#[derive(Debug, Clone)]
pub struct SuperAlgebra {
    n_even: usize,
    n_odd: usize,
    labels: Vec<String>,
    c: Vec<Scalar>,
    table: Vec<Vec<(usize, Scalar)>>,
}

impl PartialEq for SuperAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.n_even == other.n_even && self.n_odd == other.n_odd && self.c == other.c
    }
}

impl Eq for SuperAlgebra {}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl SuperAlgebra {
    /// The algebra with zero multiplication.
    pub fn zero(n_even: usize, n_odd: usize) -> Self {
        let n = n_even + n_odd;
        SuperAlgebra {
            n_even,
            n_odd,
            labels: default_labels(n),
            c: vec![Scalar::zero(); n * n * n],
            table: vec![Vec::new(); n * n],
        }
    }

    /// Builds an algebra from `(i, j, k, c)` entries meaning `eᵢeⱼ += c·eₖ`
    /// (0-based indices). Fails if an entry breaks the grading.
    pub fn from_entries(
        n_even: usize,
        n_odd: usize,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self, AlgebraError> {
        let n = n_even + n_odd;
        let mut c = vec![Scalar::zero(); n * n * n];
        for (i, j, k, v) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= n || j >= n || k >= n {
                return Err(AlgebraError::DimensionMismatch { expected: n, found: i.max(j).max(k) + 1 });
            }
            c[(i * n + j) * n + k] += v;
        }
        Self::from_dense(n_even, n_odd, c, default_labels(n))
    }

    /// Builds an algebra from a dense tensor in `c[(i*n + j)*n + k]` layout.
    pub fn from_dense(
        n_even: usize,
        n_odd: usize,
        c: Vec<Scalar>,
        labels: Vec<String>,
    ) -> Result<Self, AlgebraError> {
        let n = n_even + n_odd;
        if c.len() != n * n * n {
            return Err(AlgebraError::DimensionMismatch { expected: n * n * n, found: c.len() });
        }
        if labels.len() != n {
            return Err(AlgebraError::LabelCount(labels.len(), n));
        }
        let parity = |i: usize| if i < n_even { Parity::Even } else { Parity::Odd };
        let mut table = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = &c[(i * n + j) * n + k];
                    if v.is_zero() {
                        continue;
                    }
                    if parity(k) != parity(i) + parity(j) {
                        return Err(AlgebraError::GradingViolation { i, j, k });
                    }
                    table[i * n + j].push((k, v.clone()));
                }
            }
        }
        Ok(SuperAlgebra { n_even, n_odd, labels, c, table })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.dim() {
            return Err(AlgebraError::LabelCount(labels.len(), self.dim()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.n_even + self.n_odd
    }

    pub fn n_even(&self) -> usize {
        self.n_even
    }

    pub fn n_odd(&self) -> usize {
        self.n_odd
    }

    pub fn is_graded(&self) -> bool {
        self.n_odd > 0
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.n_even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.dim()).map(|i| self.parity(i)).collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.c[(i * n + j) * n + k]
    }

    pub fn dense(&self) -> &[Scalar] {
        &self.c
    }

    /// Nonzero coefficients of `eᵢeⱼ`, sorted by target index.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_product_vec(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = zero_vec(self.dim());
        for (k, c) in self.basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn has_zero_product(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    /// Bilinear product of coordinate vectors.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        debug_assert!(x.len() == n && y.len() == n);
        let mut out = zero_vec(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    pub fn try_mul(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        for v in [x, y] {
            if v.len() != self.dim() {
                return Err(AlgebraError::DimensionMismatch { expected: self.dim(), found: v.len() });
            }
        }
        Ok(self.mul(x, y))
    }

    pub fn basis_element(&self, i: usize) -> Element<'_> {
        Element { algebra: self, coeffs: unit_vec(self.dim(), i) }
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<Element<'_>, AlgebraError> {
        if coeffs.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim(), found: coeffs.len() });
        }
        Ok(Element { algebra: self, coeffs })
    }

    /// Matrix of `L_{eᵢ}: y ↦ eᵢy`.
    pub fn left_multiplication(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.basis_product(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of `R_{eᵢ}: y ↦ (−1)^{|eᵢ||y|} yeᵢ`.
    pub fn right_multiplication(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let s = koszul(self.parity(i), self.parity(j));
            for (k, c) in self.basis_product(j, i) {
                m.set(*k, j, &s * c);
            }
        }
        m
    }

    /// The super-opposite algebra `x∘y = (−1)^{|x||y|} yx`. For ungraded
    /// algebras this is the plain opposite.
    pub fn opposite(&self) -> SuperAlgebra {
        let n = self.dim();
        let mut c = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let s = koszul(self.parity(i), self.parity(j));
                for (k, v) in self.basis_product(j, i) {
                    c[(i * n + j) * n + k] = &s * v;
                }
            }
        }
        SuperAlgebra::from_dense(self.n_even, self.n_odd, c, self.labels.clone())
            .expect("opposite preserves the grading")
    }

    /// Span of all products `uv` with `u ∈ U`, `v ∈ W`.
    pub fn product_space(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let prods: Vec<Vec<Scalar>> = u
            .basis()
            .iter()
            .flat_map(|a| w.basis().iter().map(move |b| (a, b)))
            .map(|(a, b)| self.mul(a, b))
            .filter(|p| !is_zero_vec(p))
            .collect();
        Subspace::span(self.dim(), prods.iter()).expect("ambient dimension matches")
    }

    /// `A² = span{eᵢeⱼ}`.
    pub fn square(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.product_space(&full, &full)
    }

    /// Subalgebra generated by `generators`, by iterated span closure. Stops
    /// after at most `dim A` rounds.
    pub fn generated_subalgebra(&self, generators: &[Vec<Scalar>]) -> Result<Subspace, AlgebraError> {
        let mut s = Subspace::span(self.dim(), generators.iter())?;
        loop {
            let next = s.sum(&self.product_space(&s, &s))?;
            if next.dim() == s.dim() {
                return Ok(s);
            }
            s = next;
        }
    }

    /// The algebra obtained by restricting the product to a closed graded
    /// subspace. The new basis is the RREF basis of the even part followed by
    /// that of the odd part.
    pub fn restrict(&self, sub: &Subspace) -> Result<SuperAlgebra, AlgebraError> {
        let n = self.dim();
        if sub.ambient() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, found: sub.ambient() });
        }
        let even = sub.intersection(&self.block_subspace(Parity::Even))?;
        let odd = sub.intersection(&self.block_subspace(Parity::Odd))?;
        if even.dim() + odd.dim() != sub.dim() {
            return Err(AlgebraError::NotHomogeneous);
        }
        let basis: Vec<Vec<Scalar>> = even.basis().iter().chain(odd.basis()).cloned().collect();
        let p = Matrix::from_columns(n, &basis)?;
        let m = basis.len();
        let mut c = vec![Scalar::zero(); m * m * m];
        for a in 0..m {
            for b in 0..m {
                let prod = self.mul(&basis[a], &basis[b]);
                let coords = p.solve(&prod).map_err(|_| AlgebraError::NotClosed)?;
                for (k, v) in coords.into_iter().enumerate() {
                    c[(a * m + b) * m + k] = v;
                }
            }
        }
        SuperAlgebra::from_dense(even.dim(), odd.dim(), c, default_labels(m))
    }

    /// Coordinate subspace spanned by the basis vectors of one parity.
    pub fn block_subspace(&self, p: Parity) -> Subspace {
        let n = self.dim();
        let idx: Vec<Vec<Scalar>> =
            (0..n).filter(|&i| self.parity(i) == p).map(|i| unit_vec(n, i)).collect();
        Subspace::span(n, idx.iter()).expect("unit vectors fit")
    }

    /// Re-expresses the algebra in a new basis given by the columns of `p`.
    /// Column `j` must be homogeneous of parity `self.parity(j)`.
    pub fn change_basis(&self, p: &Matrix) -> Result<SuperAlgebra, AlgebraError> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(AlgebraError::BadBasisChange);
        }
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| p.column(j)).collect();
        for (j, col) in cols.iter().enumerate() {
            if col.iter().enumerate().any(|(i, x)| !x.is_zero() && self.parity(i) != self.parity(j)) {
                return Err(AlgebraError::BadBasisChange);
            }
        }
        let inv = p.inverse().map_err(|_| AlgebraError::BadBasisChange)?;
        let mut c = vec![Scalar::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                let prod = self.mul(&cols[a], &cols[b]);
                let coords = inv.mul_vec(&prod)?;
                for (k, v) in coords.into_iter().enumerate() {
                    c[(a * n + b) * n + k] = v;
                }
            }
        }
        SuperAlgebra::from_dense(self.n_even, self.n_odd, c, self.labels.clone())
    }

    /// All nonzero products as `(i, j, k, c)` tuples, ordered by `(i, j, k)`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }
}

/// Incremental constructor for algebras whose basis is assembled from blocks
/// of mixed parity. `build` stably sorts the basis into canonical order (even
/// first) and returns where each builder index ended up.
#[derive(Debug, Clone)]
pub struct AlgebraBuilder {
    parities: Vec<Parity>,
    products: Vec<Vec<Scalar>>,
}

impl AlgebraBuilder {
    pub fn new(parities: Vec<Parity>) -> Self {
        let n = parities.len();
        AlgebraBuilder { parities, products: vec![zero_vec(n); n * n] }
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    /// `eᵢeⱼ += coeff·v` in builder indexing.
    pub fn add_product(&mut self, i: usize, j: usize, coeff: &Scalar, v: &[Scalar]) {
        let n = self.dim();
        axpy(&mut self.products[i * n + j], coeff, v);
    }

    pub fn add_entry(&mut self, i: usize, j: usize, k: usize, coeff: Scalar) {
        let n = self.dim();
        self.products[i * n + j][k] += coeff;
    }

    /// Canonical position of each builder index.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm = vec![0; self.dim()];
        let mut next = 0;
        for target in [Parity::Even, Parity::Odd] {
            for (i, p) in self.parities.iter().enumerate() {
                if *p == target {
                    perm[i] = next;
                    next += 1;
                }
            }
        }
        perm
    }

    pub fn build(&self) -> Result<(SuperAlgebra, Vec<usize>), AlgebraError> {
        let n = self.dim();
        let perm = self.permutation();
        let n_even = self.parities.iter().filter(|p| **p == Parity::Even).count();
        let mut c = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for (k, v) in self.products[i * n + j].iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    if self.parities[k] != self.parities[i] + self.parities[j] {
                        return Err(AlgebraError::GradingViolation { i, j, k });
                    }
                    c[(perm[i] * n + perm[j]) * n + perm[k]] = v.clone();
                }
            }
        }
        let alg = SuperAlgebra::from_dense(n_even, n - n_even, c, default_labels(n))?;
        Ok((alg, perm))
    }
}

/// An element of a specific algebra.
#[derive(Debug, Clone)]
pub struct Element<'a> {
    algebra: &'a SuperAlgebra,
    coeffs: Vec<Scalar>,
}

impl<'a> Element<'a> {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn algebra(&self) -> &'a SuperAlgebra {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    /// The homogeneous degree, or `None` for inhomogeneous elements. Zero
    /// counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let a = self.algebra;
        let mut seen = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match seen {
                None => seen = Some(a.parity(i)),
                Some(p) if p != a.parity(i) => return None,
                _ => {}
            }
        }
        Some(seen.unwrap_or(Parity::Even))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parity().is_some()
    }

    pub fn multiply(&self, other: &Element<'_>) -> Result<Element<'a>, AlgebraError> {
        if !core::ptr::eq(self.algebra, other.algebra) && self.algebra != other.algebra {
            return Err(AlgebraError::AlgebraMismatch);
        }
        Ok(Element { algebra: self.algebra, coeffs: self.algebra.mul(&self.coeffs, &other.coeffs) })
    }
}

impl PartialEq for Element<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.algebra == other.algebra
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn n31() -> SuperAlgebra {
        SuperAlgebra::from_entries(3, 0, &[(0, 0, 1, int(1))]).unwrap()
    }

    #[test]
    fn multiply_basis() {
        let a = n31();
        let e1 = a.basis_element(0);
        let e2 = a.basis_element(1);
        assert_eq!(e1.multiply(&e1).unwrap(), e2);
        let zero = a.element(zero_vec(3)).unwrap();
        for i in 0..3 {
            assert!(a.basis_element(i).multiply(&zero).unwrap().is_zero());
        }
    }

    #[test]
    fn multiply_rejects_foreign_elements() {
        let a = n31();
        let b = SuperAlgebra::zero(3, 0);
        let x = a.basis_element(0);
        let y = b.basis_element(0);
        assert_eq!(x.multiply(&y).unwrap_err(), AlgebraError::AlgebraMismatch);
    }

    #[test]
    fn grading_violation_is_reported() {
        // e1 even, e2 odd: e1*e1 = e2 lands in the wrong block.
        let err = SuperAlgebra::from_entries(1, 1, &[(0, 0, 1, int(1))]).unwrap_err();
        assert_eq!(err, AlgebraError::GradingViolation { i: 0, j: 0, k: 1 });
    }

    #[test]
    fn generated_subalgebra_of_n61() {
        // N6_1: e1e1=e3, e1e2=e4, e2e1=e5, e2e2=e6
        let a = SuperAlgebra::from_entries(
            6,
            0,
            &[(0, 0, 2, int(1)), (0, 1, 3, int(1)), (1, 0, 4, int(1)), (1, 1, 5, int(1))],
        )
        .unwrap();
        let s = a.generated_subalgebra(&[unit_vec(6, 0)]).unwrap();
        let expect = Subspace::span(6, [unit_vec(6, 0), unit_vec(6, 2)].iter()).unwrap();
        assert_eq!(s, expect);

        let all: Vec<_> = (0..6).map(|i| unit_vec(6, i)).collect();
        assert_eq!(a.generated_subalgebra(&all).unwrap().dim(), 6);

        let sub = a.restrict(&s).unwrap();
        assert_eq!(sub.dim(), 2);
        assert_eq!(sub.basis_product(0, 0), &[(1, int(1))]);
    }

    #[test]
    fn opposite_of_commutative_is_identity() {
        let a = SuperAlgebra::from_entries(3, 0, &[(0, 1, 2, int(1)), (1, 0, 2, int(1))]).unwrap();
        assert_eq!(a.opposite(), a);
        // super-commutative: odd generators anticommute
        let s = SuperAlgebra::from_entries(1, 2, &[(1, 2, 0, int(1)), (2, 1, 0, int(-1))]).unwrap();
        assert_eq!(s.opposite(), s);
    }

    #[test]
    fn builder_sorts_even_first() {
        let mut b = AlgebraBuilder::new(vec![Parity::Odd, Parity::Even, Parity::Odd]);
        b.add_entry(0, 2, 1, int(3));
        let (alg, perm) = b.build().unwrap();
        assert_eq!(perm, vec![1, 0, 2]);
        assert_eq!((alg.n_even(), alg.n_odd()), (1, 2));
        assert_eq!(alg.structure_constant(1, 2, 0), &int(3));
    }

    #[test]
    fn change_basis_identity_is_noop() {
        let a = n31();
        assert_eq!(a.change_basis(&Matrix::identity(3)).unwrap(), a);
        let sing = Matrix::zeros(3, 3);
        assert_eq!(a.change_basis(&sing).unwrap_err(), AlgebraError::BadBasisChange);
    }

    #[test]
    fn element_parity() {
        let a = SuperAlgebra::zero(1, 1);
        let mixed = a.element(vec![int(1), int(1)]).unwrap();
        assert!(!mixed.is_homogeneous());
        assert_eq!(a.basis_element(1).parity(), Some(Parity::Odd));
    }
}
