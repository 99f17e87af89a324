//! Representations `(r, l)` of Zinbiel superalgebras on graded modules,
//! split extensions, and the adjoint and coadjoint pairs.
//!
//! With `s = (-1)^{|x||y|}` the left axioms are
//! `l(xy) = l(x)l(y) + l(x)r(y)`, `r(x)r(y) = r(xy) + s r(yx)`,
//! `l(x)l(y) = s r(y)l(x) - l(x)r(y)`; the right axioms are
//! `l(x)l(y) = l(xy) + s l(yx)`, `l(x)r(y) = r(xy)`,
//! `r(xy) = s (r(y)r(x) + r(y)l(x))`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{Matrix, Scalar};
use crate::superalgebra::{koszul, AlgebraBuilder, AlgebraError, Parity, SuperAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepresentationError {
    #[error("representation has {found} maps, algebra has dimension {expected}")]
    MapCount { expected: usize, found: usize },
    #[error("map for e{index} is not {size}x{size}")]
    MapShape { index: usize, size: usize },
    #[error("refused: {0}")]
    Refused(AxiomViolation),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Both,
}

/// Which axiom failed and on which basis pair. `axiom` 0 is the parity
/// requirement on the maps themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub side: Side,
    pub axiom: usize,
    pub pair: (usize, usize),
}

impl AxiomViolation {
    pub fn statement(&self) -> &'static str {
        match (self.side, self.axiom) {
            (_, 0) => "maps must shift module parity by the parity of x",
            (Side::Left, 1) => "l(xy) = l(x)l(y) + l(x)r(y)",
            (Side::Left, 2) => "r(x)r(y) = r(xy) + s r(yx)",
            (Side::Left, 3) => "l(x)l(y) = s r(y)l(x) - l(x)r(y)",
            (Side::Right, 1) => "l(x)l(y) = l(xy) + s l(yx)",
            (Side::Right, 2) => "l(x)r(y) = r(xy)",
            (Side::Right, 3) => "r(xy) = s (r(y)r(x) + r(y)l(x))",
            _ => "unknown axiom",
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::Left => "left",
            Side::Right => "right",
            Side::Both => "two-sided",
        };
        write!(
            f,
            "{} axiom {} ({}) fails at (e{}, e{})",
            side,
            self.axiom,
            self.statement(),
            self.pair.0 + 1,
            self.pair.1 + 1
        )
    }
}

/// One pair of maps per basis vector of the algebra, acting on a module whose
/// first `module_even` basis vectors are even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationPair {
    pub module_even: usize,
    pub module_odd: usize,
    pub r: Vec<Matrix>,
    pub l: Vec<Matrix>,
}

impl RepresentationPair {
    pub fn module_dim(&self) -> usize {
        self.module_even + self.module_odd
    }

    pub fn module_parity(&self, i: usize) -> Parity {
        Parity::from_bit(u8::from(i >= self.module_even))
    }

    pub fn zero(a: &SuperAlgebra, module_even: usize, module_odd: usize) -> Self {
        let m = module_even + module_odd;
        RepresentationPair {
            module_even,
            module_odd,
            r: (0..a.dim()).map(|_| Matrix::zeros(m, m)).collect(),
            l: (0..a.dim()).map(|_| Matrix::zeros(m, m)).collect(),
        }
    }

    fn validate(&self, a: &SuperAlgebra) -> Result<(), RepresentationError> {
        let n = a.dim();
        if self.r.len() != n || self.l.len() != n {
            return Err(RepresentationError::MapCount { expected: n, found: self.r.len().min(self.l.len()) });
        }
        let m = self.module_dim();
        for (i, (r, l)) in self.r.iter().zip(&self.l).enumerate() {
            if r.rows() != m || r.cols() != m || l.rows() != m || l.cols() != m {
                return Err(RepresentationError::MapShape { index: i + 1, size: m });
            }
        }
        Ok(())
    }

    fn parity_violation(&self, a: &SuperAlgebra) -> Option<AxiomViolation> {
        let m = self.module_dim();
        for i in 0..a.dim() {
            for map in [&self.r[i], &self.l[i]] {
                for row in 0..m {
                    for col in 0..m {
                        if !map.get(row, col).is_zero()
                            && self.module_parity(row) != self.module_parity(col) + a.parity(i)
                        {
                            return Some(AxiomViolation { side: Side::Both, axiom: 0, pair: (i, i) });
                        }
                    }
                }
            }
        }
        None
    }

    /// `Σ_k v_k maps[k]`.
    fn combine(&self, maps: &[Matrix], v: &[(usize, Scalar)]) -> Matrix {
        let m = self.module_dim();
        let mut acc = Matrix::zeros(m, m);
        for (k, c) in v {
            acc = acc.add(&maps[*k].scale(c)).expect("same shape");
        }
        acc
    }
}

fn mm(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("square maps of equal size")
}

fn plus(a: &Matrix, b: &Matrix) -> Matrix {
    a.add(b).expect("same shape")
}

fn sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.add(&b.scale(&-Scalar::from_integer(1.into()))).expect("same shape")
}

fn side_violation(a: &SuperAlgebra, rp: &RepresentationPair, side: Side) -> Option<AxiomViolation> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let s = koszul(a.parity(i), a.parity(j));
            let (lx, ly, rx, ry) = (&rp.l[i], &rp.l[j], &rp.r[i], &rp.r[j]);
            let l_xy = rp.combine(&rp.l, a.basis_product(i, j));
            let r_xy = rp.combine(&rp.r, a.basis_product(i, j));
            let eqs: [(Matrix, Matrix); 3] = match side {
                Side::Left => {
                    let r_yx = rp.combine(&rp.r, a.basis_product(j, i));
                    [
                        (l_xy, plus(&mm(lx, ly), &mm(lx, ry))),
                        (mm(rx, ry), plus(&r_xy, &r_yx.scale(&s))),
                        (mm(lx, ly), sub(&mm(ry, lx).scale(&s), &mm(lx, ry))),
                    ]
                }
                _ => {
                    let l_yx = rp.combine(&rp.l, a.basis_product(j, i));
                    [
                        (mm(lx, ly), plus(&l_xy, &l_yx.scale(&s))),
                        (mm(lx, ry), r_xy.clone()),
                        (r_xy, plus(&mm(ry, rx), &mm(ry, lx)).scale(&s)),
                    ]
                }
            };
            for (k, (lhs, rhs)) in eqs.iter().enumerate() {
                if lhs != rhs {
                    return Some(AxiomViolation { side, axiom: k + 1, pair: (i, j) });
                }
            }
        }
    }
    None
}

/// `None` when `(r, l)` is a left representation.
pub fn is_left_representation(
    a: &SuperAlgebra,
    rp: &RepresentationPair,
) -> Result<Option<AxiomViolation>, RepresentationError> {
    rp.validate(a)?;
    Ok(rp.parity_violation(a).or_else(|| side_violation(a, rp, Side::Left)))
}

/// `None` when `(r, l)` is a right representation.
pub fn is_right_representation(
    a: &SuperAlgebra,
    rp: &RepresentationPair,
) -> Result<Option<AxiomViolation>, RepresentationError> {
    rp.validate(a)?;
    Ok(rp.parity_violation(a).or_else(|| side_violation(a, rp, Side::Right)))
}

/// `None` when `(r, l)` is both a left and a right representation.
pub fn representation_violation(
    a: &SuperAlgebra,
    rp: &RepresentationPair,
) -> Result<Option<AxiomViolation>, RepresentationError> {
    Ok(is_left_representation(a, rp)?.or(is_right_representation(a, rp)?))
}

pub fn is_representation(a: &SuperAlgebra, rp: &RepresentationPair) -> Result<bool, RepresentationError> {
    Ok(representation_violation(a, rp)?.is_none())
}

/// `l = L`, `r = R` with `R_x(y) = (-1)^{|x||y|} yx`.
pub fn adjoint_pair(a: &SuperAlgebra) -> RepresentationPair {
    RepresentationPair {
        module_even: a.n_even(),
        module_odd: a.n_odd(),
        r: (0..a.dim()).map(|i| a.right_multiplication(i)).collect(),
        l: (0..a.dim()).map(|i| a.left_multiplication(i)).collect(),
    }
}

/// `(R*, L*)` on the dual basis: `L*(x)f = (-1)^{|f||x|} f∘R(x)` and
/// `R*(x)f = (-1)^{|f||x|} f∘L(x)`. Column `m` of each matrix is the image of `f_m`.
pub fn coadjoint_pair(a: &SuperAlgebra) -> RepresentationPair {
    let n = a.dim();
    let mut l = Vec::with_capacity(n);
    let mut r = Vec::with_capacity(n);
    for x in 0..n {
        let px = a.parity(x);
        let mut lm = Matrix::zeros(n, n);
        let mut rm = Matrix::zeros(n, n);
        for m in 0..n {
            let sf = koszul(a.parity(m), px);
            for k in 0..n {
                let c_kx = a.structure_constant(k, x, m);
                if !c_kx.is_zero() {
                    lm.set(k, m, &sf * &koszul(px, a.parity(k)) * c_kx);
                }
                let c_xk = a.structure_constant(x, k, m);
                if !c_xk.is_zero() {
                    rm.set(k, m, &sf * c_xk);
                }
            }
        }
        l.push(lm);
        r.push(rm);
    }
    RepresentationPair { module_even: a.n_even(), module_odd: a.n_odd(), r, l }
}

pub fn coadjoint_is_representation(a: &SuperAlgebra) -> bool {
    is_representation(a, &coadjoint_pair(a)).expect("coadjoint shapes match")
}

/// `A ⊕ V` with `(x+u)(y+v) = xy + l(x)v + (-1)^{|x||y|} r(y)u`, after checking
/// the axioms of `side`. Algebra vectors come first, then module vectors; the
/// basis is then sorted even first and the returned permutation records where
/// each index went.
pub fn split_extension(
    a: &SuperAlgebra,
    rp: &RepresentationPair,
    side: Side,
) -> Result<(SuperAlgebra, Vec<usize>), RepresentationError> {
    let violation = match side {
        Side::Left => is_left_representation(a, rp)?,
        Side::Right => is_right_representation(a, rp)?,
        Side::Both => representation_violation(a, rp)?,
    };
    if let Some(v) = violation {
        return Err(RepresentationError::Refused(v));
    }
    Ok(split_extension_unchecked(a, rp)?)
}

/// The split product without the axiom check.
pub fn split_extension_unchecked(
    a: &SuperAlgebra,
    rp: &RepresentationPair,
) -> Result<(SuperAlgebra, Vec<usize>), AlgebraError> {
    let n = a.dim();
    let m = rp.module_dim();
    let mut parities = a.parities();
    parities.extend((0..m).map(|i| rp.module_parity(i)));
    let mut b = AlgebraBuilder::new(parities);
    for (i, j, k, c) in a.entries() {
        b.add_entry(i, j, k, c);
    }
    for i in 0..n {
        for beta in 0..m {
            for k in 0..m {
                let c = rp.l[i].get(k, beta);
                if !c.is_zero() {
                    b.add_entry(i, n + beta, n + k, c.clone());
                }
            }
        }
    }
    for alpha in 0..m {
        for j in 0..n {
            let s = koszul(rp.module_parity(alpha), a.parity(j));
            for k in 0..m {
                let c = rp.r[j].get(k, alpha);
                if !c.is_zero() {
                    b.add_entry(n + alpha, j, n + k, &s * c);
                }
            }
        }
    }
    b.build()
}
