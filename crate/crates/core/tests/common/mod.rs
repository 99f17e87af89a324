//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the solvers under test: ranks come from minors or from
//! fraction-free elimination over the integers, and cocycle conditions come
//! from evaluating identities on explicitly built one-dimensional extensions.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zinbiel_core::catalog::instances;
use zinbiel_core::exactlin::{int, Matrix, Scalar};
use zinbiel_core::extensions::random_double_extensions;
use zinbiel_core::structure::{odd_generator_grading_check, GradingOutcome};
use zinbiel_core::identities::SignedIdentity;
use zinbiel_core::{Parity, SuperAlgebra, VarietyName};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small random rational with numerator in `-4..=4` and denominator in `1..=3`.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(BigInt::from(rng.gen_range(-4i64..=4)), BigInt::from(rng.gen_range(1i64..=3)))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_bool(density) {
                m.set(r, c, small_rational(rng));
            }
        }
    }
    m
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut total = Scalar::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][c] * laplace_det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Largest `k` with a nonzero `k × k` minor.
pub fn minor_rank(m: &Matrix) -> usize {
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rs in combinations(m.rows(), k) {
            for cs in combinations(m.cols(), k) {
                let sub: Vec<Vec<Scalar>> = rs.iter().map(|&r| cs.iter().map(|&c| m.get(r, c).clone()).collect()).collect();
                if !laplace_det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Rank by Bareiss fraction-free elimination after clearing denominators row by row.
pub fn bareiss_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            for k in c + 1..cols {
                let (q, rem) = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]).div_rem(&prev);
                assert!(rem.is_zero(), "Bareiss division is exact");
                a[r][k] = q;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Position of `A`'s basis vector `i` and of the new central vector `z` in
/// `A ⊕ 𝕂z` with even vectors first.
fn extension_layout(a: &SuperAlgebra, p: Parity) -> (Vec<usize>, usize) {
    let ne = a.n_even();
    match p {
        Parity::Even => ((0..a.dim()).map(|i| if i < ne { i } else { i + 1 }).collect(), ne),
        Parity::Odd => ((0..a.dim()).collect(), a.dim()),
    }
}

fn unit_extension(a: &SuperAlgebra, p: Parity, i: usize, j: usize) -> (SuperAlgebra, Vec<usize>, usize) {
    let (pos, z) = extension_layout(a, p);
    let mut entries: Vec<(usize, usize, usize, Scalar)> =
        a.entries().into_iter().map(|(x, y, k, c)| (pos[x], pos[y], pos[k], c)).collect();
    entries.push((pos[i], pos[j], z, int(1)));
    let (ne, no) = match p {
        Parity::Even => (a.n_even() + 1, a.n_odd()),
        Parity::Odd => (a.n_even(), a.n_odd() + 1),
    };
    (SuperAlgebra::from_entries(ne, no, &entries).expect("parity-compatible entry"), pos, z)
}

fn tuples(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out.into_iter().flat_map(|t| (0..n).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

/// Cocycle-space dimensions `(z2, b2, h2)` by brute force: one column per
/// admissible entry of `ω`, one row per identity and basis tuple, read off
/// from the `z`-coordinate of the identity residual on `A ⊕ 𝕂z`.
pub fn brute_cocycle_dims(a: &SuperAlgebra, v: VarietyName, p: Parity) -> (usize, usize, usize) {
    let n = a.dim();
    let ids: Vec<SignedIdentity> = v.identities().iter().map(|i| i.polarize().expect("ungraded or multilinear")).collect();
    let unknowns: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| a.parity(i) + a.parity(j) == p).collect();
    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    for &(i, j) in &unknowns {
        let (ext, pos, z) = unit_extension(a, p, i, j);
        let mut col = Vec::new();
        for id in &ids {
            for t in tuples(n, id.vars()) {
                let mapped: Vec<usize> = t.iter().map(|&x| pos[x]).collect();
                col.push(id.residual(&ext, &mapped)[z].clone());
            }
        }
        columns.push(col);
    }
    let constraints: Vec<Vec<Scalar>> = if columns.is_empty() {
        Vec::new()
    } else {
        (0..columns[0].len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect()
    };
    let z2 = unknowns.len() - bareiss_rank(&constraints);
    let cobound: Vec<Vec<Scalar>> = (0..n)
        .filter(|&k| a.parity(k) == p)
        .map(|k| unknowns.iter().map(|&(i, j)| a.structure_constant(i, j, k).clone()).collect())
        .collect();
    let b2 = bareiss_rank(&cobound);
    // dim(B² ∩ Z²) = rank(S) − rank(C·S) for a spanning set S of B².
    let images: Vec<Vec<Scalar>> = cobound
        .iter()
        .map(|s| {
            constraints.iter().map(|row| row.iter().zip(s).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)).collect()
        })
        .collect();
    let overlap = b2 - bareiss_rank(&images);
    (z2, b2, z2 - overlap)
}

/// Random invertible parity-preserving change of basis.
pub fn random_graded_basis_change(rng: &mut ChaCha8Rng, a: &SuperAlgebra) -> Matrix {
    loop {
        let n = a.dim();
        let mut m = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                if a.parity(r) == a.parity(c) && rng.gen_bool(0.6) {
                    m.set(r, c, small_rational(rng));
                }
            }
        }
        if m.is_invertible() {
            return m;
        }
    }
}

/// Brute-force invariance rows `B(e_i e_j, e_k) − B(e_i, e_j e_k)` over the `n²` Gram entries.
pub fn invariance_rows(a: &SuperAlgebra) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for (l, c) in a.basis_product(i, j) {
                    row[l * n + k] += c;
                }
                for (l, c) in a.basis_product(j, k) {
                    row[i * n + l] -= c;
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// Random table on a graded space respecting parities.
pub fn random_graded(seed: u64, ne: usize, no: usize) -> SuperAlgebra {
    let mut g = rng(seed);
    let n = ne + no;
    let parity = |i: usize| usize::from(i >= ne);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if k > i.max(j) && parity(k) == (parity(i) + parity(j)) % 2 && g.gen_bool(0.3) {
                    entries.push((i, j, k, small_rational(&mut g)));
                }
            }
        }
    }
    SuperAlgebra::from_entries(ne, no, &entries).unwrap()
}

/// Graded algebras for the envelope cross-check: catalog superalgebras,
/// odd-generator regradings, double extensions, random tables and a 3-step witness.
pub fn graded_corpus() -> Vec<(String, SuperAlgebra)> {
    let mut out: Vec<_> = instances().into_iter().filter(|(_, a)| a.is_graded()).collect();
    for (name, a) in instances() {
        if let Ok(GradingOutcome::Valid(b)) = odd_generator_grading_check(&a) {
            if b.is_graded() {
                out.push((format!("{name}/odd-generators"), b));
            }
        }
    }
    for (i, g) in random_double_extensions(13, 30, 7).into_iter().enumerate() {
        if g.algebra.is_graded() && g.algebra.dim() <= 6 {
            out.push((format!("double-extension-{i}"), g.algebra));
        }
    }
    for seed in 0..6 {
        out.push((format!("random-{seed}"), random_graded(seed, 2, 2)));
    }
    out.push(("zero(1,2)".into(), SuperAlgebra::zero(1, 2)));
    // Three-step with (e3e3)e3 = e4 and e3(e3e3) = 0, so no Zinbiel identity holds.
    let three_step = SuperAlgebra::from_entries(2, 2, &[(2, 2, 0, int(1)), (0, 2, 3, int(1))]).unwrap();
    out.push(("odd-cube".into(), three_step));
    out
}
