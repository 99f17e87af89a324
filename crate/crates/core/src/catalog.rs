//! Library of the printed multiplication tables: the two-generated symmetric
//! Zinbiel classification, the one-generated algebras and the lattice witnesses.
//!
//! Tables use 1-based basis indices; unlisted products are zero.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{frac, int, Matrix, Scalar};
use crate::identities::lattice_report;
use crate::identities::{in_variety, VarietyName};
use crate::representations::coadjoint_is_representation;
use crate::structure::{cube_zero, dim_bound_check, generator_count, nil_report, StepClass};
use crate::superalgebra::{Parity, SuperAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("entry `{name}` expects {expected} parameter(s), got {found}")]
    ParameterCount { name: String, expected: usize, found: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Two-generated, 2-step nilpotent.
    TwoStep,
    /// Two-generated, 3-step nilpotent.
    ThreeStep,
    OneGenerated,
    LatticeWitness,
    /// Alternative table printed for an entry of another family.
    Variant,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::TwoStep => "two-generated 2-step",
            Family::ThreeStep => "two-generated 3-step",
            Family::OneGenerated => "one-generated",
            Family::LatticeWitness => "lattice witness",
            Family::Variant => "variant",
        }
    }

    /// Entries expected to be symmetric Zinbiel and nilpotent.
    pub fn is_symmetric_zinbiel(self) -> bool {
        !matches!(self, Family::LatticeWitness)
    }
}

/// One table entry `e_i e_j ∋ c e_k`, multiplied by `λ` when `lambda` is set.
#[derive(Clone, Copy, Debug)]
pub struct TableTerm {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coeff: i64,
    pub lambda: bool,
}

const fn t(i: usize, j: usize, k: usize, coeff: i64) -> TableTerm {
    TableTerm { i, j, k, coeff, lambda: false }
}

const fn l(i: usize, j: usize, k: usize, coeff: i64) -> TableTerm {
    TableTerm { i, j, k, coeff, lambda: true }
}

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub family: Family,
    pub n_even: usize,
    pub n_odd: usize,
    pub parameters: &'static [&'static str],
    pub table: &'static [TableTerm],
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.n_even + self.n_odd
    }

    /// Claimed step class, for nilpotent families.
    pub fn claimed_step(&self) -> Option<StepClass> {
        match self.family {
            Family::TwoStep | Family::OneGenerated => Some(StepClass::TwoStep),
            Family::ThreeStep | Family::Variant => Some(StepClass::ThreeStep),
            Family::LatticeWitness => None,
        }
    }

    /// Claimed minimal number of generators.
    pub fn claimed_generators(&self) -> Option<usize> {
        match self.family {
            Family::TwoStep | Family::ThreeStep | Family::Variant => Some(2),
            Family::OneGenerated => Some(1),
            Family::LatticeWitness => None,
        }
    }

    pub fn build(&self, params: &[Scalar]) -> Result<SuperAlgebra, CatalogError> {
        if params.len() != self.parameters.len() {
            return Err(CatalogError::ParameterCount {
                name: self.name.to_string(),
                expected: self.parameters.len(),
                found: params.len(),
            });
        }
        let mut entries = Vec::with_capacity(self.table.len());
        for term in self.table {
            let mut c = int(term.coeff);
            if term.lambda {
                c *= &params[0];
            }
            if !c.is_zero() {
                entries.push((term.i - 1, term.j - 1, term.k - 1, c));
            }
        }
        Ok(SuperAlgebra::from_entries(self.n_even, self.n_odd, &entries).expect("catalog tables respect the grading"))
    }
}

const LAMBDA: &[&str] = &["lambda"];

const N5_1: &[TableTerm] = &[t(1, 2, 3, 1), t(2, 1, 4, 1), t(2, 2, 5, 1)];

const Z6_1: &[TableTerm] = &[
    t(1, 2, 3, 1),
    t(2, 1, 4, 1),
    t(2, 2, 5, 1),
    t(1, 5, 6, 1),
    t(5, 1, 6, -1),
    t(2, 4, 6, -2),
    t(4, 2, 6, -1),
    t(2, 3, 6, 1),
    t(3, 2, 6, 2),
];

const ENTRIES: &[CatalogEntry] = &[
    two("N3_1", 3, &[], &[t(1, 1, 2, 1)]),
    two("N3_2", 3, &[], &[t(1, 1, 3, 1), t(2, 2, 3, 1)]),
    two("N3_3", 3, &[], &[t(1, 2, 3, 1), t(2, 1, 3, -1)]),
    two("N3_4", 3, LAMBDA, &[l(1, 1, 3, 1), t(2, 1, 3, 1), t(2, 2, 3, 1)]),
    two("N4_1", 4, &[], &[t(1, 2, 3, 1), t(2, 1, 4, 1)]),
    two("N4_2", 4, &[], &[t(1, 1, 3, 1), t(2, 1, 4, 1)]),
    two("N4_3", 4, &[], &[t(1, 1, 3, 1), t(2, 2, 4, 1)]),
    two("N4_4", 4, &[], &[t(1, 1, 3, 1), t(1, 2, 3, 1), t(2, 1, 4, 1), t(2, 2, 3, 1)]),
    two("N4_5", 4, LAMBDA, &[t(1, 1, 3, 1), t(2, 1, 4, 1), t(2, 2, 3, 1), l(2, 2, 4, 1)]),
    two("N4_6", 4, LAMBDA, &[t(1, 1, 3, 1), t(1, 2, 4, 1), l(2, 1, 4, 1)]),
    two("N5_1", 5, &[], N5_1),
    two("N5_2", 5, &[], &[t(1, 1, 5, 1), t(1, 2, 3, 1), t(2, 1, 4, 1), t(2, 2, 5, 1)]),
    two("N5_3", 5, &[], &[t(1, 1, 3, 1), t(1, 2, 4, 1), t(2, 1, 4, 1), t(2, 2, 5, 1)]),
    two("N5_4", 5, LAMBDA, &[t(1, 1, 3, 1), l(1, 1, 5, 1), t(1, 2, 3, 1), t(2, 1, 4, 1), t(2, 2, 5, 1)]),
    two("N6_1", 6, &[], &[t(1, 1, 3, 1), t(1, 2, 4, 1), t(2, 1, 5, 1), t(2, 2, 6, 1)]),
    three("Z6_1", 6, Z6_1),
    three(
        "Z6_2",
        6,
        &[
            t(1, 2, 3, 1),
            t(2, 1, 4, 1),
            t(2, 2, 5, 1),
            t(2, 2, 6, 1),
            t(1, 5, 6, 1),
            t(5, 1, 6, -1),
            t(2, 4, 6, -2),
            t(4, 2, 6, -1),
            t(2, 3, 6, 1),
            t(3, 2, 6, 2),
        ],
    ),
    three(
        "Z7_1",
        7,
        &[
            t(1, 1, 7, 1),
            t(1, 2, 3, 1),
            t(2, 1, 4, 1),
            t(2, 2, 5, 1),
            t(1, 5, 6, 1),
            t(5, 1, 6, -1),
            t(2, 4, 6, -2),
            t(4, 2, 6, -1),
            t(2, 3, 6, 1),
            t(3, 2, 6, 2),
        ],
    ),
    three(
        "Z8_1",
        8,
        &[
            t(1, 1, 3, 1),
            t(1, 2, 4, 1),
            t(1, 4, 7, 2),
            t(1, 5, 7, -1),
            t(1, 6, 8, 1),
            t(2, 1, 5, 1),
            t(2, 2, 6, 1),
            t(2, 3, 7, -1),
            t(2, 4, 8, 1),
            t(2, 5, 8, -2),
            t(3, 2, 7, 1),
            t(4, 1, 7, 1),
            t(4, 2, 8, 2),
            t(5, 1, 7, -2),
            t(5, 2, 8, -1),
            t(6, 1, 8, -1),
        ],
    ),
    CatalogEntry {
        name: "Z6_2_proof_variant",
        family: Family::Variant,
        n_even: 6,
        n_odd: 0,
        parameters: &[],
        table: &[
            t(1, 1, 6, 1),
            t(1, 2, 3, 1),
            t(2, 1, 4, 1),
            t(2, 2, 5, 1),
            t(1, 5, 6, 1),
            t(5, 1, 6, -1),
            t(2, 4, 6, -2),
            t(4, 2, 6, -1),
            t(2, 3, 6, 1),
            t(3, 2, 6, 2),
        ],
    },
    CatalogEntry {
        name: "OneGen_2_0",
        family: Family::OneGenerated,
        n_even: 2,
        n_odd: 0,
        parameters: &[],
        table: &[t(1, 1, 2, 1)],
    },
    CatalogEntry {
        name: "OneGen_1_1",
        family: Family::OneGenerated,
        n_even: 1,
        n_odd: 1,
        parameters: &[],
        table: &[t(2, 2, 1, 1)],
    },
    witness("LatticeWitness_SZ", 6, Z6_1),
    witness("LatticeWitness_SL", 4, &[t(1, 2, 3, 1), t(2, 1, 3, -1), t(2, 3, 4, 1), t(3, 2, 4, -1)]),
    witness(
        "LatticeWitness_AssLie",
        7,
        &[
            t(1, 2, 4, 1),
            t(1, 3, 5, 1),
            t(1, 6, 7, 1),
            t(2, 1, 4, -1),
            t(2, 3, 6, 1),
            t(2, 5, 7, -1),
            t(3, 1, 5, -1),
            t(3, 2, 6, -1),
            t(3, 4, 7, 1),
            t(4, 3, 7, 1),
            t(5, 2, 7, -1),
            t(6, 1, 7, 1),
        ],
    ),
    witness(
        "LatticeWitness_Binary",
        7,
        &[
            t(1, 2, 4, 1),
            t(1, 3, 5, 1),
            t(1, 6, 7, 1),
            t(2, 1, 4, -1),
            t(2, 3, 6, 1),
            t(2, 5, 7, -1),
            t(3, 1, 5, -1),
            t(3, 2, 6, -1),
            t(3, 4, 7, 1),
        ],
    ),
    witness("LatticeWitness_Mono", 2, &[t(1, 2, 2, 1), t(2, 1, 2, -1)]),
];

const fn two(name: &'static str, n: usize, parameters: &'static [&'static str], table: &'static [TableTerm]) -> CatalogEntry {
    CatalogEntry { name, family: Family::TwoStep, n_even: n, n_odd: 0, parameters, table }
}

const fn three(name: &'static str, n: usize, table: &'static [TableTerm]) -> CatalogEntry {
    CatalogEntry { name, family: Family::ThreeStep, n_even: n, n_odd: 0, parameters: &[], table }
}

const fn witness(name: &'static str, n: usize, table: &'static [TableTerm]) -> CatalogEntry {
    CatalogEntry { name, family: Family::LatticeWitness, n_even: n, n_odd: 0, parameters: &[], table }
}

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}

pub fn get(name: &str, params: &[Scalar]) -> Result<SuperAlgebra, CatalogError> {
    entry(name)?.build(params)
}

/// Rational samples used for every `λ` family.
pub fn lambda_samples() -> Vec<Scalar> {
    vec![int(0), int(1), int(-1), int(2), frac(1, 2)]
}

/// Display name of one instance, e.g. `N3_4[lambda=1/2]`.
pub fn instance_name(e: &CatalogEntry, params: &[Scalar]) -> String {
    if params.is_empty() {
        e.name.to_string()
    } else {
        format!("{}[{}={}]", e.name, e.parameters[0], params[0])
    }
}

/// Every entry, with `λ` families instantiated at `lambda_samples()`.
pub fn instances_of(family: Option<Family>) -> Vec<(String, &'static CatalogEntry, SuperAlgebra)> {
    let mut out = Vec::new();
    for e in ENTRIES.iter().filter(|e| family.map_or(true, |f| e.family == f)) {
        if e.parameters.is_empty() {
            out.push((e.name.to_string(), e, e.build(&[]).expect("no parameters")));
        } else {
            for lam in lambda_samples() {
                let p = [lam];
                out.push((instance_name(e, &p), e, e.build(&p).expect("one parameter")));
            }
        }
    }
    out
}

pub fn instances() -> Vec<(String, SuperAlgebra)> {
    instances_of(None).into_iter().map(|(n, _, a)| (n, a)).collect()
}

/// Entries expected per family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub two_step: usize,
    pub three_step: usize,
    pub one_generated: usize,
    pub lattice_witnesses: usize,
}

pub const MANIFEST: Coverage = Coverage { two_step: 15, three_step: 4, one_generated: 2, lattice_witnesses: 5 };

pub fn coverage() -> Coverage {
    let count = |f| ENTRIES.iter().filter(|e| e.family == f).count();
    Coverage {
        two_step: count(Family::TwoStep),
        three_step: count(Family::ThreeStep),
        one_generated: count(Family::OneGenerated),
        lattice_witnesses: count(Family::LatticeWitness),
    }
}

/// A printed central extension: `base` extended by `cocycles` (new basis vectors
/// appended in order) equals `target`.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub base: &'static str,
    pub target: &'static str,
    pub cocycles: Vec<(Matrix, Parity)>,
}

fn cocycle(n: usize, entries: &[(usize, usize, i64)]) -> (Matrix, Parity) {
    let mut m = Matrix::zeros(n, n);
    for &(i, j, c) in entries {
        m.set(i - 1, j - 1, int(c));
    }
    (m, Parity::Even)
}

const OMEGA_Z6: &[(usize, usize, i64)] = &[(1, 5, 1), (5, 1, -1), (2, 4, -2), (4, 2, -1), (2, 3, 1), (3, 2, 2)];

pub fn reconstructions() -> Vec<Reconstruction> {
    let mut variant = OMEGA_Z6.to_vec();
    variant.push((1, 1, 1));
    vec![
        Reconstruction { base: "N5_1", target: "Z6_1", cocycles: vec![cocycle(5, OMEGA_Z6)] },
        Reconstruction { base: "N5_1", target: "Z6_2_proof_variant", cocycles: vec![cocycle(5, &variant)] },
        Reconstruction {
            base: "N5_1",
            target: "Z7_1",
            cocycles: vec![cocycle(5, OMEGA_Z6), cocycle(5, &[(1, 1, 1)])],
        },
        Reconstruction {
            base: "N6_1",
            target: "Z8_1",
            cocycles: vec![
                cocycle(6, &[(1, 4, 2), (1, 5, -1), (2, 3, -1), (3, 2, 1), (4, 1, 1), (5, 1, -2)]),
                cocycle(6, &[(1, 6, 1), (2, 4, 1), (2, 5, -2), (4, 2, 2), (5, 2, -1), (6, 1, -1)]),
            ],
        },
    ]
}

/// Columns express a basis of `Z6_2` in which its table is that of `Z6_1`:
/// `e5 ↦ e5 + e6`, other vectors fixed.
pub fn z6_2_to_z6_1() -> Matrix {
    let mut p = Matrix::identity(6);
    p.set(5, 4, int(1));
    p
}

/// Outcome of one claim on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimCheck {
    pub instance: String,
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogReport {
    pub checks: Vec<ClaimCheck>,
    /// Ungraded instances on which the two binary symmetric Zinbiel sets disagree.
    pub binary_set_disagreements: Vec<String>,
}

impl CatalogReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Verifies every claim on the instances of `family` (all when `None`); lattice
/// witnesses are re-certified edge by edge.
pub fn verify(family: Option<Family>) -> CatalogReport {
    let mut report = CatalogReport::default();
    let mut push = |instance: &str, claim, passed, detail: String| {
        report.checks.push(ClaimCheck { instance: instance.to_string(), claim, passed, detail })
    };
    let mut disagreements = Vec::new();
    for (name, e, a) in instances_of(family) {
        if !a.is_graded() {
            let sa = in_variety(&a, VarietyName::BinarySymZinbielA).map(|v| v.holds());
            let sb = in_variety(&a, VarietyName::BinarySymZinbielB).map(|v| v.holds());
            if sa != sb {
                disagreements.push(name.clone());
            }
        }
        if !e.family.is_symmetric_zinbiel() {
            continue;
        }
        match in_variety(&a, VarietyName::SymmetricZinbiel) {
            Ok(v) => push(&name, "symmetric-zinbiel", v.holds(), match v.counterexample() {
                None => String::from("all identities hold"),
                Some(c) => format!("{} fails at {:?}", c.identity, c.tuple),
            }),
            Err(err) => push(&name, "symmetric-zinbiel", false, err.to_string()),
        }
        let nil = nil_report(&a);
        let claimed = e.claimed_step().expect("nilpotent family");
        push(
            &name,
            "step-class",
            nil.step_class == claimed,
            format!("nil index {:?}, claimed {}", nil.nil_index, claimed.label()),
        );
        push(&name, "cube-zero", cube_zero(&a), String::new());
        match generator_count(&a) {
            Ok(d) => {
                let want = e.claimed_generators().expect("nilpotent family");
                push(&name, "generator-count", d == want, format!("{} generators, claimed {}", d, want));
            }
            Err(err) => push(&name, "generator-count", false, err.to_string()),
        }
        match dim_bound_check(&a) {
            Ok(ok) => push(&name, "dimension-bound", ok, format!("dim {}", a.dim())),
            Err(err) => push(&name, "dimension-bound", false, err.to_string()),
        }
        let coadj = coadjoint_is_representation(&a);
        let two_step = matches!(nil.nil_index, Some(t) if t <= 3);
        push(
            &name,
            "coadjoint-criterion",
            coadj == two_step,
            format!("coadjoint representation: {}, nil index ≤ 3: {}", coadj, two_step),
        );
    }
    if family.map_or(true, |f| f == Family::LatticeWitness) {
        match lattice_report(&[]) {
            Ok(lr) => {
                for c in &lr.edges {
                    let detail = format!(
                        "{} ⊂ {}: in larger {}, in smaller {}",
                        c.edge.smaller, c.edge.larger, c.in_larger, c.in_smaller
                    );
                    push(c.edge.witness, "lattice-edge", c.certified(), detail);
                }
            }
            Err(err) => push("lattice", "lattice-edge", false, err.to_string()),
        }
    }
    report.binary_set_disagreements = disagreements;
    report
}

pub fn verify_all() -> CatalogReport {
    verify(None)
}
