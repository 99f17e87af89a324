//! Signed polynomial identities, polarization and exact evaluation on basis
//! tuples.
//!
//! A term is `coeff * sign * tree` where the sign is
//! `(-1)^(sum over pairs |x_a||x_b| + sum over singles |x_a|)`.
//! Evaluation over all tuples of basis vectors decides a multilinear identity
//! on the whole algebra.

mod lattice;
mod registry;

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactlin::{int, is_zero_vec, unit_vec, zero_vec, Scalar};
use crate::superalgebra::{AlgebraError, Parity, SuperAlgebra};

pub use lattice::{
    lattice_edges, lattice_report, CharacterizationRow, EdgeCertificate, LatticeEdge,
    LatticeNode, LatticeReport,
};
pub use registry::{
    anti_flexible, associative, cyclic_consequence, left_leibniz, left_zinbiel, lr, reversal_consequence,
    right_leibniz, right_zinbiel, symmetric_zinbiel_consequences, VarietyName,
};

/// Default bound on the number of variables `holds` accepts.
pub const DEFAULT_VARIABLE_BOUND: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("cannot parse tree {0:?}")]
    Parse(String),
    #[error("term {term} does not use the same variables as the first term")]
    InconsistentVariables { term: usize },
    #[error("identity has {found} variables, bound is {bound}")]
    TooManyVariables { found: usize, bound: usize },
    #[error("polarization of a signed identity with repeated variables is unsupported")]
    SignedPolarization,
    #[error("identity {0:?} repeats variables and the algebra is graded")]
    RepeatedVariablesGraded(String),
    #[error("variety {0} is defined for ungraded algebras only")]
    GradedInput(&'static str),
    #[error("mirror is defined for unsigned identities only")]
    SignedMirror,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A binary bracketing whose leaves are variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(usize),
    Mul(Box<Tree>, Box<Tree>),
}

const VAR_LETTERS: [char; 4] = ['x', 'y', 'z', 't'];

impl Tree {
    pub fn leaf(v: usize) -> Tree {
        Tree::Leaf(v)
    }

    pub fn mul(a: Tree, b: Tree) -> Tree {
        Tree::Mul(Box::new(a), Box::new(b))
    }

    /// Parses juxtaposition notation over the letters `x y z t`, e.g. `x(y(xy))`.
    /// Each parenthesised group and the whole string hold one or two factors.
    pub fn parse(s: &str) -> Result<Tree, IdentityError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_group(&chars, &mut pos).ok_or_else(|| IdentityError::Parse(s.to_string()))?;
        if pos != chars.len() {
            return Err(IdentityError::Parse(s.to_string()));
        }
        Ok(t)
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf(v) => out.push(*v),
            Tree::Mul(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Mul(a, b) => a.degree() + b.degree(),
        }
    }

    /// Reverses every product.
    pub fn mirror(&self) -> Tree {
        match self {
            Tree::Leaf(v) => Tree::Leaf(*v),
            Tree::Mul(a, b) => Tree::mul(b.mirror(), a.mirror()),
        }
    }

    /// Replaces leaves left to right by `labels`.
    fn relabel_in_order(&self, labels: &[usize], pos: &mut usize) -> Tree {
        match self {
            Tree::Leaf(_) => {
                let t = Tree::Leaf(labels[*pos]);
                *pos += 1;
                t
            }
            Tree::Mul(a, b) => {
                let l = a.relabel_in_order(labels, pos);
                let r = b.relabel_in_order(labels, pos);
                Tree::mul(l, r)
            }
        }
    }

    /// Evaluates on basis vectors `e_{tuple[v]}`.
    pub fn eval(&self, a: &SuperAlgebra, tuple: &[usize]) -> Vec<Scalar> {
        match self {
            Tree::Leaf(v) => unit_vec(a.dim(), tuple[*v]),
            Tree::Mul(l, r) => {
                let lv = l.eval(a, tuple);
                if is_zero_vec(&lv) {
                    return lv;
                }
                let rv = r.eval(a, tuple);
                a.mul(&lv, &rv)
            }
        }
    }

    /// Evaluates on arbitrary vectors.
    pub fn eval_vectors(&self, a: &SuperAlgebra, values: &[Vec<Scalar>]) -> Vec<Scalar> {
        match self {
            Tree::Leaf(v) => values[*v].clone(),
            Tree::Mul(l, r) => a.mul(&l.eval_vectors(a, values), &r.eval_vectors(a, values)),
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, names: &dyn Fn(usize) -> String, top: bool) -> fmt::Result {
        match self {
            Tree::Leaf(v) => f.write_str(&names(*v)),
            Tree::Mul(a, b) => {
                if !top {
                    f.write_str("(")?;
                }
                a.write(f, names, false)?;
                b.write(f, names, false)?;
                if !top {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_factor(chars: &[char], pos: &mut usize) -> Option<Tree> {
    let c = *chars.get(*pos)?;
    if c == '(' {
        *pos += 1;
        let t = parse_group(chars, pos)?;
        if chars.get(*pos) != Some(&')') {
            return None;
        }
        *pos += 1;
        Some(t)
    } else {
        let v = VAR_LETTERS.iter().position(|&l| l == c)?;
        *pos += 1;
        Some(Tree::Leaf(v))
    }
}

fn parse_group(chars: &[char], pos: &mut usize) -> Option<Tree> {
    let first = parse_factor(chars, pos)?;
    match chars.get(*pos) {
        None | Some(')') => Some(first),
        _ => {
            let second = parse_factor(chars, pos)?;
            match chars.get(*pos) {
                None | Some(')') => Some(Tree::mul(first, second)),
                _ => None,
            }
        }
    }
}

/// Koszul sign data of a term.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignSpec {
    pub pairs: Vec<(usize, usize)>,
    pub singles: Vec<usize>,
}

impl SignSpec {
    pub fn none() -> Self {
        SignSpec::default()
    }

    pub fn pairs(pairs: &[(usize, usize)]) -> Self {
        SignSpec { pairs: pairs.to_vec(), singles: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.pairs.is_empty() && self.singles.is_empty()
    }

    /// True when the sign is `-1` for the given variable parities.
    pub fn is_negative(&self, parity: &dyn Fn(usize) -> Parity) -> bool {
        let mut odd = false;
        for &(a, b) in &self.pairs {
            odd ^= parity(a).is_odd() && parity(b).is_odd();
        }
        for &a in &self.singles {
            odd ^= parity(a).is_odd();
        }
        odd
    }

    /// Pairs of variables inverted in `leaves` relative to `reference` order.
    pub fn from_leaf_order(reference: &[usize], leaves: &[usize]) -> Self {
        let rank = |v: usize| reference.iter().position(|&r| r == v).unwrap_or(usize::MAX);
        let mut pairs = Vec::new();
        for p in 0..leaves.len() {
            for q in p + 1..leaves.len() {
                if rank(leaves[p]) > rank(leaves[q]) {
                    let (a, b) = (leaves[p].min(leaves[q]), leaves[p].max(leaves[q]));
                    pairs.push((a, b));
                }
            }
        }
        pairs.sort_unstable();
        SignSpec { pairs, singles: Vec::new() }
    }

    fn normalized(&self) -> SignSpec {
        let mut pairs: Vec<(usize, usize)> =
            self.pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        let mut singles = self.singles.clone();
        singles.sort_unstable();
        SignSpec { pairs, singles }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub tree: Tree,
    pub sign: SignSpec,
}

impl Term {
    pub fn new(coeff: Scalar, tree: Tree, sign: SignSpec) -> Self {
        Term { coeff, tree, sign }
    }
}

/// `sum of terms = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedIdentity {
    name: String,
    vars: usize,
    terms: Vec<Term>,
}

fn multiset(tree: &Tree, vars: usize) -> Vec<usize> {
    let mut counts = vec![0usize; vars];
    for v in tree.leaves() {
        if v < vars {
            counts[v] += 1;
        }
    }
    counts
}

impl SignedIdentity {
    /// Every term must use the same multiset of variables, all below `vars`.
    pub fn new(name: impl Into<String>, vars: usize, terms: Vec<Term>) -> Result<Self, IdentityError> {
        let mut reference: Option<Vec<usize>> = None;
        for (i, t) in terms.iter().enumerate() {
            if t.tree.leaves().iter().any(|&v| v >= vars) {
                return Err(IdentityError::InconsistentVariables { term: i });
            }
            let m = multiset(&t.tree, vars);
            match &reference {
                None => reference = Some(m),
                Some(r) if *r != m => return Err(IdentityError::InconsistentVariables { term: i }),
                _ => {}
            }
        }
        Ok(SignedIdentity { name: name.into(), vars, terms })
    }

    /// Builds from `(coeff, tree-string, sign pairs)` triples.
    pub fn from_strs(
        name: impl Into<String>,
        terms: &[(i64, &str, &[(usize, usize)])],
    ) -> Result<Self, IdentityError> {
        let mut parsed = Vec::with_capacity(terms.len());
        let mut vars = 0;
        for &(c, s, pairs) in terms {
            let tree = Tree::parse(s)?;
            vars = vars.max(tree.leaves().iter().map(|v| v + 1).max().unwrap_or(0));
            parsed.push(Term::new(int(c), tree, SignSpec::pairs(pairs)));
        }
        SignedIdentity::new(name, vars, parsed)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_multilinear(&self) -> bool {
        self.terms.first().map_or(true, |t| multiset(&t.tree, self.vars).iter().all(|&c| c == 1))
    }

    pub fn is_signed(&self) -> bool {
        self.terms.iter().any(|t| !t.sign.is_trivial())
    }

    pub fn degree(&self) -> usize {
        self.terms.first().map_or(0, |t| t.tree.degree())
    }

    /// Full linearization: occurrence `j` of variable `v` becomes a fresh variable and the
    /// identity is summed over all reassignments of the fresh copies. Each resulting term
    /// carries the Koszul sign of its leaf order, so the output is a valid super identity.
    pub fn polarize(&self) -> Result<SignedIdentity, IdentityError> {
        if self.is_multilinear() {
            return Ok(self.clone());
        }
        if self.is_signed() {
            return Err(IdentityError::SignedPolarization);
        }
        let counts = multiset(&self.terms[0].tree, self.vars);
        let mut offsets = Vec::with_capacity(self.vars);
        let mut total = 0;
        for &c in &counts {
            offsets.push(total);
            total += c;
        }
        let reference: Vec<usize> = (0..total).collect();
        let perms: Vec<Vec<Vec<usize>>> = counts.iter().map(|&c| permutations(c)).collect();

        let mut out: Vec<Term> = Vec::new();
        for term in &self.terms {
            let leaves = term.tree.leaves();
            let mut choice = vec![0usize; self.vars];
            loop {
                let mut seen = vec![0usize; self.vars];
                let labels: Vec<usize> = leaves
                    .iter()
                    .map(|&v| {
                        let occ = seen[v];
                        seen[v] += 1;
                        offsets[v] + perms[v][choice[v]][occ]
                    })
                    .collect();
                let mut pos = 0;
                let tree = term.tree.relabel_in_order(&labels, &mut pos);
                let sign = SignSpec::from_leaf_order(&reference, &labels);
                match out.iter_mut().find(|t| t.tree == tree) {
                    Some(t) => t.coeff += &term.coeff,
                    None => out.push(Term::new(term.coeff.clone(), tree, sign)),
                }
                if !advance(&mut choice, &perms) {
                    break;
                }
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        SignedIdentity::new(format!("polarized {}", self.name), total, out)
    }

    /// Reverses every product; only unsigned identities are supported.
    pub fn mirror(&self) -> Result<SignedIdentity, IdentityError> {
        if self.is_signed() {
            return Err(IdentityError::SignedMirror);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.coeff.clone(), t.tree.mirror(), SignSpec::none()))
            .collect();
        SignedIdentity::new(format!("mirror of {}", self.name), self.vars, terms)
    }

    /// Residual of the identity on the basis tuple.
    pub fn residual(&self, a: &SuperAlgebra, tuple: &[usize]) -> Vec<Scalar> {
        let parity = |v: usize| a.parity(tuple[v]);
        let mut acc = zero_vec(a.dim());
        for t in &self.terms {
            let mut c = t.coeff.clone();
            if t.sign.is_negative(&parity) {
                c = -c;
            }
            let v = t.tree.eval(a, tuple);
            for (x, y) in acc.iter_mut().zip(v.iter()) {
                if !y.is_zero() {
                    *x += &c * y;
                }
            }
        }
        acc
    }

    fn var_name(&self, v: usize) -> String {
        if self.vars <= VAR_LETTERS.len() {
            VAR_LETTERS[v].to_string()
        } else {
            format!("x{}", v + 1)
        }
    }
}

impl fmt::Display for SignedIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |v: usize| self.var_name(v);
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff < Scalar::zero();
            let mag = if neg { -t.coeff.clone() } else { t.coeff.clone() };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if !mag.is_one() {
                write!(f, "{} ", mag)?;
            }
            let sign = t.sign.normalized();
            if !sign.is_trivial() {
                f.write_str("s[")?;
                let mut parts: Vec<String> = sign
                    .pairs
                    .iter()
                    .map(|&(a, b)| format!("{}{}", names(a), names(b)))
                    .collect();
                parts.extend(sign.singles.iter().map(|&a| names(a)));
                f.write_str(&parts.join(","))?;
                f.write_str("] ")?;
            }
            t.tree.write(f, &names, true)?;
        }
        f.write_str(" = 0")
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn advance(choice: &mut [usize], perms: &[Vec<Vec<usize>>]) -> bool {
    for (c, p) in choice.iter_mut().zip(perms.iter()) {
        *c += 1;
        if *c < p.len() {
            return true;
        }
        *c = 0;
    }
    false
}

/// Witness of a failed identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Counterexample),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(c) => Some(c),
        }
    }
}

/// Decides `id` on `a` using the default variable bound.
pub fn holds(a: &SuperAlgebra, id: &SignedIdentity) -> Result<Verdict, IdentityError> {
    holds_with_bound(a, id, DEFAULT_VARIABLE_BOUND)
}

/// Tuples are scanned in lexicographic order; the first nonzero residual is returned.
/// Non-multilinear identities are polarized first, which requires an ungraded algebra
/// unless the identity is unsigned (then the polarization carries leaf-order signs).
pub fn holds_with_bound(
    a: &SuperAlgebra,
    id: &SignedIdentity,
    bound: usize,
) -> Result<Verdict, IdentityError> {
    let linear;
    let id = if id.is_multilinear() {
        id
    } else {
        if a.is_graded() {
            return Err(IdentityError::RepeatedVariablesGraded(id.name().to_string()));
        }
        linear = id.polarize()?;
        &linear
    };
    if id.vars() > bound {
        return Err(IdentityError::TooManyVariables { found: id.vars(), bound });
    }
    let n = a.dim();
    let m = id.vars();
    if n == 0 {
        return Ok(Verdict::Holds);
    }
    let mut tuple = vec![0usize; m];
    loop {
        let r = id.residual(a, &tuple);
        if !is_zero_vec(&r) {
            return Ok(Verdict::Fails(Counterexample {
                identity: id.name().to_string(),
                tuple,
                residual: r,
            }));
        }
        let mut k = m;
        loop {
            if k == 0 {
                return Ok(Verdict::Holds);
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < n {
                break;
            }
            tuple[k] = 0;
        }
    }
}

/// Evaluates a polarized (super) identity. Unlike `holds`, this accepts graded
/// algebras for unsigned identities with repeated variables.
pub fn holds_polarized(a: &SuperAlgebra, id: &SignedIdentity) -> Result<Verdict, IdentityError> {
    let p = id.polarize()?;
    holds_with_bound(a, &p, DEFAULT_VARIABLE_BOUND)
}

/// Conjunction of the registry identities of `v`; reports the first violated one.
pub fn in_variety(a: &SuperAlgebra, v: VarietyName) -> Result<Verdict, IdentityError> {
    if v.ungraded_only() && a.is_graded() {
        return Err(IdentityError::GradedInput(v.cli_name()));
    }
    for id in v.identities() {
        let verdict = holds(a, &id)?;
        if !verdict.holds() {
            return Ok(verdict);
        }
    }
    Ok(Verdict::Holds)
}

/// Convenience boolean form of `in_variety`.
pub fn is_member(a: &SuperAlgebra, v: VarietyName) -> Result<bool, IdentityError> {
    Ok(in_variety(a, v)?.holds())
}

const SAMPLE_SEED: u64 = 0x5a1b_1e1d;
const RANDOM_SAMPLES: usize = 8;

/// Sampling oracle: every subalgebra generated by `i` vectors from a fixed family
/// (all basis vectors or basis pairs, plus seeded random integer combinations)
/// lies in `v`.
pub fn subalgebra_variety_check(a: &SuperAlgebra, v: VarietyName, i: usize) -> Result<bool, IdentityError> {
    if a.is_graded() {
        return Err(IdentityError::GradedInput(v.cli_name()));
    }
    let n = a.dim();
    let mut families: Vec<Vec<Vec<Scalar>>> = Vec::new();
    match i {
        1 => families.extend((0..n).map(|p| vec![unit_vec(n, p)])),
        _ => {
            for p in 0..n {
                for q in p + 1..n {
                    families.push(vec![unit_vec(n, p), unit_vec(n, q)]);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    for _ in 0..RANDOM_SAMPLES {
        let gens = (0..i.max(1))
            .map(|_| (0..n).map(|_| int(rng.gen_range(-3..=3))).collect())
            .collect();
        families.push(gens);
    }
    for gens in families {
        let span = a.generated_subalgebra(&gens)?;
        let sub = a.restrict(&span)?;
        if !is_member(&sub, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}
