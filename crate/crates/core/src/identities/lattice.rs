//! Strict-inclusion certificates for the lattice of symmetric Zinbiel and
//! symmetric Leibniz varieties together with their mono and binary relatives.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{in_variety, Counterexample, IdentityError, VarietyName};
use crate::catalog;
use crate::superalgebra::SuperAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeNode {
    SZ,
    SL,
    SZ2,
    SL2,
    /// Mono symmetric Zinbiel, equal to mono symmetric Leibniz.
    SZ1,
    SLcapSZ,
    AssCapLie1,
    SL2capSZ2,
}

impl LatticeNode {
    pub fn name(self) -> &'static str {
        match self {
            LatticeNode::SZ => "SZ",
            LatticeNode::SL => "SL",
            LatticeNode::SZ2 => "SZ2",
            LatticeNode::SL2 => "SL2",
            LatticeNode::SZ1 => "SZ1",
            LatticeNode::SLcapSZ => "SL∩SZ",
            LatticeNode::AssCapLie1 => "Ass∩Lie1",
            LatticeNode::SL2capSZ2 => "SL2∩SZ2",
        }
    }

    /// Conjunction of registry varieties defining the node.
    pub fn varieties(self) -> &'static [VarietyName] {
        use VarietyName::*;
        match self {
            LatticeNode::SZ => &[SymmetricZinbiel],
            LatticeNode::SL => &[SymmetricLeibniz],
            LatticeNode::SZ2 => &[BinarySymZinbielA],
            LatticeNode::SL2 => &[BinarySymLeibniz],
            LatticeNode::SZ1 => &[MonoSymZinbiel],
            LatticeNode::SLcapSZ => &[SymmetricLeibniz, SymmetricZinbiel],
            LatticeNode::AssCapLie1 => &[Associative, Lie1],
            LatticeNode::SL2capSZ2 => &[BinarySymLeibniz, BinarySymZinbielA],
        }
    }

    /// `None` on membership, otherwise the first failure.
    pub fn failure(self, a: &SuperAlgebra) -> Result<Option<Counterexample>, IdentityError> {
        for &v in self.varieties() {
            if let Some(c) = in_variety(a, v)?.counterexample() {
                return Ok(Some(c.clone()));
            }
        }
        Ok(None)
    }

    pub fn contains(self, a: &SuperAlgebra) -> Result<bool, IdentityError> {
        Ok(self.failure(a)?.is_none())
    }
}

impl fmt::Display for LatticeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeEdge {
    pub smaller: LatticeNode,
    pub larger: LatticeNode,
    pub witness: &'static str,
}

/// The strict inclusions and the catalog name of the witness for each.
pub fn lattice_edges() -> Vec<LatticeEdge> {
    use LatticeNode::*;
    let e = |smaller, larger, witness| LatticeEdge { smaller, larger, witness };
    alloc::vec![
        e(SLcapSZ, SZ, "LatticeWitness_SZ"),
        e(SL2capSZ2, SZ2, "LatticeWitness_SZ"),
        e(SL2, SZ1, "LatticeWitness_SZ"),
        e(SLcapSZ, SL, "LatticeWitness_SL"),
        e(SLcapSZ, AssCapLie1, "LatticeWitness_AssLie"),
        e(AssCapLie1, SL2capSZ2, "LatticeWitness_Binary"),
        e(SL, SL2, "LatticeWitness_Binary"),
        e(SZ, SZ2, "LatticeWitness_Binary"),
        e(SZ2, SZ1, "LatticeWitness_Mono"),
        e(SL2capSZ2, SL2, "LatticeWitness_Mono"),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCertificate {
    pub edge: LatticeEdge,
    pub in_larger: bool,
    pub in_smaller: bool,
    /// Why the witness is outside the smaller variety.
    pub smaller_failure: Option<Counterexample>,
    /// Why the witness is outside the larger variety, when it is.
    pub larger_failure: Option<Counterexample>,
}

impl EdgeCertificate {
    pub fn certified(&self) -> bool {
        self.in_larger && !self.in_smaller
    }
}

/// Membership of one algebra in the nodes that should all coincide with TriplesZero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationRow {
    pub algebra: String,
    pub triples_zero: bool,
    pub sl_cap_sz: bool,
    pub sl_cap_sz2: bool,
    pub sz_cap_sl2: bool,
}

impl CharacterizationRow {
    pub fn agrees(&self) -> bool {
        self.triples_zero == self.sl_cap_sz
            && self.triples_zero == self.sl_cap_sz2
            && self.triples_zero == self.sz_cap_sl2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    pub edges: Vec<EdgeCertificate>,
    pub characterization: Vec<CharacterizationRow>,
    /// A zero algebra lies in every node.
    pub zero_algebra_everywhere: bool,
}

impl LatticeReport {
    pub fn all_certified(&self) -> bool {
        self.edges.iter().all(EdgeCertificate::certified)
    }

    pub fn characterization_holds(&self) -> bool {
        self.characterization.iter().all(CharacterizationRow::agrees)
    }

    pub fn failed_edges(&self) -> impl Iterator<Item = &EdgeCertificate> {
        self.edges.iter().filter(|c| !c.certified())
    }
}

fn row(name: &str, a: &SuperAlgebra) -> Result<CharacterizationRow, IdentityError> {
    use VarietyName::*;
    let m = |v| -> Result<bool, IdentityError> { Ok(in_variety(a, v)?.holds()) };
    let sl = m(SymmetricLeibniz)?;
    let sz = m(SymmetricZinbiel)?;
    Ok(CharacterizationRow {
        algebra: name.to_string(),
        triples_zero: m(TriplesZero)?,
        sl_cap_sz: sl && sz,
        sl_cap_sz2: sl && m(BinarySymZinbielA)?,
        sz_cap_sl2: sz && m(BinarySymLeibniz)?,
    })
}

/// Certifies every edge with its witness and checks the TriplesZero
/// characterization on the witnesses, the ungraded catalog and `extra`.
/// Every edge is evaluated; failures are reported rather than aborting.
pub fn lattice_report(extra: &[(String, SuperAlgebra)]) -> Result<LatticeReport, IdentityError> {
    let mut edges = Vec::new();
    for edge in lattice_edges() {
        let w = catalog::get(edge.witness, &[]).expect("lattice witness is in the catalog");
        let larger_failure = edge.larger.failure(&w)?;
        let smaller_failure = edge.smaller.failure(&w)?;
        edges.push(EdgeCertificate {
            edge,
            in_larger: larger_failure.is_none(),
            in_smaller: smaller_failure.is_none(),
            smaller_failure,
            larger_failure,
        });
    }
    let mut characterization = Vec::new();
    for (name, a) in catalog::instances() {
        if !a.is_graded() {
            characterization.push(row(&name, &a)?);
        }
    }
    for (name, a) in extra {
        characterization.push(row(name, a)?);
    }
    let zero = SuperAlgebra::zero(3, 0);
    let mut zero_algebra_everywhere = true;
    for node in [
        LatticeNode::SZ,
        LatticeNode::SL,
        LatticeNode::SZ2,
        LatticeNode::SL2,
        LatticeNode::SZ1,
        LatticeNode::SLcapSZ,
        LatticeNode::AssCapLie1,
        LatticeNode::SL2capSZ2,
    ] {
        zero_algebra_everywhere &= node.contains(&zero)?;
    }
    characterization.push(row("zero algebra (3,0)", &zero)?);
    Ok(LatticeReport { edges, characterization, zero_algebra_everywhere })
}
