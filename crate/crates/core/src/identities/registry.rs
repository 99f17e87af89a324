//! Registry of named varieties and their defining identities.
//!
//! Variables: x=0, y=1, z=2. Sign pairs follow the leaf-order rule: a term carries
//! `(-1)^{|a||b|}` for every pair of variables it lists in the opposite order to the
//! first term.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{SignSpec, SignedIdentity, Term, Tree};
use crate::exactlin::int;

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarietyName {
    LeftZinbiel,
    RightZinbiel,
    SymmetricZinbiel,
    LeftLeibniz,
    RightLeibniz,
    SymmetricLeibniz,
    LR,
    AntiFlexible,
    MonoSymZinbiel,
    BinarySymZinbielA,
    BinarySymZinbielB,
    MonoLeftLeibniz,
    BinaryLeftLeibniz,
    BinarySymLeibniz,
    MonoLeftZinbiel,
    BinaryLeftZinbiel,
    Associative,
    Lie1,
    IntersectionSLSZ,
    TriplesZero,
    Omega,
}

impl VarietyName {
    pub const ALL: [VarietyName; 21] = [
        VarietyName::LeftZinbiel,
        VarietyName::RightZinbiel,
        VarietyName::SymmetricZinbiel,
        VarietyName::LeftLeibniz,
        VarietyName::RightLeibniz,
        VarietyName::SymmetricLeibniz,
        VarietyName::LR,
        VarietyName::AntiFlexible,
        VarietyName::MonoSymZinbiel,
        VarietyName::BinarySymZinbielA,
        VarietyName::BinarySymZinbielB,
        VarietyName::MonoLeftLeibniz,
        VarietyName::BinaryLeftLeibniz,
        VarietyName::BinarySymLeibniz,
        VarietyName::MonoLeftZinbiel,
        VarietyName::BinaryLeftZinbiel,
        VarietyName::Associative,
        VarietyName::Lie1,
        VarietyName::IntersectionSLSZ,
        VarietyName::TriplesZero,
        VarietyName::Omega,
    ];

    /// Lowercase hyphenated name used on the command line.
    pub fn cli_name(self) -> &'static str {
        use VarietyName::*;
        match self {
            LeftZinbiel => "left-zinbiel",
            RightZinbiel => "right-zinbiel",
            SymmetricZinbiel => "symmetric-zinbiel",
            LeftLeibniz => "left-leibniz",
            RightLeibniz => "right-leibniz",
            SymmetricLeibniz => "symmetric-leibniz",
            LR => "lr",
            AntiFlexible => "anti-flexible",
            MonoSymZinbiel => "mono-symmetric-zinbiel",
            BinarySymZinbielA => "binary-symmetric-zinbiel-a",
            BinarySymZinbielB => "binary-symmetric-zinbiel-b",
            MonoLeftLeibniz => "mono-left-leibniz",
            BinaryLeftLeibniz => "binary-left-leibniz",
            BinarySymLeibniz => "binary-symmetric-leibniz",
            MonoLeftZinbiel => "mono-left-zinbiel",
            BinaryLeftZinbiel => "binary-left-zinbiel",
            Associative => "associative",
            Lie1 => "lie1",
            IntersectionSLSZ => "intersection-slsz",
            TriplesZero => "triples-zero",
            Omega => "omega",
        }
    }

    /// Accepts the CLI name, with `sym` allowed for `symmetric`.
    pub fn from_cli_name(s: &str) -> Option<VarietyName> {
        let lower = s.trim().to_ascii_lowercase().replace('_', "-");
        let expanded = lower
            .split('-')
            .map(|w| if w == "sym" { "symmetric" } else { w })
            .collect::<Vec<_>>()
            .join("-");
        VarietyName::ALL.iter().copied().find(|v| v.cli_name() == expanded)
    }

    /// Varieties given by identities with repeated variables or that are stated
    /// for ordinary algebras only.
    pub fn ungraded_only(self) -> bool {
        use VarietyName::*;
        matches!(
            self,
            MonoSymZinbiel
                | BinarySymZinbielA
                | BinarySymZinbielB
                | MonoLeftLeibniz
                | BinaryLeftLeibniz
                | BinarySymLeibniz
                | MonoLeftZinbiel
                | BinaryLeftZinbiel
                | Lie1
                | IntersectionSLSZ
                | Omega
        )
    }

    pub fn identities(self) -> Vec<SignedIdentity> {
        use VarietyName::*;
        match self {
            LeftZinbiel => vec![left_zinbiel()],
            RightZinbiel => vec![right_zinbiel()],
            SymmetricZinbiel => vec![left_zinbiel(), right_zinbiel()],
            LeftLeibniz => vec![left_leibniz()],
            RightLeibniz => vec![right_leibniz()],
            SymmetricLeibniz => vec![left_leibniz(), right_leibniz()],
            LR => lr(),
            AntiFlexible => vec![anti_flexible()],
            MonoSymZinbiel => vec![
                id("x^2x = 0", &[(1, "(xx)x", &[])]),
                id("xx^2 = 0", &[(1, "x(xx)", &[])]),
                id("x^2x^2 = 0", &[(1, "(xx)(xx)", &[])]),
            ],
            BinarySymZinbielA => {
                let mut v = binary_left_zinbiel_printed();
                v.extend(binary_left_zinbiel());
                v
            }
            BinarySymZinbielB => vec![
                id("x^2y = 0", &[(1, "(xx)y", &[])]),
                id("x(yx) = (xy)x", &[(1, "x(yx)", &[]), (-1, "(xy)x", &[])]),
                id(
                    "x(y(xy)) = (xy)(xy) + y(x(xy))",
                    &[(1, "x(y(xy))", &[]), (-1, "(xy)(xy)", &[]), (-1, "y(x(xy))", &[])],
                ),
                id("yx^2 = 0", &[(1, "y(xx)", &[])]),
                id(
                    "(xy)(xy) = ((xy)x)y + x((xy)y)",
                    &[(1, "(xy)(xy)", &[]), (-1, "((xy)x)y", &[]), (-1, "x((xy)y)", &[])],
                ),
            ],
            MonoLeftLeibniz => vec![
                id("x^2x = 0", &[(1, "(xx)x", &[])]),
                id("x^2x^2 = 0", &[(1, "(xx)(xx)", &[])]),
            ],
            BinaryLeftLeibniz => binary_left_leibniz(),
            BinarySymLeibniz => {
                let mut v = binary_left_leibniz();
                let mirrored: Vec<SignedIdentity> =
                    v.iter().map(|i| i.mirror().expect("unsigned identity")).collect();
                v.extend(mirrored);
                v
            }
            MonoLeftZinbiel => vec![
                id("x^2x = 2xx^2", &[(1, "(xx)x", &[]), (-2, "x(xx)", &[])]),
                id("x^2x^2 = 3x(x(xx))", &[(1, "(xx)(xx)", &[]), (-3, "x(x(xx))", &[])]),
            ],
            BinaryLeftZinbiel => binary_left_zinbiel(),
            Associative => vec![associative()],
            Lie1 => vec![id("x^2 = 0", &[(1, "xx", &[])])],
            IntersectionSLSZ => intersection_slsz(),
            TriplesZero => vec![
                id("(xy)z = 0", &[(1, "(xy)z", &[])]),
                id("x(yz) = 0", &[(1, "x(yz)", &[])]),
            ],
            Omega => vec![
                id(
                    "(xy)z = x(yz - zy)",
                    &[(1, "(xy)z", &[]), (-1, "x(yz)", &[]), (1, "x(zy)", &[])],
                ),
                id(
                    "x(yz) = (xy - yx)z",
                    &[(1, "x(yz)", &[]), (-1, "(xy)z", &[]), (1, "(yx)z", &[])],
                ),
            ],
        }
    }
}

impl fmt::Display for VarietyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

fn id(name: &str, terms: &[(i64, &str, &[(usize, usize)])]) -> SignedIdentity {
    SignedIdentity::from_strs(name, terms).expect("registry identity is well formed")
}

/// (xy)z = x(yz) + s(y,z) x(zy)
pub fn left_zinbiel() -> SignedIdentity {
    id(
        "left Zinbiel",
        &[(1, "(xy)z", &[]), (-1, "x(yz)", &[]), (-1, "x(zy)", &[(Y, Z)])],
    )
}

/// x(yz) = (xy)z + s(x,y) (yx)z
pub fn right_zinbiel() -> SignedIdentity {
    id(
        "right Zinbiel",
        &[(1, "x(yz)", &[]), (-1, "(xy)z", &[]), (-1, "(yx)z", &[(X, Y)])],
    )
}

/// x(yz) = (xy)z + s(x,y) y(xz)
pub fn left_leibniz() -> SignedIdentity {
    id(
        "left Leibniz",
        &[(1, "x(yz)", &[]), (-1, "(xy)z", &[]), (-1, "y(xz)", &[(X, Y)])],
    )
}

/// (xy)z = s(y,z) (xz)y + x(yz)
pub fn right_leibniz() -> SignedIdentity {
    id(
        "right Leibniz",
        &[(1, "(xy)z", &[]), (-1, "(xz)y", &[(Y, Z)]), (-1, "x(yz)", &[])],
    )
}

pub fn associative() -> SignedIdentity {
    id("associativity", &[(1, "(xy)z", &[]), (-1, "x(yz)", &[])])
}

/// (xy)z = s(y,z)(xz)y and x(yz) = s(x,y) y(xz).
pub fn lr() -> Vec<SignedIdentity> {
    vec![
        id("(xy)z = s(y,z)(xz)y", &[(1, "(xy)z", &[]), (-1, "(xz)y", &[(Y, Z)])]),
        id("x(yz) = s(x,y)y(xz)", &[(1, "x(yz)", &[]), (-1, "y(xz)", &[(X, Y)])]),
    ]
}

/// (x,y,z) = S (z,y,x) for the associator, S the full reversal sign.
pub fn anti_flexible() -> SignedIdentity {
    let rev: &[(usize, usize)] = &[(X, Y), (X, Z), (Y, Z)];
    id(
        "anti-flexible",
        &[(1, "(xy)z", &[]), (-1, "x(yz)", &[]), (-1, "(zy)x", rev), (1, "z(yx)", rev)],
    )
}

/// (xy)z + s(x,y)s(x,z) y(zx) = 0
pub fn cyclic_consequence() -> SignedIdentity {
    id("(xy)z = -s y(zx)", &[(1, "(xy)z", &[]), (1, "y(zx)", &[(X, Y), (X, Z)])])
}

/// (xy)z + S z(yx) = 0 with S the full reversal sign.
pub fn reversal_consequence() -> SignedIdentity {
    id("(xy)z = -S z(yx)", &[(1, "(xy)z", &[]), (1, "z(yx)", &[(X, Y), (X, Z), (Y, Z)])])
}

/// Identities every symmetric Zinbiel superalgebra satisfies.
pub fn symmetric_zinbiel_consequences() -> Vec<SignedIdentity> {
    let mut v = lr();
    v.push(anti_flexible());
    v.push(cyclic_consequence());
    v.push(reversal_consequence());
    v
}

fn binary_left_zinbiel_printed() -> Vec<SignedIdentity> {
    vec![
        id("x(yx) = (xy+yx)x", &[(1, "x(yx)", &[]), (-1, "(xy)x", &[]), (-1, "(yx)x", &[])]),
        id("x(xy) = 2x^2y", &[(1, "x(xy)", &[]), (-2, "(xx)y", &[])]),
    ]
}

/// Binary identities for the convention `(xy)z = x(yz) + x(zy)`.
fn binary_left_zinbiel() -> Vec<SignedIdentity> {
    vec![
        id("(xy)x = x(yx+xy)", &[(1, "(xy)x", &[]), (-1, "x(yx)", &[]), (-1, "x(xy)", &[])]),
        id("(yx)x = 2yx^2", &[(1, "(yx)x", &[]), (-2, "y(xx)", &[])]),
    ]
}

fn binary_left_leibniz() -> Vec<SignedIdentity> {
    vec![
        id("x^2y = 0", &[(1, "(xx)y", &[])]),
        id("x(yx) = (xy)x + yx^2", &[(1, "x(yx)", &[]), (-1, "(xy)x", &[]), (-1, "y(xx)", &[])]),
        id(
            "x(y(xy)) = (xy)(xy) + y(x(xy))",
            &[(1, "x(y(xy))", &[]), (-1, "(xy)(xy)", &[]), (-1, "y(x(xy))", &[])],
        ),
    ]
}

fn intersection_slsz() -> Vec<SignedIdentity> {
    let perms: [([usize; 3], i64); 5] = [
        ([0, 2, 1], -1),
        ([1, 0, 2], -1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([2, 1, 0], -1),
    ];
    let mut out = Vec::new();
    for (sigma, sgn) in perms {
        let [a, b, c] = sigma;
        let left = Tree::mul(Tree::mul(Tree::leaf(X), Tree::leaf(Y)), Tree::leaf(Z));
        let left_s = Tree::mul(Tree::mul(Tree::leaf(a), Tree::leaf(b)), Tree::leaf(c));
        let right = Tree::mul(Tree::leaf(X), Tree::mul(Tree::leaf(Y), Tree::leaf(Z)));
        let right_s = Tree::mul(Tree::leaf(a), Tree::mul(Tree::leaf(b), Tree::leaf(c)));
        for (name, t, ts) in [("left-normed", left, left_s), ("right-normed", right, right_s)] {
            let terms = vec![
                Term::new(int(1), t, SignSpec::none()),
                Term::new(int(-sgn), ts, SignSpec::none()),
            ];
            let label = alloc::format!("{} alternation by ({} {} {})", name, a + 1, b + 1, c + 1);
            out.push(SignedIdentity::new(label, 3, terms).expect("well formed"));
        }
    }
    out
}
