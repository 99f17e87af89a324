//! Truncated Grassmann envelopes `A₀ ⊗ Γ₀ ⊕ A₁ ⊗ Γ₁` over `k ≤ 4` generators.
//! A super identity holds on `A` iff its unsigned form holds on the envelope,
//! which cross-checks every Koszul sign in the registry.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::exactlin::Scalar;
use crate::identities::{in_variety, IdentityError, VarietyName};
use crate::superalgebra::{AlgebraBuilder, Parity, SuperAlgebra};

pub const MAX_RANK: usize = 4;
pub const DEFAULT_RANK: usize = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnvelopeError {
    #[error("Grassmann rank {0} exceeds the bound {MAX_RANK}")]
    RankTooLarge(usize),
    #[error(transparent)]
    Identity(#[from] IdentityError),
}

/// Wedge product of monomials given as bitmasks: `None` when they share a
/// generator, otherwise the sign `(-1)^{#{s ∈ S, t ∈ T : s > t}}` and `S ∪ T`.
pub fn wedge(s: u32, t: u32) -> Option<(bool, u32)> {
    if s & t != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = t;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        inversions += (s >> (bit + 1)).count_ones();
        rest &= rest - 1;
    }
    Some((inversions % 2 == 1, s | t))
}

/// Envelope basis `(i, S)` in order: algebra index, then bitmask.
pub fn envelope_basis(a: &SuperAlgebra, k: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    for i in 0..a.dim() {
        for s in 0..(1u32 << k) {
            if s.count_ones() % 2 == a.parity(i).bit() as u32 {
                out.push((i, s));
            }
        }
    }
    out
}

fn monomial_label(s: u32) -> String {
    if s == 0 {
        return String::from("1");
    }
    let mut out = String::new();
    for g in 0..32 {
        if s & (1 << g) != 0 {
            out.push_str(&format!("ξ{}", g + 1));
        }
    }
    out
}

/// Ungraded algebra with `(x ⊗ g)(y ⊗ h) = xy ⊗ gh`.
pub fn grassmann_envelope(a: &SuperAlgebra, k: usize) -> Result<SuperAlgebra, EnvelopeError> {
    if k > MAX_RANK {
        return Err(EnvelopeError::RankTooLarge(k));
    }
    let basis = envelope_basis(a, k);
    let index = |i: usize, s: u32| basis.iter().position(|&b| b == (i, s)).expect("parity-compatible pair");
    let mut b = AlgebraBuilder::new(alloc::vec![Parity::Even; basis.len()]);
    for (p, &(i, s)) in basis.iter().enumerate() {
        for (q, &(j, t)) in basis.iter().enumerate() {
            let Some((negative, u)) = wedge(s, t) else { continue };
            for &(kk, ref c) in a.basis_product(i, j) {
                let c: Scalar = if negative { -c.clone() } else { c.clone() };
                b.add_entry(p, q, index(kk, u), c);
            }
        }
    }
    let (env, _) = b.build().expect("ungraded builder");
    let labels = basis.iter().map(|&(i, s)| format!("{}⊗{}", a.label(i), monomial_label(s))).collect();
    Ok(env.with_labels(labels).expect("one label per vector"))
}

/// Super verdict on `a` and ungraded verdict on its rank-`k` envelope.
pub fn envelope_agreement(a: &SuperAlgebra, v: VarietyName, k: usize) -> Result<(bool, bool), EnvelopeError> {
    let env = grassmann_envelope(a, k)?;
    let direct = in_variety(a, v)?.holds();
    let via = in_variety(&env, v)?.holds();
    Ok((direct, via))
}
