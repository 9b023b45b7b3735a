//! Simple numerical semigroups.
//!
//! For minimal generators `a₁ < a₂ < … < aₙ` let `δᵢ` be the least `k >= 1`
//! with `k·aᵢ` in the semigroup of the other generators. `H` is simple when
//! `a₁ = 1 + Σᵢ₌₂..ₙ (δᵢ - 1)`; its pseudo-Frobenius numbers are then
//! `(δᵢ - 1)aᵢ - a₁` for `i >= 2`.

use crate::error::{Error, Result};
use crate::herzog::HerzogExponents;
use crate::semigroup::{PfSet, Semigroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaProfile {
    /// Minimal generators, ascending.
    pub generators: Vec<i64>,
    pub deltas: Vec<i64>,
}

impl DeltaProfile {
    /// `1 + Σᵢ₌₂..ₙ (δᵢ - 1)`.
    pub fn simple_bound(&self) -> i64 {
        1 + self.deltas[1..].iter().map(|d| d - 1).sum::<i64>()
    }
}

pub fn delta_profile(s: &Semigroup) -> Result<DeltaProfile> {
    let n = s.embedding_dimension();
    if n < 2 {
        return Err(Error::TooFewGenerators(n));
    }
    let generators = s.minimal_generators().to_vec();
    let deltas = generators
        .iter()
        .map(|&g| s.min_multiple_in_others(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(DeltaProfile { generators, deltas })
}

pub fn is_simple(s: &Semigroup) -> Result<bool> {
    let profile = delta_profile(s)?;
    Ok(profile.generators[0] == profile.simple_bound())
}

/// Pseudo-Frobenius numbers of a simple semigroup from the `δᵢ`.
pub fn simple_pf(s: &Semigroup) -> Result<PfSet> {
    let profile = delta_profile(s)?;
    let a1 = profile.generators[0];
    if a1 != profile.simple_bound() {
        return Err(Error::NotSimple);
    }
    let values = profile.generators[1..]
        .iter()
        .zip(&profile.deltas[1..])
        .map(|(&a, &d)| {
            (d - 1)
                .checked_mul(a)
                .map(|v| v - a1)
                .ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    let pf = PfSet::new(values);
    if cfg!(debug_assertions) {
        let direct = s.pseudo_frobenius()?;
        if direct != pf {
            return Err(Error::Inconsistent(format!(
                "simple PF {:?} differs from direct PF {:?}",
                pf.values, direct.values
            )));
        }
    }
    Ok(pf)
}

/// For `⟨a, b, c⟩` with exponents solved in an order starting at the
/// least generator: simple iff `β' = γ = 1`.
pub fn simple_matrix_criterion(s: &Semigroup, e: &HerzogExponents) -> Result<bool> {
    if s.embedding_dimension() != 3 {
        return Err(Error::NotThreeGenerated(s.embedding_dimension()));
    }
    let mut sorted = e.order;
    sorted.sort_unstable();
    if sorted != s.minimal_generators() {
        return Err(Error::InvalidOrder(e.order));
    }
    if e.order[0] != s.multiplicity() {
        return Err(Error::OrderViolation(e.order[0]));
    }
    Ok(e.beta_p == 1 && e.gamma == 1)
}

/// `(β-1)(γ-1) + (β'-1)(γ'-1) + (β'γ-1)`, which vanishes iff `β' = γ = 1`.
pub fn simplicity_defect(e: &HerzogExponents) -> i64 {
    (e.beta - 1) * (e.gamma - 1) + (e.beta_p - 1) * (e.gamma_p - 1) + (e.beta_p * e.gamma - 1)
}
