//! Exponents of the 2×3 monomial matrix
//!
//! ```text
//! ( X^α    Y^β    Z^γ  )
//! ( Y^β'   Z^γ'   X^α' )
//! ```
//!
//! whose maximal minors define the semigroup ring of a non-symmetric
//! `H = ⟨a, b, c⟩`, together with the closed forms that follow from them:
//! generator reconstruction, the pseudo-Frobenius pair `{f, f'}` and the
//! genus gap `2g - (F + 1)`.
//!
//! The exponents depend on the order of `(a, b, c)`. A cyclic rotation of
//! the order rotates both exponent triples; swapping two generators mixes
//! primed and unprimed exponents and flips the branch `β'b ≷ αa`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{gcd_all, Semigroup};

/// Which of the two pseudo-Frobenius numbers is the Frobenius number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `β'b > αa`, so `f' > f` and the genus gap is `αβγ`.
    PrimedLarger,
    /// `β'b < αa`, so `f > f'` and the genus gap is `α'β'γ'`.
    UnprimedLarger,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::PrimedLarger => "primed_larger",
            Branch::UnprimedLarger => "unprimed_larger",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HerzogExponents {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub alpha_p: i64,
    pub beta_p: i64,
    pub gamma_p: i64,
    /// The generator order `(a, b, c)` the exponents belong to.
    pub order: [i64; 3],
}

impl HerzogExponents {
    /// Exponents with no associated order; `order` is filled in from
    /// [`reconstruct_generators`] when possible.
    pub fn from_tuple(t: [i64; 6]) -> Self {
        let mut e = Self {
            alpha: t[0],
            beta: t[1],
            gamma: t[2],
            alpha_p: t[3],
            beta_p: t[4],
            gamma_p: t[5],
            order: [0; 3],
        };
        if let Ok(gens) = reconstruct_generators(&e) {
            e.order = gens;
        }
        e
    }

    pub fn as_tuple(&self) -> [i64; 6] {
        [
            self.alpha,
            self.beta,
            self.gamma,
            self.alpha_p,
            self.beta_p,
            self.gamma_p,
        ]
    }

    /// Exponents for the order `(b, c, a)`.
    pub fn rotated(&self) -> Self {
        let [a, b, c] = self.order;
        Self {
            alpha: self.beta,
            beta: self.gamma,
            gamma: self.alpha,
            alpha_p: self.beta_p,
            beta_p: self.gamma_p,
            gamma_p: self.alpha_p,
            order: [b, c, a],
        }
    }

    /// Exponents for the order `(a, c, b)`.
    pub fn swapped(&self) -> Self {
        let [a, b, c] = self.order;
        Self {
            alpha: self.alpha_p,
            beta: self.gamma_p,
            gamma: self.beta_p,
            alpha_p: self.alpha,
            beta_p: self.gamma,
            gamma_p: self.beta,
            order: [a, c, b],
        }
    }

    pub fn unprimed_product(&self) -> Result<i64> {
        product(&[self.alpha, self.beta, self.gamma])
    }

    pub fn primed_product(&self) -> Result<i64> {
        product(&[self.alpha_p, self.beta_p, self.gamma_p])
    }
}

/// The pseudo-Frobenius pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PfData {
    /// `αa + (γ+γ')c - (a+b+c)`
    pub f: i64,
    /// `β'b + (γ+γ')c - (a+b+c)`
    pub f_prime: i64,
    pub frobenius: i64,
    pub branch: Branch,
}

fn product(values: &[i64]) -> Result<i64> {
    values
        .iter()
        .try_fold(1i64, |acc, &v| acc.checked_mul(v))
        .ok_or(Error::Overflow)
}

/// `Σ x·y` with overflow checks.
fn dot(terms: &[(i64, i64)]) -> Result<i64> {
    terms.iter().try_fold(0i64, |acc, &(x, y)| {
        x.checked_mul(y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow)
    })
}

fn three_generators(s: &Semigroup) -> Result<[i64; 3]> {
    match *s.minimal_generators() {
        [a, b, c] => Ok([a, b, c]),
        ref other => Err(Error::NotThreeGenerated(other.len())),
    }
}

fn check_order(s: &Semigroup, order: [i64; 3]) -> Result<()> {
    let minimal = three_generators(s)?;
    let mut sorted = order;
    sorted.sort_unstable();
    if sorted != minimal {
        return Err(Error::InvalidOrder(order));
    }
    Ok(())
}

/// Least `n >= 1` with `n · generator ∈ ⟨other two⟩`.
pub fn min_multiple(s: &Semigroup, generator: i64) -> Result<i64> {
    three_generators(s)?;
    s.min_multiple_in_others(generator)
}

/// Finds the unique `(i, j)` in `[1, x_bound) × [1, y_bound)` with
/// `i·x + j·y = total`.
fn unique_decomposition(
    total: i64,
    (x, x_bound): (i64, i64),
    (y, y_bound): (i64, i64),
    relation: &'static str,
) -> Result<(i64, i64)> {
    let mut found = None;
    for i in 1..x_bound {
        let rest = total - dot(&[(i, x)])?;
        if rest <= 0 {
            break;
        }
        if rest % y == 0 && rest / y < y_bound {
            if found.is_some() {
                return Err(Error::NonUniqueDecomposition(relation));
            }
            found = Some((i, rest / y));
        }
    }
    found.ok_or(Error::SymmetricInput)
}

/// Solves the matrix exponents of a non-symmetric `⟨a, b, c⟩` for the
/// given generator order.
///
/// `α+α'`, `β+β'`, `γ+γ'` are the least multiples of `a`, `b`, `c` lying in
/// the semigroup of the other two; the split of each sum comes from the
/// balance relations
///
/// ```text
/// (α+α')a = β'b + γc
/// (β+β')b = αa + γ'c
/// (γ+γ')c = α'a + βb
/// ```
pub fn solve_exponents(s: &Semigroup, order: [i64; 3]) -> Result<HerzogExponents> {
    check_order(s, order)?;
    if s.is_symmetric() {
        return Err(Error::SymmetricInput);
    }
    let [a, b, c] = order;
    let da = s.min_multiple_in_others(a)?;
    let db = s.min_multiple_in_others(b)?;
    let dc = s.min_multiple_in_others(c)?;

    let (beta_p, gamma) = unique_decomposition(
        dot(&[(da, a)])?,
        (b, db),
        (c, dc),
        "(alpha+alpha')a = beta' b + gamma c",
    )?;
    let (alpha, gamma_p) = unique_decomposition(
        dot(&[(db, b)])?,
        (a, da),
        (c, dc),
        "(beta+beta')b = alpha a + gamma' c",
    )?;
    let e = HerzogExponents {
        alpha,
        beta: db - beta_p,
        gamma,
        alpha_p: da - alpha,
        beta_p,
        gamma_p,
        order,
    };

    if gamma + gamma_p != dc {
        return Err(Error::Inconsistent(format!(
            "gamma + gamma' = {} but the least multiple of {c} is {dc}",
            gamma + gamma_p
        )));
    }
    if dot(&[(dc, c)])? != dot(&[(e.alpha_p, a), (e.beta, b)])? {
        return Err(Error::Inconsistent(format!(
            "(gamma+gamma')c = alpha' a + beta b fails for {order:?}"
        )));
    }
    check_reconstruction(&e, order)?;
    Ok(e)
}

/// `a = βγ + β'γ + β'γ'`, `b = γα + γ'α + γ'α'`, `c = αβ + α'β + α'β'`.
pub fn reconstruct_generators(e: &HerzogExponents) -> Result<[i64; 3]> {
    Ok([
        dot(&[
            (e.beta, e.gamma),
            (e.beta_p, e.gamma),
            (e.beta_p, e.gamma_p),
        ])?,
        dot(&[
            (e.gamma, e.alpha),
            (e.gamma_p, e.alpha),
            (e.gamma_p, e.alpha_p),
        ])?,
        dot(&[
            (e.alpha, e.beta),
            (e.alpha_p, e.beta),
            (e.alpha_p, e.beta_p),
        ])?,
    ])
}

fn check_reconstruction(e: &HerzogExponents, gens: [i64; 3]) -> Result<()> {
    let rebuilt = reconstruct_generators(e)?;
    if rebuilt != gens {
        return Err(Error::Inconsistent(format!(
            "exponents {:?} reconstruct {rebuilt:?}, not {gens:?}",
            e.as_tuple()
        )));
    }
    Ok(())
}

fn branch_of(e: &HerzogExponents, [a, b, _]: [i64; 3]) -> Result<Branch> {
    let lhs = dot(&[(e.beta_p, b)])?;
    let rhs = dot(&[(e.alpha, a)])?;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => Ok(Branch::PrimedLarger),
        std::cmp::Ordering::Less => Ok(Branch::UnprimedLarger),
        std::cmp::Ordering::Equal => Err(Error::DegenerateBranch),
    }
}

pub fn pf_from_exponents(e: &HerzogExponents, gens: [i64; 3]) -> Result<PfData> {
    check_reconstruction(e, gens)?;
    let g = gcd_all(&gens);
    if g != 1 {
        return Err(Error::NotNumerical(g));
    }
    let [a, b, c] = gens;
    let x = dot(&[(a, 1), (b, 1), (c, 1)])?;
    let tail = dot(&[(e.gamma + e.gamma_p, c), (-1, x)])?;
    let f = dot(&[(e.alpha, a), (1, tail)])?;
    let f_prime = dot(&[(e.beta_p, b), (1, tail)])?;
    Ok(PfData {
        f,
        f_prime,
        frobenius: f.max(f_prime),
        branch: branch_of(e, gens)?,
    })
}

/// `2g - (F + 1)`: `αβγ` when `β'b > αa`, `α'β'γ'` when `β'b < αa`.
pub fn genus_gap(e: &HerzogExponents, gens: [i64; 3]) -> Result<i64> {
    check_reconstruction(e, gens)?;
    match branch_of(e, gens)? {
        Branch::PrimedLarger => e.unprimed_product(),
        Branch::UnprimedLarger => e.primed_product(),
    }
}

/// Solves the exponents for `order`, switching to `(a, c, b)` if needed so
/// that the result satisfies `f' > f`.
pub fn lemma_orientation(s: &Semigroup, order: [i64; 3]) -> Result<HerzogExponents> {
    let e = solve_exponents(s, order)?;
    match branch_of(&e, order)? {
        Branch::PrimedLarger => Ok(e),
        Branch::UnprimedLarger => {
            let [a, b, c] = order;
            solve_exponents(s, [a, c, b])
        }
    }
}

fn lemma_shift(s: &Semigroup, e: &HerzogExponents) -> Result<i64> {
    check_order(s, e.order)?;
    let pf = pf_from_exponents(e, e.order)?;
    if pf.branch != Branch::PrimedLarger {
        return Err(Error::BranchMismatch);
    }
    Ok(pf.f_prime - pf.f)
}

/// `#{h ∈ H : f' - f + h ∉ H}` by direct enumeration. Equals `αβγ`.
pub fn lemma_card_count(s: &Semigroup, e: &HerzogExponents) -> Result<i64> {
    let shift = lemma_shift(s, e)?;
    // f' - f + h > F for h > F - shift, so nothing past F contributes.
    let count = (0..=s.frobenius())
        .filter(|&h| s.contains(h) && !s.contains(shift + h))
        .count();
    Ok(count as i64)
}

/// Box prediction: `f' - f + pa + qb + rc ∉ H` iff `p < α`, `q < β`, `r < γ`.
pub fn box_predicts_gap(e: &HerzogExponents, p: i64, q: i64, r: i64) -> bool {
    p < e.alpha && q < e.beta && r < e.gamma
}

/// Whether `f' - f + pa + qb + rc` is a gap, by membership test.
pub fn shifted_is_gap(s: &Semigroup, e: &HerzogExponents, p: i64, q: i64, r: i64) -> Result<bool> {
    let shift = lemma_shift(s, e)?;
    let [a, b, c] = e.order;
    let x = dot(&[(1, shift), (p, a), (q, b), (r, c)])?;
    Ok(!s.contains(x))
}

/// `H` is pseudo-symmetric iff the branch-selected product is 1.
pub fn is_pseudo_symmetric_by_matrix(e: &HerzogExponents, gens: [i64; 3]) -> Result<bool> {
    let g = gcd_all(&gens);
    if g != 1 {
        return Err(Error::NotNumerical(g));
    }
    Ok(genus_gap(e, gens)? == 1)
}
