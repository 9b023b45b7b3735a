//! Pseudo-symmetric `⟨a, b, c⟩` with a prescribed Frobenius number `f`.
//!
//! Every such semigroup comes from a triple `(α, β, γ)` with
//! `αβγ = f/2 + 1` through
//!
//! ```text
//! a = βγ + γ + 1,   b = γα + α + 1,   c = αβ + β + 1
//! ```
//!
//! so classification is a walk over ordered factorisations of `f/2 + 1`,
//! with each candidate validated against the direct invariants.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{gcd_all, Semigroup};

fn require_even(f: i64) -> Result<()> {
    if f.rem_euclid(2) != 0 {
        return Err(Error::OddInput(f));
    }
    if f < 2 {
        return Err(Error::RangeError(format!(
            "Frobenius target {f} is below 2"
        )));
    }
    Ok(())
}

fn half_plus_one(f: i64) -> i64 {
    f / 2 + 1
}

/// Prime factorisation by trial division, ascending primes.
pub fn factorize(mut n: i64) -> Vec<(i64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// All positive divisors, ascending.
pub fn divisors(n: i64) -> Vec<i64> {
    let mut divs = vec![1];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Ordered triples `(α, β, γ)` with `αβγ = f/2 + 1`, lexicographic.
pub fn triples_for(f: i64) -> Result<Vec<[i64; 3]>> {
    require_even(f)?;
    let n = half_plus_one(f);
    let divs = divisors(n);
    let mut triples = Vec::new();
    for &alpha in &divs {
        let rest = n / alpha;
        for &beta in divs.iter().take_while(|&&d| d <= rest) {
            if rest % beta == 0 {
                triples.push([alpha, beta, rest / beta]);
            }
        }
    }
    Ok(triples)
}

pub fn construct_candidate([alpha, beta, gamma]: [i64; 3]) -> Result<[i64; 3]> {
    let formula = |x: i64, y: i64, z: i64| -> Option<i64> {
        x.checked_mul(y)?.checked_add(z)?.checked_add(1)
    };
    Ok([
        formula(beta, gamma, gamma).ok_or(Error::Overflow)?,
        formula(gamma, alpha, alpha).ok_or(Error::Overflow)?,
        formula(alpha, beta, beta).ok_or(Error::Overflow)?,
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Accepted,
    RejectedCommonFactor,
    RejectedNotMinimal,
    RejectedWrongFrobenius,
    DuplicateOrbit,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Accepted => "Accepted",
            Verdict::RejectedCommonFactor => "RejectedCommonFactor",
            Verdict::RejectedNotMinimal => "RejectedNotMinimal",
            Verdict::RejectedWrongFrobenius => "RejectedWrongFrobenius",
            Verdict::DuplicateOrbit => "DuplicateOrbit",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub target_f: i64,
    pub triple: [i64; 3],
    pub candidate: [i64; 3],
    pub verdict: Verdict,
    pub reason: String,
}

impl ClassificationRecord {
    /// The candidate generators, ascending.
    pub fn sorted_candidate(&self) -> [i64; 3] {
        let mut c = self.candidate;
        c.sort_unstable();
        c
    }
}

fn judge(f: i64, candidate: [i64; 3]) -> Result<(Verdict, String)> {
    let g = gcd_all(&candidate);
    if g > 1 {
        return Ok((
            Verdict::RejectedCommonFactor,
            format!("gcd of {candidate:?} is {g}"),
        ));
    }
    let s = Semigroup::new(&candidate)?;
    let mut sorted = candidate;
    sorted.sort_unstable();
    if s.minimal_generators() != sorted {
        return Ok((
            Verdict::RejectedNotMinimal,
            format!("minimal generators are {:?}", s.minimal_generators()),
        ));
    }
    let (frob, pseudo) = (s.frobenius(), s.is_pseudo_symmetric());
    if frob != f || !pseudo {
        return Ok((
            Verdict::RejectedWrongFrobenius,
            format!(
                "F = {frob}, genus = {}, pseudo-symmetric = {pseudo}",
                s.genus()
            ),
        ));
    }
    Ok((Verdict::Accepted, format!("F = {f}, genus = {}", s.genus())))
}

/// Every candidate for `f`, with exactly one `Accepted` record per
/// distinct semigroup.
pub fn classify_pseudo_symmetric(f: i64) -> Result<Vec<ClassificationRecord>> {
    let triples = triples_for(f)?;
    let mut seen = BTreeSet::new();
    let mut records = Vec::with_capacity(triples.len());
    for triple in triples {
        let candidate = construct_candidate(triple)?;
        let (mut verdict, mut reason) = judge(f, candidate)?;
        if verdict == Verdict::Accepted {
            let mut key = candidate;
            key.sort_unstable();
            if !seen.insert(key) {
                verdict = Verdict::DuplicateOrbit;
                reason = format!("{key:?} already accepted");
            }
        }
        records.push(ClassificationRecord {
            target_f: f,
            triple,
            candidate,
            verdict,
            reason,
        });
    }
    Ok(records)
}

/// Sorted generator sets of the accepted records, ascending.
pub fn accepted(records: &[ClassificationRecord]) -> Vec<[i64; 3]> {
    let mut out: Vec<[i64; 3]> = records
        .iter()
        .filter(|r| r.verdict == Verdict::Accepted)
        .map(ClassificationRecord::sorted_candidate)
        .collect();
    out.sort_unstable();
    out
}

/// For `12 | f`: whether `f/2 + 1` has a prime factor `≡ 2 (mod 3)`.
/// `false` rules out any pseudo-symmetric `⟨a, b, c⟩` with `F = f`.
pub fn prefilter_mult12(f: i64) -> Result<bool> {
    if f <= 0 || f % 12 != 0 {
        return Err(Error::NotMultipleOf12(f));
    }
    Ok(factorize(half_plus_one(f)).iter().any(|&(p, _)| p % 3 == 2))
}

/// Explicit pseudo-symmetric `⟨a, b, c⟩` with Frobenius number `f` when
/// `12 ∤ f`.
pub fn known_family(f: i64) -> Result<Option<[i64; 3]>> {
    require_even(f)?;
    let family = if f % 3 != 0 {
        Some([3, f / 2 + 3, f + 3])
    } else if f % 12 == 6 {
        Some([4, f / 2 + 2, f / 2 + 4])
    } else {
        None
    };
    Ok(family)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanEntry {
    pub f: i64,
    pub count: usize,
    pub semigroups: Vec<[i64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub range: [i64; 2],
    pub per_f: Vec<ScanEntry>,
    pub empties: Vec<i64>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ScanOptions {
    /// Only visit multiples of 12.
    pub mult12_only: bool,
    /// Run on the current thread.
    pub sequential: bool,
}

fn scan_one(f: i64) -> Result<ScanEntry> {
    if f % 12 == 0 && !prefilter_mult12(f)? {
        return Ok(ScanEntry {
            f,
            count: 0,
            semigroups: Vec::new(),
        });
    }
    let semigroups = accepted(&classify_pseudo_symmetric(f)?);
    Ok(ScanEntry {
        f,
        count: semigroups.len(),
        semigroups,
    })
}

pub fn scan(f_lo: i64, f_hi: i64) -> Result<ScanReport> {
    scan_with(f_lo, f_hi, ScanOptions::default())
}

/// Classifies every even `f` in `[f_lo, f_hi]`; entries ascend by `f`
/// whether or not the work runs in parallel.
pub fn scan_with(f_lo: i64, f_hi: i64, opts: ScanOptions) -> Result<ScanReport> {
    if f_lo < 2 || f_lo > f_hi || f_lo % 2 != 0 || f_hi % 2 != 0 {
        return Err(Error::RangeError(format!(
            "expected even bounds with 2 <= lo <= hi, got [{f_lo}, {f_hi}]"
        )));
    }
    let step = if opts.mult12_only { 12 } else { 2 };
    let first = if opts.mult12_only {
        (f_lo + 11) / 12 * 12
    } else {
        f_lo
    };
    let fs: Vec<i64> = (first..=f_hi).step_by(step).collect();
    let per_f = if opts.sequential {
        fs.into_iter().map(scan_one).collect::<Result<Vec<_>>>()?
    } else {
        fs.into_par_iter()
            .map(scan_one)
            .collect::<Result<Vec<_>>>()?
    };
    let empties = per_f.iter().filter(|e| e.count == 0).map(|e| e.f).collect();
    Ok(ScanReport {
        range: [f_lo, f_hi],
        per_f,
        empties,
    })
}
