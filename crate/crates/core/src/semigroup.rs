//! Numerical semigroups and their basic invariants.
//!
//! Everything here is computed directly from an Apéry table, so these
//! routines serve as the reference that the closed-form modules are checked
//! against.
//!
//! A semigroup with Apéry table `w` modulo its multiplicity `m` has
//!
//! * `x ∈ H` iff `x >= w[x mod m]`,
//! * Frobenius number `max(w) - m`,
//! * genus `Σ floor(w[r] / m)`,
//! * pseudo-Frobenius numbers `w - m` for the `w` maximal in the Apéry set
//!   under `u ≼ v ⇔ v - u ∈ H`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest modulus for which an Apéry table is materialised.
pub const MAX_MODULUS: i64 = 1 << 28;

const UNREACHABLE: i64 = i64::MAX;

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |acc, &v| gcd(acc, v))
}

/// Least reachable element per residue class of a finitely generated
/// submonoid of ℕ. Classes the generators cannot reach stay `UNREACHABLE`,
/// so this also works for generator sets with gcd > 1.
#[derive(Debug, Clone)]
pub(crate) struct ResidueTable {
    modulus: i64,
    entries: Vec<i64>,
}

impl ResidueTable {
    pub(crate) fn new(modulus: i64) -> Result<Self> {
        if modulus < 1 {
            return Err(Error::NonPositive(modulus));
        }
        if modulus > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(modulus));
        }
        let mut entries = vec![UNREACHABLE; modulus as usize];
        entries[0] = 0;
        Ok(Self { modulus, entries })
    }

    pub(crate) fn with_generators(modulus: i64, gens: &[i64]) -> Result<Self> {
        let mut table = Self::new(modulus)?;
        for &g in gens {
            table.add_generator(g)?;
        }
        Ok(table)
    }

    /// Round-robin relaxation: for each cycle of `+g (mod m)` start at the
    /// cycle minimum and walk once around it. One walk per cycle is exact.
    pub(crate) fn add_generator(&mut self, g: i64) -> Result<()> {
        if g < 1 {
            return Err(Error::NonPositive(g));
        }
        let m = self.modulus as usize;
        let step = (g % self.modulus) as usize;
        if step == 0 {
            return Ok(());
        }
        let d = gcd(self.modulus, g) as usize;
        let cycle_len = m / d;
        for r in 0..d {
            let start = (r..m)
                .step_by(d)
                .min_by_key(|&q| self.entries[q])
                .expect("residue class is nonempty");
            if self.entries[start] == UNREACHABLE {
                continue;
            }
            let mut p = start;
            for _ in 1..cycle_len {
                let next = (p + step) % m;
                let cand = self.entries[p].checked_add(g).ok_or(Error::Overflow)?;
                if cand < self.entries[next] {
                    self.entries[next] = cand;
                }
                p = next;
            }
        }
        Ok(())
    }

    pub(crate) fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.entries[(x % self.modulus) as usize]
    }
}

/// Least element of `H` in each residue class modulo `modulus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    modulus: i64,
    entries: Vec<i64>,
}

impl AperyTable {
    fn from_residues(table: ResidueTable) -> Result<Self> {
        if table.entries.contains(&UNREACHABLE) {
            return Err(Error::Inconsistent(
                "Apery table has an unreachable residue class".into(),
            ));
        }
        Ok(Self {
            modulus: table.modulus,
            entries: table.entries,
        })
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// `entries()[r]` is the least element of `H` congruent to `r`.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.entries[(x % self.modulus) as usize]
    }

    pub fn max(&self) -> i64 {
        *self.entries.iter().max().expect("modulus >= 1")
    }
}

/// Pseudo-Frobenius numbers of a semigroup, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfSet {
    pub values: Vec<i64>,
}

impl PfSet {
    pub fn new(mut values: Vec<i64>) -> Self {
        values.sort_unstable();
        values.dedup();
        Self { values }
    }

    /// The type `t(H)`.
    pub fn semigroup_type(&self) -> usize {
        self.values.len()
    }
}

/// A numerical semigroup, stored as its generators and the Apéry table
/// modulo the multiplicity. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semigroup {
    generators: Vec<i64>,
    minimal: Vec<i64>,
    apery: AperyTable,
}

impl Semigroup {
    /// Builds `⟨gens⟩`, discarding redundant generators.
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositive(bad));
        }
        let g = gcd_all(gens);
        if g != 1 {
            return Err(Error::NotNumerical(g));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        // A generator is redundant iff it lies in the monoid of the smaller
        // kept ones, so a single ascending pass finds the minimal system.
        let mut table = ResidueTable::new(sorted[0])?;
        let mut minimal = vec![sorted[0]];
        for &g in &sorted[1..] {
            if !table.contains(g) {
                table.add_generator(g)?;
                minimal.push(g);
            }
        }
        Ok(Self {
            generators: gens.to_vec(),
            minimal,
            apery: AperyTable::from_residues(table)?,
        })
    }

    /// Generators exactly as supplied.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// The minimal generating system, ascending.
    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal.len()
    }

    pub fn multiplicity(&self) -> i64 {
        self.minimal[0]
    }

    pub fn is_whole(&self) -> bool {
        self.multiplicity() == 1
    }

    /// The cached Apéry table modulo the multiplicity.
    pub fn apery_table(&self) -> &AperyTable {
        &self.apery
    }

    pub fn contains(&self, x: i64) -> bool {
        self.apery.contains(x)
    }

    /// Apéry table with respect to an arbitrary nonzero element `m`.
    pub fn apery(&self, m: i64) -> Result<AperyTable> {
        if m < 1 || !self.contains(m) {
            return Err(Error::NotMember(m));
        }
        if m == self.apery.modulus {
            return Ok(self.apery.clone());
        }
        AperyTable::from_residues(ResidueTable::with_generators(m, &self.minimal)?)
    }

    /// Largest integer not in `H`; `-1` for `H = ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.apery.max() - self.apery.modulus
    }

    pub fn genus(&self) -> i64 {
        let m = self.apery.modulus;
        self.apery.entries.iter().map(|w| w / m).sum()
    }

    /// All positive integers outside `H`, ascending.
    pub fn gaps(&self) -> Vec<i64> {
        let m = self.apery.modulus;
        let mut gaps: Vec<i64> = self
            .apery
            .entries
            .iter()
            .enumerate()
            .flat_map(|(r, &w)| (r as i64..w).step_by(m as usize))
            .collect();
        gaps.sort_unstable();
        gaps
    }

    pub fn pseudo_frobenius(&self) -> Result<PfSet> {
        if self.is_whole() {
            return Err(Error::WholeSemigroup);
        }
        let m = self.apery.modulus;
        let mut values = Vec::new();
        for &w in &self.apery.entries {
            let mut maximal = true;
            for &g in &self.minimal[1..] {
                let shifted = w.checked_add(g).ok_or(Error::Overflow)? - m;
                if !self.contains(shifted) {
                    maximal = false;
                    break;
                }
            }
            if maximal {
                values.push(w - m);
            }
        }
        Ok(PfSet::new(values))
    }

    /// `2g = F + 1`. True for `ℕ` under the `F = -1` convention.
    pub fn is_symmetric(&self) -> bool {
        2 * self.genus() as i128 == self.frobenius() as i128 + 1
    }

    /// `F` even and `2g = F + 2`.
    pub fn is_pseudo_symmetric(&self) -> bool {
        let f = self.frobenius();
        f.rem_euclid(2) == 0 && 2 * self.genus() as i128 == f as i128 + 2
    }

    /// Least `k >= 1` with `k * g` in the monoid generated by the other
    /// minimal generators.
    pub fn min_multiple_in_others(&self, g: i64) -> Result<i64> {
        if !self.minimal.contains(&g) {
            return Err(Error::NotAGenerator(g));
        }
        let others: Vec<i64> = self.minimal.iter().copied().filter(|&x| x != g).collect();
        let Some(&modulus) = others.first() else {
            return Err(Error::TooFewGenerators(self.minimal.len()));
        };
        let table = ResidueTable::with_generators(modulus, &others)?;
        // k = modulus always works, so the loop terminates.
        for k in 1..=modulus {
            if table.contains(k.checked_mul(g).ok_or(Error::Overflow)?) {
                return Ok(k);
            }
        }
        unreachable!("modulus * g lies in the monoid of the others")
    }
}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.minimal.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> Semigroup {
        Semigroup::new(gens).unwrap()
    }

    #[test]
    fn minimal_generators() {
        assert_eq!(sg(&[4, 11, 13]).minimal_generators(), &[4, 11, 13]);
        assert_eq!(sg(&[1]).minimal_generators(), &[1]);
        assert_eq!(sg(&[2, 3, 4]).minimal_generators(), &[2, 3]);
        assert_eq!(sg(&[13, 4, 11, 4]).minimal_generators(), &[4, 11, 13]);
        assert_eq!(sg(&[13, 4, 11]).generators(), &[13, 4, 11]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Semigroup::new(&[2, 4]), Err(Error::NotNumerical(2)));
        assert_eq!(Semigroup::new(&[]), Err(Error::EmptyInput));
        assert_eq!(Semigroup::new(&[0, 1]), Err(Error::NonPositive(0)));
        assert_eq!(Semigroup::new(&[-3, 5]), Err(Error::NonPositive(-3)));
        assert_eq!(
            Semigroup::new(&[MAX_MODULUS + 1, MAX_MODULUS + 2]),
            Err(Error::ModulusTooLarge(MAX_MODULUS + 1))
        );
    }

    #[test]
    fn membership() {
        let s = sg(&[3, 5, 7]);
        assert!(!s.contains(4));
        assert!(s.contains(12));
        assert!(s.contains(0));
        assert!(!s.contains(-3));
        assert!(sg(&[1]).contains(0));
    }

    #[test]
    fn apery_tables() {
        assert_eq!(sg(&[3, 5, 7]).apery(3).unwrap().entries(), &[0, 7, 5]);
        assert_eq!(sg(&[1]).apery(1).unwrap().entries(), &[0]);
        assert_eq!(
            sg(&[4, 11, 13]).apery(4).unwrap().entries(),
            &[0, 13, 22, 11]
        );
        assert_eq!(sg(&[3, 5, 7]).apery(5).unwrap().entries(), &[0, 6, 7, 3, 9]);
        assert_eq!(sg(&[3, 5, 7]).apery(4), Err(Error::NotMember(4)));
        assert_eq!(sg(&[3, 5, 7]).apery(0), Err(Error::NotMember(0)));
    }

    #[test]
    fn frobenius_genus_gaps() {
        let cases: &[(&[i64], i64, i64)] = &[
            (&[4, 11, 13], 18, 10),
            (&[7, 11, 31], 48, 25),
            (&[1], -1, 0),
            (&[3, 5, 7], 4, 3),
        ];
        for &(gens, f, g) in cases {
            let s = sg(gens);
            assert_eq!(s.frobenius(), f, "{s}");
            assert_eq!(s.genus(), g, "{s}");
            assert_eq!(s.gaps().len() as i64, g);
        }
        assert_eq!(sg(&[3, 5, 7]).gaps(), vec![1, 2, 4]);
        assert!(sg(&[1]).gaps().is_empty());
        assert_eq!(sg(&[3, 8, 13]).gaps(), vec![1, 2, 4, 5, 7, 10]);
    }

    #[test]
    fn pseudo_frobenius_sets() {
        let pf = sg(&[3, 5, 7]).pseudo_frobenius().unwrap();
        assert_eq!(pf.values, vec![2, 4]);
        assert_eq!(pf.semigroup_type(), 2);
        assert_eq!(
            sg(&[4, 11, 13]).pseudo_frobenius().unwrap().values,
            vec![9, 18]
        );
        let pf = sg(&[2, 3]).pseudo_frobenius().unwrap();
        assert_eq!((pf.values.clone(), pf.semigroup_type()), (vec![1], 1));
        assert_eq!(sg(&[1]).pseudo_frobenius(), Err(Error::WholeSemigroup));
    }

    #[test]
    fn symmetry_predicates() {
        assert!(sg(&[2, 3]).is_symmetric());
        assert!(!sg(&[4, 11, 13]).is_symmetric());
        assert!(!sg(&[3, 5, 7]).is_symmetric());
        assert!(sg(&[4, 6, 9]).is_symmetric());
        assert!(sg(&[4, 11, 13]).is_pseudo_symmetric());
        assert!(!sg(&[2, 3]).is_pseudo_symmetric());
        assert!(sg(&[3, 5, 7]).is_pseudo_symmetric());
        assert!(sg(&[1]).is_symmetric());
        assert!(!sg(&[1]).is_pseudo_symmetric());
    }

    #[test]
    fn min_multiples() {
        let s = sg(&[3, 5, 7]);
        assert_eq!(s.min_multiple_in_others(3), Ok(4));
        assert_eq!(s.min_multiple_in_others(7), Ok(2));
        assert_eq!(s.min_multiple_in_others(4), Err(Error::NotAGenerator(4)));
        assert_eq!(sg(&[4, 11, 13]).min_multiple_in_others(4), Ok(6));
        // others generate <4, 6>, which has gcd 2
        assert_eq!(sg(&[4, 6, 9]).min_multiple_in_others(9), Ok(2));
        assert_eq!(
            sg(&[1]).min_multiple_in_others(1),
            Err(Error::TooFewGenerators(1))
        );
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(Semigroup::new(&[3, (1 << 62) + 1]), Err(Error::Overflow));
    }

    #[test]
    fn display() {
        assert_eq!(sg(&[13, 11, 4]).to_string(), "<4, 11, 13>");
    }

    #[test]
    fn send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<Semigroup>();
    }
}
