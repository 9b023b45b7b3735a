//! Brute-force reference computations. Nothing here touches the library's
//! Apéry machinery: membership comes from a plain dynamic-programming sieve.

#![allow(dead_code)]

/// `member[x]` for `0 <= x <= limit`.
pub fn sieve(gens: &[i64], limit: i64) -> Vec<bool> {
    let limit = limit.max(0) as usize;
    let mut member = vec![false; limit + 1];
    member[0] = true;
    for x in 1..=limit {
        member[x] = gens
            .iter()
            .any(|&g| (g as usize) <= x && member[x - g as usize]);
    }
    member
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Brute {
    pub member: Vec<bool>,
    pub frobenius: i64,
    pub genus: i64,
    pub gaps: Vec<i64>,
    pub pf: Vec<i64>,
}

impl Brute {
    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && (x as usize >= self.member.len() || self.member[x as usize])
    }

    /// For every integer a: a ∈ H or F - a ∈ H.
    pub fn symmetric_by_definition(&self) -> bool {
        let f = self.frobenius;
        f.rem_euclid(2) == 1 && (0..=f).all(|a| self.contains(a) || self.contains(f - a))
    }

    /// For every integer a ≠ F/2: a ∈ H or F - a ∈ H.
    pub fn pseudo_symmetric_by_definition(&self) -> bool {
        let f = self.frobenius;
        f.rem_euclid(2) == 0
            && (0..=f)
                .filter(|&a| 2 * a != f)
                .all(|a| self.contains(a) || self.contains(f - a))
    }
}

/// Invariants of `⟨gens⟩` (gcd 1) straight from the definitions.
pub fn brute(gens: &[i64]) -> Brute {
    let lo = *gens.iter().min().unwrap();
    let hi = *gens.iter().max().unwrap();
    // F <= (lo - 1)(hi - 1) - 1; leave room for the PF checks above F.
    let limit = 2 * lo * hi + hi + 2;
    let member = sieve(gens, limit);
    let gaps: Vec<i64> = (1..=limit).filter(|&x| !member[x as usize]).collect();
    let frobenius = gaps.last().copied().unwrap_or(-1);
    let elements: Vec<i64> = (1..=frobenius + 1)
        .filter(|&x| member[x as usize])
        .collect();
    let pf = gaps
        .iter()
        .copied()
        .filter(|&x| {
            elements
                .iter()
                .all(|&s| x + s > frobenius || member[(x + s) as usize])
        })
        .collect();
    Brute {
        genus: gaps.len() as i64,
        member,
        frobenius,
        gaps,
        pf,
    }
}

/// Least k >= 1 with k·g in the monoid generated by `others`.
pub fn min_multiple(g: i64, others: &[i64]) -> i64 {
    let mut k = 1;
    loop {
        let member = sieve(others, k * g);
        if member[(k * g) as usize] {
            return k;
        }
        k += 1;
    }
}

/// Whether `gens` (ascending, distinct) is a minimal generating system.
pub fn is_minimal(gens: &[i64]) -> bool {
    gens.iter().enumerate().all(|(i, &g)| {
        let others: Vec<i64> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .collect();
        !sieve(&others, g)[g as usize]
    })
}

/// Coprime minimal triples a < b < c <= bound.
pub fn minimal_triples(bound: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in 2..=bound {
        for b in a + 1..=bound {
            if b % a == 0 {
                continue;
            }
            let ab = sieve(&[a, b], bound);
            for c in b + 1..=bound {
                if gcd(gcd(a, b), c) == 1 && !ab[c as usize] {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// All pseudo-symmetric ⟨a, b, c⟩ (a < b < c, minimal) grouped by even
/// Frobenius number f <= max_f, searching a < b < c <= 2·max_f + 1.
pub fn pseudo_symmetric_triples_by_f(max_f: i64) -> Vec<Vec<[i64; 3]>> {
    let limit = 2 * max_f + 1;
    let len = limit as usize + 1;
    let mut by_f = vec![Vec::new(); max_f as usize + 1];
    let mut with_c = vec![false; len];
    for a in 2..=limit {
        for b in a + 1..=limit {
            if b % a == 0 {
                continue;
            }
            let ab = sieve(&[a, b], limit);
            for c in b + 1..=limit {
                if ab[c as usize] {
                    continue;
                }
                let cu = c as usize;
                for x in 0..len {
                    with_c[x] = ab[x] || (x >= cu && with_c[x - cu]);
                }
                let Some(f) = (0..len).rev().find(|&x| !with_c[x]) else {
                    continue;
                };
                let f = f as i64;
                // F = f needs f+1 .. f+a inside the sieve; any true F <= max_f
                // satisfies f + a <= 2f + 1 <= limit.
                if f > max_f || f + a > limit || f % 2 != 0 {
                    continue;
                }
                let genus = with_c[..=f as usize].iter().filter(|&&m| !m).count() as i64;
                if 2 * genus == f + 2 {
                    by_f[f as usize].push([a, b, c]);
                }
            }
        }
    }
    by_f
}
