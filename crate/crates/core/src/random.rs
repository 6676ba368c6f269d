//! Seeded random monomial ideals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::{divides_slice, Exponent, MonomialIdeal, Multidegree};
use crate::simplicial::MAX_VERTICES;

const ATTEMPTS_PER_GENERATOR: usize = 10_000;
const RESTARTS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchSpec {
    pub vars: usize,
    pub gens: usize,
    pub max_exp: Exponent,
    pub seed: u64,
    /// No two generators share a nonzero exponent in any coordinate.
    pub generic: bool,
    pub repetitions: usize,
}

impl Default for BenchSpec {
    fn default() -> Self {
        BenchSpec { vars: 10, gens: 40, max_exp: 30, seed: 1, generic: true, repetitions: 1 }
    }
}

impl BenchSpec {
    pub fn validate(&self) -> Result<()> {
        if self.vars == 0 || self.gens == 0 || self.max_exp == 0 {
            return Err(Error::InvalidInput("vars, gens and max-exp must be positive".into()));
        }
        if self.vars > MAX_VERTICES {
            return Err(Error::Scale(format!("at most {MAX_VERTICES} variables are supported")));
        }
        let distinct = self.vars as u64 * self.max_exp as u64;
        if self.generic && self.gens as u64 > distinct {
            return Err(Error::Infeasible(format!(
                "{} generic generators need more than {} distinct exponents",
                self.gens, distinct
            )));
        }
        if !self.generic && self.vars == 1 && self.gens > 1 {
            return Err(Error::Infeasible("one variable admits a single minimal generator".into()));
        }
        Ok(())
    }
}

/// `spec.gens` pairwise non-dividing generators: each on a uniformly chosen
/// nonempty support with exponents uniform in `1..=max_exp`. In generic
/// mode a coordinate only draws from values no earlier generator used there.
pub fn random_ideal(spec: &BenchSpec) -> Result<MonomialIdeal> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    // early choices can leave no room for the rest, so start over a few times
    for _ in 0..RESTARTS {
        if let Some(gens) = attempt(spec, &mut rng) {
            return MonomialIdeal::minimalize(gens.into_iter().map(Multidegree::new), spec.vars);
        }
    }
    Err(Error::Infeasible(format!(
        "no {} pairwise non-dividing generators found after {RESTARTS} restarts",
        spec.gens
    )))
}

fn attempt(spec: &BenchSpec, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<Exponent>>> {
    let n = spec.vars;
    let mut used = vec![vec![false; spec.max_exp as usize + 1]; n];
    let mut gens: Vec<Vec<Exponent>> = Vec::with_capacity(spec.gens);
    let mut misses = 0usize;
    'generate: while gens.len() < spec.gens {
        misses += 1;
        if misses > ATTEMPTS_PER_GENERATOR {
            return None;
        }
        let pattern: u64 = rng.gen_range(1..1u64 << n);
        let mut cand = vec![0; n];
        for (i, c) in cand.iter_mut().enumerate() {
            if pattern >> i & 1 == 0 {
                continue;
            }
            *c = if spec.generic {
                let free: Vec<Exponent> = (1..=spec.max_exp).filter(|&e| !used[i][e as usize]).collect();
                if free.is_empty() {
                    continue 'generate;
                }
                free[rng.gen_range(0..free.len())]
            } else {
                rng.gen_range(1..=spec.max_exp)
            };
        }
        if gens.iter().any(|g| divides_slice(g, &cand) || divides_slice(&cand, g)) {
            continue;
        }
        if spec.generic {
            for (i, &c) in cand.iter().enumerate() {
                used[i][c as usize] |= c > 0;
            }
        }
        gens.push(cand);
        misses = 0;
    }
    Some(gens)
}

/// Whether no two generators share a nonzero exponent in any coordinate.
pub fn is_generic(ideal: &MonomialIdeal) -> bool {
    (0..ideal.nvars()).all(|i| {
        let mut seen: Vec<Exponent> = ideal.generators().iter().map(|g| g.get(i)).filter(|&e| e > 0).collect();
        let total = seen.len();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == total
    })
}

/// Small ideals for exhaustive cross-checks: `1..=max_vars` variables, up
/// to `max_gens` raw generators with exponents in `0..=max_exp`.
pub fn small_corpus(seed: u64, count: usize, max_vars: usize, max_gens: usize, max_exp: Exponent) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_vars);
            let r = rng.gen_range(1..=max_gens);
            let raw = (0..r).map(|_| loop {
                let v: Vec<Exponent> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
                if v.iter().any(|&e| e > 0) {
                    break Multidegree::new(v);
                }
            });
            MonomialIdeal::minimalize(raw.collect::<Vec<_>>(), n).expect("lengths match")
        })
        .collect()
}

/// Ideals with exactly `n` variables, as [`small_corpus`] otherwise.
pub fn corpus_with_vars(seed: u64, count: usize, n: usize, max_gens: usize, max_exp: Exponent) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = rng.gen_range(1..=max_gens);
            let raw: Vec<Multidegree> = (0..r)
                .map(|_| loop {
                    let v: Vec<Exponent> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
                    if v.iter().any(|&e| e > 0) {
                        break Multidegree::new(v);
                    }
                })
                .collect();
            MonomialIdeal::minimalize(raw, n).expect("lengths match")
        })
        .collect()
}
