//! Ranking permutations: conversion of paired samples into the
//! rank-matching permutation, and the two reflections (reverse, inverse)
//! used by the pattern-counting algorithm.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
///
/// This is the complete distribution-free summary of a paired sample:
/// entry `pi(rank x_i) = rank y_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    entries: Vec<u32>,
}

impl Permutation {
    /// Validates that `entries` is a bijection on `{1..n}` with `n >= 1`.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::NotAPermutation(0));
        }
        let mut seen = vec![false; n];
        for &v in &entries {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Self { entries })
    }

    /// Builds without validation. The caller must guarantee a bijection.
    pub(crate) fn from_raw(entries: Vec<u32>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Self { entries }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation size must be positive");
        Self {
            entries: (1..=n as u32).collect(),
        }
    }

    /// A uniformly random permutation.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut entries: Vec<u32> = (1..=n as u32).collect();
        entries.shuffle(rng);
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 by construction
    }

    /// One-based lookup: `pi(i)`.
    pub fn get(&self, i: usize) -> u32 {
        self.entries[i - 1]
    }

    /// One-line notation, one-based values.
    pub fn as_slice(&self) -> &[u32] {
        &self.entries
    }

    /// The inverse permutation: `q(p(i)) = i`.
    pub fn inverse(&self) -> Self {
        let n = self.entries.len();
        let mut inv = vec![0u32; n];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Self { entries: inv }
    }

    /// The reversed permutation: `q(i) = p(n+1-i)`.
    pub fn reverse(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Self { entries }
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// How tied sample values are resolved during ranking.
///
/// Ties violate the continuity assumption behind the distribution-free
/// null, so the default is to reject them. `Random` breaks ties with a
/// uniformly random strict order, deterministic in the seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TiePolicy {
    Error,
    Random { seed: u64 },
}

/// Computes the ranking permutation of a paired sample:
/// `pi(rank x_i) = rank y_i`.
///
/// Non-finite values are rejected; deleting missing data is the caller's
/// job.
pub fn rank_permutation(xs: &[f64], ys: &[f64], policy: TiePolicy) -> Result<Permutation> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    let n = xs.len();
    if n == 0 {
        return Err(Error::SampleTooSmall { n: 0, min: 1 });
    }
    for (i, v) in xs.iter().chain(ys.iter()).enumerate() {
        if !v.is_finite() {
            return Err(Error::NonFiniteValue { index: i % n });
        }
    }
    let (rx, ry) = match policy {
        TiePolicy::Error => (ranks_strict(xs)?, ranks_strict(ys)?),
        TiePolicy::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (ranks_random(xs, &mut rng), ranks_random(ys, &mut rng))
        }
    };
    let mut entries = vec![0u32; n];
    for i in 0..n {
        entries[rx[i] as usize - 1] = ry[i];
    }
    Ok(Permutation::from_raw(entries))
}

/// Dense ranks 1..n; errors on the first tied pair (original indices).
fn ranks_strict(vals: &[f64]) -> Result<Vec<u32>> {
    let mut idx: Vec<usize> = (0..vals.len()).collect();
    idx.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap());
    for w in idx.windows(2) {
        if vals[w[0]] == vals[w[1]] {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(Error::TiesPresent { first: a, second: b });
        }
    }
    let mut ranks = vec![0u32; vals.len()];
    for (r, &i) in idx.iter().enumerate() {
        ranks[i] = r as u32 + 1;
    }
    Ok(ranks)
}

/// Dense ranks with ties broken by per-index random keys.
fn ranks_random<R: Rng>(vals: &[f64], rng: &mut R) -> Vec<u32> {
    let keys: Vec<u64> = (0..vals.len()).map(|_| rng.random()).collect();
    let mut idx: Vec<usize> = (0..vals.len()).collect();
    idx.sort_by(|&a, &b| {
        vals[a]
            .partial_cmp(&vals[b])
            .unwrap()
            .then(keys[a].cmp(&keys[b]))
    });
    let mut ranks = vec![0u32; vals.len()];
    for (r, &i) in idx.iter().enumerate() {
        ranks[i] = r as u32 + 1;
    }
    ranks
}
