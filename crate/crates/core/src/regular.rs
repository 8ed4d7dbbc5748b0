//! Seeded random regular graphs from the configuration (pairing) model.
//!
//! Each attempt pairs up `n·d` half-edges uniformly at random and is
//! rejected whole if it produces a loop or a repeated edge, so accepted
//! samples are uniform over simple `d`-regular graphs on `n` labelled
//! vertices. The generator is ChaCha8 seeded with the 64-bit seed; the
//! seed-to-graph mapping is stable within this crate version.

use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Attempts before [`sample_regular`] gives up.
pub const DEFAULT_MAX_ATTEMPTS: u64 = 100_000;

/// A pair `(n, d)` for which a `d`-regular `n`-vertex graph exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GoodPair {
    n: usize,
    d: usize,
}

impl GoodPair {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if !is_good(n, d) {
            return Err(Error::invalid(format!(
                "({n}, {d}) is not good: need n > d and n*d even"
            )));
        }
        Ok(GoodPair { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }
}

/// `n > d` and `n·d` even.
pub fn is_good(n: usize, d: usize) -> bool {
    n > d && (n * d).is_multiple_of(2)
}

/// A uniformly random simple `d`-regular graph on `n` vertices.
pub fn sample_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    sample_regular_with(GoodPair::new(n, d)?, seed, DEFAULT_MAX_ATTEMPTS)
}

pub fn sample_regular_with(pair: GoodPair, seed: u64, max_attempts: u64) -> Result<Graph> {
    let GoodPair { n, d } = pair;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n * d).map(|p| p / d).collect();
    'attempt: for _ in 0..max_attempts {
        points.shuffle(&mut rng);
        let mut g = Graph::empty(n);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.add_edge(u, v);
        }
        return Ok(g);
    }
    Err(Error::ResourceExhausted {
        what: "configuration model attempt",
        limit: max_attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn good_pairs() {
        assert!(is_good(5, 2));
        assert!(!is_good(5, 3));
        assert!(!is_good(3, 3));
        assert!(GoodPair::new(3, 3).is_err());
    }

    #[test]
    fn complete_graph_is_the_only_cubic_graph_on_four_vertices() {
        for seed in 0..5 {
            let g = sample_regular(4, 3, seed).unwrap();
            assert_eq!(g.size(), 6);
        }
    }

    #[test]
    fn two_regular_samples_are_cycle_unions() {
        let g = sample_regular(6, 2, 1).unwrap();
        let profile = g.degree_profile().unwrap();
        assert_eq!((profile.min_degree, profile.max_degree, profile.is_regular), (2, 2, true));
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(sample_regular(12, 3, 99).unwrap(), sample_regular(12, 3, 99).unwrap());
    }

    #[test]
    fn rejection_budget() {
        assert!(matches!(
            sample_regular_with(GoodPair::new(10, 3).unwrap(), 0, 0),
            Err(Error::ResourceExhausted { .. })
        ));
        assert!(sample_regular(5, 3, 0).is_err());
    }
}
