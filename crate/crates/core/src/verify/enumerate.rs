use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::graph::Graph;
use crate::invariants::diameter;

/// Largest order enumerated exhaustively (`2^21` labeled graphs).
pub const EXHAUSTIVE_LIMIT: usize = 7;
/// Orders accepted by the sampler.
pub const SAMPLE_RANGE: RangeInclusive<usize> = 8..=16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationFilter {
    pub n: usize,
    pub connected_only: bool,
    pub min_degree_at_least: Option<usize>,
    pub diameter_equals: Option<usize>,
    /// Drop graphs isomorphic to `kC₅`.
    pub exclude_k_c5: bool,
}

impl EnumerationFilter {
    pub fn new(n: usize) -> Self {
        EnumerationFilter {
            n,
            connected_only: false,
            min_degree_at_least: None,
            diameter_equals: None,
            exclude_k_c5: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn min_degree(mut self, k: usize) -> Self {
        self.min_degree_at_least = Some(k);
        self
    }

    pub fn diameter(mut self, d: usize) -> Self {
        self.diameter_equals = Some(d);
        self
    }

    pub fn without_k_c5(mut self) -> Self {
        self.exclude_k_c5 = true;
        self
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        if g.order() != self.n {
            return false;
        }
        if self.min_degree_at_least.is_some_and(|k| g.order() > 0 && g.min_degree() < k) {
            return false;
        }
        if self.connected_only && !g.is_connected() {
            return false;
        }
        if self.exclude_k_c5 && g.is_k_c5() {
            return false;
        }
        if let Some(d) = self.diameter_equals {
            if diameter(g) != Some(d) {
                return false;
            }
        }
        true
    }
}

pub(crate) fn mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Every labeled graph on `filter.n <= 7` vertices that passes the filter,
/// in increasing edge-mask order (graph6 bit order).
pub fn enumerate_graphs(filter: &EnumerationFilter) -> Result<impl Iterator<Item = Graph> + '_, VerifyError> {
    if filter.n > EXHAUSTIVE_LIMIT {
        return Err(VerifyError::TooLarge {
            n: filter.n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    let n = filter.n;
    Ok((0..mask_count(n))
        .map(move |m| Graph::from_edge_mask(n, m))
        .filter(move |g| filter.accepts(g)))
}

/// Draws `count` graphs `G(n, 1/2)` from a ChaCha8 stream seeded with
/// `seed` and keeps those passing the filter. Pairs are drawn in graph6 bit
/// order, so a seed fixes the stream.
pub fn sample_graphs(
    n: usize,
    count: usize,
    seed: u64,
    filter: &EnumerationFilter,
) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    if !SAMPLE_RANGE.contains(&n) {
        return Err(VerifyError::SampleRange {
            n,
            min: *SAMPLE_RANGE.start(),
            max: *SAMPLE_RANGE.end(),
        });
    }
    let mut filter = filter.clone();
    filter.n = n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(move |_| {
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.random_bool(0.5) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).expect("valid pairs")
        })
        .filter(move |g| filter.accepts(g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        assert_eq!(enumerate_graphs(&EnumerationFilter::new(3).connected()).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(&EnumerationFilter::new(4).connected()).unwrap().count(), 38);
        assert_eq!(enumerate_graphs(&EnumerationFilter::new(5).connected()).unwrap().count(), 728);
        assert_eq!(enumerate_graphs(&EnumerationFilter::new(0)).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(&EnumerationFilter::new(4)).unwrap().count(), 64);
    }

    #[test]
    fn k_c5_exclusion() {
        let with = enumerate_graphs(&EnumerationFilter::new(5).min_degree(2)).unwrap().count();
        let without = enumerate_graphs(&EnumerationFilter::new(5).min_degree(2).without_k_c5())
            .unwrap()
            .count();
        assert_eq!(with - without, 12);
    }

    #[test]
    fn limits() {
        assert!(enumerate_graphs(&EnumerationFilter::new(8)).is_err());
        let f = EnumerationFilter::new(7);
        assert!(sample_graphs(7, 1, 0, &f).is_err());
        assert!(sample_graphs(17, 1, 0, &f).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let f = EnumerationFilter::new(10);
        let a: Vec<Graph> = sample_graphs(10, 1000, 1, &f).unwrap().collect();
        let b: Vec<Graph> = sample_graphs(10, 1000, 1, &f).unwrap().collect();
        assert_eq!(a.len(), 1000);
        assert_eq!(a, b);
        let c: Vec<Graph> = sample_graphs(10, 10, 2, &f).unwrap().collect();
        assert_ne!(a[..10], c[..]);
    }

    #[test]
    fn sampling_filters() {
        let f = EnumerationFilter::new(9).diameter(3);
        let kept: Vec<Graph> = sample_graphs(9, 2000, 5, &f).unwrap().collect();
        assert!(kept.iter().all(|g| diameter(g) == Some(3)));
        // degree 9 is impossible on 9 vertices
        let none = EnumerationFilter::new(9).min_degree(9);
        assert_eq!(sample_graphs(9, 100, 5, &none).unwrap().count(), 0);
    }
}
