//! Seeded random layouts and the randomized K5 refuter.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::geom::{Layout, Square};
use crate::graph::longest_monotone_subsequence;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    /// corners are drawn from `[0, extent)` on both axes
    pub extent: i64,
    /// largest denominator of a corner coordinate
    pub max_denominator: i64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig { extent: 6, max_denominator: 60 }
    }
}

fn random_coordinate<R: Rng + ?Sized>(cfg: &SamplerConfig, rng: &mut R) -> Rational {
    let d = rng.gen_range(1..=cfg.max_denominator) as i128;
    let num = rng.gen_range(0..cfg.extent as i128 * d);
    Rational::new(num, d)
}

/// A valid layout of `n` squares with ids `0..n`. Each corner is resampled
/// until its square clears the earlier ones.
pub fn random_layout<R: Rng + ?Sized>(n: usize, cfg: &SamplerConfig, rng: &mut R) -> Layout {
    let mut layout = Layout::new();
    for k in 0..n {
        loop {
            let s = Square::new(k.to_string(), random_coordinate(cfg, rng), random_coordinate(cfg, rng));
            if !layout.squares().iter().any(|o| o.interiors_overlap(&s)) {
                layout.push(s).expect("fresh id");
                break;
            }
        }
    }
    layout
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefutationReport {
    pub seed: u64,
    pub trials: u64,
    /// layouts whose graph is K5 (the impossibility says none)
    pub k5_found: u64,
    /// layouts whose x-sorted y-sequence had no monotone triple
    pub without_monotone_triple: u64,
    /// layouts in which every monotone triple was a triangle
    pub without_blocked_triple: u64,
    /// number of layouts per extracted edge count
    pub edge_histogram: BTreeMap<usize, u64>,
}

impl RefutationReport {
    pub fn passed(&self) -> bool {
        self.k5_found == 0 && self.without_monotone_triple == 0 && self.without_blocked_triple == 0
    }
}

/// Samples `trials` random five-square layouts and checks that none realizes
/// K5, and that each has a monotone triple (by x, then y) whose middle square
/// breaks the triangle.
pub fn refute_k5_random(trials: u64, seed: u64) -> RefutationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = SamplerConfig::default();
    let mut report = RefutationReport {
        seed,
        trials,
        k5_found: 0,
        without_monotone_triple: 0,
        without_blocked_triple: 0,
        edge_histogram: BTreeMap::new(),
    };
    for _ in 0..trials {
        let layout = random_layout(5, &cfg, &mut rng);
        let g = layout.extract_graph().expect("sampler output is valid");
        *report.edge_histogram.entry(g.size()).or_default() += 1;
        if g.size() == 10 {
            report.k5_found += 1;
        }
        let mut by_x: Vec<usize> = (0..5).collect();
        by_x.sort_by_key(|&i| {
            let s = layout.square(i);
            (s.x, s.y)
        });
        let ys: Vec<Rational> = by_x.iter().map(|&i| layout.square(i).y).collect();
        if longest_monotone_subsequence(&ys).indices.len() < 3 {
            report.without_monotone_triple += 1;
            continue;
        }
        let mut blocked = false;
        'triples: for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    let up = ys[a] <= ys[b] && ys[b] <= ys[c];
                    let down = ys[a] >= ys[b] && ys[b] >= ys[c];
                    if !(up || down) {
                        continue;
                    }
                    let (va, vb, vc) = (by_x[a], by_x[b], by_x[c]);
                    let triangle = g.has_edge(va, vb) && g.has_edge(vb, vc) && g.has_edge(va, vc);
                    if !triangle {
                        blocked = true;
                        break 'triples;
                    }
                }
            }
        }
        if !blocked {
            report.without_blocked_triple += 1;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_output_is_valid_and_reproducible() {
        let cfg = SamplerConfig::default();
        let a = random_layout(8, &cfg, &mut ChaCha8Rng::seed_from_u64(3));
        let b = random_layout(8, &cfg, &mut ChaCha8Rng::seed_from_u64(3));
        assert!(a.validate().is_ok());
        assert_eq!(a, b);
        assert!(a.squares().iter().all(|s| s.x.denom() <= 60 && s.y.denom() <= 60));
    }

    #[test]
    fn small_refutation_run() {
        let r = refute_k5_random(2000, 11);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r, refute_k5_random(2000, 11));
        assert_eq!(r.edge_histogram.values().sum::<u64>(), 2000);
    }
}
