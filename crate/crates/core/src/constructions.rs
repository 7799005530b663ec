//! The three-block rainbow-free construction and its densities.
//!
//! Vertices split into `A = 0..n-2s`, `B` and `C` (each of size `s`, the
//! block size). Colour 1 is a clique on `A` plus a clique on `B`, colour 2 a
//! clique on `A` plus a clique on `C`, and colour 3 holds every pair except
//! those inside `A`. With `s ≈ τn` each colour carries about `(1+τ²)/4 · n²`
//! edges and there is no rainbow triangle.

use std::ops::Range;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Color, GraphError, GraphTriple, TripleBuilder};
use crate::rainbow::{count_rainbow_triangles, min_edge_count};

/// `τ = (4 − √7)/9` together with `τ²` and the per-colour edge threshold
/// `(1 + τ²)/4`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Constants {
    pub tau: f64,
    pub tau_squared: f64,
    pub threshold: f64,
}

impl Constants {
    pub fn new() -> Self {
        let tau = tau();
        Self { tau, tau_squared: tau * tau, threshold: (1.0 + tau * tau) / 4.0 }
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::new()
    }
}

pub fn tau() -> f64 {
    (4.0 - 7f64.sqrt()) / 9.0
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructionError {
    #[error("block size {block} invalid for n = {n}: need 0 < block and 2·block < n")]
    InvalidBlock { n: usize, block: usize },
    #[error("t = {0} outside (0, 1/2)")]
    FractionOutOfRange(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ConstructionParams {
    n: usize,
    block: usize,
}

impl ConstructionParams {
    pub fn new(n: usize, block: usize) -> Result<Self, ConstructionError> {
        if block == 0 || 2 * block >= n {
            return Err(ConstructionError::InvalidBlock { n, block });
        }
        Ok(Self { n, block })
    }

    /// Block size `round(τ·n)` (halves round up), clamped into the valid range.
    pub fn near_tau(n: usize) -> Result<Self, ConstructionError> {
        let raw = (tau() * n as f64 + 0.5).floor() as usize;
        let block = raw.min(n.saturating_sub(1) / 2).max(1);
        Self::new(n, block)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block(&self) -> usize {
        self.block
    }

    /// `block / n`.
    pub fn fraction(&self) -> f64 {
        self.block as f64 / self.n as f64
    }

    pub fn a_block(&self) -> Range<usize> {
        0..self.n - 2 * self.block
    }

    pub fn b_block(&self) -> Range<usize> {
        let start = self.n - 2 * self.block;
        start..start + self.block
    }

    pub fn c_block(&self) -> Range<usize> {
        self.n - self.block..self.n
    }
}

fn add_clique(b: &mut TripleBuilder, c: Color, r: Range<usize>) -> Result<(), GraphError> {
    for u in r.clone() {
        for v in u + 1..r.end {
            b.add_edge(c, u, v)?;
        }
    }
    Ok(())
}

pub fn build_construction(p: &ConstructionParams) -> Result<GraphTriple, ConstructionError> {
    let mut b = TripleBuilder::new(p.n)?;
    add_clique(&mut b, Color::One, p.a_block())?;
    add_clique(&mut b, Color::One, p.b_block())?;
    add_clique(&mut b, Color::Two, p.a_block())?;
    add_clique(&mut b, Color::Two, p.c_block())?;
    let a_end = p.a_block().end;
    for u in 0..p.n {
        for v in (u + 1).max(a_end)..p.n {
            b.add_edge(Color::Three, u, v)?;
        }
    }
    Ok(b.build())
}

/// Closed-form edge counts `(|E1| = |E2|, |E3|)` at block fraction `t`.
pub fn predicted_counts(n: f64, t: f64) -> Result<(f64, f64), ConstructionError> {
    if !(t > 0.0 && t < 0.5) {
        return Err(ConstructionError::FractionOutOfRange(t));
    }
    let n2 = n * n;
    let first = (2.0 - 8.0 * t + 10.0 * t * t) / 4.0 * n2 - (1.0 - t) / 2.0 * n;
    let third = (8.0 * t - 8.0 * t * t) / 4.0 * n2 - t * n;
    Ok((first, third))
}

/// Exact integer counts `(C(n-2s,2) + C(s,2), C(n,2) − C(n-2s,2))`.
pub fn exact_counts(p: &ConstructionParams) -> (u64, u64) {
    let choose2 = |m: u64| m * m.saturating_sub(1) / 2;
    let (n, s) = (p.n as u64, p.block as u64);
    let a = n - 2 * s;
    (choose2(a) + choose2(s), choose2(n) - choose2(a))
}

/// Whether every colour of the construction has more than `n²/4` edges.
pub fn beats_quarter(p: &ConstructionParams) -> bool {
    let (first, third) = exact_counts(p);
    4 * first.min(third) > (p.n as u64).pow(2)
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityReport {
    pub n: usize,
    pub block: usize,
    pub t: f64,
    pub edges: [usize; 3],
    pub predicted: [f64; 2],
    pub rainbow_count: u64,
    pub min_edges: usize,
    /// `min_edges / n²`.
    pub min_density: f64,
    /// `(1 + τ²)/4`.
    pub threshold: f64,
    pub beats_quarter: bool,
}

pub fn density_report(p: &ConstructionParams, t: &GraphTriple) -> Result<DensityReport, ConstructionError> {
    let (first, third) = predicted_counts(p.n as f64, p.fraction())?;
    let min_edges = min_edge_count(t);
    Ok(DensityReport {
        n: p.n,
        block: p.block,
        t: p.fraction(),
        edges: t.edge_counts(),
        predicted: [first, third],
        rainbow_count: count_rainbow_triangles(t),
        min_edges,
        min_density: min_edges as f64 / (p.n as f64).powi(2),
        threshold: Constants::new().threshold,
        beats_quarter: beats_quarter(p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rainbow::find_rainbow_triangle;

    #[test]
    fn tau_is_root_of_quadratic() {
        let k = Constants::new();
        assert!((9.0 * k.tau_squared - 8.0 * k.tau + 1.0).abs() < 1e-12);
        assert!(((2.0 - 8.0 * k.tau + 10.0 * k.tau_squared) - (1.0 + k.tau_squared)).abs() < 1e-12);
        assert!(((8.0 * k.tau - 8.0 * k.tau_squared) - (1.0 + k.tau_squared)).abs() < 1e-12);
        assert!((k.threshold - (26.0 - 2.0 * 7f64.sqrt()) / 81.0).abs() < 1e-15);
    }

    #[test]
    fn n20_block3() {
        let p = ConstructionParams::new(20, 3).unwrap();
        let t = build_construction(&p).unwrap();
        assert_eq!(t.edge_counts(), [94, 94, 99]);
        assert_eq!(count_rainbow_triangles(&t), 0);
        assert!(!beats_quarter(&p));
    }

    #[test]
    fn degenerate_blocks() {
        let p = ConstructionParams::new(3, 1).unwrap();
        assert_eq!(build_construction(&p).unwrap().edge_counts(), [0, 0, 3]);
        assert!(ConstructionParams::new(4, 2).is_err());
        assert!(ConstructionParams::new(4, 0).is_err());
        assert!(ConstructionParams::new(0, 0).is_err());
    }

    #[test]
    fn predicted_matches_binomials() {
        let (a, b) = predicted_counts(20.0, 0.15).unwrap();
        assert!((a - 94.0).abs() < 1e-9 && (b - 99.0).abs() < 1e-9);
        let (a, b) = predicted_counts(900.0, 0.15).unwrap();
        assert!((a - 207180.0).abs() < 1e-6 && (b - 206415.0).abs() < 1e-6);
        assert_eq!(predicted_counts(10.0, 0.5), Err(ConstructionError::FractionOutOfRange(0.5)));
        assert!(predicted_counts(10.0, 0.0).is_err());
    }

    #[test]
    fn tau_balances_the_two_counts() {
        // Bisection on 2 − 8t + 10t² − (8t − 8t²) over (0, 1/2).
        let f = |t: f64| 2.0 - 16.0 * t + 18.0 * t * t;
        let (mut lo, mut hi) = (0.0, 0.5);
        assert!(f(lo) > 0.0 && f(hi) < 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                lo = mid
            } else {
                hi = mid
            }
        }
        assert!((lo - tau()).abs() < 1e-14);
    }

    #[test]
    fn quarter_window() {
        assert!(beats_quarter(&ConstructionParams::new(900, 135).unwrap()));
        assert!(!beats_quarter(&ConstructionParams::new(900, 45).unwrap()));
    }

    #[test]
    fn near_tau_rounding() {
        assert_eq!(ConstructionParams::near_tau(100).unwrap().block(), 15);
        assert_eq!(ConstructionParams::near_tau(20).unwrap().block(), 3);
        assert_eq!(ConstructionParams::near_tau(3).unwrap().block(), 1);
        assert!(ConstructionParams::near_tau(2).is_err());
    }

    #[test]
    fn exact_counts_track_formulas_for_small_n() {
        for n in 3..=200usize {
            for block in 1..=(n - 1) / 2 {
                let p = ConstructionParams::new(n, block).unwrap();
                let t = build_construction(&p).unwrap();
                let [e1, e2, e3] = t.edge_counts();
                let (first, third) = exact_counts(&p);
                assert_eq!((e1 as u64, e2 as u64, e3 as u64), (first, first, third), "n={n} s={block}");
                let (pf, pt) = predicted_counts(n as f64, p.fraction()).unwrap();
                assert!((pf - first as f64).abs() < 1e-6 && (pt - third as f64).abs() < 1e-6);
                if n <= 40 {
                    assert_eq!(find_rainbow_triangle(&t), None);
                }
            }
        }
    }

    #[test]
    fn near_tau_density_converges_monotonically() {
        let limit = (1.0 + Constants::new().tau_squared) / 2.0;
        let mut prev_gap = f64::INFINITY;
        for n in [100usize, 300, 900] {
            let p = ConstructionParams::near_tau(n).unwrap();
            let (first, third) = exact_counts(&p);
            let density = 2.0 * first.min(third) as f64 / (n as f64).powi(2);
            let gap = limit - density;
            assert!(gap > 0.0 && gap < prev_gap, "n={n} gap={gap}");
            prev_gap = gap;
        }
    }
}
