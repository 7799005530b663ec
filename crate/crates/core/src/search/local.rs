use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{build_construction, ConstructionParams};
use crate::graph::{words_for, Color, GraphTriple, TripleBuilder};

use super::{identical_bipartite, SearchError, SearchOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalInit {
    /// Three identical copies of `K_{⌊n/2⌋,⌈n/2⌉}`.
    Bipartite,
    /// The three-block construction; `None` picks the block nearest `τn`.
    Construction(Option<usize>),
}

#[derive(Clone, Copy, Debug)]
pub struct LocalSearchConfig {
    pub seed: u64,
    pub iterations: u64,
    pub init: LocalInit,
    /// Probability of trying an edge removal that keeps the minimum intact.
    pub removal_rate: f64,
}

impl Default for LocalSearchConfig {
    fn default() -> Self {
        Self { seed: 0, iterations: 100_000, init: LocalInit::Bipartite, removal_rate: 0.2 }
    }
}

/// Mutable bit-row triple used by the climber.
struct State {
    n: usize,
    words: usize,
    rows: [Vec<u64>; 3],
    counts: [usize; 3],
}

impl State {
    fn from_triple(t: &GraphTriple) -> Self {
        let n = t.order();
        let words = words_for(n);
        let rows = Color::ALL.map(|c| {
            let g = t.graph(c);
            (0..n).flat_map(|v| g.row(v).iter().copied()).collect::<Vec<u64>>()
        });
        Self { n, words, rows, counts: t.edge_counts() }
    }

    fn row(&self, c: usize, v: usize) -> &[u64] {
        &self.rows[c][v * self.words..(v + 1) * self.words]
    }

    fn has(&self, c: usize, u: usize, v: usize) -> bool {
        (self.row(c, u)[v >> 6] >> (v & 63)) & 1 == 1
    }

    fn toggle(&mut self, c: usize, u: usize, v: usize) {
        let on = self.has(c, u, v);
        self.rows[c][u * self.words + (v >> 6)] ^= 1 << (v & 63);
        self.rows[c][v * self.words + (u >> 6)] ^= 1 << (u & 63);
        if on {
            self.counts[c] -= 1;
        } else {
            self.counts[c] += 1;
        }
    }

    /// Whether adding `uv` in colour `c` closes a rainbow triangle.
    fn closes_rainbow(&self, c: usize, u: usize, v: usize) -> bool {
        let (x, y) = ((c + 1) % 3, (c + 2) % 3);
        let (ux, uy, vx, vy) = (self.row(x, u), self.row(y, u), self.row(x, v), self.row(y, v));
        (0..self.words).any(|w| (ux[w] & vy[w]) | (uy[w] & vx[w]) != 0)
    }

    fn min(&self) -> usize {
        self.counts.into_iter().min().unwrap_or(0)
    }

    fn to_triple(&self) -> Result<GraphTriple, SearchError> {
        let mut b = TripleBuilder::new(self.n)?;
        for (ci, c) in Color::ALL.into_iter().enumerate() {
            for u in 0..self.n {
                for v in u + 1..self.n {
                    if self.has(ci, u, v) {
                        b.add_edge(c, u, v)?;
                    }
                }
            }
        }
        Ok(b.build())
    }
}

pub fn local_search_r(n: usize, seed: u64, iterations: u64) -> Result<SearchOutcome, SearchError> {
    local_search_r_with(n, &LocalSearchConfig { seed, iterations, ..Default::default() })
}

/// Seeded hill climbing over single pair-colour flips.
///
/// Additions are kept whenever they do not close a rainbow triangle; removals
/// are tried at `removal_rate` and kept only when the removed colour is not
/// the unique minimum, which lets the walk cross plateaus. The best state
/// seen is reported as a lower bound.
pub fn local_search_r_with(n: usize, config: &LocalSearchConfig) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let init = match config.init {
        LocalInit::Bipartite => identical_bipartite(n)?,
        LocalInit::Construction(block) => {
            let params = match block {
                Some(b) => ConstructionParams::new(n, b)?,
                None => ConstructionParams::near_tau(n)?,
            };
            build_construction(&params)?
        }
    };
    let mut state = State::from_triple(&init);
    let mut best_value = state.min();
    let mut best = init;
    if n < 2 {
        return SearchOutcome::verified(n, best_value, false, best, 0, start.elapsed());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.iterations {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        let c = rng.gen_range(0..3);
        if state.has(c, u, v) {
            if !rng.gen_bool(config.removal_rate) {
                continue;
            }
            let current = state.min();
            let others = [(c + 1) % 3, (c + 2) % 3].map(|o| state.counts[o]);
            if state.counts[c] == current && others.iter().all(|&o| o > current) {
                continue;
            }
            state.toggle(c, u, v);
        } else if !state.closes_rainbow(c, u, v) {
            state.toggle(c, u, v);
            if state.min() > best_value {
                best_value = state.min();
                best = state.to_triple()?;
            }
        }
    }
    SearchOutcome::verified(n, best_value, false, best, config.iterations, start.elapsed())
}
