use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::graph::{ColorSet, GraphTriple};
use crate::rainbow::sides_admit_rainbow;

use super::{bipartite_lower_bound, identical_bipartite, SearchError, SearchOutcome};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Number of leading pairs fixed when splitting the tree into subtrees.
const SPLIT_DEPTH: usize = 3;
const NODE_FLUSH: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BnbConfig {
    /// Node limit; exhausting it downgrades the result to a lower bound.
    pub budget: u64,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub threads: Option<usize>,
}

impl Default for BnbConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, threads: None }
    }
}

struct Layout {
    n: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<usize>,
}

impl Layout {
    fn new(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut index = vec![usize::MAX; n * n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            index[u * n + v] = i;
            index[v * n + u] = i;
        }
        Self { n, pairs, index }
    }

    fn idx(&self, u: usize, v: usize) -> usize {
        self.index[u * self.n + v]
    }

    /// Whether mask `m` may be placed at `depth` given the masks before it:
    /// vertex 0's row is non-increasing and no triangle closed by this pair
    /// admits a rainbow colouring.
    fn admissible(&self, masks: &[u8], depth: usize, m: u8) -> bool {
        let (u, v) = self.pairs[depth];
        if u == 0 && v >= 2 && m > masks[depth - 1] {
            return false;
        }
        let cm = ColorSet::from_bits(m);
        (0..u).all(|w| {
            let a = ColorSet::from_bits(masks[self.idx(w, u)]);
            let b = ColorSet::from_bits(masks[self.idx(w, v)]);
            !sides_admit_rainbow(cm, a, b)
        })
    }

    fn sorted_row(&self, masks: &[u8], v: usize) -> Vec<u8> {
        let mut row: Vec<u8> = (0..self.n).filter(|&w| w != v).map(|w| masks[self.idx(v, w)]).collect();
        row.sort_unstable_by(|a, b| b.cmp(a));
        row
    }

    /// After assigning `depth`, any vertex whose row just became complete
    /// must not beat vertex 0's sorted row.
    fn rows_canonical(&self, masks: &[u8], depth: usize) -> bool {
        let (u, v) = self.pairs[depth];
        if v != self.n - 1 || u == 0 {
            return true;
        }
        let top = self.sorted_row(masks, 0);
        if self.sorted_row(masks, u) > top {
            return false;
        }
        !(u == self.n - 2 && self.sorted_row(masks, v) > top)
    }
}

/// Packs `(value, subtree)` so that `fetch_max` keeps the largest value and,
/// among equal values, the lowest subtree index.
fn pack(value: usize, subtree: u32) -> u64 {
    ((value as u64) << 32) | (u32::MAX - subtree) as u64
}

fn unpack(key: u64) -> (usize, u32) {
    ((key >> 32) as usize, u32::MAX - (key & 0xffff_ffff) as u32)
}

struct Shared {
    key: AtomicU64,
    nodes: AtomicU64,
    aborted: AtomicBool,
    budget: u64,
}

impl Shared {
    fn add_nodes(&self, k: u64) {
        let total = self.nodes.fetch_add(k, Ordering::Relaxed) + k;
        if total > self.budget {
            self.aborted.store(true, Ordering::Relaxed);
        }
    }
}

struct Worker<'a> {
    layout: &'a Layout,
    shared: &'a Shared,
    subtree: u32,
    masks: Vec<u8>,
    counts: [usize; 3],
    best_value: usize,
    best: Option<Vec<u8>>,
    pending_nodes: u64,
}

impl Worker<'_> {
    fn hopeless(&self, bound: usize) -> bool {
        if bound <= self.best_value {
            return true;
        }
        let (value, owner) = unpack(self.shared.key.load(Ordering::Relaxed));
        bound < value || (bound == value && owner < self.subtree)
    }

    fn tick(&mut self) {
        self.pending_nodes += 1;
        if self.pending_nodes >= NODE_FLUSH {
            self.shared.add_nodes(self.pending_nodes);
            self.pending_nodes = 0;
        }
    }

    fn dfs(&mut self, depth: usize) {
        if self.shared.aborted.load(Ordering::Relaxed) {
            return;
        }
        let total = self.layout.pairs.len();
        if depth == total {
            let value = self.counts.into_iter().min().unwrap_or(0);
            if !self.hopeless(value) {
                self.best_value = value;
                self.best = Some(self.masks.clone());
                self.shared.key.fetch_max(pack(value, self.subtree), Ordering::Relaxed);
            }
            return;
        }
        let remaining = total - depth - 1;
        for m in 0..8u8 {
            if !self.layout.admissible(&self.masks, depth, m) {
                continue;
            }
            self.tick();
            let mut counts = self.counts;
            for (c, count) in counts.iter_mut().enumerate() {
                *count += ((m >> c) & 1) as usize;
            }
            let bound = counts.into_iter().min().unwrap_or(0) + remaining;
            if self.hopeless(bound) {
                continue;
            }
            self.masks[depth] = m;
            if !self.layout.rows_canonical(&self.masks, depth) {
                continue;
            }
            let saved = self.counts;
            self.counts = counts;
            self.dfs(depth + 1);
            self.counts = saved;
        }
        self.masks[depth] = 0;
    }
}

/// Admissible assignments of the first `depth` pairs, in lexicographic order.
fn prefixes(layout: &Layout, depth: usize) -> Vec<Vec<u8>> {
    fn go(layout: &Layout, depth: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let d = cur.len();
        if d == depth {
            out.push(cur.clone());
            return;
        }
        let mut scratch = cur.clone();
        scratch.resize(layout.pairs.len(), 0);
        for m in 0..8u8 {
            if !layout.admissible(&scratch, d, m) {
                continue;
            }
            scratch[d] = m;
            if !layout.rows_canonical(&scratch, d) {
                continue;
            }
            cur.push(m);
            go(layout, depth, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(layout, depth, &mut Vec::new(), &mut out);
    out
}

/// Branch and bound over per-pair colour masks with the default worker pool.
pub fn branch_and_bound_r(n: usize, budget: u64) -> Result<SearchOutcome, SearchError> {
    branch_and_bound_r_with(n, &BnbConfig { budget, threads: None })
}

/// Branch and bound over per-pair colour masks, pairs in lexicographic order.
///
/// A branch is cut when its best possible minimum colour count cannot beat
/// the incumbent, or when a decided triangle admits a rainbow colouring.
/// Vertex 0 is forced to carry a non-increasing row of masks and a sorted
/// row no smaller than any other vertex's. Among optimal mask sequences the
/// lexicographically least one (within that normal form) is reported,
/// whatever the worker count.
pub fn branch_and_bound_r_with(n: usize, config: &BnbConfig) -> Result<SearchOutcome, SearchError> {
    match config.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| SearchError::ThreadPool(e.to_string()))?;
            pool.install(|| run(n, config.budget))
        }
        None => run(n, config.budget),
    }
}

fn run(n: usize, budget: u64) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let layout = Layout::new(n);
    let total = layout.pairs.len();
    if total == 0 {
        return SearchOutcome::verified(n, 0, true, GraphTriple::empty(n)?, 0, start.elapsed());
    }
    let lower = bipartite_lower_bound(n);
    let floor = lower - 1;
    let shared = Shared {
        key: AtomicU64::new(pack(floor, u32::MAX)),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        budget,
    };
    let split = SPLIT_DEPTH.min(total);
    let roots = prefixes(&layout, split);

    let results: Vec<(u32, usize, Option<Vec<u8>>)> = roots
        .par_iter()
        .enumerate()
        .map(|(i, prefix)| {
            let mut masks = prefix.clone();
            masks.resize(total, 0);
            let mut counts = [0usize; 3];
            for &m in prefix {
                for (c, count) in counts.iter_mut().enumerate() {
                    *count += ((m >> c) & 1) as usize;
                }
            }
            let mut worker = Worker {
                layout: &layout,
                shared: &shared,
                subtree: i as u32,
                masks,
                counts,
                best_value: floor,
                best: None,
                pending_nodes: 1,
            };
            let bound = counts.into_iter().min().unwrap_or(0) + (total - split);
            if !worker.hopeless(bound) {
                worker.dfs(split);
            }
            shared.add_nodes(worker.pending_nodes);
            (worker.subtree, worker.best_value, worker.best)
        })
        .collect();

    let aborted = shared.aborted.load(Ordering::Relaxed);
    let nodes = shared.nodes.load(Ordering::Relaxed);
    let best = results
        .into_iter()
        .filter_map(|(s, v, w)| w.map(|w| (v, s, w)))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));

    match best {
        Some((value, _, masks)) if value >= lower => {
            let colours: Vec<ColorSet> = masks.into_iter().map(ColorSet::from_bits).collect();
            let witness = GraphTriple::from_pair_masks(n, &colours)?;
            SearchOutcome::verified(n, value, !aborted, witness, nodes, start.elapsed())
        }
        _ if aborted => SearchOutcome::verified(n, lower, false, identical_bipartite(n)?, nodes, start.elapsed()),
        _ => Err(SearchError::InvalidWitness("search exhausted without reaching ⌊n²/4⌋".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_orders_by_value_then_lowest_subtree() {
        assert!(pack(5, 3) > pack(5, 7));
        assert!(pack(6, 100) > pack(5, 0));
        assert_eq!(unpack(pack(9, 42)), (9, 42));
    }

    #[test]
    fn prefixes_respect_row_order() {
        let layout = Layout::new(4);
        let roots = prefixes(&layout, 3);
        assert!(roots.iter().all(|p| p[0] >= p[1] && p[1] >= p[2]));
        assert!(roots.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn small_values() {
        assert_eq!(branch_and_bound_r(0, DEFAULT_BUDGET).unwrap().value, 0);
        assert_eq!(branch_and_bound_r(1, DEFAULT_BUDGET).unwrap().value, 0);
        let two = branch_and_bound_r(2, DEFAULT_BUDGET).unwrap();
        assert_eq!((two.value, two.exact), (1, true));
        let three = branch_and_bound_r(3, DEFAULT_BUDGET).unwrap();
        assert_eq!((three.value, three.exact), (2, true));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let out = branch_and_bound_r(6, 10).unwrap();
        assert!(!out.exact);
        assert!(out.value >= 9);
    }
}
