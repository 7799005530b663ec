//! Brute-force and randomized checks of the combinatorial lemmas behind the
//! rainbow bound: the matching/common-neighbour count, Mantel's bound, the
//! bipartite clique-neighbourhood inequality, the digon case analysis and
//! the arithmetic of the perfect-matching reduction.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::Constants;
use crate::graph::{
    and_popcount, Color, ColorSet, GraphBuilder, GraphError, GraphTriple, SimpleGraph, TripleBuilder, VertexSet,
};
use crate::rainbow::find_rainbow_triangle;

/// `|P| ≥ |E| − |M|` for the greedy maximal matching `M`, where `P` is the
/// set of vertex pairs with a common neighbour.
pub fn check_lemma_count(g: &SimpleGraph) -> bool {
    g.common_neighbor_pairs() + g.greedy_maximal_matching().len() >= g.edge_count()
}

/// Checks that sending each non-matching edge `e` to `e △ e_s`, where `e_s`
/// is the first matching edge meeting `e`, is an injection into the pairs
/// with a common neighbour.
pub fn matching_map_is_injective(g: &SimpleGraph) -> bool {
    let matching = g.greedy_maximal_matching();
    let mut seen = std::collections::HashSet::new();
    for (u, v) in g.edges() {
        if matching.contains(&(u, v)) {
            continue;
        }
        let Some(&(a, b)) = matching.iter().find(|&&(a, b)| a == u || a == v || b == u || b == v) else {
            return false;
        };
        let mut sym: Vec<usize> =
            [u, v, a, b].into_iter().filter(|&x| [u, v, a, b].iter().filter(|&&y| y == x).count() == 1).collect();
        sym.sort_unstable();
        let [x, y] = sym[..] else {
            return false;
        };
        let shares_neighbour = g.row(x).iter().zip(g.row(y)).any(|(p, q)| p & q != 0);
        if !shares_neighbour || !seen.insert((x, y)) {
            return false;
        }
    }
    true
}

/// Mantel's bound `|E| ≤ n²/4`; graphs with a triangle pass vacuously.
pub fn check_mantel(g: &SimpleGraph) -> bool {
    !g.is_triangle_free() || 4 * g.edge_count() <= g.order() * g.order()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BipmanVerdict {
    Holds,
    Fails,
    /// Some `z ∈ Z_i` has a cross-neighbourhood `N(z) ∩ Z_{1−i}` that is not
    /// a clique.
    NotApplicable,
}

fn cross_neighbourhoods_are_cliques(g: &SimpleGraph, side: &VertexSet, other: &VertexSet) -> bool {
    side.iter().all(|z| {
        let nbrs: Vec<u64> = g.row(z).iter().zip(other.words()).map(|(a, b)| a & b).collect();
        let all_adjacent = crate::graph::ones(&nbrs).all(|x| {
            let row = g.row(x);
            nbrs.iter().enumerate().all(|(w, &s)| {
                let self_bit = if x >> 6 == w { 1u64 << (x & 63) } else { 0 };
                s & !row[w] & !self_bit == 0
            })
        });
        all_adjacent
    })
}

/// `e(Z0, Z1) ≤ e(Z0) + e(Z1) + (|Z0| + |Z1|)/2` for a partition `{Z0, Z1}`
/// whose cross-neighbourhoods are all cliques.
pub fn check_bipman(g: &SimpleGraph, z0: &VertexSet, z1: &VertexSet) -> Result<BipmanVerdict, GraphError> {
    let n = g.order();
    for z in [z0, z1] {
        if z.universe() != n {
            return Err(GraphError::UniverseMismatch { expected: n, found: z.universe() });
        }
    }
    if !z0.is_disjoint(z1) || z0.len() + z1.len() != n {
        return Err(GraphError::NotAPartition);
    }
    if !cross_neighbourhoods_are_cliques(g, z0, z1) || !cross_neighbourhoods_are_cliques(g, z1, z0) {
        return Ok(BipmanVerdict::NotApplicable);
    }
    let cross = g.edges_between(z0, z1)?;
    let inside = g.edges_within(z0)? + g.edges_within(z1)?;
    Ok(if 2 * cross <= 2 * inside + n { BipmanVerdict::Holds } else { BipmanVerdict::Fails })
}

/// Both sides of the edge-count step in the perfect-matching reduction:
/// `(1+τ²)/2·n² + 3n/2 − ℓn + ℓ²/2` against `(1+τ²)/2·(n−ℓ)² + 3(n−ℓ)/2`.
pub fn no3pm_sides(n: usize, l: usize) -> (f64, f64) {
    let k = Constants::new();
    let half = (1.0 + k.tau_squared) / 2.0;
    let (n, l) = (n as f64, l as f64);
    let lhs = half * n * n + 1.5 * n - l * n + l * l / 2.0;
    let rhs = half * (n - l) * (n - l) + 1.5 * (n - l);
    (lhs, rhs)
}

/// Closed form of `lhs − rhs`: `τ²·ℓ·(n − ℓ/2) + 3ℓ/2`.
pub fn no3pm_closed_slack(n: usize, l: usize) -> f64 {
    let t2 = Constants::new().tau_squared;
    let (n, l) = (n as f64, l as f64);
    t2 * l * (n - l / 2.0) + 1.5 * l
}

/// Whether `lhs ≥ rhs` up to a relative rounding allowance of `1e-12`.
pub fn check_no3pm_arithmetic(n: usize, l: usize) -> bool {
    let (lhs, rhs) = no3pm_sides(n, l);
    lhs - rhs >= -1e-12 * rhs.abs().max(1.0)
}

/// The two shapes of digon pairs in the case analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DigonShape {
    /// Both `X` and `X'` are edges in colours `i` and `j`.
    SameColours,
    /// `X` is an edge in colours `i, j` and `X'` in colours `i, k`.
    SharedColour,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DigonCase {
    #[serde(rename = "1a")]
    OneA,
    #[serde(rename = "1b")]
    OneB,
    #[serde(rename = "1c")]
    OneC,
    #[serde(rename = "2a")]
    TwoA,
    #[serde(rename = "2b")]
    TwoB,
    #[serde(rename = "violation")]
    Violation,
}

impl fmt::Display for DigonCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DigonCase::OneA => "1a",
            DigonCase::OneB => "1b",
            DigonCase::OneC => "1c",
            DigonCase::TwoA => "2a",
            DigonCase::TwoB => "2b",
            DigonCase::Violation => "violation",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DigonSceneOutcome {
    pub case: DigonCase,
    /// `(e_i, e_j, e_k)` between `X` and `X'`.
    pub cross_counts: [usize; 3],
}

/// Why a scene was discarded before classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SceneFilter {
    Rainbow,
    TripleColouredPair,
    DisjointKEdges,
}

/// Colour roles `(i, j, k)`, a permutation of the three colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub i: Color,
    pub j: Color,
    pub k: Color,
}

impl Labeling {
    pub fn new(i: Color, j: Color, k: Color) -> Option<Self> {
        (i != j && j != k && i != k).then_some(Self { i, j, k })
    }

    pub fn all() -> Vec<Labeling> {
        let c = Color::ALL;
        let mut out = Vec::new();
        for &i in &c {
            for &j in &c {
                for &k in &c {
                    if let Some(l) = Labeling::new(i, j, k) {
                        out.push(l);
                    }
                }
            }
        }
        out
    }

    fn numbers(&self) -> [usize; 3] {
        [self.i.number(), self.j.number(), self.k.number()]
    }
}

/// Cross pairs between `X = {0, 1}` and `X' = {2, 3}`, in this order.
pub const CROSS_PAIRS: [(usize, usize); 4] = [(0, 2), (0, 3), (1, 2), (1, 3)];

fn scene(shape: DigonShape, l: Labeling, cross: [ColorSet; 4]) -> GraphTriple {
    let mut b = TripleBuilder::new(4).expect("four vertices");
    let second = match shape {
        DigonShape::SameColours => ColorSet::of(&[l.i, l.j]),
        DigonShape::SharedColour => ColorSet::of(&[l.i, l.k]),
    };
    b.set_colors(0, 1, ColorSet::of(&[l.i, l.j])).expect("valid pair");
    b.set_colors(2, 3, second).expect("valid pair");
    for (&(u, v), &m) in CROSS_PAIRS.iter().zip(&cross) {
        b.set_colors(u, v, m).expect("valid pair");
    }
    b.build()
}

/// Filters and classifies one assignment of colour sets to the four cross
/// pairs.
pub fn classify_scene(shape: DigonShape, l: Labeling, cross: [ColorSet; 4]) -> Result<DigonSceneOutcome, SceneFilter> {
    let t = scene(shape, l, cross);
    if find_rainbow_triangle(&t).is_some() {
        return Err(SceneFilter::Rainbow);
    }
    if t.pair_masks().iter().any(|m| m.len() == 3) {
        return Err(SceneFilter::TripleColouredPair);
    }
    let count = |c: Color| cross.iter().filter(|m| m.contains(c)).count();
    let counts = [count(l.i), count(l.j), count(l.k)];
    let [ei, ej, ek] = counts;
    let case = match shape {
        DigonShape::SameColours => {
            let k_edges: Vec<(usize, usize)> =
                CROSS_PAIRS.iter().zip(&cross).filter(|(_, m)| m.contains(l.k)).map(|(&p, _)| p).collect();
            let disjoint = k_edges.iter().any(|&(a, b)| k_edges.iter().any(|&(c, d)| a != c && b != d));
            if disjoint {
                return Err(SceneFilter::DisjointKEdges);
            }
            match ek {
                0 => DigonCase::OneA,
                1 if ei <= 2 && ej <= 2 => DigonCase::OneB,
                2 if ei == 0 && ej == 0 => DigonCase::OneC,
                _ => DigonCase::Violation,
            }
        }
        DigonShape::SharedColour => match ei + ej + ek {
            0..=4 => DigonCase::TwoA,
            5 if counts == [3, 1, 1] => DigonCase::TwoB,
            _ => DigonCase::Violation,
        },
    };
    Ok(DigonSceneOutcome { case, cross_counts: counts })
}

#[derive(Clone, Debug, Serialize)]
pub struct DigonReport {
    /// Colour numbers `(i, j, k)`.
    pub labeling: [usize; 3],
    pub configurations: usize,
    pub filtered_rainbow: usize,
    pub filtered_triple_coloured: usize,
    pub filtered_disjoint_k: usize,
    pub cases: BTreeMap<DigonCase, usize>,
    /// Surviving configurations that fit no case, as cross-pair colour masks.
    pub violations: Vec<[u8; 4]>,
}

impl DigonReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn survivors(&self) -> usize {
        self.cases.values().sum()
    }
}

fn enumerate(shape: DigonShape, l: Labeling) -> DigonReport {
    let mut report = DigonReport {
        labeling: l.numbers(),
        configurations: 0,
        filtered_rainbow: 0,
        filtered_triple_coloured: 0,
        filtered_disjoint_k: 0,
        cases: BTreeMap::new(),
        violations: Vec::new(),
    };
    for code in 0..8u32.pow(4) {
        let bits = [(code >> 9) & 7, (code >> 6) & 7, (code >> 3) & 7, code & 7].map(|b| b as u8);
        report.configurations += 1;
        match classify_scene(shape, l, bits.map(ColorSet::from_bits)) {
            Err(SceneFilter::Rainbow) => report.filtered_rainbow += 1,
            Err(SceneFilter::TripleColouredPair) => report.filtered_triple_coloured += 1,
            Err(SceneFilter::DisjointKEdges) => report.filtered_disjoint_k += 1,
            Ok(out) => {
                *report.cases.entry(out.case).or_default() += 1;
                if out.case == DigonCase::Violation {
                    report.violations.push(bits);
                }
            }
        }
    }
    report
}

/// Digons `X, X'` both coloured `{i, j}`: every one of the `8⁴` cross
/// configurations that survives the filters falls in case 1a, 1b or 1c.
/// Runs once per choice of `k`.
pub fn enumerate_digon_case1() -> Vec<DigonReport> {
    Labeling::all().into_iter().filter(|l| l.i < l.j).map(|l| enumerate(DigonShape::SameColours, l)).collect()
}

/// Digons `X` coloured `{i, j}` and `X'` coloured `{i, k}`: every survivor
/// has at most four cross edges, or exactly five with signature `(3, 1, 1)`.
/// Runs once per ordered labeling.
pub fn enumerate_digon_case2() -> Vec<DigonReport> {
    Labeling::all().into_iter().map(|l| enumerate(DigonShape::SharedColour, l)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest `n` for exhaustive graph enumeration (capped per check).
    pub exhaustive_max: usize,
    /// Random instances per sampled check (per density where applicable).
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { exhaustive_max: 7, samples: 10_000, seed: crate::cli::DEFAULT_SEED }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    /// Instances outside the lemma's hypothesis (vacuous or not applicable).
    pub skipped: u64,
    pub detail: String,
}

impl LemmaCheck {
    fn new(name: &str, checked: u64, failures: u64, skipped: u64, detail: impl Into<String>) -> Self {
        Self { name: name.to_owned(), checked, failures, skipped, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn pair_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Runs `f` on every graph with `2 ≤ n ≤ max_n`, returning (checked, failures).
fn over_all_graphs<F>(max_n: usize, f: F) -> (u64, u64)
where
    F: Fn(&SimpleGraph) -> bool + Sync,
{
    (0..=max_n)
        .map(|n| {
            let total = 1u64 << pair_count(n);
            let failures = (0..total).into_par_iter().filter(|&m| !f(&SimpleGraph::from_pair_mask(n, m))).count();
            (total, failures as u64)
        })
        .fold((0, 0), |(a, b), (c, d)| (a + c, b + d))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut b = GraphBuilder::new(n).expect("small graph");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).expect("valid pair");
            }
        }
    }
    b.build()
}

/// A maximal triangle-free graph grown by inserting pairs in random order.
pub fn random_maximal_triangle_free(rng: &mut impl Rng, n: usize) -> SimpleGraph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut b = GraphBuilder::new(n).expect("small graph");
    let mut rows = vec![vec![0u64; n.div_ceil(64)]; n];
    for (u, v) in pairs {
        if and_popcount(&rows[u], &rows[v]) == 0 {
            b.add_edge(u, v).expect("valid pair");
            rows[u][v >> 6] |= 1 << (v & 63);
            rows[v][u >> 6] |= 1 << (u & 63);
        }
    }
    b.build()
}

/// A disjoint union of random cliques with a random bipartition of the
/// vertices; such instances always satisfy the clique-neighbourhood condition.
pub fn random_clique_union_instance(rng: &mut impl Rng, n: usize) -> (SimpleGraph, VertexSet, VertexSet) {
    let mut b = GraphBuilder::new(n).expect("small graph");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rest = &order[..];
    while !rest.is_empty() {
        let size = rng.gen_range(1..=rest.len());
        let (clique, tail) = rest.split_at(size);
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                b.add_edge(u, v).expect("valid pair");
            }
        }
        rest = tail;
    }
    let mut z0 = VertexSet::empty(n);
    for v in 0..n {
        if rng.gen_bool(0.5) {
            z0.insert(v).expect("in range");
        }
    }
    let z1 = z0.complement();
    (b.build(), z0, z1)
}

/// Runs every lemma check and returns one row per check.
pub fn run_suite(config: &SuiteConfig) -> Vec<LemmaCheck> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let count_max = config.exhaustive_max.min(7);
    let (checked, failures) = over_all_graphs(count_max, check_lemma_count);
    out.push(LemmaCheck::new("lemma_count/exhaustive", checked, failures, 0, format!("all graphs, n ≤ {count_max}")));

    let (mut checked, mut failures, mut injective_failures) = (0u64, 0u64, 0u64);
    for tenth in 1..=9 {
        let p = tenth as f64 / 10.0;
        for _ in 0..config.samples {
            let n = rng.gen_range(2..=12);
            let g = random_graph(&mut rng, n, p);
            checked += 1;
            failures += !check_lemma_count(&g) as u64;
            injective_failures += !matching_map_is_injective(&g) as u64;
        }
    }
    out.push(LemmaCheck::new("lemma_count/sampled", checked, failures, 0, "n ≤ 12, densities 0.1..0.9"));
    out.push(LemmaCheck::new("lemma_count/injection", checked, injective_failures, 0, "matching map injective"));

    let mantel_max = config.exhaustive_max.min(6);
    let vacuous = |n_max: usize| -> u64 {
        (0..=n_max)
            .map(|n| {
                (0..1u64 << pair_count(n))
                    .into_par_iter()
                    .filter(|&m| !SimpleGraph::from_pair_mask(n, m).is_triangle_free())
                    .count() as u64
            })
            .sum()
    };
    let (checked, failures) = over_all_graphs(mantel_max, check_mantel);
    let tight_misses = (2..=mantel_max)
        .filter(|&n| {
            let best = (0..1u64 << pair_count(n))
                .into_par_iter()
                .map(|m| SimpleGraph::from_pair_mask(n, m))
                .filter(|g| g.is_triangle_free())
                .map(|g| g.edge_count())
                .max()
                .unwrap_or(0);
            best != n * n / 4
        })
        .count() as u64;
    out.push(LemmaCheck::new(
        "mantel/exhaustive",
        checked,
        failures + tight_misses,
        vacuous(mantel_max),
        format!("all graphs, n ≤ {mantel_max}; maximum ⌊n²/4⌋ attained"),
    ));
    let k33 = SimpleGraph::complete_bipartite(3, 3).expect("K33");
    let k33_tight = check_mantel(&k33) && 4 * k33.edge_count() == 36;
    out.push(LemmaCheck::new("mantel/K33-tight", 1, !k33_tight as u64, 0, "|E(K_{3,3})| = 9 = 6²/4"));

    let (mut checked, mut failures) = (0u64, 0u64);
    for _ in 0..config.samples {
        let n = rng.gen_range(1..=16);
        let g = random_maximal_triangle_free(&mut rng, n);
        checked += 1;
        failures += !check_mantel(&g) as u64;
    }
    out.push(LemmaCheck::new("mantel/sampled", checked, failures, 0, "maximal triangle-free graphs, n ≤ 16"));

    let bip_max = config.exhaustive_max.min(5);
    let (mut checked, mut failures, mut skipped) = (0u64, 0u64, 0u64);
    for n in 0..=bip_max {
        let rows: Vec<(u64, u64, u64)> = (0..1u64 << pair_count(n))
            .into_par_iter()
            .map(|m| {
                let g = SimpleGraph::from_pair_mask(n, m);
                let (mut c, mut f, mut s) = (0, 0, 0);
                for part in 0..1u64 << n {
                    let z0 = VertexSet::from_mask(n, part);
                    let z1 = z0.complement();
                    c += 1;
                    match check_bipman(&g, &z0, &z1).expect("partition") {
                        BipmanVerdict::Holds => {}
                        BipmanVerdict::Fails => f += 1,
                        BipmanVerdict::NotApplicable => s += 1,
                    }
                }
                (c, f, s)
            })
            .collect();
        for (c, f, s) in rows {
            checked += c;
            failures += f;
            skipped += s;
        }
    }
    out.push(LemmaCheck::new(
        "bipman/exhaustive",
        checked,
        failures,
        skipped,
        format!("all graphs and partitions, n ≤ {bip_max}"),
    ));

    let (mut checked, mut failures, mut skipped) = (0u64, 0u64, 0u64);
    for _ in 0..config.samples {
        let n = rng.gen_range(1..=40);
        let (g, z0, z1) = random_clique_union_instance(&mut rng, n);
        checked += 1;
        match check_bipman(&g, &z0, &z1).expect("partition") {
            BipmanVerdict::Holds => {}
            BipmanVerdict::Fails => failures += 1,
            BipmanVerdict::NotApplicable => skipped += 1,
        }
    }
    out.push(LemmaCheck::new("bipman/clique-unions", checked, failures, skipped, "n ≤ 40"));

    for (name, reports) in [("digon/case1", enumerate_digon_case1()), ("digon/case2", enumerate_digon_case2())] {
        let configs: usize = reports.iter().map(|r| r.configurations).sum();
        let survivors: usize = reports.iter().map(|r| r.survivors()).sum();
        let violations: usize = reports.iter().map(|r| r.violations.len()).sum();
        let mut cases: BTreeMap<DigonCase, usize> = BTreeMap::new();
        for r in &reports {
            for (&c, &k) in &r.cases {
                *cases.entry(c).or_default() += k;
            }
        }
        let summary: Vec<String> = cases.iter().map(|(c, k)| format!("{c}={k}")).collect();
        out.push(LemmaCheck::new(
            name,
            survivors as u64,
            violations as u64,
            (configs - survivors) as u64,
            format!("{} labelings × 4096 configurations; {}", reports.len(), summary.join(" ")),
        ));
    }

    let (checked, failures) = (1..=1000usize)
        .into_par_iter()
        .map(|n| (n as u64, (1..=n).filter(|&l| !check_no3pm_arithmetic(n, l)).count() as u64))
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    out.push(LemmaCheck::new("no3pm/arithmetic", checked, failures, 0, "1 ≤ ℓ ≤ n ≤ 1000"));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn lemma_count_examples() {
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert_eq!((c4.common_neighbor_pairs(), c4.edge_count(), c4.greedy_maximal_matching().len()), (2, 4, 2));
        assert!(check_lemma_count(&c4));
        assert!(check_lemma_count(&SimpleGraph::complete(3).unwrap()));
        assert!(check_lemma_count(&SimpleGraph::empty(5).unwrap()));
        assert!(matching_map_is_injective(&c4));
        assert!(matching_map_is_injective(&SimpleGraph::complete(6).unwrap()));
    }

    #[test]
    fn mantel_examples() {
        assert!(check_mantel(&SimpleGraph::cycle(5).unwrap()));
        let k33 = SimpleGraph::complete_bipartite(3, 3).unwrap();
        assert!(check_mantel(&k33));
        assert_eq!(4 * k33.edge_count(), 36);
        assert!(check_mantel(&SimpleGraph::complete(3).unwrap()));
    }

    #[test]
    fn bipman_examples() {
        let k4 = SimpleGraph::complete(4).unwrap();
        assert_eq!(check_bipman(&k4, &set(4, &[0, 1]), &set(4, &[2, 3])), Ok(BipmanVerdict::Holds));
        let e = SimpleGraph::empty(5).unwrap();
        assert_eq!(check_bipman(&e, &set(5, &[0, 3]), &set(5, &[1, 2, 4])), Ok(BipmanVerdict::Holds));
        let star = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(check_bipman(&star, &set(4, &[0]), &set(4, &[1, 2, 3])), Ok(BipmanVerdict::NotApplicable));
        assert_eq!(check_bipman(&k4, &set(4, &[0, 1]), &set(4, &[1, 2, 3])), Err(GraphError::NotAPartition));
        assert_eq!(check_bipman(&k4, &set(4, &[0]), &set(4, &[2, 3])), Err(GraphError::NotAPartition));
    }

    #[test]
    fn bipman_component_identity_is_tight_for_balanced_cliques() {
        // |D| − |C| = C(ℓ,2) + C(m,2) − ℓm = (ℓ − m)²/2 − (ℓ + m)/2.
        for l in 0..8i64 {
            for m in 0..8i64 {
                let lhs = l * (l - 1) / 2 + m * (m - 1) / 2 - l * m;
                assert_eq!(2 * lhs, (l - m).pow(2) - (l + m));
            }
        }
    }

    #[test]
    fn no3pm_examples() {
        assert!(check_no3pm_arithmetic(10, 2));
        let (lhs, rhs) = no3pm_sides(10, 2);
        assert!(lhs > rhs);
        assert!(check_no3pm_arithmetic(7, 7));
        let t2 = Constants::new().tau_squared;
        assert!((no3pm_closed_slack(40, 40) - (t2 * 1600.0 / 2.0 + 60.0)).abs() < 1e-9);
        let (lhs, rhs) = no3pm_sides(50, 0);
        assert!((lhs - rhs).abs() < 1e-9);
        assert!(check_no3pm_arithmetic(50, 0));
    }

    #[test]
    fn no3pm_two_routes_agree() {
        for n in (1..=1000).step_by(37) {
            for l in 0..=n {
                let (lhs, rhs) = no3pm_sides(n, l);
                let closed = no3pm_closed_slack(n, l);
                assert!((lhs - rhs - closed).abs() <= 1e-9 * lhs.abs().max(1.0), "n={n} l={l}");
            }
        }
    }

    fn l(i: Color, j: Color, k: Color) -> Labeling {
        Labeling::new(i, j, k).unwrap()
    }

    #[test]
    fn digon_scene_examples() {
        use Color::*;
        let lab = l(One, Two, Three);
        let empty = [ColorSet::EMPTY; 4];
        let out = classify_scene(DigonShape::SameColours, lab, empty).unwrap();
        assert_eq!(out.case, DigonCase::OneA);

        let mut single_k = empty;
        single_k[0] = ColorSet::of(&[Three]);
        let out = classify_scene(DigonShape::SameColours, lab, single_k).unwrap();
        assert_eq!((out.case, out.cross_counts), (DigonCase::OneB, [0, 0, 1]));

        let mut matching_k = empty;
        matching_k[0] = ColorSet::of(&[Three]);
        matching_k[3] = ColorSet::of(&[Three]);
        assert_eq!(classify_scene(DigonShape::SameColours, lab, matching_k), Err(SceneFilter::DisjointKEdges));

        let out = classify_scene(DigonShape::SharedColour, lab, empty).unwrap();
        assert_eq!(out.case, DigonCase::TwoA);

        let mut triple = empty;
        triple[1] = ColorSet::ALL;
        assert_eq!(classify_scene(DigonShape::SharedColour, lab, triple), Err(SceneFilter::TripleColouredPair));
    }

    #[test]
    fn five_edge_shared_colour_scene() {
        use Color::*;
        // x1x3 absent, x1x4 in {i,j}, x2x3 in {i,k}, x2x4 in {i}.
        let lab = l(One, Two, Three);
        let cross = [ColorSet::EMPTY, ColorSet::of(&[One, Two]), ColorSet::of(&[One, Three]), ColorSet::of(&[One])];
        let out = classify_scene(DigonShape::SharedColour, lab, cross).unwrap();
        assert_eq!((out.case, out.cross_counts), (DigonCase::TwoB, [3, 1, 1]));
    }

    #[test]
    fn digon_enumerations_have_no_violations() {
        let case1 = enumerate_digon_case1();
        assert_eq!(case1.len(), 3);
        for r in &case1 {
            assert_eq!(r.configurations, 4096);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.cases.get(&DigonCase::OneA), Some(&256));
            assert_eq!(r.cases.get(&DigonCase::OneB), Some(&48));
            assert_eq!(r.cases.get(&DigonCase::OneC), Some(&4));
        }
        let case2 = enumerate_digon_case2();
        assert_eq!(case2.len(), 6);
        for r in &case2 {
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.cases.get(&DigonCase::TwoA), Some(&200));
            assert_eq!(r.cases.get(&DigonCase::TwoB), Some(&4));
        }
    }
}
