//! Bit-row graphs, graph triples and vertex subsets.
//!
//! Every adjacency row is a fixed-width slice of `u64` words, so subset edge
//! counts, common neighbourhoods and rainbow-triangle counts all reduce to
//! word-wise AND followed by popcount.

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices a graph may carry (64 words per row).
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{requested} vertices exceeds the budget of {max}")]
    TooManyVertices { requested: usize, max: usize },
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("vertex sets do not partition the vertex set")]
    NotAPartition,
    #[error("vertex set over {found} vertices applied to a graph on {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("graphs of a triple must share their order, got {0:?}")]
    OrderMismatch([usize; 3]),
    #[error("blow-up factor must be positive")]
    ZeroBlowUpFactor,
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn test_bit(row: &[u64], i: usize) -> bool {
    (row[i >> 6] >> (i & 63)) & 1 == 1
}

#[inline]
pub(crate) fn and_popcount(x: &[u64], y: &[u64]) -> u32 {
    x.iter().zip(y).map(|(a, b)| (a & b).count_ones()).sum()
}

/// Iterates the set bits of a row in increasing order.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let tz = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(w * 64 + tz)
        })
    })
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { requested: n, max: MAX_VERTICES });
    }
    Ok(())
}

/// A subset of `0..n` stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self { n, words: vec![0; words_for(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for v in 0..n {
            set.words[v >> 6] |= 1 << (v & 63);
        }
        set
    }

    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(n);
        for v in vertices {
            set.insert(v)?;
        }
        Ok(set)
    }

    /// Builds the set whose members are the set bits of `mask` (n ≤ 64).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 64);
        let mut set = Self::empty(n);
        if n > 0 {
            let keep = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            set.words[0] = mask & keep;
        }
        set
    }

    pub fn insert(&mut self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        self.words[v >> 6] |= 1 << (v & 63);
        Ok(())
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && test_bit(&self.words, v)
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn complement(&self) -> Self {
        let full = Self::full(self.n);
        let words = self.words.iter().zip(&full.words).map(|(a, f)| !a & f).collect();
        Self { n: self.n, words }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        ones(&self.words)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An undirected loopless graph on `0..n` with bit-row adjacency.
///
/// Graphs are immutable once built; use [`GraphBuilder`] to construct them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v)?;
            }
        }
        Ok(b.build())
    }

    /// `K_{left,right}` with parts `0..left` and `left..left+right`.
    pub fn complete_bipartite(left: usize, right: usize) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(left + right)?;
        for u in 0..left {
            for v in left..left + right {
                b.add_edge(u, v)?;
            }
        }
        Ok(b.build())
    }

    /// The cycle `0-1-...-(n-1)-0`; for `n < 3` this is a path.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for v in 1..n {
            b.add_edge(v - 1, v)?;
        }
        if n >= 3 {
            b.add_edge(n - 1, 0)?;
        }
        Ok(b.build())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Decodes a graph on `n ≤ 11` vertices from a bitmask over the pairs
    /// `(u, v)`, `u < v`, in lexicographic order.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let mut b = GraphBuilder::new(n).expect("small graph");
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if (mask >> bit) & 1 == 1 {
                    b.add_edge(u, v).expect("valid pair");
                }
                bit += 1;
            }
        }
        b.build()
    }

    /// A copy of this graph with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::from_graph(self);
        b.add_edge(u, v)?;
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Number of `u64` words per adjacency row.
    pub fn row_words(&self) -> usize {
        self.words
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && test_bit(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(v))
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn check_universe(&self, x: &VertexSet) -> Result<(), GraphError> {
        if x.universe() != self.n {
            return Err(GraphError::UniverseMismatch { expected: self.n, found: x.universe() });
        }
        Ok(())
    }

    /// `e(X)`: edges with both ends in `x`.
    pub fn edges_within(&self, x: &VertexSet) -> Result<usize, GraphError> {
        self.check_universe(x)?;
        let twice: u32 = x.iter().map(|v| and_popcount(self.row(v), x.words())).sum();
        Ok(twice as usize / 2)
    }

    /// `e(X, Y)` for disjoint `x` and `y`.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> Result<usize, GraphError> {
        self.check_universe(x)?;
        self.check_universe(y)?;
        if !x.is_disjoint(y) {
            return Err(GraphError::OverlappingSets);
        }
        Ok(x.iter().map(|v| and_popcount(self.row(v), y.words()) as usize).sum())
    }

    /// Greedy maximal matching, scanning edges in lexicographic order.
    pub fn greedy_maximal_matching(&self) -> Vec<(usize, usize)> {
        let mut matched = vec![false; self.n];
        let mut matching = Vec::new();
        for (u, v) in self.edges() {
            if !matched[u] && !matched[v] {
                matched[u] = true;
                matched[v] = true;
                matching.push((u, v));
            }
        }
        matching
    }

    /// Number of unordered pairs `{x, y}` of distinct vertices with a common
    /// neighbour, whether or not `x` and `y` are adjacent.
    pub fn common_neighbor_pairs(&self) -> usize {
        let mut count = 0;
        for x in 0..self.n {
            let rx = self.row(x);
            for y in x + 1..self.n {
                if rx.iter().zip(self.row(y)).any(|(a, b)| a & b != 0) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of triangles, each counted once.
    pub fn triangle_count(&self) -> u64 {
        let mut twice_per_edge = 0u64;
        for (u, v) in self.edges() {
            twice_per_edge += and_popcount(self.row(u), self.row(v)) as u64;
        }
        twice_per_edge / 3
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| and_popcount(self.row(u), self.row(v)) == 0)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// Single-owner mutable stage for building a [`SimpleGraph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        let words = words_for(n);
        Ok(Self { n, words, rows: vec![0; n * words] })
    }

    pub fn from_graph(g: &SimpleGraph) -> Self {
        Self { n: g.n, words: g.words, rows: g.rows.clone() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.check_pair(u, v)?;
        self.rows[u * self.words + (v >> 6)] |= 1 << (v & 63);
        self.rows[v * self.words + (u >> 6)] |= 1 << (u & 63);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.check_pair(u, v)?;
        self.rows[u * self.words + (v >> 6)] &= !(1 << (v & 63));
        self.rows[v * self.words + (u >> 6)] &= !(1 << (u & 63));
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && test_bit(&self.rows[u * self.words..(u + 1) * self.words], v)
    }

    pub fn build(self) -> SimpleGraph {
        let twice: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        SimpleGraph { n: self.n, words: self.words, rows: self.rows, edges: twice / 2 }
    }
}

/// One of the three edge colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    One,
    Two,
    Three,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::One, Color::Two, Color::Three];

    /// Zero-based index.
    pub fn index(self) -> usize {
        self as usize
    }

    /// Colour numbered `1`, `2` or `3`.
    pub fn from_number(c: usize) -> Option<Color> {
        match c {
            1 => Some(Color::One),
            2 => Some(Color::Two),
            3 => Some(Color::Three),
            _ => None,
        }
    }

    pub fn number(self) -> usize {
        self.index() + 1
    }

    pub fn bit(self) -> u8 {
        1 << self.index()
    }
}

/// A subset of the three colours, bit `i` standing for colour `i + 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const ALL: ColorSet = ColorSet(0b111);

    pub fn from_bits(bits: u8) -> Self {
        ColorSet(bits & 0b111)
    }

    pub fn of(colors: &[Color]) -> Self {
        ColorSet(colors.iter().fold(0, |m, c| m | c.bit()))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & c.bit() != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |&c| self.contains(c))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.iter().map(|c| c.number().to_string()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Three simple graphs on a common vertex set, one per colour.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GraphTriple {
    n: usize,
    graphs: [SimpleGraph; 3],
}

impl GraphTriple {
    pub fn new(g1: SimpleGraph, g2: SimpleGraph, g3: SimpleGraph) -> Result<Self, GraphError> {
        let orders = [g1.order(), g2.order(), g3.order()];
        if orders[0] != orders[1] || orders[1] != orders[2] {
            return Err(GraphError::OrderMismatch(orders));
        }
        Ok(Self { n: orders[0], graphs: [g1, g2, g3] })
    }

    /// The same graph in all three colours.
    pub fn identical(g: SimpleGraph) -> Self {
        Self { n: g.order(), graphs: [g.clone(), g.clone(), g] }
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Ok(Self::identical(SimpleGraph::empty(n)?))
    }

    /// Builds a triple from per-pair colour masks listed in lexicographic
    /// pair order `(0,1), (0,2), ..., (n-2,n-1)`.
    pub fn from_pair_masks(n: usize, masks: &[ColorSet]) -> Result<Self, GraphError> {
        let mut b = TripleBuilder::new(n)?;
        let mut it = masks.iter();
        for u in 0..n {
            for v in u + 1..n {
                let m = it.next().copied().unwrap_or_default();
                b.set_colors(u, v, m)?;
            }
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn graph(&self, c: Color) -> &SimpleGraph {
        &self.graphs[c.index()]
    }

    pub fn graphs(&self) -> &[SimpleGraph; 3] {
        &self.graphs
    }

    pub fn edge_counts(&self) -> [usize; 3] {
        [self.graphs[0].edge_count(), self.graphs[1].edge_count(), self.graphs[2].edge_count()]
    }

    /// Colours in which `{u, v}` is an edge.
    pub fn pair_colors(&self, u: usize, v: usize) -> ColorSet {
        ColorSet::from_bits(
            Color::ALL.iter().fold(0, |m, &c| if self.graph(c).has_edge(u, v) { m | c.bit() } else { m }),
        )
    }

    /// Per-pair colour masks in lexicographic pair order.
    pub fn pair_masks(&self) -> Vec<ColorSet> {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                out.push(self.pair_colors(u, v));
            }
        }
        out
    }

    /// `(G1, G2, G3) -> (G2, G3, G1)`.
    pub fn rotate(&self) -> Self {
        let [g1, g2, g3] = self.graphs.clone();
        Self { n: self.n, graphs: [g2, g3, g1] }
    }

    /// Replaces every vertex `v` by `k` independent clones `v*k .. v*k+k` and
    /// every edge `uv` of each colour by all `k²` edges between the clone sets.
    pub fn blow_up(&self, k: usize) -> Result<Self, GraphError> {
        if k == 0 {
            return Err(GraphError::ZeroBlowUpFactor);
        }
        let big = self
            .n
            .checked_mul(k)
            .filter(|&m| m <= MAX_VERTICES)
            .ok_or(GraphError::TooManyVertices { requested: self.n.saturating_mul(k), max: MAX_VERTICES })?;
        let mut out = TripleBuilder::new(big)?;
        for c in Color::ALL {
            for (u, v) in self.graph(c).edges() {
                for i in 0..k {
                    for j in 0..k {
                        out.add_edge(c, u * k + i, v * k + j)?;
                    }
                }
            }
        }
        Ok(out.build())
    }

    /// Each pair is an edge of each colour independently with probability `p`.
    pub fn random(n: usize, p: f64, rng: &mut impl rand::Rng) -> Result<Self, GraphError> {
        let mut out = TripleBuilder::new(n)?;
        for c in Color::ALL {
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        out.add_edge(c, u, v)?;
                    }
                }
            }
        }
        Ok(out.build())
    }
}

/// Mutable stage for a [`GraphTriple`].
#[derive(Clone, Debug)]
pub struct TripleBuilder {
    builders: [GraphBuilder; 3],
}

impl TripleBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        let b = GraphBuilder::new(n)?;
        Ok(Self { builders: [b.clone(), b.clone(), b] })
    }

    pub fn order(&self) -> usize {
        self.builders[0].order()
    }

    pub fn add_edge(&mut self, c: Color, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.builders[c.index()].add_edge(u, v)?;
        Ok(self)
    }

    /// Makes `{u, v}` an edge in exactly the colours of `colors`.
    pub fn set_colors(&mut self, u: usize, v: usize, colors: ColorSet) -> Result<&mut Self, GraphError> {
        for c in Color::ALL {
            if colors.contains(c) {
                self.builders[c.index()].add_edge(u, v)?;
            } else {
                self.builders[c.index()].remove_edge(u, v)?;
            }
        }
        Ok(self)
    }

    pub fn build(self) -> GraphTriple {
        let [a, b, c] = self.builders;
        let n = a.order();
        GraphTriple { n, graphs: [a.build(), b.build(), c.build()] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn add_edge_counts_and_is_idempotent() {
        let g = SimpleGraph::empty(3).unwrap();
        let g = g.with_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), 1);
        let g = g.with_edge(0, 1).unwrap().with_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn add_edge_rejects_loops_and_out_of_range() {
        let g = SimpleGraph::empty(3).unwrap();
        assert_eq!(g.with_edge(2, 2), Err(GraphError::SelfLoop(2)));
        assert_eq!(g.with_edge(0, 3), Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 }));
        assert!(matches!(GraphBuilder::new(MAX_VERTICES + 1), Err(GraphError::TooManyVertices { .. })));
    }

    #[test]
    fn subset_counts() {
        let k4 = SimpleGraph::complete(4).unwrap();
        assert_eq!(k4.edges_within(&VertexSet::full(4)).unwrap(), 6);
        assert_eq!(k4.edges_within(&VertexSet::empty(4)).unwrap(), 0);
        assert_eq!(k4.edges_between(&set(4, &[0, 1]), &set(4, &[2, 3])).unwrap(), 4);

        let c5 = SimpleGraph::cycle(5).unwrap();
        assert_eq!(c5.edges_within(&set(5, &[0, 1, 2])).unwrap(), 2);
        assert_eq!(c5.edges_between(&set(5, &[0, 1]), &set(5, &[2, 3])).unwrap(), 1);

        let e = SimpleGraph::empty(6).unwrap();
        assert_eq!(e.edges_between(&set(6, &[0, 5]), &set(6, &[1, 2, 3])).unwrap(), 0);
    }

    #[test]
    fn subset_count_errors() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        assert_eq!(c5.edges_between(&set(5, &[0, 1]), &set(5, &[1, 2])), Err(GraphError::OverlappingSets));
        assert!(matches!(c5.edges_within(&VertexSet::full(4)), Err(GraphError::UniverseMismatch { .. })));
    }

    #[test]
    fn matchings() {
        assert!(SimpleGraph::empty(4).unwrap().greedy_maximal_matching().is_empty());
        assert_eq!(SimpleGraph::complete(3).unwrap().greedy_maximal_matching(), vec![(0, 1)]);
        assert_eq!(SimpleGraph::cycle(4).unwrap().greedy_maximal_matching(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn common_neighbour_pairs() {
        assert_eq!(SimpleGraph::cycle(4).unwrap().common_neighbor_pairs(), 2);
        assert_eq!(SimpleGraph::complete(3).unwrap().common_neighbor_pairs(), 3);
        assert_eq!(SimpleGraph::empty(5).unwrap().common_neighbor_pairs(), 0);
    }

    #[test]
    fn degenerate_orders() {
        for n in [0, 1] {
            let g = SimpleGraph::complete(n).unwrap();
            assert_eq!(g.edge_count(), 0);
            assert_eq!(g.common_neighbor_pairs(), 0);
            assert!(g.greedy_maximal_matching().is_empty());
            assert_eq!(g.edges_within(&VertexSet::full(n)).unwrap(), 0);
        }
    }

    #[test]
    fn triangles() {
        assert_eq!(SimpleGraph::complete(4).unwrap().triangle_count(), 4);
        assert!(SimpleGraph::complete_bipartite(3, 3).unwrap().is_triangle_free());
        assert!(!SimpleGraph::complete(3).unwrap().is_triangle_free());
    }

    #[test]
    fn wide_rows() {
        let mut b = GraphBuilder::new(200).unwrap();
        b.add_edge(3, 150).unwrap().add_edge(150, 199).unwrap().add_edge(3, 199).unwrap();
        let g = b.build();
        assert_eq!(g.row_words(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(3, 150), (3, 199), (150, 199)]);
        assert_eq!(g.triangle_count(), 1);
        assert_eq!(g.edges_within(&set(200, &[3, 150, 199])).unwrap(), 3);
    }

    #[test]
    fn triple_requires_common_order() {
        let r = GraphTriple::new(
            SimpleGraph::empty(3).unwrap(),
            SimpleGraph::empty(3).unwrap(),
            SimpleGraph::empty(4).unwrap(),
        );
        assert_eq!(r, Err(GraphError::OrderMismatch([3, 3, 4])));
    }

    #[test]
    fn blow_up_single_edge() {
        let g1 = SimpleGraph::from_edges(2, [(0, 1)]).unwrap();
        let e = SimpleGraph::empty(2).unwrap();
        let t = GraphTriple::new(g1, e.clone(), e).unwrap();
        let b = t.blow_up(3).unwrap();
        assert_eq!(b.order(), 6);
        assert_eq!(b.edge_counts(), [9, 0, 0]);
        assert_eq!(t.blow_up(1).unwrap(), t);
        assert_eq!(t.blow_up(0), Err(GraphError::ZeroBlowUpFactor));
        assert!(matches!(t.blow_up(MAX_VERTICES), Err(GraphError::TooManyVertices { .. })));
    }

    #[test]
    fn pair_masks_round_trip() {
        let masks: Vec<ColorSet> = (0..6u8).map(ColorSet::from_bits).collect();
        let t = GraphTriple::from_pair_masks(4, &masks).unwrap();
        assert_eq!(t.pair_masks(), masks);
        assert_eq!(t.pair_colors(2, 3), ColorSet::from_bits(5));
        assert_eq!(ColorSet::from_bits(5).to_string(), "{1,3}");
    }
}
