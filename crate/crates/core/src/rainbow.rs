//! Rainbow triangles and digons.
//!
//! A rainbow triangle is an ordered triple `(v1, v2, v3)` of distinct vertices
//! with `v1v2 ∈ E1`, `v2v3 ∈ E2` and `v3v1 ∈ E3`. Counts are over ordered
//! triples, so the all-`K3` triple on three vertices has six of them and a
//! blow-up by `k` multiplies the count by exactly `k³`.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{and_popcount, ones, Color, ColorSet, GraphTriple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RainbowWitness {
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
}

impl RainbowWitness {
    pub fn as_array(&self) -> [usize; 3] {
        [self.v1, self.v2, self.v3]
    }

    pub fn is_valid_in(&self, t: &GraphTriple) -> bool {
        let distinct = self.v1 != self.v2 && self.v2 != self.v3 && self.v1 != self.v3;
        distinct
            && t.graph(Color::One).has_edge(self.v1, self.v2)
            && t.graph(Color::Two).has_edge(self.v2, self.v3)
            && t.graph(Color::Three).has_edge(self.v3, self.v1)
    }
}

/// A pair lying in exactly two of the three edge sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digon {
    pub x: usize,
    pub y: usize,
    pub colors: ColorSet,
}

const PARALLEL_MIN_ORDER: usize = 128;

/// Ordered rainbow triangles anchored at `v1`.
fn count_from(t: &GraphTriple, v1: usize) -> u64 {
    let [g1, g2, g3] = t.graphs();
    let n3 = g3.row(v1);
    ones(g1.row(v1)).map(|v2| and_popcount(g2.row(v2), n3) as u64).sum()
}

pub fn count_rainbow_triangles(t: &GraphTriple) -> u64 {
    let n = t.order();
    if n >= PARALLEL_MIN_ORDER {
        (0..n).into_par_iter().map(|v1| count_from(t, v1)).sum()
    } else {
        (0..n).map(|v1| count_from(t, v1)).sum()
    }
}

/// Lexicographically least witness `(v1, v2, v3)`, if any.
pub fn find_rainbow_triangle(t: &GraphTriple) -> Option<RainbowWitness> {
    let [g1, g2, g3] = t.graphs();
    for v1 in 0..t.order() {
        let n3 = g3.row(v1);
        for v2 in ones(g1.row(v1)) {
            let r2 = g2.row(v2);
            for (w, (a, b)) in r2.iter().zip(n3).enumerate() {
                let both = a & b;
                if both != 0 {
                    let v3 = w * 64 + both.trailing_zeros() as usize;
                    return Some(RainbowWitness { v1, v2, v3 });
                }
            }
        }
    }
    None
}

pub fn is_rainbow_free(t: &GraphTriple) -> bool {
    find_rainbow_triangle(t).is_none()
}

pub fn min_edge_count(t: &GraphTriple) -> usize {
    t.edge_counts().into_iter().min().unwrap_or(0)
}

/// All digons, ordered by `(x, y)` with `x < y`.
pub fn list_digons(t: &GraphTriple) -> Vec<Digon> {
    let mut out = Vec::new();
    for x in 0..t.order() {
        for y in x + 1..t.order() {
            let colors = t.pair_colors(x, y);
            if colors.len() == 2 {
                out.push(Digon { x, y, colors });
            }
        }
    }
    out
}

/// Whether colours can be assigned bijectively to the three sides of a
/// triangle whose sides carry the colour sets `a`, `b` and `c`. Any such
/// assignment yields an ordered rainbow triangle on the three vertices.
pub fn sides_admit_rainbow(a: ColorSet, b: ColorSet, c: ColorSet) -> bool {
    RAINBOW_SIDES[a.bits() as usize][b.bits() as usize][c.bits() as usize]
}

const PERMUTATIONS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

const fn rainbow_sides_table() -> [[[bool; 8]; 8]; 8] {
    let mut table = [[[false; 8]; 8]; 8];
    let mut a = 0;
    while a < 8 {
        let mut b = 0;
        while b < 8 {
            let mut c = 0;
            while c < 8 {
                let mut p = 0;
                while p < 6 {
                    let [x, y, z] = PERMUTATIONS[p];
                    if (a >> x) & 1 == 1 && (b >> y) & 1 == 1 && (c >> z) & 1 == 1 {
                        table[a][b][c] = true;
                    }
                    p += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    table
}

static RAINBOW_SIDES: [[[bool; 8]; 8]; 8] = rainbow_sides_table();

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;

    fn triple(n: usize, e1: &[(usize, usize)], e2: &[(usize, usize)], e3: &[(usize, usize)]) -> GraphTriple {
        GraphTriple::new(
            SimpleGraph::from_edges(n, e1.iter().copied()).unwrap(),
            SimpleGraph::from_edges(n, e2.iter().copied()).unwrap(),
            SimpleGraph::from_edges(n, e3.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn definition_instance() {
        let t = triple(3, &[(0, 1)], &[(1, 2)], &[(0, 2)]);
        assert_eq!(find_rainbow_triangle(&t), Some(RainbowWitness { v1: 0, v2: 1, v3: 2 }));
        assert_eq!(count_rainbow_triangles(&t), 1);
    }

    #[test]
    fn identical_paths_are_rainbow_free() {
        let p = SimpleGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let t = GraphTriple::identical(p);
        assert_eq!(find_rainbow_triangle(&t), None);
        assert_eq!(count_rainbow_triangles(&t), 0);
    }

    #[test]
    fn all_k3_counts_six() {
        let t = GraphTriple::identical(SimpleGraph::complete(3).unwrap());
        assert_eq!(count_rainbow_triangles(&t), 6);
        assert_eq!(count_rainbow_triangles(&t.blow_up(2).unwrap()), 48);
    }

    #[test]
    fn empty_middle_colour_has_none() {
        let k = SimpleGraph::complete(5).unwrap();
        let t = GraphTriple::new(k.clone(), SimpleGraph::empty(5).unwrap(), k).unwrap();
        assert_eq!(count_rainbow_triangles(&t), 0);
    }

    #[test]
    fn min_edges() {
        assert_eq!(min_edge_count(&GraphTriple::empty(4).unwrap()), 0);
        assert_eq!(min_edge_count(&GraphTriple::identical(SimpleGraph::complete(4).unwrap())), 6);
    }

    #[test]
    fn digons() {
        let t = triple(4, &[(0, 1), (1, 2), (2, 3)], &[(0, 1), (2, 3)], &[(2, 3)]);
        let d = list_digons(&t);
        assert_eq!(d, vec![Digon { x: 0, y: 1, colors: ColorSet::of(&[Color::One, Color::Two]) }]);
    }

    #[test]
    fn side_table_matches_definition() {
        let one = ColorSet::of(&[Color::One]);
        let two = ColorSet::of(&[Color::Two]);
        let three = ColorSet::of(&[Color::Three]);
        assert!(sides_admit_rainbow(one, two, three));
        assert!(sides_admit_rainbow(three, one, two));
        assert!(!sides_admit_rainbow(one, one, ColorSet::ALL));
        assert!(!sides_admit_rainbow(ColorSet::EMPTY, ColorSet::ALL, ColorSet::ALL));
        assert!(sides_admit_rainbow(ColorSet::ALL, ColorSet::ALL, ColorSet::ALL));
    }
}
