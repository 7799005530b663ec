use std::time::Instant;

use crate::graph::{ColorSet, GraphTriple};

use super::{SearchError, SearchOutcome};

pub const EXHAUSTIVE_MAX_ORDER: usize = 4;

/// Raw enumeration of all `8^C(n,2)` triples, `n ≤ 4`.
///
/// Mask sequences are visited in lexicographic order and only a strictly
/// better value replaces the incumbent, so the witness is the least optimal
/// sequence. Rainbow-freeness is tested by a direct loop over ordered
/// vertex triples.
pub fn exhaustive_r(n: usize) -> Result<SearchOutcome, SearchError> {
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(SearchError::TooLarge { n, max: EXHAUSTIVE_MAX_ORDER });
    }
    let start = Instant::now();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let p = pairs.len();
    let total = 1u64 << (3 * p);

    let mut best: Option<(usize, u64)> = None;
    let mut adj = [[[false; EXHAUSTIVE_MAX_ORDER]; EXHAUSTIVE_MAX_ORDER]; 3];
    for code in 0..total {
        let mut counts = [0usize; 3];
        for (idx, &(u, v)) in pairs.iter().enumerate() {
            let mask = (code >> (3 * (p - 1 - idx))) & 7;
            for (c, colour) in adj.iter_mut().enumerate() {
                let on = (mask >> c) & 1 == 1;
                colour[u][v] = on;
                colour[v][u] = on;
                counts[c] += on as usize;
            }
        }
        let value = counts.into_iter().min().unwrap_or(0);
        if best.is_some_and(|(b, _)| value <= b) {
            continue;
        }
        let mut rainbow = false;
        'outer: for v1 in 0..n {
            for v2 in 0..n {
                for v3 in 0..n {
                    if v1 != v2 && v2 != v3 && v1 != v3 && adj[0][v1][v2] && adj[1][v2][v3] && adj[2][v3][v1] {
                        rainbow = true;
                        break 'outer;
                    }
                }
            }
        }
        if !rainbow {
            best = Some((value, code));
        }
    }

    let (value, code) = best.unwrap_or((0, 0));
    let masks: Vec<ColorSet> =
        (0..p).map(|idx| ColorSet::from_bits(((code >> (3 * (p - 1 - idx))) & 7) as u8)).collect();
    let witness = GraphTriple::from_pair_masks(n, &masks)?;
    SearchOutcome::verified(n, value, true, witness, total, start.elapsed())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_values() {
        assert_eq!(exhaustive_r(0).unwrap().value, 0);
        assert_eq!(exhaustive_r(1).unwrap().value, 0);
        let two = exhaustive_r(2).unwrap();
        assert_eq!(two.value, 1);
        assert_eq!(two.witness.pair_masks(), vec![ColorSet::ALL]);
        let three = exhaustive_r(3).unwrap();
        assert_eq!(three.value, 2);
        assert!(three.exact);
    }

    #[test]
    fn rejects_large_orders() {
        assert!(matches!(exhaustive_r(5), Err(SearchError::TooLarge { n: 5, max: 4 })));
    }
}
