//! Fan and star detection.
//!
//! A graph contains the fan `F_k` exactly when some vertex `v` has
//! `ν(G[N(v)]) ≥ k`, so detection is one matching computation per vertex and
//! is exact.

mod extension;

pub use extension::{
    extension_matching, fan_extend, ExtensionCase, ExtensionRoute, FanExtension,
    FanExtensionInstance,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, Graph, MultipartiteSpec, TwoColoring};
use crate::matching::max_matching;

/// A centre joined to every endpoint of `spokes.len()` disjoint edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FanWitness {
    pub center: usize,
    pub spokes: Vec<(usize, usize)>,
}

impl FanWitness {
    pub fn size(&self) -> usize {
        self.spokes.len()
    }

    /// Structural check in `g`: `2k + 1` distinct vertices, the centre
    /// adjacent to every spoke endpoint, every spoke an edge.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut seen = vec![false; g.n()];
        let mut mark = |v: usize| -> std::result::Result<(), String> {
            if v >= g.n() {
                return Err(format!("vertex {v} out of range"));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {v} used twice"));
            }
            Ok(())
        };
        mark(self.center)?;
        for &(u, w) in &self.spokes {
            mark(u)?;
            mark(w)?;
            if !g.has_edge(u, w) {
                return Err(format!("spoke {u}-{w} is not an edge"));
            }
            for x in [u, w] {
                if !g.has_edge(self.center, x) {
                    return Err(format!("centre {} not adjacent to {x}", self.center));
                }
            }
        }
        Ok(())
    }
}

/// Size of the largest matching inside `N(v)`.
pub fn neighborhood_matching(g: &Graph, v: usize) -> crate::matching::Matching {
    let hood = g.neighbors(v);
    let (local, map) = g.induced(hood).expect("neighbours are in range");
    let m = max_matching(&local);
    crate::matching::Matching::new(m.edges().iter().map(|&(a, b)| (map[a], map[b])))
}

/// Largest `k` such that `g` contains `F_k` (0 if triangle-free).
pub fn fan_number(g: &Graph) -> usize {
    (0..g.n())
        .map(|v| neighborhood_matching(g, v).size())
        .max()
        .unwrap_or(0)
}

/// Finds a copy of `F_k`. Vertices are tried by descending degree (ties by
/// id); those with degree below `2k` are skipped.
pub fn find_fan(g: &Graph, k: usize) -> Option<FanWitness> {
    assert!(k >= 1, "fan size must be positive");
    let mut order: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 2 * k).collect();
    order.sort_by(|&u, &v| g.degree(v).cmp(&g.degree(u)).then(u.cmp(&v)));
    for v in order {
        let m = neighborhood_matching(g, v);
        if m.size() >= k {
            let witness = FanWitness {
                center: v,
                spokes: m.edges()[..k].to_vec(),
            };
            debug_assert!(witness.validate(g).is_ok());
            return Some(witness);
        }
    }
    None
}

/// Looks for a monochromatic `F_n`, red first.
pub fn find_mono_fan(coloring: &TwoColoring, n: usize) -> Option<(Color, FanWitness)> {
    [Color::Red, Color::Blue]
        .into_iter()
        .find_map(|c| find_fan(&coloring.graph(c), n).map(|w| (c, w)))
}

/// Vertex of maximum blue degree (lowest id on ties). A blue `K_{1,m}`
/// exists iff the degree is at least `m`.
pub fn max_blue_star(coloring: &TwoColoring) -> Option<(usize, usize)> {
    (0..coloring.n())
        .map(|v| (v, coloring.degree(v, Color::Blue)))
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
}

/// Number of vertices covered by a maximum matching of the complete
/// multipartite graph with the given parts.
pub fn multipartite_matching_bound(spec: &MultipartiteSpec) -> Result<usize> {
    let t = spec.parts();
    if t < 2 {
        return Err(Error::InvalidPartition(format!(
            "need at least two parts, got {t}"
        )));
    }
    let total = spec.order();
    let largest = spec.largest();
    Ok(if t == 2 {
        2 * spec.part_sizes()[0]
    } else if 2 * largest <= total {
        2 * (total / 2)
    } else {
        2 * (total - largest)
    })
}

/// A maximum matching of the complete multipartite graph whose parts are
/// the given vertex lists: repeatedly pair a vertex of the largest remaining
/// part with one of the second largest.
pub fn multipartite_matching(parts: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut pools: Vec<Vec<usize>> = parts
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.sort_unstable_by(|a, b| b.cmp(a));
            p
        })
        .collect();
    let mut out = Vec::new();
    loop {
        let mut idx: Vec<usize> = (0..pools.len()).filter(|&i| !pools[i].is_empty()).collect();
        if idx.len() < 2 {
            return out;
        }
        idx.sort_by(|&i, &j| pools[j].len().cmp(&pools[i].len()).then(i.cmp(&j)));
        let u = pools[idx[0]].pop().expect("non-empty");
        let w = pools[idx[1]].pop().expect("non-empty");
        out.push((u.min(w), u.max(w)));
    }
}

/// Vertex limit for [`cycle_oracle`].
pub const CYCLE_LIMIT: usize = 12;

/// Whether `g` has a cycle of length exactly `len`, by exhaustive
/// backtracking from each possible least vertex of the cycle.
pub fn cycle_oracle(g: &Graph, len: usize) -> Result<bool> {
    let n = g.n();
    if n > CYCLE_LIMIT {
        return Err(Error::SizeGuard {
            n,
            limit: CYCLE_LIMIT,
        });
    }
    if len < 3 || len > n {
        return Ok(false);
    }

    fn extend(g: &Graph, start: usize, v: usize, depth: usize, len: usize, used: &mut u32) -> bool {
        if depth == len {
            return g.has_edge(v, start);
        }
        for &u in g.neighbors(v) {
            if u > start && *used & (1 << u) == 0 {
                *used |= 1 << u;
                let found = extend(g, start, u, depth + 1, len, used);
                *used &= !(1 << u);
                if found {
                    return true;
                }
            }
        }
        false
    }

    Ok((0..n).any(|s| {
        let mut used = 1u32 << s;
        extend(g, s, s, 1, len, &mut used)
    }))
}

/// Result of [`high_degree_fan`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum HighDegreeOutcome {
    /// No vertex has monochromatic degree at least `3n`.
    Inapplicable,
    Found {
        color: Color,
        witness: FanWitness,
        /// Vertex whose large monochromatic neighbourhood produced the fan,
        /// or `None` if it came from the global fallback.
        source: Option<usize>,
    },
    /// Precondition held but no fan was found. A monochromatic `F_n` always
    /// exists in this situation, so this variant indicates a bug.
    Missed,
}

/// Monochromatic `F_n` search driven by a vertex with monochromatic degree
/// at least `3n`.
///
/// For each such `(v, colour)`: if `N(v)` holds a same-colour matching of
/// size `n` the fan is centred at `v`; otherwise the search is repeated
/// inside the colouring induced on `N(v)`.
pub fn high_degree_fan(coloring: &TwoColoring, n: usize) -> HighDegreeOutcome {
    let mut applicable = false;
    for v in 0..coloring.n() {
        for color in [Color::Red, Color::Blue] {
            if coloring.degree(v, color) < 3 * n {
                continue;
            }
            applicable = true;
            let hood = coloring.neighbors(v, color);
            let local = coloring.induced(&hood).expect("neighbours in range");
            let lg = local.graph(color);
            let m = max_matching(&lg);
            if m.size() >= n {
                let witness = FanWitness {
                    center: v,
                    spokes: m.edges()[..n]
                        .iter()
                        .map(|&(a, b)| (hood[a], hood[b]))
                        .collect(),
                };
                return HighDegreeOutcome::Found {
                    color,
                    witness,
                    source: Some(v),
                };
            }
            if let Some((c, w)) = find_mono_fan(&local, n) {
                let witness = FanWitness {
                    center: hood[w.center],
                    spokes: w.spokes.iter().map(|&(a, b)| (hood[a], hood[b])).collect(),
                };
                return HighDegreeOutcome::Found {
                    color: c,
                    witness,
                    source: Some(v),
                };
            }
        }
    }
    if !applicable {
        return HighDegreeOutcome::Inapplicable;
    }
    match find_mono_fan(coloring, n) {
        Some((color, witness)) => HighDegreeOutcome::Found {
            color,
            witness,
            source: None,
        },
        None => HighDegreeOutcome::Missed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_complete_multipartite;

    #[test]
    fn find_fan_examples() {
        let k5 = Graph::complete(5);
        let w = find_fan(&k5, 2).unwrap();
        w.validate(&k5).unwrap();
        assert_eq!(w.size(), 2);
        assert!(find_fan(&Graph::cycle(5), 1).is_none());
        assert!(find_fan(&k5, 3).is_none());
    }

    #[test]
    fn witness_validation_catches_errors() {
        let g = Graph::complete(5);
        let bad = FanWitness {
            center: 0,
            spokes: vec![(1, 2), (2, 3)],
        };
        assert!(bad.validate(&g).is_err());
        let bad = FanWitness {
            center: 0,
            spokes: vec![(0, 1)],
        };
        assert!(bad.validate(&g).is_err());
        let p = Graph::path(3);
        let bad = FanWitness {
            center: 0,
            spokes: vec![(1, 2)],
        };
        assert!(bad.validate(&p).is_err());
    }

    #[test]
    fn mono_fan_examples() {
        let all_red = TwoColoring::all(7, Color::Red);
        let (c, w) = find_mono_fan(&all_red, 3).unwrap();
        assert_eq!(c, Color::Red);
        w.validate(all_red.red()).unwrap();
        let all_blue = TwoColoring::all(5, Color::Blue);
        let (c, _) = find_mono_fan(&all_blue, 2).unwrap();
        assert_eq!(c, Color::Blue);
    }

    #[test]
    fn blue_star_examples() {
        assert_eq!(
            max_blue_star(&TwoColoring::all(5, Color::Red)),
            Some((0, 0))
        );
        assert_eq!(
            max_blue_star(&TwoColoring::all(5, Color::Blue)),
            Some((0, 4))
        );
        assert_eq!(max_blue_star(&TwoColoring::all(0, Color::Blue)), None);
    }

    #[test]
    fn matching_bound_examples() {
        let b =
            |s: &[usize]| multipartite_matching_bound(&MultipartiteSpec::new(s.to_vec()).unwrap());
        assert_eq!(b(&[2, 2, 2]).unwrap(), 6);
        assert_eq!(b(&[1, 1, 4]).unwrap(), 4);
        assert_eq!(b(&[2, 3]).unwrap(), 4);
        assert!(b(&[5]).is_err());
    }

    #[test]
    fn greedy_multipartite_matching_is_maximum() {
        for sizes in [
            vec![1, 1, 4],
            vec![2, 2, 2],
            vec![3, 3, 3, 1],
            vec![2, 5],
            vec![1, 2, 2, 7],
        ] {
            let spec = MultipartiteSpec::new(sizes).unwrap();
            let parts: Vec<Vec<usize>> = spec.blocks().into_iter().map(|r| r.collect()).collect();
            let m = multipartite_matching(&parts);
            let g = build_complete_multipartite(&spec);
            crate::matching::Matching::new(m.iter().copied())
                .validate(&g)
                .unwrap();
            assert_eq!(2 * m.len(), multipartite_matching_bound(&spec).unwrap());
        }
    }

    #[test]
    fn cycle_oracle_examples() {
        assert!(cycle_oracle(&Graph::complete(4), 3).unwrap());
        assert!(!cycle_oracle(&Graph::complete_bipartite(3, 3), 5).unwrap());
        assert!(cycle_oracle(&Graph::complete_bipartite(3, 3), 6).unwrap());
        let g = build_complete_multipartite(&MultipartiteSpec::new(vec![2, 2, 2]).unwrap());
        for len in 3..=6 {
            assert!(cycle_oracle(&g, len).unwrap(), "length {len}");
        }
        assert!(!cycle_oracle(&Graph::petersen(), 3).unwrap());
        assert!(cycle_oracle(&Graph::petersen(), 5).unwrap());
        assert!(cycle_oracle(&Graph::empty(13), 3).is_err());
    }

    #[test]
    fn high_degree_examples() {
        let k = TwoColoring::all(7, Color::Red);
        match high_degree_fan(&k, 2) {
            HighDegreeOutcome::Found { color, witness, .. } => {
                assert_eq!(color, Color::Red);
                witness.validate(k.red()).unwrap();
            }
            other => panic!("unexpected {other:?}"),
        }
        let c5 = TwoColoring::from_red(Graph::cycle(5));
        assert_eq!(high_degree_fan(&c5, 1), HighDegreeOutcome::Inapplicable);
    }
}
