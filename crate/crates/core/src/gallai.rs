//! Edmonds–Gallai decomposition and the structure it forces inside a
//! monochromatic neighbourhood.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Color, Graph, TwoColoring};
use crate::matching::{max_matching, Matching};

/// The canonical partition `{A, C, D_1, …, D_p}` of a graph.
///
/// `d` lists the odd components of `G − A`, each sorted, ordered by least
/// vertex. `a` or `c` may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EgPartition {
    pub a: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<Vec<usize>>,
    pub p: usize,
    pub deficiency: usize,
    pub nu: usize,
}

/// Computes the decomposition with the essential-vertex characterisation:
/// `D` is the set of vertices missed by some maximum matching, i.e. those
/// with `ν(G − v) = ν(G)`; `A = N(D) ∖ D`; `C` is everything else.
pub fn edmonds_gallai(g: &Graph) -> EgPartition {
    let n = g.n();
    let m = max_matching(g);
    let nu = m.size();
    let mate = m.mates(n);
    let mut in_d = vec![false; n];
    let others: Vec<usize> = (0..n).collect();
    for v in 0..n {
        in_d[v] = if mate[v].is_none() {
            true
        } else {
            let rest: Vec<usize> = others.iter().copied().filter(|&u| u != v).collect();
            let (sub, _) = g.induced(&rest).expect("ids in range");
            max_matching(&sub).size() == nu
        };
    }
    let mut in_a = vec![false; n];
    for v in (0..n).filter(|&v| in_d[v]) {
        for &u in g.neighbors(v) {
            if !in_d[u] {
                in_a[u] = true;
            }
        }
    }
    let a: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
    let c: Vec<usize> = (0..n).filter(|&v| !in_a[v] && !in_d[v]).collect();
    let d = g.components_within(&in_d);
    EgPartition {
        p: d.len(),
        deficiency: n - 2 * nu,
        nu,
        a,
        c,
        d,
    }
}

impl EgPartition {
    /// Checks the partition against one maximum matching `m` of `g`:
    /// `A`, `C`, `D_i` partition the vertices, the `D_i` are the odd
    /// components and `C` the even ones of `G − A`, `m` is perfect on `C`,
    /// matches `A` into distinct odd components, is near-perfect on each
    /// `D_i`, and the two counting identities hold.
    pub fn check(&self, g: &Graph, m: &Matching) -> std::result::Result<(), String> {
        let n = g.n();
        // 0 = A, 1 = C, 2 + i = D_i
        let mut block = vec![usize::MAX; n];
        let mut assign = |v: usize, b: usize| -> std::result::Result<(), String> {
            if v >= n || block[v] != usize::MAX {
                return Err(format!("vertex {v} missing or repeated"));
            }
            block[v] = b;
            Ok(())
        };
        for &v in &self.a {
            assign(v, 0)?;
        }
        for &v in &self.c {
            assign(v, 1)?;
        }
        for (i, comp) in self.d.iter().enumerate() {
            for &v in comp {
                assign(v, 2 + i)?;
            }
        }
        if block.contains(&usize::MAX) {
            return Err("sets do not cover every vertex".into());
        }
        if self.p != self.d.len() {
            return Err("p disagrees with the number of odd components".into());
        }
        let not_a: Vec<bool> = block.iter().map(|&b| b != 0).collect();
        for comp in g.components_within(&not_a) {
            let b = block[comp[0]];
            if comp.iter().any(|&v| block[v] != b) {
                return Err(format!("component {comp:?} straddles blocks"));
            }
            if b == 1 && comp.len() % 2 == 1 {
                return Err(format!("odd component {comp:?} inside C"));
            }
            if b >= 2 && self.d[b - 2] != comp {
                return Err(format!("D_{} is not a component of G - A", b - 2));
            }
        }
        if self.d.iter().any(|comp| comp.len() % 2 == 0) {
            return Err("even D_i".into());
        }
        if m.size() != self.nu {
            return Err("matching is not maximum".into());
        }
        let mate = m.mates(n);
        for &v in &self.c {
            match mate[v] {
                Some(u) if block[u] == 1 => {}
                _ => return Err(format!("C vertex {v} not matched inside C")),
            }
        }
        let mut hit = vec![false; self.d.len()];
        for &v in &self.a {
            match mate[v] {
                Some(u) if block[u] >= 2 => {
                    if std::mem::replace(&mut hit[block[u] - 2], true) {
                        return Err(format!("two A vertices matched into D_{}", block[u] - 2));
                    }
                }
                _ => return Err(format!("A vertex {v} not matched into an odd component")),
            }
        }
        for (i, comp) in self.d.iter().enumerate() {
            let inner = comp
                .iter()
                .filter(|&&v| mate[v].is_some_and(|u| block[u] == 2 + i))
                .count();
            if inner != comp.len() - 1 {
                return Err(format!("matching not near-perfect on D_{i}"));
            }
        }
        if self.p != self.a.len() + self.deficiency {
            return Err("p != |A| + def(G)".into());
        }
        let sum: usize = self.d.iter().map(|comp| comp.len() - 1).sum();
        if 2 * self.nu != 2 * self.a.len() + self.c.len() + sum {
            return Err("ν != |A| + (|C| + Σ(|D_i| - 1)) / 2".into());
        }
        if self.deficiency + 2 * self.nu != n {
            return Err("deficiency != |V| - 2ν".into());
        }
        Ok(())
    }
}

/// Result of analysing `G_χ[N_χ(v)]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum NeighborhoodOutcome {
    /// The neighbourhood already holds a matching of size `n`, so the
    /// structural facts are not claimed.
    Inapplicable {
        nu: usize,
        n: usize,
    },
    Applicable(NeighborhoodReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NeighborhoodReport {
    pub vertex: usize,
    pub color: Color,
    /// The neighbourhood, in original vertex ids.
    pub neighborhood: Vec<usize>,
    /// Partition of the neighbourhood graph, in original vertex ids.
    pub partition: EgPartition,
    /// Whether `2n ≤ |N_χ(v)| < 3n`. The facts below do not depend on it.
    pub size_in_range: bool,
    /// `|A| + ½(|C| + Σ(|D_i| − 1)) = ν ≤ n − 1`.
    pub matching_identity: bool,
    /// `p ≥ |A| + |N_χ(v)| − (2n − 2)`.
    pub odd_component_bound: bool,
    /// Every `D_i–D_j` and `D_i–C` pair has the other colour.
    pub cross_pairs_other_color: bool,
    /// A violating pair for the previous fact, if any.
    pub cross_pair_violation: Option<(usize, usize)>,
}

impl NeighborhoodReport {
    pub fn all_facts_hold(&self) -> bool {
        self.matching_identity && self.odd_component_bound && self.cross_pairs_other_color
    }
}

pub fn eg_neighborhood_structure(
    coloring: &TwoColoring,
    v: usize,
    color: Color,
    n: usize,
) -> Result<NeighborhoodOutcome> {
    let hood = coloring.neighbors(v, color);
    let local = coloring.induced(&hood)?;
    let graph = local.graph(color);
    let eg = edmonds_gallai(&graph);
    if eg.nu + 1 > n {
        return Ok(NeighborhoodOutcome::Inapplicable { nu: eg.nu, n });
    }
    let size = hood.len();
    let odd_sum: usize = eg.d.iter().map(|d| d.len() - 1).sum();
    let matching_identity = 2 * eg.a.len() + eg.c.len() + odd_sum == 2 * eg.nu && eg.nu < n;
    let odd_component_bound = eg.p + 2 * n >= eg.a.len() + size + 2;

    let mut block = vec![usize::MAX; size];
    for &x in &eg.c {
        block[x] = 0;
    }
    for (i, comp) in eg.d.iter().enumerate() {
        for &x in comp {
            block[x] = i + 1;
        }
    }
    let mut violation = None;
    'outer: for x in 0..size {
        for y in x + 1..size {
            let (bx, by) = (block[x], block[y]);
            let relevant = bx != usize::MAX && by != usize::MAX && bx != by && (bx > 0 || by > 0);
            if relevant && local.color(x, y) == color {
                violation = Some((hood[x], hood[y]));
                break 'outer;
            }
        }
    }
    let relabel = |xs: &[usize]| xs.iter().map(|&x| hood[x]).collect::<Vec<_>>();
    let partition = EgPartition {
        a: relabel(&eg.a),
        c: relabel(&eg.c),
        d: eg.d.iter().map(|comp| relabel(comp)).collect(),
        ..eg
    };
    Ok(NeighborhoodOutcome::Applicable(NeighborhoodReport {
        vertex: v,
        color,
        neighborhood: hood,
        partition,
        size_in_range: 2 * n <= size && size < 3 * n,
        matching_identity,
        odd_component_bound,
        cross_pairs_other_color: violation.is_none(),
        cross_pair_violation: violation,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::all_maximum_matchings;

    fn check_all(g: &Graph) -> EgPartition {
        let eg = edmonds_gallai(g);
        for m in all_maximum_matchings(g).unwrap() {
            eg.check(g, &m).unwrap();
        }
        eg
    }

    #[test]
    fn path_three() {
        let eg = check_all(&Graph::path(3));
        assert_eq!(eg.a, vec![1]);
        assert!(eg.c.is_empty());
        assert_eq!(eg.d, vec![vec![0], vec![2]]);
        assert_eq!((eg.p, eg.deficiency), (2, 1));
    }

    #[test]
    fn triangle_is_factor_critical() {
        let eg = check_all(&Graph::complete(3));
        assert!(eg.a.is_empty() && eg.c.is_empty());
        assert_eq!(eg.d, vec![vec![0, 1, 2]]);
        assert_eq!((eg.p, eg.deficiency), (1, 1));
    }

    #[test]
    fn k4_is_all_c() {
        let eg = check_all(&Graph::complete(4));
        assert!(eg.a.is_empty() && eg.d.is_empty());
        assert_eq!(eg.c, vec![0, 1, 2, 3]);
        assert_eq!((eg.p, eg.deficiency), (0, 0));
    }

    #[test]
    fn empty_graph_and_star() {
        let eg = check_all(&Graph::empty(3));
        assert_eq!(eg.p, 3);
        let star = Graph::complete_bipartite(1, 4);
        let eg = check_all(&star);
        assert_eq!(eg.a, vec![0]);
        assert_eq!(eg.p, 4);
    }

    #[test]
    fn check_detects_wrong_partition() {
        let g = Graph::path(3);
        let mut eg = edmonds_gallai(&g);
        eg.a.clear();
        eg.c.push(1);
        let m = crate::matching::max_matching(&g);
        assert!(eg.check(&g, &m).is_err());
    }

    #[test]
    fn neighborhood_inapplicable_when_large_matching() {
        let k = TwoColoring::all(7, Color::Red);
        let out = eg_neighborhood_structure(&k, 0, Color::Red, 3).unwrap();
        assert_eq!(out, NeighborhoodOutcome::Inapplicable { nu: 3, n: 3 });
    }

    #[test]
    fn neighborhood_blue_perfect_matching() {
        // Blue graph is a perfect matching on 2n vertices.
        let n = 3;
        let blue = Graph::from_edges(2 * n, (0..n).map(|i| (2 * i, 2 * i + 1))).unwrap();
        let k = TwoColoring::from_blue(&blue);
        for v in 0..2 * n {
            match eg_neighborhood_structure(&k, v, Color::Blue, n).unwrap() {
                NeighborhoodOutcome::Applicable(r) => {
                    assert!(r.all_facts_hold());
                    assert!(r.partition.d.iter().all(|d| d.len() <= 2));
                    assert!(!r.size_in_range);
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }
}
