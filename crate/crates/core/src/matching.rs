//! Maximum-cardinality matching (Edmonds' blossom algorithm), exhaustive
//! oracles for small graphs, and König covers of bipartite graphs.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, each stored as `(u, v)` with `u < v`,
/// sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        Matching { edges }
    }

    fn from_mates(mate: &[usize]) -> Self {
        Matching {
            edges: mate
                .iter()
                .enumerate()
                .filter(|&(v, &u)| u != NONE && v < u)
                .map(|(v, &u)| (v, u))
                .collect(),
        }
    }

    /// ν, the number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().flat_map(|&(u, v)| [u, v])
    }

    /// `mate[v]` for every vertex of an `n`-vertex host.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// Checks disjointness and that every edge is present in `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.n()];
        for &(u, v) in &self.edges {
            if u >= g.n() || v >= g.n() {
                return Err(Error::InvalidMatching(format!("edge {u}-{v} out of range")));
            }
            if !g.has_edge(u, v) {
                return Err(Error::InvalidMatching(format!("{u}-{v} is not an edge")));
            }
            for w in [u, v] {
                if std::mem::replace(&mut used[w], true) {
                    return Err(Error::InvalidMatching(format!("vertex {w} matched twice")));
                }
            }
        }
        Ok(())
    }
}

/// Maximum-cardinality matching of a general graph.
///
/// A greedy pass seeds the matching, then each exposed vertex (ascending) is
/// grown into an alternating tree with blossom shrinking. Vertices and
/// neighbours are always scanned in ascending order, so the result is a
/// deterministic function of the graph.
pub fn max_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Matching {
        let n = self.g.n();
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&u) = self.g.neighbors(v).iter().find(|&&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                if let Some(mut v) = self.find_path(root) {
                    while v != NONE {
                        let pv = self.parent[v];
                        let next = self.mate[pv];
                        self.mate[v] = pv;
                        self.mate[pv] = v;
                        v = next;
                    }
                }
            }
        }
        Matching::from_mates(&self.mate)
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed endpoint
    /// of an augmenting path if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.in_tree.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.in_tree[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }
}

/// Vertex limit for the exhaustive oracles.
pub const BRUTE_LIMIT: usize = 24;

/// Maximum matching by memoised exhaustive search over vertex subsets:
/// the lowest remaining vertex is either left exposed or matched to one of
/// its remaining neighbours.
pub fn brute_matching(g: &Graph) -> Result<Matching> {
    let n = g.n();
    if n > BRUTE_LIMIT {
        return Err(Error::SizeGuard {
            n,
            limit: BRUTE_LIMIT,
        });
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let mut memo: HashMap<u32, u8> = HashMap::new();

    fn solve(set: u32, nbr: &[u32], memo: &mut HashMap<u32, u8>) -> u8 {
        if set.count_ones() < 2 {
            return 0;
        }
        if let Some(&v) = memo.get(&set) {
            return v;
        }
        let v = set.trailing_zeros() as usize;
        let rest = set & !(1 << v);
        let mut best = solve(rest, nbr, memo);
        let mut cand = nbr[v] & rest;
        while cand != 0 && best as u32 * 2 < set.count_ones() - 1 {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            best = best.max(1 + solve(rest & !(1 << u), nbr, memo));
        }
        memo.insert(set, best);
        best
    }

    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut set = full;
    let mut edges = Vec::new();
    let mut target = solve(set, &nbr, &mut memo);
    while target > 0 {
        let v = set.trailing_zeros() as usize;
        let rest = set & !(1 << v);
        if solve(rest, &nbr, &mut memo) == target {
            set = rest;
            continue;
        }
        let mut cand = nbr[v] & rest;
        loop {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            let next = rest & !(1 << u);
            if 1 + solve(next, &nbr, &mut memo) == target {
                edges.push((v, u as usize));
                set = next;
                target -= 1;
                break;
            }
        }
    }
    Ok(Matching::new(edges))
}

/// Vertex limit for [`all_maximum_matchings`].
pub const ENUMERATION_LIMIT: usize = 14;

/// Every maximum matching of `g`, by exhaustive enumeration.
pub fn all_maximum_matchings(g: &Graph) -> Result<Vec<Matching>> {
    let n = g.n();
    if n > ENUMERATION_LIMIT {
        return Err(Error::SizeGuard {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let nu = brute_matching(g)?.size();
    let budget = n - 2 * nu;
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut current = Vec::new();

    fn rec(
        g: &Graph,
        used: &mut [bool],
        current: &mut Vec<(usize, usize)>,
        exposed_left: usize,
        out: &mut Vec<Matching>,
    ) {
        let Some(v) = used.iter().position(|&u| !u) else {
            out.push(Matching::new(current.iter().copied()));
            return;
        };
        used[v] = true;
        if exposed_left > 0 {
            rec(g, used, current, exposed_left - 1, out);
        }
        for &u in g.neighbors(v) {
            if !used[u] {
                used[u] = true;
                current.push((v, u));
                rec(g, used, current, exposed_left, out);
                current.pop();
                used[u] = false;
            }
        }
        used[v] = false;
    }

    rec(g, &mut used, &mut current, budget, &mut out);
    Ok(out)
}

/// A vertex cover, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCover {
    pub vertices: Vec<usize>,
}

impl VertexCover {
    pub fn covers(&self, g: &Graph) -> bool {
        let mut inside = vec![false; g.n()];
        for &v in &self.vertices {
            inside[v] = true;
        }
        g.edges().all(|(u, v)| inside[u] || inside[v])
    }
}

/// Minimum vertex cover of a bipartite graph built from a maximum matching.
///
/// `left[v]` marks the designated left side. Vertices reachable from exposed
/// left vertices by alternating paths are labelled; the cover is the
/// unlabelled left vertices plus the labelled right vertices, which takes
/// exactly one endpoint of every matching edge.
pub fn konig_cover(g: &Graph, left: &[bool], m: &Matching) -> Result<VertexCover> {
    if left.len() != g.n() {
        return Err(Error::InvalidPartition(format!(
            "side labels cover {} of {} vertices",
            left.len(),
            g.n()
        )));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| left[u] == left[v]) {
        return Err(Error::NotBipartite(u, v));
    }
    m.validate(g)?;
    let maximum = max_matching(g).size();
    if m.size() != maximum {
        return Err(Error::NotMaximum {
            given: m.size(),
            maximum,
        });
    }
    let mate = m.mates(g.n());
    let mut reached = vec![false; g.n()];
    let mut queue: VecDeque<usize> = (0..g.n())
        .filter(|&v| left[v] && mate[v].is_none())
        .collect();
    for &v in &queue {
        reached[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        // v is on the left; leave by a non-matching edge, return by the
        // matching edge of the right vertex.
        for &u in g.neighbors(v) {
            if reached[u] || mate[v] == Some(u) {
                continue;
            }
            reached[u] = true;
            if let Some(w) = mate[u] {
                if !reached[w] {
                    reached[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let vertices: Vec<usize> = (0..g.n())
        .filter(|&v| (left[v] && !reached[v]) || (!left[v] && reached[v]))
        .collect();
    if vertices.len() != m.size() {
        return Err(Error::Internal(format!(
            "König cover has size {} for matching of size {}",
            vertices.len(),
            m.size()
        )));
    }
    Ok(VertexCover { vertices })
}
