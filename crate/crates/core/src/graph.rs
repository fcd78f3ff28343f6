//! Simple undirected graphs, red/blue colorings of complete graphs, and the
//! basic builders every other module works on.
//!
//! Vertices are dense ids `0..n`. Any block structure (parts of a
//! multipartite graph, the sides of a bipartite graph) is carried alongside
//! the graph as index ranges, never encoded in the labels.

use std::borrow::Cow;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "EdgeListRepr", into = "EdgeListRepr")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        EdgeListRepr {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = Error;

    fn try_from(r: EdgeListRepr) -> Result<Self> {
        Graph::from_edges(r.n, r.edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are simple")
    }

    /// `K_{a,b}` with the `a`-side on `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::from_edges(a + b, edges).expect("bipartite edges are simple")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen is simple")
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from a symmetric adjacency predicate evaluated on
    /// every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for v in 0..n {
            for u in 0..v {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        Graph { adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).max()
    }

    /// Checks the representation invariants: sorted loop-free adjacency,
    /// in-range ids, symmetry.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (v, list) in self.adj.iter().enumerate() {
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::DuplicateEdge(v.min(w[1]), v.max(w[1])));
                }
            }
            for &u in list {
                if u >= n {
                    return Err(Error::VertexOutOfRange { vertex: u, n });
                }
                if u == v {
                    return Err(Error::SelfLoop(v));
                }
                if self.adj[u].binary_search(&v).is_err() {
                    return Err(Error::Internal(format!("asymmetric adjacency {v}->{u}")));
                }
            }
        }
        Ok(())
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    /// The subgraph induced on `vertices`, relabelled `0..vertices.len()` in
    /// the given order. The second component maps new ids back to old ones.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if index[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
            }
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (index[u] != usize::MAX).then_some(index[u]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Ok((Graph { adj }, vertices.to_vec()))
    }

    /// Disjoint union: `other` is relabelled to follow `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&u| u + shift).collect()),
        );
        Graph { adj }
    }

    /// Returns a graph with the extra edges added. Existing edges are
    /// reported as duplicates.
    pub fn with_edges<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(self.n(), self.edges().chain(edges))
    }

    /// Two-colours the vertices if possible; `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for &u in &self.adj[v] {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            stack.push(u);
                        }
                        Some(su) if su == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Connected components restricted to vertices where `keep` is true,
    /// each sorted ascending, ordered by smallest member.
    pub fn components_within(&self, keep: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if !keep[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if keep[u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Edge colour in a two-colouring. Red is colour 2 and blue colour 1 in the
/// usual `R(H_1, H_2)` convention: stars are sought in blue, fans in red.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// A red/blue colouring of `K_n`, stored as its red graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColoring {
    red: Graph,
}

impl TwoColoring {
    pub fn from_red(red: Graph) -> Self {
        TwoColoring { red }
    }

    pub fn from_blue(blue: &Graph) -> Self {
        TwoColoring {
            red: blue.complement(),
        }
    }

    pub fn all(n: usize, color: Color) -> Self {
        match color {
            Color::Red => Self::from_red(Graph::complete(n)),
            Color::Blue => Self::from_red(Graph::empty(n)),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> Graph {
        self.red.complement()
    }

    pub fn graph(&self, color: Color) -> Cow<'_, Graph> {
        match color {
            Color::Red => Cow::Borrowed(&self.red),
            Color::Blue => Cow::Owned(self.blue()),
        }
    }

    /// Colour of the pair `u != v`.
    pub fn color(&self, u: usize, v: usize) -> Color {
        debug_assert_ne!(u, v);
        if self.red.has_edge(u, v) {
            Color::Red
        } else {
            Color::Blue
        }
    }

    pub fn degree(&self, v: usize, color: Color) -> usize {
        match color {
            Color::Red => self.red.degree(v),
            Color::Blue => self.n() - 1 - self.red.degree(v),
        }
    }

    pub fn neighbors(&self, v: usize, color: Color) -> Vec<usize> {
        match color {
            Color::Red => self.red.neighbors(v).to_vec(),
            Color::Blue => (0..self.n())
                .filter(|&u| u != v && !self.red.has_edge(u, v))
                .collect(),
        }
    }

    pub fn induced(&self, vertices: &[usize]) -> Result<TwoColoring> {
        Ok(TwoColoring {
            red: self.red.induced(vertices)?.0,
        })
    }
}

/// Part sizes of a complete multipartite graph, kept ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteSpec {
    part_sizes: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(mut part_sizes: Vec<usize>) -> Result<Self> {
        if part_sizes.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if part_sizes.contains(&0) {
            return Err(Error::InvalidPartition("empty part".into()));
        }
        part_sizes.sort_unstable();
        Ok(MultipartiteSpec { part_sizes })
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn parts(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn order(&self) -> usize {
        self.part_sizes.iter().sum()
    }

    pub fn largest(&self) -> usize {
        *self.part_sizes.last().expect("spec is non-empty")
    }

    /// Vertex ranges of the parts, laid out in part order.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut start = 0;
        self.part_sizes
            .iter()
            .map(|&s| {
                let r = start..start + s;
                start += s;
                r
            })
            .collect()
    }
}

pub fn build_complete_multipartite(spec: &MultipartiteSpec) -> Graph {
    let mut part = Vec::with_capacity(spec.order());
    for (i, &s) in spec.part_sizes().iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    Graph::from_fn(spec.order(), |u, v| part[u] != part[v])
}
