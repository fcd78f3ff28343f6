use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, TwoColoring};

/// Largest order searched when both targets are fans.
pub const FAN_FAN_CAP_LIMIT: usize = 8;
/// Largest order searched when a star is involved.
pub const STAR_CAP_LIMIT: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "size", rename_all = "snake_case")]
pub enum Target {
    /// `K_{1,m}`.
    Star(usize),
    /// `F_n`.
    Fan(usize),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Star(m) => write!(f, "K_{{1,{m}}}"),
            Target::Fan(n) => write!(f, "F_{n}"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    /// Accepts `star:M`, `fan:N`, `K1,M` and `FN`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            location: "target".into(),
            message: format!("cannot read {s:?}"),
        };
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        let (kind, num) = if let Some(rest) = lower.strip_prefix("star:") {
            ("star", rest)
        } else if let Some(rest) = lower.strip_prefix("fan:") {
            ("fan", rest)
        } else if let Some(rest) = lower.strip_prefix("k1,") {
            ("star", rest)
        } else if let Some(rest) = lower.strip_prefix('f') {
            ("fan", rest)
        } else {
            return Err(bad());
        };
        let k: usize = num.trim().parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        Ok(if kind == "star" {
            Target::Star(k)
        } else {
            Target::Fan(k)
        })
    }
}

/// `R(blue, red)`: every colouring contains `blue` in blue or `red` in red.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyTarget {
    pub blue: Target,
    pub red: Target,
}

impl RamseyTarget {
    pub fn star_fan(m: usize, n: usize) -> Self {
        RamseyTarget {
            blue: Target::Star(m),
            red: Target::Fan(n),
        }
    }

    pub fn fan_fan(n: usize) -> Self {
        RamseyTarget {
            blue: Target::Fan(n),
            red: Target::Fan(n),
        }
    }

    pub fn cap_limit(&self) -> usize {
        match (self.blue, self.red) {
            (Target::Fan(_), Target::Fan(_)) => FAN_FAN_CAP_LIMIT,
            _ => STAR_CAP_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum SearchOutcome {
    Exact {
        value: usize,
    },
    /// Every order up to the cap admits an avoiding colouring.
    AtLeast {
        value: usize,
        witness: TwoColoring,
    },
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOutcome::Exact { value } => write!(f, "{value}"),
            SearchOutcome::AtLeast { value, .. } => write!(f, ">= {value}"),
        }
    }
}

/// Exhaustive Ramsey number search over orders `1..=cap`.
///
/// Colourings of `K_N` are built edge by edge with pruning, with vertex 0's
/// row forced into red-then-blue order. The top of the tree is split across
/// `workers` threads.
pub fn brute_force_ramsey(
    target: RamseyTarget,
    cap: usize,
    workers: usize,
) -> Result<SearchOutcome> {
    let limit = target.cap_limit();
    if cap > limit {
        return Err(Error::CapExceeded { cap, limit });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let mut witness = None;
    for order in 1..=cap {
        match pool.install(|| avoiding_coloring(target, order)) {
            Some(c) => witness = Some(c),
            None => return Ok(SearchOutcome::Exact { value: order }),
        }
    }
    match witness {
        Some(witness) => Ok(SearchOutcome::AtLeast {
            value: cap + 1,
            witness,
        }),
        None => Ok(SearchOutcome::AtLeast {
            value: 1,
            witness: TwoColoring::all(0, crate::graph::Color::Red),
        }),
    }
}

/// A colouring of `K_order` avoiding both targets, if one exists.
pub fn avoiding_coloring(target: RamseyTarget, order: usize) -> Option<TwoColoring> {
    let mut edges = Vec::new();
    for v in 1..order {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    let split = edges.len().min(8);
    let prefixes: Vec<u32> = (0..1u32 << split).collect();
    prefixes.par_iter().find_map_first(|&bits| {
        let mut s = State::new(order, target);
        for (i, &(u, v)) in edges[..split].iter().enumerate() {
            let red = bits >> i & 1 == 0;
            if !s.allowed_row0(u, v, red) || !s.push(u, v, red) {
                return None;
            }
        }
        s.dfs(&edges, split).then(|| s.coloring())
    })
}

struct State {
    order: usize,
    target: RamseyTarget,
    red: Vec<u16>,
    blue: Vec<u16>,
}

impl State {
    fn new(order: usize, target: RamseyTarget) -> Self {
        State {
            order,
            target,
            red: vec![0; order],
            blue: vec![0; order],
        }
    }

    fn allowed_row0(&self, u: usize, v: usize, red: bool) -> bool {
        // Edges (0, v) come in increasing v: no red after a blue.
        !(u == 0 && red && v > 1 && self.blue[0] >> (v - 1) & 1 == 1)
    }

    fn push(&mut self, u: usize, v: usize, red: bool) -> bool {
        let (adj, t) = if red {
            (&mut self.red, self.target.red)
        } else {
            (&mut self.blue, self.target.blue)
        };
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        if violates(adj, t, u, v) {
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
            return false;
        }
        true
    }

    fn pop(&mut self, u: usize, v: usize, red: bool) {
        let adj = if red { &mut self.red } else { &mut self.blue };
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }

    fn dfs(&mut self, edges: &[(usize, usize)], i: usize) -> bool {
        let Some(&(u, v)) = edges.get(i) else {
            return true;
        };
        for red in [true, false] {
            if self.allowed_row0(u, v, red) && self.push(u, v, red) {
                if self.dfs(edges, i + 1) {
                    return true;
                }
                self.pop(u, v, red);
            }
        }
        false
    }

    fn coloring(&self) -> TwoColoring {
        let red = Graph::from_fn(self.order, |u, v| self.red[u] >> v & 1 == 1);
        TwoColoring::from_red(red)
    }
}

/// Whether the just-added edge `uv` completes a copy of `t`.
fn violates(adj: &[u16], t: Target, u: usize, v: usize) -> bool {
    match t {
        Target::Star(m) => adj[u].count_ones() as usize >= m || adj[v].count_ones() as usize >= m,
        Target::Fan(k) => {
            if has_matching(adj, adj[u], k) || has_matching(adj, adj[v], k) {
                return true;
            }
            let mut common = adj[u] & adj[v];
            while common != 0 {
                let w = common.trailing_zeros() as usize;
                common &= common - 1;
                if has_matching(adj, adj[w], k) {
                    return true;
                }
            }
            false
        }
    }
}

/// Whether the graph induced on `set` has a matching of size `k`.
fn has_matching(adj: &[u16], set: u16, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if (set.count_ones() as usize) < 2 * k {
        return false;
    }
    let v = set.trailing_zeros() as usize;
    let rest = set & !(1 << v);
    if has_matching(adj, rest, k) {
        return true;
    }
    let mut nb = adj[v] & rest;
    while nb != 0 {
        let w = nb.trailing_zeros();
        nb &= nb - 1;
        if has_matching(adj, rest & !(1 << w), k - 1) {
            return true;
        }
    }
    false
}
