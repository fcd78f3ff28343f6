//! Gale–Ryser testing and realisation of bipartite degree sequences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Requested degrees for the two sides of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreePairSpec {
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
}

impl DegreePairSpec {
    pub fn new(xs: Vec<usize>, ys: Vec<usize>) -> Self {
        DegreePairSpec { xs, ys }
    }
}

/// Outcome of the Gale–Ryser test. The failure variants are certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Bigraphic {
    Yes,
    /// An entry exceeds the size of the opposite side.
    EntryTooLarge {
        side: Side,
        index: usize,
        degree: usize,
        limit: usize,
    },
    SumMismatch {
        x_sum: usize,
        y_sum: usize,
    },
    /// `Σ_{i≤k} x_i > Σ_j min(y_j, k)` with the x's sorted descending.
    PrefixViolation {
        k: usize,
        lhs: usize,
        rhs: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    X,
    Y,
}

impl Bigraphic {
    pub fn holds(&self) -> bool {
        matches!(self, Bigraphic::Yes)
    }
}

pub fn is_bigraphic(spec: &DegreePairSpec) -> Bigraphic {
    let (a, b) = (spec.xs.len(), spec.ys.len());
    for (side, seq, limit) in [(Side::X, &spec.xs, b), (Side::Y, &spec.ys, a)] {
        if let Some((index, &degree)) = seq.iter().enumerate().find(|(_, &d)| d > limit) {
            return Bigraphic::EntryTooLarge {
                side,
                index,
                degree,
                limit,
            };
        }
    }
    let x_sum: usize = spec.xs.iter().sum();
    let y_sum: usize = spec.ys.iter().sum();
    if x_sum != y_sum {
        return Bigraphic::SumMismatch { x_sum, y_sum };
    }
    let mut xs = spec.xs.clone();
    xs.sort_unstable_by(|p, q| q.cmp(p));
    let mut lhs = 0;
    for (i, &x) in xs.iter().enumerate() {
        let k = i + 1;
        lhs += x;
        let rhs: usize = spec.ys.iter().map(|&y| y.min(k)).sum();
        if lhs > rhs {
            return Bigraphic::PrefixViolation { k, lhs, rhs };
        }
    }
    Bigraphic::Yes
}

/// A bipartite graph with the x-side on `0..a` and the y-side on `a..a+b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteRealization {
    pub graph: Graph,
    pub a: usize,
    pub b: usize,
}

impl BipartiteRealization {
    pub fn x_degrees(&self) -> Vec<usize> {
        (0..self.a).map(|v| self.graph.degree(v)).collect()
    }

    pub fn y_degrees(&self) -> Vec<usize> {
        (self.a..self.a + self.b)
            .map(|v| self.graph.degree(v))
            .collect()
    }

    /// Side label per vertex, `true` for the x-side.
    pub fn left(&self) -> Vec<bool> {
        (0..self.a + self.b).map(|v| v < self.a).collect()
    }
}

/// Realises a bigraphic pair greedily: the x-vertex with the largest
/// remaining demand is joined to the y-vertices with the largest remaining
/// capacity. Ties go to the lower index.
pub fn realize_bigraphic(spec: &DegreePairSpec) -> Result<BipartiteRealization> {
    let verdict = is_bigraphic(spec);
    if !verdict.holds() {
        return Err(Error::NotBigraphic(format!("{verdict:?}")));
    }
    let (a, b) = (spec.xs.len(), spec.ys.len());
    let mut order: Vec<usize> = (0..a).collect();
    order.sort_by(|&i, &j| spec.xs[j].cmp(&spec.xs[i]).then(i.cmp(&j)));
    let mut remaining = spec.ys.clone();
    let mut edges = Vec::new();
    for i in order {
        let mut ys: Vec<usize> = (0..b).collect();
        ys.sort_by(|&p, &q| remaining[q].cmp(&remaining[p]).then(p.cmp(&q)));
        for &j in ys.iter().take(spec.xs[i]) {
            if remaining[j] == 0 {
                return Err(Error::Internal("greedy realisation ran dry".into()));
            }
            remaining[j] -= 1;
            edges.push((i, a + j));
        }
    }
    debug_assert!(remaining.iter().all(|&r| r == 0));
    Ok(BipartiteRealization {
        graph: Graph::from_edges(a + b, edges)?,
        a,
        b,
    })
}

/// Parameters of an interval realisation: side sizes `a`, `b`, target
/// degrees `c`, `d` and slack `σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub sigma: usize,
}

/// A realisation in which every x-degree lies in `[c − σ, c]` and every
/// y-degree in `[d − σ, d]`, together with the `q`, `r` split it used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalRealization {
    pub realization: BipartiteRealization,
    /// `true` when `ac − bd ≥ 0` and the x-side was lowered.
    pub lowered_x: bool,
    pub q: usize,
    pub r: usize,
}

impl IntervalParams {
    /// `ac − bd`.
    pub fn imbalance(&self) -> i64 {
        self.a as i64 * self.c as i64 - self.b as i64 * self.d as i64
    }

    pub fn feasible(&self) -> bool {
        let s = self.sigma as i64;
        let t = self.imbalance();
        -s * (self.b as i64) <= t && t <= s * self.a as i64
    }

    /// The degree multisets of the construction. When `ac − bd ≥ 0`, write
    /// `ac − bd = qa + r`; then `a − r` x-vertices get `c − q`, `r` get
    /// `c − q − 1`, and every y-vertex gets `d`. The other sign is
    /// symmetric.
    pub fn degree_split(&self) -> Result<(DegreePairSpec, bool, usize, usize)> {
        if self.a == 0 || self.b == 0 {
            return Err(Error::IntervalInfeasible(
                "side sizes must be positive".into(),
            ));
        }
        if !self.feasible() {
            return Err(Error::IntervalInfeasible(format!(
                "-σb ≤ ac - bd ≤ σa fails: ac - bd = {}, σ = {}, a = {}, b = {}",
                self.imbalance(),
                self.sigma,
                self.a,
                self.b
            )));
        }
        let t = self.imbalance();
        let (lowered_x, big, small, big_len, small_len, excess) = if t >= 0 {
            (true, self.c, self.d, self.a, self.b, t as usize)
        } else {
            (false, self.d, self.c, self.b, self.a, (-t) as usize)
        };
        let q = excess / big_len;
        let r = excess % big_len;
        assert!(q <= self.sigma, "q = {q} exceeds σ = {}", self.sigma);
        assert!(q < self.sigma || r == 0, "q = σ forces r = 0");
        let high = big.checked_sub(q);
        let low = big.checked_sub(q + 1);
        let lowered: Vec<usize> = match (high, low, r) {
            (Some(h), _, 0) => vec![h; big_len],
            (Some(h), Some(l), _) => {
                let mut v = vec![h; big_len - r];
                v.extend(std::iter::repeat_n(l, r));
                v
            }
            _ => {
                return Err(Error::IntervalInfeasible(format!(
                    "lowered degree {big} - {q} would be negative"
                )))
            }
        };
        let uniform = vec![small; small_len];
        let spec = if lowered_x {
            DegreePairSpec::new(lowered, uniform)
        } else {
            DegreePairSpec::new(uniform, lowered)
        };
        Ok((spec, lowered_x, q, r))
    }
}

pub fn realize_interval(params: &IntervalParams) -> Result<IntervalRealization> {
    let (spec, lowered_x, q, r) = params.degree_split()?;
    let verdict = is_bigraphic(&spec);
    if !verdict.holds() {
        return Err(Error::IntervalInfeasible(format!(
            "derived degrees {:?} / {:?} are not bigraphic: {verdict:?}",
            spec.xs, spec.ys
        )));
    }
    let realization = realize_bigraphic(&spec)?;
    Ok(IntervalRealization {
        realization,
        lowered_x,
        q,
        r,
    })
}
