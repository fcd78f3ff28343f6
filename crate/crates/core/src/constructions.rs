//! Explicit extremal colourings and graphs.
//!
//! The star-versus-fan colourings live on four blocks `X_1, X_2, Y_1, Y_2`
//! with `|X_i| = a` and `|Y_i| = b`. Red is complete between `X_1` and `X_2`,
//! between `X_1` and `Y_2`, and between `X_2` and `Y_1`; the bipartite graphs
//! between `X_i` and `Y_i` come from an interval realisation; everything else
//! is blue. Every vertex then has red degree at most `n − 1` into one of the
//! other red parts (`X_1`, `X_2`, `Y_1 ∪ Y_2`), so there is no red `F_n`,
//! while the red minimum degree keeps blue stars small.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::bigraphic::{realize_interval, IntervalParams};
use crate::error::{Error, Result};
use crate::fans::find_fan;
use crate::graph::{Graph, TwoColoring};

fn isqrt(x: u64) -> u64 {
    if x == 0 {
        return 0;
    }
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Derived sizes and block layout of a star-versus-fan colouring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub m: usize,
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub sigma: usize,
    /// Number of vertices, `2a + 2b`.
    pub order: usize,
    pub x1: Range<usize>,
    pub x2: Range<usize>,
    pub y1: Range<usize>,
    pub y2: Range<usize>,
}

impl ConstructionParams {
    fn with_layout(m: usize, n: usize, a: usize, b: usize, sigma: usize) -> Self {
        ConstructionParams {
            m,
            n,
            a,
            b,
            sigma,
            order: 2 * a + 2 * b,
            x1: 0..a,
            x2: a..2 * a,
            y1: 2 * a..2 * a + b,
            y2: 2 * a + b..2 * a + 2 * b,
        }
    }

    /// `(3m + √(m² + 8n²)) / 2 − 8`, the lower bound the colouring beats.
    pub fn claimed_bound(&self) -> f64 {
        let (m, n) = (self.m as f64, self.n as f64);
        (3.0 * m + (m * m + 8.0 * n * n).sqrt()) / 2.0 - 8.0
    }

    /// Degree targets of the `X_i`–`Y_i` blocks: `c = n − 1 − b`, `d = n − 1`.
    pub fn interval_params(&self) -> Result<IntervalParams> {
        let c = (self.n - 1).checked_sub(self.b).ok_or_else(|| {
            Error::UnsupportedRange(format!("b = {} exceeds n - 1 = {}", self.b, self.n - 1))
        })?;
        Ok(IntervalParams {
            a: self.a,
            b: self.b,
            c,
            d: self.n - 1,
            sigma: self.sigma,
        })
    }
}

/// Block sizes for general `m > n ≥ 2`:
/// `a = ⌊(m + √(m² + 8n²))/2 − n⌋ − 1`, `b = ⌊n − (√(m² + 8n²) − m)/4⌋ − 1`,
/// `σ = m + n − 1 − a − 2b`. Computed in exact integer arithmetic.
pub fn star_fan_params(m: usize, n: usize) -> Result<ConstructionParams> {
    if n < 2 || m <= n {
        return Err(Error::UnsupportedRange(format!(
            "need m > n ≥ 2, got m = {m}, n = {n}"
        )));
    }
    let (mi, ni) = (m as i64, n as i64);
    let disc = (m * m + 8 * n * n) as u64;
    let root = isqrt(disc) as i64;
    let root_ceil = if (root * root) as u64 == disc {
        root
    } else {
        root + 1
    };
    let a = (mi + root).div_euclid(2) - ni - 1;
    let b = ni + (mi - root_ceil).div_euclid(4) - 1;
    if a <= 0 || b <= 0 {
        return Err(Error::UnsupportedRange(format!(
            "(m, n) = ({m}, {n}) gives a = {a}, b = {b}"
        )));
    }
    let sigma = mi + ni - 1 - a - 2 * b;
    if !(2..=4).contains(&sigma) {
        return Err(Error::Internal(format!(
            "σ = {sigma} outside [2, 4] for ({m}, {n})"
        )));
    }
    Ok(ConstructionParams::with_layout(
        m,
        n,
        a as usize,
        b as usize,
        sigma as usize,
    ))
}

/// Block sizes for `m = 2n`: `a = ⌊√3·n⌋ − 1`, `b = ⌊(3 − √3)n/2⌋ − 1`,
/// with `σ` fixed to 3.
pub fn star_fan_special_params(n: usize) -> Result<ConstructionParams> {
    if n < 2 {
        return Err(Error::UnsupportedRange(format!("need n ≥ 2, got {n}")));
    }
    let ni = n as i64;
    // √(3n²) is irrational for n ≥ 1.
    let floor_root = isqrt(3 * (n as u64) * (n as u64)) as i64;
    let a = floor_root - 1;
    let b = (3 * ni - floor_root - 1).div_euclid(2) - 1;
    if a <= 0 || b <= 0 {
        return Err(Error::UnsupportedRange(format!(
            "n = {n} gives a = {a}, b = {b}"
        )));
    }
    Ok(ConstructionParams::with_layout(
        2 * n,
        n,
        a as usize,
        b as usize,
        3,
    ))
}

#[derive(Clone, Debug)]
pub struct StarFanConstruction {
    pub coloring: TwoColoring,
    pub params: ConstructionParams,
}

fn assemble(params: ConstructionParams) -> Result<StarFanConstruction> {
    let interval = params.interval_params()?;
    let block = realize_interval(&interval)
        .map_err(|e| Error::Internal(format!("X_i–Y_i realisation failed: {e}")))?;
    let p = &params;
    let mut edges = Vec::new();
    for u in p.x1.clone() {
        edges.extend(p.x2.clone().map(|v| (u, v)));
        edges.extend(p.y2.clone().map(|v| (u, v)));
    }
    for u in p.x2.clone() {
        edges.extend(p.y1.clone().map(|v| (u, v)));
    }
    // Same bipartite graph between X_1, Y_1 and between X_2, Y_2.
    for (x, y) in block.realization.graph.edges() {
        let y = y - p.a;
        edges.push((p.x1.start + x, p.y1.start + y));
        edges.push((p.x2.start + x, p.y2.start + y));
    }
    let red = Graph::from_edges(p.order, edges)?;
    let coloring = TwoColoring::from_red(red);

    let floor = p.order - p.m.min(p.order);
    let min_red = coloring.red().min_degree().unwrap_or(0);
    if min_red < floor {
        return Err(Error::Internal(format!(
            "red minimum degree {min_red} below N - m = {floor}"
        )));
    }
    if let Some(w) = find_fan(coloring.red(), p.n) {
        return Err(Error::Internal(format!(
            "construction contains a red fan {w:?}"
        )));
    }
    Ok(StarFanConstruction { coloring, params })
}

/// Colouring of `K_N` with no blue `K_{1,m}` and no red `F_n`.
pub fn star_fan_lower(m: usize, n: usize) -> Result<StarFanConstruction> {
    assemble(star_fan_params(m, n)?)
}

/// The `m = 2n` colouring with its simpler block sizes.
pub fn star_fan_lower_special(n: usize) -> Result<StarFanConstruction> {
    assemble(star_fan_special_params(n)?)
}

/// `K_{4n}` coloured as two disjoint red `K_{2n}` joined by blue edges.
pub fn chromatic_lower(n: usize) -> TwoColoring {
    assert!(n >= 1, "n must be positive");
    let half = 2 * n;
    TwoColoring::from_red(Graph::from_fn(2 * half, |u, v| (u < half) == (v < half)))
}

/// A graph on `order` vertices in which every vertex has degree `degree`,
/// except one vertex with `degree − 1` when `order · degree` is odd.
/// Circulant offsets `1..=⌊degree/2⌋`, plus the antipodal offset or a
/// near-perfect matching for odd degree.
pub fn near_regular(order: usize, degree: usize) -> Result<Graph> {
    if degree > 0 && degree >= order {
        return Err(Error::UnsupportedRange(format!(
            "degree {degree} impossible on {order} vertices"
        )));
    }
    let mut edges = Vec::new();
    for off in 1..=degree / 2 {
        for i in 0..order {
            let j = (i + off) % order;
            // offset order/2 on an even cycle would list each edge twice
            if 2 * off == order && i >= j {
                continue;
            }
            edges.push((i, j));
        }
    }
    if degree % 2 == 1 {
        let half = order / 2;
        for i in 0..half {
            edges.push((i, i + half));
        }
    }
    Graph::from_edges(order, edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TuranRegime {
    /// `k ≤ n/4`: balanced complete bipartite graph with a small dense
    /// graph inside one side.
    Bipartite,
    /// `n/4 < k ≤ n/3`: complete tripartite with parts `k−1, k−1, n−2k+2`.
    Tripartite,
    /// `k > n/3`: `(2k−1)`-regular, or one vertex short when `n` is odd.
    NearRegular,
}

#[derive(Clone, Debug)]
pub struct TuranConstruction {
    pub graph: Graph,
    pub regime: TuranRegime,
}

/// An `F_k`-free graph on `n` vertices for `1 ≤ k < n/2`.
///
/// In the bipartite regime the side holding `⌈n/2⌉` vertices receives two
/// disjoint `K_k` when `k` is odd, or a `(k−1)`-near-regular graph on
/// `2k − 1` vertices when `k` is even, giving `⌊n²/4⌋ + k² − k` and
/// `⌊n²/4⌋ + k² − 3k/2` edges respectively.
pub fn turan_lower(n: usize, k: usize) -> Result<TuranConstruction> {
    if k < 1 || 2 * k >= n {
        return Err(Error::UnsupportedRange(format!(
            "need 1 ≤ k < n/2, got n = {n}, k = {k}"
        )));
    }
    let (graph, regime) = if 4 * k <= n {
        let big = n.div_ceil(2);
        let bip = Graph::from_fn(n, |u, v| (u < big) != (v < big));
        let inner = if k % 2 == 1 {
            Graph::complete(k).disjoint_union(&Graph::complete(k))
        } else {
            near_regular(2 * k - 1, k - 1)?
        };
        (bip.with_edges(inner.edges())?, TuranRegime::Bipartite)
    } else if 3 * k <= n {
        let sizes = [k - 1, k - 1, n - 2 * k + 2];
        let mut part = Vec::with_capacity(n);
        for (i, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(i, s));
        }
        (
            Graph::from_fn(n, |u, v| part[u] != part[v]),
            TuranRegime::Tripartite,
        )
    } else {
        (near_regular(n, 2 * k - 1)?, TuranRegime::NearRegular)
    };
    if let Some(w) = find_fan(&graph, k) {
        return Err(Error::Internal(format!(
            "Turán construction contains F_{k}: {w:?}"
        )));
    }
    Ok(TuranConstruction { graph, regime })
}

/// Minimum-degree threshold forcing `F_k` in an `n`-vertex graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiracThreshold {
    pub n: usize,
    pub k: usize,
    pub alpha: f64,
    /// 1: `k < √n`; 2: `√n ≤ k < n/3`; 3: `n/3 ≤ k < n/2`.
    pub case: u8,
    pub value: f64,
    /// The middle case is only known up to an additive `Θ(1)`.
    pub additive_constant_unresolved: bool,
}

pub fn dirac_threshold(n: usize, k: usize) -> Result<DiracThreshold> {
    if k < 1 || 2 * k + 1 > n {
        return Err(Error::UnsupportedRange(format!(
            "need 1 ≤ k, 2k + 1 ≤ n; got n = {n}, k = {k}"
        )));
    }
    let alpha = k as f64 / n as f64;
    let (case, value) = if k * k < n {
        (1, (n as f64 + 1.0) / 2.0)
    } else if 3 * k < n {
        (
            2,
            (1.0 + (1.0 + 16.0 * alpha * alpha).sqrt()) / 4.0 * n as f64,
        )
    } else {
        (3, 2.0 * k as f64)
    };
    Ok(DiracThreshold {
        n,
        k,
        alpha,
        case,
        value,
        additive_constant_unresolved: case == 2,
    })
}
