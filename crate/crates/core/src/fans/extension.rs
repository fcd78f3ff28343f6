//! Completing a fan centred in a complete multipartite block.
//!
//! The vertex set is split into parts `X_1, …, X_p`, a part `Y`, and the
//! rest `Z`, with `X ∪ Y` inducing a complete multipartite graph. A vertex
//! `v ∈ X_i` already sees every vertex of `(X ∖ X_i) ∪ Y`; given a matching
//! from its neighbourhood in `Z` that is large enough, part of it is kept
//! and the remainder of the fan is found inside the multipartite block.

use serde::{Deserialize, Serialize};

use super::{find_fan, multipartite_matching, neighborhood_matching, FanWitness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{max_matching, Matching};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExtensionCase {
    /// `|X| > n + λ`; the matching may use `X ∪ Y`.
    I,
    /// `|Y| ≤ n`; the matching may use `Y`.
    II,
    /// `|Y| ≥ n`; the matching may use `Y`.
    III,
}

#[derive(Clone, Debug)]
pub struct FanExtensionInstance {
    pub graph: Graph,
    pub x_parts: Vec<Vec<usize>>,
    pub y: Vec<usize>,
    pub z: Vec<usize>,
    pub lambda: f64,
    pub n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Block {
    X(usize),
    Y,
    Z,
}

impl FanExtensionInstance {
    /// Validates the block structure: disjoint cover of the vertices, a
    /// complete multipartite `X ∪ Y`, `λ ≥ 1`, `|X_i| ≤ λ` and
    /// `|X| + |Y| > n`.
    pub fn new(
        graph: Graph,
        x_parts: Vec<Vec<usize>>,
        y: Vec<usize>,
        z: Vec<usize>,
        lambda: f64,
        n: usize,
    ) -> Result<Self> {
        let inst = FanExtensionInstance {
            graph,
            x_parts,
            y,
            z,
            lambda,
            n,
        };
        let mut problems = Vec::new();
        if inst.lambda.is_nan() || inst.lambda < 1.0 {
            problems.push(format!("λ = {} < 1", inst.lambda));
        }
        match inst.blocks() {
            Err(e) => problems.push(e),
            Ok(block) => {
                for (u, v) in inst.graph.edges() {
                    let (bu, bv) = (block[u], block[v]);
                    let same_part = bu == bv && bu != Block::Z;
                    if same_part {
                        problems.push(format!("edge {u}-{v} inside a part of X ∪ Y"));
                        break;
                    }
                }
                let xy: Vec<usize> = inst
                    .x_parts
                    .iter()
                    .flatten()
                    .chain(&inst.y)
                    .copied()
                    .collect();
                'outer: for (i, &u) in xy.iter().enumerate() {
                    for &v in &xy[i + 1..] {
                        if block[u] != block[v] && !inst.graph.has_edge(u, v) {
                            problems.push(format!("missing edge {u}-{v} between parts"));
                            break 'outer;
                        }
                    }
                }
            }
        }
        for (i, part) in inst.x_parts.iter().enumerate() {
            if part.is_empty() {
                problems.push(format!("X_{i} is empty"));
            }
            if part.len() as f64 > inst.lambda {
                problems.push(format!("|X_{i}| = {} > λ = {}", part.len(), inst.lambda));
            }
        }
        if inst.x_size() + inst.y.len() <= inst.n {
            problems.push(format!(
                "|X| + |Y| = {} ≤ n = {}",
                inst.x_size() + inst.y.len(),
                inst.n
            ));
        }
        if problems.is_empty() {
            Ok(inst)
        } else {
            Err(Error::Precondition(problems))
        }
    }

    fn blocks(&self) -> std::result::Result<Vec<Block>, String> {
        let n = self.graph.n();
        let mut block: Vec<Option<Block>> = vec![None; n];
        let all = self
            .x_parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.iter().map(move |&v| (v, Block::X(i))))
            .chain(self.y.iter().map(|&v| (v, Block::Y)))
            .chain(self.z.iter().map(|&v| (v, Block::Z)));
        for (v, b) in all {
            if v >= n {
                return Err(format!("vertex {v} out of range"));
            }
            if block[v].replace(b).is_some() {
                return Err(format!("vertex {v} in two blocks"));
            }
        }
        block
            .into_iter()
            .enumerate()
            .map(|(v, b)| b.ok_or_else(|| format!("vertex {v} in no block")))
            .collect()
    }

    pub fn x_size(&self) -> usize {
        self.x_parts.iter().map(Vec::len).sum()
    }

    /// `q = 2n − (|X| + |Y|)`.
    pub fn q(&self) -> i64 {
        2 * self.n as i64 - (self.x_size() + self.y.len()) as i64
    }

    fn part_of(&self, v: usize) -> Option<usize> {
        self.x_parts.iter().position(|p| p.contains(&v))
    }

    /// The graph in which the case's matching must live: edges inside
    /// `N(v) ∩ Z`, plus edges from `N(v) ∩ Z` to `X ∪ Y` (case I) or to `Y`
    /// (cases II and III), never touching `v`.
    fn allowed_edge(
        &self,
        block: &[Block],
        v: usize,
        case: ExtensionCase,
        a: usize,
        b: usize,
    ) -> bool {
        let in_hood_z = |w: usize| block[w] == Block::Z && self.graph.has_edge(v, w);
        let partner_ok = |w: usize| match case {
            ExtensionCase::I => block[w] != Block::Z,
            ExtensionCase::II | ExtensionCase::III => block[w] == Block::Y,
        };
        a != v
            && b != v
            && self.graph.has_edge(a, b)
            && ((in_hood_z(a) && (in_hood_z(b) || partner_ok(b)))
                || (in_hood_z(b) && partner_ok(a)))
    }

    /// Every failed hypothesis for running `case` at `v` with `m`.
    pub fn audit(&self, case: ExtensionCase, v: usize, m: &Matching) -> Vec<String> {
        let mut problems = Vec::new();
        let block = match self.blocks() {
            Ok(b) => b,
            Err(e) => return vec![e],
        };
        if v >= self.graph.n() || !matches!(block[v], Block::X(_)) {
            problems.push(format!("centre {v} is not in X"));
            return problems;
        }
        if let Err(e) = m.validate(&self.graph) {
            problems.push(e.to_string());
        }
        if let Some(&(a, b)) = m
            .edges()
            .iter()
            .find(|&&(a, b)| !self.allowed_edge(&block, v, case, a, b))
        {
            problems.push(format!("matching edge {a}-{b} is outside the case's graph"));
        }
        let n = self.n as f64;
        let x = self.x_size() as f64;
        let y = self.y.len() as f64;
        let q = self.q() as f64;
        let lambda = self.lambda;
        match case {
            ExtensionCase::I => {
                if x <= n + lambda {
                    problems.push(format!("|X| = {x} ≤ n + λ = {}", n + lambda));
                }
                let covered = m.vertices().filter(|&w| block[w] == Block::Z).count() as f64;
                if covered <= q + 2.0 * lambda {
                    problems.push(format!(
                        "matching covers {covered} vertices of Z, needs more than q + 2λ = {}",
                        q + 2.0 * lambda
                    ));
                }
            }
            ExtensionCase::II => {
                if y > n {
                    problems.push(format!("|Y| = {y} > n = {n}"));
                }
                let covered = 2.0 * m.size() as f64;
                if covered <= 2.0 * (q + lambda) {
                    problems.push(format!(
                        "matching covers {covered} vertices of Y ∪ Z, needs more than 2(q + λ) = {}",
                        2.0 * (q + lambda)
                    ));
                }
            }
            ExtensionCase::III => {
                if y < n {
                    problems.push(format!("|Y| = {y} < n = {n}"));
                }
                let covered = 2.0 * m.size() as f64;
                let need = 2.0 * (n - x + lambda);
                if covered < need {
                    problems.push(format!(
                        "matching covers {covered} vertices of Y ∪ Z, needs at least 2(n - |X| + λ) = {need}"
                    ));
                }
            }
        }
        problems
    }
}

/// How [`fan_extend`] obtained its fan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionRoute {
    /// Trimmed matching plus a multipartite matching, centred at `v`.
    Construction,
    /// The construction fell short; a maximum matching of `G[N(v)]` did not.
    CentreSearch,
    /// Neither worked at `v`; the fan was found elsewhere in the graph.
    GlobalSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanExtension {
    pub witness: FanWitness,
    pub route: ExtensionRoute,
    /// Spokes the construction reached before any fallback.
    pub constructed_spokes: usize,
}

/// Maximum matching of the case's auxiliary graph around `v`, a convenient
/// candidate for the `m` argument of [`fan_extend`].
pub fn extension_matching(
    inst: &FanExtensionInstance,
    case: ExtensionCase,
    v: usize,
) -> Result<Matching> {
    let block = inst.blocks().map_err(|e| Error::Precondition(vec![e]))?;
    let n = inst.graph.n();
    let aux = Graph::from_fn(n, |a, b| inst.allowed_edge(&block, v, case, a, b));
    Ok(max_matching(&aux))
}

/// Builds an `F_n` centred at `v` from the partial matching `m`.
///
/// * Case I: drop edges touching `v`'s part `X_i`, keep `Z`-internal edges
///   first and then cross edges until `max(0, q + |X_i| + 1)` vertices of
///   `Z` are covered; `U` is the set of `X ∪ Y` vertices used. For
///   `q ≤ −|X_i| − 1` no edge is kept and the fan lies inside `X ∪ Y`.
/// * Case II: keep `k = max(0, q + |X_i| + 1)` edges; `U` is their `Y`
///   vertices padded (lowest ids) to `k` vertices of `Y`, or all of `Y`.
/// * Case III: keep `n − |X| + |X_i|` edges; `U` is their `Y` vertices.
///
/// The fan is completed by a maximum matching of the complete multipartite
/// graph on `((X ∖ X_i) ∪ Y) ∖ U`. That graph can have fewer than three
/// parts or one dominant part, and then the construction falls short; the
/// fan is then taken from `G[N(v)]` or, failing that, from anywhere in `G`.
/// The route taken is reported.
pub fn fan_extend(
    inst: &FanExtensionInstance,
    case: ExtensionCase,
    v: usize,
    m: &Matching,
) -> Result<FanExtension> {
    let problems = inst.audit(case, v, m);
    if !problems.is_empty() {
        return Err(Error::Precondition(problems));
    }
    let block = inst.blocks().map_err(|e| Error::Precondition(vec![e]))?;
    let i = inst.part_of(v).expect("audit checked v ∈ X");
    let part_i = inst.x_parts[i].len() as i64;
    let q = inst.q();
    let is_z = |w: usize| block[w] == Block::Z;

    let (kept, removed): (Vec<(usize, usize)>, Vec<usize>) = match case {
        ExtensionCase::I => {
            let target = (q + part_i + 1).max(0) as usize;
            let mut usable: Vec<(usize, usize)> = m
                .edges()
                .iter()
                .copied()
                .filter(|&(a, b)| block[a] != Block::X(i) && block[b] != Block::X(i))
                .collect();
            usable.sort_by_key(|&(a, b)| !(is_z(a) && is_z(b)));
            let mut kept = Vec::new();
            let mut covered = 0;
            for e in usable {
                if covered >= target {
                    break;
                }
                covered += is_z(e.0) as usize + is_z(e.1) as usize;
                kept.push(e);
            }
            let used = kept
                .iter()
                .flat_map(|&(a, b)| [a, b])
                .filter(|&w| !is_z(w))
                .collect();
            (kept, used)
        }
        ExtensionCase::II => {
            let k = (q + part_i + 1).max(0) as usize;
            let kept: Vec<_> = m.edges().iter().copied().take(k).collect();
            let mut used: Vec<usize> = kept
                .iter()
                .flat_map(|&(a, b)| [a, b])
                .filter(|&w| block[w] == Block::Y)
                .collect();
            if inst.y.len() >= k {
                let mut spare: Vec<usize> = inst
                    .y
                    .iter()
                    .copied()
                    .filter(|w| !used.contains(w))
                    .collect();
                spare.sort_unstable();
                let pad = k - used.len();
                used.extend(spare.into_iter().take(pad));
            } else {
                used = inst.y.clone();
            }
            (kept, used)
        }
        ExtensionCase::III => {
            let size = (inst.n as i64 - inst.x_size() as i64 + part_i).max(0) as usize;
            let kept: Vec<_> = m.edges().iter().copied().take(size).collect();
            let used = kept
                .iter()
                .flat_map(|&(a, b)| [a, b])
                .filter(|&w| block[w] == Block::Y)
                .collect();
            (kept, used)
        }
    };

    let mut gone = vec![false; inst.graph.n()];
    for w in removed {
        gone[w] = true;
    }
    let residual: Vec<Vec<usize>> = inst
        .x_parts
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, p)| p.clone())
        .chain(std::iter::once(inst.y.clone()))
        .map(|p| p.into_iter().filter(|&w| !gone[w]).collect::<Vec<_>>())
        .filter(|p| !p.is_empty())
        .collect();
    let mut spokes = kept;
    spokes.extend(multipartite_matching(&residual));
    let constructed_spokes = spokes.len().min(inst.n);
    let (witness, route) = if spokes.len() >= inst.n {
        spokes.truncate(inst.n);
        (
            FanWitness { center: v, spokes },
            ExtensionRoute::Construction,
        )
    } else {
        let local = neighborhood_matching(&inst.graph, v);
        if local.size() >= inst.n {
            let spokes = local.edges()[..inst.n].to_vec();
            (
                FanWitness { center: v, spokes },
                ExtensionRoute::CentreSearch,
            )
        } else {
            let w = find_fan(&inst.graph, inst.n).ok_or_else(|| {
                Error::Internal(format!(
                    "no F_{} anywhere although the hypotheses hold ({} spokes constructed)",
                    inst.n,
                    spokes.len()
                ))
            })?;
            (w, ExtensionRoute::GlobalSearch)
        }
    };
    witness
        .validate(&inst.graph)
        .map_err(|e| Error::Internal(format!("invalid fan from extension: {e}")))?;
    Ok(FanExtension {
        witness,
        route,
        constructed_spokes,
    })
}
