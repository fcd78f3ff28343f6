use serde::{Deserialize, Serialize};

use crate::fans::{find_fan, max_blue_star, FanWitness};
use crate::graph::{Color, TwoColoring};

/// Evidence that a claim fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A vertex with blue degree at least `m`.
    BlueStar {
        vertex: usize,
        blue_degree: usize,
    },
    /// A vertex with red degree below `N − m`.
    LowRedDegree {
        vertex: usize,
        red_degree: usize,
    },
    Fan {
        color: Color,
        witness: FanWitness,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub property: String,
    pub holds: bool,
    pub certificate: Option<Certificate>,
}

/// The Ramsey lower bound a colouring certifies, `R(...) ≥ value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImpliedBound {
    pub statement: String,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub order: usize,
    pub claims: Vec<Claim>,
    /// Present only when every claim holds.
    pub bound_implied: Option<ImpliedBound>,
}

impl WitnessReport {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }

    fn finish(order: usize, claims: Vec<Claim>, statement: String) -> Self {
        let holds = claims.iter().all(|c| c.holds);
        WitnessReport {
            order,
            claims,
            bound_implied: holds.then(|| ImpliedBound {
                statement: format!("{statement} >= {}", order + 1),
                value: order + 1,
            }),
        }
    }
}

fn fan_claim(coloring: &TwoColoring, color: Color, n: usize) -> Claim {
    let found = find_fan(&coloring.graph(color), n);
    Claim {
        property: format!("no {color} F_{n}"),
        holds: found.is_none(),
        certificate: found.map(|witness| Certificate::Fan { color, witness }),
    }
}

/// Checks that a colouring has no blue `K_{1,m}` (equivalently red minimum
/// degree at least `N − m`) and no red `F_n`.
pub fn verify_star_fan_witness(coloring: &TwoColoring, m: usize, n: usize) -> WitnessReport {
    let order = coloring.n();
    let star = max_blue_star(coloring).filter(|&(_, d)| d >= m);
    let star_claim = Claim {
        property: format!("no blue K_{{1,{m}}}"),
        holds: star.is_none(),
        certificate: star.map(|(vertex, blue_degree)| Certificate::BlueStar {
            vertex,
            blue_degree,
        }),
    };
    let floor = order.saturating_sub(m);
    let low = (0..order)
        .map(|v| (v, coloring.degree(v, Color::Red)))
        .find(|&(_, d)| d < floor);
    let degree_claim = Claim {
        property: format!("red min degree >= N - m = {floor}"),
        holds: low.is_none(),
        certificate: low
            .map(|(vertex, red_degree)| Certificate::LowRedDegree { vertex, red_degree }),
    };
    let claims = vec![star_claim, degree_claim, fan_claim(coloring, Color::Red, n)];
    WitnessReport::finish(order, claims, format!("R(K_{{1,{m}}}, F_{n})"))
}

/// Checks that a colouring has no monochromatic `F_n`.
pub fn verify_fan_fan_witness(coloring: &TwoColoring, n: usize) -> WitnessReport {
    let claims = vec![
        fan_claim(coloring, Color::Red, n),
        fan_claim(coloring, Color::Blue, n),
    ];
    WitnessReport::finish(coloring.n(), claims, format!("R(F_{n})"))
}
