use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Exactness {
    Exact,
    WithinAdditiveConstant,
}

/// A Ramsey value or a pair of bounds on it. For exact results
/// `lower == upper`; otherwise both bounds are strict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormulaResult {
    pub regime: String,
    pub lower: f64,
    pub upper: f64,
    pub exactness: Exactness,
}

impl FormulaResult {
    fn exact(regime: &str, value: f64) -> Self {
        FormulaResult {
            regime: regime.into(),
            lower: value,
            upper: value,
            exactness: Exactness::Exact,
        }
    }

    /// Integers allowed by the bounds.
    pub fn integer_range(&self) -> (i64, i64) {
        match self.exactness {
            Exactness::Exact => (self.lower as i64, self.upper as i64),
            Exactness::WithinAdditiveConstant => {
                (self.lower.floor() as i64 + 1, self.upper.ceil() as i64 - 1)
            }
        }
    }
}

/// `(3m + √(m² + 8n²)) / 2`.
pub fn star_fan_core(m: usize, n: usize) -> f64 {
    let (m, n) = (m as f64, n as f64);
    (3.0 * m + (m * m + 8.0 * n * n).sqrt()) / 2.0
}

/// `R(K_{1,m}, F_n)` in its three regimes:
/// `m ≤ n`: exactly `m + 2n − (1 + (−1)^m)/2`;
/// `n < m < n(n−1)`: strictly between `core − 8` and `core + 1`;
/// `m ≥ n(n−1)`: exactly `2m + 1`.
pub fn star_fan_formula(m: usize, n: usize) -> Result<FormulaResult> {
    if m < 1 || n < 1 {
        return Err(Error::UnsupportedRange(format!(
            "need m, n ≥ 1, got m = {m}, n = {n}"
        )));
    }
    if m <= n {
        let parity = usize::from(m.is_multiple_of(2));
        return Ok(FormulaResult::exact("m <= n", (m + 2 * n - parity) as f64));
    }
    if m >= n * (n - 1) {
        return Ok(FormulaResult::exact("m >= n(n-1)", (2 * m + 1) as f64));
    }
    let core = star_fan_core(m, n);
    Ok(FormulaResult {
        regime: "n < m < n(n-1)".into(),
        lower: core - 8.0,
        upper: core + 1.0,
        exactness: Exactness::WithinAdditiveConstant,
    })
}

/// Bounds on `R(F_n)` with the validity gate of the upper bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FanRamseyBounds {
    pub n: usize,
    pub epsilon: f64,
    /// `(3 + √3)n − 8`, strict.
    pub lower: f64,
    /// `(5 + ε)n`.
    pub upper: f64,
    /// `384 / ε²`.
    pub gate: f64,
    /// Whether `n ≥ 384/ε²`, i.e. whether `upper` is established.
    pub upper_valid: bool,
}

pub fn fan_ramsey_bounds(n: usize, epsilon: f64) -> Result<FanRamseyBounds> {
    if n < 1 {
        return Err(Error::UnsupportedRange("n must be positive".into()));
    }
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::UnsupportedRange(format!(
            "ε must be positive, got {epsilon}"
        )));
    }
    let nf = n as f64;
    let gate = 384.0 / (epsilon * epsilon);
    Ok(FanRamseyBounds {
        n,
        epsilon,
        lower: (3.0 + 3f64.sqrt()) * nf - 8.0,
        upper: (5.0 + epsilon) * nf,
        gate,
        upper_valid: nf >= gate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_star_regime() {
        assert_eq!(
            star_fan_formula(2, 2).unwrap(),
            FormulaResult::exact("m <= n", 5.0)
        );
        assert_eq!(star_fan_formula(1, 2).unwrap().lower, 5.0);
        assert_eq!(star_fan_formula(2, 3).unwrap().lower, 7.0);
        assert_eq!(star_fan_formula(1, 1).unwrap().lower, 3.0);
    }

    #[test]
    fn middle_regime() {
        let r = star_fan_formula(10, 5).unwrap();
        assert_eq!(r.exactness, Exactness::WithinAdditiveConstant);
        let core = (30.0 + 300f64.sqrt()) / 2.0;
        assert!((r.lower - (core - 8.0)).abs() < 1e-12);
        assert!((r.upper - (core + 1.0)).abs() < 1e-12);
        assert!((r.lower - 15.660).abs() < 1e-3);
        assert!((r.upper - 24.660).abs() < 1e-3);
    }

    #[test]
    fn regime_boundaries() {
        for n in 1..30usize {
            assert_eq!(star_fan_formula(n, n).unwrap().regime, "m <= n");
            let big = (n * (n.saturating_sub(1))).max(n + 1);
            let r = star_fan_formula(big, n).unwrap();
            if big >= n * (n - 1) {
                assert_eq!(r.lower, (2 * big + 1) as f64);
            }
            for m in n + 1..n * n.saturating_sub(1) {
                let r = star_fan_formula(m, n).unwrap();
                assert!(r.lower < r.upper);
            }
        }
    }

    #[test]
    fn fan_bounds() {
        let b = fan_ramsey_bounds(1_000_000, 0.1).unwrap();
        assert!(b.upper_valid);
        assert!((b.upper - 5.1e6).abs() < 1e-3);
        assert!((b.lower - ((3.0 + 3f64.sqrt()) * 1e6 - 8.0)).abs() < 1e-6);
        assert!((b.gate - 38400.0).abs() < 1e-6);
        let b = fan_ramsey_bounds(100, 0.1).unwrap();
        assert!(!b.upper_valid);
        for n in 4..200 {
            let b = fan_ramsey_bounds(n, 0.5).unwrap();
            let s = star_fan_formula(2 * n, n).unwrap();
            assert!((b.lower - s.lower).abs() < 1e-9, "n = {n}");
        }
    }
}
