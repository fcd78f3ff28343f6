//! Ramsey values for stars and fans: closed forms, witness verification and
//! exhaustive search on small orders.

mod formulas;
mod search;
mod witness;

pub use formulas::{
    fan_ramsey_bounds, star_fan_core, star_fan_formula, Exactness, FanRamseyBounds, FormulaResult,
};
pub use search::{
    avoiding_coloring, brute_force_ramsey, RamseyTarget, SearchOutcome, Target, FAN_FAN_CAP_LIMIT,
    STAR_CAP_LIMIT,
};
pub use witness::{
    verify_fan_fan_witness, verify_star_fan_witness, Certificate, Claim, ImpliedBound,
    WitnessReport,
};
