//! Exhaustive checks of the gcd closed forms, the Bluher root census, the
//! bounds on δ_{G,c} for G = x^{p^n-2} + x^{p^t}, and the root-count criteria
//! of quadratics and cubics.

mod arith;
mod bounds;
mod criteria;

pub use arith::{
    bluher_census, bluher_formula, gcd_closed_form, gcd_direct, gcd_grid, minus_one_root_count, BluherCensus,
    GcdCheck, RootCountCheck, BLUHER_MAX_ORDER,
};
pub use bounds::{
    corollary_t, find_witness_c, main_thm_bounds, main_thm_grid, odd_t1_search, verify_corollary,
    verify_main_thm, verify_second_thm, BoundCheck, CubeCheck, MainThmOptions, OddT1Candidate, OddT1Search,
    Params, SecondVariant, Suite, Verdict, WitnessSearch,
};
pub use criteria::{criteria_sweep, CriteriaSweep};
