//! The suite registry: canonical ids, accepted aliases and preconditions.

use crate::algebra::Measuring;
use crate::report::{CheckRecord, Checks};
use crate::{cyclic, dihedral, forms, lambda, lie};
use rayon::prelude::*;
use std::sync::Arc;

/// What a measuring must satisfy for a suite to be meaningful on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Needs {
    Cocommutative,
    /// Cocommutative, with commutative source and target.
    Commutative,
    /// Cocommutative, with declared compatibility with the involutions.
    Involutive,
}

impl Needs {
    pub fn holds(self, m: &Measuring) -> bool {
        m.coalgebra.cocommutative
            && match self {
                Needs::Cocommutative => true,
                Needs::Commutative => m.source.commutative && m.target.commutative,
                Needs::Involutive => m.involutive && m.source.involution.is_some() && m.target.involution.is_some(),
            }
    }
}

/// Default top degree for Hochschild, cyclic and dihedral suites.
pub const HOCHSCHILD_TOP: usize = 4;
/// Default top degree for Lie and Leibniz suites.
pub const LIE_TOP: usize = 3;
pub const DEFAULT_CAP: usize = 5000;

pub type SuiteFn = fn(&Measuring, usize, usize) -> Checks;

pub struct Suite {
    pub id: &'static str,
    /// Alternative id accepted on the command line.
    pub alias: &'static str,
    pub needs: Needs,
    pub top: usize,
    pub run: SuiteFn,
}

macro_rules! suite {
    ($id:literal, $alias:literal, $needs:ident, $top:expr, $f:path) => {
        Suite { id: $id, alias: $alias, needs: Needs::$needs, top: $top, run: $f }
    };
}

pub static SUITES: &[Suite] = &[
    suite!("sbi-ladder", "prop2.2", Cocommutative, HOCHSCHILD_TOP, cyclic::verify_sbi_compatibility),
    suite!("antisymmetrization", "prop2.4", Cocommutative, HOCHSCHILD_TOP, forms::verify_antisymmetrization),
    suite!("forms-eps-pi", "prop2.5", Commutative, HOCHSCHILD_TOP, forms::verify_eps_pi),
    suite!("forms-pibar", "prop2.6", Commutative, HOCHSCHILD_TOP, forms::verify_pibar),
    suite!("normalized-quotient", "prop3.1", Cocommutative, HOCHSCHILD_TOP, cyclic::verify_normalized_quotient),
    suite!("star-product-measuring", "thm3.2", Commutative, HOCHSCHILD_TOP, lambda::verify_star_measuring),
    suite!("comodule-measuring", "prop3.4", Commutative, HOCHSCHILD_TOP, lambda::verify_comodule_measuring),
    suite!("eulerian-commute", "lem4.3", Commutative, HOCHSCHILD_TOP, lambda::verify_eulerian_commute),
    suite!("hh-lambda-summands", "thm4.4", Commutative, HOCHSCHILD_TOP, lambda::verify_hh_summands),
    suite!("hc-lambda-summands", "thm4.6", Commutative, HOCHSCHILD_TOP, lambda::verify_hc_summands),
    suite!("lambda-sbi-ladder", "cor4.7", Commutative, HOCHSCHILD_TOP, lambda::verify_lambda_ladder),
    suite!("ce-coproduct", "prop5.1", Cocommutative, LIE_TOP, lie::verify_ce_coproduct),
    suite!("theta-trace", "lem5.2", Cocommutative, LIE_TOP, lie::verify_theta_trace),
    suite!("leibniz-coproduct", "prop5.5", Cocommutative, LIE_TOP, lie::verify_leibniz_coproduct),
    suite!("v-complex", "prop5.6", Cocommutative, LIE_TOP, lie::verify_v_complex),
    suite!("coinvariants", "lem6.1", Cocommutative, LIE_TOP, lie::verify_coinvariants),
    suite!("ce-coinvariant-products", "prop6.2", Cocommutative, LIE_TOP, lie::verify_ce_coinvariant_products),
    suite!("cl-coinvariant-products", "prop6.5", Cocommutative, LIE_TOP, lie::verify_cl_coinvariant_products),
    suite!("dihedral-maps", "prop7.2", Involutive, HOCHSCHILD_TOP, dihedral::verify_dihedral_maps),
    suite!("sk-sp-restriction", "lem7.3", Involutive, LIE_TOP, dihedral::verify_sk_sp_restriction),
    suite!("sk-sp-ladder", "thm7.5", Involutive, LIE_TOP, dihedral::verify_sk_sp_ladder),
];

/// Looks a suite up by canonical id or alias.
pub fn find_suite(id: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.id == id || s.alias == id)
}

/// Suites named by `id`, where `all` selects every suite.
pub fn select_suites(id: &str) -> crate::Result<Vec<&'static Suite>> {
    if id == "all" {
        return Ok(SUITES.iter().collect());
    }
    find_suite(id).map(|s| vec![s]).ok_or_else(|| crate::Error::UnknownName(format!("suite {id}")))
}

/// One suite on one measuring.
#[derive(Clone)]
pub struct Job {
    pub suite: &'static Suite,
    pub measuring: Arc<Measuring>,
    pub top: usize,
}

/// Pairs each suite with the measurings it applies to. An explicitly chosen
/// measuring is paired with every selected suite, preconditions or not, so
/// that violated preconditions show up as failures.
pub fn plan(suites: &[&'static Suite], measurings: &[Arc<Measuring>], explicit: bool, top: Option<usize>) -> Vec<Job> {
    let mut jobs = Vec::new();
    for &s in suites {
        for m in measurings {
            if explicit || s.needs.holds(m) {
                jobs.push(Job { suite: s, measuring: m.clone(), top: top.unwrap_or(s.top) });
            }
        }
    }
    jobs
}

/// Runs jobs in parallel and returns their records in job order.
pub fn run_jobs(jobs: &[Job], cap: usize) -> Vec<CheckRecord> {
    let out: Vec<Checks> = jobs.par_iter().map(|j| (j.suite.run)(&j.measuring, j.top, cap)).collect();
    out.into_iter().flat_map(Checks::into_records).collect()
}
