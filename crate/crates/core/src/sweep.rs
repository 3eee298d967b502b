//! Property sweep over the enumerated soluble algebras.
//!
//! For every algebra and formation: every maximal subalgebra is classified by
//! both criteria, and every 𝔉-normaliser is checked for intravariance (both
//! tests) and for the cover/avoid property.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::derivation::{extension_obstruction, linear_obstruction};
use crate::enumerate::{enumerate_soluble, EnumeratedAlgebra, EnumerationBudget};
use crate::error::{Error, Result};
use crate::formation::{cover_avoid_check, f_normalisers, survey_maximals, BuiltinFormation, Formation};
use crate::io::{matrix_repr, subspace_repr, AlgebraFile, Counterexample};
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;

/// Environment variable capping the number of sweep workers.
pub const THREADS_ENV: &str = "LIEFORM_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// An 𝔉-normaliser that is not intravariant.
    Intravariance,
    CoverAvoid,
    CriteriaDisagree,
    /// The linear and extension intravariance tests disagree.
    IntravarianceCriteria,
    NoCriticalDescent,
    /// A returned normaliser outside the formation, or an unexpected error.
    Other,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Intravariance => "intravariance",
            Property::CoverAvoid => "cover-avoid",
            Property::CriteriaDisagree => "criteria-disagree",
            Property::IntravarianceCriteria => "intravariance-criteria",
            Property::NoCriticalDescent => "no-critical-descent",
            Property::Other => "other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: Property,
    pub label: String,
    pub counterexample: Counterexample,
}

/// Outcome of checking one algebra against one formation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AlgebraCheck {
    pub maximal_classified: usize,
    pub normalisers: usize,
    pub violations: Vec<Violation>,
}

fn violation(
    property: Property,
    label: &str,
    l: &LieAlgebra,
    f: &dyn Formation,
    u: &Subspace,
    detail: String,
) -> Violation {
    Violation {
        property,
        label: label.to_string(),
        counterexample: Counterexample {
            property: property.to_string(),
            formation: f.name(),
            algebra: AlgebraFile::from_algebra(l),
            subalgebra: subspace_repr(u),
            derivation: None,
            intravariant: None,
            detail,
        },
    }
}

/// Runs every per-algebra property for one formation.
pub fn check_algebra(l: &LieAlgebra, f: &dyn Formation, label: &str) -> AlgebraCheck {
    let mut out = AlgebraCheck::default();
    let whole = l.full_space();
    let fail = |out: &mut AlgebraCheck, p, u: &Subspace, detail: String| {
        out.violations.push(violation(p, label, l, f, u, detail));
    };

    match survey_maximals(l, f) {
        Ok(survey) => {
            for s in survey {
                out.maximal_classified += 1;
                match s.classification {
                    Ok(_) => {}
                    Err(e @ Error::CriteriaDisagree { .. }) => fail(&mut out, Property::CriteriaDisagree, &s.subalgebra, e.to_string()),
                    Err(e) => fail(&mut out, Property::Other, &s.subalgebra, e.to_string()),
                }
            }
        }
        Err(e) => fail(&mut out, Property::Other, &whole, e.to_string()),
    }

    let normalisers = match f_normalisers(l, f) {
        Ok(v) => v,
        Err(e) => {
            let p = match e {
                Error::NoCriticalDescent => Property::NoCriticalDescent,
                Error::CriteriaDisagree { .. } => Property::CriteriaDisagree,
                _ => Property::Other,
            };
            fail(&mut out, p, &whole, e.to_string());
            return out;
        }
    };
    for n in &normalisers {
        out.normalisers += 1;
        let u: &Subspace = &n.subalgebra;
        match f.contains(&l.restrict(&n.subalgebra).algebra) {
            Ok(true) => {}
            Ok(false) => fail(&mut out, Property::Other, u, format!("normaliser outside {}", f.name())),
            Err(e) => fail(&mut out, Property::Other, u, e.to_string()),
        }

        let linear = linear_obstruction(l, u);
        let extension = match extension_obstruction(l, u) {
            Ok(x) => x,
            Err(e) => {
                fail(&mut out, Property::Other, u, e.to_string());
                continue;
            }
        };
        let verdict = (linear.is_none(), extension.is_none());
        let mut record = |p: Property, detail: String| {
            let mut v = violation(p, label, l, f, u, detail);
            v.counterexample.intravariant = Some(verdict);
            v.counterexample.derivation = linear.as_ref().or(extension.as_ref()).map(matrix_repr);
            out.violations.push(v);
        };
        if verdict != (true, true) {
            record(Property::Intravariance, format!("normaliser {u} is not intravariant"));
        }
        if verdict.0 != verdict.1 {
            record(
                Property::IntravarianceCriteria,
                format!("linear test says {}, extension test says {}", verdict.0, verdict.1),
            );
        }

        match cover_avoid_check(l, u, f) {
            Ok(report) => {
                if let Some(bad) = report.violations().next() {
                    let detail = format!(
                        "factor {} / {} ({}) is not {}",
                        bad.upper,
                        bad.lower,
                        if bad.central { "central" } else { "eccentric" },
                        if bad.central { "covered" } else { "avoided" }
                    );
                    fail(&mut out, Property::CoverAvoid, u, detail);
                }
            }
            Err(e) => fail(&mut out, Property::Other, u, e.to_string()),
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub fields: Vec<String>,
    pub max_dim: usize,
    pub per_step_cap: Option<usize>,
    pub seed: u64,
    pub formations: Vec<String>,
    pub algebras: usize,
    pub maximal_classified: usize,
    pub normalisers: usize,
    pub violations: Vec<Violation>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, p: Property) -> usize {
        self.violations.iter().filter(|v| v.property == p).count()
    }
}

/// Worker count from `LIEFORM_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}

/// Checks every algebra of the stream in parallel. Results are reported in
/// stream order, so the summary does not depend on the worker count.
pub fn sweep(budget: &EnumerationBudget, formations: &[BuiltinFormation], threads: Option<usize>) -> Result<SweepSummary> {
    let algebras: Vec<EnumeratedAlgebra> = enumerate_soluble(budget)?.collect();
    let work = || {
        algebras
            .par_iter()
            .map(|e| {
                let label = e.label();
                formations
                    .iter()
                    .map(|f| check_algebra(&e.algebra, f, &label))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    };
    let checks = match threads.or_else(threads_from_env) {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::BudgetExceeded(format!("cannot start {n} workers: {e}")))?
            .install(work),
        None => work(),
    };
    let mut summary = SweepSummary {
        fields: budget.fields.iter().map(ToString::to_string).collect(),
        max_dim: budget.max_dim,
        per_step_cap: budget.per_step_cap,
        seed: budget.seed,
        formations: formations.iter().map(ToString::to_string).collect(),
        algebras: algebras.len(),
        maximal_classified: 0,
        normalisers: 0,
        violations: Vec::new(),
    };
    for check in checks.into_iter().flatten() {
        summary.maximal_classified += check.maximal_classified;
        summary.normalisers += check.normalisers;
        summary.violations.extend(check.violations);
    }
    Ok(summary)
}
