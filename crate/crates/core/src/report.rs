//! A full structural report on one algebra, as JSON or plain text.

use std::fmt::Write as _;

use serde::Serialize;

use crate::chief::chief_series;
use crate::derivation::{derivation_algebra, inner_derivations, is_intravariant_extension, is_intravariant_linear};
use crate::error::{Error, Result};
use crate::formation::{cover_avoid_check, f_normalisers, survey_maximals, BuiltinFormation, Formation};
use crate::io::{subspace_repr, SubspaceRepr};
use crate::lie::LieAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalEntry {
    pub subalgebra: SubspaceRepr,
    pub verdict: String,
    pub critical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormaliserEntry {
    pub subalgebra: SubspaceRepr,
    pub chain: Vec<SubspaceRepr>,
    pub intravariant_linear: bool,
    pub intravariant_extension: bool,
    pub cover_avoid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormationReport {
    pub formation: String,
    pub member: bool,
    pub maximal: Option<Vec<MaximalEntry>>,
    pub normalisers: Option<Vec<NormaliserEntry>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub field: String,
    pub dim: usize,
    pub fingerprint: String,
    pub nilpotent: bool,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_series_dims: Vec<usize>,
    pub nilradical: Option<SubspaceRepr>,
    pub chief_series: Option<Vec<SubspaceRepr>>,
    pub chief_factor_dims: Option<Vec<usize>>,
    pub derivation_dim: usize,
    pub inner_derivation_dim: usize,
    pub formations: Vec<FormationReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn unsupported_note(e: Error, what: &str, notes: &mut Vec<String>) -> Result<()> {
    match e {
        Error::UnsupportedField(msg) => {
            notes.push(format!("{what} skipped: {msg}"));
            Ok(())
        }
        other => Err(other),
    }
}

fn formation_report(l: &LieAlgebra, f: BuiltinFormation) -> Result<FormationReport> {
    let mut notes = Vec::new();
    let member = match f.contains(l) {
        Ok(m) => m,
        Err(e) => {
            unsupported_note(e, "membership", &mut notes)?;
            return Ok(FormationReport {
                formation: f.name(),
                member: false,
                maximal: None,
                normalisers: None,
                notes,
            });
        }
    };

    let maximal = match survey_maximals(l, &f) {
        Ok(survey) => Some(
            survey
                .into_iter()
                .map(|s| {
                    Ok(MaximalEntry {
                        subalgebra: subspace_repr(&s.subalgebra),
                        verdict: s.classification?.verdict.to_string(),
                        critical: s.critical,
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        ),
        Err(e) => {
            unsupported_note(e, "maximal subalgebras", &mut notes)?;
            None
        }
    };

    let normalisers = match f_normalisers(l, &f) {
        Ok(list) => Some(
            list.iter()
                .map(|n| {
                    Ok(NormaliserEntry {
                        subalgebra: subspace_repr(&n.subalgebra),
                        chain: n.chain.steps().iter().map(subspace_repr).collect(),
                        intravariant_linear: is_intravariant_linear(l, &n.subalgebra),
                        intravariant_extension: is_intravariant_extension(l, &n.subalgebra)?,
                        cover_avoid: cover_avoid_check(l, &n.subalgebra, &f)?.passed(),
                    })
                })
                .collect::<Result<Vec<_>>>()?,
        ),
        Err(e) => {
            unsupported_note(e, "normalisers", &mut notes)?;
            None
        }
    };

    Ok(FormationReport {
        formation: f.name(),
        member,
        maximal,
        normalisers,
        notes,
    })
}

/// Criteria disagreement and failed critical descent are returned as errors;
/// anything that only needs a prime field is skipped with a note over ℚ.
pub fn analyze(l: &LieAlgebra, formations: &[BuiltinFormation]) -> Result<AnalysisReport> {
    let mut notes = Vec::new();
    let dims = |v: Vec<crate::lie::Ideal>| v.iter().map(|i| i.dim()).collect::<Vec<_>>();
    let (nilradical, chief, factor_dims) = match chief_series(l) {
        Ok(series) => (
            Some(subspace_repr(l.nilradical()?.space())),
            Some(series.terms().iter().map(|t| subspace_repr(t)).collect()),
            Some(series.factor_dims()),
        ),
        Err(e) => {
            unsupported_note(e, "chief series", &mut notes)?;
            (None, None, None)
        }
    };
    let formations = formations
        .iter()
        .map(|&f| formation_report(l, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(AnalysisReport {
        field: l.field().to_string(),
        dim: l.dim(),
        fingerprint: l.fingerprint(),
        nilpotent: l.is_nilpotent(),
        derived_series_dims: dims(l.derived_series()),
        lower_central_series_dims: dims(l.lower_central_series()),
        nilradical,
        chief_series: chief,
        chief_factor_dims: factor_dims,
        derivation_dim: derivation_algebra(l).dim(),
        inner_derivation_dim: inner_derivations(l).dim(),
        formations,
        notes,
    })
}

fn show_subspace(s: &SubspaceRepr) -> String {
    if s.is_empty() {
        return "0".to_string();
    }
    let vs: Vec<String> = s.iter().map(|v| format!("({})", v.join(","))).collect();
    format!("span[{}]", vs.join(", "))
}

fn join_dims(d: &[usize]) -> String {
    d.iter().map(usize::to_string).collect::<Vec<_>>().join(" > ")
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(w, "algebra: dim {} over {}", self.dim, self.field).unwrap();
        writeln!(w, "fingerprint: {}", self.fingerprint).unwrap();
        writeln!(w, "nilpotent: {}", yn(self.nilpotent)).unwrap();
        writeln!(w, "derived series dims: {}", join_dims(&self.derived_series_dims)).unwrap();
        writeln!(w, "lower central series dims: {}", join_dims(&self.lower_central_series_dims)).unwrap();
        if let Some(n) = &self.nilradical {
            writeln!(w, "nilradical: {}", show_subspace(n)).unwrap();
        }
        if let (Some(terms), Some(dims)) = (&self.chief_series, &self.chief_factor_dims) {
            let shown: Vec<String> = terms.iter().map(show_subspace).collect();
            writeln!(w, "chief series: {}", shown.join(" < ")).unwrap();
            let dims: Vec<String> = dims.iter().map(usize::to_string).collect();
            writeln!(w, "chief factor dims: {}", dims.join(", ")).unwrap();
        }
        writeln!(w, "derivations: dim {} (inner {})", self.derivation_dim, self.inner_derivation_dim).unwrap();
        for f in &self.formations {
            writeln!(w, "\nformation {}: member {}", f.formation, yn(f.member)).unwrap();
            if let Some(maximal) = &f.maximal {
                writeln!(w, "  maximal subalgebras: {}", maximal.len()).unwrap();
                for m in maximal {
                    let crit = if m.critical { ", critical" } else { "" };
                    writeln!(w, "    {} {}{}", show_subspace(&m.subalgebra), m.verdict, crit).unwrap();
                }
            }
            if let Some(normalisers) = &f.normalisers {
                writeln!(w, "  normalisers: {}", normalisers.len()).unwrap();
                for n in normalisers {
                    writeln!(
                        w,
                        "    {} chain length {}; intravariant linear {}, extension {}; cover-avoid {}",
                        show_subspace(&n.subalgebra),
                        n.chain.len(),
                        yn(n.intravariant_linear),
                        yn(n.intravariant_extension),
                        if n.cover_avoid { "pass" } else { "FAIL" }
                    )
                    .unwrap();
                }
            }
            for note in &f.notes {
                writeln!(w, "  note: {note}").unwrap();
            }
        }
        for note in &self.notes {
            writeln!(w, "note: {note}").unwrap();
        }
        out
    }
}
