//! JSON file formats.
//!
//! Algebras: `{"field": "GF(3)", "dim": 2, "brackets": [{"i": 1, "j": 2, "value": ["0", "1"]}]}`
//! with 1-based `i < j`, omitted pairs zero, scalars as strings and an
//! optional `"labels"` list. Subspaces are lists of basis vectors, chains are
//! lists of subspaces, matrices are lists of rows.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::formation::NormaliserChain;
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace, Vector};

pub type VectorRepr = Vec<String>;
pub type SubspaceRepr = Vec<VectorRepr>;
pub type MatrixRepr = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: VectorRepr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: String,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl AlgebraFile {
    pub fn from_algebra(l: &LieAlgebra) -> Self {
        let mut brackets = Vec::new();
        for i in 0..l.dim() {
            for j in i + 1..l.dim() {
                let v = l.basis_bracket(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    brackets.push(BracketEntry {
                        i: i + 1,
                        j: j + 1,
                        value: vector_repr(v),
                    });
                }
            }
        }
        AlgebraFile {
            field: l.field().to_string(),
            dim: l.dim(),
            brackets,
            labels: l.labels().map(<[String]>::to_vec),
        }
    }

    /// Builds the table without the Jacobi/solubility check.
    pub fn to_algebra_unchecked(&self) -> Result<LieAlgebra> {
        let field: FieldSpec = self.field.parse()?;
        let n = self.dim;
        let mut entries = Vec::with_capacity(self.brackets.len());
        let mut seen = std::collections::HashSet::new();
        for b in &self.brackets {
            if b.i == 0 || b.j == 0 || b.i > n || b.j > n {
                return Err(Error::Parse(format!("bracket index ({}, {}) outside 1..={n}", b.i, b.j)));
            }
            if b.i >= b.j {
                return Err(Error::Parse(format!("bracket ({}, {}) must have i < j", b.i, b.j)));
            }
            if !seen.insert((b.i, b.j)) {
                return Err(Error::Parse(format!("bracket ({}, {}) given twice", b.i, b.j)));
            }
            entries.push((b.i - 1, b.j - 1, parse_vector(&b.value, field, n)?));
        }
        let l = LieAlgebra::from_brackets(field, n, entries)?;
        match &self.labels {
            Some(labels) if labels.len() != n => Err(Error::Parse(format!("{} labels for dimension {n}", labels.len()))),
            Some(labels) => Ok(l.with_labels(labels.clone())),
            None => Ok(l),
        }
    }

    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        self.to_algebra_unchecked()?.validated()
    }
}

/// Parses and validates (Jacobi and solubility).
pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    serde_json::from_str::<AlgebraFile>(text)?.to_algebra()
}

pub fn parse_algebra_unchecked(text: &str) -> Result<LieAlgebra> {
    serde_json::from_str::<AlgebraFile>(text)?.to_algebra_unchecked()
}

pub fn algebra_to_json(l: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(l)).expect("serialisable")
}

pub fn vector_repr(v: &[Scalar]) -> VectorRepr {
    v.iter().map(Scalar::to_string).collect()
}

pub fn subspace_repr(s: &Subspace) -> SubspaceRepr {
    s.basis_vectors().map(vector_repr).collect()
}

pub fn matrix_repr(m: &Matrix) -> MatrixRepr {
    m.row_vectors().map(vector_repr).collect()
}

pub fn parse_vector(v: &[String], field: FieldSpec, n: usize) -> Result<Vector> {
    if v.len() != n {
        return Err(Error::Parse(format!("vector has {} entries, expected {n}", v.len())));
    }
    v.iter().map(|s| Scalar::parse(s, field)).collect()
}

pub fn parse_subspace(s: &[VectorRepr], field: FieldSpec, n: usize) -> Result<Subspace> {
    let vectors = s.iter().map(|v| parse_vector(v, field, n)).collect::<Result<Vec<_>>>()?;
    Subspace::span(field, n, &vectors)
}

pub fn parse_matrix(m: &[Vec<String>], field: FieldSpec, n: usize) -> Result<Matrix> {
    if m.len() != n {
        return Err(Error::Parse(format!("matrix has {} rows, expected {n}", m.len())));
    }
    let rows = m.iter().map(|r| parse_vector(r, field, n)).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, n, &rows)
}

/// Command-line basis notation: vectors separated by `;`, entries by `,`,
/// e.g. `"1,0,0;0,1,0"`. The empty string is the zero subspace.
pub fn parse_basis_spec(text: &str, field: FieldSpec, n: usize) -> Result<Subspace> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Subspace::zero(field, n));
    }
    let vectors: Vec<VectorRepr> = text
        .split(';')
        .map(|v| v.split(',').map(|x| x.trim().to_string()).collect())
        .collect();
    parse_subspace(&vectors, field, n)
}

pub fn chain_to_json(chain: &NormaliserChain) -> String {
    let steps: Vec<SubspaceRepr> = chain.steps().iter().map(subspace_repr).collect();
    serde_json::to_string_pretty(&steps).expect("serialisable")
}

pub fn parse_chain(text: &str, l: &LieAlgebra) -> Result<NormaliserChain> {
    let steps: Vec<SubspaceRepr> = serde_json::from_str(text)?;
    let steps = steps
        .iter()
        .map(|s| parse_subspace(s, l.field(), l.dim()))
        .collect::<Result<Vec<_>>>()?;
    Ok(NormaliserChain::new(steps))
}

/// A replayable record of a failed property check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub property: String,
    pub formation: String,
    pub algebra: AlgebraFile,
    pub subalgebra: SubspaceRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation: Option<MatrixRepr>,
    /// Intravariance verdicts `(linear, extension)` observed for the subalgebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intravariant: Option<(bool, bool)>,
    pub detail: String,
}

impl Counterexample {
    pub fn algebra(&self) -> Result<LieAlgebra> {
        self.algebra.to_algebra()
    }

    pub fn subalgebra(&self, l: &LieAlgebra) -> Result<Subspace> {
        parse_subspace(&self.subalgebra, l.field(), l.dim())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{h3, r2, rotation_gf2, vector};

    #[test]
    fn round_trips() {
        for l in [r2(FieldSpec::RATIONALS), h3(FieldSpec::prime(3).unwrap()), rotation_gf2()] {
            let text = algebra_to_json(&l);
            let back = parse_algebra(&text).unwrap();
            assert_eq!(back, l);
            assert_eq!(back.labels(), l.labels());
            assert_eq!(algebra_to_json(&back), text);
        }
    }

    #[test]
    fn parses_the_documented_example() {
        let l = parse_algebra(r#"{"field": "GF(3)", "dim": 2, "brackets": [{"i":1, "j":2, "value":["0","1"]}]}"#).unwrap();
        assert_eq!(l, r2(FieldSpec::prime(3).unwrap()));
        let q = parse_algebra(r#"{"field": "Q", "dim": 2, "brackets": [{"i":1, "j":2, "value":["0","-1/2"]}]}"#).unwrap();
        assert_eq!(q.basis_bracket(0, 1)[1], Scalar::parse("-1/2", FieldSpec::RATIONALS).unwrap());
    }

    #[test]
    fn rejects_bad_files() {
        let bad = [
            r#"{"field": "GF(4)", "dim": 1}"#,
            r#"{"field": "Q", "dim": 2, "brackets": [{"i":2, "j":1, "value":["0","1"]}]}"#,
            r#"{"field": "Q", "dim": 2, "brackets": [{"i":1, "j":3, "value":["0","1"]}]}"#,
            r#"{"field": "Q", "dim": 2, "brackets": [{"i":1, "j":2, "value":["0"]}]}"#,
            r#"{"field": "Q", "dim": 2, "brackets": [{"i":1, "j":2, "value":["0","x"]}]}"#,
            r#"{"field": "Q", "dim": 2, "brackets": [{"i":1, "j":2, "value":["0","1"]}, {"i":1, "j":2, "value":["0","1"]}]}"#,
            r#"{"field": "Q", "dim": 1, "labels": ["a", "b"]}"#,
            r#"{"field": "Q", "dim": 1, "extra": 1}"#,
            "not json",
        ];
        for text in bad {
            assert!(parse_algebra(text).is_err(), "{text}");
        }
        // sl2 is not soluble
        let sl2 = r#"{"field": "Q", "dim": 3, "brackets": [
            {"i":1, "j":2, "value":["0","0","1"]},
            {"i":1, "j":3, "value":["-2","0","0"]},
            {"i":2, "j":3, "value":["0","2","0"]}]}"#;
        assert_eq!(parse_algebra(sl2).unwrap_err(), Error::NotSoluble);
        let broken = r#"{"field": "Q", "dim": 3, "brackets": [
            {"i":1, "j":2, "value":["1","0","0"]},
            {"i":1, "j":3, "value":["0","1","0"]}]}"#;
        assert!(matches!(parse_algebra(broken), Err(Error::JacobiViolation { .. })));
        assert!(parse_algebra_unchecked(broken).is_ok());
    }

    #[test]
    fn basis_specs() {
        let f = FieldSpec::prime(3).unwrap();
        let s = parse_basis_spec("1,2;0,1", f, 2).unwrap();
        assert!(s.is_full());
        let line = parse_basis_spec(" 2 , 1 ", f, 2).unwrap();
        assert!(line.contains(&vector(f, &[1, 2])));
        assert!(parse_basis_spec("", f, 2).unwrap().is_zero());
        assert!(parse_basis_spec("1,0,0", f, 2).is_err());
    }

    #[test]
    fn chains_and_counterexamples() {
        let f = FieldSpec::prime(3).unwrap();
        let l = r2(f);
        let chain = NormaliserChain::new(vec![l.span(&[vector(f, &[1, 2])]).unwrap()]);
        assert_eq!(parse_chain(&chain_to_json(&chain), &l).unwrap(), chain);
        let ce = Counterexample {
            property: "intravariance".into(),
            formation: "nilpotent".into(),
            algebra: AlgebraFile::from_algebra(&l),
            subalgebra: subspace_repr(chain.steps().first().unwrap()),
            derivation: Some(matrix_repr(&Matrix::identity(f, 2))),
            intravariant: Some((true, true)),
            detail: String::new(),
        };
        let back = Counterexample::from_json(&ce.to_json()).unwrap();
        assert_eq!(back, ce);
        assert_eq!(back.algebra().unwrap(), l);
        assert_eq!(back.subalgebra(&l).unwrap(), chain.steps()[0]);
    }
}
