//! Lie algebras given by structure constants, their subalgebras and ideals.

use std::fmt;
use std::ops::Deref;

use crate::chief;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{axpy, is_zero_vector, unit_vector, zero_vector, Matrix, Subspace, Vector};

/// A finite-dimensional Lie algebra over an exact field.
///
/// The table stores `[e_i, e_j]` for every ordered pair; antisymmetry holds by
/// construction. Jacobi and solubility are checked by [`LieAlgebra::validate`].
/// Equality compares structure constants only; labels are cosmetic.
#[derive(Clone)]
pub struct LieAlgebra {
    field: FieldSpec,
    dim: usize,
    table: Vec<Vector>,
    labels: Option<Vec<String>>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.table == other.table
    }
}

impl Eq for LieAlgebra {}

/// Outcome of [`LieAlgebra::validate`]. Triples are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub jacobi_violations: Vec<(usize, usize, usize)>,
    pub soluble: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.jacobi_violations.is_empty() && self.soluble
    }

    pub fn into_result(self) -> Result<()> {
        if let Some(&(i, j, k)) = self.jacobi_violations.first() {
            return Err(Error::JacobiViolation { i, j, k });
        }
        if !self.soluble {
            return Err(Error::NotSoluble);
        }
        Ok(())
    }
}

impl LieAlgebra {
    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        LieAlgebra {
            field,
            dim,
            table: vec![zero_vector(field, dim); dim * dim],
            labels: None,
        }
    }

    /// Build from `[e_i, e_j] = value` with 0-based `i < j`; missing pairs are zero.
    pub fn from_brackets(field: FieldSpec, dim: usize, entries: impl IntoIterator<Item = (usize, usize, Vector)>) -> Result<Self> {
        let mut algebra = Self::abelian(field, dim);
        for (i, j, value) in entries {
            if i >= j || j >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket entry ({}, {}) must satisfy 1 <= i < j <= {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket value of length {} in a {dim}-dimensional algebra",
                    value.len()
                )));
            }
            if let Some(x) = value.iter().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
            }
            algebra.table[j * dim + i] = value.iter().map(|x| -x).collect();
            algebra.table[i * dim + j] = value;
        }
        Ok(algebra)
    }

    /// Build from a function giving `[e_i, e_j]` for `i < j`.
    pub fn from_fn(field: FieldSpec, dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let entries: Vec<_> = (0..dim)
            .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, f(i, j)))
            .collect();
        Self::from_brackets(field, dim, entries).expect("generated brackets are well formed")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.dim {
            self.labels = Some(labels);
        }
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `[e_i, e_j]`, 0-based.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim + j]
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = zero_vector(self.field, self.dim);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if i != j && !b.is_zero() {
                    axpy(&mut out, &(a * b), self.basis_bracket(i, j));
                }
            }
        }
        out
    }

    /// Matrix of `ad x = [x, -]` acting on column vectors.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let columns: Vec<Vector> = (0..self.dim).map(|j| self.bracket(x, &self.unit(j))).collect();
        Matrix::from_columns(self.field, self.dim, &columns).expect("square ad matrix")
    }

    pub fn unit(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vector {
        zero_vector(self.field, self.dim)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }

    /// Basis triples `i < j < k` where the Jacobi identity fails (1-based).
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (self.unit(i), self.unit(j), self.unit(k));
                    let mut sum = self.bracket(&ei, self.basis_bracket(j, k));
                    axpy(&mut sum, &self.field.one(), &self.bracket(&ej, self.basis_bracket(k, i)));
                    axpy(&mut sum, &self.field.one(), &self.bracket(&ek, self.basis_bracket(i, j)));
                    if !is_zero_vector(&sum) {
                        out.push((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            jacobi_violations: self.jacobi_violations(),
            soluble: self.is_soluble(),
        }
    }

    /// Consume the algebra if it satisfies Jacobi and is soluble.
    pub fn validated(self) -> Result<Self> {
        self.validate().into_result()?;
        Ok(self)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    pub fn span(&self, vectors: &[Vector]) -> Result<Subspace> {
        Subspace::span(self.field, self.dim, vectors)
    }

    /// `span{[a, b] : a in A, b in B}`
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vectors = Vec::with_capacity(a.dim() * b.dim());
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                let w = self.bracket(u, v);
                if !is_zero_vector(&w) {
                    vectors.push(w);
                }
            }
        }
        self.span(&vectors).expect("brackets stay in the algebra")
    }

    /// Derived series of the subalgebra `s`, ending at its stable term.
    pub fn derived_series_of(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().unwrap();
            let next = self.bracket_span(last, last);
            if next == *last {
                return series;
            }
            series.push(next);
        }
    }

    /// Lower central series of the subalgebra `s`, ending at its stable term.
    pub fn lower_central_series_of(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = vec![s.clone()];
        loop {
            let next = self.bracket_span(s, series.last().unwrap());
            if next == *series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn derived_series(&self) -> Vec<Ideal> {
        self.derived_series_of(&self.full_space()).into_iter().map(Ideal).collect()
    }

    pub fn lower_central_series(&self) -> Vec<Ideal> {
        self.lower_central_series_of(&self.full_space()).into_iter().map(Ideal).collect()
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series_of(&self.full_space()).last().unwrap().is_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_subalgebra(&self.full_space())
    }

    pub fn is_nilpotent_subalgebra(&self, s: &Subspace) -> bool {
        self.lower_central_series_of(s).last().unwrap().is_zero()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis_vectors()
            .enumerate()
            .all(|(i, u)| s.basis_vectors().skip(i + 1).all(|v| s.contains(&self.bracket(u, v))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim).all(|i| {
            let ad = self.unit(i);
            s.basis_vectors().all(|v| s.contains(&self.bracket(&ad, v)))
        })
    }

    pub fn subalgebra(&self, s: Subspace) -> Result<Subalgebra> {
        self.check_ambient(&s)?;
        if self.is_subalgebra(&s) {
            Ok(Subalgebra(s))
        } else {
            Err(Error::NotASubalgebra)
        }
    }

    pub fn ideal(&self, s: Subspace) -> Result<Ideal> {
        self.check_ambient(&s)?;
        if self.is_ideal(&s) {
            Ok(Ideal(s))
        } else {
            Err(Error::NotAnIdeal)
        }
    }

    fn check_ambient(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch(s.ambient_dim(), self.dim));
        }
        if s.field() != self.field {
            return Err(Error::FieldMismatch(s.field().to_string(), self.field.to_string()));
        }
        Ok(())
    }

    pub fn whole(&self) -> Ideal {
        Ideal(self.full_space())
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal(self.zero_space())
    }

    /// Smallest subalgebra containing `s`.
    pub fn subalgebra_closure(&self, s: &Subspace) -> Subalgebra {
        let mut current = s.clone();
        loop {
            let next = current.sum(&self.bracket_span(&current, &current)).expect("same ambient");
            if next == current {
                return Subalgebra(current);
            }
            current = next;
        }
    }

    /// Smallest ideal containing `s`: the span of `s` under repeated `ad`.
    pub fn ideal_closure(&self, s: &Subspace) -> Ideal {
        let full = self.full_space();
        let mut current = s.clone();
        loop {
            let next = current.sum(&self.bracket_span(&full, &current)).expect("same ambient");
            if next == current {
                return Ideal(current);
            }
            current = next;
        }
    }

    /// `{x : [x, a] in B for all a in A}` for arbitrary subspaces `A`, `B`.
    pub fn transporter(&self, a: &Subspace, b: &Subspace) -> Subspace {
        if b.is_full() || a.is_zero() {
            return self.full_space();
        }
        let ann = b.annihilator();
        let mut rows: Vec<Vector> = Vec::new();
        for v in a.basis_vectors() {
            // x -> [x, v] has column j equal to [e_j, v]
            let columns: Vec<Vector> = (0..self.dim).map(|j| self.bracket(&self.unit(j), v)).collect();
            for w in ann.basis_vectors() {
                let row: Vector = columns
                    .iter()
                    .map(|col| {
                        col.iter()
                            .zip(w)
                            .fold(self.field.zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { &acc + &(x * y) })
                    })
                    .collect();
                if !is_zero_vector(&row) {
                    rows.push(row);
                }
            }
        }
        Matrix::from_rows(self.field, self.dim, &rows).expect("constraint rows").kernel()
    }

    pub fn centre(&self) -> Ideal {
        Ideal(self.centralizer(&self.full_space()))
    }

    /// `{x : [x, s] = 0 for all s}`
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        self.transporter(s, &self.zero_space())
    }

    /// `C_L(A/B) = {x : [x, A] ⊆ B}`, an ideal whenever `A` and `B` are.
    pub fn centralizer_of_factor(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        if !a.contains_subspace(b) {
            return Err(Error::NotNested);
        }
        Ok(Ideal(self.transporter(a, b)))
    }

    /// `N_L(U) = {x : [x, U] ⊆ U}`
    pub fn normalizer(&self, u: &Subspace) -> Subalgebra {
        Subalgebra(self.transporter(u, u))
    }

    /// Largest ideal of `L` inside `m`.
    pub fn core(&self, m: &Subspace) -> Ideal {
        let full = self.full_space();
        let mut current = m.clone();
        loop {
            // {x in K : [L, x] ⊆ K}
            let next = current.intersect(&self.transporter(&full, &current)).expect("same ambient");
            if next == current {
                return Ideal(current);
            }
            current = next;
        }
    }

    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        self.check_ambient(ideal)?;
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let complement = ideal.complement_indices();
        let q = complement.len();
        let section = Matrix::from_fn(self.field, self.dim, q, |r, c| {
            if complement[c] == r {
                self.field.one()
            } else {
                self.field.zero()
            }
        });
        let project = |v: &[Scalar]| -> Vector {
            let reduced = ideal.reduce(v);
            complement.iter().map(|&c| reduced[c].clone()).collect()
        };
        let columns: Vec<Vector> = (0..self.dim).map(|j| project(&self.unit(j))).collect();
        let projection = Matrix::from_columns(self.field, q, &columns)?;
        let algebra = LieAlgebra::from_fn(self.field, q, |a, b| {
            project(self.basis_bracket(complement[a], complement[b]))
        });
        Ok(Quotient {
            algebra,
            projection,
            section,
            kernel: ideal.clone(),
        })
    }

    /// The subalgebra `s` as an algebra in its own canonical basis.
    pub fn restrict(&self, s: &Subalgebra) -> Restriction {
        let k = s.dim();
        let basis: Vec<Vector> = s.basis_vectors().map(<[Scalar]>::to_vec).collect();
        let algebra = LieAlgebra::from_fn(self.field, k, |a, b| {
            s.coordinates(&self.bracket(&basis[a], &basis[b]))
                .expect("subalgebra is bracket closed")
        });
        let embedding = Matrix::from_columns(self.field, self.dim, &basis).expect("embedding columns");
        Restriction {
            algebra,
            embedding,
            space: s.0.clone(),
        }
    }

    /// Nil radical as the intersection of the centralisers of the factors of
    /// a chief series.
    pub fn nilradical(&self) -> Result<Ideal> {
        let series = chief::chief_series(self)?;
        let mut n = self.full_space();
        for factor in series.factors() {
            let c = self.centralizer_of_factor(&factor.upper, &factor.lower)?;
            n = n.intersect(&c)?;
        }
        Ok(Ideal(n))
    }

    /// A short isomorphism-invariant summary for logs.
    pub fn fingerprint(&self) -> String {
        let dims = |s: Vec<Ideal>| s.iter().map(|i| i.dim().to_string()).collect::<Vec<_>>().join(",");
        format!(
            "{}:d{}:der[{}]:lcs[{}]:z{}",
            self.field,
            self.dim,
            dims(self.derived_series()),
            dims(self.lower_central_series()),
            self.centre().dim()
        )
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-dimensional Lie algebra over {}", self.dim, self.field)?;
        let name = |i: usize| match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{}", i + 1),
        };
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.basis_bracket(i, j);
                if is_zero_vector(v) {
                    continue;
                }
                write!(f, "\n  [{}, {}] = ", name(i), name(j))?;
                let mut first = true;
                for (k, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    if c.is_one() {
                        write!(f, "{}", name(k))?;
                    } else {
                        write!(f, "({c}){}", name(k))?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A subspace certified closed under the bracket of its parent algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subalgebra(Subspace);

/// A subspace certified invariant under `ad` of its parent algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal(Subspace);

impl Subalgebra {
    pub fn space(&self) -> &Subspace {
        &self.0
    }

    pub fn into_space(self) -> Subspace {
        self.0
    }

    pub(crate) fn new_unchecked(s: Subspace) -> Self {
        Subalgebra(s)
    }
}

impl Ideal {
    pub fn space(&self) -> &Subspace {
        &self.0
    }

    pub fn into_space(self) -> Subspace {
        self.0
    }

    pub fn as_subalgebra(&self) -> Subalgebra {
        Subalgebra(self.0.clone())
    }

    pub(crate) fn new_unchecked(s: Subspace) -> Self {
        Ideal(s)
    }
}

impl Deref for Subalgebra {
    type Target = Subspace;
    fn deref(&self) -> &Subspace {
        &self.0
    }
}

impl Deref for Ideal {
    type Target = Subspace;
    fn deref(&self) -> &Subspace {
        &self.0
    }
}

impl fmt::Display for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `L/I` on the complement spanned by the non-pivot unit vectors of `I`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `dim(L/I) × dim L`
    pub projection: Matrix,
    /// `dim L × dim(L/I)`, a right inverse of `projection`.
    pub section: Matrix,
    pub kernel: Subspace,
}

impl Quotient {
    pub fn project(&self, v: &[Scalar]) -> Vector {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, v: &[Scalar]) -> Vector {
        self.section.mul_vec(v)
    }

    pub fn project_subspace(&self, s: &Subspace) -> Subspace {
        s.image(&self.projection)
    }

    /// Full preimage in `L` of a subspace of the quotient.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        s.image(&self.section).sum(&self.kernel).expect("same ambient")
    }
}

/// A subalgebra viewed as an algebra in its own right.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub algebra: LieAlgebra,
    /// `dim L × dim U`; its columns are the canonical basis of `U`.
    pub embedding: Matrix,
    pub space: Subspace,
}

impl Restriction {
    pub fn embed(&self, v: &[Scalar]) -> Vector {
        self.embedding.mul_vec(v)
    }

    pub fn embed_subspace(&self, s: &Subspace) -> Subspace {
        s.image(&self.embedding)
    }

    /// Coordinates in the restricted algebra, if `v` lies in the subalgebra.
    pub fn pull(&self, v: &[Scalar]) -> Option<Vector> {
        self.space.coordinates(v)
    }

    pub fn pull_subspace(&self, s: &Subspace) -> Option<Subspace> {
        let vectors = s.basis_vectors().map(|v| self.pull(v)).collect::<Option<Vec<_>>>()?;
        Some(Subspace::span(self.algebra.field(), self.algebra.dim(), &vectors).expect("coordinates"))
    }
}
