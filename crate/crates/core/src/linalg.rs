//! Dense exact linear algebra: echelon forms, kernels and subspaces.
//!
//! Vectors are coordinate columns in a fixed basis; a [`Matrix`] acts on
//! them from the left. Subspaces are stored by the reduced row-echelon form
//! of a spanning set, so equal subspaces compare and hash equal.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

pub fn add_vectors(u: &[Scalar], v: &[Scalar]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Every vector of GF(p)^k whose first nonzero coordinate is 1, one per
/// line through the origin, in lexicographic order of residues.
pub fn projective_points(field: FieldSpec, k: usize) -> Vec<Vector> {
    let p = field.modulus().expect("projective points need a finite field");
    let mut out = Vec::new();
    for lead in 0..k {
        let tail = k - lead - 1;
        for mut idx in 0..p.pow(tail as u32) {
            let mut v = zero_vector(field, k);
            v[lead] = field.one();
            for slot in v.iter_mut().skip(lead + 1).rev() {
                *slot = Scalar::from_residue(field, idx % p);
                idx /= p;
            }
            out.push(v);
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rref`]: nonzero rows only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from row vectors; every row must have `cols` entries over `field`.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row of length {} in a {cols}-column matrix", row.len())));
            }
            if let Some(x) = row.iter().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
            }
            data.extend(row.iter().cloned());
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            field,
            data,
        })
    }

    /// Build from column vectors, each of length `rows`.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vector]) -> Result<Self> {
        Ok(Self::from_rows(field, rows, columns)?.transpose())
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, field, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = zero_vector(self.field, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let cols: Vec<Vector> = (0..other.cols).map(|c| self.mul_vec(&other.column(c))).collect();
        Matrix::from_columns(self.field, self.rows, &cols).expect("well-formed product")
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            data: add_vectors(&self.data, &other.data),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            data: scale_vector(c, &self.data),
            ..self.clone()
        }
    }

    /// `self * other - other * self`
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    /// Gauss–Jordan elimination; zero rows are dropped from the result.
    pub fn rref(&self) -> Rref {
        let mut rows: Vec<Vector> = self.row_vectors().map(<[Scalar]>::to_vec).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            let Some(found) = (next..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(next, found);
            let inv = rows[next][c].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                rows[next] = scale_vector(&inv, &rows[next]);
            }
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != next && !row[c].is_zero() {
                    let factor = -&row[c];
                    axpy(row, &factor, &pivot_row);
                }
            }
            pivots.push(c);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        let matrix = Matrix::from_rows(self.field, self.cols, &rows).expect("rows keep their shape");
        Rref {
            matrix,
            rank: next,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis: Vec<Vector> = free
            .iter()
            .map(|&f| {
                let mut v = zero_vector(self.field, self.cols);
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(i, f);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.cols, &basis).expect("kernel vectors are well formed")
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let augmented = Matrix::from_fn(self.field, self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let Rref { matrix, pivots, .. } = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vector(self.field, self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write_vector(f, self.row(r))?;
        }
        write!(f, "]")
    }
}

pub(crate) fn write_vector(f: &mut fmt::Formatter<'_>, v: &[Scalar]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// A subspace of F^n in canonical (reduced row-echelon) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        Ok(Self::row_space(&Matrix::from_rows(field, ambient, vectors)?))
    }

    pub fn row_space(m: &Matrix) -> Self {
        let Rref { matrix, pivots, .. } = m.rref();
        Subspace {
            ambient: m.cols(),
            basis: matrix,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Standard basis indices not used as pivots; their unit vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Remainder of `v` after clearing the pivot coordinates against the basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient, "vector does not live in the ambient space");
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !out[p].is_zero() {
                let c = -&out[p];
                axpy(&mut out, &c, self.basis.row(i));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coefficients in the canonical basis.
    pub fn combine(&self, coeffs: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field(), self.ambient);
        for (c, row) in coeffs.iter().zip(self.basis_vectors()) {
            axpy(&mut out, c, row);
        }
        out
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.dim() <= self.dim() && other.basis_vectors().all(|v| self.contains(v))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field().to_string(), other.field().to_string()));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of the stacked system `A^T x + B^T y = 0`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field(), self.ambient));
        }
        let stacked = self.basis.vstack(&other.basis).transpose();
        let relations = stacked.kernel();
        let vectors: Vec<Vector> = relations
            .basis_vectors()
            .map(|rel| self.combine(&rel[..self.dim()]))
            .collect();
        Subspace::span(self.field(), self.ambient, &vectors)
    }

    /// `{w : w · v = 0 for all v in self}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    /// Image of the subspace under a linear map with `ambient` columns.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let vectors: Vec<Vector> = self.basis_vectors().map(|v| map.mul_vec(v)).collect();
        Subspace::span(map.field(), map.rows(), &vectors).expect("images share the codomain")
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{}", self.basis)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{}", self.basis)
    }
}
