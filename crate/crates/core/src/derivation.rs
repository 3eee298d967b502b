//! Derivation algebras and the two intravariance tests.
//!
//! An `n × n` matrix is identified with a vector of `F^(n²)` in row-major
//! order so that sets of derivations can be handled as subspaces.

use crate::chief::split_extension_by_derivation;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::lie::LieAlgebra;
use crate::linalg::{add_vectors, Matrix, Subspace, Vector};

pub fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

pub fn unflatten(field: FieldSpec, n: usize, v: &[crate::field::Scalar]) -> Matrix {
    Matrix::from_fn(field, n, n, |r, c| v[r * n + c].clone())
}

/// First basis pair (1-based) where `d` breaks the Leibniz rule.
pub fn leibniz_defect(l: &LieAlgebra, d: &Matrix) -> Result<Option<(usize, usize)>> {
    let n = l.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for a {n}-dimensional algebra",
            d.rows(),
            d.cols()
        )));
    }
    if d.field() != l.field() {
        return Err(Error::FieldMismatch(d.field().to_string(), l.field().to_string()));
    }
    let images: Vec<Vector> = (0..n).map(|i| d.column(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(l.basis_bracket(i, j));
            let rhs = add_vectors(&l.bracket(&images[i], &l.unit(j)), &l.bracket(&l.unit(i), &images[j]));
            if lhs != rhs {
                return Ok(Some((i + 1, j + 1)));
            }
        }
    }
    Ok(None)
}

/// `Der(L)` as a subspace of the flattened matrix space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationAlgebra {
    n: usize,
    space: Subspace,
}

impl DerivationAlgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.space
            .basis_vectors()
            .map(|v| unflatten(self.space.field(), self.n, v))
            .collect()
    }

    pub fn contains(&self, d: &Matrix) -> bool {
        self.space.contains(&flatten(d))
    }
}

/// Solve the Leibniz system over all basis pairs.
pub fn derivation_algebra(l: &LieAlgebra) -> DerivationAlgebra {
    let n = l.dim();
    let field = l.field();
    let var = |r: usize, c: usize| r * n + c;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = vec![field.zero(); n * n];
                // d([e_i, e_j])_k
                for (m, c) in l.basis_bracket(i, j).iter().enumerate() {
                    row[var(k, m)] = &row[var(k, m)] + c;
                }
                for r in 0..n {
                    // [d e_i, e_j]_k and [e_i, d e_j]_k
                    let a = &l.basis_bracket(r, j)[k];
                    row[var(r, i)] = &row[var(r, i)] - a;
                    let b = &l.basis_bracket(i, r)[k];
                    row[var(r, j)] = &row[var(r, j)] - b;
                }
                rows.push(row);
            }
        }
    }
    let space = Matrix::from_rows(field, n * n, &rows).expect("Leibniz rows").kernel();
    DerivationAlgebra { n, space }
}

/// `span{ad e_1, …, ad e_n}`
pub fn inner_derivations(l: &LieAlgebra) -> Subspace {
    let ads: Vec<Vector> = (0..l.dim()).map(|i| flatten(&l.ad(&l.unit(i)))).collect();
    Subspace::span(l.field(), l.dim() * l.dim(), &ads).expect("flattened ad matrices")
}

/// `{d ∈ Der(L) : d(U) ⊆ U}`
pub fn stabilizing_derivations(der: &DerivationAlgebra, u: &Subspace) -> Subspace {
    let field = der.space.field();
    let basis = der.basis();
    let ann = u.annihilator();
    let mut rows = Vec::new();
    for v in u.basis_vectors() {
        let images: Vec<Vector> = basis.iter().map(|d| d.mul_vec(v)).collect();
        for w in ann.basis_vectors() {
            rows.push(
                images
                    .iter()
                    .map(|img| img.iter().zip(w).fold(field.zero(), |acc, (x, y)| &acc + &(x * y)))
                    .collect::<Vector>(),
            );
        }
    }
    let solutions = Matrix::from_rows(field, basis.len(), &rows).expect("constraint rows").kernel();
    let vectors: Vec<Vector> = solutions.basis_vectors().map(|t| der.space.combine(t)).collect();
    Subspace::span(field, der.n * der.n, &vectors).expect("flattened derivations")
}

/// A basis derivation that is not inner plus `U`-stabilising, if any.
pub fn linear_obstruction(l: &LieAlgebra, u: &Subspace) -> Option<Matrix> {
    let der = derivation_algebra(l);
    let decomposable = inner_derivations(l)
        .sum(&stabilizing_derivations(&der, u))
        .expect("same matrix space");
    der.basis().into_iter().find(|d| !decomposable.contains(&flatten(d)))
}

/// Every derivation is an inner derivation plus one stabilising `U`.
pub fn is_intravariant_linear(l: &LieAlgebra, u: &Subspace) -> bool {
    linear_obstruction(l, u).is_none()
}

/// A basis derivation `d` with `N_D(U) + L ≠ D` for `D = ⟨d, L⟩`, if any.
pub fn extension_obstruction(l: &LieAlgebra, u: &Subspace) -> Result<Option<Matrix>> {
    let n = l.dim();
    for d in derivation_algebra(l).basis() {
        let ext = split_extension_by_derivation(l, &d)?;
        let big = &ext.algebra;
        let embedded = u.image(&ext.ideal_embedding);
        let base = big.span(&ext.ideal_embedding.columns())?;
        let normaliser = big.normalizer(&embedded);
        if normaliser.sum(&base)?.dim() != n + 1 {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// `N_D(U) + L = D` for the split extension by every basis derivation.
pub fn is_intravariant_extension(l: &LieAlgebra, u: &Subspace) -> Result<bool> {
    Ok(extension_obstruction(l, u)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abelian_plus_r2, h3, r2, vector};
    use crate::field::Scalar;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    /// Leibniz check against every matrix over GF(2) in dimension 2 (16 total).
    #[test]
    fn derivations_match_enumeration() {
        let f = FieldSpec::prime(2).unwrap();
        for l in [r2(f), LieAlgebra::abelian(f, 2)] {
            let der = derivation_algebra(&l);
            let mut count = 0;
            for bits in 0..16u64 {
                let m = Matrix::from_fn(f, 2, 2, |r, c| Scalar::from_residue(f, (bits >> (2 * r + c)) & 1));
                let is_der = leibniz_defect(&l, &m).unwrap().is_none();
                assert_eq!(is_der, der.contains(&m));
                count += is_der as u32;
            }
            assert_eq!(count, 1 << der.dim());
        }
    }

    #[test]
    fn derivation_algebra_examples() {
        assert_eq!(derivation_algebra(&LieAlgebra::abelian(q(), 3)).dim(), 9);
        let l = r2(q());
        let der = derivation_algebra(&l);
        assert_eq!(der.dim(), 2);
        // d(x) = b y, d(y) = e y
        for d in der.basis() {
            assert!(d.get(0, 0).is_zero() && d.get(0, 1).is_zero());
        }
        assert_eq!(derivation_algebra(&h3(q())).dim(), 6);
    }

    #[test]
    fn inner_derivation_examples() {
        assert!(inner_derivations(&LieAlgebra::abelian(q(), 2)).is_zero());
        let l = r2(q());
        assert_eq!(inner_derivations(&l), *derivation_algebra(&l).space());
        assert_eq!(inner_derivations(&h3(q())).dim(), 2);
        for l in [r2(q()), h3(q()), abelian_plus_r2(q())] {
            let inner = inner_derivations(&l);
            assert_eq!(inner.dim(), l.dim() - l.centre().dim());
            assert!(derivation_algebra(&l).space().contains_subspace(&inner));
        }
    }

    #[test]
    fn derivations_close_under_commutator() {
        for l in [r2(q()), h3(q()), abelian_plus_r2(q())] {
            let der = derivation_algebra(&l);
            let basis = der.basis();
            for a in &basis {
                for b in &basis {
                    assert!(der.contains(&a.commutator(b)));
                }
            }
        }
    }

    #[test]
    fn stabilizer_examples() {
        let l = r2(q());
        let der = derivation_algebra(&l);
        assert_eq!(stabilizing_derivations(&der, &l.full_space()), *der.space());
        assert_eq!(stabilizing_derivations(&der, &l.zero_space()), *der.space());
        let x = l.span(&[vector(q(), &[1, 0])]).unwrap();
        assert_eq!(stabilizing_derivations(&der, &x).dim(), 1);
    }

    #[test]
    fn intravariance_examples() {
        let l = r2(q());
        let x = l.span(&[vector(q(), &[1, 0])]).unwrap();
        assert!(is_intravariant_linear(&l, &l.full_space()));
        assert!(is_intravariant_extension(&l, &l.full_space()).unwrap());
        assert!(is_intravariant_linear(&l, &x));
        assert!(is_intravariant_extension(&l, &x).unwrap());

        let a = LieAlgebra::abelian(q(), 2);
        let e1 = a.span(&[vector(q(), &[1, 0])]).unwrap();
        assert!(!is_intravariant_linear(&a, &e1));
        assert!(!is_intravariant_extension(&a, &e1).unwrap());
        let d = extension_obstruction(&a, &e1).unwrap().unwrap();
        assert!(!d.mul_vec(&vector(q(), &[1, 0]))[1].is_zero(), "obstruction moves e1 off its line");
    }
}
