//! Fixtures shared by the benchmarks.

use lieform::enumerate::{enumerate_soluble, EnumerationBudget};
use lieform::{FieldSpec, LieAlgebra, Matrix, Scalar};

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).expect("prime")
}

/// A dense pseudo-random square matrix, reproducible without an RNG.
pub fn scrambled_matrix(field: FieldSpec, n: usize) -> Matrix {
    Matrix::from_fn(field, n, n, |r, c| {
        let x = (r as i64 * 7919 + c as i64 * 104_729 + (r * c) as i64 * 31) % 97 - 48;
        Scalar::from_i64(field, x)
    })
}

/// The non-nilpotent algebra of dimension `dim` over GF(2) with the most derivations.
pub fn busiest_algebra(dim: usize) -> LieAlgebra {
    enumerate_soluble(&EnumerationBudget::uncapped(gf(2), dim))
        .expect("budget")
        .filter(|e| e.algebra.dim() == dim && !e.algebra.is_nilpotent())
        .map(|e| e.algebra)
        .max_by_key(|l| lieform::derivation_algebra(l).dim())
        .expect("nonempty")
}
