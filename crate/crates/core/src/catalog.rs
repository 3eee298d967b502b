//! A few small named algebras used throughout the tests and benches.

use crate::field::{FieldSpec, Scalar};
use crate::lie::LieAlgebra;
use crate::linalg::Vector;

pub fn vector(field: FieldSpec, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| Scalar::from_i64(field, x)).collect()
}

/// The non-abelian 2-dimensional algebra: basis `(x, y)`, `[x, y] = y`.
pub fn r2(field: FieldSpec) -> LieAlgebra {
    LieAlgebra::from_brackets(field, 2, [(0, 1, vector(field, &[0, 1]))])
        .expect("r2")
        .with_labels(vec!["x".into(), "y".into()])
}

/// The Heisenberg algebra: `[e1, e2] = e3`.
pub fn h3(field: FieldSpec) -> LieAlgebra {
    LieAlgebra::from_brackets(field, 3, [(0, 1, vector(field, &[0, 0, 1]))]).expect("h3")
}

/// `r2 ⊕ F` with basis `(x, y, z)`, `[x, y] = y`, `z` central.
pub fn abelian_plus_r2(field: FieldSpec) -> LieAlgebra {
    LieAlgebra::from_brackets(field, 3, [(0, 1, vector(field, &[0, 1, 0]))])
        .expect("r2 + F")
        .with_labels(vec!["x".into(), "y".into(), "z".into()])
}

/// `x` acting on the plane `span{a, b}` by the companion matrix of
/// `t^2 + t + 1`; irreducible over GF(2), so the plane is a 2-dimensional
/// minimal ideal.
pub fn rotation_gf2() -> LieAlgebra {
    let f = FieldSpec::prime(2).expect("2 is prime");
    // [x, a] = b, [x, b] = a + b
    LieAlgebra::from_brackets(f, 3, [(0, 1, vector(f, &[0, 0, 1])), (0, 2, vector(f, &[0, 1, 1]))]).expect("rotation")
}
