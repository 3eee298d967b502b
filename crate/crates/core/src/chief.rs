//! Modules, minimal ideals, chief series and split extensions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::derivation;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::lie::{Ideal, LieAlgebra};
use crate::linalg::{projective_points, zero_vector, Matrix, Subspace, Vector};

/// A representation `ρ` of `acting` on `F^dim`, given on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LModule {
    acting: LieAlgebra,
    dim: usize,
    action: Vec<Matrix>,
}

impl LModule {
    /// Checks `ρ([x, y]) = ρ(x)ρ(y) − ρ(y)ρ(x)` on all basis pairs.
    pub fn new(acting: LieAlgebra, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != acting.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for a {}-dimensional algebra",
                action.len(),
                acting.dim()
            )));
        }
        if let Some(m) = action.iter().find(|m| m.rows() != dim || m.cols() != dim || m.field() != acting.field()) {
            return Err(Error::DimensionMismatch(format!(
                "action matrix is {}x{} over {}, expected {dim}x{dim} over {}",
                m.rows(),
                m.cols(),
                m.field(),
                acting.field()
            )));
        }
        let module = LModule { acting, dim, action };
        for i in 0..module.acting.dim() {
            for j in i + 1..module.acting.dim() {
                let lhs = module.rho(module.acting.basis_bracket(i, j));
                if lhs != module.action[i].commutator(&module.action[j]) {
                    return Err(Error::InvalidModule(i + 1, j + 1));
                }
            }
        }
        Ok(module)
    }

    pub fn acting(&self) -> &LieAlgebra {
        &self.acting
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.acting.field()
    }

    /// Matrix of the `i`-th basis element of the acting algebra.
    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn rho(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim, self.dim);
        for (c, m) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Smallest invariant subspace containing `v`.
    pub fn spin(&self, v: &[Scalar]) -> Subspace {
        let mut current = Subspace::span(self.field(), self.dim, &[v.to_vec()]).expect("module vector");
        loop {
            let mut vectors: Vec<Vector> = current.basis_vectors().map(<[Scalar]>::to_vec).collect();
            for m in &self.action {
                vectors.extend(current.basis_vectors().map(|w| m.mul_vec(w)));
            }
            let next = Subspace::span(self.field(), self.dim, &vectors).expect("module vectors");
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Over GF(p) every line is spun; over ℚ only 1-dimensional modules are decided.
    pub fn is_irreducible(&self) -> Result<bool> {
        if self.dim == 0 {
            return Ok(false);
        }
        if self.dim == 1 {
            return Ok(true);
        }
        if !self.field().is_finite() {
            return Err(Error::UnsupportedField(
                "irreducibility over Q is only decided for 1-dimensional modules".into(),
            ));
        }
        Ok(projective_points(self.field(), self.dim).iter().all(|v| self.spin(v).is_full()))
    }
}

/// `L` acting on `upper/lower` in the basis of the canonical complement of `lower`.
pub fn factor_module(l: &LieAlgebra, upper: &Ideal, lower: &Ideal) -> Result<LModule> {
    if !upper.contains_subspace(lower) {
        return Err(Error::NotNested);
    }
    let q = l.quotient(lower)?;
    let image = q.project_subspace(upper);
    let k = image.dim();
    let basis: Vec<Vector> = image.basis_vectors().map(<[Scalar]>::to_vec).collect();
    let action = (0..l.dim())
        .map(|i| {
            let x = q.project(&l.unit(i));
            let columns: Vec<Vector> = basis
                .iter()
                .map(|a| image.coordinates(&q.algebra.bracket(&x, a)).expect("upper is an ideal"))
                .collect();
            Matrix::from_columns(l.field(), k, &columns).expect("square action")
        })
        .collect();
    LModule::new(l.clone(), k, action)
}

/// A chief factor `upper/lower` of `L`.
#[derive(Debug, Clone)]
pub struct ChiefFactor {
    pub lower: Ideal,
    pub upper: Ideal,
    pub module: LModule,
}

impl ChiefFactor {
    pub fn dim(&self) -> usize {
        self.upper.dim() - self.lower.dim()
    }
}

/// `0 = I_0 < I_1 < … < I_k = L` with irreducible factors.
#[derive(Debug, Clone)]
pub struct ChiefSeries {
    terms: Vec<Ideal>,
    factors: Vec<ChiefFactor>,
}

impl ChiefSeries {
    pub fn terms(&self) -> &[Ideal] {
        &self.terms
    }

    pub fn factors(&self) -> &[ChiefFactor] {
        &self.factors
    }

    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(ChiefFactor::dim).collect()
    }
}

impl fmt::Display for ChiefSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " < ")?;
            }
            if t.is_zero() {
                write!(f, "0")?;
            } else {
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

/// Tie-break among minimal ideals of equal dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MinimalIdealChoice {
    #[default]
    LexLeast,
    LexGreatest,
}

pub fn minimal_ideal(l: &LieAlgebra) -> Result<Ideal> {
    minimal_ideal_with(l, MinimalIdealChoice::LexLeast)
}

/// A minimal ideal inside the last nonzero term of the derived series.
///
/// Over GF(p) this spins every line of that abelian ideal and keeps a spin of
/// least dimension. Over ℚ it looks for a common rational eigenvector and
/// reports `UnsupportedField` if the minimal ideal is not a line.
pub fn minimal_ideal_with(l: &LieAlgebra, choice: MinimalIdealChoice) -> Result<Ideal> {
    if l.dim() == 0 {
        return Err(Error::ZeroAlgebra);
    }
    let derived = l.derived_series_of(&l.full_space());
    if !derived.last().expect("series is nonempty").is_zero() {
        return Err(Error::NotSoluble);
    }
    let abelian = &derived[derived.len() - 2];
    if !l.field().is_finite() {
        return rational_minimal_ideal(l, &derived[1], abelian);
    }
    let mut best: Option<Ideal> = None;
    for coeffs in projective_points(l.field(), abelian.dim()) {
        let spin = l.ideal_closure(&l.span(&[abelian.combine(&coeffs)])?);
        let better = match &best {
            None => true,
            Some(b) => match spin.dim().cmp(&b.dim()) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => {
                    let ord = spin.basis().entries().cmp(b.basis().entries());
                    match choice {
                        MinimalIdealChoice::LexLeast => ord.is_lt(),
                        MinimalIdealChoice::LexGreatest => ord.is_gt(),
                    }
                }
            },
        };
        if better {
            best = Some(spin);
        }
    }
    Ok(best.expect("abelian ideal is nonzero"))
}

/// Every minimal ideal of `L` over GF(p): the ideal spins of single vectors
/// that contain no smaller spin.
pub fn minimal_ideals(l: &LieAlgebra) -> Result<Vec<Ideal>> {
    l.field().require_finite("listing minimal ideals")?;
    let mut spins: Vec<Ideal> = Vec::new();
    for v in projective_points(l.field(), l.dim()) {
        let s = l.ideal_closure(&l.span(&[v])?);
        if !spins.contains(&s) {
            spins.push(s);
        }
    }
    let minimal: Vec<Ideal> = spins
        .iter()
        .filter(|s| !spins.iter().any(|t| t.dim() < s.dim() && s.contains_subspace(t)))
        .cloned()
        .collect();
    let mut minimal = minimal;
    minimal.sort_by(|a, b| (a.dim(), a.basis().entries()).cmp(&(b.dim(), b.basis().entries())));
    Ok(minimal)
}

fn rational_minimal_ideal(l: &LieAlgebra, derived_algebra: &Subspace, abelian: &Subspace) -> Result<Ideal> {
    // [L, L] acts nilpotently in characteristic 0, so the vectors of the
    // abelian ideal it kills form a nonzero submodule on which L acts through
    // commuting operators.
    let mut current = abelian.intersect(&l.centralizer(derived_algebra))?;
    if current.is_zero() {
        return Err(Error::UnsupportedField("no common eigenvector found over Q".into()));
    }
    for i in 0..l.dim() {
        let x = l.unit(i);
        let basis: Vec<Vector> = current.basis_vectors().map(<[Scalar]>::to_vec).collect();
        let columns: Vec<Vector> = basis
            .iter()
            .map(|w| current.coordinates(&l.bracket(&x, w)).expect("eigenspaces are invariant"))
            .collect();
        let op = Matrix::from_columns(l.field(), basis.len(), &columns)?;
        let lambda = match rational_eigenvalues(&op)?.into_iter().next() {
            Some(lambda) => lambda,
            None => {
                return Err(Error::UnsupportedField(
                    "minimal ideal over Q is not one-dimensional".into(),
                ))
            }
        };
        let shifted = op.sub(&Matrix::identity(l.field(), basis.len()).scale(&lambda));
        let eigen: Vec<Vector> = shifted.kernel().basis_vectors().map(|c| current.combine(c)).collect();
        current = l.span(&eigen)?;
    }
    let v = current.basis().row(0).to_vec();
    Ok(l.ideal_closure(&l.span(&[v])?))
}

/// Characteristic polynomial `det(tI − A)` by Faddeev–LeVerrier; coefficients
/// from the constant term up. Characteristic 0 only.
fn characteristic_polynomial(a: &Matrix) -> Vec<BigRational> {
    let n = a.rows();
    let field = a.field();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m = Matrix::zeros(field, n, n);
    for k in 1..=n {
        let shift = Matrix::identity(field, n).scale(&Scalar::from_rational(coeffs[n - k + 1].clone()));
        m = a.mul(&m).add(&shift);
        let am = a.mul(&m);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + am.get(i, i).as_rational().expect("rational"));
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

/// Rational eigenvalues of a square rational matrix, ascending.
fn rational_eigenvalues(a: &Matrix) -> Result<Vec<Scalar>> {
    let poly = characteristic_polynomial(a);
    let lcm = poly.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = poly.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
        while ints.first().is_some_and(Zero::is_zero) {
            ints.remove(0);
        }
    }
    let too_big = || Error::UnsupportedField("characteristic polynomial too large for the rational root search".into());
    let constant = ints[0].abs().to_u64().filter(|&c| c <= 1_000_000_000_000).ok_or_else(too_big)?;
    let leading = ints.last().expect("monic").abs().to_u64().filter(|&c| c <= 1_000_000_000_000).ok_or_else(too_big)?;
    let eval = |x: &BigRational| {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    };
    for p in divisors(constant) {
        for q in divisors(leading) {
            for sign in [1i64, -1] {
                let x = BigRational::new(BigInt::from(p) * sign, BigInt::from(q));
                if !roots.contains(&x) && eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    Ok(roots.into_iter().map(Scalar::from_rational).collect())
}

pub fn chief_series(l: &LieAlgebra) -> Result<ChiefSeries> {
    chief_series_with(l, MinimalIdealChoice::LexLeast)
}

/// Repeatedly take a minimal ideal of `L/I_j` and pull it back to `L`.
pub fn chief_series_with(l: &LieAlgebra, choice: MinimalIdealChoice) -> Result<ChiefSeries> {
    if !l.is_soluble() {
        return Err(Error::NotSoluble);
    }
    let mut terms = vec![l.zero_ideal()];
    let mut factors = Vec::new();
    while !terms.last().unwrap().is_full() {
        let lower = terms.last().unwrap().clone();
        let q = l.quotient(&lower)?;
        let minimal = minimal_ideal_with(&q.algebra, choice)?;
        let upper = Ideal::new_unchecked(q.preimage(&minimal));
        let module = factor_module(l, &upper, &lower)?;
        debug_assert!(module.is_irreducible().unwrap_or(true));
        factors.push(ChiefFactor {
            lower,
            upper: upper.clone(),
            module,
        });
        terms.push(upper);
    }
    Ok(ChiefSeries { terms, factors })
}

/// A Lie algebra built as `acting ⋉ ideal`.
#[derive(Debug, Clone)]
pub struct SplitExtension {
    pub algebra: LieAlgebra,
    /// Columns are the images of the acting algebra's basis.
    pub acting_embedding: Matrix,
    /// Columns are the images of the ideal's basis (the module, or `L` itself).
    pub ideal_embedding: Matrix,
}

fn inclusion(field: FieldSpec, total: usize, offset: usize, k: usize) -> Matrix {
    Matrix::from_fn(field, total, k, |r, c| if r == offset + c { field.one() } else { field.zero() })
}

/// `acting ⊕ module` with `[a, v] = ρ(a)v` and the module abelian.
pub fn split_extension(acting: &LieAlgebra, module: &LModule) -> Result<SplitExtension> {
    if module.acting() != acting {
        return Err(Error::DimensionMismatch("module is over a different algebra".into()));
    }
    let (m, k) = (acting.dim(), module.dim());
    let field = acting.field();
    let total = m + k;
    let pad = |v: &[Scalar], offset: usize| {
        let mut out = zero_vector(field, total);
        for (i, x) in v.iter().enumerate() {
            out[offset + i] = x.clone();
        }
        out
    };
    let mut entries = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            entries.push((i, j, pad(acting.basis_bracket(i, j), 0)));
        }
        for c in 0..k {
            entries.push((i, m + c, pad(&module.action(i).column(c), m)));
        }
    }
    let algebra = LieAlgebra::from_brackets(field, total, entries)?.validated()?;
    Ok(SplitExtension {
        algebra,
        acting_embedding: inclusion(field, total, 0, m),
        ideal_embedding: inclusion(field, total, m, k),
    })
}

/// `⟨d, L⟩`: `L` on the first `n` coordinates, the new element `x_d` last,
/// with `[x_d, v] = d(v)`.
pub fn split_extension_by_derivation(l: &LieAlgebra, d: &Matrix) -> Result<SplitExtension> {
    if let Some((i, j)) = derivation::leibniz_defect(l, d)? {
        return Err(Error::NotADerivation(i, j));
    }
    let n = l.dim();
    let field = l.field();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut b = l.basis_bracket(i, j).to_vec();
            b.push(field.zero());
            entries.push((i, j, b));
        }
        // [e_i, x_d] = -d(e_i)
        let mut col: Vector = d.column(i).iter().map(|x| -x).collect();
        col.push(field.zero());
        entries.push((i, n, col));
    }
    let algebra = LieAlgebra::from_brackets(field, n + 1, entries)?.validated()?;
    Ok(SplitExtension {
        algebra,
        acting_embedding: inclusion(field, n + 1, n, 1),
        ideal_embedding: inclusion(field, n + 1, 0, n),
    })
}

/// `U + B ⊇ A`
pub fn covers(u: &Subspace, f: &ChiefFactor) -> bool {
    u.sum(&f.lower).expect("same ambient").contains_subspace(&f.upper)
}

/// `U ∩ A ⊆ B`
pub fn avoids(u: &Subspace, f: &ChiefFactor) -> bool {
    f.lower.contains_subspace(&u.intersect(&f.upper).expect("same ambient"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{abelian_plus_r2, h3, r2, rotation_gf2, vector};

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    #[test]
    fn minimal_ideal_examples() {
        let one = LieAlgebra::abelian(gf(2), 1);
        assert!(minimal_ideal(&one).unwrap().is_full());
        for f in [q(), gf(3)] {
            let l = r2(f);
            assert_eq!(*minimal_ideal(&l).unwrap(), l.span(&[vector(f, &[0, 1])]).unwrap());
        }
        let plane = LieAlgebra::abelian(gf(2), 2);
        let all = minimal_ideals(&plane).unwrap();
        assert_eq!(all.len(), 3);
        let chosen = minimal_ideal(&plane).unwrap();
        assert!(all.contains(&chosen));
        assert_eq!(chosen, minimal_ideal(&plane).unwrap());
        assert_eq!(minimal_ideal(&LieAlgebra::abelian(q(), 0)), Err(Error::ZeroAlgebra));
    }

    #[test]
    fn minimal_ideals_match_ideal_enumeration() {
        for l in [r2(gf(3)), h3(gf(2)), abelian_plus_r2(gf(2)), rotation_gf2()] {
            let ideals = crate::enumerate::enumerate_ideals(&l).unwrap();
            let nonzero: Vec<_> = ideals.iter().filter(|i| !i.is_zero()).collect();
            let mut brute: Vec<Ideal> = nonzero
                .iter()
                .filter(|i| !nonzero.iter().any(|j| j.dim() < i.dim() && i.contains_subspace(j)))
                .map(|i| (*i).clone())
                .collect();
            brute.sort_by(|a, b| (a.dim(), a.basis().entries()).cmp(&(b.dim(), b.basis().entries())));
            assert_eq!(minimal_ideals(&l).unwrap(), brute, "{l}");
        }
    }

    #[test]
    fn two_dimensional_minimal_ideal() {
        let l = rotation_gf2();
        let m = minimal_ideal(&l).unwrap();
        assert_eq!(m.dim(), 2);
        let series = chief_series(&l).unwrap();
        assert_eq!(series.factor_dims(), vec![2, 1]);
        assert!(series.factors()[0].module.is_irreducible().unwrap());
    }

    #[test]
    fn irreducibility_examples() {
        let one = LModule::new(LieAlgebra::abelian(gf(2), 1), 1, vec![Matrix::identity(gf(2), 1)]).unwrap();
        assert!(one.is_irreducible().unwrap());
        let trivial = LModule::new(LieAlgebra::abelian(gf(2), 1), 2, vec![Matrix::zeros(gf(2), 2, 2)]).unwrap();
        assert!(!trivial.is_irreducible().unwrap());
        let l = r2(q());
        let y = l.ideal(l.span(&[vector(q(), &[0, 1])]).unwrap()).unwrap();
        let m = factor_module(&l, &y, &l.zero_ideal()).unwrap();
        assert!(m.is_irreducible().unwrap());
        let plane = LModule::new(LieAlgebra::abelian(q(), 1), 2, vec![Matrix::zeros(q(), 2, 2)]).unwrap();
        assert!(matches!(plane.is_irreducible(), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn invalid_module_rejected() {
        // r2 needs ρ(y) = [ρ(x), ρ(y)]; take ρ(x) = 0, ρ(y) = 1
        let l = r2(q());
        let action = vec![Matrix::zeros(q(), 1, 1), Matrix::identity(q(), 1)];
        assert_eq!(LModule::new(l, 1, action), Err(Error::InvalidModule(1, 2)));
    }

    #[test]
    fn chief_series_examples() {
        let f = gf(2);
        let one = chief_series(&LieAlgebra::abelian(f, 1)).unwrap();
        assert_eq!(one.terms().len(), 2);
        for field in [q(), gf(3)] {
            let l = r2(field);
            let s = chief_series(&l).unwrap();
            assert_eq!(*s.terms()[1], l.span(&[vector(field, &[0, 1])]).unwrap());
            assert_eq!(s.factor_dims(), vec![1, 1]);
        }
        for field in [q(), gf(2)] {
            let h = h3(field);
            let s = chief_series(&h).unwrap();
            assert_eq!(*s.terms()[1], h.span(&[vector(field, &[0, 0, 1])]).unwrap());
            assert_eq!(s.factor_dims(), vec![1, 1, 1]);
        }
        assert_eq!(chief_series(&r2(q())).unwrap().to_string(), "0 < span[(0,1)] < span[(1,0), (0,1)]");
    }

    #[test]
    fn rational_chief_series_needs_lines() {
        // x acts on span{a, b} by rotation: no rational eigenvector
        let l = LieAlgebra::from_brackets(q(), 3, [(0, 1, vector(q(), &[0, 0, 1])), (0, 2, vector(q(), &[0, -1, 0]))]).unwrap();
        assert!(matches!(chief_series(&l), Err(Error::UnsupportedField(_))));
        // x acts diagonally with eigenvalues 1 and 2 on a basis hidden from the coordinates
        let l = LieAlgebra::from_brackets(q(), 3, [(0, 1, vector(q(), &[0, 0, 1])), (0, 2, vector(q(), &[0, -2, 3]))]).unwrap();
        let s = chief_series(&l).unwrap();
        assert_eq!(s.factor_dims(), vec![1, 1, 1]);
    }

    #[test]
    fn jordan_holder_dims_agree() {
        for l in [abelian_plus_r2(gf(2)), h3(gf(3)), rotation_gf2(), LieAlgebra::abelian(gf(2), 3)] {
            let a = chief_series_with(&l, MinimalIdealChoice::LexLeast).unwrap();
            let b = chief_series_with(&l, MinimalIdealChoice::LexGreatest).unwrap();
            let (mut da, mut db) = (a.factor_dims(), b.factor_dims());
            da.sort();
            db.sort();
            assert_eq!(da, db);
        }
    }

    #[test]
    fn split_extension_examples() {
        let f = q();
        let zero = LieAlgebra::abelian(f, 0);
        let m = LModule::new(zero.clone(), 2, vec![]).unwrap();
        let ext = split_extension(&zero, &m).unwrap();
        assert!(ext.algebra.is_abelian() && ext.algebra.dim() == 2);

        let one = LieAlgebra::abelian(f, 1);
        let m = LModule::new(one.clone(), 1, vec![Matrix::identity(f, 1)]).unwrap();
        let ext = split_extension(&one, &m).unwrap();
        assert_eq!(ext.algebra, LieAlgebra::from_brackets(f, 2, [(0, 1, vector(f, &[0, 1]))]).unwrap());

        let m = LModule::new(one.clone(), 2, vec![Matrix::zeros(f, 2, 2)]).unwrap();
        assert!(split_extension(&one, &m).unwrap().algebra.is_abelian());
    }

    #[test]
    fn split_extension_by_derivation_examples() {
        let f = q();
        let l = r2(f);
        let d0 = split_extension_by_derivation(&l, &Matrix::zeros(f, 2, 2)).unwrap();
        assert_eq!(d0.algebra.centre().dim(), 1);

        let one = LieAlgebra::abelian(f, 1);
        let d = split_extension_by_derivation(&one, &Matrix::identity(f, 1)).unwrap().algebra;
        // x_d is the last basis vector and [x_d, e1] = e1, so D ≅ r2
        assert_eq!(d.bracket(&d.unit(1), &d.unit(0)), d.unit(0));

        let ad_x = l.ad(&l.unit(0));
        let d = split_extension_by_derivation(&l, &ad_x).unwrap().algebra;
        let central = vector(f, &[-1, 0, 1]);
        for i in 0..3 {
            assert!(crate::linalg::is_zero_vector(&d.bracket(&central, &d.unit(i))));
        }

        let not_der = Matrix::from_rows(f, 2, &[vector(f, &[1, 0]), vector(f, &[0, 0])]).unwrap();
        assert_eq!(split_extension_by_derivation(&l, &not_der).unwrap_err(), Error::NotADerivation(1, 2));
    }

    #[test]
    fn cover_avoid_examples() {
        let l = r2(gf(3));
        let s = chief_series(&l).unwrap();
        let x = l.span(&[vector(gf(3), &[1, 0])]).unwrap();
        for factor in s.factors() {
            assert!(covers(&l.full_space(), factor));
            assert!(avoids(&l.zero_space(), factor));
        }
        assert!(avoids(&x, &s.factors()[0]) && !covers(&x, &s.factors()[0]));
        assert!(covers(&x, &s.factors()[1]) && !avoids(&x, &s.factors()[1]));
    }

    #[test]
    fn rational_eigenvalue_search() {
        let f = q();
        let m = Matrix::from_rows(f, 2, &[vector(f, &[0, 1]), vector(f, &[-2, 3])]).unwrap();
        assert_eq!(rational_eigenvalues(&m).unwrap(), vec![Scalar::from_i64(f, 1), Scalar::from_i64(f, 2)]);
        let rot = Matrix::from_rows(f, 2, &[vector(f, &[0, -1]), vector(f, &[1, 0])]).unwrap();
        assert!(rational_eigenvalues(&rot).unwrap().is_empty());
        let half = Matrix::from_rows(f, 1, &[vec![Scalar::parse("-1/2", f).unwrap()]]).unwrap();
        assert_eq!(rational_eigenvalues(&half).unwrap(), vec![Scalar::parse("-1/2", f).unwrap()]);
    }
}
