//! Exhaustive enumeration over prime fields: subspaces, subalgebras, ideals,
//! and a stream of soluble Lie algebras built by repeated split extension.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chief::split_extension_by_derivation;
use crate::derivation::derivation_algebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::lie::{Ideal, LieAlgebra, Subalgebra};
use crate::linalg::{Matrix, Subspace};

/// Largest ambient dimension accepted by the subspace enumerators.
pub const MAX_ENUMERATION_DIM: usize = 5;
const MAX_SUBSPACES: u128 = 2_000_000;

/// Number of `k`-dimensional subspaces of `GF(p)^n`.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> u128 {
    if k > n {
        return 0;
    }
    // [n, k] = [n-1, k-1] + p^k [n-1, k]
    let mut row = vec![1u128];
    for m in 1..=n {
        let mut next = vec![1u128; m + 1];
        for j in 1..m {
            next[j] = row[j - 1] + (p as u128).pow(j as u32) * row[j];
        }
        row = next;
    }
    row[k]
}

fn check_budget(field: FieldSpec, n: usize) -> Result<u64> {
    let p = field.require_finite("subspace enumeration")?;
    if n > MAX_ENUMERATION_DIM {
        return Err(Error::BudgetExceeded(format!("dimension {n} exceeds {MAX_ENUMERATION_DIM}")));
    }
    let total: u128 = (0..=n).map(|k| gaussian_binomial(n, k, p)).sum();
    if total > MAX_SUBSPACES {
        return Err(Error::BudgetExceeded(format!("{total} subspaces of {field}^{n}")));
    }
    Ok(p)
}

/// All `k`-dimensional subspaces of `F^n` as reduced echelon bases.
pub fn subspaces_of_dim(field: FieldSpec, n: usize, k: usize) -> Result<Vec<Subspace>> {
    let p = check_budget(field, n)?;
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    if k > n {
        return Ok(out);
    }
    loop {
        // free slots: (row, column) right of the row's pivot and off the pivot columns
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        for mut idx in 0..p.pow(free.len() as u32) {
            let mut m = Matrix::zeros(field, k, n);
            for (r, &pc) in pivots.iter().enumerate() {
                m.set(r, pc, field.one());
            }
            for &(r, c) in &free {
                m.set(r, c, Scalar::from_residue(field, idx % p));
                idx /= p;
            }
            out.push(Subspace::row_space(&m));
        }
        // next k-combination of 0..n
        let Some(i) = (0..k).rev().find(|&i| pivots[i] < n - k + i) else {
            break;
        };
        pivots[i] += 1;
        for j in i + 1..k {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Every subspace of `F^n`, by increasing dimension.
pub fn all_subspaces(field: FieldSpec, n: usize) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(subspaces_of_dim(field, n, k)?);
    }
    Ok(out)
}

pub fn enumerate_subalgebras(l: &LieAlgebra) -> Result<Vec<Subalgebra>> {
    Ok(all_subspaces(l.field(), l.dim())?
        .into_iter()
        .filter(|s| l.is_subalgebra(s))
        .map(Subalgebra::new_unchecked)
        .collect())
}

pub fn enumerate_ideals(l: &LieAlgebra) -> Result<Vec<Ideal>> {
    Ok(all_subspaces(l.field(), l.dim())?
        .into_iter()
        .filter(|s| l.is_ideal(s))
        .map(Ideal::new_unchecked)
        .collect())
}

/// Limits for [`enumerate_soluble`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_dim: usize,
    pub fields: Vec<FieldSpec>,
    /// Maximum number of derivations used per parent algebra.
    pub per_step_cap: Option<usize>,
    pub seed: u64,
}

impl EnumerationBudget {
    pub fn uncapped(field: FieldSpec, max_dim: usize) -> Self {
        EnumerationBudget {
            max_dim,
            fields: vec![field],
            per_step_cap: None,
            seed: 0,
        }
    }

    fn check(&self) -> Result<()> {
        if self.max_dim == 0 {
            return Err(Error::BudgetExceeded("max_dim must be at least 1".into()));
        }
        if self.per_step_cap == Some(0) {
            return Err(Error::BudgetExceeded("per_step_cap must be positive".into()));
        }
        for f in &self.fields {
            f.require_finite("enumerating soluble algebras")?;
        }
        Ok(())
    }
}

/// One algebra of the stream with its provenance.
#[derive(Debug, Clone)]
pub struct EnumeratedAlgebra {
    pub field: FieldSpec,
    pub algebra: LieAlgebra,
    /// Derivation index chosen at each extension step, starting from `F^1`.
    pub path: Vec<u64>,
}

impl EnumeratedAlgebra {
    pub fn label(&self) -> String {
        let steps: Vec<String> = self.path.iter().map(u64::to_string).collect();
        format!("{}/d{}/[{}]", self.field, self.algebra.dim(), steps.join("."))
    }
}

/// Lazy stream of soluble algebras: `F^1`, then `⟨d, K⟩` for every
/// generated `K` below `max_dim` and every (or a seeded sample of)
/// derivation `d` of `K`.
pub fn enumerate_soluble(budget: &EnumerationBudget) -> Result<SolubleStream> {
    budget.check()?;
    Ok(SolubleStream {
        budget: budget.clone(),
        field_index: 0,
        level: Vec::new(),
        cursor: 0,
        next_level: Vec::new(),
        ready: VecDeque::new(),
        started: false,
    })
}

pub struct SolubleStream {
    budget: EnumerationBudget,
    field_index: usize,
    level: Vec<EnumeratedAlgebra>,
    cursor: usize,
    next_level: Vec<EnumeratedAlgebra>,
    ready: VecDeque<EnumeratedAlgebra>,
    started: bool,
}

fn mix(seed: u64, a: u64, b: u64, c: u64) -> u64 {
    let mut x = seed ^ 0x9E37_79B9_7F4A_7C15;
    for v in [a, b, c] {
        x = (x ^ v).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        x ^= x >> 31;
    }
    x
}

impl SolubleStream {
    fn extend_parent(&mut self, parent: &EnumeratedAlgebra) {
        let field = parent.field;
        let p = field.modulus().expect("prime field") as u128;
        let basis = derivation_algebra(&parent.algebra).basis();
        let total = p.checked_pow(basis.len() as u32).unwrap_or(u128::MAX);
        let indices: Vec<u128> = match self.budget.per_step_cap {
            Some(cap) if total > cap as u128 => {
                let mut rng = ChaCha8Rng::seed_from_u64(mix(
                    self.budget.seed,
                    p as u64,
                    parent.algebra.dim() as u64,
                    self.cursor as u64,
                ));
                let mut picked = BTreeSet::new();
                while picked.len() < cap {
                    picked.insert(rng.gen_range(0..total));
                }
                picked.into_iter().collect()
            }
            _ => (0..total).collect(),
        };
        let n = parent.algebra.dim();
        for index in indices {
            let mut rest = index;
            let mut d = Matrix::zeros(field, n, n);
            for b in &basis {
                let c = Scalar::from_residue(field, (rest % p) as u64);
                rest /= p;
                if !c.is_zero() {
                    d = d.add(&b.scale(&c));
                }
            }
            let algebra = split_extension_by_derivation(&parent.algebra, &d)
                .expect("derivations of a soluble algebra give soluble extensions")
                .algebra;
            let mut path = parent.path.clone();
            path.push(index as u64);
            let child = EnumeratedAlgebra { field, algebra, path };
            if child.algebra.dim() < self.budget.max_dim {
                self.next_level.push(child.clone());
            }
            self.ready.push_back(child);
        }
    }
}

impl Iterator for SolubleStream {
    type Item = EnumeratedAlgebra;

    fn next(&mut self) -> Option<EnumeratedAlgebra> {
        loop {
            if let Some(a) = self.ready.pop_front() {
                return Some(a);
            }
            if !self.started {
                let field = *self.budget.fields.get(self.field_index)?;
                self.started = true;
                let base = EnumeratedAlgebra {
                    field,
                    algebra: LieAlgebra::abelian(field, 1),
                    path: Vec::new(),
                };
                self.level = if self.budget.max_dim > 1 { vec![base.clone()] } else { Vec::new() };
                self.cursor = 0;
                return Some(base);
            }
            if self.cursor < self.level.len() {
                let parent = self.level[self.cursor].clone();
                self.extend_parent(&parent);
                self.cursor += 1;
                continue;
            }
            if !self.next_level.is_empty() {
                self.level = std::mem::take(&mut self.next_level);
                self.cursor = 0;
                continue;
            }
            self.field_index += 1;
            self.started = false;
        }
    }
}
