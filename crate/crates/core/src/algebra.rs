//! Lie algebras given by structure constants.
//!
//! The adjoint acts on the right: `y (ad x) = [y, x]`. Concretely the matrix
//! returned by [`LieAlgebra::adjoint`] has `[e_j, x]` as its `j`-th column,
//! so multiplying it with the coordinate column of `y` yields `[y, x]`.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{vector, Matrix, Vector};
use crate::subspace::{SpanBuilder, Subspace};

/// A finite-dimensional Lie algebra with a validated bracket table.
///
/// Only the products `[e_i, e_j]` with `i < j` are stored; the rest follow
/// from antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    field: Field,
    dim: usize,
    upper: Vec<Vector>,
    /// `(i, j, index into upper)` for the nonzero products.
    support: Vec<(usize, usize, usize)>,
    names: Vec<String>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Build from the upper-triangle products `[e_i, e_j]` (`i < j`); any pair
    /// not listed is zero. Validates antisymmetric input shape and the
    /// Jacobi identity.
    pub fn new<I>(field: Field, dim: usize, brackets: I, names: Option<Vec<String>>) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Vector)>,
    {
        let mut upper = vec![vector::zero(field, dim); dim * dim.saturating_sub(1) / 2];
        for ((i, j), v) in brackets {
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: i.max(j) + 1,
                });
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            if let Some(bad) = v.iter().find(|x| !field.contains(x)) {
                return Err(Error::FieldMismatch(format!("coefficient {bad} is not in {field}")));
            }
            if i >= j {
                if i == j && vector::is_zero(&v) {
                    continue;
                }
                return Err(Error::AntisymmetryViolation { i, j });
            }
            upper[pair_index(dim, i, j)] = v;
        }
        let names = names.unwrap_or_else(|| default_names(dim));
        if names.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: names.len(),
            });
        }
        let alg = Self::assemble(field, dim, upper, names);
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Build from a full `n x n x n` tensor, `c[i][j][k]` being the
    /// coefficient of `e_k` in `[e_i, e_j]`.
    #[allow(clippy::needless_range_loop)]
    pub fn from_tensor(field: Field, c: &[Vec<Vec<Scalar>>]) -> Result<Self> {
        let n = c.len();
        let mut brackets = Vec::new();
        for i in 0..n {
            if c[i].len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c[i].len(),
                });
            }
            for j in 0..n {
                if i == j && !vector::is_zero(&c[i][i]) {
                    return Err(Error::AntisymmetryViolation { i, j });
                }
                if i < j {
                    let neg: Vector = c[j][i].iter().map(|x| -x).collect();
                    if neg != c[i][j] {
                        return Err(Error::AntisymmetryViolation { i, j });
                    }
                    brackets.push(((i, j), c[i][j].clone()));
                }
            }
        }
        Self::new(field, n, brackets, None)
    }

    pub fn abelian(field: Field, dim: usize) -> Self {
        Self::assemble(
            field,
            dim,
            vec![vector::zero(field, dim); dim * dim.saturating_sub(1) / 2],
            default_names(dim),
        )
    }

    fn assemble(field: Field, dim: usize, upper: Vec<Vector>, names: Vec<String>) -> Self {
        let mut support = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let idx = pair_index(dim, i, j);
                if !vector::is_zero(&upper[idx]) {
                    support.push((i, j, idx));
                }
            }
        }
        Self {
            field,
            dim,
            upper,
            support,
            names,
        }
    }

    /// Same algebra with different basis labels.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: names.len(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `[e_i, e_j]` for any pair of indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => self.upper[pair_index(self.dim, j, i)].iter().map(|x| -x).collect(),
            std::cmp::Ordering::Equal => vector::zero(self.field, self.dim),
        }
    }

    /// The stored upper-triangle products that are nonzero, in `(i, j)` order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.support.iter().map(move |&(i, j, idx)| (i, j, &self.upper[idx]))
    }

    pub fn is_abelian(&self) -> bool {
        self.support.is_empty()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let mut out = vector::zero(self.field, self.dim);
        for &(i, j, idx) in &self.support {
            let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            vector::axpy(&mut out, &c, &self.upper[idx]);
        }
        out
    }

    /// [`LieAlgebra::bracket`] with length and field checks.
    pub fn try_bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.bracket(x, y))
    }

    pub fn check_vector(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        if let Some(bad) = x.iter().find(|s| !self.field.contains(s)) {
            return Err(Error::FieldMismatch(format!("{bad} is not in {}", self.field)));
        }
        Ok(())
    }

    pub fn unit(&self, i: usize) -> Vector {
        vector::unit(self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vector {
        vector::zero(self.field, self.dim)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    /// Matrix of `ad x` under the right action: column `j` is `[e_j, x]`.
    pub fn adjoint(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.bracket(&self.unit(j), x)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`
    pub fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Vector {
        let (ei, ej, ek) = (self.unit(i), self.unit(j), self.unit(k));
        let a = self.bracket(&self.basis_bracket(i, j), &ek);
        let b = self.bracket(&self.basis_bracket(j, k), &ei);
        let c = self.bracket(&self.basis_bracket(k, i), &ej);
        vector::add(&vector::add(&a, &b), &c)
    }

    fn check_jacobi(&self) -> Result<()> {
        // triples with a repeated index vanish by antisymmetry
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let d = self.jacobi_defect(i, j, k);
                    if !vector::is_zero(&d) {
                        return Err(Error::JacobiViolation {
                            i,
                            j,
                            k,
                            triple: format!("({},{},{})", self.names[i], self.names[j], self.names[k]),
                            defect: vector::render(&d),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Span of `[a, b]` over basis vectors `a` of `x` and `b` of `y`.
    pub fn bracket_spaces(&self, x: &Subspace, y: &Subspace) -> Subspace {
        let mut b = SpanBuilder::new(self.field, self.dim);
        for u in x.basis() {
            for v in y.basis() {
                b.insert(&self.bracket(u, v));
                if b.dim() == self.dim {
                    return b.finish();
                }
            }
        }
        b.finish()
    }

    /// `L^2 = [L, L]`
    pub fn derived_algebra(&self) -> Subspace {
        let mut b = SpanBuilder::new(self.field, self.dim);
        for (_, _, v) in self.nonzero_brackets() {
            b.insert(v);
        }
        b.finish()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let basis = s.basis();
        basis
            .iter()
            .enumerate()
            .all(|(a, u)| basis[a + 1..].iter().all(|v| s.contains(&self.bracket(u, v))))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|v| (0..self.dim).all(|j| s.contains(&self.bracket(&self.unit(j), v))))
    }

    /// Wrap a subspace known (or checked here) to be a subalgebra.
    pub fn subalgebra(&self, s: Subspace) -> Result<Subalgebra> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        if !self.is_subalgebra(&s) {
            return Err(Error::NotASubalgebra);
        }
        let is_ideal = self.is_ideal(&s);
        Ok(Subalgebra { space: s, is_ideal })
    }

    pub fn whole(&self) -> Subalgebra {
        Subalgebra {
            space: self.full_space(),
            is_ideal: true,
        }
    }

    /// Smallest subalgebra containing `gens`.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subalgebra {
        let space = self.closure_from(SpanBuilder::new(self.field, self.dim), gens);
        let is_ideal = self.is_ideal(&space);
        Subalgebra { space, is_ideal }
    }

    /// Smallest subalgebra containing the subspace `s` and the vectors `extra`.
    pub fn subalgebra_closure(&self, s: &Subspace, extra: &[Vector]) -> Subspace {
        let mut gens: Vec<Vector> = s.basis().to_vec();
        gens.extend(extra.iter().cloned());
        self.closure_from(SpanBuilder::new(self.field, self.dim), &gens)
    }

    fn closure_from(&self, mut b: SpanBuilder, gens: &[Vector]) -> Subspace {
        let mut list: Vec<Vector> = Vec::new();
        for g in gens {
            if let Some(r) = b.insert(g) {
                list.push(r);
            }
        }
        let mut k = 0;
        while k < list.len() && b.dim() < self.dim {
            let v = list[k].clone();
            for j in 0..k {
                let w = self.bracket(&list[j], &v);
                if let Some(r) = b.insert(&w) {
                    list.push(r);
                }
            }
            k += 1;
        }
        b.finish()
    }

    /// Smallest ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subalgebra {
        let mut b = SpanBuilder::new(self.field, self.dim);
        let mut list: Vec<Vector> = seed.basis().iter().filter_map(|v| b.insert(v)).collect();
        let mut k = 0;
        while k < list.len() && b.dim() < self.dim {
            let v = list[k].clone();
            for j in 0..self.dim {
                let w = self.bracket(&self.unit(j), &v);
                if let Some(r) = b.insert(&w) {
                    list.push(r);
                }
            }
            k += 1;
        }
        Subalgebra {
            space: b.finish(),
            is_ideal: true,
        }
    }

    /// `{x in ambient : [x, s] in target for every s in acting}`.
    pub fn bracket_preimage(&self, ambient: &Subspace, acting: &Subspace, target: &Subspace) -> Subspace {
        if ambient.is_zero() || acting.is_zero() || target.is_full() {
            return ambient.clone();
        }
        let cols: Vec<Vector> = ambient
            .basis()
            .iter()
            .map(|a| {
                acting
                    .basis()
                    .iter()
                    .flat_map(|s| target.reduce(&self.bracket(a, s)))
                    .collect()
            })
            .collect();
        let m = Matrix::from_columns(self.field, acting.dim() * self.dim, &cols);
        let kernel = m.kernel();
        let vectors: Vec<Vector> = kernel
            .basis()
            .iter()
            .map(|t| vector::combine(self.field, self.dim, t, ambient.basis()))
            .collect();
        Subspace::span(self.field, self.dim, &vectors)
    }

    /// `C_L(S) = {x : [x, s] = 0 for all s in S}`
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace> {
        self.check_space(s)?;
        Ok(self.bracket_preimage(&self.full_space(), s, &self.zero_space()))
    }

    /// `N_A(S) = {x in A : [x, S] ⊆ S}`
    pub fn normalizer(&self, ambient: &Subspace, s: &Subspace) -> Result<Subspace> {
        self.check_space(ambient)?;
        self.check_space(s)?;
        Ok(self.bracket_preimage(ambient, s, s))
    }

    pub fn center(&self) -> Subspace {
        self.bracket_preimage(&self.full_space(), &self.full_space(), &self.zero_space())
    }

    fn check_space(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim || s.field() != self.field {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Structure constants of a subalgebra in its echelon basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        self.check_space(s)?;
        let basis = s.basis();
        let d = basis.len();
        let mut brackets = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let w = self.bracket(&basis[a], &basis[b]);
                let coords = s.coordinates(&w).ok_or(Error::NotASubalgebra)?;
                if !vector::is_zero(&coords) {
                    brackets.push(((a, b), coords));
                }
            }
        }
        let names = (0..d).map(|i| format!("s{i}")).collect();
        LieAlgebra::new(self.field, d, brackets, Some(names))
    }

    /// Quotient by an ideal, on the complement spanned by the non-pivot
    /// coordinates of the ideal's echelon basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, QuotientMap)> {
        self.check_space(ideal)?;
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let map = QuotientMap {
            ideal: ideal.clone(),
            free: ideal.non_pivots(),
        };
        let d = map.free.len();
        let mut brackets = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let w = self.basis_bracket(map.free[a], map.free[b]);
                let v = map.project(&w);
                if !vector::is_zero(&v) {
                    brackets.push(((a, b), v));
                }
            }
        }
        let names = map.free.iter().map(|&c| self.names[c].clone()).collect();
        let q =
            LieAlgebra::new(self.field, d, brackets, Some(names)).expect("quotients of Lie algebras satisfy Jacobi");
        Ok((q, map))
    }

    /// Same algebra in the basis given by the rows of `basis` (which must be
    /// invertible).
    pub fn change_basis(&self, basis: &[Vector]) -> Result<LieAlgebra> {
        let n = self.dim;
        let b = Matrix::from_rows(self.field, n, basis)?;
        let inv = b
            .inverse()
            .ok_or_else(|| Error::BadParameter("basis is singular".into()))?;
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let w = self.bracket(&basis[i], &basis[j]);
                // row vector w times B^{-1}
                let coords = inv.transpose().mul_vec(&w);
                if !vector::is_zero(&coords) {
                    brackets.push(((i, j), coords));
                }
            }
        }
        LieAlgebra::new(self.field, n, brackets, None)
    }
}

impl Matrix {
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.rows();
        if n != self.cols() {
            return None;
        }
        let rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(vector::unit(self.field(), n, i));
                r
            })
            .collect();
        let aug = Matrix::from_rows(self.field(), 2 * n, &rows).expect("consistent rows");
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let inv_rows: Vec<Vector> = (0..n).map(|i| r.row(i)[n..].to_vec()).collect();
        Some(Matrix::from_rows(self.field(), n, &inv_rows).expect("square"))
    }
}

/// A subspace closed under the bracket.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subalgebra {
    space: Subspace,
    is_ideal: bool,
}

impl Subalgebra {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn into_space(self) -> Subspace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_ideal(&self) -> bool {
        self.is_ideal
    }
}

/// Projection `L -> L/I` onto the non-pivot coordinates of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    ideal: Subspace,
    free: Vec<usize>,
}

impl QuotientMap {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Coordinates of `L` kept in the quotient.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, v: &[Scalar]) -> Vector {
        let r = self.ideal.reduce(v);
        self.free.iter().map(|&c| r[c].clone()).collect()
    }

    /// A preimage of `u`, supported on the free coordinates.
    pub fn lift(&self, u: &[Scalar]) -> Vector {
        let mut v = vector::zero(self.ideal.field(), self.ideal.ambient_dim());
        for (&c, x) in self.free.iter().zip(u) {
            v[c] = x.clone();
        }
        v
    }

    pub fn project_space(&self, s: &Subspace) -> Subspace {
        let vs: Vec<Vector> = s.basis().iter().map(|v| self.project(v)).collect();
        Subspace::span(self.ideal.field(), self.free.len(), &vs)
    }

    /// Full preimage `π^{-1}(s)`, which contains the ideal.
    pub fn preimage(&self, s: &Subspace) -> Subspace {
        let mut b = SpanBuilder::from_subspace(&self.ideal);
        for u in s.basis() {
            b.insert(&self.lift(u));
        }
        b.finish()
    }
}
