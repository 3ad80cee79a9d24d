//! Canonical subspaces of `F^n`.
//!
//! A [`Subspace`] is stored by its reduced row-echelon basis, so two equal
//! subspaces always compare (and hash) equal regardless of how they were
//! produced.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{vector, Matrix, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    /// Reduced row-echelon rows, pivot columns strictly increasing.
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| vector::unit(field, ambient, i)).collect();
        Self {
            field,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of `vectors`, which must all have length `ambient`.
    pub fn span(field: Field, ambient: usize, vectors: &[Vector]) -> Self {
        let mut b = SpanBuilder::new(field, ambient);
        for v in vectors {
            b.insert(v);
        }
        b.finish()
    }

    /// Like [`Subspace::span`] but validating lengths and fields.
    pub fn try_span(field: Field, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if let Some(bad) = v.iter().find(|x| !field.contains(x)) {
                return Err(Error::FieldMismatch(format!("entry {bad} is not in {field}")));
            }
        }
        Ok(Self::span(field, ambient, vectors))
    }

    /// Trust `rows` to already be in reduced row-echelon form.
    pub(crate) fn from_rref_rows(field: Field, ambient: usize, rows: Vec<Vector>) -> Self {
        let pivots = rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("nonzero row"))
            .collect();
        let s = Self {
            field,
            ambient,
            rows,
            pivots,
        };
        debug_assert!(s.is_canonical());
        s
    }

    fn is_canonical(&self) -> bool {
        self.pivots.windows(2).all(|w| w[0] < w[1])
            && self.rows.iter().zip(&self.pivots).enumerate().all(|(i, (r, &p))| {
                r[..p].iter().all(Scalar::is_zero)
                    && r[p].is_one()
                    && self
                        .rows
                        .iter()
                        .enumerate()
                        .all(|(k, other)| k == i || other[p].is_zero())
            })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// The echelon basis vectors.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, &self.rows).expect("consistent basis")
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the corresponding unit vectors span a
    /// complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// `v` minus its component along the echelon basis; zero iff `v` lies
    /// in the subspace. The map is linear in `v`.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                let neg = -&c;
                vector::axpy(&mut out, &neg, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        vector::is_zero(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.dim() <= self.dim() && other.rows.iter().all(|v| self.contains(v))
    }

    /// Coefficients of `v` in the echelon basis, or `None` if `v` is
    /// outside the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coefficients in the echelon basis.
    pub fn from_coordinates(&self, coeffs: &[Scalar]) -> Vector {
        vector::combine(self.field, self.ambient, coeffs, &self.rows)
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "subspaces over {} and {}",
                self.field, other.field
            )));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut b = SpanBuilder::from_subspace(self);
        for v in &other.rows {
            b.insert(v);
        }
        Ok(b.finish())
    }

    /// Zassenhaus: echelonize `[a | a]` over `[b | 0]`; rows with a zero left
    /// half span the intersection in their right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for a in &self.rows {
            let mut r = a.clone();
            r.extend(a.iter().cloned());
            rows.push(r);
        }
        for b in &other.rows {
            let mut r = b.clone();
            r.extend(std::iter::repeat_n(self.field.zero(), n));
            rows.push(r);
        }
        let m = Matrix::from_rows(self.field, 2 * n, &rows)?;
        let (r, rank) = m.rref();
        let meet: Vec<Vector> = (0..rank)
            .map(|i| r.row(i))
            .filter(|row| vector::is_zero(&row[..n]))
            .map(|row| row[n..].to_vec())
            .collect();
        let out = Subspace::span(self.field, n, &meet);
        debug_assert_eq!(
            self.dim() + other.dim(),
            out.dim() + self.sum(other).map(|s| s.dim()).unwrap_or(0)
        );
        Ok(out)
    }

    /// Render as `(..)|(..)`; the zero subspace renders as `0`.
    pub fn render(&self) -> String {
        if self.rows.is_empty() {
            return "0".to_string();
        }
        self.rows
            .iter()
            .map(|r| vector::render(r))
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(dim, pivot columns, echelon rows)`, so lines through
/// earlier basis vectors come first.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field, self.ambient, self.rows.len(), &self.pivots, &self.rows).cmp(&(
            other.field,
            other.ambient,
            other.rows.len(),
            &other.pivots,
            &other.rows,
        ))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Incremental reduced-echelon accumulator.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(field: Field, ambient: usize) -> Self {
        Self {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        Self {
            field: s.field,
            ambient: s.ambient,
            rows: s.rows.clone(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                vector::axpy(&mut out, &-&c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Add `v` to the span. Returns the reduced remainder when the span grew.
    pub fn insert(&mut self, v: &[Scalar]) -> Option<Vector> {
        debug_assert_eq!(v.len(), self.ambient);
        let r = self.reduce(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        let r = vector::scale(&r[p].inv().expect("nonzero"), &r);
        for row in &mut self.rows {
            let c = row[p].clone();
            if !c.is_zero() {
                vector::axpy(row, &-&c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r.clone());
        self.pivots.insert(at, p);
        Some(r)
    }

    pub fn finish(self) -> Subspace {
        Subspace::from_rref_rows(self.field, self.ambient, self.rows)
    }
}
