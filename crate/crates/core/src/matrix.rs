//! Dense matrices and coordinate vectors over a [`Field`].

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::subspace::Subspace;

/// A coordinate vector. Its field is implied by its entries.
pub type Vector = Vec<Scalar>;

pub mod vector {
    //! Small helpers on coordinate vectors.
    use super::Vector;
    use crate::field::{Field, Scalar};

    pub fn zero(field: Field, n: usize) -> Vector {
        vec![field.zero(); n]
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn unit(field: Field, n: usize, i: usize) -> Vector {
        let mut v = zero(field, n);
        v[i] = field.one();
        v
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Scalar::is_zero)
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
        v.iter().map(|x| c * x).collect()
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

    /// Linear combination `sum coeffs[i] * vectors[i]`.
    pub fn combine(field: Field, n: usize, coeffs: &[Scalar], vectors: &[Vector]) -> Vector {
        let mut acc = zero(field, n);
        for (c, v) in coeffs.iter().zip(vectors) {
            axpy(&mut acc, c, v);
        }
        acc
    }

    /// Scale so the first nonzero entry is one. Zero stays zero.
    pub fn normalize(v: &[Scalar]) -> Vector {
        match v.iter().find(|x| !x.is_zero()) {
            Some(lead) => scale(&lead.inv().expect("nonzero"), v),
            None => v.to_vec(),
        }
    }

    /// `(a,b,c)` rendering used in diagnostics and reports.
    pub fn render(v: &[Scalar]) -> String {
        let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// A dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    /// Build from row-major data, checking the entry count and that every
    /// entry belongs to `field`.
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        if let Some(bad) = data.iter().find(|x| !field.contains(x)) {
            return Err(Error::FieldMismatch(format!("entry {bad} is not in {field}")));
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().cloned());
        }
        Self::new(field, rows.len(), cols, data)
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            debug_assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        Self {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        assert!(self.field.contains(&x), "entry from the wrong field");
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `self - lambda * I`
    pub fn shift(&self, lambda: &Scalar) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        for i in 0..self.rows {
            let idx = i * self.cols + i;
            m.data[idx] = &m.data[idx] - lambda;
        }
        m
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    /// A square matrix is nilpotent iff its `n`-th power vanishes.
    pub fn is_nilpotent(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            return true;
        }
        // repeated squaring up to the first power >= n
        let mut m = self.clone();
        let mut e = 1usize;
        while e < self.rows {
            m = m.mul(&m);
            e *= 2;
        }
        m.is_zero()
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = &m.data[idx] * &inv;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let x = m.get(r, j).clone();
                    if !x.is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] = &m.data[idx] - &(&f * &x);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let (m, pivots) = self.rref_with_pivots();
        (m, pivots.len())
    }

    /// Like [`Matrix::rref`], but first checks that every entry lies in the
    /// matrix's field. Matrices built through the public constructors are
    /// always consistent; this guards raw data handed over from elsewhere.
    pub fn checked_rref(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<(Matrix, usize)> {
        Ok(Matrix::new(field, rows, cols, data)?.rref())
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis: Vec<Vector> = free
            .iter()
            .map(|&f| {
                let mut v = vector::zero(self.field, self.cols);
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, f);
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.cols, &basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vector> = (0..self.cols).map(|j| self.column(j)).collect();
        Subspace::span(self.field, self.rows, &cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows).map(|i| vector::render(self.row(i))).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(Q, 3);
        assert_eq!(id.rref(), (id.clone(), 3));
    }

    #[test]
    fn rref_proportional_rows() {
        let m = Matrix::from_i64(Q, &[&[2, 4], &[1, 2]]);
        let (r, rank) = m.rref();
        assert_eq!(r, Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn rref_char_two_cancellation() {
        let f = Field::Prime(2);
        let m = Matrix::from_i64(f, &[&[1, 1], &[1, 1]]);
        let (r, rank) = m.rref();
        assert_eq!(r, Matrix::from_i64(f, &[&[1, 1], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn mixed_fields_rejected() {
        let data = vec![Q.one(), Field::Prime(3).one()];
        assert!(matches!(
            Matrix::checked_rref(Q, 1, 2, data),
            Err(Error::FieldMismatch(_))
        ));
    }

    #[test]
    fn kernels() {
        assert_eq!(Matrix::zeros(Q, 2, 2).kernel().dim(), 2);
        assert_eq!(Matrix::identity(Field::Prime(5), 2).kernel().dim(), 0);
        let jordan = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]);
        let k = jordan.kernel();
        assert_eq!(k, Subspace::span(Q, 2, &[vec![Q.one(), Q.zero()]]));
    }

    #[test]
    fn nilpotency() {
        assert!(Matrix::from_i64(Q, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]).is_nilpotent());
        assert!(!Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]).is_nilpotent());
        assert!(Matrix::zeros(Q, 0, 0).is_nilpotent());
    }
}
