//! Characteristic polynomials and base-field eigenvalues.
//!
//! Over GF(p) eigenvalues are found by evaluating the characteristic
//! polynomial at every field element. Over Q the rational root theorem
//! applies after clearing denominators: every rational root `r/s` in lowest
//! terms has `r` dividing the trailing and `s` the leading coefficient.
//! Irrational eigenvalues have no eigenvector defined over Q, so nothing that
//! consumes these eigenvalues (common eigenvectors, one-dimensional ideals)
//! can miss a solution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// Coefficients of a polynomial, lowest degree first.
pub type Poly = Vec<Scalar>;

pub fn eval(poly: &[Scalar], x: &Scalar) -> Scalar {
    let field = x.field();
    poly.iter().rev().fold(field.zero(), |acc, c| &(&acc * x) + c)
}

impl Matrix {
    /// Monic characteristic polynomial `det(tI - A)` via reduction to upper
    /// Hessenberg form.
    #[allow(clippy::needless_range_loop)]
    pub fn char_poly(&self) -> Poly {
        assert_eq!(
            self.rows(),
            self.cols(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = self.rows();
        let field = self.field();
        let mut h: Vec<Vec<Scalar>> = (0..n).map(|i| self.row(i).to_vec()).collect();

        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else {
                continue;
            };
            if i != j + 1 {
                h.swap(i, j + 1);
                for row in h.iter_mut() {
                    row.swap(i, j + 1);
                }
            }
            let pivot_inv = h[j + 1][j].inv().expect("nonzero pivot");
            for k in j + 2..n {
                let u = &h[k][j] * &pivot_inv;
                if u.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let t = &u * &h[j + 1][c];
                    h[k][c] = &h[k][c] - &t;
                }
                for row in h.iter_mut() {
                    let t = &u * &row[k];
                    row[j + 1] = &row[j + 1] + &t;
                }
            }
        }

        let mut polys: Vec<Poly> = vec![vec![field.one()]];
        for m in 1..=n {
            // (t - h[m-1][m-1]) * p_{m-1}
            let prev = &polys[m - 1];
            let mut p = vec![field.zero(); m + 1];
            for (d, c) in prev.iter().enumerate() {
                p[d + 1] = &p[d + 1] + c;
                p[d] = &p[d] - &(&h[m - 1][m - 1] * c);
            }
            let mut prod = field.one();
            for i in (1..m).rev() {
                prod = &prod * &h[i][i - 1];
                let coef = &h[i - 1][m - 1] * &prod;
                if coef.is_zero() {
                    continue;
                }
                for (d, c) in polys[i - 1].iter().enumerate() {
                    p[d] = &p[d] - &(&coef * c);
                }
            }
            polys.push(p);
        }
        polys.pop().expect("at least the constant polynomial")
    }

    /// Distinct eigenvalues lying in the base field, ascending.
    pub fn eigenvalues(&self) -> Vec<Scalar> {
        let poly = self.char_poly();
        match self.field() {
            Field::Prime(_) => self
                .field()
                .elements()
                .into_iter()
                .filter(|x| eval(&poly, x).is_zero())
                .collect(),
            Field::Rationals => {
                let q: Vec<BigRational> = poly
                    .iter()
                    .map(|c| c.as_rational().expect("rational coefficient").clone())
                    .collect();
                rational_roots(&q).into_iter().map(Scalar::Rational).collect()
            }
        }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let e = &n / &d;
            if e != d {
                large.push(e);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct rational roots of a polynomial (lowest degree first), ascending.
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut c: Vec<BigRational> = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = c
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();

    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
        let shift = ints.iter().position(|x| !x.is_zero()).expect("nonzero polynomial");
        ints.drain(..shift);
    }
    if ints.len() > 1 {
        let lead = ints.last().expect("nonempty").clone();
        let poly: Vec<BigRational> = ints.iter().cloned().map(BigRational::from_integer).collect();
        for num in divisors(&ints[0]) {
            for den in divisors(&lead) {
                for sign in [-1, 1] {
                    let r = BigRational::new(&num * sign, den.clone());
                    let v = poly.iter().rev().fold(BigRational::zero(), |acc, k| acc * &r + k);
                    if v.is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}
