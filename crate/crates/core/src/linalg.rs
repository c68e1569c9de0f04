//! Dense exact matrices with fraction-free elimination.
//!
//! Rank, determinant and nullspace go through Bareiss elimination on an
//! integer copy of the matrix (each row scaled by the lcm of its
//! denominators, which leaves rank and kernel unchanged). Pivoting is
//! deterministic: first nonzero entry in the column, in row order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Matrix of a linear operator on a coefficient space.
pub type OperatorMatrix = Matrix;

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    /// Product of the row-swap signs, for determinants.
    swap_negative: bool,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape { rows: r, cols: c, context: "ragged rows" });
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape { rows, cols: columns.len(), context: "column length" });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape { rows: other.rows, cols: other.cols, context: "product" });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Shape { rows: self.rows, cols: self.cols, context: "matrix-vector product" });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&Matrix]) -> Result<Matrix> {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(Error::Shape { rows: p.rows, cols: p.cols, context: "vstack" });
            }
            rows += p.rows;
            data.extend(p.data.iter().cloned());
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
            })
            .collect()
    }

    fn echelon(&self) -> Echelon {
        let mut a = self.integer_rows();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        let mut swap_negative = false;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                a.swap(p, r);
                swap_negative = !swap_negative;
            }
            let (top, bottom) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pivot = &pivot_row[c];
            for row in bottom.iter_mut() {
                let factor = row[c].clone();
                for j in c + 1..self.cols {
                    let v = pivot * &row[j] - &factor * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        Echelon { rows: a, pivots, swap_negative }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::Shape { rows: self.rows, cols: self.cols, context: "determinant" });
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        // Undo the row scaling used to clear denominators.
        let scale = (0..self.rows).fold(Rational::one(), |acc, i| {
            let lcm = self.row(i).iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
            acc * Rational::from_integer(lcm)
        });
        let e = self.echelon();
        if e.pivots.len() < self.rows {
            return Ok(Rational::zero());
        }
        let last = Rational::from_integer(e.rows[self.rows - 1][self.cols - 1].clone());
        let det = last / scale;
        Ok(if e.swap_negative { -det } else { det })
    }

    /// Basis of the kernel in reduced form: each vector has a 1 in one free
    /// column and 0 in the other free columns.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let e = self.echelon();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &e.pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            for (r, &p) in e.pivots.iter().enumerate().rev() {
                let row = &e.rows[r];
                let mut s = Rational::zero();
                for j in p + 1..self.cols {
                    if !row[j].is_zero() && !x[j].is_zero() {
                        s += Rational::from_integer(row[j].clone()) * &x[j];
                    }
                }
                x[p] = -s / Rational::from_integer(row[p].clone());
            }
            basis.push(x);
        }
        basis
    }

    /// Rank by plain rational Gauss-Jordan, scanning columns right to left
    /// and choosing the last nonzero row as pivot. Shares no code path with
    /// [`Matrix::rank`]; used to cross-check it.
    pub fn rank_reverse_order(&self) -> usize {
        let mut a = self.to_rows();
        let mut used = vec![false; self.rows];
        let mut rank = 0;
        for c in (0..self.cols).rev() {
            let Some(p) = (0..self.rows).rev().find(|&i| !used[i] && !a[i][c].is_zero()) else {
                continue;
            };
            used[p] = true;
            rank += 1;
            let inv = a[p][c].recip();
            let pivot_row: Vec<Rational> = a[p].iter().map(|v| v * &inv).collect();
            for (i, row) in a.iter_mut().enumerate() {
                if i == p || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        *x -= &f * pv;
                    }
                }
            }
            a[p] = pivot_row;
        }
        rank
    }
}

/// Scales a vector so its entries are coprime integers with a positive
/// leading entry.
pub fn primitive(v: &[Rational]) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return v.to_vec();
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|x| Rational::from_integer(x * &sign / &gcd)).collect()
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|v| v.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|t| parse_rational(t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Matrix::from_rows(parsed).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let id = Matrix::identity(4);
        assert_eq!(id.rank(), 4);
        assert!(id.nullspace().is_empty());
        assert_eq!(id.determinant().unwrap(), int(1));
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let z = Matrix::zeros(2, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.nullspace().len(), 3);
    }

    #[test]
    fn rank_deficient_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.rank_reverse_order(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).unwrap().iter().all(Zero::is_zero));
        assert_eq!(ns[0], vec![int(-1), int(-1), int(1)]);
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant().unwrap(), int(-1));
        assert_eq!(m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).determinant().unwrap(), int(18));
        let r = Matrix::from_rows(vec![
            vec![ratio(3, 5), ratio(-4, 5)],
            vec![ratio(4, 5), ratio(3, 5)],
        ])
        .unwrap();
        assert_eq!(r.determinant().unwrap(), int(1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant().unwrap(), int(0));
    }

    #[test]
    fn skipped_columns_keep_exact_division() {
        let a = m(&[&[0, 2, 4, 1], &[0, 1, 2, 3], &[0, 3, 6, 4], &[0, 0, 0, 5]]);
        assert_eq!(a.rank(), a.rank_reverse_order());
        for v in a.nullspace() {
            assert!(a.mul_vec(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(primitive(&[ratio(-1, 2), ratio(1, 3)]), vec![int(3), int(-2)]);
    }

    #[test]
    fn json_roundtrip() {
        let a = Matrix::from_rows(vec![vec![ratio(3, 5), int(0)], vec![int(0), ratio(-1, 7)]]).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"[["3/5","0"],["0","-1/7"]]"#);
        assert_eq!(serde_json::from_str::<Matrix>(&s).unwrap(), a);
    }
}
