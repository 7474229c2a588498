use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, RationalFunction};

/// Scalars a [`Matrix`] can hold: a commutative ring with exact equality.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// JSON form of one entry.
    fn to_wire(&self) -> serde_json::Value;
}

macro_rules! impl_scalar {
    ($t:ty, $wire:expr) => {
        impl Scalar for $t {
            fn add_ref(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn neg_ref(&self) -> Self {
                -self
            }
            fn to_wire(&self) -> serde_json::Value {
                $wire(self)
            }
        }
    };
}

impl_scalar!(BigInt, |v: &BigInt| serde_json::Value::String(v.to_string()));
impl_scalar!(LaurentPoly, |v: &LaurentPoly| serde_json::to_value(v).expect("polynomial serializes"));
impl_scalar!(RationalFunction, |v: &RationalFunction| serde_json::to_value(v).expect("fraction serializes"));

/// Dense row-major matrix with optional row and column labels.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

/// Matrix over `Z[x^±1, y^±1]`.
pub type RingMatrix = Matrix<LaurentPoly>;
/// Matrix over `Q(x, y)`.
pub type FieldMatrix = Matrix<RationalFunction>;
/// Matrix over the integers.
pub type IntMatrix = Matrix<BigInt>;

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols], row_labels: None, col_labels: None }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect(), row_labels: None, col_labels: None })
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`; every column must
    /// have length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<T>]) -> Result<Self> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch(format!("column {j} has length {}", col.len())));
            }
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self> {
        check_labels(&row_labels, self.rows, "row")?;
        check_labels(&col_labels, self.cols, "column")?;
        self.row_labels = Some(row_labels);
        self.col_labels = Some(col_labels);
        Ok(self)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t.row_labels = self.col_labels.clone();
        t.col_labels = self.row_labels.clone();
        t
    }

    /// Exact product. Row labels come from `self`, column labels from `rhs`.
    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        out.row_labels = self.row_labels.clone();
        out.col_labels = rhs.col_labels.clone();
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
            })
            .collect())
    }

    pub fn sub(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch("matrix difference".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a = a.add_ref(&b.neg_ref());
        }
        Ok(out)
    }

    /// Entry-wise equality ignoring labels.
    pub fn same_entries(&self, rhs: &Matrix<T>) -> bool {
        self.rows == rhs.rows && self.cols == rhs.cols && self.data == rhs.data
    }
}

fn check_labels(labels: &[String], len: usize, axis: &str) -> Result<()> {
    if labels.len() != len {
        return Err(Error::DimensionMismatch(format!("{} {axis} labels for {len} {axis}s", labels.len())));
    }
    let mut sorted: Vec<&String> = labels.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(format!("duplicate {axis} label")));
    }
    Ok(())
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .chain(self.col_labels.iter().flatten())
            .map(String::len)
            .max()
            .unwrap_or(1);
        let label_width = self.row_labels.iter().flatten().map(String::len).max().unwrap_or(0);
        if let Some(cl) = &self.col_labels {
            write!(f, "{:label_width$}", "")?;
            if self.row_labels.is_some() {
                write!(f, " ")?;
            }
            for l in cl {
                write!(f, " {l:>width$}")?;
            }
            writeln!(f)?;
        }
        for (i, row) in cells.iter().enumerate() {
            if let Some(rl) = &self.row_labels {
                write!(f, "{:label_width$} ", rl[i])?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{self}", self.rows, self.cols)
    }
}

/// `{"rows":r,"cols":c,"row_labels":[...],"col_labels":[...],"entries":[[..],..]}`;
/// missing labels are written as empty arrays.
impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let empty: Vec<String> = Vec::new();
        let mut st = s.serialize_struct("Matrix", 5)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("row_labels", self.row_labels.as_ref().unwrap_or(&empty))?;
        st.serialize_field("col_labels", self.col_labels.as_ref().unwrap_or(&empty))?;
        let entries: Vec<Vec<serde_json::Value>> =
            (0..self.rows).map(|i| self.row(i).iter().map(Scalar::to_wire).collect()).collect();
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

impl From<&RingMatrix> for FieldMatrix {
    fn from(m: &RingMatrix) -> Self {
        m.map(|p| RationalFunction::from(p.clone()))
    }
}

impl RingMatrix {
    /// Evaluates every entry at `x = y = 1`.
    pub fn eval_at_one(&self) -> IntMatrix {
        self.map(LaurentPoly::eval_at_one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::lp;

    #[test]
    fn product_examples() {
        let a = RingMatrix::from_rows(vec![vec![lp("x"), lp("1 - y")], vec![lp("0"), lp("x^-1")]]).unwrap();
        assert!(a.mul(&RingMatrix::identity(2)).unwrap().same_entries(&a));
        let one_x = RingMatrix::from_rows(vec![vec![lp("x")]]).unwrap();
        let one_y = RingMatrix::from_rows(vec![vec![lp("y")]]).unwrap();
        assert_eq!(one_x.mul(&one_y).unwrap()[(0, 0)], lp("xy"));

        let perm = IntMatrix::from_rows(vec![
            vec![0.into(), 1.into(), 0.into()],
            vec![0.into(), 0.into(), 1.into()],
            vec![1.into(), 0.into(), 0.into()],
        ])
        .unwrap();
        assert!(perm.mul(&perm.transpose()).unwrap().same_entries(&IntMatrix::identity(3)));
    }

    #[test]
    fn dimension_mismatch() {
        let a = IntMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(Error::DimensionMismatch(_))));
        assert!(a.mul_vec(&[BigInt::zero()]).is_err());
    }

    #[test]
    fn labels_must_be_unique() {
        let a = IntMatrix::zeros(2, 1);
        assert!(a.clone().with_labels(vec!["p".into(), "p".into()], vec!["q".into()]).is_err());
        assert!(a.with_labels(vec!["p".into(), "r".into()], vec!["q".into()]).is_ok());
    }

    #[test]
    fn json_layout() {
        let m = RingMatrix::from_rows(vec![vec![lp("x - 1")]])
            .unwrap()
            .with_labels(vec!["a_1".into()], vec!["A_{1,2}".into()])
            .unwrap();
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"rows":1,"cols":1,"row_labels":["a_1"],"col_labels":["A_{1,2}"],"entries":[[{"terms":[[1,0,"1"],[0,0,"-1"]]}]]}"#
        );
    }
}
