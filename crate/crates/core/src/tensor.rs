//! Dense row-major 2-D tensors.
//!
//! This is the unit of all numerical computation in the crate: a `rows x cols`
//! block of scalars with shape metadata. Shapes are validated on every
//! operation and mismatches surface as [`TensorError`] values naming both
//! shapes rather than panics.

use std::fmt;

use crate::scalar::Scalar;

/// Errors raised by tensor construction and shape-checked operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorError {
    /// Constructor data length does not equal `rows * cols`.
    DataLength { rows: usize, cols: usize, got: usize },
    /// Two operands have incompatible shapes for the named operation.
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A row/column slice falls outside the tensor.
    SliceOutOfBounds {
        op: &'static str,
        shape: (usize, usize),
        start: usize,
        len: usize,
    },
    /// An operation that requires a 1x1 tensor received something else.
    NotScalar {
        op: &'static str,
        shape: (usize, usize),
    },
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::DataLength { rows, cols, got } => write!(
                f,
                "data length {got} does not match shape {rows}x{cols} ({} expected)",
                rows * cols
            ),
            TensorError::ShapeMismatch { op, left, right } => write!(
                f,
                "{op}: incompatible shapes {}x{} and {}x{}",
                left.0, left.1, right.0, right.1
            ),
            TensorError::SliceOutOfBounds {
                op,
                shape,
                start,
                len,
            } => write!(
                f,
                "{op}: slice [{start}, {start}+{len}) out of bounds for shape {}x{}",
                shape.0, shape.1
            ),
            TensorError::NotScalar { op, shape } => {
                write!(f, "{op}: expected a 1x1 tensor, got {}x{}", shape.0, shape.1)
            }
        }
    }
}

impl std::error::Error for TensorError {}

/// Dense matrix of [`Scalar`] values in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    /// Builds a tensor from row-major data, checking the length invariant.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, TensorError> {
        if data.len() != rows * cols {
            return Err(TensorError::DataLength {
                rows,
                cols,
                got: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            out.data[i * n + i] = T::one();
        }
        out
    }

    /// Column vector (n x 1).
    pub fn column(values: &[T]) -> Self {
        Self {
            rows: values.len(),
            cols: 1,
            data: values.to_vec(),
        }
    }

    /// Row vector (1 x n).
    pub fn row(values: &[T]) -> Self {
        Self {
            rows: 1,
            cols: values.len(),
            data: values.to_vec(),
        }
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self, TensorError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(TensorError::ShapeMismatch {
                    op: "from_rows",
                    left: (1, n_cols),
                    right: (1, row.len()),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.data[row * self.cols + col] = value;
    }

    pub fn row_slice(&self, row: usize) -> &[T] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn is_scalar(&self) -> bool {
        self.rows == 1 && self.cols == 1
    }

    /// The single value of a 1x1 tensor.
    pub fn scalar_value(&self) -> Option<T> {
        if self.is_scalar() {
            Some(self.data[0])
        } else {
            None
        }
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Elementwise combination of two same-shaped tensors.
    pub fn zip_map(
        &self,
        other: &Self,
        op: &'static str,
        f: impl Fn(T, T) -> T,
    ) -> Result<Self, TensorError> {
        if self.shape() != other.shape() {
            return Err(TensorError::ShapeMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Standard matrix product.
    pub fn matmul(&self, rhs: &Self) -> Result<Self, TensorError> {
        if self.cols != rhs.rows {
            return Err(TensorError::ShapeMismatch {
                op: "matmul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        out.acc_matmul(self, rhs);
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    pub fn scale(&self, factor: T) -> Self {
        self.map(|v| v * factor)
    }

    pub fn sum(&self) -> T {
        self.data.iter().copied().sum()
    }

    pub fn sum_squares(&self) -> T {
        self.data.iter().map(|&v| v * v).sum()
    }

    /// Vertical stacking; column counts must match.
    pub fn concat_rows(&self, other: &Self) -> Result<Self, TensorError> {
        if self.cols != other.cols {
            return Err(TensorError::ShapeMismatch {
                op: "concat_rows",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        data.extend_from_slice(&self.data);
        data.extend_from_slice(&other.data);
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Horizontal concatenation; row counts must match.
    pub fn concat_cols(&self, other: &Self) -> Result<Self, TensorError> {
        if self.rows != other.rows {
            return Err(TensorError::ShapeMismatch {
                op: "concat_cols",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row_slice(r));
            data.extend_from_slice(other.row_slice(r));
        }
        Ok(Self {
            rows: self.rows,
            cols,
            data,
        })
    }

    pub fn slice_rows(&self, start: usize, len: usize) -> Result<Self, TensorError> {
        if start + len > self.rows {
            return Err(TensorError::SliceOutOfBounds {
                op: "slice_rows",
                shape: self.shape(),
                start,
                len,
            });
        }
        Ok(Self {
            rows: len,
            cols: self.cols,
            data: self.data[start * self.cols..(start + len) * self.cols].to_vec(),
        })
    }

    pub fn slice_cols(&self, start: usize, len: usize) -> Result<Self, TensorError> {
        if start + len > self.cols {
            return Err(TensorError::SliceOutOfBounds {
                op: "slice_cols",
                shape: self.shape(),
                start,
                len,
            });
        }
        let mut data = Vec::with_capacity(self.rows * len);
        for r in 0..self.rows {
            data.extend_from_slice(&self.row_slice(r)[start..start + len]);
        }
        Ok(Self {
            rows: self.rows,
            cols: len,
            data,
        })
    }

    pub(crate) fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.shape(), other.shape());
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub(crate) fn add_scaled_assign(&mut self, factor: T, other: &Self) {
        debug_assert_eq!(self.shape(), other.shape());
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a += factor * b;
        }
    }

    /// `self += a * b`. Shapes are the caller's responsibility.
    pub(crate) fn acc_matmul(&mut self, a: &Self, b: &Self) {
        debug_assert_eq!(a.cols, b.rows);
        debug_assert_eq!((self.rows, self.cols), (a.rows, b.cols));
        let n = b.cols;
        for i in 0..a.rows {
            let a_row = a.row_slice(i);
            let out_row = &mut self.data[i * n..(i + 1) * n];
            for (k, &a_ik) in a_row.iter().enumerate() {
                let b_row = b.row_slice(k);
                for (o, &b_kj) in out_row.iter_mut().zip(b_row) {
                    *o += a_ik * b_kj;
                }
            }
        }
    }

    /// `self += a * b^T` without materializing the transpose.
    pub(crate) fn acc_matmul_nt(&mut self, a: &Self, b: &Self) {
        debug_assert_eq!(a.cols, b.cols);
        debug_assert_eq!((self.rows, self.cols), (a.rows, b.rows));
        for i in 0..a.rows {
            let a_row = a.row_slice(i);
            let out_row = &mut self.data[i * b.rows..(i + 1) * b.rows];
            for (j, o) in out_row.iter_mut().enumerate() {
                let b_row = b.row_slice(j);
                let mut acc = T::zero();
                for (&x, &y) in a_row.iter().zip(b_row) {
                    acc = acc + x * y;
                }
                *o += acc;
            }
        }
    }

    /// `self += a^T * b` without materializing the transpose.
    pub(crate) fn acc_matmul_tn(&mut self, a: &Self, b: &Self) {
        debug_assert_eq!(a.rows, b.rows);
        debug_assert_eq!((self.rows, self.cols), (a.cols, b.cols));
        let n = b.cols;
        for k in 0..a.rows {
            let a_row = a.row_slice(k);
            let b_row = b.row_slice(k);
            for (i, &a_ki) in a_row.iter().enumerate() {
                let out_row = &mut self.data[i * n..(i + 1) * n];
                for (o, &b_kj) in out_row.iter_mut().zip(b_row) {
                    *o += a_ki * b_kj;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type T64 = Tensor<f64>;

    #[test]
    fn new_rejects_bad_length() {
        let err = T64::new(2, 2, vec![1.0, 2.0, 3.0]).unwrap_err();
        assert_eq!(
            err,
            TensorError::DataLength {
                rows: 2,
                cols: 2,
                got: 3
            }
        );
    }

    #[test]
    fn matmul_hand_oracle() {
        // [[1,2],[3,4]] * [[5],[6]] = [[17],[39]]
        let a = T64::new(2, 2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        let b = T64::column(&[5.0, 6.0]);
        let c = a.matmul(&b).unwrap();
        assert_eq!(c.data(), &[17.0, 39.0]);
    }

    #[test]
    fn matmul_identity_is_exact() {
        let a = T64::new(2, 3, vec![1.5, -2.0, 0.25, 3.0, 4.0, -0.5]).unwrap();
        assert_eq!(T64::identity(2).matmul(&a).unwrap(), a);
        assert_eq!(a.matmul(&T64::identity(3)).unwrap(), a);
    }

    #[test]
    fn matmul_shape_error_names_both_shapes() {
        let a = T64::zeros(2, 3);
        let b = T64::zeros(2, 2);
        let err = a.matmul(&b).unwrap_err();
        assert_eq!(
            err,
            TensorError::ShapeMismatch {
                op: "matmul",
                left: (2, 3),
                right: (2, 2)
            }
        );
    }

    #[test]
    fn transpose_round_trip() {
        let a = T64::new(2, 3, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().shape(), (3, 2));
        assert_eq!(a.transpose().get(2, 1), 6.0);
    }

    #[test]
    fn concat_with_zero_width_is_identity() {
        let a = T64::new(2, 0, vec![]).unwrap();
        let b = T64::new(2, 2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(a.concat_cols(&b).unwrap(), b);
        assert_eq!(b.concat_cols(&a).unwrap(), b);
    }

    #[test]
    fn concat_rows_stacks() {
        let a = T64::column(&[1.0, 2.0]);
        let b = T64::column(&[3.0]);
        let c = a.concat_rows(&b).unwrap();
        assert_eq!(c.shape(), (3, 1));
        assert_eq!(c.data(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn slices() {
        let a = T64::new(3, 2, vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(a.slice_rows(1, 2).unwrap().data(), &[3.0, 4.0, 5.0, 6.0]);
        assert_eq!(a.slice_cols(1, 1).unwrap().data(), &[2.0, 4.0, 6.0]);
        assert!(a.slice_rows(2, 2).is_err());
        assert!(a.slice_cols(1, 2).is_err());
    }

    #[test]
    fn accumulating_matmuls_match_plain_forms() {
        let a = T64::new(2, 3, vec![1.0, -2.0, 3.0, 0.5, 4.0, -1.0]).unwrap();
        let b = T64::new(3, 2, vec![2.0, 0.0, 1.0, -1.0, 3.0, 5.0]).unwrap();

        let mut nt = T64::zeros(2, 2);
        nt.acc_matmul_nt(&a, &b.transpose());
        assert_eq!(nt, a.matmul(&b).unwrap());

        let mut tn = T64::zeros(3, 2);
        tn.acc_matmul_tn(&a.transpose(), &b);
        assert_eq!(tn, a.matmul(&b).unwrap().transpose().transpose());
    }
}
