//! The lambda-vector-cyclic shift, vector-circulant matrices and the
//! companion matrix `T_lambda`, on top of dense vector/matrix arithmetic
//! over a [`Field`].
//!
//! For `lambda = (l_0, ..., l_{n-1})` the shift sends
//! `(v_0, ..., v_{n-1})` to `(0, v_0, ..., v_{n-2}) + v_{n-1} * lambda`.
//! `cir_lambda(a)` is the `n x n` matrix whose row `i` is the `i`-th shift
//! of `a`. With `lambda = (1, 0, ..., 0)` this is the classical circulant,
//! with `lambda = (c, 0, ..., 0)` the `c`-twistulant.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{same_field, Elem, Field, FieldRef};

/// A dense vector over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldVector {
    field: FieldRef,
    coords: Vec<Elem>,
}

impl FieldVector {
    pub fn new(field: FieldRef, coords: Vec<Elem>) -> Result<Self> {
        for &c in &coords {
            field.check(c)?;
        }
        Ok(FieldVector { field, coords })
    }

    /// Builds a vector from raw element indices.
    pub fn from_indices(field: FieldRef, indices: &[u8]) -> Result<Self> {
        Self::new(field, indices.iter().map(|&i| Elem(i)).collect())
    }

    pub fn zeros(field: FieldRef, n: usize) -> Self {
        FieldVector {
            field,
            coords: vec![Elem::ZERO; n],
        }
    }

    /// The standard basis vector with a single 1 at position `i` (0-based),
    /// i.e. `E_{i+1}`.
    pub fn unit(field: FieldRef, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, n);
        v.coords[i] = Elem::ONE;
        v
    }

    /// Parses the comma-separated text form, e.g. `1,a,0`.
    pub fn parse(field: FieldRef, text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|t| field.parse_elem(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(FieldVector { field, coords })
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Elem> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    fn conform(&self, other: &FieldVector) -> Result<()> {
        if !same_field(&self.field, &other.field) {
            return Err(Error::FieldMismatch);
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldVector) -> Result<FieldVector> {
        self.conform(other)?;
        let f = &self.field;
        Ok(FieldVector {
            field: f.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &FieldVector) -> Result<FieldVector> {
        self.conform(other)?;
        let f = &self.field;
        Ok(FieldVector {
            field: f.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: Elem) -> Result<FieldVector> {
        let f = &self.field;
        f.check(c)?;
        Ok(FieldVector {
            field: f.clone(),
            coords: self.coords.iter().map(|&a| f.mul(c, a)).collect(),
        })
    }

    /// Row vector times matrix, `v * A`.
    pub fn mul_matrix(&self, a: &FieldMatrix) -> Result<FieldVector> {
        if !same_field(&self.field, &a.field) {
            return Err(Error::FieldMismatch);
        }
        if self.len() != a.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{} matrix",
                self.len(),
                a.rows,
                a.cols
            )));
        }
        let f = &self.field;
        let mut out = vec![Elem::ZERO; a.cols];
        for (i, &vi) in self.coords.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(a.row(i)) {
                *o = f.add(*o, f.mul(vi, x));
            }
        }
        Ok(FieldVector {
            field: f.clone(),
            coords: out,
        })
    }
}

impl fmt::Display for FieldVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_row(f, &self.field, &self.coords)
    }
}

fn write_row(f: &mut fmt::Formatter<'_>, field: &Field, row: &[Elem]) -> fmt::Result {
    for (i, &c) in row.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        f.write_str(&field.format_elem(c))?;
    }
    Ok(())
}

/// The shift vector `lambda`; always at least one coordinate long.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftVector(FieldVector);

impl ShiftVector {
    pub fn new(field: FieldRef, coords: Vec<Elem>) -> Result<Self> {
        Self::from_vector(FieldVector::new(field, coords)?)
    }

    pub fn from_indices(field: FieldRef, indices: &[u8]) -> Result<Self> {
        Self::from_vector(FieldVector::from_indices(field, indices)?)
    }

    pub fn from_vector(v: FieldVector) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::EmptyShiftVector);
        }
        Ok(ShiftVector(v))
    }

    pub fn parse(field: FieldRef, text: &str) -> Result<Self> {
        Self::from_vector(FieldVector::parse(field, text)?)
    }

    /// `(1, 0, ..., 0)`: the shift becomes a plain right rotation.
    pub fn cyclic(field: FieldRef, n: usize) -> Result<Self> {
        Self::twisted(field, n, Elem::ONE)
    }

    /// `(c, 0, ..., 0)`: the wrapped coordinate is scaled by `c`.
    pub fn twisted(field: FieldRef, n: usize, c: Elem) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyShiftVector);
        }
        field.check(c)?;
        let mut v = FieldVector::zeros(field, n);
        v.coords[0] = c;
        Ok(ShiftVector(v))
    }

    pub fn field(&self) -> &FieldRef {
        self.0.field()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coords(&self) -> &[Elem] {
        self.0.coords()
    }

    pub fn as_vector(&self) -> &FieldVector {
        &self.0
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl FieldMatrix {
    pub fn new(field: FieldRef, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        for &c in &data {
            field.check(c)?;
        }
        Ok(FieldMatrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: FieldRef, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: FieldRef, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Elem::ONE;
        }
        m
    }

    /// Stacks equal-length vectors over one field as rows.
    pub fn from_rows(field: FieldRef, rows: &[FieldVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, FieldVector::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if !same_field(&field, r.field()) {
                return Err(Error::FieldMismatch);
            }
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r.coords());
        }
        Ok(FieldMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Parses one row per line (or per `;`), entries comma-separated.
    pub fn parse(field: FieldRef, text: &str) -> Result<Self> {
        let rows = text
            .split(['\n', ';'])
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| FieldVector::parse(field.clone(), l))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, &rows)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Elem) -> Result<()> {
        self.field.check(value)?;
        self.data[i * self.cols + j] = value;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> FieldVector {
        FieldVector {
            field: self.field.clone(),
            coords: self.row(i).to_vec(),
        }
    }

    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    fn same_shape(&self, other: &FieldMatrix) -> Result<()> {
        if !same_field(&self.field, &other.field) {
            return Err(Error::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        self.same_shape(other)?;
        let f = &self.field;
        Ok(FieldMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: Elem) -> Result<FieldMatrix> {
        let f = &self.field;
        f.check(c)?;
        Ok(FieldMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(c, a)).collect(),
        })
    }

    pub fn mul(&self, other: &FieldMatrix) -> Result<FieldMatrix> {
        if !same_field(&self.field, &other.field) {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut data = vec![Elem::ZERO; self.rows * other.cols];
        for i in 0..self.rows {
            let out = &mut data[i * other.cols..(i + 1) * other.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (o, &b) in out.iter_mut().zip(other.row(k)) {
                    *o = f.add(*o, f.mul(a, b));
                }
            }
        }
        Ok(FieldMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// `A^e` by repeated squaring; `A^0` is the identity.
    pub fn pow(&self, mut e: u64) -> Result<FieldMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "power of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut result = FieldMatrix::identity(self.field.clone(), self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Rank by Gaussian elimination over the field.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| !m[r * cols + col].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                m.swap(rank * cols + j, pivot * cols + j);
            }
            let inv = f.inv(m[rank * cols + col]).expect("pivot is nonzero");
            for j in 0..cols {
                m[rank * cols + j] = f.mul(inv, m[rank * cols + j]);
            }
            for r in 0..rows {
                let factor = m[r * cols + col];
                if r == rank || factor.is_zero() {
                    continue;
                }
                for j in 0..cols {
                    let t = f.mul(factor, m[rank * cols + j]);
                    m[r * cols + j] = f.sub(m[r * cols + j], t);
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("\n")?;
            }
            write_row(f, &self.field, self.row(i))?;
        }
        Ok(())
    }
}

fn check_pair(lambda: &ShiftVector, v: &FieldVector) -> Result<()> {
    if !same_field(lambda.field(), v.field()) {
        return Err(Error::FieldMismatch);
    }
    if lambda.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: lambda.len(),
            found: v.len(),
        });
    }
    Ok(())
}

fn shift_in_place(field: &Field, lambda: &[Elem], v: &mut [Elem]) {
    let n = v.len();
    let last = v[n - 1];
    for j in (1..n).rev() {
        v[j] = field.add(v[j - 1], field.mul(last, lambda[j]));
    }
    v[0] = field.mul(last, lambda[0]);
}

/// The lambda-vector-cyclic shift
/// `(v_{n-1} l_0, v_0 + v_{n-1} l_1, ..., v_{n-2} + v_{n-1} l_{n-1})`.
pub fn vector_cyclic_shift(lambda: &ShiftVector, v: &FieldVector) -> Result<FieldVector> {
    check_pair(lambda, v)?;
    let mut coords = v.coords.clone();
    shift_in_place(lambda.field(), lambda.coords(), &mut coords);
    Ok(FieldVector {
        field: v.field.clone(),
        coords,
    })
}

/// `m` successive shifts of `v`.
pub fn shift_power(lambda: &ShiftVector, v: &FieldVector, m: usize) -> Result<FieldVector> {
    check_pair(lambda, v)?;
    let mut coords = v.coords.clone();
    for _ in 0..m {
        shift_in_place(lambda.field(), lambda.coords(), &mut coords);
    }
    Ok(FieldVector {
        field: v.field.clone(),
        coords,
    })
}

/// `cir_lambda(a)`: row 0 is `a`, row `i + 1` is the shift of row `i`.
pub fn vec_circulant(lambda: &ShiftVector, a: &FieldVector) -> Result<FieldMatrix> {
    check_pair(lambda, a)?;
    let n = a.len();
    let field = lambda.field();
    let mut data = Vec::with_capacity(n * n);
    let mut row = a.coords.clone();
    for i in 0..n {
        if i > 0 {
            shift_in_place(field, lambda.coords(), &mut row);
        }
        data.extend_from_slice(&row);
    }
    Ok(FieldMatrix {
        field: field.clone(),
        rows: n,
        cols: n,
        data,
    })
}

/// `T_lambda`: ones on the superdiagonal, `lambda` as the last row, so that
/// the shift of `v` equals `v * T_lambda`.
pub fn companion_matrix(lambda: &ShiftVector) -> FieldMatrix {
    let n = lambda.len();
    let mut m = FieldMatrix::zeros(lambda.field().clone(), n, n);
    for i in 0..n - 1 {
        m.data[i * n + i + 1] = Elem::ONE;
    }
    m.data[(n - 1) * n..].copy_from_slice(lambda.coords());
    m
}

/// `T_lambda` is invertible exactly when `lambda_0 != 0`.
pub fn is_companion_invertible(lambda: &ShiftVector) -> bool {
    !lambda.coords()[0].is_zero()
}

/// Membership in `Cir_{n,lambda}`: every row after the first is the shift of
/// its predecessor.
pub fn is_vector_circulant(lambda: &ShiftVector, m: &FieldMatrix) -> Result<bool> {
    if !same_field(lambda.field(), m.field()) {
        return Err(Error::FieldMismatch);
    }
    let n = lambda.len();
    if m.rows != n || m.cols != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for a shift vector of length {n}",
            m.rows, m.cols
        )));
    }
    let field = lambda.field();
    let mut row = m.row(0).to_vec();
    for i in 1..n {
        shift_in_place(field, lambda.coords(), &mut row);
        if row != m.row(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficients `a` with `M = sum_i a_i cir_lambda(E_{i+1})`, which is the
/// first row of `M`. Fails when `M` is not lambda-vector-circulant.
pub fn basis_decomposition(lambda: &ShiftVector, m: &FieldMatrix) -> Result<FieldVector> {
    if !is_vector_circulant(lambda, m)? {
        return Err(Error::NotVectorCirculant);
    }
    Ok(m.row_vector(0))
}
