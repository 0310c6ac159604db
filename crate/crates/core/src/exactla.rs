//! Dense exact linear algebra over prime fields GF(p), p <= 17.
//!
//! Vectors are plain `Vec<u8>` coordinate lists with entries in `[0, p)`.
//! Matrices act on column vectors (`m * v`). A [`Subspace`] keeps its basis
//! as the rows of a reduced row echelon matrix, so two subspaces are equal
//! exactly when their stored bases are equal.
//!
//! Over GF(2) row reduction runs on bit-packed rows (one `u64` word per 64
//! columns); the other primes use byte rows.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Largest supported modulus.
pub const MAX_PRIME: u8 = 17;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u8, u8),
    #[error("unsupported modulus {0} (must be a prime <= {MAX_PRIME})")]
    UnsupportedModulus(u32),
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn check_modulus(p: u32) -> Result<u8, LinAlgError> {
    if is_prime(p) && p <= MAX_PRIME as u32 {
        Ok(p as u8)
    } else {
        Err(LinAlgError::UnsupportedModulus(p))
    }
}

#[inline]
pub fn add(a: u8, b: u8, p: u8) -> u8 {
    let s = a as u16 + b as u16;
    (s % p as u16) as u8
}

#[inline]
pub fn sub(a: u8, b: u8, p: u8) -> u8 {
    let s = a as u16 + p as u16 - b as u16;
    (s % p as u16) as u8
}

#[inline]
pub fn mul(a: u8, b: u8, p: u8) -> u8 {
    ((a as u16 * b as u16) % p as u16) as u8
}

#[inline]
pub fn neg(a: u8, p: u8) -> u8 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv(a: u8, p: u8) -> u8 {
    assert!(!a.is_multiple_of(p), "inverse of zero in GF({p})");
    // Fermat: a^(p-2)
    let mut result = 1u8;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(result, base, p);
        }
        base = mul(base, base, p);
        e >>= 1;
    }
    result
}

/// A single element of GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u8,
    p: u8,
}

impl FpScalar {
    pub fn new(value: i64, p: u8) -> Self {
        let value = value.rem_euclid(p as i64) as u8;
        Self { value, p }
    }

    pub fn value(self) -> u8 {
        self.value
    }

    pub fn modulus(self) -> u8 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Option<Self> {
        (self.value != 0).then(|| Self {
            value: inv(self.value, self.p),
            p: self.p,
        })
    }
}

impl Add for FpScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Self {
            value: add(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Sub for FpScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Self {
            value: sub(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Mul for FpScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Self {
            value: mul(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Neg for FpScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: neg(self.value, self.p),
            p: self.p,
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `y += c * x` on coordinate vectors.
pub fn axpy(y: &mut [u8], c: u8, x: &[u8], p: u8) {
    if c == 0 {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = add(*yi, mul(c, xi, p), p);
    }
}

pub fn dot(a: &[u8], b: &[u8], p: u8) -> u8 {
    let s: u32 = a.iter().zip(b).map(|(&x, &y)| x as u32 * y as u32).sum();
    (s % p as u32) as u8
}

pub fn scale(v: &mut [u8], c: u8, p: u8) {
    for x in v.iter_mut() {
        *x = mul(*x, c, p);
    }
}

pub fn is_zero_vec(v: &[u8]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn unit_vector(n: usize, i: usize) -> Vec<u8> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u8,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl FpMatrix {
    pub fn zeros(p: u8, rows: usize, cols: usize) -> Self {
        Self {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u8, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of integers, reducing every entry mod `p`.
    pub fn from_rows<R: AsRef<[i64]>>(p: u8, cols: usize, rows: &[R]) -> Result<Self, LinAlgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(LinAlgError::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| x.rem_euclid(p as i64) as u8));
        }
        Ok(Self {
            p,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Rows given as already-reduced coordinate vectors.
    pub fn from_vectors(p: u8, cols: usize, rows: &[Vec<u8>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend_from_slice(r);
        }
        Self {
            p,
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(p: u8, rows: usize, columns: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(p, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u8) {
        self.data[i * self.cols + j] = value % self.p;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        (0..self.cols).map(move |j| self.column(j))
    }

    pub fn to_vectors(&self) -> Vec<Vec<u8>> {
        self.rows().map(<[u8]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<Self, LinAlgError> {
        if self.p != other.p {
            return Err(LinAlgError::ModulusMismatch(self.p, other.p));
        }
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a != 0 {
                    axpy(out_row, a, other.row(k), p);
                }
            }
        }
        Ok(out)
    }

    /// Product with a column vector.
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols, "vector length");
        self.rows().map(|r| dot(r, v, self.p)).collect()
    }

    pub fn add(&self, other: &FpMatrix) -> Result<Self, LinAlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let mut out = self.clone();
        axpy(&mut out.data, 1, &other.data, self.p);
        Ok(out)
    }

    /// `self += c * other`, shapes must agree.
    pub fn add_scaled(&mut self, c: u8, other: &FpMatrix) {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape");
        axpy(&mut self.data, c, &other.data, self.p);
    }

    pub fn scaled(&self, c: u8) -> Self {
        let mut out = self.clone();
        scale(&mut out.data, c % self.p, self.p);
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &FpMatrix) -> Self {
        assert_eq!(self.rows, other.rows, "row count");
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.p, self.rows, cols);
        for i in 0..self.rows {
            out.data[i * cols..i * cols + self.cols].copy_from_slice(self.row(i));
            out.data[i * cols + self.cols..(i + 1) * cols].copy_from_slice(other.row(i));
        }
        out
    }

    /// Vertical concatenation.
    pub fn vconcat(&self, other: &FpMatrix) -> Self {
        assert_eq!(self.cols, other.cols, "column count");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &FpMatrix) -> Self {
        let mut out = Self::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> Self {
        let (rows, _) = rref_vectors(self.p, self.cols, self.to_vectors());
        Self::from_vectors(self.p, self.cols, &rows)
    }

    pub fn rank(&self) -> usize {
        rref_vectors(self.p, self.cols, self.to_vectors()).0.len()
    }

    /// Right kernel `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (rows, pivots) = rref_vectors(self.p, self.cols, self.to_vectors());
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u8; self.cols];
            v[free] = 1;
            for (r, &pc) in rows.iter().zip(&pivots) {
                v[pc] = neg(r[free], p);
            }
            basis.push(v);
        }
        Subspace::span_unchecked(p, self.cols, basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::span_unchecked(self.p, self.rows, self.columns().collect())
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hconcat(&Self::identity(self.p, n));
        let (rows, pivots) = rref_vectors(self.p, 2 * n, aug.to_vectors());
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let inv_rows: Vec<Vec<u8>> = rows.iter().take(n).map(|r| r[n..].to_vec()).collect();
        Some(Self::from_vectors(self.p, n, &inv_rows))
    }

    pub fn commutes_with(&self, other: &FpMatrix) -> bool {
        match (self.mul(other), other.mul(self)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Row reduces `rows` (each of length `cols`), returning the nonzero rows of
/// the reduced echelon form and their pivot columns.
pub fn rref_vectors(p: u8, cols: usize, rows: Vec<Vec<u8>>) -> (Vec<Vec<u8>>, Vec<usize>) {
    if p == 2 {
        rref_gf2(cols, &rows)
    } else {
        rref_generic(p, cols, rows)
    }
}

fn rref_generic(p: u8, cols: usize, mut rows: Vec<Vec<u8>>) -> (Vec<Vec<u8>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let c = inv(rows[rank][col], p);
        scale(&mut rows[rank], c, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = neg(row[col], p);
                axpy(row, factor, &pivot_row, p);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

fn rref_gf2(cols: usize, rows: &[Vec<u8>]) -> (Vec<Vec<u8>>, Vec<usize>) {
    let words = cols.div_ceil(64).max(1);
    let mut packed: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (j, &x) in r.iter().enumerate() {
                if x & 1 == 1 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == packed.len() {
            break;
        }
        let (word, bit) = (col / 64, 1u64 << (col % 64));
        let Some(found) = (rank..packed.len()).find(|&r| packed[r][word] & bit != 0) else {
            continue;
        };
        packed.swap(rank, found);
        let pivot_row = packed[rank].clone();
        for (r, row) in packed.iter_mut().enumerate() {
            if r != rank && row[word] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    packed.truncate(rank);
    let unpacked = packed
        .iter()
        .map(|w| (0..cols).map(|j| ((w[j / 64] >> (j % 64)) & 1) as u8).collect())
        .collect();
    (unpacked, pivots)
}

/// A linear subspace of `GF(p)^ambient_dim`, stored in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: u8,
    ambient_dim: usize,
    basis: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u8, ambient_dim: usize) -> Self {
        Self {
            p,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: u8, ambient_dim: usize) -> Self {
        Self {
            p,
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(p: u8, ambient_dim: usize, vectors: Vec<Vec<u8>>) -> Result<Self, LinAlgError> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(LinAlgError::DimensionMismatch {
                expected: ambient_dim,
                found: bad.len(),
            });
        }
        Ok(Self::span_unchecked(p, ambient_dim, vectors))
    }

    pub(crate) fn span_unchecked(p: u8, ambient_dim: usize, vectors: Vec<Vec<u8>>) -> Self {
        let vectors = vectors
            .into_iter()
            .map(|v| v.into_iter().map(|x| x % p).collect())
            .collect();
        let (basis, pivots) = rref_vectors(p, ambient_dim, vectors);
        Self {
            p,
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn modulus(&self) -> u8 {
        self.p
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    /// Basis vectors (rows of the reduced echelon matrix).
    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> FpMatrix {
        FpMatrix::from_vectors(self.p, self.ambient_dim, &self.basis)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_same(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.p != other.p {
            return Err(LinAlgError::ModulusMismatch(self.p, other.p));
        }
        if self.ambient_dim != other.ambient_dim {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Residue of `v` after clearing every pivot coordinate; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let mut r = v.to_vec();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = r[pc];
            if c != 0 {
                axpy(&mut r, neg(c, self.p), b, self.p);
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[u8]) -> bool {
        v.len() == self.ambient_dim && is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` with respect to [`Subspace::basis`], if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        self.contains_vector(v)
            .then(|| self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Linear combination of the basis with the given coefficients.
    pub fn combine(&self, coeffs: &[u8]) -> Vec<u8> {
        let mut v = vec![0u8; self.ambient_dim];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            axpy(&mut v, *c, b, self.p);
        }
        v
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinAlgError> {
        self.check_same(other)?;
        Ok(other.dim() <= self.dim() && other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_same(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Self::span_unchecked(self.p, self.ambient_dim, vs))
    }

    /// Intersection, computed as the kernel of the stacked annihilator system.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_same(other)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let mut eqs = self.annihilator().basis;
        eqs.extend(other.annihilator().basis);
        Ok(FpMatrix::from_vectors(self.p, self.ambient_dim, &eqs).kernel())
    }

    /// `{h : h·u = 0 for all u}` in the dual coordinates.
    pub fn annihilator(&self) -> Subspace {
        self.basis_matrix().kernel()
    }

    /// Image `m · self`.
    pub fn image_under(&self, m: &FpMatrix) -> Result<Subspace, LinAlgError> {
        if m.ncols() != self.ambient_dim {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: m.ncols(),
            });
        }
        Ok(Self::span_unchecked(
            self.p,
            m.nrows(),
            self.basis.iter().map(|b| m.apply(b)).collect(),
        ))
    }

    /// Whether `m · self ⊆ self` for a square `m`.
    pub fn is_stable_under(&self, m: &FpMatrix) -> bool {
        self.basis.iter().all(|b| self.contains_vector(&m.apply(b)))
    }

    /// Coordinates on the complement of the pivot columns: the canonical
    /// projection onto `ambient / self`. Row `j` picks non-pivot column `j`
    /// after reduction.
    pub fn quotient_projection(&self) -> FpMatrix {
        let free = self.free_columns();
        let mut q = FpMatrix::zeros(self.p, free.len(), self.ambient_dim);
        for i in 0..self.ambient_dim {
            let r = self.reduce(&unit_vector(self.ambient_dim, i));
            for (j, &fc) in free.iter().enumerate() {
                q.set(j, i, r[fc]);
            }
        }
        q
    }

    /// The section of [`Subspace::quotient_projection`] sending quotient
    /// coordinate `j` to the unit vector of the `j`-th non-pivot column.
    pub fn quotient_lift(&self) -> FpMatrix {
        let free = self.free_columns();
        let mut l = FpMatrix::zeros(self.p, self.ambient_dim, free.len());
        for (j, &fc) in free.iter().enumerate() {
            l.set(fc, j, 1);
        }
        l
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// Every vector of the subspace, in a fixed order. Only sensible for tiny spaces.
    pub fn elements(&self) -> Vec<Vec<u8>> {
        let d = self.dim();
        let total = (self.p as usize).pow(d as u32);
        let mut out = Vec::with_capacity(total);
        let mut coeffs = vec![0u8; d];
        for _ in 0..total {
            out.push(self.combine(&coeffs));
            for c in coeffs.iter_mut().rev() {
                *c += 1;
                if *c == self.p {
                    *c = 0;
                } else {
                    break;
                }
            }
        }
        out
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order: by dimension, then by basis entries.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.ambient_dim, self.dim(), &self.basis).cmp(&(
            other.p,
            other.ambient_dim,
            other.dim(),
            &other.basis,
        ))
    }
}

/// `{v : m · v ∈ target}`.
pub fn preimage(m: &FpMatrix, target: &Subspace) -> Result<Subspace, LinAlgError> {
    if m.nrows() != target.ambient_dim() {
        return Err(LinAlgError::DimensionMismatch {
            expected: target.ambient_dim(),
            found: m.nrows(),
        });
    }
    if target.is_full() {
        return Ok(Subspace::full(m.modulus(), m.ncols()));
    }
    let eqs = target.annihilator().basis_matrix();
    Ok(eqs.mul(m)?.kernel())
}

/// Right kernel of `m`.
pub fn kernel(m: &FpMatrix) -> Subspace {
    m.kernel()
}

pub fn rref(m: &FpMatrix) -> FpMatrix {
    m.rref()
}

pub fn span(p: u8, ambient_dim: usize, vectors: Vec<Vec<u8>>) -> Result<Subspace, LinAlgError> {
    Subspace::span(p, ambient_dim, vectors)
}
