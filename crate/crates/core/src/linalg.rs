//! Exact linear algebra over the rationals.
//!
//! Dense matrices with row reduction, kernels, characteristic polynomials and a
//! [`Subspace`] type kept in reduced row-echelon form so that equality of spans is
//! plain structural equality.
//!
//! Every invariant computed by this crate (dimensions, ranks, lengths of derived
//! series, Engel flags) is a rank. Ranks do not change under field extension, so
//! answers obtained over the rationals are the answers over the algebraic closure
//! whenever the input data is rational.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `n` or `n/d`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `dst += factor * src`
pub fn axpy(dst: &mut [Rational], factor: &Rational, src: &[Rational]) {
    if factor.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += factor * s;
        }
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// Reduces `rows` in place to reduced row-echelon form and returns the pivot columns.
/// Zero rows end up at the bottom.
fn rref_in_place(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().expect("pivot row");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let f = -row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x += &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Dense matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Convenience constructor from small integers. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        Matrix::from_rows(cols, rows).expect("ragged integer matrix")
    }

    /// Builds a matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
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

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    fn to_row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = &self[(r, c)];
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scaled(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Flattened row-major entries.
    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    /// `AB - BA` for square matrices of equal size.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Reduced row-echelon form together with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_row_vecs();
        let pivots = rref_in_place(&mut rows, self.cols);
        let data = rows.into_iter().flatten().collect();
        (
            Matrix {
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel vectors normalized against the free columns: the vector attached to
    /// free column `f` has entry 1 at `f` and 0 at every other free column.
    /// Returns the vectors and the free columns in increasing order.
    pub fn kernel_vectors(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = unit_vector(self.cols, f);
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect();
        (vectors, free)
    }

    /// Null space `{v : Mv = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let (vectors, _) = self.kernel_vectors();
        Subspace::span_unchecked(self.cols, vectors)
    }

    /// Solves `Mx = b`, returning one solution if the system is consistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let pivots = rref_in_place(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = rows[i][self.cols].clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend(unit_vector(n, r));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let data = rows.into_iter().flat_map(|row| row[n..].to_vec()).collect();
        Some(Matrix { rows: n, cols: n, data })
    }

    /// True if some power of this square matrix vanishes.
    pub fn is_nilpotent(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut p = self.clone();
        for _ in 0..self.rows {
            if p.is_zero() {
                return true;
            }
            p = p.mul(self).expect("square");
        }
        p.is_zero()
    }

    /// Characteristic polynomial `det(t·1 - M)`, coefficients from degree 0 upwards.
    ///
    /// Uses a similarity reduction to upper Hessenberg form followed by the
    /// standard three-term recurrence; exact and cubic in the size.
    pub fn charpoly(&self) -> Result<Vec<Rational>> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut h = self.to_row_vecs();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let piv = h[m][m - 1].clone();
            for j in m + 1..n {
                if h[j][m - 1].is_zero() {
                    continue;
                }
                let u = &h[j][m - 1] / &piv;
                let row_m = h[m].clone();
                for (x, y) in h[j].iter_mut().zip(&row_m) {
                    if !y.is_zero() {
                        *x -= &u * y;
                    }
                }
                for row in h.iter_mut() {
                    if !row[j].is_zero() {
                        let add = &u * &row[j];
                        row[m] += add;
                    }
                }
            }
        }
        // p[k] is the characteristic polynomial of the leading k x k block.
        let mut p: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
        for m in 1..=n {
            let prev = &p[m - 1];
            let mut next = vec![Rational::zero(); m + 1];
            for (k, c) in prev.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= &h[m - 1][m - 1] * c;
            }
            let mut t = Rational::one();
            for i in (1..m).rev() {
                t *= &h[i][i - 1];
                if t.is_zero() {
                    break;
                }
                let f = &h[i - 1][m - 1] * &t;
                if f.is_zero() {
                    continue;
                }
                for (k, c) in p[i - 1].iter().enumerate() {
                    next[k] -= &f * c;
                }
            }
            p.push(next);
        }
        Ok(p.pop().expect("nonempty"))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

/// A linear subspace of `Q^n`, stored as the nonzero rows of its reduced
/// row-echelon basis. Two subspaces are equal iff their stored bases are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in Q^{}, pivots {:?})",
            self.dim(),
            self.ambient_dim,
            self.pivots
        )
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given vectors; every vector must have length `ambient_dim`.
    pub fn span(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        Ok(Self::span_unchecked(ambient_dim, vectors))
    }

    fn span_unchecked(ambient_dim: usize, mut vectors: Vec<Vec<Rational>>) -> Self {
        let pivots = rref_in_place(&mut vectors, ambient_dim);
        vectors.truncate(pivots.len());
        Subspace {
            ambient_dim,
            basis: vectors,
            pivots,
        }
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

    /// The echelon basis.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let f = -r[p].clone();
                axpy(&mut r, &f, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span, keeping the basis fully reduced. Returns whether
    /// the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let mut r = self.reduce(v);
        let Some(q) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[q].recip();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.basis.iter_mut() {
            if !row[q].is_zero() {
                let f = -row[q].clone();
                axpy(row, &f, &r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.basis.insert(at, r);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for v in &other.basis {
            out.insert(v);
        }
        Ok(out)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient_dim);
        }
        let m = Matrix::from_rows(self.ambient_dim, self.basis.clone()).expect("consistent rows");
        m.kernel_basis()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|v| other.contains(v))
    }

    /// A complement of `self` inside `sup` (which must contain `self`), built by
    /// greedily taking echelon vectors of `sup`.
    pub fn complement_in(&self, sup: &Subspace) -> Result<Subspace> {
        self.complement_in_with_priority(sup, &[])
    }

    /// Like [`Subspace::complement_in`], but the candidate vectors are the echelon
    /// basis of `sup` computed with the columns in `priority` moved to the front, so
    /// that the complement prefers vectors supported on those coordinates.
    pub fn complement_in_with_priority(&self, sup: &Subspace, priority: &[usize]) -> Result<Subspace> {
        self.check_ambient(sup)?;
        if !self.is_subspace_of(sup) {
            return Err(Error::Invariant(
                "complement requested inside a space that does not contain the subspace".into(),
            ));
        }
        let n = self.ambient_dim;
        let mut order: Vec<usize> = priority.iter().copied().filter(|&c| c < n).collect();
        let mut seen = vec![false; n];
        order.retain(|&c| !std::mem::replace(&mut seen[c], true));
        order.extend((0..n).filter(|&c| !seen[c]));
        let permuted: Vec<Vec<Rational>> = sup
            .basis
            .iter()
            .map(|v| order.iter().map(|&c| v[c].clone()).collect())
            .collect();
        let candidates = Subspace::span_unchecked(n, permuted);
        let mut acc = self.clone();
        let mut chosen = Subspace::zero(n);
        for pv in candidates.basis {
            let mut v = vec![Rational::zero(); n];
            for (i, &c) in order.iter().enumerate() {
                v[c] = pv[i].clone();
            }
            if acc.insert(&v) {
                chosen.insert(&v);
            }
        }
        Ok(chosen)
    }
}

/// Incremental semi-echelon basis for sparse vectors indexed by `usize`.
///
/// Used where spans of many sparse vectors in a large ambient space are needed
/// and only the rank matters.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, BTreeMap<usize, Rational>>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the (possibly zero) remainder.
    pub fn reduce(&self, mut v: BTreeMap<usize, Rational>) -> BTreeMap<usize, Rational> {
        v.retain(|_, c| !c.is_zero());
        let mut out = BTreeMap::new();
        while let Some((idx, c)) = v.pop_first() {
            match self.rows.get(&idx) {
                Some(row) => {
                    // row is monic at idx
                    for (j, x) in row.iter().skip(1) {
                        let e = v.entry(*j).or_insert_with(Rational::zero);
                        *e -= &c * x;
                        if e.is_zero() {
                            v.remove(j);
                        }
                    }
                }
                None => {
                    out.insert(idx, c);
                }
            }
        }
        out
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: BTreeMap<usize, Rational>) -> bool {
        let r = self.reduce(v);
        let Some((&lead, c)) = r.iter().next() else {
            return false;
        };
        let inv = c.recip();
        let row = r.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        self.rows.insert(lead, row);
        true
    }

    pub fn contains(&self, v: BTreeMap<usize, Rational>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Stored rows as a dense `rank × cols` matrix with the same row space.
    pub fn to_matrix(&self, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.rows.len(), cols);
        for (r, row) in self.rows.values().enumerate() {
            for (c, x) in row {
                m[(r, *c)] = x.clone();
            }
        }
        m
    }
}
