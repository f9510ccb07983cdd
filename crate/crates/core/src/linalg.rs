//! Exact sparse linear algebra.
//!
//! Vectors are sorted `(index, value)` lists that never store zeros. Matrices
//! are stored by column, so column `j` is the image of the basis vector `e_j`.
//! Every tensor index is flattened row-major: `i ⊗ j ↦ i * dim_j + j`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec { dim, entries: Vec::new() }
    }

    pub fn basis(field: FieldSpec, dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        SparseVec { dim, entries: vec![(i, field.one())] }
    }

    /// Sums arbitrary (possibly repeated, unordered) terms.
    pub fn from_terms(dim: usize, mut terms: Vec<(usize, Scalar)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { dim, entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            dim: values.len(),
            entries: values.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.entries[k].1)
    }

    /// Coefficient at `i`, materializing zero in `field`.
    pub fn coeff(&self, field: FieldSpec, i: usize) -> Scalar {
        self.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn to_dense(&self, field: FieldSpec) -> Vec<Scalar> {
        let mut out = vec![field.zero(); self.dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero(self.dim);
        }
        SparseVec { dim: self.dim, entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    /// `self + c * other`, by merging the two sorted lists.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { dim: self.dim, entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(&c.field().one(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(&-c.field().one(), other),
        }
    }

    /// Row-major tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &SparseVec) -> SparseVec {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                entries.push((i * other.dim + j, x * y));
            }
        }
        SparseVec { dim: self.dim * other.dim, entries }
    }

    /// Dot product with a functional given by its values on the basis.
    pub fn pair(&self, field: FieldSpec, functional: &SparseVec) -> Scalar {
        let mut acc = field.zero();
        for (i, x) in &self.entries {
            if let Some(y) = functional.get(*i) {
                acc = &acc + &(x * y);
            }
        }
        acc
    }

    /// Index of the first coordinate where the two vectors differ.
    pub fn first_difference(&self, other: &SparseVec) -> Option<usize> {
        let mut a = self.entries.iter();
        let mut b = other.entries.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return None,
                (Some((i, _)), None) | (None, Some((i, _))) => return Some(*i),
                (Some((i, x)), Some((j, y))) => {
                    if i != j {
                        return Some(*i.min(j));
                    }
                    if x != y {
                        return Some(*i);
                    }
                }
            }
        }
    }
}

/// Accumulates scaled vectors and sums them once at the end.
pub struct VecBuilder {
    dim: usize,
    terms: Vec<(usize, Scalar)>,
}

impl VecBuilder {
    pub fn new(dim: usize) -> Self {
        VecBuilder { dim, terms: Vec::new() }
    }

    pub fn push(&mut self, i: usize, c: Scalar) {
        if !c.is_zero() {
            self.terms.push((i, c));
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &SparseVec) {
        debug_assert_eq!(v.dim, self.dim);
        if c.is_zero() {
            return;
        }
        for (i, x) in &v.entries {
            self.terms.push((*i, x * c));
        }
    }

    pub fn add(&mut self, v: &SparseVec) {
        debug_assert_eq!(v.dim, self.dim);
        self.terms.extend(v.entries.iter().cloned());
    }

    /// Adds `c * (u ⊗ v)`.
    pub fn add_tensor(&mut self, c: &Scalar, u: &SparseVec, v: &SparseVec) {
        debug_assert_eq!(u.dim * v.dim, self.dim);
        for (i, x) in &u.entries {
            let cx = c * x;
            for (j, y) in &v.entries {
                self.terms.push((i * v.dim + j, &cx * y));
            }
        }
    }

    /// Adds `c * (u ⊗ v ⊗ w)`.
    pub fn add_tensor3(&mut self, c: &Scalar, u: &SparseVec, v: &SparseVec, w: &SparseVec) {
        debug_assert_eq!(u.dim * v.dim * w.dim, self.dim);
        for (i, x) in &u.entries {
            let cx = c * x;
            for (j, y) in &v.entries {
                let cxy = &cx * y;
                let base = (i * v.dim + j) * w.dim;
                for (k, z) in &w.entries {
                    self.terms.push((base + k, &cxy * z));
                }
            }
        }
    }

    pub fn build(self) -> SparseVec {
        SparseVec::from_terms(self.dim, self.terms)
    }
}

/// A linear map, stored by columns: column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl Matrix {
    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        for c in &cols {
            assert_eq!(c.dim(), rows, "column length must equal the row count");
        }
        Matrix { rows, cols }
    }

    pub fn from_fn(rows: usize, ncols: usize, f: impl FnMut(usize) -> SparseVec) -> Self {
        Matrix::from_columns(rows, (0..ncols).map(f).collect())
    }

    pub fn zero(rows: usize, ncols: usize) -> Self {
        Matrix { rows, cols: vec![SparseVec::zero(rows); ncols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Matrix::from_fn(n, n, |j| SparseVec::basis(field, n, j))
    }

    /// Column `j` is `e_{perm[j]}`.
    pub fn permutation(field: FieldSpec, rows: usize, perm: &[usize]) -> Self {
        Matrix::from_fn(rows, perm.len(), |j| SparseVec::basis(field, rows, perm[j]))
    }

    /// Builds from `(row, col, value)` triples.
    pub fn from_triples(rows: usize, ncols: usize, triples: Vec<(usize, usize, Scalar)>) -> Self {
        let mut per_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
        for (i, j, c) in triples {
            per_col[j].push((i, c));
        }
        Matrix::from_columns(rows, per_col.into_iter().map(|t| SparseVec::from_terms(rows, t)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        self.cols[j].get(i)
    }

    pub fn set_column(&mut self, j: usize, v: SparseVec) {
        assert_eq!(v.dim(), self.rows);
        self.cols[j] = v;
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.ncols(), "vector does not match matrix domain");
        let mut b = VecBuilder::new(self.rows);
        for (j, c) in v.entries() {
            b.add_scaled(c, &self.cols[*j]);
        }
        b.build()
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.ncols(), rhs.nrows(), "incompatible matrices for composition");
        Matrix::from_fn(self.rows, rhs.ncols(), |j| self.apply(rhs.column(j)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut per_row: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.entries() {
                per_row[*i].push((j, c.clone()));
            }
        }
        let n = self.ncols();
        Matrix::from_columns(n, per_row.into_iter().map(|entries| SparseVec { dim: n, entries }).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.ncols()
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, c)| c.nnz() == 1 && c.entries()[0].0 == j && c.entries()[0].1.is_one())
    }

    /// `(row, col, value)` triples in column-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.cols.iter().enumerate().flat_map(|(j, c)| c.entries().iter().map(move |(i, x)| (*i, j, x)))
    }

    /// First `(row, col)` where two equally-shaped matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.ncols() != other.ncols() {
            return Some((usize::MAX, usize::MAX));
        }
        self.cols.iter().zip(&other.cols).enumerate().find_map(|(j, (a, b))| a.first_difference(b).map(|i| (i, j)))
    }
}

/// Kronecker product `f ⊗ g` with the row-major index convention.
pub fn tensor_of_maps(f: &Matrix, g: &Matrix) -> Matrix {
    let (m, n) = (g.nrows(), g.ncols());
    Matrix::from_fn(f.nrows() * m, f.ncols() * n, |idx| f.column(idx / n).tensor(g.column(idx % n)))
}

/// Incremental row echelon form. Each stored row has a leading 1 at its pivot.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Eliminates pivot columns from `v`, left to right, starting at position `start`.
    fn reduce_from(&self, mut v: SparseVec, mut start: usize) -> SparseVec {
        loop {
            let hit = v.entries()[start.min(v.nnz())..]
                .iter()
                .position(|(col, _)| self.rows.contains_key(col))
                .map(|p| p + start);
            let Some(k) = hit else { return v };
            let (col, c) = v.entries()[k].clone();
            v = v.add_scaled(&-c, &self.rows[&col]);
            // entries before k are untouched, and position k no longer holds `col`
            start = k;
        }
    }

    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_from(v, 0)
    }

    /// Inserts `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        assert_eq!(v.dim(), self.width, "row width mismatch");
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.entries().first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        self.rows.insert(pivot, r.scaled(&inv));
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Back-substitutes into reduced row echelon form.
    pub fn into_rref(self) -> Rref {
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (pivot, row) in self.rows.into_iter().rev() {
            let probe = Echelon { width: self.width, rows: done };
            let reduced = probe.reduce_from(row, 1);
            done = probe.rows;
            done.insert(pivot, reduced);
        }
        let (pivots, rows) = done.into_iter().unzip();
        Rref { width: self.width, pivots, rows }
    }
}

/// Reduced row echelon form; canonical for the row span (leftmost pivots).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub width: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<SparseVec>,
}

impl Rref {
    pub fn of_rows(width: usize, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut e = Echelon::new(width);
        for r in rows {
            e.insert(r);
        }
        e.into_rref()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width).filter(|&c| !is_pivot[c]).collect()
    }

    /// Basis of `{x : row · x = 0 for every row}`, one vector per free column.
    pub fn null_space(&self, field: FieldSpec) -> Vec<SparseVec> {
        let free = self.free_columns();
        let mut terms: BTreeMap<usize, Vec<(usize, Scalar)>> =
            free.iter().map(|&f| (f, vec![(f, field.one())])).collect();
        for (row, &pivot) in self.rows.iter().zip(&self.pivots) {
            for (col, c) in row.entries() {
                if let Some(t) = terms.get_mut(col) {
                    t.push((pivot, -c));
                }
            }
        }
        terms.into_values().map(|t| SparseVec::from_terms(self.width, t)).collect()
    }
}

/// Rank and kernel basis of `m` (as a map on column space).
pub fn rref_kernel(field: FieldSpec, m: &Matrix) -> (usize, Vec<SparseVec>) {
    let rows = m.transpose();
    let rref = Rref::of_rows(m.ncols(), rows.columns().iter().cloned());
    (rref.rank(), rref.null_space(field))
}

pub fn rank(m: &Matrix) -> usize {
    let rows = m.transpose();
    let mut e = Echelon::new(m.ncols());
    for r in rows.columns() {
        e.insert(r.clone());
    }
    e.rank()
}

pub fn matrix_inverse(field: FieldSpec, m: &Matrix) -> Result<Matrix> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::NotSquare { rows: n, cols: m.ncols() });
    }
    let rows = m.transpose();
    let mut e = Echelon::new(2 * n);
    for (i, r) in rows.columns().iter().enumerate() {
        let mut terms: Vec<(usize, Scalar)> = r.entries().to_vec();
        terms.push((n + i, field.one()));
        e.insert(SparseVec::from_terms(2 * n, terms));
    }
    let rref = e.into_rref();
    if rref.pivots.len() < n || rref.pivots[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    let triples = rref
        .rows
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.entries().iter().filter(|(c, _)| *c >= n).map(move |(c, x)| (i, c - n, x.clone())))
        .collect();
    Ok(Matrix::from_triples(n, n, triples))
}

/// `V / span(relations)` with a chosen projection and section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient_dim: usize,
    relations: Rref,
    proj: Matrix,
    section: Matrix,
}

impl QuotientSpace {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn quot_dim(&self) -> usize {
        self.proj.nrows()
    }

    /// Canonical (reduced echelon) basis of the relation span.
    pub fn relations(&self) -> &[SparseVec] {
        &self.relations.rows
    }

    pub fn proj(&self) -> &Matrix {
        &self.proj
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        self.proj.apply(v)
    }

    /// Whether `v` lies in the relation span.
    pub fn kills(&self, v: &SparseVec) -> bool {
        self.project(v).is_zero()
    }
}

pub fn build_quotient(
    field: FieldSpec,
    ambient_dim: usize,
    relations: impl IntoIterator<Item = SparseVec>,
) -> QuotientSpace {
    let rref = Rref::of_rows(ambient_dim, relations);
    let free = rref.free_columns();
    let mut qindex = vec![usize::MAX; ambient_dim];
    for (q, &f) in free.iter().enumerate() {
        qindex[f] = q;
    }
    let q = free.len();
    let mut proj_cols: Vec<SparseVec> = (0..ambient_dim)
        .map(|j| if qindex[j] != usize::MAX { SparseVec::basis(field, q, qindex[j]) } else { SparseVec::zero(q) })
        .collect();
    for (row, &pivot) in rref.rows.iter().zip(&rref.pivots) {
        // e_pivot ≡ -Σ_{free f} row[f] e_f
        let terms = row.entries().iter().skip(1).map(|(f, c)| (qindex[*f], -c)).collect();
        proj_cols[pivot] = SparseVec::from_terms(q, terms);
    }
    let proj = Matrix::from_columns(q, proj_cols);
    let section = Matrix::from_fn(ambient_dim, q, |k| SparseVec::basis(field, ambient_dim, free[k]));
    QuotientSpace { ambient_dim, relations: rref, proj, section }
}

/// A bilinear map `V_0 × V_1 → V_2`, stored as one output vector per basis pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    dims: [usize; 3],
    slices: Vec<SparseVec>,
}

impl Tensor3 {
    pub fn from_fn(dims: [usize; 3], mut f: impl FnMut(usize, usize) -> SparseVec) -> Self {
        let mut slices = Vec::with_capacity(dims[0] * dims[1]);
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                let v = f(i, j);
                assert_eq!(v.dim(), dims[2], "tensor slice has wrong length");
                slices.push(v);
            }
        }
        Tensor3 { dims, slices }
    }

    /// Builds from `(i, j, k, value)` quadruples; repeated indices are summed.
    pub fn from_quadruples(dims: [usize; 3], quads: Vec<(usize, usize, usize, Scalar)>) -> Result<Self> {
        let mut per: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); dims[0] * dims[1]];
        for (i, j, k, c) in quads {
            if i >= dims[0] || j >= dims[1] || k >= dims[2] {
                return Err(Error::DimensionMismatch(format!(
                    "index ({i}, {j}, {k}) outside tensor of shape {dims:?}"
                )));
            }
            per[i * dims[1] + j].push((k, c));
        }
        Ok(Tensor3 { dims, slices: per.into_iter().map(|t| SparseVec::from_terms(dims[2], t)).collect() })
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn slice(&self, i: usize, j: usize) -> &SparseVec {
        &self.slices[i * self.dims[1] + j]
    }

    pub fn set_slice(&mut self, i: usize, j: usize, v: SparseVec) {
        assert_eq!(v.dim(), self.dims[2]);
        self.slices[i * self.dims[1] + j] = v;
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Option<&Scalar> {
        self.slice(i, j).get(k)
    }

    pub fn bilinear(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut b = VecBuilder::new(self.dims[2]);
        for (i, a) in x.entries() {
            for (j, c) in y.entries() {
                b.add_scaled(&(a * c), self.slice(*i, *j));
            }
        }
        b.build()
    }

    /// `T(e_i, y)`.
    pub fn left_basis(&self, i: usize, y: &SparseVec) -> SparseVec {
        let mut b = VecBuilder::new(self.dims[2]);
        for (j, c) in y.entries() {
            b.add_scaled(c, self.slice(i, *j));
        }
        b.build()
    }

    /// `T(x, e_j)`.
    pub fn right_basis(&self, x: &SparseVec, j: usize) -> SparseVec {
        let mut b = VecBuilder::new(self.dims[2]);
        for (i, c) in x.entries() {
            b.add_scaled(c, self.slice(*i, j));
        }
        b.build()
    }

    pub fn quadruples(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let n1 = self.dims[1];
        self.slices
            .iter()
            .enumerate()
            .flat_map(move |(idx, v)| v.entries().iter().map(move |(k, c)| (idx / n1, idx % n1, *k, c)))
    }

    pub fn nnz(&self) -> usize {
        self.slices.iter().map(SparseVec::nnz).sum()
    }

    /// First `(i, j, k)` where two equally-shaped tensors differ.
    pub fn first_difference(&self, other: &Tensor3) -> Option<(usize, usize, usize)> {
        if self.dims != other.dims {
            return Some((usize::MAX, usize::MAX, usize::MAX));
        }
        let n1 = self.dims[1];
        self.slices
            .iter()
            .zip(&other.slices)
            .enumerate()
            .find_map(|(idx, (a, b))| a.first_difference(b).map(|k| (idx / n1, idx % n1, k)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn mat(rows: &[&[i64]]) -> Matrix {
        let nrows = rows.len();
        let ncols = rows[0].len();
        let mut t = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                if x != 0 {
                    t.push((i, j, Q.from_i64(x)));
                }
            }
        }
        Matrix::from_triples(nrows, ncols, t)
    }

    fn vec_of(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| Q.from_i64(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rref_kernel_identity_and_zero() {
        let (r, k) = rref_kernel(Q, &Matrix::identity(Q, 3));
        assert_eq!((r, k.len()), (3, 0));
        let (r, k) = rref_kernel(Q, &Matrix::zero(2, 3));
        assert_eq!((r, k.len()), (0, 3));
    }

    #[test]
    fn rref_kernel_rank_one() {
        // hand row reduction: [[1,2],[2,4]] -> [[1,2],[0,0]], kernel spanned by (-2, 1)
        let (r, k) = rref_kernel(Q, &mat(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec_of(&[-2, 1])]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = mat(&[&[1, 2, 0, -1], &[0, 1, 1, 1], &[1, 3, 1, 0]]);
        let (r, k) = rref_kernel(Q, &m);
        assert_eq!(r + k.len(), 4);
        for v in &k {
            assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn quotient_examples() {
        let q = build_quotient(Q, 4, Vec::new());
        assert_eq!(q.quot_dim(), 4);
        assert!(q.proj().is_identity() && q.section().is_identity());

        let q = build_quotient(Q, 2, vec![vec_of(&[1, -1])]);
        assert_eq!(q.quot_dim(), 1);

        // three vectors spanning a rank-2 subspace; rank oracle via rref_kernel
        let rels = vec![vec_of(&[1, 1, 0, 0]), vec_of(&[0, 1, 1, 0]), vec_of(&[1, 2, 1, 0])];
        let m = Matrix::from_columns(4, rels.clone()).transpose();
        let (rank, _) = rref_kernel(Q, &m);
        let q = build_quotient(Q, 4, rels.clone());
        assert_eq!(q.quot_dim(), 4 - rank);
        assert_eq!(q.quot_dim(), 2);
        assert!(q.proj().compose(q.section()).is_identity());
        for r in &rels {
            assert!(q.kills(r));
        }
        assert!(!q.kills(&vec_of(&[0, 0, 0, 1])));
    }

    #[test]
    fn kronecker_identities() {
        let id6 = tensor_of_maps(&Matrix::identity(Q, 2), &Matrix::identity(Q, 3));
        assert_eq!(id6, Matrix::identity(Q, 6));
        let f = mat(&[&[1, 2], &[0, 3], &[4, 0]]);
        let g = mat(&[&[0, 1, 1], &[5, 0, 2]]);
        let fg = tensor_of_maps(&f, &g);
        for i in 0..2 {
            for j in 0..3 {
                let ei = SparseVec::basis(Q, 2, i);
                let ej = SparseVec::basis(Q, 3, j);
                assert_eq!(fg.apply(&ei.tensor(&ej)), f.apply(&ei).tensor(&g.apply(&ej)));
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(matrix_inverse(Q, &Matrix::identity(Q, 3)).unwrap(), Matrix::identity(Q, 3));
        let swap = mat(&[&[0, 1], &[1, 0]]);
        assert_eq!(matrix_inverse(Q, &swap).unwrap(), swap);
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = matrix_inverse(Q, &m).unwrap();
        assert!(m.compose(&inv).is_identity() && inv.compose(&m).is_identity());
        assert!(matches!(matrix_inverse(Q, &mat(&[&[1, 2], &[2, 4]])), Err(Error::SingularMatrix)));
        assert!(matches!(matrix_inverse(Q, &Matrix::zero(2, 3)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn rref_is_deterministic_and_canonical() {
        let a = Rref::of_rows(3, vec![vec_of(&[1, 2, 3]), vec_of(&[2, 4, 7])]);
        let b = Rref::of_rows(3, vec![vec_of(&[0, 0, 1]), vec_of(&[3, 6, 9])]);
        assert_eq!(a, b);
        assert_eq!(a.pivots, vec![0, 2]);
    }
}
