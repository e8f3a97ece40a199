//! Dense exact linear algebra over [`Cyclotomic`] scalars.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exactnum::{Cyclotomic, Rational};
use crate::{Error, Result};

pub type Vector = Vec<Cyclotomic>;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cyclotomic>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Cyclotomic>,
}

impl TryFrom<MatrixRepr> for Matrix {
    type Error = Error;
    fn try_from(r: MatrixRepr) -> Result<Self> {
        Matrix::from_vec(r.rows, r.cols, r.entries)
    }
}

impl From<Matrix> for MatrixRepr {
    fn from(m: Matrix) -> Self {
        MatrixRepr { rows: m.rows, cols: m.cols, entries: m.entries }
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Cyclotomic::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Cyclotomic::one())
    }

    pub fn scalar(n: usize, x: Cyclotomic) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn diag(d: Vec<Cyclotomic>) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.into_iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Cyclotomic>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::shape(format!("{rows}x{cols} matrix given {} entries", entries.len())));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::shape("ragged rows"));
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Cyclotomic::from_int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    /// Column-stacked matrix from column vectors of equal length.
    pub fn from_columns(n: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n {
                m[(i, j)] = c[i].clone();
            }
        }
        m
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

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Cyclotomic> {
        self.entries
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Cyclotomic::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() }))
    }

    /// The scalar `x` if this is `x·I`.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let x = self[(0, 0)].clone();
        let ok = (0..self.rows)
            .all(|i| (0..self.cols).all(|j| if i == j { self[(i, j)] == x } else { self[(i, j)].is_zero() }));
        ok.then_some(x)
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.rows.min(self.cols)).fold(Cyclotomic::zero(), |acc, i| &acc + &self[(i, i)])
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Entrywise complex conjugation followed by transposition.
    pub fn conj_transpose(&self) -> Self {
        let mut t = self.transpose();
        for x in t.entries.iter_mut() {
            *x = x.conj();
        }
        t
    }

    pub fn scale(&self, x: &Cyclotomic) -> Self {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| e * x).collect() }
    }

    pub fn map(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// `[self, other] = self·other − other·self`.
    pub fn bracket(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vector {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Cyclotomic::zero(), |acc, (a, b)| acc.add_mul(a, b)))
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::shape("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Cyclotomic::one();
        }
        let (r, piv) = rref(&aug);
        if piv.len() < n || piv[n - 1] >= n {
            return Err(Error::Domain("singular matrix".into()));
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Cyclotomic {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Cyclotomic::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return Cyclotomic::zero();
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a[(c, c)].clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = &a[(r, c)] * &inv;
                for k in c..n {
                    let v = &a[(r, k)] - &(&f * &a[(c, k)]);
                    a[(r, k)] = v;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Least common multiple of the entry conductors.
    pub fn conductor(&self) -> u32 {
        self.entries.iter().fold(1, |acc, x| crate::exactnum::merge_conductors(acc, x.conductor()).unwrap_or(acc))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Cyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclotomic {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclotomic {
        &mut self.entries[i * self.cols + j]
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.entries[k * o.cols + j];
                    if !b.is_zero() {
                        let slot = &mut out.entries[i * o.cols + j];
                        *slot = slot.add_mul(a, b);
                    }
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix difference shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|x| -x)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form and the pivot column of each nonzero row.
pub fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let best = (r..m.rows).filter(|&i| !m[(i, c)].is_zero()).min_by_key(|&i| m[(i, c)].size());
        let Some(p) = best else { continue };
        m.swap_rows(p, r);
        let inv = m[(r, c)].inv().expect("nonzero pivot");
        for j in c..m.cols {
            let v = &m[(r, j)] * &inv;
            m[(r, j)] = v;
        }
        for i in 0..m.rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    let v = m[(i, j)].add_mul(&-&f, &m[(r, j)]);
                    m[(i, j)] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Basis of `{x : A·x = 0}`.
pub fn nullspace(a: &Matrix) -> Vec<Vector> {
    let mut span = SpanBasis::new(a.cols);
    for i in 0..a.rows {
        span.insert(a.row(i).to_vec()).expect("row length equals column count");
    }
    span.kernel()
}

/// Solves `A·x = b`, returning one solution if any exists.
pub fn solve(a: &Matrix, b: &[Cyclotomic]) -> Option<Vector> {
    let n = a.cols;
    let mut aug = Matrix::zeros(a.rows, n + 1);
    for i in 0..a.rows {
        for j in 0..n {
            aug[(i, j)] = a[(i, j)].clone();
        }
        aug[(i, n)] = b[i].clone();
    }
    let (r, piv) = rref(&aug);
    if piv.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Cyclotomic::zero(); n];
    for (i, &c) in piv.iter().enumerate() {
        x[c] = r[(i, n)].clone();
    }
    Some(x)
}

/// An echelonized basis of a subspace of an `ambient`-dimensional space.
///
/// Every stored vector has a leading 1 in its pivot column and zeros in the
/// pivot columns of all other vectors, so membership is a single reduction
/// pass and the pivot entries of a member are its coordinates.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    ambient: usize,
    vectors: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn new(ambient: usize) -> Self {
        SpanBasis { ambient, vectors: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_full(&self) -> bool {
        self.vectors.len() == self.ambient
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection onto the span along the pivot columns.
    pub fn reduce(&self, v: &[Cyclotomic]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.vectors.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = -&r[p];
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x = x.add_mul(&f, y);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        self.reduce(v).iter().all(Cyclotomic::is_zero)
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Cyclotomic]) -> Option<Vector> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> Result<bool> {
        Ok(self.insert_residue(v)?.is_some())
    }

    /// Like [`insert`](Self::insert) but hands back the normalized new basis
    /// vector.
    pub fn insert_residue(&mut self, v: Vector) -> Result<Option<&Vector>> {
        if v.len() != self.ambient {
            return Err(Error::shape(format!("vector of length {} in ambient {}", v.len(), self.ambient)));
        }
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(None);
        };
        let inv = r[p].inv()?;
        if !inv.is_one() {
            for x in r.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        for b in self.vectors.iter_mut() {
            if b[p].is_zero() {
                continue;
            }
            let f = -&b[p];
            for (x, y) in b.iter_mut().zip(&r).skip(p) {
                if !y.is_zero() {
                    *x = x.add_mul(&f, y);
                }
            }
        }
        self.vectors.push(r);
        self.pivots.push(p);
        Ok(self.vectors.last())
    }

    /// Basis of the solutions of `b·x = 0` for all stored `b`.
    pub fn kernel(&self) -> Vec<Vector> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Cyclotomic::zero(); self.ambient];
                x[f] = Cyclotomic::one();
                for (b, &p) in self.vectors.iter().zip(&self.pivots) {
                    x[p] = -&b[f];
                }
                x
            })
            .collect()
    }
}

/// A span that remembers how each basis vector combines the accepted inputs.
#[derive(Clone, Debug)]
pub struct TrackedSpan {
    span: SpanBasis,
    combos: Vec<Vector>,
    accepted: usize,
}

impl TrackedSpan {
    pub fn new(ambient: usize) -> Self {
        TrackedSpan { span: SpanBasis::new(ambient), combos: Vec::new(), accepted: 0 }
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn basis(&self) -> &SpanBasis {
        &self.span
    }

    /// Inserts `v`; on success returns its index among accepted inputs.
    pub fn insert(&mut self, v: Vector) -> Result<Option<usize>> {
        if v.len() != self.span.ambient {
            return Err(Error::shape("tracked vector length"));
        }
        let mut combo = vec![Cyclotomic::zero(); self.accepted + 1];
        combo[self.accepted] = Cyclotomic::one();
        let mut r = v;
        for (i, (b, &p)) in self.span.vectors.iter().zip(&self.span.pivots).enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let f = -&r[p];
            for (x, y) in r.iter_mut().zip(b) {
                *x = x.add_mul(&f, y);
            }
            for (x, y) in combo.iter_mut().zip(&self.combos[i]) {
                *x = x.add_mul(&f, y);
            }
        }
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(None);
        };
        let inv = r[p].inv()?;
        for x in r.iter_mut() {
            *x = &*x * &inv;
        }
        for x in combo.iter_mut() {
            *x = &*x * &inv;
        }
        for (b, c) in self.span.vectors.iter_mut().zip(self.combos.iter_mut()) {
            if b[p].is_zero() {
                continue;
            }
            let f = -&b[p];
            for (x, y) in b.iter_mut().zip(&r) {
                *x = x.add_mul(&f, y);
            }
            c.resize(self.accepted + 1, Cyclotomic::zero());
            for (x, y) in c.iter_mut().zip(&combo) {
                *x = x.add_mul(&f, y);
            }
        }
        self.span.vectors.push(r);
        self.span.pivots.push(p);
        self.combos.push(combo);
        self.accepted += 1;
        Ok(Some(self.accepted - 1))
    }

    /// Expresses `v` as a combination of the accepted inputs.
    pub fn express(&self, v: &[Cyclotomic]) -> Option<Vector> {
        if !self.span.contains(v) {
            return None;
        }
        let mut out = vec![Cyclotomic::zero(); self.accepted];
        for (c, &p) in self.combos.iter().zip(&self.span.pivots) {
            if v[p].is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(c) {
                *x = x.add_mul(&v[p], y);
            }
        }
        Some(out)
    }

    /// The residue of `v` after reduction.
    pub fn residue(&self, v: &[Cyclotomic]) -> Vector {
        self.span.reduce(v)
    }
}

/// Basis of `{P : A_i·P = P·B_i for all i}`.
pub fn intertwiners(a_gens: &[Matrix], b_gens: &[Matrix]) -> Result<Vec<Matrix>> {
    if a_gens.is_empty() || a_gens.len() != b_gens.len() {
        return Err(Error::shape("intertwiners need equally many nonempty generator lists"));
    }
    let m = a_gens[0].rows;
    let n = b_gens[0].rows;
    for (a, b) in a_gens.iter().zip(b_gens) {
        if !a.is_square() || !b.is_square() || a.rows != m || b.rows != n {
            return Err(Error::shape("intertwiner generators must be square of consistent sizes"));
        }
    }
    let mut eqs = SpanBasis::new(m * n);
    'outer: for (a, b) in a_gens.iter().zip(b_gens) {
        for i in 0..m {
            for j in 0..n {
                let mut row = vec![Cyclotomic::zero(); m * n];
                for l in 0..m {
                    let x = &a[(i, l)];
                    if !x.is_zero() {
                        row[l * n + j] = &row[l * n + j] + x;
                    }
                }
                for l in 0..n {
                    let x = &b[(l, j)];
                    if !x.is_zero() {
                        row[i * n + l] = &row[i * n + l] - x;
                    }
                }
                eqs.insert(row)?;
                if eqs.is_full() {
                    break 'outer;
                }
            }
        }
    }
    Ok(eqs.kernel().into_iter().map(|v| Matrix::from_vec(m, n, v).expect("m·n entries")).collect())
}

/// Basis of `{B : Xᵀ·B + B·X = 0 for every generator X}`.
pub fn invariant_bilinear_forms(x_gens: &[Matrix]) -> Result<Vec<Matrix>> {
    let Some(first) = x_gens.first() else {
        return Err(Error::shape("no generators"));
    };
    let n = first.rows;
    let mut eqs = SpanBasis::new(n * n);
    'outer: for x in x_gens {
        if !x.is_square() || x.rows != n {
            return Err(Error::shape("form generators must be square of equal size"));
        }
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Cyclotomic::zero(); n * n];
                for l in 0..n {
                    // (Xᵀ B)_{ij} = Σ_l X_{li} B_{lj};  (B X)_{ij} = Σ_l B_{il} X_{lj}
                    let a = &x[(l, i)];
                    if !a.is_zero() {
                        row[l * n + j] = &row[l * n + j] + a;
                    }
                    let b = &x[(l, j)];
                    if !b.is_zero() {
                        row[i * n + l] = &row[i * n + l] + b;
                    }
                }
                eqs.insert(row)?;
                if eqs.is_full() {
                    break 'outer;
                }
            }
        }
    }
    Ok(eqs.kernel().into_iter().map(|v| Matrix::from_vec(n, n, v).expect("n² entries")).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormSymmetry {
    Symmetric,
    Skew,
    Neither,
}

pub fn form_symmetry(b: &Matrix) -> FormSymmetry {
    let t = b.transpose();
    if &t == b {
        FormSymmetry::Symmetric
    } else if t == -b {
        FormSymmetry::Skew
    } else {
        FormSymmetry::Neither
    }
}

/// Left inverse `L` of a full-column-rank `B` (so `L·B = I`), taken from the
/// pivot rows of `B`.
pub fn left_inverse(b: &Matrix) -> Result<Matrix> {
    let (_, piv) = rref(&b.transpose());
    if piv.len() < b.cols {
        return Err(Error::Domain("columns are not independent".into()));
    }
    let mut sq = Matrix::zeros(b.cols, b.cols);
    for (i, &r) in piv.iter().enumerate() {
        for j in 0..b.cols {
            sq[(i, j)] = b[(r, j)].clone();
        }
    }
    let inv = sq.inverse()?;
    let mut l = Matrix::zeros(b.cols, b.rows);
    for i in 0..b.cols {
        for (k, &r) in piv.iter().enumerate() {
            l[(i, r)] = inv[(i, k)].clone();
        }
    }
    Ok(l)
}

/// Flattens row-major.
pub fn flatten(m: &Matrix) -> Vector {
    m.entries.clone()
}

pub fn rational(p: i64, q: i64) -> Cyclotomic {
    Cyclotomic::rational(Rational::new(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::cyclo_root;

    fn e(n: usize, i: usize) -> Vector {
        let mut v = vec![Cyclotomic::zero(); n];
        v[i] = Cyclotomic::one();
        v
    }

    #[test]
    fn span_insert_examples() {
        let mut s = SpanBasis::new(3);
        assert!(s.insert(e(3, 0)).unwrap());
        assert_eq!(s.dim(), 1);
        let two_e1: Vector = e(3, 0).iter().map(|x| x.scale(&Rational::from_int(2))).collect();
        assert!(!s.insert(two_e1).unwrap());

        let mut s = SpanBasis::new(3);
        let e12: Vector = e(3, 0).iter().zip(e(3, 1)).map(|(a, b)| a + &b).collect();
        assert!(s.insert(e12).unwrap());
        assert!(s.insert(e(3, 0)).unwrap());
        assert!(!s.insert(e(3, 1)).unwrap());
        assert!(s.insert(vec![Cyclotomic::zero(); 2]).is_err());
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&Matrix::identity(3)).is_empty());
        assert_eq!(nullspace(&Matrix::zeros(3, 3)).len(), 3);
        let s = Matrix::diag(vec![cyclo_root(3, 1).unwrap(), Cyclotomic::one()]);
        let ns = nullspace(&(&s - &Matrix::identity(2)));
        assert_eq!(ns, vec![e(2, 1)]);
    }

    #[test]
    fn intertwiner_examples() {
        let d = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
        assert_eq!(intertwiners(std::slice::from_ref(&d), std::slice::from_ref(&d)).unwrap().len(), 2);

        // S3 standard rep against sign ⊕ trivial on the same generator pair
        let s1 = Matrix::from_ints(&[&[-1, 1], &[0, 1]]);
        let s2 = Matrix::from_ints(&[&[1, 0], &[1, -1]]);
        let t1 = Matrix::from_ints(&[&[-1, 0], &[0, 1]]);
        let t2 = Matrix::from_ints(&[&[-1, 0], &[0, 1]]);
        assert!(intertwiners(&[s1.clone(), s2.clone()], &[t1, t2]).unwrap().is_empty());
        let selfs = intertwiners(&[s1.clone(), s2.clone()], &[s1, s2]).unwrap();
        assert_eq!(selfs.len(), 1);
        assert!(selfs[0].as_scalar().is_some());
        assert!(intertwiners(&[], &[]).is_err());
    }

    #[test]
    fn form_examples() {
        assert_eq!(invariant_bilinear_forms(&[Matrix::zeros(2, 2)]).unwrap().len(), 4);
        let ef = [Matrix::from_ints(&[&[0, 1], &[0, 0]]), Matrix::from_ints(&[&[0, 0], &[1, 0]])];
        let forms = invariant_bilinear_forms(&ef).unwrap();
        assert_eq!(forms.len(), 1);
        assert_eq!(form_symmetry(&forms[0]), FormSymmetry::Skew);
        let so3 = [
            Matrix::from_ints(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]),
            Matrix::from_ints(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
            Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 1], &[0, -1, 0]]),
        ];
        let forms = invariant_bilinear_forms(&so3).unwrap();
        assert_eq!(forms.len(), 1);
        assert_eq!(form_symmetry(&forms[0]), FormSymmetry::Symmetric);
        assert!(forms[0].as_scalar().is_some());
        assert_eq!(form_symmetry(&Matrix::identity(2)), FormSymmetry::Symmetric);
        assert_eq!(form_symmetry(&Matrix::from_ints(&[&[0, 1], &[-1, 0]])), FormSymmetry::Skew);
        assert_eq!(form_symmetry(&Matrix::from_ints(&[&[0, 1], &[0, 0]])), FormSymmetry::Neither);
    }

    #[test]
    fn inverse_det_solve() {
        let w = cyclo_root(3, 1).unwrap();
        let m =
            Matrix::from_rows(vec![vec![w.clone(), Cyclotomic::one()], vec![Cyclotomic::zero(), w.clone()]]).unwrap();
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert_eq!(m.determinant(), &w * &w);
        let x = solve(&m, &[Cyclotomic::one(), Cyclotomic::zero()]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![Cyclotomic::one(), Cyclotomic::zero()]);
        assert!(Matrix::zeros(2, 2).inverse().is_err());
    }

    #[test]
    fn tracked_span_expresses() {
        let mut t = TrackedSpan::new(2);
        let a = vec![Cyclotomic::from_int(1), Cyclotomic::from_int(1)];
        let b = vec![Cyclotomic::from_int(1), Cyclotomic::from_int(-1)];
        assert_eq!(t.insert(a).unwrap(), Some(0));
        assert_eq!(t.insert(b).unwrap(), Some(1));
        let c = t.express(&[Cyclotomic::from_int(3), Cyclotomic::from_int(1)]).unwrap();
        assert_eq!(c, vec![Cyclotomic::from_int(2), Cyclotomic::from_int(1)]);
    }

    #[test]
    fn left_inverse_works() {
        let b = Matrix::from_ints(&[&[1, 0], &[2, 1], &[0, 3]]);
        let l = left_inverse(&b).unwrap();
        assert!((&l * &b).is_identity());
    }

    #[test]
    fn serde_shape() {
        let m = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":2,"cols":2,"entries":["1","2","3","4"]}"#);
        let back: Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Matrix>(r#"{"rows":2,"cols":2,"entries":["1"]}"#).is_err());
    }
}
