//! Exact linear algebra over the rationals.
//!
//! Subspaces are kept in reduced row echelon form, which makes equality a
//! structural comparison. Kernels are computed by an incremental sparse
//! elimination ([`Echelon`]) so that the tall, very sparse operators arising
//! from centralizer and Lie-algebra conditions never get densified.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// A sparse vector with entries sorted by index and no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    /// The zero vector.
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(i: usize) -> Self {
        SparseVec { entries: alloc::vec![(i, Rational::one())] }
    }

    /// Accumulates possibly repeated entries.
    pub fn from_entries<I: IntoIterator<Item = (usize, Rational)>>(iter: I) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in iter {
            *map.entry(i).or_insert_with(Rational::zero) += &c;
        }
        SparseVec { entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Sparse copy of a dense vector.
    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec {
            entries: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        }
    }

    /// Dense copy of length `len`.
    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    /// Nonzero entries in ascending index order.
    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    /// Whether the vector is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// First nonzero entry.
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    /// Entry at index `i`.
    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(k, _)| *k) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    /// Returns `self + alpha * other`.
    pub fn axpy(&self, alpha: &Rational, other: &SparseVec) -> Self {
        if alpha.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i >= a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, alpha * &b[j].1));
                j += 1;
            } else {
                let v = &a[i].1 + &(alpha * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    /// Standard dot product.
    pub fn dot(&self, other: &SparseVec) -> Rational {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc = Rational::zero();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => {
                    acc += &(&a[i].1 * &b[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Rescales so that the leading entry is one.
    pub fn normalized(&self) -> Self {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }
}

/// Incremental row echelon form over `ncols` columns.
///
/// Rows are stored by pivot column with a unit pivot. Pushing a row reduces it
/// against the existing pivots and keeps it when something nonzero remains.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    /// An empty echelon form over `ncols` columns.
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Number of independent rows pushed so far.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Whether all columns are pivots.
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    fn reduce_leading(&self, mut v: SparseVec) -> SparseVec {
        while let Some((c, coef)) = v.leading() {
            match self.rows.get(&c) {
                Some(row) => {
                    let alpha = -coef;
                    v = v.axpy(&alpha, row);
                }
                None => break,
            }
        }
        v
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn push(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.entries().iter().all(|(i, _)| *i < self.ncols));
        let v = self.reduce_leading(v);
        match v.leading() {
            Some((c, _)) => {
                self.rows.insert(c, v.normalized());
                true
            }
            None => false,
        }
    }

    /// Reduced row echelon rows in ascending pivot order.
    pub fn rref_rows(&self) -> Vec<SparseVec> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut rows: Vec<SparseVec> = self.rows.values().cloned().collect();
        for j in (0..rows.len()).rev() {
            let pj = pivots[j];
            let (head, tail) = rows.split_at_mut(j);
            let rj = &tail[0];
            for ri in head.iter_mut() {
                let c = ri.get(pj);
                if !c.is_zero() {
                    *ri = ri.axpy(&-c, rj);
                }
            }
        }
        rows
    }

    /// Basis of the null space `{x : row . x = 0 for every row}`.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let rows = self.rref_rows();
        let pivots: Vec<usize> = rows.iter().map(|r| r.leading().expect("nonzero row").0).collect();
        let is_pivot = {
            let mut m = alloc::vec![false; self.ncols];
            for &p in &pivots {
                m[p] = true;
            }
            m
        };
        let mut out = Vec::new();
        for f in (0..self.ncols).filter(|&c| !is_pivot[c]) {
            let mut entries = alloc::vec![(f, Rational::one())];
            for (row, &p) in rows.iter().zip(&pivots) {
                let c = row.get(f);
                if !c.is_zero() {
                    entries.push((p, -c));
                }
            }
            out.push(SparseVec::from_entries(entries));
        }
        out
    }
}

/// A linear subspace of `Q^ambient`, canonically represented by its RREF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSubspace {
    ambient: usize,
    rows: Vec<SparseVec>,
}

impl LinearSubspace {
    /// Span of the given vectors.
    pub fn from_spanning<I: IntoIterator<Item = SparseVec>>(ambient: usize, vecs: I) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vecs {
            e.push(v);
            if e.is_full() {
                break;
            }
        }
        LinearSubspace { ambient, rows: e.rref_rows() }
    }

    /// Null space of an operator given by its rows.
    pub fn kernel_of_rows<I: IntoIterator<Item = SparseVec>>(ambient: usize, rows: I) -> Self {
        let mut e = Echelon::new(ambient);
        for v in rows {
            e.push(v);
            if e.is_full() {
                break;
            }
        }
        Self::from_spanning(ambient, e.kernel_basis())
    }

    /// The zero subspace.
    pub fn zero(ambient: usize) -> Self {
        LinearSubspace { ambient, rows: Vec::new() }
    }

    /// The whole space.
    pub fn full(ambient: usize) -> Self {
        LinearSubspace { ambient, rows: (0..ambient).map(SparseVec::unit).collect() }
    }

    /// Span of standard basis vectors with the given indices.
    pub fn coordinate<I: IntoIterator<Item = usize>>(ambient: usize, idx: I) -> Self {
        let mut v: Vec<usize> = idx.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        LinearSubspace { ambient, rows: v.into_iter().map(SparseVec::unit).collect() }
    }

    /// Ambient dimension.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// RREF basis, ascending pivot order.
    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Residual of `v` after removing its component along the pivots.
    pub fn residual(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for row in &self.rows {
            let p = row.leading().expect("nonzero row").0;
            let c = v.get(p);
            if !c.is_zero() {
                v = v.axpy(&-c, row);
            }
        }
        v
    }

    /// Membership test.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.residual(v).is_zero()
    }

    /// Inclusion test.
    pub fn is_subspace_of(&self, other: &LinearSubspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Vectors orthogonal to every vector of `self` under the standard dot product.
    pub fn annihilator(&self) -> LinearSubspace {
        Self::kernel_of_rows(self.ambient, self.rows.iter().cloned())
    }

    /// Sum of two subspaces.
    pub fn sum(&self, other: &LinearSubspace) -> LinearSubspace {
        assert_eq!(self.ambient, other.ambient);
        Self::from_spanning(self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    /// Intersection of two subspaces.
    pub fn intersect(&self, other: &LinearSubspace) -> LinearSubspace {
        assert_eq!(self.ambient, other.ambient);
        let a = self.annihilator();
        let b = other.annihilator();
        Self::kernel_of_rows(self.ambient, a.rows.into_iter().chain(b.rows))
    }

    /// When every basis vector is a standard basis vector, their indices.
    pub fn coordinate_indices(&self) -> Option<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| match r.entries() {
                [(i, c)] if c.is_one() => Some(*i),
                _ => None,
            })
            .collect()
    }
}

/// A dense rational matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    /// The zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: alloc::vec![Rational::zero(); rows * cols] }
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds from a closure over `(row, col)`.
    pub fn from_fn<F: FnMut(usize, usize) -> Rational>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    /// Sets entry `(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    /// Mutable access to entry `(i, j)`.
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Matrix product.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
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
                        *out.get_mut(i, j) += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Null space.
    pub fn kernel(&self) -> LinearSubspace {
        LinearSubspace::kernel_of_rows(self.cols, (0..self.rows).map(|i| SparseVec::from_dense(self.row(i))))
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.push(SparseVec::from_dense(self.row(i)));
        }
        e.rank()
    }

    /// One solution of `self * x = b` (free variables set to zero), if any.
    ///
    /// Mostly-zero systems go through the sparse [`Echelon`]; denser ones
    /// through fraction-free elimination over the integers.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let nonzero = self.data.iter().filter(|x| !x.is_zero()).count();
        if 4 * nonzero < self.data.len() {
            self.solve_sparse(b)
        } else {
            self.solve_bareiss(b)
        }
    }

    fn solve_sparse(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        let n = self.cols;
        let mut e = Echelon::new(n + 1);
        for (i, bi) in b.iter().enumerate() {
            let row = self.row(i).iter().cloned().chain(core::iter::once(bi.clone()));
            e.push(SparseVec::from_entries(row.enumerate()));
        }
        if e.rows.contains_key(&n) {
            return None;
        }
        let mut x = alloc::vec![Rational::zero(); n];
        for row in e.rref_rows() {
            let (p, _) = row.leading().expect("nonzero row");
            x[p] = row.get(n);
        }
        Some(x)
    }

    /// Each row is scaled to integers and reduced by Bareiss elimination, so
    /// intermediate entries are minors of the augmented matrix and no gcd is
    /// taken until back substitution.
    fn solve_bareiss(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        let n = self.cols;
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row: Vec<&Rational> = self.row(i).iter().chain(core::iter::once(&b[i])).collect();
                let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(&x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..n {
            if r == a.len() {
                break;
            }
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            let (head, tail) = a.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let pivot = &pivot_row[c];
            for row in tail.iter_mut() {
                let f = core::mem::take(&mut row[c]);
                for j in c + 1..=n {
                    let mut x = pivot * &row[j];
                    if !f.is_zero() && !pivot_row[j].is_zero() {
                        x -= &f * &pivot_row[j];
                    }
                    row[j] = x / &prev;
                }
            }
            prev = pivot.clone();
            pivots.push(c);
            r += 1;
        }
        if a[r..].iter().any(|row| !row[n].is_zero()) {
            return None;
        }
        let mut x = alloc::vec![BigRational::zero(); n];
        for (i, &c) in pivots.iter().enumerate().rev() {
            let mut acc = BigRational::from_integer(a[i][n].clone());
            for &j in &pivots[i + 1..] {
                if !a[i][j].is_zero() {
                    acc -= &x[j] * BigRational::from_integer(a[i][j].clone());
                }
            }
            x[c] = acc / BigRational::from_integer(a[i][c].clone());
        }
        Some(x.into_iter().map(Rational::from_big).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn sv(v: &[i64]) -> SparseVec {
        SparseVec::from_dense(&v.iter().map(|&x| q(x)).collect::<Vec<_>>())
    }

    #[test]
    fn kernel_of_small_matrix() {
        let m = Matrix::from_fn(2, 3, |i, j| q([[1, 2, 3], [2, 4, 6]][i][j]));
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            let d = v.to_dense(3);
            assert!(m.mul_vec(&d).iter().all(|x| x.is_zero()));
        }
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rref_is_canonical() {
        let a = LinearSubspace::from_spanning(3, [sv(&[1, 1, 0]), sv(&[0, 1, 1])]);
        let b = LinearSubspace::from_spanning(3, [sv(&[1, 2, 1]), sv(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[sv(&[1, 0, -1]), sv(&[0, 1, 1])]);
    }

    #[test]
    fn intersect_and_sum() {
        let a = LinearSubspace::coordinate(4, [0, 1]);
        let b = LinearSubspace::from_spanning(4, [sv(&[1, 1, 0, 0]), sv(&[0, 0, 1, 0])]);
        let i = a.intersect(&b);
        assert_eq!(i, LinearSubspace::from_spanning(4, [sv(&[1, 1, 0, 0])]));
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_fn(2, 2, |i, j| q([[2, 1], [1, 3]][i][j]));
        let x = m.solve(&[q(3), q(4)]).unwrap();
        assert_eq!(m.mul_vec(&x), [q(3), q(4)]);
        let s = Matrix::from_fn(2, 2, |i, j| q([[1, 2], [2, 4]][i][j]));
        assert!(s.solve(&[q(1), q(0)]).is_none());
    }

    #[test]
    fn solve_agrees_with_rank_on_random_systems() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let (rows, cols) = (rng.random_range(1..6), rng.random_range(1..6));
            let sparse = rng.random_bool(0.5);
            let mut m = Matrix::from_fn(rows, cols, |_, _| {
                if sparse && rng.random_bool(0.85) {
                    Rational::zero()
                } else {
                    Rational::new(rng.random_range(-2..=2), rng.random_range(1..=3))
                }
            });
            if rows > 1 && rng.random_bool(0.5) {
                for j in 0..cols {
                    let v = &(m.get(0, j) * &q(2)) - m.get(rows - 1, j);
                    m.set(rows - 2, j, v);
                }
            }
            let b: Vec<Rational> = if rng.random_bool(0.5) {
                let x0: Vec<Rational> = (0..cols).map(|_| q(rng.random_range(-3..=3))).collect();
                m.mul_vec(&x0)
            } else {
                (0..rows).map(|_| q(rng.random_range(-3..=3))).collect()
            };
            let augmented = Matrix::from_fn(rows, cols + 1, |i, j| if j < cols { m.get(i, j).clone() } else { b[i].clone() });
            match m.solve(&b) {
                Some(x) => assert_eq!(m.mul_vec(&x), b),
                None => assert!(m.rank() < augmented.rank()),
            }
        }
    }
}
