//! Exact dense linear algebra over the prime field GF(p).
//!
//! Matrices store entries as `u32` values in `[0, p)`. All arithmetic is
//! exact; there is no pivoting subtlety because the field has no rounding.

use serde::Serialize;

/// Modular inverse via Fermat, valid for prime p and a != 0.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a % p, (p - 2) as u64, p)
}

pub fn pow_mod(b: u32, mut e: u64, p: u32) -> u32 {
    let m = p as u64;
    let mut acc = 1u64;
    let mut base = (b % p) as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u32
}

/// Dense matrix over GF(p), row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub p: u32,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u32>,
}

impl Mat {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Mat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Mat::zeros(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(p: u32, rows: Vec<Vec<u32>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &x in row {
                data.push(x % p);
            }
        }
        Mat { p, rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.p, self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let p64 = self.p as u64;
        let mut out = Mat::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)] as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k).to_vec();
                let dst = out.row_mut(i);
                for (d, &b) in dst.iter_mut().zip(orow.iter()) {
                    *d = ((*d as u64 + a * b as u64) % p64) as u32;
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p64 = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for (x, &vj) in self.row(i).iter().zip(v.iter()) {
                    acc += *x as u64 * vj as u64;
                    if acc >= u64::MAX / 2 {
                        acc %= p64;
                    }
                }
                (acc % p64) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (d, &s) in out.data.iter_mut().zip(other.data.iter()) {
            *d = (*d + s) % self.p;
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (d, &s) in out.data.iter_mut().zip(other.data.iter()) {
            *d = (*d + self.p - s) % self.p;
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut acc = Mat::identity(self.p, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let p64 = p as u64;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = inv_mod(self[(r, c)], p);
            if inv != 1 {
                for x in self.row_mut(r) {
                    *x = (*x as u64 * inv as u64 % p64) as u32;
                }
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)] == 0 {
                    continue;
                }
                let f = (p - self[(i, c)]) as u64;
                let src = self.row(r).to_vec();
                let dst = self.row_mut(i);
                for (d, &s) in dst.iter_mut().zip(src.iter()) {
                    *d = ((*d as u64 + f * s as u64) % p64) as u32;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let c = self.cols;
        for j in 0..c {
            self.data.swap(a * c + j, b * c + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right nullspace { v : M v = 0 }, rows in reduced echelon form.
    pub fn nullspace(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let p = self.p;
        let mut rows = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            pivot_of_col[pc] = Some(ri);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for c in 0..self.cols {
                if let Some(ri) = pivot_of_col[c] {
                    let coeff = m[(ri, free)];
                    if coeff != 0 {
                        v[c] = p - coeff;
                    }
                }
            }
            rows.push(v);
        }
        Subspace::from_vectors(p, self.cols, rows)
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    /// Gauss-Jordan inverse; None if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Mat::zeros(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let pivots = aug.rref_in_place();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut out = Mat::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = u32;
    fn index(&self, (i, j): (usize, usize)) -> &u32 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u32 {
        &mut self.data[i * self.cols + j]
    }
}

/// A subspace of GF(p)^d, stored as its unique reduced-echelon basis.
/// Equality of subspaces is literal equality of the stored bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subspace {
    pub p: u32,
    pub ambient: usize,
    pub basis: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Subspace { p, ambient, basis: Vec::new() }
    }

    pub fn full(p: u32, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { p, ambient, basis }
    }

    /// Span of arbitrary vectors, canonicalized by row reduction.
    pub fn from_vectors(p: u32, ambient: usize, vecs: Vec<Vec<u32>>) -> Self {
        if vecs.is_empty() {
            return Subspace::zero(p, ambient);
        }
        let mut m = Mat::from_rows(p, vecs);
        let pivots = m.rref_in_place();
        let basis = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        Subspace { p, ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        // reduce v against the echelon basis
        let p = self.p;
        let p64 = p as u64;
        let mut w = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|&x| x != 0).expect("basis row nonzero");
            let c = w[pivot];
            if c != 0 {
                let f = (p - c) as u64;
                for (wi, &ri) in w.iter_mut().zip(row.iter()) {
                    *wi = ((*wi as u64 + f * ri as u64) % p64) as u32;
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.p, self.ambient, vecs)
    }

    /// Intersection via the nullspace of stacked constraint rows.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // v in both spans <=> v orthogonal-reduces to zero by each basis; do it
        // by solving with the complement constraints of each space.
        let a = self.constraint_matrix();
        let b = other.constraint_matrix();
        let mut rows = Vec::new();
        rows.extend((0..a.rows).map(|i| a.row(i).to_vec()));
        rows.extend((0..b.rows).map(|i| b.row(i).to_vec()));
        if rows.is_empty() {
            return Subspace::full(self.p, self.ambient);
        }
        Mat::from_rows(self.p, rows).nullspace()
    }

    /// Rows h with { v : h . v = 0 for all h } equal to this subspace.
    fn constraint_matrix(&self) -> Mat {
        // nullspace of basis-as-matrix gives the annihilator of the row space
        if self.basis.is_empty() {
            return Mat::identity(self.p, self.ambient);
        }
        let m = Mat::from_rows(self.p, self.basis.clone());
        let ann = m.nullspace();
        if ann.basis.is_empty() {
            Mat::zeros(self.p, 0, self.ambient)
        } else {
            Mat::from_rows(self.p, ann.basis)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all_vectors(p: u32, d: usize) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..d {
            let mut next = Vec::new();
            for v in &out {
                for x in 0..p {
                    let mut w = v.clone();
                    w.push(x);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_rows(5, vec![vec![1, 2, 0], vec![0, 1, 4], vec![3, 0, 2]]);
        let inv = m.inverse().expect("invertible");
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = Mat::from_rows(3, vec![vec![1, 2], vec![2, 1 + 3]]);
        // second row = 2 * first row mod 3
        assert!(m.inverse().is_none());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_matches_exhaustive_scan() {
        // oracle: scan all p^d vectors
        for (p, rows) in [
            (3u32, vec![vec![1, 2, 0], vec![0, 0, 1]]),
            (3u32, vec![vec![1, 1, 1]]),
            (5u32, vec![vec![2, 3, 1], vec![4, 1, 0]]),
        ] {
            let m = Mat::from_rows(p, rows);
            let ns = m.nullspace();
            let expected: Vec<Vec<u32>> = all_vectors(p, m.cols)
                .into_iter()
                .filter(|v| m.apply(v).iter().all(|&x| x == 0))
                .collect();
            for v in &expected {
                assert!(ns.contains_vector(v), "missing {:?}", v);
            }
            assert_eq!((p as usize).pow(ns.dim() as u32), expected.len());
        }
    }

    #[test]
    fn subspace_equality_is_basis_equality() {
        let a = Subspace::from_vectors(3, 3, vec![vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::from_vectors(3, 3, vec![vec![1, 2, 1], vec![2, 2, 0], vec![0, 1, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersect_and_sum() {
        let a = Subspace::from_vectors(3, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::from_vectors(3, 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        let i = a.intersect(&b);
        assert_eq!(i, Subspace::from_vectors(3, 3, vec![vec![0, 1, 0]]));
        assert_eq!(a.sum(&b), Subspace::full(3, 3));
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(seed in 0u64..500) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let p = [3u32, 5, 7][rng.gen_range(0..3)];
            let rows = rng.gen_range(1..5usize);
            let cols = rng.gen_range(1..5usize);
            let data: Vec<Vec<u32>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(0..p)).collect())
                .collect();
            let mut m = Mat::from_rows(p, data);
            m.rref_in_place();
            let once = m.clone();
            m.rref_in_place();
            prop_assert_eq!(once, m);
        }

        #[test]
        fn inverse_agrees_with_mul(seed in 0u64..300) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let p = [3u32, 5, 7][rng.gen_range(0..3)];
            let n = rng.gen_range(1..5usize);
            let data: Vec<Vec<u32>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
                .collect();
            let m = Mat::from_rows(p, data);
            if let Some(inv) = m.inverse() {
                prop_assert!(m.mul(&inv).is_identity());
            } else {
                prop_assert!(m.rank() < n);
            }
        }
    }
}
