//! Dense matrices over a prime field `F_p` with `p < 2^32`.

use alloc::vec::Vec;
use core::fmt;

use rand_chacha::rand_core::RngCore;

use crate::error::{domain, Result};

/// The Mersenne prime `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Checks that `p` is a prime below `2^32`, so products of residues fit in `u64`.
pub fn check_prime(p: u64) -> Result<()> {
    if !(2..1 << 32).contains(&p) {
        return Err(domain!("prime {p} must lie in [2, 2^32)"));
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return Err(domain!("{p} is not prime"));
        }
        d += 1;
    }
    Ok(())
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Reduces a signed integer into `[0, p)`.
pub fn reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// A uniformly random residue.
pub fn random_residue<R: RngCore>(rng: &mut R, p: u64) -> u64 {
    let limit = u64::MAX - u64::MAX % p;
    loop {
        let x = rng.next_u64();
        if x < limit {
            return x % p;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeFieldMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        PrimeFieldMatrix { p, rows, cols, data: alloc::vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(p: u64, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j) % p;
            }
        }
        m
    }

    /// Builds from integer rows, reducing every entry mod `p`.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(domain!("matrix rows have different lengths"));
        }
        Ok(Self::from_fn(p, rows.len(), cols, |i, j| reduce(rows[i][j], p)))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    /// Entries as signed integers in `(-p/2, p/2]`.
    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        let half = self.p / 2;
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let v = self.get(i, j);
                        if v > half {
                            v as i64 - self.p as i64
                        } else {
                            v as i64
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Entries in row-major order.
    pub fn to_u64_vec(&self) -> Vec<u64> {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.p, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows || self.p != other.p {
            return Err(domain!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols));
        }
        let p = self.p;
        let mut out = Self::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = (out.data[idx] + mul_mod(a, other.get(k, j), p)) % p;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(domain!("dimension mismatch in addition"));
        }
        Ok(Self::from_fn(self.p, self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j)))
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::from_fn(self.p, self.rows, self.cols, |i, j| mul_mod(self.get(i, j), c % self.p, self.p))
    }

    pub fn neg(&self) -> Self {
        self.scale(self.p - 1)
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(domain!("power of a non-square matrix"));
        }
        let mut r = Self::identity(self.p, self.rows);
        for _ in 0..k {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(self.p, r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(domain!("hstack of matrices with different row counts"));
        }
        Ok(Self::from_fn(self.p, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        }))
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(domain!("vstack of matrices with different column counts"));
        }
        Ok(Self::from_fn(self.p, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j)
            } else {
                other.get(i - self.rows, j)
            }
        }))
    }

    /// `[[a, b], [c, d]]` from four square blocks of equal size.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        a.hstack(b)?.vstack(&c.hstack(d)?)
    }

    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: u64) {
        let p = self.p;
        for j in 0..self.cols {
            let v = (self.get(dst, j) + mul_mod(c, self.get(src, j), p)) % p;
            self.data[dst * self.cols + j] = v;
        }
    }

    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: u64) {
        let p = self.p;
        for i in 0..self.rows {
            let v = (self.get(i, dst) + mul_mod(c, self.get(i, src), p)) % p;
            self.data[i * self.cols + dst] = v;
        }
    }

    pub fn scale_row(&mut self, i: usize, c: u64) {
        for j in 0..self.cols {
            let v = mul_mod(self.get(i, j), c, self.p);
            self.data[i * self.cols + j] = v;
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), p);
            self.scale_row(r, inv);
            for i in 0..self.rows {
                if i != r {
                    let f = self.get(i, c);
                    if f != 0 {
                        self.add_row_multiple(i, r, p - f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of `{v : A v = 0}` as column vectors, each scaled so its first
    /// nonzero coordinate is 1.
    pub fn nullspace_vectors(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let p = self.p;
        let mut basis = Vec::new();
        let mut is_pivot = alloc::vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = alloc::vec![0u64; self.cols];
            v[free] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = (p - m.get(r, free)) % p;
            }
            let lead = *v.iter().find(|&&x| x != 0).expect("free coordinate is 1");
            let scale = inv_mod(lead, p);
            v.iter_mut().for_each(|x| *x = mul_mod(*x, scale, p));
            basis.push(v);
        }
        basis
    }

    /// Basis of the null space as a [`FiberBasis`] of column vectors.
    pub fn nullspace(&self) -> FiberBasis {
        let basis = self.nullspace_vectors().into_iter().map(|v| Self { p: self.p, rows: self.cols, cols: 1, data: v }).collect();
        FiberBasis { basis, rows: self.cols, cols: 1 }
    }
}

impl fmt::Display for PrimeFieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.to_signed_rows().iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// A basis of a linear space of matrices of one fixed shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberBasis {
    basis: Vec<PrimeFieldMatrix>,
    rows: usize,
    cols: usize,
}

impl FiberBasis {
    /// The subspace of `rows × cols` matrices on which the linear map `constraint` vanishes.
    pub fn solve<F>(p: u64, rows: usize, cols: usize, constraint: F) -> Result<Self>
    where
        F: Fn(&PrimeFieldMatrix) -> Result<Vec<u64>>,
    {
        let unknowns = rows * cols;
        let mut columns = Vec::with_capacity(unknowns);
        for u in 0..unknowns {
            let mut e = PrimeFieldMatrix::zeros(p, rows, cols);
            e.set(u / cols, u % cols, 1);
            columns.push(constraint(&e)?);
        }
        let eqs = columns.first().map_or(0, Vec::len);
        let system = PrimeFieldMatrix::from_fn(p, eqs, unknowns, |i, j| columns[j][i]);
        let basis = system.nullspace_vectors().into_iter().map(|v| PrimeFieldMatrix { p, rows, cols, data: v }).collect();
        Ok(FiberBasis { basis, rows, cols })
    }

    pub fn basis(&self) -> &[PrimeFieldMatrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `(rows, cols)` of every basis element.
    pub fn ambient_shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// `Σ c_i B_i` for the given coefficients.
    pub fn combine(&self, p: u64, coefficients: &[u64]) -> PrimeFieldMatrix {
        let mut out = PrimeFieldMatrix::zeros(p, self.rows, self.cols);
        for (b, &c) in self.basis.iter().zip(coefficients) {
            for (o, v) in out.data.iter_mut().zip(&b.data) {
                *o = (*o + mul_mod(c, *v, p)) % p;
            }
        }
        out
    }

    /// A uniformly random element of the span.
    pub fn sample<R: RngCore>(&self, p: u64, rng: &mut R) -> PrimeFieldMatrix {
        let coefficients: Vec<u64> = (0..self.dim()).map(|_| random_residue(rng, p)).collect();
        self.combine(p, &coefficients)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const P: u64 = DEFAULT_PRIME;

    #[test]
    fn primes() {
        assert!(check_prime(P).is_ok());
        assert!(check_prime(101).is_ok());
        assert!(check_prime(100).is_err());
        assert!(check_prime(1).is_err());
        assert!(check_prime(1 << 33).is_err());
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(PrimeFieldMatrix::identity(P, 3).nullspace().dim(), 0);
        assert_eq!(PrimeFieldMatrix::zeros(P, 4, 4).nullspace().dim(), 4);
        let a = PrimeFieldMatrix::from_rows(P, &[vec![1, 1]]).unwrap();
        let ns = a.nullspace_vectors();
        assert_eq!(ns, vec![vec![1, P - 1]]);
        let v = PrimeFieldMatrix::from_rows(P, &[vec![1], vec![-1]]).unwrap();
        assert!(a.mul(&v).unwrap().is_zero());
    }

    #[test]
    fn rank_and_products() {
        let a = PrimeFieldMatrix::from_rows(P, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]).unwrap();
        assert_eq!(a.rank(), 2);
        let i = PrimeFieldMatrix::identity(P, 3);
        assert_eq!(a.mul(&i).unwrap(), a);
        assert_eq!(a.pow(0).unwrap(), i);
        let n = PrimeFieldMatrix::from_rows(P, &[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(n.pow(2).unwrap().is_zero());
        assert_eq!(a.add(&a.neg()).unwrap(), PrimeFieldMatrix::zeros(P, 3, 3));
    }

    #[test]
    fn inverse_mod() {
        for a in [1u64, 2, 3, 12345, P - 1] {
            assert_eq!(mul_mod(a, inv_mod(a, P), P), 1);
        }
    }

    #[test]
    fn solve_strictly_upper() {
        let fiber =
            FiberBasis::solve(P, 3, 3, |x| Ok((0..3).flat_map(|i| (0..=i).map(move |j| (i, j))).map(|(i, j)| x.get(i, j)).collect()))
                .unwrap();
        assert_eq!(fiber.dim(), 3);
    }
}
