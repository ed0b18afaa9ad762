//! Partial permutations and canonical forms of matrices under `B × B`.
//!
//! A partial permutation of `{1..n}` is stored as its word `τ(1) … τ(n)` with
//! `0` marking the kernel. Its matrix has a 1 at `(τ(j), j)` for `τ(j) ≠ 0`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::error::{domain, internal, Error, Result};
use crate::field::{inv_mod, PrimeFieldMatrix};
use crate::insertion::Bijection;

/// Default bound on `n` for [`enumerate_partial_permutations`].
pub const DEFAULT_PARTIAL_PERM_BOUND: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialPermutation {
    word: Vec<usize>,
}

impl PartialPermutation {
    /// Validates a word with entries in `0..=n`, `n = word.len()`, nonzero entries distinct.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = alloc::vec![false; n + 1];
        for (j, &v) in word.iter().enumerate() {
            if v > n {
                return Err(domain!("word[{}] = {v} exceeds n = {n}", j + 1));
            }
            if v != 0 {
                if seen[v] {
                    return Err(domain!("value {v} appears twice in the word"));
                }
                seen[v] = true;
            }
        }
        Ok(PartialPermutation { word })
    }

    pub fn identity(n: usize) -> Self {
        PartialPermutation { word: (1..=n).collect() }
    }

    pub fn zero(n: usize) -> Self {
        PartialPermutation { word: alloc::vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `τ(j)` for 1-based `j`, `None` on the kernel.
    pub fn apply(&self, j: usize) -> Option<usize> {
        match self.word[j - 1] {
            0 => None,
            v => Some(v),
        }
    }

    pub fn rank(&self) -> usize {
        self.word.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.n()
    }

    pub fn to_matrix(&self, p: u64) -> PrimeFieldMatrix {
        let n = self.n();
        let mut m = PrimeFieldMatrix::zeros(p, n, n);
        for (j, &v) in self.word.iter().enumerate() {
            if v != 0 {
                m.set(v - 1, j, 1);
            }
        }
        m
    }

    /// Reads a 0/1 matrix with at most one 1 per row and column.
    pub fn from_matrix(m: &PrimeFieldMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(domain!("matrix is not square"));
        }
        let n = m.rows();
        let mut word = alloc::vec![0; n];
        for (j, w) in word.iter_mut().enumerate() {
            let ones: Vec<usize> = (0..n).filter(|&i| m.get(i, j) != 0).collect();
            match ones.as_slice() {
                [] => {}
                [i] if m.get(*i, j) == 1 => *w = i + 1,
                _ => return Err(domain!("column {} is not zero or a unit vector", j + 1)),
            }
        }
        Self::new(word)
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, v) in self.word.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The nondegenerate part of a partial permutation and its complementary sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// `σ : J → I`.
    pub sigma: Bijection,
    /// Domain of `σ`, ascending.
    pub j: Vec<usize>,
    /// `σ(j_1), …, σ(j_r)` for ascending `j`.
    pub i: Vec<usize>,
    /// Kernel `m_1 < … < m_s`.
    pub m: Vec<usize>,
    /// Complement of the image `ℓ_1 < … < ℓ_s`.
    pub l: Vec<usize>,
}

impl Decomposition {
    pub fn rank(&self) -> usize {
        self.j.len()
    }

    pub fn corank(&self) -> usize {
        self.m.len()
    }

    /// The image of `σ`, ascending.
    pub fn image_sorted(&self) -> Vec<usize> {
        let mut v = self.i.clone();
        v.sort_unstable();
        v
    }
}

pub fn decompose(tau: &PartialPermutation) -> Decomposition {
    let n = tau.n();
    let mut j = Vec::new();
    let mut i = Vec::new();
    let mut m = Vec::new();
    let mut in_image = alloc::vec![false; n + 1];
    for (k, &v) in tau.word().iter().enumerate() {
        if v == 0 {
            m.push(k + 1);
        } else {
            j.push(k + 1);
            i.push(v);
            in_image[v] = true;
        }
    }
    let l = (1..=n).filter(|&v| !in_image[v]).collect();
    let sigma = Bijection::new(j.iter().zip(&i).map(|(&a, &b)| (a as i64, b as i64)).collect()).expect("partial permutation is injective");
    Decomposition { sigma, j, i, m, l }
}

/// Matrix transpose.
pub fn transpose(tau: &PartialPermutation) -> PartialPermutation {
    let mut word = alloc::vec![0; tau.n()];
    for (j, &v) in tau.word().iter().enumerate() {
        if v != 0 {
            word[v - 1] = j + 1;
        }
    }
    PartialPermutation { word }
}

/// All partial permutations of `{1..n}` ordered by rank descending, then word,
/// using [`DEFAULT_PARTIAL_PERM_BOUND`].
pub fn enumerate_partial_permutations(n: usize) -> Result<Vec<PartialPermutation>> {
    enumerate_partial_permutations_bounded(n, DEFAULT_PARTIAL_PERM_BOUND)
}

pub fn enumerate_partial_permutations_bounded(n: usize, bound: usize) -> Result<Vec<PartialPermutation>> {
    if n > bound {
        return Err(Error::Resource(alloc::format!("n = {n} exceeds the partial permutation enumeration bound {bound}")));
    }
    fn rec(n: usize, word: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<PartialPermutation>) {
        if word.len() == n {
            out.push(PartialPermutation { word: word.clone() });
            return;
        }
        for v in 0..=n {
            if v != 0 && used[v] {
                continue;
            }
            if v != 0 {
                used[v] = true;
            }
            word.push(v);
            rec(n, word, used, out);
            word.pop();
            if v != 0 {
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::with_capacity(n), &mut alloc::vec![false; n + 1], &mut out);
    out.sort_by(|a, b| b.rank().cmp(&a.rank()).then_with(|| a.word.cmp(&b.word)));
    Ok(out)
}

/// `|𝔗_n| = Σ_r C(n,r)² r!`.
pub fn partial_permutation_count(n: usize) -> u128 {
    let mut total = 1u128;
    let mut binom = 1u128;
    let mut fact = 1u128;
    for r in 1..=n as u128 {
        binom = binom * (n as u128 - r + 1) / r;
        fact *= r;
        total += binom * binom * fact;
    }
    total
}

/// `d[i][j]` = rank of rows `i..n` and columns `1..=j` (0-based storage, 1-based meaning).
pub fn rank_profile(a: &PrimeFieldMatrix) -> Result<Vec<Vec<usize>>> {
    if !a.is_square() {
        return Err(domain!("rank profile needs a square matrix"));
    }
    let n = a.rows();
    Ok((0..n).map(|i| (1..=n).map(|j| a.submatrix(i, n, 0, j).rank()).collect()).collect())
}

/// Gaussian elimination restricted to upper-triangular row and column operations.
///
/// Pivots are searched in `rows` only; row operations stay inside `rows`;
/// column operations act on the whole matrix. When `guard` is given, those rows
/// must hold a partial-permutation block whose zero columns precede its nonzero
/// columns and whose nonzero columns have increasing pivot rows; every column
/// operation is then compensated by an upward row operation inside `guard` so
/// the block is left unchanged.
pub(crate) fn upper_triangular_reduce(m: &mut PrimeFieldMatrix, rows: Range<usize>, guard: Option<Range<usize>>) -> Result<()> {
    let p = m.prime();
    let guard_pivot =
        |m: &PrimeFieldMatrix, col: usize| -> Option<usize> { guard.clone().and_then(|g| g.into_iter().find(|&i| m.get(i, col) != 0)) };
    for j in 0..m.cols() {
        let Some(i) = rows.clone().rev().find(|&i| m.get(i, j) != 0) else {
            continue;
        };
        m.scale_row(i, inv_mod(m.get(i, j), p));
        for k in rows.start..i {
            let f = m.get(k, j);
            if f != 0 {
                m.add_row_multiple(k, i, p - f);
            }
        }
        for l in j + 1..m.cols() {
            let f = m.get(i, l);
            if f == 0 {
                continue;
            }
            let c = p - f;
            let src_pivot = guard_pivot(m, j);
            m.add_col_multiple(l, j, c);
            if let Some(a) = src_pivot {
                let b = guard_pivot_excluding(m, guard.as_ref().expect("guarded"), l, a)
                    .ok_or_else(|| internal!("guard block column {} lost its pivot", l + 1))?;
                if b <= a {
                    return Err(internal!("compensating row operation would move downward"));
                }
                let v = m.get(a, l);
                let scale = inv_mod(m.get(b, l), p);
                m.add_row_multiple(a, b, (p - v) * scale % p);
            }
        }
    }
    Ok(())
}

/// The nonzero row of column `col` in `guard` other than `skip`.
fn guard_pivot_excluding(m: &PrimeFieldMatrix, guard: &Range<usize>, col: usize, skip: usize) -> Option<usize> {
    guard.clone().find(|&i| i != skip && m.get(i, col) != 0)
}

/// The unique partial permutation in the `B × B` double coset of `a`.
pub fn canonicalize_matrix(a: &PrimeFieldMatrix) -> Result<PartialPermutation> {
    if !a.is_square() {
        return Err(domain!("expected a square matrix, got {}x{}", a.rows(), a.cols()));
    }
    let mut m = a.clone();
    upper_triangular_reduce(&mut m, 0..a.rows(), None)?;
    let tau = PartialPermutation::from_matrix(&m)?;
    if rank_profile(&tau.to_matrix(a.prime()))? != rank_profile(a)? {
        return Err(internal!("rank profile changed during canonicalization"));
    }
    Ok(tau)
}

/// The permutations `w1`, `w2` of `{1..n}` with `St(w1) = Φ1(τ)` and `St(w2) = Φ2(τ)`.
pub fn build_w1_w2(tau: &PartialPermutation) -> (Bijection, Bijection) {
    let d = decompose(tau);
    let mut w1: Vec<i64> = d.i.iter().map(|&v| v as i64).collect();
    w1.extend(d.l.iter().rev().map(|&v| v as i64));
    let mut w2: Vec<i64> = d.m.iter().rev().map(|&v| v as i64).collect();
    for i in d.image_sorted() {
        let j = d.sigma.inverse().apply(i as i64).expect("i is in the image");
        w2.push(j);
    }
    (Bijection::from_images(&w1).expect("w1 is a permutation"), Bijection::from_images(&w2).expect("w2 is a permutation"))
}
