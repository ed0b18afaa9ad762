//! The generalized Steinberg map, the triple bijection, the triangle operation
//! and the combinatorial exotic moment map on partial permutations.
//!
//! Throughout, `τ` is written as `j_k ↦ i_k` on its support with
//! `j_1 < … < j_r`, kernel `m_1 < … < m_s` and missing values `ℓ_1 < … < ℓ_s`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, internal, Error, Result};
use crate::insertion::{
    column_insert, rectify, reverse_column_insert, reverse_row_insert, reverse_slides, row_insert, rs_inverse, rs_pair, Bijection,
};
use crate::partition::Partition;
use crate::perm::{decompose, Decomposition, PartialPermutation};
use crate::signed::{signed_from_column_counts, SignedYoungDiagram};
use crate::tableau::{enumerate_standard_tableaux, SkewTableau, Tableau};

/// `(T1, T2, ν)` with `shape(Ti) ∖ ν` column strips.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub t1: Tableau,
    pub t2: Tableau,
    pub nu: Partition,
}

impl Triple {
    /// Checks the defining invariants: standard tableaux of one size `n` and
    /// column-strip differences over `nu`.
    pub fn validate(&self) -> Result<usize> {
        let n = self.t1.size();
        if self.t2.size() != n {
            return Err(domain!("T1 and T2 have sizes {} and {}", n, self.t2.size()));
        }
        if !self.t1.is_standard() {
            return Err(domain!("T1 is not standard on 1..{n}"));
        }
        if !self.t2.is_standard() {
            return Err(domain!("T2 is not standard on 1..{n}"));
        }
        for (name, t) in [("T1", &self.t1), ("T2", &self.t2)] {
            if !t.shape().is_column_strip_over(&self.nu) {
                return Err(domain!("shape({name}) ∖ nu is not a column strip"));
            }
        }
        Ok(n)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t1, self.t2, self.nu)
    }
}

/// `T * column(ℓ_1 … ℓ_s) = T ← ℓ_s ← … ← ℓ_1`.
pub fn star_column_right(t: &Tableau, ells: &[usize]) -> Result<Tableau> {
    ells.iter().rev().try_fold(t.clone(), |acc, &l| row_insert(&acc, l as i64))
}

/// `column(m_1 … m_s) * T = m_s → … → m_1 → T`.
pub fn star_column_left(ms: &[usize], t: &Tableau) -> Result<Tableau> {
    ms.iter().try_fold(t.clone(), |acc, &m| column_insert(m as i64, &acc))
}

fn rs_of(d: &Decomposition) -> (Tableau, Tableau) {
    rs_pair(&d.sigma)
}

/// `Φ(τ) = (shape(RS1(σ) * column(ℓ)), shape(column(m) * RS2(σ)))`.
pub fn phi(tau: &PartialPermutation) -> (Partition, Partition) {
    let t = triple(tau);
    (t.t1.shape(), t.t2.shape())
}

/// `Ξ_k` on the orbit of `(τ; 1_n)`, which equals `Φ(τ)`.
pub fn xi_k_generic(tau: &PartialPermutation) -> (Partition, Partition) {
    phi(tau)
}

/// `τ ↦ (RS1(σ) * column(ℓ), column(m) * RS2(σ), shape(RS1(σ)))`.
pub fn triple(tau: &PartialPermutation) -> Triple {
    let d = decompose(tau);
    let (p, q) = rs_of(&d);
    let t1 = star_column_right(&p, &d.l).expect("ℓ values are not entries of RS1");
    let t2 = star_column_left(&d.m, &q).expect("m values are not entries of RS2");
    Triple { t1, t2, nu: p.shape() }
}

/// The unique `τ` with `triple(τ) = t`.
pub fn triple_inverse(t: &Triple) -> Result<PartialPermutation> {
    let n = t.validate()?;
    let not_in_image = |msg: &str| Error::NotInImage(alloc::format!("{msg} for triple {t}"));

    let lambda = t.t1.shape();
    let mut s1 = t.t1.clone();
    let mut ells = Vec::new();
    for row in (0..lambda.len()).rev() {
        if lambda.part(row) > t.nu.part(row) {
            let (smaller, value) = reverse_row_insert(&s1, row)?;
            s1 = smaller;
            ells.push(value);
        }
    }
    if ells.windows(2).any(|w| w[0] >= w[1]) {
        return Err(not_in_image("popped ℓ-sequence is not increasing"));
    }

    let mu = t.t2.shape();
    let mut s2 = t.t2.clone();
    let mut ms_desc = Vec::new();
    for row in (0..mu.len()).rev() {
        if mu.part(row) > t.nu.part(row) {
            let (smaller, value) = reverse_column_insert(&s2, mu.part(row) - 1)?;
            s2 = smaller;
            ms_desc.push(value);
        }
    }
    if ms_desc.windows(2).any(|w| w[0] <= w[1]) {
        return Err(not_in_image("popped m-sequence is not decreasing"));
    }
    if s1.shape() != s2.shape() || s1.shape() != t.nu {
        return Err(not_in_image("residual tableaux do not have shape nu"));
    }

    let sigma = rs_inverse(&s1, &s2)?;
    let mut word = alloc::vec![0usize; n];
    for &(j, i) in sigma.pairs() {
        word[j as usize - 1] = i as usize;
    }
    let tau = PartialPermutation::new(word)?;
    if triple(&tau) != *t {
        return Err(internal!("reconstructed {tau} does not reproduce the triple"));
    }
    Ok(tau)
}

fn check_triangle_inputs(t1: &Tableau, t2: &Tableau, ells: &[usize], ms: &[usize], n: usize) -> Result<()> {
    if t1.shape() != t2.shape() {
        return Err(domain!("T1 and T2 have shapes {} and {}", t1.shape(), t2.shape()));
    }
    if ells.len() != ms.len() {
        return Err(domain!("ells and ms have lengths {} and {}", ells.len(), ms.len()));
    }
    for (name, seq, t) in [("ells", ells, t1), ("ms", ms, t2)] {
        if seq.windows(2).any(|w| w[0] >= w[1]) {
            return Err(domain!("{name} must be strictly increasing"));
        }
        if let Some(v) = seq.iter().find(|&&v| t.contains_entry(v as i64)) {
            return Err(domain!("{name} value {v} is already an entry of the tableau"));
        }
        if seq.iter().any(|&v| v == 0 || v > n) {
            return Err(domain!("{name} values must lie in 1..={n}"));
        }
    }
    let max_entry = t1.entries().into_iter().chain(t2.entries()).max().unwrap_or(0);
    if max_entry > n as i64 {
        return Err(domain!("tableau entry {max_entry} exceeds n = {n}"));
    }
    Ok(())
}

/// The triangle operation `column(m) * T2 △ T1 * column(ℓ)`.
///
/// Computes `T̂1 = T1 ← ℓ_s ← … ← ℓ_1`, pads `T2` on the new boxes with
/// `n+1, …, n+s` from top to bottom, column-inserts `m_1, …, m_s`, and returns
/// the skew tableau of shape `shape(T̄2) ∖ (1^s)` that rectifies to `T̂1`.
/// The skew tableau is found by reverse jeu de taquin from `T̂1`, trying the
/// orders in which the outer boxes can be added.
pub fn triangle(t1: &Tableau, t2: &Tableau, ells: &[usize], ms: &[usize], n: usize) -> Result<SkewTableau> {
    check_triangle_inputs(t1, t2, ells, ms, n)?;
    let s = ells.len();
    let lambda = t1.shape();
    let hat1 = star_column_right(t1, ells)?;
    let hat_shape = hat1.shape();

    let mut hat2_rows = t2.clone().into_rows();
    let mut label = n as i64;
    for i in 0..hat_shape.len() {
        if hat_shape.part(i) > lambda.part(i) {
            label += 1;
            if i == hat2_rows.len() {
                hat2_rows.push(Vec::new());
            }
            hat2_rows[i].push(label);
        }
    }
    let hat2 = Tableau::new(hat2_rows).map_err(|e| internal!("padded T2 is not a tableau: {e}"))?;
    let bar2 = star_column_left(ms, &hat2)?;
    let bar_shape = bar2.shape();
    if !bar_shape.contains(&hat_shape) || bar_shape.size() != hat_shape.size() + s {
        return Err(internal!("shape {bar_shape} does not extend {hat_shape} by {s} boxes"));
    }

    let extra = bar_shape.skew_cells(&hat_shape);
    let start = SkewTableau::from_tableau(&hat1);
    let found = search_reverse_slides(&start, &extra, 0)
        .ok_or_else(|| internal!("no skew filling of {bar_shape} ∖ (1^{s}) rectifies to {hat1}"))?;
    if found.outer() != &bar_shape || found.inner() != &Partition::column(s) || rectify(&found) != hat1 {
        return Err(internal!("triangle search returned an inconsistent skew tableau"));
    }
    Ok(found)
}

/// Depth-first search over the order of reverse slides; after `step` slides the
/// inner shape must be the column `(1^step)`.
fn search_reverse_slides(current: &SkewTableau, remaining: &[(usize, usize)], step: usize) -> Option<SkewTableau> {
    if remaining.is_empty() {
        return Some(current.clone());
    }
    let outer = current.outer();
    for (k, &(i, j)) in remaining.iter().enumerate() {
        let addable = outer.part(i) == j && (i == 0 || outer.part(i - 1) > j);
        if !addable {
            continue;
        }
        let (next, vacated) = reverse_slides(current, &[i]);
        if vacated[0] != step || next.inner().part(step) != 1 {
            continue;
        }
        let mut rest = remaining.to_vec();
        rest.remove(k);
        if let Some(found) = search_reverse_slides(&next, &rest, step + 1) {
            return Some(found);
        }
    }
    None
}

/// The triangle via the Robinson-Schensted tableau of the extended bijection
/// `m_t ↦ -t`, `j_k ↦ i_k`, `n+t ↦ ℓ_{s-t+1}`, with the boxes of `-1, …, -s` erased.
pub fn triangle_rs_erasure(sigma: &Bijection, ells: &[usize], ms: &[usize], n: usize) -> Result<SkewTableau> {
    let (p, q) = rs_pair(sigma);
    check_triangle_inputs(&p, &q, ells, ms, n)?;
    let s = ells.len();
    let mut pairs: Vec<(i64, i64)> = sigma.pairs().to_vec();
    for (t, &m) in ms.iter().enumerate() {
        pairs.push((m as i64, -(t as i64 + 1)));
    }
    for t in 1..=s {
        pairs.push(((n + t) as i64, ells[s - t] as i64));
    }
    let w = Bijection::new(pairs)?;
    let (big, _) = rs_pair(&w);
    let mut cells: Vec<Vec<Option<i64>>> = big.rows().iter().map(|r| r.iter().map(|&e| Some(e)).collect()).collect();
    for (row, cell_row) in cells.iter_mut().enumerate() {
        if let Some(first) = cell_row.first_mut() {
            if first.is_some_and(|e| e < 0) {
                *first = None;
            } else if row < s {
                return Err(internal!("negative entries do not fill the first {s} boxes of column 1"));
            }
        }
        if cell_row.iter().skip(1).flatten().any(|&e| e < 0) {
            return Err(internal!("negative entry outside the first column"));
        }
    }
    SkewTableau::from_cells(cells)
}

/// Signed column counts `(c_k[+], c_k[-])` of `Ξ_s((τ; 1_n))` for `k = 1..=K`,
/// where `K` is the first column at which both counts reach `n`.
pub fn xi_s_column_counts(tau: &PartialPermutation) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = tau.n();
    let d = decompose(tau);
    let s = d.corank();
    let (p, q) = rs_of(&d);
    let lambda = star_column_right(&p, &d.l)?.shape();
    let mu = star_column_left(&d.m, &q)?.shape();
    let skew = triangle(&p, &q, &d.l, &d.m, n)?;
    let nu = p.shape();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for k in 1..=2 * n + 2 {
        let (cp, cm) = if k % 2 == 0 {
            (lambda.boxes_in_first_columns(k), mu.boxes_in_first_columns(k))
        } else {
            (skew.boxes_in_first_columns(k), s + nu.boxes_in_first_columns(k))
        };
        plus.push(cp);
        minus.push(cm);
        if cp == n && cm == n {
            return Ok((plus, minus));
        }
    }
    Err(internal!("column counts for {tau} never reach {n}"))
}

/// `Ξ_s` on the orbit of `(τ; 1_n)`, reconstructed from its signed column counts.
pub fn xi_s_generic(tau: &PartialPermutation) -> Result<SignedYoungDiagram> {
    let (plus, minus) = xi_s_column_counts(tau)?;
    signed_from_column_counts(&plus, &minus).map_err(|e| internal!("reconstruction of Ξ_s({tau}) failed: {e}"))
}

/// Partitions `ν` with both `λ ∖ ν` and `μ ∖ ν` column strips.
pub fn admissible_inner_shapes(lambda: &Partition, mu: &Partition) -> Vec<Partition> {
    lambda.column_strip_subpartitions().into_iter().filter(|nu| mu.is_column_strip_over(nu)).collect()
}

/// Every triple with `shape(T1) = λ` and `shape(T2) = μ`.
pub fn fiber_enumeration(lambda: &Partition, mu: &Partition, n: usize) -> Result<Vec<Triple>> {
    if lambda.size() != n || mu.size() != n {
        return Err(domain!("{lambda} and {mu} must both be partitions of {n}"));
    }
    let t1s = enumerate_standard_tableaux(lambda)?;
    let t2s = enumerate_standard_tableaux(mu)?;
    let mut out = Vec::new();
    for nu in admissible_inner_shapes(lambda, mu) {
        for t1 in &t1s {
            for t2 in &t2s {
                out.push(Triple { t1: t1.clone(), t2: t2.clone(), nu: nu.clone() });
            }
        }
    }
    Ok(out)
}

/// `Σ_r m_r(λ, μ) · |STab(λ)| · |STab(μ)|`.
pub fn fiber_count_formula(lambda: &Partition, mu: &Partition) -> Result<usize> {
    if lambda.size() != mu.size() {
        return Err(domain!("{lambda} and {mu} have different sizes"));
    }
    let m: usize = admissible_inner_shapes(lambda, mu).len();
    Ok(m * enumerate_standard_tableaux(lambda)?.len() * enumerate_standard_tableaux(mu)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed::duplicate_signed;
    use alloc::vec;

    fn pp(w: &[usize]) -> PartialPermutation {
        PartialPermutation::new(w.to_vec()).unwrap()
    }

    fn t(rows: &[&[i64]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&pp(&[1, 2, 3])), (part(&[3]), part(&[3])));
        assert_eq!(phi(&pp(&[0, 1, 2])), (part(&[3]), part(&[3])));
        assert_eq!(phi(&pp(&[3, 0, 0])), (part(&[1, 1, 1]), part(&[1, 1, 1])));
        assert_eq!(xi_k_generic(&pp(&[0, 3, 0])), (part(&[1, 1, 1]), part(&[2, 1])));
    }

    #[test]
    fn triple_examples() {
        let x = triple(&pp(&[1, 3, 2]));
        assert_eq!((x.t1.clone(), x.t2.clone(), x.nu.clone()), (t(&[&[1, 2], &[3]]), t(&[&[1, 2], &[3]]), part(&[2, 1])));
        let x = triple(&pp(&[0, 1, 2]));
        assert_eq!((x.t1, x.t2, x.nu), (t(&[&[1, 2, 3]]), t(&[&[1, 2, 3]]), part(&[2])));
        let x = triple(&pp(&[0, 0, 0]));
        assert_eq!((x.t1, x.t2, x.nu), (t(&[&[1], &[2], &[3]]), t(&[&[1], &[2], &[3]]), Partition::empty()));
    }

    #[test]
    fn triple_inverse_examples() {
        let x = Triple { t1: t(&[&[1, 2, 3]]), t2: t(&[&[1, 3], &[2]]), nu: part(&[2]) };
        assert_eq!(triple_inverse(&x).unwrap(), pp(&[1, 0, 2]));
        let x = Triple { t1: t(&[&[1], &[2], &[3]]), t2: t(&[&[1], &[2], &[3]]), nu: Partition::empty() };
        assert_eq!(triple_inverse(&x).unwrap(), pp(&[0, 0, 0]));
        let bad = Triple { t1: t(&[&[1, 2, 3]]), t2: t(&[&[1, 2, 3]]), nu: part(&[1]) };
        assert!(matches!(triple_inverse(&bad), Err(Error::Domain(_))));
    }

    #[test]
    fn triangle_example() {
        let t1 = t(&[&[1, 3], &[4, 6], &[5]]);
        let t2 = t(&[&[2, 4], &[3, 6], &[7]]);
        let s = triangle(&t1, &t2, &[2, 7], &[1, 5], 7).unwrap();
        let expected = SkewTableau::new(part(&[4, 2, 2, 1]), part(&[1, 1]), vec![vec![1, 2, 7], vec![3], vec![4, 6], vec![5]]).unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn triangle_trivial_and_shifted() {
        let t1 = t(&[&[1, 3], &[2]]);
        let s = triangle(&t1, &t(&[&[1, 2], &[3]]), &[], &[], 3).unwrap();
        assert_eq!(s, SkewTableau::from_tableau(&t1));
        for n in 2..=7 {
            let row: Vec<i64> = (1..n as i64).collect();
            let shifted: Vec<i64> = (2..=n as i64).collect();
            let s = triangle(&Tableau::new(vec![row]).unwrap(), &Tableau::new(vec![shifted]).unwrap(), &[n], &[1], n).unwrap();
            let expected = SkewTableau::new(part(&[n + 1]), part(&[1]), vec![(1..=n as i64).collect()]).unwrap();
            assert_eq!(s, expected);
        }
    }

    #[test]
    fn xi_s_examples() {
        let d = |rows: &[&str]| SignedYoungDiagram::parse(rows).unwrap();
        assert_eq!(xi_s_generic(&pp(&[1, 2, 3])).unwrap(), d(&["+-+", "-+-"]));
        assert_eq!(xi_s_generic(&pp(&[0, 1, 2])).unwrap(), d(&["-+-+", "-+"]));
        assert_eq!(xi_s_generic(&pp(&[0, 0, 0])).unwrap(), d(&["-+", "-+", "-+"]));
        for w in [[2, 3, 1], [3, 2, 1], [1, 3, 2]] {
            let tau = pp(&w);
            assert_eq!(xi_s_generic(&tau).unwrap(), duplicate_signed(&phi(&tau).0));
        }
    }

    #[test]
    fn fiber_examples() {
        assert_eq!(fiber_enumeration(&part(&[2, 1]), &part(&[2, 1]), 3).unwrap().len(), 16);
        for n in 1..=5 {
            assert_eq!(fiber_enumeration(&part(&[n]), &part(&[n]), n).unwrap().len(), 2);
        }
        assert_eq!(fiber_enumeration(&part(&[3]), &part(&[1, 1, 1]), 3).unwrap().len(), 0);
        assert!(fiber_enumeration(&part(&[3]), &part(&[2]), 3).is_err());
    }
}
