//! Generic conormal fibers over `F_p` and the nilpotent types of their random points.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, internal, Error, Result};
use crate::field::{check_prime, FiberBasis, PrimeFieldMatrix, DEFAULT_PRIME};
use crate::orbit::OrbitRep;
use crate::partition::Partition;
use crate::perm::{decompose, PartialPermutation};
use crate::signed::{signed_from_column_counts, SignedYoungDiagram};

/// Prime, number of random samples and base seed for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub prime: u64,
    pub trials: usize,
    pub seed: u64,
    /// Extra attempts with shifted seeds after a genericity failure.
    pub retries: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { prime: DEFAULT_PRIME, trials: 7, seed: 0x5eed_1234, retries: 3 }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        check_prime(self.prime)?;
        if self.trials == 0 {
            return Err(domain!("trials must be at least 1"));
        }
        Ok(())
    }

    /// The same configuration with the seed advanced for retry `attempt`.
    pub fn for_attempt(&self, attempt: usize) -> OracleConfig {
        OracleConfig { seed: mix(self.seed, 0x9e37_79b9_7f4a_7c15u64.wrapping_mul(attempt as u64 + 1)), ..*self }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn mix(a: u64, b: u64) -> u64 {
    splitmix(a ^ splitmix(b))
}

fn hash_words(tag: u64, words: &[&[usize]]) -> u64 {
    let mut h = splitmix(tag);
    for w in words {
        h = mix(h, w.len() as u64);
        for &v in *w {
            h = mix(h, v as u64);
        }
    }
    h
}

fn rng_for(cfg: &OracleConfig, key: u64, trial: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(mix(cfg.seed, key), trial as u64))
}

/// `{y ∈ M_n : τy and yτ strictly upper triangular}`.
pub fn conormal_fiber_matrix_pair(tau: &PartialPermutation, p: u64) -> Result<FiberBasis> {
    check_prime(p)?;
    let n = tau.n();
    let t = tau.to_matrix(p);
    FiberBasis::solve(p, n, n, |y| {
        let ty = t.mul(y)?;
        let yt = y.mul(&t)?;
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..=a {
                out.push(ty.get(a, b));
                out.push(yt.get(a, b));
            }
        }
        Ok(out)
    })
}

/// Matrix positions `(row, column)`, 1-based.
pub type PositionSet = BTreeSet<(usize, usize)>;

/// The sets `D1`, `D2` of positions supporting generic `τy` and `yτ`.
pub fn conormal_structural_sets(tau: &PartialPermutation) -> (PositionSet, PositionSet) {
    let d = decompose(tau);
    let r = d.rank();
    let mut d1 = BTreeSet::new();
    let mut d2 = BTreeSet::new();
    for k in 0..r {
        for &l in &d.l {
            if d.i[k] < l {
                d1.insert((d.i[k], l));
            }
        }
        for &m in &d.m {
            if m < d.j[k] {
                d2.insert((m, d.j[k]));
            }
        }
        for t in 0..r {
            if d.i[k] < d.i[t] && d.j[k] < d.j[t] {
                d1.insert((d.i[k], d.i[t]));
                d2.insert((d.j[k], d.j[t]));
            }
        }
    }
    (d1, d2)
}

/// `{x ∈ M_2n : xω = 0, im x ⊆ im ω, x₁ and x₄ strictly upper triangular}`.
pub fn conormal_fiber_double_flag(omega: &OrbitRep, p: u64) -> Result<FiberBasis> {
    check_prime(p)?;
    let n = omega.n();
    let w = omega.to_matrix(p);
    let annihilator = w.transpose().nullspace_vectors();
    let a = PrimeFieldMatrix::from_fn(p, annihilator.len(), 2 * n, |i, j| annihilator[i][j]);
    FiberBasis::solve(p, 2 * n, 2 * n, |x| {
        let mut out = x.mul(&w)?.to_u64_vec();
        out.extend(a.mul(x)?.to_u64_vec());
        for r in 0..n {
            for c in 0..=r {
                out.push(x.get(r, c));
                out.push(x.get(n + r, n + c));
            }
        }
        Ok(out)
    })
}

/// The four `n × n` blocks `x₁, x₂, x₃, x₄` of a `2n × 2n` matrix.
pub fn blocks(x: &PrimeFieldMatrix) -> [PrimeFieldMatrix; 4] {
    let n = x.rows() / 2;
    [x.submatrix(0, n, 0, n), x.submatrix(0, n, n, 2 * n), x.submatrix(n, 2 * n, 0, n), x.submatrix(n, 2 * n, n, 2 * n)]
}

/// `rank(x^k)` for `k = 0..=dim`.
fn power_ranks(x: &PrimeFieldMatrix) -> Result<Vec<usize>> {
    let dim = x.rows();
    let mut ranks = Vec::with_capacity(dim + 1);
    let mut power = PrimeFieldMatrix::identity(x.prime(), dim);
    ranks.push(dim);
    for _ in 0..dim {
        power = power.mul(x)?;
        ranks.push(power.rank());
    }
    Ok(ranks)
}

/// Jordan type from `rank(x^k)`, `k = 0..=dim`; `None` if the sequence is not
/// that of a nilpotent matrix.
fn partition_from_ranks(ranks: &[usize]) -> Option<Partition> {
    if ranks.last() != Some(&0) {
        return None;
    }
    let ge: Vec<usize> = ranks.windows(2).map(|w| w[0].checked_sub(w[1])).collect::<Option<_>>()?;
    if ge.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    let mut parts = Vec::new();
    for (k, w) in ge.windows(2).enumerate() {
        parts.extend(core::iter::repeat_n(k + 1, w[0] - w[1]));
    }
    if let Some(&last) = ge.last() {
        parts.extend(core::iter::repeat_n(ge.len(), last));
    }
    parts.reverse();
    Partition::new(parts).ok()
}

/// Jordan type of a nilpotent square matrix.
pub fn jordan_type(x: &PrimeFieldMatrix) -> Result<Partition> {
    if !x.is_square() {
        return Err(domain!("jordan_type needs a square matrix, got {}x{}", x.rows(), x.cols()));
    }
    let ranks = power_ranks(x)?;
    partition_from_ranks(&ranks).ok_or_else(|| domain!("matrix is not nilpotent"))
}

/// `(rank of the first n columns of X^k, rank of the last n columns)`, `k = 0..=2n`,
/// for `X = [[0, y2], [y3, 0]]`.
fn signed_ranks(y2: &PrimeFieldMatrix, y3: &PrimeFieldMatrix) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = y2.rows();
    if !y2.is_square() || !y3.is_square() || y3.rows() != n {
        return Err(domain!("signed_type needs two n x n blocks"));
    }
    let zero = PrimeFieldMatrix::zeros(y2.prime(), n, n);
    let x = PrimeFieldMatrix::from_blocks(&zero, y2, y3, &zero)?;
    let mut power = PrimeFieldMatrix::identity(y2.prime(), 2 * n);
    let mut plus = alloc::vec![n];
    let mut minus = alloc::vec![n];
    for _ in 0..2 * n {
        power = power.mul(&x)?;
        plus.push(power.submatrix(0, 2 * n, 0, n).rank());
        minus.push(power.submatrix(0, 2 * n, n, 2 * n).rank());
    }
    Ok((plus, minus))
}

fn signed_from_ranks(n: usize, plus: &[usize], minus: &[usize]) -> Result<SignedYoungDiagram> {
    if plus.last() != Some(&0) || minus.last() != Some(&0) {
        return Err(domain!("[[0, y2], [y3, 0]] is not nilpotent"));
    }
    let cp: Vec<usize> = plus[1..].iter().map(|r| n - r).collect();
    let cm: Vec<usize> = minus[1..].iter().map(|r| n - r).collect();
    signed_from_column_counts(&cp, &cm)
}

/// Signed Young diagram of the orbit of `[[0, y2], [y3, 0]]`.
pub fn signed_type(y2: &PrimeFieldMatrix, y3: &PrimeFieldMatrix) -> Result<SignedYoungDiagram> {
    let (plus, minus) = signed_ranks(y2, y3)?;
    signed_from_ranks(y2.rows(), &plus, &minus).map_err(|e| match e {
        Error::InconsistentCounts(msg) => internal!("kernel counts are inconsistent: {msg}"),
        other => other,
    })
}

fn merge_max(acc: &mut Vec<usize>, new: &[usize]) {
    if acc.is_empty() {
        acc.extend_from_slice(new);
    } else {
        for (a, &b) in acc.iter_mut().zip(new) {
            *a = (*a).max(b);
        }
    }
}

fn undecided_partition(ranks: &[usize], what: &str) -> Result<Partition> {
    partition_from_ranks(ranks)
        .ok_or_else(|| Error::GenericityUndecided(alloc::format!("merged ranks {ranks:?} of {what} are not a Jordan profile")))
}

/// A random point of the fiber over `ω` for the given trial.
pub fn sample_double_flag(omega: &OrbitRep, fiber: &FiberBasis, cfg: &OracleConfig, trial: usize) -> PrimeFieldMatrix {
    let key = hash_words(0x0d0b, &[omega.tau1().word(), omega.tau2().word()]);
    fiber.sample(cfg.prime, &mut rng_for(cfg, key, trial))
}

/// A random point of `{y : τy, yτ strictly upper}` for the given trial.
pub fn sample_matrix_pair(tau: &PartialPermutation, fiber: &FiberBasis, cfg: &OracleConfig, trial: usize) -> PrimeFieldMatrix {
    let key = hash_words(0x0a1a, &[tau.word()]);
    fiber.sample(cfg.prime, &mut rng_for(cfg, key, trial))
}

/// Generic `(Ξ_k(ω), Ξ_s(ω))` estimated from `cfg.trials` random fiber points.
pub fn xi_oracle(omega: &OrbitRep, cfg: &OracleConfig) -> Result<((Partition, Partition), SignedYoungDiagram)> {
    cfg.validate()?;
    let n = omega.n();
    let fiber = conormal_fiber_double_flag(omega, cfg.prime)?;
    let (mut r1, mut r4, mut rp, mut rm) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for trial in 0..cfg.trials {
        let x = sample_double_flag(omega, &fiber, cfg, trial);
        let [x1, x2, x3, x4] = blocks(&x);
        merge_max(&mut r1, &power_ranks(&x1)?);
        merge_max(&mut r4, &power_ranks(&x4)?);
        let (plus, minus) = signed_ranks(&x2, &x3)?;
        merge_max(&mut rp, &plus);
        merge_max(&mut rm, &minus);
    }
    let xi_k = (undecided_partition(&r1, "x1")?, undecided_partition(&r4, "x4")?);
    let xi_s = signed_from_ranks(n, &rp, &rm)
        .map_err(|e| Error::GenericityUndecided(alloc::format!("merged signed ranks for {omega} do not reconstruct: {e}")))?;
    Ok((xi_k, xi_s))
}

/// Generic `(jordan_type(τy), jordan_type(yτ))` over the fiber of `τ`.
pub fn phi_oracle(tau: &PartialPermutation, cfg: &OracleConfig) -> Result<(Partition, Partition)> {
    cfg.validate()?;
    let t = tau.to_matrix(cfg.prime);
    let fiber = conormal_fiber_matrix_pair(tau, cfg.prime)?;
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for trial in 0..cfg.trials {
        let y = sample_matrix_pair(tau, &fiber, cfg, trial);
        merge_max(&mut left, &power_ranks(&t.mul(&y)?)?);
        merge_max(&mut right, &power_ranks(&y.mul(&t)?)?);
    }
    Ok((undecided_partition(&left, "τy")?, undecided_partition(&right, "yτ")?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const P: u64 = DEFAULT_PRIME;

    fn pp(w: &[usize]) -> PartialPermutation {
        PartialPermutation::new(w.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn rep(a: &[usize], b: &[usize]) -> OrbitRep {
        OrbitRep::new(pp(a), pp(b)).unwrap()
    }

    #[test]
    fn matrix_pair_fibers() {
        assert_eq!(conormal_fiber_matrix_pair(&pp(&[0, 0, 0]), P).unwrap().dim(), 9);
        assert_eq!(conormal_fiber_matrix_pair(&pp(&[1, 2]), P).unwrap().dim(), 1);
    }

    #[test]
    fn structural_sets() {
        let (d1, d2) = conormal_structural_sets(&pp(&[1, 2]));
        assert_eq!(d1, BTreeSet::from([(1, 2)]));
        assert_eq!(d2, BTreeSet::from([(1, 2)]));
        let (d1, d2) = conormal_structural_sets(&pp(&[0, 0]));
        assert!(d1.is_empty() && d2.is_empty());
        let all = BTreeSet::from([(1, 2), (1, 3), (2, 3)]);
        assert_eq!(conormal_structural_sets(&pp(&[0, 1, 2])), (all.clone(), all));
    }

    #[test]
    fn double_flag_fibers() {
        for n in 1..=3 {
            let id = PartialPermutation::identity(n);
            let w = OrbitRep::new(id.clone(), id).unwrap();
            assert_eq!(conormal_fiber_double_flag(&w, P).unwrap().dim(), n * (n - 1) / 2);
        }
        let f = conormal_fiber_double_flag(&rep(&[1], &[0]), P).unwrap();
        assert_eq!(f.dim(), 1);
        assert_eq!(f.basis()[0].to_signed_rows(), vec![vec![0, 1], vec![0, 0]]);
        let f = conormal_fiber_double_flag(&rep(&[0], &[1]), P).unwrap();
        assert_eq!(f.basis()[0].to_signed_rows(), vec![vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn jordan_types() {
        let block = PrimeFieldMatrix::from_rows(P, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]).unwrap();
        assert_eq!(jordan_type(&block).unwrap(), part(&[3]));
        assert_eq!(jordan_type(&PrimeFieldMatrix::zeros(P, 4, 4)).unwrap(), part(&[1, 1, 1, 1]));
        assert!(matches!(jordan_type(&PrimeFieldMatrix::identity(P, 2)), Err(Error::Domain(_))));
    }

    #[test]
    fn signed_types() {
        let z = PrimeFieldMatrix::zeros(P, 2, 2);
        assert_eq!(signed_type(&z, &z).unwrap(), SignedYoungDiagram::parse(&["+", "+", "-", "-"]).unwrap());
        let t = PrimeFieldMatrix::from_rows(P, &[vec![5]]).unwrap();
        let z1 = PrimeFieldMatrix::zeros(P, 1, 1);
        assert_eq!(signed_type(&t, &z1).unwrap(), SignedYoungDiagram::parse(&["+-"]).unwrap());
    }

    #[test]
    fn oracle_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(phi_oracle(&pp(&[1, 2, 3]), &cfg).unwrap(), (part(&[3]), part(&[3])));
        assert_eq!(phi_oracle(&pp(&[0, 0, 0]), &cfg).unwrap(), (part(&[1, 1, 1]), part(&[1, 1, 1])));
        assert_eq!(phi_oracle(&pp(&[0, 1, 2]), &cfg).unwrap(), (part(&[3]), part(&[3])));
        let (k, s) = xi_oracle(&rep(&[1, 2, 3], &[1, 2, 3]), &cfg).unwrap();
        assert_eq!(k, (part(&[3]), part(&[3])));
        assert_eq!(s, SignedYoungDiagram::parse(&["+-+", "-+-"]).unwrap());
        let (k, s) = xi_oracle(&rep(&[1], &[0]), &cfg).unwrap();
        assert_eq!((k, s), ((part(&[1]), part(&[1])), SignedYoungDiagram::parse(&["+-"]).unwrap()));
        let (k, s) = xi_oracle(&rep(&[0], &[1]), &cfg).unwrap();
        assert_eq!((k, s), ((part(&[1]), part(&[1])), SignedYoungDiagram::parse(&["-+"]).unwrap()));
    }

    #[test]
    fn sampling_is_reproducible() {
        let cfg = OracleConfig::default();
        let tau = pp(&[0, 2, 1]);
        let f = conormal_fiber_matrix_pair(&tau, P).unwrap();
        assert_eq!(sample_matrix_pair(&tau, &f, &cfg, 3), sample_matrix_pair(&tau, &f, &cfg, 3));
        assert_ne!(sample_matrix_pair(&tau, &f, &cfg, 3), sample_matrix_pair(&tau, &f, &cfg, 4));
    }
}
