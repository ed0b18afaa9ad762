//! Orbits of the double flag variety, Grassmannian canonical forms and the
//! global analysis of the exotic moment map image.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, internal, Error, Result};
use crate::field::{check_prime, FiberBasis, PrimeFieldMatrix};
use crate::maps::{phi, xi_s_generic};
use crate::oracle::{xi_oracle, OracleConfig};
use crate::partition::{square_zero_condition, Partition};
use crate::perm::{upper_triangular_reduce, PartialPermutation};
use crate::signed::{dominance_signed, sign_prefix_partitions, Sign, SignedRow, SignedYoungDiagram};

/// Default largest `n` for [`enumerate_orbit_reps`].
pub const DEFAULT_ORBIT_BOUND: usize = 5;

/// A column of the stacked matrix `(τ1; τ2)`, by its nonzero rows (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Column {
    Plus(usize),
    Both(usize, usize),
    Minus(usize),
}

impl Column {
    pub fn plus(self) -> Option<usize> {
        match self {
            Column::Plus(i) | Column::Both(i, _) => Some(i),
            Column::Minus(_) => None,
        }
    }

    pub fn minus(self) -> Option<usize> {
        match self {
            Column::Minus(j) | Column::Both(_, j) => Some(j),
            Column::Plus(_) => None,
        }
    }
}

/// `ω = (τ1; τ2)` with disjoint kernels and columns in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitRep {
    tau1: PartialPermutation,
    tau2: PartialPermutation,
}

impl OrbitRep {
    /// Canonicalizes the column order of `(τ1; τ2)`.
    pub fn new(tau1: PartialPermutation, tau2: PartialPermutation) -> Result<Self> {
        if tau1.n() != tau2.n() {
            return Err(domain!("tau1 and tau2 have sizes {} and {}", tau1.n(), tau2.n()));
        }
        let columns = tau1
            .word()
            .iter()
            .zip(tau2.word())
            .enumerate()
            .map(|(c, (&a, &b))| match (a, b) {
                (0, 0) => Err(domain!("column {} lies in both kernels", c + 1)),
                (a, 0) => Ok(Column::Plus(a)),
                (0, b) => Ok(Column::Minus(b)),
                (a, b) => Ok(Column::Both(a, b)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_columns(columns)
    }

    /// The class of `(τ; 1_n)`.
    pub fn from_tau(tau: &PartialPermutation) -> Self {
        Self::new(tau.clone(), PartialPermutation::identity(tau.n())).expect("identity has trivial kernel")
    }

    /// Builds the representative from a set of columns with distinct row indices.
    pub fn from_columns(mut columns: Vec<Column>) -> Result<Self> {
        columns.sort_unstable();
        let n = columns.len();
        let word = |f: fn(Column) -> Option<usize>| PartialPermutation::new(columns.iter().map(|&c| f(c).unwrap_or(0)).collect());
        let tau1 = word(Column::plus)?;
        let tau2 = word(Column::minus)?;
        debug_assert_eq!(tau1.n(), n);
        Ok(OrbitRep { tau1, tau2 })
    }

    pub fn n(&self) -> usize {
        self.tau1.n()
    }

    pub fn tau1(&self) -> &PartialPermutation {
        &self.tau1
    }

    pub fn tau2(&self) -> &PartialPermutation {
        &self.tau2
    }

    pub fn columns(&self) -> Vec<Column> {
        self.tau1
            .word()
            .iter()
            .zip(self.tau2.word())
            .map(|(&a, &b)| match (a, b) {
                (a, 0) => Column::Plus(a),
                (0, b) => Column::Minus(b),
                (a, b) => Column::Both(a, b),
            })
            .collect()
    }

    /// The stacked `2n × n` matrix.
    pub fn to_matrix(&self, p: u64) -> PrimeFieldMatrix {
        self.tau1.to_matrix(p).vstack(&self.tau2.to_matrix(p)).expect("blocks have equal widths")
    }

    /// `τ` with `self` equal to the class of `(τ; 1_n)`, if there is one.
    pub fn as_tau_form(&self) -> Option<PartialPermutation> {
        if !self.tau2.is_permutation() {
            return None;
        }
        let mut word = alloc::vec![0; self.n()];
        for c in self.columns() {
            word[c.minus()? - 1] = c.plus().unwrap_or(0);
        }
        PartialPermutation::new(word).ok()
    }
}

impl fmt::Display for OrbitRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.tau1, self.tau2)
    }
}

/// One representative per orbit class, using [`DEFAULT_ORBIT_BOUND`].
pub fn enumerate_orbit_reps(n: usize) -> Result<Vec<OrbitRep>> {
    enumerate_orbit_reps_bounded(n, DEFAULT_ORBIT_BOUND)
}

pub fn enumerate_orbit_reps_bounded(n: usize, bound: usize) -> Result<Vec<OrbitRep>> {
    if n > bound {
        return Err(Error::Resource(alloc::format!("n = {n} exceeds the orbit enumeration bound {bound}")));
    }
    let mut out = Vec::new();
    let mut columns = Vec::new();
    let mut minus_used = alloc::vec![false; n + 1];
    choose_plus(n, 1, &mut columns, &mut minus_used, &mut out);
    let mut reps = out.into_iter().map(OrbitRep::from_columns).collect::<Result<Vec<_>>>()?;
    reps.sort();
    Ok(reps)
}

fn choose_plus(n: usize, i: usize, columns: &mut Vec<Column>, minus_used: &mut [bool], out: &mut Vec<Vec<Column>>) {
    if columns.len() > n {
        return;
    }
    if i > n {
        let free: Vec<usize> = (1..=n).filter(|&j| !minus_used[j]).collect();
        choose_minus(&free, 0, n - columns.len(), columns, out);
        return;
    }
    choose_plus(n, i + 1, columns, minus_used, out);
    columns.push(Column::Plus(i));
    choose_plus(n, i + 1, columns, minus_used, out);
    columns.pop();
    for j in 1..=n {
        if !minus_used[j] {
            minus_used[j] = true;
            columns.push(Column::Both(i, j));
            choose_plus(n, i + 1, columns, minus_used, out);
            columns.pop();
            minus_used[j] = false;
        }
    }
}

fn choose_minus(free: &[usize], start: usize, need: usize, columns: &mut Vec<Column>, out: &mut Vec<Vec<Column>>) {
    if need == 0 {
        out.push(columns.clone());
        return;
    }
    for k in start..free.len() {
        if free.len() - k < need {
            break;
        }
        columns.push(Column::Minus(free[k]));
        choose_minus(free, k + 1, need - 1, columns, out);
        columns.pop();
    }
}

fn require_full_rank(a: &PrimeFieldMatrix) -> Result<usize> {
    if !a.rows().is_multiple_of(2) || a.rows() != 2 * a.cols() {
        return Err(domain!("expected a 2n x n matrix, got {}x{}", a.rows(), a.cols()));
    }
    let n = a.cols();
    if a.rank() != n {
        return Err(domain!("matrix has rank {} < n = {n}", a.rank()));
    }
    Ok(n)
}

/// `dim (V_i⁺ + V_j⁻) ∩ span(a)` for `i, j ∈ 0..=n`.
pub fn grassmann_invariants(a: &PrimeFieldMatrix) -> Result<Vec<Vec<usize>>> {
    let n = require_full_rank(a)?;
    let p = a.prime();
    Ok((0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    let u = PrimeFieldMatrix::from_fn(p, 2 * n, i + j, |r, c| {
                        let target = if c < i { c } else { n + c - i };
                        u64::from(r == target)
                    });
                    let joined = u.hstack(a).expect("same height");
                    i + j + n - joined.rank()
                })
                .collect()
        })
        .collect())
}

/// The representative `ω` with `B_K · span(a) = B_K · span(ω)`.
pub fn canonicalize_grassmann_point(a: &PrimeFieldMatrix) -> Result<OrbitRep> {
    let n = require_full_rank(a)?;
    let p = a.prime();
    let mut m = a.clone();
    upper_triangular_reduce(&mut m, 0..n, None)?;

    let pivot = |m: &PrimeFieldMatrix, c: usize| (0..n).find(|&r| m.get(r, c) != 0);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&c| pivot(&m, c).map_or((0, 0), |r| (1, r)));
    let mut permuted = PrimeFieldMatrix::from_fn(p, 2 * n, n, |r, c| m.get(r, order[c]));
    upper_triangular_reduce(&mut permuted, n..2 * n, Some(0..n))?;

    let top = PartialPermutation::from_matrix(&permuted.submatrix(0, n, 0, n)).map_err(|e| internal!("top block did not reduce: {e}"))?;
    let bottom =
        PartialPermutation::from_matrix(&permuted.submatrix(n, 2 * n, 0, n)).map_err(|e| internal!("bottom block did not reduce: {e}"))?;
    let omega = OrbitRep::new(top, bottom).map_err(|e| internal!("reduced point is degenerate: {e}"))?;
    if grassmann_invariants(&omega.to_matrix(p))? != grassmann_invariants(a)? {
        return Err(internal!("invariants of {omega} differ from the input"));
    }
    Ok(omega)
}

/// The dominance-maximal diagrams `Λ₊, Λ₀, Λ₋` (two one-row diagrams for `n = 1`).
pub fn component_diagrams(n: usize) -> Vec<SignedYoungDiagram> {
    let d = |rows: Vec<SignedRow>| SignedYoungDiagram::new(rows).expect("balanced");
    let row = SignedRow::new;
    let (plus, minus) = (Sign::Plus, Sign::Minus);
    let mut out = match n {
        0 => alloc::vec![d(Vec::new())],
        1 => alloc::vec![d(alloc::vec![row(2, plus)]), d(alloc::vec![row(2, minus)])],
        _ if n.is_multiple_of(2) => alloc::vec![
            d(alloc::vec![row(n, plus), row(n, plus)]),
            d(alloc::vec![row(n, plus), row(n, minus)]),
            d(alloc::vec![row(n, minus), row(n, minus)]),
        ],
        _ => alloc::vec![
            d(alloc::vec![row(n + 1, plus), row(n - 1, plus)]),
            d(alloc::vec![row(n, plus), row(n, minus)]),
            d(alloc::vec![row(n + 1, minus), row(n - 1, minus)]),
        ],
    };
    out.sort();
    out
}

/// How a class image was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Combinatorial,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Combinatorial => "combinatorial",
            Method::Oracle => "oracle",
        }
    }
}

/// The image of one orbit class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassImage {
    pub omega: OrbitRep,
    pub xi_k: Option<(Partition, Partition)>,
    pub xi_s: Option<SignedYoungDiagram>,
    pub method: Method,
    /// Set when the oracle could not decide genericity.
    pub flag: Option<String>,
}

/// Outcomes of the structural checks on the image set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ImageChecks {
    pub maximal_matches_components: bool,
    pub square_zero: bool,
    pub column_bound: bool,
    pub swap_closed: bool,
    pub regular_xi_k_attained: bool,
    pub flagged: usize,
}

impl ImageChecks {
    pub fn all_pass(&self) -> bool {
        self.maximal_matches_components
            && self.square_zero
            && self.column_bound
            && self.swap_closed
            && self.regular_xi_k_attained
            && self.flagged == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageReport {
    pub n: usize,
    pub classes: Vec<ClassImage>,
    pub maximal: Vec<SignedYoungDiagram>,
    pub checks: ImageChecks,
}

fn class_image(omega: &OrbitRep, cfg: &OracleConfig) -> Result<ClassImage> {
    if let Some(tau) = omega.as_tau_form() {
        return Ok(ClassImage {
            omega: omega.clone(),
            xi_k: Some(phi(&tau)),
            xi_s: Some(xi_s_generic(&tau)?),
            method: Method::Combinatorial,
            flag: None,
        });
    }
    let mut last = None;
    for attempt in 0..=cfg.retries {
        match xi_oracle(omega, &cfg.for_attempt(attempt)) {
            Ok((k, s)) => return Ok(ClassImage { omega: omega.clone(), xi_k: Some(k), xi_s: Some(s), method: Method::Oracle, flag: None }),
            Err(Error::GenericityUndecided(msg)) => last = Some(msg),
            Err(e) => return Err(e),
        }
    }
    Ok(ClassImage { omega: omega.clone(), xi_k: None, xi_s: None, method: Method::Oracle, flag: last })
}

/// Dominance-maximal elements of a set of diagrams of one signature.
pub fn maximal_diagrams(images: &BTreeSet<SignedYoungDiagram>) -> Result<Vec<SignedYoungDiagram>> {
    let mut out = Vec::new();
    for a in images {
        let mut dominated = false;
        for b in images {
            if a != b && dominance_signed(a, b)? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            out.push(a.clone());
        }
    }
    out.sort();
    Ok(out)
}

/// `Ξ_s` and `Ξ_k` over every orbit class, the maximal images and the structural checks.
pub fn image_analysis(n: usize, cfg: &OracleConfig) -> Result<ImageReport> {
    cfg.validate()?;
    let classes = enumerate_orbit_reps(n)?.iter().map(|omega| class_image(omega, cfg)).collect::<Result<Vec<_>>>()?;
    let images: BTreeSet<SignedYoungDiagram> = classes.iter().filter_map(|c| c.xi_s.clone()).collect();
    let maximal = maximal_diagrams(&images)?;
    let bound = if n.is_multiple_of(2) { n } else { n + 1 };
    let checks = ImageChecks {
        maximal_matches_components: maximal == component_diagrams(n),
        square_zero: images.iter().all(|d| {
            let (a, b) = sign_prefix_partitions(d);
            square_zero_condition(&a) && square_zero_condition(&b)
        }),
        column_bound: images.iter().all(|d| d.columns() <= bound),
        swap_closed: images.iter().all(|d| images.contains(&d.swap_signs())),
        regular_xi_k_attained: classes.iter().any(|c| c.xi_k == Some((Partition::row(n), Partition::row(n)))),
        flagged: classes.iter().filter(|c| c.flag.is_some()).count(),
    };
    Ok(ImageReport { n, classes, maximal, checks })
}

/// The representative `x = [[0, x2], [x3, 0]]` of the orbit `Λ`: boxes are basis
/// vectors of `V⁺` or `V⁻` by sign, numbered row by row, and `x` sends each box
/// to its left neighbour.
pub fn orbit_representative(lambda: &SignedYoungDiagram, p: u64) -> Result<(PrimeFieldMatrix, PrimeFieldMatrix)> {
    let (np, nm) = lambda.signature();
    if np != nm {
        return Err(domain!("signature ({np},{nm}) is not balanced"));
    }
    let n = np;
    let mut x2 = PrimeFieldMatrix::zeros(p, n, n);
    let mut x3 = PrimeFieldMatrix::zeros(p, n, n);
    let (mut next_plus, mut next_minus) = (0, 0);
    for row in lambda.rows() {
        let mut prev: Option<(Sign, usize)> = None;
        for k in 0..row.len {
            let sign = row.sign_at(k + 1);
            let index = match sign {
                Sign::Plus => {
                    next_plus += 1;
                    next_plus - 1
                }
                Sign::Minus => {
                    next_minus += 1;
                    next_minus - 1
                }
            };
            if let Some((_, left)) = prev {
                match sign {
                    Sign::Minus => x2.set(left, index, 1),
                    Sign::Plus => x3.set(left, index, 1),
                }
            }
            prev = Some((sign, index));
        }
    }
    Ok((x2, x3))
}

/// `dim 𝔒_Λ = 2n² − dim {(α, β) : α x2 = x2 β, β x3 = x3 α}`.
pub fn orbit_dimension(lambda: &SignedYoungDiagram, cfg: &OracleConfig) -> Result<usize> {
    check_prime(cfg.prime)?;
    let (x2, x3) = orbit_representative(lambda, cfg.prime)?;
    let n = x2.rows();
    let stabilizer = FiberBasis::solve(cfg.prime, n, 2 * n, |ab| {
        let alpha = ab.submatrix(0, n, 0, n);
        let beta = ab.submatrix(0, n, n, 2 * n);
        let mut out = alpha.mul(&x2)?.add(&x2.mul(&beta)?.neg())?.to_u64_vec();
        out.extend(beta.mul(&x3)?.add(&x3.mul(&alpha)?.neg())?.to_u64_vec());
        Ok(out)
    })?;
    Ok(2 * n * n - stabilizer.dim())
}
