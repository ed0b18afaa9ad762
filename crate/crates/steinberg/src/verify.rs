//! Oracle sweeps over all partial permutations of a given size.

use serde_json::{json, Value};

use steinberg_core::insertion::rs_pair;
use steinberg_core::maps::{phi, triangle, triangle_rs_erasure, triple, triple_inverse, xi_k_generic, xi_s_generic};
use steinberg_core::oracle::{phi_oracle, xi_oracle};
use steinberg_core::perm::{decompose, enumerate_partial_permutations};
use steinberg_core::{Error, OracleConfig, OrbitRep, PartialPermutation, Result};

/// Which sweeps to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum What {
    Phi,
    Xi,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.mismatches.is_empty())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "checked": c.checked,
                "mismatches": c.mismatches,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Runs `f` with shifted seeds until genericity is decided or retries run out.
pub fn with_retries<T>(cfg: &OracleConfig, mut f: impl FnMut(&OracleConfig) -> Result<T>) -> Result<T> {
    let mut attempt = 0;
    loop {
        match f(&cfg.for_attempt(attempt)) {
            Err(Error::GenericityUndecided(_)) if attempt < cfg.retries => attempt += 1,
            other => return other,
        }
    }
}

fn sweep(
    name: &'static str,
    taus: &[PartialPermutation],
    mut check: impl FnMut(&PartialPermutation) -> Result<Option<String>>,
) -> Result<CheckResult> {
    let mut mismatches = Vec::new();
    for tau in taus {
        if let Some(m) = check(tau)? {
            mismatches.push(m);
        }
    }
    Ok(CheckResult { name, checked: taus.len(), mismatches })
}

/// Compares the oracle with the combinatorial maps over all of `𝔗_n`.
pub fn verify(n: usize, what: What, cfg: &OracleConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let taus = enumerate_partial_permutations(n)?;
    let mut checks = Vec::new();
    if matches!(what, What::Phi | What::All) {
        checks.push(sweep("phi", &taus, |tau| {
            let expected = phi(tau);
            Ok(match with_retries(cfg, |c| phi_oracle(tau, c)) {
                Ok(got) if got == expected => None,
                Ok(got) => Some(format!("{tau}: oracle {}, {} vs {}, {}", got.0, got.1, expected.0, expected.1)),
                Err(e) => Some(format!("{tau}: {e}")),
            })
        })?);
    }
    if matches!(what, What::Xi | What::All) {
        checks.push(sweep("xi", &taus, |tau| {
            let expected = (xi_k_generic(tau), xi_s_generic(tau)?);
            Ok(match with_retries(cfg, |c| xi_oracle(&OrbitRep::from_tau(tau), c)) {
                Ok(got) if got == expected => None,
                Ok(got) => Some(format!("{tau}: oracle Ξ_s {} vs {}", got.1, expected.1)),
                Err(e) => Some(format!("{tau}: {e}")),
            })
        })?);
    }
    if what == What::All {
        checks.push(sweep("triple", &taus, |tau| {
            Ok(match triple_inverse(&triple(tau)) {
                Ok(back) if &back == tau => None,
                Ok(back) => Some(format!("{tau}: round trip gave {back}")),
                Err(e) => Some(format!("{tau}: {e}")),
            })
        })?);
        checks.push(sweep("triangle", &taus, |tau| {
            let d = decompose(tau);
            let (p, q) = rs_pair(&d.sigma);
            let a = triangle(&p, &q, &d.l, &d.m, n)?;
            let b = triangle_rs_erasure(&d.sigma, &d.l, &d.m, n)?;
            Ok((a != b).then(|| format!("{tau}: {a} vs {b}")))
        })?);
    }
    Ok(VerifyReport { n, checks })
}
