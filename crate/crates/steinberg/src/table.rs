//! The correspondence table `τ ↦ (σ, RS pair, triple, Φ, Ξ_s)` over all of `𝔗_n`.

use serde_json::{json, Value};

use steinberg_core::insertion::rs_pair;
use steinberg_core::maps::{phi, triple, xi_s_generic, Triple};
use steinberg_core::perm::{decompose, enumerate_partial_permutations};
use steinberg_core::signed::SignedYoungDiagram;
use steinberg_core::{Bijection, PartialPermutation, Partition, Result, Tableau};

use crate::json;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub tau: PartialPermutation,
    pub sigma: Bijection,
    pub rs: (Tableau, Tableau),
    pub triple: Triple,
    pub phi: (Partition, Partition),
    pub xi_s: SignedYoungDiagram,
}

/// One row per partial permutation, in enumeration order (rank descending, then word).
pub fn build(n: usize) -> Result<Vec<TableRow>> {
    enumerate_partial_permutations(n)?
        .into_iter()
        .map(|tau| {
            let d = decompose(&tau);
            Ok(TableRow { rs: rs_pair(&d.sigma), sigma: d.sigma, triple: triple(&tau), phi: phi(&tau), xi_s: xi_s_generic(&tau)?, tau })
        })
        .collect()
}

pub fn to_json(rows: &[TableRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "tau": json::word(&r.tau),
                    "rank": r.tau.rank(),
                    "sigma": json::bijection(&r.sigma),
                    "rs": [json::tableau(&r.rs.0), json::tableau(&r.rs.1)],
                    "triple": json::triple(&r.triple),
                    "phi": json::partition_pair(&r.phi),
                    "xi_s": json::signed(&r.xi_s),
                })
            })
            .collect(),
    )
}

fn cells(r: &TableRow) -> [String; 6] {
    [
        r.tau.to_string(),
        r.sigma.to_string(),
        format!("{}, {}", r.rs.0, r.rs.1),
        format!("{}, {}, {}", r.triple.t1, r.triple.t2, r.triple.nu),
        format!("{}, {}", r.phi.0, r.phi.1),
        r.xi_s.to_string(),
    ]
}

const HEADERS: [&str; 6] = ["tau", "sigma", "RS1, RS2", "T1, T2, nu", "Phi", "Xi_s"];

pub fn to_markdown(rows: &[TableRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", HEADERS.join(" | ")));
    out.push_str(&format!("|{}\n", "---|".repeat(HEADERS.len())));
    for r in rows {
        out.push_str(&format!("| {} |\n", cells(r).join(" | ")));
    }
    out
}

pub fn to_text(rows: &[TableRow]) -> String {
    let body: Vec<[String; 6]> = rows.iter().map(cells).collect();
    let mut widths: Vec<usize> = HEADERS.iter().map(|h| h.chars().count()).collect();
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cols: Vec<&str>| {
        cols.iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(HEADERS.to_vec());
    out.push('\n');
    let mut rank = None;
    for (r, cells) in rows.iter().zip(&body) {
        if rank.is_some_and(|k| k != r.tau.rank()) {
            out.push('\n');
        }
        rank = Some(r.tau.rank());
        out.push_str(&line(cells.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}
