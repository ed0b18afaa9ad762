//! JSON encodings of the core types.
//!
//! Tableaux are arrays of rows, partitions are arrays of parts, signed Young
//! diagrams are arrays of row strings such as `"+-+"`, and partial permutations
//! are words with `0` for the kernel.

use serde_json::{json, Map, Value};

use steinberg_core::maps::Triple;
use steinberg_core::orbit::{ClassImage, ImageReport};
use steinberg_core::signed::SignedYoungDiagram;
use steinberg_core::tableau::SkewTableau;
use steinberg_core::{Bijection, OrbitRep, PartialPermutation, Partition, PrimeFieldMatrix, Tableau};

/// A malformed input, naming the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid `{}`: {}", self.field, self.message)
    }
}

impl std::error::Error for InputError {}

pub type InputResult<T> = Result<T, InputError>;

fn bad(field: &str, message: impl Into<String>) -> InputError {
    InputError { field: field.to_string(), message: message.into() }
}

pub fn word(tau: &PartialPermutation) -> Value {
    json!(tau.word())
}

pub fn tableau(t: &Tableau) -> Value {
    json!(t.rows())
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn partition_pair(pair: &(Partition, Partition)) -> Value {
    json!([partition(&pair.0), partition(&pair.1)])
}

pub fn signed(d: &SignedYoungDiagram) -> Value {
    json!(d.to_strings())
}

pub fn bijection(b: &Bijection) -> Value {
    json!({ "sources": b.sources(), "targets": b.targets() })
}

pub fn triple(t: &Triple) -> Value {
    json!({ "T1": tableau(&t.t1), "T2": tableau(&t.t2), "nu": partition(&t.nu) })
}

pub fn skew(s: &SkewTableau) -> Value {
    json!({ "outer": partition(s.outer()), "inner": partition(s.inner()), "rows": s.cells() })
}

pub fn orbit_rep(w: &OrbitRep) -> Value {
    json!({ "n": w.n(), "tau1": word(w.tau1()), "tau2": word(w.tau2()) })
}

pub fn class_image(c: &ClassImage) -> Value {
    let mut m = Map::new();
    m.insert("omega".into(), orbit_rep(&c.omega));
    m.insert("xi_s".into(), c.xi_s.as_ref().map_or(Value::Null, signed));
    m.insert("xi_k".into(), c.xi_k.as_ref().map_or(Value::Null, partition_pair));
    m.insert("method".into(), json!(c.method.as_str()));
    if let Some(flag) = &c.flag {
        m.insert("flag".into(), json!(flag));
    }
    Value::Object(m)
}

pub fn image_report(r: &ImageReport) -> Value {
    let c = &r.checks;
    json!({
        "n": r.n,
        "classes": r.classes.iter().map(class_image).collect::<Vec<_>>(),
        "maximal": r.maximal.iter().map(signed).collect::<Vec<_>>(),
        "checks": {
            "maximal_matches_components": c.maximal_matches_components,
            "square_zero": c.square_zero,
            "column_bound": c.column_bound,
            "swap_closed": c.swap_closed,
            "regular_xi_k_attained": c.regular_xi_k_attained,
            "flagged": c.flagged,
        },
    })
}

pub fn parse(text: &str, field: &str) -> InputResult<Value> {
    serde_json::from_str(text).map_err(|e| bad(field, format!("not valid JSON: {e}")))
}

fn get<'a>(v: &'a Value, field: &str) -> InputResult<&'a Value> {
    v.get(field).ok_or_else(|| bad(field, "missing"))
}

fn uint(v: &Value, field: &str) -> InputResult<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| bad(field, format!("expected a nonnegative integer, got {v}")))
}

fn int(v: &Value, field: &str) -> InputResult<i64> {
    v.as_i64().ok_or_else(|| bad(field, format!("expected an integer, got {v}")))
}

fn array<'a>(v: &'a Value, field: &str) -> InputResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(field, format!("expected an array, got {v}")))
}

pub fn uint_list(v: &Value, field: &str) -> InputResult<Vec<usize>> {
    array(v, field)?.iter().map(|x| uint(x, field)).collect()
}

pub fn int_rows(v: &Value, field: &str) -> InputResult<Vec<Vec<i64>>> {
    array(v, field)?.iter().map(|row| array(row, field)?.iter().map(|x| int(x, field)).collect()).collect()
}

pub fn parse_tableau(v: &Value, field: &str) -> InputResult<Tableau> {
    Tableau::new(int_rows(v, field)?).map_err(|e| bad(field, e.to_string()))
}

pub fn parse_partition(v: &Value, field: &str) -> InputResult<Partition> {
    Partition::new(uint_list(v, field)?).map_err(|e| bad(field, e.to_string()))
}

pub fn parse_word(v: &Value, field: &str) -> InputResult<PartialPermutation> {
    PartialPermutation::new(uint_list(v, field)?).map_err(|e| bad(field, e.to_string()))
}

/// `{"T1": [[..]], "T2": [[..]], "nu": [..]}`.
pub fn parse_triple(v: &Value) -> InputResult<Triple> {
    Ok(Triple {
        t1: parse_tableau(get(v, "T1")?, "T1")?,
        t2: parse_tableau(get(v, "T2")?, "T2")?,
        nu: parse_partition(get(v, "nu")?, "nu")?,
    })
}

/// Input of the triangle operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleInput {
    pub t1: Tableau,
    pub t2: Tableau,
    pub ells: Vec<usize>,
    pub ms: Vec<usize>,
    pub n: usize,
}

/// `{"T1", "T2", "ells", "ms", "n"}`.
pub fn parse_triangle(v: &Value) -> InputResult<TriangleInput> {
    Ok(TriangleInput {
        t1: parse_tableau(get(v, "T1")?, "T1")?,
        t2: parse_tableau(get(v, "T2")?, "T2")?,
        ells: uint_list(get(v, "ells")?, "ells")?,
        ms: uint_list(get(v, "ms")?, "ms")?,
        n: uint(get(v, "n")?, "n")?,
    })
}

/// A rectangular integer matrix, reduced modulo `p`.
pub fn parse_matrix(v: &Value, p: u64, field: &str) -> InputResult<PrimeFieldMatrix> {
    let rows = int_rows(v, field)?;
    PrimeFieldMatrix::from_rows(p, &rows).map_err(|e| bad(field, e.to_string()))
}

/// `{"n", "tau1": [..], "tau2": [..]}`.
pub fn parse_orbit_rep(v: &Value) -> InputResult<OrbitRep> {
    let tau1 = parse_word(get(v, "tau1")?, "tau1")?;
    let tau2 = parse_word(get(v, "tau2")?, "tau2")?;
    if let Some(n) = v.get("n") {
        if uint(n, "n")? != tau1.n() {
            return Err(bad("n", "does not match the word length"));
        }
    }
    OrbitRep::new(tau1, tau2).map_err(|e| bad("tau2", e.to_string()))
}

/// A comma-separated word such as `0,1,2`.
pub fn parse_word_arg(text: &str) -> InputResult<PartialPermutation> {
    let trimmed = text.trim();
    let word = if trimmed.is_empty() {
        Vec::new()
    } else {
        trimmed
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad("word", format!("`{x}` is not a nonnegative integer"))))
            .collect::<InputResult<Vec<_>>>()?
    };
    PartialPermutation::new(word).map_err(|e| bad("word", e.to_string()))
}

/// A comma-separated partition such as `2,1`.
pub fn parse_partition_arg(text: &str, field: &str) -> InputResult<Partition> {
    let parts = text
        .split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse::<usize>().map_err(|_| bad(field, format!("`{x}` is not a positive integer"))))
        .collect::<InputResult<Vec<_>>>()?;
    Partition::new(parts).map_err(|e| bad(field, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let t = Tableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(parse_tableau(&tableau(&t), "T").unwrap(), t);
        let w = OrbitRep::from_tau(&PartialPermutation::new(vec![0, 1, 2]).unwrap());
        assert_eq!(parse_orbit_rep(&orbit_rep(&w)).unwrap(), w);
        assert_eq!(parse_word_arg("0, 1,2").unwrap().word(), &[0, 1, 2]);
        assert_eq!(parse_word_arg("").unwrap().n(), 0);
    }

    #[test]
    fn errors_name_the_field() {
        let e = parse_triple(&json!({"T1": [[1]], "T2": [[1]]})).unwrap_err();
        assert_eq!(e.field, "nu");
        let e = parse_word_arg("1,x").unwrap_err();
        assert_eq!(e.field, "word");
        let e = parse_triangle(&json!({"T1": [[1]], "T2": "oops", "ells": [], "ms": [], "n": 1})).unwrap_err();
        assert_eq!(e.field, "T2");
    }
}
