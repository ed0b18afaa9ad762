//! The hand-transcribed n = 3 correspondence table shared by the CLI tests.

use serde_json::{json, Value};

const TABLE_N3: &str = include_str!("../../../core/tests/data/table_n3.txt");

fn tableau(s: &str) -> Value {
    if s == "." {
        return json!([]);
    }
    json!(s.split('/').map(|r| r.chars().map(|c| c.to_digit(10).unwrap()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn list(s: &str) -> Value {
    if s == "." {
        return json!([]);
    }
    json!(s.split(',').map(|x| x.parse::<u64>().unwrap()).collect::<Vec<_>>())
}

/// Expected JSON rows of `table --n 3`, in fixture order.
pub fn expected_rows() -> Vec<Value> {
    TABLE_N3
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('|').map(str::trim).collect();
            let (sources, targets) = match f[1].split_once("->") {
                Some((s, t)) => (list(s), list(t)),
                None => (json!([]), json!([])),
            };
            json!({
                "tau": list(f[0]),
                "sigma": { "sources": sources, "targets": targets },
                "rs": [tableau(f[2]), tableau(f[3])],
                "triple": { "T1": tableau(f[4]), "T2": tableau(f[5]), "nu": list(f[6]) },
                "phi": [list(f[7]), list(f[8])],
                "xi_s": f[9].split_whitespace().collect::<Vec<_>>(),
            })
        })
        .collect()
}

/// Cell-level differences between `table --n 3` output and the fixture.
pub fn table_mismatches(rows: &Value) -> Vec<String> {
    let Some(rows) = rows.as_array() else {
        return vec!["output is not an array".into()];
    };
    let expected = expected_rows();
    let mut out = Vec::new();
    if rows.len() != expected.len() {
        out.push(format!("{} rows, expected {}", rows.len(), expected.len()));
    }
    for e in &expected {
        let Some(row) = rows.iter().find(|r| r["tau"] == e["tau"]) else {
            out.push(format!("missing row {}", e["tau"]));
            continue;
        };
        for key in ["sigma", "rs", "triple", "phi", "xi_s"] {
            if row[key] != e[key] {
                out.push(format!("{} {key}: got {}, expected {}", e["tau"], row[key], e[key]));
            }
        }
    }
    out
}
