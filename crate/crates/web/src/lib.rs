//! Browser bindings: each export takes plain strings and returns JSON text,
//! so the page needs no framework.

use mgcm_core::report::{emit_reports, Format};
use mgcm_core::session::{parse_session, run_session, RunOptions};
use wasm_bindgen::prelude::*;

fn error_json(msgs: &[String]) -> String {
    serde_json::json!({ "errors": msgs }).to_string()
}

fn run_text(text: &str) -> String {
    let session = match parse_session(text) {
        Ok(s) => s,
        Err(diags) => return error_json(&diags.iter().map(|d| d.to_string()).collect::<Vec<_>>()),
    };
    match run_session(&session, &RunOptions::default()).and_then(|r| emit_reports(&r, Format::Json)) {
        Ok(json) => json,
        Err(e) => error_json(&[e.to_string()]),
    }
}

/// Sheaf cohomology of the line bundles O(n) on a product of projective
/// spaces, e.g. `dims = "1,1"` for P^1 x P^1, over the box |n_j| <= radius.
#[wasm_bindgen]
pub fn line_bundle_table(dims: &str, radius: u32) -> String {
    let parsed: Result<Vec<usize>, _> = dims.split(',').map(|d| d.trim().parse::<usize>()).collect();
    let dims = match parsed {
        Ok(d) if !d.is_empty() && d.len() <= 3 && d.iter().all(|&x| (1..=3).contains(&x)) => d,
        _ => return error_json(&["dimensions must be 1 to 3 numbers between 1 and 3".into()]),
    };
    let r = dims.len();
    let radius = radius.min(4) as i64;
    let groups: Vec<String> = dims
        .iter()
        .enumerate()
        .map(|(j, &a)| {
            let vars: Vec<String> = (0..=a).map(|i| format!("x{j}_{i}")).collect();
            let deg: Vec<String> = (0..r).map(|k| if k == j { "1" } else { "0" }.to_string()).collect();
            format!("{} : deg=({})", vars.join(", "), deg.join(","))
        })
        .collect();
    let corner = |s: i64| format!("({})", vec![s.to_string(); r].join(","));
    let top: usize = dims.iter().sum();
    run_text(&format!(
        "ring S = poly(char=32003; {});\nmodule O = ring(S);\ntable sheaf O i=0..{top} window={}..{};\n",
        groups.join("; "),
        corner(-radius),
        corner(radius)
    ))
}

/// Invariants of the multi-Rees module of k[a,b] for ideals given one per
/// line, e.g. `"a\na, b"`.
#[wasm_bindgen]
pub fn rees_invariants(ideals: &str) -> String {
    let lines: Vec<&str> = ideals.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    if lines.is_empty() || lines.len() > 3 {
        return error_json(&["give one to three ideals, one per line".into()]);
    }
    let mut text = String::from("ring A = poly(char=32003; a, b : deg=(0), weight=1);\nmodule N = ring(A);\n");
    let names: Vec<String> = (1..=lines.len()).map(|i| format!("I{i}")).collect();
    for (name, gens) in names.iter().zip(&lines) {
        text.push_str(&format!("ideal {name} = ({gens});\n"));
    }
    text.push_str(&format!("multirees M = rees(N; {});\nverify lem41 M;\ncheck invariants M;\n", names.join(", ")));
    run_text(&text)
}

/// Parses and runs a whole session.
#[wasm_bindgen]
pub fn check_session(text: &str) -> String {
    run_text(text)
}
