//! Browser bindings. Every export takes plain strings and returns a JSON
//! document, either the result or `{"error": ...}`.

use ordsum::rulesets::{TokenRowState, DEFAULT_STATE_CAP};
use ordsum::{parse, ChainSpec, Evaluator};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest row the token report will search exhaustively.
const TOKEN_SEARCH_LIMIT: usize = 8;

fn numbers(text: &str) -> Result<Vec<u64>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| format!("`{s}` is not a non-negative integer"))
        })
        .collect()
}

fn error(message: impl ToString) -> Value {
    json!({ "error": message.to_string() })
}

pub fn evaluate_value(expr: &str) -> Value {
    let e = match parse(expr) {
        Ok(e) => e,
        Err(err) => return json!({ "error": err.to_string(), "offset": err.byte_offset }),
    };
    let mut ev = Evaluator::new();
    let result = (|| {
        let v = ev.vset(&e)?;
        Ok::<_, ordsum::Error>(json!({
            "vset": v.as_slice(),
            "grundy": v.mex(),
            "outcome": ev.outcome(&e)?.to_string(),
        }))
    })();
    result.unwrap_or_else(error)
}

pub fn chain_value(a: &str, ahat: &str) -> Value {
    let spec = numbers(a)
        .and_then(|a| Ok((a, numbers(ahat)?)))
        .and_then(|(a, ahat)| ChainSpec::new(a, ahat).map_err(|e| e.to_string()));
    let c = match spec {
        Ok(c) => c,
        Err(e) => return error(e),
    };
    match c.grundy() {
        Ok(g) => json!({
            "sigma": c.suffix_sums().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "p": c.pivot(),
            "grundy": g,
        }),
        Err(e) => error(e),
    }
}

pub fn tokens_value(perm: &str) -> Value {
    let state = numbers(perm)
        .and_then(|p| {
            p.into_iter()
                .map(|x| usize::try_from(x).map_err(|e| e.to_string()))
                .collect()
        })
        .and_then(|p| TokenRowState::new(p).map_err(|e| e.to_string()));
    let s = match state {
        Ok(s) => s,
        Err(e) => return error(e),
    };
    let search = if s.len() <= TOKEN_SEARCH_LIMIT {
        s.retrograde_grundy(DEFAULT_STATE_CAP).ok()
    } else {
        None
    };
    let moves: Vec<_> = s.moves().iter().map(|m| m.perm().to_vec()).collect();
    json!({
        "records": s.records(),
        "b": s.b_sequence(),
        "grundy": s.grundy(),
        "search": search,
        "moves": moves,
    })
}

/// `{vset, grundy, outcome}` for a text expression.
#[wasm_bindgen]
pub fn evaluate(expr: &str) -> String {
    evaluate_value(expr).to_string()
}

/// `{sigma, p, grundy}` for comma-separated chain parameters.
#[wasm_bindgen]
pub fn chain_report(a: &str, ahat: &str) -> String {
    chain_value(a, ahat).to_string()
}

/// `{records, b, grundy, search, moves}` for a token row.
#[wasm_bindgen]
pub fn token_report(perm: &str) -> String {
    tokens_value(perm).to_string()
}
