//! Deterministic rendering: envelopes with sorted keys, reals rounded to
//! 12 significant digits, CSV tables with RFC 4180 quoting.

use serde_json::{json, Value};

/// Round to 12 significant digits; applied to every real before rendering,
/// so identical invocations serialize byte-identically.
pub fn sig12(x: f64) -> f64 {
    format!("{x:.11e}").parse().expect("formatted float")
}

pub fn real(x: f64) -> Value {
    json!(sig12(x))
}

/// Rounded real as text, for CSV cells.
pub fn cell(x: f64) -> String {
    format!("{}", sig12(x))
}

pub fn envelope(command: &str, parameters: Value, results: Value) -> Value {
    json!({
        "command": command,
        "parameters": parameters,
        "results": results,
        "versions": concat!("phasent ", env!("CARGO_PKG_VERSION")),
    })
}

pub fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("tree of plain values"));
}

pub fn print_csv(header: &[&str], rows: Vec<Vec<String>>) {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    let bytes = w.into_inner().expect("flushed");
    print!("{}", String::from_utf8(bytes).expect("utf8"));
}
