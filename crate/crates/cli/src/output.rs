//! Result serialization: JSON lines and TSV, both byte-stable for a
//! fixed (input, flags, seed) triple.

use rankdep::TestResult;
use serde_json::json;

/// One JSON object per result. Keys are emitted in sorted order, so the
/// bytes are reproducible; `p_value` is null when no method was used.
pub fn json_line(result: &TestResult, seed: u64) -> String {
    json!({
        "statistic": result.statistic.name(),
        "value": result.value,
        "scaled": result.scaled,
        "n": result.n,
        "p_value": result.p_value,
        "p_method": result.p_method.name(),
        "seed": seed,
    })
    .to_string()
}

pub const TSV_HEADER: &str = "statistic\tvalue\tscaled\tn\tp_value\tp_method\tseed";

pub fn tsv_line(result: &TestResult, seed: u64) -> String {
    let p = match result.p_value {
        Some(v) => format!("{v}"),
        None => "NA".into(),
    };
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        result.statistic.name(),
        result.value,
        result.scaled,
        result.n,
        p,
        result.p_method.name(),
        seed
    )
}
