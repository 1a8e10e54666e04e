//! Two-column numeric input: separator auto-detection (comma, tab, or
//! whitespace) and optional single-header skipping.

/// Parses paired numeric columns. The first non-empty line may be a
/// header; it is skipped when it does not parse as two numbers. Every
/// later bad line is an error naming its 1-based line number.
pub fn parse_columns(text: &str) -> Result<(Vec<f64>, Vec<f64>), String> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut first_line = true;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match parse_pair(line) {
            Some((x, y)) => {
                xs.push(x);
                ys.push(y);
            }
            None if first_line => {} // header line
            None => {
                return Err(format!(
                    "line {}: expected two numeric columns, got {:?}",
                    idx + 1,
                    raw
                ));
            }
        }
        first_line = false;
    }
    if xs.is_empty() {
        return Err("no data rows found".into());
    }
    Ok((xs, ys))
}

fn parse_pair(line: &str) -> Option<(f64, f64)> {
    let fields = split_fields(line);
    if fields.len() != 2 {
        return None;
    }
    let x: f64 = fields[0].trim().parse().ok()?;
    let y: f64 = fields[1].trim().parse().ok()?;
    Some((x, y))
}

fn split_fields(line: &str) -> Vec<&str> {
    if line.contains(',') {
        line.split(',').collect()
    } else if line.contains('\t') {
        line.split('\t').collect()
    } else {
        line.split_whitespace().collect()
    }
}
