//! Solver output: whitespace-separated floats in block order (upper
//! triangle of each `Q`, then `c_1, ..., c_N, u`). `#` starts a comment.

use super::content_lines;
use crate::error::{Error, Result};

pub fn parse_solution(text: &str) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for (line, l) in content_lines(text) {
        for tok in l.split_whitespace() {
            // Some solvers print Fortran-style exponents.
            let v: f64 = tok
                .replace(['D', 'd'], "e")
                .parse()
                .map_err(|_| Error::parse("solution file", line, format!("bad number `{tok}`")))?;
            out.push(v);
        }
    }
    Ok(out)
}
