//! Text formats. Every writer has a parser that restores the same value.

pub mod certificate;
pub mod graph;
pub mod sdp;
pub mod solution;
pub mod table;

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// Non-blank lines with `#` comments stripped, numbered from 1.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub(crate) fn parse_num<T: std::str::FromStr>(what: &'static str, line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(what, line, format!("expected a nonnegative integer, got `{tok}`")))
}

pub(crate) fn parse_ratio(what: &'static str, line: usize, tok: &str) -> Result<turan_core::Rational> {
    turan_core::numeric::parse_rational(tok)
        .ok_or_else(|| Error::parse(what, line, format!("expected a rational, got `{tok}`")))
}
