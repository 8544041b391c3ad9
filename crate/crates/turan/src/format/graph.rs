//! The plain graph format and enumeration listings.
//!
//! ```text
//! # comments run to the end of the line
//! n 4
//! 0 1 2
//! 0 1 3
//! ```
//!
//! An enumeration is a sequence of such blocks, each preceded by
//! `graph <index>`, closed by `count <N>`.

use std::fmt::Write;
use std::path::Path;

use turan_core::{Edge, Hypergraph3, Vertex};

use super::{content_lines, parse_num, read_file};
use crate::error::{Error, Result};

const WHAT: &str = "graph file";

pub fn write_graph(out: &mut String, g: &Hypergraph3) {
    writeln!(out, "n {}", g.n()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {} {}", e[0], e[1], e[2]).unwrap();
    }
}

pub fn graph_to_string(g: &Hypergraph3) -> String {
    let mut s = String::new();
    write_graph(&mut s, g);
    s
}

/// Reads the `n` line and edges from `lines` until a line that is neither.
fn parse_block<'a, I>(lines: &mut std::iter::Peekable<I>, what: &'static str) -> Result<Hypergraph3>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (at, first) = lines.next().ok_or_else(|| Error::parse(what, 0, "missing `n <count>` line"))?;
    let n: usize = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => parse_num(what, at, count)?,
        _ => return Err(Error::parse(what, at, format!("expected `n <count>`, got `{first}`"))),
    };
    let mut edges: Vec<Edge> = Vec::new();
    while let Some(&(line, text)) = lines.peek() {
        let toks: Vec<&str> = text.split_whitespace().collect();
        if !toks[0].bytes().all(|b| b.is_ascii_digit()) {
            break;
        }
        lines.next();
        if toks.len() != 3 {
            return Err(Error::parse(what, line, format!("an edge needs three vertices, got `{text}`")));
        }
        let mut e = [0 as Vertex; 3];
        for (slot, tok) in e.iter_mut().zip(&toks) {
            *slot = parse_num(what, line, tok)?;
            if *slot as usize >= n {
                return Err(Error::parse(what, line, format!("vertex {slot} out of range for n = {n}")));
            }
        }
        if e[0] == e[1] || e[1] == e[2] || e[0] == e[2] {
            return Err(Error::parse(what, line, format!("edge `{text}` repeats a vertex")));
        }
        edges.push(e);
    }
    Ok(Hypergraph3::from_edges(n, edges)?)
}

pub fn parse_graph(text: &str) -> Result<Hypergraph3> {
    let mut lines = content_lines(text).peekable();
    let g = parse_block(&mut lines, WHAT)?;
    if let Some((line, rest)) = lines.next() {
        return Err(Error::parse(WHAT, line, format!("unexpected `{rest}`")));
    }
    Ok(g)
}

pub fn read_graph(path: &Path) -> Result<Hypergraph3> {
    parse_graph(&read_file(path)?)
}

pub fn enumeration_to_string(graphs: &[Hypergraph3]) -> String {
    let mut s = String::new();
    for (i, g) in graphs.iter().enumerate() {
        writeln!(s, "graph {i}").unwrap();
        write_graph(&mut s, g);
    }
    writeln!(s, "count {}", graphs.len()).unwrap();
    s
}

pub fn parse_enumeration(text: &str) -> Result<Vec<Hypergraph3>> {
    const WHAT: &str = "enumeration";
    let mut lines = content_lines(text).peekable();
    let mut graphs = Vec::new();
    loop {
        let (line, head) = lines
            .next()
            .ok_or_else(|| Error::parse(WHAT, 0, "missing `count` line"))?;
        match head.split_whitespace().collect::<Vec<_>>()[..] {
            ["graph", i] => {
                let i: usize = parse_num(WHAT, line, i)?;
                if i != graphs.len() {
                    return Err(Error::parse(WHAT, line, format!("expected graph {}, got {i}", graphs.len())));
                }
                graphs.push(parse_block(&mut lines, WHAT)?);
            }
            ["count", c] => {
                let c: usize = parse_num(WHAT, line, c)?;
                if c != graphs.len() {
                    return Err(Error::parse(WHAT, line, format!("count {c} but {} graphs listed", graphs.len())));
                }
                if let Some((line, rest)) = lines.next() {
                    return Err(Error::parse(WHAT, line, format!("unexpected `{rest}` after count")));
                }
                return Ok(graphs);
            }
            _ => return Err(Error::parse(WHAT, line, format!("expected `graph <i>` or `count <N>`, got `{head}`"))),
        }
    }
}
