//! Line-oriented text formats.
//!
//! Graph files:
//!
//! ```text
//! # comment
//! g <n> <m>
//! e <u> <v>
//! r <v> <n1> <n2> ...      (optional, counterclockwise)
//! outer <v1> <v2> ...      (optional infinite face walk)
//! ```
//!
//! List files use `u <universe>` followed by `l <v> <c1> <c2> ...`; colourings are
//! `c <v> <colour>` lines, or the single token `UNSAT`.

use std::fmt::Write as _;

use thiserror::Error;

use super::{GraphError, PlaneGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line `{0}`")]
    MissingHeader(&'static str),
    #[error("header declares {declared} edges but {found} were given")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Non-empty, non-comment lines with 1-based line numbers, split into tokens.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn nums(line: usize, toks: &[&str]) -> Result<Vec<usize>, ParseError> {
    toks.iter()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| syntax(line, format!("expected a non-negative integer, got `{t}`")))
        })
        .collect()
}

fn check_vertex(line: usize, v: usize, n: usize) -> Result<(), ParseError> {
    if v >= n {
        return Err(syntax(line, format!("vertex {v} out of range (n = {n})")));
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<PlaneGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut rot: Vec<Option<Vec<usize>>> = Vec::new();
    let mut any_rot = false;
    let mut outer = None;
    for (line, toks) in records(text) {
        let args = nums(line, &toks[1..]);
        match toks[0] {
            "g" => {
                let a = args?;
                if a.len() != 2 || header.is_some() {
                    return Err(syntax(line, "expected a single `g <n> <m>`"));
                }
                header = Some((a[0], a[1]));
                rot = vec![None; a[0]];
            }
            kind @ ("e" | "r" | "outer") => {
                let (n, _) = header.ok_or(ParseError::MissingHeader("g <n> <m>"))?;
                let a = args?;
                for &v in &a {
                    check_vertex(line, v, n)?;
                }
                match kind {
                    "e" => {
                        if a.len() != 2 {
                            return Err(syntax(line, "expected `e <u> <v>`"));
                        }
                        edges.push((a[0], a[1]));
                    }
                    "r" => {
                        if a.is_empty() || rot[a[0]].is_some() {
                            return Err(syntax(line, "expected one `r <v> ...` per vertex"));
                        }
                        rot[a[0]] = Some(a[1..].to_vec());
                        any_rot = true;
                    }
                    _ => outer = Some(a),
                }
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader("g <n> <m>"))?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    let mut g = PlaneGraph::from_edges(n, &edges)?;
    if any_rot {
        let full: Vec<Vec<usize>> = rot.into_iter().map(Option::unwrap_or_default).collect();
        g = g.with_rotation(full)?;
    }
    if let Some(o) = outer {
        g = g.with_outer(o);
    }
    Ok(g)
}

pub fn write_graph(g: &PlaneGraph) -> String {
    let mut s = format!("g {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    if let Some(rot) = g.rotation() {
        for (v, r) in rot.iter().enumerate() {
            let _ = write!(s, "r {v}");
            for w in r {
                let _ = write!(s, " {w}");
            }
            s.push('\n');
        }
    }
    if let Some(o) = g.outer() {
        s.push_str("outer");
        for v in o {
            let _ = write!(s, " {v}");
        }
        s.push('\n');
    }
    s
}

/// Parsed list file: universe size and one colour list per vertex.
pub fn parse_lists(text: &str, n: usize) -> Result<(usize, Vec<Vec<usize>>), ParseError> {
    let mut universe = None;
    let mut lists: Vec<Option<Vec<usize>>> = vec![None; n];
    for (line, toks) in records(text) {
        let a = nums(line, &toks[1..])?;
        match toks[0] {
            "u" => {
                if a.len() != 1 || universe.is_some() {
                    return Err(syntax(line, "expected a single `u <universe>`"));
                }
                universe = Some(a[0]);
            }
            "l" => {
                let u = universe.ok_or(ParseError::MissingHeader("u <universe>"))?;
                if a.is_empty() {
                    return Err(syntax(line, "expected `l <v> <colours>...`"));
                }
                check_vertex(line, a[0], n)?;
                if lists[a[0]].is_some() {
                    return Err(syntax(line, format!("second list for vertex {}", a[0])));
                }
                if let Some(&c) = a[1..].iter().find(|&&c| c >= u) {
                    return Err(syntax(line, format!("colour {c} outside universe {u}")));
                }
                lists[a[0]] = Some(a[1..].to_vec());
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    let universe = universe.ok_or(ParseError::MissingHeader("u <universe>"))?;
    Ok((
        universe,
        lists.into_iter().map(Option::unwrap_or_default).collect(),
    ))
}

pub fn write_lists(universe: usize, lists: &[Vec<usize>]) -> String {
    let mut s = format!("u {universe}\n");
    for (v, l) in lists.iter().enumerate() {
        let _ = write!(s, "l {v}");
        for c in l {
            let _ = write!(s, " {c}");
        }
        s.push('\n');
    }
    s
}

/// `None` for `UNSAT`, otherwise a colour per vertex (`None` where absent).
pub fn parse_coloring(text: &str, n: usize) -> Result<Option<Vec<Option<usize>>>, ParseError> {
    let mut col = vec![None; n];
    for (line, toks) in records(text) {
        match toks[0] {
            "UNSAT" => return Ok(None),
            "c" => {
                let a = nums(line, &toks[1..])?;
                if a.len() != 2 {
                    return Err(syntax(line, "expected `c <v> <colour>`"));
                }
                check_vertex(line, a[0], n)?;
                col[a[0]] = Some(a[1]);
            }
            other => return Err(syntax(line, format!("unknown record `{other}`"))),
        }
    }
    Ok(Some(col))
}

pub fn write_coloring(coloring: Option<&[usize]>) -> String {
    match coloring {
        None => "UNSAT\n".to_string(),
        Some(c) => {
            let mut s = String::new();
            for (v, col) in c.iter().enumerate() {
                let _ = writeln!(s, "c {v} {col}");
            }
            s
        }
    }
}
