//! Line-oriented text formats for rotation maps (`rotmap 1`) and one-vertex
//! voltage base maps (`voltmap 1`).
//!
//! ```text
//! rotmap 1
//! vertices 4
//! 0: 1 2 3
//! 1: 0 3 2
//! 2: 0 1 3
//! 3: 0 2 1
//! ```
//!
//! ```text
//! voltmap 1
//! n 7
//! rotation: 1 3 2 6 4 5
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::map::{MapError, RotationMap};
use crate::voltage::{VoltageBaseMap, VoltageError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Map { line: usize, source: MapError },
    #[error(transparent)]
    Voltage(#[from] VoltageError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_numbers(line: usize, s: &str) -> Result<Vec<usize>, FormatError> {
    s.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| syntax(line, format!("bad integer `{t}`"))))
        .collect()
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    magic: &str,
) -> Result<(), FormatError> {
    match lines.next() {
        Some((_, l)) if l == format!("{magic} 1") => Ok(()),
        Some((n, l)) => Err(syntax(n, format!("expected `{magic} 1`, found `{l}`"))),
        None => Err(syntax(1, "empty input")),
    }
}

fn keyed<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
    after: usize,
) -> Result<(usize, &'a str), FormatError> {
    match lines.next() {
        Some((n, l)) => match l.strip_prefix(key) {
            Some(rest) => Ok((n, rest.trim_start_matches(':').trim())),
            None => Err(syntax(n, format!("expected `{key} ...`"))),
        },
        None => Err(syntax(after + 1, format!("missing `{key}` line"))),
    }
}

/// Parses a `rotmap 1` document. Maps with fewer than four vertices are
/// rejected, which excludes the 3-cycle on the sphere.
pub fn parse_rotmap(text: &str) -> Result<RotationMap, FormatError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, "rotmap")?;
    let (vline, rest) = keyed(&mut lines, "vertices", 1)?;
    let n: usize = rest.parse().map_err(|_| syntax(vline, "bad vertex count"))?;
    if n < 4 {
        return Err(syntax(vline, format!("{n} vertices: degenerate maps are not accepted")));
    }
    let mut rotations: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut line_of = vec![0; n];
    let mut last = vline;
    for (ln, l) in lines {
        last = ln;
        let (head, tail) = l.split_once(':').ok_or_else(|| syntax(ln, "expected `<v>: ...`"))?;
        let v: usize = head.trim().parse().map_err(|_| syntax(ln, "bad vertex id"))?;
        if v >= n {
            return Err(syntax(ln, format!("vertex {v} out of range")));
        }
        if rotations[v].is_some() {
            return Err(syntax(ln, format!("vertex {v} listed twice")));
        }
        rotations[v] = Some(parse_numbers(ln, tail)?);
        line_of[v] = ln;
    }
    let mut rots = Vec::with_capacity(n);
    for (v, r) in rotations.into_iter().enumerate() {
        rots.push(r.ok_or_else(|| syntax(last, format!("missing rotation for vertex {v}")))?);
    }
    RotationMap::from_rotations(rots).map_err(|e| {
        let line = match &e {
            MapError::EmptyRotation(v)
            | MapError::RepeatedNeighbor { vertex: v, .. }
            | MapError::SelfLoop { vertex: v }
            | MapError::VertexOutOfRange { vertex: v, .. }
            | MapError::AsymmetricAdjacency { u: v, .. } => line_of[*v],
            _ => vline,
        };
        FormatError::Map { line, source: e }
    })
}

pub fn write_rotmap(map: &RotationMap) -> String {
    let mut out = String::new();
    writeln!(out, "rotmap 1").unwrap();
    writeln!(out, "vertices {}", map.vertex_count()).unwrap();
    for (v, rot) in map.rotations().iter().enumerate() {
        write!(out, "{v}:").unwrap();
        for u in rot {
            write!(out, " {u}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_voltmap(text: &str) -> Result<VoltageBaseMap, FormatError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, "voltmap")?;
    let (nline, rest) = keyed(&mut lines, "n", 1)?;
    let n: u32 = rest.parse().map_err(|_| syntax(nline, "bad modulus"))?;
    let (rline, rest) = keyed(&mut lines, "rotation", nline)?;
    let seq: Vec<u32> = parse_numbers(rline, rest)?.into_iter().map(|x| x as u32).collect();
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "unexpected trailing content"));
    }
    Ok(VoltageBaseMap::new(n, seq)?)
}

pub fn write_voltmap(base: &VoltageBaseMap) -> String {
    let seq: Vec<String> = base.sequence().iter().map(u32::to_string).collect();
    format!("voltmap 1\nn {}\nrotation: {}\n", base.modulus(), seq.join(" "))
}
