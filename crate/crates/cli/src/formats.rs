use std::fmt;
use std::str::FromStr;

use diperfect_core::{Digraph, Error};
use thiserror::Error;

use crate::document::{self, Kind};

/// Text encodings of a digraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// `n` on the first line, then one `u v` arc per line; `#` starts a comment.
    EdgeList,
    /// `&`, the order, then the row-major adjacency matrix six bits per byte, offset 63.
    Digraph6,
    /// Graphviz; digons become one edge with `dir=both`.
    Dot,
    /// A `digraph` document; a bare `{"n": .., "arcs": [[u, v], ..]}` is also accepted.
    Json,
}

impl Format {
    pub const NAMES: [&'static str; 4] = ["edge_list", "digraph6", "dot", "json"];

    pub fn name(self) -> &'static str {
        match self {
            Format::EdgeList => "edge_list",
            Format::Digraph6 => "digraph6",
            Format::Dot => "dot",
            Format::Json => "json",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "edge_list" => Ok(Format::EdgeList),
            "digraph6" => Ok(Format::Digraph6),
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            _ => Err(format!(
                "unknown format {s:?} (expected one of {})",
                Format::NAMES.join(", ")
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Digraph(#[from] Error),
    #[error("{0} input cannot be parsed")]
    Unsupported(Format),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Picks digraph6 for a leading `&`, JSON for a leading `{`, else the edge list.
pub fn detect(text: &str) -> Format {
    match text.trim_start().as_bytes().first() {
        Some(b'&') => Format::Digraph6,
        Some(b'{') => Format::Json,
        _ => Format::EdgeList,
    }
}

pub fn parse_digraph(text: &str, format: Format) -> Result<Digraph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Digraph6 => parse_digraph6(text),
        Format::Json => parse_json(text),
        Format::Dot => Err(ParseError::Unsupported(Format::Dot)),
    }
}

pub fn emit_digraph(d: &Digraph, format: Format) -> String {
    match format {
        Format::EdgeList => emit_edge_list(d),
        Format::Digraph6 => emit_digraph6(d) + "\n",
        Format::Dot => emit_dot(d),
        Format::Json => document::render(Kind::Digraph, d),
    }
}

fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
    let mut order: Option<usize> = None;
    let mut arcs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut rest = content;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let after = &rest[start..];
            let len = after.find(char::is_whitespace).unwrap_or(after.len());
            tokens.push((offset + start + 1, &after[..len]));
            offset += start + len;
            rest = &after[len..];
        }
        if tokens.is_empty() {
            continue;
        }
        let number = |(col, tok): (usize, &str)| {
            tok.parse::<usize>().map_err(|_| {
                syntax(
                    line,
                    col,
                    format!("expected a vertex number, found {tok:?}"),
                )
            })
        };
        match order {
            None => {
                if tokens.len() != 1 {
                    return Err(syntax(
                        line,
                        tokens[1].0,
                        "the first line must hold only the order",
                    ));
                }
                order = Some(number(tokens[0])?);
            }
            Some(n) => {
                if tokens.len() != 2 {
                    let col = tokens.get(2).map_or(tokens[0].0, |t| t.0);
                    return Err(syntax(line, col, "expected an arc \"u v\""));
                }
                let (u, v) = (number(tokens[0])?, number(tokens[1])?);
                for (w, (col, _)) in [(u, tokens[0]), (v, tokens[1])] {
                    if w >= n {
                        return Err(syntax(
                            line,
                            col,
                            format!("vertex {w} is out of range for order {n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(ParseError::Digraph(Error::LoopArc(u)));
                }
                arcs.push((u, v));
            }
        }
    }
    let n = order.ok_or_else(|| syntax(1, 1, "missing order line"))?;
    Ok(Digraph::from_arcs(n, arcs)?)
}

fn emit_edge_list(d: &Digraph) -> String {
    let mut out = format!("{}\n", d.order());
    for (u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_digraph6(text: &str) -> Result<Digraph, ParseError> {
    let line = text.trim();
    let lead = text.len() - text.trim_start().len();
    let bytes = line.as_bytes();
    let col = |i: usize| lead + i + 1;
    if bytes.first() != Some(&b'&') {
        return Err(syntax(1, col(0), "digraph6 must start with '&'"));
    }
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(syntax(
                1,
                col(i),
                format!("byte {b} is outside the printable range 63..=126"),
            ));
        }
    }
    let (n, body_start) = match bytes.get(1) {
        None => return Err(syntax(1, col(1), "missing order")),
        Some(&126) => {
            if bytes.get(2) == Some(&126) {
                return Err(syntax(1, col(2), "orders above 258047 are not supported"));
            }
            if bytes.len() < 5 {
                return Err(syntax(1, col(bytes.len()), "truncated order"));
            }
            let n = bytes[2..5]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 5)
        }
        Some(&b) => ((b - 63) as usize, 2),
    };
    let body = &bytes[body_start..];
    let needed = (n * n).div_ceil(6);
    if body.len() != needed {
        return Err(syntax(
            1,
            col(body_start + body.len().min(needed)),
            format!(
                "expected {needed} matrix bytes for order {n}, found {}",
                body.len()
            ),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if bit(u * n + v) {
                if u == v {
                    return Err(ParseError::Digraph(Error::LoopArc(u)));
                }
                arcs.push((u, v));
            }
        }
    }
    Ok(Digraph::from_arcs(n, arcs)?)
}

pub fn emit_digraph6(d: &Digraph) -> String {
    let n = d.order();
    let mut out = String::from("&");
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let bits: Vec<bool> = (0..n * n).map(|k| d.has_arc(k / n, k % n)).collect();
    for chunk in bits.chunks(6) {
        let v = chunk
            .iter()
            .enumerate()
            .fold(0u8, |acc, (i, &b)| acc | ((b as u8) << (5 - i)));
        out.push((v + 63) as char);
    }
    out
}

fn parse_json(text: &str) -> Result<Digraph, ParseError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| syntax(e.line(), e.column(), e.to_string()))?;
    // Accept a bare arc list or a document wrapping one.
    let inner = value
        .get("data")
        .filter(|_| value.get("schema_version").is_some())
        .unwrap_or(&value);
    let list: ArcListIn =
        serde_json::from_value(inner.clone()).map_err(|e| syntax(1, 1, e.to_string()))?;
    Ok(Digraph::from_arcs(list.n, list.arcs)?)
}

#[derive(serde::Deserialize)]
struct ArcListIn {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

fn emit_dot(d: &Digraph) -> String {
    emit_dot_marked(d, &[], &[])
}

/// Dot output with `boxed` vertices drawn as boxes and `bold` arcs thickened.
pub fn emit_dot_marked(d: &Digraph, boxed: &[usize], bold: &[(usize, usize)]) -> String {
    let mut out = String::from("digraph D {\n");
    for v in 0..d.order() {
        if boxed.contains(&v) {
            out.push_str(&format!("  {v} [shape=box];\n"));
        } else {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in d.arcs() {
        let mut attrs = Vec::new();
        if d.is_digon(u, v) {
            if u > v {
                continue;
            }
            attrs.push("dir=both");
        }
        if bold.contains(&(u, v)) || (d.is_digon(u, v) && bold.contains(&(v, u))) {
            attrs.push("penwidth=2");
        }
        if attrs.is_empty() {
            out.push_str(&format!("  {u} -> {v};\n"));
        } else {
            out.push_str(&format!("  {u} -> {v} [{}];\n", attrs.join(", ")));
        }
    }
    out.push_str("}\n");
    out
}
