//! Edge-list and graph6 reading and writing.
//!
//! Edge lists hold one `u v` pair per line with 0-based ids; `#` starts a
//! comment. Because isolated trailing vertices cannot be recovered from the
//! pairs alone, the writer emits a `# vertices N` comment which the reader
//! honours. Without it the order is one more than the largest id seen.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edges" | "el" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::Parse {
                location: "format".into(),
                message: format!("unknown graph format {other:?}"),
            }),
        }
    }
}

impl Format {
    /// Guesses the format from a file extension, defaulting to edge lists.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") | Some("graph6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    }
}

pub fn read_graph(path: &Path, format: Format) -> std::io::Result<Result<Graph>> {
    let text = fs::read_to_string(path)?;
    Ok(parse(&text, format))
}

pub fn write_graph(path: &Path, g: &Graph, format: Format) -> std::io::Result<()> {
    fs::write(path, render(g, format))
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edgelist(text),
        Format::Graph6 => {
            let line = text
                .lines()
                .find(|l| !l.trim().is_empty())
                .ok_or_else(|| parse_err("byte 0", "empty graph6 input"))?;
            from_graph6(line.trim())
        }
    }
}

pub fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edgelist(g),
        Format::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
    }
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let loc = || format!("line {lineno}");
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(&raw[p + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            let mut words = c.split_whitespace();
            if words.next() == Some("vertices") {
                let n = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| parse_err(loc(), "malformed '# vertices' header"))?;
                declared = Some(n);
            }
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        match fields.as_slice() {
            [] => continue,
            [u, v] => {
                let u: usize = u
                    .parse()
                    .map_err(|_| parse_err(loc(), format!("bad vertex id {u:?}")))?;
                let v: usize = v
                    .parse()
                    .map_err(|_| parse_err(loc(), format!("bad vertex id {v:?}")))?;
                if u == v {
                    return Err(parse_err(loc(), format!("self-loop at vertex {u}")));
                }
                max_id = Some(max_id.unwrap_or(0).max(u).max(v));
                edges.push((u.min(v), u.max(v), lineno));
            }
            _ => return Err(parse_err(loc(), "expected exactly two vertex ids")),
        }
    }
    let n = match (declared, max_id) {
        (Some(n), Some(m)) if m >= n => {
            return Err(parse_err(
                "header",
                format!("vertex {m} exceeds declared order {n}"),
            ))
        }
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
            return Err(parse_err(
                format!("line {}", w[0].2.max(w[1].2)),
                format!("duplicate edge {}-{}", w[0].0, w[0].1),
            ));
        }
    }
    Graph::from_edges(n, edges.into_iter().map(|(u, v, _)| (u, v)))
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut s = format!("# vertices {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

const G6_BIAS: u8 = 63;

/// Encodes `g` in graph6 (no trailing newline, no `>>graph6<<` header).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + G6_BIAS);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + G6_BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + G6_BIAS);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + G6_BIAS);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + G6_BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                format!("byte {i}"),
                format!("invalid graph6 byte {b:#x}"),
            ));
        }
    }
    let value = |i: usize| -> Result<usize> {
        bytes
            .get(i)
            .map(|&b| (b - G6_BIAS) as usize)
            .ok_or_else(|| parse_err(format!("byte {i}"), "truncated graph6 size field"))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(parse_err("byte 0", "empty graph6 string")),
        Some(126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | value(i)?;
            }
            (n, 8)
        }
        Some(126) => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | value(i)?;
            }
            (n, 4)
        }
        Some(_) => (value(0)?, 1),
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let expected = pos + total_bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            format!("byte {}", bytes.len().min(expected)),
            format!(
                "expected {expected} bytes for {n} vertices, found {}",
                bytes.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    let mut current = 0u8;
    for v in 1..n {
        for u in 0..v {
            if bit % 6 == 0 {
                current = bytes[pos] - G6_BIAS;
                pos += 1;
            }
            if (current >> (5 - bit % 6)) & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges)
}
