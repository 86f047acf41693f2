//! Plain-text file formats for graphs and witnesses, and the JSON report
//! schema.
//!
//! Formats are deliberately line-based and human-diffable. The edge list is
//! canonical: header "n m", then one "u v" line per edge with u < v, in
//! ascending lexicographic order, so writing a parsed canonical file
//! reproduces it byte for byte. Parsers accept edges in any order but
//! reject structural defects (duplicates, loops, out-of-range endpoints,
//! wrong counts), each with its own error.
//!
//! Witness files are graph-independent on parse; shape validation against a
//! companion graph happens in the certify module, which is why the parsers
//! here return bare sequences rather than checked witnesses.

use std::collections::BTreeMap;
use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::certify::chordal::ChordalWitness;
use crate::certify::report::CertificationReport;
use crate::certify::separation::Separation;
use crate::constructions::{Coloring, ConstructionResult, CoverFamily};
use crate::bounds::format_rational;
use crate::certify::forest::ForestDecomposition;
use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected {expected}, found {found:?}")]
    Malformed { line: usize, expected: &'static str, found: String },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: u64, v: u64 },
    #[error("line {line}: edge ({u}, {v}) must have u < v")]
    EdgeNotAscending { line: usize, u: u64, v: u64 },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    EndpointOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("header promises {expected} edges, file has {got}")]
    EdgeCountMismatch { expected: usize, got: usize },
}

/// Non-empty lines with their 1-based positions.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty()).then_some((i + 1, t))
    })
}

fn parse_u64(line: usize, expected: &'static str, token: &str) -> Result<u64, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::Malformed { line, expected, found: token.to_string() })
}

fn split_pair(line: usize, expected: &'static str, text: &str) -> Result<(u64, u64), ParseError> {
    let malformed = || ParseError::Malformed { line, expected, found: text.to_string() };
    let mut it = text.split_whitespace();
    let a = it.next().ok_or_else(malformed)?;
    let b = it.next().ok_or_else(malformed)?;
    if it.next().is_some() {
        return Err(malformed());
    }
    Ok((parse_u64(line, expected, a)?, parse_u64(line, expected, b)?))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.vertex_count(), g.edge_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::Malformed {
        line: 1,
        expected: "header line \"n m\"",
        found: String::new(),
    })?;
    let (n, m) = split_pair(hline, "header line \"n m\"", header)?;
    if n > Vertex::MAX as u64 {
        return Err(ParseError::Malformed {
            line: hline,
            expected: "vertex count fitting 32 bits",
            found: header.to_string(),
        });
    }
    let n = n as usize;
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (lno, line) in lines {
        let (u, v) = split_pair(lno, "edge line \"u v\"", line)?;
        if u >= v {
            return Err(ParseError::EdgeNotAscending { line: lno, u, v });
        }
        if v >= n as u64 {
            return Err(ParseError::EndpointOutOfRange { line: lno, vertex: v, n });
        }
        if !seen.insert((u, v)) {
            return Err(ParseError::DuplicateEdge { line: lno, u, v });
        }
        edges.push((u as Vertex, v as Vertex));
    }
    if edges.len() as u64 != m {
        return Err(ParseError::EdgeCountMismatch { expected: m as usize, got: edges.len() });
    }
    Ok(Graph::from_edges(n, edges).expect("edges pre-validated"))
}

/// One colour per line, vertex order.
pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for &color in &c.colors {
        out.push_str(&format!("{color}\n"));
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Vec<usize>, ParseError> {
    content_lines(text)
        .map(|(lno, line)| parse_u64(lno, "one colour per line", line).map(|c| c as usize))
        .collect()
}

/// One class per line, in the graph's canonical edge order.
pub fn write_forest(f: &ForestDecomposition) -> String {
    let mut out = String::new();
    for &color in &f.colors {
        out.push_str(&format!("{color}\n"));
    }
    out
}

pub fn parse_forest(text: &str) -> Result<Vec<usize>, ParseError> {
    parse_coloring(text)
}

/// Fill-edge count, the fill edges, then the elimination order on one line.
pub fn write_chordal(w: &ChordalWitness) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}\n", w.fill_edges.len()));
    for &(u, v) in &w.fill_edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out.push_str(&join_vertices(&w.order));
    out.push('\n');
    out
}

pub fn parse_chordal(text: &str) -> Result<ChordalWitness, ParseError> {
    let mut lines = content_lines(text);
    let (fline, first) = lines.next().ok_or(ParseError::Malformed {
        line: 1,
        expected: "fill-edge count",
        found: String::new(),
    })?;
    let f = parse_u64(fline, "fill-edge count", first)?;
    let mut fill_edges = Vec::with_capacity(f as usize);
    for _ in 0..f {
        let (lno, line) = lines.next().ok_or(ParseError::Malformed {
            line: fline,
            expected: "a fill edge line per promised fill edge",
            found: String::new(),
        })?;
        let (u, v) = split_pair(lno, "fill edge \"u v\"", line)?;
        fill_edges.push((cast_vertex(lno, u)?, cast_vertex(lno, v)?));
    }
    let (olno, oline) = lines.next().ok_or(ParseError::Malformed {
        line: fline,
        expected: "elimination order line",
        found: String::new(),
    })?;
    let order = parse_vertex_list(olno, "space-separated elimination order", oline)?;
    if let Some((lno, line)) = lines.next() {
        return Err(ParseError::Malformed {
            line: lno,
            expected: "end of file after the elimination order",
            found: line.to_string(),
        });
    }
    Ok(ChordalWitness { fill_edges, order })
}

/// Three lines: left part, separator, right part, space-separated. A line
/// may be empty when its part is.
pub fn write_separation(s: &Separation) -> String {
    format!(
        "{}\n{}\n{}\n",
        join_vertices(&s.left),
        join_vertices(&s.separator),
        join_vertices(&s.right)
    )
}

pub fn parse_separation(text: &str) -> Result<Separation, ParseError> {
    let mut raw: Vec<&str> = text.lines().collect();
    while raw.last().is_some_and(|l| l.trim().is_empty()) {
        raw.pop();
    }
    if raw.len() != 3 {
        return Err(ParseError::Malformed {
            line: raw.len().max(1),
            expected: "exactly three lines: left part, separator, right part",
            found: format!("{} lines", raw.len()),
        });
    }
    let left = parse_vertex_list(1, "space-separated vertices", raw[0])?;
    let separator = parse_vertex_list(2, "space-separated vertices", raw[1])?;
    let right = parse_vertex_list(3, "space-separated vertices", raw[2])?;
    Ok(Separation { left, separator, right })
}

/// One set per line, space-separated vertices.
pub fn write_cover(c: &CoverFamily) -> String {
    let mut out = String::new();
    for set in &c.sets {
        out.push_str(&join_vertices(set));
        out.push('\n');
    }
    out
}

pub fn parse_cover(text: &str) -> Result<CoverFamily, ParseError> {
    let sets = content_lines(text)
        .map(|(lno, line)| parse_vertex_list(lno, "space-separated vertices", line))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CoverFamily { sets })
}

fn cast_vertex(line: usize, v: u64) -> Result<Vertex, ParseError> {
    Vertex::try_from(v).map_err(|_| ParseError::Malformed {
        line,
        expected: "vertex id fitting 32 bits",
        found: v.to_string(),
    })
}

fn parse_vertex_list(
    line: usize,
    expected: &'static str,
    text: &str,
) -> Result<Vec<Vertex>, ParseError> {
    text.split_whitespace()
        .map(|tok| parse_u64(line, expected, tok).and_then(|v| cast_vertex(line, v)))
        .collect()
}

fn join_vertices(vs: &[Vertex]) -> String {
    let mut out = String::new();
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&v.to_string());
    }
    out
}

/// Machine-readable summary of a construction, written next to its edge
/// list. Large counts are decimal strings so they survive 64-bit parsers.
pub fn metadata_json(res: &ConstructionResult, witnesses: &[&str]) -> serde_json::Value {
    serde_json::json!({
        "family": res.family,
        "params": res.params,
        "n": res.graph.vertex_count(),
        "m": res.graph.edge_count(),
        "claimed_max_degree": res.claimed_max_degree,
        "claimed_diameter": res.claimed_diameter,
        "diameter_is_exact": res.diameter_is_exact,
        "claimed_triangle_free": res.claimed_triangle_free,
        "claimed_average_degree_max":
            res.claimed_average_degree_max.as_ref().map(format_rational),
        "claimed_treewidth": res.claimed_treewidth,
        "claimed_arboricity": res.claimed_arboricity,
        "guaranteed_vertices": res.guaranteed_vertices.as_ref().map(|g| g.to_string()),
        "witnesses": witnesses,
    })
}

/// Measured invariants of the graph a report talks about. Fields that a
/// given check does not compute stay null so the schema never shifts.
#[derive(Debug, Clone, Serialize)]
pub struct Measured {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub average_degree: String,
    pub diameter: Option<String>,
    pub arboricity: Option<usize>,
    pub witness_width: Option<usize>,
}

impl Measured {
    pub fn of(g: &Graph) -> Self {
        Measured {
            n: g.vertex_count(),
            m: g.edge_count(),
            max_degree: g.max_degree(),
            min_degree: g.min_degree(),
            average_degree: format_rational(&g.average_degree()),
            diameter: None,
            arboricity: None,
            witness_width: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportFile {
    pub check: String,
    pub parameters: BTreeMap<String, String>,
    pub measured: Measured,
    pub claimed: BTreeMap<String, String>,
    pub checks: Vec<ReportCheck>,
    pub pass: bool,
    pub wall_time_ms: u64,
}

impl ReportFile {
    pub fn from_battery(
        name: &str,
        parameters: BTreeMap<String, String>,
        measured: Measured,
        claimed: BTreeMap<String, String>,
        battery: &CertificationReport,
        wall_time_ms: u64,
    ) -> Self {
        ReportFile {
            check: name.to_string(),
            parameters,
            measured,
            claimed,
            checks: battery
                .lines
                .iter()
                .map(|l| ReportCheck {
                    name: l.name.to_string(),
                    pass: l.pass,
                    detail: l.detail.clone(),
                })
                .collect(),
            pass: battery.pass,
            wall_time_ms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{de_bruijn_family, treewidth_odd_family, DEFAULT_BUDGET};

    #[test]
    fn edge_list_roundtrip_is_byte_identical() {
        let g = de_bruijn_family(3, 3, DEFAULT_BUDGET).unwrap().graph;
        let text = write_edge_list(&g);
        let parsed = parse_edge_list(&text).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(write_edge_list(&parsed), text);
    }

    #[test]
    fn out_of_order_edges_parse_and_canonicalise() {
        let g = parse_edge_list("3 3\n1 2\n0 2\n0 1\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(write_edge_list(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn edge_list_rejections_are_distinct() {
        assert_eq!(
            parse_edge_list("3 2\n0 1\n0 1\n"),
            Err(ParseError::DuplicateEdge { line: 3, u: 0, v: 1 })
        );
        assert_eq!(
            parse_edge_list("3 1\n1 0\n"),
            Err(ParseError::EdgeNotAscending { line: 2, u: 1, v: 0 })
        );
        assert_eq!(
            parse_edge_list("3 1\n1 1\n"),
            Err(ParseError::EdgeNotAscending { line: 2, u: 1, v: 1 })
        );
        assert_eq!(
            parse_edge_list("3 1\n0 3\n"),
            Err(ParseError::EndpointOutOfRange { line: 2, vertex: 3, n: 3 })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n"),
            Err(ParseError::EdgeCountMismatch { expected: 2, got: 1 })
        );
        assert!(matches!(
            parse_edge_list("3 1\n0 1 2\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(ParseError::Malformed { line: 1, .. })));
    }

    #[test]
    fn coloring_roundtrip() {
        let c = Coloring { colors: vec![0, 2, 1, 0], num_colors: 3 };
        let text = write_coloring(&c);
        assert_eq!(text, "0\n2\n1\n0\n");
        assert_eq!(parse_coloring(&text).unwrap(), c.colors);
        assert!(matches!(parse_coloring("0\nx\n"), Err(ParseError::Malformed { line: 2, .. })));
    }

    #[test]
    fn chordal_roundtrip() {
        let w = treewidth_odd_family(2, 3, 6, DEFAULT_BUDGET).unwrap().chordal.unwrap();
        let text = write_chordal(&w);
        assert_eq!(parse_chordal(&text).unwrap(), w);

        let with_fill = ChordalWitness { fill_edges: vec![(0, 2), (1, 3)], order: vec![0, 1, 2, 3] };
        let text = write_chordal(&with_fill);
        assert_eq!(text, "2\n0 2\n1 3\n0 1 2 3\n");
        assert_eq!(parse_chordal(&text).unwrap(), with_fill);
    }

    #[test]
    fn chordal_shape_errors() {
        // promised two fill edges, delivered one
        assert!(parse_chordal("2\n0 2\n0 1 2 3\n").is_err());
        assert!(matches!(
            parse_chordal("0\n0 1 2\nextra\n"),
            Err(ParseError::Malformed { line: 3, .. })
        ));
        assert!(parse_chordal("").is_err());
    }

    #[test]
    fn separation_roundtrip_with_empty_side() {
        let s = Separation { left: vec![], separator: vec![0, 1], right: vec![2, 3, 4] };
        let text = write_separation(&s);
        assert_eq!(text, "\n0 1\n2 3 4\n");
        assert_eq!(parse_separation(&text).unwrap(), s);
        assert!(matches!(parse_separation("0 1\n2\n"), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_separation("0\n1\n2\n3\n"), Err(ParseError::Malformed { .. })));
    }

    #[test]
    fn cover_roundtrip() {
        let (g, cover) = {
            let res = de_bruijn_family(2, 3, DEFAULT_BUDGET).unwrap();
            (res.graph, res.cover.unwrap())
        };
        let text = write_cover(&cover);
        let parsed = parse_cover(&text).unwrap();
        assert_eq!(parsed.sets, cover.sets);
        assert!(parsed.verify(&g).is_ok());
    }

    #[test]
    fn metadata_serialises_guarantee_as_string() {
        let res = de_bruijn_family(2, 5, DEFAULT_BUDGET).unwrap();
        let meta = metadata_json(&res, &["cover.txt"]);
        assert_eq!(meta["family"], "debruijn");
        assert_eq!(meta["guaranteed_vertices"], "32");
        assert_eq!(meta["claimed_max_degree"], 4);
        assert_eq!(meta["n"], 32);
        assert_eq!(meta["witnesses"][0], "cover.txt");
        assert!(meta["claimed_treewidth"].is_null());
    }
}
