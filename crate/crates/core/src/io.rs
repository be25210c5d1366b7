//! Graph and coloring file formats.
//!
//! Graphs: DIMACS `.col` ("p edge n m" header, "e u v" lines, 1-based) and
//! a plain edge list (first line "n m", then 0-based "u v" pairs). Both are
//! whitespace-delimited with 'c' comment lines. Writers emit canonical
//! sorted edge order, so write∘read∘write is bit-exact.
//!
//! Colorings: JSON `{"palette_size": k, "colors": [...]}` with 0 meaning
//! uncolored, also accepted as a bare whitespace-separated list.

use serde::Deserialize;

use crate::coloring::{Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl GraphFormat {
    /// Infer from a file name: `.col`/`.dimacs` mean DIMACS, everything
    /// else is an edge list.
    pub fn from_path(path: &str) -> GraphFormat {
        let lower = path.to_ascii_lowercase();
        if lower.ends_with(".col") || lower.ends_with(".dimacs") {
            GraphFormat::Dimacs
        } else {
            GraphFormat::EdgeList
        }
    }

    pub fn parse_name(name: &str) -> Result<GraphFormat> {
        match name {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(Error::Input(format!("unknown format '{other}'"))),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dimacs => write_dimacs(g),
        GraphFormat::EdgeList => write_edge_list(g),
    }
}

fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                let kind = tok.next().unwrap_or("");
                if kind != "edge" && kind != "col" {
                    return Err(Error::Parse(format!(
                        "line {}: expected 'p edge', got 'p {kind}'",
                        lineno + 1
                    )));
                }
                n = Some(parse_num(tok.next(), lineno)?);
                declared_m = parse_num(tok.next(), lineno)?;
            }
            Some("e") => {
                let u: usize = parse_num(tok.next(), lineno)?;
                let v: usize = parse_num(tok.next(), lineno)?;
                if u == 0 || v == 0 {
                    return Err(Error::Parse(format!(
                        "line {}: DIMACS vertices are 1-based",
                        lineno + 1
                    )));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(Error::Parse(format!(
                    "line {}: unknown record '{other}'",
                    lineno + 1
                )));
            }
            None => {}
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing 'p edge' header".into()))?;
    let g = Graph::from_edges(n, &edges)?;
    if declared_m != 0 && g.edge_count() != declared_m {
        // Tolerated: many published .col files count directed or repeated
        // edges in the header.
    }
    Ok(g)
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('c'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let mut tok = header.split_whitespace();
    let n: usize = parse_num(tok.next(), 0)?;
    let m: usize = parse_num(tok.next(), 0)?;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        let mut tok = line.split_whitespace();
        let u: usize = parse_num(tok.next(), i + 1)?;
        let v: usize = parse_num(tok.next(), i + 1)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, &edges)
}

fn parse_num(tok: Option<&str>, lineno: usize) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse(format!("line {}: missing number", lineno + 1)))?
        .parse()
        .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
}

fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Deserialize)]
struct ColoringFile {
    palette_size: u32,
    colors: Vec<Color>,
}

/// Accepts the JSON object form or a bare whitespace list of colors (the
/// palette then being the largest color present).
pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let file: ColoringFile =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        Coloring::from_colors(file.colors, file.palette_size)
    } else {
        let colors: Vec<Color> = text
            .split_whitespace()
            .map(|t| t.parse().map_err(|e| Error::Parse(format!("bad color '{t}': {e}"))))
            .collect::<Result<_>>()?;
        let palette = colors.iter().copied().max().unwrap_or(1).max(1);
        Coloring::from_colors(colors, palette)
    }
}

pub fn write_coloring(phi: &Coloring) -> String {
    serde_json::json!({
        "palette_size": phi.palette,
        "colors": phi.colors,
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn dimacs_round_trip_is_bit_exact() {
        let g = gen::random_maxdeg(9, 5, 0.5, 42);
        let text = write_graph(&g, GraphFormat::Dimacs);
        let parsed = parse_graph(&text, GraphFormat::Dimacs).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(write_graph(&parsed, GraphFormat::Dimacs), text);
    }

    #[test]
    fn edge_list_round_trip_is_bit_exact() {
        let g = gen::random_maxdeg(9, 5, 0.5, 43);
        let text = write_graph(&g, GraphFormat::EdgeList);
        let parsed = parse_graph(&text, GraphFormat::EdgeList).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(write_graph(&parsed, GraphFormat::EdgeList), text);
    }

    #[test]
    fn dimacs_parses_comments_and_one_based() {
        let text = "c a comment\np edge 3 2\ne 1 2\ne 2 3\n";
        let g = parse_graph(text, GraphFormat::Dimacs).unwrap();
        assert_eq!(g, gen::path(3));
    }

    #[test]
    fn bad_inputs_are_parse_errors() {
        assert!(parse_graph("e 1 2\n", GraphFormat::Dimacs).is_err());
        assert!(parse_graph("", GraphFormat::EdgeList).is_err());
        assert!(parse_graph("2 1\n0 0\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph("2 2\n0 1\n", GraphFormat::EdgeList).is_err());
    }

    #[test]
    fn coloring_both_forms() {
        let json = r#"{"palette_size": 4, "colors": [1, 0, 4]}"#;
        let c = parse_coloring(json).unwrap();
        assert_eq!(c.palette, 4);
        assert_eq!(c.colors, vec![1, 0, 4]);
        let plain = parse_coloring("1 2 3 2").unwrap();
        assert_eq!(plain.palette, 3);
        let round = parse_coloring(&write_coloring(&c)).unwrap();
        assert_eq!(round, c);
    }

    #[test]
    fn format_inference() {
        assert_eq!(GraphFormat::from_path("x/queen5.col"), GraphFormat::Dimacs);
        assert_eq!(GraphFormat::from_path("graph.txt"), GraphFormat::EdgeList);
    }
}
