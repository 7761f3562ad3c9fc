//! Text formats: plain edge lists, graph6 (orders up to 62) and DOT export.
//!
//! Edge-list grammar: the first non-blank line holds the vertex count; every
//! following non-blank line holds one `u v` pair of 0-based indices. Lines
//! starting with `#` are comments.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write;

pub const GRAPH6_MAX_ORDER: usize = 62;
const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>().map_err(|_| {
                Error::parse_at_line(
                    line_no,
                    format!("expected a non-negative integer, found `{s}`"),
                )
            })
        };
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(Error::parse_at_line(line_no, "expected the vertex count"));
                }
                n = Some(number(fields[0])?);
            }
            Some(order) => {
                if fields.len() != 2 {
                    return Err(Error::parse_at_line(line_no, "expected `u v`"));
                }
                let (u, v) = (number(fields[0])?, number(fields[1])?);
                if u == v {
                    return Err(Error::Loop(u));
                }
                for x in [u, v] {
                    if x >= order {
                        return Err(Error::OutOfRange {
                            vertex: x,
                            n: order,
                        });
                    }
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| Error::parse_at_line(1, "missing vertex count"))?;
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: GRAPH6_MAX_ORDER,
        });
    }
    let mut bytes = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(bytes).expect("graph6 is printable ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let body = body.strip_prefix(GRAPH6_HEADER).unwrap_or(body);
    let bytes = body.as_bytes();
    let first = *bytes
        .first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::parse_at_byte(
            0,
            format!("invalid graph6 byte {first}"),
        ));
    }
    if first == 126 {
        return Err(Error::TooLarge {
            n: GRAPH6_MAX_ORDER + 1,
            limit: GRAPH6_MAX_ORDER,
        });
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if bytes.len() - 1 != expected {
        return Err(Error::Graph6(format!(
            "header announces {n} vertices ({expected} data bytes) but {} data bytes follow",
            bytes.len() - 1
        )));
    }
    let mut data = Vec::with_capacity(bits);
    for (k, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse_at_byte(
                k + 1,
                format!("invalid graph6 byte {b}"),
            ));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            data.push((v >> shift) & 1 == 1);
        }
    }
    if data[bits..].iter().any(|&b| b) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if data[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if n == 0 {
        return Err(Error::Empty);
    }
    Graph::new(n, edges)
}

pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        writeln!(out, "  {v} [label=\"{v}\"];").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Edge list or graph6, chosen by content.
pub fn parse_any(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let single_token = !trimmed.contains(char::is_whitespace);
    let numeric = trimmed.chars().all(|c| c.is_ascii_digit());
    if trimmed.starts_with(GRAPH6_HEADER) || (single_token && !numeric) {
        parse_graph6(trimmed)
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn edge_list_basic() {
        let g = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(write_edge_list(&g), "3\n0 1\n1 2\n");
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list("3\n0 0"), Err(Error::Loop(0)));
        assert!(
            matches!(parse_edge_list("3\n0 x"), Err(Error::Parse { position, .. }) if position == "line 2")
        );
        assert!(matches!(
            parse_edge_list("3\n0 1 2"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("# nothing\n"),
            Err(Error::Parse { .. })
        ));
        assert_eq!(
            parse_edge_list("2\n0 5"),
            Err(Error::OutOfRange { vertex: 5, n: 2 })
        );
    }

    #[test]
    fn graph6_c5_round_trip() {
        let c5 = cycle(5);
        let s = write_graph6(&c5).unwrap();
        assert_eq!(s, "Dhc");
        let back = parse_graph6(&s).unwrap();
        assert_eq!(back, c5);
        assert_eq!(write_graph6(&back).unwrap(), s);
        assert_eq!(parse_graph6(">>graph6<<Dhc\n").unwrap(), c5);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("Dh"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("Dhcc"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~"), Err(Error::TooLarge { .. })));
        assert!(parse_graph6("D\u{7f}c").is_err());
        let big = Graph::new(63, (1..63).map(|i| (i - 1, i))).unwrap();
        assert!(matches!(
            write_graph6(&big),
            Err(Error::TooLarge { n: 63, .. })
        ));
    }

    #[test]
    fn dot_lists_every_vertex_and_edge() {
        let dot = write_dot(&Graph::new(3, [(0, 1), (1, 2)]).unwrap());
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("  2 [label=\"2\"];") && dot.contains("  1 -- 2;"));
    }

    #[test]
    fn sniffing() {
        assert_eq!(parse_any("Dhc\n").unwrap(), cycle(5));
        assert_eq!(parse_any("2\n0 1\n").unwrap().size(), 1);
        assert_eq!(parse_any("1").unwrap().order(), 1);
    }
}
