use anyhow::{bail, Context, Result};
use geodekit::{codec, FamilySpec, Graph, VertexSet};

/// A graph argument: a family spec such as `hat(K4)`, or `file:PATH` holding
/// an edge list or graph6.
pub fn read_graph(arg: &str) -> Result<Graph> {
    if let Some(path) = arg.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        return codec::parse_any(&text).with_context(|| format!("parsing {path}"));
    }
    let spec = FamilySpec::parse(arg).with_context(|| format!("graph spec {arg:?}"))?;
    spec.build().with_context(|| format!("building {arg}"))
}

/// Comma-separated vertex indices and inclusive ranges: `0-4,7..9,12`.
pub fn parse_set(text: &str, n: usize) -> Result<VertexSet> {
    let mut set = VertexSet::empty(n);
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (lo, hi) = match item.split_once("..").or_else(|| item.split_once('-')) {
            Some((a, b)) => (index(a)?, index(b)?),
            None => {
                let v = index(item)?;
                (v, v)
            }
        };
        if lo > hi {
            bail!("empty range {item:?}");
        }
        if hi >= n {
            bail!("vertex {hi} out of range for a graph of order {n}");
        }
        for v in lo..=hi {
            set.insert(v);
        }
    }
    if set.is_empty() {
        bail!("empty vertex set");
    }
    Ok(set)
}

fn index(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .with_context(|| format!("bad vertex index {s:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sets() {
        assert_eq!(
            parse_set("0-4,7..9", 18).unwrap().to_vec(),
            vec![0, 1, 2, 3, 4, 7, 8, 9]
        );
        assert_eq!(parse_set(" 3 ", 4).unwrap().to_vec(), vec![3]);
        assert!(parse_set("2-1", 4).is_err());
        assert!(parse_set("5", 4).is_err());
        assert!(parse_set("", 4).is_err());
        assert!(parse_set("a", 4).is_err());
    }

    #[test]
    fn graphs() {
        assert_eq!(read_graph("hat(K4)").unwrap().order(), 10);
        assert!(read_graph("nonsense(").is_err());
        assert!(read_graph("file:/does/not/exist").is_err());
    }
}
