//! DIMACS-like text form for graphs.
//!
//! Layout: one `p edge <order> <size>` header, an optional `c label <index>
//! <a,b,...>` comment per vertex (1-based index, comma-joined subset), and
//! one `e <u> <v>` line per edge (1-based endpoints, `u < v`, ascending).
//! Unknown comment lines are ignored on input; either all vertices carry a
//! label or none do.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Labels, Symbol};

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.order(), g.size()).unwrap();
    if let Some(labels) = g.labels() {
        for (v, set) in labels.sets.iter().enumerate() {
            let joined: Vec<String> = set.iter().map(|s| s.to_string()).collect();
            writeln!(out, "c label {} {}", v + 1, joined.join(",")).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, Vec<u32>)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let ctx = |msg: String| Error::Parse(format!("line {}: {}", lineno + 1, msg));
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(ctx("duplicate p line".into()));
                }
                if tokens.next() != Some("edge") {
                    return Err(ctx("expected `p edge <order> <size>`".into()));
                }
                let order = parse_num(tokens.next(), "order").map_err(&ctx)?;
                let size = parse_num(tokens.next(), "size").map_err(&ctx)?;
                header = Some((order, size));
            }
            Some("e") => {
                let u: usize = parse_num(tokens.next(), "endpoint").map_err(&ctx)?;
                let v: usize = parse_num(tokens.next(), "endpoint").map_err(&ctx)?;
                if u == 0 || v == 0 {
                    return Err(ctx("edge endpoints are 1-based".into()));
                }
                edges.push((u - 1, v - 1));
            }
            Some("c") => {
                let mut rest = tokens;
                if rest.next() == Some("label") {
                    let index: usize = parse_num(rest.next(), "label index").map_err(&ctx)?;
                    let subset = rest
                        .next()
                        .ok_or_else(|| ctx("label line missing subset".into()))?;
                    let mut symbols = Vec::new();
                    for part in subset.split(',') {
                        let value: u32 = part
                            .parse()
                            .map_err(|_| ctx(format!("bad symbol `{part}` in label")))?;
                        symbols.push(value);
                    }
                    if index == 0 {
                        return Err(ctx("label indices are 1-based".into()));
                    }
                    labels.push((index - 1, symbols));
                }
                // other comments are ignored
            }
            Some(other) => {
                return Err(ctx(format!("unrecognized line type `{other}`")));
            }
            None => unreachable!(),
        }
    }

    let (order, size) = header.ok_or_else(|| Error::Parse("missing p edge header".into()))?;
    let g = Graph::from_edges(order, &edges)?;
    if g.size() != size {
        return Err(Error::Parse(format!(
            "header declares {size} edges but {} distinct edges were given",
            g.size()
        )));
    }
    if labels.is_empty() {
        return Ok(g);
    }
    if labels.len() != order {
        return Err(Error::Parse(format!(
            "{} label lines for {order} vertices; label all vertices or none",
            labels.len()
        )));
    }
    let mut sets: Vec<Option<Vec<u32>>> = vec![None; order];
    for (index, symbols) in labels {
        if index >= order {
            return Err(Error::Parse(format!("label index {} out of range", index + 1)));
        }
        if sets[index].replace(symbols).is_some() {
            return Err(Error::Parse(format!("duplicate label for vertex {}", index + 1)));
        }
    }
    let sets: Vec<Vec<u32>> = sets.into_iter().map(|s| s.unwrap()).collect();
    let k = sets[0].len();
    if k == 0 || sets.iter().any(|s| s.len() != k) {
        return Err(Error::Parse("labels must be non-empty subsets of uniform size".into()));
    }
    let n = sets.iter().flatten().copied().max().unwrap_or(0);
    let mut converted = Vec::with_capacity(order);
    for set in sets {
        let mut symbols = Vec::with_capacity(k);
        for value in set {
            symbols.push(Symbol::new(value)?);
        }
        converted.push(symbols);
    }
    g.with_labels(Labels { n, k: k as u32, sets: converted })
}

fn parse_num<T: std::str::FromStr>(
    token: Option<&str>,
    what: &str,
) -> std::result::Result<T, String> {
    token
        .ok_or_else(|| format!("missing {what}"))
        .and_then(|t| t.parse().map_err(|_| format!("bad {what} `{t}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, kneser_graph};

    #[test]
    fn round_trip_is_byte_identical() {
        for g in [kneser_graph(5, 2).unwrap(), kneser_graph(6, 2).unwrap(), complete_graph(7).unwrap()] {
            let text = write_dimacs(&g);
            let parsed = parse_dimacs(&text).unwrap();
            assert_eq!(parsed.order(), g.order());
            assert_eq!(parsed.size(), g.size());
            for u in 0..g.order() {
                for v in 0..g.order() {
                    assert_eq!(parsed.are_adjacent(u, v), g.are_adjacent(u, v));
                }
            }
            assert_eq!(parsed.labels(), g.labels());
            assert_eq!(write_dimacs(&parsed), text);
        }
    }

    #[test]
    fn petersen_header_and_labels() {
        let text = write_dimacs(&kneser_graph(5, 2).unwrap());
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("p edge 10 15"));
        assert_eq!(lines.next(), Some("c label 1 1,2"));
        assert!(text.lines().any(|l| l == "c label 10 4,5"));
    }

    #[test]
    fn kneser2_detection_survives_round_trip() {
        let text = write_dimacs(&kneser_graph(6, 2).unwrap());
        let parsed = parse_dimacs(&text).unwrap();
        assert_eq!(parsed.kneser2_order(), Some(6));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(parse_dimacs("e 1 2\n").is_err()); // no header
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err()); // out of range
        assert!(parse_dimacs("p edge 2 2\ne 1 2\n").is_err()); // size mismatch
        assert!(parse_dimacs("p edge 2 1\nq 1 2\n").is_err()); // bad line type
        assert!(parse_dimacs("p edge 2 1\nc label 1 1,2\ne 1 2\n").is_err()); // partial labels
        // plain comments are fine
        let g = parse_dimacs("c generated\np edge 2 1\ne 1 2\n").unwrap();
        assert_eq!((g.order(), g.size()), (2, 1));
    }
}
