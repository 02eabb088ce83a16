//! Edge-list and DIMACS parsers.
//!
//! Edge list: one `u v` pair per line, whitespace separated, `#` starts a
//! comment. Vertex names are non-negative integers; ids are assigned by sorting
//! the distinct names. DIMACS: `c` comments, a `p edge n m` header, then
//! 1-indexed `e u v` lines.

use super::SimpleGraph;
use crate::{Error, Result, SimplicityViolation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseMode {
    /// Reject self-loops and duplicate edges.
    Strict,
    /// Drop self-loops and duplicate edges, counting them.
    Dedupe,
}

/// Counts of input irregularities tolerated in dedupe mode.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseReport {
    pub dropped_self_loops: usize,
    pub dropped_duplicates: usize,
}

/// Guess the format: a leading `p`/`c`/`e` record marks DIMACS.
pub fn sniff_format(input: &str) -> GraphFormat {
    for line in input.lines() {
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let first = t.split_whitespace().next().unwrap_or("");
        return match first {
            "p" | "c" | "e" => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        };
    }
    GraphFormat::EdgeList
}

pub fn read_graph_file(
    path: &std::path::Path,
    mode: ParseMode,
) -> Result<(SimpleGraph, ParseReport)> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text, sniff_format(&text), mode)
}

pub fn parse_graph(
    input: &str,
    format: GraphFormat,
    mode: ParseMode,
) -> Result<(SimpleGraph, ParseReport)> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(input, mode),
        GraphFormat::Dimacs => parse_dimacs(input, mode),
    }
}

fn parse_u64(tok: &str, line: usize) -> Result<u64> {
    tok.parse::<u64>().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, got {tok:?}"),
    })
}

fn parse_edge_list(input: &str, mode: ParseMode) -> Result<(SimpleGraph, ParseReport)> {
    let mut raw: Vec<(u64, u64, usize)> = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected `u v`, got {} tokens", toks.len()),
            });
        }
        let u = parse_u64(toks[0], line_no)?;
        let v = parse_u64(toks[1], line_no)?;
        raw.push((u, v, line_no));
    }
    build_from_labeled(raw, mode)
}

fn parse_dimacs(input: &str, mode: ParseMode) -> Result<(SimpleGraph, ParseReport)> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut raw: Vec<(u64, u64, usize)> = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        let toks: Vec<&str> = t.split_whitespace().collect();
        match toks[0] {
            "c" => continue,
            "p" => {
                if toks.len() != 4 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected `p edge n m`".into(),
                    });
                }
                n = Some(parse_u64(toks[2], line_no)? as usize);
                declared_m = parse_u64(toks[3], line_no)? as usize;
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected `e u v`".into(),
                    });
                }
                let n = n.ok_or(Error::Parse {
                    line: line_no,
                    msg: "edge before `p` header".into(),
                })?;
                let u = parse_u64(toks[1], line_no)?;
                let v = parse_u64(toks[2], line_no)?;
                for x in [u, v] {
                    if x == 0 || x as usize > n {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("vertex {x} out of range 1..={n}"),
                        });
                    }
                }
                raw.push((u, v, line_no));
            }
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unknown record {other:?}"),
                });
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: input.lines().count(),
        msg: "missing `p` header".into(),
    })?;
    if mode == ParseMode::Strict && raw.len() != declared_m {
        return Err(Error::Parse {
            line: input.lines().count(),
            msg: format!("header declares {declared_m} edges, found {}", raw.len()),
        });
    }
    // DIMACS vertices are exactly 1..=n regardless of which appear on edges.
    let labels: Vec<u64> = (1..=n as u64).collect();
    build_with_labels(labels, raw, mode)
}

fn build_from_labeled(
    raw: Vec<(u64, u64, usize)>,
    mode: ParseMode,
) -> Result<(SimpleGraph, ParseReport)> {
    let mut labels: Vec<u64> = raw
        .iter()
        .flat_map(|&(u, v, _)| [u, v])
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    labels.sort_unstable();
    build_with_labels(labels, raw, mode)
}

fn build_with_labels(
    labels: Vec<u64>,
    raw: Vec<(u64, u64, usize)>,
    mode: ParseMode,
) -> Result<(SimpleGraph, ParseReport)> {
    let index: std::collections::BTreeMap<u64, u32> = labels
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i as u32))
        .collect();
    let mut report = ParseReport::default();
    let mut seen = std::collections::BTreeSet::new();
    let mut edges = Vec::new();
    for (lu, lv, line) in raw {
        let u = index[&lu];
        let v = index[&lv];
        if u == v {
            match mode {
                ParseMode::Strict => {
                    return Err(Error::Simplicity {
                        line,
                        kind: SimplicityViolation::SelfLoop,
                    })
                }
                ParseMode::Dedupe => {
                    report.dropped_self_loops += 1;
                    continue;
                }
            }
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            match mode {
                ParseMode::Strict => {
                    return Err(Error::Simplicity {
                        line,
                        kind: SimplicityViolation::DuplicateEdge,
                    })
                }
                ParseMode::Dedupe => {
                    report.dropped_duplicates += 1;
                    continue;
                }
            }
        }
        edges.push(key);
    }
    if edges.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let g = SimpleGraph::from_edges_labeled(labels, &edges)?;
    Ok((g, report))
}
