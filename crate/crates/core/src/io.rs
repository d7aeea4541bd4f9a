//! Edge-list and label files.
//!
//! Edge lists follow the SNAP layout: one edge per line as two
//! whitespace-separated integers, `#` starts a comment line. Repeated edges
//! (in either orientation) are dropped before the graph is validated.
//! Label files hold one `<node_id> <0|1>` pair per line.

use std::collections::HashSet;
use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph::{build_graph, Graph, GraphError, LabeledGraph};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn open(path: &Path) -> Result<fs::File, IoError> {
    fs::File::open(path).map_err(|source| IoError::File {
        path: path.to_owned(),
        source,
    })
}

fn create(path: &Path) -> Result<fs::File, IoError> {
    fs::File::create(path).map_err(|source| IoError::File {
        path: path.to_owned(),
        source,
    })
}

fn parse_id(token: &str, line: usize) -> Result<u64, IoError> {
    token.parse().map_err(|_| IoError::Parse {
        line,
        message: format!("expected a non-negative integer, got {token:?}"),
    })
}

/// Parses edge pairs, dropping repeats; the first orientation seen is kept.
pub fn parse_edge_list<R: Read>(reader: R) -> Result<Vec<(u64, u64)>, IoError> {
    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(a), Some(b)) = (fields.next(), fields.next()) else {
            return Err(IoError::Parse {
                line: i + 1,
                message: "expected two node ids".into(),
            });
        };
        let (u, v) = (parse_id(a, i + 1)?, parse_id(b, i + 1)?);
        if seen.insert((u.min(v), u.max(v))) {
            pairs.push((u, v));
        }
    }
    Ok(pairs)
}

pub fn read_edge_list(path: &Path) -> Result<Graph, IoError> {
    let pairs = parse_edge_list(open(path)?)?;
    Ok(build_graph(&pairs)?)
}

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<(), IoError> {
    writeln!(out, "# nodes: {} edges: {}", g.node_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", g.original_id(u), g.original_id(v))?;
    }
    Ok(())
}

pub fn save_edge_list(g: &Graph, path: &Path) -> Result<(), IoError> {
    let mut out = std::io::BufWriter::new(create(path)?);
    write_edge_list(g, &mut out)?;
    out.flush()?;
    Ok(())
}

/// Outcome of matching a label file against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelFile {
    /// One label per dense node index.
    pub labels: Vec<u8>,
    /// Graph nodes absent from the file; they were given label 0.
    pub missing: usize,
    /// Ids in the file that are not nodes of the graph; ignored.
    pub unknown: usize,
}

pub fn parse_labels<R: Read>(g: &Graph, reader: R) -> Result<LabelFile, IoError> {
    let mut labels = vec![0u8; g.node_count()];
    let mut assigned = vec![false; g.node_count()];
    let mut unknown = 0;
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(id), Some(label)) = (fields.next(), fields.next()) else {
            return Err(IoError::Parse {
                line: i + 1,
                message: "expected `<node_id> <0|1>`".into(),
            });
        };
        let id = parse_id(id, i + 1)?;
        let label = match label {
            "0" => 0,
            "1" => 1,
            other => {
                return Err(IoError::Parse {
                    line: i + 1,
                    message: format!("label must be 0 or 1, got {other:?}"),
                })
            }
        };
        match g.index_of(id) {
            Some(v) => {
                labels[v] = label;
                assigned[v] = true;
            }
            None => unknown += 1,
        }
    }
    let missing = assigned.iter().filter(|&&a| !a).count();
    Ok(LabelFile {
        labels,
        missing,
        unknown,
    })
}

pub fn read_labels(g: &Graph, path: &Path) -> Result<LabelFile, IoError> {
    let file = parse_labels(g, open(path)?)?;
    if file.missing > 0 {
        log::warn!(
            "{}: {} nodes have no label and default to 0",
            path.display(),
            file.missing
        );
    }
    if file.unknown > 0 {
        log::warn!(
            "{}: {} labeled ids are not in the graph",
            path.display(),
            file.unknown
        );
    }
    Ok(file)
}

pub fn write_labels<W: Write>(lg: &LabeledGraph, mut out: W) -> Result<(), IoError> {
    let g = lg.graph();
    for v in 0..g.node_count() {
        writeln!(out, "{} {}", g.original_id(v), lg.label(v))?;
    }
    Ok(())
}

pub fn save_labels(lg: &LabeledGraph, path: &Path) -> Result<(), IoError> {
    let mut out = std::io::BufWriter::new(create(path)?);
    write_labels(lg, &mut out)?;
    out.flush()?;
    Ok(())
}
