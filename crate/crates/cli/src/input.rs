use std::io::Read;
use std::path::Path;

use modcycle::graph::{parse_graph, Graph};

use crate::CliError;

/// Graphs from `-` (stdin), a file with one graph per line, or a literal
/// graph6/sparse6 string. Blank lines are skipped.
pub fn read_graphs(source: &str) -> Result<Vec<Graph>, CliError> {
    let (text, named) = if source == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        (s, true)
    } else if Path::new(source).is_file() {
        (std::fs::read_to_string(source)?, true)
    } else {
        (source.to_string(), false)
    };
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph(line).map_err(|e| {
            if named {
                CliError::Input(format!("line {}: {e}", i + 1))
            } else {
                CliError::Input(e.to_string())
            }
        })?;
        graphs.push(g);
    }
    if graphs.is_empty() {
        return Err(CliError::Input("no graphs in input".into()));
    }
    Ok(graphs)
}
