//! Reading graphs and text files with errors that tell a missing file from a
//! malformed one.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use cyclesat::graph::parse_graph;
use cyclesat::Graph;

pub fn read_text(path: &Path) -> Result<String> {
    if !path.exists() {
        bail!("file not found: {}", path.display());
    }
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Graph from `path`, or standard input when `None`. The format is detected
/// from the first byte.
pub fn read_graph(path: Option<&Path>) -> Result<Graph> {
    match path {
        Some(p) => {
            let text = read_text(p)?;
            parse_graph(&text).with_context(|| format!("malformed graph in {}", p.display()))
        }
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .context("cannot read standard input")?;
            parse_graph(&text).context("malformed graph on standard input")
        }
    }
}
