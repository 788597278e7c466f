//! Reading graphs and colorings, writing reports.

use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use bicolor::graph::parse_edge_list;
use bicolor::{Coloring, Graph};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// Envelope shared by every JSON report.
#[derive(Serialize)]
pub struct Report<I: Serialize, R: Serialize> {
    pub schema_version: u32,
    pub command: &'static str,
    pub inputs: I,
    pub results: R,
}

impl<I: Serialize, R: Serialize> Report<I, R> {
    pub fn new(command: &'static str, inputs: I, results: R) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            inputs,
            results,
        }
    }

    /// Pretty JSON with a trailing newline, to `path` or stdout.
    pub fn emit(&self, path: Option<&Path>) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        write_text(path, &text)
    }
}

pub fn write_text(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read graph {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("in graph file {}", path.display()))
}

/// Either a `color` report or the plain format: an optional `s <palette>`
/// line, then one color per line. Blank lines and `#` lines are skipped.
pub fn read_coloring(path: &Path) -> Result<Coloring> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read coloring {}", path.display()))?;
    let parsed = if text.trim_start().starts_with('{') {
        coloring_from_report(&text)
    } else {
        parse_coloring(&text)
    };
    parsed.with_context(|| format!("in coloring file {}", path.display()))
}

fn coloring_from_report(text: &str) -> Result<Coloring> {
    let value: Value = serde_json::from_str(text)?;
    let coloring = value
        .pointer("/results/run/coloring")
        .context("JSON input is not a color report")?;
    let coloring: Coloring = serde_json::from_value(coloring.clone())?;
    // Re-validate: deserialization bypasses the palette check.
    Ok(Coloring::new(coloring.palette_size(), coloring.colors().to_vec())?)
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut palette = None;
    let mut colors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("s ") {
            if palette.is_some() || !colors.is_empty() {
                bail!("line {}: palette line must come first", i + 1);
            }
            palette = Some(rest.trim().parse::<u32>().with_context(|| format!("line {}: bad palette", i + 1))?);
            continue;
        }
        colors.push(line.parse::<u32>().with_context(|| format!("line {}: bad color {line:?}", i + 1))?);
    }
    Ok(match palette {
        Some(s) => Coloring::new(s, colors)?,
        None => Coloring::from_assignment(colors),
    })
}

pub fn format_coloring(c: &Coloring) -> String {
    let mut out = format!("s {}\n", c.palette_size());
    for color in c.colors() {
        out.push_str(&format!("{color}\n"));
    }
    out
}
