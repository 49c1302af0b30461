//! Plain-text graph files and their content digests.
//!
//! Layout: optional leading `#` comment lines, a header (`tournament 1` or
//! `digraph 1`), a line with the vertex count, then n rows of n characters
//! from {0, 1} where row i, column j = 1 means the edge i -> j. Writers emit
//! the canonical form (no comments); digests are computed over that
//! canonical form, so comments never affect certificate binding.

use anyhow::{bail, Context, Result};
use std::fmt::Write as _;
use std::path::Path;

use c5eh::graph::{OrientedDigraph, Tournament};
use sha2::{Digest, Sha256};

const TOURNAMENT_HEADER: &str = "tournament 1";
const DIGRAPH_HEADER: &str = "digraph 1";

fn parse_matrix(content: &str, expected_header: &str) -> Result<Vec<Vec<bool>>> {
    let mut lines = content.lines();
    let header = loop {
        match lines.next() {
            Some(l) if l.starts_with('#') => continue,
            Some(l) => break l.trim(),
            None => bail!("missing header line"),
        }
    };
    if header != expected_header {
        bail!("expected header {expected_header:?}, found {header:?}");
    }
    let n: usize = lines
        .next()
        .context("missing vertex count line")?
        .trim()
        .parse()
        .context("vertex count is not a number")?;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let line = lines
            .next()
            .with_context(|| format!("missing matrix row {i}"))?
            .trim();
        if line.len() != n {
            bail!("row {i} has {} characters, expected {n}", line.len());
        }
        let row: Vec<bool> = line
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => bail!("row {i} contains {other:?}, expected 0 or 1"),
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
        bail!("unexpected trailing content: {extra:?}");
    }
    Ok(rows)
}

pub fn read_tournament(path: &Path) -> Result<Tournament> {
    let content = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let rows = parse_matrix(&content, TOURNAMENT_HEADER)?;
    Tournament::from_rows(&rows).map_err(|e| anyhow::anyhow!("{e}"))
}

pub fn read_digraph(path: &Path) -> Result<OrientedDigraph> {
    let content = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let rows = parse_matrix(&content, DIGRAPH_HEADER)?;
    OrientedDigraph::from_rows(&rows).map_err(|e| anyhow::anyhow!("{e}"))
}

pub fn tournament_to_string(t: &Tournament) -> String {
    let n = t.n();
    let mut out = String::with_capacity(n * (n + 1) + 32);
    let _ = writeln!(out, "{TOURNAMENT_HEADER}");
    let _ = writeln!(out, "{n}");
    for i in 0..n {
        for j in 0..n {
            out.push(if i != j && t.beats(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

pub fn digraph_to_string(d: &OrientedDigraph) -> String {
    let n = d.n();
    let mut out = String::with_capacity(n * (n + 1) + 32);
    let _ = writeln!(out, "{DIGRAPH_HEADER}");
    let _ = writeln!(out, "{n}");
    for i in 0..n {
        for j in 0..n {
            out.push(if i != j && d.has_edge(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for b in digest {
        let _ = write!(hex, "{b:02x}");
    }
    hex
}

/// Content digest over the canonical serialization.
pub fn tournament_digest(t: &Tournament) -> String {
    sha256_hex(tournament_to_string(t).as_bytes())
}

pub fn digraph_digest(d: &OrientedDigraph) -> String {
    sha256_hex(digraph_to_string(d).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use c5eh::gen;

    #[test]
    fn round_trip_modulo_comments() {
        let t = gen::random_tournament(9, 4);
        let canonical = tournament_to_string(&t);
        let commented = format!("# a comment\n# another\n{canonical}");
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.tour");
        std::fs::write(&path, &commented).unwrap();
        let read = read_tournament(&path).unwrap();
        assert_eq!(tournament_to_string(&read), canonical);
        assert_eq!(tournament_digest(&read), tournament_digest(&t));
    }

    #[test]
    fn rejects_malformed_matrices() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.tour");
        // Diagonal one.
        std::fs::write(&path, "tournament 1\n2\n10\n00\n").unwrap();
        assert!(read_tournament(&path).is_err());
        // Both directions.
        std::fs::write(&path, "tournament 1\n2\n01\n10\n").unwrap();
        assert!(read_tournament(&path).is_err());
        // Missing direction is fine for a digraph but not a tournament.
        std::fs::write(&path, "tournament 1\n2\n00\n00\n").unwrap();
        assert!(read_tournament(&path).is_err());
        std::fs::write(&path, "digraph 1\n2\n00\n00\n").unwrap();
        assert!(read_digraph(&path).is_ok());
        // Two-cycle rejected for digraphs.
        std::fs::write(&path, "digraph 1\n2\n01\n10\n").unwrap();
        assert!(read_digraph(&path).is_err());
    }
}
