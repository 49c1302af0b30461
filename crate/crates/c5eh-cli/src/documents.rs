//! JSON certificate documents.
//!
//! Every document carries the tool version and a content digest of the input
//! it refers to, binding certificates to inputs without storing the graph.
//! Rational parameters are serialized as exact fraction strings ("1/5").

use anyhow::{bail, Context, Result};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use std::path::Path;

use c5eh::ehpair::{CompletePair, PairBranch, PairOrWitness};
use c5eh::outsimplicial::{SplitBranch, SplitCase, SplitCertificate};
use c5eh::patterns::C5Witness;
use c5eh::structures::{SmoothStructure, StructureSpec};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "type")]
pub enum Document {
    #[serde(rename = "complete_pair")]
    CompletePair {
        version: String,
        input_digest: String,
        branch: String,
        a: Vec<usize>,
        b: Vec<usize>,
    },
    #[serde(rename = "c5_witness")]
    C5Witness {
        version: String,
        input_digest: String,
        vertices: Vec<usize>,
    },
    #[serde(rename = "split")]
    Split {
        version: String,
        input_digest: String,
        case: String,
        branch: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        clique_components: Option<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        bag_index: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        bag: Option<Vec<usize>>,
        a: Vec<usize>,
        b: Vec<usize>,
    },
    #[serde(rename = "structure")]
    Structure {
        version: String,
        input_digest: String,
        c: String,
        lambda: String,
        w: String,
        sets: Vec<Vec<usize>>,
    },
    #[serde(rename = "report")]
    Report {
        version: String,
        input_digest: String,
        pass: bool,
        detail: String,
    },
}

impl Document {
    pub fn input_digest(&self) -> &str {
        match self {
            Document::CompletePair { input_digest, .. }
            | Document::C5Witness { input_digest, .. }
            | Document::Split { input_digest, .. }
            | Document::Structure { input_digest, .. }
            | Document::Report { input_digest, .. } => input_digest,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize cleanly");
        s.push('\n');
        s
    }

    pub fn read(path: &Path) -> Result<Document> {
        let content = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&content)
            .with_context(|| format!("parsing certificate document {}", path.display()))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())
            .with_context(|| format!("writing {}", path.display()))
    }
}

pub fn pair_or_witness_document(out: &PairOrWitness, input_digest: &str) -> Document {
    match out {
        PairOrWitness::Pair(p) => Document::CompletePair {
            version: TOOL_VERSION.into(),
            input_digest: input_digest.into(),
            branch: p.branch.tag().into(),
            a: p.a.clone(),
            b: p.b.clone(),
        },
        PairOrWitness::Witness(w) => Document::C5Witness {
            version: TOOL_VERSION.into(),
            input_digest: input_digest.into(),
            vertices: w.vertices.to_vec(),
        },
    }
}

pub fn witness_document(w: &C5Witness, input_digest: &str) -> Document {
    Document::C5Witness {
        version: TOOL_VERSION.into(),
        input_digest: input_digest.into(),
        vertices: w.vertices.to_vec(),
    }
}

pub fn split_document(cert: &SplitCertificate, input_digest: &str) -> Document {
    let case = match cert.case {
        SplitCase::Separated => "I",
        SplitCase::Reachable => "II",
    };
    let (branch, clique_components, bag_index, bag) = match &cert.branch {
        SplitBranch::BigClique { components } => {
            ("big-clique", Some(components.clone()), None, None)
        }
        SplitBranch::Centroid { bag_index, bag } => {
            ("centroid", None, Some(*bag_index), Some(bag.clone()))
        }
    };
    Document::Split {
        version: TOOL_VERSION.into(),
        input_digest: input_digest.into(),
        case: case.into(),
        branch: branch.into(),
        clique_components,
        bag_index,
        bag,
        a: cert.a.clone(),
        b: cert.b.clone(),
    }
}

pub fn structure_document(s: &SmoothStructure, input_digest: &str) -> Document {
    Document::Structure {
        version: TOOL_VERSION.into(),
        input_digest: input_digest.into(),
        c: s.spec.c().to_string(),
        lambda: s.spec.lambda().to_string(),
        w: s
            .spec
            .w()
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect(),
        sets: s.sets().to_vec(),
    }
}

pub fn report_document(pass: bool, detail: String, input_digest: &str) -> Document {
    Document::Report {
        version: TOOL_VERSION.into(),
        input_digest: input_digest.into(),
        pass,
        detail,
    }
}

pub fn parse_rational(s: &str) -> Result<Rational64, String> {
    let r: Rational64 = s
        .parse()
        .map_err(|e| format!("{s:?} is not a rational (use p/q): {e}"))?;
    Ok(r)
}

pub fn parse_w(s: &str) -> Result<Vec<bool>, String> {
    if s.is_empty() {
        return Err("w must be nonempty".into());
    }
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(format!("w contains {other:?}, expected 0 or 1")),
        })
        .collect()
}

/// Rebuilds the in-memory structure from a structure document.
pub fn structure_from_document(doc: &Document) -> Result<SmoothStructure> {
    let Document::Structure {
        c, lambda, w, sets, ..
    } = doc
    else {
        bail!("expected a structure document, found {doc:?}");
    };
    let c = parse_rational(c).map_err(anyhow::Error::msg)?;
    let lambda = parse_rational(lambda).map_err(anyhow::Error::msg)?;
    let w = parse_w(w).map_err(anyhow::Error::msg)?;
    let spec = StructureSpec::new(c, lambda, w).map_err(|e| anyhow::anyhow!("{e}"))?;
    SmoothStructure::new(spec, sets.clone()).map_err(|e| anyhow::anyhow!("{e}"))
}

/// Rebuilds a pipeline output from its document, if it is one.
pub fn pair_or_witness_from_document(doc: &Document) -> Result<PairOrWitness> {
    match doc {
        Document::CompletePair { branch, a, b, .. } => {
            let branch = PairBranch::from_tag(branch)
                .with_context(|| format!("unknown branch tag {branch:?}"))?;
            Ok(PairOrWitness::Pair(CompletePair {
                a: a.clone(),
                b: b.clone(),
                branch,
            }))
        }
        Document::C5Witness { vertices, .. } => {
            if vertices.len() != 5 {
                bail!("witness document lists {} vertices, expected 5", vertices.len());
            }
            let mut vs = [0usize; 5];
            vs.copy_from_slice(vertices);
            Ok(PairOrWitness::Witness(C5Witness { vertices: vs }))
        }
        other => bail!("expected a pair or witness document, found {other:?}"),
    }
}
