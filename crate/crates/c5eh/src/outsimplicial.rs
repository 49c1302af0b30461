//! Splitting of outsimplicial digraphs.
//!
//! A digraph is outsimplicial when every out-neighborhood is a clique in the
//! underlying undirected graph. [`split`] produces, for any such digraph on
//! n >= 2 vertices, two disjoint vertex sets of size at least ⌊n/6⌋ such
//! that either no edge joins them in any direction (case I) or every vertex
//! of the first reaches every vertex of the second (case II). The
//! certificate is independently checkable with [`verify_split`].

use crate::chordal::{self, ChordalCheck};
use crate::error::{Error, Result};
use crate::graph::{reaches_all, scc_condensation, underlying, OrientedDigraph};

/// A triple witnessing non-outsimpliciality: `a` and `b` are out-neighbors
/// of `v` with no edge between them in either direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OutsimplicialViolation {
    pub v: usize,
    pub a: usize,
    pub b: usize,
}

/// Returns the lexicographically first violating triple `(v, a, b)` with
/// `a < b`, or `None` if every out-neighborhood is a clique.
pub fn check_outsimplicial(d: &OrientedDigraph) -> Option<OutsimplicialViolation> {
    for v in 0..d.n() {
        let outs: Vec<usize> = d.out_neighbors(v).collect();
        for (i, &a) in outs.iter().enumerate() {
            for &b in &outs[i + 1..] {
                if !d.adjacent(a, b) {
                    return Some(OutsimplicialViolation { v, a, b });
                }
            }
        }
    }
    None
}

/// Which lemma case a certificate realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitCase {
    /// Case I: no edge, in any direction, between `a` and `b`.
    Separated,
    /// Case II: a directed path from every vertex of `a` to every vertex
    /// of `b`.
    Reachable,
}

/// How the certificate was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitBranch {
    /// A clique of the condensation's underlying graph carried at least a
    /// third of the total weight; `components` are its condensation
    /// component indices in transitive order.
    BigClique { components: Vec<usize> },
    /// The weighted centroid bag of the clique tree; `bag` holds the
    /// condensation component indices of the bag.
    Centroid { bag_index: usize, bag: Vec<usize> },
}

/// Output of [`split`]: two disjoint vertex sets, both of size at least
/// ⌊n/6⌋, realizing the stated case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCertificate {
    pub case: SplitCase,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub branch: SplitBranch,
}

/// Splits an outsimplicial digraph on n >= 2 vertices.
///
/// The condensation's underlying graph is chordal for outsimplicial inputs;
/// if its maximum-weight clique carries at least a third of the vertices,
/// the clique's components concatenate into a reachability chain (case II,
/// split at ⌊weight/2⌋). Otherwise the components left by the weighted
/// centroid bag are grouped by prefix sums into two halves with no edges
/// between them (case I).
pub fn split(d: &OrientedDigraph) -> Result<SplitCertificate> {
    let n = d.n();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "split needs at least 2 vertices, got {n}"
        )));
    }
    if let Some(viol) = check_outsimplicial(d) {
        return Err(Error::NotOutsimplicial {
            v: viol.v,
            a: viol.a,
            b: viol.b,
        });
    }

    let cond = scc_condensation(d);
    let fprime = underlying(cond.quotient());
    let weights = cond.weights();

    if !matches!(chordal::is_chordal(&fprime), ChordalCheck::Chordal { .. }) {
        return Err(Error::InternalInvariant(
            "condensation of an outsimplicial digraph must have a chordal underlying graph".into(),
        ));
    }

    // Big-clique branch: a clique of weight >= n/3 in the quotient is a
    // transitive subtournament of the (acyclic) quotient, so concatenating
    // its components in topological order chains reachability.
    let clique = chordal::max_weight_clique_chordal(&fprime, weights)?;
    let clique_weight: usize = clique.iter().map(|&c| weights[c]).sum();
    if 3 * clique_weight >= n {
        // Component indices ascend in topological order already.
        let mut concat: Vec<usize> = Vec::with_capacity(clique_weight);
        for &c in &clique {
            concat.extend(cond.components()[c].iter().copied());
        }
        let half = clique_weight / 2;
        let a = concat[..half].to_vec();
        let b = concat[half..].to_vec();
        let cert = SplitCertificate {
            case: SplitCase::Reachable,
            a,
            b,
            branch: SplitBranch::BigClique { components: clique },
        };
        return check_sizes(n, cert);
    }

    // Centroid branch.
    let td = chordal::clique_tree(&fprime)?;
    let bag_index = chordal::centroid_bag(&fprime, &td, weights)?;
    let bag = td.bags[bag_index].clone();
    let excluded = crate::graph::mask_of(&bag, fprime.n());
    let mut comps = fprime.components_excluding(&excluded);
    // Ascending weight, ties by smallest contained component index.
    comps.sort_by_key(|comp| (comp.iter().map(|&c| weights[c]).sum::<usize>(), comp[0]));
    let comp_weights: Vec<usize> = comps
        .iter()
        .map(|comp| comp.iter().map(|&c| weights[c]).sum())
        .collect();
    let x: usize = comp_weights.iter().sum();
    if comps.len() < 2 || x == 0 {
        return Err(Error::InternalInvariant(format!(
            "centroid bag must leave at least two weighted components, got {}",
            comps.len()
        )));
    }
    // Smallest r with 2·y_r > x, where y_r is the r-th prefix sum.
    let mut prefix = 0usize;
    let mut r = comps.len();
    for (idx, w) in comp_weights.iter().enumerate() {
        prefix += w;
        if 2 * prefix > x {
            r = idx + 1;
            break;
        }
    }
    let m = comps.len();
    let d_vertices = |group: &[Vec<usize>]| -> Vec<usize> {
        let mut verts: Vec<usize> = group
            .iter()
            .flat_map(|comp| comp.iter().flat_map(|&c| cond.components()[c].iter().copied()))
            .collect();
        verts.sort_unstable();
        verts
    };
    let (a, b) = if r == m {
        (d_vertices(&comps[..m - 1]), d_vertices(&comps[m - 1..]))
    } else {
        (d_vertices(&comps[..r]), d_vertices(&comps[r..]))
    };
    let cert = SplitCertificate {
        case: SplitCase::Separated,
        a,
        b,
        branch: SplitBranch::Centroid { bag_index, bag },
    };
    check_sizes(n, cert)
}

fn check_sizes(n: usize, cert: SplitCertificate) -> Result<SplitCertificate> {
    let floor = n / 6;
    if cert.a.len() < floor || cert.b.len() < floor {
        return Err(Error::InternalInvariant(format!(
            "split produced sizes {} and {}, below ⌊{n}/6⌋ = {floor}",
            cert.a.len(),
            cert.b.len()
        )));
    }
    Ok(cert)
}

/// Checks a split certificate against the digraph: disjointness, the size
/// floor ⌊n/6⌋, and the case condition (case II via full reachability).
pub fn verify_split(d: &OrientedDigraph, cert: &SplitCertificate) -> bool {
    let n = d.n();
    let floor = n / 6;
    if cert.a.len() < floor || cert.b.len() < floor {
        return false;
    }
    if cert.a.iter().chain(&cert.b).any(|&v| v >= n) {
        return false;
    }
    let mut all: Vec<usize> = cert.a.iter().chain(&cert.b).copied().collect();
    let total = all.len();
    all.sort_unstable();
    all.dedup();
    if all.len() != total {
        return false;
    }
    match cert.case {
        SplitCase::Separated => cert
            .a
            .iter()
            .all(|&u| cert.b.iter().all(|&v| !d.adjacent(u, v))),
        SplitCase::Reachable => reaches_all(d, &cert.a, &cert.b).unwrap_or(false),
    }
}
