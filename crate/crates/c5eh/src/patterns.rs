//! Detection of C5 subtournaments and maximum transitive subtournaments.
//!
//! C5 is the unique five-vertex tournament in which every vertex has
//! out-degree two: on vertices 0..5, `i` beats `i+1` and `i+2` (mod 5).
//! Uniqueness makes the out-degree test sufficient for five-vertex inputs;
//! the test suite cross-validates it against explicit isomorphism search.

use crate::error::{Error, Result};
use crate::graph::Tournament;

/// Hard cap for the exact transitive-subtournament search (subset DP over
/// 2^n states; 24 keeps memory around 2 MB).
pub const MAX_EXACT_TRANSITIVE: usize = 24;

/// Five distinct vertices of a host tournament listed in C5 order:
/// `vertices[i]` beats `vertices[(i+1) % 5]` and `vertices[(i+2) % 5]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C5Witness {
    pub vertices: [usize; 5],
}

impl C5Witness {
    /// Checks the witness orientation pattern against `t`.
    pub fn holds_in(&self, t: &Tournament) -> bool {
        let vs = &self.vertices;
        let n = t.n();
        if vs.iter().any(|&v| v >= n) {
            return false;
        }
        for i in 0..5 {
            for j in (i + 1)..5 {
                if vs[i] == vs[j] {
                    return false;
                }
            }
        }
        (0..5).all(|i| t.beats(vs[i], vs[(i + 1) % 5]) && t.beats(vs[i], vs[(i + 2) % 5]))
    }
}

/// True iff the five-vertex tournament `t` is C5 (every out-degree is two).
pub fn is_c5(t: &Tournament) -> Result<bool> {
    if t.n() != 5 {
        return Err(Error::InvalidArgument(format!(
            "is_c5 requires exactly 5 vertices, got {}",
            t.n()
        )));
    }
    Ok((0..5).all(|v| t.out_degree(v) == 2))
}

/// Searches for a C5 subtournament.
///
/// Enumerates 5-subsets in lexicographic order with degree pruning and
/// reports the first inducing subset, rotated to start at its smallest
/// vertex. Practical up to n ≈ 120 within seconds; with the `parallel`
/// feature the search fans out over the smallest subset element while
/// keeping the sequential result.
pub fn find_c5(t: &Tournament) -> Option<C5Witness> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..t.n())
            .into_par_iter()
            .find_map_first(|first| search_from(t, first))
    }
    #[cfg(not(feature = "parallel"))]
    {
        find_c5_seq(t)
    }
}

/// Sequential variant of [`find_c5`]; always available, identical output.
pub fn find_c5_seq(t: &Tournament) -> Option<C5Witness> {
    (0..t.n()).find_map(|first| search_from(t, first))
}

/// Lexicographically smallest C5-inducing 5-subset whose minimum is `first`.
fn search_from(t: &Tournament, first: usize) -> Option<C5Witness> {
    let mut chosen = [first; 5];
    let mut outdeg = [0u8; 5];
    let mut indeg = [0u8; 5];
    extend(t, &mut chosen, &mut outdeg, &mut indeg, 1).map(|subset| witness_from_subset(t, &subset))
}

fn extend(
    t: &Tournament,
    chosen: &mut [usize; 5],
    outdeg: &mut [u8; 5],
    indeg: &mut [u8; 5],
    depth: usize,
) -> Option<[usize; 5]> {
    if depth == 5 {
        return if outdeg[..5].iter().all(|&d| d == 2) {
            Some(*chosen)
        } else {
            None
        };
    }
    // `chosen[depth-1] + 1 ..` keeps subsets sorted, hence lexicographic.
    for cand in (chosen[depth - 1] + 1)..t.n() {
        let mut ok = true;
        let mut co = 0u8;
        let mut ci = 0u8;
        for k in 0..depth {
            if t.beats(chosen[k], cand) {
                outdeg[k] += 1;
                ci += 1;
                if outdeg[k] > 2 {
                    ok = false;
                }
            } else {
                indeg[k] += 1;
                co += 1;
                if indeg[k] > 2 {
                    ok = false;
                }
            }
        }
        if ok && co <= 2 && ci <= 2 {
            chosen[depth] = cand;
            outdeg[depth] = co;
            indeg[depth] = ci;
            if let Some(hit) = extend(t, chosen, outdeg, indeg, depth + 1) {
                return Some(hit);
            }
        }
        // Undo the degree updates before trying the next candidate.
        for k in 0..depth {
            if t.beats(chosen[k], cand) {
                outdeg[k] -= 1;
            } else {
                indeg[k] -= 1;
            }
        }
    }
    None
}

/// Rotates a C5-inducing subset into witness order starting at its smallest
/// vertex. Within the subset each vertex beats exactly two others; of those
/// two, one beats the other and is the successor in C5 order.
fn witness_from_subset(t: &Tournament, subset: &[usize; 5]) -> C5Witness {
    let succ = |v: usize| -> usize {
        let outs: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&u| u != v && t.beats(v, u))
            .collect();
        debug_assert_eq!(outs.len(), 2);
        if t.beats(outs[0], outs[1]) {
            outs[0]
        } else {
            outs[1]
        }
    };
    let mut vs = [subset[0]; 5];
    for i in 1..5 {
        vs[i] = succ(vs[i - 1]);
    }
    debug_assert!(C5Witness { vertices: vs }.holds_in(t));
    C5Witness { vertices: vs }
}

/// Maximum-size transitive subtournament, exact, by subset dynamic
/// programming; the result is listed in its beating order.
pub fn max_transitive_exact(t: &Tournament) -> Result<Vec<usize>> {
    let n = t.n();
    if n > MAX_EXACT_TRANSITIVE {
        return Err(Error::SizeLimit {
            n,
            max: MAX_EXACT_TRANSITIVE,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let out_mask: Vec<u32> = (0..n)
        .map(|v| {
            let mut m = 0u32;
            for u in t.out_neighbors(v) {
                m |= 1 << u;
            }
            m
        })
        .collect();

    let total = 1usize << n;
    let mut trans = vec![0u64; total.div_ceil(64)];
    let set = |bits: &mut [u64], s: usize| bits[s / 64] |= 1 << (s % 64);
    let get = |bits: &[u64], s: usize| (bits[s / 64] >> (s % 64)) & 1 == 1;

    set(&mut trans, 0);
    let mut best: usize = 1; // subset mask of the best transitive set
    set(&mut trans, 1);
    for s in 1..total {
        if s.count_ones() == 1 {
            set(&mut trans, s);
            continue;
        }
        // A transitive subset has a unique source beating all others in it.
        let mut rem = s as u32;
        while rem != 0 {
            let v = rem.trailing_zeros() as usize;
            rem &= rem - 1;
            let others = (s as u32) & !(1 << v);
            if out_mask[v] & others == others {
                if get(&trans, s & !(1usize << v)) {
                    set(&mut trans, s);
                    if s.count_ones() > best.count_ones() {
                        best = s;
                    }
                }
                break;
            }
        }
    }

    // Reconstruct the beating order by peeling sources.
    let mut order = Vec::with_capacity(best.count_ones() as usize);
    let mut s = best as u32;
    while s != 0 {
        let mut rem = s;
        while rem != 0 {
            let v = rem.trailing_zeros() as usize;
            rem &= rem - 1;
            let others = s & !(1 << v);
            if out_mask[v] & others == others {
                order.push(v);
                s = others;
                break;
            }
        }
    }
    Ok(order)
}

/// Greedy transitive subtournament: repeatedly take the vertex of maximum
/// out-degree within the shrinking candidate set and recurse into its
/// out-neighborhood. Returns at least one vertex, in beating order; gives a
/// lower bound only.
pub fn max_transitive_greedy(t: &Tournament) -> Vec<usize> {
    let mut candidates: Vec<usize> = (0..t.n()).collect();
    let mut order = Vec::new();
    while !candidates.is_empty() {
        let &v = candidates
            .iter()
            .max_by_key(|&&v| {
                let d = candidates
                    .iter()
                    .filter(|&&u| u != v && t.beats(v, u))
                    .count();
                (d, std::cmp::Reverse(v))
            })
            .unwrap();
        order.push(v);
        candidates.retain(|&u| t.beats(v, u));
    }
    order
}

/// True iff `verts` induces a transitive subtournament of `t`.
pub fn is_transitive(t: &Tournament, verts: &[usize]) -> bool {
    // A tournament is transitive iff its out-degrees are pairwise distinct.
    let k = verts.len();
    let mut seen = vec![false; k];
    for &v in verts {
        let d = verts.iter().filter(|&&u| u != v && t.beats(v, u)).count();
        if seen[d] {
            return false;
        }
        seen[d] = true;
    }
    true
}

/// The canonical C5 on five vertices: `i` beats `i+1` and `i+2` (mod 5).
pub fn canonical_c5() -> Tournament {
    Tournament::from_orientations(5, |i, j| j == (i + 1) % 5 || j == (i + 2) % 5)
}

/// Transitive tournament on `n` vertices: `i` beats `j` iff `i < j`.
pub fn transitive_tournament(n: usize) -> Tournament {
    Tournament::from_orientations(n, |_, _| true)
}
