//! Independent brute-force reference implementations.
//!
//! These are correctness anchors for the optimized modules: they share no
//! code with the paths they validate and favor obviousness over speed. All
//! routines carry hard size caps.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Tournament;
use crate::patterns::C5Witness;

pub const BRUTE_C5_MAX: usize = 14;
pub const BRUTE_PAIR_MAX: usize = 20;
pub const BRUTE_TR_MAX: usize = 14;

/// Exhaustive C5 search: every 5-subset is tested by explicit isomorphism
/// against the canonical pattern over all 120 vertex bijections.
pub fn brute_c5(t: &Tournament) -> Result<Option<C5Witness>> {
    let n = t.n();
    if n > BRUTE_C5_MAX {
        return Err(Error::SizeLimit {
            n,
            max: BRUTE_C5_MAX,
        });
    }
    if n < 5 {
        return Ok(None);
    }
    for subset in (0..n).combinations(5) {
        if let Some(order) = c5_order_by_isomorphism(t, &subset) {
            return Ok(Some(C5Witness { vertices: order }));
        }
    }
    Ok(None)
}

/// Explicit isomorphism test for five-vertex tournaments: true iff some
/// bijection maps `t` onto the canonical C5 pattern.
pub fn c5_isomorphic(t: &Tournament) -> Result<bool> {
    if t.n() != 5 {
        return Err(Error::InvalidArgument(format!(
            "c5_isomorphic requires exactly 5 vertices, got {}",
            t.n()
        )));
    }
    let verts: Vec<usize> = (0..5).collect();
    Ok(c5_order_by_isomorphism(t, &verts).is_some())
}

/// If `subset` induces a C5 in `t`, returns its vertices arranged so that
/// position i beats positions i+1 and i+2 (mod 5); first matching bijection
/// in lexicographic order. All 120 bijections are tried, pruned as soon as
/// a placed prefix contradicts the pattern.
fn c5_order_by_isomorphism(t: &Tournament, subset: &[usize]) -> Option<[usize; 5]> {
    debug_assert_eq!(subset.len(), 5);
    let s = subset;
    for i0 in 0..5 {
        for i1 in 0..5 {
            if i1 == i0 || !t.beats(s[i0], s[i1]) {
                continue;
            }
            for i2 in 0..5 {
                if i2 == i0 || i2 == i1 || !t.beats(s[i0], s[i2]) || !t.beats(s[i1], s[i2]) {
                    continue;
                }
                for i3 in 0..5 {
                    if i3 == i0
                        || i3 == i1
                        || i3 == i2
                        || !t.beats(s[i1], s[i3])
                        || !t.beats(s[i2], s[i3])
                        || !t.beats(s[i3], s[i0])
                    {
                        continue;
                    }
                    let i4 = 10 - i0 - i1 - i2 - i3;
                    if t.beats(s[i2], s[i4])
                        && t.beats(s[i3], s[i4])
                        && t.beats(s[i4], s[i0])
                        && t.beats(s[i4], s[i1])
                    {
                        return Some([s[i0], s[i1], s[i2], s[i3], s[i4]]);
                    }
                }
            }
        }
    }
    None
}

/// Optimal complete pair by exhaustive enumeration: maximizes
/// `min(|A|, |B|)` where `B` is the full common out-neighborhood of `A`
/// (any complete pair (A, B') has B' inside that set, so the reduction is
/// lossless). Returns `(A, B, value)` with the lexicographically smallest
/// optimal `A`.
pub fn brute_max_pair(t: &Tournament) -> Result<(Vec<usize>, Vec<usize>, usize)> {
    let n = t.n();
    if n > BRUTE_PAIR_MAX {
        return Err(Error::SizeLimit {
            n,
            max: BRUTE_PAIR_MAX,
        });
    }
    if n == 0 {
        return Ok((Vec::new(), Vec::new(), 0));
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
    let full = (1u32 << n) - 1;

    // common[s] = intersection of out-neighborhoods over the subset s.
    let mut best_value = 0usize;
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut common = vec![0u32; 1usize << n];
    common[0] = full;
    for s in 1..(1usize << n) {
        let low = s.trailing_zeros() as usize;
        let b = common[s & (s - 1)] & out_mask[low];
        common[s] = b;
        let value = (s.count_ones() as usize).min(b.count_ones() as usize);
        if value == 0 || value < best_value {
            continue;
        }
        let a_list = bits_to_vec(s as u32);
        let replace = match &best {
            None => true,
            Some((cur_a, _)) => value > best_value || a_list < *cur_a,
        };
        if replace {
            best_value = value;
            best = Some((a_list, bits_to_vec(b)));
        }
    }
    let (a, b) = best.unwrap_or((Vec::new(), Vec::new()));
    Ok((a, b, best_value))
}

fn bits_to_vec(mut m: u32) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Size of the largest transitive subtournament by full subset enumeration:
/// a subset is transitive iff its internal out-degrees are pairwise distinct.
pub fn brute_tr(t: &Tournament) -> Result<usize> {
    let n = t.n();
    if n > BRUTE_TR_MAX {
        return Err(Error::SizeLimit {
            n,
            max: BRUTE_TR_MAX,
        });
    }
    let mut best = 0usize;
    for s in 0u32..(1u32 << n) {
        let verts = bits_to_vec(s);
        let k = verts.len();
        if k <= best {
            continue;
        }
        let mut seen = vec![false; k];
        let mut transitive = true;
        for &v in &verts {
            let d = verts.iter().filter(|&&u| u != v && t.beats(v, u)).count();
            if seen[d] {
                transitive = false;
                break;
            }
            seen[d] = true;
        }
        if transitive {
            best = k;
        }
    }
    Ok(best)
}

/// Direct check that `a` is complete to `b`: both nonempty, disjoint, and
/// every vertex of `a` beats every vertex of `b`.
pub fn verify_complete_pair(t: &Tournament, a: &[usize], b: &[usize]) -> bool {
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let n = t.n();
    if a.iter().chain(b).any(|&v| v >= n) {
        return false;
    }
    for &x in a {
        if b.contains(&x) {
            return false;
        }
    }
    a.iter().all(|&x| b.iter().all(|&y| t.beats(x, y)))
}

/// Checks the ten orientations of a witness tuple against the C5 pattern.
pub fn verify_c5_witness(t: &Tournament, w: &C5Witness) -> bool {
    w.holds_in(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::patterns::{canonical_c5, transitive_tournament};

    #[test]
    fn brute_c5_finds_the_pattern() {
        let w = brute_c5(&canonical_c5()).unwrap().unwrap();
        assert!(verify_c5_witness(&canonical_c5(), &w));
    }

    #[test]
    fn brute_c5_empty_on_transitive() {
        assert!(brute_c5(&transitive_tournament(10)).unwrap().is_none());
    }

    #[test]
    fn brute_c5_respects_cap() {
        assert!(brute_c5(&transitive_tournament(15)).is_err());
    }

    #[test]
    fn brute_max_pair_transitive_halves() {
        let (a, b, value) = brute_max_pair(&transitive_tournament(8)).unwrap();
        assert_eq!(value, 4);
        assert!(verify_complete_pair(&transitive_tournament(8), &a, &b));
    }

    #[test]
    fn brute_max_pair_directed_triangle() {
        let t = Tournament::from_orientations(3, |i, j| (i, j) != (0, 2));
        let (_, _, value) = brute_max_pair(&t).unwrap();
        assert_eq!(value, 1);
    }

    #[test]
    fn brute_max_pair_c5_is_one() {
        let (_, _, value) = brute_max_pair(&canonical_c5()).unwrap();
        assert_eq!(value, 1);
    }

    #[test]
    fn brute_max_pair_matches_full_pair_enumeration() {
        // Full enumeration over ordered disjoint pairs (A, B) for small n
        // validates the "B = full common out-neighborhood" reduction.
        for seed in 0..25u64 {
            let n = 2 + (seed as usize) % 7;
            let t = gen::random_tournament(n, seed.wrapping_mul(31));
            let mut best_full = 0usize;
            for a in 1u32..(1 << n) {
                for b in 1u32..(1 << n) {
                    if a & b != 0 {
                        continue;
                    }
                    let av = bits_to_vec(a);
                    let bv = bits_to_vec(b);
                    if verify_complete_pair(&t, &av, &bv) {
                        best_full = best_full.max(av.len().min(bv.len()));
                    }
                }
            }
            let (_, _, value) = brute_max_pair(&t).unwrap();
            assert_eq!(value, best_full, "seed {seed}");
        }
    }

    #[test]
    fn brute_tr_examples() {
        assert_eq!(brute_tr(&transitive_tournament(9)).unwrap(), 9);
        assert_eq!(brute_tr(&canonical_c5()).unwrap(), 3);
    }

    #[test]
    fn verify_complete_pair_examples() {
        let t = transitive_tournament(6);
        assert!(verify_complete_pair(&t, &[0, 1, 2], &[3, 4, 5]));
        assert!(!verify_complete_pair(&t, &[3], &[2, 4]));
        assert!(!verify_complete_pair(&t, &[], &[1]));
        assert!(!verify_complete_pair(&t, &[1], &[1, 2]));
    }

    #[test]
    fn verify_c5_witness_examples() {
        let c5 = canonical_c5();
        assert!(verify_c5_witness(
            &c5,
            &C5Witness {
                vertices: [0, 1, 2, 3, 4]
            }
        ));
        assert!(!verify_c5_witness(
            &transitive_tournament(5),
            &C5Witness {
                vertices: [0, 1, 2, 3, 4]
            }
        ));
    }
}
