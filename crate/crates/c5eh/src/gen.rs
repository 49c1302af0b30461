//! Deterministic seeded generators for tournaments, C5-free families,
//! planted structures, outsimplicial digraphs, and random chordal graphs.
//!
//! Randomness comes exclusively from ChaCha8 keyed by the caller's seed.
//! Stream splitting rule: a generator with seed `s` uses ChaCha8 stream 0
//! for its primary layout, stream 1 for noise, stream 2 for blow-up piece
//! selection, and stream 3 for the final relabeling permutation; recursive
//! sub-generators receive fresh `u64` seeds drawn from the parent's stream.
//! Adding a phase therefore never perturbs existing streams, and every
//! generator is a pure function of its parameters and seed.

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{OrientedDigraph, Tournament, UndirectedGraph};
use crate::structures::{SmoothStructure, StructureMode, StructureReport, StructureSpec};
use crate::{patterns, structures};

fn stream(seed: u64, idx: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(idx);
    rng
}

/// Uniform random tournament: each pair oriented by an independent fair
/// coin, pairs visited in lexicographic order.
pub fn random_tournament(n: usize, seed: u64) -> Tournament {
    let mut rng = stream(seed, 0);
    Tournament::from_orientations(n, |_, _| rng.gen_bool(0.5))
}

/// Substitution (blow-up): vertex `i` of `t0` is replaced by `parts[i]`;
/// edges between blocks follow the orientation of `t0`.
pub fn substitute(t0: &Tournament, parts: &[Tournament]) -> Result<Tournament> {
    if parts.len() != t0.n() {
        return Err(Error::InvalidArgument(format!(
            "{} parts for a {}-vertex quotient",
            parts.len(),
            t0.n()
        )));
    }
    let mut offset = Vec::with_capacity(parts.len() + 1);
    let mut total = 0usize;
    for p in parts {
        offset.push(total);
        total += p.n();
    }
    offset.push(total);
    let block_of = {
        let mut b = vec![0usize; total];
        for (k, _) in parts.iter().enumerate() {
            for v in offset[k]..offset[k + 1] {
                b[v] = k;
            }
        }
        b
    };
    Ok(Tournament::from_orientations(total, |u, v| {
        let (bu, bv) = (block_of[u], block_of[v]);
        if bu == bv {
            parts[bu].beats(u - offset[bu], v - offset[bu])
        } else {
            t0.beats(bu, bv)
        }
    }))
}

/// C5-free tournament by recursive substitution: a random quotient on at
/// most four vertices (every tournament below five vertices is C5-free)
/// with recursively generated parts. C5 is prime, so it can embed in a
/// substitution only inside a part or as a transversal isomorphic to a
/// subtournament of the quotient; neither can occur here.
pub fn gen_c5free(n: usize, seed: u64) -> Tournament {
    let mut rng = stream(seed, 0);
    gen_c5free_inner(n, &mut rng)
}

fn gen_c5free_inner(n: usize, rng: &mut ChaCha8Rng) -> Tournament {
    if n <= 4 {
        return random_tournament(n, rng.gen());
    }
    let k = rng.gen_range(2..=4usize);
    let mut sizes = vec![1usize; k];
    for _ in 0..(n - k) {
        let i = rng.gen_range(0..k);
        sizes[i] += 1;
    }
    let quotient = random_tournament(k, rng.gen());
    let parts: Vec<Tournament> = sizes
        .iter()
        .map(|&sz| gen_c5free_inner(sz, rng))
        .collect();
    substitute(&quotient, &parts).expect("arity matches by construction")
}

/// Planted blocks: `k` blocks of size `ceil(c·n)` in forward order, each
/// internally C5-free, leftovers collected into an extra trailing part, and
/// per-vertex backward flips bounded so that the smooth condition at
/// `lambda = 1/5` still verifies. `noise` in [0, 1] scales the flip budget;
/// at `noise = 0` the whole tournament is a substitution into a transitive
/// quotient and hence C5-free. Returns the tournament and its verified
/// structure.
pub fn gen_planted_blocks(
    n: usize,
    k: usize,
    c: Rational64,
    noise: Rational64,
    seed: u64,
) -> Result<(Tournament, SmoothStructure)> {
    let zero = Rational64::new(0, 1);
    let one = Rational64::new(1, 1);
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    if !(c > zero && c <= one) {
        return Err(Error::InvalidArgument(format!("c = {c} must be in (0, 1]")));
    }
    if noise < zero || noise > one {
        return Err(Error::InvalidArgument(format!(
            "noise = {noise} must be in [0, 1]"
        )));
    }
    // Block size ceil(c·n), exactly.
    let s = ((*c.numer() as usize) * n).div_ceil(*c.denom() as usize);
    if s == 0 || k * s > n {
        return Err(Error::InvalidArgument(format!(
            "k·ceil(c·n) = {k}·{s} exceeds n = {n}"
        )));
    }

    let mut layout = stream(seed, 0);
    let leftover = n - k * s;
    let mut parts: Vec<Tournament> = (0..k)
        .map(|_| gen_c5free_inner(s, &mut layout))
        .collect();
    if leftover > 0 {
        parts.push(gen_c5free_inner(leftover, &mut layout));
    }
    let quotient = patterns::transitive_tournament(parts.len());
    let base = substitute(&quotient, &parts)?;

    // Backward flips between structure blocks. Each round flips a perfect
    // matching between two blocks, so after f rounds every vertex carries at
    // most f backward edges per block pair on either side:
    //   f = floor(noise · s/5) <= floor(s/5) = floor(lambda·s).
    let lambda = Rational64::new(1, 5);
    let f = ((*noise.numer() as usize) * s) / (*noise.denom() as usize * 5);
    let mut matrix = base.matrix().clone();
    if f > 0 {
        let mut noise_rng = stream(seed, 1);
        let mut perm: Vec<usize> = (0..s).collect();
        for i in 0..k {
            for j in (i + 1)..k {
                for _ in 0..f {
                    perm.shuffle(&mut noise_rng);
                    for (p, &q) in perm.iter().enumerate() {
                        let u = i * s + p;
                        let v = j * s + q;
                        matrix.set(u, v, false);
                        matrix.set(v, u, true);
                    }
                }
            }
        }
    }
    let t = Tournament::from_matrix_unchecked(matrix);

    let blocks: Vec<Vec<usize>> = (0..k).map(|i| (i * s..(i + 1) * s).collect()).collect();
    let spec = StructureSpec::new(c, lambda, vec![false; k])?;
    let structure = SmoothStructure::new(spec, blocks)?;
    match structures::verify_structure(&t, &structure, StructureMode::Smooth, None)? {
        StructureReport::Pass => Ok((t, structure)),
        StructureReport::Fail(v) => Err(Error::InternalInvariant(format!(
            "planted structure failed its own verification: {v}"
        ))),
    }
}

/// Random connected-ish chordal graph by incremental clique growth: each new
/// vertex attaches to a nonempty random subset of an existing clique (and is
/// therefore simplicial at insertion), or occasionally starts a new
/// component.
pub fn random_chordal_graph(n: usize, seed: u64) -> UndirectedGraph {
    let mut rng = stream(seed, 0);
    let (g, _) = random_chordal_with_edges(n, &mut rng);
    g
}

fn random_chordal_with_edges(
    n: usize,
    rng: &mut ChaCha8Rng,
) -> (UndirectedGraph, Vec<(usize, usize)>) {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if v == 0 || rng.gen_ratio(1, 16) {
            cliques.push(vec![v]);
            continue;
        }
        let c = &cliques[rng.gen_range(0..cliques.len())];
        let mut attach: Vec<usize> = c.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if attach.is_empty() {
            attach.push(c[rng.gen_range(0..c.len())]);
        }
        for &u in &attach {
            edges.push((u, v));
        }
        attach.push(v);
        cliques.push(attach);
    }
    (
        UndirectedGraph::from_edges(n, &edges).expect("construction avoids loops"),
        edges,
    )
}

/// Random outsimplicial digraph.
///
/// A random chordal graph is oriented from PEO-earlier to PEO-later
/// endpoint; out-neighborhoods are then "later neighbors" and thus cliques,
/// and the orientation is acyclic. With `blowup`, vertices are substituted
/// by strongly connected tournaments (directed triangles and C5 copies),
/// which preserves outsimpliciality since pieces are complete and base
/// out-neighborhoods are cliques. The result has exactly `n` vertices and is
/// finally relabeled by a seeded permutation.
pub fn gen_outsimplicial(n: usize, seed: u64, blowup: bool) -> OrientedDigraph {
    // Piece sizes summing to n (stream 2).
    let sizes: Vec<usize> = if blowup {
        let mut rng = stream(seed, 2);
        let mut sizes = Vec::new();
        let mut remaining = n;
        while remaining > 0 {
            let roll = rng.gen_range(0..10u32);
            let sz = if roll == 9 && remaining >= 5 {
                5
            } else if roll >= 6 && remaining >= 3 {
                3
            } else {
                1
            };
            sizes.push(sz);
            remaining -= sz;
        }
        sizes
    } else {
        vec![1; n]
    };

    let m = sizes.len();
    let mut layout = stream(seed, 0);
    let (base, base_edges) = random_chordal_with_edges(m, &mut layout);
    debug_assert_eq!(base.n(), m);

    // Vertices were inserted in id order, so reversed ids form a perfect
    // elimination ordering; orient each edge from the larger id (eliminated
    // earlier) to the smaller.
    let mut offset = Vec::with_capacity(m + 1);
    let mut total = 0usize;
    for &sz in &sizes {
        offset.push(total);
        total += sz;
    }
    offset.push(total);
    debug_assert_eq!(total, n);

    let mut edges: Vec<(usize, usize)> = Vec::new();
    // Piece-internal strongly connected tournaments.
    for (b, &sz) in sizes.iter().enumerate() {
        let o = offset[b];
        match sz {
            1 => {}
            3 => {
                edges.extend([(o, o + 1), (o + 1, o + 2), (o + 2, o)]);
            }
            5 => {
                for i in 0..5 {
                    edges.push((o + i, o + (i + 1) % 5));
                    edges.push((o + i, o + (i + 2) % 5));
                }
            }
            _ => unreachable!("piece sizes are 1, 3, or 5"),
        }
    }
    // Cross-piece edges per the oriented base.
    for &(x, y) in &base_edges {
        let (hi, lo) = if x > y { (x, y) } else { (y, x) };
        for u in offset[hi]..offset[hi + 1] {
            for v in offset[lo]..offset[lo + 1] {
                edges.push((u, v));
            }
        }
    }

    // Final relabel (stream 3) decouples vertex ids from construction order.
    let mut relabel_rng = stream(seed, 3);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut relabel_rng);
    let relabeled: Vec<(usize, usize)> =
        edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    OrientedDigraph::from_edges(n, &relabeled).expect("blow-up of an oriented base is oriented")
}
