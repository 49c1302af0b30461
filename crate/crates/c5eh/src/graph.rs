//! Dense graph types and the strongly-connected-component machinery.
//!
//! All types are immutable after construction and safe to share across
//! threads. Adjacency is stored as bit-packed dense matrices; vertex counts
//! stay in the thousands at most, where density queries dominate.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Bit-packed square boolean matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct BitMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(WORD);
        BitMatrix {
            n,
            words_per_row,
            bits: vec![0; words_per_row * n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        let w = self.bits[i * self.words_per_row + j / WORD];
        (w >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.n && j < self.n);
        let w = &mut self.bits[i * self.words_per_row + j / WORD];
        if value {
            *w |= 1 << (j % WORD);
        } else {
            *w &= !(1 << (j % WORD));
        }
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    /// Indices of set bits in row `i`, ascending.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(i))
    }

    pub fn transposed(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.row_ones(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn count_row(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// Indices of set bits in a word slice, ascending.
pub(crate) fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rem = w;
        std::iter::from_fn(move || {
            if rem == 0 {
                None
            } else {
                let b = rem.trailing_zeros() as usize;
                rem &= rem - 1;
                Some(wi * WORD + b)
            }
        })
    })
}

/// Builds a bit mask over `0..n` with the given indices set.
pub(crate) fn mask_of(verts: &[usize], n: usize) -> Vec<u64> {
    let mut m = vec![0u64; n.div_ceil(WORD)];
    for &v in verts {
        debug_assert!(v < n);
        m[v / WORD] |= 1 << (v % WORD);
    }
    m
}

#[inline]
pub(crate) fn mask_get(mask: &[u64], v: usize) -> bool {
    (mask[v / WORD] >> (v % WORD)) & 1 == 1
}

/// A complete oriented graph: exactly one direction per vertex pair.
#[derive(Clone, PartialEq, Eq)]
pub struct Tournament {
    adj: BitMatrix,
}

impl Tournament {
    /// Builds a tournament by orienting each pair `i < j`: `true` means
    /// `i → j`, `false` means `j → i`.
    pub fn from_orientations(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Tournament {
        let mut adj = BitMatrix::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if beats(i, j) {
                    adj.set(i, j, true);
                } else {
                    adj.set(j, i, true);
                }
            }
        }
        Tournament { adj }
    }

    /// Validates a full boolean matrix: zero diagonal, exactly one direction
    /// per pair.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Tournament> {
        let n = rows.len();
        let mut adj = BitMatrix::new(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, &b) in row.iter().enumerate() {
                adj.set(i, j, b);
            }
        }
        for i in 0..n {
            if adj.get(i, i) {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {i}")));
            }
            for j in (i + 1)..n {
                if adj.get(i, j) == adj.get(j, i) {
                    return Err(Error::InvalidArgument(format!(
                        "pair ({i},{j}) must have exactly one direction"
                    )));
                }
            }
        }
        Ok(Tournament { adj })
    }

    pub(crate) fn from_matrix_unchecked(adj: BitMatrix) -> Tournament {
        Tournament { adj }
    }

    pub(crate) fn matrix(&self) -> &BitMatrix {
        &self.adj
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.n()
    }

    /// True iff the edge is oriented `u → v`.
    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj.count_row(v)
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row_ones(v)
    }

    /// The subtournament induced on `verts`; vertex `k` of the result is
    /// `verts[k]`.
    pub fn induced(&self, verts: &[usize]) -> Tournament {
        Tournament::from_orientations(verts.len(), |i, j| self.beats(verts[i], verts[j]))
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament(n={})", self.n())
    }
}

/// A digraph with at most one direction per vertex pair and no loops.
/// Two-cycles are rejected at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct OrientedDigraph {
    adj: BitMatrix,
}

impl OrientedDigraph {
    pub fn edgeless(n: usize) -> OrientedDigraph {
        OrientedDigraph {
            adj: BitMatrix::new(n),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<OrientedDigraph> {
        let mut adj = BitMatrix::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            if adj.get(v, u) {
                return Err(Error::InvalidArgument(format!(
                    "two-cycle between {u} and {v}"
                )));
            }
            adj.set(u, v, true);
        }
        Ok(OrientedDigraph { adj })
    }

    /// Validates a full boolean matrix: zero diagonal, never both directions.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<OrientedDigraph> {
        let n = rows.len();
        let mut adj = BitMatrix::new(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, &b) in row.iter().enumerate() {
                adj.set(i, j, b);
            }
        }
        for i in 0..n {
            if adj.get(i, i) {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {i}")));
            }
            for j in (i + 1)..n {
                if adj.get(i, j) && adj.get(j, i) {
                    return Err(Error::InvalidArgument(format!(
                        "two-cycle between {i} and {j}"
                    )));
                }
            }
        }
        Ok(OrientedDigraph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.n()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    /// True iff there is an edge between `u` and `v` in either direction.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v) || self.adj.get(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row_ones(v)
    }

    /// All edges in lexicographic (source, target) order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.out_neighbors(u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.adj.count_row(v)).sum()
    }

    pub(crate) fn matrix(&self) -> &BitMatrix {
        &self.adj
    }
}

impl std::fmt::Debug for OrientedDigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrientedDigraph(n={}, m={})", self.n(), self.edge_count())
    }
}

/// A simple undirected graph (symmetric, irreflexive adjacency).
#[derive(Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: BitMatrix,
}

impl UndirectedGraph {
    pub fn edgeless(n: usize) -> UndirectedGraph {
        UndirectedGraph {
            adj: BitMatrix::new(n),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<UndirectedGraph> {
        let mut adj = BitMatrix::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            adj.set(u, v, true);
            adj.set(v, u, true);
        }
        Ok(UndirectedGraph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.n()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.count_row(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row_ones(v)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Connected components of the graph restricted to vertices outside
    /// `excluded`; components are sorted by smallest contained vertex and
    /// listed ascending internally.
    pub fn components_excluding(&self, excluded: &[u64]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] || mask_get(excluded, s) {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] && !mask_get(excluded, w) {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

impl std::fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "UndirectedGraph(n={}, m={})", self.n(), self.edge_count())
    }
}

/// The condensation of an oriented digraph: strongly connected components in
/// a topological order, the acyclic quotient, and per-component weights.
#[derive(Clone, Debug)]
pub struct Condensation {
    components: Vec<Vec<usize>>,
    quotient: OrientedDigraph,
    weights: Vec<usize>,
    component_of: Vec<usize>,
}

impl Condensation {
    /// Components in topological order (all quotient edges go from lower to
    /// higher index), ties broken by smallest contained vertex id; each
    /// component lists its vertices ascending.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn quotient(&self) -> &OrientedDigraph {
        &self.quotient
    }

    /// Vertex counts per component, aligned with `components`.
    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Strongly connected components plus the quotient digraph.
///
/// Kosaraju's two-pass scheme finds the components; they are then reindexed
/// into a canonical topological order with ties broken by smallest contained
/// vertex id, so identical inputs always produce identical condensations.
pub fn scc_condensation(d: &OrientedDigraph) -> Condensation {
    let n = d.n();

    // Pass 1: finishing order on d.
    let mut finish = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    for start in 0..n {
        if visited[start] {
            continue;
        }
        visited[start] = true;
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if top.1 < n {
                let w = top.1;
                top.1 += 1;
                if d.has_edge(v, w) && !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                finish.push(v);
                stack.pop();
            }
        }
    }

    // Pass 2: on the transpose, in reverse finishing order.
    let rev = d.matrix().transposed();
    let mut comp_of = vec![usize::MAX; n];
    let mut raw_comps: Vec<Vec<usize>> = Vec::new();
    for &start in finish.iter().rev() {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let id = raw_comps.len();
        comp_of[start] = id;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in rev.row_ones(v) {
                if comp_of[w] == usize::MAX {
                    comp_of[w] = id;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        raw_comps.push(comp);
    }

    // Quotient edges on raw component ids.
    let m = raw_comps.len();
    let mut qadj = BitMatrix::new(m);
    for u in 0..n {
        for v in d.out_neighbors(u) {
            let (cu, cv) = (comp_of[u], comp_of[v]);
            if cu != cv {
                qadj.set(cu, cv, true);
            }
        }
    }

    // Canonical topological order: Kahn's algorithm, ready components taken
    // by smallest contained vertex.
    let mut indeg = vec![0usize; m];
    for u in 0..m {
        for v in qadj.row_ones(u) {
            indeg[v] += 1;
        }
    }
    let mut heap = BinaryHeap::new();
    for c in 0..m {
        if indeg[c] == 0 {
            heap.push(Reverse((raw_comps[c][0], c)));
        }
    }
    let mut order = Vec::with_capacity(m);
    while let Some(Reverse((_, c))) = heap.pop() {
        order.push(c);
        for v in qadj.row_ones(c) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                heap.push(Reverse((raw_comps[v][0], v)));
            }
        }
    }
    debug_assert_eq!(order.len(), m, "quotient of a condensation must be acyclic");

    let mut new_id = vec![0usize; m];
    for (pos, &c) in order.iter().enumerate() {
        new_id[c] = pos;
    }
    let components: Vec<Vec<usize>> = order.iter().map(|&c| raw_comps[c].clone()).collect();
    let weights: Vec<usize> = components.iter().map(|c| c.len()).collect();
    let mut quotient_edges = Vec::new();
    for u in 0..m {
        for v in qadj.row_ones(u) {
            quotient_edges.push((new_id[u], new_id[v]));
        }
    }
    let quotient = OrientedDigraph::from_edges(m, &quotient_edges)
        .expect("condensation quotient is loop-free and two-cycle-free");
    let component_of = (0..n).map(|v| new_id[comp_of[v]]).collect();

    Condensation {
        components,
        quotient,
        weights,
        component_of,
    }
}

/// True iff every vertex of `a` has a directed path to every vertex of `b`.
pub fn reaches_all(d: &OrientedDigraph, a: &[usize], b: &[usize]) -> Result<bool> {
    let n = d.n();
    for &v in a.iter().chain(b) {
        if v >= n {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} out of range for n={n}"
            )));
        }
    }
    let amask = mask_of(a, n);
    let bmask = mask_of(b, n);
    if amask.iter().zip(&bmask).any(|(x, y)| x & y != 0) {
        return Err(Error::InvalidArgument(
            "source and target sets overlap".into(),
        ));
    }
    for &src in a {
        let reach = reachable_mask(d, src);
        if bmask.iter().zip(&reach).any(|(want, have)| want & !have != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn reachable_mask(d: &OrientedDigraph, src: usize) -> Vec<u64> {
    let n = d.n();
    let mut reach = vec![0u64; n.div_ceil(WORD)];
    reach[src / WORD] |= 1 << (src % WORD);
    let mut stack = vec![src];
    while let Some(v) = stack.pop() {
        for w in d.out_neighbors(v) {
            if !mask_get(&reach, w) {
                reach[w / WORD] |= 1 << (w % WORD);
                stack.push(w);
            }
        }
    }
    reach
}

/// The underlying undirected graph (symmetric closure).
pub fn underlying(g: &OrientedDigraph) -> UndirectedGraph {
    let n = g.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in g.out_neighbors(u) {
            edges.push((u, v));
        }
    }
    UndirectedGraph::from_edges(n, &edges).expect("oriented digraph has no loops")
}
