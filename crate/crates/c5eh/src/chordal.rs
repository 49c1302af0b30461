//! Chordality recognition, clique trees, maximum-weight cliques, and the
//! weighted centroid bag.
//!
//! The recognition pair is the standard one: maximum cardinality search
//! produces an ordering whose reverse is a perfect elimination ordering
//! exactly for chordal graphs. All weight comparisons are exact integer
//! arithmetic via cross-multiplication; tie-breaking is by smallest index or
//! lexicographically smallest vertex set throughout, so certificates are
//! deterministic.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{mask_get, mask_of, UndirectedGraph};

/// A tree decomposition whose bags are the maximal cliques of the graph.
#[derive(Clone, Debug)]
pub struct TreeDecomposition {
    /// Bags, each sorted ascending; ordered lexicographically.
    pub bags: Vec<Vec<usize>>,
    /// Adjacency lists over bag indices; always a tree spanning all bags.
    pub tree: Vec<Vec<usize>>,
}

impl TreeDecomposition {
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nbrs) in self.tree.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Outcome of chordality recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChordalCheck {
    /// The graph is chordal; `peo` is a perfect elimination ordering
    /// (earliest eliminated first).
    Chordal { peo: Vec<usize> },
    /// The graph is not chordal; `hole` is an induced cycle of length >= 4
    /// listed in cycle order.
    NotChordal { hole: Vec<usize> },
}

impl ChordalCheck {
    pub fn chordal(&self) -> bool {
        matches!(self, ChordalCheck::Chordal { .. })
    }
}

/// Maximum cardinality search ordering; ties broken by smallest vertex id.
pub fn mcs_order(g: &UndirectedGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    // (weight, Reverse(vertex)) max-heap with lazy entries.
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> =
        (0..n).map(|v| (0, Reverse(v))).collect();
    while let Some((w, Reverse(v))) = heap.pop() {
        if done[v] || w != weight[v] {
            continue;
        }
        done[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
                heap.push((weight[u], Reverse(u)));
            }
        }
    }
    order
}

/// Chordality test: the reverse of the MCS order is a perfect elimination
/// ordering iff the graph is chordal. On failure an induced hole is
/// extracted and returned.
pub fn is_chordal(g: &UndirectedGraph) -> ChordalCheck {
    let mut peo = mcs_order(g);
    peo.reverse();
    if peo_valid(g, &peo) {
        ChordalCheck::Chordal { peo }
    } else {
        let hole = find_hole(g).expect("PEO check failed, so an induced hole must exist");
        ChordalCheck::NotChordal { hole }
    }
}

/// Tarjan–Yannakakis check: for each vertex, its later neighbors minus the
/// earliest of them must all be adjacent to that earliest one.
fn peo_valid(g: &UndirectedGraph, peo: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in peo {
        let mut later: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        if later.len() < 2 {
            continue;
        }
        later.sort_by_key(|&u| pos[u]);
        let parent = later[0];
        for &u in &later[1..] {
            if !g.has_edge(parent, u) {
                return false;
            }
        }
    }
    true
}

/// Finds an induced cycle of length >= 4, if any.
///
/// For every vertex `v` with two non-adjacent neighbors `u`, `w`: if `u` and
/// `w` stay connected after deleting the rest of the closed neighborhood of
/// `v`, the shortest such path plus `v` is an induced cycle. Any non-chordal
/// graph contains a qualifying triple. Scan order (v, then u, then w)
/// and breadth-first search are deterministic.
pub fn find_hole(g: &UndirectedGraph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if g.has_edge(u, w) {
                    continue;
                }
                // Forbid v and all its other neighbors.
                let mut forbidden: Vec<usize> = vec![v];
                forbidden.extend(nbrs.iter().copied().filter(|&x| x != u && x != w));
                let excluded = mask_of(&forbidden, n);
                if let Some(path) = shortest_path_excluding(g, u, w, &excluded) {
                    debug_assert!(path.len() >= 3);
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path_excluding(
    g: &UndirectedGraph,
    from: usize,
    to: usize,
    excluded: &[u64],
) -> Option<Vec<usize>> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    parent[from] = from;
    queue.push_back(from);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x) {
            if parent[y] == usize::MAX && !mask_get(excluded, y) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Checks that `cycle` is an induced chordless cycle of length >= 4 in `g`.
pub fn verify_hole(g: &UndirectedGraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let n = g.n();
    if cycle.iter().any(|&v| v >= n) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Builds a clique tree: the bags are exactly the maximal cliques and the
/// tree is a maximum-weight spanning tree of the clique intersection graph,
/// which yields the induced-subtree property for chordal graphs.
/// Disconnected graphs are joined by zero-weight tree edges.
pub fn clique_tree(g: &UndirectedGraph) -> Result<TreeDecomposition> {
    let peo = match is_chordal(g) {
        ChordalCheck::Chordal { peo } => peo,
        ChordalCheck::NotChordal { hole } => return Err(Error::NotChordal { hole }),
    };
    let n = g.n();
    if n == 0 {
        return Ok(TreeDecomposition {
            bags: vec![],
            tree: vec![],
        });
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }

    // Candidate cliques: v plus its later neighbors, for each v in PEO order.
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(n);
    for &v in &peo {
        let mut c: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        c.push(v);
        c.sort_unstable();
        candidates.push(c);
    }
    candidates.sort();
    candidates.dedup();

    // Keep the maximal ones; every maximal clique of a chordal graph occurs
    // among the candidates.
    let masks: Vec<Vec<u64>> = candidates.iter().map(|c| mask_of(c, n)).collect();
    let mut bags: Vec<Vec<usize>> = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        let strictly_contained = masks.iter().enumerate().any(|(j, m)| {
            j != i
                && candidates[j].len() > c.len()
                && masks[i].iter().zip(m).all(|(a, b)| a & !b == 0)
        });
        if !strictly_contained {
            bags.push(c.clone());
        }
    }
    bags.sort();

    // Maximum-weight spanning tree over bag intersections (Kruskal,
    // deterministic tie-break by index pair).
    let b = bags.len();
    let bag_masks: Vec<Vec<u64>> = bags.iter().map(|c| mask_of(c, n)).collect();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..b {
        for j in (i + 1)..b {
            let w: usize = bag_masks[i]
                .iter()
                .zip(&bag_masks[j])
                .map(|(x, y)| (x & y).count_ones() as usize)
                .sum();
            edges.push((i, j, w));
        }
    }
    edges.sort_by_key(|&(i, j, w)| (Reverse(w), i, j));

    let mut dsu: Vec<usize> = (0..b).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let r = find(dsu, dsu[x]);
            dsu[x] = r;
        }
        dsu[x]
    }
    let mut tree = vec![Vec::new(); b];
    let mut added = 0usize;
    for (i, j, _) in edges {
        let (ri, rj) = (find(&mut dsu, i), find(&mut dsu, j));
        if ri != rj {
            dsu[ri] = rj;
            tree[i].push(j);
            tree[j].push(i);
            added += 1;
            if added + 1 == b {
                break;
            }
        }
    }
    for nbrs in &mut tree {
        nbrs.sort_unstable();
    }

    let td = TreeDecomposition { bags, tree };
    verify_tree_decomposition(g, &td).map_err(Error::InternalInvariant)?;
    Ok(td)
}

/// Validates all clique-tree invariants: vertex and edge coverage, the
/// induced-subtree property per vertex, tree shape, and that every bag is a
/// maximal clique. Returns the first problem found.
pub fn verify_tree_decomposition(
    g: &UndirectedGraph,
    td: &TreeDecomposition,
) -> std::result::Result<(), String> {
    let n = g.n();
    let b = td.bags.len();
    if td.tree.len() != b {
        return Err(format!("tree has {} nodes for {} bags", td.tree.len(), b));
    }
    if n == 0 {
        return Ok(());
    }
    if b == 0 {
        return Err("no bags for a nonempty graph".into());
    }
    if b > n {
        return Err(format!("{b} bags exceed vertex count {n}"));
    }

    // Tree shape: connected and acyclic.
    let edge_count: usize = td.tree.iter().map(|x| x.len()).sum::<usize>() / 2;
    if edge_count != b - 1 {
        return Err(format!("tree has {edge_count} edges, expected {}", b - 1));
    }
    let mut seen = vec![false; b];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for &y in &td.tree[x] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    if reached != b {
        return Err("bag tree is disconnected".into());
    }

    // Coverage.
    let mut in_some_bag = vec![false; n];
    for bag in &td.bags {
        for &v in bag {
            if v >= n {
                return Err(format!("bag vertex {v} out of range"));
            }
            in_some_bag[v] = true;
        }
    }
    if let Some(v) = (0..n).find(|&v| !in_some_bag[v]) {
        return Err(format!("vertex {v} is in no bag"));
    }
    for u in 0..n {
        for v in g.neighbors(u) {
            if u < v && !td.bags.iter().any(|bag| bag.contains(&u) && bag.contains(&v)) {
                return Err(format!("edge ({u},{v}) is in no bag"));
            }
        }
    }

    // Induced subtree per vertex.
    for v in 0..n {
        let holders: Vec<usize> = (0..b).filter(|&i| td.bags[i].contains(&v)).collect();
        let mut seen = vec![false; b];
        let mut stack = vec![holders[0]];
        seen[holders[0]] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &td.tree[x] {
                if !seen[y] && td.bags[y].contains(&v) {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count != holders.len() {
            return Err(format!("bags containing vertex {v} are not a subtree"));
        }
    }

    // Bags are maximal cliques.
    for (i, bag) in td.bags.iter().enumerate() {
        for (ai, &x) in bag.iter().enumerate() {
            for &y in &bag[ai + 1..] {
                if !g.has_edge(x, y) {
                    return Err(format!("bag {i} is not a clique: missing edge ({x},{y})"));
                }
            }
        }
        let extendable = (0..n)
            .any(|z| !bag.contains(&z) && bag.iter().all(|&x| g.has_edge(x, z)));
        if extendable {
            return Err(format!("bag {i} is not a maximal clique"));
        }
    }
    Ok(())
}

/// Maximum-weight clique of a chordal graph with nonnegative vertex weights:
/// scans `{v} ∪ {later neighbors of v}` over a perfect elimination ordering;
/// ties broken by lexicographically smallest vertex set.
pub fn max_weight_clique_chordal(g: &UndirectedGraph, weights: &[usize]) -> Result<Vec<usize>> {
    let n = g.n();
    if weights.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{} weights for {} vertices",
            weights.len(),
            n
        )));
    }
    let peo = match is_chordal(g) {
        ChordalCheck::Chordal { peo } => peo,
        ChordalCheck::NotChordal { hole } => return Err(Error::NotChordal { hole }),
    };
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for &v in &peo {
        let mut clique: Vec<usize> = g.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        clique.push(v);
        clique.sort_unstable();
        let w: usize = clique.iter().map(|&u| weights[u]).sum();
        let replace = match &best {
            None => true,
            Some((bw, bc)) => w > *bw || (w == *bw && clique < *bc),
        };
        if replace {
            best = Some((w, clique));
        }
    }
    Ok(best.unwrap().1)
}

/// Index of the first bag whose removal leaves every connected component
/// with weight at most half the total (exact comparison `2·weight <= W`).
/// Such a bag always exists for a valid clique tree; absence signals a
/// decomposition bug.
pub fn centroid_bag(
    g: &UndirectedGraph,
    td: &TreeDecomposition,
    weights: &[usize],
) -> Result<usize> {
    let n = g.n();
    if weights.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{} weights for {} vertices",
            weights.len(),
            n
        )));
    }
    let total: usize = weights.iter().sum();
    if total == 0 {
        return Err(Error::InvalidArgument("total weight must be positive".into()));
    }
    for (i, bag) in td.bags.iter().enumerate() {
        let excluded = mask_of(bag, n);
        let ok = g
            .components_excluding(&excluded)
            .iter()
            .all(|comp| 2 * comp.iter().map(|&v| weights[v]).sum::<usize>() <= total);
        if ok {
            return Ok(i);
        }
    }
    Err(Error::InternalInvariant(
        "no centroid bag found in a valid clique tree".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UndirectedGraph {
        UndirectedGraph::from_edges(n, edges).unwrap()
    }

    /// Oracle: enumerate all vertex subsets and test for induced cycles of
    /// length >= 4 (subset induces a connected 2-regular subgraph).
    fn has_hole_oracle(g: &UndirectedGraph) -> bool {
        let n = g.n();
        for s in 0u32..(1u32 << n) {
            if (s.count_ones() as usize) < 4 {
                continue;
            }
            let verts: Vec<usize> = (0..n).filter(|&v| (s >> v) & 1 == 1).collect();
            let degrees_ok = verts
                .iter()
                .all(|&v| verts.iter().filter(|&&u| u != v && g.has_edge(u, v)).count() == 2);
            if !degrees_ok {
                continue;
            }
            // Connected?
            let mut seen = vec![false; n];
            let mut stack = vec![verts[0]];
            seen[verts[0]] = true;
            let mut cnt = 1;
            while let Some(x) = stack.pop() {
                for &y in &verts {
                    if !seen[y] && g.has_edge(x, y) {
                        seen[y] = true;
                        cnt += 1;
                        stack.push(y);
                    }
                }
            }
            if cnt == verts.len() {
                return true;
            }
        }
        false
    }

    #[test]
    fn mcs_order_examples() {
        assert_eq!(mcs_order(&UndirectedGraph::edgeless(3)), vec![0, 1, 2]);
        let k3 = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(mcs_order(&k3), vec![0, 1, 2]);
        let any = graph(5, &[(0, 3), (2, 4)]);
        let mut o = mcs_order(&any);
        o.sort_unstable();
        assert_eq!(o, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        match is_chordal(&c4) {
            ChordalCheck::NotChordal { hole } => {
                assert_eq!(hole, vec![0, 1, 2, 3]);
                assert!(verify_hole(&c4, &hole));
            }
            _ => panic!("C4 must not be chordal"),
        }
    }

    #[test]
    fn complete_graphs_are_chordal() {
        for n in 1..7 {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    edges.push((i, j));
                }
            }
            assert!(is_chordal(&graph(n, &edges)).chordal());
        }
    }

    #[test]
    fn chordality_matches_oracle_on_random_small_graphs() {
        for seed in 0..500u64 {
            let n = 4 + (seed as usize) % 5;
            let g = random_graph(n, seed);
            let verdict = is_chordal(&g);
            assert_eq!(verdict.chordal(), !has_hole_oracle(&g), "seed {seed}");
            if let ChordalCheck::NotChordal { hole } = verdict {
                assert!(verify_hole(&g, &hole), "bad hole certificate at seed {seed}");
            }
        }
    }

    fn random_graph(n: usize, seed: u64) -> UndirectedGraph {
        // Cheap deterministic edge selection; density varies with the seed.
        let mut edges = Vec::new();
        let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
        let threshold = (seed % 7) + 1;
        for i in 0..n {
            for j in (i + 1)..n {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                if (state >> 33) % 8 < threshold {
                    edges.push((i, j));
                }
            }
        }
        UndirectedGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn clique_tree_of_star_has_edge_bags() {
        let star = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        let td = clique_tree(&star).unwrap();
        assert_eq!(td.bags, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        assert!(verify_tree_decomposition(&star, &td).is_ok());
    }

    #[test]
    fn clique_tree_of_complete_graph_is_single_bag() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let td = clique_tree(&k4).unwrap();
        assert_eq!(td.bags, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn clique_tree_rejects_non_chordal() {
        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        match clique_tree(&c4) {
            Err(Error::NotChordal { hole }) => assert!(verify_hole(&c4, &hole)),
            other => panic!("expected NotChordal, got {other:?}"),
        }
    }

    #[test]
    fn clique_tree_invariants_on_random_chordal() {
        for seed in 0..60u64 {
            let n = 2 + (seed as usize * 3) % 60;
            let g = gen::random_chordal_graph(n, seed);
            let td = clique_tree(&g).unwrap();
            assert!(td.bags.len() <= n.max(1));
            if let Err(e) = verify_tree_decomposition(&g, &td) {
                panic!("seed {seed}: {e}");
            }
        }
    }

    #[test]
    fn max_weight_clique_examples() {
        let k3 = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(
            max_weight_clique_chordal(&k3, &[1, 2, 3]).unwrap(),
            vec![0, 1, 2]
        );

        let empty = UndirectedGraph::edgeless(3);
        assert_eq!(
            max_weight_clique_chordal(&empty, &[4, 9, 2]).unwrap(),
            vec![1]
        );

        let path = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            max_weight_clique_chordal(&path, &[1, 5, 1]).unwrap(),
            vec![0, 1]
        );
    }

    #[test]
    fn max_weight_clique_matches_enumeration() {
        for seed in 0..40u64 {
            let n = 2 + (seed as usize) % 11;
            let g = gen::random_chordal_graph(n, seed ^ 0xc11);
            let weights: Vec<usize> = (0..n).map(|v| (v * 7 + seed as usize) % 5).collect();
            let got = max_weight_clique_chordal(&g, &weights).unwrap();
            let got_w: usize = got.iter().map(|&v| weights[v]).sum();
            // Exhaustive clique enumeration.
            let mut best = 0usize;
            for s in 0u32..(1u32 << n) {
                let verts: Vec<usize> = (0..n).filter(|&v| (s >> v) & 1 == 1).collect();
                let is_clique = verts
                    .iter()
                    .enumerate()
                    .all(|(i, &x)| verts[i + 1..].iter().all(|&y| g.has_edge(x, y)));
                if is_clique {
                    best = best.max(verts.iter().map(|&v| weights[v]).sum());
                }
            }
            assert_eq!(got_w, best, "seed {seed}");
        }
    }

    #[test]
    fn centroid_bag_single_bag() {
        let k3 = graph(3, &[(0, 1), (0, 2), (1, 2)]);
        let td = clique_tree(&k3).unwrap();
        assert_eq!(centroid_bag(&k3, &td, &[1, 1, 1]).unwrap(), 0);
    }

    #[test]
    fn centroid_bag_path_of_triangles() {
        // Triangles {0,1,2}, {2,3,4}, {4,5,6} sharing cut vertices 2 and 4.
        let g = graph(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (2, 4),
                (3, 4),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
        );
        let td = clique_tree(&g).unwrap();
        let weights = vec![1usize; 7];
        let idx = centroid_bag(&g, &td, &weights).unwrap();
        // Exhaustive check: the returned bag must satisfy the bound, and must
        // be the first such bag.
        let total = 7usize;
        let qualifies = |i: usize| {
            let excluded = mask_of(&td.bags[i], 7);
            g.components_excluding(&excluded)
                .iter()
                .all(|c| 2 * c.len() <= total)
        };
        assert!(qualifies(idx));
        for i in 0..idx {
            assert!(!qualifies(i));
        }
        // The middle triangle qualifies.
        assert!(qualifies(td.bags.iter().position(|b| b == &vec![2, 3, 4]).unwrap()));
    }

    #[test]
    fn centroid_bag_bound_holds_on_random_chordal() {
        for seed in 0..40u64 {
            let n = 3 + (seed as usize * 5) % 80;
            let g = gen::random_chordal_graph(n, seed ^ 0xbeef);
            let td = clique_tree(&g).unwrap();
            let weights: Vec<usize> = (0..n).map(|v| 1 + (v + seed as usize) % 4).collect();
            let total: usize = weights.iter().sum();
            let idx = centroid_bag(&g, &td, &weights).unwrap();
            let excluded = mask_of(&td.bags[idx], n);
            for comp in g.components_excluding(&excluded) {
                let w: usize = comp.iter().map(|&v| weights[v]).sum();
                assert!(2 * w <= total, "seed {seed}");
            }
        }
    }
}
