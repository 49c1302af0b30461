//! Disjoint-set structures with exact density thresholds: the verifier
//! checks the plain and smooth conditions at exact rational precision, and a
//! heuristic finder produces verified structures for the all-zero weight
//! vector used by the pairing pipeline.
//!
//! All threshold comparisons cross-multiply integers; no floating point is
//! involved anywhere, so scaling a rational parameter never changes a
//! verdict.

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Tournament;
use crate::patterns;

/// Parameters of a structure: set-size constant `c`, density slack `lambda`,
/// and the 0/1 vector `w` selecting plain (`false`) or transitive (`true`)
/// sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSpec {
    c: Rational64,
    lambda: Rational64,
    w: Vec<bool>,
}

impl StructureSpec {
    pub fn new(c: Rational64, lambda: Rational64, w: Vec<bool>) -> Result<StructureSpec> {
        let zero = Rational64::new(0, 1);
        let one = Rational64::new(1, 1);
        if !(c > zero && c <= one) {
            return Err(Error::InvalidArgument(format!("c = {c} must be in (0, 1]")));
        }
        if !(lambda > zero && lambda < one) {
            return Err(Error::InvalidArgument(format!(
                "lambda = {lambda} must be in (0, 1)"
            )));
        }
        if w.is_empty() {
            return Err(Error::InvalidArgument("w must be nonempty".into()));
        }
        Ok(StructureSpec { c, lambda, w })
    }

    pub fn c(&self) -> Rational64 {
        self.c
    }

    pub fn lambda(&self) -> Rational64 {
        self.lambda
    }

    pub fn w(&self) -> &[bool] {
        &self.w
    }

    /// Number of sets, `|w|`.
    pub fn arity(&self) -> usize {
        self.w.len()
    }

    pub fn all_zero(&self) -> bool {
        self.w.iter().all(|&b| !b)
    }
}

/// A candidate structure: `sets[i]` hosts the i-th disjoint vertex subset,
/// sorted ascending. Disjointness and arity are enforced at construction;
/// the semantic conditions are checked by [`verify_structure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothStructure {
    pub spec: StructureSpec,
    sets: Vec<Vec<usize>>,
}

impl SmoothStructure {
    pub fn new(spec: StructureSpec, mut sets: Vec<Vec<usize>>) -> Result<SmoothStructure> {
        if sets.len() != spec.arity() {
            return Err(Error::InvalidArgument(format!(
                "{} sets for |w| = {}",
                sets.len(),
                spec.arity()
            )));
        }
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        let mut all: Vec<usize> = sets.iter().flatten().copied().collect();
        let total = all.len();
        all.sort_unstable();
        all.dedup();
        if all.len() != total {
            return Err(Error::InvalidArgument("sets are not pairwise disjoint".into()));
        }
        Ok(SmoothStructure { spec, sets })
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }
}

/// Which form of the pairwise condition to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureMode {
    /// Pairwise forward density at least `1 - lambda`.
    Plain,
    /// Per-vertex bounds: at most `lambda·|S_j|` in-neighbors ahead and at
    /// most `lambda·|S_i|` out-neighbors behind.
    Smooth,
}

/// First violated condition, with exact counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureViolation {
    SetTooSmall {
        index: usize,
        size: usize,
    },
    NotTransitive {
        index: usize,
    },
    TransitiveSetTooSmall {
        index: usize,
        size: usize,
        tr: usize,
    },
    LowDensity {
        i: usize,
        j: usize,
        forward_edges: usize,
        pairs: usize,
    },
    TooManyInNeighbors {
        i: usize,
        j: usize,
        vertex: usize,
        count: usize,
        set_size: usize,
    },
    TooManyOutNeighbors {
        i: usize,
        j: usize,
        vertex: usize,
        count: usize,
        set_size: usize,
    },
}

impl std::fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructureViolation::SetTooSmall { index, size } => {
                write!(f, "set {index} has {size} vertices, below c·n")
            }
            StructureViolation::NotTransitive { index } => {
                write!(f, "set {index} does not induce a transitive subtournament")
            }
            StructureViolation::TransitiveSetTooSmall { index, size, tr } => {
                write!(f, "transitive set {index} has {size} vertices, below c·tr = c·{tr}")
            }
            StructureViolation::LowDensity {
                i,
                j,
                forward_edges,
                pairs,
            } => write!(
                f,
                "forward density from set {i} to set {j} is {forward_edges}/{pairs}, below 1-lambda"
            ),
            StructureViolation::TooManyInNeighbors {
                i,
                j,
                vertex,
                count,
                set_size,
            } => write!(
                f,
                "vertex {vertex} of set {i} has {count} in-neighbors in set {j} (size {set_size}), above lambda·|S_j|"
            ),
            StructureViolation::TooManyOutNeighbors {
                i,
                j,
                vertex,
                count,
                set_size,
            } => write!(
                f,
                "vertex {vertex} of set {j} has {count} out-neighbors in set {i} (size {set_size}), above lambda·|S_i|"
            ),
        }
    }
}

/// Verification outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureReport {
    Pass,
    Fail(StructureViolation),
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        matches!(self, StructureReport::Pass)
    }
}

impl std::fmt::Display for StructureReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructureReport::Pass => write!(f, "pass"),
            StructureReport::Fail(v) => write!(f, "fail: {v}"),
        }
    }
}

/// Exact directed edge density from `a` to `b`:
/// `|{(x, y) in a×b : x beats y}| / (|a|·|b|)`.
pub fn forward_density(t: &Tournament, a: &[usize], b: &[usize]) -> Result<Rational64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidArgument("empty set in density query".into()));
    }
    let n = t.n();
    for &v in a.iter().chain(b) {
        if v >= n {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} out of range for n={n}"
            )));
        }
    }
    if a.iter().any(|x| b.contains(x)) {
        return Err(Error::InvalidArgument("density sets overlap".into()));
    }
    let forward = a
        .iter()
        .map(|&x| b.iter().filter(|&&y| t.beats(x, y)).count())
        .sum::<usize>();
    Ok(Rational64::new(
        forward as i64,
        (a.len() * b.len()) as i64,
    ))
}

/// Verifies all structure conditions against `t`, reporting the first
/// violation in a fixed deterministic order: per-set conditions for
/// ascending index, then pair conditions for ascending `(i, j)`.
///
/// `tr_value` is required when some `w_i = 1` and `n` exceeds the exact
/// transitive-search cap; a caller-supplied lower bound makes the size test
/// conservative.
pub fn verify_structure(
    t: &Tournament,
    s: &SmoothStructure,
    mode: StructureMode,
    tr_value: Option<usize>,
) -> Result<StructureReport> {
    let n = t.n();
    for set in s.sets() {
        for &v in set {
            if v >= n {
                return Err(Error::InvalidArgument(format!(
                    "structure vertex {v} out of range for n={n}"
                )));
            }
        }
    }

    let spec = &s.spec;
    let (cn, cd) = (*spec.c().numer(), *spec.c().denom());
    let (ln, ld) = (*spec.lambda().numer(), *spec.lambda().denom());

    let tr = if spec.w().iter().any(|&b| b) {
        match tr_value {
            Some(v) => Some(v),
            None if n <= patterns::MAX_EXACT_TRANSITIVE => {
                Some(patterns::max_transitive_exact(t)?.len())
            }
            None => {
                return Err(Error::InvalidArgument(
                    "tr_value required for transitive sets when n > 24".into(),
                ))
            }
        }
    } else {
        None
    };

    // Per-set conditions.
    for (i, set) in s.sets().iter().enumerate() {
        let size = set.len() as i64;
        if spec.w()[i] {
            if !patterns::is_transitive(t, set) {
                return Ok(StructureReport::Fail(StructureViolation::NotTransitive {
                    index: i,
                }));
            }
            let tr = tr.unwrap();
            // |S_i| >= c·tr  <=>  |S_i|·cd >= cn·tr
            if size * cd < cn * tr as i64 {
                return Ok(StructureReport::Fail(
                    StructureViolation::TransitiveSetTooSmall {
                        index: i,
                        size: set.len(),
                        tr,
                    },
                ));
            }
        } else {
            // |S_i| >= c·n  <=>  |S_i|·cd >= cn·n
            if size * cd < cn * n as i64 {
                return Ok(StructureReport::Fail(StructureViolation::SetTooSmall {
                    index: i,
                    size: set.len(),
                }));
            }
        }
    }

    // Pair conditions.
    for i in 0..s.sets().len() {
        for j in (i + 1)..s.sets().len() {
            let si = &s.sets()[i];
            let sj = &s.sets()[j];
            match mode {
                StructureMode::Plain => {
                    let forward: usize = si
                        .iter()
                        .map(|&x| sj.iter().filter(|&&y| t.beats(x, y)).count())
                        .sum();
                    let pairs = si.len() * sj.len();
                    // forward/pairs >= 1 - ln/ld  <=>  forward·ld >= (ld-ln)·pairs
                    if (forward as i64) * ld < (ld - ln) * pairs as i64 {
                        return Ok(StructureReport::Fail(StructureViolation::LowDensity {
                            i,
                            j,
                            forward_edges: forward,
                            pairs,
                        }));
                    }
                }
                StructureMode::Smooth => {
                    // Every v in S_i: at most lambda·|S_j| in-neighbors in S_j.
                    for &v in si {
                        let count = sj.iter().filter(|&&u| t.beats(u, v)).count();
                        if (count as i64) * ld > ln * sj.len() as i64 {
                            return Ok(StructureReport::Fail(
                                StructureViolation::TooManyInNeighbors {
                                    i,
                                    j,
                                    vertex: v,
                                    count,
                                    set_size: sj.len(),
                                },
                            ));
                        }
                    }
                    // Every v in S_j: at most lambda·|S_i| out-neighbors in S_i.
                    for &v in sj {
                        let count = si.iter().filter(|&&u| t.beats(v, u)).count();
                        if (count as i64) * ld > ln * si.len() as i64 {
                            return Ok(StructureReport::Fail(
                                StructureViolation::TooManyOutNeighbors {
                                    i,
                                    j,
                                    vertex: v,
                                    count,
                                    set_size: si.len(),
                                },
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(StructureReport::Pass)
}

/// Heuristic search for a smooth structure with all-zero `w`.
///
/// Each attempt: (1) order the vertices by a feedback-arc local search
/// (descending out-degree start for attempt 0, a seeded shuffle afterwards,
/// then hill-climbing on adjacent transpositions); (2) cut the order into
/// `|w|` consecutive windows; (3) delete vertices violating the per-vertex
/// smoothness bound until a fixpoint; (4) accept if every window keeps at
/// least `c·n` vertices. Every accepted structure is re-verified before it
/// is returned; an empty result is a legitimate outcome.
///
/// Attempt `k` derives its randomness from ChaCha8 stream `k` of `seed`, so
/// results are reproducible and independent of attempt scheduling; with the
/// `parallel` feature attempts run concurrently and the smallest successful
/// attempt index wins, matching the sequential result.
pub fn find_structure(
    t: &Tournament,
    spec: &StructureSpec,
    attempts: usize,
    seed: u64,
) -> Result<Option<SmoothStructure>> {
    if !spec.all_zero() {
        return Err(Error::InvalidArgument(
            "find_structure supports only all-zero w".into(),
        ));
    }
    let run = |attempt: usize| attempt_structure(t, spec, seed, attempt);

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok((0..attempts).into_par_iter().find_map_first(run))
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok((0..attempts).find_map(run))
    }
}

fn attempt_structure(
    t: &Tournament,
    spec: &StructureSpec,
    seed: u64,
    attempt: usize,
) -> Option<SmoothStructure> {
    let n = t.n();
    let k = spec.arity();
    if n == 0 || n < k {
        return None;
    }

    let mut order: Vec<usize> = (0..n).collect();
    if attempt == 0 {
        order.sort_by_key(|&v| (std::cmp::Reverse(t.out_degree(v)), v));
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt as u64);
        order.shuffle(&mut rng);
    }

    // Hill-climb on adjacent transpositions: each swap repairs one backward
    // adjacent pair and lowers the total backward count by one.
    loop {
        let mut changed = false;
        for p in 0..n - 1 {
            if t.beats(order[p + 1], order[p]) {
                order.swap(p, p + 1);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // Equal consecutive windows (first n % k get the extra vertex).
    let base = n / k;
    let extra = n % k;
    let mut sets: Vec<Vec<usize>> = Vec::with_capacity(k);
    let mut cursor = 0usize;
    for i in 0..k {
        let len = base + usize::from(i < extra);
        sets.push(order[cursor..cursor + len].to_vec());
        cursor += len;
    }

    // Delete smoothness violators until a fixpoint. Scan order is
    // deterministic: window index, then position within the window.
    let (ln, ld) = (*spec.lambda().numer(), *spec.lambda().denom());
    loop {
        let mut deleted = false;
        'scan: for i in 0..k {
            for vi in 0..sets[i].len() {
                let v = sets[i][vi];
                for j in 0..k {
                    if i == j {
                        continue;
                    }
                    let (count, bound_set) = if j > i {
                        (
                            sets[j].iter().filter(|&&u| t.beats(u, v)).count(),
                            sets[j].len(),
                        )
                    } else {
                        (
                            sets[j].iter().filter(|&&u| t.beats(v, u)).count(),
                            sets[j].len(),
                        )
                    };
                    if (count as i64) * ld > ln * bound_set as i64 {
                        sets[i].remove(vi);
                        deleted = true;
                        break 'scan;
                    }
                }
            }
        }
        if !deleted {
            break;
        }
    }

    // Accept only if every window kept at least c·n vertices.
    let (cn, cd) = (*spec.c().numer(), *spec.c().denom());
    if sets
        .iter()
        .any(|s| (s.len() as i64) * cd < cn * n as i64)
    {
        return None;
    }

    let candidate = SmoothStructure::new(spec.clone(), sets).ok()?;
    match verify_structure(t, &candidate, StructureMode::Smooth, None) {
        Ok(StructureReport::Pass) => Some(candidate),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::patterns::transitive_tournament;

    fn rat(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn zero_spec(c: Rational64, lambda: Rational64, k: usize) -> StructureSpec {
        StructureSpec::new(c, lambda, vec![false; k]).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(StructureSpec::new(rat(0, 1), rat(1, 5), vec![false]).is_err());
        assert!(StructureSpec::new(rat(1, 5), rat(1, 1), vec![false]).is_err());
        assert!(StructureSpec::new(rat(1, 5), rat(1, 5), vec![]).is_err());
        assert!(StructureSpec::new(rat(1, 1), rat(1, 5), vec![false]).is_ok());
    }

    #[test]
    fn structure_rejects_overlap() {
        let spec = zero_spec(rat(1, 5), rat(1, 5), 2);
        assert!(SmoothStructure::new(spec, vec![vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn forward_density_examples() {
        let t = transitive_tournament(4);
        assert_eq!(
            forward_density(&t, &[0, 1], &[2, 3]).unwrap(),
            rat(1, 1)
        );
        assert_eq!(
            forward_density(&t, &[2, 3], &[0, 1]).unwrap(),
            rat(0, 1)
        );
        // a beats b1, loses to b2.
        let t2 = Tournament::from_orientations(3, |i, j| !(i == 0 && j == 2));
        assert_eq!(forward_density(&t2, &[0], &[1, 2]).unwrap(), rat(1, 2));
        assert!(forward_density(&t2, &[], &[1]).is_err());
        assert!(forward_density(&t2, &[1], &[1, 2]).is_err());
    }

    use crate::graph::Tournament;

    #[test]
    fn verify_passes_on_sliced_transitive() {
        let t = transitive_tournament(50);
        let sets: Vec<Vec<usize>> = (0..5).map(|i| (10 * i..10 * (i + 1)).collect()).collect();
        let s = SmoothStructure::new(zero_spec(rat(1, 5), rat(1, 5), 5), sets).unwrap();
        assert!(verify_structure(&t, &s, StructureMode::Smooth, None)
            .unwrap()
            .passed());
        assert!(verify_structure(&t, &s, StructureMode::Plain, None)
            .unwrap()
            .passed());
    }

    #[test]
    fn verify_fails_on_backward_blocks() {
        // All edges from the second block to the first.
        let t = Tournament::from_orientations(10, |i, _j| i >= 5);
        let sets = vec![(0..5).collect::<Vec<_>>(), (5..10).collect()];
        let s = SmoothStructure::new(zero_spec(rat(1, 2), rat(1, 5), 2), sets).unwrap();
        let smooth = verify_structure(&t, &s, StructureMode::Smooth, None).unwrap();
        assert!(!smooth.passed());
        let plain = verify_structure(&t, &s, StructureMode::Plain, None).unwrap();
        assert!(matches!(
            plain,
            StructureReport::Fail(StructureViolation::LowDensity { i: 0, j: 1, .. })
        ));
    }

    #[test]
    fn verify_names_the_overloaded_vertex() {
        // Zero-noise planted blocks, then give vertex 0 one more backward
        // in-edge than the budget allows.
        let (t, s) = gen::gen_planted_blocks(50, 5, rat(1, 5), rat(0, 1), 7).unwrap();
        let sj = s.sets()[1].clone();
        let budget = sj.len() / 5; // lambda = 1/5
        let v = s.sets()[0][0];
        let flip: Vec<(usize, usize)> = sj.iter().take(budget + 1).map(|&u| (u, v)).collect();
        let t2 = Tournament::from_orientations(t.n(), |i, j| {
            if flip.contains(&(j, i)) {
                false
            } else if flip.contains(&(i, j)) {
                true
            } else {
                t.beats(i, j)
            }
        });
        match verify_structure(&t2, &s, StructureMode::Smooth, None).unwrap() {
            StructureReport::Fail(StructureViolation::TooManyInNeighbors {
                i: 0,
                j: 1,
                vertex,
                count,
                ..
            }) => {
                assert_eq!(vertex, v);
                assert_eq!(count, budget + 1);
            }
            other => panic!("expected in-neighbor violation, got {other:?}"),
        }
    }

    #[test]
    fn smooth_pass_implies_plain_pass() {
        for seed in 0..30u64 {
            let (t, s) = gen::gen_planted_blocks(60, 4, rat(1, 6), rat(1, 2), seed).unwrap();
            let smooth = verify_structure(&t, &s, StructureMode::Smooth, None).unwrap();
            assert!(smooth.passed(), "generator contract at seed {seed}");
            let plain = verify_structure(&t, &s, StructureMode::Plain, None).unwrap();
            assert!(plain.passed(), "smooth must imply plain at seed {seed}");
        }
    }

    #[test]
    fn rational_scaling_never_changes_verdicts() {
        let (t, s) = gen::gen_planted_blocks(60, 5, rat(1, 5), rat(1, 1), 3).unwrap();
        for factor in 1..6i64 {
            let scaled = StructureSpec::new(
                Rational64::new(factor, 5 * factor),
                Rational64::new(factor, 5 * factor),
                vec![false; 5],
            )
            .unwrap();
            assert_eq!(scaled.c(), rat(1, 5));
            let s2 = SmoothStructure::new(scaled, s.sets().to_vec()).unwrap();
            assert_eq!(
                verify_structure(&t, &s2, StructureMode::Smooth, None).unwrap(),
                verify_structure(&t, &s, StructureMode::Smooth, None).unwrap()
            );
        }
    }

    #[test]
    fn find_structure_on_transitive() {
        let t = transitive_tournament(100);
        let spec = zero_spec(rat(1, 6), rat(1, 5), 5);
        let found = find_structure(&t, &spec, 1, 0).unwrap().unwrap();
        assert!(verify_structure(&t, &found, StructureMode::Smooth, None)
            .unwrap()
            .passed());
        for set in found.sets() {
            assert!(set.len() * 6 >= 100);
        }
    }

    #[test]
    fn find_structure_on_planted_blocks() {
        let (t, _) = gen::gen_planted_blocks(250, 5, rat(1, 5), rat(0, 1), 11).unwrap();
        let spec = zero_spec(rat(1, 5), rat(1, 5), 5);
        let found = find_structure(&t, &spec, 4, 1).unwrap().expect("structure");
        for set in found.sets() {
            assert!(set.len() >= 50);
        }
        assert!(verify_structure(&t, &found, StructureMode::Smooth, None)
            .unwrap()
            .passed());
    }

    #[test]
    fn find_structure_rejects_nonzero_w() {
        let spec = StructureSpec::new(rat(1, 5), rat(1, 5), vec![true, false]).unwrap();
        assert!(find_structure(&transitive_tournament(10), &spec, 1, 0).is_err());
    }

    #[test]
    fn find_structure_never_returns_unverified() {
        for seed in 0..20u64 {
            let t = gen::random_tournament(40, seed);
            let spec = zero_spec(rat(1, 10), rat(1, 5), 5);
            if let Some(s) = find_structure(&t, &spec, 3, seed).unwrap() {
                assert!(verify_structure(&t, &s, StructureMode::Smooth, None)
                    .unwrap()
                    .passed());
            }
        }
    }
}
