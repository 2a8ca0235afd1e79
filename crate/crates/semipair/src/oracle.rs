//! Exact minimum-set searches by bounded brute force.
//!
//! Everything here recomputes answers straight from the definitions: subsets
//! are enumerated in ascending size and lexicographic order over a bitset
//! representation, so the first feasible set found is the lexicographically
//! smallest optimum of minimum size. These searches exist as ground truth for
//! the fast algorithms and the gadget constructions; they share no code with
//! the solver they check. Budgets keep them pointed at graphs small enough to
//! finish.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::solver::SemipairedSolution;

/// Hard limit of the bitset engine: one u64 word of vertices.
const ENGINE_CAP: usize = 64;

/// Below this many vertices the parallel entry points run sequentially; the
/// search finishes faster than the fork/join overhead.
#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 18;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, over the oracle cap of {max_n}")]
    TooManyVertices { n: usize, max_n: usize },
    #[error("no feasible set within the subset-size cap of {cap}")]
    SubsetCapExceeded { cap: usize },
    #[error("search exceeded the time limit of {limit:?}")]
    TimedOut { limit: Duration },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has an isolated vertex, so no dominating set can be paired up")]
    IsolatedVertex,
    #[error("set has odd size {len}, cannot be split into pairs")]
    OddSetSize { len: usize },
    #[error("set of {len} vertices is over the pairing cap of 64")]
    SetTooLarge { len: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
}

/// Caps on how much work a single oracle call may do.
#[derive(Debug, Clone)]
pub struct OracleBudget {
    /// Largest graph accepted. Anything above 64 is clamped to the engine cap.
    pub max_n: usize,
    /// Largest subset size tried before giving up.
    pub max_subset_size: usize,
    /// Wall-clock limit for one call.
    pub time_limit: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 22,
            max_subset_size: 22,
            time_limit: Duration::from_secs(60),
        }
    }
}

impl OracleBudget {
    pub fn with_max_n(max_n: usize) -> Self {
        OracleBudget {
            max_n,
            max_subset_size: max_n,
            ..OracleBudget::default()
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = limit;
        self
    }
}

/// Smallest dominating set; ties broken lexicographically.
pub fn min_dominating_set(g: &Graph, budget: &OracleBudget) -> Result<VertexSet, OracleError> {
    let (set, _) = min_feasible(g, budget, SearchKind::Dominating, true)?;
    Ok(VertexSet::new(g.n(), set))
}

pub fn min_dominating_set_seq(g: &Graph, budget: &OracleBudget) -> Result<VertexSet, OracleError> {
    let (set, _) = min_feasible(g, budget, SearchKind::Dominating, false)?;
    Ok(VertexSet::new(g.n(), set))
}

/// Smallest dominating set that splits into pairs at distance one or two.
pub fn min_semipaired_dominating(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<SemipairedSolution, OracleError> {
    let (_, pairs) = min_feasible(g, budget, SearchKind::SemiPaired, true)?;
    Ok(SemipairedSolution::from_pairs(g.n(), pairs))
}

pub fn min_semipaired_dominating_seq(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<SemipairedSolution, OracleError> {
    let (_, pairs) = min_feasible(g, budget, SearchKind::SemiPaired, false)?;
    Ok(SemipairedSolution::from_pairs(g.n(), pairs))
}

/// Smallest dominating set whose members split into adjacent pairs.
pub fn min_paired_dominating(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<SemipairedSolution, OracleError> {
    let (_, pairs) = min_feasible(g, budget, SearchKind::Paired, true)?;
    Ok(SemipairedSolution::from_pairs(g.n(), pairs))
}

pub fn min_paired_dominating_seq(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<SemipairedSolution, OracleError> {
    let (_, pairs) = min_feasible(g, budget, SearchKind::Paired, false)?;
    Ok(SemipairedSolution::from_pairs(g.n(), pairs))
}

/// Lexicographically smallest semipaired dominating set of exactly `size`
/// vertices, or None if that size is infeasible.
pub fn semipaired_of_size(
    g: &Graph,
    size: usize,
    budget: &OracleBudget,
) -> Result<Option<SemipairedSolution>, OracleError> {
    if size % 2 == 1 {
        return Err(OracleError::OddSetSize { len: size });
    }
    match exact_search(g, budget, SearchKind::SemiPaired, true, Some(size)) {
        Ok((_, pairs)) => Ok(Some(SemipairedSolution::from_pairs(g.n(), pairs))),
        Err(OracleError::SubsetCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Smallest set of vertices touching every edge.
pub fn min_vertex_cover(g: &Graph, budget: &OracleBudget) -> Result<VertexSet, OracleError> {
    let n = g.n();
    let cap_n = budget.max_n.min(ENGINE_CAP);
    if n > cap_n {
        return Err(OracleError::TooManyVertices { n, max_n: cap_n });
    }
    let edges = g.edges();
    let deadline = Instant::now() + budget.time_limit;
    let cap = n.min(budget.max_subset_size);
    let mut chosen = Vec::new();
    for k in 0..=cap {
        if Instant::now() > deadline {
            return Err(OracleError::TimedOut {
                limit: budget.time_limit,
            });
        }
        chosen.clear();
        if vc_extend(&edges, n, 0, k, 0, &mut chosen) {
            return Ok(VertexSet::new(n, chosen));
        }
    }
    Err(OracleError::SubsetCapExceeded { cap })
}

/// Try to split `s` into pairs of vertices at distance one or two in `g`.
/// Returns the lexicographically first pairing, or None if none exists.
pub fn has_semipairing(
    g: &Graph,
    s: &VertexSet,
) -> Result<Option<Vec<(usize, usize)>>, OracleError> {
    for &v in s.members() {
        if v >= g.n() {
            return Err(OracleError::VertexOutOfRange { v, n: g.n() });
        }
    }
    let mem = s.members();
    let k = mem.len();
    if k % 2 == 1 {
        return Err(OracleError::OddSetSize { len: k });
    }
    if k > ENGINE_CAP {
        return Err(OracleError::SetTooLarge { len: k });
    }
    // the pairing relation, re-indexed over positions in `mem`
    let mut rel = vec![0u64; k];
    for i in 0..k {
        for j in (i + 1)..k {
            if g.within_distance_two(mem[i], mem[j]) {
                rel[i] |= 1 << j;
                rel[j] |= 1 << i;
            }
        }
    }
    let full = low_bits(k);
    let mut matched = Vec::new();
    if pair_up(full, &rel, &mut matched) {
        let mut pairs: Vec<(usize, usize)> = matched
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (mem[i], mem[j]);
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        Ok(Some(pairs))
    } else {
        Ok(None)
    }
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum SearchKind {
    Dominating,
    SemiPaired,
    Paired,
}

fn low_bits(k: usize) -> u64 {
    if k == 0 {
        0
    } else {
        (!0u64) >> (64 - k)
    }
}

fn closed_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| {
            let mut m = 1u64 << v;
            for &u in g.neighbors(v) {
                m |= 1 << u;
            }
            m
        })
        .collect()
}

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| {
            let mut m = 0u64;
            for &u in g.neighbors(v) {
                m |= 1 << u;
            }
            m
        })
        .collect()
}

/// rel[v] = vertices other than v within distance two of v.
fn distance_two_masks(closed: &[u64]) -> Vec<u64> {
    closed
        .iter()
        .enumerate()
        .map(|(v, &cv)| {
            let mut m = cv;
            let mut rest = cv;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                m |= closed[u];
            }
            m & !(1u64 << v)
        })
        .collect()
}

/// Match every set bit of `mask` with another under `rel`, backtracking.
/// Always expands the lowest unmatched bit first, partners in ascending
/// order, so the pairing found is deterministic.
fn pair_up(mask: u64, rel: &[u64], out: &mut Vec<(usize, usize)>) -> bool {
    if mask == 0 {
        return true;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1u64 << v);
    let mut cands = rel[v] & rest;
    while cands != 0 {
        let u = cands.trailing_zeros() as usize;
        cands &= cands - 1;
        out.push((v, u));
        if pair_up(rest & !(1u64 << u), rel, out) {
            return true;
        }
        out.pop();
    }
    false
}

struct Timeout;

struct Engine<'a> {
    n: usize,
    full: u64,
    closed: &'a [u64],
    /// suffix[i] = union of closed balls of vertices i..n.
    suffix: &'a [u64],
    max_ball: u32,
    pair_rel: Option<&'a [u64]>,
    deadline: Instant,
}

impl Engine<'_> {
    /// Search all k-subsets whose smallest element is `first`.
    fn run_from(&self, first: usize, k: usize) -> Result<Option<Vec<usize>>, Timeout> {
        let mut chosen = Vec::with_capacity(k);
        chosen.push(first);
        let mut nodes = 0u64;
        let found = self.extend(
            first + 1,
            k - 1,
            self.closed[first],
            1u64 << first,
            &mut chosen,
            &mut nodes,
        )?;
        Ok(if found { Some(chosen) } else { None })
    }

    fn extend(
        &self,
        start: usize,
        left: usize,
        dom: u64,
        mask: u64,
        chosen: &mut Vec<usize>,
        nodes: &mut u64,
    ) -> Result<bool, Timeout> {
        *nodes += 1;
        if *nodes & 0x1fff == 0 && Instant::now() > self.deadline {
            return Err(Timeout);
        }
        if left == 0 {
            return Ok(dom == self.full && self.pairable(mask));
        }
        let undom = self.full & !dom;
        // only vertices from `start` up remain available; if their balls
        // cannot even touch every undominated vertex, the branch is dead
        if undom & !self.suffix[start] != 0 {
            return Ok(false);
        }
        if (left as u32) * self.max_ball < undom.count_ones() {
            return Ok(false);
        }
        if self.packing_lower_bound(undom) > left {
            return Ok(false);
        }
        for v in start..=(self.n - left) {
            chosen.push(v);
            let found = self.extend(
                v + 1,
                left - 1,
                dom | self.closed[v],
                mask | (1u64 << v),
                chosen,
                nodes,
            )?;
            if found {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    fn pairable(&self, mask: u64) -> bool {
        match self.pair_rel {
            None => true,
            Some(rel) => pair_up(mask, rel, &mut Vec::new()),
        }
    }

    /// Greedily pack pairwise-disjoint closed balls centered on undominated
    /// vertices. Each packed ball needs its own future pick, so the count is
    /// a lower bound on how many picks any feasible completion still needs.
    fn packing_lower_bound(&self, undom: u64) -> usize {
        let mut covered = 0u64;
        let mut balls = 0usize;
        let mut rest = undom;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.closed[v] & covered == 0 {
                covered |= self.closed[v];
                balls += 1;
            }
        }
        balls
    }
}

/// Lexicographically smallest feasible k-subset, if any.
fn lexmin_of_size(eng: &Engine, k: usize, parallel: bool) -> Result<Option<Vec<usize>>, Timeout> {
    if k == 0 {
        return Ok(if eng.full == 0 { Some(Vec::new()) } else { None });
    }
    if k > eng.n {
        return Ok(None);
    }
    #[cfg(feature = "parallel")]
    if parallel && eng.n >= PAR_THRESHOLD {
        use rayon::prelude::*;
        // branches are indexed by the leading vertex; find_map_first keeps
        // the leftmost hit, so the result matches the sequential scan
        return (0..=eng.n - k)
            .into_par_iter()
            .find_map_first(|first| match eng.run_from(first, k) {
                Ok(Some(found)) => Some(Ok(found)),
                Ok(None) => None,
                Err(t) => Some(Err(t)),
            })
            .transpose();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = parallel;
    for first in 0..=eng.n - k {
        if let Some(found) = eng.run_from(first, k)? {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

fn min_feasible(
    g: &Graph,
    budget: &OracleBudget,
    kind: SearchKind,
    parallel: bool,
) -> Result<(Vec<usize>, Vec<(usize, usize)>), OracleError> {
    exact_search(g, budget, kind, parallel, None)
}

/// Ascending-size search when `fixed_size` is None, single-size otherwise.
fn exact_search(
    g: &Graph,
    budget: &OracleBudget,
    kind: SearchKind,
    parallel: bool,
    fixed_size: Option<usize>,
) -> Result<(Vec<usize>, Vec<(usize, usize)>), OracleError> {
    let n = g.n();
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    if kind != SearchKind::Dominating && g.has_isolated_vertex() {
        return Err(OracleError::IsolatedVertex);
    }
    let cap_n = budget.max_n.min(ENGINE_CAP);
    if n > cap_n {
        return Err(OracleError::TooManyVertices { n, max_n: cap_n });
    }
    let closed = closed_masks(g);
    let pair_masks = match kind {
        SearchKind::Dominating => None,
        SearchKind::SemiPaired => Some(distance_two_masks(&closed)),
        SearchKind::Paired => Some(adjacency_masks(g)),
    };
    let mut suffix = vec![0u64; n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1] | closed[v];
    }
    let deadline = Instant::now() + budget.time_limit;
    let eng = Engine {
        n,
        full: low_bits(n),
        closed: &closed,
        suffix: &suffix,
        max_ball: closed.iter().map(|m| m.count_ones()).max().unwrap_or(0),
        pair_rel: pair_masks.as_deref(),
        deadline,
    };
    let step = if pair_masks.is_some() { 2 } else { 1 };
    let (mut k, cap) = match fixed_size {
        Some(sz) => {
            if sz > n {
                return Err(OracleError::SubsetCapExceeded { cap: n });
            }
            (sz, sz)
        }
        None => (step.min(n), n.min(budget.max_subset_size)),
    };
    while k <= cap {
        if Instant::now() > deadline {
            return Err(OracleError::TimedOut {
                limit: budget.time_limit,
            });
        }
        match lexmin_of_size(&eng, k, parallel) {
            Ok(Some(set)) => {
                let pairs = match &pair_masks {
                    None => Vec::new(),
                    Some(rel) => {
                        let mask = set.iter().fold(0u64, |m, &v| m | (1u64 << v));
                        let mut matched = Vec::new();
                        let ok = pair_up(mask, rel, &mut matched);
                        debug_assert!(ok, "feasible set must re-pair");
                        let mut pairs: Vec<(usize, usize)> = matched
                            .iter()
                            .map(|&(a, b)| (a.min(b), a.max(b)))
                            .collect();
                        pairs.sort_unstable();
                        pairs
                    }
                };
                return Ok((set, pairs));
            }
            Ok(None) => {}
            Err(Timeout) => {
                return Err(OracleError::TimedOut {
                    limit: budget.time_limit,
                })
            }
        }
        k += step;
    }
    Err(OracleError::SubsetCapExceeded { cap })
}

fn vc_extend(
    edges: &[(usize, usize)],
    n: usize,
    start: usize,
    left: usize,
    mask: u64,
    chosen: &mut Vec<usize>,
) -> bool {
    let covered = |u: usize, v: usize| mask & (1 << u) != 0 || mask & (1 << v) != 0;
    if left == 0 {
        return edges.iter().all(|&(u, v)| covered(u, v));
    }
    // an uncovered edge with both endpoints below `start` can never be fixed
    if edges
        .iter()
        .any(|&(u, v)| !covered(u, v) && u < start && v < start)
    {
        return false;
    }
    // greedy matching of uncovered edges: each needs its own future pick
    let mut matched = 0u64;
    let mut need = 0usize;
    for &(u, v) in edges {
        if !covered(u, v) && matched & (1 << u) == 0 && matched & (1 << v) == 0 {
            matched |= (1 << u) | (1 << v);
            need += 1;
        }
    }
    if need > left {
        return false;
    }
    for v in start..=(n - left) {
        chosen.push(v);
        if vc_extend(edges, n, v + 1, left - 1, mask | (1 << v), chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn b() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn dominating_path6() {
        let s = min_dominating_set(&Graph::path(6), &b()).unwrap();
        assert_eq!(s.members(), &[1, 4]);
    }

    #[test]
    fn dominating_small_fixed_values() {
        assert_eq!(
            min_dominating_set(&Graph::star(4), &b()).unwrap().members(),
            &[0]
        );
        assert_eq!(
            min_dominating_set(&Graph::cycle(4), &b())
                .unwrap()
                .members(),
            &[0, 1]
        );
        assert_eq!(
            min_dominating_set(&Graph::path(5), &b()).unwrap().members(),
            &[0, 3]
        );
        assert_eq!(
            min_dominating_set(&Graph::complete(1), &b())
                .unwrap()
                .members(),
            &[0]
        );
    }

    #[test]
    fn dominating_rejects_disconnected() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            min_dominating_set(&g, &b()),
            Err(OracleError::Disconnected)
        );
    }

    #[test]
    fn vertex_cover_fixed_values() {
        assert_eq!(
            min_vertex_cover(&Graph::cycle(5), &b()).unwrap().members(),
            &[0, 1, 3]
        );
        assert_eq!(
            min_vertex_cover(&Graph::path(3), &b()).unwrap().members(),
            &[1]
        );
        assert_eq!(
            min_vertex_cover(&Graph::complete(4), &b()).unwrap().len(),
            3
        );
        assert!(min_vertex_cover(&Graph::build(3, &[]).unwrap(), &b())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn semipaired_path2() {
        let s = min_semipaired_dominating(&Graph::path(2), &b()).unwrap();
        assert_eq!(s.pairs(), &[(0, 1)]);
        assert_eq!(s.size(), 2);
    }

    #[test]
    fn semipaired_path5_uses_distance_two() {
        // {1,3} dominates everything and 1,3 sit at distance two
        let s = min_semipaired_dominating(&Graph::path(5), &b()).unwrap();
        assert_eq!(s.vertices().members(), &[1, 3]);
        assert_eq!(s.pairs(), &[(1, 3)]);
    }

    #[test]
    fn semipaired_path6_lexmin() {
        let s = min_semipaired_dominating(&Graph::path(6), &b()).unwrap();
        assert_eq!(s.vertices().members(), &[0, 1, 2, 4]);
        assert_eq!(s.pairs(), &[(0, 1), (2, 4)]);
    }

    #[test]
    fn semipaired_small_fixed_values() {
        let c4 = min_semipaired_dominating(&Graph::cycle(4), &b()).unwrap();
        assert_eq!(c4.vertices().members(), &[0, 1]);
        // two triangles sharing vertex 2
        let bowtie = Graph::build(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let s = min_semipaired_dominating(&bowtie, &b()).unwrap();
        assert_eq!(s.vertices().members(), &[0, 2]);
    }

    #[test]
    fn paired_path6() {
        let s = min_paired_dominating(&Graph::path(6), &b()).unwrap();
        assert_eq!(s.vertices().members(), &[0, 1, 3, 4]);
        assert_eq!(s.pairs(), &[(0, 1), (3, 4)]);
    }

    #[test]
    fn paired_small_fixed_values() {
        assert_eq!(
            min_paired_dominating(&Graph::cycle(4), &b())
                .unwrap()
                .vertices()
                .members(),
            &[0, 1]
        );
        assert_eq!(
            min_paired_dominating(&Graph::star(3), &b())
                .unwrap()
                .vertices()
                .members(),
            &[0, 1]
        );
    }

    #[test]
    fn value_chain_on_path5() {
        // domination 2, semipaired 2, paired 4: the middle quantity can sit
        // strictly under the paired one
        let g = Graph::path(5);
        assert_eq!(min_dominating_set(&g, &b()).unwrap().len(), 2);
        assert_eq!(min_semipaired_dominating(&g, &b()).unwrap().size(), 2);
        assert_eq!(min_paired_dominating(&g, &b()).unwrap().size(), 4);
    }

    #[test]
    fn isolated_vertex_rejected_for_pairing_kinds() {
        let k1 = Graph::complete(1);
        assert_eq!(
            min_semipaired_dominating(&k1, &b()),
            Err(OracleError::IsolatedVertex)
        );
        assert_eq!(
            min_paired_dominating(&k1, &b()),
            Err(OracleError::IsolatedVertex)
        );
    }

    #[test]
    fn size_cap_reports_no_feasible_set() {
        let mut budget = b();
        budget.max_subset_size = 2;
        assert_eq!(
            min_semipaired_dominating(&Graph::path(6), &budget),
            Err(OracleError::SubsetCapExceeded { cap: 2 })
        );
    }

    #[test]
    fn graph_too_large_for_budget() {
        assert_eq!(
            min_dominating_set(&Graph::path(23), &b()),
            Err(OracleError::TooManyVertices { n: 23, max_n: 22 })
        );
        let wide = OracleBudget::with_max_n(100);
        assert!(min_dominating_set(&Graph::path(30), &wide).is_ok());
        assert_eq!(
            min_dominating_set(&Graph::path(65), &wide),
            Err(OracleError::TooManyVertices { n: 65, max_n: 64 })
        );
    }

    #[test]
    fn zero_time_budget_times_out() {
        let budget = b().with_time_limit(Duration::ZERO);
        assert!(matches!(
            min_semipaired_dominating(&Graph::path(12), &budget),
            Err(OracleError::TimedOut { .. })
        ));
    }

    #[test]
    fn minimal_size_confirmed_by_capped_search() {
        // capping the subset size just below the optimum must come up empty
        let mut budget = b();
        budget.max_subset_size = 1;
        assert_eq!(
            min_dominating_set(&Graph::path(6), &budget),
            Err(OracleError::SubsetCapExceeded { cap: 1 })
        );
        budget.max_subset_size = 2;
        assert_eq!(
            min_paired_dominating(&Graph::path(6), &budget),
            Err(OracleError::SubsetCapExceeded { cap: 2 })
        );
    }

    #[test]
    fn exact_size_search() {
        let p6 = Graph::path(6);
        assert_eq!(semipaired_of_size(&p6, 2, &b()).unwrap(), None);
        let s = semipaired_of_size(&p6, 4, &b()).unwrap().unwrap();
        assert_eq!(s.vertices().members(), &[0, 1, 2, 4]);
        let all = semipaired_of_size(&p6, 6, &b()).unwrap().unwrap();
        assert_eq!(all.size(), 6);
        assert_eq!(semipaired_of_size(&p6, 8, &b()).unwrap(), None);
        assert!(matches!(
            semipaired_of_size(&p6, 3, &b()),
            Err(OracleError::OddSetSize { len: 3 })
        ));
    }

    #[test]
    fn pairing_witness_for_explicit_sets() {
        let p5 = Graph::path(5);
        let ok = has_semipairing(&p5, &VertexSet::new(5, vec![1, 3])).unwrap();
        assert_eq!(ok, Some(vec![(1, 3)]));

        let p6 = Graph::path(6);
        let too_far = has_semipairing(&p6, &VertexSet::new(6, vec![1, 4])).unwrap();
        assert_eq!(too_far, None);

        let p4 = Graph::path(4);
        let all = has_semipairing(&p4, &VertexSet::new(4, vec![0, 1, 2, 3])).unwrap();
        assert_eq!(all, Some(vec![(0, 1), (2, 3)]));

        assert_eq!(
            has_semipairing(&p4, &VertexSet::new(4, vec![0, 1, 2])),
            Err(OracleError::OddSetSize { len: 3 })
        );
        assert_eq!(
            has_semipairing(&p4, &VertexSet::new(9, vec![0, 7])),
            Err(OracleError::VertexOutOfRange { v: 7, n: 4 })
        );
    }

    #[test]
    fn empty_set_is_trivially_pairable() {
        let g = Graph::path(3);
        assert_eq!(
            has_semipairing(&g, &VertexSet::empty(3)).unwrap(),
            Some(vec![])
        );
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        for g in [Graph::path(18), Graph::cycle(19), Graph::star(18)] {
            let par = min_semipaired_dominating(&g, &b()).unwrap();
            let seq = min_semipaired_dominating_seq(&g, &b()).unwrap();
            assert_eq!(par, seq);
            let par = min_paired_dominating(&g, &b()).unwrap();
            let seq = min_paired_dominating_seq(&g, &b()).unwrap();
            assert_eq!(par, seq);
            let par = min_dominating_set(&g, &b()).unwrap();
            let seq = min_dominating_set_seq(&g, &b()).unwrap();
            assert_eq!(par.members(), seq.members());
        }
    }
}
