//! Linear-time minimum semipaired domination on block graphs.
//!
//! A semipaired dominating set is a dominating set whose vertices split into
//! disjoint 2-sets, each pair joined by a path of length at most two. The
//! solver walks the vertices of a block graph in elimination order (leaves of
//! the block-cut structure first) and grows the set greedily: whenever the
//! current vertex is still undominated, its last neighbor in the order is
//! selected, and a deferred-pairing pointer scheme stitches the selected
//! vertices into pairs without ever backtracking. One pass, O(n + m).

use std::fmt::Write as _;

use thiserror::Error;

use crate::bits::{bit, clear_bit, set_bit};
use crate::block::{build_tree, compute_beo, BlockError, BlockOrder};
use crate::graph::{Graph, ParseError, VertexSet};

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Structure(#[from] BlockError),
    #[error("semipaired domination needs at least two vertices")]
    TooSmall,
}

/// A dominating set together with its explicit split into pairs, each pair
/// at distance at most two. `from_pairs` normalizes: every pair is stored
/// (low, high) and the list is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemipairedSolution {
    n: usize,
    vertices: VertexSet,
    pairs: Vec<(usize, usize)>,
}

impl SemipairedSolution {
    pub fn from_pairs(n: usize, pairs: Vec<(usize, usize)>) -> SemipairedSolution {
        let mut pairs: Vec<(usize, usize)> =
            pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        let members: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
        SemipairedSolution {
            n,
            vertices: VertexSet::new(n, members),
            pairs,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of distinct vertices in the solution.
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// One broken validity condition, with a witness. `verify_solution` reports
/// them grouped by condition in checking order, so the first entry is the
/// first condition that failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange { v: usize, n: usize },
    SelfPair { v: usize },
    RepeatedVertex { v: usize },
    PairTooFar { a: usize, b: usize },
    NotDominated { v: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Violation::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for a graph on {n} vertices")
            }
            Violation::SelfPair { v } => write!(f, "pair ({v}, {v}) is not a 2-set"),
            Violation::RepeatedVertex { v } => {
                write!(f, "vertex {v} appears in more than one pair")
            }
            Violation::PairTooFar { a, b } => {
                write!(f, "pair ({a}, {b}) is at distance greater than two")
            }
            Violation::NotDominated { v } => write!(f, "vertex {v} is not dominated"),
        }
    }
}

/// Check a claimed solution against the graph: vertex ids in range, pairs
/// disjoint 2-sets, every pair within distance two, every vertex dominated.
pub fn verify_solution(g: &Graph, s: &SemipairedSolution) -> Result<(), Vec<Violation>> {
    let n = g.n();
    let mut viol = Vec::new();
    for &(a, b) in s.pairs() {
        for v in [a, b] {
            if v >= n {
                viol.push(Violation::VertexOutOfRange { v, n });
            }
        }
    }
    let mut seen = vec![false; n];
    for &(a, b) in s.pairs() {
        if a == b {
            viol.push(Violation::SelfPair { v: a });
            continue;
        }
        for v in [a, b] {
            if v < n {
                if seen[v] {
                    viol.push(Violation::RepeatedVertex { v });
                } else {
                    seen[v] = true;
                }
            }
        }
    }
    for &(a, b) in s.pairs() {
        if a < n && b < n && a != b && !g.within_distance_two(a, b) {
            viol.push(Violation::PairTooFar { a, b });
        }
    }
    let mut dominated = vec![false; n];
    for &(a, b) in s.pairs() {
        for v in [a, b] {
            if v < n {
                dominated[v] = true;
                for &u in g.neighbors(v) {
                    dominated[u as usize] = true;
                }
            }
        }
    }
    for v in 0..n {
        if !dominated[v] {
            viol.push(Violation::NotDominated { v });
        }
    }
    if viol.is_empty() {
        Ok(())
    } else {
        Err(viol)
    }
}

/// Minimum semipaired dominating set of a connected block graph.
pub fn solve_block_graph(g: &Graph) -> Result<SemipairedSolution, SolveError> {
    let order = prepare(g)?;
    solve_impl(g, &order, false).map(|(s, _)| s)
}

/// Same, returning the per-iteration trace alongside the solution.
pub fn solve_block_graph_traced(g: &Graph) -> Result<(SemipairedSolution, String), SolveError> {
    let order = prepare(g)?;
    let (s, t) = solve_impl(g, &order, true)?;
    Ok((s, t.unwrap_or_default()))
}

/// Run the solver under a caller-supplied elimination ordering instead of the
/// computed one. Any valid ordering yields a minimum solution; the chosen
/// vertices may differ.
pub fn solve_with_order(g: &Graph, order: &BlockOrder) -> Result<SemipairedSolution, SolveError> {
    solve_impl(g, order, false).map(|(s, _)| s)
}

pub fn solve_with_order_traced(
    g: &Graph,
    order: &BlockOrder,
) -> Result<(SemipairedSolution, String), SolveError> {
    let (s, t) = solve_impl(g, order, true)?;
    Ok((s, t.unwrap_or_default()))
}

fn prepare(g: &Graph) -> Result<BlockOrder, SolveError> {
    if g.n() < 2 {
        return Err(SolveError::TooSmall);
    }
    Ok(compute_beo(g)?)
}

// The per-vertex flags of the pass live in bitsets rather than byte arrays:
// the pass hits them at random vertex ids, and at a million vertices the bit
// representation keeps all of them resident in L2 instead of thrashing.

fn dominate(g: &Graph, v: usize, dominated: &mut [u64]) {
    set_bit(dominated, v);
    for &u in g.neighbors(v) {
        set_bit(dominated, u as usize);
    }
}

fn make_pair(g: &Graph, a: usize, b: usize, paired: &mut [u64], pairs: &mut Vec<(usize, usize)>) {
    debug_assert_ne!(a, b);
    debug_assert!(g.within_distance_two(a, b));
    debug_assert!(!bit(paired, a) && !bit(paired, b));
    set_bit(paired, a);
    set_bit(paired, b);
    pairs.push((a, b));
}

/// The single pass. Per vertex, in processing order:
/// (a) undominated and not last: select its parent `vj` in the elimination
///     structure, dominate N[vj], then either pair vj with a vertex already
///     waiting in N[vj] (stored in the pointer array `need`) or park a
///     pointer for vj at its own parent;
/// (b) dominated and a pointer is parked here: the waiting vertex gets a
///     partner — the parent if free, this vertex if free, else a fresh
///     neighbor of the waiting vertex (dominating its neighborhood too);
/// (c) last vertex undominated: select it plus its smallest neighbor.
fn solve_impl(
    g: &Graph,
    order: &BlockOrder,
    want_trace: bool,
) -> Result<(SemipairedSolution, Option<String>), SolveError> {
    let n = g.n();
    if n < 2 {
        return Err(SolveError::TooSmall);
    }
    let tree = build_tree(g, order, cfg!(debug_assertions))?;
    // reverse breadth-first over the structure tree is itself a valid
    // elimination order, and under it each vertex's latest neighbor is its
    // tree parent — which is all the pass below relies on
    let proc = &tree.order;
    let parent = &tree.parent;
    // position of v in `proc`, wanted only to arbitrate between two parked
    // pointers meeting in one closed neighborhood — rare enough that the
    // array is built on first use
    let mut pos: Option<Vec<u32>> = None;

    let words = n / 64 + 1;
    let mut dominated = vec![0u64; words];
    let mut selected = vec![0u64; words];
    let mut paired = vec![0u64; words];
    // parked pairing pointers: a presence bit per vertex, values off to the
    // side so the scans below never touch the wide array on a miss
    let mut has_need = vec![0u64; words];
    let mut need_val = vec![0u32; n];
    crate::mem::hugepage(&need_val);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut cands: Vec<usize> = Vec::new();
    let mut trace = want_trace.then(String::new);

    for i in 0..n {
        let v = proc[i] as usize;
        let step = i + 1;
        if !bit(&dominated, v) {
            if i + 1 < n {
                // (a)
                let vj = parent[v] as usize;
                debug_assert_ne!(vj, v);
                debug_assert!(!bit(&selected, vj), "parent of an undominated vertex is fresh");
                set_bit(&mut selected, vj);
                dominate(g, vj, &mut dominated);
                cands.clear();
                for u in std::iter::once(vj).chain(g.neighbors(vj).iter().map(|&x| x as usize)) {
                    if bit(&has_need, u) {
                        cands.push(u);
                    }
                }
                let waiting = match cands.len() {
                    0 => None,
                    1 => Some(cands[0]),
                    _ => {
                        let pos = pos.get_or_insert_with(|| {
                            let mut p = vec![0u32; n];
                            for (j, &x) in proc.iter().enumerate() {
                                p[x as usize] = j as u32;
                            }
                            p
                        });
                        Some(*cands.iter().min_by_key(|&&u| pos[u]).unwrap())
                    }
                };
                match waiting {
                    None => {
                        let park = parent[vj] as usize;
                        debug_assert!(!bit(&has_need, park));
                        set_bit(&mut has_need, park);
                        need_val[park] = vj as u32;
                        if let Some(t) = trace.as_mut() {
                            writeln!(t, "{step} a +{vj} m[{park}]={vj}").unwrap();
                        }
                    }
                    Some(u) => {
                        let w = need_val[u] as usize;
                        clear_bit(&mut has_need, u);
                        debug_assert!(bit(&selected, w) && !bit(&paired, w));
                        make_pair(g, w, vj, &mut paired, &mut pairs);
                        if let Some(t) = trace.as_mut() {
                            writeln!(t, "{step} a +{vj} pair={w}:{vj} m[{u}]=-").unwrap();
                        }
                    }
                }
            } else {
                // (c): the last vertex is still undominated, so nothing in
                // its closed neighborhood was ever selected
                debug_assert!(!bit(&has_need, v));
                set_bit(&mut selected, v);
                dominate(g, v, &mut dominated);
                let u = *g
                    .neighbors(v)
                    .first()
                    .expect("connected graph on two or more vertices") as usize;
                debug_assert!(!bit(&selected, u));
                set_bit(&mut selected, u);
                dominate(g, u, &mut dominated);
                make_pair(g, v, u, &mut paired, &mut pairs);
                if let Some(t) = trace.as_mut() {
                    writeln!(t, "{step} c +{v} +{u} pair={v}:{u}").unwrap();
                }
            }
        } else if bit(&has_need, v) {
            // (b)
            let vk = need_val[v] as usize;
            clear_bit(&mut has_need, v);
            debug_assert!(
                bit(&selected, vk) && !bit(&paired, vk),
                "a parked pointer marks an unpaired vertex"
            );
            let fv = parent[v] as usize;
            let added = if !bit(&selected, fv) {
                fv
            } else if !bit(&selected, v) {
                v
            } else {
                g.neighbors(vk)
                    .iter()
                    .map(|&x| x as usize)
                    .find(|&u| !bit(&selected, u))
                    .expect("waiting vertex keeps an unselected neighbor")
            };
            set_bit(&mut selected, added);
            dominate(g, added, &mut dominated);
            make_pair(g, vk, added, &mut paired, &mut pairs);
            if let Some(t) = trace.as_mut() {
                writeln!(t, "{step} b +{added} pair={vk}:{added} m[{v}]=-").unwrap();
            }
        } else if let Some(t) = trace.as_mut() {
            writeln!(t, "{step} -").unwrap();
        }
    }

    debug_assert!(
        selected.iter().zip(&paired).all(|(s, p)| s == p),
        "no vertex is left unpaired"
    );
    Ok((SemipairedSolution::from_pairs(n, pairs), trace))
}

/// Solution file: line 1 the number of pairs, then one `u v` line per pair.
pub fn emit_solution(s: &SemipairedSolution) -> String {
    let mut out = format!("{}\n", s.pairs.len());
    for &(a, b) in &s.pairs {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

pub fn parse_solution(text: &str, n: usize) -> Result<SemipairedSolution, ParseError> {
    let mut pair_count: Option<usize> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut line_no = 0usize;
    for raw in text.lines() {
        line_no += 1;
        let line = raw.trim();
        if line.is_empty() {
            if pair_count.is_some_and(|p| pairs.len() == p) {
                continue; // trailing blank lines are fine
            }
            return Err(ParseError::Malformed(line_no, "blank line".into()));
        }
        match pair_count {
            None => {
                let p = line.parse().map_err(|_| {
                    ParseError::Malformed(line_no, format!("bad pair count {line:?}"))
                })?;
                pair_count = Some(p);
            }
            Some(p) => {
                if pairs.len() == p {
                    return Err(ParseError::Malformed(
                        line_no,
                        "content after the last pair".into(),
                    ));
                }
                let mut nums = line.split_whitespace().map(|t| t.parse::<usize>());
                let (Some(Ok(a)), Some(Ok(b)), None) = (nums.next(), nums.next(), nums.next())
                else {
                    return Err(ParseError::Malformed(
                        line_no,
                        format!("expected `u v`, got {line:?}"),
                    ));
                };
                for v in [a, b] {
                    if v >= n {
                        return Err(ParseError::Malformed(
                            line_no,
                            format!("vertex {v} out of range for a graph on {n} vertices"),
                        ));
                    }
                }
                pairs.push((a, b));
            }
        }
    }
    let p = pair_count.ok_or_else(|| ParseError::Malformed(1, "missing pair count".into()))?;
    if pairs.len() < p {
        return Err(ParseError::Malformed(
            line_no + 1,
            format!("expected {p} pairs, found {}", pairs.len()),
        ));
    }
    Ok(SemipairedSolution::from_pairs(n, pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn bowtie() -> Graph {
        Graph::build(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn solve_single_edge_with_trace() {
        let (s, t) = solve_block_graph_traced(&Graph::path(2)).unwrap();
        assert_eq!(s.pairs(), &[(0, 1)]);
        assert_eq!(t, "1 a +1 m[1]=1\n2 b +0 pair=1:0 m[1]=-\n");
    }

    #[test]
    fn solve_short_paths() {
        let (s, t) = solve_block_graph_traced(&Graph::path(3)).unwrap();
        assert_eq!(s.vertices().members(), &[1, 2]);
        assert_eq!(t, "1 a +1 m[2]=1\n2 -\n3 b +2 pair=1:2 m[2]=-\n");
        assert_eq!(
            solve_block_graph(&Graph::path(4))
                .unwrap()
                .vertices()
                .members(),
            &[1, 3]
        );
        assert_eq!(
            solve_block_graph(&Graph::path(5))
                .unwrap()
                .vertices()
                .members(),
            &[1, 3]
        );
    }

    #[test]
    fn solve_path6_falls_back_to_final_repair() {
        // after {1,3} is built, vertex 5 is still undominated at its own
        // (final) turn, which exercises the last-vertex branch
        let (s, t) = solve_block_graph_traced(&Graph::path(6)).unwrap();
        assert_eq!(s.vertices().members(), &[1, 3, 4, 5]);
        assert_eq!(s.pairs(), &[(1, 3), (4, 5)]);
        assert!(t.lines().last().unwrap() == "6 c +5 +4 pair=5:4");
    }

    #[test]
    fn solve_triangle() {
        let s = solve_block_graph(&Graph::complete(3)).unwrap();
        assert_eq!(s.vertices().members(), &[0, 2]);
    }

    #[test]
    fn solve_star_pairs_across_center() {
        let s = solve_block_graph(&Graph::star(3)).unwrap();
        assert_eq!(s.vertices().members(), &[0, 3]);
        assert_eq!(s.pairs(), &[(0, 3)]);
    }

    #[test]
    fn solve_bowtie() {
        let (s, t) = solve_block_graph_traced(&bowtie()).unwrap();
        assert_eq!(s.vertices().members(), &[2, 4]);
        assert_eq!(
            t,
            "1 a +2 m[4]=2\n2 -\n3 -\n4 -\n5 b +4 pair=2:4 m[4]=-\n"
        );
    }

    #[test]
    fn custom_order_ranking_the_star_center_last() {
        // with the hub ordered last, the first step selects the hub and the
        // parked pointer resolves at the hub's own (final) turn
        let g = Graph::star(3);
        let order = BlockOrder::from_permutation(&g, vec![1, 2, 3, 0]).unwrap();
        let (s, t) = solve_with_order_traced(&g, &order).unwrap();
        assert_eq!(s.vertices().members(), &[0, 1]);
        assert_eq!(t, "1 a +0 m[0]=0\n2 -\n3 -\n4 b +1 pair=0:1 m[0]=-\n");
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            solve_block_graph(&Graph::complete(1)),
            Err(SolveError::TooSmall)
        ));
        assert!(matches!(
            solve_block_graph(&Graph::cycle(4)),
            Err(SolveError::Structure(BlockError::NotBlockGraph(_)))
        ));
        let split = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            solve_block_graph(&split),
            Err(SolveError::Structure(BlockError::Disconnected))
        ));
    }

    #[test]
    fn verify_accepts_valid_solutions() {
        assert!(verify_solution(
            &Graph::path(2),
            &SemipairedSolution::from_pairs(2, vec![(0, 1)])
        )
        .is_ok());
        assert!(verify_solution(
            &Graph::cycle(4),
            &SemipairedSolution::from_pairs(4, vec![(0, 1)])
        )
        .is_ok());
        for g in [Graph::path(6), bowtie(), Graph::star(5)] {
            let s = solve_block_graph(&g).unwrap();
            assert!(verify_solution(&g, &s).is_ok());
        }
    }

    #[test]
    fn verify_reports_first_violation() {
        let p6 = Graph::path(6);
        let far = SemipairedSolution::from_pairs(6, vec![(1, 4)]);
        let viols = verify_solution(&p6, &far).unwrap_err();
        assert_eq!(viols[0], Violation::PairTooFar { a: 1, b: 4 });

        let dup = SemipairedSolution::from_pairs(4, vec![(0, 1), (1, 2)]);
        let viols = verify_solution(&Graph::path(4), &dup).unwrap_err();
        assert_eq!(viols[0], Violation::RepeatedVertex { v: 1 });

        let selfp = SemipairedSolution::from_pairs(3, vec![(2, 2)]);
        let viols = verify_solution(&Graph::path(3), &selfp).unwrap_err();
        assert_eq!(viols[0], Violation::SelfPair { v: 2 });

        let oor = SemipairedSolution::from_pairs(3, vec![(0, 5)]);
        let viols = verify_solution(&Graph::path(3), &oor).unwrap_err();
        assert_eq!(viols[0], Violation::VertexOutOfRange { v: 5, n: 3 });

        let sparse = SemipairedSolution::from_pairs(6, vec![(0, 1)]);
        let viols = verify_solution(&p6, &sparse).unwrap_err();
        assert_eq!(viols[0], Violation::NotDominated { v: 3 });
    }

    #[test]
    fn solution_text_roundtrip() {
        let s = SemipairedSolution::from_pairs(6, vec![(4, 5), (1, 3)]);
        let text = emit_solution(&s);
        assert_eq!(text, "2\n1 3\n4 5\n");
        assert_eq!(parse_solution(&text, 6).unwrap(), s);
        assert_eq!(parse_solution("0\n", 4).unwrap().size(), 0);
    }

    #[test]
    fn solution_parse_errors() {
        assert!(matches!(
            parse_solution("x\n", 4),
            Err(ParseError::Malformed(1, _))
        ));
        assert!(matches!(
            parse_solution("1\n0\n", 4),
            Err(ParseError::Malformed(2, _))
        ));
        assert!(matches!(
            parse_solution("1\n0 1\n2 3\n", 4),
            Err(ParseError::Malformed(3, _))
        ));
        assert!(matches!(
            parse_solution("2\n0 1\n", 4),
            Err(ParseError::Malformed(3, _))
        ));
        assert!(matches!(
            parse_solution("1\n0 9\n", 4),
            Err(ParseError::Malformed(2, _))
        ));
        assert!(matches!(
            parse_solution("", 4),
            Err(ParseError::Malformed(1, _))
        ));
    }
}
