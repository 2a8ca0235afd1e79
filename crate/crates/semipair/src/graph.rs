//! Simple undirected graphs over vertex ids `0..n`, stored as sorted
//! adjacency lists, plus the edge-list text format used by the CLI.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) out of range for n = {2}")]
    EdgeOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range for n = {1}")]
    VertexOutOfRange(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error("line {0}: expected {1} edge lines, found extra content")]
    ExtraContent(usize, usize),
    #[error("expected {0} edge lines, found only {1}")]
    MissingEdges(usize, usize),
}

/// Undirected simple graph. Parallel edges collapse on construction and the
/// adjacency of every vertex is kept sorted ascending. The whole adjacency
/// structure lives in two flat u32 arrays: half-width ids double how much of
/// a million-vertex graph each cache line carries, which is what the
/// traversals in this crate are bound by.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    /// neighbors of v: list[off[v]..off[v+1]]
    off: Vec<u32>,
    list: Vec<u32>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n(), self.m, self.edges())
    }
}

impl Graph {
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        assert!(
            n < u32::MAX as usize && 2 * edges.len() <= u32::MAX as usize,
            "vertex ids and adjacency offsets are stored as u32"
        );
        let mut off = vec![0u32; n + 1];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            off[u + 1] += 1;
            off[v + 1] += 1;
        }
        for v in 0..n {
            off[v + 1] += off[v];
        }
        let mut list = vec![0u32; 2 * edges.len()];
        let mut cursor = off[..n].to_vec();
        for &(u, v) in edges {
            list[cursor[u] as usize] = v as u32;
            cursor[u] += 1;
            list[cursor[v] as usize] = u as u32;
            cursor[v] += 1;
        }
        // sort each vertex's slice and drop duplicate edges, compacting the
        // flat list in place (the write head never passes the read head)
        let mut write = 0;
        let mut start = 0;
        for v in 0..n {
            let end = off[v + 1] as usize;
            list[start..end].sort_unstable();
            let new_start = write;
            let mut prev = u32::MAX;
            for i in start..end {
                let x = list[i];
                if x != prev {
                    list[write] = x;
                    write += 1;
                    prev = x;
                }
            }
            start = end;
            off[v] = new_start as u32;
        }
        off[n] = write as u32;
        list.truncate(write);
        crate::mem::hugepage(&off);
        crate::mem::hugepage(&list);
        Ok(Graph { off, list, m: write / 2 })
    }

    pub fn n(&self) -> usize {
        self.off.len() - 1
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        (self.off[v + 1] - self.off[v]) as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.list[self.off[v] as usize..self.off[v + 1] as usize]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// All edges as (u, v) with u < v, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in self.neighbors(u) {
                let v = v as usize;
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        let d = self.bfs_distances(0).expect("vertex 0 exists");
        d.iter().all(Option::is_some)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n()).any(|v| self.degree(v) == 0)
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange(v, self.n()));
        }
        let mut members: Vec<usize> = self.neighbors(v).iter().map(|&w| w as usize).collect();
        members.push(v);
        Ok(VertexSet::new(self.n(), members))
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Result<Vec<Option<usize>>, GraphError> {
        if src >= self.n() {
            return Err(GraphError::VertexOutOfRange(src, self.n()));
        }
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in self.neighbors(u) {
                let v = v as usize;
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// True iff u and v are distinct and joined by a path of length 1 or 2.
    pub fn within_distance_two(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n() || v >= self.n() {
            return false;
        }
        if self.has_edge(u, v) {
            return true;
        }
        // common neighbor via sorted-list intersection
        let (mut a, mut b) = (self.neighbors(u).iter().peekable(), self.neighbors(v).iter().peekable());
        while let (Some(&&x), Some(&&y)) = (a.peek(), b.peek()) {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![None; self.n()];
        for start in 0..self.n() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in self.neighbors(u) {
                    let v = v as usize;
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    // Small named constructors, mostly for tests and the harness.

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::build(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::build(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    /// Star K_{1,k}: center 0, leaves 1..=k.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Graph::build(k + 1, &edges).unwrap()
    }
}

/// Parse the edge-list format: header `n m`, then m lines `u v` with
/// `0 <= u < v < n`. Errors carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| ParseError::Malformed(1, "empty input".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::Malformed(1, format!("bad header {header:?}")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| ParseError::Malformed(1, format!("bad header {header:?}")))?;
    if it.next().is_some() {
        return Err(ParseError::Malformed(1, format!("bad header {header:?}")));
    }

    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() && edges.len() == m {
            continue;
        }
        if edges.len() == m {
            return Err(ParseError::ExtraContent(lineno, m));
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (
            it.next().and_then(|t| t.parse::<usize>().ok()),
            it.next().and_then(|t| t.parse::<usize>().ok()),
            it.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(ParseError::Malformed(lineno, format!("bad edge line {line:?}"))),
        };
        if u >= v {
            return Err(ParseError::Malformed(lineno, format!("edge ({u}, {v}) not in u < v form")));
        }
        if v >= n {
            return Err(ParseError::Malformed(lineno, format!("edge ({u}, {v}) out of range for n = {n}")));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(ParseError::MissingEdges(m, edges.len()));
    }
    Ok(Graph::build(n, &edges).expect("validated above"))
}

/// Canonical emit: header, then edges `u v` (u < v) in lexicographic order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// A subset of the vertices of a graph on `n` vertices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    n: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(n: usize, mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { n, members }
    }

    pub fn empty(n: usize) -> VertexSet {
        VertexSet { n, members: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn build_p2() {
        let g = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(GraphError::EdgeOutOfRange(0, 3, 3))
        );
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn connectivity_and_isolates() {
        assert!(Graph::path(4).is_connected());
        let two = Graph::build(2, &[]).unwrap();
        assert!(!two.is_connected());
        assert!(two.has_isolated_vertex());
        assert!(!Graph::cycle(4).has_isolated_vertex());
        assert!(!Graph::build(0, &[]).unwrap().is_connected());
    }

    #[test]
    fn closed_neighborhood_of_path() {
        let g = Graph::path(4);
        let s = g.closed_neighborhood(1).unwrap();
        assert_eq!(s.members(), &[0, 1, 2]);
        assert!(g.closed_neighborhood(9).is_err());
    }

    #[test]
    fn bfs_distances_with_unreachable() {
        // two components: path 0-1 and isolated 2, 3
        let g = Graph::build(4, &[(0, 1)]).unwrap();
        let d = g.bfs_distances(0).unwrap();
        assert_eq!(d, vec![Some(0), Some(1), None, None]);
    }

    #[test]
    fn distance_two_predicate() {
        let g = Graph::path(5);
        assert!(g.within_distance_two(0, 1));
        assert!(g.within_distance_two(0, 2));
        assert!(!g.within_distance_two(0, 3));
        assert!(!g.within_distance_two(2, 2));
        assert!(!g.within_distance_two(0, 99));
    }

    #[test]
    fn bipartite_check() {
        assert!(Graph::path(5).is_bipartite());
        assert!(Graph::cycle(4).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
    }

    #[test]
    fn parse_and_emit_roundtrip() {
        let text = "4 3\n0 1\n1 2\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(emit_edge_list(&g), text);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("zzz\n"),
            Err(ParseError::Malformed(1, "bad header \"zzz\"".into()))
        );
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(ParseError::MissingEdges(2, 1))
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(ParseError::ExtraContent(3, 1))
        ));
        assert!(matches!(
            parse_edge_list("3 1\n1 0\n"),
            Err(ParseError::Malformed(2, _))
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 5\n"),
            Err(ParseError::Malformed(2, _))
        ));
    }

    #[test]
    fn vertex_set_dedupes_and_sorts() {
        let s = VertexSet::new(5, vec![3, 1, 3, 0]);
        assert_eq!(s.members(), &[0, 1, 3]);
        assert!(s.contains(1));
        assert!(!s.contains(2));
    }

    proptest! {
        #[test]
        fn random_builds_are_symmetric_and_consistent(
            n in 1usize..20,
            raw in proptest::collection::vec((0usize..20, 0usize..20), 0..40)
        ) {
            let edges: Vec<_> = raw
                .into_iter()
                .filter(|&(u, v)| u != v && u < n && v < n)
                .collect();
            let g = Graph::build(n, &edges).unwrap();
            let mut count = 0;
            for u in 0..g.n() {
                for &v in g.neighbors(u) {
                    prop_assert!(g.has_edge(v as usize, u));
                    count += 1;
                }
                prop_assert!(g.neighbors(u).windows(2).all(|w| w[0] < w[1]));
            }
            prop_assert_eq!(count, 2 * g.m());
            // emit/parse round-trip on the canonical form
            let back = parse_edge_list(&emit_edge_list(&g)).unwrap();
            prop_assert_eq!(back, g.clone());
            // BFS layers differ by at most one across any edge
            if g.n() > 0 {
                let d = g.bfs_distances(0).unwrap();
                for (u, v) in g.edges() {
                    match (d[u], d[v]) {
                        (Some(a), Some(b)) => {
                            prop_assert!(a.abs_diff(b) <= 1);
                        }
                        (None, None) => {}
                        _ => prop_assert!(false, "edge between reached and unreached vertex"),
                    }
                }
            }
        }
    }
}
