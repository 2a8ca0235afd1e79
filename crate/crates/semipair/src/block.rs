//! Blocks (biconnected components), block-graph recognition, and the
//! elimination ordering the solver runs on.
//!
//! A connected graph is a block graph when every block is a clique. Such
//! graphs admit an ordering v_1..v_n where any two later neighbors of a
//! vertex are themselves adjacent; we build one by repeatedly peeling an
//! end block (a block containing at most one cut vertex) and emitting its
//! non-cut vertices. `F(v)` is the latest-ranked neighbor of `v`, which is
//! always the cut vertex its block was peeled at, and the edges {v, F(v)}
//! form a tree. The solver consumes the reverse BFS order of that tree,
//! which is again a valid elimination ordering.

use crate::bits::{bit, clear_bit, set_bit};
use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlockError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a block graph: block {0:?} is not a clique")]
    NotBlockGraph(Vec<usize>),
    #[error("bad ordering: {0}")]
    BadOrdering(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Vertices of the block, ascending.
    pub vertices: Vec<usize>,
    pub edge_count: usize,
}

impl Block {
    pub fn is_clique(&self) -> bool {
        let s = self.vertices.len();
        self.edge_count == s * (s - 1) / 2
    }
}

#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    /// is_cut[v]: v lies in two or more blocks.
    pub is_cut: Vec<bool>,
    /// membership[v]: indices into `blocks` of the blocks containing v.
    pub membership: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn cut_vertices(&self) -> Vec<usize> {
        (0..self.is_cut.len()).filter(|&v| self.is_cut[v]).collect()
    }
}

/// Split a connected graph into its blocks with an iterative lowpoint DFS.
pub fn decompose(g: &Graph) -> Result<BlockDecomposition, BlockError> {
    let fb = decompose_flat(g)?;
    let mut blocks: Vec<Block> = (0..fb.count())
        .map(|b| Block { vertices: widen(fb.verts(b)), edge_count: 0 })
        .collect();
    // count each block's edges: an edge between two members of a block
    // always belongs to that block
    let mut stamp = vec![usize::MAX; g.n()];
    for (b, block) in blocks.iter_mut().enumerate() {
        for &v in &block.vertices {
            stamp[v] = b;
        }
        let mut ends = 0;
        for &v in &block.vertices {
            ends += g.neighbors(v).iter().filter(|&&u| stamp[u as usize] == b).count();
        }
        block.edge_count = ends / 2;
    }
    let mut membership = vec![Vec::new(); g.n()];
    for (b, block) in blocks.iter().enumerate() {
        for &v in &block.vertices {
            membership[v].push(b);
        }
    }
    let is_cut = membership.iter().map(|m| m.len() >= 2).collect();
    Ok(BlockDecomposition { blocks, is_cut, membership })
}

/// Block decomposition in flat offset-array form. Million-vertex graphs
/// pass through here, so the block/vertex incidence lives in two plain
/// arrays instead of per-entry allocations, and entries are u32 to halve
/// the bytes the cache-hostile passes drag around.
struct FlatBlocks {
    /// verts of block b: block_verts[block_off[b]..block_off[b+1]], ascending
    block_off: Vec<u32>,
    block_verts: Vec<u32>,
    /// bitset over vertices: lies in two or more blocks
    cut: Vec<u64>,
}

impl FlatBlocks {
    fn count(&self) -> usize {
        self.block_off.len() - 1
    }

    fn verts(&self, b: usize) -> &[u32] {
        &self.block_verts[self.block_off[b] as usize..self.block_off[b + 1] as usize]
    }
}

fn widen(xs: &[u32]) -> Vec<usize> {
    xs.iter().map(|&x| x as usize).collect()
}

/// 8-ary min-heap over plain integer keys. Each child scan lands in one or
/// two cache lines and the tree is a third as deep as a binary heap, which
/// is what the end-block peel spends its time on once the graph outgrows L2.
struct MinHeap8<K> {
    a: Vec<K>,
}

impl<K: Copy + Ord> MinHeap8<K> {
    fn with_capacity(c: usize) -> Self {
        let a = Vec::with_capacity(c);
        crate::mem::hugepage(&a);
        MinHeap8 { a }
    }

    fn peek(&self) -> Option<K> {
        self.a.first().copied()
    }

    fn push(&mut self, x: K) {
        self.a.push(x);
        let mut i = self.a.len() - 1;
        while i > 0 {
            let p = (i - 1) / 8;
            if self.a[p] <= x {
                break;
            }
            self.a[i] = self.a[p];
            i = p;
        }
        self.a[i] = x;
    }

    fn pop(&mut self) -> Option<K> {
        let top = *self.a.first()?;
        let x = self.a.pop().unwrap();
        let n = self.a.len();
        if n == 0 {
            return Some(top);
        }
        let mut i = 0;
        loop {
            let c0 = 8 * i + 1;
            if c0 >= n {
                break;
            }
            let mut m = c0;
            for c in c0 + 1..(c0 + 8).min(n) {
                if self.a[c] < self.a[m] {
                    m = c;
                }
            }
            if self.a[m] >= x {
                break;
            }
            self.a[i] = self.a[m];
            i = m;
        }
        self.a[i] = x;
        Some(top)
    }
}

/// Begin pulling a line toward L1 without waiting on it; a pure hint, so a
/// stale or useless address costs nothing.
#[inline(always)]
#[allow(unused_variables)]
fn prefetch<T>(p: &T) {
    // SAFETY: prefetch never faults and reads nothing architecturally
    #[cfg(target_arch = "x86_64")]
    unsafe {
        core::arch::x86_64::_mm_prefetch(
            (p as *const T).cast::<i8>(),
            core::arch::x86_64::_MM_HINT_T0,
        )
    }
}

// DFS frame; disc and low ride here so every lowpoint comparison runs
// against the stack top, and the adjacency slice rides along so re-entry
// after a child's subtree does not chase the offset array again
struct Frame<'a> {
    nbrs: &'a [u32],
    v: u32,
    parent: u32,
    cursor: u32,
    low: u32,
    disc: u32,
    /// blocks closed at v so far; v lies in exactly closures + 1 blocks
    /// (no +1 for the root), so v is a cut vertex iff this ends positive
    closures: u32,
}

fn decompose_flat(g: &Graph) -> Result<FlatBlocks, BlockError> {
    let n = g.n();
    if n == 0 {
        return Err(BlockError::Disconnected);
    }
    debug_assert!(n < u32::MAX as usize);
    const UNSET: u32 = u32::MAX;
    // the one array the edge scans hit at random
    let mut disc = vec![UNSET; n];
    crate::mem::hugepage(&disc);
    let mut timer = 1u32;
    // vertices discovered but not yet assigned to a completed block
    let mut open: Vec<u32> = Vec::with_capacity(n);
    let mut cut = vec![0u64; n / 64 + 1];
    let mut block_off: Vec<u32> = vec![0];
    let mut block_verts: Vec<u32> = Vec::with_capacity(n + n / 2);
    crate::mem::hugepage(&block_verts);

    let mut frames = vec![Frame {
        nbrs: g.neighbors(0),
        v: 0,
        parent: UNSET,
        cursor: 0,
        low: 0,
        disc: 0,
        closures: 0,
    }];
    disc[0] = 0;
    open.push(0);
    'dfs: while let Some(frame) = frames.last_mut() {
        while (frame.cursor as usize) < frame.nbrs.len() {
            let w = frame.nbrs[frame.cursor as usize];
            frame.cursor += 1;
            if w == frame.parent {
                // the tree edge upward; nothing to look up
                continue;
            }
            let dw = disc[w as usize];
            if dw == UNSET {
                disc[w as usize] = timer;
                let t = timer;
                timer += 1;
                let v = frame.v;
                open.push(w);
                frames.push(Frame {
                    nbrs: g.neighbors(w as usize),
                    v: w,
                    parent: v,
                    cursor: 0,
                    low: t,
                    disc: t,
                    closures: 0,
                });
                continue 'dfs;
            }
            if dw < frame.disc {
                // back edge: fold disc(w) into low(v)
                frame.low = frame.low.min(dw);
            }
        }
        let (v, lv, closures) = (frame.v, frame.low, frame.closures);
        frames.pop();
        if let Some(pf) = frames.last_mut() {
            if closures > 0 {
                set_bit(&mut cut, v as usize);
            }
            pf.low = pf.low.min(lv);
            if lv >= pf.disc {
                // v's still-open subtree plus the parent is one finished block
                pf.closures += 1;
                let start = block_verts.len();
                loop {
                    let x = open.pop().expect("the closing child is still open");
                    block_verts.push(x);
                    if x == v {
                        break;
                    }
                }
                block_verts.push(pf.v);
                block_verts[start..].sort_unstable();
                block_off.push(block_verts.len() as u32);
            }
        } else if closures >= 2 {
            // every child of the root closes a block at it
            set_bit(&mut cut, v as usize);
        }
    }
    if timer as usize != n {
        // the DFS from vertex 0 did not reach everything
        return Err(BlockError::Disconnected);
    }

    Ok(FlatBlocks { block_off, block_verts, cut })
}

/// True iff `g` is connected and every block induces a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    if g.n() == 1 {
        return true;
    }
    match decompose(g) {
        Ok(d) => d.blocks.iter().all(Block::is_clique),
        Err(_) => false,
    }
}

/// An elimination ordering of a block graph together with the map to each
/// vertex's latest-ranked neighbor.
#[derive(Debug, Clone)]
pub struct BlockOrder {
    /// beo[i] is the vertex with rank i.
    pub beo: Vec<u32>,
    /// f[v]: the neighbor of v of maximum rank; the last vertex maps to itself.
    pub f: Vec<u32>,
    /// rank[v]: position of v in `beo`.
    pub rank: Vec<u32>,
}

impl BlockOrder {
    /// Derive `f` and `rank` from an externally supplied ordering. The
    /// ordering is not checked for the elimination property; use
    /// [`verify_beo`] for that.
    pub fn from_permutation(g: &Graph, beo: Vec<u32>) -> Result<BlockOrder, BlockError> {
        let n = g.n();
        let mut rank = vec![u32::MAX; n];
        if beo.len() != n {
            return Err(BlockError::BadOrdering(format!(
                "ordering has {} entries for n = {n}",
                beo.len()
            )));
        }
        for (i, &v) in beo.iter().enumerate() {
            if v as usize >= n || rank[v as usize] != u32::MAX {
                return Err(BlockError::BadOrdering(format!("not a permutation at position {i}")));
            }
            rank[v as usize] = i as u32;
        }
        let f = derive_f(g, &beo, &rank);
        Ok(BlockOrder { beo, f, rank })
    }
}

/// Locate the lowest-numbered block that is not a clique; only reached on
/// the error path, so this may re-derive per-block edge counts.
fn first_incomplete_block(g: &Graph, d: &FlatBlocks) -> Vec<usize> {
    let mut stamp = vec![usize::MAX; g.n()];
    for b in 0..d.count() {
        let members = d.verts(b);
        for &v in members {
            stamp[v as usize] = b;
        }
        let mut ends = 0;
        for &v in members {
            ends += g.neighbors(v as usize).iter().filter(|&&u| stamp[u as usize] == b).count();
        }
        let k = members.len();
        if ends / 2 != k * (k - 1) / 2 {
            return widen(members);
        }
    }
    unreachable!("a block fell short of its clique edge total");
}

fn derive_f(g: &Graph, beo: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = g.n();
    let mut f = vec![0u32; n];
    for v in 0..n {
        f[v] = g
            .neighbors(v)
            .iter()
            .copied()
            .max_by_key(|&u| rank[u as usize])
            .unwrap_or(v as u32);
    }
    if n > 0 {
        let last = beo[n - 1] as usize;
        f[last] = last as u32;
    }
    f
}

/// Compute a canonical elimination ordering by peeling end blocks.
/// Ties pick the end block with the smallest vertex id; within a block,
/// vertices are emitted ascending.
pub fn compute_beo(g: &Graph) -> Result<BlockOrder, BlockError> {
    let n = g.n();
    if n == 0 {
        return Err(BlockError::Disconnected);
    }
    if n == 1 {
        return Ok(BlockOrder { beo: vec![0], f: vec![0], rank: vec![0] });
    }
    let probe = std::env::var_os("BEO_PHASES").is_some();
    let mut t0 = std::time::Instant::now();
    let mut lap = |label: &str| {
        if probe {
            eprintln!("{label} {:.3}ms", t0.elapsed().as_secs_f64() * 1e3);
        }
        t0 = std::time::Instant::now();
    };
    let d = decompose_flat(g)?;
    lap("dfs");
    let nb = d.count();
    // every block must induce a clique. Each edge lies in exactly one block
    // and a block on k vertices holds at most k(k-1)/2 of them, so the
    // clique totals match m exactly when no block falls short.
    let clique_total: u64 = (0..nb)
        .map(|b| {
            let k = d.verts(b).len() as u64;
            k * (k - 1) / 2
        })
        .sum();
    if clique_total != g.m() as u64 {
        return Err(BlockError::NotBlockGraph(first_incomplete_block(g, &d)));
    }
    lap("clique");

    let mut alive = nb;
    let mut live = vec![!0u64; nb / 64 + 1];
    // per cut vertex: alive-block count << 32 | XOR of alive block ids; when
    // the count hits 1, the low half is exactly the surviving block
    let mut stat = vec![0u64; n];
    crate::mem::hugepage(&stat);
    // per block, the same trick over its remaining cut members: when a
    // block's count hits 1 it is an end block, and the low half names the
    // one cut vertex the peel must keep
    let mut block_stat = vec![0u64; nb];
    crate::mem::hugepage(&block_stat);
    for b in 0..nb {
        let mut bc = 0u64;
        for &x in d.verts(b) {
            if bit(&d.cut, x as usize) {
                bc = (bc + (1 << 32)) ^ x as u64;
                stat[x as usize] = (stat[x as usize] + (1 << 32)) ^ b as u64;
            }
        }
        block_stat[b] = bc;
    }
    lap("build");

    // key: (min vid of the block) << 32 | block, so u64 order is lex order
    let mut heap = MinHeap8::with_capacity(nb);
    for b in 0..nb {
        if block_stat[b] >> 32 == 1 {
            heap.push((d.verts(b)[0] as u64) << 32 | b as u64);
        }
    }
    lap("seed");

    let mut beo: Vec<u32> = Vec::with_capacity(n);
    crate::mem::hugepage(&beo);
    // rank and f fall out of the peel: an emitted vertex's rank is its beo
    // position, and every neighbor of it outside the pop is already gone, so
    // its latest-ranked neighbor is exactly the block's surviving cut vertex.
    // Both ride in the vertex's stat slot — dead once it leaves, and its
    // cache line is hot from the scan that just read it — as rank << 32 | f.
    // a freshly created end block very often comes up next; when its key is
    // already at or below the heap top it waits here instead, skipping a
    // full sift down and back up. Invariant: stash ≤ every key in the heap.
    let mut stash: Option<u64> = None;
    while alive > 1 {
        let popped = match stash.take() {
            Some(k) => k,
            None => {
                heap.pop().expect("an end block exists while two or more blocks remain")
            }
        };
        let b = (popped & u32::MAX as u64) as usize;
        if !bit(&live, b) {
            continue;
        }
        // warm the next pop's slots while this one works; a push below may
        // change the top, which only wastes the hint
        if let Some(nk) = heap.peek() {
            let b2 = (nk & u32::MAX as u64) as usize;
            prefetch(&block_stat[b2]);
            prefetch(&d.block_off[b2]);
        }
        debug_assert_eq!(block_stat[b] >> 32, 1);
        let x = (block_stat[b] & u32::MAX as u64) as u32;
        for &v in d.verts(b) {
            if v != x {
                stat[v as usize] = (beo.len() as u64) << 32 | x as u64;
                beo.push(v);
            }
        }
        clear_bit(&mut live, b);
        alive -= 1;
        let s = (stat[x as usize] - (1 << 32)) ^ b as u64;
        stat[x as usize] = s;
        if s >> 32 == 1 {
            // x stopped being a cut vertex: strike it off its last block
            let b2 = (s & u32::MAX as u64) as usize;
            debug_assert!(bit(&live, b2));
            block_stat[b2] = (block_stat[b2] - (1 << 32)) ^ x as u64;
            if block_stat[b2] >> 32 == 1 {
                let nk = (d.verts(b2)[0] as u64) << 32 | b2 as u64;
                match stash {
                    Some(held) if nk < held => {
                        heap.push(held);
                        stash = Some(nk);
                    }
                    Some(_) => heap.push(nk),
                    None if heap.peek().is_none_or(|t| nk < t) => stash = Some(nk),
                    None => heap.push(nk),
                }
            }
        }
    }
    lap("peel");
    let last = (0..nb).find(|&b| bit(&live, b)).expect("one block remains");
    let members = d.verts(last);
    // in the final clique ranks ascend with vertex id, so everything points
    // at the top member, which in turn maps to itself
    let top = *members.last().expect("the final block is nonempty");
    for &v in members {
        stat[v as usize] = (beo.len() as u64) << 32 | top as u64;
        beo.push(v);
    }
    debug_assert_eq!(beo.len(), n);

    // unpack rank and f from the recycled slots
    let mut rank = vec![0u32; n];
    let mut f = vec![0u32; n];
    crate::mem::hugepage(&rank);
    crate::mem::hugepage(&f);
    for v in 0..n {
        rank[v] = (stat[v] >> 32) as u32;
        f[v] = (stat[v] & u32::MAX as u64) as u32;
    }
    lap("unpack");
    Ok(BlockOrder { beo, f, rank })
}

/// Check the elimination property directly: for every vertex, its
/// later-ranked neighbors must form a clique. Quadratic in degrees; meant
/// for tests and small graphs.
pub fn verify_beo(g: &Graph, ordering: &[u32]) -> bool {
    let n = g.n();
    if ordering.len() != n {
        return false;
    }
    let mut rank = vec![u32::MAX; n];
    for (i, &v) in ordering.iter().enumerate() {
        if v as usize >= n || rank[v as usize] != u32::MAX {
            return false;
        }
        rank[v as usize] = i as u32;
    }
    for v in 0..n {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&u| u as usize)
            .filter(|&u| rank[u] > rank[v])
            .collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if !g.has_edge(a, b) {
                    return false;
                }
            }
        }
    }
    true
}

/// The tree on {v, F(v)} edges, rooted at the last vertex of the ordering.
#[derive(Debug, Clone)]
pub struct BlockTree {
    pub root: usize,
    /// parent[root] == root.
    pub parent: Vec<u32>,
    pub level: Vec<u32>,
    /// Reverse BFS order of the tree; the solver processes vertices in this
    /// sequence, deepest levels first, root last.
    pub order: Vec<u32>,
    // children grouped behind flat offsets (u32: these passes scatter)
    child_off: Vec<u32>,
    child_list: Vec<u32>,
}

impl BlockTree {
    /// Children of v in the tree, ascending.
    pub fn children(&self, v: usize) -> &[u32] {
        &self.child_list[self.child_off[v] as usize..self.child_off[v + 1] as usize]
    }

    /// One line per vertex: `v parent(v) level(v)`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for v in 0..self.parent.len() {
            out.push_str(&format!("{v} {} {}\n", self.parent[v], self.level[v]));
        }
        out
    }
}

pub fn build_block_tree(g: &Graph, o: &BlockOrder) -> Result<BlockTree, BlockError> {
    build_tree(g, o, true)
}

/// `check_edges` runs the F(v)-adjacency validation. The solve pipeline
/// passes orderings it has just derived from the adjacency itself, so it
/// skips the check outside debug builds.
pub(crate) fn build_tree(
    g: &Graph,
    o: &BlockOrder,
    check_edges: bool,
) -> Result<BlockTree, BlockError> {
    let n = g.n();
    if o.beo.len() != n || n == 0 {
        return Err(BlockError::BadOrdering("ordering length mismatch".into()));
    }
    let root = o.beo[n - 1] as usize;
    let mut parent = o.f.clone();
    crate::mem::hugepage(&parent);
    parent[root] = root as u32;
    let mut child_off = vec![0u32; n + 1];
    crate::mem::hugepage(&child_off);
    for v in 0..n {
        if v != root {
            let p = parent[v] as usize;
            if check_edges && !g.has_edge(v, p) {
                return Err(BlockError::BadOrdering(format!(
                    "F({v}) = {p} is not a neighbor of {v}"
                )));
            }
            child_off[p + 1] += 1;
        }
    }
    for v in 0..n {
        child_off[v + 1] += child_off[v];
    }
    let mut cursor = child_off[..n].to_vec();
    let mut child_list = vec![0u32; n - 1];
    crate::mem::hugepage(&child_list);
    for v in 0..n {
        // ascending v keeps every child list ascending
        if v != root {
            let p = parent[v] as usize;
            child_list[cursor[p] as usize] = v as u32;
            cursor[p] += 1;
        }
    }
    let mut level = vec![u32::MAX; n];
    crate::mem::hugepage(&level);
    let mut bfs: Vec<u32> = Vec::with_capacity(n);
    crate::mem::hugepage(&bfs);
    bfs.push(root as u32);
    level[root] = 0;
    let mut head = 0;
    while head < bfs.len() {
        let v = bfs[head] as usize;
        head += 1;
        for &c in &child_list[child_off[v] as usize..child_off[v + 1] as usize] {
            level[c as usize] = level[v] + 1;
            bfs.push(c);
        }
    }
    if bfs.len() != n {
        return Err(BlockError::BadOrdering("F edges do not span the graph".into()));
    }
    bfs.reverse();
    Ok(BlockTree { root, parent, level, order: bfs, child_off, child_list })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::build(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn decompose_path_into_bridges() {
        let d = decompose(&Graph::path(4)).unwrap();
        assert_eq!(d.blocks.len(), 3);
        assert!(d.blocks.iter().all(|b| b.vertices.len() == 2 && b.edge_count == 1));
        assert_eq!(d.cut_vertices(), vec![1, 2]);
    }

    #[test]
    fn decompose_complete_graph_is_one_block() {
        let d = decompose(&Graph::complete(4)).unwrap();
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0].vertices, vec![0, 1, 2, 3]);
        assert_eq!(d.blocks[0].edge_count, 6);
        assert!(d.cut_vertices().is_empty());
    }

    #[test]
    fn decompose_bowtie() {
        let d = decompose(&bowtie()).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices(), vec![2]);
        assert!(d.blocks.iter().all(Block::is_clique));
    }

    #[test]
    fn decompose_rejects_disconnected() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(decompose(&g), Err(BlockError::Disconnected)));
    }

    #[test]
    fn block_graph_recognition() {
        assert!(is_block_graph(&Graph::path(6)));
        assert!(is_block_graph(&Graph::complete(5)));
        assert!(is_block_graph(&bowtie()));
        assert!(!is_block_graph(&Graph::cycle(4)));
        assert!(!is_block_graph(&Graph::build(2, &[]).unwrap()));
    }

    #[test]
    fn beo_of_path3() {
        let o = compute_beo(&Graph::path(3)).unwrap();
        assert_eq!(o.beo, vec![0, 1, 2]);
        assert_eq!(o.f, vec![1, 2, 2]);
        assert_eq!(o.rank, vec![0, 1, 2]);
        assert!(verify_beo(&Graph::path(3), &o.beo));
    }

    #[test]
    fn beo_of_bowtie() {
        let g = bowtie();
        let o = compute_beo(&g).unwrap();
        assert_eq!(o.beo, vec![0, 1, 2, 3, 4]);
        assert_eq!(o.f, vec![2, 2, 4, 4, 4]);
        assert!(verify_beo(&g, &o.beo));
    }

    #[test]
    fn beo_rejects_non_block_graph() {
        assert!(matches!(compute_beo(&Graph::cycle(4)), Err(BlockError::NotBlockGraph(_))));
    }

    #[test]
    fn verify_beo_rejects_bad_order() {
        // middle vertex first: its two later neighbors are non-adjacent
        assert!(!verify_beo(&Graph::path(3), &[1, 0, 2]));
        assert!(!verify_beo(&Graph::path(3), &[0, 0, 2]));
        // any order works on a clique
        assert!(verify_beo(&Graph::complete(4), &[2, 0, 3, 1]));
    }

    #[test]
    fn tree_of_star() {
        let g = Graph::star(3);
        let o = compute_beo(&g).unwrap();
        assert_eq!(o.beo, vec![1, 2, 0, 3]);
        let t = build_block_tree(&g, &o).unwrap();
        assert_eq!(t.root, 3);
        assert_eq!(t.parent, vec![3, 0, 0, 3]);
        assert_eq!(t.level, vec![1, 2, 2, 0]);
        assert_eq!(t.order, vec![2, 1, 0, 3]);
        assert!(verify_beo(&g, &t.order));
        assert_eq!(t.dump(), "0 3 1\n1 0 2\n2 0 2\n3 3 0\n");
    }

    #[test]
    fn tree_of_bowtie_reverses_bfs() {
        let g = bowtie();
        let t = build_block_tree(&g, &compute_beo(&g).unwrap()).unwrap();
        assert_eq!(t.root, 4);
        assert_eq!(t.order, vec![1, 0, 3, 2, 4]);
        assert!(verify_beo(&g, &t.order));
    }

    #[test]
    fn from_permutation_checks_shape() {
        let g = Graph::path(3);
        let o = BlockOrder::from_permutation(&g, vec![2, 1, 0]).unwrap();
        assert_eq!(o.f, vec![0, 0, 1]);
        assert!(BlockOrder::from_permutation(&g, vec![0, 0, 1]).is_err());
        assert!(BlockOrder::from_permutation(&g, vec![0, 1]).is_err());
    }
}
