//! Simple undirected graphs on up to [`MAX_ORDER`] vertices, stored as one
//! packed bit row per vertex.
//!
//! Row `v` holds the closed-out neighbourhood bitmask of `v` (bit `u` set iff
//! `u ~ v`), so adjacency tests, degree counts and neighbourhood intersections
//! are word operations. All structural queries here are deliberately plain
//! BFS-based routines; the orders this crate works at never justify anything
//! fancier.

use std::fmt;

/// Hard upper bound on the number of vertices.
pub const MAX_ORDER: usize = 512;

const WORD_BITS: usize = 64;

/// An undirected edge with its endpoints held in sorted order.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EdgeRef {
    u: usize,
    v: usize,
}

impl EdgeRef {
    /// Builds the edge `{a, b}`. Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> EdgeRef {
        assert!(a != b, "loops are not representable");
        if a < b {
            EdgeRef { u: a, v: b }
        } else {
            EdgeRef { u: b, v: a }
        }
    }

    /// The endpoints `(u, v)` with `u < v`.
    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

/// Errors from [`Graph::p4_expand`].
#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExpandError {
    #[error("{{{0}, {1}}} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("expanded order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderOverflow(usize),
}

/// A simple undirected graph with adjacency stored as packed bit rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. Panics unless `1 <= n <= MAX_ORDER`.
    pub fn empty(n: usize) -> Graph {
        assert!(n >= 1 && n <= MAX_ORDER, "order {n} out of range");
        let words = n.div_ceil(WORD_BITS);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The path on `n` vertices, `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Adds the edge `{u, v}`. Panics on loops or out-of-range endpoints.
    /// Adding an edge twice is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not representable");
        assert!(u < self.n && v < self.n, "endpoint out of range");
        self.bits[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.bits[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    /// True iff `{u, v}` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// The adjacency bit row of `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Largest vertex degree.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Smallest vertex degree.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Total number of edges.
    pub fn edge_count(&self) -> usize {
        let twice: usize = (0..self.n).map(|v| self.degree(v)).sum();
        twice / 2
    }

    /// Iterates over the neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.row(v);
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * WORD_BITS;
            BitIter { word: w }.map(move |b| base + b)
        })
    }

    /// Iterates over all edges with endpoints in sorted order, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| EdgeRef::new(u, v))
        })
    }

    /// True iff the graph has one connected component.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut queue = Vec::with_capacity(self.n);
        let mut components = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            queue.clear();
            queue.push(s);
            while let Some(u) = queue.pop() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
        }
        components
    }

    /// True iff the graph admits a proper 2-colouring.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = Vec::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.clear();
            queue.push(s);
            while let Some(u) = queue.pop() {
                for w in self.neighbors(u) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff the graph is connected with maximum degree at most three.
    pub fn is_chemical(&self) -> bool {
        self.max_degree() <= 3 && self.is_connected()
    }

    /// Length of a shortest cycle, or `None` for a forest.
    ///
    /// One BFS per start vertex; an edge closing between two BFS branches
    /// bounds the shortest cycle through the start, and the minimum over all
    /// starts is exact.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..self.n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Length of a shortest cycle passing through `v`, or `None` if every
    /// cycle avoids `v`.
    ///
    /// Minimises `dist(a, b) + 2` over neighbour pairs `a != b` of `v`, with
    /// distances taken in the graph with `v` removed.
    pub fn shortest_cycle_through(&self, v: usize) -> Option<usize> {
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        if nbrs.len() < 2 {
            return None;
        }
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for (i, &a) in nbrs.iter().enumerate() {
            dist.fill(usize::MAX);
            dist[a] = 0;
            queue.clear();
            queue.push_back(a);
            while let Some(u) = queue.pop_front() {
                if dist[u] + 3 >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if w != v && dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &b in &nbrs[i + 1..] {
                if dist[b] != usize::MAX {
                    best = best.min(dist[b] + 2);
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// The graph with vertex `v` removed. Vertices above `v` shift down by
    /// one, so labels stay contiguous. Panics if `v` is out of range or the
    /// graph has a single vertex.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n, "vertex out of range");
        assert!(self.n > 1, "cannot delete the last vertex");
        let mut g = Graph::empty(self.n - 1);
        let shift = |x: usize| if x > v { x - 1 } else { x };
        for e in self.edges() {
            let (a, b) = e.endpoints();
            if a != v && b != v {
                g.add_edge(shift(a), shift(b));
            }
        }
        g
    }

    /// The graph extended by one vertex (index `n`) adjacent to the vertices
    /// set in `mask`, a bitmask over `0..n` with `row_words()` words.
    pub fn with_appended_vertex(&self, mask: &[u64]) -> Graph {
        assert_eq!(mask.len(), self.words, "mask width mismatch");
        let mut g = Graph::empty(self.n + 1);
        for v in 0..self.n {
            let (src, dst) = (
                &self.bits[v * self.words..(v + 1) * self.words],
                &mut g.bits[v * g.words..],
            );
            dst[..self.words].copy_from_slice(src);
        }
        let new = self.n;
        for (wi, &w) in mask.iter().enumerate() {
            let mut bitset = w;
            while bitset != 0 {
                let b = bitset.trailing_zeros() as usize;
                bitset &= bitset - 1;
                g.add_edge(new, wi * WORD_BITS + b);
            }
        }
        g
    }

    /// The graph with vertex `v` renamed to `perm[v]` for every vertex.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph::empty(self.n);
        for e in self.edges() {
            let (u, v) = e.endpoints();
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Replaces the edge `{u, v}` by the six-edge path `u - a - b - c - d - v`
    /// through four fresh vertices appended at indices `n..n+4`.
    pub fn p4_expand(&self, u: usize, v: usize) -> Result<Graph, ExpandError> {
        if u >= self.n || v >= self.n || u == v || !self.has_edge(u, v) {
            return Err(ExpandError::NotAnEdge(u, v));
        }
        if self.n + 4 > MAX_ORDER {
            return Err(ExpandError::OrderOverflow(self.n + 4));
        }
        let n = self.n;
        let mut g = Graph::empty(n + 4);
        for e in self.edges() {
            let (a, b) = e.endpoints();
            if (a, b) != (u.min(v), u.max(v)) {
                g.add_edge(a, b);
            }
        }
        g.add_edge(u, n);
        g.add_edge(n, n + 1);
        g.add_edge(n + 1, n + 2);
        g.add_edge(n + 2, n + 3);
        g.add_edge(n + 3, v);
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            let (u, v) = e.endpoints();
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}
