//! Small undirected simple graphs and exhaustive cycle enumeration.
//!
//! Graphs are immutable after construction and capped at 32 vertices, which
//! keeps every analysis here an exhaustive search. Vertices are `usize`
//! indices in `[0, n)`; presentation labels (the 1-based circular labeling,
//! or the derived 12-cycle labeling with off-cycle vertices `v` and `w`) are
//! handled by [`LabelingMap`].

use std::collections::HashMap;
use std::fmt;

use crate::{Error, Result};

/// Internal vertex index, 0-based. Presentation labels live in [`LabelingMap`].
pub type VertexId = usize;

const MAX_VERTICES: usize = 32;

/// An immutable undirected simple graph on at most 32 vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u32>,
    edges: Vec<(VertexId, VertexId)>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Rejects loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edge_list: &[(VertexId, VertexId)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                vertices: n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u32; n];
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a >= n {
                return Err(Error::InvalidVertex {
                    vertex: a,
                    count: n,
                });
            }
            if b >= n {
                return Err(Error::InvalidVertex {
                    vertex: b,
                    count: n,
                });
            }
            if a == b {
                return Err(Error::EdgeList(format!("loop at vertex {a}")));
            }
            if adj[a] >> b & 1 == 1 {
                return Err(Error::EdgeList(format!("duplicate edge {a}-{b}")));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        Ok(SimpleGraph { n, adj, edges })
    }

    /// The Heawood graph on labels 1..14: the circular 14-cycle
    /// 1-2-...-14-1 plus the chord {i, i+5 (mod 14)} for every odd label i.
    pub fn heawood_standard() -> Self {
        let wrap = |label: usize| (label - 1) % 14 + 1;
        let mut edges = Vec::with_capacity(21);
        for label in 1..=14 {
            edges.push((label - 1, wrap(label + 1) - 1));
        }
        for label in (1..=14).step_by(2) {
            edges.push((label - 1, wrap(label + 5) - 1));
        }
        Self::new(14, &edges).expect("heawood edge list is valid")
    }

    /// The cycle graph on n vertices (n >= 3).
    pub fn cycle_graph(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Input(format!(
                "cycle graph needs >= 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    /// The path graph on n vertices.
    pub fn path_graph(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges)
    }

    /// The complete graph on n vertices.
    pub fn complete_graph(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Self::new(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted (min, max) pairs, ascending.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let mask = self.adj[v];
        (0..self.n).filter(move |&u| mask >> u & 1 == 1)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.n {
            return Err(Error::InvalidVertex {
                vertex: v,
                count: self.n,
            });
        }
        Ok(())
    }

    /// Shortest-path distance by breadth-first search; `usize::MAX` is never
    /// returned for connected graphs in scope.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u, u32::MAX)[v])
    }

    /// BFS distances from `start` within the vertex set `allowed` (bitmask);
    /// unreachable vertices get `usize::MAX`.
    fn distances_from(&self, start: VertexId, allowed: u32) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        if allowed >> start & 1 == 0 {
            return dist;
        }
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let mask = self.adj[u] & allowed;
            for w in 0..self.n {
                if mask >> w & 1 == 1 && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True iff the subgraph induced on `allowed` (bitmask) is connected.
    /// Empty and one-vertex sets count as connected.
    fn is_connected_on(&self, allowed: u32) -> bool {
        let total = allowed.count_ones();
        if total <= 1 {
            return true;
        }
        let start = allowed.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let fresh = self.adj[u] & allowed & !seen;
            seen |= fresh;
            for w in 0..self.n {
                if fresh >> w & 1 == 1 {
                    stack.push(w);
                }
            }
        }
        seen.count_ones() == total
    }

    /// True iff no removal of fewer than `k` vertices disconnects the graph,
    /// checked by exhaustive removal of every vertex subset of size < k.
    pub fn vertex_connectivity_at_least(&self, k: usize) -> bool {
        let all = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        let mut subsets: Vec<u32> = vec![0];
        for size in 0..k {
            for subset in std::mem::take(&mut subsets) {
                if !self.is_connected_on(all & !subset) {
                    return false;
                }
                if size + 1 < k {
                    let next_from = 32 - subset.leading_zeros();
                    for v in next_from as usize..self.n {
                        subsets.push(subset | 1 << v);
                    }
                }
            }
        }
        true
    }

    /// Sizes of the connected components of the graph minus the vertex set
    /// `removed`, ascending.
    pub fn removal_component_sizes(&self, removed: &[VertexId]) -> Result<Vec<usize>> {
        let mut mask = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        for &v in removed {
            self.check_vertex(v)?;
            mask &= !(1 << v);
        }
        let mut sizes = Vec::new();
        while mask != 0 {
            let start = mask.trailing_zeros() as usize;
            let mut seen = 1u32 << start;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let fresh = self.adj[u] & mask & !seen;
                seen |= fresh;
                for w in 0..self.n {
                    if fresh >> w & 1 == 1 {
                        stack.push(w);
                    }
                }
            }
            sizes.push(seen.count_ones() as usize);
            mask &= !seen;
        }
        sizes.sort_unstable();
        Ok(sizes)
    }

    /// All simple cycles of length exactly `k`, each once, in canonical form,
    /// sorted ascending.
    pub fn enumerate_cycles(&self, k: usize) -> Result<Vec<Cycle>> {
        let all = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        self.cycles_within(k, all)
    }

    /// All k-cycles containing no vertex of `avoid`, found by searching the
    /// graph with those vertices masked out.
    pub fn cycles_avoiding(&self, k: usize, avoid: &[VertexId]) -> Result<Vec<Cycle>> {
        let mut mask = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        for &v in avoid {
            self.check_vertex(v)?;
            mask &= !(1 << v);
        }
        self.cycles_within(k, mask)
    }

    fn cycles_within(&self, k: usize, allowed: u32) -> Result<Vec<Cycle>> {
        if k < 3 || k > self.n {
            return Err(Error::CycleLength {
                length: k,
                max: self.n,
            });
        }
        let mut found = Vec::new();
        let mut path = Vec::with_capacity(k);
        for start in 0..self.n {
            if allowed >> start & 1 == 0 {
                continue;
            }
            // Cycles are rooted at their least vertex, so the search space
            // for this start is the allowed vertices above it.
            let region = allowed & !((1u32 << start) - 1);
            let dist = self.distances_from(start, region);
            path.push(start);
            self.extend_cycle(
                start,
                start,
                region & !(1 << start),
                k,
                &dist,
                &mut path,
                &mut found,
            );
            path.pop();
        }
        for c in &found {
            debug_assert!(c.is_cycle_of(self));
        }
        found.sort_unstable();
        Ok(found)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_cycle(
        &self,
        start: VertexId,
        current: VertexId,
        free: u32,
        k: usize,
        dist: &[usize],
        path: &mut Vec<VertexId>,
        found: &mut Vec<Cycle>,
    ) {
        if path.len() == k {
            // A full-length path closes into exactly one cycle; emitting only
            // the orientation with path[1] < path[k-1] yields each cycle once,
            // already in canonical form.
            if self.has_edge(current, start) && path[1] < path[k - 1] {
                found.push(Cycle {
                    vertices: path.clone(),
                });
            }
            return;
        }
        let remaining = k - path.len();
        let mask = self.adj[current] & free;
        for next in start + 1..self.n {
            if mask >> next & 1 == 0 {
                continue;
            }
            if dist[next] > remaining {
                continue;
            }
            path.push(next);
            self.extend_cycle(start, next, free & !(1 << next), k, dist, path, found);
            path.pop();
        }
    }

    /// Canonical edge-list text: one `u v` line per edge with 1-based labels,
    /// u < v, sorted.
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        for &(a, b) in &self.edges {
            out.push_str(&format!("{} {}\n", a + 1, b + 1));
        }
        out
    }

    /// Parses the edge-list text format: `u v` per line, 1-based labels.
    /// The vertex count is the largest label seen.
    pub fn from_edge_list_str(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut max_label = 0usize;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                let tok = tok.ok_or_else(|| {
                    Error::EdgeList(format!("line {}: expected two labels", lineno + 1))
                })?;
                let v: usize = tok.parse().map_err(|_| {
                    Error::EdgeList(format!("line {}: bad label {tok:?}", lineno + 1))
                })?;
                if v == 0 {
                    return Err(Error::EdgeList(format!(
                        "line {}: labels are 1-based",
                        lineno + 1
                    )));
                }
                Ok(v)
            };
            let a = parse(parts.next())?;
            let b = parse(parts.next())?;
            if parts.next().is_some() {
                return Err(Error::EdgeList(format!(
                    "line {}: trailing tokens",
                    lineno + 1
                )));
            }
            max_label = max_label.max(a).max(b);
            edges.push((a - 1, b - 1));
        }
        Self::new(max_label, &edges)
    }
}

/// A simple cycle stored in canonical form: the lexicographically least
/// vertex sequence over all rotations and both orientations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    vertices: Vec<VertexId>,
}

impl Cycle {
    /// Canonicalizes an arbitrary traversal of a cycle. Validates that the
    /// vertices are distinct and consecutively adjacent in `g`.
    pub fn from_sequence(g: &SimpleGraph, seq: &[VertexId]) -> Result<Self> {
        if seq.len() < 3 {
            return Err(Error::CycleLength {
                length: seq.len(),
                max: g.vertex_count(),
            });
        }
        let mut seen = 0u64;
        for &v in seq {
            if v >= g.vertex_count() {
                return Err(Error::InvalidVertex {
                    vertex: v,
                    count: g.vertex_count(),
                });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::Input(format!("repeated vertex {v} in cycle")));
            }
            seen |= 1 << v;
        }
        for i in 0..seq.len() {
            let a = seq[i];
            let b = seq[(i + 1) % seq.len()];
            if !g.has_edge(a, b) {
                return Err(Error::Input(format!("cycle step {a}-{b} is not an edge")));
            }
        }
        Ok(Self::canonicalize(seq))
    }

    /// Least sequence over all rotations and both orientations. Does not
    /// consult the graph; callers own the adjacency invariant.
    pub fn canonicalize(seq: &[VertexId]) -> Self {
        let k = seq.len();
        let mut best: Option<Vec<VertexId>> = None;
        let mut candidate = Vec::with_capacity(k);
        for rot in 0..k {
            for dir in [1usize, 0] {
                candidate.clear();
                for i in 0..k {
                    let idx = if dir == 1 {
                        (rot + i) % k
                    } else {
                        (rot + k - i) % k
                    };
                    candidate.push(seq[idx]);
                }
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate.clone());
                }
            }
        }
        Cycle {
            vertices: best.expect("nonempty sequence"),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Canonical vertex sequence.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Image of this cycle under a vertex map, re-canonicalized.
    pub fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Cycle {
        let mapped: Vec<VertexId> = self.vertices.iter().map(|&v| f(v)).collect();
        Self::canonicalize(&mapped)
    }

    fn is_cycle_of(&self, g: &SimpleGraph) -> bool {
        let k = self.vertices.len();
        (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn display<'a>(&'a self, labeling: &'a LabelingMap) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Cycle, &'a LabelingMap);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, &v) in self.0.vertices.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", self.1.label(v))?;
                }
                Ok(())
            }
        }
        D(self, labeling)
    }
}

/// Bijection between internal vertex indices and presentation labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingMap {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl LabelingMap {
    /// Labels "1".."n" for internal vertices 0..n-1 (the circular labeling).
    pub fn figure1(n: usize) -> Self {
        Self::from_labels((1..=n).map(|i| i.to_string()).collect())
            .expect("numeric labels are distinct")
    }

    /// Arbitrary distinct labels, position i naming internal vertex i.
    pub fn from_labels(labels: Vec<String>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::Labeling("empty label".into()));
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::Labeling(format!("duplicate label {label:?}")));
            }
        }
        Ok(LabelingMap { labels, index })
    }

    /// The derived 12-cycle labeling of a 14-vertex graph: the first canonical
    /// 12-cycle is labeled "1".."12" in traversal order and the two off-cycle
    /// vertices become "v" and "w" (ascending by internal index).
    pub fn derived12(g: &SimpleGraph) -> Result<Self> {
        if g.vertex_count() != 14 {
            return Err(Error::Labeling(format!(
                "derived 12-cycle labeling needs 14 vertices, graph has {}",
                g.vertex_count()
            )));
        }
        let cycles = g.enumerate_cycles(12)?;
        let first = cycles
            .first()
            .ok_or_else(|| Error::Labeling("graph has no 12-cycle".into()))?;
        let mut labels = vec![String::new(); 14];
        for (pos, &v) in first.vertices().iter().enumerate() {
            labels[v] = (pos + 1).to_string();
        }
        let mut off = (0..14).filter(|&v| !first.contains(v));
        labels[off.next().expect("two off-cycle vertices")] = "v".into();
        labels[off.next().expect("two off-cycle vertices")] = "w".into();
        Self::from_labels(labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Result<VertexId> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::Labeling(format!("unknown label {label:?}")))
    }
}
