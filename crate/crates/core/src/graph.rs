//! Simple undirected graphs on vertices `0..n` and vertex subsets.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(order: usize) -> usize {
    order.div_ceil(WORD)
}

/// A subset of the vertices of a graph of a fixed order, stored as a bitset.
///
/// Iteration is always in increasing vertex order. Sets compare by their
/// sorted member sequence, so the derived "smallest" witness of a solver is
/// the lexicographically smallest one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    order: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty subset of a graph of order `order`.
    pub fn empty(order: usize) -> Self {
        VertexSet {
            order,
            words: vec![0; words_for(order)],
        }
    }

    /// All vertices `0..order`.
    pub fn full(order: usize) -> Self {
        let mut set = Self::empty(order);
        for (i, w) in set.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(order);
            *w = if hi - lo == WORD {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        set
    }

    /// Builds a set from members, rejecting vertices `>= order`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(order: usize, vertices: I) -> Result<Self> {
        let mut set = Self::empty(order);
        for v in vertices {
            if v >= order {
                return Err(Error::VertexOutOfRange { vertex: v, order });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// The order of the graph this set indexes into.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.order && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`. Panics if `v` is out of range.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.order, "vertex {v} out of range 0..{}", self.order);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.order {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Members<'_> {
        Members {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_same_order(&self, other: &VertexSet) {
        debug_assert_eq!(self.order, other.order, "vertex sets of different orders");
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_same_order(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_same_order(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_same_order(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// Size of `self ∩ other` without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Complement within `0..order`.
    pub fn complement(&self) -> VertexSet {
        VertexSet::full(self.order).difference(self)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.iter().cmp(other.iter()).then(self.order.cmp(&other.order))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Members<'a>;

    fn into_iter(self) -> Members<'a> {
        self.iter()
    }
}

/// Iterator over the members of a [`VertexSet`].
pub struct Members<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// A simple undirected graph on the vertices `0..order`.
///
/// The null graph (order 0) is a valid value; operations that are only
/// defined on non-null graphs say so and return [`Error::NullGraph`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    size: usize,
}

/// Minimum and maximum degree of a non-null graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
}

/// An induced subgraph together with the map from its vertices back to the
/// parent graph (`vertex_map[i]` is the parent vertex of vertex `i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertex_map: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps a vertex set of the subgraph back into the parent of order `parent_order`.
    pub fn lift(&self, set: &VertexSet, parent_order: usize) -> VertexSet {
        let mut out = VertexSet::empty(parent_order);
        for v in set {
            out.insert(self.vertex_map[v]);
        }
        out
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        Graph {
            adjacency: vec![VertexSet::empty(order); order],
            size: 0,
        }
    }

    /// The null graph.
    pub fn null() -> Self {
        Graph::empty(0)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if !self.adjacency[u].contains(v) {
            self.adjacency[u].insert(v);
            self.adjacency[v].insert(u);
            self.size += 1;
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_null(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighbourhood of `v`.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn check_indexes(&self, set: &VertexSet) -> Result<()> {
        if set.order() != self.order() {
            return Err(Error::OrderMismatch {
                expected: self.order(),
                found: set.order(),
            });
        }
        Ok(())
    }

    /// `N[v]`.
    pub fn closed_neighborhood_of(&self, v: usize) -> VertexSet {
        let mut out = self.adjacency[v].clone();
        out.insert(v);
        out
    }

    /// `N[D]`: the members of `set` together with all their neighbours.
    pub fn closed_neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        self.check_indexes(set)?;
        Ok(self.closed_neighborhood_unchecked(set))
    }

    pub(crate) fn closed_neighborhood_unchecked(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set {
            out.union_with(&self.adjacency[v]);
        }
        out
    }

    /// `G - N[D]`, relabelled contiguously.
    pub fn remove_closed_neighborhood(&self, set: &VertexSet) -> Result<InducedSubgraph> {
        let keep = self.closed_neighborhood(set)?.complement();
        self.induced(&keep)
    }

    /// The subgraph induced on `set`, relabelled contiguously in increasing
    /// vertex order.
    pub fn induced(&self, set: &VertexSet) -> Result<InducedSubgraph> {
        self.check_indexes(set)?;
        let vertex_map = set.to_vec();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertex_map.iter().enumerate() {
            index[v] = i;
        }
        let mut graph = Graph::empty(vertex_map.len());
        for (i, &v) in vertex_map.iter().enumerate() {
            for w in self.adjacency[v].intersection(set).iter() {
                if w > v {
                    graph.add_edge(i, index[w]);
                }
            }
        }
        Ok(InducedSubgraph { graph, vertex_map })
    }

    /// Connected components restricted to `alive`, each in order of its smallest vertex.
    pub(crate) fn components_within(&self, alive: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.order());
        let mut out = Vec::new();
        for start in alive {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::empty(self.order());
            let mut frontier = VertexSet::empty(self.order());
            frontier.insert(start);
            while !frontier.is_empty() {
                comp.union_with(&frontier);
                let mut next = VertexSet::empty(self.order());
                for v in &frontier {
                    next.union_with(&self.adjacency[v]);
                }
                next.intersect_with(alive);
                next.difference_with(&comp);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// True for graphs with exactly one component. The null graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile> {
        let degrees = (0..self.order()).map(|v| self.degree(v));
        let min_degree = degrees.clone().min().ok_or(Error::NullGraph)?;
        let max_degree = degrees.max().ok_or(Error::NullGraph)?;
        Ok(DegreeProfile {
            min_degree,
            max_degree,
            is_regular: min_degree == max_degree,
        })
    }

    /// `δ(G)`.
    pub fn min_degree(&self) -> Result<usize> {
        Ok(self.degree_profile()?.min_degree)
    }

    /// Two-colourability by BFS. The null graph is bipartite.
    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut colour = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for w in &self.adjacency[v] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// A graph is a forest iff `|E| = |V| - #components`.
    pub fn is_forest(&self) -> bool {
        self.size + self.components().len() == self.order()
    }

    /// Calls `visit` with the vertex sequence of every cycle of `G[alive]`,
    /// each cycle exactly once. Stops early when `visit` returns `false`.
    ///
    /// Each cycle is reported starting at its smallest vertex, in the
    /// direction whose second vertex is smaller than its last.
    pub(crate) fn for_each_cycle<F>(&self, alive: &VertexSet, step_limit: u64, mut visit: F) -> Result<()>
    where
        F: FnMut(&[usize]) -> bool,
    {
        let mut steps = 0u64;
        let mut path = Vec::new();
        let mut on_path = VertexSet::empty(self.order());
        for start in alive {
            let mut allowed = alive.clone();
            for v in 0..start {
                allowed.remove(v);
            }
            path.clear();
            path.push(start);
            on_path.insert(start);
            let keep_going = self.extend_cycles(
                start,
                &allowed,
                &mut path,
                &mut on_path,
                &mut steps,
                step_limit,
                &mut visit,
            )?;
            on_path.remove(start);
            if !keep_going {
                break;
            }
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_cycles<F>(
        &self,
        start: usize,
        allowed: &VertexSet,
        path: &mut Vec<usize>,
        on_path: &mut VertexSet,
        steps: &mut u64,
        step_limit: u64,
        visit: &mut F,
    ) -> Result<bool>
    where
        F: FnMut(&[usize]) -> bool,
    {
        *steps += 1;
        if *steps > step_limit {
            return Err(Error::ResourceExhausted {
                what: "cycle enumeration step",
                limit: step_limit,
            });
        }
        let end = *path.last().expect("path is never empty");
        for w in self.adjacency[end].intersection(allowed).iter() {
            if w == start {
                if path.len() >= 3 && path[1] < end && !visit(path) {
                    return Ok(false);
                }
            } else if !on_path.contains(w) {
                path.push(w);
                on_path.insert(w);
                let keep_going =
                    self.extend_cycles(start, allowed, path, on_path, steps, step_limit, visit)?;
                on_path.remove(w);
                path.pop();
                if !keep_going {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Lengths of all cycles of the graph (as subgraphs). Empty iff the graph
    /// is a forest. Enumeration is exponential in general; at most
    /// `max_cycles` cycles are enumerated before giving up.
    pub fn cycle_lengths(&self, max_cycles: u64) -> Result<BTreeSet<usize>> {
        let mut lengths = BTreeSet::new();
        let mut count = 0u64;
        let mut exceeded = false;
        self.for_each_cycle(&self.vertices(), max_cycles.saturating_mul(64).max(1 << 20), |cycle| {
            count += 1;
            if count > max_cycles {
                exceeded = true;
                return false;
            }
            lengths.insert(cycle.len());
            true
        })?;
        if exceeded {
            return Err(Error::ResourceExhausted {
                what: "enumerated cycle",
                limit: max_cycles,
            });
        }
        Ok(lengths)
    }

    /// Vertex set of a short cycle of `G[alive]`, or `None` if `G[alive]` is
    /// a forest.
    ///
    /// The returned set contains the vertices of a fundamental cycle of a BFS
    /// tree, possibly with a few extra path vertices; it always contains the
    /// vertex set of some cycle.
    pub(crate) fn short_cycle_within(&self, alive: &VertexSet) -> Option<VertexSet> {
        let n = self.order();
        let mut best: Option<VertexSet> = None;
        let mut parent = vec![usize::MAX; n];
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in alive {
            for v in alive {
                dist[v] = usize::MAX;
                parent[v] = usize::MAX;
            }
            dist[s] = 0;
            queue.clear();
            queue.push_back(s);
            let mut found = None;
            'bfs: while let Some(v) = queue.pop_front() {
                for w in self.adjacency[v].intersection(alive).iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        found = Some((v, w));
                        break 'bfs;
                    }
                }
            }
            let Some((a, b)) = found else { continue };
            let mut walk = VertexSet::empty(n);
            for mut x in [a, b] {
                walk.insert(x);
                while parent[x] != usize::MAX {
                    x = parent[x];
                    walk.insert(x);
                }
            }
            if best.as_ref().is_none_or(|cur| walk.len() < cur.len()) {
                best = Some(walk);
            }
        }
        best
    }

    /// True iff `G[alive]` contains a cycle.
    pub(crate) fn has_cycle_within(&self, alive: &VertexSet) -> bool {
        let edges: usize = alive.iter().map(|v| self.adjacency[v].intersection_len(alive)).sum::<usize>() / 2;
        edges + self.components_within(alive).len() > alive.len()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}
