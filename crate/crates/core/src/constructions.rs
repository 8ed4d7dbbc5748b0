//! Graph constructions with documented, deterministic vertex layouts.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A pattern graph with a distinguished root vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedPattern {
    pattern: Graph,
    root: usize,
}

impl RootedPattern {
    /// Rejects the null pattern and out-of-range roots. Connectivity is not
    /// required here; callers relying on it check it.
    pub fn new(pattern: Graph, root: usize) -> Result<Self> {
        if pattern.is_null() {
            return Err(Error::NullGraph);
        }
        if root >= pattern.order() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                order: pattern.order(),
            });
        }
        Ok(RootedPattern { pattern, root })
    }

    pub fn pattern(&self) -> &Graph {
        &self.pattern
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Pattern vertices with the root first, then the rest in increasing order.
    fn ranked(&self) -> Vec<usize> {
        core::iter::once(self.root)
            .chain((0..self.pattern.order()).filter(|&w| w != self.root))
            .collect()
    }
}

/// `C(G, F)`: every vertex of `G` becomes the root of its own copy of `F`.
///
/// Layout: pattern vertex `w` of copy `i` is `i * k + rank(w)`, where the
/// root has rank 0 and the other pattern vertices follow in increasing
/// order. Vertex `i` of `G` is therefore `i * k`.
pub fn attach_rooted_copies(g: &Graph, rooted: &RootedPattern) -> Result<Graph> {
    if g.is_null() {
        return Err(Error::NullGraph);
    }
    let k = rooted.pattern.order();
    let ranked = rooted.ranked();
    let mut rank = alloc::vec![0; k];
    for (r, &w) in ranked.iter().enumerate() {
        rank[w] = r;
    }
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u * k, v * k)).collect();
    for i in 0..g.order() {
        edges.extend(rooted.pattern.edges().map(|(a, b)| (i * k + rank[a], i * k + rank[b])));
    }
    Graph::new(g.order() * k, edges)
}

/// `G □ F` with `(v, w)` laid out as `v * |V(F)| + w`.
pub fn cartesian_product(g: &Graph, f: &Graph) -> Result<Graph> {
    if g.is_null() || f.is_null() {
        return Err(Error::NullGraph);
    }
    let k = f.order();
    let mut edges = Vec::with_capacity(g.order() * f.size() + k * g.size());
    for v in 0..g.order() {
        edges.extend(f.edges().map(|(a, b)| (v * k + a, v * k + b)));
    }
    for (u, v) in g.edges() {
        edges.extend((0..k).map(|w| (u * k + w, v * k + w)));
    }
    Graph::new(g.order() * k, edges)
}

/// `S_h(G)`: every edge replaced by a path with `h` new internal vertices.
///
/// Original vertices keep their indices. Edges are processed in
/// lexicographic order `(u, v)`, `u < v`, and each contributes `h` new
/// vertices numbered consecutively from the `u` end.
pub fn subdivide(g: &Graph, h: usize) -> Graph {
    let n = g.order();
    let mut next = n;
    let mut edges = Vec::with_capacity((h + 1) * g.size());
    for (u, v) in g.edges() {
        let mut prev = u;
        for _ in 0..h {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::new(next, edges).expect("subdivision edges are valid")
}

fn check_positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::invalid(alloc::format!("{name} must be at least 1")));
    }
    Ok(())
}

fn push_clique(edges: &mut Vec<(usize, usize)>, first: usize, size: usize) {
    for a in first..first + size {
        edges.extend((a + 1..first + size).map(|b| (a, b)));
    }
}

/// The graph on which `ι(G, tK_k) = ι(G, K_k) = γ(G) = q`.
///
/// A path `v_1 … v_q`; each `v_i` has a pendant edge to a vertex `w_i` of
/// its own copy of `K_{tk}`. Layout: block `i` (0-based) occupies
/// `i * (tk + 1) ..`, with `v_i` first, then the clique, whose first vertex
/// is `w_i`. Order `q(tk + 1)`.
pub fn extremal_path_of_cliques(k: usize, q: usize, t: usize) -> Result<Graph> {
    check_positive("k", k)?;
    check_positive("q", q)?;
    check_positive("t", t)?;
    let block = t * k + 1;
    let mut edges = Vec::new();
    for i in 0..q {
        let v = i * block;
        if i > 0 {
            edges.push((v - block, v));
        }
        edges.push((v, v + 1));
        push_clique(&mut edges, v + 1, t * k);
    }
    Graph::new(q * block, edges)
}

/// The graph on which `ι(H, tK_k) = q` while `ι(H, K_k) = γ(H) = q + t - 1`.
///
/// The first `q - 1` blocks are those of [`extremal_path_of_cliques`]. Then
/// comes `v_q` (adjacent to `v_{q-1}` when `q > 1`), followed by the cliques
/// `H_1` of order `k` and `H_2, …, H_t` of order `k + 1`, each joined to
/// `v_q` through its first vertex `x_i`. Order
/// `(q - 1)(tk + 1) + 1 + k + (t - 1)(k + 1)`.
pub fn extremal_h(k: usize, q: usize, t: usize) -> Result<Graph> {
    check_positive("k", k)?;
    check_positive("q", q)?;
    check_positive("t", t)?;
    let block = t * k + 1;
    let mut edges = Vec::new();
    for i in 0..q - 1 {
        let v = i * block;
        if i > 0 {
            edges.push((v - block, v));
        }
        edges.push((v, v + 1));
        push_clique(&mut edges, v + 1, t * k);
    }
    let hub = (q - 1) * block;
    if q > 1 {
        edges.push((hub - block, hub));
    }
    let mut next = hub + 1;
    for i in 0..t {
        let size = if i == 0 { k } else { k + 1 };
        edges.push((hub, next));
        push_clique(&mut edges, next, size);
        next += size;
    }
    Graph::new(next, edges)
}
