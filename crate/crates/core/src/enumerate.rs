//! Exhaustive enumeration of small graphs up to isomorphism, plus graph6
//! encoding for naming instances.
//!
//! Graphs on `n` vertices are generated by adding a vertex with every
//! possible neighbourhood to each graph on `n - 1` vertices and keeping one
//! representative per canonical form. The canonical form is the smallest
//! upper-triangle adjacency code over all labellings that list vertices by
//! non-decreasing (degree, sorted neighbour degrees) signature.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`all_graphs`]; the adjacency code must fit in 64 bits.
pub const MAX_ENUMERATION_ORDER: usize = 11;

/// Bit index of the pair `{i, j}`, `i < j`, in the upper-triangle code.
fn pair_bit(i: usize, j: usize) -> u32 {
    (j * (j - 1) / 2 + i) as u32
}

fn code_under(g: &Graph, labelling: &[usize]) -> u64 {
    // labelling[new] = old
    let n = labelling.len();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(labelling[i], labelling[j]) {
                code |= 1 << pair_bit(i, j);
            }
        }
    }
    code
}

/// Canonical adjacency code of a graph with at most
/// [`MAX_ENUMERATION_ORDER`] vertices. Two graphs of the same order are
/// isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::invalid(alloc::format!(
            "canonical codes need at most {MAX_ENUMERATION_ORDER} vertices, got {n}"
        )));
    }
    let signature = |v: usize| {
        let mut nbr: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
        nbr.sort_unstable();
        (g.degree(v), nbr)
    };
    let mut cells: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(signature(v)).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut labelling = Vec::with_capacity(n);
    let mut best = u64::MAX;
    permute_cells(g, &cells, 0, &mut labelling, &mut best);
    Ok(if n == 0 { 0 } else { best })
}

fn permute_cells(g: &Graph, cells: &[Vec<usize>], cell: usize, labelling: &mut Vec<usize>, best: &mut u64) {
    if cell == cells.len() {
        *best = (*best).min(code_under(g, labelling));
        return;
    }
    let mut members = cells[cell].clone();
    permute_within(g, cells, cell, &mut members, 0, labelling, best);
}

fn permute_within(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    members: &mut [usize],
    fixed: usize,
    labelling: &mut Vec<usize>,
    best: &mut u64,
) {
    if fixed == members.len() {
        let before = labelling.len();
        labelling.extend_from_slice(members);
        permute_cells(g, cells, cell + 1, labelling, best);
        labelling.truncate(before);
        return;
    }
    for i in fixed..members.len() {
        members.swap(fixed, i);
        permute_within(g, cells, cell, members, fixed + 1, labelling, best);
        members.swap(fixed, i);
    }
}

fn decode(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("decoded edges are valid")
}

/// One representative of every isomorphism class of graphs on
/// `1..=max_order` vertices, ordered by order and then canonical code.
pub fn all_graphs(max_order: usize) -> Result<Vec<Graph>> {
    if max_order > MAX_ENUMERATION_ORDER {
        return Err(Error::invalid(alloc::format!(
            "enumeration is limited to {MAX_ENUMERATION_ORDER} vertices"
        )));
    }
    let mut out = Vec::new();
    let mut layer: Vec<Graph> = if max_order >= 1 { vec![Graph::empty(1)] } else { Vec::new() };
    for n in 1..=max_order {
        if n > 1 {
            let mut next: BTreeMap<u64, ()> = BTreeMap::new();
            for g in &layer {
                for mask in 0u64..(1 << (n - 1)) {
                    let edges = g
                        .edges()
                        .chain((0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
                    let bigger = Graph::new(n, edges).expect("valid extension");
                    next.insert(canonical_code(&bigger)?, ());
                }
            }
            layer = next.into_keys().map(|code| decode(n, code)).collect();
        }
        out.extend(layer.iter().cloned());
    }
    Ok(out)
}

/// Connected members of [`all_graphs`].
pub fn connected_graphs(max_order: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(max_order)?.into_iter().filter(Graph::is_connected).collect())
}

/// graph6 encoding (orders up to 62).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > 62 {
        return Err(Error::unsupported("graph6 names are only produced for orders up to 62"));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                value |= 1 << (5 - k);
            }
        }
        out.push((value + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generator_graph, GeneratorKind};

    #[test]
    fn canonical_codes_identify_isomorphic_graphs() {
        let c5 = generator_graph(GeneratorKind::Cycle, 5).unwrap();
        let pentagram = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&c5).unwrap(), canonical_code(&pentagram).unwrap());
        let p5 = generator_graph(GeneratorKind::Path, 5).unwrap();
        assert_ne!(canonical_code(&c5).unwrap(), canonical_code(&p5).unwrap());
    }

    #[test]
    fn counts_of_small_graphs() {
        // numbers of graphs and connected graphs on 1..=6 vertices
        let graphs = all_graphs(6).unwrap();
        let by_order = |gs: &[Graph], n| gs.iter().filter(|g| g.order() == n).count();
        let totals: Vec<usize> = (1..=6).map(|n| by_order(&graphs, n)).collect();
        assert_eq!(totals, vec![1, 2, 4, 11, 34, 156]);
        let connected = connected_graphs(6).unwrap();
        let conn: Vec<usize> = (1..=6).map(|n| by_order(&connected, n)).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn graph6_names() {
        // standard graph6 strings
        assert_eq!(to_graph6(&generator_graph(GeneratorKind::Clique, 3).unwrap()).unwrap(), "Bw");
        assert_eq!(to_graph6(&generator_graph(GeneratorKind::Cycle, 5).unwrap()).unwrap(), "Dhc");
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
    }
}
