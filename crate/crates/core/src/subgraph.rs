//! Backtracking (non-induced) subgraph matching of a small pattern into a host.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Counts search nodes against a fixed limit.
#[derive(Debug)]
pub(crate) struct Meter {
    pub nodes: u64,
    limit: u64,
}

impl Meter {
    pub fn new(limit: u64) -> Self {
        Meter { nodes: 0, limit }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::ResourceExhausted {
                what: "search node",
                limit: self.limit,
            });
        }
        Ok(())
    }
}

/// Pattern preprocessed for matching: vertices in an order where each
/// vertex has as many earlier neighbours as possible.
pub(crate) struct Matcher<'p> {
    pattern: &'p Graph,
    order: Vec<usize>,
    /// For position `i`, the positions `< i` adjacent to `order[i]`.
    earlier: Vec<Vec<usize>>,
}

impl<'p> Matcher<'p> {
    pub fn new(pattern: &'p Graph) -> Self {
        let n = pattern.order();
        let mut placed = VertexSet::empty(n);
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed.contains(v))
                .max_by_key(|&v| {
                    let back = pattern.neighbors(v).intersection_len(&placed);
                    // ties go to the smallest vertex
                    (back, pattern.degree(v), usize::MAX - v)
                })
                .expect("unplaced vertex exists");
            placed.insert(next);
            order.push(next);
        }
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let earlier = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                pattern
                    .neighbors(v)
                    .iter()
                    .map(|w| position[w])
                    .filter(|&p| p < i)
                    .collect()
            })
            .collect();
        Matcher {
            pattern,
            order,
            earlier,
        }
    }

    /// Visits injective maps `pattern -> host[alive]` preserving adjacency.
    /// `visit` receives the images indexed by pattern vertex and returns
    /// `false` to stop. Returns whether the search ran to completion.
    pub fn for_each<F>(&self, host: &Graph, alive: &VertexSet, meter: &mut Meter, mut visit: F) -> Result<bool>
    where
        F: FnMut(&[usize]) -> bool,
    {
        let k = self.order.len();
        if k > alive.len() {
            return Ok(true);
        }
        let pattern_edges = self.pattern.size();
        let host_edges: usize =
            alive.iter().map(|v| host.neighbors(v).intersection_len(alive)).sum::<usize>() / 2;
        if pattern_edges > host_edges {
            return Ok(true);
        }
        let mut images = vec![usize::MAX; k];
        let mut used = VertexSet::empty(host.order());
        self.extend(host, alive, 0, &mut images, &mut used, meter, &mut visit)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend<F>(
        &self,
        host: &Graph,
        alive: &VertexSet,
        depth: usize,
        images: &mut [usize],
        used: &mut VertexSet,
        meter: &mut Meter,
        visit: &mut F,
    ) -> Result<bool>
    where
        F: FnMut(&[usize]) -> bool,
    {
        meter.tick()?;
        if depth == self.order.len() {
            let mut by_vertex = vec![0; images.len()];
            for (i, &v) in self.order.iter().enumerate() {
                by_vertex[v] = images[i];
            }
            return Ok(visit(&by_vertex));
        }
        let pv = self.order[depth];
        let mut candidates = alive.difference(used);
        for &p in &self.earlier[depth] {
            candidates.intersect_with(host.neighbors(images[p]));
        }
        let need = self.pattern.degree(pv);
        for c in candidates.iter() {
            if host.neighbors(c).intersection_len(alive) < need {
                continue;
            }
            images[depth] = c;
            used.insert(c);
            let keep_going = self.extend(host, alive, depth + 1, images, used, meter, visit)?;
            used.remove(c);
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Vertex set of one copy of the pattern in `host[alive]`.
    pub fn find(&self, host: &Graph, alive: &VertexSet, meter: &mut Meter) -> Result<Option<VertexSet>> {
        let mut found = None;
        self.for_each(host, alive, meter, |images| {
            found = Some(VertexSet::from_vertices(host.order(), images.iter().copied()).expect("images in range"));
            false
        })?;
        Ok(found)
    }
}

/// Isomorphism test: equal orders and sizes plus a spanning embedding.
pub(crate) fn isomorphic(a: &Graph, b: &Graph, meter: &mut Meter) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let mut da: Vec<usize> = (0..a.order()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.order()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(Matcher::new(a).find(b, &b.vertices(), meter)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn finds_paths_in_cycles() {
        let host = cycle(5);
        let mut meter = Meter::new(1 << 20);
        let p3 = path(3);
        let m = Matcher::new(&p3);
        assert!(m.find(&host, &host.vertices(), &mut meter).unwrap().is_some());
        let mut count = 0;
        m.for_each(&host, &host.vertices(), &mut meter, |_| {
            count += 1;
            true
        })
        .unwrap();
        // 5 paths on 3 vertices, each in two orientations
        assert_eq!(count, 10);
    }

    #[test]
    fn respects_alive_mask() {
        let host = cycle(5);
        let alive = VertexSet::from_vertices(5, [0, 1, 3]).unwrap();
        let mut meter = Meter::new(1 << 20);
        assert!(Matcher::new(&path(3)).find(&host, &alive, &mut meter).unwrap().is_none());
        assert!(Matcher::new(&path(2)).find(&host, &alive, &mut meter).unwrap().is_some());
    }

    #[test]
    fn disconnected_patterns() {
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let mut meter = Meter::new(1 << 20);
        assert!(Matcher::new(&two_edges).find(&cycle(4), &VertexSet::full(4), &mut meter).unwrap().is_some());
        assert!(Matcher::new(&two_edges).find(&path(3), &VertexSet::full(3), &mut meter).unwrap().is_none());
    }

    #[test]
    fn isomorphism() {
        let mut meter = Meter::new(1 << 20);
        let relabelled = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert!(isomorphic(&cycle(5), &relabelled, &mut meter).unwrap());
        assert!(!isomorphic(&cycle(5), &path(5), &mut meter).unwrap());
    }

    #[test]
    fn meter_runs_out() {
        let mut meter = Meter::new(3);
        let host = cycle(8);
        assert!(Matcher::new(&cycle(8)).find(&host, &host.vertices(), &mut meter).is_err());
    }
}
