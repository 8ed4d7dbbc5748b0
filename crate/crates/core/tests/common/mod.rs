//! Brute-force reference implementations over bitmasks. Independent of the
//! library's search code: they only read the edge list.

#![allow(dead_code)]

use isolation_core::Graph;

pub struct Brute {
    pub n: usize,
    adj: Vec<u32>,
}

impl Brute {
    pub fn new(g: &Graph) -> Self {
        assert!(g.order() <= 16, "brute force is for tiny graphs");
        let mut adj = vec![0u32; g.order()];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Brute { n: g.order(), adj }
    }

    pub fn all(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn closed(&self, set: u32) -> u32 {
        let mut out = set;
        for v in members(set) {
            out |= self.adj[v];
        }
        out
    }

    pub fn residual(&self, set: u32) -> u32 {
        self.all() & !self.closed(set)
    }

    fn edges_within(&self, alive: u32) -> u32 {
        members(alive).map(|v| (self.adj[v] & alive).count_ones()).sum::<u32>() / 2
    }

    fn components_within(&self, alive: u32) -> u32 {
        let mut seen = 0u32;
        let mut count = 0;
        for v in members(alive) {
            if seen >> v & 1 == 1 {
                continue;
            }
            count += 1;
            let mut frontier = 1u32 << v;
            while frontier != 0 {
                seen |= frontier;
                let mut next = 0;
                for w in members(frontier) {
                    next |= self.adj[w] & alive;
                }
                frontier = next & !seen;
            }
        }
        count
    }

    pub fn has_cycle(&self, alive: u32) -> bool {
        self.edges_within(alive) + self.components_within(alive) > alive.count_ones()
    }

    pub fn has_clique(&self, alive: u32, k: usize) -> bool {
        subsets_of_size(alive, k).any(|s| members(s).all(|v| self.adj[v] & s == s & !(1 << v)))
    }

    /// Whether `pattern` embeds (as a subgraph) into the vertices of `alive`.
    pub fn has_pattern(&self, alive: u32, pattern: &Graph) -> bool {
        let k = pattern.order();
        let pedges: Vec<(usize, usize)> = pattern.edges().collect();
        let hosts: Vec<usize> = members(alive).collect();
        let mut image = vec![usize::MAX; k];
        fn place(b: &Brute, pedges: &[(usize, usize)], hosts: &[usize], image: &mut [usize], i: usize, used: u32) -> bool {
            if i == image.len() {
                return pedges.iter().all(|&(a, c)| b.adj[image[a]] >> image[c] & 1 == 1);
            }
            for &h in hosts {
                if used >> h & 1 == 0 {
                    image[i] = h;
                    if place(b, pedges, hosts, image, i + 1, used | 1 << h) {
                        return true;
                    }
                }
            }
            false
        }
        place(self, &pedges, &hosts, &mut image, 0, 0)
    }

    /// Maximum number of pairwise disjoint sets among those satisfying `is_copy`
    /// (only inclusion-minimal ones are needed).
    pub fn packing(&self, alive: u32, is_copy: &dyn Fn(u32) -> bool) -> usize {
        let mut copies: Vec<u32> = Vec::new();
        let mut all: Vec<u32> = submasks(alive).filter(|&s| s != 0 && is_copy(s)).collect();
        all.sort_by_key(|s| s.count_ones());
        for s in all {
            if !copies.iter().any(|&c| c & !s == 0) {
                copies.push(s);
            }
        }
        fn best(copies: &[u32], used: u32) -> usize {
            match copies.split_first() {
                None => 0,
                Some((&c, rest)) => {
                    let skip = best(rest, used);
                    if c & used == 0 {
                        skip.max(1 + best(rest, used | c))
                    } else {
                        skip
                    }
                }
            }
        }
        best(&copies, 0)
    }

    /// Smallest set satisfying `ok`, with the lexicographically smallest
    /// sorted member list among those of minimum size.
    pub fn minimum(&self, ok: &dyn Fn(u32) -> bool) -> (usize, Vec<usize>) {
        for s in 0..=self.n {
            let best = subsets_of_size(self.all(), s)
                .filter(|&m| ok(m))
                .map(|m| members(m).collect::<Vec<_>>())
                .min();
            if let Some(w) = best {
                return (s, w);
            }
        }
        unreachable!("the full vertex set always qualifies")
    }

    pub fn gamma(&self) -> (usize, Vec<usize>) {
        self.minimum(&|d| self.residual(d) == 0)
    }

    pub fn iota_clique(&self, k: usize) -> (usize, Vec<usize>) {
        self.minimum(&|d| !self.has_clique(self.residual(d), k))
    }

    pub fn iota_pattern(&self, pattern: &Graph) -> (usize, Vec<usize>) {
        self.minimum(&|d| !self.has_pattern(self.residual(d), pattern))
    }

    pub fn iota_cycles(&self) -> (usize, Vec<usize>) {
        self.minimum(&|d| !self.has_cycle(self.residual(d)))
    }

    pub fn iota_cycle_packing(&self, t: usize) -> (usize, Vec<usize>) {
        self.minimum(&|d| self.packing(self.residual(d), &|s| self.has_cycle(s)) < t)
    }

    pub fn iota_pattern_packing(&self, pattern: &Graph, t: usize) -> (usize, Vec<usize>) {
        self.minimum(&|d| self.packing(self.residual(d), &|s| self.has_pattern(s, pattern)) < t)
    }

    pub fn nabla(&self) -> (usize, Vec<usize>) {
        self.minimum(&|s| !self.has_cycle(self.all() & !s))
    }

    pub fn hitting_pattern(&self, pattern: &Graph) -> (usize, Vec<usize>) {
        self.minimum(&|s| !self.has_pattern(self.all() & !s, pattern))
    }
}

pub fn members(set: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&v| set >> v & 1 == 1)
}

pub fn submasks(set: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(set);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & set) };
        Some(cur)
    })
}

pub fn subsets_of_size(set: u32, k: usize) -> impl Iterator<Item = u32> {
    submasks(set).filter(move |s| s.count_ones() as usize == k)
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
}
