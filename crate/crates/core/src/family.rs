//! Graph families `𝓕`: single patterns, named generators, all cycles, and
//! `t` pairwise vertex-disjoint copies of any of those.
//!
//! Containment is subgraph containment (not induced): `G` contains an
//! `𝓕`-graph when some subgraph of `G` is isomorphic to a member of `𝓕`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::{Limits, Solver};
use crate::subgraph::{Matcher, Meter};

/// Named pattern generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    /// `K_k`
    Clique,
    /// `P_k`, the path on `k` vertices
    Path,
    /// `C_k`, `k >= 3`
    Cycle,
    /// `K_{1,k}`, on `k + 1` vertices
    Star,
}

impl GeneratorKind {
    fn symbol(self) -> char {
        match self {
            GeneratorKind::Clique => 'K',
            GeneratorKind::Path => 'P',
            GeneratorKind::Cycle => 'C',
            GeneratorKind::Star => 'S',
        }
    }
}

/// Builds the standard graph of a generator.
pub fn generator_graph(kind: GeneratorKind, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::invalid(format!("{}0: generator size must be at least 1", kind.symbol())));
    }
    let edges: Vec<(usize, usize)> = match kind {
        GeneratorKind::Clique => (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect(),
        GeneratorKind::Path => (1..k).map(|v| (v - 1, v)).collect(),
        GeneratorKind::Cycle => {
            if k < 3 {
                return Err(Error::invalid(format!("C{k}: a cycle needs at least 3 vertices")));
            }
            (0..k).map(|v| (v, (v + 1) % k)).collect()
        }
        GeneratorKind::Star => (1..=k).map(|v| (0, v)).collect(),
    };
    let order = if kind == GeneratorKind::Star { k + 1 } else { k };
    Graph::new(order, edges)
}

/// The base family of a [`FamilySpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseFamily {
    /// `{F}` for a non-null pattern `F`.
    Pattern(Graph),
    /// `{K_k}`, `{P_k}`, `{C_k}` or `{K_{1,k}}`.
    Generator(GeneratorKind, usize),
    /// The family `𝒞` of all cycles.
    AllCycles,
}

/// A family `t𝓕`: `copies` pairwise vertex-disjoint graphs from `base`.
///
/// `copies == 1` is the base family itself; scaling a scaled family
/// multiplies the copy counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    base: BaseFamily,
    copies: usize,
}

impl FamilySpec {
    pub fn new(base: BaseFamily) -> Result<Self> {
        match &base {
            BaseFamily::Pattern(g) if g.is_null() => {
                return Err(Error::invalid("pattern graph must be non-null"));
            }
            BaseFamily::Generator(kind, k) => {
                generator_graph(*kind, *k)?;
            }
            _ => {}
        }
        Ok(FamilySpec { base, copies: 1 })
    }

    /// `{F}`.
    pub fn pattern(pattern: Graph) -> Result<Self> {
        Self::new(BaseFamily::Pattern(pattern))
    }

    pub fn generator(kind: GeneratorKind, k: usize) -> Result<Self> {
        Self::new(BaseFamily::Generator(kind, k))
    }

    pub fn clique(k: usize) -> Result<Self> {
        Self::generator(GeneratorKind::Clique, k)
    }

    /// The family of all cycles.
    pub fn all_cycles() -> Self {
        FamilySpec {
            base: BaseFamily::AllCycles,
            copies: 1,
        }
    }

    /// `t𝓕`. Rejects `t == 0`.
    pub fn scaled(&self, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::invalid("number of disjoint copies must be at least 1"));
        }
        let copies = self
            .copies
            .checked_mul(t)
            .ok_or_else(|| Error::invalid("number of disjoint copies overflows"))?;
        Ok(FamilySpec {
            base: self.base.clone(),
            copies,
        })
    }

    pub fn base(&self) -> &BaseFamily {
        &self.base
    }

    /// The `t` of `t𝓕`.
    pub fn copies(&self) -> usize {
        self.copies
    }

    /// The base family as a spec with one copy.
    pub fn unscaled(&self) -> FamilySpec {
        FamilySpec {
            base: self.base.clone(),
            copies: 1,
        }
    }

    /// The single pattern graph, when the base family has one.
    pub fn pattern_graph(&self) -> Option<Graph> {
        match &self.base {
            BaseFamily::Pattern(g) => Some(g.clone()),
            BaseFamily::Generator(kind, k) => Some(generator_graph(*kind, *k).expect("validated at construction")),
            BaseFamily::AllCycles => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.copies != 1 {
            write!(f, "{}*", self.copies)?;
        }
        match &self.base {
            BaseFamily::Pattern(g) => write!(f, "pattern(n={},m={})", g.order(), g.size()),
            BaseFamily::Generator(kind, k) => write!(f, "{}{}", kind.symbol(), k),
            BaseFamily::AllCycles => f.write_str("cycles"),
        }
    }
}

impl FromStr for BaseFamily {
    type Err = Error;

    /// `K<k>`, `P<k>`, `C<k>`, `S<k>` or `cycles`. File patterns are
    /// resolved by callers that can read files.
    fn from_str(s: &str) -> Result<Self> {
        let token = s.trim();
        if token == "cycles" {
            return Ok(BaseFamily::AllCycles);
        }
        if token.starts_with("file:") {
            return Err(Error::parse(token, "file patterns must be loaded by the caller"));
        }
        let mut chars = token.chars();
        let kind = match chars.next() {
            Some('K') => GeneratorKind::Clique,
            Some('P') => GeneratorKind::Path,
            Some('C') => GeneratorKind::Cycle,
            Some('S') => GeneratorKind::Star,
            _ => return Err(Error::parse(token, "expected K<k>, P<k>, C<k>, S<k>, cycles or file:<path>")),
        };
        let k: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::parse(token, "generator size must be a non-negative integer"))?;
        generator_graph(kind, k).map_err(|e| Error::parse(token, e.to_string()))?;
        Ok(BaseFamily::Generator(kind, k))
    }
}

/// Splits `"[t*]base"` into the copy count and the base token.
pub fn split_scaled(s: &str) -> Result<(usize, &str)> {
    let s = s.trim();
    match s.split_once('*') {
        None => Ok((1, s)),
        Some((t, base)) => {
            let t: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::parse(t, "copy count must be a positive integer"))?;
            if t == 0 {
                return Err(Error::parse(s, "copy count must be at least 1"));
            }
            Ok((t, base.trim()))
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (t, base) = split_scaled(s)?;
        FamilySpec::new(base.parse()?)?.scaled(t)
    }
}

/// Containment, copy enumeration and packing for one base family.
pub(crate) struct FamilyOracle {
    kind: OracleKind,
    cycle_cap: u64,
}

enum OracleKind {
    Vertex,
    Edge,
    Pattern(Graph),
    Cycles,
}

impl FamilyOracle {
    pub fn new(base: &BaseFamily, limits: &Limits) -> Self {
        let kind = match base {
            BaseFamily::AllCycles => OracleKind::Cycles,
            other => {
                let g = match other {
                    BaseFamily::Pattern(g) => g.clone(),
                    BaseFamily::Generator(kind, k) => generator_graph(*kind, *k).expect("validated at construction"),
                    BaseFamily::AllCycles => unreachable!(),
                };
                match (g.order(), g.size()) {
                    (1, 0) => OracleKind::Vertex,
                    (2, 1) => OracleKind::Edge,
                    _ => OracleKind::Pattern(g),
                }
            }
        };
        FamilyOracle {
            kind,
            cycle_cap: limits.max_cycles,
        }
    }

    /// A vertex set containing the vertices of one base-family copy in
    /// `G[alive]` (for cycles possibly a few more vertices).
    pub fn find_copy(&self, g: &Graph, alive: &VertexSet, meter: &mut Meter) -> Result<Option<VertexSet>> {
        meter.tick()?;
        Ok(match &self.kind {
            OracleKind::Vertex => alive.first().map(|v| {
                let mut s = VertexSet::empty(g.order());
                s.insert(v);
                s
            }),
            OracleKind::Edge => alive
                .iter()
                .find_map(|u| g.neighbors(u).intersection(alive).first().map(|v| (u, v)))
                .map(|(u, v)| VertexSet::from_vertices(g.order(), [u, v]).expect("in range")),
            OracleKind::Pattern(p) => Matcher::new(p).find(g, alive, meter)?,
            OracleKind::Cycles => g.short_cycle_within(alive),
        })
    }

    /// Whether `G[alive]` contains a base-family copy.
    pub fn contains(&self, g: &Graph, alive: &VertexSet, meter: &mut Meter) -> Result<bool> {
        match self.kind {
            OracleKind::Cycles => {
                meter.tick()?;
                Ok(g.has_cycle_within(alive))
            }
            _ => Ok(self.find_copy(g, alive, meter)?.is_some()),
        }
    }

    /// Distinct vertex sets of copies in `G[alive]`. For cycles only
    /// inclusion-minimal vertex sets are kept; any packing can be rewritten
    /// to use them.
    pub fn copies(&self, g: &Graph, alive: &VertexSet, meter: &mut Meter) -> Result<Vec<VertexSet>> {
        let n = g.order();
        let mut sets = BTreeSet::new();
        match &self.kind {
            OracleKind::Vertex => {
                for v in alive {
                    sets.insert(VertexSet::from_vertices(n, [v]).expect("in range"));
                }
            }
            OracleKind::Edge => {
                for u in alive {
                    for v in g.neighbors(u).intersection(alive).iter().filter(|&v| v > u) {
                        sets.insert(VertexSet::from_vertices(n, [u, v]).expect("in range"));
                    }
                }
            }
            OracleKind::Pattern(p) => {
                Matcher::new(p).for_each(g, alive, meter, |images| {
                    sets.insert(VertexSet::from_vertices(n, images.iter().copied()).expect("in range"));
                    true
                })?;
            }
            OracleKind::Cycles => {
                let mut count = 0u64;
                let mut exceeded = false;
                let cap = self.cycle_cap;
                g.for_each_cycle(alive, cap.saturating_mul(64).max(1 << 20), |cycle| {
                    count += 1;
                    if count > cap {
                        exceeded = true;
                        return false;
                    }
                    sets.insert(VertexSet::from_vertices(n, cycle.iter().copied()).expect("in range"));
                    true
                })?;
                if exceeded {
                    return Err(Error::ResourceExhausted {
                        what: "enumerated cycle",
                        limit: cap,
                    });
                }
                let all: Vec<VertexSet> = sets.into_iter().collect();
                let minimal = all
                    .iter()
                    .filter(|s| !all.iter().any(|o| o.len() < s.len() && o.is_subset(s)))
                    .cloned()
                    .collect();
                return Ok(minimal);
            }
        }
        Ok(sets.into_iter().collect())
    }

    /// Up to `target` pairwise disjoint copies in `G[alive]`, as many as
    /// possible: the result has `min(ν, target)` members.
    pub fn pack(&self, g: &Graph, alive: &VertexSet, target: usize, meter: &mut Meter) -> Result<Vec<VertexSet>> {
        if target == 0 {
            return Ok(Vec::new());
        }
        if target == 1 {
            return match self.find_copy(g, alive, meter)? {
                None => Ok(Vec::new()),
                Some(found) => Ok(vec![self.exact_copy(g, found, meter)?]),
            };
        }
        let sets = self.copies(g, alive, meter)?;
        let mut search = PackingSearch {
            sets: &sets,
            target,
            chosen: Vec::new(),
            best: Vec::new(),
        };
        let live: Vec<usize> = (0..sets.len()).collect();
        search.run(&live, meter)?;
        Ok(search.best.iter().map(|&i| sets[i].clone()).collect())
    }

    /// `find_copy` may return a superset of a cycle; trim it to an actual copy.
    fn exact_copy(&self, g: &Graph, found: VertexSet, meter: &mut Meter) -> Result<VertexSet> {
        match self.kind {
            OracleKind::Cycles => Ok(self
                .copies(g, &found, meter)?
                .into_iter()
                .min_by_key(VertexSet::len)
                .expect("walk contains a cycle")),
            _ => Ok(found),
        }
    }
}

struct PackingSearch<'a> {
    sets: &'a [VertexSet],
    target: usize,
    chosen: Vec<usize>,
    best: Vec<usize>,
}

impl PackingSearch<'_> {
    fn run(&mut self, live: &[usize], meter: &mut Meter) -> Result<()> {
        meter.tick()?;
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.best.len() >= self.target || live.is_empty() {
            return Ok(());
        }
        let order = self.sets[live[0]].order();
        let mut span = VertexSet::empty(order);
        let mut smallest = usize::MAX;
        for &i in live {
            span.union_with(&self.sets[i]);
            smallest = smallest.min(self.sets[i].len());
        }
        if self.chosen.len() + span.len() / smallest <= self.best.len() {
            return Ok(());
        }
        // branch on the vertex lying in the fewest live copies
        let pivot = span
            .iter()
            .min_by_key(|&v| live.iter().filter(|&&i| self.sets[i].contains(v)).count())
            .expect("span is non-empty");
        for &i in live.iter().filter(|&&i| self.sets[i].contains(pivot)) {
            let rest: Vec<usize> = live
                .iter()
                .copied()
                .filter(|&j| !self.sets[j].intersects(&self.sets[i]))
                .collect();
            self.chosen.push(i);
            self.run(&rest, meter)?;
            self.chosen.pop();
            if self.best.len() >= self.target {
                return Ok(());
            }
        }
        let without: Vec<usize> = live.iter().copied().filter(|&j| !self.sets[j].contains(pivot)).collect();
        self.run(&without, meter)
    }
}

/// Whether `g` contains an `spec`-graph, with default limits.
pub fn contains_family(g: &Graph, spec: &FamilySpec) -> Result<bool> {
    Solver::default().contains(g, spec)
}

/// Maximum number of pairwise vertex-disjoint base-family copies, with default limits.
pub fn packing_number(g: &Graph, spec: &FamilySpec) -> Result<usize> {
    Ok(Solver::default().packing(g, spec)?.value)
}

/// `γ(𝓕) = max{γ(F) : F ∈ 𝓕}` for single-pattern and generator families.
pub fn family_domination(spec: &FamilySpec) -> Result<usize> {
    if spec.copies() != 1 {
        return Err(Error::unsupported(format!(
            "γ of the scaled family {spec}; use the base family"
        )));
    }
    match spec.base() {
        BaseFamily::AllCycles => Err(Error::unsupported("γ of the cycle family is unbounded")),
        BaseFamily::Generator(kind, k) => Ok(match kind {
            GeneratorKind::Clique | GeneratorKind::Star => 1,
            GeneratorKind::Path | GeneratorKind::Cycle => k.div_ceil(3),
        }),
        BaseFamily::Pattern(g) => Ok(Solver::default().domination(g)?.value),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators() {
        let k3 = generator_graph(GeneratorKind::Clique, 3).unwrap();
        assert_eq!(k3, generator_graph(GeneratorKind::Cycle, 3).unwrap());
        let star = generator_graph(GeneratorKind::Star, 3).unwrap();
        assert_eq!((star.order(), star.size(), star.degree(0)), (4, 3, 3));
        let p1 = generator_graph(GeneratorKind::Path, 1).unwrap();
        assert_eq!((p1.order(), p1.size()), (1, 0));
        assert!(generator_graph(GeneratorKind::Cycle, 2).is_err());
        assert!(generator_graph(GeneratorKind::Clique, 0).is_err());
    }

    #[test]
    fn scaling_normalises() {
        let k3 = FamilySpec::clique(3).unwrap();
        assert_eq!(k3.scaled(1).unwrap(), k3);
        assert_eq!(k3.scaled(2).unwrap().scaled(3).unwrap().copies(), 6);
        assert!(k3.scaled(0).is_err());
        assert!(FamilySpec::pattern(Graph::null()).is_err());
    }

    #[test]
    fn parses_family_syntax() {
        let parsed: FamilySpec = "2*K3".parse().unwrap();
        assert_eq!(parsed, FamilySpec::clique(3).unwrap().scaled(2).unwrap());
        assert_eq!("cycles".parse::<FamilySpec>().unwrap(), FamilySpec::all_cycles());
        assert_eq!(
            "S3".parse::<FamilySpec>().unwrap(),
            FamilySpec::generator(GeneratorKind::Star, 3).unwrap()
        );
        for bad in ["X3", "C2", "0*K2", "K", "a*K2", "file:x.el"] {
            match bad.parse::<FamilySpec>() {
                Err(Error::Parse { .. }) => {}
                other => panic!("{bad}: {other:?}"),
            }
        }
        assert_eq!("3*P4".parse::<FamilySpec>().unwrap().to_string(), "3*P4");
    }

    #[test]
    fn closed_form_family_domination() {
        assert_eq!(family_domination(&FamilySpec::clique(5).unwrap()).unwrap(), 1);
        let p4 = FamilySpec::generator(GeneratorKind::Path, 4).unwrap();
        assert_eq!(family_domination(&p4).unwrap(), 2);
        assert!(matches!(
            family_domination(&FamilySpec::all_cycles()),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            family_domination(&p4.scaled(2).unwrap()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn cycle_copies_are_minimal() {
        // every 4-cycle of K4 spans a triangle's vertex set
        let k4 = generator_graph(GeneratorKind::Clique, 4).unwrap();
        let oracle = FamilyOracle::new(&BaseFamily::AllCycles, &Limits::default());
        let mut meter = Meter::new(1 << 20);
        let copies = oracle.copies(&k4, &k4.vertices(), &mut meter).unwrap();
        assert_eq!(copies.len(), 4);
        assert!(copies.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn packing_small_cases() {
        let mut meter = Meter::new(1 << 20);
        let c6 = generator_graph(GeneratorKind::Cycle, 6).unwrap();
        let edge = FamilyOracle::new(&BaseFamily::Generator(GeneratorKind::Clique, 2), &Limits::default());
        assert_eq!(edge.pack(&c6, &c6.vertices(), usize::MAX, &mut meter).unwrap().len(), 3);
        assert_eq!(edge.pack(&c6, &c6.vertices(), 2, &mut meter).unwrap().len(), 2);
        let tri = FamilyOracle::new(&BaseFamily::Generator(GeneratorKind::Clique, 3), &Limits::default());
        let k4 = generator_graph(GeneratorKind::Clique, 4).unwrap();
        assert_eq!(tri.pack(&k4, &k4.vertices(), usize::MAX, &mut meter).unwrap().len(), 1);
        let p2 = generator_graph(GeneratorKind::Path, 2).unwrap();
        let cyc = FamilyOracle::new(&BaseFamily::AllCycles, &Limits::default());
        assert!(cyc.pack(&p2, &p2.vertices(), usize::MAX, &mut meter).unwrap().is_empty());
    }
}
