//! Exact minimisers for the domination, isolation and hitting numbers.
//!
//! Every minimiser searches subset sizes `s = 0, 1, 2, ...` and stops at the
//! first size admitting a solution, so the reported value is optimal. Two
//! engines are available:
//!
//! * [`Engine::Pruned`] branches on an obstruction. For isolation it finds a
//!   family copy `C` left in `G - N[D]` and branches on the vertices of
//!   `N[C]` (every solution extending `D` must contain one of them); for
//!   hitting it branches on the vertices of `C`; for domination on `N[u]`
//!   for an undominated `u`. Branch `i` excludes the candidates of the
//!   earlier branches, so no subset is visited twice.
//! * [`Engine::Exhaustive`] tests every `s`-subset in lexicographic order
//!   with the certificate checker.
//!
//! Both engines return the lexicographically smallest optimal witness.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::family::{FamilyOracle, FamilySpec};
use crate::graph::{Graph, VertexSet};
use crate::subgraph::Meter;

/// Resource caps. Exceeding one is an error, never an approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Search nodes per solver call.
    pub node_budget: u64,
    /// Cycles enumerated per cycle enumeration.
    pub max_cycles: u64,
}

impl Limits {
    pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
    pub const DEFAULT_MAX_CYCLES: u64 = 1_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            node_budget: Self::DEFAULT_NODE_BUDGET,
            max_cycles: Self::DEFAULT_MAX_CYCLES,
        }
    }
}

/// Search strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Engine {
    #[default]
    Pruned,
    Exhaustive,
}

/// An optimal value with a witness of that size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOutcome {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub engine: Engine,
}

/// A maximum set of pairwise vertex-disjoint family copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub value: usize,
    pub copies: Vec<VertexSet>,
    pub nodes_explored: u64,
}

/// Exact solvers sharing one set of limits and one engine.
#[derive(Debug, Clone, Copy, Default)]
pub struct Solver {
    pub limits: Limits,
    pub engine: Engine,
}

impl Solver {
    pub fn new(limits: Limits, engine: Engine) -> Self {
        Solver { limits, engine }
    }

    pub fn with_engine(engine: Engine) -> Self {
        Solver {
            limits: Limits::default(),
            engine,
        }
    }

    fn meter(&self) -> Meter {
        Meter::new(self.limits.node_budget)
    }

    /// Whether `g` contains a `spec`-graph.
    pub fn contains(&self, g: &Graph, spec: &FamilySpec) -> Result<bool> {
        let target = SpecTarget::new(spec, &self.limits);
        target.contains(g, &g.vertices(), &mut self.meter())
    }

    /// `ν_𝓕(G)` for an unscaled family.
    pub fn packing(&self, g: &Graph, spec: &FamilySpec) -> Result<Packing> {
        if spec.copies() != 1 {
            return Err(Error::unsupported("packing number of a scaled family; use the base family"));
        }
        let oracle = FamilyOracle::new(spec.base(), &self.limits);
        let mut meter = self.meter();
        let copies = oracle.pack(g, &g.vertices(), usize::MAX, &mut meter)?;
        Ok(Packing {
            value: copies.len(),
            copies,
            nodes_explored: meter.nodes,
        })
    }

    /// `γ(G)`.
    pub fn domination(&self, g: &Graph) -> Result<SolverOutcome> {
        if g.is_null() {
            return Err(Error::NullGraph);
        }
        self.minimize(&Domination { g })
    }

    /// `ι(G, 𝓕)`.
    pub fn isolation(&self, g: &Graph, spec: &FamilySpec) -> Result<SolverOutcome> {
        if g.is_null() {
            return Err(Error::NullGraph);
        }
        self.minimize(&Isolation {
            g,
            target: SpecTarget::new(spec, &self.limits),
        })
    }

    /// Smallest `S` such that `G - S` contains no `spec`-graph. Defined on
    /// the null graph (value 0).
    pub fn hitting(&self, g: &Graph, spec: &FamilySpec) -> Result<SolverOutcome> {
        self.minimize(&Hitting {
            g,
            target: SpecTarget::new(spec, &self.limits),
        })
    }

    /// `∇(G)`, the decycling number.
    pub fn decycling(&self, g: &Graph) -> Result<SolverOutcome> {
        self.hitting(g, &FamilySpec::all_cycles())
    }

    /// Certificate check: `N[D] = V(G)`.
    pub fn is_dominating_set(&self, g: &Graph, set: &VertexSet) -> Result<bool> {
        Ok(g.closed_neighborhood(set)?.len() == g.order())
    }

    /// Certificate check: `G - N[D]` contains no `spec`-graph.
    pub fn is_isolating_set(&self, g: &Graph, spec: &FamilySpec, set: &VertexSet) -> Result<bool> {
        let alive = g.closed_neighborhood(set)?.complement();
        let target = SpecTarget::new(spec, &self.limits);
        Ok(!target.contains(g, &alive, &mut self.meter())?)
    }

    /// Certificate check: `G - S` contains no `spec`-graph.
    pub fn is_hitting_set(&self, g: &Graph, spec: &FamilySpec, set: &VertexSet) -> Result<bool> {
        if set.order() != g.order() {
            return Err(Error::OrderMismatch {
                expected: g.order(),
                found: set.order(),
            });
        }
        let target = SpecTarget::new(spec, &self.limits);
        Ok(!target.contains(g, &set.complement(), &mut self.meter())?)
    }

    fn minimize<O: Objective>(&self, objective: &O) -> Result<SolverOutcome> {
        let mut meter = self.meter();
        let (value, witness) = match self.engine {
            Engine::Pruned => minimize_pruned(objective, &mut meter)?,
            Engine::Exhaustive => minimize_exhaustive(objective, &mut meter)?,
        };
        Ok(SolverOutcome {
            value,
            witness,
            nodes_explored: meter.nodes,
            engine: self.engine,
        })
    }
}

/// `t𝓕` containment on top of a base-family oracle.
struct SpecTarget {
    oracle: FamilyOracle,
    copies: usize,
}

impl SpecTarget {
    fn new(spec: &FamilySpec, limits: &Limits) -> Self {
        SpecTarget {
            oracle: FamilyOracle::new(spec.base(), limits),
            copies: spec.copies(),
        }
    }

    fn contains(&self, g: &Graph, alive: &VertexSet, meter: &mut Meter) -> Result<bool> {
        if self.copies == 1 {
            self.oracle.contains(g, alive, meter)
        } else {
            Ok(self.oracle.pack(g, alive, self.copies, meter)?.len() >= self.copies)
        }
    }

    /// Vertices of some `t𝓕`-graph in `G[alive]`.
    fn find(&self, g: &Graph, alive: &VertexSet, meter: &mut Meter) -> Result<Option<VertexSet>> {
        if self.copies == 1 {
            return self.oracle.find_copy(g, alive, meter);
        }
        let packed = self.oracle.pack(g, alive, self.copies, meter)?;
        if packed.len() < self.copies {
            return Ok(None);
        }
        let mut union = VertexSet::empty(g.order());
        for c in &packed {
            union.union_with(c);
        }
        Ok(Some(union))
    }
}

trait Objective {
    fn order(&self) -> usize;

    /// `None` if `chosen` is already a solution; otherwise a set of
    /// vertices of which every solution containing `chosen` and avoiding
    /// `excluded` must contain at least one.
    fn obstruction(&self, chosen: &VertexSet, excluded: &VertexSet, meter: &mut Meter) -> Result<Option<VertexSet>>;

    /// True when no solution extends `chosen` by at most `budget` vertices.
    fn hopeless(&self, _chosen: &VertexSet, _excluded: &VertexSet, _budget: usize) -> bool {
        false
    }

    /// Certificate check used by the exhaustive engine.
    fn is_solution(&self, chosen: &VertexSet, meter: &mut Meter) -> Result<bool>;
}

struct Domination<'g> {
    g: &'g Graph,
}

impl Objective for Domination<'_> {
    fn order(&self) -> usize {
        self.g.order()
    }

    fn obstruction(&self, chosen: &VertexSet, excluded: &VertexSet, meter: &mut Meter) -> Result<Option<VertexSet>> {
        meter.tick()?;
        let undominated = self.g.closed_neighborhood_unchecked(chosen).complement();
        // the undominated vertex with the fewest remaining dominators
        Ok(undominated
            .iter()
            .map(|u| self.g.closed_neighborhood_of(u).difference(excluded))
            .min_by_key(VertexSet::len))
    }

    fn hopeless(&self, chosen: &VertexSet, excluded: &VertexSet, budget: usize) -> bool {
        let undominated = self.g.closed_neighborhood_unchecked(chosen).complement();
        let best_cover = (0..self.g.order())
            .filter(|&v| !excluded.contains(v) && !chosen.contains(v))
            .map(|v| self.g.closed_neighborhood_of(v).intersection_len(&undominated))
            .max()
            .unwrap_or(0);
        undominated.len() > budget * best_cover
    }

    fn is_solution(&self, chosen: &VertexSet, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        Ok(self.g.closed_neighborhood_unchecked(chosen).len() == self.g.order())
    }
}

struct Isolation<'g> {
    g: &'g Graph,
    target: SpecTarget,
}

impl Objective for Isolation<'_> {
    fn order(&self) -> usize {
        self.g.order()
    }

    fn obstruction(&self, chosen: &VertexSet, _excluded: &VertexSet, meter: &mut Meter) -> Result<Option<VertexSet>> {
        let alive = self.g.closed_neighborhood_unchecked(chosen).complement();
        Ok(self
            .target
            .find(self.g, &alive, meter)?
            .map(|copy| self.g.closed_neighborhood_unchecked(&copy)))
    }

    fn is_solution(&self, chosen: &VertexSet, meter: &mut Meter) -> Result<bool> {
        let alive = self.g.closed_neighborhood_unchecked(chosen).complement();
        Ok(!self.target.contains(self.g, &alive, meter)?)
    }
}

struct Hitting<'g> {
    g: &'g Graph,
    target: SpecTarget,
}

impl Objective for Hitting<'_> {
    fn order(&self) -> usize {
        self.g.order()
    }

    fn obstruction(&self, chosen: &VertexSet, _excluded: &VertexSet, meter: &mut Meter) -> Result<Option<VertexSet>> {
        self.target.find(self.g, &chosen.complement(), meter)
    }

    fn is_solution(&self, chosen: &VertexSet, meter: &mut Meter) -> Result<bool> {
        Ok(!self.target.contains(self.g, &chosen.complement(), meter)?)
    }
}

/// Depth-limited branching. On success `chosen` holds a solution.
fn extend<O: Objective>(
    objective: &O,
    chosen: &mut VertexSet,
    excluded: &mut VertexSet,
    budget: usize,
    meter: &mut Meter,
) -> Result<bool> {
    meter.tick()?;
    let Some(candidates) = objective.obstruction(chosen, excluded, meter)? else {
        return Ok(true);
    };
    if budget == 0 || objective.hopeless(chosen, excluded, budget) {
        return Ok(false);
    }
    let candidates = candidates.difference(excluded).difference(chosen);
    let mut newly_excluded = Vec::new();
    let mut found = false;
    for v in candidates.iter() {
        chosen.insert(v);
        if extend(objective, chosen, excluded, budget - 1, meter)? {
            found = true;
            break;
        }
        chosen.remove(v);
        excluded.insert(v);
        newly_excluded.push(v);
    }
    for v in newly_excluded {
        excluded.remove(v);
    }
    Ok(found)
}

fn minimize_pruned<O: Objective>(objective: &O, meter: &mut Meter) -> Result<(usize, VertexSet)> {
    let n = objective.order();
    let empty = VertexSet::empty(n);
    let mut value = None;
    for size in 0..=n {
        let mut chosen = empty.clone();
        let mut excluded = empty.clone();
        if extend(objective, &mut chosen, &mut excluded, size, meter)? {
            value = Some(size);
            break;
        }
    }
    let value = value.expect("the full vertex set is always a solution");

    // Fix the witness one member at a time, always taking the smallest
    // vertex that still extends to an optimal solution.
    let mut prefix = empty.clone();
    let mut floor = 0;
    for slot in 0..value {
        let mut next = None;
        for v in floor..n {
            let mut chosen = prefix.clone();
            chosen.insert(v);
            let mut excluded = VertexSet::empty(n);
            for x in 0..=v {
                if !chosen.contains(x) {
                    excluded.insert(x);
                }
            }
            if extend(objective, &mut chosen, &mut excluded, value - slot - 1, meter)? {
                next = Some(v);
                break;
            }
        }
        let v = next.expect("an optimal solution extends the prefix");
        prefix.insert(v);
        floor = v + 1;
    }
    Ok((value, prefix))
}

fn minimize_exhaustive<O: Objective>(objective: &O, meter: &mut Meter) -> Result<(usize, VertexSet)> {
    let n = objective.order();
    for size in 0..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            meter.tick()?;
            let set = VertexSet::from_vertices(n, combo.iter().copied()).expect("in range");
            if objective.is_solution(&set, meter)? {
                return Ok((size, set));
            }
            // next combination in lexicographic order
            let Some(i) = (0..size).rev().find(|&i| combo[i] < n - size + i) else {
                break;
            };
            combo[i] += 1;
            for j in i + 1..size {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    unreachable!("the full vertex set is always a solution")
}

/// `γ(G)` with default limits.
pub fn domination_number(g: &Graph) -> Result<SolverOutcome> {
    Solver::default().domination(g)
}

/// `ι(G, 𝓕)` with default limits.
pub fn isolation_number(g: &Graph, spec: &FamilySpec) -> Result<SolverOutcome> {
    Solver::default().isolation(g, spec)
}

/// `𝓕`-hitting number with default limits.
pub fn hitting_number(g: &Graph, spec: &FamilySpec) -> Result<SolverOutcome> {
    Solver::default().hitting(g, spec)
}

/// `∇(G)` with default limits.
pub fn decycling_number(g: &Graph) -> Result<SolverOutcome> {
    Solver::default().decycling(g)
}

/// Whether `set` is a `spec`-isolating set of `g`.
pub fn is_isolating_set(g: &Graph, spec: &FamilySpec, set: &VertexSet) -> Result<bool> {
    Solver::default().is_isolating_set(g, spec, set)
}
