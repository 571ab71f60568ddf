//! Simple hypergraphs, complete multipartite constructors, minors, and the
//! transversal/independence machinery.

use std::collections::{HashSet, VecDeque};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{self, VertexSet, MAX_VERTICES};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A simple hypergraph: a vertex universe `[0, n)` and an antichain of
/// nonempty edges. The union of the edges need not cover the vertex set;
/// deletion minors legitimately leave uncovered vertices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Hypergraph {
    /// Build from explicit edges, validating the simplicity invariant.
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Hypergraph> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidHypergraph(format!(
                "at most {MAX_VERTICES} vertices supported, got {n}"
            )));
        }
        let full = VertexSet::full(n);
        let mut edges = edges;
        edges.sort_by(|a, b| a.lex_cmp(*b));
        edges.dedup();
        for &e in &edges {
            if e.is_empty() {
                return Err(Error::InvalidHypergraph("empty edge".into()));
            }
            if !e.is_subset_of(full) {
                return Err(Error::InvalidHypergraph(format!("edge {e:?} out of range")));
            }
        }
        if !bits::is_antichain(&edges) {
            return Err(Error::InvalidHypergraph("edges are not an antichain".into()));
        }
        Ok(Hypergraph { n, edges, labels: None })
    }

    pub fn edgeless(n: usize) -> Hypergraph {
        Hypergraph { n, edges: Vec::new(), labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Hypergraph> {
        if labels.len() != self.n {
            return Err(Error::InvalidHypergraph("labels length mismatch".into()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    fn relabel(&self, keep: VertexSet) -> Option<Vec<String>> {
        self.labels
            .as_ref()
            .map(|ls| keep.iter().map(|v| ls[v].clone()).collect())
    }

    /// Edges entirely inside `s`, re-indexed along the order-preserving
    /// compression of `s`.
    pub fn induced(&self, s: VertexSet) -> Result<Hypergraph> {
        if !s.is_subset_of(VertexSet::full(self.n)) {
            return Err(Error::NotASubset(format!("{s:?}")));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.is_subset_of(s))
            .map(|e| e.compress(s))
            .collect();
        let mut h = Hypergraph::new(s.len(), edges)?;
        h.labels = self.relabel(s);
        Ok(h)
    }

    /// Remove the vertex and every edge through it.
    pub fn deletion(&self, v: usize) -> Result<Hypergraph> {
        self.check_vertex(v)?;
        let keep = VertexSet::full(self.n).without(v);
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(v))
            .map(|e| e.compress(keep))
            .collect();
        let mut h = Hypergraph::new(self.n - 1, edges)?;
        h.labels = self.relabel(keep);
        Ok(h)
    }

    /// Remove the vertex from every edge, then drop redundant edges. Fails
    /// when `{v}` is itself an edge (the quotient would need an empty edge).
    pub fn contraction(&self, v: usize) -> Result<Hypergraph> {
        self.check_vertex(v)?;
        if self.edges.contains(&VertexSet::singleton(v)) {
            return Err(Error::ContractedIsolatedEdge { v });
        }
        let keep = VertexSet::full(self.n).without(v);
        let stripped: Vec<VertexSet> = self.edges.iter().map(|e| e.without(v)).collect();
        let edges = bits::minimal_members(&stripped)
            .into_iter()
            .map(|e| e.compress(keep))
            .collect();
        let mut h = Hypergraph::new(self.n - 1, edges)?;
        h.labels = self.relabel(keep);
        Ok(h)
    }
}

/// One reachable minor, tracked over the original vertex ids so that
/// distinct labeled states stay distinct.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MinorState {
    /// Surviving original vertex ids.
    pub survivors: VertexSet,
    /// Edges over the original ids.
    pub edges: Vec<VertexSet>,
}

impl MinorState {
    fn of(h: &Hypergraph) -> MinorState {
        MinorState {
            survivors: VertexSet::full(h.n),
            edges: h.edges.clone(),
        }
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    /// The state as a dense hypergraph (survivors compressed).
    pub fn to_hypergraph(&self) -> Hypergraph {
        let edges = self.edges.iter().map(|e| e.compress(self.survivors)).collect();
        Hypergraph::new(self.survivors.len(), edges).expect("minor states stay simple")
    }

    fn delete(&self, v: usize) -> MinorState {
        MinorState {
            survivors: self.survivors.without(v),
            edges: self.edges.iter().filter(|e| !e.contains(v)).copied().collect(),
        }
    }

    fn contract(&self, v: usize) -> Option<MinorState> {
        if self.edges.contains(&VertexSet::singleton(v)) {
            return None;
        }
        let stripped: Vec<VertexSet> = self.edges.iter().map(|e| e.without(v)).collect();
        Some(MinorState {
            survivors: self.survivors.without(v),
            edges: bits::minimal_members(&stripped),
        })
    }

    fn sort_key(&self) -> (std::cmp::Reverse<usize>, Vec<usize>, Vec<Vec<usize>>) {
        (
            std::cmp::Reverse(self.survivors.len()),
            self.survivors.to_vec(),
            self.edges.iter().map(|e| e.to_vec()).collect(),
        )
    }
}

/// Every hypergraph reachable from `h` by repeated deletion and/or
/// contraction, `h` itself included. States are deduplicated by the exact
/// labeled key (survivor set, edge set) over the original ids; no
/// isomorphism reduction is attempted.
pub fn minor_states(h: &Hypergraph) -> Vec<MinorState> {
    let root = MinorState::of(h);
    let mut seen: HashSet<MinorState> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(root.clone());
    queue.push_back(root);
    while let Some(state) = queue.pop_front() {
        for v in state.survivors.iter() {
            let del = state.delete(v);
            if seen.insert(del.clone()) {
                queue.push_back(del);
            }
            if let Some(con) = state.contract(v) {
                if seen.insert(con.clone()) {
                    queue.push_back(con);
                }
            }
        }
    }
    let mut out: Vec<MinorState> = seen.into_iter().collect();
    out.sort_by_key(|s| s.sort_key());
    out
}

pub fn minors(h: &Hypergraph) -> Vec<Hypergraph> {
    minor_states(h).iter().map(MinorState::to_hypergraph).collect()
}

/// `v` is simplicial when every two edges through it are completed by a
/// third edge inside their union minus `v`.
pub fn is_simplicial_vertex(h: &Hypergraph, v: usize) -> Result<bool> {
    h.check_vertex(v)?;
    let through: Vec<VertexSet> = h.edges.iter().filter(|e| e.contains(v)).copied().collect();
    for (k, &e1) in through.iter().enumerate() {
        for &e2 in &through[k + 1..] {
            let ambient = e1.union(e2).without(v);
            if !h.edges.iter().any(|e3| e3.is_subset_of(ambient)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The family of minimal transversals of a hypergraph's edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransversalSet {
    n: usize,
    members: Vec<VertexSet>,
}

impl TransversalSet {
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn min_cardinality(&self) -> usize {
        self.members.iter().map(|t| t.len()).min().unwrap_or(0)
    }
}

/// Minimal transversals by incremental expansion: fold the edges in one at
/// a time, extend the transversals missed by the new edge, minimalize.
pub fn transversal_hypergraph(h: &Hypergraph) -> Result<TransversalSet> {
    if h.is_edgeless() {
        return Err(Error::EdgelessHypergraph);
    }
    Ok(TransversalSet {
        n: h.n,
        members: minimal_transversals_of(&h.edges),
    })
}

pub(crate) fn minimal_transversals_of(sets: &[VertexSet]) -> Vec<VertexSet> {
    let mut current: Vec<VertexSet> = sets[0].iter().map(VertexSet::singleton).collect();
    for &edge in &sets[1..] {
        let mut next: Vec<VertexSet> = Vec::new();
        for &t in &current {
            if t.intersects(edge) {
                next.push(t);
            } else {
                for v in edge.iter() {
                    next.push(t.with(v));
                }
            }
        }
        current = bits::minimal_members(&next);
    }
    let mut members = current;
    members.sort_by(|a, b| a.lex_cmp(*b));
    members
}

/// Facets are the maximal subsets containing no edge, found by direct
/// enumeration; an edgeless hypergraph yields the full simplex.
pub fn independence_complex(h: &Hypergraph) -> SimplicialComplex {
    if h.is_edgeless() {
        return SimplicialComplex::simplex(h.n);
    }
    let full = VertexSet::full(h.n);
    let independent = |s: VertexSet| !h.edges.iter().any(|e| e.is_subset_of(s));
    let mut facets = Vec::new();
    for s in full.subsets() {
        if !independent(s) {
            continue;
        }
        let maximal = full
            .difference(s)
            .iter()
            .all(|v| !independent(s.with(v)));
        if maximal {
            facets.push(s);
        }
    }
    SimplicialComplex::from_facets(h.n, facets)
}

/// Transversal number and independence number.
pub fn numbers(h: &Hypergraph) -> Result<(usize, usize)> {
    if h.is_edgeless() {
        return Err(Error::EdgelessHypergraph);
    }
    let tau = transversal_hypergraph(h)?.min_cardinality();
    let ind = independence_complex(h)
        .facets()
        .iter()
        .map(|f| f.len())
        .max()
        .unwrap_or(0);
    Ok((tau, ind))
}

/// A complete s-uniform t-partite hypergraph, described by its uniformity
/// and its side sizes. Sides are normalized to ascending order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PartiteSpec {
    s: usize,
    sides: Vec<usize>,
}

impl PartiteSpec {
    pub fn new(s: usize, sides: Vec<usize>) -> Result<PartiteSpec> {
        let t = sides.len();
        if s < 2 {
            return Err(Error::InvalidSpec(format!("uniformity {s} < 2")));
        }
        if s > t {
            return Err(Error::InvalidSpec(format!("uniformity {s} exceeds {t} sides")));
        }
        if sides.iter().any(|&m| m == 0) {
            return Err(Error::InvalidSpec("side of size zero".into()));
        }
        let mut sides = sides;
        sides.sort_unstable();
        Ok(PartiteSpec { s, sides })
    }

    pub fn uniformity(&self) -> usize {
        self.s
    }

    pub fn sides(&self) -> &[usize] {
        &self.sides
    }

    pub fn t(&self) -> usize {
        self.sides.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.sides.iter().sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.sides.iter().all(|&m| m == self.sides[0])
    }

    pub fn is_one_balanced(&self) -> bool {
        self.sides.iter().all(|&m| m == 1)
    }

    /// Number of singleton sides.
    pub fn singleton_sides(&self) -> usize {
        self.sides.iter().filter(|&&m| m == 1).count()
    }

    /// The vertex blocks of each side, allocated consecutively in side order.
    pub fn side_sets(&self) -> Vec<VertexSet> {
        let mut out = Vec::with_capacity(self.t());
        let mut offset = 0;
        for &m in &self.sides {
            out.push(VertexSet::from_iter(offset..offset + m));
            offset += m;
        }
        out
    }
}

impl std::fmt::Display for PartiteSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "s={} sides={}",
            self.s,
            self.sides.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// All edges picking one vertex from each of `s` distinct sides.
pub fn complete_multipartite(spec: &PartiteSpec) -> Hypergraph {
    let side_sets = spec.side_sets();
    let t = spec.t();
    let mut edges = Vec::new();
    let mut chosen_sides = Vec::new();
    collect_side_choices(&side_sets, 0, t, spec.uniformity(), &mut chosen_sides, &mut edges);
    Hypergraph::new(spec.n_vertices(), edges).expect("uniform edges form an antichain")
}

fn collect_side_choices(
    side_sets: &[VertexSet],
    from: usize,
    t: usize,
    remaining: usize,
    chosen: &mut Vec<VertexSet>,
    edges: &mut Vec<VertexSet>,
) {
    if remaining == 0 {
        expand_products(chosen, 0, VertexSet::EMPTY, edges);
        return;
    }
    if t - from < remaining {
        return;
    }
    for i in from..t {
        chosen.push(side_sets[i]);
        collect_side_choices(side_sets, i + 1, t, remaining - 1, chosen, edges);
        chosen.pop();
    }
}

fn expand_products(sides: &[VertexSet], at: usize, acc: VertexSet, edges: &mut Vec<VertexSet>) {
    if at == sides.len() {
        edges.push(acc);
        return;
    }
    for v in sides[at].iter() {
        expand_products(sides, at + 1, acc.with(v), edges);
    }
}

/// Closed forms for the basic invariants: with ascending sides,
/// `tau = ht = n_1 + .. + n_{t-s+1}` and `i = dim(R/I) = n_{t-s+2} + .. + n_t`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SpecInvariants {
    pub dim: usize,
    pub ht: usize,
    pub tau: usize,
    pub ind: usize,
}

pub fn spec_invariants(spec: &PartiteSpec) -> SpecInvariants {
    let cut = spec.t() - spec.uniformity() + 1;
    let tau: usize = spec.sides()[..cut].iter().sum();
    let ind: usize = spec.sides()[cut..].iter().sum();
    SpecInvariants { dim: ind, ht: tau, tau, ind }
}

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        HypergraphRepr {
            n: self.n,
            edges: self.edges.iter().map(|e| e.to_vec()).collect(),
            labels: self.labels.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = HypergraphRepr::deserialize(deserializer)?;
        let edges = repr.edges.iter().map(|e| VertexSet::from_iter(e.iter().copied())).collect();
        let mut h = Hypergraph::new(repr.n, edges).map_err(D::Error::custom)?;
        if let Some(labels) = repr.labels {
            h = h.with_labels(labels).map_err(D::Error::custom)?;
        }
        Ok(h)
    }
}
