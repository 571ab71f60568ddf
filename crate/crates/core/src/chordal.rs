//! Chordality of hypergraphs: every deletion/contraction minor must have a
//! simplicial vertex.

use serde::Serialize;

use crate::hypergraph::{is_simplicial_vertex, minor_states, Hypergraph, MinorState};

/// Per-minor witness recorded on success.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MinorWitness {
    /// Surviving original vertex ids of the minor.
    pub survivors: Vec<usize>,
    /// Edges of the minor over the original ids.
    pub edges: Vec<Vec<usize>>,
    /// A simplicial vertex (original id); `None` when the minor is
    /// edgeless and passes trivially.
    pub simplicial_vertex: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ChordalityTrace {
    pub minors_checked: usize,
    pub witnesses: Vec<MinorWitness>,
}

/// The minor enumeration deduplicates labeled states, which doubles as the
/// memoization: each reachable minor class is tested once.
pub fn is_chordal(h: &Hypergraph) -> (bool, Option<ChordalityTrace>) {
    let states = minor_states(h);
    let mut witnesses = Vec::with_capacity(states.len());
    for state in &states {
        match simplicial_witness(state) {
            Some(w) => witnesses.push(w),
            None => return (false, None),
        }
    }
    let trace = ChordalityTrace { minors_checked: states.len(), witnesses };
    (true, Some(trace))
}

fn simplicial_witness(state: &MinorState) -> Option<MinorWitness> {
    let survivors = state.survivors.to_vec();
    let edges: Vec<Vec<usize>> = state.edges.iter().map(|e| e.to_vec()).collect();
    if state.is_edgeless() {
        return Some(MinorWitness { survivors, edges, simplicial_vertex: None });
    }
    let h = state.to_hypergraph();
    for (rank, &original) in survivors.iter().enumerate() {
        if is_simplicial_vertex(&h, rank).expect("rank is in range") {
            return Some(MinorWitness {
                survivors,
                edges,
                simplicial_vertex: Some(original),
            });
        }
    }
    None
}
