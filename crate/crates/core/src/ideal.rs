//! Squarefree monomial ideals, stored as the antichain of generator
//! supports. Models edge ideals, face (Stanley-Reisner) ideals and their
//! Alexander duals.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{self, VertexSet, MAX_VERTICES};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hypergraph::{minimal_transversals_of, Hypergraph};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<VertexSet>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<VertexSet>) -> Result<MonomialIdeal> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidHypergraph(format!(
                "at most {MAX_VERTICES} variables supported, got {n}"
            )));
        }
        let full = VertexSet::full(n);
        let mut gens = gens;
        gens.sort_by(|a, b| a.lex_cmp(*b));
        gens.dedup();
        for &g in &gens {
            if g.is_empty() {
                return Err(Error::InvalidHypergraph("unit generator".into()));
            }
            if !g.is_subset_of(full) {
                return Err(Error::InvalidHypergraph(format!("generator {g:?} out of range")));
            }
        }
        if !bits::is_antichain(&gens) {
            return Err(Error::InvalidHypergraph("generators are not minimal".into()));
        }
        Ok(MonomialIdeal { n, gens })
    }

    pub fn zero(n: usize) -> MonomialIdeal {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    /// Is the monomial with this squarefree support in the ideal?
    pub fn contains_support(&self, s: VertexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset_of(s))
    }

    /// All generators of equal degree? Returns that degree.
    pub fn equigenerated_degree(&self) -> Result<usize> {
        let first = self.gens.first().ok_or(Error::ZeroIdeal)?;
        if self.gens.iter().all(|g| g.len() == first.len()) {
            Ok(first.len())
        } else {
            Err(Error::NotEquigenerated)
        }
    }

    /// Height: the least size of a prime containing the ideal, i.e. the
    /// least cardinality of a transversal of the generator supports.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(minimal_transversals_of(&self.gens)
            .iter()
            .map(|t| t.len())
            .min()
            .expect("nonzero ideal has a transversal"))
    }

    /// Squarefree Alexander dual: expand the intersection of the variable
    /// primes of the generators, i.e. take minimal transversals.
    pub fn dual(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimal_transversals_of(&self.gens),
        })
    }

    /// The complex whose face ideal this is: faces are the supports
    /// containing no generator.
    pub fn complex(&self) -> SimplicialComplex {
        let as_hypergraph = Hypergraph::new(self.n, self.gens.clone())
            .expect("generator antichain is a simple hypergraph");
        crate::hypergraph::independence_complex(&as_hypergraph)
    }
}

/// `I(H) = (x^e : e ∈ H)`.
pub fn edge_ideal(h: &Hypergraph) -> MonomialIdeal {
    MonomialIdeal {
        n: h.n_vertices(),
        gens: h.edges().to_vec(),
    }
}

/// `I_Δ = (x^F : F ∉ Δ)`, generated by the minimal non-faces. Undefined
/// for the void complex (whose face ideal is the unit ideal).
pub fn stanley_reisner(c: &SimplicialComplex) -> Result<MonomialIdeal> {
    if c.is_void() {
        return Err(Error::InvalidComplex(
            "void complex has the unit face ideal".into(),
        ));
    }
    Ok(MonomialIdeal {
        n: c.n_vertices(),
        gens: c.minimal_nonfaces(),
    })
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    gens: Vec<Vec<usize>>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRepr {
            n: self.n,
            gens: self.gens.iter().map(|g| g.to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = IdealRepr::deserialize(deserializer)?;
        let gens = repr.gens.iter().map(|g| VertexSet::from_iter(g.iter().copied())).collect();
        MonomialIdeal::new(repr.n, gens).map_err(D::Error::custom)
    }
}
