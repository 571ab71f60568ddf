//! Simplicial complexes stored by their facet antichain.
//!
//! Two degenerate complexes are kept distinct: the void complex `{}` with no
//! faces at all (no facets), and the irrelevant complex `{∅}` whose single
//! facet is the empty face.

use std::collections::HashSet;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{self, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::hypergraph::minimal_transversals_of;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Keep the inclusion-maximal members of `sets` as facets. No sets at
    /// all gives the void complex; `[∅]` gives the irrelevant complex.
    pub fn from_facets(n: usize, sets: Vec<VertexSet>) -> SimplicialComplex {
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!(sets.iter().all(|s| s.is_subset_of(VertexSet::full(n))));
        let mut facets = bits::maximal_members(&sets);
        facets.sort_by(|a, b| a.lex_cmp(*b));
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn irrelevant(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: vec![VertexSet::EMPTY] }
    }

    /// The full simplex on `[0, n)`.
    pub fn simplex(n: usize) -> SimplicialComplex {
        SimplicialComplex { n, facets: vec![VertexSet::full(n)] }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    /// A complex with a single facet is a simplex (possibly on a proper
    /// subset of the ambient vertices).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [VertexSet::full(self.n)]
    }

    /// `None` for the void complex, `Some(-1)` for the irrelevant one.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|&h| f.is_subset_of(h))
    }

    /// Every face, the empty face included (void: no faces at all). Sorted
    /// by cardinality then lexicographically.
    pub fn all_faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for &f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.lex_cmp(*b)));
        faces
    }

    /// Faces of the given dimension, in lexicographic order.
    pub fn faces(&self, dim: i64) -> Vec<VertexSet> {
        let card = (dim + 1) as usize;
        let mut out: Vec<VertexSet> = self
            .all_faces()
            .into_iter()
            .filter(|f| f.len() == card)
            .collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }

    pub fn f_vector(&self) -> FVector {
        if self.is_void() {
            return FVector { counts: Vec::new() };
        }
        let dim = self.dim().unwrap();
        let mut counts = vec![0usize; (dim + 2) as usize];
        for f in self.all_faces() {
            counts[f.len()] += 1;
        }
        FVector { counts }
    }

    /// `χ̃ = -1 + Σ (-1)^i f_i`; zero for the void complex.
    pub fn reduced_euler(&self) -> i64 {
        let fv = self.f_vector();
        let mut chi = 0i64;
        for (card, &count) in fv.counts.iter().enumerate() {
            // card = i + 1, so the sign of f_i is (-1)^(card-1)
            let sign = if card % 2 == 0 { -1 } else { 1 };
            chi += sign * count as i64;
        }
        chi
    }

    /// `lk F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`, re-indexed over `V \ F`.
    pub fn link(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains_face(f) {
            return Err(Error::FaceNotInComplex(format!("{f:?}")));
        }
        let keep = VertexSet::full(self.n).difference(f);
        let facets = self
            .facets
            .iter()
            .filter(|h| f.is_subset_of(**h))
            .map(|h| h.difference(f).compress(keep))
            .collect();
        Ok(SimplicialComplex::from_facets(self.n - f.len(), facets))
    }

    /// `st F = {G : G ∪ F ∈ Δ}`, on the same vertex set.
    pub fn star(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains_face(f) {
            return Err(Error::FaceNotInComplex(format!("{f:?}")));
        }
        let facets = self
            .facets
            .iter()
            .filter(|h| f.is_subset_of(**h))
            .copied()
            .collect();
        Ok(SimplicialComplex::from_facets(self.n, facets))
    }

    /// Remove every face containing `v`; re-indexed over `V \ {v}`.
    pub fn vertex_deletion(&self, v: usize) -> SimplicialComplex {
        debug_assert!(v < self.n);
        let keep = VertexSet::full(self.n).without(v);
        let facets = self
            .facets
            .iter()
            .map(|h| h.without(v).compress(keep))
            .collect();
        SimplicialComplex::from_facets(self.n - 1, facets)
    }

    /// `Δ_S = {F ∈ Δ : F ⊆ S}`, re-indexed over `S`.
    pub fn induced(&self, s: VertexSet) -> Result<SimplicialComplex> {
        if !s.is_subset_of(VertexSet::full(self.n)) {
            return Err(Error::NotASubset(format!("{s:?}")));
        }
        let facets = self
            .facets
            .iter()
            .map(|h| h.intersection(s).compress(s))
            .collect();
        Ok(SimplicialComplex::from_facets(s.len(), facets))
    }

    /// The pure subcomplex generated by all faces of cardinality `i + 1`.
    pub fn pure_skeleton(&self, i: usize) -> Result<SimplicialComplex> {
        let dim = self.dim().unwrap_or(-1);
        if (i as i64) > dim {
            return Err(Error::SkeletonOutOfRange { i, dim });
        }
        Ok(SimplicialComplex {
            n: self.n,
            facets: self.faces(i as i64),
        })
    }

    /// Facet-path connectivity; the void and irrelevant complexes count as
    /// connected.
    pub fn is_connected(&self) -> bool {
        let m = self.facets.len();
        if m <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for a in 0..m {
            for b in a + 1..m {
                if self.facets[a].intersects(self.facets[b]) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    parent[ra] = rb;
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..m).all(|x| find(&mut parent, x) == root)
    }

    /// Join on concatenated vertex sets; the second factor is shifted past
    /// the first.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let n = self.n + other.n;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(a.union(VertexSet(b.0 << self.n)));
            }
        }
        SimplicialComplex::from_facets(n, facets)
    }

    /// Inclusion-minimal sets outside the complex. A minimal non-face is
    /// exactly a minimal transversal of the facet complements.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        if self.is_void() {
            // the empty face is already missing
            return vec![VertexSet::EMPTY];
        }
        if self.is_full_simplex() {
            return Vec::new();
        }
        let complements: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|f| f.complement(self.n))
            .collect();
        minimal_transversals_of(&complements)
    }

    /// `Δ^∨ = {Fᶜ : F ∉ Δ}`. The dual of the full simplex is the void
    /// complex; the dual of the void complex is rejected.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        if self.is_void() {
            return Err(Error::DualOfVoid);
        }
        if self.is_full_simplex() {
            return Ok(SimplicialComplex::void(self.n));
        }
        let facets = self
            .minimal_nonfaces()
            .into_iter()
            .map(|m| m.complement(self.n))
            .collect();
        Ok(SimplicialComplex::from_facets(self.n, facets))
    }

    /// Induced subcomplex on `core(V) = {v : st{v} ≠ Δ}`, i.e. on the
    /// vertices missed by at least one facet.
    pub fn core(&self) -> SimplicialComplex {
        let cone_points = self
            .facets
            .iter()
            .fold(VertexSet::full(self.n), |acc, &f| acc.intersection(f));
        let core_v = cone_points.complement(self.n);
        self.induced(core_v).expect("core vertices are in range")
    }

    /// Exchange axiom over all face pairs.
    pub fn is_matroid(&self) -> bool {
        let faces = self.all_faces();
        for &f in &faces {
            for &g in &faces {
                if f.len() > g.len() {
                    let can_extend = f
                        .difference(g)
                        .iter()
                        .any(|x| self.contains_face(g.with(x)));
                    if !can_extend {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Face counts by dimension, `counts[k] = f_{k-1}` (so `counts[0]` is the
/// conventional `f_{-1} = 1`). Empty for the void complex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FVector {
    pub counts: Vec<usize>,
}

impl FVector {
    /// `f_i`, zero outside the stored range.
    pub fn f(&self, i: i64) -> usize {
        let idx = i + 1;
        if idx < 0 {
            return 0;
        }
        self.counts.get(idx as usize).copied().unwrap_or(0)
    }
}

/// Outcome of the tight-complex search.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TightnessReport {
    pub value: bool,
    /// A witness labelling (vertex -> rank) when tight.
    pub labelling: Option<Vec<usize>>,
    /// Set when the input was rejected for impurity.
    pub not_pure: bool,
}

pub const TIGHTNESS_VERTEX_CAP: usize = 12;

pub fn is_tight(c: &SimplicialComplex) -> Result<TightnessReport> {
    is_tight_with_cap(c, TIGHTNESS_VERTEX_CAP)
}

/// Search for a vertex labelling witnessing tightness: for facets `G1, G2`
/// and `i ∈ G1\G2`, `j ∈ G2\G1` with `i < j`, some `j' ∈ G1\G2` must make
/// `(G2\{j}) ∪ {j'}` a facet. Triples failing the exchange force `j` below
/// all of `G1\G2`, so the search walks orders consistent with those
/// precedences and prunes everything else.
pub fn is_tight_with_cap(c: &SimplicialComplex, cap: usize) -> Result<TightnessReport> {
    if c.n_vertices() > cap {
        return Err(Error::CapExceeded {
            what: "tightness search vertices",
            actual: c.n_vertices(),
            cap,
        });
    }
    if !c.is_pure() {
        return Ok(TightnessReport { value: false, labelling: None, not_pure: true });
    }
    let n = c.n_vertices();
    let facets = c.facets();
    let is_facet = |s: VertexSet| facets.contains(&s);

    // must_precede[u]: vertices that have to be labelled before u
    let mut must_precede: Vec<VertexSet> = vec![VertexSet::EMPTY; n];
    for &g1 in facets {
        for &g2 in facets {
            if g1 == g2 {
                continue;
            }
            let only_g1 = g1.difference(g2);
            for j in g2.difference(g1).iter() {
                let exchange_ok = only_g1
                    .iter()
                    .any(|jp| is_facet(g2.without(j).with(jp)));
                if !exchange_ok {
                    for i in only_g1.iter() {
                        must_precede[i].insert(j);
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    if place_next(n, &must_precede, &mut order, &mut placed) {
        let mut labelling = vec![0usize; n];
        for (rank, &v) in order.iter().enumerate() {
            labelling[v] = rank;
        }
        Ok(TightnessReport { value: true, labelling: Some(labelling), not_pure: false })
    } else {
        Ok(TightnessReport { value: false, labelling: None, not_pure: false })
    }
}

fn place_next(
    n: usize,
    must_precede: &[VertexSet],
    order: &mut Vec<usize>,
    placed: &mut VertexSet,
) -> bool {
    if order.len() == n {
        return true;
    }
    for v in 0..n {
        if placed.contains(v) || !must_precede[v].is_subset_of(*placed) {
            continue;
        }
        order.push(v);
        placed.insert(v);
        if place_next(n, must_precede, order, placed) {
            return true;
        }
        order.pop();
        placed.remove(v);
    }
    false
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    n: usize,
    facets: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    void: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    irrelevant: Option<bool>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexRepr {
            n: self.n,
            facets: self.facets.iter().map(|f| f.to_vec()).collect(),
            void: self.is_void().then_some(true),
            irrelevant: self.is_irrelevant().then_some(true),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ComplexRepr::deserialize(deserializer)?;
        if repr.n > MAX_VERTICES {
            return Err(D::Error::custom(format!("at most {MAX_VERTICES} vertices")));
        }
        if repr.void == Some(true) && !repr.facets.is_empty() {
            return Err(D::Error::custom("void complex cannot list facets"));
        }
        if repr.irrelevant == Some(true) && !repr.facets.iter().all(|f| f.is_empty()) {
            return Err(D::Error::custom("irrelevant complex has only the empty facet"));
        }
        if repr.irrelevant == Some(true) {
            return Ok(SimplicialComplex::irrelevant(repr.n));
        }
        let full = VertexSet::full(repr.n);
        let mut sets = Vec::with_capacity(repr.facets.len());
        for f in &repr.facets {
            let s = VertexSet::from_iter(f.iter().copied());
            if !s.is_subset_of(full) {
                return Err(D::Error::custom(format!("facet {f:?} out of range")));
            }
            sets.push(s);
        }
        Ok(SimplicialComplex::from_facets(repr.n, sets))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(vals: &[usize]) -> VertexSet {
        VertexSet::from_iter(vals.iter().copied())
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| vs(f)).collect())
    }

    fn triangle_boundary() -> SimplicialComplex {
        complex(3, &[&[0, 1], &[0, 2], &[1, 2]])
    }

    fn two_disjoint_edges() -> SimplicialComplex {
        complex(4, &[&[0, 1], &[2, 3]])
    }

    #[test]
    fn from_facets_keeps_maximal_members() {
        let c = complex(3, &[&[0, 1], &[0], &[0, 2]]);
        assert_eq!(c.facets(), &[vs(&[0, 1]), vs(&[0, 2])]);

        let c = SimplicialComplex::from_facets(2, vec![VertexSet::EMPTY]);
        assert!(c.is_irrelevant());
        assert_eq!(c.dim(), Some(-1));

        let c = SimplicialComplex::from_facets(0, vec![]);
        assert!(c.is_void());
        assert_eq!(c.dim(), None);
    }

    #[test]
    fn f_vectors_and_euler() {
        let fv = triangle_boundary().f_vector();
        assert_eq!(fv.counts, vec![1, 3, 3]);
        assert_eq!(triangle_boundary().reduced_euler(), -1);

        assert_eq!(SimplicialComplex::simplex(3).f_vector().counts, vec![1, 3, 3, 1]);
        assert_eq!(SimplicialComplex::simplex(3).reduced_euler(), 0);

        let points = complex(3, &[&[0], &[1], &[2]]);
        assert_eq!(points.reduced_euler(), 2);

        assert_eq!(SimplicialComplex::void(0).reduced_euler(), 0);
        assert_eq!(SimplicialComplex::irrelevant(2).reduced_euler(), -1);
    }

    #[test]
    fn links_and_stars() {
        let c = triangle_boundary();
        let lk = c.link(vs(&[0])).unwrap();
        // vertices {1,2} re-indexed to {0,1}
        assert_eq!(lk.facets(), &[vs(&[0]), vs(&[1])]);

        assert_eq!(c.link(VertexSet::EMPTY).unwrap(), c);
        assert!(c.link(vs(&[0, 1, 2])).is_err());

        let ind_c4 = two_disjoint_edges();
        let lk = ind_c4.link(vs(&[0])).unwrap();
        assert_eq!(lk.facets(), &[vs(&[0])]); // the old vertex 1

        let st = c.star(vs(&[0])).unwrap();
        assert_eq!(st.facets(), &[vs(&[0, 1]), vs(&[0, 2])]);
    }

    #[test]
    fn deletion_and_induced() {
        let c = triangle_boundary();
        assert_eq!(c.vertex_deletion(0).facets(), &[vs(&[0, 1])]);

        let s = SimplicialComplex::simplex(3);
        assert_eq!(s.vertex_deletion(0), SimplicialComplex::simplex(2));

        let c = two_disjoint_edges();
        assert_eq!(c.vertex_deletion(0).facets(), &[vs(&[0]), vs(&[1, 2])]);

        // induced on V minus a vertex agrees with deletion
        let keep = VertexSet::full(4).without(0);
        assert_eq!(c.induced(keep).unwrap(), c.vertex_deletion(0));
        assert!(c.induced(vs(&[9])).is_err());
    }

    #[test]
    fn skeleta() {
        let c = complex(5, &[&[0], &[1], &[2, 3, 4]]);
        let sk = c.pure_skeleton(0).unwrap();
        assert_eq!(sk.facets().len(), 5);

        let c = two_disjoint_edges();
        assert_eq!(c.pure_skeleton(1).unwrap(), c);

        let sk = SimplicialComplex::simplex(3).pure_skeleton(1).unwrap();
        assert_eq!(sk, triangle_boundary());

        assert!(c.pure_skeleton(2).is_err());
        assert!(SimplicialComplex::void(0).pure_skeleton(0).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(!two_disjoint_edges().is_connected());
        assert!(triangle_boundary().is_connected());
        assert!(complex(1, &[&[0]]).is_connected());
        assert!(SimplicialComplex::void(0).is_connected());
        assert!(SimplicialComplex::irrelevant(1).is_connected());
    }

    #[test]
    fn joins() {
        let c = triangle_boundary();
        let j = SimplicialComplex::irrelevant(0).join(&c);
        assert_eq!(j, c);

        let p = complex(1, &[&[0]]);
        assert_eq!(p.join(&p).facets(), &[vs(&[0, 1])]);

        // simplex {a} joined with {b},{c,d}: facets {a,b} and {a,c,d}
        let gamma = complex(1, &[&[0]]);
        let ind = complex(3, &[&[0], &[1, 2]]);
        let j = gamma.join(&ind);
        assert_eq!(j.facets(), &[vs(&[0, 1]), vs(&[0, 2, 3])]);
    }

    #[test]
    fn alexander_duals() {
        let c = two_disjoint_edges();
        let dual = c.alexander_dual().unwrap();
        assert_eq!(
            dual.facets(),
            &[vs(&[0, 2]), vs(&[0, 3]), vs(&[1, 2]), vs(&[1, 3])]
        );
        assert_eq!(dual.alexander_dual().unwrap(), c);

        // dual of the boundary of a simplex is the irrelevant complex
        let two_points = complex(2, &[&[0], &[1]]);
        assert!(two_points.alexander_dual().unwrap().is_irrelevant());
        assert_eq!(
            SimplicialComplex::irrelevant(2).alexander_dual().unwrap(),
            two_points
        );

        assert!(SimplicialComplex::simplex(2).alexander_dual().unwrap().is_void());
        assert!(SimplicialComplex::void(2).alexander_dual().is_err());
    }

    #[test]
    fn cores() {
        let c = triangle_boundary();
        assert_eq!(c.core(), c);

        assert!(SimplicialComplex::simplex(3).core().is_irrelevant());

        let cone = complex(3, &[&[0, 1], &[0, 2]]);
        assert_eq!(cone.core().facets(), &[vs(&[0]), vs(&[1])]);
    }

    #[test]
    fn matroid_checks() {
        // all subsets of cardinality <= 2 on 4 vertices: the uniform matroid
        let mut facets = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                facets.push(vs(&[a, b]));
            }
        }
        let uniform = SimplicialComplex::from_facets(4, facets);
        assert!(uniform.is_matroid());

        assert!(!two_disjoint_edges().is_matroid());
        assert!(SimplicialComplex::simplex(3).is_matroid());
    }

    #[test]
    fn tightness() {
        let r = is_tight(&two_disjoint_edges()).unwrap();
        assert!(!r.value);

        let single = complex(3, &[&[0, 1, 2]]);
        assert!(is_tight(&single).unwrap().value);

        let impure = complex(3, &[&[0], &[1, 2]]);
        let r = is_tight(&impure).unwrap();
        assert!(!r.value);
        assert!(r.not_pure);

        let big = SimplicialComplex::simplex(13);
        assert!(matches!(is_tight(&big), Err(Error::CapExceeded { .. })));
        assert!(is_tight_with_cap(&big, 13).unwrap().value);
    }

    #[test]
    fn json_round_trip() {
        let c = two_disjoint_edges();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"n":4,"facets":[[0,1],[2,3]]}"#);
        assert_eq!(serde_json::from_str::<SimplicialComplex>(&s).unwrap(), c);

        let v: SimplicialComplex =
            serde_json::from_str(r#"{"n":2,"facets":[],"void":true}"#).unwrap();
        assert!(v.is_void());
        let i: SimplicialComplex =
            serde_json::from_str(r#"{"n":2,"facets":[[]],"irrelevant":true}"#).unwrap();
        assert!(i.is_irrelevant());
    }
}
