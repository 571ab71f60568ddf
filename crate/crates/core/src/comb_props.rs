//! Shellability and vertex decomposability, with re-verifiable
//! certificates.

use dashmap::DashMap;
use once_cell::sync::Lazy;
use serde::Serialize;

use crate::bits::{self, VertexSet};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// An ordered facet list satisfying the shelling condition: for all `i` and
/// `j < i` there are `v ∈ F_i \ F_j` and `k < i` with `F_i \ F_k = {v}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ShellingCertificate {
    pub order: Vec<Vec<usize>>,
}

pub const SHELLING_FACET_CAP: usize = 24;

pub fn is_shellable(c: &SimplicialComplex) -> Result<(bool, Option<ShellingCertificate>)> {
    is_shellable_with_cap(c, SHELLING_FACET_CAP)
}

/// Backtracking over facet orderings; a prefix is abandoned as soon as the
/// newest facet violates the condition. Candidate facets are tried in
/// decreasing cardinality (a heuristic only; nothing here assumes shellings
/// start at top dimension), ties broken lexicographically.
pub fn is_shellable_with_cap(
    c: &SimplicialComplex,
    cap: usize,
) -> Result<(bool, Option<ShellingCertificate>)> {
    let facets = c.facets();
    if facets.len() > cap {
        return Err(Error::CapExceeded { what: "shelling search facets", actual: facets.len(), cap });
    }
    if facets.len() <= 1 {
        // void, irrelevant, and simplexes are shellable outright
        let order = facets.iter().map(|f| f.to_vec()).collect();
        return Ok((true, Some(ShellingCertificate { order })));
    }
    let mut candidates: Vec<VertexSet> = facets.to_vec();
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then(a.lex_cmp(*b)));
    let mut prefix: Vec<VertexSet> = Vec::with_capacity(candidates.len());
    let mut used = vec![false; candidates.len()];
    if extend_shelling(&candidates, &mut used, &mut prefix) {
        let order = prefix.iter().map(|f| f.to_vec()).collect();
        Ok((true, Some(ShellingCertificate { order })))
    } else {
        Ok((false, None))
    }
}

fn extend_shelling(candidates: &[VertexSet], used: &mut [bool], prefix: &mut Vec<VertexSet>) -> bool {
    if prefix.len() == candidates.len() {
        return true;
    }
    for idx in 0..candidates.len() {
        if used[idx] {
            continue;
        }
        let f = candidates[idx];
        if admits_next(prefix, f) {
            used[idx] = true;
            prefix.push(f);
            if extend_shelling(candidates, used, prefix) {
                return true;
            }
            prefix.pop();
            used[idx] = false;
        }
    }
    false
}

/// The condition at the newest facet only: earlier facets were checked when
/// they were appended.
fn admits_next(prefix: &[VertexSet], f: VertexSet) -> bool {
    if prefix.is_empty() {
        return true;
    }
    let mut singles = VertexSet::EMPTY;
    for &g in prefix {
        let diff = f.difference(g);
        if diff.len() == 1 {
            singles = singles.union(diff);
        }
    }
    if singles.is_empty() {
        return false;
    }
    prefix.iter().all(|&g| f.difference(g).intersects(singles))
}

/// Check a claimed shelling order against the raw definition.
pub fn verify_shelling(c: &SimplicialComplex, cert: &ShellingCertificate) -> bool {
    let order: Vec<VertexSet> = cert
        .order
        .iter()
        .map(|f| VertexSet::from_iter(f.iter().copied()))
        .collect();
    let mut sorted_claim = order.clone();
    sorted_claim.sort();
    let mut sorted_facets = c.facets().to_vec();
    sorted_facets.sort();
    if sorted_claim != sorted_facets {
        return false;
    }
    for i in 1..order.len() {
        for j in 0..i {
            let ok = order[i].difference(order[j]).iter().any(|v| {
                (0..i).any(|k| order[i].difference(order[k]) == VertexSet::singleton(v))
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Recursion tree for vertex decomposability.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SheddingCertificate {
    /// Void or irrelevant complex.
    Trivial,
    /// A single facet.
    Simplex { facet: Vec<usize> },
    Shed {
        vertex: usize,
        deletion: Box<SheddingCertificate>,
        link: Box<SheddingCertificate>,
    },
}

/// Facets of the deletion, kept in the ambient indexing.
fn deletion_facets(c: &SimplicialComplex, v: usize) -> Vec<VertexSet> {
    bits::maximal_members(
        &c.facets().iter().map(|f| f.without(v)).collect::<Vec<_>>(),
    )
}

/// Condition (2): no face of `lk {v}` is a facet of `Δ \ v`, checked
/// facet-wise — a facet `G` of the deletion lies in the link exactly when
/// `G ∪ {v}` is still a face.
fn is_shedding(c: &SimplicialComplex, v: usize) -> bool {
    deletion_facets(c, v)
        .iter()
        .all(|&g| !c.contains_face(g.with(v)))
}

/// All vertices satisfying the shedding condition at the top level.
pub fn shedding_vertices(c: &SimplicialComplex) -> Vec<usize> {
    (0..c.n_vertices()).filter(|&v| is_shedding(c, v)).collect()
}

const VD_CACHE_CAP: usize = 1 << 20;

static VD_CACHE: Lazy<DashMap<(usize, Vec<u64>), (bool, Option<SheddingCertificate>)>> =
    Lazy::new(DashMap::new);

/// Vertex decomposability: a simplex, or some shedding vertex whose
/// deletion and link are both vertex decomposable. The void and irrelevant
/// complexes count as decomposable. Memoized on exact facet keys.
pub fn is_vertex_decomposable(c: &SimplicialComplex) -> (bool, Option<SheddingCertificate>) {
    if c.is_void() || c.is_irrelevant() {
        return (true, Some(SheddingCertificate::Trivial));
    }
    if c.is_simplex() {
        let facet = c.facets()[0].to_vec();
        return (true, Some(SheddingCertificate::Simplex { facet }));
    }
    let key = (c.n_vertices(), c.facets().iter().map(|f| f.0).collect::<Vec<u64>>());
    if let Some(hit) = VD_CACHE.get(&key) {
        return hit.clone();
    }
    let mut result = (false, None);
    for v in 0..c.n_vertices() {
        if !is_shedding(c, v) {
            continue;
        }
        let (del_ok, del_cert) = is_vertex_decomposable(&c.vertex_deletion(v));
        if !del_ok {
            continue;
        }
        let lk = if c.contains_face(VertexSet::singleton(v)) {
            c.link(VertexSet::singleton(v)).expect("vertex face")
        } else {
            SimplicialComplex::void(c.n_vertices() - 1)
        };
        let (lk_ok, lk_cert) = is_vertex_decomposable(&lk);
        if !lk_ok {
            continue;
        }
        result = (
            true,
            Some(SheddingCertificate::Shed {
                vertex: v,
                deletion: Box::new(del_cert.expect("decomposable children carry certificates")),
                link: Box::new(lk_cert.expect("decomposable children carry certificates")),
            }),
        );
        break;
    }
    if VD_CACHE.len() < VD_CACHE_CAP {
        VD_CACHE.insert(key, result.clone());
        if VD_CACHE.len() % 4096 == 0 {
            log::debug!("vertex-decomposability cache at {} entries", VD_CACHE.len());
        }
    }
    result
}

/// Re-run the definition down a claimed shedding tree.
pub fn verify_shedding(c: &SimplicialComplex, cert: &SheddingCertificate) -> bool {
    match cert {
        SheddingCertificate::Trivial => c.is_void() || c.is_irrelevant(),
        SheddingCertificate::Simplex { facet } => {
            c.facets() == [VertexSet::from_iter(facet.iter().copied())]
        }
        SheddingCertificate::Shed { vertex, deletion, link } => {
            let v = *vertex;
            if v >= c.n_vertices() || !is_shedding(c, v) {
                return false;
            }
            let lk = if c.contains_face(VertexSet::singleton(v)) {
                c.link(VertexSet::singleton(v)).expect("vertex face")
            } else {
                SimplicialComplex::void(c.n_vertices() - 1)
            };
            verify_shedding(&c.vertex_deletion(v), deletion) && verify_shedding(&lk, link)
        }
    }
}
