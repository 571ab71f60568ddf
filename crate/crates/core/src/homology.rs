//! Reduced simplicial homology over a field, by boundary-matrix ranks.
//!
//! The chain complex is always augmented: the empty face spans `C_{-1}`, so
//! the irrelevant complex has one dimension of homology in degree -1. Ranks
//! over the rationals go through fraction-free integer elimination; prime
//! fields go through modular elimination.

use std::collections::BTreeMap;

use dashmap::DashMap;
use once_cell::sync::Lazy;
use serde::Serialize;

use crate::bits::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, PrimeField};
use crate::matrix::{rank_fraction_free, rank_over, IntMatrix};

/// `dims[i] = dim_K H̃_i(Δ; K)` for `i = -1, .., dim(Δ)`. Empty for the
/// void complex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HomologyProfile {
    pub dims: BTreeMap<i64, usize>,
}

impl HomologyProfile {
    pub fn dim_h(&self, i: i64) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.values().all(|&d| d == 0)
    }

    /// `Σ (-1)^i dim H̃_i`, the homological side of Euler-Poincaré.
    pub fn euler_sum(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&i, &d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Matrix of the boundary map `∂_i : C_i -> C_{i-1}` with the augmentation
/// included: rows and columns are the `(i-1)`- and `i`-faces in
/// lexicographic order, and the entry for deleting the `k`-th smallest
/// vertex of a face is `(-1)^k`.
pub fn boundary_matrix(c: &SimplicialComplex, i: i64) -> Result<IntMatrix> {
    let dim = c.dim().unwrap_or(-2);
    if i < -1 || i > dim {
        return Err(Error::ChainDegreeOutOfRange { i, dim });
    }
    if i == -1 {
        // C_{-1} -> 0
        return Ok(IntMatrix::zeros(0, 1));
    }
    let cols_faces = c.faces(i);
    let rows_faces = c.faces(i - 1);
    let row_index: BTreeMap<VertexSet, usize> =
        rows_faces.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let mut m = IntMatrix::zeros(rows_faces.len(), cols_faces.len());
    for (col, &f) in cols_faces.iter().enumerate() {
        for (k, v) in f.iter().enumerate() {
            let target = f.without(v);
            let row = row_index[&target];
            let sign = if k % 2 == 0 { 1 } else { -1 };
            m.set(row, col, sign);
        }
    }
    Ok(m)
}

fn rank_in(m: &IntMatrix, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => rank_fraction_free(m),
        FieldSpec::PrimeField(p) => {
            let f = PrimeField::new(p).expect("FieldSpec holds a prime");
            rank_over(&f, m)
        }
    }
}

static PROFILE_CACHE: Lazy<DashMap<(usize, Vec<u64>, FieldSpec), HomologyProfile>> =
    Lazy::new(DashMap::new);

/// `dim H̃_i = null(∂_i) - rank(∂_{i+1})` for `i = -1, .., dim(Δ)`.
/// Results are memoized on the exact facet key; links and induced
/// subcomplexes repeat heavily across the property oracles.
pub fn reduced_homology(c: &SimplicialComplex, field: FieldSpec) -> HomologyProfile {
    if c.is_void() {
        return HomologyProfile { dims: BTreeMap::new() };
    }
    let key = (
        c.n_vertices(),
        c.facets().iter().map(|f| f.0).collect::<Vec<u64>>(),
        field,
    );
    if let Some(hit) = PROFILE_CACHE.get(&key) {
        return hit.clone();
    }

    let dim = c.dim().unwrap();
    // ranks[k] = rank(∂_{k-1+0}) for k = 0..=dim, i.e. indexed by i = 0..=dim
    let mut ranks: Vec<usize> = Vec::with_capacity((dim + 1).max(0) as usize);
    let mut col_counts: Vec<usize> = Vec::with_capacity(ranks.capacity());
    for i in 0..=dim {
        let m = boundary_matrix(c, i).expect("degree in range");
        col_counts.push(m.cols());
        ranks.push(rank_in(&m, field));
    }
    let rank_at = |i: i64| -> usize {
        if (0..=dim).contains(&i) {
            ranks[i as usize]
        } else {
            0
        }
    };

    let mut dims = BTreeMap::new();
    dims.insert(-1, 1 - rank_at(0));
    for i in 0..=dim {
        let f_i = col_counts[i as usize];
        dims.insert(i, f_i - rank_at(i) - rank_at(i + 1));
    }
    let profile = HomologyProfile { dims };
    PROFILE_CACHE.insert(key, profile.clone());
    profile
}
