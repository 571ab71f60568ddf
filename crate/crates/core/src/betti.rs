//! Graded Betti numbers of Stanley-Reisner rings, computed from reduced
//! homology of induced subcomplexes, plus the consumers that need them:
//! projective dimension, levelness, linear resolutions and the weakly
//! polymatroidal order search.
//!
//! No free resolution is ever built; every entry is a sum of homology
//! dimensions, which keeps the computation exact and desk-scale honest.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::reduced_homology;
use crate::ideal::MonomialIdeal;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableOf {
    Quotient,
    Ideal,
}

/// Finitely many nonzero graded Betti numbers, keyed by `(i, j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    pub of: TableOf,
    pub entries: BTreeMap<(usize, usize), usize>,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let entries: BTreeMap<String, usize> = self
            .entries
            .iter()
            .map(|(&(i, j), &v)| (format!("({i},{j})"), v))
            .collect();
        let mut s = serializer.serialize_struct("BettiTable", 2)?;
        s.serialize_field("of", &self.of)?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Internal degrees appearing in homological degree `i`.
    pub fn degrees_in_row(&self, i: usize) -> Vec<usize> {
        self.entries
            .keys()
            .filter(|&&(row, _)| row == i)
            .map(|&(_, j)| j)
            .collect()
    }

    /// Macaulay-style text: homological degree as columns, `j - i` as rows.
    pub fn macaulay_rows(&self) -> String {
        let pd = self.projective_dimension();
        let max_shift = self
            .entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        out.push_str("      ");
        for i in 0..=pd {
            out.push_str(&format!("{i:>6}"));
        }
        out.push('\n');
        for shift in 0..=max_shift {
            out.push_str(&format!("{shift:>5}:"));
            for i in 0..=pd {
                let val = self.get(i, i + shift);
                if val == 0 {
                    out.push_str(&format!("{:>6}", "."));
                } else {
                    out.push_str(&format!("{val:>6}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

pub const BETTI_VERTEX_CAP: usize = 12;

/// Betti table of `R/I_Δ`: `β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_W)`.
/// The sum over `W = ∅` contributes the conventional `β_{0,0} = 1`.
pub fn graded_betti(c: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    graded_betti_with_cap(c, field, BETTI_VERTEX_CAP)
}

pub fn graded_betti_with_cap(
    c: &SimplicialComplex,
    field: FieldSpec,
    cap: usize,
) -> Result<BettiTable> {
    hochster_table(c, field, cap, TableOf::Quotient)
}

/// Betti table of the ideal `I_Δ` itself: `β_{i,j} = Σ_{|W|=j} dim
/// H̃_{j-i-2}(Δ_W)`. Shifted by one against the quotient table, which the
/// tests assert.
pub fn graded_betti_ideal(c: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    hochster_table(c, field, BETTI_VERTEX_CAP, TableOf::Ideal)
}

fn hochster_table(
    c: &SimplicialComplex,
    field: FieldSpec,
    cap: usize,
    of: TableOf,
) -> Result<BettiTable> {
    if c.is_void() {
        return Err(Error::InvalidComplex(
            "void complex has the unit face ideal".into(),
        ));
    }
    let n = c.n_vertices();
    if n > cap {
        return Err(Error::CapExceeded { what: "Hochster sum vertices", actual: n, cap });
    }
    let offset: i64 = match of {
        TableOf::Quotient => 1,
        TableOf::Ideal => 2,
    };
    let mut entries: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for w in VertexSet::full(n).subsets() {
        let sub = c.induced(w).expect("subset of the vertex set");
        let profile = reduced_homology(&sub, field);
        let j = w.len() as i64;
        for (&hom_deg, &d) in &profile.dims {
            if d == 0 {
                continue;
            }
            let i = j - hom_deg - offset;
            if i < 0 {
                continue;
            }
            *entries.entry((i as usize, j as usize)).or_insert(0) += d;
        }
    }
    Ok(BettiTable { of, entries })
}

/// Level means Cohen-Macaulay with the top of the resolution concentrated
/// in a single internal degree.
pub fn is_level(c: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    is_level_with_cap(c, field, BETTI_VERTEX_CAP)
}

pub fn is_level_with_cap(c: &SimplicialComplex, field: FieldSpec, cap: usize) -> Result<bool> {
    let cm = crate::alg_props::is_cm_reisner(c, field);
    if !cm.value {
        return Ok(false);
    }
    let table = graded_betti_with_cap(c, field, cap)?;
    let pd = table.projective_dimension();
    let degrees = table.degrees_in_row(pd);
    Ok(degrees.len() == 1)
}

/// An equigenerated ideal has a linear resolution when its Betti numbers
/// sit on the single diagonal `j = i + d`.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    has_linear_resolution_with_cap(ideal, field, BETTI_VERTEX_CAP)
}

pub fn has_linear_resolution_with_cap(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    cap: usize,
) -> Result<bool> {
    let d = ideal.equigenerated_degree()?;
    let table = hochster_table(&ideal.complex(), field, cap, TableOf::Quotient)?;
    Ok(table
        .entries
        .iter()
        .all(|(&(i, j), &v)| v == 0 || i == 0 || j == i - 1 + d))
}

pub const WPM_VERTEX_CAP: usize = 8;

/// Search for a variable order witnessing weak polymatroidality: whenever
/// two generators first differ at a position where `u` has the variable and
/// `v` does not, some later variable of `v` can be swapped for it inside
/// the ideal. Failing pairs prune the prefix immediately.
pub fn is_weakly_polymatroidal(ideal: &MonomialIdeal) -> Result<(bool, Option<Vec<usize>>)> {
    let n = ideal.n_vars();
    if n > WPM_VERTEX_CAP {
        return Err(Error::CapExceeded {
            what: "weakly polymatroidal order search vertices",
            actual: n,
            cap: WPM_VERTEX_CAP,
        });
    }
    ideal.equigenerated_degree()?;
    let mut prefix = Vec::with_capacity(n);
    if wpm_search(ideal, n, &mut prefix, VertexSet::EMPTY) {
        Ok((true, Some(prefix)))
    } else {
        Ok((false, None))
    }
}

fn wpm_search(
    ideal: &MonomialIdeal,
    n: usize,
    prefix: &mut Vec<usize>,
    used: VertexSet,
) -> bool {
    if prefix.len() == n {
        return true;
    }
    for x in 0..n {
        if used.contains(x) {
            continue;
        }
        if wpm_prefix_ok(ideal, x, used) {
            prefix.push(x);
            if wpm_search(ideal, n, prefix, used.with(x)) {
                return true;
            }
            prefix.pop();
        }
    }
    false
}

/// Check every generator pair whose first difference lands on the variable
/// `x` just being placed after the prefix `used`.
fn wpm_prefix_ok(ideal: &MonomialIdeal, x: usize, used: VertexSet) -> bool {
    let gens = ideal.generators();
    let placed = used.with(x);
    for &u in gens {
        if !u.contains(x) {
            continue;
        }
        for &v in gens {
            if v == u || v.contains(x) {
                continue;
            }
            if u.intersection(used) != v.intersection(used) {
                continue; // they already differed earlier in the order
            }
            let later_vars = v.difference(placed);
            let fixable = later_vars
                .iter()
                .any(|j| ideal.contains_support(v.without(j).with(x)));
            if !fixable {
                return false;
            }
        }
    }
    true
}
