//! Closed-form classification of complete uniform multipartite hypergraphs:
//! every property is decided directly from the uniformity and the sorted
//! side sizes, with no homology in sight. The sweep harness checks these
//! answers against the definitional oracles.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::betti::WPM_VERTEX_CAP;
use crate::complex::TIGHTNESS_VERTEX_CAP;
use crate::error::{Error, Result};
use crate::hypergraph::{spec_invariants, PartiteSpec, SpecInvariants};

/// Closed-form answers for one spec. `perturbed` flips the one-balanced
/// test and exists only for harness fault-injection self-tests.
#[derive(Clone, Copy, Debug)]
pub struct Classifier<'a> {
    spec: &'a PartiteSpec,
    perturbed: bool,
}

impl<'a> Classifier<'a> {
    pub fn new(spec: &'a PartiteSpec) -> Self {
        Classifier { spec, perturbed: false }
    }

    pub fn perturbed(spec: &'a PartiteSpec) -> Self {
        Classifier { spec, perturbed: true }
    }

    fn one_balanced(&self) -> bool {
        self.spec.is_one_balanced() ^ self.perturbed
    }

    fn deficiency(&self) -> usize {
        // t - s + 2, the largest l the l-fold properties survive
        self.spec.t() - self.spec.uniformity() + 2
    }

    pub fn unmixed(&self) -> bool {
        self.spec.is_balanced()
    }

    /// Shared by level, CM, all Serre conditions, matroidness and tightness.
    pub fn cm(&self) -> bool {
        self.one_balanced()
    }

    pub fn l_cm(&self, l: usize) -> bool {
        self.one_balanced() && l <= self.deficiency()
    }

    pub fn buchsbaum(&self) -> bool {
        if self.spec.uniformity() >= 3 {
            self.one_balanced()
        } else {
            self.unmixed()
        }
    }

    pub fn l_buchsbaum(&self, l: usize) -> bool {
        if l == 1 {
            self.buchsbaum()
        } else {
            // graphs lose the l-fold property for l >= 2 unless complete
            self.one_balanced() && l <= self.deficiency()
        }
    }

    /// Gorenstein and complete intersection coincide: single colorful edge.
    pub fn gorenstein(&self) -> bool {
        self.spec.uniformity() == self.spec.t() && self.one_balanced()
    }

    pub fn ci(&self) -> bool {
        self.gorenstein()
    }

    pub fn almost_ci(&self) -> bool {
        let s = self.spec.uniformity();
        let t = self.spec.t();
        let sides = self.spec.sides();
        let triangle = s == 2 && t == 3 && self.one_balanced();
        let double_edge = s == t && self.spec.singleton_sides() == t - 1 && sides[t - 1] == 2;
        triangle || double_edge
    }

    /// Shared by sequential CM, sequential S_r, shellability, vertex
    /// decomposability and chordality.
    pub fn sequential(&self) -> bool {
        self.spec.singleton_sides() >= self.spec.t() - 1
    }

    pub fn chordal(&self) -> bool {
        self.sequential()
    }

    pub fn dual_cm(&self) -> bool {
        true
    }

    pub fn dual_ci(&self) -> bool {
        self.spec.uniformity() == self.spec.t()
    }

    pub fn linear_resolution(&self) -> bool {
        true
    }

    pub fn weakly_polymatroidal(&self) -> bool {
        true
    }
}

/// Per-property booleans with the derived invariants and the rule names
/// that produced them.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub spec: PartiteSpec,
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub balanced: bool,
    pub one_balanced: bool,
    pub invariants: SpecInvariants,
    pub properties: BTreeMap<String, bool>,
    /// Entries the library has no independent oracle for at these
    /// parameters; everything else is sweep-checkable.
    pub closed_form_only: Vec<String>,
    pub rules: Vec<&'static str>,
}

/// Evaluate every closed form at the given `l` and `r`.
pub fn classify(spec: &PartiteSpec, l: usize, r: usize) -> Result<ClassificationReport> {
    if l < 1 {
        return Err(Error::LevelParameterZero);
    }
    if r < 2 {
        return Err(Error::SerreIndexTooSmall { r });
    }
    let cls = Classifier::new(spec);
    let mut properties = BTreeMap::new();
    properties.insert("unmixed".into(), cls.unmixed());
    properties.insert("cm".into(), cls.cm());
    properties.insert("level".into(), cls.cm());
    properties.insert(format!("s_r:{r}"), cls.cm());
    properties.insert("matroid".into(), cls.cm());
    properties.insert("tight".into(), cls.cm());
    properties.insert("buchsbaum".into(), cls.buchsbaum());
    properties.insert(format!("l_cm:{l}"), cls.l_cm(l));
    properties.insert(format!("l_buchsbaum:{l}"), cls.l_buchsbaum(l));
    properties.insert("gorenstein".into(), cls.gorenstein());
    properties.insert("ci".into(), cls.ci());
    properties.insert("almost_ci".into(), cls.almost_ci());
    properties.insert("seq_cm".into(), cls.sequential());
    properties.insert(format!("seq_s_r:{r}"), cls.sequential());
    properties.insert("shellable".into(), cls.sequential());
    properties.insert("vertex_decomposable".into(), cls.sequential());
    properties.insert("chordal".into(), cls.chordal());
    properties.insert("dual_cm".into(), cls.dual_cm());
    properties.insert("dual_ci".into(), cls.dual_ci());
    properties.insert("linear_resolution".into(), cls.linear_resolution());
    properties.insert("weakly_polymatroidal".into(), cls.weakly_polymatroidal());

    let n = spec.n_vertices();
    let mut closed_form_only = Vec::new();
    if r >= 3 {
        closed_form_only.push(format!("seq_s_r:{r}"));
    }
    if n > TIGHTNESS_VERTEX_CAP {
        closed_form_only.push("tight".into());
    }
    if n > WPM_VERTEX_CAP {
        closed_form_only.push("weakly_polymatroidal".into());
    }

    Ok(ClassificationReport {
        spec: spec.clone(),
        n,
        s: spec.uniformity(),
        t: spec.t(),
        balanced: spec.is_balanced(),
        one_balanced: spec.is_one_balanced(),
        invariants: spec_invariants(spec),
        properties,
        closed_form_only,
        rules: vec![
            "unmixed_iff_balanced",
            "cm_level_serre_matroid_tight_iff_one_balanced",
            "l_cm_iff_one_balanced_and_l_at_most_t_minus_s_plus_2",
            "buchsbaum_split_by_uniformity",
            "gorenstein_iff_ci_iff_single_colorful_edge",
            "almost_ci_two_shapes",
            "sequential_iff_t_minus_1_singleton_sides_iff_chordal",
            "dual_always_cm_dual_ci_iff_colorful",
        ],
    })
}
