//! Acceptance suite: every closed-form characterization is checked against
//! the definitional oracles over the standard grid (t in 2..=5, s in 2..=t,
//! side sizes in 1..=3, at most 9 vertices), plus the engine-level checks
//! on homology, Betti tables and certificates. One line per criterion.
//!
//! Run with `cargo test -p hyperalg --test acceptance -- --nocapture` to
//! see the per-criterion lines.

use std::collections::BTreeMap;

use hyperalg::alg_props;
use hyperalg::betti;
use hyperalg::bits::VertexSet;
use hyperalg::chordal;
use hyperalg::comb_props;
use hyperalg::complex;
use hyperalg::homology::reduced_homology;
use hyperalg::hypergraph::{
    complete_multipartite, independence_complex, numbers, spec_invariants,
    transversal_hypergraph, PartiteSpec,
};
use hyperalg::ideal::edge_ideal;
use hyperalg::sweep::{enumerate_specs, SweepConfig, SWEEP_TIGHT_N_CAP};
use hyperalg::{FieldSpec, SimplicialComplex};

fn grid() -> Vec<PartiteSpec> {
    enumerate_specs(&SweepConfig::default())
}

fn both_fields() -> [FieldSpec; 2] {
    [FieldSpec::Rationals, FieldSpec::PrimeField(2)]
}

fn ind_of(spec: &PartiteSpec) -> SimplicialComplex {
    independence_complex(&complete_multipartite(spec))
}

fn pass(n: usize, label: &str) {
    println!("ACCEPTANCE criterion {n:2} ({label}): PASS");
}

#[test]
fn criterion_01_unmixed_iff_balanced() {
    for spec in grid() {
        let oracle = alg_props::is_unmixed(&ind_of(&spec)).value;
        assert_eq!(oracle, spec.is_balanced(), "{spec}");
    }
    pass(1, "unmixed iff balanced");
}

#[test]
fn criterion_02_level_cm_serre_matroid_tight_six_way() {
    for spec in grid() {
        let ind = ind_of(&spec);
        let expected = spec.is_one_balanced();
        for field in both_fields() {
            assert_eq!(
                alg_props::is_cm_reisner(&ind, field).value,
                expected,
                "cm {spec} {field:?}"
            );
            assert_eq!(
                betti::is_level(&ind, field).unwrap(),
                expected,
                "level {spec} {field:?}"
            );
            for r in [2, 3] {
                assert_eq!(
                    alg_props::satisfies_sr(&ind, r, field).unwrap().value,
                    expected,
                    "s_{r} {spec} {field:?}"
                );
            }
        }
        assert_eq!(ind.is_matroid(), expected, "matroid {spec}");
        if spec.n_vertices() <= SWEEP_TIGHT_N_CAP {
            assert_eq!(
                complex::is_tight(&ind).unwrap().value,
                expected,
                "tight {spec}"
            );
        }
    }
    pass(2, "level = CM = S_r = one-balanced = matroid = tight");
}

#[test]
fn criterion_03_l_fold_properties() {
    for spec in grid() {
        let ind = ind_of(&spec);
        let one_balanced = spec.is_one_balanced();
        let deficiency = spec.t() - spec.uniformity() + 2;
        for field in both_fields() {
            for l in 1..=4usize {
                let l_cm = alg_props::is_l_cm(&ind, l, field).unwrap().value;
                assert_eq!(l_cm, one_balanced && l <= deficiency, "l_cm {l} {spec} {field:?}");

                let l_bbm = alg_props::is_l_buchsbaum(&ind, l, field).unwrap().value;
                if spec.uniformity() >= 3 {
                    assert_eq!(l_bbm, one_balanced && l <= deficiency, "l_bbm {l} {spec} {field:?}");
                }
            }
            if spec.uniformity() == 2 {
                // graphs: Buchsbaum iff balanced, 2-Buchsbaum iff complete
                assert_eq!(
                    alg_props::is_buchsbaum(&ind, field).value,
                    spec.is_balanced(),
                    "buchsbaum {spec} {field:?}"
                );
                assert_eq!(
                    alg_props::is_l_buchsbaum(&ind, 2, field).unwrap().value,
                    one_balanced,
                    "2-buchsbaum {spec} {field:?}"
                );
            }
        }
    }
    pass(3, "l-CM and l-Buchsbaum characterizations");
}

#[test]
fn criterion_04_gorenstein_iff_ci_iff_single_edge() {
    for spec in grid() {
        let ind = ind_of(&spec);
        let ideal = edge_ideal(&complete_multipartite(&spec));
        let expected = spec.uniformity() == spec.t() && spec.is_one_balanced();
        for field in both_fields() {
            assert_eq!(
                alg_props::is_gorenstein(&ind, field).value,
                expected,
                "gorenstein {spec} {field:?}"
            );
        }
        assert_eq!(
            alg_props::is_complete_intersection(&ideal).unwrap().value,
            expected,
            "ci {spec}"
        );
    }
    pass(4, "Gorenstein = CI = single colorful edge");
}

#[test]
fn criterion_05_almost_ci_shapes() {
    for spec in grid() {
        let ideal = edge_ideal(&complete_multipartite(&spec));
        let s = spec.uniformity();
        let t = spec.t();
        let triangle = s == 2 && t == 3 && spec.is_one_balanced();
        let double_edge =
            s == t && spec.singleton_sides() == t - 1 && spec.sides()[t - 1] == 2;
        assert_eq!(
            alg_props::is_almost_ci(&ideal).unwrap().value,
            triangle || double_edge,
            "{spec}"
        );
    }
    pass(5, "almost CI exactly on the two shapes");
}

#[test]
fn criterion_06_alexander_dual_properties() {
    for spec in grid() {
        let h = complete_multipartite(&spec);
        let ideal = edge_ideal(&h);
        let ind = ind_of(&spec);
        for field in both_fields() {
            assert!(
                betti::has_linear_resolution(&ideal, field).unwrap(),
                "linear resolution {spec} {field:?}"
            );
            let dual = ind.alexander_dual().unwrap();
            assert!(
                alg_props::is_cm_reisner(&dual, field).value,
                "dual CM {spec} {field:?}"
            );
        }
        let dual_ci = alg_props::is_complete_intersection(&ideal.dual().unwrap())
            .unwrap()
            .value;
        assert_eq!(dual_ci, spec.uniformity() == spec.t(), "dual CI {spec}");
        if spec.n_vertices() <= 8 {
            assert!(
                betti::is_weakly_polymatroidal(&ideal).unwrap().0,
                "weakly polymatroidal {spec}"
            );
        }
    }
    pass(6, "dual CM always, dual CI iff colorful, linear resolutions");
}

#[test]
fn criterion_07_sequential_six_way() {
    for spec in grid() {
        let h = complete_multipartite(&spec);
        let ind = ind_of(&spec);
        let expected = spec.singleton_sides() >= spec.t() - 1;
        assert_eq!(
            comb_props::is_vertex_decomposable(&ind).0,
            expected,
            "vd {spec}"
        );
        assert_eq!(
            comb_props::is_shellable(&ind).unwrap().0,
            expected,
            "shellable {spec}"
        );
        for field in both_fields() {
            assert_eq!(
                alg_props::is_seq_cm(&ind, field).value,
                expected,
                "seq cm {spec} {field:?}"
            );
        }
        assert_eq!(
            alg_props::is_seq_s2(&ind, FieldSpec::Rationals).value,
            expected,
            "seq s2 {spec}"
        );
        assert_eq!(chordal::is_chordal(&h).0, expected, "chordal {spec}");
    }
    pass(7, "vertex decomposable = shellable = seq CM = seq S_2 = chordal");
}

#[test]
fn criterion_08_numerical_invariants() {
    for spec in grid() {
        let h = complete_multipartite(&spec);
        let closed = spec_invariants(&spec);
        let (tau, ind_num) = numbers(&h).unwrap();
        assert_eq!(tau, closed.tau, "tau {spec}");
        assert_eq!(ind_num, closed.ind, "independence number {spec}");

        let ideal = edge_ideal(&h);
        assert_eq!(ideal.height().unwrap(), closed.ht, "height {spec}");
        let ind = ind_of(&spec);
        assert_eq!(
            (ind.dim().unwrap() + 1) as usize,
            closed.dim,
            "Krull dimension {spec}"
        );

        // the minimal transversals are exactly the unions of t-s+1 sides
        let tr = transversal_hypergraph(&h).unwrap();
        let mut expected: Vec<VertexSet> = Vec::new();
        let side_sets = spec.side_sets();
        let take = spec.t() - spec.uniformity() + 1;
        union_choices(&side_sets, 0, take, VertexSet::EMPTY, &mut expected);
        expected.sort_by(|a, b| a.lex_cmp(*b));
        assert_eq!(tr.members(), expected.as_slice(), "transversal family {spec}");
    }
    pass(8, "tau, independence number, height, dimension, transversal family");
}

fn union_choices(
    sides: &[VertexSet],
    from: usize,
    remaining: usize,
    acc: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if remaining == 0 {
        out.push(acc);
        return;
    }
    for i in from..sides.len() {
        if sides.len() - i < remaining {
            break;
        }
        union_choices(sides, i + 1, remaining - 1, acc.union(sides[i]), out);
    }
}

#[test]
fn criterion_09_homology_engine() {
    // spheres: the boundary of the k-simplex has a single dimension of
    // homology at degree k-1
    for k in 1..=5usize {
        let boundary = SimplicialComplex::simplex(k + 1).pure_skeleton(k - 1).unwrap();
        let profile = reduced_homology(&boundary, FieldSpec::Rationals);
        let mut expected = BTreeMap::new();
        for i in -1..=(k as i64 - 1) {
            expected.insert(i, usize::from(i == k as i64 - 1));
        }
        assert_eq!(profile.dims, expected, "sphere k={k}");
    }

    // disjoint unions of points and edges
    let vs = |vals: &[usize]| VertexSet::from_iter(vals.iter().copied());
    let points = SimplicialComplex::from_facets(4, vec![vs(&[0]), vs(&[1]), vs(&[2]), vs(&[3])]);
    let profile = reduced_homology(&points, FieldSpec::Rationals);
    assert_eq!(profile.dims, BTreeMap::from([(-1, 0), (0, 3)]));
    let edges = SimplicialComplex::from_facets(6, vec![vs(&[0, 1]), vs(&[2, 3]), vs(&[4, 5])]);
    let profile = reduced_homology(&edges, FieldSpec::Rationals);
    assert_eq!(profile.dims, BTreeMap::from([(-1, 0), (0, 2), (1, 0)]));

    // cones are acyclic
    for base in [
        SimplicialComplex::from_facets(3, vec![vs(&[0, 1]), vs(&[1, 2])]),
        SimplicialComplex::from_facets(3, vec![vs(&[0]), vs(&[1]), vs(&[2])]),
    ] {
        let cone = base.join(&SimplicialComplex::simplex(1));
        assert!(
            reduced_homology(&cone, FieldSpec::Rationals).is_trivial(),
            "cone over {base:?}"
        );
    }

    // Euler-Poincaré on every induced subcomplex the sweep touches
    for spec in grid() {
        let ind = ind_of(&spec);
        for w in VertexSet::full(ind.n_vertices()).subsets() {
            let sub = ind.induced(w).unwrap();
            let profile = reduced_homology(&sub, FieldSpec::Rationals);
            assert_eq!(profile.euler_sum(), sub.reduced_euler(), "{spec} at {w:?}");
        }
    }
    pass(9, "sphere/union/cone profiles and Euler-Poincare across the sweep");
}

#[test]
fn criterion_10_betti_engine() {
    let k3 = PartiteSpec::new(2, vec![1, 1, 1]).unwrap();
    let table = betti::graded_betti(&ind_of(&k3), FieldSpec::Rationals).unwrap();
    assert_eq!(
        table.entries,
        BTreeMap::from([((0, 0), 1), ((1, 2), 3), ((2, 3), 2)]),
        "triangle graph table"
    );

    let c4 = PartiteSpec::new(2, vec![2, 2]).unwrap();
    let table = betti::graded_betti(&ind_of(&c4), FieldSpec::Rationals).unwrap();
    assert_eq!(
        table.entries,
        BTreeMap::from([((0, 0), 1), ((1, 2), 4), ((2, 3), 4), ((3, 4), 1)]),
        "square graph table"
    );

    // the ideal table is the shift of the quotient table, grid-wide and
    // over both fields
    for spec in grid() {
        let ind = ind_of(&spec);
        for field in both_fields() {
            let quotient = betti::graded_betti(&ind, field).unwrap();
            let of_ideal = betti::graded_betti_ideal(&ind, field).unwrap();
            for (&(i, j), &v) in &of_ideal.entries {
                assert_eq!(quotient.get(i + 1, j), v, "{spec} ({i},{j}) {field:?}");
            }
            for (&(i, j), &v) in &quotient.entries {
                if i >= 1 {
                    assert_eq!(of_ideal.get(i - 1, j), v, "{spec} ({i},{j}) {field:?}");
                }
            }
        }
    }
    pass(10, "frozen Hochster tables and the ideal-shift identity");
}

#[test]
fn criterion_11_certificate_soundness() {
    for spec in grid() {
        let h = complete_multipartite(&spec);
        let ind = ind_of(&spec);

        // every emitted shelling order re-verifies
        let (shellable, cert) = comb_props::is_shellable(&ind).unwrap();
        if shellable {
            assert!(
                comb_props::verify_shelling(&ind, &cert.unwrap()),
                "shelling certificate {spec}"
            );
        }

        // every emitted shedding tree re-verifies
        let (vd, cert) = comb_props::is_vertex_decomposable(&ind);
        if vd {
            assert!(
                comb_props::verify_shedding(&ind, &cert.unwrap()),
                "shedding certificate {spec}"
            );
        }

        // link/deletion identities for every vertex
        for v in 0..h.n_vertices() {
            assert_eq!(
                ind.vertex_deletion(v),
                independence_complex(&h.deletion(v).unwrap()),
                "deletion identity {spec} at {v}"
            );
            if let Ok(contracted) = h.contraction(v) {
                assert_eq!(
                    ind.link(VertexSet::singleton(v)).unwrap(),
                    independence_complex(&contracted),
                    "link identity {spec} at {v}"
                );
            }
        }

        // false oracle verdicts carry witnesses that re-verify
        for field in both_fields() {
            for verdict in [
                alg_props::is_cm_reisner(&ind, field),
                alg_props::is_buchsbaum(&ind, field),
                alg_props::satisfies_sr(&ind, 2, field).unwrap(),
                alg_props::is_l_cm(&ind, 2, field).unwrap(),
                alg_props::is_seq_cm(&ind, field),
                alg_props::is_seq_s2(&ind, field),
            ] {
                if let Some(w) = &verdict.witness {
                    assert!(
                        alg_props::verify_witness(&ind, w, field),
                        "witness for {} on {spec}",
                        verdict.property
                    );
                }
            }
        }
    }
    pass(11, "certificates and witnesses re-verify; link identities hold");
}
