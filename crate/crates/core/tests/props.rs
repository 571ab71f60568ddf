//! Property tests over random hypergraphs, complexes and matrices.

use proptest::prelude::*;

use hyperalg::bits::{self, VertexSet};
use hyperalg::field::{PrimeField, Rationals};
use hyperalg::homology::reduced_homology;
use hyperalg::hypergraph::{independence_complex, transversal_hypergraph, Hypergraph};
use hyperalg::matrix::{rank_fraction_free, rank_over, IntMatrix, Matrix};
use hyperalg::{FieldSpec, SimplicialComplex};

/// Random simple hypergraph: random nonempty masks, minimalized.
fn hypergraph_strategy() -> impl Strategy<Value = Hypergraph> {
    (1usize..=7).prop_flat_map(|n| {
        let mask_max = (1u64 << n) - 1;
        prop::collection::vec(1..=mask_max, 0..8).prop_map(move |masks| {
            let sets: Vec<VertexSet> = masks.into_iter().map(VertexSet).collect();
            Hypergraph::new(n, bits::minimal_members(&sets)).unwrap()
        })
    })
}

/// Random complex: random masks, maximalized (possibly void).
fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7).prop_flat_map(|n| {
        let mask_max = (1u64 << n) - 1;
        prop::collection::vec(0..=mask_max, 0..8).prop_map(move |masks| {
            let sets: Vec<VertexSet> = masks.into_iter().map(VertexSet).collect();
            SimplicialComplex::from_facets(n, sets)
        })
    })
}

fn int_matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(rows, cols)| {
        prop::collection::vec(-4i64..=4, rows * cols)
            .prop_map(move |data| Matrix::from_fn(rows, cols, |r, c| data[r * cols + c]))
    })
}

proptest! {
    #[test]
    fn minors_preserve_the_antichain_invariant(h in hypergraph_strategy(), ops in prop::collection::vec((0usize..7, prop::bool::ANY), 0..5)) {
        let mut current = h;
        for (v, contract) in ops {
            if current.n_vertices() == 0 {
                break;
            }
            let v = v % current.n_vertices();
            let next = if contract { current.contraction(v) } else { current.deletion(v) };
            match next {
                Ok(h) => {
                    prop_assert!(bits::is_antichain(h.edges()));
                    current = h;
                }
                Err(_) => break, // contracted an isolated edge
            }
        }
    }

    #[test]
    fn independence_and_transversals_are_complementary(h in hypergraph_strategy()) {
        prop_assume!(!h.is_edgeless());
        let n = h.n_vertices();
        let ind = independence_complex(&h);
        let tr = transversal_hypergraph(&h).unwrap();
        let mut complements: Vec<VertexSet> = tr.members().iter().map(|t| t.complement(n)).collect();
        complements.sort_by(|a, b| a.lex_cmp(*b));
        prop_assert_eq!(ind.facets(), complements.as_slice());
    }

    #[test]
    fn alexander_dual_is_an_involution(c in complex_strategy()) {
        prop_assume!(!c.is_void() && !c.is_full_simplex());
        let dual = c.alexander_dual().unwrap();
        prop_assume!(!dual.is_void());
        prop_assert_eq!(dual.alexander_dual().unwrap(), c);
    }

    #[test]
    fn facet_families_are_antichains(c in complex_strategy()) {
        prop_assert!(bits::is_antichain(c.facets()));
    }

    #[test]
    fn euler_poincare_on_random_complexes(c in complex_strategy()) {
        let profile = reduced_homology(&c, FieldSpec::Rationals);
        prop_assert_eq!(profile.euler_sum(), c.reduced_euler());
    }

    #[test]
    fn bareiss_agrees_with_rational_elimination(m in int_matrix_strategy()) {
        prop_assert_eq!(rank_fraction_free(&m), rank_over(&Rationals, &m));
    }

    #[test]
    fn modular_rank_never_exceeds_rational_rank(m in int_matrix_strategy()) {
        let f2 = PrimeField::new(2).unwrap();
        prop_assert!(rank_over(&f2, &m) <= rank_fraction_free(&m));
    }

    #[test]
    fn links_are_subcomplex_compatible(c in complex_strategy(), v in 0usize..7) {
        prop_assume!(!c.is_void());
        let v = v % c.n_vertices();
        let face = VertexSet::singleton(v);
        prop_assume!(c.contains_face(face));
        let lk = c.link(face).unwrap();
        // every link facet, pushed back up, is a face of the original
        let keep = VertexSet::full(c.n_vertices()).without(v);
        let lift: Vec<usize> = keep.iter().collect();
        for f in lk.facets() {
            let lifted = VertexSet::from_iter(f.iter().map(|u| lift[u])).with(v);
            prop_assert!(c.contains_face(lifted));
        }
    }
}
