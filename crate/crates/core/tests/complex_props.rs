mod common;

use std::collections::BTreeSet;

use common::*;
use gorenstein::{independence_complex, Face, Graph, SimplicialComplex, VertexSet};
use proptest::prelude::*;

fn face_set(c: &SimplicialComplex) -> BTreeSet<Vec<u32>> {
    c.faces().iter().map(|f| f.vertices().to_vec()).collect()
}

/// Relabels a complex on `0..k` through `labels`.
fn lift(c: &SimplicialComplex, labels: &[usize]) -> SimplicialComplex {
    c.map_labels(|v| labels[v as usize] as u32)
}

fn independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    independent_within(g, full_mask(g.order()))
        .into_iter()
        .map(mask_to_vec)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn faces_match_subset_closure(gens in arb_generators(10, 6, 5)) {
        let c = complex_of(&gens);
        let oracle = all_faces(&gens);
        prop_assert_eq!(face_set(&c), oracle.clone());
        let f = c.f_vector();
        for i in -1..=c.dim() {
            let want = oracle.iter().filter(|x| x.len() as isize == i + 1).count();
            prop_assert_eq!(f.get(i) as usize, want);
            prop_assert_eq!(c.faces_of_dim(i).len(), want);
        }
        prop_assert_eq!(f.euler_characteristic(), oracle_euler(&gens));
        prop_assert_eq!(c.reduced_euler_characteristic().unwrap(), oracle_euler(&gens));
        prop_assert!(complex_of(&raw_facets(&c)).same_faces(&c));
    }

    #[test]
    fn links_match_definition(gens in arb_generators(9, 5, 5)) {
        let c = complex_of(&gens);
        let faces = all_faces(&gens);
        for f in &faces {
            let lk = c.link(&Face::new(f.clone())).unwrap();
            let want: BTreeSet<Vec<u32>> = oracle_link(&faces, f).into_iter().collect();
            prop_assert_eq!(face_set(&lk), want);
        }
    }

    #[test]
    fn complex_is_core_join_simplex(gens in arb_generators(9, 5, 5)) {
        let c = complex_of(&gens);
        let core = c.core_of().unwrap();
        let rebuilt = core.complex.join(&SimplicialComplex::simplex(core.apexes.iter().copied()));
        // join shifts the simplex labels past the core's ground set
        let shift = core.complex.vertices().last().map_or(0, |&m| m + 1);
        let rebuilt = rebuilt.map_labels(|v| if v >= shift { v - shift } else { v });
        prop_assert_eq!(face_set(&rebuilt), face_set(&c));
        for &a in &core.apexes {
            prop_assert!(c.facets().iter().all(|g| g.contains(a)));
        }
    }

    #[test]
    fn independence_complex_links_and_deletions(g in arb_graph(8)) {
        let delta = independence_complex(&g);
        for s in independent_sets(&g) {
            let local = g.localize(&VertexSet::new(s.clone())).unwrap();
            let lk = delta.link(&Face::new(s.iter().map(|&v| v as u32).collect())).unwrap();
            prop_assert_eq!(face_set(&lift(&independence_complex(&local.graph), &local.labels)), face_set(&lk));
        }
        for x in 0..g.order() {
            let del = g.remove_vertex(x).unwrap();
            let d = delta.delete_set(&Face::from([x as u32])).unwrap();
            prop_assert_eq!(face_set(&lift(&independence_complex(&del.graph), &del.labels)), face_set(&d));
        }
        let faces: BTreeSet<Vec<u32>> = independent_sets(&g)
            .into_iter()
            .map(|s| s.into_iter().map(|v| v as u32).collect())
            .collect();
        prop_assert_eq!(face_set(&delta), faces);
    }
}

#[test]
fn connected_graphs_have_no_apex() {
    for g in load_corpus(TRIANGLE_FREE_LE9)
        .iter()
        .filter(|g| g.order() <= 7)
    {
        let c = independence_complex(g);
        let core = c.core_of().unwrap();
        // a vertex with a neighbour misses the facets through that neighbour
        if g.order() >= 2 {
            assert!(!core.is_cone());
            assert!(core.complex.same_faces(&c));
        }
    }
    let k1 = independence_complex(&Graph::empty(1));
    assert_eq!(k1.core_of().unwrap().apexes, vec![0]);
}

#[test]
fn projective_plane_shape() {
    let c = complex_of(&projective_plane());
    assert_eq!(c.f_vector().0, vec![1, 6, 15, 10]);
    assert!(c.is_pure());
    assert_eq!(c.dim(), 2);
    let text = c.to_facet_text();
    assert!(SimplicialComplex::parse_facets(&text)
        .unwrap()
        .same_faces(&c));
    assert!(SimplicialComplex::parse_facets("")
        .unwrap()
        .same_faces(&SimplicialComplex::empty()));
}
