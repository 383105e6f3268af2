mod common;

use std::collections::BTreeSet;

use bottomforge::bottomcx::{bottom_complex, verify_bottom};
use bottomforge::gluing::{glue_cones, GlueOptions};
use bottomforge::ivec;
use bottomforge::monoid::{hilbert_basis, is_normal};
use bottomforge::exactlin::IntVec;
use common::*;

#[test]
fn hilbert_basis_matches_brute_force() {
    for (name, c) in corpus() {
        let gens: Vec<Vec<i64>> = c.extreme_rays().iter().map(to_i64).collect();
        let expected = brute_hilbert(&gens);
        let got: BTreeSet<Vec<i64>> = hilbert_basis(&c).unwrap().iter().map(to_i64).collect();
        assert_eq!(got, expected, "{name}");
    }
}

#[test]
fn brute_facets_match_double_description() {
    for (name, c) in corpus() {
        let gens: Vec<Vec<i64>> = c.extreme_rays().iter().map(to_i64).collect();
        let got: BTreeSet<Vec<i64>> = c.facet_normals().iter().map(to_i64).collect();
        assert_eq!(got, brute_facets(&gens).into_iter().collect(), "{name}");
    }
}

#[test]
fn normality_matches_definition() {
    let mut seen = [0usize; 2];
    for pts in random_polytopes(7, 20) {
        let verts: Vec<IntVec> = pts.iter().map(|p| IntVec::from_i64s(p)).collect();
        let expected = definitional_normal(&pts, 4);
        assert_eq!(is_normal(&verts).unwrap(), expected, "{pts:?}");
        seen[usize::from(expected)] += 1;
    }
    assert!(seen[1] > 0);
}

#[test]
fn reeve_type_simplex_is_not_normal() {
    let pts = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 3]];
    assert!(!definitional_normal(&pts, 4));
    let verts: Vec<IntVec> = pts.iter().map(|p| IntVec::from_i64s(p)).collect();
    assert!(!is_normal(&verts).unwrap());
}

#[test]
fn bottoms_of_corpus_verify() {
    for (name, c) in corpus() {
        if !c.is_full_dimensional() {
            continue;
        }
        let k = bottom_complex(&c).unwrap();
        assert!(verify_bottom(&k).unwrap().passed(), "{name}");
    }
}

/// After the shear the apexes (3, ±1, 2) move to (3, ±1, 2 + t); the chord
/// meets y = 0 at (3, 0, 2 + t), strictly inside cone((-1, 1), (1, 2)) iff
/// 2 + t > 2·3.
#[test]
fn gluing_threshold_closed_form() {
    let expected = (0u64..).find(|&t| 2 + t as i64 > 2 * 3).unwrap();
    let (a, b) = (c1(), c2());
    let f1 = a.facet_with_normal(&ivec![0, 1, 0]).unwrap();
    let f2 = b.facet_with_normal(&ivec![0, -1, 0]).unwrap();
    let opts = GlueOptions { gamma: Some(ivec![0, 0, 1]), ..Default::default() };
    let (_, data) = glue_cones(&a, &f1, &b, &f2, &opts).unwrap();
    assert_eq!(data.t, expected);
}

#[test]
fn ray_map_search_finds_images() {
    let c = c1();
    let m = bottomforge::exactlin::UnimodularMap::new(bottomforge::exactlin::IntMat::from_i64_rows(&[
        &[1, 2, 0],
        &[0, 1, 3],
        &[1, 2, 1],
    ]))
    .unwrap();
    assert!(ray_map_exists(&c, &c.image(&m)));
    assert!(ray_map_exists(&c1(), &c2()));
    assert!(!ray_map_exists(&c1(), &cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])));
}
