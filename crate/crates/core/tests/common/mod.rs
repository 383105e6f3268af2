//! Shared test corpus and brute-force oracles. The oracles work in plain
//! `i64` and do not call into the library's cone or monoid code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bottomforge::cone::Cone;
use bottomforge::exactlin::IntVec;
use bottomforge::fano::{catalog_polygon, cone_of_heights};
use bottomforge::gluing::realize_stellar_ngon;
use bottomforge::ivec;
use bottomforge::monoid::homogenized_cone;
use itertools::Itertools;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn to_i64(v: &IntVec) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("small entry")).collect()
}

pub fn cone(gens: &[&[i64]]) -> Cone {
    Cone::new(gens.iter().map(|g| IntVec::from_i64s(g)).collect()).unwrap()
}

pub fn c1() -> Cone {
    cone(&[&[-1, 0, 1], &[0, 0, 1], &[1, 0, 2], &[3, 1, 2]])
}

pub fn c2() -> Cone {
    cone(&[&[-1, 0, 1], &[0, 0, 1], &[1, 0, 2], &[3, -1, 2]])
}

pub fn non_normal() -> Cone {
    cone(&[&[0, 0, 0, 1], &[1, 0, 0, 1], &[0, 1, 0, 1], &[1, 1, 3, 1]])
}

fn polygon(name: &str) -> Vec<IntVec> {
    catalog_polygon(name).unwrap().vertices
}

/// Named cones used across the integration suites.
pub fn corpus() -> Vec<(String, Cone)> {
    let f3 = catalog_polygon("F3").unwrap();
    let f4 = catalog_polygon("F4").unwrap();
    let f5 = catalog_polygon("F5").unwrap();
    vec![
        ("orthant".into(), cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
        ("c1".into(), c1()),
        ("c2".into(), c2()),
        ("non_normal_facet".into(), non_normal()),
        ("plane_wedge".into(), cone(&[&[1, 0], &[1, 3]])),
        ("F3_height_one".into(), homogenized_cone(&polygon("F3")).unwrap()),
        ("F4_height_one".into(), homogenized_cone(&polygon("F4")).unwrap()),
        ("F5_height_one".into(), homogenized_cone(&polygon("F5")).unwrap()),
        ("F3_regular".into(), cone_of_heights(&f3, &ivec![0, 0, 0, 1]).unwrap()),
        ("F4_regular".into(), cone_of_heights(&f4, &ivec![0, 1, 1, 1, 1]).unwrap()),
        ("F5_regular".into(), cone_of_heights(&f5, &ivec![0, 1, 1, 1, 1, 1]).unwrap()),
        ("ngon4".into(), realize_stellar_ngon(4).unwrap().cone),
    ]
}

/// Determinant by Laplace expansion.
pub fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// Normal of the hyperplane spanned by `d - 1` vectors in `Z^d`.
fn cross(vs: &[Vec<i64>], d: usize) -> Vec<i64> {
    (0..d)
        .map(|j| {
            let mut m: Vec<Vec<i64>> = vec![(0..d).map(|k| i64::from(k == j)).collect()];
            m.extend(vs.iter().cloned());
            det(&m)
        })
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Inequalities `a·x >= 0` of a full-dimensional cone, by trying every
/// hyperplane through `d - 1` generators.
pub fn brute_facets(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = gens[0].len();
    let mut out = BTreeSet::new();
    for s in subsets(gens.len(), d - 1) {
        let vs: Vec<Vec<i64>> = s.iter().map(|&i| gens[i].clone()).collect();
        let mut n = cross(&vs, d);
        if n.iter().all(|&x| x == 0) {
            continue;
        }
        let vals: Vec<i64> = gens.iter().map(|g| dot(&n, g)).collect();
        if vals.iter().all(|&v| v <= 0) {
            n.iter_mut().for_each(|x| *x = -*x);
        } else if !vals.iter().all(|&v| v >= 0) {
            continue;
        }
        let g = n.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
        out.insert(n.into_iter().map(|x| x / g).collect::<Vec<_>>());
    }
    out.into_iter().collect()
}

fn for_box(lo: &[i64], hi: &[i64], f: &mut impl FnMut(&[i64])) {
    let mut x = lo.to_vec();
    loop {
        f(&x);
        let mut i = 0;
        loop {
            if i == x.len() {
                return;
            }
            if x[i] < hi[i] {
                x[i] += 1;
                break;
            }
            x[i] = lo[i];
            i += 1;
        }
    }
}

/// Hilbert basis of a full-dimensional pointed cone by scanning all lattice
/// points of bounded height and discarding the reducible ones.
pub fn brute_hilbert(gens: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let d = gens[0].len();
    let facets = brute_facets(gens);
    let grade: Vec<i64> = (0..d).map(|j| facets.iter().map(|a| a[j]).sum()).collect();
    assert!(gens.iter().all(|g| dot(&grade, g) > 0), "grading must be positive on the generators");
    // Irreducible elements lie in the half-open parallelepiped of some d
    // extreme rays, which bounds heights and coordinates.
    let largest = |mut v: Vec<i64>| -> i64 {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v.into_iter().take(d).sum()
    };
    let top = largest(gens.iter().map(|g| dot(&grade, g)).collect());
    let hi: Vec<i64> = (0..d).map(|j| largest(gens.iter().map(|g| g[j].max(0)).collect())).collect();
    let lo: Vec<i64> = (0..d).map(|j| -largest(gens.iter().map(|g| (-g[j]).max(0)).collect())).collect();
    let mut pts = Vec::new();
    for_box(&lo, &hi, &mut |x| {
        let h = dot(&grade, x);
        if h > 0 && h <= top && facets.iter().all(|a| dot(a, x) >= 0) {
            pts.push((h, x.to_vec()));
        }
    });
    pts.sort();
    let mut basis: Vec<Vec<i64>> = Vec::new();
    for (_, x) in pts {
        let reducible = basis.iter().any(|b| {
            let y: Vec<i64> = x.iter().zip(b).map(|(p, q)| p - q).collect();
            facets.iter().all(|a| dot(a, &y) >= 0)
        });
        if !reducible {
            basis.push(x);
        }
    }
    basis.into_iter().collect()
}

/// Facet inequalities `a·x <= b` of a full-dimensional lattice polytope.
fn polytope_facets(pts: &[Vec<i64>]) -> Vec<(Vec<i64>, i64)> {
    let d = pts[0].len();
    let mut out = BTreeSet::new();
    for s in subsets(pts.len(), d) {
        let diffs: Vec<Vec<i64>> =
            s[1..].iter().map(|&i| pts[i].iter().zip(&pts[s[0]]).map(|(a, b)| a - b).collect()).collect();
        let mut n = cross(&diffs, d);
        if n.iter().all(|&x| x == 0) {
            continue;
        }
        let b = dot(&n, &pts[s[0]]);
        let vals: Vec<i64> = pts.iter().map(|p| dot(&n, p) - b).collect();
        let (n, b) = if vals.iter().all(|&v| v <= 0) {
            (n, b)
        } else if vals.iter().all(|&v| v >= 0) {
            n.iter_mut().for_each(|x| *x = -*x);
            (n, -b)
        } else {
            continue;
        };
        out.insert((n, b));
    }
    out.into_iter().collect()
}

fn lattice_points_of_dilate(pts: &[Vec<i64>], facets: &[(Vec<i64>, i64)], c: i64) -> BTreeSet<Vec<i64>> {
    let d = pts[0].len();
    let lo: Vec<i64> = (0..d).map(|j| c * pts.iter().map(|p| p[j]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..d).map(|j| c * pts.iter().map(|p| p[j]).max().unwrap()).collect();
    let mut out = BTreeSet::new();
    for_box(&lo, &hi, &mut |x| {
        if facets.iter().all(|(a, b)| dot(a, x) <= c * b) {
            out.insert(x.to_vec());
        }
    });
    out
}

/// Definitional normality up to dilation `c_max`: every lattice point of
/// `cP` is a sum of `c` lattice points of `P`.
pub fn definitional_normal(pts: &[Vec<i64>], c_max: i64) -> bool {
    let facets = polytope_facets(pts);
    let base = lattice_points_of_dilate(pts, &facets, 1);
    let mut sums = base.clone();
    for c in 2..=c_max {
        sums = sums.iter().flat_map(|s| base.iter().map(move |p| s.iter().zip(p).map(|(a, b)| a + b).collect())).collect();
        if sums != lattice_points_of_dilate(pts, &facets, c) {
            return false;
        }
    }
    true
}

/// Whether `pts` affinely span their ambient space.
pub fn full_dimensional(pts: &[Vec<i64>]) -> bool {
    let d = pts[0].len();
    subsets(pts.len(), d + 1).into_iter().any(|s| {
        let m: Vec<Vec<i64>> =
            s[1..].iter().map(|&i| pts[i].iter().zip(&pts[s[0]]).map(|(a, b)| a - b).collect()).collect();
        det(&m) != 0
    })
}

/// Random full-dimensional lattice polytopes in a small box.
pub fn random_polytopes(seed: u64, count: usize) -> Vec<Vec<Vec<i64>>> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let d = if out.len() % 2 == 0 { 2 } else { 3 };
        let n = rng.gen_range(d + 1..=d + 3);
        let pts: Vec<Vec<i64>> = (0..n).map(|_| (0..d).map(|_| rng.gen_range(0..=3)).collect()).collect();
        if full_dimensional(&pts) {
            out.push(pts);
        }
    }
    out
}

/// Exhaustive search for a unimodular map sending the extreme rays of `a`
/// onto those of `b`, trying every ordered choice of images for a basis of
/// rays of `a`.
pub fn ray_map_exists(a: &Cone, b: &Cone) -> bool {
    let ra: Vec<Vec<i64>> = a.extreme_rays().iter().map(to_i64).collect();
    let rb: BTreeSet<Vec<i64>> = b.extreme_rays().iter().map(to_i64).collect();
    let d = ra[0].len();
    if ra.len() != rb.len() {
        return false;
    }
    let rb_list: Vec<Vec<i64>> = rb.iter().cloned().collect();
    let Some(basis) = (0..ra.len()).combinations(d).find(|s| det(&s.iter().map(|&i| ra[i].clone()).collect::<Vec<_>>()) != 0)
    else {
        return false;
    };
    // Columns of R are the basis rays; M = S adj(R) / det(R).
    let r: Vec<Vec<i64>> = (0..d).map(|i| basis.iter().map(|&j| ra[j][i]).collect()).collect();
    let dr = det(&r);
    let minor = |m: &[Vec<i64>], i: usize, j: usize| -> i64 {
        let sub: Vec<Vec<i64>> = m
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, row)| row.iter().enumerate().filter(|&(l, _)| l != j).map(|(_, &x)| x).collect())
            .collect();
        det(&sub)
    };
    let adj: Vec<Vec<i64>> =
        (0..d).map(|i| (0..d).map(|j| if (i + j) % 2 == 0 { minor(&r, j, i) } else { -minor(&r, j, i) }).collect()).collect();
    (0..rb_list.len()).permutations(d).any(|images| {
        let s: Vec<Vec<i64>> = (0..d).map(|i| images.iter().map(|&j| rb_list[j][i]).collect()).collect();
        let mut m = vec![vec![0i64; d]; d];
        for i in 0..d {
            for j in 0..d {
                let v: i64 = (0..d).map(|k| s[i][k] * adj[k][j]).sum();
                if v % dr != 0 {
                    return false;
                }
                m[i][j] = v / dr;
            }
        }
        if det(&m).abs() != 1 {
            return false;
        }
        let mapped: BTreeSet<Vec<i64>> =
            ra.iter().map(|x| (0..d).map(|i| (0..d).map(|k| m[i][k] * x[k]).sum()).collect()).collect();
        mapped == rb
    })
}
