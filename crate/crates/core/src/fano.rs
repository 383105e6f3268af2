//! Smooth Fano polytopes, the system of strict convexity inequalities on
//! height vectors, and enumeration of regular reduced realizations.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::caps::enumeration_cap;
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::exactlin::{rat_from_int, solve_rational, IntMat, IntVec, Rat, RatMat, UnimodularMap};
use crate::monoid::{homogenized_cone, lcm_all};

/// A smooth Fano polytope with `conv(v_1, ..., v_d)` a facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoPolytope {
    pub dim: usize,
    pub vertices: Vec<IntVec>,
    /// Vertex index sets (0-based, sorted).
    pub facets: Vec<Vec<usize>>,
}

impl FanoPolytope {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn base_facet(&self) -> Vec<usize> {
        (0..self.dim).collect()
    }
}

/// Checks the smooth Fano conditions. On failure the reason is returned.
pub fn check_smooth_fano(points: &[IntVec]) -> Result<std::result::Result<FanoPolytope, String>> {
    let d = points.first().ok_or(Error::ZeroDim)?.dim();
    let cone = homogenized_cone(points)?;
    if !cone.is_full_dimensional() {
        return Ok(Err("polytope is not full-dimensional".into()));
    }
    let rays = cone.extreme_rays();
    // vertices in order of first appearance in the input
    let mut vertices: Vec<IntVec> = Vec::new();
    for p in points {
        if rays.contains(&p.extended(BigInt::one())) && !vertices.contains(p) {
            vertices.push(p.clone());
        }
    }
    let index = |r: &IntVec| vertices.iter().position(|v| *v == r.truncated()).unwrap();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for (f, normal) in cone.facets().iter().zip(cone.facet_normals()) {
        if !normal[d].is_positive() {
            return Ok(Err("origin is not in the interior".into()));
        }
        let mut idx: Vec<usize> = f.rays.iter().map(index).collect();
        idx.sort();
        if idx.len() != d {
            return Ok(Err(format!("facet {:?} is not a simplex", idx)));
        }
        let det = IntMat::from_rows(idx.iter().map(|&i| vertices[i].clone()).collect(), d).det();
        if !det.abs().is_one() {
            return Ok(Err(format!("facet {:?} has basis determinant {}", idx, det)));
        }
        facets.push(idx);
    }
    facets.sort();

    let base: Vec<usize> = (0..d).collect();
    if !facets.contains(&base) {
        let first = facets[0].clone();
        let mut order = first.clone();
        order.extend((0..vertices.len()).filter(|i| !first.contains(i)));
        let pos: Vec<usize> = (0..vertices.len())
            .map(|old| order.iter().position(|&o| o == old).unwrap())
            .collect();
        vertices = order.iter().map(|&i| vertices[i].clone()).collect();
        for f in facets.iter_mut() {
            *f = f.iter().map(|&i| pos[i]).sorted().collect();
        }
        facets.sort();
    }
    Ok(Ok(FanoPolytope { dim: d, vertices, facets }))
}

pub fn is_smooth_fano(points: &[IntVec]) -> Result<Option<FanoPolytope>> {
    Ok(check_smooth_fano(points)?.ok())
}

/// The functional attached to an adjacent facet pair `F = S ∪ {i_d}`,
/// `G = S ∪ {i_{d+1}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjFunctional {
    pub facets: (usize, usize),
    pub shared: Vec<usize>,
    pub i_d: usize,
    pub i_d1: usize,
    pub lambda0: Rat,
    /// `λ_i` for every vertex in `shared`, `i_d` and `i_d1`.
    pub lambdas: BTreeMap<usize, Rat>,
    /// Coefficients on `(x_0, x_1, ..., x_n)`.
    pub coeffs: Vec<Rat>,
}

impl AdjFunctional {
    pub fn eval(&self, x: &[Rat]) -> Rat {
        self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// The coefficients with denominators cleared.
    pub fn integer_coeffs(&self) -> IntVec {
        let l = lcm_all(self.coeffs.iter().map(|c| c.denom()));
        IntVec::new(self.coeffs.iter().map(|c| (c * rat_from_int(&l)).to_integer()).collect())
    }
}

pub fn adjacency_functionals(p: &FanoPolytope) -> Result<Vec<AdjFunctional>> {
    let d = p.dim;
    let mut out = Vec::new();
    for (a, b) in (0..p.facets.len()).tuple_combinations() {
        let (fa, fb) = (&p.facets[a], &p.facets[b]);
        let shared: Vec<usize> = fa.iter().filter(|i| fb.contains(i)).copied().collect();
        if shared.len() + 1 != d {
            continue;
        }
        let i_d = *fa.iter().find(|i| !shared.contains(i)).unwrap();
        let i_d1 = *fb.iter().find(|i| !shared.contains(i)).unwrap();
        // unknowns: λ_{i_d}, λ_{i_{d+1}}, λ_s for s in shared
        let m = d + 1;
        let col = |v: &IntVec, sign: i64| -> Vec<Rat> {
            v.iter().map(|c| rat_from_int(c) * Rat::from_integer(sign.into())).collect()
        };
        let mut cols: Vec<Vec<Rat>> = vec![col(&p.vertices[i_d], 1), col(&p.vertices[i_d1], 1)];
        cols.extend(shared.iter().map(|&s| col(&p.vertices[s], -1)));
        let mut rows: Vec<Vec<Rat>> = (0..d).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let mut last = vec![Rat::zero(); m];
        last[0] = Rat::one();
        last[1] = Rat::one();
        rows.push(last);
        let mut rhs = vec![Rat::zero(); d];
        rhs.push(Rat::one());
        let sol = solve_rational(&RatMat::from_rows(rows, m), &rhs).ok_or(Error::DegenerateAdjacency)?;
        let lambda0 = Rat::one() - sol[2..].iter().sum::<Rat>();
        if !sol[0].is_positive() || !sol[1].is_positive() || !lambda0.is_positive() {
            return Err(Error::DegenerateAdjacency);
        }
        let mut lambdas = BTreeMap::new();
        lambdas.insert(i_d, sol[0].clone());
        lambdas.insert(i_d1, sol[1].clone());
        let mut coeffs = vec![Rat::zero(); p.n() + 1];
        coeffs[0] = -lambda0.clone();
        coeffs[i_d + 1] = sol[0].clone();
        coeffs[i_d1 + 1] = sol[1].clone();
        for (s, l) in shared.iter().zip(&sol[2..]) {
            lambdas.insert(*s, l.clone());
            coeffs[s + 1] = -l.clone();
        }
        out.push(AdjFunctional { facets: (a, b), shared, i_d, i_d1, lambda0, lambdas, coeffs });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Outside,
    Boundary,
    Interior,
}

impl Region {
    pub fn as_str(self) -> &'static str {
        match self {
            Region::Outside => "outside",
            Region::Boundary => "boundary",
            Region::Interior => "SF_interior",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SfClass {
    pub region: Region,
    pub in_sf_plus: bool,
    pub in_sf_zero: bool,
}

/// The inequality system of a smooth Fano polytope together with the
/// projection `ρ`.
#[derive(Clone, Debug)]
pub struct SfSystem {
    pub polytope: FanoPolytope,
    pub functionals: Vec<AdjFunctional>,
    /// Row `k - d` holds the coordinates of `v_k` in the base facet basis.
    pub rho_matrix: IntMat,
}

impl SfSystem {
    pub fn new(p: &FanoPolytope) -> Result<SfSystem> {
        let d = p.dim;
        let functionals = adjacency_functionals(p)?;
        let basis = IntMat::from_rows(p.vertices[..d].to_vec(), d);
        let inv_t = basis.unimodular_inverse().expect("base facet is a lattice basis").transpose();
        let rows = p.vertices[d..].iter().map(|v| inv_t.apply(v)).collect();
        Ok(SfSystem { polytope: p.clone(), functionals, rho_matrix: IntMat::from_rows(rows, d) })
    }

    fn check_len(&self, len: usize) -> Result<()> {
        let want = self.polytope.n() + 1;
        if len != want {
            return Err(Error::DimensionMismatch { expected: want, got: len });
        }
        Ok(())
    }

    pub fn classify(&self, x: &[Rat]) -> Result<SfClass> {
        self.check_len(x.len())?;
        let vals: Vec<Rat> = self.functionals.iter().map(|f| f.eval(x)).collect();
        let region = if vals.iter().any(|v| v.is_negative()) {
            Region::Outside
        } else if vals.iter().any(|v| v.is_zero()) {
            Region::Boundary
        } else {
            Region::Interior
        };
        let inside = region == Region::Interior;
        let d = self.polytope.dim;
        let nonneg = |s: &[Rat]| s.iter().all(|v| !v.is_negative());
        let in_sf_plus = inside && x[0].is_zero() && nonneg(&x[1..]);
        let in_sf_zero = inside && x[..=d].iter().all(|v| v.is_zero()) && nonneg(&x[d + 1..]);
        Ok(SfClass { region, in_sf_plus, in_sf_zero })
    }

    pub fn classify_int(&self, x: &IntVec) -> Result<SfClass> {
        self.classify(&x.to_rats())
    }

    /// `ρ` as a linear map, without membership checks.
    pub fn rho_linear(&self, x: &IntVec) -> IntVec {
        let d = self.polytope.dim;
        let mut y = IntVec::zeros(x.dim());
        y.0[0] = x[0].clone();
        for (r, a) in self.rho_matrix.rows().iter().enumerate() {
            let k = d + r + 1;
            let s: BigInt = (0..d).map(|i| &a[i] * &x[i + 1]).sum();
            y.0[k] = &x[k] - s;
        }
        y
    }

    pub fn rho(&self, x: &IntVec) -> Result<IntVec> {
        if !self.classify_int(x)?.in_sf_plus {
            return Err(Error::NotInSFPlus);
        }
        Ok(self.rho_linear(x))
    }

    /// `C(P, x̄)`, generated by `(0, x_0 + 1)` and `(v_i, x_i + 1)`.
    pub fn cone_of_heights(&self, x: &IntVec) -> Result<Cone> {
        if !self.classify_int(x)?.in_sf_plus {
            return Err(Error::NotInSFPlus);
        }
        let d = self.polytope.dim;
        let one = BigInt::one();
        let mut gens = vec![IntVec::zeros(d).extended(&x[0] + &one)];
        for (i, v) in self.polytope.vertices.iter().enumerate() {
            gens.push(v.extended(&x[i + 1] + &one));
        }
        Cone::new(gens)
    }
}

pub fn sf_classify(p: &FanoPolytope, x: &[Rat]) -> Result<SfClass> {
    SfSystem::new(p)?.classify(x)
}

pub fn rho(p: &FanoPolytope, x: &IntVec) -> Result<IntVec> {
    SfSystem::new(p)?.rho(x)
}

pub fn cone_of_heights(p: &FanoPolytope, x: &IntVec) -> Result<Cone> {
    SfSystem::new(p)?.cone_of_heights(x)
}

/// Linear lattice automorphisms of `P` with the induced vertex permutations.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub elements: Vec<UnimodularMap>,
    /// `perms[g][i]` is the index of the image of `v_i` under element `g`.
    pub perms: Vec<Vec<usize>>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `α(x̄)`: the height at `v_i` moves to `α(v_i)`; `x_0` is fixed.
    pub fn act(&self, g: usize, x: &IntVec) -> IntVec {
        let mut y = x.clone();
        for (i, &j) in self.perms[g].iter().enumerate() {
            y.0[j + 1] = x[i + 1].clone();
        }
        y
    }

    /// `α ⋆ x̄ = ρ(α(x̄))`.
    pub fn star(&self, sys: &SfSystem, g: usize, x: &IntVec) -> IntVec {
        sys.rho_linear(&self.act(g, x))
    }

    pub fn orbit(&self, sys: &SfSystem, x: &IntVec) -> BTreeSet<IntVec> {
        (0..self.order()).map(|g| self.star(sys, g, x)).collect()
    }
}

pub fn aut_group(p: &FanoPolytope) -> AutGroup {
    let d = p.dim;
    let basis = IntMat::from_rows(p.vertices[..d].to_vec(), d);
    let inv = basis.unimodular_inverse().expect("base facet is a lattice basis");
    let mut elements: Vec<UnimodularMap> = Vec::new();
    let mut perms = Vec::new();
    for f in &p.facets {
        for order in f.iter().permutations(d) {
            let w = IntMat::from_rows(order.iter().map(|&&i| p.vertices[i].clone()).collect(), d);
            let m = inv.mul(&w).transpose();
            let perm: Option<Vec<usize>> = p
                .vertices
                .iter()
                .map(|v| p.vertices.iter().position(|u| *u == m.apply(v)))
                .collect();
            let Some(perm) = perm else { continue };
            let g = UnimodularMap::new(m).expect("maps a lattice basis to a lattice basis");
            if !elements.contains(&g) {
                elements.push(g);
                perms.push(perm);
            }
        }
    }
    AutGroup { elements, perms }
}

/// An orbit representative of `SF⁰(P) ∩ Z^{n+1}` with its cone.
#[derive(Clone, Debug)]
pub struct OrbitRep {
    pub rep: IntVec,
    pub orbit_size: usize,
    pub cone: Cone,
}

/// Lattice points of `SF⁰(P)` with free coordinates in `[0, bound]`, grouped
/// into orbits; each orbit is listed once by its lexicographically minimal
/// element.
pub fn enumerate_regular_realizations(p: &FanoPolytope, bound: u64) -> Result<Vec<OrbitRep>> {
    let sys = SfSystem::new(p)?;
    let group = aut_group(p);
    let (d, n) = (p.dim, p.n());
    let free = n - d;
    let points = (bound as u128 + 1).checked_pow(free as u32).unwrap_or(u128::MAX);
    let limit = enumeration_cap();
    if points > limit as u128 {
        return Err(Error::CapExceeded { what: "SF0 box", limit });
    }
    let mut reps: BTreeMap<IntVec, usize> = BTreeMap::new();
    for tail in (0..free).map(|_| 0..=bound).multi_cartesian_product() {
        let mut x = IntVec::zeros(n + 1);
        for (j, t) in tail.iter().enumerate() {
            x.0[d + 1 + j] = BigInt::from(*t);
        }
        if !sys.classify_int(&x)?.in_sf_zero {
            continue;
        }
        let orbit = group.orbit(&sys, &x);
        let rep = orbit.iter().next().unwrap().clone();
        reps.insert(rep, orbit.len());
    }
    reps.into_iter()
        .map(|(rep, orbit_size)| {
            let cone = sys.cone_of_heights(&rep)?;
            Ok(OrbitRep { rep, orbit_size, cone })
        })
        .collect()
}

#[derive(Deserialize)]
struct CatalogFile {
    polygons: Vec<CatalogEntry>,
}

#[derive(Deserialize)]
struct CatalogEntry {
    name: String,
    vertices: Vec<Vec<i64>>,
}

/// The smooth Fano polygons, keyed by name (`F3`, `F4`, `Bl1`, `F5`, `F6`).
pub fn catalog() -> Vec<(String, FanoPolytope)> {
    let file: CatalogFile =
        serde_json::from_str(include_str!("../data/fano2d.json")).expect("catalog parses");
    file.polygons
        .into_iter()
        .map(|e| {
            let pts: Vec<IntVec> = e.vertices.iter().map(|v| IntVec::from_i64s(v)).collect();
            let p = is_smooth_fano(&pts).expect("catalog polygon").expect("catalog entry is smooth Fano");
            (e.name, p)
        })
        .collect()
}

pub fn catalog_polygon(name: &str) -> Option<FanoPolytope> {
    catalog().into_iter().find(|(n, _)| n == name).map(|(_, p)| p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::ivec;

    fn f3() -> FanoPolytope {
        catalog_polygon("F3").unwrap()
    }

    fn f4() -> FanoPolytope {
        catalog_polygon("F4").unwrap()
    }

    fn rats(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn smooth_fano_recognition() {
        let p = f4();
        assert_eq!((p.n(), p.dim), (4, 2));
        assert_eq!(p.facets.len(), 4);
        assert!(is_smooth_fano(&[ivec![1, 0], ivec![0, 1], ivec![-1, -1]]).unwrap().is_some());
        let bad = [ivec![2, 0], ivec![0, 1], ivec![-2, 0], ivec![0, -1]];
        let why = check_smooth_fano(&bad).unwrap().unwrap_err();
        assert!(why.contains("determinant"), "{why}");
        assert_eq!(catalog().len(), 5);
    }

    #[test]
    fn relabels_so_the_first_vertices_form_a_facet() {
        let p = is_smooth_fano(&[ivec![1, 0], ivec![-1, 0], ivec![0, 1], ivec![0, -1]]).unwrap().unwrap();
        assert!(p.facets.contains(&p.base_facet()));
    }

    #[test]
    fn f4_functionals() {
        let fs = adjacency_functionals(&f4()).unwrap();
        assert_eq!(fs.len(), 4);
        let f = fs.iter().find(|f| f.shared == vec![1] && {
            let mut e = [f.i_d, f.i_d1];
            e.sort();
            e == [0, 2]
        });
        let f = f.unwrap();
        assert_eq!(f.lambda0, rat(1, 1));
        assert_eq!(f.lambdas[&1], rat(0, 1));
        let mut c = f.coeffs.clone();
        assert_eq!(c.remove(0), rat(-1, 1));
        assert_eq!(c, vec![rat(1, 2), rat(0, 1), rat(1, 2), rat(0, 1)]);
        assert_eq!(f.integer_coeffs(), ivec![-2, 1, 0, 1, 0]);
    }

    #[test]
    fn halves_on_every_smooth_polygon() {
        for (_, p) in catalog() {
            for f in adjacency_functionals(&p).unwrap() {
                assert_eq!(f.lambdas[&f.i_d], rat(1, 2));
                assert_eq!(f.lambdas[&f.i_d1], rat(1, 2));
                let shared: Rat = f.shared.iter().map(|s| f.lambdas[s].clone()).sum();
                assert_eq!(&f.lambda0 + shared, rat(1, 1));
            }
        }
    }

    #[test]
    fn classification() {
        let s = SfSystem::new(&f4()).unwrap();
        assert_eq!(s.classify(&rats(&[0; 5])).unwrap().region, Region::Boundary);
        let c = s.classify(&rats(&[0, 0, 0, 1, 1])).unwrap();
        assert!(c.in_sf_zero && c.in_sf_plus);
        assert_eq!(s.classify(&rats(&[0, 0, 0, 1, 0])).unwrap().region, Region::Boundary);
        assert_eq!(s.classify(&rats(&[5, 0, 0, 1, 1])).unwrap().region, Region::Outside);
        for (_, p) in catalog() {
            let s = SfSystem::new(&p).unwrap();
            for k in 1..4 {
                let mut x = vec![0];
                x.extend(std::iter::repeat_n(k, p.n()));
                assert!(s.classify(&rats(&x)).unwrap().in_sf_plus);
            }
        }
        assert!(matches!(s.classify(&rats(&[0, 1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn rho_formulas() {
        let s4 = SfSystem::new(&f4()).unwrap();
        assert_eq!(s4.rho(&ivec![0, 1, 2, 3, 4]).unwrap(), ivec![0, 0, 0, 4, 6]);
        let s3 = SfSystem::new(&f3()).unwrap();
        assert_eq!(s3.rho(&ivec![0, 1, 2, 3]).unwrap(), ivec![0, 0, 0, 6]);
        let y = ivec![0, 0, 0, 2, 3];
        assert_eq!(s4.rho(&y).unwrap(), y);
        assert!(matches!(s4.rho(&ivec![0, 0, 0, 0, 0]), Err(Error::NotInSFPlus)));
    }

    #[test]
    fn heights_cone() {
        let c = cone_of_heights(&f4(), &ivec![0, 1, 1, 1, 1]).unwrap();
        assert_eq!(c.extreme_rays().len(), 4);
        assert!(c.contains_relint(&ivec![0, 0, 1]));
        assert!(c.extreme_rays().contains(&ivec![-1, 0, 2]));
        assert!(matches!(cone_of_heights(&f4(), &ivec![1, 1, 1, 1, 1]), Err(Error::NotInSFPlus)));
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(aut_group(&f4()).order(), 8);
        assert_eq!(aut_group(&f3()).order(), 6);
        assert_eq!(aut_group(&catalog_polygon("F6").unwrap()).order(), 12);
        for (_, p) in catalog() {
            let s = SfSystem::new(&p).unwrap();
            let g = aut_group(&p);
            let mut x = vec![0];
            x.extend(std::iter::repeat_n(2, p.n()));
            let fixed = s.rho_linear(&IntVec::from_i64s(&x));
            for e in 0..g.order() {
                assert_eq!(g.star(&s, e, &fixed), fixed);
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let reps = enumerate_regular_realizations(&f3(), 6).unwrap();
        let got: Vec<IntVec> = reps.iter().map(|r| r.rep.clone()).collect();
        let want: Vec<IntVec> = (1..=6).map(|k| ivec![0, 0, 0, k]).collect();
        assert_eq!(got, want);

        let reps = enumerate_regular_realizations(&f4(), 3).unwrap();
        let got: Vec<IntVec> = reps.iter().map(|r| r.rep.clone()).collect();
        let mut want = Vec::new();
        for a in 1..=3 {
            for b in a..=3 {
                want.push(ivec![0, 0, 0, a, b]);
            }
        }
        assert_eq!(got, want);
        assert!(enumerate_regular_realizations(&f4(), 0).unwrap().is_empty());
    }
}
