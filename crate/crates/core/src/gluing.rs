//! Cone gluing along lattice isomorphic facets, stacked realizations and the
//! crack-in-half construction for stellar polygons.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bottomcx::{bottom_complex, convex_towards_zero, verify_bottom, verify_reduced_bottom, EmbeddedComplex, VerificationReport};
use crate::caps::DEFAULT_T_CAP;
use crate::cone::{facet_lattice_isomorphism, map_from_correspondence, Cone, ConeFace};
use crate::error::{Error, Result};
use crate::exactlin::{IntMat, IntVec, LatticeChart, UnimodularMap};
use crate::monoid::{hilbert_basis, is_normal};

/// The choices made while gluing two cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingData {
    /// Extension of the facet isomorphism `F1 -> F2` to `Z^d`.
    pub theta: UnimodularMap,
    pub reflection_used: bool,
    /// The reflection applied to the second cone when both sides coincide.
    pub rho: Option<UnimodularMap>,
    pub u: IntVec,
    pub v: IntVec,
    /// Basis of the lattice of the shared facet.
    pub w: Vec<IntVec>,
    pub gamma: IntVec,
    /// Primitive linear form vanishing on the shared facet, nonnegative on the
    /// first part.
    pub h: IntVec,
    /// Threshold at which the union is a cone.
    pub t_cone: u64,
    /// Parameter actually used.
    pub t: u64,
    pub alpha_t: UnimodularMap,
    pub beta_t: UnimodularMap,
}

impl GluingData {
    /// Lattice isomorphism from the first input cone onto `C^+`.
    pub fn plus_map(&self) -> UnimodularMap {
        self.alpha_t.compose(&self.theta)
    }

    /// Lattice isomorphism from the second input cone onto `C^-`.
    pub fn minus_map(&self) -> UnimodularMap {
        match &self.rho {
            Some(r) => self.beta_t.compose(r),
            None => self.beta_t.clone(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct GlueOptions {
    pub theta: Option<UnimodularMap>,
    pub gamma: Option<IntVec>,
    pub t_cap: Option<u64>,
}

/// `x -> x + s t h(x) gamma`
pub fn shear(h: &IntVec, gamma: &IntVec, t: i64) -> UnimodularMap {
    let d = h.dim();
    let rows = (0..d)
        .map(|i| {
            let mut r = IntVec::unit(d, i);
            let k = &gamma[i] * BigInt::from(t);
            r = r.add_scaled(&k, h);
            r
        })
        .collect();
    UnimodularMap::new(IntMat::from_rows(rows, d)).expect("shear along the kernel is unimodular")
}

struct Setup {
    theta: UnimodularMap,
    rho: Option<UnimodularMap>,
    d1: Cone,
    d2: Cone,
    f2: Cone,
    h: IntVec,
    u: IntVec,
    w: Vec<IntVec>,
    gamma: IntVec,
    xs: Vec<IntVec>,
    ys: Vec<IntVec>,
}

fn facet_normal(c: &Cone, f: &ConeFace) -> Result<IntVec> {
    if f.dim + 1 != c.rank() || f.normal_indices.len() != 1 {
        return Err(Error::InvalidInput("face is not a facet".into()));
    }
    Ok(c.facet_normals()[f.normal_indices[0]].clone())
}

/// A vector `u` with `h(u) = 1`: a unit vector when possible.
fn transversal(h: &IntVec, chart: &LatticeChart) -> IntVec {
    let d = h.dim();
    if let Some(j) = (0..d).find(|&j| h[j].is_one()) {
        return IntVec::unit(d, j);
    }
    let c = chart.complement()[0].clone();
    if h.dot(&c).is_one() {
        c
    } else {
        -&c
    }
}

fn setup(c1: &Cone, f1: &ConeFace, c2: &Cone, f2: &ConeFace, opts: &GlueOptions) -> Result<Setup> {
    if c1.dim() != c2.dim() {
        return Err(Error::DimensionMismatch { expected: c1.dim(), got: c2.dim() });
    }
    if !c1.is_full_dimensional() || !c2.is_full_dimensional() {
        return Err(Error::InvalidInput("gluing needs full-dimensional cones".into()));
    }
    facet_normal(c1, f1)?;
    let n2 = facet_normal(c2, f2)?;
    let f2_cone = f2.cone();
    let f2_rays: BTreeSet<IntVec> = f2.rays.iter().cloned().collect();

    let theta = match &opts.theta {
        Some(t) => {
            let img: BTreeSet<IntVec> = f1.rays.iter().map(|r| t.apply(r)).collect();
            if img != f2_rays || !t.det().abs().is_one() {
                return Err(Error::NotIsomorphicFacets);
            }
            t.clone()
        }
        None => facet_lattice_isomorphism(f1, f2)?.ok_or(Error::NotIsomorphicFacets)?,
    };
    let d1 = c1.image(&theta);
    let side = d1
        .extreme_rays()
        .iter()
        .map(|r| n2.dot(r))
        .find(|v| !v.is_zero())
        .expect("a full cone has rays off a facet");
    let f2_chart = LatticeChart::new(&f2.rays, c1.dim());
    let (h, rho, d2) = if side.is_negative() {
        (-&n2, None, c2.clone())
    } else {
        let u = transversal(&n2, &f2_chart);
        // rho(x) = x - 2 h(x) u
        let d = n2.dim();
        let rows = (0..d)
            .map(|i| IntVec::unit(d, i).add_scaled(&(&u[i] * BigInt::from(-2)), &n2))
            .collect();
        let rho = UnimodularMap::new(IntMat::from_rows(rows, d)).expect("reflection");
        let d2 = c2.image(&rho);
        (n2.clone(), Some(rho), d2)
    };
    let u = transversal(&h, &f2_chart);
    let w = f2_chart.basis().to_vec();
    let gamma = match &opts.gamma {
        Some(g) => {
            if g.dim() != c1.dim() || !f2_cone.contains_relint(g) {
                return Err(Error::InvalidGamma(format!("{g} is not in the relative interior of the shared facet")));
            }
            g.clone()
        }
        None => hilbert_basis(&f2_cone)?.iter().fold(IntVec::zeros(c1.dim()), |a, b| &a + b),
    };
    let xs = d1.extreme_rays().iter().filter(|r| !h.dot(r).is_zero()).cloned().collect();
    let ys = d2.extreme_rays().iter().filter(|r| !h.dot(r).is_zero()).cloned().collect();
    Ok(Setup { theta, rho, d1, d2, f2: f2_cone, h, u, w, gamma, xs, ys })
}

impl Setup {
    /// Scaled crossing point of `[alpha_t(x), beta_t(y)]` with the hyperplane.
    fn crossing(&self, x: &IntVec, y: &IntVec, t: u64) -> IntVec {
        let a = self.h.dot(x);
        let b = -self.h.dot(y);
        let base = x.scale(&b).add_scaled(&a, y);
        base.add_scaled(&(BigInt::from(2) * BigInt::from(t) * &a * &b), &self.gamma)
    }

    fn strict(&self, t: u64) -> bool {
        self.xs.iter().all(|x| self.ys.iter().all(|y| self.f2.contains_relint(&self.crossing(x, y, t))))
    }

    fn union_is_cone(&self) -> bool {
        let closed = self.xs.iter().all(|x| self.ys.iter().all(|y| self.f2.contains(&self.crossing(x, y, 0))));
        let mut rays = self.d1.extreme_rays().to_vec();
        rays.extend(self.d2.extreme_rays().iter().cloned());
        closed && Cone::new(rays).is_ok()
    }

    fn alpha(&self, t: u64) -> UnimodularMap {
        shear(&self.h, &self.gamma, t as i64)
    }

    fn beta(&self, t: u64) -> UnimodularMap {
        shear(&self.h, &self.gamma, -(t as i64))
    }

    fn glued(&self, t: u64) -> Cone {
        let (a, b) = (self.alpha(t), self.beta(t));
        let mut rays: Vec<IntVec> = self.d1.extreme_rays().iter().map(|r| a.apply(r)).collect();
        rays.extend(self.d2.extreme_rays().iter().map(|r| b.apply(r)));
        Cone::new(rays).expect("glued cone is pointed")
    }

    fn data(&self, t_cone: u64, t: u64) -> GluingData {
        GluingData {
            theta: self.theta.clone(),
            reflection_used: self.rho.is_some(),
            rho: self.rho.clone(),
            u: self.u.clone(),
            v: -&self.u,
            w: self.w.clone(),
            gamma: self.gamma.clone(),
            h: self.h.clone(),
            t_cone,
            t,
            alpha_t: self.alpha(t),
            beta_t: self.beta(t),
        }
    }
}

/// Smallest `t >= start` with `pred(t)`, assuming monotonicity, by doubling
/// and then bisection.
pub fn minimal_t(start: u64, cap: u64, mut pred: impl FnMut(u64) -> Result<bool>) -> Result<u64> {
    if pred(start)? {
        return Ok(start);
    }
    let mut lo = start;
    let mut step = 1u64;
    let hi = loop {
        let hi = lo.saturating_add(step).min(cap);
        if pred(hi)? {
            break hi;
        }
        if hi >= cap {
            return Err(Error::CapExceeded { what: "gluing parameter t", limit: cap });
        }
        lo = hi;
        step = step.saturating_mul(2);
    };
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Glues `C1` and `C2` along lattice isomorphic facets. The parameter is 0
/// when the union of the two aligned cones is already a cone, and otherwise
/// the least `t` for which every segment `[alpha_t(x_i), beta_t(y_j)]`
/// crosses the relative interior of the shared facet.
pub fn glue_cones(c1: &Cone, f1: &ConeFace, c2: &Cone, f2: &ConeFace, opts: &GlueOptions) -> Result<(Cone, GluingData)> {
    let s = setup(c1, f1, c2, f2, opts)?;
    let cap = opts.t_cap.unwrap_or(DEFAULT_T_CAP);
    let t = if s.union_is_cone() { 0 } else { minimal_t(0, cap, |t| Ok(s.strict(t)))? };
    Ok((s.glued(t), s.data(t, t)))
}

#[derive(Clone, Debug)]
pub struct GlueResult {
    pub cone: Cone,
    pub data: GluingData,
    pub report: VerificationReport,
}

/// Glues two reduced realizations and increases `t` until the union of the
/// moved bottoms is convex towards 0. The result's bottom complex must equal
/// that union and pass the reduced verifier.
pub fn glue_reduced(c1: &Cone, f1: &ConeFace, c2: &Cone, f2: &ConeFace, opts: &GlueOptions) -> Result<GlueResult> {
    glue_with_bottoms(c1, f1, c2, f2, opts, true)
}

fn glue_with_bottoms(
    c1: &Cone,
    f1: &ConeFace,
    c2: &Cone,
    f2: &ConeFace,
    opts: &GlueOptions,
    reduced: bool,
) -> Result<GlueResult> {
    let s = setup(c1, f1, c2, f2, opts)?;
    let cap = opts.t_cap.unwrap_or(DEFAULT_T_CAP);
    let t_cone = if s.union_is_cone() { 0 } else { minimal_t(0, cap, |t| Ok(s.strict(t)))? };
    let b1 = bottom_complex(&s.d1)?;
    let b2 = bottom_complex(&s.d2)?;
    let union_at = |t: u64| -> EmbeddedComplex {
        let (a, b) = (s.alpha(t), s.beta(t));
        let mut polys: Vec<Vec<IntVec>> = (0..b1.facets.len())
            .map(|f| b1.facet_points(f).iter().map(|p| a.apply(p)).collect())
            .collect();
        polys.extend((0..b2.facets.len()).map(|f| b2.facet_points(f).iter().map(|p| b.apply(p)).collect()));
        EmbeddedComplex::from_polytopes(c1.dim(), &polys)
    };
    let t = minimal_t(t_cone, cap, |t| Ok(convex_towards_zero(&union_at(t))?.is_none()))
        .map_err(|e| match e {
            Error::CapExceeded { .. } => Error::ReducednessLost { t: cap },
            e => e,
        })?;
    let cone = s.glued(t);
    let bottom = bottom_complex(&cone)?;
    if facet_sets(&bottom) != facet_sets(&union_at(t)) {
        return Err(Error::ReducednessLost { t });
    }
    let report = if reduced { verify_reduced_bottom(&bottom)? } else { verify_bottom(&bottom)? };
    if !report.passed() {
        return Err(Error::ReducednessLost { t });
    }
    Ok(GlueResult { cone, data: s.data(t_cone, t), report })
}

fn facet_sets(k: &EmbeddedComplex) -> BTreeSet<BTreeSet<IntVec>> {
    (0..k.facets.len()).map(|f| k.facet_points(f).into_iter().collect()).collect()
}

/// A complex given by its facets in stacking order: each facet meets the
/// union of the previous ones in one of its own facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackedComplex {
    pub vertices: Vec<(String, IntVec)>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct StackedRealization {
    pub cone: Cone,
    /// Position of every vertex in the realizing cone.
    pub positions: BTreeMap<String, IntVec>,
    pub complex: EmbeddedComplex,
    pub t_values: Vec<u64>,
}

/// Iterated gluing of the cones over the facets of a stacked complex. In
/// reduced mode every facet must be normal and the result passes the reduced
/// verifier; otherwise the bottom verifier.
pub fn stack_realize(s: &StackedComplex, reduced: bool) -> Result<StackedRealization> {
    let coords: BTreeMap<&str, &IntVec> = s.vertices.iter().map(|(k, v)| (k.as_str(), v)).collect();
    let lookup = |id: &str| -> Result<IntVec> {
        coords.get(id).map(|v| (*v).clone()).ok_or_else(|| Error::NotStacked(format!("unknown vertex {id}")))
    };
    if s.facets.is_empty() {
        return Err(Error::NotStacked("no facets".into()));
    }
    let mut positions: BTreeMap<String, IntVec> = BTreeMap::new();
    let mut acc: Option<Cone> = None;
    let mut t_values = Vec::new();
    let mut k_dim = None;
    for (i, facet) in s.facets.iter().enumerate() {
        let pts: Vec<IntVec> = facet.iter().map(|id| lookup(id)).collect::<Result<_>>()?;
        if reduced && !is_normal(&pts)? {
            return Err(Error::NonNormalFacet(i));
        }
        let local = affine_coordinates(&pts);
        let k = local[0].dim();
        if *k_dim.get_or_insert(k) != k {
            return Err(Error::NotStacked(format!("facet {i} has a different dimension")));
        }
        let cone_i = Cone::new(local.clone())?;
        let Some(c_acc) = acc.take() else {
            for (id, p) in facet.iter().zip(&local) {
                positions.insert(id.clone(), p.clone());
            }
            acc = Some(cone_i);
            continue;
        };
        let shared: Vec<usize> = (0..facet.len()).filter(|&j| positions.contains_key(&facet[j])).collect();
        let src: Vec<IntVec> = shared.iter().map(|&j| local[j].clone()).collect();
        let dst: Vec<IntVec> = shared.iter().map(|&j| positions[&facet[j]].clone()).collect();
        let not_stacked = || Error::NotStacked(format!("facet {i} does not meet the previous ones in a facet"));
        let f1 = cone_i.facet_through(&src).ok_or_else(not_stacked)?;
        let f2 = c_acc.facet_through(&dst).ok_or_else(not_stacked)?;
        if f1.rays.len() != src.len() || f2.rays.len() != dst.len() {
            return Err(not_stacked());
        }
        let theta = map_from_correspondence(&src, &dst).ok_or_else(not_stacked)?;
        let opts = GlueOptions { theta: Some(theta), ..GlueOptions::default() };
        let res = glue_with_bottoms(&cone_i, &f1, &c_acc, &f2, &opts, reduced)?;
        let minus = res.data.minus_map();
        for p in positions.values_mut() {
            *p = minus.apply(p);
        }
        let plus = res.data.plus_map();
        for (id, p) in facet.iter().zip(&local) {
            positions.entry(id.clone()).or_insert_with(|| plus.apply(p));
        }
        t_values.push(res.data.t);
        acc = Some(res.cone);
    }
    let cone = acc.expect("at least one facet");
    let complex = EmbeddedComplex::with_ids(
        cone.dim(),
        positions.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
        s.facets.clone(),
    )?;
    Ok(StackedRealization { cone, positions, complex, t_values })
}

/// Coordinates of the points in the affine lattice of their hull, lifted to
/// height one.
fn affine_coordinates(pts: &[IntVec]) -> Vec<IntVec> {
    let d = pts[0].dim();
    let edges: Vec<IntVec> = pts.iter().map(|p| p - &pts[0]).filter(|e| !e.is_zero()).collect();
    let chart = LatticeChart::new(&edges, d);
    pts.iter().map(|p| chart.coords(&(p - &pts[0])).extended(BigInt::one())).collect()
}

/// A realization of the stellar triangulation of an `n`-gon.
#[derive(Clone, Debug)]
pub struct NgonRealization {
    pub cone: Cone,
    /// The pair of triangles exchanged by the half-turn about the apex axis,
    /// cracked at the next step.
    pub symmetric_pair: Option<[Vec<IntVec>; 2]>,
    pub t_values: Vec<u64>,
}

fn polygon_cone(verts: &[[i64; 2]]) -> Cone {
    Cone::new(verts.iter().map(|v| IntVec::from_i64s(&[v[0], v[1], 2])).collect()).expect("polygon cone")
}

/// Half-turn about the third axis.
fn half_turn(x: &IntVec) -> IntVec {
    IntVec(vec![-x[0].clone(), -x[1].clone(), x[2].clone()])
}

/// Reduced conic realization of the stellar `n`-gon: the cones over `F3`,
/// `F4`, `F5` at height 2, and for larger `n` repeated cracking of a
/// rotationally symmetric pair of triangles.
pub fn realize_stellar_ngon(n: usize) -> Result<NgonRealization> {
    if n < 3 {
        return Err(Error::InvalidInput("n must be at least 3".into()));
    }
    let o = IntVec::from_i64s(&[0, 0, 1]);
    if n == 3 {
        let cone = polygon_cone(&[[1, 0], [0, 1], [-1, -1]]);
        return Ok(NgonRealization { cone, symmetric_pair: None, t_values: vec![] });
    }
    let (mut cone, mut a, mut c) = if n.is_multiple_of(2) {
        (polygon_cone(&[[1, 0], [0, 1], [-1, 0], [0, -1]]), IntVec::from_i64s(&[1, 0, 2]), IntVec::from_i64s(&[0, 1, 2]))
    } else {
        (
            polygon_cone(&[[1, 0], [1, 1], [0, 1], [-1, 0], [0, -1]]),
            IntVec::from_i64s(&[0, 1, 2]),
            IntVec::from_i64s(&[-1, 0, 2]),
        )
    };
    let base = if n.is_multiple_of(2) { 4 } else { 5 };
    let mut t_values = Vec::new();
    for _ in 0..(n - base) / 2 {
        let e = &a + &c;
        // h vanishes on O and E, positive on A.
        let mut h = IntVec(vec![e[1].clone(), -e[0].clone(), BigInt::zero()]);
        if h.dot(&a).is_negative() {
            h = -&h;
        }
        let plus = cone.intersect_halfspace(&h)?;
        let minus = cone.intersect_halfspace(&-&h)?;
        let f1 = plus.facet_with_normal(&h).ok_or(Error::InvalidInput("crack plane".into()))?;
        let f2 = minus.facet_with_normal(&-&h).ok_or(Error::InvalidInput("crack plane".into()))?;
        let opts = GlueOptions { theta: Some(UnimodularMap::identity(3)), gamma: Some(o.clone()), t_cap: None };
        let res = glue_reduced(&plus, &f1, &minus, &f2, &opts)?;
        t_values.push(res.data.t);
        let c_new = res.data.minus_map().apply(&c);
        a = e;
        c = c_new;
        cone = res.cone;
    }
    let pair = [vec![o.clone(), a.clone(), c.clone()], vec![o, half_turn(&a), half_turn(&c)]];
    Ok(NgonRealization { cone, symmetric_pair: Some(pair), t_values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bottomcx::Status;
    use crate::ivec;

    fn c1() -> Cone {
        Cone::new(vec![ivec![-1, 0, 1], ivec![0, 0, 1], ivec![1, 0, 2], ivec![3, 1, 2]]).unwrap()
    }

    fn c2() -> Cone {
        Cone::new(vec![ivec![-1, 0, 1], ivec![0, 0, 1], ivec![1, 0, 2], ivec![3, -1, 2]]).unwrap()
    }

    #[test]
    fn example_gluing_threshold() {
        let (a, b) = (c1(), c2());
        let f1 = a.facet_with_normal(&ivec![0, 1, 0]).unwrap();
        let f2 = b.facet_with_normal(&ivec![0, -1, 0]).unwrap();
        let opts = GlueOptions { gamma: Some(ivec![0, 0, 1]), ..Default::default() };
        let (cone, data) = glue_cones(&a, &f1, &b, &f2, &opts).unwrap();
        assert_eq!(data.t, 5);
        assert_eq!(data.u, ivec![0, 1, 0]);
        assert_eq!(data.v, ivec![0, -1, 0]);
        assert!(!data.reflection_used);
        assert!(cone.contains(&ivec![3, 1, 7]));
        assert!(cone.contains(&ivec![3, -1, 7]));
    }

    #[test]
    fn split_orthant_needs_no_shear() {
        let a = Cone::new(vec![ivec![1, 0, 0], ivec![1, 1, 0], ivec![0, 0, 1]]).unwrap();
        let b = Cone::new(vec![ivec![0, 1, 0], ivec![1, 1, 0], ivec![0, 0, 1]]).unwrap();
        let f1 = a.facet_through(&[ivec![1, 1, 0], ivec![0, 0, 1]]).unwrap();
        let f2 = b.facet_through(&[ivec![1, 1, 0], ivec![0, 0, 1]]).unwrap();
        let (cone, data) = glue_cones(&a, &f1, &b, &f2, &GlueOptions::default()).unwrap();
        assert_eq!(data.t, 0);
        assert_eq!(cone.extreme_rays(), &[ivec![0, 0, 1], ivec![0, 1, 0], ivec![1, 0, 0]]);
    }

    #[test]
    fn reflection_when_same_side() {
        let a = Cone::new(vec![ivec![1, 0], ivec![1, 1]]).unwrap();
        let f = a.facet_through(&[ivec![1, 0]]).unwrap();
        let (cone, data) = glue_cones(&a, &f, &a, &f, &GlueOptions::default()).unwrap();
        assert!(data.reflection_used);
        assert_eq!(data.rho.as_ref().unwrap().det(), BigInt::from(-1));
        assert_eq!(cone.rank(), 2);
    }

    #[test]
    fn example_reduced_gluing() {
        let (a, b) = (c1(), c2());
        let f1 = a.facet_with_normal(&ivec![0, 1, 0]).unwrap();
        let f2 = b.facet_with_normal(&ivec![0, -1, 0]).unwrap();
        let opts = GlueOptions { gamma: Some(ivec![0, 0, 1]), ..Default::default() };
        let r = glue_reduced(&a, &f1, &b, &f2, &opts).unwrap();
        assert!(r.data.t >= r.data.t_cone);
        assert_eq!(r.report.status, Status::ReducedBottom);
        assert_eq!(bottom_complex(&r.cone).unwrap().facets.len(), 4);
    }

    #[test]
    fn small_ngons() {
        for n in 3..=6 {
            let r = realize_stellar_ngon(n).unwrap();
            let b = bottom_complex(&r.cone).unwrap();
            assert_eq!(b.facets.len(), n, "n = {n}");
            assert_eq!(verify_reduced_bottom(&b).unwrap().status, Status::ReducedBottom);
        }
    }

    #[test]
    fn stacked_square() {
        let s = StackedComplex {
            vertices: vec![
                ("a".into(), ivec![0, 0]),
                ("b".into(), ivec![1, 0]),
                ("c".into(), ivec![0, 1]),
                ("d".into(), ivec![1, 1]),
            ],
            facets: vec![vec!["a".into(), "b".into(), "c".into()], vec!["b".into(), "c".into(), "d".into()]],
        };
        let r = stack_realize(&s, true).unwrap();
        let b = bottom_complex(&r.cone).unwrap();
        assert_eq!(b.facets.len(), 2);
        assert_eq!(verify_reduced_bottom(&r.complex).unwrap().status, Status::ReducedBottom);
    }
}
