//! Affine monoids: Hilbert bases, lattice points of polytopes, normality and
//! the maximal decomposition length.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::caps::enumeration_cap;
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::exactlin::{
    hermite_normal_form, integer_kernel, maximal_minor_gcd, IntMat, IntVec, Rat,
};

/// Pulling triangulation of a cone into simplicial cones, each given by its
/// extreme rays (ambient vectors).
pub fn triangulate(c: &Cone) -> Vec<Vec<IntVec>> {
    if c.is_simplicial() {
        return vec![c.extreme_rays().to_vec()];
    }
    let apex = c.extreme_rays()[0].clone();
    let mut out = Vec::new();
    for (j, f) in c.facets().into_iter().enumerate() {
        if c.facet_normals()[j].dot(&apex).is_zero() {
            continue;
        }
        for mut s in triangulate(&f.cone()) {
            s.insert(0, apex.clone());
            out.push(s);
        }
    }
    out
}

/// Lattice points `sum q_i s_i` with `q_i in [0,1)` of the simplicial cone on
/// `rays`, all lying in the lattice of the chart.
fn parallelepiped_points(c: &Cone, rays: &[IntVec]) -> Result<Vec<IntVec>> {
    let chart = c.chart();
    let k = chart.rank;
    let local: Vec<IntVec> = rays.iter().map(|r| chart.coords(r)).collect();
    let s = IntMat::from_rows(local.clone(), k);
    let (h, _) = hermite_normal_form(&s);
    let diag: Vec<BigInt> = (0..k).map(|i| h[(i, i)].clone()).collect();
    let count = diag.iter().fold(BigInt::one(), |a, b| a * b);
    let cap = enumeration_cap();
    if count > BigInt::from(cap) {
        return Err(Error::CapExceeded { what: "parallelepiped enumeration", limit: cap });
    }
    let s_inv = s.to_rat().inverse().expect("simplicial rays are independent");
    let mut out = Vec::new();
    let bounds: Vec<i64> = diag.iter().map(|d| d.to_i64().expect("small index")).collect();
    for_each_in_box(&vec![0; k], &bounds.iter().map(|b| b - 1).collect::<Vec<_>>(), |x| {
        // coefficients lambda with x = lambda S
        let lam: Vec<Rat> = (0..k)
            .map(|j| (0..k).map(|i| Rat::from_integer(x[i].clone()) * &s_inv.rows()[i][j]).sum())
            .collect();
        let mut p = IntVec::zeros(k);
        let mut acc: Vec<Rat> = vec![Rat::zero(); k];
        for (l, row) in lam.iter().zip(&local) {
            let fr = l - l.floor();
            for (a, v) in acc.iter_mut().zip(row.iter()) {
                *a += &fr * Rat::from_integer(v.clone());
            }
        }
        for (pi, a) in p.0.iter_mut().zip(&acc) {
            debug_assert!(a.is_integer());
            *pi = a.to_integer();
        }
        if !p.is_zero() {
            out.push(chart.lift(&p));
        }
    });
    Ok(out)
}

/// Calls `f` on every integer point of the box `[lo, hi]`.
pub fn for_each_in_box(lo: &[i64], hi: &[i64], mut f: impl FnMut(&IntVec)) {
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return;
    }
    let mut x: Vec<i64> = lo.to_vec();
    loop {
        f(&IntVec::from_i64s(&x));
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

/// Number of points in a box, or `CapExceeded`.
pub fn check_box(lo: &[i64], hi: &[i64], what: &'static str) -> Result<()> {
    let cap = enumeration_cap();
    let mut n: u128 = 1;
    for (a, b) in lo.iter().zip(hi) {
        n = n.saturating_mul((b - a + 1).max(0) as u128);
    }
    if n > cap as u128 {
        return Err(Error::CapExceeded { what, limit: cap });
    }
    Ok(())
}

/// The Hilbert basis of `C ∩ Z^d`, sorted by the cone's grading and then
/// lexicographically.
pub fn hilbert_basis(c: &Cone) -> Result<Vec<IntVec>> {
    let mut cand: BTreeSet<IntVec> = c.extreme_rays().iter().cloned().collect();
    for s in triangulate(c) {
        cand.extend(parallelepiped_points(c, &s)?);
    }
    let cand: Vec<IntVec> = cand.into_iter().collect();
    let mut basis: Vec<IntVec> = cand
        .iter()
        .filter(|x| {
            !cand.iter().any(|y| {
                y != *x && {
                    let r = &**x - y;
                    c.contains(&r)
                }
            })
        })
        .cloned()
        .collect();
    let g = c.grading();
    basis.sort_by(|a, b| (g.dot(a), a).cmp(&(g.dot(b), b)));
    Ok(basis)
}

/// A lattice polytope given by any finite set of points; `vertices` keeps the
/// extreme points only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    pub dim: usize,
    pub vertices: Vec<IntVec>,
}

impl LatticePolytope {
    pub fn new(points: &[IntVec]) -> Result<LatticePolytope> {
        let dim = points.first().ok_or(Error::InvalidInput("empty polytope".into()))?.dim();
        if points.len() == 1 {
            return Ok(LatticePolytope { dim, vertices: points.to_vec() });
        }
        let cone = homogenized_cone(points)?;
        let mut vertices: Vec<IntVec> = cone.extreme_rays().iter().map(IntVec::truncated).collect();
        vertices.sort();
        Ok(LatticePolytope { dim, vertices })
    }

    /// The cone over `(P, 1)`.
    pub fn cone(&self) -> Cone {
        homogenized_cone(&self.vertices).expect("polytope cone is pointed")
    }

    pub fn contains(&self, x: &IntVec) -> bool {
        self.cone().contains(&x.extended(BigInt::one()))
    }

    pub fn lattice_points(&self) -> Result<Vec<IntVec>> {
        lattice_points(&self.vertices)
    }

    /// Affine dimension.
    pub fn affine_dim(&self) -> usize {
        self.cone().rank() - 1
    }
}

/// The cone over `(p, 1)` for the given points.
pub fn homogenized_cone(points: &[IntVec]) -> Result<Cone> {
    Cone::new(points.iter().map(|p| p.extended(BigInt::one())).collect())
}

/// All lattice points of `conv(points)`, in lexicographic order.
pub fn lattice_points(points: &[IntVec]) -> Result<Vec<IntVec>> {
    let d = points[0].dim();
    if points.len() == 1 {
        return Ok(points.to_vec());
    }
    let cone = homogenized_cone(points)?;
    let lo: Vec<i64> = (0..d).map(|i| points.iter().map(|p| p[i].to_i64().unwrap()).min().unwrap()).collect();
    let hi: Vec<i64> = (0..d).map(|i| points.iter().map(|p| p[i].to_i64().unwrap()).max().unwrap()).collect();
    check_box(&lo, &hi, "polytope lattice points")?;
    let mut out = Vec::new();
    for_each_in_box(&lo, &hi, |x| {
        if cone.contains(&x.extended(BigInt::one())) {
            out.push(x.clone());
        }
    });
    out.sort();
    Ok(out)
}

/// Lattice points of `conv(0, points)`.
pub fn pyramid_points(points: &[IntVec]) -> Result<Vec<IntVec>> {
    let mut all = points.to_vec();
    all.push(IntVec::zeros(points[0].dim()));
    lattice_points(&all)
}

/// Normality via the criterion `Hilb(R_+(P,1)) = {(x,1) : x in P ∩ Z^d}`,
/// relative to the lattice of the affine hull.
pub fn is_normal(vertices: &[IntVec]) -> Result<bool> {
    if vertices.len() == 1 {
        return Ok(true);
    }
    let cone = homogenized_cone(vertices)?;
    let last = vertices[0].dim();
    Ok(hilbert_basis(&cone)?.iter().all(|h| h[last].is_one()))
}

pub fn is_unimodular_simplex(vertices: &[IntVec]) -> Result<bool> {
    let v0 = &vertices[0];
    let edges: Vec<IntVec> = vertices[1..].iter().map(|v| v - v0).collect();
    if edges.is_empty() {
        return Ok(true);
    }
    if IntMat::from_rows(edges.clone(), v0.dim()).rank() != edges.len() {
        return Err(Error::NotASimplex);
    }
    Ok(maximal_minor_gcd(&edges).is_one())
}

/// Value of the primitive normal of the hyperplane `Aff(points)` on
/// `p - origin`, up to sign.
pub fn lattice_height(points: &[IntVec], origin: &IntVec) -> Result<BigInt> {
    let d = origin.dim();
    let edges: Vec<IntVec> = points[1..].iter().map(|v| v - &points[0]).collect();
    let rank = if edges.is_empty() { 0 } else { IntMat::from_rows(edges.clone(), d).rank() };
    if rank + 1 != d {
        return Err(Error::NotAHyperplane);
    }
    let a = if edges.is_empty() {
        IntVec::from_i64s(&[1])
    } else {
        integer_kernel(&IntMat::from_rows(edges, d)).remove(0)
    };
    let v = a.dot(&(&points[0] - origin));
    if v.is_zero() {
        return Err(Error::OriginOnHyperplane);
    }
    Ok(v.abs())
}

pub fn lattice_distance_one(points: &[IntVec], origin: &IntVec) -> Result<bool> {
    Ok(lattice_height(points, origin)?.is_one())
}

/// Maximal decomposition length in the monoid generated by `gens`, memoized
/// over residuals.
pub struct LengthOracle {
    gens: Vec<IntVec>,
    cone: Cone,
    memo: HashMap<IntVec, Option<u32>>,
    cap: u64,
}

impl LengthOracle {
    pub fn new(gens: Vec<IntVec>) -> Result<LengthOracle> {
        let gens: Vec<IntVec> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let cone = Cone::new(gens.clone())?;
        Ok(LengthOracle { gens, cone, memo: HashMap::new(), cap: enumeration_cap() })
    }

    /// Oracle over the Hilbert basis of `C`.
    pub fn for_cone(c: &Cone) -> Result<LengthOracle> {
        LengthOracle::new(hilbert_basis(c)?)
    }

    pub fn generators(&self) -> &[IntVec] {
        &self.gens
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    /// `ℓ(m)`; `NotInMonoid` if `m` is not a nonzero monoid element.
    pub fn length(&mut self, m: &IntVec) -> Result<u32> {
        if m.is_zero() {
            return Err(Error::NotInMonoid);
        }
        self.rec(m)?.ok_or(Error::NotInMonoid)
    }

    pub fn in_monoid(&mut self, m: &IntVec) -> Result<bool> {
        Ok(m.is_zero() || self.rec(m)?.is_some())
    }

    fn rec(&mut self, m: &IntVec) -> Result<Option<u32>> {
        if m.is_zero() {
            return Ok(Some(0));
        }
        if let Some(v) = self.memo.get(m) {
            return Ok(*v);
        }
        if self.memo.len() as u64 >= self.cap {
            return Err(Error::CapExceeded { what: "decomposition length search", limit: self.cap });
        }
        let mut best: Option<u32> = None;
        if self.cone.contains(m) {
            for i in 0..self.gens.len() {
                let r = m - &self.gens[i];
                if !self.cone.contains(&r) {
                    continue;
                }
                if let Some(l) = self.rec(&r)? {
                    best = Some(best.map_or(l + 1, |b| b.max(l + 1)));
                }
            }
        }
        self.memo.insert(m.clone(), best);
        Ok(best)
    }
}

pub fn max_decomposition_length(gens: &[IntVec], m: &IntVec) -> Result<u32> {
    LengthOracle::new(gens.to_vec())?.length(m)
}

/// Nonzero sums of at most `h` generators, in lexicographic order.
pub fn sums_up_to(gens: &[IntVec], h: usize) -> Vec<IntVec> {
    let mut all: BTreeSet<IntVec> = BTreeSet::new();
    let mut layer: BTreeSet<IntVec> = BTreeSet::new();
    layer.insert(IntVec::zeros(gens[0].dim()));
    for _ in 0..h {
        let mut next = BTreeSet::new();
        for x in &layer {
            for g in gens {
                next.insert(x + g);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter().filter(|x| !x.is_zero()).collect()
}

/// Integer lcm helper used by callers clearing denominators.
pub fn lcm_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |l, x| l.lcm(x))
}
