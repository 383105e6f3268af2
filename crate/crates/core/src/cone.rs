//! Pointed rational cones, their faces and facet isomorphisms.
//!
//! A cone may be lower dimensional. Internally every cone carries a
//! [`LatticeChart`] for `span(C) ∩ Z^d`, and facet normals are computed in
//! chart coordinates, where the cone is full dimensional.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::dd::extreme_rays_of_halfspaces;
use crate::error::{Error, Result};
use crate::exactlin::{
    primitive_vector, IntMat, IntVec, LatticeChart, RatMat, UnimodularMap,
};
use crate::monoid::hilbert_basis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    dim: usize,
    generators: Vec<IntVec>,
    chart: LatticeChart,
    extreme_rays: Vec<IntVec>,
    local_normals: Vec<IntVec>,
    facet_normals: Vec<IntVec>,
}

/// A face of a cone, described by the extreme rays it contains and the facet
/// normals vanishing on it. Indices refer to the owning cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeFace {
    pub dim: usize,
    pub ray_indices: Vec<usize>,
    pub normal_indices: Vec<usize>,
    pub rays: Vec<IntVec>,
}

impl Cone {
    /// Builds the cone `R_+ generators`.
    pub fn new(generators: Vec<IntVec>) -> Result<Cone> {
        let d = generators.first().map(|g| g.dim()).ok_or(Error::ZeroDim)?;
        if let Some(g) = generators.iter().find(|g| g.dim() != d) {
            return Err(Error::DimensionMismatch { expected: d, got: g.dim() });
        }
        let nonzero: Vec<IntVec> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroDim);
        }
        let chart = LatticeChart::new(&nonzero, d);
        let k = chart.rank;
        let local: Vec<IntVec> = nonzero.iter().map(|g| chart.coords(g)).collect();

        let mut local_normals = extreme_rays_of_halfspaces(&local, k);
        if local_normals.is_empty()
            || IntMat::from_rows(local_normals.clone(), k).rank() < k
        {
            return Err(Error::NotPointed);
        }

        // Extreme rays: generators whose tight normals have rank k - 1.
        let mut rays: BTreeSet<IntVec> = BTreeSet::new();
        for (g, lg) in nonzero.iter().zip(&local) {
            let tight: Vec<IntVec> =
                local_normals.iter().filter(|n| n.dot(lg).is_zero()).cloned().collect();
            let rank = if tight.is_empty() { 0 } else { IntMat::from_rows(tight, k).rank() };
            if rank + 1 == k {
                rays.insert(primitive_vector(g)?);
            }
        }
        let extreme_rays: Vec<IntVec> = rays.into_iter().collect();

        let mut pairs: Vec<(IntVec, IntVec)> = local_normals
            .drain(..)
            .map(|n| (chart.lift_functional(&n), n))
            .collect();
        pairs.sort();
        let (facet_normals, local_normals): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();

        Ok(Cone { dim: d, generators, chart, extreme_rays, local_normals, facet_normals })
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the cone itself.
    pub fn rank(&self) -> usize {
        self.chart.rank
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.rank() == self.dim
    }

    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    pub fn extreme_rays(&self) -> &[IntVec] {
        &self.extreme_rays
    }

    /// Primitive inner facet normals. For a lower-dimensional cone these are
    /// ambient lifts that vanish on the chart's completion vectors.
    pub fn facet_normals(&self) -> &[IntVec] {
        &self.facet_normals
    }

    /// Facet normals in chart coordinates.
    pub fn local_normals(&self) -> &[IntVec] {
        &self.local_normals
    }

    pub fn chart(&self) -> &LatticeChart {
        &self.chart
    }

    pub fn in_span(&self, x: &IntVec) -> bool {
        self.chart.contains(x)
    }

    pub fn contains(&self, x: &IntVec) -> bool {
        self.in_span(x) && self.facet_normals.iter().all(|n| !n.dot(x).is_negative())
    }

    /// Membership in the relative interior.
    pub fn contains_relint(&self, x: &IntVec) -> bool {
        self.in_span(x) && self.facet_normals.iter().all(|n| n.dot(x).is_positive())
    }

    /// Sum of the facet normals; positive on every nonzero point of the cone.
    pub fn grading(&self) -> IntVec {
        self.facet_normals
            .iter()
            .fold(IntVec::zeros(self.dim), |acc, n| &acc + n)
    }

    pub fn is_simplicial(&self) -> bool {
        self.extreme_rays.len() == self.rank()
    }

    /// Cone generated by the extreme rays only.
    pub fn canonical(&self) -> Cone {
        Cone::new(self.extreme_rays.clone()).expect("extreme rays span a pointed cone")
    }

    fn face_from_rays(&self, rays: &BTreeSet<usize>) -> ConeFace {
        let normal_indices: Vec<usize> = (0..self.facet_normals.len())
            .filter(|&j| rays.iter().all(|&i| self.facet_normals[j].dot(&self.extreme_rays[i]).is_zero()))
            .collect();
        let ray_vecs: Vec<IntVec> = rays.iter().map(|&i| self.extreme_rays[i].clone()).collect();
        let dim = if ray_vecs.is_empty() {
            0
        } else {
            IntMat::from_rows(ray_vecs.clone(), self.dim).rank()
        };
        ConeFace { dim, ray_indices: rays.iter().copied().collect(), normal_indices, rays: ray_vecs }
    }

    /// The nonzero faces, ordered by dimension and then by ray indices. The
    /// cone itself is included as the last entry.
    pub fn faces(&self) -> Vec<ConeFace> {
        let facet_sets: Vec<BTreeSet<usize>> = self
            .facet_normals
            .iter()
            .map(|n| {
                (0..self.extreme_rays.len())
                    .filter(|&i| n.dot(&self.extreme_rays[i]).is_zero())
                    .collect()
            })
            .collect();
        let mut all: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        all.insert((0..self.extreme_rays.len()).collect());
        let mut frontier: Vec<BTreeSet<usize>> = facet_sets.clone();
        while let Some(s) = frontier.pop() {
            if s.is_empty() || !all.insert(s.clone()) {
                continue;
            }
            for f in &facet_sets {
                let t: BTreeSet<usize> = s.intersection(f).copied().collect();
                if !t.is_empty() && !all.contains(&t) {
                    frontier.push(t);
                }
            }
        }
        let mut faces: Vec<ConeFace> = all.iter().map(|s| self.face_from_rays(s)).collect();
        faces.sort_by(|a, b| (a.dim, &a.ray_indices).cmp(&(b.dim, &b.ray_indices)));
        faces
    }

    /// Faces of dimension `rank - 1`, ordered like `facet_normals`.
    pub fn facets(&self) -> Vec<ConeFace> {
        (0..self.facet_normals.len())
            .map(|j| {
                let rays = (0..self.extreme_rays.len())
                    .filter(|&i| self.facet_normals[j].dot(&self.extreme_rays[i]).is_zero())
                    .collect();
                self.face_from_rays(&rays)
            })
            .collect()
    }

    /// The facet whose normal is `normal` (up to positive scaling).
    pub fn facet_with_normal(&self, normal: &IntVec) -> Option<ConeFace> {
        let p = primitive_vector(normal).ok()?;
        let j = self.facet_normals.iter().position(|n| *n == p)?;
        Some(self.facets().swap_remove(j))
    }

    /// The facet containing exactly the given rays (as vectors, any scaling).
    pub fn facet_through(&self, rays: &[IntVec]) -> Option<ConeFace> {
        let want: BTreeSet<IntVec> =
            rays.iter().map(primitive_vector).collect::<Result<_>>().ok()?;
        self.facets().into_iter().find(|f| f.rays.iter().cloned().collect::<BTreeSet<_>>() == want)
    }
}

impl Cone {
    /// `C ∩ {h >= 0}` for a full-dimensional cone.
    pub fn intersect_halfspace(&self, h: &IntVec) -> Result<Cone> {
        let mut rows = self.facet_normals.clone();
        rows.push(h.clone());
        Cone::new(extreme_rays_of_halfspaces(&rows, self.dim))
    }

    /// Image under a linear map.
    pub fn image(&self, m: &UnimodularMap) -> Cone {
        Cone::new(self.extreme_rays.iter().map(|r| m.apply(r)).collect())
            .expect("unimodular image of a pointed cone")
    }
}

impl ConeFace {
    pub fn cone(&self) -> Cone {
        Cone::new(self.rays.clone()).expect("faces of pointed cones are pointed")
    }
}

/// A lattice isomorphism between the facet cones `R_+ F1` and `R_+ F2`,
/// extended to a unimodular map of the ambient lattice.
///
/// Extreme rays go to extreme rays, and the candidate map must be integral,
/// unimodular on the facet lattice and carry `Hilb(F1)` onto `Hilb(F2)`.
pub fn facet_lattice_isomorphism(f1: &ConeFace, f2: &ConeFace) -> Result<Option<UnimodularMap>> {
    let d1 = f1.rays.first().map_or(0, |r| r.dim());
    let d2 = f2.rays.first().map_or(0, |r| r.dim());
    if d1 != d2 {
        return Err(Error::DimensionMismatch { expected: d1, got: d2 });
    }
    if f1.dim != f2.dim {
        return Ok(None);
    }
    lattice_isomorphism(&f1.cone(), &f2.cone(), 10)
}

/// Lattice isomorphism of two cones of equal rank in the same ambient
/// lattice, extended to the ambient lattice by matching chart completions.
/// `None` if the monoids are not isomorphic.
pub fn lattice_isomorphism(c1: &Cone, c2: &Cone, cap: usize) -> Result<Option<UnimodularMap>> {
    if c1.dim() != c2.dim() {
        return Err(Error::DimensionMismatch { expected: c1.dim(), got: c2.dim() });
    }
    if c1.rank() != c2.rank() || c1.extreme_rays().len() != c2.extreme_rays().len() {
        return Ok(None);
    }
    let h1 = hilbert_basis(c1)?;
    let h2 = hilbert_basis(c2)?;
    if h1.len() > cap || h2.len() > cap {
        return Err(Error::CapExceeded { what: "lattice isomorphism search", limit: cap as u64 });
    }
    if h1.len() != h2.len() {
        return Ok(None);
    }
    let (ch1, ch2) = (c1.chart(), c2.chart());
    let k = c1.rank();
    let set2: BTreeSet<IntVec> = h2.iter().map(|h| ch2.coords(h)).collect();
    let loc1: Vec<IntVec> = h1.iter().map(|h| ch1.coords(h)).collect();

    if c1.extreme_rays() == c2.extreme_rays() && ch1.basis() == ch2.basis() {
        return Ok(Some(UnimodularMap::identity(c1.dim())));
    }

    let rays1: Vec<IntVec> = c1.extreme_rays().iter().map(|r| ch1.coords(r)).collect();
    let rays2: Vec<IntVec> = c2.extreme_rays().iter().map(|r| ch2.coords(r)).collect();
    let basis_idx = independent_subset(&rays1, k);
    let b = IntMat::from_rows(basis_idx.iter().map(|&i| rays1[i].clone()).collect(), k);
    let b_inv = b.to_rat().inverse().expect("independent rays");

    for images in (0..rays2.len()).permutations(k) {
        // L^T = B^{-1} * images, acting on row vectors: x -> x L^T.
        let img = IntMat::from_rows(images.iter().map(|&j| rays2[j].clone()).collect(), k);
        let lt = mul_rat(&b_inv, &img.to_rat());
        let Some(lt) = lt.to_int() else { continue };
        if !lt.det().abs().is_one() {
            continue;
        }
        let mapped: BTreeSet<IntVec> = loc1
            .iter()
            .map(|x| lt.transpose().apply(x))
            .collect();
        if mapped != set2 {
            continue;
        }
        return Ok(Some(extend_local_map(ch1, ch2, &lt)));
    }
    Ok(None)
}

fn mul_rat(a: &RatMat, b: &RatMat) -> RatMat {
    let rows = a
        .rows()
        .iter()
        .map(|r| {
            (0..b.ncols())
                .map(|j| r.iter().zip(b.rows()).map(|(x, br)| x * &br[j]).sum())
                .collect()
        })
        .collect();
    RatMat::from_rows(rows, b.ncols())
}

/// Ambient map sending `basis1_i -> lift2(e_i L^T)` and each completion
/// vector of chart 1 to the corresponding completion vector of chart 2.
pub fn extend_local_map(ch1: &LatticeChart, ch2: &LatticeChart, lt: &IntMat) -> UnimodularMap {
    let d = ch1.ambient();
    let k = ch1.rank;
    let mut images: Vec<IntVec> = (0..k).map(|i| ch2.lift(lt.row(i))).collect();
    images.extend(ch2.complement().iter().cloned());
    // M * full1^T = images^T  =>  M = images^T * inverse1^T
    let q = IntMat::from_rows(images, d).transpose();
    let m = q.mul(&ch1.inverse.transpose());
    UnimodularMap::new(m).expect("images form a lattice basis")
}

/// The lattice map sending `src[i] -> dst[i]`, extended to the ambient
/// lattice, provided it is an isomorphism of the saturated lattices of the
/// two spans.
pub fn map_from_correspondence(src: &[IntVec], dst: &[IntVec]) -> Option<UnimodularMap> {
    let d = src.first()?.dim();
    let ch1 = LatticeChart::new(src, d);
    let ch2 = LatticeChart::new(dst, d);
    if ch1.rank != ch2.rank {
        return None;
    }
    let k = ch1.rank;
    let l1: Vec<IntVec> = src.iter().map(|x| ch1.coords(x)).collect();
    let l2: Vec<IntVec> = dst.iter().map(|x| ch2.coords(x)).collect();
    let idx = independent_subset(&l1, k);
    let b = IntMat::from_rows(idx.iter().map(|&i| l1[i].clone()).collect(), k);
    let img = IntMat::from_rows(idx.iter().map(|&i| l2[i].clone()).collect(), k);
    let lt = mul_rat(&b.to_rat().inverse()?, &img.to_rat()).to_int()?;
    if !lt.det().abs().is_one() {
        return None;
    }
    if l1.iter().zip(&l2).any(|(x, y)| lt.transpose().apply(x) != *y) {
        return None;
    }
    Some(extend_local_map(&ch1, &ch2, &lt))
}

/// Indices of the first `k` linearly independent vectors.
pub fn independent_subset(vs: &[IntVec], k: usize) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut rows: Vec<IntVec> = Vec::new();
    for (i, v) in vs.iter().enumerate() {
        rows.push(v.clone());
        if IntMat::from_rows(rows.clone(), v.dim()).rank() == rows.len() {
            chosen.push(i);
            if chosen.len() == k {
                break;
            }
        } else {
            rows.pop();
        }
    }
    chosen
}
