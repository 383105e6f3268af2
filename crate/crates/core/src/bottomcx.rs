//! Bottom complexes, the convex-towards-0 test and the bottom / reduced
//! bottom verifiers; path realizations and cone isomorphism testing.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cone::{lattice_isomorphism, Cone};
use crate::error::{Error, Result};
use crate::exactlin::{integer_kernel, IntMat, IntVec, Rat, UnimodularMap};
use crate::monoid::{
    hilbert_basis, homogenized_cone, is_normal, lattice_height, lattice_points,
    pyramid_points, triangulate, LengthOracle,
};

/// A finite polytopal complex embedded in `R^d`. Vertices carry string ids;
/// facets are sorted lists of vertex indices, and the facet list is sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedComplex {
    pub dim: usize,
    pub ids: Vec<String>,
    pub coords: Vec<IntVec>,
    pub facets: Vec<Vec<usize>>,
}

impl EmbeddedComplex {
    /// Builds a complex from facet vertex lists. Vertices get ids `1..n` in
    /// lexicographic coordinate order.
    pub fn from_polytopes(dim: usize, polys: &[Vec<IntVec>]) -> EmbeddedComplex {
        let all: BTreeSet<IntVec> = polys.iter().flatten().cloned().collect();
        let coords: Vec<IntVec> = all.into_iter().collect();
        let ids = (1..=coords.len()).map(|i| i.to_string()).collect();
        let mut facets: Vec<Vec<usize>> = polys
            .iter()
            .map(|p| {
                let mut f: Vec<usize> =
                    p.iter().map(|v| coords.binary_search(v).unwrap()).collect();
                f.sort();
                f.dedup();
                f
            })
            .collect();
        facets.sort();
        facets.dedup();
        EmbeddedComplex { dim, ids, coords, facets }
    }

    /// Builds a complex with explicit ids.
    pub fn with_ids(dim: usize, vertices: Vec<(String, IntVec)>, facets: Vec<Vec<String>>) -> Result<Self> {
        let (ids, coords): (Vec<String>, Vec<IntVec>) = vertices.into_iter().unzip();
        if let Some(v) = coords.iter().find(|v| v.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: v.dim() });
        }
        let mut fs = Vec::new();
        for f in facets {
            let mut idx = f
                .iter()
                .map(|s| ids.iter().position(|i| i == s).ok_or_else(|| Error::InvalidInput(format!("unknown vertex id {s}"))))
                .collect::<Result<Vec<_>>>()?;
            idx.sort();
            fs.push(idx);
        }
        fs.sort();
        Ok(EmbeddedComplex { dim, ids, coords, facets: fs })
    }

    pub fn facet_points(&self, i: usize) -> Vec<IntVec> {
        self.facets[i].iter().map(|&v| self.coords[v].clone()).collect()
    }

    pub fn facet_ids(&self, i: usize) -> Vec<String> {
        self.facets[i].iter().map(|&v| self.ids[v].clone()).collect()
    }

    pub fn id_of(&self, v: &IntVec) -> Option<&str> {
        self.coords.iter().position(|c| c == v).map(|i| self.ids[i].as_str())
    }

    /// All nonempty faces as sorted vertex-index sets.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facets {
            let pts: Vec<IntVec> = f.iter().map(|&v| self.coords[v].clone()).collect();
            if pts.len() == 1 {
                out.insert(f.clone());
                continue;
            }
            let cone = homogenized_cone(&pts).expect("polytope cone");
            for face in cone.faces() {
                let mut s: Vec<usize> = face
                    .rays
                    .iter()
                    .filter_map(|r| {
                        let v = r.truncated();
                        self.coords.iter().position(|c| *c == v)
                    })
                    .collect();
                s.sort();
                out.insert(s);
            }
        }
        out.into_iter().collect()
    }

    /// Number of faces per affine dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for face in self.faces() {
            let pts: Vec<IntVec> = face.iter().map(|&v| self.coords[v].clone()).collect();
            let k = affine_dim(&pts);
            if f.len() <= k {
                f.resize(k + 1, 0);
            }
            f[k] += 1;
        }
        f
    }

    /// Lattice points of facet `i`.
    pub fn facet_lattice_points(&self, i: usize) -> Result<Vec<IntVec>> {
        lattice_points(&self.facet_points(i))
    }

    /// All lattice points of the support.
    pub fn lattice_points(&self) -> Result<Vec<IntVec>> {
        let mut all = BTreeSet::new();
        for i in 0..self.facets.len() {
            all.extend(self.facet_lattice_points(i)?);
        }
        Ok(all.into_iter().collect())
    }
}

pub fn affine_dim(pts: &[IntVec]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let edges: Vec<IntVec> = pts[1..].iter().map(|p| p - &pts[0]).collect();
    IntMat::from_rows(edges, pts[0].dim()).rank()
}

/// The complex of compact faces of `conv(C ∩ Z^d \ {0})`.
pub fn bottom_complex(c: &Cone) -> Result<EmbeddedComplex> {
    if !c.is_full_dimensional() {
        return Err(Error::InvalidInput("bottom complex needs a full-dimensional cone".into()));
    }
    let d = c.dim();
    let hilb = hilbert_basis(c)?;
    let mut gens: Vec<IntVec> = hilb.iter().map(|h| h.extended(BigInt::one())).collect();
    gens.extend(c.extreme_rays().iter().map(|r| r.extended(BigInt::zero())));
    let hom = Cone::new(gens)?;
    let mut polys = Vec::new();
    for (j, n) in hom.facet_normals().iter().enumerate() {
        let a = n.truncated();
        if !c.extreme_rays().iter().all(|r| a.dot(r).is_positive()) {
            continue;
        }
        let face = &hom.facets()[j];
        let verts: Vec<IntVec> = face
            .rays
            .iter()
            .filter(|r| r[d].is_one())
            .map(IntVec::truncated)
            .collect();
        polys.push(verts);
    }
    Ok(EmbeddedComplex::from_polytopes(d, &polys))
}

/// Outcome of a verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Bottom,
    ReducedBottom,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Bottom => "bottom",
            Status::ReducedBottom => "reduced_bottom",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub clause: &'static str,
    pub facet: Vec<String>,
    pub witness: Vec<IntVec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub status: Status,
    pub violations: Vec<Violation>,
    /// Facets `F` with `Hilb(R_+ F) ⊄ F`; `None` when the check was not run.
    pub facet_hilbert_failures: Option<Vec<Vec<String>>>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Why a complex fails to be convex towards 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexityWitness {
    pub reason: &'static str,
    pub facet: Option<usize>,
    pub points: Vec<IntVec>,
}

/// Primitive normal `a` and value `c > 0` with `Aff(P) = {a·x = c}`, or
/// `None` if the affine hull is not a hyperplane avoiding 0.
pub fn facet_hyperplane(pts: &[IntVec]) -> Option<(IntVec, BigInt)> {
    let d = pts[0].dim();
    let a = if pts.len() == 1 {
        if d != 1 {
            return None;
        }
        IntVec::from_i64s(&[1])
    } else {
        let edges: Vec<IntVec> = pts[1..].iter().map(|p| p - &pts[0]).collect();
        let ker = integer_kernel(&IntMat::from_rows(edges, d));
        if ker.len() != 1 {
            return None;
        }
        ker.into_iter().next().unwrap()
    };
    let c = a.dot(&pts[0]);
    if c.is_zero() {
        return None;
    }
    if c.is_negative() {
        Some((-&a, -c))
    } else {
        Some((a, c))
    }
}

/// Tests whether the support of `k` is convex towards 0: facet hyperplanes
/// avoid 0 and strictly separate it from every vertex outside the facet, each ray from 0 meets the
/// support at most once, and the rays through the support fill a pointed
/// full-dimensional cone.
pub fn convex_towards_zero(k: &EmbeddedComplex) -> Result<Option<ConvexityWitness>> {
    let fail = |reason, facet, points| Ok(Some(ConvexityWitness { reason, facet, points }));
    if k.coords.iter().any(IntVec::is_zero) {
        return fail("origin_in_support", None, vec![IntVec::zeros(k.dim)]);
    }
    for (i, v) in k.coords.iter().enumerate() {
        for w in &k.coords[i + 1..] {
            if IntMat::from_rows(vec![v.clone(), w.clone()], k.dim).rank() == 1
                && v.dot(w).is_positive()
            {
                return fail("ray_meets_twice", None, vec![v.clone(), w.clone()]);
            }
        }
    }
    let mut hyperplanes = Vec::new();
    for f in 0..k.facets.len() {
        let pts = k.facet_points(f);
        let Some((a, c)) = facet_hyperplane(&pts) else {
            return fail("facet_hyperplane", Some(f), pts);
        };
        for (i, w) in k.coords.iter().enumerate() {
            if !k.facets[f].contains(&i) && a.dot(w) <= c {
                return fail("separation", Some(f), vec![w.clone()]);
            }
        }
        hyperplanes.push((a, c));
    }
    let whole = match Cone::new(k.coords.clone()) {
        Ok(c) if c.is_full_dimensional() => c,
        _ => return fail("cone_not_pointed_full", None, vec![]),
    };
    // Coverage: the facet cones fill R_+|K|, compared through an additive
    // measure of simplicial cones.
    let g = whole.grading();
    let measure = |rays: &[IntVec]| -> Rat {
        let det = IntMat::from_rows(rays.to_vec(), k.dim).det().abs();
        let den: BigInt = rays.iter().map(|r| g.dot(r)).product();
        Rat::new(det, den)
    };
    let total: Rat = triangulate(&whole).iter().map(|s| measure(s)).sum();
    let mut covered = Rat::zero();
    for f in 0..k.facets.len() {
        let fc = Cone::new(k.facet_points(f))?;
        covered += triangulate(&fc).iter().map(|s| measure(s)).sum::<Rat>();
    }
    if covered != total {
        return fail("cone_not_covered", None, vec![]);
    }
    Ok(None)
}

pub fn is_convex_towards_zero(k: &EmbeddedComplex) -> Result<bool> {
    Ok(convex_towards_zero(k)?.is_none())
}

fn convexity_violation(k: &EmbeddedComplex, clause: &'static str) -> Result<Option<Violation>> {
    Ok(convex_towards_zero(k)?.map(|w| Violation {
        clause,
        facet: w.facet.map(|f| k.facet_ids(f)).unwrap_or_default(),
        witness: w.points,
    }))
}

/// Bottom test: convex towards 0 and no lattice points in `conv(0, P)`
/// besides 0 and the lattice points of `P`.
pub fn verify_bottom(k: &EmbeddedComplex) -> Result<VerificationReport> {
    let mut violations = Vec::new();
    if let Some(v) = convexity_violation(k, "L3.3a.i")? {
        violations.push(v);
    }
    let zero = IntVec::zeros(k.dim);
    for f in 0..k.facets.len() {
        let pts = k.facet_points(f);
        let own: BTreeSet<IntVec> = lattice_points(&pts)?.into_iter().collect();
        let extra: Vec<IntVec> = pyramid_points(&pts)?
            .into_iter()
            .filter(|p| *p != zero && !own.contains(p))
            .collect();
        if !extra.is_empty() {
            violations.push(Violation { clause: "L3.3a.ii", facet: k.facet_ids(f), witness: extra });
        }
    }
    let status = if violations.is_empty() { Status::Bottom } else { Status::Fail };
    Ok(VerificationReport { status, violations, facet_hilbert_failures: None })
}

/// Reduced bottom test: convex towards 0, normal facets, facets at lattice
/// distance one from 0. The per-facet condition `Hilb(R_+ F) ⊂ F` is
/// checked and reported separately.
pub fn verify_reduced_bottom(k: &EmbeddedComplex) -> Result<VerificationReport> {
    let mut violations = Vec::new();
    if let Some(v) = convexity_violation(k, "L3.3b.i")? {
        violations.push(v);
    }
    let zero = IntVec::zeros(k.dim);
    let mut hilb_failures = Vec::new();
    for f in 0..k.facets.len() {
        let pts = k.facet_points(f);
        if !is_normal(&pts)? {
            let cone = homogenized_cone(&pts)?;
            let last = k.dim;
            let witness = hilbert_basis(&cone)?.into_iter().filter(|h| !h[last].is_one()).collect();
            violations.push(Violation { clause: "L3.3b.ii", facet: k.facet_ids(f), witness });
        }
        match lattice_height(&pts, &zero) {
            Ok(h) if h.is_one() => {}
            _ => violations.push(Violation {
                clause: "L3.3b.iii",
                facet: k.facet_ids(f),
                witness: vec![],
            }),
        }
        if let (Ok(cone), Some((a, c))) = (Cone::new(pts.clone()), facet_hyperplane(&pts)) {
            if hilbert_basis(&cone)?.iter().any(|h| a.dot(h) != c) {
                hilb_failures.push(k.facet_ids(f));
            }
        }
    }
    let status = if violations.is_empty() { Status::ReducedBottom } else { Status::Fail };
    Ok(VerificationReport { status, violations, facet_hilbert_failures: Some(hilb_failures) })
}

/// A realized path: the points `x_1..x_n` and the complex whose facets are
/// the maximal collinear runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathRealization {
    pub points: Vec<IntVec>,
    pub complex: EmbeddedComplex,
}

/// Realizes the path with relations `x_{k-1} + x_{k+1} = c_k x_k`, seeded at
/// `x_1 = (1,0)`, `x_2 = (0,1)`.
pub fn realize_path(c: &[i64]) -> Result<PathRealization> {
    if let Some(&bad) = c.iter().find(|&&ck| ck < 2) {
        return Err(Error::InvalidCoefficient(bad));
    }
    let mut pts = vec![IntVec::from_i64s(&[1, 0]), IntVec::from_i64s(&[0, 1])];
    for &ck in c {
        let n = pts.len();
        let next = pts[n - 1].scale(&BigInt::from(ck)).add_scaled(&-BigInt::one(), &pts[n - 2]);
        pts.push(next);
    }
    // c_k = 2 makes x_{k-1}, x_k, x_{k+1} collinear; such runs form one facet.
    let mut polys: Vec<Vec<IntVec>> = Vec::new();
    let mut start = 0;
    for (k, &ck) in c.iter().enumerate() {
        if ck != 2 {
            polys.push(vec![pts[start].clone(), pts[k + 1].clone()]);
            start = k + 1;
        }
    }
    polys.push(vec![pts[start].clone(), pts[pts.len() - 1].clone()]);
    Ok(PathRealization { complex: EmbeddedComplex::from_polytopes(2, &polys), points: pts })
}

/// Invariants certifying non-isomorphism of cones cheaply.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConeSignature {
    pub hilbert_size: usize,
    pub bottom_f_vector: Vec<usize>,
    pub pair_lengths: Vec<u32>,
}

pub fn cone_signature(c: &Cone) -> Result<ConeSignature> {
    let hilb = hilbert_basis(c)?;
    let bottom_f_vector = if c.is_full_dimensional() {
        bottom_complex(c)?.f_vector()
    } else {
        vec![]
    };
    let mut oracle = LengthOracle::new(hilb.clone())?;
    let mut pair_lengths = Vec::new();
    for i in 0..hilb.len() {
        for j in i..hilb.len() {
            pair_lengths.push(oracle.length(&(&hilb[i] + &hilb[j]))?);
        }
    }
    pair_lengths.sort();
    Ok(ConeSignature { hilbert_size: hilb.len(), bottom_f_vector, pair_lengths })
}

/// A unimodular map carrying `c1` onto `c2`, if one exists.
pub fn cones_lattice_isomorphic(c1: &Cone, c2: &Cone) -> Result<Option<UnimodularMap>> {
    if c1.dim() != c2.dim() {
        return Err(Error::DimensionMismatch { expected: c1.dim(), got: c2.dim() });
    }
    for c in [c1, c2] {
        let n = hilbert_basis(c)?.len();
        if n > 12 {
            return Err(Error::CapExceeded { what: "cone isomorphism search", limit: 12 });
        }
    }
    if cone_signature(c1)? != cone_signature(c2)? {
        return Ok(None);
    }
    lattice_isomorphism(c1, c2, 12)
}
