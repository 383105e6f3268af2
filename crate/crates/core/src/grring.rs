//! The associated graded ring of an affine monoid at monomial level.
//!
//! The field is never materialized: every structure constant of the graded
//! ring of a monoid algebra is 0 or 1, so monomials and the length function
//! `ℓ` carry all the information.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bottomcx::{bottom_complex, verify_reduced_bottom, EmbeddedComplex, Status};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::exactlin::{hermite_normal_form, rat_from_int, solve_rational, IntMat, IntVec, Rat, RatMat};
use crate::monoid::{hilbert_basis, lattice_points, lcm_all, sums_up_to, LengthOracle};

/// A monoid element together with its degree `ℓ` in the graded ring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrMonomial {
    pub point: IntVec,
    pub length: u32,
}

/// `gr` of the monoid generated by a fixed set of generators.
pub struct GrRing {
    oracle: LengthOracle,
}

impl GrRing {
    pub fn new(gens: Vec<IntVec>) -> Result<GrRing> {
        Ok(GrRing { oracle: LengthOracle::new(gens)? })
    }

    /// The ring of `C ∩ Z^d`, generated by its Hilbert basis.
    pub fn for_cone(c: &Cone) -> Result<GrRing> {
        Ok(GrRing { oracle: LengthOracle::for_cone(c)? })
    }

    pub fn generators(&self) -> &[IntVec] {
        self.oracle.generators()
    }

    pub fn monomial(&mut self, m: &IntVec) -> Result<GrMonomial> {
        Ok(GrMonomial { point: m.clone(), length: self.oracle.length(m)? })
    }

    pub fn length(&mut self, m: &IntVec) -> Result<u32> {
        self.oracle.length(m)
    }

    /// `m1 · m2`, or `None` for zero when `ℓ(m1 + m2) > ℓ(m1) + ℓ(m2)`.
    pub fn product(&mut self, m1: &GrMonomial, m2: &GrMonomial) -> Result<Option<GrMonomial>> {
        let p = self.monomial(&(&m1.point + &m2.point))?;
        Ok((p.length == m1.length + m2.length).then_some(p))
    }

    /// `m^t`, or `None` if it vanishes.
    pub fn power(&mut self, m: &GrMonomial, t: u32) -> Result<Option<GrMonomial>> {
        let p = self.monomial(&m.point.scale(&BigInt::from(t)))?;
        Ok((p.length == t * m.length).then_some(p))
    }

    /// Least `t <= max_t` with `m^t = 0`.
    pub fn nilpotency_index(&mut self, m: &GrMonomial, max_t: u32) -> Result<Option<u32>> {
        for t in 2..=max_t {
            if self.power(m, t)?.is_none() {
                return Ok(Some(t));
            }
        }
        Ok(None)
    }
}

pub fn gr_product(gens: &[IntVec], m1: &IntVec, m2: &IntVec) -> Result<Option<GrMonomial>> {
    let mut r = GrRing::new(gens.to_vec())?;
    let (a, b) = (r.monomial(m1)?, r.monomial(m2)?);
    r.product(&a, &b)
}

/// Membership in the monoids spanned by the lattice points of the facets of
/// the bottom complex.
pub struct RetractTest {
    cone: Cone,
    facets: Vec<LengthOracle>,
}

impl RetractTest {
    pub fn new(c: &Cone) -> Result<RetractTest> {
        let k = bottom_complex(c)?;
        let facets = (0..k.facets.len())
            .map(|f| LengthOracle::new(k.facet_lattice_points(f)?))
            .collect::<Result<_>>()?;
        Ok(RetractTest { cone: c.clone(), facets })
    }

    /// Indices of the bottom facets whose monoid contains `m`.
    pub fn carrying_facets(&mut self, m: &IntVec) -> Result<Vec<usize>> {
        if !self.cone.contains(m) {
            return Err(Error::NotInCone);
        }
        let mut out = Vec::new();
        for (i, o) in self.facets.iter_mut().enumerate() {
            if o.in_monoid(m)? {
                out.push(i);
            }
        }
        Ok(out)
    }

    pub fn is_retract(&mut self, m: &IntVec) -> Result<bool> {
        Ok(!self.carrying_facets(m)?.is_empty())
    }
}

pub fn is_retract_monomial(c: &Cone, m: &IntVec) -> Result<bool> {
    RetractTest::new(c)?.is_retract(m)
}

/// Monomials of `K`, supported on faces: `m` lies on the face `R` when it is
/// a sum of lattice points of `R`.
pub struct PolyhedralAlgebra {
    complex: EmbeddedComplex,
    /// All faces as sorted vertex index sets, smallest first.
    faces: Vec<Vec<usize>>,
    oracles: Vec<LengthOracle>,
}

impl PolyhedralAlgebra {
    pub fn new(k: &EmbeddedComplex) -> Result<PolyhedralAlgebra> {
        let mut faces = k.faces();
        faces.sort_by_key(|f| f.len());
        let oracles = faces
            .iter()
            .map(|f| {
                let pts: Vec<IntVec> = f.iter().map(|&v| k.coords[v].clone()).collect();
                LengthOracle::new(lattice_points(&pts)?)
            })
            .collect::<Result<_>>()?;
        Ok(PolyhedralAlgebra { complex: k.clone(), faces, oracles })
    }

    pub fn complex(&self) -> &EmbeddedComplex {
        &self.complex
    }

    /// The minimal face carrying `m`.
    pub fn support(&mut self, m: &IntVec) -> Result<Vec<usize>> {
        if m.is_zero() {
            return Err(Error::NotAMonomial);
        }
        for (f, o) in self.faces.iter().zip(self.oracles.iter_mut()) {
            if o.in_monoid(m)? {
                return Ok(f.clone());
            }
        }
        Err(Error::NotAMonomial)
    }

    /// `m1 + m2` on the minimal face containing both supports, or `None`.
    pub fn product(&mut self, m1: &IntVec, m2: &IntVec) -> Result<Option<(IntVec, Vec<usize>)>> {
        let (s1, s2) = (self.support(m1)?, self.support(m2)?);
        let union: BTreeSet<usize> = s1.iter().chain(&s2).copied().collect();
        Ok(self
            .faces
            .iter()
            .find(|f| union.iter().all(|v| f.contains(v)))
            .map(|f| (m1 + m2, f.clone())))
    }
}

pub fn polyhedral_monomial_product(
    k: &EmbeddedComplex,
    m1: &IntVec,
    m2: &IntVec,
) -> Result<Option<(IntVec, Vec<usize>)>> {
    PolyhedralAlgebra::new(k)?.product(m1, m2)
}

/// Outcome of comparing `gr(k[C ∩ Z^d])` with the algebra of the bottom.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrReport {
    pub monomials: usize,
    pub retract: usize,
    /// Non-retract monomials, which are nilpotent.
    pub nilpotent: Vec<IntVec>,
    /// Monomials whose retract status disagrees with power iteration.
    pub nilpotency_mismatches: Vec<IntVec>,
    /// Retract pairs where `gr` and the polyhedral algebra disagree on zero.
    pub product_mismatches: Vec<(IntVec, IntVec)>,
    /// Retract pairs on a common facet whose `gr` product vanishes.
    pub collapsed_on_facet: Vec<(IntVec, IntVec)>,
    /// Whether the bottom passed the reduced bottom test.
    pub reduced: bool,
}

impl GrReport {
    pub fn agrees(&self) -> bool {
        self.nilpotency_mismatches.is_empty()
            && self.product_mismatches.is_empty()
            && self.collapsed_on_facet.is_empty()
    }
}

pub const POWER_CHECK: u32 = 6;

/// Checks, for all sums of at most `bound` Hilbert basis elements, that
/// nilpotency matches retract membership and that products of retract
/// monomials match the polyhedral algebra of the bottom.
pub fn gr_matches_bottom_algebra(c: &Cone, bound: usize) -> Result<GrReport> {
    let k = bottom_complex(c)?;
    let reduced = verify_reduced_bottom(&k)?.status == Status::ReducedBottom;
    let mut ring = GrRing::for_cone(c)?;
    let mut retract = RetractTest::new(c)?;
    let mut poly = PolyhedralAlgebra::new(&k)?;
    let monomials = sums_up_to(&hilbert_basis(c)?, bound);

    let mut report = GrReport { monomials: monomials.len(), reduced, ..GrReport::default() };
    let mut on_bottom: Vec<(GrMonomial, Vec<usize>)> = Vec::new();
    for m in &monomials {
        let gm = ring.monomial(m)?;
        let facets = retract.carrying_facets(m)?;
        let killed = ring.nilpotency_index(&gm, POWER_CHECK)?.is_some();
        if facets.is_empty() {
            report.nilpotent.push(m.clone());
            if !killed {
                report.nilpotency_mismatches.push(m.clone());
            }
        } else {
            if killed {
                report.nilpotency_mismatches.push(m.clone());
            }
            on_bottom.push((gm, facets));
        }
    }
    report.retract = on_bottom.len();

    for (i, (a, fa)) in on_bottom.iter().enumerate() {
        for (b, fb) in &on_bottom[i..] {
            let g = ring.product(a, b)?;
            let p = poly.product(&a.point, &b.point)?;
            if g.is_some() != p.is_some() {
                report.product_mismatches.push((a.point.clone(), b.point.clone()));
            }
            let share = fa.iter().any(|f| fb.contains(f));
            if reduced && share && g.is_none() {
                report.collapsed_on_facet.push((a.point.clone(), b.point.clone()));
            }
        }
    }
    Ok(report)
}

/// A monoid given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidPresentation {
    pub dim: usize,
    pub generators: Vec<IntVec>,
    /// Dilation factor clearing denominators.
    pub scale: BigInt,
    /// Whether the monoid is saturated in the group it generates.
    pub normal: bool,
}

/// A triangulation of a lattice polytope with values at the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedTriangulation {
    pub points: Vec<IntVec>,
    pub facets: Vec<Vec<usize>>,
    pub values: Vec<Rat>,
}

fn homogeneous_rows(points: &[IntVec], idx: &[usize]) -> Vec<Vec<Rat>> {
    idx.iter()
        .map(|&i| {
            let mut r = points[i].to_rats();
            r.push(Rat::one());
            r
        })
        .collect()
}

fn orientation(points: &[IntVec], idx: &[usize]) -> BigInt {
    let rows = idx.iter().map(|&i| points[i].extended(BigInt::one())).collect();
    IntMat::from_rows(rows, points[0].dim() + 1).det()
}

/// Checks that the values define a strictly concave function, affine on each
/// simplex: across every interior wall the affine piece of one side, extended
/// to the opposite vertex of the other side, exceeds the value there.
pub fn check_support_function(t: &WeightedTriangulation) -> Result<()> {
    let d = t.points.first().ok_or(Error::ZeroDim)?.dim();
    if t.values.len() != t.points.len() {
        return Err(Error::DimensionMismatch { expected: t.points.len(), got: t.values.len() });
    }
    if t.values.iter().any(|v| !v.is_positive()) {
        return Err(Error::InvalidInput("values must be positive".into()));
    }
    for f in &t.facets {
        if f.len() != d + 1 || orientation(&t.points, f).is_zero() {
            return Err(Error::NotASimplex);
        }
    }
    for (a, b) in t.facets.iter().tuple_combinations() {
        let wall: Vec<usize> = a.iter().filter(|v| b.contains(v)).copied().collect();
        if wall.len() != d {
            continue;
        }
        let va = *a.iter().find(|v| !wall.contains(v)).unwrap();
        let vb = *b.iter().find(|v| !wall.contains(v)).unwrap();
        let mut wa = wall.clone();
        wa.push(va);
        let mut wb = wall.clone();
        wb.push(vb);
        let (sa, sb) = (orientation(&t.points, &wa), orientation(&t.points, &wb));
        if sa.signum() == sb.signum() {
            return Err(Error::InvalidInput(format!("simplices {a:?} and {b:?} overlap")));
        }
        let rows = homogeneous_rows(&t.points, &wa);
        let rhs: Vec<Rat> = wa.iter().map(|&v| t.values[v].clone()).collect();
        let piece = solve_rational(&RatMat::from_rows(rows, d + 1), &rhs).expect("simplex is nondegenerate");
        let mut q = t.points[vb].to_rats();
        q.push(Rat::one());
        let ext: Rat = piece.iter().zip(&q).map(|(x, y)| x * y).sum();
        if ext <= t.values[vb] {
            let mut w = wall;
            w.sort();
            return Err(Error::NotSupporting(w));
        }
    }
    Ok(())
}

/// The monoid generated by the vertices of `k·B_f`, where `B_f` is the image
/// of the graph of `f` under `(p, f(p)) ↦ (p / f(p), 1 / f(p))`.
pub fn regular_to_monoid(t: &WeightedTriangulation) -> Result<MonoidPresentation> {
    check_support_function(t)?;
    let pts: Vec<Vec<Rat>> = t
        .points
        .iter()
        .zip(&t.values)
        .map(|(p, f)| {
            let mut v: Vec<Rat> = p.iter().map(|x| rat_from_int(x) / f).collect();
            v.push(Rat::one() / f);
            v
        })
        .collect();
    let scale = lcm_all(pts.iter().flatten().map(|x| x.denom()));
    let k = rat_from_int(&scale);
    let generators: Vec<IntVec> =
        pts.iter().map(|v| IntVec::new(v.iter().map(|x| (x * &k).to_integer()).collect())).collect();
    let normal = is_normal_monoid(&generators)?;
    Ok(MonoidPresentation { dim: t.points[0].dim() + 1, generators, scale, normal })
}

/// Saturation of the monoid in the group it generates.
pub fn is_normal_monoid(gens: &[IntVec]) -> Result<bool> {
    let dim = gens[0].dim();
    let (h, _) = hermite_normal_form(&IntMat::from_rows(gens.to_vec(), dim));
    let basis: Vec<IntVec> = h.rows().iter().filter(|r| !r.is_zero()).cloned().collect();
    let bt = IntMat::from_rows(basis.clone(), dim).transpose().to_rat();
    let coords: Vec<IntVec> = gens
        .iter()
        .map(|g| {
            let c = solve_rational(&bt, &g.to_rats()).expect("generator lies in its own group");
            IntVec::new(c.iter().map(|x| x.to_integer()).collect())
        })
        .collect();
    let cone = Cone::new(coords.clone())?;
    let mut oracle = LengthOracle::new(coords)?;
    for h in hilbert_basis(&cone)? {
        if !oracle.in_monoid(&h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Comparison of `gr(k[M])` with a Stanley–Reisner ring at monomial level.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SrReport {
    pub monomials: usize,
    pub products: usize,
    pub mismatches: Vec<String>,
}

impl SrReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// All nonempty faces of the complex with the given facets.
pub fn all_faces(facets: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for f in facets {
        let f: Vec<usize> = f.iter().copied().sorted().collect();
        for r in 1..=f.len() {
            out.extend(f.iter().copied().combinations(r));
        }
    }
    out
}

/// Sends the Stanley–Reisner monomial `Π x_v^{a_v}` to `Σ a_v gens[v]` and
/// checks, up to `degree`: injectivity, `ℓ = deg`, surjectivity onto
/// monomials of length at most `degree`, and that products vanish exactly
/// when the supports do not span a face.
pub fn compare_with_stanley_reisner(gens: &[IntVec], facets: &[Vec<usize>], degree: u32) -> Result<SrReport> {
    let faces = all_faces(facets);
    let mut sr: Vec<BTreeMap<usize, u32>> = Vec::new();
    for f in &faces {
        for t in f.len() as u32..=degree {
            // exponents >= 1 on f summing to t
            for extra in (0..f.len()).combinations_with_replacement((t as usize) - f.len()) {
                let mut e: BTreeMap<usize, u32> = f.iter().map(|&v| (v, 1)).collect();
                for i in extra {
                    *e.get_mut(&f[i]).unwrap() += 1;
                }
                sr.push(e);
            }
        }
    }
    let image = |e: &BTreeMap<usize, u32>| -> IntVec {
        e.iter().fold(IntVec::zeros(gens[0].dim()), |acc, (&v, &a)| acc.add_scaled(&BigInt::from(a), &gens[v]))
    };
    let mut ring = GrRing::new(gens.to_vec())?;
    let mut report = SrReport { monomials: sr.len(), ..SrReport::default() };
    let mut seen: BTreeMap<IntVec, usize> = BTreeMap::new();
    for (i, e) in sr.iter().enumerate() {
        let m = image(e);
        let deg: u32 = e.values().sum();
        let l = ring.length(&m)?;
        if l != deg {
            report.mismatches.push(format!("{e:?} has length {l}, degree {deg}"));
        }
        if let Some(j) = seen.insert(m, i) {
            report.mismatches.push(format!("{e:?} and {:?} have the same image", sr[j]));
        }
    }
    for m in sums_up_to(gens, degree as usize) {
        if ring.length(&m)? <= degree && !seen.contains_key(&m) {
            report.mismatches.push(format!("{m} is not the image of a face monomial"));
        }
    }
    for (a, b) in sr.iter().tuple_combinations() {
        let deg = a.values().sum::<u32>() + b.values().sum::<u32>();
        if deg > degree {
            continue;
        }
        report.products += 1;
        let (ma, mb) = (ring.monomial(&image(a))?, ring.monomial(&image(b))?);
        let nonzero = ring.product(&ma, &mb)?.is_some();
        let support: Vec<usize> = a.keys().chain(b.keys()).copied().sorted().dedup().collect();
        if nonzero != faces.contains(&support) {
            report.mismatches.push(format!("product {a:?} * {b:?}: gr nonzero = {nonzero}"));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::ivec;

    fn orthant() -> Cone {
        Cone::new(vec![ivec![1, 0, 0], ivec![0, 1, 0], ivec![0, 0, 1]]).unwrap()
    }

    fn c1() -> Cone {
        Cone::new(vec![ivec![-1, 0, 1], ivec![0, 0, 1], ivec![1, 0, 2], ivec![3, 1, 2]]).unwrap()
    }

    fn non_normal() -> Cone {
        Cone::new(vec![ivec![0, 0, 0, 1], ivec![1, 0, 0, 1], ivec![0, 1, 0, 1], ivec![1, 1, 3, 1]]).unwrap()
    }

    #[test]
    fn orthant_products() {
        let gens = hilbert_basis(&orthant()).unwrap();
        let p = gr_product(&gens, &ivec![1, 0, 0], &ivec![0, 1, 0]).unwrap().unwrap();
        assert_eq!(p, GrMonomial { point: ivec![1, 1, 0], length: 2 });
        assert!(is_retract_monomial(&orthant(), &ivec![2, 1, 1]).unwrap());
        let r = gr_matches_bottom_algebra(&orthant(), 4).unwrap();
        assert!(r.agrees() && r.reduced && r.nilpotent.is_empty());
    }

    #[test]
    fn example_cone() {
        assert!(is_retract_monomial(&c1(), &ivec![2, 1, 4]).unwrap());
        let r = gr_matches_bottom_algebra(&c1(), 4).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert!(matches!(is_retract_monomial(&c1(), &ivec![0, 0, -1]), Err(Error::NotInCone)));
    }

    #[test]
    fn non_normal_simplex_has_nilpotents() {
        let c = non_normal();
        let hilb = hilbert_basis(&c).unwrap();
        let tall: Vec<&IntVec> = hilb.iter().filter(|h| h[3] > BigInt::one()).collect();
        assert!(!tall.is_empty());
        let mut ring = GrRing::for_cone(&c).unwrap();
        for h in &tall {
            assert!(!is_retract_monomial(&c, h).unwrap());
            let m = ring.monomial(h).unwrap();
            assert!(ring.nilpotency_index(&m, POWER_CHECK).unwrap().is_some());
        }
        let witness = tall[0];
        let m = ring.monomial(witness).unwrap();
        assert!(ring.product(&m, &m).unwrap().is_none() || ring.power(&m, 3).unwrap().is_none());
        let r = gr_matches_bottom_algebra(&c, 4).unwrap();
        assert!(!r.reduced && !r.nilpotent.is_empty());
        assert!(r.nilpotency_mismatches.is_empty());
    }

    #[test]
    fn stanley_reisner_rule_on_two_triangles() {
        let k = EmbeddedComplex::from_polytopes(
            3,
            &[
                vec![ivec![0, 0, 1], ivec![1, 0, 1], ivec![0, 1, 1]],
                vec![ivec![1, 0, 1], ivec![0, 1, 1], ivec![1, 1, 1]],
            ],
        );
        let mut alg = PolyhedralAlgebra::new(&k).unwrap();
        assert_eq!(alg.product(&ivec![0, 0, 1], &ivec![1, 1, 1]).unwrap(), None);
        let (m, face) = alg.product(&ivec![1, 0, 1], &ivec![0, 1, 1]).unwrap().unwrap();
        assert_eq!(m, ivec![1, 1, 2]);
        assert_eq!(face.len(), 2);
        assert!(alg.support(&ivec![0, 0, 2]).is_ok());
        assert!(matches!(alg.support(&ivec![5, 0, 1]), Err(Error::NotAMonomial)));
        // the cone over the square: gr agrees with the polyhedral product
        let c = Cone::new(k.coords.clone()).unwrap();
        let gens = hilbert_basis(&c).unwrap();
        assert!(gr_product(&gens, &ivec![0, 0, 1], &ivec![1, 1, 1]).unwrap().is_some());
    }

    fn stellar(center: Rat) -> WeightedTriangulation {
        WeightedTriangulation {
            points: vec![ivec![0, 0], ivec![3, 0], ivec![0, 3], ivec![1, 1]],
            facets: vec![vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3]],
            values: vec![rat(1, 1), rat(1, 1), rat(1, 1), center],
        }
    }

    #[test]
    fn stellar_triangle_monoid() {
        let t = stellar(rat(2, 1));
        let m = regular_to_monoid(&t).unwrap();
        assert_eq!(m.scale, BigInt::from(2));
        assert_eq!(m.generators[3], ivec![1, 1, 1]);
        let r = compare_with_stanley_reisner(&m.generators, &t.facets, 3).unwrap();
        assert!(r.agrees(), "{:?}", r.mismatches);
        assert!(matches!(regular_to_monoid(&stellar(rat(1, 2))), Err(Error::NotSupporting(_))));
    }

    #[test]
    fn single_simplex_is_free() {
        let t = WeightedTriangulation {
            points: vec![ivec![0, 0], ivec![1, 0], ivec![0, 1]],
            facets: vec![vec![0, 1, 2]],
            values: vec![rat(1, 1); 3],
        };
        let m = regular_to_monoid(&t).unwrap();
        assert!(m.normal);
        assert_eq!(m.generators, vec![ivec![0, 0, 1], ivec![1, 0, 1], ivec![0, 1, 1]]);
        assert!(compare_with_stanley_reisner(&m.generators, &t.facets, 3).unwrap().agrees());
    }

    fn disc_triangulation(points: &[[i64; 2]], values: &[i64]) -> WeightedTriangulation {
        WeightedTriangulation {
            points: points.iter().map(|p| IntVec::from_i64s(p)).collect(),
            facets: vec![
                vec![0, 2, 3],
                vec![0, 3, 4],
                vec![0, 1, 4],
                vec![1, 4, 5],
                vec![1, 2, 5],
                vec![2, 3, 5],
                vec![3, 4, 5],
            ],
            values: values.iter().map(|&v| rat(v, 1)).collect(),
        }
    }

    #[test]
    fn six_vertex_disc_monoid() {
        // the reduced realization of the disc read in the chart x + y + z = 1,
        // scaled by 10
        let t = disc_triangulation(
            &[[10, 0], [-6, -2], [0, 15], [0, 10], [0, 0], [-5, 0]],
            &[10, 2, 5, 10, 10, 5],
        );
        let m = regular_to_monoid(&t).unwrap();
        assert_eq!(m.generators[1], ivec![-30, -10, 5]);
        let r = compare_with_stanley_reisner(&m.generators, &t.facets, 3).unwrap();
        assert!(r.agrees(), "{:?}", r.mismatches);
    }

    #[test]
    fn generic_support_function_leaves_nilpotents() {
        let t = disc_triangulation(&[[0, 0], [12, 0], [0, 12], [2, 5], [5, 2], [5, 5]], &[1, 1, 1, 2, 2, 2]);
        let m = regular_to_monoid(&t).unwrap();
        let r = compare_with_stanley_reisner(&m.generators, &t.facets, 3).unwrap();
        assert!(!r.agrees());
        // g_1 + g_6 survives in degree 2 but is nilpotent
        let mut ring = GrRing::new(m.generators.clone()).unwrap();
        let x = ring.monomial(&(&m.generators[0] + &m.generators[5])).unwrap();
        assert_eq!(x.length, 2);
        assert!(ring.power(&x, 14).unwrap().is_none());
    }
}
