//! Reduced conic realizations of simplicial discs via the linear relations
//! `[i] + [j] + λ[k] + μ[l] = 0` across interior edges.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bottomcx::{verify_reduced_bottom, EmbeddedComplex, Status};
use crate::caps::enumeration_cap;
use crate::error::{Error, Result};
use crate::exactlin::{solve_rational, IntMat, IntVec, Rat, RatMat};

/// An interior edge `{k, l}` (`k < l`) with opposite vertices `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InteriorEdge {
    pub k: usize,
    pub l: usize,
    pub i: usize,
    pub j: usize,
}

/// A two-dimensional simplicial disc with its interior edge table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscComplex {
    /// Vertex labels in increasing order; matrix columns follow this order.
    pub vertices: Vec<usize>,
    /// Triangles as sorted label triples, in lexicographic order.
    pub facets: Vec<[usize; 3]>,
    /// Sorted by `(k, l)`.
    pub interior_edges: Vec<InteriorEdge>,
    pub boundary: BTreeSet<usize>,
}

impl DiscComplex {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn m(&self) -> usize {
        self.interior_edges.len()
    }

    pub fn column(&self, v: usize) -> usize {
        self.vertices.binary_search(&v).expect("vertex of the disc")
    }
}

fn not_a_disc(msg: impl Into<String>) -> Error {
    Error::NotADisc(msg.into())
}

pub fn analyze_disc(facets: &[Vec<usize>]) -> Result<DiscComplex> {
    let mut tris: Vec<[usize; 3]> = Vec::new();
    for f in facets {
        let s: BTreeSet<usize> = f.iter().copied().collect();
        if f.len() != 3 || s.len() != 3 {
            return Err(not_a_disc(format!("facet {f:?} is not a triangle")));
        }
        let v: Vec<usize> = s.into_iter().collect();
        tris.push([v[0], v[1], v[2]]);
    }
    tris.sort();
    tris.dedup();
    if tris.is_empty() {
        return Err(not_a_disc("empty complex"));
    }
    let vertices: Vec<usize> = tris.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();

    let mut edges: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for t in &tris {
        for (a, b, c) in [(t[0], t[1], t[2]), (t[0], t[2], t[1]), (t[1], t[2], t[0])] {
            edges.entry((a, b)).or_default().push(c);
        }
    }
    if let Some((e, _)) = edges.iter().find(|(_, opp)| opp.len() > 2) {
        return Err(not_a_disc(format!("edge multiplicity: {e:?} lies in more than two triangles")));
    }

    // connectivity of the 1-skeleton
    let mut seen = BTreeSet::from([vertices[0]]);
    let mut queue = VecDeque::from([vertices[0]]);
    while let Some(v) = queue.pop_front() {
        for &(a, b) in edges.keys() {
            let w = if a == v { b } else if b == v { a } else { continue };
            if seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    if seen.len() != vertices.len() {
        return Err(not_a_disc("connectivity: complex is disconnected"));
    }

    let euler = vertices.len() as i64 - edges.len() as i64 + tris.len() as i64;
    if euler != 1 {
        return Err(not_a_disc(format!("Euler characteristic is {euler}, not 1")));
    }

    let boundary_edges: Vec<(usize, usize)> =
        edges.iter().filter(|(_, o)| o.len() == 1).map(|(e, _)| *e).collect();
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in &boundary_edges {
        *degree.entry(a).or_default() += 1;
        *degree.entry(b).or_default() += 1;
    }
    if boundary_edges.is_empty() || degree.values().any(|&d| d != 2) {
        return Err(not_a_disc("boundary is not a single cycle"));
    }
    let start = boundary_edges[0].0;
    let mut cycle = BTreeSet::from([start]);
    let mut queue = vec![start];
    while let Some(v) = queue.pop() {
        for &(a, b) in &boundary_edges {
            let w = if a == v { b } else if b == v { a } else { continue };
            if cycle.insert(w) {
                queue.push(w);
            }
        }
    }
    if cycle.len() != degree.len() {
        return Err(not_a_disc("boundary is not a single cycle"));
    }

    let interior_edges = edges
        .iter()
        .filter(|(_, o)| o.len() == 2)
        .map(|(&(k, l), o)| InteriorEdge { k, l, i: o[0].min(o[1]), j: o[0].max(o[1]) })
        .collect();
    Ok(DiscComplex { vertices, facets: tris, interior_edges, boundary: cycle })
}

/// The relation matrix of a disc: one row per interior edge, one column per
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MDelta {
    pub disc: DiscComplex,
    pub entries: IntMat,
}

impl MDelta {
    /// Builds the matrix from one `(λ, μ)` pair per interior edge.
    pub fn from_coefficients(disc: &DiscComplex, coeffs: &[(BigInt, BigInt)]) -> Result<MDelta> {
        if coeffs.len() != disc.m() {
            return Err(Error::DimensionMismatch { expected: disc.m(), got: coeffs.len() });
        }
        let n = disc.n();
        let rows = disc
            .interior_edges
            .iter()
            .zip(coeffs)
            .map(|(e, (lam, mu))| {
                let mut r = IntVec::zeros(n);
                r.0[disc.column(e.i)] = BigInt::one();
                r.0[disc.column(e.j)] = BigInt::one();
                r.0[disc.column(e.k)] = lam.clone();
                r.0[disc.column(e.l)] = mu.clone();
                r
            })
            .collect();
        Ok(MDelta { disc: disc.clone(), entries: IntMat::from_rows(rows, n) })
    }

    /// Wraps a full matrix, checking the sparsity pattern.
    pub fn from_matrix(disc: &DiscComplex, entries: IntMat) -> Result<MDelta> {
        let m = MDelta { disc: disc.clone(), entries };
        m.check_pattern()?;
        Ok(m)
    }

    pub fn check_pattern(&self) -> Result<()> {
        let d = &self.disc;
        if self.entries.nrows() != d.m() || (d.m() > 0 && self.entries.ncols() != d.n()) {
            return Err(Error::PatternViolation(format!(
                "matrix is {}x{}, expected {}x{}",
                self.entries.nrows(),
                self.entries.ncols(),
                d.m(),
                d.n()
            )));
        }
        for (r, e) in d.interior_edges.iter().enumerate() {
            for (c, &v) in d.vertices.iter().enumerate() {
                let x = &self.entries[(r, c)];
                let ok = if v == e.i || v == e.j {
                    x.is_one()
                } else if v == e.k || v == e.l {
                    true
                } else {
                    x.is_zero()
                };
                if !ok {
                    return Err(Error::PatternViolation(format!(
                        "row {}{} has entry {} at vertex {}",
                        e.k, e.l, x, v
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn lambda(&self, row: usize) -> &BigInt {
        &self.entries[(row, self.disc.column(self.disc.interior_edges[row].k))]
    }

    pub fn mu(&self, row: usize) -> &BigInt {
        &self.entries[(row, self.disc.column(self.disc.interior_edges[row].l))]
    }

    pub fn coefficients(&self) -> Vec<(BigInt, BigInt)> {
        (0..self.disc.m()).map(|r| (self.lambda(r).clone(), self.mu(r).clone())).collect()
    }
}

/// Outcome of the three matrix conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MDeltaReport {
    /// `λ + μ <= -3` on every row.
    pub sum_ok: bool,
    /// Convexity at boundary rays: the coefficient of `k` is `<= 0` when `l`
    /// is a boundary vertex, and symmetrically.
    pub boundary_ok: bool,
    pub rank: usize,
    /// `rank = n - 3`.
    pub rank_ok: bool,
    pub failures: Vec<String>,
}

impl MDeltaReport {
    pub fn passed(&self) -> bool {
        self.sum_ok && self.boundary_ok && self.rank_ok
    }
}

pub fn mdelta_check(m: &MDelta) -> Result<MDeltaReport> {
    m.check_pattern()?;
    let d = &m.disc;
    let mut failures = Vec::new();
    let minus3 = BigInt::from(-3);
    for (r, e) in d.interior_edges.iter().enumerate() {
        let (lam, mu) = (m.lambda(r), m.mu(r));
        if lam + mu > minus3 {
            failures.push(format!("a: row {}{} has λ+μ = {}", e.k, e.l, lam + mu));
        }
        if d.boundary.contains(&e.l) && lam.is_positive() {
            failures.push(format!("b: row {}{} has λ = {} > 0 at boundary vertex {}", e.k, e.l, lam, e.l));
        }
        if d.boundary.contains(&e.k) && mu.is_positive() {
            failures.push(format!("b: row {}{} has μ = {} > 0 at boundary vertex {}", e.k, e.l, mu, e.k));
        }
    }
    let rank = if d.m() == 0 { 0 } else { m.entries.rank() };
    let rank_ok = rank + 3 == d.n();
    if !rank_ok {
        failures.push(format!("c: rank is {rank}, expected {}", d.n() as i64 - 3));
    }
    Ok(MDeltaReport {
        sum_ok: !failures.iter().any(|f| f.starts_with("a:")),
        boundary_ok: !failures.iter().any(|f| f.starts_with("b:")),
        rank,
        rank_ok,
        failures,
    })
}

/// A disc placed in `Z^3` by solving the relations.
#[derive(Clone, Debug)]
pub struct DiscEmbedding {
    pub coords: BTreeMap<usize, IntVec>,
    pub complex: EmbeddedComplex,
}

fn relation_residual(m: &MDelta, r: usize, coords: &BTreeMap<usize, IntVec>) -> IntVec {
    let mut acc = IntVec::zeros(3);
    for (c, v) in m.disc.vertices.iter().enumerate() {
        let x = &m.entries[(r, c)];
        if !x.is_zero() {
            acc = acc.add_scaled(x, &coords[v]);
        }
    }
    acc
}

/// Seeds the lexicographically first triangle at `e_1, e_2, e_3` and
/// propagates across interior edges. On success the embedding passes the
/// reduced bottom test; otherwise the first failed global check is returned.
pub fn mdelta_to_embedding(m: &MDelta) -> Result<std::result::Result<DiscEmbedding, String>> {
    m.check_pattern()?;
    let d = &m.disc;
    let seed = d.facets[0];
    let mut coords: BTreeMap<usize, IntVec> =
        seed.iter().enumerate().map(|(a, &v)| (v, IntVec::unit(3, a))).collect();
    let tri = |a: usize, b: usize, c: usize| -> [usize; 3] {
        let mut t = [a, b, c];
        t.sort();
        t
    };
    let mut visited = BTreeSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some(t) = queue.pop_front() {
        for (r, e) in d.interior_edges.iter().enumerate() {
            let (ti, tj) = (tri(e.i, e.k, e.l), tri(e.j, e.k, e.l));
            let (from, to, next) = if ti == t {
                (e.i, e.j, tj)
            } else if tj == t {
                (e.j, e.i, ti)
            } else {
                continue;
            };
            if !coords.contains_key(&to) {
                let v = -&coords[&from];
                let v = v.add_scaled(&-m.lambda(r), &coords[&e.k]).add_scaled(&-m.mu(r), &coords[&e.l]);
                coords.insert(to, v);
            }
            if visited.insert(next) {
                queue.push_back(next);
            }
        }
    }
    if coords.len() != d.n() {
        return Ok(Err("dual graph is disconnected".into()));
    }
    let residuals: Vec<IntVec> = (0..d.m()).map(|r| relation_residual(m, r, &coords)).collect();
    if residuals.iter().any(|v| !v.is_zero()) {
        return Err(Error::InconsistentPropagation {
            residuals: residuals.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect(),
        });
    }
    for t in &d.facets {
        let det = IntMat::from_rows(t.iter().map(|v| coords[v].clone()).collect(), 3).det();
        if !det.abs().is_one() {
            return Ok(Err(format!("triangle {t:?} has determinant {det}")));
        }
    }
    let complex = EmbeddedComplex::with_ids(
        3,
        coords.iter().map(|(v, x)| (v.to_string(), x.clone())).collect(),
        d.facets.iter().map(|t| t.iter().map(|v| v.to_string()).collect()).collect(),
    )?;
    let report = verify_reduced_bottom(&complex)?;
    if report.status != Status::ReducedBottom {
        let v = &report.violations[0];
        return Ok(Err(format!("verifier clause {} fails on facet {:?}", v.clause, v.facet)));
    }
    Ok(Ok(DiscEmbedding { coords, complex }))
}

/// Recovers `(λ, μ)` for every interior edge from vertex coordinates.
pub fn embedding_to_mdelta(disc: &DiscComplex, coords: &BTreeMap<usize, IntVec>) -> Result<MDelta> {
    let mut coeffs = Vec::with_capacity(disc.m());
    for e in &disc.interior_edges {
        let key = (e.k as u32, e.l as u32);
        let get = |v: usize| {
            coords.get(&v).ok_or_else(|| Error::InvalidInput(format!("no coordinates for vertex {v}")))
        };
        let (k, l) = (get(e.k)?.to_rats(), get(e.l)?.to_rats());
        let rhs: Vec<Rat> = (-&(get(e.i)? + get(e.j)?)).to_rats();
        let a = RatMat::from_rows((0..rhs.len()).map(|r| vec![k[r].clone(), l[r].clone()]).collect(), 2);
        let sol = solve_rational(&a, &rhs).ok_or(Error::NotInSpan(key))?;
        if sol.iter().any(|x| !x.is_integer()) {
            return Err(Error::NonIntegralRelation(key));
        }
        coeffs.push((sol[0].to_integer(), sol[1].to_integer()));
    }
    MDelta::from_coefficients(disc, &coeffs)
}

/// The six-vertex disc with boundary triangle `{1, 2, 3}`.
pub fn six_vertex_disc() -> DiscComplex {
    let facets = [[1, 3, 4], [1, 4, 5], [1, 2, 5], [2, 5, 6], [2, 3, 6], [3, 4, 6], [4, 5, 6]];
    analyze_disc(&facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>()).expect("a disc")
}

/// A known realization of the six-vertex disc.
pub fn six_vertex_example() -> BTreeMap<usize, IntVec> {
    [
        (1, [1, 0, 0]),
        (2, [-3, -1, 9]),
        (3, [0, 3, -1]),
        (4, [0, 1, 0]),
        (5, [0, 0, 1]),
        (6, [-1, 0, 3]),
    ]
    .into_iter()
    .map(|(v, c)| (v, IntVec::from_i64s(&c)))
    .collect()
}

/// Rows of the parametric family, keyed by interior edge.
fn family_rows(x: i64, y: i64, z: i64, sx: i64) -> BTreeMap<(usize, usize), [i64; 6]> {
    let x = sx * x;
    BTreeMap::from([
        ((1, 4), [0, 0, 1, -z, 1, 0]),
        ((1, 5), [y, 1, 0, 1, -y * x, 0]),
        ((2, 5), [1, 0, 0, 0, -x, 1]),
        ((2, 6), [0, z, 1, 0, 1, -y * z]),
        ((3, 6), [0, 1, 0, 1, 0, -y]),
        ((3, 4), [1, 0, x, -x * z, 0, 1]),
        ((4, 6), [0, 0, 1, -z, 1, 0]),
        ((4, 5), [1, 0, 0, 0, -x, 1]),
        ((5, 6), [0, 1, 0, 1, 0, -y]),
    ])
}

fn family_matrix(rows: BTreeMap<(usize, usize), [i64; 6]>) -> MDelta {
    let disc = six_vertex_disc();
    let m = IntMat::from_rows(
        disc.interior_edges.iter().map(|e| IntVec::from_i64s(&rows[&(e.k, e.l)])).collect(),
        6,
    );
    MDelta::from_matrix(&disc, m).expect("family rows follow the pattern")
}

/// The three-parameter family of relation matrices for the six-vertex disc,
/// with signs matching [`six_vertex_example`] at `x = y = z = 3`.
pub fn parametric_mdelta(x: i64, y: i64, z: i64) -> MDelta {
    family_matrix(family_rows(x, y, z, 1))
}

/// The family with the opposite sign on `x`, as it is usually tabulated.
pub fn parametric_mdelta_as_tabulated(x: i64, y: i64, z: i64) -> MDelta {
    family_matrix(family_rows(x, y, z, -1))
}

/// All coefficient assignments with `|λ|, |μ| <= bound` passing
/// [`mdelta_check`].
pub fn search_coefficients(disc: &DiscComplex, bound: u64) -> Result<Vec<MDelta>> {
    let b = bound as i64;
    let per_row: Vec<Vec<(BigInt, BigInt)>> = disc
        .interior_edges
        .iter()
        .map(|e| {
            (-b..=b)
                .cartesian_product(-b..=b)
                .filter(|&(lam, mu)| {
                    lam + mu <= -3
                        && !(disc.boundary.contains(&e.l) && lam > 0)
                        && !(disc.boundary.contains(&e.k) && mu > 0)
                })
                .map(|(lam, mu)| (BigInt::from(lam), BigInt::from(mu)))
                .collect()
        })
        .collect();
    let total = per_row.iter().try_fold(1u128, |acc, r| acc.checked_mul(r.len() as u128));
    let limit = enumeration_cap();
    if total.is_none_or(|t| t > limit as u128) {
        return Err(Error::CapExceeded { what: "coefficient search", limit });
    }
    let choices: Vec<Vec<(BigInt, BigInt)>> = if disc.m() == 0 {
        vec![vec![]]
    } else {
        per_row.iter().map(|r| r.iter().cloned()).multi_cartesian_product().collect()
    };
    let mut out = Vec::new();
    for choice in choices {
        let m = MDelta::from_coefficients(disc, &choice)?;
        if mdelta_check(&m)?.passed() {
            out.push(m);
        }
    }
    Ok(out)
}
