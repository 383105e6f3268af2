//! Canonical JSON encoding. Object keys are sorted; integers beyond 53 bits
//! of magnitude are written as decimal strings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::bottomcx::{EmbeddedComplex, VerificationReport};
use crate::cone::Cone;
use crate::disc::{DiscComplex, MDelta, MDeltaReport};
use crate::error::{Error, Result};
use crate::exactlin::{IntMat, IntVec, Rat, UnimodularMap};
use crate::fano::OrbitRep;
use crate::gluing::GluingData;
use crate::grring::{GrReport, MonoidPresentation, WeightedTriangulation};

const SAFE: i64 = 1 << 53;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if v.abs() < SAFE => json!(v),
        _ => json!(x.to_string()),
    }
}

pub fn vector(v: &IntVec) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn vectors(vs: &[IntVec]) -> Value {
    Value::Array(vs.iter().map(vector).collect())
}

pub fn matrix(m: &IntMat) -> Value {
    vectors(m.rows())
}

pub fn map(m: &UnimodularMap) -> Value {
    matrix(&m.matrix)
}

pub fn rational(r: &Rat) -> Value {
    if r.denom().is_one() {
        int(r.numer())
    } else {
        json!(format!("{}/{}", r.numer(), r.denom()))
    }
}

pub fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad(format!("not an integer: {n}"))),
        Value::String(s) => s.trim().parse().map_err(|_| bad(format!("not an integer: {s:?}"))),
        _ => Err(bad(format!("expected an integer, got {v}"))),
    }
}

pub fn parse_rational(v: &Value) -> Result<Rat> {
    if let Value::String(s) = v {
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad(format!("bad rational {s:?}")))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad(format!("bad rational {s:?}")))?;
            if d == BigInt::from(0) {
                return Err(bad(format!("zero denominator in {s:?}")));
            }
            return Ok(Rat::new(n, d));
        }
    }
    Ok(Rat::from_integer(parse_int(v)?))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

pub fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

pub fn parse_vector(v: &Value) -> Result<IntVec> {
    Ok(IntVec::new(array(v, "vector")?.iter().map(parse_int).collect::<Result<_>>()?))
}

pub fn parse_vectors(v: &Value) -> Result<Vec<IntVec>> {
    array(v, "vector list")?.iter().map(parse_vector).collect()
}

pub fn parse_usizes(v: &Value) -> Result<Vec<usize>> {
    array(v, "index list")?
        .iter()
        .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| bad(format!("not an index: {x}"))))
        .collect()
}

fn parse_ids(v: &Value) -> Result<Vec<String>> {
    array(v, "id list")?
        .iter()
        .map(|x| match x {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) => Ok(n.to_string()),
            _ => Err(bad(format!("not a vertex id: {x}"))),
        })
        .collect()
}

pub fn parse_matrix(v: &Value) -> Result<IntMat> {
    let rows = parse_vectors(v)?;
    let cols = rows.first().map_or(0, |r| r.dim());
    if rows.iter().any(|r| r.dim() != cols) {
        return Err(bad("matrix rows have different lengths"));
    }
    Ok(IntMat::from_rows(rows, cols))
}

pub fn cone(c: &Cone) -> Value {
    json!({
        "dim": c.dim(),
        "generators": vectors(c.generators()),
        "extreme_rays": vectors(c.extreme_rays()),
        "facet_normals": vectors(c.facet_normals()),
    })
}

pub fn parse_cone(v: &Value) -> Result<Cone> {
    let gens = parse_vectors(field(v, "generators")?)?;
    if let Some(d) = v.get("dim").and_then(Value::as_u64) {
        if let Some(g) = gens.iter().find(|g| g.dim() as u64 != d) {
            return Err(Error::DimensionMismatch { expected: d as usize, got: g.dim() });
        }
    }
    Cone::new(gens)
}

/// Points of a polytope: `{"vertices": [...]}`.
pub fn parse_points(v: &Value) -> Result<Vec<IntVec>> {
    let pts = parse_vectors(field(v, "vertices")?)?;
    if pts.is_empty() {
        return Err(bad("no vertices"));
    }
    Ok(pts)
}

pub fn complex(k: &EmbeddedComplex) -> Value {
    let vertices: Map<String, Value> =
        k.ids.iter().zip(&k.coords).map(|(id, x)| (id.clone(), vector(x))).collect();
    let facets: Vec<Value> = (0..k.facets.len()).map(|f| json!(k.facet_ids(f))).collect();
    json!({ "dim": k.dim, "vertices": vertices, "facets": facets })
}

/// Vertices as an id map, in id order.
pub fn parse_vertex_map(v: &Value) -> Result<Vec<(String, IntVec)>> {
    let obj = v.as_object().ok_or_else(|| bad("vertices must be an object"))?;
    obj.iter().map(|(id, x)| Ok((id.clone(), parse_vector(x)?))).collect()
}

pub fn parse_facet_ids(v: &Value) -> Result<Vec<Vec<String>>> {
    array(v, "facets")?.iter().map(parse_ids).collect()
}

pub fn parse_complex(v: &Value) -> Result<EmbeddedComplex> {
    let vertices = parse_vertex_map(field(v, "vertices")?)?;
    let dim = match v.get("dim").and_then(Value::as_u64) {
        Some(d) => d as usize,
        None => vertices.first().map(|(_, x)| x.dim()).ok_or_else(|| bad("no vertices"))?,
    };
    EmbeddedComplex::with_ids(dim, vertices, parse_facet_ids(field(v, "facets")?)?)
}

pub fn report(r: &VerificationReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| json!({ "clause": v.clause, "facet": v.facet, "witness": vectors(&v.witness) }))
        .collect();
    let mut out = json!({ "status": r.status.as_str(), "violations": violations });
    if let Some(f) = &r.facet_hilbert_failures {
        out["facet_hilbert_failures"] = json!(f);
    }
    out
}

pub fn gluing(g: &GluingData) -> Value {
    json!({
        "theta": map(&g.theta),
        "reflection_used": g.reflection_used,
        "rho": g.rho.as_ref().map(map),
        "u": vector(&g.u),
        "v": vector(&g.v),
        "w": vectors(&g.w),
        "gamma": vector(&g.gamma),
        "h": vector(&g.h),
        "t_cone": g.t_cone,
        "t": g.t,
        "alpha_t": map(&g.alpha_t),
        "beta_t": map(&g.beta_t),
    })
}

pub fn orbit_rep(r: &OrbitRep) -> Value {
    json!({ "rep": vector(&r.rep), "orbit_size": r.orbit_size, "cone": cone(&r.cone) })
}

pub fn disc(d: &DiscComplex) -> Value {
    let edges: Vec<Value> = d
        .interior_edges
        .iter()
        .map(|e| json!({ "edge": [e.k, e.l], "opposite": [e.i, e.j] }))
        .collect();
    // Row e reads [i] + [j] + lambda [k] + mu [l] = 0.
    let pattern: Vec<Value> = d
        .interior_edges
        .iter()
        .map(|e| {
            let cell = |v: &usize| match *v {
                v if v == e.k => "lambda",
                v if v == e.l => "mu",
                v if v == e.i || v == e.j => "1",
                _ => "0",
            };
            json!(d.vertices.iter().map(cell).collect::<Vec<_>>())
        })
        .collect();
    json!({
        "columns": d.vertices,
        "pattern": pattern,
        "facets": d.facets,
        "boundary": d.boundary,
        "interior_edges": edges,
    })
}

pub fn parse_disc_facets(v: &Value) -> Result<Vec<Vec<usize>>> {
    array(field(v, "facets")?, "facets")?.iter().map(parse_usizes).collect()
}

pub fn mdelta(m: &MDelta) -> Value {
    let coefficients: Vec<Value> = m.coefficients().iter().map(|(a, b)| json!([int(a), int(b)])).collect();
    json!({
        "facets": m.disc.facets,
        "columns": m.disc.vertices,
        "matrix": matrix(&m.entries),
        "coefficients": coefficients,
    })
}

/// `{"facets": ..., "matrix": [[...]]}` or `{"facets": ..., "coefficients": [[λ, μ], ...]}`.
pub fn parse_mdelta(v: &Value) -> Result<MDelta> {
    let d = crate::disc::analyze_disc(&parse_disc_facets(v)?)?;
    if let Some(m) = v.get("matrix") {
        let rows = parse_vectors(m)?;
        return MDelta::from_matrix(&d, IntMat::from_rows(rows, d.n()));
    }
    let coeffs = array(field(v, "coefficients")?, "coefficients")?
        .iter()
        .map(|p| match p.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok((parse_int(a)?, parse_int(b)?)),
            _ => Err(bad("coefficients must be pairs")),
        })
        .collect::<Result<Vec<_>>>()?;
    MDelta::from_coefficients(&d, &coeffs)
}

pub fn mdelta_report(r: &MDeltaReport) -> Value {
    json!({
        "passed": r.passed(),
        "sum_ok": r.sum_ok,
        "boundary_ok": r.boundary_ok,
        "rank": r.rank,
        "rank_ok": r.rank_ok,
        "failures": r.failures,
    })
}

pub fn gr_report(r: &GrReport) -> Value {
    let pairs = |ps: &[(IntVec, IntVec)]| -> Value {
        Value::Array(ps.iter().map(|(a, b)| json!([vector(a), vector(b)])).collect())
    };
    json!({
        "agrees": r.agrees(),
        "monomials": r.monomials,
        "retract": r.retract,
        "reduced": r.reduced,
        "nilpotent": vectors(&r.nilpotent),
        "nilpotency_mismatches": vectors(&r.nilpotency_mismatches),
        "product_mismatches": pairs(&r.product_mismatches),
        "collapsed_on_facet": pairs(&r.collapsed_on_facet),
    })
}

pub fn parse_triangulation(v: &Value) -> Result<WeightedTriangulation> {
    let points = parse_vectors(field(v, "points")?)?;
    let facets = array(field(v, "facets")?, "facets")?.iter().map(parse_usizes).collect::<Result<_>>()?;
    let values = array(field(v, "values")?, "values")?.iter().map(parse_rational).collect::<Result<_>>()?;
    Ok(WeightedTriangulation { points, facets, values })
}

pub fn monoid(m: &MonoidPresentation) -> Value {
    json!({
        "dim": m.dim,
        "generators": vectors(&m.generators),
        "scale": int(&m.scale),
        "normal": m.normal,
    })
}

/// Vertex coordinates keyed by label: `{"1": [..], ...}`.
pub fn parse_labelled_coords(v: &Value) -> Result<BTreeMap<usize, IntVec>> {
    parse_vertex_map(v)?
        .into_iter()
        .map(|(id, x)| Ok((id.parse().map_err(|_| bad(format!("vertex label {id:?} is not a number")))?, x)))
        .collect()
}

/// Canonical text form: keys sorted, arrays of scalars on one line, a
/// trailing newline.
pub fn to_string(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(xs) if xs.is_empty() => out.push_str("[]"),
        Value::Array(xs) if xs.iter().all(is_scalar) => {
            out.push('[');
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push(']');
        }
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, indent + 1);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => out.push_str(&v.to_string()),
    }
}
