//! Command-line front end. Every command reads JSON files and writes
//! canonical JSON (or SVG) to stdout or `--out`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 enumeration cap exceeded.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::bottomcx::{bottom_complex, realize_path, verify_bottom, verify_reduced_bottom, EmbeddedComplex};
use crate::cone::{facet_lattice_isomorphism, Cone, ConeFace};
use crate::disc::{analyze_disc, mdelta_check, mdelta_to_embedding, search_coefficients};
use crate::error::Error;
use crate::exactlin::UnimodularMap;
use crate::fano::{catalog_polygon, check_smooth_fano, enumerate_regular_realizations, FanoPolytope};
use crate::gluing::{glue_cones, glue_reduced, realize_stellar_ngon, stack_realize, GlueOptions, StackedComplex};
use crate::grring::{gr_matches_bottom_algebra, regular_to_monoid};
use crate::json;
use crate::monoid::hilbert_basis;

#[derive(Parser, Debug)]
#[command(name = "bottomforge", version, about = "Bottom complexes of rational pointed cones")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bottom complex of a cone.
    Bottom { cone: PathBuf },
    /// Hilbert basis of a cone.
    Hilbert { cone: PathBuf },
    /// Check that a complex is the bottom of the cone it spans.
    Verify { complex: PathBuf },
    /// Check that a complex is a reduced bottom.
    VerifyReduced { complex: PathBuf },
    /// Glue two cones along lattice isomorphic facets.
    Glue {
        cone1: PathBuf,
        cone2: PathBuf,
        /// `{"f1": [..], "f2": [..], "theta"?: [[..]], "gamma"?: [..]}`
        map: Option<PathBuf>,
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        t_cap: Option<u64>,
        /// Raise t until the glued bottom is reduced.
        #[arg(long)]
        reduced: bool,
    },
    /// Realize a stacked complex by iterated gluing.
    Stack {
        complex: PathBuf,
        #[arg(long)]
        reduced: bool,
    },
    /// Reduced realization of the stellar triangulation of the n-gon.
    Ngon { n: usize },
    /// Regular realizations over a smooth Fano polytope, up to symmetry.
    FanoEnumerate {
        polytope: PathBuf,
        #[arg(long, default_value_t = 3)]
        bound: u64,
    },
    /// Sparsity skeleton of the matrix of a triangulated disc.
    DiscMatrix {
        disc: PathBuf,
        /// Also search coefficients with |λ|, |μ| up to this bound.
        #[arg(long)]
        lambda_bound: Option<u64>,
    },
    /// Check the matrix conditions.
    DiscCheck { matrix: PathBuf },
    /// Reconstruct the embedding from a matrix.
    DiscRealize { matrix: PathBuf },
    /// Compare the associated graded ring with the bottom algebra.
    GrCheck {
        cone: PathBuf,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Monoid of a regular triangulation with a concave support function.
    RegularToMonoid { triangulation: PathBuf },
    /// Planar realization of a path with given self-intersections.
    PathRealize {
        #[arg(required = true, allow_negative_numbers = true)]
        coefficients: Vec<i64>,
    },
    /// Draw a complex (or the bottom of a cone) as SVG.
    Svg {
        input: PathBuf,
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        plane: Option<Vec<usize>>,
    },
}

/// What a command produced.
enum Output {
    Json(Value),
    Text(String),
}

struct Outcome {
    output: Output,
    failed: bool,
}

impl Outcome {
    fn ok(v: Value) -> Self {
        Outcome { output: Output::Json(v), failed: false }
    }

    fn judged(v: Value, passed: bool) -> Self {
        Outcome { output: Output::Json(v), failed: !passed }
    }
}

fn read_json(path: &Path) -> Result<Value, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn read_cone(path: &Path) -> Result<Cone, Error> {
    json::parse_cone(&read_json(path)?)
}

fn face_from_indices(c: &Cone, v: &Value, key: &str) -> Result<ConeFace, Error> {
    let idx = json::parse_usizes(json::field(v, key)?)?;
    let rays = c.extreme_rays();
    let chosen = idx
        .iter()
        .map(|&i| rays.get(i).cloned().ok_or_else(|| Error::InvalidInput(format!("{key}: no ray {i}"))))
        .collect::<Result<Vec<_>, _>>()?;
    c.facet_through(&chosen)
        .filter(|f| f.rays.len() == chosen.len())
        .ok_or_else(|| Error::InvalidInput(format!("{key}: rays {idx:?} do not span a facet")))
}

/// First pair of lattice isomorphic facets, in facet order.
fn default_faces(c1: &Cone, c2: &Cone) -> Result<(ConeFace, ConeFace), Error> {
    for f1 in c1.facets() {
        for f2 in c2.facets() {
            if facet_lattice_isomorphism(&f1, &f2)?.is_some() {
                return Ok((f1, f2));
            }
        }
    }
    Err(Error::NotIsomorphicFacets)
}

fn glue(
    c1: &Cone,
    c2: &Cone,
    map: Option<&Value>,
    gamma: Option<&str>,
    t_cap: Option<u64>,
    reduced: bool,
) -> Result<Outcome, Error> {
    let mut opts = GlueOptions { t_cap, ..Default::default() };
    let (f1, f2) = match map {
        Some(m) => {
            if let Some(t) = m.get("theta") {
                opts.theta = Some(UnimodularMap::new(json::parse_matrix(t)?)?);
            }
            if let Some(g) = m.get("gamma") {
                opts.gamma = Some(json::parse_vector(g)?);
            }
            (face_from_indices(c1, m, "f1")?, face_from_indices(c2, m, "f2")?)
        }
        None => default_faces(c1, c2)?,
    };
    if let Some(g) = gamma {
        let v: Value = serde_json::from_str(g).map_err(|e| Error::InvalidInput(format!("--gamma: {e}")))?;
        opts.gamma = Some(json::parse_vector(&v)?);
    }
    if reduced {
        let r = glue_reduced(c1, &f1, c2, &f2, &opts)?;
        let passed = r.report.passed();
        let v = json!({ "cone": json::cone(&r.cone), "gluing": json::gluing(&r.data), "report": json::report(&r.report) });
        Ok(Outcome::judged(v, passed))
    } else {
        let (c, data) = glue_cones(c1, &f1, c2, &f2, &opts)?;
        Ok(Outcome::ok(json!({ "cone": json::cone(&c), "gluing": json::gluing(&data) })))
    }
}

fn read_polytope(v: &Value) -> Result<FanoPolytope, Error> {
    if let Some(name) = v.get("name").and_then(Value::as_str) {
        return catalog_polygon(name).ok_or_else(|| Error::InvalidInput(format!("unknown catalog polytope {name:?}")));
    }
    check_smooth_fano(&json::parse_points(v)?)?
        .map_err(|why| Error::InvalidInput(format!("not a smooth Fano polytope: {why}")))
}

fn read_svg_input(v: &Value) -> Result<EmbeddedComplex, Error> {
    if v.get("generators").is_some() {
        bottom_complex(&json::parse_cone(v)?)
    } else {
        json::parse_complex(v)
    }
}

fn execute(cmd: &Command) -> Result<Outcome, Error> {
    Ok(match cmd {
        Command::Bottom { cone } => Outcome::ok(json::complex(&bottom_complex(&read_cone(cone)?)?)),
        Command::Hilbert { cone } => {
            Outcome::ok(json!({ "hilbert_basis": json::vectors(&hilbert_basis(&read_cone(cone)?)?) }))
        }
        Command::Verify { complex } => {
            let r = verify_bottom(&json::parse_complex(&read_json(complex)?)?)?;
            Outcome::judged(json::report(&r), r.passed())
        }
        Command::VerifyReduced { complex } => {
            let r = verify_reduced_bottom(&json::parse_complex(&read_json(complex)?)?)?;
            Outcome::judged(json::report(&r), r.passed())
        }
        Command::Glue { cone1, cone2, map, gamma, t_cap, reduced } => {
            let map = map.as_deref().map(read_json).transpose()?;
            glue(&read_cone(cone1)?, &read_cone(cone2)?, map.as_ref(), gamma.as_deref(), *t_cap, *reduced)?
        }
        Command::Stack { complex, reduced } => {
            let v = read_json(complex)?;
            let s = StackedComplex {
                vertices: json::parse_vertex_map(json::field(&v, "vertices")?)?,
                facets: json::parse_facet_ids(json::field(&v, "facets")?)?,
            };
            let r = stack_realize(&s, *reduced)?;
            Outcome::ok(json!({
                "cone": json::cone(&r.cone),
                "complex": json::complex(&r.complex),
                "positions": r.positions.iter().map(|(k, x)| (k.clone(), json::vector(x))).collect::<serde_json::Map<_, _>>(),
                "t_values": r.t_values,
            }))
        }
        Command::Ngon { n } => {
            let r = realize_stellar_ngon(*n)?;
            Outcome::ok(json!({
                "cone": json::cone(&r.cone),
                "complex": json::complex(&bottom_complex(&r.cone)?),
                "t_values": r.t_values,
            }))
        }
        Command::FanoEnumerate { polytope, bound } => {
            let p = read_polytope(&read_json(polytope)?)?;
            let reps = enumerate_regular_realizations(&p, *bound)?;
            Outcome::ok(Value::Array(reps.iter().map(json::orbit_rep).collect()))
        }
        Command::DiscMatrix { disc, lambda_bound } => {
            let d = analyze_disc(&json::parse_disc_facets(&read_json(disc)?)?)?;
            let mut v = json::disc(&d);
            if let Some(b) = lambda_bound {
                let found = search_coefficients(&d, *b)?;
                v["solutions"] = Value::Array(found.iter().map(json::mdelta).collect());
            }
            Outcome::ok(v)
        }
        Command::DiscCheck { matrix } => {
            let r = mdelta_check(&json::parse_mdelta(&read_json(matrix)?)?)?;
            Outcome::judged(json::mdelta_report(&r), r.passed())
        }
        Command::DiscRealize { matrix } => match mdelta_to_embedding(&json::parse_mdelta(&read_json(matrix)?)?) {
            Ok(Ok(e)) => Outcome::ok(json::complex(&e.complex)),
            Ok(Err(why)) => Outcome::judged(json!({ "status": "fail", "reason": why }), false),
            Err(Error::InconsistentPropagation { residuals }) => {
                Outcome::judged(json!({ "status": "fail", "reason": "inconsistent propagation", "residuals": residuals }), false)
            }
            Err(e) => return Err(e),
        },
        Command::GrCheck { cone, bound } => {
            let r = gr_matches_bottom_algebra(&read_cone(cone)?, *bound)?;
            Outcome::judged(json::gr_report(&r), r.agrees())
        }
        Command::RegularToMonoid { triangulation } => {
            let m = regular_to_monoid(&json::parse_triangulation(&read_json(triangulation)?)?)?;
            Outcome::ok(json::monoid(&m))
        }
        Command::PathRealize { coefficients } => {
            let r = realize_path(coefficients)?;
            Outcome::ok(json!({ "points": json::vectors(&r.points), "complex": json::complex(&r.complex) }))
        }
        Command::Svg { input, plane } => {
            let k = read_svg_input(&read_json(input)?)?;
            let plane = plane.as_ref().map(|p| (p[0], p[1]));
            Outcome { output: Output::Text(crate::svg::render(&k, plane)?), failed: false }
        }
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

/// Runs the command line `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let text = match &outcome.output {
        Output::Json(v) => json::to_string(v),
        Output::Text(s) => s.clone(),
    };
    let written = match &cli.out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return 2;
    }
    i32::from(outcome.failed)
}
