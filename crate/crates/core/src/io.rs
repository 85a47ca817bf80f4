//! JSON documents: divisorial fans in, Poincaré polynomials out.
//!
//! Rationals are integers or "p/q" strings. Integers may also be given as decimal strings so that
//! large values survive tools that read JSON numbers as doubles.

use crate::cone::Cone;
use crate::divisor::{Curve, DivisorialFan, Locus, Policy, PolyDivisor, QDivisor, ValidationReport};
use crate::engine::PoincareReport;
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::hf::HFPoset;
use crate::num::*;
use crate::poly::{LaurentPolynomial, Polynomial};
use crate::polyhedron::Polyhedron;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Str(String),
}

impl Number {
    pub fn from_rat(x: &Rat) -> Number {
        if x.is_integer() {
            if let Ok(v) = i64::try_from(x.numer()) {
                return Number::Int(v);
            }
        }
        Number::Str(fmt_rat(x))
    }
    pub fn from_int(x: &Int) -> Number {
        match i64::try_from(x) {
            Ok(v) => Number::Int(v),
            Err(_) => Number::Str(x.to_string()),
        }
    }
    pub fn to_rat(&self, path: &str) -> Result<Rat> {
        match self {
            Number::Int(v) => Ok(rat(*v, 1)),
            Number::Str(s) => parse_rat(s).ok_or_else(|| Error::Parse(format!("{}: {:?} is not a rational", path, s))),
        }
    }
    pub fn to_int(&self, path: &str) -> Result<Int> {
        let r = self.to_rat(path)?;
        if !r.is_integer() {
            return Err(Error::Parse(format!("{}: {} must be an integer", path, fmt_rat(&r))));
        }
        Ok(r.to_integer())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub curve: CurveDoc,
    pub lattice_rank: usize,
    pub divisors: Vec<DivisorDoc>,
}

fn default_version() -> u32 {
    SCHEMA_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub genus: u32,
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principality: Option<PrincipalityDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PrincipalityDoc {
    Named(String),
    Table { table: Vec<BTreeMap<String, Number>> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorDoc {
    pub tail: ConeDoc,
    pub locus: LocusDoc,
    #[serde(default)]
    pub coefficients: BTreeMap<String, PolyhedronDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LocusDoc {
    Named(String),
    Exclude { exclude: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub rays: Vec<Vec<Number>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyhedronDoc {
    pub vertices: Vec<Vec<Number>>,
    #[serde(default)]
    pub rays: Vec<Vec<Number>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub cones: Vec<ConeDoc>,
}

/// Parses a document; syntax errors carry line and column.
pub fn parse(input: &str) -> Result<InputDocument> {
    let doc: InputDocument = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Parse(format!(
            "unsupported schema_version {}",
            doc.schema_version
        )));
    }
    Ok(doc)
}

pub fn parse_policy(s: &str) -> Result<Policy> {
    match s {
        "genus0" => Ok(Policy::Genus0),
        "generic" => Ok(Policy::Generic),
        _ => Err(Error::Parse(format!("unknown principality policy {:?}", s))),
    }
}

fn int_vec(v: &[Number], path: &str) -> Result<IVec> {
    v.iter()
        .enumerate()
        .map(|(i, x)| x.to_int(&format!("{}[{}]", path, i)))
        .collect()
}

fn rat_vec(v: &[Number], path: &str) -> Result<QVec> {
    v.iter()
        .enumerate()
        .map(|(i, x)| x.to_rat(&format!("{}[{}]", path, i)))
        .collect()
}

fn check_len(v: &[Number], n: usize, path: &str) -> Result<()> {
    if v.len() != n {
        return Err(Error::Parse(format!(
            "{}: expected {} entries, found {}",
            path,
            n,
            v.len()
        )));
    }
    Ok(())
}

/// Builds a cone of the given ambient dimension, or of the declared/inferred one.
pub fn build_cone(doc: &ConeDoc, ambient: Option<usize>, path: &str) -> Result<Cone> {
    let n = ambient
        .or(doc.dim)
        .or_else(|| doc.rays.first().map(|r| r.len()))
        .ok_or_else(|| Error::Parse(format!("{}: cannot infer the dimension of a cone without rays", path)))?;
    let mut gens = Vec::new();
    for (i, r) in doc.rays.iter().enumerate() {
        let p = format!("{}.rays[{}]", path, i);
        check_len(r, n, &p)?;
        gens.push(int_vec(r, &p)?);
    }
    Ok(Cone::from_generators(&gens, n))
}

pub fn build_fan(doc: &FanDoc) -> Result<Fan> {
    let n = doc
        .dim
        .or_else(|| {
            doc.cones
                .iter()
                .find_map(|c| c.dim.or_else(|| c.rays.first().map(|r| r.len())))
        })
        .ok_or_else(|| Error::Parse("fan: cannot infer the dimension".into()))?;
    let cones = doc
        .cones
        .iter()
        .enumerate()
        .map(|(i, c)| build_cone(c, Some(n), &format!("cones[{}]", i)))
        .collect::<Result<Vec<_>>>()?;
    Fan::new(&cones, n)
}

fn build_polyhedron(doc: &PolyhedronDoc, n: usize, path: &str) -> Result<Polyhedron> {
    if doc.vertices.is_empty() {
        return Err(Error::Parse(format!(
            "{}: a coefficient needs at least one vertex",
            path
        )));
    }
    let mut vs = Vec::new();
    for (i, v) in doc.vertices.iter().enumerate() {
        let p = format!("{}.vertices[{}]", path, i);
        check_len(v, n, &p)?;
        vs.push(rat_vec(v, &p)?);
    }
    let mut rs = Vec::new();
    for (i, r) in doc.rays.iter().enumerate() {
        let p = format!("{}.rays[{}]", path, i);
        check_len(r, n, &p)?;
        rs.push(int_vec(r, &p)?);
    }
    if !Cone::from_generators(&rs, n).is_strictly_convex() {
        return Err(Error::Parse(format!("{}: recession cone must be pointed", path)));
    }
    Ok(Polyhedron::new(vs, rs))
}

fn build_curve(doc: &CurveDoc, override_policy: Option<&Policy>) -> Result<Curve> {
    let mut seen = BTreeSet::new();
    for p in &doc.points {
        if p.is_empty() || p.starts_with("~generic") {
            return Err(Error::Parse(format!("curve.points: {:?} is a reserved label", p)));
        }
        if !seen.insert(p) {
            return Err(Error::Parse(format!("curve.points: duplicate label {:?}", p)));
        }
    }
    let policy = match (override_policy, &doc.principality) {
        (Some(p), _) => p.clone(),
        (None, None) => {
            if doc.genus == 0 {
                Policy::Genus0
            } else {
                Policy::Generic
            }
        }
        (None, Some(PrincipalityDoc::Named(s))) => parse_policy(s)?,
        (None, Some(PrincipalityDoc::Table { table })) => {
            let mut divs = Vec::new();
            for (i, d) in table.iter().enumerate() {
                let mut entries = Vec::new();
                for (y, c) in d {
                    let path = format!("curve.principality.table[{}].{}", i, y);
                    if !seen.contains(y) {
                        return Err(Error::Parse(format!("{}: unknown point", path)));
                    }
                    entries.push((y.clone(), c.to_rat(&path)?));
                }
                divs.push(QDivisor::new(entries));
            }
            Policy::Table(divs)
        }
    };
    if policy == Policy::Genus0 && doc.genus != 0 {
        return Err(Error::Parse("curve: the genus0 policy needs genus 0".into()));
    }
    Ok(Curve {
        genus: doc.genus,
        points: doc.points.clone(),
        policy,
    })
}

/// The curve and the listed divisors, before closing under intersections.
pub fn build_parts(doc: &InputDocument, policy: Option<&Policy>) -> Result<(Curve, Vec<PolyDivisor>)> {
    let curve = build_curve(&doc.curve, policy)?;
    let n = doc.lattice_rank;
    if doc.divisors.is_empty() {
        return Err(Error::Parse("divisors: at least one divisor is required".into()));
    }
    let mut divs = Vec::new();
    for (i, d) in doc.divisors.iter().enumerate() {
        let path = format!("divisors[{}]", i);
        let tail = build_cone(&d.tail, Some(n), &format!("{}.tail", path))?;
        if !tail.is_strictly_convex() {
            return Err(Error::Parse(format!("{}.tail: tail cone must be pointed", path)));
        }
        let locus = match &d.locus {
            LocusDoc::Named(s) if s == "complete" => Locus::Complete,
            LocusDoc::Named(s) => return Err(Error::Parse(format!("{}.locus: unknown locus {:?}", path, s))),
            LocusDoc::Exclude { exclude } => {
                for y in exclude {
                    if !curve.has_point(y) {
                        return Err(Error::Parse(format!("{}.locus: unknown point {:?}", path, y)));
                    }
                }
                Locus::Affine(exclude.iter().cloned().collect())
            }
        };
        let mut coeffs = BTreeMap::new();
        for (y, p) in &d.coefficients {
            let cp = format!("{}.coefficients.{}", path, y);
            if !curve.has_point(y) {
                return Err(Error::Parse(format!("{}: unknown point", cp)));
            }
            coeffs.insert(y.clone(), build_polyhedron(p, n, &cp)?);
        }
        divs.push(PolyDivisor::new(tail, coeffs, locus).map_err(|e| Error::Parse(format!("{}: {}", path, e)))?);
    }
    Ok((curve, divs))
}

/// The fan together with its validation report.
pub fn build_with_report(doc: &InputDocument, policy: Option<&Policy>) -> Result<(DivisorialFan, ValidationReport)> {
    let (curve, divs) = build_parts(doc, policy)?;
    Ok(DivisorialFan::with_report(curve, doc.lattice_rank, divs))
}

pub fn build(doc: &InputDocument, policy: Option<&Policy>) -> Result<DivisorialFan> {
    let (curve, divs) = build_parts(doc, policy)?;
    DivisorialFan::new(curve, doc.lattice_rank, divs)
}

fn ivec_doc(v: &[Int]) -> Vec<Number> {
    v.iter().map(Number::from_int).collect()
}

fn qvec_doc(v: &[Rat]) -> Vec<Number> {
    v.iter().map(Number::from_rat).collect()
}

pub fn emit_cone(c: &Cone) -> ConeDoc {
    ConeDoc {
        dim: None,
        rays: c.rays().iter().map(|r| ivec_doc(r)).collect(),
    }
}

pub fn emit_divisor(d: &PolyDivisor) -> DivisorDoc {
    DivisorDoc {
        tail: emit_cone(d.tail()),
        locus: match d.locus() {
            Locus::Complete => LocusDoc::Named("complete".into()),
            Locus::Affine(ex) => LocusDoc::Exclude {
                exclude: ex.iter().cloned().collect(),
            },
        },
        coefficients: d
            .coefficients()
            .iter()
            .map(|(y, p)| {
                (
                    y.clone(),
                    PolyhedronDoc {
                        vertices: p.vertices().iter().map(|v| qvec_doc(v)).collect(),
                        rays: p.rays().iter().map(|r| ivec_doc(r)).collect(),
                    },
                )
            })
            .collect(),
    }
}

/// The document of a fan, listing every divisor including synthesized intersections.
pub fn emit(fan: &DivisorialFan) -> InputDocument {
    let c = fan.curve();
    let principality = match &c.policy {
        Policy::Genus0 => PrincipalityDoc::Named("genus0".into()),
        Policy::Generic => PrincipalityDoc::Named("generic".into()),
        Policy::Table(t) => PrincipalityDoc::Table {
            table: t
                .iter()
                .map(|d| d.0.iter().map(|(y, v)| (y.clone(), Number::from_rat(v))).collect())
                .collect(),
        },
    };
    InputDocument {
        schema_version: SCHEMA_VERSION,
        curve: CurveDoc {
            genus: c.genus,
            points: c.points.clone(),
            principality: Some(principality),
        },
        lattice_rank: fan.rank(),
        divisors: fan.divisors().iter().map(emit_divisor).collect(),
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("documents serialize")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Betti {
    pub degree: usize,
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub dimension: usize,
    pub genus: u32,
    pub support: Vec<String>,
    pub refinement_index: Number,
    pub tail_rays: usize,
    pub fiber_rays: BTreeMap<String, usize>,
    pub orbits: usize,
    pub contraction_free: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTrace {
    pub index: usize,
    pub orbit_dim: usize,
    pub tail_face: ConeDoc,
    pub corank: usize,
    pub relative_spectrum: Vec<i64>,
    pub attractive: Vec<i64>,
    pub multiplicity: BTreeMap<i64, i64>,
    pub closure: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct REntry {
    pub from: usize,
    pub to: usize,
    pub value: BTreeMap<i64, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub orbits: Vec<OrbitTrace>,
    pub r: Vec<REntry>,
    pub log: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub poincare: Vec<i64>,
    pub pretty: String,
    pub betti: Vec<Betti>,
    pub diagnostics: Diagnostics,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Trace>,
}

fn laurent_map(p: &LaurentPolynomial) -> BTreeMap<i64, i64> {
    p.terms().clone()
}

pub fn output_document(fan: &DivisorialFan, report: &PoincareReport, trace: bool) -> OutputDocument {
    let p = &report.poincare;
    let trace = trace.then(|| Trace {
        orbits: report
            .orbits
            .iter()
            .enumerate()
            .map(|(i, o)| OrbitTrace {
                index: i,
                orbit_dim: o.orbit_dim,
                tail_face: emit_cone(&o.tail_face),
                corank: o.corank,
                relative_spectrum: o.relative_spectrum.coeffs().to_vec(),
                attractive: o.attractive.coeffs().to_vec(),
                multiplicity: laurent_map(&o.multiplicity),
                closure: o.closure.coeffs().to_vec(),
            })
            .collect(),
        r: report
            .r_entries
            .iter()
            .map(|(a, b, v)| REntry {
                from: *a,
                to: *b,
                value: laurent_map(v),
            })
            .collect(),
        log: report.trace.clone(),
    });
    OutputDocument {
        poincare: p.coeffs().to_vec(),
        pretty: p.pretty(),
        betti: p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(degree, &dim)| Betti { degree, dim })
            .collect(),
        diagnostics: Diagnostics {
            dimension: fan.rank() + 1,
            genus: fan.curve().genus,
            support: report.support.clone(),
            refinement_index: Number::from_int(&report.refinement_index),
            tail_rays: report.tail_rays,
            fiber_rays: report.fiber_rays.clone(),
            orbits: report.orbits.len(),
            contraction_free: report.base.coeffs().to_vec(),
        },
        trace,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDoc {
    pub index: usize,
    pub orbit_dim: usize,
    pub tail_face: ConeDoc,
    pub coefficient_faces: BTreeMap<String, PolyhedronDoc>,
    pub sources: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsDocument {
    pub orbits: Vec<OrbitDoc>,
    /// Cover relations of the orbit order.
    pub covers: Vec<(usize, usize)>,
}

pub fn orbits_document(hf: &HFPoset) -> OrbitsDocument {
    OrbitsDocument {
        orbits: hf
            .elements()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let d = hf.hyperface_divisor(i);
                OrbitDoc {
                    index: i,
                    orbit_dim: hf.orbit_dim(i),
                    tail_face: emit_cone(&e.tail_face),
                    coefficient_faces: emit_divisor(&d).coefficients,
                    sources: e.sources.clone(),
                }
            })
            .collect(),
        covers: hf.covers(),
    }
}

/// Recovers the polynomial of an output document from its pretty string.
pub fn parse_pretty(s: &str) -> Option<Polynomial> {
    Polynomial::parse(s)
}
