//! Curves, Q-divisors, polyhedral divisors and divisorial fans.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::fan::{cayley_cone, downward_cone, Fan};
use crate::lattice::{column_echelon, rank_q, saturated_basis};
use crate::num::*;
use crate::polyhedron::Polyhedron;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Label used for a point of the curve outside every listed point.
pub const GENERIC_POINT: &str = "~generic";

/// How principal divisors on the curve are recognised.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Policy {
    /// The projective line: a divisor is principal iff it is integral of degree 0.
    Genus0,
    /// Points in general position: only the zero divisor is principal.
    Generic,
    /// Known principal divisors; anything outside their span is undecided.
    Table(Vec<QDivisor>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Principality {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Curve {
    pub genus: u32,
    pub points: Vec<String>,
    pub policy: Policy,
}

impl Curve {
    pub fn p1(points: &[&str]) -> Curve {
        Curve {
            genus: 0,
            points: points.iter().map(|s| s.to_string()).collect(),
            policy: Policy::Genus0,
        }
    }

    pub fn generic(genus: u32, points: &[&str]) -> Curve {
        let policy = if genus == 0 { Policy::Genus0 } else { Policy::Generic };
        Curve {
            genus,
            points: points.iter().map(|s| s.to_string()).collect(),
            policy,
        }
    }

    pub fn has_point(&self, y: &str) -> bool {
        self.points.iter().any(|p| p == y)
    }

    /// Adds a point label if it is not there yet.
    pub fn add_point(&mut self, y: &str) {
        if !self.has_point(y) {
            self.points.push(y.to_string());
        }
    }

    pub fn is_principal(&self, d: &QDivisor) -> Principality {
        if d.is_zero() {
            return Principality::Yes;
        }
        if !d.is_integral() || !d.degree().is_zero() {
            return Principality::No;
        }
        match &self.policy {
            Policy::Genus0 => Principality::Yes,
            Policy::Generic => Principality::No,
            Policy::Table(gens) => {
                if in_integer_span(gens, d) {
                    Principality::Yes
                } else {
                    Principality::Unknown
                }
            }
        }
    }

    /// Whether some positive multiple of d is principal.
    pub fn is_principal_multiple(&self, d: &QDivisor) -> Principality {
        if d.is_zero() {
            return Principality::Yes;
        }
        if !d.degree().is_zero() {
            return Principality::No;
        }
        match &self.policy {
            Policy::Genus0 => Principality::Yes,
            Policy::Generic => Principality::No,
            Policy::Table(gens) => {
                let labels = span_labels(gens, d);
                let rows: Vec<QVec> = gens.iter().map(|g| g.vector(&labels)).collect();
                let mut with = rows.clone();
                with.push(d.vector(&labels));
                if rank_q(&rows, labels.len()) == rank_q(&with, labels.len()) {
                    Principality::Yes
                } else {
                    Principality::Unknown
                }
            }
        }
    }
}

fn span_labels(gens: &[QDivisor], d: &QDivisor) -> Vec<String> {
    let mut s: BTreeSet<String> = d.0.keys().cloned().collect();
    for g in gens {
        s.extend(g.0.keys().cloned());
    }
    s.into_iter().collect()
}

/// Integer solvability of Σ x_i g_i = d.
fn in_integer_span(gens: &[QDivisor], d: &QDivisor) -> bool {
    let labels = span_labels(gens, d);
    let to_int = |q: &QDivisor| -> Option<IVec> {
        let v = q.vector(&labels);
        if is_integral(&v) {
            Some(v.iter().map(|x| x.to_integer()).collect())
        } else {
            None
        }
    };
    let Some(b) = to_int(d) else { return false };
    let cols: Vec<IVec> = gens.iter().filter_map(to_int).collect();
    let k = cols.len();
    if k == 0 {
        return is_zero_i(&b);
    }
    // rows indexed by labels, columns by generators
    let a: Vec<IVec> = (0..labels.len())
        .map(|i| cols.iter().map(|c| c[i].clone()).collect())
        .collect();
    let (rank, u) = column_echelon(&a, k);
    let h: Vec<IVec> = a
        .iter()
        .map(|row| (0..k).map(|j| (0..k).map(|l| &row[l] * &u[l][j]).sum()).collect())
        .collect();
    let mut res = b;
    let mut col = 0;
    for i in 0..labels.len() {
        if col == rank {
            break;
        }
        if h[i][col].is_zero() {
            continue;
        }
        let (q, r) = res[i].div_rem(&h[i][col]);
        if !r.is_zero() {
            return false;
        }
        for (ri, hi) in res.iter_mut().zip(&h) {
            *ri -= &q * &hi[col];
        }
        col += 1;
    }
    is_zero_i(&res)
}

/// A Q-divisor with finite support; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct QDivisor(pub BTreeMap<String, Rat>);

impl QDivisor {
    pub fn new(entries: impl IntoIterator<Item = (String, Rat)>) -> Self {
        let mut m = BTreeMap::new();
        for (k, v) in entries {
            *m.entry(k).or_insert_with(Rat::zero) += v;
        }
        m.retain(|_, v: &mut Rat| !v.is_zero());
        QDivisor(m)
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    pub fn degree(&self) -> Rat {
        self.0.values().fold(Rat::zero(), |a, b| a + b)
    }
    pub fn is_integral(&self) -> bool {
        self.0.values().all(|v| v.is_integer())
    }
    pub fn coeff(&self, y: &str) -> Rat {
        self.0.get(y).cloned().unwrap_or_else(Rat::zero)
    }
    pub fn scale(&self, k: &Rat) -> Self {
        QDivisor::new(self.0.iter().map(|(y, v)| (y.clone(), v * k)))
    }
    fn vector(&self, labels: &[String]) -> QVec {
        labels.iter().map(|l| self.coeff(l)).collect()
    }
}

/// Where a polyhedral divisor lives: the whole curve or the complement of finitely many points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Locus {
    Complete,
    Affine(BTreeSet<String>),
}

impl Locus {
    pub fn contains(&self, y: &str) -> bool {
        match self {
            Locus::Complete => true,
            Locus::Affine(ex) => !ex.contains(y),
        }
    }
    pub fn is_complete(&self) -> bool {
        matches!(self, Locus::Complete)
    }
}

/// Σ D_y·[y] over its locus. Coefficients equal to the tail are not stored, and neither are
/// coefficients at excluded points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyDivisor {
    tail: Cone,
    coeffs: BTreeMap<String, Polyhedron>,
    locus: Locus,
}

impl fmt::Debug for PolyDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyDivisor {{ tail: {:?}, ", self.tail)?;
        for (y, p) in &self.coeffs {
            write!(f, "{}: {:?}, ", y, p)?;
        }
        write!(f, "locus: {:?} }}", self.locus)
    }
}

impl PolyDivisor {
    pub fn new(tail: Cone, coeffs: BTreeMap<String, Polyhedron>, locus: Locus) -> Result<PolyDivisor> {
        if !tail.is_strictly_convex() {
            return Err(Error::Validation(format!("tail {:?} is not strictly convex", tail)));
        }
        let trivial = Polyhedron::from_cone(&tail);
        let mut kept = BTreeMap::new();
        for (y, p) in coeffs {
            if p.ambient() != tail.ambient() {
                return Err(Error::Validation(format!(
                    "coefficient at {} has the wrong dimension",
                    y
                )));
            }
            if p.recession_cone() != tail {
                return Err(Error::Validation(format!(
                    "coefficient at {} has recession cone {:?}, not the tail {:?}",
                    y,
                    p.recession_cone(),
                    tail
                )));
            }
            if locus.contains(&y) && p != trivial {
                kept.insert(y, p);
            }
        }
        Ok(PolyDivisor {
            tail,
            coeffs: kept,
            locus,
        })
    }

    /// The divisor with every coefficient equal to the tail.
    pub fn trivial(tail: Cone, locus: Locus) -> PolyDivisor {
        PolyDivisor {
            tail,
            coeffs: BTreeMap::new(),
            locus,
        }
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }
    pub fn locus(&self) -> &Locus {
        &self.locus
    }
    pub fn rank(&self) -> usize {
        self.tail.ambient()
    }
    /// The nontrivial coefficients.
    pub fn coefficients(&self) -> &BTreeMap<String, Polyhedron> {
        &self.coeffs
    }

    /// D_y, or None when y is outside the locus.
    pub fn coefficient(&self, y: &str) -> Option<Polyhedron> {
        if !self.locus.contains(y) {
            return None;
        }
        Some(
            self.coeffs
                .get(y)
                .cloned()
                .unwrap_or_else(|| Polyhedron::from_cone(&self.tail)),
        )
    }

    pub fn support(&self) -> BTreeSet<String> {
        self.coeffs.keys().cloned().collect()
    }

    /// Minkowski sum of all coefficients; None when the locus is affine.
    pub fn degree(&self) -> Option<Polyhedron> {
        if !self.locus.is_complete() {
            return None;
        }
        let mut d = Polyhedron::from_cone(&self.tail);
        for p in self.coeffs.values() {
            d = d.minkowski_sum(p);
        }
        Some(d)
    }

    pub fn evaluate(&self, m: &[Rat]) -> Result<QDivisor> {
        if !self.tail.dual().contains_q(m) {
            return Err(Error::Precondition("evaluation outside the dual of the tail".into()));
        }
        Ok(QDivisor::new(self.coeffs.iter().map(|(y, p)| {
            (y.clone(), p.eval_support(m).expect("bounded on the dual of the tail"))
        })))
    }

    /// None if proper, otherwise the reason.
    pub fn properness(&self, curve: &Curve) -> Result<Option<String>> {
        let Some(deg) = self.degree() else { return Ok(None) };
        let n = self.rank();
        let t = &self.tail;
        let deg_in_tail = deg.vertices().iter().all(|v| t.contains_q(v));
        if !deg_in_tail {
            return Ok(Some(format!("degree {:?} is not contained in the tail", deg)));
        }
        if deg.contains(&vec![Rat::zero(); n]) {
            return Ok(Some(format!("degree {:?} is the whole tail", deg)));
        }
        // the smallest face of the tail meeting the degree
        let tau0 = t
            .faces()
            .into_iter()
            .filter(|f| deg.intersect(&Polyhedron::from_cone(f)).is_some())
            .min_by_key(|f| f.dim())
            .expect("the tail meets the degree");
        let crit = t.dual().face_orthogonal(&to_q(&tau0.relative_interior_point()));
        let m = to_q(&crit.relative_interior_point());
        let points: BTreeMap<&String, QVec> = self
            .coeffs
            .iter()
            .map(|(y, p)| (y, p.face_minimizing(&m).vertices()[0].clone()))
            .collect();
        for b in saturated_basis(&crit.generators(), n) {
            let d = QDivisor::new(points.iter().map(|(y, p)| ((*y).clone(), dot_iq(&b, p))));
            match curve.is_principal_multiple(&d) {
                Principality::Yes => {}
                Principality::No => {
                    return Ok(Some(format!("{:?} has no principal multiple", d)));
                }
                Principality::Unknown => {
                    return Err(Error::UnknownPrincipality(format!("{:?} in {:?}", d, self)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_proper(&self, curve: &Curve) -> Result<bool> {
        Ok(self.properness(curve)?.is_none())
    }

    /// Pointwise intersection over the common locus; points with empty intersection leave it.
    pub fn intersect(&self, o: &PolyDivisor) -> PolyDivisor {
        let tail = self.tail.intersect(&o.tail);
        let mut excluded: BTreeSet<String> = BTreeSet::new();
        for l in [&self.locus, &o.locus] {
            if let Locus::Affine(ex) = l {
                excluded.extend(ex.iter().cloned());
            }
        }
        let mut coeffs = BTreeMap::new();
        let labels: BTreeSet<&String> = self.coeffs.keys().chain(o.coeffs.keys()).collect();
        for y in labels {
            if excluded.contains(y) {
                continue;
            }
            let a = self.coefficient(y).expect("inside locus");
            let b = o.coefficient(y).expect("inside locus");
            match a.intersect(&b) {
                Some(p) => {
                    coeffs.insert(y.clone(), p);
                }
                None => {
                    excluded.insert(y.clone());
                }
            }
        }
        let locus = if excluded.is_empty() && self.locus.is_complete() && o.locus.is_complete() {
            Locus::Complete
        } else {
            Locus::Affine(excluded)
        };
        let trivial = Polyhedron::from_cone(&tail);
        coeffs.retain(|y, p| locus.contains(y) && *p != trivial);
        PolyDivisor { tail, coeffs, locus }
    }

    /// D' ≤ D: smaller locus and every coefficient a face.
    pub fn is_face_of(&self, big: &PolyDivisor) -> bool {
        if !self.tail.is_face_of(&big.tail) {
            return false;
        }
        let labels: BTreeSet<&String> = self.coeffs.keys().chain(big.coeffs.keys()).collect();
        for y in labels {
            if let Some(a) = self.coefficient(y) {
                match big.coefficient(y) {
                    Some(b) if a.is_face_of(&b) => {}
                    _ => return false,
                }
            }
        }
        match (&self.locus, &big.locus) {
            (_, Locus::Complete) => true,
            (Locus::Complete, Locus::Affine(_)) => false,
            (Locus::Affine(a), Locus::Affine(b)) => b.is_subset(a),
        }
    }

    /// Image under the linear map with the given images of the basis vectors.
    pub fn map_lattice(&self, rows: &[IVec]) -> PolyDivisor {
        let n = self.rank();
        PolyDivisor {
            tail: self.tail.map(rows, n),
            coeffs: self.coeffs.iter().map(|(y, p)| (y.clone(), p.map(rows, n))).collect(),
            locus: self.locus.clone(),
        }
    }

    /// All coefficients multiplied by k (the tail is unchanged).
    pub fn scale(&self, k: &Rat) -> PolyDivisor {
        PolyDivisor {
            tail: self.tail.clone(),
            coeffs: self.coeffs.iter().map(|(y, p)| (y.clone(), p.scale(k))).collect(),
            locus: self.locus.clone(),
        }
    }

    pub fn relabel(&self, f: &dyn Fn(&str) -> String) -> PolyDivisor {
        let locus = match &self.locus {
            Locus::Complete => Locus::Complete,
            Locus::Affine(ex) => Locus::Affine(ex.iter().map(|y| f(y)).collect()),
        };
        PolyDivisor {
            tail: self.tail.clone(),
            coeffs: self.coeffs.iter().map(|(y, p)| (f(y), p.clone())).collect(),
            locus,
        }
    }

    /// Lowest common denominator of all coefficient vertices.
    pub fn denominator(&self) -> Int {
        self.coeffs.values().fold(Int::from(1), |l, p| l.lcm(&p.denominator()))
    }
}

/// Result of checking the divisorial fan axioms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Intersections that had to be added to make the family closed.
    pub synthesized: Vec<PolyDivisor>,
    pub problems: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.problems.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorialFan {
    curve: Curve,
    rank: usize,
    divisors: Vec<PolyDivisor>,
}

/// Closes the family under intersections, returning the closure and what was added.
pub fn close_under_intersections(divisors: &[PolyDivisor]) -> (Vec<PolyDivisor>, Vec<PolyDivisor>) {
    let mut all: BTreeSet<PolyDivisor> = divisors.iter().cloned().collect();
    let mut list: Vec<PolyDivisor> = all.iter().cloned().collect();
    let mut added = Vec::new();
    // every pair (i, j) with j < done has been intersected
    let mut done = 0;
    while done < list.len() {
        let end = list.len();
        for j in done..end {
            for i in 0..j {
                let x = list[i].intersect(&list[j]);
                if all.insert(x.clone()) {
                    added.push(x.clone());
                    list.push(x);
                }
            }
        }
        done = end;
    }
    (all.into_iter().collect(), added)
}

/// Checks axioms of a divisorial fan on an intersection-closed family.
pub fn check_axioms(curve: &Curve, rank: usize, divisors: &[PolyDivisor]) -> Vec<String> {
    let mut problems = Vec::new();
    if divisors.is_empty() {
        problems.push("no polyhedral divisors".into());
        return problems;
    }
    for (i, d) in divisors.iter().enumerate() {
        if d.rank() != rank {
            problems.push(format!("divisor {} has rank {} instead of {}", i, d.rank(), rank));
            return problems;
        }
        for y in d.coeffs.keys() {
            if !curve.has_point(y) {
                problems.push(format!("divisor {} uses the unknown point {}", i, y));
            }
        }
        if let Locus::Affine(ex) = &d.locus {
            if ex.is_empty() {
                problems.push(format!("divisor {} has an affine locus excluding no point", i));
            }
            for y in ex {
                if !curve.has_point(y) {
                    problems.push(format!("divisor {} excludes the unknown point {}", i, y));
                }
            }
        }
        match d.properness(curve) {
            Ok(None) => {}
            Ok(Some(why)) => problems.push(format!("divisor {} is not proper: {}", i, why)),
            Err(e) => problems.push(format!("divisor {}: {}", i, e)),
        }
    }
    if !problems.is_empty() {
        return problems;
    }
    let mut points: Vec<String> = curve.points.clone();
    points.push(GENERIC_POINT.to_string());
    let degree_relation = |i: usize, j: usize, x: &PolyDivisor, problems: &mut Vec<String>| {
        let lhs = x.degree();
        let rhs = divisors[j]
            .degree()
            .and_then(|d| d.intersect(&Polyhedron::from_cone(x.tail())));
        if lhs != rhs {
            problems.push(format!(
                "degree relation fails for divisors {} and {}: {:?} vs {:?}",
                i, j, lhs, rhs
            ));
        }
    };
    for i in 0..divisors.len() {
        degree_relation(i, i, &divisors[i], &mut problems);
        for j in i + 1..divisors.len() {
            let (a, b) = (&divisors[i], &divisors[j]);
            // face relations
            for y in &points {
                let (Some(p), Some(q)) = (a.coefficient(y), b.coefficient(y)) else {
                    continue;
                };
                if let Some(x) = p.intersect(&q) {
                    if !x.is_face_of(&p) || !x.is_face_of(&q) {
                        problems.push(format!(
                            "coefficients of divisors {} and {} at {} meet in {:?}, not a common face",
                            i, j, y, x
                        ));
                    }
                }
            }
            let x = a.intersect(b);
            degree_relation(i, j, &x, &mut problems);
            degree_relation(j, i, &x, &mut problems);
        }
    }
    for y in &points {
        if !divisors.iter().any(|d| d.locus.contains(y)) {
            problems.push(format!("no divisor is defined at {}", y));
        }
    }
    problems
}

impl DivisorialFan {
    /// Closes under intersections and validates.
    pub fn new(curve: Curve, rank: usize, divisors: Vec<PolyDivisor>) -> Result<DivisorialFan> {
        let (f, report) = DivisorialFan::with_report(curve, rank, divisors);
        if report.is_valid() {
            Ok(f)
        } else {
            Err(Error::Validation(report.problems.join("; ")))
        }
    }

    /// Closes under intersections and reports every axiom violation.
    pub fn with_report(curve: Curve, rank: usize, divisors: Vec<PolyDivisor>) -> (DivisorialFan, ValidationReport) {
        let (closed, synthesized) = close_under_intersections(&divisors);
        let problems = check_axioms(&curve, rank, &closed);
        (
            DivisorialFan {
                curve,
                rank,
                divisors: closed,
            },
            ValidationReport { synthesized, problems },
        )
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn divisors(&self) -> &[PolyDivisor] {
        &self.divisors
    }

    /// The same fan over a curve with a different principality policy.
    pub fn with_policy(&self, policy: Policy) -> DivisorialFan {
        let mut c = self.curve.clone();
        c.policy = policy;
        DivisorialFan {
            curve: c,
            rank: self.rank,
            divisors: self.divisors.clone(),
        }
    }

    /// Points where some divisor defined there has a nontrivial coefficient.
    pub fn support(&self) -> BTreeSet<String> {
        let mut s = BTreeSet::new();
        for d in &self.divisors {
            s.extend(d.coeffs.keys().cloned());
        }
        s
    }

    pub fn tail_fan(&self) -> Result<Fan> {
        let cones: Vec<Cone> = self.divisors.iter().map(|d| d.tail.clone()).collect();
        Fan::new(&cones, self.rank)
    }

    /// Cayley cones at y of the divisors defined at y, together with all downward cones.
    pub fn fiber_fan(&self, y: &str) -> Result<Fan> {
        let mut cones = Vec::new();
        for d in &self.divisors {
            if let Some(p) = d.coefficient(y) {
                cones.push(cayley_cone(&d.tail, &p));
            }
            cones.push(downward_cone(&d.tail));
        }
        Fan::new(&cones, self.rank + 1)
    }

    pub fn is_complete_variety(&self) -> bool {
        self.curve
            .points
            .iter()
            .map(|s| s.as_str())
            .chain([GENERIC_POINT])
            .all(|y| self.fiber_fan(y).map(|f| f.is_complete()).unwrap_or(false))
    }

    /// Unimodular change of lattice coordinates.
    pub fn map_lattice(&self, rows: &[IVec]) -> DivisorialFan {
        DivisorialFan {
            curve: self.curve.clone(),
            rank: self.rank,
            divisors: self.divisors.iter().map(|d| d.map_lattice(rows)).collect(),
        }
    }

    /// Coefficients scaled by k, i.e. the same variety over the lattice dual to kM.
    pub fn scale(&self, k: &Rat) -> DivisorialFan {
        DivisorialFan {
            curve: self.curve.clone(),
            rank: self.rank,
            divisors: self.divisors.iter().map(|d| d.scale(k)).collect(),
        }
    }

    pub fn relabel(&self, f: &dyn Fn(&str) -> String) -> DivisorialFan {
        let mut curve = self.curve.clone();
        curve.points = curve.points.iter().map(|y| f(y)).collect();
        if let Policy::Table(gens) = &mut curve.policy {
            for g in gens.iter_mut() {
                *g = QDivisor::new(g.0.iter().map(|(y, v)| (f(y), v.clone())));
            }
        }
        let mut divisors: Vec<PolyDivisor> = self.divisors.iter().map(|d| d.relabel(f)).collect();
        divisors.sort();
        DivisorialFan {
            curve,
            rank: self.rank,
            divisors,
        }
    }

    pub fn denominator(&self) -> Int {
        self.divisors.iter().fold(Int::from(1), |l, d| l.lcm(&d.denominator()))
    }

    /// Divisors defined on the whole curve.
    pub fn complete_divisors(&self) -> impl Iterator<Item = &PolyDivisor> {
        self.divisors.iter().filter(|d| d.locus.is_complete())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(g: &[&[i64]]) -> Cone {
        let n = g[0].len();
        Cone::from_generators(&g.iter().map(|v| ivec(v)).collect::<Vec<_>>(), n)
    }

    fn coeffs(v: Vec<(&str, Polyhedron)>) -> BTreeMap<String, Polyhedron> {
        v.into_iter().map(|(k, p)| (k.to_string(), p)).collect()
    }

    /// Tail Q≥0 × 0 with (1, 1/2) + σ at 0 and (0, −1/2) + σ at ∞.
    fn disconnected_example() -> PolyDivisor {
        let s = cone(&[&[1, 0]]);
        PolyDivisor::new(
            s.clone(),
            coeffs(vec![
                ("0", Polyhedron::translate_cone(qvec(&[(1, 1), (1, 2)]), &s)),
                ("inf", Polyhedron::translate_cone(qvec(&[(0, 1), (-1, 2)]), &s)),
            ]),
            Locus::Complete,
        )
        .unwrap()
    }

    #[test]
    fn degree_of_example() {
        let d = disconnected_example();
        let s = cone(&[&[1, 0]]);
        assert_eq!(
            d.degree(),
            Some(Polyhedron::translate_cone(qvec_from_ints(&[1, 0]), &s))
        );
        assert_eq!(
            PolyDivisor::trivial(s.clone(), Locus::Affine(["0".to_string()].into())).degree(),
            None
        );
    }

    #[test]
    fn evaluations() {
        let d = disconnected_example();
        let e = d.evaluate(&qvec_from_ints(&[1, 0])).unwrap();
        assert_eq!(e, QDivisor::new([("0".to_string(), rat(1, 1))]));
        let e = d.evaluate(&qvec_from_ints(&[0, 2])).unwrap();
        assert_eq!(
            e,
            QDivisor::new([("0".to_string(), rat(1, 1)), ("inf".to_string(), rat(-1, 1))])
        );
        assert!(d.evaluate(&qvec_from_ints(&[0, 0])).unwrap().is_zero());
        assert!(d.evaluate(&qvec_from_ints(&[-1, 0])).is_err());
    }

    #[test]
    fn principality_policies() {
        let p1 = Curve::p1(&["0", "inf"]);
        let d = QDivisor::new([("0".to_string(), rat(1, 1)), ("inf".to_string(), rat(-1, 1))]);
        assert_eq!(p1.is_principal(&d), Principality::Yes);
        assert_eq!(p1.is_principal(&QDivisor::default()), Principality::Yes);
        let e = Curve::generic(1, &["p", "q"]);
        let pq = QDivisor::new([("p".to_string(), rat(1, 1)), ("q".to_string(), rat(-1, 1))]);
        assert_eq!(e.is_principal(&pq), Principality::No);
        let t = Curve {
            genus: 1,
            points: vec!["p".into(), "q".into()],
            policy: Policy::Table(vec![pq.scale(&rat(3, 1))]),
        };
        assert_eq!(t.is_principal(&pq.scale(&rat(6, 1))), Principality::Yes);
        assert_eq!(t.is_principal(&pq), Principality::Unknown);
        assert_eq!(t.is_principal_multiple(&pq), Principality::Yes);
    }

    #[test]
    fn properness() {
        let d = disconnected_example();
        assert!(d.is_proper(&Curve::p1(&["0", "inf"])).unwrap());
        let s = cone(&[&[1, 0]]);
        let triv = PolyDivisor::trivial(s, Locus::Complete);
        assert!(!triv.is_proper(&Curve::p1(&[])).unwrap());
        // generic points of an elliptic curve: the translation part is not principal
        assert!(!d.is_proper(&Curve::generic(1, &["0", "inf"])).unwrap());
    }

    #[test]
    fn overlapping_coefficients_are_reported() {
        let s = cone(&[&[1, 0], &[0, 1]]);
        let a = PolyDivisor::new(
            s.clone(),
            coeffs(vec![("0", Polyhedron::translate_cone(qvec_from_ints(&[1, 1]), &s))]),
            Locus::Affine(["inf".to_string()].into()),
        )
        .unwrap();
        let b = PolyDivisor::new(
            s.clone(),
            coeffs(vec![("0", Polyhedron::translate_cone(qvec_from_ints(&[2, 2]), &s))]),
            Locus::Affine(["inf".to_string()].into()),
        )
        .unwrap();
        let (_, report) = DivisorialFan::with_report(Curve::p1(&["0", "inf"]), 2, vec![a, b]);
        assert!(report.problems.iter().any(|p| p.contains("not a common face")));
    }
}
