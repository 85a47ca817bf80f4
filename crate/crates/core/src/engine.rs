//! Poincaré polynomials of intersection cohomology.
//!
//! The top level starts from the contraction-free model and subtracts the contribution of every
//! orbit of the exceptional image. Those contributions come from local data of the orbits, which
//! recurse into lower-rank divisorial fans through the downgrade construction.

use crate::cone::Cone;
use crate::divisor::{Curve, DivisorialFan, Policy, PolyDivisor, Principality, QDivisor};
use crate::downgrade::downgrade;
use crate::error::{Error, Result};
use crate::fan::{cayley_cone, star_quotient, Fan};
use crate::hf::HFPoset;
use crate::lattice::LatticeSplit;
use crate::num::*;
use crate::poly::{LaurentPolynomial, Polynomial};
use crate::toric::{g_cone, h_fan};
use once_cell::sync::Lazy;
use parking_lot::Mutex;
use std::collections::{BTreeMap, HashMap};

/// A function on the comparable pairs of a finite poset.
#[derive(Clone, Debug)]
pub struct IncidenceFunction {
    leq: Vec<Vec<bool>>,
    values: BTreeMap<(usize, usize), LaurentPolynomial>,
}

impl IncidenceFunction {
    pub fn zero(leq: Vec<Vec<bool>>) -> Self {
        IncidenceFunction {
            leq,
            values: BTreeMap::new(),
        }
    }

    /// The Kronecker delta.
    pub fn identity(leq: Vec<Vec<bool>>) -> Self {
        let mut f = IncidenceFunction::zero(leq);
        for a in 0..f.size() {
            f.set(a, a, LaurentPolynomial::one());
        }
        f
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn get(&self, a: usize, b: usize) -> LaurentPolynomial {
        self.values.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, a: usize, b: usize, v: LaurentPolynomial) {
        assert!(self.leq[a][b], "incidence functions live on comparable pairs");
        if v.is_zero() {
            self.values.remove(&(a, b));
        } else {
            self.values.insert((a, b), v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &LaurentPolynomial)> {
        self.values.iter()
    }

    /// A linear extension of the order.
    fn linear_order(&self) -> Vec<usize> {
        let k = self.size();
        let mut idx: Vec<usize> = (0..k).collect();
        idx.sort_by_key(|&b| (0..k).filter(|&a| self.leq[a][b]).count());
        idx
    }

    /// (α ⋆ β)(a, b) = Σ_{a ⪯ c ⪯ b} α(a, c)·β(c, b).
    pub fn convolve(&self, o: &IncidenceFunction) -> IncidenceFunction {
        let k = self.size();
        let mut out = IncidenceFunction::zero(self.leq.clone());
        for a in 0..k {
            for b in 0..k {
                if !self.leq[a][b] {
                    continue;
                }
                let mut s = LaurentPolynomial::zero();
                for c in 0..k {
                    if self.leq[a][c] && self.leq[c][b] {
                        s = &s + &(&self.get(a, c) * &o.get(c, b));
                    }
                }
                out.set(a, b, s);
            }
        }
        out
    }

    pub fn invert(&self) -> Result<IncidenceFunction> {
        let k = self.size();
        let order = self.linear_order();
        let mut inv = IncidenceFunction::zero(self.leq.clone());
        let mut diag_inv = Vec::with_capacity(k);
        for a in 0..k {
            let d = self
                .get(a, a)
                .inverse_unit()
                .ok_or_else(|| Error::Consistency(format!("diagonal value {:?} is not a unit", self.get(a, a))))?;
            diag_inv.push(d);
        }
        for a in 0..k {
            inv.set(a, a, diag_inv[a].clone());
            for &b in &order {
                if b == a || !self.leq[a][b] {
                    continue;
                }
                // (β ⋆ α)(a, b) = 0
                let mut s = LaurentPolynomial::zero();
                for &c in &order {
                    if c != b && self.leq[a][c] && self.leq[c][b] {
                        s = &s + &(&inv.get(a, c) * &self.get(c, b));
                    }
                }
                inv.set(a, b, (&s * &diag_inv[b]).scale(-1));
            }
        }
        Ok(inv)
    }
}

/// R(O₁, O₂) = t^{−dim O₁}·g(τ₂/τ₁).
pub fn r_function(hf: &HFPoset) -> Result<IncidenceFunction> {
    let k = hf.len();
    let leq: Vec<Vec<bool>> = (0..k).map(|a| (0..k).map(|b| hf.leq(a, b)).collect()).collect();
    let mut r = IncidenceFunction::zero(leq);
    for a in 0..k {
        for b in 0..k {
            if !hf.leq(a, b) {
                continue;
            }
            let q = star_quotient(&hf.elements()[b].tail_face, &hf.elements()[a].tail_face)?;
            let g = g_cone(&q)?.to_laurent().shift(-(hf.orbit_dim(a) as i64));
            r.set(a, b, g);
        }
    }
    Ok(r)
}

fn genus_factor(r: usize, genus: u32) -> Polynomial {
    // (1 − r)t² + 2ρt + 1 − r
    let c = 1 - r as i64;
    Polynomial::new(vec![c, 2 * genus as i64, c])
}

fn curve_poincare(genus: u32) -> Polynomial {
    Polynomial::new(vec![1, 2 * genus as i64, 1])
}

/// Poincaré polynomial of the contraction-free model of a complete variety.
pub fn poincare_contraction_free(fan: &DivisorialFan) -> Result<Polynomial> {
    let supp = fan.support();
    let tail = fan.tail_fan()?;
    let mut p = &genus_factor(supp.len(), fan.curve().genus) * &h_fan(&tail)?;
    for y in &supp {
        p = &p + &h_fan(&fan.fiber_fan(y)?)?;
    }
    Ok(p)
}

fn check_affine_input(d: &PolyDivisor, curve: &Curve) -> Result<()> {
    if !d.locus().is_complete() {
        return Err(Error::Precondition(
            "divisor must be defined over the whole curve".into(),
        ));
    }
    if !d.tail().is_full_dim() {
        return Err(Error::Precondition("tail must be full-dimensional".into()));
    }
    if let Some(why) = d.properness(curve)? {
        return Err(Error::Precondition(format!("divisor is not proper: {}", why)));
    }
    Ok(())
}

/// Poincaré polynomial of the relative spectrum of a proper divisor with full-dimensional tail.
pub fn poincare_relative_spectrum(d: &PolyDivisor, curve: &Curve) -> Result<Polynomial> {
    check_affine_input(d, curve)?;
    let supp = d.coefficients();
    let base = Polynomial::new(vec![1 - supp.len() as i64, 2 * curve.genus as i64, 1]);
    let mut p = &base * &g_cone(d.tail())?;
    for c in supp.values() {
        p = &p + &g_cone(&cayley_cone(d.tail(), c))?;
    }
    Ok(p)
}

static ATTRACTIVE: Lazy<Mutex<HashMap<(PolyDivisor, Curve), Polynomial>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Poincaré polynomial of X(D) for a proper divisor with full-dimensional tail: the truncation
/// of (1 − t²)·P of the downgraded fan.
pub fn poincare_attractive(d: &PolyDivisor, curve: &Curve) -> Result<Polynomial> {
    let key = (d.clone(), curve.clone());
    if let Some(p) = ATTRACTIVE.lock().get(&key) {
        return Ok(p.clone());
    }
    let p = poincare_attractive_along(d, curve, None)?;
    ATTRACTIVE.lock().insert(key, p.clone());
    Ok(p)
}

/// As `poincare_attractive`, with an explicit downgrade direction.
pub fn poincare_attractive_along(d: &PolyDivisor, curve: &Curve, u: Option<&[Int]>) -> Result<Polynomial> {
    check_affine_input(d, curve)?;
    let n = d.rank();
    if n == 0 {
        return Err(Error::Precondition("rank 0 has no attractive fixed point".into()));
    }
    let f = downgrade(d, curve, u)?;
    let p = poincare(&f)?;
    Ok((&Polynomial::new(vec![1, 0, -1]) * &p).truncate(n))
}

/// Splits off the torus factor of a complete divisor whose tail is not full-dimensional.
///
/// Returns the divisor on N₀ = span(tail) ∩ N and the rank of the complement.
pub fn pointed_reduction(d: &PolyDivisor, curve: &Curve) -> Result<(PolyDivisor, usize)> {
    if !d.locus().is_complete() {
        return Err(Error::Precondition("pointed reduction needs a complete locus".into()));
    }
    let n = d.rank();
    let tau = d.tail();
    let k = tau.dim();
    if k == n {
        return Ok((d.clone(), 0));
    }
    let split = LatticeSplit::new(&tau.generators(), n);
    let tail0: Cone = tau.map_with(|v| split.sub_i(v), k);
    let mut coeffs = BTreeMap::new();
    let mut shifts: BTreeMap<String, QVec> = BTreeMap::new();
    for (y, p) in d.coefficients() {
        let cs: Vec<QVec> = p.vertices().iter().map(|v| split.coords_q(v)).collect();
        let v1 = cs[0][k..].to_vec();
        if cs.iter().any(|c| c[k..] != v1[..]) {
            return Err(Error::NotDecomposable(format!(
                "coefficient at {} is not parallel to the tail",
                y
            )));
        }
        coeffs.insert(y.clone(), p.project(&split, 0, k));
        shifts.insert(y.clone(), v1);
    }
    for j in 0..n - k {
        let div = QDivisor::new(shifts.iter().map(|(y, v)| (y.clone(), v[j].clone())));
        match curve.is_principal(&div) {
            Principality::Yes => {}
            Principality::No => {
                return Err(Error::NotDecomposable(format!("{:?} is not principal", div)));
            }
            Principality::Unknown => return Err(Error::UnknownPrincipality(format!("{:?}", div))),
        }
    }
    Ok((PolyDivisor::new(tail0, coeffs, crate::divisor::Locus::Complete)?, n - k))
}

/// Refines the lattice so that every hyperface divisor decomposes. Returns the index k.
pub fn refine_lattice(fan: &DivisorialFan) -> Result<(DivisorialFan, Int)> {
    let k = match fan.curve().policy {
        Policy::Genus0 => fan.denominator(),
        _ => Int::from(1),
    };
    let refined = fan.scale(&rat_int(&k));
    let hf = HFPoset::new(&refined);
    for i in 0..hf.len() {
        pointed_reduction(&hf.hyperface_divisor(i), refined.curve())?;
    }
    Ok((refined, k))
}

/// The same refinement for a single divisor.
pub fn refine_divisor(d: &PolyDivisor, curve: &Curve) -> (PolyDivisor, Int) {
    let k = match curve.policy {
        Policy::Genus0 => d.denominator(),
        _ => Int::from(1),
    };
    (d.scale(&rat_int(&k)), k)
}

/// P_X = (1 + t)^s·P of the pointed divisor, for a decomposable complete divisor.
pub fn poincare_torus_product(d: &PolyDivisor, curve: &Curve) -> Result<Polynomial> {
    let (r, _) = refine_divisor(d, curve);
    let (pd, s) = pointed_reduction(&r, curve)?;
    Ok(&Polynomial::new(vec![1, 1]).pow(s as u32) * &poincare_attractive(&pd, curve)?)
}

/// h of the star fan of the orbit, i.e. the Poincaré polynomial of its closure.
pub fn orbit_closure_poincare(hf: &HFPoset, a: usize) -> Result<Polynomial> {
    let tau = &hf.elements()[a].tail_face;
    let n = hf.rank();
    let split = LatticeSplit::new(&tau.generators(), n);
    let target = n - split.k;
    let cones: Vec<Cone> = (0..hf.len())
        .filter(|&b| hf.leq(a, b))
        .map(|b| hf.elements()[b].tail_face.map_with(|v| split.quot_i(v), target))
        .collect();
    let star = Fan::new(&cones, target)?;
    if !star.is_complete() {
        return Err(Error::Consistency(format!("star fan of orbit {} is not complete", a)));
    }
    h_fan(&star)
}

/// Local data and multiplicity of one orbit of the exceptional image.
#[derive(Clone, Debug)]
pub struct OrbitTerm {
    pub orbit_dim: usize,
    pub tail_face: Cone,
    pub corank: usize,
    pub relative_spectrum: Polynomial,
    pub attractive: Polynomial,
    /// (P̃ − P)·t^{−dim X} of the pointed divisor.
    pub q: LaurentPolynomial,
    pub multiplicity: LaurentPolynomial,
    pub closure: Polynomial,
}

#[derive(Clone, Debug)]
pub struct PoincareReport {
    pub poincare: Polynomial,
    pub base: Polynomial,
    pub refinement_index: Int,
    pub support: Vec<String>,
    pub tail_rays: usize,
    pub fiber_rays: BTreeMap<String, usize>,
    pub orbits: Vec<OrbitTerm>,
    /// Nonzero values of R on comparable pairs.
    pub r_entries: Vec<(usize, usize, LaurentPolynomial)>,
    pub trace: Vec<String>,
}

pub fn poincare(fan: &DivisorialFan) -> Result<Polynomial> {
    Ok(poincare_complete(fan)?.poincare)
}

/// Intersection cohomology Poincaré polynomial of a complete variety.
pub fn poincare_complete(fan: &DivisorialFan) -> Result<PoincareReport> {
    let n = fan.rank();
    let genus = fan.curve().genus;
    let mut trace = Vec::new();
    if n == 0 {
        return Ok(PoincareReport {
            poincare: curve_poincare(genus),
            base: curve_poincare(genus),
            refinement_index: Int::from(1),
            support: vec![],
            tail_rays: 0,
            fiber_rays: BTreeMap::new(),
            orbits: vec![],
            r_entries: vec![],
            trace: vec!["rank 0: the curve itself".into()],
        });
    }
    if !fan.is_complete_variety() {
        return Err(Error::Incomplete("some fiber fan does not cover N_Q × Q".into()));
    }
    let (fan, k) = refine_lattice(fan)?;
    let curve = fan.curve();
    let base = poincare_contraction_free(&fan)?;
    let support: Vec<String> = fan.support().into_iter().collect();
    let tail_rays = fan.tail_fan()?.ray_count();
    let mut fiber_rays = BTreeMap::new();
    for y in &support {
        fiber_rays.insert(y.clone(), fan.fiber_fan(y)?.ray_count());
    }
    trace.push(format!(
        "rank {}: refinement index {}, contraction-free part {}",
        n, k, base
    ));
    let hf = HFPoset::new(&fan);
    let r = r_function(&hf)?;
    let rinv = r.invert()?;
    let mut qs = Vec::with_capacity(hf.len());
    let mut terms = Vec::with_capacity(hf.len());
    for a in 0..hf.len() {
        let d = hf.hyperface_divisor(a);
        let (pd, s) = pointed_reduction(&d, curve)?;
        let rel = poincare_relative_spectrum(&pd, curve)?;
        let att = poincare_attractive(&pd, curve)?;
        let q = (&rel.to_laurent() - &att.to_laurent()).shift(-(n as i64 + 1));
        trace.push(format!(
            "orbit {} (dim {}, tail face {:?}): relative spectrum {}, affine {}",
            a,
            hf.orbit_dim(a),
            hf.elements()[a].tail_face,
            rel,
            att
        ));
        qs.push(q.clone());
        terms.push(OrbitTerm {
            orbit_dim: hf.orbit_dim(a),
            tail_face: hf.elements()[a].tail_face.clone(),
            corank: s,
            relative_spectrum: rel,
            attractive: att,
            q,
            multiplicity: LaurentPolynomial::zero(),
            closure: Polynomial::one(),
        });
    }
    let mut p = base.to_laurent();
    for b in 0..hf.len() {
        let mut s = LaurentPolynomial::zero();
        for a in 0..hf.len() {
            if hf.leq(a, b) {
                s = &s + &(&rinv.get(a, b) * &qs[a]);
            }
        }
        if !s.is_nonnegative() || !s.is_symmetric() {
            return Err(Error::Consistency(format!(
                "multiplicity {:?} of orbit {} is not a nonnegative palindrome",
                s, b
            )));
        }
        let closure = orbit_closure_poincare(&hf, b)?;
        let dim_tau = hf.elements()[b].tail_face.dim() as i64;
        p = &p - &(&s * &closure.to_laurent()).shift(dim_tau + 1);
        trace.push(format!("orbit {}: multiplicity {:?}, closure {}", b, s, closure));
        terms[b].multiplicity = s;
        terms[b].closure = closure;
    }
    // the stalk identity must hold with the computed multiplicities
    for b in 0..hf.len() {
        let mut lhs = LaurentPolynomial::zero();
        for a in 0..hf.len() {
            if hf.leq(a, b) {
                lhs = &lhs + &(&r.get(a, b) * &terms[a].multiplicity);
            }
        }
        if lhs != qs[b] {
            return Err(Error::Consistency(format!("stalk identity fails at orbit {}", b)));
        }
    }
    let poly = p
        .to_polynomial()
        .ok_or_else(|| Error::Consistency(format!("negative powers in {:?}", p)))?;
    let dim = 2 * (n + 1);
    if poly.coeff(0) != 1 || !poly.is_palindromic(dim) || poly.coeffs().iter().any(|&c| c < 0) {
        return Err(Error::Consistency(format!(
            "{} is not a valid Poincaré polynomial in dimension {}",
            poly,
            n + 1
        )));
    }
    let r_entries = r.entries().map(|(&(a, b), v)| (a, b, v.clone())).collect();
    Ok(PoincareReport {
        poincare: poly,
        base,
        refinement_index: k,
        support,
        tail_rays,
        fiber_rays,
        orbits: terms,
        r_entries,
        trace,
    })
}

/// The closed formula for complete C*-surfaces.
pub fn poincare_surface_closed_form(fan: &DivisorialFan) -> Result<Polynomial> {
    if fan.rank() != 1 {
        return Err(Error::Precondition(format!(
            "surface formula needs rank 1, got {}",
            fan.rank()
        )));
    }
    let supp = fan.support();
    let e = HFPoset::new(fan).len() as i64;
    let mut p = &genus_factor(supp.len(), fan.curve().genus) * &Polynomial::new(vec![1, 0, 1]);
    p = &p - &Polynomial::monomial(e, 2);
    for y in &supp {
        let delta = fan.fiber_fan(y)?.ray_count() as i64;
        p = &p + &Polynomial::new(vec![1, 0, delta - 2, 0, 1]);
    }
    Ok(p)
}

/// The closed formula for complete threefolds with a 2-torus action.
pub fn poincare_threefold_closed_form(fan: &DivisorialFan) -> Result<Polynomial> {
    if fan.rank() != 2 {
        return Err(Error::Precondition(format!(
            "threefold formula needs rank 2, got {}",
            fan.rank()
        )));
    }
    let supp = fan.support();
    let hf = HFPoset::new(fan);
    let o2 = hf.elements().iter().filter(|e| e.tail_face.dim() == 1).count() as i64;
    let ds = fan.tail_fan()?.ray_count() as i64;
    let mut p = &genus_factor(supp.len(), fan.curve().genus) * &Polynomial::new(vec![1, 0, ds - 2, 0, 1]);
    for y in &supp {
        let d = fan.fiber_fan(y)?.ray_count() as i64;
        p = &p + &Polynomial::new(vec![1, 0, d - 3, 0, d - 3, 0, 1]);
    }
    p = &p - &Polynomial::new(vec![0, 0, o2, 0, o2]);
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> Vec<Vec<bool>> {
        (0..k).map(|a| (0..k).map(|b| a <= b).collect()).collect()
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = IncidenceFunction::identity(chain(3));
        let inv = id.invert().unwrap();
        assert_eq!(inv.values, id.values);
    }

    #[test]
    fn two_chain_inverse() {
        let mut a = IncidenceFunction::identity(chain(2));
        let f = LaurentPolynomial::parse("t^2 + 3").unwrap();
        a.set(0, 1, f.clone());
        let inv = a.invert().unwrap();
        assert_eq!(inv.get(0, 1), f.scale(-1));
        assert_eq!(inv.convolve(&a).values, IncidenceFunction::identity(chain(2)).values);
        assert_eq!(a.convolve(&inv).values, IncidenceFunction::identity(chain(2)).values);
    }

    #[test]
    fn unit_diagonal_inverse() {
        let mut a = IncidenceFunction::zero(chain(2));
        a.set(0, 0, LaurentPolynomial::monomial(1, -2));
        a.set(1, 1, LaurentPolynomial::monomial(1, -1));
        let inv = a.invert().unwrap();
        assert_eq!(inv.get(0, 0), LaurentPolynomial::monomial(1, 2));
        assert_eq!(inv.get(1, 1), LaurentPolynomial::monomial(1, 1));
        let mut bad = IncidenceFunction::identity(chain(1));
        bad.set(0, 0, LaurentPolynomial::monomial(2, 0));
        assert!(bad.invert().is_err());
    }
}
