//! Projecting a polyhedral divisor with full-dimensional tail along an interior direction u.
//!
//! The result is a divisorial fan over the same curve on the lattice N' = N / Zu whose variety
//! is the quotient of X(D) minus its fixed point by the one-parameter subgroup of u.

use crate::cone::Cone;
use crate::divisor::{Curve, DivisorialFan, Locus, PolyDivisor, Principality, QDivisor};
use crate::error::{Error, Result};
use crate::lattice::LatticeSplit;
use crate::num::*;
use crate::polyhedron::{HullCell, Polyhedron};
use std::collections::{BTreeMap, BTreeSet};

/// The default direction: the primitive sum of the ray generators of the tail.
pub fn default_direction(d: &PolyDivisor) -> IVec {
    primitive(&d.tail().relative_interior_point())
}

/// Lower-hull data of every special point, in the coordinates of the split.
pub struct Subdivisions {
    pub split: LatticeSplit,
    pub tail_cells: Vec<HullCell>,
    pub cells: BTreeMap<String, Vec<HullCell>>,
}

pub fn subdivisions(d: &PolyDivisor, u: &[Int]) -> Result<Subdivisions> {
    let n = d.rank();
    let tail = d.tail();
    if !tail.is_full_dim() {
        return Err(Error::Precondition("downgrade needs a full-dimensional tail".into()));
    }
    if content(u) != Int::from(1) || !tail.in_relative_interior(&to_q(u)) {
        return Err(Error::Precondition(format!(
            "{:?} is not a primitive interior lattice point of the tail",
            u
        )));
    }
    let split = LatticeSplit::new(&[u.to_vec()], n);
    debug_assert_eq!(split.basis[0], u.to_vec());
    let tail_cells = Polyhedron::from_cone(tail).lower_hull_cells(&split)?;
    let mut cells = BTreeMap::new();
    for (y, p) in d.coefficients() {
        cells.insert(y.clone(), p.lower_hull_cells(&split)?);
    }
    Ok(Subdivisions {
        split,
        tail_cells,
        cells,
    })
}

pub fn downgrade(d: &PolyDivisor, curve: &Curve, u: Option<&[Int]>) -> Result<DivisorialFan> {
    if !d.locus().is_complete() {
        return Err(Error::Precondition(
            "downgrade needs a divisor over the whole curve".into(),
        ));
    }
    if let Some(why) = d.properness(curve)? {
        return Err(Error::Precondition(format!(
            "downgrade needs a proper divisor: {}",
            why
        )));
    }
    let u: IVec = match u {
        Some(u) => u.to_vec(),
        None => default_direction(d),
    };
    let sub = subdivisions(d, &u)?;
    let n1 = d.rank() - 1;

    // special points, padded with fresh generic points so that every chart is affine
    let mut curve = curve.clone();
    let mut special: BTreeSet<String> = d.support();
    let mut fresh = 1;
    while special.len() < 2 {
        let label = loop {
            let l = format!("~g{}", fresh);
            fresh += 1;
            if !curve.has_point(&l) {
                break l;
            }
        };
        curve.add_point(&label);
        special.insert(label);
    }
    let charts = |coeff: &BTreeMap<String, Polyhedron>, tail: &Cone| -> Result<Vec<PolyDivisor>> {
        let mut out = Vec::new();
        for p in &special {
            let ex: BTreeSet<String> = special.iter().filter(|q| *q != p).cloned().collect();
            out.push(PolyDivisor::new(tail.clone(), coeff.clone(), Locus::Affine(ex))?);
        }
        Ok(out)
    };

    let mut divisors = Vec::new();
    for tc in &sub.tail_cells {
        let c = tc.cell.recession_cone();
        if c.dim() != n1 {
            continue;
        }
        let mut coeff = BTreeMap::new();
        let mut offsets = Vec::new();
        for (y, cells) in &sub.cells {
            let hits: Vec<&HullCell> = cells.iter().filter(|h| h.cell.recession_cone() == c).collect();
            if hits.len() != 1 {
                return Err(Error::Consistency(format!(
                    "{} cells at {} with recession cone {:?}",
                    hits.len(),
                    y,
                    c
                )));
            }
            coeff.insert(y.clone(), hits[0].cell.clone());
            offsets.push((y.clone(), hits[0].offset.clone()));
        }
        let sum = QDivisor::new(offsets);
        let complete = sum.degree() == Rat::from_integer(0.into())
            && match curve.is_principal_multiple(&sum) {
                Principality::Yes => true,
                Principality::No => false,
                Principality::Unknown => {
                    return Err(Error::UnknownPrincipality(format!("{:?}", sum)));
                }
            };
        if complete {
            divisors.push(PolyDivisor::new(c.clone(), coeff, Locus::Complete)?);
        } else {
            divisors.extend(charts(&coeff, &c)?);
        }
    }
    for (y, cells) in &sub.cells {
        for h in cells {
            let rc = h.cell.recession_cone();
            if rc.dim() == n1 {
                continue;
            }
            let coeff: BTreeMap<String, Polyhedron> = [(y.clone(), h.cell.clone())].into();
            let ex: BTreeSet<String> = special.iter().filter(|q| *q != y).cloned().collect();
            divisors.push(PolyDivisor::new(rc, coeff, Locus::Affine(ex))?);
        }
    }
    DivisorialFan::new(curve, n1, divisors)
}
