//! Fans of strictly convex cones.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::lattice::LatticeSplit;
use crate::num::*;
use crate::polyhedron::Polyhedron;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient: usize,
    maximal: Vec<Cone>,
    cones: Vec<Cone>,
}

impl Fan {
    /// The fan generated by the given cones. Fails on non-pointed cones or on a pair whose
    /// intersection is not a face of both.
    pub fn new(generators: &[Cone], ambient: usize) -> Result<Fan> {
        let mut gens: Vec<Cone> = generators.to_vec();
        gens.sort();
        gens.dedup();
        if let Some(c) = gens.iter().find(|c| !c.is_strictly_convex()) {
            return Err(Error::InvalidFan(format!("{:?} is not strictly convex", c)));
        }
        // a generator that is a face of another adds nothing to check
        let keep: Vec<bool> = gens
            .iter()
            .map(|c| !gens.iter().any(|d| d.dim() > c.dim() && c.is_face_of(d)))
            .collect();
        let gens: Vec<Cone> = gens.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let x = gens[i].intersect(&gens[j]);
                if !x.is_face_of(&gens[i]) || !x.is_face_of(&gens[j]) {
                    return Err(Error::InvalidFan(format!(
                        "{:?} and {:?} meet in {:?}, not a common face",
                        gens[i], gens[j], x
                    )));
                }
            }
        }
        Ok(Fan::from_valid(&gens, ambient))
    }

    /// Skips the pairwise check; the caller guarantees the fan axioms.
    pub fn from_valid(generators: &[Cone], ambient: usize) -> Fan {
        let mut all: BTreeSet<Cone> = BTreeSet::new();
        for c in generators {
            for f in c.faces() {
                all.insert(f);
            }
        }
        if all.is_empty() {
            all.insert(Cone::zero(ambient));
        }
        let cones: Vec<Cone> = all.into_iter().collect();
        let maximal: Vec<Cone> = cones
            .iter()
            .filter(|c| !cones.iter().any(|d| d != *c && d.contains_cone(c)))
            .cloned()
            .collect();
        Fan {
            ambient,
            maximal,
            cones,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn maximal_cones(&self) -> &[Cone] {
        &self.maximal
    }
    /// All cones, including the zero cone.
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }
    pub fn rays(&self) -> Vec<IVec> {
        self.cones
            .iter()
            .filter(|c| c.dim() == 1)
            .map(|c| c.rays()[0].clone())
            .collect()
    }
    pub fn ray_count(&self) -> usize {
        self.cones.iter().filter(|c| c.dim() == 1).count()
    }

    /// Every maximal cone is full-dimensional and every codimension-one cone lies in exactly
    /// two maximal cones.
    pub fn is_complete(&self) -> bool {
        let n = self.ambient;
        if n == 0 {
            return true;
        }
        if self.maximal.iter().any(|c| c.dim() != n) {
            return false;
        }
        self.cones
            .iter()
            .filter(|c| c.dim() == n - 1)
            .all(|f| self.maximal.iter().filter(|m| m.contains_cone(f)).count() == 2)
    }

    /// Cones of the fan containing τ, projected to N / (span τ ∩ N).
    pub fn star(&self, tau: &Cone) -> Result<Fan> {
        let split = LatticeSplit::new(&tau.generators(), self.ambient);
        let target = self.ambient - split.k;
        let cones: Vec<Cone> = self
            .maximal
            .iter()
            .filter(|c| c.contains_cone(tau))
            .map(|c| c.map_with(|v| split.quot_i(v), target))
            .collect();
        Ok(Fan::from_valid(&cones, target))
    }

    /// Image under a unimodular change of coordinates (rows are images of basis vectors).
    pub fn transform(&self, rows: &[IVec]) -> Fan {
        let m: Vec<Cone> = self.maximal.iter().map(|c| c.map(rows, self.ambient)).collect();
        Fan::from_valid(&m, self.ambient)
    }

    /// Number of cones of each dimension.
    pub fn f_vector(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in &self.cones {
            *out.entry(c.dim()).or_insert(0) += 1;
        }
        out
    }
}

/// Cone((tail × {0}) ∪ (coeff × {1})).
pub fn cayley_cone(tail: &Cone, coeff: &Polyhedron) -> Cone {
    let n = tail.ambient();
    let mut gens: Vec<IVec> = tail
        .rays()
        .iter()
        .map(|r| {
            let mut w = r.clone();
            w.push(Int::zero());
            w
        })
        .collect();
    for v in coeff.vertices() {
        let mut w = v.clone();
        w.push(Rat::one());
        gens.push(primitive_q(&w));
    }
    Cone::from_generators(&gens, n + 1)
}

/// Cone((σ × {0}) ∪ (σ × {−1})).
pub fn downward_cone(tail: &Cone) -> Cone {
    let n = tail.ambient();
    let mut gens: Vec<IVec> = tail
        .rays()
        .iter()
        .map(|r| {
            let mut w = r.clone();
            w.push(Int::zero());
            w
        })
        .collect();
    let mut down = vec![Int::zero(); n + 1];
    down[n] = -Int::one();
    gens.push(down);
    Cone::from_generators(&gens, n + 1)
}

/// The image of τ₂ in N / (span τ₁ ∩ N).
pub fn star_quotient(big: &Cone, small: &Cone) -> Result<Cone> {
    if !small.is_face_of(big) {
        return Err(Error::Geometry(format!("{:?} is not a face of {:?}", small, big)));
    }
    let split = LatticeSplit::new(&small.generators(), big.ambient());
    let target = big.ambient() - split.k;
    Ok(big.map_with(|v| split.quot_i(v), target))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(g: &[&[i64]]) -> Cone {
        let n = g[0].len();
        Cone::from_generators(&g.iter().map(|v| ivec(v)).collect::<Vec<_>>(), n)
    }

    pub(crate) fn p2() -> Fan {
        Fan::new(
            &[
                c(&[&[1, 0], &[0, 1]]),
                c(&[&[0, 1], &[-1, -1]]),
                c(&[&[-1, -1], &[1, 0]]),
            ],
            2,
        )
        .unwrap()
    }

    #[test]
    fn p1_is_complete() {
        let f = Fan::new(&[c(&[&[1]]), c(&[&[-1]])], 1).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.cones().len(), 3);
    }

    #[test]
    fn orthant_is_not_complete() {
        let f = Fan::new(&[c(&[&[1, 0], &[0, 1]])], 2).unwrap();
        assert!(!f.is_complete());
    }

    #[test]
    fn p2_fan() {
        let f = p2();
        assert!(f.is_complete());
        assert_eq!(f.ray_count(), 3);
    }

    #[test]
    fn overlapping_cones_rejected() {
        let r = Fan::new(&[c(&[&[1, 0], &[0, 1]]), c(&[&[1, 1], &[-1, 1]])], 2);
        assert!(matches!(r, Err(Error::InvalidFan(_))));
    }

    #[test]
    fn cayley_cones() {
        let o = c(&[&[1, 0], &[0, 1]]);
        assert_eq!(
            cayley_cone(&o, &Polyhedron::from_cone(&o)),
            c(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
        );
        let seg = Polyhedron::polytope(vec![qvec_from_ints(&[-1]), qvec_from_ints(&[1])]);
        assert_eq!(cayley_cone(&Cone::zero(1), &seg), c(&[&[-1, 1], &[1, 1]]));
        let half = Polyhedron::translate_cone(qvec(&[(1, 2)]), &c(&[&[1]]));
        assert_eq!(cayley_cone(&c(&[&[1]]), &half), c(&[&[1, 0], &[1, 2]]));
    }

    #[test]
    fn star_quotients() {
        let o = c(&[&[1, 0], &[0, 1]]);
        assert!(star_quotient(&o, &o).unwrap().is_zero());
        let q = star_quotient(&o, &c(&[&[1, 0]])).unwrap();
        assert_eq!(q.ambient(), 1);
        assert_eq!(q.dim(), 1);
        assert_eq!(star_quotient(&o, &Cone::zero(2)).unwrap(), o);
        assert!(star_quotient(&o, &c(&[&[1, 1]])).is_err());
    }
}
