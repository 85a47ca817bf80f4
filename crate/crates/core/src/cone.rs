//! Rational polyhedral cones with both representations computed at construction.

use crate::dd::hrep_to_vrep;
use crate::lattice::{rank_i, saturated_basis};
use crate::num::*;
use num_traits::{Signed, Zero};
use std::fmt;

/// A polyhedral cone in Q^n.
///
/// V-representation: `lineality` (a saturated Z-basis of the lineality space, in a canonical
/// form) and `rays` (primitive extreme rays modulo lineality, sorted). H-representation:
/// `eqs` (a basis of the orthogonal complement of the span) and `facets` (inward normals).
#[derive(Clone)]
pub struct Cone {
    ambient: usize,
    lineality: Vec<IVec>,
    rays: Vec<IVec>,
    eqs: Vec<IVec>,
    facets: Vec<IVec>,
    dim: usize,
}

impl PartialEq for Cone {
    fn eq(&self, o: &Self) -> bool {
        self.ambient == o.ambient && self.lineality == o.lineality && self.rays == o.rays
    }
}
impl Eq for Cone {}

impl std::hash::Hash for Cone {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.ambient.hash(h);
        self.lineality.hash(h);
        self.rays.hash(h);
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Cone {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.ambient, self.dim, &self.lineality, &self.rays).cmp(&(o.ambient, o.dim, &o.lineality, &o.rays))
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &IVec| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        write!(f, "Cone[")?;
        write!(f, "{}", self.rays.iter().map(show).collect::<Vec<_>>().join(" "))?;
        if !self.lineality.is_empty() {
            write!(
                f,
                " | lin {}",
                self.lineality.iter().map(show).collect::<Vec<_>>().join(" ")
            )?;
        }
        write!(f, "]")
    }
}

impl Cone {
    /// The cone generated by the given vectors (rational directions are fine).
    pub fn from_generators(gens: &[IVec], ambient: usize) -> Cone {
        let gens: Vec<IVec> = gens.iter().filter(|g| !is_zero_i(g)).map(|g| primitive(g)).collect();
        let dual = hrep_to_vrep(&gens, &[], ambient);
        let mut normals = dual.rays.clone();
        normals.extend(dual.lineality.iter().cloned());
        if rank_i(&normals, ambient) < ambient {
            // not pointed: go through the general canonical form
            return Cone::from_hrep(&dual.rays, &dual.lineality, ambient);
        }
        // pointed: a generator spans an extreme ray iff its tight constraints have rank n − 1
        let mut rays: Vec<IVec> = gens
            .iter()
            .filter(|g| {
                let mut tight: Vec<IVec> = dual.rays.iter().filter(|f| dot_ii(f, g).is_zero()).cloned().collect();
                tight.extend(dual.lineality.iter().cloned());
                rank_i(&tight, ambient) + 1 == ambient
            })
            .cloned()
            .collect();
        rays.sort();
        rays.dedup();
        let eqs = dual.lineality;
        let facets = dual.rays;
        let dim = ambient - eqs.len();
        Cone {
            ambient,
            lineality: Vec::new(),
            rays,
            eqs,
            facets,
            dim,
        }
    }

    pub fn from_q_generators(gens: &[QVec], ambient: usize) -> Cone {
        let g: Vec<IVec> = gens.iter().map(|v| primitive_q(v)).collect();
        Cone::from_generators(&g, ambient)
    }

    /// The cone {x : <a,x> >= 0 for a in ineqs, <e,x> = 0 for e in eqs}.
    pub fn from_hrep(ineqs: &[IVec], eqs: &[IVec], ambient: usize) -> Cone {
        let v = hrep_to_vrep(ineqs, eqs, ambient);
        let lineality = canonical_lineality(&v.lineality, ambient);
        let mut rays: Vec<IVec> = v.rays.iter().map(|r| reduce_mod(r, &lineality)).collect();
        rays.sort();
        rays.dedup();
        let mut all: Vec<IVec> = rays.clone();
        all.extend(lineality.iter().cloned());
        all.extend(lineality.iter().map(|l| neg_i(l)));
        // H-representation of the minimal V-representation.
        let d = hrep_to_vrep(&all, &[], ambient);
        let eqs = d.lineality;
        // facet normals are only defined modulo the equations; any representative will do
        let facets = d.rays;
        let dim = ambient - eqs.len();
        Cone {
            ambient,
            lineality,
            rays,
            eqs,
            facets,
            dim,
        }
    }

    pub fn zero(ambient: usize) -> Cone {
        Cone::from_generators(&[], ambient)
    }

    pub fn whole(ambient: usize) -> Cone {
        Cone::from_hrep(&[], &[], ambient)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }
    pub fn lineality(&self) -> &[IVec] {
        &self.lineality
    }
    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }
    pub fn facets(&self) -> &[IVec] {
        &self.facets
    }
    pub fn equations(&self) -> &[IVec] {
        &self.eqs
    }
    pub fn is_strictly_convex(&self) -> bool {
        self.lineality.is_empty()
    }
    pub fn is_full_dim(&self) -> bool {
        self.dim == self.ambient
    }
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// All generators, lineality counted in both directions.
    pub fn generators(&self) -> Vec<IVec> {
        let mut g = self.rays.clone();
        g.extend(self.lineality.iter().cloned());
        g.extend(self.lineality.iter().map(|l| neg_i(l)));
        g
    }

    pub fn contains_q(&self, x: &[Rat]) -> bool {
        self.eqs.iter().all(|e| dot_iq(e, x).is_zero()) && self.facets.iter().all(|f| !dot_iq(f, x).is_negative())
    }

    pub fn contains_i(&self, x: &[Int]) -> bool {
        self.eqs.iter().all(|e| dot_ii(e, x).is_zero()) && self.facets.iter().all(|f| !dot_ii(f, x).is_negative())
    }

    pub fn contains_cone(&self, o: &Cone) -> bool {
        o.generators().iter().all(|g| self.contains_i(g))
    }

    /// A point of the relative interior: the sum of the ray generators.
    pub fn relative_interior_point(&self) -> IVec {
        let mut s = vec![Int::zero(); self.ambient];
        for r in &self.rays {
            for (a, b) in s.iter_mut().zip(r) {
                *a += b;
            }
        }
        s
    }

    pub fn in_relative_interior(&self, x: &[Rat]) -> bool {
        self.eqs.iter().all(|e| dot_iq(e, x).is_zero()) && self.facets.iter().all(|f| dot_iq(f, x).is_positive())
    }

    pub fn dual(&self) -> Cone {
        let mut ineqs = self.rays.clone();
        ineqs.extend(self.lineality.iter().cloned());
        ineqs.extend(self.lineality.iter().map(|l| neg_i(l)));
        Cone::from_hrep(&ineqs, &[], self.ambient)
    }

    pub fn intersect(&self, o: &Cone) -> Cone {
        let mut ineqs = self.facets.clone();
        ineqs.extend(o.facets.iter().cloned());
        let mut eqs = self.eqs.clone();
        eqs.extend(o.eqs.iter().cloned());
        Cone::from_hrep(&ineqs, &eqs, self.ambient)
    }

    /// Indices of the rays lying on the hyperplane of the given facet normal.
    pub fn rays_on(&self, normal: &[Int]) -> Vec<usize> {
        (0..self.rays.len())
            .filter(|&i| dot_ii(normal, &self.rays[i]).is_zero())
            .collect()
    }

    /// The smallest face containing the point x (assumed to lie in the cone).
    pub fn face_containing(&self, x: &[Rat]) -> Cone {
        let tight: Vec<&IVec> = self.facets.iter().filter(|f| dot_iq(f, x).is_zero()).collect();
        let rays: Vec<IVec> = self
            .rays
            .iter()
            .filter(|r| tight.iter().all(|f| dot_ii(f, r).is_zero()))
            .cloned()
            .collect();
        let mut g = rays;
        g.extend(self.lineality.iter().cloned());
        g.extend(self.lineality.iter().map(|l| neg_i(l)));
        Cone::from_generators(&g, self.ambient)
    }

    /// The face of the cone on which the linear form m (from the dual) vanishes.
    pub fn face_orthogonal(&self, m: &[Rat]) -> Cone {
        let g: Vec<IVec> = self
            .generators()
            .into_iter()
            .filter(|r| dot_iq(r, m).is_zero())
            .collect();
        Cone::from_generators(&g, self.ambient)
    }

    pub fn is_face_of(&self, big: &Cone) -> bool {
        if !big.contains_cone(self) {
            return false;
        }
        let mut x = to_q(&self.relative_interior_point());
        // lineality directions do not move the relative interior point
        if self.rays.is_empty() {
            x = vec![Rat::zero(); self.ambient];
        }
        &big.face_containing(&x) == self
    }

    /// All faces, as cones, sorted by dimension.
    pub fn faces(&self) -> Vec<Cone> {
        let lat = crate::face::FaceLattice::of_cone(self);
        lat.elements()
            .iter()
            .map(|f| {
                let mut g: Vec<IVec> = f.generators.iter().map(|&i| self.rays[i].clone()).collect();
                g.extend(self.lineality.iter().cloned());
                g.extend(self.lineality.iter().map(|l| neg_i(l)));
                Cone::from_generators(&g, self.ambient)
            })
            .collect()
    }

    /// Image under the linear map given by images of the standard basis vectors.
    pub fn map(&self, rows: &[IVec], target: usize) -> Cone {
        let g: Vec<IVec> = self
            .generators()
            .iter()
            .map(|v| crate::lattice::apply_rows_i(rows, v))
            .collect();
        Cone::from_generators(&g, target)
    }

    /// Image under a linear map given as a function on integer vectors.
    pub fn map_with(&self, f: impl Fn(&IVec) -> IVec, target: usize) -> Cone {
        let g: Vec<IVec> = self.generators().iter().map(f).collect();
        Cone::from_generators(&g, target)
    }

    /// Rank of the linear span.
    pub fn span_rank(&self) -> usize {
        rank_i(&self.generators(), self.ambient)
    }
}

/// Canonical lattice basis of a linear subspace: saturated, then reduced to echelon form
/// with positive pivots.
fn canonical_lineality(l: &[IVec], n: usize) -> Vec<IVec> {
    if l.is_empty() {
        return Vec::new();
    }
    let b = saturated_basis(l, n);
    hermite_rows(b, n)
}

/// Row Hermite normal form of a full-row-rank integer matrix.
fn hermite_rows(mut m: Vec<IVec>, n: usize) -> Vec<IVec> {
    use num_integer::Integer;
    let rows = m.len();
    let mut r = 0;
    for c in 0..n {
        if r == rows {
            break;
        }
        // gcd-reduce column c among rows r..
        loop {
            let nz: Vec<usize> = (r..rows).filter(|&i| !m[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if !m[i][c].is_zero() {
                    let q = m[i][c].div_floor(&m[r][c]);
                    let rr = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(&rr) {
                        *x -= &q * y;
                    }
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            m[r] = neg_i(&m[r]);
        }
        for i in 0..r {
            let q = m[i][c].div_floor(&m[r][c]);
            if !q.is_zero() {
                let rr = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&rr) {
                    *x -= &q * y;
                }
            }
        }
        r += 1;
    }
    m
}

/// Canonical representative of v modulo the lineality space: orthogonal projection onto its
/// complement, made primitive.
fn reduce_mod(v: &[Int], lin: &[IVec]) -> IVec {
    if lin.is_empty() {
        return primitive(v);
    }
    let n = v.len();
    let lq: Vec<QVec> = lin.iter().map(|l| to_q(l)).collect();
    // Solve the Gram system for the projection coefficients.
    let k = lq.len();
    let gram: Vec<QVec> = (0..k)
        .map(|i| (0..k).map(|j| dot_qq(&lq[i], &lq[j])).collect())
        .collect();
    let rhs: QVec = lq.iter().map(|l| dot_qq(l, &to_q(v))).collect();
    let coef = crate::lattice::solve_left(&gram, &rhs).expect("Gram matrix is nonsingular");
    let mut p = to_q(v);
    for (c, l) in coef.iter().zip(&lq) {
        for j in 0..n {
            p[j] -= c * &l[j];
        }
    }
    primitive_q(&p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(g: &[&[i64]]) -> Cone {
        let n = g[0].len();
        Cone::from_generators(&g.iter().map(|v| ivec(v)).collect::<Vec<_>>(), n)
    }

    #[test]
    fn orthant_is_self_dual() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn skew_cone_dual_by_hand() {
        // m with m·(1,1) >= 0 and m·(1,-1) >= 0 is again generated by (1,1),(1,-1)
        let c = cone(&[&[1, 1], &[1, -1]]);
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn zero_cone_dual_is_plane() {
        let z = Cone::zero(2);
        let d = z.dual();
        assert_eq!(d.lineality_dim(), 2);
        assert_eq!(d.dim(), 2);
        assert_eq!(d.dual(), z);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let c = cone(&[&[1, 0], &[0, 1], &[1, 1], &[2, 0]]);
        assert_eq!(c.rays(), &[ivec(&[0, 1]), ivec(&[1, 0])]);
        assert_eq!(c.facets().len(), 2);
    }

    #[test]
    fn face_tests() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        let r = cone(&[&[1, 0]]);
        assert!(r.is_face_of(&c));
        assert!(Cone::zero(2).is_face_of(&c));
        assert!(!cone(&[&[1, 1]]).is_face_of(&c));
    }

    #[test]
    fn half_line_plane() {
        let c = cone(&[&[1, 0], &[0, 1], &[0, -1]]);
        assert_eq!(c.lineality_dim(), 1);
        assert_eq!(c.rays(), &[ivec(&[1, 0])]);
        assert_eq!(c.dual(), cone(&[&[1, 0]]));
    }
}
