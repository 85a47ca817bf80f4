//! Pointed rational polyhedra Q + σ, stored by vertices and recession rays.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::face::FaceLattice;
use crate::lattice::LatticeSplit;
use crate::num::*;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A nonempty polyhedron with pointed recession cone. The empty set is represented by `None`
/// wherever it can occur.
#[derive(Clone)]
pub struct Polyhedron {
    ambient: usize,
    vertices: Vec<QVec>,
    rays: Vec<IVec>,
    homog: Cone,
}

impl PartialEq for Polyhedron {
    fn eq(&self, o: &Self) -> bool {
        self.ambient == o.ambient && self.vertices == o.vertices && self.rays == o.rays
    }
}
impl Eq for Polyhedron {}

impl std::hash::Hash for Polyhedron {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.ambient.hash(h);
        self.vertices.hash(h);
        self.rays.hash(h);
    }
}

impl PartialOrd for Polyhedron {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Polyhedron {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        (self.ambient, &self.vertices, &self.rays).cmp(&(o.ambient, &o.vertices, &o.rays))
    }
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self
            .vertices
            .iter()
            .map(|v| format!("({})", v.iter().map(fmt_rat).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "conv{{{}}}", vs.join(" "))?;
        if !self.rays.is_empty() {
            let rs: Vec<String> = self
                .rays
                .iter()
                .map(|v| format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            write!(f, " + cone{{{}}}", rs.join(" "))?;
        }
        Ok(())
    }
}

/// One maximal cell of a lower hull, with the affine function θ = offset + <slope, ·> on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullCell {
    pub cell: Polyhedron,
    pub offset: Rat,
    pub slope: QVec,
}

fn homog_vertex(v: &[Rat]) -> IVec {
    let mut w = v.to_vec();
    w.push(Rat::one());
    primitive_q(&w)
}

fn homog_ray(r: &[Int]) -> IVec {
    let mut w = r.to_vec();
    w.push(Int::zero());
    w
}

impl Polyhedron {
    /// conv(vertices) + cone(rays). Redundant points and rays are removed.
    ///
    /// Panics if `vertices` is empty or the recession cone has lineality.
    pub fn new(vertices: Vec<QVec>, rays: Vec<IVec>) -> Polyhedron {
        assert!(!vertices.is_empty(), "a polyhedron needs at least one point");
        let n = vertices[0].len();
        let mut gens: Vec<IVec> = vertices.iter().map(|v| homog_vertex(v)).collect();
        gens.extend(rays.iter().filter(|r| !is_zero_i(r)).map(|r| homog_ray(r)));
        Polyhedron::from_homog(Cone::from_generators(&gens, n + 1), n).expect("a polyhedron with a vertex is nonempty")
    }

    fn from_homog(homog: Cone, n: usize) -> Option<Polyhedron> {
        assert!(homog.is_strictly_convex(), "recession cone must be pointed");
        let mut vertices = Vec::new();
        let mut rays = Vec::new();
        for r in homog.rays() {
            if r[n].is_zero() {
                rays.push(r[..n].to_vec());
            } else {
                let t = rat_int(&r[n]);
                vertices.push(r[..n].iter().map(|x| rat_int(x) / &t).collect::<QVec>());
            }
        }
        if vertices.is_empty() {
            return None;
        }
        vertices.sort();
        rays.sort();
        Some(Polyhedron {
            ambient: n,
            vertices,
            rays,
            homog,
        })
    }

    /// {x : <a,x> >= b for (a,b) in ineqs, <e,x> = c for (e,c) in eqs}; None if empty.
    pub fn from_hrep(ineqs: &[(QVec, Rat)], eqs: &[(QVec, Rat)], n: usize) -> Option<Polyhedron> {
        let row = |a: &QVec, b: &Rat| {
            let mut w = a.clone();
            w.push(-b.clone());
            primitive_q(&w)
        };
        let mut hi: Vec<IVec> = ineqs.iter().map(|(a, b)| row(a, b)).collect();
        let mut t = vec![Int::zero(); n + 1];
        t[n] = Int::one();
        hi.push(t);
        let he: Vec<IVec> = eqs.iter().map(|(a, b)| row(a, b)).collect();
        Polyhedron::from_homog(Cone::from_hrep(&hi, &he, n + 1), n)
    }

    pub fn point(v: QVec) -> Polyhedron {
        Polyhedron::new(vec![v], vec![])
    }

    pub fn polytope(vertices: Vec<QVec>) -> Polyhedron {
        Polyhedron::new(vertices, vec![])
    }

    /// The cone itself, viewed as a polyhedron with vertex 0.
    pub fn from_cone(c: &Cone) -> Polyhedron {
        Polyhedron::new(vec![vec![Rat::zero(); c.ambient()]], c.rays().to_vec())
    }

    /// v + c.
    pub fn translate_cone(v: QVec, c: &Cone) -> Polyhedron {
        Polyhedron::new(vec![v], c.rays().to_vec())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn vertices(&self) -> &[QVec] {
        &self.vertices
    }
    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }
    pub fn homogenization(&self) -> &Cone {
        &self.homog
    }
    pub fn dim(&self) -> usize {
        self.homog.dim() - 1
    }
    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }
    pub fn is_full_dim(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn recession_cone(&self) -> Cone {
        Cone::from_generators(&self.rays, self.ambient)
    }

    /// Inequalities <a,x> >= b describing the polyhedron (with its affine hull equations).
    pub fn inequalities(&self) -> (Vec<(IVec, Rat)>, Vec<(IVec, Rat)>) {
        let n = self.ambient;
        let split = |r: &IVec| (r[..n].to_vec(), -rat_int(&r[n]));
        let ineqs = self
            .homog
            .facets()
            .iter()
            .filter(|f| !is_zero_i(&f[..n]))
            .map(split)
            .collect();
        let eqs = self.homog.equations().iter().map(split).collect();
        (ineqs, eqs)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        let mut w = x.to_vec();
        w.push(Rat::one());
        self.homog.contains_q(&w)
    }

    pub fn contains_polyhedron(&self, o: &Polyhedron) -> bool {
        o.vertices.iter().all(|v| self.contains(v)) && o.rays.iter().all(|r| self.homog.contains_i(&homog_ray(r)))
    }

    /// The barycenter of the vertices plus the sum of the rays.
    pub fn relative_interior_point(&self) -> QVec {
        let k = Rat::from_integer(Int::from(self.vertices.len()));
        let mut s = vec![Rat::zero(); self.ambient];
        for v in &self.vertices {
            s = add_q(&s, v);
        }
        s = scale_q(&s, &(Rat::one() / k));
        for r in &self.rays {
            s = add_q(&s, &to_q(r));
        }
        s
    }

    pub fn minkowski_sum(&self, o: &Polyhedron) -> Polyhedron {
        let mut vs = Vec::new();
        for a in &self.vertices {
            for b in &o.vertices {
                vs.push(add_q(a, b));
            }
        }
        let mut rays = self.rays.clone();
        rays.extend(o.rays.iter().cloned());
        Polyhedron::new(vs, rays)
    }

    pub fn intersect(&self, o: &Polyhedron) -> Option<Polyhedron> {
        let mut ineqs = self.homog.facets().to_vec();
        ineqs.extend(o.homog.facets().iter().cloned());
        let mut t = vec![Int::zero(); self.ambient + 1];
        t[self.ambient] = Int::one();
        ineqs.push(t);
        let mut eqs = self.homog.equations().to_vec();
        eqs.extend(o.homog.equations().iter().cloned());
        Polyhedron::from_homog(Cone::from_hrep(&ineqs, &eqs, self.ambient + 1), self.ambient)
    }

    /// min over the polyhedron of <m,·>, or None when unbounded below.
    pub fn eval_support(&self, m: &[Rat]) -> Option<Rat> {
        if self.rays.iter().any(|r| dot_iq(r, m).is_negative()) {
            return None;
        }
        self.vertices.iter().map(|v| dot_qq(v, m)).min()
    }

    /// The face on which <m,·> attains its minimum. m must be bounded below on the polyhedron.
    pub fn face_minimizing(&self, m: &[Rat]) -> Polyhedron {
        let h = self.eval_support(m).expect("linear form bounded below");
        let vs: Vec<QVec> = self.vertices.iter().filter(|v| dot_qq(v, m) == h).cloned().collect();
        let rs: Vec<IVec> = self.rays.iter().filter(|r| dot_iq(r, m).is_zero()).cloned().collect();
        Polyhedron::new(vs, rs)
    }

    /// All nonempty faces.
    pub fn faces(&self) -> Vec<Polyhedron> {
        let nv = self.vertices.len();
        FaceLattice::of_polyhedron(self)
            .elements()
            .iter()
            .filter(|f| f.dim >= 0)
            .map(|f| {
                let vs = f
                    .generators
                    .iter()
                    .filter(|&&i| i < nv)
                    .map(|&i| self.vertices[i].clone())
                    .collect();
                let rs = f
                    .generators
                    .iter()
                    .filter(|&&i| i >= nv)
                    .map(|&i| self.rays[i - nv].clone())
                    .collect();
                Polyhedron::new(vs, rs)
            })
            .collect()
    }

    /// Smallest face containing the point x of the polyhedron.
    pub fn face_containing(&self, x: &[Rat]) -> Polyhedron {
        let mut w = x.to_vec();
        w.push(Rat::one());
        let hf = self.homog.face_containing(&w);
        Polyhedron::from_homog(hf, self.ambient).expect("face of a point is nonempty")
    }

    pub fn is_face_of(&self, big: &Polyhedron) -> bool {
        big.contains_polyhedron(self) && &big.face_containing(&self.relative_interior_point()) == self
    }

    /// Image under the linear map with the given images of the standard basis vectors.
    pub fn map(&self, rows: &[IVec], target: usize) -> Polyhedron {
        self.map_with(|v| crate::lattice::apply_rows_q(rows, v), target)
    }

    /// Image under a linear map given as a function on rational vectors.
    pub fn map_with(&self, f: impl Fn(&[Rat]) -> QVec, target: usize) -> Polyhedron {
        let vs: Vec<QVec> = self.vertices.iter().map(|v| f(v)).collect();
        let rs: Vec<IVec> = self
            .rays
            .iter()
            .map(|r| primitive_q(&f(&to_q(r))))
            .filter(|r| !is_zero_i(r))
            .collect();
        if vs.is_empty() || target == 0 {
            return Polyhedron::point(vec![Rat::zero(); target]);
        }
        Polyhedron::new(vs, rs)
    }

    /// Coordinates in a lattice basis: x ↦ the coordinates of x with respect to `split`.
    pub fn project(&self, split: &LatticeSplit, first: usize, count: usize) -> Polyhedron {
        self.map_with(|v| split.coords_q(v)[first..first + count].to_vec(), count)
    }

    pub fn scale(&self, k: &Rat) -> Polyhedron {
        let vs = self.vertices.iter().map(|v| scale_q(v, k)).collect();
        Polyhedron::new(vs, self.rays.clone())
    }

    pub fn translate(&self, t: &[Rat]) -> Polyhedron {
        let vs = self.vertices.iter().map(|v| add_q(v, t)).collect();
        Polyhedron::new(vs, self.rays.clone())
    }

    /// Lowest common denominator of all vertex coordinates.
    pub fn denominator(&self) -> Int {
        use num_integer::Integer;
        self.vertices.iter().fold(Int::one(), |l, v| l.lcm(&denom_lcm(v)))
    }

    /// Maximal cells of the lower hull with respect to the direction u.
    ///
    /// `split` must have been built from the single vector u, so that coordinate 0 is the
    /// u-coefficient (π₂) and the remaining coordinates give π₁. For v ∈ π₁(p) the function
    /// θ(v) = −min π₂(π₁⁻¹(v) ∩ p) is affine on each returned cell.
    pub fn lower_hull_cells(&self, split: &LatticeSplit) -> Result<Vec<HullCell>> {
        let n = self.ambient;
        if split.k != 1 || split.n != n {
            return Err(Error::Geometry("lower hull needs a rank-one split".into()));
        }
        let u = &split.basis[0];
        if !self.is_full_dim() {
            return Err(Error::Geometry("lower hull needs a full-dimensional polyhedron".into()));
        }
        let neg_u = neg_i(u);
        if self.recession_cone().contains_i(&neg_u) {
            return Err(Error::Geometry(format!(
                "{:?} is unbounded below along the projection direction",
                self
            )));
        }
        let (ineqs, _) = self.inequalities();
        let mut cells = Vec::new();
        for (a, b) in ineqs {
            let au = dot_ii(&a, u);
            if !au.is_positive() {
                continue;
            }
            let m: QVec = to_q(&a).iter().map(|x| x / rat_int(&au)).collect();
            let b = b / rat_int(&au);
            let face = self.face_minimizing(&m);
            let cell = face.project(split, 1, n - 1);
            let slope: QVec = split.basis[1..].iter().map(|e| dot_iq(e, &m)).collect();
            cells.push(HullCell {
                cell,
                offset: -b,
                slope,
            });
        }
        cells.sort_by(|x, y| x.cell.cmp(&y.cell));
        Ok(cells)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orthant() -> Cone {
        Cone::from_generators(&[ivec(&[1, 0]), ivec(&[0, 1])], 2)
    }

    #[test]
    fn shifted_orthant_sum() {
        let p = Polyhedron::point(qvec(&[(1, 1), (1, 2)]));
        let s = p.minkowski_sum(&Polyhedron::from_cone(&orthant()));
        assert_eq!(s, Polyhedron::translate_cone(qvec(&[(1, 1), (1, 2)]), &orthant()));
        assert_eq!(s.recession_cone(), orthant());
    }

    #[test]
    fn sum_with_origin_is_identity() {
        let p = Polyhedron::polytope(vec![qvec_from_ints(&[0, 1]), qvec_from_ints(&[1, 0])]);
        assert_eq!(p.minkowski_sum(&Polyhedron::point(qvec_from_ints(&[0, 0]))), p);
    }

    #[test]
    fn sum_of_segment_and_point_orthants() {
        let s = orthant();
        let p = Polyhedron::translate_cone(qvec(&[(1, 2), (1, 2)]), &s);
        let q = Polyhedron::new(
            vec![qvec_from_ints(&[0, 1]), qvec_from_ints(&[1, 0])],
            s.rays().to_vec(),
        );
        let r = p.minkowski_sum(&q);
        assert_eq!(r.vertices(), &[qvec(&[(1, 2), (3, 2)]), qvec(&[(3, 2), (1, 2)])]);
        assert_eq!(r.rays(), s.rays());
    }

    #[test]
    fn intersections() {
        let pos = Polyhedron::new(vec![qvec_from_ints(&[0])], vec![ivec(&[1])]);
        let neg = Polyhedron::new(vec![qvec_from_ints(&[0])], vec![ivec(&[-1])]);
        assert_eq!(pos.intersect(&neg), Some(Polyhedron::point(qvec_from_ints(&[0]))));
        let a = Polyhedron::new(vec![qvec_from_ints(&[1])], vec![ivec(&[1])]);
        let b = Polyhedron::new(vec![qvec_from_ints(&[-1])], vec![ivec(&[-1])]);
        assert_eq!(a.intersect(&b), None);
        assert_eq!(a.intersect(&a), Some(a.clone()));
    }

    #[test]
    fn support_values() {
        let p = Polyhedron::translate_cone(qvec(&[(1, 1), (1, 2)]), &orthant());
        assert_eq!(p.eval_support(&qvec_from_ints(&[1, 0])), Some(rat(1, 1)));
        assert_eq!(p.eval_support(&qvec_from_ints(&[-1, 0])), None);
        let seg = Polyhedron::polytope(vec![qvec_from_ints(&[-1]), qvec_from_ints(&[0])]);
        assert_eq!(seg.eval_support(&qvec_from_ints(&[1])), Some(rat(-1, 1)));
    }

    #[test]
    fn recession_and_interior_points() {
        let p = Polyhedron::translate_cone(qvec(&[(1, 1), (1, 2)]), &orthant());
        assert_eq!(p.recession_cone(), orthant());
        assert_eq!(orthant().relative_interior_point(), ivec(&[1, 1]));
    }

    fn u_split() -> LatticeSplit {
        LatticeSplit::new(&[ivec(&[1, 1])], 2)
    }

    fn cell_data(p: &Polyhedron) -> Vec<(Polyhedron, Rat)> {
        p.lower_hull_cells(&u_split())
            .unwrap()
            .into_iter()
            .map(|c| (c.cell, c.offset))
            .collect()
    }

    #[test]
    fn lower_hull_of_orthant() {
        let split = u_split();
        let cells = cell_data(&Polyhedron::from_cone(&orthant()));
        assert_eq!(cells.len(), 2);
        for (c, off) in &cells {
            assert!(off.is_zero());
            assert_eq!(c.vertices(), &[qvec_from_ints(&[0])]);
        }
        // the two cells are the opposite half-lines
        let r0 = &cells[0].0.rays()[0];
        let r1 = &cells[1].0.rays()[0];
        assert_eq!(r0, &neg_i(r1));
        assert_eq!(split.basis[0], ivec(&[1, 1]));
    }

    #[test]
    fn lower_hull_of_shifted_orthant() {
        let p = Polyhedron::translate_cone(qvec(&[(1, 2), (1, 2)]), &orthant());
        let base = cell_data(&Polyhedron::from_cone(&orthant()));
        let cells = cell_data(&p);
        assert_eq!(cells.len(), 2);
        for ((c, off), (c0, _)) in cells.iter().zip(&base) {
            assert_eq!(c, c0);
            // θ = −min π₂ on the fiber over 0 is −(1/2)
            assert_eq!(off, &rat(-1, 2));
        }
    }

    #[test]
    fn lower_hull_three_cells() {
        let s = orthant();
        let p = Polyhedron::new(
            vec![qvec_from_ints(&[0, 1]), qvec_from_ints(&[1, 0])],
            s.rays().to_vec(),
        );
        let cells = cell_data(&p);
        assert_eq!(cells.len(), 3);
        let bounded: Vec<_> = cells.iter().filter(|c| c.0.is_bounded()).collect();
        assert_eq!(bounded.len(), 1);
        let mut ends: Vec<Rat> = bounded[0].0.vertices().iter().map(|v| v[0].clone()).collect();
        ends.sort();
        assert_eq!(ends, vec![rat(-1, 1), rat(1, 1)]);
        for c in cells.iter().filter(|c| !c.0.is_bounded()) {
            let v = &c.0.vertices()[0][0];
            let r = &c.0.rays()[0][0];
            assert_eq!(v.abs(), rat(1, 1));
            assert_eq!(rat_int(r) * v.signum(), rat(1, 1));
        }
    }

    #[test]
    fn face_relations() {
        let p = Polyhedron::new(
            vec![qvec_from_ints(&[0, 1]), qvec_from_ints(&[1, 0])],
            orthant().rays().to_vec(),
        );
        let seg = Polyhedron::polytope(vec![qvec_from_ints(&[0, 1]), qvec_from_ints(&[1, 0])]);
        assert!(seg.is_face_of(&p));
        assert!(!Polyhedron::point(qvec(&[(1, 2), (1, 2)])).is_face_of(&p));
        assert_eq!(p.faces().len(), 6);
    }
}
