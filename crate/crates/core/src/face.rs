//! Face posets of cones and polyhedra.

use crate::cone::Cone;
use crate::lattice::rank_i;
use crate::num::*;
use crate::polyhedron::Polyhedron;
use std::collections::{BTreeSet, HashSet};

/// A face, identified by the indices of the generators it contains.
///
/// For a cone the generators are its rays; for a polyhedron they are the vertices followed by
/// the rays. The empty face of a polyhedron has dimension -1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    pub dim: i64,
    pub generators: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Face>,
    leq: Vec<Vec<bool>>,
}

impl FaceLattice {
    /// Closes the facet generator sets under intersection. `dim_of` gives the dimension of a
    /// generator set.
    pub fn from_facets(all: Vec<usize>, facets: &[Vec<usize>], dim_of: impl Fn(&[usize]) -> i64) -> FaceLattice {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut stack = vec![all.clone()];
        seen.insert(all);
        while let Some(f) = stack.pop() {
            for fac in facets {
                let g: Vec<usize> = f.iter().copied().filter(|i| fac.binary_search(i).is_ok()).collect();
                if seen.insert(g.clone()) {
                    stack.push(g);
                }
            }
        }
        let faces: Vec<Face> = seen
            .into_iter()
            .map(|g| Face {
                dim: dim_of(&g),
                generators: g,
            })
            .collect();
        FaceLattice::from_faces(faces)
    }

    pub fn from_faces(mut faces: Vec<Face>) -> FaceLattice {
        faces.sort();
        faces.dedup();
        let k = faces.len();
        let sets: Vec<BTreeSet<usize>> = faces.iter().map(|f| f.generators.iter().copied().collect()).collect();
        let leq = (0..k)
            .map(|a| (0..k).map(|b| sets[a].is_subset(&sets[b])).collect())
            .collect();
        FaceLattice { faces, leq }
    }

    pub fn of_cone(c: &Cone) -> FaceLattice {
        let all: Vec<usize> = (0..c.rays().len()).collect();
        let facets: Vec<Vec<usize>> = c.facets().iter().map(|f| c.rays_on(f)).collect();
        let lin = c.lineality().to_vec();
        let n = c.ambient();
        let rays = c.rays().to_vec();
        FaceLattice::from_facets(all, &facets, |g| {
            let mut v: Vec<IVec> = g.iter().map(|&i| rays[i].clone()).collect();
            v.extend(lin.iter().cloned());
            rank_i(&v, n) as i64
        })
    }

    /// Nonempty faces together with the empty face at the bottom.
    pub fn of_polyhedron(p: &Polyhedron) -> FaceLattice {
        let h = p.homogenization();
        let nv = p.vertices().len();
        let n = p.ambient();
        // map homogenized rays to polyhedron generator indices
        let index: Vec<usize> = h
            .rays()
            .iter()
            .map(|r| {
                let t = rat_int(&r[n]);
                if t == Rat::from_integer(0.into()) {
                    nv + p.rays().iter().position(|x| x[..] == r[..n]).expect("ray")
                } else {
                    let v: QVec = r[..n].iter().map(|x| rat_int(x) / &t).collect();
                    p.vertices().iter().position(|x| *x == v).expect("vertex")
                }
            })
            .collect();
        let cl = FaceLattice::of_cone(h);
        let mut faces: Vec<Face> = cl
            .faces
            .iter()
            .filter_map(|f| {
                let mut g: Vec<usize> = f.generators.iter().map(|&i| index[i]).collect();
                g.sort();
                if g.first().is_none_or(|&i| i >= nv) {
                    None
                } else {
                    Some(Face {
                        dim: f.dim - 1,
                        generators: g,
                    })
                }
            })
            .collect();
        faces.push(Face {
            dim: -1,
            generators: vec![],
        });
        FaceLattice::from_faces(faces)
    }

    pub fn elements(&self) -> &[Face] {
        &self.faces
    }
    pub fn len(&self) -> usize {
        self.faces.len()
    }
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
    pub fn bottom(&self) -> usize {
        0
    }
    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }
    pub fn dim(&self, a: usize) -> i64 {
        self.faces[a].dim
    }
    pub fn index_of(&self, generators: &[usize]) -> Option<usize> {
        self.faces.iter().position(|f| f.generators == generators)
    }

    /// Elements c with a <= c <= b.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.leq[a][c] && self.leq[c][b]).collect()
    }

    /// Number of faces of each dimension, starting from the lowest.
    pub fn f_vector(&self) -> Vec<usize> {
        let lo = self.faces[0].dim;
        let hi = self.faces[self.top()].dim;
        (lo..=hi)
            .map(|d| self.faces.iter().filter(|f| f.dim == d).count())
            .collect()
    }

    /// Every nontrivial interval has as many even-rank as odd-rank elements.
    pub fn is_eulerian(&self) -> bool {
        for a in 0..self.len() {
            for b in 0..self.len() {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                let s: i64 = self
                    .interval(a, b)
                    .iter()
                    .map(|&c| if (self.dim(c) - self.dim(a)) % 2 == 0 { 1 } else { -1 })
                    .sum();
                if s != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Graded: every cover relation raises the dimension by exactly one.
    pub fn is_graded(&self) -> bool {
        for a in 0..self.len() {
            for b in 0..self.len() {
                if a == b || !self.leq[a][b] {
                    continue;
                }
                let between = self.interval(a, b).len();
                if between == 2 && self.dim(b) - self.dim(a) != 1 {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthant_has_four_faces() {
        let c = Cone::from_generators(&[ivec(&[1, 0]), ivec(&[0, 1])], 2);
        let l = FaceLattice::of_cone(&c);
        assert_eq!(l.len(), 4);
        assert_eq!(l.f_vector(), vec![1, 2, 1]);
        assert!(l.is_eulerian());
    }

    #[test]
    fn square_cone_has_ten_faces() {
        let g: Vec<IVec> = [[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]]
            .iter()
            .map(|v| ivec(v))
            .collect();
        let c = Cone::from_generators(&g, 3);
        let l = FaceLattice::of_cone(&c);
        assert_eq!(l.f_vector(), vec![1, 4, 4, 1]);
        assert!(l.is_eulerian() && l.is_graded());
    }

    #[test]
    fn segment_faces() {
        let p = Polyhedron::polytope(vec![qvec_from_ints(&[-1]), qvec_from_ints(&[0])]);
        let l = FaceLattice::of_polyhedron(&p);
        assert_eq!(l.f_vector(), vec![1, 2, 1]);
        assert!(l.is_eulerian());
    }

    #[test]
    fn lineality_is_bottom() {
        let c = Cone::from_generators(&[ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[0, -1])], 2);
        let l = FaceLattice::of_cone(&c);
        assert_eq!(l.len(), 2);
        assert_eq!(l.dim(l.bottom()), 1);
    }
}
