//! The poset of hyperfaces meeting the degree, equivalently the orbits of the exceptional image.

use crate::cone::Cone;
use crate::divisor::{DivisorialFan, Locus, PolyDivisor};
use crate::num::*;
use crate::polyhedron::Polyhedron;
use std::collections::BTreeMap;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HFElement {
    /// The face τ of the tail.
    pub tail_face: Cone,
    /// Faces of the coefficients, at the points where they differ from τ.
    pub coeff_faces: BTreeMap<String, Polyhedron>,
    /// Indices of the complete divisors this hyperface was found in.
    pub sources: Vec<usize>,
}

impl HFElement {
    pub fn coeff_face(&self, y: &str) -> Polyhedron {
        self.coeff_faces
            .get(y)
            .cloned()
            .unwrap_or_else(|| Polyhedron::from_cone(&self.tail_face))
    }
}

#[derive(Clone, Debug)]
pub struct HFPoset {
    rank: usize,
    elements: Vec<HFElement>,
    leq: Vec<Vec<bool>>,
}

impl HFPoset {
    pub fn new(fan: &DivisorialFan) -> HFPoset {
        let mut found: BTreeMap<(Cone, BTreeMap<String, Polyhedron>), Vec<usize>> = BTreeMap::new();
        for (i, d) in fan.divisors().iter().enumerate() {
            let Some(deg) = d.degree() else { continue };
            let sigma = d.tail();
            let dual = sigma.dual();
            for tau in sigma.faces() {
                if deg.intersect(&Polyhedron::from_cone(&tau)).is_none() {
                    continue;
                }
                let m = to_q(
                    &dual
                        .face_orthogonal(&to_q(&tau.relative_interior_point()))
                        .relative_interior_point(),
                );
                let trivial = Polyhedron::from_cone(&tau);
                let faces: BTreeMap<String, Polyhedron> = d
                    .coefficients()
                    .iter()
                    .map(|(y, p)| (y.clone(), p.face_minimizing(&m)))
                    .filter(|(_, f)| *f != trivial)
                    .collect();
                found.entry((tau, faces)).or_default().push(i);
            }
        }
        let mut elements: Vec<HFElement> = found
            .into_iter()
            .map(|((tail_face, coeff_faces), sources)| HFElement {
                tail_face,
                coeff_faces,
                sources,
            })
            .collect();
        elements.sort_by(|a, b| {
            (a.tail_face.dim(), &a.tail_face, &a.coeff_faces).cmp(&(b.tail_face.dim(), &b.tail_face, &b.coeff_faces))
        });
        let k = elements.len();
        let leq = (0..k)
            .map(|a| (0..k).map(|b| a == b || below(&elements[a], &elements[b])).collect())
            .collect();
        HFPoset {
            rank: fan.rank(),
            elements,
            leq,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn elements(&self) -> &[HFElement] {
        &self.elements
    }
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// a ⪯ b: the orbit b lies in the closure of the orbit a.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn orbit_dim(&self, a: usize) -> usize {
        self.rank - self.elements[a].tail_face.dim()
    }

    /// The complete polyhedral divisor with tail τ and the coefficient faces.
    pub fn hyperface_divisor(&self, a: usize) -> PolyDivisor {
        let e = &self.elements[a];
        PolyDivisor::new(e.tail_face.clone(), e.coeff_faces.clone(), Locus::Complete)
            .expect("faces of coefficients have the face of the tail as recession cone")
    }

    /// Cover relations a ⋖ b.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if a != b && self.leq(a, b) && !(0..k).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph orbits {\n");
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(
                s,
                "  o{} [label=\"{} dim {} {:?}\"];",
                i,
                i,
                self.orbit_dim(i),
                e.tail_face
            );
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  o{} -> o{};", a, b);
        }
        s.push_str("}\n");
        s
    }
}

fn below(a: &HFElement, b: &HFElement) -> bool {
    if a.tail_face.dim() >= b.tail_face.dim() || !b.tail_face.contains_cone(&a.tail_face) {
        return false;
    }
    let labels: std::collections::BTreeSet<&String> = a.coeff_faces.keys().chain(b.coeff_faces.keys()).collect();
    labels
        .into_iter()
        .all(|y| b.coeff_face(y).contains_polyhedron(&a.coeff_face(y)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn projective_plane_has_two_orbits() {
        let hf = HFPoset::new(&examples::projective_plane_surface());
        assert_eq!(hf.len(), 2);
        assert!((0..2).all(|a| hf.leq(a, a)));
    }

    #[test]
    fn quadric_orbits() {
        let hf = HFPoset::new(&examples::quadric_threefold());
        let o2 = hf.elements().iter().filter(|e| e.tail_face.dim() == 1).count();
        assert_eq!(o2, 4);
        for (a, b) in hf.covers() {
            assert!(hf.leq(a, b) && hf.orbit_dim(a) > hf.orbit_dim(b));
        }
        // every source is a complete divisor containing the hyperface
        for (a, e) in hf.elements().iter().enumerate() {
            assert!(!e.sources.is_empty());
            assert_eq!(hf.hyperface_divisor(a).tail(), &e.tail_face);
        }
        assert!(hf.to_dot().starts_with("digraph"));
    }
}
