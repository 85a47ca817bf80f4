//! Worked inputs with known answers, shared by the CLI self-check, tests and benchmarks.

use crate::cone::Cone;
use crate::divisor::{Curve, DivisorialFan, Locus, PolyDivisor};
use crate::num::*;
use crate::polyhedron::Polyhedron;
use std::collections::{BTreeMap, BTreeSet};

fn cone(g: &[&[i64]]) -> Cone {
    let n = g[0].len();
    Cone::from_generators(&g.iter().map(|v| ivec(v)).collect::<Vec<_>>(), n)
}

fn q(v: &[(i64, i64)]) -> QVec {
    qvec(v)
}

fn coeffs(v: Vec<(&str, Polyhedron)>) -> BTreeMap<String, Polyhedron> {
    v.into_iter().map(|(k, p)| (k.to_string(), p)).collect()
}

fn except(points: &[&str]) -> Locus {
    Locus::Affine(points.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>())
}

/// A smooth quadric threefold with a 2-torus action, from four divisors over P^1.
pub fn quadric_threefold() -> DivisorialFan {
    let s1 = cone(&[&[1, 1], &[1, -1]]);
    let s2 = cone(&[&[1, -1], &[-1, -1]]);
    let s3 = cone(&[&[-1, 1], &[-1, -1]]);
    let s4 = cone(&[&[-1, 1], &[1, 1]]);
    let half = q(&[(1, 2), (1, 2)]);
    let seg =
        |a: &[i64], b: &[i64], s: &Cone| Polyhedron::new(vec![qvec_from_ints(a), qvec_from_ints(b)], s.rays().to_vec());
    let pt = |a: QVec, s: &Cone| Polyhedron::translate_cone(a, s);
    let d1 = PolyDivisor::new(
        s1.clone(),
        coeffs(vec![("1", seg(&[0, 0], &[0, -1], &s1)), ("inf", pt(half.clone(), &s1))]),
        Locus::Complete,
    );
    let d2 = PolyDivisor::new(
        s2.clone(),
        coeffs(vec![
            ("0", seg(&[-1, 0], &[0, 0], &s2)),
            ("1", pt(qvec_from_ints(&[0, -1]), &s2)),
            ("inf", pt(half.clone(), &s2)),
        ]),
        Locus::Complete,
    );
    let d3 = PolyDivisor::new(
        s3.clone(),
        coeffs(vec![
            ("0", pt(qvec_from_ints(&[-1, 0]), &s3)),
            ("1", seg(&[0, 0], &[0, -1], &s3)),
            ("inf", pt(half.clone(), &s3)),
        ]),
        Locus::Complete,
    );
    let d4 = PolyDivisor::new(
        s4.clone(),
        coeffs(vec![("0", seg(&[-1, 0], &[0, 0], &s4)), ("inf", pt(half, &s4))]),
        Locus::Complete,
    );
    let divs = vec![d1.unwrap(), d2.unwrap(), d3.unwrap(), d4.unwrap()];
    DivisorialFan::new(Curve::p1(&["0", "1", "inf"]), 2, divs).expect("valid fan")
}

/// A complete C*-surface over P^1 isomorphic to the projective plane.
pub fn projective_plane_surface() -> DivisorialFan {
    let pos = cone(&[&[1]]);
    let neg = cone(&[&[-1]]);
    let d1 = PolyDivisor::new(
        Cone::zero(1),
        coeffs(vec![(
            "0",
            Polyhedron::polytope(vec![qvec_from_ints(&[-1]), qvec_from_ints(&[0])]),
        )]),
        except(&["inf"]),
    );
    let d2 = PolyDivisor::new(
        pos.clone(),
        coeffs(vec![("inf", Polyhedron::translate_cone(q(&[(1, 2)]), &pos))]),
        Locus::Complete,
    );
    let d3 = PolyDivisor::new(
        neg.clone(),
        coeffs(vec![
            ("0", Polyhedron::translate_cone(qvec_from_ints(&[-1]), &neg)),
            ("inf", Polyhedron::translate_cone(q(&[(1, 2)]), &neg)),
        ]),
        Locus::Complete,
    );
    let divs = vec![d1.unwrap(), d2.unwrap(), d3.unwrap()];
    DivisorialFan::new(Curve::p1(&["0", "inf"]), 1, divs).expect("valid fan")
}

/// An affine toric threefold with an attractive fixed point, written over P^1 with tail the
/// positive quadrant.
pub fn affine_threefold_cone() -> (PolyDivisor, Curve) {
    let s = cone(&[&[1, 0], &[0, 1]]);
    let d = PolyDivisor::new(
        s.clone(),
        coeffs(vec![
            ("0", Polyhedron::translate_cone(q(&[(1, 2), (1, 2)]), &s)),
            (
                "inf",
                Polyhedron::new(
                    vec![qvec_from_ints(&[0, 1]), qvec_from_ints(&[1, 0])],
                    s.rays().to_vec(),
                ),
            ),
        ]),
        Locus::Complete,
    )
    .expect("tail matches");
    (d, Curve::p1(&["0", "inf"]))
}

/// An affine threefold whose closed orbit has a disconnected stabilizer: tail Q≥0 × 0 with
/// (1, 1/2) + σ at 0 and (0, −1/2) + σ at ∞.
pub fn disconnected_stabilizer() -> (PolyDivisor, Curve) {
    let s = cone(&[&[1, 0]]);
    let d = PolyDivisor::new(
        s.clone(),
        coeffs(vec![
            ("0", Polyhedron::translate_cone(q(&[(1, 1), (1, 2)]), &s)),
            ("inf", Polyhedron::translate_cone(q(&[(0, 1), (-1, 2)]), &s)),
        ]),
        Locus::Complete,
    )
    .expect("tail matches");
    (d, Curve::p1(&["0", "inf"]))
}

/// An affine C*-surface with an attractive fixed point over a curve of the given genus.
pub fn attractive_surface(genus: u32) -> (PolyDivisor, Curve) {
    let s = cone(&[&[1]]);
    let d = PolyDivisor::new(
        s.clone(),
        coeffs(vec![
            ("a", Polyhedron::translate_cone(q(&[(1, 2)]), &s)),
            ("b", Polyhedron::translate_cone(q(&[(-1, 3)]), &s)),
            ("c", Polyhedron::translate_cone(q(&[(1, 1)]), &s)),
        ]),
        Locus::Complete,
    )
    .expect("tail matches");
    (d, Curve::generic(genus, &["a", "b", "c"]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_examples_are_complete() {
        assert!(quadric_threefold().is_complete_variety());
        assert!(projective_plane_surface().is_complete_variety());
    }

    #[test]
    fn affine_examples_are_proper() {
        for (d, c) in [
            affine_threefold_cone(),
            disconnected_stabilizer(),
            attractive_surface(0),
            attractive_surface(2),
        ] {
            assert!(d.is_proper(&c).unwrap());
            assert!(d.locus().is_complete());
        }
    }
}
