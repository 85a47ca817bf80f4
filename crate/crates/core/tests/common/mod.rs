//! Random complete divisorial fans in ranks 1 and 2.
//!
//! Every special point gets a complete polyhedral subdivision of N_Q whose recession fan is a
//! fixed complete fan Σ. Cells with full-dimensional recession cone are glued across points into
//! one divisor per maximal cone of Σ, either over the whole curve (when that divisor is proper)
//! or as a cover by affine charts. Remaining cells become divisors over a single point.
#![allow(dead_code, clippy::needless_range_loop)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use tvarih::divisor::Policy;
use tvarih::num::*;
use tvarih::*;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rat(r: &mut ChaCha8Rng, range: i64) -> Rat {
    let d = r.gen_range(1..=3);
    rat(r.gen_range(-range * d..=range * d), d)
}

pub fn random_curve(r: &mut ChaCha8Rng, max_genus: u32, max_points: usize) -> Curve {
    let genus = r.gen_range(0..=max_genus);
    let k = r.gen_range(2..=max_points.max(2));
    let labels: Vec<String> = ["0", "1", "inf", "a", "b", "c"]
        .iter()
        .take(k)
        .map(|s| s.to_string())
        .collect();
    Curve {
        genus,
        points: labels,
        policy: if genus == 0 { Policy::Genus0 } else { Policy::Generic },
    }
}

/// Divisors from a slice of every special point, as described in the module comment.
pub fn assemble(
    r: &mut ChaCha8Rng,
    curve: Curve,
    rank: usize,
    tail_cones: &[Cone],
    slices: &BTreeMap<String, Vec<Polyhedron>>,
) -> tvarih::Result<DivisorialFan> {
    let special: BTreeSet<String> = curve.points.iter().cloned().collect();
    let charts = |tail: &Cone, coeff: &BTreeMap<String, Polyhedron>| -> tvarih::Result<Vec<PolyDivisor>> {
        special
            .iter()
            .map(|p| {
                let ex = special.iter().filter(|q| *q != p).cloned().collect();
                PolyDivisor::new(tail.clone(), coeff.clone(), Locus::Affine(ex))
            })
            .collect()
    };
    let mut divs = Vec::new();
    for sigma in tail_cones {
        let mut coeff = BTreeMap::new();
        for (y, cells) in slices {
            let c = cells
                .iter()
                .find(|c| c.recession_cone() == *sigma)
                .expect("one cell per maximal cone");
            coeff.insert(y.clone(), c.clone());
        }
        let whole = PolyDivisor::new(sigma.clone(), coeff.clone(), Locus::Complete)?;
        if whole.is_proper(&curve)? && r.gen_bool(0.85) {
            divs.push(whole);
        } else {
            divs.extend(charts(sigma, &coeff)?);
        }
    }
    for (y, cells) in slices {
        for c in cells {
            let rc = c.recession_cone();
            if rc.dim() == rank {
                continue;
            }
            let ex = special.iter().filter(|q| *q != y).cloned().collect();
            divs.push(PolyDivisor::new(
                rc,
                [(y.clone(), c.clone())].into(),
                Locus::Affine(ex),
            )?);
        }
    }
    DivisorialFan::new(curve, rank, divs)
}

/// A complete C*-surface: every point gets a few breakpoints on the line.
pub fn random_surface(r: &mut ChaCha8Rng) -> DivisorialFan {
    loop {
        let curve = random_curve(r, 2, 4);
        let pos = Cone::from_generators(&[ivec(&[1])], 1);
        let neg = Cone::from_generators(&[ivec(&[-1])], 1);
        let mut slices = BTreeMap::new();
        for y in &curve.points {
            let m = r.gen_range(1..=3);
            let mut bs: Vec<Rat> = (0..m).map(|_| small_rat(r, 2)).collect();
            bs.sort();
            bs.dedup();
            let mut cells = vec![
                Polyhedron::translate_cone(vec![bs[0].clone()], &neg),
                Polyhedron::translate_cone(vec![bs[bs.len() - 1].clone()], &pos),
            ];
            for w in bs.windows(2) {
                cells.push(Polyhedron::polytope(vec![vec![w[0].clone()], vec![w[1].clone()]]));
            }
            slices.insert(y.clone(), cells);
        }
        if let Ok(f) = assemble(r, curve, 1, &[pos, neg], &slices) {
            return f;
        }
    }
}

/// A random convex lattice polygon with the origin in its interior.
fn random_polygon(r: &mut ChaCha8Rng) -> Vec<IVec> {
    loop {
        let k = r.gen_range(3..=6);
        let pts: Vec<QVec> = (0..k)
            .map(|_| qvec_from_ints(&[r.gen_range(-2..=2), r.gen_range(-2..=2)]))
            .collect();
        let p = Polyhedron::polytope(pts);
        if p.dim() == 2 && p.inequalities().0.iter().all(|(_, b)| *b < Rat::from_integer(0.into())) {
            return p
                .vertices()
                .iter()
                .map(|v| v.iter().map(|x| x.to_integer()).collect())
                .collect();
        }
    }
}

/// A complete threefold with a 2-torus action. Slices are regular subdivisions: lower hulls of
/// random lifted points plus the epigraph of the support function of a random polygon.
pub fn random_threefold(r: &mut ChaCha8Rng) -> DivisorialFan {
    loop {
        let curve = random_curve(r, 2, 3);
        let m = random_polygon(r);
        // epigraph of φ(x) = max ⟨m_i, x⟩ in coordinates (z, x, y)
        let ineqs: Vec<IVec> = m.iter().map(|mi| vec![Int::from(1), -&mi[0], -&mi[1]]).collect();
        let epi = Cone::from_hrep(&ineqs, &[], 3);
        let split = LatticeSplit::new(&[ivec(&[1, 0, 0])], 3);
        let tail_cells = match Polyhedron::from_cone(&epi).lower_hull_cells(&split) {
            Ok(c) => c,
            Err(_) => continue,
        };
        let tail_cones: Vec<Cone> = tail_cells
            .iter()
            .map(|c| c.cell.recession_cone())
            .filter(|c| c.dim() == 2)
            .collect();
        let mut slices = BTreeMap::new();
        let mut ok = true;
        for y in &curve.points {
            // heights roughly convex in the position, so that many points reach the lower hull
            // and the bounded part surrounds the origin
            let k = r.gen_range(1..=5);
            let mut verts = Vec::new();
            for _ in 0..k {
                let (x, y) = (small_rat(r, 2), small_rat(r, 2));
                let h = &x * &x + &y * &y + rat(r.gen_range(0..=2), 2);
                verts.push(vec![h, x, y]);
            }
            verts.shuffle(r);
            let q = Polyhedron::new(verts, epi.rays().to_vec());
            match q.lower_hull_cells(&split) {
                Ok(cells) => {
                    slices.insert(y.clone(), cells.into_iter().map(|c| c.cell).collect::<Vec<_>>());
                }
                Err(_) => ok = false,
            }
        }
        if !ok {
            continue;
        }
        if let Ok(f) = assemble(r, curve, 2, &tail_cones, &slices) {
            return f;
        }
    }
}

/// g of a pointed cone from its definition: project the proper faces along an interior ray,
/// take h of the resulting complete fan and truncate (1 − t²)·h below the middle degree.
pub fn g_by_projection(c: &Cone) -> Polynomial {
    let d = c.dim();
    if d <= 1 {
        return Polynomial::one();
    }
    // work inside the span of the cone
    let span = LatticeSplit::new(c.rays(), c.ambient());
    let full = c.map_with(|v| span.sub_i(v), d);
    let rho = primitive(&full.relative_interior_point());
    let split = LatticeSplit::new(&[rho], d);
    let facets: Vec<Cone> = full
        .faces()
        .into_iter()
        .filter(|f| f.dim() + 1 == d)
        .map(|f| f.map_with(|v| split.quot_i(v), d - 1))
        .collect();
    let fan = Fan::new(&facets, d - 1).expect("projected boundary is a fan");
    let h = tvarih::toric::h_fan(&fan).expect("projected boundary is complete");
    (&Polynomial::new(vec![1, 0, -1]) * &h).truncate(d - 1)
}

/// The properties every Poincaré report must satisfy; returns the first violation.
pub fn check_report(fan: &DivisorialFan, rep: &PoincareReport) -> std::result::Result<(), String> {
    let p = &rep.poincare;
    let dim = fan.rank() + 1;
    if !p.is_palindromic(2 * dim) {
        return Err(format!("{} is not palindromic in degree {}", p, 2 * dim));
    }
    if p.coeff(0) != 1 {
        return Err(format!("{} has constant term {}", p, p.coeff(0)));
    }
    if p.coeffs().iter().any(|&c| c < 0) {
        return Err(format!("{} has a negative coefficient", p));
    }
    if fan.curve().genus == 0 && p.coeffs().iter().skip(1).step_by(2).any(|&c| c != 0) {
        return Err(format!("{} has odd cohomology over a rational curve", p));
    }
    let k = rep.orbits.len();
    let mut r = vec![vec![None; k]; k];
    for (a, b, v) in &rep.r_entries {
        r[*a][*b] = Some(v.clone());
    }
    for (a, o) in rep.orbits.iter().enumerate() {
        let s = &o.multiplicity;
        if !s.is_nonnegative() || !s.is_symmetric() {
            return Err(format!("S of orbit {} is {:?}", a, s));
        }
        if r[a][a] != Some(LaurentPolynomial::monomial(1, -(o.orbit_dim as i64))) {
            return Err(format!("R({}, {}) is {:?}", a, a, r[a][a]));
        }
    }
    for b in 0..k {
        let mut lhs = LaurentPolynomial::zero();
        for a in 0..k {
            if let Some(v) = &r[a][b] {
                lhs = &lhs + &(v * &rep.orbits[a].multiplicity);
            }
        }
        let o = &rep.orbits[b];
        let q = (&o.relative_spectrum.to_laurent() - &o.attractive.to_laurent()).shift(-(dim as i64));
        if lhs != q {
            return Err(format!("stalk identity fails at orbit {}: {:?} vs {:?}", b, lhs, q));
        }
    }
    Ok(())
}
