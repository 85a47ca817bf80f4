//! g-polynomials of cones and face intervals, h-polynomials of complete fans, relative g.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::face::FaceLattice;
use crate::fan::Fan;
use crate::poly::Polynomial;
use once_cell::sync::Lazy;
use parking_lot::Mutex;
use std::collections::HashMap;

static G_MEMO: Lazy<Mutex<HashMap<Cone, Polynomial>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// (s − 1)^k as a polynomial in s.
fn s_minus_one_pow(k: usize) -> Polynomial {
    Polynomial::new(vec![-1, 1]).pow(k as u32)
}

/// g-polynomials of face intervals, as polynomials in s = t².
pub struct IntervalG<'a> {
    lat: &'a FaceLattice,
    memo: HashMap<(usize, usize), Polynomial>,
}

impl<'a> IntervalG<'a> {
    pub fn new(lat: &'a FaceLattice) -> Self {
        IntervalG {
            lat,
            memo: HashMap::new(),
        }
    }

    /// g of the Eulerian interval [a, b], in s.
    pub fn g(&mut self, a: usize, b: usize) -> Polynomial {
        if let Some(p) = self.memo.get(&(a, b)) {
            return p.clone();
        }
        let lat = self.lat;
        let r = (lat.dim(b) - lat.dim(a)) as usize;
        let out = if r <= 2 {
            Polynomial::one()
        } else {
            let mut big_b = Polynomial::zero();
            for c in lat.interval(a, b) {
                if c == b {
                    continue;
                }
                let k = r - 1 - (lat.dim(c) - lat.dim(a)) as usize;
                big_b = &big_b + &(&s_minus_one_pow(k) * &self.g(a, c));
            }
            (&Polynomial::new(vec![1, -1]) * &big_b).truncate((r - 1) / 2)
        };
        self.memo.insert((a, b), out.clone());
        out
    }
}

/// g of a face interval, in t.
pub fn g_interval(lat: &FaceLattice, a: usize, b: usize) -> Polynomial {
    IntervalG::new(lat).g(a, b).substitute_t_squared()
}

/// g-polynomial of a strictly convex cone, in t.
pub fn g_cone(c: &Cone) -> Result<Polynomial> {
    if !c.is_strictly_convex() {
        return Err(Error::Precondition(format!("g of the non-pointed cone {:?}", c)));
    }
    if c.dim() <= 2 {
        return Ok(Polynomial::one());
    }
    if let Some(p) = G_MEMO.lock().get(c) {
        return Ok(p.clone());
    }
    let lat = FaceLattice::of_cone(c);
    let g = g_interval(&lat, lat.bottom(), lat.top());
    G_MEMO.lock().insert(c.clone(), g.clone());
    Ok(g)
}

/// h-polynomial of a complete fan, in t.
pub fn h_fan(f: &Fan) -> Result<Polynomial> {
    if !f.is_complete() {
        return Err(Error::Incomplete(format!(
            "{} maximal cones in dimension {}",
            f.maximal_cones().len(),
            f.ambient()
        )));
    }
    let n = f.ambient();
    let mut h = Polynomial::zero();
    for c in f.cones() {
        let g = g_cone(c)?.even_part_in_s().expect("g is even");
        h = &h + &(&s_minus_one_pow(n - c.dim()) * &g);
    }
    Ok(h.substitute_t_squared())
}

/// Relative g-polynomials g(E, F) for a fixed F, for every E ⪰ F, in t.
///
/// They are the unique solution of g(E) = Σ_{F ⪯ G ⪯ E} g(G, F)·g([G, E]).
pub fn relative_g_all(lat: &FaceLattice, f: usize) -> HashMap<usize, Polynomial> {
    let mut ig = IntervalG::new(lat);
    let bot = lat.bottom();
    let mut ups: Vec<usize> = (0..lat.len()).filter(|&e| lat.leq(f, e)).collect();
    ups.sort_by_key(|&e| lat.dim(e));
    let mut out: HashMap<usize, Polynomial> = HashMap::new();
    for e in ups {
        let mut v = ig.g(bot, e);
        for (&g, rel) in out.iter() {
            if g != e && lat.leq(g, e) {
                v = &v - &(rel * &ig.g(g, e));
            }
        }
        out.insert(e, v);
    }
    out.into_iter().map(|(k, v)| (k, v.substitute_t_squared())).collect()
}

pub fn relative_g(lat: &FaceLattice, e: usize, f: usize) -> Result<Polynomial> {
    if !lat.leq(f, e) {
        return Err(Error::Precondition("relative g needs F below E".into()));
    }
    Ok(relative_g_all(lat, f).remove(&e).expect("E lies above F"))
}
