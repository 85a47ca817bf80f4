//! Double description: the V-representation of {x : A x >= 0, E x = 0} in exact integers.

use crate::lattice::nullspace_i;
use crate::num::*;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    fn with_len(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.0.len() {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn subset_of(&self, o: &Bits) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, a)| a & !o.0.get(i).copied().unwrap_or(0) == 0)
    }
}

/// Lineality basis and extreme rays (modulo lineality) of a polyhedral cone.
#[derive(Clone, Debug, Default)]
pub struct VRep {
    pub lineality: Vec<IVec>,
    pub rays: Vec<IVec>,
}

/// The arithmetic double description needs. Machine integers report overflow with `None`.
trait DdNum: Clone + Ord + Sized {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn is_one(&self) -> bool;
}

impl DdNum for Int {
    fn zero() -> Self {
        <Int as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn gcd(&self, o: &Self) -> Self {
        num_integer::Integer::gcd(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
}

impl DdNum for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn is_positive(&self) -> bool {
        *self > 0
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.abs(), o.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

fn dot<T: DdNum>(a: &[T], b: &[T]) -> Option<T> {
    a.iter().zip(b).try_fold(T::zero(), |acc, (x, y)| acc.add(&x.mul(y)?))
}

fn prim<T: DdNum>(v: Vec<T>) -> Vec<T> {
    let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.iter().map(|x| x.div(&g)).collect()
}

/// a·x + b·y, made primitive.
fn comb<T: DdNum>(a: &T, x: &[T], b: &T, y: &[T]) -> Option<Vec<T>> {
    let v = x
        .iter()
        .zip(y)
        .map(|(u, w)| a.mul(u)?.add(&b.mul(w)?))
        .collect::<Option<Vec<T>>>()?;
    Some(prim(v))
}

struct Ray<T> {
    v: Vec<T>,
    zeros: Bits,
}

pub fn hrep_to_vrep(ineqs: &[IVec], eqs: &[IVec], n: usize) -> VRep {
    let lin: Vec<IVec> = if eqs.is_empty() {
        (0..n)
            .map(|i| (0..n).map(|j| Int::from((i == j) as i64)).collect())
            .collect()
    } else {
        nullspace_i(eqs, n)
    };
    let small = |v: &IVec| {
        v.iter()
            .map(|x| i64::try_from(x).ok().map(i128::from))
            .collect::<Option<Vec<i128>>>()
    };
    let fast = ineqs
        .iter()
        .map(small)
        .collect::<Option<Vec<_>>>()
        .zip(lin.iter().map(small).collect::<Option<Vec<_>>>())
        .and_then(|(a, l)| dd_core(&a, l));
    let (lin, rays): (Vec<IVec>, Vec<IVec>) = match fast {
        Some((l, r)) => {
            let big = |v: Vec<i128>| v.into_iter().map(Int::from).collect::<IVec>();
            (l.into_iter().map(big).collect(), r.into_iter().map(big).collect())
        }
        None => dd_core(ineqs, lin).expect("exact arithmetic does not overflow"),
    };
    let mut rays = rays;
    rays.sort();
    rays.dedup();
    VRep { lineality: lin, rays }
}

fn dd_core<T: DdNum>(ineqs: &[Vec<T>], mut lin: Vec<Vec<T>>) -> Option<(Vec<Vec<T>>, Vec<Vec<T>>)> {
    let mut rays: Vec<Ray<T>> = Vec::new();
    let m = ineqs.len();
    for (k, a) in ineqs.iter().enumerate() {
        if a.iter().all(|x| x.is_zero()) {
            continue;
        }
        let mut i0 = None;
        for (i, l) in lin.iter().enumerate() {
            if !dot(a, l)?.is_zero() {
                i0 = Some(i);
                break;
            }
        }
        if let Some(i0) = i0 {
            let mut l0 = lin.remove(i0);
            let mut al0 = dot(a, &l0)?;
            if al0.is_negative() {
                l0 = l0.iter().map(|x| x.neg()).collect();
                al0 = al0.neg();
            }
            for l in lin.iter_mut() {
                let al = dot(a, l)?;
                if !al.is_zero() {
                    *l = comb(&al0, l, &al.neg(), &l0)?;
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v)?;
                if !ar.is_zero() {
                    r.v = comb(&al0, &r.v, &ar.neg(), &l0)?;
                }
                r.zeros.set(k);
            }
            let mut zeros = Bits::with_len(m);
            for j in 0..k {
                zeros.set(j);
            }
            rays.push(Ray { v: prim(l0), zeros });
            continue;
        }
        let vals = rays.iter().map(|r| dot(a, &r.v)).collect::<Option<Vec<T>>>()?;
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (i, r) in rays.iter_mut().enumerate() {
                if vals[i].is_zero() {
                    r.zeros.set(k);
                }
            }
            continue;
        }
        let mut fresh: Vec<Ray<T>> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let z = rays[p].zeros.and(&rays[q].zeros);
                let adjacent = (0..rays.len()).all(|r| r == p || r == q || !z.subset_of(&rays[r].zeros));
                if !adjacent {
                    continue;
                }
                let v = comb(&vals[p], &rays[q].v, &vals[q].neg(), &rays[p].v)?;
                let mut zeros = z;
                zeros.set(k);
                fresh.push(Ray { v, zeros });
            }
        }
        let mut kept: Vec<Ray<T>> = Vec::new();
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                r.zeros.set(k);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
    }
    Some((
        lin.into_iter().map(prim).collect(),
        rays.into_iter().map(|r| r.v).collect(),
    ))
}
