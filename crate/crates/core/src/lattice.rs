//! Exact linear algebra over Q and Z: elimination, kernels, saturation and lattice complements.

use crate::num::*;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[QVec], n: usize) -> (Vec<QVec>, Vec<usize>) {
    let mut m: Vec<QVec> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rat::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..n {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank_q(rows: &[QVec], n: usize) -> usize {
    rref(rows, n).1.len()
}

pub fn rank_i(rows: &[IVec], n: usize) -> usize {
    if let Some(r) = rank_small(rows, n) {
        return r;
    }
    let q: Vec<QVec> = rows.iter().map(|r| to_q(r)).collect();
    rank_q(&q, n)
}

/// Fraction-free elimination in machine integers; None on overflow.
fn rank_small(rows: &[IVec], n: usize) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x).ok().map(i128::from)).collect())
        .collect::<Option<_>>()?;
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let mut g = 0i128;
            for j in 0..n {
                let v = a.checked_mul(m[i][j])?.checked_sub(b.checked_mul(m[r][j])?)?;
                m[i][j] = v;
                g = gcd128(g, v);
            }
            if g > 1 {
                for x in m[i].iter_mut() {
                    *x /= g;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    Some(r)
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Basis of {x : rows·x = 0} over Q, each vector scaled to a primitive integer vector.
pub fn nullspace(rows: &[QVec], n: usize) -> Vec<IVec> {
    if let Some(v) = nullspace_small(rows, n) {
        return v;
    }
    let (m, pivots) = rref(rows, n);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        out.push(primitive_q(&v));
    }
    out
}

/// The same basis as the rational reduced echelon form gives, computed fraction-free in
/// machine integers; None on overflow or large entries.
fn nullspace_small(rows: &[QVec], n: usize) -> Option<Vec<IVec>> {
    let mut m: Vec<Vec<i128>> = Vec::with_capacity(rows.len());
    for r in rows {
        let l = denom_lcm(r);
        let row: Vec<i128> = r
            .iter()
            .map(|x| i64::try_from(&(x * rat_int(&l)).to_integer()).ok().map(i128::from))
            .collect::<Option<_>>()?;
        m.push(row);
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i == r || m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let mut g = 0i128;
            for j in 0..n {
                let v = a.checked_mul(m[i][j])?.checked_sub(b.checked_mul(m[r][j])?)?;
                m[i][j] = v;
                g = gcd128(g, v);
            }
            if g > 1 {
                for x in m[i].iter_mut() {
                    *x /= g;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut l: i128 = 1;
    for (row, &pc) in m.iter().zip(&pivots) {
        let p = row[pc].abs();
        l = (l / gcd128(l, p)).checked_mul(p)?;
    }
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0i128; n];
        v[free] = l;
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -(row[free].checked_mul(l / row[pc])?);
        }
        let g = v.iter().fold(0, |g, &x| gcd128(g, x));
        out.push(v.iter().map(|&x| Int::from(x / g)).collect());
    }
    Some(out)
}

pub fn nullspace_i(rows: &[IVec], n: usize) -> Vec<IVec> {
    let q: Vec<QVec> = rows.iter().map(|r| to_q(r)).collect();
    nullspace(&q, n)
}

/// Solve x·A = b for x where A is given by its rows; None when inconsistent.
pub fn solve_left(rows: &[QVec], b: &[Rat]) -> Option<QVec> {
    // x·A = b  <=>  A^T x = b
    let k = rows.len();
    let n = b.len();
    let mut aug: Vec<QVec> = (0..n)
        .map(|j| {
            let mut r: QVec = (0..k).map(|i| rows[i][j].clone()).collect();
            r.push(b[j].clone());
            r
        })
        .collect();
    let (m, pivots) = {
        let (m, p) = rref(&aug, k + 1);
        aug.clear();
        (m, p)
    };
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Rat::zero(); k];
    for (row, &pc) in m.iter().zip(&pivots) {
        x[pc] = row[k].clone();
    }
    Some(x)
}

/// Unimodular column reduction: returns (rank, U) with A·U lower echelon, the last
/// n - rank columns of A·U zero. U is stored row-major (n x n).
pub fn column_echelon(a: &[IVec], n: usize) -> (usize, Vec<IVec>) {
    let mut w: Vec<IVec> = a.to_vec();
    let mut u: Vec<IVec> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect();
    let mut c = 0;
    for i in 0..w.len() {
        if c == n {
            break;
        }
        if (c..n).all(|j| w[i][j].is_zero()) {
            continue;
        }
        for j in c + 1..n {
            if w[i][j].is_zero() {
                continue;
            }
            if w[i][c].is_zero() {
                swap_cols(&mut w, &mut u, c, j);
                continue;
            }
            let x = w[i][c].clone();
            let y = w[i][j].clone();
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let xp = &x / &g;
            let yp = &y / &g;
            // col_c <- s col_c + t col_j ; col_j <- -yp col_c + xp col_j
            combine_cols(&mut w, c, j, &s, &t, &(-&yp), &xp);
            combine_cols(&mut u, c, j, &s, &t, &(-&yp), &xp);
        }
        if w[i][c].is_negative() {
            negate_col(&mut w, c);
            negate_col(&mut u, c);
        }
        c += 1;
    }
    (c, u)
}

fn swap_cols(w: &mut [IVec], u: &mut [IVec], a: usize, b: usize) {
    for r in w.iter_mut() {
        r.swap(a, b);
    }
    for r in u.iter_mut() {
        r.swap(a, b);
    }
}

fn negate_col(m: &mut [IVec], c: usize) {
    for r in m.iter_mut() {
        r[c] = -r[c].clone();
    }
}

fn combine_cols(m: &mut [IVec], c: usize, j: usize, a: &Int, b: &Int, cc: &Int, d: &Int) {
    for r in m.iter_mut() {
        let x = r[c].clone();
        let y = r[j].clone();
        r[c] = a * &x + b * &y;
        r[j] = cc * &x + d * &y;
    }
}

/// Z-basis of the integer kernel {x ∈ Z^n : A x = 0}.
pub fn kernel_z(a: &[IVec], n: usize) -> Vec<IVec> {
    let (r, u) = column_echelon(a, n);
    (r..n).map(|j| (0..n).map(|i| u[i][j].clone()).collect()).collect()
}

/// Z-basis of span_Q(vectors) ∩ Z^n.
pub fn saturated_basis(vectors: &[IVec], n: usize) -> Vec<IVec> {
    let perp = nullspace_i(vectors, n);
    kernel_z(&perp, n)
}

/// Inverse of a square rational matrix (rows), None if singular.
pub fn inverse_q(m: &[QVec]) -> Option<Vec<QVec>> {
    let n = m.len();
    let aug: Vec<QVec> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            v
        })
        .collect();
    let (red, piv) = rref(&aug, 2 * n);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A splitting N = L ⊕ L' of Z^n where L = span(sub) ∩ Z^n is saturated.
///
/// `basis` holds a Z-basis of Z^n as rows: the first `k` rows span L, the others a complement.
/// `coords` is the inverse matrix, so that the coordinates of v are v·coords.
#[derive(Clone, Debug)]
pub struct LatticeSplit {
    pub n: usize,
    pub k: usize,
    pub basis: Vec<IVec>,
    pub coords: Vec<IVec>,
}

impl LatticeSplit {
    pub fn new(sub: &[IVec], n: usize) -> Self {
        let l = saturated_basis(sub, n);
        let k = l.len();
        let (_, mut u) = column_echelon(&l, n);
        let uq: Vec<QVec> = u.iter().map(|r| to_q(r)).collect();
        let inv = inverse_q(&uq).expect("unimodular matrix is invertible");
        let mut basis: Vec<IVec> = inv.iter().map(|r| r.iter().map(|x| x.to_integer()).collect()).collect();
        // Keep a single given primitive generator as the first basis vector verbatim.
        if k == 1 && sub.len() == 1 && basis[0] == neg_i(&sub[0]) {
            basis[0] = sub[0].clone();
            for r in u.iter_mut() {
                r[0] = -r[0].clone();
            }
        }
        LatticeSplit { n, k, basis, coords: u }
    }

    pub fn coords_q(&self, v: &[Rat]) -> QVec {
        (0..self.n)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .fold(Rat::zero(), |acc, (i, x)| acc + x * rat_int(&self.coords[i][j]))
            })
            .collect()
    }

    pub fn coords_i(&self, v: &[Int]) -> IVec {
        (0..self.n)
            .map(|j| v.iter().enumerate().map(|(i, x)| x * &self.coords[i][j]).sum())
            .collect()
    }

    /// Coordinates along the saturated sublattice L.
    pub fn sub_q(&self, v: &[Rat]) -> QVec {
        self.coords_q(v)[..self.k].to_vec()
    }

    /// Coordinates in the quotient Z^n / L (equivalently along the complement).
    pub fn quot_q(&self, v: &[Rat]) -> QVec {
        self.coords_q(v)[self.k..].to_vec()
    }

    pub fn quot_i(&self, v: &[Int]) -> IVec {
        self.coords_i(v)[self.k..].to_vec()
    }

    pub fn sub_i(&self, v: &[Int]) -> IVec {
        self.coords_i(v)[..self.k].to_vec()
    }

    /// Vector of Z^n from coordinates in the split basis.
    pub fn from_coords_q(&self, c: &[Rat]) -> QVec {
        let mut out = vec![Rat::zero(); self.n];
        for (ci, row) in c.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(row) {
                *o += ci * rat_int(x);
            }
        }
        out
    }

    /// Complement basis vectors (rows k..n of `basis`).
    pub fn complement(&self) -> &[IVec] {
        &self.basis[self.k..]
    }
}

pub fn det_i(m: &[IVec]) -> Int {
    let n = m.len();
    let mut a: Vec<QVec> = m.iter().map(|r| to_q(r)).collect();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Int::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c].clone();
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let d = &f * &a[c][j];
                    a[i][j] -= d;
                }
            }
        }
    }
    det.to_integer()
}

/// Apply a linear map given by the images of the standard basis (rows) to a vector:
/// v ↦ Σ v_i · rows_i.
pub fn apply_rows_q(rows: &[IVec], v: &[Rat]) -> QVec {
    let m = rows.first().map_or(0, |r| r.len());
    let mut out = vec![Rat::zero(); m];
    for (x, row) in v.iter().zip(rows) {
        for (o, a) in out.iter_mut().zip(row) {
            *o += x * rat_int(a);
        }
    }
    out
}

pub fn apply_rows_i(rows: &[IVec], v: &[Int]) -> IVec {
    let m = rows.first().map_or(0, |r| r.len());
    let mut out = vec![Int::zero(); m];
    for (x, row) in v.iter().zip(rows) {
        for (o, a) in out.iter_mut().zip(row) {
            *o += x * a;
        }
    }
    out
}
