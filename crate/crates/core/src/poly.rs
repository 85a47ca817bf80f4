//! Integer polynomials and Laurent polynomials in t.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial with integer coefficients; `coeffs[i]` is the coefficient of t^i.
#[derive(Clone, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }
    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }
    pub fn one() -> Self {
        Polynomial::new(vec![1])
    }
    pub fn constant(c: i64) -> Self {
        Polynomial::new(vec![c])
    }
    /// c·t^k
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Polynomial::new(v)
    }
    pub fn t() -> Self {
        Polynomial::monomial(1, 1)
    }
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Polynomial::one(), |acc, _| &acc * self)
    }
    pub fn scale(&self, c: i64) -> Self {
        Polynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Drop all terms of degree > max.
    pub fn truncate(&self, max: usize) -> Self {
        Polynomial::new(self.coeffs.iter().take(max + 1).copied().collect())
    }

    /// p(t) ↦ p(t²).
    pub fn substitute_t_squared(&self) -> Self {
        let mut v = vec![0; self.coeffs.len() * 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[2 * i] = *c;
        }
        Polynomial::new(v)
    }

    /// Inverse of `substitute_t_squared`; None if some odd coefficient is nonzero.
    pub fn even_part_in_s(&self) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|&c| c != 0) {
            return None;
        }
        Some(Polynomial::new(self.coeffs.iter().step_by(2).copied().collect()))
    }

    /// t^d·p(1/t) = p(t).
    pub fn is_palindromic(&self, d: usize) -> bool {
        if self.degree().is_some_and(|x| x > d) {
            return false;
        }
        (0..=d).all(|i| self.coeff(i) == self.coeff(d - i))
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * x + c)
    }

    pub fn to_laurent(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_map(self.coeffs.iter().enumerate().map(|(i, &c)| (i as i64, c)).collect())
    }

    /// Highest degree first: "t^6 + t^4 + t^2 + 1".
    pub fn pretty(&self) -> String {
        pretty_terms(self.coeffs.iter().enumerate().rev().map(|(i, &c)| (i as i64, c)))
    }

    /// Lowest degree first: "1 + t^2".
    pub fn pretty_ascending(&self) -> String {
        pretty_terms(self.coeffs.iter().enumerate().map(|(i, &c)| (i as i64, c)))
    }

    /// Parses the output of `pretty` or `pretty_ascending`.
    pub fn parse(s: &str) -> Option<Self> {
        let l = LaurentPolynomial::parse(s)?;
        l.to_polynomial()
    }
}

fn pretty_terms(terms: impl Iterator<Item = (i64, i64)>) -> String {
    let mut out = String::new();
    for (i, c) in terms.filter(|&(_, c)| c != 0) {
        let mono = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{}", i),
        };
        let a = c.abs();
        let body = if mono.is_empty() {
            a.to_string()
        } else if a == 1 {
            mono
        } else {
            format!("{}{}", a, mono)
        };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}
impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}
impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Polynomial::new(v)
    }
}
impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-1)
    }
}
impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, o: Polynomial) -> Polynomial {
        &self + &o
    }
}
impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, o: Polynomial) -> Polynomial {
        &self - &o
    }
}
impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, o: Polynomial) -> Polynomial {
        &self * &o
    }
}

/// Laurent polynomial with integer coefficients, stored sparsely by degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn from_map(mut terms: BTreeMap<i64, i64>) -> Self {
        terms.retain(|_, c| *c != 0);
        LaurentPolynomial { terms }
    }
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }
    pub fn one() -> Self {
        LaurentPolynomial::monomial(1, 0)
    }
    pub fn monomial(c: i64, k: i64) -> Self {
        LaurentPolynomial::from_map([(k, c)].into_iter().collect())
    }
    pub fn terms(&self) -> &BTreeMap<i64, i64> {
        &self.terms
    }
    pub fn coeff(&self, k: i64) -> i64 {
        self.terms.get(&k).copied().unwrap_or(0)
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }
    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&d, &c)| (d + k, c)).collect(),
        }
    }

    /// t ↦ 1/t.
    pub fn reverse(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&d, &c)| (-d, c)).collect(),
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        LaurentPolynomial::from_map(self.terms.iter().map(|(&d, &x)| (d, x * c)).collect())
    }

    /// ±t^k, the units of Z[t, 1/t].
    pub fn as_unit(&self) -> Option<(i64, i64)> {
        if self.terms.len() == 1 {
            let (&d, &c) = self.terms.iter().next().unwrap();
            if c == 1 || c == -1 {
                return Some((c, d));
            }
        }
        None
    }

    pub fn inverse_unit(&self) -> Option<Self> {
        self.as_unit().map(|(c, d)| LaurentPolynomial::monomial(c, -d))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reverse()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    /// None if some term has negative degree.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        if self.min_degree().is_some_and(|d| d < 0) {
            return None;
        }
        let top = self.max_degree().unwrap_or(-1);
        Some(Polynomial::new((0..=top).map(|d| self.coeff(d)).collect()))
    }

    pub fn pretty(&self) -> String {
        pretty_terms(self.terms.iter().rev().map(|(&d, &c)| (d, c)))
    }

    pub fn parse(s: &str) -> Option<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Some(LaurentPolynomial::zero());
        }
        let mut terms = BTreeMap::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body
                .char_indices()
                .skip(1)
                .find(|&(i, c)| (c == '+' || c == '-') && !body[..i].ends_with('^'))
                .map_or(body.len(), |(i, _)| i);
            let term = &body[..end];
            rest = &body[end..];
            let (coef, deg) = match term.find('t') {
                None => (term.parse::<i64>().ok()?, 0),
                Some(p) => {
                    let c = if p == 0 { 1 } else { term[..p].parse::<i64>().ok()? };
                    let d = match &term[p + 1..] {
                        "" => 1,
                        e => e.strip_prefix('^')?.parse::<i64>().ok()?,
                    };
                    (c, d)
                }
            };
            *terms.entry(deg).or_insert(0) += sign * coef;
        }
        Some(LaurentPolynomial::from_map(terms))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        let mut t = self.terms.clone();
        for (&d, &c) in &o.terms {
            *t.entry(d).or_insert(0) += c;
        }
        LaurentPolynomial::from_map(t)
    }
}
impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        self + &o.scale(-1)
    }
}
impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        let mut t = BTreeMap::new();
        for (&a, &x) in &self.terms {
            for (&b, &y) in &o.terms {
                *t.entry(a + b).or_insert(0) += x * y;
            }
        }
        LaurentPolynomial::from_map(t)
    }
}
impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, o: LaurentPolynomial) -> LaurentPolynomial {
        &self + &o
    }
}
impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, o: LaurentPolynomial) -> LaurentPolynomial {
        &self - &o
    }
}
impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, o: LaurentPolynomial) -> LaurentPolynomial {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation() {
        let p = Polynomial::new(vec![1, 2, 1, 0, -1]);
        assert_eq!(p.truncate(1), Polynomial::new(vec![1, 2]));
    }

    #[test]
    fn reverse_laurent() {
        let p = &LaurentPolynomial::monomial(1, -1) + &LaurentPolynomial::monomial(3, 0);
        let q = &LaurentPolynomial::monomial(1, 1) + &LaurentPolynomial::monomial(3, 0);
        assert_eq!(p.reverse(), q);
    }

    #[test]
    fn multiplicative_identity() {
        let p = Polynomial::new(vec![3, 0, -2, 5]);
        assert_eq!(&p * &Polynomial::one(), p);
    }

    #[test]
    fn pretty_strings() {
        let p = Polynomial::new(vec![1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(p.pretty(), "t^6 + t^4 + t^2 + 1");
        assert_eq!(Polynomial::new(vec![1, 0, 1]).pretty_ascending(), "1 + t^2");
        assert_eq!(Polynomial::new(vec![0, -2, 3]).pretty(), "3t^2 - 2t");
        assert_eq!(Polynomial::zero().pretty(), "0");
    }

    #[test]
    fn pretty_round_trip() {
        for c in [vec![1, 0, 1, 0, 1], vec![0, -2, 3], vec![7], vec![-1, 1], vec![]] {
            let p = Polynomial::new(c);
            assert_eq!(Polynomial::parse(&p.pretty()), Some(p.clone()));
            assert_eq!(Polynomial::parse(&p.pretty_ascending()), Some(p));
        }
        let l = LaurentPolynomial::monomial(2, -3);
        assert_eq!(LaurentPolynomial::parse(&l.pretty()), Some(l));
    }

    #[test]
    fn palindromes() {
        assert!(Polynomial::new(vec![1, 1, 1]).is_palindromic(2));
        assert!(!Polynomial::new(vec![1, 2]).is_palindromic(2));
        assert!(Polynomial::new(vec![0, 1]).is_palindromic(2));
    }

    #[test]
    fn units() {
        let u = LaurentPolynomial::monomial(-1, 3);
        assert_eq!(&u * &u.inverse_unit().unwrap(), LaurentPolynomial::one());
        assert!(LaurentPolynomial::monomial(2, 0).as_unit().is_none());
    }
}
