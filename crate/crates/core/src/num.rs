//! Scalar and vector helpers over exact integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type IVec = Vec<BigInt>;
pub type QVec = Vec<BigRational>;

pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(v: &Int) -> Rat {
    BigRational::from_integer(v.clone())
}

pub fn ivec(v: &[i64]) -> IVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn qvec(v: &[(i64, i64)]) -> QVec {
    v.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// Integer vector as rationals.
pub fn to_q(v: &[Int]) -> QVec {
    v.iter().map(rat_int).collect()
}

pub fn qvec_from_ints(v: &[i64]) -> QVec {
    v.iter().map(|&x| rat(x, 1)).collect()
}

pub fn dot_ii(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_qq(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_iq(a: &[Int], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + y * rat_int(x))
}

pub fn is_zero_i(v: &[Int]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn is_zero_q(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn content(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divide an integer vector by the gcd of its entries. The zero vector is returned unchanged.
pub fn primitive(v: &[Int]) -> IVec {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Smallest positive integer multiple of a rational vector that is integral, made primitive.
pub fn primitive_q(v: &[Rat]) -> IVec {
    let l = denom_lcm(v);
    let iv: IVec = v.iter().map(|x| (x * rat_int(&l)).to_integer()).collect();
    primitive(&iv)
}

/// Least common multiple of the denominators.
pub fn denom_lcm(v: &[Rat]) -> Int {
    v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()))
}

pub fn add_q(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_q(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_q(a: &[Rat], s: &Rat) -> QVec {
    a.iter().map(|x| x * s).collect()
}

pub fn neg_i(a: &[Int]) -> IVec {
    a.iter().map(|x| -x).collect()
}

pub fn is_integral(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn sign(x: &Int) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Format a rational the way the JSON interface expects: integers bare, otherwise "p/q".
pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse "p/q", "p" or a decimal integer string.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: Int = n.trim().parse().ok()?;
        let d: Int = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: Int = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_divides_by_gcd() {
        assert_eq!(primitive(&ivec(&[2, 4])), ivec(&[1, 2]));
        assert_eq!(primitive(&ivec(&[-3, 6, 9])), ivec(&[-1, 2, 3]));
        assert_eq!(primitive(&ivec(&[0, 0])), ivec(&[0, 0]));
    }

    #[test]
    fn primitive_of_rational_direction() {
        assert_eq!(primitive_q(&qvec(&[(1, 2), (1, 1)])), ivec(&[1, 2]));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rat("1/2"), Some(rat(1, 2)));
        assert_eq!(parse_rat("-4/6"), Some(rat(-2, 3)));
        assert_eq!(parse_rat("7"), Some(rat(7, 1)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
        assert_eq!(fmt_rat(&rat(3, -6)), "-1/2");
    }
}
