use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Base field of every computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    /// Prime field F_p with p < 2^31.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if !(2..1 << 31).contains(&p) || !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p as u64,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp(Fp { v: 0, p: *p as u64 }),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let p = *p as u64;
                Scalar::Fp(Fp { v: n.rem_euclid(p as i64) as u64, p })
            }
        }
    }

    /// Maps a rational number into the field; fails when the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::Q(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let reduce = |n: &BigInt| -> u64 {
                    let r = ((n % &pb) + &pb) % &pb;
                    r.to_u64().unwrap()
                };
                let num = reduce(q.numer());
                let den = reduce(q.denom());
                if den == 0 {
                    return Err(Error::InvalidField(format!(
                        "denominator of {q} vanishes modulo {p}"
                    )));
                }
                let p = *p as u64;
                let d = Fp { v: den, p }.inv();
                Ok(Scalar::Fp(Fp { v: num, p }) * Scalar::Fp(d))
            }
        }
    }

    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let q = parse_rational(text)?;
        self.from_rational(&q)
    }

    /// Every element of a finite field, in the order 0, 1, ..., p-1.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..*p as u64).map(|v| Scalar::Fp(Fp { v, p: *p as u64 })).collect()),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Field::Rationals => "Q".to_string(),
            Field::Prime(p) => format!("F_{p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    BigRational::from_str(t).map_err(|_| Error::Parse {
        location: String::new(),
        message: format!("not a rational number: {text:?}"),
    })
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of F_p carrying its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl Fp {
    pub fn inv(self) -> Fp {
        assert!(self.v != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on (v, p)
        let (mut a, mut b) = (self.v as i64, self.p as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        Fp { v: x0.rem_euclid(self.p as i64) as u64, p: self.p }
    }
}

/// Exact field element: an arbitrary-precision rational or a residue mod p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp(Fp),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp(x) => x.v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp(x) => x.v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rationals,
            Scalar::Fp(x) => Field::Prime(x.p as u32),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(q) => {
                assert!(!q.is_zero(), "inverse of zero");
                Scalar::Q(q.recip())
            }
            Scalar::Fp(x) => Scalar::Fp(x.inv()),
        }
    }

    pub fn zero_like(&self) -> Scalar {
        self.field().zero()
    }

    pub fn one_like(&self) -> Scalar {
        self.field().one()
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(q) => Some(q),
            Scalar::Fp(_) => None,
        }
    }

    /// Representative in [0, p) for prime-field elements.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp(x) => Some(x.v),
            Scalar::Q(_) => None,
        }
    }

    pub fn sign(&self) -> i32 {
        match self {
            Scalar::Q(q) if q.is_positive() => 1,
            Scalar::Q(q) if q.is_negative() => -1,
            Scalar::Q(_) => 0,
            Scalar::Fp(x) => (x.v != 0) as i32,
        }
    }

    pub fn add_assign_ref(&mut self, other: &Scalar) {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            (Scalar::Fp(a), Scalar::Fp(b)) => {
                debug_assert_eq!(a.p, b.p);
                a.v = (a.v + b.v) % a.p;
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    /// self -= a * b
    pub fn sub_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::Q(s), Scalar::Q(a), Scalar::Q(b)) => *s -= a * b,
            (Scalar::Fp(s), Scalar::Fp(a), Scalar::Fp(b)) => {
                let prod = a.v * b.v % s.p;
                s.v = (s.v + s.p - prod) % s.p;
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    /// self += a * b
    pub fn add_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (Scalar::Q(s), Scalar::Q(a), Scalar::Q(b)) => *s += a * b,
            (Scalar::Fp(s), Scalar::Fp(a), Scalar::Fp(b)) => {
                s.v = (s.v + a.v * b.v) % s.p;
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => write!(f, "{q}"),
            Scalar::Fp(x) => write!(f, "{}", x.v),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(Fp { v: (a.v + b.v) % a.p, p: a.p }),
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(Fp { v: (a.v + a.p - b.v) % a.p, p: a.p }),
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(Fp { v: a.v * b.v % a.p, p: a.p }),
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp(a) => Scalar::Fp(Fp { v: (a.p - a.v) % a.p, p: a.p }),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse() {
        let f = Field::prime(7).unwrap();
        for v in 1..7 {
            let x = f.from_i64(v);
            assert!((&x * &x.inv()).is_one());
        }
    }

    #[test]
    fn rational_into_fp() {
        let f = Field::Prime(5);
        let half = f.parse("1/2").unwrap();
        assert_eq!(half, f.from_i64(3));
        assert!(f.parse("1/5").is_err());
        assert_eq!(f.parse("-3").unwrap(), f.from_i64(2));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(2).is_ok());
    }
}
