use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::{Field, Scalar};

/// Univariate polynomial, coefficients from the constant term upwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Poly {
        let f = c.field();
        Poly::new(f, vec![c])
    }

    /// t - root
    pub fn linear(root: &Scalar) -> Poly {
        let f = root.field();
        Poly::new(f, vec![-root, f.one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j].add_mul_assign(a, b);
            }
        }
        Poly::new(self.field, c)
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&l.inv()),
            None => self.clone(),
        }
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() * &lead_inv;
            if !f.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate() {
                    rem[k + i].sub_mul_assign(&f, c);
                }
            }
            quot[k] = f;
            rem.pop();
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    /// (g, u, v) with u*self + v*other = g, g monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::constant(f.one()), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::constant(f.one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            Some(l) => {
                let inv = l.inv();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// Roots lying in the base field, without multiplicity, in a deterministic order.
    ///
    /// Over F_p the search is exhaustive for p below 10^5; over Q the rational
    /// root test is used when the integer coefficients are small enough to factor.
    pub fn roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        match self.field {
            Field::Prime(p) if p <= 100_000 => {
                self.field.elements().unwrap().into_iter().filter(|x| self.eval(x).is_zero()).collect()
            }
            Field::Prime(_) => Vec::new(),
            Field::Rationals => self.rational_roots(),
        }
    }

    fn rational_roots(&self) -> Vec<Scalar> {
        let mut ints = integer_coefficients(&self.coeffs);
        let mut roots = Vec::new();
        if ints[0].is_zero() {
            roots.push(self.field.zero());
            while ints.first().is_some_and(Zero::is_zero) {
                ints.remove(0);
            }
        }
        if ints.len() <= 1 {
            return roots;
        }
        let (Some(a0), Some(an)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
            return roots;
        };
        let mut cands: Vec<BigRational> = Vec::new();
        for p in &a0 {
            for q in &an {
                for s in [1, -1] {
                    let r = BigRational::new(BigInt::from(s) * p, q.clone());
                    if !cands.contains(&r) {
                        cands.push(r);
                    }
                }
            }
        }
        cands.sort();
        for r in cands {
            let x = Scalar::Q(r);
            if self.eval(&x).is_zero() && !roots.contains(&x) {
                roots.push(x);
            }
        }
        roots
    }
}

fn integer_coefficients(coeffs: &[Scalar]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in coeffs {
        l = l.lcm(c.as_rational().unwrap().denom());
    }
    coeffs
        .iter()
        .map(|c| {
            let q = c.as_rational().unwrap();
            q.numer() * (&l / q.denom())
        })
        .collect()
}

/// Positive divisors of |n|, or None when n is too large to factor by trial division.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: Field, c: &[i64]) -> Poly {
        Poly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    #[test]
    fn rational_roots_of_quadratic() {
        let q = Field::Rationals;
        // 2t^2 - 3t + 1 = (2t - 1)(t - 1)
        let r = p(q, &[1, -3, 2]).roots();
        assert_eq!(r.len(), 2);
        assert!(r.contains(&q.parse("1/2").unwrap()));
        assert!(r.contains(&q.one()));
        // t^2 - 2 has no rational root
        assert!(p(q, &[-2, 0, 1]).roots().is_empty());
    }

    #[test]
    fn ext_gcd_identity() {
        let q = Field::Rationals;
        let a = p(q, &[-1, 0, 1]);
        let b = p(q, &[-1, 1]);
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(g, p(q, &[-1, 1]));
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn fp_roots() {
        let f = Field::Prime(7);
        // t^2 + 1 over F_7 has no root; t^2 - 2 has roots 3, 4
        assert!(p(f, &[1, 0, 1]).roots().is_empty());
        assert_eq!(p(f, &[-2, 0, 1]).roots(), vec![f.from_i64(3), f.from_i64(4)]);
    }
}
