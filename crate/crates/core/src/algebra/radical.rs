//! Jacobson radical and the semisimple quotient.
//!
//! Over Q (and over F_p when p exceeds the dimension) the radical is the
//! kernel of the trace form of the left regular representation. Over small
//! primes the iterated p-power trace functionals are used: with
//! `g_i(a) = Tr(lift(a)^(p^i)) / p^i mod p`, one has
//! `I_i = { x in I_(i-1) : g_i(x y) = 0 for all y }`, and `I_l` is the
//! radical for `l = floor(log_p n)`.

use super::core::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar, Subspace};

/// Two-sided ideal of an algebra, by a basis of coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub basis: Subspace,
}

impl Ideal {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.dim() == 0
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.basis.contains(x)
    }

    /// Checks closure under left and right multiplication by basis elements.
    pub fn is_two_sided(&self, a: &Algebra) -> bool {
        self.basis.basis().iter().all(|v| {
            (0..a.dim()).all(|i| {
                let b = a.basis_elem(i);
                self.basis.contains(&a.mul(&b, v)) && self.basis.contains(&a.mul(v, &b))
            })
        })
    }

    /// Product ideal `I J`, spanned by products of basis elements.
    pub fn product(&self, other: &Ideal, a: &Algebra) -> Ideal {
        let mut s = Subspace::zero(a.field(), a.dim());
        for x in self.basis.basis() {
            for y in other.basis.basis() {
                s.insert(&a.mul(x, y));
            }
        }
        Ideal { basis: s }
    }
}

/// Semisimple quotient with its canonical surjection.
#[derive(Debug)]
pub struct SemisimpleQuotient {
    pub algebra: Algebra,
    /// Row-vector matrix `dim A x dim S`.
    pub projection: Matrix,
}

impl Algebra {
    /// The Jacobson radical.
    pub fn radical(&self) -> Result<Ideal> {
        if let Some(r) = self.cache.radical.get() {
            return Ok(Ideal { basis: r.clone() });
        }
        let r = self.compute_radical()?;
        let _ = self.cache.radical.set(r.clone());
        Ok(Ideal { basis: r })
    }

    fn compute_radical(&self) -> Result<Subspace> {
        if self.dim() == 0 {
            return Ok(Subspace::zero(self.field(), 0));
        }
        if let Some(rows) = self.arrow_ideal_rows() {
            return Ok(Subspace::from_rows(self.field(), self.dim(), &rows));
        }
        match self.field() {
            Field::Rationals => Ok(self.trace_form_kernel()),
            Field::Prime(p) if (p as usize) > self.dim() => Ok(self.trace_form_kernel()),
            Field::Prime(p) => Ok(self.radical_small_characteristic(p as u64)),
        }
    }

    /// `t_m = Tr L(b_m)`.
    fn regular_traces(&self) -> Vec<Scalar> {
        (0..self.dim())
            .map(|m| {
                let mut t = self.field().zero();
                for k in 0..self.dim() {
                    for (kk, c) in self.table_entry(m, k) {
                        if *kk == k {
                            t.add_assign_ref(c);
                        }
                    }
                }
                t
            })
            .collect()
    }

    /// Gram matrix `Tr L(b_i b_j)` of the trace form.
    pub fn trace_form(&self) -> Matrix {
        let t = self.regular_traces();
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.field().zero();
                for (k, c) in self.table_entry(i, j) {
                    acc.add_mul_assign(c, &t[*k]);
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    fn trace_form_kernel(&self) -> Subspace {
        let rows = self.trace_form().kernel_basis();
        Subspace::from_rows(self.field(), self.dim(), &rows)
    }

    fn radical_small_characteristic(&self, p: u64) -> Subspace {
        let n = self.dim();
        let field = self.field();
        let mut levels = 0u32;
        while (p as u128).pow(levels + 1) <= n as u128 {
            levels += 1;
        }
        let mut current = Subspace::full(field, n);
        for i in 0..=levels {
            let basis = current.basis().to_vec();
            if basis.is_empty() {
                break;
            }
            let modulus = (p as u128).pow(i + 1);
            let exponent = p.pow(i);
            let divisor = (p as u128).pow(i);
            // G[k][j] = g_i(x_k b_j)
            let mut g = Matrix::zeros(field, basis.len(), n);
            for (k, x) in basis.iter().enumerate() {
                for j in 0..n {
                    let z = self.mul(x, &self.basis_elem(j));
                    let lm = self.left_mult_matrix(&z);
                    let tr = lifted_power_trace(&lm, exponent, modulus);
                    debug_assert_eq!(tr % divisor, 0);
                    g.set(k, j, field.from_i64(((tr / divisor) % p as u128) as i64));
                }
            }
            // x = sum c_k x_k lies in I_i iff c G = 0
            let coeffs = g.left_kernel_basis();
            let vecs: Vec<Elem> = coeffs.iter().map(|c| current.vector(&c[..])).collect();
            current = Subspace::from_rows(field, n, &vecs);
        }
        current
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.is_zero())
    }

    /// Smallest `n` with `rad^n = 0`; 1 exactly for semisimple algebras.
    pub fn nilpotency_index(&self) -> Result<usize> {
        Ok(self.radical_powers()?.len() + 1)
    }

    /// `[rad^1, rad^2, ...]` up to the last nonzero power (empty when semisimple),
    /// preceded conceptually by `rad^0 = A`.
    pub fn radical_powers(&self) -> Result<Vec<Ideal>> {
        let r = self.radical()?;
        let mut out = Vec::new();
        let mut cur = r.clone();
        while !cur.is_zero() {
            out.push(cur.clone());
            let next = cur.product(&r, self);
            if next.dim() == cur.dim() {
                // a nilpotent ideal strictly shrinks; equality means the radical is wrong
                return Err(Error::UnsupportedField(format!(
                    "radical computation over {} did not produce a nilpotent ideal",
                    self.field()
                )));
            }
            cur = next;
        }
        Ok(out)
    }

    /// `rad^p` as an ideal, with `rad^0 = A`.
    pub fn radical_power(&self, p: usize) -> Result<Ideal> {
        if p == 0 {
            return Ok(Ideal { basis: Subspace::full(self.field(), self.dim()) });
        }
        let powers = self.radical_powers()?;
        Ok(powers.get(p - 1).cloned().unwrap_or(Ideal { basis: Subspace::zero(self.field(), self.dim()) }))
    }

    pub fn semisimple_quotient(&self) -> Result<SemisimpleQuotient> {
        let r = self.radical()?;
        let (algebra, projection) = self.quotient(&r.basis);
        Ok(SemisimpleQuotient { algebra, projection })
    }

    /// Whether `A (x) A^op` is semisimple. Only defined for semisimple `A`.
    pub fn is_separable(&self) -> Result<bool> {
        let r = self.radical()?;
        if !r.is_zero() {
            return Err(Error::NotSemisimple(r.dim()));
        }
        let t = self.tensor_product(&self.opposite())?;
        Ok(t.radical()?.is_zero())
    }
}

/// `Tr(A^e) mod m` for the integer lift of an F_p matrix.
fn lifted_power_trace(a: &Matrix, e: u64, m: u128) -> u128 {
    let n = a.rows();
    let lift: Vec<u128> = (0..n * n).map(|k| a.get(k / n, k % n).residue().unwrap() as u128 % m).collect();
    let mul = |x: &[u128], y: &[u128]| -> Vec<u128> {
        let mut out = vec![0u128; n * n];
        for i in 0..n {
            for k in 0..n {
                let xik = x[i * n + k];
                if xik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + xik * y[k * n + j]) % m;
                }
            }
        }
        out
    };
    let mut result: Vec<u128> = (0..n * n).map(|k| if k / n == k % n { 1 } else { 0 }).collect();
    let mut base = lift;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    (0..n).map(|i| result[i * n + i]).sum::<u128>() % m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuiverPresentation;

    const Q: Field = Field::Rationals;

    fn kronecker(f: Field) -> Algebra {
        Algebra::from_quiver(QuiverPresentation::new(f, vec!["0".into(), "1".into()]).arrow("a", 0, 1).arrow("b", 0, 1))
            .unwrap()
    }

    #[test]
    fn semisimple_product_has_zero_radical() {
        let a = Algebra::ground(Q).product(&Algebra::ground(Q)).unwrap();
        assert!(a.radical().unwrap().is_zero());
        assert_eq!(a.nilpotency_index().unwrap(), 1);
    }

    #[test]
    fn truncated_polynomial_radical() {
        for f in [Q, Field::Prime(2), Field::Prime(3), Field::Prime(5)] {
            let a = Algebra::truncated_polynomial(f, 3);
            let r = a.radical().unwrap();
            assert_eq!(r.dim(), 2, "over {f}");
            assert!(r.contains(&a.basis_elem(1)) && r.contains(&a.basis_elem(2)));
            assert_eq!(a.nilpotency_index().unwrap(), 3);
        }
    }

    #[test]
    fn kronecker_radical_is_arrow_span() {
        let a = kronecker(Q);
        let r = a.radical().unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(a.nilpotency_index().unwrap(), 2);
        let q = a.semisimple_quotient().unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.radical().unwrap().is_zero());
    }

    #[test]
    fn trace_kernel_agrees_with_arrow_ideal() {
        // force the generic route by dropping the presentation
        let a = kronecker(Q);
        let generic = Algebra::from_structure_constants(Q, a.structure_constants(), a.unit().clone()).unwrap();
        assert_eq!(generic.radical().unwrap(), a.radical().unwrap());
        let f2 = kronecker(Field::Prime(2));
        let generic2 = Algebra::from_structure_constants(f2.field(), f2.structure_constants(), f2.unit().clone()).unwrap();
        assert_eq!(generic2.radical().unwrap(), f2.radical().unwrap());
    }

    #[test]
    fn field_extension_of_f2_is_semisimple() {
        // F_2[t]/(t^2 + t + 1) = F_4
        let f = Field::Prime(2);
        let z = f.zero();
        let o = f.one();
        let table = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![o.clone(), o.clone()]],
        ];
        let a = Algebra::from_structure_constants(f, table, vec![o.clone(), z.clone()]).unwrap();
        assert!(a.radical().unwrap().is_zero());
    }

    #[test]
    fn separability() {
        assert!(Algebra::ground(Q).is_separable().unwrap());
        // Q[x]/(x^2 - 2)
        let z = Q.zero();
        let o = Q.one();
        let table = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![Q.from_i64(2), z.clone()]],
        ];
        let a = Algebra::from_structure_constants(Q, table, vec![o.clone(), z.clone()]).unwrap();
        assert!(a.is_separable().unwrap());
        assert!(matches!(Algebra::truncated_polynomial(Q, 2).is_separable(), Err(Error::NotSemisimple(1))));
    }
}
