use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::quiver::QuiverPresentation;
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vec, vec_axpy, Field, Matrix, Scalar, Subspace};

/// Element of an algebra, in coordinates of its basis.
pub type Elem = Vec<Scalar>;

/// Finite-dimensional unital associative algebra given by structure constants.
///
/// `b_i * b_j = sum_k table[i][j][k] b_k`; the table is stored sparsely.
pub struct Algebra {
    field: Field,
    dim: usize,
    table: Vec<Vec<(usize, Scalar)>>,
    unit: Elem,
    presentation: Option<QuiverPresentation>,
    labels: Option<Vec<String>>,
    /// Complete set of orthogonal idempotents summing to 1 that later
    /// refinement starts from (vertices of a quiver, corners of a gluing...).
    hints: Vec<Elem>,
    pub(crate) cache: AlgebraCache,
}

#[derive(Default)]
pub(crate) struct AlgebraCache {
    pub radical: OnceLock<Subspace>,
    pub generators: OnceLock<Vec<Elem>>,
    pub projectives: OnceLock<super::idempotents::ProjectiveData>,
    pub peirce: Mutex<HashMap<(Elem, Elem), Arc<Subspace>>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            field: self.field,
            dim: self.dim,
            table: self.table.clone(),
            unit: self.unit.clone(),
            presentation: self.presentation.clone(),
            labels: self.labels.clone(),
            hints: self.hints.clone(),
            cache: AlgebraCache::default(),
        }
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("dim", &self.dim)
            .field("labels", &self.labels)
            .finish()
    }
}

impl Algebra {
    /// Builds an algebra from a dense table `table[i][j][k]` and verifies
    /// associativity and the unit laws.
    pub fn from_structure_constants(field: Field, table: Vec<Vec<Elem>>, unit: Elem) -> Result<Algebra> {
        let dim = unit.len();
        if table.len() != dim || table.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(Error::DimensionMismatch(format!(
                "structure constants must be {dim}x{dim}x{dim}"
            )));
        }
        let sparse = table
            .into_iter()
            .flatten()
            .map(|v| {
                v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>()
            })
            .collect();
        let alg = Algebra::from_sparse_unchecked(field, dim, sparse, unit);
        alg.verify()?;
        Ok(alg)
    }

    pub(crate) fn from_sparse_unchecked(
        field: Field,
        dim: usize,
        table: Vec<Vec<(usize, Scalar)>>,
        unit: Elem,
    ) -> Algebra {
        let hints = if dim == 0 { Vec::new() } else { vec![unit.clone()] };
        Algebra {
            field,
            dim,
            table,
            unit,
            presentation: None,
            labels: None,
            hints,
            cache: AlgebraCache::default(),
        }
    }

    /// Builds from a product function on basis elements, then verifies the axioms.
    pub(crate) fn from_products(
        field: Field,
        dim: usize,
        unit: Elem,
        mut product: impl FnMut(usize, usize) -> Elem,
    ) -> Result<Algebra> {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                table.push(v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
        }
        let alg = Algebra::from_sparse_unchecked(field, dim, table, unit);
        alg.verify()?;
        Ok(alg)
    }

    /// The base field viewed as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        let mut a = Algebra::from_sparse_unchecked(field, 1, vec![vec![(0, field.one())]], vec![field.one()]);
        a.labels = Some(vec!["1".into()]);
        a
    }

    /// Checks associativity on all basis triples and the two unit laws.
    pub fn verify(&self) -> Result<()> {
        for i in 0..self.dim {
            let bi = self.basis_elem(i);
            if self.mul(&self.unit, &bi) != bi || self.mul(&bi, &self.unit) != bi {
                return Err(Error::UnitFails(format!("unit is not an identity on basis element {i}")));
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.basis_product(i, j);
                for k in 0..self.dim {
                    let left = self.mul_elem_basis(&ij, k);
                    let jk = self.basis_product(j, k);
                    let right = self.mul_basis_elem(i, &jk);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Elem {
        &self.unit
    }

    pub fn presentation(&self) -> Option<&QuiverPresentation> {
        self.presentation.as_ref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn idempotent_hints(&self) -> &[Elem] {
        &self.hints
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Algebra {
        assert_eq!(labels.len(), self.dim);
        self.labels = Some(labels);
        self
    }

    pub(crate) fn with_presentation(mut self, p: QuiverPresentation) -> Algebra {
        self.presentation = Some(p);
        self
    }

    /// Replaces the idempotent hints. They must be orthogonal idempotents summing to 1.
    pub fn with_idempotent_hints(mut self, hints: Vec<Elem>) -> Result<Algebra> {
        let mut total = self.zero();
        for (a, e) in hints.iter().enumerate() {
            if !self.is_idempotent(e) {
                return Err(Error::NotIdempotent);
            }
            for (b, f) in hints.iter().enumerate() {
                if a != b && !is_zero_vec(&self.mul(e, f)) {
                    return Err(Error::Validation("idempotent hints are not orthogonal".into()));
                }
            }
            vec_axpy(&mut total, &self.field.one(), e);
        }
        if total != self.unit {
            return Err(Error::Validation("idempotent hints do not sum to 1".into()));
        }
        self.hints = hints.into_iter().filter(|e| !is_zero_vec(e)).collect();
        self.cache = AlgebraCache::default();
        Ok(self)
    }

    pub fn zero(&self) -> Elem {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Elem {
        let mut v = self.zero();
        for (k, c) in &self.table[i * self.dim + j] {
            v[*k] = c.clone();
        }
        v
    }

    pub(crate) fn table_entry(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim + j]
    }

    /// Dense structure constants `c[i][j][k]`.
    pub fn structure_constants(&self) -> Vec<Vec<Elem>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.basis_product(i, j)).collect()).collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Elem {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i * self.dim + j] {
                    out[*k].add_mul_assign(&ab, c);
                }
            }
        }
        out
    }

    fn mul_elem_basis(&self, x: &[Scalar], j: usize) -> Elem {
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i * self.dim + j] {
                out[*k].add_mul_assign(a, c);
            }
        }
        out
    }

    fn mul_basis_elem(&self, i: usize, y: &[Scalar]) -> Elem {
        let mut out = self.zero();
        for (j, b) in y.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in &self.table[i * self.dim + j] {
                out[*k].add_mul_assign(b, c);
            }
        }
        out
    }

    pub fn is_idempotent(&self, e: &[Scalar]) -> bool {
        e.len() == self.dim && self.mul(e, e) == e
    }

    /// Matrix of left multiplication `y -> x y` acting on row vectors.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let rows = (0..self.dim).map(|j| self.mul_elem_basis_left(x, j)).collect();
        Matrix::from_rows(self.field, self.dim, rows)
    }

    fn mul_elem_basis_left(&self, x: &[Scalar], j: usize) -> Elem {
        // x * b_j
        self.mul_elem_basis(x, j)
    }

    /// Matrix of right multiplication `y -> y x` acting on row vectors.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let rows = (0..self.dim).map(|i| self.mul_basis_elem(i, x)).collect();
        Matrix::from_rows(self.field, self.dim, rows)
    }

    /// Subspace spanned by `{ f b e : b basis }`.
    pub fn peirce(&self, f: &[Scalar], e: &[Scalar]) -> Arc<Subspace> {
        let key = (f.to_vec(), e.to_vec());
        if let Some(s) = self.cache.peirce.lock().unwrap().get(&key) {
            return s.clone();
        }
        let rows: Vec<Elem> = (0..self.dim)
            .map(|i| {
                let fb = self.mul_basis_elem_left(f, i);
                self.mul(&fb, e)
            })
            .collect();
        let s = Arc::new(Subspace::from_rows(self.field, self.dim, &rows));
        self.cache.peirce.lock().unwrap().insert(key, s.clone());
        s
    }

    fn mul_basis_elem_left(&self, f: &[Scalar], i: usize) -> Elem {
        // f * b_i
        self.mul_elem_basis(f, i)
    }

    /// Right ideal `e A`.
    pub fn right_ideal(&self, e: &[Scalar]) -> Arc<Subspace> {
        self.peirce(e, &self.unit)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Structural equality of fields, tables and units.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.field == other.field && self.dim == other.dim && self.unit == other.unit && self.table == other.table
    }

    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let table = (0..d * d).map(|ij| self.table[(ij % d) * d + ij / d].clone()).collect();
        let mut a = Algebra::from_sparse_unchecked(self.field, d, table, self.unit.clone());
        a.hints = self.hints.clone();
        a.labels = self.labels.clone();
        a
    }

    /// Tensor product over the base field; basis `a_i (x) b_j` has index `i * dim b + j`.
    pub fn tensor_product(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        let (da, db) = (self.dim, other.dim);
        let d = da * db;
        let mut table = Vec::with_capacity(d * d);
        for i in 0..da {
            for j in 0..db {
                for k in 0..da {
                    for l in 0..db {
                        let mut entry = Vec::new();
                        for (m, c) in &self.table[i * da + k] {
                            for (n, c2) in &other.table[j * db + l] {
                                entry.push((m * db + n, c * c2));
                            }
                        }
                        entry.sort_by_key(|(k, _)| *k);
                        table.push(entry);
                    }
                }
            }
        }
        let unit = self.tensor_elem(other, &self.unit, &other.unit);
        let mut a = Algebra::from_sparse_unchecked(self.field, d, table, unit);
        let mut hints = Vec::new();
        for e in &self.hints {
            for f in &other.hints {
                hints.push(self.tensor_elem(other, e, f));
            }
        }
        a.hints = hints;
        Ok(a)
    }

    pub fn tensor_elem(&self, other: &Algebra, x: &[Scalar], y: &[Scalar]) -> Elem {
        let mut v = vec![self.field.zero(); self.dim * other.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    v[i * other.dim + j] = a * b;
                }
            }
        }
        v
    }

    /// `A^op (x) A`; a right module over it is an A-A-bimodule.
    pub fn enveloping(&self) -> Algebra {
        self.opposite().tensor_product(self).expect("same field")
    }

    /// The corner algebra `e A e` with unit `e`, together with the basis of
    /// `e A e` inside `A` (rows of the returned subspace).
    pub fn corner(&self, e: &[Scalar]) -> Result<(Algebra, Arc<Subspace>)> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        let sub = self.peirce(e, e);
        let basis = sub.basis().to_vec();
        let n = basis.len();
        let unit = if n == 0 { Vec::new() } else { sub.coords(e).expect("e lies in eAe") };
        let table = (0..n * n)
            .map(|ij| {
                let prod = self.mul(&basis[ij / n], &basis[ij % n]);
                sub.coords_unchecked(&prod).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        let mut a = Algebra::from_sparse_unchecked(self.field, n, table, unit);
        // hints that live under e carry over
        let hints: Vec<Elem> = self
            .hints
            .iter()
            .map(|h| self.mul(&self.mul(e, h), e))
            .filter(|h| !is_zero_vec(h) && self.is_idempotent(h))
            .filter_map(|h| sub.coords(&h))
            .collect();
        let mut total = a.zero();
        for h in &hints {
            vec_axpy(&mut total, &self.field.one(), h);
        }
        if n > 0 && total == a.unit && hints.iter().enumerate().all(|(i, x)| {
            hints.iter().enumerate().all(|(j, y)| i == j || is_zero_vec(&a.mul(x, y)))
        }) {
            a.hints = hints;
        }
        Ok((a, sub))
    }

    /// Quotient by a two-sided ideal; the basis of the quotient consists of the
    /// standard basis vectors at the non-pivot columns of the ideal.
    pub fn quotient(&self, ideal: &Subspace) -> (Algebra, Matrix) {
        let keep = ideal.complement_indices();
        let n = keep.len();
        let project = |v: &[Scalar]| -> Elem {
            let r = ideal.reduce(v);
            keep.iter().map(|&k| r[k].clone()).collect()
        };
        let table = (0..n * n)
            .map(|ij| {
                let prod = self.basis_product(keep[ij / n], keep[ij % n]);
                project(&prod).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        let unit = project(&self.unit);
        let mut q = Algebra::from_sparse_unchecked(self.field, n, table, unit);
        let hints: Vec<Elem> = self.hints.iter().map(|h| project(h)).filter(|h| !is_zero_vec(h)).collect();
        if !hints.is_empty() {
            q.hints = hints;
        }
        let proj_rows = (0..self.dim).map(|i| project(&self.basis_elem(i))).collect();
        (q, Matrix::from_rows(self.field, n, proj_rows))
    }

    /// Direct product of algebras, with the two unit idempotents as hints.
    pub fn product(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        let (da, db) = (self.dim, other.dim);
        let d = da + db;
        let mut table = vec![Vec::new(); d * d];
        for i in 0..da {
            for j in 0..da {
                table[i * d + j] = self.table[i * da + j].clone();
            }
        }
        for i in 0..db {
            for j in 0..db {
                table[(da + i) * d + da + j] =
                    other.table[i * db + j].iter().map(|(k, c)| (da + k, c.clone())).collect();
            }
        }
        let mut unit = self.unit.clone();
        unit.extend(other.unit.iter().cloned());
        let mut a = Algebra::from_sparse_unchecked(self.field, d, table, unit);
        let mut hints: Vec<Elem> = self
            .hints
            .iter()
            .map(|h| {
                let mut v = h.clone();
                v.extend(std::iter::repeat_n(self.field.zero(), db));
                v
            })
            .collect();
        hints.extend(other.hints.iter().map(|h| {
            let mut v = vec![self.field.zero(); da];
            v.extend(h.iter().cloned());
            v
        }));
        a.hints = hints;
        Ok(a)
    }

    /// `k[x]/(x^n)` with basis 1, x, ..., x^{n-1}.
    pub fn truncated_polynomial(field: Field, n: usize) -> Algebra {
        assert!(n >= 1);
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    table.push(vec![(i + j, field.one())]);
                } else {
                    table.push(Vec::new());
                }
            }
        }
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        let labels = (0..n).map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        });
        Algebra::from_sparse_unchecked(field, n, table, unit).with_labels(labels.collect())
    }

    /// Quaternion algebra `(a, b)` over the field: i^2 = a, j^2 = b, ij = -ji = k.
    pub fn quaternion(field: Field, a: i64, b: i64) -> Result<Algebra> {
        let fa = field.from_i64(a);
        let fb = field.from_i64(b);
        let z = field.zero();
        let one = field.one();
        // basis 1, i, j, k; products of basis elements as (index, coefficient)
        let prod = |x: usize, y: usize| -> (usize, Scalar) {
            match (x, y) {
                (0, y) => (y, one.clone()),
                (x, 0) => (x, one.clone()),
                (1, 1) => (0, fa.clone()),
                (2, 2) => (0, fb.clone()),
                (3, 3) => (0, -(&fa * &fb)),
                (1, 2) => (3, one.clone()),
                (2, 1) => (3, -one.clone()),
                (1, 3) => (2, fa.clone()),
                (3, 1) => (2, -fa.clone()),
                (2, 3) => (1, -fb.clone()),
                (3, 2) => (1, fb.clone()),
                _ => unreachable!(),
            }
        };
        let unit = vec![one.clone(), z.clone(), z.clone(), z.clone()];
        let alg = Algebra::from_products(field, 4, unit, |x, y| {
            let (k, c) = prod(x, y);
            let mut v = vec![z.clone(); 4];
            v[k] = c;
            v
        })?;
        Ok(alg.with_labels(vec!["1".into(), "i".into(), "j".into(), "k".into()]))
    }
}

/// Whether two algebras are the same object or structurally identical.
pub fn same_algebra(a: &Algebra, b: &Algebra) -> bool {
    std::ptr::eq(a, b) || a.same_structure(b)
}

/// Linear map between algebras, checked to be multiplicative.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    /// Row-vector matrix, `dim source x dim target`.
    pub matrix: Matrix,
}

impl AlgebraMap {
    pub fn apply(&self, x: &[Scalar]) -> Elem {
        self.matrix.vec_mul(x)
    }

    pub fn is_multiplicative(&self, source: &Algebra, target: &Algebra) -> bool {
        (0..source.dim()).all(|i| {
            (0..source.dim()).all(|j| {
                let lhs = self.apply(&source.basis_product(i, j));
                let rhs = target.mul(&self.apply(&source.basis_elem(i)), &self.apply(&source.basis_elem(j)));
                lhs == rhs
            })
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix.rank() == self.matrix.rows()
    }

    pub fn preserves_unit(&self, source: &Algebra, target: &Algebra) -> bool {
        self.apply(source.unit()) == *target.unit()
    }
}

impl Algebra {
    /// A generating set chosen greedily from the basis, in basis order.
    pub fn generators(&self) -> &[Elem] {
        self.cache.generators.get_or_init(|| {
            let mut gens: Vec<Elem> = Vec::new();
            let mut span = Subspace::from_rows(self.field, self.dim, std::slice::from_ref(&self.unit));
            for i in 0..self.dim {
                let b = self.basis_elem(i);
                if span.contains(&b) {
                    continue;
                }
                gens.push(b);
                // every word in the generators is reached by right multiplications from 1
                span = Subspace::from_rows(self.field, self.dim, std::slice::from_ref(&self.unit));
                let mut queue = vec![self.unit.clone()];
                while let Some(v) = queue.pop() {
                    for g in &gens {
                        let w = self.mul(&v, g);
                        if span.insert(&w) {
                            queue.push(w);
                        }
                    }
                }
                if span.dim() == self.dim {
                    break;
                }
            }
            gens
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn dense_kx2() -> Vec<Vec<Elem>> {
        let z = Q.zero();
        let o = Q.one();
        vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
        ]
    }

    #[test]
    fn ground_field_from_constants() {
        let a = Algebra::from_structure_constants(Q, vec![vec![vec![Q.one()]]], vec![Q.one()]).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.same_structure(&Algebra::ground(Q)));
    }

    #[test]
    fn dual_numbers_from_constants() {
        let a = Algebra::from_structure_constants(Q, dense_kx2(), vec![Q.one(), Q.zero()]).unwrap();
        assert!(a.same_structure(&Algebra::truncated_polynomial(Q, 2)));
    }

    #[test]
    fn broken_associativity_is_reported() {
        // 3-dim: e0 unit, b1*b1 = b2, b1*b2 = b1, b2*b1 = 0
        let z = Q.zero();
        let o = Q.one();
        let v = |k: Option<usize>| -> Elem {
            let mut v = vec![z.clone(); 3];
            if let Some(k) = k {
                v[k] = o.clone();
            }
            v
        };
        let table = vec![
            vec![v(Some(0)), v(Some(1)), v(Some(2))],
            vec![v(Some(1)), v(Some(2)), v(Some(1))],
            vec![v(Some(2)), v(None), v(None)],
        ];
        let err = Algebra::from_structure_constants(Q, table, v(Some(0))).unwrap_err();
        assert!(matches!(err, Error::NotAssociative(..)));
    }

    #[test]
    fn bad_unit_is_reported() {
        let err = Algebra::from_structure_constants(Q, dense_kx2(), vec![Q.zero(), Q.one()]).unwrap_err();
        assert!(matches!(err, Error::UnitFails(_)));
    }

    #[test]
    fn opposite_and_tensor() {
        let a = Algebra::truncated_polynomial(Q, 2);
        assert!(a.opposite().same_structure(&a));
        let b = Algebra::truncated_polynomial(Q, 3);
        let t = a.tensor_product(&b).unwrap();
        assert_eq!(t.dim(), 6);
        t.verify().unwrap();
        let env = a.enveloping();
        assert_eq!(env.dim(), 4);
        env.verify().unwrap();
    }

    #[test]
    fn quaternions_are_associative() {
        let h = Algebra::quaternion(Q, -1, -1).unwrap();
        assert!(!h.is_commutative());
        let op = h.opposite();
        op.verify().unwrap();
        assert!(op.opposite().same_structure(&h));
    }

    #[test]
    fn corner_extremes() {
        let a = Algebra::truncated_polynomial(Q, 3);
        let (c, _) = a.corner(a.unit()).unwrap();
        assert_eq!(c.dim(), 3);
        let (z, _) = a.corner(&a.zero()).unwrap();
        assert_eq!(z.dim(), 0);
        assert!(matches!(a.corner(&a.basis_elem(1)), Err(Error::NotIdempotent)));
    }
}
