use super::matrix::{is_zero_vec, Matrix};
use super::scalar::{Field, Scalar};

/// A subspace of k^n stored by its reduced row echelon basis.
///
/// Coordinates of a member with respect to the basis are read off at the
/// pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let id = Matrix::identity(field, ambient);
        Subspace { field, ambient, basis: id.row_vecs(), pivots: (0..ambient).collect() }
    }

    pub fn from_rows(field: Field, ambient: usize, rows: &[Vec<Scalar>]) -> Subspace {
        if rows.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, rows.to_vec());
        let ech = m.rref();
        let r = ech.pivots.len();
        let basis = (0..r).map(|i| ech.matrix.row(i).to_vec()).collect();
        Subspace { field, ambient, basis, pivots: ech.pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the basis components at the pivot columns; zero iff `v` is a member.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if w[pc].is_zero() {
                continue;
            }
            let f = w[pc].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.sub_mul_assign(&f, y);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of a member in the echelon basis.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (ci, row) in c.iter().zip(&self.basis) {
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    x.sub_mul_assign(ci, y);
                }
            }
        }
        is_zero_vec(&w).then_some(c)
    }

    /// Coordinates without the membership check.
    pub fn coords_unchecked(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn vector(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            super::matrix::vec_axpy(&mut v, c, row);
        }
        v
    }

    /// Adds a vector, keeping the echelon form. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut w = self.reduce(v);
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[pc].inv();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.basis.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for (x, y) in row.iter_mut().zip(&w) {
                if !y.is_zero() {
                    x.sub_mul_assign(&f, y);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.basis.insert(at, w);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v);
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // v = a.B1 = b.B2  <=>  (a, -b) in left kernel of [B1; B2]
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.field, self.ambient);
        }
        let rows: Vec<Vec<Scalar>> = self.basis.iter().chain(&other.basis).cloned().collect();
        let m = Matrix::from_rows(self.field, self.ambient, rows);
        let vecs: Vec<Vec<Scalar>> = m
            .left_kernel_basis()
            .into_iter()
            .map(|k| self.vector(&k[..self.dim()]))
            .collect();
        Subspace::from_rows(self.field, self.ambient, &vecs)
    }

    /// Standard basis vectors at the non-pivot columns; they span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| self.pivots.binary_search(c).is_err()).collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }
}

/// Coordinates with respect to an arbitrary linearly independent list of vectors.
#[derive(Clone, Debug)]
pub struct BasisSolver {
    span: Subspace,
    transform: Matrix,
    len: usize,
}

impl BasisSolver {
    /// `vectors` must be linearly independent.
    pub fn new(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> BasisSolver {
        let m = Matrix::from_rows(field, ambient, vectors.to_vec());
        let (ech, t) = m.rref_with_transform();
        assert_eq!(ech.pivots.len(), vectors.len(), "BasisSolver needs independent vectors");
        let r = ech.pivots.len();
        let basis = (0..r).map(|i| ech.matrix.row(i).to_vec()).collect();
        let transform = t.submatrix(0..r, 0..vectors.len());
        BasisSolver {
            span: Subspace { field, ambient, basis, pivots: ech.pivots },
            transform,
            len: vectors.len(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let c = self.span.coords(v)?;
        Some(self.transform.vec_mul(&c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_matches_batch_echelon() {
        let q = Field::Rationals;
        let rows = vec![
            vec![q.from_i64(1), q.from_i64(2), q.from_i64(3)],
            vec![q.from_i64(2), q.from_i64(4), q.from_i64(7)],
            vec![q.from_i64(3), q.from_i64(6), q.from_i64(10)],
        ];
        let batch = Subspace::from_rows(q, 3, &rows);
        let mut inc = Subspace::zero(q, 3);
        for r in &rows {
            inc.insert(r);
        }
        assert_eq!(batch, inc);
        assert_eq!(batch.dim(), 2);
    }

    #[test]
    fn intersection_of_planes() {
        let q = Field::Rationals;
        let a = Subspace::from_rows(q, 3, &[vec![q.one(), q.zero(), q.zero()], vec![q.zero(), q.one(), q.zero()]]);
        let b = Subspace::from_rows(q, 3, &[vec![q.zero(), q.one(), q.zero()], vec![q.zero(), q.zero(), q.one()]]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[q.zero(), q.from_i64(5), q.zero()]));
    }

    #[test]
    fn solver_coordinates() {
        let q = Field::Rationals;
        let vs = vec![vec![q.from_i64(1), q.from_i64(1)], vec![q.from_i64(1), q.from_i64(-1)]];
        let s = BasisSolver::new(q, 2, &vs);
        let c = s.coords(&[q.from_i64(3), q.from_i64(1)]).unwrap();
        assert_eq!(c, vec![q.from_i64(2), q.from_i64(1)]);
    }
}
