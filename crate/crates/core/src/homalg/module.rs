use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{same_algebra, Algebra};
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vec, vec_axpy, Field, Matrix, Scalar, Subspace};

/// Finite-dimensional right module, one action matrix per algebra basis element.
///
/// Vectors are rows: `v . b_i = v * action[i]`.
#[derive(Clone, Debug)]
pub struct RightModule {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Matrix>,
}

/// Module homomorphism `f(v) = v * matrix`, so the matrix is `dim source x dim target`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    pub matrix: Matrix,
}

impl RightModule {
    /// Checked constructor: unit acts as the identity and the action is associative.
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<RightModule> {
        let m = RightModule::from_action(algebra, dim, action)?;
        m.verify()?;
        Ok(m)
    }

    pub(crate) fn from_action(algebra: Arc<Algebra>, dim: usize, action: Vec<Matrix>) -> Result<RightModule> {
        if action.len() != algebra.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim || m.field() != algebra.field()) {
            return Err(Error::InvalidModule(format!("action matrices must be {dim}x{dim} over {}", algebra.field())));
        }
        Ok(RightModule { algebra, dim, action })
    }

    pub fn verify(&self) -> Result<()> {
        let a = &self.algebra;
        if self.action_of(a.unit()) != Matrix::identity(a.field(), self.dim) {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                if lhs != self.action_of(&a.basis_product(i, j)) {
                    return Err(Error::InvalidModule(format!("action fails associativity at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<Algebra>) -> RightModule {
        let action = (0..algebra.dim()).map(|_| Matrix::zeros(algebra.field(), 0, 0)).collect();
        RightModule { algebra, dim: 0, action }
    }

    /// The algebra as a module over itself.
    pub fn regular(algebra: Arc<Algebra>) -> RightModule {
        RightModule::on_right_ideal(algebra.clone(), &Subspace::full(algebra.field(), algebra.dim()))
    }

    /// A right ideal (e.g. `eA`) as a module, in the basis of the subspace.
    pub fn on_right_ideal(algebra: Arc<Algebra>, ideal: &Subspace) -> RightModule {
        let n = algebra.dim();
        let action = (0..n)
            .map(|i| {
                let b = algebra.basis_elem(i);
                let rows = ideal.basis().iter().map(|u| ideal.coords_unchecked(&algebra.mul(u, &b))).collect();
                Matrix::from_rows(algebra.field(), ideal.dim(), rows)
            })
            .collect();
        RightModule { algebra, dim: ideal.dim(), action }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `sum_i x_i action[i]`.
    pub fn action_of(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(c, &self.action[i]);
            }
        }
        m
    }

    pub fn act(&self, v: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field().zero(); self.dim];
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                let w = self.action[i].vec_mul(v);
                vec_axpy(&mut out, c, &w);
            }
        }
        out
    }

    /// Submodule generated by the given vectors.
    pub fn generated(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let mut rows = Vec::new();
        for v in vectors {
            for m in &self.action {
                rows.push(m.vec_mul(v));
            }
        }
        Subspace::from_rows(self.field(), self.dim, &rows)
    }

    /// `M rad(A)` inside a submodule `sub` (the whole module when `sub` is full).
    pub fn radical_of(&self, sub: &Subspace) -> Result<Subspace> {
        let rad = self.algebra.radical()?;
        let mats: Vec<Matrix> = rad.basis.basis().iter().map(|r| self.action_of(r)).collect();
        let mut rows = Vec::new();
        for v in sub.basis() {
            for m in &mats {
                rows.push(m.vec_mul(v));
            }
        }
        Ok(Subspace::from_rows(self.field(), self.dim, &rows))
    }

    pub fn radical_submodule(&self) -> Result<Subspace> {
        self.radical_of(&Subspace::full(self.field(), self.dim))
    }

    pub fn is_submodule(&self, sub: &Subspace) -> bool {
        sub.basis().iter().all(|v| self.action.iter().all(|m| sub.contains(&m.vec_mul(v))))
    }

    /// The submodule on `sub` with its inclusion.
    pub fn submodule(&self, sub: &Subspace) -> Result<(RightModule, ModuleMap)> {
        if sub.ambient() != self.dim || !self.is_submodule(sub) {
            return Err(Error::InvalidModule("subspace is not a submodule".into()));
        }
        let action = self
            .action
            .iter()
            .map(|m| {
                let rows = sub.basis().iter().map(|v| sub.coords_unchecked(&m.vec_mul(v))).collect();
                Matrix::from_rows(self.field(), sub.dim(), rows)
            })
            .collect();
        let inclusion = Matrix::from_rows(self.field(), self.dim, sub.basis().to_vec());
        Ok((
            RightModule { algebra: self.algebra.clone(), dim: sub.dim(), action },
            ModuleMap { matrix: inclusion },
        ))
    }

    /// `M / sub` with the projection; the quotient basis is the non-pivot coordinates.
    pub fn quotient(&self, sub: &Subspace) -> Result<(RightModule, ModuleMap)> {
        if sub.ambient() != self.dim || !self.is_submodule(sub) {
            return Err(Error::InvalidModule("subspace is not a submodule".into()));
        }
        let free = sub.complement_indices();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = sub.reduce(v);
            free.iter().map(|&c| r[c].clone()).collect()
        };
        let field = self.field();
        let action = self
            .action
            .iter()
            .map(|m| {
                let rows = free.iter().map(|&c| project(m.row(c))).collect();
                Matrix::from_rows(field, free.len(), rows)
            })
            .collect();
        let proj_rows = (0..self.dim)
            .map(|i| {
                let mut e = vec![field.zero(); self.dim];
                e[i] = field.one();
                project(&e)
            })
            .collect();
        Ok((
            RightModule { algebra: self.algebra.clone(), dim: free.len(), action },
            ModuleMap { matrix: Matrix::from_rows(field, free.len(), proj_rows) },
        ))
    }

    pub fn direct_sum(&self, other: &RightModule) -> Result<RightModule> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let n = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(self.field(), n, n);
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        m.set(r, c, x.get(r, c).clone());
                    }
                }
                for r in 0..other.dim {
                    for c in 0..other.dim {
                        m.set(self.dim + r, self.dim + c, y.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        Ok(RightModule { algebra: self.algebra.clone(), dim: n, action })
    }

    /// `M e` as a subspace.
    pub fn peirce(&self, e: &[Scalar]) -> Subspace {
        let m = self.action_of(e);
        Subspace::from_rows(self.field(), self.dim, &m.row_vecs())
    }

    /// Multiplicity of each indecomposable projective class in the top of `M`.
    pub fn top_multiplicities(&self) -> Result<Vec<usize>> {
        let data = self.algebra.projective_data()?;
        let rad = self.radical_submodule()?;
        Ok((0..data.class_count())
            .map(|c| {
                let me = self.peirce(data.representative(c));
                (me.dim() - me.intersection(&rad).dim()) / data.top_dims[c]
            })
            .collect())
    }
}

impl ModuleMap {
    pub fn identity(m: &RightModule) -> ModuleMap {
        ModuleMap { matrix: Matrix::identity(m.field(), m.dim()) }
    }

    pub fn zero(source: &RightModule, target: &RightModule) -> ModuleMap {
        ModuleMap { matrix: Matrix::zeros(source.field(), source.dim(), target.dim()) }
    }

    /// Checked constructor.
    pub fn new(source: &RightModule, target: &RightModule, matrix: Matrix) -> Result<ModuleMap> {
        let f = ModuleMap { matrix };
        if f.matrix.rows() != source.dim() || f.matrix.cols() != target.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                f.matrix.rows(),
                f.matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        if !f.is_homomorphism(source, target) {
            return Err(Error::NotModuleMap);
        }
        Ok(f)
    }

    pub fn is_homomorphism(&self, source: &RightModule, target: &RightModule) -> bool {
        source
            .action
            .iter()
            .zip(&target.action)
            .all(|(s, t)| s.mul(&self.matrix) == self.matrix.mul(t))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.vec_mul(v)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMap) -> ModuleMap {
        ModuleMap { matrix: self.matrix.mul(&next.matrix) }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel(&self) -> Subspace {
        let rows = self.matrix.left_kernel_basis();
        Subspace::from_rows(self.matrix.field(), self.matrix.rows(), &rows)
    }

    pub fn image(&self) -> Subspace {
        Subspace::from_rows(self.matrix.field(), self.matrix.cols(), &self.matrix.row_vecs())
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.matrix.rows()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.matrix.cols()
    }
}

/// Basis of `Hom_A(M, N)`, solved as the kernel of the intertwining system
/// `R_M(g) F = F R_N(g)` over a generating set of the algebra.
///
/// The unknowns are first restricted to Peirce blocks: a homomorphism maps
/// `M e_i` into `N e_i` for each idempotent of a complete orthogonal set.
pub fn hom_space(m: &RightModule, n: &RightModule) -> Result<Vec<ModuleMap>> {
    if !same_algebra(&m.algebra, &n.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let field = m.field();
    if m.dim == 0 || n.dim == 0 {
        return Ok(Vec::new());
    }
    let a = &m.algebra;
    let idems = &a.projective_data()?.idempotents;
    let (tm, blocks_m) = adapted_basis(m, idems);
    let (tn, blocks_n) = adapted_basis(n, idems);
    let tm_inv = tm.inverse().expect("adapted basis is a basis");
    let tn_inv = tn.inverse().expect("adapted basis is a basis");
    // unknown (r, c) for r in block k of M, c in block k of N
    let mut index = vec![vec![None; n.dim]; m.dim];
    let mut count = 0;
    for (bm, bn) in blocks_m.iter().zip(&blocks_n) {
        for r in bm.clone() {
            for c in bn.clone() {
                index[r][c] = Some(count);
                count += 1;
            }
        }
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let mut eqs = Subspace::zero(field, count);
    for g in a.generators() {
        let rm = tm.mul(&m.action_of(g)).mul(&tm_inv);
        let rn = tn.mul(&n.action_of(g)).mul(&tn_inv);
        for r in 0..m.dim {
            for c in 0..n.dim {
                // (RM F - F RN)[r][c]
                let mut row = vec![field.zero(); count];
                let mut any = false;
                for k in 0..m.dim {
                    if let Some(u) = index[k][c] {
                        let x = rm.get(r, k);
                        if !x.is_zero() {
                            row[u].add_assign_ref(x);
                            any = true;
                        }
                    }
                }
                for k in 0..n.dim {
                    if let Some(u) = index[r][k] {
                        let x = rn.get(k, c);
                        if !x.is_zero() {
                            row[u].sub_mul_assign(x, &field.one());
                            any = true;
                        }
                    }
                }
                if any && !is_zero_vec(&row) {
                    eqs.insert(&row);
                    if eqs.dim() == count {
                        return Ok(Vec::new());
                    }
                }
            }
        }
    }
    let pivots = eqs.pivots().to_vec();
    let free: Vec<usize> = (0..count).filter(|c| !pivots.contains(c)).collect();
    let mut maps = Vec::with_capacity(free.len());
    for &f in &free {
        let mut sol = vec![field.zero(); count];
        sol[f] = field.one();
        for (row, &pc) in eqs.basis().iter().zip(&pivots) {
            sol[pc] = -&row[f];
        }
        let mut fa = Matrix::zeros(field, m.dim, n.dim);
        for r in 0..m.dim {
            for c in 0..n.dim {
                if let Some(u) = index[r][c] {
                    fa.set(r, c, sol[u].clone());
                }
            }
        }
        // back from adapted coordinates: v F = (v Tm^-1) Fa Tn
        maps.push(ModuleMap { matrix: tm_inv.mul(&fa).mul(&tn) });
    }
    Ok(maps)
}

/// Rows: concatenated bases of `M e_i`; returns the change of basis and the block ranges.
fn adapted_basis(m: &RightModule, idems: &[Vec<Scalar>]) -> (Matrix, Vec<std::ops::Range<usize>>) {
    let mut rows = Vec::with_capacity(m.dim);
    let mut blocks = Vec::with_capacity(idems.len());
    for e in idems {
        let start = rows.len();
        rows.extend(m.peirce(e).basis().iter().cloned());
        blocks.push(start..rows.len());
    }
    (Matrix::from_rows(m.field(), m.dim, rows), blocks)
}

/// An isomorphism `M -> N` if one is found among seeded random combinations
/// of a Hom basis. `None` is certain when dimensions or Peirce data differ;
/// otherwise it means no isomorphism was found.
pub fn find_isomorphism(m: &RightModule, n: &RightModule, seed: u64) -> Result<Option<ModuleMap>> {
    if m.dim != n.dim || !same_algebra(&m.algebra, &n.algebra) {
        return Ok(None);
    }
    for e in &m.algebra.projective_data()?.idempotents {
        if m.peirce(e).dim() != n.peirce(e).dim() {
            return Ok(None);
        }
    }
    if m.dim == 0 {
        return Ok(Some(ModuleMap { matrix: Matrix::zeros(m.field(), 0, 0) }));
    }
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(None);
    }
    for f in &basis {
        if f.matrix.rank() == m.dim {
            return Ok(Some(f.clone()));
        }
    }
    let field = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = match field {
        Field::Prime(p) => p as i64,
        Field::Rationals => 50,
    };
    for _ in 0..12 {
        let mut acc = Matrix::zeros(field, m.dim, n.dim);
        for f in &basis {
            acc.add_scaled(&field.from_i64(rng.gen_range(-span..=span)), &f.matrix);
        }
        if acc.rank() == m.dim {
            return Ok(Some(ModuleMap { matrix: acc }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuiverPresentation;

    const Q: Field = Field::Rationals;

    fn local(n: usize) -> Arc<Algebra> {
        Arc::new(Algebra::truncated_polynomial(Q, n))
    }

    /// `k[x]/(x^n) / rad^s`, the quotient of the regular module by `x^s`.
    fn truncation(a: &Arc<Algebra>, s: usize) -> RightModule {
        let reg = RightModule::regular(a.clone());
        let rows: Vec<Vec<Scalar>> = (s..a.dim()).map(|i| a.basis_elem(i)).collect();
        let sub = Subspace::from_rows(Q, a.dim(), &rows);
        reg.quotient(&sub).unwrap().0
    }

    /// Oracle: dimension of the space of all matrices commuting with every action
    /// matrix, by solving the full system without any reduction.
    fn brute_hom_dim(m: &RightModule, n: &RightModule) -> usize {
        let (dm, dn) = (m.dim(), n.dim());
        let mut rows = Vec::new();
        for i in 0..m.algebra().dim() {
            let (rm, rn) = (&m.action()[i], &n.action()[i]);
            for r in 0..dm {
                for c in 0..dn {
                    let mut row = vec![Q.zero(); dm * dn];
                    for k in 0..dm {
                        row[k * dn + c] = &row[k * dn + c] + rm.get(r, k);
                    }
                    for k in 0..dn {
                        row[r * dn + k] = &row[r * dn + k] - rn.get(k, c);
                    }
                    rows.push(row);
                }
            }
        }
        dm * dn - Matrix::from_rows(Q, dm * dn, rows).rank()
    }

    #[test]
    fn regular_module_is_valid() {
        let a = local(3);
        RightModule::regular(a.clone()).verify().unwrap();
        let k = Arc::new(Algebra::ground(Q));
        let reg = RightModule::regular(k);
        assert_eq!(hom_space(&reg, &reg).unwrap().len(), 1);
    }

    #[test]
    fn hom_dims_over_truncated_polynomials() {
        let a2 = local(2);
        let simple = truncation(&a2, 1);
        let reg = RightModule::regular(a2.clone());
        assert_eq!(hom_space(&simple, &reg).unwrap().len(), 1);
        let a3 = local(3);
        let m2 = truncation(&a3, 2);
        let m3 = truncation(&a3, 3);
        assert_eq!(hom_space(&m2, &m3).unwrap().len(), 2);
        for i in 1..=3 {
            for j in 1..=3 {
                let (mi, mj) = (truncation(&a3, i), truncation(&a3, j));
                let h = hom_space(&mi, &mj).unwrap();
                assert_eq!(h.len(), brute_hom_dim(&mi, &mj), "Hom(M{i}, M{j})");
                assert_eq!(h.len(), i.min(j));
                assert!(h.iter().all(|f| f.is_homomorphism(&mi, &mj)));
            }
        }
    }

    #[test]
    fn hom_over_kronecker_matches_oracle() {
        let a = Arc::new(
            Algebra::from_quiver(QuiverPresentation::new(Q, vec!["0".into(), "1".into()]).arrow("a", 0, 1).arrow("b", 0, 1))
                .unwrap(),
        );
        let reg = RightModule::regular(a.clone());
        let d = a.projective_data().unwrap();
        let p0 = RightModule::on_right_ideal(a.clone(), &a.right_ideal(d.representative(0)));
        let p1 = RightModule::on_right_ideal(a.clone(), &a.right_ideal(d.representative(1)));
        for (x, y) in [(&reg, &reg), (&p0, &p1), (&p1, &p0), (&p0, &reg)] {
            assert_eq!(hom_space(x, y).unwrap().len(), brute_hom_dim(x, y));
        }
        assert_eq!(hom_space(&reg, &reg).unwrap().len(), 4);
    }

    #[test]
    fn submodule_and_quotient() {
        let a = local(3);
        let reg = RightModule::regular(a.clone());
        let rad = reg.radical_submodule().unwrap();
        assert_eq!(rad.dim(), 2);
        let (sub, inc) = reg.submodule(&rad).unwrap();
        sub.verify().unwrap();
        assert!(inc.is_homomorphism(&sub, &reg));
        let (q, p) = reg.quotient(&rad).unwrap();
        q.verify().unwrap();
        assert_eq!(q.dim(), 1);
        assert!(p.is_homomorphism(&reg, &q));
        assert!(inc.then(&p).matrix.is_zero());
    }

    #[test]
    fn isomorphism_search() {
        let a = local(2);
        let s = truncation(&a, 1);
        let reg = RightModule::regular(a.clone());
        let rad = reg.radical_submodule().unwrap();
        let (socle, _) = reg.submodule(&rad).unwrap();
        assert!(find_isomorphism(&s, &socle, 0).unwrap().is_some());
        assert!(find_isomorphism(&s, &reg, 0).unwrap().is_none());
    }

    #[test]
    fn rejects_bad_action() {
        let a = local(2);
        let bad = vec![Matrix::identity(Q, 1), Matrix::identity(Q, 1)];
        assert!(RightModule::new(a, 1, bad).is_err());
    }
}
