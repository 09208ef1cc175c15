use std::sync::Arc;

use super::module::{ModuleMap, RightModule};
use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vec, vec_add, vec_axpy, Matrix, Scalar, Subspace};

/// `e_1 A + ... + e_r A` for idempotents `e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveModule {
    pub summands: Vec<Elem>,
}

/// A homomorphism between projectives `sum e_k A -> sum f_m A`, stored as the
/// matrix of algebra elements `entries[m][k]` in `f_m A e_k`; generator `e_k`
/// goes to the column `(entries[m][k])_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Elem>>,
}

impl ProjectiveModule {
    pub fn new(summands: Vec<Elem>) -> ProjectiveModule {
        ProjectiveModule { summands }
    }

    pub fn zero() -> ProjectiveModule {
        ProjectiveModule { summands: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn direct_sum(&self, other: &ProjectiveModule) -> ProjectiveModule {
        let mut s = self.summands.clone();
        s.extend(other.summands.iter().cloned());
        ProjectiveModule { summands: s }
    }

    pub fn dim(&self, a: &Algebra) -> usize {
        self.summands.iter().map(|e| a.right_ideal(e).dim()).sum()
    }

    /// Multiplicity vector in the basis of indecomposable projective classes.
    pub fn k0_class(&self, a: &Algebra) -> Result<Vec<i64>> {
        let n = a.projective_data()?.class_count();
        let mut v = vec![0i64; n];
        for e in &self.summands {
            for (c, m) in a.projective_multiplicities(e)?.into_iter().enumerate() {
                v[c] += m;
            }
        }
        Ok(v)
    }

    pub fn realize(&self, a: &Arc<Algebra>) -> RealizedProjective {
        let blocks: Vec<Arc<Subspace>> = self.summands.iter().map(|e| a.right_ideal(e)).collect();
        let mut offsets = Vec::with_capacity(blocks.len() + 1);
        let mut total = 0;
        for b in &blocks {
            offsets.push(total);
            total += b.dim();
        }
        offsets.push(total);
        let field = a.field();
        let action = (0..a.dim())
            .map(|i| {
                let bi = a.basis_elem(i);
                let mut m = Matrix::zeros(field, total, total);
                for (k, b) in blocks.iter().enumerate() {
                    for (r, u) in b.basis().iter().enumerate() {
                        let c = b.coords_unchecked(&a.mul(u, &bi));
                        for (j, x) in c.into_iter().enumerate() {
                            if !x.is_zero() {
                                m.set(offsets[k] + r, offsets[k] + j, x);
                            }
                        }
                    }
                }
                m
            })
            .collect();
        let module = RightModule::from_action(a.clone(), total, action).expect("projective realization");
        RealizedProjective { module, blocks, offsets }
    }
}

/// A projective with a concrete module structure and the coordinate dictionary.
#[derive(Clone, Debug)]
pub struct RealizedProjective {
    pub module: RightModule,
    blocks: Vec<Arc<Subspace>>,
    offsets: Vec<usize>,
}

impl RealizedProjective {
    pub fn to_elems(&self, v: &[Scalar]) -> Vec<Elem> {
        self.blocks
            .iter()
            .enumerate()
            .map(|(k, b)| b.vector(&v[self.offsets[k]..self.offsets[k + 1]]))
            .collect()
    }

    pub fn from_elems(&self, x: &[Elem]) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(self.module.dim());
        for (b, e) in self.blocks.iter().zip(x) {
            v.extend(b.coords_unchecked(e));
        }
        v
    }

    pub fn block(&self, k: usize) -> std::ops::Range<usize> {
        self.offsets[k]..self.offsets[k + 1]
    }

    pub fn block_basis(&self, k: usize) -> &[Elem] {
        self.blocks[k].basis()
    }
}

impl AMatrix {
    pub fn zero(a: &Algebra, rows: usize, cols: usize) -> AMatrix {
        AMatrix { rows, cols, entries: vec![vec![a.zero(); cols]; rows] }
    }

    pub fn identity(a: &Algebra, p: &ProjectiveModule) -> AMatrix {
        let mut m = AMatrix::zero(a, p.len(), p.len());
        for (k, e) in p.summands.iter().enumerate() {
            m.entries[k][k] = e.clone();
        }
        m
    }

    /// Checks `entries[m][k]` lies in `f_m A e_k`.
    pub fn is_compatible(&self, a: &Algebra, source: &ProjectiveModule, target: &ProjectiveModule) -> bool {
        self.cols == source.len()
            && self.rows == target.len()
            && (0..self.rows).all(|m| {
                (0..self.cols).all(|k| {
                    let x = &self.entries[m][k];
                    a.mul(&a.mul(&target.summands[m], x), &source.summands[k]) == *x
                })
            })
    }

    /// `self` after `first`.
    pub fn compose(&self, a: &Algebra, first: &AMatrix) -> AMatrix {
        assert_eq!(self.cols, first.rows);
        let mut out = AMatrix::zero(a, self.rows, first.cols);
        for m in 0..self.rows {
            for j in 0..self.cols {
                let x = &self.entries[m][j];
                if is_zero_vec(x) {
                    continue;
                }
                for k in 0..first.cols {
                    let y = &first.entries[j][k];
                    if is_zero_vec(y) {
                        continue;
                    }
                    let p = a.mul(x, y);
                    vec_axpy(&mut out.entries[m][k], &a.field().one(), &p);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &AMatrix) -> AMatrix {
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| vec_add(x, y)).collect())
            .collect();
        AMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, s: &Scalar) -> AMatrix {
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.iter().map(|c| c * s).collect()).collect())
            .collect();
        AMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn neg(&self) -> AMatrix {
        let entries = self.entries.iter().map(|r| r.iter().map(|x| x.iter().map(|c| -c).collect()).collect()).collect();
        AMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|x| is_zero_vec(x)))
    }

    /// Image of every entry under a linear map of algebras.
    pub fn map_entries(&self, f: impl Fn(&Elem) -> Elem) -> AMatrix {
        let entries = self.entries.iter().map(|r| r.iter().map(&f).collect()).collect();
        AMatrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &AMatrix, b: &AMatrix, c: &AMatrix, d: &AMatrix) -> AMatrix {
        let mut entries = Vec::with_capacity(a.rows + c.rows);
        for (x, y) in a.entries.iter().zip(&b.entries) {
            let mut row = x.clone();
            row.extend(y.iter().cloned());
            entries.push(row);
        }
        for (x, y) in c.entries.iter().zip(&d.entries) {
            let mut row = x.clone();
            row.extend(y.iter().cloned());
            entries.push(row);
        }
        AMatrix { rows: a.rows + c.rows, cols: a.cols + b.cols, entries }
    }

    /// The linear map between realizations.
    pub fn to_module_map(&self, source: &RealizedProjective, target: &RealizedProjective, a: &Algebra) -> ModuleMap {
        let field = a.field();
        let mut rows = Vec::with_capacity(source.module.dim());
        for k in 0..self.cols {
            for u in source.block_basis(k) {
                let image: Vec<Elem> = (0..self.rows).map(|m| a.mul(&self.entries[m][k], u)).collect();
                rows.push(target.from_elems(&image));
            }
        }
        ModuleMap { matrix: Matrix::from_rows(field, target.module.dim(), rows) }
    }
}

/// The modules `e A` for a complete set of primitive orthogonal idempotents.
pub fn indecomposable_projectives(a: &Arc<Algebra>) -> Result<Vec<RightModule>> {
    let data = a.projective_data()?;
    Ok(data
        .idempotents
        .iter()
        .map(|e| RightModule::on_right_ideal(a.clone(), &a.right_ideal(e)))
        .collect())
}

/// One indecomposable projective per isomorphism class, as `e_c A`.
pub fn projective_classes(a: &Arc<Algebra>) -> Result<Vec<ProjectiveModule>> {
    let data = a.projective_data()?;
    Ok((0..data.class_count()).map(|c| ProjectiveModule::new(vec![data.representative(c).clone()])).collect())
}

/// The simple module `e_c A / e_c rad` for each class.
pub fn simple_modules(a: &Arc<Algebra>) -> Result<Vec<RightModule>> {
    let data = a.projective_data()?;
    (0..data.class_count())
        .map(|c| {
            let p = ProjectiveModule::new(vec![data.representative(c).clone()]).realize(a).module;
            let rad = p.radical_submodule()?;
            Ok(p.quotient(&rad)?.0)
        })
        .collect()
}

/// Generators of a submodule `sub` of `ambient` whose images span its top,
/// each lying in `sub e_c` for a class representative `e_c`.
pub(crate) fn cover_generators(ambient: &RightModule, sub: &Subspace) -> Result<Vec<(Vec<Scalar>, usize)>> {
    let a = ambient.algebra();
    let data = a.projective_data()?;
    let mut span = ambient.radical_of(sub)?;
    let mut gens = Vec::new();
    if span.dim() == sub.dim() {
        return Ok(gens);
    }
    for c in 0..data.class_count() {
        let ec = ambient.action_of(data.representative(c));
        for v in sub.basis() {
            let w = ec.vec_mul(v);
            if span.contains(&w) {
                continue;
            }
            for m in ambient.action() {
                span.insert(&m.vec_mul(&w));
            }
            gens.push((w, c));
            if span.dim() == sub.dim() {
                return Ok(gens);
            }
        }
    }
    Err(Error::IdempotentLiftingFailed(
        "class representatives do not cover the top; the idempotent set is incomplete".into(),
    ))
}

/// Minimal projective `P` with a surjection onto `m`.
pub fn projective_cover(m: &RightModule) -> Result<(ProjectiveModule, ModuleMap)> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    let a = m.algebra();
    let data = a.projective_data()?;
    let gens = cover_generators(m, &Subspace::full(m.field(), m.dim()))?;
    let p = ProjectiveModule::new(gens.iter().map(|(_, c)| data.representative(*c).clone()).collect());
    let real = p.realize(a);
    let mut rows = Vec::new();
    for (k, (w, _)) in gens.iter().enumerate() {
        for u in real.block_basis(k) {
            rows.push(m.act(w, u));
        }
    }
    Ok((p, ModuleMap { matrix: Matrix::from_rows(m.field(), m.dim(), rows) }))
}

/// A random module of dimension `1..=max_dim`: `e_c A` (or `A`) modulo a few
/// random elements of its radical, sometimes summed with a second such module.
pub fn random_module<R: rand::Rng>(a: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> Result<RightModule> {
    let mut tops = indecomposable_projectives(a)?;
    tops.push(RightModule::regular(a.clone()));
    if max_dim == 0 || a.dim() == 0 {
        return Err(Error::ZeroModule);
    }
    let field = a.field();
    let cyclic = |rng: &mut R| -> Result<RightModule> {
        loop {
            let p = &tops[rng.gen_range(0..tops.len())];
            let rad = p.radical_submodule()?;
            let gens: Vec<Vec<Scalar>> = (0..rng.gen_range(0..=2))
                .map(|_| {
                    let mut v = vec![field.zero(); p.dim()];
                    for b in rad.basis() {
                        vec_axpy(&mut v, &field.from_i64(rng.gen_range(-2..=2)), b);
                    }
                    v
                })
                .collect();
            let (m, _) = p.quotient(&p.generated(&gens))?;
            if (1..=max_dim).contains(&m.dim()) {
                return Ok(m);
            }
        }
    };
    let m = cyclic(rng)?;
    if rng.gen_bool(0.25) {
        let n = cyclic(rng)?;
        if m.dim() + n.dim() <= max_dim {
            return m.direct_sum(&n);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuiverPresentation;
    use crate::exactla::Field;

    const Q: Field = Field::Rationals;

    fn kronecker() -> Arc<Algebra> {
        Arc::new(
            Algebra::from_quiver(QuiverPresentation::new(Q, vec!["0".into(), "1".into()]).arrow("a", 0, 1).arrow("b", 0, 1))
                .unwrap(),
        )
    }

    #[test]
    fn projectives_of_small_algebras() {
        let k = Arc::new(Algebra::ground(Q));
        assert_eq!(indecomposable_projectives(&k).unwrap().len(), 1);
        let kr = kronecker();
        let dims: Vec<usize> = indecomposable_projectives(&kr).unwrap().iter().map(|p| p.dim()).collect();
        assert_eq!(dims, vec![3, 1]);
        let l = Arc::new(Algebra::truncated_polynomial(Q, 2));
        let ps = indecomposable_projectives(&l).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].dim(), 2);
    }

    #[test]
    fn cover_of_simple_over_dual_numbers() {
        let l = Arc::new(Algebra::truncated_polynomial(Q, 2));
        let s = &simple_modules(&l).unwrap()[0];
        let (p, pi) = projective_cover(s).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.dim(&l), 2);
        assert!(pi.is_surjective());
        assert!(pi.is_homomorphism(&p.realize(&l).module, s));
    }

    #[test]
    fn cover_of_projective_is_itself() {
        let kr = kronecker();
        let reg = RightModule::regular(kr.clone());
        let (p, pi) = projective_cover(&reg).unwrap();
        assert_eq!(p.dim(&kr), 4);
        assert!(pi.is_surjective() && pi.is_injective());
        assert_eq!(p.k0_class(&kr).unwrap(), vec![1, 1]);
        assert!(matches!(projective_cover(&RightModule::zero(kr)), Err(Error::ZeroModule)));
    }

    #[test]
    fn amatrix_maps_are_homomorphisms() {
        let kr = kronecker();
        let d = kr.projective_data().unwrap();
        let p0 = ProjectiveModule::new(vec![d.representative(0).clone()]);
        let p1 = ProjectiveModule::new(vec![d.representative(1).clone()]);
        // P1 -> P0 by left multiplication with the arrow a, which lies in e0 A e1
        let arrow = kr.basis_elem(2);
        let f = AMatrix { rows: 1, cols: 1, entries: vec![vec![arrow]] };
        assert!(f.is_compatible(&kr, &p1, &p0));
        let (r1, r0) = (p1.realize(&kr), p0.realize(&kr));
        let map = f.to_module_map(&r1, &r0, &kr);
        assert!(map.is_homomorphism(&r1.module, &r0.module));
        assert_eq!(map.rank(), 1);
    }
}
