use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::module::{find_isomorphism, ModuleMap, RightModule};
use super::projective::{cover_generators, simple_modules, AMatrix, ProjectiveModule, RealizedProjective};
use crate::algebra::{same_algebra, Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ResolutionStatus {
    /// `P_d` is the last nonzero term.
    Complete(usize),
    /// `P_0 .. P_cutoff` computed and the next syzygy is nonzero.
    TruncatedAt(usize),
}

/// Minimal projective resolution `... -> P_1 -> P_0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: RightModule,
    pub terms: Vec<ProjectiveModule>,
    /// `differentials[l - 1]` is `d_l: P_l -> P_(l-1)`.
    pub differentials: Vec<AMatrix>,
    pub augmentation: ModuleMap,
    pub status: ResolutionStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DimensionBound {
    Finite { value: usize },
    AtLeast { cutoff: usize },
    /// A syzygy recurred up to isomorphism: `Omega^(onset + period) = Omega^onset != 0`.
    PeriodicHenceInfinite { onset: usize, period: usize },
}

impl DimensionBound {
    pub fn is_finite(&self) -> bool {
        matches!(self, DimensionBound::Finite { .. })
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            DimensionBound::Finite { value } => Some(*value),
            _ => None,
        }
    }

    /// Whether the bound is a definite answer (finite, or provably infinite).
    pub fn is_definitive(&self) -> bool {
        !matches!(self, DimensionBound::AtLeast { .. })
    }

    /// Least upper bound of two dimensions.
    pub fn max(self, other: DimensionBound) -> DimensionBound {
        use DimensionBound::*;
        match (self, other) {
            (p @ PeriodicHenceInfinite { .. }, _) | (_, p @ PeriodicHenceInfinite { .. }) => p,
            (a @ AtLeast { .. }, _) | (_, a @ AtLeast { .. }) => a,
            (Finite { value: x }, Finite { value: y }) => Finite { value: x.max(y) },
        }
    }
}

impl fmt::Display for DimensionBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionBound::Finite { value } => write!(f, "Finite({value})"),
            DimensionBound::AtLeast { cutoff } => write!(f, "AtLeast({cutoff})"),
            DimensionBound::PeriodicHenceInfinite { onset, period } => {
                write!(f, "PeriodicHenceInfinite(onset {onset}, period {period})")
            }
        }
    }
}

/// One step of the resolution machine: the newest term, realized, and its kernel.
struct Stepper {
    algebra: Arc<Algebra>,
    ambient: RightModule,
    ambient_real: Option<RealizedProjective>,
    sub: Subspace,
}

struct Step {
    term: ProjectiveModule,
    /// Map from the new term to the previous ambient (realized coordinates).
    map: ModuleMap,
    /// `d_l` as an A-matrix when the ambient is itself a realized projective.
    differential: Option<AMatrix>,
}

impl Stepper {
    fn new(m: &RightModule) -> Stepper {
        Stepper {
            algebra: m.algebra().clone(),
            ambient: m.clone(),
            ambient_real: None,
            sub: Subspace::full(m.field(), m.dim()),
        }
    }

    fn syzygy(&self) -> Result<RightModule> {
        Ok(self.ambient.submodule(&self.sub)?.0)
    }

    /// Covers the current syzygy; returns None when it is zero.
    fn step(&mut self) -> Result<Option<Step>> {
        if self.sub.dim() == 0 {
            return Ok(None);
        }
        let a = self.algebra.clone();
        let data = a.projective_data()?;
        let gens = cover_generators(&self.ambient, &self.sub)?;
        let term = ProjectiveModule::new(gens.iter().map(|(_, c)| data.representative(*c).clone()).collect());
        let real = term.realize(&a);
        let mut rows = Vec::with_capacity(real.module.dim());
        for (k, (w, _)) in gens.iter().enumerate() {
            for u in real.block_basis(k) {
                rows.push(self.ambient.act(w, u));
            }
        }
        let map = ModuleMap { matrix: Matrix::from_rows(a.field(), self.ambient.dim(), rows) };
        let differential = self.ambient_real.as_ref().map(|prev| {
            let cols: Vec<Vec<Elem>> = gens.iter().map(|(w, _)| prev.to_elems(w)).collect();
            let rows = prev.to_elems(&gens[0].0).len();
            AMatrix {
                rows,
                cols: cols.len(),
                entries: (0..rows).map(|m| cols.iter().map(|c| c[m].clone()).collect()).collect(),
            }
        });
        self.sub = map.kernel();
        self.ambient = real.module.clone();
        self.ambient_real = Some(real);
        Ok(Some(Step { term, map, differential }))
    }
}

/// Minimal projective resolution computed up to `P_cutoff`.
pub fn minimal_resolution(m: &RightModule, cutoff: usize) -> Result<Resolution> {
    let mut st = Stepper::new(m);
    let mut terms = Vec::new();
    let mut differentials = Vec::new();
    let mut augmentation = ModuleMap { matrix: Matrix::zeros(m.field(), 0, m.dim()) };
    loop {
        let l = terms.len();
        match st.step()? {
            None => {
                let status = ResolutionStatus::Complete(l.saturating_sub(1));
                return Ok(Resolution { module: m.clone(), terms, differentials, augmentation, status });
            }
            Some(step) => {
                if l == 0 {
                    augmentation = step.map;
                } else {
                    differentials.push(step.differential.expect("differential after the first step"));
                }
                terms.push(step.term);
                if l == cutoff {
                    let status = if st.sub.dim() == 0 {
                        ResolutionStatus::Complete(l)
                    } else {
                        ResolutionStatus::TruncatedAt(cutoff)
                    };
                    return Ok(Resolution { module: m.clone(), terms, differentials, augmentation, status });
                }
            }
        }
    }
}

impl Resolution {
    pub fn length(&self) -> Option<usize> {
        match self.status {
            ResolutionStatus::Complete(d) => Some(d),
            ResolutionStatus::TruncatedAt(_) => None,
        }
    }

    /// Whether every differential has entries in the radical.
    pub fn is_minimal(&self) -> Result<bool> {
        let a = self.module.algebra();
        let rad = a.radical()?;
        Ok(self.differentials.iter().all(|d| d.entries.iter().all(|r| r.iter().all(|x| rad.contains(x)))))
    }

    /// `d_l d_(l+1) = 0` and exactness at every computed position.
    pub fn verify(&self) -> Result<bool> {
        let a = self.module.algebra().clone();
        let reals: Vec<RealizedProjective> = self.terms.iter().map(|p| p.realize(&a)).collect();
        let maps: Vec<ModuleMap> = self
            .differentials
            .iter()
            .enumerate()
            .map(|(i, d)| d.to_module_map(&reals[i + 1], &reals[i], &a))
            .collect();
        if let Some(first) = maps.first() {
            if !first.then(&self.augmentation).matrix.is_zero() {
                return Ok(false);
            }
        }
        if !self.terms.is_empty() && !self.augmentation.is_surjective() {
            return Ok(false);
        }
        for w in maps.windows(2) {
            if !w[1].then(&w[0]).matrix.is_zero() {
                return Ok(false);
            }
        }
        // exactness: rank(d_(l+1)) = dim ker(d_l)
        let mut prev_kernel = self.augmentation.kernel().dim();
        for f in &maps {
            if f.rank() != prev_kernel {
                return Ok(false);
            }
            prev_kernel = f.kernel().dim();
        }
        if matches!(self.status, ResolutionStatus::Complete(_)) && prev_kernel != 0 && !self.terms.is_empty() {
            return Ok(false);
        }
        Ok(true)
    }
}

/// `dim Ext^l(M, N)` for `l = 0..=max_degree`, from `Hom(P_l, N) = sum N e_k`.
pub fn ext_dims(m: &RightModule, n: &RightModule, max_degree: usize) -> Result<Vec<usize>> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let res = minimal_resolution(m, max_degree + 1)?;
    ext_dims_from(&res, n, max_degree)
}

pub fn ext_dims_from(res: &Resolution, n: &RightModule, max_degree: usize) -> Result<Vec<usize>> {
    let field = n.field();
    // Hom(P_l, N): for each summand e_k the subspace N e_k
    let hom_spaces: Vec<Vec<Subspace>> =
        res.terms.iter().map(|p| p.summands.iter().map(|e| n.peirce(e)).collect()).collect();
    let hom_dim = |l: usize| -> usize { hom_spaces.get(l).map_or(0, |v| v.iter().map(Subspace::dim).sum()) };
    // rank of delta_l: Hom(P_(l-1), N) -> Hom(P_l, N), f -> f d_l
    let delta_rank = |l: usize| -> usize {
        if l == 0 || l >= res.terms.len() {
            return 0;
        }
        let d = &res.differentials[l - 1];
        let src = &hom_spaces[l - 1];
        let tgt = &hom_spaces[l];
        let cols: usize = tgt.iter().map(Subspace::dim).sum();
        let mut rows = Vec::new();
        for (k, sk) in src.iter().enumerate() {
            for v in sk.basis() {
                let mut row = Vec::with_capacity(cols);
                for (m, sm) in tgt.iter().enumerate() {
                    row.extend(sm.coords_unchecked(&n.act(v, &d.entries[k][m])));
                }
                rows.push(row);
            }
        }
        if rows.is_empty() || cols == 0 {
            return 0;
        }
        Matrix::from_rows(field, cols, rows).rank()
    };
    Ok((0..=max_degree).map(|l| hom_dim(l) - delta_rank(l + 1) - delta_rank(l)).collect())
}

/// Projective dimension with periodicity detection on syzygies.
pub fn projective_dimension(m: &RightModule, cutoff: usize) -> Result<DimensionBound> {
    if m.is_zero() {
        return Ok(DimensionBound::Finite { value: 0 });
    }
    let mut st = Stepper::new(m);
    let mut seen: Vec<RightModule> = vec![m.clone()];
    let mut l: usize = 0;
    loop {
        if st.step()?.is_none() {
            return Ok(DimensionBound::Finite { value: l.saturating_sub(1) });
        }
        l += 1;
        if st.sub.dim() == 0 {
            return Ok(DimensionBound::Finite { value: l - 1 });
        }
        if l > cutoff {
            return Ok(DimensionBound::AtLeast { cutoff });
        }
        let omega = st.syzygy()?;
        for (j, prev) in seen.iter().enumerate() {
            if prev.dim() == omega.dim() && find_isomorphism(prev, &omega, (j as u64) << 8 | l as u64)?.is_some() {
                return Ok(DimensionBound::PeriodicHenceInfinite { onset: j, period: l - j });
            }
        }
        seen.push(omega);
    }
}

/// Supremum of the projective dimensions of the simple modules.
pub fn global_dimension(a: &Arc<Algebra>, cutoff: usize) -> Result<DimensionBound> {
    let mut bound = DimensionBound::Finite { value: 0 };
    for s in simple_modules(a)? {
        bound = bound.max(projective_dimension(&s, cutoff)?);
    }
    Ok(bound)
}

/// Regularity read as finite global dimension.
pub fn is_regular(a: &Arc<Algebra>, cutoff: usize) -> Result<DimensionBound> {
    global_dimension(a, cutoff)
}

/// `A` as a right module over `A^op (x) A` with `m . (x (x) y) = x m y`.
pub fn bimodule_of(a: &Arc<Algebra>) -> Result<RightModule> {
    let env = Arc::new(a.enveloping());
    let n = a.dim();
    let field = a.field();
    let action = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            let rows = (0..n).map(|k| a.mul(&a.basis_product(i, k), &a.basis_elem(j))).collect();
            Matrix::from_rows(field, n, rows)
        })
        .collect();
    RightModule::from_action(env, n, action)
}

/// Projective dimension of `A` over its enveloping algebra.
pub fn is_smooth(a: &Arc<Algebra>, cutoff: usize) -> Result<DimensionBound> {
    projective_dimension(&bimodule_of(a)?, cutoff)
}

/// Every Ext space between simples up to the global dimension (or cutoff) is
/// finite-dimensional, which holds for any finite-dimensional algebra; the
/// computation is carried out rather than assumed.
pub fn is_proper(a: &Arc<Algebra>, cutoff: usize) -> Result<bool> {
    let bound = match global_dimension(a, cutoff)? {
        DimensionBound::Finite { value } => value,
        _ => cutoff.min(3),
    };
    let simples = simple_modules(a)?;
    for s in &simples {
        let res = minimal_resolution(s, bound + 1)?;
        for t in &simples {
            let dims = ext_dims_from(&res, t, bound)?;
            if dims.len() != bound + 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuiverPresentation;
    use crate::exactla::Field;
    use crate::homalg::hom_space;

    const Q: Field = Field::Rationals;

    fn kronecker() -> Arc<Algebra> {
        Arc::new(
            Algebra::from_quiver(QuiverPresentation::new(Q, vec!["0".into(), "1".into()]).arrow("a", 0, 1).arrow("b", 0, 1))
                .unwrap(),
        )
    }

    fn local(n: usize) -> Arc<Algebra> {
        Arc::new(Algebra::truncated_polynomial(Q, n))
    }

    #[test]
    fn projective_resolves_in_one_step() {
        let a = kronecker();
        let r = minimal_resolution(&RightModule::regular(a), 5).unwrap();
        assert_eq!(r.status, ResolutionStatus::Complete(0));
        assert!(r.verify().unwrap());
    }

    #[test]
    fn kronecker_simple_at_source() {
        let a = kronecker();
        let s = simple_modules(&a).unwrap();
        let r = minimal_resolution(&s[0], 5).unwrap();
        assert_eq!(r.status, ResolutionStatus::Complete(1));
        assert_eq!(r.terms[1].len(), 2);
        assert!(r.verify().unwrap());
        assert!(r.is_minimal().unwrap());
        assert_eq!(ext_dims(&s[0], &s[1], 3).unwrap(), vec![0, 2, 0, 0]);
        assert_eq!(ext_dims(&s[1], &s[0], 3).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn dual_numbers_are_periodic() {
        let a = local(2);
        let s = &simple_modules(&a).unwrap()[0];
        let r = minimal_resolution(s, 10).unwrap();
        assert_eq!(r.status, ResolutionStatus::TruncatedAt(10));
        assert!(r.verify().unwrap());
        assert_eq!(ext_dims(s, s, 4).unwrap(), vec![1; 5]);
        assert_eq!(
            projective_dimension(s, 20).unwrap(),
            DimensionBound::PeriodicHenceInfinite { onset: 0, period: 1 }
        );
    }

    #[test]
    fn global_dimensions() {
        let k = Arc::new(Algebra::ground(Q));
        assert_eq!(global_dimension(&k, 20).unwrap(), DimensionBound::Finite { value: 0 });
        assert_eq!(global_dimension(&kronecker(), 20).unwrap(), DimensionBound::Finite { value: 1 });
        assert!(matches!(
            global_dimension(&local(2), 20).unwrap(),
            DimensionBound::PeriodicHenceInfinite { .. }
        ));
        assert!(!global_dimension(&local(2), 20).unwrap().is_finite());
    }

    #[test]
    fn smoothness() {
        let k = Arc::new(Algebra::ground(Q));
        assert_eq!(is_smooth(&k, 20).unwrap(), DimensionBound::Finite { value: 0 });
        assert_eq!(is_smooth(&kronecker(), 20).unwrap(), DimensionBound::Finite { value: 1 });
        assert!(matches!(is_smooth(&local(2), 20).unwrap(), DimensionBound::PeriodicHenceInfinite { .. }));
        bimodule_of(&local(2)).unwrap().verify().unwrap();
    }

    #[test]
    fn ext_zero_matches_hom_space() {
        let a = local(3);
        let reg = RightModule::regular(a.clone());
        let rad = reg.radical_submodule().unwrap();
        let (top, _) = reg.quotient(&rad).unwrap();
        for (x, y) in [(&reg, &top), (&top, &reg), (&top, &top)] {
            assert_eq!(ext_dims(x, y, 2).unwrap()[0], hom_space(x, y).unwrap().len());
        }
        assert_eq!(ext_dims(&reg, &top, 3).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn properness() {
        assert!(is_proper(&local(2), 20).unwrap());
        assert!(is_proper(&kronecker(), 20).unwrap());
    }
}
