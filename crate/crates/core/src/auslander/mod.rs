//! `Gamma = End(M)` for `M = Lambda/r + Lambda/r^2 + ... + Lambda/r^n`, its
//! projectives `P_s = Hom(M, M_s)` and the two-term complexes `K_i`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, AlgebraMap, Elem};
use crate::derived::{
    derived_hom, end_algebra_data, verify_sod, CertStep, ChainMap, DerivedHomProfile, GenerationCertificate, PerfComplex,
    SODReport, Verdict,
};
use crate::error::{Error, Result};
use crate::exactla::{BasisSolver, Matrix, Scalar};
use crate::homalg::{
    global_dimension, hom_space, minimal_resolution, simple_modules, AMatrix, DimensionBound, ModuleMap, ProjectiveModule,
    RightModule,
};

/// `End(M_0 + ... + M_(n-1))` with basis the concatenated Hom-space bases,
/// ordered by (source, target). The product is composition: `x * y = x after y`.
pub struct EndomorphismAlgebra {
    pub algebra: Arc<Algebra>,
    pub parts: Vec<RightModule>,
    /// `bases[s][t]` is a basis of `Hom(M_s, M_t)`.
    pub bases: Vec<Vec<Vec<ModuleMap>>>,
    offsets: Vec<Vec<usize>>,
    solvers: Vec<Vec<BasisSolver>>,
    /// `id_(M_s)` inside the algebra.
    pub idempotents: Vec<Elem>,
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.row_vecs().concat()
}

impl EndomorphismAlgebra {
    pub fn new(parts: Vec<RightModule>) -> Result<EndomorphismAlgebra> {
        let field = parts.first().ok_or(Error::ZeroModule)?.field();
        let k = parts.len();
        let mut bases = vec![Vec::with_capacity(k); k];
        for (s, m) in parts.iter().enumerate() {
            for t in &parts {
                bases[s].push(hom_space(m, t)?);
            }
        }
        let mut offsets = vec![vec![0; k]; k];
        let mut total = 0;
        let mut owner = Vec::new();
        for s in 0..k {
            for t in 0..k {
                offsets[s][t] = total;
                total += bases[s][t].len();
                owner.extend((0..bases[s][t].len()).map(|i| (s, t, i)));
            }
        }
        let solvers: Vec<Vec<BasisSolver>> = (0..k)
            .map(|s| {
                (0..k)
                    .map(|t| {
                        let rows: Vec<Vec<Scalar>> = bases[s][t].iter().map(|f| flatten(&f.matrix)).collect();
                        BasisSolver::new(field, parts[s].dim() * parts[t].dim(), &rows)
                    })
                    .collect()
            })
            .collect();
        let express = |s: usize, t: usize, m: &Matrix| -> Result<Elem> {
            let c = solvers[s][t]
                .coords(&flatten(m))
                .ok_or_else(|| Error::InvalidModule("map is not in the Hom space".into()))?;
            let mut v = vec![field.zero(); total];
            v[offsets[s][t]..offsets[s][t] + c.len()].clone_from_slice(&c);
            Ok(v)
        };
        let mut table = Vec::with_capacity(total * total);
        for &(t, u, i) in &owner {
            let x = &bases[t][u][i];
            for &(s, t2, j) in &owner {
                if t2 != t {
                    table.push(Vec::new());
                    continue;
                }
                let comp = bases[s][t][j].then(x);
                let v = express(s, u, &comp.matrix)?;
                table.push(v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
        }
        let mut idempotents = Vec::with_capacity(k);
        let mut unit = vec![field.zero(); total];
        for (s, m) in parts.iter().enumerate() {
            let e = express(s, s, &Matrix::identity(field, m.dim()))?;
            crate::exactla::vec_axpy(&mut unit, &field.one(), &e);
            idempotents.push(e);
        }
        let alg = Algebra::from_sparse_unchecked(field, total, table, unit);
        alg.verify()?;
        let hints: Vec<Elem> = idempotents.iter().filter(|e| e.iter().any(|c| !c.is_zero())).cloned().collect();
        let alg = alg.with_idempotent_hints(hints)?;
        Ok(EndomorphismAlgebra { algebra: Arc::new(alg), parts, bases, offsets, solvers, idempotents })
    }

    /// A module map `M_s -> M_t` as an element of the algebra.
    pub fn element(&self, s: usize, t: usize, f: &ModuleMap) -> Result<Elem> {
        let field = self.algebra.field();
        let c = self.solvers[s][t]
            .coords(&flatten(&f.matrix))
            .ok_or_else(|| Error::InvalidModule("map is not a homomorphism between the parts".into()))?;
        let mut v = vec![field.zero(); self.algebra.dim()];
        v[self.offsets[s][t]..self.offsets[s][t] + c.len()].clone_from_slice(&c);
        Ok(v)
    }

    pub fn hom_dim(&self, s: usize, t: usize) -> usize {
        self.bases[s][t].len()
    }
}

pub struct AuslanderData {
    pub lambda: Arc<Algebra>,
    /// Nilpotency index of the radical.
    pub n: usize,
    /// `M_s = Lambda / r^(s+1)`.
    pub m_parts: Vec<RightModule>,
    pub gamma: EndomorphismAlgebra,
    /// `P_s = e_s Gamma = Hom(M, M_s)`.
    pub p_modules: Vec<ProjectiveModule>,
    /// `phi[s]` for `s >= 1`: the canonical surjection `M_s -> M_(s-1)` as an
    /// element of `e_(s-1) Gamma e_s`; `phi[0]` is zero.
    pub phi: Vec<Elem>,
    pub k_objects: Vec<PerfComplex>,
    /// Index of `Hom(M, Lambda)` among the `P_s`.
    pub pn_index: usize,
    /// `left[s][i]`: left multiplication by the `i`-th basis element of
    /// Lambda on `M_s`, as an element of `e_s Gamma e_s`.
    pub left: Vec<Vec<Elem>>,
}

impl AuslanderData {
    pub fn gamma_algebra(&self) -> &Arc<Algebra> {
        &self.gamma.algebra
    }

    /// `a -> sum_s (left multiplication by a on M_s)`, applied to `P_n` only.
    pub fn lambda_to_gamma(&self, x: &[Scalar]) -> Elem {
        let g = self.gamma_algebra();
        let mut v = g.zero();
        for (c, e) in x.iter().zip(&self.left[self.pn_index]) {
            if !c.is_zero() {
                crate::exactla::vec_axpy(&mut v, c, e);
            }
        }
        v
    }

    fn stalk(&self, s: usize) -> PerfComplex {
        PerfComplex::stalk(self.gamma.algebra.clone(), self.p_modules[s].clone(), 0)
    }
}

pub fn build(lambda: Arc<Algebra>) -> Result<AuslanderData> {
    let field = lambda.field();
    let n = lambda.nilpotency_index()?;
    let reg = RightModule::regular(lambda.clone());
    let mut m_parts = Vec::with_capacity(n);
    let mut projections = Vec::with_capacity(n);
    let mut kept = Vec::with_capacity(n);
    for p in 1..=n {
        let rp = lambda.radical_power(p)?.basis;
        let (m, proj) = reg.quotient(&rp)?;
        kept.push(rp.complement_indices());
        m_parts.push(m);
        projections.push(proj);
    }
    let gamma = EndomorphismAlgebra::new(m_parts.clone())?;
    let g = gamma.algebra.clone();
    let mut left = Vec::with_capacity(n);
    for s in 0..n {
        let mut row = Vec::with_capacity(lambda.dim());
        for i in 0..lambda.dim() {
            let a = lambda.basis_elem(i);
            let rows = kept[s].iter().map(|&k| projections[s].apply(&lambda.mul(&a, &lambda.basis_elem(k)))).collect();
            let f = ModuleMap { matrix: Matrix::from_rows(field, m_parts[s].dim(), rows) };
            row.push(gamma.element(s, s, &f)?);
        }
        left.push(row);
    }
    let mut phi = vec![g.zero()];
    for s in 1..n {
        let rows = kept[s].iter().map(|&k| projections[s - 1].apply(&lambda.basis_elem(k))).collect();
        let f = ModuleMap { matrix: Matrix::from_rows(field, m_parts[s - 1].dim(), rows) };
        phi.push(gamma.element(s, s - 1, &f)?);
    }
    let p_modules: Vec<ProjectiveModule> = gamma.idempotents.iter().map(|e| ProjectiveModule::new(vec![e.clone()])).collect();
    let mut k_objects = Vec::with_capacity(n);
    for s in 0..n {
        if s == 0 {
            k_objects.push(PerfComplex::stalk(g.clone(), p_modules[0].clone(), 0));
        } else {
            let minus_phi = crate::exactla::vec_scale(&phi[s], &-field.one());
            let d = AMatrix { rows: 1, cols: 1, entries: vec![vec![minus_phi]] };
            k_objects.push(PerfComplex::new(g.clone(), 0, vec![p_modules[s].clone(), p_modules[s - 1].clone()], vec![d])?);
        }
    }
    Ok(AuslanderData { lambda, n, m_parts, gamma, p_modules, phi, k_objects, pn_index: n - 1, left })
}

#[derive(Clone, Debug, Serialize)]
pub struct GldimReport {
    pub n: usize,
    pub bound: usize,
    pub gldim: DimensionBound,
    pub verdict: Verdict,
}

pub fn verify_gldim(d: &AuslanderData, cutoff: usize) -> Result<GldimReport> {
    let bound = d.n + 1;
    let gldim = global_dimension(&d.gamma.algebra, cutoff.max(d.n + 2))?;
    let verdict = match &gldim {
        DimensionBound::Finite { value } => Verdict::from_bool(*value <= bound, || format!("gl.dim {value} exceeds {bound}")),
        DimensionBound::AtLeast { cutoff } => Verdict::Inconclusive { reason: format!("resolution reached cutoff {cutoff}") },
        DimensionBound::PeriodicHenceInfinite { .. } => Verdict::fail("a simple module has a periodic resolution"),
    };
    Ok(GldimReport { n: d.n, bound, gldim, verdict })
}

#[derive(Clone, Debug, Serialize)]
pub struct CollectionCheck {
    pub tag: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct CollectionReport {
    pub checks: Vec<CollectionCheck>,
    /// `dim End(K_i)`.
    pub end_dims: Vec<usize>,
    /// Dimension of the kernel of `Lambda -> End(K_i)`.
    pub kernel_dims: Vec<usize>,
    /// `Hom(K_i, K_j[*])` for all pairs.
    pub profiles: Vec<(usize, usize, DerivedHomProfile)>,
    pub sod: SODReport,
}

impl CollectionReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.passed()) && self.sod.holds()
    }
}

fn first_nonzero(pairs: impl IntoIterator<Item = (String, DerivedHomProfile)>) -> Verdict {
    for (what, p) in pairs {
        if let Some((l, dim)) = p.dims.iter().next() {
            return Verdict::fail(format!("{what} is nonzero in degree {l} (dimension {dim})"));
        }
    }
    Verdict::Pass
}

/// `P_1 = K_1`; each further `P_i` is a retract of the cone of
/// `P_(i-1)[-1] -> K_i`.
pub fn certificate(d: &AuslanderData) -> GenerationCertificate {
    let g = &d.gamma.algebra;
    let n = d.n;
    let mut steps: Vec<CertStep> = (0..n).map(CertStep::Generator).collect();
    let mut p_node = 0;
    let mut targets = vec![0];
    for s in 1..n {
        let prev = &d.p_modules[s - 1];
        steps.push(CertStep::Shift { node: p_node, by: -1 });
        let shift_node = steps.len() - 1;
        let map = ChainMap { degree: 0, comps: vec![AMatrix::identity(g, prev)] };
        steps.push(CertStep::Cone { source: shift_node, target: s, map });
        let cone_node = steps.len() - 1;
        let e = d.gamma.idempotents[s].clone();
        let inclusion = ChainMap { degree: 0, comps: vec![AMatrix { rows: 2, cols: 1, entries: vec![vec![d.phi[s].clone()], vec![e.clone()]] }] };
        let retraction = ChainMap {
            degree: 0,
            comps: vec![AMatrix { rows: 1, cols: 2, entries: vec![vec![g.zero(), e]] }, AMatrix::zero(g, 0, 1)],
        };
        steps.push(CertStep::Summand { node: cone_node, object: d.stalk(s), inclusion, retraction });
        p_node = steps.len() - 1;
        targets.push(p_node);
    }
    GenerationCertificate { generators: d.k_objects.clone(), steps, targets }
}

/// The six claims about `K_1, ..., K_n`.
pub fn verify_collection(d: &AuslanderData) -> Result<CollectionReport> {
    let n = d.n;
    let ks = &d.k_objects;
    let ps: Vec<PerfComplex> = (0..n).map(|s| d.stalk(s)).collect();
    let mut checks = Vec::new();
    let mut push = |tag: &str, verdict: Verdict| checks.push(CollectionCheck { tag: tag.into(), verdict });

    let mut kp = Vec::new();
    for i in 0..n {
        for j in 0..i {
            kp.push((format!("Hom(K_{}, P_{})", i + 1, j + 1), derived_hom(&ks[i], &ps[j])?));
        }
    }
    push("auslander/vanish-kp", first_nonzero(kp));

    let mut profiles = Vec::new();
    for i in 0..n {
        for j in 0..n {
            profiles.push((i, j, derived_hom(&ks[i], &ks[j])?));
        }
    }
    push(
        "auslander/vanish-kk",
        first_nonzero(profiles.iter().filter(|(i, j, _)| i > j).map(|(i, j, p)| (format!("Hom(K_{}, K_{})", i + 1, j + 1), p.clone()))),
    );
    let off = profiles.iter().filter(|(i, j, _)| i == j).find_map(|(i, _, p)| p.off_zero().map(|(l, dim)| (i, l, dim)));
    push(
        "auslander/end-degree-zero",
        match off {
            Some((i, l, dim)) => Verdict::fail(format!("Hom(K_{}, K_{}[{l}]) has dimension {dim}", i + 1, i + 1)),
            None => Verdict::Pass,
        },
    );

    let mut ends = Vec::with_capacity(n);
    let mut semisimple = Verdict::Pass;
    let mut quotient = Verdict::Pass;
    let mut end_dims = Vec::new();
    let mut kernel_dims = Vec::new();
    if off.is_none() {
        for (i, k) in ks.iter().enumerate() {
            let data = end_algebra_data(k)?;
            let r = data.algebra.radical()?.dim();
            if r > 0 && semisimple.passed() {
                semisimple = Verdict::fail(format!("End(K_{}) has a radical of dimension {r}", i + 1));
            }
            end_dims.push(data.algebra.dim());
            ends.push(data);
        }
        let lambda = &d.lambda;
        let radical = lambda.radical()?.basis;
        for (i, data) in ends.iter().enumerate() {
            let mut rows = Vec::with_capacity(lambda.dim());
            for a in 0..lambda.dim() {
                let mut comps = vec![AMatrix { rows: 1, cols: 1, entries: vec![vec![d.left[i][a].clone()]] }];
                if i > 0 {
                    comps.push(AMatrix { rows: 1, cols: 1, entries: vec![vec![d.left[i - 1][a].clone()]] });
                }
                let f = ChainMap { degree: 0, comps };
                if !f.is_closed(&ks[i], &ks[i]) {
                    return Err(Error::NotChainMap(format!("left multiplication on K_{}", i + 1)));
                }
                rows.push(data.class_of(&f).ok_or_else(|| Error::NotChainMap("class of a closed map".into()))?);
            }
            let m = AlgebraMap { matrix: Matrix::from_rows(lambda.field(), data.algebra.dim(), rows) };
            let rank = m.matrix.rank();
            kernel_dims.push(lambda.dim() - rank);
            let mult = m.is_multiplicative(lambda, &data.algebra);
            let onto = rank == data.algebra.dim();
            let kills_radical = radical.basis().iter().all(|r| m.apply(r).iter().all(|c| c.is_zero()));
            if quotient.passed() && !(mult && onto && kills_radical) {
                quotient = Verdict::fail(format!(
                    "Lambda -> End(K_{}): multiplicative {mult}, surjective {onto}, radical in kernel {kills_radical}",
                    i + 1
                ));
            }
        }
    } else {
        semisimple = Verdict::Inconclusive { reason: "End(K_i) is not concentrated in degree 0".into() };
        quotient = semisimple.clone();
    }
    push("auslander/end-semisimple", semisimple);
    push("auslander/end-quotient", quotient);

    let sod = verify_sod(ks, &certificate(d))?;
    push("auslander/generation", sod.certificate.clone());
    Ok(CollectionReport { checks, end_dims, kernel_dims, profiles, sod })
}

#[derive(Clone, Debug, Serialize)]
pub struct RecoveryReport {
    pub dim_lambda: usize,
    pub dim_end: usize,
    pub multiplicative: bool,
    pub bijective: bool,
    pub unital: bool,
    pub concentrated: bool,
    pub verdict: Verdict,
}

/// `Lambda -> End_Gamma(P_n) = e_n Gamma e_n` is an isomorphism.
pub fn verify_endomorphism_recovery(d: &AuslanderData) -> Result<RecoveryReport> {
    let g = &d.gamma.algebra;
    let e = &d.gamma.idempotents[d.pn_index];
    let (end, sub) = g.corner(e)?;
    let rows = (0..d.lambda.dim())
        .map(|i| sub.coords(&d.left[d.pn_index][i]).ok_or_else(|| Error::InvalidModule("left multiplication leaves the corner".into())))
        .collect::<Result<Vec<_>>>()?;
    let m = AlgebraMap { matrix: Matrix::from_rows(g.field(), end.dim(), rows) };
    let multiplicative = m.is_multiplicative(&d.lambda, &end);
    let bijective = m.is_bijective();
    let unital = m.preserves_unit(&d.lambda, &end);
    let pn = d.stalk(d.pn_index);
    let concentrated = derived_hom(&pn, &pn)?.concentrated_in_zero();
    let ok = multiplicative && bijective && unital && concentrated;
    let verdict = Verdict::from_bool(ok, || {
        format!("multiplicative {multiplicative}, bijective {bijective}, unital {unital}, concentrated {concentrated}")
    });
    Ok(RecoveryReport { dim_lambda: d.lambda.dim(), dim_end: end.dim(), multiplicative, bijective, unital, concentrated, verdict })
}

#[derive(Clone, Debug, Serialize)]
pub struct EmbedReport {
    /// `(i, j, Hom over Lambda, Hom over Gamma)` for the test objects.
    pub compared: Vec<(usize, usize, DerivedHomProfile, DerivedHomProfile)>,
    pub verdict: Verdict,
}

/// `- (x)_Lambda P_n` on a perfect complex.
pub fn embed_complex(d: &AuslanderData, x: &PerfComplex) -> PerfComplex {
    x.transport(d.gamma.algebra.clone(), |a| d.lambda_to_gamma(a))
}

/// Derived Homs between projectives of Lambda and short resolutions of its
/// simples survive the embedding.
pub fn embed_perf(d: &AuslanderData) -> Result<EmbedReport> {
    let lambda = &d.lambda;
    let data = lambda.projective_data()?;
    let mut objs: Vec<PerfComplex> = (0..data.class_count())
        .map(|c| PerfComplex::stalk(lambda.clone(), ProjectiveModule::new(vec![data.representative(c).clone()]), 0))
        .collect();
    objs.push(PerfComplex::stalk(lambda.clone(), ProjectiveModule::new(vec![lambda.unit().clone()]), 0));
    for s in simple_modules(lambda)? {
        objs.push(PerfComplex::from_resolution(&minimal_resolution(&s, 2)?));
    }
    let images: Vec<PerfComplex> = objs.iter().map(|x| embed_complex(d, x)).collect();
    let mut compared = Vec::new();
    let mut verdict = Verdict::Pass;
    for i in 0..objs.len() {
        for j in 0..objs.len() {
            let before = derived_hom(&objs[i], &objs[j])?;
            let after = derived_hom(&images[i], &images[j])?;
            if before != after && verdict.passed() {
                verdict = Verdict::fail(format!("objects {i}, {j}: {:?} became {:?}", before.dims, after.dims));
            }
            compared.push((i, j, before, after));
        }
    }
    Ok(EmbedReport { compared, verdict })
}

#[cfg(test)]
mod tests;
