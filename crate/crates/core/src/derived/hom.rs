use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::complex::{ChainMap, PerfComplex};
use crate::algebra::{division_test, same_algebra, Algebra, DivisionVerdict, Elem};
use crate::error::{Error, Result};
use crate::exactla::{BasisSolver, Matrix, Scalar, Subspace};

/// `dim H^l Hom(X, Y)` for every `l` with a nonzero value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DerivedHomProfile {
    pub dims: BTreeMap<i64, usize>,
}

impl DerivedHomProfile {
    pub fn get(&self, l: i64) -> usize {
        self.dims.get(&l).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Nonzero only in degree 0.
    pub fn concentrated_in_zero(&self) -> bool {
        self.dims.keys().all(|&l| l == 0)
    }

    /// First nonzero degree other than 0.
    pub fn off_zero(&self) -> Option<(i64, usize)> {
        self.dims.iter().find(|(l, _)| **l != 0).map(|(l, d)| (*l, *d))
    }

    pub fn euler(&self) -> i64 {
        self.dims.iter().map(|(l, d)| if l.rem_euclid(2) == 0 { *d as i64 } else { -(*d as i64) }).sum()
    }
}

struct Slot {
    degree: i64,
    row: usize,
    col: usize,
    space: Arc<Subspace>,
    offset: usize,
}

/// The Hom complex `Hom^l = prod_d Hom(X^d, Y^(d+l))`, coordinatized by
/// bases of the Peirce spaces `f_m A e_k`.
pub struct HomComplex {
    pub source: PerfComplex,
    pub target: PerfComplex,
    layouts: BTreeMap<i64, (Vec<Slot>, usize)>,
}

impl HomComplex {
    pub fn new(source: &PerfComplex, target: &PerfComplex) -> Result<HomComplex> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let mut hc = HomComplex { source: source.clone(), target: target.clone(), layouts: BTreeMap::new() };
        if !source.is_zero() && !target.is_zero() {
            for l in hc.degree_range() {
                let layout = hc.layout(l);
                hc.layouts.insert(l, layout);
            }
        }
        Ok(hc)
    }

    fn degree_range(&self) -> std::ops::RangeInclusive<i64> {
        (self.target.lo() - self.source.hi())..=(self.target.hi() - self.source.lo())
    }

    fn layout(&self, l: i64) -> (Vec<Slot>, usize) {
        let a = self.source.algebra();
        let mut slots = Vec::new();
        let mut offset = 0;
        for d in self.source.lo()..=self.source.hi() {
            let (x, y) = (self.source.term(d), self.target.term(d + l));
            for (row, f) in y.summands.iter().enumerate() {
                for (col, e) in x.summands.iter().enumerate() {
                    let space = a.peirce(f, e);
                    if space.dim() > 0 {
                        let n = space.dim();
                        slots.push(Slot { degree: d, row, col, space, offset });
                        offset += n;
                    }
                }
            }
        }
        (slots, offset)
    }

    pub fn dim(&self, l: i64) -> usize {
        self.layouts.get(&l).map_or(0, |(_, n)| *n)
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.layouts.keys().copied()
    }

    /// Chain map of degree `l` with the given coordinates.
    pub fn element(&self, l: i64, coords: &[Scalar]) -> ChainMap {
        let a = self.source.algebra();
        let mut f = ChainMap::zero(a, &self.source, &self.target, l);
        if let Some((slots, _)) = self.layouts.get(&l) {
            for s in slots {
                let v = s.space.vector(&coords[s.offset..s.offset + s.space.dim()]);
                let k = (s.degree - self.source.lo()) as usize;
                f.comps[k].entries[s.row][s.col] = v;
            }
        }
        f
    }

    pub fn coords(&self, f: &ChainMap) -> Vec<Scalar> {
        let l = f.degree;
        let field = self.source.field();
        let Some((slots, n)) = self.layouts.get(&l) else {
            return Vec::new();
        };
        let mut v = vec![field.zero(); *n];
        for s in slots {
            let k = (s.degree - self.source.lo()) as usize;
            let c = s.space.coords_unchecked(&f.comps[k].entries[s.row][s.col]);
            v[s.offset..s.offset + c.len()].clone_from_slice(&c);
        }
        v
    }

    /// Matrix of `delta: Hom^l -> Hom^(l+1)` acting on row vectors.
    pub fn delta(&self, l: i64) -> Matrix {
        let field = self.source.field();
        let (rows, cols) = (self.dim(l), self.dim(l + 1));
        let mut m = Matrix::zeros(field, rows, cols);
        if rows == 0 || cols == 0 {
            return m;
        }
        let (slots, _) = &self.layouts[&l];
        let a = self.source.algebra();
        let sign = if l.rem_euclid(2) == 0 { -field.one() } else { field.one() };
        let mut r = 0;
        for s in slots {
            for b in s.space.basis() {
                let d = s.degree;
                let k = (d - self.source.lo()) as usize;
                let mut f = ChainMap::zero(a, &self.source, &self.target, l);
                f.comps[k].entries[s.row][s.col] = b.clone();
                // only two components of delta f are touched; build them directly
                let mut g = ChainMap::zero(a, &self.source, &self.target, l + 1);
                let dy = self.target.diff(d + l);
                let left = dy.compose(a, &f.comps[k]);
                g.comps[k] = left;
                if d > self.source.lo() {
                    let dx = self.source.diff(d - 1);
                    let right = f.comps[k].compose(a, &dx).scale(&sign);
                    g.comps[k - 1] = right;
                }
                m_set_row(&mut m, r, &self.coords(&g));
                r += 1;
            }
        }
        m
    }

    pub fn profile(&self) -> DerivedHomProfile {
        let degrees: Vec<i64> = self.degrees().collect();
        let ranks: BTreeMap<i64, usize> = degrees.iter().map(|&l| (l, self.delta(l).rank())).collect();
        let mut dims = BTreeMap::new();
        for &l in &degrees {
            let h = self.dim(l) - ranks[&l] - ranks.get(&(l - 1)).copied().unwrap_or(0);
            if h > 0 {
                dims.insert(l, h);
            }
        }
        DerivedHomProfile { dims }
    }

    /// Cocycles, coboundaries and representatives of a basis of `H^l`.
    pub fn cohomology(&self, l: i64) -> Cohomology {
        let field = self.source.field();
        let n = self.dim(l);
        let cycles = Subspace::from_rows(field, n, &self.delta(l).left_kernel_basis());
        let boundaries = if self.dim(l - 1) == 0 {
            Subspace::zero(field, n)
        } else {
            Subspace::from_rows(field, n, &self.delta(l - 1).row_vecs())
        };
        let mut span = boundaries.clone();
        let mut reps = Vec::new();
        for z in cycles.basis() {
            if span.insert(z) {
                reps.push(z.clone());
            }
        }
        let mut all = reps.clone();
        all.extend(boundaries.basis().iter().cloned());
        let solver = BasisSolver::new(field, n, &all);
        Cohomology { degree: l, reps, boundaries, solver }
    }
}

fn m_set_row(m: &mut Matrix, r: usize, v: &[Scalar]) {
    for (c, x) in v.iter().enumerate() {
        if !x.is_zero() {
            m.set(r, c, x.clone());
        }
    }
}

pub struct Cohomology {
    pub degree: i64,
    pub reps: Vec<Vec<Scalar>>,
    pub boundaries: Subspace,
    solver: BasisSolver,
}

impl Cohomology {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Class of a cocycle in the basis of representatives.
    pub fn class_of(&self, z: &[Scalar]) -> Option<Vec<Scalar>> {
        self.solver.coords(z).map(|c| c[..self.reps.len()].to_vec())
    }

    pub fn is_boundary(&self, z: &[Scalar]) -> bool {
        self.boundaries.contains(z)
    }
}

/// Dimensions of `Hom(X, Y[l])` for all `l`.
pub fn derived_hom(x: &PerfComplex, y: &PerfComplex) -> Result<DerivedHomProfile> {
    Ok(HomComplex::new(x, y)?.profile())
}

/// The degree-0 algebra `H^0 End(E_1 + ... + E_n)` with product given by
/// composition, together with the images of the identities of the `E_i`.
pub struct CollectionAlgebra {
    pub algebra: Algebra,
    /// Idempotent of the algebra corresponding to each object.
    pub idempotents: Vec<Elem>,
}

/// `H^0` of the total endomorphism complex; the caller decides which
/// off-degree Homs are acceptable.
pub(crate) fn degree_zero_algebra(objects: &[PerfComplex]) -> Result<CollectionAlgebra> {
    let a = objects[0].algebra();
    let field = a.field();
    let n = objects.len();
    let mut complexes: Vec<Vec<HomComplex>> = Vec::with_capacity(n);
    let mut cohom: Vec<Vec<Cohomology>> = Vec::with_capacity(n);
    for s in objects {
        let mut hrow = Vec::with_capacity(n);
        let mut crow = Vec::with_capacity(n);
        for t in objects {
            let hc = HomComplex::new(s, t)?;
            crow.push(hc.cohomology(0));
            hrow.push(hc);
        }
        complexes.push(hrow);
        cohom.push(crow);
    }
    // basis ordered by (source, target)
    let mut offsets = vec![vec![0usize; n]; n];
    let mut total = 0;
    for s in 0..n {
        for t in 0..n {
            offsets[s][t] = total;
            total += cohom[s][t].dim();
        }
    }
    let rep_map = |s: usize, t: usize, i: usize| complexes[s][t].element(0, &cohom[s][t].reps[i]);
    let mut basis_owner = Vec::with_capacity(total);
    for s in 0..n {
        for t in 0..n {
            for i in 0..cohom[s][t].dim() {
                basis_owner.push((s, t, i));
            }
        }
    }
    let mut table = vec![vec![vec![field.zero(); total]; total]; total];
    for (x, &(t, u, i)) in basis_owner.iter().enumerate() {
        let fx = rep_map(t, u, i);
        for (y, &(s, t2, j)) in basis_owner.iter().enumerate() {
            if t2 != t {
                continue;
            }
            // x * y = x after y : E_s -> E_t -> E_u
            let fy = rep_map(s, t, j);
            let comp = fx.compose(a, &fy, &objects[s], &objects[t], &objects[u]);
            let z = complexes[s][u].coords(&comp);
            let class = cohom[s][u]
                .class_of(&z)
                .ok_or_else(|| Error::InvalidComplex("composite of cocycles is not a cocycle".into()))?;
            for (k, c) in class.into_iter().enumerate() {
                table[x][y][offsets[s][u] + k] = c;
            }
        }
    }
    let mut idempotents = Vec::with_capacity(n);
    let mut unit = vec![field.zero(); total];
    for (s, obj) in objects.iter().enumerate() {
        let id = complexes[s][s].coords(&obj.identity());
        let class = cohom[s][s].class_of(&id).ok_or_else(|| Error::InvalidComplex("identity is not a cocycle".into()))?;
        let mut e = vec![field.zero(); total];
        for (k, c) in class.into_iter().enumerate() {
            e[offsets[s][s] + k] = c.clone();
            unit[offsets[s][s] + k] = c;
        }
        idempotents.push(e);
    }
    let algebra = Algebra::from_structure_constants(field, table, unit)?;
    let nonzero: Vec<Elem> = idempotents.iter().filter(|e| e.iter().any(|c| !c.is_zero())).cloned().collect();
    let algebra = algebra.with_idempotent_hints(nonzero)?;
    Ok(CollectionAlgebra { algebra, idempotents })
}

/// `H^0 End(E)` together with the means to classify closed degree-0 maps.
pub struct EndData {
    pub algebra: Algebra,
    hom: HomComplex,
    h0: Cohomology,
}

impl EndData {
    /// Coordinates of the class of a closed map in the basis of `algebra`.
    pub fn class_of(&self, f: &ChainMap) -> Option<Vec<Scalar>> {
        if self.hom.dim(0) == 0 {
            return Some(Vec::new());
        }
        self.h0.class_of(&self.hom.coords(f))
    }
}

/// Like [`end_algebra`], keeping the Hom complex around.
pub fn end_algebra_data(e: &PerfComplex) -> Result<EndData> {
    let algebra = end_algebra(e)?;
    let hom = HomComplex::new(e, e)?;
    let h0 = hom.cohomology(0);
    Ok(EndData { algebra, hom, h0 })
}

/// `H^0 End(E)` as an algebra, provided all other degrees vanish.
pub fn end_algebra(e: &PerfComplex) -> Result<Algebra> {
    let profile = derived_hom(e, e)?;
    if let Some((degree, dim)) = profile.off_zero() {
        return Err(Error::NotFormalInDegreeZero { degree, dim });
    }
    if e.is_zero() {
        return Algebra::from_structure_constants(e.field(), Vec::new(), Vec::new());
    }
    Ok(degree_zero_algebra(std::slice::from_ref(e))?.algebra)
}

/// Result of an exceptionality predicate.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn failed(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn fail(w: impl Into<String>) -> Verdict {
        Verdict::Fail { witness: w.into() }
    }

    pub fn from_bool(ok: bool, witness: impl FnOnce() -> String) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail { witness: witness() }
        }
    }
}

fn concentrated(e: &PerfComplex) -> Result<std::result::Result<Algebra, Verdict>> {
    let profile = derived_hom(e, e)?;
    if let Some((l, d)) = profile.off_zero() {
        return Ok(Err(Verdict::fail(format!("Hom(E, E[{l}]) has dimension {d}"))));
    }
    if profile.is_zero() {
        return Ok(Err(Verdict::fail("E is zero in the homotopy category")));
    }
    Ok(Ok(end_algebra(e)?))
}

/// `Hom(E, E[l]) = 0` for `l != 0` and `End(E) = k`.
pub fn is_exceptional(e: &PerfComplex) -> Result<Verdict> {
    Ok(match concentrated(e)? {
        Err(v) => v,
        Ok(end) => Verdict::from_bool(end.dim() == 1, || format!("End(E) has dimension {}", end.dim())),
    })
}

/// Concentrated in degree 0 with a division algebra of endomorphisms.
pub fn is_w_exceptional(e: &PerfComplex) -> Result<Verdict> {
    Ok(match concentrated(e)? {
        Err(v) => v,
        Ok(end) => match division_test(&end)? {
            DivisionVerdict::Division { .. } => Verdict::Pass,
            DivisionVerdict::ZeroDivisor { witness } => {
                Verdict::fail(format!("End(E) has a zero divisor {}", crate::exactla::format_vec(&witness)))
            }
            DivisionVerdict::Undetermined { reason } => Verdict::Inconclusive { reason },
        },
    })
}

/// Concentrated in degree 0 with a semisimple algebra of endomorphisms.
pub fn is_semi_exceptional(e: &PerfComplex) -> Result<Verdict> {
    Ok(match concentrated(e)? {
        Err(v) => v,
        Ok(end) => {
            let r = end.radical()?.dim();
            Verdict::from_bool(r == 0, || format!("End(E) has a radical of dimension {r}"))
        }
    })
}

/// One failed vanishing claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityFailure {
    pub from: usize,
    pub to: usize,
    pub degree: i64,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Semiorthogonality {
    /// `(i, j, dims of Hom(E_i, E_j[*]))` for every `i > j`.
    pub checked: Vec<(usize, usize, DerivedHomProfile)>,
    pub first_failure: Option<OrthogonalityFailure>,
}

impl Semiorthogonality {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// `Hom(E_i, E_j[l]) = 0` for all `i > j` and all `l`.
pub fn check_semiorthogonal(objects: &[PerfComplex]) -> Result<Semiorthogonality> {
    let mut checked = Vec::new();
    let mut first_failure = None;
    for i in 0..objects.len() {
        for j in 0..i {
            let p = derived_hom(&objects[i], &objects[j])?;
            if first_failure.is_none() {
                if let Some((&degree, &dim)) = p.dims.iter().next() {
                    first_failure = Some(OrthogonalityFailure { from: i, to: j, degree, dim });
                }
            }
            checked.push((i, j, p));
        }
    }
    Ok(Semiorthogonality { checked, first_failure })
}

/// The algebra of a strong semi-orthogonal collection, `H^0 End(E_1 + ... + E_n)`.
pub fn collection_algebra(objects: &[PerfComplex]) -> Result<CollectionAlgebra> {
    if objects.is_empty() {
        return Err(Error::InvalidComplex("empty collection".into()));
    }
    let so = check_semiorthogonal(objects)?;
    if let Some(f) = so.first_failure {
        return Err(Error::NotSemiorthogonal { from: f.from, to: f.to, degree: f.degree, dim: f.dim });
    }
    for (s, x) in objects.iter().enumerate() {
        for (t, y) in objects.iter().enumerate().skip(s) {
            if let Some((degree, dim)) = derived_hom(x, y)?.off_zero() {
                return Err(Error::NotStrong { from: s, to: t, degree, dim });
            }
        }
    }
    degree_zero_algebra(objects)
}

/// Whether `f - g` is a coboundary in `Hom(X, Y)`.
pub fn homotopic(x: &PerfComplex, y: &PerfComplex, f: &ChainMap, g: &ChainMap) -> Result<bool> {
    let hc = HomComplex::new(x, y)?;
    let diff = f.add(&g.scale(&-x.field().one()));
    if diff.is_zero() {
        return Ok(true);
    }
    let coh = hc.cohomology(f.degree);
    Ok(coh.is_boundary(&hc.coords(&diff)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuiverPresentation;
    use crate::exactla::Field;
    use crate::homalg::{ext_dims, minimal_resolution, simple_modules, AMatrix, ProjectiveModule};

    const Q: Field = Field::Rationals;

    fn kronecker() -> Arc<Algebra> {
        Arc::new(
            Algebra::from_quiver(QuiverPresentation::new(Q, vec!["0".into(), "1".into()]).arrow("a", 0, 1).arrow("b", 0, 1))
                .unwrap(),
        )
    }

    fn stalk(a: &Arc<Algebra>, v: usize) -> PerfComplex {
        PerfComplex::stalk(a.clone(), ProjectiveModule::new(vec![a.basis_elem(v)]), 0)
    }

    #[test]
    fn projective_over_field_is_exceptional() {
        let k = Arc::new(Algebra::ground(Q));
        let p = stalk(&k, 0);
        assert_eq!(derived_hom(&p, &p).unwrap().dims, BTreeMap::from([(0, 1)]));
        assert!(is_exceptional(&p).unwrap().passed());
    }

    #[test]
    fn shifts_move_profiles() {
        let a = kronecker();
        let (p0, p1) = (stalk(&a, 0), stalk(&a, 1));
        let base = derived_hom(&p1, &p0).unwrap();
        assert_eq!(base.get(0), 2);
        for (s, t) in [(0, 1), (2, -1), (-1, 3)] {
            let shifted = derived_hom(&p1.shift(s), &p0.shift(t)).unwrap();
            for l in -5..5 {
                assert_eq!(shifted.get(l), base.get(l + t - s));
            }
        }
    }

    #[test]
    fn resolutions_reproduce_ext() {
        let a = kronecker();
        let s = simple_modules(&a).unwrap();
        for x in &s {
            for y in &s {
                let px = PerfComplex::from_resolution(&minimal_resolution(x, 5).unwrap());
                let py = PerfComplex::from_resolution(&minimal_resolution(y, 5).unwrap());
                let prof = derived_hom(&px, &py).unwrap();
                let ext = ext_dims(x, y, 3).unwrap();
                for (l, d) in ext.iter().enumerate() {
                    assert_eq!(prof.get(l as i64), *d);
                }
                assert!(prof.dims.keys().all(|&l| (0..=3).contains(&l)));
            }
        }
    }

    #[test]
    fn cone_of_identity_is_contractible() {
        let a = kronecker();
        let f = AMatrix { rows: 1, cols: 1, entries: vec![vec![a.basis_elem(2)]] };
        let x = PerfComplex::new(a.clone(), 0, vec![ProjectiveModule::new(vec![a.basis_elem(1)]), ProjectiveModule::new(vec![a.basis_elem(0)])], vec![f]).unwrap();
        let c = PerfComplex::cone(&x.identity(), &x, &x).unwrap();
        for v in 0..2 {
            assert!(derived_hom(&c, &stalk(&a, v)).unwrap().is_zero());
            assert!(derived_hom(&stalk(&a, v), &c).unwrap().is_zero());
        }
    }

    #[test]
    fn end_of_regular_dual_numbers() {
        let a = Arc::new(Algebra::truncated_polynomial(Q, 2));
        let p = stalk(&a, 0);
        let end = end_algebra(&p).unwrap();
        assert_eq!(end.dim(), 2);
        assert_eq!(end.radical().unwrap().dim(), 1);
        assert!(is_exceptional(&p).unwrap().failed());
        assert!(is_semi_exceptional(&p).unwrap().failed());
    }

    #[test]
    fn exceptionality_predicates() {
        let k = Algebra::ground(Q);
        let kk = Arc::new(k.product(&k).unwrap());
        let reg = PerfComplex::stalk(kk.clone(), ProjectiveModule::new(vec![kk.unit().clone()]), 0);
        assert!(is_semi_exceptional(&reg).unwrap().passed());
        assert!(is_exceptional(&reg).unwrap().failed());
        assert!(is_w_exceptional(&reg).unwrap().failed());
        let h = Arc::new(Algebra::quaternion(Q, -1, -1).unwrap());
        let reg = PerfComplex::stalk(h.clone(), ProjectiveModule::new(vec![h.unit().clone()]), 0);
        assert!(is_w_exceptional(&reg).unwrap().passed());
        assert!(is_exceptional(&reg).unwrap().failed());
        assert_eq!(end_algebra(&reg).unwrap().dim(), 4);
    }

    #[test]
    fn semiorthogonality_of_kronecker() {
        let a = kronecker();
        let (p0, p1) = (stalk(&a, 0), stalk(&a, 1));
        assert!(check_semiorthogonal(&[p1.clone(), p0.clone()]).unwrap().holds());
        let bad = check_semiorthogonal(&[p0.clone(), p1.clone()]).unwrap();
        assert_eq!(bad.first_failure, Some(OrthogonalityFailure { from: 1, to: 0, degree: 0, dim: 2 }));
        let coll = collection_algebra(&[p1, p0]).unwrap();
        assert_eq!(coll.algebra.dim(), 4);
        let cartan = coll.algebra.cartan_matrix().unwrap();
        assert_eq!((cartan[0][0], cartan[1][1]), (1, 1));
        assert_eq!(cartan[0][1] + cartan[1][0], 2);
        assert_eq!(cartan[0][1] * cartan[1][0], 0);
    }
}
