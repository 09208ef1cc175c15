//! Composition tensors `mu: V (x) U -> W` with `dim U = dim V = 3`,
//! `dim W = 6`, their kernels `T`, slice ranks, degeneracy cubics and the
//! 15-dimensional plane algebra.
//!
//! `V (x) U` has basis `x_v (x) x_u` at index `3 v + u`.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, QuiverPresentation};
use crate::derived::{
    check_semiorthogonal, collection_algebra, derived_hom, is_exceptional, projective_stalk, verify_sod, GenerationCertificate,
    PerfComplex, SODReport, Verdict,
};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar, Subspace};
use crate::homalg::{global_dimension, DimensionBound};

#[derive(Clone, Debug)]
pub struct MuTensor {
    pub field: Field,
    /// `9 x 6`, row-vector convention.
    pub mu: Matrix,
    /// Basis of `T = ker mu`, three vectors in `V (x) U`.
    pub t: Vec<Vec<Scalar>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Functionals on `U`, contracting to `nu_{u*}: T -> V`.
    U,
    /// Functionals on `V`, contracting to `nu_{v*}: T -> U`.
    V,
}

impl MuTensor {
    /// `mu` is the quotient of `V (x) U` by the span of `t`.
    pub fn from_kernel(field: Field, t: Vec<Vec<Scalar>>) -> Result<MuTensor> {
        let sub = Subspace::from_rows(field, 9, &t);
        if sub.dim() != 3 || t.len() != 3 {
            return Err(Error::DegenerateParameters(format!("kernel vectors span a space of dimension {}", sub.dim())));
        }
        let keep = sub.complement_indices();
        let rows = (0..9)
            .map(|i| {
                let mut e = vec![field.zero(); 9];
                e[i] = field.one();
                let r = sub.reduce(&e);
                keep.iter().map(|&k| r[k].clone()).collect()
            })
            .collect();
        Ok(MuTensor { field, mu: Matrix::from_rows(field, 6, rows), t })
    }

    pub fn from_mu(field: Field, mu: Matrix) -> Result<MuTensor> {
        let rank = mu.rank();
        if mu.rows() != 9 || mu.cols() != 6 || rank != 6 {
            return Err(Error::NotSurjective(rank));
        }
        let t = mu.left_kernel_basis();
        Ok(MuTensor { field, mu, t })
    }

    pub fn rank(&self) -> usize {
        self.mu.rank()
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::from_rows(self.field, 9, &self.t)
    }

    /// Coefficient of `x_v (x) x_u` in the `k`-th kernel vector.
    pub fn entry(&self, k: usize, v: usize, u: usize) -> &Scalar {
        &self.t[k][3 * v + u]
    }

    /// Rows: kernel basis; columns: coordinates in `V` (side U) or `U` (side V).
    /// Each entry is a linear form in the functional's coordinates.
    fn linear_forms(&self, side: Side) -> [[[Scalar; 3]; 3]; 3] {
        let z = self.field.zero();
        let mut out: [[[Scalar; 3]; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| z.clone())));
        for (k, row) in out.iter_mut().enumerate() {
            for v in 0..3 {
                for u in 0..3 {
                    let c = self.entry(k, v, u).clone();
                    match side {
                        Side::U => row[v][u] = c,
                        Side::V => row[u][v] = c,
                    }
                }
            }
        }
        out
    }

    /// `nu_{u*}` or `nu_{v*}` as a 3x3 matrix.
    pub fn contraction(&self, side: Side, functional: &[Scalar]) -> Result<Matrix> {
        if functional.len() != 3 {
            return Err(Error::DimensionMismatch("functional must have three coordinates".into()));
        }
        if functional.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroFunctional);
        }
        let forms = self.linear_forms(side);
        let rows = forms
            .iter()
            .map(|row| row.iter().map(|l| l.iter().zip(functional).fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))).collect())
            .collect();
        Ok(Matrix::from_rows(self.field, 3, rows))
    }
}

/// `V (x) V -> S^2 V`.
pub fn commutative_tensor(field: Field) -> MuTensor {
    let monomial = |v: usize, u: usize| match (v.min(u), v.max(u)) {
        (i, j) if i == j => i,
        (0, 1) => 3,
        (0, 2) => 4,
        _ => 5,
    };
    let rows = (0..9)
        .map(|i| {
            let mut r = vec![field.zero(); 6];
            r[monomial(i / 3, i % 3)] = field.one();
            r
        })
        .collect();
    MuTensor::from_mu(field, Matrix::from_rows(field, 6, rows)).expect("symmetrization is onto")
}

/// `T` spanned by `a x_i (x) x_(i+1) + b x_(i+1) (x) x_i + c x_(i+2) (x) x_(i+2)`.
pub fn sklyanin_tensor(field: Field, a: &Scalar, b: &Scalar, c: &Scalar) -> Result<MuTensor> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::DegenerateParameters("all parameters vanish".into()));
    }
    let t = (0..3)
        .map(|i| {
            let mut v = vec![field.zero(); 9];
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            v[3 * i + j] = &v[3 * i + j] + a;
            v[3 * j + i] = &v[3 * j + i] + b;
            v[3 * k + k] = &v[3 * k + k] + c;
            v
        })
        .collect();
    MuTensor::from_kernel(field, t)
}

pub fn slice_rank_profile(t: &MuTensor, side: Side, functional: &[Scalar]) -> Result<usize> {
    Ok(t.contraction(side, functional)?.rank())
}

/// Monomials of degree 3 in `x, y, z`, in reporting order.
pub const CUBIC_MONOMIALS: [[u8; 3]; 10] =
    [[3, 0, 0], [0, 3, 0], [0, 0, 3], [2, 1, 0], [2, 0, 1], [1, 2, 0], [0, 2, 1], [1, 0, 2], [0, 1, 2], [1, 1, 1]];
const MONOMIAL_NAMES: [&str; 10] = ["x^3", "y^3", "z^3", "x^2y", "x^2z", "xy^2", "y^2z", "xz^2", "yz^2", "xyz"];

/// A homogeneous cubic in three variables, possibly zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cubic {
    pub field: Field,
    pub coeffs: Vec<Scalar>,
}

impl Cubic {
    pub fn zero(field: Field) -> Cubic {
        Cubic { field, coeffs: vec![field.zero(); 10] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn index(exps: [u8; 3]) -> usize {
        CUBIC_MONOMIALS.iter().position(|m| *m == exps).expect("degree 3 monomial")
    }

    /// Leading nonzero coefficient scaled to 1.
    pub fn normalized(&self) -> Cubic {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv();
                Cubic { field: self.field, coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    /// Names of the monomials with nonzero coefficient.
    pub fn support(&self) -> Vec<&'static str> {
        self.coeffs.iter().zip(MONOMIAL_NAMES).filter(|(c, _)| !c.is_zero()).map(|(_, n)| n).collect()
    }

    pub fn evaluate(&self, p: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (c, m) in self.coeffs.iter().zip(CUBIC_MONOMIALS) {
            let mut term = c.clone();
            for (x, &e) in p.iter().zip(&m) {
                for _ in 0..e {
                    term = &term * x;
                }
            }
            acc = &acc + &term;
        }
        acc
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, n) in self.coeffs.iter().zip(MONOMIAL_NAMES) {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() < 0;
            let abs = if neg { -c.clone() } else { c.clone() };
            let sep = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let coeff = if abs.is_one() { String::new() } else if abs.to_string().contains('/') { format!("({abs})") } else { abs.to_string() };
            write!(f, "{sep}{coeff}{n}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Cubic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

/// `det nu` expanded as a cubic in the coordinates of the functional.
pub fn gamma_cubic(t: &MuTensor, side: Side) -> Cubic {
    let forms = t.linear_forms(side);
    let mut cubic = Cubic::zero(t.field);
    let perms: [([usize; 3], bool); 6] =
        [([0, 1, 2], true), ([1, 2, 0], true), ([2, 0, 1], true), ([0, 2, 1], false), ([2, 1, 0], false), ([1, 0, 2], false)];
    for (p, even) in perms {
        let (l0, l1, l2) = (&forms[0][p[0]], &forms[1][p[1]], &forms[2][p[2]]);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let coef = &(&l0[a] * &l1[b]) * &l2[c];
                    if coef.is_zero() {
                        continue;
                    }
                    let mut e = [0u8; 3];
                    e[a] += 1;
                    e[b] += 1;
                    e[c] += 1;
                    let k = Cubic::index(e);
                    cubic.coeffs[k] = if even { &cubic.coeffs[k] + &coef } else { &cubic.coeffs[k] - &coef };
                }
            }
        }
    }
    cubic
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Nondegeneracy {
    FailsAt { side: Side, functional: Vec<String>, rank: usize },
    PassesSampled { samples: usize, exhaustive: bool, min_rank: usize, max_rank: usize },
    ProvedForFamily { family: String },
}

impl Nondegeneracy {
    pub fn passed(&self) -> bool {
        !matches!(self, Nondegeneracy::FailsAt { .. })
    }
}

fn is_commutative_family(t: &MuTensor) -> bool {
    t.kernel() == commutative_tensor(t.field).kernel()
}

/// Nonzero vectors whose contraction vanishes identically (rank 0), found
/// by linear algebra.
fn rank_zero_witness(t: &MuTensor, side: Side) -> Option<Vec<Scalar>> {
    let forms = t.linear_forms(side);
    let cols: Vec<Vec<Scalar>> = forms.iter().flat_map(|row| row.iter().map(|l| l.to_vec())).collect();
    // functional f with sum_c f_c l[c] = 0 for all nine forms
    let m = Matrix::from_rows(t.field, 9, (0..3).map(|c| cols.iter().map(|l| l[c].clone()).collect()).collect());
    m.left_kernel_basis().into_iter().next()
}

/// Rank at least two for every nonzero functional on either side.
pub fn check_nondegenerate(t: &MuTensor, samples: usize, seed: u64) -> Result<Nondegeneracy> {
    let field = t.field;
    let fail = |side, f: &[Scalar], rank| Nondegeneracy::FailsAt { side, functional: f.iter().map(|c| c.to_string()).collect(), rank };
    if let Some(elems) = field.elements().filter(|e| e.len().pow(3) <= 1_000_000) {
        let q = elems.len();
        let mut min_rank = 3;
        let mut max_rank = 0;
        for side in [Side::V, Side::U] {
            let ranks: Vec<(usize, usize)> = (1..q * q * q)
                .into_par_iter()
                .map(|idx| {
                    let f = [elems[idx / (q * q)].clone(), elems[(idx / q) % q].clone(), elems[idx % q].clone()];
                    (idx, t.contraction(side, &f).map(|m| m.rank()).unwrap_or(0))
                })
                .collect();
            for (idx, r) in &ranks {
                if *r <= 1 {
                    let f = [elems[idx / (q * q)].clone(), elems[(idx / q) % q].clone(), elems[idx % q].clone()];
                    return Ok(fail(side, &f, *r));
                }
                min_rank = min_rank.min(*r);
                max_rank = max_rank.max(*r);
            }
        }
        return Ok(Nondegeneracy::PassesSampled { samples: 2 * (q * q * q - 1), exhaustive: true, min_rank, max_rank });
    }
    if is_commutative_family(t) {
        return Ok(Nondegeneracy::ProvedForFamily { family: "commutative: nu_{v*} is v* wedge -, of rank 2".into() });
    }
    for side in [Side::V, Side::U] {
        if let Some(f) = rank_zero_witness(t, side) {
            return Ok(fail(side, &f, 0));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_rank = 3;
    let mut max_rank = 0;
    for _ in 0..samples {
        let f: Vec<Scalar> = (0..3).map(|_| field.from_i64(rng.gen_range(-50..=50))).collect();
        if f.iter().all(|c| c.is_zero()) {
            continue;
        }
        for side in [Side::V, Side::U] {
            let r = slice_rank_profile(t, side, &f)?;
            if r <= 1 {
                return Ok(fail(side, &f, r));
            }
            min_rank = min_rank.min(r);
            max_rank = max_rank.max(r);
        }
    }
    Ok(Nondegeneracy::PassesSampled { samples, exhaustive: false, min_rank, max_rank })
}

/// Quiver `F0 -U-> F1 -V-> F2` with relations `T`.
pub fn plane_algebra(t: &MuTensor) -> Result<Algebra> {
    if t.rank() != 6 {
        return Err(Error::NotSurjective(t.rank()));
    }
    let mut q = QuiverPresentation::new(t.field, vec!["F0".into(), "F1".into(), "F2".into()]);
    let names_u = ["u0", "u1", "u2"];
    let names_v = ["v0", "v1", "v2"];
    for n in names_u {
        q = q.arrow(n, 0, 1);
    }
    for n in names_v {
        q = q.arrow(n, 1, 2);
    }
    for k in 0..3 {
        let mut terms = Vec::new();
        for v in 0..3 {
            for u in 0..3 {
                let c = t.entry(k, v, u);
                if !c.is_zero() {
                    terms.push((c.clone(), vec![names_u[u], names_v[v]]));
                }
            }
        }
        q = q.relation(terms);
    }
    Algebra::from_quiver(q)
}

#[derive(Clone, Debug, Serialize)]
pub struct PlaneReport {
    pub dim: usize,
    pub simples: usize,
    pub cartan: Vec<Vec<usize>>,
    pub gldim: DimensionBound,
    /// Each vertex projective, in collection order `F2, F1, F0`.
    pub exceptional: Vec<Verdict>,
    pub strong: bool,
    pub sod: SODReport,
    /// `collection_algebra` of the projectives has the same Cartan data.
    pub round_trip: bool,
    pub cubic_v: Cubic,
    pub cubic_u: Cubic,
    pub nondegeneracy: Nondegeneracy,
}

impl PlaneReport {
    pub fn holds(&self) -> bool {
        self.dim == 15
            && self.simples == 3
            && self.cartan == vec![vec![1, 3, 6], vec![0, 1, 3], vec![0, 0, 1]]
            && self.gldim == DimensionBound::Finite { value: 2 }
            && self.exceptional.iter().all(|v| v.passed())
            && self.strong
            && self.sod.holds()
            && self.round_trip
            && self.cubic_u.is_zero() == self.cubic_v.is_zero()
            && self.nondegeneracy.passed()
    }
}

pub fn verify_plane(t: &MuTensor, cutoff: usize, samples: usize, seed: u64) -> Result<PlaneReport> {
    let a = Arc::new(plane_algebra(t)?);
    let cartan = a.cartan_matrix()?;
    let gldim = global_dimension(&a, cutoff)?;
    let objects: Vec<PerfComplex> = (0..3).rev().map(|v| projective_stalk(&a, &a.basis_elem(v))).collect();
    let exceptional = objects.iter().map(is_exceptional).collect::<Result<Vec<_>>>()?;
    let mut strong = check_semiorthogonal(&objects)?.holds();
    for x in &objects {
        for y in &objects {
            strong &= derived_hom(x, y)?.concentrated_in_zero();
        }
    }
    let sod = verify_sod(&objects, &GenerationCertificate::trivial(objects.clone()))?;
    let round_trip = match collection_algebra(&objects) {
        Ok(c) => {
            let mut x = c.algebra.cartan_matrix()?.concat();
            let mut y = cartan.concat();
            x.sort();
            y.sort();
            c.algebra.dim() == a.dim() && x == y
        }
        Err(_) => false,
    };
    Ok(PlaneReport {
        dim: a.dim(),
        simples: cartan.len(),
        cartan,
        gldim,
        exceptional,
        strong,
        sod,
        round_trip,
        cubic_v: gamma_cubic(t, Side::V),
        cubic_u: gamma_cubic(t, Side::U),
        nondegeneracy: check_nondegenerate(t, samples, seed)?,
    })
}

#[cfg(test)]
mod tests;
