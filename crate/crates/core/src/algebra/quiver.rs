use std::collections::HashMap;

use super::core::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar, Subspace};

pub const DEFAULT_MAX_PATH_LENGTH: usize = 32;

#[derive(Clone, Debug, PartialEq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Linear combination of paths; each path is a list of arrow names in
/// traversal order (first traversed arrow first).
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuiverPresentation {
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    /// Set once the relations are verified to lie in the square of the arrow ideal.
    pub admissible: bool,
    pub max_path_length: usize,
}

impl QuiverPresentation {
    pub fn new(field: Field, vertices: Vec<String>) -> QuiverPresentation {
        QuiverPresentation {
            field,
            vertices,
            arrows: Vec::new(),
            relations: Vec::new(),
            admissible: false,
            max_path_length: DEFAULT_MAX_PATH_LENGTH,
        }
    }

    pub fn arrow(mut self, name: &str, source: usize, target: usize) -> Self {
        self.arrows.push(Arrow { name: name.into(), source, target });
        self
    }

    pub fn relation(mut self, terms: Vec<(Scalar, Vec<&str>)>) -> Self {
        self.relations.push(Relation {
            terms: terms.into_iter().map(|(c, p)| (c, p.into_iter().map(String::from).collect())).collect(),
        });
        self
    }

    fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// A path: start vertex plus arrow indices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    start: usize,
    arrows: Vec<usize>,
}

impl Path {
    fn end(&self, q: &QuiverPresentation) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrows[a].target)
    }
}

struct Degree {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    ideal: Subspace,
    /// For each path, its position in the algebra basis if it is a normal word.
    normal: Vec<Option<usize>>,
}

impl Algebra {
    /// Path algebra of a quiver modulo homogeneous relations.
    ///
    /// Paths compose left to right and the resulting algebra acts on right
    /// modules; `e_v p = p` when `p` starts at `v`.
    pub fn from_quiver(mut p: QuiverPresentation) -> Result<Algebra> {
        let field = p.field;
        let nv = p.vertices.len();
        if nv == 0 {
            return Err(Error::MalformedRelation("quiver has no vertices".into()));
        }
        for a in &p.arrows {
            if a.source >= nv || a.target >= nv {
                return Err(Error::MalformedRelation(format!("arrow {} has an unknown endpoint", a.name)));
            }
        }
        // relations grouped by length
        let mut rels_by_len: HashMap<usize, Vec<Vec<(Scalar, Path)>>> = HashMap::new();
        let mut admissible = true;
        for (ri, rel) in p.relations.iter().enumerate() {
            let mut terms = Vec::new();
            let mut ends = None;
            let mut len = None;
            for (c, names) in &rel.terms {
                if names.is_empty() {
                    return Err(Error::MalformedRelation(format!("relation {ri} contains an empty path")));
                }
                let idx: Vec<usize> = names
                    .iter()
                    .map(|n| {
                        p.arrow_index(n)
                            .ok_or_else(|| Error::MalformedRelation(format!("relation {ri} uses unknown arrow {n}")))
                    })
                    .collect::<Result<_>>()?;
                for w in idx.windows(2) {
                    if p.arrows[w[0]].target != p.arrows[w[1]].source {
                        return Err(Error::MalformedRelation(format!("relation {ri} has a non-composable path")));
                    }
                }
                let path = Path { start: p.arrows[idx[0]].source, arrows: idx };
                let se = (path.start, path.end(&p));
                if *ends.get_or_insert(se) != se {
                    return Err(Error::MalformedRelation(format!("paths of relation {ri} do not share endpoints")));
                }
                let l = path.arrows.len();
                if *len.get_or_insert(l) != l {
                    return Err(Error::MalformedRelation(format!("relation {ri} is not homogeneous in path length")));
                }
                if l < 2 {
                    admissible = false;
                }
                terms.push((c.clone(), path));
            }
            if let Some(l) = len {
                rels_by_len.entry(l).or_default().push(terms);
            }
        }

        let max_len = p.max_path_length;
        let mut degrees: Vec<Degree> = Vec::new();
        let mut basis_paths: Vec<Path> = Vec::new();
        let mut ell = 0;
        loop {
            if ell > max_len {
                return Err(Error::InfiniteDimensional(max_len));
            }
            let paths: Vec<Path> = if ell == 0 {
                (0..nv).map(|v| Path { start: v, arrows: vec![] }).collect()
            } else {
                let prev = &degrees[ell - 1].paths;
                let mut out = Vec::new();
                for q in prev {
                    let e = q.end(&p);
                    for (ai, a) in p.arrows.iter().enumerate() {
                        if a.source == e {
                            let mut arrows = q.arrows.clone();
                            arrows.push(ai);
                            out.push(Path { start: q.start, arrows });
                        }
                    }
                }
                out
            };
            if paths.is_empty() {
                break;
            }
            if paths.len() > 20_000 {
                return Err(Error::InfiniteDimensional(ell));
            }
            let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
            let n = paths.len();
            let mut ideal = Subspace::zero(field, n);
            for terms in rels_by_len.get(&ell).into_iter().flatten() {
                let mut v = vec![field.zero(); n];
                for (c, q) in terms {
                    v[index[q]].add_assign_ref(c);
                }
                ideal.insert(&v);
            }
            if ell > 0 {
                let prev = &degrees[ell - 1];
                for row in prev.ideal.basis() {
                    for ai in 0..p.arrows.len() {
                        // arrow * row and row * arrow
                        let mut left = vec![field.zero(); n];
                        let mut right = vec![field.zero(); n];
                        let (mut hit_l, mut hit_r) = (false, false);
                        for (pi, c) in row.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let q = &prev.paths[pi];
                            if p.arrows[ai].target == q.start {
                                let mut arrows = vec![ai];
                                arrows.extend(&q.arrows);
                                let np = Path { start: p.arrows[ai].source, arrows };
                                left[index[&np]].add_assign_ref(c);
                                hit_l = true;
                            }
                            if p.arrows[ai].source == q.end(&p) {
                                let mut arrows = q.arrows.clone();
                                arrows.push(ai);
                                let np = Path { start: q.start, arrows };
                                right[index[&np]].add_assign_ref(c);
                                hit_r = true;
                            }
                        }
                        if hit_l {
                            ideal.insert(&left);
                        }
                        if hit_r {
                            ideal.insert(&right);
                        }
                    }
                }
            }
            if ideal.dim() == n {
                break;
            }
            let mut normal = vec![None; n];
            for c in ideal.complement_indices() {
                normal[c] = Some(basis_paths.len());
                basis_paths.push(paths[c].clone());
            }
            degrees.push(Degree { paths, index, ideal, normal });
            ell += 1;
        }

        let dim = basis_paths.len();
        let reduce = |path: &Path| -> Elem {
            let mut out = vec![field.zero(); dim];
            let l = path.arrows.len();
            let Some(deg) = degrees.get(l) else {
                return out;
            };
            let mut v = vec![field.zero(); deg.paths.len()];
            v[deg.index[path]] = field.one();
            let r = deg.ideal.reduce(&v);
            for (i, c) in r.into_iter().enumerate() {
                if !c.is_zero() {
                    out[deg.normal[i].expect("reduced vector lives on normal words")] = c;
                }
            }
            out
        };
        let mut table = Vec::with_capacity(dim * dim);
        for u in &basis_paths {
            for w in &basis_paths {
                if u.end(&p) != w.start {
                    table.push(Vec::new());
                    continue;
                }
                let mut arrows = u.arrows.clone();
                arrows.extend(&w.arrows);
                let prod = reduce(&Path { start: u.start, arrows });
                table.push(prod.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
        }
        let mut unit = vec![field.zero(); dim];
        let vertex_elems: Vec<Elem> = (0..nv)
            .map(|v| {
                let mut e = vec![field.zero(); dim];
                e[v] = field.one();
                e
            })
            .collect();
        for v in 0..nv {
            unit[v] = field.one();
        }
        let labels = basis_paths
            .iter()
            .map(|q| {
                if q.arrows.is_empty() {
                    format!("e_{}", p.vertices[q.start])
                } else {
                    q.arrows.iter().map(|&a| p.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
                }
            })
            .collect();
        p.admissible = admissible;
        let alg = Algebra::from_sparse_unchecked(field, dim, table, unit)
            .with_labels(labels)
            .with_presentation(p)
            .with_idempotent_hints(vertex_elems)?;
        Ok(alg)
    }

    /// Basis positions of paths of positive length; for admissible
    /// presentations these span the radical.
    pub(crate) fn arrow_ideal_rows(&self) -> Option<Vec<Elem>> {
        let p = self.presentation()?;
        if !p.admissible {
            return None;
        }
        let nv = p.vertices.len();
        Some((nv..self.dim()).map(|i| self.basis_elem(i)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn single_vertex_is_ground_field() {
        let a = Algebra::from_quiver(QuiverPresentation::new(Q, vec!["v".into()])).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn kronecker_has_dimension_four() {
        let p = QuiverPresentation::new(Q, vec!["0".into(), "1".into()]).arrow("a", 0, 1).arrow("b", 0, 1);
        let a = Algebra::from_quiver(p).unwrap();
        assert_eq!(a.dim(), 4);
        a.verify().unwrap();
        assert!(a.presentation().unwrap().admissible);
    }

    #[test]
    fn loop_with_square_relation() {
        let p = QuiverPresentation::new(Q, vec!["v".into()])
            .arrow("x", 0, 0)
            .relation(vec![(Q.one(), vec!["x", "x"])]);
        let a = Algebra::from_quiver(p).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.same_structure(&Algebra::truncated_polynomial(Q, 2)));
    }

    #[test]
    fn free_loop_is_infinite() {
        let mut p = QuiverPresentation::new(Q, vec!["v".into()]).arrow("x", 0, 0);
        p.max_path_length = 8;
        assert!(matches!(Algebra::from_quiver(p), Err(Error::InfiniteDimensional(8))));
    }

    #[test]
    fn unknown_arrow_in_relation() {
        let p = QuiverPresentation::new(Q, vec!["v".into()])
            .arrow("x", 0, 0)
            .relation(vec![(Q.one(), vec!["y"])]);
        assert!(matches!(Algebra::from_quiver(p), Err(Error::MalformedRelation(_))));
    }

    #[test]
    fn commutative_square_relation() {
        // k[x,y]/(xy - yx, x^2, y^2): dim 4
        let p = QuiverPresentation::new(Q, vec!["v".into()])
            .arrow("x", 0, 0)
            .arrow("y", 0, 0)
            .relation(vec![(Q.one(), vec!["x", "y"]), (-Q.one(), vec!["y", "x"])])
            .relation(vec![(Q.one(), vec!["x", "x"])])
            .relation(vec![(Q.one(), vec!["y", "y"])]);
        let a = Algebra::from_quiver(p).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.is_commutative());
        a.verify().unwrap();
    }
}
