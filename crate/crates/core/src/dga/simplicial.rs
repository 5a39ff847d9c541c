//! Finite simplicial complexes and their simplicial cochain DGAs.
//!
//! Simplices are stored as strictly increasing vertex-index tuples, grouped
//! by dimension and sorted, so basis order is deterministic. The cochain
//! algebra uses the front-face/back-face cup product, which is associative
//! on the nose; the resulting DGA is unital with unit the sum of all vertex
//! duals.

use super::{Dga, ParseError};
use crate::graded::{BasisKey, Element, GradedBilinearForm, GradedMap, GradedVectorSpace};
use crate::rational::{int, one};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    /// `simplices[p]` lists the p-simplices in lexicographic order.
    simplices: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    DuplicateVertex(String),
    UnknownVertex(String),
    DegenerateSimplex(Vec<String>),
    MissingFace { simplex: Vec<String>, face: Vec<String> },
    Empty,
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::DuplicateVertex(v) => write!(f, "duplicate vertex `{v}`"),
            ComplexError::UnknownVertex(v) => write!(f, "unknown vertex `{v}` in simplex list"),
            ComplexError::DegenerateSimplex(s) => {
                write!(f, "simplex [{}] repeats a vertex", s.join(", "))
            }
            ComplexError::MissingFace { simplex, face } => write!(
                f,
                "complex is not closed under faces: [{}] lacks face [{}]",
                simplex.join(", "),
                face.join(", ")
            ),
            ComplexError::Empty => write!(f, "complex has no vertices"),
        }
    }
}

impl std::error::Error for ComplexError {}

impl SimplicialComplex {
    /// Builds the complex generated by the given simplices: every nonempty
    /// subset of a listed simplex is included.
    pub fn from_maximal(
        vertices: Vec<String>,
        maximal: &[Vec<String>],
    ) -> Result<Self, ComplexError> {
        let index = vertex_index(&vertices)?;
        let mut closed: BTreeSet<Vec<usize>> = BTreeSet::new();
        for v in 0..vertices.len() {
            closed.insert(vec![v]);
        }
        for simplex in maximal {
            let s = resolve(simplex, &index, &vertices)?;
            // All nonempty subsets, via bitmask enumeration.
            for mask in 1u32..(1 << s.len()) {
                let subset: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|(pos, _)| mask & (1 << pos) != 0)
                    .map(|(_, &v)| v)
                    .collect();
                closed.insert(subset);
            }
        }
        Ok(Self::group(vertices, closed))
    }

    /// Builds from an explicit full list of simplices and verifies closure
    /// under taking faces.
    pub fn new(vertices: Vec<String>, simplices: &[Vec<String>]) -> Result<Self, ComplexError> {
        let index = vertex_index(&vertices)?;
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for v in 0..vertices.len() {
            set.insert(vec![v]);
        }
        for simplex in simplices {
            set.insert(resolve(simplex, &index, &vertices)?);
        }
        for s in &set {
            for omit in 0..s.len() {
                if s.len() == 1 {
                    continue;
                }
                let mut face = s.clone();
                face.remove(omit);
                if !set.contains(&face) {
                    return Err(ComplexError::MissingFace {
                        simplex: s.iter().map(|&v| vertices[v].clone()).collect(),
                        face: face.iter().map(|&v| vertices[v].clone()).collect(),
                    });
                }
            }
        }
        Ok(Self::group(vertices, set))
    }

    fn group(vertices: Vec<String>, set: BTreeSet<Vec<usize>>) -> Self {
        let top = set.iter().map(|s| s.len() - 1).max().unwrap_or(0);
        let mut simplices = vec![Vec::new(); top + 1];
        for s in set {
            simplices[s.len() - 1].push(s);
        }
        // BTreeSet iteration is lex within mixed lengths; re-sort per dimension.
        for dim in &mut simplices {
            dim.sort();
        }
        SimplicialComplex { vertices, simplices }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn dimension(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn count(&self, p: usize) -> usize {
        self.simplices.get(p).map_or(0, Vec::len)
    }

    pub fn simplices_in(&self, p: usize) -> &[Vec<usize>] {
        self.simplices.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(p, list)| if p % 2 == 0 { list.len() as i64 } else { -(list.len() as i64) })
            .sum()
    }

    fn label(&self, s: &[usize]) -> String {
        s.iter().map(|&v| self.vertices[v].as_str()).collect::<Vec<_>>().join("|")
    }

    /// Simplicial cochain algebra: basis dual to the simplices, coboundary
    /// dual to the face maps, front-face/back-face cup product, unit the sum
    /// of vertex duals, orthonormal basis.
    pub fn cochain_dga(&self) -> Dga {
        let labels: Vec<Vec<String>> =
            self.simplices.iter().map(|dim| dim.iter().map(|s| self.label(s)).collect()).collect();
        let space = GradedVectorSpace::new(labels).expect("simplex labels are unique");

        let pos: Vec<HashMap<&Vec<usize>, usize>> = self
            .simplices
            .iter()
            .map(|dim| dim.iter().enumerate().map(|(i, s)| (s, i)).collect())
            .collect();

        // Coboundary: for each (p+1)-simplex t and each vertex position i,
        // the face with vertex i removed maps to t with sign (-1)^i.
        let mut differential = GradedMap::zero(&space, 1);
        for (p1, dim) in self.simplices.iter().enumerate().skip(1) {
            let p = p1 - 1;
            for (ti, t) in dim.iter().enumerate() {
                for omit in 0..t.len() {
                    let mut face = t.clone();
                    face.remove(omit);
                    let fi = pos[p][&face];
                    let sign = if omit % 2 == 0 { one() } else { -one() };
                    let cell = &mut differential.block_mut(p)[(ti, fi)];
                    *cell = &*cell + &sign;
                }
            }
        }

        // Cup product: split every (p+q)-simplex at each position; the front
        // p-face times the back q-face hits the whole simplex, coefficient 1.
        let mut product: HashMap<(BasisKey, BasisKey), Element> = HashMap::new();
        for (total, dim) in self.simplices.iter().enumerate() {
            for t in dim {
                let t_key = (total, pos[total][t]);
                for split in 0..=total {
                    let front = t[..=split].to_vec();
                    let back = t[split..].to_vec();
                    let front_key = (split, pos[split][&front]);
                    let back_key = (total - split, pos[total - split][&back]);
                    product
                        .entry((front_key, back_key))
                        .or_insert_with(Element::zero)
                        .add_term(t_key, one());
                }
            }
        }

        let unit =
            Element::from_terms((0..self.vertices.len()).map(|i| ((0usize, i), int(1))));
        let form = GradedBilinearForm::identity(&space);
        Dga::new(space, differential, product, Some(unit), form)
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let raw: RawComplex = serde_json::from_str(text).map_err(|e| ParseError::from_json(&e))?;
        SimplicialComplex::from_maximal(raw.vertices, &raw.simplices)
            .map_err(|e| ParseError::new(e.to_string()))
    }

    /// Emits the full simplex list (not just maximal ones); loading it back
    /// reproduces the same complex.
    pub fn to_json(&self) -> String {
        let raw = RawComplex {
            vertices: self.vertices.clone(),
            simplices: self
                .simplices
                .iter()
                .flat_map(|dim| {
                    dim.iter()
                        .map(|s| s.iter().map(|&v| self.vertices[v].clone()).collect::<Vec<_>>())
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&raw).expect("complex serialization cannot fail");
        text.push('\n');
        text
    }
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    vertices: Vec<String>,
    simplices: Vec<Vec<String>>,
}

fn vertex_index(vertices: &[String]) -> Result<HashMap<&str, usize>, ComplexError> {
    if vertices.is_empty() {
        return Err(ComplexError::Empty);
    }
    let mut index = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        if index.insert(v.as_str(), i).is_some() {
            return Err(ComplexError::DuplicateVertex(v.clone()));
        }
    }
    Ok(index)
}

fn resolve(
    simplex: &[String],
    index: &HashMap<&str, usize>,
    _vertices: &[String],
) -> Result<Vec<usize>, ComplexError> {
    let mut s = Vec::with_capacity(simplex.len());
    for name in simplex {
        let &i = index
            .get(name.as_str())
            .ok_or_else(|| ComplexError::UnknownVertex(name.clone()))?;
        s.push(i);
    }
    s.sort_unstable();
    s.dedup();
    if s.len() != simplex.len() {
        return Err(ComplexError::DegenerateSimplex(simplex.to_vec()));
    }
    Ok(s)
}
