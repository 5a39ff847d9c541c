//! Built-in example algebras.
//!
//! Each entry is defined by the text of its input file; [`build`] always
//! goes through the real loaders, so the corpus doubles as a permanent
//! round-trip test of the file formats. Expected invariants (Betti numbers,
//! harmonic bases, transferred products) are frozen in the test suites.

use crate::dga::lie::{self, LieStructure};
use crate::dga::simplicial::SimplicialComplex;
use crate::dga::Dga;
use crate::rational::format_rational;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    /// Explicit DGA structure file.
    Dga,
    /// Simplicial complex; the DGA is its cochain algebra.
    Simplicial,
    /// Lie structure constants; the DGA is Chevalley-Eilenberg.
    Lie,
}

impl FileKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FileKind::Dga => "dga",
            FileKind::Simplicial => "simplicial",
            FileKind::Lie => "lie",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub kind: FileKind,
    pub description: &'static str,
}

pub const ENTRIES: [CorpusEntry; 6] = [
    CorpusEntry {
        name: "interval",
        kind: FileKind::Simplicial,
        description: "two vertices joined by an edge (contractible)",
    },
    CorpusEntry {
        name: "circle",
        kind: FileKind::Simplicial,
        description: "boundary of a triangle (minimal circle)",
    },
    CorpusEntry {
        name: "sphere2",
        kind: FileKind::Simplicial,
        description: "boundary of a tetrahedron (2-sphere)",
    },
    CorpusEntry {
        name: "torus",
        kind: FileKind::Simplicial,
        description: "3x3 grid triangulation of the torus",
    },
    CorpusEntry {
        name: "heisenberg",
        kind: FileKind::Dga,
        description: "invariant forms on the 3-dimensional Heisenberg nilmanifold (dz = xy)",
    },
    CorpusEntry {
        name: "abelian3",
        kind: FileKind::Lie,
        description: "Chevalley-Eilenberg algebra of the abelian 3-dimensional Lie algebra",
    },
];

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

pub fn get(name: &str) -> Option<CorpusEntry> {
    ENTRIES.iter().copied().find(|e| e.name == name)
}

/// The input-file text for an entry.
pub fn emit(name: &str) -> Option<String> {
    let entry = get(name)?;
    let text = match entry.kind {
        FileKind::Simplicial => simplicial_complex(name)?.to_json(),
        FileKind::Lie => lie_structure(name)?.to_json(),
        FileKind::Dga => explicit_file(name)?,
    };
    Some(text)
}

/// Builds the DGA by parsing [`emit`] output through the regular loaders.
pub fn build(name: &str) -> Option<Dga> {
    let entry = get(name)?;
    let text = emit(name)?;
    let dga = match entry.kind {
        FileKind::Simplicial => SimplicialComplex::from_json(&text)
            .expect("corpus complex parses")
            .cochain_dga(),
        FileKind::Lie => LieStructure::from_json(&text)
            .expect("corpus lie structure parses")
            .chevalley_eilenberg_dga()
            .expect("corpus lie structure satisfies Jacobi"),
        FileKind::Dga => Dga::from_structure_file(&text).expect("corpus structure file is valid"),
    };
    Some(dga)
}

fn simplicial_complex(name: &str) -> Option<SimplicialComplex> {
    let (vertices, maximal): (Vec<String>, Vec<Vec<String>>) = match name {
        "interval" => (
            vec!["v0".into(), "v1".into()],
            vec![vec!["v0".into(), "v1".into()]],
        ),
        "circle" => (
            (0..3).map(|i| format!("v{i}")).collect(),
            vec![
                vec!["v0".into(), "v1".into()],
                vec!["v1".into(), "v2".into()],
                vec!["v0".into(), "v2".into()],
            ],
        ),
        "sphere2" => (
            (0..4).map(|i| format!("v{i}")).collect(),
            vec![
                vec!["v0".into(), "v1".into(), "v2".into()],
                vec!["v0".into(), "v1".into(), "v3".into()],
                vec!["v0".into(), "v2".into(), "v3".into()],
                vec!["v1".into(), "v2".into(), "v3".into()],
            ],
        ),
        "torus" => {
            // Vertex (i, j) of the 3x3 grid is v{3i+j}; both triangles of
            // each grid square, with wraparound. 9 vertices, 27 edges,
            // 18 triangles.
            let v = |i: usize, j: usize| format!("v{}", 3 * (i % 3) + (j % 3));
            let mut triangles = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    triangles.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
                    triangles.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
                }
            }
            ((0..9).map(|i| format!("v{i}")).collect(), triangles)
        }
        _ => return None,
    };
    Some(SimplicialComplex::from_maximal(vertices, &maximal).expect("corpus complex is well formed"))
}

fn lie_structure(name: &str) -> Option<LieStructure> {
    match name {
        "abelian3" => Some(LieStructure::new(3, &[]).expect("abelian structure is well formed")),
        _ => None,
    }
}

fn explicit_file(name: &str) -> Option<String> {
    match name {
        "heisenberg" => Some(heisenberg_file()),
        _ => None,
    }
}

/// Exterior algebra on x, y, z with dz = x^y: the minimal DGA with a
/// nonvanishing triple Massey product.
fn heisenberg_file() -> String {
    let gens = ["x", "y", "z"];
    let monomials: Vec<Vec<usize>> =
        (0..=3).flat_map(|p| lie::subsets(3, p)).collect();
    let label = |s: &[usize]| -> String {
        if s.is_empty() {
            "1".to_string()
        } else {
            s.iter().map(|&g| gens[g]).collect::<String>()
        }
    };

    let mut degrees = serde_json::Map::new();
    for p in 0..=3usize {
        let labels: Vec<String> =
            monomials.iter().filter(|s| s.len() == p).map(|s| label(s)).collect();
        degrees.insert(p.to_string(), json!(labels));
    }

    // Products of all monomial pairs via wedge signs.
    let mut product = Vec::new();
    for s in &monomials {
        for t in &monomials {
            let word: Vec<usize> = s.iter().chain(t.iter()).copied().collect();
            if let Some((sign, sorted)) = lie::sort_word(&word) {
                product.push(json!({
                    "left": label(s),
                    "right": label(t),
                    "result": [{"basis": label(&sorted), "coeff": format_rational(&sign)}],
                }));
            }
        }
    }

    let file = json!({
        "degrees": degrees,
        "differential": [
            {"from": "z", "to": [{"basis": "xy", "coeff": "1"}]}
        ],
        "product": product,
        "unit": "1",
    });
    let mut text = serde_json::to_string_pretty(&file).expect("corpus serialization cannot fail");
    text.push('\n');
    text
}
