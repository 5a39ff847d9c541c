//! Explicit DGA structure files (JSON).
//!
//! ```json
//! {
//!   "degrees": {"0": ["1"], "1": ["x", "y", "z"]},
//!   "differential": [{"from": "z", "to": [{"basis": "xy", "coeff": "1"}]}],
//!   "product": [{"left": "x", "right": "y", "result": [{"basis": "xy", "coeff": "1"}]}],
//!   "unit": "1",
//!   "gram": {"0": [["1"]]}
//! }
//! ```
//!
//! Coefficients are exact rationals written `p` or `p/q`. Entries absent from
//! `differential` or `product` are zero; a missing `gram` means the basis is
//! declared orthonormal. Degrees may skip intermediate values (those are
//! zero-dimensional); negative degrees are rejected.

use super::{Dga, DgaError};
use crate::graded::{BasisKey, Element, GradedBilinearForm, GradedMap, GradedVectorSpace};
use crate::matrix::Mat;
use crate::rational::{format_rational, parse_rational};
use crate::report::{AxiomCheck, ValidationReport};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError { message: message.into(), line: None, column: None }
    }

    pub fn from_json(err: &serde_json::Error) -> Self {
        ParseError {
            message: err.to_string(),
            line: Some(err.line()),
            column: Some(err.column()),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "parse error at line {l}, column {c}: {}", self.message),
            _ => write!(f, "parse error: {}", self.message),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    basis: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct RawDifferential {
    from: String,
    to: Vec<RawTerm>,
}

#[derive(Serialize, Deserialize)]
struct RawProduct {
    left: String,
    right: String,
    result: Vec<RawTerm>,
}

#[derive(Serialize, Deserialize)]
struct RawDga {
    degrees: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    differential: Vec<RawDifferential>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    product: Vec<RawProduct>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gram: Option<BTreeMap<String, Vec<Vec<String>>>>,
}

fn parse_terms(
    space: &GradedVectorSpace,
    terms: &[RawTerm],
    context: &str,
) -> Result<Element, ParseError> {
    let mut e = Element::zero();
    for t in terms {
        let key = space
            .lookup(&t.basis)
            .map_err(|_| ParseError::new(format!("{context}: unknown basis label `{}`", t.basis)))?;
        let c = parse_rational(&t.coeff)
            .map_err(|msg| ParseError::new(format!("{context}: {msg}")))?;
        e.add_term(key, c);
    }
    Ok(e)
}

pub(super) fn parse(text: &str) -> Result<Dga, DgaError> {
    let raw: RawDga = serde_json::from_str(text).map_err(|e| ParseError::from_json(&e))?;

    // Degrees: numeric keys, contiguous range [0, top] with gaps allowed as
    // zero-dimensional degrees.
    let mut by_degree: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for (k, labels) in &raw.degrees {
        let d: usize = k
            .parse()
            .map_err(|_| ParseError::new(format!("degree key `{k}` is not a nonnegative integer")))?;
        by_degree.insert(d, labels.clone());
    }
    let top = by_degree.keys().last().copied().unwrap_or(0);
    let labels: Vec<Vec<String>> =
        (0..=top).map(|d| by_degree.get(&d).cloned().unwrap_or_default()).collect();
    let space = GradedVectorSpace::new(labels).map_err(|e| ParseError::new(e.to_string()))?;

    // Differential: one entry per source basis label, targets one degree up.
    let mut differential = GradedMap::zero(&space, 1);
    let mut seen_from = HashSet::new();
    for entry in &raw.differential {
        let from = space
            .lookup(&entry.from)
            .map_err(|_| ParseError::new(format!("differential: unknown basis label `{}`", entry.from)))?;
        if !seen_from.insert(from) {
            return Err(ParseError::new(format!(
                "differential: duplicate entry for `{}`",
                entry.from
            ))
            .into());
        }
        let value = parse_terms(&space, &entry.to, &format!("differential of `{}`", entry.from))?;
        for ((d, i), c) in value.terms() {
            if d != from.0 + 1 {
                return Err(ParseError::new(format!(
                    "differential of `{}` hits `{}` in degree {d}, expected degree {}",
                    entry.from,
                    space.label((d, i)),
                    from.0 + 1
                ))
                .into());
            }
            differential.block_mut(from.0)[(i, from.1)] = c.clone();
        }
    }

    // Product table, keyed by basis label pairs.
    let mut product: HashMap<(BasisKey, BasisKey), Element> = HashMap::new();
    for entry in &raw.product {
        let left = space
            .lookup(&entry.left)
            .map_err(|_| ParseError::new(format!("product: unknown basis label `{}`", entry.left)))?;
        let right = space
            .lookup(&entry.right)
            .map_err(|_| ParseError::new(format!("product: unknown basis label `{}`", entry.right)))?;
        if product.contains_key(&(left, right)) {
            return Err(ParseError::new(format!(
                "product: duplicate entry for `{}` * `{}`",
                entry.left, entry.right
            ))
            .into());
        }
        let value = parse_terms(
            &space,
            &entry.result,
            &format!("product `{}` * `{}`", entry.left, entry.right),
        )?;
        if !value.is_zero() {
            product.insert((left, right), value);
        }
    }

    let unit = match &raw.unit {
        None => None,
        Some(label) => {
            let key = space
                .lookup(label)
                .map_err(|_| ParseError::new(format!("unit: unknown basis label `{label}`")))?;
            if key.0 != 0 {
                return Err(
                    ParseError::new(format!("unit `{label}` must live in degree 0")).into()
                );
            }
            Some(Element::basis(key))
        }
    };

    let form = match &raw.gram {
        None => GradedBilinearForm::identity(&space),
        Some(grams) => {
            let mut mats: Vec<Mat> =
                (0..=space.top()).map(|n| Mat::identity(space.dim(n as i64))).collect();
            for (k, rows) in grams {
                let d: usize = k.parse().map_err(|_| {
                    ParseError::new(format!("gram degree key `{k}` is not a nonnegative integer"))
                })?;
                let dim = space.dim(d as i64);
                if d > space.top() || rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                    return Err(ParseError::new(format!(
                        "gram matrix for degree {d} must be {dim}x{dim}"
                    ))
                    .into());
                }
                let mut m = Mat::zeros(dim, dim);
                for (i, row) in rows.iter().enumerate() {
                    for (j, s) in row.iter().enumerate() {
                        m[(i, j)] = parse_rational(s)
                            .map_err(|msg| ParseError::new(format!("gram degree {d}: {msg}")))?;
                    }
                }
                mats[d] = m;
            }
            GradedBilinearForm::new(&space, mats).map_err(|e| {
                DgaError::Invalid(Box::new(ValidationReport {
                    axioms: vec![AxiomCheck {
                        axiom: "inner product is symmetric positive definite".into(),
                        passed: false,
                        witness: Some(e.to_string()),
                    }],
                }))
            })?
        }
    };

    Ok(Dga::new(space, differential, product, unit, form))
}

pub(super) fn emit(dga: &Dga) -> String {
    let space = dga.space();
    let degrees: BTreeMap<String, Vec<String>> = (0..=space.top())
        .filter(|&d| space.dim(d as i64) > 0)
        .map(|d| (d.to_string(), space.labels_in(d).to_vec()))
        .collect();

    let terms_of = |e: &Element| -> Vec<RawTerm> {
        e.terms()
            .map(|(k, c)| RawTerm { basis: space.label(k).to_string(), coeff: format_rational(c) })
            .collect()
    };

    let mut differential = Vec::new();
    for key in space.basis_keys() {
        let de = dga.differential().apply(&Element::basis(key));
        if !de.is_zero() {
            differential.push(RawDifferential { from: space.label(key).to_string(), to: terms_of(&de) });
        }
    }

    let mut product = Vec::new();
    for a in space.basis_keys() {
        for b in space.basis_keys() {
            let p = dga.basis_product(a, b);
            if !p.is_zero() {
                product.push(RawProduct {
                    left: space.label(a).to_string(),
                    right: space.label(b).to_string(),
                    result: terms_of(&p),
                });
            }
        }
    }

    // A unit is only representable in the file when it is a single basis
    // vector with coefficient one; otherwise it is dropped on emission.
    let unit = dga.unit_element().and_then(|u| {
        let mut terms = u.terms();
        match (terms.next(), terms.next()) {
            (Some((key, c)), None) if *c == crate::rational::one() => {
                Some(space.label(key).to_string())
            }
            _ => None,
        }
    });

    let gram = if dga.form().is_identity() {
        None
    } else {
        Some(
            (0..=space.top())
                .filter(|&d| space.dim(d as i64) > 0)
                .map(|d| {
                    let g = dga.form().gram(d);
                    let rows = (0..g.rows())
                        .map(|i| (0..g.cols()).map(|j| format_rational(&g[(i, j)])).collect())
                        .collect();
                    (d.to_string(), rows)
                })
                .collect(),
        )
    };

    let raw = RawDga { degrees, differential, product, unit, gram };
    let mut text = serde_json::to_string_pretty(&raw).expect("structure serialization cannot fail");
    text.push('\n');
    text
}
