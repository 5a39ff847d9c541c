//! Transferred A-infinity structure on the harmonic space.
//!
//! Given the Hodge decomposition of a DGA, the operations `m_k` for
//! `k >= 2` are the harmonic projections of the recursion in [`lambda`];
//! `m_1` vanishes because harmonic vectors are closed. The structure is
//! stored as sparse tables over tuples of flat harmonic basis indices,
//! which keeps every lookup exact and every serialization deterministic.

mod checks;
mod lambda;
mod massey;

pub use checks::{harmonic_associativity_check, ring_isomorphism_check, stasheff_check};
pub use lambda::{lambda_eval, LambdaVariant};
pub use massey::{compare_m3_massey, massey_triple, MasseyError, MasseyProduct};

use crate::dga::Dga;
use crate::graded::{BasisKey, Element, GradedVectorSpace};
use crate::hodge::HodgeData;
use crate::rational::{format_rational, one, Rational};
use lambda::TupleEvaluator;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransferError {
    /// Wrong number of inputs for the requested operation.
    Arity { got: usize },
    /// An input that must lie in the harmonic space does not.
    NotHarmonic { input: String },
}

impl fmt::Display for TransferError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransferError::Arity { got } => write!(f, "unsupported number of inputs: {got}"),
            TransferError::NotHarmonic { input } => {
                write!(f, "input is not harmonic: {input}")
            }
        }
    }
}

impl std::error::Error for TransferError {}

#[derive(Debug, Clone, Copy)]
pub struct TransferOptions {
    pub max_arity: usize,
    pub variant: LambdaVariant,
    pub parallel: bool,
}

impl Default for TransferOptions {
    fn default() -> Self {
        TransferOptions { max_arity: 3, variant: LambdaVariant::Printed, parallel: false }
    }
}

#[derive(Debug, Clone)]
pub struct AInfinityStructure {
    space: Arc<GradedVectorSpace>,
    max_arity: usize,
    variant: LambdaVariant,
    basis: Vec<Element>,
    degrees: Vec<usize>,
    names: Vec<String>,
    /// Ambient position where each basis vector has coefficient one and all
    /// other basis vectors of the same degree vanish; coordinates of any
    /// harmonic element are read off these positions.
    probes: Vec<BasisKey>,
    /// Nonzero `m_k` values per arity, keyed by input index tuples.
    tables: BTreeMap<usize, BTreeMap<Vec<u32>, Element>>,
}

/// Transfers with default options and the given maximal arity.
pub fn transfer_structure(dga: &Dga, hodge: &HodgeData, max_arity: usize) -> AInfinityStructure {
    transfer_structure_with(dga, hodge, TransferOptions { max_arity, ..Default::default() })
}

pub fn transfer_structure_with(
    dga: &Dga,
    hodge: &HodgeData,
    options: TransferOptions,
) -> AInfinityStructure {
    assert!(options.max_arity >= 2, "the structure starts at the binary operation");
    let space = Arc::clone(dga.space());
    let top = space.top() as i64;
    let basis = hodge.flat_harmonic_basis();
    let degrees: Vec<usize> = basis
        .iter()
        .map(|e| e.homogeneous_degree().expect("harmonic basis vectors are homogeneous"))
        .collect();
    let names = basis_names(&space, &basis, &degrees);
    let probes = basis_probes(&space, &basis, &degrees);

    let mut tables: BTreeMap<usize, BTreeMap<Vec<u32>, Element>> = BTreeMap::new();
    let mut serial_eval = TupleEvaluator::new(dga, hodge, options.variant, &basis, &degrees);
    for k in 2..=options.max_arity {
        // Output degree of m_k is fixed by the input degrees; tuples whose
        // output falls outside the graded range contribute nothing.
        let tuples: Vec<Vec<u32>> = index_tuples(basis.len(), k)
            .into_iter()
            .filter(|t| {
                let total: i64 = t.iter().map(|&i| degrees[i as usize] as i64).sum();
                let out = total + 2 - k as i64;
                (0..=top).contains(&out)
            })
            .collect();

        let entries: Vec<(Vec<u32>, Element)> = if options.parallel {
            tuples
                .into_par_iter()
                .map_init(
                    || TupleEvaluator::new(dga, hodge, options.variant, &basis, &degrees),
                    |eval, t| {
                        let value = hodge.harmonic_part(&eval.lambda(&t));
                        (t, value)
                    },
                )
                .filter(|(_, v)| !v.is_zero())
                .collect()
        } else {
            tuples
                .into_iter()
                .filter_map(|t| {
                    let value = hodge.harmonic_part(&serial_eval.lambda(&t));
                    (!value.is_zero()).then_some((t, value))
                })
                .collect()
        };
        tables.insert(k, entries.into_iter().collect());
    }

    AInfinityStructure {
        space,
        max_arity: options.max_arity,
        variant: options.variant,
        basis,
        degrees,
        names,
        probes,
        tables,
    }
}

fn basis_names(
    space: &GradedVectorSpace,
    basis: &[Element],
    degrees: &[usize],
) -> Vec<String> {
    let mut per_degree_index = vec![0usize; space.top() + 1];
    basis
        .iter()
        .zip(degrees)
        .map(|(e, &d)| {
            let i = per_degree_index[d];
            per_degree_index[d] += 1;
            let mut terms = e.terms();
            match (terms.next(), terms.next()) {
                (Some((key, c)), None) if *c == one() => space.label(key).to_string(),
                _ => format!("h{d}_{i}"),
            }
        })
        .collect()
}

fn basis_probes(
    space: &GradedVectorSpace,
    basis: &[Element],
    degrees: &[usize],
) -> Vec<BasisKey> {
    basis
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let d = degrees[i];
            let peers = basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i && degrees[j] == d)
                .map(|(_, other)| other);
            let peers: Vec<&Element> = peers.collect();
            (0..space.dim(d as i64))
                .map(|row| (d, row))
                .find(|&key| {
                    e.coeff(key) == one()
                        && peers.iter().all(|other| other.coeff(key).is_zero())
                })
                .expect("canonical kernel bases carry unit coordinate positions")
        })
        .collect()
}

fn index_tuples(count: usize, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if count == 0 {
        return out;
    }
    let mut current = vec![0u32; len];
    loop {
        out.push(current.clone());
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            current[pos] += 1;
            if (current[pos] as usize) < count {
                break;
            }
            current[pos] = 0;
        }
    }
}

impl AInfinityStructure {
    pub fn space(&self) -> &Arc<GradedVectorSpace> {
        &self.space
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn variant(&self) -> LambdaVariant {
        self.variant
    }

    /// Flat harmonic basis, ordered by degree.
    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn basis_degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, i: u32) -> &str {
        &self.names[i as usize]
    }

    /// Flat indices of the basis vectors in one degree.
    pub fn indices_in_degree(&self, n: usize) -> Vec<u32> {
        (0..self.basis.len() as u32).filter(|&i| self.degrees[i as usize] == n).collect()
    }

    pub fn table(&self, k: usize) -> Option<&BTreeMap<Vec<u32>, Element>> {
        self.tables.get(&k)
    }

    pub fn table_value(&self, k: usize, tuple: &[u32]) -> Option<&Element> {
        self.tables.get(&k)?.get(tuple)
    }

    /// Coordinates of `e` in the flat harmonic basis; errors when `e` is not
    /// in the harmonic span.
    pub fn flat_coords(&self, e: &Element) -> Result<Vec<Rational>, TransferError> {
        let coords: Vec<Rational> = self.probes.iter().map(|&p| e.coeff(p)).collect();
        let mut reconstructed = Element::zero();
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                reconstructed = reconstructed.add(&b.scale(c));
            }
        }
        if reconstructed != *e {
            return Err(TransferError::NotHarmonic { input: e.display(&self.space) });
        }
        Ok(coords)
    }

    /// Evaluates `m_k` on `k = args.len()` harmonic elements, multilinearly.
    pub fn apply(&self, args: &[Element]) -> Result<Element, TransferError> {
        let k = args.len();
        if k == 0 || k > self.max_arity {
            return Err(TransferError::Arity { got: k });
        }
        let coord_lists: Vec<Vec<(u32, Rational)>> = args
            .iter()
            .map(|a| {
                Ok(self
                    .flat_coords(a)?
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i as u32, c))
                    .collect())
            })
            .collect::<Result<_, TransferError>>()?;
        // m_1 = 0 on the harmonic space.
        if k == 1 {
            return Ok(Element::zero());
        }

        let mut acc = Element::zero();
        let mut tuple = vec![0u32; k];
        let mut coeff = vec![Rational::zero(); k];
        self.expand(&coord_lists, 0, &mut tuple, &mut coeff, &mut acc);
        Ok(acc)
    }

    fn expand(
        &self,
        coord_lists: &[Vec<(u32, Rational)>],
        slot: usize,
        tuple: &mut Vec<u32>,
        coeff: &mut Vec<Rational>,
        acc: &mut Element,
    ) {
        if slot == coord_lists.len() {
            if let Some(value) = self.table_value(coord_lists.len(), tuple) {
                let mut c = coeff[0].clone();
                for f in &coeff[1..] {
                    c *= f;
                }
                *acc = acc.add(&value.scale(&c));
            }
            return;
        }
        for (i, c) in &coord_lists[slot] {
            tuple[slot] = *i;
            coeff[slot] = c.clone();
            self.expand(coord_lists, slot + 1, tuple, coeff, acc);
        }
    }

    pub fn to_json(&self) -> String {
        let mut harmonic_basis: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for (name, &d) in self.names.iter().zip(&self.degrees) {
            harmonic_basis.entry(d.to_string()).or_default().push(name.clone());
        }

        let mut tables = BTreeMap::new();
        for (k, table) in &self.tables {
            let rows: Vec<serde_json::Value> = table
                .iter()
                .map(|(tuple, value)| {
                    let inputs: Vec<&str> =
                        tuple.iter().map(|&i| self.names[i as usize].as_str()).collect();
                    let output: Vec<serde_json::Value> = value
                        .terms()
                        .map(|(key, c)| {
                            json!({
                                "basis": self.space.label(key),
                                "coeff": format_rational(c),
                            })
                        })
                        .collect();
                    json!({ "inputs": inputs, "output": output })
                })
                .collect();
            tables.insert(k.to_string(), rows);
        }

        let doc = json!({
            "max_arity": self.max_arity,
            "harmonic_basis": harmonic_basis,
            "tables": tables,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("tables serialize");
        text.push('\n');
        text
    }
}
