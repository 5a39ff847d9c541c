//! Finite-dimensional Lie algebras given by structure constants, and their
//! Chevalley-Eilenberg cochain DGAs.
//!
//! The CE algebra is the exterior algebra on dual generators `e1..en` (plus
//! the unit `1` in degree 0) with `d(ek) = -sum_{i<j} c[i][j][k] ei^ej`
//! extended as a degree `+1` derivation. `d^2 = 0` is equivalent to the
//! Jacobi identity, which is checked up front so a bad structure fails with
//! the offending triple instead of a mysterious axiom report.

use super::{Dga, ParseError};
use crate::graded::{BasisKey, Element, GradedBilinearForm, GradedMap, GradedVectorSpace};
use crate::rational::{self, format_rational, parse_rational, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieStructure {
    dim: usize,
    /// `constants[(i, j, k)] = c` means `[e_i, e_j] = sum_k c e_k`, stored
    /// for `i < j` only (0-based).
    constants: HashMap<(usize, usize, usize), Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiFailure {
    /// 1-based generator indices of the violating triple.
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub residual: String,
}

impl fmt::Display for JacobiFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Jacobi identity fails on (e{}, e{}, e{}): cyclic sum = {}",
            self.i, self.j, self.k, self.residual
        )
    }
}

impl std::error::Error for JacobiFailure {}

impl LieStructure {
    /// `brackets` lists `(i, j, k, c)` with 1-based indices, `i < j`.
    pub fn new(
        dim: usize,
        brackets: &[(usize, usize, usize, Rational)],
    ) -> Result<Self, ParseError> {
        let mut constants = HashMap::new();
        for (i, j, k, c) in brackets {
            if *i < 1 || *j < 1 || *k < 1 || *i > dim || *j > dim || *k > dim {
                return Err(ParseError::new(format!(
                    "bracket indices ({i}, {j}, {k}) out of range 1..={dim}"
                )));
            }
            if i >= j {
                return Err(ParseError::new(format!(
                    "bracket entry must have i < j, got ({i}, {j})"
                )));
            }
            if constants.insert((i - 1, j - 1, k - 1), c.clone()).is_some() {
                return Err(ParseError::new(format!(
                    "duplicate bracket entry for (i, j, k) = ({i}, {j}, {k})"
                )));
            }
        }
        constants.retain(|_, c| !c.is_zero());
        Ok(LieStructure { dim, constants })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `[e_a, e_b]` as a dense coordinate vector (0-based).
    pub fn bracket(&self, a: usize, b: usize) -> Vec<Rational> {
        let mut v = vec![rational::zero(); self.dim];
        if a == b {
            return v;
        }
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        for k in 0..self.dim {
            if let Some(c) = self.constants.get(&(lo, hi, k)) {
                v[k] = if sign > 0 { c.clone() } else { -c.clone() };
            }
        }
        v
    }

    fn bracket_vec(&self, v: &[Rational], w: &[Rational]) -> Vec<Rational> {
        let mut out = vec![rational::zero(); self.dim];
        for a in 0..self.dim {
            if v[a].is_zero() && w[a].is_zero() {
                continue;
            }
            for b in 0..self.dim {
                let coeff = &v[a] * &w[b];
                if coeff.is_zero() {
                    continue;
                }
                for (k, c) in self.bracket(a, b).into_iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&coeff * &c);
                    }
                }
            }
        }
        out
    }

    /// First violating triple `i < j < k`, if any.
    pub fn jacobi_check(&self) -> Result<(), JacobiFailure> {
        let basis = |i: usize| -> Vec<Rational> {
            let mut v = vec![rational::zero(); self.dim];
            v[i] = rational::one();
            v
        };
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let mut residual = self.bracket_vec(&self.bracket(i, j), &basis(k));
                    for (m, c) in self.bracket_vec(&self.bracket(j, k), &basis(i)).into_iter().enumerate() {
                        residual[m] = &residual[m] + &c;
                    }
                    for (m, c) in self.bracket_vec(&self.bracket(k, i), &basis(j)).into_iter().enumerate() {
                        residual[m] = &residual[m] + &c;
                    }
                    if residual.iter().any(|c| !c.is_zero()) {
                        let text = residual
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(m, c)| format!("{}*e{}", format_rational(c), m + 1))
                            .collect::<Vec<_>>()
                            .join(" + ");
                        return Err(JacobiFailure { i: i + 1, j: j + 1, k: k + 1, residual: text });
                    }
                }
            }
        }
        Ok(())
    }

    /// Chevalley-Eilenberg DGA on generators `e1..e{dim}`.
    pub fn chevalley_eilenberg_dga(&self) -> Result<Dga, JacobiFailure> {
        self.jacobi_check()?;
        Ok(self.chevalley_eilenberg_dga_unchecked())
    }

    /// Same construction without the Jacobi gate; with a non-Lie structure
    /// the resulting "DGA" fails `d^2 = 0`, which is exactly what the
    /// equivalence tests exercise.
    pub fn chevalley_eilenberg_dga_unchecked(&self) -> Dga {
        let n = self.dim;
        let monomials: Vec<Vec<Vec<usize>>> = (0..=n)
            .map(|p| {
                let mut list: Vec<Vec<usize>> = subsets(n, p);
                list.sort();
                list
            })
            .collect();
        let labels: Vec<Vec<String>> = monomials
            .iter()
            .map(|dim| dim.iter().map(|s| monomial_label(s)).collect())
            .collect();
        let space = GradedVectorSpace::new(labels).expect("monomial labels are unique");

        let pos: Vec<HashMap<&Vec<usize>, usize>> = monomials
            .iter()
            .map(|dim| dim.iter().enumerate().map(|(i, s)| (s, i)).collect())
            .collect();
        let key_of = |word: &[usize]| -> Option<(Rational, BasisKey)> {
            let (sign, sorted) = sort_word(word)?;
            Some((sign, (sorted.len(), pos[sorted.len()][&sorted])))
        };

        // d on generators: d(ek) = -sum_{i<j} c[i][j][k] ei^ej.
        let mut dgen: Vec<Vec<((usize, usize), Rational)>> = vec![Vec::new(); n];
        for (&(i, j, k), c) in &self.constants {
            dgen[k].push(((i, j), -c.clone()));
        }
        for terms in &mut dgen {
            terms.sort_by_key(|((i, j), _)| (*i, *j));
        }

        // Extend as a derivation over each monomial.
        let mut differential = GradedMap::zero(&space, 1);
        for (p, dim) in monomials.iter().enumerate() {
            for (si, s) in dim.iter().enumerate() {
                let mut ds = Element::zero();
                for t in 0..s.len() {
                    let slot_sign = if t % 2 == 0 { rational::one() } else { -rational::one() };
                    for ((i, j), c) in &dgen[s[t]] {
                        let mut word: Vec<usize> = Vec::with_capacity(s.len() + 1);
                        word.extend_from_slice(&s[..t]);
                        word.push(*i);
                        word.push(*j);
                        word.extend_from_slice(&s[t + 1..]);
                        if let Some((sign, key)) = key_of(&word) {
                            ds.add_term(key, &slot_sign * c * sign);
                        }
                    }
                }
                for ((d, i), c) in ds.terms() {
                    debug_assert_eq!(d, p + 1);
                    differential.block_mut(p)[(i, si)] = c.clone();
                }
            }
        }

        // Wedge product of monomials.
        let mut product: HashMap<(BasisKey, BasisKey), Element> = HashMap::new();
        for (p, dim_p) in monomials.iter().enumerate() {
            for (ip, s) in dim_p.iter().enumerate() {
                for (q, dim_q) in monomials.iter().enumerate() {
                    if p + q > n {
                        continue;
                    }
                    for (iq, t) in dim_q.iter().enumerate() {
                        let mut word = s.clone();
                        word.extend_from_slice(t);
                        if let Some((sign, key)) = key_of(&word) {
                            product.insert(((p, ip), (q, iq)), Element::from_terms([(key, sign)]));
                        }
                    }
                }
            }
        }

        let unit = Element::basis((0, 0));
        let form = GradedBilinearForm::identity(&space);
        Dga::new(space, differential, product, Some(unit), form)
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let raw: RawLie = serde_json::from_str(text).map_err(|e| ParseError::from_json(&e))?;
        let mut brackets = Vec::new();
        for b in &raw.brackets {
            let c = parse_rational(&b.c)
                .map_err(|msg| ParseError::new(format!("bracket coefficient: {msg}")))?;
            brackets.push((b.i, b.j, b.k, c));
        }
        LieStructure::new(raw.dim, &brackets)
    }

    pub fn to_json(&self) -> String {
        let mut entries: Vec<_> = self.constants.iter().collect();
        entries.sort_by_key(|(&(i, j, k), _)| (i, j, k));
        let raw = RawLie {
            dim: self.dim,
            brackets: entries
                .into_iter()
                .map(|(&(i, j, k), c)| RawBracket {
                    i: i + 1,
                    j: j + 1,
                    k: k + 1,
                    c: format_rational(c),
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&raw).expect("lie serialization cannot fail");
        text.push('\n');
        text
    }
}

#[derive(Serialize, Deserialize)]
struct RawBracket {
    i: usize,
    j: usize,
    k: usize,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct RawLie {
    dim: usize,
    #[serde(default)]
    brackets: Vec<RawBracket>,
}

pub(crate) fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(p);
    fn rec(n: usize, p: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == p {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(n, p, v + 1, current, out);
            current.pop();
        }
    }
    rec(n, p, 0, &mut current, &mut out);
    out
}

fn monomial_label(s: &[usize]) -> String {
    if s.is_empty() {
        "1".to_string()
    } else {
        s.iter().map(|&g| format!("e{}", g + 1)).collect::<Vec<_>>().join("^")
    }
}

/// Sorts a wedge word, returning the permutation sign; `None` when an index
/// repeats (the wedge vanishes).
pub(crate) fn sort_word(word: &[usize]) -> Option<(Rational, Vec<usize>)> {
    let mut w = word.to_vec();
    let mut swaps = 0usize;
    for i in 0..w.len() {
        for j in (i + 1)..w.len() {
            match w[j].cmp(&w[i]) {
                std::cmp::Ordering::Less => swaps += 1,
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    w.sort_unstable();
    let sign = if swaps % 2 == 0 { rational::one() } else { -rational::one() };
    Some((sign, w))
}
