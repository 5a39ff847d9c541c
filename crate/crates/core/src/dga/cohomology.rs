//! Quotient cohomology ring `ker d / im d`.
//!
//! Deliberately independent of the inner product: representatives are chosen
//! by echelon position (the canonical kernel basis vectors that extend the
//! canonical image basis), and classes are coordinates with respect to those
//! representatives. This is the cross-check oracle for everything the
//! harmonic machinery computes.

use super::Dga;
use crate::graded::{image_basis, kernel_basis, Element, GradedMap, GradedVectorSpace};
use crate::matrix::Mat;
use crate::rational::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A cohomology class: degree plus coordinates in the representative basis
/// of that degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: usize,
    pub coords: Vec<Rational>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassError {
    NotClosed(String),
    MixedDegrees,
}

impl fmt::Display for ClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassError::NotClosed(w) => write!(f, "element is not closed: d(element) = {w}"),
            ClassError::MixedDegrees => write!(f, "element is not homogeneous"),
        }
    }
}

impl std::error::Error for ClassError {}

#[derive(Debug, Clone)]
pub struct CohomologyRing {
    space: Arc<GradedVectorSpace>,
    differential: GradedMap,
    /// Per degree: chosen closed representatives, one per class.
    representatives: Vec<Vec<Element>>,
    /// Per degree: columns are exact elements (canonical image basis).
    exact: Vec<Vec<Element>>,
    /// Per degree: [representatives | exact] as a matrix, for reduction.
    solver: Vec<Mat>,
    /// Structure constants of the induced product on classes.
    products: BTreeMap<((usize, usize), (usize, usize)), Vec<Rational>>,
}

impl CohomologyRing {
    pub fn compute(dga: &Dga) -> Self {
        let space = Arc::clone(dga.space());
        let d = dga.differential().clone();
        let top = space.top();

        let mut representatives: Vec<Vec<Element>> = Vec::with_capacity(top + 1);
        let mut exact: Vec<Vec<Element>> = Vec::with_capacity(top + 1);
        let mut solver: Vec<Mat> = Vec::with_capacity(top + 1);
        for n in 0..=top as i64 {
            let cycles = kernel_basis(&d, n);
            let boundaries = image_basis(&d, n - 1);
            let dim = space.dim(n);
            let b_mat = Mat::from_cols(
                dim,
                &boundaries.iter().map(|e| e.coords_in(&space, n as usize)).collect::<Vec<_>>(),
            );
            let z_mat = Mat::from_cols(
                dim,
                &cycles.iter().map(|e| e.coords_in(&space, n as usize)).collect::<Vec<_>>(),
            );
            // Pivots of [B | Z] landing in the Z block mark the cycles that
            // extend the boundaries to a basis of the cycle space; those are
            // the representatives. Canonical because both bases are.
            let pivots = b_mat.hcat(&z_mat).rref().pivot_cols;
            let reps: Vec<Element> = pivots
                .iter()
                .filter(|&&c| c >= boundaries.len())
                .map(|&c| cycles[c - boundaries.len()].clone())
                .collect();
            let r_mat = Mat::from_cols(
                dim,
                &reps.iter().map(|e| e.coords_in(&space, n as usize)).collect::<Vec<_>>(),
            );
            solver.push(r_mat.hcat(&b_mat));
            representatives.push(reps);
            exact.push(boundaries);
        }

        let mut ring = CohomologyRing {
            space,
            differential: d,
            representatives,
            exact,
            solver,
            products: BTreeMap::new(),
        };

        let mut products = BTreeMap::new();
        for p in 0..=top {
            for q in 0..=(top - p) {
                for i in 0..ring.betti(p) {
                    for j in 0..ring.betti(q) {
                        let w = dga.multiply(&ring.representatives[p][i], &ring.representatives[q][j]);
                        let coords = ring
                            .reduce(p + q, &w)
                            .expect("product of closed representatives is closed");
                        if coords.iter().any(|c| !c.is_zero()) {
                            products.insert(((p, i), (q, j)), coords);
                        }
                    }
                }
            }
        }
        ring.products = products;
        ring
    }

    pub fn top(&self) -> usize {
        self.space.top()
    }

    pub fn betti(&self, n: usize) -> usize {
        self.representatives.get(n).map_or(0, Vec::len)
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.top()).map(|n| self.betti(n)).collect()
    }

    pub fn representative(&self, n: usize, i: usize) -> &Element {
        &self.representatives[n][i]
    }

    pub fn representatives_in(&self, n: usize) -> &[Element] {
        self.representatives.get(n).map_or(&[], Vec::as_slice)
    }

    /// Coordinates of `[e]` in the representative basis; fails when `e` is
    /// not closed or not homogeneous (zero is a class in any degree).
    pub fn class_of(&self, n: usize, e: &Element) -> Result<CohomologyClass, ClassError> {
        if !e.is_zero() && e.homogeneous_degree() != Some(n) {
            return Err(ClassError::MixedDegrees);
        }
        let de = self.differential.apply(e);
        if !de.is_zero() {
            return Err(ClassError::NotClosed(de.display(&self.space)));
        }
        let coords = self.reduce(n, e).ok_or(ClassError::MixedDegrees)?;
        Ok(CohomologyClass { degree: n, coords })
    }

    /// Expresses a closed element as representatives + exact part and keeps
    /// the representative coordinates. `None` when it is not in the span,
    /// which cannot happen for closed homogeneous input.
    fn reduce(&self, n: usize, e: &Element) -> Option<Vec<Rational>> {
        if n > self.top() {
            return e.is_zero().then(Vec::new);
        }
        let rhs = e.coords_in(&self.space, n);
        let sol = self.solver[n].solve(&rhs)?;
        Some(sol[..self.representatives[n].len()].to_vec())
    }

    /// Induced product on classes via the stored structure constants.
    pub fn class_product(&self, a: &CohomologyClass, b: &CohomologyClass) -> CohomologyClass {
        let degree = a.degree + b.degree;
        let size = if degree > self.top() { 0 } else { self.betti(degree) };
        let mut coords = vec![crate::rational::zero(); size];
        for (i, ca) in a.coords.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coords.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                if let Some(sc) = self.products.get(&((a.degree, i), (b.degree, j))) {
                    let factor = ca * cb;
                    for (k, c) in sc.iter().enumerate() {
                        coords[k] = &coords[k] + &(c * &factor);
                    }
                }
            }
        }
        CohomologyClass { degree, coords }
    }

    /// Nonzero structure constants `[rep(p,i)] * [rep(q,j)] = sum_k c_k [rep(p+q,k)]`.
    pub fn product_constants(
        &self,
    ) -> impl Iterator<Item = (&((usize, usize), (usize, usize)), &Vec<Rational>)> {
        self.products.iter()
    }

    pub fn exact_basis_in(&self, n: usize) -> &[Element] {
        self.exact.get(n).map_or(&[], Vec::as_slice)
    }
}
