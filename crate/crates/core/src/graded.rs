//! Graded vector spaces, elements, graded maps, and the inner product.
//!
//! A graded space concentrates in degrees `0..=top` with a named basis per
//! degree. Elements are sparse label-indexed coordinate vectors; graded maps
//! are one dense block per source degree. Basis-dependent data never leaks:
//! kernels, images, and projections all come from canonical echelon forms in
//! [`crate::matrix`], so repeated runs produce identical bases.

use crate::matrix::Mat;
use crate::rational::{self, format_rational, Rational};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// Position of a basis vector: degree, then index within that degree.
pub type BasisKey = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVectorSpace {
    labels: Vec<Vec<String>>,
    index: HashMap<String, BasisKey>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceError {
    DuplicateLabel(String),
    UnknownLabel(String),
}

impl fmt::Display for SpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceError::DuplicateLabel(l) => write!(f, "duplicate basis label `{l}`"),
            SpaceError::UnknownLabel(l) => write!(f, "unknown basis label `{l}`"),
        }
    }
}

impl std::error::Error for SpaceError {}

impl GradedVectorSpace {
    /// `labels[n]` is the ordered basis of degree `n`. Labels must be unique
    /// across all degrees.
    pub fn new(labels: Vec<Vec<String>>) -> Result<Arc<Self>, SpaceError> {
        let mut index = HashMap::new();
        for (d, names) in labels.iter().enumerate() {
            for (i, name) in names.iter().enumerate() {
                if index.insert(name.clone(), (d, i)).is_some() {
                    return Err(SpaceError::DuplicateLabel(name.clone()));
                }
            }
        }
        Ok(Arc::new(GradedVectorSpace { labels, index }))
    }

    /// Top degree. The unit space `{0}` in every degree is represented by an
    /// empty label list in degree 0.
    pub fn top(&self) -> usize {
        self.labels.len().saturating_sub(1)
    }

    pub fn dim(&self, n: i64) -> usize {
        if n < 0 {
            return 0;
        }
        self.labels.get(n as usize).map_or(0, Vec::len)
    }

    pub fn total_dim(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn label(&self, key: BasisKey) -> &str {
        &self.labels[key.0][key.1]
    }

    pub fn labels_in(&self, degree: usize) -> &[String] {
        self.labels.get(degree).map_or(&[], Vec::as_slice)
    }

    pub fn lookup(&self, label: &str) -> Result<BasisKey, SpaceError> {
        self.index.get(label).copied().ok_or_else(|| SpaceError::UnknownLabel(label.to_string()))
    }

    pub fn basis_element(&self, key: BasisKey) -> Element {
        Element::basis(key)
    }

    /// All basis keys in (degree, index) order.
    pub fn basis_keys(&self) -> impl Iterator<Item = BasisKey> + '_ {
        self.labels
            .iter()
            .enumerate()
            .flat_map(|(d, names)| (0..names.len()).map(move |i| (d, i)))
    }
}

/// Sparse vector in a graded space. Zero coefficients are never stored, so
/// structural equality is semantic equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    coeffs: BTreeMap<BasisKey, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(key: BasisKey) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(key, rational::one());
        Element { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BasisKey, Rational)>) -> Self {
        let mut e = Element::zero();
        for (key, c) in terms {
            e.add_term(key, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, key: BasisKey) -> Rational {
        self.coeffs.get(&key).cloned().unwrap_or_else(rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisKey, &Rational)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, key: BasisKey, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key).or_insert_with(rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn neg(&self) -> Element {
        Element { coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v.clone())).collect() }
    }

    /// The common degree of all terms; `None` for zero or mixed-degree
    /// elements.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.coeffs.keys().map(|(d, _)| *d);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Splits into homogeneous components, lowest degree first.
    pub fn homogeneous_parts(&self) -> Vec<(usize, Element)> {
        let mut parts: BTreeMap<usize, Element> = BTreeMap::new();
        for (key, c) in self.terms() {
            parts.entry(key.0).or_insert_with(Element::zero).add_term(key, c.clone());
        }
        parts.into_iter().collect()
    }

    /// Dense coordinates of the degree-`n` component.
    pub fn coords_in(&self, space: &GradedVectorSpace, n: usize) -> Vec<Rational> {
        let mut v = vec![rational::zero(); space.dim(n as i64)];
        for ((d, i), c) in self.terms() {
            if d == n {
                v[i] = c.clone();
            }
        }
        v
    }

    pub fn from_coords(n: usize, coords: &[Rational]) -> Element {
        Element::from_terms(
            coords.iter().enumerate().map(|(i, c)| ((n, i), c.clone())),
        )
    }

    /// Human-readable rendering like `xz - 2*yz + 1/2*xyz`.
    pub fn display(&self, space: &GradedVectorSpace) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (key, c) in self.terms() {
            let label = space.label(key);
            let (sign, mag) = if rational::is_negative(c) {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mag == rational::one() {
                out.push_str(label);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), label));
            }
        }
        out
    }
}

/// Degree-homogeneous linear map: one dense block per source degree, with
/// `blocks[n]` of shape `dim(n + shift) x dim(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    space: Arc<GradedVectorSpace>,
    shift: i64,
    blocks: Vec<Mat>,
}

impl GradedMap {
    pub fn zero(space: &Arc<GradedVectorSpace>, shift: i64) -> Self {
        let blocks = (0..=space.top())
            .map(|n| Mat::zeros(space.dim(n as i64 + shift), space.dim(n as i64)))
            .collect();
        GradedMap { space: Arc::clone(space), shift, blocks }
    }

    pub fn identity(space: &Arc<GradedVectorSpace>) -> Self {
        let blocks = (0..=space.top()).map(|n| Mat::identity(space.dim(n as i64))).collect();
        GradedMap { space: Arc::clone(space), shift: 0, blocks }
    }

    pub fn from_blocks(space: &Arc<GradedVectorSpace>, shift: i64, blocks: Vec<Mat>) -> Self {
        assert_eq!(blocks.len(), space.top() + 1, "one block per degree");
        for (n, b) in blocks.iter().enumerate() {
            assert_eq!(b.cols(), space.dim(n as i64), "block {n} source dim");
            assert_eq!(b.rows(), space.dim(n as i64 + shift), "block {n} target dim");
        }
        GradedMap { space: Arc::clone(space), shift, blocks }
    }

    pub fn space(&self) -> &Arc<GradedVectorSpace> {
        &self.space
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Block with source degree `n`; empty shapes outside `0..=top`.
    pub fn block(&self, n: i64) -> Mat {
        if n < 0 || n as usize > self.space.top() {
            return Mat::zeros(self.space.dim(n + self.shift), self.space.dim(n));
        }
        self.blocks[n as usize].clone()
    }

    pub fn block_ref(&self, n: usize) -> &Mat {
        &self.blocks[n]
    }

    pub fn block_mut(&mut self, n: usize) -> &mut Mat {
        &mut self.blocks[n]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn apply(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for ((d, i), c) in e.terms() {
            let target = d as i64 + self.shift;
            if target < 0 || d > self.space.top() {
                continue;
            }
            let block = &self.blocks[d];
            for row in 0..block.rows() {
                let a = &block[(row, i)];
                if !a.is_zero() {
                    out.add_term((target as usize, row), a * c);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(self.shift, other.shift, "shift mismatch in add");
        let blocks =
            self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        GradedMap { space: Arc::clone(&self.space), shift: self.shift, blocks }
    }

    pub fn sub(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(self.shift, other.shift, "shift mismatch in sub");
        let blocks =
            self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect();
        GradedMap { space: Arc::clone(&self.space), shift: self.shift, blocks }
    }

    pub fn scale(&self, c: &Rational) -> GradedMap {
        let blocks = self.blocks.iter().map(|b| b.scale(c)).collect();
        GradedMap { space: Arc::clone(&self.space), shift: self.shift, blocks }
    }
}

/// `compose(f, g) = f after g`.
pub fn compose(f: &GradedMap, g: &GradedMap) -> GradedMap {
    assert_eq!(f.space, g.space, "maps live on different spaces");
    let space = &f.space;
    let shift = f.shift + g.shift;
    let blocks = (0..=space.top() as i64)
        .map(|n| {
            let mid = n + g.shift;
            if mid < 0 || mid as usize > space.top() {
                // Factoring through a missing degree kills the block.
                Mat::zeros(space.dim(n + shift), space.dim(n))
            } else {
                f.block(mid).mul(&g.block(n))
            }
        })
        .collect();
    GradedMap { space: Arc::clone(space), shift, blocks }
}

/// Symmetric positive-definite bilinear form, one Gram matrix per degree.
/// Distinct degrees are orthogonal by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedBilinearForm {
    space: Arc<GradedVectorSpace>,
    gram: Vec<Mat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormError {
    Shape { degree: usize },
    NotSymmetric { degree: usize },
    NotPositiveDefinite { degree: usize },
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::Shape { degree } => write!(f, "gram matrix in degree {degree} has wrong shape"),
            FormError::NotSymmetric { degree } => write!(f, "gram matrix in degree {degree} is not symmetric"),
            FormError::NotPositiveDefinite { degree } => {
                write!(f, "gram matrix in degree {degree} is not positive definite")
            }
        }
    }
}

impl std::error::Error for FormError {}

impl GradedBilinearForm {
    pub fn identity(space: &Arc<GradedVectorSpace>) -> Self {
        let gram = (0..=space.top()).map(|n| Mat::identity(space.dim(n as i64))).collect();
        GradedBilinearForm { space: Arc::clone(space), gram }
    }

    /// Validates shape, symmetry, and positive definiteness per degree before
    /// accepting the matrices.
    pub fn new(space: &Arc<GradedVectorSpace>, gram: Vec<Mat>) -> Result<Self, FormError> {
        if gram.len() != space.top() + 1 {
            return Err(FormError::Shape { degree: gram.len() });
        }
        for (n, g) in gram.iter().enumerate() {
            let dim = space.dim(n as i64);
            if g.rows() != dim || g.cols() != dim {
                return Err(FormError::Shape { degree: n });
            }
            if !g.is_symmetric() {
                return Err(FormError::NotSymmetric { degree: n });
            }
            if !g.is_positive_definite() {
                return Err(FormError::NotPositiveDefinite { degree: n });
            }
        }
        Ok(GradedBilinearForm { space: Arc::clone(space), gram })
    }

    pub fn space(&self) -> &Arc<GradedVectorSpace> {
        &self.space
    }

    pub fn gram(&self, n: usize) -> &Mat {
        &self.gram[n]
    }

    pub fn is_identity(&self) -> bool {
        self.gram.iter().enumerate().all(|(n, g)| *g == Mat::identity(self.space.dim(n as i64)))
    }

    pub fn inner(&self, a: &Element, b: &Element) -> Rational {
        let mut acc = rational::zero();
        for ((d, i), ca) in a.terms() {
            for ((e, j), cb) in b.terms() {
                if d == e {
                    let g = &self.gram[d][(i, j)];
                    if !g.is_zero() {
                        acc += ca * cb * g;
                    }
                }
            }
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    NoSolution,
    MixedDegrees,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NoSolution => write!(f, "right-hand side is not in the image of the map on the allowed subspace"),
            SolveError::MixedDegrees => write!(f, "allowed subspace vectors must be homogeneous of one common degree"),
        }
    }
}

impl std::error::Error for SolveError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjectionError {
    DependentInput { degree: usize },
    MixedDegrees,
}

impl fmt::Display for ProjectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectionError::DependentInput { degree } => {
                write!(f, "projection input vectors in degree {degree} are linearly dependent")
            }
            ProjectionError::MixedDegrees => write!(f, "projection input vectors must be homogeneous"),
        }
    }
}

impl std::error::Error for ProjectionError {}

/// Canonical basis of `ker(m)` restricted to source degree `n`.
pub fn kernel_basis(m: &GradedMap, n: i64) -> Vec<Element> {
    if n < 0 || n as usize > m.space().top() {
        return Vec::new();
    }
    m.block(n)
        .kernel_basis()
        .into_iter()
        .map(|v| Element::from_coords(n as usize, &v))
        .collect()
}

/// Canonical basis of `m(A_n)`, living in degree `n + shift`.
pub fn image_basis(m: &GradedMap, n: i64) -> Vec<Element> {
    let target = n + m.shift();
    if n < 0 || n as usize > m.space().top() || target < 0 {
        return Vec::new();
    }
    m.block(n)
        .column_space_basis()
        .into_iter()
        .map(|v| Element::from_coords(target as usize, &v))
        .collect()
}

/// Solves `a(x) = rhs` with `x` constrained to the span of `allowed`.
/// `a` must be degree-preserving and `allowed` homogeneous of one degree.
/// The solution is unique whenever `a` is injective on the span; the echelon
/// solve makes the returned representative deterministic regardless.
pub fn solve_in_subspace(
    a: &GradedMap,
    rhs: &Element,
    allowed: &[Element],
) -> Result<Element, SolveError> {
    assert_eq!(a.shift(), 0, "solve_in_subspace expects a degree-preserving map");
    if allowed.is_empty() {
        return if rhs.is_zero() { Ok(Element::zero()) } else { Err(SolveError::NoSolution) };
    }
    let degree = allowed[0].homogeneous_degree().ok_or(SolveError::MixedDegrees)?;
    if allowed.iter().any(|v| v.homogeneous_degree() != Some(degree)) {
        return Err(SolveError::MixedDegrees);
    }
    if !rhs.is_zero() && rhs.homogeneous_degree() != Some(degree) {
        return Err(SolveError::NoSolution);
    }
    let space = a.space();
    let dim = space.dim(degree as i64);
    let basis = Mat::from_cols(
        dim,
        &allowed.iter().map(|v| v.coords_in(space, degree)).collect::<Vec<_>>(),
    );
    let system = a.block(degree as i64).mul(&basis);
    let rhs_vec = rhs.coords_in(space, degree);
    let c = system.solve(&rhs_vec).ok_or(SolveError::NoSolution)?;
    let x = basis.mul_vec(&c);
    Ok(Element::from_coords(degree, &x))
}

/// Orthogonal projection onto the span of `subspace` with respect to `form`,
/// returned as a degree-0 graded map (zero on degrees with no input vectors).
pub fn orthogonal_projection(
    subspace: &[Element],
    form: &GradedBilinearForm,
) -> Result<GradedMap, ProjectionError> {
    let space = form.space();
    let mut by_degree: BTreeMap<usize, Vec<&Element>> = BTreeMap::new();
    for v in subspace {
        if v.is_zero() {
            continue;
        }
        let d = v.homogeneous_degree().ok_or(ProjectionError::MixedDegrees)?;
        by_degree.entry(d).or_default().push(v);
    }
    let mut proj = GradedMap::zero(space, 0);
    for (degree, vectors) in by_degree {
        let dim = space.dim(degree as i64);
        let s = Mat::from_cols(
            dim,
            &vectors.iter().map(|v| v.coords_in(space, degree)).collect::<Vec<_>>(),
        );
        if s.rank() != s.cols() {
            return Err(ProjectionError::DependentInput { degree });
        }
        let g = form.gram(degree);
        // P = S (S^T G S)^{-1} S^T G; the middle Gram matrix is invertible
        // because the columns are independent and the form is definite.
        let stg = s.transpose().mul(g);
        let middle = stg.mul(&s);
        let middle_inv = middle.inverse().expect("gram of independent vectors is invertible");
        *proj.block_mut(degree) = s.mul(&middle_inv).mul(&stg);
    }
    Ok(proj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    /// Unit interval cochain setup: degree 0 basis (v0, v1), degree 1 basis
    /// (e), coboundary d(v0) = -e, d(v1) = e, identity inner product.
    fn interval() -> (Arc<GradedVectorSpace>, GradedMap, GradedBilinearForm) {
        let space = GradedVectorSpace::new(vec![
            vec!["v0".into(), "v1".into()],
            vec!["e".into()],
        ])
        .unwrap();
        let d = GradedMap::from_blocks(
            &space,
            1,
            vec![
                Mat::from_rows(vec![vec![int(-1), int(1)]]),
                Mat::zeros(0, 1),
            ],
        );
        let form = GradedBilinearForm::identity(&space);
        (space, d, form)
    }

    #[test]
    fn space_basics() {
        let (space, _, _) = interval();
        assert_eq!(space.top(), 1);
        assert_eq!(space.dim(0), 2);
        assert_eq!(space.dim(1), 1);
        assert_eq!(space.dim(-1), 0);
        assert_eq!(space.dim(2), 0);
        assert_eq!(space.lookup("e").unwrap(), (1, 0));
        assert!(space.lookup("nope").is_err());
        assert!(GradedVectorSpace::new(vec![vec!["a".into()], vec!["a".into()]]).is_err());
    }

    #[test]
    fn element_arithmetic() {
        let v0 = Element::basis((0, 0));
        let v1 = Element::basis((0, 1));
        let sum = v0.add(&v1);
        assert_eq!(sum.homogeneous_degree(), Some(0));
        assert!(sum.sub(&sum).is_zero());
        assert_eq!(sum.scale(&int(0)), Element::zero());

        let mixed = v0.add(&Element::basis((1, 0)));
        assert_eq!(mixed.homogeneous_degree(), None);
        let parts = mixed.homogeneous_parts();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, 0);
        assert_eq!(parts[1].0, 1);
    }

    #[test]
    fn apply_and_display() {
        let (space, d, _) = interval();
        let v0 = Element::basis((0, 0));
        let v1 = Element::basis((0, 1));
        let e = Element::basis((1, 0));
        assert_eq!(d.apply(&v0), e.neg());
        assert_eq!(d.apply(&v1), e);
        assert_eq!(d.apply(&v0.add(&v1)), Element::zero());
        assert_eq!(d.apply(&e), Element::zero());
        assert_eq!(v0.sub(&v1.scale(&ratio(1, 2))).display(&space), "v0 - 1/2*v1");
    }

    #[test]
    fn kernel_and_image_oracle() {
        let (_, d, _) = interval();
        let kernel = kernel_basis(&d, 0);
        assert_eq!(kernel, vec![Element::basis((0, 0)).add(&Element::basis((0, 1)))]);
        assert!(kernel_basis(&d, 1).len() == 1);
        assert_eq!(image_basis(&d, 0), vec![Element::basis((1, 0))]);
        assert!(image_basis(&d, 1).is_empty());

        let dd = compose(&d, &d);
        assert_eq!(dd.shift(), 2);
        assert!(dd.is_zero());
    }

    #[test]
    fn solve_in_subspace_oracle() {
        let (space, _, _) = interval();
        // a = 2 * identity; solving 2x = e inside span(e) gives x = e/2.
        let a = GradedMap::identity(&space).scale(&int(2));
        let e = Element::basis((1, 0));
        let x = solve_in_subspace(&a, &e, &[e.clone()]).unwrap();
        assert_eq!(x, e.scale(&ratio(1, 2)));

        // rhs outside the reachable span.
        let v0 = Element::basis((0, 0));
        let v1 = Element::basis((0, 1));
        let diff = v0.sub(&v1);
        let err = solve_in_subspace(&a, &diff, &[v0.add(&v1)]);
        assert_eq!(err, Err(SolveError::NoSolution));

        // Zero rhs with empty subspace is solvable by zero.
        assert_eq!(solve_in_subspace(&a, &Element::zero(), &[]), Ok(Element::zero()));
    }

    #[test]
    fn projection_oracle() {
        let (_, _, form) = interval();
        let v0 = Element::basis((0, 0));
        let v1 = Element::basis((0, 1));
        let diag = v0.add(&v1);
        let p = orthogonal_projection(&[diag.clone()], &form).unwrap();

        // P(v0) = (v0 + v1) / 2, P fixes the subspace, P^2 = P.
        assert_eq!(p.apply(&v0), diag.scale(&ratio(1, 2)));
        assert_eq!(p.apply(&diag), diag);
        assert_eq!(compose(&p, &p), p);

        // Self-adjoint with respect to the form.
        assert_eq!(form.inner(&p.apply(&v0), &v1), form.inner(&v0, &p.apply(&v1)));

        // Degree 1 has no input vectors: the block is zero.
        assert_eq!(p.apply(&Element::basis((1, 0))), Element::zero());

        // Dependent input is rejected.
        let dep = orthogonal_projection(&[v0.clone(), v0.scale(&int(3))], &form);
        assert_eq!(dep, Err(ProjectionError::DependentInput { degree: 0 }));

        // Projecting onto the whole degree recovers the identity there.
        let full = orthogonal_projection(&[v0.clone(), v1.clone()], &form).unwrap();
        assert_eq!(full.apply(&v0), v0);
        assert_eq!(full.apply(&v1), v1);
    }

    #[test]
    fn inner_product() {
        let (_, _, form) = interval();
        let v0 = Element::basis((0, 0));
        let v1 = Element::basis((0, 1));
        let e = Element::basis((1, 0));
        assert_eq!(form.inner(&v0, &v0), int(1));
        assert_eq!(form.inner(&v0, &v1), int(0));
        // Cross-degree pairings vanish.
        assert_eq!(form.inner(&v0, &e), int(0));
        assert_eq!(form.inner(&v0.add(&e), &v0.add(&e)), int(2));
    }
}
