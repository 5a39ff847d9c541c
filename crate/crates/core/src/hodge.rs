//! Hodge decomposition of a finite-dimensional DGA with inner product.
//!
//! The adjoint of the differential is determined blockwise by the Gram
//! matrices, the Laplacian is `dd* + d*d`, and the ambient space splits
//! orthogonally into harmonic vectors, exact vectors, and coexact vectors.
//! The Green operator `G` inverts the Laplacian on the orthogonal
//! complement of the harmonic space and vanishes on harmonics; the
//! homotopy `Q = G d*` contracts the complex onto its harmonic part:
//! `1 - p = dQ + Qd` with `p` the harmonic projector.
//!
//! Everything here is exact rational linear algebra. Kernel bases come out
//! of [`Mat::kernel_basis`] in canonical echelon form, so equal subspaces
//! produce equal basis lists and all derived operators are deterministic.

use crate::dga::Dga;
use crate::graded::{
    compose, kernel_basis, orthogonal_projection, Element, GradedBilinearForm, GradedMap,
    GradedVectorSpace,
};
use crate::matrix::Mat;
use std::fmt;
use std::sync::Arc;

/// A failed operator identity, with the first basis vector that breaks it.
#[derive(Debug, Clone)]
pub struct InvariantViolation {
    pub identity: String,
    pub witness: String,
}

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.identity, self.witness)
    }
}

#[derive(Debug, Clone)]
pub struct HodgeData {
    space: Arc<GradedVectorSpace>,
    differential: GradedMap,
    form: GradedBilinearForm,
    adjoint: GradedMap,
    laplacian: GradedMap,
    harmonic: Vec<Vec<Element>>,
    projector: GradedMap,
    green: GradedMap,
    homotopy: GradedMap,
}

impl HodgeData {
    pub fn compute(dga: &Dga) -> HodgeData {
        let space = Arc::clone(dga.space());
        let d = dga.differential().clone();
        let form = dga.form().clone();
        let top = space.top();

        // Adjoint block at source degree n: g_{n-1}^{-1} d_{n-1}^T g_n.
        let adjoint_blocks: Vec<Mat> = (0..=top)
            .map(|n| {
                if n == 0 {
                    return Mat::zeros(0, space.dim(0));
                }
                let g_prev_inv =
                    form.gram(n - 1).inverse().expect("gram matrices are invertible");
                g_prev_inv.mul(&d.block(n as i64 - 1).transpose()).mul(form.gram(n))
            })
            .collect();
        let adjoint = GradedMap::from_blocks(&space, -1, adjoint_blocks);

        let laplacian = compose(&d, &adjoint).add(&compose(&adjoint, &d));

        let harmonic: Vec<Vec<Element>> =
            (0..=top as i64).map(|n| kernel_basis(&laplacian, n)).collect();

        let flat: Vec<Element> = harmonic.iter().flatten().cloned().collect();
        let projector =
            orthogonal_projection(&flat, &form).expect("kernel basis vectors are independent");

        // Green operator: on each degree solve laplacian(x) = 1 - p
        // columnwise, with x constrained to the orthogonal complement of the
        // harmonic space. The complement is ker(H^T g); the Laplacian is a
        // bijection on it, so the solve never fails.
        let mut green = GradedMap::zero(&space, 0);
        for n in 0..=top {
            let dim = space.dim(n as i64);
            if dim == 0 {
                continue;
            }
            let h = Mat::from_cols(
                dim,
                &harmonic[n].iter().map(|e| e.coords_in(&space, n)).collect::<Vec<_>>(),
            );
            let perp = Mat::from_cols(
                dim,
                &h.transpose().mul(form.gram(n)).kernel_basis(),
            );
            let rhs = Mat::identity(dim).sub(&projector.block(n as i64));
            if perp.cols() == 0 {
                debug_assert!(rhs.is_zero(), "fully harmonic degree has trivial complement");
                continue;
            }
            let coeffs = laplacian
                .block(n as i64)
                .mul(&perp)
                .solve_mat(&rhs)
                .expect("laplacian is invertible on the non-harmonic complement");
            *green.block_mut(n) = perp.mul(&coeffs);
        }

        let homotopy = compose(&green, &adjoint);

        HodgeData {
            space,
            differential: d,
            form,
            adjoint,
            laplacian,
            harmonic,
            projector,
            green,
            homotopy,
        }
    }

    pub fn space(&self) -> &Arc<GradedVectorSpace> {
        &self.space
    }

    pub fn differential(&self) -> &GradedMap {
        &self.differential
    }

    pub fn form(&self) -> &GradedBilinearForm {
        &self.form
    }

    /// `d*`, lowering degree by one.
    pub fn adjoint(&self) -> &GradedMap {
        &self.adjoint
    }

    /// `dd* + d*d`.
    pub fn laplacian(&self) -> &GradedMap {
        &self.laplacian
    }

    /// Orthogonal projection onto the harmonic space.
    pub fn projector(&self) -> &GradedMap {
        &self.projector
    }

    pub fn green(&self) -> &GradedMap {
        &self.green
    }

    /// `Q = G d*`, lowering degree by one.
    pub fn homotopy(&self) -> &GradedMap {
        &self.homotopy
    }

    /// Canonical basis of the harmonic vectors in one degree.
    pub fn harmonic_basis(&self, n: usize) -> &[Element] {
        &self.harmonic[n]
    }

    /// All harmonic basis vectors, ordered by degree.
    pub fn flat_harmonic_basis(&self) -> Vec<Element> {
        self.harmonic.iter().flatten().cloned().collect()
    }

    pub fn harmonic_dims(&self) -> Vec<usize> {
        self.harmonic.iter().map(Vec::len).collect()
    }

    pub fn harmonic_part(&self, e: &Element) -> Element {
        self.projector.apply(e)
    }

    pub fn is_harmonic(&self, e: &Element) -> bool {
        self.projector.apply(e) == *e
    }

    /// Checks every operator identity of the decomposition, returning all
    /// violations (empty means the decomposition is internally consistent).
    pub fn verify(&self) -> Vec<InvariantViolation> {
        let mut out = Vec::new();
        let space = &self.space;
        let top = space.top();
        let d = &self.differential;
        let adj = &self.adjoint;
        let lap = &self.laplacian;
        let p = &self.projector;
        let g = &self.green;
        let q = &self.homotopy;
        let id = GradedMap::identity(space);
        let complement = id.sub(p);

        let map_eq = |out: &mut Vec<InvariantViolation>, identity: &str, lhs: &GradedMap, rhs: &GradedMap| {
            if lhs != rhs {
                let key = space
                    .basis_keys()
                    .find(|&k| lhs.apply(&Element::basis(k)) != rhs.apply(&Element::basis(k)))
                    .expect("unequal maps move some basis vector");
                out.push(InvariantViolation {
                    identity: identity.to_string(),
                    witness: format!(
                        "on {}: {} vs {}",
                        space.label(key),
                        lhs.apply(&Element::basis(key)).display(space),
                        rhs.apply(&Element::basis(key)).display(space)
                    ),
                });
            }
        };

        // d* is the adjoint of d: <d a, b> = <a, d* b> blockwise.
        for n in 1..=top {
            let lhs = d.block(n as i64 - 1).transpose().mul(self.form.gram(n));
            let rhs = self.form.gram(n - 1).mul(&adj.block(n as i64));
            if lhs != rhs {
                out.push(InvariantViolation {
                    identity: "adjoint pairing <da,b> = <a,d*b>".into(),
                    witness: format!("gram blocks differ at degree {n}"),
                });
            }
        }

        map_eq(&mut out, "adjoint squares to zero", &compose(adj, adj), &GradedMap::zero(space, -2));
        map_eq(&mut out, "laplacian commutes with d", &compose(lap, d), &compose(d, lap));
        map_eq(&mut out, "laplacian commutes with d*", &compose(lap, adj), &compose(adj, lap));

        map_eq(&mut out, "projector is idempotent", &compose(p, p), p);
        map_eq(&mut out, "projector kills exact vectors", &compose(p, d), &GradedMap::zero(space, 1));
        map_eq(&mut out, "projector kills coexact vectors", &compose(p, adj), &GradedMap::zero(space, -1));
        map_eq(&mut out, "green vanishes on harmonics", &compose(g, p), &GradedMap::zero(space, 0));
        map_eq(&mut out, "green commutes with the projector", &compose(g, p), &compose(p, g));
        map_eq(&mut out, "green inverts the laplacian off harmonics", &compose(lap, g), &complement);
        map_eq(&mut out, "green commutes with the laplacian", &compose(lap, g), &compose(g, lap));
        map_eq(&mut out, "green commutes with d", &compose(g, d), &compose(d, g));
        map_eq(&mut out, "green commutes with d*", &compose(g, adj), &compose(adj, g));
        map_eq(&mut out, "homotopy contracts onto harmonics (1 - p = dQ + Qd)",
            &compose(d, q).add(&compose(q, d)), &complement);
        map_eq(&mut out, "homotopy squares to zero", &compose(q, q), &GradedMap::zero(space, -2));
        map_eq(&mut out, "homotopy vanishes on harmonics", &compose(q, p), &GradedMap::zero(space, -1));
        map_eq(&mut out, "projector kills the homotopy image", &compose(p, q), &GradedMap::zero(space, -1));

        // Projector self-adjointness, blockwise.
        for n in 0..=top {
            let gp = self.form.gram(n).mul(&p.block(n as i64));
            if gp != gp.transpose() {
                out.push(InvariantViolation {
                    identity: "projector is self-adjoint".into(),
                    witness: format!("gram block differs from its transpose at degree {n}"),
                });
            }
        }

        // Harmonic = ker d intersect ker d*, compared as canonical lists.
        for n in 0..=top as i64 {
            let stacked = d.block(n).vcat(&adj.block(n));
            let joint: Vec<Element> = stacked
                .kernel_basis()
                .into_iter()
                .map(|v| Element::from_coords(n as usize, &v))
                .collect();
            if joint != self.harmonic[n as usize] {
                out.push(InvariantViolation {
                    identity: "harmonic space is ker d intersect ker d*".into(),
                    witness: format!("kernel bases differ at degree {n}"),
                });
            }
        }

        // Dimension count of the three-way splitting.
        for n in 0..=top as i64 {
            let h = self.harmonic[n as usize].len();
            let exact = d.block(n - 1).rank();
            let coexact = adj.block(n + 1).rank();
            if space.dim(n) != h + exact + coexact {
                out.push(InvariantViolation {
                    identity: "harmonic + exact + coexact dimensions fill each degree".into(),
                    witness: format!(
                        "degree {n}: {} != {h} + {exact} + {coexact}",
                        space.dim(n)
                    ),
                });
            }
        }

        out
    }
}
