//! Exact-arithmetic Hodge theory and homotopy transfer for finite-dimensional
//! differential graded algebras (DGAs).
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! tolerances anywhere. The pipeline is:
//!
//! 1. [`graded`] builds the linear-algebra substrate: graded vector spaces
//!    with named bases, graded maps as per-degree dense matrices, and a
//!    positive-definite bilinear form. Kernels, images, and projections come
//!    from reduced row echelon form with a fixed pivot order, so every basis
//!    the library hands out is canonical for the subspace it spans.
//! 2. [`dga`] holds the algebra layer: validated DGAs (explicit structure
//!    files, simplicial cochain algebras, Chevalley-Eilenberg algebras) and a
//!    quotient-based cohomology ring that never touches the inner product.
//! 3. [`hodge`] computes the adjoint differential, the Laplacian, the
//!    harmonic subspace, the Green operator, and the homotopy `Q = G d*`,
//!    verifying the decomposition identities exactly before returning.
//! 4. [`transfer`] runs Merkulov's side-condition recursion to produce the
//!    transferred A-infinity products `m_k` on harmonic elements, and checks
//!    them: Stasheff identities, associativity of the harmonic product, the
//!    ring isomorphism onto quotient cohomology, and a Massey triple-product
//!    cross-check for `m_3`.
//! 5. [`corpus`] provides the built-in example algebras used by the test
//!    suites and the `ainfty` command-line tool.

pub mod corpus;
pub mod dga;
pub mod graded;
pub mod hodge;
pub mod matrix;
pub mod rational;
pub mod report;
pub mod transfer;

pub use dga::Dga;
pub use graded::{Element, GradedBilinearForm, GradedMap, GradedVectorSpace};
pub use hodge::HodgeData;
pub use rational::Rational;
pub use transfer::AInfinityStructure;
