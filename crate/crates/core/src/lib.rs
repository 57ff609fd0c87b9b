//! Geometry of qutrit state space in the SIC-POVM probability representation.
//!
//! A qutrit SIC is a set of nine rank-1 projectors `Π_i` on a 3-dimensional
//! Hilbert space whose pairwise overlaps all equal 1/4. Scaled by 1/3 the set
//! is an informationally complete measurement, so every density matrix is
//! faithfully encoded by its nine outcome probabilities `p(i) = Tr(ρΠ_i)/3`.
//! This crate builds the Weyl-Heisenberg qutrit SICs family by family and
//! works out the geometry of the 8-dimensional convex body of qutrit states
//! inside the probability simplex:
//!
//! - [`sic`] — shift/phase operators, fiducial vectors, and SIC ensembles for
//!   the eight generic families, the four π/6 exceptional SICs, and the
//!   canonical Hesse SIC.
//! - [`invariants`] — triple products `T_ijk = Tr(Π_iΠ_jΠ_k)`, structure
//!   coefficients `S_ijk`, their closed-form values `(x_t, y_t, z_t)`, and
//!   the index-generator rules that classify every triple.
//! - [`representation`] — the bijection between density matrices and
//!   probability vectors, purity conditions, and the affine-plane line set.
//! - [`rotation`] — the orthogonal 9×9 matrices relating the probability
//!   vectors of distinct SICs, in both trace-constructed and closed
//!   (permutation-conjugated circulant) form.
//! - [`boundary`] — trace-moment state classification, the polar equation of
//!   the boundary `4r³F(n) − r² + 1/54 = 0` with its closed-form root, and
//!   the analysis of the simplex face `p(9) = 0`.
//!
//! All arithmetic is plain `f64`; the closed-form identities hold to far
//! better than the tolerances in [`tol`].

#![forbid(unsafe_code)]

pub mod boundary;
mod error;
pub mod export;
pub mod invariants;
pub mod linalg;
pub mod representation;
pub mod rotation;
pub mod sic;
pub mod tol;

pub use error::{Error, Result};
pub use linalg::{CMat3, CVec3, Complex, RMat9};
pub use representation::ProbVector;
pub use sic::{FamilySpec, GenericFamily, SicEnsemble, Sign};
