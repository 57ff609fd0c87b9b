//! Numeric tolerances used throughout the crate.
//!
//! Every closed-form identity implemented here is exact in real arithmetic;
//! the tolerances only absorb f64 rounding, and each one is sized to the
//! depth of the computation it guards.

/// Identity checks on directly computed quantities (traces, overlaps,
/// normalization). One or two 3×3 products deep; observed residuals are
/// below 1e-14, so 1e-10 leaves four digits of headroom.
pub const TAU_NUM: f64 = 1e-10;

/// Hermiticity of matrix inputs. Conjugate-pair storage makes constructed
/// matrices Hermitian to the bit, so this is essentially an input guard.
pub const TAU_HERM: f64 = 1e-12;

/// The SIC overlap law `Tr(Π_iΠ_j) = (3δ_ij + 1)/4`. Kept separate from
/// [`TAU_NUM`] because each overlap accumulates two matrix products.
pub const TAU_SIC: f64 = 1e-10;

/// Purity conditions in probability space. Cubic contractions sum 729
/// three-fold products, so rounding accumulates more than in plain traces.
pub const TAU_PURE: f64 = 1e-9;

/// Equality tests on the trace-moment state classification. The moments
/// involve cubes of reconstructed matrices.
pub const TAU_CLASS: f64 = 1e-8;

/// Slack on the admissible range `|F| ≤ 1/√2` of the boundary direction
/// functional, for values that graze the endpoints through rounding.
pub const TAU_F: f64 = 1e-10;

/// Below this magnitude the boundary radius uses the exact `F = 0` branch
/// `r = 1/(3√6)`; the generic branch carries a singular 1/(12F) prefactor.
pub const F_ZERO_THRESHOLD: f64 = 1e-12;
