//! The SIC representation: density matrices as probability vectors.
//!
//! A SIC measurement sends `ρ` to `p(i) = Tr(ρΠ_i)/3`, a point of the
//! 9-outcome simplex, and the map inverts linearly:
//! `ρ = Σ_i (4p(i) − 1/3) Π_i`. Pure states land on the sphere
//! `Σ p(i)² = 1/6` and in addition satisfy one cubic condition built from
//! the structure coefficients; for the canonical Hesse SIC that cubic
//! collapses to a sum over the 12 lines of the finite affine plane of
//! order 3 on the outcome labels.

use crate::error::{Error, Result};
use crate::invariants::InvariantTensors;
use crate::linalg::{CMat3, Complex};
use crate::sic::SicEnsemble;
use crate::tol::{TAU_HERM, TAU_NUM};

/// A point of the 9-outcome probability simplex.
///
/// Construction checks normalization and permits entries down to `−TAU_NUM`
/// so boundary states that graze a simplex face are not rejected. Vectors
/// obtained from non-positive Hermitian matrices via [`probs_from_state`]
/// may carry genuinely negative entries and skip the sign check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbVector {
    p: [f64; 9],
}

impl ProbVector {
    pub fn new(p: [f64; 9]) -> Result<Self> {
        if p.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > TAU_NUM {
            return Err(Error::NotNormalized { sum });
        }
        for (index, &value) in p.iter().enumerate() {
            if value < -TAU_NUM {
                return Err(Error::NegativeProbability {
                    index: index + 1,
                    value,
                });
            }
        }
        Ok(Self { p })
    }

    pub(crate) fn new_signed(p: [f64; 9]) -> Result<Self> {
        if p.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > TAU_NUM {
            return Err(Error::NotNormalized { sum });
        }
        Ok(Self { p })
    }

    /// The center of the simplex, i.e. the maximally mixed state.
    pub fn uniform() -> Self {
        Self { p: [1.0 / 9.0; 9] }
    }

    /// Outcome probability for a 1-based label.
    pub fn get(&self, i: usize) -> f64 {
        assert!((1..=9).contains(&i), "outcome label {i} outside 1..=9");
        self.p[i - 1]
    }

    pub fn as_array(&self) -> &[f64; 9] {
        &self.p
    }

    pub fn dot(&self, other: &ProbVector) -> f64 {
        self.p.iter().zip(other.p.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn sum_squares(&self) -> f64 {
        self.p.iter().map(|v| v * v).sum()
    }

    pub fn sum_cubes(&self) -> f64 {
        self.p.iter().map(|v| v * v * v).sum()
    }

    pub fn max_abs_diff(&self, other: &ProbVector) -> f64 {
        self.p
            .iter()
            .zip(other.p.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// The outcome probabilities of a SIC measurement on `rho`.
pub fn probs_from_state(sic: &SicEnsemble, rho: &CMat3) -> Result<ProbVector> {
    if !rho.is_finite() {
        return Err(Error::NonFinite);
    }
    let residual = rho.hermiticity_residual();
    if residual > TAU_HERM {
        return Err(Error::NotHermitian {
            residual,
            tol: TAU_HERM,
        });
    }
    let trace = rho.trace();
    if (trace - Complex::new(1.0, 0.0)).norm() > TAU_NUM {
        return Err(Error::NotUnitTrace { trace: trace.re });
    }
    let mut p = [0.0; 9];
    for (slot, pi) in p.iter_mut().zip(sic.projectors().iter()) {
        *slot = (*rho * *pi).trace().re / 3.0;
    }
    ProbVector::new_signed(p)
}

/// Reconstructs the Hermitian unit-trace matrix `Σ_i (4p(i) − 1/3) Π_i`.
///
/// Positivity is not guaranteed; classifying the result as a state is the
/// job of the boundary module.
pub fn state_from_probs(sic: &SicEnsemble, p: &ProbVector) -> CMat3 {
    let mut rho = CMat3::ZERO;
    for (i, pi) in sic.projectors().iter().enumerate() {
        let coeff = 4.0 * p.as_array()[i] - 1.0 / 3.0;
        rho = rho + pi.scale(Complex::new(coeff, 0.0));
    }
    rho
}

/// Hilbert-Schmidt inner product `Tr(ρ₁ρ₂)` from probability vectors alone:
/// `12 p₁·p₂ − 1`.
pub fn hs_inner_from_probs(p1: &ProbVector, p2: &ProbVector) -> f64 {
    12.0 * p1.dot(p2) - 1.0
}

/// Residuals of the two purity conditions:
/// `Σp² − 1/6` and `Σ_ijk S̃_ijk p(i)p(j)p(k) − 1/12`.
/// Both vanish exactly when `p` represents a pure state.
pub fn purity_residuals(p: &ProbVector, inv: &InvariantTensors) -> (f64, f64) {
    let quad = p.sum_squares() - 1.0 / 6.0;
    let cubic = struct_contraction(p, inv) - 1.0 / 12.0;
    (quad, cubic)
}

/// `Σ_ijk S̃_ijk p(i)p(j)p(k)` over all 729 ordered triples.
pub fn struct_contraction(p: &ProbVector, inv: &InvariantTensors) -> f64 {
    let arr = p.as_array();
    let mut total = 0.0;
    for i in 1..=9 {
        for j in 1..=9 {
            let pij = arr[i - 1] * arr[j - 1];
            for k in 1..=9 {
                total += inv.s_real(i, j, k) * pij * arr[k - 1];
            }
        }
    }
    total
}

/// `Σ_ijk T̃_ijk p(i)p(j)p(k)`; equals 5/32 for pure states.
pub fn triple_contraction(p: &ProbVector, inv: &InvariantTensors) -> f64 {
    let arr = p.as_array();
    let mut total = 0.0;
    for i in 1..=9 {
        for j in 1..=9 {
            let pij = arr[i - 1] * arr[j - 1];
            for k in 1..=9 {
                total += inv.t(i, j, k).re * pij * arr[k - 1];
            }
        }
    }
    total
}

/// `½ Σp³ + Σ_{i≠j≠k} S̃_ijk p(i)p(j)p(k)`; vanishes for pure states in any
/// family (the same-index structure values reduce the general cubic to this).
pub fn alternate_cubic_residual(p: &ProbVector, inv: &InvariantTensors) -> f64 {
    let arr = p.as_array();
    let mut off_diagonal = 0.0;
    for i in 1..=9 {
        for j in 1..=9 {
            for k in 1..=9 {
                if i != j && j != k && i != k {
                    off_diagonal += inv.s_real(i, j, k) * arr[i - 1] * arr[j - 1] * arr[k - 1];
                }
            }
        }
    }
    0.5 * p.sum_cubes() + off_diagonal
}

/// The 12 lines of the finite affine plane of order 3 on the outcome labels,
/// i.e. the union of the rows of the four `+` index generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineSet {
    lines: [[usize; 3]; 12],
}

impl LineSet {
    pub fn lines(&self) -> &[[usize; 3]; 12] {
        &self.lines
    }

    /// Number of lines through a 1-based point label.
    pub fn lines_through(&self, point: usize) -> usize {
        self.lines
            .iter()
            .filter(|line| line.contains(&point))
            .count()
    }

    /// Number of lines containing both points.
    pub fn lines_through_pair(&self, a: usize, b: usize) -> usize {
        self.lines
            .iter()
            .filter(|line| line.contains(&a) && line.contains(&b))
            .count()
    }

    /// `Σ_lines v(i)v(j)v(k)` over the 12 unordered lines.
    pub fn cubic_sum(&self, values: &[f64; 9]) -> f64 {
        self.lines
            .iter()
            .map(|&[i, j, k]| values[i - 1] * values[j - 1] * values[k - 1])
            .sum()
    }
}

/// The affine-plane line set.
pub fn affine_lines() -> LineSet {
    LineSet {
        lines: [
            [1, 2, 3],
            [4, 5, 6],
            [7, 8, 9],
            [1, 4, 7],
            [2, 5, 8],
            [3, 6, 9],
            [1, 5, 9],
            [2, 6, 7],
            [3, 4, 8],
            [1, 6, 8],
            [2, 4, 9],
            [3, 5, 7],
        ],
    }
}

/// Purity residuals specialized to the canonical Hesse SIC:
/// `Σp² − 1/6` and `Σp³ − 3·Σ_lines p(i)p(j)p(k)`.
///
/// The factor 3 on the unordered line sum is ½ of the 6 ordered
/// permutations each line contributes.
pub fn hesse_pure_residual(p: &ProbVector) -> (f64, f64) {
    let quad = p.sum_squares() - 1.0 / 6.0;
    let cubic = p.sum_cubes() - 3.0 * affine_lines().cubic_sum(p.as_array());
    (quad, cubic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{approx_eq, random_pure_state};
    use crate::sic::{build_sic, FamilySpec, Sign};
    use crate::tol::TAU_PURE;

    fn hesse() -> SicEnsemble {
        build_sic(&FamilySpec::CanonicalHesse).unwrap()
    }

    #[test]
    fn prob_vector_validation() {
        assert!(ProbVector::new([1.0 / 9.0; 9]).is_ok());
        let mut p = [0.0; 9];
        p[0] = 1.0;
        assert!(ProbVector::new(p).is_ok());
        p[0] = 0.5;
        assert!(matches!(
            ProbVector::new(p),
            Err(Error::NotNormalized { .. })
        ));
        let mut p = [1.0 / 9.0; 9];
        p[1] += 0.02;
        p[2] -= 0.02;
        assert!(ProbVector::new(p).is_ok());
        p = [1.0 / 8.0; 9];
        p[8] = -0.125;
        assert!(matches!(
            ProbVector::new(p),
            Err(Error::NegativeProbability { index: 9, .. })
        ));
    }

    #[test]
    fn maximally_mixed_maps_to_uniform() {
        let sic = hesse();
        let third = Complex::new(1.0 / 3.0, 0.0);
        let p = probs_from_state(&sic, &CMat3::IDENTITY.scale(third)).unwrap();
        assert!(p.max_abs_diff(&ProbVector::uniform()) < TAU_NUM);
    }

    #[test]
    fn sic_element_probabilities() {
        let sic = hesse();
        let p = probs_from_state(&sic, sic.projector(1)).unwrap();
        assert!(approx_eq(p.get(1), 1.0 / 3.0, TAU_NUM));
        for i in 2..=9 {
            assert!(approx_eq(p.get(i), 1.0 / 12.0, TAU_NUM));
        }
        assert!(approx_eq(p.sum_squares(), 1.0 / 6.0, TAU_NUM));
    }

    #[test]
    fn rejects_bad_states() {
        let sic = hesse();
        let mut skew = CMat3::IDENTITY;
        skew.m[0][1] = Complex::new(0.3, 0.1);
        skew = skew.scale(Complex::new(1.0 / 3.0, 0.0));
        assert!(matches!(
            probs_from_state(&sic, &skew),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(
            probs_from_state(&sic, &CMat3::IDENTITY),
            Err(Error::NotUnitTrace { .. })
        ));
    }

    #[test]
    fn round_trip_state_probs_state() {
        let sic = hesse();
        for seed in 0..100 {
            let rho = crate::linalg::random_density_matrix(seed);
            let p = probs_from_state(&sic, &rho).unwrap();
            let back = state_from_probs(&sic, &p);
            assert!(rho.max_abs_diff(&back) < TAU_NUM);
        }
    }

    #[test]
    fn round_trip_probs_state_probs() {
        let sic = build_sic(&FamilySpec::generic(2, Sign::Plus, 0.11).unwrap()).unwrap();
        let p = ProbVector::new([0.2, 0.1, 0.05, 0.15, 0.1, 0.1, 0.1, 0.1, 0.1]).unwrap();
        let rho = state_from_probs(&sic, &p);
        let back = probs_from_state(&sic, &rho).unwrap();
        assert!(p.max_abs_diff(&back) < TAU_NUM);
    }

    #[test]
    fn simplex_vertex_is_not_a_state() {
        let sic = hesse();
        let mut arr = [0.0; 9];
        arr[0] = 1.0;
        let p = ProbVector::new(arr).unwrap();
        let rho = state_from_probs(&sic, &p);
        // ρ = 4Π₁ − I has spectrum (3, −1, −1).
        let eigs = crate::linalg::eigenvalues_herm3(&rho).unwrap();
        assert!(approx_eq(eigs[0], 3.0, TAU_NUM));
        assert!(approx_eq(eigs[1], -1.0, TAU_NUM));
        assert!(approx_eq(eigs[2], -1.0, TAU_NUM));
    }

    #[test]
    fn hs_inner_frozen_values() {
        let u = ProbVector::uniform();
        assert!(approx_eq(hs_inner_from_probs(&u, &u), 1.0 / 3.0, TAU_NUM));

        let sic = hesse();
        let pure = probs_from_state(&sic, &random_pure_state(5).projector()).unwrap();
        assert!(approx_eq(hs_inner_from_probs(&pure, &pure), 1.0, TAU_PURE));

        // Orthogonal pure states: Tr(ρ₁ρ₂) = 0 so p₁·p₂ = 1/12.
        let p0 = probs_from_state(&sic, &basis_vector(0).projector()).unwrap();
        let p1 = probs_from_state(&sic, &basis_vector(1).projector()).unwrap();
        assert!(approx_eq(hs_inner_from_probs(&p0, &p1), 0.0, TAU_NUM));
        assert!(approx_eq(p0.dot(&p1), 1.0 / 12.0, TAU_NUM));
    }

    fn basis_vector(i: usize) -> crate::linalg::CVec3 {
        let mut v = [Complex::new(0.0, 0.0); 3];
        v[i] = Complex::new(1.0, 0.0);
        crate::linalg::CVec3::new(v)
    }

    #[test]
    fn purity_residuals_vanish_for_pure_states() {
        let sic = hesse();
        let inv = InvariantTensors::measure(&sic);
        for seed in 0..100 {
            let p = probs_from_state(&sic, &random_pure_state(seed).projector()).unwrap();
            let (quad, cubic) = purity_residuals(&p, &inv);
            assert!(quad.abs() < 1e-9, "quad {quad:.3e}");
            assert!(cubic.abs() < 1e-9, "cubic {cubic:.3e}");
        }
    }

    #[test]
    fn purity_residuals_at_uniform() {
        let sic = hesse();
        let inv = InvariantTensors::measure(&sic);
        let (quad, cubic) = purity_residuals(&ProbVector::uniform(), &inv);
        assert!(approx_eq(quad, -1.0 / 18.0, TAU_NUM));
        // Σ S̃ = 27 over all triples, so the cubic residual is
        // 27/729 − 1/12 = −5/108.
        assert!(approx_eq(cubic, -5.0 / 108.0, TAU_NUM));
        assert!(cubic < 0.0);
    }

    #[test]
    fn purity_residuals_for_sic_element() {
        let sic = hesse();
        let inv = InvariantTensors::measure(&sic);
        let p = probs_from_state(&sic, sic.projector(1)).unwrap();
        let (quad, cubic) = purity_residuals(&p, &inv);
        assert!(quad.abs() < TAU_PURE);
        assert!(cubic.abs() < TAU_PURE);
    }

    #[test]
    fn affine_plane_incidence_axioms() {
        let lines = affine_lines();
        assert_eq!(lines.lines().len(), 12);
        for point in 1..=9 {
            assert_eq!(lines.lines_through(point), 4, "point {point}");
        }
        for a in 1..=9 {
            for b in a + 1..=9 {
                assert_eq!(lines.lines_through_pair(a, b), 1, "pair ({a},{b})");
            }
        }
    }

    #[test]
    fn lines_match_plus_generator_rows() {
        use crate::invariants::index_generator;
        use crate::sic::GenericFamily;
        let lines = affine_lines();
        for eta in 0..4 {
            let g = index_generator(GenericFamily::new(eta, Sign::Plus).unwrap());
            for row in g.rows() {
                let mut sorted = row;
                sorted.sort_unstable();
                let found = lines.lines().iter().any(|&line| {
                    let mut l = line;
                    l.sort_unstable();
                    l == sorted
                });
                assert!(found, "row {row:?} of generator {eta}+ missing from line set");
            }
        }
    }

    #[test]
    fn hesse_pure_residual_frozen_values() {
        let sic = hesse();

        // p of Π₁: Σp³ = 1/24 and 3Σ_lines = 1/24.
        let p = probs_from_state(&sic, sic.projector(1)).unwrap();
        assert!(approx_eq(p.sum_cubes(), 1.0 / 24.0, TAU_NUM));
        assert!(approx_eq(
            3.0 * affine_lines().cubic_sum(p.as_array()),
            1.0 / 24.0,
            TAU_NUM
        ));
        let (quad, cubic) = hesse_pure_residual(&p);
        assert!(quad.abs() < TAU_PURE);
        assert!(cubic.abs() < TAU_PURE);

        // Uniform p: cubic residual 9/729 − 36/729 = −1/27.
        let (_, cubic) = hesse_pure_residual(&ProbVector::uniform());
        assert!(approx_eq(cubic, -1.0 / 27.0, TAU_NUM));
    }

    #[test]
    fn hesse_residual_specializes_generic_form() {
        // With the Hesse values x₀ = −1/4, y₀ = z₀ = 0 the nonzero distinct
        // structure coefficients sit exactly on the 12 affine lines, and the
        // generic cubic residual collapses to
        // C_gen = (C_hesse + quad)/2 for every normalized vector.
        let sic = hesse();
        let inv = InvariantTensors::measure(&sic);
        for seed in 0..25 {
            let p = probs_from_state(&sic, &crate::linalg::random_density_matrix(seed)).unwrap();
            let (qa, ca) = purity_residuals(&p, &inv);
            let (qb, cb) = hesse_pure_residual(&p);
            assert!(approx_eq(qa, qb, TAU_NUM));
            assert!(approx_eq(ca, 0.5 * (cb + qb), TAU_PURE));
        }
        // On pure states both residual pairs vanish together.
        for seed in 0..25 {
            let p = probs_from_state(&sic, &random_pure_state(seed).projector()).unwrap();
            let (qa, ca) = purity_residuals(&p, &inv);
            let (qb, cb) = hesse_pure_residual(&p);
            assert!(qa.abs() < TAU_PURE && ca.abs() < TAU_PURE);
            assert!(qb.abs() < TAU_PURE && cb.abs() < TAU_PURE);
        }
    }

    #[test]
    fn haar_pure_states_satisfy_hesse_conditions() {
        let sic = hesse();
        for seed in 100..200 {
            let p = probs_from_state(&sic, &random_pure_state(seed).projector()).unwrap();
            let (quad, cubic) = hesse_pure_residual(&p);
            assert!(quad.abs() < 1e-9);
            assert!(cubic.abs() < 1e-9);
        }
    }

    #[test]
    fn alternate_cubic_vanishes_for_pure_states() {
        for (eta, sign, t) in [(0, Sign::Plus, 0.04), (2, Sign::Minus, 0.12)] {
            let sic = build_sic(&FamilySpec::generic(eta, sign, t).unwrap()).unwrap();
            let inv = InvariantTensors::measure(&sic);
            for seed in 0..20 {
                let p = probs_from_state(&sic, &random_pure_state(seed).projector()).unwrap();
                assert!(alternate_cubic_residual(&p, &inv).abs() < TAU_PURE);
            }
        }
    }

    #[test]
    fn triple_contraction_is_5_over_32_for_pure_states() {
        let sic = hesse();
        let inv = InvariantTensors::measure(&sic);
        for seed in 0..20 {
            let p = probs_from_state(&sic, &random_pure_state(seed).projector()).unwrap();
            assert!(approx_eq(triple_contraction(&p, &inv), 5.0 / 32.0, TAU_PURE));
        }
    }
}
