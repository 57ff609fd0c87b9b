//! The boundary of qutrit state space in the canonical Hesse representation.
//!
//! A Hermitian unit-trace matrix is a density operator exactly when
//! `Tr ρ² ≤ 1` and `3Tr ρ² − 2Tr ρ³ ≤ 1`; equality in the second condition
//! marks the boundary and `Tr ρ² = 1` the pure states. Writing probability
//! vectors in polar form `p(i) = 1/9 + r·n(i)` about the uniform center,
//! both moments become polynomials in `r` and the boundary condition turns
//! into the cubic
//!
//! ```text
//! 4r³F(n) − r² + 1/54 = 0,   F(n) = Σ n(i)³ − ½ Σ_{(ijk)∈Q} n(i)n(j)n(k),
//! ```
//!
//! with `Q` the ordered affine-plane line triples. The boundary radius is
//! the smallest positive root, available in closed form through a cube root
//! on the unit circle, and `F` ranges over `[−1/√2, 1/√2]` — the upper end
//! giving pure states at `r = 1/(3√2)`, the lower end the flattest boundary
//! points at `r = 1/(6√2)`.
//!
//! The simplex face `p(9) = 0` is analyzed in the same way about its center
//! `c = (1/8, …, 1/8, 0)` with `p(i) = 1/8 + s·m(i)`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_3, PI};
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::Complex;
use crate::representation::{affine_lines, ProbVector};
use crate::tol::{F_ZERO_THRESHOLD, TAU_CLASS, TAU_F, TAU_NUM, TAU_PURE};

/// A unit direction in the probability hyperplane: `Σn = 0`, `Σn² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionVector {
    n: [f64; 9],
}

impl DirectionVector {
    pub fn new(n: [f64; 9]) -> Result<Self> {
        if n.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let sum: f64 = n.iter().sum();
        let norm2: f64 = n.iter().map(|v| v * v).sum();
        if sum.abs() > TAU_NUM || (norm2 - 1.0).abs() > TAU_NUM {
            return Err(Error::BadDirection { sum, norm2 });
        }
        Ok(Self { n })
    }

    pub fn as_array(&self) -> &[f64; 9] {
        &self.n
    }

    pub fn negated(&self) -> DirectionVector {
        let mut n = self.n;
        for v in n.iter_mut() {
            *v = -*v;
        }
        DirectionVector { n }
    }
}

/// Lemma-based classification of a spectrum or moment triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateClass {
    /// Not a density operator.
    Invalid,
    /// Full-rank density operator.
    Interior,
    /// Density operator with a vanishing eigenvalue.
    Boundary,
    /// Rank-1 density operator.
    Pure,
}

impl fmt::Display for StateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StateClass::Invalid => "invalid",
            StateClass::Interior => "interior",
            StateClass::Boundary => "boundary",
            StateClass::Pure => "pure",
        };
        f.write_str(s)
    }
}

/// One boundary state in polar form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySolution {
    pub n: DirectionVector,
    pub f: f64,
    pub r: f64,
}

/// `(Tr ρ², Tr ρ³)` evaluated from a Hesse-representation probability
/// vector alone: `Tr ρ² = 12Σp² − 1` and
/// `Tr ρ³ = 1 + 24Σp³ − 12 Σ_{(ijk)∈Q} p(i)p(j)p(k)` with ordered line
/// triples (six per line).
pub fn trace_moments_hesse(p: &ProbVector) -> (f64, f64) {
    let t2 = 12.0 * p.sum_squares() - 1.0;
    let line_sum = affine_lines().cubic_sum(p.as_array());
    let t3 = 1.0 + 24.0 * p.sum_cubes() - 72.0 * line_sum;
    (t2, t3)
}

/// Classifies a moment triple `(Tr ρ, Tr ρ², Tr ρ³)`, returning the most
/// specific label.
pub fn classify_state(t1: f64, t2: f64, t3: f64) -> StateClass {
    let lemma = 3.0 * t2 - 2.0 * t3;
    if (t1 - 1.0).abs() > TAU_CLASS || t2 > 1.0 + TAU_CLASS || lemma > 1.0 + TAU_CLASS {
        return StateClass::Invalid;
    }
    if (lemma - 1.0).abs() <= TAU_CLASS {
        if (t2 - 1.0).abs() <= TAU_CLASS {
            StateClass::Pure
        } else {
            StateClass::Boundary
        }
    } else {
        StateClass::Interior
    }
}

/// Classifies a descending eigenvalue triple of a unit-trace Hermitian
/// matrix by eigenvalue signs; the independent route to [`classify_state`].
pub fn classify_by_spectrum(eigs: [f64; 3]) -> StateClass {
    if eigs[2] < -TAU_CLASS {
        return StateClass::Invalid;
    }
    if eigs[1].abs() <= TAU_CLASS {
        return StateClass::Pure;
    }
    if eigs[2].abs() <= TAU_CLASS {
        return StateClass::Boundary;
    }
    StateClass::Interior
}

/// Splits `p = 1/9 + r·n` into radius and unit direction.
pub fn polar_decompose(p: &ProbVector) -> Result<(f64, DirectionVector)> {
    let mut n = [0.0f64; 9];
    for (slot, v) in n.iter_mut().zip(p.as_array().iter()) {
        *slot = v - 1.0 / 9.0;
    }
    let r = n.iter().map(|v| v * v).sum::<f64>().sqrt();
    if r < TAU_NUM {
        return Err(Error::DegenerateDirection);
    }
    for v in n.iter_mut() {
        *v /= r;
    }
    Ok((r, DirectionVector { n }))
}

/// The direction functional `F(n) = Σn³ − ½ Σ_{(ijk)∈Q} n(i)n(j)n(k)`
/// (ordered line triples, so 3× the unordered line sum).
pub fn direction_functional(n: &DirectionVector) -> f64 {
    let arr = n.as_array();
    let cubes: f64 = arr.iter().map(|v| v * v * v).sum();
    cubes - 3.0 * affine_lines().cubic_sum(arr)
}

/// Signed residual of the boundary cubic, `4r³F − r² + 1/54`.
pub fn cubic_residual(r: f64, f: f64) -> f64 {
    4.0 * r * r * r * f - r * r + 1.0 / 54.0
}

/// `g³ = 1 − 4F² + 2F√(4F² − 2)`; for `|F| ≤ 1/√2` the radicand is
/// non-positive, so the value sits on the unit circle.
pub fn g_cubed(f: f64) -> Complex {
    let radicand = (2.0 - 4.0 * f * f).max(0.0);
    Complex::new(1.0 - 4.0 * f * f, 2.0 * f * radicand.sqrt())
}

/// Closed-form boundary radius: the smallest positive root of the boundary
/// cubic at functional value `f`, clamped into `|f| ≤ 1/√2`.
///
/// The cube root of `g³` is chosen with the smallest strictly positive
/// argument; with `σ = sgn F` the root reduces to
/// `r = [1 + 2cos(arg g − σ·2π/3)] / (12F)`.
pub fn boundary_radius(f: f64) -> Result<f64> {
    if !f.is_finite() {
        return Err(Error::NonFinite);
    }
    if f.abs() > FRAC_1_SQRT_2 + TAU_F {
        return Err(Error::FunctionalOutOfRange { f });
    }
    let f = f.clamp(-FRAC_1_SQRT_2, FRAC_1_SQRT_2);
    if f.abs() < F_ZERO_THRESHOLD {
        return Ok(1.0 / (3.0 * 6.0_f64.sqrt()));
    }
    let g3 = g_cubed(f);
    let mut theta = g3.arg();
    if theta < 0.0 {
        theta += 2.0 * PI;
    }
    let arg_g = (0..3)
        .map(|k| (theta + 2.0 * PI * k as f64) / 3.0)
        .filter(|a| *a > 0.0)
        .fold(f64::INFINITY, f64::min);
    let sigma = if f > 0.0 { 1.0 } else { -1.0 };
    Ok((1.0 + 2.0 * (arg_g - sigma * 2.0 * FRAC_PI_3).cos()) / (12.0 * f))
}

/// Smallest positive root of the boundary cubic by bracketing and
/// bisection — an independent numeric route to [`boundary_radius`].
///
/// For `F > 0` the cubic decreases monotonically on `(0, 1/(6F)]` from
/// `1/54` to its local minimum, which is ≤ 0 whenever `|F| ≤ 1/√2`; for
/// `F ≤ 0` it decreases on all of `(0, ∞)`. Either way the first sign
/// change is bracketed without scanning.
pub fn smallest_positive_root_bisect(f: f64) -> Option<f64> {
    if f.abs() > FRAC_1_SQRT_2 + TAU_F {
        return None;
    }
    let f = f.clamp(-FRAC_1_SQRT_2, FRAC_1_SQRT_2);
    let mut lo = 0.0f64;
    let mut hi = if f > 0.0 { 1.0 / (6.0 * f) } else { 1.0 };
    if cubic_residual(hi, f) > 0.0 {
        // Only possible by rounding at the double root |F| = 1/√2.
        return Some(hi);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if cubic_residual(mid, f) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// The direction functional written on the eigenvalues `(α, β, 1−α−β)` of
/// any Hermitian matrix along the ray:
/// `F = √3 (2/9 − f₁ + f₂) / (f₁ − 1/3)^{3/2}` with power sums `f₁`, `f₂`.
pub fn functional_from_eigenvalues(alpha: f64, beta: f64) -> Result<f64> {
    let gamma = 1.0 - alpha - beta;
    let f1 = alpha * alpha + beta * beta + gamma * gamma;
    let f2 = alpha * alpha * alpha + beta * beta * beta + gamma * gamma * gamma;
    let spread = f1 - 1.0 / 3.0;
    if spread < 1e-12 {
        return Err(Error::MaximallyMixedSpectrum);
    }
    Ok(3.0_f64.sqrt() * (2.0 / 9.0 - f1 + f2) / spread.powf(1.5))
}

/// The boundary state in direction `n`: radius from the closed form, then
/// `p = 1/9 + r·n`.
pub fn boundary_state(n: &DirectionVector) -> Result<(BoundarySolution, ProbVector)> {
    let f = direction_functional(n);
    let r = boundary_radius(f)?;
    let mut arr = [0.0f64; 9];
    for (slot, v) in arr.iter_mut().zip(n.as_array().iter()) {
        *slot = 1.0 / 9.0 + r * v;
    }
    let p = ProbVector::new(arr)?;
    Ok((BoundarySolution { n: *n, f, r }, p))
}

/// A direction within the face `p(9) = 0`: `m(9) = 0`, `Σm = 0`, `Σm² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceDirection {
    m: [f64; 9],
}

impl FaceDirection {
    pub fn new(m: [f64; 9]) -> Result<Self> {
        if m.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let sum: f64 = m[..8].iter().sum();
        let norm2: f64 = m.iter().map(|v| v * v).sum();
        if m[8].abs() > TAU_NUM || sum.abs() > TAU_NUM || (norm2 - 1.0).abs() > TAU_NUM {
            return Err(Error::BadFaceDirection {
                last: m[8],
                sum,
                norm2,
            });
        }
        Ok(Self { m })
    }

    pub fn as_array(&self) -> &[f64; 9] {
        &self.m
    }

    /// The same data viewed as a direction vector in the full hyperplane.
    pub fn as_direction(&self) -> DirectionVector {
        DirectionVector { n: self.m }
    }
}

/// The quadratic form `Φ(m) = [m(1)+m(5)]² + [m(2)+m(4)]² + [m(3)+m(6)]²
/// + [m(7)+m(8)]²` controlling the face conditions.
pub fn face_phi(m: &FaceDirection) -> f64 {
    let v = m.as_array();
    (v[0] + v[4]).powi(2) + (v[1] + v[3]).powi(2) + (v[2] + v[5]).powi(2) + (v[6] + v[7]).powi(2)
}

/// Face-condition evaluation at one point `p = c + s·m` of the face plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceReport {
    /// Whether the point is a state on the face: `s = 0`, or `s² ≤ 1/24`
    /// with the relation `F(m) = 3/(16s)·[2 − Φ(m)]` holding.
    pub on_face_state: bool,
    /// Residual of the state relation; `None` at the face center `s = 0`.
    pub relation_residual: Option<f64>,
    /// Residual of the pure-state relation `F(m) = (3√6/8)·[2 − Φ(m)]`.
    pub pure_residual: f64,
}

/// Evaluates both face relations at displacement `s` along `m`.
pub fn face_conditions(s: f64, m: &FaceDirection) -> FaceReport {
    let phi = face_phi(m);
    let f = direction_functional(&m.as_direction());
    let pure_residual = f - 0.375 * 6.0_f64.sqrt() * (2.0 - phi);
    if s.abs() <= TAU_NUM {
        return FaceReport {
            on_face_state: true,
            relation_residual: None,
            pure_residual,
        };
    }
    let relation = f - 3.0 / (16.0 * s) * (2.0 - phi);
    let on_face_state = s * s <= 1.0 / 24.0 + TAU_NUM && relation.abs() <= TAU_PURE;
    FaceReport {
        on_face_state,
        relation_residual: Some(relation),
        pure_residual,
    }
}

/// Splits a face point `p = c + s·m` (requires `p(9) = 0`) into displacement
/// and face direction.
pub fn face_decompose(p: &ProbVector) -> Result<(f64, FaceDirection)> {
    let arr = p.as_array();
    if arr[8].abs() > TAU_NUM {
        return Err(Error::OffFace { p9: arr[8] });
    }
    let mut m = [0.0f64; 9];
    for i in 0..8 {
        m[i] = arr[i] - 0.125;
    }
    let s = m.iter().map(|v| v * v).sum::<f64>().sqrt();
    if s < TAU_NUM {
        return Err(Error::DegenerateDirection);
    }
    for v in m.iter_mut().take(8) {
        *v /= s;
    }
    Ok((s, FaceDirection { m }))
}

/// The face point `p = c + s·m` with `p(9) = 0`. The result need not lie in
/// the simplex for large `|s|`; entries are only bounded, not sign-checked.
pub fn face_point(s: f64, m: &FaceDirection) -> Result<ProbVector> {
    let mut arr = [0.0f64; 9];
    for i in 0..8 {
        arr[i] = 0.125 + s * m.as_array()[i];
    }
    ProbVector::new_signed(arr)
}

/// Records `(α, F)` for boundary spectra `(α, 1−α, 0)` on a grid of
/// `samples` intervals over `α ∈ [0, 1]` (so `samples + 1` rows).
pub fn fig2_records(samples: usize) -> Vec<(f64, f64)> {
    assert!(samples >= 2, "need at least 2 grid intervals");
    (0..=samples)
        .map(|k| {
            let alpha = k as f64 / samples as f64;
            let f = functional_from_eigenvalues(alpha, 1.0 - alpha)
                .expect("one eigenvalue is zero, spectrum is never maximally mixed");
            (alpha, f)
        })
        .collect()
}

/// Records `(F, r)` on a grid of `samples` intervals over
/// `F ∈ [−1/√2, 1/√2]` (so `samples + 1` rows; even `samples` puts `F = 0`
/// on the grid exactly).
pub fn fig3_records(samples: usize) -> Vec<(f64, f64)> {
    assert!(samples >= 2, "need at least 2 grid intervals");
    (0..=samples)
        .map(|k| {
            let f = (2.0 * k as f64 / samples as f64 - 1.0) * FRAC_1_SQRT_2;
            let r = boundary_radius(f).expect("grid stays inside the admissible range");
            (f, r)
        })
        .collect()
}

/// One sampled boundary state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySample {
    pub n: [f64; 9],
    pub f: f64,
    pub r: f64,
    pub class: StateClass,
}

/// Gaussian direction on the constraint sphere `Σn = 0`, `Σn² = 1`.
pub fn random_direction(rng: &mut impl Rng) -> DirectionVector {
    loop {
        let mut n = [0.0f64; 9];
        for v in n.iter_mut() {
            *v = rng.sample(StandardNormal);
        }
        let mean = n.iter().sum::<f64>() / 9.0;
        for v in n.iter_mut() {
            *v -= mean;
        }
        let norm = n.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 1e-9 {
            for v in n.iter_mut() {
                *v /= norm;
            }
            return DirectionVector { n };
        }
    }
}

/// Draws `count` random boundary states, rejecting directions whose
/// functional leaves the admissible range (none are expected; the count of
/// rejections is returned rather than assumed zero).
pub fn sample_boundary_states(count: usize, seed: u64) -> (Vec<BoundarySample>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    let mut rejected = 0usize;
    while samples.len() < count {
        let n = random_direction(&mut rng);
        let f = direction_functional(&n);
        if f.abs() > FRAC_1_SQRT_2 + TAU_F {
            rejected += 1;
            continue;
        }
        let (solution, p) = boundary_state(&n).expect("functional already range-checked");
        let (t2, t3) = trace_moments_hesse(&p);
        samples.push(BoundarySample {
            n: *n.as_array(),
            f: solution.f,
            r: solution.r,
            class: classify_state(1.0, t2, t3),
        });
    }
    (samples, rejected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{approx_eq, eigenvalues_herm3, random_density_matrix, trace_product, CMat3};
    use crate::representation::probs_from_state;
    use crate::sic::{build_sic, FamilySpec};

    fn hesse() -> crate::sic::SicEnsemble {
        build_sic(&FamilySpec::CanonicalHesse).unwrap()
    }

    fn diag_state(a: f64, b: f64, c: f64) -> CMat3 {
        CMat3::diag(
            Complex::new(a, 0.0),
            Complex::new(b, 0.0),
            Complex::new(c, 0.0),
        )
    }

    #[test]
    fn trace_moments_frozen_values() {
        let sic = hesse();
        let (t2, t3) = trace_moments_hesse(&ProbVector::uniform());
        assert!(approx_eq(t2, 1.0 / 3.0, TAU_NUM));
        assert!(approx_eq(t3, 1.0 / 9.0, TAU_NUM));

        let p = probs_from_state(&sic, sic.projector(1)).unwrap();
        let (t2, t3) = trace_moments_hesse(&p);
        assert!(approx_eq(t2, 1.0, TAU_NUM));
        assert!(approx_eq(t3, 1.0, TAU_NUM));

        let p = probs_from_state(&sic, &diag_state(0.5, 0.5, 0.0)).unwrap();
        let (t2, t3) = trace_moments_hesse(&p);
        assert!(approx_eq(t2, 0.5, TAU_NUM));
        assert!(approx_eq(t3, 0.25, TAU_NUM));
    }

    #[test]
    fn moments_agree_with_direct_traces() {
        let sic = hesse();
        for seed in 0..40 {
            let rho = random_density_matrix(seed);
            let p = probs_from_state(&sic, &rho).unwrap();
            let (t2, t3) = trace_moments_hesse(&p);
            let direct2 = trace_product(&[rho, rho]).unwrap().re;
            let direct3 = trace_product(&[rho, rho, rho]).unwrap().re;
            assert!(approx_eq(t2, direct2, TAU_NUM));
            assert!(approx_eq(t3, direct3, TAU_NUM));
        }
    }

    #[test]
    fn classify_canonical_exemplars() {
        assert_eq!(classify_state(1.0, 1.0, 1.0), StateClass::Pure);
        assert_eq!(classify_state(1.0, 0.5, 0.25), StateClass::Boundary);
        assert_eq!(
            classify_state(1.0, 1.0 / 3.0, 1.0 / 9.0),
            StateClass::Interior
        );
        // Violations of each lemma inequality.
        assert_eq!(classify_state(1.1, 0.5, 0.25), StateClass::Invalid);
        assert_eq!(classify_state(1.0, 1.5, 1.2), StateClass::Invalid);
        assert_eq!(classify_state(1.0, 0.9, 0.2), StateClass::Invalid);
    }

    #[test]
    fn spectrum_classification() {
        assert_eq!(classify_by_spectrum([1.0, 0.0, 0.0]), StateClass::Pure);
        assert_eq!(classify_by_spectrum([0.5, 0.5, 0.0]), StateClass::Boundary);
        assert_eq!(
            classify_by_spectrum([0.5, 0.3, 0.2]),
            StateClass::Interior
        );
        assert_eq!(classify_by_spectrum([1.2, 0.0, -0.2]), StateClass::Invalid);
    }

    #[test]
    fn polar_decomposition_of_sic_element() {
        let sic = hesse();
        let p = probs_from_state(&sic, sic.projector(1)).unwrap();
        let (r, n) = polar_decompose(&p).unwrap();
        assert!(approx_eq(r, 0.2357022603955158, 1e-12));
        // Reconstruction is exact.
        for (i, v) in p.as_array().iter().enumerate() {
            assert!(approx_eq(1.0 / 9.0 + r * n.as_array()[i], *v, TAU_NUM));
        }
        assert_eq!(
            polar_decompose(&ProbVector::uniform()),
            Err(Error::DegenerateDirection)
        );
    }

    #[test]
    fn functional_of_pure_direction() {
        let sic = hesse();
        let p = probs_from_state(&sic, sic.projector(1)).unwrap();
        let (_, n) = polar_decompose(&p).unwrap();
        let f = direction_functional(&n);
        assert!(approx_eq(f, FRAC_1_SQRT_2, TAU_PURE));
        assert!(approx_eq(direction_functional(&n.negated()), -f, TAU_NUM));
    }

    #[test]
    fn radius_frozen_endpoints() {
        assert!(approx_eq(
            boundary_radius(0.0).unwrap(),
            0.1360827634879543,
            1e-12
        ));
        assert!(approx_eq(
            boundary_radius(FRAC_1_SQRT_2).unwrap(),
            0.2357022603955158,
            1e-10
        ));
        assert!(approx_eq(
            boundary_radius(-FRAC_1_SQRT_2).unwrap(),
            0.1178511301977579,
            1e-10
        ));
        assert!(matches!(
            boundary_radius(0.72),
            Err(Error::FunctionalOutOfRange { .. })
        ));
    }

    #[test]
    fn radius_satisfies_cubic_across_range() {
        for k in 0..=2000 {
            let f = (2.0 * k as f64 / 2000.0 - 1.0) * FRAC_1_SQRT_2;
            let r = boundary_radius(f).unwrap();
            assert!(cubic_residual(r, f).abs() < 1e-10, "f={f}");
            assert!((0.1178511301977579 - 1e-10..=0.2357022603955159).contains(&r));
        }
    }

    #[test]
    fn g_cubed_stays_on_unit_circle() {
        for k in 0..=1000 {
            let f = (2.0 * k as f64 / 1000.0 - 1.0) * FRAC_1_SQRT_2;
            assert!(approx_eq(g_cubed(f).norm(), 1.0, TAU_NUM));
        }
    }

    #[test]
    fn bisection_agrees_with_closed_form() {
        for k in 0..=2000 {
            let f = (2.0 * k as f64 / 2000.0 - 1.0) * FRAC_1_SQRT_2;
            let closed = boundary_radius(f).unwrap();
            let numeric = smallest_positive_root_bisect(f).unwrap();
            assert!(approx_eq(closed, numeric, 1e-9), "f={f}");
        }
    }

    #[test]
    fn functional_from_spectra_frozen_values() {
        assert!(approx_eq(
            functional_from_eigenvalues(1.0, 0.0).unwrap(),
            FRAC_1_SQRT_2,
            TAU_NUM
        ));
        assert!(approx_eq(
            functional_from_eigenvalues(0.5, 0.5).unwrap(),
            -FRAC_1_SQRT_2,
            TAU_NUM
        ));
        // Two identical eigenvalues below 1/3 sit at the upper bound.
        assert!(approx_eq(
            functional_from_eigenvalues(0.2, 0.2).unwrap(),
            FRAC_1_SQRT_2,
            TAU_NUM
        ));
        assert_eq!(
            functional_from_eigenvalues(1.0 / 3.0, 1.0 / 3.0),
            Err(Error::MaximallyMixedSpectrum)
        );
    }

    #[test]
    fn functional_routes_agree() {
        // Eigenvalue route vs probability route on rank-deficient states.
        let sic = hesse();
        for seed in 0..50 {
            let alpha = 0.05 + 0.9 * (seed as f64 / 50.0);
            let psi1 = crate::linalg::random_pure_state(seed);
            // Orthonormal companion via Gram-Schmidt against a fixed vector.
            let mut aux = crate::linalg::random_pure_state(seed + 1000);
            let overlap = psi1.inner(&aux);
            aux = aux.sub(&psi1.scale(overlap)).normalized();
            let rho = psi1.projector().scale(Complex::new(alpha, 0.0))
                + aux.projector().scale(Complex::new(1.0 - alpha, 0.0));
            let p = probs_from_state(&sic, &rho).unwrap();
            let (_, n) = polar_decompose(&p).unwrap();
            let via_direction = direction_functional(&n);
            let via_eigs = functional_from_eigenvalues(alpha, 1.0 - alpha).unwrap();
            assert!(approx_eq(via_direction, via_eigs, TAU_PURE), "alpha={alpha}");
        }
    }

    #[test]
    fn boundary_state_along_pure_direction() {
        let sic = hesse();
        let p1 = probs_from_state(&sic, sic.projector(1)).unwrap();
        let (_, n) = polar_decompose(&p1).unwrap();

        let (solution, p) = boundary_state(&n).unwrap();
        assert!(approx_eq(solution.r, 0.2357022603955158, 1e-10));
        assert!(p.max_abs_diff(&p1) < 1e-9);
        let (t2, t3) = trace_moments_hesse(&p);
        assert_eq!(classify_state(1.0, t2, t3), StateClass::Pure);

        // The antipodal direction meets the boundary at the flat side.
        let (solution, p) = boundary_state(&n.negated()).unwrap();
        assert!(approx_eq(solution.r, 0.1178511301977579, 1e-10));
        let (t2, t3) = trace_moments_hesse(&p);
        assert_eq!(classify_state(1.0, t2, t3), StateClass::Boundary);
    }

    #[test]
    fn sampled_directions_yield_boundary_states() {
        let (samples, rejected) = sample_boundary_states(50, 11);
        assert_eq!(samples.len(), 50);
        assert_eq!(rejected, 0);
        for s in &samples {
            assert!(matches!(s.class, StateClass::Boundary | StateClass::Pure));
            assert!(cubic_residual(s.r, s.f).abs() < 1e-10);
        }
    }

    #[test]
    fn face_phi_frozen_values() {
        let mut m = [0.0f64; 9];
        m[0] = FRAC_1_SQRT_2;
        m[4] = -FRAC_1_SQRT_2;
        let m = FaceDirection::new(m).unwrap();
        assert!(approx_eq(face_phi(&m), 0.0, TAU_NUM));

        let mut m = [0.0f64; 9];
        m[0] = 0.5;
        m[4] = 0.5;
        m[1] = -0.5;
        m[3] = -0.5;
        let m = FaceDirection::new(m).unwrap();
        assert!(approx_eq(face_phi(&m), 2.0, TAU_NUM));
    }

    #[test]
    fn face_direction_validation() {
        let mut m = [0.0f64; 9];
        m[8] = 1.0;
        assert!(matches!(
            FaceDirection::new(m),
            Err(Error::BadFaceDirection { .. })
        ));
    }

    #[test]
    fn face_center_is_a_boundary_state() {
        let report = face_conditions(
            0.0,
            &FaceDirection::new({
                let mut m = [0.0f64; 9];
                m[0] = FRAC_1_SQRT_2;
                m[1] = -FRAC_1_SQRT_2;
                m
            })
            .unwrap(),
        );
        assert!(report.on_face_state);
        assert!(report.relation_residual.is_none());

        // The center reconstructs to the rank-2 state orthogonal to ψ₉.
        let mut arr = [0.125f64; 9];
        arr[8] = 0.0;
        let p = ProbVector::new(arr).unwrap();
        let (t2, t3) = trace_moments_hesse(&p);
        assert_eq!(classify_state(1.0, t2, t3), StateClass::Boundary);
    }

    #[test]
    fn pure_state_on_face() {
        let sic = hesse();
        // The ninth SIC vector is X²Z²|ψ⟩; project it out of random states.
        let psi9_dir = crate::sic::displacement(2, 2)
            .mul_vec(sic.fiducial())
            .normalized();
        for seed in 0..20 {
            let raw = crate::linalg::random_pure_state(seed);
            let overlap = psi9_dir.inner(&raw);
            let candidate = raw.sub(&psi9_dir.scale(overlap));
            if candidate.norm_sq() < 1e-6 {
                continue;
            }
            let psi = candidate.normalized();
            let p = probs_from_state(&sic, &psi.projector()).unwrap();
            assert!(p.get(9).abs() < TAU_NUM, "p(9) = {}", p.get(9));
            let (s, m) = face_decompose(&p).unwrap();
            assert!(approx_eq(s * s, 1.0 / 24.0, 1e-9), "s² = {}", s * s);
            let report = face_conditions(s, &m);
            assert!(report.pure_residual.abs() < 1e-9);
            assert!(report.on_face_state);
        }
    }

    #[test]
    fn violating_face_relation_is_not_a_state() {
        let mut arr = [0.0f64; 9];
        // A fixed face direction that badly violates the relation at s = 0.1.
        arr[0] = 0.6;
        arr[1] = -0.2;
        arr[2] = 0.3;
        arr[3] = -0.4;
        arr[4] = 0.1;
        arr[5] = -0.35;
        arr[6] = 0.25;
        arr[7] = -0.3;
        let norm = arr.iter().map(|v| v * v).sum::<f64>().sqrt();
        for v in arr.iter_mut() {
            *v /= norm;
        }
        let m = FaceDirection::new(arr).unwrap();
        let report = face_conditions(0.1, &m);
        assert!(!report.on_face_state);

        let sic = hesse();
        let p = face_point(0.1, &m).unwrap();
        let rho = crate::representation::state_from_probs(&sic, &p);
        let eigs = eigenvalues_herm3(&rho).unwrap();
        assert_eq!(classify_by_spectrum(eigs), StateClass::Invalid);
    }

    #[test]
    fn sweep_grids_hit_frozen_rows() {
        let fig2 = fig2_records(1000);
        assert_eq!(fig2.len(), 1001);
        let at_half = fig2[500];
        assert!(approx_eq(at_half.0, 0.5, TAU_NUM));
        assert!(approx_eq(at_half.1, -FRAC_1_SQRT_2, TAU_NUM));
        let last = fig2[1000];
        assert!(approx_eq(last.1, FRAC_1_SQRT_2, TAU_NUM));

        let fig3 = fig3_records(1000);
        assert_eq!(fig3.len(), 1001);
        let center = fig3[500];
        assert_eq!(center.0, 0.0);
        assert!(approx_eq(center.1, 0.1360827634879543, 1e-12));
    }
}
