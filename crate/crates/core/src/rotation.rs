//! Orthogonal transformations between the probability vectors of two SICs.
//!
//! Any two SICs are two regular simplices in the space of Hermitian
//! matrices, so `Π'_i = Σ_j R_ij Π_j` for an orthogonal `R` whose rows and
//! columns each sum to 1, and probability vectors transform the same way:
//! `p'(i) = Σ_j R_ij p(j)`. The matrix is read off with the dual basis
//! `Q_j = (4Π_j − I)/3` as `R_ij = Tr(Π'_i Q_j)`.
//!
//! Anchored at the canonical Hesse SIC, the rotation onto a generic family
//! at parameter `t` takes a closed form: conjugate the block-diagonal
//! matrix of three circulant blocks `A(t)` — first row
//! `(a(t), a(t−π/3), a(t+π/3))` with `a(t) = (1 + 2cos 2t)/3` — by a fixed
//! family permutation. These blocks satisfy `R(t₁)R(t₂) = R(t₁+t₂)` and
//! have unit determinant, so every such matrix is a proper rotation.

use std::f64::consts::FRAC_PI_3;

use crate::error::Result;
use crate::invariants::{dual_basis_element, index_generator};
use crate::linalg::{CMat3, Complex, RMat9};
use crate::representation::ProbVector;
use crate::sic::{build_sic, FamilySpec, GenericFamily, SicEnsemble, Sign};

/// The dual basis `Q_i` of a SIC: `Tr(Q_iΠ_j) = δ_ij`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualBasis {
    q: [CMat3; 9],
}

impl DualBasis {
    /// Dual element for a 1-based outcome label.
    pub fn element(&self, i: usize) -> &CMat3 {
        assert!((1..=9).contains(&i), "outcome label {i} outside 1..=9");
        &self.q[i - 1]
    }

    pub fn elements(&self) -> &[CMat3; 9] {
        &self.q
    }
}

/// Builds the dual basis `(4Π_i − I)/3` of an ensemble.
pub fn dual_basis(sic: &SicEnsemble) -> DualBasis {
    let mut q = [CMat3::ZERO; 9];
    for (slot, pi) in q.iter_mut().zip(sic.projectors().iter()) {
        *slot = dual_basis_element(pi);
    }
    DualBasis { q }
}

/// A 9×9 orthogonal matrix taking one SIC's probability vectors onto
/// another's.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix9 {
    entries: RMat9,
    from_spec: FamilySpec,
    to_spec: FamilySpec,
}

impl RotationMatrix9 {
    pub fn entries(&self) -> &RMat9 {
        &self.entries
    }

    pub fn from_spec(&self) -> &FamilySpec {
        &self.from_spec
    }

    pub fn to_spec(&self) -> &FamilySpec {
        &self.to_spec
    }

    pub fn max_abs_diff(&self, other: &RotationMatrix9) -> f64 {
        self.entries.max_abs_diff(&other.entries)
    }
}

/// The orthogonal matrix with `Π^to_i = Σ_j R_ij Π^from_j`, computed as
/// `R_ij = Tr(Π^to_i Q^from_j)`.
pub fn rotation_between(from: &SicEnsemble, to: &SicEnsemble) -> RotationMatrix9 {
    let dual = dual_basis(from);
    let mut entries = RMat9::ZERO;
    for i in 0..9 {
        for j in 0..9 {
            entries.m[i][j] = (to.projectors()[i] * dual.q[j]).trace().re;
        }
    }
    RotationMatrix9 {
        entries,
        from_spec: *from.spec(),
        to_spec: *to.spec(),
    }
}

/// A permutation of the nine outcome labels attached to a generic family.
///
/// The image list equals the row-major flattening of the family's index
/// generator grid; all eight permutations preserve the affine lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyPermutation {
    images: [usize; 9],
}

impl FamilyPermutation {
    /// Image `p(i)` of a 1-based label.
    pub fn image(&self, i: usize) -> usize {
        assert!((1..=9).contains(&i), "outcome label {i} outside 1..=9");
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize; 9] {
        &self.images
    }

    /// The permutation matrix `P_ij = δ_{j, p(i)}`.
    pub fn matrix(&self) -> RMat9 {
        let mut m = RMat9::ZERO;
        for (i, &image) in self.images.iter().enumerate() {
            m.m[i][image - 1] = 1.0;
        }
        m
    }
}

/// The printed permutation of a generic family (two-line notation images).
pub fn family_permutation(family: GenericFamily) -> FamilyPermutation {
    let images = match (family.eta(), family.sign()) {
        (0, Sign::Plus) => [1, 2, 3, 4, 5, 6, 7, 8, 9],
        (0, Sign::Minus) => [1, 3, 2, 4, 6, 5, 7, 9, 8],
        (1, Sign::Plus) => [1, 5, 9, 2, 6, 7, 3, 4, 8],
        (1, Sign::Minus) => [1, 9, 5, 2, 7, 6, 3, 8, 4],
        (2, Sign::Plus) => [1, 6, 8, 2, 4, 9, 3, 5, 7],
        (2, Sign::Minus) => [1, 8, 6, 2, 9, 4, 3, 7, 5],
        (3, Sign::Plus) => [1, 4, 7, 2, 5, 8, 3, 6, 9],
        (3, Sign::Minus) => [1, 7, 4, 2, 8, 5, 3, 9, 6],
        _ => unreachable!("GenericFamily enforces eta <= 3"),
    };
    FamilyPermutation { images }
}

/// The circulant generator `a(t) = (1 + 2cos 2t)/3`.
pub fn a_func(t: f64) -> f64 {
    (1.0 + 2.0 * (2.0 * t).cos()) / 3.0
}

/// The 3×3 circulant block with first row `(a(t), a(t−π/3), a(t+π/3))`.
pub fn block_a(t: f64) -> [[f64; 3]; 3] {
    let a0 = a_func(t);
    let am = a_func(t - FRAC_PI_3);
    let ap = a_func(t + FRAC_PI_3);
    [[a0, am, ap], [ap, a0, am], [am, ap, a0]]
}

/// Eigenvalues of the circulant block via the cube-roots-of-unity sum
/// `λ_ℓ = a(t) + ω^ℓ a(t−π/3) + ω^{−ℓ} a(t+π/3)`, for ℓ = −1, 0, 1; they
/// equal `e^{2itℓ}` exactly.
pub fn block_a_eigenvalues(t: f64) -> [Complex; 3] {
    let omega = crate::sic::omega();
    let a0 = Complex::new(a_func(t), 0.0);
    let am = Complex::new(a_func(t - FRAC_PI_3), 0.0);
    let ap = Complex::new(a_func(t + FRAC_PI_3), 0.0);
    let mut out = [Complex::new(0.0, 0.0); 3];
    for (slot, ell) in out.iter_mut().zip([-1i32, 0, 1]) {
        let w = match ell {
            -1 => omega.conj(),
            0 => Complex::new(1.0, 0.0),
            _ => omega,
        };
        *slot = a0 + w * am + w.conj() * ap;
    }
    out
}

/// The block-diagonal 9×9 matrix with three copies of `A(t)`; the blocks
/// follow the `i = 3m + n + 1` labeling, grouping outcomes by `m`.
pub fn block_r(t: f64) -> RMat9 {
    let a = block_a(t);
    let mut m = RMat9::ZERO;
    for block in 0..3 {
        for r in 0..3 {
            for c in 0..3 {
                m.m[3 * block + r][3 * block + c] = a[r][c];
            }
        }
    }
    m
}

/// Closed-form rotation from the canonical Hesse SIC onto a generic family
/// at parameter `t`: the family permutation conjugating the circulant
/// blocks, `P⁻¹ R(t) P` with `P⁻¹ = Pᵀ`.
pub fn closed_form_rotation(family: GenericFamily, t: f64) -> RotationMatrix9 {
    let p = family_permutation(family).matrix();
    let entries = p.transpose() * block_r(t) * p;
    RotationMatrix9 {
        entries,
        from_spec: FamilySpec::CanonicalHesse,
        to_spec: FamilySpec::Generic { family, t },
    }
}

/// Rotation between two arbitrary built-in specs, composed through the
/// canonical Hesse anchor: `R(A→C) = R(Hesse→C) · R(Hesse→A)ᵀ`.
pub fn rotation_via_hesse(from: &FamilySpec, to: &FamilySpec) -> Result<RotationMatrix9> {
    let hesse = build_sic(&FamilySpec::CanonicalHesse)?;
    let to_a = rotation_between(&hesse, &build_sic(from)?);
    let to_c = rotation_between(&hesse, &build_sic(to)?);
    Ok(RotationMatrix9 {
        entries: to_c.entries * to_a.entries.transpose(),
        from_spec: *from,
        to_spec: *to,
    })
}

/// Applies `p'(i) = Σ_j R_ij p(j)`. Row and column sums of 1 keep the
/// output normalized; entries can only graze zero within tolerance.
pub fn apply_rotation(r: &RotationMatrix9, p: &ProbVector) -> Result<ProbVector> {
    ProbVector::new(r.entries.mul_vec(p.as_array()))
}

/// Cross-table consistency: the permutation images equal the flattened
/// index generator of the same family.
pub fn permutation_matches_generator(family: GenericFamily) -> bool {
    family_permutation(family).images() == &index_generator(family).flattened()
}
