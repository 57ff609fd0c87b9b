//! Weyl-Heisenberg qutrit SICs.
//!
//! The shift `X` and phase `Z` operators generate the Weyl-Heisenberg group
//! in dimension 3. Acting with `X^m Z^n` on a fiducial vector produces nine
//! unit vectors whose projectors `Π_i` satisfy the SIC overlap law
//! `Tr(Π_iΠ_j) = (3δ_ij + 1)/4`. Projectors are labeled `i = 3m + n + 1`,
//! so `i` runs 1..=9 with `Π_1` the fiducial projector itself.
//!
//! Fiducials come in three kinds: eight one-parameter generic families
//! `(η±)` with `η = 0..3`, four exceptional SICs at the orbit endpoint
//! `t = π/6`, and the canonical Hesse SIC at `t = 0` generated by
//! `(0, 1, −1)/√2`. Distinct `t ∈ [0, π/6]` give inequivalent extended
//! Clifford orbits, except that parameters `t`, `π/9 − t`, `π/9 + t` are
//! related by the non-Clifford unitary `diag(1, u, u²)`, `u = e^{−2πi/9}`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_3, FRAC_PI_6, PI};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{CMat3, CVec3, Complex, C_ONE, C_ZERO};
use crate::tol::TAU_SIC;

/// Sign selecting one of the two family branches `(η+)` / `(η−)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// +1.0 or -1.0.
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// One of the eight generic family labels `(η±)`, `η = 0..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenericFamily {
    eta: u8,
    sign: Sign,
}

impl GenericFamily {
    pub fn new(eta: u8, sign: Sign) -> Result<Self> {
        if eta > 3 {
            return Err(Error::InvalidFamily { eta });
        }
        Ok(Self { eta, sign })
    }

    pub fn eta(self) -> u8 {
        self.eta
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    /// All eight family labels, η-major with `+` before `−`.
    pub const ALL: [GenericFamily; 8] = [
        GenericFamily { eta: 0, sign: Sign::Plus },
        GenericFamily { eta: 0, sign: Sign::Minus },
        GenericFamily { eta: 1, sign: Sign::Plus },
        GenericFamily { eta: 1, sign: Sign::Minus },
        GenericFamily { eta: 2, sign: Sign::Plus },
        GenericFamily { eta: 2, sign: Sign::Minus },
        GenericFamily { eta: 3, sign: Sign::Plus },
        GenericFamily { eta: 3, sign: Sign::Minus },
    ];
}

impl fmt::Display for GenericFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.eta, self.sign.symbol())
    }
}

/// Which SIC to build.
///
/// `Generic` carries the family parameter `t` in radians; any finite real is
/// accepted (the closed forms are entire in `t`), with
/// [`FamilySpec::canonical_range`] recording whether `t ∈ [0, π/6]`, the
/// range in which distinct `t` label distinct extended Clifford orbits.
/// The exceptional index `k` must lie in 0..=3; use [`FamilySpec::exceptional`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilySpec {
    Generic { family: GenericFamily, t: f64 },
    ExceptionalPiOver6(u8),
    CanonicalHesse,
}

impl FamilySpec {
    pub fn generic(eta: u8, sign: Sign, t: f64) -> Result<Self> {
        Ok(FamilySpec::Generic {
            family: GenericFamily::new(eta, sign)?,
            t,
        })
    }

    pub fn exceptional(k: u8) -> Result<Self> {
        if k > 3 {
            return Err(Error::InvalidExceptionalIndex { k });
        }
        Ok(FamilySpec::ExceptionalPiOver6(k))
    }

    /// True when the parameter lies in the canonical range `[0, π/6]`.
    pub fn canonical_range(&self) -> bool {
        match self {
            FamilySpec::Generic { t, .. } => (0.0..=FRAC_PI_6).contains(t),
            _ => true,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Generic { family, t } => write!(f, "gen:{family}@{t}"),
            FamilySpec::ExceptionalPiOver6(k) => write!(f, "pi6:{k}"),
            FamilySpec::CanonicalHesse => write!(f, "hesse"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the selector grammar `hesse`, `pi6:<k>`, `gen:<eta><sign>@<t>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadSelector {
            selector: s.to_string(),
        };
        if s == "hesse" {
            return Ok(FamilySpec::CanonicalHesse);
        }
        if let Some(k) = s.strip_prefix("pi6:") {
            let k: u8 = k.parse().map_err(|_| bad())?;
            return FamilySpec::exceptional(k);
        }
        if let Some(rest) = s.strip_prefix("gen:") {
            let (label, t) = rest.split_once('@').ok_or_else(bad)?;
            let mut chars = label.chars();
            let eta = chars.next().ok_or_else(bad)?.to_digit(10).ok_or_else(bad)? as u8;
            let sign = match chars.next() {
                Some('+') => Sign::Plus,
                Some('-') => Sign::Minus,
                _ => return Err(bad()),
            };
            if chars.next().is_some() {
                return Err(bad());
            }
            let t: f64 = t.parse().map_err(|_| bad())?;
            if !t.is_finite() {
                return Err(bad());
            }
            return FamilySpec::generic(eta, sign, t);
        }
        Err(bad())
    }
}

/// ω = e^{2πi/3}, from exact component constants.
pub fn omega() -> Complex {
    Complex::new(-0.5, 3.0_f64.sqrt() / 2.0)
}

fn omega_pow(k: u8) -> Complex {
    match k % 3 {
        0 => C_ONE,
        1 => omega(),
        _ => omega().conj(),
    }
}

/// The shift operator `X`: cyclic permutation of the computational basis.
pub fn shift_op() -> CMat3 {
    CMat3::new([
        [C_ZERO, C_ZERO, C_ONE],
        [C_ONE, C_ZERO, C_ZERO],
        [C_ZERO, C_ONE, C_ZERO],
    ])
}

/// The phase operator `Z = diag(1, ω, ω²)`.
pub fn phase_op() -> CMat3 {
    CMat3::diag(C_ONE, omega(), omega_pow(2))
}

/// The displacement operator `X^m Z^n` (exponents taken mod 3).
pub fn displacement(m: usize, n: usize) -> CMat3 {
    let pow = |op: CMat3, e: usize| -> CMat3 {
        match e % 3 {
            0 => CMat3::IDENTITY,
            1 => op,
            _ => op * op,
        }
    };
    pow(shift_op(), m) * pow(phase_op(), n)
}

/// Label of the projector generated by `X^m Z^n`, i.e. `3m + n + 1`.
pub fn displacement_label(m: usize, n: usize) -> usize {
    3 * (m % 3) + (n % 3) + 1
}

/// The non-Clifford unitary `diag(1, u, u²)`, `u = e^{−2πi/9}`, relating the
/// SICs of parameters `t`, `π/9 − t`, and `π/9 + t`.
pub fn zhu_unitary() -> CMat3 {
    let u = Complex::from_polar(1.0, -2.0 * PI / 9.0);
    CMat3::diag(C_ONE, u, u * u)
}

/// The fiducial vector of a family, in the printed closed form (global
/// phases are kept verbatim; projectors do not see them).
pub fn fiducial_vector(spec: &FamilySpec) -> CVec3 {
    let inv_sqrt2 = Complex::new(FRAC_1_SQRT_2, 0.0);
    match *spec {
        FamilySpec::CanonicalHesse => CVec3::new([
            C_ZERO,
            inv_sqrt2,
            Complex::new(-FRAC_1_SQRT_2, 0.0),
        ]),
        FamilySpec::ExceptionalPiOver6(k) => {
            assert!(k <= 3, "exceptional index {k} outside 0..=3");
            if k == 0 {
                CVec3::new([C_ZERO, inv_sqrt2, inv_sqrt2])
            } else {
                let inv_sqrt6 = 1.0 / 6.0_f64.sqrt();
                CVec3::new([
                    omega_pow(k) * inv_sqrt6,
                    Complex::new(inv_sqrt6, 0.0),
                    Complex::new(-2.0 * inv_sqrt6, 0.0),
                ])
            }
        }
        FamilySpec::Generic { family, t } => {
            let s = family.sign().as_f64();
            if family.eta() == 0 {
                // (0, e^{∓it}, −e^{±it})/√2
                CVec3::new([
                    C_ZERO,
                    Complex::from_polar(FRAC_1_SQRT_2, -s * t),
                    -Complex::from_polar(FRAC_1_SQRT_2, s * t),
                ])
            } else {
                // √(2/3)·(ω^η sin t, sin(t ± 2π/3), sin(t ∓ 2π/3))
                let amp = (2.0 / 3.0_f64).sqrt();
                CVec3::new([
                    omega_pow(family.eta()) * (amp * t.sin()),
                    Complex::new(amp * (t + s * 2.0 * FRAC_PI_3).sin(), 0.0),
                    Complex::new(amp * (t - s * 2.0 * FRAC_PI_3).sin(), 0.0),
                ])
            }
        }
    }
}

/// A full qutrit SIC: nine projectors with the `i = 3m + n + 1` labeling.
#[derive(Debug, Clone, PartialEq)]
pub struct SicEnsemble {
    spec: FamilySpec,
    fiducial: CVec3,
    projectors: [CMat3; 9],
}

impl SicEnsemble {
    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn fiducial(&self) -> &CVec3 {
        &self.fiducial
    }

    /// Projector `Π_i` for a 1-based outcome label.
    pub fn projector(&self, i: usize) -> &CMat3 {
        assert!((1..=9).contains(&i), "outcome label {i} outside 1..=9");
        &self.projectors[i - 1]
    }

    /// All nine projectors, `Π_1` first.
    pub fn projectors(&self) -> &[CMat3; 9] {
        &self.projectors
    }
}

/// Residual report for the defining SIC conditions of a projector set.
#[derive(Debug, Clone, PartialEq)]
pub struct SicReport {
    /// Max |Tr(Π_iΠ_j) − (3δ_ij + 1)/4| over all ordered pairs.
    pub worst_overlap: f64,
    /// Pair (1-based) attaining `worst_overlap`.
    pub worst_pair: (usize, usize),
    /// |Tr(Π_i² − Π_i)| per projector.
    pub idempotency: [f64; 9],
    /// Max entrywise |Π_i − Π_i†| over the set.
    pub worst_hermiticity: f64,
    /// Max |Tr(Π_i) − 1| over the set.
    pub worst_unit_trace: f64,
}

impl SicReport {
    pub fn worst_idempotency(&self) -> f64 {
        self.idempotency.iter().cloned().fold(0.0, f64::max)
    }

    pub fn worst(&self) -> f64 {
        self.worst_overlap
            .max(self.worst_idempotency())
            .max(self.worst_hermiticity)
            .max(self.worst_unit_trace)
    }

    pub fn passes(&self) -> bool {
        self.worst() < TAU_SIC
    }
}

pub(crate) fn report_for(projectors: &[CMat3; 9]) -> SicReport {
    let mut worst_overlap = 0.0f64;
    let mut worst_pair = (1, 1);
    let mut idempotency = [0.0f64; 9];
    let mut worst_hermiticity = 0.0f64;
    let mut worst_unit_trace = 0.0f64;
    for i in 0..9 {
        let pi = &projectors[i];
        worst_hermiticity = worst_hermiticity.max(pi.hermiticity_residual());
        worst_unit_trace = worst_unit_trace.max((pi.trace() - C_ONE).norm());
        idempotency[i] = ((*pi * *pi).trace() - pi.trace()).norm();
        for j in 0..9 {
            let target = if i == j { 1.0 } else { 0.25 };
            let overlap = (projectors[i] * projectors[j]).trace();
            let residual = (overlap - Complex::new(target, 0.0)).norm();
            if residual > worst_overlap {
                worst_overlap = residual;
                worst_pair = (i + 1, j + 1);
            }
        }
    }
    SicReport {
        worst_overlap,
        worst_pair,
        idempotency,
        worst_hermiticity,
        worst_unit_trace,
    }
}

/// Builds the nine projectors `X^m Z^n |ψ⟩⟨ψ| Z^{-n} X^{-m}` of a family and
/// checks the overlap law; fails if any residual reaches the SIC tolerance.
pub fn build_sic(spec: &FamilySpec) -> Result<SicEnsemble> {
    let fiducial = fiducial_vector(spec);
    let mut projectors = [CMat3::ZERO; 9];
    for m in 0..3 {
        for n in 0..3 {
            let psi = displacement(m, n).mul_vec(&fiducial);
            projectors[displacement_label(m, n) - 1] = psi.projector();
        }
    }
    let report = report_for(&projectors);
    if report.worst_overlap >= TAU_SIC {
        let (i, j) = report.worst_pair;
        return Err(Error::SicViolation {
            worst: report.worst_overlap,
            i,
            j,
        });
    }
    Ok(SicEnsemble {
        spec: *spec,
        fiducial,
        projectors,
    })
}

/// Residual report for an already built ensemble.
pub fn verify_sic(sic: &SicEnsemble) -> SicReport {
    report_for(sic.projectors())
}
