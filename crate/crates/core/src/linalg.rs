//! Dense complex 3×3 and real 9×9 linear algebra.
//!
//! Everything the rest of the crate needs fits in two fixed-size matrix
//! types, so there is no external linear-algebra dependency. Storage is
//! row-major plain arrays.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::tol::TAU_HERM;

/// Complex scalar of the whole crate.
pub type Complex = Complex64;

pub(crate) const C_ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const C_ONE: Complex = Complex::new(1.0, 0.0);

/// Complex 3-vector (a ket).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CVec3 {
    pub v: [Complex; 3],
}

impl CVec3 {
    pub const fn new(v: [Complex; 3]) -> Self {
        Self { v }
    }

    /// Hermitian inner product ⟨self|other⟩, conjugating `self`.
    pub fn inner(&self, other: &CVec3) -> Complex {
        let mut s = C_ZERO;
        for i in 0..3 {
            s += self.v[i].conj() * other.v[i];
        }
        s
    }

    pub fn norm_sq(&self) -> f64 {
        self.v.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, c: Complex) -> CVec3 {
        CVec3::new([self.v[0] * c, self.v[1] * c, self.v[2] * c])
    }

    pub fn sub(&self, other: &CVec3) -> CVec3 {
        CVec3::new([
            self.v[0] - other.v[0],
            self.v[1] - other.v[1],
            self.v[2] - other.v[2],
        ])
    }

    pub fn normalized(&self) -> CVec3 {
        self.scale(Complex::new(1.0 / self.norm_sq().sqrt(), 0.0))
    }

    /// Rank-1 projector |self⟩⟨self|.
    pub fn projector(&self) -> CMat3 {
        CMat3::outer(self, self)
    }

    /// Max entrywise distance to another vector.
    pub fn max_abs_diff(&self, other: &CVec3) -> f64 {
        (0..3)
            .map(|i| (self.v[i] - other.v[i]).norm())
            .fold(0.0, f64::max)
    }
}

/// Complex 3×3 matrix, row-major (`m[row][col]`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat3 {
    pub m: [[Complex; 3]; 3],
}

impl CMat3 {
    pub const fn new(m: [[Complex; 3]; 3]) -> Self {
        Self { m }
    }

    pub const ZERO: CMat3 = CMat3::new([[C_ZERO; 3]; 3]);

    pub const IDENTITY: CMat3 = CMat3::new([
        [C_ONE, C_ZERO, C_ZERO],
        [C_ZERO, C_ONE, C_ZERO],
        [C_ZERO, C_ZERO, C_ONE],
    ]);

    pub fn diag(d0: Complex, d1: Complex, d2: Complex) -> CMat3 {
        let mut m = CMat3::ZERO;
        m.m[0][0] = d0;
        m.m[1][1] = d1;
        m.m[2][2] = d2;
        m
    }

    /// Outer product |ket⟩⟨bra|.
    pub fn outer(ket: &CVec3, bra: &CVec3) -> CMat3 {
        let mut m = CMat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.m[i][j] = ket.v[i] * bra.v[j].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex {
        self.m[0][0] + self.m[1][1] + self.m[2][2]
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMat3 {
        let mut m = CMat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.m[i][j] = self.m[j][i].conj();
            }
        }
        m
    }

    pub fn scale(&self, c: Complex) -> CMat3 {
        let mut m = *self;
        for row in m.m.iter_mut() {
            for z in row.iter_mut() {
                *z *= c;
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &CVec3) -> CVec3 {
        let mut out = [C_ZERO; 3];
        for (i, slot) in out.iter_mut().enumerate() {
            for j in 0..3 {
                *slot += self.m[i][j] * v.v[j];
            }
        }
        CVec3::new(out)
    }

    pub fn det(&self) -> Complex {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Max entrywise deviation from Hermiticity.
    pub fn hermiticity_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.m[i][j] - self.m[j][i].conj()).norm());
            }
        }
        worst
    }

    pub fn max_abs_diff(&self, other: &CMat3) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        let mut worst = 0.0f64;
        for row in &self.m {
            for z in row {
                worst = worst.max(z.norm());
            }
        }
        worst
    }

    pub fn is_finite(&self) -> bool {
        self.m
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Add for CMat3 {
    type Output = CMat3;
    fn add(self, rhs: CMat3) -> CMat3 {
        let mut m = CMat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.m[i][j] = self.m[i][j] + rhs.m[i][j];
            }
        }
        m
    }
}

impl Sub for CMat3 {
    type Output = CMat3;
    fn sub(self, rhs: CMat3) -> CMat3 {
        let mut m = CMat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                m.m[i][j] = self.m[i][j] - rhs.m[i][j];
            }
        }
        m
    }
}

impl Mul for CMat3 {
    type Output = CMat3;
    fn mul(self, rhs: CMat3) -> CMat3 {
        let mut m = CMat3::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                let mut s = C_ZERO;
                for k in 0..3 {
                    s += self.m[i][k] * rhs.m[k][j];
                }
                m.m[i][j] = s;
            }
        }
        m
    }
}

/// Real 9×9 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RMat9 {
    pub m: [[f64; 9]; 9],
}

impl RMat9 {
    pub const fn new(m: [[f64; 9]; 9]) -> Self {
        Self { m }
    }

    pub const ZERO: RMat9 = RMat9::new([[0.0; 9]; 9]);

    pub fn identity() -> RMat9 {
        let mut m = RMat9::ZERO;
        for i in 0..9 {
            m.m[i][i] = 1.0;
        }
        m
    }

    pub fn transpose(&self) -> RMat9 {
        let mut m = RMat9::ZERO;
        for i in 0..9 {
            for j in 0..9 {
                m.m[i][j] = self.m[j][i];
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[f64; 9]) -> [f64; 9] {
        let mut out = [0.0; 9];
        for (i, slot) in out.iter_mut().enumerate() {
            for j in 0..9 {
                *slot += self.m[i][j] * v[j];
            }
        }
        out
    }

    pub fn row_sums(&self) -> [f64; 9] {
        let mut out = [0.0; 9];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.m[i].iter().sum();
        }
        out
    }

    pub fn col_sums(&self) -> [f64; 9] {
        let mut out = [0.0; 9];
        for (j, slot) in out.iter_mut().enumerate() {
            for i in 0..9 {
                *slot += self.m[i][j];
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &RMat9) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..9 {
            for j in 0..9 {
                worst = worst.max((self.m[i][j] - other.m[i][j]).abs());
            }
        }
        worst
    }

    /// Max entry of |RᵀR − I|; zero for an orthogonal matrix.
    pub fn orthogonality_residual(&self) -> f64 {
        (self.transpose() * *self).max_abs_diff(&RMat9::identity())
    }

    /// Determinant by LU decomposition with partial pivoting.
    pub fn det(&self) -> f64 {
        let mut a = self.m;
        let mut det = 1.0f64;
        for col in 0..9 {
            let mut pivot = col;
            for row in col + 1..9 {
                if a[row][col].abs() > a[pivot][col].abs() {
                    pivot = row;
                }
            }
            if a[pivot][col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for row in col + 1..9 {
                let factor = a[row][col] / a[col][col];
                for k in col..9 {
                    a[row][k] -= factor * a[col][k];
                }
            }
        }
        det
    }
}

impl Mul for RMat9 {
    type Output = RMat9;
    fn mul(self, rhs: RMat9) -> RMat9 {
        let mut m = RMat9::ZERO;
        for i in 0..9 {
            for j in 0..9 {
                let mut s = 0.0;
                for k in 0..9 {
                    s += self.m[i][k] * rhs.m[k][j];
                }
                m.m[i][j] = s;
            }
        }
        m
    }
}

/// Trace of the ordered product `m1·m2·…·mk`.
pub fn trace_product(ms: &[CMat3]) -> Result<Complex> {
    let (first, rest) = ms.split_first().ok_or(Error::EmptyProduct)?;
    let mut acc = *first;
    for m in rest {
        acc = acc * *m;
    }
    Ok(acc.trace())
}

/// Eigenvalues of a Hermitian 3×3 matrix, sorted descending.
///
/// Uses the trigonometric closed form of the characteristic cubic: shift by
/// Tr/3, scale by the deviation norm, then read the three roots off an
/// arccos. Branch-free and stable for degenerate spectra at this size.
pub fn eigenvalues_herm3(h: &CMat3) -> Result<[f64; 3]> {
    let residual = h.hermiticity_residual();
    if residual > TAU_HERM {
        return Err(Error::NotHermitian {
            residual,
            tol: TAU_HERM,
        });
    }
    if !h.is_finite() {
        return Err(Error::NonFinite);
    }

    let q = h.trace().re / 3.0;
    let centered = *h - CMat3::diag(
        Complex::new(q, 0.0),
        Complex::new(q, 0.0),
        Complex::new(q, 0.0),
    );
    // p² = Tr(B²)/6 for the traceless Hermitian deviation B.
    let p2 = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .map(|(i, j)| centered.m[i][j].norm_sqr())
        .sum::<f64>()
        / 6.0;
    let p = p2.sqrt();
    if p == 0.0 {
        return Ok([q, q, q]);
    }
    let b = centered.scale(Complex::new(1.0 / p, 0.0));
    let r = (b.det().re / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    // phi ∈ [0, π/3] orders the extreme cosines; the middle root comes from
    // the trace so the three sum exactly to Tr(h).
    let e1 = q + 2.0 * p * phi.cos();
    let e3 = q + 2.0 * p * (phi + 2.0 * std::f64::consts::FRAC_PI_3).cos();
    let e2 = 3.0 * q - e1 - e3;
    Ok([e1, e2, e3])
}

fn gaussian_cvec3(rng: &mut impl Rng) -> CVec3 {
    let mut v = [C_ZERO; 3];
    for slot in v.iter_mut() {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        *slot = Complex::new(re, im);
    }
    CVec3::new(v)
}

/// Deterministic Haar-random pure state: a normalized vector of independent
/// standard complex Gaussians.
pub fn random_pure_state(seed: u64) -> CVec3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gaussian_cvec3(&mut rng).normalized()
}

/// Deterministic random density matrix: a weighted mixture of one, two, or
/// three Haar-random pure states (so ranks 1..=3 all occur).
pub fn random_density_matrix(seed: u64) -> CMat3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank: usize = rng.random_range(1..=3);
    let mut weights = [0.0f64; 3];
    let mut total = 0.0;
    for w in weights.iter_mut().take(rank) {
        *w = rng.random_range(0.05..1.0);
        total += *w;
    }
    let mut rho = CMat3::ZERO;
    for w in weights.iter().take(rank) {
        let psi = gaussian_cvec3(&mut rng).normalized();
        rho = rho + psi.projector().scale(Complex::new(w / total, 0.0));
    }
    rho
}

/// Deterministic random Hermitian matrix with unit trace (not necessarily
/// positive semidefinite).
pub fn random_hermitian_unit_trace(seed: u64) -> CMat3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = CMat3::ZERO;
    for i in 0..3 {
        let d: f64 = rng.sample(StandardNormal);
        h.m[i][i] = Complex::new(d, 0.0);
        for j in i + 1..3 {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            h.m[i][j] = Complex::new(re, im);
            h.m[j][i] = Complex::new(re, -im);
        }
    }
    // Shift the diagonal to make the trace exactly 1.
    let shift = (1.0 - h.trace().re) / 3.0;
    for i in 0..3 {
        h.m[i][i] += Complex::new(shift, 0.0);
    }
    h
}

pub(crate) fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

pub(crate) fn approx_eq_c(a: Complex, b: Complex, tol: f64) -> bool {
    (a - b).norm() <= tol
}
