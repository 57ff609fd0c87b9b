//! Unitary invariants of a qutrit SIC.
//!
//! The triple products `T_ijk = Tr(Π_iΠ_jΠ_k)` identify a SIC up to unitary
//! equivalence; the structure coefficients `S_ijk` expand products of SIC
//! projectors back in the SIC basis, `Π_iΠ_j = Σ_k S_ijk Π_k`, and follow
//! from the triple products through a fixed affine map. For the
//! Weyl-Heisenberg families the real parts `S̃_ijk` over distinct indices
//! take only the values `−1/4`, `x_t`, `y_t`, `z_t`, and `0`, and which
//! triple takes which value is read off a 3×3 index generator grid:
//!
//! - same generator row → `−1/4`;
//! - same column, or a transversal (all rows and columns distinct) → `x_t`;
//! - two indices in one column, the third in the remaining row of the
//!   *succeeding* column (cyclically) → `y_t`;
//! - the same with the *preceding* column → `z_t`;
//! - anything else → `0`.
//!
//! The classification is invariant under permutations of the triple.

use crate::error::{Error, Result};
use crate::linalg::{CMat3, Complex};
use crate::sic::{GenericFamily, SicEnsemble, Sign};

/// Closed-form invariant values `(x_t, y_t, z_t)` at parameter `t`.
///
/// `x_t = −(cos 6t + 1/2)/6`, with `y_t = x_{π/9 + t}` and
/// `z_t = x_{π/9 − t}`. Each lies in `[−1/4, 1/12]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantTriple {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
}

impl InvariantTriple {
    /// The values sorted ascending; equal for unitarily equivalent SICs.
    pub fn multiset(&self) -> [f64; 3] {
        let mut values = [self.x, self.y, self.z];
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        values
    }
}

/// Evaluates the invariant triple from the cosine closed forms.
///
/// The shifted cosines are expanded with exact constants `cos(2π/3) = −1/2`
/// and `sin(2π/3) = √3/2`, which makes `(x_0, y_0, z_0) = (−1/4, 0, 0)`
/// exact rather than accurate to rounding.
pub fn xyz_values(t: f64) -> InvariantTriple {
    let c = (6.0 * t).cos();
    let s = (6.0 * t).sin();
    let half_sqrt3 = 3.0_f64.sqrt() / 2.0;
    let x = -(c + 0.5) / 6.0;
    let y = -((-0.5 * c - half_sqrt3 * s) + 0.5) / 6.0;
    let z = -((-0.5 * c + half_sqrt3 * s) + 0.5) / 6.0;
    InvariantTriple { x, y, z, t }
}

/// Sorted `(x_t, y_t, z_t)`; coincides for parameters `t`, `π/9 − t`,
/// `π/9 + t`, the unitarily equivalent orbits.
pub fn equivalence_multiset(t: f64) -> [f64; 3] {
    xyz_values(t).multiset()
}

/// A structure-coefficient index generator: the 3×3 grid of outcome labels
/// attached to one generic family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexGenerator {
    grid: [[usize; 3]; 3],
}

impl IndexGenerator {
    pub fn grid(&self) -> &[[usize; 3]; 3] {
        &self.grid
    }

    pub fn rows(&self) -> [[usize; 3]; 3] {
        self.grid
    }

    /// Row-major flattening; equals the family permutation image list.
    pub fn flattened(&self) -> [usize; 9] {
        let g = &self.grid;
        [
            g[0][0], g[0][1], g[0][2], g[1][0], g[1][1], g[1][2], g[2][0], g[2][1], g[2][2],
        ]
    }

    /// (row, col) of a label, 0-based.
    fn position(&self, label: usize) -> (usize, usize) {
        for (r, row) in self.grid.iter().enumerate() {
            for (c, &cell) in row.iter().enumerate() {
                if cell == label {
                    return (r, c);
                }
            }
        }
        unreachable!("grid is a permutation of 1..=9")
    }
}

/// The index generator of a generic family.
pub fn index_generator(family: GenericFamily) -> IndexGenerator {
    let grid = match (family.eta(), family.sign()) {
        (0, Sign::Plus) => [[1, 2, 3], [4, 5, 6], [7, 8, 9]],
        (0, Sign::Minus) => [[1, 3, 2], [4, 6, 5], [7, 9, 8]],
        (1, Sign::Plus) => [[1, 5, 9], [2, 6, 7], [3, 4, 8]],
        (1, Sign::Minus) => [[1, 9, 5], [2, 7, 6], [3, 8, 4]],
        (2, Sign::Plus) => [[1, 6, 8], [2, 4, 9], [3, 5, 7]],
        (2, Sign::Minus) => [[1, 8, 6], [2, 9, 4], [3, 7, 5]],
        (3, Sign::Plus) => [[1, 4, 7], [2, 5, 8], [3, 6, 9]],
        (3, Sign::Minus) => [[1, 7, 4], [2, 8, 5], [3, 9, 6]],
        _ => unreachable!("GenericFamily enforces eta <= 3"),
    };
    IndexGenerator { grid }
}

/// Class of an index triple under the generator rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleClass {
    /// i = j = k.
    Diagonal,
    /// Exactly two indices equal.
    Pair,
    /// All three on one generator row (value −1/4).
    Row,
    /// One column or a transversal (value x_t).
    X,
    /// Column pair plus succeeding-column completion (value y_t).
    Y,
    /// Column pair plus preceding-column completion (value z_t).
    Z,
    /// Every remaining triple (value 0).
    Zero,
}

fn check_label(i: usize) -> Result<()> {
    if (1..=9).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: i })
    }
}

/// Classifies the (unordered) triple `{i, j, k}` against a generator.
pub fn classify_triple(g: &IndexGenerator, i: usize, j: usize, k: usize) -> Result<TripleClass> {
    check_label(i)?;
    check_label(j)?;
    check_label(k)?;
    if i == j && j == k {
        return Ok(TripleClass::Diagonal);
    }
    if i == j || j == k || i == k {
        return Ok(TripleClass::Pair);
    }

    let cells = [g.position(i), g.position(j), g.position(k)];
    let rows = [cells[0].0, cells[1].0, cells[2].0];
    let cols = [cells[0].1, cells[1].1, cells[2].1];
    let all_rows_distinct = rows[0] != rows[1] && rows[1] != rows[2] && rows[0] != rows[2];
    let all_cols_distinct = cols[0] != cols[1] && cols[1] != cols[2] && cols[0] != cols[2];

    if rows[0] == rows[1] && rows[1] == rows[2] {
        return Ok(TripleClass::Row);
    }
    if cols[0] == cols[1] && cols[1] == cols[2] {
        return Ok(TripleClass::X);
    }
    if all_rows_distinct && all_cols_distinct {
        return Ok(TripleClass::X);
    }

    // Look for exactly two cells sharing a column.
    for (a, b, c) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        if cols[a] == cols[b] && cols[c] != cols[a] {
            // The completion must sit in the row the pair leaves free.
            if rows[c] == rows[a] || rows[c] == rows[b] {
                return Ok(TripleClass::Zero);
            }
            let succeeding = (cols[a] + 1) % 3;
            return Ok(if cols[c] == succeeding {
                TripleClass::Y
            } else {
                TripleClass::Z
            });
        }
    }
    Ok(TripleClass::Zero)
}

/// Counts of (Row, X, Y, Z, Zero) over the 84 unordered distinct triples.
pub fn class_census(g: &IndexGenerator) -> Result<[usize; 5]> {
    let mut census = [0usize; 5];
    for i in 1..=9 {
        for j in i + 1..=9 {
            for k in j + 1..=9 {
                let slot = match classify_triple(g, i, j, k)? {
                    TripleClass::Row => 0,
                    TripleClass::X => 1,
                    TripleClass::Y => 2,
                    TripleClass::Z => 3,
                    TripleClass::Zero => 4,
                    _ => unreachable!("indices are distinct"),
                };
                census[slot] += 1;
            }
        }
    }
    Ok(census)
}

/// Rule-predicted `S̃_ijk` for a generic family at parameter `t`.
///
/// Same-index patterns take the universal values `S_iii = 1`,
/// `S_ijj = S_jij = 1/4`, `S_jji = 0`; distinct triples take the class value.
pub fn predicted_struct_real(
    family: GenericFamily,
    t: f64,
    i: usize,
    j: usize,
    k: usize,
) -> Result<f64> {
    check_label(i)?;
    check_label(j)?;
    check_label(k)?;
    if i == j && j == k {
        return Ok(1.0);
    }
    if i == j {
        return Ok(0.0);
    }
    if j == k || i == k {
        return Ok(0.25);
    }
    let triple = xyz_values(t);
    Ok(match classify_triple(&index_generator(family), i, j, k)? {
        TripleClass::Row => -0.25,
        TripleClass::X => triple.x,
        TripleClass::Y => triple.y,
        TripleClass::Z => triple.z,
        TripleClass::Zero => 0.0,
        TripleClass::Diagonal | TripleClass::Pair => unreachable!("handled above"),
    })
}

/// Measured triple products and structure coefficients of one SIC.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantTensors {
    t: Vec<Complex>,
    s: Vec<Complex>,
    s_real: Vec<f64>,
}

#[inline]
fn idx(i: usize, j: usize, k: usize) -> usize {
    (i - 1) * 81 + (j - 1) * 9 + (k - 1)
}

/// The affine map from a triple product to the matching structure
/// coefficient: `S_ijk = [4·T_ijk − (3δ_ij + 1)/4] / 3`.
pub fn structure_from_triple(t_ijk: Complex, i: usize, j: usize) -> Complex {
    let delta = if i == j { 1.0 } else { 0.0 };
    (t_ijk * 4.0 - Complex::new((3.0 * delta + 1.0) / 4.0, 0.0)) / 3.0
}

impl InvariantTensors {
    /// Computes `T` from ordered projector traces and `S` independently from
    /// the dual basis, `S_ijk = Tr(Π_iΠ_jQ_k)`; the two routes are related by
    /// [`structure_from_triple`] and cross-checked in [`Self::triple_map_residual`].
    pub fn measure(sic: &SicEnsemble) -> Self {
        Self::from_projectors(sic.projectors())
    }

    /// Same as [`Self::measure`] but for a bare projector set (used to probe
    /// sets that arise from conjugating a SIC by a unitary).
    pub fn from_projectors(projectors: &[CMat3; 9]) -> Self {
        let dual = dual_basis_of(projectors);
        let mut t = vec![Complex::new(0.0, 0.0); 729];
        let mut s = vec![Complex::new(0.0, 0.0); 729];
        let mut s_real = vec![0.0; 729];
        for i in 1..=9 {
            for j in 1..=9 {
                let prod = projectors[i - 1] * projectors[j - 1];
                for k in 1..=9 {
                    let t_ijk = (prod * projectors[k - 1]).trace();
                    let s_ijk = (prod * dual[k - 1]).trace();
                    t[idx(i, j, k)] = t_ijk;
                    s[idx(i, j, k)] = s_ijk;
                    s_real[idx(i, j, k)] = s_ijk.re;
                }
            }
        }
        Self { t, s, s_real }
    }

    /// Triple product `T_ijk` (1-based labels).
    pub fn t(&self, i: usize, j: usize, k: usize) -> Complex {
        self.t[idx(i, j, k)]
    }

    /// Structure coefficient `S_ijk` (1-based labels).
    pub fn s(&self, i: usize, j: usize, k: usize) -> Complex {
        self.s[idx(i, j, k)]
    }

    /// Real part `S̃_ijk` (1-based labels).
    pub fn s_real(&self, i: usize, j: usize, k: usize) -> f64 {
        self.s_real[idx(i, j, k)]
    }

    /// Max |S_ijk − map(T_ijk)| over all 729 entries: consistency of the
    /// dual-basis route with the triple-product route.
    pub fn triple_map_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 1..=9 {
            for j in 1..=9 {
                for k in 1..=9 {
                    let mapped = structure_from_triple(self.t(i, j, k), i, j);
                    worst = worst.max((self.s(i, j, k) - mapped).norm());
                }
            }
        }
        worst
    }

    /// Max entrywise norm of `Π_iΠ_j − Σ_k S_ijk Π_k` over all pairs: the
    /// defining expansion property of the structure coefficients.
    pub fn expansion_residual(&self, sic: &SicEnsemble) -> f64 {
        let mut worst = 0.0f64;
        for i in 1..=9 {
            for j in 1..=9 {
                let mut expansion = CMat3::ZERO;
                for k in 1..=9 {
                    expansion = expansion + sic.projector(k).scale(self.s(i, j, k));
                }
                let direct = *sic.projector(i) * *sic.projector(j);
                worst = worst.max(direct.max_abs_diff(&expansion));
            }
        }
        worst
    }

    /// Max violation of total antisymmetry of `Im T` under index swaps.
    pub fn imag_antisymmetry_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 1..=9 {
            for j in 1..=9 {
                for k in 1..=9 {
                    let im = self.t(i, j, k).im;
                    worst = worst
                        .max((im + self.t(j, i, k).im).abs())
                        .max((im + self.t(i, k, j).im).abs())
                        .max((im + self.t(k, j, i).im).abs());
                }
            }
        }
        worst
    }

    /// The 504 values `S̃_ijk` over ordered distinct triples, sorted.
    /// Label-free, so it can be compared across relabeled projector sets.
    pub fn measured_value_multiset(&self) -> Vec<f64> {
        let mut values = Vec::with_capacity(504);
        for i in 1..=9 {
            for j in 1..=9 {
                for k in 1..=9 {
                    if i != j && j != k && i != k {
                        values.push(self.s_real(i, j, k));
                    }
                }
            }
        }
        values.sort_by(|a, b| a.partial_cmp(b).unwrap());
        values
    }
}

fn dual_basis_of(projectors: &[CMat3; 9]) -> [CMat3; 9] {
    let mut dual = [CMat3::ZERO; 9];
    for (q, pi) in dual.iter_mut().zip(projectors.iter()) {
        *q = dual_basis_element(pi);
    }
    dual
}

pub(crate) fn dual_basis_element(pi: &CMat3) -> CMat3 {
    (pi.scale(Complex::new(4.0, 0.0)) - CMat3::IDENTITY).scale(Complex::new(1.0 / 3.0, 0.0))
}

/// The sorted 504-entry multiset predicted by the rules at parameter `t`:
/// 18 entries of −1/4, 54 each of `x_t`, `y_t`, `z_t`, and 324 zeros.
pub fn predicted_value_multiset(t: f64) -> Vec<f64> {
    let triple = xyz_values(t);
    let mut values = Vec::with_capacity(504);
    values.extend(std::iter::repeat_n(-0.25, 18));
    values.extend(std::iter::repeat_n(triple.x, 54));
    values.extend(std::iter::repeat_n(triple.y, 54));
    values.extend(std::iter::repeat_n(triple.z, 54));
    values.extend(std::iter::repeat_n(0.0, 324));
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    values
}

/// Max gap between two sorted multisets of equal length.
pub fn multiset_gap(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "multisets must have equal size");
    a.iter()
        .zip(b.iter())
        .map(|(u, v)| (u - v).abs())
        .fold(0.0, f64::max)
}

/// Max |measured − predicted| of `S̃_ijk` over all 729 triples for a generic
/// family ensemble at parameter `t`.
pub fn prediction_residual(family: GenericFamily, t: f64, tensors: &InvariantTensors) -> f64 {
    let mut worst = 0.0f64;
    for i in 1..=9 {
        for j in 1..=9 {
            for k in 1..=9 {
                let predicted = predicted_struct_real(family, t, i, j, k)
                    .expect("labels in range by construction");
                worst = worst.max((tensors.s_real(i, j, k) - predicted).abs());
            }
        }
    }
    worst
}
