//! Determinant identities satisfied by the measurements of a cyclic polygon.
//!
//! For four distinct points on a circle, labeled anticlockwise, the squared
//! chord lengths `x` and four-fold signed triangle areas `S` obey a
//! four-term product relation (a squared-measurement analogue of Ptolemy's
//! theorem) and make three particular 3×3 matrices singular.  Expanding the
//! first of those matrices along its first column reproduces the four-term
//! relation exactly, so the two checks double as independent witnesses of
//! one another.
//!
//! The same matrices can be formed from the entries of any diamond of the
//! plane frieze of a cyclic polygon — including the degenerate diamonds of
//! the top row, bottom row, and gluing positions — and remain singular
//! there, with variant matrices specific to the degenerate rows.
//!
//! Finally, for a polygon with `n ≡ 0 (mod 2)` vertices the even powers of
//! the chords between odd- and even-numbered vertices fill an
//! `(n/2) × (n/2)` matrix whose determinant vanishes whenever `n` is
//! divisible by 4 and the power `d` satisfies `d ≤ n/2 − 2`: each entry is
//! `(2R)^d sin^d((θ_even − θ_odd)/2)`, and the multiple-angle expansion of
//! `sin^d` splits the matrix into at most `d + 1` rank-one pieces.  Beyond
//! that range no vanishing claim applies, and the determinant is recorded
//! for information only.
//!
//! All checks here are pure functions of the measurement data: they
//! validate index structure but do **not** test concyclicity or
//! orientation.  Running them on a polygon that is not cyclic anticlockwise
//! is exactly how non-vacuity controls obtain their nonzero residuals; the
//! orchestrator in the parent module decides when hypotheses should gate a
//! check instead.

use crate::geometry::Polygon;
use crate::measurements::{build_table, MeasurementTable};
use crate::rational::{det_exact, ExactRational};

use super::report::CheckReport;
use super::IdentityError;

/// Validates that `1 <= i < j < k < l <= n`.
fn validate_quadruple(
    n: usize,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<(), IdentityError> {
    if i >= 1 && i < j && j < k && k < l && l <= n {
        Ok(())
    } else {
        Err(IdentityError::InvalidQuadruple { i, j, k, l, n })
    }
}

/// Checks the four-term chord/area product relation on the quadruple
/// `(i, j, k, l)`:
///
/// ```text
/// S_ijk·x_jl·x_kl − S_ijl·x_ik·x_kl + S_ikl·x_ij·x_jl − S_jkl·x_ij·x_ik = 0
/// ```
///
/// which holds whenever `A_i, A_j, A_k, A_l` are distinct points on a
/// common circle in anticlockwise order.  The report carries the single
/// exact residual (the left-hand side).
///
/// # Errors
///
/// Returns [`IdentityError::InvalidQuadruple`] unless `1 ≤ i < j < k < l ≤ n`.
pub fn check_ptolemy_s(
    table: &MeasurementTable,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<CheckReport, IdentityError> {
    validate_quadruple(table.n(), i, j, k, l)?;
    let (i, j, k, l) = (i as i64, j as i64, k as i64, l as i64);

    let residual = table.s(i, j, k)? * table.x(j, l)? * table.x(k, l)?
        - table.s(i, j, l)? * table.x(i, k)? * table.x(k, l)?
        + table.s(i, k, l)? * table.x(i, j)? * table.x(j, l)?
        - table.s(j, k, l)? * table.x(i, j)? * table.x(i, k)?;

    Ok(CheckReport::exact(
        "ptolemy-s",
        &[("i", i), ("j", j), ("k", k), ("l", l)],
        vec![residual],
    ))
}

/// Checks the three 3×3 determinants that vanish for four distinct
/// concyclic points `A_i, A_j, A_k, A_l` in anticlockwise order.
///
/// The matrices are, in residual order,
///
/// ```text
/// | x_kl   S_ikl  S_jkl |   | x_kl  S_ikl  S_jkl |   | x_jk   S_ijk  S_jkl |
/// | -x_ij  S_ijk  S_ijl |   | x_ij  S_ijl  S_ijk |   | -x_il  S_ikl  S_ijl |
/// | 0      x_ik   x_jl  |   | 0     x_il   x_jk  |   | 0      x_ik   x_jl  |
/// ```
///
/// Expanding the first along its first column gives exactly the
/// [`check_ptolemy_s`] residual — on *any* polygon, cyclic or not — so the
/// two functions must always agree in their first residual.
///
/// # Errors
///
/// Returns [`IdentityError::InvalidQuadruple`] unless `1 ≤ i < j < k < l ≤ n`.
pub fn check_det3(
    table: &MeasurementTable,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<CheckReport, IdentityError> {
    validate_quadruple(table.n(), i, j, k, l)?;
    let (i, j, k, l) = (i as i64, j as i64, k as i64, l as i64);

    let zero = ExactRational::zero;
    let first = vec![
        vec![table.x(k, l)?, table.s(i, k, l)?, table.s(j, k, l)?],
        vec![-table.x(i, j)?, table.s(i, j, k)?, table.s(i, j, l)?],
        vec![zero(), table.x(i, k)?, table.x(j, l)?],
    ];
    let second = vec![
        vec![table.x(k, l)?, table.s(i, k, l)?, table.s(j, k, l)?],
        vec![table.x(i, j)?, table.s(i, j, l)?, table.s(i, j, k)?],
        vec![zero(), table.x(i, l)?, table.x(j, k)?],
    ];
    let third = vec![
        vec![table.x(j, k)?, table.s(i, j, k)?, table.s(j, k, l)?],
        vec![-table.x(i, l)?, table.s(i, k, l)?, table.s(i, j, l)?],
        vec![zero(), table.x(i, k)?, table.x(j, l)?],
    ];

    let residuals = [first, second, third]
        .into_iter()
        .map(|matrix| det_exact(&matrix).expect("matrix is 3x3 by construction"))
        .collect();

    Ok(CheckReport::exact(
        "det3",
        &[("i", i), ("j", j), ("k", k), ("l", l)],
        residuals,
    ))
}

/// Checks the per-diamond determinant identities on every diamond of the
/// plane frieze of `polygon` — all ordered pairs `(a, b)` with
/// `a, b ∈ 1..=n`, including the degenerate bottom row (`b ≡ a+1`), top row
/// (`b ≡ a−1`), and gluing positions (`b = a`).
///
/// For each diamond the report's residuals start with the three base
/// determinants
///
/// ```text
/// | x_{b,b+1}   S_{a,b,b+1}    S_{a+1,b,b+1} |
/// | -x_{a,a+1}  S_{a,a+1,b}    S_{a,a+1,b+1} |
/// | 0           x_{a,b}        x_{a+1,b+1}   |
///
/// | x_{b,b+1}   S_{a,b,b+1}    S_{a+1,b,b+1} |
/// | x_{a,a+1}   S_{a,a+1,b+1}  S_{a,a+1,b}   |
/// | 0           x_{a,b+1}      x_{a+1,b}     |
///
/// | x_{a+1,b}   S_{a,a+1,b}    S_{a+1,b,b+1} |
/// | -x_{a,b+1}  S_{a,b,b+1}    S_{a,a+1,b+1} |
/// | 0           x_{a,b}        x_{a+1,b+1}   |
/// ```
///
/// (all indices cyclic).  On the degenerate rows the zero in position (3,1)
/// may equally be read as a squared chord that happens to vanish there;
/// those variant matrices are appended as extra residuals:
///
/// * bottom row `b ≡ a+1`: the first matrix with `(3,1) = x_{a+1,b}`;
/// * top row `b ≡ a−1`: the first matrix with `(3,1) = x_{a,b+1}`;
/// * gluing `b = a`: the second matrix with `(3,1) = x_{a,b}`, then with
///   `(3,1) = x_{a+1,b+1}`.
///
/// Every residual vanishes when the polygon is cyclic anticlockwise.
pub fn check_cor_diamonds(polygon: &Polygon) -> Vec<CheckReport> {
    let table = build_table(polygon);
    let n = table.n() as i64;
    let mut reports = Vec::with_capacity((n * n) as usize);

    for a in 1..=n {
        for b in 1..=n {
            let x = |i, j| table.x_cyclic(i, j);
            let s = |i, j, k| table.s_cyclic(i, j, k);

            let first = |corner: ExactRational| {
                vec![
                    vec![x(b, b + 1), s(a, b, b + 1), s(a + 1, b, b + 1)],
                    vec![-x(a, a + 1), s(a, a + 1, b), s(a, a + 1, b + 1)],
                    vec![corner, x(a, b), x(a + 1, b + 1)],
                ]
            };
            let second = |corner: ExactRational| {
                vec![
                    vec![x(b, b + 1), s(a, b, b + 1), s(a + 1, b, b + 1)],
                    vec![x(a, a + 1), s(a, a + 1, b + 1), s(a, a + 1, b)],
                    vec![corner, x(a, b + 1), x(a + 1, b)],
                ]
            };
            let third = vec![
                vec![x(a + 1, b), s(a, a + 1, b), s(a + 1, b, b + 1)],
                vec![-x(a, b + 1), s(a, b, b + 1), s(a, a + 1, b + 1)],
                vec![ExactRational::zero(), x(a, b), x(a + 1, b + 1)],
            ];

            let mut matrices = vec![
                first(ExactRational::zero()),
                second(ExactRational::zero()),
                third,
            ];
            if (b - a).rem_euclid(n) == 1 {
                // Bottom row: x_{a+1,b} vanishes, so it can stand in for the
                // structural zero.
                matrices.push(first(x(a + 1, b)));
            }
            if (a - b).rem_euclid(n) == 1 {
                // Top row: likewise for x_{a,b+1}.
                matrices.push(first(x(a, b + 1)));
            }
            if a == b {
                // Gluing diamond: both x_{a,b} and x_{a+1,b+1} vanish.
                matrices.push(second(x(a, b)));
                matrices.push(second(x(a + 1, b + 1)));
            }

            let residuals = matrices
                .iter()
                .map(|matrix| det_exact(matrix).expect("matrix is 3x3 by construction"))
                .collect();
            reports.push(CheckReport::exact(
                "cor-diamonds",
                &[("a", a), ("b", b)],
                residuals,
            ));
        }
    }
    reports
}

/// Checks the `(n/2) × (n/2)` chord-power determinant of `polygon` at even
/// power `d`: entry `(i, j)` is `x_{2i, 2j−1}^{d/2}`, the `d`-th power of
/// the chord between the `i`-th even-numbered and `j`-th odd-numbered
/// vertex.
///
/// The determinant is asserted to vanish exactly when `n` is divisible by 4
/// and `0 ≤ d ≤ n/2 − 2` (see the module docs for the rank argument).  In
/// the remaining computable cases — `n ≡ 2 (mod 4)`, or even
/// `d > n/2 − 2` — the determinant is still evaluated and recorded, but the
/// verdict is `skipped` because no vanishing claim applies.  Odd `d` would
/// need irrational chord lengths and is skipped without computing.
///
/// # Errors
///
/// Returns [`IdentityError::ParamOutOfRange`] when `d` is outside
/// `0..=n−2`.
pub fn check_plane_det(polygon: &Polygon, d: i64) -> Result<CheckReport, IdentityError> {
    let n = polygon.n() as i64;
    let params: &[(&str, i64)] = &[("d", d)];
    if d < 0 || d > n - 2 {
        return Err(IdentityError::ParamOutOfRange {
            name: "d",
            value: d,
            low: 0,
            high: n - 2,
        });
    }
    if d % 2 != 0 {
        return Ok(CheckReport::skipped(
            "plane-det",
            params,
            "odd powers of chord lengths are irrational; only even d is supported",
        ));
    }
    if n % 2 != 0 {
        return Ok(CheckReport::skipped(
            "plane-det",
            params,
            "the chord matrix pairs odd- with even-numbered vertices, which needs an even n",
        ));
    }

    let table = build_table(polygon);
    let half = n / 2;
    let matrix: Vec<Vec<ExactRational>> = (1..=half)
        .map(|i| {
            (1..=half)
                .map(|j| table.x_cyclic(2 * i, 2 * j - 1).pow((d / 2) as u32))
                .collect()
        })
        .collect();
    let det = det_exact(&matrix).expect("matrix is square by construction");

    if n % 4 != 0 {
        return Ok(CheckReport::informational(
            "plane-det",
            params,
            vec![det],
            "vanishing is only claimed for n divisible by 4; determinant recorded for information",
        ));
    }
    if d > half - 2 {
        return Ok(CheckReport::informational(
            "plane-det",
            params,
            vec![det],
            "d exceeds the guaranteed range (even d <= n/2 - 2); determinant recorded for information",
        ));
    }
    Ok(CheckReport::exact("plane-det", params, vec![det]))
}
