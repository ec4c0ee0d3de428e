//! The alternating product identity for even cyclic polygons, plus the
//! floating-point chord-product oracle that cross-checks it.
//!
//! For a cyclic polygon `A_1, …, A_n` (anticlockwise, `n > 4` even) the
//! measurements satisfy one global relation
//!
//! ```text
//! Σ_{m=1}^{n} (−1)^{m+1} · x(m) · S(m) = 0
//! ```
//!
//! where `x(m)` is a monomial in squared boundary-edge lengths ([`main_x`])
//! and `S(m)` a monomial in four-fold triangle areas ([`main_s`]), each
//! given by an explicit piecewise formula in the *literal* index regime:
//! factors with a nonpositive index are `1`, and `x_{ij}^p = 1` for
//! negative `p`.  [`check_main_theorem`] evaluates the sum exactly.
//!
//! The identity is a cleared-denominator form of a much simpler statement
//! about chord lengths: with `δ_ij = √x_ij` and
//! `δ(m) = ∏_{i<j, i,j≠m} δ_ij` (the product of all chords avoiding vertex
//! `m`), the alternating sum `Σ (−1)^{m+1} δ(m)` vanishes.  That statement
//! needs square roots, so it only admits a floating-point check
//! ([`oracle_delta`]) — but it provides an *independent* route to the exact
//! formulas: each `δ(m)` equals `S(m)/X(m)`, where `X(m)` is a monomial in
//! edge lengths and a power of the circumradius `R` ([`RMonomial`]), and
//! multiplying the simple statement by the least common multiple `L` of
//! the `X(m)` recovers the exact identity with `x(m) = L/X(m)`.
//!
//! [`oracle_xsl`] exposes `X(m)`, the independently-derived `S(m)`, and
//! `L`; [`oracle_check_reports`] packages the three cross-contracts:
//!
//! * **(a)** `L / X(m) = x(m)` exactly (the `R` powers cancel),
//! * **(b)** the independently-derived `S(m)` equals [`main_s`] exactly,
//! * **(c)** `float(S(m)) / float(X(m))` matches `δ(m)` within
//!   [`ORACLE_RELATIVE_TOLERANCE`](super::report::ORACLE_RELATIVE_TOLERANCE),
//!
//! plus the alternating `δ` sum itself.  A sign, index, or exponent error
//! in any one route breaks at least one contract, which is what makes the
//! oracle a genuine cross-check rather than a reimplementation.

use crate::geometry::{squared_distance_between, Polygon};
use crate::measurements::{build_table, MeasurementTable};
use crate::rational::ExactRational;

use super::report::CheckReport;
use super::IdentityError;

/// A rational multiple of an integer power of the circumradius `R`.
///
/// Tracking the `R` power symbolically keeps quotients like `L / X(m)`
/// exact — the powers cancel instead of forcing an irrational value.  `R`
/// is substituted numerically only on the floating-point oracle path, via
/// [`RMonomial::evaluate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMonomial {
    /// The rational coefficient.
    pub value: ExactRational,
    /// The exponent of the circumradius `R`.
    pub r_power: i64,
}

impl RMonomial {
    /// `value · R^r_power` as a float, for a numeric radius.
    pub fn evaluate(&self, radius: &ExactRational) -> f64 {
        self.value.to_f64() * radius.to_f64().powi(self.r_power as i32)
    }
}

impl std::ops::Mul for RMonomial {
    type Output = RMonomial;

    /// Multiplying monomials multiplies values and adds `R` powers.
    fn mul(self, rhs: RMonomial) -> RMonomial {
        RMonomial {
            value: self.value * rhs.value,
            r_power: self.r_power + rhs.r_power,
        }
    }
}

/// The `X(m)`, `S(m)`, `L` triple of the chord-product decomposition:
/// `δ(m) = S(m)/X(m)` and `L = lcm(X(m))`.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleMonomials {
    /// Denominator monomial `X(m)` (edge lengths and an `R` power).
    pub x: RMonomial,
    /// Area monomial `S(m)`, derived independently of [`main_s`].
    pub s: ExactRational,
    /// Least common multiple `L` of all the `X(m)`.
    pub l: RMonomial,
}

/// Validates the shared hypotheses of the alternating-sum formulas:
/// the table matches `n`, `n` is even and exceeds 4, and `1 ≤ m ≤ n`.
fn validate_alternating_args(
    table: &MeasurementTable,
    m: i64,
    n: i64,
) -> Result<(), IdentityError> {
    if n != table.n() as i64 {
        return Err(IdentityError::PolygonSizeMismatch {
            given: n,
            actual: table.n(),
        });
    }
    if n <= 4 || n % 2 != 0 {
        return Err(IdentityError::UnsupportedPolygonSize { n: table.n() });
    }
    if m < 1 || m > n {
        return Err(IdentityError::ParamOutOfRange {
            name: "m",
            value: m,
            low: 1,
            high: n,
        });
    }
    Ok(())
}

/// Product of `factor(l)` over all `l` in `low..=high` with the given
/// parity (`0` even, `1` odd).  Empty ranges give `1`, matching the
/// convention used throughout the piecewise formulas.
fn parity_product<F>(low: i64, high: i64, parity: i64, mut factor: F) -> Result<ExactRational, IdentityError>
where
    F: FnMut(i64) -> Result<ExactRational, IdentityError>,
{
    let mut product = ExactRational::one();
    for l in low..=high {
        if l.rem_euclid(2) == parity {
            product *= &factor(l)?;
        }
    }
    Ok(product)
}

/// The edge monomial `x(m)` of the alternating identity, evaluated in the
/// literal index regime.
///
/// Piecewise by the parity of `m` (and, for odd `m`, whether `n = 6`):
///
/// ```text
/// m even:          x_12 · x_34^c · ∏_{l=m, even}^{n−2} x_{l,l+1}^{(l−2)/2}
///                       · ∏_{l=5, odd}^{m−1} x_{l,l+1}^{(l−3)/2}
/// m odd, n = 6:    x_12^a · ∏_{l=m−1, even}^{n−2} x_{l,l+1}^{(l−2)/2}
///                       · ∏_{l=5, odd}^{m} x_{l,l+1}^{(l−3)/2}
/// m odd, n > 6:    x_12^a · x_34^b · x_{m−2,m−1}^{(m−5)/2} · x_{m,m+1}^{(m−3)/2}
///                       · ∏_{l=m−1, even}^{n−2} x_{l,l+1}^{(l−2)/2}
///                       · ∏_{l=5, odd}^{m−4} x_{l,l+1}^{(l−5)/2}
/// ```
///
/// with `a = 1` iff `m ∈ {1,3}`, `b = 1` iff `m ∈ {1,3,5}`, and `c = 0`
/// for `n = 6`, `c = 1` for `n ≥ 8`.
///
/// # Errors
///
/// [`IdentityError::PolygonSizeMismatch`] when `n` differs from the
/// table's vertex count, [`IdentityError::UnsupportedPolygonSize`] when
/// `n` is odd or at most 4, [`IdentityError::ParamOutOfRange`] when `m`
/// is outside `1..=n`.
pub fn main_x(table: &MeasurementTable, m: i64, n: i64) -> Result<ExactRational, IdentityError> {
    validate_alternating_args(table, m, n)?;
    let xp = |i: i64, j: i64, p: i64| -> Result<ExactRational, IdentityError> {
        Ok(table.x_pow(i, j, p)?)
    };

    if m % 2 == 0 {
        let c = i64::from(n >= 8);
        Ok(xp(1, 2, 1)?
            * xp(3, 4, c)?
            * parity_product(m, n - 2, 0, |l| xp(l, l + 1, (l - 2) / 2))?
            * parity_product(5, m - 1, 1, |l| xp(l, l + 1, (l - 3) / 2))?)
    } else if n == 6 {
        let a = i64::from(m == 1 || m == 3);
        Ok(xp(1, 2, a)?
            * parity_product(m - 1, n - 2, 0, |l| xp(l, l + 1, (l - 2) / 2))?
            * parity_product(5, m, 1, |l| xp(l, l + 1, (l - 3) / 2))?)
    } else {
        let a = i64::from(m == 1 || m == 3);
        let b = i64::from(m == 1 || m == 3 || m == 5);
        Ok(xp(1, 2, a)?
            * xp(3, 4, b)?
            * xp(m - 2, m - 1, (m - 5) / 2)?
            * xp(m, m + 1, (m - 3) / 2)?
            * parity_product(m - 1, n - 2, 0, |l| xp(l, l + 1, (l - 2) / 2))?
            * parity_product(5, m - 4, 1, |l| xp(l, l + 1, (l - 5) / 2))?)
    }
}

/// The area monomial `S(m)` of the alternating identity, evaluated in the
/// literal index regime.
///
/// ```text
/// m even:  ∏_{k=1}^{m−1} ( ∏_{l=k+1, even}^{m−2} S_{k,l,l+1}
///                          · ∏_{l=m+1, odd}^{n−1} S_{k,l,l+1} )
///          · ∏_{k=m}^{n−3} ∏_{l=k+2, odd}^{n−1} S_{k+1,l,l+1}
///
/// m odd:   S_{m−2,m−1,m+1}
///          · ∏_{l=m+2, odd}^{n−1} S_{m−1,l,l+1} S_{m−2,l,l+1} S_{m−3,l,l+1}
///          · ∏_{k=m}^{n−3} ∏_{l=k+2, odd}^{n−1} S_{k+1,l,l+1}
///          · ∏_{k=1}^{m−4} ( (S_{k,k+1,k+2} S_{k,k+1,m−1} S_{k,k+1,m+1})^{k mod 2}
///                            · ∏_{l=k+2, even}^{m−2} S_{k,l,l+1}
///                            · ∏_{l=m+2, odd}^{n−1} S_{k,l,l+1} )
/// ```
///
/// For `m ∈ {1, 3}` the leading factors collapse to `1` by the literal
/// conventions and the formula reduces to the dedicated small-`m` displays
/// used by the oracle route — an equality that contract (b) of
/// [`oracle_check_reports`] asserts exactly.
///
/// # Errors
///
/// As for [`main_x`].
pub fn main_s(table: &MeasurementTable, m: i64, n: i64) -> Result<ExactRational, IdentityError> {
    validate_alternating_args(table, m, n)?;
    let s = |i: i64, j: i64, k: i64| -> Result<ExactRational, IdentityError> {
        Ok(table.s(i, j, k)?)
    };
    let fan_tail = |from: i64| -> Result<ExactRational, IdentityError> {
        let mut product = ExactRational::one();
        for k in from..=(n - 3) {
            product *= &parity_product(k + 2, n - 1, 1, |l| s(k + 1, l, l + 1))?;
        }
        Ok(product)
    };

    if m % 2 == 0 {
        let mut head = ExactRational::one();
        for k in 1..=(m - 1) {
            head *= &parity_product(k + 1, m - 2, 0, |l| s(k, l, l + 1))?;
            head *= &parity_product(m + 1, n - 1, 1, |l| s(k, l, l + 1))?;
        }
        Ok(head * fan_tail(m)?)
    } else {
        let head = s(m - 2, m - 1, m + 1)?;
        let fan = parity_product(m + 2, n - 1, 1, |l| {
            Ok(s(m - 1, l, l + 1)? * s(m - 2, l, l + 1)? * s(m - 3, l, l + 1)?)
        })?;
        let mut bracket = ExactRational::one();
        for k in 1..=(m - 4) {
            if k % 2 == 1 {
                bracket *= &(s(k, k + 1, k + 2)? * s(k, k + 1, m - 1)? * s(k, k + 1, m + 1)?);
            }
            bracket *= &parity_product(k + 2, m - 2, 0, |l| s(k, l, l + 1))?;
            bracket *= &parity_product(m + 2, n - 1, 1, |l| s(k, l, l + 1))?;
        }
        Ok(head * fan * fan_tail(m)? * bracket)
    }
}

/// Evaluates `Σ_{m=1}^{n} (−1)^{m+1} · x(m) · S(m)` exactly.
///
/// The report holds exactly when the sum is the rational number zero,
/// which is the case whenever `polygon` is cyclic with anticlockwise
/// ordering.
///
/// # Errors
///
/// [`IdentityError::UnsupportedPolygonSize`] when the polygon has an odd
/// number of vertices or at most 4.
pub fn check_main_theorem(polygon: &Polygon) -> Result<CheckReport, IdentityError> {
    let n = polygon.n() as i64;
    if n <= 4 || n % 2 != 0 {
        return Err(IdentityError::UnsupportedPolygonSize { n: polygon.n() });
    }
    let table = build_table(polygon);
    let mut sum = ExactRational::zero();
    for m in 1..=n {
        let term = main_x(&table, m, n)? * main_s(&table, m, n)?;
        if m % 2 == 1 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    Ok(CheckReport::exact("main-theorem", &[("n", n)], vec![sum]))
}

/// The chord-product denominator `X(m)`: `R^{−((n−2)/2)²}` times an edge
/// monomial, piecewise by the parity of `m`.
///
/// ```text
/// m even:  ∏_{l=m+1, odd}^{n−1} x_{l,l+1}^{(l−3)/2} · ∏_{l=4, even}^{m−2} x_{l,l+1}^{(l−2)/2}
/// m odd:   x_12^a · ∏_{l=m+2, odd}^{n−1} x_{l,l+1}^{(l−3)/2}
///              · ∏_{l=3, odd}^{m−4} x_{l,l+1} · ∏_{l=4, even}^{m−3} x_{l,l+1}^{(l−2)/2}
/// ```
///
/// with `a = 0` for `m ∈ {1,3}` and `a = 1` for odd `m ≥ 5` — note the
/// flag is inverted relative to [`main_x`], which is what makes
/// `X(1) = X(3)` while `x(1) = x(3)` carries the `x_12` factor instead.
fn chord_denominator(
    table: &MeasurementTable,
    m: i64,
    n: i64,
) -> Result<RMonomial, IdentityError> {
    validate_alternating_args(table, m, n)?;
    let xp = |i: i64, j: i64, p: i64| -> Result<ExactRational, IdentityError> {
        Ok(table.x_pow(i, j, p)?)
    };

    let value = if m % 2 == 0 {
        parity_product(m + 1, n - 1, 1, |l| xp(l, l + 1, (l - 3) / 2))?
            * parity_product(4, m - 2, 0, |l| xp(l, l + 1, (l - 2) / 2))?
    } else {
        let a = i64::from(m >= 5);
        xp(1, 2, a)?
            * parity_product(m + 2, n - 1, 1, |l| xp(l, l + 1, (l - 3) / 2))?
            * parity_product(3, m - 4, 1, |l| xp(l, l + 1, 1))?
            * parity_product(4, m - 3, 0, |l| xp(l, l + 1, (l - 2) / 2))?
    };
    Ok(RMonomial {
        value,
        r_power: -radius_exponent(n),
    })
}

/// The common exponent `((n−2)/2)²` appearing in every `X(m)` and in `L`.
fn radius_exponent(n: i64) -> i64 {
    let half = (n - 2) / 2;
    half * half
}

/// The least common multiple `L` of the `X(m)`:
///
/// ```text
/// L = R^{−((n−2)/2)²} · x_12 · x_34^b · ∏_{l=4, even}^{n−2} x_{l,l+1}^{(l−2)/2}
///         · ∏_{l=5, odd}^{n−1} x_{l,l+1}^{(l−3)/2}
/// ```
///
/// with `b = 0` for `n = 6` and `b = 1` for `n ≥ 8`.
fn chord_denominator_lcm(table: &MeasurementTable, n: i64) -> Result<RMonomial, IdentityError> {
    let xp = |i: i64, j: i64, p: i64| -> Result<ExactRational, IdentityError> {
        Ok(table.x_pow(i, j, p)?)
    };
    let b = i64::from(n >= 8);
    let value = xp(1, 2, 1)?
        * xp(3, 4, b)?
        * parity_product(4, n - 2, 0, |l| xp(l, l + 1, (l - 2) / 2))?
        * parity_product(5, n - 1, 1, |l| xp(l, l + 1, (l - 3) / 2))?;
    Ok(RMonomial {
        value,
        r_power: -radius_exponent(n),
    })
}

/// The chord-product numerator `S(m)` along the oracle route.
///
/// For even `m` and for odd `m ≥ 5` this is the display also used by
/// [`main_s`] (for even `m` with the inner bound written as `m−1`, which
/// selects the same even values as `m−2`).  For `m ∈ {1, 3}` it uses the
/// dedicated small-`m` displays
///
/// ```text
/// S(1) = ∏_{k=1}^{n−3} ∏_{l=k+2, odd}^{n−1} S_{k+1,l,l+1}
/// S(3) = S_{1,2,4} · ∏_{l=5, odd}^{n−1} S_{1,l,l+1} S_{2,l,l+1}
///          · ∏_{k=3}^{n−3} ∏_{l=k+2, odd}^{n−1} S_{k+1,l,l+1}
/// ```
///
/// so that agreement with [`main_s`] at `m ∈ {1, 3}` genuinely tests the
/// literal-index collapse of the general formula.
fn chord_numerator(table: &MeasurementTable, m: i64, n: i64) -> Result<ExactRational, IdentityError> {
    validate_alternating_args(table, m, n)?;
    let s = |i: i64, j: i64, k: i64| -> Result<ExactRational, IdentityError> {
        Ok(table.s(i, j, k)?)
    };
    let fan_tail = |from: i64| -> Result<ExactRational, IdentityError> {
        let mut product = ExactRational::one();
        for k in from..=(n - 3) {
            product *= &parity_product(k + 2, n - 1, 1, |l| s(k + 1, l, l + 1))?;
        }
        Ok(product)
    };

    if m == 1 {
        fan_tail(1)
    } else if m == 3 {
        let pairs = parity_product(5, n - 1, 1, |l| Ok(s(1, l, l + 1)? * s(2, l, l + 1)?))?;
        Ok(s(1, 2, 4)? * pairs * fan_tail(3)?)
    } else if m % 2 == 0 {
        let mut head = ExactRational::one();
        for k in 1..=(m - 1) {
            head *= &parity_product(k + 1, m - 1, 0, |l| s(k, l, l + 1))?;
            head *= &parity_product(m + 1, n - 1, 1, |l| s(k, l, l + 1))?;
        }
        Ok(head * fan_tail(m)?)
    } else {
        main_s(table, m, n)
    }
}

/// The chord product `δ(m) = ∏_{i<j, i,j≠m} √x_ij` in floating point —
/// the product of the lengths of all chords and edges avoiding vertex
/// `A_m` (with `m` expected in `1..=n`).
pub fn oracle_delta(polygon: &Polygon, m: i64) -> f64 {
    debug_assert!(m >= 1 && m <= polygon.n() as i64, "m must be a vertex index");
    let vertices = polygon.vertices();
    let n = polygon.n() as i64;
    let mut product = 1.0;
    for i in 1..=n {
        for j in (i + 1)..=n {
            if i == m || j == m {
                continue;
            }
            let x = squared_distance_between(
                &vertices[(i - 1) as usize],
                &vertices[(j - 1) as usize],
            );
            product *= x.to_f64().sqrt();
        }
    }
    product
}

/// The `X(m)`, `S(m)`, `L` monomials of the chord-product decomposition
/// for `polygon`.
///
/// # Errors
///
/// [`IdentityError::MissingCircumradius`] when the polygon carries no
/// circle data (the oracle needs a rational `R` to substitute);
/// [`IdentityError::UnsupportedPolygonSize`] / [`IdentityError::ParamOutOfRange`]
/// as for [`main_x`].
pub fn oracle_xsl(polygon: &Polygon, m: i64) -> Result<OracleMonomials, IdentityError> {
    if polygon.cyclic_data().is_none() {
        return Err(IdentityError::MissingCircumradius);
    }
    let n = polygon.n() as i64;
    let table = build_table(polygon);
    Ok(OracleMonomials {
        x: chord_denominator(&table, m, n)?,
        s: chord_numerator(&table, m, n)?,
        l: chord_denominator_lcm(&table, n)?,
    })
}

/// Runs the full oracle suite for `polygon` and packages it as reports:
///
/// * `oracle-exact {m}` — exact contracts (a) `L/X(m) − x(m)` and (b)
///   `S(m)_oracle − S(m)`, two rational residuals each;
/// * `oracle {m}` — float contract (c), the residual
///   `S(m)/X(m) − δ(m)` judged relative to `δ(m)`;
/// * `oracle-sum` — the alternating sum `Σ (−1)^{m+1} δ(m)`, judged
///   relative to the largest `|δ(m)|`.
///
/// # Errors
///
/// As for [`oracle_xsl`]; additionally
/// [`IdentityError::UnsupportedPolygonSize`] when `n` is odd or at most 4.
pub fn oracle_check_reports(polygon: &Polygon) -> Result<Vec<CheckReport>, IdentityError> {
    let n = polygon.n() as i64;
    if n <= 4 || n % 2 != 0 {
        return Err(IdentityError::UnsupportedPolygonSize { n: polygon.n() });
    }
    let radius = polygon
        .cyclic_data()
        .ok_or(IdentityError::MissingCircumradius)?
        .radius
        .clone();
    let table = build_table(polygon);

    let mut reports = Vec::with_capacity(2 * n as usize + 1);
    let mut deltas = Vec::with_capacity(n as usize);
    for m in 1..=n {
        let x = chord_denominator(&table, m, n)?;
        let s = chord_numerator(&table, m, n)?;
        let l = chord_denominator_lcm(&table, n)?;
        let delta = oracle_delta(polygon, m);
        deltas.push(delta);

        debug_assert_eq!(x.r_power, l.r_power, "X(m) and L share the R power");
        match l.value.checked_div(&x.value) {
            Ok(quotient) => {
                let residual_a = quotient - main_x(&table, m, n)?;
                let residual_b = &s - &main_s(&table, m, n)?;
                reports.push(CheckReport::exact(
                    "oracle-exact",
                    &[("m", m)],
                    vec![residual_a, residual_b],
                ));
                let ratio = s.to_f64() / x.evaluate(&radius);
                reports.push(CheckReport::float(
                    "oracle",
                    &[("m", m)],
                    vec![ratio - delta],
                    delta,
                ));
            }
            Err(_) => {
                // A vanishing X(m) means a repeated vertex; the quotient
                // contracts are undefined there rather than violated.
                reports.push(CheckReport::skipped(
                    "oracle-exact",
                    &[("m", m)],
                    "X(m) vanishes (degenerate polygon); quotient contracts undefined",
                ));
                reports.push(CheckReport::skipped(
                    "oracle",
                    &[("m", m)],
                    "X(m) vanishes (degenerate polygon); quotient contracts undefined",
                ));
            }
        }
    }

    let alternating_sum = deltas
        .iter()
        .enumerate()
        .map(|(index, delta)| if index % 2 == 0 { *delta } else { -*delta })
        .sum::<f64>();
    let scale = deltas.iter().fold(0.0f64, |acc, d| acc.max(d.abs()));
    reports.push(CheckReport::float(
        "oracle-sum",
        &[("n", n)],
        vec![alternating_sum],
        scale,
    ));
    Ok(reports)
}
