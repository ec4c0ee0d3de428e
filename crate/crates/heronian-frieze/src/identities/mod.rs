//! Exact verification of the measurement identities of cyclic polygons.
//!
//! A cyclic polygon's squared chord lengths `x_ij` and four-fold signed
//! areas `S_ijk` satisfy a web of algebraic identities — per-quadruple
//! product relations and singular 3×3 matrices ([`determinants`]), fan
//! relations along triangle fans ([`chords`]), chord-power matrices of the
//! plane frieze ([`determinants`]), and one global alternating-sum identity
//! with a floating-point chord-product oracle ([`alternating`]).  Each
//! check computes residuals in exact rational arithmetic (except the
//! oracle, which is the one deliberately-approximate cross-check) and
//! packages them as a [`CheckReport`].
//!
//! # Orchestration and gating
//!
//! The individual `check_*` functions validate *index structure* only and
//! compute unconditionally; calling them on a polygon that is not cyclic
//! anticlockwise is how non-vacuity controls obtain nonzero residuals.
//! Hypothesis gating lives in [`run_all_checks`]:
//!
//! * the orientation gate always applies — on a polygon that is not
//!   strictly anticlockwise, every circle identity is reported as skipped;
//! * the concyclicity gate (an exact circumcircle test) applies unless
//!   [`CheckOptions::assume_cyclic`] is set.  Explicitly selecting a check
//!   with `assume_cyclic` runs it off-hypothesis and reports honest
//!   `violated` verdicts, which is what a perturbation control wants;
//!   selecting `all` without it skips the circle identities on non-cyclic
//!   input instead of drowning the report in expected failures.
//!
//! The diamond equations hold for *every* polygon, so the `diamonds` check
//! is never gated.
//!
//! Reports are sorted by `(identity, params)`, so the output order is
//! deterministic no matter how the checks execute.
//!
//! ```
//! use heronian_frieze::geometry::random_cyclic_polygon;
//! use heronian_frieze::identities::{run_all_checks, CheckOptions, Selection};
//! use heronian_frieze::rat;
//!
//! let polygon = random_cyclic_polygon(6, 1, rat(1, 1)?)?;
//! let reports = run_all_checks(&polygon, &[Selection::All], &CheckOptions::default());
//! assert!(reports.iter().all(|r| !r.is_violated()));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

mod alternating;
mod chords;
mod determinants;
mod report;

pub use alternating::{
    check_main_theorem, main_s, main_x, oracle_check_reports, oracle_delta, oracle_xsl,
    OracleMonomials, RMonomial,
};
pub use chords::{check_chord_relation, check_cor_chord};
pub use determinants::{check_cor_diamonds, check_det3, check_plane_det, check_ptolemy_s};
pub use report::{
    params_map, sort_reports, CheckParams, CheckReport, Residuals, Verdict,
    ORACLE_RELATIVE_TOLERANCE,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::frieze::{build_frieze, verify_diamond};
use crate::geometry::{check_orientation, Polygon};
use crate::measurements::{build_table, MeasurementError, MeasurementTable};

/// Largest `n` for which exhaustive families (vertex quadruples, fan
/// triples) are fully enumerated; above it, [`CheckOptions::budget`]
/// uniformly sampled cases are checked instead.
pub const FULL_ENUMERATION_LIMIT: usize = 10;

/// Ways an identity check can reject its arguments.
#[derive(Debug, Error)]
pub enum IdentityError {
    /// Quadruple indices must satisfy `1 ≤ i < j < k < l ≤ n`.
    #[error("quadruple ({i}, {j}, {k}, {l}) must be strictly increasing within 1..={n}")]
    InvalidQuadruple {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        n: usize,
    },
    /// The fan relation spans a whole `(m+1)`-gon.
    #[error("the fan relation needs m >= 2 and m + 1 = n; got m = {m} on an {n}-gon")]
    ChordArity { m: i64, n: usize },
    /// A scalar parameter fell outside its documented range.
    #[error("parameter {name} = {value} is outside {low}..={high}")]
    ParamOutOfRange {
        name: &'static str,
        value: i64,
        low: i64,
        high: i64,
    },
    /// Relabeled fan indices must be pairwise distinct modulo `n`.
    #[error("indices {indices:?} are not pairwise distinct modulo {n}")]
    IndicesNotDistinct { indices: Vec<i64>, n: usize },
    /// The alternating-sum identity is stated for even `n > 4`.
    #[error("the alternating-sum identity needs an even vertex count above 4, got n = {n}")]
    UnsupportedPolygonSize { n: usize },
    /// A formula was asked about a different `n` than the table holds.
    #[error("formula size n = {given} does not match the polygon's {actual} vertices")]
    PolygonSizeMismatch { given: i64, actual: usize },
    /// The oracle substitutes a numeric circumradius, which only cyclic
    /// constructions carry.
    #[error("the chord-product oracle needs a polygon with rational circumradius data")]
    MissingCircumradius,
    /// An unknown tag was passed to `--select`.
    #[error("unknown identity tag {tag:?}; expected one of {}", Selection::TAGS.join(", "))]
    UnknownSelection { tag: String },
    /// An index lookup failed (out-of-range literal index).
    #[error(transparent)]
    Measurement(#[from] MeasurementError),
}

/// The selectable identity families.
///
/// Each tag names the family of reports it produces; `det3` additionally
/// produces the `ptolemy-s` reports (the four-term relation is the
/// expansion of the first determinant, and the two are verified together).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Selection {
    /// The seven diamond equations on every diamond of the plane frieze.
    Diamonds,
    /// Per-quadruple determinants plus the four-term product relation.
    Det3,
    /// The per-diamond determinant identities on all ordered pairs.
    CorDiamonds,
    /// The fan relation on the whole polygon.
    Chord,
    /// The relabeled fan relation on sampled or enumerated `(m, q, r)`.
    CorChord,
    /// Chord-power matrix determinants for every even `d`.
    PlaneDet,
    /// The global alternating-sum identity.
    MainTheorem,
    /// The chord-product oracle suite (exact and floating contracts).
    Oracle,
    /// Everything above.
    All,
}

impl Selection {
    /// All valid selection tags, in the spelling `--select` accepts.
    pub const TAGS: [&'static str; 9] = [
        "diamonds",
        "det3",
        "cor-diamonds",
        "chord",
        "cor-chord",
        "plane-det",
        "main-theorem",
        "oracle",
        "all",
    ];

    const CONCRETE: [Selection; 8] = [
        Selection::Diamonds,
        Selection::Det3,
        Selection::CorDiamonds,
        Selection::Chord,
        Selection::CorChord,
        Selection::PlaneDet,
        Selection::MainTheorem,
        Selection::Oracle,
    ];

    fn tag(self) -> &'static str {
        match self {
            Selection::Diamonds => "diamonds",
            Selection::Det3 => "det3",
            Selection::CorDiamonds => "cor-diamonds",
            Selection::Chord => "chord",
            Selection::CorChord => "cor-chord",
            Selection::PlaneDet => "plane-det",
            Selection::MainTheorem => "main-theorem",
            Selection::Oracle => "oracle",
            Selection::All => "all",
        }
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Selection {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Selection::CONCRETE
            .iter()
            .copied()
            .chain([Selection::All])
            .find(|selection| selection.tag() == s)
            .ok_or_else(|| IdentityError::UnknownSelection { tag: s.to_owned() })
    }
}

/// Tuning knobs for [`run_all_checks`].
#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Number of cases checked per exhaustive family when the polygon
    /// exceeds [`FULL_ENUMERATION_LIMIT`] vertices.
    pub budget: usize,
    /// Seed for the sampling of large families; all randomness flows from
    /// here.
    pub seed: u64,
    /// Skip the concyclicity gate and run the circle identities even on
    /// input that fails the exact circumcircle test (the orientation gate
    /// still applies).
    pub assume_cyclic: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: 500,
            seed: 0,
            assume_cyclic: false,
        }
    }
}

/// Runs every selected identity check whose hypotheses `polygon`
/// satisfies; inapplicable checks are reported as skipped with the failed
/// hypothesis named.  Returns reports sorted by `(identity, params)`.
///
/// See the module docs for the gating rules and [`CheckOptions`] for the
/// sampling budget.
pub fn run_all_checks(
    polygon: &Polygon,
    selection: &[Selection],
    options: &CheckOptions,
) -> Vec<CheckReport> {
    let mut selected: BTreeSet<Selection> = BTreeSet::new();
    for tag in selection {
        match tag {
            Selection::All => selected.extend(Selection::CONCRETE),
            concrete => {
                selected.insert(*concrete);
            }
        }
    }
    if selected.is_empty() {
        return Vec::new();
    }

    let n = polygon.n();
    let table = build_table(polygon);

    // The circle identities need a strictly anticlockwise vertex order and
    // (unless the caller vouches for it) an exact circumcircle.
    let gate: Result<(), String> = match check_orientation(polygon) {
        Ok(report) if report.is_strictly_anticlockwise() => {
            if options.assume_cyclic || polygon.is_concyclic() {
                Ok(())
            } else {
                Err("polygon is not concyclic".to_owned())
            }
        }
        Ok(report) => Err(format!(
            "polygon is not strictly anticlockwise ({})",
            report.orientation
        )),
        Err(error) => Err(format!("orientation undefined: {error}")),
    };

    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let mut reports: Vec<CheckReport> = Vec::new();
    let skip = |reports: &mut Vec<CheckReport>, identity: &str, reason: &str| {
        reports.push(CheckReport::skipped(identity, &[], reason));
    };

    for check in selected {
        match (check, &gate) {
            (Selection::Diamonds, _) => {
                // Diamond equations hold for arbitrary polygons: no gate.
                let frieze = build_frieze(&table);
                for a in 1..=n as i64 {
                    for b in 1..=n as i64 {
                        let diamond = frieze.diamond(a, b);
                        let residuals = verify_diamond(&diamond).to_vec();
                        reports.push(CheckReport::exact(
                            "diamonds",
                            &[("a", a), ("b", b)],
                            residuals,
                        ));
                    }
                }
            }
            (Selection::Det3, Ok(())) => {
                for (i, j, k, l) in quadruple_cases(n, options, &mut rng) {
                    let det = check_det3(&table, i, j, k, l)
                        .expect("enumerated quadruples are strictly increasing");
                    reports.push(det);
                    let ptolemy = check_ptolemy_s(&table, i, j, k, l)
                        .expect("enumerated quadruples are strictly increasing");
                    reports.push(ptolemy);
                }
            }
            (Selection::Det3, Err(reason)) => {
                skip(&mut reports, "det3", reason);
                skip(&mut reports, "ptolemy-s", reason);
            }
            (Selection::CorDiamonds, Ok(())) => {
                reports.extend(check_cor_diamonds(polygon));
            }
            (Selection::CorDiamonds, Err(reason)) => {
                skip(&mut reports, "cor-diamonds", reason);
            }
            (Selection::Chord, Ok(())) => match check_chord_relation(&table, n as i64 - 1) {
                Ok(report) => reports.push(report),
                Err(error) => skip(&mut reports, "chord", &error.to_string()),
            },
            (Selection::Chord, Err(reason)) => {
                skip(&mut reports, "chord", reason);
            }
            (Selection::CorChord, Ok(())) => {
                reports.extend(cor_chord_cases(&table, options, &mut rng));
            }
            (Selection::CorChord, Err(reason)) => {
                skip(&mut reports, "cor-chord", reason);
            }
            (Selection::PlaneDet, Ok(())) => {
                for d in (0..=n.saturating_sub(2) as i64).step_by(2) {
                    let report = check_plane_det(polygon, d)
                        .expect("even d within 0..=n-2 is always accepted");
                    reports.push(report);
                }
            }
            (Selection::PlaneDet, Err(reason)) => {
                skip(&mut reports, "plane-det", reason);
            }
            (Selection::MainTheorem, Ok(())) => match check_main_theorem(polygon) {
                Ok(report) => reports.push(report),
                Err(error) => skip(&mut reports, "main-theorem", &error.to_string()),
            },
            (Selection::MainTheorem, Err(reason)) => {
                skip(&mut reports, "main-theorem", reason);
            }
            (Selection::Oracle, Ok(())) => match oracle_check_reports(polygon) {
                Ok(suite) => reports.extend(suite),
                Err(error) => skip(&mut reports, "oracle", &error.to_string()),
            },
            (Selection::Oracle, Err(reason)) => {
                skip(&mut reports, "oracle", reason);
            }
            (Selection::All, _) => unreachable!("All was expanded above"),
        }
    }

    sort_reports(&mut reports);
    reports
}

/// The quadruples `1 ≤ i < j < k < l ≤ n` to check: all of them up to
/// [`FULL_ENUMERATION_LIMIT`], otherwise `budget` distinct samples drawn
/// uniformly.
fn quadruple_cases(
    n: usize,
    options: &CheckOptions,
    rng: &mut ChaCha8Rng,
) -> Vec<(usize, usize, usize, usize)> {
    let total: u64 = if n >= 4 {
        let n = n as u64;
        n * (n - 1) * (n - 2) * (n - 3) / 24
    } else {
        0
    };
    if n <= FULL_ENUMERATION_LIMIT || (options.budget as u64) >= total {
        let mut cases = Vec::with_capacity(total as usize);
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in (j + 1)..=n {
                    for l in (k + 1)..=n {
                        cases.push((i, j, k, l));
                    }
                }
            }
        }
        return cases;
    }

    let mut chosen: BTreeSet<(usize, usize, usize, usize)> = BTreeSet::new();
    while chosen.len() < options.budget {
        let mut picks: Vec<usize> = sample(rng, n, 4).into_iter().map(|v| v + 1).collect();
        picks.sort_unstable();
        chosen.insert((picks[0], picks[1], picks[2], picks[3]));
    }
    chosen.into_iter().collect()
}

/// The `(m, q, r)` fan cases to check: every valid triple up to
/// [`FULL_ENUMERATION_LIMIT`], otherwise `budget` distinct valid samples.
/// Invalid triples (clashing indices) are the check's error path, not
/// reportable cases, so they are filtered out here.
fn cor_chord_cases(
    table: &MeasurementTable,
    options: &CheckOptions,
    rng: &mut ChaCha8Rng,
) -> Vec<CheckReport> {
    let n = table.n() as i64;
    if table.n() <= FULL_ENUMERATION_LIMIT {
        let mut reports = Vec::new();
        for m in 2..=(n - 1) {
            for q in 1..=n {
                for r in 1..=n {
                    if let Ok(report) = check_cor_chord(table, m, q, r) {
                        reports.push(report);
                    }
                }
            }
        }
        return reports;
    }

    let mut chosen: BTreeSet<(i64, i64, i64)> = BTreeSet::new();
    let mut reports = Vec::new();
    // A rejection cap keeps this loop finite even under adversarial
    // budgets; with m ≤ n−1 most triples are valid, so it never binds in
    // practice.
    let mut attempts = options.budget.saturating_mul(50) + 1000;
    while chosen.len() < options.budget && attempts > 0 {
        attempts -= 1;
        let m = rng.gen_range(2..=(n - 1));
        let q = rng.gen_range(1..=n);
        let r = rng.gen_range(1..=n);
        if chosen.contains(&(m, q, r)) {
            continue;
        }
        if let Ok(report) = check_cor_chord(table, m, q, r) {
            chosen.insert((m, q, r));
            reports.push(report);
        }
    }
    reports
}
