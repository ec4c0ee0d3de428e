//! Chord–area product relations along a fan of triangles.
//!
//! For a cyclic polygon `A_1, …, A_{m+1}` with anticlockwise ordering, the
//! triangles `A_j A_{j+1} A_{m+1}` fan out from the last vertex and their
//! four-fold areas `S` are tied to the squared chords `x_{k,m+1}` by
//!
//! ```text
//! S_{1,m,m+1} · ∏_{i=2}^{m−1} x_{i,m+1}
//!     = Σ_{j=1}^{m−1} S_{j,j+1,m+1} · ∏_{k ∈ {1..m} \ {j,j+1}} x_{k,m+1}
//! ```
//!
//! The relation is often written with each summand divided by
//! `x_{j,m+1}·x_{j+1,m+1}`; the checks here keep the multiplied-through,
//! division-free form so that every residual is a polynomial in table
//! entries and the verdict needs no nonzero-denominator caveats.
//!
//! [`check_chord_relation`] verifies the relation on a whole `(m+1)`-gon.
//! [`check_cor_chord`] verifies its relabeled form inside a larger cyclic
//! `n`-gon: the fan apex becomes `A_{r+1}`, the fan base runs through the
//! cyclically consecutive vertices `A_q, …, A_{q+m−2}` and then `A_r`, with
//! all indices reduced modulo `n`.  Any rotation of a subset of a cyclic
//! polygon's vertices that preserves the cyclic order is again an
//! anticlockwise cyclic polygon, which is what makes the relabeling sound;
//! the only structural requirement is that the `m+1` reduced indices are
//! pairwise distinct.
//!
//! Like the determinant checks, these functions validate index structure
//! only; concyclicity and orientation gating belongs to the orchestrator.

use std::collections::BTreeSet;

use crate::measurements::MeasurementTable;
use crate::rational::ExactRational;

use super::report::CheckReport;
use super::IdentityError;

/// Checks the fan relation on the full polygon behind `table`, which must
/// be an `(m+1)`-gon.
///
/// The report carries one exact residual (left-hand side minus right-hand
/// side); it vanishes whenever the polygon is cyclic with anticlockwise
/// ordering.  For `m = 2` both sides are the same single term, so the
/// residual is zero for *any* triangle.
///
/// # Errors
///
/// Returns [`IdentityError::ChordArity`] unless `m ≥ 2` and `m + 1` equals
/// the polygon's vertex count.
pub fn check_chord_relation(
    table: &MeasurementTable,
    m: i64,
) -> Result<CheckReport, IdentityError> {
    let n = table.n() as i64;
    if m < 2 || m + 1 != n {
        return Err(IdentityError::ChordArity { m, n: table.n() });
    }

    let apex = m + 1;
    let lhs = (2..=m - 1)
        .map(|i| table.x_cyclic(i, apex))
        .product::<ExactRational>()
        * table.s_cyclic(1, m, apex);
    let rhs = (1..=m - 1)
        .map(|j| {
            (1..=m)
                .filter(|&k| k != j && k != j + 1)
                .map(|k| table.x_cyclic(k, apex))
                .product::<ExactRational>()
                * table.s_cyclic(j, j + 1, apex)
        })
        .sum::<ExactRational>();

    Ok(CheckReport::exact("chord", &[("m", m)], vec![lhs - rhs]))
}

/// Reduces `value` into `1..=n` cyclically.
fn reduce(value: i64, n: i64) -> i64 {
    (value - 1).rem_euclid(n) + 1
}

/// Checks the relabeled fan relation inside the cyclic `n`-gon behind
/// `table`: base vertices `A_q, A_{q+1}, …, A_{q+m−2}` followed by `A_r`,
/// apex `A_{r+1}`, all indices modulo `n`.
///
/// Spelled out, the residual is the difference between
///
/// ```text
/// S_{q,r,r+1} · ∏_{k=q+1}^{q+m−2} x_{k,r+1}
/// ```
///
/// and the sum over the fan triangles `S_{q+j−1,q+j,r+1}` (for
/// `j = 1..m−2`) plus the closing term `S_{q+m−2,r,r+1}`, each multiplied
/// by the chords `x_{·,r+1}` of the base vertices the triangle omits.
///
/// # Errors
///
/// * [`IdentityError::ParamOutOfRange`] unless `2 ≤ m ≤ n−1` and
///   `1 ≤ q, r ≤ n`;
/// * [`IdentityError::IndicesNotDistinct`] when the reduced index list
///   `q, q+1, …, q+m−2, r, r+1` has a repeat (the relabeled vertices would
///   not form an `(m+1)`-gon).
pub fn check_cor_chord(
    table: &MeasurementTable,
    m: i64,
    q: i64,
    r: i64,
) -> Result<CheckReport, IdentityError> {
    let n = table.n() as i64;
    if m < 2 || m > n - 1 {
        return Err(IdentityError::ParamOutOfRange {
            name: "m",
            value: m,
            low: 2,
            high: n - 1,
        });
    }
    for (name, value) in [("q", q), ("r", r)] {
        if value < 1 || value > n {
            return Err(IdentityError::ParamOutOfRange {
                name,
                value,
                low: 1,
                high: n,
            });
        }
    }

    // The relabeled vertex list: positions 1..=m−1 hold the consecutive run
    // starting at q, position m holds r, and position m+1 holds the apex r+1.
    let vertices: Vec<i64> = (0..m - 1)
        .map(|offset| reduce(q + offset, n))
        .chain([reduce(r, n), reduce(r + 1, n)])
        .collect();
    let distinct: BTreeSet<i64> = vertices.iter().copied().collect();
    if distinct.len() != vertices.len() {
        return Err(IdentityError::IndicesNotDistinct {
            indices: vertices,
            n: table.n(),
        });
    }

    let at = |position: i64| vertices[(position - 1) as usize];
    let apex = at(m + 1);
    let lhs = (2..=m - 1)
        .map(|i| table.x_cyclic(at(i), apex))
        .product::<ExactRational>()
        * table.s_cyclic(at(1), at(m), apex);
    let rhs = (1..=m - 1)
        .map(|j| {
            (1..=m)
                .filter(|&k| k != j && k != j + 1)
                .map(|k| table.x_cyclic(at(k), apex))
                .product::<ExactRational>()
                * table.s_cyclic(at(j), at(j + 1), apex)
        })
        .sum::<ExactRational>();

    Ok(CheckReport::exact(
        "cor-chord",
        &[("m", m), ("q", q), ("r", r)],
        vec![lhs - rhs],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::tests::unit_square;
    use crate::geometry::{random_cyclic_polygon, Point, Polygon};
    use crate::identities::report::Verdict;
    use crate::measurements::build_table;
    use crate::rational::rat;

    fn one() -> ExactRational {
        rat(1, 1).unwrap()
    }

    fn raw_polygon(coords: &[(i64, i64)]) -> Polygon {
        let vertices = coords
            .iter()
            .map(|&(x, y)| Point::new(rat(x, 1).unwrap(), rat(y, 1).unwrap()))
            .collect();
        Polygon::from_vertices(vertices).unwrap()
    }

    #[test]
    fn chord_relation_collapses_for_any_triangle() {
        // m = 2: both sides are S_{1,2,3}, so even a non-cyclic triangle
        // satisfies the relation identically.
        let table = build_table(&raw_polygon(&[(0, 0), (5, 1), (2, 7)]));
        let report = check_chord_relation(&table, 2).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
    }

    #[test]
    fn chord_relation_on_the_unit_square_matches_hand_values() {
        let table = build_table(&unit_square());
        // LHS: S_134·x_24 = 4·4 = 16.  RHS: S_124·x_34 + S_234·x_14
        // = 4·2 + 4·2 = 16.
        let sixteen = rat(16, 1).unwrap();
        assert_eq!(table.s(1, 3, 4).unwrap() * table.x(2, 4).unwrap(), sixteen);
        assert_eq!(
            table.s(1, 2, 4).unwrap() * table.x(3, 4).unwrap()
                + table.s(2, 3, 4).unwrap() * table.x(1, 4).unwrap(),
            sixteen
        );
        let report = check_chord_relation(&table, 3).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
    }

    #[test]
    fn chord_relation_holds_on_a_random_cyclic_hexagon() {
        let polygon = random_cyclic_polygon(6, 23, one()).unwrap();
        let report = check_chord_relation(&build_table(&polygon), 5).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
    }

    #[test]
    fn chord_relation_rejects_mismatched_m() {
        let table = build_table(&unit_square());
        for m in [1, 2, 4, 7] {
            assert!(
                matches!(
                    check_chord_relation(&table, m),
                    Err(IdentityError::ChordArity { .. })
                ),
                "m = {m} must be rejected on a square"
            );
        }
    }

    #[test]
    fn chord_relation_detects_a_non_cyclic_pentagon() {
        let polygon = random_cyclic_polygon(5, 23, one()).unwrap();
        let table = build_table(&polygon.scale_vertex(2, &rat(1001, 1000).unwrap()));
        let report = check_chord_relation(&table, 4).unwrap();
        assert_eq!(report.verdict, Verdict::Violated);
    }

    #[test]
    fn cor_chord_reproduces_the_ten_gon_instance() {
        // n = 10, m = 5, q = 3, r = 9: the five base vertices are
        // 3, 4, 5, 6 and 9, the apex is 10.
        let polygon = random_cyclic_polygon(10, 31, one()).unwrap();
        let table = build_table(&polygon);
        let report = check_cor_chord(&table, 5, 3, 9).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
    }

    /// Hand transcription of the n = 10, m = 5, q = 3, r = 9 instance:
    ///
    /// ```text
    /// S_{3,9,10}·x_{4,10}·x_{5,10}·x_{6,10}
    ///   − S_{3,4,10}·x_{5,10}·x_{6,10}·x_{9,10}
    ///   − S_{4,5,10}·x_{3,10}·x_{6,10}·x_{9,10}
    ///   − S_{5,6,10}·x_{3,10}·x_{4,10}·x_{9,10}
    ///   − S_{6,9,10}·x_{3,10}·x_{4,10}·x_{5,10}
    /// ```
    fn ten_gon_instance_by_hand(table: &MeasurementTable) -> ExactRational {
        let x = |i, j| table.x_cyclic(i, j);
        let s = |i, j, k| table.s_cyclic(i, j, k);
        s(3, 9, 10) * x(4, 10) * x(5, 10) * x(6, 10)
            - s(3, 4, 10) * x(5, 10) * x(6, 10) * x(9, 10)
            - s(4, 5, 10) * x(3, 10) * x(6, 10) * x(9, 10)
            - s(5, 6, 10) * x(3, 10) * x(4, 10) * x(9, 10)
            - s(6, 9, 10) * x(3, 10) * x(4, 10) * x(5, 10)
    }

    #[test]
    fn cor_chord_matches_the_hand_transcription_term_for_term() {
        // Off-circle the residual is nonzero, so agreement with the hand
        // transcription pins the index plumbing, not just the final zero.
        let polygon = random_cyclic_polygon(10, 31, one()).unwrap();
        let skewed = polygon.scale_vertex(5, &rat(9, 8).unwrap());
        let table = build_table(&skewed);
        let expected = ten_gon_instance_by_hand(&table);
        assert!(!expected.is_zero(), "fixture must be off-hypothesis");
        let report = check_cor_chord(&table, 5, 3, 9).unwrap();
        assert_eq!(report.residuals.as_exact().unwrap()[0], expected);
    }

    #[test]
    fn cor_chord_collapses_for_m_two_anywhere() {
        let table = build_table(&raw_polygon(&[(0, 0), (4, 1), (5, 4), (1, 6)]));
        for (q, r) in [(1, 2), (1, 3), (3, 1), (4, 2)] {
            let report = check_cor_chord(&table, 2, q, r).unwrap();
            assert_eq!(
                report.verdict,
                Verdict::Holds,
                "m = 2 with (q={q}, r={r}) is a tautology"
            );
        }
    }

    #[test]
    fn cor_chord_handles_wrap_around_indices() {
        // q = 7, m = 4 on an octagon runs through vertices 7, 8, 1 before
        // reaching r = 3, r+1 = 4 — all distinct after reduction.
        let polygon = random_cyclic_polygon(8, 17, one()).unwrap();
        let table = build_table(&polygon);
        let report = check_cor_chord(&table, 4, 7, 3).unwrap();
        assert_eq!(report.verdict, Verdict::Holds);
    }

    #[test]
    fn cor_chord_rejects_clashing_indices() {
        let polygon = random_cyclic_polygon(8, 17, one()).unwrap();
        let table = build_table(&polygon);
        // q-run 3,4,5 collides with r,r+1 = 4,5.
        assert!(matches!(
            check_cor_chord(&table, 4, 3, 4),
            Err(IdentityError::IndicesNotDistinct { .. })
        ));
        // q-run 5,6 equals r,r+1 = 5,6.
        assert!(matches!(
            check_cor_chord(&table, 3, 5, 5),
            Err(IdentityError::IndicesNotDistinct { .. })
        ));
        // The apex wraps onto the start of the q-run: q=1, m=8 uses
        // 1..7 and r=8, r+1=1 clashes.
        assert!(matches!(
            check_cor_chord(&table, 7, 1, 8),
            Err(IdentityError::IndicesNotDistinct { .. })
        ));
    }

    #[test]
    fn cor_chord_rejects_out_of_range_parameters() {
        let polygon = random_cyclic_polygon(8, 17, one()).unwrap();
        let table = build_table(&polygon);
        for (m, q, r) in [(1, 1, 3), (8, 1, 3), (4, 0, 3), (4, 9, 3), (4, 1, 0), (4, 1, 9)] {
            assert!(
                matches!(
                    check_cor_chord(&table, m, q, r),
                    Err(IdentityError::ParamOutOfRange { .. })
                ),
                "(m={m}, q={q}, r={r}) must be rejected"
            );
        }
    }
}
