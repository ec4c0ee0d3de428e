//! Property suites over randomly generated instances.
//!
//! Most of the verified identities are exact polynomial identities in the
//! vertex coordinates, so they must hold for *arbitrary* rational polygons —
//! degenerate, self-intersecting, or collinear ones included. These
//! properties pin that down, alongside generator-driven checks of the exact
//! arithmetic kernel and the construction invariants of rational circle
//! points.

use heronian_frieze::frieze::{build_plane_frieze, verify_diamond};
use heronian_frieze::geometry::{
    circle_point, random_cyclic_polygon, squared_distance_between, Point, Polygon,
};
use heronian_frieze::identities::{check_det3, check_ptolemy_s, main_x};
use heronian_frieze::measurements::{build_table, heron_h};
use heronian_frieze::rational::{det_exact, rat, ExactRational};
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = ExactRational> {
    (-60i64..=60, 1i64..=24).prop_map(|(num, den)| rat(num, den).expect("positive denominator"))
}

fn arb_point() -> impl Strategy<Value = Point> {
    (arb_rational(), arb_rational()).prop_map(|(x, y)| Point::new(x, y))
}

/// Arbitrary polygons with 3 to `max_n` vertices; coincident and collinear
/// vertices are deliberately allowed.
fn arb_polygon(max_n: usize) -> impl Strategy<Value = Polygon> {
    prop::collection::vec(arb_point(), 3..=max_n)
        .prop_map(|vertices| Polygon::from_vertices(vertices).expect("at least 3 vertices"))
}

proptest! {
    #[test]
    fn rationals_satisfy_the_field_axioms(
        a in arb_rational(),
        b in arb_rational(),
        c in arb_rational(),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.checked_div(&a).unwrap(), ExactRational::one());
        }
    }

    #[test]
    fn determinants_are_alternating_and_multilinear(
        rows in prop::collection::vec(prop::collection::vec(arb_rational(), 4), 4),
        scale in arb_rational(),
    ) {
        let det = det_exact(&rows).unwrap();

        let mut swapped = rows.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(det_exact(&swapped).unwrap(), -&det, "row swap negates");

        let mut repeated = rows.clone();
        repeated[1] = rows[0].clone();
        prop_assert!(
            det_exact(&repeated).unwrap().is_zero(),
            "equal rows vanish"
        );

        let mut scaled = rows.clone();
        scaled[3] = scaled[3].iter().map(|v| &scale * v).collect();
        prop_assert_eq!(
            det_exact(&scaled).unwrap(),
            &scale * &det,
            "scaling one row scales the determinant"
        );
    }

    #[test]
    fn circle_points_lie_exactly_on_their_circle(
        t in arb_rational(),
        radius in (1i64..=20, 1i64..=10).prop_map(|(n, d)| rat(n, d).unwrap()),
        center in arb_point(),
    ) {
        let point = circle_point(&t, &radius, &center);
        prop_assert_eq!(
            squared_distance_between(&point, &center),
            &radius * &radius,
            "tangent half-angle parametrization is exactly on-circle"
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn measurements_have_the_stated_symmetries(polygon in arb_polygon(7)) {
        let table = build_table(&polygon);
        let shift = Point::new(rat(13, 7).unwrap(), rat(-5, 3).unwrap());
        let shifted = Polygon::from_vertices(
            polygon
                .vertices()
                .iter()
                .map(|p| Point::new(&p.x + &shift.x, &p.y + &shift.y))
                .collect(),
        )
        .unwrap();
        let shifted_table = build_table(&shifted);

        let n = polygon.n() as i64;
        for i in 1..=n {
            for j in 1..=n {
                prop_assert_eq!(
                    table.x_cyclic(i, j),
                    table.x_cyclic(j, i),
                    "squared distance is symmetric"
                );
                prop_assert_eq!(
                    table.x_cyclic(i, j),
                    shifted_table.x_cyclic(i, j),
                    "squared distance is translation invariant"
                );
                for k in 1..=n {
                    let s = table.s_cyclic(i, j, k);
                    prop_assert_eq!(
                        &s,
                        &table.s_cyclic(j, k, i),
                        "area is invariant under cyclic label rotation"
                    );
                    prop_assert_eq!(
                        &s,
                        &(-&table.s_cyclic(j, i, k)),
                        "area is antisymmetric under a transposition"
                    );
                    prop_assert_eq!(
                        &s,
                        &shifted_table.s_cyclic(i, j, k),
                        "area is translation invariant"
                    );
                    prop_assert_eq!(
                        &(&s * &s),
                        &heron_h(
                            &table.x_cyclic(i, j),
                            &table.x_cyclic(j, k),
                            &table.x_cyclic(i, k),
                        ),
                        "squared area is the Heron form of the three sides"
                    );
                }
            }
        }
    }

    #[test]
    fn diamond_equations_hold_for_arbitrary_polygons(polygon in arb_polygon(9)) {
        let plane = build_plane_frieze(&build_table(&polygon));
        let n = polygon.n() as i64;
        for a in 1..=n {
            for b in 1..=n {
                let diamond = plane.frieze().diamond(a, b);
                prop_assert!(
                    verify_diamond(&diamond).iter().all(ExactRational::is_zero),
                    "diamond ({a}, {b}) must satisfy all seven equations"
                );
            }
        }
        for diamond in plane.gluing_diamonds() {
            prop_assert!(diamond.is_heronian(), "gluing diamonds are Heronian");
        }
    }

    #[test]
    fn first_diamond_determinant_expands_to_the_product_relation(
        polygon in arb_polygon(8),
    ) {
        // The expansion is a polynomial identity in coordinates, so it holds
        // whether or not the polygon is cyclic — only the *vanishing* needs
        // the circle.
        let table = build_table(&polygon);
        let n = polygon.n();
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in (j + 1)..=n {
                    for l in (k + 1)..=n {
                        let det = check_det3(&table, i, j, k, l).unwrap();
                        let ptolemy = check_ptolemy_s(&table, i, j, k, l).unwrap();
                        prop_assert_eq!(
                            &det.residuals.as_exact().unwrap()[0],
                            &ptolemy.residuals.as_exact().unwrap()[0],
                            "det #1 must equal the four-term product residual"
                        );
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn odd_case_monomials_collapse_at_m_equal_1_and_3(
        n in prop::sample::select(vec![6usize, 8, 10]),
        seed in any::<u64>(),
        radius in (1i64..=8, 1i64..=4).prop_map(|(num, den)| rat(num, den).unwrap()),
    ) {
        let polygon = random_cyclic_polygon(n, seed, radius).unwrap();
        let table = build_table(&polygon);
        prop_assert_eq!(
            main_x(&table, 1, n as i64).unwrap(),
            main_x(&table, 3, n as i64).unwrap(),
            "x(1) and x(3) are the same monomial"
        );
    }

    #[test]
    fn polygon_json_round_trips(polygon in arb_polygon(8)) {
        let parsed = Polygon::from_json(&polygon.to_json()).unwrap();
        prop_assert_eq!(parsed, polygon);
    }
}
