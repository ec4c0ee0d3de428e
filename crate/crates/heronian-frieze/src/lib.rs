//! Exact verification of Heronian friezes built from rational-coordinate
//! polygons.
//!
//! A polygon with rational vertices carries two families of measurements:
//! squared distances `x_ij` between vertices and four-fold signed triangle
//! areas `S_ijk`. Arranged into a doubly-periodic strip, these form the
//! *polygonal Heronian frieze* of the polygon, whose 10-entry diamonds
//! satisfy a system of seven polynomial equations. When the polygon is
//! *cyclic* — inscribed in a circle, anticlockwise — a family of much deeper
//! identities appears: Ptolemy-style chord relations, vanishing 3×3
//! determinants attached to every diamond, vanishing large determinants of
//! even chord powers, and a long alternating sum of measurement monomials.
//!
//! This crate constructs such polygons with *exactly rational* data (via the
//! tangent half-angle parametrization of the circle), builds their friezes,
//! and verifies every identity above with zero tolerance: each check reduces
//! to an arbitrary-precision rational being exactly `0`. A floating-point
//! chord-product oracle cross-checks the alternating-sum machinery through an
//! independent route (products of chord lengths), the only place a tolerance
//! appears.
//!
//! # Layout
//!
//! * [`rational`] — canonical arbitrary-precision rationals and the exact
//!   determinant kernel.
//! * [`geometry`] — rational points on circles, polygon construction,
//!   orientation and concyclicity tests.
//! * [`measurements`] — the `x`/`S` tables, index-convention layers, and the
//!   Heron form.
//! * [`frieze`] — Heronian diamonds, frieze tables, plane friezes with
//!   gluing diamonds, rendering.
//! * [`identities`] — every circle identity as an exact check with a
//!   structured report, plus the floating-point oracle suite.
//! * [`cli`] — the `gen` / `build` / `render` / `check` command-line front
//!   end.
//!
//! # Example
//!
//! ```
//! use heronian_frieze::geometry::random_cyclic_polygon;
//! use heronian_frieze::measurements::build_table;
//! use heronian_frieze::frieze::{build_plane_frieze, verify_diamond};
//! use heronian_frieze::rational::ExactRational;
//!
//! let polygon = random_cyclic_polygon(6, 42, ExactRational::one()).unwrap();
//! let plane = build_plane_frieze(&build_table(&polygon));
//! for diamond in plane.gluing_diamonds() {
//!     assert!(verify_diamond(diamond).iter().all(|r| r.is_zero()));
//! }
//! ```

#![forbid(unsafe_code)]

pub mod cli;
pub mod frieze;
pub mod geometry;
pub mod identities;
pub mod measurements;
pub mod rational;

pub use frieze::{FriezeTable, HeronianDiamond, PlaneFriezeTable};
pub use geometry::{Point, Polygon};
pub use identities::{run_all_checks, CheckOptions, CheckReport, Selection, Verdict};
pub use measurements::MeasurementTable;
pub use rational::{rat, ExactRational};
