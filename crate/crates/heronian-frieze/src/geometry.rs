//! Rational-coordinate polygons, including exact rational points on circles.
//!
//! Cyclic polygons are built through the tangent half-angle parametrization
//! `t = tan(θ/2)`: for rational `t` and rational radius `R`, the point
//! `(R·(1−t²)/(1+t²), R·2t/(1+t²))` lies exactly on the circle, so every
//! squared distance and signed area downstream is an exact rational and every
//! identity becomes a decidable equality. Strictly increasing `t` sweeps the
//! circle anticlockwise through angles in `(−π, π)`; the single point at
//! angle `π` is unreachable by this parametrization, which is an accepted and
//! documented limitation (rational points are dense on the rest of the
//! circle, and no identity needs that particular point).
//!
//! Polygons built from raw vertex lists carry no circle data; an exact
//! concyclicity test ([`Polygon::is_concyclic`]) lets callers decide whether
//! circle-only identities apply to them.

use crate::rational::{rat, ExactRational};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// Largest polygon [`random_cyclic_polygon`] will generate; the bounded
/// parameter pool (|numerator| ≤ 50, denominator ≤ 20) holds ~1300 distinct
/// rationals, so 200 distinct draws always terminate quickly.
pub const MAX_RANDOM_VERTICES: usize = 200;

/// Numerator bound for randomly drawn circle parameters.
const PARAM_NUMERATOR_BOUND: i64 = 50;
/// Denominator bound for randomly drawn circle parameters.
const PARAM_DENOMINATOR_BOUND: i64 = 20;

/// Errors from polygon construction and validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    /// Fewer than three vertices were supplied.
    #[error("a polygon needs at least 3 vertices, got {got}")]
    TooFewVertices { got: usize },
    /// More vertices were requested than the random generator supports.
    #[error("random polygons support at most {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },
    /// The declared vertex/parameter count does not match the list length.
    #[error("declared n = {n} but {what} has {got} entries")]
    CountMismatch {
        n: usize,
        what: &'static str,
        got: usize,
    },
    /// Circle parameters must be strictly increasing.
    #[error("circle parameters must be strictly increasing: t[{index}] = {value} does not exceed its predecessor")]
    NonIncreasingParams { index: usize, value: String },
    /// The circumradius must be strictly positive.
    #[error("circumradius must be positive, got {got}")]
    NonPositiveRadius { got: String },
    /// A cyclic polygon produced a collinear (zero-area) vertex triple.
    #[error("degenerate cyclic polygon: vertices {i}, {j}, {k} are collinear")]
    DegenerateTriple { i: usize, j: usize, k: usize },
    /// Polygon JSON did not contain exactly one of ("t" with "R") or "vertices".
    #[error("polygon JSON must contain exactly one of (\"t\" with \"R\") or \"vertices\"")]
    AmbiguousForm,
    /// Polygon JSON could not be parsed.
    #[error("invalid polygon JSON: {0}")]
    Parse(String),
}

/// A point of the rational plane.
///
/// Serializes as a two-element array `[x, y]` of rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(ExactRational, ExactRational)", into = "(ExactRational, ExactRational)")]
pub struct Point {
    pub x: ExactRational,
    pub y: ExactRational,
}

impl Point {
    pub fn new(x: ExactRational, y: ExactRational) -> Self {
        Point { x, y }
    }

    /// The origin `(0, 0)`.
    pub fn origin() -> Self {
        Point::new(ExactRational::zero(), ExactRational::zero())
    }
}

impl From<(ExactRational, ExactRational)> for Point {
    fn from((x, y): (ExactRational, ExactRational)) -> Self {
        Point::new(x, y)
    }
}

impl From<Point> for (ExactRational, ExactRational) {
    fn from(p: Point) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Circle data attached to a cyclic polygon: radius, center, and the strictly
/// increasing tangent half-angle parameters that produced the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicData {
    pub radius: ExactRational,
    pub center: Point,
    pub params: Vec<ExactRational>,
}

/// An ordered list of rational-coordinate vertices `A_1, …, A_n`, optionally
/// tagged as cyclic with the circle that produced it.
///
/// Invariants when `cyclic` is present: the vertices are pairwise distinct
/// points exactly on the stored circle, the parameters are strictly
/// increasing, and the vertex order is anticlockwise. All of these follow
/// from construction via [`make_cyclic_polygon`], the only way to obtain a
/// cyclic tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point>,
    cyclic: Option<CyclicData>,
}

/// Orientation of a vertex ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Anticlockwise,
    Clockwise,
    /// The first vertex triple is collinear (only reported for polygons
    /// without circle data; collinear triples on a cyclic polygon are a
    /// construction error instead).
    Degenerate,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Anticlockwise => f.write_str("anticlockwise"),
            Orientation::Clockwise => f.write_str("clockwise"),
            Orientation::Degenerate => f.write_str("degenerate"),
        }
    }
}

/// Outcome of [`check_orientation`]: the verdict plus every vertex triple
/// `i < j < k` whose four-fold signed area is not strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationReport {
    pub orientation: Orientation,
    /// Triples `(i, j, k)` with nonpositive signed area, 1-based.
    pub nonpositive_triples: Vec<(usize, usize, usize)>,
}

impl OrientationReport {
    /// True when every vertex triple is strictly anticlockwise — the
    /// hypothesis under which the circle identities are stated.
    pub fn is_strictly_anticlockwise(&self) -> bool {
        self.orientation == Orientation::Anticlockwise && self.nonpositive_triples.is_empty()
    }
}

impl Polygon {
    /// Builds a polygon from raw vertices (no circle data attached).
    ///
    /// # Errors
    ///
    /// Returns [`GeometryError::TooFewVertices`] when fewer than three
    /// vertices are given.
    pub fn from_vertices(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::TooFewVertices {
                got: vertices.len(),
            });
        }
        Ok(Polygon {
            vertices,
            cyclic: None,
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// The vertices `A_1, …, A_n` in order.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Vertex `A_i`, 1-based; `None` when `i` is out of `1..=n`.
    pub fn vertex(&self, i: usize) -> Option<&Point> {
        if i == 0 {
            None
        } else {
            self.vertices.get(i - 1)
        }
    }

    /// The circle data, when this polygon was built as cyclic.
    pub fn cyclic_data(&self) -> Option<&CyclicData> {
        self.cyclic.as_ref()
    }

    /// Exact test whether all vertices lie on one common circle.
    ///
    /// Works on any polygon: the circumcircle of the first non-degenerate
    /// triple is solved exactly from perpendicular-bisector equations and all
    /// remaining vertices are tested for equal squared distance to the
    /// center. The circle's radius itself may be irrational for raw-vertex
    /// polygons; only its square is needed here, so the test stays exact.
    pub fn is_concyclic(&self) -> bool {
        let [a, b, c] = [&self.vertices[0], &self.vertices[1], &self.vertices[2]];
        let center = match circumcenter(a, b, c) {
            Some(center) => center,
            None => return false,
        };
        let r2 = squared_distance_between(&center, a);
        self.vertices
            .iter()
            .all(|v| squared_distance_between(&center, v) == r2)
    }

    /// Returns a copy with vertex `i` (1-based) scaled by `factor` about the
    /// origin — the radial perturbation used by non-vacuity controls. The
    /// result carries no circle data: a scaled vertex generally leaves the
    /// circle, and whether the circle identities still apply must be
    /// re-established, not assumed.
    ///
    /// # Panics
    ///
    /// Panics when `i` is out of `1..=n`.
    pub fn scale_vertex(&self, i: usize, factor: &ExactRational) -> Polygon {
        assert!(
            (1..=self.n()).contains(&i),
            "vertex index {i} out of 1..={}",
            self.n()
        );
        let mut vertices = self.vertices.clone();
        let v = &vertices[i - 1];
        vertices[i - 1] = Point::new(&v.x * factor, &v.y * factor);
        Polygon {
            vertices,
            cyclic: None,
        }
    }

    /// Parses the polygon JSON schema.
    ///
    /// The schema is `{"n": int, "R": rational?, "t": [rational]?,
    /// "vertices": [point]?}` where exactly one of (`"t"` with `"R"`) or
    /// `"vertices"` must be present; rationals are `["num","den"]` pairs.
    /// When `"t"`/`"R"` are given the vertices are derived via
    /// [`make_cyclic_polygon`], so all its validation applies.
    pub fn from_json(text: &str) -> Result<Self, GeometryError> {
        let raw: PolygonJson =
            serde_json::from_str(text).map_err(|e| GeometryError::Parse(e.to_string()))?;
        match (raw.radius, raw.params, raw.vertices) {
            (Some(radius), Some(params), None) => {
                if params.len() != raw.n {
                    return Err(GeometryError::CountMismatch {
                        n: raw.n,
                        what: "\"t\"",
                        got: params.len(),
                    });
                }
                make_cyclic_polygon(raw.n, params, radius)
            }
            (None, None, Some(vertices)) => {
                if vertices.len() != raw.n {
                    return Err(GeometryError::CountMismatch {
                        n: raw.n,
                        what: "\"vertices\"",
                        got: vertices.len(),
                    });
                }
                Polygon::from_vertices(vertices)
            }
            _ => Err(GeometryError::AmbiguousForm),
        }
    }

    /// Serializes to the polygon JSON schema: the `"t"`/`"R"` form when the
    /// polygon carries (origin-centered) circle data, the `"vertices"` form
    /// otherwise.
    pub fn to_json(&self) -> String {
        let raw = match &self.cyclic {
            Some(data) if data.center == Point::origin() => PolygonJson {
                n: self.n(),
                radius: Some(data.radius.clone()),
                params: Some(data.params.clone()),
                vertices: None,
            },
            _ => PolygonJson {
                n: self.n(),
                radius: None,
                params: None,
                vertices: Some(self.vertices.clone()),
            },
        };
        serde_json::to_string_pretty(&raw).expect("polygon JSON serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonJson {
    n: usize,
    #[serde(rename = "R", skip_serializing_if = "Option::is_none")]
    radius: Option<ExactRational>,
    #[serde(rename = "t", skip_serializing_if = "Option::is_none")]
    params: Option<Vec<ExactRational>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Point>>,
}

/// Exact squared Euclidean distance between two points.
///
/// This is the point-level primitive; the indexed form with the lookup
/// conventions lives in the measurements module.
pub fn squared_distance_between(a: &Point, b: &Point) -> ExactRational {
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    &(&dx * &dx) + &(&dy * &dy)
}

/// Exact four-fold signed area of the triangle `abc`, positive when the
/// vertices are ordered anticlockwise.
pub fn signed_area4_of(a: &Point, b: &Point, c: &Point) -> ExactRational {
    let two = ExactRational::from_integer(2);
    let cross =
        &(&(&b.x - &a.x) * &(&c.y - &a.y)) - &(&(&b.y - &a.y) * &(&c.x - &a.x));
    two * cross
}

/// Exact circumcenter of three points, or `None` when they are collinear.
fn circumcenter(a: &Point, b: &Point, c: &Point) -> Option<Point> {
    // Perpendicular-bisector equations, a 2×2 rational linear system:
    //   2(bx−ax)·cx + 2(by−ay)·cy = |b|² − |a|²
    //   2(cx−ax)·cx + 2(cy−ay)·cy = |c|² − |a|²
    let two = ExactRational::from_integer(2);
    let norm = |p: &Point| &(&p.x * &p.x) + &(&p.y * &p.y);
    let (a11, a12) = (&two * &(&b.x - &a.x), &two * &(&b.y - &a.y));
    let (a21, a22) = (&two * &(&c.x - &a.x), &two * &(&c.y - &a.y));
    let r1 = &norm(b) - &norm(a);
    let r2 = &norm(c) - &norm(a);
    let det = &(&a11 * &a22) - &(&a12 * &a21);
    if det.is_zero() {
        return None;
    }
    let cx = (&(&r1 * &a22) - &(&r2 * &a12)).checked_div(&det).expect("det nonzero");
    let cy = (&(&a11 * &r2) - &(&a21 * &r1)).checked_div(&det).expect("det nonzero");
    Some(Point::new(cx, cy))
}

/// The exact rational point at tangent half-angle parameter `t` on the circle
/// of radius `R` around `center`:
/// `center + R·((1−t²)/(1+t²), 2t/(1+t²))`.
///
/// `t = tan(θ/2)`, so strictly increasing `t` over `(−∞, ∞)` sweeps the
/// circle anticlockwise through angles in `(−π, π)`. The denominator `1+t²`
/// never vanishes over the rationals, so this is total.
///
/// # Examples
///
/// ```
/// use heronian_frieze::geometry::{circle_point, Point};
/// use heronian_frieze::rational::{rat, ExactRational};
///
/// let p = circle_point(&rat(1, 2).unwrap(), &ExactRational::one(), &Point::origin());
/// assert_eq!(p, Point::new(rat(3, 5).unwrap(), rat(4, 5).unwrap()));
/// ```
pub fn circle_point(t: &ExactRational, radius: &ExactRational, center: &Point) -> Point {
    let one = ExactRational::one();
    let t2 = t * t;
    let den = &one + &t2;
    let cos_part = (&one - &t2).checked_div(&den).expect("1+t² is nonzero");
    let sin_part = (&ExactRational::from_integer(2) * t)
        .checked_div(&den)
        .expect("1+t² is nonzero");
    Point::new(&center.x + &(radius * &cos_part), &center.y + &(radius * &sin_part))
}

/// Builds the cyclic polygon with vertices `circle_point(t_i, R, origin)`.
///
/// The parameters must be strictly increasing, which makes the vertices
/// pairwise distinct and the ordering anticlockwise.
///
/// # Errors
///
/// * [`GeometryError::TooFewVertices`] when `n < 3`,
/// * [`GeometryError::CountMismatch`] when `params.len() != n`,
/// * [`GeometryError::NonIncreasingParams`] when the parameters are not
///   strictly increasing,
/// * [`GeometryError::NonPositiveRadius`] when `R ≤ 0`.
pub fn make_cyclic_polygon(
    n: usize,
    params: Vec<ExactRational>,
    radius: ExactRational,
) -> Result<Polygon, GeometryError> {
    if n < 3 {
        return Err(GeometryError::TooFewVertices { got: n });
    }
    if params.len() != n {
        return Err(GeometryError::CountMismatch {
            n,
            what: "params",
            got: params.len(),
        });
    }
    if !radius.is_positive() {
        return Err(GeometryError::NonPositiveRadius {
            got: radius.to_string(),
        });
    }
    if let Some(index) = (1..params.len()).find(|&i| params[i] <= params[i - 1]) {
        return Err(GeometryError::NonIncreasingParams {
            index,
            value: params[index].to_string(),
        });
    }
    let center = Point::origin();
    let vertices = params
        .iter()
        .map(|t| circle_point(t, &radius, &center))
        .collect();
    Ok(Polygon {
        vertices,
        cyclic: Some(CyclicData {
            radius,
            center,
            params,
        }),
    })
}

/// Deterministically generates a random cyclic polygon.
///
/// For a fixed `(n, seed, radius)` the result is always identical: a ChaCha
/// stream seeded with `seed` draws rational parameters with numerator in
/// `−50..=50` and denominator in `1..=20` until `n` distinct values are
/// collected, which are then sorted increasing and fed to
/// [`make_cyclic_polygon`]. The small bounds keep big-integer growth
/// manageable in the longest alternating-sum checks, where entry exponents
/// grow linearly with `n`.
///
/// # Errors
///
/// As [`make_cyclic_polygon`], plus [`GeometryError::TooManyVertices`] when
/// `n` exceeds [`MAX_RANDOM_VERTICES`].
pub fn random_cyclic_polygon(
    n: usize,
    seed: u64,
    radius: ExactRational,
) -> Result<Polygon, GeometryError> {
    if n > MAX_RANDOM_VERTICES {
        return Err(GeometryError::TooManyVertices {
            got: n,
            max: MAX_RANDOM_VERTICES,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut params = BTreeSet::new();
    while params.len() < n {
        let num = rng.gen_range(-PARAM_NUMERATOR_BOUND..=PARAM_NUMERATOR_BOUND);
        let den = rng.gen_range(1..=PARAM_DENOMINATOR_BOUND);
        params.insert(rat(num, den).expect("denominator is positive"));
    }
    make_cyclic_polygon(n, params.into_iter().collect(), radius)
}

/// Determines the orientation of a polygon's vertex ordering.
///
/// For a polygon with circle data, the verdict is `Anticlockwise` exactly
/// when every triple `i < j < k` has strictly positive signed area (the
/// convex-position hypothesis of the circle identities) and `Clockwise` when
/// every triple is negative; a zero triple is a degeneracy error. For raw
/// polygons the verdict is the sign of the first triple's area, with every
/// nonpositive triple listed in the report.
///
/// # Errors
///
/// Returns [`GeometryError::DegenerateTriple`] when a polygon with circle
/// data contains a collinear vertex triple.
pub fn check_orientation(polygon: &Polygon) -> Result<OrientationReport, GeometryError> {
    let n = polygon.n();
    let mut nonpositive = Vec::new();
    let mut all_positive = true;
    let mut all_negative = true;
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let s = signed_area4_of(
                    &polygon.vertices[i - 1],
                    &polygon.vertices[j - 1],
                    &polygon.vertices[k - 1],
                );
                if s.is_zero() && polygon.cyclic.is_some() {
                    return Err(GeometryError::DegenerateTriple { i, j, k });
                }
                if !s.is_positive() {
                    nonpositive.push((i, j, k));
                    all_positive = false;
                }
                if !s.is_negative() {
                    all_negative = false;
                }
            }
        }
    }
    let orientation = if all_positive {
        Orientation::Anticlockwise
    } else if all_negative {
        Orientation::Clockwise
    } else {
        // Mixed signs: report by the first triple, flags carry the rest.
        let s123 = signed_area4_of(
            &polygon.vertices[0],
            &polygon.vertices[1],
            &polygon.vertices[2],
        );
        if s123.is_positive() {
            Orientation::Anticlockwise
        } else if s123.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Degenerate
        }
    };
    Ok(OrientationReport {
        orientation,
        nonpositive_triples: nonpositive,
    })
}
