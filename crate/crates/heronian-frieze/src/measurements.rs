//! Exact measurement data of a polygon: squared distances, signed areas, and
//! the Heron form, with the index conventions the identities rely on.
//!
//! For a polygon with vertices `A_m = (x_m, y_m)` the two measurements are
//!
//! * `x_ij = (x_j − x_i)² + (y_j − y_i)²`, the squared distance, and
//! * `S_ijk = 2[(x_j − x_i)(y_k − y_i) − (y_j − y_i)(x_k − x_i)]`, four times
//!   the signed triangle area, positive for anticlockwise triples and
//!   antisymmetric under index transpositions.
//!
//! Two distinct index regimes appear in the literature and both are served
//! here, always resolved at lookup time and never stored:
//!
//! * **literal regime** ([`MeasurementTable::x`], [`MeasurementTable::s`],
//!   [`MeasurementTable::x_pow`]): any index ≤ 0 makes the value `1`, a
//!   negative exponent makes a power `1`, and an index above `n` is a hard
//!   error — the alternating-sum formulas index below 1 by design and must
//!   see `1`, while nothing may silently read past the polygon;
//! * **cyclic regime** ([`MeasurementTable::x_cyclic`],
//!   [`MeasurementTable::s_cyclic`]): every integer index is reduced modulo
//!   `n` into `1..=n`, the convention of the frieze tables and the modular
//!   chord relations.
//!
//! The Heron form `H(x,y,z) = −x²−y²−z²+2xy+2xz+2yz` ties the two together:
//! when `x,y,z` are the squared side lengths of a triangle, `H` equals the
//! squared four-fold area, so `S_ijk² = H(x_ij, x_jk, x_ik)` exactly.

use crate::geometry::{signed_area4_of, squared_distance_between, Point, Polygon};
use crate::rational::ExactRational;
use std::collections::BTreeMap;

/// Largest `n` for which the full `n³` signed-area table is cached eagerly;
/// above it areas are recomputed per lookup from the retained vertices. The
/// longest identity sweeps touch `O(n²)` triples per summand, so eager
/// caching pays off exactly at the small orders where those sweeps run.
pub const EAGER_AREA_CUTOFF: usize = 16;

/// Errors from measurement lookups.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MeasurementError {
    /// A literal-regime lookup used an index above the vertex count.
    #[error("vertex index {index} out of range: polygon has {n} vertices (indices ≤ 0 are the convention path, indices > n are invalid)")]
    IndexOutOfRange { index: i64, n: usize },
}

/// The exact Heron form `H(x,y,z) = −x²−y²−z²+2xy+2xz+2yz`.
///
/// For squared triangle side lengths it evaluates to the squared four-fold
/// triangle area (Heron's formula with every square root cleared).
///
/// # Examples
///
/// ```
/// use heronian_frieze::measurements::heron_h;
/// use heronian_frieze::rational::ExactRational;
///
/// let r = ExactRational::from_integer;
/// // The 3-4-5 right triangle has area 6, and (4·6)² = 576.
/// assert_eq!(heron_h(&r(9), &r(16), &r(25)), r(576));
/// ```
#[doc(alias = "H")]
pub fn heron_h(x: &ExactRational, y: &ExactRational, z: &ExactRational) -> ExactRational {
    let two = ExactRational::from_integer(2);
    let squares = &(&(x * x) + &(y * y)) + &(z * z);
    let products = &(&(x * y) + &(x * z)) + &(y * z);
    &(&two * &products) - &squares
}

/// Literal-regime squared distance `x_ij` of a polygon.
///
/// Returns `1` when `i ≤ 0` or `j ≤ 0` (the convention layer) and an error
/// when an index exceeds the vertex count.
pub fn squared_distance(
    polygon: &Polygon,
    i: i64,
    j: i64,
) -> Result<ExactRational, MeasurementError> {
    match (resolve(i, polygon.n())?, resolve(j, polygon.n())?) {
        (Some(i), Some(j)) => Ok(squared_distance_between(
            &polygon.vertices()[i - 1],
            &polygon.vertices()[j - 1],
        )),
        _ => Ok(ExactRational::one()),
    }
}

/// Literal-regime four-fold signed area `S_ijk` of a polygon.
///
/// Returns `1` when any index is ≤ 0 (the convention layer) and an error
/// when an index exceeds the vertex count.
pub fn signed_area4(
    polygon: &Polygon,
    i: i64,
    j: i64,
    k: i64,
) -> Result<ExactRational, MeasurementError> {
    let n = polygon.n();
    match (resolve(i, n)?, resolve(j, n)?, resolve(k, n)?) {
        (Some(i), Some(j), Some(k)) => Ok(signed_area4_of(
            &polygon.vertices()[i - 1],
            &polygon.vertices()[j - 1],
            &polygon.vertices()[k - 1],
        )),
        _ => Ok(ExactRational::one()),
    }
}

/// Maps a literal-regime index to a table position: `None` for the
/// convention path (≤ 0), error above `n`.
fn resolve(index: i64, n: usize) -> Result<Option<usize>, MeasurementError> {
    if index <= 0 {
        Ok(None)
    } else if index as usize > n {
        Err(MeasurementError::IndexOutOfRange { index, n })
    } else {
        Ok(Some(index as usize))
    }
}

/// Reduces any integer index into `1..=n` (cyclic regime).
fn reduce_cyclic(index: i64, n: usize) -> usize {
    ((index - 1).rem_euclid(n as i64) + 1) as usize
}

/// Cached exact measurement data `x_ij` and `S_ijk` of one polygon.
///
/// The squared-distance table is always materialized (`n²` rationals). The
/// signed-area cube (`n³`) is materialized up to [`EAGER_AREA_CUTOFF`]
/// vertices and recomputed per lookup above that; either way lookups return
/// identical exact values. The table is immutable after construction, so
/// concurrent readers need no coordination.
#[derive(Debug, Clone)]
pub struct MeasurementTable {
    n: usize,
    vertices: Vec<Point>,
    x: Vec<ExactRational>,
    s: Option<Vec<ExactRational>>,
}

/// Computes and caches all measurements of a polygon.
pub fn build_table(polygon: &Polygon) -> MeasurementTable {
    MeasurementTable::build(polygon)
}

impl MeasurementTable {
    /// Computes and caches all measurements of a polygon.
    pub fn build(polygon: &Polygon) -> Self {
        let n = polygon.n();
        let vertices = polygon.vertices().to_vec();
        let x = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| (i, j)))
            .map(|(i, j)| squared_distance_between(&vertices[i - 1], &vertices[j - 1]))
            .collect();
        let s = (n <= EAGER_AREA_CUTOFF).then(|| {
            (1..=n)
                .flat_map(|i| (1..=n).flat_map(move |j| (1..=n).map(move |k| (i, j, k))))
                .map(|(i, j, k)| {
                    signed_area4_of(&vertices[i - 1], &vertices[j - 1], &vertices[k - 1])
                })
                .collect()
        });
        MeasurementTable { n, vertices, x, s }
    }

    /// Number of polygon vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    fn x_at(&self, i: usize, j: usize) -> ExactRational {
        self.x[(i - 1) * self.n + (j - 1)].clone()
    }

    fn s_at(&self, i: usize, j: usize, k: usize) -> ExactRational {
        match &self.s {
            Some(cube) => cube[((i - 1) * self.n + (j - 1)) * self.n + (k - 1)].clone(),
            None => signed_area4_of(
                &self.vertices[i - 1],
                &self.vertices[j - 1],
                &self.vertices[k - 1],
            ),
        }
    }

    /// Literal-regime lookup of `x_ij`: indices ≤ 0 give `1`, indices above
    /// `n` are an error.
    pub fn x(&self, i: i64, j: i64) -> Result<ExactRational, MeasurementError> {
        match (resolve(i, self.n)?, resolve(j, self.n)?) {
            (Some(i), Some(j)) => Ok(self.x_at(i, j)),
            _ => Ok(ExactRational::one()),
        }
    }

    /// Literal-regime lookup of `S_ijk`: indices ≤ 0 give `1`, indices above
    /// `n` are an error.
    pub fn s(&self, i: i64, j: i64, k: i64) -> Result<ExactRational, MeasurementError> {
        match (resolve(i, self.n)?, resolve(j, self.n)?, resolve(k, self.n)?) {
            (Some(i), Some(j), Some(k)) => Ok(self.s_at(i, j, k)),
            _ => Ok(ExactRational::one()),
        }
    }

    /// Literal-regime power `x_ij^p` with the convention that a negative
    /// exponent makes the whole power `1`.
    pub fn x_pow(&self, i: i64, j: i64, p: i64) -> Result<ExactRational, MeasurementError> {
        if p < 0 {
            return Ok(ExactRational::one());
        }
        Ok(self.x(i, j)?.pow(p as u32))
    }

    /// Cyclic-regime lookup of `x_ij`: any integer index is reduced modulo
    /// `n` into `1..=n`, so this is total.
    pub fn x_cyclic(&self, i: i64, j: i64) -> ExactRational {
        self.x_at(reduce_cyclic(i, self.n), reduce_cyclic(j, self.n))
    }

    /// Cyclic-regime lookup of `S_ijk`: any integer index is reduced modulo
    /// `n` into `1..=n`, so this is total.
    pub fn s_cyclic(&self, i: i64, j: i64, k: i64) -> ExactRational {
        self.s_at(
            reduce_cyclic(i, self.n),
            reduce_cyclic(j, self.n),
            reduce_cyclic(k, self.n),
        )
    }

    /// Debug dump: JSON mapping `"x.i.j"` and `"s.i.j.k"` (canonical index
    /// regions `i < j` and `i < j < k`; the rest follows by symmetry and
    /// antisymmetry) to rational pairs.
    pub fn to_debug_json(&self) -> String {
        let mut entries: BTreeMap<String, ExactRational> = BTreeMap::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                entries.insert(format!("x.{i}.{j}"), self.x_at(i, j));
                for k in j + 1..=self.n {
                    entries.insert(format!("s.{i}.{j}.{k}"), self.s_at(i, j, k));
                }
            }
        }
        serde_json::to_string_pretty(&entries).expect("measurement dump cannot fail")
    }
}
