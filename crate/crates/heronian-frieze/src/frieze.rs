//! Heronian diamonds and the (plane) polygonal Heronian frieze of order `n`.
//!
//! A *Heronian diamond* is an ordered 10-tuple `(a,b,c,d,e,f,p,q,r,s)`
//! satisfying seven polynomial equations that tie together the squared side
//! lengths, squared diagonals, and four-fold triangle areas of a plane
//! quadrilateral's two triangulations:
//!
//! ```text
//! (1) p² = H(b,c,e)        (2) q² = H(a,d,e)
//! (3) r² = H(a,f,b)        (4) s² = H(c,f,d)
//! (5) r + s = p + q        (6) 4ef = (p+q)² + (a−b+c−d)²
//! (7) e(r−s) = p(a−d) + q(b−c)
//! ```
//!
//! where `H` is the Heron form. Every vertex quadruple `(A_i,A_j,A_k,A_l)` of
//! a polygon induces such a tuple through its measurements
//! ([`diamond_from_quad`]), including degenerate quadruples with repeated
//! vertices.
//!
//! The *polygonal Heronian frieze* of order `n` collects all measurements of
//! an `n`-gon into two periodic tables — `z_ij = x_ij` and
//! `z̃ = S` over the label families `(i, i+1, j)` and `(i, j, j+1)` — with
//! all index arithmetic modulo `n` (the cyclic regime). Its diamonds are
//! indexed by ordered pairs `(a, b)`, standing for the quadruple
//! `(A_a, A_{a+1}, A_b, A_{b+1})`; the *plane* frieze additionally carries
//! the `n` *gluing diamonds* of the pairs `a = b`, whose diagonal and area
//! entries all vanish.

use crate::measurements::MeasurementTable;
use crate::rational::ExactRational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Errors from frieze construction and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FriezeError {
    /// A quadruple index lies outside `1..=n`.
    #[error("vertex index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    /// Frieze JSON could not be parsed.
    #[error("invalid frieze JSON: {0}")]
    Parse(String),
    /// A frieze JSON entry key is not of the expected `"i,j"`/`"i,j,k"` form
    /// or indexes outside `1..=n`.
    #[error("invalid frieze entry key {key:?}: {reason}")]
    BadKey { key: String, reason: String },
}

/// Output format for [`render_frieze`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    /// One fundamental domain of the strip, entries as exact rationals.
    Ascii,
    /// The full `z`/`z̃` tables as JSON (lossless, re-parseable).
    Json,
}

/// The ordered 10-tuple `(a,b,c,d,e,f,p,q,r,s)` of a (possibly degenerate)
/// quadrilateral `A₁A₂A₃A₄`, in role-named fields:
///
/// | tuple | field      | meaning                    |
/// |-------|------------|----------------------------|
/// | `a`   | `side_41`  | `x₁₄` squared side         |
/// | `b`   | `side_12`  | `x₁₂` squared side         |
/// | `c`   | `side_23`  | `x₂₃` squared side         |
/// | `d`   | `side_34`  | `x₃₄` squared side         |
/// | `e`   | `diag_13`  | `x₁₃` squared diagonal     |
/// | `f`   | `diag_24`  | `x₂₄` squared diagonal     |
/// | `p`   | `area_123` | `S₁₂₃` four-fold area      |
/// | `q`   | `area_134` | `S₁₃₄` four-fold area      |
/// | `r`   | `area_124` | `S₁₂₄` four-fold area      |
/// | `s`   | `area_234` | `S₂₃₄` four-fold area      |
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeronianDiamond {
    pub side_41: ExactRational,
    pub side_12: ExactRational,
    pub side_23: ExactRational,
    pub side_34: ExactRational,
    pub diag_13: ExactRational,
    pub diag_24: ExactRational,
    pub area_123: ExactRational,
    pub area_134: ExactRational,
    pub area_124: ExactRational,
    pub area_234: ExactRational,
    /// The vertex quadruple `(i,j,k,l)` this diamond was measured from, when
    /// it came from a polygon.
    pub source_quad: Option<[usize; 4]>,
}

impl HeronianDiamond {
    /// The seven defining residuals; see [`verify_diamond`].
    pub fn residuals(&self) -> [ExactRational; 7] {
        verify_diamond(self)
    }

    /// True iff all seven defining equations hold exactly.
    pub fn is_heronian(&self) -> bool {
        self.residuals().iter().all(ExactRational::is_zero)
    }
}

/// Measures the diamond of the vertex quadruple `(A_i, A_j, A_k, A_l)`:
///
/// ```text
/// a = x_il   b = x_ij   c = x_jk   d = x_kl   e = x_ik   f = x_jl
/// p = S_ijk  q = S_ikl  r = S_ijl  s = S_jkl
/// ```
///
/// Repeated indices are allowed — the top/bottom frieze rows and the gluing
/// diamonds repeat vertices by design and the measurements degenerate to `0`
/// where they must.
///
/// # Errors
///
/// Returns [`FriezeError::IndexOutOfRange`] when an index is outside
/// `1..=n`.
pub fn diamond_from_quad(
    table: &MeasurementTable,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<HeronianDiamond, FriezeError> {
    let n = table.n();
    for index in [i, j, k, l] {
        if index == 0 || index > n {
            return Err(FriezeError::IndexOutOfRange { index, n });
        }
    }
    let (i64i, i64j, i64k, i64l) = (i as i64, j as i64, k as i64, l as i64);
    Ok(HeronianDiamond {
        side_41: table.x_cyclic(i64i, i64l),
        side_12: table.x_cyclic(i64i, i64j),
        side_23: table.x_cyclic(i64j, i64k),
        side_34: table.x_cyclic(i64k, i64l),
        diag_13: table.x_cyclic(i64i, i64k),
        diag_24: table.x_cyclic(i64j, i64l),
        area_123: table.s_cyclic(i64i, i64j, i64k),
        area_134: table.s_cyclic(i64i, i64k, i64l),
        area_124: table.s_cyclic(i64i, i64j, i64l),
        area_234: table.s_cyclic(i64j, i64k, i64l),
        source_quad: Some([i, j, k, l]),
    })
}

/// The seven exact residuals `LHS − RHS` of the diamond equations, in the
/// order listed in the module documentation. The diamond is Heronian iff all
/// seven are exactly `0`.
pub fn verify_diamond(diamond: &HeronianDiamond) -> [ExactRational; 7] {
    use crate::measurements::heron_h;
    let (a, b, c, d) = (
        &diamond.side_41,
        &diamond.side_12,
        &diamond.side_23,
        &diamond.side_34,
    );
    let (e, f) = (&diamond.diag_13, &diamond.diag_24);
    let (p, q, r, s) = (
        &diamond.area_123,
        &diamond.area_134,
        &diamond.area_124,
        &diamond.area_234,
    );
    let four = ExactRational::from_integer(4);
    let p_plus_q = p + q;
    let alt_sides = &(&(a - b) + c) - d;
    [
        &(p * p) - &heron_h(b, c, e),
        &(q * q) - &heron_h(a, d, e),
        &(r * r) - &heron_h(a, f, b),
        &(s * s) - &heron_h(c, f, d),
        &(r + s) - &p_plus_q,
        &(&(&four * e) * f) - &(&(&p_plus_q * &p_plus_q) + &(&alt_sides * &alt_sides)),
        &(e * &(r - s)) - &(&(p * &(a - d)) + &(q * &(b - c))),
    ]
}

/// The polygonal Heronian frieze of order `n`: the `z` table of squared
/// distances and the `z̃` table of four-fold signed areas over the label
/// families `(i, i+1, j)` and `(i, j, j+1)`, all indices cyclic.
///
/// `z` is stored once per unordered pair (it is symmetric); `z̃` stores the
/// union of both label families. Lookups reduce indices modulo `n`, so the
/// table realizes the full doubly-periodic strip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriezeTable {
    n: usize,
    z: BTreeMap<(usize, usize), ExactRational>,
    ztilde: BTreeMap<(usize, usize, usize), ExactRational>,
}

/// Builds the polygonal Heronian frieze of a polygon's measurement table:
/// `z_ij = x_ij` and `z̃ = S` over both label families. The boundary
/// conditions `z_ii = z̃_iji = z̃_iij = z̃_ijj = 0` hold by construction
/// (coincident vertices have zero distance and area).
pub fn build_frieze(table: &MeasurementTable) -> FriezeTable {
    let n = table.n();
    let mut z = BTreeMap::new();
    let mut ztilde = BTreeMap::new();
    for i in 1..=n as i64 {
        for j in 1..=n as i64 {
            let key = if i <= j { (i as usize, j as usize) } else { (j as usize, i as usize) };
            z.entry(key).or_insert_with(|| table.x_cyclic(i, j));
            let succ_i = reduce(i + 1, n);
            let succ_j = reduce(j + 1, n);
            ztilde
                .entry((i as usize, succ_i, j as usize))
                .or_insert_with(|| table.s_cyclic(i, i + 1, j));
            ztilde
                .entry((i as usize, j as usize, succ_j))
                .or_insert_with(|| table.s_cyclic(i, j, j + 1));
        }
    }
    FriezeTable { n, z, ztilde }
}

fn reduce(index: i64, n: usize) -> usize {
    ((index - 1).rem_euclid(n as i64) + 1) as usize
}

impl FriezeTable {
    /// The frieze order (number of polygon vertices).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Cyclic lookup of `z_ij` (any integers; reduced modulo `n`).
    pub fn z(&self, i: i64, j: i64) -> ExactRational {
        let (i, j) = (reduce(i, self.n), reduce(j, self.n));
        let key = if i <= j { (i, j) } else { (j, i) };
        self.z[&key].clone()
    }

    /// Cyclic lookup of `z̃_ijk`; `None` when the reduced label belongs to
    /// neither stored family `(i, i+1, j)` nor `(i, j, j+1)`.
    pub fn ztilde(&self, i: i64, j: i64, k: i64) -> Option<ExactRational> {
        let key = (reduce(i, self.n), reduce(j, self.n), reduce(k, self.n));
        self.ztilde.get(&key).cloned()
    }

    /// Assembles the diamond of the ordered pair `(a, b)` — the quadruple
    /// `(A_a, A_{a+1}, A_b, A_{b+1})` — purely from frieze entries:
    ///
    /// ```text
    /// a = z_{a,b+1}    b = z_{a,a+1}      c = z_{a+1,b}     d = z_{b,b+1}
    /// e = z_{a,b}      f = z_{a+1,b+1}
    /// p = z̃_{a,a+1,b}  q = z̃_{a,b,b+1}   r = z̃_{a,a+1,b+1} s = z̃_{a+1,b,b+1}
    /// ```
    ///
    /// Indices are cyclic; `b = a` yields the gluing diamond.
    pub fn diamond(&self, a: i64, b: i64) -> HeronianDiamond {
        let quad = [
            reduce(a, self.n),
            reduce(a + 1, self.n),
            reduce(b, self.n),
            reduce(b + 1, self.n),
        ];
        HeronianDiamond {
            side_41: self.z(a, b + 1),
            side_12: self.z(a, a + 1),
            side_23: self.z(a + 1, b),
            side_34: self.z(b, b + 1),
            diag_13: self.z(a, b),
            diag_24: self.z(a + 1, b + 1),
            area_123: self.ztilde(a, a + 1, b).expect("family (i,i+1,j)"),
            area_134: self.ztilde(a, b, b + 1).expect("family (i,j,j+1)"),
            area_124: self.ztilde(a, a + 1, b + 1).expect("family (i,i+1,j)"),
            area_234: self.ztilde(a + 1, b, b + 1).expect("family (i,j,j+1)"),
            source_quad: Some(quad),
        }
    }

    /// Parses the frieze JSON schema
    /// `{"n": int, "z": {"i,j": rational}, "ztilde": {"i,j,k": rational}}`.
    pub fn from_json(text: &str) -> Result<Self, FriezeError> {
        let raw: FriezeJson =
            serde_json::from_str(text).map_err(|e| FriezeError::Parse(e.to_string()))?;
        let mut z = BTreeMap::new();
        for (key, value) in raw.z {
            let idx = parse_key(&key, 2, raw.n)?;
            z.insert((idx[0], idx[1]), value);
        }
        let mut ztilde = BTreeMap::new();
        for (key, value) in raw.ztilde {
            let idx = parse_key(&key, 3, raw.n)?;
            ztilde.insert((idx[0], idx[1], idx[2]), value);
        }
        Ok(FriezeTable {
            n: raw.n,
            z,
            ztilde,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FriezeJson {
    n: usize,
    z: BTreeMap<String, ExactRational>,
    ztilde: BTreeMap<String, ExactRational>,
}

fn parse_key(key: &str, arity: usize, n: usize) -> Result<Vec<usize>, FriezeError> {
    let parts: Vec<&str> = key.split(',').collect();
    if parts.len() != arity {
        return Err(FriezeError::BadKey {
            key: key.to_string(),
            reason: format!("expected {arity} comma-separated indices"),
        });
    }
    parts
        .iter()
        .map(|part| {
            let index: usize = part.trim().parse().map_err(|_| FriezeError::BadKey {
                key: key.to_string(),
                reason: format!("{part:?} is not an integer"),
            })?;
            if index == 0 || index > n {
                return Err(FriezeError::BadKey {
                    key: key.to_string(),
                    reason: format!("index {index} out of range 1..={n}"),
                });
            }
            Ok(index)
        })
        .collect()
}

/// The plane polygonal Heronian frieze: the frieze table together with the
/// `n` gluing diamonds of the degenerate quadruples `(A_a, A_{a+1}, A_a,
/// A_{a+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneFriezeTable {
    frieze: FriezeTable,
    gluing: Vec<HeronianDiamond>,
}

impl PlaneFriezeTable {
    /// The underlying frieze table.
    pub fn frieze(&self) -> &FriezeTable {
        &self.frieze
    }

    /// The `n` gluing diamonds, indexed by `a = 1..=n`.
    pub fn gluing_diamonds(&self) -> &[HeronianDiamond] {
        &self.gluing
    }
}

/// Builds the plane polygonal Heronian frieze: the frieze table plus one
/// gluing diamond per `a ∈ 1..=n`. Gluing diamonds have all four sides equal
/// to `x_{a,a+1}` and vanishing diagonals and areas.
pub fn build_plane_frieze(table: &MeasurementTable) -> PlaneFriezeTable {
    let frieze = build_frieze(table);
    let n = table.n();
    let gluing = (1..=n)
        .map(|a| {
            let succ = reduce(a as i64 + 1, n);
            diamond_from_quad(table, a, succ, a, succ).expect("indices in range by construction")
        })
        .collect();
    PlaneFriezeTable { frieze, gluing }
}

/// True iff all `n` edge entries `z_{i,i+1}` (cyclically, including
/// `z_{n,1}`) are equal — the frieze of an equilateral polygon.
pub fn is_equilateral(frieze: &FriezeTable) -> bool {
    let first = frieze.z(1, 2);
    (2..=frieze.n() as i64).all(|i| frieze.z(i, i + 1) == first)
}

/// Renders one fundamental domain of the frieze strip.
///
/// * `Ascii`: the doubly-infinite strip is periodic, so one period —
///   columns `i = 1..=n` — is lossless. Rows alternate between `z̃` entries
///   `z̃_{i+t−1, i+t, i}` (`t = 1..=n`) and `z` entries `z_{i+d, i}`
///   (`d = 1..=n−1`), staggered to suggest the diamond lattice. The two
///   bounding rows of zeros `z_ii` are drawn with a `--` gutter — between
///   them lie exactly `2n−1` content rows.
/// * `Json`: the full table in the frieze JSON schema; parsing it back
///   yields an equal [`FriezeTable`].
pub fn render_frieze(frieze: &FriezeTable, format: RenderFormat) -> String {
    match format {
        RenderFormat::Json => render_json(frieze),
        RenderFormat::Ascii => render_ascii(frieze),
    }
}

fn render_json(frieze: &FriezeTable) -> String {
    let raw = FriezeJson {
        n: frieze.n,
        z: frieze
            .z
            .iter()
            .map(|((i, j), v)| (format!("{i},{j}"), v.clone()))
            .collect(),
        ztilde: frieze
            .ztilde
            .iter()
            .map(|((i, j, k), v)| (format!("{i},{j},{k}"), v.clone()))
            .collect(),
    };
    serde_json::to_string_pretty(&raw).expect("frieze JSON serialization cannot fail")
}

/// Renders the plane frieze: the strip as in [`render_frieze`] followed by
/// the `n` gluing-diamond entries.
///
/// A gluing diamond is determined by its single nonzero entry, the shared
/// squared side `x_{a,a+1}` (diagonals and areas vanish by construction), so
/// only that entry is listed:
///
/// * `Ascii`: a `== gluing diamonds` section with one `a=…:` line per
///   diamond.
/// * `Json`: `{"frieze": <frieze schema>, "gluing": [r₁, …, rₙ]}` where
///   `gluing[a−1]` is `x_{a,a+1}` as a rational pair.
pub fn render_plane_frieze(plane: &PlaneFriezeTable, format: RenderFormat) -> String {
    let sides: Vec<&ExactRational> = plane
        .gluing_diamonds()
        .iter()
        .map(|diamond| &diamond.side_12)
        .collect();
    match format {
        RenderFormat::Json => {
            let raw = serde_json::json!({
                "frieze": serde_json::from_str::<serde_json::Value>(render_json(plane.frieze()).as_str())
                    .expect("render_json emits valid JSON"),
                "gluing": sides,
            });
            serde_json::to_string_pretty(&raw).expect("plane frieze JSON serialization cannot fail")
        }
        RenderFormat::Ascii => {
            let mut out = render_ascii(plane.frieze());
            out.push_str("== gluing diamonds (sides x_{a,a+1}; diagonals and areas are 0)\n");
            for (index, side) in sides.iter().enumerate() {
                out.push_str(&format!("   a={}: {side}\n", index + 1));
            }
            out
        }
    }
}

fn render_ascii(frieze: &FriezeTable) -> String {
    let n = frieze.n as i64;
    // Row contents, top to bottom: boundary z_ii, then alternating
    // z̃ (t = 1..=n) and z (d = 1..=n−1) rows, then boundary again.
    let tilde_row = |t: i64| -> Vec<ExactRational> {
        (1..=n)
            .map(|i| {
                frieze
                    .ztilde(i + t - 1, i + t, i)
                    .expect("family (i,i+1,j) label")
            })
            .collect()
    };
    let z_row = |d: i64| -> Vec<ExactRational> { (1..=n).map(|i| frieze.z(i + d, i)).collect() };

    let mut rows: Vec<(bool, Vec<ExactRational>)> = Vec::new();
    rows.push((true, z_row(0)));
    for step in 1..=2 * n - 1 {
        if step % 2 == 1 {
            rows.push((false, tilde_row((step + 1) / 2)));
        } else {
            rows.push((false, z_row(step / 2)));
        }
    }
    rows.push((true, z_row(n)));

    let width = rows
        .iter()
        .flat_map(|(_, row)| row.iter())
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for (index, (boundary, row)) in rows.iter().enumerate() {
        let gutter = if *boundary { "--" } else { "  " };
        // Stagger alternate rows by half a cell for the diamond look.
        let indent = if index % 2 == 1 {
            " ".repeat(width / 2 + 1)
        } else {
            String::new()
        };
        let cells: Vec<String> = row.iter().map(|v| format!("{v:^width$}")).collect();
        out.push_str(&format!("{gutter} {indent}{}\n", cells.join("  ")));
    }
    out
}
