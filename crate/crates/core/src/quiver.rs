//! Valued translation quivers and additive functions on them.
//!
//! Vertices are pairs `(i, t)` inside the translation quiver `ZA∞∞`: `t` is
//! the row, `i` the diagonal. Every arrow goes from row `t` to row `t + 1`,
//! either south-west `(i,t) -> (i,t+1)` or south-east `(i,t) -> (i+1,t+1)`.
//! A quiver only records the valuations of its south-east arrows; the
//! valuation of a south-west arrow is forced by the translation law and is
//! always derived.
//!
//! An additive function `g` satisfies, for every non-projective vertex `z`,
//!
//! ```text
//! g(z) + g(τz) = Σ_{y -> z} v'(y, z) · g(y)
//! ```
//!
//! so it is determined by its values on the projective vertices and can be
//! evaluated row by row.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use num_bigint::BigInt;

use crate::error::Error;
use crate::Result;

/// A vertex `(i, t)`: diagonal `i`, row `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    /// Diagonal index.
    pub i: i64,
    /// Row index.
    pub t: i64,
}

impl Coord {
    /// Builds `(i, t)`.
    pub const fn new(i: i64, t: i64) -> Self {
        Coord { i, t }
    }

    /// Target of the south-west arrow starting here.
    pub const fn south_west(self) -> Self {
        Coord::new(self.i, self.t + 1)
    }

    /// Target of the south-east arrow starting here.
    pub const fn south_east(self) -> Self {
        Coord::new(self.i + 1, self.t + 1)
    }

    /// Source of the south-west arrow ending here.
    pub const fn north_east(self) -> Self {
        Coord::new(self.i, self.t - 1)
    }

    /// Source of the south-east arrow ending here.
    pub const fn north_west(self) -> Self {
        Coord::new(self.i - 1, self.t - 1)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.t)
    }
}

/// The two arrow directions of `ZA∞∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Direction {
    /// `(i,t) -> (i,t+1)`.
    SouthWest,
    /// `(i,t) -> (i+1,t+1)`.
    SouthEast,
}

/// Valuation `(v', v'')` of an arrow. Both entries are at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Valuation {
    v_prime: u32,
    v_double_prime: u32,
}

impl Valuation {
    /// Builds `(v', v'')`.
    ///
    /// # Panics
    ///
    /// Panics if either entry is zero.
    pub const fn new(v_prime: u32, v_double_prime: u32) -> Self {
        assert!(
            v_prime >= 1 && v_double_prime >= 1,
            "valuations are positive"
        );
        Valuation {
            v_prime,
            v_double_prime,
        }
    }

    /// `v'`.
    pub const fn v_prime(self) -> u32 {
        self.v_prime
    }

    /// `v''`.
    pub const fn v_double_prime(self) -> u32 {
        self.v_double_prime
    }

    /// `(v'', v')`, the valuation of the translation mate.
    pub const fn swapped(self) -> Self {
        Valuation {
            v_prime: self.v_double_prime,
            v_double_prime: self.v_prime,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.v_prime, self.v_double_prime)
    }
}

/// A finite truncation (rows `0..=max_row`) of a valued translation quiver
/// embedded in `ZA∞∞`.
///
/// A south-west arrow exists between any two vertices `(i,t)`, `(i,t+1)`;
/// south-east arrows are exactly those with a valuation.
pub trait TranslationQuiver {
    /// Last row of the truncation.
    fn max_row(&self) -> i64;

    /// Diagonals `i` such that `(i, t)` is a vertex. Rows need not be
    /// inside the truncation.
    fn row_range(&self, t: i64) -> Range<i64>;

    /// Whether `z` is projective. Only meaningful for vertices.
    fn is_projective(&self, z: Coord) -> bool;

    /// The translation `τ`, defined exactly on non-projective vertices.
    fn tau(&self, z: Coord) -> Option<Coord>;

    /// Valuation of the south-east arrow starting at `from`, or `None` if
    /// there is no such arrow.
    fn se_valuation(&self, from: Coord) -> Option<Valuation>;

    /// Whether `z` is a vertex of the truncation.
    fn is_vertex(&self, z: Coord) -> bool {
        z.t >= 0 && z.t <= self.max_row() && self.row_range(z.t).contains(&z.i)
    }

    /// Whether `from -> to` is an arrow.
    fn has_arrow(&self, from: Coord, to: Coord) -> bool {
        if !self.is_vertex(from) || !self.is_vertex(to) {
            return false;
        }
        if to == from.south_west() {
            true
        } else if to == from.south_east() {
            self.se_valuation(from).is_some()
        } else {
            false
        }
    }

    /// `z⁻`: the sources of arrows ending at `z`, with the arrow direction.
    fn predecessors(&self, z: Coord) -> Vec<(Coord, Direction)> {
        let mut out = Vec::with_capacity(2);
        let ne = z.north_east();
        if self.has_arrow(ne, z) {
            out.push((ne, Direction::SouthWest));
        }
        let nw = z.north_west();
        if self.has_arrow(nw, z) {
            out.push((nw, Direction::SouthEast));
        }
        out
    }

    /// `x⁺`: the targets of arrows starting at `x`.
    fn successors(&self, x: Coord) -> Vec<(Coord, Direction)> {
        let mut out = Vec::with_capacity(2);
        if self.has_arrow(x, x.south_west()) {
            out.push((x.south_west(), Direction::SouthWest));
        }
        if self.has_arrow(x, x.south_east()) {
            out.push((x.south_east(), Direction::SouthEast));
        }
        out
    }

    /// All vertices of row `t` (empty outside the truncation).
    fn row(&self, t: i64) -> Vec<Coord> {
        if t < 0 || t > self.max_row() {
            return Vec::new();
        }
        self.row_range(t).map(|i| Coord::new(i, t)).collect()
    }
}

/// `v'` of the south-west arrow `(i,t-1) -> (i,t)` ending at the
/// non-projective vertex `z = (i,t)`.
///
/// It equals `v''` of the south-east arrow `τz -> (i,t-1)`.
pub fn sw_arrow_v_prime<Q: TranslationQuiver + ?Sized>(q: &Q, z: Coord) -> Result<u32> {
    let x = mesh_start(q, z)?;
    let west = z.north_east();
    if !q.has_arrow(west, z) {
        return Err(Error::UndefinedArrow { from: west, to: z });
    }
    if x.south_east() != west {
        return Err(Error::UndefinedArrow { from: x, to: west });
    }
    match q.se_valuation(x) {
        Some(v) if q.is_vertex(west) => Ok(v.v_double_prime()),
        _ => Err(Error::UndefinedArrow { from: x, to: west }),
    }
}

/// Valuation of the arrow `from -> to`, deriving south-west valuations.
///
/// A south-west arrow into a non-projective vertex takes the swapped
/// valuation of its translation mate. A south-west arrow into a projective
/// vertex `y` only occurs as `τz -> y` in the mesh of the vertex `z` with
/// `τz = from`, and takes the swapped valuation of `y -> z`.
pub fn arrow_valuation<Q: TranslationQuiver + ?Sized>(
    q: &Q,
    from: Coord,
    to: Coord,
) -> Option<Valuation> {
    if !q.has_arrow(from, to) {
        return None;
    }
    if to == from.south_east() {
        return q.se_valuation(from);
    }
    if !q.is_projective(to) {
        let mate = q.tau(to)?;
        if mate.south_east() != from {
            return None;
        }
        return q.se_valuation(mate).map(Valuation::swapped);
    }
    let z = to.south_east();
    if q.tau(z) == Some(from) {
        q.se_valuation(to).map(Valuation::swapped)
    } else {
        None
    }
}

fn mesh_start<Q: TranslationQuiver + ?Sized>(q: &Q, z: Coord) -> Result<Coord> {
    if !q.is_vertex(z) {
        return Err(Error::NotAVertex(z));
    }
    if q.is_projective(z) {
        return Err(Error::ProjectiveVertex(z));
    }
    q.tau(z).ok_or(Error::ProjectiveVertex(z))
}

/// Values of an additive function, stored densely row by row.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AdditiveTable {
    rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct TableRow {
    start: i64,
    values: Vec<BigInt>,
}

impl AdditiveTable {
    /// Last stored row, or `-1` for an empty table.
    pub fn max_row(&self) -> i64 {
        self.rows.len() as i64 - 1
    }

    /// Stored value at `c`.
    pub fn get(&self, c: Coord) -> Option<&BigInt> {
        let row = self.rows.get(usize::try_from(c.t).ok()?)?;
        let k = usize::try_from(c.i - row.start).ok()?;
        row.values.get(k)
    }

    /// Stored values of row `t`, leftmost diagonal first, together with the
    /// diagonal index of the first entry.
    pub fn row(&self, t: i64) -> Option<(i64, &[BigInt])> {
        let row = self.rows.get(usize::try_from(t).ok()?)?;
        Some((row.start, &row.values))
    }

    /// Iterates over every stored `(coordinate, value)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Coord, &BigInt)> + '_ {
        self.rows.iter().enumerate().flat_map(|(t, row)| {
            row.values
                .iter()
                .enumerate()
                .map(move |(k, v)| (Coord::new(row.start + k as i64, t as i64), v))
        })
    }

    /// Number of stored values.
    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.values.len()).sum()
    }

    /// Whether nothing is stored.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `Σ_{y ∈ z⁻} v'(y,z)·g(y) − g(τz)` for a non-projective vertex `z`.
pub fn mesh_value<Q: TranslationQuiver + ?Sized>(
    q: &Q,
    g: &AdditiveTable,
    z: Coord,
) -> Result<BigInt> {
    let x = mesh_start(q, z)?;
    let mut acc = BigInt::default();
    for (y, dir) in q.predecessors(z) {
        let weight = match dir {
            Direction::SouthWest => sw_arrow_v_prime(q, z)?,
            Direction::SouthEast => q
                .se_valuation(y)
                .ok_or(Error::UndefinedArrow { from: y, to: z })?
                .v_prime(),
        };
        let gy = g.get(y).ok_or(Error::MissingDependency(y))?;
        acc += gy * weight;
    }
    let gx = g.get(x).ok_or(Error::MissingDependency(x))?;
    Ok(acc - gx)
}

/// Evaluates the additive function with the given projective values on
/// rows `0..=up_to_row`.
///
/// Rows are filled in increasing order, so every mesh only reads rows that
/// are already complete.
pub fn evaluate_additive<Q, F>(
    q: &Q,
    mut projective_value: F,
    up_to_row: i64,
) -> Result<AdditiveTable>
where
    Q: TranslationQuiver + ?Sized,
    F: FnMut(Coord) -> Option<BigInt>,
{
    if up_to_row > q.max_row() {
        return Err(Error::RowOutOfRange {
            t: up_to_row,
            max_row: q.max_row(),
        });
    }
    let mut table = AdditiveTable::default();
    for t in 0..=up_to_row {
        let range = q.row_range(t);
        table.rows.push(TableRow {
            start: range.start,
            values: Vec::with_capacity((range.end - range.start).max(0) as usize),
        });
        for i in range {
            let z = Coord::new(i, t);
            let value = if q.is_projective(z) {
                projective_value(z).ok_or(Error::MissingProjectiveValue(z))?
            } else {
                if let Some(x) = q.tau(z) {
                    if x.t >= t {
                        return Err(Error::DependencyCycle {
                            at: z,
                            depends_on: x,
                        });
                    }
                }
                mesh_value(q, &table, z)?
            };
            table
                .rows
                .last_mut()
                .expect("row pushed above")
                .values
                .push(value);
        }
    }
    Ok(table)
}

/// Evaluates with projective values taken from a map.
pub fn evaluate_additive_from_map<Q: TranslationQuiver + ?Sized>(
    q: &Q,
    projective_values: &BTreeMap<Coord, BigInt>,
    up_to_row: i64,
) -> Result<AdditiveTable> {
    evaluate_additive(q, |c| projective_values.get(&c).cloned(), up_to_row)
}

/// Non-projective stored vertices whose value differs from the mesh value.
pub fn mesh_violations<Q: TranslationQuiver + ?Sized>(q: &Q, g: &AdditiveTable) -> Vec<Coord> {
    g.iter()
        .filter(|(z, _)| q.is_vertex(*z) && !q.is_projective(*z))
        .filter(|(z, v)| mesh_value(q, g, *z).map_or(true, |m| &m != *v))
        .map(|(z, _)| z)
        .collect()
}

/// A broken quiver axiom found by [`validate_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `τ` is defined on a projective vertex.
    TauOnProjective(Coord),
    /// `τ` is undefined on a non-projective vertex.
    TauUndefined(Coord),
    /// `τz` is not a vertex.
    TauNotAVertex {
        /// The vertex.
        z: Coord,
        /// Its translate.
        image: Coord,
    },
    /// Two vertices share a translate.
    TauNotInjective {
        /// First vertex.
        first: Coord,
        /// Second vertex.
        second: Coord,
        /// Common image.
        image: Coord,
    },
    /// `(τz)⁺ ≠ z⁻`.
    MeshShape(Coord),
    /// A south-east valuation points outside the quiver.
    DanglingArrow(Coord),
    /// `v'(τz,y) ≠ v''(y,z)` or `v''(τz,y) ≠ v'(y,z)`.
    ValuationMismatch {
        /// Arrow source.
        from: Coord,
        /// Arrow target.
        to: Coord,
    },
    /// An arrow of a mesh has no valuation.
    Unvalued {
        /// Arrow source.
        from: Coord,
        /// Arrow target.
        to: Coord,
    },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::TauOnProjective(z) => write!(f, "tau defined on projective vertex {z}"),
            AxiomViolation::TauUndefined(z) => {
                write!(f, "tau undefined on non-projective vertex {z}")
            }
            AxiomViolation::TauNotAVertex { z, image } => {
                write!(f, "tau{z} = {image} is not a vertex")
            }
            AxiomViolation::TauNotInjective {
                first,
                second,
                image,
            } => {
                write!(f, "tau not injective: tau{first} = tau{second} = {image}")
            }
            AxiomViolation::MeshShape(z) => write!(
                f,
                "predecessors of {z} differ from successors of its translate"
            ),
            AxiomViolation::DanglingArrow(z) => {
                write!(f, "south-east valuation at {z} leaves the quiver")
            }
            AxiomViolation::ValuationMismatch { from, to } => {
                write!(
                    f,
                    "valuation of {from} -> {to} incompatible with its translation mate"
                )
            }
            AxiomViolation::Unvalued { from, to } => {
                write!(f, "arrow {from} -> {to} has no valuation")
            }
        }
    }
}

/// Result of checking a quiver truncation against the axioms of a valued
/// translation quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// Last row checked.
    pub max_row: i64,
    /// Every violation found.
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    /// `true` iff no axiom is violated.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks rows `0..=max_row` of `q`: `τ` is defined exactly off the
/// projectives and injective, `(τz)⁺ = z⁻` for every non-projective `z`, and
/// the valuations of every mesh are compatible with `τ`.
pub fn validate_axioms<Q: TranslationQuiver + ?Sized>(q: &Q) -> AxiomReport {
    let mut violations = Vec::new();
    let mut images: BTreeMap<Coord, Coord> = BTreeMap::new();

    for t in 0..=q.max_row() {
        for z in q.row(t) {
            if q.se_valuation(z).is_some() && !q.is_vertex(z.south_east()) && z.t < q.max_row() {
                violations.push(AxiomViolation::DanglingArrow(z));
            }
            let tau = q.tau(z);
            if q.is_projective(z) {
                if tau.is_some() {
                    violations.push(AxiomViolation::TauOnProjective(z));
                }
                continue;
            }
            let Some(x) = tau else {
                violations.push(AxiomViolation::TauUndefined(z));
                continue;
            };
            if !q.is_vertex(x) {
                violations.push(AxiomViolation::TauNotAVertex { z, image: x });
                continue;
            }
            if let Some(first) = images.insert(x, z) {
                violations.push(AxiomViolation::TauNotInjective {
                    first,
                    second: z,
                    image: x,
                });
            }

            let mut sources: Vec<Coord> = q.predecessors(z).into_iter().map(|(y, _)| y).collect();
            let mut targets: Vec<Coord> = q.successors(x).into_iter().map(|(y, _)| y).collect();
            sources.sort();
            targets.sort();
            if sources != targets {
                violations.push(AxiomViolation::MeshShape(z));
                continue;
            }

            for y in sources {
                let outer = arrow_valuation(q, y, z);
                let inner = arrow_valuation(q, x, y);
                match (outer, inner) {
                    (Some(outer), Some(inner)) => {
                        if inner != outer.swapped() {
                            violations.push(AxiomViolation::ValuationMismatch { from: y, to: z });
                        }
                    }
                    (None, _) => violations.push(AxiomViolation::Unvalued { from: y, to: z }),
                    (_, None) => violations.push(AxiomViolation::Unvalued { from: x, to: y }),
                }
            }
        }
    }

    AxiomReport {
        max_row: q.max_row(),
        violations,
    }
}
