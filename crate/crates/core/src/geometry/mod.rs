//! Exact crisp convex geometry in dimension at most four.
//!
//! Regions are closed subsets of `Q^n`. Convex regions are described either
//! by generators (`Points`, `VPolytope`) or by halfspaces (`HPolyhedron`);
//! `Union` holds finitely many of them. Unbounded regions only arise as
//! polars and are kept in halfspace form.
//!
//! Functions take the ambient dimension explicitly because `Empty` and
//! `WholeSpace` do not carry one.

mod convert;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

pub use convert::{extreme_points, generators_to_h, h_to_generators, point_halfspaces, Generators};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::pairing::DualPair;
use crate::rational::{self, Rational};
use convert::check_dim;

pub const MAX_DIM: usize = 4;

/// Closed halfspace `normal . x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halfspace {
    pub normal: Vector,
    pub offset: Rational,
}

impl Halfspace {
    pub fn new(normal: Vector, offset: Rational) -> Self {
        Halfspace { normal, offset }
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.normal.dot(x) <= self.offset
    }

    /// Positive rescaling making the normal a coprime integer vector.
    pub fn canonical(&self) -> Halfspace {
        let m = rational::primitive_multiplier(&self.normal.0);
        Halfspace {
            normal: self.normal.scale(&m),
            offset: &self.offset * m,
        }
    }

    /// The closed complement side `normal . x >= offset`.
    pub fn flipped(&self) -> Halfspace {
        Halfspace {
            normal: self.normal.neg(),
            offset: -self.offset.clone(),
        }
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} . x <= {}", self.normal, rational::format(&self.offset))
    }
}

/// A closed crisp subset of `Q^n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    Empty,
    WholeSpace,
    /// A finite point set (not convex unless it is a single point).
    Points(Vec<Vector>),
    /// Convex hull of the listed vertices.
    VPolytope(Vec<Vector>),
    /// Intersection of the listed halfspaces.
    HPolyhedron(Vec<Halfspace>),
    /// Finite union; members are never `Empty` or `Union`.
    Union(Vec<Region>),
}

/// Which description `convert` should produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    V,
    H,
}

/// Result of the largest-scale search `t . inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScaleBound {
    /// Every `t >= 0` works.
    Unbounded,
    /// The largest admissible `t`, strictly positive.
    Max(Rational),
    /// No positive `t` works.
    Infeasible,
}

impl Region {
    pub fn point(p: Vector) -> Region {
        Region::Points(vec![p])
    }

    pub fn origin(dim: usize) -> Region {
        Region::Points(vec![Vector::zeros(dim)])
    }

    /// Axis-aligned box `[lo, hi]^n`, as a vertex polytope.
    pub fn cube(dim: usize, lo: Rational, hi: Rational) -> Region {
        let mut verts = vec![Vec::new()];
        for _ in 0..dim {
            verts = verts
                .into_iter()
                .flat_map(|v: Vec<Rational>| {
                    let mut a = v.clone();
                    a.push(lo.clone());
                    let mut b = v;
                    b.push(hi.clone());
                    [a, b]
                })
                .collect();
        }
        Region::VPolytope(verts.into_iter().map(Vector).collect())
    }

    /// Closed interval `[lo, hi]` in dimension one.
    pub fn interval(lo: Rational, hi: Rational) -> Region {
        Region::cube(1, lo, hi)
    }

    pub fn is_empty_variant(&self) -> bool {
        matches!(self, Region::Empty)
    }
}

fn check_vec(dim: usize, v: &Vector) -> Result<()> {
    if v.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: v.dim(),
        });
    }
    Ok(())
}

fn check_region(dim: usize, r: &Region) -> Result<()> {
    check_dim(dim)?;
    match r {
        Region::Empty | Region::WholeSpace => Ok(()),
        Region::Points(ps) | Region::VPolytope(ps) => {
            if ps.is_empty() {
                return Err(Error::Parse("point list must be nonempty".into()));
            }
            ps.iter().try_for_each(|p| check_vec(dim, p))
        }
        Region::HPolyhedron(hs) => hs.iter().try_for_each(|h| check_vec(dim, &h.normal)),
        Region::Union(rs) => rs.iter().try_for_each(|m| check_region(dim, m)),
    }
}

/// Convex pieces of a region, each as generators. Points become singletons;
/// empty pieces are dropped.
pub fn pieces(dim: usize, r: &Region) -> Result<Vec<Generators>> {
    check_region(dim, r)?;
    Ok(match r {
        Region::Empty => Vec::new(),
        Region::WholeSpace => vec![Generators::whole(dim)],
        Region::Points(ps) => ps.iter().map(|p| Generators::polytope(vec![p.clone()])).collect(),
        Region::VPolytope(vs) => vec![Generators::polytope(vs.clone())],
        Region::HPolyhedron(hs) => {
            let g = h_to_generators(dim, hs)?;
            if g.is_empty() {
                Vec::new()
            } else {
                vec![g]
            }
        }
        Region::Union(rs) => {
            let mut out = Vec::new();
            for m in rs {
                out.extend(pieces(dim, m)?);
            }
            out
        }
    })
}

fn is_single_piece(r: &Region) -> bool {
    match r {
        Region::Empty | Region::WholeSpace | Region::VPolytope(_) | Region::HPolyhedron(_) => true,
        Region::Points(ps) => ps.len() == 1,
        Region::Union(_) => false,
    }
}

/// Generators of a convex region (empty generators for `Empty`).
pub fn generators(dim: usize, r: &Region) -> Result<Generators> {
    if !is_single_piece(r) {
        return Err(Error::Unsupported("generator form of a non-convex region".into()));
    }
    Ok(pieces(dim, r)?.pop().unwrap_or_else(Generators::empty))
}

/// Halfspaces of a convex region. `Empty` yields the infeasible `0 <= -1`.
pub fn halfspaces(dim: usize, r: &Region) -> Result<Vec<Halfspace>> {
    check_region(dim, r)?;
    match r {
        Region::HPolyhedron(hs) => Ok(hs.clone()),
        Region::Empty => Ok(vec![Halfspace::new(Vector::zeros(dim), -Rational::one())]),
        Region::WholeSpace => Ok(Vec::new()),
        Region::Points(ps) if ps.len() == 1 => Ok(point_halfspaces(&ps[0])),
        Region::VPolytope(vs) => generators_to_h(dim, &Generators::polytope(vs.clone())),
        _ => Err(Error::Unsupported("halfspace form of a non-convex region".into())),
    }
}

fn canonical_from_generators(dim: usize, g: &Generators) -> Result<Region> {
    if g.is_empty() {
        Ok(Region::Empty)
    } else if g.is_whole(dim) {
        Ok(Region::WholeSpace)
    } else {
        Ok(Region::HPolyhedron(generators_to_h(dim, g)?))
    }
}

fn canonical_h(dim: usize, hs: &[Halfspace]) -> Result<Region> {
    canonical_from_generators(dim, &h_to_generators(dim, hs)?)
}

fn canonical_v(dim: usize, points: &[Vector]) -> Result<Region> {
    if points.is_empty() {
        return Ok(Region::Empty);
    }
    Ok(Region::VPolytope(extreme_points(dim, points)?))
}

fn canonical_points(points: Vec<Vector>) -> Region {
    let set: BTreeSet<Vector> = points.into_iter().collect();
    if set.is_empty() {
        Region::Empty
    } else {
        Region::Points(set.into_iter().collect())
    }
}

/// Canonical representative: deduplicated sorted points, extreme vertices
/// only, irredundant sorted halfspaces, flattened simplified unions.
pub fn canonicalize(dim: usize, r: &Region) -> Result<Region> {
    check_region(dim, r)?;
    match r {
        Region::Empty => Ok(Region::Empty),
        Region::WholeSpace => Ok(Region::WholeSpace),
        Region::Points(ps) => Ok(canonical_points(ps.clone())),
        Region::VPolytope(vs) => canonical_v(dim, vs),
        Region::HPolyhedron(hs) => canonical_h(dim, hs),
        Region::Union(rs) => union(dim, rs),
    }
}

/// Canonical union of regions. Members contained in other members are
/// dropped; a union with one member collapses to it.
pub fn union(dim: usize, regions: &[Region]) -> Result<Region> {
    let mut flat: Vec<Region> = Vec::new();
    let mut stack: Vec<Region> = regions.to_vec();
    while let Some(r) = stack.pop() {
        match r {
            Region::Union(rs) => stack.extend(rs),
            Region::Empty => {}
            Region::WholeSpace => return Ok(Region::WholeSpace),
            other => flat.push(canonicalize(dim, &other)?),
        }
    }
    let mut points: Vec<Vector> = Vec::new();
    let mut convex: Vec<Region> = Vec::new();
    for r in flat {
        match r {
            Region::Points(ps) => points.extend(ps),
            Region::Empty => {}
            Region::WholeSpace => return Ok(Region::WholeSpace),
            other => convex.push(other),
        }
    }
    convex.sort();
    convex.dedup();
    let mut keep: Vec<Region> = Vec::new();
    for (i, c) in convex.iter().enumerate() {
        let mut covered = false;
        for (j, other) in convex.iter().enumerate() {
            if i != j && convex_subset(dim, c, other)? && (j < i || !convex_subset(dim, other, c)?) {
                covered = true;
                break;
            }
        }
        if !covered {
            keep.push(c.clone());
        }
    }
    let compiled: Vec<Vec<Halfspace>> = keep
        .iter()
        .map(|c| halfspaces(dim, c))
        .collect::<Result<_>>()?;
    points.retain(|p| !compiled.iter().any(|hs| hs.iter().all(|h| h.contains(p))));
    if !points.is_empty() {
        keep.push(canonical_points(points));
    }
    keep.sort();
    Ok(match keep.len() {
        0 => Region::Empty,
        1 => keep.pop().unwrap(),
        _ => Region::Union(keep),
    })
}

/// Converts a convex region between descriptions. `V` requires a bounded
/// region; unbounded generator pairs are available through [`generators`].
pub fn convert(dim: usize, r: &Region, target: RepKind) -> Result<Region> {
    if !is_single_piece(r) {
        return Err(Error::Unsupported("conversion of a non-convex region".into()));
    }
    match (r, target) {
        (Region::Empty, _) | (Region::WholeSpace, RepKind::H) => canonicalize(dim, r),
        (_, RepKind::V) => {
            let g = generators(dim, r)?;
            if g.is_empty() {
                return Ok(Region::Empty);
            }
            if !g.is_bounded() {
                return Err(Error::UnsupportedUnbounded("vertex conversion"));
            }
            canonical_v(dim, &g.vertices)
        }
        (_, RepKind::H) => canonical_from_generators(dim, &generators(dim, r)?),
    }
}

/// Exact membership; regions are closed so boundary points belong.
pub fn contains_point(dim: usize, r: &Region, x: &Vector) -> Result<bool> {
    check_vec(dim, x)?;
    Ok(match r {
        Region::Empty => false,
        Region::WholeSpace => true,
        Region::Points(ps) => ps.contains(x),
        Region::HPolyhedron(hs) => hs.iter().all(|h| h.contains(x)),
        Region::VPolytope(_) => halfspaces(dim, r)?.iter().all(|h| h.contains(x)),
        Region::Union(rs) => {
            for m in rs {
                if contains_point(dim, m, x)? {
                    return Ok(true);
                }
            }
            false
        }
    })
}

/// Precomputed halfspace form for repeated membership queries.
#[derive(Clone, Debug)]
pub struct CompiledRegion {
    pieces: Vec<Vec<Halfspace>>,
    points: Vec<Vector>,
}

impl CompiledRegion {
    pub fn new(dim: usize, r: &Region) -> Result<Self> {
        let mut pieces_h = Vec::new();
        let mut points = Vec::new();
        let mut stack = vec![r.clone()];
        while let Some(r) = stack.pop() {
            match r {
                Region::Union(rs) => stack.extend(rs),
                Region::Points(ps) => points.extend(ps),
                Region::Empty => {}
                other => pieces_h.push(halfspaces(dim, &other)?),
            }
        }
        Ok(CompiledRegion {
            pieces: pieces_h,
            points,
        })
    }

    pub fn contains(&self, x: &Vector) -> bool {
        self.points.contains(x) || self.pieces.iter().any(|hs| hs.iter().all(|h| h.contains(x)))
    }
}

fn gens_inside(g: &Generators, hs: &[Halfspace]) -> bool {
    g.is_empty() || g.inside_all(hs)
}

fn convex_subset(dim: usize, a: &Region, b: &Region) -> Result<bool> {
    let ga = generators(dim, a)?;
    Ok(gens_inside(&ga, &halfspaces(dim, b)?))
}

/// Whether the polyhedron `{hs}` is covered by the union of the convex
/// pieces `cover`, each given by halfspaces.
///
/// Splits the polyhedron along the facets of the first cover piece; parts
/// that touch the piece only on a hyperplane are skipped because their
/// closure argument pushes them into later parts.
fn covered_by(dim: usize, hs: &[Halfspace], cover: &[Vec<Halfspace>]) -> Result<bool> {
    let g = h_to_generators(dim, hs)?;
    if g.is_empty() {
        return Ok(true);
    }
    let Some((first, rest)) = cover.split_first() else {
        return Ok(false);
    };
    if g.inside_all(first) {
        return Ok(true);
    }
    let mut prefix: Vec<Halfspace> = hs.to_vec();
    for h in first {
        let mut part = prefix.clone();
        part.push(h.flipped());
        let gp = h_to_generators(dim, &part)?;
        if !gp.is_empty() {
            let pokes_out = match gp.sup_of(&h.normal) {
                None => true,
                Some(m) => m > h.offset,
            };
            if pokes_out && !covered_by(dim, &part, rest)? {
                return Ok(false);
            }
        }
        prefix.push(h.clone());
    }
    Ok(true)
}

fn gens_subset(dim: usize, g: &Generators, b: &Region) -> Result<bool> {
    if g.is_empty() {
        return Ok(true);
    }
    if is_single_piece(b) {
        return Ok(gens_inside(g, &halfspaces(dim, b)?));
    }
    let cover: Vec<Vec<Halfspace>> = pieces(dim, b)?
        .iter()
        .map(|p| generators_to_h(dim, p))
        .collect::<Result<_>>()?;
    if cover.iter().any(|hs| g.inside_all(hs)) {
        return Ok(true);
    }
    covered_by(dim, &generators_to_h(dim, g)?, &cover)
}

/// Exact inclusion `a ⊆ b`.
pub fn subset(dim: usize, a: &Region, b: &Region) -> Result<bool> {
    check_region(dim, b)?;
    for g in pieces(dim, a)? {
        if !gens_subset(dim, &g, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Set equality, as mutual inclusion.
pub fn region_eq(dim: usize, a: &Region, b: &Region) -> Result<bool> {
    Ok(subset(dim, a, b)? && subset(dim, b, a)?)
}

/// Exact intersection, distributing over unions and filtering point sets.
pub fn intersection(dim: usize, a: &Region, b: &Region) -> Result<Region> {
    check_region(dim, a)?;
    check_region(dim, b)?;
    match (a, b) {
        (Region::Empty, _) | (_, Region::Empty) => Ok(Region::Empty),
        (Region::WholeSpace, other) | (other, Region::WholeSpace) => canonicalize(dim, other),
        (Region::Union(rs), other) | (other, Region::Union(rs)) => {
            let parts: Vec<Region> = rs
                .iter()
                .map(|m| intersection(dim, m, other))
                .collect::<Result<_>>()?;
            union(dim, &parts)
        }
        (Region::Points(ps), other) | (other, Region::Points(ps)) => {
            let c = CompiledRegion::new(dim, other)?;
            Ok(canonical_points(ps.iter().filter(|p| c.contains(p)).cloned().collect()))
        }
        _ => {
            let mut hs = halfspaces(dim, a)?;
            hs.extend(halfspaces(dim, b)?);
            canonical_h(dim, &hs)
        }
    }
}

fn bounded_points(dim: usize, r: &Region, what: &'static str) -> Result<Vec<Vector>> {
    let mut out = Vec::new();
    for g in pieces(dim, r)? {
        if !g.is_bounded() {
            return Err(Error::UnsupportedUnbounded(what));
        }
        out.extend(g.vertices);
    }
    Ok(out)
}

pub fn is_bounded(dim: usize, r: &Region) -> Result<bool> {
    Ok(pieces(dim, r)?.iter().all(Generators::is_bounded))
}

/// Minkowski sum of bounded regions. Convex operands give a hulled vertex
/// polytope; point sets stay point sets; unions distribute.
pub fn minkowski_sum(dim: usize, a: &Region, b: &Region) -> Result<Region> {
    let what = "Minkowski sum";
    if !is_bounded(dim, a)? || !is_bounded(dim, b)? {
        return Err(Error::UnsupportedUnbounded(what));
    }
    match (a, b) {
        (Region::Empty, _) | (_, Region::Empty) => Ok(Region::Empty),
        (Region::Union(rs), other) | (other, Region::Union(rs)) => {
            let parts: Vec<Region> = rs
                .iter()
                .map(|m| minkowski_sum(dim, m, other))
                .collect::<Result<_>>()?;
            union(dim, &parts)
        }
        (Region::Points(ps), Region::Points(qs)) => Ok(canonical_points(
            ps.iter().flat_map(|p| qs.iter().map(move |q| p.add(q))).collect(),
        )),
        (Region::Points(ps), other) | (other, Region::Points(ps)) => {
            let parts: Vec<Region> = ps
                .iter()
                .map(|p| translate(dim, other, p))
                .collect::<Result<_>>()?;
            union(dim, &parts)
        }
        _ => {
            let va = bounded_points(dim, a, what)?;
            let vb = bounded_points(dim, b, what)?;
            let sums: Vec<Vector> = va.iter().flat_map(|p| vb.iter().map(move |q| p.add(q))).collect();
            canonical_v(dim, &sums)
        }
    }
}

fn translate(dim: usize, r: &Region, p: &Vector) -> Result<Region> {
    let vs = bounded_points(dim, r, "translation")?;
    canonical_v(dim, &vs.iter().map(|v| v.add(p)).collect::<Vec<_>>())
}

/// `t . r`. Scaling by zero sends every nonempty region to the origin.
pub fn scale(dim: usize, t: &Rational, r: &Region) -> Result<Region> {
    check_region(dim, r)?;
    if t.is_zero() {
        return Ok(match r {
            Region::Empty => Region::Empty,
            _ => Region::origin(dim),
        });
    }
    Ok(match r {
        Region::Empty => Region::Empty,
        Region::WholeSpace => Region::WholeSpace,
        Region::Points(ps) => canonical_points(ps.iter().map(|p| p.scale(t)).collect()),
        Region::VPolytope(vs) => canonical_v(dim, &vs.iter().map(|p| p.scale(t)).collect::<Vec<_>>())?,
        Region::HPolyhedron(hs) => {
            let s = if t.is_negative() { -Rational::one() } else { Rational::one() };
            let scaled: Vec<Halfspace> = hs
                .iter()
                .map(|h| Halfspace::new(h.normal.scale(&s), &h.offset * t.abs()))
                .collect();
            canonical_h(dim, &scaled)?
        }
        Region::Union(rs) => {
            let parts: Vec<Region> = rs.iter().map(|m| scale(dim, t, m)).collect::<Result<_>>()?;
            union(dim, &parts)?
        }
    })
}

/// Absolute polar `{x' : |<x, x'>| <= 1 for all x in r}` under `pair`.
///
/// `r` lives in `E`; the result lives in `E'`. Use `pair.transposed()` to
/// take polars of subsets of `E'`.
pub fn crisp_polar(r: &Region, pair: &DualPair) -> Result<Region> {
    let dim = pair.dim();
    match r {
        Region::Empty => return Ok(Region::WholeSpace),
        Region::WholeSpace => return Ok(Region::origin(dim)),
        _ => {}
    }
    let mut hs = Vec::new();
    for g in pieces(dim, r)? {
        for v in &g.vertices {
            let a = pair.functional_of(v);
            hs.push(Halfspace::new(a.clone(), Rational::one()));
            hs.push(Halfspace::new(a.neg(), Rational::one()));
        }
        for d in g.rays.iter().chain(&g.lines) {
            let a = pair.functional_of(d);
            hs.push(Halfspace::new(a.clone(), Rational::zero()));
            hs.push(Halfspace::new(a.neg(), Rational::zero()));
        }
    }
    canonical_h(dim, &hs)
}

/// `conv(r)` for bounded `r`.
pub fn convex_hull(dim: usize, r: &Region) -> Result<Region> {
    canonical_v(dim, &bounded_points(dim, r, "convex hull")?)
}

/// `conv(r ∪ -r)` for bounded `r`.
pub fn abs_convex_hull(dim: usize, r: &Region) -> Result<Region> {
    let pts = bounded_points(dim, r, "absolutely convex hull")?;
    let all: Vec<Vector> = pts.iter().flat_map(|p| [p.clone(), p.neg()]).collect();
    canonical_v(dim, &all)
}

/// Whether the region is convex: the closed hull of its pieces adds nothing.
pub fn is_convex(dim: usize, r: &Region) -> Result<bool> {
    if is_single_piece(r) {
        check_region(dim, r)?;
        return Ok(true);
    }
    let ps = pieces(dim, r)?;
    let mut hull = Generators::empty();
    for p in ps {
        hull.vertices.extend(p.vertices);
        hull.rays.extend(p.rays);
        hull.lines.extend(p.lines);
    }
    gens_subset(dim, &hull, r)
}

/// Whether `t . r ⊆ r` for every real `|t| <= 1`.
///
/// For each convex piece `C` the set `∪_{|t|<=1} tC` has closure
/// `conv(C ∪ {0}) ∪ -conv(C ∪ {0})`, which must lie in `r`.
pub fn is_balanced(dim: usize, r: &Region) -> Result<bool> {
    for p in pieces(dim, r)? {
        for sign in [Rational::one(), -Rational::one()] {
            let mut g = Generators {
                vertices: p.vertices.iter().map(|v| v.scale(&sign)).collect(),
                rays: p.rays.iter().map(|v| v.scale(&sign)).collect(),
                lines: p.lines.clone(),
            };
            g.vertices.push(Vector::zeros(dim));
            if !gens_subset(dim, &g, r)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Image of a bounded region under the linear map `m` (target × source).
pub fn linear_image(m: &Matrix, r: &Region) -> Result<Region> {
    let (target, source) = (m.nrows(), m.ncols);
    check_dim(target)?;
    match r {
        Region::Empty => Ok(Region::Empty),
        Region::Points(ps) => {
            check_region(source, r)?;
            Ok(canonical_points(ps.iter().map(|p| m.apply(p)).collect()))
        }
        Region::Union(rs) => {
            let parts: Vec<Region> = rs.iter().map(|x| linear_image(m, x)).collect::<Result<_>>()?;
            union(target, &parts)
        }
        _ => {
            let pts = bounded_points(source, r, "linear image")?;
            canonical_v(target, &pts.iter().map(|p| m.apply(p)).collect::<Vec<_>>())
        }
    }
}

/// Largest `t >= 0` with `t . inner ⊆ outer`, for bounded `inner` and
/// convex `outer`. Each generator/halfspace pair bounds `t` by the ratio
/// `offset / (normal . v)`.
pub fn max_scale_inside(dim: usize, inner: &Region, outer: &Region) -> Result<ScaleBound> {
    let pts = bounded_points(dim, inner, "scale search")?;
    if pts.is_empty() {
        return Ok(ScaleBound::Unbounded);
    }
    if !is_single_piece(outer) {
        return Err(Error::Unsupported("scale search into a non-convex region".into()));
    }
    let hs = halfspaces(dim, outer)?;
    let mut lo = Rational::zero();
    let mut hi: Option<Rational> = None;
    for v in &pts {
        for h in &hs {
            let av = h.normal.dot(v);
            if av.is_zero() {
                if h.offset.is_negative() {
                    return Ok(ScaleBound::Infeasible);
                }
                continue;
            }
            let bound = &h.offset / &av;
            if av.is_positive() {
                hi = Some(match hi {
                    Some(x) if x <= bound => x,
                    _ => bound,
                });
            } else if bound > lo {
                lo = bound;
            }
        }
    }
    Ok(match hi {
        None => ScaleBound::Unbounded,
        Some(h) if h.is_positive() && h >= lo => ScaleBound::Max(h),
        Some(_) => ScaleBound::Infeasible,
    })
}

#[cfg(test)]
mod tests;
