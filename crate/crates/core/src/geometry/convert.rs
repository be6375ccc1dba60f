//! Minkowski–Weyl conversion between halfspace and generator descriptions.
//!
//! Both directions enumerate subsets exhaustively: vertices are solutions of
//! `n` independent tight constraints, facets are hyperplanes through enough
//! affinely independent generators. This is exponential in principle but the
//! dimension is capped at four and the inputs are small.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use super::{Halfspace, MAX_DIM};
use crate::error::{Error, Result};
use crate::linalg::{self, Vector};
use crate::rational::Rational;

/// Generator description `conv(vertices) + cone(rays) + span(lines)` of a
/// closed convex polyhedron. Vertices are the extreme points of the part
/// orthogonal to the lineality space; an empty vertex list means the
/// polyhedron is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    pub vertices: Vec<Vector>,
    pub rays: Vec<Vector>,
    pub lines: Vec<Vector>,
}

impl Generators {
    pub fn empty() -> Self {
        Generators {
            vertices: Vec::new(),
            rays: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn polytope(vertices: Vec<Vector>) -> Self {
        Generators {
            vertices,
            rays: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn whole(dim: usize) -> Self {
        Generators {
            vertices: vec![Vector::zeros(dim)],
            rays: Vec::new(),
            lines: (0..dim).map(|i| Vector::unit(dim, i)).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lines.is_empty()
    }

    pub fn is_whole(&self, dim: usize) -> bool {
        !self.is_empty() && self.lines.len() == dim
    }

    /// Supremum of `a . x` over the polyhedron; `None` when unbounded above.
    /// The polyhedron must be nonempty.
    pub fn sup_of(&self, a: &Vector) -> Option<Rational> {
        if self.rays.iter().any(|r| a.dot(r).is_positive())
            || self.lines.iter().any(|l| !a.dot(l).is_zero())
        {
            return None;
        }
        self.vertices.iter().map(|v| a.dot(v)).max()
    }

    /// True when every generator satisfies `h`, i.e. the polyhedron lies in `h`.
    pub fn inside(&self, h: &Halfspace) -> bool {
        self.vertices.iter().all(|v| h.contains(v))
            && self.rays.iter().all(|r| !h.normal.dot(r).is_positive())
            && self.lines.iter().all(|l| h.normal.dot(l).is_zero())
    }

    pub fn inside_all(&self, hs: &[Halfspace]) -> bool {
        hs.iter().all(|h| self.inside(h))
    }

    /// Directions spanning the affine hull, relative to the first vertex.
    fn directions(&self) -> Vec<Vector> {
        let mut dirs: Vec<Vector> = Vec::new();
        if let Some(p0) = self.vertices.first() {
            dirs.extend(self.vertices[1..].iter().map(|v| v.sub(p0)));
        }
        dirs.extend(self.rays.iter().cloned());
        dirs.extend(self.lines.iter().cloned());
        dirs
    }

    pub fn affine_dim(&self, dim: usize) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        Some(linalg::rank_of(&self.directions(), dim))
    }
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim > MAX_DIM {
        Err(Error::UnsupportedDimension(dim))
    } else {
        Ok(())
    }
}

/// Vertex/ray/line enumeration for `{x : h.normal . x <= h.offset}`.
pub fn h_to_generators(dim: usize, hs: &[Halfspace]) -> Result<Generators> {
    check_dim(dim)?;
    let mut rows: Vec<&Halfspace> = Vec::with_capacity(hs.len());
    for h in hs {
        if h.normal.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: h.normal.dim(),
            });
        }
        if h.normal.is_zero() {
            if h.offset.is_negative() {
                return Ok(Generators::empty());
            }
        } else {
            rows.push(h);
        }
    }
    if rows.is_empty() {
        return Ok(Generators::whole(dim));
    }
    rows.sort();
    rows.dedup();
    let normals: Vec<Vec<Rational>> = rows.iter().map(|h| h.normal.0.clone()).collect();
    let lines = linalg::nullspace(&normals, dim);
    let r = dim - lines.len();

    // Every (r-1)-subset of independent rows cuts out a line (modulo the
    // lineality space). Clipping that line by all rows yields a segment
    // whose finite ends are vertices, and whose unbounded ends are rays.
    // Each vertex is reached this way from r-1 of its tight rows.
    let mut vertices = BTreeSet::new();
    let mut rays = BTreeSet::new();
    for combo in (0..rows.len()).combinations(r - 1) {
        let mut a: Vec<Vec<Rational>> = combo.iter().map(|&i| normals[i].clone()).collect();
        a.extend(lines.iter().map(|l| l.0.clone()));
        let ns = linalg::nullspace(&a, dim);
        if ns.len() != 1 {
            continue;
        }
        let d = &ns[0];
        let mut b: Vec<Rational> = combo.iter().map(|&i| rows[i].offset.clone()).collect();
        b.extend(lines.iter().map(|_| Rational::zero()));
        a.push(d.0.clone());
        b.push(Rational::zero());
        let Some(p) = linalg::solve(&a, &b) else { continue };

        let (mut lo, mut hi): (Option<Rational>, Option<Rational>) = (None, None);
        let mut feasible = true;
        for h in &rows {
            let slope = h.normal.dot(d);
            let slack = &h.offset - h.normal.dot(&p);
            if slope.is_zero() {
                if slack.is_negative() {
                    feasible = false;
                    break;
                }
            } else if slope.is_positive() {
                let t = slack / slope;
                if hi.as_ref().is_none_or(|x| t < *x) {
                    hi = Some(t);
                }
            } else {
                let t = slack / slope;
                if lo.as_ref().is_none_or(|x| t > *x) {
                    lo = Some(t);
                }
            }
        }
        if !feasible {
            continue;
        }
        if let (Some(l), Some(h)) = (&lo, &hi) {
            if l > h {
                continue;
            }
        }
        match &lo {
            Some(t) => {
                vertices.insert(p.add(&d.scale(t)));
            }
            None => {
                rays.insert(d.neg().primitive());
            }
        }
        match &hi {
            Some(t) => {
                vertices.insert(p.add(&d.scale(t)));
            }
            None => {
                rays.insert(d.primitive());
            }
        }
    }
    if vertices.is_empty() {
        return Ok(Generators::empty());
    }

    Ok(Generators {
        vertices: vertices.into_iter().collect(),
        rays: rays.into_iter().collect(),
        lines,
    })
}

/// Canonical irredundant halfspace description of a nonempty generator set.
///
/// Affine-hull equalities appear as `(w, c)` / `(-w, -c)` pairs with `w`
/// taken from the echelon basis of the orthogonal complement; facet normals
/// lie inside the direction space. Both are scaled to coprime integers and
/// the list is sorted, so equal polyhedra produce equal lists.
pub fn generators_to_h(dim: usize, g: &Generators) -> Result<Vec<Halfspace>> {
    check_dim(dim)?;
    assert!(!g.is_empty(), "generators_to_h on an empty polyhedron");
    let dirs = g.directions();
    let dir_rows: Vec<Vec<Rational>> = dirs.iter().map(|d| d.0.clone()).collect();
    let d = linalg::rank(&dir_rows, dim);
    let p0 = &g.vertices[0];
    let equalities = linalg::nullspace(&dir_rows, dim);

    let mut out: BTreeSet<Halfspace> = BTreeSet::new();
    for w in &equalities {
        let c = w.dot(p0);
        out.insert(Halfspace::new(w.clone(), c.clone()));
        out.insert(Halfspace::new(w.neg(), -c));
    }

    let nlines = g.lines.len();
    if d == dim && nlines == 0 && g.rays.is_empty() {
        out.extend(polytope_facets(dim, &g.vertices)?);
    } else if d > nlines {
        let need = d - 1 - nlines;
        let mut fixed: Vec<Vec<Rational>> = equalities.iter().map(|w| w.0.clone()).collect();
        fixed.extend(g.lines.iter().map(|l| l.0.clone()));
        let mut facets: BTreeSet<Halfspace> = BTreeSet::new();
        for (ai, anchor) in g.vertices.iter().enumerate() {
            let mut items: Vec<Vector> = g.vertices[ai + 1..].iter().map(|v| v.sub(anchor)).collect();
            items.extend(g.rays.iter().cloned());
            for combo in (0..items.len()).combinations(need) {
                let mut rows = fixed.clone();
                rows.extend(combo.iter().map(|&i| items[i].0.clone()));
                let ns = linalg::nullspace(&rows, dim);
                if ns.len() != 1 {
                    continue;
                }
                for a in [ns[0].clone(), ns[0].neg()] {
                    let h = Halfspace::new(a.clone(), a.dot(anchor)).canonical();
                    if g.inside(&h) {
                        facets.insert(h);
                    }
                }
            }
        }
        out.extend(facets);
    }
    Ok(out.into_iter().collect())
}

/// Facets of a full-dimensional polytope: with `c` the vertex centroid
/// (an interior point), each vertex `y` of `(P - c)°` gives the facet
/// `y . x <= 1 + y . c`.
fn polytope_facets(dim: usize, vertices: &[Vector]) -> Result<Vec<Halfspace>> {
    let n = Rational::from_integer(vertices.len().into());
    let mut c = Vector::zeros(dim);
    for v in vertices {
        c = c.add(v);
    }
    let c = c.scale(&n.recip());
    let rows: Vec<Halfspace> = vertices.iter().map(|v| Halfspace::new(v.sub(&c), Rational::one())).collect();
    let dual = h_to_generators(dim, &rows)?;
    Ok(dual
        .vertices
        .iter()
        .map(|y| Halfspace::new(y.clone(), Rational::one() + y.dot(&c)).canonical())
        .collect())
}

/// Extreme points of `conv(points)`, sorted.
pub fn extreme_points(dim: usize, points: &[Vector]) -> Result<Vec<Vector>> {
    let pts: Vec<Vector> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if pts.len() <= 1 {
        return Ok(pts);
    }
    let hs = generators_to_h(dim, &Generators::polytope(pts.clone()))?;
    Ok(pts
        .into_iter()
        .filter(|p| {
            let tight: Vec<Vec<Rational>> = hs
                .iter()
                .filter(|h| h.normal.dot(p) == h.offset)
                .map(|h| h.normal.0.clone())
                .collect();
            linalg::rank(&tight, dim) == dim
        })
        .collect())
}

/// Equality constraints pinning a single point.
pub fn point_halfspaces(p: &Vector) -> Vec<Halfspace> {
    let n = p.dim();
    (0..n)
        .flat_map(|i| {
            let e = Vector::unit(n, i);
            [
                Halfspace::new(e.clone(), p[i].clone()),
                Halfspace::new(e.neg(), -p[i].clone()),
            ]
        })
        .collect()
}
