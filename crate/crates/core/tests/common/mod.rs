//! Seeded random step sets shared by the integration tests.
#![allow(dead_code)]

use fuzzypolar::fuzzyset::StepFuzzySet;
use fuzzypolar::geometry::{self, Region};
use fuzzypolar::linalg::{self, Vector};
use fuzzypolar::rational::{frac, int};
use fuzzypolar::Rational;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `n/d` with `|n| <= 6`, `d ∈ {1, 2, 3}`.
pub fn small_q(rng: &mut StdRng) -> Rational {
    frac(rng.gen_range(-6..=6), *[1, 2, 3].choose(rng).unwrap())
}

pub fn nonzero_vector(rng: &mut StdRng, dim: usize) -> Vector {
    loop {
        let v = Vector((0..dim).map(|_| small_q(rng)).collect());
        if !v.is_zero() {
            return v;
        }
    }
}

/// Coordinates drawn from `{k · step : |k| <= reach}`.
pub fn lattice_vector(rng: &mut StdRng, dim: usize, step: &Rational, reach: i64) -> Vector {
    Vector((0..dim).map(|_| step * int(rng.gen_range(-reach..=reach))).collect())
}

/// Sorted distinct grades below 1, optionally followed by 1.
pub fn grades(rng: &mut StdRng, count: usize, top_one: bool) -> Vec<Rational> {
    let pool = [frac(1, 5), frac(1, 4), frac(1, 3), frac(1, 2), frac(2, 3), frac(3, 4), frac(4, 5)];
    let below = if top_one { count - 1 } else { count };
    let mut gs: Vec<Rational> = pool.choose_multiple(rng, below).cloned().collect();
    gs.sort();
    if top_one {
        gs.push(int(1));
    }
    gs
}

/// Full-dimensional, centrally symmetric polytope (so 0 is interior).
pub fn symmetric_polytope(rng: &mut StdRng, dim: usize) -> Region {
    loop {
        let k = rng.gen_range(dim..=dim + 2);
        let vs: Vec<Vector> = (0..k).map(|_| nonzero_vector(rng, dim)).collect();
        if linalg::rank_of(&vs, dim) == dim {
            return geometry::abs_convex_hull(dim, &Region::VPolytope(vs)).unwrap();
        }
    }
}

/// Arbitrary V-polytope with 1 to `dim + 2` vertices.
pub fn polytope(rng: &mut StdRng, dim: usize) -> Region {
    let k = rng.gen_range(1..=dim + 2);
    let vs: Vec<Vector> = (0..k).map(|_| Vector((0..dim).map(|_| small_q(rng)).collect())).collect();
    geometry::canonicalize(dim, &Region::VPolytope(vs)).unwrap()
}

fn vertices(dim: usize, r: &Region) -> Vec<Vector> {
    geometry::generators(dim, r).unwrap().vertices
}

/// Regions nested outward from `inner`, each adding `extra` random points
/// and closing under `hull`.
fn nest(
    rng: &mut StdRng,
    dim: usize,
    inner: Region,
    count: usize,
    hull: fn(usize, &Region) -> fuzzypolar::Result<Region>,
) -> Vec<Region> {
    let mut regions = vec![inner];
    while regions.len() < count {
        let mut pts = vertices(dim, regions.last().unwrap());
        for _ in 0..rng.gen_range(1..=2) {
            pts.push(nonzero_vector(rng, dim));
        }
        regions.push(hull(dim, &Region::VPolytope(pts)).unwrap());
    }
    regions.reverse();
    regions
}

fn chain(dim: usize, grades: Vec<Rational>, regions: Vec<Region>) -> StepFuzzySet {
    StepFuzzySet::new(dim, grades.into_iter().zip(regions).collect()).unwrap()
}

/// Closed absolutely convex chain with top grade 1 and symmetric
/// full-dimensional levels.
pub fn ac_chain(rng: &mut StdRng, dim: usize) -> StepFuzzySet {
    let k = rng.gen_range(1..=3);
    let inner = symmetric_polytope(rng, dim);
    let regions = nest(rng, dim, inner, k, geometry::abs_convex_hull);
    chain(dim, grades(rng, k, true), regions)
}

/// Nested convex levels that need not be symmetric or contain 0; the top
/// grade is below 1 about a third of the time.
pub fn convex_chain(rng: &mut StdRng, dim: usize) -> StepFuzzySet {
    let k = rng.gen_range(1..=3);
    let inner = polytope(rng, dim);
    let regions = nest(rng, dim, inner, k, geometry::convex_hull);
    let top_one = rng.gen_bool(2.0 / 3.0);
    chain(dim, grades(rng, k, top_one), regions)
}

/// Nested finite point sets with coordinates `k · step`, `|k| <= reach`.
pub fn points_chain(rng: &mut StdRng, dim: usize, step: &Rational, reach: i64) -> StepFuzzySet {
    let k = rng.gen_range(1..=3);
    let mut sets: Vec<Vec<Vector>> = vec![(0..rng.gen_range(1..=3)).map(|_| lattice_vector(rng, dim, step, reach)).collect()];
    while sets.len() < k {
        let mut next = sets.last().unwrap().clone();
        next.push(lattice_vector(rng, dim, step, reach));
        sets.push(next);
    }
    sets.reverse();
    let top_one = rng.gen_bool(0.5);
    chain(dim, grades(rng, k, top_one), sets.into_iter().map(Region::Points).collect())
}

/// A mix of the three families above.
pub fn any_chain(rng: &mut StdRng, dim: usize) -> StepFuzzySet {
    match rng.gen_range(0..3) {
        0 => ac_chain(rng, dim),
        1 => convex_chain(rng, dim),
        _ => points_chain(rng, dim, &int(1), 3),
    }
}

/// Closed absolutely convex chain whose vertices sit on the lattice `step · Z^n`.
pub fn lattice_ac_chain(rng: &mut StdRng, dim: usize, step: &Rational, reach: i64) -> StepFuzzySet {
    let k = rng.gen_range(1..=3);
    let mut regions = Vec::new();
    let mut pts: Vec<Vector> = Vec::new();
    let mut inner_reach = (reach / 2).max(1);
    while regions.len() < k {
        loop {
            pts.push(lattice_vector(rng, dim, step, inner_reach));
            if linalg::rank_of(&pts, dim) == dim {
                break;
            }
        }
        regions.push(geometry::abs_convex_hull(dim, &Region::VPolytope(pts.clone())).unwrap());
        inner_reach = reach;
    }
    regions.reverse();
    chain(dim, grades(rng, k, true), regions)
}

/// Nested full-dimensional convex levels with lattice vertices; not
/// necessarily symmetric. Full dimension matters: lattice segments can sum
/// to a polygon whose lattice points do not split into lattice summands.
pub fn lattice_convex_chain(rng: &mut StdRng, dim: usize, step: &Rational, reach: i64) -> StepFuzzySet {
    let k = rng.gen_range(1..=3);
    let mut regions = Vec::new();
    let mut pts: Vec<Vector> = Vec::new();
    while regions.len() < k {
        for _ in 0..rng.gen_range(1..=2) {
            pts.push(lattice_vector(rng, dim, step, reach));
        }
        while affine_rank(&pts, dim) < dim {
            pts.push(lattice_vector(rng, dim, step, reach));
        }
        regions.push(geometry::convex_hull(dim, &Region::VPolytope(pts.clone())).unwrap());
    }
    regions.reverse();
    let top_one = rng.gen_bool(0.5);
    chain(dim, grades(rng, k, top_one), regions)
}

/// Nested axis-aligned boxes with corners on the lattice `step · Z^n`.
pub fn lattice_box_chain(rng: &mut StdRng, dim: usize, step: &Rational, reach: i64) -> StepFuzzySet {
    let k = rng.gen_range(1..=3);
    let mut lo: Vec<i64> = (0..dim).map(|_| rng.gen_range(-reach..=0)).collect();
    let mut hi: Vec<i64> = lo.iter().map(|&l| rng.gen_range(l..=reach)).collect();
    let mut regions = Vec::new();
    while regions.len() < k {
        let corners = (0..1usize << dim).map(|mask| {
            Vector((0..dim).map(|i| step * int(if mask >> i & 1 == 1 { hi[i] } else { lo[i] })).collect())
        });
        regions.push(geometry::convex_hull(dim, &Region::VPolytope(corners.collect())).unwrap());
        for i in 0..dim {
            lo[i] -= rng.gen_range(0..=1);
            hi[i] += rng.gen_range(0..=1);
        }
    }
    regions.reverse();
    let top_one = rng.gen_bool(0.5);
    chain(dim, grades(rng, k, top_one), regions)
}

fn affine_rank(pts: &[Vector], dim: usize) -> usize {
    let diffs: Vec<Vector> = pts.iter().skip(1).map(|p| p.sub(&pts[0])).collect();
    linalg::rank_of(&diffs, dim)
}
