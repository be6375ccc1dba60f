use itertools::Itertools;
use num_traits::Signed;

use super::*;
use crate::linalg::{self, Vector};
use crate::rational::{frac, int, Rational};

fn v(xs: &[i64]) -> Vector {
    Vector::from_ints(xs)
}

fn vpoly(pts: &[&[i64]]) -> Region {
    Region::VPolytope(pts.iter().map(|p| v(p)).collect())
}

fn hpoly(rows: &[(&[i64], i64)]) -> Region {
    Region::HPolyhedron(
        rows.iter()
            .map(|(n, b)| Halfspace::new(v(n), int(*b)))
            .collect(),
    )
}

fn square() -> Region {
    vpoly(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]])
}

fn cross() -> Region {
    hpoly(&[(&[1, 1], 1), (&[1, -1], 1), (&[-1, 1], 1), (&[-1, -1], 1)])
}

fn std2() -> DualPair {
    DualPair::standard(2)
}

/// Independent hull-membership oracle: by Carathéodory, `x ∈ conv(P)` iff
/// `x` is a nonnegative barycentric combination of some affinely independent
/// subset of at most `n + 1` points.
fn in_hull_brute(dim: usize, pts: &[Vector], x: &Vector) -> bool {
    for k in 1..=(dim + 1).min(pts.len()) {
        for combo in (0..pts.len()).combinations(k) {
            // rows: coordinates then the affine row; columns: lambdas + rhs
            let mut rows: Vec<Vec<Rational>> = (0..dim)
                .map(|i| {
                    let mut r: Vec<Rational> = combo.iter().map(|&j| pts[j][i].clone()).collect();
                    r.push(x[i].clone());
                    r
                })
                .collect();
            let mut affine: Vec<Rational> = vec![int(1); k];
            affine.push(int(1));
            rows.push(affine);
            let (r, pivots) = linalg::rref(&rows, k + 1);
            if pivots.contains(&k) || pivots.len() != k {
                continue;
            }
            let lambdas: Vec<Rational> = r.iter().map(|row| row[k].clone()).collect();
            if lambdas.iter().all(|l| !l.is_negative()) {
                return true;
            }
        }
    }
    false
}

#[test]
fn canonicalize_drops_interior_point() {
    let r = Region::VPolytope(vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), Vector(vec![frac(1, 4), frac(1, 4)])]);
    assert_eq!(canonicalize(2, &r).unwrap(), vpoly(&[&[0, 0], &[0, 1], &[1, 0]]));
}

#[test]
fn canonicalize_drops_dominated_halfspace() {
    let r = hpoly(&[(&[1], 1), (&[1], 2)]);
    // x <= 1 on the line has one vertex (1) and the ray -1
    assert_eq!(canonicalize(1, &r).unwrap(), hpoly(&[(&[1], 1)]));
    assert_eq!(canonicalize(1, &Region::Empty).unwrap(), Region::Empty);
}

#[test]
fn canonicalize_is_idempotent() {
    for r in [square(), cross(), hpoly(&[(&[1, 0], 1), (&[-1, 0], 1)])] {
        let c = canonicalize(2, &r).unwrap();
        assert_eq!(canonicalize(2, &c).unwrap(), c);
        assert!(region_eq(2, &c, &r).unwrap());
    }
}

#[test]
fn convert_square_to_h() {
    let h = convert(2, &square(), RepKind::H).unwrap();
    assert_eq!(
        h,
        hpoly(&[(&[-1, 0], 1), (&[0, -1], 1), (&[0, 1], 1), (&[1, 0], 1)])
    );
}

#[test]
fn convert_cross_to_v() {
    let vrep = convert(2, &cross(), RepKind::V).unwrap();
    assert_eq!(vrep, vpoly(&[&[-1, 0], &[0, -1], &[0, 1], &[1, 0]]));
}

#[test]
fn convert_half_line() {
    let g = generators(1, &hpoly(&[(&[-1], 0)])).unwrap();
    assert_eq!(g.vertices, vec![v(&[0])]);
    assert_eq!(g.rays, vec![v(&[1])]);
    assert_eq!(
        convert(1, &hpoly(&[(&[-1], 0)]), RepKind::V),
        Err(Error::UnsupportedUnbounded("vertex conversion"))
    );
}

#[test]
fn convert_rejects_large_dimension() {
    let p = Region::point(Vector::zeros(5));
    assert_eq!(convert(5, &p, RepKind::H), Err(Error::UnsupportedDimension(5)));
}

#[test]
fn contains_point_examples() {
    let seg = hpoly(&[(&[1], 1), (&[-1], 1)]);
    assert!(contains_point(1, &seg, &v(&[1])).unwrap());
    assert!(!contains_point(2, &Region::Empty, &v(&[0, 0])).unwrap());
    let tri = vpoly(&[&[0, 0], &[2, 0], &[0, 2]]);
    assert!(contains_point(2, &tri, &v(&[1, 1])).unwrap());
    assert!(in_hull_brute(2, &[v(&[0, 0]), v(&[2, 0]), v(&[0, 2])], &v(&[1, 1])));
    assert!(!contains_point(2, &tri, &Vector(vec![int(1), frac(11, 10)])).unwrap());
}

#[test]
fn subset_examples() {
    assert!(subset(1, &Region::interval(int(-1), int(1)), &Region::interval(int(-2), int(2))).unwrap());
    assert!(subset(2, &Region::point(v(&[1, 0])), &cross()).unwrap());
    assert!(!subset(2, &square(), &cross()).unwrap());
    assert!(subset(2, &cross(), &square()).unwrap());
    assert!(subset(2, &Region::Empty, &Region::Empty).unwrap());
    assert!(!subset(2, &Region::WholeSpace, &square()).unwrap());
}

#[test]
fn subset_into_union_needs_both_members() {
    // [0,2] is covered by [0,1] ∪ [1,2] but not by either alone
    let u = union(1, &[Region::interval(int(0), int(1)), Region::interval(int(1), int(2))]).unwrap();
    assert!(matches!(u, Region::Union(_)));
    assert!(subset(1, &Region::interval(int(0), int(2)), &u).unwrap());
    let gap = union(1, &[Region::interval(int(0), int(1)), Region::interval(frac(3, 2), int(2))]).unwrap();
    assert!(!subset(1, &Region::interval(int(0), int(2)), &gap).unwrap());
    // the plane is the union of two closed half planes
    let halves = Region::Union(vec![hpoly(&[(&[1, 0], 0)]), hpoly(&[(&[-1, 0], 0)])]);
    assert!(subset(2, &Region::WholeSpace, &halves).unwrap());
}

#[test]
fn square_covered_by_two_triangles() {
    let t1 = vpoly(&[&[1, 1], &[-1, 1], &[-1, -1]]);
    let t2 = vpoly(&[&[1, 1], &[1, -1], &[-1, -1]]);
    let u = Region::Union(vec![t1.clone(), t2]);
    assert!(subset(2, &square(), &u).unwrap());
    let u2 = Region::Union(vec![t1, vpoly(&[&[1, 1], &[1, -1], &[0, 0]])]);
    assert!(!subset(2, &square(), &u2).unwrap());
}

#[test]
fn minkowski_examples() {
    let s = minkowski_sum(1, &Region::interval(int(0), int(1)), &Region::interval(int(1), int(2))).unwrap();
    assert_eq!(s, Region::interval(int(1), int(3)));
    let a = vpoly(&[&[0, 0], &[1, 0]]);
    let b = vpoly(&[&[0, 0], &[0, 1]]);
    let sq = minkowski_sum(2, &a, &b).unwrap();
    assert_eq!(sq, vpoly(&[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]));
    let id = minkowski_sum(2, &Region::origin(2), &cross()).unwrap();
    assert!(region_eq(2, &id, &cross()).unwrap());
    assert_eq!(
        minkowski_sum(1, &hpoly(&[(&[1], 1)]), &Region::origin(1)),
        Err(Error::UnsupportedUnbounded("Minkowski sum"))
    );
}

#[test]
fn minkowski_of_point_sets_stays_discrete() {
    let p = Region::Points(vec![v(&[0]), v(&[2])]);
    let q = Region::Points(vec![v(&[0]), v(&[1])]);
    assert_eq!(
        minkowski_sum(1, &p, &q).unwrap(),
        Region::Points(vec![v(&[0]), v(&[1]), v(&[2]), v(&[3])])
    );
}

#[test]
fn scale_examples() {
    assert_eq!(
        scale(1, &int(2), &Region::interval(int(-1), int(1))).unwrap(),
        Region::interval(int(-2), int(2))
    );
    assert_eq!(scale(2, &int(0), &cross()).unwrap(), Region::origin(2));
    assert_eq!(
        scale(2, &int(-1), &Region::point(v(&[1, 2]))).unwrap(),
        Region::point(v(&[-1, -2]))
    );
    let h = scale(1, &int(-2), &hpoly(&[(&[1], 1), (&[-1], 0)])).unwrap();
    assert!(region_eq(1, &h, &Region::interval(int(-2), int(0))).unwrap());
}

#[test]
fn polar_of_square_is_cross() {
    let p = crisp_polar(&square(), &std2()).unwrap();
    assert!(region_eq(2, &p, &cross()).unwrap());
    assert_eq!(p, canonicalize(2, &cross()).unwrap());
}

#[test]
fn polar_of_whole_and_empty() {
    assert_eq!(crisp_polar(&Region::WholeSpace, &std2()).unwrap(), Region::origin(2));
    assert_eq!(crisp_polar(&Region::Empty, &std2()).unwrap(), Region::WholeSpace);
    assert_eq!(crisp_polar(&Region::origin(2), &std2()).unwrap(), Region::WholeSpace);
}

#[test]
fn polar_of_point_is_slab() {
    let slab = crisp_polar(&Region::point(v(&[1, 0])), &std2()).unwrap();
    assert_eq!(slab, hpoly(&[(&[-1, 0], 1), (&[1, 0], 1)]));
    assert!(!is_bounded(2, &slab).unwrap());
    // grid oracle: |x1'| <= 1 exactly
    for a in -3..=3 {
        for b in -3..=3 {
            let x = Vector(vec![frac(a, 2), frac(b, 2)]);
            let inside = frac(a, 2).abs() <= int(1);
            assert_eq!(contains_point(2, &slab, &x).unwrap(), inside);
        }
    }
}

#[test]
fn polar_respects_pairing_matrix() {
    let pair = DualPair::new(Matrix::from_ints(&[&[2, 0], &[0, 1]])).unwrap();
    let p = crisp_polar(&Region::point(v(&[1, 0])), &pair).unwrap();
    assert!(region_eq(2, &p, &hpoly(&[(&[2, 0], 1), (&[-2, 0], 1)])).unwrap());
}

#[test]
fn double_polar_of_slab_is_segment() {
    let slab = crisp_polar(&Region::point(v(&[1, 0])), &std2()).unwrap();
    let back = crisp_polar(&slab, &std2()).unwrap();
    assert!(region_eq(2, &back, &vpoly(&[&[-1, 0], &[1, 0]])).unwrap());
}

#[test]
fn abs_convex_hull_examples() {
    let a = abs_convex_hull(2, &Region::Points(vec![v(&[1, 0]), v(&[0, 1])])).unwrap();
    assert!(region_eq(2, &a, &cross()).unwrap());
    assert_eq!(abs_convex_hull(2, &square()).unwrap(), canonicalize(2, &square()).unwrap());
    assert_eq!(
        abs_convex_hull(2, &Region::point(v(&[1, 1]))).unwrap(),
        vpoly(&[&[-1, -1], &[1, 1]])
    );
}

#[test]
fn convex_hull_examples() {
    assert_eq!(
        convex_hull(1, &Region::Points(vec![v(&[0]), v(&[1])])).unwrap(),
        Region::interval(int(0), int(1))
    );
    let t1 = vpoly(&[&[0, 0], &[2, 0], &[1, 1]]);
    let t2 = vpoly(&[&[0, 3], &[2, 3], &[1, 2]]);
    let hull = convex_hull(2, &Region::Union(vec![t1, t2])).unwrap();
    let all: Vec<Vector> = [[0, 0], [2, 0], [1, 1], [0, 3], [2, 3], [1, 2]].iter().map(|p| v(p)).collect();
    // oracle: a point is extreme iff it is not in the hull of the others
    let extreme: Vec<Vector> = all
        .iter()
        .filter(|p| {
            let others: Vec<Vector> = all.iter().filter(|q| q != p).cloned().collect();
            !in_hull_brute(2, &others, p)
        })
        .cloned()
        .sorted()
        .collect();
    assert_eq!(hull, Region::VPolytope(extreme));
    assert_eq!(convex_hull(2, &square()).unwrap(), canonicalize(2, &square()).unwrap());
}

#[test]
fn boundedness_examples() {
    assert!(!is_bounded(2, &hpoly(&[(&[1, 0], 1), (&[-1, 0], 1)])).unwrap());
    assert!(is_bounded(2, &cross()).unwrap());
    assert!(is_bounded(2, &Region::Points(vec![v(&[5, 5]), v(&[0, 1])])).unwrap());
    assert!(!is_bounded(2, &Region::WholeSpace).unwrap());
}

#[test]
fn linear_image_examples() {
    let proj = Matrix::from_ints(&[&[1, 0]]);
    assert_eq!(linear_image(&proj, &square()).unwrap(), Region::interval(int(-1), int(1)));
    assert_eq!(
        linear_image(&Matrix::identity(2), &square()).unwrap(),
        canonicalize(2, &square()).unwrap()
    );
    let shear = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
    assert_eq!(
        linear_image(&shear, &square()).unwrap(),
        vpoly(&[&[-2, -1], &[0, -1], &[0, 1], &[2, 1]])
    );
}

#[test]
fn max_scale_examples() {
    let outer = Region::interval(int(-1), int(1));
    assert_eq!(
        max_scale_inside(1, &Region::interval(int(-5), int(5)), &outer).unwrap(),
        ScaleBound::Max(frac(1, 5))
    );
    assert_eq!(max_scale_inside(1, &Region::origin(1), &outer).unwrap(), ScaleBound::Unbounded);
    assert_eq!(
        max_scale_inside(1, &Region::interval(int(0), int(1)), &Region::origin(1)).unwrap(),
        ScaleBound::Infeasible
    );
}

#[test]
fn balanced_and_convex_regions() {
    assert!(is_balanced(2, &square()).unwrap());
    assert!(!is_balanced(1, &Region::interval(int(0), int(1))).unwrap());
    assert!(!is_balanced(1, &Region::Points(vec![v(&[-1]), v(&[0]), v(&[1])])).unwrap());
    assert!(is_balanced(1, &Region::origin(1)).unwrap());
    // a symmetric cross of two segments through the origin is balanced, not convex
    let plus = Region::Union(vec![vpoly(&[&[-1, 0], &[1, 0]]), vpoly(&[&[0, -1], &[0, 1]])]);
    assert!(is_balanced(2, &plus).unwrap());
    assert!(!is_convex(2, &plus).unwrap());
    let halves = Region::Union(vec![vpoly(&[&[0, 0], &[1, 0]]), vpoly(&[&[1, 0], &[2, 0]])]);
    assert!(is_convex(2, &halves).unwrap());
    assert!(!is_convex(1, &Region::Points(vec![v(&[0]), v(&[1])])).unwrap());
}

#[test]
fn intersection_examples() {
    let i = intersection(1, &Region::interval(int(-2), int(2)), &Region::interval(int(-1), int(3))).unwrap();
    assert!(region_eq(1, &i, &Region::interval(int(-1), int(2))).unwrap());
    let pts = Region::Points(vec![v(&[0, 0]), v(&[3, 3])]);
    assert_eq!(intersection(2, &pts, &square()).unwrap(), Region::origin(2));
    assert_eq!(
        intersection(1, &Region::interval(int(0), int(1)), &Region::interval(int(2), int(3))).unwrap(),
        Region::Empty
    );
}

#[test]
fn union_drops_contained_members() {
    let u = union(2, &[cross(), square(), Region::Points(vec![v(&[0, 0]), v(&[5, 5])])]).unwrap();
    match u {
        Region::Union(ms) => {
            assert_eq!(ms.len(), 2);
            assert!(ms.contains(&Region::Points(vec![v(&[5, 5])])));
        }
        other => panic!("expected union, got {other:?}"),
    }
}

#[test]
fn caratheodory_oracle_agrees_with_halfspaces() {
    let pts: Vec<Vector> = [[0, 0, 0], [2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 1]]
        .iter()
        .map(|p| v(p))
        .collect();
    let poly = Region::VPolytope(pts.clone());
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                let x = Vector(vec![frac(a, 2), frac(b, 2), frac(c, 2)]);
                assert_eq!(contains_point(3, &poly, &x).unwrap(), in_hull_brute(3, &pts, &x), "{x}");
            }
        }
    }
}
