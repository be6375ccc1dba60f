//! Brute-force evaluation on finite grids, used to cross-check the closed
//! forms. Everything stays in exact rationals, so agreement is equality.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fuzzyset::StepFuzzySet;
use crate::geometry::{self, CompiledRegion, Generators};
use crate::linalg::Vector;
use crate::pairing::DualPair;
use crate::rational::{self, Rational};

pub const DEFAULT_MAX_GRID: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axis {
    pub lo: Rational,
    pub hi: Rational,
    pub step: Rational,
}

impl Axis {
    pub fn new(lo: Rational, hi: Rational, step: Rational) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::InvalidGrid("step must be positive".into()));
        }
        if lo > hi {
            return Err(Error::InvalidGrid("lower bound exceeds upper bound".into()));
        }
        Ok(Axis { lo, hi, step })
    }

    /// Parses `lo:hi:step`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, step] = parts[..] else {
            return Err(Error::InvalidGrid(format!("expected lo:hi:step, got {s:?}")));
        };
        Axis::new(rational::parse(lo)?, rational::parse(hi)?, rational::parse(step)?)
    }

    fn count(&self) -> usize {
        let n = ((&self.hi - &self.lo) / &self.step).floor().to_integer();
        usize::try_from(n).map_or(usize::MAX, |n| n.saturating_add(1))
    }

    fn values(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut x = self.lo.clone();
        while x <= self.hi {
            out.push(x.clone());
            x += &self.step;
        }
        out
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}",
            rational::format(&self.lo),
            rational::format(&self.hi),
            rational::format(&self.step)
        )
    }
}

/// Product grid, one axis per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    axes: Vec<Axis>,
}

impl Grid {
    pub fn new(axes: Vec<Axis>, cap: usize) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::InvalidGrid("grid needs at least one axis".into()));
        }
        let points = axes.iter().fold(1usize, |acc, a| acc.saturating_mul(a.count()));
        if points > cap {
            return Err(Error::GridTooLarge { points, cap });
        }
        Ok(Grid { axes })
    }

    /// The same axis repeated `dim` times.
    pub fn cube(dim: usize, axis: Axis, cap: usize) -> Result<Self> {
        Grid::new(vec![axis; dim], cap)
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn points(&self) -> Vec<Vector> {
        let mut out = vec![Vec::new()];
        for axis in &self.axes {
            let vals = axis.values();
            out = out
                .into_iter()
                .flat_map(|p| {
                    vals.iter().map(move |x| {
                        let mut q = p.clone();
                        q.push(x.clone());
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(Vector).collect()
    }
}

/// Grid points with a grade each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub dim: usize,
    pub rows: Vec<(Vector, Rational)>,
}

fn check_grid(mu: &StepFuzzySet, grid: &Grid) -> Result<()> {
    if grid.dim() != mu.dim() {
        return Err(Error::DimensionMismatch {
            expected: mu.dim(),
            found: grid.dim(),
        });
    }
    Ok(())
}

/// Membership by testing every level and keeping the largest grade found.
pub fn oracle_membership(mu: &StepFuzzySet, grid: &Grid) -> Result<Table> {
    check_grid(mu, grid)?;
    let levels: Vec<(Rational, CompiledRegion)> = mu
        .levels()
        .iter()
        .map(|l| Ok((l.grade.clone(), CompiledRegion::new(mu.dim(), &l.region)?)))
        .collect::<Result<_>>()?;
    let rows = grid
        .points()
        .into_par_iter()
        .map(|x| {
            let g = levels
                .iter()
                .filter(|(_, r)| r.contains(&x))
                .map(|(g, _)| g.clone())
                .max()
                .unwrap_or_else(Rational::zero);
            (x, g)
        })
        .collect();
    Ok(Table { dim: mu.dim(), rows })
}

/// Grades of `μ`, their complements, `1`, and the midpoints between
/// consecutive values, all inside `(0, 1]`.
pub fn theta_lattice(mu: &StepFuzzySet) -> Vec<Rational> {
    let mut pts: Vec<Rational> = vec![Rational::zero(), Rational::one()];
    for g in mu.grades() {
        pts.push(Rational::one() - &g);
        pts.push(g);
    }
    pts.sort();
    pts.dedup();
    let two = Rational::from_integer(2.into());
    let mids: Vec<Rational> = pts.windows(2).map(|w| (&w[0] + &w[1]) / &two).collect();
    pts.extend(mids);
    pts.retain(|t| t.is_positive());
    pts.sort();
    pts.dedup();
    pts
}

fn polar_contains(gens: &[Generators], xp: &Vector, pair: &DualPair) -> bool {
    gens.iter().all(|g| {
        g.vertices.iter().all(|v| pair.pair(v, xp).abs() <= Rational::one())
            && g.rays.iter().chain(&g.lines).all(|d| pair.pair(d, xp).is_zero())
    })
}

/// `sup {θ : x' ∈ ([μ]_{1-θ})°}` over the given `θ` values.
///
/// `[μ]_{1-θ}` only changes when `1 - θ` crosses a grade, so a `θ` that
/// passes carries the whole cell `[1 - θ_j, 1 - θ_{j-1})` with it and
/// contributes the cell's right end. Without this the sup would be missed
/// whenever it is not attained.
pub fn oracle_polar(mu: &StepFuzzySet, dual_grid: &Grid, thetas: &[Rational], pair: &DualPair) -> Result<Table> {
    check_grid(mu, dual_grid)?;
    if mu.dim() != pair.dim() {
        return Err(Error::DimensionMismatch {
            expected: pair.dim(),
            found: mu.dim(),
        });
    }
    if let Some(t) = thetas.iter().find(|t| !t.is_positive() || **t > Rational::one()) {
        return Err(Error::InvalidGrade(rational::format(t)));
    }
    let mut ends: Vec<Rational> = std::iter::once(Rational::zero())
        .chain(mu.grades())
        .map(|g| Rational::one() - g)
        .collect();
    ends.sort();
    let cases: Vec<(Rational, Vec<Generators>)> = thetas
        .iter()
        .map(|t| {
            let level = mu.level_set(&(Rational::one() - t));
            let end = ends.iter().find(|e| *e > t).unwrap_or(t).clone();
            Ok((end, geometry::pieces(mu.dim(), &level)?))
        })
        .collect::<Result<_>>()?;
    let rows = dual_grid
        .points()
        .into_par_iter()
        .map(|xp| {
            let g = cases
                .iter()
                .filter(|(_, gens)| polar_contains(gens, &xp, pair))
                .map(|(end, _)| end.clone())
                .max()
                .unwrap_or_else(Rational::zero);
            (xp, g)
        })
        .collect();
    Ok(Table { dim: mu.dim(), rows })
}

/// `sup_{x = a + b} μ(a) ∧ η(b)` with `a` ranging over the grid and
/// `b = x - a` evaluated exactly. A lower bound in general, exact when the
/// grid contains a maximizing decomposition.
pub fn oracle_add(mu: &StepFuzzySet, eta: &StepFuzzySet, grid: &Grid) -> Result<Table> {
    check_grid(mu, grid)?;
    check_grid(eta, grid)?;
    let cm = mu.compile()?;
    let ce = eta.compile()?;
    let pts = grid.points();
    let mut support: Vec<(Vector, Rational)> = pts
        .iter()
        .map(|a| (a.clone(), cm.membership(a)))
        .filter(|(_, g)| g.is_positive())
        .collect();
    support.sort_by(|a, b| b.1.cmp(&a.1));
    let rows = pts
        .into_par_iter()
        .map(|x| {
            let mut best = Rational::zero();
            for (a, ga) in &support {
                if *ga <= best {
                    break;
                }
                let gb = ce.membership(&x.sub(a));
                let m = if gb < *ga { gb } else { ga.clone() };
                if m > best {
                    best = m;
                }
            }
            (x, best)
        })
        .collect();
    Ok(Table { dim: mu.dim(), rows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub point: Vector,
    pub exact: Rational,
    pub table: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareReport {
    pub checked: usize,
    pub differences: Vec<Difference>,
}

impl CompareReport {
    pub fn passes(&self) -> bool {
        self.differences.is_empty()
    }
}

/// Grid points where the exact membership disagrees with the table.
pub fn compare(exact: &StepFuzzySet, table: &Table) -> Result<CompareReport> {
    if table.dim != exact.dim() {
        return Err(Error::DimensionMismatch {
            expected: exact.dim(),
            found: table.dim,
        });
    }
    let c = exact.compile()?;
    let differences = table
        .rows
        .par_iter()
        .filter_map(|(x, g)| {
            let e = c.membership(x);
            (e != *g).then(|| Difference {
                point: x.clone(),
                exact: e,
                table: g.clone(),
            })
        })
        .collect();
    Ok(CompareReport {
        checked: table.rows.len(),
        differences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Region;
    use crate::polar;
    use crate::rational::{frac, int};

    fn axis(lo: Rational, hi: Rational, step: Rational) -> Axis {
        Axis::new(lo, hi, step).unwrap()
    }

    fn int_grid(dim: usize, r: i64) -> Grid {
        Grid::cube(dim, axis(int(-r), int(r), int(1)), DEFAULT_MAX_GRID).unwrap()
    }

    fn boxes() -> StepFuzzySet {
        StepFuzzySet::new(
            2,
            vec![
                (frac(1, 2), Region::cube(2, int(-2), int(2))),
                (int(1), Region::cube(2, int(-1), int(1))),
            ],
        )
        .unwrap()
    }

    fn grade_at(t: &Table, x: &Vector) -> Rational {
        t.rows.iter().find(|(p, _)| p == x).unwrap().1.clone()
    }

    #[test]
    fn grid_parsing_and_caps() {
        let a = Axis::parse("-1:1:1/2").unwrap();
        assert_eq!(a.to_string(), "-1:1:1/2");
        assert_eq!(a.values().len(), 5);
        assert!(matches!(Axis::parse("0:1:0"), Err(Error::InvalidGrid(_))));
        assert!(matches!(Axis::parse("2:1:1"), Err(Error::InvalidGrid(_))));
        assert!(matches!(Axis::parse("0:1"), Err(Error::InvalidGrid(_))));
        let big = Grid::cube(3, axis(int(0), int(100), int(1)), DEFAULT_MAX_GRID);
        assert_eq!(big, Err(Error::GridTooLarge { points: 101 * 101 * 101, cap: DEFAULT_MAX_GRID }));
        assert_eq!(int_grid(2, 1).points().len(), 9);
    }

    #[test]
    fn membership_examples() {
        let chi = StepFuzzySet::crisp(1, Region::interval(int(-1), int(1))).unwrap();
        let t = oracle_membership(&chi, &int_grid(1, 2)).unwrap();
        let grades: Vec<Rational> = t.rows.iter().map(|r| r.1.clone()).collect();
        assert_eq!(grades, vec![int(0), int(1), int(1), int(1), int(0)]);
        let g = Grid::cube(2, axis(int(-2), int(2), frac(1, 2)), DEFAULT_MAX_GRID).unwrap();
        let t = oracle_membership(&boxes(), &g).unwrap();
        assert_eq!(grade_at(&t, &Vector(vec![frac(3, 2), int(0)])), frac(1, 2));
        let t = oracle_membership(&StepFuzzySet::empty(1), &int_grid(1, 2)).unwrap();
        assert!(t.rows.iter().all(|r| r.1.is_zero()));
    }

    #[test]
    fn polar_examples() {
        let pair1 = DualPair::standard(1);
        let chi = StepFuzzySet::crisp(1, Region::interval(int(-1), int(1))).unwrap();
        let g = Grid::cube(1, axis(int(-2), int(2), frac(1, 2)), DEFAULT_MAX_GRID).unwrap();
        let t = oracle_polar(&chi, &g, &theta_lattice(&chi), &pair1).unwrap();
        assert_eq!(grade_at(&t, &Vector(vec![frac(1, 2)])), int(1));
        let one = StepFuzzySet::constant_one(1);
        let t = oracle_polar(&one, &g, &theta_lattice(&one), &pair1).unwrap();
        assert_eq!(grade_at(&t, &Vector(vec![frac(1, 2)])), int(0));
        assert_eq!(grade_at(&t, &Vector(vec![int(0)])), int(1));

        let pair2 = DualPair::standard(2);
        let g2 = Grid::cube(2, axis(int(-1), int(1), frac(1, 4)), DEFAULT_MAX_GRID).unwrap();
        let t = oracle_polar(&boxes(), &g2, &theta_lattice(&boxes()), &pair2).unwrap();
        assert_eq!(grade_at(&t, &Vector(vec![frac(3, 4), int(0)])), frac(1, 2));
        let exact = polar::fuzzy_polar(&boxes(), &pair2).unwrap();
        assert!(compare(&exact, &t).unwrap().passes());
    }

    #[test]
    fn refining_theta_grid_never_lowers_grades() {
        let pair = DualPair::standard(2);
        let g = Grid::cube(2, axis(int(-1), int(1), frac(1, 4)), DEFAULT_MAX_GRID).unwrap();
        let coarse = oracle_polar(&boxes(), &g, &[frac(1, 4)], &pair).unwrap();
        let fine = oracle_polar(&boxes(), &g, &theta_lattice(&boxes()), &pair).unwrap();
        for ((x, a), (y, b)) in coarse.rows.iter().zip(&fine.rows) {
            assert_eq!(x, y);
            assert!(a <= b, "at {x}");
        }
    }

    #[test]
    fn add_examples() {
        let a = StepFuzzySet::crisp(1, Region::interval(int(0), int(1))).unwrap();
        let b = StepFuzzySet::crisp(1, Region::interval(int(1), int(2))).unwrap();
        let g = Grid::cube(1, axis(int(-1), int(4), int(1)), DEFAULT_MAX_GRID).unwrap();
        let t = oracle_add(&a, &b, &g).unwrap();
        let ones: Vec<Rational> = t.rows.iter().filter(|r| r.1.is_one()).map(|r| r.0[0].clone()).collect();
        assert_eq!(ones, vec![int(1), int(2), int(3)]);

        let origin = StepFuzzySet::crisp(2, Region::origin(2)).unwrap();
        let g2 = Grid::cube(2, axis(int(-3), int(3), frac(1, 2)), DEFAULT_MAX_GRID).unwrap();
        assert_eq!(oracle_add(&boxes(), &origin, &g2).unwrap(), oracle_membership(&boxes(), &g2).unwrap());

        let m = StepFuzzySet::new(
            1,
            vec![(frac(1, 2), Region::interval(int(-2), int(2))), (int(1), Region::interval(int(-1), frac(1, 2)))],
        )
        .unwrap();
        let e = StepFuzzySet::new(
            1,
            vec![(frac(1, 3), Region::interval(int(-1), int(3))), (int(1), Region::interval(int(0), int(1)))],
        )
        .unwrap();
        let g = Grid::cube(1, axis(int(-5), int(5), frac(1, 4)), DEFAULT_MAX_GRID).unwrap();
        assert!(compare(&m.add(&e).unwrap(), &oracle_add(&m, &e, &g).unwrap()).unwrap().passes());
    }

    #[test]
    fn compare_detects_corruption_and_mismatch() {
        let pair = DualPair::standard(2);
        let g = Grid::cube(2, axis(int(-1), int(1), frac(1, 4)), DEFAULT_MAX_GRID).unwrap();
        let t = oracle_polar(&boxes(), &g, &theta_lattice(&boxes()), &pair).unwrap();
        let corrupted = StepFuzzySet::new(
            2,
            vec![(frac(1, 2), Region::cube(2, int(-1), int(1))), (int(1), Region::cube(2, frac(-1, 2), frac(1, 2)))],
        )
        .unwrap();
        assert!(!compare(&corrupted, &t).unwrap().passes());
        let one_dim = StepFuzzySet::crisp(1, Region::interval(int(-1), int(1))).unwrap();
        assert!(matches!(compare(&one_dim, &t), Err(Error::DimensionMismatch { .. })));
    }
}
