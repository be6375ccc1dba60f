//! Step fuzzy sets: membership functions with finitely many values, stored
//! as a chain of nested closed level regions.
//!
//! A chain `[(g_1, R_1), …, (g_k, R_k)]` with `0 < g_1 < … < g_k <= 1` and
//! `R_1 ⊇ … ⊇ R_k` has membership `max{g_i : x ∈ R_i}` (zero outside `R_1`),
//! so `R_i` is exactly the level set at every `θ ∈ (g_{i-1}, g_i]`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{self, CompiledRegion, Region};
use crate::linalg::{Matrix, Vector};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Level {
    pub grade: Rational,
    pub region: Region,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepFuzzySet {
    dim: usize,
    levels: Vec<Level>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PredicateKind {
    Balanced,
    Convex,
    AbsolutelyConvex,
    Absorbing,
    Seminorm,
    WeaklyBounded,
    Closed,
}

impl PredicateKind {
    pub const ALL: [PredicateKind; 7] = [
        PredicateKind::Balanced,
        PredicateKind::Convex,
        PredicateKind::AbsolutelyConvex,
        PredicateKind::Absorbing,
        PredicateKind::Seminorm,
        PredicateKind::WeaklyBounded,
        PredicateKind::Closed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PredicateKind::Balanced => "balanced",
            PredicateKind::Convex => "convex",
            PredicateKind::AbsolutelyConvex => "absolutely_convex",
            PredicateKind::Absorbing => "absorbing",
            PredicateKind::Seminorm => "seminorm",
            PredicateKind::WeaklyBounded => "weakly_bounded",
            PredicateKind::Closed => "closed",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnvelopeKind {
    Convex,
    AbsolutelyConvex,
    Closure,
}

impl EnvelopeKind {
    pub fn name(self) -> &'static str {
        match self {
            EnvelopeKind::Convex => "convex",
            EnvelopeKind::AbsolutelyConvex => "absolutely_convex",
            EnvelopeKind::Closure => "closure",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [EnvelopeKind::Convex, EnvelopeKind::AbsolutelyConvex, EnvelopeKind::Closure]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

fn check_grade(g: &Rational) -> Result<()> {
    if !g.is_positive() || *g > Rational::one() {
        return Err(Error::InvalidGrade(rational::format(g)));
    }
    Ok(())
}

/// Sorted union of the grade lists.
pub fn merged_grades<'a>(sets: impl IntoIterator<Item = &'a StepFuzzySet>) -> Vec<Rational> {
    let mut all = BTreeSet::new();
    for s in sets {
        all.extend(s.grades());
    }
    all.into_iter().collect()
}

impl StepFuzzySet {
    /// Validating constructor: grades in `(0, 1]`, regions nested.
    /// Levels may come in any order; empty regions are dropped.
    pub fn new(dim: usize, levels: Vec<(Rational, Region)>) -> Result<Self> {
        let mut canon: Vec<Level> = Vec::with_capacity(levels.len());
        for (grade, region) in levels {
            check_grade(&grade)?;
            let region = geometry::canonicalize(dim, &region)?;
            if !region.is_empty_variant() {
                canon.push(Level { grade, region });
            }
        }
        if dim > geometry::MAX_DIM {
            return Err(Error::UnsupportedDimension(dim));
        }
        canon.sort_by(|a, b| a.grade.cmp(&b.grade));
        canon.dedup();
        for w in canon.windows(2) {
            if w[0].grade == w[1].grade {
                return Err(Error::InvalidChain(format!(
                    "grade {} appears twice with different regions",
                    rational::format(&w[0].grade)
                )));
            }
            if !geometry::subset(dim, &w[1].region, &w[0].region)? {
                return Err(Error::InvalidChain(format!(
                    "level at grade {} is not contained in level at grade {}",
                    rational::format(&w[1].grade),
                    rational::format(&w[0].grade)
                )));
            }
        }
        Ok(StepFuzzySet { dim, levels: canon })
    }

    /// Builds a chain whose nesting holds by construction. Empty regions are
    /// dropped; grades must already be strictly increasing.
    pub(crate) fn from_nested(dim: usize, levels: Vec<(Rational, Region)>) -> Self {
        let levels: Vec<Level> = levels
            .into_iter()
            .filter(|(_, r)| !r.is_empty_variant())
            .map(|(grade, region)| Level { grade, region })
            .collect();
        debug_assert!(levels.windows(2).all(|w| w[0].grade < w[1].grade));
        debug_assert!(levels.iter().all(|l| check_grade(&l.grade).is_ok()));
        StepFuzzySet { dim, levels }
    }

    /// The zero fuzzy set.
    pub fn empty(dim: usize) -> Self {
        StepFuzzySet { dim, levels: Vec::new() }
    }

    /// Characteristic function `χ_B`.
    pub fn crisp(dim: usize, region: Region) -> Result<Self> {
        Self::new(dim, vec![(Rational::one(), region)])
    }

    /// The constant fuzzy set `1`.
    pub fn constant_one(dim: usize) -> Self {
        Self::from_nested(dim, vec![(Rational::one(), Region::WholeSpace)])
    }

    /// `A_λ`: value `λ` on the finite set `A`, zero elsewhere.
    pub fn point_set(dim: usize, points: Vec<Vector>, lambda: Rational) -> Result<Self> {
        Self::new(dim, vec![(lambda, Region::Points(points))])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn grades(&self) -> Vec<Rational> {
        self.levels.iter().map(|l| l.grade.clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.levels.is_empty()
    }

    /// `sup μ`, the top grade (zero for the empty chain).
    pub fn height(&self) -> Rational {
        self.levels.last().map_or_else(Rational::zero, |l| l.grade.clone())
    }

    fn check_same_dim(&self, other: &StepFuzzySet) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn compile(&self) -> Result<CompiledSet> {
        Ok(CompiledSet {
            dim: self.dim,
            levels: self
                .levels
                .iter()
                .map(|l| Ok((l.grade.clone(), CompiledRegion::new(self.dim, &l.region)?)))
                .collect::<Result<_>>()?,
        })
    }

    pub fn membership(&self, x: &Vector) -> Result<Rational> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            });
        }
        for l in self.levels.iter().rev() {
            if geometry::contains_point(self.dim, &l.region, x)? {
                return Ok(l.grade.clone());
            }
        }
        Ok(Rational::zero())
    }

    /// `[μ]_θ = {x : μ(x) >= θ}`; `θ <= 0` gives the whole space.
    pub fn level_set(&self, theta: &Rational) -> Region {
        if !theta.is_positive() {
            return Region::WholeSpace;
        }
        self.levels
            .iter()
            .find(|l| l.grade >= *theta)
            .map_or(Region::Empty, |l| l.region.clone())
    }

    /// Pointwise `μ ∨ η`.
    pub fn sup(&self, other: &StepFuzzySet) -> Result<StepFuzzySet> {
        self.check_same_dim(other)?;
        let levels = merged_grades([self, other])
            .into_iter()
            .map(|g| {
                let r = geometry::union(self.dim, &[self.level_set(&g), other.level_set(&g)])?;
                Ok((g, r))
            })
            .collect::<Result<_>>()?;
        Ok(Self::from_nested(self.dim, levels))
    }

    /// Pointwise `μ ∧ η`.
    pub fn inf(&self, other: &StepFuzzySet) -> Result<StepFuzzySet> {
        self.check_same_dim(other)?;
        let levels = merged_grades([self, other])
            .into_iter()
            .map(|g| {
                let r = geometry::intersection(self.dim, &self.level_set(&g), &other.level_set(&g))?;
                Ok((g, r))
            })
            .collect::<Result<_>>()?;
        Ok(Self::from_nested(self.dim, levels))
    }

    /// Fuzzy sum `(μ + η)(x) = sup_{x = a + b} μ(a) ∧ η(b)`, levelwise a
    /// Minkowski sum.
    pub fn add(&self, other: &StepFuzzySet) -> Result<StepFuzzySet> {
        self.check_same_dim(other)?;
        let mut levels = Vec::new();
        for g in merged_grades([self, other]) {
            let (a, b) = (self.level_set(&g), other.level_set(&g));
            if a.is_empty_variant() || b.is_empty_variant() {
                continue;
            }
            levels.push((g, geometry::minkowski_sum(self.dim, &a, &b)?));
        }
        Ok(Self::from_nested(self.dim, levels))
    }

    /// `(tμ)(x) = μ(x/t)` for `t ≠ 0`; `0μ` is `sup μ` at the origin.
    pub fn scalar_mul(&self, t: &Rational) -> Result<StepFuzzySet> {
        if t.is_zero() {
            if self.is_zero() {
                return Ok(self.clone());
            }
            return Ok(Self::from_nested(self.dim, vec![(self.height(), Region::origin(self.dim))]));
        }
        let levels = self
            .levels
            .iter()
            .map(|l| Ok((l.grade.clone(), geometry::scale(self.dim, t, &l.region)?)))
            .collect::<Result<_>>()?;
        Ok(Self::from_nested(self.dim, levels))
    }

    pub fn predicate(&self, kind: PredicateKind) -> Result<bool> {
        let all = |f: &dyn Fn(&Region) -> Result<bool>| -> Result<bool> {
            for l in &self.levels {
                if !f(&l.region)? {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        let n = self.dim;
        match kind {
            PredicateKind::Balanced => all(&|r| geometry::is_balanced(n, r)),
            PredicateKind::Convex => all(&|r| geometry::is_convex(n, r)),
            PredicateKind::AbsolutelyConvex => {
                Ok(self.predicate(PredicateKind::Balanced)? && self.predicate(PredicateKind::Convex)?)
            }
            PredicateKind::Absorbing => Ok(self.membership(&Vector::zeros(n))?.is_one()),
            PredicateKind::Seminorm => Ok(self.predicate(PredicateKind::AbsolutelyConvex)?
                && self.predicate(PredicateKind::Absorbing)?),
            PredicateKind::WeaklyBounded => all(&|r| geometry::is_bounded(n, r)),
            PredicateKind::Closed => Ok(true),
        }
    }

    /// Least fuzzy set of the requested kind above `μ`, computed levelwise.
    pub fn envelope(&self, kind: EnvelopeKind) -> Result<StepFuzzySet> {
        let hull = |r: &Region| match kind {
            EnvelopeKind::Convex => geometry::convex_hull(self.dim, r),
            EnvelopeKind::AbsolutelyConvex => geometry::abs_convex_hull(self.dim, r),
            EnvelopeKind::Closure => Ok(r.clone()),
        };
        let levels = self
            .levels
            .iter()
            .map(|l| Ok((l.grade.clone(), hull(&l.region)?)))
            .collect::<Result<_>>()?;
        Ok(Self::from_nested(self.dim, levels))
    }

    /// Image `f(μ)(y) = sup_{f(x) = y} μ(x)` under the linear map `m`.
    pub fn pushforward(&self, m: &Matrix) -> Result<StepFuzzySet> {
        if m.ncols != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: m.ncols,
            });
        }
        let levels = self
            .levels
            .iter()
            .map(|l| Ok((l.grade.clone(), geometry::linear_image(m, &l.region)?)))
            .collect::<Result<_>>()?;
        Ok(Self::from_nested(m.nrows(), levels))
    }

    /// Pointwise `μ <= ρ`.
    pub fn leq(&self, other: &StepFuzzySet) -> Result<bool> {
        self.check_same_dim(other)?;
        for l in &self.levels {
            if !geometry::subset(self.dim, &l.region, &other.level_set(&l.grade))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as membership functions (level sets agree at every grade of
    /// either chain).
    pub fn same_function(&self, other: &StepFuzzySet) -> Result<bool> {
        self.check_same_dim(other)?;
        for g in merged_grades([self, other]) {
            if !geometry::region_eq(self.dim, &self.level_set(&g), &other.level_set(&g))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Chain equality: identical grade lists and set-equal regions per level.
    pub fn chain_eq(&self, other: &StepFuzzySet) -> Result<bool> {
        self.check_same_dim(other)?;
        if self.grades() != other.grades() {
            return Ok(false);
        }
        for (a, b) in self.levels.iter().zip(&other.levels) {
            if !geometry::region_eq(self.dim, &a.region, &b.region)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Re-checks the chain invariants; used by tests on derived sets.
    pub fn validate(&self) -> Result<()> {
        for l in &self.levels {
            check_grade(&l.grade)?;
            if l.region.is_empty_variant() {
                return Err(Error::InvalidChain("empty level".into()));
            }
        }
        for w in self.levels.windows(2) {
            if w[0].grade >= w[1].grade {
                return Err(Error::InvalidChain("grades not increasing".into()));
            }
            if !geometry::subset(self.dim, &w[1].region, &w[0].region)? {
                return Err(Error::InvalidChain("levels not nested".into()));
            }
        }
        Ok(())
    }
}

impl fmt::Display for StepFuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StepFuzzySet(dim={}, [", self.dim)?;
        for (i, l) in self.levels.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {:?}", rational::format(&l.grade), l.region)?;
        }
        write!(f, "])")
    }
}

/// Membership evaluator with every level in halfspace form.
#[derive(Clone, Debug)]
pub struct CompiledSet {
    dim: usize,
    levels: Vec<(Rational, CompiledRegion)>,
}

impl CompiledSet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn membership(&self, x: &Vector) -> Rational {
        self.levels
            .iter()
            .rev()
            .find(|(_, r)| r.contains(x))
            .map_or_else(Rational::zero, |(g, _)| g.clone())
    }
}
