//! Fuzzy polars over a dual pair.
//!
//! For a chain with grades `θ_1 < … < θ_k` (and `θ_0 = 0`) the polar is
//!
//! ```text
//! μ°(x') = sup { θ ∈ (0,1] : x' ∈ [μ]_{1-θ}° }
//! ```
//!
//! which is again a step set: grade `1 - θ_{i-1}` on `R_i°` for each level,
//! plus `1 - θ_k` everywhere when `θ_k < 1`. The sup is taken even when it
//! is not attained, so `μ°` is upper semicontinuous and `(λμ)° = μ°/|λ|`
//! holds exactly. Conventions: `[μ]_α = E` for `α <= 0`, `∅° = E'`,
//! `E° = {0}`, `sup ∅ = 0`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fuzzyset::StepFuzzySet;
use crate::geometry::{self, Region};
use crate::linalg::Vector;
use crate::pairing::DualPair;
use crate::rational::Rational;

/// The closed-form polar together with the data it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarWitness {
    /// `θ_1 < … < θ_k` (the implicit `θ_0 = 0` is not stored).
    pub source_grades: Vec<Rational>,
    /// `R_i°` for each level, in source order.
    pub level_polars: Vec<Region>,
    pub result: StepFuzzySet,
}

fn check_pair(mu: &StepFuzzySet, pair: &DualPair) -> Result<()> {
    if mu.dim() != pair.dim() {
        return Err(Error::DimensionMismatch {
            expected: pair.dim(),
            found: mu.dim(),
        });
    }
    Ok(())
}

pub fn polar_witness(mu: &StepFuzzySet, pair: &DualPair) -> Result<PolarWitness> {
    check_pair(mu, pair)?;
    let source_grades = mu.grades();
    let level_polars: Vec<Region> = mu
        .levels()
        .iter()
        .map(|l| geometry::crisp_polar(&l.region, pair))
        .collect::<Result<_>>()?;

    // Ascending output grades: base level first, then R_k°, …, R_1°.
    let mut out = Vec::with_capacity(level_polars.len() + 1);
    let top = mu.height();
    if top < Rational::one() {
        out.push((Rational::one() - &top, Region::WholeSpace));
    }
    for i in (0..level_polars.len()).rev() {
        let prev = if i == 0 { Rational::zero() } else { source_grades[i - 1].clone() };
        out.push((Rational::one() - prev, level_polars[i].clone()));
    }
    Ok(PolarWitness {
        source_grades,
        level_polars,
        result: StepFuzzySet::from_nested(pair.dim(), out),
    })
}

/// `μ°` as a step set on `E'`. The empty chain has the constant polar `1`.
pub fn fuzzy_polar(mu: &StepFuzzySet, pair: &DualPair) -> Result<StepFuzzySet> {
    Ok(polar_witness(mu, pair)?.result)
}

fn in_polar(dim: usize, r: &Region, xp: &Vector, pair: &DualPair) -> Result<bool> {
    for g in geometry::pieces(dim, r)? {
        if g.vertices.iter().any(|v| pair.pair(v, xp).abs() > Rational::one()) {
            return Ok(false);
        }
        if g.rays.iter().chain(&g.lines).any(|d| !pair.pair(d, xp).is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `μ°(x')` evaluated directly from the generators of each level, without
/// building the polar chain.
pub fn fuzzy_polar_at(mu: &StepFuzzySet, xp: &Vector, pair: &DualPair) -> Result<Rational> {
    check_pair(mu, pair)?;
    if xp.dim() != pair.dim() {
        return Err(Error::DimensionMismatch {
            expected: pair.dim(),
            found: xp.dim(),
        });
    }
    if xp.is_zero() {
        return Ok(Rational::one());
    }
    let mut prev = Rational::zero();
    for l in mu.levels() {
        if in_polar(mu.dim(), &l.region, xp, pair)? {
            return Ok(Rational::one() - prev);
        }
        prev = l.grade.clone();
    }
    Ok(Rational::one() - prev)
}

/// `μ°°`, the second polar taken back on `E`.
pub fn bipolar(mu: &StepFuzzySet, pair: &DualPair) -> Result<StepFuzzySet> {
    let p = fuzzy_polar(mu, pair)?;
    fuzzy_polar(&p, &pair.transposed())
}

/// `⋀_j μ_j°`.
pub fn polar_of_family(mus: &[StepFuzzySet], pair: &DualPair) -> Result<StepFuzzySet> {
    let (first, rest) = mus
        .split_first()
        .ok_or_else(|| Error::PreconditionFailed("polar of an empty family".into()))?;
    let mut acc = fuzzy_polar(first, pair)?;
    for mu in rest {
        acc = acc.inf(&fuzzy_polar(mu, pair)?)?;
    }
    Ok(acc)
}

/// The algebraic laws satisfied by fuzzy polars, each as an exact check.
pub mod laws {
    use super::*;
    use crate::fuzzyset::PredicateKind;

    /// `μ <= ρ` implies `ρ° <= μ°`. Vacuously true when `μ <= ρ` fails.
    pub fn antitone(mu: &StepFuzzySet, rho: &StepFuzzySet, pair: &DualPair) -> Result<bool> {
        if !mu.leq(rho)? {
            return Ok(true);
        }
        fuzzy_polar(rho, pair)?.leq(&fuzzy_polar(mu, pair)?)
    }

    /// `(λμ)° = (1/|λ|) μ°` for `λ ≠ 0`.
    pub fn scalar(mu: &StepFuzzySet, lambda: &Rational, pair: &DualPair) -> Result<bool> {
        if lambda.is_zero() {
            return Err(Error::PreconditionFailed("scalar law needs λ ≠ 0".into()));
        }
        let lhs = fuzzy_polar(&mu.scalar_mul(lambda)?, pair)?;
        let rhs = fuzzy_polar(mu, pair)?.scalar_mul(&lambda.abs().recip())?;
        lhs.same_function(&rhs)
    }

    /// `(⋁ μ_j)° = ⋀ μ_j°`.
    pub fn family(mus: &[StepFuzzySet], pair: &DualPair) -> Result<bool> {
        let Some((first, rest)) = mus.split_first() else {
            return Err(Error::PreconditionFailed("family law needs a nonempty family".into()));
        };
        let mut sup = first.clone();
        for mu in rest {
            sup = sup.sup(mu)?;
        }
        polar_of_family(mus, pair)?.same_function(&fuzzy_polar(&sup, pair)?)
    }

    /// `(χ_B)° = χ_{B°}`.
    pub fn crisp(b: &Region, pair: &DualPair) -> Result<bool> {
        let chi = StepFuzzySet::crisp(pair.dim(), b.clone())?;
        let expect = StepFuzzySet::crisp(pair.dim(), geometry::crisp_polar(b, pair)?)?;
        fuzzy_polar(&chi, pair)?.same_function(&expect)
    }

    /// `μ°` is absolutely convex.
    pub fn polar_absolutely_convex(mu: &StepFuzzySet, pair: &DualPair) -> Result<bool> {
        fuzzy_polar(mu, pair)?.predicate(PredicateKind::AbsolutelyConvex)
    }

    #[derive(Clone, Debug, PartialEq, Eq)]
    pub struct LevelIdentityCase {
        pub theta: Rational,
        pub breakpoint: bool,
        pub holds: bool,
    }

    /// Grades `1 - θ_j` (including `θ_0 = 0`) that fall in `(0, 1]`.
    pub fn breakpoints(mu: &StepFuzzySet) -> Vec<Rational> {
        let mut out: Vec<Rational> = std::iter::once(Rational::zero())
            .chain(mu.grades())
            .map(|g| Rational::one() - g)
            .filter(|t| t.is_positive())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// `[μ°]_θ` against `([μ]_{1-θ})°` on every breakpoint and every cell
    /// midpoint of `(0, 1]`. Off breakpoints the two must be equal; at a
    /// breakpoint only `⊇` is required.
    pub fn level_identity(mu: &StepFuzzySet, pair: &DualPair) -> Result<Vec<LevelIdentityCase>> {
        let polar = fuzzy_polar(mu, pair)?;
        let bps = breakpoints(mu);
        let mut cells = vec![Rational::zero()];
        cells.extend(bps.iter().cloned());
        let mids = cells.windows(2).map(|w| (&w[0] + &w[1]) / Rational::from_integer(2.into()));
        let mut out = Vec::new();
        for (theta, breakpoint) in mids.map(|t| (t, false)).chain(bps.iter().map(|t| (t.clone(), true))) {
            let lhs = polar.level_set(&theta);
            let rhs = geometry::crisp_polar(&mu.level_set(&(Rational::one() - &theta)), pair)?;
            let holds = if breakpoint {
                geometry::subset(pair.dim(), &rhs, &lhs)?
            } else {
                geometry::region_eq(pair.dim(), &lhs, &rhs)?
            };
            out.push(LevelIdentityCase { theta, breakpoint, holds });
        }
        Ok(out)
    }
}
