//! Bases of fuzzy neighborhoods built from polars: collections satisfying
//! (c1)–(c3), absorption and boundedness, dual witnesses, refinement and a
//! checklist form of the Mackey–Arens characterization.
//!
//! Families indexed by all real scalars cannot be materialized, so every
//! "there is a `t`" is searched over `±2^e` with `e` in a configurable range.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::fuzzyset::{EnvelopeKind, PredicateKind, StepFuzzySet};
use crate::geometry::{self, Region, ScaleBound};
use crate::linalg::{self, Vector};
use crate::pairing::DualPair;
use crate::polar;
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ScaleRange {
    pub lo: i32,
    pub hi: i32,
}

impl Default for ScaleRange {
    fn default() -> Self {
        ScaleRange { lo: -8, hi: 8 }
    }
}

impl ScaleRange {
    pub fn new(lo: i32, hi: i32) -> Result<Self> {
        if lo > hi {
            return Err(Error::PreconditionFailed(format!("empty scale range {lo}:{hi}")));
        }
        Ok(ScaleRange { lo, hi })
    }

    /// `1` first, then `2^e` by increasing `|e|`, each followed by its negative.
    pub fn scales(&self) -> Vec<Rational> {
        let mut exps: Vec<i32> = (self.lo..=self.hi).collect();
        exps.sort_by_key(|e| (e.abs(), *e));
        exps.into_iter()
            .flat_map(|e| {
                let t = rational::pow2(e);
                [t.clone(), -t]
            })
            .collect()
    }
}

/// How the collection extends its listed generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `{tμ : t ≠ 0, μ a generator}`.
    ScaledGenerators,
    /// All `A_λ` with `A` finite and `λ ∈ (0, 1]`; generators are samples.
    FinitePointSets,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzyCollection {
    pub pair: DualPair,
    pub generators: Vec<StepFuzzySet>,
    pub kind: FamilyKind,
    pub scale_range: ScaleRange,
}

impl FuzzyCollection {
    pub fn new(pair: DualPair, generators: Vec<StepFuzzySet>, kind: FamilyKind) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::PreconditionFailed("collection has no generators".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != pair.dim() {
                return Err(Error::DimensionMismatch {
                    expected: pair.dim(),
                    found: g.dim(),
                });
            }
            if !g.predicate(PredicateKind::WeaklyBounded)? {
                return Err(Error::PreconditionFailed(format!("generator {i} is not weakly bounded")));
            }
            if kind == FamilyKind::FinitePointSets && point_set_parts(g).is_none() {
                return Err(Error::PreconditionFailed(format!("generator {i} is not of the form A_λ")));
            }
        }
        Ok(FuzzyCollection {
            pair,
            generators,
            kind,
            scale_range: ScaleRange::default(),
        })
    }

    pub fn with_scale_range(mut self, range: ScaleRange) -> Self {
        self.scale_range = range;
        self
    }
}

fn point_set_parts(g: &StepFuzzySet) -> Option<(Vec<Vector>, Rational)> {
    match g.levels() {
        [l] => match &l.region {
            Region::Points(ps) => Some((ps.clone(), l.grade.clone())),
            _ => None,
        },
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum C1Witness {
    /// `scale · generators[index]`.
    Scaled { index: usize, scale: Rational },
    /// `C_α` with `C = A ∪ B`, `α = max(λ, γ)`.
    PointUnion(StepFuzzySet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C1Record {
    pub pair: (usize, usize),
    pub witness: Option<C1Witness>,
    /// The witness dominates `μ ∨ φ` without being equal to it.
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C3Record {
    pub vector: Vector,
    /// `(generator index, scale, grade at the vector)`.
    pub witness: Option<(usize, Rational, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseReport {
    pub c1: Vec<C1Record>,
    pub c2: bool,
    pub c3: Vec<C3Record>,
    pub overall: bool,
}

impl BaseReport {
    /// Some pair is only dominated non-strictly.
    pub fn strictness_warning(&self) -> bool {
        self.c1.iter().any(|r| r.witness.is_some() && !r.strict)
    }
}

fn c1_record(b: &FuzzyCollection, i: usize, j: usize) -> Result<C1Record> {
    let (mu, phi) = (&b.generators[i], &b.generators[j]);
    let sup = mu.sup(phi)?;
    if b.kind == FamilyKind::FinitePointSets {
        let (mut pts, l1) = point_set_parts(mu).expect("checked in FuzzyCollection::new");
        let (more, l2) = point_set_parts(phi).expect("checked in FuzzyCollection::new");
        pts.extend(more);
        let c = StepFuzzySet::point_set(mu.dim(), pts, l1.max(l2))?;
        let ok = sup.leq(&c)?;
        let strict = ok && !sup.same_function(&c)?;
        return Ok(C1Record {
            pair: (i, j),
            witness: ok.then_some(C1Witness::PointUnion(c)),
            strict,
        });
    }
    let mut first = None;
    for scale in b.scale_range.scales() {
        for (k, g) in b.generators.iter().enumerate() {
            let s = g.scalar_mul(&scale)?;
            if !sup.leq(&s)? {
                continue;
            }
            let w = C1Witness::Scaled { index: k, scale: scale.clone() };
            if !sup.same_function(&s)? {
                return Ok(C1Record { pair: (i, j), witness: Some(w), strict: true });
            }
            first.get_or_insert(w);
        }
    }
    Ok(C1Record { pair: (i, j), witness: first, strict: false })
}

/// Checks (c1) on every pair of generators (including a generator with
/// itself), (c2) by construction and (c3) on the given spanning vectors.
pub fn validate_collection(b: &FuzzyCollection, basis: &[Vector]) -> Result<BaseReport> {
    let n = b.pair.dim();
    if basis.iter().any(|v| v.dim() != n) {
        return Err(Error::InvalidBasis(format!("basis vectors must have dimension {n}")));
    }
    if linalg::rank_of(basis, n) != n {
        return Err(Error::InvalidBasis(format!("{} vectors do not span Q^{n}", basis.len())));
    }
    let mut c1 = Vec::new();
    for i in 0..b.generators.len() {
        for j in i..b.generators.len() {
            c1.push(c1_record(b, i, j)?);
        }
    }
    let compiled: Vec<_> = b.generators.iter().map(|g| g.compile()).collect::<Result<_>>()?;
    let scales = b.scale_range.scales();
    let mut c3 = Vec::new();
    for x in basis {
        let mut witness = None;
        'search: for t in &scales {
            // (tμ)(x) = μ(x / t)
            let y = x.scale(&t.recip());
            for (k, c) in compiled.iter().enumerate() {
                let g = c.membership(&y);
                if g.is_positive() {
                    witness = Some((k, t.clone(), g));
                    break 'search;
                }
            }
        }
        c3.push(C3Record { vector: x.clone(), witness });
    }
    let overall = c1.iter().all(|r| r.witness.is_some()) && c3.iter().all(|r| r.witness.is_some());
    Ok(BaseReport { c1, c2: true, c3, overall })
}

/// `𝓑° = {μ° : μ ∈ 𝓑}` on the generators.
pub fn polar_base(b: &FuzzyCollection) -> Result<Vec<StepFuzzySet>> {
    b.generators.iter().map(|g| polar::fuzzy_polar(g, &b.pair)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeakMode {
    /// The polar of `A_λ` computed from the definition.
    Definition,
    /// `λ ∧ χ_{A°}`.
    PaperLiteral,
}

impl WeakMode {
    pub fn name(self) -> &'static str {
        match self {
            WeakMode::Definition => "definition",
            WeakMode::PaperLiteral => "paper_literal",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "definition" => Some(WeakMode::Definition),
            "paper_literal" => Some(WeakMode::PaperLiteral),
            _ => None,
        }
    }
}

/// Neighborhood of zero in `E'` generated by the finite set `A` at grade `λ`.
pub fn weak_neighborhood(
    points: &[Vector],
    lambda: &Rational,
    pair: &DualPair,
    mode: WeakMode,
) -> Result<StepFuzzySet> {
    if points.is_empty() {
        return Err(Error::PreconditionFailed("weak neighborhood of an empty set".into()));
    }
    let a = StepFuzzySet::point_set(pair.dim(), points.to_vec(), lambda.clone())?;
    match mode {
        WeakMode::Definition => polar::fuzzy_polar(&a, pair),
        WeakMode::PaperLiteral => {
            let region = geometry::crisp_polar(&Region::Points(points.to_vec()), pair)?;
            StepFuzzySet::new(pair.dim(), vec![(lambda.clone(), region)])
        }
    }
}

/// A `t > 0` with `θ ∧ (tη) <= μ` for every `θ < μ(0)`, or `None` if no
/// positive scale works. `t` is the largest such scale.
pub fn absorbs(mu: &StepFuzzySet, eta: &StepFuzzySet) -> Result<Option<Rational>> {
    let dim = mu.dim();
    if eta.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: eta.dim() });
    }
    let m0 = mu.membership(&Vector::zeros(dim))?;
    if !m0.is_positive() {
        return Err(Error::PreconditionFailed("absorbing set must be positive at 0".into()));
    }
    if !eta.predicate(PredicateKind::WeaklyBounded)? {
        return Err(Error::UnsupportedUnbounded("absorption"));
    }
    // Both level maps are constant between consecutive merged grades, so
    // the grades up to μ(0) cover every θ < μ(0).
    let mut best: Option<Rational> = None;
    for g in crate::fuzzyset::merged_grades([mu, eta]) {
        if g > m0 {
            break;
        }
        match geometry::max_scale_inside(dim, &eta.level_set(&g), &mu.level_set(&g))? {
            ScaleBound::Unbounded => {}
            ScaleBound::Infeasible => return Ok(None),
            ScaleBound::Max(t) => {
                best = Some(match best {
                    Some(b) if b <= t => b,
                    _ => t,
                })
            }
        }
    }
    Ok(Some(best.unwrap_or_else(Rational::one)))
}

/// `η` is absorbed by every member of `base`. Unbounded `η` is never bounded.
pub fn is_bounded_wrt(eta: &StepFuzzySet, base: &[StepFuzzySet]) -> Result<bool> {
    for nu in base {
        match absorbs(nu, eta) {
            Ok(Some(_)) => {}
            Ok(None) | Err(Error::UnsupportedUnbounded(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// First base member whose polar is positive at `x'`, with that grade.
pub fn dual_witness(base: &[StepFuzzySet], xp: &Vector, pair: &DualPair) -> Result<Option<(usize, Rational)>> {
    for (i, mu) in base.iter().enumerate() {
        let g = polar::fuzzy_polar_at(mu, xp, pair)?;
        if g.is_positive() {
            return Ok(Some((i, g)));
        }
    }
    Ok(None)
}

/// Every member `μ` of `base2` contains a scaled member `γ` of `base1` with
/// `γ(0) > θ` for every `θ < μ(0)`. Over a finite family that means
/// `γ <= μ` and `γ(0) >= μ(0)`.
pub fn refines(base1: &[StepFuzzySet], base2: &[StepFuzzySet], range: ScaleRange) -> Result<bool> {
    let scales = range.scales();
    for mu in base2 {
        let m0 = mu.membership(&Vector::zeros(mu.dim()))?;
        let mut found = false;
        'search: for gamma in base1 {
            if gamma.membership(&Vector::zeros(gamma.dim()))? < m0 {
                continue;
            }
            for t in &scales {
                if gamma.scalar_mul(t)?.leq(mu)? {
                    found = true;
                    break 'search;
                }
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Weak compactness in finite dimension: every level bounded (levels are
/// closed by representation).
pub fn is_weakly_fuzzy_compact(mu: &StepFuzzySet) -> Result<bool> {
    mu.predicate(PredicateKind::WeaklyBounded)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodRecord {
    pub is_closed_ac: bool,
    pub bipolar_equal: bool,
    pub polar_weakly_compact: bool,
    pub error: Option<String>,
}

impl NeighborhoodRecord {
    pub fn passes(&self) -> bool {
        self.is_closed_ac && self.bipolar_equal && self.polar_weakly_compact && self.error.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalRecord {
    pub functional: Vector,
    pub declared_continuous: bool,
    pub witness: Option<(usize, Rational)>,
    pub error: Option<String>,
}

impl FunctionalRecord {
    pub fn passes(&self) -> bool {
        self.error.is_none() && self.witness.is_some() == self.declared_continuous
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyReport {
    pub neighborhoods: Vec<NeighborhoodRecord>,
    pub functionals: Vec<FunctionalRecord>,
    pub overall: bool,
}

fn neighborhood_record(nu: &StepFuzzySet, pair: &DualPair) -> Result<NeighborhoodRecord> {
    let is_closed_ac = nu.predicate(PredicateKind::Closed)?
        && nu.predicate(PredicateKind::AbsolutelyConvex)?
        && nu.membership(&Vector::zeros(nu.dim()))?.is_one();
    let bipolar_equal = polar::bipolar(nu, pair)?.chain_eq(nu)?;
    let polar_weakly_compact = is_weakly_fuzzy_compact(&polar::fuzzy_polar(nu, pair)?)?;
    Ok(NeighborhoodRecord {
        is_closed_ac,
        bipolar_equal,
        polar_weakly_compact,
        error: None,
    })
}

/// Checks each base member for `ν°° = ν` with weakly compact `ν°`, and each
/// functional for a dual witness. `declared` marks which functionals are
/// expected to be continuous; `None` declares all of them continuous.
pub fn verify_mackey_arens(
    base: &[StepFuzzySet],
    functionals: &[Vector],
    declared: Option<&[bool]>,
    pair: &DualPair,
) -> Result<MackeyReport> {
    if let Some(d) = declared {
        if d.len() != functionals.len() {
            return Err(Error::PreconditionFailed(format!(
                "{} continuity flags for {} functionals",
                d.len(),
                functionals.len()
            )));
        }
    }
    let neighborhoods: Vec<NeighborhoodRecord> = base
        .iter()
        .map(|nu| {
            neighborhood_record(nu, pair).unwrap_or_else(|e| NeighborhoodRecord {
                is_closed_ac: false,
                bipolar_equal: false,
                polar_weakly_compact: false,
                error: Some(e.to_string()),
            })
        })
        .collect();
    let functionals: Vec<FunctionalRecord> = functionals
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let declared_continuous = declared.is_none_or(|d| d[i]);
            let (witness, error) = match dual_witness(base, x, pair) {
                Ok(w) => (w, None),
                Err(e) => (None, Some(e.to_string())),
            };
            FunctionalRecord {
                functional: x.clone(),
                declared_continuous,
                witness,
                error,
            }
        })
        .collect();
    let overall = neighborhoods.iter().all(NeighborhoodRecord::passes)
        && functionals.iter().all(FunctionalRecord::passes);
    Ok(MackeyReport {
        neighborhoods,
        functionals,
        overall,
    })
}

/// The absolutely convex envelope of a bounded absorbing neighborhood; the
/// sets `θ ∧ tμ` generate the seminorm base.
pub fn seminorm_from_bounded_nbhd(theta: &StepFuzzySet, base: &[StepFuzzySet]) -> Result<StepFuzzySet> {
    if !theta.membership(&Vector::zeros(theta.dim()))?.is_one() {
        return Err(Error::PreconditionFailed("neighborhood must have value 1 at 0".into()));
    }
    if !is_bounded_wrt(theta, base)? {
        return Err(Error::PreconditionFailed("neighborhood is not bounded".into()));
    }
    let mu = theta.envelope(EnvelopeKind::AbsolutelyConvex)?;
    if !mu.predicate(PredicateKind::Seminorm)? {
        return Err(Error::PreconditionFailed("envelope is not a seminorm".into()));
    }
    Ok(mu)
}
