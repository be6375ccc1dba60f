//! JSON documents for fuzzy sets, collections, functionals and oracle
//! tables. Rationals are always strings such as `"-3/4"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuzzyset::StepFuzzySet;
use crate::geometry::{self, Halfspace, Region};
use crate::linalg::{Matrix, Vector};
use crate::oracle::Table;
use crate::pairing::DualPair;
use crate::rational::{self, Rational};
use crate::topology::FamilyKind;

type VecDoc = Vec<String>;

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub(crate) struct HalfspaceDoc {
    normal: VecDoc,
    offset: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(tag = "type", deny_unknown_fields)]
pub(crate) enum RegionDoc {
    #[serde(rename = "empty")]
    Empty,
    #[serde(rename = "whole_space")]
    WholeSpace,
    #[serde(rename = "points")]
    Points { vertices: Vec<VecDoc> },
    #[serde(rename = "vpolytope")]
    VPolytope { vertices: Vec<VecDoc> },
    #[serde(rename = "hpolyhedron")]
    HPolyhedron { halfspaces: Vec<HalfspaceDoc> },
    #[serde(rename = "union")]
    Union { regions: Vec<RegionDoc> },
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct LevelDoc {
    grade: String,
    region: RegionDoc,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub(crate) struct FuzzySetDoc {
    dimension: usize,
    levels: Vec<LevelDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pairing: Option<Vec<VecDoc>>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct CollectionDoc {
    dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    sets: Vec<FuzzySetDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pairing: Option<Vec<VecDoc>>,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
enum FunctionalsDoc {
    Plain(Vec<VecDoc>),
    Flagged {
        functionals: Vec<VecDoc>,
        #[serde(default)]
        continuous: Option<Vec<bool>>,
    },
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct RowDoc {
    point: VecDoc,
    grade: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
struct TableDoc {
    dimension: usize,
    rows: Vec<RowDoc>,
}

/// A fuzzy set with the pairing it was declared against, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub set: StepFuzzySet,
    pub pairing: Option<DualPair>,
}

impl Document {
    /// The declared pairing, or the standard one.
    pub fn pair(&self) -> DualPair {
        self.pairing.clone().unwrap_or_else(|| DualPair::standard(self.set.dim()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollectionDocument {
    pub dim: usize,
    pub kind: FamilyKind,
    pub sets: Vec<StepFuzzySet>,
    pub pairing: Option<DualPair>,
}

impl CollectionDocument {
    pub fn pair(&self) -> DualPair {
        self.pairing.clone().unwrap_or_else(|| DualPair::standard(self.dim))
    }
}

fn at(path: &str, e: Error) -> Error {
    if e.is_unsupported() {
        return e;
    }
    let msg = match e {
        Error::Parse(m) => m,
        other => other.to_string(),
    };
    Error::Parse(format!("{path}: {msg}"))
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
}

pub(crate) fn parse_vector(doc: &[String], dim: usize, path: &str) -> Result<Vector> {
    if doc.len() != dim {
        return Err(Error::Parse(format!("{path}: expected {dim} coordinates, found {}", doc.len())));
    }
    doc.iter()
        .enumerate()
        .map(|(i, s)| rational::parse(s).map_err(|e| at(&format!("{path}[{i}]"), e)))
        .collect::<Result<Vec<_>>>()
        .map(Vector)
}

fn write_vector(v: &Vector) -> VecDoc {
    v.iter().map(rational::format).collect()
}

fn parse_region(doc: &RegionDoc, dim: usize, path: &str) -> Result<Region> {
    let vertices = |vs: &[VecDoc]| -> Result<Vec<Vector>> {
        vs.iter()
            .enumerate()
            .map(|(i, v)| parse_vector(v, dim, &format!("{path}.vertices[{i}]")))
            .collect()
    };
    Ok(match doc {
        RegionDoc::Empty => Region::Empty,
        RegionDoc::WholeSpace => Region::WholeSpace,
        RegionDoc::Points { vertices: vs } => Region::Points(vertices(vs)?),
        RegionDoc::VPolytope { vertices: vs } => Region::VPolytope(vertices(vs)?),
        RegionDoc::HPolyhedron { halfspaces } => Region::HPolyhedron(
            halfspaces
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    let p = format!("{path}.halfspaces[{i}]");
                    let normal = parse_vector(&h.normal, dim, &format!("{p}.normal"))?;
                    let offset = rational::parse(&h.offset).map_err(|e| at(&format!("{p}.offset"), e))?;
                    Ok(Halfspace::new(normal, offset))
                })
                .collect::<Result<_>>()?,
        ),
        RegionDoc::Union { regions } => Region::Union(
            regions
                .iter()
                .enumerate()
                .map(|(i, r)| parse_region(r, dim, &format!("{path}.regions[{i}]")))
                .collect::<Result<_>>()?,
        ),
    })
}

pub(crate) fn write_region(r: &Region) -> RegionDoc {
    let vs = |ps: &[Vector]| ps.iter().map(write_vector).collect();
    match r {
        Region::Empty => RegionDoc::Empty,
        Region::WholeSpace => RegionDoc::WholeSpace,
        Region::Points(ps) => RegionDoc::Points { vertices: vs(ps) },
        Region::VPolytope(ps) => RegionDoc::VPolytope { vertices: vs(ps) },
        Region::HPolyhedron(hs) => RegionDoc::HPolyhedron {
            halfspaces: hs
                .iter()
                .map(|h| HalfspaceDoc {
                    normal: write_vector(&h.normal),
                    offset: rational::format(&h.offset),
                })
                .collect(),
        },
        Region::Union(rs) => RegionDoc::Union {
            regions: rs.iter().map(write_region).collect(),
        },
    }
}

pub fn parse_matrix(rows: &[VecDoc], path: &str) -> Result<Matrix> {
    let n = rows.len();
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| parse_vector(r, n, &format!("{path}[{i}]")).map(|v| v.0))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::new(parsed, n))
}

fn parse_pairing(doc: &Option<Vec<VecDoc>>, dim: usize) -> Result<Option<DualPair>> {
    let Some(rows) = doc else {
        return Ok(None);
    };
    if rows.len() != dim {
        return Err(Error::Parse(format!("pairing: expected {dim} rows, found {}", rows.len())));
    }
    let m = parse_matrix(rows, "pairing")?;
    DualPair::new(m).map(Some).map_err(|e| at("pairing", e))
}

fn write_pairing(p: Option<&DualPair>) -> Option<Vec<VecDoc>> {
    p.map(|p| p.matrix().rows.iter().map(|r| r.iter().map(rational::format).collect()).collect())
}

fn set_from_doc(doc: &FuzzySetDoc, path: &str) -> Result<Document> {
    let dim = doc.dimension;
    if dim == 0 {
        return Err(Error::Parse(format!("{path}dimension: must be positive")));
    }
    if dim > geometry::MAX_DIM {
        return Err(Error::UnsupportedDimension(dim));
    }
    let mut levels = Vec::with_capacity(doc.levels.len());
    for (i, l) in doc.levels.iter().enumerate() {
        let p = format!("{path}levels[{i}]");
        let grade = rational::parse(&l.grade).map_err(|e| at(&format!("{p}.grade"), e))?;
        if grade <= Rational::from_integer(0.into()) || grade > Rational::from_integer(1.into()) {
            return Err(at(&format!("{p}.grade"), Error::InvalidGrade(l.grade.clone())));
        }
        levels.push((grade, parse_region(&l.region, dim, &format!("{p}.region"))?));
    }
    let set = StepFuzzySet::new(dim, levels).map_err(|e| at(&format!("{path}levels"), e))?;
    let pairing = parse_pairing(&doc.pairing, dim).map_err(|e| at(path.trim_end_matches('.'), e))?;
    Ok(Document { set, pairing })
}

fn set_to_doc(set: &StepFuzzySet, pairing: Option<&DualPair>) -> FuzzySetDoc {
    FuzzySetDoc {
        dimension: set.dim(),
        levels: set
            .levels()
            .iter()
            .map(|l| LevelDoc {
                grade: rational::format(&l.grade),
                region: write_region(&l.region),
            })
            .collect(),
        pairing: write_pairing(pairing),
    }
}

fn to_line<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn parse_document(text: &str) -> Result<Document> {
    let doc: FuzzySetDoc = serde_json::from_str(text).map_err(json_error)?;
    set_from_doc(&doc, "")
}

/// Canonical single-line form; keys in fixed order, rationals reduced.
pub fn write_document(set: &StepFuzzySet, pairing: Option<&DualPair>) -> String {
    to_line(&set_to_doc(set, pairing))
}

pub fn kind_name(kind: FamilyKind) -> &'static str {
    match kind {
        FamilyKind::ScaledGenerators => "scaled_generators",
        FamilyKind::FinitePointSets => "finite_point_sets",
    }
}

pub fn parse_kind(s: &str) -> Result<FamilyKind> {
    match s {
        "scaled_generators" => Ok(FamilyKind::ScaledGenerators),
        "finite_point_sets" => Ok(FamilyKind::FinitePointSets),
        _ => Err(Error::Parse(format!("unknown collection kind {s:?}"))),
    }
}

pub fn parse_collection(text: &str) -> Result<CollectionDocument> {
    let doc: CollectionDoc = serde_json::from_str(text).map_err(json_error)?;
    let dim = doc.dimension;
    if dim > geometry::MAX_DIM {
        return Err(Error::UnsupportedDimension(dim));
    }
    let kind = doc.kind.as_deref().map_or(Ok(FamilyKind::ScaledGenerators), parse_kind)?;
    let mut sets = Vec::with_capacity(doc.sets.len());
    for (i, s) in doc.sets.iter().enumerate() {
        let path = format!("sets[{i}].");
        if s.dimension != dim {
            return Err(Error::Parse(format!("{path}dimension: expected {dim}, found {}", s.dimension)));
        }
        if s.pairing.is_some() {
            return Err(Error::Parse(format!("{path}pairing: declare the pairing on the collection")));
        }
        sets.push(set_from_doc(s, &path)?.set);
    }
    let pairing = parse_pairing(&doc.pairing, dim)?;
    Ok(CollectionDocument { dim, kind, sets, pairing })
}

pub fn write_collection(c: &CollectionDocument) -> String {
    to_line(&CollectionDoc {
        dimension: c.dim,
        kind: Some(kind_name(c.kind).to_string()),
        sets: c.sets.iter().map(|s| set_to_doc(s, None)).collect(),
        pairing: write_pairing(c.pairing.as_ref()),
    })
}

/// Functionals with optional continuity flags.
pub fn parse_functionals(text: &str, dim: usize) -> Result<(Vec<Vector>, Option<Vec<bool>>)> {
    let doc: FunctionalsDoc = serde_json::from_str(text).map_err(json_error)?;
    let (vs, flags) = match doc {
        FunctionalsDoc::Plain(vs) => (vs, None),
        FunctionalsDoc::Flagged { functionals, continuous } => (functionals, continuous),
    };
    let vs = vs
        .iter()
        .enumerate()
        .map(|(i, v)| parse_vector(v, dim, &format!("functionals[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    if let Some(f) = &flags {
        if f.len() != vs.len() {
            return Err(Error::Parse(format!(
                "continuous: expected {} flags, found {}",
                vs.len(),
                f.len()
            )));
        }
    }
    Ok((vs, flags))
}

pub fn parse_table(text: &str) -> Result<Table> {
    let doc: TableDoc = serde_json::from_str(text).map_err(json_error)?;
    let rows = doc
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let p = parse_vector(&r.point, doc.dimension, &format!("rows[{i}].point"))?;
            let g = rational::parse(&r.grade).map_err(|e| at(&format!("rows[{i}].grade"), e))?;
            Ok((p, g))
        })
        .collect::<Result<_>>()?;
    Ok(Table { dim: doc.dimension, rows })
}

pub fn write_table(t: &Table) -> String {
    to_line(&TableDoc {
        dimension: t.dim,
        rows: t
            .rows
            .iter()
            .map(|(p, g)| RowDoc {
                point: write_vector(p),
                grade: rational::format(g),
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    const INTERVAL: &str = r#"{"dimension":1,"levels":[{"grade":"1","region":{"type":"vpolytope","vertices":[["-1"],["1"]]}}]}"#;

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

    #[test]
    fn interval_document_round_trips_byte_stable() {
        let d = parse_document(INTERVAL).unwrap();
        assert_eq!(d.set, StepFuzzySet::crisp(1, Region::interval(int(-1), int(1))).unwrap());
        assert_eq!(write_document(&d.set, None), format!("{INTERVAL}\n"));
    }

    #[test]
    fn bad_grade_names_the_field() {
        let text = INTERVAL.replace(r#""grade":"1""#, r#""grade":"3/2""#);
        let Err(Error::Parse(m)) = parse_document(&text) else { panic!() };
        assert!(m.starts_with("levels[0].grade:"), "{m}");
        assert!(m.contains("invalid grade"), "{m}");
        let text = INTERVAL.replace(r#"["-1"]"#, r#"["-1.5"]"#);
        let Err(Error::Parse(m)) = parse_document(&text) else { panic!() };
        assert!(m.starts_with("levels[0].region.vertices[0][0]"), "{m}");
    }

    #[test]
    fn nesting_and_dimension_errors() {
        let text = r#"{"dimension":1,"levels":[{"grade":"1/2","region":{"type":"points","vertices":[["0"]]}},{"grade":"1","region":{"type":"points","vertices":[["1"]]}}]}"#;
        assert!(matches!(parse_document(text), Err(Error::Parse(m)) if m.contains("levels")));
        let text = INTERVAL.replace(r#"["-1"]"#, r#"["-1","0"]"#);
        assert!(matches!(parse_document(&text), Err(Error::Parse(m)) if m.contains("expected 1 coordinates")));
        let text = r#"{"dimension":5,"levels":[]}"#;
        assert_eq!(parse_document(text), Err(Error::UnsupportedDimension(5)));
    }

    #[test]
    fn boxes_round_trip() {
        let text = write_document(&boxes(), None);
        assert_eq!(parse_document(&text).unwrap().set, boxes());
        assert_eq!(write_document(&parse_document(&text).unwrap().set, None), text);
    }

    #[test]
    fn whole_space_and_empty_chain() {
        let half = StepFuzzySet::new(1, vec![(frac(1, 2), Region::interval(int(-1), int(1)))]).unwrap();
        let p = crate::polar::fuzzy_polar(&half, &DualPair::standard(1)).unwrap();
        assert!(write_document(&p, None).contains(r#""region":{"type":"whole_space"}"#));
        assert_eq!(write_document(&StepFuzzySet::empty(2), None), "{\"dimension\":2,\"levels\":[]}\n");
    }

    #[test]
    fn pairing_round_trips() {
        let pair = DualPair::new(Matrix::from_ints(&[&[2, 1], &[0, 1]])).unwrap();
        let text = write_document(&boxes(), Some(&pair));
        assert!(text.ends_with("\"pairing\":[[\"2\",\"1\"],[\"0\",\"1\"]]}\n"));
        let d = parse_document(&text).unwrap();
        assert_eq!(d.pairing, Some(pair));
        let singular = text.replace(r#"["0","1"]"#, r#"["4","2"]"#);
        assert!(matches!(parse_document(&singular), Err(Error::Parse(m)) if m.contains("singular")));
    }

    #[test]
    fn collections_and_functionals() {
        let c = CollectionDocument {
            dim: 2,
            kind: FamilyKind::FinitePointSets,
            sets: vec![StepFuzzySet::point_set(2, vec![Vector::from_ints(&[1, 0])], frac(1, 2)).unwrap()],
            pairing: None,
        };
        let text = write_collection(&c);
        assert_eq!(parse_collection(&text).unwrap(), c);
        let (fs, flags) = parse_functionals(r#"[["1","0"],["0","1"]]"#, 2).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(flags.is_none());
        let (_, flags) = parse_functionals(r#"{"functionals":[["1","0"]],"continuous":[false]}"#, 2).unwrap();
        assert_eq!(flags, Some(vec![false]));
    }

    #[test]
    fn tables_round_trip() {
        let t = Table {
            dim: 1,
            rows: vec![(Vector(vec![frac(-1, 2)]), frac(1, 3)), (Vector(vec![int(0)]), int(1))],
        };
        let text = write_table(&t);
        assert_eq!(text, "{\"dimension\":1,\"rows\":[{\"point\":[\"-1/2\"],\"grade\":\"1/3\"},{\"point\":[\"0\"],\"grade\":\"1\"}]}\n");
        assert_eq!(parse_table(&text).unwrap(), t);
    }
}
