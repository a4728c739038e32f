//! JSON documents emitted on stdout.
//!
//! Rationals are written as `"num/den"` strings so scalars stay exact.
//! Field order is fixed by the struct definitions, and summands are emitted
//! in position order, so emitting a parsed document reproduces its bytes.

use angulated::linalg::Q;
use angulated::{Angle, FamilyParams, IndecObject, Morphism, SumObject};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::syntax::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsDoc {
    pub d: i64,
    pub l: i64,
    pub m: i64,
    pub period: i64,
}

impl ParamsDoc {
    pub fn new(p: &FamilyParams) -> Self {
        ParamsDoc { d: p.d(), l: p.l(), m: p.m(), period: p.period() }
    }

    pub fn to_params(&self) -> angulated::Result<FamilyParams> {
        let p = angulated::validate_params(self.d, self.l, self.m)?;
        if p.period() != self.period {
            return Err(angulated::Error::ConstraintViolation(format!(
                "period {} differs from m + l - 1 = {}",
                self.period,
                p.period()
            )));
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectDoc {
    pub shift: i64,
    pub index: i64,
}

impl ObjectDoc {
    pub fn new(p: &FamilyParams, x: IndecObject) -> Self {
        let (shift, index) = p.split(x.pos);
        ObjectDoc { shift, index }
    }

    fn to_object(self, p: &FamilyParams) -> angulated::Result<IndecObject> {
        const LIMIT: i64 = 1 << 40;
        if !(1..=p.period()).contains(&self.index) || self.shift.abs() > LIMIT / p.period() {
            return Err(angulated::Error::OutOfWindow(self.index));
        }
        Ok(IndecObject::f(p, self.shift, self.index))
    }
}

pub fn sum_doc(p: &FamilyParams, x: &SumObject) -> Vec<ObjectDoc> {
    x.summands().iter().map(|&s| ObjectDoc::new(p, s)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub entries: Vec<Vec<String>>,
}

pub fn format_rational(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Result<Q, ParseError> {
    let bad = || ParseError::Rational(s.to_string());
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let digits = |t: &str| {
        let t = t.strip_prefix('-').unwrap_or(t);
        !t.is_empty() && t.len() <= 4096 && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(n) || !digits(d) {
        return Err(bad());
    }
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}

impl MapDoc {
    pub fn new(f: &Morphism) -> Self {
        let entries = f.rows().iter().map(|r| r.iter().map(format_rational).collect()).collect();
        MapDoc { entries }
    }

    fn to_morphism(&self, p: &FamilyParams, source: &SumObject, target: &SumObject) -> Result<Morphism, DocError> {
        let rows = target.len();
        let cols = source.len();
        if self.entries.len() != rows || self.entries.iter().any(|r| r.len() != cols) {
            return Err(DocError::Domain(angulated::Error::ShapeMismatch(format!("expected {rows}x{cols} entries"))));
        }
        let m = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| parse_rational(e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Morphism::new(p, source.clone(), target.clone(), m)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AngleDoc {
    pub params: ParamsDoc,
    pub objects: Vec<Vec<ObjectDoc>>,
    pub maps: Vec<MapDoc>,
}

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] angulated::Error),
}

impl AngleDoc {
    pub fn new(a: &Angle) -> Self {
        let p = a.params();
        AngleDoc {
            params: ParamsDoc::new(p),
            objects: a.objects().iter().map(|x| sum_doc(p, x)).collect(),
            maps: a.maps().iter().map(MapDoc::new).collect(),
        }
    }

    pub fn to_angle(&self) -> Result<Angle, DocError> {
        let p = self.params.to_params()?;
        let mut objects = Vec::with_capacity(self.objects.len());
        for x in &self.objects {
            let summands = x.iter().map(|o| o.to_object(&p)).collect::<angulated::Result<Vec<_>>>()?;
            let obj = SumObject::new(summands);
            // Only canonical (sorted) listings are accepted.
            if sum_doc(&p, &obj) != *x {
                return Err(DocError::Domain(angulated::Error::ShapeMismatch(
                    "summands must be listed in increasing position".into(),
                )));
            }
            objects.push(obj);
        }
        if objects.len() != p.slots() || self.maps.len() != p.slots() {
            return Err(DocError::Domain(angulated::Error::ShapeMismatch(format!(
                "expected {} objects and {} maps",
                p.slots(),
                p.slots()
            ))));
        }
        let mut maps = Vec::with_capacity(self.maps.len());
        for (k, f) in self.maps.iter().enumerate() {
            let source = &objects[k];
            let target = match objects.get(k + 1) {
                Some(t) => t.clone(),
                None => objects[0].shifted(&p, 1),
            };
            maps.push(f.to_morphism(&p, source, &target)?);
        }
        Ok(Angle::new(&p, objects, maps)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// Parses an angle document. This is the entry point exercised by the fuzzer.
pub fn parse_angle_json(text: &str) -> Result<Angle, DocError> {
    let doc: AngleDoc = serde_json::from_str(text)?;
    doc.to_angle()
}

#[derive(Debug, Clone, Serialize)]
pub struct MorphismDoc {
    pub source: Vec<ObjectDoc>,
    pub target: Vec<ObjectDoc>,
    pub entries: Vec<Vec<String>>,
}

impl MorphismDoc {
    pub fn new(f: &Morphism) -> Self {
        let p = f.params();
        MorphismDoc { source: sum_doc(p, f.source()), target: sum_doc(p, f.target()), entries: MapDoc::new(f).entries }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HomDoc {
    pub params: ParamsDoc,
    pub source: ObjectDoc,
    pub target: ObjectDoc,
    pub dim: u8,
    pub basis: Option<MorphismDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComposeDoc {
    pub params: ParamsDoc,
    pub morphism: MorphismDoc,
    pub is_zero: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainDoc {
    pub params: ParamsDoc,
    pub kind: &'static str,
    pub morphism: MorphismDoc,
    pub objects: Vec<Vec<ObjectDoc>>,
    pub maps: Vec<MapDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverDoc {
    pub params: ParamsDoc,
    pub sub: Vec<i64>,
    pub target: ObjectDoc,
    pub source: Vec<ObjectDoc>,
    pub morphism: MorphismDoc,
}

#[derive(Debug, Clone, Serialize)]
pub struct WideListDoc {
    pub params: ParamsDoc,
    pub count: usize,
    pub specs: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessDoc {
    pub source: ObjectDoc,
    pub target: ObjectDoc,
    pub escaping: ObjectDoc,
}

#[derive(Debug, Clone, Serialize)]
pub struct WideCheckDoc {
    pub params: ParamsDoc,
    pub sub: Vec<i64>,
    pub semisimple: bool,
    pub l_periodic: bool,
    pub wide: bool,
    pub oracle: bool,
    pub witness: Option<WitnessDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyDoc {
    pub params: ParamsDoc,
    pub target: String,
    pub passed: bool,
    pub checks: Vec<CheckDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeDoc {
    pub pos: i64,
    pub shift: i64,
    pub index: i64,
    pub member: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuiverDoc {
    pub params: ParamsDoc,
    pub nodes: Vec<NodeDoc>,
    pub edges: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorDoc<'a> {
    pub error: &'a str,
    pub message: String,
}
