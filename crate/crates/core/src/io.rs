//! JSON documents.
//!
//! Rationals are written as `["num", "den"]` string pairs in lowest terms. On
//! input, integers, decimal literals, `"p/q"` strings and `[p, q]` pairs (of
//! numbers or numeric strings) are all accepted and read exactly.

use std::fmt;
use std::sync::Arc;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::fiber_tree::{PLPath, PathCheck};
use crate::graph::{build_graph, Graph, Shape, VertexFunction};
use crate::homology::{BettiVector, SimplicialComplex};
use crate::persistence::{Death, PersistenceDiagram, PersistencePoint};
use crate::strings::StringPoset;
use crate::{Error, Result, Value};

/// Parses `"3"`, `"-5/2"`, `"2.75"`.
pub fn parse_value(text: &str) -> Result<Value> {
    let t = text.trim();
    let bad = || Error::Malformed(format!("not a rational: {text:?}"));
    if let Some((num, den)) = t.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Value::new(num, den));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 17 {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: i64 = match whole.trim_start_matches(['-', '+']) {
            "" => 0,
            w => w.parse().map_err(|_| bad())?,
        };
        let scale = 10i64.checked_pow(frac.len() as u32).ok_or_else(bad)?;
        let frac: i64 = frac.parse().map_err(|_| bad())?;
        let magnitude = whole
            .checked_mul(scale)
            .and_then(|w| w.checked_add(frac))
            .ok_or_else(bad)?;
        let num = if negative { -magnitude } else { magnitude };
        return Ok(Value::new(num, scale));
    }
    t.parse::<i64>().map(Value::from_integer).map_err(|_| bad())
}

/// Serde adapter for [`Value`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub Value);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.0.numer().to_string(), self.0.denom().to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer, a decimal, \"p/q\" or [p, q]")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational(Value::from_integer(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                i64::try_from(v)
                    .map(|v| Rational(Value::from_integer(v)))
                    .map_err(|_| E::custom("integer out of range"))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Rational, E> {
                // Shortest round-trip decimal, then exact parse.
                parse_value(&format!("{v:?}"))
                    .map(Rational)
                    .map_err(E::custom)
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                parse_value(v).map(Rational).map_err(E::custom)
            }

            fn visit_seq<A: de::SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Rational, A::Error> {
                let num = seq
                    .next_element::<Integer>()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?
                    .0;
                let den = seq
                    .next_element::<Integer>()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?
                    .0;
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                if den == 0 {
                    return Err(de::Error::custom("zero denominator"));
                }
                Ok(Rational(Value::new(num, den)))
            }
        }
        d.deserialize_any(V)
    }
}

/// An integer given as a JSON number or a numeric string.
struct Integer(i64);

impl<'de> Deserialize<'de> for Integer {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Number(n) => Ok(Integer(n)),
            Raw::Text(t) => t.trim().parse().map(Integer).map_err(de::Error::custom),
        }
    }
}

pub fn rationals(values: &[Value]) -> Vec<Rational> {
    values.iter().copied().map(Rational).collect()
}

pub fn values(rationals: &[Rational]) -> Vec<Value> {
    rationals.iter().map(|r| r.0).collect()
}

/// Shape descriptor: `{"shape": "cycle", "params": [4]}`. For stars the
/// parameters are the branch lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeDoc {
    pub shape: String,
    pub params: Vec<usize>,
}

impl ShapeDoc {
    pub fn from_shape(shape: &Shape) -> Self {
        ShapeDoc {
            shape: shape.tag().to_string(),
            params: shape.params(),
        }
    }

    pub fn to_shape(&self) -> Result<Shape> {
        Shape::from_tag(&self.shape, &self.params)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub shape: String,
    pub params: Vec<usize>,
    pub vertex_count: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDoc {
    pub fn new(graph: &Graph) -> Self {
        let d = ShapeDoc::from_shape(graph.shape());
        GraphDoc {
            shape: d.shape,
            params: d.params,
            vertex_count: graph.vertex_count(),
            edges: graph.edges().to_vec(),
        }
    }
}

/// `{"shape": .., "params": [..], "values": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionDoc {
    pub shape: String,
    pub params: Vec<usize>,
    pub values: Vec<Rational>,
}

impl FunctionDoc {
    pub fn new(z: &VertexFunction) -> Self {
        let d = ShapeDoc::from_shape(z.graph().shape());
        FunctionDoc {
            shape: d.shape,
            params: d.params,
            values: rationals(z.values()),
        }
    }

    pub fn to_function(&self) -> Result<VertexFunction> {
        let shape = Shape::from_tag(&self.shape, &self.params)?;
        VertexFunction::on(&shape, values(&self.values))
    }
}

/// A death coordinate: a rational or `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeathDoc(pub Death);

impl Serialize for DeathDoc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Death::Finite(v) => Rational(v).serialize(s),
            Death::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for DeathDoc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Other(Rational),
        }
        match Raw::deserialize(d)? {
            Raw::Text(t)
                if ["inf", "infinity", "∞"].contains(&t.trim().to_ascii_lowercase().as_str()) =>
            {
                Ok(DeathDoc(Death::Infinite))
            }
            Raw::Text(t) => parse_value(&t)
                .map(|v| DeathDoc(Death::Finite(v)))
                .map_err(de::Error::custom),
            Raw::Other(r) => Ok(DeathDoc(Death::Finite(r.0))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDoc {
    pub b: Rational,
    pub d: DeathDoc,
}

/// `{"dim": 0, "points": [{"b": ["0","1"], "d": "inf"}, ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub dim: u8,
    pub points: Vec<PointDoc>,
}

impl DiagramDoc {
    pub fn new(p: &PersistenceDiagram) -> Self {
        DiagramDoc {
            dim: p.dim(),
            points: p
                .points()
                .iter()
                .map(|q| PointDoc {
                    b: Rational(q.birth),
                    d: DeathDoc(q.death),
                })
                .collect(),
        }
    }

    pub fn to_diagram(&self) -> Result<PersistenceDiagram> {
        let points = self
            .points
            .iter()
            .map(|PointDoc { b, d }| match d.0 {
                Death::Finite(v) if v <= b.0 => Err(Error::Malformed(format!(
                    "death {v} does not exceed birth {}",
                    b.0
                ))),
                Death::Finite(v) => Ok(PersistencePoint::finite(b.0, v)),
                Death::Infinite => Ok(PersistencePoint::essential(b.0)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PersistenceDiagram::new(self.dim, points))
    }
}

/// `{"N": .., "M": .., "elements": [..], "covers": [[i, j], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "M")]
    pub m: usize,
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
}

impl PosetDoc {
    pub fn new(poset: &StringPoset) -> Self {
        PosetDoc {
            n: poset.n(),
            m: poset.m(),
            elements: poset.elements().iter().map(ToString::to_string).collect(),
            covers: poset.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

/// `{"vertices": n, "simplices": [[0], [0, 1], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub vertices: usize,
    pub simplices: Vec<Vec<u32>>,
}

impl ComplexDoc {
    pub fn new(k: &SimplicialComplex) -> Self {
        let top = k.dimension().map_or(0, |d| d + 1);
        ComplexDoc {
            vertices: k.vertex_count(),
            simplices: (0..top)
                .flat_map(|d| k.simplices(d).map(<[u32]>::to_vec))
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_simplices(self.vertices, self.simplices.iter().cloned())
    }
}

/// `{"b": [1, 1], "euler": 0}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDoc {
    pub b: Vec<usize>,
    pub euler: i64,
}

impl BettiDoc {
    pub fn new(b: &BettiVector) -> Self {
        BettiDoc {
            b: b.ranks.clone(),
            euler: b.euler,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PLPathDoc {
    pub tree: GraphDoc,
    pub waypoints: Vec<Vec<Rational>>,
    #[serde(default)]
    pub checkpoints: Vec<(String, usize)>,
}

impl PLPathDoc {
    pub fn new(path: &PLPath) -> Self {
        PLPathDoc {
            tree: GraphDoc::new(path.tree()),
            waypoints: path.waypoints().iter().map(|w| rationals(w)).collect(),
            checkpoints: path.checkpoints().to_vec(),
        }
    }

    pub fn to_path(&self) -> Result<PLPath> {
        let shape = Shape::from_tag(&self.tree.shape, &self.tree.params)?;
        let tree = Arc::new(build_graph(&shape)?);
        let mut path =
            PLPath::from_waypoints(tree, self.waypoints.iter().map(|w| values(w)).collect())?;
        for (label, i) in &self.checkpoints {
            if *i >= path.len() {
                return Err(Error::Malformed(format!("checkpoint {label} out of range")));
            }
        }
        if !self.checkpoints.is_empty() {
            *path.checkpoints_mut() = self.checkpoints.clone();
        }
        Ok(path)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureDoc {
    pub segment: usize,
    pub step: usize,
    pub index: usize,
    pub values: Vec<Rational>,
}

/// Verification report with the first failing point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCheckDoc {
    pub pass: bool,
    pub checked: usize,
    pub first_failure: Option<FailureDoc>,
}

impl PathCheckDoc {
    pub fn new(c: &PathCheck) -> Self {
        PathCheckDoc {
            pass: c.pass,
            checked: c.checked,
            first_failure: c.first_failure.as_ref().map(|f| FailureDoc {
                segment: f.segment,
                step: f.step,
                index: f.index,
                values: rationals(&f.values),
            }),
        }
    }
}
