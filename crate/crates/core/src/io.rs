//! Wire formats: JSON for every input type, plus edge-list text for graphs.
//!
//! Deserialisation always goes through the validating constructors, so a
//! parsed value satisfies the same invariants as one built in code.

use crate::error::{invalid, Error, Result};
use crate::exactla::{parse_rational, rational_to_string, RationalMatrix};
use crate::ffpoly::MultiPoly;
use crate::nullsatz::ZeroSumInstance;
use crate::ramsey::TwoColoring;
use crate::setfam::SetFamily;
use crate::specgraph::Graph;
use num_rational::BigRational;
use serde::de::{DeserializeOwned, Error as _};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))
}

/// Pretty JSON; field order is fixed by the types, so output is reproducible.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialise")
}

fn de_err<E: serde::de::Error>(e: Error) -> E {
    E::custom(e)
}

// Rational literals: "3/4", "-1.5" or a bare JSON integer. Floats are refused
// rather than rounded.
#[derive(Deserialize)]
#[serde(untagged)]
enum Lit {
    Text(String),
    Int(i64),
    Float(f64),
}

impl Lit {
    fn text<E: serde::de::Error>(self) -> std::result::Result<String, E> {
        match self {
            Lit::Text(s) => Ok(s),
            Lit::Int(i) => Ok(i.to_string()),
            Lit::Float(x) => Err(E::custom(format!("{x}: write non-integer rationals as strings, e.g. \"1/3\""))),
        }
    }
}

pub fn de_rational<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<String, D::Error> {
    Lit::deserialize(de)?.text()
}

pub fn de_rationals<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Vec<String>, D::Error> {
    Vec::<Lit>::deserialize(de)?.into_iter().map(Lit::text).collect()
}

pub fn de_rational_rows<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Vec<Vec<String>>, D::Error> {
    Vec::<Vec<Lit>>::deserialize(de)?.into_iter().map(|r| r.into_iter().map(Lit::text).collect()).collect()
}

// {"ground": m, "sets": [[1, 2], [3], ...]}, 1-indexed.
#[derive(Serialize, Deserialize)]
struct FamilyJson {
    ground: usize,
    sets: Vec<Vec<usize>>,
}

impl Serialize for SetFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyJson { ground: self.ground(), sets: self.to_lists() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FamilyJson::deserialize(d)?;
        SetFamily::from_lists(j.ground, &j.sets).map_err(de_err)
    }
}

// {"p": 3, "n": 2, "terms": [{"e": [2, 0], "c": 1}, ...]}; terms in descending grlex order.
#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<u32>,
    c: i64,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    p: u64,
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms().into_iter().map(|(e, c)| TermJson { e, c: c as i64 }).collect();
        PolyJson { p: self.modulus(), n: self.nvars(), terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        MultiPoly::from_terms(j.p, j.n, j.terms.into_iter().map(|t| (t.e, t.c)).collect()).map_err(de_err)
    }
}

// {"n": 10, "edges": [[0, 1], ...]}
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson { n: self.n(), edges: self.edges().to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        Graph::new(j.n, j.edges).map_err(de_err)
    }
}

/// Graph JSON, or edge-list text: one "u v" pair per line, `#` comments, and
/// an optional leading line holding just the vertex count (otherwise 1 + the
/// largest endpoint).
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        return from_json(text);
    }
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::InvalidInput(format!("line {}: {t:?} is not a vertex", lineno + 1))))
            .collect::<Result<_>>()?;
        match nums.as_slice() {
            [k] if n.is_none() && edges.is_empty() => n = Some(*k),
            [u, v] => edges.push((*u, *v)),
            _ => return invalid(format!("line {}: expected \"u v\"", lineno + 1)),
        }
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::new(n, edges)
}

pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

// {"rows": n, "cols": m, "entries": [["num/den", ...], ...]}; integers may be bare.
#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn value(&self) -> Result<BigRational> {
        match self {
            Entry::Int(k) => Ok(BigRational::from_integer((*k).into())),
            Entry::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Entry>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixInput {
    Full(MatrixJson),
    Rows(Vec<Vec<Entry>>),
}

#[derive(Serialize)]
struct MatrixOut {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self.to_rows().iter().map(|r| r.iter().map(rational_to_string).collect()).collect();
        MatrixOut { rows: self.rows(), cols: self.cols(), entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (shape, rows) = match MatrixInput::deserialize(d)? {
            MatrixInput::Full(m) => (Some((m.rows, m.cols)), m.entries),
            MatrixInput::Rows(r) => (None, r),
        };
        let rows: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(Entry::value).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()
            .map_err(de_err)?;
        let m = RationalMatrix::from_rows(rows).map_err(de_err)?;
        if let Some((r, c)) = shape {
            if m.rows() != r || (r > 0 && m.cols() != c) {
                return Err(D::Error::custom(format!("declared {r}x{c}, entries are {}x{}", m.rows(), m.cols())));
            }
            if r == 0 {
                return Ok(RationalMatrix::zeros(0, c));
            }
        }
        Ok(m)
    }
}

// {"n": 5, "bits": "0110011010"}, pairs (i < j) row-major, 1 = blue.
#[derive(Deserialize)]
struct ColouringJson {
    n: usize,
    bits: String,
}

impl<'de> Deserialize<'de> for TwoColoring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ColouringJson::deserialize(d)?;
        TwoColoring::from_bitstring(j.n, &j.bits).map_err(de_err)
    }
}

// {"moduli": [3, 3], "elements": [[0, 1], [2, 2], ...]}; entries reduced on load.
#[derive(Deserialize)]
struct ZeroSumJson {
    moduli: Vec<u64>,
    elements: Vec<Vec<u64>>,
}

impl<'de> Deserialize<'de> for ZeroSumInstance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ZeroSumJson::deserialize(d)?;
        ZeroSumInstance::new(j.moduli, j.elements).map_err(de_err)
    }
}
