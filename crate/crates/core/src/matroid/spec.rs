//! JSON description of matroids.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Matroid;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, FiniteField, GFMatrix};
use crate::set::ElemSet;

/// An element label; JSON integers and strings are both accepted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Str(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Str(s) => f.write_str(s),
        }
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        match s.parse::<i64>() {
            Ok(i) if i.to_string() == s => Label::Int(i),
            _ => Label::Str(s.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MatroidSpec {
    Bases { ground: Vec<Label>, bases: Vec<Vec<Label>> },
    /// Columns hold field elements encoded as in [`FiniteField`].
    Matrix { field: FieldSpec, columns: Vec<Vec<u32>> },
    Pg { q: u32, n: usize },
    Boolean { n: usize },
    Plane { lines: Vec<Vec<Label>> },
    Truncation { i: usize, of: Box<MatroidSpec> },
    DirectSum { parts: Vec<MatroidSpec> },
}

fn label_index(labels: &[String]) -> Result<HashMap<&str, usize>> {
    let mut idx = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if idx.insert(l.as_str(), i).is_some() {
            return Err(Error::InvalidInput(format!("duplicate label {l}")));
        }
    }
    Ok(idx)
}

fn to_set(idx: &HashMap<&str, usize>, items: &[Label]) -> Result<ElemSet> {
    let mut s = ElemSet::EMPTY;
    for it in items {
        let name = it.to_string();
        let &e = idx
            .get(name.as_str())
            .ok_or_else(|| Error::InvalidInput(format!("unknown element {name}")))?;
        if s.contains(e) {
            return Err(Error::InvalidInput(format!("element {name} repeated in a set")));
        }
        s = s.with(e);
    }
    Ok(s)
}

/// Labels sorted numerically when all are integers, else as strings.
fn sorted_labels(mut labels: Vec<String>) -> Vec<String> {
    labels.sort();
    labels.dedup();
    if labels.iter().all(|l| l.parse::<i64>().is_ok()) {
        labels.sort_by_key(|l| l.parse::<i64>().unwrap());
    }
    labels
}

impl MatroidSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidSpec::Bases { ground, bases } => {
                let labels: Vec<String> = ground.iter().map(Label::to_string).collect();
                let idx = label_index(&labels)?;
                let sets = bases.iter().map(|b| to_set(&idx, b)).collect::<Result<Vec<_>>>()?;
                Matroid::from_bases(labels.clone(), sets)
            }
            MatroidSpec::Matrix { field, columns } => {
                let f = FiniteField::from_spec(field)?;
                let m = GFMatrix::from_columns(f, columns)?;
                Matroid::from_gf_matrix(&m, None)
            }
            MatroidSpec::Pg { q, n } => Matroid::projective_geometry(*q, *n),
            MatroidSpec::Boolean { n } => Matroid::boolean(*n),
            MatroidSpec::Plane { lines } => {
                let labels = sorted_labels(lines.iter().flatten().map(Label::to_string).collect());
                let idx = label_index(&labels)?;
                let sets = lines.iter().map(|l| to_set(&idx, l)).collect::<Result<Vec<_>>>()?;
                Matroid::projective_plane(labels.clone(), &sets)
            }
            MatroidSpec::Truncation { i, of } => of.build()?.truncation(*i),
            MatroidSpec::DirectSum { parts } => {
                let mut it = parts.iter();
                let first = it
                    .next()
                    .ok_or_else(|| Error::InvalidInput("direct_sum needs parts".into()))?
                    .build()?;
                it.try_fold(first, |acc, p| acc.direct_sum(&p.build()?))
            }
        }
    }
}
