//! Named example matroids.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matroid::{Label, Matroid, MatroidSpec};

/// Columns of the five-vector matroid over GF(2).
pub const FIVE_VECTOR_COLUMNS: [[u32; 3]; 5] =
    [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1]];

/// Lines of the Fano plane on points 1..7.
pub const FANO_LINES: [[i64; 3]; 7] =
    [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 1], [6, 7, 2], [7, 1, 3]];

pub const BUILTIN_NAMES: &[&str] =
    &["m22", "m23", "m32", "fivevec", "boolean:N", "fano", "plane3", "u24"];

fn gf2_matrix(columns: &[&[u32]]) -> MatroidSpec {
    MatroidSpec::Matrix {
        field: FieldSpec { p: 2, k: 1, modulus: None },
        columns: columns.iter().map(|c| c.to_vec()).collect(),
    }
}

pub fn five_vector_spec() -> MatroidSpec {
    let cols: Vec<&[u32]> = FIVE_VECTOR_COLUMNS.iter().map(|c| c.as_slice()).collect();
    gf2_matrix(&cols)
}

/// M(2,2) with the column order v1 = (1,0), v2 = (0,1), v3 = (1,1).
pub fn m22_spec() -> MatroidSpec {
    gf2_matrix(&[&[1, 0], &[0, 1], &[1, 1]])
}

pub fn fano_spec() -> MatroidSpec {
    MatroidSpec::Plane {
        lines: FANO_LINES.iter().map(|l| l.iter().map(|&p| Label::Int(p)).collect()).collect(),
    }
}

/// Incidence of PG(2,3) as a plane spec (points labelled 1..13).
pub fn plane3_spec() -> Result<MatroidSpec> {
    let m = Matroid::projective_geometry(3, 3)?;
    let classes = m.equivalence_classes()?;
    let lines = classes
        .flats(2)
        .into_iter()
        .map(|f| f.iter().map(|e| Label::Int(e as i64 + 1)).collect())
        .collect();
    Ok(MatroidSpec::Plane { lines })
}

/// Resolves a builtin name such as `fivevec` or `boolean:4`.
pub fn builtin(name: &str) -> Result<MatroidSpec> {
    match name {
        "m22" => Ok(m22_spec()),
        "m23" => Ok(MatroidSpec::Pg { q: 2, n: 3 }),
        "m32" => Ok(MatroidSpec::Pg { q: 3, n: 2 }),
        "fivevec" => Ok(five_vector_spec()),
        "fano" => Ok(fano_spec()),
        "plane3" => plane3_spec(),
        "u24" => Ok(MatroidSpec::Bases {
            ground: (1..=4).map(Label::Int).collect(),
            bases: [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]
                .iter()
                .map(|b| b.iter().map(|&x| Label::Int(x)).collect())
                .collect(),
        }),
        other => {
            if let Some(n) = other.strip_prefix("boolean:") {
                let n = n
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad boolean size in {other}")))?;
                Ok(MatroidSpec::Boolean { n })
            } else {
                Err(Error::InvalidInput(format!(
                    "unknown builtin {other}; known: {}",
                    BUILTIN_NAMES.join(", ")
                )))
            }
        }
    }
}

pub fn five_vector() -> Matroid {
    five_vector_spec().build().expect("five-vector matroid")
}

pub fn m22() -> Matroid {
    m22_spec().build().expect("M(2,2)")
}

/// The built-in matroid `name`, constructed.
pub fn matroid(name: &str) -> Result<Matroid> {
    builtin(name)?.build()
}
