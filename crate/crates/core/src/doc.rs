//! The canonical document schema: one human-readable JSON layout for
//! every ingested object and every emitted report. Field order is the
//! struct declaration order, so serialized output is byte-stable.
//!
//! Carriers are stored standalone; crossed modules reference their two
//! carrier documents by path (resolved relative to the referring file);
//! maps are index arrays (finite) or registry names (matrix); algebra
//! data is dense row-major, with rational entries written as strings
//! like `"-1/2"`.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crossed::algebra::AlgebraCrossedModule;
use crate::crossed::GroupCrossedModule;
use crate::group::finite::RawGroupTable;
use crate::group::{CarrierGroup, Family, GroupAction, GroupMap, MatrixGroup};
use crate::lie::LieAlgebra;
use crate::mat::Mat;
use crate::rb::algebra::AlgebraRBPair;
use crate::rb::groups::{GroupRB, GroupRBPair};
use crate::report::{CheckError, ValidationReport};
use crate::scalar::{Rat, Scalar};

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GroupDoc {
    FiniteGroup {
        name: String,
        elements: Vec<String>,
        mul_table: Vec<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        identity: Option<usize>,
        #[serde(skip_serializing_if = "Option::is_none")]
        inverse_table: Option<Vec<usize>>,
    },
    MatrixGroup {
        family: String,
        dim: usize,
        seed: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        tolerance: Option<f64>,
    },
}

/// A map body: a total index table, a registry name, or a linear map
/// on an abelian block carrier.
#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapDoc {
    Table(Vec<usize>),
    Named(String),
    Linear(Vec<Vec<f64>>),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionDoc {
    Tables(Vec<Vec<usize>>),
    Named(String),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StructureDoc {
    CrossedModule {
        name: String,
        h: String,
        g: String,
        t: MapDoc,
        phi: ActionDoc,
    },
    RbOperator {
        map: MapDoc,
    },
    RbPair {
        b1: MapDoc,
        b0: MapDoc,
    },
    LieAlgebra {
        name: String,
        dim: usize,
        scalar_mode: String,
        structure_constants: Vec<Vec<Vec<serde_json::Value>>>,
    },
    AlgebraCrossedModule {
        name: String,
        h: String,
        g: String,
        dt: Vec<Vec<serde_json::Value>>,
        phi: Vec<Vec<Vec<serde_json::Value>>>,
    },
    AlgebraRbPair {
        b1: Vec<Vec<serde_json::Value>>,
        b0: Vec<Vec<serde_json::Value>>,
    },
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CheckError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CheckError::Structural(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CheckError::Structural(format!("cannot parse {}: {e}", path.display())))
}

fn sibling(base: &Path, rel: &str) -> PathBuf {
    match base.parent() {
        Some(dir) => dir.join(rel),
        None => PathBuf::from(rel),
    }
}

fn checked_map(doc: &MapDoc) -> Result<GroupMap, CheckError> {
    match doc {
        MapDoc::Table(entries) => Ok(GroupMap::table(entries.clone())),
        MapDoc::Named(name) => match name.as_str() {
            "inverse" => Ok(GroupMap::inverse()),
            "identity" => Ok(GroupMap::identity()),
            "constant-e" => Ok(GroupMap::constant_identity()),
            "heis-factor-inverse" => Ok(GroupMap::heis_factor_inverse()),
            other => Err(CheckError::Unsupported(format!(
                "unknown registry map `{other}` (known: inverse, identity, constant-e, heis-factor-inverse)"
            ))),
        },
        MapDoc::Linear(rows) => Ok(GroupMap::linear_abelian(Mat::from_rows(rows.clone()))),
    }
}

fn checked_action(doc: &ActionDoc) -> Result<GroupAction, CheckError> {
    match doc {
        ActionDoc::Tables(tables) => Ok(GroupAction::tables(tables.clone())),
        ActionDoc::Named(name) => match name.as_str() {
            "conjugation" => Ok(GroupAction::conjugation()),
            "trivial" => Ok(GroupAction::trivial()),
            "adjoint" => Ok(GroupAction::adjoint_linear()),
            other => Err(CheckError::Unsupported(format!(
                "unknown registry action `{other}` (known: conjugation, trivial, adjoint)"
            ))),
        },
    }
}

/// A loaded carrier, keeping the raw table around so corrupted inputs
/// can still be validated rather than rejected outright.
pub enum LoadedGroup {
    Finite(RawGroupTable),
    Matrix(MatrixGroup),
}

impl LoadedGroup {
    /// Axiom sweep without promotion.
    pub fn validate(&self, budget: u64) -> ValidationReport {
        match self {
            LoadedGroup::Finite(raw) => raw.validate(),
            LoadedGroup::Matrix(mg) => {
                crate::group::validate_group(&CarrierGroup::Matrix(mg.clone()), budget)
            }
        }
    }

    /// Promotion to a carrier usable by the constructions.
    pub fn into_carrier(self) -> Result<CarrierGroup, CheckError> {
        match self {
            LoadedGroup::Finite(raw) => Ok(CarrierGroup::Finite(raw.into_group()?)),
            LoadedGroup::Matrix(mg) => Ok(CarrierGroup::Matrix(mg)),
        }
    }
}

pub fn load_group(path: &Path) -> Result<LoadedGroup, CheckError> {
    let doc: GroupDoc = read_json(path)?;
    match doc {
        GroupDoc::FiniteGroup {
            name,
            elements,
            mul_table,
            identity,
            inverse_table,
        } => Ok(LoadedGroup::Finite(RawGroupTable::new(
            name,
            elements,
            mul_table,
            identity,
            inverse_table,
        )?)),
        GroupDoc::MatrixGroup {
            family,
            dim,
            seed,
            tolerance,
        } => {
            let fam = Family::parse(&family, dim)?;
            Ok(LoadedGroup::Matrix(MatrixGroup::new(
                fam,
                seed,
                tolerance.unwrap_or(crate::group::matrix::DEFAULT_TOLERANCE),
            )))
        }
    }
}

pub fn load_crossed_module(path: &Path) -> Result<GroupCrossedModule, CheckError> {
    let doc: StructureDoc = read_json(path)?;
    let StructureDoc::CrossedModule { name, h, g, t, phi } = doc else {
        return Err(CheckError::Structural(format!(
            "{} is not a crossed-module document",
            path.display()
        )));
    };
    let h = load_group(&sibling(path, &h))?.into_carrier()?;
    let g = load_group(&sibling(path, &g))?.into_carrier()?;
    GroupCrossedModule::new(name, h, g, checked_map(&t)?, checked_action(&phi)?)
}

pub fn load_rb_operator(group_path: &Path, rb_path: &Path) -> Result<GroupRB, CheckError> {
    let host = load_group(group_path)?.into_carrier()?;
    let doc: StructureDoc = read_json(rb_path)?;
    let map = match doc {
        StructureDoc::RbOperator { map } => checked_map(&map)?,
        _ => {
            return Err(CheckError::Structural(format!(
                "{} is not an operator document",
                rb_path.display()
            )))
        }
    };
    GroupRB::new(host, map)
}

pub fn load_rb_pair(cm_path: &Path, pair_path: &Path) -> Result<GroupRBPair, CheckError> {
    let cm = load_crossed_module(cm_path)?;
    let doc: StructureDoc = read_json(pair_path)?;
    let StructureDoc::RbPair { b1, b0 } = doc else {
        return Err(CheckError::Structural(format!(
            "{} is not a pair document",
            pair_path.display()
        )));
    };
    GroupRBPair::new(cm, checked_map(&b1)?, checked_map(&b0)?)
}

fn parse_rat(v: &serde_json::Value) -> Result<Rat, CheckError> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(Rat::from_int).ok_or_else(|| {
            CheckError::Structural(format!(
                "non-integer number {n} in rational-mode document; write it as \"p/q\""
            ))
        }),
        serde_json::Value::String(s) => Rat::from_str(s.trim())
            .map_err(|e| CheckError::Structural(format!("cannot parse rational `{s}`: {e}"))),
        other => Err(CheckError::Structural(format!(
            "expected a scalar, got {other}"
        ))),
    }
}

fn parse_f64(v: &serde_json::Value) -> Result<f64, CheckError> {
    use num_traits::ToPrimitive;
    match v {
        serde_json::Value::Number(n) => n
            .as_f64()
            .ok_or_else(|| CheckError::Structural(format!("bad float {n}"))),
        serde_json::Value::String(s) => parse_rat(v)?
            .to_f64()
            .ok_or_else(|| CheckError::Structural(format!("scalar `{s}` does not fit in a float"))),
        other => Err(CheckError::Structural(format!(
            "expected a scalar, got {other}"
        ))),
    }
}

fn parse_matrix<S: Scalar>(
    rows: &[Vec<serde_json::Value>],
    parse: impl Fn(&serde_json::Value) -> Result<S, CheckError>,
) -> Result<Mat<S>, CheckError> {
    let parsed: Result<Vec<Vec<S>>, CheckError> = rows
        .iter()
        .map(|r| r.iter().map(&parse).collect())
        .collect();
    Ok(Mat::from_rows(parsed?))
}

/// A loaded Lie algebra in whichever scalar regime the document chose.
pub enum LoadedAlgebra {
    Rational(LieAlgebra<Rat>),
    Float(LieAlgebra<f64>),
}

pub fn load_lie_algebra(path: &Path) -> Result<LoadedAlgebra, CheckError> {
    let doc: StructureDoc = read_json(path)?;
    let StructureDoc::LieAlgebra {
        name,
        dim,
        scalar_mode,
        structure_constants,
    } = doc
    else {
        return Err(CheckError::Structural(format!(
            "{} is not a lie-algebra document",
            path.display()
        )));
    };
    match scalar_mode.as_str() {
        "rational" => {
            let c: Result<Vec<Vec<Vec<Rat>>>, CheckError> = structure_constants
                .iter()
                .map(|ci| {
                    ci.iter()
                        .map(|cij| cij.iter().map(parse_rat).collect())
                        .collect()
                })
                .collect();
            Ok(LoadedAlgebra::Rational(LieAlgebra::new(name, dim, c?)?))
        }
        "float" => {
            let c: Result<Vec<Vec<Vec<f64>>>, CheckError> = structure_constants
                .iter()
                .map(|ci| {
                    ci.iter()
                        .map(|cij| cij.iter().map(parse_f64).collect())
                        .collect()
                })
                .collect();
            Ok(LoadedAlgebra::Float(LieAlgebra::new(name, dim, c?)?))
        }
        other => Err(CheckError::Structural(format!(
            "scalar_mode must be `rational` or `float`, got `{other}`"
        ))),
    }
}

/// Algebra crossed modules are ingested in the rational regime; float
/// carriers arise internally from differentiation.
pub fn load_algebra_cm(path: &Path) -> Result<AlgebraCrossedModule<Rat>, CheckError> {
    let doc: StructureDoc = read_json(path)?;
    let StructureDoc::AlgebraCrossedModule {
        name,
        h,
        g,
        dt,
        phi,
    } = doc
    else {
        return Err(CheckError::Structural(format!(
            "{} is not an algebra-crossed-module document",
            path.display()
        )));
    };
    let LoadedAlgebra::Rational(h) = load_lie_algebra(&sibling(path, &h))? else {
        return Err(CheckError::Structural(
            "carrier h must be in rational mode".into(),
        ));
    };
    let LoadedAlgebra::Rational(g) = load_lie_algebra(&sibling(path, &g))? else {
        return Err(CheckError::Structural(
            "carrier g must be in rational mode".into(),
        ));
    };
    let dt = parse_matrix(&dt, parse_rat)?;
    let phi: Result<Vec<Mat<Rat>>, CheckError> =
        phi.iter().map(|m| parse_matrix(m, parse_rat)).collect();
    AlgebraCrossedModule::new(name, h, g, dt, phi?)
}

pub fn load_algebra_pair(
    acm_path: &Path,
    pair_path: &Path,
) -> Result<AlgebraRBPair<Rat>, CheckError> {
    let acm = load_algebra_cm(acm_path)?;
    let doc: StructureDoc = read_json(pair_path)?;
    let StructureDoc::AlgebraRbPair { b1, b0 } = doc else {
        return Err(CheckError::Structural(format!(
            "{} is not an algebra pair document",
            pair_path.display()
        )));
    };
    AlgebraRBPair::new(
        acm,
        parse_matrix(&b1, parse_rat)?,
        parse_matrix(&b0, parse_rat)?,
    )
}

/// Writes a finite group as a document, the inverse of `load_group`.
pub fn finite_group_doc(raw: &RawGroupTable) -> GroupDoc {
    GroupDoc::FiniteGroup {
        name: raw.name.clone(),
        elements: raw.names.clone(),
        mul_table: raw.mul.clone(),
        identity: raw.identity,
        inverse_table: raw.inv.clone(),
    }
}
