//! Built-in instances: the exhaustive finite anchors, the exact
//! rational algebra suite, and the matrix-carrier probes. Each entry
//! names the construction it realizes and the suites it supports.

use crate::crossed::algebra::AlgebraCrossedModule;
use crate::crossed::GroupCrossedModule;
use crate::group::finite::{d4, s3, trivial, z4};
use crate::group::{CarrierGroup, Family, GroupMap, MatrixGroup};
use crate::lie::heisenberg3;
use crate::mat::Mat;
use crate::rb::algebra::{h3_projection_op, AlgebraRBPair};
use crate::rb::groups::{s3_factorization_map, GroupRB, GroupRBPair};
use crate::report::CheckError;
use crate::scalar::{Rat, Scalar};

/// What a catalog entry can be fed into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryKind {
    /// A crossed module with a candidate operator pair, finite carriers.
    FinitePair,
    /// A single operator on a finite carrier.
    FiniteOperator,
    /// A crossed module with a candidate pair on matrix carriers.
    MatrixPair,
    /// An algebra crossed module with a candidate pair, exact scalars.
    AlgebraPair,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub kind: EntryKind,
    /// The construction realized, named by its content.
    pub summary: &'static str,
    /// Whether the advertised suite is expected to pass (negative
    /// controls are part of the catalog).
    pub expected_pass: bool,
}

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            key: "s3-conj-inverse",
            kind: EntryKind::FinitePair,
            summary: "inverse maps on the conjugation module of S3; every construction checked exhaustively",
            expected_pass: true,
        },
        CatalogEntry {
            key: "s3-conj-factorization",
            kind: EntryKind::FinitePair,
            summary: "second-factor-inverse operator of S3 = <(123)>.<(12)> on the conjugation module",
            expected_pass: true,
        },
        CatalogEntry {
            key: "s3-conj-identitymap",
            kind: EntryKind::FinitePair,
            summary: "identity maps on the conjugation module of S3; fails on nonabelian carriers (negative control)",
            expected_pass: false,
        },
        CatalogEntry {
            key: "z4-trivial-inverse",
            kind: EntryKind::FinitePair,
            summary: "inverse operator paired with the identity over the trivial base group, carrier Z4",
            expected_pass: true,
        },
        CatalogEntry {
            key: "d4-conj-factorization",
            kind: EntryKind::FinitePair,
            summary: "second-factor-inverse operator of D4 = <r>.<s> on the conjugation module, order-8 carrier",
            expected_pass: true,
        },
        CatalogEntry {
            key: "z2-in-z4-inverse",
            kind: EntryKind::FinitePair,
            summary: "inverse maps over the doubling homomorphism Z2 -> Z4 with the trivial action: distinct carriers on both levels",
            expected_pass: true,
        },
        CatalogEntry {
            key: "s3-inverse-op",
            kind: EntryKind::FiniteOperator,
            summary: "the inverse map as an operator on S3",
            expected_pass: true,
        },
        CatalogEntry {
            key: "s3-factorization-op",
            kind: EntryKind::FiniteOperator,
            summary: "the factorization operator on S3",
            expected_pass: true,
        },
        CatalogEntry {
            key: "s3-identity-op",
            kind: EntryKind::FiniteOperator,
            summary: "the identity map on S3 (negative control: fails with a witness pair)",
            expected_pass: false,
        },
        CatalogEntry {
            key: "h3-neg-id",
            kind: EntryKind::AlgebraPair,
            summary: "(-Id, -Id) on the adjoint module of the Heisenberg algebra, exact rationals",
            expected_pass: true,
        },
        CatalogEntry {
            key: "h3-projection",
            kind: EntryKind::AlgebraPair,
            summary: "minus the projection onto span{e2, e3} on the adjoint module of h3, exact rationals",
            expected_pass: true,
        },
        CatalogEntry {
            key: "h3-neg-id-zero",
            kind: EntryKind::AlgebraPair,
            summary: "corrupted pair (-Id, 0) on the adjoint module of h3 (negative control)",
            expected_pass: false,
        },
        CatalogEntry {
            key: "nilrep-proj-negid",
            kind: EntryKind::AlgebraPair,
            summary: "pair breaking only the action condition: abelian rank-3 module under the nilpotent representation of h3",
            expected_pass: false,
        },
        CatalogEntry {
            key: "heis-conj-inverse",
            kind: EntryKind::MatrixPair,
            summary: "inverse maps on the conjugation module of the Heisenberg matrix group",
            expected_pass: true,
        },
        CatalogEntry {
            key: "heis-conj-factorization",
            kind: EntryKind::MatrixPair,
            summary: "second-factor-inverse operator of the Heisenberg factorization, conjugation module",
            expected_pass: true,
        },
        CatalogEntry {
            key: "gl2-conj-inverse",
            kind: EntryKind::MatrixPair,
            summary: "inverse maps on the conjugation module of invertible 2x2 matrices sampled near the identity",
            expected_pass: true,
        },
        CatalogEntry {
            key: "heis-ad-inverse",
            kind: EntryKind::MatrixPair,
            summary: "negation on the Heisenberg algebra as a vector group, paired with the inverse map under the adjoint action",
            expected_pass: true,
        },
        CatalogEntry {
            key: "heis-ad-factorization",
            kind: EntryKind::MatrixPair,
            summary: "the tangent of the factorization operator (a linear map on the vector-group carrier) paired with the operator itself under the adjoint action",
            expected_pass: true,
        },
        CatalogEntry {
            key: "abelian2-inverse",
            kind: EntryKind::MatrixPair,
            summary: "inverse maps on the conjugation module of a rank-2 vector group (all brackets vanish)",
            expected_pass: true,
        },
        CatalogEntry {
            key: "abelian3-over-trivial",
            kind: EntryKind::MatrixPair,
            summary: "inverse on a rank-3 vector group over the zero-rank base: the degenerate case with no base directions",
            expected_pass: true,
        },
    ]
}

pub fn find(key: &str) -> Result<CatalogEntry, CheckError> {
    entries()
        .into_iter()
        .find(|e| e.key == key)
        .ok_or_else(|| CheckError::Structural(format!("unknown catalog key `{key}`")))
}

/// A finite crossed module with a candidate pair.
pub fn finite_pair(key: &str) -> Result<(GroupCrossedModule, GroupRBPair), CheckError> {
    match key {
        "s3-conj-inverse" => {
            let cm = GroupCrossedModule::conjugation(CarrierGroup::Finite(s3()));
            let pair = GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::inverse())?;
            Ok((cm, pair))
        }
        "s3-conj-factorization" => {
            let cm = GroupCrossedModule::conjugation(CarrierGroup::Finite(s3()));
            let pair =
                GroupRBPair::new(cm.clone(), s3_factorization_map(), s3_factorization_map())?;
            Ok((cm, pair))
        }
        "s3-conj-identitymap" => {
            let cm = GroupCrossedModule::conjugation(CarrierGroup::Finite(s3()));
            let pair = GroupRBPair::new(cm.clone(), GroupMap::identity(), GroupMap::identity())?;
            Ok((cm, pair))
        }
        "d4-conj-factorization" => {
            let fg = d4();
            // rotations are ids 0..4, the reflection subgroup is {e, s}
            let map = crate::rb::groups::factorization_table(&fg, &[0, 1, 2, 3], &[0, 4])?;
            let cm = GroupCrossedModule::conjugation(CarrierGroup::Finite(fg));
            let pair = GroupRBPair::new(cm.clone(), map.clone(), map)?;
            Ok((cm, pair))
        }
        "z2-in-z4-inverse" => {
            let cm = GroupCrossedModule::new(
                "(Z2, Z4, double, trivial)",
                CarrierGroup::Finite(crate::group::finite::cyclic(2)),
                CarrierGroup::Finite(z4()),
                GroupMap::named_table("double", vec![0, 2]),
                crate::group::GroupAction::trivial(),
            )?;
            let pair = GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::inverse())?;
            Ok((cm, pair))
        }
        "z4-trivial-inverse" => {
            let cm = GroupCrossedModule::over_trivial_base(
                CarrierGroup::Finite(z4()),
                CarrierGroup::Finite(trivial()),
            );
            let pair = GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::identity())?;
            Ok((cm, pair))
        }
        other => Err(CheckError::Structural(format!(
            "catalog key `{other}` is not a finite pair"
        ))),
    }
}

/// A single operator on a finite carrier.
pub fn finite_operator(key: &str) -> Result<GroupRB, CheckError> {
    let car = CarrierGroup::Finite(s3());
    match key {
        "s3-inverse-op" => GroupRB::new(car, GroupMap::inverse()),
        "s3-factorization-op" => GroupRB::new(car, s3_factorization_map()),
        "s3-identity-op" => GroupRB::new(car, GroupMap::identity()),
        other => Err(CheckError::Structural(format!(
            "catalog key `{other}` is not a finite operator"
        ))),
    }
}

/// The module with an abelian carrier under the nilpotent
/// representation of h3; isolates the action condition.
pub fn nilrep_module<S: Scalar>() -> AlgebraCrossedModule<S> {
    let h = crate::lie::LieAlgebra::<S>::abelian("a3", 3);
    let g = heisenberg3::<S>();
    let mut e12 = Mat::<S>::zero(3, 3);
    e12.set(0, 1, S::one());
    let mut e23 = Mat::<S>::zero(3, 3);
    e23.set(1, 2, S::one());
    let mut e13 = Mat::<S>::zero(3, 3);
    e13.set(0, 2, S::one());
    AlgebraCrossedModule::new("nilrep", h, g, Mat::zero(3, 3), vec![e12, e23, e13])
        .expect("well-shaped module")
}

/// An algebra crossed module with a candidate pair, exact rationals.
pub fn algebra_pair(key: &str) -> Result<AlgebraRBPair<Rat>, CheckError> {
    let neg_id = Mat::scalar(3, &Rat::from_int(-1));
    match key {
        "h3-neg-id" => {
            let acm = AlgebraCrossedModule::adjoint(heisenberg3::<Rat>());
            AlgebraRBPair::new(acm, neg_id.clone(), neg_id)
        }
        "h3-projection" => {
            let acm = AlgebraCrossedModule::adjoint(heisenberg3::<Rat>());
            AlgebraRBPair::new(acm, h3_projection_op(), h3_projection_op())
        }
        "h3-neg-id-zero" => {
            let acm = AlgebraCrossedModule::adjoint(heisenberg3::<Rat>());
            AlgebraRBPair::new(acm, neg_id, Mat::zero(3, 3))
        }
        "nilrep-proj-negid" => {
            AlgebraRBPair::new(nilrep_module::<Rat>(), h3_projection_op(), neg_id)
        }
        other => Err(CheckError::Structural(format!(
            "catalog key `{other}` is not an algebra pair"
        ))),
    }
}

/// A crossed module with a candidate pair on matrix carriers, built
/// with the given seed and equality tolerance.
pub fn matrix_pair(
    key: &str,
    seed: u64,
    eps: f64,
) -> Result<(GroupCrossedModule, GroupRBPair), CheckError> {
    match key {
        "heis-conj-inverse" => {
            let heis = CarrierGroup::Matrix(MatrixGroup::new(Family::Unipotent(3), seed, eps));
            let cm = GroupCrossedModule::conjugation(heis);
            let pair = GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::inverse())?;
            Ok((cm, pair))
        }
        "heis-conj-factorization" => {
            let heis = CarrierGroup::Matrix(MatrixGroup::new(Family::Unipotent(3), seed, eps));
            let cm = GroupCrossedModule::conjugation(heis);
            let pair = GroupRBPair::new(
                cm.clone(),
                GroupMap::heis_factor_inverse(),
                GroupMap::heis_factor_inverse(),
            )?;
            Ok((cm, pair))
        }
        "gl2-conj-inverse" => {
            let gl = CarrierGroup::Matrix(MatrixGroup::new(Family::GeneralLinear(2), seed, eps));
            let cm = GroupCrossedModule::conjugation(gl);
            let pair = GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::inverse())?;
            Ok((cm, pair))
        }
        "heis-ad-inverse" => {
            // the algebra of the Heisenberg group as a vector group,
            // acted on by the adjoint representation; the inverse of the
            // vector group is negation, the tangent of the inverse map
            let heis = MatrixGroup::new(Family::Unipotent(3), seed, eps);
            let ab = MatrixGroup::new(
                Family::AbelianBlock(heis.family.algebra_dim()),
                seed ^ 0x5bd1,
                eps,
            );
            let cm = GroupCrossedModule::new(
                "(h3 as vector group, heisenberg, e, adjoint)",
                CarrierGroup::Matrix(ab),
                CarrierGroup::Matrix(heis),
                GroupMap::constant_identity(),
                crate::group::GroupAction::adjoint_linear(),
            )?;
            let pair = GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::inverse())?;
            Ok((cm, pair))
        }
        "heis-ad-factorization" => {
            let heis = MatrixGroup::new(Family::Unipotent(3), seed, eps);
            let ab = MatrixGroup::new(
                Family::AbelianBlock(heis.family.algebra_dim()),
                seed ^ 0x5bd1,
                eps,
            );
            let cm = GroupCrossedModule::new(
                "(h3 as vector group, heisenberg, e, adjoint)",
                CarrierGroup::Matrix(ab),
                CarrierGroup::Matrix(heis),
                GroupMap::constant_identity(),
                crate::group::GroupAction::adjoint_linear(),
            )?;
            let pair = GroupRBPair::new(
                cm.clone(),
                GroupMap::linear_abelian(h3_projection_op::<f64>()),
                GroupMap::heis_factor_inverse(),
            )?;
            Ok((cm, pair))
        }
        "abelian2-inverse" => {
            let ab = CarrierGroup::Matrix(MatrixGroup::new(Family::AbelianBlock(2), seed, eps));
            let cm = GroupCrossedModule::conjugation(ab);
            let pair = GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::inverse())?;
            Ok((cm, pair))
        }
        "abelian3-over-trivial" => {
            // degenerate base: the zero-rank vector group; the top must
            // be abelian for the Peiffer identity over a trivial base
            let h = CarrierGroup::Matrix(MatrixGroup::new(Family::AbelianBlock(3), seed, eps));
            let base = CarrierGroup::Matrix(MatrixGroup::new(Family::AbelianBlock(0), seed, eps));
            let cm = GroupCrossedModule::over_trivial_base(h, base);
            let pair = GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::identity())?;
            Ok((cm, pair))
        }
        other => Err(CheckError::Structural(format!(
            "catalog key `{other}` is not a matrix pair"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_is_buildable() {
        for e in entries() {
            match e.kind {
                EntryKind::FinitePair => {
                    finite_pair(e.key).unwrap();
                }
                EntryKind::FiniteOperator => {
                    finite_operator(e.key).unwrap();
                }
                EntryKind::AlgebraPair => {
                    algebra_pair(e.key).unwrap();
                }
                EntryKind::MatrixPair => {
                    matrix_pair(e.key, 42, crate::group::matrix::DEFAULT_TOLERANCE).unwrap();
                }
            }
        }
    }

    #[test]
    fn unknown_key_is_a_structural_error() {
        assert!(matches!(find("nope"), Err(CheckError::Structural(_))));
    }
}
