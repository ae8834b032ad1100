//! Every catalog entry runs its advertised suite: entries marked as
//! passing must pass it, negative controls must fail it. This is the
//! contract the CLI exposes.

use rbcm::catalog::{self, EntryKind};
use rbcm::report::ValidationReport;
use rbcm::suites;
use rbcm::tangent::{check_integration_pair, differentiate_rb_pair, TangentProbe};

fn outcome(reports: &[ValidationReport]) -> bool {
    reports.iter().all(ValidationReport::passed)
}

#[test]
fn every_entry_meets_its_advertised_outcome() {
    for entry in catalog::entries() {
        let passed = match entry.kind {
            EntryKind::FinitePair => {
                let (module, pair) = catalog::finite_pair(entry.key).unwrap();
                let mut reports = suites::group_pair_suite(&pair, 0);
                if outcome(&reports) {
                    reports.extend(suites::categorical_suite(&module, &pair, 0).unwrap());
                }
                outcome(&reports)
            }
            EntryKind::FiniteOperator => {
                let op = catalog::finite_operator(entry.key).unwrap();
                let mut reports = suites::group_operator_suite(&op, 0);
                if outcome(&reports) {
                    reports.extend(suites::set_ybe_suite(&op, 0).unwrap());
                }
                outcome(&reports)
            }
            EntryKind::AlgebraPair => {
                let pair = catalog::algebra_pair(entry.key).unwrap();
                outcome(&suites::algebra_suite(&pair, 0.0))
            }
            EntryKind::MatrixPair => {
                let (_, pair) =
                    catalog::matrix_pair(entry.key, 17, rbcm::group::matrix::DEFAULT_TOLERANCE)
                        .unwrap();
                let reports = suites::lie_suite(
                    &pair,
                    &TangentProbe::jacobian_default(),
                    &TangentProbe::bracket_default(),
                    1e-6,
                    1e-4,
                    80,
                )
                .unwrap();
                outcome(&reports)
            }
        };
        assert_eq!(
            passed, entry.expected_pass,
            "catalog entry `{}` did not meet its advertised outcome",
            entry.key
        );
    }
}

#[test]
fn integration_hypothesis_failure_is_reported_distinctly() {
    // candidate operators are the inverse maps, whose tangents are
    // (-Id, -Id); claiming the pair (-Id, 0) must fail the hypothesis
    // for the base component, not the conclusion
    let (_, pair) = catalog::matrix_pair(
        "heis-conj-inverse",
        5,
        rbcm::group::matrix::DEFAULT_TOLERANCE,
    )
    .unwrap();
    let probe = TangentProbe::jacobian_default();
    let honest = differentiate_rb_pair(&pair, &probe, 1e-6).unwrap().value;
    let mut claimed = honest.clone();
    claimed.b0 = rbcm::mat::Mat::zero(3, 3);
    let rep = check_integration_pair(&pair, &claimed, &probe, 1e-6, 60).unwrap();
    assert!(!rep.passed());
    let failing = rep.failing_laws();
    assert!(
        failing.contains(&"hypothesis-differential-g"),
        "failing laws: {failing:?}"
    );
    assert!(
        !failing.iter().any(|l| l.starts_with("conclusion/")),
        "conclusion should still hold for the honest group pair: {failing:?}"
    );
    assert!(
        !failing.contains(&"hypothesis-differential-h"),
        "the fibre component still matches: {failing:?}"
    );
}
