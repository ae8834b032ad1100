//! Suite orchestration: the fixed bundles of checks behind each CLI
//! command and each acceptance criterion. Derived constructions only
//! run when their preconditions passed; the reports always include the
//! precondition sweep itself.

use crate::crossed::algebra::{lift_algebra_cm, semidirect_product_algebra, AlgebraCrossedModule};
use crate::crossed::{lift_group_cm, semidirect_product_group, GroupCrossedModule};
use crate::rb::algebra::{
    check_algebra_rb, check_algebra_rb_pair, check_t_related, connection_from_rb,
    descend_algebra_cm, descend_bracket, graph_algebra_pair, induced_rb_algebra_semidirect,
    AlgebraRBPair,
};
use crate::rb::groups::{
    check_group_rb, check_group_rb_pair, descend_group, descend_group_cm, graph_pair,
    induced_rb_semidirect, iso_phi, GroupRB, GroupRBPair,
};
use crate::report::{CheckError, ValidationReport};
use crate::scalar::Scalar;
use crate::tangent::{
    check_descended_correspondence, check_integration_pair, differentiate_rb_pair, TangentProbe,
};
use crate::ybe::{categorical_solution, rb_functor, set_ybe_from_rb};

fn relabel(mut rep: ValidationReport, subject: &str) -> ValidationReport {
    rep.subject = format!("{subject}: {}", rep.subject);
    rep
}

/// Crossed-module validation bundle: the module's own axioms plus the
/// constructions it induces on the doubled and product carriers, each
/// re-validated (they are theorems; a failure is an implementation
/// bug, and the suite would surface it).
pub fn crossed_module_suite(cm: &GroupCrossedModule, budget: u64) -> Vec<ValidationReport> {
    let mut out = vec![cm.validate(budget)];
    if cm.is_finite() {
        match lift_group_cm(cm) {
            Ok(l) => out.push(relabel(l.report, "lift")),
            Err(e) => out.push(error_report("lift", &e)),
        }
        match semidirect_product_group(cm) {
            Ok(sd) => out.push(relabel(sd.report, "semidirect")),
            Err(e) => out.push(error_report("semidirect", &e)),
        }
    }
    out
}

/// The algebra-level analogue: module axioms, the lifted module on the
/// doubled algebras, and the semidirect product with its Jacobi sweep.
pub fn algebra_cm_suite<S: Scalar>(
    acm: &AlgebraCrossedModule<S>,
    tol: f64,
) -> Vec<ValidationReport> {
    let mut out = vec![acm.h.validate(tol), acm.g.validate(tol), acm.validate(tol)];
    match lift_algebra_cm(acm, tol) {
        Ok(l) => out.push(relabel(l.report, "lift")),
        Err(e) => out.push(error_report("lift", &e)),
    }
    match semidirect_product_algebra(acm) {
        Ok(sd) => out.push(relabel(sd.report, "semidirect")),
        Err(e) => out.push(error_report("semidirect", &e)),
    }
    out
}

/// The single-operator suite: the defining identity, then (on finite
/// carriers, when it holds) the descended group.
pub fn group_operator_suite(rb: &GroupRB, budget: u64) -> Vec<ValidationReport> {
    let mut out = Vec::new();
    let check = check_group_rb(rb, budget);
    let ok = check.passed();
    out.push(check);
    if ok && rb.host.is_finite() {
        match descend_group(rb) {
            Ok(d) => out.push(relabel(d.report, "descent")),
            Err(CheckError::Precondition { report, .. }) => out.push(relabel(*report, "descent")),
            Err(_) => {}
        }
    }
    out
}

/// The full pair suite: module axioms, pair conditions, the graph
/// characterization, and (when everything holds on finite carriers)
/// descent, the induced semidirect operator, and the comparison
/// isomorphism.
pub fn group_pair_suite(pair: &GroupRBPair, budget: u64) -> Vec<ValidationReport> {
    let mut out = Vec::new();
    out.push(pair.cm.validate(budget));
    let check = check_group_rb_pair(pair, budget);
    let pair_ok = check.passed();
    out.push(check);
    if pair.cm.is_finite() {
        match graph_pair(pair) {
            Ok(g) => out.push(g.report),
            Err(e) => out.push(error_report("graph", &e)),
        }
        if pair_ok {
            match descend_group_cm(pair) {
                Ok(d) => out.push(relabel(d.report, "descent")),
                Err(e) => out.push(error_report("descent", &e)),
            }
            match induced_rb_semidirect(pair) {
                Ok(d) => out.push(relabel(d.report, "induced")),
                Err(e) => out.push(error_report("induced", &e)),
            }
            match iso_phi(pair) {
                Ok(d) => out.push(relabel(d.report, "comparison")),
                Err(e) => out.push(error_report("comparison", &e)),
            }
        }
    }
    out
}

/// Set-level solution suite: operator check plus braid verification.
pub fn set_ybe_suite(rb: &GroupRB, budget: u64) -> Result<Vec<ValidationReport>, CheckError> {
    match set_ybe_from_rb(rb, budget) {
        Ok(d) => Ok(vec![check_group_rb(rb, budget), d.report]),
        Err(CheckError::Precondition { report, .. }) => Ok(vec![*report]),
        Err(e) => Err(e),
    }
}

/// Categorical solution suite: the full functor/braid/invertibility
/// bundle plus the operator endofunctor.
pub fn categorical_suite(
    cm: &GroupCrossedModule,
    pair: &GroupRBPair,
    budget: u64,
) -> Result<Vec<ValidationReport>, CheckError> {
    let mut out = Vec::new();
    match categorical_solution(cm, pair, budget) {
        Ok(d) => out.push(d.report),
        Err(CheckError::Precondition { report, .. }) => {
            out.push(relabel(*report, "precondition"));
            return Ok(out);
        }
        Err(e) => return Err(e),
    }
    match rb_functor(cm, pair, budget) {
        Ok(d) => out.push(d.report),
        Err(CheckError::Precondition { report, .. }) => out.push(relabel(*report, "endofunctor")),
        Err(e) => return Err(e),
    }
    Ok(out)
}

/// The exact algebra suite: module axioms, pair conditions, graph
/// characterization, and (when the pair holds) descent with Jacobi,
/// the block operator with the coefficient identity, both connections
/// with the torsion identity, and the connection compatibility check.
pub fn algebra_suite<S: Scalar>(pair: &AlgebraRBPair<S>, tol: f64) -> Vec<ValidationReport> {
    let mut out = Vec::new();
    out.push(pair.acm.h.validate(tol));
    out.push(pair.acm.g.validate(tol));
    out.push(pair.acm.validate(tol));
    let check = check_algebra_rb_pair(pair, tol);
    let pair_ok = check.passed();
    out.push(check);
    match graph_algebra_pair(pair, tol) {
        Ok(g) => out.push(g.report),
        Err(e) => out.push(error_report("graph", &e)),
    }
    if pair_ok {
        match descend_algebra_cm(pair, tol) {
            Ok(d) => out.push(relabel(d.report, "descent")),
            Err(e) => out.push(error_report("descent", &e)),
        }
        for (label, rb) in [("descent-h", pair.rb1()), ("descent-g", pair.rb0())] {
            match descend_bracket(&rb, tol) {
                Ok(d) => out.push(relabel(d.report, label)),
                Err(e) => out.push(error_report(label, &e)),
            }
        }
        match induced_rb_algebra_semidirect(pair, tol) {
            Ok(d) => out.push(relabel(d.report, "induced")),
            Err(e) => out.push(error_report("induced", &e)),
        }
        for (label, rb) in [("connection-h", pair.rb1()), ("connection-g", pair.rb0())] {
            match connection_from_rb(&rb, tol) {
                Ok(d) => out.push(relabel(d.report, label)),
                Err(e) => out.push(error_report(label, &e)),
            }
        }
        out.push(check_t_related(pair, tol));
    }
    out
}

/// Single-operator algebra check, used by document ingestion.
pub fn algebra_operator_suite<S: Scalar>(
    rb: &crate::rb::algebra::AlgebraRB<S>,
    tol: f64,
) -> Vec<ValidationReport> {
    let mut out = Vec::new();
    out.push(rb.host.validate(tol));
    let check = check_algebra_rb(rb, tol);
    let ok = check.passed();
    out.push(check);
    if ok {
        if let Ok(d) = descend_bracket(rb, tol) {
            out.push(relabel(d.report, "descent"));
        }
        if let Ok(d) = connection_from_rb(rb, tol) {
            out.push(relabel(d.report, "connection"));
        }
    }
    out
}

/// The numeric correspondence suite on matrix carriers: sampled pair
/// conditions, differentiation of the pair, the descent correspondence
/// at the bracket probe, and the integration witness.
pub fn lie_suite(
    pair: &GroupRBPair,
    jacobian_probe: &TangentProbe,
    bracket_probe: &TangentProbe,
    tol: f64,
    bracket_tol: f64,
    budget: u64,
) -> Result<Vec<ValidationReport>, CheckError> {
    let mut out = Vec::new();
    out.push(pair.cm.validate(budget));
    out.push(check_group_rb_pair(pair, budget));
    let tangent = differentiate_rb_pair(pair, jacobian_probe, tol)?;
    out.push(tangent.report.clone());
    out.push(check_descended_correspondence(
        pair,
        &tangent.value,
        bracket_probe,
        bracket_tol,
    )?);
    out.push(check_integration_pair(
        pair,
        &tangent.value,
        jacobian_probe,
        tol,
        budget,
    )?);
    Ok(out)
}

fn error_report(stage: &str, err: &CheckError) -> ValidationReport {
    match err {
        CheckError::Precondition { report, .. } => relabel((**report).clone(), stage),
        other => {
            let mut rep = ValidationReport::new(
                format!("{stage} (not run)"),
                crate::report::Mode::Exhaustive,
            );
            rep.record_fail("construction", 0, other.to_string());
            rep
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn crossed_module_suite_includes_lift_and_semidirect() {
        let (module, _) = catalog::finite_pair("s3-conj-inverse").unwrap();
        let reports = crossed_module_suite(&module, 0);
        assert_eq!(reports.len(), 3);
        assert!(reports.iter().all(ValidationReport::passed));
        assert!(reports[1].subject.starts_with("lift"));
        assert!(reports[2].subject.starts_with("semidirect"));
    }

    #[test]
    fn algebra_cm_suite_includes_lift_and_semidirect() {
        let pair = catalog::algebra_pair("h3-neg-id").unwrap();
        let reports = algebra_cm_suite(&pair.acm, 0.0);
        assert_eq!(reports.len(), 5);
        assert!(reports.iter().all(ValidationReport::passed));
    }

    #[test]
    fn pair_suite_counts_for_anchor_instance() {
        let (_, pair) = catalog::finite_pair("s3-conj-inverse").unwrap();
        let reports = group_pair_suite(&pair, 0);
        assert!(reports.iter().all(ValidationReport::passed));
        // module, pair, graph, descent, induced, comparison
        assert_eq!(reports.len(), 6);
    }

    #[test]
    fn pair_suite_stops_at_failures_for_negative_control() {
        let (_, pair) = catalog::finite_pair("s3-conj-identitymap").unwrap();
        let reports = group_pair_suite(&pair, 0);
        // module validates, pair fails, graph fails; no derived stages
        assert_eq!(reports.len(), 3);
        assert!(reports[0].passed());
        assert!(!reports[1].passed());
        assert!(!reports[2].passed());
    }

    #[test]
    fn algebra_suite_zero_residual_for_projection_pair() {
        let pair = catalog::algebra_pair("h3-projection").unwrap();
        let reports = algebra_suite(&pair, 0.0);
        assert!(reports.iter().all(ValidationReport::passed));
        for rep in &reports {
            for c in &rep.checks {
                if let Some(r) = c.residual {
                    assert_eq!(r, 0.0, "nonzero residual in {}", c.law);
                }
            }
        }
    }

    #[test]
    fn lie_suite_handles_the_degenerate_base() {
        let (_, pair) = catalog::matrix_pair(
            "abelian3-over-trivial",
            3,
            crate::group::matrix::DEFAULT_TOLERANCE,
        )
        .unwrap();
        let reports = lie_suite(
            &pair,
            &TangentProbe::jacobian_default(),
            &TangentProbe::bracket_default(),
            1e-6,
            1e-4,
            40,
        )
        .unwrap();
        for r in &reports {
            assert!(r.passed(), "{}: {:?}", r.subject, r.failing_laws());
        }
    }

    #[test]
    fn lie_suite_runs_on_heisenberg_inverse() {
        let (_, pair) = catalog::matrix_pair(
            "heis-conj-inverse",
            11,
            crate::group::matrix::DEFAULT_TOLERANCE,
        )
        .unwrap();
        let reports = lie_suite(
            &pair,
            &TangentProbe::jacobian_default(),
            &TangentProbe::bracket_default(),
            1e-6,
            1e-4,
            60,
        )
        .unwrap();
        for r in &reports {
            assert!(r.passed(), "{}: {:?}", r.subject, r.failing_laws());
        }
    }
}
