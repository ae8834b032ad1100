//! The acceptance suite: one test per criterion, each printing a
//! pass/fail line. Run with
//! `cargo test -p rbcm --test acceptance -- --nocapture`.

use std::time::Instant;

use rbcm::catalog;
use rbcm::crossed::GroupCrossedModule;
use rbcm::group::{CarrierGroup, GroupMap, MatrixGroup};
use rbcm::lie::heisenberg3;
use rbcm::mat::Mat;
use rbcm::rb::algebra::{
    check_algebra_rb, check_algebra_rb_pair, graph_algebra_pair, h3_projection_op, AlgebraRB,
    AlgebraRBPair,
};
use rbcm::rb::groups::{
    check_group_rb, check_group_rb_pair, graph_pair, s3_factorization_map, GroupRB, GroupRBPair,
};
use rbcm::report::ValidationReport;
use rbcm::scalar::{Rat, Scalar};
use rbcm::suites;
use rbcm::tangent::{
    check_descended_correspondence, check_integration_pair, differentiate_group_rb,
    differentiate_rb_pair, TangentProbe,
};

fn criterion(name: &str, f: impl FnOnce() -> Result<String, String>) {
    match f() {
        Ok(detail) => println!("acceptance {name}: PASS ({detail})"),
        Err(why) => {
            println!("acceptance {name}: FAIL ({why})");
            panic!("acceptance criterion {name} failed: {why}");
        }
    }
}

fn all_passed(reports: &[ValidationReport]) -> Result<(), String> {
    for rep in reports {
        if !rep.passed() {
            return Err(format!("{} failed: {:?}", rep.subject, rep.failing_laws()));
        }
    }
    Ok(())
}

fn checked_in(reports: &[ValidationReport], subject_part: &str, law: &str) -> Option<u64> {
    reports
        .iter()
        .filter(|r| r.subject.contains(subject_part))
        .flat_map(|r| &r.checks)
        .find(|c| c.law.ends_with(law))
        .map(|c| c.checked)
}

#[test]
fn criterion_1_exhaustive_finite_anchor() {
    criterion("1 (exhaustive finite anchor)", || {
        let start = Instant::now();
        for key in ["s3-conj-inverse", "s3-conj-factorization"] {
            let (_, pair) = catalog::finite_pair(key).map_err(|e| e.to_string())?;
            let reports = suites::group_pair_suite(&pair, 0);
            all_passed(&reports).map_err(|e| format!("{key}: {e}"))?;
            if reports.len() != 6 {
                return Err(format!("{key}: expected 6 stages, got {}", reports.len()));
            }
            // the sweeps are exhaustive at the documented sizes
            for (subject, law, want) in [
                ("crossed module", "peiffer", 36),
                ("crossed module", "action-composition", 216),
                ("rb pair", "action-compat", 36),
                ("induced", "rb-identity", 1296),
                ("comparison", "homomorphism", 1296),
                ("comparison", "bijective", 36),
                ("comparison", "preimage-formula", 36),
            ] {
                let got = checked_in(&reports, subject, law)
                    .ok_or_else(|| format!("{key}: no record for {law} under {subject}"))?;
                if got != want {
                    return Err(format!("{key}: {law} checked {got}, expected {want}"));
                }
            }
            // graph characterization, forward direction on valid pairs
            let g = graph_pair(&pair).map_err(|e| e.to_string())?;
            if !(g.report.passed() && g.module.is_some()) {
                return Err(format!("{key}: graph construction failed"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() > 10.0 {
            return Err(format!("runtime budget exceeded: {elapsed:?}"));
        }
        Ok(format!(
            "both anchor pairs, all stages exhaustive, {elapsed:?}"
        ))
    });
}

#[test]
fn criterion_2_categorical_anchor() {
    criterion("2 (categorical solution anchor)", || {
        let start = Instant::now();
        for key in ["s3-conj-inverse", "s3-conj-factorization"] {
            let (module, pair) = catalog::finite_pair(key).map_err(|e| e.to_string())?;
            let reports =
                suites::categorical_suite(&module, &pair, 0).map_err(|e| e.to_string())?;
            all_passed(&reports).map_err(|e| format!("{key}: {e}"))?;
            for (law, want) in [
                ("objects/braid", 216),
                ("morphisms/braid", 46656),
                ("functor-composition", 46656),
                ("invertible-morphisms", 1296),
                ("functor-identities", 36),
            ] {
                let got = checked_in(&reports, "categorical solution", law)
                    .ok_or_else(|| format!("{key}: no record for {law}"))?;
                if got != want {
                    return Err(format!("{key}: {law} checked {got}, expected {want}"));
                }
            }
            // the endofunctor report carries its four laws
            let functor_laws = reports.last().map(|r| r.checks.len()).unwrap_or(0);
            if functor_laws != 4 {
                return Err(format!("{key}: endofunctor checked {functor_laws} laws"));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() > 60.0 {
            return Err(format!("runtime budget exceeded: {elapsed:?}"));
        }
        Ok(format!(
            "braid on 6^3 objects and 36^3 morphisms, both pairs, {elapsed:?}"
        ))
    });
}

#[test]
fn criterion_3_negative_controls() {
    criterion("3 (negative controls)", || {
        // identity map on S3 fails with a witness
        let id_op = catalog::finite_operator("s3-identity-op").map_err(|e| e.to_string())?;
        let rep = check_group_rb(&id_op, 0);
        if rep.passed() {
            return Err("identity map accepted on S3".into());
        }
        let witness = rep
            .first_failure()
            .and_then(|c| c.witness.clone())
            .ok_or("identity-map failure carries no witness")?;
        if witness != "a=(12), b=(123)" {
            return Err(format!("unexpected witness {witness}"));
        }

        // the corrupted algebra pair fails with a basis witness; with
        // dt = id the compatibility with dt is what breaks, while the
        // action condition degenerates to 0 = 0
        let corrupted = catalog::algebra_pair("h3-neg-id-zero").map_err(|e| e.to_string())?;
        let rep = check_algebra_rb_pair(&corrupted, 0.0);
        if rep.passed() {
            return Err("corrupted pair (-Id, 0) accepted".into());
        }
        rep.first_failure()
            .and_then(|c| c.witness.clone())
            .ok_or("corrupted pair failure carries no witness")?;
        // the action condition is isolated by the derived instance
        let action_breaker =
            catalog::algebra_pair("nilrep-proj-negid").map_err(|e| e.to_string())?;
        let rep = check_algebra_rb_pair(&action_breaker, 0.0);
        if rep.failing_laws() != vec!["action-compat"] {
            return Err(format!(
                "action-isolating pair failed {:?} instead of the action condition alone",
                rep.failing_laws()
            ));
        }

        // graph characterization is an equivalence: 4 valid and 4
        // corrupted candidates at the group level
        let cm = rbcm::crossed::s3_conjugation_module();
        let z4cm = {
            let z = CarrierGroup::Finite(rbcm::group::finite::z4());
            GroupCrossedModule::conjugation(z)
        };
        let candidates = [
            GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::inverse()),
            GroupRBPair::new(cm.clone(), s3_factorization_map(), s3_factorization_map()),
            GroupRBPair::new(z4cm.clone(), GroupMap::inverse(), GroupMap::inverse()),
            GroupRBPair::new(z4cm.clone(), GroupMap::identity(), GroupMap::identity()),
            GroupRBPair::new(cm.clone(), GroupMap::identity(), GroupMap::identity()),
            GroupRBPair::new(cm.clone(), GroupMap::inverse(), GroupMap::identity()),
            GroupRBPair::new(cm.clone(), GroupMap::inverse(), s3_factorization_map()),
            GroupRBPair::new(cm.clone(), s3_factorization_map(), GroupMap::inverse()),
        ];
        let mut valid = 0;
        let mut corrupted_count = 0;
        for cand in candidates {
            let cand = cand.map_err(|e| e.to_string())?;
            let check_ok = check_group_rb_pair(&cand, 0).passed();
            let graph = graph_pair(&cand).map_err(|e| e.to_string())?;
            if graph.report.passed() != check_ok || graph.module.is_some() != check_ok {
                return Err(format!(
                    "graph equivalence broken for ({}, {})",
                    cand.b1.name, cand.b0.name
                ));
            }
            if check_ok {
                valid += 1;
            } else {
                corrupted_count += 1;
            }
        }
        if valid < 3 || corrupted_count < 3 {
            return Err(format!(
                "need >=3 of each, got {valid} valid, {corrupted_count} corrupted"
            ));
        }
        Ok(format!(
            "witness `{witness}`; graph equivalence on {valid} valid and {corrupted_count} corrupted candidates"
        ))
    });
}

#[test]
fn criterion_4_exact_algebra_suite() {
    criterion("4 (exact rational algebra suite)", || {
        let neg_id: Mat<Rat> = Mat::scalar(3, &Rat::from_int(-1));
        let ops = [
            ("neg-id", neg_id.clone()),
            ("projection", h3_projection_op()),
        ];

        // single operators: rb identity exactly
        for (name, op) in &ops {
            let rb = AlgebraRB::new(heisenberg3::<Rat>(), op.clone()).map_err(|e| e.to_string())?;
            let rep = check_algebra_rb(&rb, 0.0);
            if !rep.passed() || rep.checks[0].residual != Some(0.0) {
                return Err(format!("operator {name} not exactly satisfied"));
            }
        }

        // pairs on the adjoint module: the full suite with zero residual
        for key in ["h3-neg-id", "h3-projection"] {
            let pair = catalog::algebra_pair(key).map_err(|e| e.to_string())?;
            let reports = suites::algebra_suite(&pair, 0.0);
            all_passed(&reports).map_err(|e| format!("{key}: {e}"))?;
            for rep in &reports {
                for c in &rep.checks {
                    if let Some(r) = c.residual {
                        if r != 0.0 {
                            return Err(format!("{key}: {} residual {r} != 0", c.law));
                        }
                    }
                }
            }
            for (subject, law) in [
                ("graph", "graph-closure-h"),
                ("induced", "bracket-coefficient-equality"),
                ("connection", "torsion-free"),
                ("connection compatibility", "t-related"),
            ] {
                if checked_in(&reports, subject, law).is_none() {
                    return Err(format!("{key}: no record for {law}"));
                }
            }
        }

        // graph characterization as an equivalence at the algebra level
        let acm = rbcm::crossed::algebra::AlgebraCrossedModule::adjoint(heisenberg3::<Rat>());
        let candidates = [
            AlgebraRBPair::new(acm.clone(), neg_id.clone(), neg_id.clone()),
            AlgebraRBPair::new(acm.clone(), h3_projection_op(), h3_projection_op()),
            AlgebraRBPair::new(
                catalog::nilrep_module::<Rat>(),
                neg_id.clone(),
                neg_id.clone(),
            ),
            AlgebraRBPair::new(acm.clone(), Mat::identity(3), Mat::identity(3)),
            AlgebraRBPair::new(acm.clone(), neg_id.clone(), Mat::zero(3, 3)),
            AlgebraRBPair::new(
                catalog::nilrep_module::<Rat>(),
                h3_projection_op(),
                neg_id.clone(),
            ),
        ];
        for cand in candidates {
            let cand = cand.map_err(|e| e.to_string())?;
            let check_ok = check_algebra_rb_pair(&cand, 0.0).passed();
            let graph = graph_algebra_pair(&cand, 0.0).map_err(|e| e.to_string())?;
            if graph.report.passed() != check_ok {
                return Err("algebra graph equivalence broken".into());
            }
        }
        Ok("all identities exact (zero residual), graph equivalence on 3+3 candidates".into())
    });
}

#[test]
fn criterion_5_numeric_suite() {
    criterion("5 (numeric differentiation suite)", || {
        let start = Instant::now();
        let probe = TangentProbe::jacobian_default();
        let heis = CarrierGroup::Matrix(MatrixGroup::heisenberg(7));

        // inverse map differentiates to -Id within 1e-6
        let inv = GroupRB::new(heis.clone(), GroupMap::inverse()).map_err(|e| e.to_string())?;
        let d = differentiate_group_rb(&inv, &probe, 1e-6).map_err(|e| e.to_string())?;
        let err = d.value.op.max_abs_diff(&Mat::scalar(3, &-1.0));
        if err > 1e-6 {
            return Err(format!("tangent of inverse differs from -Id by {err:.2e}"));
        }
        if !d.report.passed() {
            return Err(format!("tangent report: {:?}", d.report.failing_laws()));
        }

        // factorization pair differentiates to the exact projection pair
        let (_, fact_pair) = catalog::matrix_pair(
            "heis-conj-factorization",
            7,
            rbcm::group::matrix::DEFAULT_TOLERANCE,
        )
        .map_err(|e| e.to_string())?;
        let tangent = differentiate_rb_pair(&fact_pair, &probe, 1e-6).map_err(|e| e.to_string())?;
        if !tangent.report.passed() {
            return Err(format!("tangent pair: {:?}", tangent.report.failing_laws()));
        }
        let proj: Mat<f64> = h3_projection_op();
        let e1 = tangent.value.b1.max_abs_diff(&proj);
        let e0 = tangent.value.b0.max_abs_diff(&proj);
        if e1 > 1e-6 || e0 > 1e-6 {
            return Err(format!("projection mismatch: {e1:.2e}, {e0:.2e}"));
        }
        let pair_check = check_algebra_rb_pair(&tangent.value, 1e-6);
        if !pair_check.passed() {
            return Err(format!(
                "tangent pair check: {:?}",
                pair_check.failing_laws()
            ));
        }

        // descent correspondence within 1e-4, with step-halving records
        let bracket_probe = TangentProbe::bracket_default();
        let corr = check_descended_correspondence(&fact_pair, &tangent.value, &bracket_probe, 1e-4)
            .map_err(|e| e.to_string())?;
        if !corr.passed() {
            return Err(format!("descent correspondence: {:?}", corr.failing_laws()));
        }
        if !corr
            .checks
            .iter()
            .any(|c| c.law.contains("probe-consistency"))
        {
            return Err("no step-halving consistency record".into());
        }

        // integration witness on the inverse pair
        let (_, inv_pair) = catalog::matrix_pair(
            "heis-conj-inverse",
            7,
            rbcm::group::matrix::DEFAULT_TOLERANCE,
        )
        .map_err(|e| e.to_string())?;
        let inv_tangent =
            differentiate_rb_pair(&inv_pair, &probe, 1e-6).map_err(|e| e.to_string())?;
        let witness = check_integration_pair(&inv_pair, &inv_tangent.value, &probe, 1e-6, 200)
            .map_err(|e| e.to_string())?;
        if !witness.passed() {
            return Err(format!("integration witness: {:?}", witness.failing_laws()));
        }
        let hyp = witness
            .checks
            .iter()
            .filter(|c| c.law.starts_with("hypothesis"))
            .count();
        let concl = witness
            .checks
            .iter()
            .filter(|c| c.law.starts_with("conclusion"))
            .count();
        if hyp < 2 || concl < 2 {
            return Err("integration witness is missing hypothesis or conclusion records".into());
        }

        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() > 10.0 {
            return Err(format!("runtime budget exceeded: {elapsed:?}"));
        }
        Ok(format!("all tangent checks within tolerance, {elapsed:?}"))
    });
}

#[test]
fn criterion_6_determinism() {
    criterion("6 (deterministic reports)", || {
        // categorical suite twice
        let (module, pair) =
            catalog::finite_pair("s3-conj-factorization").map_err(|e| e.to_string())?;
        let a = suites::categorical_suite(&module, &pair, 0).map_err(|e| e.to_string())?;
        let b = suites::categorical_suite(&module, &pair, 0).map_err(|e| e.to_string())?;
        let ja = serde_json::to_string(&a).map_err(|e| e.to_string())?;
        let jb = serde_json::to_string(&b).map_err(|e| e.to_string())?;
        if ja != jb {
            return Err("categorical suite reports differ between runs".into());
        }

        // sampled numeric suite twice with the same seed
        let run = || -> Result<String, String> {
            let (_, pair) = catalog::matrix_pair(
                "heis-conj-factorization",
                99,
                rbcm::group::matrix::DEFAULT_TOLERANCE,
            )
            .map_err(|e| e.to_string())?;
            let reports = suites::lie_suite(
                &pair,
                &TangentProbe::jacobian_default(),
                &TangentProbe::bracket_default(),
                1e-6,
                1e-4,
                120,
            )
            .map_err(|e| e.to_string())?;
            serde_json::to_string(&reports).map_err(|e| e.to_string())
        };
        let first = run()?;
        let second = run()?;
        if first != second {
            return Err("sampled suite reports differ for the same seed".into());
        }
        Ok(format!(
            "byte-identical reports ({} bytes each run)",
            first.len()
        ))
    });
}
