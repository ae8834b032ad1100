//! Desk-scale Lie theory on matrix carriers: numeric differentiation of
//! group operators at the identity, assembly of the tangent crossed
//! module, and the two compatibility checks between group-level and
//! algebra-level descent.
//!
//! All derivatives are central finite differences through the family's
//! exponential chart; every report embeds the probe settings, and
//! Jacobians are recomputed at half the step so an unreliable probe is
//! flagged as such instead of masquerading as a theorem failure.

use crate::crossed::algebra::AlgebraCrossedModule;
use crate::group::{CarrierGroup, Element, MatrixGroup};
use crate::mat::Mat;
use crate::rb::algebra::{check_algebra_rb, check_algebra_rb_pair, AlgebraRB, AlgebraRBPair};
use crate::rb::groups::{check_group_rb_pair, GroupRB, GroupRBPair};
use crate::report::{CheckError, Derived, Mode, ValidationReport};

/// Central-difference settings. The step must sit inside the window
/// where truncation and round-off are both controlled.
#[derive(Debug, Clone, Copy)]
pub struct TangentProbe {
    pub step: f64,
    pub scheme: u8,
}

pub const DEFAULT_JACOBIAN_STEP: f64 = 1e-5;
pub const DEFAULT_BRACKET_STEP: f64 = 1e-3;
pub const DEFAULT_TOLERANCE: f64 = 1e-6;
pub const DEFAULT_BRACKET_TOLERANCE: f64 = 1e-4;

impl TangentProbe {
    pub fn new(step: f64, scheme: u8) -> Result<Self, CheckError> {
        if !(1e-8..=1e-2).contains(&step) {
            return Err(CheckError::Structural(format!(
                "finite-difference step {step} outside [1e-8, 1e-2]"
            )));
        }
        if scheme != 2 && scheme != 4 {
            return Err(CheckError::Structural(format!(
                "central-difference scheme must be 2 or 4, got {scheme}"
            )));
        }
        Ok(TangentProbe { step, scheme })
    }

    pub fn jacobian_default() -> Self {
        TangentProbe {
            step: DEFAULT_JACOBIAN_STEP,
            scheme: 2,
        }
    }

    pub fn bracket_default() -> Self {
        TangentProbe {
            step: DEFAULT_BRACKET_STEP,
            scheme: 2,
        }
    }

    fn halved(&self) -> Self {
        TangentProbe {
            step: self.step / 2.0,
            scheme: self.scheme,
        }
    }

    fn mode(&self, tol: f64) -> Mode {
        Mode::Probe {
            step: self.step,
            scheme: self.scheme,
            tol,
        }
    }
}

/// Derivative at 0 of a curve into coordinate space.
fn central_derivative(probe: &TangentProbe, dim: usize, f: impl Fn(f64) -> Vec<f64>) -> Vec<f64> {
    let h = probe.step;
    match probe.scheme {
        2 => {
            let plus = f(h);
            let minus = f(-h);
            (0..dim).map(|k| (plus[k] - minus[k]) / (2.0 * h)).collect()
        }
        _ => {
            let p2 = f(2.0 * h);
            let p1 = f(h);
            let m1 = f(-h);
            let m2 = f(-2.0 * h);
            (0..dim)
                .map(|k| (-p2[k] + 8.0 * p1[k] - 8.0 * m1[k] + m2[k]) / (12.0 * h))
                .collect()
        }
    }
}

/// Jacobian at the identity of a map between matrix carriers, one basis
/// direction per column.
pub fn numeric_jacobian(
    dom: &MatrixGroup,
    cod: &MatrixGroup,
    probe: &TangentProbe,
    f: impl Fn(&Mat<f64>) -> Mat<f64>,
) -> Mat<f64> {
    let dd = dom.family.algebra_dim();
    let cd = cod.family.algebra_dim();
    let mut jac = Mat::<f64>::zero(cd, dd);
    for j in 0..dd {
        let mut dir = vec![0.0; dd];
        dir[j] = 1.0;
        let col = central_derivative(probe, cd, |s| {
            let scaled: Vec<f64> = dir.iter().map(|x| s * x).collect();
            cod.log_coords(&f(&dom.exp_coords(&scaled)))
        });
        for (i, v) in col.iter().enumerate() {
            jac.set(i, j, *v);
        }
    }
    jac
}

fn require_matrix(car: &CarrierGroup, what: &str) -> Result<MatrixGroup, CheckError> {
    match car {
        CarrierGroup::Matrix(m) => Ok(m.clone()),
        CarrierGroup::Finite(_) => Err(CheckError::Unsupported(format!(
            "{what} requires a matrix carrier"
        ))),
    }
}

fn require_closed_form(map: &crate::group::GroupMap, what: &str) -> Result<(), CheckError> {
    if map.is_closed_form() {
        Ok(())
    } else {
        Err(CheckError::Unsupported(format!(
            "{what} requires a registry closed-form map, got a table"
        )))
    }
}

/// The tangent operator of a group operator: Jacobian at the identity,
/// recomputed at half the step for a consistency record, and checked
/// as a weight-1 operator on the family's Lie algebra at `tol`.
pub fn differentiate_group_rb(
    rb: &GroupRB,
    probe: &TangentProbe,
    tol: f64,
) -> Result<Derived<AlgebraRB<f64>>, CheckError> {
    let mg = require_matrix(&rb.host, "differentiation")?;
    require_closed_form(&rb.map, "differentiation")?;
    let apply = |m: &Mat<f64>| rb.apply(&Element::Mat(m.clone())).mat().clone();
    let jac = numeric_jacobian(&mg, &mg, probe, apply);
    let jac_half = numeric_jacobian(&mg, &mg, &probe.halved(), apply);

    let mut rep = ValidationReport::new(
        format!(
            "tangent operator of {} on {}",
            rb.map.name,
            mg.family.name()
        ),
        probe.mode(tol),
    );
    let drift = jac.max_abs_diff(&jac_half);
    if drift <= 4.0 * tol {
        rep.record_pass_residual("probe-consistency", 2, drift);
    } else {
        rep.record_fail_residual(
            "probe-consistency",
            2,
            format!(
                "step {} vs {} disagree; unreliable probe",
                probe.step,
                probe.step / 2.0
            ),
            drift,
        );
    }

    let alg = mg.family.algebra();
    let out = AlgebraRB::new(alg, jac_half)?;
    rep.absorb("tangent", check_algebra_rb(&out, tol));
    Ok(Derived::new(out, rep))
}

/// Differentiates both components of a pair, plus the structure maps of
/// the crossed module, and checks the assembled tangent pair at `tol`.
pub fn differentiate_rb_pair(
    pair: &GroupRBPair,
    probe: &TangentProbe,
    tol: f64,
) -> Result<Derived<AlgebraRBPair<f64>>, CheckError> {
    let hg = require_matrix(&pair.cm.h, "pair differentiation")?;
    let gg = require_matrix(&pair.cm.g, "pair differentiation")?;
    require_closed_form(&pair.b1, "pair differentiation")?;
    require_closed_form(&pair.b0, "pair differentiation")?;
    require_closed_form(&pair.cm.t, "pair differentiation")?;

    let mut rep = ValidationReport::new(
        format!(
            "tangent pair of ({}, {}) on {}",
            pair.b1.name, pair.b0.name, pair.cm.name
        ),
        probe.mode(tol),
    );

    let d1 = differentiate_group_rb(&pair.rb1(), probe, tol)?;
    rep.absorb("component-h", d1.report);
    let d0 = differentiate_group_rb(&pair.rb0(), probe, tol)?;
    rep.absorb("component-g", d0.report);

    let dt = numeric_jacobian(&hg, &gg, probe, |m| {
        pair.cm.t_of(&Element::Mat(m.clone())).mat().clone()
    });

    // phi(x_i) = d/ds at 0 of the Jacobian of p -> Phi(exp(s x_i)) p
    let gd = gg.family.algebra_dim();
    let mut phi = Vec::with_capacity(gd);
    for i in 0..gd {
        let mut dir = vec![0.0; gd];
        dir[i] = 1.0;
        let jac_at = |s: f64| {
            let actor = Element::Mat(gg.exp_coords(&dir.iter().map(|x| s * x).collect::<Vec<_>>()));
            numeric_jacobian(&hg, &hg, probe, |p| {
                pair.cm.act(&actor, &Element::Mat(p.clone())).mat().clone()
            })
        };
        let h = probe.step;
        let plus = jac_at(h);
        let minus = jac_at(-h);
        phi.push(plus.sub(&minus).scale(&(1.0 / (2.0 * h))));
    }

    let h_alg = hg.family.algebra();
    let g_alg = gg.family.algebra();
    let acm =
        AlgebraCrossedModule::new(format!("tangent({})", pair.cm.name), h_alg, g_alg, dt, phi)?;
    rep.absorb("tangent-module", acm.validate(tol));
    let out = AlgebraRBPair::new(acm, d1.value.op, d0.value.op)?;
    rep.absorb("tangent-pair", check_algebra_rb_pair(&out, tol));
    Ok(Derived::new(out, rep))
}

/// Mixed second derivative of a two-parameter curve into coordinates.
fn mixed_second_derivative(step: f64, dim: usize, f: impl Fn(f64, f64) -> Vec<f64>) -> Vec<f64> {
    let pp = f(step, step);
    let pm = f(step, -step);
    let mp = f(-step, step);
    let mm = f(-step, -step);
    (0..dim)
        .map(|k| (pp[k] - pm[k] - mp[k] + mm[k]) / (4.0 * step * step))
        .collect()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Verifies that the algebra-level descent is the tangent structure of
/// the group-level descent: the bracket of each descended group
/// (second-order commutator derivative) matches the descended bracket,
/// and the derivative of the descended action matches the descended
/// action of the tangent pair. Each quantity is recomputed at half the
/// step for the consistency record.
pub fn check_descended_correspondence(
    pair: &GroupRBPair,
    apair: &AlgebraRBPair<f64>,
    probe: &TangentProbe,
    tol: f64,
) -> Result<ValidationReport, CheckError> {
    let hg = require_matrix(&pair.cm.h, "descended correspondence")?;
    let gg = require_matrix(&pair.cm.g, "descended correspondence")?;
    let mut rep = ValidationReport::new(
        format!(
            "descent correspondence for ({}, {})",
            pair.b1.name, pair.b0.name
        ),
        probe.mode(tol),
    );

    let rb1 = pair.rb1();
    let rb0 = pair.rb0();
    let arb1 = apair.rb1();
    let arb0 = apair.rb0();

    // group commutator in the descended group, probed at the identity
    let desc_commutator = |rb: &GroupRB, a: &Element, b: &Element| {
        let adag = rb.descended_inv(a);
        let bdag = rb.descended_inv(b);
        rb.twisted_mul(a, &rb.twisted_mul(b, &rb.twisted_mul(&adag, &bdag)))
    };

    let numeric_bracket = |mg: &MatrixGroup, rb: &GroupRB, i: usize, j: usize, step: f64| {
        let dim = mg.family.algebra_dim();
        mixed_second_derivative(step, dim, |s, t| {
            let mut u = vec![0.0; dim];
            u[i] = s;
            let mut v = vec![0.0; dim];
            v[j] = t;
            let a = Element::Mat(mg.exp_coords(&u));
            let b = Element::Mat(mg.exp_coords(&v));
            mg.log_coords(desc_commutator(rb, &a, &b).mat())
        })
    };

    for (label, mg, rb, arb) in [
        ("descended-bracket-h", &hg, &rb1, &arb1),
        ("descended-bracket-g", &gg, &rb0, &arb0),
    ] {
        let dim = mg.family.algebra_dim();
        let mut max_resid = 0.0f64;
        let mut max_drift = 0.0f64;
        let mut fail = None;
        for i in 0..dim {
            for j in 0..dim {
                let got = numeric_bracket(mg, rb, i, j, probe.step);
                let refined = numeric_bracket(mg, rb, i, j, probe.step / 2.0);
                let want =
                    arb.descended_bracket(&arb.host.basis_vector(i), &arb.host.basis_vector(j));
                let resid = max_abs_diff(&got, &want);
                max_resid = max_resid.max(resid);
                max_drift = max_drift.max(max_abs_diff(&got, &refined));
                if resid > tol && fail.is_none() {
                    fail = Some(format!("(e{}, e{}): residual {resid:.3e}", i + 1, j + 1));
                }
            }
        }
        let count = (dim * dim) as u64;
        match fail {
            None => rep.record_pass_residual(label, count, max_resid),
            Some(w) => rep.record_fail_residual(label, count, w, max_resid),
        }
        let law = format!("{label}-probe-consistency");
        if max_drift <= 4.0 * tol {
            rep.record_pass_residual(law, count, max_drift);
        } else {
            rep.record_fail_residual(law, count, "step halving disagrees".into(), max_drift);
        }
    }

    // derivative of the descended action against the tangent pair's
    let hd = hg.family.algebra_dim();
    let gd = gg.family.algebra_dim();
    let numeric_action = |i: usize, j: usize, step: f64| {
        mixed_second_derivative(step, hd, |s, t| {
            let mut x = vec![0.0; gd];
            x[i] = s;
            let mut u = vec![0.0; hd];
            u[j] = t;
            let a = Element::Mat(gg.exp_coords(&x));
            let p = Element::Mat(hg.exp_coords(&u));
            hg.log_coords(pair.descended_action(&a, &p).mat())
        })
    };
    let mut max_resid = 0.0f64;
    let mut max_drift = 0.0f64;
    let mut fail = None;
    for i in 0..gd {
        for j in 0..hd {
            let got = numeric_action(i, j, probe.step);
            let refined = numeric_action(i, j, probe.step / 2.0);
            let want =
                apair.descended_action(&apair.acm.g.basis_vector(i), &apair.acm.h.basis_vector(j));
            let resid = max_abs_diff(&got, &want);
            max_resid = max_resid.max(resid);
            max_drift = max_drift.max(max_abs_diff(&got, &refined));
            if resid > tol && fail.is_none() {
                fail = Some(format!("(x{}, u{}): residual {resid:.3e}", i + 1, j + 1));
            }
        }
    }
    let count = (gd * hd) as u64;
    match fail {
        None => rep.record_pass_residual("descended-action", count, max_resid),
        Some(w) => rep.record_fail_residual("descended-action", count, w, max_resid),
    }
    if max_drift <= 4.0 * tol {
        rep.record_pass_residual("descended-action-probe-consistency", count, max_drift);
    } else {
        rep.record_fail_residual(
            "descended-action-probe-consistency",
            count,
            "step halving disagrees".into(),
            max_drift,
        );
    }
    Ok(rep)
}

/// A compatibility witness for integration: given group operators whose
/// tangents are claimed to be an algebra pair, verify (a) the tangents
/// match the claim within tolerance and (b) the group pair satisfies
/// the pair conditions on sampled points. Hypothesis failures and
/// conclusion failures are reported under distinct laws.
pub fn check_integration_pair(
    candidate: &GroupRBPair,
    apair: &AlgebraRBPair<f64>,
    probe: &TangentProbe,
    tol: f64,
    budget: u64,
) -> Result<ValidationReport, CheckError> {
    let mut rep = ValidationReport::new(
        format!(
            "integration witness for ({}, {})",
            candidate.b1.name, candidate.b0.name
        ),
        probe.mode(tol),
    );
    rep.absorb("algebra-pair", check_algebra_rb_pair(apair, tol));

    let d1 = differentiate_group_rb(&candidate.rb1(), probe, tol)?;
    let resid = d1.value.op.max_abs_diff(&apair.b1);
    if resid <= tol {
        rep.record_pass_residual("hypothesis-differential-h", 1, resid);
    } else {
        rep.record_fail_residual(
            "hypothesis-differential-h",
            1,
            "tangent of the group operator differs from the algebra operator".into(),
            resid,
        );
    }
    let d0 = differentiate_group_rb(&candidate.rb0(), probe, tol)?;
    let resid = d0.value.op.max_abs_diff(&apair.b0);
    if resid <= tol {
        rep.record_pass_residual("hypothesis-differential-g", 1, resid);
    } else {
        rep.record_fail_residual(
            "hypothesis-differential-g",
            1,
            "tangent of the group operator differs from the algebra operator".into(),
            resid,
        );
    }

    rep.absorb("conclusion", check_group_rb_pair(candidate, budget));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Family, GroupMap};

    fn heis_car(seed: u64) -> CarrierGroup {
        CarrierGroup::Matrix(MatrixGroup::heisenberg(seed))
    }

    #[test]
    fn inverse_differentiates_to_minus_identity_on_every_family() {
        let probe = TangentProbe::jacobian_default();
        for family in [
            Family::Unipotent(3),
            Family::Unipotent(4),
            Family::AbelianBlock(2),
            Family::GeneralLinear(2),
        ] {
            let mg = MatrixGroup::new(family, 7, crate::group::matrix::DEFAULT_TOLERANCE);
            let rb = GroupRB::new(CarrierGroup::Matrix(mg), GroupMap::inverse()).unwrap();
            let d = differentiate_group_rb(&rb, &probe, 1e-6).unwrap();
            assert!(
                d.report.passed(),
                "family {family:?}: {:?}",
                d.report.failing_laws()
            );
            let dim = d.value.op.rows;
            let minus_id = Mat::<f64>::scalar(dim, &-1.0);
            assert!(d.value.op.max_abs_diff(&minus_id) < 1e-6);
        }
    }

    #[test]
    fn constant_map_differentiates_to_zero() {
        let rb = GroupRB::new(heis_car(3), GroupMap::constant_identity()).unwrap();
        let d = differentiate_group_rb(&rb, &TangentProbe::jacobian_default(), 1e-6).unwrap();
        assert!(d.report.passed());
        assert!(d.value.op.max_abs() < 1e-9);
    }

    #[test]
    fn factorization_differentiates_to_minus_projection() {
        let rb = GroupRB::new(heis_car(5), GroupMap::heis_factor_inverse()).unwrap();
        let d = differentiate_group_rb(&rb, &TangentProbe::jacobian_default(), 1e-6).unwrap();
        assert!(d.report.passed());
        let want = crate::rb::algebra::h3_projection_op::<f64>();
        assert!(d.value.op.max_abs_diff(&want) < 1e-6);
    }

    #[test]
    fn order_four_scheme_matches_the_projection() {
        let rb = GroupRB::new(heis_car(5), GroupMap::heis_factor_inverse()).unwrap();
        let probe = TangentProbe::new(1e-4, 4).unwrap();
        let d = differentiate_group_rb(&rb, &probe, 1e-6).unwrap();
        assert!(d.report.passed());
        let want = crate::rb::algebra::h3_projection_op::<f64>();
        assert!(d.value.op.max_abs_diff(&want) < 1e-8);
    }

    #[test]
    fn table_maps_are_rejected() {
        let car = CarrierGroup::Finite(crate::group::finite::s3());
        let rb = GroupRB::new(car, GroupMap::inverse()).unwrap();
        match differentiate_group_rb(&rb, &TangentProbe::jacobian_default(), 1e-6) {
            Err(CheckError::Unsupported(_)) => {}
            other => panic!("expected unsupported, got {other:?}"),
        }
    }

    #[test]
    fn probe_range_is_enforced() {
        assert!(TangentProbe::new(1e-9, 2).is_err());
        assert!(TangentProbe::new(1e-3, 3).is_err());
        assert!(TangentProbe::new(1e-3, 4).is_ok());
    }
}
