//! Crossed modules of Lie algebras and their semidirect constructions.

use crate::lie::LieAlgebra;
use crate::mat::Mat;
use crate::report::{CheckError, Derived, Mode, ValidationReport};
use crate::scalar::{vec_add, vec_display, vec_is_zero_within, vec_max_abs, vec_sub, Scalar};

/// `(h, g, dt, phi)`: `dt : h -> g` a homomorphism, `phi : g -> Der(h)`
/// a homomorphism into derivations, subject to
/// `dt(phi(x) u) = [x, dt(u)]` and `phi(dt(u)) v = [u, v]`.
#[derive(Debug, Clone)]
pub struct AlgebraCrossedModule<S> {
    pub name: String,
    pub h: LieAlgebra<S>,
    pub g: LieAlgebra<S>,
    /// `g.dim x h.dim` matrix of `dt` in the chosen bases.
    pub dt: Mat<S>,
    /// One `h.dim x h.dim` matrix per basis vector of `g`.
    pub phi: Vec<Mat<S>>,
}

impl<S: Scalar> AlgebraCrossedModule<S> {
    pub fn new(
        name: impl Into<String>,
        h: LieAlgebra<S>,
        g: LieAlgebra<S>,
        dt: Mat<S>,
        phi: Vec<Mat<S>>,
    ) -> Result<Self, CheckError> {
        if dt.rows != g.dim || dt.cols != h.dim {
            return Err(CheckError::Structural(format!(
                "dt must be {}x{}, got {}x{}",
                g.dim, h.dim, dt.rows, dt.cols
            )));
        }
        if phi.len() != g.dim {
            return Err(CheckError::Structural(format!(
                "phi needs one matrix per basis vector of g ({}), got {}",
                g.dim,
                phi.len()
            )));
        }
        if phi.iter().any(|m| m.rows != h.dim || m.cols != h.dim) {
            return Err(CheckError::Structural(format!(
                "each phi(x_i) must be {0}x{0}",
                h.dim
            )));
        }
        Ok(AlgebraCrossedModule {
            name: name.into(),
            h,
            g,
            dt,
            phi,
        })
    }

    /// `(g, g, id, ad)`.
    pub fn adjoint(g: LieAlgebra<S>) -> Self {
        let dim = g.dim;
        let ad: Vec<Mat<S>> = (0..dim)
            .map(|i| Mat::from_fn(dim, dim, |k, j| g.structure_constants()[i][j][k].clone()))
            .collect();
        AlgebraCrossedModule {
            name: format!("({0}, {0}, id, ad)", g.name),
            h: g.clone(),
            g,
            dt: Mat::identity(dim),
            phi: ad,
        }
    }

    /// Linear extension of `phi` to arbitrary `x`.
    pub fn phi_of(&self, x: &[S]) -> Mat<S> {
        assert_eq!(x.len(), self.g.dim);
        let mut acc = Mat::<S>::zero(self.h.dim, self.h.dim);
        for (xi, m) in x.iter().zip(&self.phi) {
            if *xi == S::zero() {
                continue;
            }
            acc = acc.add(&m.scale(xi));
        }
        acc
    }

    pub fn phi_apply(&self, x: &[S], u: &[S]) -> Vec<S> {
        self.phi_of(x).apply(u)
    }

    pub fn dt_apply(&self, u: &[S]) -> Vec<S> {
        self.dt.apply(u)
    }

    /// All five invariant families over basis tuples: carrier axioms
    /// are assumed validated separately.
    pub fn validate(&self, tol: f64) -> ValidationReport {
        let mut rep =
            ValidationReport::new(format!("algebra crossed module {}", self.name), Mode::Basis);
        let hd = self.h.dim;
        let gd = self.g.dim;

        // dt is a homomorphism
        let mut fail = None;
        let mut max_r = 0.0f64;
        for i in 0..hd {
            for j in 0..hd {
                let lhs = self.dt_apply(&self.h.bracket_basis(i, j));
                let rhs = self.g.bracket(
                    &self.dt.apply(&self.h.basis_vector(i)),
                    &self.dt.apply(&self.h.basis_vector(j)),
                );
                let resid = vec_sub(&lhs, &rhs);
                max_r = max_r.max(vec_max_abs(&resid));
                if !vec_is_zero_within(&resid, tol) && fail.is_none() {
                    fail = Some(format!(
                        "(u{}, u{}): residual {}",
                        i + 1,
                        j + 1,
                        vec_display(&resid)
                    ));
                }
            }
        }
        record(&mut rep, "dt-homomorphism", (hd * hd) as u64, max_r, fail);

        // each phi(x_i) is a derivation of h
        let mut fail = None;
        let mut max_r = 0.0f64;
        for i in 0..gd {
            for j in 0..hd {
                for k in 0..hd {
                    let x = self.g.basis_vector(i);
                    let u = self.h.basis_vector(j);
                    let v = self.h.basis_vector(k);
                    let lhs = self.phi_apply(&x, &self.h.bracket(&u, &v));
                    let rhs = vec_add(
                        &self.h.bracket(&self.phi_apply(&x, &u), &v),
                        &self.h.bracket(&u, &self.phi_apply(&x, &v)),
                    );
                    let resid = vec_sub(&lhs, &rhs);
                    max_r = max_r.max(vec_max_abs(&resid));
                    if !vec_is_zero_within(&resid, tol) && fail.is_none() {
                        fail = Some(format!("(x{}, u{}, u{})", i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        record(
            &mut rep,
            "phi-derivation",
            (gd * hd * hd) as u64,
            max_r,
            fail,
        );

        // phi is a homomorphism g -> Der(h)
        let mut fail = None;
        let mut max_r = 0.0f64;
        for i in 0..gd {
            for j in 0..gd {
                let bracket = self.g.bracket_basis(i, j);
                let lhs = self.phi_of(&bracket);
                let commutator = self.phi[i]
                    .matmul(&self.phi[j])
                    .sub(&self.phi[j].matmul(&self.phi[i]));
                let resid = lhs.sub(&commutator).max_abs();
                max_r = max_r.max(resid);
                if resid > effective_tol::<S>(tol) && fail.is_none() {
                    fail = Some(format!("(x{}, x{})", i + 1, j + 1));
                }
            }
        }
        record(&mut rep, "phi-homomorphism", (gd * gd) as u64, max_r, fail);

        // dt(phi(x) u) = [x, dt(u)]
        let mut fail = None;
        let mut max_r = 0.0f64;
        for i in 0..gd {
            for j in 0..hd {
                let x = self.g.basis_vector(i);
                let u = self.h.basis_vector(j);
                let lhs = self.dt_apply(&self.phi_apply(&x, &u));
                let rhs = self.g.bracket(&x, &self.dt_apply(&u));
                let resid = vec_sub(&lhs, &rhs);
                max_r = max_r.max(vec_max_abs(&resid));
                if !vec_is_zero_within(&resid, tol) && fail.is_none() {
                    fail = Some(format!("(x{}, u{})", i + 1, j + 1));
                }
            }
        }
        record(&mut rep, "equivariance", (gd * hd) as u64, max_r, fail);

        // phi(dt(u)) v = [u, v]
        let mut fail = None;
        let mut max_r = 0.0f64;
        for i in 0..hd {
            for j in 0..hd {
                let u = self.h.basis_vector(i);
                let v = self.h.basis_vector(j);
                let lhs = self.phi_apply(&self.dt_apply(&u), &v);
                let rhs = self.h.bracket(&u, &v);
                let resid = vec_sub(&lhs, &rhs);
                max_r = max_r.max(vec_max_abs(&resid));
                if !vec_is_zero_within(&resid, tol) && fail.is_none() {
                    fail = Some(format!(
                        "(u{}, u{}): phi(dt(u))v = {}, [u, v] = {}",
                        i + 1,
                        j + 1,
                        vec_display(&lhs),
                        vec_display(&rhs)
                    ));
                }
            }
        }
        record(&mut rep, "peiffer", (hd * hd) as u64, max_r, fail);
        rep
    }

    pub fn into_validated(self, tol: f64) -> Result<Self, CheckError> {
        let rep = self.validate(tol);
        if rep.passed() {
            Ok(self)
        } else {
            Err(CheckError::precondition(
                format!("algebra crossed module {}", self.name),
                rep,
            ))
        }
    }
}

fn effective_tol<S: Scalar>(tol: f64) -> f64 {
    if S::is_exact() {
        0.0
    } else {
        tol
    }
}

fn record(rep: &mut ValidationReport, law: &str, checked: u64, max_r: f64, fail: Option<String>) {
    match fail {
        None => rep.record_pass_residual(law, checked, max_r),
        Some(w) => rep.record_fail_residual(law, checked, w, max_r),
    }
}

/// The `2 dim` algebra on `g (+) g` with bracket
/// `[(x1, y1), (x2, y2)] = ([x1, x2], [x1, y2] + [y1, x2] + [y1, y2])`,
/// first copy in the leading block.
pub fn double_semidirect_algebra<S: Scalar>(
    g: &LieAlgebra<S>,
) -> Result<Derived<LieAlgebra<S>>, CheckError> {
    let n = g.dim;
    let dim = 2 * n;
    let mut c = vec![vec![vec![S::zero(); dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let (x1, y1) = split_basis::<S>(i, n);
            let (x2, y2) = split_basis::<S>(j, n);
            let first = g.bracket(&x1, &x2);
            let second = vec_add(
                &vec_add(&g.bracket(&x1, &y2), &g.bracket(&y1, &x2)),
                &g.bracket(&y1, &y2),
            );
            let mut out = Vec::with_capacity(dim);
            out.extend(first);
            out.extend(second);
            c[i][j] = out;
        }
    }
    let alg = LieAlgebra::new(format!("{0}|x{0}", g.name), dim, c)?;
    let report = alg.validate(0.0);
    if !report.passed() {
        return Err(CheckError::precondition(
            "double semidirect algebra",
            report,
        ));
    }
    Ok(Derived::new(alg, report))
}

fn split_basis<S: Scalar>(i: usize, n: usize) -> (Vec<S>, Vec<S>) {
    let mut x = vec![S::zero(); n];
    let mut y = vec![S::zero(); n];
    if i < n {
        x[i] = S::one();
    } else {
        y[i - n] = S::one();
    }
    (x, y)
}

/// The lifted crossed module `(h (+) h, g (+) g, (dt, dt), phi~)` with
/// `phi~(x, y)(u, v) = (phi(x) u, phi(y) u + phi(y) v + phi(x) v)`.
pub fn lift_algebra_cm<S: Scalar>(
    acm: &AlgebraCrossedModule<S>,
    tol: f64,
) -> Result<Derived<AlgebraCrossedModule<S>>, CheckError> {
    let h2 = double_semidirect_algebra(&acm.h)?.value;
    let g2 = double_semidirect_algebra(&acm.g)?.value;
    let hd = acm.h.dim;
    let gd = acm.g.dim;

    let mut dt2 = Mat::<S>::zero(2 * gd, 2 * hd);
    for i in 0..gd {
        for j in 0..hd {
            dt2.set(i, j, acm.dt.at(i, j).clone());
            dt2.set(gd + i, hd + j, acm.dt.at(i, j).clone());
        }
    }

    let mut phi2 = Vec::with_capacity(2 * gd);
    for b in 0..2 * gd {
        let mut m = Mat::<S>::zero(2 * hd, 2 * hd);
        if b < gd {
            // phi~(x, 0)(u, v) = (phi(x) u, phi(x) v)
            let px = &acm.phi[b];
            for i in 0..hd {
                for j in 0..hd {
                    m.set(i, j, px.at(i, j).clone());
                    m.set(hd + i, hd + j, px.at(i, j).clone());
                }
            }
        } else {
            // phi~(0, y)(u, v) = (0, phi(y) u + phi(y) v)
            let py = &acm.phi[b - gd];
            for i in 0..hd {
                for j in 0..hd {
                    m.set(hd + i, j, py.at(i, j).clone());
                    m.set(hd + i, hd + j, py.at(i, j).clone());
                }
            }
        }
        phi2.push(m);
    }

    let lifted = AlgebraCrossedModule::new(format!("lift({})", acm.name), h2, g2, dt2, phi2)?;
    let report = lifted.validate(tol);
    Ok(Derived::new(lifted, report))
}

/// The semidirect product algebra on `g (+) h` (g block first) with
/// `[(x, u), (y, v)] = ([x, y], phi(x) v - phi(y) u + [u, v])`.
pub fn semidirect_product_algebra<S: Scalar>(
    acm: &AlgebraCrossedModule<S>,
) -> Result<Derived<LieAlgebra<S>>, CheckError> {
    let gd = acm.g.dim;
    let hd = acm.h.dim;
    let dim = gd + hd;
    let mut c = vec![vec![vec![S::zero(); dim]; dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let (x, u) = split_mixed::<S>(i, gd, hd);
            let (y, v) = split_mixed::<S>(j, gd, hd);
            let first = acm.g.bracket(&x, &y);
            let second = vec_add(
                &vec_sub(&acm.phi_apply(&x, &v), &acm.phi_apply(&y, &u)),
                &acm.h.bracket(&u, &v),
            );
            let mut out = Vec::with_capacity(dim);
            out.extend(first);
            out.extend(second);
            c[i][j] = out;
        }
    }
    let alg = LieAlgebra::new(format!("{}|x{}", acm.g.name, acm.h.name), dim, c)?;
    let report = alg.validate(0.0);
    if !report.passed() {
        return Err(CheckError::precondition(
            "semidirect product algebra",
            report,
        ));
    }
    Ok(Derived::new(alg, report))
}

fn split_mixed<S: Scalar>(i: usize, gd: usize, hd: usize) -> (Vec<S>, Vec<S>) {
    let mut x = vec![S::zero(); gd];
    let mut u = vec![S::zero(); hd];
    if i < gd {
        x[i] = S::one();
    } else {
        u[i - gd] = S::one();
    }
    (x, u)
}
