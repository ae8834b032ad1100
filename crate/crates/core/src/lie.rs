//! Finite-dimensional Lie algebras given by structure constants.
//!
//! `c[i][j][k]` means `[e_i, e_j] = sum_k c[i][j][k] e_k`. The scalar
//! type selects the equality regime: rationals check identities
//! exactly, `f64` checks them against a tolerance.

use crate::report::{CheckError, Mode, ValidationReport};
use crate::scalar::{vec_add, vec_display, vec_max_abs, vec_zero, Scalar};

#[derive(Debug, Clone)]
pub struct LieAlgebra<S> {
    pub name: String,
    pub dim: usize,
    c: Vec<Vec<Vec<S>>>,
}

impl<S: Scalar> LieAlgebra<S> {
    /// Shape check only; axioms are the business of [`Self::validate`].
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        c: Vec<Vec<Vec<S>>>,
    ) -> Result<Self, CheckError> {
        if c.len() != dim
            || c.iter()
                .any(|ci| ci.len() != dim || ci.iter().any(|cij| cij.len() != dim))
        {
            return Err(CheckError::Structural(format!(
                "structure constants are not a {dim}x{dim}x{dim} array"
            )));
        }
        Ok(LieAlgebra {
            name: name.into(),
            dim,
            c,
        })
    }

    pub fn abelian(name: impl Into<String>, dim: usize) -> Self {
        LieAlgebra {
            name: name.into(),
            dim,
            c: vec![vec![vec_zero(dim); dim]; dim],
        }
    }

    pub fn structure_constants(&self) -> &Vec<Vec<Vec<S>>> {
        &self.c
    }

    pub fn basis_vector(&self, i: usize) -> Vec<S> {
        let mut v = vec_zero(self.dim);
        v[i] = S::one();
        v
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[S], v: &[S]) -> Vec<S> {
        assert_eq!(u.len(), self.dim, "dimension mismatch in bracket");
        assert_eq!(v.len(), self.dim, "dimension mismatch in bracket");
        let mut out = vec_zero::<S>(self.dim);
        for i in 0..self.dim {
            if u[i] == S::zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j] == S::zero() {
                    continue;
                }
                let uv = u[i].mul(&v[j]);
                for k in 0..self.dim {
                    let term = uv.mul(&self.c[i][j][k]);
                    out[k] = out[k].add(&term);
                }
            }
        }
        out
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<S> {
        self.c[i][j].clone()
    }

    /// Antisymmetry and the Jacobi identity, exhaustively over basis
    /// tuples (sufficient by multilinearity).
    pub fn validate(&self, tol: f64) -> ValidationReport {
        let n = self.dim;
        let mut rep = ValidationReport::new(format!("lie algebra {}", self.name), Mode::Basis);
        let mut anti_witness = None;
        let mut max_anti = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let resid = vec_add(&self.c[i][j], &self.c[j][i]);
                max_anti = max_anti.max(vec_max_abs(&resid));
                if !resid.iter().all(|x| x.is_zero_within(tol)) && anti_witness.is_none() {
                    anti_witness = Some((i, j, vec_display(&resid)));
                }
            }
        }
        match anti_witness {
            None => rep.record_pass_residual("antisymmetry", (n * n) as u64, max_anti),
            Some((i, j, r)) => rep.record_fail_residual(
                "antisymmetry",
                (n * n) as u64,
                format!("[e{}, e{}] + [e{}, e{}] = {r}", i + 1, j + 1, j + 1, i + 1),
                max_anti,
            ),
        }

        let mut jac_witness = None;
        let mut max_jac = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ei = self.basis_vector(i);
                    let ej = self.basis_vector(j);
                    let ek = self.basis_vector(k);
                    let t1 = self.bracket(&self.bracket(&ei, &ej), &ek);
                    let t2 = self.bracket(&self.bracket(&ej, &ek), &ei);
                    let t3 = self.bracket(&self.bracket(&ek, &ei), &ej);
                    let resid = vec_add(&vec_add(&t1, &t2), &t3);
                    max_jac = max_jac.max(vec_max_abs(&resid));
                    if !resid.iter().all(|x| x.is_zero_within(tol)) && jac_witness.is_none() {
                        jac_witness = Some((i, j, k, vec_display(&resid)));
                    }
                }
            }
        }
        match jac_witness {
            None => rep.record_pass_residual("jacobi", (n * n * n) as u64, max_jac),
            Some((i, j, k, r)) => rep.record_fail_residual(
                "jacobi",
                (n * n * n) as u64,
                format!("cyclic sum at (e{}, e{}, e{}) = {r}", i + 1, j + 1, k + 1),
                max_jac,
            ),
        }
        rep
    }

    pub fn into_validated(self, tol: f64) -> Result<Self, CheckError> {
        let rep = self.validate(tol);
        if rep.passed() {
            Ok(self)
        } else {
            Err(CheckError::precondition(
                format!("lie algebra {}", self.name),
                rep,
            ))
        }
    }
}

/// The 3-dimensional Heisenberg algebra: `[e1, e2] = e3`, all other
/// basis brackets zero.
pub fn heisenberg3<S: Scalar>() -> LieAlgebra<S> {
    let dim = 3;
    let mut c = vec![vec![vec_zero::<S>(dim); dim]; dim];
    c[0][1][2] = S::one();
    c[1][0][2] = S::one().neg();
    LieAlgebra::new("h3", dim, c).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn h3_passes_exactly() {
        let alg = heisenberg3::<Rat>();
        let rep = alg.validate(0.0);
        assert!(rep.passed());
        assert_eq!(rep.checks[0].residual, Some(0.0));
    }

    #[test]
    fn h3_bracket_reads_structure_constants() {
        let alg = heisenberg3::<Rat>();
        let e1 = alg.basis_vector(0);
        let e2 = alg.basis_vector(1);
        assert_eq!(alg.bracket(&e1, &e2), alg.basis_vector(2));
        // [u, u] = 0
        let u = vec![Rat::from_int(2), Rat::from_int(-1), Rat::from_int(5)];
        assert_eq!(alg.bracket(&u, &u), vec![Rat::from_int(0); 3]);
    }

    #[test]
    fn abelian_brackets_vanish() {
        let alg = LieAlgebra::<Rat>::abelian("a2", 2);
        let u = vec![Rat::from_int(3), Rat::from_int(4)];
        let v = vec![Rat::from_int(-1), Rat::from_int(2)];
        assert_eq!(alg.bracket(&u, &v), vec![Rat::from_int(0); 2]);
        assert!(alg.validate(0.0).passed());
    }

    #[test]
    fn broken_antisymmetry_is_reported() {
        let dim = 2;
        let mut c = vec![vec![vec_zero::<Rat>(dim); dim]; dim];
        c[0][1][0] = Rat::from_int(1);
        c[1][0][0] = Rat::from_int(1); // should be -1
        let alg = LieAlgebra::new("broken", dim, c).unwrap();
        let rep = alg.validate(0.0);
        assert!(rep.failing_laws().contains(&"antisymmetry"));
    }
}
