//! Matrix group carriers drawn from a closed registry of named
//! families, each paired with its Lie algebra data so tangent-level
//! probes can move between group elements and coordinates.
//!
//! Equality is the tolerance relation
//! `||a - b||_F <= eps * max(1, ||a||_F, ||b||_F)`; it is reflexive and
//! symmetric but not transitive, and is never used in exact-arithmetic
//! assertions.

use crate::lie::LieAlgebra;
use crate::mat::Mat;
use crate::report::CheckError;
use crate::rng::SplitMix;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// The family registry. Arbitrary user matrices are not accepted:
/// closed-form maps (inverse, factorization) are only safe to pair
/// with carriers whose shape is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Invertible `n x n` matrices, sampled near the identity.
    GeneralLinear(usize),
    /// Upper unitriangular `n x n` matrices. `Unipotent(3)` is the
    /// Heisenberg group.
    Unipotent(usize),
    /// The vector group `(R^k, +)` encoded as `(k+1) x (k+1)`
    /// block-unipotent matrices `[I, v; 0, 1]`.
    AbelianBlock(usize),
}

impl Family {
    pub fn parse(name: &str, dim: usize) -> Result<Family, CheckError> {
        match name {
            "general-linear" => Ok(Family::GeneralLinear(dim)),
            "unipotent" => Ok(Family::Unipotent(dim)),
            "heisenberg" => Ok(Family::Unipotent(3)),
            "abelian-block" => Ok(Family::AbelianBlock(dim)),
            other => Err(CheckError::Structural(format!(
                "unknown matrix family `{other}`"
            ))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Family::GeneralLinear(n) => format!("general-linear({n})"),
            Family::Unipotent(3) => "heisenberg".to_string(),
            Family::Unipotent(n) => format!("unipotent({n})"),
            Family::AbelianBlock(k) => format!("abelian-block({k})"),
        }
    }

    /// Side length of the matrices.
    pub fn matrix_size(&self) -> usize {
        match *self {
            Family::GeneralLinear(n) | Family::Unipotent(n) => n,
            Family::AbelianBlock(k) => k + 1,
        }
    }

    /// Dimension of the Lie algebra.
    pub fn algebra_dim(&self) -> usize {
        match *self {
            Family::GeneralLinear(n) => n * n,
            Family::Unipotent(n) => n * (n - 1) / 2,
            Family::AbelianBlock(k) => k,
        }
    }

    /// Ordered basis of the Lie algebra as matrices. For unipotent
    /// families the order is by super-diagonal distance then row, which
    /// for `Unipotent(3)` gives `E12, E23, E13` and the convention
    /// `[e1, e2] = e3`.
    pub fn algebra_basis(&self) -> Vec<Mat<f64>> {
        let n = self.matrix_size();
        let unit = |i: usize, j: usize| {
            let mut m = Mat::<f64>::zero(n, n);
            m.set(i, j, 1.0);
            m
        };
        match *self {
            Family::GeneralLinear(_) => {
                let mut out = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        out.push(unit(i, j));
                    }
                }
                out
            }
            Family::Unipotent(sz) => {
                let mut out = Vec::new();
                for d in 1..sz {
                    for i in 0..sz - d {
                        out.push(unit(i, i + d));
                    }
                }
                out
            }
            Family::AbelianBlock(k) => (0..k).map(|i| unit(i, k)).collect(),
        }
    }

    /// Structure constants in the basis above, read off from matrix
    /// commutators of basis elements. Entries are exact small integers.
    pub fn algebra(&self) -> LieAlgebra<f64> {
        let basis = self.algebra_basis();
        let dim = basis.len();
        let mut c = vec![vec![vec![0.0f64; dim]; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let comm = basis[i].matmul(&basis[j]).sub(&basis[j].matmul(&basis[i]));
                let coords = self.coords_in_basis(&comm);
                for (k, v) in coords.iter().enumerate() {
                    c[i][j][k] = *v;
                }
            }
        }
        LieAlgebra::new(format!("lie({})", self.name()), dim, c)
            .expect("family structure constants are well-formed")
    }

    /// Coordinates of an algebra matrix in the family basis. All bases
    /// here are elementary matrices, so this is entry extraction.
    pub fn coords_in_basis(&self, m: &Mat<f64>) -> Vec<f64> {
        self.algebra_basis()
            .iter()
            .map(|b| {
                // inner product against a unit matrix picks the entry
                let mut v = 0.0;
                for i in 0..m.rows {
                    for j in 0..m.cols {
                        v += m.at(i, j) * b.at(i, j);
                    }
                }
                v
            })
            .collect()
    }

    pub fn algebra_matrix(&self, coords: &[f64]) -> Mat<f64> {
        let basis = self.algebra_basis();
        assert_eq!(coords.len(), basis.len(), "coordinate length mismatch");
        let n = self.matrix_size();
        let mut acc = Mat::<f64>::zero(n, n);
        for (x, b) in coords.iter().zip(&basis) {
            acc = acc.add(&b.scale(x));
        }
        acc
    }

    /// Whether `m` lies in the family, up to `tol` on the constrained
    /// entries.
    pub fn contains(&self, m: &Mat<f64>, tol: f64) -> bool {
        let n = self.matrix_size();
        if m.rows != n || m.cols != n {
            return false;
        }
        match *self {
            Family::GeneralLinear(_) => m.inverse().is_some(),
            Family::Unipotent(_) => {
                for i in 0..n {
                    for j in 0..=i {
                        let want = if i == j { 1.0 } else { 0.0 };
                        if (m.at(i, j) - want).abs() > tol.max(1e-12) * m.frobenius().max(1.0) {
                            return false;
                        }
                    }
                }
                true
            }
            Family::AbelianBlock(k) => {
                for i in 0..n {
                    for j in 0..n {
                        if j == k && i < k {
                            continue;
                        }
                        let want = if i == j { 1.0 } else { 0.0 };
                        if (m.at(i, j) - want).abs() > tol.max(1e-12) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

/// A tolerance-equality group carrier: a named family plus the seed of
/// its deterministic sampler.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    pub family: Family,
    pub seed: u64,
    pub tolerance: f64,
}

impl MatrixGroup {
    pub fn new(family: Family, seed: u64, tolerance: f64) -> Self {
        MatrixGroup {
            family,
            seed,
            tolerance,
        }
    }

    pub fn heisenberg(seed: u64) -> Self {
        MatrixGroup::new(Family::Unipotent(3), seed, DEFAULT_TOLERANCE)
    }

    pub fn abelian(k: usize, seed: u64) -> Self {
        MatrixGroup::new(Family::AbelianBlock(k), seed, DEFAULT_TOLERANCE)
    }

    pub fn identity(&self) -> Mat<f64> {
        Mat::identity(self.family.matrix_size())
    }

    /// Group membership test is structural per family; inverses exist
    /// by construction (unipotent/abelian) or by sampling near the
    /// identity (general linear).
    pub fn sample(&self, rng: &mut SplitMix) -> Mat<f64> {
        let n = self.family.matrix_size();
        match self.family {
            Family::GeneralLinear(_) => {
                // identity plus a perturbation of Frobenius norm < 1/2,
                // so every sample is invertible whatever the dimension
                let scale = 0.5 / n as f64;
                let mut m = Mat::<f64>::identity(n);
                for i in 0..n {
                    for j in 0..n {
                        m.set(i, j, m.at(i, j) + scale * rng.next_unit());
                    }
                }
                m
            }
            Family::Unipotent(_) => {
                let mut m = Mat::<f64>::identity(n);
                for i in 0..n {
                    for j in i + 1..n {
                        m.set(i, j, rng.next_unit());
                    }
                }
                m
            }
            Family::AbelianBlock(k) => {
                let mut m = Mat::<f64>::identity(n);
                for i in 0..k {
                    m.set(i, k, rng.next_unit());
                }
                m
            }
        }
    }

    pub fn mul(&self, a: &Mat<f64>, b: &Mat<f64>) -> Mat<f64> {
        a.matmul(b)
    }

    pub fn inv(&self, a: &Mat<f64>) -> Mat<f64> {
        match self.family {
            Family::AbelianBlock(k) => {
                // negate the vector part
                let n = k + 1;
                let mut m = Mat::<f64>::identity(n);
                for i in 0..k {
                    m.set(i, k, -a.at(i, k));
                }
                m
            }
            _ => a.inverse().expect("family elements are invertible"),
        }
    }

    /// Tolerance equality, symmetric by construction.
    pub fn eq(&self, a: &Mat<f64>, b: &Mat<f64>) -> bool {
        let scale = 1.0f64.max(a.frobenius()).max(b.frobenius());
        a.sub(b).frobenius() <= self.tolerance * scale
    }

    pub fn exp_coords(&self, coords: &[f64]) -> Mat<f64> {
        self.family.algebra_matrix(coords).exp()
    }

    pub fn log_coords(&self, m: &Mat<f64>) -> Vec<f64> {
        self.family.coords_in_basis(&m.log())
    }

    pub fn describe(&self, m: &Mat<f64>) -> String {
        let n = m.rows;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| format!("{:.6}", m.at(i, j))).collect();
            rows.push(format!("[{}]", row.join(", ")));
        }
        format!("[{}]", rows.join(", "))
    }
}
