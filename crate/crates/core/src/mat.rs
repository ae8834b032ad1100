//! Dense matrices over a [`Scalar`], with the numeric extras needed by
//! matrix group carriers (inverse, exponential, logarithm, Frobenius
//! norm) implemented for `f64` entries.
//!
//! Everything here is tiny (n <= 8 or so); no attempt is made at cache
//! blocking or factorization reuse.

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Mat<S> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut m = Mat::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Diagonal scaling of the identity.
    pub fn scalar(n: usize, s: &S) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { s.clone() } else { S::zero() })
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matmul");
        let mut out: Mat<S> = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.at(i, k);
                if *aik == S::zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.at(i, j).add(&aik.mul(rhs.at(k, j)));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Matrix-vector application.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for j in 0..self.cols {
                    acc = acc.add(&self.at(i, j).mul(&v[j]));
                }
                acc
            })
            .collect()
    }

    /// Largest entry magnitude of `self - rhs`.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.sub(b).abs_f64())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Scalar::abs_f64).fold(0.0, f64::max)
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }
}

impl Mat<f64> {
    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Gauss-Jordan inverse with partial pivoting. Returns `None` for
    /// (numerically) singular input.
    pub fn inverse(&self) -> Option<Mat<f64>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::<f64>::identity(n);
        for col in 0..n {
            let mut pivot = col;
            for r in col + 1..n {
                if a.at(r, col).abs() > a.at(pivot, col).abs() {
                    pivot = r;
                }
            }
            if a.at(pivot, col).abs() < 1e-300 {
                return None;
            }
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (*a.at(col, j), *a.at(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (*inv.at(col, j), *inv.at(pivot, j));
                    inv.set(col, j, y);
                    inv.set(pivot, j, x);
                }
            }
            let d = *a.at(col, col);
            for j in 0..n {
                a.set(col, j, a.at(col, j) / d);
                inv.set(col, j, inv.at(col, j) / d);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = *a.at(r, col);
                if f == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, a.at(r, j) - f * a.at(col, j));
                    inv.set(r, j, inv.at(r, j) - f * inv.at(col, j));
                }
            }
        }
        Some(inv)
    }

    /// Series exponential; exact (up to rounding) on nilpotent input and
    /// convergent for the near-identity probes used by the samplers.
    pub fn exp(&self) -> Mat<f64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut acc = Mat::<f64>::identity(n);
        let mut term = Mat::<f64>::identity(n);
        for k in 1..=40 {
            term = term.matmul(self).scale(&(1.0 / k as f64));
            acc = acc.add(&term);
            if term.max_abs() < 1e-300 {
                break;
            }
        }
        acc
    }

    /// Series logarithm of a matrix near the identity:
    /// `log(I + N) = N - N^2/2 + N^3/3 - ...`. Terminates exactly when
    /// `N` is nilpotent; requires `||N|| < 1` otherwise.
    pub fn log(&self) -> Mat<f64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let nmat = self.sub(&Mat::identity(n));
        let mut acc = Mat::<f64>::zero(n, n);
        let mut power = Mat::<f64>::identity(n);
        let mut sign = 1.0;
        for k in 1..=60 {
            power = power.matmul(&nmat);
            if power.max_abs() < 1e-300 {
                break;
            }
            acc = acc.add(&power.scale(&(sign / k as f64)));
            sign = -sign;
        }
        acc
    }
}
