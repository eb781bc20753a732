//! Dense complex Hermitian linear algebra on top of LAPACK (zheevd, zhetrf/zhetrs).
//!
//! Matrices cross the FFI boundary in column-major scratch buffers; the public
//! surface stays on `ndarray` in the usual row-major layout.

use crate::error::{EdgecondError, Result};
use ndarray::{Array1, Array2};
use num_complex::Complex64;

pub type C64 = Complex64;

/// Max-norm Hermiticity defect ‖A − A†‖_max.
pub fn hermiticity_defect(a: &Array2<C64>) -> f64 {
    let n = a.nrows();
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in i..n {
            let d = (a[[i, j]] - a[[j, i]].conj()).norm();
            if d > defect {
                defect = d;
            }
        }
    }
    defect
}

pub fn max_abs(a: &Array2<C64>) -> f64 {
    a.iter().fold(0.0f64, |m, z| m.max(z.norm()))
}

fn to_col_major(a: &Array2<C64>) -> Vec<C64> {
    let n = a.nrows();
    let mut buf = vec![C64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for i in 0..n {
            buf[j * n + i] = a[[i, j]];
        }
    }
    buf
}

/// Full Hermitian eigendecomposition, eigenvalues ascending.
/// Returns (eigenvalues, eigenvectors as columns).
pub fn eigh(a: &Array2<C64>) -> Result<(Array1<f64>, Array2<C64>)> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "eigh expects a square matrix");
    if n == 0 {
        return Ok((Array1::zeros(0), Array2::zeros((0, 0))));
    }
    let mut buf = to_col_major(a);
    let ni = n as i32;
    let mut w = vec![0.0f64; n];
    let mut info = 0i32;

    // workspace query
    let mut work = vec![C64::new(0.0, 0.0); 1];
    let mut rwork = vec![0.0f64; 1];
    let mut iwork = vec![0i32; 1];
    unsafe {
        lapack::zheevd(
            b'V', b'L', ni, &mut buf, ni, &mut w, &mut work, -1, &mut rwork, -1, &mut iwork, -1,
            &mut info,
        );
    }
    let lwork = work[0].re as i32;
    let lrwork = rwork[0] as i32;
    let liwork = iwork[0];
    let mut work = vec![C64::new(0.0, 0.0); lwork.max(1) as usize];
    let mut rwork = vec![0.0f64; lrwork.max(1) as usize];
    let mut iwork = vec![0i32; liwork.max(1) as usize];
    unsafe {
        lapack::zheevd(
            b'V', b'L', ni, &mut buf, ni, &mut w, &mut work, lwork, &mut rwork, lrwork, &mut iwork,
            liwork, &mut info,
        );
    }
    if info != 0 {
        return Err(EdgecondError::Lapack {
            routine: "zheevd",
            info,
        });
    }
    // buf holds eigenvectors column-major
    let mut v = Array2::zeros((n, n));
    for j in 0..n {
        for i in 0..n {
            v[[i, j]] = buf[j * n + i];
        }
    }
    Ok((Array1::from_vec(w), v))
}

/// Eigenvalues only (ascending).
pub fn eigvalsh(a: &Array2<C64>) -> Result<Array1<f64>> {
    let n = a.nrows();
    if n == 0 {
        return Ok(Array1::zeros(0));
    }
    let mut buf = to_col_major(a);
    let ni = n as i32;
    let mut w = vec![0.0f64; n];
    let mut info = 0i32;
    let mut work = vec![C64::new(0.0, 0.0); 1];
    let mut rwork = vec![0.0f64; (3 * n).max(1)];
    unsafe {
        lapack::zheev(
            b'N', b'L', ni, &mut buf, ni, &mut w, &mut work, -1, &mut rwork, &mut info,
        );
    }
    let lwork = work[0].re as i32;
    let mut work = vec![C64::new(0.0, 0.0); lwork.max(1) as usize];
    unsafe {
        lapack::zheev(
            b'N', b'L', ni, &mut buf, ni, &mut w, &mut work, lwork, &mut rwork, &mut info,
        );
    }
    if info != 0 {
        return Err(EdgecondError::Lapack {
            routine: "zheev",
            info,
        });
    }
    Ok(Array1::from_vec(w))
}

/// Bunch-Kaufman LDL^H factorization of a Hermitian matrix, reusable for
/// solves and for the inertia (eigenvalue sign counts) of A.
pub struct LdlFactor {
    n: usize,
    af: Vec<C64>,
    ipiv: Vec<i32>,
}

impl LdlFactor {
    pub fn new(a: &Array2<C64>) -> Result<Self> {
        let n = a.nrows();
        let mut af = to_col_major(a);
        let ni = n as i32;
        let mut ipiv = vec![0i32; n];
        let mut info = 0i32;
        let mut work = vec![C64::new(0.0, 0.0); 1];
        unsafe {
            lapack::zhetrf(b'L', ni, &mut af, ni, &mut ipiv, &mut work, -1, &mut info);
        }
        let lwork = work[0].re as i32;
        let mut work = vec![C64::new(0.0, 0.0); lwork.max(1) as usize];
        unsafe {
            lapack::zhetrf(b'L', ni, &mut af, ni, &mut ipiv, &mut work, lwork, &mut info);
        }
        if info < 0 {
            return Err(EdgecondError::Lapack {
                routine: "zhetrf",
                info,
            });
        }
        // info > 0 flags an exactly singular D block; inertia still readable,
        // solves would divide by zero. Callers shift to avoid exact eigenvalues.
        Ok(Self { n, af, ipiv })
    }

    /// Counts of (negative, zero, positive) eigenvalues via Sylvester's law
    /// of inertia applied to the block-diagonal D.
    pub fn inertia(&self) -> (usize, usize, usize) {
        let (mut neg, mut zero, mut pos) = (0usize, 0usize, 0usize);
        let n = self.n;
        let mut k = 0usize;
        while k < n {
            if self.ipiv[k] > 0 {
                let d = self.af[k * n + k].re;
                if d > 0.0 {
                    pos += 1;
                } else if d < 0.0 {
                    neg += 1;
                } else {
                    zero += 1;
                }
                k += 1;
            } else {
                // 2x2 block [[a, conj(b)], [b, c]] stored at (k,k), (k+1,k), (k+1,k+1)
                let a = self.af[k * n + k].re;
                let c = self.af[(k + 1) * n + (k + 1)].re;
                let b = self.af[k * n + (k + 1)];
                let det = a * c - b.norm_sqr();
                if det < 0.0 {
                    pos += 1;
                    neg += 1;
                } else {
                    let tr = a + c;
                    if det == 0.0 {
                        zero += 1;
                        if tr > 0.0 {
                            pos += 1;
                        } else if tr < 0.0 {
                            neg += 1;
                        } else {
                            zero += 1;
                        }
                    } else if tr > 0.0 {
                        pos += 2;
                    } else {
                        neg += 2;
                    }
                }
                k += 2;
            }
        }
        (neg, zero, pos)
    }

    /// Solves A X = B in place, B column-major with `nrhs` columns.
    pub fn solve_cols(&self, b: &mut [C64], nrhs: usize) -> Result<()> {
        let ni = self.n as i32;
        let mut info = 0i32;
        unsafe {
            lapack::zhetrs(
                b'L',
                ni,
                nrhs as i32,
                &self.af,
                ni,
                &self.ipiv,
                b,
                ni,
                &mut info,
            );
        }
        if info != 0 {
            return Err(EdgecondError::Lapack {
                routine: "zhetrs",
                info,
            });
        }
        Ok(())
    }
}

/// Number of eigenvalues of `a` strictly below `c` (up to the LDL pivot
/// tolerance), by inertia of A - cI.
pub fn count_below(a: &Array2<C64>, c: f64) -> Result<usize> {
    let n = a.nrows();
    let mut shifted = a.clone();
    for i in 0..n {
        shifted[[i, i]] -= C64::new(c, 0.0);
    }
    let f = LdlFactor::new(&shifted)?;
    let (neg, _zero, _pos) = f.inertia();
    Ok(neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, seed: u64) -> Array2<C64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = Array2::zeros((n, n));
        for i in 0..n {
            for j in 0..i {
                let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                a[[i, j]] = z;
                a[[j, i]] = z.conj();
            }
            a[[i, i]] = C64::new(rng.gen_range(-1.0..1.0), 0.0);
        }
        a
    }

    #[test]
    fn eigh_reconstructs() {
        let a = random_hermitian(64, 7);
        let (w, v) = eigh(&a).unwrap();
        // A v_j = w_j v_j residuals
        for j in 0..64 {
            let vj = v.column(j);
            let av = a.dot(&vj);
            let mut res = 0.0f64;
            for i in 0..64 {
                res += (av[i] - w[j] * vj[i]).norm_sqr();
            }
            assert!(res.sqrt() < 1e-10, "residual {} at {}", res.sqrt(), j);
        }
        // ascending
        for j in 1..64 {
            assert!(w[j] >= w[j - 1]);
        }
    }

    #[test]
    fn inertia_matches_eigenvalue_counts() {
        for seed in [1u64, 2, 3] {
            let a = random_hermitian(40, seed);
            let w = eigvalsh(&a).unwrap();
            for c in [-0.5, 0.0, 0.7] {
                let expected = w.iter().filter(|&&x| x < c).count();
                assert_eq!(count_below(&a, c).unwrap(), expected, "seed {seed} c {c}");
            }
        }
    }

    #[test]
    fn ldl_solves() {
        let a = random_hermitian(30, 11);
        let f = LdlFactor::new(&a).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let b: Vec<C64> = (0..30)
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let mut x = b.clone();
        f.solve_cols(&mut x, 1).unwrap();
        // residual A x - b
        let mut res = 0.0f64;
        for i in 0..30 {
            let mut ax = C64::new(0.0, 0.0);
            for j in 0..30 {
                ax += a[[i, j]] * x[j];
            }
            res += (ax - b[i]).norm_sqr();
        }
        assert!(res.sqrt() < 1e-10);
    }
}
