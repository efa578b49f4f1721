//! Minimal dense linear algebra for 2x2 and 4x4 complex Hermitian matrices.
//!
//! The eigensolver is a cyclic Jacobi iteration with complex plane rotations.
//! It is deliberately self-contained: the entropy pipeline built on it serves
//! as an independent check of the closed-form expressions elsewhere in the
//! crate, so it must not share code with them.

use num_complex::Complex;

use crate::scalar::Real;

/// Square complex matrix with compile-time dimension.
pub type CMat<T, const N: usize> = [[Complex<T>; N]; N];

/// Trace of a square complex matrix.
pub fn trace<T: Real, const N: usize>(m: &CMat<T, N>) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for (i, row) in m.iter().enumerate() {
        acc = acc + row[i];
    }
    acc
}

/// Largest absolute deviation from Hermiticity, max_ij |m[i][j] - conj(m[j][i])|.
pub fn hermiticity_defect<T: Real, const N: usize>(m: &CMat<T, N>) -> T {
    let mut worst = T::zero();
    for i in 0..N {
        for j in 0..N {
            let dev = (m[i][j] - m[j][i].conj()).norm();
            worst = worst.max(dev);
        }
    }
    worst
}

fn off_diagonal_norm<T: Real, const N: usize>(m: &CMat<T, N>) -> T {
    let mut acc = T::zero();
    for i in 0..N {
        for j in 0..N {
            if i != j {
                acc = acc + m[i][j].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn frobenius_norm<T: Real, const N: usize>(m: &CMat<T, N>) -> T {
    let mut acc = T::zero();
    for row in m {
        for entry in row {
            acc = acc + entry.norm_sqr();
        }
    }
    acc.sqrt()
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The strictly lower triangle is ignored; entries are taken from the upper
/// triangle and the real diagonal, so tiny Hermiticity defects do not bias
/// the result. Convergence for N <= 4 takes a handful of sweeps.
pub fn hermitian_eigenvalues<T: Real, const N: usize>(m: &CMat<T, N>) -> [T; N] {
    let mut a = *m;
    // Symmetrize from the upper triangle.
    for p in 0..N {
        a[p][p] = Complex::new(a[p][p].re, T::zero());
        for q in (p + 1)..N {
            a[q][p] = a[p][q].conj();
        }
    }

    let tol = T::epsilon() * frobenius_norm(&a).max(T::one());
    for _sweep in 0..100 {
        if off_diagonal_norm(&a) <= tol {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let z = a[p][q];
                let r = z.norm();
                if r <= tol * T::epsilon() {
                    continue;
                }
                let w = z / r; // unit phase of the pivot entry
                let alpha = a[p][p].re;
                let beta = a[q][q].re;
                let tau = (beta - alpha) / (r + r);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;

                // A <- J^dag A J with J[p][p]=c, J[p][q]=s*w, J[q][p]=-s*conj(w), J[q][q]=c.
                let two = T::one() + T::one();
                let new_pp = alpha * c * c - two * r * s * c + beta * s * s;
                let new_qq = alpha * s * s + two * r * s * c + beta * c * c;
                for i in 0..N {
                    if i == p || i == q {
                        continue;
                    }
                    let x = a[i][p];
                    let y = a[i][q];
                    a[i][p] = x * c - y * w.conj() * s;
                    a[i][q] = x * w * s + y * c;
                    a[p][i] = a[i][p].conj();
                    a[q][i] = a[i][q].conj();
                }
                a[p][p] = Complex::new(new_pp, T::zero());
                a[q][q] = Complex::new(new_qq, T::zero());
                a[p][q] = Complex::new(T::zero(), T::zero());
                a[q][p] = Complex::new(T::zero(), T::zero());
            }
        }
    }

    let mut eigs = [T::zero(); N];
    for i in 0..N {
        eigs[i] = a[i][i].re;
    }
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    eigs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn diagonal_matrix_is_immediate() {
        let m: CMat<f64, 4> = [
            [c(0.4, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.1, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(0.3, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.2, 0.0)],
        ];
        assert_eq!(hermitian_eigenvalues(&m), [0.1, 0.2, 0.3, 0.4]);
    }

    #[test]
    fn matches_reference_2x2() {
        // Reference eigenvalues computed with numpy.linalg.eigvalsh.
        let m: CMat<f64, 2> = [[c(0.7, 0.0), c(0.1, -0.3)], [c(0.1, 0.3), c(0.3, 0.0)]];
        let ev = hermitian_eigenvalues(&m);
        assert!((ev[0] - 0.1258342613226058).abs() < 1e-14);
        assert!((ev[1] - 0.8741657386773942).abs() < 1e-14);
    }

    #[test]
    fn matches_reference_4x4() {
        // Reference eigenvalues computed with numpy.linalg.eigvalsh.
        let m: CMat<f64, 4> = [
            [c(0.30, 0.0), c(0.10, 0.05), c(0.00, -0.02), c(0.30, 0.0)],
            [c(0.10, -0.05), c(0.20, 0.0), c(0.20, 0.10), c(0.01, 0.0)],
            [c(0.00, 0.02), c(0.20, -0.10), c(0.20, 0.0), c(-0.03, 0.04)],
            [c(0.30, 0.0), c(0.01, 0.0), c(-0.03, -0.04), c(0.30, 0.0)],
        ];
        let expected = [
            -0.061715638905420485,
            0.013589731174563567,
            0.42992863522237934,
            0.6181972725084779,
        ];
        let ev = hermitian_eigenvalues(&m);
        for (got, want) in ev.iter().zip(expected) {
            assert!((got - want).abs() < 1e-13, "got {got}, want {want}");
        }
    }

    #[test]
    fn trace_and_defect() {
        let m: CMat<f64, 2> = [[c(0.7, 0.0), c(0.1, -0.3)], [c(0.1, 0.3), c(0.3, 0.0)]];
        assert_eq!(trace(&m), c(1.0, 0.0));
        assert_eq!(hermiticity_defect(&m), 0.0);

        let broken: CMat<f64, 2> = [[c(0.7, 0.0), c(0.1, -0.3)], [c(0.2, 0.3), c(0.3, 0.0)]];
        assert!((hermiticity_defect(&broken) - 0.1).abs() < 1e-15);
    }

    #[test]
    fn eigenvalue_sum_matches_trace() {
        let m: CMat<f64, 3> = [
            [c(1.0, 0.0), c(0.5, 0.25), c(-0.1, 0.4)],
            [c(0.5, -0.25), c(-2.0, 0.0), c(0.3, 0.0)],
            [c(-0.1, -0.4), c(0.3, 0.0), c(0.5, 0.0)],
        ];
        let ev = hermitian_eigenvalues(&m);
        let sum: f64 = ev.iter().sum();
        assert!((sum - (-0.5)).abs() < 1e-12);
    }
}
