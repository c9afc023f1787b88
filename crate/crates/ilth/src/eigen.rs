//! Dense symmetric eigensolver: cyclic Jacobi rotations with a fixed sweep
//! order, kept in-repo so spectra need no external numerical dependency.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on matrix order for the dense solver.
pub const DEFAULT_SPECTRUM_CAP: usize = 4096;
/// Sweeps before giving up.
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix, descending, with the tolerance used.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tolerance: f64,
}

/// Eigenvalues of the adjacency matrix of `g` to within `tol`, via cyclic
/// Jacobi. Fails above [`DEFAULT_SPECTRUM_CAP`] vertices or when the sweep
/// cap is hit before the off-diagonal mass drops below `tol`.
pub fn spectrum(g: &Graph, tol: f64) -> Result<Spectrum> {
    spectrum_with_cap(g, tol, DEFAULT_SPECTRUM_CAP)
}

pub fn spectrum_with_cap(g: &Graph, tol: f64, cap: usize) -> Result<Spectrum> {
    let n = g.n();
    if n > cap {
        return Err(Error::SpectrumCapExceeded { n, cap });
    }
    let mut a = vec![0.0f64; n * n];
    for u in 0..n {
        for &v in g.neighbors(u as u32) {
            a[u * n + v as usize] = 1.0;
        }
    }
    let mut eigenvalues = jacobi_eigenvalues(&mut a, n, tol)?;
    eigenvalues.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(Spectrum {
        eigenvalues,
        tolerance: tol,
    })
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    sum.sqrt()
}

/// Diagonalizes the symmetric matrix `a` (row-major, order n) in place and
/// returns its eigenvalues. Convergence criterion: Frobenius norm of the
/// off-diagonal part below `tol`.
pub fn jacobi_eigenvalues(a: &mut [f64], n: usize, tol: f64) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut off = off_diagonal_norm(a, n);
    let mut sweeps = 0;
    while off >= tol {
        if sweeps >= MAX_SWEEPS {
            return Err(Error::EigenNoConvergence { sweeps, off });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // smaller-root tangent keeps rotations stable
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for i in 0..n {
                    let api = a[p * n + i];
                    let aqi = a[q * n + i];
                    a[p * n + i] = c * api - s * aqi;
                    a[q * n + i] = s * api + c * aqi;
                }
            }
        }
        off = off_diagonal_norm(a, n);
        sweeps += 1;
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}

/// Multiset comparison of spectra within `tol`, both sorted descending.
pub fn spectra_match(xs: &[f64], ys: &[f64], tol: f64) -> bool {
    xs.len() == ys.len()
        && xs
            .iter()
            .zip(ys.iter())
            .all(|(x, y)| (x - y).abs() <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PHI: f64 = 1.618_033_988_749_895;
    const PSI: f64 = -0.618_033_988_749_895;

    #[test]
    fn triangle_spectrum() {
        let s = spectrum(&Graph::complete(3), 1e-10).unwrap();
        assert!(spectra_match(&s.eigenvalues, &[2.0, -1.0, -1.0], 1e-9));
    }

    #[test]
    fn empty_graph_spectrum_is_zero() {
        let s = spectrum(&Graph::empty(4), 1e-10).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0; 4]);
    }

    #[test]
    fn trace_is_preserved() {
        let g = Graph::cycle(7);
        let s = spectrum(&g, 1e-12).unwrap();
        let trace: f64 = s.eigenvalues.iter().sum();
        assert!(trace.abs() < 1e-9);
    }

    #[test]
    fn clone_step_doubles_spectrum_by_golden_ratios() {
        let g = Graph::complete(3);
        let base = spectrum(&g, 1e-12).unwrap().eigenvalues;
        let stepped = spectrum(&g.clone_step(), 1e-12).unwrap().eigenvalues;
        let mut expected: Vec<f64> = base
            .iter()
            .flat_map(|&rho| [PHI * rho, PSI * rho])
            .collect();
        expected.sort_by(|x, y| y.partial_cmp(x).unwrap());
        assert!(spectra_match(&stepped, &expected, 1e-8));
    }

    #[test]
    fn cap_is_enforced() {
        let err = spectrum_with_cap(&Graph::empty(10), 1e-10, 4).unwrap_err();
        assert!(matches!(err, Error::SpectrumCapExceeded { .. }));
    }
}
