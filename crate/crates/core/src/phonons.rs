//! Linearized oscillation spectra about equilibrium configurations.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::chain::{ChainModel, ChainParams, IonConfiguration};
use crate::error::{domain, Error, Result};
use crate::ground_state::{ground_state, RelaxSettings, NEGATIVE_CURVATURE_TOL};
use crate::numeric::fit_line;

/// Normal modes sorted by frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct PhononSpectrum {
    /// Hessian eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// `√max(λ, 0)`, ascending.
    pub frequencies: Vec<f64>,
    /// Orthonormal eigenvectors; column `k` belongs to `frequencies[k]`.
    pub modes: DMatrix<f64>,
    /// Mode index over chain length, `k/N`.
    pub k_scaled: Vec<f64>,
    pub participation_ratios: Vec<f64>,
}

impl PhononSpectrum {
    pub fn len(&self) -> usize {
        self.frequencies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frequencies.is_empty()
    }

    pub fn lowest_frequency(&self) -> f64 {
        self.frequencies[0]
    }

    pub fn mode(&self, k: usize) -> Vec<f64> {
        self.modes.column(k).iter().copied().collect()
    }
}

/// Spectrum of a converged equilibrium.
pub fn spectrum(params: &ChainParams, config: &IonConfiguration) -> Result<PhononSpectrum> {
    if !config.converged {
        return Err(Error::NotConverged(config.grad_inf_norm));
    }
    let model = ChainModel::new(*params)?;
    spectrum_of_hessian(model.hessian(&config.positions)?)
}

/// Eigendecomposition of a dynamical matrix (unit masses).
///
/// Eigenvalues in `[−1e-10, 0)` are clipped to zero frequency; anything more
/// negative is reported as a saddle. Each eigenvector is signed so that its
/// largest-magnitude component is positive.
pub fn spectrum_of_hessian(h: DMatrix<f64>) -> Result<PhononSpectrum> {
    let n = h.nrows();
    if n == 0 || h.ncols() != n {
        return Err(domain("dynamical matrix must be square and non-empty"));
    }
    let eig = SymmetricEigen::new(h);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let lowest = eig.eigenvalues[order[0]];
    if lowest < -NEGATIVE_CURVATURE_TOL {
        return Err(Error::Saddle(lowest));
    }

    let mut modes = DMatrix::<f64>::zeros(n, n);
    let mut eigenvalues = Vec::with_capacity(n);
    for (dst, &src) in order.iter().enumerate() {
        let col = eig.eigenvectors.column(src);
        let pivot = col.iter().copied().fold(0.0f64, |m, v| if v.abs() > m.abs() { v } else { m });
        let sign = if pivot < 0.0 { -1.0 } else { 1.0 };
        for i in 0..n {
            modes[(i, dst)] = sign * col[i];
        }
        eigenvalues.push(eig.eigenvalues[src]);
    }
    let frequencies = eigenvalues.iter().map(|l| l.max(0.0).sqrt()).collect();
    let participation_ratios = (0..n)
        .map(|k| inverse_quartic_sum(modes.column(k).iter().copied()))
        .collect();
    Ok(PhononSpectrum {
        eigenvalues,
        frequencies,
        modes,
        k_scaled: (0..n).map(|k| k as f64 / n as f64).collect(),
        participation_ratios,
    })
}

fn inverse_quartic_sum(v: impl Iterator<Item = f64>) -> f64 {
    1.0 / v.map(|e| e.powi(4)).sum::<f64>()
}

/// Lowest phonon frequency of the multi-start ground state.
pub fn gap(params: &ChainParams, settings: &RelaxSettings, target_density: f64) -> Result<f64> {
    let (best, _) = ground_state(params, settings, target_density)?;
    Ok(spectrum(params, &best)?.lowest_frequency())
}

/// Linear law `ω ≈ C_v k + ω_∗` over the lower half of the spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AcousticFit {
    pub sound_velocity: f64,
    pub intercept: f64,
    pub residual: f64,
}

pub fn fit_acoustic(spec: &PhononSpectrum) -> Result<AcousticFit> {
    fit_acoustic_points(&spec.k_scaled, &spec.frequencies)
}

/// [`fit_acoustic`] on raw `(k, ω)` samples; only `k < 0.5` enters the fit.
pub fn fit_acoustic_points(k_scaled: &[f64], omega: &[f64]) -> Result<AcousticFit> {
    if k_scaled.len() < 10 {
        return Err(domain("acoustic fit needs at least 10 modes"));
    }
    let (ks, ws): (Vec<f64>, Vec<f64>) = k_scaled
        .iter()
        .zip(omega)
        .filter(|(k, _)| **k < 0.5)
        .map(|(k, w)| (*k, *w))
        .unzip();
    let fit = fit_line(&ks, &ws).ok_or_else(|| domain("too few modes below k = 0.5"))?;
    Ok(AcousticFit {
        sound_velocity: fit.slope,
        intercept: fit.intercept,
        residual: fit.rms_residual,
    })
}

/// `1/Σ e_i⁴` for a unit-norm mode.
pub fn participation_ratio(mode: &[f64]) -> Result<f64> {
    let norm = mode.iter().map(|e| e * e).sum::<f64>().sqrt();
    if mode.is_empty() || (norm - 1.0).abs() > 1e-8 {
        return Err(domain(format!("mode must have unit norm, got {norm}")));
    }
    Ok(inverse_quartic_sum(mode.iter().copied()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeLocalization {
    pub mode_index: usize,
    pub k_scaled: f64,
    pub omega: f64,
    pub participation_ratio: f64,
    /// `Σ i e_i²`.
    pub centroid: f64,
    /// `√(Σ i² e_i² − centroid²)`.
    pub spread: f64,
}

pub fn localization_report(spec: &PhononSpectrum) -> Vec<ModeLocalization> {
    (0..spec.len())
        .map(|k| {
            let col = spec.modes.column(k);
            let (c, c2) = centroid_moments(col.iter().copied());
            ModeLocalization {
                mode_index: k,
                k_scaled: spec.k_scaled[k],
                omega: spec.frequencies[k],
                participation_ratio: spec.participation_ratios[k],
                centroid: c,
                spread: (c2 - c * c).max(0.0).sqrt(),
            }
        })
        .collect()
}

fn centroid_moments(mode: impl Iterator<Item = f64>) -> (f64, f64) {
    let (mut m1, mut m2) = (0.0, 0.0);
    for (i, e) in mode.enumerate() {
        let w = e * e;
        m1 += i as f64 * w;
        m2 += (i * i) as f64 * w;
    }
    (m1, m2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground_state::relax;

    fn unit(n: usize, i: usize) -> Vec<f64> {
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        v
    }

    #[test]
    fn participation_ratio_limits() {
        assert_eq!(participation_ratio(&unit(10, 3)).unwrap(), 1.0);
        for n in [1, 7, 50] {
            let v = vec![1.0 / (n as f64).sqrt(); n];
            assert!((participation_ratio(&v).unwrap() - n as f64).abs() < 1e-10);
        }
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((participation_ratio(&[s, s, 0.0, 0.0]).unwrap() - 2.0).abs() < 1e-12);
        assert!(participation_ratio(&[1.0, 1.0]).is_err());
        assert!(participation_ratio(&[]).is_err());
    }

    #[test]
    fn centroid_and_spread() {
        let (c, c2) = centroid_moments(unit(20, 7).into_iter());
        assert_eq!(c, 7.0);
        assert_eq!(c2 - c * c, 0.0);

        let n = 50;
        let (c, c2) = centroid_moments(std::iter::repeat(1.0 / (n as f64).sqrt()).take(n));
        assert!((c - 24.5).abs() < 1e-12);
        let spread = (c2 - c * c).sqrt();
        // √((N² − 1)/12)
        assert!((spread - ((n * n - 1) as f64 / 12.0).sqrt()).abs() < 1e-10);
        assert!((spread - 14.43).abs() < 0.005);
    }

    #[test]
    fn single_ion_spectrum() {
        let p = ChainParams::periodic(1, 0.014, 0.0).unwrap();
        let model = ChainModel::new(p).unwrap();
        let c = relax(&model, &[0.5], &RelaxSettings::default()).unwrap();
        let s = spectrum(&p, &c).unwrap();
        assert!((s.frequencies[0] - 0.014).abs() < 1e-15);
    }

    #[test]
    fn two_ion_spectrum() {
        let w = 0.014;
        let p = ChainParams::periodic(2, w, 0.0).unwrap();
        let model = ChainModel::new(p).unwrap();
        let c = relax(&model, &[-5.0, 5.0], &RelaxSettings::default()).unwrap();
        let s = spectrum(&p, &c).unwrap();
        assert!((s.frequencies[0] - w).abs() < 1e-8);
        assert!((s.frequencies[1] - 3f64.sqrt() * w).abs() < 1e-8);
    }

    #[test]
    fn rejects_unconverged_and_saddles() {
        let p = ChainParams::periodic(2, 0.014, 0.0).unwrap();
        let c = IonConfiguration {
            positions: vec![-1.0, 1.0],
            energy: 0.0,
            grad_inf_norm: 0.25,
            converged: false,
            n_iterations: 0,
        };
        assert!(matches!(spectrum(&p, &c), Err(Error::NotConverged(_))));
        let h = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1e-6]);
        assert!(matches!(spectrum_of_hessian(h), Err(Error::Saddle(_))));
        let h = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1e-12]);
        let s = spectrum_of_hessian(h).unwrap();
        assert_eq!(s.frequencies[0], 0.0);
    }

    #[test]
    fn acoustic_fit_of_exact_line() {
        let k: Vec<f64> = (0..40).map(|i| i as f64 / 40.0).collect();
        let w: Vec<f64> = k.iter().map(|k| 1.3 * k + 0.01).collect();
        let f = fit_acoustic_points(&k, &w).unwrap();
        assert!((f.sound_velocity - 1.3).abs() < 1e-12);
        assert!((f.intercept - 0.01).abs() < 1e-12);
        assert!(fit_acoustic_points(&k[..9], &w[..9]).is_err());
    }

    #[test]
    fn spectrum_invariants_on_random_chain() {
        let p = ChainParams::periodic(30, 0.03, 0.15).unwrap();
        let x: Vec<f64> = (0..30).map(|i| i as f64 * 3.0 - 45.0 + 0.4 * (i as f64).sin()).collect();
        let h = ChainModel::new(p).unwrap().hessian(&x).unwrap();
        // shift to make it positive definite; spectrum does not care what the matrix is
        let mut hs = h.clone();
        for i in 0..30 {
            hs[(i, i)] += 1.0;
        }
        let s = spectrum_of_hessian(hs.clone()).unwrap();
        let hnorm = hs.norm();
        for k in 0..30 {
            let v = s.modes.column(k);
            let r = &hs * v - v * s.eigenvalues[k];
            assert!(r.norm() <= 1e-8 * hnorm);
        }
        let vtv = s.modes.transpose() * &s.modes;
        for i in 0..30 {
            for j in 0..30 {
                let target = if i == j { 1.0 } else { 0.0 };
                assert!((vtv[(i, j)] - target).abs() <= 1e-10);
            }
        }
        let tr: f64 = s.eigenvalues.iter().sum();
        assert!((tr - hs.trace()).abs() <= 1e-8 * hs.trace().abs());
        for w in s.frequencies.windows(2) {
            assert!(w[0] <= w[1]);
        }
        for pr in &s.participation_ratios {
            assert!(*pr >= 1.0 - 1e-12 && *pr <= 30.0 + 1e-9);
        }
    }
}
