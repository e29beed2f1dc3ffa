//! Finite-difference and closed-form checks of the chain model and spectra.

use ionchain::chain::ChainModel;
use ionchain::ground_state::{ground_state, RelaxSettings};
use ionchain::phonons::spectrum;
use ionchain::{ChainParams, DisorderParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_chain(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut x = Vec::with_capacity(n);
    let mut c = rng.gen_range(-10.0..-2.0);
    for _ in 0..n {
        x.push(c);
        c += rng.gen_range(0.8..6.0);
    }
    x
}

fn random_params(rng: &mut ChaCha8Rng, n: usize, i: usize) -> ChainParams {
    if i % 4 == 3 {
        let d = DisorderParams {
            seed: i as u64,
            ..DisorderParams::default()
        };
        ChainParams::disordered(n, d).unwrap()
    } else {
        ChainParams::periodic(n, rng.gen_range(0.005..0.2), rng.gen_range(0.0..0.5)).unwrap()
    }
}

/// Relative error of central differences of `f` against `analytic`, with a
/// floor on the denominator so that near-zero components do not dominate.
fn central_difference_error(f: impl Fn(&[f64]) -> Vec<f64>, x: &[f64], analytic: &[Vec<f64>], h: f64) -> f64 {
    let mut worst: f64 = 0.0;
    let scale = analytic.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs())).max(1e-3);
    for j in 0..x.len() {
        let mut xp = x.to_vec();
        let mut xm = x.to_vec();
        xp[j] += h;
        xm[j] -= h;
        let (fp, fm) = (f(&xp), f(&xm));
        for i in 0..fp.len() {
            let fd = (fp[i] - fm[i]) / (2.0 * h);
            worst = worst.max((fd - analytic[j][i]).abs() / scale);
        }
    }
    worst
}

#[test]
fn gradient_matches_central_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..100 {
        let n = if i == 0 { 5 } else { rng.gen_range(2..30) };
        let model = ChainModel::new(random_params(&mut rng, n, i)).unwrap();
        let x = random_chain(&mut rng, n);
        let g = model.gradient(&x).unwrap();
        let analytic: Vec<Vec<f64>> = g.iter().map(|v| vec![*v]).collect();
        let err = central_difference_error(|y| vec![model.energy(y).unwrap()], &x, &analytic, 1e-5);
        assert!(err < 1e-6, "config {i}: relative error {err:e}");
    }
}

#[test]
fn hessian_matches_gradient_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..100 {
        let n = if i == 0 { 5 } else { rng.gen_range(2..30) };
        let model = ChainModel::new(random_params(&mut rng, n, i)).unwrap();
        let x = random_chain(&mut rng, n);
        let h = model.hessian(&x).unwrap();
        let analytic: Vec<Vec<f64>> = (0..n).map(|j| h.column(j).iter().copied().collect()).collect();
        let err = central_difference_error(|y| model.gradient(y).unwrap(), &x, &analytic, 1e-5);
        assert!(err < 1e-5, "config {i}: relative error {err:e}");
    }
}

#[test]
fn two_ion_modes() {
    let w = 0.014;
    let params = ChainParams::periodic(2, w, 0.0).unwrap();
    let (c, _) = ground_state(&params, &RelaxSettings::default(), 1.618).unwrap();
    let s = spectrum(&params, &c).unwrap();
    assert!((s.frequencies[0] - w).abs() < 1e-8);
    assert!((s.frequencies[1] - 3f64.sqrt() * w).abs() < 1e-8);
}

#[test]
fn center_of_mass_mode_decouples_at_zero_lattice() {
    for n in [1, 3, 10, 50, 150, 300] {
        let w = 0.014 * (50.0 / n as f64).sqrt();
        let params = ChainParams::periodic(n, w, 0.0).unwrap();
        let (c, _) = ground_state(&params, &RelaxSettings::default(), 1.618).unwrap();
        let s = spectrum(&params, &c).unwrap();
        assert!((s.lowest_frequency() - w).abs() < 1e-8, "N = {n}");
        let overlap: f64 = s.mode(0).iter().sum::<f64>() / (n as f64).sqrt();
        assert!(overlap.abs() > 0.999, "N = {n}: overlap {overlap}");
    }
}
