//! Equilibrium configurations: relaxation, seeded multi-start enumeration of
//! local minima, trap calibration and density estimators.

use std::f64::consts::PI;

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::{central_third, check_ordering, ChainModel, ChainParams, IonConfiguration, PotentialVariant};
use crate::error::{domain, Error, Result};
use crate::numeric::{fit_line, inf_norm};

/// Hessian eigenvalues above `-NEGATIVE_CURVATURE_TOL` count as non-negative.
pub const NEGATIVE_CURVATURE_TOL: f64 = 1e-10;
/// Two minima are the same if no ion differs by more than this.
pub const DISTINCT_TOL: f64 = 1e-4;
/// Smallest spacing allowed in a perturbed start.
pub const MIN_START_SPACING: f64 = 0.1;

const MAX_STEP: f64 = 1.0;
const ARMIJO: f64 = 1e-4;
const MAX_SADDLE_ESCAPES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelaxSettings {
    /// Convergence threshold on the infinity norm of the gradient.
    pub grad_tolerance: f64,
    pub max_iterations: usize,
    pub n_starts: usize,
    pub perturbation_scale: f64,
    pub seed: u64,
}

impl Default for RelaxSettings {
    fn default() -> Self {
        Self {
            grad_tolerance: 1e-10,
            max_iterations: 200_000,
            n_starts: 1,
            perturbation_scale: 0.3,
            seed: 0,
        }
    }
}

impl RelaxSettings {
    pub fn validate(&self) -> Result<()> {
        if !(self.grad_tolerance > 0.0) {
            return Err(domain("grad_tolerance must be positive"));
        }
        if self.n_starts == 0 {
            return Err(domain("n_starts must be at least 1"));
        }
        if !(self.perturbation_scale >= 0.0) {
            return Err(domain("perturbation_scale must be non-negative"));
        }
        Ok(())
    }

    pub fn with_starts(&self, n_starts: usize) -> Self {
        Self { n_starts, ..*self }
    }
}

/// Distinct converged minima sorted by energy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimaCatalog {
    pub configurations: Vec<IonConfiguration>,
    pub n_distinct: usize,
    /// `E_k − E_0` for every catalog entry.
    pub energy_gaps: Vec<f64>,
}

impl MinimaCatalog {
    /// Builds a catalog from converged configurations. Order is by energy,
    /// then lexicographically by position, so the result does not depend on
    /// the order of `found`.
    pub fn from_configurations(mut found: Vec<IonConfiguration>) -> Self {
        found.retain(|c| c.converged);
        found.sort_by(|a, b| {
            a.energy.total_cmp(&b.energy).then_with(|| {
                a.positions
                    .iter()
                    .zip(&b.positions)
                    .map(|(x, y)| x.total_cmp(y))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
        });
        let mut distinct: Vec<IonConfiguration> = Vec::new();
        for c in found {
            if distinct.iter().all(|d| are_distinct(&d.positions, &c.positions)) {
                distinct.push(c);
            }
        }
        let e0 = distinct.first().map(|c| c.energy).unwrap_or(0.0);
        let energy_gaps = distinct.iter().map(|c| c.energy - e0).collect();
        Self {
            n_distinct: distinct.len(),
            configurations: distinct,
            energy_gaps,
        }
    }
}

pub fn are_distinct(a: &[f64], b: &[f64]) -> bool {
    a.len() != b.len() || a.iter().zip(b).any(|(x, y)| (x - y).abs() > DISTINCT_TOL)
}

/// Uniform chain with spacing `2π/ν`, centered on 0.
pub fn initial_guess(params: &ChainParams, target_density: f64) -> Result<Vec<f64>> {
    if !(target_density > 0.0) || !target_density.is_finite() {
        return Err(domain("target density must be positive"));
    }
    let a = 2.0 * PI / target_density;
    let mid = (params.n_ions as f64 - 1.0) / 2.0;
    Ok((0..params.n_ions).map(|i| (i as f64 - mid) * a).collect())
}

/// Lowest Hessian eigenvalue and its eigenvector.
pub(crate) fn lowest_mode(h: &DMatrix<f64>) -> (f64, DVector<f64>) {
    let eig = SymmetricEigen::new(h.clone());
    let (k, lam) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(k, l)| (k, *l))
        .expect("non-empty Hessian");
    (lam, eig.eigenvectors.column(k).into_owned())
}

fn is_ordered(x: &[f64]) -> bool {
    x.windows(2).all(|w| w[1] > w[0]) && x.iter().all(|v| v.is_finite())
}

/// Newton direction on `H + μI`, with `μ` raised until the shifted matrix is
/// positive definite.
fn newton_direction(h: &DMatrix<f64>, g: &[f64]) -> Vec<f64> {
    let n = g.len();
    let scale = (0..n).fold(1e-300f64, |m, i| m.max(h[(i, i)].abs()));
    let rhs = DVector::from_iterator(n, g.iter().map(|v| -v));
    let mut shift = 0.0;
    for _ in 0..80 {
        let mut m = h.clone();
        if shift > 0.0 {
            for i in 0..n {
                m[(i, i)] += shift;
            }
        }
        if let Some(chol) = Cholesky::new(m) {
            let d = chol.solve(&rhs);
            if d.iter().all(|v| v.is_finite()) {
                return d.iter().copied().collect();
            }
        }
        shift = if shift == 0.0 { 1e-10 * scale } else { shift * 10.0 };
    }
    // steepest descent as last resort
    rhs.iter().copied().collect()
}

/// Relaxes `start` to a local energy minimum.
pub fn relax(model: &ChainModel, start: &[f64], settings: &RelaxSettings) -> Result<IonConfiguration> {
    relax_traced(model, start, settings).map(|(c, _)| c)
}

/// Like [`relax`], also returning the energy after every accepted step.
///
/// Steps are damped Newton steps on a positive-definite shift of the
/// Hessian with an Armijo backtracking search. Trial points that would
/// reorder ions are rejected. Once the energy change falls below rounding
/// noise, a step is accepted if it reduces the gradient instead. A stationary
/// point with a negative curvature direction is left along that direction.
pub fn relax_traced(
    model: &ChainModel,
    start: &[f64],
    settings: &RelaxSettings,
) -> Result<(IonConfiguration, Vec<f64>)> {
    settings.validate()?;
    if start.len() != model.n_ions() {
        return Err(domain(format!(
            "start has {} positions, chain has {} ions",
            start.len(),
            model.n_ions()
        )));
    }
    check_ordering(start)?;

    let mut x = start.to_vec();
    let mut e = model.energy_unchecked(&x);
    let mut g = model.gradient_unchecked(&x);
    let mut gn = inf_norm(&g);
    let mut trace = vec![e];
    let mut iterations = 0;
    let mut escapes = 0;
    let mut converged = false;

    loop {
        if gn <= settings.grad_tolerance {
            let h = model.hessian_unchecked(&x);
            let mut shifted = h.clone();
            for i in 0..x.len() {
                shifted[(i, i)] += NEGATIVE_CURVATURE_TOL;
            }
            if Cholesky::new(shifted).is_some() {
                converged = true;
                break;
            }
            let (lam, v) = lowest_mode(&h);
            if lam >= -NEGATIVE_CURVATURE_TOL {
                converged = true;
                break;
            }
            if escapes >= MAX_SADDLE_ESCAPES || iterations >= settings.max_iterations {
                break;
            }
            escapes += 1;
            let mut moved = false;
            for amp in [0.1, -0.1, 0.03, -0.03, 0.01, -0.01] {
                let trial: Vec<f64> = x.iter().zip(v.iter()).map(|(a, b)| a + amp * b).collect();
                if !is_ordered(&trial) {
                    continue;
                }
                let et = model.energy_unchecked(&trial);
                if et < e {
                    x = trial;
                    e = et;
                    g = model.gradient_unchecked(&x);
                    gn = inf_norm(&g);
                    trace.push(e);
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
            continue;
        }
        if iterations >= settings.max_iterations {
            break;
        }
        iterations += 1;

        let h = model.hessian_unchecked(&x);
        let mut d = newton_direction(&h, &g);
        let dmax = inf_norm(&d);
        if dmax > MAX_STEP {
            d.iter_mut().for_each(|v| *v *= MAX_STEP / dmax);
        }
        let slope: f64 = g.iter().zip(&d).map(|(a, b)| a * b).sum();
        let noise = 64.0 * f64::EPSILON * e.abs().max(1.0);

        let mut step = 1.0;
        let mut accepted = false;
        while step > 1e-16 {
            let trial: Vec<f64> = x.iter().zip(&d).map(|(a, b)| a + step * b).collect();
            if is_ordered(&trial) {
                let et = model.energy_unchecked(&trial);
                if et <= e + ARMIJO * step * slope {
                    x = trial;
                    e = et;
                    g = model.gradient_unchecked(&x);
                    gn = inf_norm(&g);
                    accepted = true;
                    break;
                }
                if et - e <= noise {
                    let gt = model.gradient_unchecked(&trial);
                    let gtn = inf_norm(&gt);
                    if gtn < gn {
                        x = trial;
                        e = e.min(et);
                        g = gt;
                        gn = gtn;
                        accepted = true;
                        break;
                    }
                }
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
        trace.push(e);
    }

    if converged {
        // a few undamped Newton steps take the soft modes well below the
        // tolerance at negligible cost
        for _ in 0..3 {
            let h = model.hessian_unchecked(&x);
            let d = newton_direction(&h, &g);
            let trial: Vec<f64> = x.iter().zip(&d).map(|(a, b)| a + b).collect();
            if !is_ordered(&trial) {
                break;
            }
            let gt = model.gradient_unchecked(&trial);
            let gtn = inf_norm(&gt);
            let et = model.energy_unchecked(&trial);
            if gtn >= gn || et - e > 64.0 * f64::EPSILON * e.abs().max(1.0) {
                break;
            }
            x = trial;
            g = gt;
            gn = gtn;
            e = e.min(et);
        }
    }

    let config = IonConfiguration {
        energy: model.energy_unchecked(&x),
        positions: x,
        grad_inf_norm: gn,
        converged,
        n_iterations: iterations,
    };
    Ok((config, trace))
}

/// Equilibrium of the same chain without the lattice, relaxed from the
/// uniform guess. For microtrap arrays this is the chain at its trap centers.
pub fn trap_equilibrium(params: &ChainParams, target_density: f64, settings: &RelaxSettings) -> Result<IonConfiguration> {
    match params.variant {
        PotentialVariant::PeriodicUniform => {
            let free = ChainModel::new(params.with_lattice_amplitude(0.0))?;
            let start = initial_guess(params, target_density)?;
            relax(&free, &start, settings)
        }
        PotentialVariant::DisorderedMicrotraps(_) => {
            let model = ChainModel::new(*params)?;
            let x = model.trap_centers().to_vec();
            Ok(IonConfiguration {
                energy: model.energy_unchecked(&x),
                grad_inf_norm: inf_norm(&model.gradient_unchecked(&x)),
                positions: x,
                converged: false,
                n_iterations: 0,
            })
        }
    }
}

/// Base start plus i.i.d. uniform perturbations in `[−scale, scale]`, drawn
/// from ChaCha8 stream `index` of `seed`; spacings are clamped to
/// `MIN_START_SPACING`.
pub fn perturbed_start(base: &[f64], scale: f64, seed: u64, index: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let mut x: Vec<f64> = base
        .iter()
        .map(|v| if scale > 0.0 { v + rng.gen_range(-scale..=scale) } else { *v })
        .collect();
    for i in 1..x.len() {
        if x[i] < x[i - 1] + MIN_START_SPACING {
            x[i] = x[i - 1] + MIN_START_SPACING;
        }
    }
    x
}

/// Seeded multi-start search for the lowest-energy configuration.
///
/// Start 0 is the lattice-free trap equilibrium; starts `1..n_starts` add
/// perturbations to it. All converged results go into the catalog.
pub fn ground_state(
    params: &ChainParams,
    settings: &RelaxSettings,
    target_density: f64,
) -> Result<(IonConfiguration, MinimaCatalog)> {
    settings.validate()?;
    let base = trap_equilibrium(params, target_density, settings)?.positions;
    ground_state_from(params, settings, &base)
}

/// [`ground_state`] around an explicit base configuration.
pub fn ground_state_from(
    params: &ChainParams,
    settings: &RelaxSettings,
    base: &[f64],
) -> Result<(IonConfiguration, MinimaCatalog)> {
    settings.validate()?;
    let model = ChainModel::new(*params)?;
    check_ordering(base)?;
    let results: Vec<Result<IonConfiguration>> = (0..settings.n_starts)
        .into_par_iter()
        .map(|i| {
            let start = if i == 0 {
                base.to_vec()
            } else {
                perturbed_start(base, settings.perturbation_scale, settings.seed, i as u64)
            };
            relax(&model, &start, settings)
        })
        .collect();
    let mut found = Vec::with_capacity(results.len());
    for r in results {
        found.push(r?);
    }
    let catalog = MinimaCatalog::from_configurations(found);
    let best = catalog
        .configurations
        .first()
        .cloned()
        .ok_or(Error::NoConvergedStart(settings.n_starts))?;
    Ok((best, catalog))
}

/// Density (ions per lattice period) of the ions with index in `[N/3, 2N/3)`.
pub fn central_density(positions: &[f64]) -> Result<f64> {
    if positions.len() < 3 {
        return Err(domain("central density needs at least 3 ions"));
    }
    let sub = central_third(positions);
    if sub.len() < 2 {
        return Err(domain(format!(
            "central third of {} ions holds fewer than 2 ions",
            positions.len()
        )));
    }
    let span = sub[sub.len() - 1] - sub[0];
    if !(span > 0.0) {
        return Err(domain("central third has zero extent"));
    }
    Ok(2.0 * PI * (sub.len() - 1) as f64 / span)
}

/// Density from the least-squares slope of `x_i` against `i`: `2π / slope`.
pub fn rotation_number(positions: &[f64]) -> Result<f64> {
    if positions.len() < 2 {
        return Err(domain("rotation number needs at least 2 ions"));
    }
    let idx: Vec<f64> = (0..positions.len()).map(|i| i as f64).collect();
    let fit = fit_line(&idx, positions).ok_or_else(|| domain("degenerate fit"))?;
    if !(fit.slope > 0.0) || !fit.slope.is_finite() {
        return Err(domain("non-increasing positions give no rotation number"));
    }
    Ok(2.0 * PI / fit.slope)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrapCalibration {
    pub omega_tr: f64,
    pub central_density: f64,
    pub n_probes: usize,
}

/// Lattice-free equilibrium rescaled to another trap frequency.
///
/// Harmonic trap plus Coulomb repulsion is scale-covariant: the equilibrium
/// at `ω` is `ω^{-2/3}` times the equilibrium at unit frequency.
pub fn rescale_trap_equilibrium(positions: &[f64], from_omega: f64, to_omega: f64) -> Vec<f64> {
    let s = (from_omega / to_omega).powf(2.0 / 3.0);
    positions.iter().map(|x| x * s).collect()
}

/// Finds the trap frequency that puts density `target_density` in the
/// central third of an `n`-ion chain at lattice amplitude `k`.
///
/// At `k = 0` the answer follows from the `ω^{2/3}` scaling of the density.
/// For `k > 0` each probe relaxes the rescaled lattice-free equilibrium at
/// amplitude `k` and the frequency is bisected in log scale inside
/// `[1e-6, 1]` until the density is within `tolerance · target_density`.
pub fn calibrate_trap(
    n: usize,
    target_density: f64,
    k: f64,
    tolerance: f64,
    settings: &RelaxSettings,
) -> Result<TrapCalibration> {
    const LO: f64 = 1e-6;
    const HI: f64 = 1.0;
    if !(target_density > 0.0) {
        return Err(domain("target density must be positive"));
    }
    if !(tolerance > 0.0) {
        return Err(domain("density tolerance must be positive"));
    }
    if n < 5 {
        return Err(domain("calibration needs at least 5 ions"));
    }
    let guess = 0.014 * (50.0 / n as f64).sqrt() * (target_density / 1.618).powf(1.5);
    let params = ChainParams::periodic(n, guess, 0.0)?;
    let reference = trap_equilibrium(&params, target_density, settings)?;
    if !reference.converged {
        return Err(Error::Calibration("lattice-free reference did not converge".into()));
    }
    let reference_density = central_density(&reference.positions)?;
    let omega0 = guess * (target_density / reference_density).powf(1.5);
    let mut probes = 1;

    let density_at = |omega: f64| -> Result<f64> {
        let free = rescale_trap_equilibrium(&reference.positions, guess, omega);
        if k == 0.0 {
            return central_density(&free);
        }
        let model = ChainModel::new(ChainParams::periodic(n, omega, k)?)?;
        let c = relax(&model, &free, settings)?;
        central_density(&c.positions)
    };

    if !(LO..=HI).contains(&omega0) {
        return Err(Error::Calibration(format!(
            "lattice-free estimate {omega0:e} outside [{LO:e}, {HI:e}]"
        )));
    }
    let within = |d: f64| (d - target_density).abs() <= tolerance * target_density;
    let d0 = density_at(omega0)?;
    probes += 1;
    if within(d0) {
        return Ok(TrapCalibration {
            omega_tr: omega0,
            central_density: d0,
            n_probes: probes,
        });
    }

    // density grows with omega; expand until the target is bracketed
    let (mut lo, mut hi) = (omega0, omega0);
    let (mut dlo, mut dhi) = (d0, d0);
    let mut factor = 1.05;
    while !(dlo <= target_density && dhi >= target_density) {
        if dlo > target_density {
            if lo <= LO {
                return Err(Error::Calibration("target density below bracket".into()));
            }
            hi = lo;
            dhi = dlo;
            lo = (lo / factor).max(LO);
            dlo = density_at(lo)?;
        } else {
            if hi >= HI {
                return Err(Error::Calibration("target density above bracket".into()));
            }
            lo = hi;
            dlo = dhi;
            hi = (hi * factor).min(HI);
            dhi = density_at(hi)?;
        }
        probes += 1;
        factor *= factor;
    }
    for _ in 0..100 {
        let mid = (lo * hi).sqrt();
        let d = density_at(mid)?;
        probes += 1;
        if within(d) {
            return Ok(TrapCalibration {
                omega_tr: mid,
                central_density: d,
                n_probes: probes,
            });
        }
        if d > target_density {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Err(Error::Calibration("bisection did not reach the tolerance".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, w: f64, k: f64) -> ChainParams {
        ChainParams::periodic(n, w, k).unwrap()
    }

    #[test]
    fn uniform_guesses() {
        let g = initial_guess(&params(3, 0.1, 0.0), 1.0).unwrap();
        assert_eq!(g, vec![-2.0 * PI, 0.0, 2.0 * PI]);
        let g = initial_guess(&params(2, 0.1, 0.0), 2.0).unwrap();
        assert_eq!(g, vec![-PI / 2.0, PI / 2.0]);
        let g = initial_guess(&params(50, 0.1, 0.0), 1.618).unwrap();
        for w in g.windows(2) {
            assert!((w[1] - w[0] - 2.0 * PI / 1.618).abs() < 1e-12);
        }
        assert!((g[0] + g[49]).abs() < 1e-12);
        assert!(initial_guess(&params(3, 0.1, 0.0), 0.0).is_err());
    }

    #[test]
    fn two_ions_relax_to_analytic_spacing() {
        let w = 0.014;
        let d = (2.0f64 / (w * w)).cbrt();
        let model = ChainModel::new(params(2, w, 0.0)).unwrap();
        let c = relax(&model, &[-10.0, 10.0], &RelaxSettings::default()).unwrap();
        assert!(c.converged);
        assert!((c.positions[0] + d / 2.0).abs() < 1e-8);
        assert!((c.positions[1] - d / 2.0).abs() < 1e-8);
    }

    #[test]
    fn single_ion_falls_into_central_well() {
        let model = ChainModel::new(params(1, 0.1, 0.2)).unwrap();
        let c = relax(&model, &[2.0], &RelaxSettings::default()).unwrap();
        assert!(c.converged);
        assert!(c.positions[0].abs() < 1e-10);
    }

    #[test]
    fn budget_exhaustion_reports_unconverged() {
        let model = ChainModel::new(params(10, 0.05, 0.1)).unwrap();
        let start = initial_guess(model.params(), 1.0).unwrap();
        let s = RelaxSettings {
            max_iterations: 1,
            ..Default::default()
        };
        let c = relax(&model, &start, &s).unwrap();
        assert!(!c.converged);
        assert_eq!(c.n_iterations, 1);
    }

    #[test]
    fn start_on_lattice_maximum_relaxes_to_minimum() {
        let model = ChainModel::new(params(1, 0.01, 0.2)).unwrap();
        let x0 = PI;
        let c = relax(&model, &[x0], &RelaxSettings::default()).unwrap();
        assert!(c.converged);
        let h = model.hessian(&c.positions).unwrap();
        assert!(h[(0, 0)] > 0.0);
    }

    #[test]
    fn energy_trace_is_non_increasing() {
        let p = params(20, 0.03, 0.2);
        let model = ChainModel::new(p).unwrap();
        let start = perturbed_start(&initial_guess(&p, 1.618).unwrap(), 1.0, 3, 1);
        let (c, trace) = relax_traced(&model, &start, &RelaxSettings::default()).unwrap();
        assert!(c.converged);
        for w in trace.windows(2) {
            assert!(w[1] <= w[0] + 64.0 * f64::EPSILON * w[0].abs().max(1.0));
        }
    }

    #[test]
    fn perturbed_starts_are_seeded_and_ordered() {
        let base: Vec<f64> = (0..30).map(|i| i as f64 * 0.2).collect();
        let a = perturbed_start(&base, 0.3, 5, 2);
        assert_eq!(a, perturbed_start(&base, 0.3, 5, 2));
        assert_ne!(a, perturbed_start(&base, 0.3, 5, 3));
        for w in a.windows(2) {
            assert!(w[1] - w[0] >= MIN_START_SPACING - 1e-15);
        }
    }

    #[test]
    fn density_estimators_on_uniform_chains() {
        for nu in [1.0, 1.618] {
            let x: Vec<f64> = (0..50).map(|i| i as f64 * 2.0 * PI / nu).collect();
            assert!((central_density(&x).unwrap() - nu).abs() < 1e-12);
            assert!((rotation_number(&x).unwrap() - nu).abs() < 1e-12);
        }
        assert!(central_density(&[0.0, 1.0]).is_err());
        assert!(central_density(&[0.0, 1.0, 2.0]).is_err());
        assert!(rotation_number(&[0.0]).is_err());
        assert!(rotation_number(&[1.0, 0.0]).is_err());
    }

    #[test]
    fn catalog_is_order_independent() {
        let mk = |x: Vec<f64>, e: f64| IonConfiguration {
            positions: x,
            energy: e,
            grad_inf_norm: 0.0,
            converged: true,
            n_iterations: 0,
        };
        let a = mk(vec![0.0, 1.0], 1.0);
        let b = mk(vec![0.0, 1.5], 0.5);
        let b2 = mk(vec![0.0, 1.5 + 1e-6], 0.5 + 1e-12);
        let c = mk(vec![0.0, 2.0], 0.7);
        let cat1 = MinimaCatalog::from_configurations(vec![a.clone(), b.clone(), b2.clone(), c.clone()]);
        let cat2 = MinimaCatalog::from_configurations(vec![c, b2, a, b]);
        assert_eq!(cat1, cat2);
        assert_eq!(cat1.n_distinct, 3);
        assert_eq!(cat1.energy_gaps[0], 0.0);
        assert!((cat1.energy_gaps[2] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn two_ion_catalog_has_one_entry() {
        let s = RelaxSettings {
            n_starts: 10,
            ..Default::default()
        };
        for k in [0.0, 0.3] {
            let (_, cat) = ground_state(&params(2, 0.05, k), &s, 1.0).unwrap();
            if k == 0.0 {
                assert_eq!(cat.n_distinct, 1);
            }
            assert!(cat.n_distinct >= 1);
        }
    }

    #[test]
    fn k_zero_has_a_unique_minimum() {
        let s = RelaxSettings {
            n_starts: 12,
            perturbation_scale: 1.0,
            ..Default::default()
        };
        let (_, cat) = ground_state(&params(20, 0.03, 0.0), &s, 1.618).unwrap();
        assert_eq!(cat.n_distinct, 1);
    }

    #[test]
    fn ground_state_is_deterministic() {
        let s = RelaxSettings {
            n_starts: 16,
            seed: 9,
            ..Default::default()
        };
        let p = params(24, 0.03, 0.2);
        let a = ground_state(&p, &s, 1.618).unwrap();
        let b = ground_state(&p, &s, 1.618).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn lattice_free_scaling_is_exact() {
        let p = params(30, 0.02, 0.0);
        let a = trap_equilibrium(&p, 1.618, &RelaxSettings::default()).unwrap();
        let scaled = rescale_trap_equilibrium(&a.positions, 0.02, 0.05);
        let model = ChainModel::new(params(30, 0.05, 0.0)).unwrap();
        let g = model.gradient(&scaled).unwrap();
        assert!(inf_norm(&g) < 1e-12);
    }

    #[test]
    fn calibration_rejects_bad_input() {
        let s = RelaxSettings::default();
        assert!(calibrate_trap(50, 0.0, 0.0, 0.005, &s).is_err());
        assert!(calibrate_trap(50, 1.618, 0.0, 0.0, &s).is_err());
        assert!(calibrate_trap(3, 1.618, 0.0, 0.005, &s).is_err());
    }
}
