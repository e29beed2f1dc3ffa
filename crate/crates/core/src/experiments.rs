//! Parameter sweeps built on the single-point solvers: gap against lattice
//! amplitude, location of the pinning transition and its density scaling,
//! counts of metastable minima, and mode localization in microtrap arrays.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chain::{ChainModel, ChainParams, DisorderParams, IonConfiguration};
use crate::error::{domain, Error, Result};
use crate::ground_state::{calibrate_trap, ground_state, relax, MinimaCatalog, RelaxSettings};
use crate::maps::GOLDEN_MEAN;
use crate::numeric::{fit_line, median, quantile};
use crate::phonons::{localization_report, spectrum};

/// Relative spread across chain lengths below which gap curves count as merged.
pub const COLLAPSE_TOL: f64 = 0.05;
/// The merged gap must exceed this multiple of the largest trap frequency.
pub const TRAP_FLOOR_FACTOR: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub k: f64,
    pub n: usize,
    pub omega_tr: f64,
    /// Lowest phonon frequency; NaN when the point failed.
    pub omega0: f64,
    pub energy: f64,
    pub n_distinct_minima: usize,
    pub seed: u64,
    pub converged: bool,
}

/// 24 log-spaced amplitudes in `[0.005, 0.3]`, with the interval
/// `[0.03, 0.08]` sampled twice as densely.
pub fn default_k_grid() -> Vec<f64> {
    refined_log_grid(0.005, 0.3, 24, 0.03, 0.08)
}

/// [`default_k_grid`] moved along the cubic density law, so that it brackets
/// the transition at density `nu`.
pub fn scaled_k_grid(nu: f64) -> Vec<f64> {
    let s = (nu / GOLDEN_MEAN).powi(3);
    default_k_grid().iter().map(|k| k * s).collect()
}

fn refined_log_grid(lo: f64, hi: f64, n: usize, dense_lo: f64, dense_hi: f64) -> Vec<f64> {
    let step = (hi / lo).ln() / (n - 1) as f64;
    let mut grid: Vec<f64> = (0..n).map(|i| lo * (step * i as f64).exp()).collect();
    for i in 0..n - 1 {
        let mid = lo * (step * (i as f64 + 0.5)).exp();
        if (dense_lo..=dense_hi).contains(&mid) {
            grid.push(mid);
        }
    }
    grid.sort_by(f64::total_cmp);
    grid
}

/// Trap frequency per chain length, calibrated so the central third sits at
/// density `nu` for lattice amplitude `k`.
pub fn calibrated_traps(
    n_list: &[usize],
    nu: f64,
    k: f64,
    tolerance: f64,
    settings: &RelaxSettings,
) -> Result<Vec<(usize, f64)>> {
    n_list
        .par_iter()
        .map(|&n| calibrate_trap(n, nu, k, tolerance, settings).map(|c| (n, c.omega_tr)))
        .collect()
}

/// Lowest-frequency sweep over `k_grid` for each `(N, ω_tr)` in `traps`.
///
/// Along one series the amplitude increases and every point keeps the lower
/// energy of two candidates: the previous point's configuration relaxed at the
/// new amplitude, and a fresh multi-start search. Records come out N-major in
/// the order of `traps`, K-minor. A point that fails is recorded with
/// `converged = false` and the series continues.
pub fn sweep_gap_vs_k(
    k_grid: &[f64],
    traps: &[(usize, f64)],
    nu: f64,
    settings: &RelaxSettings,
) -> Result<Vec<SweepRecord>> {
    settings.validate()?;
    if k_grid.is_empty() || traps.is_empty() {
        return Err(domain("sweep needs a non-empty K grid and at least one chain length"));
    }
    if k_grid.windows(2).any(|w| !(w[1] > w[0])) || !(k_grid[0] >= 0.0) {
        return Err(domain("K grid must be non-negative and strictly increasing"));
    }
    for &(n, w) in traps {
        ChainParams::periodic(n, w, 0.0)?;
    }
    let series: Vec<Vec<SweepRecord>> = traps
        .par_iter()
        .map(|&(n, w)| sweep_series(k_grid, n, w, nu, settings))
        .collect();
    Ok(series.into_iter().flatten().collect())
}

fn sweep_series(k_grid: &[f64], n: usize, omega_tr: f64, nu: f64, settings: &RelaxSettings) -> Vec<SweepRecord> {
    let mut previous: Option<IonConfiguration> = None;
    let mut out = Vec::with_capacity(k_grid.len());
    for &k in k_grid {
        let params = ChainParams::periodic(n, omega_tr, k).expect("validated trap");
        let failed = SweepRecord {
            k,
            n,
            omega_tr,
            omega0: f64::NAN,
            energy: f64::NAN,
            n_distinct_minima: 0,
            seed: settings.seed,
            converged: false,
        };
        match sweep_point(&params, previous.as_ref(), nu, settings) {
            Ok((best, n_distinct, omega0)) => {
                out.push(SweepRecord {
                    omega0,
                    energy: best.energy,
                    n_distinct_minima: n_distinct,
                    converged: true,
                    ..failed
                });
                previous = Some(best);
            }
            Err(_) => out.push(failed),
        }
    }
    out
}

fn sweep_point(
    params: &ChainParams,
    previous: Option<&IonConfiguration>,
    nu: f64,
    settings: &RelaxSettings,
) -> Result<(IonConfiguration, usize, f64)> {
    let (_, fresh) = ground_state(params, settings, nu)?;
    let mut found = fresh.configurations;
    if let Some(prev) = previous {
        let model = ChainModel::new(*params)?;
        if let Ok(c) = relax(&model, &prev.positions, settings) {
            found.push(c);
        }
    }
    let catalog = MinimaCatalog::from_configurations(found);
    let best = catalog
        .configurations
        .first()
        .cloned()
        .ok_or(Error::NoConvergedStart(settings.n_starts))?;
    let omega0 = spectrum(params, &best)?.lowest_frequency();
    Ok((best, catalog.n_distinct, omega0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TransitionMethod {
    /// Smallest K where the gap curves of all chain lengths merge above the
    /// trap floor.
    NCollapse,
    /// Smallest K beyond which the longest chain's gap stays above the
    /// trap floor.
    GapThreshold,
}

impl TransitionMethod {
    pub fn name(self) -> &'static str {
        match self {
            TransitionMethod::NCollapse => "NCollapse",
            TransitionMethod::GapThreshold => "GapThreshold",
        }
    }
}

/// Collapse metric at one amplitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CollapsePoint {
    pub k: f64,
    /// `(max ω₀ − min ω₀) / max ω₀` over chain lengths.
    pub spread: f64,
    pub min_omega0: f64,
    pub collapsed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransitionEstimate {
    pub k_c_estimate: f64,
    pub method: TransitionMethod,
    pub details: Vec<CollapsePoint>,
}

/// Per-K merge metric over the converged records; K with fewer than two
/// chain lengths are skipped.
pub fn collapse_metric(records: &[SweepRecord]) -> Vec<CollapsePoint> {
    let floor = TRAP_FLOOR_FACTOR
        * records
            .iter()
            .map(|r| r.omega_tr)
            .fold(0.0, f64::max);
    let mut ks: Vec<f64> = records.iter().filter(|r| r.converged).map(|r| r.k).collect();
    ks.sort_by(f64::total_cmp);
    ks.dedup();
    ks.into_iter()
        .filter_map(|k| {
            let w: Vec<f64> = records
                .iter()
                .filter(|r| r.converged && r.k == k)
                .map(|r| r.omega0)
                .collect();
            if w.len() < 2 {
                return None;
            }
            let hi = w.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let lo = w.iter().copied().fold(f64::INFINITY, f64::min);
            let spread = if hi > 0.0 { (hi - lo) / hi } else { f64::INFINITY };
            Some(CollapsePoint {
                k,
                spread,
                min_omega0: lo,
                collapsed: spread < COLLAPSE_TOL && lo > floor,
            })
        })
        .collect()
}

pub fn estimate_kc(records: &[SweepRecord], method: TransitionMethod) -> Result<TransitionEstimate> {
    let mut lengths: Vec<usize> = records.iter().map(|r| r.n).collect();
    lengths.sort_unstable();
    lengths.dedup();
    if lengths.len() < 2 {
        return Err(domain("transition estimate needs records for at least two chain lengths"));
    }
    let details = collapse_metric(records);
    let k_c_estimate = match method {
        TransitionMethod::NCollapse => details.iter().find(|p| p.collapsed).ok_or(Error::NoTransition)?.k,
        TransitionMethod::GapThreshold => {
            let longest = *lengths.last().expect("two lengths");
            let series: Vec<&SweepRecord> = records.iter().filter(|r| r.converged && r.n == longest).collect();
            let mut kc = None;
            for r in series.iter().rev() {
                if r.omega0 > TRAP_FLOOR_FACTOR * r.omega_tr {
                    kc = Some(r.k);
                } else {
                    break;
                }
            }
            kc.ok_or(Error::NoTransition)?
        }
    };
    Ok(TransitionEstimate {
        k_c_estimate,
        method,
        details,
    })
}

/// `y = prefactor · x^exponent` by least squares in log-log.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PowerLaw {
    pub exponent: f64,
    pub prefactor: f64,
}

pub fn fit_power_law(xs: &[f64], ys: &[f64]) -> Result<PowerLaw> {
    if xs.len() != ys.len() || xs.len() < 2 || xs.iter().chain(ys).any(|v| !(*v > 0.0)) {
        return Err(domain("power-law fit needs at least two positive (x, y) pairs"));
    }
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let fit = fit_line(&lx, &ly).ok_or_else(|| domain("degenerate power-law fit"))?;
    Ok(PowerLaw {
        exponent: fit.slope,
        prefactor: fit.intercept.exp(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KcScaling {
    pub densities: Vec<f64>,
    pub k_c: Vec<f64>,
    pub law: PowerLaw,
    pub estimates: Vec<TransitionEstimate>,
}

/// Transition amplitude at each density in `nu_list`, from a sweep of chains
/// of `n` and `3n` ions over [`scaled_k_grid`], and the log-log fit.
pub fn kc_scaling_scan(
    nu_list: &[f64],
    n: usize,
    method: TransitionMethod,
    settings: &RelaxSettings,
) -> Result<KcScaling> {
    let lo = nu_list.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = nu_list.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if nu_list.len() < 2 || !(lo > 0.0) || hi < 2.0 * lo {
        return Err(domain("density list must span at least a factor of 2"));
    }
    let mut estimates = Vec::with_capacity(nu_list.len());
    for &nu in nu_list {
        let grid = scaled_k_grid(nu);
        let traps = calibrated_traps(&[n, 3 * n], nu, 0.0, 1e-3, settings)?;
        let records = sweep_gap_vs_k(&grid, &traps, nu, settings)?;
        estimates.push(estimate_kc(&records, method)?);
    }
    let k_c: Vec<f64> = estimates.iter().map(|e| e.k_c_estimate).collect();
    let law = fit_power_law(nu_list, &k_c)?;
    Ok(KcScaling {
        densities: nu_list.to_vec(),
        k_c,
        law,
        estimates,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinimaRecord {
    pub k: f64,
    pub n: usize,
    pub n_distinct: usize,
    /// `E_1 − E_0`; NaN with a single minimum.
    pub first_gap: f64,
    /// Median of `E_k − E_0` over the excited minima; NaN with a single minimum.
    pub median_gap: f64,
    pub ground_energy: f64,
}

/// Multi-start enumeration of minima for every `(K, (N, ω_tr))` pair.
pub fn minima_statistics(
    k_list: &[f64],
    traps: &[(usize, f64)],
    nu: f64,
    settings: &RelaxSettings,
) -> Result<Vec<MinimaRecord>> {
    settings.validate()?;
    let mut out = Vec::with_capacity(k_list.len() * traps.len());
    for &k in k_list {
        for &(n, w) in traps {
            let params = ChainParams::periodic(n, w, k)?;
            let (best, catalog) = ground_state(&params, settings, nu)?;
            let excited = &catalog.energy_gaps[1..];
            out.push(MinimaRecord {
                k,
                n,
                n_distinct: catalog.n_distinct,
                first_gap: excited.first().copied().unwrap_or(f64::NAN),
                median_gap: if excited.is_empty() { f64::NAN } else { median(excited) },
                ground_energy: best.energy,
            });
        }
    }
    Ok(out)
}

/// Localization summary of one disorder realization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DisorderRecord {
    pub n: usize,
    pub seed: u64,
    pub min_omega: f64,
    pub pr_median: f64,
    pub pr_q25: f64,
    pub pr_q75: f64,
}

/// Medians over seeds at one chain length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DisorderSummary {
    pub n: usize,
    pub n_seeds: usize,
    pub pr_median: f64,
    pub min_omega_median: f64,
    pub min_omega_lowest: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DisorderStudy {
    pub records: Vec<DisorderRecord>,
    pub summaries: Vec<DisorderSummary>,
}

/// Spectra of `n_seeds` microtrap realizations per chain length, realization
/// `s` using seed `disorder.seed + s`, each relaxed from its trap centers.
pub fn disorder_localization(
    n_list: &[usize],
    disorder: &DisorderParams,
    n_seeds: usize,
    settings: &RelaxSettings,
) -> Result<DisorderStudy> {
    disorder.validate()?;
    settings.validate()?;
    if n_seeds == 0 || n_list.is_empty() {
        return Err(domain("disorder study needs at least one seed and one chain length"));
    }
    let tasks: Vec<(usize, u64)> = n_list
        .iter()
        .flat_map(|&n| (0..n_seeds as u64).map(move |s| (n, s)))
        .collect();
    let records: Vec<DisorderRecord> = tasks
        .par_iter()
        .map(|&(n, s)| {
            let seed = disorder.seed.wrapping_add(s);
            let params = ChainParams::disordered(n, DisorderParams { seed, ..*disorder })?;
            let model = ChainModel::new(params)?;
            let c = relax(&model, model.trap_centers(), settings)?;
            let spec = spectrum(&params, &c)?;
            let pr: Vec<f64> = localization_report(&spec).iter().map(|m| m.participation_ratio).collect();
            Ok(DisorderRecord {
                n,
                seed,
                min_omega: spec.lowest_frequency(),
                pr_median: median(&pr),
                pr_q25: quantile(&pr, 0.25),
                pr_q75: quantile(&pr, 0.75),
            })
        })
        .collect::<Result<_>>()?;
    let summaries = n_list
        .iter()
        .map(|&n| {
            let rs: Vec<&DisorderRecord> = records.iter().filter(|r| r.n == n).collect();
            let pr: Vec<f64> = rs.iter().map(|r| r.pr_median).collect();
            let w: Vec<f64> = rs.iter().map(|r| r.min_omega).collect();
            DisorderSummary {
                n,
                n_seeds: rs.len(),
                pr_median: median(&pr),
                min_omega_median: median(&w),
                min_omega_lowest: w.iter().copied().fold(f64::INFINITY, f64::min),
            }
        })
        .collect();
    Ok(DisorderStudy { records, summaries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(k: f64, n: usize, omega0: f64) -> SweepRecord {
        SweepRecord {
            k,
            n,
            omega_tr: 0.01,
            omega0,
            energy: 0.0,
            n_distinct_minima: 1,
            seed: 0,
            converged: true,
        }
    }

    #[test]
    fn default_grid_shape() {
        let g = default_k_grid();
        assert!((g[0] - 0.005).abs() < 1e-15);
        assert!((g[g.len() - 1] - 0.3).abs() < 1e-12);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        let dense = g.iter().filter(|k| (0.03..=0.08).contains(*k)).count();
        let coarse = refined_log_grid(0.005, 0.3, 24, 1.0, 0.0)
            .iter()
            .filter(|k| (0.03..=0.08).contains(*k))
            .count();
        assert!(dense >= 2 * coarse - 1, "{dense} vs {coarse}");
    }

    #[test]
    fn constructed_crossover_is_found_exactly() {
        let mut rs = Vec::new();
        for &k in &[0.01, 0.05, 0.1, 0.2] {
            let (a, b) = if k < 0.1 { (0.02, 0.01) } else { (0.4 * k / 0.1, 0.4 * k / 0.1) };
            rs.push(record(k, 50, a));
            rs.push(record(k, 150, b));
        }
        let e = estimate_kc(&rs, TransitionMethod::NCollapse).unwrap();
        assert_eq!(e.k_c_estimate, 0.1);
        assert_eq!(e.details.len(), 4);
        let g = estimate_kc(&rs, TransitionMethod::GapThreshold).unwrap();
        assert_eq!(g.k_c_estimate, 0.1);
    }

    #[test]
    fn gap_threshold_uses_last_crossing_of_longest_chain() {
        // floor is 3 · 0.01; the longest chain dips back below it at K = 0.04
        let long = [(0.02, 0.01), (0.03, 0.05), (0.04, 0.02), (0.05, 0.04), (0.06, 0.08)];
        let mut rs: Vec<SweepRecord> = long.iter().map(|&(k, w)| record(k, 150, w)).collect();
        rs.extend(long.iter().map(|&(k, _)| record(k, 50, 0.2)));
        let e = estimate_kc(&rs, TransitionMethod::GapThreshold).unwrap();
        assert_eq!(e.k_c_estimate, 0.05);
        assert_eq!(estimate_kc(&rs, TransitionMethod::NCollapse), Err(Error::NoTransition));
        rs.push(record(0.07, 150, 0.001));
        rs.push(record(0.07, 50, 0.001));
        assert_eq!(estimate_kc(&rs, TransitionMethod::GapThreshold), Err(Error::NoTransition));
    }

    #[test]
    fn no_transition_without_gap() {
        let rs: Vec<SweepRecord> = [50, 150].iter().map(|&n| record(0.0, n, 0.01)).collect();
        assert_eq!(estimate_kc(&rs, TransitionMethod::NCollapse), Err(Error::NoTransition));
        let one: Vec<SweepRecord> = vec![record(0.1, 50, 0.5)];
        assert!(matches!(estimate_kc(&one, TransitionMethod::NCollapse), Err(Error::Domain(_))));
    }

    #[test]
    fn failed_records_are_ignored() {
        let mut rs = vec![record(0.1, 50, 0.5), record(0.1, 150, 0.5)];
        rs.push(SweepRecord {
            converged: false,
            omega0: f64::NAN,
            ..record(0.05, 150, 0.0)
        });
        rs.push(record(0.05, 50, 0.5));
        let e = estimate_kc(&rs, TransitionMethod::NCollapse).unwrap();
        assert_eq!(e.k_c_estimate, 0.1);
    }

    #[test]
    fn exact_power_law() {
        let xs = [1.0, 1.3, 1.618, 2.0, 2.6];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 0.008 * x.powi(3)).collect();
        let p = fit_power_law(&xs, &ys).unwrap();
        assert!((p.exponent - 3.0).abs() < 1e-12);
        assert!((p.prefactor - 0.008).abs() < 1e-14);
        assert!(fit_power_law(&[1.0], &[1.0]).is_err());
        assert!(fit_power_law(&[1.0, 2.0], &[1.0, 0.0]).is_err());
    }

    #[test]
    fn sweep_rejects_bad_grids() {
        let s = RelaxSettings::default();
        assert!(sweep_gap_vs_k(&[0.1, 0.05], &[(10, 0.05)], 1.618, &s).is_err());
        assert!(sweep_gap_vs_k(&[], &[(10, 0.05)], 1.618, &s).is_err());
        assert!(sweep_gap_vs_k(&[0.1], &[], 1.618, &s).is_err());
        assert!(sweep_gap_vs_k(&[0.1], &[(10, 0.0)], 1.618, &s).is_err());
    }

    #[test]
    fn k_zero_column_is_trap_frequency() {
        let traps = [(8, 0.08), (16, 0.05)];
        let rs = sweep_gap_vs_k(&[0.0, 0.01], &traps, 1.618, &RelaxSettings::default()).unwrap();
        assert_eq!(rs.len(), 4);
        assert_eq!((rs[0].n, rs[1].n, rs[2].n), (8, 8, 16));
        for r in rs.iter().filter(|r| r.k == 0.0) {
            assert!((r.omega0 - r.omega_tr).abs() < 1e-8);
            assert_eq!(r.n_distinct_minima, 1);
        }
        assert!(rs.iter().all(|r| r.converged && r.omega0 >= 0.0 && r.energy.is_finite()));
    }

    #[test]
    fn small_disorder_study() {
        let d = DisorderParams::default();
        let s = disorder_localization(&[10, 20], &d, 3, &RelaxSettings::default()).unwrap();
        assert_eq!(s.records.len(), 6);
        assert_eq!(s.summaries.len(), 2);
        assert_eq!(s.records[0].seed, 0);
        assert_eq!(s.records[2].seed, 2);
        for r in &s.records {
            assert!(r.min_omega > 0.0);
            assert!(r.pr_q25 <= r.pr_median && r.pr_median <= r.pr_q75);
            assert!(r.pr_q75 <= r.n as f64);
        }
        assert!(disorder_localization(&[10], &d, 0, &RelaxSettings::default()).is_err());
    }
}
