//! Symplectic maps behind the chain statics.
//!
//! With nearest-neighbor forces only, force balance on ion `i` becomes the
//! recursion
//!
//! ```text
//! p' = p − ω_tr² x − K sin x,   x' = x + 1/√p'
//! ```
//!
//! with `p = 1/(x_i − x_{i−1})²`. Linearizing `1/√p` around the resonant
//! momentum `p_r = (ν/2π)²` and writing `y = α (p − p_r)`,
//! `α = 1/(2 p_r^{3/2}) = (2π/ν)³/2`, gives the Chirikov standard map
//!
//! ```text
//! y' = y − K_eff sin x,   x' = x − y',   K_eff = α K
//! ```
//!
//! (up to the constant phase advance `2π/ν` per step, which the standard map
//! absorbs into `y`).

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::numeric::fit_line;

/// `(1 + √5)/2`.
pub const GOLDEN_MEAN: f64 = 1.618_033_988_749_895;
/// Critical lattice amplitude at golden-mean density from the standard-map
/// reduction (`K_eff ≈ 1`).
pub const KC_GOLDEN_THEORY: f64 = 0.034;
/// Critical lattice amplitude at golden-mean density from full numerics.
pub const KC_GOLDEN_NUMERIC: f64 = 0.0462;
/// `|y|` above which a standard-map orbit counts as unbounded.
pub const DIFFUSION_THRESHOLD: f64 = PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IonMapState {
    pub x: f64,
    /// `1/spacing²`, strictly positive.
    pub p: f64,
}

impl IonMapState {
    pub fn new(x: f64, p: f64) -> Result<Self> {
        if !(p > 0.0) || !p.is_finite() || !x.is_finite() {
            return Err(domain(format!("ion map state needs finite x and p > 0, got ({x}, {p})")));
        }
        Ok(Self { x, p })
    }

    /// State whose previous ion sits `spacing` to the left.
    pub fn from_spacing(x: f64, spacing: f64) -> Result<Self> {
        Self::new(x, 1.0 / (spacing * spacing))
    }
}

pub fn ion_map_step(s: IonMapState, k: f64, omega_tr: f64) -> Result<IonMapState> {
    let p = s.p - omega_tr * omega_tr * s.x - k * s.x.sin();
    if !(p > 0.0) {
        return Err(Error::OrbitEscape { step: 1, p });
    }
    Ok(IonMapState {
        x: s.x + 1.0 / p.sqrt(),
        p,
    })
}

/// `n_steps` iterates of the ion map; the returned vector starts with `s`.
pub fn ion_map_orbit(s: IonMapState, k: f64, omega_tr: f64, n_steps: usize) -> Result<Vec<IonMapState>> {
    let mut out = Vec::with_capacity(n_steps + 1);
    out.push(s);
    let mut cur = s;
    for step in 1..=n_steps {
        cur = ion_map_step(cur, k, omega_tr).map_err(|e| match e {
            Error::OrbitEscape { p, .. } => Error::OrbitEscape { step, p },
            other => other,
        })?;
        out.push(cur);
    }
    Ok(out)
}

/// Equilibrium chain of `n` ions generated by the ion map.
///
/// The seed sits at the chain center with `p₀ = (ν/2π)²`: at `x = 0` for
/// odd `n`, at `x = π/ν` for even `n` (its parity partner then sits one
/// resonant spacing to the left). The map runs outward in `+x` and the `−x`
/// half is the parity image.
pub fn map_chain(n: usize, k: f64, omega_tr: f64, target_density: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(domain("map chain needs at least one ion"));
    }
    let p0 = resonant_momentum(target_density)?;
    let (x0, steps) = if n % 2 == 1 {
        (0.0, (n - 1) / 2)
    } else {
        (PI / target_density, n / 2 - 1)
    };
    let orbit = ion_map_orbit(IonMapState::new(x0, p0)?, k, omega_tr, steps)?;
    let right: Vec<f64> = orbit.iter().map(|s| s.x).collect();
    let mut chain: Vec<f64> = right.iter().rev().map(|x| -x).collect();
    if n % 2 == 1 {
        chain.pop();
    }
    chain.extend_from_slice(&right);
    Ok(chain)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StandardMapState {
    pub x: f64,
    pub y: f64,
}

pub fn standard_map_step(s: StandardMapState, k_eff: f64) -> StandardMapState {
    let y = s.y - k_eff * s.x.sin();
    StandardMapState { x: s.x - y, y }
}

/// Exact inverse of [`standard_map_step`].
pub fn standard_map_inverse(s: StandardMapState, k_eff: f64) -> StandardMapState {
    let x = s.x + s.y;
    StandardMapState {
        x,
        y: s.y + k_eff * x.sin(),
    }
}

/// Jacobian `∂(x', y')/∂(x, y)` in row-major order.
pub fn standard_map_jacobian(s: StandardMapState, k_eff: f64) -> [[f64; 2]; 2] {
    let c = k_eff * s.x.cos();
    [[1.0 + c, -1.0], [-c, 1.0]]
}

pub fn standard_map_orbit(s: StandardMapState, k_eff: f64, n_steps: usize) -> Vec<StandardMapState> {
    let mut out = Vec::with_capacity(n_steps + 1);
    out.push(s);
    let mut cur = s;
    for _ in 0..n_steps {
        cur = standard_map_step(cur, k_eff);
        out.push(cur);
    }
    out
}

/// Largest `|y|` along an orbit of `n_steps`, without storing it.
pub fn max_abs_y(s: StandardMapState, k_eff: f64, n_steps: usize) -> f64 {
    let mut cur = s;
    let mut m = s.y.abs();
    for _ in 0..n_steps {
        cur = standard_map_step(cur, k_eff);
        m = m.max(cur.y.abs());
    }
    m
}

pub fn is_bounded(s: StandardMapState, k_eff: f64, n_steps: usize) -> bool {
    max_abs_y(s, k_eff, n_steps) < DIFFUSION_THRESHOLD
}

/// Ensemble spreading of `y` over time.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiffusionStats {
    pub times: Vec<usize>,
    pub variances: Vec<f64>,
    /// Log-log slope of variance against time; 1 for normal diffusion.
    pub exponent: f64,
    /// Linear slope of variance against time.
    pub rate: f64,
}

/// Variance of `y` over an `side × side` grid of orbits started within
/// `±half_width` of `center`, recorded at each checkpoint.
pub fn y_variance_growth(
    center: StandardMapState,
    k_eff: f64,
    side: usize,
    half_width: f64,
    checkpoints: &[usize],
) -> Result<DiffusionStats> {
    if side < 2 || checkpoints.len() < 2 || checkpoints.windows(2).any(|w| w[1] <= w[0]) || checkpoints[0] == 0 {
        return Err(domain("need a grid of at least 2x2 orbits and increasing positive checkpoints"));
    }
    let mut states: Vec<StandardMapState> = (0..side * side)
        .map(|k| {
            let (i, j) = (k / side, k % side);
            let fx = -1.0 + 2.0 * i as f64 / (side - 1) as f64;
            let fy = -1.0 + 2.0 * j as f64 / (side - 1) as f64;
            StandardMapState {
                x: center.x + half_width * fx,
                y: center.y + half_width * fy,
            }
        })
        .collect();
    let mut t = 0;
    let mut variances = Vec::with_capacity(checkpoints.len());
    for &cp in checkpoints {
        while t < cp {
            for s in states.iter_mut() {
                *s = standard_map_step(*s, k_eff);
            }
            t += 1;
        }
        let n = states.len() as f64;
        let mean = states.iter().map(|s| s.y).sum::<f64>() / n;
        variances.push(states.iter().map(|s| (s.y - mean).powi(2)).sum::<f64>() / n);
    }
    let times: Vec<f64> = checkpoints.iter().map(|&c| c as f64).collect();
    let rate = fit_line(&times, &variances).map(|f| f.slope).unwrap_or(f64::NAN);
    let lt: Vec<f64> = times.iter().map(|t| t.ln()).collect();
    let lv: Vec<f64> = variances.iter().map(|v| v.max(f64::MIN_POSITIVE).ln()).collect();
    let exponent = fit_line(&lt, &lv).map(|f| f.slope).unwrap_or(f64::NAN);
    Ok(DiffusionStats {
        times: checkpoints.to_vec(),
        variances,
        exponent,
        rate,
    })
}

fn check_density(nu: f64) -> Result<()> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(domain(format!("density must be positive, got {nu}")));
    }
    Ok(())
}

/// `α = (2π/ν)³/2`.
pub fn alpha(nu: f64) -> Result<f64> {
    check_density(nu)?;
    Ok((2.0 * PI / nu).powi(3) / 2.0)
}

/// `p_r = (ν/2π)²`, the effective momentum of a uniform chain at density `ν`.
pub fn resonant_momentum(nu: f64) -> Result<f64> {
    check_density(nu)?;
    Ok((nu / (2.0 * PI)).powi(2))
}

pub fn k_eff(k: f64, nu: f64) -> Result<f64> {
    Ok(alpha(nu)? * k)
}

/// Standard-map coordinates `(x, α (p − p_r))` of an ion-map state.
pub fn to_standard_map(s: IonMapState, nu: f64) -> Result<StandardMapState> {
    Ok(StandardMapState {
        x: s.x,
        y: alpha(nu)? * (s.p - resonant_momentum(nu)?),
    })
}

/// Critical amplitude `0.034 (ν/ν_g)³` predicted by the standard-map border.
pub fn k_c_theory(nu: f64) -> Result<f64> {
    check_density(nu)?;
    Ok(KC_GOLDEN_THEORY * (nu / GOLDEN_MEAN).powi(3))
}
