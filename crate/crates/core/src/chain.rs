//! Potential energy of a 1D Coulomb chain with exact first and second
//! derivatives.
//!
//! Two landscapes are supported:
//!
//! * [`PotentialVariant::PeriodicUniform`]: a global harmonic trap plus a
//!   cosine lattice of period `2π`,
//!   `E = Σ_i (ω²x_i²/2 − K cos x_i) + Σ_{i>j} 1/|x_i − x_j|`.
//! * [`PotentialVariant::DisorderedMicrotraps`]: one harmonic microtrap per
//!   ion, `E = Σ_i κ(x_i − c_i)²/2 + Σ_{i>j} 1/|x_i − x_j|`, with trap centers
//!   `c_i` separated by seeded random spacings.
//!
//! The Coulomb interaction is summed over all pairs, `j` ascending inside `i`
//! ascending, with compensated accumulation.

use nalgebra::DMatrix;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numeric::CompensatedSum;

/// Geometry of a disordered microtrap array.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DisorderParams {
    pub mean_spacing: f64,
    /// Spacings are drawn from `mean_spacing · [1 − w, 1 + w]`.
    pub relative_halfwidth: f64,
    pub trap_stiffness: f64,
    pub seed: u64,
}

impl Default for DisorderParams {
    fn default() -> Self {
        Self {
            mean_spacing: 2.0 * std::f64::consts::PI,
            relative_halfwidth: 0.25,
            trap_stiffness: 0.2,
            seed: 0,
        }
    }
}

impl DisorderParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.mean_spacing > 0.0) || !self.mean_spacing.is_finite() {
            return Err(domain("mean_spacing must be positive"));
        }
        if !(0.0..1.0).contains(&self.relative_halfwidth) {
            return Err(domain("relative_halfwidth must lie in [0, 1)"));
        }
        if !(self.trap_stiffness > 0.0) || !self.trap_stiffness.is_finite() {
            return Err(domain("trap_stiffness must be positive"));
        }
        Ok(())
    }

    /// Trap centers `c_0 = 0, c_{i+1} = c_i + s_i`, `s_i` uniform in the
    /// spacing window, drawn from a ChaCha8 stream seeded with `seed`.
    pub fn trap_centers(&self, n: usize) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let lo = self.mean_spacing * (1.0 - self.relative_halfwidth);
        let hi = self.mean_spacing * (1.0 + self.relative_halfwidth);
        let mut centers = Vec::with_capacity(n);
        let mut c = 0.0;
        for i in 0..n {
            if i > 0 {
                c += rng.gen_range(lo..=hi);
            }
            centers.push(c);
        }
        centers
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PotentialVariant {
    PeriodicUniform,
    DisorderedMicrotraps(DisorderParams),
}

/// Physical setup of the chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainParams {
    pub n_ions: usize,
    pub omega_tr: f64,
    pub lattice_amplitude: f64,
    pub variant: PotentialVariant,
}

impl ChainParams {
    /// Harmonic trap plus cosine lattice.
    pub fn periodic(n_ions: usize, omega_tr: f64, lattice_amplitude: f64) -> Result<Self> {
        let p = Self {
            n_ions,
            omega_tr,
            lattice_amplitude,
            variant: PotentialVariant::PeriodicUniform,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn disordered(n_ions: usize, disorder: DisorderParams) -> Result<Self> {
        let p = Self {
            n_ions,
            omega_tr: 0.0,
            lattice_amplitude: 0.0,
            variant: PotentialVariant::DisorderedMicrotraps(disorder),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_ions == 0 {
            return Err(domain("chain needs at least one ion"));
        }
        if !(self.lattice_amplitude >= 0.0) || !self.lattice_amplitude.is_finite() {
            return Err(domain("lattice amplitude must be non-negative"));
        }
        if !(self.omega_tr >= 0.0) || !self.omega_tr.is_finite() {
            return Err(domain("trap frequency must be non-negative"));
        }
        match self.variant {
            PotentialVariant::PeriodicUniform => {
                if self.omega_tr <= 0.0 {
                    return Err(domain("periodic chain needs omega_tr > 0 for confinement"));
                }
            }
            PotentialVariant::DisorderedMicrotraps(d) => d.validate()?,
        }
        Ok(())
    }

    /// Same setup with another lattice amplitude.
    pub fn with_lattice_amplitude(&self, k: f64) -> Self {
        Self {
            lattice_amplitude: k,
            ..*self
        }
    }

    pub fn with_omega_tr(&self, omega_tr: f64) -> Self {
        Self { omega_tr, ..*self }
    }
}

/// Ordered ion positions with relaxation metadata.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IonConfiguration {
    pub positions: Vec<f64>,
    pub energy: f64,
    pub grad_inf_norm: f64,
    pub converged: bool,
    pub n_iterations: usize,
}

impl IonConfiguration {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn spacings(&self) -> Vec<f64> {
        self.positions.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Positions with index in `[N/3, 2N/3)`.
    pub fn central_third(&self) -> &[f64] {
        central_third(&self.positions)
    }

    /// Parity image: negated and reversed positions.
    pub fn mirrored(&self) -> Vec<f64> {
        mirror(&self.positions)
    }
}

pub fn central_third(positions: &[f64]) -> &[f64] {
    let n = positions.len();
    &positions[n / 3..(2 * n) / 3]
}

pub fn mirror(positions: &[f64]) -> Vec<f64> {
    positions.iter().rev().map(|x| -x).collect()
}

/// Checks that positions are finite and strictly increasing.
pub fn check_ordering(positions: &[f64]) -> Result<()> {
    if let Some(i) = positions.iter().position(|x| !x.is_finite()) {
        return Err(domain(format!("position {i} is not finite")));
    }
    for (i, w) in positions.windows(2).enumerate() {
        if w[1] == w[0] {
            return Err(Error::Singular(i, i + 1));
        }
        if w[1] < w[0] {
            return Err(Error::Unordered(i));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
enum Onsite<'a> {
    Lattice { omega2: f64, k: f64 },
    Microtraps { kappa: f64, centers: &'a [f64] },
}

impl Onsite<'_> {
    #[inline]
    fn value(&self, i: usize, x: f64) -> f64 {
        match *self {
            Onsite::Lattice { omega2, k } => 0.5 * omega2 * x * x - k * x.cos(),
            Onsite::Microtraps { kappa, centers } => {
                let d = x - centers[i];
                0.5 * kappa * d * d
            }
        }
    }

    #[inline]
    fn first(&self, i: usize, x: f64) -> f64 {
        match *self {
            Onsite::Lattice { omega2, k } => omega2 * x + k * x.sin(),
            Onsite::Microtraps { kappa, centers } => kappa * (x - centers[i]),
        }
    }

    #[inline]
    fn second(&self, _i: usize, x: f64) -> f64 {
        match *self {
            Onsite::Lattice { omega2, k } => omega2 + k * x.cos(),
            Onsite::Microtraps { kappa, .. } => kappa,
        }
    }
}

/// Validated chain parameters with precomputed trap centers.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainModel {
    params: ChainParams,
    centers: Vec<f64>,
}

impl ChainModel {
    pub fn new(params: ChainParams) -> Result<Self> {
        params.validate()?;
        let centers = match params.variant {
            PotentialVariant::PeriodicUniform => Vec::new(),
            PotentialVariant::DisorderedMicrotraps(d) => d.trap_centers(params.n_ions),
        };
        Ok(Self { params, centers })
    }

    pub fn params(&self) -> &ChainParams {
        &self.params
    }

    pub fn n_ions(&self) -> usize {
        self.params.n_ions
    }

    /// Microtrap centers; empty for the periodic variant.
    pub fn trap_centers(&self) -> &[f64] {
        &self.centers
    }

    fn onsite(&self) -> Onsite<'_> {
        match self.params.variant {
            PotentialVariant::PeriodicUniform => Onsite::Lattice {
                omega2: self.params.omega_tr * self.params.omega_tr,
                k: self.params.lattice_amplitude,
            },
            PotentialVariant::DisorderedMicrotraps(d) => Onsite::Microtraps {
                kappa: d.trap_stiffness,
                centers: &self.centers,
            },
        }
    }

    fn check(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.params.n_ions {
            return Err(domain(format!(
                "expected {} positions, got {}",
                self.params.n_ions,
                x.len()
            )));
        }
        check_ordering(x)
    }

    pub fn energy(&self, x: &[f64]) -> Result<f64> {
        self.check(x)?;
        Ok(self.energy_unchecked(x))
    }

    pub(crate) fn energy_unchecked(&self, x: &[f64]) -> f64 {
        let onsite = self.onsite();
        let mut acc = CompensatedSum::new();
        for (i, &xi) in x.iter().enumerate() {
            acc.add(onsite.value(i, xi));
        }
        for i in 0..x.len() {
            for j in 0..i {
                acc.add(1.0 / (x[i] - x[j]));
            }
        }
        acc.value()
    }

    /// `∂E/∂x_i`.
    pub fn gradient(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check(x)?;
        Ok(self.gradient_unchecked(x))
    }

    pub(crate) fn gradient_unchecked(&self, x: &[f64]) -> Vec<f64> {
        let onsite = self.onsite();
        let n = x.len();
        (0..n)
            .map(|i| {
                let mut acc = CompensatedSum::new();
                acc.add(onsite.first(i, x[i]));
                for j in 0..n {
                    if j == i {
                        continue;
                    }
                    let d = x[i] - x[j];
                    // −sign(d)/d²
                    acc.add(-d.signum() / (d * d));
                }
                acc.value()
            })
            .collect()
    }

    pub fn hessian(&self, x: &[f64]) -> Result<DMatrix<f64>> {
        self.check(x)?;
        Ok(self.hessian_unchecked(x))
    }

    pub(crate) fn hessian_unchecked(&self, x: &[f64]) -> DMatrix<f64> {
        let onsite = self.onsite();
        let n = x.len();
        let mut h = DMatrix::<f64>::zeros(n, n);
        for i in 0..n {
            for j in 0..i {
                let d = (x[i] - x[j]).abs();
                let c = 2.0 / (d * d * d);
                h[(i, j)] = -c;
                h[(j, i)] = -c;
            }
        }
        for i in 0..n {
            let mut acc = CompensatedSum::new();
            acc.add(onsite.second(i, x[i]));
            for j in 0..n {
                if j != i {
                    acc.add(-h[(i, j)]);
                }
            }
            h[(i, i)] = acc.value();
        }
        h
    }
}
