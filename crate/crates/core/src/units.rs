//! Conversion between SI quantities and the chain's dimensionless units.
//!
//! The dimensionless Hamiltonian measures length in `r_a = period / 2π`
//! (so the lattice period is `2π`), mass in ion masses and energy in the
//! Coulomb energy of two charges at distance `r_a`. All SI formulas below
//! carry the `1 / (4π ε₀)` factor explicitly; in Gaussian units they reduce
//! to `ε_a = e² / r_a`, `t_a = e r_a √(m / ε_a)` and
//! `ħ_eff = ħ / (e √(m r_a))`.

use serde::Serialize;

use crate::error::{domain, Result};

/// Elementary charge, C (exact).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// Vacuum permittivity, F/m.
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;
/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054_571_817_646e-34;
/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// Atomic mass unit, kg.
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalInputs {
    /// Lattice period in meters.
    pub lattice_period: f64,
    /// Ion mass in kilograms.
    pub ion_mass: f64,
    /// Ion charge in coulombs.
    pub ion_charge: f64,
}

impl PhysicalInputs {
    pub fn new(lattice_period: f64, ion_mass: f64, ion_charge: f64) -> Result<Self> {
        for (name, v) in [
            ("lattice_period", lattice_period),
            ("ion_mass", ion_mass),
            ("ion_charge", ion_charge),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(Self {
            lattice_period,
            ion_mass,
            ion_charge,
        })
    }

    /// Inputs from a period in meters, a mass in atomic mass units and a
    /// charge in multiples of the elementary charge.
    pub fn from_amu(lattice_period: f64, mass_amu: f64, charge_e: f64) -> Result<Self> {
        Self::new(
            lattice_period,
            mass_amu * ATOMIC_MASS_UNIT,
            charge_e * ELEMENTARY_CHARGE,
        )
    }
}

/// SI values of the dimensionless units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitScales {
    #[serde(rename = "r_a_m")]
    pub length: f64,
    #[serde(rename = "eps_a_J")]
    pub energy_joule: f64,
    #[serde(rename = "eps_a_eV")]
    pub energy_ev: f64,
    #[serde(rename = "eps_a_K")]
    pub energy_kelvin: f64,
    #[serde(rename = "E_adc_Vm")]
    pub field: f64,
    #[serde(rename = "v_a_ms")]
    pub velocity: f64,
    #[serde(rename = "t_a_s")]
    pub time: f64,
    pub hbar_eff: f64,
}

pub fn derive_scales(inputs: &PhysicalInputs) -> Result<UnitScales> {
    // Re-validate: the fields are public.
    let PhysicalInputs {
        lattice_period,
        ion_mass,
        ion_charge,
    } = PhysicalInputs::new(inputs.lattice_period, inputs.ion_mass, inputs.ion_charge)?;

    let length = lattice_period / (2.0 * std::f64::consts::PI);
    let energy_joule =
        ion_charge * ion_charge / (4.0 * std::f64::consts::PI * VACUUM_PERMITTIVITY * length);
    let velocity = (energy_joule / ion_mass).sqrt();
    Ok(UnitScales {
        length,
        energy_joule,
        energy_ev: energy_joule / ELEMENTARY_CHARGE,
        energy_kelvin: energy_joule / BOLTZMANN,
        field: energy_joule / (ion_charge * length),
        velocity,
        time: length / velocity,
        hbar_eff: HBAR / (length * (ion_mass * energy_joule).sqrt()),
    })
}

impl UnitScales {
    pub fn energy_to_joule(&self, dimensionless: f64) -> f64 {
        dimensionless * self.energy_joule
    }

    pub fn energy_from_joule(&self, joule: f64) -> f64 {
        joule / self.energy_joule
    }

    pub fn length_to_meter(&self, dimensionless: f64) -> f64 {
        dimensionless * self.length
    }

    pub fn length_from_meter(&self, meter: f64) -> f64 {
        meter / self.length
    }
}

/// Lattice depth `kc · ε_a` expressed as a temperature.
pub fn pinning_depth_kelvin(scales: &UnitScales, kc: f64) -> Result<f64> {
    if !(kc > 0.0) || !kc.is_finite() {
        return Err(domain(format!("pinning amplitude must be positive, got {kc}")));
    }
    Ok(kc * scales.energy_kelvin)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn calcium(period: f64) -> UnitScales {
        derive_scales(&PhysicalInputs::from_amu(period, 40.0, 1.0).unwrap()).unwrap()
    }

    #[test]
    fn length_scale_is_period_over_two_pi() {
        let s = calcium(1e-6);
        assert!((s.length - 159.154_943e-9).abs() < 1e-15);
        assert_eq!(s.length, 1e-6 / (2.0 * std::f64::consts::PI));
    }

    #[test]
    fn coulomb_energy_in_kelvin() {
        // 1.439964548 eV nm / 159.1549 nm, converted with k_B = 8.617333e-5 eV/K.
        let expected = 1.439_964_548 / 159.154_943_1 / 8.617_333_262e-5;
        let s = calcium(1e-6);
        assert!((s.energy_kelvin - expected).abs() / expected < 1e-8);
        assert!((s.energy_kelvin - 105.0).abs() < 0.5);
    }

    #[test]
    fn hbar_eff_order_of_magnitude() {
        let s = calcium(1e-6);
        let ratio = s.hbar_eff / 1e-5;
        assert!(ratio > 0.1 && ratio < 10.0, "hbar_eff = {}", s.hbar_eff);
        // Gaussian form: hbar / (e sqrt(m r_a)) with e^2 -> e^2 / (4 pi eps0).
        let e_gauss = (ELEMENTARY_CHARGE.powi(2)
            / (4.0 * std::f64::consts::PI * VACUUM_PERMITTIVITY))
            .sqrt();
        let gauss = HBAR / (e_gauss * (40.0 * ATOMIC_MASS_UNIT * s.length).sqrt());
        assert!((gauss - s.hbar_eff).abs() / s.hbar_eff < 1e-12);
    }

    #[test]
    fn doubling_period_doubles_length_and_halves_energy() {
        let a = calcium(1e-6);
        let b = calcium(2e-6);
        assert!((b.length / a.length - 2.0).abs() < 1e-15);
        assert!((a.energy_joule / b.energy_joule - 2.0).abs() < 1e-15);
    }

    #[test]
    fn hbar_eff_decreases_with_mass_and_period() {
        let periods = [0.5e-6, 1e-6, 2e-6, 5e-6, 20e-6];
        let masses = [1.0, 9.0, 40.0, 88.0, 171.0];
        for w in periods.windows(2) {
            for &m in &masses {
                let lo = derive_scales(&PhysicalInputs::from_amu(w[0], m, 1.0).unwrap()).unwrap();
                let hi = derive_scales(&PhysicalInputs::from_amu(w[1], m, 1.0).unwrap()).unwrap();
                assert!(hi.hbar_eff < lo.hbar_eff);
                // hbar_eff ∝ period^{-1/2}
                let expect = (w[1] / w[0]).sqrt();
                assert!((lo.hbar_eff / hi.hbar_eff - expect).abs() < 1e-12);
            }
        }
        for w in masses.windows(2) {
            for &p in &periods {
                let lo = derive_scales(&PhysicalInputs::from_amu(p, w[0], 1.0).unwrap()).unwrap();
                let hi = derive_scales(&PhysicalInputs::from_amu(p, w[1], 1.0).unwrap()).unwrap();
                assert!(hi.hbar_eff < lo.hbar_eff);
            }
        }
    }

    #[test]
    fn energy_round_trip() {
        let s = calcium(1e-6);
        for v in [1e-6, 0.034, 1.0, 57.3, 1e4] {
            let back = s.energy_from_joule(s.energy_to_joule(v));
            assert!((back - v).abs() / v < 1e-12);
            let back = s.length_from_meter(s.length_to_meter(v));
            assert!((back - v).abs() / v < 1e-12);
        }
    }

    #[test]
    fn pinning_depth() {
        let s = calcium(1e-6);
        let t = pinning_depth_kelvin(&s, 0.034).unwrap();
        assert!(t > 1.5 && t < 6.0, "{t}");
        assert!((t - 3.58).abs() < 0.05);
        assert!(pinning_depth_kelvin(&s, 0.0).is_err());
        assert!(pinning_depth_kelvin(&s, -1.0).is_err());

        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        let kc = 0.034 * ((golden - 1.0) / golden).powi(3);
        let t20 = pinning_depth_kelvin(&calcium(20e-6), kc).unwrap();
        assert!(t20 < 0.025, "{t20}");
    }

    #[test]
    fn rejects_non_positive_inputs() {
        assert!(PhysicalInputs::new(0.0, 1.0, 1.0).is_err());
        assert!(PhysicalInputs::new(1.0, -1.0, 1.0).is_err());
        assert!(PhysicalInputs::from_amu(1e-6, 40.0, 0.0).is_err());
        let bad = PhysicalInputs {
            lattice_period: -1.0,
            ion_mass: 1.0,
            ion_charge: 1.0,
        };
        assert!(derive_scales(&bad).is_err());
    }
}
