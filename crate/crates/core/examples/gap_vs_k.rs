//! Lowest phonon frequency against lattice amplitude for several chain
//! lengths, and the transition amplitude read off the merging curves.
//!
//! `cargo run --release --example gap_vs_k [N ...]`

use std::time::Instant;

use ionchain::experiments::{
    calibrated_traps, default_k_grid, estimate_kc, sweep_gap_vs_k, TransitionMethod,
};
use ionchain::maps::GOLDEN_MEAN;
use ionchain::RelaxSettings;

fn main() -> ionchain::Result<()> {
    let mut lengths: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if lengths.is_empty() {
        lengths = vec![50, 150];
    }
    let settings = RelaxSettings::default();
    let grid = default_k_grid();
    let t = Instant::now();
    let traps = calibrated_traps(&lengths, GOLDEN_MEAN, 0.0, 1e-3, &settings)?;
    for (n, w) in &traps {
        println!("N = {n:4}  omega_tr = {w:.6}");
    }
    let records = sweep_gap_vs_k(&grid, &traps, GOLDEN_MEAN, &settings)?;
    println!("{:>9} {:>5} {:>12} {:>16} {:>3}", "K", "N", "omega0", "energy", "Ns");
    for r in &records {
        println!("{:9.5} {:5} {:12.6} {:16.8} {:3}", r.k, r.n, r.omega0, r.energy, r.n_distinct_minima);
    }
    for method in [TransitionMethod::NCollapse, TransitionMethod::GapThreshold] {
        match estimate_kc(&records, method) {
            Ok(e) => println!("{:>12}: K_c = {:.4}", method.name(), e.k_c_estimate),
            Err(e) => println!("{:>12}: {e}", method.name()),
        }
    }
    eprintln!("{:.1} s", t.elapsed().as_secs_f64());
    Ok(())
}
