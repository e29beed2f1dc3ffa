//! Mode localization in random microtrap arrays against the periodic limit.
//!
//! `cargo run --release --example disorder [n_seeds]`

use ionchain::experiments::disorder_localization;
use ionchain::{DisorderParams, RelaxSettings};

fn main() -> ionchain::Result<()> {
    let n_seeds = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let settings = RelaxSettings::default();
    for w in [0.0, 0.25] {
        let d = DisorderParams {
            relative_halfwidth: w,
            ..DisorderParams::default()
        };
        let study = disorder_localization(&[50, 100, 200], &d, n_seeds, &settings)?;
        println!("w = {w}");
        for s in &study.summaries {
            println!(
                "  N = {:4}  median PR = {:8.3}  PR/N = {:.3}  min omega (median) = {:.5}  (lowest) = {:.5}",
                s.n,
                s.pr_median,
                s.pr_median / s.n as f64,
                s.min_omega_median,
                s.min_omega_lowest
            );
        }
    }
    Ok(())
}
