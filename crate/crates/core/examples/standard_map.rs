//! Bounded and diffusive orbits of the Chirikov standard map on either side
//! of the chaos border, and the reduction from chain parameters.
//!
//! `cargo run --release --example standard_map`

use ionchain::maps::{
    alpha, k_c_theory, k_eff, max_abs_y, standard_map_jacobian, y_variance_growth, StandardMapState,
    GOLDEN_MEAN,
};

fn main() -> ionchain::Result<()> {
    let start = StandardMapState { x: 0.1, y: 0.05 };
    for ke in [0.5, 0.9, 1.2, 2.0] {
        println!("K_eff = {ke}: max |y| over 1e5 steps = {:.3}", max_abs_y(start, ke, 100_000));
    }

    let checkpoints: Vec<usize> = (1..=10).map(|i| i * 100).collect();
    let d = y_variance_growth(StandardMapState { x: 1.0, y: 0.0 }, 2.0, 30, 0.5, &checkpoints)?;
    println!("K_eff = 2: variance exponent {:.3}, rate {:.3}", d.exponent, d.rate);

    let j = standard_map_jacobian(start, 2.0);
    println!("det J = {:.15}", j[0][0] * j[1][1] - j[0][1] * j[1][0]);

    for nu in [1.0, 1.3, GOLDEN_MEAN, 2.0, 2.6] {
        let kc = k_c_theory(nu)?;
        println!(
            "nu = {nu:.3}: alpha = {:8.3}  K_c = {kc:.5}  K_eff(K_c) = {:.4}",
            alpha(nu)?,
            k_eff(kc, nu)?
        );
    }
    Ok(())
}
