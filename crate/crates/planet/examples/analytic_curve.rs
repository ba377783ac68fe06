//! Evaluate the closed-form degree distribution and its tail for a range
//! of epsilon values, showing how randomness flattens the curve.
//!
//! ```text
//! cargo run --example analytic_curve
//! ```

use planet::analytic::{beta_mass, model_cumulative, ModelParams};

fn main() -> planet::Result<()> {
    let (t, n, mu) = (19usize, 541usize, 28.1);

    for eps in [0.02, 0.055, 0.3, 1.0] {
        let params = ModelParams::new(t, n, mu, eps)?;
        let mass = beta_mass(&params)?;
        let tail = model_cumulative(&params)?;
        println!("epsilon = {eps}");
        println!("  k    p_k        P_k");
        for k in [1u32, 2, 3, 5, 9, 14, 18] {
            println!(
                "  {k:<4} {:<10.5} {:.5}",
                mass.mass_at(k).unwrap(),
                tail.tail_at(k).unwrap()
            );
        }
        println!();
    }

    // symmetric special case: N = 2 mu makes the curve palindromic
    let symmetric = beta_mass(&ModelParams::new(10, 56, 28.0, 0.4)?)?;
    let masses: Vec<String> = symmetric.iter().map(|(_, p)| format!("{p:.4}")).collect();
    println!(
        "N = 2 mu gives a symmetric mass function:\n  {}",
        masses.join(" ")
    );
    Ok(())
}
