//! Negativity of the four-qubit family ψ_μ after losing one or two qubits,
//! next to the predicted fragility region.

use num_complex::Complex64;
use qfragile::dicke_family::{in_s, mu_fragility_region, t_loss_negativity};

fn main() -> qfragile::Result<()> {
    println!("{:>14}  {:>10}  {:>10}  predicted fragile (t = 2)", "mu", "neg t=1", "neg t=2");
    for (re, im) in [(0.0, 0.0), (0.5, 0.5), (0.5, 1.5), (1.2, 0.5), (1.2, 1.5), (2.0, 0.2), (0.0, 2.0f64.sqrt())] {
        let mu = Complex64::new(re, im);
        if !in_s(mu) {
            println!("{mu:>14.3}  outside S");
            continue;
        }
        println!(
            "{mu:>14.3}  {:>10.3e}  {:>10.3e}  {}",
            t_loss_negativity(mu, 1)?,
            t_loss_negativity(mu, 2)?,
            mu_fragility_region(mu)?
        );
    }
    Ok(())
}
