//! Per-qubit fragility of a few textbook states.

use num_complex::Complex64;
use qfragile::robustness::{analyze_fragility, two_product_state};
use qfragile::state::PureState;

fn main() -> qfragile::Result<()> {
    let c = |re: f64| Complex64::new(re, 0.0);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    // √0.4 |000⟩ + √0.6 |+ + 1⟩ is fragile only with respect to the last qubit.
    let partial = two_product_state(
        0.4,
        &[[c(1.0), c(0.0)], [c(1.0), c(0.0)], [c(1.0), c(0.0)]],
        &[[c(h), c(h)], [c(h), c(h)], [c(0.0), c(1.0)]],
    )?;
    for (name, psi) in [("GHZ_4", PureState::ghz(4)), ("W_3", PureState::w(3)), ("partial", partial)] {
        let report = analyze_fragility(&psi)?;
        let verdicts: Vec<&str> = report.fragile.iter().map(|&f| if f { "fragile" } else { "robust" }).collect();
        println!("{name:8} {verdicts:?}  ghz class: {}", report.ghz_class);
    }
    Ok(())
}
