//! Haar-random six-qubit states: how often does negativity certify that
//! entanglement survives the loss of t qubits?

use qfragile::cli::{crossing, random_sweep_rows, RandomSweep, DEFAULT_WITNESS_TOL};

fn main() {
    let cfg = RandomSweep {
        n: 6,
        t: vec![1, 2, 3, 4, 5],
        samples: 200,
        seed: 2024,
        threshold: DEFAULT_WITNESS_TOL,
    };
    let rows = random_sweep_rows(&cfg).expect("valid sweep");
    for r in &rows {
        println!("t = {}: {:>3}/{} certified robust ({:.3})", r.t, r.certified_robust, r.samples, r.fraction());
    }
    println!("last t with a certified majority: {:?}", crossing(&rows));
}
