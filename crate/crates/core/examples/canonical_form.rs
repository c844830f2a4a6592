//! Build a random two-product state and recover its canonical form.

use qfragile::linalg::random::random_qubit;
use qfragile::robustness::{analyze_fragility, orthogonal_qubit, two_product_state};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qfragile::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let n = 5;
    let p = 0.35;
    let e: Vec<_> = (0..n).map(|_| random_qubit(&mut rng)).collect();
    // Orthogonal on qubits 0 and 3, generic elsewhere.
    let e_prime: Vec<_> = (0..n)
        .map(|i| if i == 0 || i == 3 { orthogonal_qubit(&e[i]) } else { random_qubit(&mut rng) })
        .collect();
    let psi = two_product_state(p, &e, &e_prime)?;

    let report = analyze_fragility(&psi)?;
    println!("fragile set: {:?}", report.fragile_set);
    let form = report.canonical_form.expect("fragile state has a canonical form");
    // The form is symmetric under swapping (p, e) with (1 - p, e').
    println!("p = {:.12} (built with {p} or equivalently {})", form.p, 1.0 - p);
    println!("orthogonal set: {:?}", form.orthogonal_set);
    println!("overlaps: {:.3?}", form.overlaps);
    let err: f64 = form
        .reconstruct()
        .iter()
        .zip(psi.amplitudes())
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    println!("reconstruction error: {err:.2e}");
    Ok(())
}
