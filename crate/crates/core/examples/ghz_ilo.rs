//! A state fragile with respect to every qubit is one invertible local
//! operation away from GHZ.

use qfragile::linalg::matrix::{inner, norm};
use qfragile::linalg::random::random_qubit;
use qfragile::robustness::{ghz_class_ilo, orthogonal_qubit, two_product_state};
use qfragile::state::PureState;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qfragile::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n = 4;
    let e: Vec<_> = (0..n).map(|_| random_qubit(&mut rng)).collect();
    let e_prime: Vec<_> = e.iter().map(orthogonal_qubit).collect();
    let psi = two_product_state(0.8, &e, &e_prime)?;

    let op = ghz_class_ilo(&psi)?.expect("GHZ-class state");
    for (i, m) in op.factors().iter().enumerate() {
        println!("qubit {i}: det = {:.6}", m.determinant()?);
    }
    let out = op.apply(&psi)?;
    let fid = (inner(PureState::ghz(n).amplitudes(), &out).norm() / norm(&out)).powi(2);
    println!("fidelity with GHZ_{n}: {fid:.15}");
    Ok(())
}
