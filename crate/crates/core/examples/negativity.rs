//! Reduced states, negativity and the exact test for rank-2 residuals.

use qfragile::separability::{
    is_separable_residual, max_bipartition_negativity, negativity, rank2_product_decomposition, Rank2Outcome,
};
use qfragile::state::PureState;

fn main() -> qfragile::Result<()> {
    let w = PureState::w(4);
    let rho = w.partial_trace(&[3])?;
    println!("W_4 minus one qubit: rank {}", rho.rank(1e-10));
    println!("  negativity across {{0}} | {{1, 2}}: {:.6}", negativity(&rho, &[0])?);
    println!("  largest bipartition negativity: {:.6}", max_bipartition_negativity(&rho));

    let ghz = PureState::ghz(4);
    let rho = ghz.partial_trace(&[3])?;
    println!("GHZ_4 minus one qubit: rank {}", rho.rank(1e-10));
    match rank2_product_decomposition(&rho)? {
        Rank2Outcome::Decomposed(d) => println!("  mixture of two products with p = {:.6}", d.p),
        Rank2Outcome::InfiniteFamily(_) => println!("  infinitely many product pairs"),
        Rank2Outcome::Entangled => println!("  entangled"),
    }
    println!("  verdict: {:?}", is_separable_residual(&rho, true));
    Ok(())
}
