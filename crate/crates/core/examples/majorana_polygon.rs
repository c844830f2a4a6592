//! Majorana points of symmetric states and the regular-polygon criterion.

use num_complex::Complex64;
use qfragile::robustness::{regular_polygon_test, symmetric_fragile_form};
use qfragile::state::{symmetric_to_majorana, SymmetricState};

fn main() -> qfragile::Result<()> {
    let c = |re: f64| Complex64::new(re, 0.0);
    let states = [
        ("GHZ_5", SymmetricState::ghz(5)),
        ("D_6^(2)", SymmetricState::dicke(6, 2)?),
        ("0.6|D_0> + 0.8|D_3>", SymmetricState::new(vec![c(0.6), c(0.0), c(0.0), c(0.8)])?),
        ("tetrahedron", SymmetricState::from_unnormalized(vec![c(1.0), c(0.0), c(0.0), c(2.0f64.sqrt()), c(0.0)])?),
    ];
    for (name, s) in states {
        let points = symmetric_to_majorana(&s)?;
        println!("{name}");
        for (v, m) in points.points() {
            println!("  ({:+.4}, {:+.4}, {:+.4}) x{m}", v[0], v[1], v[2]);
        }
        let form = symmetric_fragile_form(&s)?;
        println!(
            "  regular polygon: {}  fragile form: {}",
            regular_polygon_test(&points),
            form.map_or("none".to_string(), |f| format!("a = {:.4}, b = {:.4}", f.a, f.b))
        );
    }
    Ok(())
}
