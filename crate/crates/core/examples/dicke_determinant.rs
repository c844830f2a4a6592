//! Determinant of the partial transpose of the two-qubit reduction of
//! ψ_N^(k)(u), from the closed form and from a full partial trace.

use qfragile::dicke_family::{a_coeff, det_pt_rho12, rho12_brute_force, rho12_closed_form, FamilyPoint};

fn main() -> qfragile::Result<()> {
    println!("N = 12");
    println!("{:>5} {}", "u", (1..=6).map(|k| format!("{:>12}", format!("k={k}"))).collect::<String>());
    for u in [0.0, 0.5, 1.0, 2.0, 3.0] {
        let row: String = (1..=6)
            .map(|k| format!("{:>12.4e}", det_pt_rho12(&FamilyPoint::new(12, k, u).unwrap())))
            .collect();
        println!("{u:>5.2} {row}");
    }

    println!("\nk = 1: det against -(A/N^2)^4");
    for n in [3, 5, 8] {
        let pt = FamilyPoint::new(n, 1, 1.5)?;
        let a = a_coeff(&pt);
        let n2 = (n * n) as f64;
        println!("N = {n}: det = {:.6e}  -(A/N^2)^4 = {:.6e}", det_pt_rho12(&pt), -(a / n2).powi(4));
    }

    let pt = FamilyPoint::new(8, 3, 0.7)?;
    let diff = rho12_closed_form(&pt).matrix().max_abs_diff(rho12_brute_force(&pt).matrix());
    println!("\nclosed form vs partial trace (N = 8, k = 3, u = 0.7): {diff:.2e}");
    Ok(())
}
