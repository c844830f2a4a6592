//! Two symmetric families: the four-qubit `ψ_μ` states with their μ-plane
//! fragility region, and the `ψ_N^(k)(u)` states with their closed-form
//! two-qubit reductions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::separability::{max_bipartition_negativity, negativity};
use crate::state::symmetric::binomial;
use crate::state::{DensityOperator, PureState, SymmetricState};

/// `√6`, where the fragility boundary meets the real axis.
pub const SQRT6: f64 = 2.449_489_742_783_178;

/// `(|D_4^(0)⟩ + μ |D_4^(2)⟩ + |D_4^(4)⟩) / √(2 + |μ|²)`.
pub fn psi_mu(mu: Complex64) -> SymmetricState {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    SymmetricState::from_unnormalized(vec![one, zero, mu, zero, one]).expect("nonzero")
}

/// Membership in the parameter set S of inequivalent `ψ_μ`: `Re μ ≥ 0`;
/// on the real axis `μ < √(2/3)`; elsewhere `Im μ ≥ 0` and
/// `|μ − √(2/3)| < √(8/3)`, except that `μ = √2 i` (on that circle) is
/// admitted.
pub fn in_s(mu: Complex64) -> bool {
    let r23 = (2.0f64 / 3.0).sqrt();
    if mu.re < 0.0 {
        return false;
    }
    if mu.im == 0.0 {
        return mu.re < r23;
    }
    if (mu - Complex64::new(0.0, 2f64.sqrt())).norm() <= 1e-12 {
        return true;
    }
    mu.im >= 0.0 && (mu - r23).norm() < (8.0f64 / 3.0).sqrt()
}

/// `Im μ ≥ √((√6 − Re μ) Re μ)`, radicand clamped at 0.
pub fn region_predicate(mu: Complex64) -> bool {
    mu.im >= ((SQRT6 - mu.re) * mu.re).max(0.0).sqrt()
}

/// Predicted fragility of `ψ_μ` under the loss of two qubits. Errors
/// outside S.
pub fn mu_fragility_region(mu: Complex64) -> Result<bool> {
    if !in_s(mu) {
        return Err(Error::MuOutsideS { re: mu.re, im: mu.im });
    }
    Ok(region_predicate(mu))
}

/// Largest bipartition negativity of `ψ_μ` after losing `t ∈ {1, 2}` qubits.
pub fn t_loss_negativity(mu: Complex64, t: usize) -> Result<f64> {
    if !(1..=2).contains(&t) {
        return Err(Error::OutOfRange {
            what: "lost qubits t",
            value: t as i64,
            range: "1..=2".into(),
        });
    }
    let psi = psi_mu(mu).to_pure();
    let traced: Vec<usize> = (4 - t..4).collect();
    Ok(max_bipartition_negativity(&psi.partial_trace(&traced)?))
}

/// Parameters `(N, k, u)` of `ψ_N^(k)(u)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyPoint {
    n: usize,
    k: usize,
    u: f64,
}

impl FamilyPoint {
    /// Requires `N ≥ 2`, `1 ≤ k ≤ N − 1` and finite `u ≥ 0`.
    pub fn new(n: usize, k: usize, u: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                what: "N",
                value: n as i64,
                range: ">= 2".into(),
            });
        }
        if k == 0 || k >= n {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
                range: format!("1..={}", n - 1),
            });
        }
        if !(u.is_finite() && u >= 0.0) {
            return Err(Error::InvalidParameter {
                what: "u",
                value: u,
                expected: "finite and >= 0",
            });
        }
        Ok(Self { n, k, u })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn u(&self) -> f64 {
        self.u
    }
}

/// `A_N^(k)(u) = [Σ_{i=0}^k C(k,i)² / C(N,i) · u^{2(k−i)}]^{-1}`.
pub fn a_coeff(pt: &FamilyPoint) -> f64 {
    let (n, k) = (pt.n as i64, pt.k as i64);
    let sum: f64 = (0..=k)
        .map(|i| binomial(k, i).powi(2) / binomial(n, i) * pt.u.powi((2 * (k - i)) as i32))
        .sum();
    1.0 / sum
}

/// Normalized `ψ_N^(k)(u) ∝ Σ_π |0⟩^{⊗N−k} ⊗ (u|0⟩ + |1⟩)^{⊗k}` over distinct
/// arrangements. A basis state of weight `w` collects `C(N−w, k−w) u^{k−w}`
/// from the arrangements; the normalization is `√A / C(N, k)`.
pub fn psi_family(pt: &FamilyPoint) -> PureState {
    let (n, k) = (pt.n as i64, pt.k as i64);
    let scale = a_coeff(pt).sqrt() / binomial(n, k);
    let amps: Vec<Complex64> = (0..1usize << pt.n)
        .map(|idx| {
            let w = idx.count_ones() as i64;
            let c = binomial(n - w, k - w);
            let v = if c == 0.0 { 0.0 } else { c * pt.u.powi((k - w) as i32) * scale };
            Complex64::new(v, 0.0)
        })
        .collect();
    PureState::new(amps).expect("normalized by construction")
}

/// `f_N^(k)(u, j, j′) = C(N,k)^{-2} Σ_i C(N−i−j, k−i−j) C(N−i−j′, k−i−j′)
/// C(N−2, i) u^{2(k−i)−j−j′}` with `C(n, r) = 0` outside `0 ≤ r ≤ n`.
///
/// # Panics
/// If a term with a negative power of `u` has a nonzero coefficient; the
/// binomial convention rules this out.
pub fn f_coeff(pt: &FamilyPoint, j: usize, jp: usize) -> f64 {
    assert!(j <= 2 && jp <= 2, "j, j' must lie in 0..=2");
    let (n, k) = (pt.n as i64, pt.k as i64);
    let (j, jp) = (j as i64, jp as i64);
    let sum: f64 = (0..=k)
        .map(|i| {
            let coeff = binomial(n - i - j, k - i - j) * binomial(n - i - jp, k - i - jp) * binomial(n - 2, i);
            let exp = 2 * (k - i) - j - jp;
            if coeff == 0.0 {
                return 0.0;
            }
            assert!(exp >= 0, "nonzero coefficient {coeff} with u^{exp}");
            coeff * pt.u.powi(exp as i32)
        })
        .sum();
    sum / binomial(n, k).powi(2)
}

/// Excitation count of the two-qubit basis states `|00⟩, |01⟩, |10⟩, |11⟩`.
const WEIGHTS: [usize; 4] = [0, 1, 1, 2];

/// Closed-form reduced state of qubits 0 and 1:
/// `ρ[r, c] = A f(max(w_r, w_c), min(w_r, w_c))`.
pub fn rho12_closed_form(pt: &FamilyPoint) -> DensityOperator {
    let a = a_coeff(pt);
    let m = ComplexMatrix::from_fn(4, 4, |r, c| {
        let (wr, wc) = (WEIGHTS[r], WEIGHTS[c]);
        Complex64::new(a * f_coeff(pt, wr.max(wc), wr.min(wc)), 0.0)
    });
    DensityOperator::new(vec![0, 1], m).expect("closed form is a density operator")
}

/// `Tr_{¬0,1} |ψ_N^(k)(u)⟩⟨ψ_N^(k)(u)|` by direct contraction.
pub fn rho12_brute_force(pt: &FamilyPoint) -> DensityOperator {
    let psi = psi_family(pt);
    if pt.n == 2 {
        return psi.density();
    }
    psi.reduced(&[0, 1]).expect("N > 2")
}

/// Determinant of the partial transpose (first qubit) of the closed-form
/// two-qubit reduction.
pub fn det_pt_rho12(pt: &FamilyPoint) -> f64 {
    let rho = rho12_closed_form(pt);
    rho.partial_transpose(&[0])
        .expect("qubit 0 is present")
        .determinant()
        .expect("4x4")
        .re
}

/// Negativity of the closed-form two-qubit reduction.
pub fn negativity_rho12(pt: &FamilyPoint) -> f64 {
    negativity(&rho12_closed_form(pt), &[0]).expect("qubit 0 is present")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pt(n: usize, k: usize, u: f64) -> FamilyPoint {
        FamilyPoint::new(n, k, u).unwrap()
    }

    #[test]
    fn psi_mu_examples() {
        assert_eq!(psi_mu(c(0.0, 0.0)).to_pure().distance_up_to_phase(&PureState::ghz(4)), 0.0);
        let s = psi_mu(c(1.0, 0.0));
        let r = 1.0 / 3f64.sqrt();
        let expect = [r, 0.0, r, 0.0, r];
        for (d, e) in s.coefficients().iter().zip(expect) {
            assert!((d - c(e, 0.0)).norm() < 1e-15);
        }
        for mu in [c(0.3, 2.0), c(-1.0, 0.5), c(5.0, -3.0)] {
            let psi = psi_mu(mu).to_pure();
            let r0 = psi.qubit_density(0);
            for q in 1..4 {
                let rq = psi.qubit_density(q);
                for i in 0..2 {
                    for j in 0..2 {
                        assert!((r0[i][j] - rq[i][j]).norm() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn set_s_membership() {
        assert!(in_s(c(0.0, 0.0)));
        assert!(!in_s(c((2.0f64 / 3.0).sqrt(), 0.0)));
        assert!(in_s(c(0.5, 0.0)));
        assert!(in_s(c(0.0, 2f64.sqrt())));
        assert!(!in_s(c(0.0, 1.5)));
        assert!(!in_s(c(-0.1, 0.5)));
        assert!(!in_s(c(0.5, -0.5)));
        assert!(in_s(c(1.0, 1.0)));
    }

    #[test]
    fn fragility_region_examples() {
        assert!(mu_fragility_region(c(0.0, 1.0)).unwrap());
        assert!(!mu_fragility_region(c(0.5, 0.0)).unwrap());
        assert!(mu_fragility_region(c(0.0, 0.0)).unwrap());
        assert!(matches!(mu_fragility_region(c(-1.0, 0.0)), Err(Error::MuOutsideS { .. })));
    }

    #[test]
    fn t_loss_examples() {
        assert_eq!(t_loss_negativity(c(0.0, 0.0), 1).unwrap(), 0.0);
        assert!(t_loss_negativity(c(0.5, 0.0), 1).unwrap() > 1e-9);
        assert!(t_loss_negativity(c(0.0, 1.0), 2).unwrap() <= 1e-9);
        assert!(t_loss_negativity(c(0.5, 0.0), 2).unwrap() > 1e-9);
        assert!(t_loss_negativity(c(0.0, 0.0), 3).is_err());
        assert!(t_loss_negativity(c(0.0, 0.0), 0).is_err());
    }

    #[test]
    fn family_point_validation() {
        assert!(FamilyPoint::new(1, 1, 0.0).is_err());
        assert!(FamilyPoint::new(4, 0, 0.0).is_err());
        assert!(FamilyPoint::new(4, 4, 0.0).is_err());
        assert!(FamilyPoint::new(4, 2, -0.1).is_err());
        assert!(FamilyPoint::new(4, 2, f64::NAN).is_err());
    }

    #[test]
    fn a_coeff_values() {
        for n in 2..10 {
            for k in 1..n {
                assert_eq!(a_coeff(&pt(n, k, 0.0)), binomial(n as i64, k as i64));
            }
        }
        assert!((a_coeff(&pt(4, 1, 1.0)) - 0.8).abs() < 1e-15);
    }

    /// Squared norm of the literal sum over distinct arrangements, built
    /// qubit by qubit over every k-subset.
    fn arrangement_sum_norm_sq(p: &FamilyPoint) -> f64 {
        let n = p.n();
        let mut v = vec![0.0; 1 << n];
        for subset in 0usize..1 << n {
            if subset.count_ones() as usize != p.k() {
                continue;
            }
            let mut term = vec![1.0];
            for q in 0..n {
                let f = if (subset >> (n - 1 - q)) & 1 == 1 { [p.u(), 1.0] } else { [1.0, 0.0] };
                term = term.iter().flat_map(|x| [x * f[0], x * f[1]]).collect();
            }
            for (a, b) in v.iter_mut().zip(term) {
                *a += b;
            }
        }
        v.iter().map(|x| x * x).sum()
    }

    #[test]
    fn normalization_against_arrangement_sum() {
        for (n, k, u) in [(4, 1, 1.0), (4, 2, 1.0), (5, 2, 0.7), (6, 3, 2.0), (3, 1, 0.0)] {
            let p = pt(n, k, u);
            let norm_sq = arrangement_sum_norm_sq(&p);
            let ck = binomial(n as i64, k as i64);
            assert!((norm_sq * a_coeff(&p) / (ck * ck) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn psi_family_examples() {
        assert!(psi_family(&pt(3, 1, 0.0)).distance_up_to_phase(&PureState::w(3)) < 1e-15);
        let d = crate::state::dicke_state(6, 2).unwrap();
        assert!(psi_family(&pt(6, 2, 0.0)).distance_up_to_phase(&d) < 1e-15);
        let psi = psi_family(&pt(5, 2, 1.3));
        assert!(SymmetricState::from_pure(&psi).is_ok());
    }

    #[test]
    fn closed_form_matches_partial_trace() {
        for n in 2..=10 {
            for k in 1..n {
                for u in [0.0, 0.5, 1.0, 2.0, 3.0] {
                    let p = pt(n, k, u);
                    let diff = rho12_closed_form(&p).matrix().max_abs_diff(rho12_brute_force(&p).matrix());
                    assert!(diff < 1e-12, "N={n} k={k} u={u}: {diff}");
                }
            }
        }
    }

    #[test]
    fn f_at_zero_keeps_last_term() {
        for n in 3..9 {
            for k in 1..n {
                let expect = binomial(n as i64 - 2, k as i64) / binomial(n as i64, k as i64).powi(2);
                assert!((f_coeff(&pt(n, k, 0.0), 0, 0) - expect).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn f_is_monotone_in_u() {
        for j in 0..3 {
            for jp in 0..3 {
                let mut prev = f_coeff(&pt(8, 3, 0.0), j, jp);
                for s in 1..=60 {
                    let cur = f_coeff(&pt(8, 3, s as f64 * 0.05), j, jp);
                    assert!(cur >= prev);
                    prev = cur;
                }
            }
        }
    }

    #[test]
    fn transpose_side_is_immaterial() {
        let rho = rho12_closed_form(&pt(7, 2, 0.8));
        let a = rho.partial_transpose(&[0]).unwrap().determinant().unwrap();
        let b = rho.partial_transpose(&[1]).unwrap().determinant().unwrap();
        assert!((a - b).norm() < 1e-15);
    }

    #[test]
    fn determinant_identity_for_single_excitation() {
        // det ρ^{T_1} = −(A / N²)⁴ for k = 1.
        for n in 3..=10 {
            for s in 0..=30 {
                let p = pt(n, 1, s as f64 * 0.1);
                let a = a_coeff(&p);
                let expect = -(a / (n * n) as f64).powi(4);
                let det = det_pt_rho12(&p);
                assert!((det / expect - 1.0).abs() < 1e-10, "N={n} u={}: {det} vs {expect}", p.u());
            }
        }
    }

    #[test]
    fn two_qubit_reductions_are_entangled() {
        for n in 3..=8 {
            for k in 1..n {
                for s in 0..=6 {
                    assert!(negativity_rho12(&pt(n, k, s as f64 * 0.5)) > 1e-10);
                }
            }
        }
    }
}
