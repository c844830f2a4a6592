//! Univariate complex polynomial roots via Aberth–Ehrlich iteration.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Leading (trailing) coefficients below this fraction of the largest
/// coefficient are treated as exact zeros, i.e. roots at infinity (at zero).
pub const VANISHING_COEFF: f64 = 1e-13;

const MAX_ITER: usize = 2000;

#[derive(Debug, Clone, PartialEq)]
pub struct PolyRoots {
    pub finite: Vec<Complex64>,
    pub at_infinity: usize,
}

/// Evaluates `Σ_i coeffs[i] z^i`.
pub fn eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// `Σ_i |coeffs[i]| |z|^i`, the natural scale of rounding error in `eval`.
pub fn eval_scale(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
}

/// Roots of `Σ_i coeffs[i] z^i` seen as a polynomial of nominal degree
/// `degree_nominal` (`coeffs` may be shorter; missing coefficients are zero).
/// Every vanishing leading coefficient contributes one root at infinity.
pub fn poly_roots(coeffs: &[Complex64], degree_nominal: usize) -> Result<PolyRoots> {
    if coeffs.len() > degree_nominal + 1 {
        return Err(Error::OutOfRange {
            what: "coefficient count",
            value: coeffs.len() as i64,
            range: format!("<= nominal degree + 1 = {}", degree_nominal + 1),
        });
    }
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 || !scale.is_finite() {
        return Err(Error::ZeroPolynomial);
    }
    let tiny = VANISHING_COEFF * scale;
    let top = coeffs.iter().rposition(|c| c.norm() > tiny).unwrap();
    let at_infinity = degree_nominal - top;
    let low = coeffs.iter().position(|c| c.norm() > tiny).unwrap();

    let mut finite = vec![Complex64::new(0.0, 0.0); low];
    let reduced = &coeffs[low..=top];
    let mut roots = aberth(reduced);
    merge_multiple_roots(reduced, &mut roots);
    finite.extend(roots);
    Ok(PolyRoots { finite, at_infinity })
}

/// Monic coefficients (ascending) of `Π (z - r_i)`.
pub fn from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (i, &ci) in c.iter().enumerate() {
            next[i + 1] += ci;
            next[i] -= r * ci;
        }
        c = next;
    }
    c
}

/// Taylor coefficients of `p` at `z` (`t[j] = p^(j)(z) / j!`) together with
/// their rounding scales `Σ_i C(i, j) |a_i| |z|^(i-j)`.
fn taylor_at(coeffs: &[Complex64], z: Complex64) -> (Vec<Complex64>, Vec<f64>) {
    let mut t = coeffs.to_vec();
    let mut s: Vec<f64> = coeffs.iter().map(|c| c.norm()).collect();
    let r = z.norm();
    let n = t.len();
    // Repeated synthetic division (Horner shift).
    for j in 0..n {
        for i in (j..n - 1).rev() {
            let hi = t[i + 1];
            t[i] += z * hi;
            s[i] += r * s[i + 1];
        }
    }
    (t, s)
}

/// Aberth resolves an m-fold root only to about `ε^(1/m)`, scattering the
/// copies on a small circle. Groups of close roots are replaced by their
/// mean when the mean is verified to be a root of that multiplicity, i.e.
/// all Taylor coefficients below order m vanish there.
fn merge_multiple_roots(coeffs: &[Complex64], roots: &mut [Complex64]) {
    const GROUP_RADIUS: f64 = 1e-2;
    const TAYLOR_TOL: f64 = 1e-9;
    let n = roots.len();
    let mut assigned = vec![false; n];
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        let mut group = vec![i];
        assigned[i] = true;
        let mut grew = true;
        while grew {
            grew = false;
            for j in 0..n {
                if !assigned[j]
                    && group.iter().any(|&g| {
                        (roots[g] - roots[j]).norm() <= GROUP_RADIUS * roots[g].norm().max(1.0)
                    })
                {
                    group.push(j);
                    assigned[j] = true;
                    grew = true;
                }
            }
        }
        let m = group.len();
        if m < 2 {
            continue;
        }
        let mut mean = group.iter().map(|&g| roots[g]).sum::<Complex64>() / m as f64;
        // p^(m-1) has a simple root at a genuine m-fold root; polish on it.
        for _ in 0..8 {
            let (t, _) = taylor_at(coeffs, mean);
            let step = t[m - 1] / (t[m] * m as f64);
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            mean -= step;
            if step.norm() <= f64::EPSILON * mean.norm().max(1.0) {
                break;
            }
        }
        let (t, s) = taylor_at(coeffs, mean);
        let vanishing = (0..m).all(|j| t[j].norm() <= TAYLOR_TOL * s[j]);
        if vanishing {
            for &g in &group {
                roots[g] = mean;
            }
        }
    }
}

/// Requires nonzero leading and constant coefficients.
fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    match degree {
        0 => return Vec::new(),
        1 => return vec![-coeffs[0] / coeffs[1]],
        _ => {}
    }
    let lead = coeffs[degree];
    let p: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let dp: Vec<Complex64> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();

    // Start on a circle whose radius is the geometric mean of the root moduli.
    let radius = p[0].norm().powf(1.0 / degree as f64).max(1e-3);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * (j as f64 + 0.25) / degree as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    for _ in 0..MAX_ITER {
        let mut converged = true;
        for i in 0..degree {
            let pv = eval(&p, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let dv = eval(&dp, z[i]);
            let ratio = pv / dv;
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !w.re.is_finite() || !w.im.is_finite() {
                continue;
            }
            z[i] -= w;
            if w.norm() > 4.0 * f64::EPSILON * z[i].norm().max(f64::MIN_POSITIVE) {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }

    // One guarded Newton step per root on the original polynomial.
    for zi in z.iter_mut() {
        let pv = eval(&p, *zi);
        let dv = eval(&dp, *zi);
        if dv.norm() > 0.0 {
            let cand = *zi - pv / dv;
            if eval(&p, cand).norm() < pv.norm() {
                *zi = cand;
            }
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::gaussian_complex;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn z_squared_minus_one() {
        let r = poly_roots(&[c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 2).unwrap();
        assert_eq!(r.at_infinity, 0);
        let mut re: Vec<f64> = r.finite.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] + 1.0).abs() < 1e-14 && (re[1] - 1.0).abs() < 1e-14);
        assert!(r.finite.iter().all(|z| z.im.abs() < 1e-14));
    }

    #[test]
    fn leading_zeros_are_roots_at_infinity() {
        // p(z) = z with nominal degree 3.
        let r = poly_roots(&[c(0.0, 0.0), c(1.0, 0.0)], 3).unwrap();
        assert_eq!(r.finite, vec![c(0.0, 0.0)]);
        assert_eq!(r.at_infinity, 2);
        let r = poly_roots(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)], 3).unwrap();
        assert_eq!(r.at_infinity, 2);
    }

    #[test]
    fn constant_polynomial_has_all_roots_at_infinity() {
        let r = poly_roots(&[c(2.0, 1.0)], 4).unwrap();
        assert!(r.finite.is_empty());
        assert_eq!(r.at_infinity, 4);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert_eq!(poly_roots(&[c(0.0, 0.0); 3], 2), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn random_degree_ten_residuals() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..50 {
            let coeffs: Vec<Complex64> = (0..11).map(|_| gaussian_complex(&mut rng)).collect();
            let r = poly_roots(&coeffs, 10).unwrap();
            assert_eq!(r.finite.len() + r.at_infinity, 10);
            for z in &r.finite {
                assert!(eval(&coeffs, *z).norm() <= 1e-8 * eval_scale(&coeffs, *z));
            }
        }
    }

    #[test]
    fn multiple_roots_are_resolved() {
        let a = c(0.3, -0.7);
        let b = c(-1.2, 0.4);
        for (ma, mb) in [(2, 1), (4, 2), (5, 1), (3, 3), (7, 0)] {
            let mut roots = vec![a; ma];
            roots.extend(std::iter::repeat(b).take(mb));
            let found = poly_roots(&from_roots(&roots), ma + mb).unwrap().finite;
            let near_a = found.iter().filter(|z| (*z - a).norm() < 1e-9).count();
            let near_b = found.iter().filter(|z| (*z - b).norm() < 1e-9).count();
            assert_eq!((near_a, near_b), (ma, mb));
        }
    }

    #[test]
    fn close_but_distinct_roots_stay_apart() {
        let roots = [c(1.0, 0.0), c(1.0 + 1e-3, 0.0), c(-0.5, 0.5)];
        let found = poly_roots(&from_roots(&roots), 3).unwrap().finite;
        for r in roots {
            assert!(found.iter().any(|z| (z - r).norm() < 1e-10));
        }
    }

    #[test]
    fn roots_of_product_polynomial_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(1234);
        for _ in 0..100 {
            let deg = rng.gen_range(1..=12);
            let roots: Vec<Complex64> = (0..deg).map(|_| gaussian_complex(&mut rng)).collect();
            let found = poly_roots(&from_roots(&roots), deg).unwrap().finite;
            assert_eq!(found.len(), deg);
            let mut used = vec![false; deg];
            for r in &roots {
                let (j, d) = found
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| !used[*j])
                    .map(|(j, f)| (j, (f - r).norm()))
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                    .unwrap();
                used[j] = true;
                assert!(d < 1e-6, "root {r} missed by {d}");
            }
        }
    }
}
