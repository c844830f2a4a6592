//! Majorana (stellar) representation of symmetric states.
//!
//! A symmetric state `Σ_k d_k |D_N^(k)⟩` is mapped to the roots of
//!
//! ```text
//! P(z) = Σ_k (-1)^k √C(N,k) d_k z^(N-k)
//! ```
//!
//! and each root `z = tan(θ/2) e^{iφ}` to the Bloch vector with polar angle
//! `θ` and azimuth `φ`. The single-qubit state of that point is
//! `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`, so `z = 0` is the north pole
//! (`|0⟩`) and roots at infinity land on the south pole (`|1⟩`).

use num_complex::Complex64;

use super::symmetric::{binomial, SymmetricState};
use crate::error::{Error, Result};
use crate::linalg::poly_roots;

/// Two points closer than this (Euclidean, on the unit sphere) are merged.
pub const CLUSTER_TOL: f64 = 1e-6;

pub type BlochVector = [f64; 3];

#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaPoints {
    points: Vec<(BlochVector, usize)>,
}

impl MajoranaPoints {
    /// Points with multiplicities; every vector must have unit norm within
    /// `1e-9` and every multiplicity must be at least 1.
    pub fn new(points: Vec<(BlochVector, usize)>) -> Result<Self> {
        for (v, m) in &points {
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            if (n - 1.0).abs() > 1e-9 {
                return Err(Error::NotNormalized { norm: n });
            }
            if *m == 0 {
                return Err(Error::OutOfRange {
                    what: "multiplicity",
                    value: 0,
                    range: ">= 1".into(),
                });
            }
        }
        Ok(Self { points })
    }

    /// Clusters raw (possibly repeated) points into a multiset.
    pub fn from_vectors(vectors: &[BlochVector]) -> Result<Self> {
        let mut points: Vec<(BlochVector, usize)> = Vec::new();
        for v in vectors {
            match points.iter_mut().find(|(p, _)| distance(p, v) <= CLUSTER_TOL) {
                Some((_, m)) => *m += 1,
                None => points.push((*v, 1)),
            }
        }
        Self::new(points)
    }

    pub fn points(&self) -> &[(BlochVector, usize)] {
        &self.points
    }

    /// Sum of multiplicities.
    pub fn num_qubits(&self) -> usize {
        self.points.iter().map(|p| p.1).sum()
    }

    /// Every point repeated according to its multiplicity.
    pub fn expanded(&self) -> Vec<BlochVector> {
        self.points
            .iter()
            .flat_map(|(v, m)| std::iter::repeat(*v).take(*m))
            .collect()
    }

    pub fn all_distinct(&self) -> bool {
        self.points.iter().all(|p| p.1 == 1)
    }
}

pub fn distance(a: &BlochVector, b: &BlochVector) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

/// Stereographic image of a finite root.
pub fn root_to_bloch(z: Complex64) -> BlochVector {
    let r2 = z.norm_sqr();
    if !r2.is_finite() {
        return [0.0, 0.0, -1.0];
    }
    let d = 1.0 + r2;
    [2.0 * z.re / d, 2.0 * z.im / d, (1.0 - r2) / d]
}

/// `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩` for the given Bloch vector.
pub fn bloch_to_qubit(v: &BlochVector) -> [Complex64; 2] {
    let z = v[2].clamp(-1.0, 1.0);
    let c = ((1.0 + z) / 2.0).sqrt();
    let s = ((1.0 - z) / 2.0).sqrt();
    let rho = (v[0] * v[0] + v[1] * v[1]).sqrt();
    let phase = if rho > 0.0 {
        Complex64::new(v[0] / rho, v[1] / rho)
    } else {
        Complex64::new(1.0, 0.0)
    };
    [Complex64::new(c, 0.0), phase * s]
}

/// Bloch vector of a (not necessarily normalized) single-qubit state.
pub fn qubit_to_bloch(q: &[Complex64; 2]) -> BlochVector {
    let n = q[0].norm_sqr() + q[1].norm_sqr();
    let x = q[0].conj() * q[1];
    [2.0 * x.re / n, 2.0 * x.im / n, (q[0].norm_sqr() - q[1].norm_sqr()) / n]
}

/// Ascending coefficients of the Majorana polynomial.
pub fn majorana_polynomial(s: &SymmetricState) -> Vec<Complex64> {
    let n = s.num_qubits();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    for (k, d) in s.coefficients().iter().enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        coeffs[n - k] = d * sign * binomial(n as i64, k as i64).sqrt();
    }
    coeffs
}

pub fn symmetric_to_majorana(s: &SymmetricState) -> Result<MajoranaPoints> {
    let n = s.num_qubits();
    let roots = poly_roots(&majorana_polynomial(s), n).map_err(|e| match e {
        Error::ZeroPolynomial => Error::ZeroState,
        other => other,
    })?;
    let mut vectors: Vec<BlochVector> = roots.finite.iter().map(|&z| root_to_bloch(z)).collect();
    vectors.extend(std::iter::repeat([0.0, 0.0, -1.0]).take(roots.at_infinity));
    MajoranaPoints::from_vectors(&vectors)
}

/// Normalized symmetrization of `⊗_j |ε_j⟩` over the points `ε_j`.
pub fn majorana_to_symmetric(points: &MajoranaPoints) -> Result<SymmetricState> {
    let vectors = points.expanded();
    let n = vectors.len();
    if n == 0 {
        return Err(Error::ZeroState);
    }
    // c_k = coefficient of x^k in Π_j (α_j + β_j x).
    let mut c = vec![Complex64::new(1.0, 0.0)];
    for v in &vectors {
        let [alpha, beta] = bloch_to_qubit(v);
        let mut next = vec![Complex64::new(0.0, 0.0); c.len() + 1];
        for (k, &ck) in c.iter().enumerate() {
            next[k] += ck * alpha;
            next[k + 1] += ck * beta;
        }
        c = next;
    }
    let d = c
        .iter()
        .enumerate()
        .map(|(k, ck)| ck / binomial(n as i64, k as i64).sqrt())
        .collect();
    SymmetricState::from_unnormalized(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::{haar_vector, random_qubit};
    use crate::state::PureState;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn fidelity(a: &SymmetricState, b: &SymmetricState) -> f64 {
        crate::linalg::matrix::inner(a.coefficients(), b.coefficients()).norm_sqr()
    }

    #[test]
    fn all_zeros_is_the_north_pole() {
        let s = SymmetricState::dicke(5, 0).unwrap();
        let m = symmetric_to_majorana(&s).unwrap();
        assert_eq!(m.points().len(), 1);
        assert_eq!(m.points()[0].1, 5);
        assert!(distance(&m.points()[0].0, &[0.0, 0.0, 1.0]) < 1e-12);
        let back = majorana_to_symmetric(&m).unwrap();
        assert!((fidelity(&back, &s) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn dicke_points_split_between_poles() {
        let s = SymmetricState::dicke(6, 2).unwrap();
        let m = symmetric_to_majorana(&s).unwrap();
        let mut mult: Vec<(f64, usize)> = m.points().iter().map(|(v, k)| (v[2], *k)).collect();
        mult.sort_by(|a, b| a.0.total_cmp(&b.0));
        assert_eq!(mult.len(), 2);
        assert!((mult[0].0 + 1.0).abs() < 1e-12 && mult[0].1 == 2);
        assert!((mult[1].0 - 1.0).abs() < 1e-12 && mult[1].1 == 4);

        // Symmetrization oracle: N-k north + k south gives |D_N^(k)⟩.
        for (n, k) in [(3, 1), (4, 2), (6, 5)] {
            let mut pts = vec![([0.0, 0.0, 1.0], n - k)];
            if k > 0 {
                pts.push(([0.0, 0.0, -1.0], k));
            }
            let s = majorana_to_symmetric(&MajoranaPoints::new(pts).unwrap()).unwrap();
            let d = SymmetricState::dicke(n, k).unwrap();
            assert!((fidelity(&s, &d) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn ghz_points_form_equatorial_polygon() {
        for n in 3..9 {
            let m = symmetric_to_majorana(&SymmetricState::ghz(n)).unwrap();
            assert!(m.all_distinct());
            assert_eq!(m.num_qubits(), n);
            for (v, _) in m.points() {
                assert!(v[2].abs() < 1e-12);
            }
            let mut phis: Vec<f64> = m.points().iter().map(|(v, _)| v[1].atan2(v[0])).collect();
            phis.sort_by(f64::total_cmp);
            for w in phis.windows(2) {
                assert!((w[1] - w[0] - 2.0 * std::f64::consts::PI / n as f64).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn equatorial_polygon_symmetrizes_to_ghz_up_to_relative_phase() {
        for n in 3..8 {
            let pts = (0..n)
                .map(|j| {
                    let phi = 2.0 * std::f64::consts::PI * j as f64 / n as f64 + 0.3;
                    ([phi.cos(), phi.sin(), 0.0], 1)
                })
                .collect();
            let s = majorana_to_symmetric(&MajoranaPoints::new(pts).unwrap()).unwrap();
            let c = s.coefficients();
            let h = std::f64::consts::FRAC_1_SQRT_2;
            assert!((c[0].norm() - h).abs() < 1e-12);
            assert!((c[n].norm() - h).abs() < 1e-12);
            assert!(c[1..n].iter().all(|d| d.norm() < 1e-12));
        }
    }

    #[test]
    fn random_states_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for n in 2..10 {
            for _ in 0..5 {
                let s = SymmetricState::new(haar_vector(n + 1, &mut rng)).unwrap();
                let m = symmetric_to_majorana(&s).unwrap();
                assert_eq!(m.num_qubits(), n);
                let back = majorana_to_symmetric(&m).unwrap();
                assert!(fidelity(&back, &s) >= 1.0 - 1e-7);
            }
        }
    }

    #[test]
    fn random_points_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for n in 2..9 {
            let vecs: Vec<BlochVector> = (0..n).map(|_| qubit_to_bloch(&random_qubit(&mut rng))).collect();
            let m = MajoranaPoints::from_vectors(&vecs).unwrap();
            let again = symmetric_to_majorana(&majorana_to_symmetric(&m).unwrap()).unwrap();
            let found = again.expanded();
            let mut used = vec![false; n];
            for v in &vecs {
                let (j, d) = found
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| !used[*j])
                    .map(|(j, f)| (j, distance(f, v)))
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                    .unwrap();
                used[j] = true;
                assert!(d < 1e-6);
            }
        }
    }

    #[test]
    fn product_state_of_identical_qubits_has_one_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let q = random_qubit(&mut rng);
        let psi = PureState::product(&[q; 4]).unwrap();
        let s = SymmetricState::from_pure(&psi).unwrap();
        let m = symmetric_to_majorana(&s).unwrap();
        assert_eq!(m.points().len(), 1);
        assert!(distance(&m.points()[0].0, &qubit_to_bloch(&q)) < 1e-6);
    }

    #[test]
    fn bloch_conversions_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..20 {
            let q = random_qubit(&mut rng);
            let v = qubit_to_bloch(&q);
            let back = bloch_to_qubit(&v);
            let ov = q[0].conj() * back[0] + q[1].conj() * back[1];
            assert!((ov.norm() - 1.0).abs() < 1e-12);
            let z = q[1] / q[0];
            assert!(distance(&root_to_bloch(z), &v) < 1e-12);
        }
    }

    #[test]
    fn rejects_invalid_points() {
        assert!(MajoranaPoints::new(vec![([0.0, 0.0, 2.0], 1)]).is_err());
        assert!(MajoranaPoints::new(vec![([0.0, 0.0, 1.0], 0)]).is_err());
    }
}
