//! Fragility under particle loss: per-qubit decisions, the two-product
//! canonical form, GHZ-class local operations and the symmetric-state
//! polygon criterion.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::matrix::{inner, norm};
use crate::linalg::{eig_hermitian, ComplexMatrix, SchmidtDecomposition};
use crate::separability::{decompose_range, is_pure_product, kron_factors, ProductDecomposition, Rank2Outcome};
use crate::state::majorana::{distance, BlochVector};
use crate::state::{MajoranaPoints, PureState, SymmetricState};

/// `|⟨e′_i|e_i⟩|` at or below this puts qubit `i` in the orthogonal set.
pub const ORTHOGONALITY_TOL: f64 = 1e-9;
/// Overlap moduli at or above `1 − DISTINCTNESS_TOL` count as equal states.
pub const DISTINCTNESS_TOL: f64 = 1e-9;
/// Reconstruction tolerance for canonical forms.
pub const RECONSTRUCTION_TOL: f64 = 1e-8;
/// Distance of polygon vertices from the fitted plane and circle.
pub const POLYGON_PLANE_TOL: f64 = 1e-7;
/// Deviation of consecutive angular gaps from `2π / N`.
pub const POLYGON_ANGLE_TOL: f64 = 1e-6;

const RANK_TOL: f64 = crate::separability::RANK_TOL;

type Qubit = [Complex64; 2];

/// `√p ⊗_i |e_i⟩ + √(1 − p) ⊗_i |e′_i⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalForm {
    pub p: f64,
    pub e_states: Vec<Qubit>,
    pub e_prime_states: Vec<Qubit>,
    /// `|⟨e′_i|e_i⟩|` per qubit.
    pub overlaps: Vec<f64>,
    /// Qubits with `|⟨e′_i|e_i⟩| ≤ ORTHOGONALITY_TOL`.
    pub orthogonal_set: Vec<usize>,
}

impl CanonicalForm {
    fn new(p: f64, e_states: Vec<Qubit>, e_prime_states: Vec<Qubit>) -> Self {
        let overlaps: Vec<f64> = e_states
            .iter()
            .zip(&e_prime_states)
            .map(|(e, f)| inner(f, e).norm())
            .collect();
        let orthogonal_set = (0..overlaps.len())
            .filter(|&i| overlaps[i] <= ORTHOGONALITY_TOL)
            .collect();
        Self {
            p,
            e_states,
            e_prime_states,
            overlaps,
            orthogonal_set,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.e_states.len()
    }

    pub fn reconstruct(&self) -> Vec<Complex64> {
        let (a, b) = (kron_factors(&self.e_states), kron_factors(&self.e_prime_states));
        let (sa, sb) = (self.p.sqrt(), (1.0 - self.p).sqrt());
        a.iter().zip(&b).map(|(x, y)| x * sa + y * sb).collect()
    }

    /// For a single orthogonal qubit the two product terms must also differ
    /// somewhere else, i.e. some `|⟨e′_j|e_j⟩| < 1 − DISTINCTNESS_TOL` with
    /// `j` outside the orthogonal set. Trivially true for larger sets.
    pub fn satisfies_distinctness(&self) -> bool {
        self.orthogonal_set.len() != 1
            || (0..self.num_qubits())
                .filter(|j| !self.orthogonal_set.contains(j))
                .any(|j| self.overlaps[j] < 1.0 - DISTINCTNESS_TOL)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FragilityReport {
    /// `fragile[k]`: the state loses all entanglement when qubit `k` is lost.
    pub fragile: Vec<bool>,
    /// Qubits with `fragile[k]`, ascending.
    pub fragile_set: Vec<usize>,
    /// Present iff `fragile_set` is nonempty.
    pub canonical_form: Option<CanonicalForm>,
    /// Fragile at every qubit, which places the state in the GHZ class.
    pub ghz_class: bool,
}

/// Per-qubit invertible 2×2 factors, qubit 0 first.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalOperation {
    factors: Vec<ComplexMatrix>,
}

impl LocalOperation {
    /// Rejects non-2×2 factors and factors with `|det| ≤ 1e-12`.
    pub fn new(factors: Vec<ComplexMatrix>) -> Result<Self> {
        for f in &factors {
            if f.rows() != 2 || f.cols() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    found: f.rows(),
                });
            }
            let det = f.determinant()?.norm();
            if det <= 1e-12 {
                return Err(Error::OutOfRange {
                    what: "local factor |determinant|",
                    value: 0,
                    range: "> 1e-12".into(),
                });
            }
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[ComplexMatrix] {
        &self.factors
    }

    /// `(⊗_i factors[i]) |ψ⟩`, not renormalized.
    pub fn apply(&self, psi: &PureState) -> Result<Vec<Complex64>> {
        psi.apply_local(&self.factors)
    }
}

fn ensure_entangled(psi: &PureState) -> Result<()> {
    if is_pure_product(psi).0 {
        return Err(Error::ProductState);
    }
    Ok(())
}

fn check_qubit(psi: &PureState, k: usize) -> Result<()> {
    if k >= psi.num_qubits() {
        return Err(Error::OutOfRange {
            what: "qubit index",
            value: k as i64,
            range: format!("0..{}", psi.num_qubits()),
        });
    }
    Ok(())
}

/// Schmidt decomposition across `{k}` together with the product
/// decomposition of `ρ_{¬k}` when that residual is separable. The residual
/// of a single-qubit loss has rank at most 2, so the decision is exact.
fn residual_decomposition(psi: &PureState, k: usize) -> Result<(SchmidtDecomposition, Option<ProductDecomposition>)> {
    let sd = psi.schmidt(&[k])?;
    let rest: Vec<usize> = (0..psi.num_qubits()).filter(|&q| q != k).collect();
    let w = sd.weights();
    if w[1] <= RANK_TOL {
        // Pure residual: separable only for product states, excluded upstream.
        return Ok((sd, None));
    }
    let outcome = decompose_range([w[0], w[1]], &sd.right_vectors[0], &sd.right_vectors[1], &rest);
    let dec = match outcome {
        Rank2Outcome::Decomposed(d) | Rank2Outcome::InfiniteFamily(d) => Some(d),
        Rank2Outcome::Entangled => None,
    };
    Ok((sd, dec))
}

/// Whether tracing out qubit `k` (0-based) leaves a separable state.
pub fn fragile_wrt_qubit(psi: &PureState, k: usize) -> Result<bool> {
    ensure_entangled(psi)?;
    check_qubit(psi, k)?;
    Ok(residual_decomposition(psi, k)?.1.is_some())
}

/// Rebuilds the canonical form from the Schmidt decomposition across `{k}`
/// and the product decomposition `ρ_{¬k} = Σ_j |w_j⟩⟨w_j|` with
/// `w_1 = √p |e⟩`, `w_2 = √(1−p) |e′⟩`. Writing `w_j = Σ_i σ_i U_ij |v_i⟩`,
/// the state is `Σ_j (Σ_i conj(U_ij) |a_i⟩) ⊗ |w_j⟩`.
fn canonical_from(k: usize, sd: &SchmidtDecomposition, dec: &ProductDecomposition) -> CanonicalForm {
    let p = dec.p;
    let w = [
        dec.vector_a().iter().map(|z| z * p.sqrt()).collect::<Vec<_>>(),
        dec.vector_b().iter().map(|z| z * (1.0 - p).sqrt()).collect(),
    ];
    let site = |j: usize| -> Qubit {
        let mut f = [Complex64::new(0.0, 0.0); 2];
        for i in 0..2 {
            let u = inner(&sd.right_vectors[i], &w[j]) / sd.coefficients[i];
            for (x, a) in f.iter_mut().zip(&sd.left_vectors[i]) {
                *x += u.conj() * a;
            }
        }
        let n = norm(&f);
        [f[0] / n, f[1] / n]
    };
    let unit = |f: &Qubit| {
        let n = norm(f);
        [f[0] / n, f[1] / n]
    };
    let mut e: Vec<Qubit> = dec.product_a.iter().map(unit).collect();
    let mut f: Vec<Qubit> = dec.product_b.iter().map(unit).collect();
    // Product factors carry the phase of their vector on the first factor;
    // unit() keeps it, so ⊗e and ⊗f still equal the decomposition vectors.
    e.insert(k, site(0));
    f.insert(k, site(1));
    CanonicalForm::new(p, e, f)
}

/// Fragility at every qubit plus, when some qubit is fragile, a canonical
/// form whose orthogonal set covers the fragile set.
pub fn analyze_fragility(psi: &PureState) -> Result<FragilityReport> {
    ensure_entangled(psi)?;
    let n = psi.num_qubits();
    let mut fragile = vec![false; n];
    let mut forms = Vec::new();
    for (k, flag) in fragile.iter_mut().enumerate() {
        let (sd, dec) = residual_decomposition(psi, k)?;
        if let Some(d) = dec {
            *flag = true;
            forms.push(canonical_from(k, &sd, &d));
        }
    }
    let fragile_set: Vec<usize> = (0..n).filter(|&k| fragile[k]).collect();
    let covers = |c: &CanonicalForm| fragile_set.iter().all(|k| c.orthogonal_set.contains(k));
    let error = |c: &CanonicalForm| {
        c.reconstruct()
            .iter()
            .zip(psi.amplitudes())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
    };
    // Prefer a form covering the fragile set; among those the most accurate.
    let canonical_form = forms.into_iter().min_by(|a, b| {
        covers(b)
            .cmp(&covers(a))
            .then(b.orthogonal_set.len().cmp(&a.orthogonal_set.len()))
            .then(error(a).total_cmp(&error(b)))
    });
    Ok(FragilityReport {
        ghz_class: fragile_set.len() == n,
        fragile,
        fragile_set,
        canonical_form,
    })
}

/// `a ⊗|e_i⟩ + b ⊗|e_i^⊥⟩` with `a, b > 0`, read off a canonical form that
/// is orthogonal at every qubit.
fn ghz_normal_form(psi: &PureState) -> Result<Option<(f64, f64, Vec<Qubit>, Vec<Qubit>)>> {
    let report = analyze_fragility(psi)?;
    let n = psi.num_qubits();
    let form = match report.canonical_form {
        Some(c) if report.ghz_class && c.orthogonal_set.len() == n => c,
        _ => return Ok(None),
    };
    // Remove the residual non-orthogonality so that U_i is unitary.
    let perp: Vec<Qubit> = form
        .e_states
        .iter()
        .zip(&form.e_prime_states)
        .map(|(e, f)| {
            let o = inner(e, f);
            let g = [f[0] - e[0] * o, f[1] - e[1] * o];
            let gn = norm(&g);
            [g[0] / gn, g[1] / gn]
        })
        .collect();
    Ok(Some((form.p.sqrt(), (1.0 - form.p).sqrt(), form.e_states, perp)))
}

/// Local operation `D U_i` taking a GHZ-class state to `|GHZ_N⟩`, where
/// `U_i` maps `|e_i⟩ ↦ |0⟩`, `|e_i^⊥⟩ ↦ |1⟩` and
/// `D = diag((√2 a)^{-1/N}, (√2 b)^{-1/N})`. `None` when the state is not
/// fragile at every qubit.
pub fn ghz_class_ilo(psi: &PureState) -> Result<Option<LocalOperation>> {
    let (a, b, e, perp) = match ghz_normal_form(psi)? {
        Some(x) => x,
        None => return Ok(None),
    };
    let n = psi.num_qubits() as f64;
    let d = [
        (2f64.sqrt() * a).powf(-1.0 / n),
        (2f64.sqrt() * b).powf(-1.0 / n),
    ];
    let factors = e
        .iter()
        .zip(&perp)
        .map(|(ei, fi)| {
            ComplexMatrix::from_fn(2, 2, |r, c| {
                let row = if r == 0 { ei } else { fi };
                row[c].conj() * d[r]
            })
        })
        .collect();
    LocalOperation::new(factors).map(Some)
}

/// `a |e…e⟩ + b |e^⊥…e^⊥⟩` with `a, b > 0` and `a² + b² = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricFragileForm {
    pub a: f64,
    pub b: f64,
    pub e: Qubit,
    pub e_perp: Qubit,
}

impl SymmetricFragileForm {
    pub fn to_pure(&self, num_qubits: usize) -> PureState {
        let ee = kron_factors(&vec![self.e; num_qubits]);
        let ff = kron_factors(&vec![self.e_perp; num_qubits]);
        let v = ee.iter().zip(&ff).map(|(x, y)| x * self.a + y * self.b).collect();
        PureState::from_unnormalized(v).expect("nonzero by construction")
    }
}

/// The fragile normal form of a symmetric state, or `None` when the state
/// is not fragile at every qubit.
pub fn symmetric_fragile_form(s: &SymmetricState) -> Result<Option<SymmetricFragileForm>> {
    let psi = s.to_pure();
    let (_, _, e, perp) = match ghz_normal_form(&psi)? {
        Some(x) => x,
        None => return Ok(None),
    };
    let n = s.num_qubits();
    // Fix each single-qubit state's phase so both coefficients come out
    // real and positive.
    let phased = |q: Qubit| -> (Qubit, f64) {
        let c = inner(&kron_factors(&vec![q; n]), psi.amplitudes());
        let ph = Complex64::from_polar(1.0, c.arg() / n as f64);
        ([q[0] * ph, q[1] * ph], c.norm())
    };
    let (e0, a) = phased(e[0]);
    let (f0, b) = phased(perp[0]);
    let form = SymmetricFragileForm { a, b, e: e0, e_perp: f0 };
    if form.to_pure(n).distance_up_to_phase(&psi) > RECONSTRUCTION_TOL {
        return Ok(None);
    }
    Ok(Some(form))
}

fn sub(a: &BlochVector, b: &BlochVector) -> BlochVector {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: &BlochVector, b: &BlochVector) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &BlochVector, b: &BlochVector) -> BlochVector {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Least-squares plane through `points`: centroid and unit normal.
pub fn fit_plane(points: &[BlochVector]) -> (BlochVector, BlochVector) {
    let n = points.len() as f64;
    let mut c = [0.0; 3];
    for p in points {
        for i in 0..3 {
            c[i] += p[i] / n;
        }
    }
    let cov = ComplexMatrix::from_fn(3, 3, |i, j| {
        points
            .iter()
            .map(|p| (p[i] - c[i]) * (p[j] - c[j]))
            .sum::<f64>()
            .into()
    });
    let e = eig_hermitian(&cov).expect("covariance is symmetric");
    let v = e.vector(0);
    let mut normal = [v[0].re, v[1].re, v[2].re];
    // Fix the sign for reproducible output.
    let lead = normal.iter().copied().find(|x| x.abs() > 1e-12).unwrap_or(1.0);
    if lead < 0.0 {
        normal = normal.map(|x| -x);
    }
    let nn = dot(&normal, &normal).sqrt();
    (c, normal.map(|x| x / nn))
}

/// Whether the points are the N distinct vertices of a regular polygon:
/// coplanar, concyclic about their centroid and equally spaced in angle.
pub fn regular_polygon_test(points: &MajoranaPoints) -> bool {
    let pts = points.points();
    let n = pts.len();
    if n < 2 || pts.iter().any(|(_, m)| *m != 1) {
        return false;
    }
    let v: Vec<BlochVector> = pts.iter().map(|(p, _)| *p).collect();
    let (c, normal) = fit_plane(&v);
    let mut radii = Vec::with_capacity(n);
    let mut in_plane = Vec::with_capacity(n);
    for p in &v {
        let d = sub(p, &c);
        let h = dot(&d, &normal);
        if h.abs() > POLYGON_PLANE_TOL {
            return false;
        }
        let q = [d[0] - h * normal[0], d[1] - h * normal[1], d[2] - h * normal[2]];
        radii.push(dot(&q, &q).sqrt());
        in_plane.push(q);
    }
    let r_max = radii.iter().copied().fold(0.0, f64::max);
    let r_min = radii.iter().copied().fold(f64::INFINITY, f64::min);
    if r_max - r_min > POLYGON_PLANE_TOL || r_min <= POLYGON_PLANE_TOL {
        return false;
    }
    let u1 = in_plane[0].map(|x| x / radii[0]);
    let u2 = cross(&normal, &u1);
    let mut angles: Vec<f64> = in_plane
        .iter()
        .map(|q| dot(q, &u2).atan2(dot(q, &u1)).rem_euclid(std::f64::consts::TAU))
        .collect();
    angles.sort_by(f64::total_cmp);
    let step = std::f64::consts::TAU / n as f64;
    (0..n).all(|i| {
        let next = if i + 1 < n { angles[i + 1] } else { angles[0] + std::f64::consts::TAU };
        (next - angles[i] - step).abs() <= POLYGON_ANGLE_TOL
    })
}

/// Smallest pairwise distance between distinct Majorana points.
pub fn min_point_separation(points: &MajoranaPoints) -> f64 {
    let v: Vec<BlochVector> = points.points().iter().map(|(p, _)| *p).collect();
    let mut best = f64::INFINITY;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            best = best.min(distance(&v[i], &v[j]));
        }
    }
    best
}

/// `√p ⊗|e_i⟩ + √(1 − p) ⊗|e′_i⟩` as a state; `e′_i ⊥ e_i` is the caller's
/// business. Convenience for building test and example inputs.
pub fn two_product_state(p: f64, e: &[Qubit], e_prime: &[Qubit]) -> Result<PureState> {
    let a = kron_factors(e);
    let b = kron_factors(e_prime);
    let v: Vec<Complex64> = a
        .iter()
        .zip(&b)
        .map(|(x, y)| x * p.sqrt() + y * (1.0 - p).sqrt())
        .collect();
    PureState::from_unnormalized(v)
}

/// `|q^⊥⟩` for a normalized qubit state, with a fixed phase convention.
pub fn orthogonal_qubit(q: &Qubit) -> Qubit {
    [-q[1].conj(), q[0].conj()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::random::{random_qubit, random_unitary};
    use crate::state::symmetric_to_majorana;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const ZERO: Qubit = [Complex64 { re: 1.0, im: 0.0 }, Complex64 { re: 0.0, im: 0.0 }];
    const ONE: Qubit = [Complex64 { re: 0.0, im: 0.0 }, Complex64 { re: 1.0, im: 0.0 }];

    fn fidelity(a: &[Complex64], psi: &PureState) -> f64 {
        let n = norm(a);
        (inner(a, psi.amplitudes()).norm() / n).powi(2)
    }

    #[test]
    fn single_qubit_fragility_examples() {
        assert!(fragile_wrt_qubit(&PureState::ghz(3), 1).unwrap());
        assert!(!fragile_wrt_qubit(&PureState::w(3), 0).unwrap());
        let mut a = vec![c(0.0, 0.0); 8];
        a[0b001] = c(0.3f64.sqrt(), 0.0);
        a[0b110] = c(0.7f64.sqrt(), 0.0);
        let psi = PureState::new(a).unwrap();
        assert!(fragile_wrt_qubit(&psi, 2).unwrap());
        assert_eq!(fragile_wrt_qubit(&PureState::basis(3, 1), 0), Err(Error::ProductState));
        assert!(fragile_wrt_qubit(&PureState::ghz(3), 3).is_err());
    }

    #[test]
    fn ghz_report() {
        for n in 3..7 {
            let r = analyze_fragility(&PureState::ghz(n)).unwrap();
            assert_eq!(r.fragile_set, (0..n).collect::<Vec<_>>());
            assert!(r.ghz_class);
            let form = r.canonical_form.unwrap();
            assert_eq!(form.orthogonal_set.len(), n);
            assert!((form.p - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn w_report() {
        let r = analyze_fragility(&PureState::w(3)).unwrap();
        assert!(r.fragile_set.is_empty());
        assert!(r.canonical_form.is_none());
        assert!(!r.ghz_class);
    }

    #[test]
    fn single_orthogonal_qubit_round_trip() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = [c(h, 0.0), c(h, 0.0)];
        let psi = two_product_state(0.4, &[ZERO, ZERO, ZERO], &[ONE, plus, plus]).unwrap();
        let r = analyze_fragility(&psi).unwrap();
        assert_eq!(r.fragile_set, vec![0]);
        let form = r.canonical_form.unwrap();
        assert!((form.p - 0.4).abs() < 1e-8);
        assert!(form.satisfies_distinctness());
        let rec = form.reconstruct();
        assert!(fidelity(&rec, &psi) > 1.0 - 1e-12);
    }

    fn random_fragile(rng: &mut ChaCha8Rng, n: usize, set: &[usize], p: f64) -> PureState {
        let e: Vec<Qubit> = (0..n).map(|_| random_qubit(rng)).collect();
        let f: Vec<Qubit> = (0..n)
            .map(|i| if set.contains(&i) { orthogonal_qubit(&e[i]) } else { random_qubit(rng) })
            .collect();
        two_product_state(p, &e, &f).unwrap()
    }

    #[test]
    fn constructed_forms_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(3..=7);
            let set: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            let set = if set.is_empty() { vec![rng.gen_range(0..n)] } else { set };
            let p = rng.gen_range(0.05..0.95);
            let psi = random_fragile(&mut rng, n, &set, p);
            let r = analyze_fragility(&psi).unwrap();
            assert!(set.iter().all(|k| r.fragile_set.contains(k)));
            let form = r.canonical_form.unwrap();
            assert!(set.iter().all(|k| form.orthogonal_set.contains(k)));
            assert!(
                (form.p - p).abs() < 1e-8 || (form.p - (1.0 - p)).abs() < 1e-8,
                "p = {p}, got {}",
                form.p
            );
            let err = norm(&form.reconstruct().iter().zip(psi.amplitudes()).map(|(a, b)| a - b).collect::<Vec<_>>());
            assert!(err < 1e-8, "reconstruction error {err}");
        }
    }

    #[test]
    fn fragile_set_is_local_unitary_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..30 {
            let psi = random_fragile(&mut rng, 4, &[1, 3], 0.3);
            let us: Vec<ComplexMatrix> = (0..4).map(|_| random_unitary(2, &mut rng)).collect();
            let a = analyze_fragility(&psi).unwrap().fragile_set;
            let b = analyze_fragility(&psi.apply_local_unitary(&us).unwrap()).unwrap().fragile_set;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn ilo_examples() {
        let ghz = PureState::ghz(3);
        let ilo = ghz_class_ilo(&ghz).unwrap().unwrap();
        let out = ilo.apply(&ghz).unwrap();
        assert!(fidelity(&out, &ghz) > 1.0 - 1e-12);

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = [c(h, 0.0), c(h, 0.0)];
        let minus = [c(h, 0.0), c(-h, 0.0)];
        let psi = two_product_state(0.36, &[plus; 3], &[minus; 3]).unwrap();
        let out = ghz_class_ilo(&psi).unwrap().unwrap().apply(&psi).unwrap();
        assert!(fidelity(&out, &ghz) > 1.0 - 1e-8);
        assert!((norm(&out) - 1.0).abs() < 1e-8);

        assert_eq!(ghz_class_ilo(&PureState::w(3)).unwrap(), None);
    }

    #[test]
    fn local_operation_validation() {
        assert!(LocalOperation::new(vec![ComplexMatrix::zeros(2, 2)]).is_err());
        assert!(LocalOperation::new(vec![ComplexMatrix::identity(3)]).is_err());
        assert!(LocalOperation::new(vec![ComplexMatrix::identity(2)]).is_ok());
    }

    #[test]
    fn symmetric_forms() {
        let f = symmetric_fragile_form(&SymmetricState::ghz(4)).unwrap().unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((f.a - h).abs() < 1e-12 && (f.b - h).abs() < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for n in 3..7 {
            let e = random_qubit(&mut rng);
            let psi = two_product_state(0.36, &vec![e; n], &vec![orthogonal_qubit(&e); n]).unwrap();
            let s = SymmetricState::from_pure(&psi).unwrap();
            let f = symmetric_fragile_form(&s).unwrap().unwrap();
            let mut ab = [f.a, f.b];
            ab.sort_by(f64::total_cmp);
            assert!((ab[0] - 0.6).abs() < 1e-8 && (ab[1] - 0.8).abs() < 1e-8);
            assert!(f.to_pure(n).distance_up_to_phase(&psi) < 1e-8);
            assert!(regular_polygon_test(&symmetric_to_majorana(&s).unwrap()));
        }
        let d42 = SymmetricState::dicke(4, 2).unwrap();
        assert_eq!(symmetric_fragile_form(&d42).unwrap(), None);
    }

    #[test]
    fn polygon_examples() {
        for n in 2..9 {
            let pts = symmetric_to_majorana(&SymmetricState::ghz(n)).unwrap();
            assert!(regular_polygon_test(&pts), "GHZ_{n}");
            let (_, normal) = fit_plane(&pts.expanded());
            if n > 2 {
                assert!((normal[2].abs() - 1.0).abs() < 1e-9);
            }
            // D_2^(1) is Bell-like: two antipodal points, a genuine 2-gon.
            let w = symmetric_to_majorana(&SymmetricState::dicke(n, 1).unwrap()).unwrap();
            assert_eq!(regular_polygon_test(&w), n == 2);
        }
    }
}
