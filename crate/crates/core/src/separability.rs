//! Separability decisions for the residual mixed states left after particle
//! loss: negativity, product-vector tests and the rank-2 product
//! decomposition.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::matrix::{inner, norm};
use crate::linalg::{eig_hermitian, ComplexMatrix};
use crate::state::density::partial_transpose_masked;
use crate::state::{DensityOperator, PureState};

/// Negativities below this report as exactly zero.
pub const NEGATIVITY_CLAMP: f64 = 1e-12;
/// Single-qubit purity defect accepted for a product vector.
pub const PRODUCT_TOL: f64 = 1e-10;
/// Eigenvalues above this count toward the rank of a density operator.
pub const RANK_TOL: f64 = 1e-10;
/// Negativity above this certifies entanglement in the witness fallback.
pub const ENTANGLEMENT_TOL: f64 = 1e-10;
/// Reconstruction tolerance for product decompositions.
pub const RECONSTRUCTION_TOL: f64 = 1e-8;

const MINOR_RESIDUAL_TOL: f64 = 1e-8;
const VANISHING_MINOR: f64 = 1e-10;

type Qubit = [Complex64; 2];

/// `(‖ρ^{T_A}‖₁ − 1) / 2` for the qubit labels in `subset`.
pub fn negativity(rho: &DensityOperator, subset: &[usize]) -> Result<f64> {
    let pt = rho.partial_transpose(subset)?;
    Ok(negativity_of_pt(&pt))
}

fn negativity_of_pt(pt: &ComplexMatrix) -> f64 {
    let e = eig_hermitian(pt).expect("partial transpose of a Hermitian matrix");
    let n = (e.values.iter().map(|l| l.abs()).sum::<f64>() - 1.0) / 2.0;
    if n < NEGATIVITY_CLAMP {
        0.0
    } else {
        n
    }
}

/// Masks of one side of every bipartition, counted once each.
fn bipartition_masks(m: usize) -> impl Iterator<Item = usize> {
    // Fixing the most significant qubit on the complement side.
    1..(1usize << (m - 1))
}

/// Largest negativity over all bipartitions of `rho`.
pub fn max_bipartition_negativity(rho: &DensityOperator) -> f64 {
    let m = rho.num_qubits();
    if m < 2 {
        return 0.0;
    }
    bipartition_masks(m)
        .map(|mask| negativity_of_pt(&partial_transpose_masked(rho.matrix(), mask)))
        .fold(0.0, f64::max)
}

/// Whether some bipartition has negativity above `threshold`, stopping at
/// the first one found. Single-qubit cuts are tried first.
pub fn has_npt_bipartition(rho: &DensityOperator, threshold: f64) -> bool {
    let m = rho.num_qubits();
    if m < 2 {
        return false;
    }
    let mut masks: Vec<usize> = bipartition_masks(m).collect();
    masks.sort_by_key(|mask| mask.count_ones().min(m as u32 - mask.count_ones()));
    masks
        .into_iter()
        .any(|mask| negativity_of_pt(&partial_transpose_masked(rho.matrix(), mask)) > threshold)
}

fn largest_qubit_eigenvalue(r: &[[Complex64; 2]; 2]) -> f64 {
    let (a, d) = (r[0][0].re, r[1][1].re);
    let b = r[0][1].norm();
    0.5 * (a + d + ((a - d).powi(2) + 4.0 * b * b).sqrt())
}

/// Single-qubit factors of a product vector, read off the row and column
/// through its largest amplitude. The global phase and norm of `v` are
/// absorbed into the first factor so that `⊗ factors` equals `v` for a
/// product. Returns `None` when `⊗ factors` misses `v` by more than
/// `RECONSTRUCTION_TOL · ‖v‖`.
pub fn product_factors(v: &[Complex64], num_qubits: usize) -> Option<Vec<Qubit>> {
    let (pivot, _) = v
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm_sqr().total_cmp(&b.1.norm_sqr()))?;
    let mut factors: Vec<Qubit> = (0..num_qubits)
        .map(|q| {
            let bit = 1usize << (num_qubits - 1 - q);
            let f = [v[pivot & !bit], v[pivot | bit]];
            let n = (f[0].norm_sqr() + f[1].norm_sqr()).sqrt();
            [f[0] / n, f[1] / n]
        })
        .collect();
    let prod = kron_factors(&factors);
    let c = inner(&prod, v);
    factors[0] = [factors[0][0] * c, factors[0][1] * c];
    let prod = kron_factors(&factors);
    let miss = norm(&prod.iter().zip(v).map(|(a, b)| a - b).collect::<Vec<_>>());
    let scale = norm(v);
    (miss <= RECONSTRUCTION_TOL * scale).then_some(factors)
}

/// `⊗ factors`, qubit 0 first.
pub fn kron_factors(factors: &[Qubit]) -> Vec<Complex64> {
    factors.iter().fold(vec![Complex64::new(1.0, 0.0)], |acc, f| {
        crate::linalg::matrix::kron_vec(&acc, f)
    })
}

/// Whether `psi` is a product of single-qubit states. Decided by the purity
/// of every single-qubit reduction; on success the factors reproduce `psi`
/// up to global phase.
pub fn is_pure_product(psi: &PureState) -> (bool, Option<Vec<Qubit>>) {
    let n = psi.num_qubits();
    let pure = (0..n).all(|q| largest_qubit_eigenvalue(&psi.qubit_density(q)) >= 1.0 - PRODUCT_TOL);
    if !pure {
        return (false, None);
    }
    match product_factors(psi.amplitudes(), n) {
        Some(f) => (true, Some(f)),
        None => (false, None),
    }
}

/// `ρ = p |e⟩⟨e| + (1 − p) |e′⟩⟨e′|` with product vectors `|e⟩ = ⊗ product_a`
/// and `|e′⟩ = ⊗ product_b` over `labels`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductDecomposition {
    pub p: f64,
    pub product_a: Vec<Qubit>,
    pub product_b: Vec<Qubit>,
    pub labels: Vec<usize>,
}

impl ProductDecomposition {
    pub fn vector_a(&self) -> Vec<Complex64> {
        kron_factors(&self.product_a)
    }

    pub fn vector_b(&self) -> Vec<Complex64> {
        kron_factors(&self.product_b)
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        let (a, b) = (self.vector_a(), self.vector_b());
        let d = a.len();
        let (oa, ob) = (ComplexMatrix::outer(&a, &a), ComplexMatrix::outer(&b, &b));
        ComplexMatrix::from_fn(d, d, |i, j| oa[(i, j)] * self.p + ob[(i, j)] * (1.0 - self.p))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Rank2Outcome {
    /// Exactly two product vectors span the range and mix to `ρ`.
    Decomposed(ProductDecomposition),
    /// No convex decomposition into product vectors exists.
    Entangled,
    /// Every vector in the range is a product; one representative is given.
    InfiniteFamily(ProductDecomposition),
}

/// Visits the coefficients `(α, β, γ)` of every 2×2 minor of every
/// single-qubit reshaping of `s v1 + t v2`, each minor being the homogeneous
/// quadratic `α s² + β s t + γ t²`.
fn for_each_minor(v1: &[Complex64], v2: &[Complex64], m: usize, mut visit: impl FnMut([Complex64; 3])) {
    for q in 0..m {
        let bit = 1usize << (m - 1 - q);
        let cols: Vec<usize> = (0..1usize << m).filter(|i| i & bit == 0).collect();
        for (x, &c1) in cols.iter().enumerate() {
            let (a0c1, a1c1, b0c1, b1c1) = (v1[c1], v1[c1 | bit], v2[c1], v2[c1 | bit]);
            for &c2 in &cols[x + 1..] {
                let (a0c2, a1c2, b0c2, b1c2) = (v1[c2], v1[c2 | bit], v2[c2], v2[c2 | bit]);
                visit([
                    a0c1 * a1c2 - a0c2 * a1c1,
                    a0c1 * b1c2 + b0c1 * a1c2 - a0c2 * b1c1 - b0c2 * a1c1,
                    b0c1 * b1c2 - b0c2 * b1c1,
                ]);
            }
        }
    }
}

/// Projective roots `(s, t)` of `α s² + β s t + γ t²`, normalized.
fn homogeneous_roots([a, b, g]: [Complex64; 3]) -> Vec<(Complex64, Complex64)> {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    // Solve in the affine chart of the larger outer coefficient.
    let (lead, tail, flip) = if a.norm() >= g.norm() { (a, g, false) } else { (g, a, true) };
    let xs: Vec<Complex64> = if lead.norm() == 0.0 {
        // Pure β s t: the coordinate axes.
        return vec![(one, zero), (zero, one)];
    } else {
        let sq = (b * b - lead * tail * 4.0).sqrt();
        let sign = if (b.conj() * sq).re >= 0.0 { 1.0 } else { -1.0 };
        let qv = -(b + sq * sign) / 2.0;
        if qv.norm() == 0.0 {
            vec![zero, zero]
        } else {
            vec![qv / lead, tail / qv]
        }
    };
    xs.into_iter()
        .map(|x| {
            let (s, t) = if flip { (one, x) } else { (x, one) };
            let n = (s.norm_sqr() + t.norm_sqr()).sqrt();
            (s / n, t / n)
        })
        .collect()
}

/// Decides a rank-2 density operator by locating the product vectors in its
/// range. Errors when the numerical rank (eigenvalues above `RANK_TOL`) is
/// not 2.
pub fn rank2_product_decomposition(rho: &DensityOperator) -> Result<Rank2Outcome> {
    let e = rho.eigen();
    let rank = e.values.iter().filter(|&&l| l > RANK_TOL).count();
    if rank != 2 {
        return Err(Error::RankNotTwo { rank });
    }
    let d = e.values.len();
    Ok(decompose_range(
        [e.values[d - 1], e.values[d - 2]],
        &e.vector(d - 1),
        &e.vector(d - 2),
        rho.qubit_labels(),
    ))
}

/// Core of [`rank2_product_decomposition`] for `ρ = λ1 |v1⟩⟨v1| + λ2 |v2⟩⟨v2|`
/// with orthonormal `v1`, `v2` and `λ1, λ2 > 0`.
pub(crate) fn decompose_range(
    lambda: [f64; 2],
    v1: &[Complex64],
    v2: &[Complex64],
    labels: &[usize],
) -> Rank2Outcome {
    let m = labels.len();
    let p_eig = lambda[0] / (lambda[0] + lambda[1]);
    let infinite = || match (product_factors(v1, m), product_factors(v2, m)) {
        (Some(product_a), Some(product_b)) => Rank2Outcome::InfiniteFamily(ProductDecomposition {
            p: p_eig,
            product_a,
            product_b,
            labels: labels.to_vec(),
        }),
        _ => Rank2Outcome::Entangled,
    };
    if m == 1 {
        return infinite();
    }

    let row_norm = |r: &[Complex64; 3]| r.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let mut best = [Complex64::new(0.0, 0.0); 3];
    let mut best_norm = 0.0;
    for_each_minor(v1, v2, m, |r| {
        let n = row_norm(&r);
        if n > best_norm {
            best = r;
            best_norm = n;
        }
    });
    if best_norm <= VANISHING_MINOR {
        return infinite();
    }

    let candidates = homogeneous_roots(best);
    let mut worst = vec![0.0f64; candidates.len()];
    for_each_minor(v1, v2, m, |r| {
        for (w, (s, t)) in worst.iter_mut().zip(&candidates) {
            *w = w.max((r[0] * s * s + r[1] * s * t + r[2] * t * t).norm());
        }
    });
    let mut found: Vec<((Complex64, Complex64), Vec<Qubit>)> = Vec::new();
    for (&(s, t), w) in candidates.iter().zip(worst) {
        if w > MINOR_RESIDUAL_TOL * best_norm {
            continue;
        }
        let v: Vec<Complex64> = v1.iter().zip(v2).map(|(a, b)| a * s + b * t).collect();
        let psi = match PureState::from_unnormalized(v) {
            Ok(p) => p,
            Err(_) => continue,
        };
        if let (true, Some(f)) = is_pure_product(&psi) {
            let duplicate = found
                .iter()
                .any(|((s0, t0), _)| (s0.conj() * s + t0.conj() * t).norm() > 1.0 - 1e-9);
            if !duplicate {
                found.push(((s, t), f));
            }
        }
    }
    if found.len() < 2 {
        return Rank2Outcome::Entangled;
    }

    // Φ has the range coordinates of the product vectors as columns;
    // ρ = V Φ W Φ† V† with W = Φ⁻¹ Λ Φ⁻†.
    let ((s1, t1), _) = found[0];
    let ((s2, t2), _) = found[1];
    let det = s1 * t2 - s2 * t1;
    let inv = [[t2 / det, -s2 / det], [-t1 / det, s1 / det]];
    let w = |i: usize, j: usize| -> Complex64 {
        (0..2).map(|k| inv[i][k] * lambda[k] * inv[j][k].conj()).sum()
    };
    let (w00, w11, w01) = (w(0, 0).re, w(1, 1).re, w(0, 1));
    if w01.norm() > RECONSTRUCTION_TOL || w00 <= 0.0 || w11 <= 0.0 {
        return Rank2Outcome::Entangled;
    }
    let p = w00 / (w00 + w11);
    let total = lambda[0] + lambda[1];
    // Reconstruction Φ diag(p, 1−p) Φ† against Λ, in range coordinates.
    let phi = [[s1, s2], [t1, t2]];
    let weights = [p * total, (1.0 - p) * total];
    for i in 0..2 {
        for j in 0..2 {
            let r: Complex64 = (0..2).map(|k| phi[i][k] * weights[k] * phi[j][k].conj()).sum();
            let target = if i == j { lambda[i] } else { 0.0 };
            if (r - target).norm() > RECONSTRUCTION_TOL {
                return Rank2Outcome::Entangled;
            }
        }
    }
    Rank2Outcome::Decomposed(ProductDecomposition {
        p,
        product_a: found[0].1.clone(),
        product_b: found[1].1.clone(),
        labels: labels.to_vec(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separability {
    Separable,
    Entangled,
    /// Outside the regimes with an exact desk-scale decision and no
    /// negativity witness found.
    Undecided,
}

/// Three-valued separability decision. Exact for rank ≤ 2, for two qubits
/// (PPT), and for permutation-symmetric states of two or three qubits when
/// `symmetric_hint` is set (negativity zero ⇔ separable). Otherwise reports
/// entanglement only when some single-qubit cut has negativity above
/// `ENTANGLEMENT_TOL`.
pub fn is_separable_residual(rho: &DensityOperator, symmetric_hint: bool) -> Separability {
    let m = rho.num_qubits();
    let witness = |mask_filter: &dyn Fn(usize) -> bool| {
        bipartition_masks(m)
            .filter(|&mask| mask_filter(mask))
            .any(|mask| negativity_of_pt(&partial_transpose_masked(rho.matrix(), mask)) > ENTANGLEMENT_TOL)
    };
    let verdict = |entangled: bool| {
        if entangled {
            Separability::Entangled
        } else {
            Separability::Separable
        }
    };
    if m <= 1 {
        return Separability::Separable;
    }
    if m == 2 {
        return verdict(witness(&|_| true));
    }
    let e = rho.eigen();
    let d = e.values.len();
    let rank = e.values.iter().filter(|&&l| l > RANK_TOL).count();
    match rank {
        1 => return verdict(product_factors(&e.vector(d - 1), m).is_none()),
        2 => {
            let outcome = decompose_range(
                [e.values[d - 1], e.values[d - 2]],
                &e.vector(d - 1),
                &e.vector(d - 2),
                rho.qubit_labels(),
            );
            return verdict(outcome == Rank2Outcome::Entangled);
        }
        _ => {}
    }
    if symmetric_hint && m == 3 {
        return verdict(witness(&|_| true));
    }
    let single = |mask: usize| mask.count_ones() == 1 || mask.count_ones() as usize == m - 1;
    if witness(&single) {
        Separability::Entangled
    } else {
        Separability::Undecided
    }
}
