//! Command implementations behind the `qfragile` binary. Each command turns
//! its inputs into the full text it prints or writes, so the binary only
//! parses flags and maps errors to exit codes.
//!
//! Qubits are numbered from 1 in all command output.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::dicke_family::{
    a_coeff, det_pt_rho12, in_s, negativity_rho12, region_predicate, rho12_brute_force,
    rho12_closed_form, t_loss_negativity, FamilyPoint, SQRT6,
};
use crate::linalg::random::haar_vector;
use crate::robustness::{analyze_fragility, fit_plane, ghz_class_ilo, regular_polygon_test, symmetric_fragile_form};
use crate::separability::has_npt_bipartition;
use crate::state::file::{load_state, LoadedState, StateFileError};
use crate::state::{symmetric_to_majorana, PureState, SymmetricState};

/// Version of the CSV layouts written by the sweep commands.
pub const SCHEMA_VERSION: u32 = 1;
/// Largest register accepted by `random-sweep`.
pub const MAX_SWEEP_QUBITS: usize = 12;
/// Largest register accepted by `dicke-sweep --verify`.
pub const MAX_VERIFY_QUBITS: usize = 10;
/// Default negativity threshold for calling a residual state entangled.
pub const DEFAULT_WITNESS_TOL: f64 = 1e-9;
/// Default closed-form versus brute-force tolerance for `--verify`.
pub const DEFAULT_VERIFY_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Normalization(String),
    #[error("{0}")]
    Size(String),
    #[error("{0}")]
    Symmetry(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Normalization(_) => 3,
            CliError::Size(_) => 4,
            CliError::Symmetry(_) => 5,
            CliError::Io(_) => 6,
        }
    }
}

impl From<StateFileError> for CliError {
    fn from(e: StateFileError) -> Self {
        match e {
            StateFileError::Io { .. } => CliError::Io(e.to_string()),
            StateFileError::NotNormalized { .. } => CliError::Normalization(e.to_string()),
            StateFileError::Parse { .. } | StateFileError::Invalid(_) => CliError::Parse(e.to_string()),
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::NotSymmetric { pair, residual } => CliError::Symmetry(format!(
                "state is not permutation symmetric: swapping qubits {} and {} leaves residual {residual:.3e}",
                pair.0 + 1,
                pair.1 + 1
            )),
            crate::Error::NotNormalized { .. } => CliError::Normalization(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

/// Writes `text` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

/// Seventeen significant digits; negative zero prints as zero.
pub fn fmt_f64(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

fn fmt_c(z: Complex64) -> String {
    format!("{}{}{}i", fmt_f64(z.re), if z.im < 0.0 { "" } else { "+" }, fmt_f64(z.im))
}

fn fmt_set(qubits: &[usize]) -> String {
    let inner: Vec<String> = qubits.iter().map(|q| (q + 1).to_string()).collect();
    format!("{{{}}}", inner.join(", "))
}

fn header(cmd: &str, tolerance: f64, seed: Option<u64>) -> String {
    let seed = seed.map_or_else(|| "none".to_string(), |s| s.to_string());
    format!(
        "# qfragile {cmd} schema_version={SCHEMA_VERSION} version={} tolerance={} seed={seed}\n",
        env!("CARGO_PKG_VERSION"),
        fmt_f64(tolerance)
    )
}

fn csv_block(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(columns).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ASCII output")
}

pub fn load(path: &Path, renormalize: bool) -> Result<LoadedState, CliError> {
    Ok(load_state(path, renormalize)?)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Serialize)]
struct CanonicalJson {
    p: f64,
    orthogonal_set: Vec<usize>,
    e_states: Vec<[[f64; 2]; 2]>,
    e_prime_states: Vec<[[f64; 2]; 2]>,
    overlaps: Vec<f64>,
    reconstruction_error: f64,
}

#[derive(Serialize)]
struct AnalyzeJson {
    num_qubits: usize,
    fragile: Vec<bool>,
    fragile_set: Vec<usize>,
    ghz_class: bool,
    canonical_form: Option<CanonicalJson>,
    ilo: Option<Vec<[[[f64; 2]; 2]; 2]>>,
    ilo_fidelity: Option<f64>,
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Per-qubit fragility, fragile set, canonical form and (for GHZ-class
/// states) the local operation to `|GHZ_N⟩`. Requires at least three qubits.
pub fn analyze(state: &LoadedState, format: Format) -> Result<String, CliError> {
    let psi = &state.pure;
    let n = psi.num_qubits();
    if n < 3 {
        return Err(CliError::Size(format!(
            "analyze requires N ≥ 3 qubits (fragility under particle loss needs at least three parties), found N = {n}"
        )));
    }
    let report = analyze_fragility(psi)?;
    let ilo = ghz_class_ilo(psi)?;
    let ilo_fidelity = ilo.as_ref().map(|op| {
        let out = op.apply(psi).expect("matching size");
        let ghz = PureState::ghz(n);
        let nrm = crate::linalg::matrix::norm(&out);
        (crate::linalg::matrix::inner(ghz.amplitudes(), &out).norm() / nrm).powi(2)
    });
    let reconstruction_error = |c: &crate::robustness::CanonicalForm| {
        c.reconstruct()
            .iter()
            .zip(psi.amplitudes())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    };

    if format == Format::Json {
        let doc = AnalyzeJson {
            num_qubits: n,
            fragile: report.fragile.clone(),
            fragile_set: report.fragile_set.iter().map(|q| q + 1).collect(),
            ghz_class: report.ghz_class,
            canonical_form: report.canonical_form.as_ref().map(|c| CanonicalJson {
                p: c.p,
                orthogonal_set: c.orthogonal_set.iter().map(|q| q + 1).collect(),
                e_states: c.e_states.iter().map(|q| [pair(q[0]), pair(q[1])]).collect(),
                e_prime_states: c.e_prime_states.iter().map(|q| [pair(q[0]), pair(q[1])]).collect(),
                overlaps: c.overlaps.clone(),
                reconstruction_error: reconstruction_error(c),
            }),
            ilo: ilo.as_ref().map(|op| {
                op.factors()
                    .iter()
                    .map(|m| [[pair(m[(0, 0)]), pair(m[(0, 1)])], [pair(m[(1, 0)]), pair(m[(1, 1)])]])
                    .collect()
            }),
            ilo_fidelity,
        };
        return Ok(serde_json::to_string_pretty(&doc).expect("plain data") + "\n");
    }

    let mut out = String::new();
    writeln!(out, "qubits: {n}").unwrap();
    for (k, f) in report.fragile.iter().enumerate() {
        writeln!(out, "qubit {}: {}", k + 1, if *f { "fragile" } else { "robust" }).unwrap();
    }
    writeln!(out, "fragile set: {}", fmt_set(&report.fragile_set)).unwrap();
    writeln!(out, "ghz class: {}", report.ghz_class).unwrap();
    match &report.canonical_form {
        None => writeln!(out, "canonical form: none").unwrap(),
        Some(c) => {
            writeln!(out, "canonical form:").unwrap();
            writeln!(out, "  p: {}", fmt_f64(c.p)).unwrap();
            writeln!(out, "  orthogonal set: {}", fmt_set(&c.orthogonal_set)).unwrap();
            for (i, ((e, f), o)) in c.e_states.iter().zip(&c.e_prime_states).zip(&c.overlaps).enumerate() {
                writeln!(
                    out,
                    "  qubit {}: e = ({}, {})  e' = ({}, {})  |<e'|e>| = {}",
                    i + 1,
                    fmt_c(e[0]),
                    fmt_c(e[1]),
                    fmt_c(f[0]),
                    fmt_c(f[1]),
                    fmt_f64(*o)
                )
                .unwrap();
            }
            writeln!(out, "  reconstruction error: {}", fmt_f64(reconstruction_error(c))).unwrap();
        }
    }
    match (&ilo, ilo_fidelity) {
        (Some(op), Some(fid)) => {
            writeln!(out, "ilo to GHZ:").unwrap();
            for (i, m) in op.factors().iter().enumerate() {
                writeln!(
                    out,
                    "  qubit {}: [[{}, {}], [{}, {}]]",
                    i + 1,
                    fmt_c(m[(0, 0)]),
                    fmt_c(m[(0, 1)]),
                    fmt_c(m[(1, 0)]),
                    fmt_c(m[(1, 1)])
                )
                .unwrap();
            }
            writeln!(out, "  fidelity with GHZ: {}", fmt_f64(fid)).unwrap();
        }
        _ => writeln!(out, "ilo to GHZ: not in fragile normal form").unwrap(),
    }
    Ok(out)
}

/// Re-checks an analysis independently of the text it printed: the
/// canonical form must rebuild the state and the local operation must reach
/// `|GHZ_N⟩`, both within `tolerance`.
pub fn verify_analysis(state: &LoadedState, tolerance: f64) -> Result<(), CliError> {
    let psi = &state.pure;
    let report = analyze_fragility(psi)?;
    if let Some(c) = &report.canonical_form {
        let err = c
            .reconstruct()
            .iter()
            .zip(psi.amplitudes())
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if err > tolerance {
            return Err(CliError::Domain(format!("canonical form reconstruction error {err:e} exceeds {tolerance:e}")));
        }
    }
    if let Some(op) = ghz_class_ilo(psi)? {
        let out = op.apply(psi)?;
        let ghz = PureState::ghz(psi.num_qubits());
        let fid = (crate::linalg::matrix::inner(ghz.amplitudes(), &out).norm() / crate::linalg::matrix::norm(&out)).powi(2);
        if 1.0 - fid > tolerance {
            return Err(CliError::Domain(format!("local operation reaches GHZ with fidelity {fid}, short of 1 by more than {tolerance:e}")));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct MajoranaJson {
    num_qubits: usize,
    points: Vec<([f64; 3], usize)>,
    plane_centroid: [f64; 3],
    plane_normal: [f64; 3],
    regular_polygon: bool,
    fragile_form: Option<(f64, f64)>,
}

/// Majorana points with multiplicities, the least-squares plane through
/// them, the polygon verdict and the symmetric fragile form when it exists.
pub fn majorana(state: &LoadedState, format: Format) -> Result<String, CliError> {
    let s = match &state.symmetric {
        Some(s) => s.clone(),
        None => SymmetricState::from_pure(&state.pure)?,
    };
    let points = symmetric_to_majorana(&s)?;
    let (centroid, normal) = fit_plane(&points.expanded());
    let polygon = regular_polygon_test(&points);
    let fragile = if is_entangled_symmetric(&s) {
        symmetric_fragile_form(&s)?.map(|f| (f.a, f.b))
    } else {
        None
    };
    if format == Format::Json {
        let doc = MajoranaJson {
            num_qubits: s.num_qubits(),
            points: points.points().to_vec(),
            plane_centroid: centroid,
            plane_normal: normal,
            regular_polygon: polygon,
            fragile_form: fragile,
        };
        return Ok(serde_json::to_string_pretty(&doc).expect("plain data") + "\n");
    }
    let v3 = |v: &[f64; 3]| format!("({}, {}, {})", fmt_f64(v[0]), fmt_f64(v[1]), fmt_f64(v[2]));
    let mut out = String::new();
    writeln!(out, "qubits: {}", s.num_qubits()).unwrap();
    writeln!(out, "points:").unwrap();
    for (p, m) in points.points() {
        writeln!(out, "  {}  multiplicity {m}", v3(p)).unwrap();
    }
    writeln!(out, "plane centroid: {}", v3(&centroid)).unwrap();
    writeln!(out, "plane normal: {}", v3(&normal)).unwrap();
    writeln!(out, "regular polygon: {polygon}").unwrap();
    match fragile {
        Some((a, b)) => writeln!(out, "fragile form: a = {}, b = {}", fmt_f64(a), fmt_f64(b)).unwrap(),
        None => writeln!(out, "fragile form: none").unwrap(),
    }
    Ok(out)
}

fn is_entangled_symmetric(s: &SymmetricState) -> bool {
    !crate::separability::is_pure_product(&s.to_pure()).0
}

/// Evenly spaced values `start + i·step` for `i = 0..=round((end−start)/step)`.
pub fn grid(start: f64, end: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !(step > 0.0 && start.is_finite() && end.is_finite() && end >= start) {
        return Err(CliError::Parse(format!(
            "invalid range {start}..{end} with step {step}"
        )));
    }
    let count = ((end - start) / step + 1e-9).floor() as usize;
    Ok((0..=count).map(|i| start + i as f64 * step).collect())
}

pub struct DickeSweep {
    pub n: Vec<usize>,
    pub k: Vec<usize>,
    pub u: Vec<f64>,
    pub verify: bool,
    pub verify_tolerance: f64,
}

/// Rows `N, k, u, A, det_pt, negativity` in `N`, then `k`, then `u` order;
/// `--verify` appends the closed-form versus brute-force deviation.
pub fn dicke_sweep(cfg: &DickeSweep) -> Result<String, CliError> {
    let mut points = Vec::new();
    for &n in &cfg.n {
        if cfg.verify && n > MAX_VERIFY_QUBITS {
            return Err(CliError::Size(format!(
                "--verify builds the full state and supports N <= {MAX_VERIFY_QUBITS}, found N = {n}"
            )));
        }
        for &k in &cfg.k {
            for &u in &cfg.u {
                points.push(FamilyPoint::new(n, k, u).map_err(|e| CliError::Parse(e.to_string()))?);
            }
        }
    }
    let rows: Vec<(Vec<String>, f64)> = points
        .par_iter()
        .map(|p| {
            let mut row = vec![
                p.n().to_string(),
                p.k().to_string(),
                fmt_f64(p.u()),
                fmt_f64(a_coeff(p)),
                fmt_f64(det_pt_rho12(p)),
                fmt_f64(negativity_rho12(p)),
            ];
            let mut diff = 0.0;
            if cfg.verify {
                diff = rho12_closed_form(p).matrix().max_abs_diff(rho12_brute_force(p).matrix());
                row.push(fmt_f64(diff));
            }
            (row, diff)
        })
        .collect();
    let worst = rows.iter().map(|r| r.1).fold(0.0, f64::max);
    let mut cols = vec!["N", "k", "u", "A", "det_pt", "negativity"];
    if cfg.verify {
        cols.push("verify_max_abs_diff");
    }
    let rows: Vec<Vec<String>> = rows.into_iter().map(|r| r.0).collect();
    let tol = if cfg.verify { cfg.verify_tolerance } else { 0.0 };
    let mut out = header("dicke-sweep", tol, None);
    out += &csv_block(&cols, &rows);
    if cfg.verify {
        if worst > cfg.verify_tolerance {
            return Err(CliError::Domain(format!(
                "closed form deviates from the partial-trace oracle by {worst:e} > {:e}",
                cfg.verify_tolerance
            )));
        }
        writeln!(out, "# summary verified_rows={} max_abs_diff={}", rows.len(), fmt_f64(worst)).unwrap();
    }
    Ok(out)
}

pub struct MuScan {
    pub t: usize,
    pub re_points: usize,
    pub im_points: usize,
    pub re_max: f64,
    pub im_max: f64,
    pub threshold: f64,
}

impl Default for MuScan {
    fn default() -> Self {
        Self {
            t: 2,
            re_points: 201,
            im_points: 201,
            re_max: SQRT6,
            im_max: 2.5,
            threshold: DEFAULT_WITNESS_TOL,
        }
    }
}

/// Distance from `μ` (with `Im μ ≥ 0`) to the curve `Im μ = √((√6 − Re μ) Re μ)`,
/// the upper half of the circle of radius `√6/2` about `√6/2`.
pub fn distance_to_region_boundary(mu: Complex64) -> f64 {
    let r = SQRT6 / 2.0;
    ((mu - r).norm() - r).abs()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuScanSummary {
    pub in_s_points: usize,
    pub compared: usize,
    pub agree: usize,
    /// In-S points with vanishing negativity.
    pub observed_fragile: usize,
}

impl MuScanSummary {
    pub fn agreement(&self) -> f64 {
        if self.compared == 0 {
            1.0
        } else {
            self.agree as f64 / self.compared as f64
        }
    }
}

/// One μ-plane sample: coordinates, membership in S, negativity after
/// losing `t` qubits, predicted and observed fragility.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MuSample {
    pub mu: Complex64,
    pub in_s: bool,
    pub negativity: f64,
    pub predicted: bool,
    pub observed: bool,
}

/// Predicted fragility: the region formula for `t = 2`; for `t = 1` only
/// `μ = 0` (the GHZ point) is fragile.
fn predicted_fragile(mu: Complex64, t: usize) -> bool {
    if t == 1 {
        mu == Complex64::new(0.0, 0.0)
    } else {
        region_predicate(mu)
    }
}

pub fn mu_scan_samples(cfg: &MuScan) -> Result<Vec<MuSample>, CliError> {
    if !(1..=2).contains(&cfg.t) {
        return Err(CliError::Parse(format!("t must be 1 or 2, found {}", cfg.t)));
    }
    if cfg.re_points < 2 || cfg.im_points < 2 {
        return Err(CliError::Parse("grid needs at least 2 points per axis".into()));
    }
    let re_step = cfg.re_max / (cfg.re_points - 1) as f64;
    let im_step = cfg.im_max / (cfg.im_points - 1) as f64;
    let grid: Vec<Complex64> = (0..cfg.re_points)
        .flat_map(|i| (0..cfg.im_points).map(move |j| Complex64::new(i as f64 * re_step, j as f64 * im_step)))
        .collect();
    Ok(grid
        .par_iter()
        .map(|&mu| {
            let negativity = t_loss_negativity(mu, cfg.t).expect("t validated");
            MuSample {
                mu,
                in_s: in_s(mu),
                negativity,
                predicted: predicted_fragile(mu, cfg.t),
                observed: negativity <= cfg.threshold,
            }
        })
        .collect())
}

/// Agreement of observed and predicted fragility over in-S points farther
/// than `margin` from the predicted boundary (for `t = 2`) or from `μ = 0`
/// (for `t = 1`).
pub fn summarize_mu_scan(samples: &[MuSample], t: usize, margin: f64) -> MuScanSummary {
    let mut s = MuScanSummary {
        in_s_points: 0,
        compared: 0,
        agree: 0,
        observed_fragile: 0,
    };
    for x in samples.iter().filter(|x| x.in_s) {
        s.in_s_points += 1;
        s.observed_fragile += x.observed as usize;
        let d = if t == 1 { x.mu.norm() } else { distance_to_region_boundary(x.mu) };
        if t == 1 && x.mu == Complex64::new(0.0, 0.0) || d > margin {
            s.compared += 1;
            s.agree += (x.predicted == x.observed) as usize;
        }
    }
    s
}

pub fn mu_scan(cfg: &MuScan) -> Result<String, CliError> {
    let samples = mu_scan_samples(cfg)?;
    let margin = (cfg.re_max / (cfg.re_points - 1) as f64).max(cfg.im_max / (cfg.im_points - 1) as f64);
    let summary = summarize_mu_scan(&samples, cfg.t, margin);
    let b = |x: bool| if x { "true" } else { "false" }.to_string();
    let rows: Vec<Vec<String>> = samples
        .iter()
        .map(|x| {
            vec![
                fmt_f64(x.mu.re),
                fmt_f64(x.mu.im),
                b(x.in_s),
                fmt_f64(x.negativity),
                if x.in_s { b(x.predicted) } else { "NA".into() },
                b(x.observed),
            ]
        })
        .collect();
    let mut out = header("mu-scan", cfg.threshold, None);
    out += "# in_S: mu = sqrt(2) i is exempt from the disc clause only\n";
    let neg_col = format!("negativity_{}", cfg.t);
    out += &csv_block(
        &["Re_mu", "Im_mu", "in_S", &neg_col, "fragile_predicted", "fragile_observed"],
        &rows,
    );
    writeln!(
        out,
        "# summary t={} in_s_points={} compared={} agree={} agreement={} boundary_margin={} observed_fragile={}",
        cfg.t,
        summary.in_s_points,
        summary.compared,
        summary.agree,
        fmt_f64(summary.agreement()),
        fmt_f64(margin),
        summary.observed_fragile
    )
    .unwrap();
    Ok(out)
}

pub struct RandomSweep {
    pub n: usize,
    pub t: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    pub threshold: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomSweepRow {
    pub t: usize,
    pub samples: usize,
    pub certified_robust: usize,
}

impl RandomSweepRow {
    pub fn fraction(&self) -> f64 {
        self.certified_robust as f64 / self.samples as f64
    }
}

/// Haar-random states drawn in sequence from `ChaCha8Rng(seed)`; for each
/// `t`, counts the states whose residual after losing the last `t` qubits
/// has some bipartition with negativity above `threshold`.
pub fn random_sweep_rows(cfg: &RandomSweep) -> Result<Vec<RandomSweepRow>, CliError> {
    if cfg.n < 2 || cfg.n > MAX_SWEEP_QUBITS {
        return Err(CliError::Size(format!(
            "random-sweep supports 2 <= N <= {MAX_SWEEP_QUBITS}, found N = {}",
            cfg.n
        )));
    }
    if cfg.samples == 0 {
        return Err(CliError::Parse("samples must be >= 1".into()));
    }
    if let Some(&t) = cfg.t.iter().find(|&&t| t == 0 || t >= cfg.n) {
        return Err(CliError::Parse(format!("t = {t} outside 1..={}", cfg.n - 1)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let states: Vec<PureState> = (0..cfg.samples)
        .map(|_| PureState::new(haar_vector(1 << cfg.n, &mut rng)).expect("normalized"))
        .collect();
    Ok(cfg
        .t
        .iter()
        .map(|&t| {
            let traced: Vec<usize> = (cfg.n - t..cfg.n).collect();
            let certified = states
                .par_iter()
                .map(|psi| {
                    let rho = psi.partial_trace(&traced).expect("valid cut");
                    has_npt_bipartition(&rho, cfg.threshold) as usize
                })
                .sum();
            RandomSweepRow {
                t,
                samples: cfg.samples,
                certified_robust: certified,
            }
        })
        .collect())
}

/// Largest `t` whose certified-robust fraction is at least one half.
pub fn crossing(rows: &[RandomSweepRow]) -> Option<usize> {
    rows.iter().filter(|r| r.fraction() >= 0.5).map(|r| r.t).max()
}

pub fn random_sweep(cfg: &RandomSweep) -> Result<String, CliError> {
    let rows = random_sweep_rows(cfg)?;
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                cfg.n.to_string(),
                r.t.to_string(),
                r.samples.to_string(),
                r.certified_robust.to_string(),
                (r.samples - r.certified_robust).to_string(),
                fmt_f64(r.fraction()),
            ]
        })
        .collect();
    let mut out = header("random-sweep", cfg.threshold, Some(cfg.seed));
    out += &csv_block(
        &["N", "t", "samples", "certified_robust", "not_certified", "fraction_certified"],
        &table,
    );
    let cross = crossing(&rows).map_or_else(|| "none".to_string(), |t| t.to_string());
    writeln!(out, "# summary crossing_t={cross}").unwrap();
    Ok(out)
}
