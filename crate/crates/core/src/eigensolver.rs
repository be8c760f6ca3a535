//! Ground states in a fixed Sz sector.
//!
//! [`lanczos_ground_state`] runs a single-vector Lanczos iteration with full
//! reorthogonalization and recombines the stored Krylov vectors into the
//! ground-state eigenvector. [`dense_spectrum`] diagonalizes the assembled
//! sector matrix and exists to validate the iterative path.

use std::sync::Arc;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::basis::SectorBasis;
use crate::error::{param, Error, Result};
use crate::model::{ModelSpec, SectorHamiltonian};

/// Largest sector handed to the dense eigensolver.
pub const DENSE_DIM_CAP: usize = 4000;

const QL_MAX_SWEEPS: usize = 60;
const VECTOR_RESIDUAL_GOAL: f64 = 1e-12;

/// A symmetric operator known only through its action on vectors.
pub trait LinearOperator {
    fn dim(&self) -> usize;
    fn apply(&self, x: &[f64], y: &mut [f64]);
}

impl LinearOperator for SectorHamiltonian<'_> {
    fn dim(&self) -> usize {
        SectorHamiltonian::dim(self)
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        self.apply_into(x, y).expect("operator applied to a vector of the wrong length");
    }
}

impl LinearOperator for DMatrix<f64> {
    fn dim(&self) -> usize {
        self.nrows()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.row(i).iter().zip(x).map(|(a, b)| a * b).sum();
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LanczosConfig {
    pub max_iterations: usize,
    /// Convergence threshold on the change of the lowest Ritz value per step.
    pub tolerance: f64,
    pub seed: u64,
    pub reorthogonalize: bool,
}

impl Default for LanczosConfig {
    fn default() -> Self {
        Self {
            max_iterations: 500,
            tolerance: 1e-12,
            seed: 1,
            reorthogonalize: true,
        }
    }
}

impl LanczosConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return param(format!("tolerance must be positive, got {}", self.tolerance));
        }
        if self.max_iterations < 2 {
            return param(format!("max_iterations must be >= 2, got {}", self.max_iterations));
        }
        Ok(())
    }
}

/// Real amplitudes over a sector basis.
#[derive(Debug, Clone)]
pub struct WaveFunction {
    basis: Arc<SectorBasis>,
    amplitudes: Vec<f64>,
}

impl WaveFunction {
    pub fn new(basis: Arc<SectorBasis>, amplitudes: Vec<f64>) -> Result<Self> {
        if amplitudes.len() != basis.dim() {
            return param(format!(
                "{} amplitudes for a sector of dimension {}",
                amplitudes.len(),
                basis.dim()
            ));
        }
        Ok(Self { basis, amplitudes })
    }

    /// Builds a normalized state from unnormalized amplitudes.
    pub fn normalized(basis: Arc<SectorBasis>, mut amplitudes: Vec<f64>) -> Result<Self> {
        let norm = norm(&amplitudes);
        if !(norm > 0.0) || !norm.is_finite() {
            return param("cannot normalize a zero or non-finite vector");
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Self::new(basis, amplitudes)
    }

    pub fn basis(&self) -> &SectorBasis {
        &self.basis
    }

    pub fn shared_basis(&self) -> &Arc<SectorBasis> {
        &self.basis
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn site_count(&self) -> usize {
        self.basis.site_count()
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// Amplitude of a raw configuration, zero outside the sector.
    pub fn amplitude_of(&self, bits: u32) -> f64 {
        self.basis
            .index_of_bits(bits)
            .map_or(0.0, |k| self.amplitudes[k])
    }
}

#[derive(Debug, Clone)]
pub struct GroundStateResult {
    pub energy: f64,
    pub wavefunction: WaveFunction,
    pub iterations_used: usize,
    /// E1 - E0 within the sector.
    pub sector_gap: f64,
    pub degenerate: bool,
    /// ‖Hψ − E0ψ‖₂ of the returned vector.
    pub residual: f64,
    /// Lowest Ritz value after each Lanczos step.
    pub ritz_history: Vec<f64>,
}

pub fn degeneracy_threshold(energy: f64) -> f64 {
    1e-8 * energy.abs().max(1.0)
}

pub fn residual_target(energy: f64) -> f64 {
    1e-8 * energy.abs().max(1.0)
}

/// Eigendecomposition of a symmetric tridiagonal matrix.
#[derive(Debug, Clone)]
pub struct TridiagonalEigen {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Column-major `n × n`; column `k` belongs to `eigenvalues[k]`.
    pub eigenvectors: Vec<f64>,
}

impl TridiagonalEigen {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn vector(&self, k: usize) -> &[f64] {
        let n = self.dim();
        &self.eigenvectors[k * n..(k + 1) * n]
    }
}

pub fn solve_symmetric_tridiagonal(alpha: &[f64], beta: &[f64]) -> Result<TridiagonalEigen> {
    if alpha.is_empty() {
        return param("empty tridiagonal matrix");
    }
    if beta.len() + 1 != alpha.len() {
        return param(format!(
            "off-diagonal length {} does not match diagonal length {}",
            beta.len(),
            alpha.len()
        ));
    }
    let n = alpha.len();
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }
    let mut d = alpha.to_vec();
    implicit_ql(&mut d, beta, Some(&mut z))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let eigenvalues = order.iter().map(|&k| d[k]).collect();
    let mut eigenvectors = Vec::with_capacity(n * n);
    for &k in &order {
        eigenvectors.extend_from_slice(&z[k * n..(k + 1) * n]);
    }
    Ok(TridiagonalEigen {
        eigenvalues,
        eigenvectors,
    })
}

/// Ascending eigenvalues only; O(n²).
pub fn tridiagonal_eigenvalues(alpha: &[f64], beta: &[f64]) -> Result<Vec<f64>> {
    if alpha.is_empty() || beta.len() + 1 != alpha.len() {
        return param("tridiagonal dimensions inconsistent");
    }
    let mut d = alpha.to_vec();
    implicit_ql(&mut d, beta, None)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix. On return `d` holds the
/// (unsorted) eigenvalues and the columns of `z`, if given, the eigenvectors.
fn implicit_ql(d: &mut [f64], beta: &[f64], mut z: Option<&mut [f64]>) -> Result<()> {
    let n = d.len();
    let mut e = vec![0.0; n];
    e[..n - 1].copy_from_slice(beta);

    for l in 0..n {
        let mut sweeps = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > QL_MAX_SWEEPS {
                return Err(Error::Numerical(
                    "tridiagonal QL iteration did not converge".into(),
                ));
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = z.as_deref_mut() {
                    let (lo, hi) = z.split_at_mut((i + 1) * n);
                    let col_i = &mut lo[i * n..];
                    let col_next = &mut hi[..n];
                    for (zi, zn) in col_i.iter_mut().zip(col_next.iter_mut()) {
                        let f = *zn;
                        *zn = s * *zi + c * f;
                        *zi = c * *zi - s * f;
                    }
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    // Independent partial sums let the compiler vectorize.
    let mut acc = [0.0f64; 8];
    let (ca, cb) = (a.chunks_exact(8), b.chunks_exact(8));
    let tail: f64 = ca.remainder().iter().zip(cb.remainder()).map(|(x, y)| x * y).sum();
    for (x, y) in ca.zip(cb) {
        for k in 0..8 {
            acc[k] += x[k] * y[k];
        }
    }
    acc.iter().sum::<f64>() + tail
}

#[inline]
fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

fn norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

/// Gram-Schmidt of `w` against the length-`n` vectors packed in `stored`,
/// repeated once when the first pass removes most of `w`.
fn orthogonalize(w: &mut [f64], stored: &[f64], n: usize) {
    for _pass in 0..2 {
        let before = norm(w);
        for q in stored.chunks_exact(n) {
            let c = dot(q, w);
            axpy(-c, q, w);
        }
        if norm(w) > 0.7 * before {
            break;
        }
    }
}

/// Deterministic start vector from a 64-bit LCG, entries in (-1, 1).
pub fn start_vector(dim: usize, seed: u64) -> Vec<f64> {
    let mut state = seed ^ 0x9E37_79B9_7F4A_7C15;
    (0..dim)
        .map(|_| {
            state = state
                .wrapping_mul(6_364_136_223_846_793_005)
                .wrapping_add(1_442_695_040_888_963_407);
            let unit = (state >> 11) as f64 / (1u64 << 53) as f64;
            2.0 * unit - 1.0
        })
        .collect()
}

/// Flips the sign so the largest-magnitude entry is positive.
fn fix_sign(v: &mut [f64]) {
    let mut best = 0.0f64;
    let mut sign = 1.0;
    for &x in v.iter() {
        if x.abs() > best {
            best = x.abs();
            sign = x.signum();
        }
    }
    if sign < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// Lowest eigenpair of a symmetric operator.
#[derive(Debug, Clone)]
pub struct LanczosOutcome {
    pub energy: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub gap: f64,
    pub residual: f64,
    pub ritz_history: Vec<f64>,
    pub converged: bool,
}

pub fn lanczos_lowest<Op: LinearOperator + ?Sized>(
    op: &Op,
    cfg: &LanczosConfig,
) -> Result<LanczosOutcome> {
    cfg.validate()?;
    let n = op.dim();
    if n == 0 {
        return param("operator dimension is zero");
    }

    let mut basis_vectors: Vec<f64> = Vec::new();
    let mut v = start_vector(n, cfg.seed);
    let start_norm = norm(&v);
    v.iter_mut().for_each(|x| *x /= start_norm);

    let mut alphas: Vec<f64> = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut history: Vec<f64> = Vec::new();
    let mut w = vec![0.0; n];
    let mut hpsi = vec![0.0; n];
    let mut scale = 0.0f64;
    let steps = cfg.max_iterations.min(n);
    let mut best: Option<LanczosOutcome> = None;

    for j in 0..steps {
        basis_vectors.extend_from_slice(&v);
        op.apply(&v, &mut w);
        let alpha = dot(&v, &w);
        axpy(-alpha, &v, &mut w);
        if j > 0 {
            let prev = &basis_vectors[(j - 1) * n..j * n];
            axpy(-betas[j - 1], prev, &mut w);
        }
        if cfg.reorthogonalize {
            orthogonalize(&mut w, &basis_vectors, n);
        }
        let beta = norm(&w);
        alphas.push(alpha);
        scale = scale.max(alpha.abs() + beta);

        let ritz = tridiagonal_eigenvalues(&alphas, &betas)?;
        let lowest = ritz[0];
        let previous = history.last().copied();
        history.push(lowest);

        let breakdown = beta <= 1e-13 * scale.max(1.0);
        let exhausted = j + 1 == steps;
        let stalled = previous.is_some_and(|p| (p - lowest).abs() < cfg.tolerance);

        if stalled || breakdown || exhausted || j == 0 && n == 1 {
            let tri = solve_symmetric_tridiagonal(&alphas, &betas)?;
            let y = tri.vector(0);
            let estimate = beta * y[j].abs();
            let target = residual_target(lowest);
            // Observables linear in the eigenvector error (site magnetization)
            // need far less than the acceptance residual.
            if estimate <= VECTOR_RESIDUAL_GOAL * lowest.abs().max(1.0) || breakdown || exhausted {
                let mut psi = vec![0.0; n];
                for (coef, q) in y.iter().zip(basis_vectors.chunks_exact(n)) {
                    axpy(*coef, q, &mut psi);
                }
                let psi_norm = norm(&psi);
                psi.iter_mut().for_each(|x| *x /= psi_norm);
                fix_sign(&mut psi);
                op.apply(&psi, &mut hpsi);
                axpy(-lowest, &psi, &mut hpsi);
                let residual = norm(&hpsi);
                let gap = if n == 1 {
                    f64::INFINITY
                } else {
                    deflated_gap(op, cfg, &psi, lowest)?
                };
                let outcome = LanczosOutcome {
                    energy: lowest,
                    vector: psi,
                    iterations: j + 1,
                    gap,
                    residual,
                    ritz_history: history.clone(),
                    converged: residual <= target,
                };
                if outcome.converged {
                    return Ok(outcome);
                }
                best = Some(outcome);
            }
        }
        if breakdown || exhausted {
            break;
        }
        betas.push(beta);
        v.iter_mut().zip(&w).for_each(|(vi, wi)| *vi = wi / beta);
    }
    Ok(best.expect("final Lanczos step always forms an estimate"))
}

/// E1 − E0 from a second Lanczos run on the complement of `ground`.
///
/// A single Krylov sequence cannot see an exactly degenerate partner of the
/// ground state, so the gap is taken from this deflated pass rather than from
/// the second Ritz value of the first one. Ritz values bound E1 from above,
/// so the pass stops as soon as one falls below the degeneracy threshold.
fn deflated_gap<Op: LinearOperator + ?Sized>(
    op: &Op,
    cfg: &LanczosConfig,
    ground: &[f64],
    energy: f64,
) -> Result<f64> {
    let n = ground.len();
    let threshold = degeneracy_threshold(energy);
    let residual_goal = threshold;

    let mut v = start_vector(n, cfg.seed.wrapping_add(1));
    let overlap = dot(ground, &v);
    axpy(-overlap, ground, &mut v);
    let start_norm = norm(&v);
    v.iter_mut().for_each(|x| *x /= start_norm);

    let mut stored: Vec<f64> = ground.to_vec();
    let mut alphas = Vec::new();
    let mut betas: Vec<f64> = Vec::new();
    let mut w = vec![0.0; n];
    let mut previous = f64::INFINITY;
    let mut scale = 0.0f64;
    let steps = cfg.max_iterations.min(n - 1);

    for j in 0..steps {
        stored.extend_from_slice(&v);
        op.apply(&v, &mut w);
        let alpha = dot(&v, &w);
        alphas.push(alpha);
        orthogonalize(&mut w, &stored, n);
        let beta = norm(&w);
        scale = scale.max(alpha.abs() + beta);
        let lowest = tridiagonal_eigenvalues(&alphas, &betas)?[0];
        if lowest - energy < threshold || beta <= 1e-13 * scale.max(1.0) || j + 1 == steps {
            return Ok(lowest - energy);
        }
        if (previous - lowest).abs() < cfg.tolerance.max(1e-12 * scale) {
            let tri = solve_symmetric_tridiagonal(&alphas, &betas)?;
            if beta * tri.vector(0)[j].abs() <= residual_goal {
                return Ok(lowest - energy);
            }
        }
        previous = lowest;
        betas.push(beta);
        v.iter_mut().zip(&w).for_each(|(vi, wi)| *vi = wi / beta);
    }
    Ok(previous - energy)
}

pub fn lanczos_ground_state(
    model: &ModelSpec,
    basis: &Arc<SectorBasis>,
    cfg: &LanczosConfig,
) -> Result<GroundStateResult> {
    if basis.dim() == 0 {
        return param("sector basis is empty");
    }
    let h = SectorHamiltonian::new(model, basis)?;
    let outcome = lanczos_lowest(&h, cfg)?;
    let result = GroundStateResult {
        energy: outcome.energy,
        wavefunction: WaveFunction::new(Arc::clone(basis), outcome.vector)?,
        iterations_used: outcome.iterations,
        sector_gap: outcome.gap,
        degenerate: outcome.gap < degeneracy_threshold(outcome.energy),
        residual: outcome.residual,
        ritz_history: outcome.ritz_history,
    };
    if outcome.converged {
        Ok(result)
    } else {
        Err(Error::NotConverged {
            iterations: outcome.iterations,
            residual: outcome.residual,
            best: Box::new(result),
        })
    }
}

/// Full spectrum of the assembled sector matrix.
#[derive(Debug, Clone)]
pub struct DenseSpectrum {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Columns ordered like `eigenvalues`.
    pub eigenvectors: DMatrix<f64>,
}

impl DenseSpectrum {
    pub fn ground_energy(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn ground_state(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.eigenvectors.column(0).iter().copied().collect();
        fix_sign(&mut v);
        v
    }
}

pub fn dense_symmetric_eigen(matrix: DMatrix<f64>) -> DenseSpectrum {
    let eig = SymmetricEigen::new(matrix);
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let eigenvectors = DMatrix::from_fn(n, n, |i, c| eig.eigenvectors[(i, order[c])]);
    DenseSpectrum {
        eigenvalues,
        eigenvectors,
    }
}

pub fn dense_spectrum(model: &ModelSpec, basis: &SectorBasis) -> Result<DenseSpectrum> {
    if basis.dim() > DENSE_DIM_CAP {
        return param(format!(
            "sector dimension {} exceeds dense cap {DENSE_DIM_CAP}",
            basis.dim()
        ));
    }
    let h = SectorHamiltonian::new(model, basis)?;
    Ok(dense_symmetric_eigen(h.to_dense()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::enumerate_sector;
    use crate::model::{build_dimerized_chain, build_xxz_chain, Bond};

    #[test]
    fn tridiagonal_small_cases() {
        let t = solve_symmetric_tridiagonal(&[3.5], &[]).unwrap();
        assert_eq!(t.eigenvalues, vec![3.5]);
        let t = solve_symmetric_tridiagonal(&[0.0, 0.0], &[1.0]).unwrap();
        assert!((t.eigenvalues[0] + 1.0).abs() < 1e-15);
        assert!((t.eigenvalues[1] - 1.0).abs() < 1e-15);
        assert!(solve_symmetric_tridiagonal(&[], &[]).is_err());
        assert!(solve_symmetric_tridiagonal(&[1.0, 2.0], &[]).is_err());
    }

    #[test]
    fn tridiagonal_vectors_are_eigenvectors() {
        let alpha = [2.0, -1.0, 0.5, 3.0, 0.0];
        let beta = [1.0, 0.25, -2.0, 0.0];
        let t = solve_symmetric_tridiagonal(&alpha, &beta).unwrap();
        for k in 0..5 {
            let y = t.vector(k);
            for i in 0..5 {
                let mut ty = alpha[i] * y[i];
                if i > 0 {
                    ty += beta[i - 1] * y[i - 1];
                }
                if i < 4 {
                    ty += beta[i] * y[i + 1];
                }
                assert!((ty - t.eigenvalues[k] * y[i]).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn config_validation() {
        let mut cfg = LanczosConfig::default();
        cfg.tolerance = 0.0;
        assert!(cfg.validate().is_err());
        cfg = LanczosConfig { max_iterations: 1, ..Default::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn singlet_bond_spectrum() {
        let model = ModelSpec::custom(2, vec![Bond::heisenberg(0, 1, 1.0)]).unwrap();
        let basis = enumerate_sector(2, 1).unwrap();
        let spec = dense_spectrum(&model, &basis).unwrap();
        assert!((spec.eigenvalues[0] + 0.75).abs() < 1e-14);
        assert!((spec.eigenvalues[1] - 0.25).abs() < 1e-14);
    }

    #[test]
    fn dimer_product_of_singlets() {
        let model = build_dimerized_chain(4, 1.0, 0.0).unwrap();
        let basis = Arc::new(enumerate_sector(4, 2).unwrap());
        let gs = lanczos_ground_state(&model, &basis, &LanczosConfig::default()).unwrap();
        assert!((gs.energy + 1.5).abs() < 1e-12);
        assert!((gs.wavefunction.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn one_dimensional_sector() {
        let model = build_xxz_chain(4, 1.0, 1.0).unwrap();
        let basis = Arc::new(enumerate_sector(4, 0).unwrap());
        let gs = lanczos_ground_state(&model, &basis, &LanczosConfig::default()).unwrap();
        assert!((gs.energy - 1.0).abs() < 1e-14);
        assert_eq!(gs.wavefunction.amplitudes(), &[1.0]);
        assert!(gs.sector_gap.is_infinite());
        assert!(!gs.degenerate);
    }

    #[test]
    fn sign_convention() {
        let model = build_xxz_chain(6, 1.0, 0.5).unwrap();
        let basis = Arc::new(enumerate_sector(6, 3).unwrap());
        let gs = lanczos_ground_state(&model, &basis, &LanczosConfig::default()).unwrap();
        let amps = gs.wavefunction.amplitudes();
        let k = (0..amps.len())
            .max_by(|&a, &b| amps[a].abs().total_cmp(&amps[b].abs()))
            .unwrap();
        assert!(amps[k] > 0.0);
    }

    #[test]
    fn not_converged_carries_estimate() {
        let model = build_xxz_chain(12, 1.0, 0.5).unwrap();
        let basis = Arc::new(enumerate_sector(12, 6).unwrap());
        let cfg = LanczosConfig { max_iterations: 4, ..Default::default() };
        match lanczos_ground_state(&model, &basis, &cfg) {
            Err(Error::NotConverged { iterations, best, .. }) => {
                assert_eq!(iterations, 4);
                assert_eq!(best.ritz_history.len(), 4);
                assert!(best.energy.is_finite());
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn dense_cap() {
        let model = build_xxz_chain(16, 1.0, 1.0).unwrap();
        let basis = enumerate_sector(16, 8).unwrap();
        assert!(dense_spectrum(&model, &basis).is_err());
    }

    #[test]
    fn start_vector_is_deterministic() {
        assert_eq!(start_vector(16, 3), start_vector(16, 3));
        assert_ne!(start_vector(16, 3), start_vector(16, 4));
        assert!(start_vector(1000, 1).iter().all(|x| x.abs() < 1.0));
    }
}
