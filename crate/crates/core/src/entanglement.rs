//! Reduced density matrices, von Neumann entropy, two-site correlators and
//! concurrence for real wavefunctions in a fixed Sz sector.
//!
//! Since the global up-spin count is fixed, a traced-sublattice configuration
//! fixes the kept up-count too, so the kept-sublattice density matrix is
//! block diagonal in its own magnetization. Blocks are built and
//! diagonalized independently.

use nalgebra::{DMatrix, Matrix4, SymmetricEigen};

use crate::basis::{extract_bits, fixed_weight_words, BipartitionMask};
use crate::eigensolver::WaveFunction;
use crate::error::{param, Error, Result};
use crate::model::{ModelKind, ModelSpec};

/// Eigenvalues below this are treated as numerical noise; below its negative,
/// the matrix is rejected as not positive semidefinite.
pub const PSD_TOLERANCE: f64 = 1e-10;

/// One fixed-up-count block of a reduced density matrix.
#[derive(Debug, Clone)]
pub struct RdmBlock {
    pub up_count: usize,
    /// Compacted kept configurations, ascending; row/column labels of `matrix`.
    pub configs: Vec<u32>,
    pub matrix: DMatrix<f64>,
}

#[derive(Debug, Clone)]
pub struct ReducedDensityMatrix {
    mask: BipartitionMask,
    blocks: Vec<RdmBlock>,
    source_up_count: usize,
}

impl ReducedDensityMatrix {
    pub fn mask(&self) -> &BipartitionMask {
        &self.mask
    }

    pub fn blocks(&self) -> &[RdmBlock] {
        &self.blocks
    }

    /// Up count of the sector the state came from.
    pub fn source_up_count(&self) -> usize {
        self.source_up_count
    }

    /// 2^{L_B}.
    pub fn dimension(&self) -> usize {
        1 << self.mask.kept_len()
    }

    pub fn trace(&self) -> f64 {
        self.blocks.iter().map(|b| b.matrix.trace()).sum()
    }

    /// Dense matrix indexed by compacted kept configuration.
    pub fn to_dense(&self) -> DMatrix<f64> {
        let dim = self.dimension();
        let mut rho = DMatrix::zeros(dim, dim);
        for b in &self.blocks {
            for (r, &cr) in b.configs.iter().enumerate() {
                for (c, &cc) in b.configs.iter().enumerate() {
                    rho[(cr as usize, cc as usize)] = b.matrix[(r, c)];
                }
            }
        }
        rho
    }

    /// All eigenvalues, ascending, unclamped.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut all: Vec<f64> = self
            .blocks
            .iter()
            .flat_map(|b| SymmetricEigen::new(b.matrix.clone()).eigenvalues.iter().copied().collect::<Vec<_>>())
            .collect();
        all.sort_by(f64::total_cmp);
        all
    }
}

pub fn reduced_density_matrix(
    psi: &WaveFunction,
    mask: &BipartitionMask,
) -> Result<ReducedDensityMatrix> {
    let basis = psi.basis();
    if mask.site_count() != basis.site_count() {
        return param(format!(
            "mask covers {} sites but the state has {}",
            mask.site_count(),
            basis.site_count()
        ));
    }
    let kept_len = mask.kept_len();
    let kept = mask.kept_mask();
    let traced = mask.traced_mask();
    let total_up = basis.up_count();

    // Block `u` holds kept configurations with u up spins; position[c] is the
    // row of compact configuration c inside its block.
    let lowest_up = total_up.saturating_sub(mask.traced_len());
    let highest_up = total_up.min(kept_len);
    let mut position = vec![usize::MAX; 1 << kept_len];
    let mut blocks: Vec<RdmBlock> = (lowest_up..=highest_up)
        .map(|u| {
            let configs: Vec<u32> = fixed_weight_words(kept_len, u).collect();
            for (r, &c) in configs.iter().enumerate() {
                position[c as usize] = r;
            }
            let n = configs.len();
            RdmBlock {
                up_count: u,
                configs,
                matrix: DMatrix::zeros(n, n),
            }
        })
        .collect();

    let mut entries: Vec<(u32, u32, f64)> = basis
        .states()
        .iter()
        .zip(psi.amplitudes())
        .map(|(&s, &a)| (extract_bits(s, traced), extract_bits(s, kept), a))
        .collect();
    entries.sort_by_key(|&(env, sys, _)| (env, sys));

    for group in entries.chunk_by(|a, b| a.0 == b.0) {
        let u = group[0].1.count_ones() as usize;
        let block = &mut blocks[u - lowest_up];
        for &(_, ci, ai) in group {
            let r = position[ci as usize];
            for &(_, cj, aj) in group {
                block.matrix[(r, position[cj as usize])] += ai * aj;
            }
        }
    }

    Ok(ReducedDensityMatrix {
        mask: *mask,
        blocks,
        source_up_count: total_up,
    })
}

fn entropy_of_eigenvalues(eigenvalues: impl IntoIterator<Item = f64>) -> Result<f64> {
    let mut s = 0.0;
    for lambda in eigenvalues {
        if lambda < -PSD_TOLERANCE {
            return Err(Error::Numerical(format!(
                "density matrix eigenvalue {lambda:.3e} is negative beyond tolerance"
            )));
        }
        let lambda = lambda.clamp(0.0, 1.0);
        if lambda > 0.0 {
            s -= lambda * lambda.log2();
        }
    }
    Ok(s)
}

/// `-tr(ρ log₂ ρ)` in bits.
pub fn von_neumann_entropy(rho: &ReducedDensityMatrix) -> Result<f64> {
    let mut total = 0.0;
    for block in &rho.blocks {
        let eig = SymmetricEigen::new(block.matrix.clone());
        total += entropy_of_eigenvalues(eig.eigenvalues.iter().copied())?;
    }
    Ok(total)
}

/// Entropy of a dense symmetric density matrix, in bits.
pub fn entropy_of_matrix(rho: &DMatrix<f64>) -> Result<f64> {
    entropy_of_eigenvalues(SymmetricEigen::new(rho.clone()).eigenvalues.iter().copied())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

fn check_pair(psi: &WaveFunction, i: usize, j: usize) -> Result<()> {
    let n = psi.site_count();
    if i == j {
        return param(format!("correlator needs two distinct sites, got {i} twice"));
    }
    if i >= n || j >= n {
        return param(format!("sites ({i}, {j}) outside {n}-site state"));
    }
    Ok(())
}

/// `⟨ψ|σ^α_i σ^α_j|ψ⟩`.
pub fn pauli_correlator(psi: &WaveFunction, i: usize, j: usize, axis: PauliAxis) -> Result<f64> {
    check_pair(psi, i, j)?;
    let pair = 1u32 << i | 1u32 << j;
    let states = psi.basis().states();
    let amps = psi.amplitudes();
    let value = match axis {
        PauliAxis::Z => states
            .iter()
            .zip(amps)
            .map(|(&s, &a)| if (s & pair).count_ones() == 1 { -a * a } else { a * a })
            .sum(),
        // Inside a sector only anti-aligned pairs flip to another sector
        // state, and there σxσx and σyσy act identically.
        PauliAxis::X | PauliAxis::Y => states
            .iter()
            .zip(amps)
            .filter(|(&s, _)| (s & pair).count_ones() == 1)
            .map(|(&s, &a)| a * psi.amplitude_of(s ^ pair))
            .sum(),
    };
    Ok(value)
}

/// `⟨σ^z_i⟩`.
pub fn magnetization(psi: &WaveFunction, site: usize) -> f64 {
    psi.basis()
        .states()
        .iter()
        .zip(psi.amplitudes())
        .map(|(&s, &a)| if s >> site & 1 == 1 { a * a } else { -a * a })
        .sum()
}

/// Two-site reduced state in the basis {↑↑, ↑↓, ↓↑, ↓↓} of `(site_i, site_j)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoSiteDensityMatrix {
    pub sites: (usize, usize),
    pub matrix: Matrix4<f64>,
}

impl TwoSiteDensityMatrix {
    pub fn new(sites: (usize, usize), matrix: Matrix4<f64>) -> Self {
        Self { sites, matrix }
    }

    /// Projector onto a pure two-qubit state given in the {↑↑, ↑↓, ↓↑, ↓↓} basis.
    pub fn pure(amplitudes: [f64; 4]) -> Self {
        let v = nalgebra::Vector4::from(amplitudes);
        Self::new((0, 1), v * v.transpose())
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }
}

/// Index of the two-spin pattern of `(i, j)` in state `s` within {↑↑, ↑↓, ↓↑, ↓↓}.
#[inline]
fn pair_code(s: u32, i: usize, j: usize) -> usize {
    let down_i = (!s >> i & 1) as usize;
    let down_j = (!s >> j & 1) as usize;
    2 * down_i + down_j
}

#[inline]
fn pair_bits(code: usize, i: usize, j: usize) -> u32 {
    let up_i = (code >> 1 & 1 == 0) as u32;
    let up_j = (code & 1 == 0) as u32;
    up_i << i | up_j << j
}

pub fn two_site_rdm(psi: &WaveFunction, i: usize, j: usize) -> Result<TwoSiteDensityMatrix> {
    check_pair(psi, i, j)?;
    let pair = 1u32 << i | 1u32 << j;
    let mut rho = Matrix4::zeros();
    for (&s, &a) in psi.basis().states().iter().zip(psi.amplitudes()) {
        let row = pair_code(s, i, j);
        let env = s & !pair;
        for col in 0..4 {
            let partner = env | pair_bits(col, i, j);
            let b = psi.amplitude_of(partner);
            if b != 0.0 {
                rho[(row, col)] += a * b;
            }
        }
    }
    Ok(TwoSiteDensityMatrix::new((i, j), rho))
}

/// Wootters concurrence, `max(0, λ₁ − λ₂ − λ₃ − λ₄)` with λ the decreasing
/// square roots of the eigenvalues of `ρ (σʸ⊗σʸ) ρ* (σʸ⊗σʸ)`; `ρ` is real here.
pub fn concurrence_wootters(rho2: &TwoSiteDensityMatrix) -> f64 {
    let rho = rho2.matrix;
    #[rustfmt::skip]
    let yy = Matrix4::new(
        0.0, 0.0, 0.0, -1.0,
        0.0, 0.0, 1.0, 0.0,
        0.0, 1.0, 0.0, 0.0,
        -1.0, 0.0, 0.0, 0.0,
    );

    // λ are the singular values of √ρ √ρ̃ with √ρ̃ = (σʸ⊗σʸ) √ρ (σʸ⊗σʸ).
    // Working with singular values avoids square roots of the tiny, noisy
    // eigenvalues of ρ·ρ̃; eigenvalues of ρ at rounding level count as zero.
    let eig = SymmetricEigen::new(rho);
    let floor = 8.0 * f64::EPSILON * rho.trace().abs().max(1.0);
    let sqrt_vals = eig.eigenvalues.map(|l| if l > floor { l.sqrt() } else { 0.0 });
    let sqrt_rho =
        eig.eigenvectors * Matrix4::from_diagonal(&sqrt_vals) * eig.eigenvectors.transpose();
    let product = sqrt_rho * (yy * sqrt_rho * yy);
    let mut lambdas: Vec<f64> = product.singular_values().iter().copied().collect();
    lambdas.sort_by(|a, b| b.total_cmp(a));
    (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).clamp(0.0, 1.0)
}

/// Pauli correlators of one site pair, plus the single-site magnetizations the
/// closed-form concurrence depends on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelatorTriple {
    pub xx: f64,
    pub yy: f64,
    pub zz: f64,
    /// `(⟨σz_i⟩, ⟨σz_j⟩)`.
    pub magnetization: (f64, f64),
}

impl CorrelatorTriple {
    /// Correlators of a pair with vanishing single-site magnetization.
    pub fn new(xx: f64, yy: f64, zz: f64) -> Self {
        Self {
            xx,
            yy,
            zz,
            magnetization: (0.0, 0.0),
        }
    }
}

pub fn correlator_triple(psi: &WaveFunction, i: usize, j: usize) -> Result<CorrelatorTriple> {
    Ok(CorrelatorTriple {
        xx: pauli_correlator(psi, i, j, PauliAxis::X)?,
        yy: pauli_correlator(psi, i, j, PauliAxis::Y)?,
        zz: pauli_correlator(psi, i, j, PauliAxis::Z)?,
        magnetization: (magnetization(psi, i), magnetization(psi, j)),
    })
}

/// Closed-form concurrence `½ max[0, |Gxx + Gyy| − Gzz − 1]`, valid for
/// U(1)-symmetric pairs with zero single-site magnetization.
pub fn concurrence_symmetric(g: &CorrelatorTriple) -> Result<f64> {
    let (mi, mj) = g.magnetization;
    if mi.abs() > 1e-10 || mj.abs() > 1e-10 {
        return param(format!(
            "pair has nonzero magnetization ({mi:.3e}, {mj:.3e}); use concurrence_wootters"
        ));
    }
    Ok((0.5 * ((g.xx + g.yy).abs() - g.zz - 1.0)).clamp(0.0, 1.0))
}

/// Concurrence across a J1 bond (0, 1) and a J2 bond (1, 2) of a dimerized ring.
pub fn dimer_concurrences(psi: &WaveFunction, model: &ModelSpec) -> Result<(f64, f64)> {
    if model.kind() != ModelKind::Dimer {
        return param(format!("dimer concurrences need a dimer model, got {:?}", model.kind()));
    }
    if model.site_count() != psi.site_count() {
        return param("model and state site counts differ");
    }
    let c1 = concurrence_wootters(&two_site_rdm(psi, 0, 1)?);
    let c2 = concurrence_wootters(&two_site_rdm(psi, 1, 2)?);
    Ok((c1, c2))
}
