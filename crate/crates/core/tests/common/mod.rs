//! Reference implementations that work in the full 2^N space with dense
//! matrices. They share nothing with the sector code they check.

#![allow(dead_code)]

use nalgebra::DMatrix;
use spin_ent::{Bond, SectorBasis};

/// Single-site operators in the ordered basis {down, up}.
pub fn sigma_z() -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[-1.0, 0.0, 0.0, 1.0])
}

pub fn raising() -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0])
}

pub fn lowering() -> DMatrix<f64> {
    DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0])
}

/// `op` acting on `site` of an N-site register. Site 0 is the least
/// significant bit of the full-space index, a set bit is spin up.
pub fn embed(op: &DMatrix<f64>, site: usize, n: usize) -> DMatrix<f64> {
    let mut out = DMatrix::identity(1, 1);
    for s in (0..n).rev() {
        let factor = if s == site { op.clone() } else { DMatrix::identity(2, 2) };
        out = out.kronecker(&factor);
    }
    out
}

/// Σ J (SˣSˣ + SʸSʸ + Δ SᶻSᶻ) over the bonds, S = σ/2, assembled from
/// Kronecker products.
pub fn full_hamiltonian(n: usize, bonds: &[Bond]) -> DMatrix<f64> {
    let dim = 1usize << n;
    let mut h = DMatrix::zeros(dim, dim);
    for b in bonds {
        let (i, j) = (b.site_a, b.site_b);
        let zz = embed(&sigma_z(), i, n) * embed(&sigma_z(), j, n);
        let pm = embed(&raising(), i, n) * embed(&lowering(), j, n);
        let mp = embed(&lowering(), i, n) * embed(&raising(), j, n);
        // σˣσˣ + σʸσʸ = 2(σ⁺σ⁻ + σ⁻σ⁺)
        h += (zz * (b.anisotropy / 4.0) + (pm + mp) * 0.5) * b.coupling;
    }
    h
}

pub fn to_full(basis: &SectorBasis, v: &[f64]) -> Vec<f64> {
    let mut full = vec![0.0; 1 << basis.site_count()];
    for (&s, &a) in basis.states().iter().zip(v) {
        full[s as usize] = a;
    }
    full
}

pub fn from_full(basis: &SectorBasis, full: &[f64]) -> Vec<f64> {
    basis.states().iter().map(|&s| full[s as usize]).collect()
}

/// ρ over the kept sites, indexed by the kept bits packed in site order.
pub fn brute_force_partial_trace(full: &[f64], n: usize, kept: u32) -> DMatrix<f64> {
    let kept_sites: Vec<usize> = (0..n).filter(|&s| kept >> s & 1 == 1).collect();
    let traced_sites: Vec<usize> = (0..n).filter(|&s| kept >> s & 1 == 0).collect();
    let place = |compact: usize, sites: &[usize]| -> usize {
        sites
            .iter()
            .enumerate()
            .map(|(k, &s)| (compact >> k & 1) << s)
            .sum()
    };
    let dk = 1usize << kept_sites.len();
    let dt = 1usize << traced_sites.len();
    let mut rho = DMatrix::zeros(dk, dk);
    for a in 0..dk {
        for b in 0..dk {
            let mut acc = 0.0;
            for t in 0..dt {
                let env = place(t, &traced_sites);
                acc += full[place(a, &kept_sites) | env] * full[place(b, &kept_sites) | env];
            }
            rho[(a, b)] = acc;
        }
    }
    rho
}

/// Two-site ρ in the {↑↑, ↑↓, ↓↑, ↓↓} order from a brute-force partial trace.
pub fn brute_force_pair(full: &[f64], n: usize, i: usize, j: usize) -> DMatrix<f64> {
    let rho = brute_force_partial_trace(full, n, 1 << i | 1 << j);
    // packed index: bit 0 is the lower site, bit 1 the higher one
    let code = |up_i: bool, up_j: bool| -> usize {
        let (lo, hi) = if i < j { (up_i, up_j) } else { (up_j, up_i) };
        lo as usize | (hi as usize) << 1
    };
    let order = [(true, true), (true, false), (false, true), (false, false)];
    DMatrix::from_fn(4, 4, |r, c| {
        rho[(code(order[r].0, order[r].1), code(order[c].0, order[c].1))]
    })
}

/// ⟨ψ|O|ψ⟩ in the full space.
pub fn expectation(full: &[f64], op: &DMatrix<f64>) -> f64 {
    let v = nalgebra::DVector::from_column_slice(full);
    v.dot(&(op * &v))
}

pub fn entropy_bits(rho: &DMatrix<f64>) -> f64 {
    rho.clone()
        .symmetric_eigenvalues()
        .iter()
        .filter(|&&p| p > 1e-14)
        .map(|&p| -p * p.log2())
        .sum()
}

/// Deterministic pseudo-random values in (−1, 1) for test vectors.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self(seed.wrapping_mul(0x2545_F491_4F6C_DD1D) | 1)
    }

    pub fn next_f64(&mut self) -> f64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0 >> 11) as f64 / (1u64 << 52) as f64 - 1.0
    }

    pub fn vector(&mut self, n: usize) -> Vec<f64> {
        (0..n).map(|_| self.next_f64()).collect()
    }
}
