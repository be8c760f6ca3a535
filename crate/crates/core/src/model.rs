//! XXZ-type spin Hamiltonians as bond lists, applied matrix-free.
//!
//! Each bond (a, b) contributes `J (Sx_a Sx_b + Sy_a Sy_b + Δ Sz_a Sz_b)` with
//! spin-1/2 operators `S = σ/2`. In the Sz basis that is a diagonal term
//! `±JΔ/4` (plus when the spins agree) and a flip-flop term of amplitude `J/2`
//! between anti-aligned configurations.

use nalgebra::DMatrix;

use crate::basis::{ladder_site, BipartitionScheme, LatticeKind, SectorBasis};
use crate::error::{param, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bond {
    pub site_a: usize,
    pub site_b: usize,
    pub coupling: f64,
    pub anisotropy: f64,
}

impl Bond {
    pub fn new(site_a: usize, site_b: usize, coupling: f64, anisotropy: f64) -> Self {
        Self {
            site_a,
            site_b,
            coupling,
            anisotropy,
        }
    }

    /// Isotropic Heisenberg bond, `J S_a · S_b`.
    pub fn heisenberg(site_a: usize, site_b: usize, coupling: f64) -> Self {
        Self::new(site_a, site_b, coupling, 1.0)
    }

    fn pair_mask(&self) -> u32 {
        1 << self.site_a | 1 << self.site_b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Chain,
    Dimer,
    Ladder,
    /// Arbitrary bond list, used for small fixtures.
    Custom,
}

impl ModelKind {
    pub fn lattice(&self) -> LatticeKind {
        match self {
            ModelKind::Chain | ModelKind::Custom => LatticeKind::Chain,
            ModelKind::Dimer => LatticeKind::Dimer,
            ModelKind::Ladder => LatticeKind::Ladder,
        }
    }

    pub fn default_bipartition(&self) -> BipartitionScheme {
        match self {
            ModelKind::Ladder => BipartitionScheme::Checkerboard,
            _ => BipartitionScheme::OddEven,
        }
    }
}

/// The raw couplings a model was built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelParams {
    Xxz {
        coupling: f64,
        anisotropy: f64,
    },
    Dimer {
        j1: f64,
        j2: f64,
    },
    Ladder {
        rungs: usize,
        leg_coupling: f64,
        rung_coupling: f64,
        anisotropy: f64,
    },
    Custom,
}

#[derive(Debug, Clone)]
pub struct ModelSpec {
    kind: ModelKind,
    site_count: usize,
    bonds: Vec<Bond>,
    params: ModelParams,
}

impl ModelSpec {
    /// Builds a model from an explicit bond list (open or irregular lattices).
    pub fn custom(site_count: usize, bonds: Vec<Bond>) -> Result<Self> {
        Self::from_parts(ModelKind::Custom, site_count, bonds, ModelParams::Custom)
    }

    fn from_parts(
        kind: ModelKind,
        site_count: usize,
        bonds: Vec<Bond>,
        params: ModelParams,
    ) -> Result<Self> {
        if !(2..=crate::basis::MAX_SITES).contains(&site_count) {
            return param(format!("site count {site_count} outside [2, 32]"));
        }
        let mut seen = std::collections::HashSet::new();
        for b in &bonds {
            if b.site_a == b.site_b {
                return param(format!("bond joins site {} to itself", b.site_a));
            }
            if b.site_a >= site_count || b.site_b >= site_count {
                return param(format!(
                    "bond ({}, {}) outside {site_count} sites",
                    b.site_a, b.site_b
                ));
            }
            if !b.coupling.is_finite() || !b.anisotropy.is_finite() {
                return param("bond couplings must be finite");
            }
            let key = (b.site_a.min(b.site_b), b.site_a.max(b.site_b));
            if !seen.insert(key) {
                return param(format!("duplicate bond {key:?}"));
            }
        }
        Ok(Self {
            kind,
            site_count,
            bonds,
            params,
        })
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn site_count(&self) -> usize {
        self.site_count
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    pub fn params(&self) -> ModelParams {
        self.params
    }

    pub fn lattice(&self) -> LatticeKind {
        self.kind.lattice()
    }

    /// Sector-restricted Hamiltonian for this model.
    pub fn restricted<'a>(&'a self, basis: &'a SectorBasis) -> Result<SectorHamiltonian<'a>> {
        SectorHamiltonian::new(self, basis)
    }
}

pub fn build_xxz_chain(sites: usize, coupling: f64, anisotropy: f64) -> Result<ModelSpec> {
    if sites < 3 {
        return param(format!("periodic chain needs at least 3 sites, got {sites}"));
    }
    let bonds = (0..sites)
        .map(|i| Bond::new(i, (i + 1) % sites, coupling, anisotropy))
        .collect();
    ModelSpec::from_parts(
        ModelKind::Chain,
        sites,
        bonds,
        ModelParams::Xxz {
            coupling,
            anisotropy,
        },
    )
}

pub fn build_dimerized_chain(sites: usize, j1: f64, j2: f64) -> Result<ModelSpec> {
    if sites % 2 != 0 || sites < 4 {
        return param(format!("dimerized ring needs an even site count >= 4, got {sites}"));
    }
    let bonds = (0..sites)
        .map(|i| {
            let coupling = if i % 2 == 0 { j1 } else { j2 };
            Bond::heisenberg(i, (i + 1) % sites, coupling)
        })
        .collect();
    ModelSpec::from_parts(ModelKind::Dimer, sites, bonds, ModelParams::Dimer { j1, j2 })
}

/// Two periodic legs of `rungs` sites each, joined by rungs. Site index is
/// `leg * rungs + rung`; the anisotropy applies to legs and rungs alike.
pub fn build_ladder(
    rungs: usize,
    leg_coupling: f64,
    rung_coupling: f64,
    anisotropy: f64,
) -> Result<ModelSpec> {
    if rungs < 3 {
        return param(format!("ladder needs at least 3 rungs, got {rungs}"));
    }
    let mut bonds = Vec::with_capacity(3 * rungs);
    for leg in 0..2 {
        for r in 0..rungs {
            bonds.push(Bond::new(
                ladder_site(leg, r, rungs),
                ladder_site(leg, (r + 1) % rungs, rungs),
                leg_coupling,
                anisotropy,
            ));
        }
    }
    for r in 0..rungs {
        bonds.push(Bond::new(
            ladder_site(0, r, rungs),
            ladder_site(1, r, rungs),
            rung_coupling,
            anisotropy,
        ));
    }
    ModelSpec::from_parts(
        ModelKind::Ladder,
        2 * rungs,
        bonds,
        ModelParams::Ladder {
            rungs,
            leg_coupling,
            rung_coupling,
            anisotropy,
        },
    )
}

#[derive(Debug, Clone, Copy)]
struct FlipTerm {
    mask: u32,
    amplitude: f64,
}

/// A model restricted to one Sz sector, ready for repeated matrix-vector
/// products. The diagonal is evaluated once; off-diagonal elements are
/// regenerated from bit flips on every product.
#[derive(Debug, Clone)]
pub struct SectorHamiltonian<'a> {
    basis: &'a SectorBasis,
    diagonal: Vec<f64>,
    flips: Vec<FlipTerm>,
}

impl<'a> SectorHamiltonian<'a> {
    pub fn new(model: &ModelSpec, basis: &'a SectorBasis) -> Result<Self> {
        if model.site_count() != basis.site_count() {
            return param(format!(
                "model has {} sites but basis has {}",
                model.site_count(),
                basis.site_count()
            ));
        }
        let zz: Vec<(u32, f64)> = model
            .bonds()
            .iter()
            .map(|b| (b.pair_mask(), 0.25 * b.coupling * b.anisotropy))
            .collect();
        let diagonal = basis
            .states()
            .iter()
            .map(|&s| {
                zz.iter()
                    .map(|&(mask, e)| if (s & mask).count_ones() == 1 { -e } else { e })
                    .sum()
            })
            .collect();
        let flips = model
            .bonds()
            .iter()
            .filter(|b| b.coupling != 0.0)
            .map(|b| FlipTerm {
                mask: b.pair_mask(),
                amplitude: 0.5 * b.coupling,
            })
            .collect();
        Ok(Self {
            basis,
            diagonal,
            flips,
        })
    }

    pub fn basis(&self) -> &SectorBasis {
        self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    /// `out = H v`. Row-wise gather, so each output entry is written once.
    pub fn apply_into(&self, v: &[f64], out: &mut [f64]) -> Result<()> {
        let dim = self.dim();
        if v.len() != dim || out.len() != dim {
            return param(format!(
                "vector lengths {} / {} do not match sector dimension {dim}",
                v.len(),
                out.len()
            ));
        }
        let states = self.basis.states();
        match self.basis.dense_table() {
            Some(table) => {
                for ((o, &d), &x) in out.iter_mut().zip(&self.diagonal).zip(v) {
                    *o = d * x;
                }
                // Bond-outer order keeps iterations independent; aligned pairs
                // map outside the sector and are masked out branch-free.
                for f in &self.flips {
                    for (o, &s) in out.iter_mut().zip(states) {
                        let j = table[(s ^ f.mask) as usize];
                        let hit = j != u32::MAX;
                        let amp = if hit { f.amplitude } else { 0.0 };
                        *o += amp * v[if hit { j as usize } else { 0 }];
                    }
                }
            }
            None => {
                for (k, o) in out.iter_mut().enumerate() {
                    let s = states[k];
                    let mut acc = self.diagonal[k] * v[k];
                    for f in &self.flips {
                        if (s & f.mask).count_ones() == 1 {
                            if let Some(j) = self.basis.index_of_bits(s ^ f.mask) {
                                acc += f.amplitude * v[j];
                            }
                        }
                    }
                    *o = acc;
                }
            }
        }
        Ok(())
    }

    /// Explicit dense sector matrix assembled from the same matrix elements.
    pub fn to_dense(&self) -> DMatrix<f64> {
        let dim = self.dim();
        let mut h = DMatrix::zeros(dim, dim);
        for (k, &s) in self.basis.states().iter().enumerate() {
            h[(k, k)] = self.diagonal[k];
            for f in &self.flips {
                if (s & f.mask).count_ones() == 1 {
                    if let Some(j) = self.basis.index_of_bits(s ^ f.mask) {
                        h[(j, k)] += f.amplitude;
                    }
                }
            }
        }
        h
    }
}

pub fn apply_hamiltonian(model: &ModelSpec, basis: &SectorBasis, v: &[f64]) -> Result<Vec<f64>> {
    let h = SectorHamiltonian::new(model, basis)?;
    let mut out = vec![0.0; v.len()];
    h.apply_into(v, &mut out)?;
    Ok(out)
}
