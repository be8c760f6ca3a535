//! Exact diagonalization of spin-1/2 XXZ chains, dimerized Heisenberg chains
//! and two-leg XXZ ladders, with sublattice entanglement entropy and pairwise
//! concurrence of the ground state, and parameter sweeps that locate entropy
//! extrema and ridges.

pub mod basis;
pub mod cli;
pub mod eigensolver;
pub mod entanglement;
pub mod error;
pub mod model;
pub mod sweep;

pub use basis::{
    enumerate_sector, index_of, standard_bipartition, BipartitionMask, BipartitionScheme,
    LatticeKind, SectorBasis, SpinConfiguration,
};
pub use eigensolver::{
    dense_spectrum, lanczos_ground_state, solve_symmetric_tridiagonal, GroundStateResult,
    LanczosConfig, WaveFunction,
};
pub use entanglement::{
    concurrence_symmetric, concurrence_wootters, dimer_concurrences, pauli_correlator,
    reduced_density_matrix, two_site_rdm, von_neumann_entropy, CorrelatorTriple, PauliAxis,
    ReducedDensityMatrix, TwoSiteDensityMatrix,
};
pub use error::{Error, Result};
pub use model::{
    apply_hamiltonian, build_dimerized_chain, build_ladder, build_xxz_chain, Bond, ModelKind,
    ModelSpec,
};
