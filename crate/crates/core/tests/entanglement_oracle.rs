mod common;

use std::sync::Arc;

use common::{brute_force_pair, brute_force_partial_trace, embed, entropy_bits, expectation, to_full};
use nalgebra::DMatrix;
use spin_ent::basis::ladder_site;
use spin_ent::entanglement::{correlator_triple, entropy_of_matrix, magnetization};
use spin_ent::{
    build_dimerized_chain, build_ladder, build_xxz_chain, concurrence_symmetric,
    concurrence_wootters, lanczos_ground_state, pauli_correlator, reduced_density_matrix,
    standard_bipartition, two_site_rdm, von_neumann_entropy, BipartitionMask, BipartitionScheme,
    LanczosConfig, LatticeKind, ModelSpec, PauliAxis, SectorBasis, WaveFunction,
};

fn ground(model: &ModelSpec) -> WaveFunction {
    let basis = Arc::new(SectorBasis::zero_magnetization(model.site_count()).unwrap());
    lanczos_ground_state(model, &basis, &LanczosConfig::default())
        .unwrap()
        .wavefunction
}

fn states() -> Vec<(WaveFunction, LatticeKind)> {
    vec![
        (ground(&build_xxz_chain(8, 1.0, 1.0).unwrap()), LatticeKind::Chain),
        (ground(&build_xxz_chain(10, 1.0, -0.7).unwrap()), LatticeKind::Chain),
        (ground(&build_dimerized_chain(10, 1.0, 0.4).unwrap()), LatticeKind::Dimer),
        (ground(&build_ladder(4, 1.0, -1.2, 0.5).unwrap()), LatticeKind::Ladder),
        (ground(&build_ladder(5, 1.0, 2.0, 1.0).unwrap()), LatticeKind::Ladder),
    ]
}

fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).abs().max()
}

#[test]
fn sector_partial_trace_matches_brute_force() {
    for (psi, lattice) in states() {
        let n = psi.site_count();
        let full = to_full(psi.basis(), psi.amplitudes());
        let mut masks = vec![
            standard_bipartition(lattice, n, BipartitionScheme::OddEven).unwrap(),
            standard_bipartition(lattice, n, BipartitionScheme::Block(3)).unwrap(),
            BipartitionMask::new(0b1001, n).unwrap(),
        ];
        if lattice == LatticeKind::Ladder {
            masks.push(standard_bipartition(lattice, n, BipartitionScheme::Checkerboard).unwrap());
            masks.push(standard_bipartition(lattice, n, BipartitionScheme::Leg).unwrap());
        }
        for mask in masks {
            let rho = reduced_density_matrix(&psi, &mask).unwrap();
            let reference = brute_force_partial_trace(&full, n, mask.kept_mask());
            assert!(max_abs_diff(&rho.to_dense(), &reference) <= 1e-12);
            let s = von_neumann_entropy(&rho).unwrap();
            assert!((s - entropy_bits(&reference)).abs() < 1e-10);
        }
    }
}

#[test]
fn complementary_subsystems_share_entropy() {
    for (psi, lattice) in states() {
        let n = psi.site_count();
        for scheme in [BipartitionScheme::OddEven, BipartitionScheme::Block(2), BipartitionScheme::Custom(0b10110)] {
            let mask = standard_bipartition(lattice, n, scheme).unwrap();
            let a = von_neumann_entropy(&reduced_density_matrix(&psi, &mask).unwrap()).unwrap();
            let b = von_neumann_entropy(&reduced_density_matrix(&psi, &mask.complement()).unwrap()).unwrap();
            assert!((a - b).abs() <= 1e-9, "{a} vs {b}");
        }
    }
}

#[test]
fn density_matrix_is_a_state() {
    for (psi, lattice) in states() {
        let mask = standard_bipartition(lattice, psi.site_count(), BipartitionScheme::OddEven).unwrap();
        let rho = reduced_density_matrix(&psi, &mask).unwrap();
        assert!((rho.trace() - 1.0).abs() < 1e-12);
        let dense = rho.to_dense();
        assert!(max_abs_diff(&dense, &dense.transpose()) < 1e-15);
        assert!(rho.eigenvalues().iter().all(|&p| p > -1e-12));
    }
}

#[test]
fn correlators_match_full_space_expectations() {
    let x = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]);
    let z = common::sigma_z();
    for (psi, _) in states() {
        let n = psi.site_count();
        let full = to_full(psi.basis(), psi.amplitudes());
        for (i, j) in [(0, 1), (1, 2), (0, n / 2), (n - 1, 0)] {
            let xx = expectation(&full, &(embed(&x, i, n) * embed(&x, j, n)));
            let zz = expectation(&full, &(embed(&z, i, n) * embed(&z, j, n)));
            assert!((pauli_correlator(&psi, i, j, PauliAxis::X).unwrap() - xx).abs() < 1e-12);
            // σʸσʸ = σˣσˣ on real states with fixed Sz
            assert!((pauli_correlator(&psi, i, j, PauliAxis::Y).unwrap() - xx).abs() < 1e-12);
            assert!((pauli_correlator(&psi, i, j, PauliAxis::Z).unwrap() - zz).abs() < 1e-12);
            let zi = expectation(&full, &embed(&z, i, n));
            assert!((magnetization(&psi, i) - zi).abs() < 1e-12);
        }
    }
}

#[test]
fn correlators_are_traces_against_the_pair_state() {
    // σᵅ⊗σᵅ in the {↑↑, ↑↓, ↓↑, ↓↓} order
    #[rustfmt::skip]
    let xx = DMatrix::from_row_slice(4, 4, &[
        0.0, 0.0, 0.0, 1.0,
        0.0, 0.0, 1.0, 0.0,
        0.0, 1.0, 0.0, 0.0,
        1.0, 0.0, 0.0, 0.0,
    ]);
    let zz = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, -1.0, -1.0, 1.0]));
    for (psi, _) in states() {
        for (i, j) in [(0, 1), (2, 5)] {
            let rho = two_site_rdm(&psi, i, j).unwrap();
            let rho = DMatrix::from_fn(4, 4, |r, c| rho.matrix[(r, c)]);
            let g = correlator_triple(&psi, i, j).unwrap();
            assert!(((&rho * &xx).trace() - g.xx).abs() < 1e-12);
            assert!(((&rho * &zz).trace() - g.zz).abs() < 1e-12);
        }
    }
}

#[test]
fn pair_state_matches_brute_force_and_general_mask() {
    for (psi, _) in states() {
        let n = psi.site_count();
        let full = to_full(psi.basis(), psi.amplitudes());
        for (i, j) in [(0, 1), (1, 2), (3, 0), (0, n - 1)] {
            let rho = two_site_rdm(&psi, i, j).unwrap();
            let reference = brute_force_pair(&full, n, i, j);
            let got = DMatrix::from_fn(4, 4, |r, c| rho.matrix[(r, c)]);
            assert!(max_abs_diff(&got, &reference) < 1e-12, "pair ({i},{j})");

            let mask = BipartitionMask::new(1 << i | 1 << j, n).unwrap();
            let general = reduced_density_matrix(&psi, &mask).unwrap().to_dense();
            let s_pair = entropy_of_matrix(&got).unwrap();
            let s_general = entropy_of_matrix(&general).unwrap();
            assert!((s_pair - s_general).abs() < 1e-10);
        }
    }
}

#[test]
fn closed_form_concurrence_agrees_with_wootters_on_ground_states() {
    for (psi, lattice) in states() {
        let n = psi.site_count();
        let mut pairs = vec![(0, 1), (1, 2), (0, 2)];
        if lattice == LatticeKind::Ladder {
            pairs.push((ladder_site(0, 1, n / 2), ladder_site(1, 1, n / 2)));
        }
        for (i, j) in pairs {
            let w = concurrence_wootters(&two_site_rdm(&psi, i, j).unwrap());
            let g = correlator_triple(&psi, i, j).unwrap();
            let s = concurrence_symmetric(&g).unwrap_or_else(|e| panic!("{lattice:?} n={n} ({i},{j}) {g:?} {e}"));
            assert!((w - s).abs() <= 1e-10, "({i},{j}): {w} vs {s}");
        }
    }
}

#[test]
fn two_singlets_across_the_cut_carry_two_bits() {
    // Each strong bond is a singlet at J2 = 0.
    let model = build_dimerized_chain(4, 1.0, 0.0).unwrap();
    let psi = ground(&model);
    let mask = standard_bipartition(LatticeKind::Dimer, 4, BipartitionScheme::OddEven).unwrap();
    let s = von_neumann_entropy(&reduced_density_matrix(&psi, &mask).unwrap()).unwrap();
    assert!((s - 2.0).abs() < 1e-10);
}
