use std::sync::Arc;

use spin_ent::entanglement::correlator_triple;
use spin_ent::sweep::{
    evaluate_single, find_local_extrema, run_sweep_1d, run_sweep_2d, singularity_growth,
    BoundaryKind, Couplings, ModelFamily, Range, SweepParam, SweepSpec,
};
use spin_ent::{
    build_dimerized_chain, build_xxz_chain, concurrence_wootters, dimer_concurrences,
    lanczos_ground_state, pauli_correlator, two_site_rdm, BipartitionScheme, Error,
    LanczosConfig, PauliAxis, SectorBasis,
};

fn xxz(sites: usize) -> ModelFamily {
    ModelFamily::Xxz { sites, coupling: 1.0 }
}

fn dimer(sites: usize) -> ModelFamily {
    ModelFamily::Dimer { sites, j1: 1.0 }
}

fn point(family: ModelFamily, c: Couplings) -> spin_ent::sweep::ObservableRow {
    let scheme = family.kind().default_bipartition();
    let row = evaluate_single(&family, &c, scheme, &LanczosConfig::default()).unwrap();
    assert!(row.error.is_none(), "{:?}", row.error);
    row
}

#[test]
fn decoupled_dimers_are_exact() {
    let row = point(dimer(4), Couplings::default().with(SweepParam::J2OverJ1, 0.0));
    assert!((row.energy + 1.5).abs() < 1e-10);
    assert!((row.concurrences[0] - 1.0).abs() < 1e-10);
    assert!(row.concurrences[1].abs() < 1e-10);
    assert!((row.entropy_per_site - 1.0).abs() < 1e-10);

    let row = point(dimer(8), Couplings::default().with(SweepParam::J2OverJ1, 0.0));
    assert!((row.entropy_per_site - 1.0).abs() < 1e-10);
    assert!((row.concurrences[0] - 1.0).abs() < 1e-10);
    assert!(row.concurrences[1].abs() < 1e-10);
}

#[test]
fn uniform_dimer_has_equal_bond_concurrences() {
    let row = point(dimer(8), Couplings::default());
    assert!((row.concurrences[0] - row.concurrences[1]).abs() < 1e-10);
}

#[test]
fn dimer_concurrence_fixture() {
    // Full-space diagonalization with an independent Wootters evaluation.
    const C1: f64 = 0.9368231922983911;
    let model = build_dimerized_chain(12, 1.0, 0.5).unwrap();
    let basis = Arc::new(SectorBasis::zero_magnetization(12).unwrap());
    let gs = lanczos_ground_state(&model, &basis, &LanczosConfig::default()).unwrap();
    assert!((gs.energy + 4.661915237348704).abs() < 1e-10);
    let (c1, c2) = dimer_concurrences(&gs.wavefunction, &model).unwrap();
    assert!((c1 - C1).abs() < 1e-10, "{c1}");
    assert!(c2.abs() < 1e-10);
    // any strong bond is equivalent
    let other = concurrence_wootters(&two_site_rdm(&gs.wavefunction, 6, 7).unwrap());
    assert!((other - c1).abs() < 1e-10);
}

#[test]
fn heisenberg_ring_correlator_fixture() {
    const GZZ: f64 = -0.6085155681561955;
    let model = build_xxz_chain(8, 1.0, 1.0).unwrap();
    let basis = Arc::new(SectorBasis::zero_magnetization(8).unwrap());
    let psi = lanczos_ground_state(&model, &basis, &LanczosConfig::default())
        .unwrap()
        .wavefunction;
    let zz = pauli_correlator(&psi, 0, 1, PauliAxis::Z).unwrap();
    assert!((zz - GZZ).abs() < 1e-10, "{zz}");
    let g = correlator_triple(&psi, 0, 1).unwrap();
    assert!((g.xx - g.yy).abs() < 1e-10);
    // isotropy
    assert!((g.xx - g.zz).abs() < 1e-9);
}

#[test]
fn wrong_model_for_dimer_concurrences() {
    let model = build_xxz_chain(6, 1.0, 1.0).unwrap();
    let basis = Arc::new(SectorBasis::zero_magnetization(6).unwrap());
    let psi = lanczos_ground_state(&model, &basis, &LanczosConfig::default())
        .unwrap()
        .wavefunction;
    assert!(matches!(dimer_concurrences(&psi, &model), Err(Error::Parameter(_))));
}

#[test]
fn dimerization_ratio_inverts_under_relabeling() {
    for r in [0.3, 0.55, 0.8, 1.7] {
        let a = point(dimer(8), Couplings::default().with(SweepParam::J2OverJ1, r));
        let b = point(dimer(8), Couplings::default().with(SweepParam::J2OverJ1, 1.0 / r));
        assert!((a.entropy_per_site - b.entropy_per_site).abs() < 1e-9, "r={r}");
        assert!((a.concurrences[0] - b.concurrences[1]).abs() < 1e-9);
        assert!((a.concurrences[1] - b.concurrences[0]).abs() < 1e-9);
        assert!((a.energy - r * b.energy).abs() < 1e-9);
    }
}

#[test]
fn strong_anisotropy_approaches_the_neel_cat() {
    let at = |d: f64| point(xxz(8), Couplings::default().with(SweepParam::Delta, d));
    let (a, b) = (at(20.0), at(50.0));
    assert!((a.entropy_bits - 1.0).abs() < 0.1);
    assert!((b.entropy_bits - 1.0).abs() < (a.entropy_bits - 1.0).abs());
    assert!((b.entropy_bits - 1.0106014020015048).abs() < 1e-8);
    assert!(a.concurrences[0] < 0.06 && b.concurrences[0] < a.concurrences[0]);
    assert!(!a.degenerate && !b.degenerate);
}

#[test]
fn xxz_sweep_rows_and_maximum() {
    let spec = SweepSpec::one_d(xxz(8), SweepParam::Delta, Range::new(-2.0, 2.0, 0.1).unwrap());
    let rows = run_sweep_1d(&spec).unwrap();
    assert_eq!(rows.len(), 41);
    let best = rows
        .iter()
        .max_by(|a, b| a.entropy_per_site.total_cmp(&b.entropy_per_site))
        .unwrap();
    assert_eq!(best.coords, vec![1.0]);
}

#[test]
fn single_maximum_on_the_antiferromagnetic_side() {
    for n in [8, 10, 12] {
        let spec = SweepSpec::one_d(xxz(n), SweepParam::Delta, Range::new(0.0, 2.0, 0.05).unwrap());
        let rows = run_sweep_1d(&spec).unwrap();
        let maxima: Vec<_> = find_local_extrema(&spec.family, &rows, "entropy_per_site")
            .unwrap()
            .into_iter()
            .filter(|p| p.kind == BoundaryKind::Max)
            .collect();
        assert_eq!(maxima.len(), 1, "n={n}");
        assert!((maxima[0].coords[0] - 1.0).abs() <= 0.05 + 1e-12);
    }
}

#[test]
fn isolated_point_reproduces_its_sweep_row() {
    let spec = SweepSpec::one_d(dimer(10), SweepParam::J2OverJ1, Range::new(0.2, 1.4, 0.3).unwrap());
    let rows = run_sweep_1d(&spec).unwrap();
    for row in &rows {
        let alone = point(dimer(10), Couplings::default().with(SweepParam::J2OverJ1, row.coords[0]));
        assert!((alone.entropy_per_site - row.entropy_per_site).abs() <= 1e-12);
        assert!((alone.energy - row.energy).abs() <= 1e-12);
    }
}

#[test]
fn parallel_sweep_matches_sequential() {
    let mut spec = SweepSpec::one_d(xxz(10), SweepParam::Delta, Range::new(-1.5, 1.5, 0.25).unwrap());
    let sequential = run_sweep_1d(&spec).unwrap();
    spec.threads = 3;
    let parallel = run_sweep_1d(&spec).unwrap();
    assert_eq!(sequential, parallel);
}

#[test]
fn small_ladder_surface_is_complete() {
    let r = Range::new(-2.0, 2.0, 0.5).unwrap();
    let grid = run_sweep_2d(&SweepSpec::ladder_surface(4, r, r)).unwrap();
    assert_eq!((grid.xs.len(), grid.ys.len()), (9, 9));
    for row in &grid.values {
        assert!(row.error.is_none());
        assert!(row.entropy_per_site.is_finite() || row.degenerate);
    }
    // outer axis is J′/J
    assert_eq!(grid.get(1, 0).coords, vec![-1.5, -2.0]);
}

#[test]
fn decoupled_legs_match_the_single_chain() {
    let r = Range::new(0.0, 0.0 + 0.1, 0.1).unwrap();
    let deltas = Range::new(-0.5, 1.5, 0.5).unwrap();
    let grid = run_sweep_2d(&SweepSpec::ladder_surface(6, r, deltas)).unwrap();
    let chain = run_sweep_1d(&SweepSpec::one_d(xxz(6), SweepParam::Delta, deltas)).unwrap();
    for (ladder, leg) in grid.column(0).iter().zip(&chain) {
        assert_eq!(ladder.coords[0], 0.0);
        assert!((ladder.entropy_per_site - leg.entropy_per_site).abs() < 1e-9, "{:?}", ladder.coords);
        assert!((ladder.energy - 2.0 * leg.energy).abs() < 1e-9);
    }
}

#[test]
fn growth_of_curvature_is_reported_per_size() {
    let growth = singularity_growth(
        &dimer(8),
        SweepParam::J2OverJ1,
        &Couplings::default(),
        1.0,
        &[8, 12],
        0.02,
        BipartitionScheme::OddEven,
        &LanczosConfig::default(),
    )
    .unwrap();
    assert_eq!(growth.len(), 2);
    assert!(growth.iter().all(|g| g.is_finite() && *g > 0.0));
    assert!(growth[1] > growth[0]);
}

#[test]
fn curvature_needs_a_sweepable_parameter() {
    let err = singularity_growth(
        &xxz(8),
        SweepParam::J2OverJ1,
        &Couplings::default(),
        1.0,
        &[8],
        0.02,
        BipartitionScheme::OddEven,
        &LanczosConfig::default(),
    );
    assert!(matches!(err, Err(Error::Parameter(_))));
}
