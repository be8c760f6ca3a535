//! Parameter sweeps over coupling ratios, finite differences, and detection
//! of entropy extrema (1D) and ridges/valleys (2D).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{standard_bipartition, BipartitionScheme, SectorBasis};
use crate::eigensolver::{lanczos_ground_state, GroundStateResult, LanczosConfig};
use crate::entanglement::{concurrence_wootters, reduced_density_matrix, two_site_rdm, von_neumann_entropy};
use crate::error::{param, Error, Result};
use crate::model::{build_dimerized_chain, build_ladder, build_xxz_chain, ModelKind, ModelSpec};

/// Default curvature threshold for ridge/valley points, bits per unit² of parameter.
pub const DEFAULT_RIDGE_THRESHOLD: f64 = 1e-4;

/// Rounds to 12 significant digits, the precision of all serialized output.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepParam {
    Delta,
    J2OverJ1,
    JpOverJ,
}

impl SweepParam {
    pub fn name(&self) -> &'static str {
        match self {
            SweepParam::Delta => "delta",
            SweepParam::J2OverJ1 => "j2_over_j1",
            SweepParam::JpOverJ => "jp_over_j",
        }
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepParam {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "delta" => Ok(Self::Delta),
            "j2_over_j1" => Ok(Self::J2OverJ1),
            "jp_over_j" => Ok(Self::JpOverJ),
            _ => Err(format!("unknown parameter '{s}' (expected delta, j2_over_j1, jp_over_j)")),
        }
    }
}

/// Inclusive grid `start, start + step, ..., stop`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Range {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        let r = Self { start, stop, step };
        r.validate()?;
        Ok(r)
    }

    fn validate(&self) -> Result<()> {
        if !(self.step > 0.0) || !self.step.is_finite() {
            return param(format!("range step must be positive, got {}", self.step));
        }
        if !(self.start < self.stop) || !self.stop.is_finite() || !self.start.is_finite() {
            return param(format!("range start {} must be below stop {}", self.start, self.stop));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        let span = (self.stop - self.start) / self.step;
        (span + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Grid points, snapped to 12 significant digits so serialized and
    /// computed coordinates coincide.
    pub fn points(&self) -> Vec<f64> {
        (0..self.len())
            .map(|k| round_sig12(self.start + k as f64 * self.step))
            .collect()
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range '{s}' is not start:stop:step"));
        }
        let nums: std::result::Result<Vec<f64>, _> = parts.iter().map(|p| p.trim().parse()).collect();
        let nums = nums.map_err(|e| format!("range '{s}': {e}"))?;
        Range::new(nums[0], nums[1], nums[2]).map_err(|e| e.to_string())
    }
}

/// Coupling ratios that define a point in parameter space. The leg/strong
/// coupling of each family is fixed; these are the tunable ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Couplings {
    pub delta: f64,
    pub j2_over_j1: f64,
    pub jp_over_j: f64,
}

impl Default for Couplings {
    fn default() -> Self {
        Self {
            delta: 1.0,
            j2_over_j1: 1.0,
            jp_over_j: 1.0,
        }
    }
}

impl Couplings {
    pub fn with(mut self, p: SweepParam, value: f64) -> Self {
        match p {
            SweepParam::Delta => self.delta = value,
            SweepParam::J2OverJ1 => self.j2_over_j1 = value,
            SweepParam::JpOverJ => self.jp_over_j = value,
        }
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelFamily {
    Xxz { sites: usize, coupling: f64 },
    Dimer { sites: usize, j1: f64 },
    Ladder { rungs: usize, leg_coupling: f64 },
}

impl ModelFamily {
    pub fn kind(&self) -> ModelKind {
        match self {
            ModelFamily::Xxz { .. } => ModelKind::Chain,
            ModelFamily::Dimer { .. } => ModelKind::Dimer,
            ModelFamily::Ladder { .. } => ModelKind::Ladder,
        }
    }

    pub fn site_count(&self) -> usize {
        match *self {
            ModelFamily::Xxz { sites, .. } | ModelFamily::Dimer { sites, .. } => sites,
            ModelFamily::Ladder { rungs, .. } => 2 * rungs,
        }
    }

    /// Same family at another linear size (sites for chains, rungs for ladders).
    pub fn resized(&self, size: usize) -> Self {
        match *self {
            ModelFamily::Xxz { coupling, .. } => ModelFamily::Xxz { sites: size, coupling },
            ModelFamily::Dimer { j1, .. } => ModelFamily::Dimer { sites: size, j1 },
            ModelFamily::Ladder { leg_coupling, .. } => ModelFamily::Ladder { rungs: size, leg_coupling },
        }
    }

    pub fn accepts(&self, p: SweepParam) -> bool {
        matches!(
            (self, p),
            (ModelFamily::Xxz { .. }, SweepParam::Delta)
                | (ModelFamily::Dimer { .. }, SweepParam::J2OverJ1)
                | (ModelFamily::Ladder { .. }, SweepParam::Delta | SweepParam::JpOverJ)
        )
    }

    pub fn build(&self, c: &Couplings) -> Result<ModelSpec> {
        match *self {
            ModelFamily::Xxz { sites, coupling } => build_xxz_chain(sites, coupling, c.delta),
            ModelFamily::Dimer { sites, j1 } => build_dimerized_chain(sites, j1, c.j2_over_j1 * j1),
            ModelFamily::Ladder { rungs, leg_coupling } => {
                build_ladder(rungs, leg_coupling, c.jp_over_j * leg_coupling, c.delta)
            }
        }
    }

    /// Names of the bond classes whose concurrence is reported.
    pub fn bond_classes(&self) -> &'static [&'static str] {
        match self {
            ModelFamily::Xxz { .. } => &["nn"],
            ModelFamily::Dimer { .. } => &["c1", "c2"],
            ModelFamily::Ladder { .. } => &["leg", "rung"],
        }
    }

    /// Representative site pair of each bond class.
    pub fn bond_pairs(&self) -> Vec<(usize, usize)> {
        match *self {
            ModelFamily::Xxz { .. } => vec![(0, 1)],
            ModelFamily::Dimer { .. } => vec![(0, 1), (1, 2)],
            ModelFamily::Ladder { rungs, .. } => vec![(0, 1), (0, rungs)],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ObservableRow {
    pub coords: Vec<f64>,
    pub energy: f64,
    pub entropy_bits: f64,
    pub entropy_per_site: f64,
    /// Aligned with [`ModelFamily::bond_classes`].
    pub concurrences: Vec<f64>,
    pub sector_gap: f64,
    pub degenerate: bool,
    pub error: Option<String>,
}

impl ObservableRow {
    fn failed(coords: Vec<f64>, classes: usize, message: String) -> Self {
        Self {
            coords,
            energy: f64::NAN,
            entropy_bits: f64::NAN,
            entropy_per_site: f64::NAN,
            concurrences: vec![f64::NAN; classes],
            sector_gap: f64::NAN,
            degenerate: false,
            error: Some(message),
        }
    }

    /// Observable by its column name (`energy`, `entropy_bits`,
    /// `entropy_per_site`, `gap`, `conc_<class>`).
    pub fn value(&self, family: &ModelFamily, observable: &str) -> Option<f64> {
        match observable {
            "energy" => Some(self.energy),
            "entropy_bits" => Some(self.entropy_bits),
            "entropy_per_site" => Some(self.entropy_per_site),
            "gap" => Some(self.sector_gap),
            other => {
                let class = other.strip_prefix("conc_")?;
                let k = family.bond_classes().iter().position(|c| *c == class)?;
                Some(self.concurrences[k])
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub family: ModelFamily,
    /// Values of the non-swept ratios.
    pub base: Couplings,
    /// One axis for 1D sweeps; two (outer, inner) for 2D.
    pub axes: Vec<(SweepParam, Range)>,
    pub scheme: BipartitionScheme,
    pub lanczos: LanczosConfig,
    /// 0 = rayon default; 1 = sequential reference mode.
    pub threads: usize,
}

impl SweepSpec {
    pub fn one_d(family: ModelFamily, param: SweepParam, range: Range) -> Self {
        Self {
            scheme: family.kind().default_bipartition(),
            family,
            base: Couplings::default(),
            axes: vec![(param, range)],
            lanczos: LanczosConfig::default(),
            threads: 1,
        }
    }

    /// Ladder surface over (J′/J, Δ).
    pub fn ladder_surface(rungs: usize, jp_range: Range, delta_range: Range) -> Self {
        let family = ModelFamily::Ladder { rungs, leg_coupling: 1.0 };
        Self {
            scheme: BipartitionScheme::Checkerboard,
            family,
            base: Couplings::default(),
            axes: vec![(SweepParam::JpOverJ, jp_range), (SweepParam::Delta, delta_range)],
            lanczos: LanczosConfig::default(),
            threads: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        for (p, r) in &self.axes {
            r.validate()?;
            if !self.family.accepts(*p) {
                return param(format!("parameter {p} cannot be swept for {:?}", self.family.kind()));
            }
        }
        standard_bipartition(self.family.kind().lattice(), self.family.site_count(), self.scheme)?;
        self.lanczos.validate()
    }
}

/// Ground state plus observables at one parameter point.
pub fn evaluate_point(
    family: &ModelFamily,
    couplings: &Couplings,
    scheme: BipartitionScheme,
    cfg: &LanczosConfig,
    basis: &Arc<SectorBasis>,
    coords: Vec<f64>,
) -> ObservableRow {
    match family.build(couplings) {
        Ok(model) => evaluate_model(&model, family, scheme, cfg, basis, coords),
        Err(e) => ObservableRow::failed(coords, family.bond_classes().len(), e.to_string()),
    }
}

/// Observables of an already built model; `family` only selects the bond
/// classes whose concurrence is reported.
pub fn evaluate_model(
    model: &ModelSpec,
    family: &ModelFamily,
    scheme: BipartitionScheme,
    cfg: &LanczosConfig,
    basis: &Arc<SectorBasis>,
    coords: Vec<f64>,
) -> ObservableRow {
    match observe(model, family, scheme, cfg, basis) {
        Ok((gs, entropy, per_site, concurrences)) => ObservableRow {
            coords,
            energy: gs.energy,
            entropy_bits: entropy,
            entropy_per_site: per_site,
            concurrences,
            sector_gap: gs.sector_gap,
            degenerate: gs.degenerate,
            error: None,
        },
        Err(e) => ObservableRow::failed(coords, family.bond_classes().len(), e.to_string()),
    }
}

fn observe(
    model: &ModelSpec,
    family: &ModelFamily,
    scheme: BipartitionScheme,
    cfg: &LanczosConfig,
    basis: &Arc<SectorBasis>,
) -> Result<(GroundStateResult, f64, f64, Vec<f64>)> {
    let mask = standard_bipartition(model.lattice(), model.site_count(), scheme)?;
    let gs = lanczos_ground_state(model, basis, cfg)?;
    let rho = reduced_density_matrix(&gs.wavefunction, &mask)?;
    let entropy = von_neumann_entropy(&rho)?;
    let per_site = entropy / mask.kept_len() as f64;
    let concurrences = family
        .bond_pairs()
        .into_iter()
        .map(|(i, j)| two_site_rdm(&gs.wavefunction, i, j).map(|r| concurrence_wootters(&r)))
        .collect::<Result<Vec<_>>>()?;
    Ok((gs, entropy, per_site, concurrences))
}

/// Single point, with the same Sz = 0 sector the sweeps use.
pub fn evaluate_single(
    family: &ModelFamily,
    couplings: &Couplings,
    scheme: BipartitionScheme,
    cfg: &LanczosConfig,
) -> Result<ObservableRow> {
    let basis = Arc::new(SectorBasis::zero_magnetization(family.site_count())?);
    Ok(evaluate_point(family, couplings, scheme, cfg, &basis, Vec::new()))
}

fn run_points(spec: &SweepSpec, points: Vec<(Couplings, Vec<f64>)>) -> Result<Vec<ObservableRow>> {
    let basis = Arc::new(SectorBasis::zero_magnetization(spec.family.site_count())?);
    let eval = |(c, coords): &(Couplings, Vec<f64>)| {
        evaluate_point(&spec.family, c, spec.scheme, &spec.lanczos, &basis, coords.clone())
    };
    if spec.threads == 1 {
        return Ok(points.iter().map(eval).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.threads)
        .build()
        .map_err(|e| Error::Numerical(format!("thread pool: {e}")))?;
    Ok(pool.install(|| points.par_iter().map(eval).collect()))
}

/// One row per grid point, ascending.
pub fn run_sweep_1d(spec: &SweepSpec) -> Result<Vec<ObservableRow>> {
    spec.validate()?;
    let [(p, range)] = spec.axes.as_slice() else {
        return param(format!("1D sweep needs one axis, got {}", spec.axes.len()));
    };
    let points = range
        .points()
        .into_iter()
        .map(|x| (spec.base.with(*p, x), vec![x]))
        .collect();
    run_points(spec, points)
}

/// Ladder grid in row-major order: outer J′/J ascending, inner Δ ascending.
pub fn run_sweep_2d(spec: &SweepSpec) -> Result<Grid2d<ObservableRow>> {
    spec.validate()?;
    let [(px, rx), (py, ry)] = spec.axes.as_slice() else {
        return param(format!("2D sweep needs two axes, got {}", spec.axes.len()));
    };
    if !matches!(spec.family, ModelFamily::Ladder { .. })
        || *px != SweepParam::JpOverJ
        || *py != SweepParam::Delta
    {
        return param("2D sweeps run the ladder over (jp_over_j, delta)");
    }
    let xs = rx.points();
    let ys = ry.points();
    let mut points = Vec::with_capacity(xs.len() * ys.len());
    for &x in &xs {
        for &y in &ys {
            points.push((spec.base.with(*px, x).with(*py, y), vec![x, y]));
        }
    }
    let rows = run_points(spec, points)?;
    Grid2d::new(xs, ys, rows)
}

/// Values on a rectangular grid, row-major with `x` outer.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid2d<T> {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub values: Vec<T>,
}

impl<T> Grid2d<T> {
    pub fn new(xs: Vec<f64>, ys: Vec<f64>, values: Vec<T>) -> Result<Self> {
        if xs.len() * ys.len() != values.len() {
            return param(format!(
                "{} values for a {}x{} grid",
                values.len(),
                xs.len(),
                ys.len()
            ));
        }
        Ok(Self { xs, ys, values })
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.values[i * self.ys.len() + j]
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Grid2d<U> {
        Grid2d {
            xs: self.xs.clone(),
            ys: self.ys.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Values at fixed `x = xs[i]`, along y.
    pub fn column(&self, i: usize) -> &[T] {
        let ny = self.ys.len();
        &self.values[i * ny..(i + 1) * ny]
    }
}

/// Interior central differences; endpoints are dropped.
pub fn central_differences(values: &[f64], step: f64, order: u8) -> Result<Vec<f64>> {
    if values.len() < 3 {
        return param(format!("need at least 3 points, got {}", values.len()));
    }
    if !(step > 0.0) {
        return param("step must be positive");
    }
    let out = values.windows(3).map(|w| match order {
        1 => Ok((w[2] - w[0]) / (2.0 * step)),
        2 => Ok((w[2] - 2.0 * w[1] + w[0]) / (step * step)),
        _ => param(format!("derivative order {order} not supported")),
    });
    out.collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryKind {
    Max,
    Min,
    Ridge,
    Valley,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub coords: Vec<f64>,
    pub kind: BoundaryKind,
    pub axis: Axis,
    pub value: f64,
    pub second_derivative: f64,
    /// Set when the point was found on a derivative grid (`d/dx`, `d/dy`).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

fn curvature(xs: &[f64], values: &[f64], k: usize) -> f64 {
    let h = 0.5 * (xs[k + 1] - xs[k - 1]);
    (values[k + 1] - 2.0 * values[k] + values[k - 1]) / (h * h)
}

/// Strict discrete extrema of a series; a run of equal values counts once,
/// at its midpoint.
pub fn extrema_of_series(xs: &[f64], values: &[f64]) -> Vec<BoundaryPoint> {
    let n = values.len();
    let mut out = Vec::new();
    if n < 3 || xs.len() != n {
        return out;
    }
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end + 1 < n && values[end + 1] == values[start] {
            end += 1;
        }
        if start > 0 && end + 1 < n {
            let v = values[start];
            let (left, right) = (values[start - 1], values[end + 1]);
            let kind = if v > left && v > right {
                Some(BoundaryKind::Max)
            } else if v < left && v < right {
                Some(BoundaryKind::Min)
            } else {
                None
            };
            if let Some(kind) = kind {
                let mid = (start + end) / 2;
                out.push(BoundaryPoint {
                    coords: vec![xs[mid]],
                    kind,
                    axis: Axis::None,
                    value: values[mid],
                    second_derivative: curvature(xs, values, mid),
                    source: None,
                });
            }
        }
        start = end + 1;
    }
    out
}

pub fn find_local_extrema(
    family: &ModelFamily,
    rows: &[ObservableRow],
    observable: &str,
) -> Result<Vec<BoundaryPoint>> {
    let xs: Vec<f64> = rows.iter().map(|r| r.coords.first().copied().unwrap_or(f64::NAN)).collect();
    let values = rows
        .iter()
        .map(|r| {
            r.value(family, observable)
                .ok_or_else(|| Error::Parameter(format!("unknown observable '{observable}'")))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(extrema_of_series(&xs, &values))
}

/// Ridge (valley) points: strict local maxima (minima) of the 1D slice along
/// an axis whose curvature magnitude reaches `threshold`. Points on the outer
/// frame of the grid are never reported.
pub fn extract_ridges_valleys(grid: &Grid2d<f64>, threshold: f64) -> Vec<BoundaryPoint> {
    let (nx, ny) = (grid.xs.len(), grid.ys.len());
    let mut out = Vec::new();
    if nx < 3 || ny < 3 {
        return out;
    }
    let at = |i: usize, j: usize| *grid.get(i, j);
    for i in 1..nx - 1 {
        for j in 1..ny - 1 {
            let v = at(i, j);
            let along_x = [at(i - 1, j), v, at(i + 1, j)];
            let along_y = [at(i, j - 1), v, at(i, j + 1)];
            let slices = [
                (Axis::X, along_x, &grid.xs[i - 1..=i + 1]),
                (Axis::Y, along_y, &grid.ys[j - 1..=j + 1]),
            ];
            for (axis, w, coords) in slices {
                let kind = if v > w[0] && v > w[2] {
                    BoundaryKind::Ridge
                } else if v < w[0] && v < w[2] {
                    BoundaryKind::Valley
                } else {
                    continue;
                };
                let d2 = curvature(coords, &w, 1);
                if d2.abs() >= threshold {
                    out.push(BoundaryPoint {
                        coords: vec![grid.xs[i], grid.ys[j]],
                        kind,
                        axis,
                        value: v,
                        second_derivative: d2,
                        source: None,
                    });
                }
            }
        }
    }
    out
}

/// First derivative along one axis at interior points; the grid shrinks by
/// one point on each side of that axis.
pub fn derivative_grid(grid: &Grid2d<f64>, axis: Axis) -> Result<Grid2d<f64>> {
    let (nx, ny) = (grid.xs.len(), grid.ys.len());
    match axis {
        Axis::X if nx >= 3 => {
            let mut values = Vec::with_capacity((nx - 2) * ny);
            for i in 1..nx - 1 {
                let h = grid.xs[i + 1] - grid.xs[i - 1];
                for j in 0..ny {
                    values.push((grid.get(i + 1, j) - grid.get(i - 1, j)) / h);
                }
            }
            Grid2d::new(grid.xs[1..nx - 1].to_vec(), grid.ys.clone(), values)
        }
        Axis::Y if ny >= 3 => {
            let mut values = Vec::with_capacity(nx * (ny - 2));
            for i in 0..nx {
                for j in 1..ny - 1 {
                    let h = grid.ys[j + 1] - grid.ys[j - 1];
                    values.push((grid.get(i, j + 1) - grid.get(i, j - 1)) / h);
                }
            }
            Grid2d::new(grid.xs.clone(), grid.ys[1..ny - 1].to_vec(), values)
        }
        _ => param("derivative grid needs at least 3 points along the axis"),
    }
}

/// Boundary points of the surface, optionally also of its first-derivative
/// surfaces (tagged with `source`).
pub fn boundary_report(grid: &Grid2d<f64>, threshold: f64, on_derivative: bool) -> Result<Vec<BoundaryPoint>> {
    let mut points = extract_ridges_valleys(grid, threshold);
    if on_derivative {
        for (axis, tag) in [(Axis::X, "d/dx"), (Axis::Y, "d/dy")] {
            let dg = derivative_grid(grid, axis)?;
            points.extend(extract_ridges_valleys(&dg, threshold).into_iter().map(|mut p| {
                p.source = Some(tag.to_string());
                p
            }));
        }
    }
    Ok(points)
}

/// `|f''(point)|` for each size, from the five-point fourth-order stencil
/// with spacing `step`.
pub fn second_derivative_growth<F>(mut f: F, point: f64, sizes: &[usize], step: f64) -> Result<Vec<f64>>
where
    F: FnMut(usize, f64) -> Result<f64>,
{
    if !(step > 0.0) {
        return param("stencil step must be positive");
    }
    sizes
        .iter()
        .map(|&n| {
            let mut v = [0.0; 5];
            for (k, slot) in v.iter_mut().enumerate() {
                *slot = f(n, round_sig12(point + (k as f64 - 2.0) * step))?;
            }
            let d2 = (-v[0] + 16.0 * v[1] - 30.0 * v[2] + 16.0 * v[3] - v[4]) / (12.0 * step * step);
            Ok(d2.abs())
        })
        .collect()
}

/// Second-derivative magnitude of the entropy per kept site at `point` for
/// each system size.
pub fn singularity_growth(
    family: &ModelFamily,
    parameter: SweepParam,
    base: &Couplings,
    point: f64,
    sizes: &[usize],
    step: f64,
    scheme: BipartitionScheme,
    cfg: &LanczosConfig,
) -> Result<Vec<f64>> {
    if !family.accepts(parameter) {
        return param(format!("parameter {parameter} cannot be swept for {:?}", family.kind()));
    }
    second_derivative_growth(
        |n, x| {
            let fam = family.resized(n);
            let c = base.with(parameter, x);
            let row = evaluate_single(&fam, &c, scheme, cfg)?;
            match row.error {
                Some(msg) => Err(Error::Numerical(msg)),
                None => Ok(row.entropy_per_site),
            }
        },
        point,
        sizes,
        step,
    )
}
