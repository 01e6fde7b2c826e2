//! Reference and multiresolution runs, and the metrics comparing them.

use std::time::Instant;

use crate::model::{ProblemKind, ProblemSpec};
use crate::mr::{
    adaptive_rhs, compression_rate, flux_mask, significance, GridHierarchy, Interpolator, MRState,
    MrConfig, SignificanceMask, ThresholdStrategy,
};
use crate::scheme::{compute_dt, Scheme, SchemeConfig, StateVector, WaveBounds};
use crate::{Error, Result};

/// Snapshots of one run with cumulative cost counters at each snapshot.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub snapshots: Vec<StateVector>,
    /// Exact interface-flux evaluations up to each snapshot.
    pub flux_evaluations: Vec<u64>,
    /// Wall-clock seconds up to each snapshot.
    pub seconds: Vec<f64>,
    pub steps: usize,
}

/// Multiresolution data captured at a snapshot.
#[derive(Debug, Clone)]
pub struct MaskSnapshot {
    pub t: f64,
    pub transform: MRState,
    pub significant: SignificanceMask,
    pub retained: SignificanceMask,
}

#[derive(Debug, Clone)]
pub struct MrRunOutput {
    pub run: RunOutput,
    pub masks: Vec<MaskSnapshot>,
    pub hierarchy: GridHierarchy,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnapshotMetrics {
    pub t: f64,
    /// Compression rate counting safety points.
    pub v: f64,
    /// Compression rate counting thresholded details only.
    pub v_strict: f64,
    /// Cost ratio reference / multiresolution from flux-evaluation counts.
    pub mu: f64,
    /// Wall-clock ratio, when both runs took measurable time.
    pub mu_wall: Option<f64>,
    pub e1: f64,
    pub einf: f64,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunMetrics {
    pub snapshots: Vec<SnapshotMetrics>,
    /// `(reference, multiresolution)` wall-clock seconds.
    pub wall_times: (f64, f64),
    /// `(reference, multiresolution)` exact flux evaluations.
    pub flux_eval_counts: (u64, u64),
}

/// Cost ratio of the reference run to the multiresolution run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Speedup {
    pub wall: Option<f64>,
    pub flux_count: f64,
}

pub fn speedup(metrics: &RunMetrics) -> Speedup {
    let (ref_s, mr_s) = metrics.wall_times;
    let (ref_n, mr_n) = metrics.flux_eval_counts;
    Speedup {
        wall: (ref_s > 0.0 && mr_s > 0.0).then(|| ref_s / mr_s),
        flux_count: ratio(ref_n, mr_n),
    }
}

fn ratio(a: u64, b: u64) -> f64 {
    if b == 0 {
        1.0
    } else {
        a as f64 / b as f64
    }
}

fn check_inputs(problem: &ProblemSpec, config: &SchemeConfig, times: &[f64]) -> Result<Vec<f64>> {
    problem.validate()?;
    let bounds = WaveBounds::of(problem);
    let limit = compute_dt(1.0, config.dx, &bounds);
    if !(config.dt > 0.0) || config.dt > limit * (1.0 + 1e-12) {
        return Err(Error::invalid(
            "dt",
            format!("time step {} violates the CFL bound {limit}", config.dt),
        ));
    }
    let mut sorted = times.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.dedup();
    if let Some(&t) = sorted
        .iter()
        .find(|&&t| !(0.0..=problem.t_end).contains(&t))
    {
        return Err(Error::invalid(
            "snapshots",
            format!("time {t} outside [0, {}]", problem.t_end),
        ));
    }
    Ok(sorted)
}

/// Advance `state` to each requested time in turn, shortening the last step
/// before every snapshot so it lands exactly.
fn march<S, C>(state: StateVector, dt: f64, times: &[f64], mut step: S, mut capture: C) -> RunOutput
where
    S: FnMut(&StateVector, f64) -> (StateVector, u64),
    C: FnMut(&StateVector),
{
    let start = Instant::now();
    let mut state = state;
    let mut evaluations = 0u64;
    let mut out = RunOutput {
        snapshots: Vec::with_capacity(times.len()),
        flux_evaluations: Vec::with_capacity(times.len()),
        seconds: Vec::with_capacity(times.len()),
        steps: 0,
    };
    for &target in times {
        while state.t < target {
            let remaining = target - state.t;
            let lands = remaining <= dt * (1.0 + 1e-9);
            let (mut next, n) = step(&state, if lands { remaining } else { dt });
            if lands {
                next.t = target;
            }
            evaluations += n;
            out.steps += 1;
            state = next;
        }
        state.t = target;
        capture(&state);
        out.snapshots.push(state.clone());
        out.flux_evaluations.push(evaluations);
        out.seconds.push(start.elapsed().as_secs_f64());
    }
    out
}

/// Uniform fine-grid run without multiresolution.
pub fn run_reference(
    problem: &ProblemSpec,
    config: &SchemeConfig,
    snapshot_times: &[f64],
) -> Result<RunOutput> {
    let times = check_inputs(problem, config, snapshot_times)?;
    let scheme = Scheme::new(problem.clone(), *config);
    let per_rhs = scheme.intervals() as u64;
    Ok(march(
        scheme.initial_state(),
        config.dt,
        &times,
        |s, h| (scheme.rk2_step(s, h), 2 * per_rhs),
        |_| {},
    ))
}

/// Multiresolution run: each step encodes the state, thresholds with
/// `ε_k = 2^(k-L) ε` and takes one Heun step with the hybrid flux
/// evaluation. Fluxes are exact next to significant details (closed under
/// grading); safety points enlarge the reported mask and `V`.
pub fn run_mr(
    problem: &ProblemSpec,
    config: &SchemeConfig,
    mr: &MrConfig,
    snapshot_times: &[f64],
) -> Result<MrRunOutput> {
    let times = check_inputs(problem, config, snapshot_times)?;
    if !(mr.epsilon >= 0.0) {
        return Err(Error::invalid("epsilon", "must be non-negative"));
    }
    if problem.kind == ProblemKind::Periodic {
        return Err(Error::invalid(
            "kind",
            "multiresolution runs need Problem A or B",
        ));
    }
    let scheme = Scheme::new(problem.clone(), *config);
    let hierarchy = GridHierarchy::new(scheme.intervals(), mr.levels, problem.height)?;
    let interp = Interpolator::new(mr.order)?;
    let strategy = ThresholdStrategy::new(mr.epsilon, mr.levels);
    let initial = scheme.initial_state();
    // surfaces stencil/hierarchy errors before the loop
    significance(&initial.values, &hierarchy, &interp, &strategy)?;

    let mut masks = Vec::with_capacity(times.len());
    let run = march(
        initial,
        config.dt,
        &times,
        |s, h| {
            let (_, significant, _) = significance(&s.values, &hierarchy, &interp, &strategy)
                .expect("sizes checked before the time loop");
            let exact = flux_mask(&significant, &interp);
            let mut count = 0u64;
            let next = scheme.rk2_step_with(s, h, |u, t| {
                let rhs = adaptive_rhs(&scheme, u, &exact, &hierarchy, &interp, t);
                count += rhs.exact_fluxes as u64;
                rhs.values
            });
            (next, count)
        },
        |s| {
            let (transform, significant, retained) =
                significance(&s.values, &hierarchy, &interp, &strategy)
                    .expect("sizes checked before the time loop");
            masks.push(MaskSnapshot {
                t: s.t,
                transform,
                significant,
                retained,
            });
        },
    );
    Ok(MrRunOutput {
        run,
        masks,
        hierarchy,
    })
}

/// Errors `e_1 = h_0 Σ |u_MR - u_ref|` and `e_∞ = max |u_MR - u_ref|`.
pub fn errors(reference: &StateVector, mr: &StateVector) -> (f64, f64) {
    let (mut sum, mut max) = (0.0f64, 0.0f64);
    for (a, b) in reference.values.iter().zip(&mr.values) {
        let d = (a - b).abs();
        sum += d;
        max = max.max(d);
    }
    (reference.dx * sum, max)
}

pub fn compare(reference: &RunOutput, mr: &MrRunOutput, kind: ProblemKind) -> RunMetrics {
    let snapshots = reference
        .snapshots
        .iter()
        .zip(&mr.run.snapshots)
        .zip(&mr.masks)
        .enumerate()
        .map(|(i, ((r, m), mask))| {
            let (e1, einf) = errors(r, m);
            let (rs, ms) = (reference.seconds[i], mr.run.seconds[i]);
            SnapshotMetrics {
                t: m.t,
                v: compression_rate(&mask.retained, &mr.hierarchy),
                v_strict: compression_rate(&mask.significant, &mr.hierarchy),
                mu: ratio(reference.flux_evaluations[i], mr.run.flux_evaluations[i]),
                mu_wall: (rs > 0.0 && ms > 0.0).then(|| rs / ms),
                e1,
                einf,
                mass: m.mass(kind),
            }
        })
        .collect();
    RunMetrics {
        snapshots,
        wall_times: (
            reference.seconds.last().copied().unwrap_or(0.0),
            mr.run.seconds.last().copied().unwrap_or(0.0),
        ),
        flux_eval_counts: (
            reference.flux_evaluations.last().copied().unwrap_or(0),
            mr.run.flux_evaluations.last().copied().unwrap_or(0),
        ),
    }
}

/// Both runs and their comparison.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub reference: RunOutput,
    pub mr: MrRunOutput,
    pub metrics: RunMetrics,
}

pub fn run_comparison(
    problem: &ProblemSpec,
    config: &SchemeConfig,
    mr: &MrConfig,
    snapshot_times: &[f64],
) -> Result<Comparison> {
    let reference = run_reference(problem, config, snapshot_times)?;
    let mr = run_mr(problem, config, mr, snapshot_times)?;
    let metrics = compare(&reference, &mr, problem.kind);
    Ok(Comparison {
        reference,
        mr,
        metrics,
    })
}
