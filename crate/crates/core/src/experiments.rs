//! End-to-end scenarios: a Bell pair with Alice under a local PT-symmetric
//! unitary, its `Et = π/2` snapshot, the singlet seen through a CPT partial
//! trace, and the resulting signaling distance.
//!
//! Time enters only through the dimensionless phase `Et = (E₊ − E₋)·t`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::composite::{
    partial_trace_conventional, partial_trace_cpt, BipartiteState, EntanglementReport, Subsystem,
    WorldTag,
};
use crate::linalg::{maximally_mixed, tensor, trace_distance, ComplexMatrix, ComplexVector};
use crate::ptcore::{cpt_metric, evolution_operator, PTHamiltonian};
use crate::{Error, Result, EXACT_TOL, ORACLE_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scenario {
    BellEvolution,
    PiHalf,
    SingletMismatch,
    Signaling,
}

impl Scenario {
    pub const ALL: [Scenario; 4] = [
        Scenario::BellEvolution,
        Scenario::PiHalf,
        Scenario::SingletMismatch,
        Scenario::Signaling,
    ];

    /// Short name used on the command line and in file names.
    pub fn name(self) -> &'static str {
        match self {
            Scenario::BellEvolution => "bell",
            Scenario::PiHalf => "pihalf",
            Scenario::SingletMismatch => "singlet",
            Scenario::Signaling => "signal",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bell" | "bell_evolution" => Ok(Scenario::BellEvolution),
            "pihalf" | "pi_half" => Ok(Scenario::PiHalf),
            "singlet" | "singlet_mismatch" => Ok(Scenario::SingletMismatch),
            "signal" | "signaling" => Ok(Scenario::Signaling),
            other => Err(Error::InvalidParameter(format!("unknown scenario '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub alpha_values: Vec<f64>,
    pub et_values: Vec<f64>,
    pub scenario: Scenario,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.alpha_values.is_empty() {
            return Err(Error::InvalidParameter("alpha_values must not be empty".into()));
        }
        if self.et_values.is_empty() {
            return Err(Error::InvalidParameter("et_values must not be empty".into()));
        }
        let limit = FRAC_PI_2 - 1e-6;
        if let Some(bad) = self.alpha_values.iter().find(|a| !(a.abs() < limit)) {
            return Err(Error::InvalidParameter(format!("alpha {bad} outside |α| < π/2 − 1e-6")));
        }
        if let Some(bad) = self.et_values.iter().find(|e| !e.is_finite()) {
            return Err(Error::InvalidParameter(format!("et {bad} is not finite")));
        }
        Ok(())
    }

    /// Grid points `(α, Et)` this scenario visits. The snapshot scenario
    /// pins `Et = π/2` and the singlet scenario has no evolution (`Et = 0`).
    pub fn points(&self) -> Vec<(f64, f64)> {
        let mut points: Vec<(f64, f64)> = match self.scenario {
            Scenario::BellEvolution | Scenario::Signaling => self
                .alpha_values
                .iter()
                .flat_map(|&a| self.et_values.iter().map(move |&e| (a, e)))
                .collect(),
            Scenario::PiHalf => self.alpha_values.iter().map(|&a| (a, FRAC_PI_2)).collect(),
            Scenario::SingletMismatch => self.alpha_values.iter().map(|&a| (a, 0.0)).collect(),
        };
        points.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
        points.dedup();
        points
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioResult {
    pub alpha: f64,
    pub et: f64,
    pub report: EntanglementReport,
    pub k_closed_form: Option<f64>,
    pub k_numeric: Option<f64>,
}

/// Literal `K(t)`:
/// `√(7 − 8 cos Et + cos 2Et + 2 cos 2α sin²Et)·sin α / (4(1 − cos Et sin²α))`.
///
/// Signed: negative for `α < 0`, where the eigenvalue labels swap.
pub fn k_of_t(alpha: f64, et: f64) -> Result<f64> {
    if !(alpha.abs() < FRAC_PI_2) {
        return Err(Error::MetricSingular { cos_alpha: alpha.cos() });
    }
    let (sin_a, cos_et) = (alpha.sin(), et.cos());
    let denominator = 4.0 * (1.0 - cos_et * sin_a * sin_a);
    if !(denominator > 1e-12) {
        return Err(Error::DenominatorVanishes { alpha, et });
    }
    let radicand = 7.0 - 8.0 * cos_et + (2.0 * et).cos() + 2.0 * (2.0 * alpha).cos() * et.sin().powi(2);
    // The radicand is non-negative analytically; only rounding can push it below.
    let radicand = if radicand < 0.0 && radicand > -1e-12 { 0.0 } else { radicand };
    Ok(radicand.sqrt() * sin_a / denominator)
}

/// Bob's reduced state at `Et = π/2`:
/// `½[[1 + sin α cos α, i sin α], [−i sin α, 1 − sin α cos α]]`.
pub fn pi_half_closed_form(alpha: f64) -> ComplexMatrix {
    let (s, c) = alpha.sin_cos();
    ComplexMatrix::from_rows(&[
        [Complex64::new(1.0 + s * c, 0.0), Complex64::new(0.0, s)],
        [Complex64::new(0.0, -s), Complex64::new(1.0 - s * c, 0.0)],
    ])
    .scale_real(0.5)
}

/// `−½(1+sin α) log₂ ½(1+sin α) − ½(1−sin α) log₂ ½(1−sin α)`.
pub fn singlet_entropy_closed_form(alpha: f64) -> f64 {
    let s = alpha.sin();
    [0.5 * (1.0 + s), 0.5 * (1.0 - s)]
        .into_iter()
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.log2())
        .sum()
}

/// `c[n][b] = ⟨ψₙ|b⟩_CPT` for `n ∈ {+, −}`, `b ∈ {0, 1}`: the coefficients
/// that expand the evolved Bell state over Alice's eigenbasis.
pub fn expansion_coefficients(h: &PTHamiltonian) -> Result<[[Complex64; 2]; 2]> {
    let metric = h.metric()?;
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (n, psi) in [h.psi_plus(), h.psi_minus()].into_iter().enumerate() {
        for b in 0..2 {
            out[n][b] = metric.inner(psi, &ComplexVector::basis(2, b))?;
        }
    }
    Ok(out)
}

fn check(name: &str, deviation: f64, tol: f64) -> Result<()> {
    if deviation <= tol {
        Ok(())
    } else {
        Err(Error::InvariantViolation { check: name.into(), deviation })
    }
}

/// `(U(t) ⊗ I)|Φ⟩` for `|Φ⟩ = (|00⟩ + |11⟩)/√2`, not renormalised.
fn evolved_bell_state(h: &PTHamiltonian, t: f64) -> Result<ComplexVector> {
    let u = evolution_operator(h, t)?;
    let local = tensor(&u, &ComplexMatrix::identity(2));
    Ok(local.mul_vec(BipartiteState::bell_phi_plus().amplitudes()))
}

/// The same state assembled as `(1/√2) Σₙ e^{−iEₙt} |ψₙ⟩|φₙ⟩` with
/// `|φₙ⟩ = Σ_b ⟨ψₙ|b⟩_CPT |b⟩`.
fn evolved_bell_state_eigen_expansion(h: &PTHamiltonian, t: f64) -> Result<ComplexVector> {
    let c = expansion_coefficients(h)?;
    let mut state = ComplexVector::zeros(4);
    for (n, (psi, energy)) in [(h.psi_plus(), h.e_plus()), (h.psi_minus(), h.e_minus())]
        .into_iter()
        .enumerate()
    {
        let phase = Complex64::new(0.0, -energy * t).exp() * std::f64::consts::FRAC_1_SQRT_2;
        let phi = ComplexVector::new(vec![c[n][0], c[n][1]]);
        state = &state + &tensor(psi, &phi).scale(phase);
    }
    Ok(state)
}

/// Alice applies `U(t) = exp(−iHt)` to her half of `(|00⟩ + |11⟩)/√2`, with
/// `t = Et/(E₊ − E₋)`; Bob traces her out by the conventional rules and
/// renormalises.
pub fn evolve_bell_local_pt(h: &PTHamiltonian, et: f64) -> Result<ScenarioResult> {
    let alpha = h.alpha();
    let t = et / h.gap();

    let c = expansion_coefficients(h)?;
    let c0 = Complex64::from_polar(1.0 / (2.0 * alpha.cos()).sqrt(), alpha / 2.0);
    let stated = [[c0, c0.conj()], [c0.conj(), -c0]];
    let coefficient_dev = (0..2)
        .flat_map(|n| (0..2).map(move |b| (n, b)))
        .map(|(n, b)| (c[n][b] - stated[n][b]).norm())
        .fold(0.0, f64::max);
    check("expansion coefficients match c, c*, c*, −c", coefficient_dev, EXACT_TOL)?;

    let state = evolved_bell_state(h, t)?;
    let expanded = evolved_bell_state_eigen_expansion(h, t)?;
    check(
        "(U⊗I)|Φ⟩ equals its eigenbasis expansion",
        state.max_abs_diff(&expanded),
        ORACLE_TOL,
    )?;

    let psi = BipartiteState::from_amplitudes(state)?;
    let rho_b = partial_trace_conventional(&psi.density_matrix(), Subsystem::A)?;
    let report = EntanglementReport::from_reduced_state(rho_b, WorldTag::CptAlice)?;

    let k_closed = k_of_t(alpha, et)?;
    let k_numeric = report.half_gap();
    check("|K closed form| equals (λ₊ − λ₋)/2", (k_closed.abs() - k_numeric).abs(), ORACLE_TOL)?;

    Ok(ScenarioResult {
        alpha,
        et,
        report,
        k_closed_form: Some(k_closed),
        k_numeric: Some(k_numeric),
    })
}

/// The `Et = π/2` snapshot from its closed form, cross-checked entrywise
/// against the full evolution pipeline.
pub fn rho_b_pi_half(alpha: f64) -> Result<ScenarioResult> {
    let h = PTHamiltonian::for_alpha(alpha)?;
    let closed = pi_half_closed_form(alpha);
    let pipeline = evolve_bell_local_pt(&h, FRAC_PI_2)?;
    check(
        "pipeline ρ_B equals the Et = π/2 closed form",
        closed.max_abs_diff(&pipeline.report.reduced_state),
        ORACLE_TOL,
    )?;

    let report = EntanglementReport::from_reduced_state(closed, WorldTag::CptAlice)?;
    let spectral = 0.5 * (1.0 - alpha.cos().powi(4)).sqrt();
    let dev = (report.eigenvalues[0] - (0.5 + spectral))
        .abs()
        .max((report.eigenvalues[1] - (0.5 - spectral)).abs());
    check("snapshot eigenvalues equal ½(1 ± √(1 − cos⁴α))", dev, ORACLE_TOL)?;

    let k_numeric = report.half_gap();
    Ok(ScenarioResult {
        alpha,
        et: FRAC_PI_2,
        report,
        k_closed_form: Some(k_of_t(alpha, FRAC_PI_2)?),
        k_numeric: Some(k_numeric),
    })
}

/// The singlet with Alice's overlaps taken in the CPT inner product.
pub fn singlet_mismatch(alpha: f64) -> Result<ScenarioResult> {
    let h = PTHamiltonian::for_alpha(alpha)?;
    let metric = cpt_metric(alpha)?;
    let basis = [h.psi_plus().clone(), h.psi_minus().clone()];
    let rho_b = partial_trace_cpt(&BipartiteState::singlet(), &metric, &basis)?;
    let report = EntanglementReport::from_reduced_state(rho_b, WorldTag::CptAlice)?;

    let s = alpha.sin().abs();
    let dev = (report.eigenvalues[0] - 0.5 * (1.0 + s))
        .abs()
        .max((report.eigenvalues[1] - 0.5 * (1.0 - s)).abs());
    check("singlet eigenvalues equal ½(1 ± sin α)", dev, ORACLE_TOL)?;

    Ok(ScenarioResult {
        alpha,
        et: 0.0,
        report,
        k_closed_form: None,
        k_numeric: None,
    })
}

/// Trace distance between Bob's state when Alice idles (`I/2`) and when she
/// applies the local PT unitary for phase `Et`.
pub fn signaling_demo(alpha: f64, et: f64) -> Result<f64> {
    let h = PTHamiltonian::for_alpha(alpha)?;
    let result = evolve_bell_local_pt(&h, et)?;
    trace_distance(&maximally_mixed(2), &result.report.reduced_state)
}

/// Control arm: Alice applies a conventional unitary `u` instead. Bob's
/// conventional reduced state stays `I/2`, so the distance is zero.
pub fn signaling_control(u: &ComplexMatrix) -> Result<f64> {
    let psi = BipartiteState::bell_phi_plus().apply_local(u, &ComplexMatrix::identity(2))?;
    let rho_b = partial_trace_conventional(&psi.density_matrix(), Subsystem::A)?;
    trace_distance(&maximally_mixed(2), &rho_b)
}

/// Evaluates one grid point of a scenario.
pub fn run_point(scenario: Scenario, alpha: f64, et: f64) -> Result<ScenarioResult> {
    match scenario {
        Scenario::BellEvolution | Scenario::Signaling => {
            evolve_bell_local_pt(&PTHamiltonian::for_alpha(alpha)?, et)
        }
        Scenario::PiHalf => rho_b_pi_half(alpha),
        Scenario::SingletMismatch => singlet_mismatch(alpha),
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepOutcome {
    /// Sorted by `(α, Et)`.
    pub results: Vec<ScenarioResult>,
    /// Points where the `K(t)` denominator vanished.
    pub skipped: Vec<(f64, f64)>,
}

impl SweepOutcome {
    /// Assembles per-point outcomes in any order into a sorted outcome.
    /// Vanishing-denominator points are recorded as skipped; any other error
    /// aborts.
    pub fn collect<I>(points: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((f64, f64), Result<ScenarioResult>)>,
    {
        let mut outcome = SweepOutcome::default();
        for (point, result) in points {
            match result {
                Ok(r) => outcome.results.push(r),
                Err(Error::DenominatorVanishes { .. }) => outcome.skipped.push(point),
                Err(e) => return Err(e),
            }
        }
        outcome
            .results
            .sort_by(|x, y| x.alpha.total_cmp(&y.alpha).then(x.et.total_cmp(&y.et)));
        outcome
            .skipped
            .sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
        Ok(outcome)
    }
}

pub fn sweep(spec: &SweepSpec) -> Result<SweepOutcome> {
    spec.validate()?;
    SweepOutcome::collect(
        spec.points()
            .into_iter()
            .map(|(a, e)| ((a, e), run_point(spec.scenario, a, e))),
    )
}

/// `n` evenly spaced values from `min` to `max` inclusive (`min` alone when
/// `n = 1`).
pub fn linspace(min: f64, max: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![min],
        _ => (0..n)
            .map(|i| if i == n - 1 { max } else { min + (max - min) * i as f64 / (n - 1) as f64 })
            .collect(),
    }
}

/// Default `Et` grid over one period.
pub fn full_period(n: usize) -> Vec<f64> {
    linspace(0.0, 2.0 * PI, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli_y;

    /// `K` at `Et = π/2` reduced by hand: `sin α · √(2 − sin²α) / 2`.
    fn k_pi_half_reduced(alpha: f64) -> f64 {
        let s = alpha.sin();
        s * (2.0 - s * s).sqrt() / 2.0
    }

    /// Factored radicand `2(1 − cos Et)[(3 − cos Et) + cos 2α (1 + cos Et)]`.
    fn k_factored(alpha: f64, et: f64) -> f64 {
        let c = et.cos();
        let radicand = 2.0 * (1.0 - c) * ((3.0 - c) + (2.0 * alpha).cos() * (1.0 + c));
        radicand.sqrt() * alpha.sin() / (4.0 * (1.0 - c * alpha.sin().powi(2)))
    }

    #[test]
    fn k_edge_values() {
        assert_eq!(k_of_t(0.7, 0.0).unwrap(), 0.0);
        for et in [0.0, 0.5, 2.0, 6.0] {
            assert_eq!(k_of_t(0.0, et).unwrap(), 0.0);
        }
        let alpha = PI / 6.0;
        assert!((k_of_t(alpha, FRAC_PI_2).unwrap() - 7f64.sqrt() / 8.0).abs() < 1e-12);
        assert!((k_pi_half_reduced(alpha) - 7f64.sqrt() / 8.0).abs() < 1e-15);
        for alpha in [0.1f64, 0.6, 1.2, 1.5] {
            let half = 0.5 * (1.0 - alpha.cos().powi(4)).sqrt();
            assert!((k_of_t(alpha, FRAC_PI_2).unwrap() - half).abs() < 1e-12);
            assert!((k_pi_half_reduced(alpha) - half).abs() < 1e-12);
        }
    }

    #[test]
    fn k_literal_matches_factored_form() {
        for alpha in [-1.2f64, -0.3, 0.4, 1.1] {
            for et in [0.3, 1.0, 2.5, 4.0, 5.9] {
                assert!((k_of_t(alpha, et).unwrap() - k_factored(alpha, et)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn k_rejects_singular_alpha() {
        assert!(matches!(k_of_t(FRAC_PI_2, 0.0), Err(Error::MetricSingular { .. })));
    }

    #[test]
    fn expansion_coefficients_match_stated_values() {
        for alpha in [-1.0, 0.0, 0.5, 1.4] {
            let h = PTHamiltonian::for_alpha(alpha).unwrap();
            let c = expansion_coefficients(&h).unwrap();
            let c0 = Complex64::from_polar(1.0 / (2.0 * alpha.cos()).sqrt(), alpha / 2.0);
            assert!((c[0][0] - c0).norm() < 1e-12);
            assert!((c[0][1] - c0.conj()).norm() < 1e-12);
            assert!((c[1][0] - c0.conj()).norm() < 1e-12);
            assert!((c[1][1] + c0).norm() < 1e-12);
        }
    }

    #[test]
    fn bell_hermitian_limit_keeps_one_bit() {
        let h = PTHamiltonian::for_alpha(0.0).unwrap();
        for et in [0.0, 0.7, 3.0, 6.2] {
            let r = evolve_bell_local_pt(&h, et).unwrap();
            assert!((r.report.entropy_bits - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn bell_at_zero_phase_is_mixed() {
        let h = PTHamiltonian::for_alpha(0.9).unwrap();
        let r = evolve_bell_local_pt(&h, 0.0).unwrap();
        assert!(r.report.reduced_state.approx_eq(&maximally_mixed(2), 1e-12));
        assert!((r.report.entropy_bits - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bell_snapshot_at_pi_over_six() {
        let alpha = PI / 6.0;
        let r = evolve_bell_local_pt(&PTHamiltonian::for_alpha(alpha).unwrap(), FRAC_PI_2).unwrap();
        let k = 7f64.sqrt() / 8.0;
        assert!((r.report.eigenvalues[0] - (0.5 + k)).abs() < 1e-10);
        assert!((r.report.eigenvalues[1] - (0.5 - k)).abs() < 1e-10);
        let entropy = -(0.5 + k) * (0.5 + k).log2() - (0.5 - k) * (0.5 - k).log2();
        assert!((entropy - 0.656).abs() < 5e-4);
        assert!((r.report.entropy_bits - entropy).abs() < 1e-10);
    }

    #[test]
    fn bell_pipeline_independent_of_hamiltonian_scale() {
        // Same α from a different (r, s, θ): Bob's state depends only on α and Et.
        let a = PTHamiltonian::new(1.0, 1.0, PI / 6.0).unwrap();
        let b = PTHamiltonian::for_alpha(PI / 6.0).unwrap();
        for et in [0.4, FRAC_PI_2, 2.9] {
            let ra = evolve_bell_local_pt(&a, et).unwrap();
            let rb = evolve_bell_local_pt(&b, et).unwrap();
            assert!(ra.report.reduced_state.approx_eq(&rb.report.reduced_state, 1e-10));
        }
    }

    #[test]
    fn pi_half_scenario() {
        let r = rho_b_pi_half(0.0).unwrap();
        assert!(r.report.reduced_state.approx_eq(&maximally_mixed(2), 1e-15));
        let r = rho_b_pi_half(PI / 6.0).unwrap();
        assert!((r.report.entropy_bits - 0.656).abs() < 5e-4);
        assert!((r.k_closed_form.unwrap() - r.k_numeric.unwrap()).abs() < 1e-10);
    }

    #[test]
    fn singlet_scenario() {
        assert!((singlet_mismatch(0.0).unwrap().report.entropy_bits - 1.0).abs() < 1e-12);
        let r = singlet_mismatch(PI / 6.0).unwrap();
        assert!((r.report.eigenvalues[0] - 0.75).abs() < 1e-10);
        assert!((r.report.eigenvalues[1] - 0.25).abs() < 1e-10);
        assert!((r.report.entropy_bits - 0.811_278_124_459_132_9).abs() < 1e-10);

        let entropies: Vec<f64> = (0..=14)
            .map(|i| singlet_mismatch(0.1 * i as f64).unwrap().report.entropy_bits)
            .collect();
        assert!(entropies.windows(2).all(|w| w[1] < w[0]), "{entropies:?}");
        for (i, s) in entropies.iter().enumerate() {
            assert!((s - singlet_entropy_closed_form(0.1 * i as f64)).abs() < 1e-10);
        }
    }

    #[test]
    fn signaling_values() {
        for et in [0.0, 1.0, 4.0] {
            assert!(signaling_demo(0.0, et).unwrap() < 1e-12);
        }
        assert!((signaling_demo(PI / 6.0, FRAC_PI_2).unwrap() - 7f64.sqrt() / 8.0).abs() < 1e-10);
        let u = evolution_like_unitary();
        assert!(signaling_control(&u).unwrap() < 1e-12);
    }

    fn evolution_like_unitary() -> ComplexMatrix {
        // exp(−i·0.8·σ_y) = cos 0.8 I − i sin 0.8 σ_y
        let (s, c) = 0.8f64.sin_cos();
        &ComplexMatrix::identity(2).scale_real(c) + &pauli_y().scale(Complex64::new(0.0, -s))
    }

    #[test]
    fn sweep_is_sorted_and_complete() {
        let spec = SweepSpec {
            alpha_values: vec![0.9, 0.0, 0.3],
            et_values: vec![2.0, 0.0],
            scenario: Scenario::BellEvolution,
        };
        let out = sweep(&spec).unwrap();
        assert_eq!(out.results.len(), 6);
        assert!(out.skipped.is_empty());
        let keys: Vec<(f64, f64)> = out.results.iter().map(|r| (r.alpha, r.et)).collect();
        assert_eq!(keys, vec![(0.0, 0.0), (0.0, 2.0), (0.3, 0.0), (0.3, 2.0), (0.9, 0.0), (0.9, 2.0)]);

        let singlet = SweepSpec { scenario: Scenario::SingletMismatch, ..spec.clone() };
        assert_eq!(sweep(&singlet).unwrap().results.len(), 3);
    }

    #[test]
    fn sweep_validation() {
        let bad = SweepSpec { alpha_values: vec![], et_values: vec![0.0], scenario: Scenario::PiHalf };
        assert!(sweep(&bad).is_err());
        let bad = SweepSpec { alpha_values: vec![1.0], et_values: vec![], scenario: Scenario::PiHalf };
        assert!(sweep(&bad).is_err());
        let bad = SweepSpec { alpha_values: vec![FRAC_PI_2], et_values: vec![0.0], scenario: Scenario::PiHalf };
        assert!(sweep(&bad).is_err());
    }

    #[test]
    fn collect_records_skips() {
        let point = (0.2, 1.0);
        let out = SweepOutcome::collect(vec![(point, Err(Error::DenominatorVanishes { alpha: 0.2, et: 1.0 }))]).unwrap();
        assert_eq!(out.skipped, vec![point]);
        assert!(SweepOutcome::collect(vec![(point, Err(Error::ZeroVector))]).is_err());
    }

    #[test]
    fn scenario_names_round_trip() {
        for s in Scenario::ALL {
            assert_eq!(s.name().parse::<Scenario>().unwrap(), s);
        }
        assert!("nope".parse::<Scenario>().is_err());
    }

    #[test]
    fn linspace_endpoints() {
        assert_eq!(linspace(0.0, 1.0, 1), vec![0.0]);
        let v = linspace(0.0, 2.0 * PI, 25);
        assert_eq!(v.len(), 25);
        assert_eq!(v[24], 2.0 * PI);
    }
}
