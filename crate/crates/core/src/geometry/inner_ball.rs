//! Measure of the inner-ball `I(r) = B_u(R) ∩ B_0(r)` of a point at radius
//! `r`, together with its closed-form envelopes.

use std::f64::consts::PI;

use super::quadrature::{adaptive_simpson, MAX_EVALUATIONS};
use super::{connection_angle_trig, radial_cdf, HrgParams, RadialTrig};
use crate::error::{Error, Result};

/// Rows of the inner-ball case table, keyed by `Δ = r − R/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DeltaCase {
    /// `Δ ≥ 0`
    AtLeastZero,
    /// `Δ ≥ ln √(4/3)`
    AtLeastLogSqrtFourThirds,
    /// `Δ ≥ ln √2`
    AtLeastLogSqrtTwo,
    /// `Δ ≥ ln 2`
    AtLeastLogTwo,
}

impl DeltaCase {
    pub fn threshold(self) -> f64 {
        match self {
            DeltaCase::AtLeastZero => 0.0,
            DeltaCase::AtLeastLogSqrtFourThirds => 0.5 * (4.0f64 / 3.0).ln(),
            DeltaCase::AtLeastLogSqrtTwo => 0.5 * 2f64.ln(),
            DeltaCase::AtLeastLogTwo => 2f64.ln(),
        }
    }

    /// Row with the largest threshold not exceeding `delta`; a value exactly
    /// on a threshold selects that (tighter) row.
    pub fn select(delta: f64) -> Option<Self> {
        use DeltaCase::*;
        if delta.is_nan() || delta < 0.0 {
            return None;
        }
        [
            AtLeastLogTwo,
            AtLeastLogSqrtTwo,
            AtLeastLogSqrtFourThirds,
            AtLeastZero,
        ]
        .into_iter()
        .find(|c| delta >= c.threshold())
    }

    /// The `(γ, η)` constants of this row.
    pub fn gamma_eta(self, alpha: f64) -> (f64, f64) {
        let g1 = 4.0 / (3.0 * 3f64.sqrt());
        let g2 = 1.0 / 2f64.sqrt();
        let g3 = 2.0 / 3.0;
        let e0 = 1.0 / (2.0 * alpha);
        let e1 = e0 - (1.0 - g1) * (4.0f64 / 3.0).powf(alpha - 0.5);
        let e2 = e1 - (g1 - g2) * 2f64.powf(alpha - 0.5);
        let e3 = e2 - (g2 - g3) * 2f64.powf(2.0 * alpha - 1.0);
        match self {
            DeltaCase::AtLeastZero => (1.0, e0),
            DeltaCase::AtLeastLogSqrtFourThirds => (g1, e1),
            DeltaCase::AtLeastLogSqrtTwo => (g2, e2),
            DeltaCase::AtLeastLogTwo => (g3, e3),
        }
    }
}

/// Closed-form lower and upper envelopes of `μ(I(r))`, without their
/// `1 + Θ(e^{-αR})` factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InnerBallBounds {
    pub lower: f64,
    pub upper: f64,
    pub gamma: f64,
    pub eta: f64,
    pub delta_case: DeltaCase,
}

/// `α e^{-αr}/(α − ½) · (γ e^{(2α−1)(2r−R)/2} − η)`, the shape shared by
/// both envelopes of the inner-ball measure.
pub fn inner_ball_envelope(r: f64, gamma: f64, eta: f64, params: &HrgParams) -> f64 {
    let a = params.alpha();
    let big_r = params.radius();
    let growth = (0.5 * (2.0 * a - 1.0) * (2.0 * r - big_r)).exp();
    a * (-a * r).exp() / (a - 0.5) * (gamma * growth - eta)
}

/// Constants of the lower envelope, `(2/π, 2/π − (α − ½)/α)`.
fn lower_constants(alpha: f64) -> (f64, f64) {
    let g = 2.0 / PI;
    (g, g - (alpha - 0.5) / alpha)
}

pub fn inner_ball_bounds(r: f64, params: &HrgParams) -> Result<InnerBallBounds> {
    let delta = r - params.radius() / 2.0;
    let delta_case = DeltaCase::select(delta).ok_or_else(|| {
        Error::invalid(format!("inner-ball bounds need r ≥ R/2, got Δ = {delta}"))
    })?;
    let (gamma, eta) = delta_case.gamma_eta(params.alpha());
    let (lg, le) = lower_constants(params.alpha());
    Ok(InnerBallBounds {
        lower: inner_ball_envelope(r, lg, le, params),
        upper: inner_ball_envelope(r, gamma, eta, params),
        gamma,
        eta,
        delta_case,
    })
}

/// `μ(I(r))` by adaptive quadrature.
///
/// For `r ≤ R/2` the inner-ball is all of `B_0(r)`. Otherwise every point
/// with radius at most `R − r` is within reach and the band `(R − r, r]`
/// contributes `θ_R(x, r)/π` of its mass. The band integral is computed
/// relative to `μ(B_0(r))` to absolute tolerance 1e-10, which is at least as
/// strict as an absolute 1e-10 on the measure itself.
pub fn inner_ball_measure(r: f64, params: &HrgParams) -> Result<f64> {
    let big_r = params.radius();
    if !(r >= 0.0 && r <= big_r) {
        return Err(Error::invalid(format!(
            "inner-ball radius must lie in [0, R], got {r}"
        )));
    }
    let half = big_r / 2.0;
    if r <= half {
        return Ok(radial_cdf(r, params));
    }
    let a = params.alpha();
    let disk = RadialTrig::new(big_r);
    let outer = RadialTrig::new(r);
    let reach = big_r - r;
    // density of the radius, scaled by 1/(cosh αr − 1)
    let scale = 2.0 * (0.5 * a * r).sinh().powi(2);
    let integrand = |x: f64| {
        if x <= 0.0 {
            return 0.0;
        }
        let theta = connection_angle_trig(&RadialTrig::new(x), &outer, &disk);
        theta / PI * a * (a * x).sinh() / scale
    };
    let band = adaptive_simpson(integrand, reach, r, 1e-10, MAX_EVALUATIONS)?;
    let measure = radial_cdf(reach, params) + band * radial_cdf(r, params);
    Ok(measure.clamp(0.0, 1.0))
}

/// Maximiser of the closed-form envelope with constants `(γ, η)`:
/// `R/2 + ln(αη/(γ(1−α)))/(2α − 1)`.
pub fn r_star(gamma: f64, eta: f64, params: &HrgParams) -> Result<f64> {
    if !(gamma > 0.0 && eta > 0.0) {
        return Err(Error::invalid(format!(
            "r* needs positive γ and η, got {gamma} and {eta}"
        )));
    }
    let a = params.alpha();
    Ok(params.radius() / 2.0 + (a * eta / (gamma * (1.0 - a))).ln() / (2.0 * a - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, alpha: f64) -> HrgParams {
        HrgParams::new(n, alpha, 0.0).unwrap()
    }

    #[test]
    fn case_selection() {
        let p = params(10_000, 0.75);
        let h = p.radius() / 2.0;
        let b = inner_ball_bounds(h + 0.1, &p).unwrap();
        assert_eq!(b.delta_case, DeltaCase::AtLeastZero);
        assert_eq!(b.gamma, 1.0);
        assert!((b.eta - 1.0 / 1.5).abs() < 1e-15);
        let b = inner_ball_bounds(h + 2f64.ln(), &p).unwrap();
        assert_eq!(b.delta_case, DeltaCase::AtLeastLogTwo);
        assert!((b.gamma - 2.0 / 3.0).abs() < 1e-15);
        assert!(inner_ball_bounds(h - 1e-3, &p).is_err());
    }

    #[test]
    fn ties_select_the_larger_threshold() {
        for c in [
            DeltaCase::AtLeastZero,
            DeltaCase::AtLeastLogSqrtFourThirds,
            DeltaCase::AtLeastLogSqrtTwo,
            DeltaCase::AtLeastLogTwo,
        ] {
            assert_eq!(DeltaCase::select(c.threshold()), Some(c));
        }
        assert_eq!(DeltaCase::select(-1e-12), None);
        assert_eq!(DeltaCase::select(f64::NAN), None);
    }

    #[test]
    fn measure_equals_cdf_up_to_half_radius() {
        let p = params(10_000, 0.75);
        let h = p.radius() / 2.0;
        assert_eq!(inner_ball_measure(h, &p).unwrap(), radial_cdf(h, &p));
        assert_eq!(inner_ball_measure(1.0, &p).unwrap(), radial_cdf(1.0, &p));
        // continuity just above R/2
        let above = inner_ball_measure(h + 1e-9, &p).unwrap();
        assert!((above / radial_cdf(h, &p) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn measure_rejects_out_of_disk() {
        let p = params(1000, 0.6);
        assert!(inner_ball_measure(-0.1, &p).is_err());
        assert!(inner_ball_measure(p.radius() + 0.1, &p).is_err());
    }

    #[test]
    fn r_star_closed_form() {
        let p = params(10_000, 0.75);
        let r = r_star(1.0, 1.0 / 1.5, &p).unwrap();
        assert!((r - (p.radius() / 2.0 + 2.0 * 2f64.ln())).abs() < 1e-12);
        assert!(r_star(0.0, 1.0, &p).is_err());
        assert!(r_star(1.0, -1.0, &p).is_err());
    }

    #[test]
    fn r_star_is_stationary_for_the_envelope() {
        for alpha in [0.6, 0.75, 0.9] {
            let p = params(100_000, alpha);
            for case in [
                DeltaCase::AtLeastZero,
                DeltaCase::AtLeastLogSqrtFourThirds,
                DeltaCase::AtLeastLogSqrtTwo,
                DeltaCase::AtLeastLogTwo,
            ] {
                let (g, e) = case.gamma_eta(alpha);
                let r = r_star(g, e, &p).unwrap();
                let h = 1e-4;
                let d = (inner_ball_envelope(r + h, g, e, &p)
                    - inner_ball_envelope(r - h, g, e, &p))
                    / (2.0 * h);
                // normalise by the envelope value so the check is scale free
                let rel = d / inner_ball_envelope(r, g, e, &p);
                assert!(rel.abs() < 1e-8, "α={alpha} {case:?}: {rel}");
            }
        }
    }
}
