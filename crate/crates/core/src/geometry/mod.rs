//! Hyperbolic-plane quantities for the native (polar) representation of the
//! disk `D_R`, curvature −1.

mod bounds;
mod inner_ball;
pub mod quadrature;

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};

pub use bounds::{theory_bounds, TheoryBounds};
pub use inner_ball::{
    inner_ball_bounds, inner_ball_envelope, inner_ball_measure, r_star, DeltaCase, InnerBallBounds,
};

/// A position in the hyperbolic plane: radius from the disk centre and angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub radius: f64,
    pub angle: f64,
}

impl PolarPoint {
    /// Builds a point, wrapping `angle` into `[0, 2π)`.
    pub fn new(radius: f64, angle: f64) -> Self {
        PolarPoint {
            radius,
            angle: normalize_angle(angle),
        }
    }
}

pub fn normalize_angle(angle: f64) -> f64 {
    let a = angle.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs
    if a >= TAU {
        0.0
    } else {
        a
    }
}

/// Angular separation of two angles, in `[0, π]`.
pub fn angular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).abs() % TAU;
    if d > PI {
        TAU - d
    } else {
        d
    }
}

/// Parameters of the threshold hyperbolic random graph `G(n, α, C)`.
///
/// The disk radius is always derived as `R = 2 ln n + C`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HrgParams {
    n: usize,
    alpha: f64,
    c: f64,
}

impl HrgParams {
    pub fn new(n: usize, alpha: f64, c: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be positive"));
        }
        check_alpha(alpha)?;
        if !c.is_finite() {
            return Err(Error::invalid(format!("C must be finite, got {c}")));
        }
        Ok(HrgParams { n, alpha, c })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Disk radius `R = 2 ln n + C`.
    pub fn radius(&self) -> f64 {
        2.0 * (self.n as f64).ln() + self.c
    }
}

/// Parameters of the standard one-dimensional GIRG `G(n, β, λ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GirgParams {
    n: usize,
    beta: f64,
    alpha: f64,
    lambda: f64,
}

impl GirgParams {
    pub fn new(n: usize, beta: f64, lambda: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be positive"));
        }
        if !(beta > 2.0 && beta < 3.0) {
            return Err(Error::invalid(format!(
                "beta must lie in the open interval (2, 3), got {beta}"
            )));
        }
        if !(lambda > 0.0 && lambda.is_finite()) {
            return Err(Error::invalid(format!(
                "lambda must be positive and finite, got {lambda}"
            )));
        }
        Ok(GirgParams {
            n,
            beta,
            alpha: (beta - 1.0) / 2.0,
            lambda,
        })
    }

    /// Same model parametrised by the HRG exponent, `β = 2α + 1`.
    pub fn from_alpha(n: usize, alpha: f64, lambda: f64) -> Result<Self> {
        check_alpha(alpha)?;
        // exact α, not recovered from β
        Ok(GirgParams {
            alpha,
            ..Self::new(n, 2.0 * alpha + 1.0, lambda)?
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `α = (β − 1)/2`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Weight threshold of the core, `√(n/λ)`.
    pub fn core_weight(&self) -> f64 {
        (self.n as f64 / self.lambda).sqrt()
    }

    /// Connection threshold `t(u,v) = λ w_u w_v / (2n)`, clamped to the torus
    /// diameter 1/2.
    pub fn threshold(&self, wu: f64, wv: f64) -> f64 {
        (0.5 * self.lambda * wu * wv / self.n as f64).min(0.5)
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.5 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "alpha must lie in the open interval (1/2, 1), got {alpha}"
        )))
    }
}

/// Hyperbolic distance between two points.
///
/// Evaluated through the half-angle form
/// `sinh²(d/2) = sinh²((r_a − r_b)/2) + sinh r_a sinh r_b sin²(Δφ/2)`,
/// which equals the usual `cosh d` identity but keeps full relative
/// precision for nearby points.
pub fn distance(a: PolarPoint, b: PolarPoint) -> f64 {
    let radial = (0.5 * (a.radius - b.radius)).sinh();
    let angular = (0.5 * (a.angle - b.angle)).sin();
    let s = radial * radial + a.radius.sinh() * b.radius.sinh() * angular * angular;
    2.0 * s.sqrt().asinh()
}

/// Cached `cosh r` / `sinh r` of a radius, shared by every pairwise
/// connection test involving the same vertex.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RadialTrig {
    pub radius: f64,
    pub cosh: f64,
    pub sinh: f64,
}

impl RadialTrig {
    pub fn new(radius: f64) -> Self {
        RadialTrig {
            radius,
            cosh: radius.cosh(),
            sinh: radius.sinh(),
        }
    }
}

/// `θ_R` from cached hyperbolic functions. Both radii must be positive.
///
/// Uses `sin²(θ/2) = sinh((R + Δr)/2) sinh((R − Δr)/2) / (sinh r_1 sinh r_2)`,
/// an exact rewrite of the arccos form without its cancellation near the
/// rim of the disk; values at or above 1 clamp to `θ = π`.
pub(crate) fn connection_angle_trig(a: &RadialTrig, b: &RadialTrig, disk: &RadialTrig) -> f64 {
    if a.radius + b.radius <= disk.radius {
        return PI;
    }
    let dr = a.radius - b.radius;
    let s =
        (0.5 * (disk.radius + dr)).sinh() * (0.5 * (disk.radius - dr)).sinh() / (a.sinh * b.sinh);
    2.0 * s.clamp(0.0, 1.0).sqrt().asin()
}

/// The canonical HRG edge predicate: angular separation at most `θ_R`.
///
/// A vertex at the origin is adjacent to everything inside the disk.
pub(crate) fn hrg_adjacent(
    a: &RadialTrig,
    angle_a: f64,
    b: &RadialTrig,
    angle_b: f64,
    disk: &RadialTrig,
) -> bool {
    if a.radius == 0.0 || b.radius == 0.0 {
        return a.radius.max(b.radius) <= disk.radius;
    }
    angular_distance(angle_a, angle_b) <= connection_angle_trig(a, b, disk)
}

/// Largest angular separation `θ_R(r1, r2)` at which points of radii `r1`
/// and `r2` lie within distance `R`.
///
/// Returns `π` whenever `r1 + r2 ≤ R` and `0` when even antipodal points are
/// too far apart. The origin has no angle and is rejected.
pub fn connection_angle(r1: f64, r2: f64, params: &HrgParams) -> Result<f64> {
    if !(r1 > 0.0 && r2 > 0.0) || !r1.is_finite() || !r2.is_finite() {
        return Err(Error::invalid(format!(
            "connection angle needs positive finite radii, got {r1} and {r2}"
        )));
    }
    let disk = RadialTrig::new(params.radius());
    Ok(connection_angle_trig(
        &RadialTrig::new(r1),
        &RadialTrig::new(r2),
        &disk,
    ))
}

/// `μ(B_0(r)) = (cosh αr − 1)/(cosh αR − 1)`, the radial CDF of a vertex.
pub fn radial_cdf(r: f64, params: &HrgParams) -> f64 {
    let a = params.alpha;
    let big_r = params.radius();
    let r = r.clamp(0.0, big_r);
    // cosh x − 1 = 2 sinh²(x/2) avoids cancellation for small radii
    let num = (0.5 * a * r).sinh();
    let den = (0.5 * a * big_r).sinh();
    (num / den).powi(2)
}

/// Inverse of [`radial_cdf`].
pub fn radial_quantile(u: f64, params: &HrgParams) -> Result<f64> {
    if !(0.0..=1.0).contains(&u) {
        return Err(Error::invalid(format!(
            "quantile level must lie in [0, 1], got {u}"
        )));
    }
    let a = params.alpha;
    let big_r = params.radius();
    if u == 1.0 {
        return Ok(big_r);
    }
    let r = 2.0 * (u.sqrt() * (0.5 * a * big_r).sinh()).asinh() / a;
    Ok(r.min(big_r))
}

/// Radius of a hyperbolic ball guaranteed to cover any point set of
/// diameter at most `R`: `R/2 + ln(2/√3)`.
pub fn jung_covering_radius(params: &HrgParams) -> f64 {
    params.radius() / 2.0 + (2.0 / 3f64.sqrt()).ln()
}

/// Distance from `p` to the diameter line through angles `line_angle` and
/// `line_angle + π`, via `sinh d = sinh r · |sin Δφ|`.
pub fn line_distance(p: PolarPoint, line_angle: f64) -> f64 {
    (p.radius.sinh() * (p.angle - line_angle).sin().abs()).asinh()
}
