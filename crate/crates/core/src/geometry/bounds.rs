use std::f64::consts::PI;

use super::check_alpha;
use crate::error::Result;

/// Leading constants, as multiples of the core size `σ(G)`, of the
/// asymptotic bounds on degeneracy and clique number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoryBounds {
    /// HRG degeneracy lower bound `(4/π)(2(1−α)/(π/2 − α(π−2)))^{(1−α)/(2α−1)}`.
    pub kappa_lower_const: f64,
    /// HRG degeneracy upper bound `(4/3)^α`.
    pub kappa_upper_const: f64,
    /// HRG clique number upper bound `(4/3)^{α/2}`.
    pub clique_upper_const: f64,
    /// GIRG degeneracy `2(2(1−α))^{(1−α)/(2α−1)}`.
    pub girg_ratio_const: f64,
}

pub fn theory_bounds(alpha: f64) -> Result<TheoryBounds> {
    check_alpha(alpha)?;
    let exponent = (1.0 - alpha) / (2.0 * alpha - 1.0);
    let base = 2.0 * (1.0 - alpha) / (PI / 2.0 - alpha * (PI - 2.0));
    let kappa_upper_const = (4.0f64 / 3.0).powf(alpha);
    Ok(TheoryBounds {
        kappa_lower_const: 4.0 / PI * base.powf(exponent),
        kappa_upper_const,
        clique_upper_const: kappa_upper_const.sqrt(),
        girg_ratio_const: 2.0 * (2.0 * (1.0 - alpha)).powf(exponent),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_boundary() {
        assert!(theory_bounds(0.5).is_err());
        assert!(theory_bounds(1.0).is_err());
        assert!(theory_bounds(f64::NAN).is_err());
    }

    #[test]
    fn girg_constant_at_point_six() {
        let t = theory_bounds(0.6).unwrap();
        assert!((t.girg_ratio_const - 1.28).abs() < 1e-12);
    }

    #[test]
    fn kappa_upper_matches_high_precision() {
        // (4/3)^{3/4} to 50 digits, tests/oracles/high_precision.py
        const EXPECTED: f64 = 1.240_806_478_802_799_5;
        let t = theory_bounds(0.75).unwrap();
        assert!((t.kappa_upper_const - EXPECTED).abs() < 1e-15);
        assert!((t.clique_upper_const - t.kappa_upper_const.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn lower_below_upper_on_grid() {
        for i in 0..97 {
            let alpha = 0.51 + 0.48 * i as f64 / 96.0;
            let t = theory_bounds(alpha).unwrap();
            assert!(t.kappa_lower_const <= t.kappa_upper_const, "α = {alpha}");
            assert!(t.kappa_lower_const >= 1.0, "α = {alpha}");
        }
    }
}
