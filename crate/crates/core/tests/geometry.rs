mod common;

use std::f64::consts::{PI, TAU};

use common::rng;
use hrglab::geometry::{
    angular_distance, connection_angle, distance, inner_ball_measure, r_star, HrgParams, PolarPoint,
};
use rand::Rng;

#[test]
fn distance_threshold_agrees_with_connection_angle() {
    let p = HrgParams::new(100_000, 0.7, 0.0).unwrap();
    let big_r = p.radius();
    let mut r = rng(10);
    let mut compared = 0;
    for _ in 0..100_000 {
        let a = PolarPoint::new(r.random_range(0.01..big_r), r.random_range(0.0..TAU));
        let b = PolarPoint::new(r.random_range(0.01..big_r), r.random_range(0.0..TAU));
        let d = distance(a, b);
        if (d - big_r).abs() < 1e-9 * big_r {
            continue;
        }
        let theta = connection_angle(a.radius, b.radius, &p).unwrap();
        let by_angle = angular_distance(a.angle, b.angle) <= theta;
        assert_eq!(d <= big_r, by_angle, "{a:?} {b:?}");
        compared += 1;
    }
    assert!(compared > 99_000);
}

/// Grid-search maximiser of the inner-ball measure, step 10⁻³ in `Δ`.
fn argmax(p: &HrgParams) -> (f64, f64) {
    let half = p.radius() / 2.0;
    (0..=3000)
        .map(|i| {
            let r = half + i as f64 * 1e-3;
            (r, inner_ball_measure(r, p).unwrap())
        })
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap()
}

#[test]
fn r_star_sits_near_the_measure_maximum() {
    for alpha in [0.6, 0.75, 0.9] {
        let p = HrgParams::new(10_000, alpha, 0.0).unwrap();
        let (best_r, best) = argmax(&p);
        let r = r_star(2.0 / PI, 2.0 / PI - (alpha - 0.5) / alpha, &p).unwrap();
        let at_star = inner_ball_measure(r, &p).unwrap();
        // the closed form uses the lower-bound constants, so it only
        // approximates the true maximiser
        assert!(at_star / best > 0.99, "alpha {alpha}: {at_star} vs {best}");
        if alpha == 0.75 {
            assert!((r - best_r).abs() < 0.05, "{r} vs {best_r}");
            assert!(at_star / best > 0.999);
        }
        for dr in [-0.05, 0.05] {
            assert!(inner_ball_measure(r + dr, &p).unwrap() <= best);
        }
    }
}
