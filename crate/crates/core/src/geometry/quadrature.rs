//! Adaptive Simpson quadrature with an evaluation cap.

use crate::error::{Error, Result};

/// Default cap on integrand evaluations before giving up.
pub const MAX_EVALUATIONS: usize = 1_000_000;

const MAX_DEPTH: u32 = 60;

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Panels are split until the Richardson error estimate of each one is below
/// its share of the tolerance. Fails with [`Error::QuadratureDiverged`] once
/// more than `max_evaluations` integrand calls are needed.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64, max_evaluations: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if a == b {
        return Ok(0.0);
    }
    if b < a {
        return adaptive_simpson(f, b, a, tol, max_evaluations).map(|v| -v);
    }
    let evaluations = std::cell::Cell::new(0usize);
    let eval = |x: f64| {
        evaluations.set(evaluations.get() + 1);
        f(x)
    };

    // a few initial panels so that a symmetric integrand cannot fool the
    // first error estimate
    const INITIAL: usize = 8;
    let h = (b - a) / INITIAL as f64;
    let mut stack = Vec::with_capacity(64);
    let mut left = eval(a);
    for i in 0..INITIAL {
        let pa = a + h * i as f64;
        let pb = if i + 1 == INITIAL {
            b
        } else {
            a + h * (i + 1) as f64
        };
        let pm = 0.5 * (pa + pb);
        let fm = eval(pm);
        let fb = eval(pb);
        stack.push(Panel {
            a: pa,
            b: pb,
            fa: left,
            fm,
            fb,
            whole: simpson(pa, pb, left, fm, fb),
            tol: tol / INITIAL as f64,
            depth: 0,
        });
        left = fb;
    }

    let mut total = 0.0;
    while let Some(p) = stack.pop() {
        let m = 0.5 * (p.a + p.b);
        let lm = 0.5 * (p.a + m);
        let rm = 0.5 * (m + p.b);
        let flm = eval(lm);
        let frm = eval(rm);
        let left = simpson(p.a, m, p.fa, flm, p.fm);
        let right = simpson(m, p.b, p.fm, frm, p.fb);
        let refined = left + right;
        let err = refined - p.whole;
        if err.abs() <= 15.0 * p.tol || p.depth >= MAX_DEPTH || m <= p.a || m >= p.b {
            total += refined + err / 15.0;
        } else {
            let tol = 0.5 * p.tol;
            stack.push(Panel {
                a: p.a,
                b: m,
                fa: p.fa,
                fm: flm,
                fb: p.fm,
                whole: left,
                tol,
                depth: p.depth + 1,
            });
            stack.push(Panel {
                a: m,
                b: p.b,
                fa: p.fm,
                fm: frm,
                fb: p.fb,
                whole: right,
                tol,
                depth: p.depth + 1,
            });
        }
        if evaluations.get() > max_evaluations {
            return Err(Error::QuadratureDiverged {
                evaluations: evaluations.get(),
            });
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_transcendental() {
        let v = adaptive_simpson(|x| x * x * x, 0.0, 2.0, 1e-12, MAX_EVALUATIONS).unwrap();
        assert!((v - 4.0).abs() < 1e-12);
        let v =
            adaptive_simpson(f64::sin, 0.0, std::f64::consts::PI, 1e-12, MAX_EVALUATIONS).unwrap();
        assert!((v - 2.0).abs() < 1e-11);
        let v = adaptive_simpson(|x| x.sqrt(), 0.0, 1.0, 1e-10, MAX_EVALUATIONS).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn reversed_and_empty_intervals() {
        assert_eq!(adaptive_simpson(|x| x, 1.0, 1.0, 1e-10, 10).unwrap(), 0.0);
        let v = adaptive_simpson(|x| x, 1.0, 0.0, 1e-12, MAX_EVALUATIONS).unwrap();
        assert!((v + 0.5).abs() < 1e-14);
    }

    #[test]
    fn evaluation_cap_is_reported() {
        let r = adaptive_simpson(|x| (1.0 / x).sin(), 1e-9, 1.0, 1e-14, 1_000);
        assert!(matches!(r, Err(Error::QuadratureDiverged { .. })));
    }
}
