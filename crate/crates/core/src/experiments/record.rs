use super::config::Model;
use crate::geometry::TheoryBounds;

/// Measured parameters of one sampled instance plus the theory constants at
/// its `α`. Analyses that were not run leave their fields `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub model: Model,
    pub n: usize,
    pub alpha: f64,
    /// `C` for the HRG models, `λ` for GIRG.
    pub c_or_lambda: f64,
    pub seed: u64,
    /// Realised vertex count; differs from `n` for the Poisson model.
    pub vertices: usize,
    pub edges: usize,
    pub sigma: usize,
    pub kappa: Option<usize>,
    pub max_inner_degree: Option<usize>,
    /// Largest clique found by any of the selected analyses (at least the core).
    pub omega_lb: usize,
    pub omega_exact: Option<usize>,
    pub colours_greedy: Option<usize>,
    pub separator_anchor: Option<u32>,
    pub separator_s0: Option<usize>,
    pub separator_s1: Option<usize>,
    pub separator_s2: Option<usize>,
    pub separator_cross_edges: Option<usize>,
    pub sample_ms: Option<f64>,
    pub edges_ms: Option<f64>,
    pub analysis_ms: Option<f64>,
    pub kappa_lower_const: f64,
    pub kappa_upper_const: f64,
    pub clique_upper_const: f64,
    pub girg_ratio_const: f64,
    pub error: Option<String>,
}

impl ExperimentRecord {
    /// A record with only the identifying fields and theory columns set.
    pub fn blank(
        model: Model,
        n: usize,
        alpha: f64,
        c_or_lambda: f64,
        seed: u64,
        bounds: TheoryBounds,
    ) -> Self {
        ExperimentRecord {
            model,
            n,
            alpha,
            c_or_lambda,
            seed,
            vertices: 0,
            edges: 0,
            sigma: 0,
            kappa: None,
            max_inner_degree: None,
            omega_lb: 0,
            omega_exact: None,
            colours_greedy: None,
            separator_anchor: None,
            separator_s0: None,
            separator_s1: None,
            separator_s2: None,
            separator_cross_edges: None,
            sample_ms: None,
            edges_ms: None,
            analysis_ms: None,
            kappa_lower_const: bounds.kappa_lower_const,
            kappa_upper_const: bounds.kappa_upper_const,
            clique_upper_const: bounds.clique_upper_const,
            girg_ratio_const: bounds.girg_ratio_const,
            error: None,
        }
    }

    /// Checks `σ ≤ ω_lb ≤ ω ≤ χ_greedy ≤ κ + 1`, `κ ≤ max inner-degree` and
    /// the separator, over whichever fields are present. Returns every
    /// violated relation.
    pub fn check_chain(&self) -> Vec<String> {
        let mut violations = Vec::new();
        let mut require = |ok: bool, what: String| {
            if !ok {
                violations.push(what);
            }
        };
        require(
            self.sigma <= self.omega_lb,
            format!("sigma {} > omega_lb {}", self.sigma, self.omega_lb),
        );
        if let Some(w) = self.omega_exact {
            require(
                self.omega_lb <= w,
                format!("omega_lb {} > omega_exact {w}", self.omega_lb),
            );
        }
        let omega = self.omega_exact.unwrap_or(self.omega_lb);
        if let Some(c) = self.colours_greedy {
            require(omega <= c, format!("clique size {omega} > colours {c}"));
            if let Some(k) = self.kappa {
                require(c <= k + 1, format!("colours {c} > kappa + 1 = {}", k + 1));
            }
        }
        if let (Some(k), Some(d)) = (self.kappa, self.max_inner_degree) {
            require(k <= d, format!("kappa {k} > max inner-degree {d}"));
        }
        if let Some(x) = self.separator_cross_edges {
            require(x == 0, format!("{x} separator cross edges"));
        }
        if self.sigma > self.vertices || self.omega_lb > self.vertices {
            violations.push(format!(
                "clique sizes exceed vertex count {}",
                self.vertices
            ));
        }
        violations
    }

    pub fn kappa_over_sigma(&self) -> Option<f64> {
        match (self.kappa, self.sigma) {
            (Some(k), s) if s > 0 => Some(k as f64 / s as f64),
            _ => None,
        }
    }
}
