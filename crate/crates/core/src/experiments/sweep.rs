use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use super::config::{Analysis, Model, Seeds, SweepConfig};
use super::record::ExperimentRecord;
use crate::error::{Error, Result};
use crate::geometry::{theory_bounds, GirgParams, HrgParams};
use crate::graph::Graph;
use crate::params::{
    colour_count, degeneracy, exact_clique, extend_core_clique, greedy_colour, inner_degrees,
    nearest_radius_vertex, separator_partition, CliqueBudget, Embedding,
};
use crate::rng::cell_seed;
use crate::samplers::{
    build_edges_sweep, build_girg_edges, sample_girg_points, sample_hrg, sample_hrg_poisson,
    GirgPointSet, HrgPointSet,
};

/// A sampled vertex set of either model.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Hrg(HrgPointSet),
    Girg(GirgPointSet),
}

impl Instance {
    /// Samples the vertex set of one cell; `constant` is `C` or `λ`.
    pub fn sample(model: Model, n: usize, alpha: f64, constant: f64, seed: u64) -> Result<Self> {
        Ok(match model {
            Model::Hrg => Instance::Hrg(sample_hrg(&HrgParams::new(n, alpha, constant)?, seed)),
            Model::HrgPoisson => Instance::Hrg(sample_hrg_poisson(
                &HrgParams::new(n, alpha, constant)?,
                seed,
            )),
            Model::Girg => Instance::Girg(sample_girg_points(
                &GirgParams::from_alpha(n, alpha, constant)?,
                seed,
            )),
        })
    }

    pub fn build_graph(&self) -> Graph {
        match self {
            Instance::Hrg(p) => build_edges_sweep(p),
            Instance::Girg(p) => build_girg_edges(p),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Instance::Hrg(p) => p.len(),
            Instance::Girg(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn alpha(&self) -> f64 {
        match self {
            Instance::Hrg(p) => p.params.alpha(),
            Instance::Girg(p) => p.params.alpha(),
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            Instance::Hrg(p) => p.seed,
            Instance::Girg(p) => p.seed,
        }
    }
}

/// Runs the selected analyses on one instance and fills a record.
///
/// Failures of individual analyses land in the `error` field; the other
/// fields are still filled.
pub fn analyze_instance(
    model: Model,
    n: usize,
    c_or_lambda: f64,
    instance: &Instance,
    g: &Graph,
    analyses: &BTreeSet<Analysis>,
    budget: CliqueBudget,
) -> Result<ExperimentRecord> {
    if g.vertex_count() != instance.len() {
        return Err(Error::invalid(format!(
            "graph has {} vertices but the embedding has {}",
            g.vertex_count(),
            instance.len()
        )));
    }
    let alpha = instance.alpha();
    let mut record = ExperimentRecord::blank(
        model,
        n,
        alpha,
        c_or_lambda,
        instance.seed(),
        theory_bounds(alpha)?,
    );
    record.vertices = g.vertex_count();
    record.edges = g.edge_count();
    match instance {
        Instance::Hrg(p) => fill_generic(&mut record, p, g, analyses, budget),
        Instance::Girg(p) => fill_generic(&mut record, p, g, analyses, budget),
    }
    if analyses.contains(&Analysis::Separator) {
        match instance {
            Instance::Hrg(p) => fill_separator(&mut record, p, g),
            Instance::Girg(_) => push_error(&mut record, "separator needs an HRG instance".into()),
        }
    }
    Ok(record)
}

fn push_error(record: &mut ExperimentRecord, message: String) {
    record.error = Some(match record.error.take() {
        Some(prev) => format!("{prev}; {message}"),
        None => message,
    });
}

fn fill_generic<E: Embedding>(
    record: &mut ExperimentRecord,
    embedding: &E,
    g: &Graph,
    analyses: &BTreeSet<Analysis>,
    budget: CliqueBudget,
) {
    record.sigma = embedding.core().len();
    record.omega_lb = record.sigma;
    if analyses.contains(&Analysis::Degeneracy) || analyses.contains(&Analysis::Colouring) {
        let result = degeneracy(g);
        record.kappa = Some(result.kappa);
        if analyses.contains(&Analysis::Colouring) {
            record.colours_greedy = Some(colour_count(&greedy_colour(g, &result)));
        }
    }
    if analyses.contains(&Analysis::InnerDegrees) {
        record.max_inner_degree = Some(inner_degrees(embedding, g).max_inner_degree);
    }
    if analyses.contains(&Analysis::CliqueExtend) {
        record.omega_lb = record.omega_lb.max(extend_core_clique(embedding, g).len());
    }
    if analyses.contains(&Analysis::CliquesExact) {
        match exact_clique(g, budget) {
            Ok(clique) => {
                record.omega_exact = Some(clique.len());
                record.omega_lb = record.omega_lb.max(clique.len());
            }
            Err(Error::CliqueBudgetExhausted { best }) => {
                record.omega_lb = record.omega_lb.max(best.len());
                push_error(
                    record,
                    "exact clique budget exhausted; omega_lb is a lower bound only".into(),
                );
            }
            Err(e) => push_error(record, e.to_string()),
        }
    }
}

fn fill_separator(record: &mut ExperimentRecord, points: &HrgPointSet, g: &Graph) {
    let target = points.params.radius() / 2.0 + 1.0;
    let Some(anchor) = nearest_radius_vertex(points, target) else {
        push_error(record, "no vertex to anchor the separator".into());
        return;
    };
    match separator_partition(points, g, anchor) {
        Ok(part) => {
            record.separator_anchor = Some(anchor);
            record.separator_s0 = Some(part.s0.len());
            record.separator_s1 = Some(part.s1.len());
            record.separator_s2 = Some(part.s2.len());
            record.separator_cross_edges = Some(part.cross_edges(g));
        }
        Err(e) => push_error(record, e.to_string()),
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

struct Cell {
    n: usize,
    alpha: f64,
    seed: u64,
}

fn cells(config: &SweepConfig) -> Vec<Cell> {
    let mut out = Vec::new();
    for &n in &config.n_values {
        for &alpha in &config.alpha_values {
            let seeds: Vec<u64> = match &config.seeds {
                Seeds::List(list) => list.clone(),
                Seeds::Replicates { base, count } => (0..*count)
                    .map(|i| cell_seed(*base, config.model.seed_tag(), n as u64, alpha, i))
                    .collect(),
            };
            out.extend(seeds.into_iter().map(|seed| Cell { n, alpha, seed }));
        }
    }
    out
}

fn run_cell(config: &SweepConfig, cell: &Cell) -> ExperimentRecord {
    let timed = config.record_timings;
    let start = Instant::now();
    let instance = match Instance::sample(
        config.model,
        cell.n,
        cell.alpha,
        config.model_constant,
        cell.seed,
    ) {
        Ok(i) => i,
        Err(e) => {
            let bounds = theory_bounds(cell.alpha).expect("alpha validated");
            let mut r = ExperimentRecord::blank(
                config.model,
                cell.n,
                cell.alpha,
                config.model_constant,
                cell.seed,
                bounds,
            );
            r.error = Some(e.to_string());
            return r;
        }
    };
    let sample_ms = elapsed_ms(start);
    let start = Instant::now();
    let g = instance.build_graph();
    let edges_ms = elapsed_ms(start);
    let start = Instant::now();
    let mut record = analyze_instance(
        config.model,
        cell.n,
        config.model_constant,
        &instance,
        &g,
        &config.analyses,
        config.clique_budget,
    )
    .expect("graph built from this instance");
    if timed {
        record.sample_ms = Some(sample_ms);
        record.edges_ms = Some(edges_ms);
        record.analysis_ms = Some(elapsed_ms(start));
    }
    record
}

/// Runs every `(n, α, seed)` cell of the sweep, using up to
/// `config.thread_count` threads. Records come back sorted by
/// `(model, n, α, seed)`, so the output does not depend on scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<ExperimentRecord>> {
    config.validate()?;
    let cells = cells(config);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.thread_count)
        .build()
        .map_err(|e| Error::invalid(format!("cannot start thread pool: {e}")))?;
    let mut records: Vec<ExperimentRecord> =
        pool.install(|| cells.par_iter().map(|c| run_cell(config, c)).collect());
    records.sort_by(|a, b| {
        a.model
            .cmp(&b.model)
            .then(a.n.cmp(&b.n))
            .then(a.alpha.total_cmp(&b.alpha))
            .then(a.seed.cmp(&b.seed))
    });
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::write_csv_to;

    fn small(model: Model) -> SweepConfig {
        let mut c = SweepConfig::new(
            model,
            vec![1 << 10],
            vec![0.75],
            Seeds::Replicates { base: 3, count: 1 },
        );
        c.analyses = Analysis::ALL
            .into_iter()
            .filter(|a| *a != Analysis::CliquesExact)
            .collect();
        if model == Model::Girg {
            c.analyses.remove(&Analysis::Separator);
        }
        c
    }

    #[test]
    fn single_cell_satisfies_chain() {
        for model in [Model::Hrg, Model::HrgPoisson, Model::Girg] {
            let records = run_sweep(&small(model)).unwrap();
            assert_eq!(records.len(), 1);
            let r = &records[0];
            assert!(r.check_chain().is_empty(), "{model}: {:?}", r.check_chain());
            assert!(r.error.is_none(), "{:?}", r.error);
            assert!(
                r.kappa.is_some() && r.colours_greedy.is_some() && r.max_inner_degree.is_some()
            );
        }
    }

    #[test]
    fn output_independent_of_thread_count() {
        let mut c = SweepConfig::new(
            Model::Hrg,
            vec![500, 800],
            vec![0.6, 0.9],
            Seeds::Replicates { base: 11, count: 3 },
        );
        c.analyses.insert(Analysis::CliquesExact);
        c.analyses.insert(Analysis::Separator);
        c.clique_budget.max_vertices = 800;
        let bytes = |threads| {
            let mut c = c.clone();
            c.thread_count = threads;
            let mut buf = Vec::new();
            write_csv_to(&run_sweep(&c).unwrap(), &mut buf).unwrap();
            buf
        };
        assert_eq!(bytes(1), bytes(3));
    }

    #[test]
    fn invalid_config_rejected_before_work() {
        let c = SweepConfig::new(Model::Hrg, vec![100], vec![1.2], Seeds::List(vec![1]));
        assert!(run_sweep(&c).is_err());
    }

    #[test]
    fn exhausted_clique_budget_goes_to_error_column() {
        let mut c = SweepConfig::new(Model::Hrg, vec![400], vec![0.6], Seeds::List(vec![5]));
        c.analyses.insert(Analysis::CliquesExact);
        c.clique_budget.max_steps = 1;
        let r = &run_sweep(&c).unwrap()[0];
        assert!(r.omega_exact.is_none());
        assert!(r.error.as_deref().unwrap().contains("budget"));
        assert!(r.kappa.is_some());
    }
}
