use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hrglab::experiments::{
    analyze_instance, read_csv, run_sweep, write_csv, write_csv_to, Analysis, ExperimentRecord,
    Instance, Model, Seeds, SweepConfig,
};
use hrglab::geometry::{theory_bounds, GirgParams, HrgParams};
use hrglab::params::{degeneracy, greedy_colour, validate_colouring, CliqueBudget};
use hrglab::samplers::{GirgPointSet, HrgPointSet};
use hrglab::{Error, Graph};

#[derive(Parser)]
#[command(
    name = "hrglab",
    version,
    about = "Hyperbolic and geometric inhomogeneous random graph experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one instance and write its coordinates and edge list.
    Gen(GenArgs),
    /// Analyse a stored instance and emit one CSV record.
    Analyze(AnalyzeArgs),
    /// Run a parameter sweep and write a CSV.
    Sweep(SweepArgs),
    /// Check the invariants of every row of a sweep CSV.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct ModelArgs {
    /// hrg, hrg-poisson or girg.
    #[arg(long)]
    model: Model,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha: f64,
    /// Radius offset of the HRG models (default 0).
    #[arg(long = "C", allow_hyphen_values = true)]
    c: Option<f64>,
    /// Edge density of the GIRG model (default 1).
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl ModelArgs {
    fn constant(&self) -> Result<f64, Error> {
        model_constant(self.model, self.c, self.lambda)
    }
}

fn model_constant(model: Model, c: Option<f64>, lambda: Option<f64>) -> Result<f64, Error> {
    match (model, c, lambda) {
        (Model::Girg, Some(_), _) => Err(Error::invalid("--C applies to the HRG models only")),
        (Model::Girg, None, l) => Ok(l.unwrap_or(1.0)),
        (_, _, Some(_)) => Err(Error::invalid("--lambda applies to the GIRG model only")),
        (_, c, None) => Ok(c.unwrap_or(0.0)),
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Coordinates file: `id a b` per vertex.
    #[arg(long)]
    out: PathBuf,
    /// Edge list file.
    #[arg(long)]
    edges_out: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Coordinates file written by `gen`.
    #[arg(long)]
    coords: PathBuf,
    /// Edge list file written by `gen`.
    #[arg(long)]
    edges: PathBuf,
    /// Comma-separated analyses.
    #[arg(
        long,
        default_value = "degeneracy,colouring,clique-extend,inner-degrees"
    )]
    analyses: String,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the greedy colouring as `id colour` lines.
    #[arg(long)]
    colouring_out: Option<PathBuf>,
    /// Write the degeneracy ordering, one id per line.
    #[arg(long)]
    ordering_out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Flat `key = value` config file; flags below override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    model: Option<Model>,
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<f64>,
    #[arg(long = "C", allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    /// Base seed for derived replicate seeds.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    reps: Option<u64>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    analyses: Option<String>,
    /// Record per-stage wall time (output is then no longer reproducible).
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    csv: PathBuf,
}

enum Failure {
    Invalid(Error),
    Invariant(Vec<String>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Analyze(a) => analyze(a),
        Command::Sweep(a) => sweep(a),
        Command::Validate(a) => validate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invariant(violations)) => {
            for v in &violations {
                eprintln!("invariant violation: {v}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn gen(args: GenArgs) -> Result<(), Failure> {
    let m = &args.model;
    let instance = Instance::sample(m.model, m.n, m.alpha, m.constant()?, m.seed)?;
    let g = instance.build_graph();
    match &instance {
        Instance::Hrg(p) => p.write_coordinates(&args.out)?,
        Instance::Girg(p) => p.write_coordinates(&args.out)?,
    }
    g.write_edge_list(&args.edges_out)?;
    eprintln!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    Ok(())
}

fn load_instance(m: &ModelArgs, coords: &Path) -> Result<Instance, Error> {
    let constant = m.constant()?;
    Ok(match m.model {
        Model::Hrg | Model::HrgPoisson => Instance::Hrg(HrgPointSet::read_coordinates(
            coords,
            HrgParams::new(m.n, m.alpha, constant)?,
            m.seed,
        )?),
        Model::Girg => Instance::Girg(GirgPointSet::read_coordinates(
            coords,
            GirgParams::from_alpha(m.n, m.alpha, constant)?,
            m.seed,
        )?),
    })
}

fn write_lines<I: IntoIterator<Item = String>>(path: &Path, lines: I) -> Result<(), Error> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    for line in lines {
        writeln!(out, "{line}").map_err(|e| Error::io(path, e))?;
    }
    out.flush().map_err(|e| Error::io(path, e))
}

fn analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    let m = &args.model;
    let analyses = Analysis::parse_set(&args.analyses)?;
    let instance = load_instance(m, &args.coords)?;
    let g = Graph::read_edge_list(&args.edges)?;
    if g.vertex_count() != instance.len() {
        return Err(Error::invalid(format!(
            "edge list has {} vertices, coordinates have {}",
            g.vertex_count(),
            instance.len()
        ))
        .into());
    }
    let record = analyze_instance(
        m.model,
        m.n,
        m.constant()?,
        &instance,
        &g,
        &analyses,
        CliqueBudget::default(),
    )?;

    let mut violations = record.check_chain();
    if args.colouring_out.is_some() || args.ordering_out.is_some() {
        let result = degeneracy(&g);
        let colours = greedy_colour(&g, &result);
        let conflicts = validate_colouring(&g, &colours)?;
        violations.extend(
            conflicts
                .iter()
                .map(|(u, v)| format!("colouring conflict on edge {u}-{v}")),
        );
        if let Some(path) = &args.colouring_out {
            write_lines(
                path,
                colours.iter().enumerate().map(|(v, c)| format!("{v} {c}")),
            )?;
        }
        if let Some(path) = &args.ordering_out {
            write_lines(path, result.ordering.iter().map(u32::to_string))?;
        }
    }

    match &args.out {
        Some(path) => write_csv(std::slice::from_ref(&record), path)?,
        None => write_csv_to(std::slice::from_ref(&record), io::stdout().lock())
            .map_err(|e| Error::io(Path::new("<stdout>"), e))?,
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Invariant(violations))
    }
}

fn sweep_config(args: &SweepArgs) -> Result<SweepConfig, Error> {
    let mut config = match &args.config {
        Some(path) => SweepConfig::from_file(path)?,
        None => {
            let model = args
                .model
                .ok_or_else(|| Error::invalid("give --config or --model"))?;
            SweepConfig::new(
                model,
                Vec::new(),
                Vec::new(),
                Seeds::Replicates { base: 0, count: 1 },
            )
        }
    };
    if let Some(model) = args.model {
        config.model = model;
    }
    if !args.n.is_empty() {
        config.n_values = args.n.clone();
    }
    if !args.alpha.is_empty() {
        config.alpha_values = args.alpha.clone();
    }
    if args.c.is_some() || args.lambda.is_some() {
        config.model_constant = model_constant(config.model, args.c, args.lambda)?;
    }
    if args.seed.is_some() || args.reps.is_some() {
        let (base, count) = match config.seeds {
            Seeds::Replicates { base, count } => (base, count),
            Seeds::List(_) => (0, 1),
        };
        config.seeds = Seeds::Replicates {
            base: args.seed.unwrap_or(base),
            count: args.reps.unwrap_or(count),
        };
    }
    if let Some(t) = args.threads {
        config.thread_count = t;
    }
    if let Some(a) = &args.analyses {
        config.analyses = Analysis::parse_set(a)?;
    }
    if args.timings {
        config.record_timings = true;
    }
    if let Some(out) = &args.out {
        config.output = Some(out.clone());
    }
    config.validate()?;
    Ok(config)
}

fn row_violations(records: &[ExperimentRecord]) -> Vec<String> {
    records
        .iter()
        .enumerate()
        .flat_map(|(i, r)| {
            r.check_chain().into_iter().map(move |v| {
                format!(
                    "row {} ({} n={} alpha={} seed={}): {v}",
                    i + 1,
                    r.model,
                    r.n,
                    r.alpha,
                    r.seed
                )
            })
        })
        .collect()
}

fn sweep(args: SweepArgs) -> Result<(), Failure> {
    let config = sweep_config(&args)?;
    let records = run_sweep(&config)?;
    let violations = row_violations(&records);
    if !violations.is_empty() {
        return Err(Failure::Invariant(violations));
    }
    match &config.output {
        Some(path) => write_csv(&records, path)?,
        None => write_csv_to(&records, io::stdout().lock())
            .map_err(|e| Error::io(Path::new("<stdout>"), e))?,
    }
    let failed = records.iter().filter(|r| r.error.is_some()).count();
    eprintln!("{} records, {failed} with errors", records.len());
    Ok(())
}

fn validate(args: ValidateArgs) -> Result<(), Failure> {
    let records = read_csv(&args.csv)?;
    let mut violations = row_violations(&records);
    for (i, r) in records.iter().enumerate() {
        let expected = match theory_bounds(r.alpha) {
            Ok(b) => b,
            Err(e) => {
                violations.push(format!("row {}: {e}", i + 1));
                continue;
            }
        };
        let columns = [
            (r.kappa_lower_const, expected.kappa_lower_const),
            (r.kappa_upper_const, expected.kappa_upper_const),
            (r.clique_upper_const, expected.clique_upper_const),
            (r.girg_ratio_const, expected.girg_ratio_const),
        ];
        if columns
            .iter()
            .any(|(got, want)| (got - want).abs() > 1e-12 * want.abs())
        {
            violations.push(format!(
                "row {}: theory columns disagree with alpha {}",
                i + 1,
                r.alpha
            ));
        }
    }
    if violations.is_empty() {
        println!("{} rows ok", records.len());
        Ok(())
    } else {
        Err(Failure::Invariant(violations))
    }
}
