//! Parameter sweeps over sampled instances, with CSV persistence.

mod compare;
mod config;
mod csv;
mod record;
mod sweep;

pub use compare::{compare_models, median, ModelGap};
pub use config::{Analysis, Model, Seeds, SweepConfig};
pub use csv::{read_csv, write_csv, write_csv_to, CSV_HEADER, CSV_VERSION_LINE};
pub use record::ExperimentRecord;
pub use sweep::{analyze_instance, run_sweep, Instance};
