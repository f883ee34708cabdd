use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use super::config::Model;
use super::record::ExperimentRecord;
use crate::error::{Error, Result};

/// First line of every sweep CSV. Bumped whenever the columns change.
pub const CSV_VERSION_LINE: &str = "# hrglab-sweep v1";

pub const CSV_HEADER: &str = "model,n,alpha,c_or_lambda,seed,vertices,edges,sigma,kappa,\
max_inner_degree,omega_lb,omega_exact,colours_greedy,separator_anchor,separator_s0,\
separator_s1,separator_s2,separator_cross_edges,sample_ms,edges_ms,analysis_ms,\
kappa_lower_const,kappa_upper_const,clique_upper_const,girg_ratio_const,error";

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn opt_float(x: Option<f64>) -> String {
    x.map(float).unwrap_or_default()
}

/// Error messages are free text; commas and line breaks would break the row.
fn sanitize(message: &str) -> String {
    message
        .chars()
        .map(|c| match c {
            ',' => ';',
            '\n' | '\r' => ' ',
            c => c,
        })
        .collect()
}

fn row(r: &ExperimentRecord) -> String {
    let fields = [
        r.model.tag().to_string(),
        r.n.to_string(),
        float(r.alpha),
        float(r.c_or_lambda),
        r.seed.to_string(),
        r.vertices.to_string(),
        r.edges.to_string(),
        r.sigma.to_string(),
        opt(r.kappa),
        opt(r.max_inner_degree),
        r.omega_lb.to_string(),
        opt(r.omega_exact),
        opt(r.colours_greedy),
        opt(r.separator_anchor),
        opt(r.separator_s0),
        opt(r.separator_s1),
        opt(r.separator_s2),
        opt(r.separator_cross_edges),
        opt_float(r.sample_ms),
        opt_float(r.edges_ms),
        opt_float(r.analysis_ms),
        float(r.kappa_lower_const),
        float(r.kappa_upper_const),
        float(r.clique_upper_const),
        float(r.girg_ratio_const),
        r.error.as_deref().map(sanitize).unwrap_or_default(),
    ];
    fields.join(",")
}

/// Serialises records to any writer.
pub fn write_csv_to<W: Write>(records: &[ExperimentRecord], mut out: W) -> std::io::Result<()> {
    let mut text = String::new();
    writeln!(text, "{CSV_VERSION_LINE}").unwrap();
    writeln!(text, "{CSV_HEADER}").unwrap();
    for r in records {
        writeln!(text, "{}", row(r)).unwrap();
    }
    out.write_all(text.as_bytes())
}

pub fn write_csv(records: &[ExperimentRecord], path: &Path) -> Result<()> {
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv_to(records, std::io::BufWriter::new(file)).map_err(|e| Error::io(path, e))
}

pub fn read_csv(path: &Path) -> Result<Vec<ExperimentRecord>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let parse_error = |line: usize, message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, l)) if l == CSV_VERSION_LINE => {}
        _ => return Err(parse_error(1, format!("expected {CSV_VERSION_LINE:?}"))),
    }
    match lines.next() {
        Some((_, l)) if l == CSV_HEADER => {}
        _ => return Err(parse_error(2, "header does not match the schema".into())),
    }
    let mut records = Vec::new();
    for (i, line) in lines {
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 26 {
            return Err(parse_error(
                lineno,
                format!("expected 26 fields, found {}", fields.len()),
            ));
        }
        records.push(parse_row(&fields).map_err(|m| parse_error(lineno, m))?);
    }
    Ok(records)
}

fn parse_row(f: &[&str]) -> std::result::Result<ExperimentRecord, String> {
    fn req<T: std::str::FromStr>(s: &str, name: &str) -> std::result::Result<T, String> {
        s.parse().map_err(|_| format!("bad {name} {s:?}"))
    }
    fn opt<T: std::str::FromStr>(s: &str, name: &str) -> std::result::Result<Option<T>, String> {
        if s.is_empty() {
            Ok(None)
        } else {
            req(s, name).map(Some)
        }
    }
    Ok(ExperimentRecord {
        model: f[0].parse::<Model>().map_err(|e| e.to_string())?,
        n: req(f[1], "n")?,
        alpha: req(f[2], "alpha")?,
        c_or_lambda: req(f[3], "c_or_lambda")?,
        seed: req(f[4], "seed")?,
        vertices: req(f[5], "vertices")?,
        edges: req(f[6], "edges")?,
        sigma: req(f[7], "sigma")?,
        kappa: opt(f[8], "kappa")?,
        max_inner_degree: opt(f[9], "max_inner_degree")?,
        omega_lb: req(f[10], "omega_lb")?,
        omega_exact: opt(f[11], "omega_exact")?,
        colours_greedy: opt(f[12], "colours_greedy")?,
        separator_anchor: opt(f[13], "separator_anchor")?,
        separator_s0: opt(f[14], "separator_s0")?,
        separator_s1: opt(f[15], "separator_s1")?,
        separator_s2: opt(f[16], "separator_s2")?,
        separator_cross_edges: opt(f[17], "separator_cross_edges")?,
        sample_ms: opt(f[18], "sample_ms")?,
        edges_ms: opt(f[19], "edges_ms")?,
        analysis_ms: opt(f[20], "analysis_ms")?,
        kappa_lower_const: req(f[21], "kappa_lower_const")?,
        kappa_upper_const: req(f[22], "kappa_upper_const")?,
        clique_upper_const: req(f[23], "clique_upper_const")?,
        girg_ratio_const: req(f[24], "girg_ratio_const")?,
        error: (!f[25].is_empty()).then(|| f[25].to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_has_one_name_per_field() {
        assert_eq!(CSV_HEADER.split(',').count(), 26);
    }

    #[test]
    fn empty_list_is_header_only() {
        let mut buf = Vec::new();
        write_csv_to(&[], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            format!("{CSV_VERSION_LINE}\n{CSV_HEADER}\n")
        );
    }

    #[test]
    fn errors_stay_in_one_field() {
        assert_eq!(sanitize("a,b\nc"), "a;b c");
    }
}
