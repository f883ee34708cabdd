//! Coordinate sidecar files: one `id a b` line per vertex.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

pub(crate) fn write<I>(path: &Path, rows: I) -> Result<()>
where
    I: IntoIterator<Item = (f64, f64)>,
{
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    let body = |out: &mut BufWriter<File>| -> std::io::Result<()> {
        for (id, (a, b)) in rows.into_iter().enumerate() {
            writeln!(out, "{id} {a:.16e} {b:.16e}")?;
        }
        out.flush()
    };
    body(&mut out).map_err(|e| Error::io(path, e))
}

pub(crate) fn read(path: &Path) -> Result<Vec<(f64, f64)>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut rows = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |message: String| Error::Parse {
            path: path.to_path_buf(),
            line: i + 1,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(bad(format!("expected `id a b`, got {line:?}")));
        }
        let id: usize = fields[0].parse().map_err(|_| bad(line.clone()))?;
        if id != rows.len() {
            return Err(bad(format!("expected id {}, got {id}", rows.len())));
        }
        let a: f64 = fields[1].parse().map_err(|_| bad(line.clone()))?;
        let b: f64 = fields[2].parse().map_err(|_| bad(line.clone()))?;
        rows.push((a, b));
    }
    Ok(rows)
}
