//! CSV and JSON layouts for sweep rows and boundary reports.

use std::io::{Read, Write};

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::sweep::{round_sig12, BoundaryPoint, Grid2d, ModelFamily, ObservableRow};

/// 12 significant digits, shortest form; `NaN`/`inf` for non-finite values.
pub fn format_number(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let r = round_sig12(x);
    if r != 0.0 && (r.abs() < 1e-4 || r.abs() >= 1e15) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

fn json_number(x: f64) -> Value {
    if x.is_finite() {
        json!(round_sig12(x))
    } else {
        Value::Null
    }
}

/// Column names after the coordinate columns.
pub fn observable_columns(family: &ModelFamily) -> Vec<String> {
    let mut cols = vec![
        "energy".to_string(),
        "entropy_bits".to_string(),
        "entropy_per_site".to_string(),
    ];
    cols.extend(family.bond_classes().iter().map(|c| format!("conc_{c}")));
    cols.push("gap".into());
    cols.push("degenerate".into());
    cols
}

fn row_fields(row: &ObservableRow) -> Vec<String> {
    let mut fields: Vec<String> = row.coords.iter().map(|&c| format_number(c)).collect();
    fields.push(format_number(row.energy));
    fields.push(format_number(row.entropy_bits));
    fields.push(format_number(row.entropy_per_site));
    fields.extend(row.concurrences.iter().map(|&c| format_number(c)));
    fields.push(format_number(row.sector_gap));
    fields.push(match (&row.error, row.degenerate) {
        (Some(_), _) => "error".into(),
        (None, true) => "true".into(),
        (None, false) => "false".into(),
    });
    fields
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Malformed {
            line: 0,
            message: format!("{other:?}"),
        },
    }
}

pub fn write_rows_csv<W: Write>(
    out: W,
    family: &ModelFamily,
    coord_names: &[&str],
    rows: &[ObservableRow],
) -> Result<()> {
    let mut w = csv_writer(out);
    let mut header: Vec<String> = coord_names.iter().map(|s| s.to_string()).collect();
    header.extend(observable_columns(family));
    w.write_record(&header).map_err(csv_err)?;
    for row in rows {
        w.write_record(row_fields(row)).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn rows_to_json(family: &ModelFamily, coord_names: &[&str], rows: &[ObservableRow]) -> Value {
    let items = rows
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            for (name, &c) in coord_names.iter().zip(&row.coords) {
                obj.insert(name.to_string(), json_number(c));
            }
            obj.insert("energy".into(), json_number(row.energy));
            obj.insert("entropy_bits".into(), json_number(row.entropy_bits));
            obj.insert("entropy_per_site".into(), json_number(row.entropy_per_site));
            for (class, &c) in family.bond_classes().iter().zip(&row.concurrences) {
                obj.insert(format!("conc_{class}"), json_number(c));
            }
            obj.insert("gap".into(), json_number(row.sector_gap));
            obj.insert("degenerate".into(), json!(row.degenerate));
            if let Some(e) = &row.error {
                obj.insert("error".into(), json!(e));
            }
            Value::Object(obj)
        })
        .collect();
    Value::Array(items)
}

/// Boundary points with numbers rounded to 12 significant digits.
pub fn boundaries_to_json(points: &[BoundaryPoint]) -> Value {
    let items = points
        .iter()
        .map(|p| {
            let mut obj = Map::new();
            obj.insert("coords".into(), Value::Array(p.coords.iter().map(|&c| json_number(c)).collect()));
            obj.insert("kind".into(), serde_json::to_value(p.kind).expect("enum serializes"));
            obj.insert("axis".into(), serde_json::to_value(p.axis).expect("enum serializes"));
            obj.insert("value".into(), json_number(p.value));
            obj.insert("second_derivative".into(), json_number(p.second_derivative));
            if let Some(src) = &p.source {
                obj.insert("source".into(), json!(src));
            }
            Value::Object(obj)
        })
        .collect();
    Value::Array(items)
}

pub fn write_json<W: Write>(mut out: W, value: &Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, value)
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    out.write_all(b"\n")?;
    Ok(())
}

/// A parsed sweep CSV: the header and one numeric record per data line.
#[derive(Debug, Clone)]
pub struct SweepTable {
    pub header: Vec<String>,
    /// Non-numeric cells (the `degenerate` column) are stored as NaN.
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// Two-coordinate grid sweeps start with `jp_over_j,delta`.
    pub fn is_grid(&self) -> bool {
        self.header.len() >= 2 && self.header[0] == "jp_over_j" && self.header[1] == "delta"
    }

    pub fn series(&self, observable: &str) -> Result<(Vec<f64>, Vec<f64>)> {
        let col = self.observable_column(observable)?;
        Ok(self.rows.iter().map(|r| (r[0], r[col])).unzip())
    }

    fn observable_column(&self, observable: &str) -> Result<usize> {
        self.column(observable).ok_or_else(|| Error::Malformed {
            line: 1,
            message: format!("no '{observable}' column in header"),
        })
    }

    /// Rebuilds the row-major grid, checking that rows form a complete
    /// rectangle in grid order.
    pub fn grid(&self, observable: &str) -> Result<Grid2d<f64>> {
        let col = self.observable_column(observable)?;
        if self.rows.is_empty() {
            return Err(Error::Malformed {
                line: 1,
                message: "grid has no data rows".into(),
            });
        }
        let x0 = self.rows[0][0];
        let ys: Vec<f64> = self.rows.iter().take_while(|r| r[0] == x0).map(|r| r[1]).collect();
        let ny = ys.len();
        let mut xs = Vec::new();
        let mut values = Vec::with_capacity(self.rows.len());
        for (k, r) in self.rows.iter().enumerate() {
            let (i, j) = (k / ny, k % ny);
            if j == 0 {
                xs.push(r[0]);
            }
            if r[0] != xs[i] || r[1] != ys[j] {
                return Err(Error::Malformed {
                    line: k as u64 + 2,
                    message: format!("row ({}, {}) breaks the rectangular grid order", r[0], r[1]),
                });
            }
            values.push(r[col]);
        }
        if self.rows.len() % ny != 0 {
            return Err(Error::Malformed {
                line: self.rows.len() as u64 + 1,
                message: "last grid column is incomplete".into(),
            });
        }
        Grid2d::new(xs, ys, values)
    }
}

pub fn read_sweep_csv<R: Read>(input: R) -> Result<SweepTable> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header: Vec<String> = reader
        .headers()
        .map_err(|e| Error::Malformed {
            line: 1,
            message: e.to_string(),
        })?
        .iter()
        .map(str::to_string)
        .collect();
    if header.is_empty() || header.iter().all(|h| h.is_empty()) {
        return Err(Error::Malformed {
            line: 1,
            message: "missing header".into(),
        });
    }
    let degenerate = header.iter().position(|h| h == "degenerate");
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Malformed {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let mut values = Vec::with_capacity(record.len());
        for (k, cell) in record.iter().enumerate() {
            if Some(k) == degenerate {
                values.push(f64::NAN);
                continue;
            }
            let v: f64 = cell.trim().parse().map_err(|_| Error::Malformed {
                line,
                message: format!("column '{}': '{cell}' is not a number", header[k]),
            })?;
            values.push(v);
        }
        rows.push(values);
    }
    Ok(SweepTable { header, rows })
}
