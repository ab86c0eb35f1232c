use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;
use crate::solvers::SolverTrace;

/// Header of every trace CSV, in column order.
pub const CSV_HEADER: [&str; 5] = ["iter", "step_norm", "dist_to_solution", "residual", "method"];

/// One CSV row of a solver trace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub iter: usize,
    pub step_norm: f64,
    pub dist_to_solution: f64,
    pub residual: f64,
    pub method: String,
}

pub fn trace_rows<T: Scalar>(trace: &SolverTrace<T>) -> Vec<TraceRow> {
    let f = |v: T| v.to_f64().unwrap_or(f64::NAN);
    trace
        .records
        .iter()
        .map(|r| TraceRow {
            iter: r.iter,
            step_norm: f(r.step_norm),
            dist_to_solution: f(r.dist_to_solution),
            residual: f(r.residual),
            method: trace.method.label().to_string(),
        })
        .collect()
}

pub fn write_trace_csv<W: Write>(out: W, rows: &[TraceRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(CSV_HEADER)?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_order() {
        let rows = vec![TraceRow {
            iter: 0,
            step_norm: 0.0,
            dist_to_solution: 1.5,
            residual: 0.25,
            method: "cdrm".into(),
        }];
        let mut buf = Vec::new();
        write_trace_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(text.lines().nth(1).unwrap(), "0,0.0,1.5,0.25,cdrm");

        let mut buf = Vec::new();
        write_trace_csv(&mut buf, &[]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().trim(), CSV_HEADER.join(","));
    }
}
