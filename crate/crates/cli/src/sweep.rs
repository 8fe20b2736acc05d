//! Data behind the concurrence and squeezing figures.
//!
//! Curves run over `s ∈ [0, 1/√3]`; surfaces over the `(r, t)` grid on
//! `[0, 1]²` restricted to `r² + t² ≤ 1`, with `s = sqrt((1 - r² - t²)/3)`.
//! Points are evaluated directly from the parameters, without
//! canonicalization.

use std::f64::consts::FRAC_PI_2;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;
use triboson_core::{concurrence_closed, xi_closed, xi_special, ParamPoint, SliceKind};

use crate::CliError;

pub const DEFAULT_CURVE_RESOLUTION: usize = 401;
pub const DEFAULT_SURFACE_RESOLUTION: usize = 201;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
}

impl FigureId {
    pub fn is_curve(self) -> bool {
        matches!(self, FigureId::Fig1 | FigureId::Fig4)
    }

    pub fn default_resolution(self) -> usize {
        if self.is_curve() {
            DEFAULT_CURVE_RESOLUTION
        } else {
            DEFAULT_SURFACE_RESOLUTION
        }
    }

    fn phi(self) -> f64 {
        match self {
            FigureId::Fig3 | FigureId::Fig6 => FRAC_PI_2,
            _ => 0.0,
        }
    }

    pub fn columns(self) -> &'static [&'static str] {
        match self {
            FigureId::Fig1 => &["s", "C_r0", "C_t0"],
            FigureId::Fig2 | FigureId::Fig3 => &["r", "t", "C"],
            FigureId::Fig4 => &["s", "xi_r0", "xi_t0"],
            FigureId::Fig5 | FigureId::Fig6 => &["r", "t", "xi", "degenerate"],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Value(f64),
    Flag(bool),
}

impl Cell {
    /// 17 significant digits, which round-trips every double.
    pub fn format(&self) -> String {
        match self {
            Cell::Value(v) => format!("{v:.16e}"),
            Cell::Flag(f) => u8::from(*f).to_string(),
        }
    }

    pub fn value(&self) -> f64 {
        match *self {
            Cell::Value(v) => v,
            Cell::Flag(f) => f64::from(u8::from(f)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepMeta {
    pub figure: FigureId,
    pub resolution: usize,
    pub phi: f64,
    pub columns: Vec<&'static str>,
    pub rows: usize,
    pub degenerate_points: usize,
    pub number_format: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub meta: SweepMeta,
    pub rows: Vec<Vec<Cell>>,
}

/// `n` uniform points on `[0, max]` with both endpoints exact.
fn uniform(n: usize, max: f64) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                max
            } else {
                max * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn curve_rows(figure: FigureId, n: usize) -> Result<Vec<Vec<Cell>>, CliError> {
    let s_max = 1.0 / 3f64.sqrt();
    uniform(n, s_max)
        .into_par_iter()
        .map(|s| {
            let rest = (1.0 - 3.0 * s * s).max(0.0).sqrt();
            let (y0, y1) = match figure {
                FigureId::Fig1 => (
                    concurrence_closed(&ParamPoint::new(0.0, s, rest, 0.0))?,
                    concurrence_closed(&ParamPoint::new(rest, s, 0.0, 0.0))?,
                ),
                _ => (
                    xi_special(SliceKind::REqualsZero, s)?,
                    xi_special(SliceKind::TEqualsZero, s)?,
                ),
            };
            Ok(vec![Cell::Value(s), Cell::Value(y0), Cell::Value(y1)])
        })
        .collect()
}

fn surface_rows(figure: FigureId, n: usize) -> Result<Vec<Vec<Cell>>, CliError> {
    let grid = uniform(n, 1.0);
    let phi = figure.phi();
    let points: Vec<(f64, f64)> = grid
        .iter()
        .flat_map(|&r| grid.iter().map(move |&t| (r, t)))
        .filter(|(r, t)| r * r + t * t <= 1.0 + 1e-12)
        .collect();
    points
        .into_par_iter()
        .map(|(r, t)| {
            let p = ParamPoint::with_free_s(r, t, phi);
            Ok(match figure {
                FigureId::Fig2 | FigureId::Fig3 => {
                    vec![
                        Cell::Value(r),
                        Cell::Value(t),
                        Cell::Value(concurrence_closed(&p)?),
                    ]
                }
                _ => {
                    let res = xi_closed(&p)?;
                    vec![
                        Cell::Value(r),
                        Cell::Value(t),
                        Cell::Value(res.xi),
                        Cell::Flag(res.degenerate),
                    ]
                }
            })
        })
        .collect()
}

/// Evaluates a figure on the current rayon pool; the row order depends only
/// on the grid, never on scheduling.
pub fn sweep(figure: FigureId, resolution: Option<usize>) -> Result<SweepTable, CliError> {
    let n = resolution.unwrap_or_else(|| figure.default_resolution());
    if n < 2 {
        return Err(CliError::Input(format!(
            "resolution must be at least 2, got {n}"
        )));
    }
    let rows = if figure.is_curve() {
        curve_rows(figure, n)?
    } else {
        surface_rows(figure, n)?
    };
    let degenerate_points = rows
        .iter()
        .filter(|row| row.contains(&Cell::Flag(true)))
        .count();
    Ok(SweepTable {
        meta: SweepMeta {
            figure,
            resolution: n,
            phi: figure.phi(),
            columns: figure.columns().to_vec(),
            rows: rows.len(),
            degenerate_points,
            number_format: "{:.16e}",
            version: env!("CARGO_PKG_VERSION"),
        },
        rows,
    })
}

/// Header plus one line per row, comma separated, LF terminated.
pub fn write_csv<W: Write>(table: &SweepTable, out: W) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let io = |e: csv::Error| CliError::Io(std::io::Error::other(e));
    w.write_record(&table.meta.columns).map_err(io)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::format)).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}
