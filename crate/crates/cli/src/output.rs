//! Deterministic CSV/JSON rendering: fixed 12-significant-digit numbers,
//! fixed column order, `#`-prefixed metadata lines, no timestamps.

use serde_json::{json, Value};

/// One table cell.
#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Flag(bool),
    Text(String),
}

/// A rendered command result: parameter echo plus a rectangular table.
#[derive(Debug, Clone)]
pub struct Table {
    pub command: &'static str,
    pub params: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

/// 12 significant digits, scientific, with -0 normalized away.
pub fn fmt_sig(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

impl Table {
    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        let echo: Vec<String> =
            self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("# qstat {} {}\n", self.command, echo.join(" ")));
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Num(x) => fmt_sig(*x),
                    Cell::Flag(b) => String::from(if *b { "1" } else { "0" }),
                    Cell::Text(s) => s.clone(),
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn render_json(&self) -> String {
        let params: serde_json::Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|c| match c {
                            Cell::Num(x) => {
                                let x = if *x == 0.0 { 0.0 } else { *x };
                                json!(x)
                            }
                            Cell::Flag(b) => Value::Bool(*b),
                            Cell::Text(s) => Value::String(s.clone()),
                        })
                        .collect(),
                )
            })
            .collect();
        let doc = json!({
            "command": self.command,
            "params": params,
            "columns": self.columns,
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("static JSON shape");
        s.push('\n');
        s
    }
}

/// Uniform grid inclusive of both endpoints.
pub fn linspace(lo: f64, hi: f64, points: u32) -> Vec<f64> {
    if points == 1 {
        return vec![lo];
    }
    let n = points as usize;
    let step = (hi - lo) / (points - 1) as f64;
    let mut grid: Vec<f64> = (0..n).map(|i| lo + step * i as f64).collect();
    grid[n - 1] = hi;
    grid
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fmt_sig_has_twelve_significant_digits() {
        assert_eq!(fmt_sig(1.5), "1.50000000000e0");
        assert_eq!(fmt_sig(0.0), "0.00000000000e0");
        assert_eq!(fmt_sig(-0.0), "0.00000000000e0");
        assert_eq!(fmt_sig(0.625884195543925), "6.25884195544e-1");
    }

    #[test]
    fn linspace_is_inclusive() {
        let g = linspace(-3.0, 3.0, 7);
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], -3.0);
        assert_eq!(g[6], 3.0);
        assert_eq!(g[3], 0.0);
    }
}
