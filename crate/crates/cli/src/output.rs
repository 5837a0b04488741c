//! CSV and SVG rendering.

use std::fmt::Write;

use tpbessel::solvers::SpectrumResult;
use tpbessel::{Matrix, Rational};

use crate::experiments::{ComparisonRow, InverseComparison, Sweep};

pub fn spectrum_csv(result: &SpectrumResult) -> String {
    let mut out = String::from("index,value,achieved_bits\n");
    for (k, v) in result.values.iter().enumerate() {
        writeln!(out, "{},{:e},{}", k + 1, v, result.achieved_precision_bits).unwrap();
    }
    out
}

pub fn comparison_csv(rows: &[ComparisonRow]) -> String {
    let mut out = String::from("i,reference,relerr_hra,relerr_naive\n");
    for r in rows {
        writeln!(
            out,
            "{},{:e},{:e},{:e}",
            r.i, r.reference, r.relerr_hra, r.relerr_naive
        )
        .unwrap();
    }
    out
}

pub fn inverse_csv(c: &InverseComparison) -> String {
    format!(
        "stat,relerr_hra,relerr_naive\nmean,{:e},{:e}\nmax,{:e},{:e}\n",
        c.hra.mean, c.naive.mean, c.hra.max, c.naive.max
    )
}

pub fn sweep_csv(s: &Sweep) -> String {
    let mut out = format!("n,{}\n", s.id.columns().join(","));
    for (n, v) in &s.rows {
        writeln!(out, "{n},{:e},{:e},{:e},{:e}", v[0], v[1], v[2], v[3]).unwrap();
    }
    out
}

pub fn rational_csv(m: &Matrix<Rational>) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn solution_csv(x: &[Rational]) -> String {
    let mut out = String::from("index,exact,value\n");
    for (k, v) in x.iter().enumerate() {
        let approx = v
            .to_f64()
            .map(|f| format!("{f:e}"))
            .unwrap_or_else(|_| "out-of-range".into());
        writeln!(out, "{},{},{}", k + 1, v, approx).unwrap();
    }
    out
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const MARGIN: (f64, f64, f64, f64) = (70.0, 150.0, 30.0, 50.0); // left, right, top, bottom
const FLOOR: f64 = 1e-17;
const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e"];

/// Log-y line chart, one polyline per series. Zero errors sit on the `1e-17` floor.
pub fn sweep_svg(s: &Sweep, title: &str) -> String {
    let (ml, mr, mt, mb) = MARGIN;
    let (pw, ph) = (WIDTH - ml - mr, HEIGHT - mt - mb);
    let finite = |v: f64| {
        if v.is_finite() {
            Some(v.max(FLOOR))
        } else {
            None
        }
    };
    let logs: Vec<f64> = s
        .rows
        .iter()
        .flat_map(|(_, v)| v.iter().filter_map(|&x| finite(x)).map(f64::log10))
        .collect();
    let lo = logs
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
        .floor()
        .min(-16.0);
    let hi = logs
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
        .ceil()
        .max(lo + 1.0);
    let n_lo = s.rows.first().map_or(2, |r| r.0) as f64;
    let n_hi = (s.rows.last().map_or(3, |r| r.0) as f64).max(n_lo + 1.0);
    let x = |n: f64| ml + (n - n_lo) / (n_hi - n_lo) * pw;
    let y = |l: f64| mt + (hi - l) / (hi - lo) * ph;

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(
        svg,
        r#"<text x="{}" y="18" text-anchor="middle">{title}</text>"#,
        ml + pw / 2.0
    )
    .unwrap();
    writeln!(
        svg,
        r##"<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" fill="none" stroke="#000"/>"##
    )
    .unwrap();
    let step = ((hi - lo) / 12.0).ceil().max(1.0) as i64;
    let mut d = lo as i64;
    while d <= hi as i64 {
        let yy = y(d as f64);
        writeln!(
            svg,
            r##"<line x1="{ml}" y1="{yy:.1}" x2="{:.1}" y2="{yy:.1}" stroke="#ddd"/>"##,
            ml + pw
        )
        .unwrap();
        writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end">1e{d}</text>"#,
            ml - 6.0,
            yy + 4.0
        )
        .unwrap();
        d += step;
    }
    for (n, _) in &s.rows {
        let xx = x(*n as f64);
        writeln!(
            svg,
            r#"<text x="{xx:.1}" y="{:.1}" text-anchor="middle">{n}</text>"#,
            mt + ph + 18.0
        )
        .unwrap();
    }
    writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">n</text>"#,
        ml + pw / 2.0,
        HEIGHT - 8.0
    )
    .unwrap();
    for (k, name) in s.id.columns().iter().enumerate() {
        let pts: Vec<String> = s
            .rows
            .iter()
            .filter_map(|(n, v)| {
                finite(v[k]).map(|e| format!("{:.1},{:.1}", x(*n as f64), y(e.log10())))
            })
            .collect();
        writeln!(
            svg,
            r#"<polyline fill="none" stroke="{}" stroke-width="2" points="{}"/>"#,
            COLORS[k],
            pts.join(" ")
        )
        .unwrap();
        let ly = mt + 20.0 + 20.0 * k as f64;
        let lx = ml + pw + 15.0;
        writeln!(
            svg,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{}" stroke-width="2"/>"#,
            lx + 25.0,
            COLORS[k]
        )
        .unwrap();
        writeln!(
            svg,
            r#"<text x="{}" y="{}">{name}</text>"#,
            lx + 32.0,
            ly + 4.0
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    svg
}
